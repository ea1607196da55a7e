//! Fixed inputs shared by the benchmarks in `benches/`.

use conefaces::{random_configuration, PointConfiguration, Requirement, EXAMPLE_SIX_POINTS};

pub fn six_points() -> PointConfiguration {
    PointConfiguration::from_i64(&EXAMPLE_SIX_POINTS).expect("valid example")
}

/// `size` seeded points in `RP^{n-1}` that are d-independent.
pub fn independent(n: usize, size: usize, d: u32) -> PointConfiguration {
    let req = Requirement {
        glp: false,
        d_independent: Some(d),
    };
    random_configuration(n, size, 0, req).expect("sample exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(six_points().len(), 6);
        assert_eq!(independent(3, 12, 4).len(), 12);
    }
}
