//! Degree components of the vanishing ideal of a point set, of its symbolic
//! square and of its ordinary square.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::independence::{is_d_independent, Verdict};
use crate::linalg::{kernel_of_rows, rank_mod_prime, Echelon, Subspace};
use crate::poly::{
    evaluation_row, form_space_dim, gradient_rows, monomial_basis, monomial_index, ProjectivePoint,
};
use crate::rational::{primitive_integer, Rational};

/// A nonempty set of pairwise projectively distinct points in `RP^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    n: usize,
    points: Vec<ProjectivePoint>,
}

impl PointConfiguration {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyConfiguration)?;
        let n = first.n();
        for p in &points {
            if p.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.n(),
                });
            }
        }
        let canon: Vec<_> = points.iter().map(ProjectivePoint::canonical).collect();
        for i in 0..canon.len() {
            for j in i + 1..canon.len() {
                if canon[i] == canon[j] {
                    return Err(Error::DuplicatePoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        Ok(PointConfiguration { n, points })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        Self::new(
            points
                .iter()
                .map(|c| ProjectivePoint::from_i64(c))
                .collect::<Result<_>>()?,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ProjectivePoint {
        &self.points[i]
    }

    /// The configuration without point `i`; `None` if that would empty it.
    pub fn without(&self, i: usize) -> Option<PointConfiguration> {
        if self.points.len() <= 1 {
            return None;
        }
        let mut points = self.points.clone();
        points.remove(i);
        Some(PointConfiguration { n: self.n, points })
    }

    pub fn with_point(&self, p: ProjectivePoint) -> Result<PointConfiguration> {
        let mut points = self.points.clone();
        points.push(p);
        PointConfiguration::new(points)
    }

    /// Points reordered so that position `k` holds old point `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Result<PointConfiguration> {
        if order.len() != self.points.len() {
            return Err(Error::DimensionMismatch {
                expected: self.points.len(),
                found: order.len(),
            });
        }
        PointConfiguration::new(order.iter().map(|&i| self.points[i].clone()).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    n: usize,
    points: Vec<ProjectivePoint>,
}

impl Serialize for PointConfiguration {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConfigJson {
            n: self.n,
            points: self.points.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointConfiguration {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ConfigJson::deserialize(d)?;
        let g = PointConfiguration::new(raw.points).map_err(D::Error::custom)?;
        if g.n != raw.n {
            return Err(D::Error::custom(format!(
                "declared n = {} but points have {} coordinates",
                raw.n, g.n
            )));
        }
        Ok(g)
    }
}

/// `I_d(Γ)`: forms of degree `d` vanishing at every point.
pub fn vanishing_component(g: &PointConfiguration, d: u32) -> Subspace {
    kernel_of_rows(
        form_space_dim(g.n, d),
        g.points.iter().map(|p| evaluation_row(d, p.coords())),
    )
}

/// `I^(2)_e(Γ)`: forms of degree `e` whose gradient vanishes at every point.
///
/// For `e ≥ 1` vanishing follows from the gradient conditions by Euler's
/// identity, so only gradient rows are used.
pub fn symbolic_square_component(g: &PointConfiguration, e: u32) -> Subspace {
    let cols = form_space_dim(g.n, e);
    let mut rows: Vec<Vec<Rational>> = g
        .points
        .iter()
        .flat_map(|p| gradient_rows(e, p.coords()))
        .collect();
    if e == 0 {
        rows.extend(g.points.iter().map(|p| evaluation_row(0, p.coords())));
    }
    kernel_of_rows(cols, rows)
}

/// Smallest degree `d ≥ 1` with `I_d(Γ) ≠ 0`.
pub fn alpha(g: &PointConfiguration) -> Result<u32> {
    let mut first_large = 1;
    while form_space_dim(g.n, first_large) <= g.len() {
        first_large += 1;
    }
    let cap = 2 * first_large;
    (1..=cap)
        .find(|&d| vanishing_component(g, d).dim() > 0)
        .ok_or_else(|| Error::OutOfRange(format!("no vanishing form up to degree {cap}")))
}

/// Coefficient vector of `f·g` for integer coefficient vectors of degrees `a` and `b`.
pub(crate) fn integer_product(n: usize, a: u32, f: &[BigInt], b: u32, g: &[BigInt]) -> Vec<BigInt> {
    let ma = monomial_basis(n, a);
    let mb = monomial_basis(n, b);
    let mut out = vec![BigInt::zero(); form_space_dim(n, a + b)];
    let mut exps = vec![0u32; n];
    for (x, fx) in ma.iter().zip(f) {
        if fx.is_zero() {
            continue;
        }
        for (y, gy) in mb.iter().zip(g) {
            if gy.is_zero() {
                continue;
            }
            for (k, e) in exps.iter_mut().enumerate() {
                *e = x.exponents[k] + y.exponents[k];
            }
            out[monomial_index(&exps)] += fx * gy;
        }
    }
    out
}

/// `(I²)_e(Γ)`: the span of `f·g` over bases of `I_a(Γ)` and `I_b(Γ)` for every
/// split `a + b = e` with `a, b ≥ α(Γ)`.
///
/// The span always sits inside `I^(2)_e(Γ)`; once it reaches that dimension
/// the two are equal and the remaining products are skipped.
pub fn ordinary_square_component(g: &PointConfiguration, e: u32) -> Result<Subspace> {
    let sym = symbolic_square_component(g, e);
    ordinary_square_within(g, e, &sym)
}

pub(crate) fn ordinary_square_within(
    g: &PointConfiguration,
    e: u32,
    sym: &Subspace,
) -> Result<Subspace> {
    let n = g.n;
    let cols = form_space_dim(n, e);
    let a_min = alpha(g)?;
    if 2 * a_min > e || sym.dim() == 0 {
        return Ok(Subspace::zero(cols));
    }
    // Balanced splits first: they contribute most of the span.
    let mut products: Vec<Vec<BigInt>> = Vec::new();
    for a in (a_min..=e / 2).rev() {
        let b = e - a;
        let fa: Vec<Vec<BigInt>> = vanishing_component(g, a)
            .basis_vectors()
            .map(primitive_integer)
            .collect();
        let fb: Vec<Vec<BigInt>> = if a == b {
            fa.clone()
        } else {
            vanishing_component(g, b)
                .basis_vectors()
                .map(primitive_integer)
                .collect()
        };
        for (i, f) in fa.iter().enumerate() {
            let start = if a == b { i } else { 0 };
            for h in &fb[start..] {
                products.push(integer_product(n, a, f, b, h));
            }
        }
        // A modular rank is a lower bound for the rational one.
        if rank_mod_prime(&products, cols) == sym.dim() {
            return Ok(sym.clone());
        }
    }
    let mut ech = Echelon::new(cols);
    for v in &products {
        ech.insert_integer(v);
        if ech.rank() == sym.dim() {
            return Ok(sym.clone());
        }
    }
    Ok(ech.into_subspace())
}

/// Dimensions of `I_d(Γ)`, `I²_{2d}(Γ)` and `I^(2)_{2d}(Γ)` with the
/// d-independence verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceReport {
    pub n: usize,
    pub d: u32,
    pub gamma_size: usize,
    pub dim_id: usize,
    pub dim_i2_2d: usize,
    pub dim_isym2_2d: usize,
    pub alpha: u32,
    pub d_independent: Verdict,
    pub gap: usize,
    /// `max(0, dim H_{n,2d} − n|Γ|)`, the expected dimension of `I^(2)_{2d}`.
    pub naive_isym2_count: usize,
    pub matches_naive_count: bool,
}

pub fn face_report(g: &PointConfiguration, d: u32) -> Result<FaceReport> {
    if d == 0 {
        return Err(Error::DegreeTooLow {
            required: 1,
            found: 0,
        });
    }
    let dim_id = vanishing_component(g, d).dim();
    let sym = symbolic_square_component(g, 2 * d);
    let ord = ordinary_square_within(g, 2 * d, &sym)?;
    let verdict = is_d_independent(g, d)?.verdict;
    let naive = form_space_dim(g.n, 2 * d).saturating_sub(g.n * g.len());
    debug_assert!(ord.dim() <= sym.dim());
    Ok(FaceReport {
        n: g.n,
        d,
        gamma_size: g.len(),
        dim_id,
        dim_i2_2d: ord.dim(),
        dim_isym2_2d: sym.dim(),
        alpha: alpha(g)?,
        d_independent: verdict,
        gap: sym.dim() - ord.dim(),
        naive_isym2_count: naive,
        matches_naive_count: naive == sym.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{snd_bar_points, EXAMPLE_SIX_POINTS, SEVEN_POINTS_PERTURBED};
    use crate::linalg::Matrix;
    use crate::poly::binomial;
    use crate::poly::Form;

    fn six() -> PointConfiguration {
        PointConfiguration::from_i64(&EXAMPLE_SIX_POINTS).unwrap()
    }

    #[test]
    fn configuration_validation() {
        assert_eq!(
            PointConfiguration::new(vec![]).unwrap_err(),
            Error::EmptyConfiguration
        );
        assert_eq!(
            PointConfiguration::from_i64(&[&[1, 2], &[2, 4]]).unwrap_err(),
            Error::DuplicatePoint {
                first: 0,
                second: 1
            }
        );
        assert!(matches!(
            PointConfiguration::from_i64(&[&[1, 2], &[1, 2, 3]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = six();
        let js = serde_json::to_string(&g).unwrap();
        assert!(js.starts_with(r#"{"n":4,"points":[["0","0","1","1"]"#));
        let back: PointConfiguration = serde_json::from_str(&js).unwrap();
        assert_eq!(back, g);
        assert!(
            serde_json::from_str::<PointConfiguration>(r#"{"n":3,"points":[["1","2"]]}"#).is_err()
        );
        assert!(
            serde_json::from_str::<PointConfiguration>(r#"{"n":2,"points":[["0","0"]]}"#).is_err()
        );
    }

    #[test]
    fn vanishing_examples() {
        assert_eq!(
            vanishing_component(&snd_bar_points(3, 2).unwrap(), 2).dim(),
            0
        );
        assert_eq!(vanishing_component(&six(), 2).dim(), 4);
        for n in 2..=5 {
            let g = PointConfiguration::new(vec![ProjectivePoint::from_i64(
                &(1..=n as i64).collect::<Vec<_>>(),
            )
            .unwrap()])
            .unwrap();
            assert_eq!(vanishing_component(&g, 1).dim(), n - 1);
        }
    }

    #[test]
    fn symbolic_examples() {
        assert_eq!(symbolic_square_component(&six(), 4).dim(), 11);
        for n in 2..=5usize {
            let mut c = vec![0i64; n];
            c[0] = 1;
            let g = PointConfiguration::from_i64(&[&c]).unwrap();
            assert_eq!(
                symbolic_square_component(&g, 2).dim(),
                binomial(n + 1, 2) - n
            );
        }
    }

    #[test]
    fn ordinary_square_example_six_points() {
        let g = six();
        let ord = ordinary_square_component(&g, 4).unwrap();
        assert_eq!(ord.dim(), 10);
        assert!(ord
            .is_subspace_of(&symbolic_square_component(&g, 4))
            .unwrap());
    }

    #[test]
    fn alpha_examples() {
        let one = PointConfiguration::from_i64(&[&[1, 2, 3]]).unwrap();
        assert_eq!(alpha(&one).unwrap(), 1);
        assert_eq!(alpha(&six()).unwrap(), 2);
        // Seven general points in RP^2 impose 7 > 6 conditions on conics.
        let seven = PointConfiguration::from_i64(&SEVEN_POINTS_PERTURBED).unwrap();
        assert_eq!(alpha(&seven).unwrap(), 3);
        let eval = |d| {
            let rows = seven
                .points()
                .iter()
                .map(|p| evaluation_row(d, p.coords()))
                .collect();
            crate::linalg::rank(&Matrix::from_rows(form_space_dim(3, d), rows).unwrap())
        };
        assert_eq!((eval(2), eval(3)), (6, 7));
    }

    #[test]
    fn single_split_matches_pairwise_products() {
        for g in [
            six(),
            PointConfiguration::from_i64(&SEVEN_POINTS_PERTURBED).unwrap(),
        ] {
            let d = alpha(&g).unwrap();
            let basis: Vec<Form> = vanishing_component(&g, d)
                .basis_vectors()
                .map(|v| Form::from_coeffs(g.n(), d, v.to_vec()).unwrap())
                .collect();
            let mut products = Vec::new();
            for i in 0..basis.len() {
                for j in i..basis.len() {
                    products.push(basis[i].multiply(&basis[j]).unwrap().into_coeffs());
                }
            }
            let k = basis.len();
            assert_eq!(products.len(), k * (k + 1) / 2);
            let expected = crate::linalg::span(&products, form_space_dim(g.n(), 2 * d)).unwrap();
            assert_eq!(ordinary_square_component(&g, 2 * d).unwrap(), expected);
        }
    }

    #[test]
    fn face_report_six_points() {
        let r = face_report(&six(), 2).unwrap();
        assert_eq!(
            (r.dim_id, r.dim_i2_2d, r.dim_isym2_2d, r.gap),
            (4, 10, 11, 1)
        );
        assert_eq!(r.d_independent, Verdict::Yes);
        assert!(r.matches_naive_count);
        let five = six().without(5).unwrap();
        let r = face_report(&five, 2).unwrap();
        assert_eq!((r.dim_i2_2d, r.dim_isym2_2d, r.gap), (15, 15, 0));
    }
}
