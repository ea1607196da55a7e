//! Explicit configurations and forms: the partition point sets `S̄_{n,d}`
//! and `S_{n,d}` with their factoring basis, the six-point scheme in `RP³`
//! built from a triple covering, and the seven-point scheme in `RP²`.
//!
//! Normal vectors are exact integer kernel vectors rather than unit vectors;
//! all statements made about them are invariant under rescaling.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{ordinary_square_component, vanishing_component, PointConfiguration};
use crate::independence::{is_d_independent, is_general_linear_position, Verdict};
use crate::linalg::{inverse, kernel_of_rows, span, Matrix};
use crate::poly::{
    evaluation_row, gradient_rows, linear_form, monomial_basis, Form, ProjectivePoint,
};
use crate::rational::{int, primitive_integer, serde_rational_mat, Rational};
use num_traits::Zero;

/// The six points of the worked `(4,4)` example.
pub const EXAMPLE_SIX_POINTS: [&[i64]; 6] = [
    &[0, 0, 1, 1],
    &[0, 1, 0, 1],
    &[0, 1, 1, 0],
    &[1, 0, 0, 1],
    &[1, 0, 1, 0],
    &[1, 1, 0, 0],
];

/// Seven points in `RP²` whose fourth point makes a genericity guard fail.
pub const SEVEN_POINTS_UNPERTURBED: [&[i64]; 7] = [
    &[1, 0, 0],
    &[0, 1, 0],
    &[0, 0, 1],
    &[1, 1, 0],
    &[1, 0, 1],
    &[0, 1, 1],
    &[1, 1, 1],
];

/// The same seven points with the fourth moved to `(1, −2, 2)`.
pub const SEVEN_POINTS_PERTURBED: [&[i64]; 7] = [
    &[1, 0, 0],
    &[0, 1, 0],
    &[0, 0, 1],
    &[1, -2, 2],
    &[1, 0, 1],
    &[0, 1, 1],
    &[1, 1, 1],
];

/// Zero-based triple covering of six indices: every two triples share one
/// index and every index lies in two triples.
pub const DEFAULT_TRIPLES: [[usize; 3]; 4] = [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]];

fn check_nd(n: usize, d: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("need n ≥ 2, got {n}")));
    }
    if d < 2 {
        return Err(Error::DegreeTooLow {
            required: 2,
            found: d,
        });
    }
    Ok(())
}

fn partitions(n: usize, d: u32) -> impl Iterator<Item = Vec<u32>> {
    monomial_basis(n, d).into_iter().map(|m| m.exponents)
}

fn partition_point(s: &[u32]) -> ProjectivePoint {
    ProjectivePoint::new(s.iter().map(|&x| int(x.into())).collect())
        .expect("a partition of d ≥ 1 is nonzero")
}

/// `S̄_{n,d}`: every exponent vector of degree `d`, read as a point.
pub fn snd_bar_points(n: usize, d: u32) -> Result<PointConfiguration> {
    check_nd(n, d)?;
    PointConfiguration::new(partitions(n, d).map(|s| partition_point(&s)).collect())
}

/// `S_{n,d}`: the partitions with at least two nonzero parts.
pub fn snd_points(n: usize, d: u32) -> Result<PointConfiguration> {
    check_nd(n, d)?;
    PointConfiguration::new(
        partitions(n, d)
            .filter(|s| s.iter().filter(|&&x| x > 0).count() >= 2)
            .map(|s| partition_point(&s))
            .collect(),
    )
}

/// `Π_{k<m} (d·x_i − k·M)` with `M = x_1 + … + x_n`.
fn falling_product(n: usize, d: u32, i: usize, m: u32) -> Form {
    (0..m)
        .map(|k| {
            let v: Vec<Rational> = (0..n)
                .map(|j| {
                    let dx = if j == i { i64::from(d) } else { 0 };
                    int(dx - i64::from(k))
                })
                .collect();
            linear_form(&v).expect("d·e_i − k·(1,…,1) is nonzero for k < d")
        })
        .fold(Form::constant(n, int(1)), |acc, l| {
            acc.multiply(&l).expect("same variable count")
        })
}

/// The forms `Q_i = Π_{k=0}^{d−1} (d·x_i − k·M)`, `i = 1..n`, a basis of
/// `I_d(S_{n,d})` with `Q_i(e_i) = d!`.
pub fn snd_basis(n: usize, d: u32) -> Result<Vec<Form>> {
    check_nd(n, d)?;
    Ok((0..n).map(|i| falling_product(n, d, i, d)).collect())
}

/// The form `p_s = Π_i Π_{k<s_i} (d·x_i − k·M)`, nonzero at `s` and zero at
/// every other point of `S̄_{n,d}`.
pub fn interpolant_at(s: &[u32], n: usize, d: u32) -> Result<Form> {
    if s.len() != n || s.iter().sum::<u32>() != d || d == 0 {
        return Err(Error::NotPartitionPoint(d));
    }
    Ok((0..n)
        .map(|i| falling_product(n, d, i, s[i]))
        .fold(Form::constant(n, int(1)), |acc, h| {
            acc.multiply(&h).expect("same variable count")
        }))
}

/// The single basis vector of a one-dimensional kernel, as a primitive
/// integer vector.
fn unique_kernel(cols: usize, rows: &[Vec<Rational>], what: &str) -> Result<Vec<Rational>> {
    let k = kernel_of_rows(cols, rows);
    if k.dim() != 1 {
        return Err(Error::Degenerate(format!(
            "{what}: solution space has dimension {}",
            k.dim()
        )));
    }
    let v = k.basis().row(0);
    Ok(primitive_integer(v)
        .into_iter()
        .map(Rational::from_integer)
        .collect())
}

fn normal_through(g: &PointConfiguration, idx: &[usize], what: &str) -> Result<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| g.point(i).coords().to_vec()).collect();
    unique_kernel(g.n(), &rows, what)
}

/// Rows of `U^{-1}` transposed: the vectors `u_i*` with `⟨u_i*, u_j⟩ = δ_ij`.
fn dual_basis(u: &[Vec<Rational>], what: &str) -> Result<Vec<Vec<Rational>>> {
    let n = u.len();
    let m = Matrix::from_rows(n, u.to_vec())?;
    let inv = inverse(&m).ok_or_else(|| Error::Degenerate(format!("{what} is not a basis")))?;
    Ok((0..n)
        .map(|i| (0..n).map(|r| inv.get(r, i).clone()).collect())
        .collect())
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn lin(v: &[Rational]) -> Form {
    linear_form(v).expect("normal vectors are nonzero")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixPointScheme {
    pub gamma: PointConfiguration,
    pub general_linear_position: bool,
    /// Zero-based indices into `gamma`.
    pub triples: Vec<[usize; 3]>,
    #[serde(with = "serde_rational_mat")]
    pub u: Vec<Vec<Rational>>,
    #[serde(with = "serde_rational_mat")]
    pub v: Vec<Vec<Rational>>,
    #[serde(with = "serde_rational_mat")]
    pub u_dual: Vec<Vec<Rational>>,
    #[serde(with = "serde_rational_mat")]
    pub v_dual: Vec<Vec<Rational>>,
    /// `Q_i = ⟨x,u_i⟩⟨x,v_i⟩`, leading coefficient one.
    pub q: Vec<Form>,
    /// `R = Π ⟨x,u_i⟩`, leading coefficient one.
    pub r: Form,
}

fn validate_covering(triples: &[[usize; 3]; 4]) -> Result<()> {
    let mut count = [0usize; 6];
    for t in triples {
        if t.iter().any(|&i| i >= 6) {
            return Err(Error::InvalidCovering(format!("{t:?} has an index ≥ 6")));
        }
        if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
            return Err(Error::InvalidCovering(format!("{t:?} repeats an index")));
        }
        for &i in t {
            count[i] += 1;
        }
    }
    if let Some(i) = count.iter().position(|&c| c != 2) {
        return Err(Error::InvalidCovering(format!(
            "index {i} lies in {} triples",
            count[i]
        )));
    }
    for (a, ta) in triples.iter().enumerate() {
        for tb in &triples[a + 1..] {
            let shared = ta.iter().filter(|i| tb.contains(i)).count();
            if shared != 1 {
                return Err(Error::InvalidCovering(format!(
                    "{ta:?} and {tb:?} share {shared} indices"
                )));
            }
        }
    }
    Ok(())
}

/// The scheme for six points of `RP³`. `triples` defaults to
/// [`DEFAULT_TRIPLES`].
///
/// General linear position is recorded but not required: the construction
/// only needs every triple of the covering and its complement to span a
/// hyperplane, the normals to form bases, the nonvanishing of all
/// `⟨u_i, v_j*⟩` and `⟨v_i, u_j*⟩`, and the `Q_i` to span `I_2(Γ)`. Each of
/// these is checked exactly.
pub fn six_point_scheme(
    g: &PointConfiguration,
    triples: Option<[[usize; 3]; 4]>,
) -> Result<SixPointScheme> {
    if g.n() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: g.n(),
        });
    }
    if g.len() != 6 {
        return Err(Error::OutOfRange(format!(
            "six-point scheme needs 6 points, got {}",
            g.len()
        )));
    }
    let triples = triples.unwrap_or(DEFAULT_TRIPLES);
    validate_covering(&triples)?;
    let glp = is_general_linear_position(g);
    let complement = |t: &[usize; 3]| -> Vec<usize> { (0..6).filter(|i| !t.contains(i)).collect() };
    let u = triples
        .iter()
        .map(|t| normal_through(g, t, "normal to a triple"))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::NotGeneralPosition)?;
    let v = triples
        .iter()
        .map(|t| normal_through(g, &complement(t), "normal to a complementary triple"))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::NotGeneralPosition)?;
    let u_dual = dual_basis(&u, "u")?;
    let v_dual = dual_basis(&v, "v")?;
    for i in 0..4 {
        for j in 0..4 {
            if dot(&u[i], &v_dual[j]).is_zero() || dot(&v[i], &u_dual[j]).is_zero() {
                return Err(Error::Degenerate(format!(
                    "vanishing inner product between normals {} and duals {}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let q: Vec<Form> = u
        .iter()
        .zip(&v)
        .map(|(a, b)| lin(a).multiply(&lin(b)).expect("n = 4").normalized())
        .collect();
    let i2 = vanishing_component(g, 2);
    let vecs: Vec<&[Rational]> = q.iter().map(Form::coeffs).collect();
    if i2.dim() != 4 || span(&vecs, i2.ambient_dim())? != i2 {
        return Err(Error::Degenerate(
            "the forms Q_i do not form a basis of I_2".into(),
        ));
    }
    let r = Form::product(&u.iter().map(|a| lin(a)).collect::<Vec<_>>())?.normalized();
    Ok(SixPointScheme {
        gamma: g.clone(),
        general_linear_position: glp,
        triples: triples.to_vec(),
        u,
        v,
        u_dual,
        v_dual,
        q,
        r,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Q3Variant {
    /// `Q_3 = ⟨x,u_3⟩ K_3`.
    U3,
    /// `Q_3 = ⟨x,u_1⟩ K_3`.
    U1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SevenPointScheme {
    pub gamma: PointConfiguration,
    /// Normals to the lines through `(s1,s2)`, `(s3,s4)`, `(s5,s6)`.
    #[serde(with = "serde_rational_mat")]
    pub u: Vec<Vec<Rational>>,
    #[serde(with = "serde_rational_mat")]
    pub u_dual: Vec<Vec<Rational>>,
    /// The conics `K_1, K_2, K_3`.
    pub conics: Vec<Form>,
    /// The cubic through `s1..s6` singular at `s7`.
    pub k: Form,
    pub q: Vec<Form>,
    /// `R = K·⟨x,u_1⟩⟨x,u_2⟩⟨x,u_3⟩`.
    pub r: Form,
    pub q3_variant: Q3Variant,
    pub q3_u3_is_basis: bool,
    pub q3_u1_is_basis: bool,
    pub warnings: Vec<String>,
}

/// Points (zero-based) each conic `K_i` passes through.
const CONIC_POINTS: [[usize; 5]; 3] = [[2, 3, 4, 5, 6], [0, 1, 4, 5, 6], [0, 1, 2, 3, 6]];

/// The scheme for seven 3-independent points of `RP²`.
///
/// Fails with [`Error::GenericityGuard`] listing every vanishing `K_i(u_j*)`,
/// `i ≠ j`. Vanishing values `K(u_i*)` are only reported in `warnings`; `R` is
/// instead checked directly to lie outside `I²_6(Γ)`.
pub fn seven_point_scheme(g: &PointConfiguration) -> Result<SevenPointScheme> {
    if g.n() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: g.n(),
        });
    }
    if g.len() != 7 {
        return Err(Error::OutOfRange(format!(
            "seven-point scheme needs 7 points, got {}",
            g.len()
        )));
    }
    if is_d_independent(g, 3)?.verdict != Verdict::Yes {
        return Err(Error::Degenerate(
            "configuration is not 3-independent".into(),
        ));
    }
    let u = [[0, 1], [2, 3], [4, 5]]
        .iter()
        .map(|pair| normal_through(g, pair, "line through two points"))
        .collect::<Result<Vec<_>>>()?;
    let u_dual = dual_basis(&u, "u")?;
    let conics = CONIC_POINTS
        .iter()
        .map(|idx| {
            let rows: Vec<Vec<Rational>> = idx
                .iter()
                .map(|&i| evaluation_row(2, g.point(i).coords()))
                .collect();
            let c = unique_kernel(6, &rows, "conic through five points")?;
            Ok(Form::from_coeffs(3, 2, c)?.normalized())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rows: Vec<Vec<Rational>> = (0..6)
        .map(|i| evaluation_row(3, g.point(i).coords()))
        .collect();
    rows.extend(gradient_rows(3, g.point(6).coords()));
    let k =
        Form::from_coeffs(3, 3, unique_kernel(10, &rows, "cubic singular at s7")?)?.normalized();

    let mut failures = Vec::new();
    for (i, c) in conics.iter().enumerate() {
        for (j, w) in u_dual.iter().enumerate() {
            if i != j && c.evaluate_coords(w).is_zero() {
                failures.push(format!("K{}(u{}*)", i + 1, j + 1));
            }
        }
    }
    if !failures.is_empty() {
        return Err(Error::GenericityGuard { failures });
    }
    let mut warnings: Vec<String> = u_dual
        .iter()
        .enumerate()
        .filter(|(_, w)| k.evaluate_coords(w).is_zero())
        .map(|(j, _)| format!("K(u{}*) = 0", j + 1))
        .collect();

    let i3 = vanishing_component(g, 3);
    let cubic = |ui: usize, ki: usize| -> Form {
        lin(&u[ui])
            .multiply(&conics[ki])
            .expect("n = 3")
            .normalized()
    };
    let is_basis = |qs: &[Form]| -> Result<bool> {
        let vecs: Vec<&[Rational]> = qs.iter().map(Form::coeffs).collect();
        Ok(span(&vecs, i3.ambient_dim())? == i3 && qs.len() == i3.dim())
    };
    let base = [cubic(0, 0), cubic(1, 1)];
    let with_u3 = [base[0].clone(), base[1].clone(), cubic(2, 2)];
    let with_u1 = [base[0].clone(), base[1].clone(), cubic(0, 2)];
    let q3_u3_is_basis = is_basis(&with_u3)?;
    let q3_u1_is_basis = is_basis(&with_u1)?;
    let (q, q3_variant) = if q3_u3_is_basis {
        (with_u3.to_vec(), Q3Variant::U3)
    } else if q3_u1_is_basis {
        warnings.push("⟨x,u3⟩K3 does not complete a basis of I_3; using ⟨x,u1⟩K3".into());
        (with_u1.to_vec(), Q3Variant::U1)
    } else {
        return Err(Error::Degenerate(
            "neither choice of Q3 gives a basis of I_3".into(),
        ));
    };
    let mut factors: Vec<Form> = u.iter().map(|a| lin(a)).collect();
    factors.push(k.clone());
    let r = Form::product(&factors)?.normalized();
    if ordinary_square_component(g, 6)?.contains(r.coeffs())? {
        return Err(Error::Degenerate("R lies in the ordinary square".into()));
    }
    Ok(SevenPointScheme {
        gamma: g.clone(),
        u,
        u_dual,
        conics,
        k,
        q,
        r,
        q3_variant,
        q3_u3_is_basis,
        q3_u1_is_basis,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::symbolic_square_component;
    use crate::poly::binomial;
    use crate::rational::int;

    fn lin_i(v: &[i64]) -> Form {
        linear_form(&v.iter().map(|&x| int(x)).collect::<Vec<_>>()).unwrap()
    }

    fn quad(terms: &[([u32; 3], i64)]) -> Form {
        let t: Vec<(Vec<u32>, Rational)> =
            terms.iter().map(|(e, c)| (e.to_vec(), int(*c))).collect();
        Form::from_terms(3, 2, &t).unwrap()
    }

    fn prod(fs: &[Form]) -> Form {
        Form::product(fs).unwrap()
    }

    #[test]
    fn snd_sizes() {
        for (n, d) in [(4usize, 2u32), (3, 3), (2, 2), (5, 4)] {
            assert_eq!(
                snd_points(n, d).unwrap().len(),
                binomial(n + d as usize - 1, d as usize) - n
            );
            assert_eq!(
                snd_bar_points(n, d).unwrap().len(),
                binomial(n + d as usize - 1, d as usize)
            );
        }
        let one = snd_points(2, 2).unwrap();
        assert_eq!(one.point(0), &ProjectivePoint::from_i64(&[1, 1]).unwrap());
        assert!(snd_points(1, 3).is_err());
    }

    #[test]
    fn snd_basis_properties() {
        let q = snd_basis(3, 2).unwrap();
        let expected = prod(&[lin_i(&[2, 0, 0]), lin_i(&[1, -1, -1])]);
        assert_eq!(q[0], expected);
        for n in 2..=5usize {
            for d in 2..=5u32 {
                let basis = snd_basis(n, d).unwrap();
                for (i, qi) in basis.iter().enumerate() {
                    for j in 0..n {
                        let mut e = vec![0i64; n];
                        e[j] = 1;
                        let val = qi
                            .evaluate(&ProjectivePoint::from_i64(&e).unwrap())
                            .unwrap();
                        let fact: i64 = (1..=i64::from(d)).product();
                        assert_eq!(val, if i == j { int(fact) } else { int(0) });
                    }
                }
            }
        }
    }

    #[test]
    fn snd_basis_spans_vanishing_component() {
        for (n, d) in [(3usize, 2u32), (3, 3), (4, 2), (3, 4)] {
            let g = snd_points(n, d).unwrap();
            let basis = snd_basis(n, d).unwrap();
            let vecs: Vec<&[Rational]> = basis.iter().map(Form::coeffs).collect();
            let s = span(&vecs, vecs[0].len()).unwrap();
            assert_eq!(s, vanishing_component(&g, d));
            assert_eq!(s.dim(), n);
        }
    }

    #[test]
    fn interpolants() {
        let p = interpolant_at(&[2, 0], 2, 2).unwrap();
        assert_eq!(p, prod(&[lin_i(&[2, 0]), lin_i(&[1, -1])]));
        let at = |c: &[i64]| p.evaluate(&ProjectivePoint::from_i64(c).unwrap()).unwrap();
        assert!(!at(&[2, 0]).is_zero());
        assert!(at(&[1, 1]).is_zero() && at(&[0, 2]).is_zero());
        let pts: Vec<Vec<u32>> = partitions(3, 3).collect();
        for s in &pts {
            let p = interpolant_at(s, 3, 3).unwrap();
            for t in &pts {
                let v = p.evaluate(&partition_point(t)).unwrap();
                assert_eq!(v.is_zero(), s != t);
            }
        }
        assert_eq!(
            interpolant_at(&[1, 1], 2, 3).unwrap_err(),
            Error::NotPartitionPoint(3)
        );
    }

    fn example_six() -> PointConfiguration {
        PointConfiguration::from_i64(&EXAMPLE_SIX_POINTS).unwrap()
    }

    #[test]
    fn six_point_example() {
        let s = six_point_scheme(&example_six(), None).unwrap();
        for i in 0..4 {
            let mut e = vec![0i64; 4];
            e[i] = 1;
            let mut other = vec![-1i64; 4];
            other[i] = 1;
            assert!(s.q[i].is_proportional(&prod(&[lin_i(&e), lin_i(&other)])));
        }
        let r = Form::from_terms(4, 4, &[(vec![1, 1, 1, 1], int(1))]).unwrap();
        assert_eq!(s.r, r);
        let products: Vec<Vec<Rational>> = (0..4)
            .flat_map(|i| (i..4).map(move |j| (i, j)))
            .map(|(i, j)| s.q[i].multiply(&s.q[j]).unwrap().into_coeffs())
            .collect();
        assert_eq!(span(&products, 35).unwrap().dim(), 10);
        let ord = ordinary_square_component(&example_six(), 4).unwrap();
        assert!(!ord.contains(s.r.coeffs()).unwrap());
        assert!(symbolic_square_component(&example_six(), 4)
            .contains(s.r.coeffs())
            .unwrap());
    }

    #[test]
    fn six_point_duals() {
        let s = six_point_scheme(&example_six(), None).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let v = s.q[i].evaluate_coords(&s.u_dual[j]);
                assert_eq!(v.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn six_point_rejects_bad_input() {
        let bad = [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 4]];
        assert!(matches!(
            six_point_scheme(&example_six(), Some(bad)),
            Err(Error::InvalidCovering(_))
        ));
        // The first triple spans only a plane.
        let flat = PointConfiguration::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[1, 1, 0, 0],
            &[0, 0, 1, 0],
            &[1, 2, 3, 1],
            &[3, 1, 2, 5],
        ])
        .unwrap();
        assert_eq!(
            six_point_scheme(&flat, None).unwrap_err(),
            Error::NotGeneralPosition
        );
        let alt = [[0, 1, 5], [0, 2, 3], [1, 2, 4], [3, 4, 5]];
        let glp = PointConfiguration::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 1, 1, 1],
            &[1, 2, 3, 4],
        ])
        .unwrap();
        let s = six_point_scheme(&glp, Some(alt)).unwrap();
        assert!(s.general_linear_position);
        assert!(six_point_scheme(&glp, None).is_ok());
    }

    #[test]
    fn seven_point_example() {
        let g = PointConfiguration::from_i64(&SEVEN_POINTS_PERTURBED).unwrap();
        let s = seven_point_scheme(&g).unwrap();
        assert_eq!(s.q3_variant, Q3Variant::U3);
        // The reference R has the factor ⟨x,u2⟩ = 2x1 + x2 twice, so K(u1*) = K(u3*) = 0.
        assert_eq!(s.warnings, vec!["K(u1*) = 0", "K(u3*) = 0"]);
        let reference = [
            prod(&[
                quad(&[([1, 1, 0], 3), ([1, 0, 1], -1), ([0, 1, 1], -2)]),
                lin_i(&[1, 1, -1]),
            ]),
            prod(&[lin_i(&[0, 1, -1]), lin_i(&[1, 0, -1]), lin_i(&[2, 1, 0])]),
            prod(&[
                lin_i(&[0, 0, 1]),
                quad(&[
                    ([2, 0, 0], 8),
                    ([0, 2, 0], 1),
                    ([1, 0, 1], -8),
                    ([0, 1, 1], -1),
                ]),
            ]),
        ];
        for p in &reference {
            assert!(s.q.iter().any(|q| q.is_proportional(p)), "{p} missing");
        }
        let r = prod(&[
            lin_i(&[0, 0, 1]),
            lin_i(&[2, 1, 0]),
            lin_i(&[2, 1, 0]),
            lin_i(&[1, 1, -1]),
            lin_i(&[0, 1, -1]),
            lin_i(&[1, 0, -1]),
        ]);
        assert!(s.r.is_proportional(&r));
        assert!(!ordinary_square_component(&g, 6)
            .unwrap()
            .contains(s.r.coeffs())
            .unwrap());
    }

    #[test]
    fn seven_point_guard() {
        let g = PointConfiguration::from_i64(&SEVEN_POINTS_UNPERTURBED).unwrap();
        match seven_point_scheme(&g) {
            Err(Error::GenericityGuard { failures }) => {
                assert!(failures.contains(&"K1(u3*)".to_string()), "{failures:?}")
            }
            other => panic!("expected guard failure, got {other:?}"),
        }
    }
}
