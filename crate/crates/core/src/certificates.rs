//! Forms `p = Σ Q_i² + ε·R` vanishing doubly on `Γ`, with exact evidence that
//! `p` is not a sum of squares and numeric evidence that it is nonnegative.
//!
//! A sum of squares vanishing on `Γ` is a sum of squares of forms in `I_d(Γ)`
//! and so lies in `I²_{2d}(Γ)`. If `p` is singular on `Γ` but outside
//! `I²_{2d}(Γ)`, it is therefore not a sum of squares. Nonnegativity is only
//! sampled, never proved.

use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{ordinary_square_within, symbolic_square_component, PointConfiguration};
use crate::linalg::{is_positive_definite, nullspace, Matrix};
use crate::poly::{Form, ProjectivePoint};
use crate::rational::{int, serde_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotSosProof {
    pub vanishes_order2: bool,
    pub in_symbolic: bool,
    pub in_ordinary_square: bool,
    /// `vanishes_order2 ∧ ¬in_ordinary_square`.
    pub not_sos: bool,
}

/// Smallest value of a form found on the unit sphere. Floating point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename = "float")]
pub struct NumericMin {
    pub value: f64,
    pub point: Vec<f64>,
    pub samples: usize,
    pub refine_steps: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub p: Form,
    pub gamma: PointConfiguration,
    #[serde(with = "serde_rational")]
    pub epsilon: Rational,
    pub not_sos_proof: NotSosProof,
    /// Roundness of `Σ Q_i²` at each point of `Γ`.
    pub roundness: Vec<bool>,
    pub numeric_min: Option<NumericMin>,
}

impl Certificate {
    pub fn attach_numeric_min(&mut self, samples: usize, refine_steps: usize, seed: u64) {
        self.numeric_min = Some(numeric_min_on_sphere(&self.p, samples, refine_steps, seed));
    }
}

fn sum_of_squares(qs: &[Form]) -> Result<Form> {
    let (first, rest) = qs
        .split_first()
        .ok_or_else(|| Error::OutOfRange("no forms to square".into()))?;
    let d = first.degree();
    let mut acc = first.square();
    for q in rest {
        if q.degree() != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: q.degree(),
            });
        }
        acc = acc.add(&q.square())?;
    }
    Ok(acc)
}

/// Assembles `p = Σ Q_i² + ε·R` and runs the exact membership tests. The
/// numeric minimum is left empty; see [`Certificate::attach_numeric_min`].
pub fn build_certificate(
    qs: &[Form],
    r: &Form,
    epsilon: &Rational,
    gamma: &PointConfiguration,
) -> Result<Certificate> {
    if epsilon.is_negative() {
        return Err(Error::OutOfRange(format!(
            "epsilon = {epsilon} is negative"
        )));
    }
    let base = sum_of_squares(qs)?;
    if r.degree() != base.degree() {
        return Err(Error::DegreeMismatch {
            expected: base.degree(),
            found: r.degree(),
        });
    }
    if base.n() != gamma.n() {
        return Err(Error::DimensionMismatch {
            expected: gamma.n(),
            found: base.n(),
        });
    }
    let p = base.add(&r.scale(epsilon))?;
    let two_d = p.degree();
    let vanishes_order2 = check_double_vanishing(&p, gamma)?;
    let sym = symbolic_square_component(gamma, two_d);
    let ord = ordinary_square_within(gamma, two_d, &sym)?;
    let in_symbolic = sym.contains(p.coeffs())?;
    let in_ordinary_square = ord.contains(p.coeffs())?;
    let roundness = gamma
        .points()
        .iter()
        .map(|s| match roundness_at(&base, s) {
            Err(Error::NotDoubleZero) => Ok(false),
            other => other,
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Certificate {
        p,
        gamma: gamma.clone(),
        epsilon: epsilon.clone(),
        not_sos_proof: NotSosProof {
            vanishes_order2,
            in_symbolic,
            in_ordinary_square,
            not_sos: vanishes_order2 && !in_ordinary_square,
        },
        roundness,
        numeric_min: None,
    })
}

/// `∇p(s) = 0` at every `s ∈ Γ`.
pub fn check_double_vanishing(p: &Form, g: &PointConfiguration) -> Result<bool> {
    if p.degree() == 0 {
        return Ok(p.is_zero());
    }
    for s in g.points() {
        if p.gradient_eval(s)?.iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the Hessian of `p` at `s` is positive definite on `s^⊥`, decided
/// exactly by leading principal minors.
pub fn roundness_at(p: &Form, s: &ProjectivePoint) -> Result<bool> {
    if !p.evaluate(s)?.is_zero() || p.gradient_eval(s)?.iter().any(|x| !x.is_zero()) {
        return Err(Error::NotDoubleZero);
    }
    let h = p.hessian_eval(s)?;
    let row = Matrix::from_rows(s.n(), vec![s.coords().to_vec()])?;
    let perp = nullspace(&row);
    let b = perp.basis();
    let restricted = b.mul(&h)?.mul(&b.transpose())?;
    Ok(is_positive_definite(&restricted))
}

struct FloatForm {
    terms: Vec<(Vec<i32>, f64)>,
    n: usize,
}

impl FloatForm {
    fn new(p: &Form) -> Self {
        FloatForm {
            n: p.n(),
            terms: p
                .terms()
                .map(|(m, c)| {
                    let exps = m.exponents.iter().map(|&e| e as i32).collect();
                    (exps, c.to_f64().unwrap_or(f64::NAN))
                })
                .collect(),
        }
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c * e.iter().zip(x).map(|(&k, xi)| xi.powi(k)).product::<f64>())
            .sum()
    }

    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; self.n];
        for (e, c) in &self.terms {
            for (j, gj) in g.iter_mut().enumerate() {
                if e[j] == 0 {
                    continue;
                }
                let mut t = c * f64::from(e[j]);
                for (i, (&k, xi)) in e.iter().zip(x).enumerate() {
                    t *= xi.powi(if i == j { k - 1 } else { k });
                }
                *gj += t;
            }
        }
        g
    }
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}

/// Projected gradient descent on the sphere with step halving on failure.
fn refine(f: &FloatForm, mut x: Vec<f64>, steps: usize) -> (f64, Vec<f64>) {
    let mut val = f.value(&x);
    let mut eta = 0.1;
    for _ in 0..steps {
        let g = f.gradient(&x);
        let radial: f64 = g.iter().zip(&x).map(|(a, b)| a * b).sum();
        let mut y: Vec<f64> = x
            .iter()
            .zip(&g)
            .map(|(xi, gi)| xi - eta * (gi - radial * xi))
            .collect();
        normalize(&mut y);
        let v = f.value(&y);
        if v < val {
            x = y;
            val = v;
        } else {
            eta *= 0.5;
            if eta < 1e-16 {
                break;
            }
        }
    }
    (val, x)
}

/// Smallest value of `p` found from `samples` seeded Gaussian starting points
/// on the unit sphere, each refined for `refine_steps` steps. Independent of
/// the thread count.
pub fn numeric_min_on_sphere(
    p: &Form,
    samples: usize,
    refine_steps: usize,
    seed: u64,
) -> NumericMin {
    let f = FloatForm::new(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let starts: Vec<Vec<f64>> = (0..samples.max(1))
        .map(|_| {
            let mut x: Vec<f64> = loop {
                let x: Vec<f64> = (0..f.n).map(|_| rng.sample(StandardNormal)).collect();
                if x.iter().any(|v: &f64| *v != 0.0) {
                    break x;
                }
            };
            normalize(&mut x);
            x
        })
        .collect();
    let (_, value, point) = starts
        .into_par_iter()
        .enumerate()
        .map(|(i, x)| {
            let (v, y) = refine(&f, x, refine_steps);
            (i, v, y)
        })
        .reduce_with(|a, b| {
            if b.1 < a.1 || (b.1 == a.1 && b.0 < a.0) {
                b
            } else {
                a
            }
        })
        .expect("at least one sample");
    NumericMin {
        value,
        point,
        samples: samples.max(1),
        refine_steps,
        seed,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub samples: usize,
    pub refine_steps: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            samples: 2000,
            refine_steps: 200,
        }
    }
}

/// Result of [`epsilon_search`]: nonnegative up to sampling, not a proof.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpsilonSearch {
    #[serde(with = "serde_rational")]
    pub epsilon: Rational,
    pub exponent: i32,
    pub numeric_min: NumericMin,
}

pub const NONNEGATIVITY_TOLERANCE: f64 = -1e-9;

/// Largest `ε = 2^k`, `−20 ≤ k ≤ 5`, for which `Σ Q_i² + ε·R` has sampled
/// minimum at least `−1e−9` on the sphere.
pub fn epsilon_search(
    qs: &[Form],
    r: &Form,
    gamma: &PointConfiguration,
    seed: u64,
    options: SearchOptions,
) -> Result<EpsilonSearch> {
    let base = sum_of_squares(qs)?;
    if r.degree() != base.degree() {
        return Err(Error::DegreeMismatch {
            expected: base.degree(),
            found: r.degree(),
        });
    }
    for (i, s) in gamma.points().iter().enumerate() {
        match roundness_at(&base, s) {
            Ok(true) => {}
            Ok(false) | Err(Error::NotDoubleZero) => return Err(Error::NotRound(i)),
            Err(e) => return Err(e),
        }
    }
    for k in (-20..=5).rev() {
        let eps = if k >= 0 {
            int(1 << k)
        } else {
            Rational::new(1.into(), num_bigint::BigInt::from(1u64 << -k))
        };
        let p = base.add(&r.scale(&eps))?;
        let m = numeric_min_on_sphere(&p, options.samples, options.refine_steps, seed);
        if m.value >= NONNEGATIVITY_TOLERANCE {
            return Ok(EpsilonSearch {
                epsilon: eps,
                exponent: k,
                numeric_min: m,
            });
        }
        if r.is_zero() {
            break;
        }
    }
    Err(Error::Unattainable(
        "no epsilon in the dyadic grid passed the sampled nonnegativity check".into(),
    ))
}
