//! Dense homogeneous forms.
//!
//! A form of degree `d` in `n` variables is its coefficient vector over the
//! monomials of degree `d` listed in graded-lex order (`x1^d` first). That
//! vector is directly an element of the ambient space of [`Subspace`]s of
//! `H_{n,d}`.
//!
//! [`Subspace`]: crate::linalg::Subspace

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{parse_rational, Rational};

/// `binomial(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// `dim H_{n,d}`.
pub fn form_space_dim(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(n + d as usize - 1, d as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Position of this monomial in [`monomial_basis`] of its degree.
    pub fn index(&self) -> usize {
        monomial_index(&self.exponents)
    }
}

/// All monomials of degree `d` in `n ≥ 1` variables, graded-lex order.
pub fn monomial_basis(n: usize, d: u32) -> Vec<Monomial> {
    assert!(n >= 1, "forms need at least one variable");
    let mut out = Vec::with_capacity(form_space_dim(n, d));
    let mut cur = vec![0u32; n];
    fill_monomials(0, d, &mut cur, &mut out);
    out
}

fn fill_monomials(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i + 1 == cur.len() {
        cur[i] = rem;
        out.push(Monomial {
            exponents: cur.clone(),
        });
        return;
    }
    for e in (0..=rem).rev() {
        cur[i] = e;
        fill_monomials(i + 1, rem - e, cur, out);
    }
}

pub(crate) fn monomial_index(exps: &[u32]) -> usize {
    let n = exps.len();
    let mut rem: u32 = exps.iter().sum();
    let mut idx = 0;
    for (i, &e) in exps.iter().enumerate().take(n.saturating_sub(1)) {
        let vars_left = n - i - 1;
        for t in e + 1..=rem {
            idx += form_space_dim(vars_left, rem - t);
        }
        rem -= e;
    }
    idx
}

/// Values of every degree-`d` monomial at `coords` (one evaluation row).
pub fn evaluation_row(d: u32, coords: &[Rational]) -> Vec<Rational> {
    let powers = power_table(coords, d);
    monomial_basis(coords.len(), d)
        .iter()
        .map(|m| monomial_value(&m.exponents, &powers))
        .collect()
}

/// Rows `j = 0..n` holding `∂m/∂x_j` at `coords` for every degree-`d` monomial `m`.
pub fn gradient_rows(d: u32, coords: &[Rational]) -> Vec<Vec<Rational>> {
    let n = coords.len();
    let powers = power_table(coords, d);
    let basis = monomial_basis(n, d);
    (0..n)
        .map(|j| {
            basis
                .iter()
                .map(|m| {
                    let e = m.exponents[j];
                    if e == 0 {
                        return Rational::zero();
                    }
                    let mut lowered = m.exponents.clone();
                    lowered[j] -= 1;
                    monomial_value(&lowered, &powers) * Rational::from_integer(e.into())
                })
                .collect()
        })
        .collect()
}

fn power_table(coords: &[Rational], d: u32) -> Vec<Vec<Rational>> {
    coords
        .iter()
        .map(|c| {
            let mut row = Vec::with_capacity(d as usize + 1);
            let mut acc = Rational::one();
            for _ in 0..=d {
                row.push(acc.clone());
                acc *= c;
            }
            row
        })
        .collect()
}

fn monomial_value(exps: &[u32], powers: &[Vec<Rational>]) -> Rational {
    let mut v = Rational::one();
    for (e, p) in exps.iter().zip(powers) {
        if *e > 0 {
            v *= &p[*e as usize];
        }
    }
    v
}

/// A nonzero rational vector standing for a point of real projective space.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() || coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Representative with first nonzero coordinate equal to one. Used only to
    /// compare points.
    pub fn canonical(&self) -> Vec<Rational> {
        let lead = self
            .coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero by construction")
            .clone();
        self.coords.iter().map(|c| c / &lead).collect()
    }

    pub fn projectively_equal(&self, other: &ProjectivePoint) -> bool {
        self.n() == other.n() && self.canonical() == other.canonical()
    }

    pub fn dot(&self, v: &[Rational]) -> Rational {
        self.coords.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, c: &Rational) -> Result<ProjectivePoint> {
        ProjectivePoint::new(self.coords.iter().map(|x| x * c).collect())
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        self.projectively_equal(other)
    }
}

impl Eq for ProjectivePoint {}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serde_rational_vec::serialize(&self.coords, s)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = crate::rational::serde_rational_vec::deserialize(d)?;
        ProjectivePoint::new(coords).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    n: usize,
    degree: u32,
    coeffs: Vec<Rational>,
}

impl Form {
    pub fn zero(n: usize, degree: u32) -> Self {
        Form {
            n,
            degree,
            coeffs: vec![Rational::zero(); form_space_dim(n, degree)],
        }
    }

    pub fn from_coeffs(n: usize, degree: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let dim = form_space_dim(n, degree);
        if coeffs.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: coeffs.len(),
            });
        }
        Ok(Form { n, degree, coeffs })
    }

    /// Builds a form from `(exponents, coefficient)` pairs. Repeated monomials add up.
    pub fn from_terms(n: usize, degree: u32, terms: &[(Vec<u32>, Rational)]) -> Result<Self> {
        let mut f = Form::zero(n, degree);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: exps.len(),
                });
            }
            let deg: u32 = exps.iter().sum();
            if deg != degree {
                return Err(Error::Parse(format!(
                    "monomial {exps:?} has degree {deg}, expected {degree}"
                )));
            }
            f.coeffs[monomial_index(exps)] += c;
        }
        Ok(f)
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut f = Form::zero(n, 1);
        f.coeffs[i] = Rational::one();
        f
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Form {
            n,
            degree: 0,
            coeffs: vec![c],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> {
        monomial_basis(self.n, self.degree)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
    }

    fn check_same_space(&self, other: &Form) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree as usize,
                found: other.degree as usize,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.check_same_space(other)?;
        Ok(Form {
            n: self.n,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Form {
        Form {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn multiply(&self, other: &Form) -> Result<Form> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = Form::zero(self.n, self.degree + other.degree);
        let lhs: Vec<_> = self.terms().collect();
        let rhs: Vec<_> = other.terms().collect();
        let mut exps = vec![0u32; self.n];
        for (ma, ca) in &lhs {
            for (mb, cb) in &rhs {
                for (k, e) in exps.iter_mut().enumerate() {
                    *e = ma.exponents[k] + mb.exponents[k];
                }
                out.coeffs[monomial_index(&exps)] += *ca * *cb;
            }
        }
        Ok(out)
    }

    pub fn square(&self) -> Form {
        self.multiply(self).expect("same variable count")
    }

    pub fn product(factors: &[Form]) -> Result<Form> {
        let (first, rest) = factors.split_first().ok_or(Error::OutOfRange(
            "product of an empty list of forms".into(),
        ))?;
        rest.iter()
            .try_fold(first.clone(), |acc, f| acc.multiply(f))
    }

    /// `∂f/∂x_i` as a form of degree `degree − 1`.
    pub fn partial(&self, i: usize) -> Result<Form> {
        if self.degree == 0 {
            return Err(Error::DegreeTooLow {
                required: 1,
                found: 0,
            });
        }
        if i >= self.n {
            return Err(Error::OutOfRange(format!(
                "variable index {i} for n = {}",
                self.n
            )));
        }
        let mut out = Form::zero(self.n, self.degree - 1);
        for (m, c) in self.terms() {
            let e = m.exponents[i];
            if e == 0 {
                continue;
            }
            let mut lowered = m.exponents;
            lowered[i] -= 1;
            out.coeffs[monomial_index(&lowered)] += c * Rational::from_integer(e.into());
        }
        Ok(out)
    }

    fn check_point(&self, p: &ProjectivePoint) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, p: &ProjectivePoint) -> Result<Rational> {
        self.check_point(p)?;
        Ok(self.evaluate_coords(p.coords()))
    }

    /// Evaluation at an arbitrary (possibly zero) vector of length `n`.
    pub fn evaluate_coords(&self, x: &[Rational]) -> Rational {
        debug_assert_eq!(x.len(), self.n);
        let powers = power_table(x, self.degree);
        self.terms()
            .map(|(m, c)| c * monomial_value(&m.exponents, &powers))
            .sum()
    }

    pub fn gradient_eval(&self, p: &ProjectivePoint) -> Result<Vec<Rational>> {
        self.check_point(p)?;
        (0..self.n)
            .map(|i| Ok(self.partial(i)?.evaluate_coords(p.coords())))
            .collect()
    }

    pub fn hessian_eval(&self, p: &ProjectivePoint) -> Result<Matrix> {
        self.check_point(p)?;
        if self.degree < 2 {
            return Err(Error::DegreeTooLow {
                required: 2,
                found: self.degree,
            });
        }
        let mut h = Matrix::zeros(self.n, self.n);
        for i in 0..self.n {
            let di = self.partial(i)?;
            for j in i..self.n {
                let v = di.partial(j)?.evaluate_coords(p.coords());
                h.set(j, i, v.clone());
                h.set(i, j, v);
            }
        }
        Ok(h)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Scaled so the first nonzero coefficient in graded-lex order is one.
    pub fn normalized(&self) -> Form {
        match self.leading_coefficient() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Equal up to a nonzero scalar.
    pub fn is_proportional(&self, other: &Form) -> bool {
        self.n == other.n
            && self.degree == other.degree
            && !self.is_zero()
            && !other.is_zero()
            && self.normalized() == other.normalized()
    }
}

/// The degree-one form `⟨x, v⟩`.
pub fn linear_form(v: &[Rational]) -> Result<Form> {
    if v.is_empty() || v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    Form::from_coeffs(v.len(), 1, v.to_vec())
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let vars: Vec<String> = m
                .exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            match (abs.is_one(), vars.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    n: usize,
    degree: u32,
    terms: Vec<TermJson>,
}

impl Serialize for Form {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FormJson {
            n: self.n,
            degree: self.degree,
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exponents,
                    coef: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Form {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = FormJson::deserialize(d)?;
        if raw.n == 0 {
            return Err(D::Error::custom("a form needs at least one variable"));
        }
        let mut seen = std::collections::HashSet::new();
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            if !seen.insert(t.exp.clone()) {
                return Err(D::Error::custom(format!("repeated monomial {:?}", t.exp)));
            }
            let c = parse_rational(&t.coef).map_err(D::Error::custom)?;
            terms.push((t.exp, c));
        }
        Form::from_terms(raw.n, raw.degree, &terms).map_err(D::Error::custom)
    }
}
