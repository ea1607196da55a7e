//! d-independence through the double-point rank condition and the Hilbert
//! function of the ideal generated by `I_d(Γ)`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{vanishing_component, PointConfiguration};
use crate::linalg::{determinant, rank_mod_prime, Echelon, Matrix};
use crate::poly::{evaluation_row, form_space_dim, gradient_rows, monomial_basis, monomial_index};
use crate::rational::{primitive_integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub gamma_size: usize,
    pub condition2: bool,
    /// `(k, HF(k))` in increasing `k`.
    pub hilbert_values: Vec<(u32, usize)>,
    pub verdict: Verdict,
    /// `k* = (n−1)(d−1)+d`.
    pub stabilization_degree_used: u32,
}

/// Exact rank of integer rows, trying the modular rank first when it can
/// already certify `target`.
fn certified_rank(rows: &[Vec<BigInt>], cols: usize, target: usize) -> usize {
    if rank_mod_prime(rows, cols) == target {
        return target;
    }
    let mut e = Echelon::new(cols);
    for r in rows {
        e.insert_integer(r);
    }
    e.rank()
}

/// For every `s ∈ Γ`, the evaluation rows of `Γ \ {s}` together with the
/// gradient rows at `s` have rank `|Γ| + n − 1`.
pub fn condition2_holds(g: &PointConfiguration, d: u32) -> Result<bool> {
    let n = g.n();
    let cols = form_space_dim(n, d);
    let codim = g.len() + n - 1;
    if cols < codim {
        return Err(Error::AmbientTooSmall {
            n,
            d,
            ambient: cols,
            codim,
        });
    }
    let evals: Vec<Vec<BigInt>> = g
        .points()
        .iter()
        .map(|p| primitive_integer(&evaluation_row(d, p.coords())))
        .collect();
    Ok((0..g.len()).into_par_iter().all(|i| {
        let mut rows: Vec<Vec<BigInt>> = gradient_rows(d, g.point(i).coords())
            .iter()
            .map(|r| primitive_integer(r))
            .collect();
        rows.extend(
            evals
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| r.clone()),
        );
        certified_rank(&rows, cols, codim) == codim
    }))
}

/// `HF(k)` of `R[x]/J` where `J` is generated by `I_d(Γ)`.
pub fn hilbert_function(g: &PointConfiguration, d: u32, k: u32) -> Result<usize> {
    if k < d {
        return Err(Error::DegreeTooLow {
            required: d,
            found: k,
        });
    }
    let n = g.n();
    let cols = form_space_dim(n, k);
    let gens: Vec<Vec<BigInt>> = vanishing_component(g, d)
        .basis_vectors()
        .map(primitive_integer)
        .collect();
    let basis_d = monomial_basis(n, d);
    let mut products = Vec::with_capacity(gens.len() * form_space_dim(n, k - d));
    let mut exps = vec![0u32; n];
    for m in monomial_basis(n, k - d) {
        for q in &gens {
            let mut row = vec![BigInt::zero(); cols];
            for (x, c) in basis_d.iter().zip(q) {
                if c.is_zero() {
                    continue;
                }
                for (t, e) in exps.iter_mut().enumerate() {
                    *e = x.exponents[t] + m.exponents[t];
                }
                row[monomial_index(&exps)] = c.clone();
            }
            products.push(row);
        }
    }
    // HF(k) ≤ cols − rank_p(products) and HF(k) ≥ rank(evaluation rows) ≥
    // rank_p(evaluations); equal bounds settle the value.
    let upper = cols - rank_mod_prime(&products, cols);
    let evals: Vec<Vec<BigInt>> = g
        .points()
        .iter()
        .map(|p| primitive_integer(&evaluation_row(k, p.coords())))
        .collect();
    if rank_mod_prime(&evals, cols) == upper {
        return Ok(upper);
    }
    let mut e = Echelon::new(cols);
    for r in &products {
        e.insert_integer(r);
    }
    Ok(cols - e.rank())
}

/// Tri-state d-independence verdict.
///
/// `yes` needs condition (2) and `HF(k*) = HF(k*+1) = |Γ|`. When the two
/// values differ, further degrees up to `k*+n` are tried; a late
/// stabilization still rules independence out.
pub fn is_d_independent(g: &PointConfiguration, d: u32) -> Result<IndependenceReport> {
    if d == 0 {
        return Err(Error::DegreeTooLow {
            required: 1,
            found: 0,
        });
    }
    let n = g.n() as u32;
    let size = g.len();
    let condition2 = match condition2_holds(g, d) {
        Ok(b) => b,
        Err(Error::AmbientTooSmall { .. }) => false,
        Err(e) => return Err(e),
    };
    let k_star = (n - 1) * (d - 1) + d;
    let mut values = vec![
        (k_star, hilbert_function(g, d, k_star)?),
        (k_star + 1, hilbert_function(g, d, k_star + 1)?),
    ];
    let stable_at = |v: &[(u32, usize)]| v[v.len() - 2].1 == v[v.len() - 1].1;
    if !stable_at(&values) {
        while values.last().unwrap().0 < k_star + n && !stable_at(&values) {
            let k = values.last().unwrap().0 + 1;
            values.push((k, hilbert_function(g, d, k)?));
        }
    }
    let verdict = if !condition2 {
        Verdict::No
    } else if values[0].1 == size && values[1].1 == size {
        Verdict::Yes
    } else if stable_at(&values) {
        Verdict::No
    } else {
        Verdict::Indeterminate
    };
    Ok(IndependenceReport {
        gamma_size: size,
        condition2,
        hilbert_values: values,
        verdict,
        stabilization_degree_used: k_star,
    })
}

/// No `n` of the points lie on a common hyperplane; with at most `n` points,
/// their coordinate vectors are linearly independent.
pub fn is_general_linear_position(g: &PointConfiguration) -> bool {
    let n = g.n();
    let rows: Vec<Vec<Rational>> = g.points().iter().map(|p| p.coords().to_vec()).collect();
    if g.len() <= n {
        let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_integer(r)).collect();
        return certified_rank(&ints, n, g.len()) == g.len();
    }
    let subsets = combinations(g.len(), n);
    subsets.par_iter().all(|idx| {
        let m = Matrix::from_rows(n, idx.iter().map(|&i| rows[i].clone()).collect())
            .expect("rows have length n");
        !determinant(&m).is_zero()
    })
}

/// All `k`-subsets of `0..len` in lexicographic order.
pub(crate) fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            if len - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    go(0, len, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{snd_points, EXAMPLE_SIX_POINTS, SEVEN_POINTS_PERTURBED};

    #[test]
    fn condition2_examples() {
        assert!(condition2_holds(&snd_points(3, 3).unwrap(), 3).unwrap());
        let six = PointConfiguration::from_i64(&EXAMPLE_SIX_POINTS).unwrap();
        assert!(condition2_holds(&six, 2).unwrap());
        let big = snd_points(3, 3).unwrap();
        assert!(matches!(
            condition2_holds(&big, 2),
            Err(Error::AmbientTooSmall { .. })
        ));
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(
            hilbert_function(&snd_points(3, 3).unwrap(), 3, 7).unwrap(),
            7
        );
        let six = PointConfiguration::from_i64(&EXAMPLE_SIX_POINTS).unwrap();
        assert_eq!(hilbert_function(&six, 2, 5).unwrap(), 6);
        let one = PointConfiguration::from_i64(&[&[1, 2, 3]]).unwrap();
        assert_eq!(hilbert_function(&one, 1, 2).unwrap(), 1);
        assert!(hilbert_function(&six, 2, 1).is_err());
    }

    #[test]
    fn verdicts() {
        let r = is_d_independent(&snd_points(4, 2).unwrap(), 2).unwrap();
        assert_eq!(r.verdict, Verdict::Yes);
        assert_eq!(r.stabilization_degree_used, 5);
        let seven = PointConfiguration::from_i64(&SEVEN_POINTS_PERTURBED).unwrap();
        assert_eq!(is_d_independent(&seven, 3).unwrap().verdict, Verdict::Yes);
        // Four points on x4 = 0, three of them on a line every quadric
        // through them contains.
        let flat = PointConfiguration::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[1, 1, 0, 0],
            &[0, 0, 1, 0],
            &[1, 2, 3, 1],
            &[3, 1, 2, 5],
        ])
        .unwrap();
        assert_eq!(is_d_independent(&flat, 2).unwrap().verdict, Verdict::No);
        // Four coplanar points with no three collinear do not break independence.
        let coplanar = PointConfiguration::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[1, 1, 1, 0],
            &[1, 2, 3, 1],
            &[3, 1, 2, 5],
        ])
        .unwrap();
        assert_eq!(
            is_d_independent(&coplanar, 2).unwrap().verdict,
            Verdict::Yes
        );
    }

    #[test]
    fn general_linear_position() {
        // s1 + s6 = s2 + s5, so four of the example points share a hyperplane.
        let six = PointConfiguration::from_i64(&EXAMPLE_SIX_POINTS).unwrap();
        assert!(!is_general_linear_position(&six));
        let glp = PointConfiguration::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 1, 1, 1],
            &[1, 2, 3, 4],
        ])
        .unwrap();
        assert!(is_general_linear_position(&glp));
        let bad = PointConfiguration::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]])
            .unwrap();
        assert!(!is_general_linear_position(&bad));
        let one = PointConfiguration::from_i64(&[&[0, 5, 1]]).unwrap();
        assert!(is_general_linear_position(&one));
        let dep = PointConfiguration::from_i64(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]).unwrap();
        assert!(!is_general_linear_position(&dep));
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(6, 4).len(), 15);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
