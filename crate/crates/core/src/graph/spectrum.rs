//! Distinct eigenvalues and multiplicities of a graph with at most three
//! distinct eigenvalues, in exact arithmetic.
//!
//! The minimal polynomial comes from the first linear dependence among
//! `I, A, A², A³`. Its roots are found symbolically and multiplicities are
//! recovered from the traces `tr(Aʲ)`, so no floating point is involved.

use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use super::Graph;
use crate::scalar::Scalar;
use crate::surd::{AlgebraicEigenvalue, SurdSum};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("arithmetic overflow while forming matrix powers")]
    Overflow,
    #[error("minimal polynomial {0} has no rational root; cubic irrationals are not supported")]
    IrreducibleCubic(String),
    #[error("trace equations have no non-negative integer solution")]
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectrumOutcome<T: Scalar> {
    /// Distinct eigenvalues in decreasing order, each with its multiplicity.
    Distinct(Vec<(AlgebraicEigenvalue<T>, usize)>),
    MoreThanThree,
}

type Matrix<T> = Vec<Vec<T>>;

fn adjacency<T: Scalar>(g: &Graph) -> Matrix<T> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| if g.adjacent(u, v) { T::one() } else { T::zero() })
                .collect()
        })
        .collect()
}

fn mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>, SpectrumError> {
    let n = a.len();
    let mut out = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let term = a[i][k].checked_mul(&b[k][j]).ok_or(SpectrumError::Overflow)?;
                out[i][j] = out[i][j].checked_add(&term).ok_or(SpectrumError::Overflow)?;
            }
        }
    }
    Ok(out)
}

/// Coefficients `c` with `target = Σ cⱼ basisⱼ`, if any.
fn express<T: Scalar>(basis: &[Vec<T>], target: &[T]) -> Option<Vec<Ratio<T>>> {
    let d = basis.len();
    // reduced pivot rows: (pivot column, row of d coefficients + rhs)
    let mut pivots: Vec<(usize, Vec<Ratio<T>>)> = Vec::new();
    for k in 0..target.len() {
        let mut row: Vec<Ratio<T>> = basis.iter().map(|b| Ratio::from_integer(b[k])).collect();
        row.push(Ratio::from_integer(target[k]));
        for (col, p) in &pivots {
            let f = row[*col];
            if !f.is_zero() {
                for (x, y) in row.iter_mut().zip(p) {
                    *x -= f * y;
                }
            }
        }
        match (0..d).find(|&c| !row[c].is_zero()) {
            Some(col) => {
                let lead = row[col];
                row.iter_mut().for_each(|x| *x /= lead);
                for (_, p) in pivots.iter_mut() {
                    let f = p[col];
                    if !f.is_zero() {
                        for (x, y) in p.iter_mut().zip(&row) {
                            *x -= f * y;
                        }
                    }
                }
                pivots.push((col, row));
            }
            None if !row[d].is_zero() => return None,
            None => {}
        }
    }
    let mut sol = vec![Ratio::zero(); d];
    for (col, p) in pivots {
        sol[col] = p[d];
    }
    Some(sol)
}

fn divisors<T: Scalar>(v: T) -> Vec<T> {
    let v = v.abs();
    let mut out = Vec::new();
    let mut d = T::one();
    while d * d <= v {
        if (v % d).is_zero() {
            out.push(d);
            out.push(v / d);
        }
        d += T::one();
    }
    out
}

/// Roots of the monic `x^d + c[d-1] x^{d-1} + … + c[0]`, `d ≤ 3`.
fn roots<T: Scalar>(c: &[T]) -> Result<Vec<AlgebraicEigenvalue<T>>, SpectrumError> {
    let two = T::one() + T::one();
    match c.len() {
        1 => Ok(vec![AlgebraicEigenvalue::integer(-c[0])]),
        2 => {
            let (b, k) = (c[1], c[0]);
            let disc = b * b - (two + two) * k;
            let half = Ratio::new(T::one(), two);
            let p = Ratio::from_integer(-b) * half;
            let r = AlgebraicEigenvalue::new(p, half, disc);
            Ok(vec![r, AlgebraicEigenvalue::new(p, -half, disc)])
        }
        3 => {
            let eval = |x: T| ((x + c[2]) * x + c[1]) * x + c[0];
            let cands = if c[0].is_zero() {
                vec![T::zero()]
            } else {
                divisors(c[0])
            };
            let root = cands
                .into_iter()
                .flat_map(|d| [d, -d])
                .find(|&x| eval(x).is_zero())
                .ok_or_else(|| SpectrumError::IrreducibleCubic(format!("x^3 + {}x^2 + {}x + {}", c[2], c[1], c[0])))?;
            // synthetic division by (x - root)
            let b = c[2] + root;
            let k = c[1] + root * b;
            let mut out = roots(&[k, b])?;
            out.push(AlgebraicEigenvalue::integer(root));
            Ok(out)
        }
        _ => unreachable!("degree is at most three"),
    }
}

fn power_sum<T: Scalar>(block: &[AlgebraicEigenvalue<T>], j: u32) -> Option<T> {
    let mut total = SurdSum::zero();
    for e in block {
        let base = e.to_surd();
        let mut acc = SurdSum::from_int(T::one());
        for _ in 0..j {
            acc = &acc * &base;
        }
        total = &total + &acc;
    }
    total.as_integer()
}

pub fn distinct_spectrum<T: Scalar>(g: &Graph) -> Result<SpectrumOutcome<T>, SpectrumError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(SpectrumOutcome::Distinct(Vec::new()));
    }
    let identity: Matrix<T> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    let a = adjacency::<T>(g);
    let a2 = mul(&a, &a)?;
    let a3 = mul(&a2, &a)?;
    let powers = [identity, a, a2, a3];
    let flat: Vec<Vec<T>> = powers.iter().map(|m| m.concat()).collect();
    let traces: Vec<T> = powers
        .iter()
        .map(|m| (0..n).fold(T::zero(), |s, i| s + m[i][i]))
        .collect();

    let Some((degree, coeffs)) = (1..=3).find_map(|d| express(&flat[..d], &flat[d]).map(|c| (d, c))) else {
        return Ok(SpectrumOutcome::MoreThanThree);
    };
    // A^d = Σ cⱼ Aʲ, so the monic polynomial has coefficients -cⱼ; an integer
    // matrix has an integral minimal polynomial
    let poly: Vec<T> = coeffs
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(-c.to_integer())
            } else {
                Err(SpectrumError::Inconsistent)
            }
        })
        .collect::<Result<_, _>>()?;
    debug_assert_eq!(poly.len(), degree);

    let mut blocks: Vec<Vec<AlgebraicEigenvalue<T>>> = Vec::new();
    for r in roots(&poly)? {
        if r.is_rational() {
            blocks.push(vec![r]);
        } else if !blocks.iter().any(|b| b.contains(&r.conjugate())) {
            blocks.push(vec![r, r.conjugate()]);
        }
    }

    // Σ_b m_b · p_b(j) = tr(Aʲ) for j = 0..=3; power sums of conjugate
    // algebraic integers are rational integers, and four equations give
    // full column rank even when a pair has zero trace
    let columns: Vec<Vec<T>> = blocks
        .iter()
        .map(|b| (0..4).map(|j| power_sum(b, j)).collect::<Option<_>>())
        .collect::<Option<_>>()
        .ok_or(SpectrumError::Inconsistent)?;
    let mults = express(&columns, &traces).ok_or(SpectrumError::Inconsistent)?;
    let mut out = Vec::new();
    for (b, m) in blocks.iter().zip(&mults) {
        if !m.is_integer() || m.to_integer() < T::one() {
            return Err(SpectrumError::Inconsistent);
        }
        for e in b {
            out.push((*e, m.to_integer().to_usize()));
        }
    }
    out.sort_by_key(|x| std::cmp::Reverse(x.0));
    Ok(SpectrumOutcome::Distinct(out))
}
