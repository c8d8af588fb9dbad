//! Exact certificate that a graph has exactly three distinct eigenvalues.
//!
//! A connected graph has spectrum `{θ₀, θ₁, θ₂}` iff
//! `(A − θ₁I)(A − θ₂I) = ααᵀ` with `α` a positive eigenvector for `θ₀`.
//! The diagonal gives `α_v² = d_v + θ₁θ₂`; every entry of the identity is
//! then checked with [`SurdSum`] arithmetic.

use num_rational::Ratio;
use num_traits::Signed;
use serde::Serialize;

use super::spectrum::{distinct_spectrum, SpectrumOutcome};
use super::Graph;
use crate::scalar::Scalar;
use crate::surd::{AlgebraicEigenvalue, SurdSum};

const MAX_FAILURES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphCertificate {
    pub n: usize,
    pub edges_hash: String,
    pub eigenvalues: Vec<String>,
    pub alpha: Vec<String>,
    pub ok: bool,
    pub failures: Vec<String>,
}

struct Failures(Vec<String>, usize);

impl Failures {
    fn push(&mut self, msg: String) {
        if self.0.len() < MAX_FAILURES {
            self.0.push(msg);
        }
        self.1 += 1;
    }

    fn finish(mut self) -> Vec<String> {
        if self.1 > self.0.len() {
            let more = self.1 - self.0.len();
            self.0.push(format!("... and {more} more"));
        }
        self.0
    }
}

/// `√r` for a non-negative rational `r`.
fn sqrt_ratio<T: Scalar>(r: Ratio<T>) -> SurdSum<T> {
    // √(p/q) = √(pq)/q
    let (p, q) = (*r.numer(), *r.denom());
    if p.is_zero() {
        return SurdSum::zero();
    }
    SurdSum::term(Ratio::new(T::one(), q), p * q)
}

/// Certifies `g` against `theta` (any order), or against its own computed
/// spectrum when `theta` is `None`.
pub fn certify_three_ev<T: Scalar>(g: &Graph, theta: Option<[AlgebraicEigenvalue<T>; 3]>) -> GraphCertificate {
    let n = g.vertex_count();
    let mut failures = Failures(Vec::new(), 0);
    let mut cert = GraphCertificate {
        n,
        edges_hash: g.edges_hash(),
        eigenvalues: Vec::new(),
        alpha: Vec::new(),
        ok: false,
        failures: Vec::new(),
    };

    let theta = match theta {
        Some(mut th) => {
            th.sort_by(|a, b| b.cmp(a));
            if th[0] == th[1] || th[1] == th[2] {
                failures.push("eigenvalues must be distinct".into());
            }
            th
        }
        None => match distinct_spectrum::<T>(g) {
            Ok(SpectrumOutcome::Distinct(v)) if v.len() == 3 => [v[0].0, v[1].0, v[2].0],
            Ok(SpectrumOutcome::Distinct(v)) => {
                failures.push(format!("graph has {} distinct eigenvalues", v.len()));
                cert.failures = failures.finish();
                return cert;
            }
            Ok(SpectrumOutcome::MoreThanThree) => {
                failures.push("graph has more than three distinct eigenvalues".into());
                cert.failures = failures.finish();
                return cert;
            }
            Err(e) => {
                failures.push(format!("spectrum: {e}"));
                cert.failures = failures.finish();
                return cert;
            }
        },
    };
    cert.eigenvalues = theta.iter().map(ToString::to_string).collect();

    if !g.is_connected() {
        failures.push("graph is not connected".into());
    }

    let [t0, t1, t2] = theta.map(|e| e.to_surd());
    let sum = &t1 + &t2;
    let prod = &t1 * &t2;

    let mut alpha: Vec<SurdSum<T>> = Vec::with_capacity(n);
    for v in 0..n {
        let sq = &SurdSum::from_int(T::from_usize(g.degree(v))) + &prod;
        match sq.as_rational() {
            Some(r) if r.is_positive() => alpha.push(sqrt_ratio(r)),
            Some(r) => {
                failures.push(format!("vertex {v}: alpha^2 = {r} is not positive"));
                alpha.push(SurdSum::zero());
            }
            None => {
                failures.push(format!("vertex {v}: alpha^2 = {sq} is not rational"));
                alpha.push(SurdSum::zero());
            }
        }
    }
    cert.alpha = alpha.iter().map(ToString::to_string).collect();

    for x in 0..n {
        for y in x + 1..n {
            let mut lhs = SurdSum::from_int(T::from_usize(g.common_neighbours(x, y)));
            if g.adjacent(x, y) {
                lhs = &lhs - &sum;
            }
            let rhs = &alpha[x] * &alpha[y];
            if lhs != rhs {
                failures.push(format!("pair ({x}, {y}): {lhs} != {rhs}"));
            }
        }
    }

    for v in 0..n {
        let lhs = g.neighbours(v).fold(SurdSum::zero(), |s, u| &s + &alpha[u]);
        let rhs = &t0 * &alpha[v];
        if lhs != rhs {
            failures.push(format!("vertex {v}: (A alpha)_v = {lhs} != {rhs}"));
        }
    }

    cert.failures = failures.finish();
    cert.ok = cert.failures.is_empty();
    cert
}

/// Checks `Σ m·λ³ = tr(A³)`, i.e. the spectrum accounts for every closed 3-walk.
pub fn closed_walk3_check<T: Scalar>(g: &Graph, spectrum: &[(AlgebraicEigenvalue<T>, usize)]) -> bool {
    let walks: usize = (0..g.vertex_count()).map(|v| g.closed_walks3(v)).sum();
    let total = spectrum.iter().fold(SurdSum::zero(), |s, (e, m)| {
        let x = e.to_surd();
        let cube = &(&x * &x) * &x;
        &s + &(&cube * &SurdSum::from_int(T::from_usize(*m)))
    });
    total == SurdSum::from_int(T::from_usize(walks))
}
