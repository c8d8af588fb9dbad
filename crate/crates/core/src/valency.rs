//! Feasible valency arrays `k_1 < ... < k_r` with `k_i = t + ωβ_i²`.

use serde::{Deserialize, Serialize};

use crate::arith::{is_squarefree, SqClass};
use crate::error::{Result, SearchError};
use crate::spectral::{check_t, SpectralParams};
use crate::toggles::Toggles;
use crate::Int;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ValencyArray {
    pub params: SpectralParams,
    pub omega: Int,
    pub betas: Vec<Int>,
}

impl ValencyArray {
    pub fn new(params: SpectralParams, omega: Int, betas: Vec<Int>) -> Result<Self> {
        Self::build(params, omega, betas, 3)
    }

    fn build(params: SpectralParams, omega: Int, betas: Vec<Int>, min_r: usize) -> Result<Self> {
        if omega < 1 || !is_squarefree(omega) {
            return Err(SearchError::Invalid(format!(
                "omega = {omega} is not a positive squarefree integer"
            )));
        }
        if betas.len() < min_r {
            return Err(SearchError::Invalid(format!(
                "need at least {min_r} valencies, got {}",
                betas.len()
            )));
        }
        if betas[0] < 1 || betas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SearchError::Invalid(format!(
                "betas {betas:?} must be positive and strictly increasing"
            )));
        }
        Ok(Self { params, omega, betas })
    }

    /// Builds the array from explicit valencies, splitting `k - t` into `ωβ²`.
    pub fn from_valencies(params: SpectralParams, ks: &[Int]) -> Result<Self> {
        Self::split(params, ks, 3)
    }

    /// Like [`from_valencies`](Self::from_valencies) but accepts one or two
    /// valencies, as found in regular and biregular graphs.
    pub fn for_graph(params: SpectralParams, ks: &[Int]) -> Result<Self> {
        Self::split(params, ks, 1)
    }

    fn split(params: SpectralParams, ks: &[Int], min_r: usize) -> Result<Self> {
        let mut omega = None;
        let mut betas = Vec::with_capacity(ks.len());
        for &k in ks {
            let c = crate::arith::squarefree_split(k - params.t)?;
            match omega {
                None => omega = Some(c.omega()),
                Some(w) if w != c.omega() => {
                    return Err(SearchError::Invalid(format!("valencies {ks:?} mix squarefree classes")))
                }
                _ => {}
            }
            betas.push(c.beta());
        }
        Self::build(params, omega.unwrap_or(1), betas, min_r)
    }

    pub fn r(&self) -> usize {
        self.betas.len()
    }

    /// Valency of class `i` (0-based).
    pub fn k(&self, i: usize) -> Int {
        self.params.t + self.omega * self.betas[i] * self.betas[i]
    }

    pub fn valencies(&self) -> Vec<Int> {
        (0..self.r()).map(|i| self.k(i)).collect()
    }

    /// `c_t(k_i, k_j) = ωβ_iβ_j`.
    pub fn c(&self, i: usize, j: usize) -> Int {
        self.omega * self.betas[i] * self.betas[j]
    }

    /// Perron entry `α_i = β_i√ω` of class `i`.
    pub fn alpha(&self, i: usize) -> SqClass<Int> {
        SqClass::new(self.omega, self.betas[i]).expect("validated on construction")
    }

    /// Closed walks of length three through a vertex of class `i`.
    pub fn tau(&self, i: usize) -> Int {
        let SpectralParams { t, s, .. } = self.params;
        (s - t + 1) * (self.k(i) - t) - (t - 1) * t
    }

    /// `k_i + k_j - c + t - 1`, the size of the joint neighbourhood bound.
    fn span(&self, i: usize, j: usize) -> Int {
        self.k(i) + self.k(j) - self.c(i, j) + self.params.t - 1
    }

    /// `(α_i - α_j)α_j = c_t(k_i, k_j) - (k_j - t)`.
    fn gap(&self, i: usize, j: usize) -> Int {
        self.c(i, j) - (self.k(j) - self.params.t)
    }
}

/// Least admissible minimum valency.
pub fn k1_min(t: Int) -> Int {
    if t >= 11 {
        t + 3
    } else if t >= 7 {
        t + 2
    } else {
        t + 1
    }
}

pub fn k_max(t: Int) -> Int {
    (t + 1) * (t + 1) + t
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValencyReport {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
    pub f: bool,
    pub g: bool,
    pub h: bool,
    pub bracket: bool,
    pub non_cone: bool,
    /// Left side of (h): `T - n k_1 - Σ_{i<r} (k_i - k_1)`.
    pub h_value: Int,
    /// Right side of (h): `k_r - k_1`.
    pub h_bound: Int,
    pub closed_walks: Vec<Int>,
}

impl ValencyReport {
    pub fn core_pass(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e && self.f && self.g && self.h
    }

    pub fn passes(&self, toggles: &Toggles) -> bool {
        self.core_pass() && (!toggles.bracket_condition || self.bracket) && (!toggles.non_cone_cap || self.non_cone)
    }
}

pub fn check_valency_conditions(v: &ValencyArray) -> ValencyReport {
    let p = v.params;
    let (t, n, s, m) = (p.t, p.n, p.s, p.m);
    let r = v.r();
    let ks = v.valencies();
    let floor = n - 2 * m;

    // (a) holds by construction: every k_i - t is ω times a square
    let a = true;
    let b = ks[r - 1] <= k_max(t) && ks[0] >= k1_min(t);
    let pairs_below = || (0..r).flat_map(|i| (0..i).map(move |j| (i, j)));
    let c = pairs_below().all(|(i, j)| v.gap(i, j) <= 2 * t - 2);
    let d = pairs_below().all(|(i, j)| v.gap(i, j) <= t || v.span(i, j) >= floor);
    let closed_walks: Vec<Int> = (0..r).map(|i| v.tau(i)).collect();
    let e = closed_walks.iter().all(|w| *w >= 0 && w % 2 == 0);
    let f = (0..r - 1).any(|i| v.gap(r - 1, i) <= t);
    let g = (0..r).any(|i| (0..r).any(|j| v.span(i, j) >= floor));
    let h_value = p.edge_double() - n * ks[0] - ks[..r - 1].iter().map(|k| k - ks[0]).sum::<Int>();
    let h_bound = ks[r - 1] - ks[0];
    let h = h_value >= h_bound;
    let bracket = ks[0] < s && s < ks[r - 1];
    let non_cone = ks[r - 1] <= n - 2;
    ValencyReport {
        a,
        b,
        c,
        d,
        e,
        f,
        g,
        h,
        bracket,
        non_cone,
        h_value,
        h_bound,
        closed_walks,
    }
}

/// Every feasible valency array over `p`, ordered by `ω` then by `β` tuple.
pub fn enumerate_valency_arrays(p: &SpectralParams, toggles: &Toggles) -> Result<Vec<ValencyArray>> {
    check_t(p.t)?;
    let (t, n) = (p.t, p.n);
    let kmax = k_max(t);
    let kmin = k1_min(t);
    let total = p.edge_double();
    let mut out = Vec::new();

    for omega in (1..=kmax - t).filter(|w| is_squarefree(*w)) {
        // (b) and (e) depend on a single valency, so filter candidates up front
        let cands: Vec<Int> = (1..)
            .take_while(|b| t + omega * b * b <= kmax)
            .filter(|b| t + omega * b * b >= kmin)
            .filter(|b| {
                let tau = (p.s - t + 1) * (omega * b * b) - (t - 1) * t;
                tau >= 0 && tau % 2 == 0
            })
            .collect();
        let mut stack = Vec::new();
        extend(p, toggles, omega, &cands, 0, &mut stack, total, n, &mut out);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &SpectralParams,
    toggles: &Toggles,
    omega: Int,
    cands: &[Int],
    start: usize,
    stack: &mut Vec<Int>,
    total: Int,
    n: Int,
    out: &mut Vec<ValencyArray>,
) {
    let t = p.t;
    if stack.len() >= 3 {
        let v = ValencyArray {
            params: *p,
            omega,
            betas: stack.clone(),
        };
        if check_valency_conditions(&v).passes(toggles) {
            out.push(v);
        }
    }
    for idx in start..cands.len() {
        let b = cands[idx];
        let k = t + omega * b * b;
        // (c) and (d) are pairwise, so a failing pair kills every extension
        let pair_ok = stack.iter().all(|&q| {
            let gap = omega * q * (b - q);
            let kq = t + omega * q * q;
            gap <= 2 * t - 2 && (gap <= t || k + kq - omega * q * b + t > n - 2 * p.m)
        });
        if !pair_ok {
            continue;
        }
        // (h) is equivalent to T - n k_1 - Σ_i (k_i - k_1) >= 0, which only
        // shrinks as valencies are added; the list is sorted so later b fail too
        let k1 = t + omega * stack.first().copied().unwrap_or(b).pow(2);
        let used: Int = stack.iter().map(|q| omega * q * q + t - k1).sum::<Int>() + (k - k1);
        if total - n * k1 - used < 0 {
            break;
        }
        stack.push(b);
        extend(p, toggles, omega, cands, idx + 1, stack, total, n, out);
        stack.pop();
    }
}
