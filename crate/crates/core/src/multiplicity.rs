//! Valency multiplicities `n_1, ..., n_r` and the surviving candidates.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SearchError};
use crate::spectral::SpectralParams;
use crate::valency::ValencyArray;
use crate::{Int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiplicityArray {
    pub counts: Vec<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", content = "reason", rename_all = "lowercase")]
pub enum Status {
    Open,
    Refuted(String),
    Flagged(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Open => "open",
            Status::Refuted(_) => "refuted",
            Status::Flagged(_) => "flagged",
        }
    }

    pub fn reason(&self) -> &str {
        match self {
            Status::Open => "",
            Status::Refuted(r) | Status::Flagged(r) => r,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub params: SpectralParams,
    pub valencies: ValencyArray,
    pub counts: MultiplicityArray,
    pub status: Status,
}

impl Candidate {
    pub fn new(valencies: ValencyArray, counts: MultiplicityArray) -> Result<Self> {
        if counts.counts.len() != valencies.r() {
            return Err(SearchError::Invalid(format!(
                "{} counts for {} valencies",
                counts.counts.len(),
                valencies.r()
            )));
        }
        Ok(Self {
            params: valencies.params,
            valencies,
            counts,
            status: Status::Open,
        })
    }

    /// Builds a candidate from the table form `t; n, s, m; valencies; counts`.
    pub fn from_table(t: Int, n: Int, s: Int, m: Int, ks: &[Int], counts: &[Int]) -> Result<Self> {
        let p = SpectralParams::new(t, n, s, m)?;
        let v = ValencyArray::from_valencies(p, ks)?;
        Self::new(
            v,
            MultiplicityArray {
                counts: counts.to_vec(),
            },
        )
    }

    pub fn n(&self, i: usize) -> Int {
        self.counts.counts[i]
    }

    /// Only open candidates may change state.
    pub fn transition(&mut self, next: Status) {
        if self.status == Status::Open {
            self.status = next;
        }
    }
}

/// Length of the longest prefix of classes whose vertices are pairwise
/// forced non-adjacent, same-class pairs included.
pub fn h_frak(v: &ValencyArray) -> usize {
    let p = v.params;
    let floor = p.n - 2 * p.m;
    let ok = |i: usize, j: usize| v.k(i) + v.k(j) - v.c(i, j) + p.t - 1 < floor;
    // the predicate on prefixes is monotone, so the first failure ends it
    (1..=v.r())
        .take_while(|&h| (0..h).all(|j| ok(h - 1, j)))
        .last()
        .unwrap_or(0)
}

/// Bounds on `n_i` (1-based `i` in `2..=r`) given the fixed tail `n_{i+1..r}`.
pub fn count_bounds(v: &ValencyArray, i: usize, tail: &[Int]) -> Result<(Rational, Rational)> {
    let r = v.r();
    if i < 2 || i > r {
        return Err(SearchError::Invalid(format!("index {i} outside 2..={r}")));
    }
    if tail.len() != r - i {
        return Err(SearchError::Invalid(format!(
            "tail has {} entries, expected {}",
            tail.len(),
            r - i
        )));
    }
    let p = v.params;
    let total = p.edge_double();
    let k = |j: usize| v.k(j - 1);
    let bound = |base: Int| -> Int {
        let tail_sum: Int = tail
            .iter()
            .enumerate()
            .map(|(off, nj)| nj * (k(i + 1 + off) - base))
            .sum();
        let head_sum: Int = (1..i).map(|j| k(j) - base).sum();
        total - p.n * base - tail_sum - head_sum
    };
    let upper = Ratio::new(bound(k(1)), k(i) - k(1));
    let lower = Ratio::new(bound(k(i - 1)), k(i) - k(i - 1));
    Ok((lower, upper))
}

/// Both sides of each of the four counting equations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationReport {
    /// `Σ n_i k_i β_i` against `s Σ n_i β_i` (the common `√ω` cancelled).
    pub perron: (Int, Int),
    /// `ω (Σ n_i β_i)²` against `Σ n_i (k_i - 1)(k_i + t)`.
    pub norm: (Int, Int),
    /// `Σ n_i k_i` against the sum of squared eigenvalues.
    pub trace2: (Int, Int),
    /// `Σ n_i τ_i` against the sum of cubed eigenvalues.
    pub trace3: (Int, Int),
}

impl EquationReport {
    pub fn all_hold(&self) -> bool {
        [self.perron, self.norm, self.trace2, self.trace3]
            .iter()
            .all(|(a, b)| a == b)
    }
}

pub fn check_multiplicity_equations(v: &ValencyArray, counts: &[Int]) -> Result<EquationReport> {
    let p = v.params;
    if counts.len() != v.r() {
        return Err(SearchError::Invalid(format!(
            "{} counts for {} valencies",
            counts.len(),
            v.r()
        )));
    }
    let total: Int = counts.iter().sum();
    if total != p.n {
        return Err(SearchError::Invalid(format!(
            "counts sum to {total}, expected n = {}",
            p.n
        )));
    }
    let sum = |f: &dyn Fn(usize) -> Int| -> Int { (0..v.r()).map(|i| counts[i] * f(i)).sum() };
    let beta_sum = sum(&|i| v.betas[i]);
    Ok(EquationReport {
        perron: (sum(&|i| v.k(i) * v.betas[i]), p.s * beta_sum),
        norm: (v.omega * beta_sum * beta_sum, sum(&|i| (v.k(i) - 1) * (v.k(i) + p.t))),
        trace2: (sum(&|i| v.k(i)), p.edge_double()),
        trace3: (sum(&|i| v.tau(i)), p.walk_sum()),
    })
}

/// What a leaf of the enumeration must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafRule {
    /// The full definition: all four equations and the independence bound.
    Full,
    /// Only the edge count; used to exercise the pruning on dense outputs.
    TraceOnly,
}

fn leaf_ok(v: &ValencyArray, counts: &[Int], h: usize, rule: LeafRule) -> bool {
    let Ok(eqs) = check_multiplicity_equations(v, counts) else {
        return false;
    };
    match rule {
        LeafRule::TraceOnly => eqs.trace2.0 == eqs.trace2.1,
        LeafRule::Full => eqs.all_hold() && counts[..h].iter().sum::<Int>() <= v.params.m,
    }
}

/// The definition checked directly, independent of any enumeration order.
pub fn is_feasible_multiplicity(v: &ValencyArray, counts: &[Int], rule: LeafRule) -> bool {
    let r = v.r();
    if counts.len() != r || counts.iter().any(|c| *c < 1) || counts.iter().sum::<Int>() != v.params.n {
        return false;
    }
    let within = (2..=r).all(|i| {
        let (lo, hi) = count_bounds(v, i, &counts[i..]).expect("index in range");
        let x = Ratio::from_integer(counts[i - 1]);
        lo <= x && x <= hi
    });
    within && leaf_ok(v, counts, h_frak(v), rule)
}

pub fn enumerate_multiplicity_arrays(v: &ValencyArray) -> Vec<MultiplicityArray> {
    enumerate_with_rule(v, LeafRule::Full)
}

/// Depth-first over `n_r, n_{r-1}, ..., n_2`, clamping each to its bounds;
/// `n_1` is whatever remains of `n`.
pub fn enumerate_with_rule(v: &ValencyArray, rule: LeafRule) -> Vec<MultiplicityArray> {
    let r = v.r();
    let h = h_frak(v);
    let mut tail = Vec::with_capacity(r);
    let mut out = Vec::new();
    descend(v, r, &mut tail, h, rule, &mut out);
    out.sort();
    out
}

fn descend(
    v: &ValencyArray,
    i: usize,
    tail: &mut Vec<Int>,
    h: usize,
    rule: LeafRule,
    out: &mut Vec<MultiplicityArray>,
) {
    let n = v.params.n;
    let used: Int = tail.iter().sum();
    if i == 1 {
        let n1 = n - used;
        if n1 < 1 {
            return;
        }
        let mut counts = Vec::with_capacity(v.r());
        counts.push(n1);
        counts.extend(tail.iter());
        if leaf_ok(v, &counts, h, rule) {
            out.push(MultiplicityArray { counts });
        }
        return;
    }
    let (lo, hi) = count_bounds(v, i, tail).expect("index in range");
    let lo = lo.ceil().to_integer().max(1);
    // leave room for n_1..n_{i-1} >= 1
    let hi = hi.floor().to_integer().min(n - used - (i as Int - 1));
    if hi < lo {
        return;
    }
    for ni in lo..=hi {
        tail.insert(0, ni);
        descend(v, i - 1, tail, h, rule, out);
        tail.remove(0);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn array(t: Int, n: Int, s: Int, m: Int, ks: &[Int]) -> ValencyArray {
        ValencyArray::from_valencies(SpectralParams::new(t, n, s, m).unwrap(), ks).unwrap()
    }

    #[test]
    fn h_frak_examples() {
        assert_eq!(h_frak(&array(4, 31, 15, 9, &[5, 8, 13, 20])), 1);
        assert_eq!(h_frak(&array(5, 36, 19, 9, &[7, 13, 23])), 1);
        // pairs among {6, 9} stay below n - 2m = 21; (21, 6) gives 27
        assert_eq!(h_frak(&array(5, 45, 28, 12, &[6, 9, 21, 30])), 2);
        // n - 2m = 1: even the first pair meets the bound
        assert_eq!(h_frak(&array(4, 31, 45, 15, &[5, 8, 13, 20])), 0);
    }

    #[test]
    fn bounds_example() {
        let v = array(4, 31, 15, 9, &[5, 8, 13, 20]);
        let (lo, hi) = count_bounds(&v, 4, &[]).unwrap();
        assert_eq!(hi, Ratio::new(224, 15));
        assert_eq!(lo, Ratio::from_integer(0));
        assert!(count_bounds(&v, 1, &[]).is_err());
        assert!(count_bounds(&v, 4, &[3]).is_err());
    }

    #[test]
    fn equations_for_table_row() {
        let v = array(4, 31, 15, 9, &[5, 8, 13, 20]);
        let e = check_multiplicity_equations(&v, &[5, 10, 5, 11]).unwrap();
        assert_eq!(e.perron, (1260, 1260));
        assert_eq!(e.norm, (7056, 7056));
        assert_eq!(e.trace2, (390, 390));
        assert_eq!(e.trace3, (2820, 2820));
        assert!(check_multiplicity_equations(&v, &[5, 10, 5, 10]).is_err());

        let w = array(5, 36, 19, 9, &[7, 13, 23]);
        assert_eq!(
            check_multiplicity_equations(&w, &[6, 12, 18]).unwrap().trace2,
            (612, 612)
        );
    }

    #[test]
    fn enumeration_of_table_rows() {
        let v = array(4, 31, 15, 9, &[5, 8, 13, 20]);
        assert_eq!(
            enumerate_multiplicity_arrays(&v),
            vec![MultiplicityArray {
                counts: vec![5, 10, 5, 11]
            }]
        );
        let v = array(7, 45, 20, 8, &[11, 16, 23, 32]);
        assert_eq!(
            enumerate_multiplicity_arrays(&v),
            vec![MultiplicityArray {
                counts: vec![6, 27, 6, 6]
            }]
        );
    }

    #[test]
    fn status_transitions_only_from_open() {
        let mut c = Candidate::from_table(4, 31, 15, 9, &[5, 8, 13, 20], &[5, 10, 5, 11]).unwrap();
        c.transition(Status::Refuted("x".into()));
        c.transition(Status::Flagged("y".into()));
        assert_eq!(c.status, Status::Refuted("x".into()));
    }

    #[test]
    fn status_json_shape() {
        let s = serde_json::to_string(&Status::Refuted("why".into())).unwrap();
        assert_eq!(s, r#"{"state":"refuted","reason":"why"}"#);
        assert_eq!(serde_json::to_string(&Status::Open).unwrap(), r#"{"state":"open"}"#);
    }
}
