//! Local checks that eliminate candidates surviving the multiplicity stage.
//!
//! Each check either leaves a candidate open or returns a [`Certificate`]
//! holding the exact integers of the violated inequality, which
//! [`Certificate::replay`] can re-derive from the candidate alone.

use serde::Serialize;

use crate::multiplicity::{Candidate, Status};
use crate::spectral::SpectralParams;
use crate::toggles::Toggles;
use crate::valency::ValencyArray;
use crate::Int;

/// Common neighbours of a class-`i` and a class-`j` vertex. Negative values
/// mean the adjacency is impossible.
pub fn nu_pair(v: &ValencyArray, i: usize, j: usize, adjacent: bool) -> Int {
    let adj = if adjacent { 1 - v.params.t } else { 0 };
    adj + v.c(i, j)
}

pub fn closed_walks3(v: &ValencyArray, i: usize) -> Int {
    v.tau(i)
}

/// How a single class-`i` vertex could split its neighbours among the classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LocalProfile {
    pub class_index: usize,
    pub neighbor_counts: Vec<Int>,
}

/// Room for a class-`i` vertex's neighbours inside class `j`.
fn capacity(c: &Candidate, i: usize, j: usize) -> Int {
    if nu_pair(&c.valencies, i, j, true) < 0 {
        0
    } else if i == j {
        c.n(j) - 1
    } else {
        c.n(j)
    }
}

pub fn profile_admissible(c: &Candidate, i: usize, counts: &[Int]) -> bool {
    let v = &c.valencies;
    counts.len() == v.r()
        && counts
            .iter()
            .enumerate()
            .all(|(j, mj)| *mj >= 0 && *mj <= capacity(c, i, j))
        && counts.iter().sum::<Int>() == v.k(i)
        && counts
            .iter()
            .enumerate()
            .map(|(j, mj)| mj * nu_pair(v, i, j, true))
            .sum::<Int>()
            == v.tau(i)
}

pub fn enumerate_profiles(c: &Candidate, i: usize) -> Vec<LocalProfile> {
    let v = &c.valencies;
    let r = v.r();
    let caps: Vec<Int> = (0..r).map(|j| capacity(c, i, j)).collect();
    let weights: Vec<Int> = (0..r).map(|j| nu_pair(v, i, j, true)).collect();
    let mut out = Vec::new();
    let mut counts = vec![0; r];
    fill(0, v.k(i), v.tau(i), &caps, &weights, &mut counts, &mut |m| {
        out.push(LocalProfile {
            class_index: i,
            neighbor_counts: m.to_vec(),
        })
    });
    out
}

fn fill(j: usize, deg: Int, tau: Int, caps: &[Int], w: &[Int], counts: &mut [Int], emit: &mut dyn FnMut(&[Int])) {
    if j == caps.len() {
        if deg == 0 && tau == 0 {
            emit(counts);
        }
        return;
    }
    let rest = j..caps.len();
    let open = || rest.clone().filter(|&x| caps[x] > 0);
    if open().map(|x| caps[x]).sum::<Int>() < deg {
        return;
    }
    if deg > 0 {
        let hi = open().map(|x| w[x]).max().unwrap_or(0);
        let lo = open().map(|x| w[x]).min().unwrap_or(0);
        if tau > deg * hi || tau < deg * lo {
            return;
        }
    } else if tau != 0 {
        return;
    }
    for mj in 0..=caps[j].min(deg) {
        counts[j] = mj;
        fill(j + 1, deg - mj, tau - mj * w[j], caps, w, counts, emit);
    }
    counts[j] = 0;
}

/// Smallest and largest `Σ m_j ν_j` reachable when only the degree and the
/// capacities are respected; `None` when the capacities cannot absorb `k_i`.
fn reachable_range(c: &Candidate, i: usize) -> Option<(Int, Int)> {
    let v = &c.valencies;
    let mut slots: Vec<(Int, Int)> = (0..v.r())
        .map(|j| (nu_pair(v, i, j, true), capacity(c, i, j)))
        .filter(|(_, cap)| *cap > 0)
        .collect();
    slots.sort();
    let greedy = |order: &mut dyn Iterator<Item = &(Int, Int)>| {
        let mut left = v.k(i);
        let mut acc = 0;
        for (w, cap) in order {
            let take = left.min(*cap);
            acc += take * w;
            left -= take;
        }
        (left == 0).then_some(acc)
    };
    Some((greedy(&mut slots.iter())?, greedy(&mut slots.iter().rev())?))
}

/// Per-class minimum of `m_j` over all admissible profiles.
pub fn forced_minimums(profiles: &[LocalProfile]) -> Vec<Int> {
    let r = profiles.first().map_or(0, |p| p.neighbor_counts.len());
    (0..r)
        .map(|j| profiles.iter().map(|p| p.neighbor_counts[j]).min().unwrap_or(0))
        .collect()
}

fn choose2(x: Int) -> Int {
    x * (x - 1) / 2
}

/// Least `Σ_w C(d_w, 2)` over `d_1 + ... + d_cells = edges`.
fn spread_pairs(edges: Int, cells: Int) -> Int {
    if cells == 0 {
        return 0;
    }
    let (q, rem) = (edges / cells, edges % cells);
    (cells - rem) * choose2(q) + rem * choose2(q + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// No neighbourhood split meets the degree and the closed-walk count.
    NoProfile {
        class: usize,
        degree: Int,
        tau: Int,
        reachable: Option<(Int, Int)>,
    },
    /// Two class-`i` vertices share at least `shared` common neighbours by
    /// pigeonhole, more than the `nu_max` the spectrum allows.
    Saturation {
        class: usize,
        forced: Vec<Int>,
        shared: Int,
        nu_max: Int,
    },
    /// Pairs of class-`i` vertices covered by forced common neighbours
    /// exceed the `capacity` of `C(n_i, 2)·ν_max`.
    Convexity {
        class: usize,
        forced: Vec<Int>,
        pairs: Int,
        capacity: Int,
    },
    /// Row `row` of the quotient matrix has no solution even before the walk condition.
    QuotientRowEmpty { row: usize },
    /// Every row solution of `row` fails the walk condition; `lhs`/`rhs` are
    /// those of the first one.
    QuotientWalk {
        row: usize,
        entries: Vec<Int>,
        lhs: Int,
        rhs: Int,
    },
    /// Rows are individually solvable but no combination is balanced.
    QuotientBalance,
    /// `n = l(l+1)/2` for an eigenvalue of multiplicity `n - l`.
    BrEquality { n: Int, l: Int, eigenvalue: Int },
}

impl Certificate {
    pub fn summary(&self) -> String {
        match self {
            Certificate::NoProfile {
                class,
                degree,
                tau,
                reachable,
            } => match reachable {
                Some((lo, hi)) if tau < lo || tau > hi => format!(
                    "no admissible neighbourhood for class {} (k={degree}, τ={tau} outside [{lo}, {hi}])",
                    class + 1
                ),
                Some(_) => format!(
                    "no admissible neighbourhood for class {} (k={degree}, τ={tau})",
                    class + 1
                ),
                None => format!(
                    "no admissible neighbourhood for class {} (k={degree} exceeds room)",
                    class + 1
                ),
            },
            Certificate::Saturation {
                class, shared, nu_max, ..
            } => {
                format!("double-count saturation {shared} > {nu_max} (class {})", class + 1)
            }
            Certificate::Convexity {
                class, pairs, capacity, ..
            } => {
                format!("double-count convexity {pairs} > {capacity} (class {})", class + 1)
            }
            Certificate::QuotientRowEmpty { row } => {
                format!("quotient-matrix infeasible (row {} has no solution)", row + 1)
            }
            Certificate::QuotientWalk { lhs, rhs, .. } => format!("quotient-matrix infeasible ({lhs} ≠ {rhs})"),
            Certificate::QuotientBalance => "quotient-matrix infeasible (no balanced combination)".to_string(),
            Certificate::BrEquality { n, l, .. } => format!("Bell-Rowlinson equality {n} = {l}·{}/2", l + 1),
        }
    }

    /// Re-derives the violation from the candidate; true iff it reproduces.
    pub fn replay(&self, c: &Candidate) -> bool {
        let v = &c.valencies;
        match self {
            Certificate::NoProfile {
                class,
                degree,
                tau,
                reachable,
            } => {
                *class < v.r()
                    && v.k(*class) == *degree
                    && v.tau(*class) == *tau
                    && reachable_range(c, *class) == *reachable
                    && enumerate_profiles(c, *class).is_empty()
            }
            Certificate::Saturation {
                class,
                forced,
                shared,
                nu_max,
            } => {
                let profiles = enumerate_profiles(c, *class);
                !profiles.is_empty()
                    && forced_minimums(&profiles) == *forced
                    && saturation(c, *class, forced) == (*shared, *nu_max)
                    && shared > nu_max
            }
            Certificate::Convexity {
                class,
                forced,
                pairs,
                capacity,
            } => {
                let profiles = enumerate_profiles(c, *class);
                !profiles.is_empty()
                    && forced_minimums(&profiles) == *forced
                    && convexity(c, *class, forced) == (*pairs, *capacity)
                    && pairs > capacity
            }
            Certificate::QuotientRowEmpty { .. } | Certificate::QuotientWalk { .. } | Certificate::QuotientBalance => {
                quotient_certificate(c).as_ref() == Some(self)
            }
            Certificate::BrEquality { .. } => br_equality_flag(&c.params).as_ref() == Some(self),
        }
    }
}

fn nu_max_same_class(c: &Candidate, i: usize) -> Int {
    // a non-adjacent pair has ωβ_i² common neighbours, an adjacent one t - 1 fewer
    nu_pair(&c.valencies, i, i, false)
}

fn saturation(c: &Candidate, i: usize, forced: &[Int]) -> (Int, Int) {
    let shared = (0..forced.len())
        .filter(|&j| j != i)
        .map(|j| (2 * forced[j] - c.n(j)).max(0))
        .sum();
    (shared, nu_max_same_class(c, i))
}

fn convexity(c: &Candidate, i: usize, forced: &[Int]) -> (Int, Int) {
    let pairs = (0..forced.len())
        .filter(|&j| j != i)
        .map(|j| spread_pairs(c.n(i) * forced[j], c.n(j)))
        .sum();
    (pairs, choose2(c.n(i)) * nu_max_same_class(c, i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Open,
    NotApplicable(String),
    Refuted(Certificate),
}

/// Counting argument for pairs of class-`i` vertices.
pub fn double_count_check(c: &Candidate, i: usize, profiles: &[LocalProfile]) -> Verdict {
    if c.n(i) < 2 {
        return Verdict::NotApplicable(format!("class {} has a single vertex", i + 1));
    }
    if profiles.is_empty() {
        return Verdict::NotApplicable(format!("class {} has no admissible profile", i + 1));
    }
    let forced = forced_minimums(profiles);
    let (shared, nu_max) = saturation(c, i, &forced);
    if shared > nu_max {
        return Verdict::Refuted(Certificate::Saturation {
            class: i,
            forced,
            shared,
            nu_max,
        });
    }
    let (pairs, capacity) = convexity(c, i, &forced);
    if pairs > capacity {
        return Verdict::Refuted(Certificate::Convexity {
            class: i,
            forced,
            pairs,
            capacity,
        });
    }
    Verdict::Open
}

/// Class-averaged adjacency counts `b_ij` of the valency partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientMatrix {
    pub entries: Vec<Vec<Int>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientOutcome {
    NotApplicable { r: usize },
    Solutions(Vec<QuotientMatrix>),
}

fn walk_rhs(c: &Candidate, i: usize) -> Int {
    let v = &c.valencies;
    let t = v.params.t;
    let weighted: Int = (0..v.r()).map(|j| c.n(j) * v.betas[j]).sum();
    (1 - t) * v.k(i) + t + v.omega * v.betas[i] * weighted
}

fn walk_lhs(c: &Candidate, row: &[Int]) -> Int {
    row.iter().enumerate().map(|(j, b)| b * c.valencies.k(j)).sum()
}

/// Rows meeting the row sum, capacities and eigenvector condition.
fn row_candidates(c: &Candidate, i: usize) -> Vec<Vec<Int>> {
    let v = &c.valencies;
    let r = v.r();
    let caps: Vec<Int> = (0..r).map(|j| capacity(c, i, j)).collect();
    // Σ_j b_ij β_j = s β_i is a weighted sum of the same shape as a profile
    let mut out = Vec::new();
    let mut row = vec![0; r];
    fill(
        0,
        v.k(i),
        v.params.s * v.betas[i],
        &caps,
        &v.betas,
        &mut row,
        &mut |b| out.push(b.to_vec()),
    );
    out
}

pub fn quotient_matrix_search(c: &Candidate) -> QuotientOutcome {
    let r = c.valencies.r();
    if r > 3 {
        return QuotientOutcome::NotApplicable { r };
    }
    let rows: Vec<Vec<Vec<Int>>> = (0..r)
        .map(|i| {
            row_candidates(c, i)
                .into_iter()
                .filter(|b| walk_lhs(c, b) == walk_rhs(c, i))
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut pick: Vec<&Vec<Int>> = Vec::with_capacity(r);
    combine(c, &rows, &mut pick, &mut found);
    QuotientOutcome::Solutions(found)
}

fn combine<'a>(c: &Candidate, rows: &'a [Vec<Vec<Int>>], pick: &mut Vec<&'a Vec<Int>>, out: &mut Vec<QuotientMatrix>) {
    let i = pick.len();
    if i == rows.len() {
        out.push(QuotientMatrix {
            entries: pick.iter().map(|r| r.to_vec()).collect(),
        });
        return;
    }
    for row in &rows[i] {
        if (0..i).all(|j| c.n(i) * row[j] == c.n(j) * pick[j][i]) {
            pick.push(row);
            combine(c, rows, pick, out);
            pick.pop();
        }
    }
}

/// Why the quotient search came back empty, or `None` if it did not (or
/// does not apply).
pub fn quotient_certificate(c: &Candidate) -> Option<Certificate> {
    match quotient_matrix_search(c) {
        QuotientOutcome::NotApplicable { .. } => None,
        QuotientOutcome::Solutions(s) if !s.is_empty() => None,
        QuotientOutcome::Solutions(_) => {
            for i in 0..c.valencies.r() {
                let rows = row_candidates(c, i);
                let Some(first) = rows.first() else {
                    return Some(Certificate::QuotientRowEmpty { row: i });
                };
                let rhs = walk_rhs(c, i);
                if rows.iter().all(|b| walk_lhs(c, b) != rhs) {
                    return Some(Certificate::QuotientWalk {
                        row: i,
                        entries: first.clone(),
                        lhs: walk_lhs(c, first),
                        rhs,
                    });
                }
            }
            Some(Certificate::QuotientBalance)
        }
    }
}

/// Equality in `n <= l(l+1)/2` for the eigenvalue `1` (multiplicity
/// `n - 1 - m`) or `-t` (multiplicity `m`).
pub fn br_equality_flag(p: &SpectralParams) -> Option<Certificate> {
    let eq = |l: Int| 2 * p.n == l * (l + 1);
    if eq(p.m + 1) {
        Some(Certificate::BrEquality {
            n: p.n,
            l: p.m + 1,
            eigenvalue: 1,
        })
    } else if eq(p.n - p.m) {
        Some(Certificate::BrEquality {
            n: p.n,
            l: p.n - p.m,
            eigenvalue: -p.t,
        })
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: &'static str,
    pub verdict: &'static str,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl CheckRecord {
    fn new(check: &'static str, verdict: &'static str, detail: String, certificate: Option<Certificate>) -> Self {
        Self {
            check,
            verdict,
            detail,
            certificate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationEntry {
    pub candidate: Candidate,
    pub checks: Vec<CheckRecord>,
}

impl RefutationEntry {
    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.checks.iter().filter_map(|c| c.certificate.as_ref())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RefutationReport {
    pub entries: Vec<RefutationEntry>,
}

impl RefutationReport {
    pub fn open(&self) -> usize {
        self.count(|s| matches!(s, Status::Open))
    }

    pub fn flagged(&self) -> usize {
        self.count(|s| matches!(s, Status::Flagged(_)))
    }

    pub fn refuted(&self) -> usize {
        self.count(|s| matches!(s, Status::Refuted(_)))
    }

    fn count(&self, f: impl Fn(&Status) -> bool) -> usize {
        self.entries.iter().filter(|e| f(&e.candidate.status)).count()
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let c = &e.candidate;
            let p = c.params;
            s += &format!(
                "t={} (n={}, s={}, m={}) valencies {:?} counts {:?}: {}\n",
                p.t,
                p.n,
                p.s,
                p.m,
                c.valencies.valencies(),
                c.counts.counts,
                c.status.label()
            );
            for chk in &e.checks {
                s += &format!("  {:<13} {:<15} {}\n", chk.check, chk.verdict, chk.detail);
            }
        }
        s += &format!(
            "open {}, flagged {}, refuted {}\n",
            self.open(),
            self.flagged(),
            self.refuted()
        );
        s
    }
}

/// Runs every check on every candidate in a fixed order. The status reason
/// lists all self-contained refutations; the uniqueness of the extremal graph is used
/// only when nothing else applies.
pub fn refute_one(candidate: &Candidate, toggles: &Toggles) -> RefutationEntry {
    let mut c = candidate.clone();
    c.status = Status::Open;
    let r = c.valencies.r();
    let mut checks = Vec::new();
    let mut reasons = Vec::new();

    let profiles: Vec<Vec<LocalProfile>> = (0..r).map(|i| enumerate_profiles(&c, i)).collect();
    for (i, ps) in profiles.iter().enumerate() {
        if ps.is_empty() {
            let cert = Certificate::NoProfile {
                class: i,
                degree: c.valencies.k(i),
                tau: c.valencies.tau(i),
                reachable: reachable_range(&c, i),
            };
            reasons.push(cert.summary());
            checks.push(CheckRecord::new("profiles", "refuted", cert.summary(), Some(cert)));
        } else {
            checks.push(CheckRecord::new(
                "profiles",
                "open",
                format!("class {}: {} profile(s)", i + 1, ps.len()),
                None,
            ));
        }
    }

    let mut dc_hit = false;
    for (i, ps) in profiles.iter().enumerate() {
        match double_count_check(&c, i, ps) {
            Verdict::Refuted(cert) if !dc_hit => {
                dc_hit = true;
                reasons.push(cert.summary());
                checks.push(CheckRecord::new("double-count", "refuted", cert.summary(), Some(cert)));
            }
            Verdict::Refuted(cert) => {
                checks.push(CheckRecord::new("double-count", "refuted", cert.summary(), Some(cert)));
            }
            Verdict::Open => checks.push(CheckRecord::new(
                "double-count",
                "open",
                format!("class {}", i + 1),
                None,
            )),
            Verdict::NotApplicable(why) => checks.push(CheckRecord::new("double-count", "not-applicable", why, None)),
        }
    }

    match quotient_matrix_search(&c) {
        QuotientOutcome::NotApplicable { r } => checks.push(CheckRecord::new(
            "quotient",
            "not-applicable",
            format!("{r} valencies; equitability needs at most three"),
            None,
        )),
        QuotientOutcome::Solutions(s) if !s.is_empty() => checks.push(CheckRecord::new(
            "quotient",
            "open",
            format!("{} consistent matrix(es)", s.len()),
            None,
        )),
        QuotientOutcome::Solutions(_) => {
            let cert = quotient_certificate(&c).expect("empty search yields a certificate");
            reasons.push(cert.summary());
            checks.push(CheckRecord::new("quotient", "refuted", cert.summary(), Some(cert)));
        }
    }

    let br = br_equality_flag(&c.params);
    match &br {
        Some(cert) => checks.push(CheckRecord::new(
            "br-equality",
            "flagged",
            cert.summary(),
            Some(cert.clone()),
        )),
        None => checks.push(CheckRecord::new(
            "br-equality",
            "open",
            "bound is strict".to_string(),
            None,
        )),
    }

    if !reasons.is_empty() {
        c.transition(Status::Refuted(reasons.join("; ")));
    } else if let Some(cert) = br {
        if toggles.apply_br_uniqueness {
            c.transition(Status::Refuted(format!(
                "{}; the unique extremal graph does not have these parameters",
                cert.summary()
            )));
        } else {
            c.transition(Status::Flagged(format!("{}; uniqueness rule disabled", cert.summary())));
        }
    }
    RefutationEntry { candidate: c, checks }
}

pub fn refute_all(candidates: &[Candidate], toggles: &Toggles) -> RefutationReport {
    RefutationReport {
        entries: candidates.iter().map(|c| refute_one(c, toggles)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(t: Int, n: Int, s: Int, m: Int, ks: &[Int], ns: &[Int]) -> Candidate {
        Candidate::from_table(t, n, s, m, ks, ns).unwrap()
    }

    fn t4() -> Candidate {
        row(4, 31, 15, 9, &[5, 8, 13, 20], &[5, 10, 5, 11])
    }
    fn t5a() -> Candidate {
        row(5, 36, 19, 9, &[7, 13, 23], &[6, 12, 18])
    }
    fn t5b() -> Candidate {
        row(5, 45, 28, 12, &[6, 9, 21, 30], &[6, 3, 3, 33])
    }
    fn t7() -> Candidate {
        row(7, 45, 20, 8, &[11, 16, 23, 32], &[6, 27, 6, 6])
    }

    #[test]
    fn nu_examples() {
        let c = t5a();
        assert_eq!(nu_pair(&c.valencies, 0, 0, true), -2);
        assert_eq!(nu_pair(&t4().valencies, 0, 3, false), 4);
        assert_eq!(nu_pair(&c.valencies, 1, 1, false), 8);
    }

    #[test]
    fn walk_examples() {
        assert_eq!(closed_walks3(&t4().valencies, 0), 0);
        assert_eq!(closed_walks3(&t5b().valencies, 0), 4);
        assert_eq!(closed_walks3(&t5a().valencies, 0), 10);
    }

    #[test]
    fn profile_examples() {
        let p = enumerate_profiles(&t4(), 0);
        assert_eq!(
            p.iter().map(|x| x.neighbor_counts.clone()).collect::<Vec<_>>(),
            vec![vec![0, 0, 5, 0]]
        );
        let p = enumerate_profiles(&t5b(), 0);
        assert_eq!(
            p.iter().map(|x| x.neighbor_counts.clone()).collect::<Vec<_>>(),
            vec![vec![0, 0, 2, 4]]
        );
        assert!(enumerate_profiles(&t5b(), 1).is_empty());
    }

    #[test]
    fn double_count_examples() {
        let c = t4();
        let v = double_count_check(&c, 0, &enumerate_profiles(&c, 0));
        assert!(
            matches!(
                v,
                Verdict::Refuted(Certificate::Saturation {
                    shared: 5,
                    nu_max: 1,
                    ..
                })
            ),
            "{v:?}"
        );
        let c = t5b();
        let v = double_count_check(&c, 0, &enumerate_profiles(&c, 0));
        assert!(
            matches!(
                v,
                Verdict::Refuted(Certificate::Convexity {
                    pairs: 18,
                    capacity: 15,
                    ..
                })
            ),
            "{v:?}"
        );
    }

    #[test]
    fn single_vertex_class_is_not_applicable() {
        let c = row(9, 67, 44, 11, &[13, 18, 25, 45], &[1, 3, 1, 62]);
        assert!(matches!(double_count_check(&c, 0, &[]), Verdict::NotApplicable(_)));
    }

    #[test]
    fn quotient_witness() {
        let c = t5a();
        assert_eq!(quotient_matrix_search(&c), QuotientOutcome::Solutions(vec![]));
        let cert = quotient_certificate(&c).unwrap();
        assert_eq!(
            cert,
            Certificate::QuotientWalk {
                row: 0,
                entries: vec![0, 2, 5],
                lhs: 141,
                rhs: 145
            }
        );
        assert!(cert.replay(&c));
        assert_eq!(quotient_matrix_search(&t4()), QuotientOutcome::NotApplicable { r: 4 });
    }

    #[test]
    fn br_flag() {
        assert_eq!(
            br_equality_flag(&t7().params),
            Some(Certificate::BrEquality {
                n: 45,
                l: 9,
                eigenvalue: 1
            })
        );
        assert_eq!(br_equality_flag(&t4().params), None);
        assert_eq!(
            br_equality_flag(&t7().params).unwrap().summary(),
            "Bell-Rowlinson equality 45 = 9·10/2"
        );
    }

    #[test]
    fn refute_table_rows() {
        let rows = vec![t4(), t5a(), t5b(), t7()];
        let on = refute_all(&rows, &Toggles::default());
        assert_eq!(on.open() + on.flagged(), 0);
        for e in &on.entries {
            for cert in e.certificates() {
                assert!(cert.replay(&e.candidate), "{cert:?}");
            }
        }
        let off = refute_all(
            &rows,
            &Toggles {
                apply_br_uniqueness: false,
                ..Toggles::default()
            },
        );
        assert_eq!(off.flagged(), 1);
        assert_eq!(off.entries[3].candidate.status.label(), "flagged");
    }

    #[test]
    fn empty_input() {
        assert!(refute_all(&[], &Toggles::default()).entries.is_empty());
    }
}
