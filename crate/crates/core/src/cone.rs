//! Cones with three valencies: the apex, and two classes of Perron entries
//! `α_x > α_y` with `α_x α_y = 2(t - 1)`.

use serde::Serialize;

use crate::arith::{is_squarefree, isqrt_ceil, isqrt_exact, SqClass};
use crate::error::{Result, SearchError};
use crate::Int;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeBounds {
    pub t: Int,
    /// `n > 9t - 7`.
    pub a_lower_exclusive: Int,
    /// `n <= (2t - 1)² + t + 1`.
    pub a_upper: Int,
    /// `n <= 10t - 5 + 4/(t - 2)`, floored.
    pub b_upper: Int,
    /// `n >= 6t - 6 + √(8(2t - 2)(2t - 3))`, ceiled.
    pub d_lower: Int,
    pub lower: Int,
    pub upper: Int,
    pub feasible: bool,
}

impl ConeBounds {
    pub fn contains(&self, n: Int) -> bool {
        self.lower <= n && n <= self.upper
    }
}

pub fn cone_bounds(t: Int) -> Result<ConeBounds> {
    if t < 3 {
        return Err(SearchError::Invalid(format!("cone bounds need t >= 3, got {t}")));
    }
    // A = t and B = t - 2 for the eigenvalues 1 and -t
    let (a, b) = (t, t - 2);
    let a_lower_exclusive = 5 * a + 4 * b + 1;
    let a_upper = (a + b + 1).pow(2) + a + 1;
    let b_upper = ((a + b).pow(2) + 3 * (a + b) * b + b) / b;
    let d_lower = 3 * (a + b) + isqrt_ceil(8 * (a + b) * (a + b - 1));
    let lower = (a_lower_exclusive + 1).max(d_lower);
    let upper = a_upper.min(b_upper);
    Ok(ConeBounds {
        t,
        a_lower_exclusive,
        a_upper,
        b_upper,
        d_lower,
        lower,
        upper,
        feasible: lower <= upper,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeCandidate {
    pub t: Int,
    pub alpha_x: SqClass<Int>,
    pub alpha_y: SqClass<Int>,
    pub n: Int,
    pub s: Int,
    pub m: Int,
    pub n1: Int,
    pub n2: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeLedgerEntry {
    pub alpha_x: String,
    pub alpha_y: String,
    pub n: Int,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<Int>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Int>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n1: Option<Int>,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeReport {
    pub t: Int,
    pub bounds: ConeBounds,
    pub survivors: Vec<ConeCandidate>,
    pub ledger: Vec<ConeLedgerEntry>,
}

/// Factor pairs `ωβ_xβ_y = 2(t - 1)` with `β_x > β_y`, by `ω` then `β_y`.
fn factor_pairs(t: Int) -> Vec<(Int, Int, Int)> {
    let target = 2 * (t - 1);
    let mut out = Vec::new();
    for omega in (1..=target).filter(|w| target % w == 0 && is_squarefree(*w)) {
        let rest = target / omega;
        for by in (1..).take_while(|by| by * by < rest) {
            if rest % by == 0 {
                out.push((omega, rest / by, by));
            }
        }
    }
    out
}

pub fn cone_case_search(t: Int) -> Result<ConeReport> {
    if !(3..=6).contains(&t) {
        return Err(SearchError::Invalid(format!(
            "cone case search covers t in 3..=6, got {t}"
        )));
    }
    let bounds = cone_bounds(t)?;
    let mut survivors = Vec::new();
    let mut ledger = Vec::new();
    for (omega, bx, by) in factor_pairs(t) {
        let alpha_x = SqClass::new(omega, bx)?;
        let alpha_y = SqClass::new(omega, by)?;
        let n = omega * (bx + by).pow(2) + 1 + t;
        let entry = |disc: Option<Int>, s: Option<Int>, n1: Option<Int>, outcome: String| ConeLedgerEntry {
            alpha_x: alpha_x.to_string(),
            alpha_y: alpha_y.to_string(),
            n,
            discriminant: disc,
            s,
            n1,
            outcome,
        };
        // s² - (n - 2t)s + (n - 1)(2t - 3) = 0
        let lin = n - 2 * t;
        let disc = lin * lin - 4 * (n - 1) * (2 * t - 3);
        let Some(root) = isqrt_exact(disc) else {
            ledger.push(entry(
                Some(disc),
                None,
                None,
                format!("discriminant {disc} is not a perfect square"),
            ));
            continue;
        };
        let mut roots = vec![(lin - root) / 2, (lin + root) / 2];
        roots.dedup();
        if (lin + root) % 2 != 0 {
            ledger.push(entry(Some(disc), None, None, "roots are not integers".to_string()));
            continue;
        }
        for s in roots {
            if s <= t {
                ledger.push(entry(Some(disc), Some(s), None, format!("root s = {s} is not above t")));
                continue;
            }
            if (n - 1 + s) % (t + 1) != 0 {
                ledger.push(entry(
                    Some(disc),
                    Some(s),
                    None,
                    format!("m = {}/{} is not an integer", n - 1 + s, t + 1),
                ));
                continue;
            }
            let m = (n - 1 + s) / (t + 1);
            // n_1 α_x + n_2 α_y = s(α_x + α_y) with n_1 + n_2 = n - 1; √ω cancels
            let num = s * (bx + by) - (n - 1) * by;
            if num % (bx - by) != 0 {
                ledger.push(entry(Some(disc), Some(s), None, "n_1 is not an integer".to_string()));
                continue;
            }
            let n1 = num / (bx - by);
            let n2 = n - 1 - n1;
            if n1 * bx + n2 * by != s * (bx + by) {
                return Err(SearchError::Invalid(format!("Perron identity fails for n_1 = {n1}")));
            }
            if n1 < 1 || n2 < 1 {
                ledger.push(entry(
                    Some(disc),
                    Some(s),
                    Some(n1),
                    format!("n_1 = {n1}, n_2 = {n2}: fewer than three valencies"),
                ));
                continue;
            }
            if !bounds.contains(n) {
                ledger.push(entry(
                    Some(disc),
                    Some(s),
                    Some(n1),
                    format!("n = {n} outside [{}, {}]", bounds.lower, bounds.upper),
                ));
                continue;
            }
            ledger.push(entry(Some(disc), Some(s), Some(n1), "survives".to_string()));
            survivors.push(ConeCandidate {
                t,
                alpha_x,
                alpha_y,
                n,
                s,
                m,
                n1,
                n2,
            });
        }
    }
    Ok(ConeReport {
        t,
        bounds,
        survivors,
        ledger,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_t3() {
        let b = cone_bounds(3).unwrap();
        assert_eq!(b.b_upper, 29);
        assert_eq!(b.d_lower, 22);
        assert_eq!(b.a_lower_exclusive, 20);
        assert_eq!(b.a_upper, 29);
        assert!(b.feasible);
    }

    #[test]
    fn bounds_close_from_six() {
        let b = cone_bounds(7).unwrap();
        assert_eq!(b.d_lower, 69);
        assert!(!b.feasible);
        let b = cone_bounds(6).unwrap();
        assert_eq!((b.d_lower, b.b_upper), (57, 56));
        for t in 7..=200 {
            assert!(!cone_bounds(t).unwrap().feasible, "t = {t}");
        }
        assert!(cone_bounds(2).is_err());
    }

    #[test]
    fn b_upper_is_the_floor() {
        for t in 3..=40i64 {
            let exact = num_rational::Ratio::from_integer(10 * t - 5) + num_rational::Ratio::new(4, t - 2);
            assert_eq!(cone_bounds(t).unwrap().b_upper, exact.floor().to_integer());
        }
    }

    #[test]
    fn t3_ledger() {
        let rep = cone_case_search(3).unwrap();
        assert!(rep.survivors.is_empty());
        let surd = rep
            .ledger
            .iter()
            .filter(|e| e.alpha_x == "2√2" && e.alpha_y == "√2")
            .collect::<Vec<_>>();
        assert_eq!(surd.len(), 2);
        assert!(surd.iter().any(|e| e.n == 22 && e.s == Some(7) && e.n1 == Some(0)));
        assert!(surd.iter().any(|e| e.s == Some(9) && e.outcome.contains("30/4")));
        let four = rep
            .ledger
            .iter()
            .find(|e| e.alpha_x == "4" && e.alpha_y == "1")
            .unwrap();
        assert_eq!((four.n, four.discriminant), (29, Some(193)));
    }

    #[test]
    fn small_t_are_empty() {
        for t in 3..=6 {
            assert!(cone_case_search(t).unwrap().survivors.is_empty());
        }
        assert!(cone_case_search(7).is_err());
    }
}
