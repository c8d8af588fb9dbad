//! Spectral parameter arrays `(n, s, m)` for a fixed `t`.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SearchError};
use crate::toggles::Toggles;
use crate::Int;

pub const T_MIN: Int = 3;
pub const T_MAX: Int = 29;

/// Spectrum `{s^1, 1^(n-1-m), (-t)^m}` of a putative `n`-vertex graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpectralParams {
    pub t: Int,
    pub n: Int,
    pub s: Int,
    pub m: Int,
}

impl SpectralParams {
    /// Checks positivity and the trace-zero linkage `m(t+1) = n + s - 1`.
    pub fn new(t: Int, n: Int, s: Int, m: Int) -> Result<Self> {
        if t < 1 || n < 1 || s < 1 || m < 1 {
            return Err(SearchError::Invalid(format!(
                "non-positive field in (t={t}, n={n}, s={s}, m={m})"
            )));
        }
        let lhs = m * (t + 1);
        let rhs = n + s - 1;
        if lhs != rhs {
            return Err(SearchError::Linkage { lhs, rhs });
        }
        Ok(Self { t, n, s, m })
    }

    /// Derives `m` from the linkage; fails when `(n - 1 + s)/(t + 1)` is not an integer.
    pub fn from_tns(t: Int, n: Int, s: Int) -> Result<Self> {
        let num = n - 1 + s;
        if num % (t + 1) != 0 {
            return Err(SearchError::Invalid(format!(
                "m = ({n} - 1 + {s})/{} = {num}/{} is not an integer",
                t + 1,
                t + 1
            )));
        }
        Self::new(t, n, s, num / (t + 1))
    }

    /// Sum of squared eigenvalues, i.e. twice the edge count.
    pub fn edge_double(&self) -> Int {
        let Self { t, n, s, m } = *self;
        s * s + n - 1 - m + m * t * t
    }

    /// Sum of cubed eigenvalues, i.e. six times the triangle count.
    pub fn walk_sum(&self) -> Int {
        let Self { t, n, s, m } = *self;
        s * s * s + n - 1 - m - m * t * t * t
    }
}

pub fn check_t(t: Int) -> Result<()> {
    if (T_MIN..=T_MAX).contains(&t) {
        Ok(())
    } else {
        Err(SearchError::TOutOfRange(t))
    }
}

/// Largest admissible vertex count for `t`.
pub fn n_max(t: Int) -> Result<Int> {
    check_t(t)?;
    Ok(if t <= 10 {
        // n <= t² + 8t + 18 + 18/(t-1)
        t * t + 8 * t + 18 + 18 / (t - 1)
    } else {
        // 4(t-1)n <= (t-1)(t² + 34t + 192) + 464
        ((t - 1) * (t * t + 34 * t + 192) + 464) / (4 * (t - 1))
    })
}

/// `n > (t - 1/2)²/2`, written without fractions.
pub fn n_lower_bound_holds(t: Int, n: Int) -> bool {
    (2 * t - 1) * (2 * t - 1) < 8 * n
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
    pub f: bool,
    pub n_lower_bound: bool,
    pub edge_double: Int,
    pub walk_sum: Int,
}

impl SpectralReport {
    pub fn all_pass(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e && self.f
    }

    pub fn passes(&self, toggles: &Toggles) -> bool {
        self.all_pass() && (!toggles.apply_n_lower_bound || self.n_lower_bound)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        [
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
            ("d", self.d),
            ("e", self.e),
            ("f", self.f),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

pub fn check_spectral_conditions(p: &SpectralParams) -> Result<SpectralReport> {
    SpectralParams::new(p.t, p.n, p.s, p.m)?;
    let SpectralParams { t, n, s, m } = *p;
    let a = match n_max(t) {
        Ok(cap) => n <= cap,
        Err(_) => false,
    };
    let b = (n - m) * (n - m + 1) >= 2 * n && (m + 1) * (m + 2) >= 2 * n;
    let c = n < s * s + 1;
    let d = t < s && s < ((t + 1) * (t + 1) + t).min(n - 6);
    let edge_double = p.edge_double();
    let walk_sum = p.walk_sum();
    let e = edge_double % 2 == 0 && edge_double < n * s;
    let f = walk_sum.rem_euclid(6) == 0;
    Ok(SpectralReport {
        a,
        b,
        c,
        d,
        e,
        f,
        n_lower_bound: n_lower_bound_holds(t, n),
        edge_double,
        walk_sum,
    })
}

/// All spectral parameter arrays for `t`, sorted by `(n, s)`.
pub fn enumerate_spectral(t: Int, toggles: &Toggles) -> Result<Vec<SpectralParams>> {
    let cap = n_max(t)?;
    let mut out = Vec::new();
    for n in 1..=cap {
        for m in 1..n {
            let s = 1 - n + m * (t + 1);
            if s <= 0 {
                continue;
            }
            let p = SpectralParams { t, n, s, m };
            if check_spectral_conditions(&p)?.passes(toggles) {
                out.push(p);
            }
        }
    }
    // s grows with m, so the scan order is already (n, s)
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_max_values() {
        assert_eq!(n_max(3).unwrap(), 60);
        assert_eq!(n_max(10).unwrap(), 200);
        assert_eq!(n_max(29).unwrap(), 508);
        assert!(n_max(2).is_err());
        assert!(n_max(30).is_err());
    }

    #[test]
    fn n_max_matches_fractional_formula() {
        for t in 3..=29i64 {
            let exact = if t <= 10 {
                num_rational::Ratio::from_integer(t * t + 8 * t + 18) + num_rational::Ratio::new(18, t - 1)
            } else {
                num_rational::Ratio::new(t * t, 4)
                    + num_rational::Ratio::new(17 * t, 2)
                    + num_rational::Ratio::from_integer(48)
                    + num_rational::Ratio::new(116, t - 1)
            };
            assert_eq!(n_max(t).unwrap(), exact.floor().to_integer(), "t = {t}");
        }
    }

    #[test]
    fn table_rows_pass() {
        let p = SpectralParams::new(4, 31, 15, 9).unwrap();
        let r = check_spectral_conditions(&p).unwrap();
        assert!(r.all_pass());
        assert_eq!((r.edge_double, r.walk_sum), (390, 2820));

        let q = SpectralParams::new(3, 22, 7, 7).unwrap();
        let r = check_spectral_conditions(&q).unwrap();
        assert!(r.all_pass());
        assert_eq!((r.edge_double, r.walk_sum), (126, 168));
    }

    #[test]
    fn linkage_is_enforced() {
        assert!(matches!(
            SpectralParams::new(4, 31, 15, 8),
            Err(SearchError::Linkage { .. })
        ));
        assert!(SpectralParams::from_tns(3, 22, 9).is_err());
        assert_eq!(SpectralParams::from_tns(3, 22, 7).unwrap().m, 7);
    }

    #[test]
    fn small_counts() {
        let tg = Toggles::default();
        assert_eq!(enumerate_spectral(3, &tg).unwrap().len(), 128);
        assert_eq!(enumerate_spectral(29, &tg).unwrap().len(), 27);
        assert!(enumerate_spectral(4, &tg)
            .unwrap()
            .contains(&SpectralParams::new(4, 31, 15, 9).unwrap()));
    }

    #[test]
    fn sorted_and_deterministic() {
        let tg = Toggles::default();
        let a = enumerate_spectral(7, &tg).unwrap();
        let b = enumerate_spectral(7, &tg).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| (w[0].n, w[0].s) < (w[1].n, w[1].s)));
    }
}
