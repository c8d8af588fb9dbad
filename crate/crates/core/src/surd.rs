//! Sums of rational multiples of square roots, and the eigenvalue type built on them.
//!
//! Certification of concrete graphs needs products such as `√2·√6`, which
//! leave the single shared class of [`SqClass`]. [`SurdSum`] keeps every
//! term as `r√d` with `d` squarefree, so equality is structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{squarefree_split, SqClass};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdSum<T: Scalar> {
    // radicand -> coefficient; radicand 1 is the rational part, zero coefficients are never stored
    terms: BTreeMap<T, Ratio<T>>,
}

impl<T: Scalar> SurdSum<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn from_int(v: T) -> Self {
        Self::from_ratio(Ratio::from_integer(v))
    }

    pub fn from_ratio(v: Ratio<T>) -> Self {
        let mut s = Self::zero();
        s.push(T::one(), v);
        s
    }

    /// `coeff·√radicand` for any positive integer radicand.
    pub fn term(coeff: Ratio<T>, radicand: T) -> Self {
        let split = squarefree_split(radicand).expect("radicand must be positive");
        let mut s = Self::zero();
        s.push(split.omega(), coeff * Ratio::from_integer(split.beta()));
        s
    }

    /// `√k` for `k ≥ 0`.
    pub fn sqrt_int(k: T) -> Self {
        if k.is_zero() {
            Self::zero()
        } else {
            Self::term(Ratio::one(), k)
        }
    }

    pub fn from_class(c: &SqClass<T>) -> Self {
        let mut s = Self::zero();
        s.push(c.omega(), Ratio::from_integer(c.beta()));
        s
    }

    fn push(&mut self, radicand: T, coeff: Ratio<T>) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand).or_insert_with(Ratio::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<Ratio<T>> {
        match self.terms.len() {
            0 => Some(Ratio::zero()),
            1 => self.terms.get(&T::one()).copied(),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<T> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn terms(&self) -> impl Iterator<Item = (T, Ratio<T>)> + '_ {
        self.terms.iter().map(|(d, c)| (*d, *c))
    }

    /// Sign of the value. Decided exactly for at most two radical terms plus
    /// a rational part; `None` beyond that.
    pub fn signum(&self) -> Option<Ordering> {
        let zero = Ratio::zero();
        let rational = self.terms.get(&T::one()).copied().unwrap_or_else(Ratio::zero);
        let radical: Vec<_> = self.terms().filter(|(d, _)| !d.is_one()).collect();
        match radical.as_slice() {
            [] => Some(rational.cmp(&zero)),
            [(d, c)] => Some(sign_pair(rational, *c, *d)),
            [(x, b), (y, c)] => {
                let u = Self {
                    terms: [(*x, *b), (*y, *c)].into_iter().collect(),
                };
                // sign of b√x + c√y: compare b²x with c²y when the signs differ
                let su = {
                    let (sb, sc) = (b.cmp(&zero), c.cmp(&zero));
                    if sb == sc {
                        sb
                    } else {
                        match (*b * *b * Ratio::from_integer(*x)).cmp(&(*c * *c * Ratio::from_integer(*y))) {
                            Ordering::Greater => sb,
                            Ordering::Less => sc,
                            Ordering::Equal => Ordering::Equal,
                        }
                    }
                };
                let sa = rational.cmp(&zero);
                if sa == Ordering::Equal || sa == su {
                    return Some(su);
                }
                // opposite signs: whichever of |u| and |a| is larger wins
                let gap = &(&u * &u) - &Self::from_ratio(rational * rational);
                Some(match gap.signum()? {
                    Ordering::Greater => su,
                    Ordering::Less => sa,
                    Ordering::Equal => Ordering::Equal,
                })
            }
            _ => None,
        }
    }
}

/// Sign of `a + c√d` for `d > 1` squarefree.
fn sign_pair<T: Scalar>(a: Ratio<T>, c: Ratio<T>, d: T) -> Ordering {
    let zero = Ratio::zero();
    let sa = a.cmp(&zero);
    let sc = c.cmp(&zero);
    if sa == Ordering::Equal || sa == sc {
        return sc;
    }
    if sc == Ordering::Equal {
        return sa;
    }
    match (c * c * Ratio::from_integer(d)).cmp(&(a * a)) {
        Ordering::Greater => sc,
        Ordering::Less => sa,
        Ordering::Equal => Ordering::Equal,
    }
}

impl<T: Scalar> Add for &SurdSum<T> {
    type Output = SurdSum<T>;
    fn add(self, rhs: &SurdSum<T>) -> SurdSum<T> {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.push(d, c);
        }
        out
    }
}

impl<T: Scalar> Neg for &SurdSum<T> {
    type Output = SurdSum<T>;
    fn neg(self) -> SurdSum<T> {
        SurdSum {
            terms: self.terms.iter().map(|(d, c)| (*d, -*c)).collect(),
        }
    }
}

impl<T: Scalar> Sub for &SurdSum<T> {
    type Output = SurdSum<T>;
    fn sub(self, rhs: &SurdSum<T>) -> SurdSum<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &SurdSum<T> {
    type Output = SurdSum<T>;
    fn mul(self, rhs: &SurdSum<T>) -> SurdSum<T> {
        let mut out = SurdSum::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                // √a·√b = g·√(ab/g²) for squarefree a, b with g = gcd(a, b)
                let g = a.gcd(&b);
                let radicand = (a / g) * (b / g);
                out.push(radicand, ca * cb * Ratio::from_integer(g));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for SurdSum<T> {
            type Output = SurdSum<T>;
            fn $m(self, rhs: SurdSum<T>) -> SurdSum<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> fmt::Display for SurdSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (d, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            if d.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "√{d}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}√{d}")?;
            } else {
                write!(f, "({mag})√{d}")?;
            }
        }
        Ok(())
    }
}

/// An eigenvalue `p + q√d` with rational `p, q` and squarefree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicEigenvalue<T: Scalar> {
    p: Ratio<T>,
    q: Ratio<T>,
    d: T,
}

impl<T: Scalar> AlgebraicEigenvalue<T> {
    pub fn integer(v: T) -> Self {
        Self {
            p: Ratio::from_integer(v),
            q: Ratio::zero(),
            d: T::one(),
        }
    }

    pub fn rational(p: Ratio<T>) -> Self {
        Self {
            p,
            q: Ratio::zero(),
            d: T::one(),
        }
    }

    /// `p + q√k` for a positive integer `k`, normalised so the radicand is squarefree.
    pub fn new(p: Ratio<T>, q: Ratio<T>, k: T) -> Self {
        let split = squarefree_split(k).expect("radicand must be positive");
        let q = q * Ratio::from_integer(split.beta());
        if q.is_zero() || split.omega().is_one() {
            return Self::rational(p + q);
        }
        Self { p, q, d: split.omega() }
    }

    pub fn p(&self) -> Ratio<T> {
        self.p
    }

    pub fn q(&self) -> Ratio<T> {
        self.q
    }

    pub fn radicand(&self) -> T {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self { q: -self.q, ..*self }
    }

    pub fn to_surd(&self) -> SurdSum<T> {
        let mut s = SurdSum::from_ratio(self.p);
        if !self.q.is_zero() {
            s.push(self.d, self.q);
        }
        s
    }

    pub fn from_surd(s: &SurdSum<T>) -> Option<Self> {
        let mut p = Ratio::zero();
        let mut irr = None;
        for (d, c) in s.terms() {
            if d.is_one() {
                p = c;
            } else if irr.replace((d, c)).is_some() {
                return None;
            }
        }
        Some(match irr {
            None => Self::rational(p),
            Some((d, q)) => Self { p, q, d },
        })
    }
}

impl<T: Scalar> PartialOrd for AlgebraicEigenvalue<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for AlgebraicEigenvalue<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = &self.to_surd() - &other.to_surd();
        // at most two radicands plus a rational part, always decidable
        diff.signum()
            .expect("difference of two eigenvalues has at most three terms")
    }
}

impl<T: Scalar> fmt::Display for AlgebraicEigenvalue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_surd())
    }
}

impl<T: Scalar> Serialize for AlgebraicEigenvalue<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse eigenvalue {0:?}; expected forms like 5, -2, 3/2, √6, -2√2, sqrt(6)")]
pub struct ParseEigenvalueError(pub String);

impl<T: Scalar> FromStr for AlgebraicEigenvalue<T> {
    type Err = ParseEigenvalueError;

    /// Accepts a rational, or a single signed term `[c]√k` / `[c]sqrt(k)`.
    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let err = || ParseEigenvalueError(raw.to_string());
        let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(&s)),
        };
        let parse_ratio = |txt: &str| -> Option<Ratio<T>> {
            let int = |x: &str| x.parse::<i128>().ok().and_then(<T as num_traits::NumCast>::from);
            match txt.split_once('/') {
                Some((a, b)) => {
                    let (a, b) = (int(a)?, int(b)?);
                    (!b.is_zero()).then(|| Ratio::new(a, b))
                }
                None => Some(Ratio::from_integer(int(txt)?)),
            }
        };
        let radical = body
            .split_once('√')
            .map(|(c, k)| (c.to_string(), k.to_string()))
            .or_else(|| {
                body.split_once("sqrt(")
                    .and_then(|(c, rest)| rest.strip_suffix(')').map(|k| (c.to_string(), k.to_string())))
            });
        let value = match radical {
            None => Self::rational(parse_ratio(body).ok_or_else(err)?),
            Some((coeff, k)) => {
                let coeff = coeff.trim_end_matches('*');
                let c = if coeff.is_empty() {
                    Ratio::one()
                } else {
                    parse_ratio(coeff).ok_or_else(err)?
                };
                let k = parse_ratio(&k)
                    .filter(|k| k.is_integer() && k.is_positive())
                    .ok_or_else(err)?;
                Self::new(Ratio::zero(), c, k.to_integer())
            }
        };
        Ok(if neg {
            Self {
                p: -value.p,
                q: -value.q,
                d: value.d,
            }
        } else {
            value
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = SurdSum<i64>;
    type E = AlgebraicEigenvalue<i64>;

    #[test]
    fn product_of_roots_reduces() {
        let p = &S::sqrt_int(2) * &S::sqrt_int(6);
        assert_eq!(p, S::term(Ratio::from_integer(2), 3));
        let sq = &S::sqrt_int(8) * &S::sqrt_int(8);
        assert_eq!(sq.as_integer(), Some(8));
    }

    #[test]
    fn cancellation_leaves_zero() {
        let a = &S::sqrt_int(8) - &(&S::from_int(2) * &S::sqrt_int(2));
        assert!(a.is_zero());
    }

    #[test]
    fn sign_of_two_terms() {
        // 3 - 2√2 > 0, 2 - √5 < 0
        let a = &S::from_int(3) - &S::sqrt_int(8);
        assert_eq!(a.signum(), Some(Ordering::Greater));
        let b = &S::from_int(2) - &S::sqrt_int(5);
        assert_eq!(b.signum(), Some(Ordering::Less));
        // √2 + √3 ≈ 3.146 against π-ish rationals
        let c = &(&S::sqrt_int(2) + &S::sqrt_int(3)) - &S::from_ratio(Ratio::new(22, 7));
        assert_eq!(c.signum(), Some(Ordering::Greater));
        let d = &(&S::sqrt_int(2) + &S::sqrt_int(3)) - &S::from_ratio(Ratio::new(315, 100));
        assert_eq!(d.signum(), Some(Ordering::Less));
    }

    #[test]
    fn eigenvalue_order() {
        let mut v = [
            E::integer(0),
            E::new(Ratio::zero(), Ratio::from_integer(-1), 6),
            E::new(Ratio::zero(), Ratio::one(), 6),
        ];
        v.sort();
        assert_eq!(v.iter().map(|e| e.to_string()).collect::<Vec<_>>(), ["-√6", "0", "√6"]);
        assert!(E::new(Ratio::new(1, 2), Ratio::new(1, 2), 5) > E::integer(1));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("5".parse::<E>().unwrap(), E::integer(5));
        assert_eq!("-2".parse::<E>().unwrap(), E::integer(-2));
        assert_eq!("√6".parse::<E>().unwrap(), E::new(Ratio::zero(), Ratio::one(), 6));
        assert_eq!(
            "-2√2".parse::<E>().unwrap(),
            E::new(Ratio::zero(), Ratio::from_integer(-2), 2)
        );
        assert_eq!(
            "sqrt(8)".parse::<E>().unwrap(),
            E::new(Ratio::zero(), Ratio::from_integer(2), 2)
        );
        assert_eq!("√4".parse::<E>().unwrap(), E::integer(2));
        assert!("abc".parse::<E>().is_err());
        assert!("√0".parse::<E>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for txt in ["5", "-2", "√6", "-√6", "2√2", "3/2"] {
            let e: E = txt.parse().unwrap();
            assert_eq!(e.to_string(), txt);
        }
    }
}
