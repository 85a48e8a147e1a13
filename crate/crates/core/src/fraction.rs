//! Reduced fractions on the extended rational line.
//!
//! The two ends of a generalized Farey sequence are kept apart as `-1/0`
//! and `1/0`; they order as the least and greatest elements but denote the
//! same cusp (see [`ExtFraction::same_cusp`]).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtFraction {
    p: BigInt,
    q: BigInt,
}

impl ExtFraction {
    /// Builds `p/q` in lowest terms with `q >= 0`. A zero denominator keeps
    /// only the sign of `p`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::InvalidArgument("0/0 is not a fraction".into()));
        }
        Ok(Self::reduce(p, q))
    }

    /// `p/q` for coprime `p, q`, such as a column of a unimodular matrix.
    pub(crate) fn coprime(mut p: BigInt, mut q: BigInt) -> Self {
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        if q.is_zero() {
            return ExtFraction::infinity();
        }
        ExtFraction { p, q }
    }

    pub(crate) fn reduce(mut p: BigInt, mut q: BigInt) -> Self {
        debug_assert!(!(p.is_zero() && q.is_zero()));
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        if q.is_zero() {
            return ExtFraction { p: p.signum(), q };
        }
        let g = p.gcd(&q);
        if !g.is_one() {
            p /= &g;
            q /= &g;
        }
        ExtFraction { p, q }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ExtFraction {
            p: n.into(),
            q: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn infinity() -> Self {
        ExtFraction {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn neg_infinity() -> Self {
        ExtFraction {
            p: -BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    /// Equality as points of P¹(ℚ): `-1/0` and `1/0` coincide.
    pub fn same_cusp(&self, other: &Self) -> bool {
        (self.is_infinite() && other.is_infinite()) || self == other
    }

    /// `p_other * q_self - p_self * q_other`.
    pub fn det_pairing(&self, other: &Self) -> BigInt {
        &other.p * &self.q - &self.p * &other.q
    }

    /// Component-wise sum of two Farey neighbours.
    pub fn mediant(&self, other: &Self) -> Result<Self> {
        if !self.det_pairing(other).is_one() {
            return Err(Error::InvalidArgument(format!(
                "{self} and {other} are not Farey neighbours"
            )));
        }
        Ok(Self::reduce(&self.p + &other.p, &self.q + &other.q))
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        if self.is_infinite() {
            return if self.p.is_positive() {
                f64::INFINITY
            } else {
                f64::NEG_INFINITY
            };
        }
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        p / q
    }
}

impl Ord for ExtFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => self.p.cmp(&other.p),
            (true, false) => {
                if self.p.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (false, true) => other.cmp(self).reverse(),
            (false, false) => {
                use num_traits::ToPrimitive;
                match (
                    self.p.to_i64(),
                    self.q.to_i64(),
                    other.p.to_i64(),
                    other.q.to_i64(),
                ) {
                    (Some(a), Some(b), Some(c), Some(d)) => {
                        (i128::from(a) * i128::from(d)).cmp(&(i128::from(c) * i128::from(b)))
                    }
                    _ => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
                }
            }
        }
    }
}

impl PartialOrd for ExtFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str(if self.p.is_positive() { "oo" } else { "-oo" })
        } else if self.q.is_one() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for ExtFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "oo" | "+oo" => return Ok(Self::infinity()),
            "-oo" => return Ok(Self::neg_infinity()),
            _ => {}
        }
        let int = |t: &str| {
            t.parse::<BigInt>()
                .map_err(|_| Error::parse("fraction", format!("{s:?} is not p/q, n, oo or -oo")))
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let (p, q) = (int(p)?, int(q)?);
                if q.is_zero() {
                    return Err(Error::parse(
                        "fraction",
                        "zero denominator, write oo or -oo",
                    ));
                }
                Ok(Self::reduce(p, q))
            }
            None => Ok(Self::integer(int(s)?)),
        }
    }
}

impl serde::Serialize for ExtFraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for ExtFraction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> ExtFraction {
        s.parse().unwrap()
    }

    #[test]
    fn ordering_puts_infinities_at_the_ends() {
        let mut v = [f("oo"), f("1/2"), f("-oo"), f("-3"), f("0")];
        v.sort();
        let shown: Vec<_> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["-oo", "-3", "0", "1/2", "oo"]);
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(ExtFraction::new(4, -6).unwrap(), f("-2/3"));
        assert_eq!(ExtFraction::new(-7, 0).unwrap(), f("-oo"));
        assert!(ExtFraction::new(0, 0).is_err());
        assert!("1/0".parse::<ExtFraction>().is_err());
        assert!("x".parse::<ExtFraction>().is_err());
    }

    #[test]
    fn det_pairing_examples() {
        assert_eq!(f("0").det_pairing(&f("1")), BigInt::from(1));
        assert_eq!(f("-oo").det_pairing(&f("0")), BigInt::from(1));
        assert_eq!(f("1/3").det_pairing(&f("2/5")), BigInt::from(1));
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(f("0").mediant(&f("1")).unwrap(), f("1/2"));
        assert_eq!(f("-oo").mediant(&f("0")).unwrap(), f("-1"));
        let m = f("1/2").mediant(&f("2/3")).unwrap();
        assert_eq!(m, f("3/5"));
        assert_eq!(f("1/2").det_pairing(&m), BigInt::from(1));
        assert_eq!(m.det_pairing(&f("2/3")), BigInt::from(1));
        assert!(f("0").mediant(&f("2")).is_err());
    }

    #[test]
    fn infinities_are_one_cusp() {
        assert!(f("-oo").same_cusp(&f("oo")));
        assert!(!f("-oo").same_cusp(&f("0")));
        assert_ne!(f("-oo"), f("oo"));
    }
}
