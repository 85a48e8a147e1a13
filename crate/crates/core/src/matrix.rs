//! Elements of PSL₂(ℤ) with exact integer entries.
//!
//! Every [`ProjectiveMatrix`] is stored as the sign representative with
//! `c > 0`, or `c = 0` and `d > 0`, so equality of group elements is plain
//! field-wise equality.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fraction::ExtFraction;
use crate::word::{EvLetter, EvWord, LrLetter, LrWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// Order of an element of PSL₂(ℤ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    One,
    Two,
    Three,
    Infinite,
}

impl ProjectiveMatrix {
    /// Canonicalizes a raw `[[a, b], [c, d]]` of determinant one.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::Determinant(det.to_string()));
        }
        Ok(Self::canonical(a, b, c, d))
    }

    pub(crate) fn canonical(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        debug_assert!((&a * &d - &b * &c).is_one());
        if c.is_negative() || (c.is_zero() && d.is_negative()) {
            ProjectiveMatrix {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            ProjectiveMatrix { a, b, c, d }
        }
    }

    fn small(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::canonical(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::small(1, 0, 0, 1)
    }

    /// Order-2 generator, `[[0, 1], [-1, 0]]`.
    pub fn e() -> Self {
        Self::small(0, 1, -1, 0)
    }

    /// Order-3 generator, `[[1, 1], [-1, 0]]`.
    pub fn v() -> Self {
        Self::small(1, 1, -1, 0)
    }

    pub fn l() -> Self {
        Self::small(1, 1, 0, 1)
    }

    pub fn r() -> Self {
        Self::small(1, 0, 1, 1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        Self::canonical(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = Self::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Möbius action on P¹(ℚ). Infinite images are reported as `1/0`.
    pub fn act(&self, x: &ExtFraction) -> ExtFraction {
        let (p, q) = (x.numer(), x.denom());
        let num = &self.a * p + &self.b * q;
        let den = &self.c * p + &self.d * q;
        if den.is_zero() {
            ExtFraction::infinity()
        } else {
            ExtFraction::reduce(num, den)
        }
    }

    /// `self(∞)`, the cusp named by the first column.
    pub fn image_of_infinity(&self) -> ExtFraction {
        ExtFraction::coprime(self.a.clone(), self.c.clone())
    }

    /// `self(0)`, the cusp named by the second column.
    pub fn image_of_zero(&self) -> ExtFraction {
        ExtFraction::coprime(self.b.clone(), self.d.clone())
    }

    pub fn element_order(&self) -> ElementOrder {
        if self.is_identity() {
            return ElementOrder::One;
        }
        let t = self.trace().abs();
        if t.is_zero() {
            ElementOrder::Two
        } else if t.is_one() {
            ElementOrder::Three
        } else {
            ElementOrder::Infinite
        }
    }

    /// Word in `L = [[1,1],[0,1]]` and `R = [[1,0],[1,1]]` whose product is
    /// `self`, found by Euclidean reduction of the first column.
    pub fn lr_word(&self) -> LrWord {
        let (mut a, mut b, mut c, mut d) = (
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        );
        let mut word = LrWord::identity();
        // invariant: self = word * [[a, b], [c, d]]
        loop {
            if c.is_zero() {
                // ±[[1, b/a], [0, 1]] with a = ±1
                word.push(LrLetter::L, &b * &a);
                return word;
            }
            if a.is_zero() {
                // ±E·L^(cd), and E = L R⁻¹ L
                word.push(LrLetter::L, BigInt::one());
                word.push(LrLetter::R, -BigInt::one());
                word.push(LrLetter::L, BigInt::one() + &c * &d);
                return word;
            }
            if a.magnitude() > c.magnitude() {
                let q = &a / &c;
                a -= &q * &c;
                b -= &q * &d;
                word.push(LrLetter::L, q);
            } else {
                let q = &c / &a;
                c -= &q * &a;
                d -= &q * &b;
                word.push(LrLetter::R, q);
            }
        }
    }

    /// Word in `E` and `V`, obtained letter-wise from [`Self::lr_word`] via
    /// `L = E V⁻¹` and `R = E V⁻²`.
    pub fn ev_word(&self) -> EvWord {
        use num_traits::ToPrimitive;
        let mut out = EvWord::identity();
        for (letter, exp) in self.lr_word().letters() {
            let reps = exp
                .magnitude()
                .to_u64()
                .expect("exponent too large to expand into an E/V word");
            let forward: &[(EvLetter, i8)] = match letter {
                LrLetter::L => &[(EvLetter::E, 1), (EvLetter::V, -1)],
                LrLetter::R => &[(EvLetter::E, 1), (EvLetter::V, -2)],
            };
            for _ in 0..reps {
                if exp.is_positive() {
                    for &(l, e) in forward {
                        out.push(l, e);
                    }
                } else {
                    for &(l, e) in forward.iter().rev() {
                        out.push(l, -e);
                    }
                }
            }
        }
        out
    }
}

impl Mul for &ProjectiveMatrix {
    type Output = ProjectiveMatrix;

    fn mul(self, y: &ProjectiveMatrix) -> ProjectiveMatrix {
        let x = self;
        ProjectiveMatrix::canonical(
            &x.a * &y.a + &x.b * &y.c,
            &x.a * &y.b + &x.b * &y.d,
            &x.c * &y.a + &x.d * &y.c,
            &x.c * &y.b + &x.d * &y.d,
        )
    }
}

impl Mul for ProjectiveMatrix {
    type Output = ProjectiveMatrix;

    fn mul(self, y: ProjectiveMatrix) -> ProjectiveMatrix {
        &self * &y
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for ProjectiveMatrix {
    type Err = Error;

    /// Parses `a,b,c,d` (row-major).
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::parse(
                "matrix",
                format!("expected a,b,c,d, got {s:?}"),
            ));
        }
        let mut v = Vec::with_capacity(4);
        for p in parts {
            v.push(
                p.parse::<BigInt>()
                    .map_err(|_| Error::parse("matrix", format!("{p:?} is not an integer")))?,
            );
        }
        let d = v.pop().unwrap();
        let c = v.pop().unwrap();
        let b = v.pop().unwrap();
        let a = v.pop().unwrap();
        ProjectiveMatrix::new(a, b, c, d)
    }
}

impl serde::Serialize for ProjectiveMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for ProjectiveMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> ProjectiveMatrix {
        ProjectiveMatrix::new(a, b, c, d).unwrap()
    }

    fn raw(x: &ProjectiveMatrix) -> [i64; 4] {
        use num_traits::ToPrimitive;
        x.entries().map(|e| e.to_i64().unwrap())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(raw(&m(1, 0, 0, 1)), [1, 0, 0, 1]);
        assert_eq!(raw(&m(0, 1, -1, 0)), [0, -1, 1, 0]);
        assert_eq!(raw(&m(-3, 2, -2, 1)), [3, -2, 2, -1]);
        assert_eq!(m(-1, 0, 0, -1), ProjectiveMatrix::identity());
        assert!(matches!(
            ProjectiveMatrix::new(2, 0, 0, 1),
            Err(Error::Determinant(_))
        ));
    }

    #[test]
    fn group_law_examples() {
        let (e, v, l) = (
            ProjectiveMatrix::e(),
            ProjectiveMatrix::v(),
            ProjectiveMatrix::l(),
        );
        assert!((&l * &l.inverse()).is_identity());
        assert!((&e * &e).is_identity());
        assert!((&v * &(&v * &v)).is_identity());
        assert_eq!(l.pow(5), m(1, 5, 0, 1));
        assert_eq!(l.pow(-3), m(1, -3, 0, 1));
    }

    #[test]
    fn act_examples() {
        let inf = ExtFraction::infinity();
        assert_eq!(ProjectiveMatrix::e().act(&inf), ExtFraction::zero());
        assert_eq!(ProjectiveMatrix::l().act(&inf), inf);
        assert_eq!(
            m(3, -2, 2, -1).act(&ExtFraction::zero()),
            ExtFraction::integer(2)
        );
        assert_eq!(ProjectiveMatrix::e().act(&ExtFraction::zero()), inf);
    }

    #[test]
    fn lr_word_examples() {
        assert_eq!(ProjectiveMatrix::l().lr_word().to_string(), "L");
        assert_eq!(ProjectiveMatrix::r().lr_word().to_string(), "R");
        assert_eq!(ProjectiveMatrix::e().lr_word().to_string(), "L R^-1 L");
        assert!(ProjectiveMatrix::identity().lr_word().is_empty());
        let g = m(3, -2, 2, -1);
        assert_eq!(g.lr_word().to_matrix(), g);
    }

    #[test]
    fn ev_word_examples() {
        assert_eq!(ProjectiveMatrix::l().ev_word().to_string(), "E V^-1");
        assert_eq!(ProjectiveMatrix::r().ev_word().to_string(), "E V^-2");
        assert!(ProjectiveMatrix::identity().ev_word().is_empty());
        let e = ProjectiveMatrix::e().ev_word().to_matrix();
        assert!((&e * &e).is_identity());
    }

    #[test]
    fn orders() {
        assert_eq!(
            ProjectiveMatrix::identity().element_order(),
            ElementOrder::One
        );
        assert_eq!(ProjectiveMatrix::e().element_order(), ElementOrder::Two);
        assert_eq!(ProjectiveMatrix::v().element_order(), ElementOrder::Three);
        assert_eq!(
            ProjectiveMatrix::l().element_order(),
            ElementOrder::Infinite
        );
    }

    #[test]
    fn parse_and_display() {
        let g: ProjectiveMatrix = "-3, 2,-2,1".parse().unwrap();
        assert_eq!(g.to_string(), "3,-2,2,-1");
        assert!("1,2,3".parse::<ProjectiveMatrix>().is_err());
        assert!("1,1,1,1".parse::<ProjectiveMatrix>().is_err());
    }
}
