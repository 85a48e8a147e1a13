//! Words in the generator pairs {L, R} and {E, V}.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::matrix::ProjectiveMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LrLetter {
    L,
    R,
}

impl LrLetter {
    pub fn matrix(self) -> ProjectiveMatrix {
        match self {
            LrLetter::L => ProjectiveMatrix::l(),
            LrLetter::R => ProjectiveMatrix::r(),
        }
    }
}

/// Product `X₁^k₁ X₂^k₂ …` with adjacent letters distinct and every
/// exponent nonzero. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LrWord {
    letters: Vec<(LrLetter, BigInt)>,
}

impl LrWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[(LrLetter, BigInt)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `letter^exp` on the right, merging with the last term.
    pub fn push(&mut self, letter: LrLetter, exp: BigInt) {
        if exp.is_zero() {
            return;
        }
        if let Some((last, e)) = self.letters.last_mut() {
            if *last == letter {
                *e += exp;
                if e.is_zero() {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((letter, exp));
    }

    pub fn to_matrix(&self) -> ProjectiveMatrix {
        let mut acc = ProjectiveMatrix::identity();
        for (letter, exp) in &self.letters {
            // L^k and R^k have a closed form, so large exponents stay cheap.
            let k = exp.clone();
            let factor = match letter {
                LrLetter::L => {
                    ProjectiveMatrix::canonical(BigInt::one(), k, BigInt::zero(), BigInt::one())
                }
                LrLetter::R => {
                    ProjectiveMatrix::canonical(BigInt::one(), BigInt::zero(), k, BigInt::one())
                }
            };
            acc = &acc * &factor;
        }
        acc
    }
}

impl fmt::Display for LrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (letter, exp) in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{letter:?}")?;
            if !exp.is_one() {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvLetter {
    E,
    V,
}

/// Word in `E` (order 2) and `V` (order 3).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvWord {
    letters: Vec<(EvLetter, i8)>,
}

impl EvWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[(EvLetter, i8)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `letter^exp`. A merged exponent is reduced modulo the
    /// letter's order; unmerged exponents are kept as given.
    pub fn push(&mut self, letter: EvLetter, exp: i8) {
        let order = match letter {
            EvLetter::E => 2,
            EvLetter::V => 3,
        };
        if exp.rem_euclid(order) == 0 {
            return;
        }
        if let Some((last, e)) = self.letters.last_mut() {
            if *last == letter {
                let mut s = (*e + exp).rem_euclid(order);
                if s * 2 > order {
                    s -= order;
                }
                if s == 0 {
                    self.letters.pop();
                } else {
                    *e = s;
                }
                return;
            }
        }
        self.letters.push((letter, exp));
    }

    pub fn to_matrix(&self) -> ProjectiveMatrix {
        let (e, v) = (ProjectiveMatrix::e(), ProjectiveMatrix::v());
        self.letters
            .iter()
            .fold(ProjectiveMatrix::identity(), |acc, &(l, k)| {
                let g = match l {
                    EvLetter::E => &e,
                    EvLetter::V => &v,
                };
                &acc * &g.pow(k.to_i64().unwrap())
            })
    }
}

impl fmt::Display for EvWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, exp)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter:?}")?;
            if *exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lr_push_merges_and_cancels() {
        let mut w = LrWord::identity();
        w.push(LrLetter::L, 2.into());
        w.push(LrLetter::L, (-2).into());
        assert!(w.is_empty());
        w.push(LrLetter::R, 3.into());
        w.push(LrLetter::L, 0.into());
        w.push(LrLetter::R, 1.into());
        assert_eq!(w.to_string(), "R^4");
    }

    #[test]
    fn ev_push_reduces_powers() {
        let mut w = EvWord::identity();
        w.push(EvLetter::E, 1);
        w.push(EvLetter::E, 1);
        assert!(w.is_empty());
        w.push(EvLetter::V, 1);
        w.push(EvLetter::V, 1);
        assert_eq!(w.to_string(), "V^-1");
        w.push(EvLetter::V, 1);
        assert!(w.is_empty());
    }

    #[test]
    fn large_exponent_matrix() {
        let mut w = LrWord::identity();
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        w.push(LrLetter::R, big.clone());
        assert_eq!(w.to_matrix().c(), &big);
    }
}
