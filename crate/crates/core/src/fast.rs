//! Fixed-width fast path for the membership reduction. Every operation is
//! overflow-checked; `None` sends the caller back to the exact path.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::fraction::ExtFraction;
use crate::matrix::ProjectiveMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Mat {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub d: i128,
}

/// `p/q` with `q >= 0`; `(±1, 0)` are the infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Frac {
    pub p: i128,
    pub q: i128,
}

impl Mat {
    pub fn from_matrix(m: &ProjectiveMatrix) -> Option<Mat> {
        let [a, b, c, d] = m.entries().map(BigInt::to_i128);
        Some(Mat {
            a: a?,
            b: b?,
            c: c?,
            d: d?,
        })
    }

    pub fn to_matrix(self) -> ProjectiveMatrix {
        ProjectiveMatrix::new(self.a, self.b, self.c, self.d).expect("unimodular")
    }

    pub fn mul(&self, y: &Mat) -> Option<Mat> {
        let dot =
            |p: i128, q: i128, r: i128, s: i128| p.checked_mul(q)?.checked_add(r.checked_mul(s)?);
        let mut out = Mat {
            a: dot(self.a, y.a, self.b, y.c)?,
            b: dot(self.a, y.b, self.b, y.d)?,
            c: dot(self.c, y.a, self.d, y.c)?,
            d: dot(self.c, y.b, self.d, y.d)?,
        };
        if out.c < 0 || (out.c == 0 && out.d < 0) {
            out = Mat {
                a: -out.a,
                b: -out.b,
                c: -out.c,
                d: -out.d,
            };
        }
        Some(out)
    }

    /// `(self(∞), self(0))`.
    pub fn ends(&self) -> (Frac, Frac) {
        (Frac::coprime(self.a, self.c), Frac::coprime(self.b, self.d))
    }
}

impl Frac {
    fn coprime(p: i128, q: i128) -> Frac {
        match q.cmp(&0) {
            Ordering::Less => Frac { p: -p, q: -q },
            Ordering::Equal => Frac { p: 1, q: 0 },
            Ordering::Greater => Frac { p, q },
        }
    }

    pub fn from_ext(x: &ExtFraction) -> Option<Frac> {
        Some(Frac {
            p: x.numer().to_i128()?,
            q: x.denom().to_i128()?,
        })
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn cmp(&self, other: &Frac) -> Option<Ordering> {
        Some(match (self.q == 0, other.q == 0) {
            (true, true) => self.p.cmp(&other.p),
            (true, false) => self.p.cmp(&0),
            (false, true) => 0.cmp(&other.p),
            (false, false) => self
                .p
                .checked_mul(other.q)?
                .cmp(&other.p.checked_mul(self.q)?),
        })
    }
}

/// The symbol's data in fixed width, when it fits.
#[derive(Clone, Debug)]
pub(crate) struct Tables {
    pub points: Vec<Frac>,
    pub maps: Vec<Mat>,
    /// Mediant and inverse map of each odd edge.
    pub odd: Vec<Option<(Frac, Mat)>>,
}

impl Tables {
    pub fn new(
        points: &[ExtFraction],
        maps: &[ProjectiveMatrix],
        odd: &[Option<(ExtFraction, ProjectiveMatrix)>],
    ) -> Option<Tables> {
        Some(Tables {
            points: points.iter().map(Frac::from_ext).collect::<Option<_>>()?,
            maps: maps.iter().map(Mat::from_matrix).collect::<Option<_>>()?,
            odd: odd
                .iter()
                .map(|o| match o {
                    None => Some(None),
                    Some((x, m)) => Some(Some((Frac::from_ext(x)?, Mat::from_matrix(m)?))),
                })
                .collect::<Option<_>>()?,
        })
    }

    /// Index `k` with `points[k] <= x < points[k + 1]`-style search; returns
    /// `Ok(k)` when `x` is a vertex.
    pub fn search(&self, x: &Frac) -> Option<std::result::Result<usize, usize>> {
        let (mut lo, mut hi) = (0usize, self.points.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.points[mid].cmp(x)? {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(Ok(mid)),
            }
        }
        Some(Err(lo))
    }

    pub fn is_vertex(&self, x: &Frac) -> Option<bool> {
        Some(x.is_infinite() || self.search(x)?.is_ok())
    }
}
