//! Membership in the group of a Farey symbol, with a word certificate.
//!
//! The even line `A(H₀,∞)` is pushed back toward the polygon one side
//! pairing at a time until both of its endpoints are vertices; the
//! remaining matrix then decides membership.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fast::{Frac, Mat, Tables};
use crate::fraction::ExtFraction;
use crate::matrix::ProjectiveMatrix;
use crate::symbol::{FareySymbol, Pairing};

pub const DEFAULT_ITERATION_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Terminal {
    Identity,
    FreePairedWithZeroInfinity,
    EvenZeroInfinity,
    NotMember,
}

/// A word is a list of `(generator index, ±1)`; see
/// [`FareySymbol::generators`] for the indexing.
pub type Word = Vec<(usize, i8)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    pub verdict: bool,
    /// When `verdict` holds, the product of this word is the queried matrix.
    pub word: Word,
    pub terminal: Terminal,
    pub steps: u64,
}

pub fn contains(f: &FareySymbol, a: &ProjectiveMatrix) -> Result<MembershipCertificate> {
    contains_with_cap(f, a, DEFAULT_ITERATION_CAP)
}

pub fn contains_with_cap(
    f: &FareySymbol,
    a: &ProjectiveMatrix,
    cap: u64,
) -> Result<MembershipCertificate> {
    let (mut word, m, steps) = reduce(f, a, cap)?;
    let terminal = classify(f, &m);
    match terminal {
        Terminal::FreePairedWithZeroInfinity | Terminal::EvenZeroInfinity => {
            let z = zero_infinity_edge(f).expect("terminal case needs the (0, oo) edge");
            word.push(f.edge_generator(z));
        }
        _ => {}
    }
    let verdict = terminal != Terminal::NotMember;
    if !verdict {
        word.clear();
    }
    Ok(MembershipCertificate {
        verdict,
        word,
        terminal,
        steps,
    })
}

/// Writes `a = w · m` with `w` a word in the generators and `m` carrying
/// `H₀,∞` onto a line between two vertices of the polygon.
pub(crate) fn reduce(
    f: &FareySymbol,
    a: &ProjectiveMatrix,
    cap: u64,
) -> Result<(Word, ProjectiveMatrix, u64)> {
    if let (Some(t), Some(m)) = (f.fast_tables(), Mat::from_matrix(a)) {
        if let Some(done) = reduce_fast(f, t, m, cap) {
            return done;
        }
    }
    reduce_exact(f, a, cap)
}

/// Same iteration as [`reduce_exact`] in `i128`; `None` on overflow.
fn reduce_fast(
    f: &FareySymbol,
    t: &Tables,
    mut m: Mat,
    cap: u64,
) -> Option<Result<(Word, ProjectiveMatrix, u64)>> {
    let x0 = t.points[1];
    let last = t.points.len() - 1;
    let mut word: Word = Vec::new();
    let mut steps = 0u64;
    loop {
        let (hi_end, lo_end) = m.ends();
        if t.is_vertex(&hi_end)? && t.is_vertex(&lo_end)? {
            break;
        }
        if steps >= cap {
            return Some(Err(Error::IterationCap { cap }));
        }
        steps += 1;
        let outside = |x: Frac| -> Option<(Frac, Frac)> {
            Some(if x.is_infinite() || x.cmp(&x0)?.is_ge() {
                (x, Frac { p: 1, q: 0 })
            } else {
                (Frac { p: -1, q: 0 }, x)
            })
        };
        let (lo, hi) = if hi_end.is_infinite() {
            outside(lo_end)?
        } else if lo_end.is_infinite() {
            outside(hi_end)?
        } else if lo_end.cmp(&hi_end)?.is_lt() {
            (lo_end, hi_end)
        } else {
            (hi_end, lo_end)
        };
        // edge j with points[j] <= lo and hi <= points[j + 1]
        let j = match t.search(&lo)? {
            Ok(k) => k,
            Err(k) => k.checked_sub(1)?,
        };
        if j >= last || t.points[j + 1].cmp(&hi)?.is_lt() {
            return Some(Err(Error::Internal(
                "even line crosses a side of the polygon".into(),
            )));
        }
        let (g, exp) = f.edge_generator(j);
        let (alpha, inv) = match (f.pairings()[j], &t.odd[j]) {
            (Pairing::Odd, Some((mid, g_inv))) if hi.cmp(mid)?.is_le() => (g_inv, exp),
            (Pairing::Even, _) => (&t.maps[j], 1),
            _ => (&t.maps[j], -exp),
        };
        word.push((g, inv));
        m = alpha.mul(&m)?;
    }
    Some(Ok((word, m.to_matrix(), steps)))
}

fn reduce_exact(
    f: &FareySymbol,
    a: &ProjectiveMatrix,
    cap: u64,
) -> Result<(Word, ProjectiveMatrix, u64)> {
    let pts = f.points();
    let x0 = &pts[1];
    let mut m = a.clone();
    // inverses of the α_k, in order
    let mut word: Word = Vec::new();
    let mut steps = 0u64;
    loop {
        let hi_end = m.image_of_infinity();
        let lo_end = m.image_of_zero();
        if f.is_vertex(&hi_end) && f.is_vertex(&lo_end) {
            break;
        }
        if steps >= cap {
            return Err(Error::IterationCap { cap });
        }
        steps += 1;

        let (lo, hi) = if hi_end.is_infinite() {
            order_with_infinity(lo_end, x0)
        } else if lo_end.is_infinite() {
            order_with_infinity(hi_end, x0)
        } else if lo_end < hi_end {
            (lo_end, hi_end)
        } else {
            (hi_end, lo_end)
        };
        let j = f.enclosing_edge(&lo, &hi).ok_or_else(|| {
            Error::Internal(format!(
                "even line ({lo}, {hi}) crosses a side of the polygon"
            ))
        })?;
        let (g, exp) = f.edge_generator(j);
        let (alpha, inv) = match (f.pairings()[j], f.odd_split(j)) {
            // G cycles x ↦ mid ↦ y about the odd corner and carries the
            // half-side at y onto the one at x, so the tile beyond the half
            // next to x is G(P) and is pulled back by G⁻¹.
            (Pairing::Odd, Some((mid, g_inv))) if hi <= *mid => (g_inv, exp),
            // even side pairings are involutions; keep their exponent positive
            (Pairing::Even, _) => (f.edge_map(j), 1),
            _ => (f.edge_map(j), -exp),
        };
        word.push((g, inv));
        m = alpha * &m;
    }
    Ok((word, m, steps))
}

/// Interval on the extended line spanned by the vertical line at `x`,
/// oriented so that it lies outside the polygon's vertical sides.
fn order_with_infinity(x: ExtFraction, x0: &ExtFraction) -> (ExtFraction, ExtFraction) {
    if x.is_infinite() || &x >= x0 {
        (x, ExtFraction::infinity())
    } else {
        (ExtFraction::neg_infinity(), x)
    }
}

/// The side of the polygon lying on the geodesic from 0 to ∞, if any.
fn zero_infinity_edge(f: &FareySymbol) -> Option<usize> {
    let pts = f.points();
    if pts[1].is_zero() {
        Some(0)
    } else if pts[pts.len() - 2].is_zero() {
        Some(pts.len() - 2)
    } else {
        None
    }
}

fn classify(f: &FareySymbol, m: &ProjectiveMatrix) -> Terminal {
    if m.is_identity() {
        return Terminal::Identity;
    }
    let Some(z) = zero_infinity_edge(f) else {
        return Terminal::NotMember;
    };
    match f.pairings()[z] {
        Pairing::Even if *m == ProjectiveMatrix::e() => Terminal::EvenZeroInfinity,
        Pairing::Free(_) if m == f.edge_map(z) => Terminal::FreePairedWithZeroInfinity,
        _ => Terminal::NotMember,
    }
}

pub fn word_to_matrix(f: &FareySymbol, word: &[(usize, i8)]) -> Result<ProjectiveMatrix> {
    let gens = f.generators();
    let mut acc = ProjectiveMatrix::identity();
    for &(g, e) in word {
        let x = gens
            .get(g)
            .ok_or_else(|| Error::InvalidArgument(format!("generator index {g} out of range")))?;
        acc = &acc * &x.pow(i64::from(e));
    }
    Ok(acc)
}

/// Renders a word as `g3^-1 g1 g1` with 1-based generator numbers.
pub fn format_word(word: &[(usize, i8)]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|&(g, e)| {
            if e == 1 {
                format!("g{}", g + 1)
            } else {
                format!("g{}^{e}", g + 1)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl FareySymbol {
    /// Membership verdict only.
    pub fn contains(&self, a: &ProjectiveMatrix) -> bool {
        contains(self, a)
            .expect("membership terminates on validated symbols")
            .verdict
    }
}
