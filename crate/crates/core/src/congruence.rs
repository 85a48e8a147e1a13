//! Congruence tests: relations on the `L, R` coset action, and containment
//! of the principal congruence subgroup of the same level.

use num_integer::Integer;
use serde::Serialize;

use crate::construct::construct_symbol;
use crate::error::{Error, Result};
use crate::oracle::GroupSpec;
use crate::perm::{Permutation, PermutationPair};
use crate::symbol::FareySymbol;

/// Largest index of `Γ(N)` the containment test will build by default.
pub const DEFAULT_PRINCIPAL_INDEX_CAP: u64 = 6000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Congruence,
    Noncongruence,
    /// `Γ(level)` has index above the cap.
    Inconclusive {
        level: u64,
        index: u64,
    },
}

impl Verdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Congruence => Some(true),
            Verdict::Noncongruence => Some(false),
            Verdict::Inconclusive { .. } => None,
        }
    }
}

/// `x₁^k₁ ∘ x₂^k₂ ∘ …`, the image of the corresponding word.
fn word(parts: &[(&Permutation, i64)]) -> Permutation {
    let degree = parts[0].0.degree();
    parts
        .iter()
        .fold(Permutation::identity(degree), |acc, (p, k)| {
            acc.compose(&p.pow(*k))
        })
}

fn inverse_mod(a: i64, n: i64) -> i64 {
    let g = a.extended_gcd(&n);
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(n)
}

/// Relation test on the `L, R` action; `N` is the order of `l`.
///
/// Odd `N`: `(r² l^{-1/2})³ = 1`. `N = 2^k`: with `s = l²⁰ r^{1/5} l⁻⁴ r⁻¹`
/// and `x = l r⁻¹ l`, `[x⁻¹ s x s]`, `s⁻¹ r s r⁻²⁵` and `(s r⁵ l r⁻¹ l)³`
/// vanish. Mixed `N = e·m` (`e` a power of 2, `m` odd) splits `l, r` by
/// the idempotents of `ℤ/N` and combines both lists.
pub fn congruence_hsu(p: &PermutationPair) -> bool {
    let n = p.l().order() as i64;
    if n == 1 {
        return true;
    }
    let (l, r) = (p.l(), p.r());
    let e = 1i64 << n.trailing_zeros();
    let m = n / e;
    if e == 1 {
        let half = inverse_mod(2, n);
        let t = word(&[(r, 2), (l, -half)]);
        return word(&[(&t, 3)]).is_identity();
    }
    if m == 1 {
        let fifth = inverse_mod(5, n);
        let s = word(&[(l, 20), (r, fifth), (l, -4), (r, -1)]);
        let x = word(&[(l, 1), (r, -1), (l, 1)]);
        return word(&[(&x, -1), (&s, 1), (&x, 1), (&s, 1)]).is_identity()
            && word(&[(&s, -1), (r, 1), (&s, 1), (r, -25)]).is_identity()
            && word(&[(&word(&[(&s, 1), (r, 5), (l, 1), (r, -1), (l, 1)]), 3)]).is_identity();
    }

    // c ≡ 0 (mod e), c ≡ 1 (mod m); d ≡ 1 (mod e), d ≡ 0 (mod m)
    let c = (m * inverse_mod(m, e)) % n;
    let c = (n + 1 - c) % n;
    let d = (1 - c).rem_euclid(n);
    let (a, b) = (l.pow(c), r.pow(c));
    let (l2, r2) = (l.pow(d), r.pow(d));
    let half = inverse_mod(2, m);
    let fifth = inverse_mod(5, e);
    let s = word(&[(&l2, 20), (&r2, fifth), (&l2, -4), (&r2, -1)]);
    let x = word(&[(&l2, 1), (&r2, -1), (&l2, 1)]);
    let aba = word(&[(&a, 1), (&b, -1), (&a, 1)]);
    let aba2 = aba.pow(2);
    word(&[(&a, 1), (&r2, 1), (&a, -1), (&r2, -1)]).is_identity()
        && aba.pow(4).is_identity()
        && aba2 == word(&[(&b, -1), (&a, 1)]).pow(3)
        && aba2 == word(&[(&b, 2), (&a, -half)]).pow(3)
        && word(&[(&x, -1), (&s, 1), (&x, 1), (&s, 1)]).is_identity()
        && word(&[(&s, -1), (&r2, 1), (&s, 1), (&r2, -25)]).is_identity()
        && x.pow(2) == word(&[(&s, 1), (&r2, 5), (&l2, 1), (&r2, -1), (&l2, 1)]).pow(3)
}

/// `[PSL₂(ℤ) : Γ(N)]`.
pub fn principal_index(n: u64) -> u64 {
    if n <= 2 {
        return [1, 1, 6][n as usize];
    }
    let mut index = n * n * n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            index = index / (p * p) * (p * p - 1);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        index = index / (rest * rest) * (rest * rest - 1);
    }
    index / 2
}

/// Builds a symbol for `Γ(N)`, `N` the level, and tests its generators.
pub fn congruence_wohlfahrt(f: &FareySymbol, index_cap: u64) -> Result<Verdict> {
    let level = f.invariants().level;
    if level == 1 {
        return Ok(Verdict::Congruence);
    }
    let index = principal_index(level);
    if index > index_cap {
        return Ok(Verdict::Inconclusive { level, index });
    }
    let max_edges = (index / 3 + 3) as usize;
    let principal = construct_symbol(&GroupSpec::Gamma(level), max_edges)
        .map_err(|e| Error::Internal(format!("could not build a symbol for gamma:{level}: {e}")))?;
    let all = principal.generators().iter().all(|g| f.contains(g));
    Ok(if all {
        Verdict::Congruence
    } else {
        Verdict::Noncongruence
    })
}
