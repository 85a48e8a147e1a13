//! Permutations of `{1..μ}` and the coset action of `E, V` (or `L, R`).
//!
//! Composition is `(σ∘τ)(i) = σ(τ(i))`, so the action map is a
//! homomorphism: the permutation of a word is applied starting from its last
//! letter. Points are 0-based internally and 1-based in all text and JSON.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::ProjectiveMatrix;
use crate::word::LrLetter;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i]` is the image of point `i` (0-based).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &j in &images {
            if j >= images.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` on `degree` points.
    /// `()` and the empty string denote the identity.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in parse_cycles(text)? {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::parse(
                        "permutation",
                        format!("point {p} outside 1..{degree}"),
                    ));
                }
                if std::mem::replace(&mut touched[p - 1], true) {
                    return Err(Error::parse("permutation", format!("point {p} repeated")));
                }
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let mut images = Vec::with_capacity(self.degree());
        let cycles = self.cycles_with_fixed();
        let mut slot = vec![(0usize, 0usize); self.degree()];
        for (c, cycle) in cycles.iter().enumerate() {
            for (pos, &p) in cycle.iter().enumerate() {
                slot[p] = (c, pos);
            }
        }
        for i in 0..self.degree() {
            let (c, pos) = slot[i];
            let len = cycles[c].len() as i64;
            images.push(cycles[c][(pos as i64 + k).rem_euclid(len) as usize]);
        }
        Permutation { images }
    }

    /// Image of `i` under `self^k` for an arbitrary integer `k`.
    pub fn apply_pow(&self, i: usize, k: &BigInt) -> usize {
        let mut len = 1;
        let mut j = self.images[i];
        while j != i {
            j = self.images[j];
            len += 1;
        }
        let steps = k
            .mod_floor(&BigInt::from(len))
            .to_usize()
            .expect("reduced below cycle length");
        let mut j = i;
        for _ in 0..steps {
            j = self.images[j];
        }
        j
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, j)| i == *j)
            .count()
    }

    /// All cycles including fixed points, each starting at its least point.
    pub fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles_with_fixed().iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .iter()
            .fold(1u64, |acc, &l| acc.lcm(&(l as u64)))
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::parse("permutation", format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::parse("permutation", "unclosed cycle"))?;
        let cycle = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse("permutation", format!("{t:?} is not a point")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            out.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

fn max_point(text: &str) -> Result<usize> {
    Ok(parse_cycles(text)?
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0))
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based, fixed points omitted; the identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles_with_fixed().iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Coset action `e = φ(E)`, `v = φ(V)` together with `l = e∘v⁻¹`,
/// `r = e∘v⁻²` (the images of `L` and `R`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPair {
    e: Permutation,
    v: Permutation,
    l: Permutation,
    r: Permutation,
}

impl PermutationPair {
    pub fn from_ev(e: Permutation, v: Permutation) -> Result<Self> {
        if e.degree() != v.degree() || e.degree() == 0 {
            return Err(Error::InvalidPermutation(format!(
                "e and v act on {} and {} points",
                e.degree(),
                v.degree()
            )));
        }
        if !e.compose(&e).is_identity() {
            return Err(Error::InvalidPermutation(format!(
                "e = {e} does not square to the identity"
            )));
        }
        if !v.compose(&v).compose(&v).is_identity() {
            return Err(Error::InvalidPermutation(format!(
                "v = {v} does not cube to the identity"
            )));
        }
        if !transitive(&e, &v) {
            return Err(Error::InvalidPermutation(
                "e and v do not act transitively".into(),
            ));
        }
        let vi = v.inverse();
        let l = e.compose(&vi);
        let r = l.compose(&vi);
        Ok(PermutationPair { e, v, l, r })
    }

    /// Recovers `v = r⁻¹∘l` and `e = l∘r⁻¹∘l`.
    pub fn from_lr(l: Permutation, r: Permutation) -> Result<Self> {
        if l.degree() != r.degree() {
            return Err(Error::InvalidPermutation(format!(
                "l and r act on {} and {} points",
                l.degree(),
                r.degree()
            )));
        }
        let ri = r.inverse();
        let v = ri.compose(&l);
        let e = l.compose(&ri).compose(&l);
        Self::from_ev(e, v)
    }

    /// Parses `e`/`v` or `l`/`r` cycle strings; the degree is the largest
    /// point mentioned (at least 1).
    pub fn from_cycle_strings(first: &str, second: &str, lr: bool) -> Result<Self> {
        let degree = max_point(first)?.max(max_point(second)?).max(1);
        let x = Permutation::from_cycles(first, degree)?;
        let y = Permutation::from_cycles(second, degree)?;
        if lr {
            Self::from_lr(x, y)
        } else {
            Self::from_ev(x, y)
        }
    }

    pub fn degree(&self) -> usize {
        self.e.degree()
    }

    pub fn e(&self) -> &Permutation {
        &self.e
    }

    pub fn v(&self) -> &Permutation {
        &self.v
    }

    pub fn l(&self) -> &Permutation {
        &self.l
    }

    pub fn r(&self) -> &Permutation {
        &self.r
    }

    /// `φ(A)(i)`, evaluated through the L/R word of `A`.
    pub fn act_matrix(&self, a: &ProjectiveMatrix, i: usize) -> usize {
        a.lr_word()
            .letters()
            .iter()
            .rev()
            .fold(i, |p, (letter, k)| match letter {
                LrLetter::L => self.l.apply_pow(p, k),
                LrLetter::R => self.r.apply_pow(p, k),
            })
    }

    /// Whether `A` lies in the stabilizer of the first point.
    pub fn stabilizes_first(&self, a: &ProjectiveMatrix) -> bool {
        self.act_matrix(a, 0) == 0
    }
}

fn transitive(e: &Permutation, v: &Permutation) -> bool {
    let mut seen = vec![false; e.degree()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in [e.apply(i), v.apply(i)] {
            if !std::mem::replace(&mut seen[j], true) {
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

impl FromStr for PermutationPair {
    type Err = Error;

    /// `l=<cycles>,r=<cycles>` or `e=<cycles>,v=<cycles>`.
    fn from_str(s: &str) -> Result<Self> {
        let mut fields = std::collections::BTreeMap::new();
        for part in s.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(|| {
                Error::parse(
                    "permutation pair",
                    format!("expected key=cycles in {part:?}"),
                )
            })?;
            if fields.insert(k.trim(), v).is_some() {
                return Err(Error::parse(
                    "permutation pair",
                    format!("duplicate key {k:?}"),
                ));
            }
        }
        let keys: Vec<&str> = fields.keys().copied().collect();
        match keys.as_slice() {
            ["l", "r"] => Self::from_cycle_strings(fields["l"], fields["r"], true),
            ["e", "v"] => Self::from_cycle_strings(fields["e"], fields["v"], false),
            _ => Err(Error::parse(
                "permutation pair",
                "expected l=..,r=.. or e=..,v=..",
            )),
        }
    }
}

impl fmt::Display for PermutationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={},v={}", self.e, self.v)
    }
}

impl Serialize for PermutationPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            mu: usize,
            e: Vec<usize>,
            v: Vec<usize>,
            l: Vec<usize>,
            r: Vec<usize>,
        }
        let one_based = |p: &Permutation| p.images.iter().map(|i| i + 1).collect();
        Json {
            mu: self.degree(),
            e: one_based(&self.e),
            v: one_based(&self.v),
            l: one_based(&self.l),
            r: one_based(&self.r),
        }
        .serialize(s)
    }
}

/// Elliptic counts, cusp widths (sorted) and level read off a coset action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermInvariants {
    pub e2: u64,
    pub e3: u64,
    pub cusp_widths: Vec<u64>,
    pub level: u64,
}

pub fn perm_invariants(p: &PermutationPair) -> PermInvariants {
    let mut cusp_widths: Vec<u64> = p.l.cycle_lengths().into_iter().map(|n| n as u64).collect();
    cusp_widths.sort_unstable();
    PermInvariants {
        e2: p.e.fixed_points() as u64,
        e3: p.v.fixed_points() as u64,
        level: p.l.order(),
        cusp_widths,
    }
}
