//! Farey symbols: a generalized Farey sequence with a pairing on each edge.
//!
//! The sequence is stored with both formal infinities, so edge `k` always
//! joins `points()[k]` and `points()[k + 1]` for `0 <= k <= n + 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::fast;
use crate::fraction::ExtFraction;
use crate::invariants;
use crate::matrix::{ElementOrder, ProjectiveMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pairing {
    Even,
    Odd,
    Free(u32),
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pairing::Even => f.write_str("e"),
            Pairing::Odd => f.write_str("o"),
            Pairing::Free(n) => write!(f, "{n}"),
        }
    }
}

impl FromStr for Pairing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Pairing::Even),
            "o" => Ok(Pairing::Odd),
            _ => match s.parse::<u32>() {
                Ok(n) if n > 0 && s.bytes().all(|b| b.is_ascii_digit()) => Ok(Pairing::Free(n)),
                _ => Err(Error::parse(
                    "pairing",
                    format!("{s:?} is not e, o or a positive integer"),
                )),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct FareySymbol {
    points: Vec<ExtFraction>,
    pairings: Vec<Pairing>,
    partner: Vec<Option<usize>>,
    /// Side pairing of edge `k`: maps it onto its partner (onto itself for
    /// even and odd edges).
    edge_maps: Vec<ProjectiveMatrix>,
    /// Edge each generator was read from.
    gen_edges: Vec<usize>,
    /// Mediant and inverse side pairing of each odd edge.
    odd_split: Vec<Option<(ExtFraction, ProjectiveMatrix)>>,
    fast: Option<fast::Tables>,
    /// `edge_maps[k] = generators[g]^exp`.
    edge_gen: Vec<(usize, i8)>,
}

impl PartialEq for FareySymbol {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.pairings == other.pairings
    }
}

impl Eq for FareySymbol {}

pub(crate) fn even_generator(x: &ExtFraction, y: &ExtFraction) -> ProjectiveMatrix {
    let (a0, b0, a1, b1) = (x.numer(), x.denom(), y.numer(), y.denom());
    ProjectiveMatrix::canonical(
        a1 * b1 + a0 * b0,
        -(a0 * a0) - a1 * a1,
        b0 * b0 + b1 * b1,
        -(a1 * b1) - a0 * b0,
    )
}

pub(crate) fn odd_generator(x: &ExtFraction, y: &ExtFraction) -> ProjectiveMatrix {
    let (a0, b0, a1, b1) = (x.numer(), x.denom(), y.numer(), y.denom());
    ProjectiveMatrix::canonical(
        a1 * b1 + a0 * b1 + a0 * b0,
        -(a0 * a0) - a0 * a1 - a1 * a1,
        b0 * b0 + b0 * b1 + b1 * b1,
        -(a1 * b1) - a1 * b0 - a0 * b0,
    )
}

/// Maps the edge `(x, y)` onto `(u, w)` reversing orientation: `x ↦ w`,
/// `y ↦ u`.
pub(crate) fn free_generator(
    x: &ExtFraction,
    y: &ExtFraction,
    u: &ExtFraction,
    w: &ExtFraction,
) -> ProjectiveMatrix {
    let (ai, bi, ai1, bi1) = (x.numer(), x.denom(), y.numer(), y.denom());
    let (ak, bk, ak1, bk1) = (u.numer(), u.denom(), w.numer(), w.denom());
    ProjectiveMatrix::canonical(
        ak1 * bi1 + ak * bi,
        -(ak * ai) - ak1 * ai1,
        bk * bi + bk1 * bi1,
        -(ai1 * bk1) - ai * bk,
    )
}

impl FareySymbol {
    /// Validates and builds a symbol from its finite vertices `x₀ … xₙ` and
    /// the `n + 2` edge pairings.
    pub fn new(vertices: Vec<ExtFraction>, pairings: Vec<Pairing>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidSymbol("no finite vertices".into()));
        }
        if let Some(x) = vertices.iter().find(|x| x.is_infinite()) {
            return Err(Error::InvalidSymbol(format!("vertex {x} is not finite")));
        }
        if pairings.len() != vertices.len() + 1 {
            return Err(Error::InvalidSymbol(format!(
                "{} vertices need {} pairings, got {}",
                vertices.len() + 2,
                vertices.len() + 1,
                pairings.len()
            )));
        }
        let mut points = Vec::with_capacity(vertices.len() + 2);
        points.push(ExtFraction::neg_infinity());
        points.extend(vertices);
        points.push(ExtFraction::infinity());

        for k in 0..pairings.len() {
            let det = points[k].det_pairing(&points[k + 1]);
            if !det.is_one() {
                return Err(Error::InvalidEdge {
                    edge: k,
                    reason: format!(
                        "{} and {} have determinant {det}, expected 1",
                        points[k],
                        points[k + 1]
                    ),
                });
            }
        }
        if !points.iter().any(ExtFraction::is_zero) {
            return Err(Error::InvalidSymbol("0 is not a vertex".into()));
        }

        let mut seen: HashMap<u32, Vec<usize>> = HashMap::new();
        for (k, p) in pairings.iter().enumerate() {
            if let Pairing::Free(label) = p {
                if *label == 0 {
                    return Err(Error::InvalidEdge {
                        edge: k,
                        reason: "free label 0".into(),
                    });
                }
                seen.entry(*label).or_default().push(k);
            }
        }
        let mut partner = vec![None; pairings.len()];
        for (label, edges) in &seen {
            if edges.len() != 2 {
                return Err(Error::InvalidEdge {
                    edge: edges[0],
                    reason: format!("free label {label} appears {} times", edges.len()),
                });
            }
            partner[edges[0]] = Some(edges[1]);
            partner[edges[1]] = Some(edges[0]);
        }

        let mut sym = FareySymbol {
            points,
            pairings,
            partner,
            edge_maps: Vec::new(),
            odd_split: Vec::new(),
            fast: None,
            gen_edges: Vec::new(),
            edge_gen: Vec::new(),
        };
        sym.build_generators()?;

        let n = sym.n();
        let e3 = sym.pairings.iter().filter(|p| **p == Pairing::Odd).count();
        if 3 * n + e3 == 0 {
            return Err(Error::InvalidSymbol("degenerate polygon of index 0".into()));
        }
        invariants::compute(&sym).map_err(|e| match e {
            Error::Internal(msg) => Error::InvalidSymbol(msg),
            other => other,
        })?;
        Ok(sym)
    }

    fn build_generators(&mut self) -> Result<()> {
        let count = self.pairings.len();
        let mut edge_maps = Vec::with_capacity(count);
        for k in 0..count {
            let (x, y) = (&self.points[k], &self.points[k + 1]);
            let g = match self.pairings[k] {
                Pairing::Even => even_generator(x, y),
                Pairing::Odd => odd_generator(x, y),
                Pairing::Free(_) => {
                    let j = self.partner[k].expect("free edge has a partner");
                    let g = free_generator(x, y, &self.points[j], &self.points[j + 1]);
                    if g.element_order() != ElementOrder::Infinite {
                        return Err(Error::InvalidEdge {
                            edge: k,
                            reason: format!("free side pairing {g} has finite order"),
                        });
                    }
                    g
                }
            };
            edge_maps.push(g);
        }

        let mut gen_edges = Vec::new();
        let mut index_of_edge = vec![usize::MAX; count];
        for k in 0..count {
            let is_source = match self.partner[k] {
                Some(j) => k < j,
                None => true,
            };
            if is_source {
                index_of_edge[k] = gen_edges.len();
                gen_edges.push(k);
            }
        }
        let edge_gen = (0..count)
            .map(|k| match self.partner[k] {
                Some(j) if j < k => (index_of_edge[j], -1),
                _ => (index_of_edge[k], 1),
            })
            .collect();

        self.odd_split = (0..count)
            .map(|k| {
                (self.pairings[k] == Pairing::Odd).then(|| {
                    let mid = self.points[k]
                        .mediant(&self.points[k + 1])
                        .expect("det 1 edge");
                    (mid, edge_maps[k].inverse())
                })
            })
            .collect();
        self.fast = fast::Tables::new(&self.points, &edge_maps, &self.odd_split);
        self.edge_maps = edge_maps;
        self.gen_edges = gen_edges;
        self.edge_gen = edge_gen;
        Ok(())
    }

    /// The symbol of PSL₂(ℤ): `[-oo 0 oo | e o]`.
    pub fn modular_group() -> Self {
        FareySymbol::new(vec![ExtFraction::zero()], vec![Pairing::Even, Pairing::Odd])
            .expect("base symbol is valid")
    }

    /// The symbol of the index-2 subgroup: `[-oo 0 oo | o o]`.
    pub fn index_two_subgroup() -> Self {
        FareySymbol::new(vec![ExtFraction::zero()], vec![Pairing::Odd, Pairing::Odd])
            .expect("base symbol is valid")
    }

    /// `n`, where the finite vertices are `x₀ … xₙ`.
    pub fn n(&self) -> usize {
        self.points.len() - 3
    }

    pub fn vertices(&self) -> &[ExtFraction] {
        &self.points[1..self.points.len() - 1]
    }

    /// The full sequence `-1/0, x₀, …, xₙ, 1/0`.
    pub fn points(&self) -> &[ExtFraction] {
        &self.points
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    pub fn edge_count(&self) -> usize {
        self.pairings.len()
    }

    pub fn edge(&self, k: usize) -> (&ExtFraction, &ExtFraction) {
        (&self.points[k], &self.points[k + 1])
    }

    pub fn partner(&self, k: usize) -> Option<usize> {
        self.partner[k]
    }

    /// Side pairing transformation read from edge `k`. For a free edge it
    /// maps edge `k` onto its partner, so the two edges of a pair give
    /// mutually inverse matrices.
    pub fn generator_for_edge(&self, k: usize) -> Result<ProjectiveMatrix> {
        self.edge_maps
            .get(k)
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("edge index {k} out of range")))
    }

    pub(crate) fn edge_map(&self, k: usize) -> &ProjectiveMatrix {
        &self.edge_maps[k]
    }

    pub(crate) fn fast_tables(&self) -> Option<&fast::Tables> {
        self.fast.as_ref()
    }

    pub(crate) fn odd_split(&self, k: usize) -> Option<&(ExtFraction, ProjectiveMatrix)> {
        self.odd_split[k].as_ref()
    }

    /// Independent generators: one per even edge, per odd edge and per free
    /// pair (taken from the lower edge of the pair), in edge order.
    pub fn generators(&self) -> Vec<ProjectiveMatrix> {
        self.gen_edges
            .iter()
            .map(|&k| self.edge_maps[k].clone())
            .collect()
    }

    /// Source edge of each entry of [`Self::generators`].
    pub fn generator_edges(&self) -> &[usize] {
        &self.gen_edges
    }

    /// `(g, exp)` with `generator_for_edge(k) = generators()[g]^exp`.
    pub fn edge_generator(&self, k: usize) -> (usize, i8) {
        self.edge_gen[k]
    }

    pub fn is_vertex(&self, x: &ExtFraction) -> bool {
        x.is_infinite() || self.points.binary_search(x).is_ok()
    }

    /// Edge `k` with `points[k] <= lo` and `hi <= points[k + 1]`, if any.
    pub fn enclosing_edge(&self, lo: &ExtFraction, hi: &ExtFraction) -> Option<usize> {
        let k = self.points.partition_point(|p| p <= lo).checked_sub(1)?;
        (k + 1 < self.points.len() && hi <= &self.points[k + 1]).then_some(k)
    }

    pub fn count(&self, kind: fn(&Pairing) -> bool) -> usize {
        self.pairings.iter().filter(|p| kind(p)).count()
    }
}

impl fmt::Display for FareySymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(" |")?;
        for p in &self.pairings {
            write!(f, " {p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for FareySymbol {
    type Err = Error;

    /// `[-oo x₀ … xₙ oo | p₀ … pₙ₊₁]`, whitespace separated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::parse("symbol", "expected [ ... ]"))?;
        let (left, right) = body
            .split_once('|')
            .ok_or_else(|| Error::parse("symbol", "missing '|'"))?;
        let fracs: Vec<&str> = left.split_whitespace().collect();
        if fracs.len() < 3 || fracs[0] != "-oo" || fracs[fracs.len() - 1] != "oo" {
            return Err(Error::parse(
                "symbol",
                "sequence must read -oo x0 ... xn oo",
            ));
        }
        let vertices = fracs[1..fracs.len() - 1]
            .iter()
            .map(|t| {
                let x: ExtFraction = t.parse()?;
                if x.is_infinite() {
                    return Err(Error::parse("symbol", "interior vertices must be finite"));
                }
                Ok(x)
            })
            .collect::<Result<Vec<_>>>()?;
        let pairings = right
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Pairing>>>()?;
        if pairings.len() != vertices.len() + 1 {
            return Err(Error::parse(
                "symbol",
                format!(
                    "{} gaps but {} pairings",
                    vertices.len() + 1,
                    pairings.len()
                ),
            ));
        }
        FareySymbol::new(vertices, pairings)
    }
}

/// Magnitude of `a₁b₂ − a₂b₁`, used by the width formulas.
pub(crate) fn cross(x: &ExtFraction, y: &ExtFraction) -> BigInt {
    (x.numer() * y.denom() - y.numer() * x.denom()).abs()
}
