//! Cusp classes, widths, genus and index of the group of a Farey symbol.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::ExtFraction;
use crate::symbol::{cross, FareySymbol, Pairing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspClass {
    /// Vertices of the polygon lying in this cusp, `oo` first when present.
    pub vertices: Vec<ExtFraction>,
    pub width: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInvariants {
    pub index: u64,
    pub genus: u64,
    pub cusps: u64,
    pub rank: u64,
    pub e2: u64,
    pub e3: u64,
    pub level: u64,
    pub cusp_classes: Vec<CuspClass>,
}

impl GroupInvariants {
    /// Cusp widths in class order.
    pub fn widths(&self) -> Vec<u64> {
        self.cusp_classes.iter().map(|c| c.width).collect()
    }
}

/// Twice the width contributed by each vertex position `1..=n+1`, and by
/// `∞` at position 0. Widths are half-integral next to odd edges.
fn doubled_widths(f: &FareySymbol) -> Vec<BigInt> {
    let pts = f.points();
    let last = pts.len() - 1;
    let odd = |k: usize| u32::from(f.pairings()[k] == Pairing::Odd);
    let mut out = Vec::with_capacity(last);
    out.push(BigInt::from(2) * cross(&pts[last - 1], &pts[1]) + (odd(0) + odd(last - 1)));
    for p in 1..last {
        out.push(BigInt::from(2) * cross(&pts[p - 1], &pts[p + 1]) + (odd(p - 1) + odd(p)));
    }
    out
}

pub(crate) fn compute(f: &FareySymbol) -> Result<GroupInvariants> {
    let pts = f.points();
    let last = pts.len() - 1;
    let n = f.n() as u64;

    let mut uf = UnionFind::<usize>::new(pts.len());
    uf.union(0, last);
    let (mut e2, mut e3, mut free) = (0u64, 0u64, 0u64);
    for (k, p) in f.pairings().iter().enumerate() {
        match p {
            Pairing::Even | Pairing::Odd => {
                if *p == Pairing::Even {
                    e2 += 1;
                } else {
                    e3 += 1;
                }
                uf.union(k, k + 1);
            }
            Pairing::Free(_) => {
                free += 1;
                let j = f.partner(k).expect("free edge has a partner");
                if k < j {
                    uf.union(k, j + 1);
                    uf.union(j, k + 1);
                }
            }
        }
    }
    let rank = free / 2;

    // Position `last` duplicates ∞ and is folded into position 0.
    let doubled = doubled_widths(f);
    let mut roots: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut sums: Vec<BigInt> = Vec::new();
    for p in 0..last {
        let root = uf.find(p);
        let slot = match roots.iter().position(|&r| r == root) {
            Some(s) => s,
            None => {
                roots.push(root);
                members.push(Vec::new());
                sums.push(BigInt::from(0));
                roots.len() - 1
            }
        };
        members[slot].push(p);
        sums[slot] += &doubled[p];
    }

    let mut cusp_classes = Vec::with_capacity(roots.len());
    for (vs, sum) in members.into_iter().zip(sums) {
        let (half, rem) = sum.div_rem(&BigInt::from(2));
        let width = half
            .to_u64()
            .filter(|w| *w > 0 && rem == BigInt::from(0))
            .ok_or_else(|| {
                Error::Internal(format!("cusp class has non-integral or zero width {sum}/2"))
            })?;
        let vertices = vs
            .into_iter()
            .map(|p| {
                if p == 0 {
                    ExtFraction::infinity()
                } else {
                    pts[p].clone()
                }
            })
            .collect();
        cusp_classes.push(CuspClass { vertices, width });
    }

    let t = cusp_classes.len() as u64;
    if (rank + 1) < t || !(rank + 1 - t).is_multiple_of(2) {
        return Err(Error::Internal(format!(
            "genus (r - t + 1)/2 is not a natural number (r = {rank}, t = {t})"
        )));
    }
    let genus = (rank + 1 - t) / 2;
    let index = 3 * n + e3;
    if 3 * e2 + 4 * e3 + 12 * genus + 6 * t != index + 12 {
        return Err(Error::Internal(format!(
            "index formulas disagree: 3n + e3 = {index}, 3e2 + 4e3 + 12g + 6t - 12 = {}",
            (3 * e2 + 4 * e3 + 12 * genus + 6 * t) as i64 - 12
        )));
    }
    let width_sum: u64 = cusp_classes.iter().map(|c| c.width).sum();
    if width_sum != index {
        return Err(Error::Internal(format!(
            "cusp widths sum to {width_sum}, index is {index}"
        )));
    }
    let level = cusp_classes.iter().fold(1u64, |acc, c| acc.lcm(&c.width));

    Ok(GroupInvariants {
        index,
        genus,
        cusps: t,
        rank,
        e2,
        e3,
        level,
        cusp_classes,
    })
}

impl FareySymbol {
    pub fn invariants(&self) -> GroupInvariants {
        compute(self).expect("validated symbols have consistent invariants")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(s: &str) -> GroupInvariants {
        s.parse::<FareySymbol>().unwrap().invariants()
    }

    fn classes(i: &GroupInvariants) -> Vec<(Vec<String>, u64)> {
        i.cusp_classes
            .iter()
            .map(|c| {
                (
                    c.vertices.iter().map(ToString::to_string).collect(),
                    c.width,
                )
            })
            .collect()
    }

    #[test]
    fn gamma_2() {
        let i = inv("[-oo 0 1 2 oo | 1 2 2 1]");
        assert_eq!(
            (i.index, i.cusps, i.genus, i.level, i.e2, i.e3, i.rank),
            (6, 3, 0, 2, 0, 0, 2)
        );
        let c = classes(&i);
        assert_eq!(c[0], (vec!["oo".to_string()], 2));
        assert_eq!(c[1], (vec!["0".to_string(), "2".to_string()], 2));
        assert_eq!(c[2], (vec!["1".to_string()], 2));
    }

    #[test]
    fn modular_group() {
        let i = FareySymbol::modular_group().invariants();
        assert_eq!(
            (i.index, i.e2, i.e3, i.rank, i.cusps, i.genus, i.level),
            (1, 1, 1, 0, 1, 0, 1)
        );
    }

    #[test]
    fn gamma0_2_shape() {
        let i = inv("[-oo 0 1 oo | 1 e 1]");
        assert_eq!((i.index, i.e2, i.cusps, i.genus, i.level), (3, 1, 2, 0, 2));
        assert_eq!(
            classes(&i),
            [(vec!["oo".into()], 1), (vec!["0".into(), "1".into()], 2)]
        );
    }

    #[test]
    fn index_two() {
        let i = FareySymbol::index_two_subgroup().invariants();
        assert_eq!((i.index, i.e2, i.e3, i.cusps, i.level), (2, 0, 2, 1, 2));
    }

    #[test]
    fn json_field_names() {
        let v = serde_json::to_value(inv("[-oo 0 1 oo | 1 e 1]")).unwrap();
        for key in [
            "index",
            "genus",
            "cusps",
            "rank",
            "e2",
            "e3",
            "level",
            "cusp_classes",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["cusp_classes"][1]["vertices"][1], "1");
        assert_eq!(v["cusp_classes"][1]["width"], 2);
    }
}
