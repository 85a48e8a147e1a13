//! Left coset representatives and the coset action of `E` and `V`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::ProjectiveMatrix;
use crate::membership::{reduce, DEFAULT_ITERATION_CAP};
use crate::oracle::index_by_bfs_with;
use crate::perm::{Permutation, PermutationPair};
use crate::symbol::{cross, FareySymbol, Pairing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetReps {
    /// `α₁ = I, α₂, …, α_μ` with `PSL₂(ℤ) = ⋃ αᵢΓ`.
    pub representatives: Vec<ProjectiveMatrix>,
    /// False when the tile list failed validation and BFS was used instead.
    pub from_tiles: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub representatives: Vec<ProjectiveMatrix>,
    pub perm: PermutationPair,
    pub from_tiles: bool,
}

/// `T^{-j} ψ⁻¹` for each cusp vertex and `0 ≤ j < w`, where `ψ` carries
/// `∞, 0` to the vertex and its right neighbour and `w` counts the tiles of
/// the polygon at that vertex.
pub fn tile_representatives(f: &FareySymbol) -> Vec<ProjectiveMatrix> {
    let pts = f.points();
    let last = pts.len() - 1;
    let odd = |k: usize| f.pairings()[k] == Pairing::Odd;
    let t_inv = ProjectiveMatrix::l().inverse();
    let mut out = Vec::new();
    for p in 0..last {
        let (frame, width) = if p == 0 {
            let x0 = pts[1].numer().clone();
            let frame = ProjectiveMatrix::new(BigInt::one(), x0, 0, 1).expect("translation");
            (
                frame,
                cross(&pts[last - 1], &pts[1]) + u32::from(odd(last - 1)),
            )
        } else {
            let (x, next) = (&pts[p], &pts[p + 1]);
            let frame = ProjectiveMatrix::new(
                x.numer().clone(),
                -next.numer(),
                x.denom().clone(),
                -next.denom(),
            )
            .expect("neighbouring vertices have determinant 1");
            (frame, cross(&pts[p - 1], next) + u32::from(odd(p - 1)))
        };
        let mut rep = frame.inverse();
        let mut j = BigInt::from(0);
        while j < width {
            out.push(rep.clone());
            rep = &t_inv * &rep;
            j += 1;
        }
    }
    out
}

/// Checks that `reps` lists every coset exactly once and returns them with
/// the one lying in Γ replaced by `I` and moved to the front, together with
/// the action of `E` and `V`. With exactly `μ` entries it is enough that
/// `E` and `V` map the listed cosets among themselves: their union is then
/// invariant under the whole group, so the `μ` entries cover `μ` cosets.
fn validated(
    f: &FareySymbol,
    mut reps: Vec<ProjectiveMatrix>,
) -> Result<Option<(Vec<ProjectiveMatrix>, Action)>> {
    if reps.len() as u64 != f.invariants().index {
        return Ok(None);
    }
    let members: Vec<usize> = (0..reps.len()).filter(|&i| f.contains(&reps[i])).collect();
    let [first] = members[..] else {
        return Ok(None);
    };
    reps.remove(first);
    reps.insert(0, ProjectiveMatrix::identity());
    match coset_action(f, &reps)? {
        Some(action) => Ok(Some((reps, action))),
        None => Ok(None),
    }
}

/// Images of the listed cosets under `E` and `V`.
type Action = (Vec<usize>, Vec<usize>);

/// Images of each listed coset under `E` and `V`; `None` if one leaves the list.
fn coset_action(f: &FareySymbol, reps: &[ProjectiveMatrix]) -> Result<Option<Action>> {
    let (e, v) = (ProjectiveMatrix::e(), ProjectiveMatrix::v());
    let mut loc = CosetLocator::new(f, reps)?;
    let mut e_img = Vec::with_capacity(reps.len());
    let mut v_img = Vec::with_capacity(reps.len());
    for a in reps {
        let (Some(i), Some(j)) = (loc.locate(&(&e * a))?, loc.locate(&(&v * a))?) else {
            return Ok(None);
        };
        e_img.push(i);
        v_img.push(j);
    }
    Ok(Some((e_img, v_img)))
}

fn tiles_or_bfs(f: &FareySymbol) -> Result<(Vec<ProjectiveMatrix>, Option<Action>)> {
    if let Some((reps, action)) = validated(f, tile_representatives(f))? {
        return Ok((reps, Some(action)));
    }
    let index = f.invariants().index as usize;
    Ok((
        index_by_bfs_with(|m| f.contains(m), index)?.representatives,
        None,
    ))
}

pub fn coset_reps_from_symbol(f: &FareySymbol) -> Result<CosetReps> {
    let (representatives, action) = tiles_or_bfs(f)?;
    Ok(CosetReps {
        representatives,
        from_tiles: action.is_some(),
    })
}

/// Finds the representative of `βΓ`. Reducing `β⁻¹ = w·m` with `w ∈ Γ`
/// gives `βΓ = m⁻¹Γ`, so the terminal matrix `m` is a sound cache key.
struct CosetLocator<'a> {
    f: &'a FareySymbol,
    reps: &'a [ProjectiveMatrix],
    inverses: Vec<ProjectiveMatrix>,
    cache: HashMap<ProjectiveMatrix, usize>,
}

impl<'a> CosetLocator<'a> {
    fn new(f: &'a FareySymbol, reps: &'a [ProjectiveMatrix]) -> Result<Self> {
        let mut loc = CosetLocator {
            f,
            reps,
            inverses: reps.iter().map(ProjectiveMatrix::inverse).collect(),
            cache: HashMap::new(),
        };
        for (j, rep) in reps.iter().enumerate() {
            let key = loc.key(rep)?;
            loc.cache.entry(key).or_insert(j);
        }
        Ok(loc)
    }

    fn key(&self, beta: &ProjectiveMatrix) -> Result<ProjectiveMatrix> {
        Ok(reduce(self.f, &beta.inverse(), DEFAULT_ITERATION_CAP)?.1)
    }

    fn locate(&mut self, beta: &ProjectiveMatrix) -> Result<Option<usize>> {
        let key = self.key(beta)?;
        if let Some(&j) = self.cache.get(&key) {
            return Ok(Some(j));
        }
        let found = (0..self.reps.len()).find(|&j| self.f.contains(&(&self.inverses[j] * beta)));
        if let Some(j) = found {
            self.cache.insert(key, j);
        }
        Ok(found)
    }
}

/// Coset action on the representatives: `γ αᵢ Γ = α_{σ_γ(i)} Γ`.
pub fn perm_rep(f: &FareySymbol) -> Result<CosetTable> {
    let (representatives, action) = tiles_or_bfs(f)?;
    let from_tiles = action.is_some();
    let (e_img, v_img) = match action {
        Some(action) => action,
        None => coset_action(f, &representatives)?
            .ok_or_else(|| Error::Internal("a coset image lies outside the BFS list".into()))?,
    };
    let broken = |e: Error| Error::Internal(format!("coset action is inconsistent: {e}"));
    let perm = PermutationPair::from_ev(
        Permutation::from_images(e_img).map_err(broken)?,
        Permutation::from_images(v_img).map_err(broken)?,
    )
    .map_err(broken)?;
    Ok(CosetTable {
        representatives,
        perm,
        from_tiles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm_invariants;

    fn gamma2() -> FareySymbol {
        "[-oo 0 1 2 oo | 1 2 2 1]".parse().unwrap()
    }

    #[test]
    fn small_rep_lists() {
        let psl = coset_reps_from_symbol(&FareySymbol::modular_group()).unwrap();
        assert_eq!(psl.representatives, [ProjectiveMatrix::identity()]);
        assert!(psl.from_tiles);

        let two = coset_reps_from_symbol(&FareySymbol::index_two_subgroup()).unwrap();
        assert_eq!(two.representatives.len(), 2);
        assert!(two.from_tiles);

        let g2 = coset_reps_from_symbol(&gamma2()).unwrap();
        assert_eq!(g2.representatives.len(), 6);
        assert!(g2.from_tiles);
        assert!(g2.representatives[0].is_identity());
    }

    #[test]
    fn permutation_representations() {
        let psl = perm_rep(&FareySymbol::modular_group()).unwrap().perm;
        assert_eq!(psl.degree(), 1);

        let two = perm_rep(&FareySymbol::index_two_subgroup()).unwrap().perm;
        assert_eq!(two.e().to_string(), "(1 2)");
        assert!(two.v().is_identity());

        let g2 = perm_rep(&gamma2()).unwrap().perm;
        let i = perm_invariants(&g2);
        assert_eq!((i.e2, i.e3, i.level), (0, 0, 2));
        assert_eq!(i.cusp_widths, [2, 2, 2]);
    }
}
