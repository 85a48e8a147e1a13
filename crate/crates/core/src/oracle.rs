//! Groups given by a membership predicate, and coset enumeration by BFS.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ProjectiveMatrix;
use crate::perm::PermutationPair;
use crate::symbol::FareySymbol;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Gamma0(u64),
    Gamma1(u64),
    Gamma(u64),
    /// Stabilizer of the first point under a transitive coset action.
    Perm(PermutationPair),
    Symbol(FareySymbol),
}

impl GroupSpec {
    /// Congruence conditions are tested on both sign lifts of `a`.
    pub fn is_member(&self, a: &ProjectiveMatrix) -> bool {
        match self {
            GroupSpec::Gamma0(n) => divides(*n, a.c()),
            GroupSpec::Gamma1(n) => {
                divides(*n, a.c()) && {
                    let n = BigInt::from(*n);
                    let (x, y) = (a.a().mod_floor(&n), a.d().mod_floor(&n));
                    x == y && (x == BigInt::one().mod_floor(&n) || x == (&n - 1u32).mod_floor(&n))
                }
            }
            GroupSpec::Gamma(n) => {
                divides(*n, a.b()) && divides(*n, a.c()) && {
                    let n = BigInt::from(*n);
                    let (x, y) = (a.a().mod_floor(&n), a.d().mod_floor(&n));
                    x == y && (x == BigInt::one().mod_floor(&n) || x == (&n - 1u32).mod_floor(&n))
                }
            }
            GroupSpec::Perm(p) => p.stabilizes_first(a),
            GroupSpec::Symbol(f) => f.contains(a),
        }
    }

    /// Default bound on the index: `10·N³` for the congruence families, the
    /// exact index otherwise.
    pub fn default_cap(&self) -> usize {
        match self {
            GroupSpec::Gamma0(n) | GroupSpec::Gamma1(n) | GroupSpec::Gamma(n) => {
                (10 * n.pow(3)) as usize
            }
            GroupSpec::Perm(p) => p.degree(),
            GroupSpec::Symbol(f) => f.invariants().index as usize,
        }
    }
}

fn divides(n: u64, x: &BigInt) -> bool {
    (x % BigInt::from(n)).is_zero()
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Gamma0(n) => write!(f, "gamma0:{n}"),
            GroupSpec::Gamma1(n) => write!(f, "gamma1:{n}"),
            GroupSpec::Gamma(n) => write!(f, "gamma:{n}"),
            GroupSpec::Perm(p) => write!(f, "perm:{p}"),
            GroupSpec::Symbol(s) => write!(f, "symbol:{s}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::parse("group", format!("expected <kind>:<data>, got {s:?}")))?;
        let level = || -> Result<u64> {
            match rest.trim().parse::<u64>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(Error::parse(
                    "group",
                    format!("level {rest:?} is not a positive integer"),
                )),
            }
        };
        match kind.trim() {
            "gamma0" => Ok(GroupSpec::Gamma0(level()?)),
            "gamma1" => Ok(GroupSpec::Gamma1(level()?)),
            "gamma" => Ok(GroupSpec::Gamma(level()?)),
            "perm" => Ok(GroupSpec::Perm(rest.parse()?)),
            "symbol" => Ok(GroupSpec::Symbol(rest.parse()?)),
            other => Err(Error::parse(
                "group",
                format!("unknown group kind {other:?}"),
            )),
        }
    }
}

/// Left coset representatives `α₁ = I, α₂, …` in BFS order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsCosets {
    pub representatives: Vec<ProjectiveMatrix>,
    /// `action[i] = (e(i), v(i))`: `E·αᵢ ∈ α_{e(i)}Γ`, likewise for `V`.
    pub action: Vec<(usize, usize)>,
}

impl BfsCosets {
    pub fn index(&self) -> usize {
        self.representatives.len()
    }
}

/// Closes `{I}` under left multiplication by `E` then `V`, identifying
/// `αΓ = βΓ` when `β⁻¹α ∈ Γ`.
pub fn index_by_bfs(spec: &GroupSpec, cap: usize) -> Result<BfsCosets> {
    index_by_bfs_with(|m| spec.is_member(m), cap)
}

pub fn index_by_bfs_with(
    member: impl Fn(&ProjectiveMatrix) -> bool,
    cap: usize,
) -> Result<BfsCosets> {
    let gens = [ProjectiveMatrix::e(), ProjectiveMatrix::v()];
    let mut reps = vec![ProjectiveMatrix::identity()];
    let mut inverses = vec![ProjectiveMatrix::identity()];
    let mut action = Vec::new();
    let mut next = 0;
    while next < reps.len() {
        let mut images = [0usize; 2];
        for (slot, g) in gens.iter().enumerate() {
            let beta = g * &reps[next];
            let found = inverses.iter().position(|inv| member(&(inv * &beta)));
            images[slot] = match found {
                Some(j) => j,
                None => {
                    if reps.len() >= cap {
                        return Err(Error::IndexCap { cap });
                    }
                    inverses.push(beta.inverse());
                    reps.push(beta);
                    reps.len() - 1
                }
            };
        }
        action.push((images[0], images[1]));
        next += 1;
    }
    Ok(BfsCosets {
        representatives: reps,
        action,
    })
}
