//! Building a Farey symbol from a membership oracle.

use crate::error::{Error, Result};
use crate::fraction::ExtFraction;
use crate::matrix::ProjectiveMatrix;
use crate::oracle::GroupSpec;
use crate::symbol::{even_generator, free_generator, odd_generator, FareySymbol, Pairing};

pub const DEFAULT_MAX_EDGES: usize = 5000;

pub fn construct_symbol(spec: &GroupSpec, max_edges: usize) -> Result<FareySymbol> {
    construct_from_oracle(|m| spec.is_member(m), max_edges)
}

/// Pairs edges wherever the oracle accepts the side pairing (even, then
/// odd, then free against the other open edges from the left), and
/// subdivides an open edge at its mediant until none is left. The edge
/// split is the one whose mediant has the smallest denominator, rightmost
/// among equals, which keeps the vertices as small as possible.
pub fn construct_from_oracle(
    member: impl Fn(&ProjectiveMatrix) -> bool,
    max_edges: usize,
) -> Result<FareySymbol> {
    let m = |a: i64, b: i64, c: i64, d: i64| ProjectiveMatrix::new(a, b, c, d).expect("det 1");
    if member(&ProjectiveMatrix::l()) && member(&ProjectiveMatrix::e()) {
        return Ok(FareySymbol::modular_group());
    }
    if member(&m(0, 1, -1, -1)) && member(&m(-1, 1, -1, 0)) {
        return Ok(FareySymbol::index_two_subgroup());
    }

    // One of 1 and -1 is not an elliptic point; start the triangle there.
    let mut points = vec![ExtFraction::neg_infinity()];
    if member(&m(-1, 1, -1, 0)) {
        points.extend([ExtFraction::integer(-1), ExtFraction::zero()]);
    } else {
        points.extend([ExtFraction::zero(), ExtFraction::integer(1)]);
    }
    points.push(ExtFraction::infinity());

    // Any two edges still open after a round have been tested against each
    // other, so only pairs involving a fresh edge need a test.
    let mut fresh = vec![true; 3];
    let mut pairings: Vec<Option<Pairing>> = vec![None; 3];
    let mut next_label = 1;

    loop {
        for k in 0..pairings.len() {
            if pairings[k].is_some() {
                continue;
            }
            let (x, y) = (&points[k], &points[k + 1]);
            if fresh[k] {
                if member(&even_generator(x, y)) {
                    pairings[k] = Some(Pairing::Even);
                    continue;
                }
                if member(&odd_generator(x, y)) {
                    pairings[k] = Some(Pairing::Odd);
                    continue;
                }
            }
            for j in 0..pairings.len() {
                if j == k || pairings[j].is_some() || !(fresh[k] || fresh[j]) {
                    continue;
                }
                if member(&free_generator(x, y, &points[j], &points[j + 1])) {
                    pairings[k] = Some(Pairing::Free(next_label));
                    pairings[j] = Some(Pairing::Free(next_label));
                    next_label += 1;
                    break;
                }
            }
        }
        fresh.iter_mut().for_each(|f| *f = false);

        let mediant_denom = |k: usize| points[k].denom() + points[k + 1].denom();
        let Some(open) = (0..pairings.len())
            .filter(|&k| pairings[k].is_none())
            .min_by(|&i, &j| mediant_denom(i).cmp(&mediant_denom(j)).then(j.cmp(&i)))
        else {
            break;
        };
        if pairings.len() + 1 > max_edges {
            return Err(Error::EdgeCap { max_edges });
        }
        let mid = points[open].mediant(&points[open + 1])?;
        points.insert(open + 1, mid);
        pairings.insert(open + 1, None);
        fresh[open] = true;
        fresh.insert(open + 1, true);
    }

    let vertices = points[1..points.len() - 1].to_vec();
    let pairings = pairings
        .into_iter()
        .map(|p| p.expect("all edges paired"))
        .collect();
    FareySymbol::new(vertices, pairings).map_err(|e| {
        Error::OracleInconsistent(format!("oracle pairings do not form a valid symbol: {e}"))
    })
}
