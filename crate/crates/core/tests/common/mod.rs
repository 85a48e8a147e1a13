#![allow(dead_code)]

use farey_core::{GroupSpec, Permutation, PermutationPair, ProjectiveMatrix};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random word in `L^±1, R^±1` of length at most `max_len`.
pub fn random_lr_matrix(rng: &mut impl Rng, max_len: usize) -> ProjectiveMatrix {
    let letters = [
        ProjectiveMatrix::l(),
        ProjectiveMatrix::l().inverse(),
        ProjectiveMatrix::r(),
        ProjectiveMatrix::r().inverse(),
    ];
    let len = rng.gen_range(0..=max_len);
    (0..len).fold(ProjectiveMatrix::identity(), |acc, _| {
        &acc * letters.choose(rng).unwrap()
    })
}

/// Random product of the given generators and their inverses.
pub fn random_product(
    rng: &mut impl Rng,
    gens: &[ProjectiveMatrix],
    max_len: usize,
) -> ProjectiveMatrix {
    let len = rng.gen_range(0..=max_len);
    (0..len).fold(ProjectiveMatrix::identity(), |acc, _| {
        let g = gens.choose(rng).unwrap();
        if rng.gen_bool(0.5) {
            &acc * g
        } else {
            &acc * &g.inverse()
        }
    })
}

/// Random transitive pair `(e, v)` with `e² = v³ = 1` on exactly `mu` points.
pub fn random_perm_pair(rng: &mut impl Rng, mu: usize) -> PermutationPair {
    loop {
        let mut pts: Vec<usize> = (0..mu).collect();
        pts.shuffle(rng);
        let mut e: Vec<usize> = (0..mu).collect();
        let fixed2 = rng.gen_range(0..=mu.min(3));
        let paired = (mu - fixed2) / 2 * 2;
        for pair in pts[..paired].chunks(2) {
            e[pair[0]] = pair[1];
            e[pair[1]] = pair[0];
        }
        pts.shuffle(rng);
        let mut v: Vec<usize> = (0..mu).collect();
        let fixed3 = rng.gen_range(0..=mu.min(3));
        let cycled = (mu - fixed3.min(mu)) / 3 * 3;
        for c in pts[..cycled].chunks(3) {
            v[c[0]] = c[1];
            v[c[1]] = c[2];
            v[c[2]] = c[0];
        }
        let e = Permutation::from_images(e).unwrap();
        let v = Permutation::from_images(v).unwrap();
        if let Ok(pair) = PermutationPair::from_ev(e, v) {
            return pair;
        }
    }
}

/// Γ₀, Γ₁ and Γ for `N ≤ max_level`, then `perm_count` random permutation
/// groups of index at most `max_index`.
pub fn corpus(max_level: u64, perm_count: usize, max_index: usize, seed: u64) -> Vec<GroupSpec> {
    use rand::SeedableRng;
    let mut out = Vec::new();
    for n in 1..=max_level {
        out.push(GroupSpec::Gamma0(n));
        out.push(GroupSpec::Gamma1(n));
        out.push(GroupSpec::Gamma(n));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..perm_count {
        let mu = rng.gen_range(1..=max_index);
        out.push(GroupSpec::Perm(random_perm_pair(&mut rng, mu)));
    }
    out
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
