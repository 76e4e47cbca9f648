#![allow(dead_code)]

use flagchar::{CharacterElt, RootSystem, TypeLabel, Weight};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

pub fn rs(label: TypeLabel, rank: usize) -> RootSystem {
    RootSystem::new(label, rank).unwrap()
}

pub fn w(c: &[i64]) -> Weight {
    Weight::new(c)
}

/// Every simple type of rank at most `max_rank` (E excluded below rank 6).
pub fn types_up_to_rank(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for label in [
            TypeLabel::A,
            TypeLabel::B,
            TypeLabel::C,
            TypeLabel::D,
            TypeLabel::E,
            TypeLabel::F,
            TypeLabel::G,
        ] {
            if let Ok(r) = RootSystem::new(label, rank) {
                out.push(r);
            }
        }
    }
    out
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_weight(rng: &mut StdRng, rank: usize, bound: i64) -> Weight {
    Weight::from((0..rank).map(|_| rng.random_range(-bound..=bound)).collect::<Vec<_>>())
}

pub fn random_dominant(rng: &mut StdRng, rank: usize, bound: i64) -> Weight {
    Weight::from((0..rank).map(|_| rng.random_range(0..=bound)).collect::<Vec<_>>())
}

/// A handful of terms with small weights and coefficients in `-3..=3`.
pub fn random_character(rng: &mut StdRng, rank: usize) -> CharacterElt {
    let n = rng.random_range(1..=6);
    let terms: Vec<(Weight, i64)> = (0..n)
        .map(|_| (random_weight(rng, rank, 4), rng.random_range(-3..=3)))
        .collect();
    CharacterElt::from_terms(rank, terms).unwrap()
}

/// Dominant `λ ≤ μ` by scanning every root-coordinate vector `0 ≤ c ≤ c(μ)`
/// and keeping those with `μ − Σ c_i α_i` dominant.
pub fn brute_force_dominant_below(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let den = rs.root_coord_denominator();
    let caps: Vec<i64> = rs
        .scaled_root_coords(mu)
        .unwrap()
        .iter()
        .map(|c| c.div_euclid(den))
        .collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; rs.rank()];
    loop {
        let mut lambda = mu.clone();
        for (i, &k) in c.iter().enumerate() {
            lambda = lambda.checked_sub_scaled(k, &rs.simple_roots()[i]).unwrap();
        }
        if lambda.is_dominant() {
            out.push(lambda);
        }
        let mut k = 0;
        loop {
            if k == c.len() {
                out.sort();
                return out;
            }
            if c[k] < caps[k] {
                c[k] += 1;
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// `(1 − e^{−α_i}) · D_i(a) − (a − e^{−α_i} s_i(a))`, which must vanish.
pub fn quotient_defect(rs: &RootSystem, i: usize, a: &CharacterElt, di_a: &CharacterElt) -> CharacterElt {
    let neg_alpha = rs.simple_root(i).unwrap().checked_neg().unwrap();
    let one_minus = CharacterElt::from_terms(rs.rank(), [(rs.zero(), 1), (neg_alpha.clone(), -1)]).unwrap();
    let lhs = flagchar::char_mul(&one_minus, di_a).unwrap();
    let rhs = a
        .checked_sub(&a.reflect(rs, i).unwrap().shift(&neg_alpha).unwrap())
        .unwrap();
    lhs.checked_sub(&rhs).unwrap()
}

/// Both reduced words of `w0` in a rank-2 system: alternating products of
/// length `|Φ⁺|` starting with 1 and with 2.
pub fn rank_two_longest_words(rs: &RootSystem) -> [flagchar::WeylWord; 2] {
    let n = rs.num_positive_roots();
    let alt = |first: usize| flagchar::WeylWord((0..n).map(|k| if k % 2 == 0 { first } else { 3 - first }).collect());
    [alt(1), alt(2)]
}
