//! Irreducible characters and decompositions in the representation ring.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::character::{char_mul, demazure_longest, CharacterElt};
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};

fn require_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check_rank(lambda)?;
    if lambda.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(lambda.to_string()))
    }
}

/// `ch V(λ) = D_{w0}(e^λ)`.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<CharacterElt> {
    require_dominant(rs, lambda)?;
    demazure_longest(rs, &CharacterElt::monomial(lambda.clone()))
}

/// `ch V(ρ) = e^ρ ∏_{β>0} (1 + e^{−β})`, expanded.
pub fn rho_character(rs: &RootSystem) -> Result<CharacterElt> {
    let mut acc = CharacterElt::monomial(rs.rho().clone());
    for beta in rs.positive_roots() {
        let factor = CharacterElt::from_terms(rs.rank(), [(rs.zero(), 1), (beta.checked_neg()?, 1)])?;
        acc = char_mul(&acc, &factor)?;
    }
    Ok(acc)
}

/// Weyl's dimension formula `∏_{β>0} <λ+ρ, β∨> / <ρ, β∨>`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    require_dominant(rs, lambda)?;
    let shifted = lambda.checked_add(rs.rho())?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for idx in 0..rs.num_positive_roots() {
        num *= rs.coroot_pairing(&shifted, idx);
        den *= rs.coroot_pairing(rs.rho(), idx);
    }
    Ok(num / den)
}

/// Brauer's formula: `ch(V(λ) ⊗ V(μ)) = D_{w0}(e^λ ch V(μ))`.
pub fn tensor_character(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<CharacterElt> {
    require_dominant(rs, lambda)?;
    let chmu = irreducible_character(rs, mu)?;
    demazure_longest(rs, &chmu.shift(lambda)?)
}

/// A (possibly virtual) module `⊕ V(ν)^{m_ν}`, keyed by dominant highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    parts: BTreeMap<Weight, i64>,
    is_virtual: bool,
}

#[derive(Serialize, Deserialize)]
struct PartRecord {
    weight: Weight,
    multiplicity: i64,
}

impl Decomposition {
    pub fn from_parts(parts: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut map: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w, m) in parts {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.to_string()));
            }
            let slot = map.entry(w).or_insert(0);
            *slot = slot.checked_add(m).ok_or(Error::Overflow("multiplicity"))?;
        }
        map.retain(|_, m| *m != 0);
        let is_virtual = map.values().any(|&m| m < 0);
        Ok(Decomposition { parts: map, is_virtual })
    }

    pub fn is_virtual(&self) -> bool {
        self.is_virtual
    }

    pub fn multiplicity(&self, lambda: &Weight) -> i64 {
        self.parts.get(lambda).copied().unwrap_or(0)
    }

    /// Parts in canonical (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.parts.iter()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn highest_weights(&self) -> impl Iterator<Item = &Weight> {
        self.parts.keys()
    }

    /// Number of irreducible components counted with multiplicity.
    pub fn total_multiplicity(&self) -> BigInt {
        self.parts.values().map(|&m| BigInt::from(m)).sum()
    }

    /// `Σ m_ν dim V(ν)`
    pub fn dimension(&self, rs: &RootSystem) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (w, &m) in &self.parts {
            total += weyl_dimension(rs, w)? * m;
        }
        Ok(total)
    }

    /// `Σ m_ν ch V(ν)`
    pub fn character(&self, rs: &RootSystem) -> Result<CharacterElt> {
        let mut total = CharacterElt::zero(rs.rank());
        for (w, &m) in &self.parts {
            total.add_scaled_in_place(m, &irreducible_character(rs, w)?)?;
        }
        Ok(total)
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<PartRecord> = self
            .parts
            .iter()
            .map(|(w, &m)| PartRecord {
                weight: w.clone(),
                multiplicity: m,
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records: Vec<PartRecord> = Vec::deserialize(deserializer)?;
        Decomposition::from_parts(records.into_iter().map(|r| (r.weight, r.multiplicity)))
            .map_err(serde::de::Error::custom)
    }
}

/// Expands a Weyl-invariant character in the basis of irreducible characters.
///
/// Repeatedly takes the remaining dominant weight of largest height (ties
/// broken lexicographically), records its coefficient and subtracts that many
/// copies of the irreducible character. A Weyl-invariant character is fixed by
/// its dominant terms, so the subtraction is carried out on dominant weights
/// with the dominant weight multiplicities of each `V(ν)`.
pub fn decompose(rs: &RootSystem, a: &CharacterElt) -> Result<Decomposition> {
    a.check_root_system(rs)?;
    if !a.is_weyl_invariant(rs)? {
        return Err(Error::NotWeylInvariant(format!(
            "{} terms, not fixed by every simple reflection",
            a.len()
        )));
    }

    let mut remaining: BTreeMap<(i64, Weight), i64> = BTreeMap::new();
    for (w, c) in a.dominant_part() {
        remaining.insert((rs.scaled_height(&w)?, w), c);
    }

    let initial: Vec<Weight> = remaining.keys().map(|(_, w)| w.clone()).collect();
    let mut cache: FxHashMap<Weight, Vec<(Weight, i64)>> = initial
        .par_iter()
        .map(|w| Ok((w.clone(), dominant_multiplicity_list(rs, w)?)))
        .collect::<Result<_>>()?;

    let mut parts = Vec::new();
    while let Some(((_, nu), c)) = remaining.pop_last() {
        if !cache.contains_key(&nu) {
            cache.insert(nu.clone(), dominant_multiplicity_list(rs, &nu)?);
        }
        for (mu, m) in &cache[&nu] {
            if mu == &nu {
                continue;
            }
            let key = (rs.scaled_height(mu)?, mu.clone());
            let delta = c.checked_mul(*m).ok_or(Error::Overflow("decomposition"))?;
            let slot = remaining.entry(key.clone()).or_insert(0);
            *slot = slot.checked_sub(delta).ok_or(Error::Overflow("decomposition"))?;
            if *slot == 0 {
                remaining.remove(&key);
            }
        }
        parts.push((nu, c));
    }
    Decomposition::from_parts(parts)
}

/// Dominant weights of `V(λ)` with their multiplicities, from Freudenthal's
/// recursion
/// `(|λ+ρ|² − |μ+ρ|²) m(μ) = 2 Σ_{β>0} Σ_{k≥1} (μ+kβ, β) m(μ+kβ)`.
/// Multiplicities of non-dominant weights are read off their dominant
/// conjugate.
pub fn dominant_weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, i64>> {
    Ok(dominant_multiplicity_list(rs, lambda)?.into_iter().collect())
}

fn dominant_multiplicity_list(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(Weight, i64)>> {
    require_dominant(rs, lambda)?;
    // ordered by depth below λ, so every μ + kβ is settled before μ
    let below = rs.enumerate_dominant_below(lambda)?;
    let lambda_rho = lambda.checked_add(rs.rho())?;
    let top = rs.scaled_inner_product(&lambda_rho, &lambda_rho)?;
    let mut mult: FxHashMap<Weight, i64> = FxHashMap::default();
    mult.insert(lambda.clone(), 1);
    let mut out = vec![(lambda.clone(), 1)];

    for mu in below.iter().skip(1) {
        let mu_rho = mu.checked_add(rs.rho())?;
        let gap = top - rs.scaled_inner_product(&mu_rho, &mu_rho)?;
        let mut sum = 0i64;
        for beta in rs.positive_roots() {
            let mut k = 1i64;
            loop {
                let shifted = mu.checked_add_scaled(k, beta)?;
                let (dom, _) = rs.dominant_representative(&shifted)?;
                let m = mult.get(&dom).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                let ip = rs.scaled_inner_product(&shifted, beta)?;
                sum = ip
                    .checked_mul(m)
                    .and_then(|x| sum.checked_add(x))
                    .ok_or(Error::Overflow("Freudenthal recursion"))?;
                k += 1;
            }
        }
        let num = sum.checked_mul(2).ok_or(Error::Overflow("Freudenthal recursion"))?;
        debug_assert!(gap > 0 && num % gap == 0, "Freudenthal: {num} / {gap} at {mu}");
        let m = num / gap;
        if m != 0 {
            mult.insert(mu.clone(), m);
            out.push((mu.clone(), m));
        }
    }
    Ok(out)
}

/// Weyl orbit of a dominant weight.
pub fn weyl_orbit(rs: &RootSystem, dominant: &Weight) -> Result<Vec<Weight>> {
    let mut seen: FxHashSet<Weight> = FxHashSet::default();
    seen.insert(dominant.clone());
    let mut queue = VecDeque::from([dominant.clone()]);
    while let Some(w) = queue.pop_front() {
        for idx in 0..rs.rank() {
            if w.coords()[idx] > 0 {
                let next = rs.reflect(idx, &w)?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `ch V(λ)` from Freudenthal multiplicities on the dominant chamber,
/// spread over Weyl orbits. Shares no code with the Demazure route.
pub fn freudenthal_character(rs: &RootSystem, lambda: &Weight) -> Result<CharacterElt> {
    let mut terms = Vec::new();
    for (mu, m) in dominant_multiplicity_list(rs, lambda)? {
        for w in weyl_orbit(rs, &mu)? {
            terms.push((w, m));
        }
    }
    CharacterElt::from_terms(rs.rank(), terms)
}
