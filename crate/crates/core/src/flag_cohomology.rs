//! Polyvector fields on `G/B` at the level of characters.
//!
//! `∧^p T_{G/B}` is the bundle induced from `∧^p u`, where `u` is spanned by
//! the negative root vectors. Its Euler characteristic comes from one
//! Demazure sweep: `χ_T(L(M)) = ◇ D_{w0} ◇ ch(M)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bwb::{bwb_line_bundle, cohomology_support_candidates, BwbResult};
use crate::character::{char_mul, demazure_longest, diamond, CharacterElt};
use crate::error::{Error, Result};
use crate::rep_theory::{decompose, tensor_character, Decomposition};
use crate::root_system::{RootSystem, Weight};

/// Types with more positive roots than this need an explicit override.
pub const MAX_POSITIVE_ROOTS: usize = 24;

/// Characters of `∧^p` for `p = 0..=|Φ⁺|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCharacter {
    pub by_degree: Vec<CharacterElt>,
}

impl GradedCharacter {
    /// `Σ_p ch ∧^p`, without signs.
    pub fn total(&self) -> Result<CharacterElt> {
        let rank = self.by_degree[0].rank();
        let mut acc = CharacterElt::zero(rank);
        for piece in &self.by_degree {
            acc.add_scaled_in_place(1, piece)?;
        }
        Ok(acc)
    }

    pub fn degree(&self, p: usize) -> Option<&CharacterElt> {
        self.by_degree.get(p)
    }

    pub fn top(&self) -> &CharacterElt {
        self.by_degree.last().expect("degree 0 is always present")
    }

    pub fn top_degree(&self) -> usize {
        self.by_degree.len() - 1
    }
}

/// Outcome of comparing the tensor-square support with the dominance interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantReport {
    /// `λ` with `m_λ > 0` in `V(ρ) ⊗ V(ρ)`.
    pub support_tensor: BTreeSet<Weight>,
    /// Dominant `λ ≤ 2ρ`.
    pub support_order: BTreeSet<Weight>,
    pub multiplicities: Decomposition,
    pub conjecture_holds: bool,
    /// Symmetric difference of the two supports.
    pub counterexamples: Vec<Weight>,
}

/// One row of the Hochschild component report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HhComponent {
    pub weight: Weight,
    /// `m_λ`, a lower bound for the multiplicity of `V(λ)` in `H•(G/B, ∧•T)`.
    pub multiplicity_lower_bound: i64,
    /// Whether `λ` passes the dot-orbit candidate filter for `wt(∧•u)`.
    pub candidate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HhReport {
    /// Always `"lower_bound"`: exact multiplicities need the full cohomology.
    pub bound_kind: String,
    pub components: Vec<HhComponent>,
    /// Weights `λ ≤ 2ρ` that fail the candidate filter.
    pub flagged: Vec<Weight>,
    /// `Σ m_λ`
    #[serde(with = "crate::decimal")]
    pub total_lower_bound: BigInt,
}

/// Entry point for the flag-variety computations on one root system.
///
/// Construction applies the feasibility gate: more than
/// [`MAX_POSITIVE_ROOTS`] positive roots is refused unless forced.
#[derive(Debug, Clone, Copy)]
pub struct FlagVariety<'a> {
    rs: &'a RootSystem,
}

impl<'a> FlagVariety<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<Self> {
        if rs.num_positive_roots() > MAX_POSITIVE_ROOTS {
            return Err(Error::FeasibilityGate {
                label: rs.label().to_string(),
                rank: rs.rank(),
                positive_roots: rs.num_positive_roots(),
                limit: MAX_POSITIVE_ROOTS,
            });
        }
        Ok(FlagVariety { rs })
    }

    pub fn new_forced(rs: &'a RootSystem) -> Self {
        FlagVariety { rs }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    /// `∧•n` (`positive = true`, weights `Σ β`) or `∧•u` (weights `−Σ β`),
    /// graded by exterior degree.
    pub fn exterior_character(&self, positive: bool) -> Result<GradedCharacter> {
        let rank = self.rs.rank();
        let mut by_degree = vec![CharacterElt::one(rank)];
        for beta in self.rs.positive_roots() {
            let gamma = if positive { beta.clone() } else { beta.checked_neg()? };
            let mut next = Vec::with_capacity(by_degree.len() + 1);
            next.push(by_degree[0].clone());
            for p in 1..by_degree.len() {
                next.push(by_degree[p].checked_add(&by_degree[p - 1].shift(&gamma)?)?);
            }
            next.push(by_degree[by_degree.len() - 1].shift(&gamma)?);
            by_degree = next;
        }
        Ok(GradedCharacter { by_degree })
    }

    /// `χ_T(L(M)) = ◇(D_{w0}(◇ ch M))`.
    pub fn euler_characteristic(&self, ch_m: &CharacterElt) -> Result<CharacterElt> {
        euler_characteristic(self.rs, ch_m)
    }

    /// `χ_T(∧•T)` on the ungraded sum `Σ_p ch ∧^p u`.
    pub fn polyvector_euler_character(&self) -> Result<CharacterElt> {
        self.euler_characteristic(&self.exterior_character(false)?.total()?)
    }

    pub fn polyvector_euler_decomposition(&self) -> Result<Decomposition> {
        decompose(self.rs, &self.polyvector_euler_character()?)
    }

    /// `χ_T(∧^p T)` for each `p`, decomposed; these may be virtual.
    pub fn polyvector_euler_by_degree(&self) -> Result<Vec<Decomposition>> {
        self.exterior_character(false)?
            .by_degree
            .iter()
            .map(|piece| decompose(self.rs, &self.euler_characteristic(piece)?))
            .collect()
    }

    /// `V(ρ) ⊗ V(ρ)` decomposed.
    pub fn rho_tensor_square(&self) -> Result<Decomposition> {
        let rho = self.rs.rho();
        decompose(self.rs, &tensor_character(self.rs, rho, rho)?)
    }

    /// Compares `{λ : m_λ > 0}` with `{λ ∈ P⁺ : λ ≤ 2ρ}` and reports the
    /// outcome without asserting it.
    pub fn verify_kostant(&self) -> Result<KostantReport> {
        let multiplicities = self.rho_tensor_square()?;
        let support_tensor: BTreeSet<Weight> = multiplicities
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(w, _)| w.clone())
            .collect();
        let support_order: BTreeSet<Weight> = self
            .rs
            .enumerate_dominant_below(&self.rs.two_rho())?
            .into_iter()
            .collect();
        let counterexamples: Vec<Weight> = support_tensor.symmetric_difference(&support_order).cloned().collect();
        Ok(KostantReport {
            conjecture_holds: counterexamples.is_empty(),
            support_tensor,
            support_order,
            multiplicities,
            counterexamples,
        })
    }

    /// For every dominant `λ ≤ 2ρ`: the lower bound `m_λ` and the dot-orbit
    /// candidate check against `wt(∧•u)`.
    pub fn hh_component_report(&self) -> Result<HhReport> {
        let tensor = self.rho_tensor_square()?;
        let wedge_u = self.exterior_character(false)?.total()?;
        let candidates = cohomology_support_candidates(self.rs, wedge_u.weights())?;
        let mut components = Vec::new();
        let mut flagged = Vec::new();
        let mut total = BigInt::from(0);
        for lambda in self.rs.enumerate_dominant_below(&self.rs.two_rho())? {
            let m = tensor.multiplicity(&lambda);
            let candidate = candidates.contains(&lambda);
            if !candidate {
                flagged.push(lambda.clone());
            }
            total += m;
            components.push(HhComponent {
                weight: lambda,
                multiplicity_lower_bound: m,
                candidate,
            });
        }
        Ok(HhReport {
            bound_kind: "lower_bound".to_string(),
            components,
            flagged,
            total_lower_bound: total,
        })
    }

    /// `H⁰(∧^{n−1} T) = ⊕ V(2ρ − β)` over positive `β` with `2ρ − β` dominant.
    pub fn wahl_h0(&self) -> Result<Decomposition> {
        let two_rho = self.rs.two_rho();
        let mut parts = Vec::new();
        for beta in self.rs.positive_roots() {
            let lambda = two_rho.checked_sub(beta)?;
            if lambda.is_dominant() {
                parts.push((lambda, 1));
            }
        }
        Decomposition::from_parts(parts)
    }

    /// `∧^n T ≅ L(2ρ)`: the top exterior power of `u` is `e^{−2ρ}`, BWB puts
    /// `V(2ρ)*` in degree zero, and the Euler characteristic is `V(2ρ)` once.
    pub fn top_polyvector_check(&self) -> Result<bool> {
        let two_rho = self.rs.two_rho();
        let minus_two_rho = two_rho.checked_neg()?;
        let top_ok = *self.exterior_character(false)?.top() == CharacterElt::monomial(minus_two_rho.clone());
        let bwb_ok = bwb_line_bundle(self.rs, &two_rho)?
            == BwbResult::Cohomology {
                degree: 0,
                dual_highest_weight: two_rho.clone(),
            };
        let chi = self.euler_characteristic(&CharacterElt::monomial(minus_two_rho))?;
        let euler_ok = decompose(self.rs, &chi)? == Decomposition::from_parts([(two_rho, 1)])?;
        Ok(top_ok && bwb_ok && euler_ok)
    }

    /// `D_{w0}(ch ∧•n)`, which equals `ch V(ρ)²`.
    pub fn demazure_of_wedge_n(&self) -> Result<CharacterElt> {
        demazure_longest(self.rs, &self.exterior_character(true)?.total()?)
    }
}

/// `χ_T(L(M)) = ◇(D_{w0}(◇ ch M))`; no feasibility gate.
pub fn euler_characteristic(rs: &RootSystem, ch_m: &CharacterElt) -> Result<CharacterElt> {
    diamond(&demazure_longest(rs, &diamond(ch_m)?)?)
}

/// `ch V(ρ) · ch V(ρ)` from the product formula.
pub fn rho_character_squared(rs: &RootSystem) -> Result<CharacterElt> {
    let rho = crate::rep_theory::rho_character(rs)?;
    char_mul(&rho, &rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_theory::irreducible_character;
    use crate::root_system::TypeLabel;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c)
    }

    fn rs(label: TypeLabel, rank: usize) -> RootSystem {
        RootSystem::new(label, rank).unwrap()
    }

    #[test]
    fn exterior_examples() {
        let a1 = rs(TypeLabel::A, 1);
        let g = FlagVariety::new(&a1).unwrap().exterior_character(true).unwrap();
        assert_eq!(g.by_degree, vec![CharacterElt::one(1), CharacterElt::monomial(w(&[2]))]);
        let a2 = rs(TypeLabel::A, 2);
        let g = FlagVariety::new(&a2).unwrap().exterior_character(true).unwrap();
        assert_eq!(g.top(), &CharacterElt::monomial(w(&[2, 2])));
        assert_eq!(g.top_degree(), 3);
        let d4 = rs(TypeLabel::D, 4);
        let g = FlagVariety::new(&d4).unwrap().exterior_character(false).unwrap();
        let dims: BigInt = g.by_degree.iter().map(|c| c.total_dimension()).sum();
        assert_eq!(dims, BigInt::from(4096));
        assert_eq!(g.by_degree[0], CharacterElt::one(4));
    }

    #[test]
    fn euler_examples() {
        let a1 = rs(TypeLabel::A, 1);
        let fv = FlagVariety::new(&a1).unwrap();
        let chi = fv.euler_characteristic(&CharacterElt::monomial(w(&[-1]))).unwrap();
        assert_eq!(chi, irreducible_character(&a1, &w(&[1])).unwrap());
        let wedge_u = CharacterElt::from_terms(1, [(w(&[0]), 1), (w(&[-2]), 1)]).unwrap();
        let chi = fv.euler_characteristic(&wedge_u).unwrap();
        assert_eq!(
            chi,
            CharacterElt::from_terms(1, [(w(&[2]), 1), (w(&[0]), 2), (w(&[-2]), 1)]).unwrap()
        );
        let a2 = rs(TypeLabel::A, 2);
        let fv = FlagVariety::new(&a2).unwrap();
        let tangent = fv.exterior_character(false).unwrap().by_degree[1].clone();
        let chi = fv.euler_characteristic(&tangent).unwrap();
        assert_eq!(chi, irreducible_character(&a2, &w(&[1, 1])).unwrap());
    }

    #[test]
    fn polyvector_small_cases() {
        let a1 = rs(TypeLabel::A, 1);
        let d = FlagVariety::new(&a1).unwrap().polyvector_euler_decomposition().unwrap();
        assert_eq!(d, Decomposition::from_parts([(w(&[2]), 1), (w(&[0]), 1)]).unwrap());
    }

    #[test]
    fn per_degree_a2_matches_h0_listing() {
        let a2 = rs(TypeLabel::A, 2);
        let by_degree = FlagVariety::new(&a2).unwrap().polyvector_euler_by_degree().unwrap();
        let expect = [
            vec![(w(&[0, 0]), 1)],
            vec![(w(&[1, 1]), 1)],
            vec![(w(&[1, 1]), 1), (w(&[3, 0]), 1), (w(&[0, 3]), 1)],
            vec![(w(&[2, 2]), 1)],
        ];
        for (got, want) in by_degree.iter().zip(expect) {
            assert_eq!(got, &Decomposition::from_parts(want).unwrap());
        }
    }

    #[test]
    fn kostant_small() {
        let a1 = rs(TypeLabel::A, 1);
        let r = FlagVariety::new(&a1).unwrap().verify_kostant().unwrap();
        assert!(r.conjecture_holds);
        assert_eq!(r.support_tensor, BTreeSet::from([w(&[0]), w(&[2])]));
        let a2 = rs(TypeLabel::A, 2);
        let r = FlagVariety::new(&a2).unwrap().verify_kostant().unwrap();
        assert!(r.conjecture_holds);
        assert_eq!(r.support_tensor.len(), 5);
        assert_eq!(r.support_order.len(), 5);
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn hh_report_small() {
        let a1 = rs(TypeLabel::A, 1);
        let r = FlagVariety::new(&a1).unwrap().hh_component_report().unwrap();
        assert_eq!(r.bound_kind, "lower_bound");
        assert!(r.flagged.is_empty());
        assert!(r.components.iter().all(|c| c.multiplicity_lower_bound == 1));
        let a2 = rs(TypeLabel::A, 2);
        let r = FlagVariety::new(&a2).unwrap().hh_component_report().unwrap();
        let rho_row = r.components.iter().find(|c| c.weight == w(&[1, 1])).unwrap();
        assert_eq!(rho_row.multiplicity_lower_bound, 2);
        assert_eq!(r.total_lower_bound, BigInt::from(6));
    }

    #[test]
    fn wahl_examples() {
        let a2 = rs(TypeLabel::A, 2);
        assert_eq!(
            FlagVariety::new(&a2).unwrap().wahl_h0().unwrap(),
            Decomposition::from_parts([(w(&[0, 3]), 1), (w(&[3, 0]), 1), (w(&[1, 1]), 1)]).unwrap()
        );
        let a1 = rs(TypeLabel::A, 1);
        assert_eq!(
            FlagVariety::new(&a1).unwrap().wahl_h0().unwrap(),
            Decomposition::from_parts([(w(&[0]), 1)]).unwrap()
        );
    }

    #[test]
    fn top_power_small() {
        for (label, rank) in [(TypeLabel::A, 1), (TypeLabel::A, 2), (TypeLabel::B, 2)] {
            let r = rs(label, rank);
            assert!(FlagVariety::new(&r).unwrap().top_polyvector_check().unwrap());
        }
    }

    #[test]
    fn feasibility_gate() {
        let e6 = rs(TypeLabel::E, 6);
        assert!(matches!(
            FlagVariety::new(&e6),
            Err(Error::FeasibilityGate { positive_roots: 36, .. })
        ));
        let e8 = rs(TypeLabel::E, 8);
        assert!(FlagVariety::new(&e8).is_err());
        let f4 = rs(TypeLabel::F, 4);
        assert!(FlagVariety::new(&f4).is_ok());
        // forcing bypasses the gate; cheap operations still work
        let fv = FlagVariety::new_forced(&e8);
        assert!(!fv.wahl_h0().unwrap().is_empty());
    }
}
