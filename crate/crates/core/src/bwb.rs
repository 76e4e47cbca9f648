//! Borel–Weil–Bott for line bundles on `G/B`.
//!
//! `L(λ)` is the bundle induced from the one-dimensional `B`-module of weight
//! `−λ`. That sign is handled here and nowhere else: callers pass the `λ` of
//! `L(λ)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::root_system::{RootSystem, Weight};

/// Cohomology of one line bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BwbResult {
    /// All cohomology groups are zero.
    Vanishes,
    /// `H^degree ≅ V(dual_highest_weight)*`, every other degree zero.
    Cohomology { degree: usize, dual_highest_weight: Weight },
}

/// Which index to reflect in while sorting into the dominant chamber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    SmallestIndexFirst,
    LargestIndexFirst,
}

/// Cohomology of `L(λ)`: sort `λ + ρ` into the dominant chamber one simple
/// reflection at a time. A zero pairing along the way means `λ + ρ` is
/// singular and everything vanishes; otherwise the number of reflections is
/// the cohomological degree.
pub fn bwb_line_bundle(rs: &RootSystem, lambda: &Weight) -> Result<BwbResult> {
    bwb_line_bundle_with(rs, lambda, Strategy::SmallestIndexFirst)
}

pub fn bwb_line_bundle_with(rs: &RootSystem, lambda: &Weight, strategy: Strategy) -> Result<BwbResult> {
    rs.check_rank(lambda)?;
    let mut current = lambda.checked_add(rs.rho())?;
    let mut degree = 0usize;
    loop {
        let coords = current.coords();
        if coords.contains(&0) {
            return Ok(BwbResult::Vanishes);
        }
        let next = match strategy {
            Strategy::SmallestIndexFirst => coords.iter().position(|&c| c < 0),
            Strategy::LargestIndexFirst => coords.iter().rposition(|&c| c < 0),
        };
        match next {
            Some(idx) => {
                current = rs.simple_reflection(idx + 1, &current)?;
                degree += 1;
            }
            None => break,
        }
    }
    Ok(BwbResult::Cohomology {
        degree,
        dual_highest_weight: current.checked_sub(rs.rho())?,
    })
}

/// Dominant `μ` that can occur in `H•(G/B, L(M))`: those with `μ*` in the
/// dot orbit of `−wt(M)`. Runs BWB on each `L(−ξ)`, `ξ ∈ wt(M)`, and keeps
/// the highest weights of the resulting modules `V(λ)* = V(λ*)`.
pub fn cohomology_support_candidates<'a>(
    rs: &RootSystem,
    module_weights: impl IntoIterator<Item = &'a Weight>,
) -> Result<BTreeSet<Weight>> {
    let mut out = BTreeSet::new();
    for xi in module_weights {
        if let BwbResult::Cohomology {
            dual_highest_weight, ..
        } = bwb_line_bundle(rs, &xi.checked_neg()?)?
        {
            out.insert(rs.dual_weight(&dual_highest_weight)?);
        }
    }
    Ok(out)
}
