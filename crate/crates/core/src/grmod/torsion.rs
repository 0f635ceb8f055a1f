use std::sync::Arc;

use super::{submodule_presentation, GradedMap, GradedModule};
use crate::error::Result;
use crate::groebner::{saturate_counting, saturate_irrelevant};

/// `0 → H → M → M̄ → 0` with `H = U^sat / U` the largest torsion submodule
/// and `M̄ = F0 / U^sat` torsion-free.
#[derive(Debug, Clone)]
pub struct TorsionDecomposition {
    pub torsion: GradedModule,
    pub inclusion: GradedMap,
    pub quotient: GradedModule,
}

pub fn torsion_submodule(m: &Arc<GradedModule>) -> Result<TorsionDecomposition> {
    let sat = saturate_irrelevant(m.gb())?;
    let (torsion, inclusion) = submodule_presentation(m, sat.elements())?;
    Ok(TorsionDecomposition {
        torsion,
        inclusion,
        quotient: GradedModule::from_basis(sat),
    })
}

/// `M` is torsion iff `U^sat` is all of `F0`.
pub fn is_torsion(m: &GradedModule) -> Result<bool> {
    Ok(m.is_zero() || saturate_irrelevant(m.gb())?.is_full())
}

/// Largest `d` with `H_C(M)_d ≠ 0`, or `None` when the torsion part vanishes.
pub fn torsion_top_degree(m: &GradedModule) -> Result<Option<i64>> {
    let (sat, steps) = saturate_counting(m.gb())?;
    if steps == 0 {
        return Ok(None);
    }
    // H is generated by U^sat and m^steps kills it.
    let degs: Vec<i64> = sat.elements().iter().map(|g| g.degree()).collect();
    let lo = *degs.iter().min().expect("strict saturation adds generators");
    let hi = *degs.iter().max().unwrap() + steps as i64;
    let quotient = GradedModule::from_basis(sat);
    Ok((lo..=hi).rev().find(|&d| m.dim(d) > quotient.dim(d)))
}
