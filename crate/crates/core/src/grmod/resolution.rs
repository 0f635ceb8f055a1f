use std::sync::Arc;

use super::ops::prune;
use super::{minimal_generators, GradedMap, GradedModule};
use crate::error::{Error, Result};
use crate::groebner::{syzygies_of, FreeElement, FreeModule};

/// `0 ← M ← F_0 ← F_1 ← … ← F_k`, minimal at every step.
///
/// `differentials[i]` lists the images of the generators of `F_{i+1}` in `F_i`.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub free_modules: Vec<FreeModule>,
    pub differentials: Vec<Vec<FreeElement>>,
    /// Reached `F_{k+1} = 0` within the length cap.
    pub complete: bool,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Generator degrees of each `F_i`.
    pub fn betti_degrees(&self) -> Vec<Vec<i64>> {
        self.free_modules.iter().map(|f| f.degrees().to_vec()).collect()
    }

    /// The differentials as maps of free modules.
    pub fn maps(&self, ring: &crate::ring::PolyRing) -> Result<Vec<GradedMap>> {
        let mods: Vec<Arc<GradedModule>> = self
            .free_modules
            .iter()
            .map(|f| Arc::new(GradedModule::free(*ring, f.degrees().to_vec())))
            .collect();
        self.differentials
            .iter()
            .enumerate()
            .map(|(i, d)| GradedMap::new(mods[i + 1].clone(), mods[i].clone(), d.clone()))
            .collect()
    }
}

/// Minimal graded free resolution, truncated after `length_cap` differentials.
pub fn min_free_resolution(m: &GradedModule, length_cap: usize) -> Result<FreeResolution> {
    let ring = *m.ring();
    let pruned = prune(&ring, m.generators(), m.relations());
    let mut current_free = pruned.free;
    let mut gens = minimal_generators(&ring, &current_free, &pruned.relations)?;
    let mut free_modules = vec![current_free.clone()];
    let mut differentials = Vec::new();
    while !gens.is_empty() && differentials.len() < length_cap {
        let next_free = FreeModule::new(gens.iter().map(FreeElement::degree).collect());
        let syz = syzygies_of(&ring, &current_free, &gens)?;
        differentials.push(gens);
        free_modules.push(next_free.clone());
        gens = minimal_generators(&ring, &next_free, &syz)?;
        current_free = next_free;
    }
    Ok(FreeResolution {
        free_modules,
        differentials,
        complete: gens.is_empty(),
    })
}

/// `max_i (max generator degree of F_i) - i` over a full minimal resolution.
pub fn regularity(m: &GradedModule) -> Result<i64> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let res = min_free_resolution(m, m.ring().nvars() + 1)?;
    debug_assert!(res.complete);
    Ok(res
        .free_modules
        .iter()
        .enumerate()
        .filter_map(|(i, f)| f.degrees().iter().max().map(|d| d - i as i64))
        .max()
        .expect("nonzero module has generators"))
}
