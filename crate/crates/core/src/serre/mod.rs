//! The quotient category `A/C` of graded modules modulo torsion modules.
//!
//! A morphism `M → N` in the quotient is represented by an honest map
//! `M' → N̄` where `M' ⊆ M` contains `M_{≥e}` for some level `e` and
//! `N̄ = N / H_C(N)` is the torsion-free quotient. Two representatives are
//! congruent when they agree on a common truncation.

mod morphism;

use std::sync::Arc;

use serde_json::json;

pub use morphism::{compose, is_iso, is_zero, q_equal, q_of_map, q_of_map_between, QMorphism};

use crate::error::{Error, Result};
use crate::groebner::saturate_counting;
use crate::grmod::json::MapJson;
use crate::grmod::{hom_degree_zero, regularity, submodule_presentation, truncate, GradedMap, GradedModule};

/// An object of `A/C`: a module together with its torsion data.
#[derive(Debug, Clone)]
pub struct QObject {
    module: Arc<GradedModule>,
    torsion_free: Arc<GradedModule>,
    torsion_top: Option<i64>,
    regularity: Option<i64>,
    torsion_free_regularity: Option<i64>,
}

impl QObject {
    pub fn new(module: GradedModule) -> Result<Self> {
        let module = Arc::new(module);
        let (sat, steps) = saturate_counting(module.gb())?;
        let torsion_free = Arc::new(GradedModule::from_basis(sat));
        let torsion_top = if steps == 0 {
            None
        } else {
            crate::grmod::torsion_top_degree(&module)?
        };
        let regularity = if module.is_zero() { None } else { Some(regularity(&module)?) };
        let torsion_free_regularity = if torsion_free.is_zero() {
            None
        } else {
            Some(crate::grmod::regularity(&torsion_free)?)
        };
        Ok(QObject {
            module,
            torsion_free,
            torsion_top,
            regularity,
            torsion_free_regularity,
        })
    }

    #[inline]
    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    /// `N̄ = N / H_C(N)`, presented on the same generators as `N`.
    #[inline]
    pub fn torsion_free(&self) -> &Arc<GradedModule> {
        &self.torsion_free
    }

    /// Top degree of `H_C(N)`; `N_d → N̄_d` is bijective above it.
    #[inline]
    pub fn torsion_top(&self) -> Option<i64> {
        self.torsion_top
    }

    #[inline]
    pub fn regularity(&self) -> Option<i64> {
        self.regularity
    }

    #[inline]
    pub fn torsion_free_regularity(&self) -> Option<i64> {
        self.torsion_free_regularity
    }

    /// Zero in `A/C`, i.e. the module is torsion.
    pub fn is_zero(&self) -> bool {
        self.torsion_free.is_zero()
    }

    pub fn same_object(&self, other: &QObject) -> bool {
        Arc::ptr_eq(&self.module, &other.module) || self.module.same_presentation(&other.module)
    }

    /// The projection `N → N̄`.
    pub fn projection(&self) -> GradedMap {
        let ring = *self.module.ring();
        let images = (0..self.module.rank())
            .map(|i| self.module.generators().basis_element(i, &ring))
            .collect();
        GradedMap::new_unchecked(self.module.clone(), self.torsion_free.clone(), images)
            .expect("projection onto the torsion-free quotient")
    }
}

/// The level `d₀` from which `Hom(M_{≥d}, N̄)_0` is constant in `d`.
pub fn stable_level(m: &QObject, n: &QObject) -> i64 {
    [
        m.regularity,
        n.torsion_free_regularity,
        n.torsion_top.map(|t| t + 1),
        m.module.max_generator_degree(),
    ]
    .into_iter()
    .flatten()
    .max()
    .unwrap_or(0)
}

/// A basis of `Hom_{A/C}(M, N)` with the levels that certified it.
#[derive(Debug, Clone)]
pub struct HomGroup {
    pub dimension: usize,
    pub basis: Vec<QMorphism>,
    pub level_used: i64,
    /// Dimensions at three consecutive levels starting at `level_used`.
    pub stabilization_certificate: Vec<usize>,
}

impl HomGroup {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "dimension": self.dimension,
            "level_used": self.level_used,
            "stabilization_certificate": self.stabilization_certificate,
            "basis": self.basis.iter().map(|f| json!({
                "level": f.level(),
                "map": MapJson::from_map(f.representing_map()),
            })).collect::<Vec<_>>(),
        })
    }
}

fn certify(level: i64, dims: Vec<usize>) -> Result<()> {
    if dims.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::StabilizationFailure { level, dims });
    }
    Ok(())
}

/// `Hom_{A/C}(M, N) = Hom_S(M_{≥d}, N̄)_0` for `d ≥ d₀`, checked at `d₀, d₀+1, d₀+2`.
pub fn hom_quotient(m: &QObject, n: &QObject) -> Result<HomGroup> {
    let d0 = stable_level(m, n);
    let mut dims = Vec::with_capacity(3);
    let mut first = None;
    for d in d0..d0 + 3 {
        let (t, incl) = truncate(&m.module, d)?;
        let t = Arc::new(t);
        let basis = hom_degree_zero(&t, &n.torsion_free)?;
        dims.push(basis.len());
        if first.is_none() {
            first = Some((t, incl, basis));
        }
    }
    certify(d0, dims.clone())?;
    let (t, incl, maps) = first.expect("three levels computed");
    let incl = rebase(&incl, &t)?;
    let basis = maps
        .into_iter()
        .map(|f| QMorphism::from_parts(m.clone(), n.clone(), d0, incl.clone(), f))
        .collect();
    Ok(HomGroup {
        dimension: dims[0],
        basis,
        level_used: d0,
        stabilization_certificate: dims,
    })
}

/// Same Hom group through the cofinal system `m^j · M`.
pub fn hom_quotient_alt(m: &QObject, n: &QObject) -> Result<HomGroup> {
    let d0 = stable_level(m, n);
    let ring = *m.module.ring();
    let (lo, hi) = match (m.module.min_generator_degree(), m.module.max_generator_degree()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => (0, 0),
    };
    let j0 = (d0 - lo).max(0);
    let mut dims = Vec::with_capacity(3);
    let mut first = None;
    for j in j0..j0 + 3 {
        let mut elems = Vec::new();
        for i in 0..m.module.rank() {
            let e = m.module.generators().basis_element(i, &ring);
            for mono in ring.monomial_basis(j) {
                elems.push(e.mul_term(&ring, 1, &mono));
            }
        }
        let (sub, incl) = submodule_presentation(&m.module, &elems)?;
        let sub = Arc::new(sub);
        let basis = hom_degree_zero(&sub, &n.torsion_free)?;
        dims.push(basis.len());
        if first.is_none() {
            first = Some((sub, incl, basis));
        }
    }
    certify(lo + j0, dims.clone())?;
    let (sub, incl, maps) = first.expect("three levels computed");
    let incl = rebase(&incl, &sub)?;
    let level = hi + j0;
    let basis = maps
        .into_iter()
        .map(|f| QMorphism::from_parts(m.clone(), n.clone(), level, incl.clone(), f))
        .collect();
    Ok(HomGroup {
        dimension: dims[0],
        basis,
        level_used: lo + j0,
        stabilization_certificate: dims,
    })
}

/// Reattaches an inclusion map to a shared `Arc` of its source.
fn rebase(incl: &GradedMap, source: &Arc<GradedModule>) -> Result<GradedMap> {
    GradedMap::new_unchecked(source.clone(), incl.target().clone(), incl.images().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grmod::twist;
    use crate::ring::PolyRing;

    fn obj(m: GradedModule) -> QObject {
        QObject::new(m).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn hom_of_twists() {
        for n in 1..=2 {
            let r = PolyRing::projective(32003, n).unwrap();
            let s = obj(GradedModule::twisted_ring(r, 0));
            for k in 0..3 {
                let sk = obj(GradedModule::twisted_ring(r, k as i64));
                let h = hom_quotient(&s, &sk).unwrap();
                assert_eq!(h.dimension, binom(n + k, n));
                assert_eq!(hom_quotient_alt(&s, &sk).unwrap().dimension, h.dimension);
            }
            let sm1 = obj(GradedModule::twisted_ring(r, -1));
            assert_eq!(hom_quotient(&s, &sm1).unwrap().dimension, 0);
        }
    }

    #[test]
    fn sections_of_a_line() {
        let r = PolyRing::new(32003, 2).unwrap();
        let m = GradedModule::cyclic(r, 0, &["x1"]).unwrap();
        let mq = obj(m.clone());
        for k in 1..=3 {
            let src = obj(twist(&GradedModule::free(r, vec![0]), k).unwrap());
            assert_eq!(hom_quotient(&src, &mq).unwrap().dimension, 1);
            assert_eq!(hom_quotient_alt(&src, &mq).unwrap().dimension, 1);
        }
    }

    #[test]
    fn torsion_is_invisible() {
        let r = PolyRing::new(32003, 2).unwrap();
        let c = obj(GradedModule::power_of_irrelevant(r, 0, 2).unwrap());
        let s = obj(GradedModule::free(r, vec![0]));
        assert!(c.is_zero());
        assert_eq!(hom_quotient(&c, &s).unwrap().dimension, 0);
        assert_eq!(hom_quotient(&s, &c).unwrap().dimension, 0);
        assert_eq!(hom_quotient_alt(&c, &s).unwrap().dimension, 0);
    }
}
