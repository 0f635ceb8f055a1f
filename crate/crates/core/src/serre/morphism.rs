use std::sync::Arc;

use super::{stable_level, QObject};
use crate::error::{Error, Result};
use crate::groebner::{FreeElement, Lifter};
use crate::grmod::{cokernel, is_torsion, kernel, truncate, GradedMap, GradedModule};

/// A morphism of `A/C` represented by `f: M' → N̄` with `M_{≥level} ⊆ M' ⊆ M`.
#[derive(Debug, Clone)]
pub struct QMorphism {
    source: QObject,
    target: QObject,
    level: i64,
    inclusion: GradedMap,
    map: GradedMap,
}

impl QMorphism {
    /// `inclusion: M' → M` and `map: M' → N̄` must share the source `M'`.
    pub(crate) fn from_parts(source: QObject, target: QObject, level: i64, inclusion: GradedMap, map: GradedMap) -> Self {
        debug_assert!(Arc::ptr_eq(inclusion.source(), map.source()));
        QMorphism {
            source,
            target,
            level,
            inclusion,
            map,
        }
    }

    pub fn identity(m: &QObject) -> Result<QMorphism> {
        q_of_map_between(&GradedMap::identity(m.module()), m, m)
    }

    #[inline]
    pub fn source(&self) -> &QObject {
        &self.source
    }

    #[inline]
    pub fn target(&self) -> &QObject {
        &self.target
    }

    /// Every element of `M` of degree at least this lies in the domain.
    #[inline]
    pub fn level(&self) -> i64 {
        self.level
    }

    #[inline]
    pub fn domain(&self) -> &Arc<GradedModule> {
        self.map.source()
    }

    #[inline]
    pub fn inclusion(&self) -> &GradedMap {
        &self.inclusion
    }

    /// The honest map `M' → N̄`.
    #[inline]
    pub fn representing_map(&self) -> &GradedMap {
        &self.map
    }

    /// Same domain and level, different representing map.
    pub fn with_representing_map(&self, map: GradedMap) -> Result<QMorphism> {
        if !map.source().same_presentation(self.domain()) || !map.target().same_presentation(self.target.torsion_free()) {
            return Err(Error::SourceTargetMismatch("map does not fit this domain".into()));
        }
        let map = GradedMap::new_unchecked(self.domain().clone(), self.target.torsion_free().clone(), map.images().to_vec())?;
        Ok(QMorphism::from_parts(self.source.clone(), self.target.clone(), self.level, self.inclusion.clone(), map))
    }

    /// Images in `N̄` of elements of `M` of degree at least `level`.
    pub fn images_of(&self, elems: &[FreeElement]) -> Result<Vec<FreeElement>> {
        let m = self.source.module();
        let ring = *m.ring();
        let lifter = Lifter::new(&ring, m.generators(), self.inclusion.images(), m.gb().elements())?;
        elems
            .iter()
            .map(|v| {
                if m.reduce(v).is_zero() {
                    return Ok(FreeElement::zero(self.target.module().rank(), v.degree()));
                }
                let c = lifter.lift(v).ok_or_else(|| {
                    Error::HypothesisViolation(format!(
                        "element of degree {} lies outside the domain (level {})",
                        v.degree(),
                        self.level
                    ))
                })?;
                self.map.apply(&c)
            })
            .collect()
    }

    pub fn apply(&self, v: &FreeElement) -> Result<FreeElement> {
        Ok(self.images_of(std::slice::from_ref(v))?.remove(0))
    }

    /// The same morphism represented on `M_{≥e}` for `e ≥ level`.
    pub fn restrict(&self, e: i64) -> Result<QMorphism> {
        let e = e.max(self.level);
        let (t, incl) = truncate(self.source.module(), e)?;
        let t = Arc::new(t);
        let incl = GradedMap::new_unchecked(t.clone(), incl.target().clone(), incl.images().to_vec())?;
        let images = self.images_of(incl.images())?;
        let map = GradedMap::new_unchecked(t, self.target.torsion_free().clone(), images)?;
        Ok(QMorphism::from_parts(self.source.clone(), self.target.clone(), e, incl, map))
    }
}

/// The image of an honest map in `A/C`.
pub fn q_of_map(phi: &GradedMap) -> Result<QMorphism> {
    let m = QObject::new((**phi.source()).clone())?;
    let n = QObject::new((**phi.target()).clone())?;
    q_of_map_between(phi, &m, &n)
}

/// [`q_of_map`] reusing already built endpoint objects.
pub fn q_of_map_between(phi: &GradedMap, m: &QObject, n: &QObject) -> Result<QMorphism> {
    if !phi.source().same_presentation(m.module()) || !phi.target().same_presentation(n.module()) {
        return Err(Error::SourceTargetMismatch("map endpoints differ from the given objects".into()));
    }
    let e = stable_level(m, n);
    let (t, incl) = truncate(m.module(), e)?;
    let t = Arc::new(t);
    let incl = GradedMap::new_unchecked(t.clone(), m.module().clone(), incl.images().to_vec())?;
    let images = incl
        .images()
        .iter()
        .map(|v| phi.apply(v))
        .collect::<Result<Vec<_>>>()?;
    let map = GradedMap::new_unchecked(t, n.torsion_free().clone(), images)?;
    Ok(QMorphism::from_parts(m.clone(), n.clone(), e, incl, map))
}

/// `ψ ∘ φ`. Above the torsion top degree of the middle object its
/// torsion-free quotient agrees with the object itself, so `φ`'s values feed
/// straight into `ψ`.
pub fn compose(psi: &QMorphism, phi: &QMorphism) -> Result<QMorphism> {
    if !phi.target.same_object(&psi.source) {
        return Err(Error::SourceTargetMismatch(
            "target of the first morphism differs from the source of the second".into(),
        ));
    }
    let mut e = phi.level.max(psi.level);
    if let Some(t) = phi.target.torsion_top() {
        e = e.max(t + 1);
    }
    let (t, incl) = truncate(phi.source.module(), e)?;
    let t = Arc::new(t);
    let incl = GradedMap::new_unchecked(t.clone(), incl.target().clone(), incl.images().to_vec())?;
    let mid = phi.images_of(incl.images())?;
    let images = psi.images_of(&mid)?;
    let map = GradedMap::new_unchecked(t, psi.target.torsion_free().clone(), images)?;
    Ok(QMorphism::from_parts(phi.source.clone(), psi.target.clone(), e, incl, map))
}

/// Zero in `A/C`: the representing map has torsion image. `N̄` is
/// torsion-free, so that means every image vanishes.
pub fn is_zero(phi: &QMorphism) -> bool {
    phi.map.is_zero()
}

/// Congruence: equal values on a common truncation.
pub fn q_equal(phi: &QMorphism, psi: &QMorphism) -> Result<bool> {
    if !phi.source.same_object(&psi.source) || !phi.target.same_object(&psi.target) {
        return Err(Error::SourceTargetMismatch("morphisms are not parallel".into()));
    }
    let e = phi.level.max(psi.level);
    let (_, incl) = truncate(phi.source.module(), e)?;
    Ok(phi.images_of(incl.images())? == psi.images_of(incl.images())?)
}

/// Isomorphism in `A/C`: kernel and cokernel of the representing map are torsion.
pub fn is_iso(phi: &QMorphism) -> Result<bool> {
    let (k, _) = kernel(&phi.map)?;
    if !is_torsion(&k)? {
        return Ok(false);
    }
    is_torsion(&cokernel(&phi.map)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    fn p1() -> PolyRing {
        PolyRing::projective(32003, 1).unwrap()
    }

    fn twisted(k: i64) -> Arc<GradedModule> {
        Arc::new(GradedModule::twisted_ring(p1(), k))
    }

    #[test]
    fn q_images() {
        let s = twisted(0);
        let zero = q_of_map(&GradedMap::zero(&s, &s)).unwrap();
        assert!(is_zero(&zero));
        let id = q_of_map(&GradedMap::identity(&s)).unwrap();
        assert!(!is_zero(&id));
        assert!(is_iso(&id).unwrap());
        assert!(q_equal(&id, &QMorphism::identity(id.source()).unwrap()).unwrap());

        let x = GradedMap::from_strings(s.clone(), twisted(1), &[vec!["x0"]]).unwrap();
        let qx = q_of_map(&x).unwrap();
        assert!(!is_zero(&qx));
        assert!(!is_iso(&qx).unwrap());
    }

    #[test]
    fn composition_matches_products() {
        let (s0, s1, s2) = (twisted(0), twisted(1), twisted(2));
        let x = GradedMap::from_strings(s0.clone(), s1.clone(), &[vec!["x0"]]).unwrap();
        let y = GradedMap::from_strings(s1, s2.clone(), &[vec!["x1"]]).unwrap();
        let xy = GradedMap::from_strings(s0, s2, &[vec!["x0*x1"]]).unwrap();
        let c = compose(&q_of_map(&y).unwrap(), &q_of_map(&x).unwrap()).unwrap();
        let direct = q_of_map(&xy).unwrap();
        assert!(q_equal(&c, &direct).unwrap());
        assert!(q_equal(&c.restrict(3).unwrap(), &direct).unwrap());
        let bad = compose(&q_of_map(&x).unwrap(), &q_of_map(&x).unwrap());
        assert!(matches!(bad, Err(Error::SourceTargetMismatch(_))));
    }

    #[test]
    fn truncation_inclusion_is_iso() {
        let r = PolyRing::new(32003, 2).unwrap();
        let m = Arc::new(GradedModule::cyclic(r, 0, &["x0^2", "x0*x1"]).unwrap());
        let (t, incl) = truncate(&m, 3).unwrap();
        let incl = GradedMap::new_unchecked(Arc::new(t), m, incl.images().to_vec()).unwrap();
        assert!(is_iso(&q_of_map(&incl).unwrap()).unwrap());
    }

    #[test]
    fn torsion_image_is_zero() {
        let r = PolyRing::new(32003, 2).unwrap();
        let s = Arc::new(GradedModule::free(r, vec![0]));
        let k = Arc::new(GradedModule::power_of_irrelevant(r, 0, 1).unwrap());
        let proj = GradedMap::from_strings(s, k, &[vec!["1"]]).unwrap();
        assert!(is_zero(&q_of_map(&proj).unwrap()));
    }
}
