use std::sync::Arc;

use super::GradedModule;
use crate::error::{Error, Result};
use crate::groebner::{FreeElement, Lifter};
use crate::ring::PolyRing;

/// A degree-zero map `M → N`, given by the images of the generators of `M`
/// as elements of `N`'s generator module `G0`.
///
/// Images are kept in normal form modulo `N`'s relations, so two maps are
/// equal iff their image lists agree.
#[derive(Debug, Clone)]
pub struct GradedMap {
    source: Arc<GradedModule>,
    target: Arc<GradedModule>,
    images: Vec<FreeElement>,
}

impl GradedMap {
    /// Checks degrees and that every relation of the source maps into the target's relations.
    pub fn new(source: Arc<GradedModule>, target: Arc<GradedModule>, images: Vec<FreeElement>) -> Result<Self> {
        let map = Self::new_unchecked(source, target, images)?;
        for (j, r) in map.source.relations().iter().enumerate() {
            if !map.apply_unreduced(r).map(|v| map.target.gb().contains(&v))? {
                return Err(Error::NotWellDefined(format!(
                    "relation {j} does not map into the target relations"
                )));
            }
        }
        Ok(map)
    }

    /// Degree and shape checks only; well-definedness is the caller's responsibility.
    pub(crate) fn new_unchecked(
        source: Arc<GradedModule>,
        target: Arc<GradedModule>,
        images: Vec<FreeElement>,
    ) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::AmbientMismatch("source and target live over different rings".into()));
        }
        if images.len() != source.rank() {
            return Err(Error::AmbientMismatch(format!(
                "{} images for {} generators",
                images.len(),
                source.rank()
            )));
        }
        let mut reduced = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            img.check_in(target.generators())?;
            let g = source.generators().degree(i);
            if !img.is_zero() && img.degree() != g {
                return Err(Error::DegreeMismatch {
                    left: g,
                    right: img.degree(),
                });
            }
            let mut r = target.reduce(img);
            r.degree = g;
            reduced.push(r);
        }
        Ok(GradedMap {
            source,
            target,
            images: reduced,
        })
    }

    pub fn identity(m: &Arc<GradedModule>) -> Self {
        let ring = *m.ring();
        let images = (0..m.rank()).map(|i| m.generators().basis_element(i, &ring)).collect();
        Self::new_unchecked(m.clone(), m.clone(), images).expect("identity is well formed")
    }

    pub fn zero(source: &Arc<GradedModule>, target: &Arc<GradedModule>) -> Self {
        let images = source
            .generator_degrees()
            .iter()
            .map(|&g| FreeElement::zero(target.rank(), g))
            .collect();
        Self::new_unchecked(source.clone(), target.clone(), images).expect("zero map is well formed")
    }

    /// Builds a map from rows of polynomial strings, one row per source generator.
    pub fn from_strings(source: Arc<GradedModule>, target: Arc<GradedModule>, rows: &[Vec<&str>]) -> Result<Self> {
        let ring = *source.ring();
        if rows.len() != source.rank() {
            return Err(Error::AmbientMismatch(format!(
                "{} rows for {} generators",
                rows.len(),
                source.rank()
            )));
        }
        let mut images = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let comps = row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
            images.push(FreeElement::with_degree(target.generators(), comps, source.generators().degree(i))?);
        }
        Self::new(source, target, images)
    }

    #[inline]
    pub fn source(&self) -> &Arc<GradedModule> {
        &self.source
    }

    #[inline]
    pub fn target(&self) -> &Arc<GradedModule> {
        &self.target
    }

    #[inline]
    pub fn images(&self) -> &[FreeElement] {
        &self.images
    }

    #[inline]
    pub fn ring(&self) -> &PolyRing {
        self.source.ring()
    }

    fn apply_unreduced(&self, v: &FreeElement) -> Result<FreeElement> {
        v.check_in(self.source.generators())?;
        Ok(FreeElement::linear_combination(
            self.ring(),
            self.target.rank(),
            v.degree(),
            v.comps(),
            &self.images,
        ))
    }

    /// Image of an element of the source's generator module, in normal form.
    pub fn apply(&self, v: &FreeElement) -> Result<FreeElement> {
        Ok(self.target.reduce(&self.apply_unreduced(v)?))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GradedMap) -> Result<GradedMap> {
        first.compose(self)
    }

    /// `second ∘ self`.
    pub fn compose(&self, second: &GradedMap) -> Result<GradedMap> {
        if !self.target.same_presentation(&second.source) {
            return Err(Error::SourceTargetMismatch(
                "target of the first map differs from the source of the second".into(),
            ));
        }
        let images = self
            .images
            .iter()
            .map(|v| second.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Self::new_unchecked(self.source.clone(), second.target.clone(), images)
    }

    fn check_parallel(&self, other: &GradedMap) -> Result<()> {
        if !self.source.same_presentation(&other.source) || !self.target.same_presentation(&other.target) {
            return Err(Error::SourceTargetMismatch("maps are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap> {
        self.check_parallel(other)?;
        let ring = *self.ring();
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| {
                let mut s = a.add_scaled(&ring, 1, &crate::ring::Monomial::one(ring.nvars()), b);
                s.degree = a.degree();
                s
            })
            .collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), images)
    }

    pub fn scale(&self, c: i64) -> GradedMap {
        let ring = *self.ring();
        let c = ring.field().from_i64(c);
        let images = self.images.iter().map(|v| v.scale(&ring, c)).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), images).expect("scaling preserves shape")
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(FreeElement::is_zero)
    }

    /// Equal as maps of modules (same endpoints, same generator images).
    pub fn equals(&self, other: &GradedMap) -> bool {
        self.check_parallel(other).is_ok() && self.images == other.images
    }

    /// For each source relation `R_j`, coefficients `c_j` with
    /// `φ(R_j) = Σ_k c_jk · (target relation k)` in `G0`.
    pub fn certificate(&self) -> Result<Vec<FreeElement>> {
        let ring = *self.ring();
        let lifter = Lifter::new(&ring, self.target.generators(), self.target.relations(), &[])?;
        self.source
            .relations()
            .iter()
            .enumerate()
            .map(|(j, r)| {
                let v = self.apply_unreduced(r)?;
                if v.is_zero() {
                    return Ok(FreeElement::zero(self.target.relations().len(), v.degree()));
                }
                lifter
                    .lift(&v)
                    .ok_or_else(|| Error::NotWellDefined(format!("relation {j} has no lift")))
            })
            .collect()
    }

    /// Substitutes a certificate back and checks every identity exactly.
    pub fn verify_certificate(&self, cert: &[FreeElement]) -> bool {
        let ring = *self.ring();
        if cert.len() != self.source.relations().len() {
            return false;
        }
        self.source.relations().iter().zip(cert).all(|(r, c)| {
            let Ok(v) = self.apply_unreduced(r) else { return false };
            if c.rank() != self.target.relations().len() {
                return false;
            }
            let w = FreeElement::linear_combination(&ring, self.target.rank(), v.degree(), c.comps(), self.target.relations());
            v.comps() == w.comps()
        })
    }

    /// Image rows formatted with the polynomial grammar.
    pub fn matrix_strings(&self) -> Vec<Vec<String>> {
        self.images.iter().map(|v| v.to_strings(self.ring())).collect()
    }
}
