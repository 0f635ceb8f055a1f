//! Finitely presented graded `S`-modules and degree-zero maps between them.
//!
//! A module is stored as `F0 / U`: generator degrees of the free module `F0`
//! and homogeneous relations generating `U`. The reduced Gröbner basis of `U`
//! is computed once at construction; graded pieces, normal forms and
//! equality tests all go through it.

mod hilbert;
mod hom;
pub mod json;
mod map;
mod ops;
mod resolution;
mod torsion;

use std::sync::Arc;

pub use hilbert::{hilbert, hilbert_window, HilbertData, HilbertPolynomial};
pub use hom::hom_degree_zero;
pub use map::GradedMap;
pub use ops::{cokernel, direct_sum, image, kernel, minimal_generators, submodule_presentation, truncate, twist};
pub use resolution::{min_free_resolution, regularity, FreeResolution};
pub use torsion::{is_torsion, torsion_submodule, torsion_top_degree, TorsionDecomposition};

use crate::error::Result;
use crate::groebner::{buchberger, FreeElement, FreeModule, GroebnerBasis};
use crate::ring::{Monomial, PolyRing};

/// `M = F0 / ⟨relations⟩`.
#[derive(Debug, Clone)]
pub struct GradedModule {
    ring: PolyRing,
    free: FreeModule,
    relations: Vec<FreeElement>,
    gb: GroebnerBasis,
}

impl GradedModule {
    pub fn new(ring: PolyRing, free: FreeModule, relations: Vec<FreeElement>) -> Result<Self> {
        let relations: Vec<FreeElement> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        let gb = buchberger(&ring, &relations, &free)?;
        Ok(GradedModule {
            ring,
            free,
            relations,
            gb,
        })
    }

    /// Wraps an already computed Gröbner basis; the basis doubles as the relation list.
    pub fn from_basis(gb: GroebnerBasis) -> Self {
        GradedModule {
            ring: *gb.ring(),
            free: gb.ambient().clone(),
            relations: gb.elements().to_vec(),
            gb,
        }
    }

    /// The free module `⊕ S(-a_i)` with the given generator degrees.
    pub fn free(ring: PolyRing, degrees: Vec<i64>) -> Self {
        let free = FreeModule::new(degrees);
        GradedModule {
            gb: GroebnerBasis::empty(ring, free.clone()),
            ring,
            free,
            relations: Vec::new(),
        }
    }

    /// `S(k)`, generated in degree `-k`.
    pub fn twisted_ring(ring: PolyRing, k: i64) -> Self {
        Self::free(ring, vec![-k])
    }

    pub fn zero(ring: PolyRing) -> Self {
        Self::free(ring, Vec::new())
    }

    /// `S(-degree) / ⟨polys⟩` with polynomials in the text grammar.
    pub fn cyclic(ring: PolyRing, degree: i64, polys: &[&str]) -> Result<Self> {
        let rels: Vec<Vec<&str>> = polys.iter().map(|p| vec![*p]).collect();
        Self::from_strings(ring, vec![degree], &rels)
    }

    /// Builds a presentation from generator degrees and relation rows of polynomial strings.
    pub fn from_strings(ring: PolyRing, degrees: Vec<i64>, rows: &[Vec<&str>]) -> Result<Self> {
        let free = FreeModule::new(degrees);
        let mut rels = Vec::new();
        for row in rows {
            let comps = row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
            if comps.iter().all(|c| c.is_zero()) {
                continue;
            }
            rels.push(FreeElement::new(&free, comps)?);
        }
        Self::new(ring, free, rels)
    }

    /// `S(-degree) / m^k`.
    pub fn power_of_irrelevant(ring: PolyRing, degree: i64, k: u32) -> Result<Self> {
        let free = FreeModule::new(vec![degree]);
        let rels = ring
            .monomial_basis(k as i64)
            .into_iter()
            .map(|m| FreeElement::new(&free, vec![ring.term(1, m)]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, free, rels)
    }

    #[inline]
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// The free module `F0` of generators.
    #[inline]
    pub fn generators(&self) -> &FreeModule {
        &self.free
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.free.rank()
    }

    #[inline]
    pub fn generator_degrees(&self) -> &[i64] {
        self.free.degrees()
    }

    #[inline]
    pub fn relations(&self) -> &[FreeElement] {
        &self.relations
    }

    #[inline]
    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn min_generator_degree(&self) -> Option<i64> {
        self.free.degrees().iter().copied().min()
    }

    pub fn max_generator_degree(&self) -> Option<i64> {
        self.free.degrees().iter().copied().max()
    }

    /// True iff every generator is a relation.
    pub fn is_zero(&self) -> bool {
        self.gb.is_full()
    }

    /// `dim_k M_d`.
    pub fn dim(&self, d: i64) -> usize {
        self.gb.standard_monomials(d).len()
    }

    /// Standard-monomial basis of `M_d` as elements of `F0`.
    pub fn graded_piece_basis(&self, d: i64) -> Vec<FreeElement> {
        self.gb
            .standard_monomials(d)
            .into_iter()
            .map(|(c, m)| self.monomial_element(c, m))
            .collect()
    }

    pub(crate) fn monomial_element(&self, c: usize, m: Monomial) -> FreeElement {
        let deg = m.degree() as i64 + self.free.degree(c);
        let mut e = FreeElement::zero(self.rank(), deg);
        e.comps[c] = self.ring.term(1, m);
        e
    }

    /// Normal form of an element of `F0` modulo the relations.
    pub fn reduce(&self, v: &FreeElement) -> FreeElement {
        self.gb.normal_form(v)
    }

    /// Parses one element of `F0` from a row of polynomial strings.
    pub fn element(&self, row: &[&str]) -> Result<FreeElement> {
        let comps = row.iter().map(|s| self.ring.parse(s)).collect::<Result<Vec<_>>>()?;
        FreeElement::new(&self.free, comps)
    }

    /// Same ring, same generator degrees and same relation submodule.
    pub fn same_presentation(&self, other: &GradedModule) -> bool {
        self.ring == other.ring && self.free == other.free && self.gb == other.gb
    }

    /// Replaces a zero module by the rank-zero presentation; other modules are unchanged.
    pub fn normalized(&self) -> GradedModule {
        if self.is_zero() {
            GradedModule::zero(self.ring)
        } else {
            self.clone()
        }
    }

    pub fn into_arc(self) -> Arc<GradedModule> {
        Arc::new(self)
    }
}
