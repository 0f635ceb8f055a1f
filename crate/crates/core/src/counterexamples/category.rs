use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::PrimeField;

/// A morphism `source → target` given by a `dim(target) × dim(source)` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub matrix: Matrix,
}

impl Arrow {
    pub fn new(source: usize, target: usize, matrix: Matrix) -> Self {
        Arrow { source, target, matrix }
    }

    pub fn identity(object: usize, dim: usize) -> Self {
        Arrow::new(object, object, Matrix::identity(dim))
    }
}

/// A finite category of matrices: objects are vector-space dimensions and
/// composition is the matrix product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    field: PrimeField,
    dims: Vec<usize>,
    objects: BTreeSet<usize>,
    arrows: BTreeSet<Arrow>,
}

impl FiniteCategory {
    /// Validates shapes, identities, closure under composition and associativity.
    pub fn new(field: PrimeField, dims: Vec<usize>, objects: BTreeSet<usize>, arrows: BTreeSet<Arrow>) -> Result<Self> {
        if let Some(&o) = objects.iter().find(|&&o| o >= dims.len()) {
            return Err(Error::InvalidCategory(format!("object {o} has no dimension")));
        }
        for a in &arrows {
            if !objects.contains(&a.source) || !objects.contains(&a.target) {
                return Err(Error::InvalidCategory("arrow between missing objects".into()));
            }
            if a.matrix.rows() != dims[a.target] || a.matrix.cols() != dims[a.source] {
                return Err(Error::InvalidCategory(format!(
                    "arrow {} → {} has a {}×{} matrix",
                    a.source,
                    a.target,
                    a.matrix.rows(),
                    a.matrix.cols()
                )));
            }
        }
        for &o in &objects {
            if !arrows.contains(&Arrow::identity(o, dims[o])) {
                return Err(Error::InvalidCategory(format!("object {o} lacks its identity")));
            }
        }
        let cat = FiniteCategory {
            field,
            dims,
            objects,
            arrows,
        };
        for f in &cat.arrows {
            for g in cat.arrows_from(f.target) {
                let gf = cat.compose(g, f);
                if !cat.arrows.contains(&gf) {
                    return Err(Error::InvalidCategory(format!(
                        "composite {} → {} → {} is missing",
                        f.source, f.target, g.target
                    )));
                }
                for h in cat.arrows_from(g.target) {
                    if cat.compose(h, &gf) != cat.compose(&cat.compose(h, g), f) {
                        return Err(Error::InvalidCategory("composition is not associative".into()));
                    }
                }
            }
        }
        Ok(cat)
    }

    /// All matrices between the given objects: the category of vector spaces
    /// restricted to those dimensions. Feasible only for tiny fields and dimensions.
    pub fn all_linear_maps(field: PrimeField, dims: Vec<usize>) -> Result<Self> {
        let objects: BTreeSet<usize> = (0..dims.len()).collect();
        let mut arrows = BTreeSet::new();
        let p = field.characteristic();
        for &s in &objects {
            for &t in &objects {
                let n = (dims[s] * dims[t]) as u32;
                let count = p
                    .checked_pow(n)
                    .filter(|&c| c <= super::DEFAULT_CAP)
                    .ok_or_else(|| Error::TooLarge(format!("{p}^{n} matrices")))?;
                for mut idx in 0..count {
                    let data = (0..n)
                        .map(|_| {
                            let c = idx % p;
                            idx /= p;
                            c
                        })
                        .collect();
                    arrows.insert(Arrow::new(s, t, Matrix::from_flat(dims[t], dims[s], data)));
                }
            }
        }
        Self::new(field, dims, objects, arrows)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    #[inline]
    pub fn objects(&self) -> &BTreeSet<usize> {
        &self.objects
    }

    #[inline]
    pub fn arrows(&self) -> &BTreeSet<Arrow> {
        &self.arrows
    }

    pub fn contains(&self, a: &Arrow) -> bool {
        self.arrows.contains(a)
    }

    pub fn hom(&self, s: usize, t: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.source == s && a.target == t)
    }

    fn arrows_from(&self, s: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.source == s)
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &Arrow, f: &Arrow) -> Arrow {
        debug_assert_eq!(f.target, g.source);
        Arrow::new(f.source, g.target, g.matrix.mul(self.field, &f.matrix))
    }

    /// The inverse of `a` when it exists inside this category.
    pub fn inverse_in(&self, a: &Arrow) -> Option<Arrow> {
        let inv = Arrow::new(a.target, a.source, a.matrix.inverse(self.field)?);
        self.arrows.contains(&inv).then_some(inv)
    }
}

/// The smallest subcategory of `cat` containing `gens`, their endpoints'
/// identities, and the inverses of members invertible in `cat`.
pub fn conimg_closure(gens: &[Arrow], cat: &FiniteCategory) -> Result<FiniteCategory> {
    if let Some(g) = gens.iter().find(|g| !cat.contains(g)) {
        return Err(Error::HypothesisViolation(format!(
            "generator {} → {} is not a morphism of the category",
            g.source, g.target
        )));
    }
    let objects: BTreeSet<usize> = gens.iter().flat_map(|g| [g.source, g.target]).collect();
    let mut arrows: BTreeSet<Arrow> = gens.iter().cloned().collect();
    arrows.extend(objects.iter().map(|&o| Arrow::identity(o, cat.dims[o])));
    let mut frontier: Vec<Arrow> = arrows.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for a in &frontier {
            if let Some(inv) = cat.inverse_in(a) {
                fresh.push(inv);
            }
            for b in &arrows {
                if a.target == b.source {
                    fresh.push(cat.compose(b, a));
                }
                if b.target == a.source {
                    fresh.push(cat.compose(a, b));
                }
            }
        }
        frontier = fresh.into_iter().filter(|a| arrows.insert(a.clone())).collect();
    }
    FiniteCategory::new(cat.field, cat.dims.clone(), objects, arrows)
}

/// A functor `H: D → B` given on every arrow of `D`, plus its object map.
#[derive(Debug, Clone)]
pub struct FunctorTable {
    pub objects: Vec<usize>,
    pub arrows: BTreeMap<Arrow, Arrow>,
}

impl FunctorTable {
    fn check(&self, d: &FiniteCategory, b: &FiniteCategory) -> Result<()> {
        let bad = |msg: &str| Err(Error::HypothesisViolation(msg.into()));
        for a in d.arrows() {
            let Some(h) = self.arrows.get(a) else { return bad("functor table misses an arrow") };
            if !b.contains(h) || h.source != self.objects[a.source] || h.target != self.objects[a.target] {
                return bad("functor table sends an arrow outside the target category");
            }
        }
        for f in d.arrows() {
            for g in d.arrows().iter().filter(|g| g.source == f.target) {
                if self.arrows[&d.compose(g, f)] != b.compose(&self.arrows[g], &self.arrows[f]) {
                    return bad("functor table does not respect composition");
                }
            }
        }
        Ok(())
    }
}

/// Given `Q` (by generator images in `D`), `G = H ∘ Q` (by generator images
/// in `B`) and `H` (by a full table), verifies that `Q`'s conservative image
/// is all of `D` and compares the conservative images of `G` and `H`.
pub fn conimg_factorization_check(
    d: &FiniteCategory,
    b: &FiniteCategory,
    q_images: &[Arrow],
    g_images: &[Arrow],
    h: &FunctorTable,
) -> Result<bool> {
    h.check(d, b)?;
    let q_closure = conimg_closure(q_images, d)?;
    if q_closure != *d {
        return Err(Error::HypothesisViolation(
            "the conservative image of Q is not the whole intermediate category".into(),
        ));
    }
    if q_images.len() != g_images.len() || q_images.iter().zip(g_images).any(|(q, g)| h.arrows[q] != *g) {
        return Err(Error::HypothesisViolation("H ∘ Q differs from G on generators".into()));
    }
    let h_images: Vec<Arrow> = d.arrows().iter().map(|a| h.arrows[a].clone()).collect();
    Ok(conimg_closure(g_images, b)? == conimg_closure(&h_images, b)?)
}
