use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{GradedPolynomial, Monomial, PolyRing, Term};

/// A graded free module `S(-a_0) ⊕ ... ⊕ S(-a_{r-1})`, recorded by its generator degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeModule {
    degrees: Vec<i64>,
}

impl FreeModule {
    pub fn new(degrees: Vec<i64>) -> Self {
        FreeModule { degrees }
    }

    pub fn zero() -> Self {
        FreeModule { degrees: Vec::new() }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    #[inline]
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    #[inline]
    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut d = self.degrees.clone();
        d.extend_from_slice(&other.degrees);
        FreeModule { degrees: d }
    }

    /// `F(k)`: every generator degree drops by `k`.
    pub fn twist(&self, k: i64) -> FreeModule {
        FreeModule {
            degrees: self.degrees.iter().map(|d| d - k).collect(),
        }
    }

    /// The basis vector `e_i`.
    pub fn basis_element(&self, i: usize, ring: &PolyRing) -> FreeElement {
        let mut comps = vec![GradedPolynomial::zero(); self.rank()];
        comps[i] = ring.one();
        FreeElement {
            comps,
            degree: self.degrees[i],
        }
    }

    /// Polynomial degree a homogeneous element of degree `d` has in component `i`.
    #[inline]
    pub fn component_degree(&self, d: i64, i: usize) -> i64 {
        d - self.degrees[i]
    }
}

/// A homogeneous element of a [`FreeModule`]: one polynomial per generator.
///
/// Zero elements still carry a nominal degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeElement {
    pub(crate) comps: Vec<GradedPolynomial>,
    pub(crate) degree: i64,
}

impl FreeElement {
    /// Infers the degree from the first nonzero component and checks homogeneity.
    /// An all-zero vector needs [`FreeElement::zero`] instead.
    pub fn new(ambient: &FreeModule, comps: Vec<GradedPolynomial>) -> Result<Self> {
        if comps.len() != ambient.rank() {
            return Err(Error::AmbientMismatch(format!(
                "{} components for a rank {} module",
                comps.len(),
                ambient.rank()
            )));
        }
        let degree = comps
            .iter()
            .enumerate()
            .find_map(|(i, f)| f.degree().map(|d| d as i64 + ambient.degree(i)))
            .ok_or_else(|| Error::InhomogeneousInput("zero vector has no inferable degree".into()))?;
        let e = FreeElement { comps, degree };
        e.check_in(ambient)?;
        Ok(e)
    }

    pub fn with_degree(ambient: &FreeModule, comps: Vec<GradedPolynomial>, degree: i64) -> Result<Self> {
        let e = FreeElement { comps, degree };
        e.check_in(ambient)?;
        Ok(e)
    }

    pub fn zero(rank: usize, degree: i64) -> Self {
        FreeElement {
            comps: vec![GradedPolynomial::zero(); rank],
            degree,
        }
    }

    /// Verifies rank and the degree-shift rule of `ambient`.
    pub fn check_in(&self, ambient: &FreeModule) -> Result<()> {
        if self.comps.len() != ambient.rank() {
            return Err(Error::AmbientMismatch(format!(
                "element of rank {} in module of rank {}",
                self.comps.len(),
                ambient.rank()
            )));
        }
        for (i, f) in self.comps.iter().enumerate() {
            if let Some(d) = f.degree() {
                if d as i64 + ambient.degree(i) != self.degree {
                    return Err(Error::InhomogeneousInput(format!(
                        "component {i} has degree {d} but the element has degree {} over a generator of degree {}",
                        self.degree,
                        ambient.degree(i)
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn degree(&self) -> i64 {
        self.degree
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    #[inline]
    pub fn comps(&self) -> &[GradedPolynomial] {
        &self.comps
    }

    #[inline]
    pub fn comp(&self, i: usize) -> &GradedPolynomial {
        &self.comps[i]
    }

    pub fn into_comps(self) -> Vec<GradedPolynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(GradedPolynomial::is_zero)
    }

    /// Leading term in position-over-term order: the first nonzero component wins.
    pub fn lead(&self) -> Option<(usize, &Term)> {
        self.comps
            .iter()
            .enumerate()
            .find_map(|(i, f)| f.lead().map(|t| (i, t)))
    }

    pub fn add(&self, ring: &PolyRing, other: &FreeElement) -> Result<FreeElement> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(ring, 1, &Monomial::one(ring.nvars()), other))
    }

    pub fn sub(&self, ring: &PolyRing, other: &FreeElement) -> Result<FreeElement> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(ring, ring.field().neg(1), &Monomial::one(ring.nvars()), other))
    }

    fn check_compatible(&self, other: &FreeElement) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::AmbientMismatch("ranks differ".into()));
        }
        if !self.is_zero() && !other.is_zero() && self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    /// `self + c * m * other`, no degree checks.
    pub(crate) fn add_scaled(&self, ring: &PolyRing, c: u64, m: &Monomial, other: &FreeElement) -> FreeElement {
        let degree = if self.is_zero() {
            other.degree + m.degree() as i64
        } else {
            self.degree
        };
        FreeElement {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| ring.add_scaled(a, c, m, b))
                .collect(),
            degree,
        }
    }

    pub fn scale(&self, ring: &PolyRing, c: u64) -> FreeElement {
        FreeElement {
            comps: self.comps.iter().map(|f| ring.scale(f, c)).collect(),
            degree: self.degree,
        }
    }

    pub fn neg(&self, ring: &PolyRing) -> FreeElement {
        self.scale(ring, ring.field().neg(1))
    }

    pub fn mul_term(&self, ring: &PolyRing, c: u64, m: &Monomial) -> FreeElement {
        FreeElement {
            comps: self.comps.iter().map(|f| ring.mul_term(f, c, m)).collect(),
            degree: self.degree + m.degree() as i64,
        }
    }

    pub fn mul_poly(&self, ring: &PolyRing, f: &GradedPolynomial) -> FreeElement {
        FreeElement {
            comps: self.comps.iter().map(|g| ring.mul(f, g)).collect(),
            degree: self.degree + f.degree().unwrap_or(0) as i64,
        }
    }

    /// `Σ coeffs[i] * elems[i]` as an element of degree `degree`.
    pub fn linear_combination(
        ring: &PolyRing,
        rank: usize,
        degree: i64,
        coeffs: &[GradedPolynomial],
        elems: &[FreeElement],
    ) -> FreeElement {
        assert_eq!(coeffs.len(), elems.len());
        let mut acc = FreeElement::zero(rank, degree);
        for (c, e) in coeffs.iter().zip(elems) {
            for t in c.terms() {
                acc = acc.add_scaled(ring, t.coeff, &t.mono, e);
            }
        }
        acc.degree = degree;
        acc
    }

    /// Concatenates components: `(self, other)` in `F ⊕ G`.
    pub fn concat(&self, other: &FreeElement) -> FreeElement {
        let mut comps = self.comps.clone();
        comps.extend(other.comps.iter().cloned());
        FreeElement {
            comps,
            degree: self.degree,
        }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> FreeElement {
        FreeElement {
            comps: self.comps[range].to_vec(),
            degree: self.degree,
        }
    }

    /// Shifts the nominal degree, as when viewing the element in a twisted module.
    pub fn shifted(&self, k: i64) -> FreeElement {
        FreeElement {
            comps: self.comps.clone(),
            degree: self.degree + k,
        }
    }

    /// Formats each component with the ring's polynomial grammar.
    pub fn to_strings(&self, ring: &PolyRing) -> Vec<String> {
        self.comps.iter().map(|f| ring.format(f)).collect()
    }
}

/// Position-over-term comparison of module terms `(component, monomial)`:
/// lower component index is larger; ties broken by degrevlex.
pub fn cmp_module_terms(a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => a.1.cmp(b.1),
        o => o,
    }
}
