//! The standard-graded polynomial ring `S = F_p[x0, ..., xn]`.
//!
//! Polynomials are plain data ([`GradedPolynomial`]); all arithmetic goes through
//! a [`PolyRing`] context, which carries the characteristic and the number of
//! variables. Terms are kept sorted in degree reverse lexicographic order.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use poly::{GradedPolynomial, Term};

pub(crate) use poly::merge_add_scaled;

use crate::error::{Error, Result};

/// `F_p[x0, ..., x_{nvars-1}]` with `deg x_i = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    nvars: usize,
}

impl PolyRing {
    pub fn new(p: u64, nvars: usize) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::Parse("polynomial ring needs at least one variable".into()));
        }
        Ok(PolyRing {
            field: PrimeField::new(p)?,
            nvars,
        })
    }

    /// Homogeneous coordinate ring of `P^n` over `F_p`.
    pub fn projective(p: u64, n: usize) -> Result<Self> {
        Self::new(p, n + 1)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Dimension `n` of the projective space `Proj S = P^n`.
    #[inline]
    pub fn projective_dimension(&self) -> usize {
        self.nvars - 1
    }

    pub fn zero(&self) -> GradedPolynomial {
        GradedPolynomial::zero()
    }

    pub fn one(&self) -> GradedPolynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> GradedPolynomial {
        self.term(c, Monomial::one(self.nvars))
    }

    pub fn var(&self, i: usize) -> GradedPolynomial {
        self.term(1, Monomial::var(self.nvars, i))
    }

    pub fn term(&self, c: i64, m: Monomial) -> GradedPolynomial {
        assert_eq!(m.nvars(), self.nvars);
        let c = self.field.from_i64(c);
        if c == 0 {
            GradedPolynomial::zero()
        } else {
            GradedPolynomial::from_sorted_terms(vec![Term { mono: m, coeff: c }])
        }
    }

    /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
    /// Fails if the nonzero result is not homogeneous.
    pub fn from_terms<I>(&self, terms: I) -> Result<GradedPolynomial>
    where
        I: IntoIterator<Item = (i64, Monomial)>,
    {
        let mut ts: Vec<(Monomial, u64)> = terms
            .into_iter()
            .map(|(c, m)| {
                assert_eq!(m.nvars(), self.nvars);
                (m, self.field.from_i64(c))
            })
            .collect();
        ts.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<Term> = Vec::with_capacity(ts.len());
        for (m, c) in ts {
            match out.last_mut() {
                Some(last) if last.mono == m => last.coeff = self.field.add(last.coeff, c),
                _ => out.push(Term { mono: m, coeff: c }),
            }
        }
        out.retain(|t| t.coeff != 0);
        if let Some(first) = out.first() {
            let d = first.mono.degree();
            if let Some(bad) = out.iter().find(|t| t.mono.degree() != d) {
                return Err(Error::InhomogeneousInput(format!(
                    "terms of degree {} and {}",
                    d,
                    bad.mono.degree()
                )));
            }
        }
        Ok(GradedPolynomial::from_sorted_terms(out))
    }

    /// Sum of two homogeneous polynomials of equal degree.
    pub fn add(&self, f: &GradedPolynomial, g: &GradedPolynomial) -> Result<GradedPolynomial> {
        self.check_same_degree(f, g)?;
        Ok(self.add_unchecked(f, g))
    }

    pub fn sub(&self, f: &GradedPolynomial, g: &GradedPolynomial) -> Result<GradedPolynomial> {
        self.check_same_degree(f, g)?;
        Ok(self.add_scaled(f, self.field.neg(1), &Monomial::one(self.nvars), g))
    }

    fn check_same_degree(&self, f: &GradedPolynomial, g: &GradedPolynomial) -> Result<()> {
        match (f.degree(), g.degree()) {
            (Some(a), Some(b)) if a != b => Err(Error::DegreeMismatch {
                left: a as i64,
                right: b as i64,
            }),
            _ => Ok(()),
        }
    }

    pub(crate) fn add_unchecked(&self, f: &GradedPolynomial, g: &GradedPolynomial) -> GradedPolynomial {
        merge_add_scaled(self.characteristic(), f, 1, &Monomial::one(self.nvars), g)
    }

    /// `f + c * m * g`.
    #[inline]
    pub(crate) fn add_scaled(
        &self,
        f: &GradedPolynomial,
        c: u64,
        m: &Monomial,
        g: &GradedPolynomial,
    ) -> GradedPolynomial {
        merge_add_scaled(self.characteristic(), f, c, m, g)
    }

    pub fn neg(&self, f: &GradedPolynomial) -> GradedPolynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &GradedPolynomial, c: u64) -> GradedPolynomial {
        let c = c % self.characteristic();
        if c == 0 {
            return GradedPolynomial::zero();
        }
        GradedPolynomial::from_sorted_terms(
            f.terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: self.field.mul(t.coeff, c),
                })
                .collect(),
        )
    }

    /// `c * m * f`.
    pub fn mul_term(&self, f: &GradedPolynomial, c: u64, m: &Monomial) -> GradedPolynomial {
        let c = c % self.characteristic();
        if c == 0 {
            return GradedPolynomial::zero();
        }
        // multiplication by a monomial preserves the order
        GradedPolynomial::from_sorted_terms(
            f.terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: self.field.mul(t.coeff, c),
                })
                .collect(),
        )
    }

    pub fn mul(&self, f: &GradedPolynomial, g: &GradedPolynomial) -> GradedPolynomial {
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = GradedPolynomial::zero();
        for t in &small.terms {
            acc = self.add_scaled(&acc, t.coeff, &t.mono, big);
        }
        acc
    }

    /// All monomials of degree `d`, descending; `C(n+d, n)` of them for `d >= 0`.
    pub fn monomial_basis(&self, d: i64) -> Vec<Monomial> {
        monomial::monomials_of_degree(self.nvars, d)
    }

    /// Parses the text grammar `3*x0^2*x1 - x1^3 + 2`.
    pub fn parse(&self, s: &str) -> Result<GradedPolynomial> {
        parse::parse_polynomial(self, s)
    }

    /// Canonical text form; `parse(format(f)) == f`.
    pub fn format(&self, f: &GradedPolynomial) -> String {
        parse::format_polynomial(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, n: usize) -> PolyRing {
        PolyRing::new(p, n).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = ring(3, 2);
        let x = r.var(0);
        let y = r.var(1);
        assert!(r.add(&x, &r.neg(&x)).unwrap().is_zero());
        assert_eq!(r.format(&r.add(&x, &y).unwrap()), "x0+x1");
        // 2 + 2 = 1 mod 3
        let two_x = r.scale(&x, 2);
        assert_eq!(r.add(&two_x, &two_x).unwrap(), x);
    }

    #[test]
    fn add_rejects_degree_mismatch() {
        let r = ring(3, 2);
        let x = r.var(0);
        let xy = r.mul(&x, &r.var(1));
        assert_eq!(
            r.add(&x, &xy),
            Err(Error::DegreeMismatch { left: 1, right: 2 })
        );
        assert_eq!(r.add(&r.zero(), &xy).unwrap(), xy);
    }

    #[test]
    fn mul_examples() {
        let r = ring(2, 2);
        let x = r.var(0);
        let y = r.var(1);
        assert_eq!(r.format(&r.mul(&x, &y)), "x0*x1");
        let s = r.add(&x, &y).unwrap();
        assert_eq!(r.format(&r.mul(&s, &s)), "x0^2+x1^2");
        assert!(r.mul(&s, &r.zero()).is_zero());
    }

    #[test]
    fn basis_counts() {
        assert_eq!(ring(3, 2).monomial_basis(2).len(), 3);
        assert_eq!(ring(3, 3).monomial_basis(0).len(), 1);
        assert_eq!(ring(3, 3).monomial_basis(3).len(), 10);
    }

    #[test]
    fn from_terms_rejects_inhomogeneous() {
        let r = ring(5, 2);
        let res = r.from_terms(vec![
            (1, Monomial::from_exponents(&[1, 0])),
            (1, Monomial::from_exponents(&[1, 1])),
        ]);
        assert!(matches!(res, Err(Error::InhomogeneousInput(_))));
    }
}
