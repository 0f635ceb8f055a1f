use std::cmp::Ordering;

use super::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u64,
}

/// A homogeneous polynomial: nonzero terms, strictly decreasing in degrevlex,
/// all of one total degree. The zero polynomial has no terms and no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedPolynomial {
    pub(crate) terms: Vec<Term>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        GradedPolynomial { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.mono.degree())
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff_of(&self, m: &Monomial) -> u64 {
        self.terms
            .binary_search_by(|t| m.cmp(&t.mono))
            .map(|i| self.terms[i].coeff)
            .unwrap_or(0)
    }

    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].mono > w[1].mono));
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        GradedPolynomial { terms }
    }

    pub(crate) fn pop_lead(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Appends a term smaller than every present term.
    pub(crate) fn push_smallest(&mut self, t: Term) {
        debug_assert!(self.terms.last().is_none_or(|l| l.mono > t.mono));
        self.terms.push(t);
    }
}

/// Merges `f + c * m * g` over `F_p`; `m` may be the unit monomial.
pub(crate) fn merge_add_scaled(
    p: u64,
    f: &GradedPolynomial,
    c: u64,
    m: &Monomial,
    g: &GradedPolynomial,
) -> GradedPolynomial {
    if c == 0 || g.is_zero() {
        return f.clone();
    }
    let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
    let mut i = 0;
    let mut gi = g.terms.iter().map(|t| Term {
        mono: if m.is_one() { t.mono.clone() } else { t.mono.mul(m) },
        coeff: t.coeff * c % p,
    });
    let mut next_g = gi.next();
    loop {
        match (f.terms.get(i), next_g.take()) {
            (None, None) => break,
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, Some(b)) => {
                out.push(b);
                next_g = gi.next();
            }
            (Some(a), Some(b)) => match a.mono.cmp(&b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                    next_g = Some(b);
                }
                Ordering::Less => {
                    out.push(b);
                    next_g = gi.next();
                }
                Ordering::Equal => {
                    let s = (a.coeff + b.coeff) % p;
                    if s != 0 {
                        out.push(Term {
                            mono: b.mono,
                            coeff: s,
                        });
                    }
                    i += 1;
                    next_g = gi.next();
                }
            },
        }
    }
    GradedPolynomial { terms: out }
}
