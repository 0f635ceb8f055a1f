use std::collections::HashMap;
use std::sync::Arc;

use super::{GradedMap, GradedModule};
use crate::error::Result;
use crate::groebner::FreeElement;
use crate::linalg::Matrix;
use crate::ring::{Monomial, PolyRing};

/// Standard-monomial basis of `M_d` with an index for coordinate lookups.
pub(crate) struct PieceBasis {
    pub basis: Vec<(usize, Monomial)>,
    pub index: HashMap<(usize, Monomial), usize>,
}

impl PieceBasis {
    pub fn new(m: &GradedModule, d: i64) -> Self {
        let basis = m.gb().standard_monomials(d);
        let index = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        PieceBasis { basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, m: &GradedModule, v: &FreeElement) -> Vec<u64> {
        m.gb().coordinates(v, &self.index, self.dim())
    }

    pub fn element(&self, m: &GradedModule, ring: &PolyRing, degree: i64, coords: &[u64]) -> FreeElement {
        let mut v = FreeElement::zero(m.rank(), degree);
        for ((c, mono), &a) in self.basis.iter().zip(coords) {
            if a != 0 {
                v.comps[*c] = ring.add_unchecked(&v.comps[*c], &ring.term(ring.field().to_signed(a), mono.clone()));
            }
        }
        v
    }
}

/// A basis of `Hom_S(M, N)_0`: generator images in `N_{a_i}` subject to every
/// relation of `M` vanishing in `N`.
pub fn hom_degree_zero(m: &Arc<GradedModule>, n: &Arc<GradedModule>) -> Result<Vec<GradedMap>> {
    let ring = *m.ring();
    let field = ring.field();
    let pieces: Vec<PieceBasis> = m.generator_degrees().iter().map(|&a| PieceBasis::new(n, a)).collect();
    let offsets: Vec<usize> = pieces
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.dim();
            Some(o)
        })
        .collect();
    let nvars_total: usize = pieces.iter().map(PieceBasis::dim).sum();

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for rel in m.relations() {
        let target = PieceBasis::new(n, rel.degree());
        if target.dim() == 0 {
            continue;
        }
        let mut block = vec![vec![0u64; nvars_total]; target.dim()];
        for (i, piece) in pieces.iter().enumerate() {
            let coeff = rel.comp(i);
            if coeff.is_zero() {
                continue;
            }
            for (k, (c, mono)) in piece.basis.iter().enumerate() {
                let b = n.monomial_element(*c, mono.clone());
                let v = b.mul_poly(&ring, coeff);
                for (row, x) in block.iter_mut().zip(target.coordinates(n, &v)) {
                    row[offsets[i] + k] = x;
                }
            }
        }
        rows.extend(block);
    }

    let mut sys = Matrix::zeros(rows.len(), nvars_total);
    for (r, row) in rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            sys[(r, c)] = x;
        }
    }
    let mut out = Vec::new();
    for sol in sys.kernel(field) {
        let images = pieces
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let a = m.generators().degree(i);
                p.element(n, &ring, a, &sol[offsets[i]..offsets[i] + p.dim()])
            })
            .collect();
        out.push(GradedMap::new_unchecked(m.clone(), n.clone(), images)?);
    }
    Ok(out)
}
