use std::sync::Arc;

use super::{GradedMap, GradedModule};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, relations_of, FreeElement, FreeModule, GroebnerBasis};
use crate::ring::PolyRing;

/// Result of eliminating generators through relations with a unit entry.
pub(crate) struct Pruned {
    pub free: FreeModule,
    pub relations: Vec<FreeElement>,
    /// Indices of the surviving generators in the original list.
    pub kept: Vec<usize>,
    /// Each original generator written in the surviving ones.
    #[cfg_attr(not(test), allow(dead_code))]
    pub substitution: Vec<FreeElement>,
}

/// Removes generators `e_i` for which some relation has a nonzero constant in
/// slot `i`. The result presents the same module with a minimal generating set.
pub(crate) fn prune(ring: &PolyRing, free: &FreeModule, relations: &[FreeElement]) -> Pruned {
    let f = ring.field();
    let r = free.rank();
    let mut rels: Vec<FreeElement> = relations.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut subs: Vec<FreeElement> = (0..r).map(|i| free.basis_element(i, ring)).collect();
    let mut alive = vec![true; r];

    loop {
        let found = rels.iter().enumerate().find_map(|(k, rel)| {
            (0..r).find_map(|i| {
                let c = rel.comp(i);
                (alive[i] && !c.is_zero() && c.degree() == Some(0)).then(|| (k, i, c.terms()[0].coeff))
            })
        });
        let Some((k, i, c)) = found else { break };
        let pivot = rels.swap_remove(k);
        let cinv = f.inv(c);
        // v ↦ v - (v_i / c) * pivot kills slot i.
        let eliminate = |v: &FreeElement| -> FreeElement {
            let mut out = v.clone();
            for t in v.comp(i).terms() {
                out = out.add_scaled(ring, f.neg(f.mul(t.coeff, cinv)), &t.mono, &pivot);
            }
            out.degree = v.degree;
            out
        };
        for rel in rels.iter_mut() {
            *rel = eliminate(rel);
        }
        for s in subs.iter_mut() {
            *s = eliminate(s);
        }
        alive[i] = false;
        rels.retain(|v| !v.is_zero());
    }

    let kept: Vec<usize> = (0..r).filter(|&i| alive[i]).collect();
    let project = |v: &FreeElement| FreeElement {
        comps: kept.iter().map(|&i| v.comps[i].clone()).collect(),
        degree: v.degree,
    };
    Pruned {
        free: FreeModule::new(kept.iter().map(|&i| free.degree(i)).collect()),
        relations: rels.iter().map(project).collect(),
        substitution: subs.iter().map(project).collect(),
        kept,
    }
}

/// The submodule of `M` generated by `elems` (elements of `M`'s generator
/// module), with its inclusion into `M`. Redundant generators are pruned.
pub fn submodule_presentation(m: &Arc<GradedModule>, elems: &[FreeElement]) -> Result<(GradedModule, GradedMap)> {
    let ring = *m.ring();
    let elems: Vec<FreeElement> = elems
        .iter()
        .map(|e| m.reduce(e))
        .filter(|e| !e.is_zero())
        .collect();
    let (rels, tags) = relations_of(&ring, m.generators(), &elems, m.gb().elements())?;
    let pruned = prune(&ring, &tags, &rels);
    let sub = GradedModule::new(ring, pruned.free, pruned.relations)?;
    let images = pruned.kept.iter().map(|&i| elems[i].clone()).collect();
    let sub_arc = Arc::new(sub.clone());
    let incl = GradedMap::new_unchecked(sub_arc, m.clone(), images)?;
    Ok((sub, incl))
}

/// Kernel of `φ` with its inclusion into the source.
pub fn kernel(phi: &GradedMap) -> Result<(GradedModule, GradedMap)> {
    let ring = *phi.ring();
    let target = phi.target();
    let (preimages, _) = relations_of(&ring, target.generators(), phi.images(), target.gb().elements())?;
    submodule_presentation(phi.source(), &preimages)
}

/// `coker φ`, presented on the generators of the target.
pub fn cokernel(phi: &GradedMap) -> Result<GradedModule> {
    let target = phi.target();
    let mut rels = target.relations().to_vec();
    rels.extend(phi.images().iter().filter(|v| !v.is_zero()).cloned());
    GradedModule::new(*target.ring(), target.generators().clone(), rels)
}

/// Image of `φ` with its inclusion into the target.
pub fn image(phi: &GradedMap) -> Result<(GradedModule, GradedMap)> {
    submodule_presentation(phi.target(), phi.images())
}

/// `M_{≥d}` with its inclusion into `M`, minimally generated by a basis of
/// `M_d` together with the generators of degree above `d`.
pub fn truncate(m: &Arc<GradedModule>, d: i64) -> Result<(GradedModule, GradedMap)> {
    let ring = *m.ring();
    let mut elems = m.graded_piece_basis(d);
    for (i, &a) in m.generator_degrees().iter().enumerate() {
        if a > d {
            elems.push(m.generators().basis_element(i, &ring));
        }
    }
    submodule_presentation(m, &elems)
}

/// `M(k)`: same relations, generator degrees lowered by `k`, so `M(k)_d = M_{d+k}`.
pub fn twist(m: &GradedModule, k: i64) -> Result<GradedModule> {
    let rels = m.relations().iter().map(|v| v.shifted(-k)).collect();
    GradedModule::new(*m.ring(), m.generators().twist(k), rels)
}

pub fn direct_sum(m: &GradedModule, n: &GradedModule) -> Result<GradedModule> {
    if m.ring() != n.ring() {
        return Err(Error::AmbientMismatch("summands live over different rings".into()));
    }
    let free = m.generators().direct_sum(n.generators());
    let mut rels = Vec::new();
    for v in m.relations() {
        rels.push(v.concat(&FreeElement::zero(n.rank(), v.degree())));
    }
    for v in n.relations() {
        rels.push(FreeElement::zero(m.rank(), v.degree()).concat(v));
    }
    GradedModule::new(*m.ring(), free, rels)
}

/// A minimal generating subset of `⟨gens⟩`, chosen greedily by degree.
pub fn minimal_generators(ring: &PolyRing, ambient: &FreeModule, gens: &[FreeElement]) -> Result<Vec<FreeElement>> {
    let mut order: Vec<&FreeElement> = gens.iter().filter(|g| !g.is_zero()).collect();
    order.sort_by_key(|g| g.degree());
    let mut chosen: Vec<FreeElement> = Vec::new();
    let mut gb = GroebnerBasis::empty(*ring, ambient.clone());
    for g in order {
        if gb.contains(g) {
            continue;
        }
        chosen.push(g.clone());
        gb = buchberger(ring, &chosen, ambient)?;
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::new(32003, 2).unwrap()
    }

    fn dims(m: &GradedModule, lo: i64, hi: i64) -> Vec<usize> {
        (lo..=hi).map(|d| m.dim(d)).collect()
    }

    #[test]
    fn kernel_examples() {
        let r = ring();
        let s = Arc::new(GradedModule::free(r, vec![0]));
        let s1 = Arc::new(GradedModule::free(r, vec![1]));
        let y = GradedMap::from_strings(s1.clone(), s.clone(), &[vec!["x1"]]).unwrap();
        assert!(kernel(&y).unwrap().0.is_zero());

        let z = GradedMap::zero(&s, &s);
        let (k, incl) = kernel(&z).unwrap();
        assert_eq!(k.generator_degrees(), &[0]);
        assert!(k.relations().is_empty());
        assert_eq!(incl.matrix_strings(), vec![vec!["1"]]);

        let s11 = Arc::new(GradedModule::free(r, vec![1, 1]));
        let xy = GradedMap::from_strings(s11, s, &[vec!["x0"], vec!["x1"]]).unwrap();
        let (k, incl) = kernel(&xy).unwrap();
        assert_eq!(k.generator_degrees(), &[2]);
        assert!(k.relations().is_empty());
        assert!(incl.compose(&xy).unwrap().is_zero());
        let row = incl.images()[0].to_strings(&r);
        assert!(row == vec!["x1", "-x0"] || row == vec!["-x1", "x0"]);
    }

    #[test]
    fn cokernel_examples() {
        let r = ring();
        let s = Arc::new(GradedModule::free(r, vec![0]));
        let s1 = Arc::new(GradedModule::free(r, vec![1]));
        let y = GradedMap::from_strings(s1, s.clone(), &[vec!["x1"]]).unwrap();
        let c = cokernel(&y).unwrap();
        assert!(c.same_presentation(&GradedModule::cyclic(r, 0, &["x1"]).unwrap()));

        let m = Arc::new(GradedModule::cyclic(r, 0, &["x0^2"]).unwrap());
        let zero = Arc::new(GradedModule::zero(r));
        assert!(cokernel(&GradedMap::zero(&zero, &m)).unwrap().same_presentation(&m));

        let s11 = Arc::new(GradedModule::free(r, vec![1, 1]));
        let xy = GradedMap::from_strings(s11, s, &[vec!["x0"], vec!["x1"]]).unwrap();
        assert_eq!(dims(&cokernel(&xy).unwrap(), 0, 4), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn truncation_counts() {
        let r = ring();
        let s = Arc::new(GradedModule::free(r, vec![0]));
        let (t, incl) = truncate(&s, 2).unwrap();
        assert_eq!(t.rank(), 3);
        assert_eq!(t.generator_degrees(), &[2, 2, 2]);
        assert_eq!(incl.target().rank(), 1);
        assert_eq!(dims(&t, 0, 5), vec![0, 0, 3, 4, 5, 6]);

        // d below all generators gives the module back
        let m = Arc::new(GradedModule::cyclic(r, 1, &["x1"]).unwrap());
        let (t, _) = truncate(&m, -3).unwrap();
        assert_eq!(t.rank(), 1);
        assert_eq!(dims(&t, -2, 5), dims(&m, -2, 5));
    }

    #[test]
    fn twist_and_sum() {
        let r = ring();
        let m = GradedModule::cyclic(r, 0, &["x1"]).unwrap();
        let t = twist(&m, 2).unwrap();
        for d in -4..5 {
            assert_eq!(t.dim(d), m.dim(d + 2));
        }
        assert!(twist(&t, -2).unwrap().same_presentation(&m));
        let s = GradedModule::free(r, vec![0]);
        let sum = direct_sum(&s, &m).unwrap();
        for d in -1..6 {
            assert_eq!(sum.dim(d), s.dim(d) + m.dim(d));
        }
    }

    #[test]
    fn prune_removes_unit_relations() {
        let r = ring();
        // S^2 / (e0 - x0 e1) with deg e0 = 1, deg e1 = 0 is S
        let m = GradedModule::from_strings(r, vec![1, 0], &[vec!["1", "-x0"]]).unwrap();
        let p = prune(&r, m.generators(), m.relations());
        assert_eq!(p.kept, vec![1]);
        assert!(p.relations.is_empty());
        assert_eq!(p.substitution[0].to_strings(&r), vec!["x0"]);
    }
}
