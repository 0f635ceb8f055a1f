use super::buchberger::{buchberger, GroebnerBasis};
use super::free::{FreeElement, FreeModule};
use crate::error::Result;
use crate::ring::{GradedPolynomial, Monomial, PolyRing};

/// Gröbner basis of the graph module `{(Σ a_l t_l + u, a) : u ∈ U}` inside
/// `F ⊕ S^t`, where `t_l` are tagged targets and `U` is generated by `modulo`.
/// Position-over-term puts the `F` block first, so the basis eliminates it.
fn graph_basis(
    ring: &PolyRing,
    ambient: &FreeModule,
    targets: &[FreeElement],
    modulo: &[FreeElement],
) -> Result<(GroebnerBasis, FreeModule)> {
    let tags = FreeModule::new(targets.iter().map(FreeElement::degree).collect());
    let big = ambient.direct_sum(&tags);
    let mut gens = Vec::with_capacity(targets.len() + modulo.len());
    for (l, t) in targets.iter().enumerate() {
        gens.push(t.concat(&tags.basis_element(l, ring)));
    }
    for u in modulo {
        gens.push(u.concat(&FreeElement::zero(tags.rank(), u.degree)));
    }
    Ok((buchberger(ring, &gens, &big)?, tags))
}

/// Generators of `{ a ∈ S^t : Σ a_l targets[l] ∈ ⟨modulo⟩ }`, living in the free
/// module with one generator per target (of the target's degree).
pub fn relations_of(
    ring: &PolyRing,
    ambient: &FreeModule,
    targets: &[FreeElement],
    modulo: &[FreeElement],
) -> Result<(Vec<FreeElement>, FreeModule)> {
    let (gb, tags) = graph_basis(ring, ambient, targets, modulo)?;
    let r = ambient.rank();
    let out = gb
        .elements()
        .iter()
        .filter(|g| g.comps[..r].iter().all(GradedPolynomial::is_zero))
        .map(|g| g.slice(r..r + tags.rank()))
        .collect();
    Ok((out, tags))
}

/// Generators of the full syzygy module of an arbitrary list of elements.
pub fn syzygies_of(ring: &PolyRing, ambient: &FreeModule, gens: &[FreeElement]) -> Result<Vec<FreeElement>> {
    Ok(relations_of(ring, ambient, gens, &[])?.0)
}

/// Expresses elements as combinations of fixed targets, modulo a fixed submodule.
#[derive(Debug, Clone)]
pub struct Lifter {
    ring: PolyRing,
    rank: usize,
    tags: FreeModule,
    graph: GroebnerBasis,
}

impl Lifter {
    pub fn new(ring: &PolyRing, ambient: &FreeModule, targets: &[FreeElement], modulo: &[FreeElement]) -> Result<Self> {
        let (graph, tags) = graph_basis(ring, ambient, targets, modulo)?;
        Ok(Lifter {
            ring: *ring,
            rank: ambient.rank(),
            tags,
            graph,
        })
    }

    /// Coefficients `c` with `v - Σ c_l targets[l] ∈ ⟨modulo⟩`, or `None` when `v`
    /// is not in `⟨targets⟩ + ⟨modulo⟩`.
    pub fn lift(&self, v: &FreeElement) -> Option<FreeElement> {
        let padded = v.concat(&FreeElement::zero(self.tags.rank(), v.degree));
        let nf = self.graph.normal_form(&padded);
        if nf.comps[..self.rank].iter().any(|f| !f.is_zero()) {
            return None;
        }
        Some(nf.slice(self.rank..self.rank + self.tags.rank()).neg(&self.ring))
    }

    pub fn tag_module(&self) -> &FreeModule {
        &self.tags
    }
}

/// Coefficients `c` with `Σ c_l target[l] = v`, or `None` if `v ∉ ⟨target⟩`.
pub fn lift(ring: &PolyRing, ambient: &FreeModule, target: &[FreeElement], v: &FreeElement) -> Result<Option<FreeElement>> {
    Ok(Lifter::new(ring, ambient, target, &[])?.lift(v))
}

/// `U ∩ V` for submodules of the same free module.
pub fn module_intersection(u: &GroebnerBasis, v: &GroebnerBasis) -> Result<GroebnerBasis> {
    u.check_same_ambient(v)?;
    let ring = *u.ring();
    let ambient = u.ambient();
    let r = ambient.rank();
    if u.is_empty() || v.is_empty() {
        return Ok(GroebnerBasis::empty(ring, ambient.clone()));
    }
    let big = ambient.direct_sum(ambient);
    let mut gens = Vec::new();
    for g in u.elements() {
        gens.push(g.concat(g));
    }
    for g in v.elements() {
        gens.push(g.concat(&FreeElement::zero(r, g.degree)));
    }
    let gb = buchberger(&ring, &gens, &big)?;
    let inter: Vec<FreeElement> = gb
        .elements()
        .iter()
        .filter(|g| g.comps[..r].iter().all(GradedPolynomial::is_zero))
        .map(|g| g.slice(r..2 * r))
        .collect();
    buchberger(&ring, &inter, ambient)
}

/// `(U : x_i) = { v : x_i v ∈ U }`, computed as `(U ∩ x_i F) / x_i`.
pub fn colon_by_variable(u: &GroebnerBasis, i: usize) -> Result<GroebnerBasis> {
    let ring = *u.ring();
    let ambient = u.ambient();
    if u.is_full() {
        return Ok(u.clone());
    }
    let xi = Monomial::var(ring.nvars(), i);
    let multiples: Vec<FreeElement> = (0..ambient.rank())
        .map(|k| ambient.basis_element(k, &ring).mul_term(&ring, 1, &xi))
        .collect();
    let xf = buchberger(&ring, &multiples, ambient)?;
    let inter = module_intersection(u, &xf)?;
    let mut gens: Vec<FreeElement> = inter.elements().iter().map(|g| divide_by_variable(g, i)).collect();
    gens.extend(u.elements().iter().cloned());
    buchberger(&ring, &gens, ambient)
}

/// Exact division of every component by `x_i`.
fn divide_by_variable(v: &FreeElement, i: usize) -> FreeElement {
    let comps = v
        .comps
        .iter()
        .map(|f| {
            let terms = f
                .terms()
                .iter()
                .map(|t| {
                    let mut e = t.mono.exponents().to_vec();
                    assert!(e[i] > 0, "element not divisible by x{i}");
                    e[i] -= 1;
                    crate::ring::Term {
                        mono: Monomial::from_exponents(&e),
                        coeff: t.coeff,
                    }
                })
                .collect();
            GradedPolynomial::from_sorted_terms(terms)
        })
        .collect();
    FreeElement {
        comps,
        degree: v.degree - 1,
    }
}

/// `(U : m)` for the irrelevant ideal `m = ⟨x_0, …, x_n⟩`.
pub fn colon_by_irrelevant(u: &GroebnerBasis) -> Result<GroebnerBasis> {
    let nvars = u.ring().nvars();
    let mut acc = colon_by_variable(u, 0)?;
    for i in 1..nvars {
        if acc == *u {
            break;
        }
        acc = module_intersection(&acc, &colon_by_variable(u, i)?)?;
    }
    Ok(acc)
}

/// `(U : m^∞)`, the stable value of `V ↦ (V : m)` starting from `U`.
pub fn saturate_irrelevant(u: &GroebnerBasis) -> Result<GroebnerBasis> {
    Ok(saturate_counting(u)?.0)
}

/// Saturation together with the number of strict colon steps taken; with `k`
/// steps, `m^k · U^sat ⊆ U`.
pub fn saturate_counting(u: &GroebnerBasis) -> Result<(GroebnerBasis, usize)> {
    let mut cur = u.clone();
    let mut steps = 0;
    loop {
        let next = colon_by_irrelevant(&cur)?;
        if next == cur {
            return Ok((cur, steps));
        }
        cur = next;
        steps += 1;
    }
}
