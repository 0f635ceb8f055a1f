use std::collections::{BTreeSet, HashMap};

use super::free::{cmp_module_terms, FreeElement, FreeModule};
use crate::error::{Error, Result};
use crate::ring::{GradedPolynomial, Monomial, PolyRing};

/// A reduced Gröbner basis of a submodule of a graded free module, for the
/// position-over-term order with degrevlex on terms.
///
/// Elements are monic, tail-reduced and sorted by decreasing leading term, so two
/// bases of the same submodule compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub(crate) ring: PolyRing,
    pub(crate) ambient: FreeModule,
    pub(crate) elements: Vec<FreeElement>,
}

/// Leading-term index: for each component, the basis elements leading there.
struct Reducers {
    by_comp: Vec<Vec<(Monomial, usize)>>,
}

impl Reducers {
    fn new(rank: usize) -> Self {
        Reducers {
            by_comp: vec![Vec::new(); rank],
        }
    }

    fn from_basis(rank: usize, basis: &[FreeElement]) -> Self {
        let mut r = Reducers::new(rank);
        for (k, g) in basis.iter().enumerate() {
            r.push(g, k);
        }
        r
    }

    fn push(&mut self, g: &FreeElement, idx: usize) {
        let (c, t) = g.lead().expect("zero element in basis");
        self.by_comp[c].push((t.mono.clone(), idx));
    }

    #[inline]
    fn find(&self, comp: usize, m: &Monomial) -> Option<(usize, &Monomial)> {
        self.by_comp[comp]
            .iter()
            .find(|(lm, _)| lm.divides(m))
            .map(|(lm, k)| (*k, lm))
    }
}

/// Full reduction of `v` by monic `basis`. When `quotients` is given, records
/// `v - remainder = Σ quotients[k] * basis[k]`.
fn reduce(
    ring: &PolyRing,
    basis: &[FreeElement],
    reducers: &Reducers,
    v: &FreeElement,
    mut quotients: Option<&mut Vec<GradedPolynomial>>,
) -> FreeElement {
    let field = ring.field();
    let rank = v.rank();
    let mut work = v.comps.clone();
    let mut rem = vec![GradedPolynomial::zero(); rank];
    for i in 0..rank {
        while let Some(lt) = work[i].lead() {
            match reducers.find(i, &lt.mono) {
                Some((k, lm)) => {
                    let q = lm.quotient_of(&lt.mono);
                    let c = lt.coeff;
                    let g = &basis[k];
                    let negc = field.neg(c);
                    for (j, w) in work.iter_mut().enumerate().skip(i) {
                        if !g.comps[j].is_zero() {
                            *w = ring.add_scaled(w, negc, &q, &g.comps[j]);
                        }
                    }
                    if let Some(qs) = quotients.as_deref_mut() {
                        qs[k] = ring.add_unchecked(&qs[k], &ring.term(c as i64, q));
                    }
                }
                None => {
                    let t = work[i].pop_lead().unwrap();
                    rem[i].push_smallest(t);
                }
            }
        }
    }
    FreeElement {
        comps: rem,
        degree: v.degree,
    }
}

fn make_monic(ring: &PolyRing, v: FreeElement) -> FreeElement {
    let c = v.lead().map(|(_, t)| t.coeff).expect("monic of zero");
    if c == 1 {
        v
    } else {
        v.scale(ring, ring.field().inv(c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Input(usize),
    Pair(usize, usize),
}

/// Whether the pair `(i, j)` is covered by some `k` whose leading monomial divides
/// `lcm` while both `lcm(i, k)` and `lcm(j, k)` are strictly smaller.
fn chain_criterion(leads: &[(usize, Monomial)], i: usize, j: usize, lcm: &Monomial) -> bool {
    let comp = leads[i].0;
    leads.iter().enumerate().any(|(k, (ck, mk))| {
        k != i
            && k != j
            && *ck == comp
            && mk.divides(lcm)
            && mk.lcm(&leads[i].1) != *lcm
            && mk.lcm(&leads[j].1) != *lcm
    })
}

fn s_element(ring: &PolyRing, gi: &FreeElement, gj: &FreeElement, lcm: &Monomial) -> FreeElement {
    let (_, ti) = gi.lead().unwrap();
    let (_, tj) = gj.lead().unwrap();
    let mi = ti.mono.quotient_of(lcm);
    let mj = tj.mono.quotient_of(lcm);
    let a = gi.mul_term(ring, 1, &mi);
    a.add_scaled(ring, ring.field().neg(1), &mj, gj)
}

/// Buchberger's algorithm with the normal selection strategy (by degree, then index).
pub fn buchberger(ring: &PolyRing, generators: &[FreeElement], ambient: &FreeModule) -> Result<GroebnerBasis> {
    for g in generators {
        g.check_in(ambient)?;
    }
    let rank = ambient.rank();
    let mut basis: Vec<FreeElement> = Vec::new();
    let mut leads: Vec<(usize, Monomial)> = Vec::new();
    let mut reducers = Reducers::new(rank);
    let mut queue: BTreeSet<(i64, Task)> = generators
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| (g.degree, Task::Input(i)))
        .collect();

    while let Some((_, task)) = queue.pop_first() {
        let candidate = match task {
            Task::Input(i) => generators[i].clone(),
            Task::Pair(i, j) => {
                let lcm = leads[i].1.lcm(&leads[j].1);
                if rank == 1 && lcm.degree() == leads[i].1.degree() + leads[j].1.degree() {
                    continue;
                }
                if chain_criterion(&leads, i, j, &lcm) {
                    continue;
                }
                s_element(ring, &basis[i], &basis[j], &lcm)
            }
        };
        let h = reduce(ring, &basis, &reducers, &candidate, None);
        if h.is_zero() {
            continue;
        }
        let h = make_monic(ring, h);
        let (c, t) = h.lead().unwrap();
        let (c, m) = (c, t.mono.clone());
        let idx = basis.len();
        for (k, (ck, mk)) in leads.iter().enumerate() {
            if *ck == c {
                let l = mk.lcm(&m);
                queue.insert((l.degree() as i64 + ambient.degree(c), Task::Pair(k, idx)));
            }
        }
        reducers.push(&h, idx);
        leads.push((c, m));
        basis.push(h);
    }
    Ok(GroebnerBasis::finalize(*ring, ambient.clone(), basis))
}

impl GroebnerBasis {
    /// Minimalizes, tail-reduces and sorts a Gröbner basis.
    fn finalize(ring: PolyRing, ambient: FreeModule, basis: Vec<FreeElement>) -> Self {
        let rank = ambient.rank();
        // drop elements whose leading term is divisible by another's
        let leads: Vec<(usize, Monomial)> = basis
            .iter()
            .map(|g| {
                let (c, t) = g.lead().unwrap();
                (c, t.mono.clone())
            })
            .collect();
        let keep: Vec<FreeElement> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                !leads.iter().enumerate().any(|(j, (cj, mj))| {
                    j != *i && *cj == leads[*i].0 && mj.divides(&leads[*i].1) && (mj != &leads[*i].1 || j < *i)
                })
            })
            .map(|(_, g)| g.clone())
            .collect();
        let reducers = Reducers::from_basis(rank, &keep);
        let mut reduced: Vec<FreeElement> = keep
            .iter()
            .map(|g| {
                let (c, _) = g.lead().unwrap();
                let mut tail = g.clone();
                let lead_term = tail.comps[c].pop_lead().unwrap();
                let mut t = reduce(&ring, &keep, &reducers, &tail, None);
                let mut terms = vec![lead_term];
                terms.append(&mut t.comps[c].terms);
                t.comps[c] = GradedPolynomial::from_sorted_terms(terms);
                t
            })
            .collect();
        reduced.sort_by(|a, b| {
            let (ca, ta) = a.lead().unwrap();
            let (cb, tb) = b.lead().unwrap();
            cmp_module_terms((cb, &tb.mono), (ca, &ta.mono))
        });
        GroebnerBasis {
            ring,
            ambient,
            elements: reduced,
        }
    }

    /// The basis of the zero submodule.
    pub fn empty(ring: PolyRing, ambient: FreeModule) -> Self {
        GroebnerBasis {
            ring,
            ambient,
            elements: Vec::new(),
        }
    }

    /// Gröbner basis of the whole ambient module.
    pub fn full(ring: PolyRing, ambient: FreeModule) -> Self {
        let elements = (0..ambient.rank()).map(|i| ambient.basis_element(i, &ring)).collect();
        GroebnerBasis {
            ring,
            ambient,
            elements,
        }
    }

    #[inline]
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    #[inline]
    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    #[inline]
    pub fn elements(&self) -> &[FreeElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading terms `(component, monomial)` of the basis elements.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elements
            .iter()
            .map(|g| {
                let (c, t) = g.lead().unwrap();
                (c, t.mono.clone())
            })
            .collect()
    }

    fn reducers(&self) -> Reducers {
        Reducers::from_basis(self.ambient.rank(), &self.elements)
    }

    /// The remainder of `v` modulo the basis; zero iff `v` lies in the submodule.
    pub fn normal_form(&self, v: &FreeElement) -> FreeElement {
        reduce(&self.ring, &self.elements, &self.reducers(), v, None)
    }

    /// Normal forms of many elements, sharing the leading-term index.
    pub fn normal_forms(&self, vs: &[FreeElement]) -> Vec<FreeElement> {
        let r = self.reducers();
        vs.iter().map(|v| reduce(&self.ring, &self.elements, &r, v, None)).collect()
    }

    /// Division with quotients: `v = Σ q_k g_k + remainder`.
    pub fn divide(&self, v: &FreeElement) -> (Vec<GradedPolynomial>, FreeElement) {
        let mut qs = vec![GradedPolynomial::zero(); self.elements.len()];
        let rem = reduce(&self.ring, &self.elements, &self.reducers(), v, Some(&mut qs));
        (qs, rem)
    }

    pub fn contains(&self, v: &FreeElement) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Whether `self` generates the whole ambient module.
    pub fn is_full(&self) -> bool {
        let mut hit = vec![false; self.ambient.rank()];
        for (c, m) in self.leading_terms() {
            if m.is_one() {
                hit[c] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// Whether the submodule of `self` contains that of `other`.
    pub fn contains_all(&self, other: &GroebnerBasis) -> bool {
        other.elements.iter().all(|g| self.contains(g))
    }

    /// Standard monomials `(component, monomial)` of `F/U` in degree `d`, in
    /// decreasing module order; they form a basis of the degree-`d` piece.
    pub fn standard_monomials(&self, d: i64) -> Vec<(usize, Monomial)> {
        let leads = self.leading_terms();
        let mut out = Vec::new();
        for c in 0..self.ambient.rank() {
            let pd = self.ambient.component_degree(d, c);
            for m in self.ring.monomial_basis(pd) {
                if !leads.iter().any(|(lc, lm)| *lc == c && lm.divides(&m)) {
                    out.push((c, m));
                }
            }
        }
        out
    }

    /// Schreyer syzygies of the basis elements, living in the free module with one
    /// generator per basis element (of that element's degree).
    pub fn syzygies(&self) -> Vec<FreeElement> {
        let ring = &self.ring;
        let field = ring.field();
        let leads = self.leading_terms();
        let s = self.elements.len();
        let syz_free = self.syzygy_module();
        let mut out = Vec::new();
        for j in 0..s {
            for i in 0..j {
                if leads[i].0 != leads[j].0 {
                    continue;
                }
                let lcm = leads[i].1.lcm(&leads[j].1);
                if chain_criterion(&leads, i, j, &lcm) {
                    continue;
                }
                let spair = s_element(ring, &self.elements[i], &self.elements[j], &lcm);
                let (mut qs, rem) = self.divide(&spair);
                debug_assert!(rem.is_zero(), "S-element did not reduce to zero");
                for q in qs.iter_mut() {
                    *q = ring.neg(q);
                }
                let mi = leads[i].1.quotient_of(&lcm);
                let mj = leads[j].1.quotient_of(&lcm);
                qs[i] = ring.add_unchecked(&qs[i], &ring.term(1, mi));
                qs[j] = ring.add_unchecked(&qs[j], &ring.term(field.neg(1) as i64, mj));
                let degree = lcm.degree() as i64 + self.ambient.degree(leads[i].0);
                let syz = FreeElement { comps: qs, degree };
                debug_assert!(syz.check_in(&syz_free).is_ok());
                out.push(syz);
            }
        }
        out
    }

    /// Free module with one generator per basis element.
    pub fn syzygy_module(&self) -> FreeModule {
        FreeModule::new(self.elements.iter().map(|g| g.degree).collect())
    }

    /// Coordinates of `v` modulo the submodule over the given standard monomials.
    pub fn coordinates(&self, v: &FreeElement, basis_index: &HashMap<(usize, Monomial), usize>, dim: usize) -> Vec<u64> {
        let nf = self.normal_form(v);
        let mut out = vec![0u64; dim];
        for (c, f) in nf.comps.iter().enumerate() {
            for t in f.terms() {
                let idx = basis_index
                    .get(&(c, t.mono.clone()))
                    .expect("normal form term outside the standard basis");
                out[*idx] = t.coeff;
            }
        }
        out
    }

    pub fn check_same_ambient(&self, other: &GroebnerBasis) -> Result<()> {
        if self.ambient != other.ambient || self.ring != other.ring {
            return Err(Error::AmbientMismatch(format!(
                "{:?} vs {:?}",
                self.ambient.degrees(),
                other.ambient.degrees()
            )));
        }
        Ok(())
    }
}
