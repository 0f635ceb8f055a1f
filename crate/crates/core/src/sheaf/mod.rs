//! Coherent sheaves on `P^n` as objects of the quotient category.

use crate::error::{Error, Result};
use crate::grmod::{hilbert, twist, GradedModule};
use crate::ring::PolyRing;
use crate::serre::{hom_quotient, is_iso, QMorphism, QObject};

/// The sheaf associated with a finitely presented graded module.
#[derive(Debug, Clone)]
pub struct CoherentSheaf {
    object: QObject,
    dimension: usize,
}

impl CoherentSheaf {
    pub fn new(module: GradedModule) -> Result<Self> {
        let nvars = module.ring().nvars();
        if nvars < 2 {
            return Err(Error::HypothesisViolation("projective space needs at least two variables".into()));
        }
        Ok(CoherentSheaf {
            object: QObject::new(module)?,
            dimension: nvars - 1,
        })
    }

    #[inline]
    pub fn object(&self) -> &QObject {
        &self.object
    }

    #[inline]
    pub fn module(&self) -> &GradedModule {
        self.object.module()
    }

    #[inline]
    pub fn ring(&self) -> &PolyRing {
        self.object.module().ring()
    }

    /// `n` for sheaves on `P^n`.
    #[inline]
    pub fn ambient_dimension(&self) -> usize {
        self.dimension
    }

    /// The zero sheaf, i.e. the module is torsion.
    pub fn is_zero(&self) -> bool {
        self.object.is_zero()
    }

    /// `F(k)`.
    pub fn twist(&self, k: i64) -> Result<CoherentSheaf> {
        CoherentSheaf::new(twist(self.module(), k)?)
    }
}

/// `O(k)`, modelled by `S(k)`.
pub fn structure_twist(ring: PolyRing, k: i64) -> Result<CoherentSheaf> {
    CoherentSheaf::new(GradedModule::twisted_ring(ring, k))
}

/// `dim H^0(F(d)) = dim Hom(O(-d), F)`.
pub fn global_sections_dim(f: &CoherentSheaf, d: i64) -> Result<usize> {
    let src = QObject::new(GradedModule::twisted_ring(*f.ring(), -d))?;
    Ok(hom_quotient(&src, f.object())?.dimension)
}

fn check_ambient(f: &CoherentSheaf, g: &CoherentSheaf) -> Result<()> {
    if f.ring() != g.ring() {
        return Err(Error::AmbientMismatch(format!(
            "sheaves on P^{} and P^{} over different rings",
            f.dimension, g.dimension
        )));
    }
    Ok(())
}

pub fn sheaf_hom_dim(f: &CoherentSheaf, g: &CoherentSheaf) -> Result<usize> {
    check_ambient(f, g)?;
    Ok(hom_quotient(f.object(), g.object())?.dimension)
}

/// `χ(F(d))`, read off the Hilbert polynomial of the torsion-free quotient.
pub fn euler_characteristic(f: &CoherentSheaf, d: i64) -> Result<i64> {
    Ok(hilbert(f.object().torsion_free())?.polynomial.eval(d))
}

/// `(−n, dim H^0(F(−n)))` for `n = 1..=count`.
pub fn negative_sections(f: &CoherentSheaf, count: usize) -> Result<Vec<(i64, usize)>> {
    (1..=count as i64)
        .map(|n| Ok((-n, global_sections_dim(f, -n)?)))
        .collect()
}

/// Sections of `S/⟨x1⟩` on `P^1` in degrees `−1, …, −count`: a point has a
/// section in every twist, so its section module is unbounded below.
pub fn demo_no_section(p: u64, count: usize) -> Result<Vec<(i64, usize)>> {
    let ring = PolyRing::new(p, 2)?;
    negative_sections(&CoherentSheaf::new(GradedModule::cyclic(ring, 0, &["x1"])?)?, count)
}

/// Best-effort search for an isomorphism `F → G` among small combinations of
/// a Hom basis: each basis vector, then 0/1 combinations of up to 10 of them.
pub fn find_isomorphism(f: &CoherentSheaf, g: &CoherentSheaf) -> Result<Option<QMorphism>> {
    check_ambient(f, g)?;
    let hom = hom_quotient(f.object(), g.object())?;
    for phi in &hom.basis {
        if is_iso(phi)? {
            return Ok(Some(phi.clone()));
        }
    }
    let k = hom.basis.len().min(10);
    for mask in 1u32..(1 << k) {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut acc: Option<crate::grmod::GradedMap> = None;
        for i in (0..k).filter(|i| mask >> i & 1 == 1) {
            let m = hom.basis[i].representing_map();
            acc = Some(match acc {
                None => m.clone(),
                Some(a) => a.add(m)?,
            });
        }
        let cand = hom.basis[0].with_representing_map(acc.expect("mask is nonempty"))?;
        if is_iso(&cand)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}
