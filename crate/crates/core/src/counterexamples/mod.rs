//! Finite models of exact faithful functors that are not full on their image,
//! and of conservative images of functors.

mod category;
mod rep;

pub use category::{conimg_closure, conimg_factorization_check, Arrow, FiniteCategory, FunctorTable};
pub use rep::{
    check_not_full, equivariant_hom_basis, reflects_isos_check, span_elements, FiniteRep, NotFullWitness, DEFAULT_CAP,
};

use serde::Serialize;

use crate::error::Result;
use crate::linalg::Matrix;
use crate::ring::PrimeField;

/// The forgetful functor on `C_2`-representations over `F_p`: trivial versus sign.
#[derive(Debug, Clone, Serialize)]
pub struct ForgetfulReport {
    pub p: u64,
    pub hom_trivial_to_trivial: usize,
    pub hom_trivial_to_sign: usize,
    pub witness: NotFullWitness,
    pub reflects_isos: bool,
}

/// Requires an odd prime, so that the sign representation is not trivial.
pub fn demo_forgetful(p: u64) -> Result<ForgetfulReport> {
    let trivial = FiniteRep::trivial(p, 2, 1)?;
    let sign = FiniteRep::sign(p)?;
    Ok(ForgetfulReport {
        p,
        hom_trivial_to_trivial: equivariant_hom_basis(&trivial, &trivial)?.len(),
        hom_trivial_to_sign: equivariant_hom_basis(&trivial, &sign)?.len(),
        witness: check_not_full(&trivial, &sign)?,
        reflects_isos: reflects_isos_check(&trivial, &sign)? && reflects_isos_check(&sign, &sign)?,
    })
}

/// `R = F_2[t]/t^2` on itself: `R`-linear maps against all linear maps.
#[derive(Debug, Clone, Serialize)]
pub struct ConimgReport {
    pub r_linear_maps: usize,
    pub all_linear_maps: usize,
    /// Size of the conservative image of the inclusion of `R`-linear maps.
    pub conimg_of_inclusion: usize,
    /// `conimg G = conimg H` on a two-object instance where `Q` collapses an isomorphism.
    pub factorization_holds: bool,
}

pub fn demo_conimg() -> Result<ConimgReport> {
    let f2 = PrimeField::new(2)?;
    let t = Matrix::from_rows(f2, &[vec![0, 0], vec![1, 0]]);
    let vect = FiniteCategory::all_linear_maps(f2, vec![2])?;
    let r_linear: Vec<Arrow> = vect
        .arrows()
        .iter()
        .filter(|a| a.matrix.mul(f2, &t) == t.mul(f2, &a.matrix))
        .cloned()
        .collect();
    let closure = conimg_closure(&r_linear, &vect)?;

    let f3 = PrimeField::new(3)?;
    let scalar = |c: i64| Matrix::from_rows(f3, &[vec![c]]);
    let mut arrows = std::collections::BTreeSet::new();
    arrows.insert(Arrow::identity(0, 1));
    arrows.insert(Arrow::identity(1, 1));
    arrows.insert(Arrow::new(0, 1, scalar(2)));
    arrows.insert(Arrow::new(1, 0, scalar(2)));
    let d = FiniteCategory::new(f3, vec![1, 1], [0, 1].into(), arrows)?;
    let b = FiniteCategory::all_linear_maps(f3, vec![1])?;
    let h = FunctorTable {
        objects: vec![0, 0],
        arrows: d
            .arrows()
            .iter()
            .map(|a| (a.clone(), Arrow::new(0, 0, a.matrix.clone())))
            .collect(),
    };
    let factorization_holds = conimg_factorization_check(
        &d,
        &b,
        &[Arrow::new(0, 1, scalar(2))],
        &[Arrow::new(0, 0, scalar(2))],
        &h,
    )?;
    Ok(ConimgReport {
        r_linear_maps: r_linear.len(),
        all_linear_maps: vect.arrows().len(),
        conimg_of_inclusion: closure.arrows().len(),
        factorization_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demos() {
        let f = demo_forgetful(3).unwrap();
        assert_eq!((f.hom_trivial_to_trivial, f.hom_trivial_to_sign), (1, 0));
        assert!(f.reflects_isos);
        assert!(demo_forgetful(2).is_err());
        let c = demo_conimg().unwrap();
        assert_eq!((c.r_linear_maps, c.all_linear_maps, c.conimg_of_inclusion), (4, 16, 4));
        assert!(c.factorization_holds);
    }
}
