use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::PrimeField;

/// A representation of the cyclic group `C_m` on `F_p^dim`, given by the
/// matrix of a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRep {
    field: PrimeField,
    order: u64,
    generator: Matrix,
}

impl FiniteRep {
    /// Checks that `generator` is square, invertible and satisfies `A^order = I`.
    pub fn new(field: PrimeField, order: u64, generator: Matrix) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidRepresentation("group order must be positive".into()));
        }
        if generator.rows() != generator.cols() || generator.rows() == 0 {
            return Err(Error::InvalidRepresentation("generator matrix must be square and nonempty".into()));
        }
        if !generator.is_invertible(field) {
            return Err(Error::InvalidRepresentation("generator matrix is singular".into()));
        }
        if generator.pow(field, order) != Matrix::identity(generator.rows()) {
            return Err(Error::InvalidRepresentation(format!("generator does not satisfy A^{order} = I")));
        }
        Ok(FiniteRep {
            field,
            order,
            generator,
        })
    }

    pub fn from_rows(p: u64, order: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        Self::new(field, order, Matrix::from_rows(field, rows))
    }

    /// The trivial representation of `C_order` in dimension `dim`.
    pub fn trivial(p: u64, order: u64, dim: usize) -> Result<Self> {
        Self::new(PrimeField::new(p)?, order, Matrix::identity(dim))
    }

    /// `C_2` acting by `-1` on a line.
    pub fn sign(p: u64) -> Result<Self> {
        Self::from_rows(p, 2, &[vec![-1]])
    }

    /// The regular representation of `C_2`: the swap of two coordinates.
    pub fn regular_c2(p: u64) -> Result<Self> {
        Self::from_rows(p, 2, &[vec![0, 1], vec![1, 0]])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    #[inline]
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// `f ∘ ρ(g) = ρ'(g) ∘ f` for the generator, hence for the whole group.
    pub fn is_equivariant(&self, other: &FiniteRep, f: &Matrix) -> bool {
        f.rows() == other.dim()
            && f.cols() == self.dim()
            && f.mul(self.field, &self.generator) == other.generator.mul(self.field, f)
    }

    fn check_same_group(&self, other: &FiniteRep) -> Result<()> {
        if self.field != other.field || self.order != other.order {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }
}

/// Basis of `{ f : f A = A' f }`, each `f` a `dim' × dim` matrix.
pub fn equivariant_hom_basis(rho: &FiniteRep, rho2: &FiniteRep) -> Result<Vec<Matrix>> {
    rho.check_same_group(rho2)?;
    let field = rho.field;
    let (d, d2) = (rho.dim(), rho2.dim());
    let a = &rho.generator;
    let b = &rho2.generator;
    // unknown f[i][j] sits at column i*d + j; equation (i, j) of f A - B f = 0
    let mut sys = Matrix::zeros(d2 * d, d2 * d);
    for i in 0..d2 {
        for j in 0..d {
            let row = i * d + j;
            for k in 0..d {
                let c = &mut sys[(row, i * d + k)];
                *c = field.add(*c, a[(k, j)]);
            }
            for k in 0..d2 {
                let c = &mut sys[(row, k * d + j)];
                *c = field.sub(*c, b[(i, k)]);
            }
        }
    }
    Ok(sys
        .kernel(field)
        .into_iter()
        .map(|v| Matrix::from_flat(d2, d, v))
        .collect())
}

/// Every `F_p`-linear combination of `basis`, refusing more than `cap` of them.
pub fn span_elements(field: PrimeField, basis: &[Matrix], cap: u64) -> Result<Vec<Matrix>> {
    let p = field.characteristic();
    let count = p.checked_pow(basis.len() as u32).filter(|&c| c <= cap).ok_or_else(|| {
        Error::TooLarge(format!("{p}^{} elements exceed the cap of {cap}", basis.len()))
    })?;
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::with_capacity(count as usize);
    for mut idx in 0..count {
        let mut acc = Matrix::zeros(first.rows(), first.cols());
        for b in basis {
            let c = idx % p;
            idx /= p;
            if c != 0 {
                acc = acc.add(field, &b.scale(field, c));
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Enumeration cap for exhaustive checks over a Hom space.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// A linear functional separating the identity from the equivariant maps:
/// it vanishes on every equivariant `f` and not on `I`.
#[derive(Debug, Clone, Serialize)]
pub struct NotFullWitness {
    pub hom_dimension: usize,
    /// `λ(f) = Σ functional[i][j] · f[i][j]`.
    pub functional: Vec<Vec<u64>>,
    pub value_at_identity: u64,
}

impl NotFullWitness {
    pub fn evaluate(&self, field: PrimeField, f: &Matrix) -> u64 {
        let mut acc = 0;
        for (i, row) in self.functional.iter().enumerate() {
            for (j, &l) in row.iter().enumerate() {
                acc = field.add(acc, field.mul(l, f[(i, j)]));
            }
        }
        acc
    }
}

/// Exhibits that the identity of `V` is not the image of any equivariant map
/// `(V, ρ) → (V, ρ')`.
pub fn check_not_full(rho: &FiniteRep, rho2: &FiniteRep) -> Result<NotFullWitness> {
    rho.check_same_group(rho2)?;
    if rho.dim() != rho2.dim() {
        return Err(Error::HypothesisViolation("representations of different dimensions".into()));
    }
    let field = rho.field;
    let d = rho.dim();
    let basis = equivariant_hom_basis(rho, rho2)?;
    let span = span_elements(field, &basis, DEFAULT_CAP)?;
    if span.iter().any(|f| f.is_invertible(field)) {
        return Err(Error::RepsEquivalent);
    }
    // functionals vanishing on the basis: kernel of the matrix with flattened basis rows
    let mut rows = Matrix::zeros(basis.len(), d * d);
    for (r, b) in basis.iter().enumerate() {
        for (c, &x) in b.as_flat().iter().enumerate() {
            rows[(r, c)] = x;
        }
    }
    let identity = Matrix::identity(d);
    let lambda = rows
        .kernel(field)
        .into_iter()
        .find(|l| {
            let v = (0..d).fold(0, |acc, i| field.add(acc, l[i * d + i]));
            v != 0
        })
        .expect("identity lies outside a space without invertible elements");
    let witness = NotFullWitness {
        hom_dimension: basis.len(),
        functional: lambda.chunks(d).map(<[u64]>::to_vec).collect(),
        value_at_identity: 0,
    };
    let value = witness.evaluate(field, &identity);
    Ok(NotFullWitness {
        value_at_identity: value,
        ..witness
    })
}

/// Every equivariant map whose matrix is invertible has an equivariant inverse.
pub fn reflects_isos_check(rho: &FiniteRep, rho2: &FiniteRep) -> Result<bool> {
    let field = rho.field;
    let basis = equivariant_hom_basis(rho, rho2)?;
    for f in span_elements(field, &basis, DEFAULT_CAP)? {
        if let Some(g) = f.inverse(field) {
            if !rho2.is_equivariant(rho, &g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
