//! Meyer's signature cocycle on the integral symplectic group.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::homology::SymplecticMatrix;
use crate::linalg::{form_signature, IntegerMatrix, RationalSymmetricForm};

/// The space `V_{A,B}` together with the form that `τ(A, B)` is the signature of.
#[derive(Clone, Debug)]
pub struct MeyerForm {
    /// Integer basis of `V_{A,B} ⊂ Q^{2g} ⊕ Q^{2g}`, each vector `(x, y)`.
    pub basis: Vec<Vec<BigInt>>,
    pub form: RationalSymmetricForm,
}

/// Builds `V = {(x, y) : (A⁻¹ − I)x + (B − I)y = 0}` and the symmetrization of
/// `⟨(x₁, y₁), (x₂, y₂)⟩ = (x₁ + y₁)ᵀ J (I − B) y₂` on it.
pub fn meyer_form(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<MeyerForm> {
    if a.surface() != b.surface() {
        return Err(Error::SurfaceMismatch {
            left: a.surface().genus(),
            right: b.surface().genus(),
        });
    }
    let s = a.surface();
    let n = s.dimension();
    let id = IntegerMatrix::identity(n);
    let constraint = a.inverse().matrix().sub(&id).hstack(&b.matrix().sub(&id));
    let basis = constraint.kernel_basis();

    let j = s.form();
    let j_i_minus_b = &j * &id.sub(b.matrix());
    let sums: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|v| (0..n).map(|k| &v[k] + &v[n + k]).collect())
        .collect();
    let images: Vec<Vec<BigInt>> = basis.iter().map(|v| j_i_minus_b.apply(&v[n..])).collect();

    let dim = basis.len();
    let raw: Vec<BigRational> = (0..dim * dim)
        .map(|idx| {
            let (r, c) = (idx / dim, idx % dim);
            let dot: BigInt = sums[r]
                .iter()
                .zip(&images[c])
                .filter(|(p, q)| !p.is_zero() && !q.is_zero())
                .map(|(p, q)| p * q)
                .sum();
            BigRational::from_integer(dot)
        })
        .collect();
    let form = RationalSymmetricForm::symmetrize(dim, &raw)?;
    Ok(MeyerForm { basis, form })
}

/// `τ(A, B)`.
pub fn meyer_cocycle(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<i64> {
    Ok(form_signature(&meyer_form(a, b)?.form))
}

/// Validating entry point for raw integer matrices.
pub fn meyer_cocycle_of_matrices(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<i64> {
    if a.rows() % 2 != 0 {
        return Err(Error::OddDimension(a.rows()));
    }
    let s = crate::homology::Surface::new(a.rows() / 2)?;
    let a = SymplecticMatrix::new(s, a.clone())?;
    let b = SymplecticMatrix::new(s, b.clone())?;
    meyer_cocycle(&a, &b)
}
