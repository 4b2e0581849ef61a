//! Finite-dimensional complex Hilbert spaces: dagger, monoidal structure,
//! biproducts, kernel equalizers, the kernel order, and operator
//! classification predicates.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{
    hermitian_eigenvalues, null_space, operator_norm, svd, Matrix,
};
use crate::scalar::{law_tol, Scalar};

/// Conjugate transpose.
pub fn adjoint<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    a.adjoint()
}

/// Kronecker product with row-major pair ordering:
/// `index(x) * dim_y + index(y)`.
pub fn kron<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    Matrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        a[(i / b.rows(), j / b.cols())] * b[(i % b.rows(), j % b.cols())]
    })
}

/// Block-diagonal direct sum.
pub fn dirsum<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    Matrix::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |i, j| {
        if i < a.rows() && j < a.cols() {
            a[(i, j)]
        } else if i >= a.rows() && j >= a.cols() {
            b[(i - a.rows(), j - a.cols())]
        } else {
            Complex::new(T::zero(), T::zero())
        }
    })
}

/// Canonical projection from the direct sum with the given block dimensions
/// onto block `i`.
pub fn projection<T: Scalar>(dims: &[usize], i: usize) -> Result<Matrix<T>> {
    if i >= dims.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: dims.len(),
        });
    }
    let total: usize = dims.iter().sum();
    let offset: usize = dims[..i].iter().sum();
    let mut m = Matrix::zeros(dims[i], total);
    for k in 0..dims[i] {
        m[(k, offset + k)] = Complex::new(T::one(), T::zero());
    }
    Ok(m)
}

/// Coprojection into block `i`: the dagger of [`projection`].
pub fn injection<T: Scalar>(dims: &[usize], i: usize) -> Result<Matrix<T>> {
    Ok(projection(dims, i)?.adjoint())
}

/// Orthonormal basis (as columns) of `ker(a - b)`: the equalizer of a
/// parallel pair, computed as a kernel.
pub fn equalizer<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::NotParallel(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    null_space(&a.sub(b)?, None)
}

/// Classification flags for an operator, each decided within `tolerance`.
#[derive(Debug, Clone, Serialize)]
pub struct OperatorClass {
    pub is_partial_isometry: bool,
    pub is_isometry: bool,
    pub is_unitary: bool,
    pub is_self_adjoint: bool,
    pub is_nonnegative: bool,
    pub is_positive_definite: bool,
    pub is_projection: bool,
    pub tolerance: f64,
    pub residuals: ClassResiduals,
}

/// The measured quantities behind each flag.
#[derive(Debug, Clone, Serialize)]
pub struct ClassResiduals {
    /// `|a a^dag a - a|`
    pub partial_isometry: f64,
    /// `|a^dag a - I|`
    pub isometry: f64,
    /// `|a a^dag - I|` (square only; NaN otherwise)
    pub counitarity: f64,
    /// `|a - a^dag|` (square only; NaN otherwise)
    pub self_adjoint: f64,
    /// `|a^2 - a|` (square only; NaN otherwise)
    pub idempotency: f64,
    /// smallest eigenvalue, when self-adjoint
    pub min_eigenvalue: Option<f64>,
}

/// Decide the operator-class predicates for `a`.
pub fn classify<T: Scalar>(a: &Matrix<T>, tol: Option<T>) -> Result<OperatorClass> {
    let tol = tol.unwrap_or_else(law_tol);
    let norm = operator_norm(a)?;
    let scale = T::one().max(norm);
    let adj = a.adjoint();

    let pi_res = operator_norm(&a.mul(&adj)?.mul(a)?.sub(a)?)?;
    let is_partial_isometry = pi_res <= tol * scale;

    let iso_res = operator_norm(&adj.mul(a)?.sub(&Matrix::identity(a.cols()))?)?;
    let is_isometry = iso_res <= tol;

    let (counit_res, sa_res, idem_res, min_eig);
    let (is_unitary, is_self_adjoint, is_nonnegative, is_positive_definite, is_projection);
    if a.is_square() {
        let cr = operator_norm(&a.mul(&adj)?.sub(&Matrix::identity(a.rows()))?)?;
        is_unitary = is_isometry && cr <= tol;
        counit_res = cr.to_f64().unwrap_or(f64::NAN);

        let sr = operator_norm(&a.sub(&adj)?)?;
        is_self_adjoint = sr <= tol * scale;
        sa_res = sr.to_f64().unwrap_or(f64::NAN);

        let ir = operator_norm(&a.mul(a)?.sub(a)?)?;
        is_projection = is_self_adjoint && ir <= tol * scale;
        idem_res = ir.to_f64().unwrap_or(f64::NAN);

        if is_self_adjoint {
            let eigs = hermitian_eigenvalues(a)?;
            let low = eigs.last().copied();
            is_nonnegative = low.map_or(true, |e| e >= -tol);
            is_positive_definite = low.map_or(true, |e| e >= tol);
            min_eig = low.and_then(|e| e.to_f64());
        } else {
            is_nonnegative = false;
            is_positive_definite = false;
            min_eig = None;
        }
    } else {
        is_unitary = false;
        is_self_adjoint = false;
        is_nonnegative = false;
        is_positive_definite = false;
        is_projection = false;
        counit_res = f64::NAN;
        sa_res = f64::NAN;
        idem_res = f64::NAN;
        min_eig = None;
    }

    Ok(OperatorClass {
        is_partial_isometry,
        is_isometry,
        is_unitary,
        is_self_adjoint,
        is_nonnegative,
        is_positive_definite,
        is_projection,
        tolerance: tol.to_f64().unwrap_or(f64::NAN),
        residuals: ClassResiduals {
            partial_isometry: pi_res.to_f64().unwrap_or(f64::NAN),
            isometry: iso_res.to_f64().unwrap_or(f64::NAN),
            counitarity: counit_res,
            self_adjoint: sa_res,
            idempotency: idem_res,
            min_eigenvalue: min_eig,
        },
    })
}

/// Orthogonal projector onto `ker(a)^perp` (the row space of `a`).
pub fn coimage_projector<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let s = svd(a, None)?;
    s.v.mul(&s.v.adjoint())
}

/// Orthogonal projector onto the range of `a`.
pub fn range_projector<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let s = svd(a, None)?;
    s.u.mul(&s.u.adjoint())
}

/// The kernel order on parallel operators: `a <= b` when
/// `ker(a)^perp` is contained in `ker(b)^perp` and the operators agree there.
pub fn leq<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>, tol: Option<T>) -> Result<bool> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::NotParallel(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let tol = tol.unwrap_or_else(law_tol);
    let pa = coimage_projector(a)?;
    let pb = coimage_projector(b)?;
    let containment = operator_norm(&pa.sub(&pb.mul(&pa)?)?)?;
    if containment > tol {
        return Ok(false);
    }
    let agreement = operator_norm(&a.sub(b)?.mul(&pa)?)?;
    Ok(agreement <= tol)
}

/// The maximum of a finite directed family under the kernel order.
pub fn max_of_directed<T: Scalar>(ms: &[Matrix<T>], tol: Option<T>) -> Result<Matrix<T>> {
    if ms.is_empty() {
        return Err(Error::Directedness("empty family has no maximum".into()));
    }
    'outer: for cand in ms {
        for f in ms {
            if !leq(f, cand, tol)? {
                continue 'outer;
            }
        }
        return Ok(cand.clone());
    }
    Err(Error::Directedness(
        "no member of the family dominates all others".into(),
    ))
}

/// Inverse of a positive definite operator, via SVD reciprocation.
pub fn positive_inverse<T: Scalar>(p: &Matrix<T>, tol: Option<T>) -> Result<Matrix<T>> {
    let class = classify(p, tol)?;
    if !class.is_positive_definite {
        return Err(Error::Precondition(format!(
            "positive_inverse needs a positive definite input (min eigenvalue {:?})",
            class.residuals.min_eigenvalue
        )));
    }
    let s = svd(p, None)?;
    let recip: Vec<T> = s.sigma.iter().map(|&x| T::one() / x).collect();
    s.v.mul(&Matrix::diag_real(&recip))?.mul(&s.u.adjoint())
}
