//! One-sided (Hestenes) Jacobi SVD for dense complex matrices.
//!
//! The SVD is the single numerical primitive of the crate: rank decisions,
//! null spaces, operator norms, Hermitian spectra, polar decompositions and
//! the factorization suite all route through it. It is implemented in-repo,
//! with a fixed sweep order and no randomized pivoting, so results are
//! bit-stable across runs.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{rank_tol, real, Scalar};

use super::matrix::Matrix;

const MAX_SWEEPS: usize = 128;

/// Numerical-rank-truncated singular value decomposition.
///
/// `a ~ u * diag(sigma) * v^dag` with `u` (rows x r) and `v` (cols x r)
/// having orthonormal columns and `sigma` strictly positive, descending.
#[derive(Debug, Clone)]
pub struct SvdResult<T: Scalar> {
    pub u: Matrix<T>,
    pub sigma: Vec<T>,
    pub v: Matrix<T>,
    pub rank_tolerance: T,
}

impl<T: Scalar> SvdResult<T> {
    pub fn rank(&self) -> usize {
        self.sigma.len()
    }

    /// `u * diag(sigma) * v^dag`.
    pub fn reconstruct(&self) -> Matrix<T> {
        let r = self.rank();
        let mut scaled = self.u.clone();
        for j in 0..r {
            for i in 0..scaled.rows() {
                scaled[(i, j)] = scaled[(i, j)] * Complex::new(self.sigma[j], T::zero());
            }
        }
        scaled.mul(&self.v.adjoint()).expect("shapes agree")
    }
}

/// Full decomposition: `u` and `v` are square unitaries, `sigma` holds
/// `min(rows, cols)` values (descending, possibly zero), `rank` counts those
/// above the cutoff.
#[derive(Debug, Clone)]
pub struct FullSvd<T: Scalar> {
    pub u: Matrix<T>,
    pub sigma: Vec<T>,
    pub v: Matrix<T>,
    pub rank: usize,
    pub rank_tolerance: T,
}

/// Orthogonalize the columns of `a` by right multiplication with plane
/// rotations; returns `(a * v, v)` with `v` unitary and the columns of
/// `a * v` pairwise orthogonal.
fn orthogonalize_columns<T: Scalar>(a: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    let n = a.cols();
    let mut q = a.clone();
    let mut v = Matrix::identity(n);
    if n < 2 || a.rows() == 0 {
        return Ok((q, v));
    }
    let eps = T::epsilon() * real(8.0);
    // columns this small (relative to the whole matrix) are numerically
    // zero; rotating against them cannot converge when the pair is exactly
    // collinear, where the relative inner-product test is always an equality
    let tiny = {
        let scale = eps * a.frobenius_norm();
        scale * scale
    };
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n - 1 {
            for r in p + 1..n {
                let mut alpha = T::zero();
                let mut beta = T::zero();
                let mut gamma = Complex::new(T::zero(), T::zero());
                for i in 0..q.rows() {
                    let qp = q[(i, p)];
                    let qr = q[(i, r)];
                    alpha = alpha + qp.norm_sqr();
                    beta = beta + qr.norm_sqr();
                    gamma = gamma + qp.conj() * qr;
                }
                let g = gamma.norm();
                if alpha <= tiny || beta <= tiny || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // phase that makes the column inner product real positive
                let phase = gamma / Complex::new(g, T::zero());
                let zeta = (beta - alpha) / (real::<T>(2.0) * g);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                // columns (p, r) <- (c*p - s*phase^-1*r', s*p + c*phase^-1*r)
                let cc = Complex::new(c, T::zero());
                let ss = Complex::new(s, T::zero());
                let ph = phase.conj();
                for i in 0..q.rows() {
                    let qp = q[(i, p)];
                    let qr = q[(i, r)] * ph;
                    q[(i, p)] = qp * cc - qr * ss;
                    q[(i, r)] = qp * ss + qr * cc;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vr = v[(i, r)] * ph;
                    v[(i, p)] = vp * cc - vr * ss;
                    v[(i, r)] = vp * ss + vr * cc;
                }
            }
        }
        if !rotated {
            return Ok((q, v));
        }
    }
    Err(Error::Numerical(format!(
        "Jacobi sweeps did not converge within {MAX_SWEEPS} iterations on a {}x{} matrix",
        a.rows(),
        a.cols()
    )))
}

/// Full SVD with square unitary factors; `u` is completed on the cokernel by
/// deterministic Gram-Schmidt against the standard basis.
pub fn svd_full<T: Scalar>(a: &Matrix<T>, tol: Option<T>) -> Result<FullSvd<T>> {
    let (m, n) = (a.rows(), a.cols());
    let tol = match tol {
        Some(t) if t > T::zero() => t,
        Some(_) => {
            return Err(Error::Precondition("svd tolerance must be positive".into()));
        }
        None => rank_tol(m, n),
    };
    let (q, v_unsorted) = orthogonalize_columns(a)?;

    // singular values are the column norms of a*v
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<T> = (0..n)
        .map(|j| {
            (0..m)
                .map(|i| q[(i, j)].norm_sqr())
                .fold(T::zero(), |x, y| x + y)
                .sqrt()
        })
        .collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).expect("finite norms"));

    let k = m.min(n);
    let sigma: Vec<T> = order.iter().take(k).map(|&j| norms[j]).collect();
    let v = Matrix::from_fn(n, n, |i, j| v_unsorted[(i, order[j])]);

    let sigma_max = sigma.first().copied().unwrap_or_else(T::zero);
    let cutoff = tol * sigma_max;
    let rank = sigma.iter().take_while(|&&s| s > cutoff && s > T::zero()).count();

    // left singular vectors for the significant columns, then completion
    let mut u_cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(m);
    for idx in 0..rank {
        let j = order[idx];
        let inv = Complex::new(T::one() / norms[j], T::zero());
        u_cols.push((0..m).map(|i| q[(i, j)] * inv).collect());
    }
    let u_cols = complete_orthonormal(u_cols, m);
    let u = Matrix::from_columns(m, &u_cols);

    Ok(FullSvd {
        u,
        sigma,
        v,
        rank,
        rank_tolerance: tol,
    })
}

/// Rank-truncated SVD. `tol` is relative; it defaults to
/// `1e-12 * max(rows, cols)`.
pub fn svd<T: Scalar>(a: &Matrix<T>, tol: Option<T>) -> Result<SvdResult<T>> {
    let full = svd_full(a, tol)?;
    let r = full.rank;
    Ok(SvdResult {
        u: full.u.column_slice(0, r),
        sigma: full.sigma[..r].to_vec(),
        v: full.v.column_slice(0, r),
        rank_tolerance: full.rank_tolerance,
    })
}

/// Orthonormal basis (as columns) of the numerical kernel.
pub fn null_space<T: Scalar>(a: &Matrix<T>, tol: Option<T>) -> Result<Matrix<T>> {
    let full = svd_full(a, tol)?;
    Ok(full.v.column_slice(full.rank, a.cols()))
}

/// Largest singular value; 0 for empty matrices.
pub fn operator_norm<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    if a.is_vacuous() {
        return Ok(T::zero());
    }
    let full = svd_full(a, None)?;
    Ok(full.sigma.first().copied().unwrap_or_else(T::zero))
}

/// Numerical rank at the default (or given) tolerance.
pub fn rank<T: Scalar>(a: &Matrix<T>, tol: Option<T>) -> Result<usize> {
    Ok(svd_full(a, tol)?.rank)
}

/// Eigenvalues of a Hermitian matrix, descending. Computed by shifting into
/// the positive cone, where singular values and eigenvalues coincide.
pub fn hermitian_eigenvalues<T: Scalar>(a: &Matrix<T>) -> Result<Vec<T>> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "hermitian_eigenvalues needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if a.rows() == 0 {
        return Ok(Vec::new());
    }
    let shift = operator_norm(a)? + T::one();
    let shifted = a
        .add(&Matrix::identity(a.rows()).scale_real(shift))
        .expect("square shapes agree");
    let full = svd_full(&shifted, None)?;
    let mut eigs: Vec<T> = full.sigma.iter().map(|&s| s - shift).collect();
    eigs.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    Ok(eigs)
}

/// Extend a (possibly empty) orthonormal family to an orthonormal basis of
/// the `dim`-dimensional space, pulling candidates from the standard basis
/// in index order.
pub fn complete_orthonormal<T: Scalar>(
    mut cols: Vec<Vec<Complex<T>>>,
    dim: usize,
) -> Vec<Vec<Complex<T>>> {
    let threshold = real::<T>(0.5) / real::<T>((dim.max(1)) as f64).sqrt();
    let mut k = 0usize;
    while cols.len() < dim && k < dim {
        let mut cand: Vec<Complex<T>> = (0..dim)
            .map(|i| {
                if i == k {
                    Complex::new(T::one(), T::zero())
                } else {
                    Complex::new(T::zero(), T::zero())
                }
            })
            .collect();
        // two Gram-Schmidt passes
        for _ in 0..2 {
            for c in &cols {
                let proj: Complex<T> = c
                    .iter()
                    .zip(&cand)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (&ci, &xi)| {
                        acc + ci.conj() * xi
                    });
                for (xi, &ci) in cand.iter_mut().zip(c) {
                    *xi = *xi - ci * proj;
                }
            }
        }
        let norm = cand
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |x, y| x + y)
            .sqrt();
        if norm > threshold {
            let inv = Complex::new(T::one() / norm, T::zero());
            for xi in &mut cand {
                *xi = *xi * inv;
            }
            cols.push(cand);
        }
        k += 1;
    }
    debug_assert_eq!(cols.len(), dim, "standard basis spans the space");
    cols
}

/// Scale-aware approximate equality: `|a - b| <= tol * max(1, |a|, |b|)` in
/// operator norm.
pub fn approx_eq<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>, tol: T) -> Result<bool> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Ok(false);
    }
    let diff = operator_norm(&a.sub(b)?)?;
    let scale = T::one().max(operator_norm(a)?).max(operator_norm(b)?);
    Ok(diff <= tol * scale)
}
