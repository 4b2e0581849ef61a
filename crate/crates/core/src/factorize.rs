//! Decomposition suite: polar decomposition (both sides, both flavors),
//! factorization of partial isometries through the functor image, essential
//! fullness for arbitrary matrices, partial-isometry chains for finite-rank
//! maps, and the diagonal fill-in for positive/partial-isometry squares.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilb::{classify, positive_inverse};
use crate::ltwo::ltwo_morphism;
use crate::numerics::{operator_norm, svd_full, FullSvd, Matrix};
use crate::pinj::{FiniteSet, PartialInjection};
use crate::scalar::{law_tol, real, Scalar};

/// Which side the positive factor sits on: `Right` is `a = i p`,
/// `Left` is `a = p i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PolarSide {
    Left,
    Right,
}

/// `KernelMatched` is the textbook decomposition with
/// `ker(p) = ker(i) = ker(a)`; `Strong` replaces the truncated singular
/// directions of `p` by eigenvalue 1, making `p` positive definite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolarFlavor {
    KernelMatched,
    Strong,
}

/// A polar decomposition of a matrix.
#[derive(Debug, Clone, Serialize)]
pub struct PolarResult<T: Scalar> {
    pub isometry_part: Matrix<T>,
    pub positive_part: Matrix<T>,
    pub side: PolarSide,
    pub flavor: PolarFlavor,
}

impl<T: Scalar> PolarResult<T> {
    /// `i * p` or `p * i` depending on the side.
    pub fn reconstruct(&self) -> Result<Matrix<T>> {
        match self.side {
            PolarSide::Right => self.isometry_part.mul(&self.positive_part),
            PolarSide::Left => self.positive_part.mul(&self.isometry_part),
        }
    }
}

/// Polar decomposition via the SVD `a = U S V^dag`: the partial-isometry
/// part is `U_r V_r^dag` in both cases, the positive part is `V S V^dag`
/// (right) or `U S U^dag` (left), with the strong flavor filling the
/// truncated spectrum with ones.
pub fn polar<T: Scalar>(
    a: &Matrix<T>,
    side: PolarSide,
    flavor: PolarFlavor,
    tol: Option<T>,
) -> Result<PolarResult<T>> {
    let FullSvd {
        u, sigma, v, rank, ..
    } = svd_full(a, tol)?;
    let ur = u.column_slice(0, rank);
    let vr = v.column_slice(0, rank);
    let isometry_part = ur.mul(&vr.adjoint())?;

    let positive_part = {
        let (basis, dim) = match side {
            PolarSide::Right => (&v, a.cols()),
            PolarSide::Left => (&u, a.rows()),
        };
        let mut spectrum: Vec<T> = sigma[..rank].to_vec();
        let fill = match flavor {
            PolarFlavor::KernelMatched => T::zero(),
            PolarFlavor::Strong => T::one(),
        };
        spectrum.resize(dim, fill);
        basis
            .mul(&Matrix::diag_real(&spectrum))?
            .mul(&basis.adjoint())?
    };

    Ok(PolarResult {
        isometry_part,
        positive_part,
        side,
        flavor,
    })
}

/// How a factorization through the functor image is normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorMode {
    /// Both `u` and `v` unitary; the input was a partial isometry.
    Isometric,
    /// `u` unitary, `v` invertible (positive definite times unitary).
    General,
}

/// A factorization `input = v * l2(f) * u`.
#[derive(Debug, Clone, Serialize)]
pub struct LtwoFactorization<T: Scalar> {
    pub u: Matrix<T>,
    pub f: PartialInjection,
    pub v: Matrix<T>,
    pub mode: FactorMode,
}

impl<T: Scalar> LtwoFactorization<T> {
    /// `v * l2(f) * u`.
    pub fn reconstruct(&self) -> Result<Matrix<T>> {
        self.v
            .mul(&ltwo_morphism::<T>(&self.f).matrix)?
            .mul(&self.u)
    }
}

/// Factor a partial isometry as `v . l2(f) . u` with `u`, `v` unitary.
///
/// `u` sends the initial space to the first `rank` coordinates (right
/// singular vectors, completed by a kernel basis), `v` places the image
/// basis (left singular vectors, completed by a cokernel basis), and `f` is
/// the rank-sized identity-like partial injection on index sets.
pub fn isometry_factor<T: Scalar>(i: &Matrix<T>, tol: Option<T>) -> Result<LtwoFactorization<T>> {
    let class = classify(i, tol)?;
    if !class.is_partial_isometry {
        return Err(Error::Precondition(format!(
            "isometry_factor needs a partial isometry; |i i^dag i - i| = {:.3e}",
            class.residuals.partial_isometry
        )));
    }
    let FullSvd { u, v, rank, .. } = svd_full(i, tol)?;
    let dom = FiniteSet::indices(i.cols());
    let cod = FiniteSet::indices(i.rows());
    let pairs = (0..rank).map(|k| (k.to_string(), k.to_string()));
    let f = PartialInjection::new(dom, cod, pairs)?;
    Ok(LtwoFactorization {
        u: v.adjoint(),
        f,
        v: u,
        mode: FactorMode::Isometric,
    })
}

/// Essential fullness: factor an arbitrary matrix as `v . l2(f) . u` with
/// `u` unitary and `v` invertible, by a left strong polar decomposition
/// followed by [`isometry_factor`] on the partial-isometry part.
pub fn essential_full_factor<T: Scalar>(
    g: &Matrix<T>,
    tol: Option<T>,
) -> Result<LtwoFactorization<T>> {
    let p = polar(g, PolarSide::Left, PolarFlavor::Strong, tol)?;
    let inner = isometry_factor(&p.isometry_part, tol)?;
    Ok(LtwoFactorization {
        u: inner.u,
        f: inner.f,
        v: p.positive_part.mul(&inner.v)?,
        mode: FactorMode::General,
    })
}

/// Write a scalar `|c| <= 1` as a composite of two partial isometries:
/// the isometric column `(c, sqrt(1 - |c|^2))` followed by the coisometric
/// row `(1, 0)`. Returned in application order.
pub fn scalar_chain<T: Scalar>(c: Complex<T>, tol: Option<T>) -> Result<Vec<Matrix<T>>> {
    let tol = tol.unwrap_or_else(law_tol);
    let modulus = c.norm();
    if modulus > T::one() + tol {
        return Err(Error::Precondition(format!(
            "scalar_chain needs |c| <= 1, got |c| = {modulus}"
        )));
    }
    let s = (T::one() - modulus * modulus).max(T::zero()).sqrt();
    let a = Matrix::new(2, 1, vec![c, Complex::new(s, T::zero())])?;
    let b = Matrix::from_real(1, 2, &[1.0, 0.0])?;
    Ok(vec![a, b])
}

/// Compose a chain given in application order (first factor applied first).
pub fn compose_chain<T: Scalar>(chain: &[Matrix<T>]) -> Result<Matrix<T>> {
    let mut iter = chain.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Precondition("cannot compose an empty chain".into()))?;
    let mut acc = first.clone();
    for m in iter {
        acc = m.mul(&acc)?;
    }
    Ok(acc)
}

/// Expand a matrix `f : C^m -> C^n` with `|f| <= 1/sqrt(mn)` into a chain
/// of exactly four partial isometries, returned in application order:
/// weighted diagonal, per-entry isometric columns, per-entry coisometric
/// rows, weighted codiagonal.
pub fn finite_rank_chain<T: Scalar>(f: &Matrix<T>, tol: Option<T>) -> Result<Vec<Matrix<T>>> {
    let tol = tol.unwrap_or_else(law_tol);
    let (n, m) = (f.rows(), f.cols());
    let mn = m * n;
    let norm = operator_norm(f)?;
    if mn > 0 {
        let bound = T::one() / real::<T>(mn as f64).sqrt();
        if norm > bound + tol {
            return Err(Error::Precondition(format!(
                "finite_rank_chain needs |f| <= 1/sqrt(mn) = {bound}, got |f| = {norm}"
            )));
        }
    }
    let root_mn = real::<T>(mn as f64).sqrt();
    let inv_root_n = if n > 0 {
        T::one() / real::<T>(n as f64).sqrt()
    } else {
        T::zero()
    };
    let inv_root_m = if m > 0 {
        T::one() / real::<T>(m as f64).sqrt()
    } else {
        T::zero()
    };

    // slot (i, j) -> i*n + j for dom index i, cod index j
    let mut diagonal = Matrix::zeros(mn, m);
    let mut columns = Matrix::zeros(2 * mn, mn);
    let mut rows = Matrix::zeros(mn, 2 * mn);
    let mut codiagonal = Matrix::zeros(n, mn);
    let entry_tol = tol * real::<T>((mn.max(1)) as f64).sqrt();
    for i in 0..m {
        for j in 0..n {
            let slot = i * n + j;
            diagonal[(slot, i)] = Complex::new(inv_root_n, T::zero());
            let c = f[(j, i)] * Complex::new(root_mn, T::zero());
            let factors = scalar_chain(c, Some(entry_tol))?;
            columns[(2 * slot, slot)] = factors[0][(0, 0)];
            columns[(2 * slot + 1, slot)] = factors[0][(1, 0)];
            rows[(slot, 2 * slot)] = Complex::new(T::one(), T::zero());
            codiagonal[(j, slot)] = Complex::new(inv_root_m, T::zero());
        }
    }
    Ok(vec![diagonal, columns, rows, codiagonal])
}

/// Unique diagonal fill-in of a commuting square whose left edge is
/// positive definite and whose right edge is a partial isometry:
/// `d = top . l^{-1}` makes `d . l = top` and `r . d = bottom`.
pub fn diagonal_fill_in<T: Scalar>(
    l: &Matrix<T>,
    r: &Matrix<T>,
    top: &Matrix<T>,
    bottom: &Matrix<T>,
    tol: Option<T>,
) -> Result<Matrix<T>> {
    let tol = tol.unwrap_or_else(law_tol);
    if !classify(l, Some(tol))?.is_positive_definite {
        return Err(Error::Precondition(
            "diagonal_fill_in: left edge is not positive definite".into(),
        ));
    }
    if !classify(r, Some(tol))?.is_partial_isometry {
        return Err(Error::Precondition(
            "diagonal_fill_in: right edge is not a partial isometry".into(),
        ));
    }
    let square_residual = operator_norm(&r.mul(top)?.sub(&bottom.mul(l)?)?)?;
    let scale = T::one().max(operator_norm(top)?).max(operator_norm(bottom)?);
    if square_residual > tol * scale {
        return Err(Error::Precondition(format!(
            "diagonal_fill_in: square does not commute; |r top - bottom l| = {square_residual}"
        )));
    }
    top.mul(&positive_inverse(l, Some(tol))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::approx_eq;

    type M = Matrix<f64>;

    #[test]
    fn polar_right_kernel_matched_by_hand() {
        let a = M::from_real(2, 2, &[0.0, 2.0, 0.0, 0.0]).unwrap();
        let p = polar(&a, PolarSide::Right, PolarFlavor::KernelMatched, None).unwrap();
        let i_expect = M::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(approx_eq(&p.isometry_part, &i_expect, 1e-10).unwrap());
        assert!(approx_eq(&p.positive_part, &M::diag_real(&[0.0, 2.0]), 1e-10).unwrap());
        assert!(approx_eq(&p.reconstruct().unwrap(), &a, 1e-10).unwrap());
    }

    #[test]
    fn polar_right_strong_by_hand() {
        let a = M::from_real(2, 2, &[0.0, 2.0, 0.0, 0.0]).unwrap();
        let p = polar(&a, PolarSide::Right, PolarFlavor::Strong, None).unwrap();
        assert!(approx_eq(&p.positive_part, &M::diag_real(&[1.0, 2.0]), 1e-10).unwrap());
        assert!(classify(&p.positive_part, None).unwrap().is_positive_definite);
        assert!(approx_eq(&p.reconstruct().unwrap(), &a, 1e-10).unwrap());
    }

    #[test]
    fn polar_of_unitary() {
        let u = M::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let p = polar(&u, PolarSide::Right, PolarFlavor::KernelMatched, None).unwrap();
        assert!(approx_eq(&p.isometry_part, &u, 1e-10).unwrap());
        assert!(approx_eq(&p.positive_part, &M::identity(2), 1e-10).unwrap());
    }

    #[test]
    fn isometry_factor_identity() {
        let fac = isometry_factor(&M::identity(2), None).unwrap();
        assert!(fac.f.is_total_bijection());
        assert!(approx_eq(&fac.reconstruct().unwrap(), &M::identity(2), 1e-8).unwrap());
    }

    #[test]
    fn isometry_factor_column() {
        // (1,0)^T : C -> C^2; rank 1, empty kernel, 1-dimensional cokernel
        let i = M::from_real(2, 1, &[1.0, 0.0]).unwrap();
        let fac = isometry_factor(&i, None).unwrap();
        assert_eq!(fac.f.graph().len(), 1);
        assert_eq!(fac.f.dom().len(), 1);
        assert_eq!(fac.f.cod().len(), 2);
        assert!(approx_eq(&fac.reconstruct().unwrap(), &i, 1e-8).unwrap());
    }

    #[test]
    fn isometry_factor_shift() {
        let i = M::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let fac = isometry_factor(&i, None).unwrap();
        assert_eq!(fac.f.apply("0"), Some("0"));
        assert!(approx_eq(&fac.reconstruct().unwrap(), &i, 1e-8).unwrap());
    }

    #[test]
    fn isometry_factor_rejects_non_isometry() {
        let s = M::from_real(1, 1, &[0.5]).unwrap();
        assert!(matches!(
            isometry_factor(&s, None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn essential_fullness_of_counterexample_matrix() {
        // g(a)=g(b)=a: not in the direct image, but in the essential image
        let g = M::from_real(2, 2, &[1.0, 1.0, 0.0, 0.0]).unwrap();
        let fac = essential_full_factor(&g, None).unwrap();
        assert_eq!(fac.f.graph().len(), 1);
        assert!(approx_eq(&fac.reconstruct().unwrap(), &g, 1e-8).unwrap());
        // v invertible
        let sv = crate::numerics::svd(&fac.v, None).unwrap();
        assert!(sv.sigma.last().copied().unwrap() > 1e-10);
        assert_eq!(sv.rank(), 2);
    }

    #[test]
    fn essential_fullness_of_zero() {
        let z = M::zeros(2, 2);
        let fac = essential_full_factor(&z, None).unwrap();
        assert!(fac.f.graph().is_empty());
        assert!(approx_eq(&fac.reconstruct().unwrap(), &z, 1e-8).unwrap());
        let cu = classify(&fac.u, None).unwrap();
        assert!(cu.is_unitary);
    }

    #[test]
    fn scalar_chain_examples() {
        let theta = std::f64::consts::FRAC_PI_4;
        let chain = scalar_chain(Complex::new(theta.sin(), 0.0), None).unwrap();
        let composite = compose_chain(&chain).unwrap();
        assert!((composite[(0, 0)].re - theta.sin()).abs() < 1e-12);
        for m in &chain {
            assert!(classify(m, None).unwrap().is_partial_isometry);
        }

        let chain1 = scalar_chain::<f64>(Complex::new(1.0, 0.0), None).unwrap();
        assert!((chain1[0][(0, 0)].re - 1.0).abs() < 1e-12);
        assert!((compose_chain(&chain1).unwrap()[(0, 0)].re - 1.0).abs() < 1e-12);

        let ci = Complex::new(0.0, 0.5);
        let chain_i = scalar_chain(ci, None).unwrap();
        assert!((compose_chain(&chain_i).unwrap()[(0, 0)] - ci).norm() < 1e-12);

        assert!(matches!(
            scalar_chain(Complex::new(1.5, 0.0), None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn finite_rank_chain_scalar_case() {
        let f = M::from_real(1, 1, &[0.5]).unwrap();
        let chain = finite_rank_chain(&f, None).unwrap();
        assert_eq!(chain.len(), 4);
        let composite = compose_chain(&chain).unwrap();
        assert!((composite[(0, 0)].re - 0.5).abs() < 1e-10);
        for m in &chain {
            assert!(classify(m, None).unwrap().is_partial_isometry);
        }
    }

    #[test]
    fn finite_rank_chain_zero_matrix() {
        let f = M::zeros(2, 2);
        let chain = finite_rank_chain(&f, None).unwrap();
        assert_eq!(chain.len(), 4);
        let composite = compose_chain(&chain).unwrap();
        assert!(approx_eq(&composite, &f, 1e-10).unwrap());
    }

    #[test]
    fn finite_rank_chain_scaled_unitary() {
        let scale = 0.5 - 1e-3;
        let f = M::from_real(2, 2, &[0.0, scale, scale, 0.0]).unwrap();
        let chain = finite_rank_chain(&f, None).unwrap();
        let composite = compose_chain(&chain).unwrap();
        assert!(approx_eq(&composite, &f, 1e-8).unwrap());
        for m in &chain {
            assert!(classify(m, None).unwrap().is_partial_isometry);
        }
    }

    #[test]
    fn finite_rank_chain_norm_precondition() {
        let f = M::identity(2); // norm 1 > 1/2
        assert!(matches!(
            finite_rank_chain(&f, None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn diagonal_fill_in_examples() {
        let top = M::from_real(2, 2, &[1.0, 0.5, 0.0, 1.0]).unwrap();
        let d = diagonal_fill_in(&M::identity(2), &M::identity(2), &top, &top, None).unwrap();
        assert!(approx_eq(&d, &top, 1e-10).unwrap());

        let l = M::diag_real(&[2.0, 2.0]);
        let bottom = M::diag_real(&[0.5, 0.5]);
        let d = diagonal_fill_in(&l, &M::identity(2), &M::identity(2), &bottom, None).unwrap();
        assert!(approx_eq(&d, &M::diag_real(&[0.5, 0.5]), 1e-10).unwrap());

        // non-commuting square is rejected
        let bad = diagonal_fill_in(
            &M::identity(2),
            &M::identity(2),
            &M::identity(2),
            &M::diag_real(&[2.0, 2.0]),
            None,
        );
        assert!(matches!(bad, Err(Error::Precondition(_))));
    }

    #[test]
    fn partial_isometries_not_closed_under_composition() {
        let theta = std::f64::consts::FRAC_PI_4;
        let col = M::from_real(2, 1, &[1.0, 0.0]).unwrap();
        let row = M::from_real(1, 2, &[theta.sin(), theta.cos()]).unwrap();
        assert!(classify(&col, None).unwrap().is_partial_isometry);
        assert!(classify(&row, None).unwrap().is_partial_isometry);
        let composite = row.mul(&col).unwrap();
        assert!(!classify(&composite, None).unwrap().is_partial_isometry);
    }
}
