//! The functor from finite sets and partial injections to Hilbert spaces.
//!
//! A set goes to the space spanned by its labels (label order = basis
//! order), a partial injection to the 0/1 matrix of its graph. With that
//! basis convention both monoidal structure maps become identity
//! permutation matrices, and all functor laws can be checked exactly:
//! images are integer matrices embedded in the floating matrix type.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilb;
use crate::numerics::{rank, Matrix};
use crate::pinj::{self, FiniteSet, PartialInjection};
use crate::scalar::{law_tol, Scalar};

/// The matrix image of a partial injection, together with its source.
///
/// Entries are exactly 0 or 1; entry `(y, x)` is 1 iff `(x, y)` is in the
/// graph; at most one 1 per row and per column.
#[derive(Debug, Clone)]
pub struct LtwoImage<T: Scalar> {
    pub source: PartialInjection,
    pub matrix: Matrix<T>,
}

/// Dimension of the image space: `|labels|`, with basis index = label
/// position.
pub fn ltwo_object(x: &FiniteSet) -> usize {
    x.len()
}

/// The matrix image of a morphism.
pub fn ltwo_morphism<T: Scalar>(f: &PartialInjection) -> LtwoImage<T> {
    let mut m = Matrix::zeros(f.cod().len(), f.dom().len());
    for (x, y) in f.graph() {
        let col = f.dom().index_of(x).expect("graph labels live in dom");
        let row = f.cod().index_of(y).expect("graph labels live in cod");
        m[(row, col)] = Complex::new(T::one(), T::zero());
    }
    LtwoImage {
        source: f.clone(),
        matrix: m,
    }
}

/// Which monoidal structure a structure map belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Tensor,
    Oplus,
}

/// The structure isomorphism `l2(X) * l2(Y) -> l2(X * Y)` for the chosen
/// monoidal product. Under the canonical lexicographic label ordering both
/// are identity matrices; they are still produced explicitly so that
/// naturality squares are checked by computing both paths.
pub fn structure_map<T: Scalar>(kind: StructureKind, x: &FiniteSet, y: &FiniteSet) -> Matrix<T> {
    let dim = match kind {
        StructureKind::Tensor => x.len() * y.len(),
        StructureKind::Oplus => x.len() + y.len(),
    };
    Matrix::identity(dim)
}

/// The preservation statements that can be machine-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreservationLaw {
    Functoriality,
    Dagger,
    Tensor,
    Oplus,
    Order,
}

impl PreservationLaw {
    pub fn name(self) -> &'static str {
        match self {
            PreservationLaw::Functoriality => "functoriality",
            PreservationLaw::Dagger => "dagger",
            PreservationLaw::Tensor => "tensor",
            PreservationLaw::Oplus => "oplus",
            PreservationLaw::Order => "order",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "functoriality" => Ok(PreservationLaw::Functoriality),
            "dagger" => Ok(PreservationLaw::Dagger),
            "tensor" => Ok(PreservationLaw::Tensor),
            "oplus" => Ok(PreservationLaw::Oplus),
            "order" => Ok(PreservationLaw::Order),
            other => Err(Error::Validation {
                code: "unknown-law",
                message: format!("unknown preservation law {other:?}"),
            }),
        }
    }
}

/// Outcome of a preservation check.
#[derive(Debug, Clone, Serialize)]
pub struct PreservationReport {
    pub law: String,
    pub residual: f64,
    pub pass: bool,
}

fn max_abs_diff<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<T> {
    let d = a.sub(b)?;
    Ok(d.data()
        .iter()
        .map(|z| z.norm())
        .fold(T::zero(), |x, y| x.max(y)))
}

/// Check one preservation law on concrete morphisms. The binary laws
/// (functoriality, tensor, oplus, order) need `g`; dagger ignores it.
pub fn verify_preservation<T: Scalar>(
    law: PreservationLaw,
    f: &PartialInjection,
    g: Option<&PartialInjection>,
) -> Result<PreservationReport> {
    let need_g = || {
        g.ok_or_else(|| Error::Precondition(format!("law {:?} needs a second morphism", law.name())))
    };
    let (residual, pass): (T, bool) = match law {
        PreservationLaw::Functoriality => {
            let g = need_g()?;
            let composite = pinj::compose(g, f)?;
            let lhs = ltwo_morphism::<T>(&composite).matrix;
            let rhs = ltwo_morphism::<T>(g)
                .matrix
                .mul(&ltwo_morphism::<T>(f).matrix)?;
            let r = max_abs_diff(&lhs, &rhs)?;
            (r, r.is_zero())
        }
        PreservationLaw::Dagger => {
            let lhs = ltwo_morphism::<T>(&pinj::dagger(f)).matrix;
            let rhs = ltwo_morphism::<T>(f).matrix.adjoint();
            let r = max_abs_diff(&lhs, &rhs)?;
            (r, r.is_zero())
        }
        PreservationLaw::Tensor => {
            let g = need_g()?;
            let product = pinj::tensor(f, g);
            let lhs = ltwo_morphism::<T>(&product)
                .matrix
                .mul(&structure_map(StructureKind::Tensor, f.dom(), g.dom()))?;
            let rhs = structure_map::<T>(StructureKind::Tensor, f.cod(), g.cod()).mul(
                &hilb::kron(&ltwo_morphism::<T>(f).matrix, &ltwo_morphism::<T>(g).matrix),
            )?;
            let r = max_abs_diff(&lhs, &rhs)?;
            (r, r.is_zero())
        }
        PreservationLaw::Oplus => {
            let g = need_g()?;
            let sum = pinj::oplus(f, g);
            let lhs = ltwo_morphism::<T>(&sum)
                .matrix
                .mul(&structure_map(StructureKind::Oplus, f.dom(), g.dom()))?;
            let rhs = structure_map::<T>(StructureKind::Oplus, f.cod(), g.cod()).mul(
                &hilb::dirsum(&ltwo_morphism::<T>(f).matrix, &ltwo_morphism::<T>(g).matrix),
            )?;
            let r = max_abs_diff(&lhs, &rhs)?;
            (r, r.is_zero())
        }
        PreservationLaw::Order => {
            let g = need_g()?;
            let below_pinj = pinj::leq(f, g)?;
            let below_hilb = hilb::leq(
                &ltwo_morphism::<T>(f).matrix,
                &ltwo_morphism::<T>(g).matrix,
                None,
            )?;
            let ok = below_pinj == below_hilb;
            (if ok { T::zero() } else { T::one() }, ok)
        }
    };
    Ok(PreservationReport {
        law: law.name().to_string(),
        residual: residual.to_f64().unwrap_or(f64::NAN),
        pass,
    })
}

/// Whether the matrix image of `f` is invertible. The functor reflects
/// isomorphisms: this holds exactly when `f` is a total bijection.
pub fn reflect_iso<T: Scalar>(f: &PartialInjection) -> Result<bool> {
    let m = ltwo_morphism::<T>(f).matrix;
    if !m.is_square() {
        return Ok(false);
    }
    Ok(rank(&m, None)? == m.rows())
}

/// Whether `a` lies in the direct image of the functor on morphisms
/// `x -> y`: every column is zero or a standard basis vector (within `tol`)
/// and `a a^dag a = a` within `tol`.
pub fn is_basis_preserving<T: Scalar>(
    a: &Matrix<T>,
    x: &FiniteSet,
    y: &FiniteSet,
    tol: Option<T>,
) -> Result<bool> {
    if a.rows() != y.len() || a.cols() != x.len() {
        return Err(Error::Shape(format!(
            "matrix is {}x{}, expected {}x{}",
            a.rows(),
            a.cols(),
            y.len(),
            x.len()
        )));
    }
    let tol = tol.unwrap_or_else(law_tol);
    for j in 0..a.cols() {
        let mut ones = 0usize;
        for i in 0..a.rows() {
            let z = a[(i, j)];
            if (z - Complex::new(T::one(), T::zero())).norm() <= tol {
                ones += 1;
            } else if z.norm() > tol {
                return Ok(false);
            }
        }
        if ones > 1 {
            return Ok(false);
        }
    }
    let adj = a.adjoint();
    let res = crate::numerics::operator_norm(&a.mul(&adj)?.mul(a)?.sub(a)?)?;
    let scale = T::one().max(crate::numerics::operator_norm(a)?);
    Ok(res <= tol * scale)
}

/// Recover the unique partial injection whose image a 0/1 matrix is, or
/// `None` if the matrix is not such an image. Inverse to [`ltwo_morphism`]
/// on the direct image.
pub fn pinj_from_matrix<T: Scalar>(
    a: &Matrix<T>,
    x: &FiniteSet,
    y: &FiniteSet,
    tol: Option<T>,
) -> Result<Option<PartialInjection>> {
    if !is_basis_preserving(a, x, y, tol)? {
        return Ok(None);
    }
    let tol = tol.unwrap_or_else(law_tol);
    let mut pairs = Vec::new();
    for j in 0..a.cols() {
        for i in 0..a.rows() {
            if (a[(i, j)] - Complex::new(T::one(), T::zero())).norm() <= tol {
                pairs.push((x.labels()[j].clone(), y.labels()[i].clone()));
            }
        }
    }
    Ok(Some(PartialInjection::new(x.clone(), y.clone(), pairs)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::operator_norm;

    type M = Matrix<f64>;

    fn fs(labels: &[&str]) -> FiniteSet {
        FiniteSet::new(labels.iter().copied()).unwrap()
    }

    fn pi(dom: &[&str], cod: &[&str], pairs: &[(&str, &str)]) -> PartialInjection {
        PartialInjection::new(fs(dom), fs(cod), pairs.iter().map(|&(a, b)| (a, b))).unwrap()
    }

    #[test]
    fn object_action() {
        assert_eq!(ltwo_object(&FiniteSet::empty()), 0);
        assert_eq!(ltwo_object(&fs(&["*"])), 1);
        assert_eq!(ltwo_object(&fs(&["a", "b", "c"])), 3);
    }

    #[test]
    fn morphism_action() {
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        let m = ltwo_morphism::<f64>(&f).matrix;
        assert_eq!(m, M::from_real(1, 2, &[1.0, 0.0]).unwrap());

        let id = PartialInjection::identity(&fs(&["a", "b"]));
        assert_eq!(ltwo_morphism::<f64>(&id).matrix, M::identity(2));

        let zero = PartialInjection::empty(&fs(&["0", "1"]), &fs(&["a"]));
        assert_eq!(ltwo_morphism::<f64>(&zero).matrix, M::zeros(1, 2));
    }

    #[test]
    fn structure_maps_are_identities() {
        let m: M = structure_map(StructureKind::Tensor, &fs(&["a", "b"]), &fs(&["c"]));
        assert_eq!(m, M::identity(2));
        let m: M = structure_map(StructureKind::Oplus, &fs(&["a"]), &fs(&["b", "c"]));
        assert_eq!(m, M::identity(3));
    }

    #[test]
    fn tensor_naturality_by_hand() {
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        let g = PartialInjection::identity(&fs(&["*"]));
        let rep = verify_preservation::<f64>(PreservationLaw::Tensor, &f, Some(&g)).unwrap();
        assert!(rep.pass && rep.residual == 0.0);
        // both paths equal (1 0) on the two-element product domain
        let product = pinj::tensor(&f, &g);
        assert_eq!(
            ltwo_morphism::<f64>(&product).matrix,
            M::from_real(1, 2, &[1.0, 0.0]).unwrap()
        );
    }

    #[test]
    fn dagger_preservation_by_hand() {
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        let rep = verify_preservation::<f64>(PreservationLaw::Dagger, &f, None).unwrap();
        assert!(rep.pass && rep.residual == 0.0);
    }

    #[test]
    fn order_preservation_by_hand() {
        let f = pi(&["0", "1"], &["a", "b"], &[("0", "a")]);
        let g = pi(&["0", "1"], &["a", "b"], &[("0", "a"), ("1", "b")]);
        let rep = verify_preservation::<f64>(PreservationLaw::Order, &f, Some(&g)).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn reflects_isomorphisms() {
        let id = PartialInjection::identity(&fs(&["a", "b"]));
        assert!(reflect_iso::<f64>(&id).unwrap());
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        assert!(!reflect_iso::<f64>(&f).unwrap());
        let swap = pi(&["a", "b"], &["a", "b"], &[("a", "b"), ("b", "a")]);
        assert!(reflect_iso::<f64>(&swap).unwrap());
        assert!(swap.is_total_bijection());
    }

    #[test]
    fn basis_preserving_predicate() {
        let x = fs(&["0", "1"]);
        let y = fs(&["a", "b"]);
        let f = pi(&["0", "1"], &["a", "b"], &[("0", "b")]);
        let img = ltwo_morphism::<f64>(&f).matrix;
        assert!(is_basis_preserving(&img, &x, &y, None).unwrap());

        let s = 1.0 / 2.0_f64.sqrt();
        let col = M::from_real(2, 1, &[s, s]).unwrap();
        assert!(!is_basis_preserving(&col, &fs(&["0"]), &y, None).unwrap());

        // g(a)=g(b)=a cannot come from a partial injection
        let g = M::from_real(2, 2, &[1.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(!is_basis_preserving(&g, &x, &y, None).unwrap());
    }

    #[test]
    fn round_trip_through_matrix() {
        let x = fs(&["0", "1", "2"]);
        let y = fs(&["a", "b"]);
        let f = pi(&["0", "1", "2"], &["a", "b"], &[("1", "a"), ("2", "b")]);
        let img = ltwo_morphism::<f64>(&f).matrix;
        let back = pinj_from_matrix(&img, &x, &y, None).unwrap().unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn image_norm_at_most_one() {
        let f = pi(&["0", "1", "2"], &["a", "b"], &[("0", "b"), ("2", "a")]);
        let n = operator_norm(&ltwo_morphism::<f64>(&f).matrix).unwrap();
        assert!(n <= 1.0 + 1e-12);
        let zero = PartialInjection::empty(&fs(&["0"]), &fs(&["a"]));
        assert_eq!(
            operator_norm(&ltwo_morphism::<f64>(&zero).matrix).unwrap(),
            0.0
        );
    }
}
