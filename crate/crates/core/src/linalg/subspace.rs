//! Rank decisions and subspace arithmetic, all driven by the SVD and one
//! [`ToleranceProfile`].

use num_complex::Complex;

use super::matrix::{dot, Matrix};
use super::svd::svd;
use crate::error::{Error, Result};
use crate::scalar::{czero, Real};
use crate::tolerance::ToleranceProfile;

/// A linear subspace of `C^ambient`, stored as an orthonormal column basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<R: Real = f64> {
    ambient: usize,
    basis: Matrix<R>,
}

impl<R: Real> Subspace<R> {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Matrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, basis: Matrix::identity(ambient) }
    }

    /// Span of the columns of `spanning`.
    pub fn span(spanning: &Matrix<R>, tol: &ToleranceProfile<R>) -> Result<Self> {
        image_basis(spanning, tol)
    }

    pub fn span_vectors(ambient: usize, vectors: &[Vec<Complex<R>>], tol: &ToleranceProfile<R>) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        image_basis(&Matrix::from_columns(ambient, vectors), tol)
    }

    /// [`Subspace::span_vectors`] with ranks measured against `scale`, for
    /// vectors that may be rounding noise relative to known data.
    pub fn span_vectors_against(
        ambient: usize,
        vectors: &[Vec<Complex<R>>],
        tol: &ToleranceProfile<R>,
        scale: R,
    ) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        image_basis_against(&Matrix::from_columns(ambient, vectors), tol, scale)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// `ambient x dim`, orthonormal columns.
    pub fn basis(&self) -> &Matrix<R> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Complex<R>>> {
        (0..self.dim()).map(|j| self.basis.column(j)).collect()
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &[Complex<R>]) -> Vec<Complex<R>> {
        let mut out = vec![czero(); self.ambient];
        for j in 0..self.dim() {
            let q = self.basis.column(j);
            let coef = dot(&q, v);
            for (o, qi) in out.iter_mut().zip(&q) {
                *o = *o + *qi * coef;
            }
        }
        out
    }

    /// Distance from `v` to the subspace.
    pub fn distance(&self, v: &[Complex<R>]) -> R {
        let p = self.project(v);
        v.iter().zip(&p).map(|(a, b)| (*a - *b).norm_sqr()).sum::<R>().sqrt()
    }

    /// `v` lies in the subspace up to `eps_residual * max(1, |v|)`.
    pub fn contains(&self, v: &[Complex<R>], tol: &ToleranceProfile<R>) -> bool {
        let n = v.iter().map(|x| x.norm_sqr()).sum::<R>().sqrt();
        self.distance(v) <= tol.eps_residual * n.max(R::one())
    }

    pub fn sum(&self, other: &Self, tol: &ToleranceProfile<R>) -> Result<Self> {
        self.check_ambient(other)?;
        image_basis(&self.basis.hstack(&other.basis), tol)
    }

    pub fn is_subspace_of(&self, other: &Self, tol: &ToleranceProfile<R>) -> bool {
        self.ambient == other.ambient && self.vectors().iter().all(|v| other.contains(v, tol))
    }

    /// Orthonormal basis of the orthogonal complement of `self` inside `within`.
    pub fn complement_in(&self, within: &Self, tol: &ToleranceProfile<R>) -> Result<Self> {
        self.check_ambient(within)?;
        let residuals: Vec<Vec<Complex<R>>> = within
            .vectors()
            .into_iter()
            .map(|v| {
                let p = self.project(&v);
                v.iter().zip(&p).map(|(a, b)| *a - *b).collect()
            })
            .collect();
        Subspace::span_vectors(self.ambient, &residuals, tol)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::input(format!("subspaces live in different spaces (C^{} vs C^{})", self.ambient, other.ambient)));
        }
        Ok(())
    }
}

/// Numerical rank under the relative rule `sigma > eps_rank * sigma_max * max(rows, cols)`.
pub fn rank<R: Real>(m: &Matrix<R>, tol: &ToleranceProfile<R>) -> Result<usize> {
    rank_against(m, tol, R::zero())
}

/// [`rank`] measured against `max(sigma_max, scale)`; used when `m` is derived
/// from data of known size and may cancel down to rounding noise.
pub fn rank_against<R: Real>(m: &Matrix<R>, tol: &ToleranceProfile<R>, scale: R) -> Result<usize> {
    if m.rows() == 0 || m.cols() == 0 {
        m.ensure_finite("matrix")?;
        return Ok(0);
    }
    Ok(svd(m)?.rank_against(tol.eps_rank, scale))
}

pub fn kernel_basis<R: Real>(m: &Matrix<R>, tol: &ToleranceProfile<R>) -> Result<Subspace<R>> {
    kernel_basis_against(m, tol, R::zero())
}

pub fn kernel_basis_against<R: Real>(m: &Matrix<R>, tol: &ToleranceProfile<R>, scale: R) -> Result<Subspace<R>> {
    if m.rows() == 0 || m.cols() == 0 {
        m.ensure_finite("matrix")?;
        return Ok(Subspace::full(m.cols()));
    }
    let d = svd(m)?;
    let r = d.rank_against(tol.eps_rank, scale);
    Ok(Subspace { ambient: m.cols(), basis: d.v.columns(r..m.cols()) })
}

pub fn image_basis<R: Real>(m: &Matrix<R>, tol: &ToleranceProfile<R>) -> Result<Subspace<R>> {
    image_basis_against(m, tol, R::zero())
}

pub fn image_basis_against<R: Real>(m: &Matrix<R>, tol: &ToleranceProfile<R>, scale: R) -> Result<Subspace<R>> {
    if m.rows() == 0 || m.cols() == 0 {
        m.ensure_finite("matrix")?;
        return Ok(Subspace::zero(m.rows()));
    }
    let d = svd(m)?;
    let r = d.rank_against(tol.eps_rank, scale);
    Ok(Subspace { ambient: m.rows(), basis: d.u.columns(0..r) })
}

pub fn intersect<R: Real>(a: &Subspace<R>, b: &Subspace<R>, tol: &ToleranceProfile<R>) -> Result<Subspace<R>> {
    a.check_ambient(b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Subspace::zero(a.ambient));
    }
    // (s, t) with A s = B t
    let stacked = a.basis.hstack(&(-&b.basis));
    let k = kernel_basis(&stacked, tol)?;
    if k.is_zero() {
        return Ok(Subspace::zero(a.ambient));
    }
    let top = k.basis.submatrix(0..a.dim(), 0..k.dim());
    image_basis(&(&a.basis * &top), tol)
}

/// `ker (m - lambda I)^exponent`, grown one power at a time:
/// `K_{j+1} = { v : (m - lambda) v in K_j }`, stopping once the dimension
/// stabilizes.
pub fn generalized_kernel<R: Real>(
    m: &Matrix<R>,
    lambda: Complex<R>,
    exponent: usize,
    tol: &ToleranceProfile<R>,
) -> Result<Subspace<R>> {
    generalized_kernel_against(m, lambda, exponent, tol, R::zero())
}

/// [`generalized_kernel`] with ranks measured against at least `scale`, for
/// matrices that are compressions of a larger operator.
pub fn generalized_kernel_against<R: Real>(
    m: &Matrix<R>,
    lambda: Complex<R>,
    exponent: usize,
    tol: &ToleranceProfile<R>,
    scale: R,
) -> Result<Subspace<R>> {
    if !m.is_square() {
        return Err(Error::input("generalized kernel needs a square matrix"));
    }
    if exponent == 0 {
        return Err(Error::input("generalized kernel exponent must be at least 1"));
    }
    let a = m.shifted(lambda);
    let n = m.rows();
    let scale = m.frobenius_norm().max(lambda.norm()).max(scale);
    let mut k = kernel_basis_against(&a, tol, scale)?;
    for _ in 1..exponent {
        if k.dim() == n || k.is_zero() {
            break;
        }
        // (I - Q Q^H) A v = 0
        let q = &k.basis;
        let proj = &Matrix::identity(n) - &(q * &q.adjoint());
        let next = kernel_basis_against(&(&proj * &a), tol, scale)?;
        if next.dim() == k.dim() {
            break;
        }
        k = next;
    }
    Ok(k)
}
