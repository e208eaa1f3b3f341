//! One-sided (Hestenes) Jacobi singular value decomposition.
//!
//! Columns of a working copy of `A` are rotated pairwise until mutually
//! orthogonal. The accumulated rotations form `V`, the final column norms are
//! the singular values and the normalized columns are the left singular
//! vectors. Works for any shape; for wide matrices the surplus columns
//! converge to zero.

use num_complex::Complex;

use super::matrix::{dot, norm, Matrix};
use crate::error::{Error, Result};
use crate::scalar::{czero, Real};

const MAX_SWEEPS: usize = 80;

/// Thin result of [`svd`]: `A * V[:, j] = s[j] * U[:, j]`, singular values descending.
#[derive(Clone, Debug)]
pub struct Svd<R: Real = f64> {
    /// `rows x cols`; columns with `s[j] == 0` are zero.
    pub u: Matrix<R>,
    pub s: Vec<R>,
    /// `cols x cols`, unitary.
    pub v: Matrix<R>,
}

impl<R: Real> Svd<R> {
    pub fn sigma_max(&self) -> R {
        self.s.first().copied().unwrap_or_else(R::zero)
    }

    /// Cutoff below which singular values count as zero:
    /// `eps_rank * sigma_max * max(rows, cols)`.
    pub fn threshold(&self, eps_rank: R) -> R {
        let dims = R::from_usize(self.u.rows().max(self.v.rows())).unwrap();
        eps_rank * self.sigma_max() * dims
    }

    pub fn rank(&self, eps_rank: R) -> usize {
        self.rank_against(eps_rank, R::zero())
    }

    /// Rank with `sigma_max` replaced by `max(sigma_max, scale)`, so that a
    /// matrix which is rounding noise relative to `scale` has rank zero.
    pub fn rank_against(&self, eps_rank: R, scale: R) -> usize {
        let top = self.sigma_max().max(scale);
        if top == R::zero() {
            return 0;
        }
        let dims = R::from_usize(self.u.rows().max(self.v.rows())).unwrap();
        let t = eps_rank * top * dims;
        self.s.iter().filter(|&&s| s > t).count()
    }
}

pub fn svd<R: Real>(a: &Matrix<R>) -> Result<Svd<R>> {
    a.ensure_finite("matrix")?;
    let (rows, cols) = (a.rows(), a.cols());
    // column-major working storage
    let mut w: Vec<Vec<Complex<R>>> = (0..cols).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<Complex<R>>> = (0..cols)
        .map(|j| {
            let mut e = vec![czero(); cols];
            e[j] = Complex::new(R::one(), R::zero());
            e
        })
        .collect();

    let tol = R::epsilon() * R::lit(4.0);
    // Inner products below this are rounding noise of the largest columns.
    let floor = R::epsilon() * a.frobenius_norm().powi(2);
    let mut converged = cols < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let alpha = norm(&w[p]).powi(2);
                let beta = norm(&w[q]).powi(2);
                let gamma = dot(&w[p], &w[q]);
                let g = gamma.norm();
                if g <= floor || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // Phase-align column q so that the pair becomes a real problem.
                let phase = gamma / g;
                let zeta = (beta - alpha) / (R::lit(2.0) * g);
                let sign = if zeta >= R::zero() { R::one() } else { -R::one() };
                let t = sign / (zeta.abs() + (R::one() + zeta * zeta).sqrt());
                let cs = R::one() / (R::one() + t * t).sqrt();
                let sn = cs * t;
                rotate(&mut w, p, q, phase, cs, sn);
                rotate(&mut v, p, q, phase, cs, sn);
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::NoConvergence { size: cols });
    }

    let mut order: Vec<(R, usize)> = w.iter().enumerate().map(|(j, col)| (norm(col), j)).collect();
    order.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap_or(std::cmp::Ordering::Equal).then(x.1.cmp(&y.1)));

    let mut u = Matrix::zeros(rows, cols);
    let mut vm = Matrix::zeros(cols, cols);
    let mut s = Vec::with_capacity(cols);
    for (k, &(sigma, j)) in order.iter().enumerate() {
        s.push(sigma);
        if sigma > R::zero() {
            let col: Vec<_> = w[j].iter().map(|x| *x / sigma).collect();
            u.set_column(k, &col);
        }
        vm.set_column(k, &v[j]);
    }
    Ok(Svd { u, s, v: vm })
}

/// Applies the rotation to columns `p`, `q` where column `q` is first multiplied
/// by `conj(phase)`: `p' = c p - s q~`, `q' = s p + c q~`.
fn rotate<R: Real>(cols: &mut [Vec<Complex<R>>], p: usize, q: usize, phase: Complex<R>, cs: R, sn: R) {
    let ph = phase.conj();
    let (left, right) = cols.split_at_mut(q);
    let (cp, cq) = (&mut left[p], &mut right[0]);
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let yq = *y * ph;
        let xp = *x;
        *x = xp * cs - yq * sn;
        *y = xp * sn + yq * cs;
    }
}

/// Minimum-norm least-squares solution of `A x = b` via the SVD.
pub fn least_squares<R: Real>(a: &Matrix<R>, b: &[Complex<R>], eps_rank: R) -> Result<Vec<Complex<R>>> {
    let d = svd(a)?;
    Ok(solve_with(&d, b, eps_rank))
}

pub(crate) fn solve_with<R: Real>(d: &Svd<R>, b: &[Complex<R>], eps_rank: R) -> Vec<Complex<R>> {
    let r = d.rank(eps_rank);
    let cols = d.v.rows();
    let mut x = vec![czero(); cols];
    for k in 0..r {
        let uk = d.u.column(k);
        let coef = dot(&uk, b) / d.s[k];
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = *xi + d.v[(i, k)] * coef;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    fn reconstruct(d: &Svd<f64>) -> Matrix<f64> {
        let sig = Matrix::diagonal(&d.s.iter().map(|&s| c(s, 0.0)).collect::<Vec<_>>());
        &(&d.u * &sig) * &d.v.adjoint()
    }

    #[test]
    fn reconstructs_complex_rectangular() {
        let a = Matrix::<f64>::from_fn(3, 5, |i, j| c((i * 5 + j) as f64 * 0.3 - 1.0, (i as f64 - j as f64) * 0.7));
        let d = svd(&a).unwrap();
        assert!((&reconstruct(&d) - &a).max_abs() < 1e-12);
        let vv = &d.v.adjoint() * &d.v;
        assert!((&vv - &Matrix::identity(5)).max_abs() < 1e-12);
        assert!(d.s.windows(2).all(|w| w[0] >= w[1]));
        // entries are affine in (i, j), so the rank is 2
        assert_eq!(d.rank(1e-9), 2);
    }

    #[test]
    fn known_singular_values() {
        // [[3, 0], [4, 5]] has singular values sqrt(45), sqrt(5)
        let a = Matrix::<f64>::from_real_rows(&[&[3.0, 0.0], &[4.0, 5.0]]);
        let d = svd(&a).unwrap();
        assert!((d.s[0] - 45f64.sqrt()).abs() < 1e-13);
        assert!((d.s[1] - 5f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn least_squares_solves_consistent_system() {
        let a = Matrix::<f64>::from_real_rows(&[&[1.0, 0.0], &[0.0, 2.0], &[1.0, 1.0]]);
        let x = least_squares(&a, &[c(1.0, 0.0), c(4.0, 0.0), c(3.0, 0.0)], 1e-9).unwrap();
        assert!((x[0] - c(1.0, 0.0)).norm() < 1e-13);
        assert!((x[1] - c(2.0, 0.0)).norm() < 1e-13);
    }
}
