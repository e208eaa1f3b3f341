use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{svd, Matrix, Subspace};
use crate::scalar::{czero, Real};
use crate::tolerance::ToleranceProfile;

/// Lie bracket of the opposite algebra: `[a, b] = b a - a b`.
///
/// Elements act on `E` by left multiplication on column vectors, which turns
/// `E` into a right module over `L(E)^op`; this is the convention under which
/// the Koszul differential squares to zero.
pub fn bracket<R: Real>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::input(format!(
            "bracket needs square matrices of equal size, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(&(b * a) - &(a * b))
}

/// A Lie algebra `L` of operators on `E = C^m`, given by a basis `x_1..x_n`
/// of generator matrices.
#[derive(Clone, Debug)]
pub struct LieRep<R: Real = f64> {
    dim_e: usize,
    generators: Vec<Matrix<R>>,
    /// `structure[(i * n + j) * n + h]` is the coefficient of `x_h` in `[x_i, x_j]`.
    structure: Vec<Complex<R>>,
    closure_residual: R,
    tol: ToleranceProfile<R>,
}

impl<R: Real> LieRep<R> {
    /// Validates the generators and solves for structure constants by least
    /// squares; the least-squares residual is the closure check.
    pub fn new(generators: Vec<Matrix<R>>, tol: ToleranceProfile<R>) -> Result<Self> {
        tol.validate()?;
        let first = generators.first().ok_or_else(|| Error::input("at least one generator is required"))?;
        let m = first.rows();
        if m == 0 {
            return Err(Error::input("generators must act on a nonzero space"));
        }
        for (i, g) in generators.iter().enumerate() {
            if !g.is_square() || g.rows() != m {
                return Err(Error::input(format!("generator {} is {}x{}, expected {m}x{m}", i + 1, g.rows(), g.cols())));
            }
            g.ensure_finite(&format!("generator {}", i + 1))?;
        }
        let n = generators.len();
        let coords = Matrix::from_columns(m * m, &generators.iter().map(Matrix::to_vec).collect::<Vec<_>>());
        let d = svd(&coords)?;
        if d.rank(tol.eps_rank) < n {
            return Err(Error::input("generators are linearly dependent"));
        }

        let mut structure = vec![czero(); n * n * n];
        let mut residual = R::zero();
        let scale = generators.iter().map(|g| g.frobenius_norm()).fold(R::zero(), R::max).powi(2).max(R::one());
        for i in 0..n {
            for j in (i + 1)..n {
                let b = bracket(&generators[i], &generators[j])?;
                let target = b.to_vec();
                let coef = crate::linalg::solve_with(&d, &target, tol.eps_rank);
                let fitted = Matrix::combination(&coef, &generators);
                residual = residual.max((&fitted - &b).frobenius_norm());
                for h in 0..n {
                    structure[(i * n + j) * n + h] = coef[h];
                    structure[(j * n + i) * n + h] = -coef[h];
                }
            }
        }
        let bound = tol.eps_residual * scale;
        if residual > bound {
            return Err(Error::NotClosed { residual: residual.as_f64(), bound: bound.as_f64() });
        }
        Ok(Self { dim_e: m, generators, structure, closure_residual: residual, tol })
    }

    pub fn with_default_tolerances(generators: Vec<Matrix<R>>) -> Result<Self> {
        Self::new(generators, ToleranceProfile::default())
    }

    /// `m = dim E`.
    pub fn dim_e(&self) -> usize {
        self.dim_e
    }

    /// `n = dim L`.
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Matrix<R>] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Matrix<R> {
        &self.generators[i]
    }

    pub fn tolerances(&self) -> &ToleranceProfile<R> {
        &self.tol
    }

    pub fn closure_residual(&self) -> R {
        self.closure_residual
    }

    /// Coefficients of `[x_i, x_j]` in the basis `x_1..x_n` (0-based indices).
    pub fn bracket_coeffs(&self, i: usize, j: usize) -> &[Complex<R>] {
        let n = self.dim();
        &self.structure[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Structure constant: coefficient of `x_h` in `[x_i, x_j]`.
    pub fn structure_constant(&self, i: usize, j: usize, h: usize) -> Complex<R> {
        self.bracket_coeffs(i, j)[h]
    }

    /// The operator `sum_k coeffs[k] x_k`.
    pub fn element(&self, coeffs: &[Complex<R>]) -> Matrix<R> {
        Matrix::combination(coeffs, &self.generators)
    }

    /// Bracket of two elements given in coefficient coordinates.
    pub fn bracket_coords(&self, u: &[Complex<R>], v: &[Complex<R>]) -> Vec<Complex<R>> {
        let n = self.dim();
        let mut out = vec![czero(); n];
        for (i, &ui) in u.iter().enumerate().take(n) {
            if ui == czero() {
                continue;
            }
            for (j, &vj) in v.iter().enumerate().take(n) {
                let w = ui * vj;
                if w == czero() || i == j {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(self.bracket_coeffs(i, j)) {
                    *o = *o + w * *c;
                }
            }
        }
        out
    }

    /// Matrix of `v -> [x_i, v]` on coefficient space.
    pub fn ad(&self, i: usize) -> Matrix<R> {
        let n = self.dim();
        Matrix::from_fn(n, n, |h, j| self.structure_constant(i, j, h))
    }

    /// Same algebra expressed in a new basis `y_l = sum_k basis[(k, l)] x_k`.
    pub fn rebased(&self, basis: &Matrix<R>) -> Result<Self> {
        if basis.rows() != self.dim() {
            return Err(Error::input("basis change has the wrong number of rows"));
        }
        let gens = (0..basis.cols()).map(|l| self.element(&basis.column(l))).collect();
        Self::new(gens, self.tol)
    }

    /// Same generators under a different tolerance profile.
    pub fn with_tolerances(&self, tol: ToleranceProfile<R>) -> Result<Self> {
        Self::new(self.generators.clone(), tol)
    }

    /// `max(1, |x_i|_F)`: scale for residuals of identities on `E`.
    pub fn operator_scale(&self) -> R {
        self.generators.iter().map(|g| g.frobenius_norm()).fold(R::one(), R::max)
    }

    /// `max(1, |c^h_ij|)`: the size of brackets of unit coefficient vectors.
    pub fn bracket_scale(&self) -> R {
        self.structure.iter().map(|c| c.norm()).fold(R::one(), R::max)
    }

    /// All basis brackets `[x_i, x_j]`, `i < j`, as coefficient vectors.
    pub(crate) fn bracket_vectors(&self) -> Vec<Vec<Complex<R>>> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                out.push(self.bracket_coeffs(i, j).to_vec());
            }
        }
        out
    }

    /// `L^2 = [L, L]` as a subspace of coefficient space `C^n`.
    pub fn derived_subalgebra(&self) -> Result<Subspace<R>> {
        Subspace::span_vectors_against(self.dim(), &self.bracket_vectors(), &self.tol, self.bracket_scale())
    }
}
