//! Central series, flags of ideals and restriction to ideals.
//!
//! All subspaces here live in coefficient space `C^n` relative to the
//! generator basis of a [`LieRep`].

use num_complex::Complex;

use super::character::Character;
use super::rep::LieRep;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Matrix, Subspace};
use crate::scalar::{czero, Real};

/// How the prefixes of an [`IdealFlag`] sit inside `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagKind {
    /// Every prefix is an ideal of `L` and `[L_i, L_j] ⊆ L_{i-1}`.
    Central,
    /// Each `L_{i-1}` is an ideal of codimension one in `L_i` only.
    Subnormal,
}

/// A full flag `0 = L_0 ⊂ L_1 ⊂ .. ⊂ L_n = L` with `L_i` spanned by the first
/// `i` columns of `basis` (columns are coefficient vectors).
#[derive(Clone, Debug)]
pub struct IdealFlag<R: Real = f64> {
    pub basis: Matrix<R>,
    /// `dim L^2`; for central flags `L_k = L^2`.
    pub derived_dim: usize,
    pub kind: FlagKind,
}

impl<R: Real> IdealFlag<R> {
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.basis.cols()).collect()
    }

    pub fn len(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.cols() == 0
    }

    /// Columns spanning `L_i`.
    pub fn prefix(&self, i: usize) -> Matrix<R> {
        self.basis.columns(0..i)
    }
}

fn brackets_with<R: Real>(rep: &LieRep<R>, left: &[Vec<Complex<R>>], right: &[Vec<Complex<R>>]) -> Vec<Vec<Complex<R>>> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for u in left {
        for v in right {
            out.push(rep.bracket_coords(u, v));
        }
    }
    out
}

fn unit<R: Real>(n: usize, k: usize) -> Vec<Complex<R>> {
    let mut e = vec![czero(); n];
    e[k] = Complex::new(R::one(), R::zero());
    e
}

fn standard_basis<R: Real>(n: usize) -> Vec<Vec<Complex<R>>> {
    (0..n).map(|k| unit(n, k)).collect()
}

/// `C^1 = L`, `C^{r+1} = [L, C^r]`, stopping at the zero space or at the first
/// repeated dimension (which is included).
pub fn lower_central_series<R: Real>(rep: &LieRep<R>) -> Result<Vec<Subspace<R>>> {
    let n = rep.dim();
    let tol = rep.tolerances();
    let gens = standard_basis(n);
    let scale = rep.bracket_scale();
    let mut series = vec![Subspace::full(n)];
    loop {
        let last = series.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = Subspace::span_vectors_against(n, &brackets_with(rep, &gens, &last.vectors()), tol, scale)?;
        let repeated = next.dim() >= last.dim();
        series.push(next);
        if repeated {
            break;
        }
    }
    Ok(series)
}

pub fn is_nilpotent<R: Real>(rep: &LieRep<R>) -> Result<bool> {
    Ok(lower_central_series(rep)?.last().is_some_and(Subspace::is_zero))
}

/// Basis of `{f : f(L^2) = 0}` inside `L* = C^n`; columns are characters.
pub fn character_space<R: Real>(rep: &LieRep<R>) -> Result<Subspace<R>> {
    let d = rep.derived_subalgebra()?;
    if d.is_zero() {
        return Ok(Subspace::full(rep.dim()));
    }
    kernel_basis(&d.basis().transpose(), rep.tolerances())
}

/// Extends the vectors in `chosen` (all lying in `target`) to a spanning set
/// of `target`, preferring projections of standard basis vectors with the
/// lowest index so that an already adapted basis is kept as is.
fn extend_within<R: Real>(chosen: &[Vec<Complex<R>>], target: &Subspace<R>, rep: &LieRep<R>) -> Result<Vec<Vec<Complex<R>>>> {
    let n = target.ambient_dim();
    let tol = rep.tolerances();
    let cands: Vec<Vec<Complex<R>>> = (0..n).map(|k| target.project(&unit(n, k))).collect();
    let mut picked = Vec::new();
    let mut span = Subspace::span_vectors(n, chosen, tol)?;
    while span.dim() < target.dim() {
        let scores: Vec<R> = cands.iter().map(|c| span.distance(c)).collect();
        let best = scores.iter().copied().fold(R::zero(), R::max);
        if best <= tol.eps_rank {
            return Err(Error::Tolerance { degree: 0, detail: "could not extend a basis inside a subspace".into() });
        }
        let k = scores.iter().position(|&s| s >= best * R::lit(0.999)).unwrap();
        picked.push(cands[k].clone());
        let all: Vec<_> = chosen.iter().chain(&picked).cloned().collect();
        span = Subspace::span_vectors(n, &all, tol)?;
    }
    Ok(picked)
}

/// Jordan–Hölder flag of a nilpotent algebra refined from the lower central
/// series, deepest members first.
pub fn jordan_holder_flag<R: Real>(rep: &LieRep<R>) -> Result<IdealFlag<R>> {
    let series = lower_central_series(rep)?;
    if !series.last().is_some_and(Subspace::is_zero) {
        return Err(Error::Unsupported("jordan_holder_flag needs a nilpotent algebra".into()));
    }
    let n = rep.dim();
    let mut cols: Vec<Vec<Complex<R>>> = Vec::with_capacity(n);
    for member in series.iter().rev().skip(1) {
        let more = extend_within(&cols, member, rep)?;
        cols.extend(more);
    }
    let flag = IdealFlag {
        basis: Matrix::from_columns(n, &cols),
        derived_dim: series.get(1).map_or(0, Subspace::dim),
        kind: FlagKind::Central,
    };
    let r = flag_residual(rep, &flag)?;
    let bound = rep.tolerances().eps_residual * rep.bracket_scale();
    if r > bound {
        return Err(Error::Tolerance { degree: 0, detail: format!("flag lowering residual {:.3e}", r.as_f64()) });
    }
    Ok(flag)
}

/// A chain `L_1 ⊂ .. ⊂ L_n` with each `L_{i-1}` an ideal of codimension one in
/// `L_i`, built by choosing hyperplanes that contain derived algebras. Exists
/// exactly when `L` is solvable.
pub fn solvable_chain<R: Real>(rep: &LieRep<R>) -> Result<IdealFlag<R>> {
    let n = rep.dim();
    let tol = rep.tolerances();
    let derived_dim = rep.derived_subalgebra()?.dim();
    let mut cols: Vec<Vec<Complex<R>>> = vec![Vec::new(); n];
    let mut current = Subspace::full(n);
    for i in (0..n).rev() {
        let v = current.vectors();
        let derived = Subspace::span_vectors_against(n, &brackets_with(rep, &v, &v), tol, rep.bracket_scale())?;
        if derived.dim() >= current.dim() {
            return Err(Error::Unsupported("algebra is not solvable: no codimension-one ideal".into()));
        }
        let base = derived.vectors();
        let ext = extend_within(&base, &current, rep)?;
        let (last, rest) = ext.split_last().expect("nonempty extension");
        cols[i] = last.clone();
        let hyper: Vec<_> = base.iter().chain(rest).cloned().collect();
        current = Subspace::span_vectors(n, &hyper, tol)?;
    }
    Ok(IdealFlag { basis: Matrix::from_columns(n, &cols), derived_dim, kind: FlagKind::Subnormal })
}

/// Central flag when `L` is nilpotent, subnormal chain otherwise.
pub fn ideal_chain<R: Real>(rep: &LieRep<R>) -> Result<IdealFlag<R>> {
    if is_nilpotent(rep)? {
        jordan_holder_flag(rep)
    } else {
        solvable_chain(rep)
    }
}

/// Largest distance of `[x, y_i]` from `L_{i-1}`, over `x` in `L` (central
/// flags) or `x` in `L_i` (subnormal chains).
pub fn flag_residual<R: Real>(rep: &LieRep<R>, flag: &IdealFlag<R>) -> Result<R> {
    let n = rep.dim();
    let tol = rep.tolerances();
    let cols: Vec<_> = (0..flag.len()).map(|i| flag.basis.column(i)).collect();
    let mut worst = R::zero();
    for i in 0..cols.len() {
        let below = Subspace::span_vectors(n, &cols[..i], tol)?;
        let acting: Vec<Vec<Complex<R>>> = match flag.kind {
            FlagKind::Central => standard_basis(n),
            FlagKind::Subnormal => cols[..=i].to_vec(),
        };
        for x in &acting {
            worst = worst.max(below.distance(&rep.bracket_coords(x, &cols[i])));
        }
    }
    Ok(worst)
}

/// Largest distance of `[x_k, v]` from `span(vectors)` over generators and
/// spanning vectors; zero exactly for ideals.
pub fn ideal_residual<R: Real>(rep: &LieRep<R>, vectors: &[Vec<Complex<R>>]) -> Result<R> {
    let n = rep.dim();
    let span = Subspace::span_vectors(n, vectors, rep.tolerances())?;
    let mut worst = R::zero();
    for x in standard_basis::<R>(n) {
        for v in vectors {
            worst = worst.max(span.distance(&rep.bracket_coords(&x, v)));
        }
    }
    Ok(worst)
}

/// The ideal `I = span(y_1..y_i)` as its own representation on `E`, together
/// with the restriction map on characters.
#[derive(Clone, Debug)]
pub struct Restriction<R: Real = f64> {
    pub rep: LieRep<R>,
    /// `n x i`; column `l` holds `y_l` in the coordinates of `L`.
    pub embedding: Matrix<R>,
}

impl<R: Real> Restriction<R> {
    /// `pi(f) = (f(y_1), .., f(y_i))`.
    pub fn project(&self, f: &Character<R>) -> Character<R> {
        Character::new((0..self.embedding.cols()).map(|l| f.apply(&self.embedding.column(l))).collect())
    }
}

/// Restricts to the span of the first `i` flag vectors, checking that this
/// span is an ideal of `L`.
pub fn restrict_to_ideal<R: Real>(rep: &LieRep<R>, flag: &IdealFlag<R>, i: usize) -> Result<Restriction<R>> {
    if i == 0 || i > flag.len() {
        return Err(Error::input(format!("flag prefix {i} out of range 1..={}", flag.len())));
    }
    let emb = flag.prefix(i);
    restrict_to_span(rep, &emb)
}

/// Restriction to the span of the columns of `embedding`, which must be an ideal.
pub fn restrict_to_span<R: Real>(rep: &LieRep<R>, embedding: &Matrix<R>) -> Result<Restriction<R>> {
    let vecs: Vec<_> = (0..embedding.cols()).map(|l| embedding.column(l)).collect();
    let r = ideal_residual(rep, &vecs)?;
    if r > rep.tolerances().eps_residual * rep.bracket_scale() {
        return Err(Error::input(format!("span is not an ideal (residual {:.3e})", r.as_f64())));
    }
    let sub = rep.rebased(embedding)?;
    Ok(Restriction { rep: sub, embedding: embedding.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::c;

    fn rep(g: Vec<Matrix<f64>>) -> LieRep<f64> {
        LieRep::with_default_tolerances(g).unwrap()
    }

    fn dims(r: &LieRep<f64>) -> Vec<usize> {
        lower_central_series(r).unwrap().iter().map(Subspace::dim).collect()
    }

    #[test]
    fn central_series_examples() {
        assert_eq!(dims(&rep(fixtures::heisenberg_3())), vec![3, 1, 0]);
        assert_eq!(dims(&rep(fixtures::solvable_2x2())), vec![2, 1, 1]);
        assert_eq!(dims(&rep(fixtures::diag_1_2())), vec![1, 0]);
        assert!(!is_nilpotent(&rep(fixtures::solvable_2x2())).unwrap());
        assert!(is_nilpotent(&rep(fixtures::heisenberg_3())).unwrap());
    }

    #[test]
    fn heisenberg_flag_puts_center_first() {
        let r = rep(fixtures::heisenberg_3());
        let f = jordan_holder_flag(&r).unwrap();
        assert_eq!(f.derived_dim, 1);
        let col = |i| f.basis.column(i);
        // <E13> then <E13, E12>
        assert!((col(0)[2].norm() - 1.0).abs() < 1e-12 && col(0)[0].norm() < 1e-12);
        assert!((col(1)[0].norm() - 1.0).abs() < 1e-12 && col(1)[1].norm() < 1e-12);
        assert!(flag_residual(&r, &f).unwrap() < 1e-12);
    }

    #[test]
    fn trivial_and_abelian_flags() {
        let f = jordan_holder_flag(&rep(fixtures::diag_1_2())).unwrap();
        assert_eq!((f.len(), f.derived_dim), (1, 0));
        let d1 = Matrix::diagonal(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let d2 = Matrix::diagonal(&[c(0.0, 0.0), c(1.0, 0.0)]);
        let f = jordan_holder_flag(&rep(vec![d1, d2])).unwrap();
        assert_eq!((f.len(), f.derived_dim), (2, 0));
        assert!(jordan_holder_flag(&rep(fixtures::solvable_2x2())).is_err());
    }

    #[test]
    fn solvable_chain_keeps_counterexample_basis() {
        let r = rep(fixtures::solvable_2x2());
        let f = ideal_chain(&r).unwrap();
        assert_eq!(f.kind, FlagKind::Subnormal);
        assert!((&f.basis - &Matrix::identity(2)).max_abs() < 1e-12);
        assert!(flag_residual(&r, &f).unwrap() < 1e-12);
    }

    #[test]
    fn character_space_dims() {
        assert_eq!(character_space(&rep(fixtures::solvable_2x2())).unwrap().dim(), 1);
        let s = character_space(&rep(fixtures::solvable_2x2())).unwrap();
        assert!(s.basis()[(0, 0)].norm() < 1e-12);
        assert_eq!(character_space(&rep(fixtures::diag_1_2())).unwrap().dim(), 1);
        assert_eq!(character_space(&rep(fixtures::heisenberg_3())).unwrap().dim(), 2);
    }

    #[test]
    fn restriction_examples() {
        let r = rep(fixtures::solvable_2x2());
        let chain = solvable_chain(&r).unwrap();
        let res = restrict_to_ideal(&r, &chain, 1).unwrap();
        assert!((&res.rep.generators()[0] - &fixtures::solvable_y()).max_abs() < 1e-12);
        let f = Character::from_real(&[0.0, 0.5]);
        assert_eq!(res.project(&f).values, vec![c(0.0, 0.0)]);

        let r = rep(fixtures::heisenberg_3());
        let flag = jordan_holder_flag(&r).unwrap();
        let full = restrict_to_ideal(&r, &flag, 3).unwrap();
        assert_eq!(full.rep.dim(), 3);
        let ab = restrict_to_ideal(&r, &flag, 2).unwrap();
        assert!(ab.rep.derived_subalgebra().unwrap().is_zero());
        // <E12> alone is not an ideal
        let e12 = Matrix::from_columns(3, &[vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]]);
        assert!(restrict_to_span(&r, &e12).is_err());
    }
}
