//! Weights and weight spaces.
//!
//! A weight is a functional `α` with a nonzero common vector of all
//! `(x_i - α(x_i))^m`. The table is built by refining `(partial weight, V)`
//! pairs one generator at a time. When `V` is invariant under the next
//! generator (always, for nilpotent algebras) the refinement happens inside
//! `V`; otherwise `V` is intersected with ambient generalized kernels, which
//! stays correct for non-invariant `V` (solvable inputs).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lie::{is_nilpotent, Character, CharacterSet, LieRep};
use crate::linalg::{
    distinct_eigenvalues, distinct_eigenvalues_against, generalized_kernel, generalized_kernel_against, intersect,
    kernel_basis_against, rank, Matrix, Subspace,
};
use crate::report::{Check, Report};
use crate::scalar::Real;

#[derive(Clone, Debug)]
pub struct WeightEntry<R: Real = f64> {
    pub weight: Character<R>,
    /// `E_α`, orthonormal basis in `E` coordinates.
    pub space: Subspace<R>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Default)]
pub struct WeightTable<R: Real = f64> {
    pub entries: Vec<WeightEntry<R>>,
}

impl<R: Real> WeightTable<R> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weights(&self, radius: R) -> CharacterSet<R> {
        CharacterSet::from_characters(radius, self.entries.iter().map(|e| e.weight.clone()))
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn find(&self, f: &Character<R>, radius: R) -> Option<&WeightEntry<R>> {
        self.entries.iter().find(|e| e.weight.distance(f) <= radius)
    }
}

/// `Q^H A Q` for orthonormal `Q`.
fn compress<R: Real>(a: &Matrix<R>, q: &Matrix<R>) -> Matrix<R> {
    &(&q.adjoint() * a) * q
}

pub fn weight_table<R: Real>(rep: &LieRep<R>) -> Result<WeightTable<R>> {
    let m = rep.dim_e();
    let tol = rep.tolerances();
    let scale = rep.operator_scale();
    let mut partial: Vec<(Vec<Complex<R>>, Subspace<R>)> = vec![(Vec::new(), Subspace::full(m))];
    for x in rep.generators() {
        // ambient generalized kernels, computed on demand
        let mut ambient: Option<Vec<(Complex<R>, Subspace<R>)>> = None;
        let mut next = Vec::new();
        for (alpha, v) in &partial {
            let q = v.basis();
            let invariant =
                (&(&Matrix::identity(m) - &(q * &q.adjoint())) * &(x * q)).frobenius_norm() <= tol.eps_residual * scale;
            if invariant {
                // refine inside V through the compression, which avoids
                // intersecting ill-conditioned ambient subspaces
                let a = compress(x, q);
                for c in distinct_eigenvalues_against(&a, tol, scale)? {
                    let k = generalized_kernel_against(&a, c.value, q.cols(), tol, scale)?;
                    if !k.is_zero() {
                        let mut al = alpha.clone();
                        al.push(c.value);
                        next.push((al, Subspace::span(&(q * k.basis()), tol)?));
                    }
                }
            } else {
                if ambient.is_none() {
                    ambient = Some(
                        distinct_eigenvalues(x, tol)?
                            .iter()
                            .map(|c| generalized_kernel(x, c.value, m, tol).map(|k| (c.value, k)))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
                for (lambda, k) in ambient.as_ref().unwrap() {
                    let w = intersect(v, k, tol)?;
                    if !w.is_zero() {
                        let mut al = alpha.clone();
                        al.push(*lambda);
                        next.push((al, w));
                    }
                }
            }
        }
        partial = next;
    }

    let mut entries: Vec<WeightEntry<R>> = partial
        .into_iter()
        .map(|(mut alpha, space)| {
            // On an invariant space the compressed trace is exact; keep the
            // cluster mean when the space is not invariant.
            let k = R::from_usize(space.dim()).unwrap();
            for (i, a) in alpha.iter_mut().enumerate() {
                let t = compress(rep.generator(i), space.basis()).trace() / k;
                if (t - *a).norm() <= tol.eps_cluster {
                    *a = t;
                }
            }
            let multiplicity = space.dim();
            WeightEntry { weight: Character::new(alpha), space, multiplicity }
        })
        .collect();
    let eps = tol.eps_cluster;
    entries.sort_by(|a, b| a.weight.canonical_cmp(&b.weight, eps));
    Ok(WeightTable { entries })
}

/// Largest `|(I - QQ^H) x_i Q|` over generators.
fn invariance_residual<R: Real>(rep: &LieRep<R>, q: &Matrix<R>) -> R {
    let m = rep.dim_e();
    let proj = &Matrix::identity(m) - &(q * &q.adjoint());
    rep.generators().iter().map(|x| (&proj * &(x * q)).frobenius_norm()).fold(R::zero(), R::max)
}

/// Basis of `E_α` in which every `x_i - α(x_i)` is strictly upper triangular.
///
/// Built from the ascending chain `W_{j+1} = {v : (x_i - α_i) v ∈ W_j for all i}`
/// inside `E_α`; each layer of the chain becomes a block of columns.
pub fn triangularizing_basis<R: Real>(rep: &LieRep<R>, entry: &WeightEntry<R>) -> Result<Matrix<R>> {
    let tol = rep.tolerances();
    let q = entry.space.basis();
    let k = q.cols();
    if k == 0 {
        return Err(Error::input("empty weight space"));
    }
    let scale = rep.operator_scale().max(entry.weight.sup_norm());
    if invariance_residual(rep, q) > tol.eps_residual * scale {
        return Err(Error::Unsupported("weight space is not invariant under the algebra".into()));
    }
    let shifted: Vec<Matrix<R>> =
        rep.generators().iter().zip(&entry.weight.values).map(|(x, a)| compress(&x.shifted(*a), q)).collect();

    let mut layers = Subspace::<R>::zero(k);
    let mut cols: Vec<Vec<Complex<R>>> = Vec::with_capacity(k);
    while layers.dim() < k {
        let proj = &Matrix::identity(k) - &(layers.basis() * &layers.basis().adjoint());
        let mut stacked = Matrix::zeros(0, k);
        for a in &shifted {
            stacked = stacked.vstack(&(&proj * a));
        }
        let next = kernel_basis_against(&stacked, tol, scale)?;
        if next.dim() <= layers.dim() {
            return Err(Error::Unsupported("input not nilpotent on weight space".into()));
        }
        let fresh = layers.complement_in(&next, tol)?;
        cols.extend(fresh.vectors());
        layers = next;
    }
    let b = Matrix::from_columns(k, &cols);
    let basis = q * &b;

    for (x, a) in rep.generators().iter().zip(&entry.weight.values) {
        let t = compress(&x.shifted(*a), &basis);
        let low = (0..k).flat_map(|i| (0..=i).map(move |j| (i, j))).map(|(i, j)| t[(i, j)].norm()).fold(R::zero(), R::max);
        if low > tol.eps_residual * scale {
            return Err(Error::Tolerance {
                degree: 0,
                detail: format!("triangularized generator has lower part {:.3e}", low.as_f64()),
            });
        }
    }
    Ok(basis)
}

pub const CHECK_LINEAR: &str = "weights vanish on [L, L]";
pub const CHECK_DECOMPOSITION: &str = "E is the direct sum of weight spaces";
pub const CHECK_SINGLE_ROOT: &str = "single characteristic root on each weight space";
pub const CHECK_TRIANGULAR: &str = "simultaneous triangular form";

/// Checks the classical properties of weights; the last three only apply to
/// nilpotent algebras.
pub fn verify_weight_properties<R: Real>(rep: &LieRep<R>, table: &WeightTable<R>) -> Result<Report> {
    let tol = rep.tolerances();
    let mut report = Report::default();

    let worst = table.entries.iter().map(|e| e.weight.derived_defect(rep)).fold(R::zero(), R::max);
    report.push(Check::expect(
        CHECK_LINEAR,
        worst <= tol.eps_cluster,
        || format!("weight does not vanish on [L, L] (defect {:.3e})", worst.as_f64()),
        Some(worst.as_f64()),
    ));

    if !is_nilpotent(rep)? {
        let why = "not applicable: non-nilpotent input";
        report.push(Check::skip(CHECK_DECOMPOSITION, why));
        report.push(Check::skip(CHECK_SINGLE_ROOT, why));
        report.push(Check::skip(CHECK_TRIANGULAR, why));
        return Ok(report);
    }

    let m = rep.dim_e();
    let total = table.total_multiplicity();
    let all: Vec<Vec<Complex<R>>> = table.entries.iter().flat_map(|e| e.space.vectors()).collect();
    let r = if all.is_empty() { 0 } else { rank(&Matrix::from_columns(m, &all), tol)? };
    report.push(Check::expect(
        CHECK_DECOMPOSITION,
        !table.is_empty() && total == m && r == m,
        || format!("multiplicities sum to {total} with joint rank {r}, expected {m}"),
        None,
    ));

    let mut worst = R::zero();
    let mut bad = None;
    for e in &table.entries {
        for (i, x) in rep.generators().iter().enumerate() {
            let clusters = distinct_eigenvalues_against(&compress(x, e.space.basis()), tol, rep.operator_scale())?;
            let dev = clusters.iter().map(|c| (c.value - e.weight.values[i]).norm()).fold(R::zero(), R::max);
            worst = worst.max(dev);
            if clusters.len() != 1 || dev > tol.eps_cluster {
                bad.get_or_insert((i, clusters.len()));
            }
        }
    }
    report.push(Check::expect(
        CHECK_SINGLE_ROOT,
        bad.is_none(),
        || {
            let (i, c) = bad.unwrap();
            format!("generator {} has {c} distinct eigenvalues on a weight space", i + 1)
        },
        Some(worst.as_f64()),
    ));

    let failure = table.entries.iter().find_map(|e| triangularizing_basis(rep, e).err());
    report.push(match failure {
        None => Check::pass(CHECK_TRIANGULAR, None),
        Some(err) => Check::fail(CHECK_TRIANGULAR, err.to_string(), None),
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::c;

    fn rep(g: Vec<Matrix<f64>>) -> LieRep<f64> {
        LieRep::with_default_tolerances(g).unwrap()
    }

    fn values(t: &WeightTable<f64>) -> Vec<Vec<(f64, f64)>> {
        t.entries.iter().map(|e| e.weight.values.iter().map(|v| (v.re, v.im)).collect()).collect()
    }

    fn close(a: &[Vec<(f64, f64)>], b: &[&[f64]]) -> bool {
        a.len() == b.len()
            && a.iter().zip(b).all(|(x, y)| {
                x.len() == y.len() && x.iter().zip(y.iter()).all(|(u, v)| (u.0 - v).abs() < 1e-12 && u.1.abs() < 1e-12)
            })
    }

    #[test]
    fn counterexample_weights() {
        let t = weight_table(&rep(fixtures::solvable_2x2())).unwrap();
        assert!(close(&values(&t), &[&[0.0, -0.5], &[0.0, 0.5]]));
        let plus = t.find(&Character::from_real(&[0.0, 0.5]), 1e-9).unwrap();
        assert!(plus.space.distance(&[c(1.0, 0.0), c(1.0, 0.0)]) < 1e-12);
        let minus = t.find(&Character::from_real(&[0.0, -0.5]), 1e-9).unwrap();
        assert!(minus.space.distance(&[c(1.0, 0.0), c(-1.0, 0.0)]) < 1e-12);
    }

    #[test]
    fn heisenberg_and_diagonal_weights() {
        let t = weight_table(&rep(fixtures::heisenberg_3())).unwrap();
        assert!(close(&values(&t), &[&[0.0, 0.0, 0.0]]));
        assert_eq!(t.entries[0].multiplicity, 3);
        let t = weight_table(&rep(fixtures::diag_1_2())).unwrap();
        assert!(close(&values(&t), &[&[1.0], &[2.0]]));
        assert!(t.entries[0].space.distance(&[c(1.0, 0.0), c(0.0, 0.0)]) < 1e-12);
    }

    #[test]
    fn property_reports() {
        let r = rep(fixtures::heisenberg_3());
        let rep_ = verify_weight_properties(&r, &weight_table(&r).unwrap()).unwrap();
        assert!(rep_.passed() && rep_.checks.len() == 4, "{rep_}");
        let r = rep(fixtures::solvable_2x2());
        let rep_ = verify_weight_properties(&r, &weight_table(&r).unwrap()).unwrap();
        assert!(rep_.passed());
        assert!(matches!(rep_.get(CHECK_DECOMPOSITION).unwrap().outcome, crate::report::Outcome::NotApplicable(_)));
    }

    #[test]
    fn triangular_forms() {
        let r = rep(fixtures::heisenberg_3());
        let t = weight_table(&r).unwrap();
        let b = triangularizing_basis(&r, &t.entries[0]).unwrap();
        assert_eq!(b.cols(), 3);
        let r = rep(fixtures::diag_1_2());
        let t = weight_table(&r).unwrap();
        let b = triangularizing_basis(&r, &t.entries[0]).unwrap();
        assert!((b[(0, 0)].norm() - 1.0).abs() < 1e-12 && b[(1, 0)].norm() < 1e-12);

        let r = rep(fixtures::random_nilpotent(4, 2, 11).unwrap());
        for e in &weight_table(&r).unwrap().entries {
            let b = triangularizing_basis(&r, e).unwrap();
            for (x, a) in r.generators().iter().zip(&e.weight.values) {
                let t = &(&b.adjoint() * &x.shifted(*a)) * &b;
                for i in 0..t.rows() {
                    for j in 0..=i {
                        assert!(t[(i, j)].norm() < 1e-8);
                    }
                }
                // first vector is a common eigenvector
                let v = x.shifted(*a).mul_vec(&b.column(0));
                assert!(v.iter().all(|z| z.norm() < 1e-8));
            }
        }
    }
}
