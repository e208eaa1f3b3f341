//! Joint spectra by candidate enumeration along a chain of ideals.
//!
//! Let `L' ⊂ L` be an ideal of codimension one and `x_j` a complement. On
//! `E ⊗ ∧^p L'` define
//!
//! ```text
//! T_p e<y_1 ∧ .. ∧ y_p> = (x_j e)<y_1 ∧ .. ∧ y_p> + sum_l (-1)^l e<[x_j, y_l] ∧ .. ŷ_l ..>
//! ```
//!
//! which is `x_j ⊗ 1 + 1 ⊗ Λ^p(D)` with `D = -ad x_j` on `L'` extended to the
//! exterior power as a derivation. For a character `β`, the block of
//! `d_{p+1}(β)` from `E ⊗ ∧^p L' ∧ x_j` to `E ⊗ ∧^p L'` is
//! `(-1)^p (T_p - β(x_j))`. If every `T_p - β(x_j)` is invertible the complex
//! at `β` is exact, so `β(x_j)` must be an eigenvalue of some `T_p`. Those
//! eigenvalues are `μ + (sum of p eigenvalues of D)` with `μ` an eigenvalue of
//! `x_j`; they are assembled from these sums rather than from a
//! possibly ill-conditioned eigenproblem for `T_p`.
//!
//! Applied along a chain `L_1 ⊂ .. ⊂ L_n = L`, this yields a finite superset
//! of `Sp(L, E)`. For nilpotent algebras the chain is a central flag and the
//! projection property lets each level keep only the actual spectrum of
//! `L_i`, which keeps the candidate count at most `m` per level.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fixtures::Lcg;
use crate::koszul::{homology_unchecked, wedge_basis};
use crate::lie::{character_space, ideal_chain, is_nilpotent, Character, CharacterSet, FlagKind, IdealFlag, LieRep};
use crate::linalg::{distinct_eigenvalues, least_squares, Matrix};
use crate::report::{Check, Report};
use crate::scalar::{czero, Real};
use crate::weights::weight_table;

/// Matrix of `D = -ad x_j` on `L' = span(x_0..x_{j-1})`, with `x_j` the last
/// generator. Errors when `L'` is not an ideal.
fn ideal_derivation<R: Real>(rep: &LieRep<R>) -> Result<Matrix<R>> {
    let n = rep.dim();
    let j = n - 1;
    let mut leak = R::zero();
    for l in 0..j {
        leak = leak.max(rep.structure_constant(j, l, j).norm());
    }
    if leak > rep.tolerances().eps_residual * rep.bracket_scale() {
        return Err(Error::input(format!("span of all but the last generator is not an ideal (leak {:.3e})", leak.as_f64())));
    }
    Ok(Matrix::from_fn(j, j, |h, l| -rep.structure_constant(j, l, h)))
}

/// `Λ^p(D)` on the lexicographic basis of `∧^p C^k`.
fn wedge_derivation<R: Real>(d: &Matrix<R>, p: usize) -> Matrix<R> {
    let k = d.rows();
    let w = wedge_basis(k, p).expect("p <= k");
    let mut out = Matrix::zeros(w.len(), w.len());
    for (c, s) in w.subsets().iter().enumerate() {
        for (l, &sl) in s.iter().enumerate() {
            let rest: Vec<usize> = s.iter().copied().filter(|&v| v != sl).collect();
            for h in 0..k {
                let v = d[(h, sl)];
                if v == czero() || rest.contains(&h) {
                    continue;
                }
                let before = rest.iter().filter(|&&r| r < h).count();
                let mut t = rest.clone();
                t.insert(before, h);
                let r = w.index_of(&t).expect("sorted subset");
                // y_h moves from slot l to its sorted slot
                let flips = l + before;
                let v = if flips % 2 == 0 { v } else { -v };
                out.add_at(r, c, v);
            }
        }
    }
    out
}

/// `T_p` for the split `L = span(x_0..x_{n-2}) ⊕ <x_{n-1}>`; shape
/// `m C(n-1, p)` square. `L_p(β) = T_p - β(x_{n-1}) I`.
pub fn extension_operators<R: Real>(rep: &LieRep<R>, p: usize) -> Result<Matrix<R>> {
    let n = rep.dim();
    if p >= n {
        return Err(Error::input(format!("degree {p} outside 0..{n}")));
    }
    let d = ideal_derivation(rep)?;
    let w = wedge_derivation(&d, p);
    let m = rep.dim_e();
    Ok(&w.kron(&Matrix::identity(m)) + &Matrix::identity(w.rows()).kron(rep.generator(n - 1)))
}

/// Eigenvalue list with multiplicities from certified clusters.
fn eigen_multiset<R: Real>(m: &Matrix<R>, rep: &LieRep<R>) -> Result<Vec<Complex<R>>> {
    Ok(distinct_eigenvalues(m, rep.tolerances())?
        .into_iter()
        .flat_map(|c| std::iter::repeat_n(c.value, c.multiplicity))
        .collect())
}

fn push_distinct<R: Real>(vals: &mut Vec<Complex<R>>, v: Complex<R>, eps: R) {
    if !vals.iter().any(|w| (*w - v).norm() <= eps) {
        vals.push(v);
    }
}

/// Distinct eigenvalues of `T_0, .., T_{n-1}` (all `p`).
pub fn pencil_eigenvalues<R: Real>(rep: &LieRep<R>) -> Result<Vec<Complex<R>>> {
    let n = rep.dim();
    let eps = rep.tolerances().eps_cluster;
    let mus: Vec<Complex<R>> =
        distinct_eigenvalues(rep.generator(n - 1), rep.tolerances())?.into_iter().map(|c| c.value).collect();
    let deltas = if n > 1 { eigen_multiset(&ideal_derivation(rep)?, rep)? } else { Vec::new() };
    let mut sums = Vec::new();
    for p in 0..n {
        for s in wedge_basis(n - 1, p)?.subsets() {
            let t = s.iter().fold(czero(), |acc, &i| acc + deltas[i]);
            push_distinct(&mut sums, t, eps);
        }
    }
    let mut out = Vec::new();
    for mu in &mus {
        for s in &sums {
            push_distinct(&mut out, *mu + *s, eps);
        }
    }
    Ok(out)
}

/// A candidate character with its homology.
#[derive(Clone, Debug)]
pub struct CandidateEval<R: Real = f64> {
    pub character: Character<R>,
    pub dims: Vec<usize>,
}

/// Everything computed about the spectra of one representation. Characters
/// are in the coordinates of the input generator basis.
#[derive(Clone, Debug)]
pub struct SpectrumReport<R: Real = f64> {
    pub n: usize,
    pub nilpotent: bool,
    /// `Σ_0, .., Σ_n`.
    pub sigma_p: Vec<CharacterSet<R>>,
    pub sp: CharacterSet<R>,
    /// Final-level candidates with their homology dimensions.
    pub candidates: Vec<CandidateEval<R>>,
    /// The weight set, for comparison.
    pub weights: CharacterSet<R>,
    pub chain: IdealFlag<R>,
    /// Smallest retained relative singular value over all rank decisions.
    pub min_retained: R,
    /// Largest discarded relative singular value over all rank decisions.
    pub max_discarded: R,
}

impl<R: Real> SpectrumReport<R> {
    /// `σ_{δ,k} = ∪_{p <= k} Σ_p`.
    pub fn delta(&self, k: usize) -> Result<CharacterSet<R>> {
        self.check_k(k)?;
        Ok(self.union(0..=k))
    }

    /// `σ_{π,k} = ∪_{p >= k} Σ_p`.
    pub fn pi(&self, k: usize) -> Result<CharacterSet<R>> {
        self.check_k(k)?;
        Ok(self.union(k..=self.n))
    }

    fn union(&self, range: std::ops::RangeInclusive<usize>) -> CharacterSet<R> {
        range.fold(CharacterSet::new(self.sp.radius()), |acc, p| acc.union(&self.sigma_p[p]))
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.n {
            return Err(Error::input(format!("k = {k} outside 0..={}", self.n)));
        }
        Ok(())
    }

    pub fn weights_match(&self) -> bool {
        self.sp.same_as(&self.weights)
    }
}

/// Generators `y_0..y_{i-1}` of the `i`-th chain member, already rebased.
fn level<R: Real>(rebased: &LieRep<R>, i: usize) -> Result<LieRep<R>> {
    if i == rebased.dim() {
        return Ok(rebased.clone());
    }
    LieRep::new(rebased.generators()[..i].to_vec(), *rebased.tolerances())
}

struct Evaluated<R: Real> {
    values: Vec<Complex<R>>,
    dims: Vec<usize>,
    min_retained: R,
    max_discarded: R,
}

fn evaluate_all<R: Real>(rep: &LieRep<R>, cands: &[Vec<Complex<R>>]) -> Result<Vec<Evaluated<R>>> {
    cands
        .par_iter()
        .map(|v| {
            let h = homology_unchecked(rep, v)?;
            Ok(Evaluated { values: v.clone(), dims: h.dims, min_retained: h.min_retained, max_discarded: h.max_discarded })
        })
        .collect()
}

/// Extends each level's characters by the pencil eigenvalues of the next
/// generator, keeping only characters of the bigger algebra.
fn extend<R: Real>(sub: &LieRep<R>, prev: &[Vec<Complex<R>>]) -> Result<Vec<Vec<Complex<R>>>> {
    let lambdas = pencil_eigenvalues(sub)?;
    let probe = |g: &[Complex<R>]| {
        let mut v = g.to_vec();
        v.push(czero());
        Character::new(v)
    };
    let tol = sub.tolerances();
    let mut out = Vec::new();
    for g in prev {
        let f = probe(g);
        if f.derived_defect(sub) > tol.eps_cluster * f.sup_norm().max(R::one()) {
            continue;
        }
        for l in &lambdas {
            let mut v = g.clone();
            v.push(*l);
            out.push(v);
        }
    }
    Ok(out)
}

struct Enumeration<R: Real> {
    chain: IdealFlag<R>,
    rebased: LieRep<R>,
    /// Candidates at the top level, chain coordinates.
    candidates: Vec<Vec<Complex<R>>>,
    evaluated: Option<Vec<Evaluated<R>>>,
    min_retained: R,
    max_discarded: R,
}

fn enumerate<R: Real>(rep: &LieRep<R>, prune: bool) -> Result<Enumeration<R>> {
    let chain = ideal_chain(rep)?;
    let rebased = rep.rebased(&chain.basis)?;
    let n = rep.dim();
    let mut current: Vec<Vec<Complex<R>>> = Vec::new();
    let mut evaluated = None;
    let (mut min_retained, mut max_discarded) = (R::one(), R::zero());
    for i in 1..=n {
        let sub = level(&rebased, i)?;
        current = if i == 1 { pencil_eigenvalues(&sub)?.into_iter().map(|l| vec![l]).collect() } else { extend(&sub, &current)? };
        if prune {
            let ev = evaluate_all(&sub, &current)?;
            for e in &ev {
                min_retained = min_retained.min(e.min_retained);
                max_discarded = max_discarded.max(e.max_discarded);
            }
            if i < n {
                current = ev.into_iter().filter(|e| e.dims.iter().any(|&d| d > 0)).map(|e| e.values).collect();
            } else {
                evaluated = Some(ev);
            }
        }
    }
    Ok(Enumeration { chain, rebased, candidates: current, evaluated, min_retained, max_discarded })
}

/// Maps chain coordinates `g_l = f(b_l)` back to `f` by solving `B^T f = g`.
fn to_original<R: Real>(chain: &IdealFlag<R>, g: &[Complex<R>], eps_rank: R) -> Result<Vec<Complex<R>>> {
    least_squares(&chain.basis.transpose(), g, eps_rank)
}

/// Finite superset of `Sp(L, E)` from the unpruned recursion.
pub fn spectrum_candidates<R: Real>(rep: &LieRep<R>) -> Result<CharacterSet<R>> {
    let e = enumerate(rep, false)?;
    let tol = rep.tolerances();
    let mut out = CharacterSet::new(tol.eps_cluster);
    for g in &e.candidates {
        out.insert(Character::new(to_original(&e.chain, g, tol.eps_rank)?));
    }
    Ok(out)
}

/// `Sp(L, E)` with the degreewise sets `Σ_p`.
///
/// Nilpotent inputs use the pruned recursion and are cross-checked against
/// the weight set; a mismatch or an empty spectrum is an error. Other
/// solvable inputs evaluate the full candidate set.
pub fn joint_spectrum<R: Real>(rep: &LieRep<R>) -> Result<SpectrumReport<R>> {
    let nilpotent = is_nilpotent(rep)?;
    let mut e = enumerate(rep, nilpotent)?;
    let tol = *rep.tolerances();
    let evaluated = match e.evaluated.take() {
        Some(ev) => ev,
        None => {
            let ev = evaluate_all(&e.rebased, &e.candidates)?;
            for x in &ev {
                e.min_retained = e.min_retained.min(x.min_retained);
                e.max_discarded = e.max_discarded.max(x.max_discarded);
            }
            ev
        }
    };
    let n = rep.dim();
    let mut sigma_p = vec![CharacterSet::new(tol.eps_cluster); n + 1];
    let mut sp = CharacterSet::new(tol.eps_cluster);
    let mut candidates = Vec::with_capacity(evaluated.len());
    for ev in evaluated {
        let f = Character::new(to_original(&e.chain, &ev.values, tol.eps_rank)?);
        for (p, &d) in ev.dims.iter().enumerate() {
            if d > 0 {
                sigma_p[p].insert(f.clone());
            }
        }
        if ev.dims.iter().any(|&d| d > 0) {
            sp.insert(f.clone());
        }
        candidates.push(CandidateEval { character: f, dims: ev.dims });
    }
    let eps = tol.eps_cluster;
    candidates.sort_by(|a, b| a.character.canonical_cmp(&b.character, eps));
    let weights = weight_table(rep)?.weights(tol.eps_cluster);

    let report = SpectrumReport {
        n,
        nilpotent,
        sigma_p,
        sp,
        candidates,
        weights,
        chain: e.chain,
        min_retained: e.min_retained,
        max_discarded: e.max_discarded,
    };
    if nilpotent {
        if report.sp.is_empty() {
            return Err(Error::Verification("joint spectrum of a nilpotent algebra came out empty".into()));
        }
        if !report.weights_match() {
            return Err(Error::Verification(format!(
                "joint spectrum ({} characters) differs from the weight set ({} characters); tolerances are too tight or too loose",
                report.sp.len(),
                report.weights.len()
            )));
        }
    }
    Ok(report)
}

/// `(σ_{δ,k}, σ_{π,k})`.
pub fn slodkowski<R: Real>(rep: &LieRep<R>, k: usize) -> Result<(CharacterSet<R>, CharacterSet<R>)> {
    if k > rep.dim() {
        return Err(Error::input(format!("k = {k} outside 0..={}", rep.dim())));
    }
    let r = joint_spectrum(rep)?;
    Ok((r.delta(k)?, r.pi(k)?))
}

/// Random character of `rep` with coefficients of size up to `radius` in an
/// orthonormal basis of the character space.
pub fn random_character<R: Real>(rep: &LieRep<R>, rng: &mut Lcg, radius: f64) -> Result<Character<R>> {
    let space = character_space(rep)?;
    let mut v = vec![czero(); rep.dim()];
    for col in space.vectors() {
        let t: Complex<R> = rng.complex::<R>() * R::lit(radius);
        for (vi, ci) in v.iter_mut().zip(&col) {
            *vi = *vi + *ci * t;
        }
    }
    Ok(Character::new(v))
}

pub const CHECK_SP_WEIGHTS: &str = "Sp equals the set of weights";
pub const CHECK_EXTREMES: &str = "Sigma_0 = Sigma_n = Sp";
pub const CHECK_SLODKOWSKI: &str = "all Slodkowski spectra equal Sp";
pub const CHECK_NONEMPTY: &str = "Sp is finite and nonempty";
pub const CHECK_OFF_SPECTRUM: &str = "homology vanishes off the spectrum";
pub const CHECK_CHAIN: &str = "subnormal chain with ideal prefixes";

/// Samples used by the off-spectrum check.
pub const OFF_SPECTRUM_SAMPLES: usize = 20;

/// Checks the identities that hold for nilpotent algebras. Non-nilpotent
/// input is rejected with [`Error::Unsupported`], whose message records
/// whether `Sp` and the weights differ.
pub fn verify_main_theorems<R: Real>(rep: &LieRep<R>) -> Result<Report> {
    if !is_nilpotent(rep)? {
        let detail = match joint_spectrum(rep) {
            Ok(r) if !r.weights_match() => "; direct check: Sp differs from the weight set".to_string(),
            Ok(_) => "; direct check: Sp agrees with the weight set".to_string(),
            Err(e) => format!("; direct check failed: {e}"),
        };
        return Err(Error::Unsupported(format!("main theorems need a nilpotent algebra{detail}")));
    }
    let mut report = Report::default();
    let r = match joint_spectrum(rep) {
        Ok(r) => r,
        Err(Error::Verification(msg)) => {
            report.push(Check::fail(CHECK_SP_WEIGHTS, msg, None));
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let n = rep.dim();
    report.push(Check::expect(
        CHECK_SP_WEIGHTS,
        r.weights_match(),
        || format!("{} spectral characters vs {} weights", r.sp.len(), r.weights.len()),
        None,
    ));
    report.push(Check::expect(
        CHECK_EXTREMES,
        r.sigma_p[0].same_as(&r.sp) && r.sigma_p[n].same_as(&r.sp),
        || format!("|Sigma_0| = {}, |Sigma_n| = {}, |Sp| = {}", r.sigma_p[0].len(), r.sigma_p[n].len(), r.sp.len()),
        None,
    ));
    let mut bad_k = None;
    for k in 0..=n {
        if !(r.delta(k)?.same_as(&r.sp) && r.pi(k)?.same_as(&r.sp)) {
            bad_k.get_or_insert(k);
        }
    }
    report.push(Check::expect(CHECK_SLODKOWSKI, bad_k.is_none(), || format!("differs at k = {}", bad_k.unwrap()), None));
    report.push(Check::expect(
        CHECK_NONEMPTY,
        !r.sp.is_empty() && r.sp.len() <= rep.dim_e(),
        || format!("|Sp| = {} with dim E = {}", r.sp.len(), rep.dim_e()),
        None,
    ));
    report.push(off_spectrum_check(rep, &r.sp, OFF_SPECTRUM_SAMPLES, 0x5eed)?);
    Ok(report)
}

/// Homology at `samples` random characters at sup-distance at least
/// `max(1e-2, 10 eps_cluster)` from `sp` must vanish.
pub fn off_spectrum_check<R: Real>(rep: &LieRep<R>, sp: &CharacterSet<R>, samples: usize, seed: u64) -> Result<Check> {
    let tol = rep.tolerances();
    let gap = R::lit(1e-2).max(tol.eps_cluster * R::lit(10.0));
    let radius = 1.0 + sp.iter().map(|f| f.sup_norm().as_f64()).fold(0.0, f64::max);
    let mut rng = Lcg::new(seed);
    let mut picked = Vec::with_capacity(samples);
    let mut tries = 0;
    while picked.len() < samples && tries < samples * 50 {
        tries += 1;
        let f = random_character(rep, &mut rng, radius)?;
        if sp.nearest(&f).is_none_or(|(_, d)| d >= gap) {
            picked.push(f);
        }
    }
    let results: Vec<Result<Vec<usize>>> =
        picked.par_iter().map(|f| homology_unchecked(rep, &f.values).map(|h| h.dims)).collect();
    for (f, dims) in picked.iter().zip(results) {
        let dims = dims?;
        if dims.iter().any(|&d| d > 0) {
            return Ok(Check::fail(
                CHECK_OFF_SPECTRUM,
                format!(
                    "nonzero homology {dims:?} at {:?}",
                    f.values.iter().map(|v| (v.re.as_f64(), v.im.as_f64())).collect::<Vec<_>>()
                ),
                None,
            ));
        }
    }
    Ok(Check::expect(CHECK_OFF_SPECTRUM, picked.len() == samples, || format!("only {} admissible samples", picked.len()), None))
}

/// Chain kind used for the recursion on `rep`.
pub fn chain_kind<R: Real>(rep: &LieRep<R>) -> Result<FlagKind> {
    Ok(ideal_chain(rep)?.kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::koszul::boundary_matrix;
    use crate::scalar::c;

    fn rep(g: Vec<Matrix<f64>>) -> LieRep<f64> {
        LieRep::with_default_tolerances(g).unwrap()
    }

    fn reals(s: &CharacterSet<f64>) -> Vec<Vec<f64>> {
        s.iter()
            .map(|f| {
                assert!(f.values.iter().all(|v| v.im.abs() < 1e-9));
                f.values.iter().map(|v| v.re).collect()
            })
            .collect()
    }

    fn close(a: &[Vec<f64>], b: &[&[f64]]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.iter().zip(y.iter()).all(|(u, v)| (u - v).abs() < 1e-9))
    }

    #[test]
    fn counterexample_extension_operators() {
        let r = rep(fixtures::solvable_2x2());
        let t0 = extension_operators(&r, 0).unwrap();
        assert!((&t0 - &fixtures::solvable_x()).max_abs() < 1e-15);
        let t1 = extension_operators(&r, 1).unwrap();
        assert!((&t1 - &fixtures::solvable_x().shifted(c(1.0, 0.0))).max_abs() < 1e-15);
        assert!(extension_operators(&r, 2).is_err());
    }

    #[test]
    fn abelian_extension_is_block_diagonal() {
        let d1 = Matrix::diagonal(&[c(1.0, 0.0), c(2.0, 0.0)]);
        let d2 = Matrix::diagonal(&[c(3.0, 0.0), c(5.0, 0.0)]);
        let r = rep(vec![d1, d2.clone()]);
        let t1 = extension_operators(&r, 1).unwrap();
        assert!((&t1 - &d2).max_abs() < 1e-15);
    }

    #[test]
    fn boundary_block_is_shifted_extension_operator() {
        // d_{p+1}(β) restricted to E⊗∧^pL'∧x_j → E⊗∧^pL' equals (-1)^p (T_p - β_j)
        for g in [fixtures::solvable_2x2::<f64>(), fixtures::heisenberg_3(), fixtures::random_nilpotent(4, 4, 3).unwrap()] {
            let r = rep(g);
            let r = r.rebased(&ideal_chain(&r).unwrap().basis).unwrap();
            let f = random_character(&r, &mut Lcg::new(1), 1.0).unwrap();
            let (n, m) = (r.dim(), r.dim_e());
            for p in 0..n {
                let t = extension_operators(&r, p).unwrap().shifted(f.values[n - 1]);
                let d = boundary_matrix(&r, &f, p + 1).unwrap().matrix;
                let src = wedge_basis(n, p + 1).unwrap();
                let dst = wedge_basis(n, p).unwrap();
                let small = wedge_basis(n - 1, p).unwrap();
                let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
                for (ci, s) in small.subsets().iter().enumerate() {
                    let mut sj = s.clone();
                    sj.push(n - 1);
                    let col = src.index_of(&sj).unwrap();
                    for (ri, s2) in small.subsets().iter().enumerate() {
                        let row = dst.index_of(s2).unwrap();
                        for a in 0..m {
                            for b in 0..m {
                                let want = t[(ri * m + a, ci * m + b)] * sign;
                                assert!((d[(row * m + a, col * m + b)] - want).norm() < 1e-12);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pencil_values_match_direct_eigenvalues() {
        let r = rep(fixtures::solvable_2x2());
        let mut v: Vec<f64> = pencil_eigenvalues(&r).unwrap().iter().map(|z| z.re).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(close(&[v], &[&[-1.5, -0.5, 0.5]]));
    }

    #[test]
    fn candidate_sets() {
        let s = spectrum_candidates(&rep(fixtures::solvable_2x2())).unwrap();
        assert!(close(&reals(&s), &[&[0.0, -1.5], &[0.0, -0.5], &[0.0, 0.5]]));
        let s = spectrum_candidates(&rep(fixtures::diag_1_2())).unwrap();
        assert!(close(&reals(&s), &[&[1.0], &[2.0]]));
        let s = spectrum_candidates(&rep(fixtures::heisenberg_3())).unwrap();
        assert!(close(&reals(&s), &[&[0.0, 0.0, 0.0]]));
    }

    #[test]
    fn spectra_of_fixtures() {
        let r = joint_spectrum(&rep(fixtures::solvable_2x2())).unwrap();
        assert!(close(&reals(&r.sp), &[&[0.0, -1.5], &[0.0, 0.5]]));
        assert!(close(&reals(&r.weights), &[&[0.0, -0.5], &[0.0, 0.5]]));
        assert!(!r.weights_match());
        let (d1, p1) = (r.delta(1).unwrap(), r.pi(1).unwrap());
        assert!(d1.same_as(&r.sp) && p1.same_as(&r.sp));
        assert!(r.delta(2).unwrap().same_as(&r.sp) && r.pi(0).unwrap().same_as(&r.sp));
        assert!(close(&reals(&r.delta(0).unwrap()), &[&[0.0, 0.5]]));
        assert!(close(&reals(&r.pi(2).unwrap()), &[&[0.0, -1.5]]));

        let r = joint_spectrum(&rep(fixtures::heisenberg_3())).unwrap();
        assert!(close(&reals(&r.sp), &[&[0.0, 0.0, 0.0]]));
        let r = joint_spectrum(&rep(fixtures::diag_1_2())).unwrap();
        assert!(close(&reals(&r.sp), &[&[1.0], &[2.0]]));
        assert!(slodkowski(&rep(fixtures::diag_1_2()), 2).is_err());
    }

    #[test]
    fn main_theorem_reports() {
        let rep_ = verify_main_theorems(&rep(fixtures::heisenberg_3())).unwrap();
        assert!(rep_.passed(), "{rep_}");
        assert_eq!(rep_.checks.len(), 5);
        match verify_main_theorems(&rep(fixtures::solvable_2x2())) {
            Err(Error::Unsupported(msg)) => assert!(msg.contains("differs")),
            other => panic!("{other:?}"),
        }
    }
}
