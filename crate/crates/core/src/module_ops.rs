//! Dual and tensor-product modules, and restriction to ideals.
//!
//! The dual module acts on functionals by composition, so its generators are
//! plain transposes. Tensor products use the left-factor-major Kronecker
//! index `(a1, a2) -> a1 * m2 + a2`, with generators `A_i ⊗ I` followed by
//! `I ⊗ B_j`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lie::{bracket, is_nilpotent, jordan_holder_flag, restrict_to_ideal, Character, CharacterSet, LieRep};
use crate::linalg::Matrix;
use crate::report::{Check, Report};
use crate::scalar::Real;
use crate::spectra::{joint_spectrum, SpectrumReport};
use crate::weights::weight_table;

/// A character of `L1 × L2` written as its two factors.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductCharacter<R: Real = f64> {
    pub left: Character<R>,
    pub right: Character<R>,
}

impl<R: Real> ProductCharacter<R> {
    pub fn new(left: Character<R>, right: Character<R>) -> Self {
        Self { left, right }
    }

    /// Values on `A_1 ⊗ I, .., I ⊗ B_1, ..`.
    pub fn concat(&self) -> Character<R> {
        self.left.concat(&self.right)
    }

    /// Splits a character of the product after its first `n1` coordinates.
    pub fn split(f: &Character<R>, n1: usize) -> Result<Self> {
        if n1 > f.dim() {
            return Err(Error::input(format!("cannot split a character of length {} at {n1}", f.dim())));
        }
        Ok(Self { left: Character::new(f.values[..n1].to_vec()), right: Character::new(f.values[n1..].to_vec()) })
    }
}

/// The contragredient module: every generator replaced by its transpose.
pub fn dual_rep<R: Real>(rep: &LieRep<R>) -> Result<LieRep<R>> {
    let gens = rep.generators().iter().map(Matrix::transpose).collect();
    LieRep::new(gens, *rep.tolerances())
}

/// `L1 × L2` acting on `E1 ⊗ E2`, with the tolerances of `rep1`.
pub fn tensor_rep<R: Real>(rep1: &LieRep<R>, rep2: &LieRep<R>) -> Result<LieRep<R>> {
    let (m1, m2) = (rep1.dim_e(), rep2.dim_e());
    let id1 = Matrix::identity(m1);
    let id2 = Matrix::identity(m2);
    let left: Vec<Matrix<R>> = rep1.generators().iter().map(|a| a.kron(&id2)).collect();
    let right: Vec<Matrix<R>> = rep2.generators().iter().map(|b| id1.kron(b)).collect();
    let tol = *rep1.tolerances();
    let scale = rep1.operator_scale().max(rep2.operator_scale()).max(R::one());
    for a in &left {
        for b in &right {
            let r = bracket(a, b)?.frobenius_norm();
            if r > tol.eps_residual * scale * scale {
                return Err(Error::Verification(format!("tensor factors do not commute (residual {:.3e})", r.as_f64())));
            }
        }
    }
    LieRep::new(left.into_iter().chain(right).collect(), tol)
}

/// `{ (α, β) : α ∈ a, β ∈ b }` as characters of the product.
pub fn product_set<R: Real>(a: &CharacterSet<R>, b: &CharacterSet<R>) -> CharacterSet<R> {
    let mut out = CharacterSet::new(a.radius().max(b.radius()));
    for f in a {
        for g in b {
            out.insert(ProductCharacter::new(f.clone(), g.clone()).concat());
        }
    }
    out
}

pub const CHECK_IDEAL_WEIGHTS: &str = "weights of each flag ideal are restricted weights";
pub const CHECK_PROJECTION: &str = "spectra of each flag ideal are projected spectra";
pub const CHECK_DERIVED_IDEALS: &str = "ideals inside [L, L] have the single weight 0";
pub const CHECK_DUAL: &str = "dual module has the same spectra";
pub const CHECK_DUAL_INVOLUTION: &str = "dual of the dual is the original module";
pub const CHECK_TENSOR: &str = "tensor spectra are products of spectra";
pub const CHECK_TENSOR_WEIGHTS: &str = "tensor weight spaces have product dimensions";

/// `Sp`, all `σ_{δ,k}` and all `σ_{π,k}`, in that order.
fn families<R: Real>(r: &SpectrumReport<R>) -> Result<Vec<(String, CharacterSet<R>)>> {
    let mut out = vec![("Sp".to_string(), r.sp.clone())];
    for k in 0..=r.n {
        out.push((format!("delta_{k}"), r.delta(k)?));
        out.push((format!("pi_{k}"), r.pi(k)?));
    }
    Ok(out)
}

/// First family where `a` and `b` disagree, if any.
fn first_mismatch<R: Real>(a: &SpectrumReport<R>, b: &SpectrumReport<R>) -> Result<Option<String>> {
    for ((name, x), (_, y)) in families(a)?.iter().zip(families(b)?.iter()) {
        if !x.same_as(y) {
            return Ok(Some(format!("{name}: {} vs {} characters", x.len(), y.len())));
        }
    }
    Ok(None)
}

/// Findings of the per-factor checks, as `(check, first failure)`.
struct FactorFindings {
    ideal_weights: Option<String>,
    projection: Option<String>,
    derived: Option<String>,
    derived_checked: usize,
    dual: Option<String>,
    involution: Option<String>,
}

fn factor_checks<R: Real>(rep: &LieRep<R>, label: &str) -> Result<FactorFindings> {
    let tol = rep.tolerances();
    let eps = tol.eps_cluster;
    let flag = jordan_holder_flag(rep)?;
    let full = joint_spectrum(rep)?;
    let table = weight_table(rep)?;
    let mut out =
        FactorFindings { ideal_weights: None, projection: None, derived: None, derived_checked: 0, dual: None, involution: None };

    for i in 1..=flag.len() {
        let restr = restrict_to_ideal(rep, &flag, i)?;
        let sub_weights = weight_table(&restr.rep)?.weights(eps);
        let projected = CharacterSet::from_characters(eps, table.entries.iter().map(|e| restr.project(&e.weight)));
        if out.ideal_weights.is_none() && !projected.same_as(&sub_weights) {
            out.ideal_weights = Some(format!(
                "{label}, prefix {i}: {} restricted weights vs {} ideal weights",
                projected.len(),
                sub_weights.len()
            ));
        }
        if out.projection.is_none() {
            let sub = joint_spectrum(&restr.rep)?;
            let proj_sp = full.sp.map(|f| restr.project(f));
            if !proj_sp.same_as(&sub.sp) {
                out.projection = Some(format!("{label}, prefix {i}: Sp"));
            }
            for k in 0..=i {
                if out.projection.is_some() {
                    break;
                }
                let d = full.delta(k)?.map(|f| restr.project(f));
                let p = full.pi(k)?.map(|f| restr.project(f));
                if !d.same_as(&sub.delta(k)?) || !p.same_as(&sub.pi(k)?) {
                    out.projection = Some(format!("{label}, prefix {i}: Slodkowski spectra at k = {k}"));
                }
            }
        }
        if i <= flag.derived_dim {
            out.derived_checked += 1;
            let zero = Character::zero(i);
            if out.derived.is_none() && !(sub_weights.len() == 1 && sub_weights.contains(&zero)) {
                out.derived = Some(format!("{label}, prefix {i}: {} weights", sub_weights.len()));
            }
        }
    }

    let dual = dual_rep(rep)?;
    let dual_report = joint_spectrum(&dual)?;
    out.dual = first_mismatch(&full, &dual_report)?.map(|w| format!("{label}: {w}"));
    let back = dual_rep(&dual)?;
    if back.generators() != rep.generators() {
        out.involution = Some(format!("{label}: generators changed"));
    }
    Ok(out)
}

/// Checks restriction to flag ideals, the dual module and the tensor product
/// for two nilpotent representations. Non-nilpotent input is rejected with
/// [`Error::Unsupported`].
pub fn verify_module_identities<R: Real>(rep1: &LieRep<R>, rep2: &LieRep<R>) -> Result<Report> {
    for (rep, label) in [(rep1, "first"), (rep2, "second")] {
        if !is_nilpotent(rep)? {
            return Err(Error::Unsupported(format!("module checks need nilpotent algebras; the {label} one is not")));
        }
    }
    let a = factor_checks(rep1, "first")?;
    let b = factor_checks(rep2, "second")?;
    let mut report = Report::default();
    let either = |x: &Option<String>, y: &Option<String>| x.clone().or_else(|| y.clone());

    let w = either(&a.ideal_weights, &b.ideal_weights);
    report.push(Check::expect(CHECK_IDEAL_WEIGHTS, w.is_none(), || w.clone().unwrap(), None));
    let w = either(&a.projection, &b.projection);
    report.push(Check::expect(CHECK_PROJECTION, w.is_none(), || w.clone().unwrap(), None));
    if a.derived_checked + b.derived_checked == 0 {
        report.push(Check::skip(CHECK_DERIVED_IDEALS, "not applicable: both algebras are abelian"));
    } else {
        let w = either(&a.derived, &b.derived);
        report.push(Check::expect(CHECK_DERIVED_IDEALS, w.is_none(), || w.clone().unwrap(), None));
    }
    let w = either(&a.dual, &b.dual);
    report.push(Check::expect(CHECK_DUAL, w.is_none(), || w.clone().unwrap(), None));
    let w = either(&a.involution, &b.involution);
    report.push(Check::expect(CHECK_DUAL_INVOLUTION, w.is_none(), || w.clone().unwrap(), None));

    let tensor = tensor_rep(rep1, rep2)?;
    let t = joint_spectrum(&tensor)?;
    let product = product_set(&joint_spectrum(rep1)?.sp, &joint_spectrum(rep2)?.sp);
    let mut bad = None;
    for (name, set) in families(&t)? {
        if !set.same_as(&product) {
            bad = Some(format!("{name}: {} characters vs {} in the product", set.len(), product.len()));
            break;
        }
    }
    report.push(Check::expect(CHECK_TENSOR, bad.is_none(), || bad.clone().unwrap(), None));

    let eps = rep1.tolerances().eps_cluster;
    let (t1, t2, tt) = (weight_table(rep1)?, weight_table(rep2)?, weight_table(&tensor)?);
    let mut bad = None;
    for e1 in &t1.entries {
        for e2 in &t2.entries {
            let f = ProductCharacter::new(e1.weight.clone(), e2.weight.clone()).concat();
            let want = e1.multiplicity * e2.multiplicity;
            let got = tt.find(&f, eps).map_or(0, |e| e.multiplicity);
            if got != want && bad.is_none() {
                bad = Some(format!("dimension {got}, expected {want}"));
            }
        }
    }
    if tt.len() != t1.len() * t2.len() && bad.is_none() {
        bad = Some(format!("{} tensor weights for {} x {} factor weights", tt.len(), t1.len(), t2.len()));
    }
    report.push(Check::expect(CHECK_TENSOR_WEIGHTS, bad.is_none(), || bad.clone().unwrap(), None));
    Ok(report)
}

/// Values of `f` as `(re, im)` pairs, for messages and tests.
pub fn character_pairs<R: Real>(f: &Character<R>) -> Vec<(f64, f64)> {
    f.values.iter().map(|v: &Complex<R>| (v.re.as_f64(), v.im.as_f64())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::c;

    fn rep(g: Vec<Matrix<f64>>) -> LieRep<f64> {
        LieRep::with_default_tolerances(g).unwrap()
    }

    fn sp(r: &LieRep<f64>) -> Vec<Vec<(f64, f64)>> {
        joint_spectrum(r).unwrap().sp.iter().map(character_pairs).collect()
    }

    #[test]
    fn dual_of_diagonal_is_unchanged() {
        let r = rep(fixtures::diag_1_2());
        assert_eq!(dual_rep(&r).unwrap().generators(), r.generators());
    }

    #[test]
    fn dual_heisenberg_is_lower_triangular_and_nilpotent() {
        let d = dual_rep(&rep(fixtures::heisenberg_3())).unwrap();
        for g in d.generators() {
            for i in 0..3 {
                for j in i..3 {
                    assert_eq!(g[(i, j)], c(0.0, 0.0));
                }
            }
        }
        assert!(is_nilpotent(&d).unwrap());
        assert_eq!(sp(&d), vec![vec![(0.0, 0.0); 3]]);
    }

    #[test]
    fn dual_keeps_complex_spectrum() {
        // conjugating would move the spectrum to {1 - i, 2 + i}
        let r = rep(vec![Matrix::diagonal(&[c(1.0, 1.0), c(2.0, -1.0)])]);
        let d = dual_rep(&r).unwrap();
        assert_eq!(sp(&d), sp(&r));
        assert_eq!(sp(&d), vec![vec![(1.0, 1.0)], vec![(2.0, -1.0)]]);
    }

    #[test]
    fn dual_of_solvable_counterexample_negates_sp() {
        // duality of spectra is a nilpotent statement; here Sp flips sign
        let r = rep(fixtures::solvable_2x2());
        let d = dual_rep(&r).unwrap();
        let (a, b) = (joint_spectrum(&r).unwrap(), joint_spectrum(&d).unwrap());
        assert!(!a.sp.same_as(&b.sp));
        let negated = a.sp.map(|f| Character::new(f.values.iter().map(|v| -*v).collect()));
        assert!(negated.same_as(&b.sp));
        assert!(a.weights.same_as(&b.weights));
    }

    #[test]
    fn tensor_of_diagonals() {
        let r = rep(fixtures::diag_1_2());
        let t = tensor_rep(&r, &r).unwrap();
        let d = |v: [f64; 4]| Matrix::diagonal(&v.map(|x| c(x, 0.0)));
        assert_eq!(t.generators(), &[d([1.0, 1.0, 2.0, 2.0]), d([1.0, 2.0, 1.0, 2.0])]);
        let want: Vec<Vec<(f64, f64)>> =
            [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0), (2.0, 2.0)].iter().map(|&(a, b)| vec![(a, 0.0), (b, 0.0)]).collect();
        let got = sp(&t);
        assert_eq!(got.len(), 4);
        for (g, w) in got.iter().zip(&want) {
            for (x, y) in g.iter().zip(w) {
                assert!((x.0 - y.0).abs() < 1e-9 && (x.1 - y.1).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn tensor_heisenberg_diagonal() {
        let t = tensor_rep(&rep(fixtures::heisenberg_3()), &rep(fixtures::diag_1_2())).unwrap();
        assert_eq!((t.dim(), t.dim_e()), (4, 6));
        assert!(is_nilpotent(&t).unwrap());
        let a = &t.generators()[0];
        let b = &t.generators()[3];
        assert_eq!(bracket(a, b).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn product_character_split() {
        let f = Character::<f64>::from_real(&[1.0, 2.0, 3.0]);
        let p = ProductCharacter::split(&f, 1).unwrap();
        assert_eq!(p.left.values, vec![c(1.0, 0.0)]);
        assert_eq!(p.concat(), f);
        assert!(ProductCharacter::split(&f, 4).is_err());
    }

    #[test]
    fn module_identities_on_named_fixtures() {
        let h = rep(fixtures::heisenberg_3());
        let d = rep(fixtures::diag_1_2());
        for (a, b) in [(&h, &d), (&d, &d), (&h, &h)] {
            let r = verify_module_identities(a, b).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = verify_module_identities(&d, &d).unwrap();
        assert!(matches!(r.get(CHECK_DERIVED_IDEALS).unwrap().outcome, crate::report::Outcome::NotApplicable(_)));
    }

    #[test]
    fn heisenberg_center_has_weight_zero() {
        let h = rep(fixtures::heisenberg_3());
        let flag = jordan_holder_flag(&h).unwrap();
        assert_eq!(flag.derived_dim, 1);
        let restr = restrict_to_ideal(&h, &flag, 1).unwrap();
        let w = weight_table(&restr.rep).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.entries[0].weight.values, vec![c(0.0, 0.0)]);
    }

    #[test]
    fn module_identities_reject_solvable_input() {
        let a = rep(fixtures::solvable_2x2());
        assert!(matches!(verify_module_identities(&a, &a), Err(Error::Unsupported(_))));
    }
}
