use liespectra::fixtures::{random_nilpotent, sample_params, Lcg};
use liespectra::koszul::homology;
use liespectra::lie::jordan_holder_flag;
use liespectra::module_ops::verify_module_identities;
use liespectra::spectra::{joint_spectrum, random_character, spectrum_candidates, verify_main_theorems};
use liespectra::LieRep;

fn sample(index: u64) -> LieRep<f64> {
    let (m, n, seed) = sample_params(index);
    LieRep::with_default_tolerances(random_nilpotent(m, n, seed).unwrap()).unwrap()
}

#[test]
fn main_identities_on_random_samples() {
    for i in 100..140 {
        let r = verify_main_theorems(&sample(i)).unwrap();
        assert!(r.passed(), "sample {i}:\n{r}");
    }
}

#[test]
fn module_identities_on_random_pairs() {
    let mut checked = 0;
    for i in 0..40 {
        let (a, b) = (sample(2 * i), sample(2 * i + 1));
        if a.dim_e() * b.dim_e() > 12 || a.dim() + b.dim() > 5 {
            continue;
        }
        let r = verify_module_identities(&a, &b).unwrap();
        assert!(r.passed(), "pair {i}:\n{r}");
        checked += 1;
    }
    assert!(checked >= 5, "only {checked} pairs small enough");
}

#[test]
fn flag_has_full_length_and_derived_prefix() {
    for i in 0..40 {
        let rep = sample(i);
        let flag = jordan_holder_flag(&rep).unwrap();
        assert_eq!(flag.len(), rep.dim());
        assert_eq!(flag.derived_dim, rep.derived_subalgebra().unwrap().dim());
    }
}

#[test]
fn homology_vanishes_at_random_non_candidates() {
    let mut rng = Lcg::new(77);
    for i in 0..50 {
        let rep = sample(i);
        let sp = joint_spectrum(&rep).unwrap().sp;
        let cands = spectrum_candidates(&rep).unwrap();
        let f = random_character(&rep, &mut rng, 3.0).unwrap();
        if cands.nearest(&f).is_some_and(|(_, d)| d < 1e-2) {
            continue;
        }
        assert!(sp.nearest(&f).is_none_or(|(_, d)| d >= 1e-2));
        let h = homology(&rep, &f).unwrap();
        assert!(h.is_acyclic(), "sample {i}: {:?}", h.dims);
    }
}

#[test]
fn fixtures_are_reproducible() {
    for i in 0..10 {
        let (m, n, seed) = sample_params(i);
        assert_eq!(random_nilpotent::<f64>(m, n, seed).unwrap(), random_nilpotent::<f64>(m, n, seed).unwrap());
    }
}
