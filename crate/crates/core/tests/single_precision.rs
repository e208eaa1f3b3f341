use liespectra::fixtures;
use liespectra::koszul::homology;
use liespectra::spectra::{joint_spectrum, verify_main_theorems};
use liespectra::weights::weight_table;
use liespectra::{Character, LieRep};

fn close(got: &[Vec<(f32, f32)>], want: &[[f32; 2]], tol: f32) -> bool {
    got.len() == want.len()
        && got.iter().zip(want).all(|(g, w)| g.iter().zip(w).all(|(a, b)| (a.0 - b).abs() <= tol && a.1.abs() <= tol))
}

fn pairs(set: &liespectra::CharacterSet<f32>) -> Vec<Vec<(f32, f32)>> {
    set.iter().map(|f| f.values.iter().map(|v| (v.re, v.im)).collect()).collect()
}

#[test]
fn solvable_counterexample_in_f32() {
    let rep = LieRep::<f32>::with_default_tolerances(fixtures::solvable_2x2()).unwrap();
    let r = joint_spectrum(&rep).unwrap();
    assert!(close(&pairs(&r.sp), &[[0.0, -1.5], [0.0, 0.5]], 1e-4), "{:?}", pairs(&r.sp));
    let w = weight_table(&rep).unwrap().weights(1e-3);
    assert!(close(&pairs(&w), &[[0.0, -0.5], [0.0, 0.5]], 1e-4), "{:?}", pairs(&w));
    let h = homology(&rep, &Character::from_real(&[0.0, 0.5])).unwrap();
    assert_eq!(h.dims, vec![1, 1, 0]);
}

#[test]
fn heisenberg_in_f32() {
    let rep = LieRep::<f32>::with_default_tolerances(fixtures::heisenberg_3()).unwrap();
    assert!(verify_main_theorems(&rep).unwrap().passed());
}

#[test]
fn diagonal_in_f32() {
    let rep = LieRep::<f32>::with_default_tolerances(fixtures::diag_1_2()).unwrap();
    let r = joint_spectrum(&rep).unwrap();
    assert!(close(&pairs(&r.sp).iter().map(|v| vec![v[0], (0.0, 0.0)]).collect::<Vec<_>>(), &[[1.0, 0.0], [2.0, 0.0]], 1e-4));
}
