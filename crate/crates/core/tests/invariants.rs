use liespectra::fixtures::{random_nilpotent, sample_params, Lcg};
use liespectra::koszul::{binomial, complex_scale, homology, verify_complex, wedge_basis};
use liespectra::lie::bracket;
use liespectra::linalg::{intersect, kernel_basis, rank, Matrix, Subspace};
use liespectra::module_ops::dual_rep;
use liespectra::spectra::random_character;
use liespectra::{LieRep, ToleranceProfile};
use num_complex::Complex;
use proptest::prelude::*;

fn sample(index: u64) -> LieRep<f64> {
    let (m, n, seed) = sample_params(index);
    LieRep::with_default_tolerances(random_nilpotent(m, n, seed).unwrap()).unwrap()
}

fn matrix(rows: usize, cols: usize, data: &[(f64, f64)]) -> Matrix<f64> {
    Matrix::from_fn(rows, cols, |i, j| {
        let (re, im) = data[i * cols + j];
        Complex::new(re, im)
    })
}

fn entries(len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn boundary_squares_to_zero(index in 0u64..200, seed in any::<u64>()) {
        let rep = sample(index);
        let f = random_character(&rep, &mut Lcg::new(seed), 2.0).unwrap();
        let scale = complex_scale(&rep, &f);
        prop_assert!(verify_complex(&rep, &f).unwrap() <= 1e-8 * scale * scale);
    }

    #[test]
    fn euler_characteristic_vanishes(index in 0u64..200, seed in any::<u64>()) {
        let rep = sample(index);
        let f = random_character(&rep, &mut Lcg::new(seed), 2.0).unwrap();
        prop_assert_eq!(homology(&rep, &f).unwrap().euler_characteristic(), 0);
    }

    #[test]
    fn rank_plus_nullity(rows in 1usize..6, cols in 1usize..6, drop in 0usize..3, data in entries(36)) {
        // force rank deficiency by copying columns
        let mut m = matrix(rows, cols, &data);
        for j in 0..drop.min(cols - 1) {
            let c = m.column(0);
            m.set_column(cols - 1 - j, &c);
        }
        let tol = ToleranceProfile::default();
        let r = rank(&m, &tol).unwrap();
        prop_assert_eq!(r + kernel_basis(&m, &tol).unwrap().dim(), cols);
        prop_assert!(r <= rows.min(cols));
    }

    #[test]
    fn intersection_is_symmetric(shared in 0usize..3, extra in 0usize..3, data in entries(40)) {
        let ambient = 8;
        let col = |k: usize| (0..ambient).map(|i| { let (re, im) = data[(k * ambient + i) % 40]; Complex::new(re + k as f64, im) }).collect::<Vec<_>>();
        let common: Vec<_> = (0..shared).map(col).collect();
        let a_only: Vec<_> = (0..extra).map(|k| col(10 + k)).collect();
        let b_only: Vec<_> = (0..extra).map(|k| col(20 + k)).collect();
        let tol = ToleranceProfile::default();
        let a = Subspace::span_vectors(ambient, &[common.clone(), a_only].concat(), &tol).unwrap();
        let b = Subspace::span_vectors(ambient, &[common, b_only].concat(), &tol).unwrap();
        let ab = intersect(&a, &b, &tol).unwrap();
        let ba = intersect(&b, &a, &tol).unwrap();
        prop_assert_eq!(ab.dim(), ba.dim());
        prop_assert_eq!(ab.dim() + a.sum(&b, &tol).unwrap().dim(), a.dim() + b.dim());
        prop_assert!(ab.is_subspace_of(&ba, &tol));
    }

    #[test]
    fn structure_constants_are_antisymmetric_and_satisfy_jacobi(index in 0u64..200) {
        let rep = sample(index);
        let n = rep.dim();
        let unit = |k: usize| (0..n).map(|i| Complex::new(if i == k { 1.0 } else { 0.0 }, 0.0)).collect::<Vec<_>>();
        for i in 0..n {
            for j in 0..n {
                for h in 0..n {
                    prop_assert!((rep.structure_constant(i, j, h) + rep.structure_constant(j, i, h)).norm() <= 1e-9);
                }
                for k in 0..n {
                    let (a, b, c) = (unit(i), unit(j), unit(k));
                    let t1 = rep.bracket_coords(&a, &rep.bracket_coords(&b, &c));
                    let t2 = rep.bracket_coords(&b, &rep.bracket_coords(&c, &a));
                    let t3 = rep.bracket_coords(&c, &rep.bracket_coords(&a, &b));
                    let s = t1.iter().zip(&t2).zip(&t3).map(|((x, y), z)| (x + y + z).norm()).fold(0.0, f64::max);
                    prop_assert!(s <= 1e-8 * rep.bracket_scale().powi(2));
                }
            }
        }
    }

    #[test]
    fn dual_is_an_involution(index in 0u64..200) {
        let rep = sample(index);
        let back = dual_rep(&dual_rep(&rep).unwrap()).unwrap();
        prop_assert_eq!(back.generators(), rep.generators());
    }

    #[test]
    fn bracket_of_generators_matches_structure(index in 0u64..200) {
        let rep = sample(index);
        for i in 0..rep.dim() {
            for j in 0..rep.dim() {
                let lhs = bracket(rep.generator(i), rep.generator(j)).unwrap();
                let rhs = rep.element(rep.bracket_coeffs(i, j));
                prop_assert!((&lhs - &rhs).frobenius_norm() <= 1e-8 * rep.operator_scale().powi(2));
            }
        }
    }
}

#[test]
fn wedge_index_inverts_enumeration() {
    for n in 0..8 {
        for p in 0..=n {
            let w = wedge_basis(n, p).unwrap();
            assert_eq!(w.len(), binomial(n, p));
            for (k, s) in w.subsets().iter().enumerate() {
                assert_eq!(w.index_of(s), Some(k));
                assert!(s.windows(2).all(|t| t[0] < t[1]));
            }
        }
    }
}
