//! Built-in representations used by tests, examples and the command line.
//!
//! | name                             | algebra                                   |
//! |----------------------------------|-------------------------------------------|
//! | `boasso-2x2`                     | solvable, non-nilpotent, basis `(y, x)`   |
//! | `heisenberg-3`                   | Heisenberg on `C^3`: `E12, E23, E13`      |
//! | `diag-1-2`                       | the single operator `diag(1, 2)`          |
//! | `random-nilpotent-M-N-SEED`      | seeded nilpotent algebra, `dim E = M`, `dim L = N` |
//!
//! # Random nilpotent fixtures
//!
//! Draws come from a 64-bit linear congruential generator
//! `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`,
//! starting from `state = SEED`. Each draw advances the state once and yields
//! `(state >> 11) / 2^53` in `[0, 1)`.
//!
//! An algebra type is chosen from `N` (abelian; Heisenberg for `N = 3`;
//! Heisenberg plus a central element or the 4-dimensional filiform algebra for
//! `N = 4`). `E` is split into blocks. One block may carry the standard
//! matrix realization of the type; every other block maps the generators
//! outside `[L, L]` to random polynomials in a nilpotent Jordan shift and the
//! derived generators to zero. Each block adds a scalar character on the grid
//! `{-1, -1/2, 0, 1/2, 1}` that vanishes on `[L, L]`. The block-diagonal result
//! is conjugated by a random unitary and the generator basis is mixed by a
//! unipotent-like matrix with off-diagonal entries in `{-1/4, 0, 1/4}`, which
//! keeps character values on the lattice `(1/8) Z`. Dependent draws are
//! discarded.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lie::{is_nilpotent, LieRep};
use crate::linalg::{norm, Matrix};
use crate::scalar::{czero, Real};
use crate::tolerance::ToleranceProfile;

pub const SOLVABLE_2X2: &str = "boasso-2x2";
pub const HEISENBERG_3: &str = "heisenberg-3";
pub const DIAG_1_2: &str = "diag-1-2";
pub const RANDOM_NILPOTENT_PREFIX: &str = "random-nilpotent-";

const MAX_ATTEMPTS: usize = 64;

fn real<R: Real>(rows: &[&[f64]]) -> Matrix<R> {
    Matrix::from_fn(rows.len(), rows[0].len(), |i, j| Complex::new(R::lit(rows[i][j]), R::zero()))
}

/// `y = [[1, 1], [-1, -1]]`.
pub fn solvable_y<R: Real>() -> Matrix<R> {
    real(&[&[1.0, 1.0], &[-1.0, -1.0]])
}

/// `x = [[0, 1/2], [1/2, 0]]`.
pub fn solvable_x<R: Real>() -> Matrix<R> {
    real(&[&[0.0, 0.5], &[0.5, 0.0]])
}

/// Solvable two-dimensional algebra with `bracket(x, y) = y`, basis `(y, x)`.
pub fn solvable_2x2<R: Real>() -> Vec<Matrix<R>> {
    vec![solvable_y(), solvable_x()]
}

fn unit_matrix<R: Real>(m: usize, i: usize, j: usize) -> Matrix<R> {
    let mut data = vec![czero(); m * m];
    data[i * m + j] = Complex::new(R::one(), R::zero());
    Matrix::from_vec(m, m, data).expect("square")
}

pub fn heisenberg_3<R: Real>() -> Vec<Matrix<R>> {
    vec![unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)]
}

pub fn diag_1_2<R: Real>() -> Vec<Matrix<R>> {
    vec![real(&[&[1.0, 0.0], &[0.0, 2.0]])]
}

/// The generator described in the module docs.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + ((self.next_f64() * (hi - lo + 1) as f64) as usize).min(hi - lo)
    }

    pub fn complex<R: Real>(&mut self) -> Complex<R> {
        let re = self.uniform(-1.0, 1.0);
        let im = self.uniform(-1.0, 1.0);
        Complex::new(R::lit(re), R::lit(im))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Template {
    Abelian,
    Heisenberg,
    HeisenbergCentral,
    Filiform,
}

impl Template {
    fn derived(self) -> &'static [usize] {
        match self {
            Template::Abelian => &[],
            Template::Heisenberg | Template::HeisenbergCentral => &[2],
            Template::Filiform => &[2, 3],
        }
    }

    /// Standard realization, block size and generator matrices.
    fn standard<R: Real>(self) -> Option<Vec<Matrix<R>>> {
        match self {
            Template::Abelian => None,
            Template::Heisenberg => Some(heisenberg_3()),
            Template::HeisenbergCentral => {
                let mut g = heisenberg_3();
                g.push(Matrix::zeros(3, 3));
                Some(g)
            }
            Template::Filiform => {
                let e = |i, j| unit_matrix::<R>(4, i, j);
                Some(vec![&e(0, 1) + &e(2, 3), e(1, 2), &e(0, 2) - &e(1, 3), e(0, 3)])
            }
        }
    }
}

fn choose_template(n: usize, m: usize, rng: &mut Lcg) -> Template {
    let r = rng.next_f64();
    match n {
        3 if m >= 3 && r < 0.7 => Template::Heisenberg,
        4 if m >= 4 && r < 0.4 => Template::Filiform,
        4 if m >= 3 && r < 0.75 => Template::HeisenbergCentral,
        _ => Template::Abelian,
    }
}

fn shift<R: Real>(s: usize) -> Matrix<R> {
    Matrix::from_fn(s, s, |i, j| if j == i + 1 { Complex::new(R::one(), R::zero()) } else { czero() })
}

fn random_poly<R: Real>(s: usize, rng: &mut Lcg) -> Matrix<R> {
    let j = shift::<R>(s);
    let mut acc = Matrix::zeros(s, s);
    let mut power = Matrix::identity(s);
    for _ in 1..s {
        power = &power * &j;
        let a = rng.uniform(-1.0, 1.0);
        acc = &acc + &power.scale(Complex::new(R::lit(a), R::zero()));
    }
    acc
}

fn grid_value<R: Real>(rng: &mut Lcg) -> Complex<R> {
    Complex::new(R::lit(rng.range(0, 4) as f64 * 0.5 - 1.0), R::zero())
}

fn random_unitary<R: Real>(m: usize, rng: &mut Lcg) -> Matrix<R> {
    let mut cols: Vec<Vec<Complex<R>>> = Vec::with_capacity(m);
    while cols.len() < m {
        let mut v: Vec<Complex<R>> = (0..m).map(|_| rng.complex()).collect();
        for q in &cols {
            let d = crate::linalg::dot(q, &v);
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi = *vi - *qi * d;
            }
        }
        let nv = norm(&v);
        if nv > R::lit(0.1) {
            cols.push(v.into_iter().map(|x| x / nv).collect());
        }
    }
    Matrix::from_columns(m, &cols)
}

fn draw<R: Real>(m: usize, n: usize, rng: &mut Lcg) -> Vec<Matrix<R>> {
    let t = choose_template(n, m, rng);
    let derived = t.derived();
    let mut blocks: Vec<Vec<Matrix<R>>> = Vec::new();
    let mut left = m;
    if let Some(std) = t.standard::<R>() {
        left -= std[0].rows();
        blocks.push(std);
    }
    while left > 0 {
        let s = rng.range(1, left.min(3));
        left -= s;
        blocks.push((0..n).map(|i| if derived.contains(&i) { Matrix::zeros(s, s) } else { random_poly(s, rng) }).collect());
    }
    for block in &mut blocks {
        for (i, g) in block.iter_mut().enumerate() {
            if !derived.contains(&i) {
                *g = g.shifted(-grid_value::<R>(rng));
            }
        }
    }
    let u = random_unitary::<R>(m, rng);
    let ua = u.adjoint();
    let gens: Vec<Matrix<R>> = (0..n)
        .map(|i| {
            let parts: Vec<_> = blocks.iter().map(|b| b[i].clone()).collect();
            &(&u * &Matrix::block_diagonal(&parts)) * &ua
        })
        .collect();
    // y_l = x_l + sum_{k != l} g_kl x_k with g_kl in {-1/4, 0, 1/4}, so that
    // character values stay on the lattice (1/8) Z and distinct eigenvalues
    // stay well apart
    let g = Matrix::<R>::from_fn(n, n, |k, l| {
        if k == l {
            Complex::new(R::one(), R::zero())
        } else {
            Complex::new(R::lit(rng.range(0, 2) as f64 * 0.25 - 0.25), R::zero())
        }
    });
    (0..n).map(|l| Matrix::combination(&g.column(l), &gens)).collect()
}

/// Seeded random nilpotent algebra with `dim E = m` and `dim L = n`.
pub fn random_nilpotent<R: Real>(m: usize, n: usize, seed: u64) -> Result<Vec<Matrix<R>>> {
    if n == 0 || n > 4 || n > m {
        return Err(Error::input(format!("random nilpotent fixtures need 1 <= n <= min(4, m), got m = {m}, n = {n}")));
    }
    let mut rng = Lcg::new(seed);
    for _ in 0..MAX_ATTEMPTS {
        let gens = draw::<R>(m, n, &mut rng);
        if let Ok(rep) = LieRep::new(gens.clone(), ToleranceProfile::default()) {
            if is_nilpotent(&rep).unwrap_or(false) && well_separated(&rep) {
                return Ok(gens);
            }
        }
    }
    Err(Error::Tolerance { degree: 0, detail: format!("no admissible draw for m = {m}, n = {n}, seed = {seed}") })
}

/// Rejects nearly dependent draws so that rank decisions stay unambiguous.
fn well_separated<R: Real>(rep: &LieRep<R>) -> bool {
    let m = rep.dim_e();
    let coords = Matrix::from_columns(m * m, &rep.generators().iter().map(Matrix::to_vec).collect::<Vec<_>>());
    match crate::linalg::svd(&coords) {
        Ok(d) => d.s.last().copied().unwrap_or_else(R::zero) > R::lit(1e-2) * d.sigma_max(),
        Err(_) => false,
    }
}

/// Resolves a fixture name to its generator matrices.
pub fn by_name<R: Real>(name: &str) -> Result<Vec<Matrix<R>>> {
    match name {
        SOLVABLE_2X2 => Ok(solvable_2x2()),
        HEISENBERG_3 => Ok(heisenberg_3()),
        DIAG_1_2 => Ok(diag_1_2()),
        _ => {
            let rest =
                name.strip_prefix(RANDOM_NILPOTENT_PREFIX).ok_or_else(|| Error::input(format!("unknown fixture {name:?}")))?;
            let parts: Vec<&str> = rest.split('-').collect();
            let nums: Option<Vec<u64>> = parts.iter().map(|p| p.parse().ok()).collect();
            match nums.as_deref() {
                Some(&[m, n, seed]) => random_nilpotent(m as usize, n as usize, seed),
                _ => Err(Error::input(format!("fixture {name:?} must look like random-nilpotent-M-N-SEED"))),
            }
        }
    }
}

/// Parameters `(m, n, seed)` of the `index`-th sample of the standard random
/// suite: `n` cycles through `1..=4`, `m` is drawn from `max(n, 2)..=6`.
pub fn sample_params(index: u64) -> (usize, usize, u64) {
    let n = 1 + (index % 4) as usize;
    let mut rng = Lcg::new(index.wrapping_mul(0x9e3779b97f4a7c15));
    let m = rng.range(n.max(2), 6);
    (m, n, 1000 + index)
}

pub fn random_nilpotent_name(m: usize, n: usize, seed: u64) -> String {
    format!("{RANDOM_NILPOTENT_PREFIX}{m}-{n}-{seed}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcg_first_draws() {
        let mut r = Lcg::new(0);
        assert_eq!(r.next_u64(), 1442695040888963407);
        let mut r = Lcg::new(0);
        let x = r.next_f64();
        assert_eq!(x, (1442695040888963407u64 >> 11) as f64 / 9007199254740992.0);
    }

    #[test]
    fn random_fixtures_are_nilpotent_and_reproducible() {
        for seed in 0..20 {
            for n in 1..=4 {
                for m in n.max(2)..=6 {
                    let g = random_nilpotent::<f64>(m, n, seed).unwrap();
                    let h = random_nilpotent::<f64>(m, n, seed).unwrap();
                    assert_eq!(g, h);
                    let rep = LieRep::with_default_tolerances(g).unwrap();
                    assert!(is_nilpotent(&rep).unwrap(), "m={m} n={n} seed={seed}");
                }
            }
        }
    }

    #[test]
    fn names_resolve() {
        assert_eq!(by_name::<f64>("boasso-2x2").unwrap().len(), 2);
        assert_eq!(by_name::<f64>("random-nilpotent-5-3-7").unwrap().len(), 3);
        assert!(by_name::<f64>("nope").is_err());
        assert!(by_name::<f64>("random-nilpotent-5-x-7").is_err());
    }
}
