//! The complex `(E ⊗ ∧L, d(f))` and its homology.
//!
//! `E ⊗ ∧^p L` has basis `e_a ⊗ x_S` for `a < m` and `S` a `p`-subset of
//! `0..n`, ordered with the `E` index fastest: basis position `idx(S) * m + a`.
//! For `S = {s_1 < .. < s_p}`,
//!
//! ```text
//! d_p(f) e<x_S> = sum_k (-1)^(k+1) ((x_{s_k} - f(x_{s_k})) e)<S \ s_k>
//!               + sum_{k<l} (-1)^(k+l) e<[x_{s_k}, x_{s_l}] ∧ S \ {s_k, s_l}>
//! ```
//!
//! where operators act on `e` from the left and the bracket is expanded in
//! structure constants. Inserting `x_h` into the front slot and sorting
//! contributes `(-1)^#{r in S \ {s_k, s_l} : r < h}`; terms with `h` already
//! present vanish. `d_0` and `d_{n+1}` are zero.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lie::{check_character, Character, LieRep};
use crate::linalg::{svd, Matrix};
use crate::scalar::{czero, Real};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The `p`-subsets of `0..n` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeBasis {
    n: usize,
    p: usize,
    subsets: Vec<Vec<usize>>,
}

impl WedgeBasis {
    pub fn new(n: usize, p: usize) -> Result<Self> {
        if p > n {
            return Err(Error::input(format!("wedge degree {p} exceeds dimension {n}")));
        }
        let mut subsets = Vec::with_capacity(binomial(n, p));
        let mut cur: Vec<usize> = (0..p).collect();
        loop {
            subsets.push(cur.clone());
            // advance the rightmost position that still has room
            let Some(i) = (0..p).rev().find(|&i| cur[i] < n - p + i) else { break };
            cur[i] += 1;
            for j in (i + 1)..p {
                cur[j] = cur[j - 1] + 1;
            }
        }
        Ok(Self { n, p, subsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// Lexicographic rank of an increasing subset, computed combinatorially.
    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        if subset.len() != self.p || subset.windows(2).any(|w| w[0] >= w[1]) || subset.last().is_some_and(|&s| s >= self.n) {
            return None;
        }
        Some(lex_rank(self.n, subset))
    }
}

pub fn wedge_basis(n: usize, p: usize) -> Result<WedgeBasis> {
    WedgeBasis::new(n, p)
}

/// Number of increasing `p`-subsets of `0..n` preceding `s` lexicographically.
fn lex_rank(n: usize, s: &[usize]) -> usize {
    let p = s.len();
    let mut rank = 0;
    let mut start = 0;
    for (i, &si) in s.iter().enumerate() {
        for t in start..si {
            rank += binomial(n - 1 - t, p - 1 - i);
        }
        start = si + 1;
    }
    rank
}

/// The matrix of `d_p(f)`, shape `m C(n, p-1) x m C(n, p)`.
#[derive(Clone, Debug)]
pub struct BoundaryOperator<R: Real = f64> {
    pub degree: usize,
    pub matrix: Matrix<R>,
}

/// Checked form: rejects functionals that do not vanish on `[L, L]`.
pub fn boundary_matrix<R: Real>(rep: &LieRep<R>, f: &Character<R>, p: usize) -> Result<BoundaryOperator<R>> {
    check_character(rep, f)?;
    if p > rep.dim() + 1 {
        return Err(Error::input(format!("degree {p} outside 0..={}", rep.dim() + 1)));
    }
    Ok(BoundaryOperator { degree: p, matrix: boundary_unchecked(rep, &f.values, p) })
}

pub(crate) fn boundary_unchecked<R: Real>(rep: &LieRep<R>, f: &[Complex<R>], p: usize) -> Matrix<R> {
    let (n, m) = (rep.dim(), rep.dim_e());
    let rows = if p == 0 { 0 } else { m * binomial(n, p - 1) };
    let cols = m * binomial(n, p);
    let mut d = Matrix::zeros(rows, cols);
    if p == 0 || p > n {
        return d;
    }
    let src = WedgeBasis::new(n, p).expect("p <= n");
    let one = Complex::new(R::one(), R::zero());
    for (c, s) in src.subsets().iter().enumerate() {
        for k in 0..p {
            let sign = if k % 2 == 0 { one } else { -one };
            let rest: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v).collect();
            let r = lex_rank(n, &rest);
            let x = rep.generator(s[k]);
            let fk = f[s[k]];
            for a in 0..m {
                for b in 0..m {
                    let mut v = x[(a, b)];
                    if a == b {
                        v = v - fk;
                    }
                    if v != czero() {
                        d.add_at(r * m + a, c * m + b, sign * v);
                    }
                }
            }
        }
        for k in 0..p {
            for l in (k + 1)..p {
                let sign = if (k + l) % 2 == 0 { one } else { -one };
                let rest: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != k && i != l).map(|(_, &v)| v).collect();
                for (h, &ch) in rep.bracket_coeffs(s[k], s[l]).iter().enumerate() {
                    if ch == czero() || rest.contains(&h) {
                        continue;
                    }
                    let before = rest.iter().filter(|&&r| r < h).count();
                    let mut target = rest.clone();
                    target.insert(before, h);
                    let r = lex_rank(n, &target);
                    let coef = if before % 2 == 0 { sign * ch } else { -(sign * ch) };
                    for a in 0..m {
                        d.add_at(r * m + a, c * m + a, coef);
                    }
                }
            }
        }
    }
    d
}

/// Scale for rank and residual decisions on the complex at `f`:
/// `max(1, |x_i|_F, |c_ij|, |f|_inf)`.
pub fn complex_scale<R: Real>(rep: &LieRep<R>, f: &Character<R>) -> R {
    scale_of(rep, &f.values)
}

fn scale_of<R: Real>(rep: &LieRep<R>, f: &[Complex<R>]) -> R {
    let fmax = f.iter().map(|v| v.norm()).fold(R::zero(), R::max);
    rep.operator_scale().max(rep.bracket_scale()).max(fmax)
}

/// `max_p |d_p(f) d_{p+1}(f)|_F`.
pub fn verify_complex<R: Real>(rep: &LieRep<R>, f: &Character<R>) -> Result<R> {
    check_character(rep, f)?;
    let n = rep.dim();
    let mut worst = R::zero();
    let mut prev = boundary_unchecked(rep, &f.values, 1);
    for p in 1..=n {
        let next = boundary_unchecked(rep, &f.values, p + 1);
        if prev.cols() > 0 && next.cols() > 0 {
            worst = worst.max((&prev * &next).frobenius_norm());
        }
        prev = next;
    }
    Ok(worst)
}

/// Homology dimensions with the rank data behind them.
#[derive(Clone, Debug, PartialEq)]
pub struct Homology<R: Real = f64> {
    /// `dim H_p` for `p = 0..=n`.
    pub dims: Vec<usize>,
    /// `rank d_p` for `p = 0..=n+1`.
    pub ranks: Vec<usize>,
    /// Smallest retained singular value relative to the scale.
    pub min_retained: R,
    /// Largest discarded singular value relative to the scale.
    pub max_discarded: R,
}

impl<R: Real> Homology<R> {
    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

pub fn homology<R: Real>(rep: &LieRep<R>, f: &Character<R>) -> Result<Homology<R>> {
    check_character(rep, f)?;
    homology_unchecked(rep, &f.values)
}

pub(crate) fn homology_unchecked<R: Real>(rep: &LieRep<R>, f: &[Complex<R>]) -> Result<Homology<R>> {
    let (n, m) = (rep.dim(), rep.dim_e());
    let tol = rep.tolerances();
    let scale = scale_of(rep, f);
    let mut ranks = vec![0usize; n + 2];
    let mut min_retained = R::infinity();
    let mut max_discarded = R::zero();
    #[allow(clippy::needless_range_loop)]
    for p in 1..=n {
        let d = boundary_unchecked(rep, f, p);
        let dec = svd(&d)?;
        let r = dec.rank_against(tol.eps_rank, scale);
        ranks[p] = r;
        let top = dec.sigma_max().max(scale);
        if r > 0 {
            min_retained = min_retained.min(dec.s[r - 1] / top);
        }
        if let Some(&s) = dec.s.get(r) {
            max_discarded = max_discarded.max(s / top);
        }
    }
    let mut dims = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let total = m * binomial(n, p);
        let used = ranks[p] + ranks[p + 1];
        if used > total {
            return Err(Error::Tolerance {
                degree: p,
                detail: format!(
                    "rank d_{p} + rank d_{} = {used} exceeds chain dimension {total}; smallest kept singular value {:.3e}, largest dropped {:.3e}",
                    p + 1,
                    min_retained.as_f64(),
                    max_discarded.as_f64()
                ),
            });
        }
        dims.push(total - used);
    }
    if min_retained == R::infinity() {
        min_retained = R::one();
    }
    Ok(Homology { dims, ranks, min_retained, max_discarded })
}

/// `dim H_p((E ⊗ ∧L, d(f)))` for `p = 0..=n`.
pub fn homology_dims<R: Real>(rep: &LieRep<R>, f: &Character<R>) -> Result<Vec<usize>> {
    Ok(homology(rep, f)?.dims)
}

/// `f ∈ Σ_p`, i.e. `H_p(f) != 0`.
pub fn sigma_p_membership<R: Real>(rep: &LieRep<R>, f: &Character<R>, p: usize) -> Result<bool> {
    if p > rep.dim() {
        return Err(Error::input(format!("degree {p} outside 0..={}", rep.dim())));
    }
    Ok(homology_dims(rep, f)?[p] > 0)
}
