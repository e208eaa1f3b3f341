//! Eigenvalues of small dense complex matrices: Householder reduction to upper
//! Hessenberg form followed by single-shift complex QR with Wilkinson shifts.

use num_complex::Complex;

use super::matrix::Matrix;
use super::subspace::generalized_kernel_against;
use crate::error::{Error, Result};
use crate::scalar::{czero, Real};
use crate::tolerance::ToleranceProfile;

const ITERS_PER_EIGENVALUE: usize = 60;

/// All eigenvalues of `m` as a multiset (order unspecified but deterministic).
pub fn eigenvalues<R: Real>(m: &Matrix<R>) -> Result<Vec<Complex<R>>> {
    if !m.is_square() {
        return Err(Error::input(format!("eigenvalues need a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    m.ensure_finite("matrix")?;
    let n = m.rows();
    let mut h = m.clone();
    hessenberg(&mut h);

    let eps = R::epsilon();
    // absolute floor keeps deflation backward stable when the diagonal is tiny
    let floor = eps * h.frobenius_norm();
    let mut out = vec![czero(); n];
    let mut hi = n;
    let mut iter = 0usize;
    let mut total = 0usize;
    while hi > 0 {
        let last = hi - 1;
        // find the start of the unreduced block ending at `last`
        let mut lo = last;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let diag = h[(lo, lo)].norm() + h[(lo - 1, lo - 1)].norm();
            let scale = if diag == R::zero() { R::min_positive_value() } else { diag };
            if sub <= eps * scale || sub <= floor {
                h[(lo, lo - 1)] = czero();
                break;
            }
            lo -= 1;
        }
        if lo == last {
            out[last] = h[(last, last)];
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        total += 1;
        if total > ITERS_PER_EIGENVALUE * n.max(1) {
            return Err(Error::NoConvergence { size: n });
        }
        let shift = if iter % 11 == 10 {
            // exceptional shift to break cycles
            h[(last, last)] + Complex::new(h[(last, last - 1)].norm() * R::lit(0.75), R::zero())
        } else {
            wilkinson_shift(h[(last - 1, last - 1)], h[(last - 1, last)], h[(last, last - 1)], h[(last, last)])
        };
        qr_step(&mut h, lo, last, shift);
    }
    Ok(out)
}

/// Eigenvalue of the trailing 2x2 block `[[a, b], [c, d]]` closest to `d`.
fn wilkinson_shift<R: Real>(a: Complex<R>, b: Complex<R>, c: Complex<R>, d: Complex<R>) -> Complex<R> {
    let two = R::lit(2.0);
    let half_tr = (a + d) / two;
    let det = a * d - b * c;
    let disc = (half_tr * half_tr - det).sqrt();
    let l1 = half_tr + disc;
    let l2 = half_tr - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Givens rotation `G = [[c, s], [-conj(s), c]]` with `G [a; b] = [r; 0]`.
fn givens<R: Real>(a: Complex<R>, b: Complex<R>) -> (R, Complex<R>) {
    let na = a.norm();
    let nb = b.norm();
    if nb == R::zero() {
        return (R::one(), czero());
    }
    if na == R::zero() {
        return (R::zero(), Complex::new(R::one(), R::zero()));
    }
    let r = na.hypot(nb);
    (na / r, (a / na) * b.conj() / r)
}

fn qr_step<R: Real>(h: &mut Matrix<R>, lo: usize, hi: usize, shift: Complex<R>) {
    let n = h.rows();
    for i in lo..=hi {
        h[(i, i)] = h[(i, i)] - shift;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (cs, sn) = givens(h[(k, k)], h[(k + 1, k)]);
        for j in k..n {
            let x = h[(k, j)];
            let y = h[(k + 1, j)];
            h[(k, j)] = x * cs + sn * y;
            h[(k + 1, j)] = -sn.conj() * x + y * cs;
        }
        rots.push((cs, sn));
    }
    for (idx, k) in (lo..hi).enumerate() {
        let (cs, sn) = rots[idx];
        let top = (k + 2).min(hi);
        for i in 0..=top {
            let x = h[(i, k)];
            let y = h[(i, k + 1)];
            h[(i, k)] = x * cs + sn.conj() * y;
            h[(i, k + 1)] = -sn * x + y * cs;
        }
    }
    for i in lo..=hi {
        h[(i, i)] = h[(i, i)] + shift;
    }
}

/// In-place reduction to upper Hessenberg form by Householder similarity.
fn hessenberg<R: Real>(h: &mut Matrix<R>) {
    let n = h.rows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let x: Vec<Complex<R>> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let alpha = x.iter().map(|v| v.norm_sqr()).sum::<R>().sqrt();
        if alpha == R::zero() {
            continue;
        }
        let x0 = x[0];
        let phase = if x0.norm() == R::zero() { Complex::new(R::one(), R::zero()) } else { x0 / x0.norm() };
        let mut v = x;
        v[0] = v[0] + phase * alpha;
        let vnorm2: R = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == R::zero() {
            continue;
        }
        let two = R::lit(2.0);
        // H <- (I - 2 v v^H / |v|^2) H
        for j in 0..n {
            let mut s = czero();
            for (t, vi) in v.iter().enumerate() {
                s = s + vi.conj() * h[(k + 1 + t, j)];
            }
            let s = s * two / vnorm2;
            for (t, vi) in v.iter().enumerate() {
                h[(k + 1 + t, j)] = h[(k + 1 + t, j)] - *vi * s;
            }
        }
        // H <- H (I - 2 v v^H / |v|^2)
        for i in 0..n {
            let mut s = czero();
            for (t, vi) in v.iter().enumerate() {
                s = s + h[(i, k + 1 + t)] * *vi;
            }
            let s = s * two / vnorm2;
            for (t, vi) in v.iter().enumerate() {
                h[(i, k + 1 + t)] = h[(i, k + 1 + t)] - s * vi.conj();
            }
        }
        for i in k + 2..n {
            h[(i, k)] = czero();
        }
    }
}

/// A cluster of computed eigenvalues treated as one eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenCluster<R: Real = f64> {
    /// Arithmetic mean of the members.
    pub value: Complex<R>,
    pub multiplicity: usize,
}

/// Distinct eigenvalues of `m` with algebraic multiplicities, sorted by
/// `(re, im)`.
///
/// A defective eigenvalue of multiplicity `k` comes out of floating-point QR
/// as `k` points spread over a radius of order `|M| u^(1/k)`, while their mean
/// is accurate to order `u`. Groups are proposed by single linkage at the
/// radius `8 |M| (64 n u)^(1/k)` and accepted only when
/// `dim ker (M - mean)^k = k`; otherwise the linkage radius is tightened.
/// Points closer than `eps_cluster` always merge.
pub fn distinct_eigenvalues<R: Real>(m: &Matrix<R>, tol: &ToleranceProfile<R>) -> Result<Vec<EigenCluster<R>>> {
    distinct_eigenvalues_against(m, tol, R::zero())
}

/// [`distinct_eigenvalues`] with radii and ranks measured against at least
/// `scale`, for matrices that are compressions of a larger operator.
pub fn distinct_eigenvalues_against<R: Real>(m: &Matrix<R>, tol: &ToleranceProfile<R>, scale: R) -> Result<Vec<EigenCluster<R>>> {
    let values = eigenvalues(m)?;
    let n = values.len();
    let scale = m.frobenius_norm().max(scale).max(R::min_positive_value());
    let unit = R::epsilon() * R::lit(64.0) * R::from_usize(n.max(1)).unwrap();
    let radius = |k: usize| -> R {
        let defect = R::lit(8.0) * scale * unit.powf(R::one() / R::from_usize(k).unwrap());
        defect.max(tol.eps_cluster)
    };
    let mut out = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    refine(m, &values, &all, &radius, tol, scale, &mut out)?;
    sort_clusters(&mut out);
    Ok(out)
}

fn refine<R: Real>(
    m: &Matrix<R>,
    values: &[Complex<R>],
    members: &[usize],
    radius: &dyn Fn(usize) -> R,
    tol: &ToleranceProfile<R>,
    scale: R,
    out: &mut Vec<EigenCluster<R>>,
) -> Result<()> {
    let size = members.len();
    if size == 1 {
        out.push(EigenCluster { value: values[members[0]], multiplicity: 1 });
        return Ok(());
    }
    for k in (2..=size).rev() {
        let comps = linkage(values, members, R::lit(2.0) * radius(k));
        if comps.len() > 1 {
            for c in comps {
                refine(m, values, &c, radius, tol, scale, out)?;
            }
            return Ok(());
        }
        if k == size && certify(m, values, members, tol, scale)? {
            out.push(EigenCluster { value: mean(values, members), multiplicity: size });
            return Ok(());
        }
    }
    // Chained even at the tightest defect radius: fall back to eps_cluster.
    let comps = linkage(values, members, tol.eps_cluster);
    if comps.len() == 1 {
        out.push(EigenCluster { value: mean(values, members), multiplicity: size });
    } else {
        for c in comps {
            refine(m, values, &c, radius, tol, scale, out)?;
        }
    }
    Ok(())
}

fn mean<R: Real>(values: &[Complex<R>], members: &[usize]) -> Complex<R> {
    let s = members.iter().fold(czero(), |acc, &i| acc + values[i]);
    s / R::from_usize(members.len()).unwrap()
}

fn certify<R: Real>(
    m: &Matrix<R>,
    values: &[Complex<R>],
    members: &[usize],
    tol: &ToleranceProfile<R>,
    scale: R,
) -> Result<bool> {
    let mu = mean(values, members);
    Ok(generalized_kernel_against(m, mu, members.len(), tol, scale)?.dim() == members.len())
}

/// Connected components of `members` under `|a - b| <= threshold`.
fn linkage<R: Real>(values: &[Complex<R>], members: &[usize], threshold: R) -> Vec<Vec<usize>> {
    let mut comp: Vec<usize> = (0..members.len()).collect();
    fn find(comp: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while comp[r] != r {
            r = comp[r];
        }
        comp[i] = r;
        r
    }
    for a in 0..members.len() {
        for b in (a + 1)..members.len() {
            if (values[members[a]] - values[members[b]]).norm() <= threshold {
                let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                if ra != rb {
                    comp[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for (a, &member) in members.iter().enumerate() {
        let r = find(&mut comp, a);
        match roots.iter().position(|&x| x == r) {
            Some(g) => groups[g].push(member),
            None => {
                roots.push(r);
                groups.push(vec![member]);
            }
        }
    }
    groups
}

pub(crate) fn sort_clusters<R: Real>(v: &mut [EigenCluster<R>]) {
    v.sort_by(|a, b| {
        a.value
            .re
            .partial_cmp(&b.value.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.value.im.partial_cmp(&b.value.im).unwrap_or(std::cmp::Ordering::Equal))
    });
}
