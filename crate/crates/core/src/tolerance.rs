use crate::error::{Error, Result};
use crate::scalar::Real;

/// The single numerical policy shared by every rank, clustering and residual
/// decision in the crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceProfile<R: Real = f64> {
    /// Relative singular-value cutoff: `sigma > eps_rank * sigma_max * max(rows, cols)`.
    pub eps_rank: R,
    /// Radius under which eigenvalues and characters are identified.
    pub eps_cluster: R,
    /// Largest acceptable residual for identities (`d o d = 0`, closure, ...), relative to a scale.
    pub eps_residual: R,
}

impl<R: Real> Default for ToleranceProfile<R> {
    fn default() -> Self {
        Self { eps_rank: R::lit(R::EPS_RANK), eps_cluster: R::lit(R::EPS_CLUSTER), eps_residual: R::lit(R::EPS_RESIDUAL) }
    }
}

impl<R: Real> ToleranceProfile<R> {
    pub fn new(eps_rank: R, eps_cluster: R, eps_residual: R) -> Result<Self> {
        let t = Self { eps_rank, eps_cluster, eps_residual };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |v: R| v.is_finite() && v > R::zero();
        if !(ok(self.eps_rank) && ok(self.eps_cluster) && ok(self.eps_residual)) {
            return Err(Error::input("tolerances must be finite and strictly positive"));
        }
        if self.eps_rank > self.eps_cluster {
            return Err(Error::input("eps_rank must not exceed eps_cluster"));
        }
        Ok(())
    }
}
