use crate::error::{Error, Result};

/// Environment variable that overrides both matrix-size bounds.
pub const MAX_DIM_ENV: &str = "SUPERSCHUR_MAX_DIM";

/// Size guards for the exponential-cost operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest symmetric-group degree for isotypic and ideal computations.
    pub max_degree: usize,
    /// Largest side `(m+n)^d` of an evaluated operator.
    pub max_eval_dim: u128,
    /// Largest `(m+n)^(2d)` for commutant solving.
    pub max_commutant_dim: u128,
    /// Largest truncation degree for the prime-ideal search.
    pub max_classify_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 7,
            max_eval_dim: 4096,
            max_commutant_dim: 6561,
            max_classify_degree: 5,
        }
    }
}

impl Limits {
    /// Defaults, with `SUPERSCHUR_MAX_DIM` applied when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var(MAX_DIM_ENV) {
            let dim: u128 = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{MAX_DIM_ENV}={v:?} is not a positive integer")))?;
            if dim == 0 {
                return Err(Error::Parse(format!("{MAX_DIM_ENV} must be positive")));
            }
            limits.max_eval_dim = dim;
            limits.max_commutant_dim = dim;
        }
        Ok(limits)
    }

    pub fn unbounded() -> Self {
        Limits {
            max_degree: usize::MAX,
            max_eval_dim: u128::MAX,
            max_commutant_dim: u128::MAX,
            max_classify_degree: usize::MAX,
        }
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::bound("degree", d as u128, self.max_degree as u128));
        }
        Ok(())
    }

    pub fn check_eval(&self, base: usize, d: usize) -> Result<()> {
        let side = (base as u128).saturating_pow(d as u32);
        if side > self.max_eval_dim {
            return Err(Error::bound("(m+n)^d", side, self.max_eval_dim));
        }
        Ok(())
    }

    pub fn check_commutant(&self, base: usize, d: usize) -> Result<()> {
        let size = (base as u128).saturating_pow(2 * d as u32);
        if size > self.max_commutant_dim {
            return Err(Error::bound("(m+n)^(2d)", size, self.max_commutant_dim));
        }
        Ok(())
    }
}
