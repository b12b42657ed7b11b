//! Descriptors of the module families and their supports.

use thiserror::Error;

use crate::scalars::{ratio_as_signed_power, RationalScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("basis index {0:?} is outside the module's support")]
    UnsupportedIndex(Vec<i64>),
    #[error("basis index {index:?} has length {got}, expected {want}")]
    IndexLength { index: Vec<i64>, got: usize, want: usize },
    #[error("generator index {index} is outside 1..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid module parameters: {0}")]
    InvalidSpec(String),
}

/// A sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_scalar(self) -> RationalScalar {
        match self {
            Sign::Plus => RationalScalar::one(),
            Sign::Minus => RationalScalar::from_int(-1),
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The module families. Every `Vec` has length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Polynomial module on `z(k)`, `k ∈ N^n`.
    Polynomial,
    /// Verma-type module on `v(k)`, `k ∈ N^n`, with the values `zeta_rho`,
    /// `zeta_sigma` of the sign character on `rho_i`, `sigma_i`.
    Verma { lambda: Vec<RationalScalar>, zeta_rho: Vec<Sign>, zeta_sigma: Vec<Sign> },
    /// Weight module on `z(k)`, `k ∈ Z^n`, whose orbit has no breaks.
    WeightNoBreak { mu: Vec<RationalScalar>, nu: Vec<RationalScalar> },
    /// Weight module on `z(k)`, `k` restricted on `J` by `alpha`. Here
    /// `(mu, nu)` are the eigenvalue coordinates of `z(0)` and `alpha[t]`
    /// belongs to `j = breaks[t]`.
    WeightBroken { mu: Vec<RationalScalar>, nu: Vec<RationalScalar>, breaks: Vec<usize>, alpha: Vec<bool> },
    /// Universal Whittaker module on `w(k, l)`, `(k, l) ∈ Z^{2n}`.
    Whittaker { xi: Vec<RationalScalar> },
}

/// A module family of rank `n`. Construct through the checked
/// constructors so the family invariants hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    n: usize,
    family: Family,
}

impl ModuleSpec {
    pub fn polynomial(n: usize) -> Self {
        assert!(n >= 1);
        ModuleSpec { n, family: Family::Polynomial }
    }

    pub fn verma(lambda: Vec<RationalScalar>, zeta_rho: Vec<Sign>, zeta_sigma: Vec<Sign>) -> Result<Self, ModuleError> {
        let n = lambda.len();
        check_rank(n)?;
        if zeta_rho.len() != n || zeta_sigma.len() != n {
            return Err(ModuleError::InvalidSpec(format!("need {n} signs for each of rho and sigma")));
        }
        check_nonzero("lambda", &lambda)?;
        Ok(ModuleSpec { n, family: Family::Verma { lambda, zeta_rho, zeta_sigma } })
    }

    pub fn weight_no_break(mu: Vec<RationalScalar>, nu: Vec<RationalScalar>) -> Result<Self, ModuleError> {
        let n = check_coordinates(&mu, &nu)?;
        for j in 1..=n {
            if break_power(&mu, &nu, j).is_some() {
                return Err(ModuleError::InvalidSpec(format!("the orbit has a break at index {j}")));
            }
        }
        Ok(ModuleSpec { n, family: Family::WeightNoBreak { mu, nu } })
    }

    /// The module on the support `k_j ≤ 0` (`alpha_j = 0`) or `k_j ≥ 0`
    /// (`alpha_j = 1`) for `j ∈ J`. The support boundary must sit exactly on
    /// the break: `nu_j / mu_j = ±(r_j/s_j)^{1 - alpha_j}`. Indices outside
    /// `J` must have no break anywhere in their orbit.
    pub fn weight_broken(
        mu: Vec<RationalScalar>,
        nu: Vec<RationalScalar>,
        breaks: Vec<usize>,
        alpha: Vec<bool>,
    ) -> Result<Self, ModuleError> {
        let n = check_coordinates(&mu, &nu)?;
        if breaks.is_empty() {
            return Err(ModuleError::InvalidSpec("the break set must be nonempty".into()));
        }
        if alpha.len() != breaks.len() {
            return Err(ModuleError::InvalidSpec("alpha must have one entry per break".into()));
        }
        if breaks.windows(2).any(|w| w[0] >= w[1]) || breaks.iter().any(|&j| j == 0 || j > n) {
            return Err(ModuleError::InvalidSpec(format!("breaks must be increasing indices in 1..{n}")));
        }
        for j in 1..=n {
            let p = break_power(&mu, &nu, j);
            match breaks.iter().position(|&b| b == j) {
                Some(t) => {
                    let want = if alpha[t] { 0 } else { 1 };
                    if p != Some(want) {
                        return Err(ModuleError::InvalidSpec(format!(
                            "index {j}: nu/mu must be ±(r{j}/s{j})^{want} for this alpha"
                        )));
                    }
                }
                None => {
                    if p.is_some() {
                        return Err(ModuleError::InvalidSpec(format!("the orbit has a break at index {j} outside J")));
                    }
                }
            }
        }
        Ok(ModuleSpec { n, family: Family::WeightBroken { mu, nu, breaks, alpha } })
    }

    pub fn whittaker(xi: Vec<RationalScalar>) -> Result<Self, ModuleError> {
        let n = xi.len();
        check_rank(n)?;
        check_nonzero("xi", &xi)?;
        Ok(ModuleSpec { n, family: Family::Whittaker { xi } })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Polynomial => "poly",
            Family::Verma { .. } => "verma",
            Family::WeightNoBreak { .. } => "weight",
            Family::WeightBroken { .. } => "weight-broken",
            Family::Whittaker { .. } => "whittaker",
        }
    }

    /// Length of a basis index: `n`, or `2n` for Whittaker modules.
    pub fn index_len(&self) -> usize {
        match self.family {
            Family::Whittaker { .. } => 2 * self.n,
            _ => self.n,
        }
    }

    pub fn is_weight_module(&self) -> bool {
        !matches!(self.family, Family::Whittaker { .. })
    }

    pub fn in_support(&self, k: &[i64]) -> bool {
        if k.len() != self.index_len() {
            return false;
        }
        match &self.family {
            Family::Polynomial | Family::Verma { .. } => k.iter().all(|&c| c >= 0),
            Family::WeightNoBreak { .. } | Family::Whittaker { .. } => true,
            Family::WeightBroken { breaks, alpha, .. } => breaks
                .iter()
                .zip(alpha)
                .all(|(&j, &a)| if a { k[j - 1] >= 0 } else { k[j - 1] <= 0 }),
        }
    }

    pub fn check_index(&self, k: &[i64]) -> Result<(), ModuleError> {
        if k.len() != self.index_len() {
            return Err(ModuleError::IndexLength { index: k.to_vec(), got: k.len(), want: self.index_len() });
        }
        if !self.in_support(k) {
            return Err(ModuleError::UnsupportedIndex(k.to_vec()));
        }
        Ok(())
    }
}

fn check_rank(n: usize) -> Result<(), ModuleError> {
    if n == 0 {
        return Err(ModuleError::InvalidSpec("rank must be positive".into()));
    }
    Ok(())
}

fn check_nonzero(name: &str, v: &[RationalScalar]) -> Result<(), ModuleError> {
    if let Some(i) = v.iter().position(RationalScalar::is_zero) {
        return Err(ModuleError::InvalidSpec(format!("{name}_{} must be nonzero", i + 1)));
    }
    Ok(())
}

fn check_coordinates(mu: &[RationalScalar], nu: &[RationalScalar]) -> Result<usize, ModuleError> {
    let n = mu.len();
    check_rank(n)?;
    if nu.len() != n {
        return Err(ModuleError::InvalidSpec("mu and nu must have the same length".into()));
    }
    check_nonzero("mu", mu)?;
    check_nonzero("nu", nu)?;
    Ok(n)
}

/// The power `p` with `nu_j / mu_j = ±(r_j/s_j)^p`, if any.
fn break_power(mu: &[RationalScalar], nu: &[RationalScalar], j: usize) -> Option<i64> {
    let ratio = nu[j - 1].checked_div(&mu[j - 1]).expect("nonzero coordinates");
    ratio_as_signed_power(&ratio, j).expect("nonzero ratio").map(|(_, p)| p)
}
