//! The simple weight modules attached to an orbit.

use crate::modules::{ModuleError, ModuleSpec};
use crate::scalars::RationalScalar;

use super::breaks::BreakReport;

/// One simple weight module of the orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleModuleDescriptor {
    /// Increasing break indices `J`.
    pub breaks: Vec<usize>,
    /// One entry per element of `J`; empty when the orbit has no breaks.
    pub alpha: Vec<bool>,
    /// The module, with `z(0)` sitting at `φ^α` of the designated ideal.
    pub spec: ModuleSpec,
}

impl SimpleModuleDescriptor {
    /// Whether `φ^off` of the designated ideal is a weight of this module.
    /// At a break index the weights are `off_j ≤ 0` for `α_j = 0` and
    /// `off_j ≥ 1` for `α_j = 1`.
    pub fn contains_offset(&self, off: &[i64]) -> bool {
        let mut k = off.to_vec();
        for (&j, &a) in self.breaks.iter().zip(&self.alpha) {
            if a {
                k[j - 1] -= 1;
            }
        }
        self.spec.in_support(&k)
    }

    /// Bitstring of `α`, e.g. `"01"`.
    pub fn alpha_label(&self) -> String {
        self.alpha.iter().map(|&a| if a { '1' } else { '0' }).collect()
    }
}

/// All `α ∈ {0,1}^J`, lexicographic with `0 < 1`.
pub fn alphas(q: usize) -> Vec<Vec<bool>> {
    (0..1usize << q)
        .map(|bits| (0..q).map(|t| bits >> (q - 1 - t) & 1 == 1).collect())
        .collect()
}

/// One module when the orbit has no breaks, otherwise `2^{|J|}` modules, one
/// per class `α`.
pub fn enumerate_simples(br: &BreakReport) -> Result<Vec<SimpleModuleDescriptor>, ModuleError> {
    let d = &br.designated;
    let breaks = br.set();
    if breaks.is_empty() {
        let spec = ModuleSpec::weight_no_break(d.mu().to_vec(), d.nu().to_vec())?;
        return Ok(vec![SimpleModuleDescriptor { breaks, alpha: Vec::new(), spec }]);
    }
    alphas(breaks.len())
        .into_iter()
        .map(|alpha| {
            let mut mu = d.mu().to_vec();
            let mut nu = d.nu().to_vec();
            for (&j, &a) in breaks.iter().zip(&alpha) {
                if a {
                    mu[j - 1] = &mu[j - 1] * &RationalScalar::r(j);
                    nu[j - 1] = &nu[j - 1] * &RationalScalar::s(j);
                }
            }
            let spec = ModuleSpec::weight_broken(mu, nu, breaks.clone(), alpha.clone())?;
            Ok(SimpleModuleDescriptor { breaks: breaks.clone(), alpha, spec })
        })
        .collect()
}
