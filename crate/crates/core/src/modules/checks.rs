//! Finite checks over index windows: module relations, cyclicity and the
//! Verma/weight-module comparison.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::algebra::{presentation_relations, GeneratorSymbol, RelationFamily};
use crate::scalars::RationalScalar;

use super::action::{act_generator, act_word};
use super::spec::{ModuleError, ModuleSpec, Sign};
use super::vector::{BasisBox, BasisIndex, ModuleVector};

#[derive(Clone, Debug)]
pub struct ModuleResidual {
    pub family: RelationFamily,
    pub label: String,
    pub index: BasisIndex,
    pub residual: ModuleVector,
}

#[derive(Clone, Debug)]
pub struct ModuleRelationReport {
    pub module: &'static str,
    pub relations: usize,
    pub vectors: usize,
    pub failures: Vec<ModuleResidual>,
}

impl ModuleRelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every supported basis index in the window.
pub fn supported_points(spec: &ModuleSpec, window: &BasisBox) -> Vec<BasisIndex> {
    window.points().into_iter().filter(|k| spec.in_support(k)).collect()
}

/// Check every defining relation, as an operator identity, on each
/// supported basis vector of the window. Words act factor by factor.
pub fn check_module_relations(spec: &ModuleSpec, window: &BasisBox) -> Result<ModuleRelationReport, ModuleError> {
    if window.dim() != spec.index_len() {
        return Err(ModuleError::InvalidSpec(format!(
            "window has {} coordinates, module indices have {}",
            window.dim(),
            spec.index_len()
        )));
    }
    let relations = presentation_relations(spec.rank());
    let points = supported_points(spec, window);
    let per_point: Result<Vec<Vec<ModuleResidual>>, ModuleError> = points
        .par_iter()
        .map(|k| {
            let v = ModuleVector::basis(k.clone());
            let mut bad = Vec::new();
            for rel in &relations {
                let mut acc = ModuleVector::zero();
                for (c, w) in &rel.terms {
                    acc = acc.add(&act_word(spec, w, &v)?.scale(c));
                }
                if !acc.is_zero() {
                    bad.push(ModuleResidual {
                        family: rel.family,
                        label: rel.label.clone(),
                        index: k.clone(),
                        residual: acc,
                    });
                }
            }
            Ok(bad)
        })
        .collect();
    Ok(ModuleRelationReport {
        module: spec.family_name(),
        relations: relations.len(),
        vectors: points.len(),
        failures: per_point?.into_iter().flatten().collect(),
    })
}

/// The generators `x_i, y_i, rho_i^{±1}, sigma_i^{±1}`.
pub fn all_generators(n: usize) -> Vec<GeneratorSymbol> {
    (1..=n)
        .flat_map(|i| {
            [
                GeneratorSymbol::x(i),
                GeneratorSymbol::y(i),
                GeneratorSymbol::rho(i, 1),
                GeneratorSymbol::rho(i, -1),
                GeneratorSymbol::sigma(i, 1),
                GeneratorSymbol::sigma(i, -1),
            ]
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CyclicityReport {
    pub reached: BTreeSet<BasisIndex>,
    pub target: BTreeSet<BasisIndex>,
}

impl CyclicityReport {
    pub fn complete(&self) -> bool {
        self.reached == self.target
    }
}

/// Basis indices reachable from `start` by repeatedly applying generators,
/// keeping only images inside the window.
pub fn cyclicity_probe(spec: &ModuleSpec, start: &[i64], window: &BasisBox) -> Result<CyclicityReport, ModuleError> {
    spec.check_index(start)?;
    let gens = all_generators(spec.rank());
    let target: BTreeSet<BasisIndex> = supported_points(spec, window).into_iter().collect();
    let mut reached = BTreeSet::new();
    let mut frontier = vec![start.to_vec()];
    if window.contains(start) {
        reached.insert(start.to_vec());
    }
    while let Some(k) = frontier.pop() {
        let v = ModuleVector::basis(k);
        for g in &gens {
            for (t, _) in act_generator(spec, g, &v)?.terms() {
                if window.contains(t) && reached.insert(t.clone()) {
                    frontier.push(t.clone());
                }
            }
        }
    }
    Ok(CyclicityReport { reached, target })
}

#[derive(Clone, Debug)]
pub struct IsoReport {
    pub checked: usize,
    pub mismatches: Vec<(GeneratorSymbol, BasisIndex)>,
}

impl IsoReport {
    pub fn agree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare the Verma module `V(lambda, zeta)` with the broken weight module
/// on `N^n` whose `z(0)` eigenvalues are `mu_i = lambda_i zeta_i`,
/// `nu_i = lambda_i zeta_i'`, under the identity map on indices.
pub fn verma_weight_iso_check(
    lambda: &[RationalScalar],
    zeta_rho: &[Sign],
    zeta_sigma: &[Sign],
    window: &BasisBox,
) -> Result<IsoReport, ModuleError> {
    let n = lambda.len();
    let verma = ModuleSpec::verma(lambda.to_vec(), zeta_rho.to_vec(), zeta_sigma.to_vec())?;
    let mu: Vec<_> = (0..n).map(|i| &lambda[i] * &zeta_rho[i].as_scalar()).collect();
    let nu: Vec<_> = (0..n).map(|i| &lambda[i] * &zeta_sigma[i].as_scalar()).collect();
    let weight = ModuleSpec::weight_broken(mu, nu, (1..=n).collect(), vec![true; n])?;
    let points = supported_points(&verma, window);
    let mut mismatches = Vec::new();
    for k in &points {
        if !weight.in_support(k) {
            mismatches.push((GeneratorSymbol::rho(1, 0), k.clone()));
            continue;
        }
        let v = ModuleVector::basis(k.clone());
        for g in all_generators(n) {
            if act_generator(&verma, &g, &v)? != act_generator(&weight, &g, &v)? {
                mismatches.push((g, k.clone()));
            }
        }
    }
    Ok(IsoReport { checked: points.len(), mismatches })
}

/// The eigenvalues of `rho_1, sigma_1, ..., rho_n, sigma_n` on a basis
/// vector of a weight module.
pub fn joint_eigenvalues(spec: &ModuleSpec, k: &[i64]) -> Result<Option<Vec<RationalScalar>>, ModuleError> {
    if !spec.is_weight_module() {
        return Ok(None);
    }
    let v = ModuleVector::basis(k.to_vec());
    let mut out = Vec::with_capacity(2 * spec.rank());
    for i in 1..=spec.rank() {
        for g in [GeneratorSymbol::rho(i, 1), GeneratorSymbol::sigma(i, 1)] {
            let img = act_generator(spec, &g, &v)?;
            out.push(img.coeff(k));
        }
    }
    Ok(Some(out))
}
