//! Module families over `A_{r,s}(n)` and their exact actions: the
//! polynomial module, Verma-type modules, weight modules with and without
//! breaks, and the universal Whittaker module.

mod action;
mod checks;
mod spec;
mod vector;

pub use action::{act_element, act_generator, act_word};
pub use checks::{
    all_generators, check_module_relations, cyclicity_probe, joint_eigenvalues, supported_points,
    verma_weight_iso_check, CyclicityReport, IsoReport, ModuleRelationReport, ModuleResidual,
};
pub use spec::{Family, ModuleError, ModuleSpec, Sign};
pub use vector::{BasisBox, BasisIndex, ModuleVector};
