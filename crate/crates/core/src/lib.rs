//! Exact symbolic computation in the multiparameter Weyl algebra
//! `A_{r,s}(n)`: normal forms, a generalized Weyl algebra oracle, module
//! actions, and the classification of simple weight modules.

pub mod algebra;
pub mod classify;
pub mod gwa;
pub mod modules;
pub mod scalars;
pub mod uqrs;
