//! Lipschitz self-maps of finite Coxeter groups, their symmetric-group
//! specializations, and the matching spectral machinery on `SU(n)`.

pub mod coxeter;
pub mod io;
pub mod lipschitz;
pub mod spectral;
pub mod symmetric;

pub use coxeter::{CoxeterError, CoxeterMatrix, CoxeterSystem, ElementId, GroupElement};
