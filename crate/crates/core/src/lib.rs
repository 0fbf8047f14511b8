//! Exact verification engine for rationality proofs of twisted octahedral
//! function fields.

pub mod exactfield;
pub mod multipoly;
pub mod ratfunc;
pub mod grouprep;
pub mod action;
pub mod exprparse;
pub mod prover;
