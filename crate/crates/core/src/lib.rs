//! Exact Krull-Schmidt decomposition of finite-dimensional modules over
//! finite-dimensional algebras over prime fields.

pub mod algebra;
pub mod decompose;
pub mod error;
pub mod exactlin;
pub mod gallery;
pub mod module;
pub mod par;
pub mod projcover;
pub mod seed;

pub use error::{Error, Result};
