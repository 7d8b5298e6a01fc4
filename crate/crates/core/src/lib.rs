pub mod arith;
mod consts;
pub mod error;
pub mod primezeta;
mod quad;
pub mod regdet;
pub mod specfun;
pub mod superzeta;
#[cfg(test)]
pub(crate) mod testkit;
pub mod types;

pub use error::{Error, Result};
pub use types::{Complex, EvalResult, Method};
