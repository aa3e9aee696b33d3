//! Root systems, Weyl groups and signed generating functions of the odd
//! length statistic.
//!
//! ```
//! use oddlength::{build_root_system, CartanType, WeylElement};
//!
//! let rs = build_root_system("B2".parse::<CartanType>()?)?;
//! let s0 = WeylElement::simple_reflection(&rs, 0)?;
//! assert_eq!(s0.odd_length(&rs)?, 1);
//! # Ok::<(), oddlength::Error>(())
//! ```

pub mod error;
pub mod gf;
pub mod perm;
pub mod poly;
pub mod roots;
pub mod weyl;

pub use error::{Error, Result};
pub use gf::{
    predicted_gf, predicted_multivariate, run_partitioned, signed_gf, verify, GfRequest, GfResult,
    Restriction, RunOptions, StatProfile, TheoremId,
};
pub use perm::{SignedPermutation, StatisticId, WindowGroup};
pub use poly::{Monomial, Poly};
pub use roots::{build_root_system, odd_roots, CartanType, Family, Root, RootSystem, SignedRoot};
pub use weyl::{conjugate_simple_system, enumerate_group, transport, CosetChain, WeylElement};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/generating-functions.md")]
    mod generating_functions {}
    #[doc = include_str!("../../../book/src/partitioned-runs.md")]
    mod partitioned_runs {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
