//! π-submaximal subgroups of minimal simple groups: a symbolic classification
//! oracle and a brute-force verification engine over permutation groups.

pub mod bsgs;
pub mod classes;
pub mod cli;
pub mod engine;
pub mod error;
pub mod ffield;
pub mod groups;
pub mod oracle;
pub mod perm;
pub mod pi_arith;
pub mod structid;
pub mod subgroup;

pub use error::{Error, Result};
