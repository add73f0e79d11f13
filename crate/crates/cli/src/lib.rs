//! Front end for the `umbra` command: expression parsing, evaluation,
//! reports, sequence conversion and the identity verifier.

pub mod convert;
pub mod error;
pub mod eval;
pub mod expr;
pub mod report;
pub mod verify;

pub use error::CliError;
pub use eval::evaluate;
pub use expr::{parse, Expr, ParseError};
pub use report::{Format, Report};
