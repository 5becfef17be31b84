//! Command-line harness for `leflab-core`: input files, JSON and CSV
//! reports, resumable censuses and the fixed acceptance suite.

pub mod app;
pub mod census;
pub mod error;
pub mod input;
pub mod report;
pub mod run;
pub mod suite;

pub use error::{CliError, CliResult};

/// Evaluates `$body` with `$f` bound to the field named by a
/// [`FieldSpec`](leflab_core::FieldSpec). Uses `?` on construction errors.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            leflab_core::FieldSpec::PrimeField(p) => {
                let $f = leflab_core::PrimeField::new(p)?;
                $body
            }
            leflab_core::FieldSpec::Rationals => {
                let $f = leflab_core::Rationals;
                $body
            }
        }
    };
}
