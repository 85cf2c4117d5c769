#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod doc;
pub mod error;
pub mod exactla;
pub mod filtration;
pub mod frobenius;
pub mod report;
pub mod repcat;

pub use error::{Error, Result};
