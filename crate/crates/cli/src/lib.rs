//! File formats and command implementations behind the `ncharm` binary.

pub mod app;
pub mod bfile;
pub mod formats;
