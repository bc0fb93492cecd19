//! File formats, exports and the command-line front-end for
//! [`strongrecolor_core`].

pub mod cli;
pub mod export;
pub mod family;
pub mod formats;
pub mod output;

pub use strongrecolor_core as core;
