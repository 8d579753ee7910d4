//! Manifold documents, canonical reports and the presentation text format
//! used by the `gmtool` binary.

pub mod document;
pub mod report;
pub mod text;

pub use document::{decode_manifold, manifold_to_value, parse_manifold, print_manifold, InputError};
pub use report::{render, Format};
pub use text::{format_presentation, parse_presentation, TextError};
