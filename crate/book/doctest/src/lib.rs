//! The guide's chapters, one module each, so that `cargo test --doc` runs
//! every listing against the current library. mdbook cannot resolve the
//! `gentle` dependency on its own.

#[doc = include_str!("../../src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../src/algebras.md")]
pub mod algebras {}
#[doc = include_str!("../../src/words.md")]
pub mod words {}
#[doc = include_str!("../../src/complexes.md")]
pub mod complexes {}
#[doc = include_str!("../../src/arcs.md")]
pub mod arcs {}
#[doc = include_str!("../../src/thick.md")]
pub mod thick {}
#[doc = include_str!("../../src/pointed.md")]
pub mod pointed {}
#[doc = include_str!("../../src/command-line.md")]
pub mod command_line {}
