//! The book's chapters as modules, so `cargo test --doc` runs their code.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/signed-graphs.md")]
pub mod signed_graphs {}
#[doc = include_str!("../../../book/src/frustration.md")]
pub mod frustration {}
#[doc = include_str!("../../../book/src/criticality.md")]
pub mod criticality {}
#[doc = include_str!("../../../book/src/structure.md")]
pub mod structure {}
#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}
#[doc = include_str!("../../../book/src/format-and-cli.md")]
pub mod format_and_cli {}
