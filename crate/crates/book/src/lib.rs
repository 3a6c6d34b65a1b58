//! Compiles every Rust listing in `book/src` as a doc-test.
//!
//! mdbook cannot link listings against workspace crates, so each chapter is
//! included here as a module doc and checked by `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}
#[doc = include_str!("../../../book/src/pc_groups.md")]
pub mod pc_groups {}
#[doc = include_str!("../../../book/src/group_algebra.md")]
pub mod group_algebra {}
#[doc = include_str!("../../../book/src/jennings_series.md")]
pub mod jennings_series {}
#[doc = include_str!("../../../book/src/lie_structure.md")]
pub mod lie_structure {}
#[doc = include_str!("../../../book/src/automorphisms.md")]
pub mod automorphisms {}
#[doc = include_str!("../../../book/src/truncated.md")]
pub mod truncated {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
