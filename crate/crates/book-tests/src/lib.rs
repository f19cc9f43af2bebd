//! Every chapter of the guide is included as a module doc so that
//! `cargo test --doc` runs its listings. A failing doctest names the module,
//! which names the chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}
#[doc = include_str!("../../../book/src/littlewood-richardson.md")]
pub mod littlewood_richardson {}
#[doc = include_str!("../../../book/src/kronecker.md")]
pub mod kronecker {}
#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}
#[doc = include_str!("../../../book/src/hilbert.md")]
pub mod hilbert {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
