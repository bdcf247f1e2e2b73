//! Hook lengths and distances of a partition inside a rectangular frame.
//!
//! The hook/distance tableau fills the frame with hook lengths inside the
//! Young diagram and distances outside it; the distance/hook tableau does the
//! reverse. Their entry multisets coincide, and [`verifier`] checks this
//! directly, through the box-by-box induction on the size of the partition,
//! and through exact polynomial identities built from semistandard tableaux
//! and the hook content product.

pub mod error;
pub mod multiset;
pub mod partition;
pub mod qseries;
pub mod rect;
pub mod tableaux;
pub mod verifier;

pub use error::{Error, Result};
pub use multiset::NatMultiset;
pub use partition::{Cell, Frame, FramedPartition, Lemma2Sets, Partition};
pub use qseries::QPoly;
pub use rect::{RectTableau, TableauKind};
pub use tableaux::{enumerate_ssyt, Ssyt};
pub use verifier::{Check, FrameReport, VerifyReport};
