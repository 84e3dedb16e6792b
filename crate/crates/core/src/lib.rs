//! Non-crossing embeddings of bicolored graphs on double-chain point sets.
//!
//! A double-chain is a convex chain `c1` above a concave chain `c2` such
//! that every point of either chain lies strictly on one side of each line
//! through two points of the other. This crate builds
//!
//! * non-crossing Hamiltonian alternating paths for equitable colorings
//!   ([`nhap::embed_nhap`], linear time),
//! * embeddings of short-spined caterpillars and of star forests on
//!   balanced double-chains ([`trees`]),
//!
//! and ships exact validators ([`certify`]) and an exhaustive search
//! ([`oracle`]) for cross-checking on small inputs.
//!
//! All geometry uses exact integer predicates. The crate is `no_std` with
//! `alloc`; the default `std` feature only adds wall-clock search budgets.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod certify;
pub mod chains;
pub mod error;
pub mod geometry;
pub mod hedgehog;
pub mod nhap;
pub mod oracle;
pub mod trees;

pub use chains::{Color, Coloring, DoubleChain, PointRef};
pub use error::{EmbedError, GraphError};
pub use geometry::Point;
