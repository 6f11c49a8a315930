//! Core algorithms for indexed edit-distance approximation and
//! insertion-deletion codes.
//!
//! The central object is an [`IndexedString`]: a string over a product
//! alphabet where each symbol is a tuple of small integers. Attaching an
//! index component (built from the codewords of a list-decodable block code)
//! to a payload string makes (1+ε)-approximate edit-distance computation
//! cheap: received blocks are list-decoded to locate themselves, candidate
//! windows contribute identical-symbol edges to a bipartite graph, and the
//! largest non-crossing matching of that graph yields an edit script.
//!
//! On top of the approximation engine sit two code constructions: a uniquely
//! decodable insertion-deletion code (synchronization string + index +
//! errors-and-erasures Reed-Solomon) and a conversion from list-recoverable
//! block codes to list-decodable insertion-deletion codes.
//!
//! Everything here is `no_std` + `alloc`; IO, file formats and the CLI live
//! in the companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alphabet;
pub mod blockcode;
pub mod channel;
pub mod codes;
pub mod editdist;
pub mod editscript;
pub mod error;
pub mod indexing;
pub mod matching;
pub mod rng;
pub mod rs;
pub mod strings;
pub mod sync;

pub use alphabet::AlphabetSpec;
pub use editscript::{EditOp, EditScript};
pub use error::Error;
pub use strings::IndexedString;

/// Float helpers for non-negative finite values (`core` lacks the float
/// rounding intrinsics).
pub mod num {
    /// `floor` for non-negative finite values.
    pub fn floor_pos(x: f64) -> f64 {
        debug_assert!(x >= 0.0 && x.is_finite());
        (x as u64) as f64
    }

    /// `ceil` for non-negative finite values.
    pub fn ceil_pos(x: f64) -> f64 {
        let t = floor_pos(x);
        if t == x {
            t
        } else {
            t + 1.0
        }
    }

    pub fn floor_usize(x: f64) -> usize {
        floor_pos(x) as usize
    }

    pub fn ceil_usize(x: f64) -> usize {
        ceil_pos(x) as usize
    }
}
