//! Exact construction, counting and printable-net generation for hexaflexagons.
//!
//! A hexaflexagon with `n` faces is identified by a cyclic sign sequence of
//! `n` entries in `{+1, -1}`, taken up to cyclic shift, reversal and global
//! negation. This crate provides
//!
//! * [`counting`]: closed-form necklace, bracelet and Lyndon counts and the
//!   number `H(n)` of hexaflexagon classes, in exact arithmetic;
//! * [`sequences`]: the sign-sequence algebra (canonical forms, extension and
//!   contraction, validity) and exhaustive class enumeration;
//! * [`labeling`]: the label sequence of a construction and the top/bottom
//!   face labels of every triangle of the strip;
//! * [`geometry`]: the strip laid out on the triangular lattice and the
//!   self-overlap (printability) test;
//! * [`render`]: SVG nets and CSV count tables;
//! * [`oracle`]: brute-force reference counts used for verification.
//!
//! With the default `parallel` feature the exhaustive scans run on rayon;
//! without it every [`Execution`] falls back to a sequential loop.

pub mod counting;
mod error;
pub mod geometry;
pub mod labeling;
pub mod oracle;
mod par;
pub mod render;
pub mod sequences;

pub use error::{Error, Result};
pub use par::{configure_threads, Execution};

pub use counting::{
    binomial, bracelet_count, hexaflexagon_count, lyndon_count, moebius, necklace_count,
    self_conjugate_count, sum_set, totient, ExactCount,
};
pub use geometry::{is_printable, lay_strip, printable_class_count, LatticeCell, TriangleStrip};
pub use labeling::{build_pattern, strip_labels, PatternPath, StripLabels};
pub use sequences::{
    enumerate_classes, CanonicalSequence, ClassRecord, ExtensionHistory, Sign, SignSequence,
};

/// Face counts from 3 to 26 with `(H(n), H_p(n))`: the number of hexaflexagon
/// classes and the number whose unfolded strip does not overlap itself.
pub const REFERENCE_TABLE: [(usize, u64, u64); 24] = [
    (3, 1, 1),
    (4, 1, 1),
    (5, 1, 1),
    (6, 3, 3),
    (7, 3, 2),
    (8, 7, 5),
    (9, 8, 6),
    (10, 17, 10),
    (11, 21, 11),
    (12, 47, 21),
    (13, 63, 29),
    (14, 132, 58),
    (15, 205, 78),
    (16, 411, 144),
    (17, 685, 224),
    (18, 1353, 421),
    (19, 2385, 648),
    (20, 4643, 1185),
    (21, 8496, 1990),
    (22, 16430, 3668),
    (23, 30735, 6095),
    (24, 59343, 11079),
    (25, 112531, 19098),
    (26, 217245, 34891),
];
