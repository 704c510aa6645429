//! Exact combinatorics of PBW parametrizations of canonical bases in type `A_n`.
//!
//! Every object in this crate is discrete and every computation is exact:
//! integers, rationals, interval labels, and inequality rows with integer
//! coefficients. There are no floating-point numbers anywhere, so "verified"
//! means *verified*, not "verified up to epsilon".
//!
//! # What lives here
//!
//! A Dynkin quiver `Q` of type `A_n` ([`QuiverA`]) singles out a reduced word
//! `i(Q)` for the longest Weyl group element ([`word_for_quiver`]), and with it
//! a PBW basis of the quantized enveloping algebra whose monomials are indexed
//! by exponent vectors — equivalently by [`Triangle`]s, i.e. functions on the
//! positive roots `[i,j]` of `A_n`.
//!
//! * [`quiver`] — quivers, sinks and reflections, adapted reduced words,
//!   reducedness checking, commutation classes, and the induced total order
//!   on positive roots.
//! * [`ar`] — the Auslander–Reiten quiver of the linearly ordered quiver,
//!   its partition into slices, connected components of quiver restrictions,
//!   and an exact Hom/Ext oracle for modules over the path algebra.
//! * [`linmap`] — the unimodular change of basis `D` (PBW exponents from
//!   string data, built slice by slice) and its exact inverse `E`.
//! * [`crystal`] — combinatorial Kashiwara operators on exponent triangles,
//!   string extraction, and piecewise-linear transition between reduced words.
//! * [`cone`] — integer inequality systems ([`ConeSpec`]): the Lusztig cone
//!   of a reduced word and two cone families read off the AR quiver, plus
//!   exact lattice-point enumeration and symbolic cone transport.
//! * [`verify`] — batch verification harnesses that check the structural
//!   theorems connecting all of the above by exhaustive enumeration.
//! * [`render`] — deterministic text and SVG pictures of triangles, slices,
//!   and cones.
//!
//! # Conventions
//!
//! Vertices of `A_n` are `1..=n`; edge `m` joins vertices `m` and `m+1`.
//! Positive roots are intervals `[i,j]` with `1 <= i <= j <= n`. Words are
//! sequences of letters `1..=n` acting by simple reflections, multiplied
//! left to right. Exponent triangles are indexed by roots in the column
//! order `[1,1], [1,2], [2,2], [1,3], [2,3], [3,3], …`.
//!
//! # Example
//!
//! ```
//! use canbase::{QuiverA, word_for_quiver};
//!
//! let q: QuiverA = "RLRL".parse().unwrap();
//! assert_eq!(
//!     word_for_quiver(&q).letters(),
//!     &[2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 5],
//! );
//! ```

pub mod ar;
pub mod cone;
pub mod crystal;
pub mod linalg;
pub mod linmap;
pub mod quiver;
pub mod render;
pub mod verify;

pub use ar::{
    components_of, is_directed_partition, slices_for, ArQuiver, Component, SlicePartition,
};
pub use cone::{c_pbw_cone, cone_image_under, l_pbw_cone, lusztig_cone, ConeRow, ConeSpec};
pub use crystal::{
    apply_monomial, e_tilde, f_tilde, in_string_cone, pbw_transition, s_inverse, s_map,
    satisfies_string_condition, string_of, StringVector, Triangle,
};
pub use linmap::{d_map, e_map, IntLinearMap};
pub use quiver::{
    commutation_equivalent, is_compatible, k_word, roots_order, word_for_quiver, EdgeDir,
    QuiverA, QuiverParseError, ReducedWord, RootInterval, WordError,
};
pub use render::RenderFormat;
pub use verify::{
    verify_coincide, verify_cone_correspondence, verify_crystal, verify_image, verify_inclusion,
    Failure, VerificationReport,
};
