//! Symbolic Grothendieck rings of `GL(n, F)` and of its inner forms
//! `GL(r, D)`.
//!
//! The building blocks are segments and multisegments ([`segment`],
//! [`multiseg`]) with the order generated by elementary operations
//! ([`order`]). [`ring`] implements the graded Hopf rings `R(F)` and `R(D)`
//! on the standard basis together with the involution, [`decomp`] the change
//! to the irreducible basis, [`weyl`] the shuffle combinatorics behind the
//! geometric lemma, and [`transfer`] the Jacquet-Langlands morphisms.

pub mod context;
pub mod decomp;
pub mod enumerate;
pub mod error;
pub mod fait;
pub mod multiseg;
pub mod order;
pub mod ring;
pub mod segment;
pub mod transfer;
pub mod weyl;

pub use context::{AlgebraContext, CuspidalFamily, Family, Side};
pub use decomp::{
    decompose_standard, express_irreducible, is_irreducible_standard, segment_support_provider,
    DecompositionProvider, SegmentSupportProvider,
};
pub use error::{Error, Result};
pub use multiseg::{ElementaryOp, Multisegment};
pub use order::{down_set, leq, moebius, DownSetPoset, OrderCertificate};
pub use ring::{restrict_esci, Basis, TensorRep, VirtualRep};
pub use segment::{make_segment, Segment};
pub use transfer::TransferContext;
pub use weyl::{
    block_embed, geometric_lemma, shuffle_set, shuffle_set_d, BlockPermutation, LeviComposition,
};
