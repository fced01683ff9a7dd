//! Exact arithmetic in the free group F2, its automorphism group, GL(2,Z)
//! and the holomorph Hol(F2) = F2 ⋊ Aut(F2): normal forms, finite-order
//! classification with conjugator certificates, and bounded enumerative
//! checks of the finite identities these groups satisfy.

pub mod aut;
pub mod claims;
pub mod error;
pub mod expr;
pub mod gl2z;
pub mod hol;
pub mod normal_form;
pub mod report;
pub mod torsion;
pub mod word;

pub use aut::{AutElt, AutGen};
pub use error::{Error, Result};
pub use expr::{parse_word, WordExpr};
pub use gl2z::{
    gl_generator, gl_normal_form, order_of, GlGen, GlNormalForm, Mat2, Order, Syllable,
};
pub use hol::{HolElt, HolGen};
pub use normal_form::{compute_nf, eval_nf, NormalForm};
pub use word::{free_conjugator, reduce, FreeWord, Gen, Letter, Sign};
