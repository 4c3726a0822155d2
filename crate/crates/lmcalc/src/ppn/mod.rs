//! Polarized proof nets: the translation of typed objects, cut
//! elimination, structural normalisation and isomorphism.

pub mod canon;
pub mod cut;
pub mod dot;
pub mod formula;
pub mod iso;
pub mod net;
pub mod translate;

pub use canon::struct_canon;
pub use cut::{full_nf, mult_nf};
pub use formula::{trans_stack_type, trans_type, Formula};
pub use net::{Kind, Label, Net};
pub use translate::{translate, translate_stack};

/// Equality of nets after structural normalisation.
pub fn net_equiv(a: &Net, b: &Net) -> bool {
    iso::isomorphic(&struct_canon(a), &struct_canon(b))
}
