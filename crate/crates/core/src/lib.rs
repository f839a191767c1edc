//! Maximum independent sets of the de Bruijn graphs `B(d,3)`.
//!
//! Every maximum independent set of `B(d,3)` is, up to relabelling the
//! alphabet, produced from `{000}` or `{000, 010, 111}` by a unique sequence
//! of four extension operators (two adding one digit, two adding two). This
//! crate implements those operators and their inverses, the symmetric-group
//! action used to identify orbits, exact counting through the resulting
//! recurrences, an independent exhaustive enumerator for small graphs, the
//! bijection with loop-less maximum independent sets, and the comma-free
//! codes of length 3 they yield.

pub mod codes;
pub mod construct;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod group;
pub mod io;
pub mod limits;
pub mod oracle;
pub mod selftest;
pub mod series;
pub mod sets;
pub mod word;

pub use construct::{
    apply_f, apply_f_prime, apply_g, apply_g_prime, apply_op, construct, decompose, decompose_step,
    from_loopless, restrict, to_loopless, Base, ConstructionTrace, DecomposeStep, OpTag,
};
pub use error::{Error, Result, ValidationError};
pub use graph::DeBruijnGraph;
pub use group::{Permutation, StabilizerDescription};
pub use limits::Limits;
pub use sets::{CandidateSet, Kind, MaxIndepSet};
pub use word::Word;
