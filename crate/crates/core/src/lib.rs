//! Exact skein calculus on punctured disks: Laurent/rational arithmetic,
//! the quantum trace ring, word straightening in the one-ribbon skein
//! module, plat braids and their relation words, quantum character modules,
//! the boundary quantum torus, recurrence extraction for colored Jones
//! polynomials, and an independent Kauffman bracket oracle.

pub mod bracket;
pub mod braid;
pub mod character;
pub mod error;
pub mod laurent;
pub mod qtorus;
pub mod rational;
pub mod skein;
pub mod trace;

pub use braid::{delta, push_down, relation_words, varpi, BraidWord, FreeWord, PlatMove, Side};
pub use error::{Result, SkeinError};
pub use laurent::LaurentPoly;
pub use rational::RationalFunction;
pub use skein::{mult, right_action_matrix, straighten, trace_q, trace_word, AlphaWord, SkeinElement};
pub use trace::{TraceGen, TraceMonomial, TracePoly, VarStyle};
