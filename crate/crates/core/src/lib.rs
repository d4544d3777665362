//! Codes in Hamming graphs H(m,q) and their neighbour sets.
//!
//! The crate covers vertices and distances ([`hamming`]), the full
//! automorphism group `S_q wr S_m` ([`wreath`]), codes ([`code`]),
//! pre-codewords ([`precodeword`]), setwise stabilizers and the
//! fixed/non-fixing classifier ([`transitivity`]), and the binary family
//! whose neighbour-set stabilizer moves the code ([`family`]).
//!
//! Exhaustive sweeps over the group run on rayon when the default
//! `parallel` feature is enabled; see [`Execution`].

pub mod code;
pub mod config;
pub mod error;
pub mod family;
pub mod hamming;
pub mod lemmas;
pub mod perm;
pub mod precodeword;
pub mod report;
pub mod transitivity;
pub mod wreath;

mod par;
mod search;

pub use code::{find_equivalence, Code, EquivalenceWitness, MinDistance};
pub use config::{Execution, SearchConfig};
pub use error::{Error, Result};
pub use family::{build_family, verify_family, FamilyInstance, FamilyReport};
pub use hamming::{HammingScheme, Triple, Vertex};
pub use precodeword::{PreReport, verify_pre_structure};
pub use report::Clause;
pub use transitivity::{classify_theorem, setwise_stabilizer, ClassificationReport, TheoremCase, Verdict};
pub use wreath::{Automorphism, GeneratorSet};
