pub mod congruence;
pub mod construct;
pub mod cosets;
pub mod error;
mod fast;
pub mod fraction;
pub mod geometry;
pub mod invariants;
pub mod matrix;
pub mod membership;
pub mod oracle;
pub mod perm;
pub mod svg;
pub mod symbol;
pub mod word;

pub use congruence::{congruence_hsu, congruence_wohlfahrt, principal_index, Verdict};
pub use construct::{construct_from_oracle, construct_symbol, DEFAULT_MAX_EDGES};
pub use cosets::{coset_reps_from_symbol, perm_rep, CosetReps, CosetTable};
pub use error::{Error, Result};
pub use fraction::ExtFraction;
pub use geometry::{Arc, ArcEnd, ArcKind, PolygonGeometry};
pub use invariants::{CuspClass, GroupInvariants};
pub use matrix::{ElementOrder, ProjectiveMatrix};
pub use membership::{
    contains, format_word, word_to_matrix, MembershipCertificate, Terminal, Word,
};
pub use oracle::{index_by_bfs, BfsCosets, GroupSpec};
pub use perm::{perm_invariants, PermInvariants, Permutation, PermutationPair};
pub use svg::render_svg;
pub use symbol::{FareySymbol, Pairing};
pub use word::{EvLetter, EvWord, LrLetter, LrWord};
