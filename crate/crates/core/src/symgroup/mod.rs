//! The rational group algebra of S_d: Young symmetrizers, characters,
//! isotypic supports, the degree-shift embedding and loop-parameterized
//! contraction.
//!
//! Products follow morphism composition: `x * y` applies `y` first.

mod algebra;
mod character;
mod perm;
mod poly;

pub use algebra::{
    canonical_columns, canonical_rows, column_antisymmetrizer, primitive_idempotent,
    quasi_idempotent_scalar, row_symmetrizer, young_symmetrizer, ElementJson,
    GroupAlgebraElement, TermJson,
};
pub use character::{mn_character, rim_hook_removals};
pub use perm::{all_perms, block_stabilizer, Perm};
pub use poly::{interpolate, TracePolynomial};
