//! Ideal theory and z-ideal theory of finite commutative semirings given by
//! Cayley tables.

pub mod claims;
pub mod corpus;
pub mod dot;
pub mod elemset;
pub mod enumerate;
pub mod ideal;
pub mod lattice;
pub mod semiring;
pub mod z;

pub use claims::{
    find_claim, hunt, registry, render_text, select_claims, verify_claim, verify_corpus, ClaimClass,
    ClaimResult, ClaimSpec, HarnessError, Report, Subject, Verdict, VerifyOptions, Witness,
};
pub use corpus::{builtin, default_corpus, CorpusEntry, CorpusError};
pub use dot::to_dot;
pub use elemset::{parse_element_list, ElemSet};
pub use ideal::{IdealError, IdealSet};
pub use lattice::{all_ideals, IdealLattice};
pub use semiring::{
    direct_product, parse_semiring, serialize_semiring, validate, Limits, SemiringTable,
    TableError, ValidationReport,
};
pub use z::ZContext;
