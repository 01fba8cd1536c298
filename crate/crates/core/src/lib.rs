//! Exact combinatorics of extended affine Weyl groups of split reductive
//! groups: Iwahori–Matsumoto length, Bruhat order, μ-admissible sets and their
//! parahoric images, σ-straight elements with their Newton points, the set
//! `B(G, μ)`, Stembridge chains, and the `GL_n` permissible-set comparison.

pub mod admissible;
pub mod affine_weyl;
pub mod cli;
pub mod config;
pub mod error;
pub mod fin_ab;
pub mod finite_weyl;
pub mod gln_perm;
pub mod lattice;
pub mod notation;
pub mod oracle;
pub mod root_datum;
pub mod sigma;
pub mod stembridge;
pub mod straight;
pub mod suite;

pub use admissible::{AdmissibleSet, KrPoset};
pub use affine_weyl::{AffineWeylGroup, Element, ParahoricLevel};
pub use error::{Error, Result};
pub use fin_ab::FinAbGroup;
pub use root_datum::{Cocharacter, Dominance, GroupSpec, RationalCocharacter, RootDatum};
pub use sigma::SigmaAction;
