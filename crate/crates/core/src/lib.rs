//! Homomorphism submodule graphs of finite modules.
//!
//! For a finite module M, the graph has one vertex per proper submodule and
//! an edge between distinct N₁, N₂ whenever Hom(N₁, M/N₂) or Hom(N₂, M/N₁)
//! is nonzero. This crate enumerates submodule lattices exactly, computes
//! Hom groups by Smith normal form (with a brute-force oracle beside it),
//! builds and analyzes the graphs, and checks a registry of structural
//! claims about them on families of small modules.

pub mod caps;
pub mod claims;
pub mod error;
pub mod fp;
pub mod graph;
pub mod hom;
pub mod lattice;
pub mod presentation;
pub mod ring;
pub mod snf;
pub mod spec;

pub use caps::Caps;
pub use claims::{enumerate_zoo, module_isomorphic, run_claim_suite, ClaimVerdict, ModuleZoo, Status};
pub use error::{Error, Result};
pub use graph::analysis::GraphProperties;
pub use graph::chordal::ChordalReport;
pub use graph::export::ExportFormat;
pub use graph::iso::IsoOutcome;
pub use graph::spectrum::{SpectrumMode, SpectrumReport};
pub use graph::{Graph, HomGraph};
pub use hom::{hom_oracle, hom_structure, present_quotient, present_submodule, HomStructure};
pub use lattice::{SocleNode, Submodule, SubmoduleLattice};
pub use presentation::{AnnihilatorProfile, Element, KxyPreset, ModulePresentation};
pub use ring::{RingKind, RingSpec};
pub use snf::{smith_normal_form, SnfResult};
pub use spec::{parse_module, ModuleSpec};
