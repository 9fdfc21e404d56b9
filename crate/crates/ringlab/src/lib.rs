//! ringlab: an exact-computation laboratory for explicitly computable
//! commutative rings and finite spectral spaces.
//!
//! The crate classifies rings against the criterion lists of several
//! characterization theorems (zero-dimensional, Gelfand, clean, mp,
//! reduced-mp, purified), checks that the criteria within each list agree,
//! and runs the constructive algorithms behind them: clean decompositions,
//! idempotent lifting, canonical product decompositions, and orthogonal-
//! idempotent gluing of local solutions of polynomial systems.
//!
//! Start with the runnable examples (`cargo run --example classify_ring`)
//! or the `ringlab` binary (`ringlab classify ring.json`).

pub mod classify;
pub mod cli;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod ideal;
pub mod poly;
pub mod report;
pub mod ring;
pub mod spectrum;
pub mod topology;

pub use classify::{classify_report, ClassifyReport, CriteriaMatrix, Verdict};
pub use error::{Error, Result};
pub use ideal::IdealRep;
pub use poly::{PolySystem, Polynomial};
pub use ring::{ring_from_descriptor, Caps, RingDescriptor, RingElement, RingHandle};
pub use spectrum::SpectrumGraph;
pub use topology::{SpectralSpace, TopologyKind};
