//! Exact computations around the McKay correspondence: Dynkin diagram
//! catalog, bicolored Coxeter transformations, Kostant generating
//! functions, assembling vectors and a Molien-series oracle.

pub mod coxeter;
pub mod diagram;
pub mod error;
pub mod exact;
pub mod kostant;
pub mod mckay;
pub mod molien;
pub mod orbit;
pub mod report;
pub mod suite;

pub use diagram::{Diagram, DiagramId, DiagramRecord, Family};
pub use error::{Error, Result};
pub use exact::{IntMatrix, IntPoly, RatFunc, RootVector};
pub use molien::BpgId;
pub use report::{Check, Report};
pub use suite::CheckName;
