//! Exact finite-field checks for bimonoids, entwinings, Hopf modules and the
//! braided duoidal setting over `Vect_{F_p}`.

pub mod cli;
pub mod corpus;
pub mod duoidal;
pub mod entwining;
pub mod error;
pub mod exactalg;
pub mod hopfmod;
pub mod report;
pub mod structures;

pub use error::{Error, Result};
