//! Simulator and path-analysis toolkit for non-cooperative (temperature-1)
//! tile self-assembly. Decides finite vs infinite terminal assemblies of
//! directed systems through a linear size bound, and implements the exact
//! lattice geometry behind glue visibility, cuts, spans, canonical paths,
//! dominant arcs and shields, together with an executable property-check
//! registry over generated systems.

pub mod arc;
pub mod cut;
pub mod error;
pub mod fixtures;
pub mod geom;
pub mod glue;
pub mod harness;
pub mod model;
pub mod path;
pub mod region;
pub mod report;
