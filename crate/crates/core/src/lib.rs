//! Finite-field representation theory of finite acyclic quivers, with the
//! lattice of preradicals on a finite-type category of representations.

pub mod adjunction;
pub mod category;
pub mod error;
pub mod functor;
pub mod galois;
pub mod indec;
pub mod labels;
pub mod lattice;
pub mod limits;
pub mod linalg;
pub mod quiver;
pub mod preradical;
pub mod rep;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
