pub mod cyclotomic;
pub mod enumerate;
pub mod error;
pub mod groups;
pub mod homcount;
pub mod io;
pub mod lattice;
pub mod limits;
pub mod objects;
mod par;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
