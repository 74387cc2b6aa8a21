pub mod afm;
pub mod error;
pub mod model;
pub mod oracles;
pub mod ho;
pub mod special;
pub mod systems;

pub use error::{Error, Result};
