pub mod autodiff;
pub mod construction;
pub mod dynamics;
pub mod error;
pub mod kernel;
pub mod oracle;
pub mod pga2d;
pub mod pga3d;
pub mod verify;

pub use construction::Construction;
pub use error::{PgaError, Result};
