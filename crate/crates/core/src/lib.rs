pub mod asymptotics;
pub mod cli;
pub mod distributions;
pub mod error;
pub mod evt;
pub mod expansions;
pub mod numeric;
pub mod records;

pub use distributions::{MemberId, Params};
pub use error::{BurrError, Result};
