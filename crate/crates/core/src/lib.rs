pub mod cli;
pub mod error;
pub mod golden;
pub mod orbits;
pub mod ratmat;
pub mod restricted;
pub mod rootsys;
pub mod satake;
pub mod verify;

pub use error::{Error, Result};
