//! Command-line front end and JSON formats for `quadnef-core`.

pub mod cli;
pub mod report;
pub mod schema;
