//! File formats, reports and verification suites on top of `spingeo-core`.

pub mod checks;
pub mod config;
pub mod pres;
pub mod recipe_file;
pub mod report;
