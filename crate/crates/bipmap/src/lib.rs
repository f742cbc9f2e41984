//! Command-line front end for `bipmap-core`: census tables, series dumps,
//! closed forms, kernel data and the verification suites.

pub mod cli;
pub mod dto;
pub mod format;
pub mod par;
pub mod suites;
