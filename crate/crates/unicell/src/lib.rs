//! IO, file formats, parallel search and the command-line checks built on
//! [`unicell_core`].

pub mod mapfile;
pub mod parallel;
pub mod table;
pub mod verify;
