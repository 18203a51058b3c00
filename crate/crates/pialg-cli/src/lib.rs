//! Library surface of the CLI: the report mirror types, shared with tests.

pub mod report;
