//! Library side of the `bicluster` command-line tool: file formats, the
//! instance generator, and recognition witnesses. The binary in `main.rs`
//! is a thin dispatcher over these and over `bicluster_core`.

pub mod format;
pub mod gen;
pub mod witness;

pub use format::{format_edit_script, format_graph, parse_graph, ParseError};
pub use gen::{generate, GenError, Generated};
pub use witness::{find_witness, Witness};
