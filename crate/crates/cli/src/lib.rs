//! File formats, the embedded code corpus and the `circuit` command line on
//! top of `circuit-core`.

pub mod cli;
pub mod codefile;
pub mod corpus;
pub mod error;
pub mod export;
pub mod table;

pub use codefile::{parse_code_file, serialize_code};
pub use corpus::{corpus, lookup, CorpusEntry};
pub use error::CliError;
pub use export::{export_table, TableFormat};
pub use table::{corpus_seeds, materialize, seeded_table, TableRange};
