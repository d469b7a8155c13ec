//! Std companion to `polyhex-core`: serialized output records, DOT/JSON graph
//! export, grid ranges and the CSV sweep used by the `polyhex` binary.

pub mod graph_io;
pub mod range;
pub mod record;
pub mod sweep;

pub use graph_io::{graph_from_json, to_dot, to_json, GraphJson};
pub use range::{parse_range, GridRange};
pub use record::{float_decimal, index_record, report_json, ExactJson, OutputRecord};
pub use sweep::{sweep_csv, sweep_rows, SweepRow};
