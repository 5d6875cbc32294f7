//! Height-bounded enumeration of integer maps, database records and counts.

mod enumerate;
mod io;
mod record;
mod stats;

pub use enumerate::{
    block_count, block_prefix, enumerate, enumerate_block, generate, is_admissible,
    naive_height, records_for, EnumerationConfig,
};
pub use io::{read_csv, read_jsonl, write_csv, write_jsonl, DatasetError, JsonlWriter};
pub use record::{build_record, record_from_json, DatasetRecord};
pub use stats::Stats;
