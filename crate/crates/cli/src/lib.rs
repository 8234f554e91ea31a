//! Command-line front end for `linefit`: CSV input, a text table, a JSON
//! report and an SVG figure.

pub mod args;
pub mod csv;
pub mod report;
pub mod run;
pub mod svg;

pub use args::main_with_args;
pub use csv::{parse_csv, write_csv, CsvError};
pub use report::{render_table, to_json, RunReport};
pub use run::{
    run, Generator, InputSource, RunConfig, EXIT_INPUT, EXIT_IO, EXIT_OK, EXIT_PRECONDITION,
};
pub use svg::render_svg;
