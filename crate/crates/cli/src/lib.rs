//! Implementation of the `irrg` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a check or self-check fails, 2 on
//! usage, parse or I/O errors.

pub mod args;
mod extremal;
mod irr;
mod seq;
pub mod table1;
mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::Parser;
use irregularity::graph::{read_edge_list, read_graph6, write_edge_list, write_graph6};
use irregularity::Graph;
use serde::Serialize;

use args::{Cli, Command, Format, GraphOutput};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Whether every check a command performed passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

pub type CmdResult = Result<Status, CliError>;

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Status::Pass) => 0,
        Ok(Status::Fail) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Irr(a) => irr::run(&a, out),
        Command::Extremal(c) => extremal::run(c, out, err),
        Command::Table1(a) => table1::run(&a, out, err),
        Command::Seq(c) => seq::run(c, out, err),
        Command::Verify(c) => verify::run(c, out, err),
    }
}

pub(crate) fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph, CliError> {
    let text = if path == Path::new("-") {
        io::read_to_string(io::stdin())?
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
    };
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => Format::Graph6,
        _ => Format::Edgelist,
    });
    let parsed = match format {
        Format::Edgelist => read_edge_list(&text).map_err(|e| e.to_string()),
        Format::Graph6 => read_graph6(&text).map_err(|e| e.to_string()),
    };
    parsed.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub(crate) fn encode_graph(g: &Graph, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Edgelist => write_edge_list(g),
        Format::Graph6 => write_graph6(g).map_err(CliError::usage)? + "\n",
    })
}

pub(crate) fn write_graph_file(path: &Path, g: &Graph, format: Format) -> Result<(), CliError> {
    fs::write(path, encode_graph(g, format)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub(crate) fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

/// Writes `g` per `output` and routes the report: to `out` when the graph
/// goes to a file, otherwise to `err` so `out` carries only the graph.
pub(crate) fn emit_graph<'a>(
    g: &Graph,
    output: &GraphOutput,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
) -> Result<&'a mut dyn Write, CliError> {
    match &output.out {
        Some(path) => {
            write_graph_file(path, g, output.format)?;
            Ok(out)
        }
        None => {
            out.write_all(encode_graph(g, output.format)?.as_bytes())?;
            Ok(err)
        }
    }
}

/// `label  value` lines with the values aligned.
pub(crate) fn aligned(out: &mut dyn Write, rows: &[(&str, String)]) -> io::Result<()> {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in rows {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}
