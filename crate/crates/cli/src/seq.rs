use std::io::{self, Write};

use irregularity::degseq::{
    enumerate_graphic_parallel, erdos_gallai_violation, irr_upper_bound, max_bound_sequences_with, parse_degrees,
    realize, EnumerationOptions, SequenceError,
};
use irregularity::{irregularity, DegreeSequence};
use serde::Serialize;

use crate::args::SeqCommand;
use crate::{aligned, emit_graph, json_line, CliError, CmdResult, Status};

fn parse(s: &str) -> Result<DegreeSequence, CliError> {
    s.parse().map_err(CliError::usage)
}

#[derive(Serialize)]
struct CheckReport {
    sequence: Vec<usize>,
    graphic: bool,
    reason: Option<String>,
}

fn check(raw: &str, json: bool, out: &mut dyn Write) -> CmdResult {
    let values = parse_degrees(raw).map_err(CliError::usage)?;
    let reason = match DegreeSequence::new(values.clone()) {
        Ok(s) => erdos_gallai_violation(s.values()).map(|v| v.to_string()),
        Err(e @ SequenceError::DegreeTooLarge { .. }) => Some(e.to_string()),
        Err(e) => return Err(CliError::usage(e)),
    };
    if json {
        json_line(
            out,
            &CheckReport {
                sequence: values,
                graphic: reason.is_none(),
                reason: reason.clone(),
            },
        )?;
    } else {
        match &reason {
            None => writeln!(out, "graphic")?,
            Some(r) => writeln!(out, "not graphic ({r})")?,
        }
    }
    Ok(Status::from_ok(reason.is_none()))
}

#[derive(Serialize)]
struct RealizeReport {
    sequence: DegreeSequence,
    n: usize,
    m: usize,
    irr: u64,
    connected: bool,
    ok: bool,
}

#[derive(Serialize)]
struct MaxBoundReport<'a> {
    n: usize,
    min_degree: usize,
    sequences: u64,
    max_bound: u64,
    argmax: &'a [DegreeSequence],
}

pub(crate) fn run(cmd: SeqCommand, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        SeqCommand::Check { sequence, json } => check(&sequence, json, out),
        SeqCommand::Realize { sequence, output } => {
            let s = parse(&sequence)?;
            let g = realize(&s).map_err(CliError::usage)?;
            let r = RealizeReport {
                ok: g.degree_sequence() == s.values(),
                n: g.order(),
                m: g.edge_count(),
                irr: irregularity(&g),
                connected: g.is_connected(),
                sequence: s,
            };
            let sink = emit_graph(&g, &output, out, err)?;
            if output.json {
                json_line(sink, &r)?;
            } else {
                aligned(
                    sink,
                    &[
                        ("sequence", r.sequence.bracketed()),
                        ("n", r.n.to_string()),
                        ("m", r.m.to_string()),
                        ("irr", r.irr.to_string()),
                        ("connected", if r.connected { "yes" } else { "no" }.to_string()),
                        ("degrees match", if r.ok { "yes" } else { "NO" }.to_string()),
                    ],
                )?;
            }
            Ok(Status::from_ok(r.ok))
        }
        SeqCommand::Enumerate {
            n,
            min_degree,
            workers,
            count,
            json,
        } => {
            let opts = EnumerationOptions::with_min_degree(min_degree);
            let mut failure: Option<io::Error> = None;
            let mut w = io::BufWriter::new(&mut *out);
            let total = enumerate_graphic_parallel(n, &opts, workers, |s| {
                if count || failure.is_some() {
                    return;
                }
                let r = if json {
                    serde_json::to_writer(&mut w, s)
                        .map_err(io::Error::from)
                        .and_then(|_| writeln!(w))
                } else {
                    writeln!(w, "{s}")
                };
                if let Err(e) = r {
                    failure = Some(e);
                }
            });
            if let Some(e) = failure {
                return Err(e.into());
            }
            if count {
                if json {
                    json_line(&mut w, &serde_json::json!({ "n": n, "count": total }))?;
                } else {
                    writeln!(w, "{total}")?;
                }
            }
            w.flush()?;
            Ok(Status::Pass)
        }
        SeqCommand::Maxbound {
            n,
            min_degree,
            workers,
            json,
        } => {
            let best = max_bound_sequences_with(n, &EnumerationOptions::with_min_degree(min_degree), workers);
            if json {
                json_line(
                    out,
                    &MaxBoundReport {
                        n,
                        min_degree,
                        sequences: best.sequences,
                        max_bound: best.max_total,
                        argmax: &best.argmax,
                    },
                )?;
            } else {
                let mut rows = vec![
                    ("n", n.to_string()),
                    ("graphic sequences", best.sequences.to_string()),
                    ("max bound", best.max_total.to_string()),
                ];
                rows.extend(best.argmax.iter().map(|s| ("argmax", s.bracketed())));
                aligned(out, &rows)?;
            }
            Ok(Status::Pass)
        }
        SeqCommand::Bound { sequence, json } => {
            let s = parse(&sequence)?;
            let b = irr_upper_bound(&s);
            if json {
                json_line(out, &b)?;
            } else {
                let terms: Vec<String> = b.terms.iter().map(|t| t.to_string()).collect();
                aligned(out, &[("terms", terms.join(" ")), ("bound", b.total.to_string())])?;
            }
            Ok(Status::Pass)
        }
    }
}
