use std::io::Write;

use irregularity::graph::report;

use crate::args::IrrArgs;
use crate::{aligned, json_line, read_graph, CmdResult, Status};

pub(crate) fn run(args: &IrrArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&args.path, args.format)?;
    let r = report(&g);
    if args.json {
        json_line(out, &r)?;
    } else {
        aligned(
            out,
            &[
                ("n", r.n.to_string()),
                ("m", r.m.to_string()),
                ("irr", format!("{}  (third Zagreb index M3)", r.irr)),
                ("M1", r.zagreb1.to_string()),
                ("M2", r.zagreb2.to_string()),
                ("max degree", r.max_degree.to_string()),
                ("min degree", r.min_degree.to_string()),
            ],
        )?;
    }
    Ok(Status::Pass)
}
