use std::io::Write;

use irregularity::constructions::{
    chained_clique_stars, clique_star, degree_window_chain, exceeds_window_lower_bound, fanned_split, fs_params,
    irr_clique_star, irr_fanned_split, ks_max_params, max_degree_chain, max_degree_chain_value, max_irr_bound,
    ChainParams, ConstructionError,
};
use irregularity::{irregularity, Graph};
use serde::Serialize;

use crate::args::ExtremalCommand;
use crate::{aligned, emit_graph, json_line, CliError, CmdResult, Status};

#[derive(Debug, Serialize)]
struct Report {
    construction: String,
    n: usize,
    m: usize,
    connected: bool,
    closed_form: u64,
    recomputed: u64,
    /// Value from an independent formula the closed form must equal.
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<u64>,
    /// `irr·(Δ+1) > δ(Δ-δ)²n` for degree-window chains.
    #[serde(skip_serializing_if = "Option::is_none")]
    exceeds_lower_bound: Option<bool>,
    ok: bool,
}

impl Report {
    fn new(construction: String, g: &Graph, closed_form: u64) -> Self {
        let recomputed = irregularity(g);
        Report {
            construction,
            n: g.order(),
            m: g.edge_count(),
            connected: g.is_connected(),
            closed_form,
            recomputed,
            expected: None,
            exceeds_lower_bound: None,
            ok: closed_form == recomputed,
        }
    }

    fn expect(mut self, value: u64) -> Self {
        self.ok &= self.closed_form == value;
        self.expected = Some(value);
        self
    }

    fn write_text(&self, w: &mut dyn Write) -> std::io::Result<()> {
        let mut rows = vec![
            ("graph", self.construction.clone()),
            ("n", self.n.to_string()),
            ("m", self.m.to_string()),
            ("connected", yes_no(self.connected)),
            ("closed form irr", self.closed_form.to_string()),
            ("recomputed irr", self.recomputed.to_string()),
        ];
        if let Some(e) = self.expected {
            rows.push(("expected irr", e.to_string()));
        }
        if let Some(b) = self.exceeds_lower_bound {
            rows.push(("exceeds lower bound", yes_no(b)));
        }
        rows.push(("self-check", if self.ok { "ok" } else { "MISMATCH" }.to_string()));
        aligned(w, &rows)
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn cerr(e: ConstructionError) -> CliError {
    CliError::usage(e)
}

fn chain_label(c: &ChainParams) -> String {
    format!("{} chained copies of KS_{{{},{}}}", c.copies, c.clique, c.independent)
}

pub(crate) fn run(cmd: ExtremalCommand, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let (g, report, output) = match cmd {
        ExtremalCommand::Ks { n, p, q, output } => {
            let (p, q, expected) = match (n, p, q) {
                (Some(n), _, _) => {
                    if n < 3 {
                        return Err(cerr(ConstructionError::OrderTooSmall { n, min: 3 }));
                    }
                    let (p, q) = ks_max_params(n)[0];
                    (p, q, Some(max_irr_bound(n)))
                }
                (None, Some(p), Some(q)) => (p, q, None),
                _ => return Err(CliError::usage("ks needs --n or both --p and --q")),
            };
            let g = clique_star(p, q).map_err(cerr)?;
            let mut r = Report::new(format!("KS_{{{p},{q}}}"), &g, irr_clique_star(p, p + q));
            if let Some(e) = expected {
                r = r.expect(e);
            }
            (g, r, output)
        }
        ExtremalCommand::Fs { n, k, output } => {
            let params = fs_params(n, k).map_err(cerr)?;
            let g = fanned_split(&params);
            let mut r = Report::new(
                format!("FS_{{{},{}}}", params.universal(), params.fan()),
                &g,
                irr_fanned_split(&params),
            );
            r.ok &= g.edge_count() == params.m() && g.is_connected();
            (g, r, output)
        }
        ExtremalCommand::Chain {
            copies,
            p,
            q,
            n,
            max_degree,
            min_degree,
            output,
        } => {
            let (chain, mode) = match (copies, n, max_degree) {
                (Some(copies), _, _) => {
                    let (clique, independent) = (p.unwrap_or(0), q.unwrap_or(0));
                    (
                        ChainParams {
                            copies,
                            clique,
                            independent,
                        },
                        None,
                    )
                }
                (None, Some(n), Some(big)) => match min_degree {
                    None => (max_degree_chain(n, big).map_err(cerr)?, Some((n, None, big))),
                    Some(d) => (degree_window_chain(n, d, big).map_err(cerr)?, Some((n, Some(d), big))),
                },
                _ => return Err(CliError::usage("chain needs --copies/--p/--q or --n with --max-degree")),
            };
            let g = chained_clique_stars(&chain).map_err(cerr)?;
            let mut r = Report::new(chain_label(&chain), &g, chain.irregularity());
            match mode {
                Some((n, None, big)) => r = r.expect(max_degree_chain_value(n, big)),
                Some((n, Some(d), big)) => {
                    let exceeds = exceeds_window_lower_bound(r.recomputed, n, d, big);
                    r.ok &= exceeds;
                    r.exceeds_lower_bound = Some(exceeds);
                }
                None => {}
            }
            (g, r, output)
        }
    };
    let sink = emit_graph(&g, &output, out, err)?;
    if output.json {
        json_line(sink, &report)?;
    } else {
        report.write_text(sink)?;
    }
    Ok(Status::from_ok(report.ok))
}
