//! Rows of the maximal-irregularity table, recomputed from the
//! degree-sequence bound and checked against the clique-star closed form.

use std::io::Write;

use irregularity::constructions::{clique_star, clique_star_shape, ks_max_params, max_irr_bound};
use irregularity::degseq::{max_bound_sequences_with, EnumerationOptions};
use irregularity::{irregularity, DegreeSequence};
use serde::Serialize;

use crate::args::Table1Args;
use crate::{json_line, CliError, CmdResult, Status};

/// Header of the tab-separated rendering.
pub const TAB_HEADER: &str = "n\tKS_n^{max}\tgraphic sequences of KS_n^{max}\tirr(KS_n^{max})";

/// Orders above this take minutes to enumerate.
const SLOW_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub n: usize,
    /// `(p, q)` of each clique-star, by increasing `p`.
    pub constructions: Vec<(usize, usize)>,
    pub sequences: Vec<DegreeSequence>,
    pub irr: u64,
}

/// Disagreement between the enumeration and the closed form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("n = {n}: {reason}")]
pub struct Mismatch {
    pub n: usize,
    pub reason: String,
}

pub fn compute_row(n: usize, workers: usize) -> Result<Table1Row, Mismatch> {
    let fail = |reason: String| Mismatch { n, reason };
    let best = max_bound_sequences_with(n, &EnumerationOptions::default(), workers);
    let mut pairs = Vec::new();
    for s in &best.argmax {
        match clique_star_shape(s) {
            Some(pq) => pairs.push((pq, s.clone())),
            None => {
                return Err(fail(format!(
                    "maximizing sequence {} is not a clique-star sequence",
                    s.bracketed()
                )))
            }
        }
    }
    pairs.sort_by_key(|&((p, _), _)| p);
    let constructions: Vec<(usize, usize)> = pairs.iter().map(|&(pq, _)| pq).collect();
    let expected = ks_max_params(n);
    if constructions != expected {
        return Err(fail(format!("maximizers {constructions:?} differ from {expected:?}")));
    }
    let bound = max_irr_bound(n);
    if best.max_total != bound {
        return Err(fail(format!(
            "maximal bound {} differs from closed form {bound}",
            best.max_total
        )));
    }
    for &(p, q) in &constructions {
        let g = clique_star(p, q).map_err(|e| fail(e.to_string()))?;
        let irr = irregularity(&g);
        if irr != bound {
            return Err(fail(format!("KS_{{{p},{q}}} has irregularity {irr}, expected {bound}")));
        }
    }
    Ok(Table1Row {
        n,
        constructions,
        sequences: pairs.into_iter().map(|(_, s)| s).collect(),
        irr: bound,
    })
}

/// Tab-separated lines; continuation rows leave the `n` column empty.
pub fn tab_lines(row: &Table1Row) -> Vec<String> {
    row.constructions
        .iter()
        .zip(&row.sequences)
        .enumerate()
        .map(|(i, (&(p, q), s))| {
            let n = if i == 0 { row.n.to_string() } else { String::new() };
            format!("{n}\tKS_{{{p},{q}}}\t{}\t{}", s.bracketed(), row.irr)
        })
        .collect()
}

pub(crate) fn run(args: &Table1Args, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if args.max_n < 3 {
        return Err(CliError::Usage(format!(
            "--max-n must be at least 3 (got {})",
            args.max_n
        )));
    }
    if args.max_n > SLOW_ORDER {
        writeln!(
            err,
            "warning: enumerating graphic sequences beyond n = {SLOW_ORDER} takes a long time"
        )?;
    }
    if args.paper {
        writeln!(out, "{TAB_HEADER}")?;
    } else if !args.json {
        writeln!(out, "{:>3}  {:<10}  {:>6}  graphic sequence", "n", "graph", "irr")?;
    }
    for n in 3..=args.max_n {
        let row = match compute_row(n, args.workers) {
            Ok(row) => row,
            Err(m) => {
                writeln!(err, "table mismatch: {m}")?;
                return Ok(Status::Fail);
            }
        };
        if args.json {
            json_line(out, &row)?;
        } else if args.paper {
            for line in tab_lines(&row) {
                writeln!(out, "{line}")?;
            }
        } else {
            for (i, (&(p, q), s)) in row.constructions.iter().zip(&row.sequences).enumerate() {
                let n = if i == 0 { n.to_string() } else { String::new() };
                let name = format!("KS_{{{p},{q}}}");
                writeln!(out, "{n:>3}  {name:<10}  {:>6}  {}", row.irr, s.bracketed())?;
            }
        }
    }
    Ok(Status::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let r = compute_row(3, 1).unwrap();
        assert_eq!(tab_lines(&r), vec!["3\tKS_{1,2}\t[2, 1, 1]\t2"]);
        let r = compute_row(5, 2).unwrap();
        assert_eq!(
            tab_lines(&r),
            vec!["5\tKS_{1,4}\t[4, 1, 1, 1, 1]\t12", "\tKS_{2,3}\t[4, 4, 2, 2, 2]\t12"]
        );
    }

    #[test]
    fn row_json() {
        let r = compute_row(4, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"n":4,"constructions":[[1,3]],"sequences":[[3,1,1,1]],"irr":6}"#
        );
    }
}
