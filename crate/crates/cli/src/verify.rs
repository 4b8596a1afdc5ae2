//! Exhaustive verification suites. Each check yields one record on
//! standard output; timings go to standard error so that the records do
//! not depend on the machine or the worker count.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::time::Instant;

use irregularity::constructions::{
    fanned_split, fs_params, irr_fanned_split, ks_max_params, max_cyclomatic, max_irr_bound, min_degree_bound,
    near_regular, near_regular_min_degree, window_bound,
};
use irregularity::oracle::{Constraint, Oracle, ScanError, MAX_SCAN_ORDER};
use irregularity::{irregularity, DegreeSequence, Graph};
use serde::Serialize;

use crate::args::{Format, IncRange, VerifyCommand, VerifyOptions};
use crate::{json_line, write_graph_file, CliError, CmdResult, Status};

#[derive(Debug, Default, Serialize)]
struct Record {
    suite: &'static str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_degree: Option<usize>,
    /// Whether the scan was restricted to connected graphs.
    connected: bool,
    graphs: u64,
    /// Value the oracle result is compared with.
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<u64>,
    /// Oracle result; absent when no graph satisfies the constraint.
    #[serde(skip_serializing_if = "Option::is_none")]
    found: Option<u64>,
    /// Irregularity of the explicit construction, when one is checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    construction: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    witnesses: Vec<DegreeSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violations: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tight: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    failures: Vec<String>,
    pass: bool,
    #[serde(skip)]
    exports: Vec<Graph>,
}

impl Record {
    fn case(&self) -> String {
        let mut s = format!("n={}", self.n);
        if let Some(k) = self.k {
            let _ = write!(s, " k={k}");
        }
        if let Some(d) = self.min_degree {
            let _ = write!(s, " min_degree={d}");
        }
        if let Some(d) = self.max_degree {
            let _ = write!(s, " max_degree={d}");
        }
        if !self.connected {
            s.push_str(" all graphs");
        }
        s
    }

    fn slug(&self) -> String {
        self.case().replace(' ', "-").replace('=', "")
    }

    fn fail(&mut self, reason: String) {
        self.failures.push(reason);
    }

    fn finish(mut self) -> Self {
        self.pass = self.failures.is_empty();
        self
    }

    fn text(&self) -> String {
        let mut s = format!(
            "{} {} {}:",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.case()
        );
        match self.found {
            Some(f) => {
                let _ = write!(s, " found {f}");
            }
            None if self.violations.is_none() => s.push_str(" no admissible graph"),
            None => {}
        }
        if let Some(e) = self.expected {
            let _ = write!(s, " expected {e}");
        }
        if let Some(c) = self.construction {
            let _ = write!(s, " construction {c}");
        }
        if let Some(v) = self.violations {
            let _ = write!(s, " violations {v}");
        }
        if let Some(t) = self.tight {
            let _ = write!(s, " tight {t}");
        }
        let _ = write!(s, " graphs {}", self.graphs);
        if !self.witnesses.is_empty() {
            let w: Vec<String> = self.witnesses.iter().map(|x| x.bracketed()).collect();
            let _ = write!(s, " witnesses {}", w.join(" "));
        }
        for f in &self.failures {
            let _ = write!(s, "; {f}");
        }
        s
    }
}

fn check_range(n: IncRange, min: usize) -> Result<(), CliError> {
    if n.start < min {
        return Err(CliError::Usage(format!("this suite needs n >= {min} (got {n})")));
    }
    if n.end > MAX_SCAN_ORDER {
        return Err(CliError::usage(ScanError::TooLarge {
            n: n.end,
            log2_graphs: n.end * (n.end - 1) / 2,
        }));
    }
    Ok(())
}

fn scan_err(e: ScanError) -> CliError {
    CliError::usage(e)
}

fn extremal(oracle: &Oracle, n: usize) -> Result<Record, CliError> {
    let r = oracle.max_irr(n, Constraint::all()).map_err(scan_err)?;
    let mut rec = Record {
        suite: "extremal",
        n,
        graphs: r.graphs_scanned,
        expected: Some(max_irr_bound(n)),
        found: r.best_irr,
        witnesses: r.witness_sequences(),
        ..Record::default()
    };
    let total = 1u64 << (n * (n - 1) / 2);
    if r.graphs_scanned != total {
        rec.fail(format!("scanned {} of {total} graphs", r.graphs_scanned));
    }
    if rec.found != rec.expected {
        rec.fail("maximum differs from closed form".into());
        rec.exports.extend(r.witnesses.iter().cloned());
    }
    let mut expected: Vec<DegreeSequence> = ks_max_params(n)
        .into_iter()
        .map(|(p, q)| DegreeSequence::clique_star(p, q))
        .collect();
    expected.sort_by(|a, b| b.cmp(a));
    if rec.witnesses != expected {
        let e: Vec<String> = expected.iter().map(|s| s.bracketed()).collect();
        rec.fail(format!("witness sequences differ from {}", e.join(" ")));
        rec.exports.extend(r.witnesses.iter().cloned());
    }
    for g in &r.witnesses {
        if g.universal_count() < n / 3 {
            rec.fail(format!(
                "witness with {} universal vertices, fewer than {}",
                g.universal_count(),
                n / 3
            ));
            rec.exports.push(g.clone());
        }
    }
    Ok(rec.finish())
}

fn kcyclic(oracle: &Oracle, n: usize, k: usize) -> Result<Record, CliError> {
    let params = fs_params(n, k).map_err(CliError::usage)?;
    let fs = fanned_split(&params);
    let r = oracle.max_irr_kcyclic(n, k).map_err(scan_err)?;
    let mut rec = Record {
        suite: "kcyclic",
        n,
        k: Some(k),
        connected: true,
        graphs: r.graphs_scanned,
        expected: Some(irr_fanned_split(&params)),
        found: r.best_irr,
        construction: Some(irregularity(&fs)),
        witnesses: r.witness_sequences(),
        ..Record::default()
    };
    if rec.construction != rec.expected {
        rec.fail("fanned split closed form differs from its recomputation".into());
        rec.exports.push(fs.clone());
    }
    if rec.found != rec.expected {
        rec.fail("maximum differs from fanned split".into());
        rec.exports.extend(r.witnesses.iter().cloned());
    } else {
        let seq = DegreeSequence::new(fs.degree_sequence()).expect("graph degrees");
        if !rec.witnesses.contains(&seq) {
            rec.fail(format!("no witness has the fanned split sequence {}", seq.bracketed()));
            rec.exports.push(fs);
        }
    }
    Ok(rec.finish())
}

fn bounds(oracle: &Oracle, n: usize) -> Result<Record, CliError> {
    let b = oracle.bound_soundness(n).map_err(scan_err)?;
    let mut rec = Record {
        suite: "bounds",
        n,
        graphs: b.graphs_scanned,
        violations: Some(b.violations),
        tight: Some(b.tight),
        ..Record::default()
    };
    if b.violations > 0 {
        rec.fail(format!("{} graphs exceed the degree-sequence bound", b.violations));
        rec.exports.extend(b.first_violation);
    }
    Ok(rec.finish())
}

fn minirr_window(oracle: &Oracle, n: usize, delta: usize, big_delta: usize) -> Result<Record, CliError> {
    let r = oracle.min_irr_window(n, delta, big_delta).map_err(scan_err)?;
    let bound = window_bound(n, delta, big_delta);
    let mut rec = Record {
        suite: "minirr",
        n,
        min_degree: (delta < big_delta).then_some(delta),
        max_degree: Some(big_delta),
        connected: true,
        graphs: r.graphs_scanned,
        expected: Some(bound),
        found: r.best_irr,
        witnesses: r.witness_sequences(),
        ..Record::default()
    };
    if let Some(f) = r.best_irr {
        if f > bound {
            rec.fail(format!("least irregularity {f} exceeds {bound}"));
            rec.exports.extend(r.witnesses.iter().cloned());
        }
    }
    match near_regular(n, delta, big_delta) {
        Ok(nr) => {
            let irr = irregularity(&nr.graph);
            rec.construction = Some(irr);
            if irr > nr.bound || nr.graph.degree_sequence() != nr.sequence.values() {
                rec.fail(format!(
                    "construction {} has irregularity {irr}",
                    nr.sequence.bracketed()
                ));
                rec.exports.push(nr.graph);
            }
        }
        Err(e) => {
            if r.best_irr.is_some() {
                rec.fail(format!("construction failed on a realizable window: {e}"));
            }
        }
    }
    Ok(rec.finish())
}

fn minirr_min_degree(oracle: &Oracle, n: usize, delta: usize) -> Result<Record, CliError> {
    let c = Constraint {
        min_degree: Some(delta),
        ..Constraint::all()
    };
    let r = oracle.min_irr(n, c).map_err(scan_err)?;
    let bound = min_degree_bound(n, delta);
    let mut rec = Record {
        suite: "minirr",
        n,
        min_degree: Some(delta),
        graphs: r.graphs_scanned,
        expected: Some(bound),
        found: r.best_irr,
        witnesses: r.witness_sequences(),
        ..Record::default()
    };
    match r.best_irr {
        Some(f) if f > bound => {
            rec.fail(format!("least irregularity {f} exceeds {bound}"));
            rec.exports.extend(r.witnesses.iter().cloned());
        }
        Some(_) => {}
        None => rec.fail("no graph has this minimum degree".into()),
    }
    match near_regular_min_degree(n, delta) {
        Ok(nr) => {
            let irr = irregularity(&nr.graph);
            rec.construction = Some(irr);
            if irr > nr.bound || nr.graph.min_degree() != delta {
                rec.fail(format!(
                    "construction {} has irregularity {irr}",
                    nr.sequence.bracketed()
                ));
                rec.exports.push(nr.graph);
            }
        }
        Err(e) => rec.fail(format!("construction failed: {e}")),
    }
    Ok(rec.finish())
}

type Job<'a> = Box<dyn Fn(&Oracle) -> Result<Record, CliError> + 'a>;

fn jobs(cmd: &VerifyCommand) -> Result<(&'static str, Vec<Job<'static>>, &VerifyOptions), CliError> {
    let mut list: Vec<Job<'static>> = Vec::new();
    let (suite, options) = match cmd {
        VerifyCommand::Extremal { n, options } => {
            check_range(*n, 3)?;
            for n in n.iter() {
                list.push(Box::new(move |o| extremal(o, n)));
            }
            ("extremal", options)
        }
        VerifyCommand::Kcyclic { n, k, options } => {
            check_range(*n, 1)?;
            for n in n.iter() {
                let max_k = max_cyclomatic(n);
                let ks = k.unwrap_or(IncRange { start: 0, end: max_k });
                if ks.end > max_k {
                    return Err(CliError::Usage(format!(
                        "k = {} is infeasible for n = {n} (0 <= k <= {max_k})",
                        ks.end
                    )));
                }
                for k in ks.iter() {
                    list.push(Box::new(move |o| kcyclic(o, n, k)));
                }
            }
            ("kcyclic", options)
        }
        VerifyCommand::Bounds { n, options } => {
            check_range(*n, 1)?;
            for n in n.iter() {
                list.push(Box::new(move |o| bounds(o, n)));
            }
            ("bounds", options)
        }
        VerifyCommand::Minirr { n, options } => {
            check_range(*n, 2)?;
            for n in n.iter() {
                for big in 1..n {
                    for d in 1..=big {
                        list.push(Box::new(move |o| minirr_window(o, n, d, big)));
                    }
                }
                for d in 1..n {
                    list.push(Box::new(move |o| minirr_min_degree(o, n, d)));
                }
            }
            ("minirr", options)
        }
    };
    Ok((suite, list, options))
}

fn export(rec: &Record, options: &VerifyOptions, err: &mut dyn Write) -> Result<(), CliError> {
    if rec.exports.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(&options.export)?;
    let ext = match options.format {
        Format::Edgelist => "txt",
        Format::Graph6 => "g6",
    };
    for (i, g) in rec.exports.iter().enumerate() {
        let path = options.export.join(format!("{}-{}-{i}.{ext}", rec.suite, rec.slug()));
        write_graph_file(&path, g, options.format)?;
        writeln!(err, "exported counterexample to {}", path.display())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Summary {
    suite: &'static str,
    checks: usize,
    passed: usize,
    failed: usize,
}

pub(crate) fn run(cmd: VerifyCommand, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let (suite, list, options) = jobs(&cmd)?;
    let oracle = Oracle::new(options.workers);
    let mut passed = 0;
    let started = Instant::now();
    for job in &list {
        let t = Instant::now();
        let rec = job(&oracle)?;
        writeln!(err, "time {suite} {}: {:.3}s", rec.case(), t.elapsed().as_secs_f64())?;
        if options.json {
            json_line(out, &rec)?;
        } else {
            writeln!(out, "{}", rec.text())?;
        }
        if rec.pass {
            passed += 1;
        } else {
            export(&rec, options, err)?;
        }
        out.flush()?;
    }
    let summary = Summary {
        suite,
        checks: list.len(),
        passed,
        failed: list.len() - passed,
    };
    if options.json {
        json_line(out, &serde_json::json!({ "summary": summary }))?;
    } else {
        writeln!(
            out,
            "{suite}: {} checks, {} passed, {} failed",
            summary.checks, summary.passed, summary.failed
        )?;
    }
    writeln!(err, "time {suite} total: {:.3}s", started.elapsed().as_secs_f64())?;
    Ok(Status::from_ok(summary.failed == 0))
}
