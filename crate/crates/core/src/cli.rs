//! Spec-file parsing and text reports for the command line.
//!
//! ```text
//! ring 30
//! code C1
//! gens
//! 15 0
//! 0 15
//! end
//! code C cyclic n=12 poly=1,1
//! matrix A 2x2
//! 6 5
//! 5 6
//! end
//! run mpc C1 C1 A
//! ```
//!
//! `#` starts a comment. A code block with no rows needs `n=<len>` on its
//! header line.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::code::{self, DistanceCaps, LinearCode, MinDistance};
use crate::error::Error;
use crate::linalg;
use crate::matrix::Matrix;
use crate::mpc::{HullProvenance, MatrixProductSpec};
use crate::oracle;
use crate::ring::Ring;
use crate::suites;
use crate::torsion::{self, DistanceClaim, TorsionVariant};

/// Exit-status class of a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    Parse,
    Compute,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: FailureKind,
    pub line: Option<usize>,
    pub message: String,
}

impl CliError {
    fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError {
            kind: FailureKind::Parse,
            line: Some(line),
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError {
            kind: FailureKind::Parse,
            line: None,
            message: message.into(),
        }
    }

    fn compute(message: impl Into<String>) -> Self {
        CliError {
            kind: FailureKind::Compute,
            line: None,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            FailureKind::Parse => 2,
            FailureKind::Compute => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::compute(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// A parsed spec file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDocument {
    pub ring: Ring,
    pub codes: BTreeMap<String, LinearCode>,
    pub matrices: BTreeMap<String, Matrix>,
    /// `run` lines, in file order.
    pub commands: Vec<Vec<String>>,
}

impl SpecDocument {
    pub fn code(&self, name: &str) -> CliResult<&LinearCode> {
        self.codes
            .get(name)
            .ok_or_else(|| CliError::usage(format!("undefined code {name}")))
    }

    pub fn matrix(&self, name: &str) -> CliResult<&Matrix> {
        self.matrices
            .get(name)
            .ok_or_else(|| CliError::usage(format!("undefined matrix {name}")))
    }
}

fn parse_row(ring: Ring, line_no: usize, text: &str, width: Option<usize>) -> CliResult<Vec<u64>> {
    let row = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map(|v| ring.reduce_i128(v as i128))
                .map_err(|_| CliError::parse(line_no, format!("bad entry {tok:?}")))
        })
        .collect::<CliResult<Vec<u64>>>()?;
    if let Some(w) = width {
        if row.len() != w {
            return Err(CliError::parse(
                line_no,
                format!("row has {} entries, expected {w}", row.len()),
            ));
        }
    }
    Ok(row)
}

fn key_value<'a>(line_no: usize, tok: &'a str, key: &str) -> CliResult<&'a str> {
    tok.strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| CliError::parse(line_no, format!("expected {key}=..., got {tok:?}")))
}

fn parse_usize(line_no: usize, tok: &str) -> CliResult<usize> {
    tok.parse()
        .map_err(|_| CliError::parse(line_no, format!("bad number {tok:?}")))
}

/// Rows up to the closing `end`, and the common width.
fn block_rows<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    ring: Ring,
    start: usize,
    width: Option<usize>,
) -> CliResult<(Vec<Vec<u64>>, Option<usize>)> {
    let mut rows = Vec::new();
    let mut width = width;
    for (no, l) in lines.by_ref() {
        if l == "end" {
            return Ok((rows, width));
        }
        let row = parse_row(ring, no, l, width)?;
        width = Some(row.len());
        rows.push(row);
    }
    Err(CliError::parse(start, "block is missing its end line"))
}

pub fn parse_spec(text: &str) -> CliResult<SpecDocument> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut ring = None;
    let mut codes = BTreeMap::new();
    let mut matrices = BTreeMap::new();
    let mut commands = Vec::new();

    while let Some((no, line)) = lines.next() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "ring" => {
                if ring.is_some() {
                    return Err(CliError::parse(no, "ring declared twice"));
                }
                let [_, m] = toks[..] else {
                    return Err(CliError::parse(no, "expected: ring <m>"));
                };
                let m: u64 = m
                    .parse()
                    .map_err(|_| CliError::parse(no, format!("unknown ring {m:?}")))?;
                ring = Some(Ring::new(m).map_err(|e| CliError::parse(no, e.to_string()))?);
            }
            "code" | "matrix" | "run" if ring.is_none() => {
                return Err(CliError::parse(no, "ring must be declared first"));
            }
            "code" => {
                let ring = ring.expect("checked");
                let Some(&name) = toks.get(1) else {
                    return Err(CliError::parse(no, "expected: code <name>"));
                };
                if codes.contains_key(name) {
                    return Err(CliError::parse(no, format!("duplicate code {name}")));
                }
                let code = if toks.get(2) == Some(&"cyclic") {
                    let [_, _, _, n_tok, poly_tok] = toks[..] else {
                        return Err(CliError::parse(no, "expected: code <name> cyclic n=<n> poly=<c0,...,1>"));
                    };
                    let n = parse_usize(no, key_value(no, n_tok, "n")?)?;
                    let poly = key_value(no, poly_tok, "poly")?
                        .split(',')
                        .map(|c| {
                            c.trim()
                                .parse::<i64>()
                                .map_err(|_| CliError::parse(no, format!("bad coefficient {c:?}")))
                        })
                        .collect::<CliResult<Vec<i64>>>()?;
                    code::cyclic_code(ring, n, &poly).map_err(|e| CliError::parse(no, e.to_string()))?
                } else {
                    let declared = match toks.get(2) {
                        Some(tok) => Some(parse_usize(no, key_value(no, tok, "n")?)?),
                        None => None,
                    };
                    if toks.len() > 3 {
                        return Err(CliError::parse(no, "unexpected tokens after code name"));
                    }
                    match lines.next() {
                        Some((_, "gens")) => {}
                        Some((l, _)) => return Err(CliError::parse(l, "expected gens")),
                        None => return Err(CliError::parse(no, "expected gens")),
                    }
                    let (rows, width) = block_rows(&mut lines, ring, no, declared)?;
                    let n = width.ok_or_else(|| CliError::parse(no, "empty code needs n=<len>"))?;
                    LinearCode::from_residue_rows(ring, n, &rows).map_err(|e| CliError::parse(no, e.to_string()))?
                };
                codes.insert(name.to_string(), code);
            }
            "matrix" => {
                let ring = ring.expect("checked");
                let [_, name, shape] = toks[..] else {
                    return Err(CliError::parse(no, "expected: matrix <name> <s>x<l>"));
                };
                if matrices.contains_key(name) {
                    return Err(CliError::parse(no, format!("duplicate matrix {name}")));
                }
                let (s, l) = shape
                    .split_once('x')
                    .ok_or_else(|| CliError::parse(no, format!("bad shape {shape:?}")))?;
                let (s, l) = (parse_usize(no, s)?, parse_usize(no, l)?);
                let (rows, _) = block_rows(&mut lines, ring, no, Some(l))?;
                if rows.len() != s {
                    return Err(CliError::parse(no, format!("matrix {name} has {} rows, expected {s}", rows.len())));
                }
                let m = Matrix::from_residue_rows(ring, l, &rows).map_err(|e| CliError::parse(no, e.to_string()))?;
                matrices.insert(name.to_string(), m);
            }
            "run" => {
                if toks.len() < 2 {
                    return Err(CliError::parse(no, "expected: run <command> ..."));
                }
                commands.push((no, toks[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>()));
            }
            other => return Err(CliError::parse(no, format!("unknown directive {other:?}"))),
        }
    }

    let ring = ring.ok_or_else(|| CliError::parse(1, "missing ring declaration"))?;
    let doc = SpecDocument {
        ring,
        codes,
        matrices,
        commands: Vec::new(),
    };
    for (no, cmd) in &commands {
        check_references(&doc, cmd).map_err(|e| CliError::parse(*no, e.message))?;
    }
    Ok(SpecDocument {
        commands: commands.into_iter().map(|(_, c)| c).collect(),
        ..doc
    })
}

/// Name arguments of a command must resolve.
fn check_references(doc: &SpecDocument, cmd: &[String]) -> CliResult<()> {
    let args: Vec<&str> = cmd.iter().map(String::as_str).filter(|a| !a.starts_with("--")).collect();
    match args.as_slice() {
        ["info" | "dual" | "hull" | "lcd" | "distance", name, ..] | ["torsion", name, ..] => {
            doc.code(name).map(|_| ())
        }
        ["mpc", names @ .., mat] if !names.is_empty() => {
            for n in names {
                doc.code(n)?;
            }
            doc.matrix(mat).map(|_| ())
        }
        ["torsion-mpc", name, _, mat, ..] => {
            doc.code(name)?;
            doc.matrix(mat).map(|_| ())
        }
        _ => Ok(()),
    }
}

/// Prints a code as a block that [`parse_spec`] reads back to an equal code.
pub fn code_block(name: &str, c: &LinearCode) -> String {
    let mut out = String::new();
    if c.is_zero() {
        let _ = writeln!(out, "code {name} n={}", c.len());
    } else {
        let _ = writeln!(out, "code {name}");
    }
    out.push_str("gens\n");
    out.push_str(&c.generator_matrix().to_string());
    out.push_str("end\n");
    out
}

/// Options shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunOptions {
    pub caps: DistanceCaps,
    pub oracle: bool,
}

fn distance_text(d: Option<MinDistance>, caps: DistanceCaps) -> String {
    match d {
        None => "undefined (zero code)".to_string(),
        Some(MinDistance::Exact(d)) => d.to_string(),
        Some(MinDistance::Bounds { lo, hi }) => {
            format!("d in [{lo}, {hi}] (weight search capped at {})", caps.weight_cap)
        }
    }
}

fn params_text(out: &mut String, c: &LinearCode, caps: DistanceCaps) -> CliResult<()> {
    let d = c.min_distance(caps)?;
    let _ = writeln!(out, "ring: {}", c.ring());
    let _ = writeln!(out, "length: {}", c.len());
    let _ = writeln!(out, "cardinality: {}", c.cardinality_string());
    match c.free_rank() {
        Some(k) => {
            let _ = writeln!(out, "free rank: {k}");
        }
        None => {
            let pivots: Vec<String> = c.howell().pivot_values().iter().map(u64::to_string).collect();
            let _ = writeln!(out, "free: no (pivots {})", pivots.join(" "));
        }
    }
    let _ = writeln!(out, "min distance: {}", distance_text(d, caps));
    let d_short = match d {
        Some(MinDistance::Exact(d)) => d.to_string(),
        Some(MinDistance::Bounds { lo, hi }) => format!("[{lo}, {hi}]"),
        None => "-".to_string(),
    };
    let _ = writeln!(out, "parameters: ({}, {}, {d_short})", c.len(), c.cardinality_string());
    Ok(())
}

fn oracle_check(out: &mut String, opts: RunOptions, what: &str, fast: &LinearCode, brute: Brute) -> CliResult<()> {
    if !opts.oracle {
        return Ok(());
    }
    match agrees_with_oracle(fast, brute) {
        Ok(true) => {
            let _ = writeln!(out, "oracle: {what} agrees");
            Ok(())
        }
        Ok(false) => Err(CliError::compute(format!("oracle: {what} disagrees with enumeration"))),
        Err(Error::CapExceeded { needed, .. }) => {
            let _ = writeln!(out, "oracle: {what} skipped (needs {needed} vectors)");
            Ok(())
        }
        Err(e) => Err(e.into()),
    }
}

/// Reference set for a fast result.
enum Brute<'a> {
    Span(&'a LinearCode),
    Dual(&'a LinearCode),
    Hull(&'a LinearCode),
}

fn agrees_with_oracle(fast: &LinearCode, brute: Brute<'_>) -> crate::error::Result<bool> {
    let (ring, n, cap) = (fast.ring(), fast.len(), oracle::DEFAULT_CAP);
    let reference = match brute {
        Brute::Span(c) => oracle::brute_span(ring, n, &c.generators(), cap)?,
        Brute::Dual(c) => oracle::brute_dual(ring, n, &c.generators(), cap)?,
        Brute::Hull(c) => oracle::brute_hull(ring, n, &c.generators(), cap)?,
    };
    Ok(oracle::brute_span(ring, n, &fast.generators(), cap)? == reference)
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn parse_index(tok: &str) -> CliResult<u32> {
    tok.parse()
        .map_err(|_| CliError::usage(format!("bad index {tok:?}")))
}

/// Runs one command against a document.
pub fn run_command(doc: &SpecDocument, cmd: &[String], opts: RunOptions) -> CliResult<String> {
    let mut opts = opts;
    let mut args: Vec<&str> = Vec::new();
    let mut it = cmd.iter().map(String::as_str);
    while let Some(a) = it.next() {
        match a {
            "--enum-cap" | "--weight-cap" => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::usage(format!("{a} needs a value")))?;
                let v: u64 = v
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad value {v:?} for {a}")))?;
                if a == "--enum-cap" {
                    opts.caps.enum_cap = v;
                } else {
                    opts.caps.weight_cap = v as usize;
                }
            }
            "--oracle" => opts.oracle = true,
            _ => args.push(a),
        }
    }
    let caps = opts.caps;
    let mut out = String::new();
    match args.as_slice() {
        ["info", name] => {
            let c = doc.code(name)?;
            let _ = writeln!(out, "code {name}");
            params_text(&mut out, c, caps)?;
            oracle_check(&mut out, opts, "span", c, Brute::Span(c))?;
        }
        ["dual", name] => {
            let c = doc.code(name)?;
            let d = c.dual();
            out.push_str(&code_block(&format!("{name}_dual"), &d));
            params_text(&mut out, &d, caps)?;
            oracle_check(&mut out, opts, "dual", &d, Brute::Dual(c))?;
        }
        ["hull", name] => {
            let c = doc.code(name)?;
            let h = c.hull();
            out.push_str(&code_block(&format!("{name}_hull"), &h));
            let _ = writeln!(out, "cardinality: {}", h.cardinality_string());
            let _ = writeln!(out, "lcd: {}", yes(h.is_zero()));
            oracle_check(&mut out, opts, "hull", &h, Brute::Hull(c))?;
        }
        ["lcd", name] => {
            let c = doc.code(name)?;
            let lcd = c.is_lcd();
            let _ = writeln!(out, "code {name}");
            let _ = writeln!(out, "lcd: {}", yes(lcd));
            if c.is_free() {
                let g = c.generator_matrix();
                let det = linalg::det(&g.gram())?;
                let _ = writeln!(out, "det(GG^t): {} (unit: {})", det.value(), yes(det.is_unit()));
                let free_test = code::is_lcd_free_test(g)?;
                if free_test != lcd {
                    return Err(CliError::compute("free-code LCD test disagrees with the hull"));
                }
            }
            oracle_check(&mut out, opts, "hull", &c.hull(), Brute::Hull(c))?;
        }
        ["distance", name] => {
            let c = doc.code(name)?;
            let d = c.min_distance(caps)?;
            let _ = writeln!(out, "code {name}");
            match d {
                Some(MinDistance::Exact(d)) => {
                    let _ = writeln!(out, "d = {d}");
                }
                other => {
                    let _ = writeln!(out, "{}", distance_text(other, caps));
                }
            }
            if opts.oracle {
                match oracle::brute_min_distance(c.ring(), c.len(), &c.generators(), oracle::DEFAULT_CAP) {
                    Ok(b) => {
                        if d.and_then(|d| d.exact()) != b {
                            return Err(CliError::compute("oracle: distance disagrees with enumeration"));
                        }
                        let _ = writeln!(out, "oracle: distance agrees");
                    }
                    Err(Error::CapExceeded { needed, .. }) => {
                        let _ = writeln!(out, "oracle: distance skipped (needs {needed} vectors)");
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        ["mpc", names @ .., mat] if !names.is_empty() => {
            let codes = names
                .iter()
                .map(|n| doc.code(n).cloned())
                .collect::<CliResult<Vec<_>>>()?;
            let a = doc.matrix(mat)?;
            mpc_report(&mut out, names, mat, MatrixProductSpec::new(codes, a.clone())?, opts)?;
        }
        ["torsion", name, i] => {
            let c = doc.code(name)?;
            let i = parse_index(i)?;
            let t = torsion::torsion_code(c, i)?;
            out.push_str(&code_block(&format!("T{i}_{name}"), &t));
            params_text(&mut out, &t, caps)?;
            let _ = writeln!(out, "lcd: {}", yes(t.is_lcd()));
        }
        ["torsion-mpc", name, variant, mat, indices] => {
            let c = doc.code(name)?;
            let variant: u8 = variant
                .parse()
                .map_err(|_| CliError::usage(format!("bad variant {variant:?}")))?;
            let variant = TorsionVariant::from_number(variant)?;
            let a = doc.matrix(mat)?.reduce_mod_gamma()?;
            let idx = indices.split(',').map(parse_index).collect::<CliResult<Vec<u32>>>()?;
            let built = torsion::torsion_lcd_mpc(c, &idx, &a, variant, caps)?;
            let _ = writeln!(out, "variant {} indices {indices}", variant.number());
            out.push_str(&code_block("mpc", &built.code));
            params_text(&mut out, &built.code, caps)?;
            let _ = writeln!(out, "lcd: {}", yes(built.code.is_lcd()));
            match built.claim {
                DistanceClaim::None => {
                    let _ = writeln!(out, "distance claim: none (matrix not NSC)");
                }
                DistanceClaim::Bound(b) | DistanceClaim::Exact(b) => {
                    let kind = if matches!(built.claim, DistanceClaim::Exact(_)) { "=" } else { ">=" };
                    let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
                    let _ = writeln!(out, "distance claim: d {kind} {}", show(b.code));
                    let _ = writeln!(out, "dual distance claim: d {kind} {}", show(b.dual));
                }
            }
        }
        ["verify", suite] => {
            let reports = if *suite == "all" {
                suites::run_all()
            } else {
                vec![suites::run_suite(suite).ok_or_else(|| {
                    CliError::usage(format!(
                        "unknown suite {suite:?}; known: all {}",
                        suites::SUITE_NAMES.join(" ")
                    ))
                })?]
            };
            for r in &reports {
                out.push_str(&r.to_string());
            }
            if reports.iter().any(|r| !r.passed()) {
                return Err(CliError::compute(format!("{out}property suite failed")));
            }
        }
        [] => return Err(CliError::usage("no command given")),
        other => return Err(CliError::usage(format!("unknown command {:?}", other.join(" ")))),
    }
    Ok(out)
}

fn mpc_report(out: &mut String, names: &[&str], mat: &str, spec: MatrixProductSpec, opts: RunOptions) -> CliResult<()> {
    let caps = opts.caps;
    let a = spec.matrix();
    let _ = writeln!(out, "mpc [{}] {mat}", names.join(" "));
    let _ = write!(out, "AA^t:\n{}", a.gram());
    let built = spec.build();
    params_text(out, &built, caps)?;

    let report = spec.conditions()?;
    let labels = [
        "dual push and full row rank",
        "[C]A = [C]",
        "AAᵗ diagonal-units",
        "AAᵗ antidiagonal-units, palindromic duals",
        "upper triangular, nested",
        "lower triangular, reverse nested",
        "non-singular, equal codes",
    ];
    for (k, (label, flag)) in labels.iter().zip(report.numbered()).enumerate() {
        let _ = writeln!(out, "condition {} ({label}): {}", k + 1, yes(flag));
    }
    match report.s1_orthogonal {
        Some(s1) => {
            let _ = writeln!(out, "orthogonal split: s1 = {s1}");
        }
        None => {
            let _ = writeln!(out, "orthogonal split: none");
        }
    }
    let _ = writeln!(out, "inputs lcd: {}", yes(report.inputs_lcd));
    let _ = writeln!(out, "lcd: {}", yes(report.mpc_lcd));
    if !report.consistent() {
        return Err(CliError::compute("LCD status contradicts a fired condition"));
    }

    let (hull, prov) = spec.hull()?;
    let prov = match prov {
        HullProvenance::DualPushFrr => "dual push",
        HullProvenance::Identity => "identity",
        HullProvenance::Direct => "direct",
    };
    let _ = writeln!(out, "hull: {} codewords (via {prov})", hull.cardinality());

    if a.is_square() && linalg::is_nonsingular(a)? {
        let agrees = spec.dual_by_theorem()? == built.dual();
        let _ = writeln!(out, "dual via (A^-1)^t: {}", if agrees { "agrees" } else { "DIFFERS" });
        if !agrees {
            return Err(CliError::compute("dual identity failed"));
        }
        if let Some(r) = spec.lemma4_reduce()? {
            let _ = writeln!(out, "reduces to direct sum: {}", yes(r == built));
        }
        if let Some(s1) = report.s1_orthogonal {
            let c1 = spec.codes()[0].clone();
            let c2 = spec.codes()[s1].clone();
            let _ = writeln!(out, "orthogonal hull bound: {}", yes(spec.orth_hull_bound(s1, &c1, &c2)?));
        }
    }
    if spec.ring().is_field() && a.is_square() && linalg::is_nsc(a).unwrap_or(false) {
        let b = spec.distance_bounds(caps)?;
        let kind = if b.exact() { "=" } else { ">=" };
        let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(out, "distance from inputs: d {kind} {}", show(b.code));
        let _ = writeln!(out, "dual distance from inputs: d {kind} {}", show(b.dual));
    }
    oracle_check(out, opts, "mpc dual", &built.dual(), Brute::Dual(&built))?;
    Ok(())
}

/// Runs every `run` line of a document, each report headed by its command.
pub fn run_document(doc: &SpecDocument, opts: RunOptions) -> CliResult<String> {
    let mut out = String::new();
    for cmd in &doc.commands {
        let _ = writeln!(out, "> {}", cmd.join(" "));
        out.push_str(&run_command(doc, cmd, opts)?);
    }
    Ok(out)
}
