//! Command-line front end. Results go to `out`, diagnostics to `err`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::classify::{classify, RecordJson, RecordStatus, VerifyOptions};
use crate::error::{Error, Result};
use crate::groups::{check_record, large_locus, very_large_records, LargeKind, LargeLocus, SpecialLocusRecord};
use crate::normal_form::{build_form, Format, NormalForm, RenderOptions};
use crate::tables::{golden_check, DiffEntry, DiffReport};
use crate::types::{enumerate_candidates, CyclicType};
use crate::verification::{locus_nonempty, LocusStatus, DEFAULT_PRIMES, DEFAULT_TRIALS};

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-plane",
    version,
    about = "Cyclic automorphism types of smooth plane curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of types with a smooth member.
    Enum(Common),
    /// Normal form(s) of one type.
    Form(TypeArgs),
    /// Search for a smooth member of one type's family.
    Verify(TypeArgs),
    /// The four loci with a very large automorphism, with verified groups.
    Special(Common),
    /// The locus with an automorphism of order l(d-1), ld or l(d-2).
    Large(LargeArgs),
    /// Compare the computed table with the golden rows (degrees 4 to 9).
    GoldenCheck(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long)]
    pub degree: u64,
    /// plain, latex or json
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    pub format: Format,
    /// Comma-separated primes used for smoothness checks
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PRIMES)]
    pub primes: Vec<u64>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl Common {
    fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            primes: self.primes.clone(),
            trials: self.trials,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
}

#[derive(Debug, Args)]
pub struct LargeArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub ell: u64,
    /// d-1, d or d-2
    #[arg(long, value_parser = parse_kind)]
    pub kind: LargeKind,
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> std::result::Result<LargeKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parse `argv` and run; returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output types serialize")
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Enum(c) => cmd_enum(c, out),
        Command::Form(t) => cmd_form(t, out),
        Command::Verify(t) => cmd_verify(t, out),
        Command::Special(c) => cmd_special(c, out),
        Command::Large(l) => cmd_large(l, out),
        Command::GoldenCheck(c) => cmd_golden(c, out),
    }
}

fn render_form(nf: &NormalForm, format: Format) -> String {
    match format {
        Format::Latex => format!("${}$", nf.render(Format::Latex, RenderOptions::default())),
        _ => nf.render(Format::Plain, RenderOptions::default()),
    }
}

#[derive(Serialize)]
struct EnumJson {
    degree: u64,
    records: Vec<RecordJson>,
}

fn cmd_enum(c: &Common, out: &mut dyn Write) -> Result<bool> {
    let records = classify(c.degree, &c.verify_options())?;
    let text = match c.format {
        Format::Json => json(&EnumJson {
            degree: c.degree,
            records: records.iter().map(RecordJson::from).collect(),
        }),
        Format::Plain => {
            let rows: Vec<(String, String)> = records
                .iter()
                .filter(|r| r.status == RecordStatus::Tabulated)
                .map(|r| (r.orbit.display_type().to_string(), render_form(r.form(), Format::Plain)))
                .collect();
            let w = rows.iter().map(|(t, _)| t.len()).max().unwrap_or(0);
            let mut s = format!("degree {}: {} types\n", c.degree, rows.len());
            for (t, f) in rows {
                s.push_str(&format!("{t:<w$}  {f}\n"));
            }
            s.trim_end().to_string()
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{|c|l|}\n\\hline\nType $m,(a,b)$ & $F(X,Y,Z)$ \\\\\n\\hline\n");
            for r in records.iter().filter(|r| r.status == RecordStatus::Tabulated) {
                s.push_str(&format!(
                    "${}$ & {} \\\\\n",
                    r.orbit.display_type(),
                    render_form(r.form(), Format::Latex)
                ));
            }
            s.push_str("\\hline\n\\end{tabular}");
            s
        }
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(true)
}

fn forms_for(t: &TypeArgs) -> Result<Vec<NormalForm>> {
    let d = t.common.degree;
    let ty = CyclicType::new(t.m, t.a, t.b)?;
    let forms: Vec<NormalForm> = enumerate_candidates(d)?
        .iter()
        .filter(|c| c.ty == ty)
        .map(build_form)
        .collect::<Result<_>>()?;
    if forms.is_empty() {
        return Err(Error::InvalidArgument(format!("{ty} is not a type of degree {d}")));
    }
    Ok(forms)
}

fn cmd_form(t: &TypeArgs, out: &mut dyn Write) -> Result<bool> {
    let forms = forms_for(t)?;
    let text = match t.common.format {
        Format::Json => json(&forms),
        f => forms
            .iter()
            .map(|nf| match f {
                Format::Latex => render_form(nf, f),
                _ => format!("{} [{}]: {}", nf.ty, nf.case.label(), render_form(nf, f)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(true)
}

#[derive(Serialize)]
struct VerdictJson {
    ty: CyclicType,
    case: crate::types::CaseId,
    status: LocusStatus,
    trials: usize,
    witness_prime: Option<u64>,
    witness_seed: Option<u64>,
    witness: Option<Vec<(crate::normal_form::Monomial, u64)>>,
}

fn cmd_verify(t: &TypeArgs, out: &mut dyn Write) -> Result<bool> {
    let c = &t.common;
    let mut found = false;
    let mut rows = Vec::new();
    for nf in forms_for(t)? {
        let v = locus_nonempty(&nf, c.trials, &c.primes, c.seed)?;
        found |= v.status == LocusStatus::SmoothWitnessFound;
        rows.push(VerdictJson {
            ty: nf.ty,
            case: nf.case,
            status: v.status,
            trials: v.trials,
            witness_prime: v.witness.as_ref().map(|w| w.p()),
            witness_seed: v.witness_seed,
            witness: v.witness.as_ref().map(|w| w.terms().collect()),
        });
    }
    let text = match c.format {
        Format::Json => json(&rows),
        _ => rows
            .iter()
            .map(|r| {
                let status = serde_json::to_value(r.status).expect("serializes");
                let mut s = format!("{} [{}]: {}", r.ty, r.case.label(), status.as_str().unwrap_or_default());
                if let (Some(p), Some(seed)) = (r.witness_prime, r.witness_seed) {
                    s.push_str(&format!(" (p = {p}, seed = {seed})"));
                } else {
                    s.push_str(&format!(" ({} trials)", r.trials));
                }
                s
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(found)
}

#[derive(Serialize)]
struct CheckedRecord<'a> {
    #[serde(flatten)]
    record: &'a SpecialLocusRecord,
    check: crate::groups::RecordCheck,
}

fn render_record(r: &SpecialLocusRecord, check: &crate::groups::RecordCheck, format: Format) -> String {
    let ell = r.ell.map_or(String::new(), |l| format!(", l = {l}"));
    let mut s = format!("kind {} (d = {}{ell}): {}\n", r.kind, r.degree, r.curve.ty);
    s.push_str(&format!("  curve: {}\n", render_form(&r.curve, format)));
    s.push_str(&format!("  group: {}\n", r.group));
    s.push_str(&format!(
        "  check: closure {}, relations {}, preserved {}\n",
        check.closure_order,
        if check.relations_hold { "hold" } else { "FAIL" },
        if check.elements_preserve { "yes" } else { "NO" }
    ));
    for b in &r.special_branches {
        s.push_str(&format!(
            "  branch: {} -> {} (order {})\n",
            b.condition, b.group, b.order
        ));
    }
    s.push_str(&format!("  note: {}", r.exceptions_note));
    s
}

fn emit_records(records: &[SpecialLocusRecord], format: Format, out: &mut dyn Write) -> Result<bool> {
    let mut ok = true;
    let mut checked = Vec::new();
    for r in records {
        let c = check_record(r)?;
        ok &= c.passes(r.group.order);
        checked.push(CheckedRecord { record: r, check: c });
    }
    let text = match format {
        Format::Json => json(&checked),
        f => checked
            .iter()
            .map(|c| render_record(c.record, &c.check, f))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(ok)
}

fn cmd_special(c: &Common, out: &mut dyn Write) -> Result<bool> {
    emit_records(&very_large_records(c.degree)?, c.format, out)
}

fn cmd_large(l: &LargeArgs, out: &mut dyn Write) -> Result<bool> {
    match large_locus(l.common.degree, l.ell, l.kind)? {
        LargeLocus::Record(r) => emit_records(std::slice::from_ref(&*r), l.common.format, out),
        empty @ LargeLocus::Empty { .. } => {
            let text = match (&empty, l.common.format) {
                (_, Format::Json) => json(&empty),
                (
                    LargeLocus::Empty {
                        kind,
                        degree,
                        ell,
                        empty_locus,
                    },
                    _,
                ) => {
                    format!("kind l({kind}) with d = {degree}, l = {ell}: empty locus ({empty_locus})")
                }
                _ => unreachable!(),
            };
            writeln!(out, "{text}").map_err(io)?;
            Ok(true)
        }
    }
}

fn render_diff(rep: &DiffReport) -> String {
    let mut s = format!(
        "degree {}: {} golden rows, {} matched, {} differences\n",
        rep.degree,
        rep.golden_rows,
        rep.matched,
        rep.entries.len()
    );
    for e in &rep.entries {
        let line = match e {
            DiffEntry::Missing { row, ty } => format!("missing  {ty}  ({row})"),
            DiffEntry::Extra { ty, form } => format!("extra    {ty}  {form}"),
            DiffEntry::SupportMismatch {
                row,
                ty,
                only_golden,
                only_computed,
            } => {
                let list =
                    |v: &[crate::normal_form::Monomial]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ");
                format!(
                    "support  {ty}  ({row}): golden only [{}], computed only [{}]",
                    list(only_golden),
                    list(only_computed)
                )
            }
        };
        s.push_str(&line);
        s.push('\n');
    }
    for n in &rep.excluded {
        let status = serde_json::to_value(n.status).expect("serializes");
        s.push_str(&format!(
            "excluded {}  {}  {}\n",
            status.as_str().unwrap_or_default(),
            n.ty,
            n.form
        ));
    }
    s.trim_end().to_string()
}

fn cmd_golden(c: &Common, out: &mut dyn Write) -> Result<bool> {
    let rep = golden_check(c.degree, &c.verify_options())?;
    let text = match c.format {
        Format::Json => json(&rep),
        _ => render_diff(&rep),
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(rep.is_empty())
}
