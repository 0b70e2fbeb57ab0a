//! Golden rows for degrees 4 to 9 and the comparison against the computed
//! classification.
//!
//! Data format (`data/golden.txt`), one record per line:
//!
//! ```text
//! d; m; a; b; i,j,k i,j,k ...  # citation
//! ```
//!
//! Monomials are exponent triples of `X, Y, Z`. Generic binary-form slots are
//! expanded into all their monomials. Lines starting with `#` are comments.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::canonical::canonical_pair;
use crate::classify::{classify, LocusRecord, RecordStatus, VerifyOptions};
use crate::error::{Error, Result};
use crate::normal_form::Monomial;
use crate::types::CyclicType;
use crate::verification::admits_diagonal;

pub const GOLDEN_DATA: &str = include_str!("../data/golden.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenRow {
    pub degree: u64,
    pub ty: CyclicType,
    pub support: BTreeSet<Monomial>,
    pub citation: String,
}

impl GoldenRow {
    /// Does the support have one character under the row's type?
    pub fn is_invariant(&self) -> bool {
        admits_diagonal(&self.support, self.ty)
    }

    pub fn key(&self) -> (CyclicType, Vec<Monomial>) {
        canonical_pair(self.ty, &self.support)
    }
}

fn parse_line(line: &str, lineno: usize) -> Result<Option<GoldenRow>> {
    let (body, citation) = match line.find('#') {
        Some(pos) => (&line[..pos], line[pos + 1..].trim()),
        None => (line, ""),
    };
    let body = body.trim();
    if body.is_empty() {
        return Ok(None);
    }
    let err = |msg: &str| Error::Golden(format!("line {lineno}: {msg}"));
    let fields: Vec<&str> = body.split(';').map(str::trim).collect();
    if fields.len() != 5 {
        return Err(err("expected five ';'-separated fields"));
    }
    let num = |s: &str| s.parse::<u64>().map_err(|_| err(&format!("bad integer {s:?}")));
    let (d, m, a, b) = (num(fields[0])?, num(fields[1])?, num(fields[2])?, num(fields[3])?);
    let ty = CyclicType::new(m, a, b).map_err(|e| err(&e.to_string()))?;
    let mut support = BTreeSet::new();
    for tok in fields[4].split_whitespace() {
        let e: Vec<u64> = tok.split(',').map(num).collect::<Result<_>>()?;
        if e.len() != 3 || e.iter().sum::<u64>() != d {
            return Err(err(&format!("bad monomial {tok:?}")));
        }
        if !support.insert(Monomial::new(e[0], e[1], e[2])) {
            return Err(err(&format!("repeated monomial {tok:?}")));
        }
    }
    Ok(Some(GoldenRow {
        degree: d,
        ty,
        support,
        citation: citation.to_string(),
    }))
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if let Some(row) = parse_line(line, n + 1)? {
            out.push(row);
        }
    }
    Ok(out)
}

/// The golden rows of degree `d` in table order.
pub fn golden(d: u64) -> Result<Vec<GoldenRow>> {
    if !(4..=9).contains(&d) {
        return Err(Error::InvalidArgument(format!(
            "golden data covers degrees 4 to 9, not {d}"
        )));
    }
    Ok(parse_golden(GOLDEN_DATA)?
        .into_iter()
        .filter(|r| r.degree == d)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DiffEntry {
    /// A golden row with no computed class of the same canonical type.
    Missing { row: String, ty: CyclicType },
    /// A computed, tabulated class matching no golden row.
    Extra { ty: CyclicType, form: String },
    /// Same canonical type, different support (in canonical coordinates).
    SupportMismatch {
        row: String,
        ty: CyclicType,
        only_golden: Vec<Monomial>,
        only_computed: Vec<Monomial>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct UntabulatedNote {
    pub ty: CyclicType,
    pub status: RecordStatus,
    pub form: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiffReport {
    pub degree: u64,
    pub golden_rows: usize,
    pub matched: usize,
    pub entries: Vec<DiffEntry>,
    /// Computed classes excluded from the table, with the reason.
    pub excluded: Vec<UntabulatedNote>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn row_label(r: &GoldenRow) -> String {
    if r.citation.is_empty() {
        r.ty.to_string()
    } else {
        r.citation.clone()
    }
}

/// Compare golden rows with classified records on (canonical type, support).
pub fn compare(d: u64, rows: &[GoldenRow], records: &[LocusRecord]) -> DiffReport {
    let plain = crate::normal_form::Format::Plain;
    let render = |r: &LocusRecord| r.orbit.form.render(plain, Default::default());
    let mut computed: BTreeMap<(CyclicType, Vec<Monomial>), &LocusRecord> = BTreeMap::new();
    let mut excluded = Vec::new();
    for r in records {
        if r.status == RecordStatus::Tabulated {
            computed.insert((r.orbit.representative, r.orbit.support_key.clone()), r);
        } else {
            excluded.push(UntabulatedNote {
                ty: r.orbit.form.ty,
                status: r.status,
                form: render(r),
            });
        }
    }
    let mut unmatched_rows = Vec::new();
    let mut matched = 0;
    for row in rows {
        if computed.remove(&row.key()).is_some() {
            matched += 1;
        } else {
            unmatched_rows.push(row);
        }
    }
    let mut entries = Vec::new();
    for row in unmatched_rows {
        let (ty, key) = row.key();
        let partner = computed
            .keys()
            .filter(|(t, _)| *t == ty)
            .max_by_key(|(_, s)| s.iter().filter(|m| key.contains(m)).count())
            .cloned();
        match partner {
            Some(k) => {
                computed.remove(&k);
                let (g, c): (BTreeSet<_>, BTreeSet<_>) = (key.iter().copied().collect(), k.1.iter().copied().collect());
                entries.push(DiffEntry::SupportMismatch {
                    row: row_label(row),
                    ty,
                    only_golden: g.difference(&c).copied().collect(),
                    only_computed: c.difference(&g).copied().collect(),
                });
            }
            None => entries.push(DiffEntry::Missing {
                row: row_label(row),
                ty: row.ty,
            }),
        }
    }
    for r in computed.values() {
        entries.push(DiffEntry::Extra {
            ty: r.orbit.form.ty,
            form: render(r),
        });
    }
    DiffReport {
        degree: d,
        golden_rows: rows.len(),
        matched,
        entries,
        excluded,
    }
}

/// Classify degree `d` and compare with its golden rows.
pub fn golden_check(d: u64, opts: &VerifyOptions) -> Result<DiffReport> {
    let rows = golden(d)?;
    let records = classify(d, opts)?;
    Ok(compare(d, &rows, &records))
}
