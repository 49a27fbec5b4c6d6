use std::path::Path;

use lefschetz::{
    filling_report, plumbing_boundary_h1, verify_relator, Base, Error, Fibration, PlumbingGraph,
    PlumbingVertex,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::report::{GroupSummary, Report};
use crate::wordfile::{ParseError, ParseOptions, WordFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse { .. } => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Precondition(e.to_string())
    }
}

fn base_name(b: Base) -> String {
    match b {
        Base::Disk => "disk",
        Base::Sphere => "sphere",
    }
    .to_string()
}

/// Report for the Stein filling `S_g(n)`.
pub fn paper(g: usize, n: u64) -> Result<Report, CliError> {
    let r = filling_report(g, n)?;
    let mut notes = r.notes.clone();
    notes.push(format!("H1 of the closed fibration X_g(n): {}", r.closed_h1));
    notes.push(format!("H1 of the boundary plumbing M_g: {}", r.boundary_h1));
    notes.push("sigma and section_square refer to the closed fibration X_g(n)".to_string());
    Ok(Report {
        genus: Some(g),
        base: Some(base_name(Base::Disk)),
        length: Some(r.factorization_length),
        h1: Some(GroupSummary::from(&r.h1)),
        chi: Some(r.euler_characteristic),
        sigma: Some(r.signature),
        relator_ok: Some(r.relator_ok),
        separating_count: Some(r.separating_count),
        section_square: r.section_square,
        notes,
    })
}

/// Reports for `n` in `lo..=hi`, computed in parallel, in order of `n`.
pub fn sweep(g: usize, lo: u64, hi: u64) -> Result<Vec<Report>, CliError> {
    if lo > hi {
        return Err(CliError::Usage(format!("empty sweep range {lo}..{hi}")));
    }
    (lo..=hi).into_par_iter().map(|n| paper(g, n)).collect()
}

pub fn parse_sweep(range: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("sweep range must look like N1..N2, got {range:?}"));
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

pub fn load_word_file(path: &Path, options: ParseOptions) -> Result<WordFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    WordFile::parse(&text, options).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// Invariants of the fibration described by a word file.
///
/// A disk base carries a fiber with one boundary component; a sphere base a
/// closed fiber, and then the word must be a relator.
pub fn word(wf: &WordFile) -> Result<Report, CliError> {
    let fib = match wf.base {
        Base::Disk => Fibration::over_disk(&wf.word, 1)?,
        Base::Sphere => Fibration::over_sphere(&wf.word, wf.section_square)?,
    };
    let relator = verify_relator(&wf.word);
    let mut notes = wf.warnings.clone();
    let h1 = match fib.h1() {
        Ok(h) => Some(GroupSummary::from(&h)),
        Err(Error::MissingSection) => {
            notes.push("H1 over the sphere needs a `section <k>` line; omitted".to_string());
            None
        }
        Err(e) => return Err(e.into()),
    };
    let sigma = if relator.is_identity {
        Some(fib.signature()?)
    } else {
        notes.push("monodromy is not the identity; signature omitted".to_string());
        None
    };
    if relator.is_identity {
        notes.push(relator.caveat.to_string());
    }
    Ok(Report {
        genus: Some(wf.genus()),
        base: Some(base_name(wf.base)),
        length: Some(fib.cycles().len()),
        h1,
        chi: Some(fib.euler_characteristic()),
        sigma,
        relator_ok: Some(relator.is_identity),
        separating_count: Some(fib.separating_count()),
        section_square: wf.section_square,
        notes,
    })
}

/// Relator check alone. Not being a relator is reported as a precondition failure.
pub fn verify(wf: &WordFile) -> Result<Report, CliError> {
    let r = verify_relator(&wf.word);
    let mut notes = wf.warnings.clone();
    notes.push(r.caveat.to_string());
    let report = Report {
        genus: Some(wf.genus()),
        base: Some(base_name(wf.base)),
        length: Some(r.length),
        relator_ok: Some(r.is_identity),
        separating_count: Some(r.separating_count),
        section_square: wf.section_square,
        notes,
        ..Report::default()
    };
    if r.is_identity {
        Ok(report)
    } else {
        Err(CliError::Precondition(format!(
            "word is not a relator: monodromy on H1 is\n{}",
            matrix_text(&r.matrix.matrix().entries_rows())
        )))
    }
}

fn matrix_text(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    rows.iter()
        .map(|r| r.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

trait EntriesRows {
    fn entries_rows(&self) -> Vec<Vec<String>>;
}

impl EntriesRows for lefschetz::IntegerMatrix {
    fn entries_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows())
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect()
    }
}

pub fn parse_vertex(s: &str) -> Result<PlumbingVertex, CliError> {
    let bad = || CliError::Usage(format!("vertex must look like GENUS:EULER, got {s:?}"));
    let (g, e) = s.split_once(':').ok_or_else(bad)?;
    Ok(PlumbingVertex {
        genus: g.trim().parse().map_err(|_| bad())?,
        euler_number: e.trim().parse().map_err(|_| bad())?,
    })
}

pub fn parse_edge(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("edge must look like I-J, got {s:?}"));
    let (a, b) = s.split_once('-').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

pub fn plumbing(vertices: Vec<PlumbingVertex>, edges: Vec<(usize, usize)>) -> Result<Report, CliError> {
    let p = PlumbingGraph::new(vertices, edges)?;
    let h1 = plumbing_boundary_h1(&p)?;
    let q = p.intersection_matrix();
    Ok(Report {
        h1: Some(GroupSummary::from(&h1)),
        notes: vec![
            format!("boundary H1: {h1}"),
            format!(
                "intersection matrix: [{}]",
                q.entries_rows()
                    .iter()
                    .map(|r| format!("[{}]", r.join(", ")))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        ],
        ..Report::default()
    })
}
