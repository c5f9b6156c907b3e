//! End-to-end pipeline for one or more `s` values and the reports it emits.
//!
//! All counts and h-vector entries are serialized as decimal strings. Small
//! structural integers (`s`, indices, codegree, coordinates) stay numeric.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{self, CountMode, EhrhartCache, EhrhartTable};
use crate::cycle::{lucas, CycleInstance};
use crate::error::{Error, Result};
use crate::hvector::{self, HVector};
use crate::polytope::{self, FacetReport, ReflexivityReport, RowKind, VertexSet};
use crate::sequence::{self, Verdict};

pub const DEFAULT_MAX_S: u32 = 10;

/// Largest stable-set count for which the geometry report enumerates vertices.
pub const GEOMETRY_VERTEX_LIMIT: u128 = 100_000;

/// h-vectors stated in the literature for `s = 1..=5`. The values for
/// `s = 1, 2` disagree with what the counting engines produce; they are kept
/// here so reports can flag the difference.
pub fn reference_h_vector(s: u32) -> Option<&'static [u64]> {
    match s {
        1 => Some(&[1, 1]),
        2 => Some(&[1, 6, 6, 1]),
        3 => Some(&[1, 21, 84, 85, 21, 1]),
        4 => Some(&[1, 66, 744, 2305, 2304, 745, 66, 1]),
        5 => Some(&[1, 187, 5049, 37247, 96448, 96449, 37246, 5050, 187, 1]),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub max_s: u32,
    /// Cross-check counts with the brute-force engine where the budget allows.
    pub oracle: bool,
    pub budget: u128,
    /// Include wall-clock timing in reports (breaks byte stability).
    pub timing: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            max_s: DEFAULT_MAX_S,
            oracle: false,
            budget: counting::DEFAULT_BRUTEFORCE_BUDGET,
            timing: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// A published h-vector exists for this `s`.
    Reference,
    Extrapolation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub o_sequence: Verdict,
    pub flawless: Verdict,
    pub symmetric: Verdict,
    pub conjecture_shape: Verdict,
    /// `None` when the interior point at the codegree is not unique.
    pub gorenstein_via_reflexivity: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetSummary {
    pub row: usize,
    pub is_facet: bool,
    pub tight_vertex_count: usize,
    pub tight_affine_dim: Option<usize>,
}

impl From<&FacetReport> for FacetSummary {
    fn from(f: &FacetReport) -> Self {
        Self {
            row: f.row,
            is_facet: f.is_facet,
            tight_vertex_count: f.tight_vertex_count,
            tight_affine_dim: f.tight_affine_dim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceComparison {
    pub h_vector: Vec<String>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    /// Largest `n` whose counts were recomputed by brute force, if any.
    pub checked_up_to: Option<usize>,
    pub agrees: bool,
    /// h-vector from the brute-force table, when it reached `n = 2s + 1`.
    pub h_vector: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub s: u32,
    pub regime: Regime,
    pub h_vector: Vec<String>,
    /// `H(0..=2s+1)`.
    pub hilbert_prefix: Vec<String>,
    /// `I(1)`, `I(2)`, `I(3)`.
    pub interior_counts: Vec<String>,
    pub codegree: Option<u64>,
    pub interior_point: Option<Vec<i64>>,
    pub rank_facet: FacetSummary,
    /// Rank-row right-hand side of `cQ - p` after making its normal primitive.
    pub reduced_rank_rhs: Option<String>,
    pub verdicts: Verdicts,
    pub reference: Option<ReferenceComparison>,
    pub oracle: Option<OracleSummary>,
    pub warnings: Vec<String>,
    /// Symmetry and reflexivity verdicts agree, and the oracle (if run) agrees.
    pub consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

fn strings(v: &[BigUint]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn paren(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

/// Runs every count, transform, and check for one `s`.
///
/// Errors of kind [`Error::Inconsistent`] mean an internal cross-check
/// failed (negative or out-of-range h-vector entry, round trip, reciprocity).
/// Disagreement between the symmetry and reflexivity criteria, or between
/// the engines, is reported through [`VerdictReport::consistent`].
pub fn run_pipeline(
    s: u32,
    opts: &PipelineOptions,
    cache: Option<&EhrhartCache>,
) -> Result<VerdictReport> {
    if s > opts.max_s {
        return Err(Error::OutOfRange(format!(
            "s = {s} exceeds the configured maximum {}",
            opts.max_s
        )));
    }
    let started = Instant::now();
    let inst = CycleInstance::new(s)?;
    let max_n = 2 * s as usize + 1;
    let table = counting::ehrhart_table(&inst, max_n, cache)?;
    let h = hvector::h_vector(&table)?;
    hvector::check_round_trip(&table, &h)?;
    hvector::check_reciprocity(&table, &h)?;

    let entries = h.entries();
    let h_strings = h.to_strings();
    let verdicts_base = (
        sequence::macaulay_check(entries)?,
        sequence::flawless_check(entries),
        sequence::symmetry_check(entries),
        sequence::conjecture_check(entries, s),
    );

    let mut warnings = Vec::new();

    let vertices = VertexSet::of_q(&inst);
    let q = polytope::build_q(&inst, 1)?;
    let rank_row = q.find_row(RowKind::Rank).expect("rank row present");
    let facets = polytope::facet_report(&q, &vertices)?;
    let rank_facet = FacetSummary::from(&facets[rank_row]);

    let (codegree, interior_point, reduced_rank_rhs, gorenstein) =
        match polytope::gorenstein_via_reflexivity(&inst) {
            Ok(w) => {
                let rank = w
                    .reflexivity
                    .facets
                    .iter()
                    .find(|f| f.kind == RowKind::Rank)
                    .map(|f| {
                        if f.reduced_rhs_den == 1 {
                            f.reduced_rhs_num.to_string()
                        } else {
                            format!("{}/{}", f.reduced_rhs_num, f.reduced_rhs_den)
                        }
                    });
                let g = w.gorenstein();
                (Some(w.codegree), Some(w.interior_point), rank, Some(g))
            }
            Err(e @ Error::AmbiguousInteriorPoint { .. }) => {
                warnings.push(format!(
                    "WARN s={s}: reflexivity criterion not applied: {e}"
                ));
                (None, None, None, None)
            }
            Err(e) => return Err(e),
        };

    let reference = reference_h_vector(s).map(|r| {
        let r: Vec<String> = r.iter().map(ToString::to_string).collect();
        let matches = r == h_strings;
        if !matches {
            warnings.push(format!(
                "WARN s={s}: computed h-vector {} differs from reference {}",
                paren(&h_strings),
                paren(&r)
            ));
        }
        ReferenceComparison {
            h_vector: r,
            matches,
        }
    });

    let oracle = if opts.oracle {
        Some(run_oracle(&inst, &table, opts.budget)?)
    } else {
        None
    };
    if let Some(o) = &oracle {
        if !o.agrees {
            warnings.push(format!(
                "WARN s={s}: brute-force counts disagree with the transfer-matrix counts"
            ));
        }
    }

    let symmetric = verdicts_base.2.holds;
    let mut consistent = oracle.as_ref().is_none_or(|o| o.agrees);
    if let Some(g) = gorenstein {
        if g != symmetric {
            consistent = false;
            warnings.push(format!(
                "WARN s={s}: symmetry says {symmetric}, reflexivity says {g}"
            ));
        }
    }

    Ok(VerdictReport {
        s,
        regime: if reference.is_some() {
            Regime::Reference
        } else {
            Regime::Extrapolation
        },
        h_vector: h_strings,
        hilbert_prefix: strings(&table.closed),
        interior_counts: strings(&table.interior[1..=3]),
        codegree,
        interior_point,
        rank_facet,
        reduced_rank_rhs,
        verdicts: Verdicts {
            o_sequence: verdicts_base.0,
            flawless: verdicts_base.1,
            symmetric: verdicts_base.2,
            conjecture_shape: verdicts_base.3,
            gorenstein_via_reflexivity: gorenstein,
        },
        reference,
        oracle,
        warnings,
        consistent,
        timing_ms: opts.timing.then(|| started.elapsed().as_millis() as u64),
    })
}

fn run_oracle(inst: &CycleInstance, table: &EhrhartTable, budget: u128) -> Result<OracleSummary> {
    let mut checked_up_to = None;
    let mut closed = Vec::new();
    let mut interior = Vec::new();
    let mut agrees = true;
    for n in 0..=table.max_n() {
        let c = match counting::count_bruteforce(inst, n as u64, CountMode::Closed, budget) {
            Ok(c) => c,
            Err(Error::BudgetExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        let i = counting::count_bruteforce(inst, n as u64, CountMode::Interior, budget)?;
        agrees &= c == table.closed[n] && i == table.interior[n];
        closed.push(c);
        interior.push(i);
        checked_up_to = Some(n);
    }
    let h_vector = if checked_up_to == Some(table.max_n()) {
        let brute = EhrhartTable {
            s: inst.s(),
            closed,
            interior,
        };
        match hvector::h_vector(&brute) {
            Ok(h) => Some(h.to_strings()),
            Err(_) => {
                agrees = false;
                None
            }
        }
    } else {
        None
    };
    Ok(OracleSummary {
        checked_up_to,
        agrees,
        h_vector,
    })
}

/// [`run_pipeline`] for every `s` in `from..=to`, evaluated in parallel, in order.
pub fn run_sweep(
    from: u32,
    to: u32,
    opts: &PipelineOptions,
    cache: Option<&EhrhartCache>,
) -> Result<Vec<VerdictReport>> {
    if from == 0 || from > to {
        return Err(Error::OutOfRange(format!(
            "invalid sweep range {from}..={to}"
        )));
    }
    if to > opts.max_s {
        return Err(Error::OutOfRange(format!(
            "s = {to} exceeds the configured maximum {}",
            opts.max_s
        )));
    }
    (from..=to)
        .into_par_iter()
        .map(|s| run_pipeline(s, opts, cache))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryReport {
    pub s: u32,
    pub dim: usize,
    pub vertex_count: usize,
    pub facets: Vec<FacetReport>,
    pub codegree: u64,
    pub interior_points: Vec<Vec<i64>>,
    pub reflexivity: ReflexivityReport,
}

/// Facet table of `Q`, codegree, interior point(s), and reflexivity of `cQ - p`.
pub fn run_geometry(s: u32) -> Result<GeometryReport> {
    let inst = CycleInstance::new(s)?;
    let count = lucas(2 * s + 1);
    if count > GEOMETRY_VERTEX_LIMIT {
        return Err(Error::OutOfRange(format!(
            "s = {s} has {count} stable sets, above the geometry limit {GEOMETRY_VERTEX_LIMIT}"
        )));
    }
    let vertices = VertexSet::of_q(&inst);
    let q = polytope::build_q(&inst, 1)?;
    let facets = polytope::facet_report(&q, &vertices)?;
    let witness = polytope::gorenstein_via_reflexivity(&inst)?;
    let interior_points = counting::interior_points(&inst, witness.codegree, 16);
    Ok(GeometryReport {
        s,
        dim: polytope::dimension(&vertices),
        vertex_count: vertices.points().len(),
        facets,
        codegree: witness.codegree,
        interior_points,
        reflexivity: witness.reflexivity,
    })
}

/// Output encodings shared by the CLI subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn opt_bool(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

pub fn reports_to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn reports_to_csv(reports: &[VerdictReport]) -> String {
    let mut out = String::from(
        "s,regime,h_vector,o_sequence,flawless,symmetric,conjecture_shape,gorenstein_via_reflexivity,codegree,rank_row_facet,consistent\n",
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.s,
            match r.regime {
                Regime::Reference => "reference",
                Regime::Extrapolation => "extrapolation",
            },
            r.h_vector.join(" "),
            yes_no(r.verdicts.o_sequence.holds),
            yes_no(r.verdicts.flawless.holds),
            yes_no(r.verdicts.symmetric.holds),
            yes_no(r.verdicts.conjecture_shape.holds),
            opt_bool(r.verdicts.gorenstein_via_reflexivity),
            r.codegree.map_or("n/a".into(), |c| c.to_string()),
            yes_no(r.rank_facet.is_facet),
            yes_no(r.consistent),
        );
    }
    out
}

pub fn reports_to_markdown(reports: &[VerdictReport]) -> String {
    let mut out = String::new();
    out.push_str("| s | regime | h-vector | O-sequence | flawless | symmetric | reflexive | conjecture shape | consistent |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for r in reports {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.s,
            match r.regime {
                Regime::Reference => "reference",
                Regime::Extrapolation => "extrapolation",
            },
            paren(&r.h_vector),
            yes_no(r.verdicts.o_sequence.holds),
            yes_no(r.verdicts.flawless.holds),
            yes_no(r.verdicts.symmetric.holds),
            opt_bool(r.verdicts.gorenstein_via_reflexivity),
            yes_no(r.verdicts.conjecture_shape.holds),
            yes_no(r.consistent),
        );
    }
    for r in reports {
        let failing = [
            &r.verdicts.o_sequence,
            &r.verdicts.flawless,
            &r.verdicts.symmetric,
            &r.verdicts.conjecture_shape,
        ];
        let details: Vec<String> = failing
            .iter()
            .flat_map(|v| {
                v.witnesses
                    .iter()
                    .map(move |w| format!("- {:?} at index {}: {}", v.kind, w.index, w.explanation))
            })
            .collect();
        if details.is_empty() && r.warnings.is_empty() {
            continue;
        }
        let _ = writeln!(out, "\n### s = {}", r.s);
        let _ = writeln!(
            out,
            "H(0..={}) = {}; I(1..=3) = {}; codegree {}",
            r.hilbert_prefix.len() - 1,
            paren(&r.hilbert_prefix),
            paren(&r.interior_counts),
            r.codegree.map_or("n/a".into(), |c| c.to_string()),
        );
        for d in details {
            let _ = writeln!(out, "{d}");
        }
        for w in &r.warnings {
            let _ = writeln!(out, "{w}");
        }
    }
    out
}

pub fn geometry_to_markdown(g: &GeometryReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "s = {}: dim Q = {}, {} vertices, codegree {}, interior point(s) at codegree: {:?}",
        g.s, g.dim, g.vertex_count, g.codegree, g.interior_points
    );
    out.push_str(
        "\n| row | kind | facet | tight vertices | tight affine dim |\n|---|---|---|---|---|\n",
    );
    for f in &g.facets {
        let _ = writeln!(
            out,
            "| {} | {:?} | {} | {} | {} |",
            f.row,
            f.kind,
            yes_no(f.is_facet),
            f.tight_vertex_count,
            f.tight_affine_dim.map_or("-".into(), |d| d.to_string())
        );
    }
    out.push_str("\nfacets of cQ - p with primitive normals:\n\n| row | kind | content | reduced rhs |\n|---|---|---|---|\n");
    for f in &g.reflexivity.facets {
        let _ = writeln!(
            out,
            "| {} | {:?} | {} | {}/{} |",
            f.row, f.kind, f.content, f.reduced_rhs_num, f.reduced_rhs_den
        );
    }
    let _ = writeln!(out, "\nreflexive: {}", yes_no(g.reflexivity.reflexive));
    out
}

/// The h-vector as an [`HVector`], for callers that parsed a report.
pub fn report_h_vector(r: &VerdictReport) -> Result<HVector> {
    let entries = r
        .h_vector
        .iter()
        .map(|x| {
            BigUint::parse_bytes(x.as_bytes(), 10)
                .ok_or_else(|| Error::InvalidSequence(format!("bad entry {x:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    HVector::new(entries, 2 * r.s as usize + 2)
}
