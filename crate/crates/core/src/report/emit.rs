use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::catalog::StructureId;
use crate::homology::{SliceConstraint, SliceRecord};
use crate::{Error, Result};

use super::{Format, HomologyReport};

/// One line of the CSV table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub structure: String,
    pub n: usize,
    pub form_degree: usize,
    /// Space-separated exponents for multidegree slices, empty otherwise.
    pub m: String,
    pub l: String,
    /// Exact weight, or `<=w` for truncations.
    pub weight: String,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub homology_dim: usize,
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn csv_row(rec: &SliceRecord) -> CsvRow {
    let (m, l, weight) = match &rec.constraint {
        SliceConstraint::FixedMultidegree(md) => {
            let ambient = StructureId::parse(&rec.structure, rec.n).map_or(Ambient::cotangent(rec.n), |id| id.ambient());
            (join(&md.m), join(&md.l), md.weight(ambient).0.to_string())
        }
        SliceConstraint::WeightExactly(w) => (String::new(), String::new(), w.to_string()),
        SliceConstraint::WeightAtMost(w) => (String::new(), String::new(), format!("<={w}")),
    };
    CsvRow {
        structure: rec.structure.clone(),
        n: rec.n,
        form_degree: rec.form_degree,
        m,
        l,
        weight,
        dim: rec.dim,
        rank_in: rec.rank_in,
        rank_out: rec.rank_out,
        homology_dim: rec.homology_dim,
    }
}

/// Homology rows of every suite, in report order.
pub fn csv_rows(report: &HomologyReport) -> Vec<CsvRow> {
    report.results.iter().flat_map(|r| r.rows.iter().map(csv_row)).collect()
}

/// Serialized report; identical configurations give identical bytes unless
/// timing is enabled.
pub fn emit_report(report: &HomologyReport, format: Format) -> Result<Vec<u8>> {
    let io = |e: &dyn std::fmt::Display| Error::Io { path: "<report>".into(), message: e.to_string() };
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report).map_err(|e| io(&e))?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let rows = csv_rows(report);
            if rows.is_empty() {
                w.write_record(["structure", "n", "form_degree", "m", "l", "weight", "dim", "rank_in", "rank_out", "homology_dim"])
                    .map_err(|e| io(&e))?;
            }
            for row in rows {
                w.serialize(row).map_err(|e| io(&e))?;
            }
            w.into_inner().map_err(|e| io(&e))
        }
    }
}

pub fn write_report(report: &HomologyReport, format: Format, path: &Path) -> Result<()> {
    let bytes = emit_report(report, format)?;
    let io = |e: std::io::Error| Error::Io { path: path.display().to_string(), message: e.to_string() };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io)?;
    }
    std::fs::write(path, bytes).map_err(io)
}
