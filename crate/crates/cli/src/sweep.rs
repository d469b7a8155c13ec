//! Grid sweep to CSV.
//!
//! Grid points are evaluated in parallel and collected in `(kind, m, n)`
//! order, so the output is byte-identical regardless of thread count.

use polyhex_core::{
    build_nanotube, edge_partition, index_from_partition, Index, IndexError, NanotubeKind,
    NanotubeSpec,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::range::GridRange;
use crate::record::float_decimal;

pub const CSV_HEADER: [&str; 10] = [
    "kind", "m", "n", "vertices", "edges", "azi_num", "azi_den", "azi", "randic", "abc",
];

/// One CSV row. Unrequested indices are left empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub kind: &'static str,
    pub m: u32,
    pub n: u32,
    pub vertices: usize,
    pub edges: usize,
    pub azi_num: Option<i128>,
    pub azi_den: Option<i128>,
    pub azi: Option<String>,
    pub randic: Option<String>,
    pub abc: Option<String>,
}

fn row(spec: &NanotubeSpec, indices: &[Index]) -> Result<SweepRow, IndexError> {
    let g = build_nanotube(spec);
    let p = edge_partition(&g);
    let mut out = SweepRow {
        kind: spec.kind().name(),
        m: spec.m(),
        n: spec.n(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        azi_num: None,
        azi_den: None,
        azi: None,
        randic: None,
        abc: None,
    };
    for &index in indices {
        let v = index_from_partition(&p, &index)?;
        match index {
            Index::Azi => {
                let q = v.exact.expect("azi is exact");
                out.azi_num = Some(q.numerator());
                out.azi_den = Some(q.denominator());
                out.azi = Some(q.to_decimal_string(40));
            }
            Index::Randic => out.randic = Some(float_decimal(v.approx)),
            Index::Abc => out.abc = Some(float_decimal(v.approx)),
        }
    }
    Ok(out)
}

/// Rows for every `(kind, m, n)` on the grid, sorted by kind, then `m`,
/// then `n`. Fails on the first invalid grid point.
pub fn sweep_rows(
    kinds: &[NanotubeKind],
    m_range: GridRange,
    n_range: GridRange,
    indices: &[Index],
) -> anyhow::Result<Vec<SweepRow>> {
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();
    let mut specs = Vec::new();
    for kind in kinds {
        for m in m_range.as_range() {
            for n in n_range.as_range() {
                specs.push(NanotubeSpec::new(kind, m, n)?);
            }
        }
    }
    let rows = specs
        .par_iter()
        .map(|s| row(s, indices))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(rows)
}

/// The sweep as CSV text with the fixed header.
pub fn sweep_csv(rows: &[SweepRow]) -> anyhow::Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.serialize(r)?;
    }
    Ok(w.into_inner()?)
}
