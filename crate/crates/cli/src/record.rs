//! JSON output records.
//!
//! Exact values are written as separate integer `numerator` / `denominator`
//! fields plus a `decimal` string derived from the exact value. Float-only
//! values carry just the decimal string, rounded to 15 significant digits.

use polyhex_core::{
    build_nanotube, edge_partition, index_from_partition, DiscrepancyReport, EdgePartition, Index,
    IndexError, IndexValue, NanotubeSpec, Rational,
};
use serde::Serialize;

use crate::range::GridRange;

/// Fraction digits kept when expanding an exact value; AZI values have
/// power-of-two denominators and terminate well before this.
const EXACT_FRACTION_DIGITS: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerator: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denominator: Option<i128>,
    pub decimal: String,
}

impl From<Rational> for ExactJson {
    fn from(q: Rational) -> Self {
        ExactJson {
            numerator: Some(q.numerator()),
            denominator: Some(q.denominator()),
            decimal: q.to_decimal_string(EXACT_FRACTION_DIGITS),
        }
    }
}

impl From<IndexValue> for ExactJson {
    fn from(v: IndexValue) -> Self {
        match v.exact {
            Some(q) => q.into(),
            None => ExactJson {
                numerator: None,
                denominator: None,
                decimal: float_decimal(v.approx),
            },
        }
    }
}

/// Positional decimal rounded to 15 significant digits, trailing zeros
/// trimmed down to one fraction digit (`3.0`, `54.8316324759439`).
pub fn float_decimal(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.14e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let (int_part, frac_part) = if exp >= 0 {
        let split = exp as usize + 1;
        if split >= digits.len() {
            (
                format!("{digits}{}", "0".repeat(split - digits.len())),
                String::new(),
            )
        } else {
            (digits[..split].to_string(), digits[split..].to_string())
        }
    } else {
        (
            "0".to_string(),
            format!("{}{digits}", "0".repeat((-exp - 1) as usize)),
        )
    };
    let frac = frac_part.trim_end_matches('0');
    let frac = if frac.is_empty() { "0" } else { frac };
    format!("{sign}{int_part}.{frac}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionClass {
    pub degrees: (u32, u32),
    pub count: u64,
}

fn partition_json(p: &EdgePartition) -> Vec<PartitionClass> {
    p.iter()
        .map(|(pair, count)| PartitionClass {
            degrees: (pair.low(), pair.high()),
            count,
        })
        .collect()
}

/// Requested indices in fixed order; absent ones are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct IndexValues {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub azi: Option<ExactJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub randic: Option<ExactJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abc: Option<ExactJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub kind: String,
    pub m: u32,
    pub n: u32,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub partition: Vec<PartitionClass>,
    pub indices: IndexValues,
}

/// Builds the tube, partitions its edges and evaluates `indices` from the
/// partition.
pub fn index_record(spec: &NanotubeSpec, indices: &[Index]) -> Result<OutputRecord, IndexError> {
    let g = build_nanotube(spec);
    let p = edge_partition(&g);
    let mut values = IndexValues::default();
    for &index in indices {
        let v = Some(ExactJson::from(index_from_partition(&p, &index)?));
        match index {
            Index::Azi => values.azi = v,
            Index::Randic => values.randic = v,
            Index::Abc => values.abc = v,
        }
    }
    Ok(OutputRecord {
        kind: spec.kind().name().to_string(),
        m: spec.m(),
        n: spec.n(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        partition: partition_json(&p),
        indices: values,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointJson {
    pub m: u32,
    pub n: u32,
    pub paper_value: ExactJson,
    pub oracle_value: ExactJson,
    pub difference: ExactJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormJson {
    pub kind: String,
    pub index: String,
    pub provenance: String,
    /// Coefficient of `m·n`.
    pub a: ExactJson,
    /// Coefficient of `m`.
    pub b: ExactJson,
    pub verdict: String,
    pub points: Vec<PointJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub m_range: String,
    pub n_range: String,
    /// `consistent` iff every paper-stated form is.
    pub verdict: String,
    pub forms: Vec<FormJson>,
}

pub fn report_json(
    report: &DiscrepancyReport,
    m_range: GridRange,
    n_range: GridRange,
) -> ReportJson {
    let forms = report
        .forms
        .iter()
        .map(|f| FormJson {
            kind: f.form.kind.name().to_string(),
            index: f.form.index.to_string(),
            provenance: f.form.provenance.name().to_string(),
            a: f.form.a.into(),
            b: f.form.b.into(),
            verdict: f.verdict.name().to_string(),
            points: f
                .points
                .iter()
                .map(|p| PointJson {
                    m: p.m,
                    n: p.n,
                    paper_value: p.paper_value.into(),
                    oracle_value: p.oracle_value.into(),
                    difference: p.difference.into(),
                })
                .collect(),
        })
        .collect();
    ReportJson {
        m_range: m_range.to_string(),
        n_range: n_range.to_string(),
        verdict: if report.paper_stated_consistent() {
            "consistent"
        } else {
            "inconsistent"
        }
        .to_string(),
        forms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyhex_core::NanotubeKind;

    #[test]
    fn float_decimals() {
        assert_eq!(float_decimal(3.0), "3.0");
        assert_eq!(float_decimal(54.83163247594393), "54.8316324759439");
        assert_eq!(float_decimal(5.932652990377571), "5.93265299037757");
        assert_eq!(float_decimal(-0.00012345), "-0.00012345");
        assert_eq!(float_decimal(1.5e17), "150000000000000000.0");
        assert_eq!(float_decimal(0.0), "0.0");
    }

    #[test]
    fn record_for_figure_one() {
        let spec = NanotubeSpec::new(NanotubeKind::Armchair, 5, 9).unwrap();
        let rec = index_record(&spec, &Index::ALL).unwrap();
        assert_eq!((rec.vertex_count, rec.edge_count), (110, 155));
        let azi = rec.indices.azi.unwrap();
        assert_eq!((azi.numerator, azi.denominator), (Some(106485), Some(64)));
        assert_eq!(azi.decimal, "1663.828125");
        assert_eq!(rec.indices.randic.unwrap().decimal, "54.8316324759439");
        assert_eq!(rec.indices.abc.unwrap().decimal, "104.54653676893");
        assert_eq!(
            rec.partition,
            vec![
                PartitionClass {
                    degrees: (2, 2),
                    count: 10
                },
                PartitionClass {
                    degrees: (2, 3),
                    count: 20
                },
                PartitionClass {
                    degrees: (3, 3),
                    count: 125
                },
            ]
        );
    }

    #[test]
    fn field_order_is_fixed() {
        let spec = NanotubeSpec::new(NanotubeKind::Zigzag, 7, 5).unwrap();
        let rec = index_record(&spec, &[Index::Azi]).unwrap();
        let text = serde_json::to_string(&rec).unwrap();
        assert!(text.starts_with(
            r#"{"kind":"zigzag","m":7,"n":5,"vertex_count":84,"edge_count":119,"partition":"#
        ));
        assert!(text.ends_with(
            r#""indices":{"azi":{"numerator":80675,"denominator":64,"decimal":"1260.546875"}}}"#
        ));
    }
}
