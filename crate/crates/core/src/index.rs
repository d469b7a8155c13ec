//! Degree-based topological indices.
//!
//! An index here is `Σ_{uv ∈ E} f(d_u, d_v)` for a symmetric edge function
//! `f`. The Augmented Zagreb index is computed exactly as a [`Rational`];
//! Randić and ABC have irrational terms and are summed in `f64` with a
//! compensated (Neumaier) sum in a fixed order, so results are
//! deterministic.

use core::fmt;

use crate::graph::{EdgePartition, Graph, VertexId};
use crate::nanotube::NanotubeSpec;
use crate::rational::{Rational, RationalError};

/// Errors from index evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum IndexError {
    /// The edge function has no value at this degree pair.
    #[error("{index} term undefined for degrees ({d_u}, {d_v}){}", fmt_edge(.edge))]
    UndefinedTerm {
        /// Index name.
        index: &'static str,
        /// First degree.
        d_u: u32,
        /// Second degree.
        d_v: u32,
        /// The edge carrying this pair, when evaluating edgewise.
        edge: Option<(VertexId, VertexId)>,
    },
    /// Exact accumulation overflowed.
    #[error(transparent)]
    Arithmetic(#[from] RationalError),
}

struct EdgeSuffix(Option<(VertexId, VertexId)>);

impl fmt::Display for EdgeSuffix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some((u, v)) => write!(f, " on edge ({u}, {v})"),
            None => Ok(()),
        }
    }
}

fn fmt_edge(edge: &Option<(VertexId, VertexId)>) -> EdgeSuffix {
    EdgeSuffix(*edge)
}

/// An index value: exact when the index is rational, always with a float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexValue {
    /// Exact value, for rational indices.
    pub exact: Option<Rational>,
    /// Floating value; the conversion of `exact` when that is present.
    pub approx: f64,
}

impl IndexValue {
    /// Exact value with its float conversion.
    pub fn exact(value: Rational) -> Self {
        IndexValue {
            exact: Some(value),
            approx: value.to_f64(),
        }
    }

    /// Float-only value.
    pub fn approx(value: f64) -> Self {
        IndexValue {
            exact: None,
            approx: value,
        }
    }
}

/// One term of an index: exact or floating.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Term {
    /// Rational term.
    Exact(Rational),
    /// Irrational term.
    Approx(f64),
}

/// A symmetric function of the two endpoint degrees of an edge.
pub trait EdgeFunction {
    /// Short identifier used in reports and errors.
    fn name(&self) -> &'static str;

    /// Whether every term is rational (then sums are exact).
    fn is_exact(&self) -> bool;

    /// `f(d_u, d_v)`. Must equal `f(d_v, d_u)`.
    fn term(&self, d_u: u32, d_v: u32) -> Result<Term, IndexError>;
}

/// The three indices provided by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    /// Augmented Zagreb: `(d_u d_v / (d_u + d_v - 2))^3`.
    Azi,
    /// Randić: `1 / sqrt(d_u d_v)`.
    Randic,
    /// Atom-bond connectivity: `sqrt((d_u + d_v - 2) / (d_u d_v))`.
    Abc,
}

impl Index {
    /// All indices in reporting order.
    pub const ALL: [Index; 3] = [Index::Azi, Index::Randic, Index::Abc];
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Index {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "azi" => Ok(Index::Azi),
            "randic" => Ok(Index::Randic),
            "abc" => Ok(Index::Abc),
            _ => Err(()),
        }
    }
}

impl EdgeFunction for Index {
    fn name(&self) -> &'static str {
        match self {
            Index::Azi => "azi",
            Index::Randic => "randic",
            Index::Abc => "abc",
        }
    }

    fn is_exact(&self) -> bool {
        matches!(self, Index::Azi)
    }

    fn term(&self, d_u: u32, d_v: u32) -> Result<Term, IndexError> {
        match self {
            Index::Azi => azi_term(d_u, d_v).map(Term::Exact),
            Index::Randic => Ok(Term::Approx(randic_term(d_u, d_v))),
            Index::Abc => Ok(Term::Approx(abc_term(d_u, d_v))),
        }
    }
}

/// `(d_u d_v / (d_u + d_v - 2))^3`, exactly.
pub fn azi_term(d_u: u32, d_v: u32) -> Result<Rational, IndexError> {
    let undefined = IndexError::UndefinedTerm {
        index: "azi",
        d_u,
        d_v,
        edge: None,
    };
    let sum = d_u as i128 + d_v as i128;
    if d_u == 0 || d_v == 0 || sum <= 2 {
        return Err(undefined);
    }
    let base = Rational::new(d_u as i128 * d_v as i128, sum - 2)?;
    Ok(base.checked_pow(3)?)
}

/// `1 / sqrt(d_u d_v)`.
pub fn randic_term(d_u: u32, d_v: u32) -> f64 {
    1.0 / libm::sqrt(d_u as f64 * d_v as f64)
}

/// `sqrt((d_u + d_v - 2) / (d_u d_v))`; 0 for a pair of leaves.
pub fn abc_term(d_u: u32, d_v: u32) -> f64 {
    let num = d_u as f64 + d_v as f64 - 2.0;
    libm::sqrt(num / (d_u as f64 * d_v as f64))
}

/// Neumaier-compensated float sum.
#[derive(Debug, Clone, Copy, Default)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

enum Accumulator {
    Exact(Rational),
    Approx(CompensatedSum),
}

impl Accumulator {
    fn new(exact: bool) -> Self {
        if exact {
            Accumulator::Exact(Rational::ZERO)
        } else {
            Accumulator::Approx(CompensatedSum::default())
        }
    }

    fn add(&mut self, term: Term, count: u64) -> Result<(), IndexError> {
        // An exact function that yields a float term turns the sum inexact.
        if let (Accumulator::Exact(q), Term::Approx(_)) = (&*self, term) {
            let mut s = CompensatedSum::default();
            s.add(q.to_f64());
            *self = Accumulator::Approx(s);
        }
        match (self, term) {
            (Accumulator::Exact(acc), Term::Exact(t)) => {
                *acc = acc.checked_add(t.checked_mul_int(count as i128)?)?;
            }
            (Accumulator::Approx(acc), Term::Exact(t)) => acc.add(t.to_f64() * count as f64),
            (Accumulator::Approx(acc), Term::Approx(t)) => acc.add(t * count as f64),
            (Accumulator::Exact(_), Term::Approx(_)) => unreachable!(),
        }
        Ok(())
    }

    fn finish(self) -> IndexValue {
        match self {
            Accumulator::Exact(q) => IndexValue::exact(q),
            Accumulator::Approx(s) => IndexValue::approx(s.value()),
        }
    }
}

/// Sums `f` over every edge of `g`, one term per edge in canonical order.
pub fn edgewise<F: EdgeFunction + ?Sized>(g: &Graph, f: &F) -> Result<IndexValue, IndexError> {
    let mut acc = Accumulator::new(f.is_exact());
    for &(u, v) in g.edges() {
        let (du, dv) = (g.degree_unchecked(u) as u32, g.degree_unchecked(v) as u32);
        let term = f.term(du, dv).map_err(|e| match e {
            IndexError::UndefinedTerm {
                index, d_u, d_v, ..
            } => IndexError::UndefinedTerm {
                index,
                d_u,
                d_v,
                edge: Some((u, v)),
            },
            other => other,
        })?;
        acc.add(term, 1)?;
    }
    Ok(acc.finish())
}

/// `Σ_classes count · f(low, high)` over a degree partition.
pub fn index_from_partition<F: EdgeFunction + ?Sized>(
    p: &EdgePartition,
    f: &F,
) -> Result<IndexValue, IndexError> {
    let mut acc = Accumulator::new(f.is_exact());
    for (pair, count) in p.iter() {
        acc.add(f.term(pair.low(), pair.high())?, count)?;
    }
    Ok(acc.finish())
}

/// Augmented Zagreb index of `g`, exact, summed edge by edge.
pub fn azi(g: &Graph) -> Result<IndexValue, IndexError> {
    edgewise(g, &Index::Azi)
}

/// Randić index of `g`, summed edge by edge.
pub fn randic(g: &Graph) -> IndexValue {
    edgewise(g, &Index::Randic).expect("randic terms are defined for every edge")
}

/// ABC index of `g`, summed edge by edge.
pub fn abc(g: &Graph) -> IndexValue {
    edgewise(g, &Index::Abc).expect("abc terms are defined for every edge")
}

/// Index of a nanotube from its closed-form degree partition, without
/// building the graph. O(1) in `m` and `n`.
pub fn nanotube_index<F: EdgeFunction + ?Sized>(
    spec: &NanotubeSpec,
    f: &F,
) -> Result<IndexValue, IndexError> {
    index_from_partition(&spec.table_partition(), f)
}
