//! Armchair `TUAC6[m, n]` and zigzag `TUZC6[m, n]` polyhex nanotubes.
//!
//! Both kinds are laid out as rows of `2m` vertices around the tube; vertex
//! `(r, c)` with `c` in `0..2m` has id `r * 2m + c`.
//!
//! * Zigzag: rows `0..=n`. Each row is a `2m`-cycle. Between rows `r` and
//!   `r + 1` the vertical edges `(r, c)-(r + 1, c)` are present exactly for
//!   `c ≡ r (mod 2)`, giving `m` per gap.
//! * Armchair: rows `0..=n + 1`. Every `(r, c)-(r + 1, c)` is present. Even
//!   rows pair `(2i, 2i + 1)`; odd rows pair `(2i + 1, (2i + 2) mod 2m)`.
//!
//! The tube ends are open, so the first and last rows carry the degree-2
//! vertices.

use core::fmt;

use alloc::vec::Vec;

use crate::graph::{EdgePartition, Graph, VertexId};

/// Boundary orientation of the rolled hexagonal lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NanotubeKind {
    /// `TUAC6[m, n]`
    Armchair,
    /// `TUZC6[m, n]`
    Zigzag,
}

impl NanotubeKind {
    /// Both kinds, armchair first.
    pub const ALL: [NanotubeKind; 2] = [NanotubeKind::Armchair, NanotubeKind::Zigzag];

    /// Lower-case name, `"armchair"` or `"zigzag"`.
    pub fn name(&self) -> &'static str {
        match self {
            NanotubeKind::Armchair => "armchair",
            NanotubeKind::Zigzag => "zigzag",
        }
    }
}

impl fmt::Display for NanotubeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for NanotubeKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "armchair" => Ok(NanotubeKind::Armchair),
            "zigzag" => Ok(NanotubeKind::Zigzag),
            _ => Err(()),
        }
    }
}

/// A parameter outside the accepted domain `m >= 2`, `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum InvalidSpec {
    /// `m = 1` would need a doubled edge; `m = 0` is empty.
    #[error("m must be ≥ 2 (got {0})")]
    MTooSmall(u32),
    /// `n = 0` makes the (3,3) class count `3mn - 2m` negative.
    #[error("n must be ≥ 1 (got {0})")]
    NTooSmall(u32),
}

/// Kind plus the hexagon count around the tube (`m`) and the row count (`n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NanotubeSpec {
    kind: NanotubeKind,
    m: u32,
    n: u32,
}

impl NanotubeSpec {
    /// Validates `m >= 2` and `n >= 1`.
    pub fn new(kind: NanotubeKind, m: u32, n: u32) -> Result<Self, InvalidSpec> {
        if m < 2 {
            return Err(InvalidSpec::MTooSmall(m));
        }
        if n < 1 {
            return Err(InvalidSpec::NTooSmall(n));
        }
        Ok(NanotubeSpec { kind, m, n })
    }

    /// Tube kind.
    pub fn kind(&self) -> NanotubeKind {
        self.kind
    }

    /// Hexagons around the circumference.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Rows (armchair) or repetitions (zigzag).
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Vertices per row, `2m`.
    pub fn row_len(&self) -> usize {
        2 * self.m as usize
    }

    /// Number of vertex rows: `n + 2` armchair, `n + 1` zigzag.
    pub fn row_count(&self) -> usize {
        match self.kind {
            NanotubeKind::Armchair => self.n as usize + 2,
            NanotubeKind::Zigzag => self.n as usize + 1,
        }
    }

    /// Id of vertex `(row, col)`.
    pub fn vertex_id(&self, row: usize, col: usize) -> VertexId {
        row * self.row_len() + col
    }

    /// `(row, col)` of a vertex id.
    pub fn row_col(&self, v: VertexId) -> (usize, usize) {
        (v / self.row_len(), v % self.row_len())
    }

    /// `2m(n + 2)` armchair, `2mn + 2m` zigzag.
    pub fn expected_vertex_count(&self) -> u64 {
        let (m, n) = (self.m as u64, self.n as u64);
        match self.kind {
            NanotubeKind::Armchair => 2 * m * (n + 2),
            NanotubeKind::Zigzag => 2 * m * n + 2 * m,
        }
    }

    /// `3mn + 4m` armchair, `3mn + 2m` zigzag.
    pub fn expected_edge_count(&self) -> u64 {
        let (m, n) = (self.m as u64, self.n as u64);
        match self.kind {
            NanotubeKind::Armchair => 3 * m * n + 4 * m,
            NanotubeKind::Zigzag => 3 * m * n + 2 * m,
        }
    }

    /// Degree-class counts of the tube, in closed form:
    ///
    /// | class | armchair  | zigzag    |
    /// |-------|-----------|-----------|
    /// | (2,2) | 2m        | -         |
    /// | (2,3) | 4m        | 4m        |
    /// | (3,3) | 3mn - 2m  | 3mn - 2m  |
    pub fn table_partition(&self) -> EdgePartition {
        let (m, n) = (self.m as u64, self.n as u64);
        let inner = 3 * m * n - 2 * m;
        match self.kind {
            NanotubeKind::Armchair => [((2, 2), 2 * m), ((2, 3), 4 * m), ((3, 3), inner)]
                .into_iter()
                .collect(),
            NanotubeKind::Zigzag => [((2, 3), 4 * m), ((3, 3), inner)].into_iter().collect(),
        }
    }

    /// Edge list of the construction described in the module docs, in
    /// generation order (not canonical).
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let w = self.row_len();
        let rows = self.row_count();
        let id = |r: usize, c: usize| r * w + c;
        let mut out = Vec::with_capacity(self.expected_edge_count() as usize);
        match self.kind {
            NanotubeKind::Zigzag => {
                for r in 0..rows {
                    for c in 0..w {
                        out.push((id(r, c), id(r, (c + 1) % w)));
                    }
                    if r + 1 < rows {
                        for c in (r % 2..w).step_by(2) {
                            out.push((id(r, c), id(r + 1, c)));
                        }
                    }
                }
            }
            NanotubeKind::Armchair => {
                for r in 0..rows {
                    let m = self.m as usize;
                    for i in 0..m {
                        if r % 2 == 0 {
                            out.push((id(r, 2 * i), id(r, 2 * i + 1)));
                        } else {
                            out.push((id(r, 2 * i + 1), id(r, (2 * i + 2) % w)));
                        }
                    }
                    if r + 1 < rows {
                        for c in 0..w {
                            out.push((id(r, c), id(r + 1, c)));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for NanotubeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            NanotubeKind::Armchair => "TUAC6",
            NanotubeKind::Zigzag => "TUZC6",
        };
        write!(f, "{tag}[{},{}]", self.m, self.n)
    }
}

/// Builds the nanotube graph for `spec`.
pub fn build_nanotube(spec: &NanotubeSpec) -> Graph {
    Graph::new(spec.expected_vertex_count() as usize, spec.edges())
        .expect("nanotube construction yields a simple graph for m >= 2")
}
