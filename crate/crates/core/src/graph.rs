//! Immutable undirected simple graphs and degree-based edge partitions.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

/// Dense vertex id in `0..vertex_count`.
pub type VertexId = usize;

/// Rejection reasons for [`Graph::new`] and vertex queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// An edge `(v, v)` was supplied.
    #[error("self-loop on edge ({}, {})", .edge.0, .edge.1)]
    SelfLoop {
        /// The offending edge as supplied.
        edge: (VertexId, VertexId),
    },
    /// The same unordered pair was supplied twice.
    #[error("duplicate edge ({}, {})", .edge.0, .edge.1)]
    DuplicateEdge {
        /// The offending edge in canonical `(low, high)` order.
        edge: (VertexId, VertexId),
    },
    /// A vertex id is not below the vertex count.
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        /// The bad id.
        vertex: VertexId,
        /// Number of vertices in the graph.
        vertex_count: usize,
        /// The edge containing the bad id, when it came from an edge list.
        edge: Option<(VertexId, VertexId)>,
    },
}

/// An immutable undirected simple graph.
///
/// Edges are stored once as `(low, high)` and kept sorted; neighbour lists
/// are stored compactly (offsets into one array) and are sorted too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
}

impl Graph {
    /// Validates and builds a graph. Edges may be given in either orientation.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut canonical = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                        edge: Some((u, v)),
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge: (u, v) });
            }
            canonical.push(if u < v { (u, v) } else { (v, u) });
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { edge: w[0] });
        }

        let mut degree = vec![0usize; vertex_count];
        for &(u, v) in &canonical {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..vertex_count].to_vec();
        let mut neighbors = vec![0; 2 * canonical.len()];
        // Sorted edges fill every list in ascending order: first the lower
        // neighbours (as the high end), then the higher ones.
        for &(u, v) in &canonical {
            neighbors[fill[u]] = v;
            fill[u] += 1;
            neighbors[fill[v]] = u;
            fill[v] += 1;
        }
        debug_assert!(
            (0..vertex_count).all(|v| neighbors[offsets[v]..offsets[v + 1]]
                .windows(2)
                .all(|w| w[0] < w[1]))
        );

        Ok(Graph {
            vertex_count,
            edges: canonical,
            offsets,
            neighbors,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(low, high)`, sorted lexicographically.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Degree of `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.degree_unchecked(v))
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.check(v)?;
        Ok(&self.neighbors[self.offsets[v]..self.offsets[v + 1]])
    }

    /// Degrees of all vertices, indexed by id.
    pub fn degrees(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    #[inline]
    pub(crate) fn degree_unchecked(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
                edge: None,
            })
        }
    }

    /// Degree classes of the edges; see [`edge_partition`].
    pub fn edge_partition(&self) -> EdgePartition {
        edge_partition(self)
    }

    /// `true` iff the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let dist = self.bfs(0);
        dist.iter().all(|d| d.is_some())
    }

    /// Breadth-first distances from `source`.
    fn bfs(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.neighbors[self.offsets[u]..self.offsets[u + 1]] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// Runs a BFS from every vertex, so it is quadratic; intended for small
    /// graphs.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.vertex_count];
        let mut parent = vec![usize::MAX; self.vertex_count];
        let mut queue = VecDeque::new();
        for s in 0..self.vertex_count {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[self.offsets[u]..self.offsets[u + 1]] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The same graph with every vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[VertexId]) -> Result<Graph, GraphError> {
        if perm.len() != self.vertex_count {
            return Err(GraphError::VertexOutOfRange {
                vertex: perm.len(),
                vertex_count: self.vertex_count,
                edge: None,
            });
        }
        Graph::new(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        Graph::new(
            self.vertex_count + other.vertex_count,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
        .expect("union of valid graphs is valid")
    }
}

/// Unordered degree pair `(low, high)` with `1 <= low <= high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreePair {
    low: u32,
    high: u32,
}

impl DegreePair {
    /// Orders the pair. Returns `None` if either degree is 0.
    pub fn new(a: u32, b: u32) -> Option<Self> {
        if a == 0 || b == 0 {
            return None;
        }
        Some(DegreePair {
            low: a.min(b),
            high: a.max(b),
        })
    }

    /// Smaller degree.
    pub fn low(&self) -> u32 {
        self.low
    }

    /// Larger degree.
    pub fn high(&self) -> u32 {
        self.high
    }
}

/// Edge counts per unordered endpoint-degree class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgePartition {
    classes: BTreeMap<DegreePair, u64>,
}

impl EdgePartition {
    /// Empty partition.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` edges to the class of `pair`. Zero counts are not stored.
    pub fn add(&mut self, pair: DegreePair, count: u64) {
        if count > 0 {
            *self.classes.entry(pair).or_insert(0) += count;
        }
    }

    /// Count for the unordered class `{a, b}`; 0 if absent.
    pub fn count(&self, a: u32, b: u32) -> u64 {
        DegreePair::new(a, b)
            .and_then(|p| self.classes.get(&p).copied())
            .unwrap_or(0)
    }

    /// Nonempty classes in ascending `(low, high)` order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = (DegreePair, u64)> + '_ {
        self.classes.iter().map(|(&p, &c)| (p, c))
    }

    /// Number of nonempty classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    /// `true` with no classes.
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Sum of all counts.
    pub fn total(&self) -> u64 {
        self.classes.values().sum()
    }
}

impl FromIterator<((u32, u32), u64)> for EdgePartition {
    /// Panics if a degree is 0.
    fn from_iter<I: IntoIterator<Item = ((u32, u32), u64)>>(iter: I) -> Self {
        let mut p = EdgePartition::new();
        for ((a, b), c) in iter {
            p.add(DegreePair::new(a, b).expect("degrees must be positive"), c);
        }
        p
    }
}

/// Groups the edges of `g` by the unordered degree pair of their endpoints.
pub fn edge_partition(g: &Graph) -> EdgePartition {
    let mut p = EdgePartition::new();
    for &(u, v) in g.edges() {
        let pair = DegreePair::new(g.degree_unchecked(u) as u32, g.degree_unchecked(v) as u32)
            .expect("edge endpoints have degree >= 1");
        p.add(pair, 1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(0, []).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_connected());
        assert!(g.edge_partition().is_empty());
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, [(1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.degree(0), Ok(1));
        assert_eq!(g.degree(1), Ok(1));
        assert_eq!(g.edge_partition().count(1, 1), 1);
    }

    #[test]
    fn hexagon() {
        let g = cycle(6);
        assert!(g.degrees().all(|d| d == 2));
        assert_eq!(g.degree(0), Ok(2));
        assert_eq!(g.neighbors(0), Ok(&[1, 5][..]));
        let p = g.edge_partition();
        assert_eq!(p.len(), 1);
        assert_eq!(p.count(2, 2), 6);
        assert!(g.is_connected());
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, [(0, 1), (2, 2)]),
            Err(GraphError::SelfLoop { edge: (2, 2) })
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 2), (1, 0)]),
            Err(GraphError::DuplicateEdge { edge: (0, 1) })
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                vertex_count: 3,
                edge: Some((0, 3))
            })
        );
        assert!(matches!(
            cycle(6).degree(6),
            Err(GraphError::VertexOutOfRange { vertex: 6, .. })
        ));
    }

    #[test]
    fn disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn edges_sorted_and_canonical() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn union_and_relabel() {
        let g = cycle(6).disjoint_union(&Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edges().last(), Some(&(6, 7)));
        let perm: Vec<usize> = (0..8).rev().collect();
        let h = g.relabeled(&perm).unwrap();
        assert_eq!(h.edge_partition(), g.edge_partition());
        assert!(g.relabeled(&[0, 1]).is_err());
    }

    #[test]
    fn degree_pair_orders() {
        let p = DegreePair::new(3, 2).unwrap();
        assert_eq!((p.low(), p.high()), (2, 3));
        assert_eq!(DegreePair::new(0, 2), None);
    }
}
