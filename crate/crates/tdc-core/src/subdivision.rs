//! Construction of G^{1/k}: every edge of the base graph becomes a path of
//! length k (a superedge), with deterministic ids and labels for the new
//! internal vertices.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubdivisionError {
    #[error("subdivision parameter k must be >= 1")]
    ZeroK,
    #[error("{{{0}, {1}}} is not an edge of the base graph")]
    NotABaseEdge(usize, usize),
    #[error("internal distance {l} out of range 1..={max} for k = {k}")]
    DistanceOutOfRange { l: usize, max: usize, k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Label of an internal vertex: the superedge it lies on and its distance
/// from the smaller endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InternalLabel {
    /// Base-edge endpoints with `endpoints.0 < endpoints.1`.
    pub endpoints: (usize, usize),
    /// Distance from `endpoints.0` along the superedge, in `1..=k-1`.
    pub distance: usize,
}

/// A base graph together with its k-subdivision.
///
/// Vertex ids are allocated deterministically: base vertices keep their ids
/// `0..n`, then each base edge, in sorted order, contributes its internal
/// vertices with increasing distance from the smaller endpoint. The result
/// has `n + (k-1)m` vertices and `k·m` edges.
#[derive(Clone, Debug)]
pub struct SubdividedGraph {
    base: Graph,
    k: usize,
    graph: Graph,
    labels: Vec<InternalLabel>,
}

impl SubdividedGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Id of a base vertex inside the subdivided graph (base ids are kept).
    pub fn original_of(&self, base_vertex: usize) -> usize {
        debug_assert!(base_vertex < self.base.n());
        base_vertex
    }

    /// Label of an internal vertex, or `None` for images of base vertices.
    pub fn label_of(&self, v: usize) -> Option<&InternalLabel> {
        v.checked_sub(self.base.n())
            .and_then(|i| self.labels.get(i))
    }

    /// The unique internal vertex on superedge {vi, vj} at distance `l`
    /// from `vi`. Either endpoint order is accepted; the distance is always
    /// measured from the first argument.
    pub fn internal_vertex(
        &self,
        vi: usize,
        vj: usize,
        l: usize,
    ) -> Result<usize, SubdivisionError> {
        let (lo, hi) = (vi.min(vj), vi.max(vj));
        let idx = self
            .base
            .edges()
            .binary_search(&(lo, hi))
            .map_err(|_| SubdivisionError::NotABaseEdge(vi, vj))?;
        if self.k < 2 || l < 1 || l > self.k - 1 {
            return Err(SubdivisionError::DistanceOutOfRange {
                l,
                max: self.k.saturating_sub(1),
                k: self.k,
            });
        }
        let from_lo = if vi == lo { l } else { self.k - l };
        Ok(self.base.n() + idx * (self.k - 1) + (from_lo - 1))
    }
}

/// Replaces each base edge with a path of length `k`. For `k = 1` the result
/// is the base graph itself under the identity labeling.
pub fn subdivide(g: &Graph, k: usize) -> Result<SubdividedGraph, SubdivisionError> {
    if k == 0 {
        return Err(SubdivisionError::ZeroK);
    }
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(k * g.m());
    let mut labels: Vec<InternalLabel> = Vec::with_capacity((k - 1) * g.m());
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        let mut prev = u;
        for l in 1..k {
            let id = n + idx * (k - 1) + (l - 1);
            labels.push(InternalLabel {
                endpoints: (u, v),
                distance: l,
            });
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, v));
    }
    let graph = Graph::new(n + (k - 1) * g.m(), &edges)?;
    Ok(SubdividedGraph {
        base: g.clone(),
        k,
        graph,
        labels,
    })
}
