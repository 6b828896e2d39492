//! Immutable simple undirected graphs, named-family generators, and basic
//! structural queries.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {endpoint} out of range (n = {n})")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{family} requires parameter >= {min}, got {got}")]
    ParameterBelowMinimum {
        family: Family,
        min: usize,
        got: usize,
    },
}

/// Simple undirected graph on dense vertex ids `0..n`.
///
/// Immutable after construction: every constructor validates the no-loop,
/// no-duplicate-edge, endpoints-in-range invariants, and the adjacency lists
/// are derived once from the edge set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are unordered pairs; each is
    /// stored once with the smaller endpoint first.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashSet::new();
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for endpoint in [a, b] {
                if endpoint >= n {
                    return Err(GraphError::EndpointOutOfRange { endpoint, n });
                }
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            norm.push(e);
        }
        norm.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, each with the smaller endpoint first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Connectivity and isolated-vertex facts in one pass.
    pub fn structural_flags(&self) -> StructuralFlags {
        StructuralFlags {
            is_connected: self.is_connected(),
            has_isolated_vertex: (0..self.n).any(|v| self.adj[v].is_empty()),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.adj[v].is_empty())
    }

    /// True iff the graph is 2-colorable.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StructuralFlags {
    pub is_connected: bool,
    pub has_isolated_vertex: bool,
}

/// Named graph families used throughout: paths, cycles, stars `K_{1,p}`, and
/// complete graphs.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

/// Generates a named family member with canonical vertex numbering:
/// paths and cycles are numbered consecutively, the star center is vertex 0
/// with `p` leaves, and `complete` is `K_p`.
pub fn generate(family: Family, p: usize) -> Result<Graph, GraphError> {
    let below = |min: usize| GraphError::ParameterBelowMinimum {
        family,
        min,
        got: p,
    };
    match family {
        Family::Path => {
            if p < 1 {
                return Err(below(1));
            }
            let edges: Vec<_> = (0..p.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::new(p, &edges)
        }
        Family::Cycle => {
            if p < 3 {
                return Err(below(3));
            }
            let edges: Vec<_> = (0..p).map(|i| (i, (i + 1) % p)).collect();
            Graph::new(p, &edges)
        }
        Family::Star => {
            if p < 1 {
                return Err(below(1));
            }
            let edges: Vec<_> = (1..=p).map(|i| (0, i)).collect();
            Graph::new(p + 1, &edges)
        }
        Family::Complete => {
            if p < 1 {
                return Err(below(1));
            }
            let mut edges = Vec::new();
            for u in 0..p {
                for v in u + 1..p {
                    edges.push((u, v));
                }
            }
            Graph::new(p, &edges)
        }
    }
}

/// Validated subset of a graph's vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(g: &Graph, members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut v: Vec<usize> = members.into_iter().collect();
        for &x in &v {
            if x >= g.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: g.n(),
                });
            }
        }
        v.sort_unstable();
        v.dedup();
        Ok(VertexSet { members: v })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}
