//! Executable constructive colorings: each returns the coloring a proof
//! describes together with the bound it claims, and reports the checker's
//! verdict honestly instead of repairing failures.

use thiserror::Error;

use crate::coloring::{is_td_coloring, Coloring};
use crate::exact::{exact_gamma_t, SolveError};
use crate::formulas::{path_tdc, star_sub_tdc, FormulaError};
use crate::graph::{generate, Family, Graph, GraphError};
use crate::subdivision::{subdivide, SubdividedGraph, SubdivisionError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("path order must be >= 2, got {0}")]
    PathTooShort(usize),
    #[error("star parameter n must be >= 3, got {0}")]
    StarTooSmall(usize),
    #[error("star subdivision k must be 3 or 4, got {0}")]
    StarBadK(usize),
    #[error("base graph must be connected with at least one edge")]
    BaseNotConnected,
    #[error("subdivision parameter k must be >= 2")]
    KTooSmall,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Subdivision(#[from] SubdivisionError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstructionId {
    PathColoring,
    StarSubdivision,
    SubdivisionUpper,
    GammaSandwich,
}

/// A constructed coloring, the bound the construction claims, and whether
/// the checker accepted it (`valid` implies TD-valid and λ <= claimed).
#[derive(Clone, Debug)]
pub struct ConstructionOutcome {
    pub coloring: Coloring,
    pub claimed_bound: usize,
    pub construction_id: ConstructionId,
    pub valid: bool,
}

fn finish(
    g: &Graph,
    raw: Vec<usize>,
    claimed_bound: usize,
    construction_id: ConstructionId,
) -> ConstructionOutcome {
    let coloring = Coloring::new(&raw);
    let valid =
        is_td_coloring(g, &coloring).unwrap_or(false) && coloring.num_colors() <= claimed_bound;
    ConstructionOutcome {
        coloring,
        claimed_bound,
        construction_id,
        valid,
    }
}

/// Raw colors for the positions `1..=n` of a path, matching the recursive
/// base pattern: color 1 at positions ≡ 1 (mod 4), color 2 at ≡ 0 (mod 4),
/// a fresh color everywhere else. `next_fresh` supplies fresh ids.
fn base_pattern(len: usize, next_fresh: &mut usize) -> Vec<usize> {
    (1..=len)
        .map(|pos| match pos % 4 {
            1 => 1,
            0 => 2,
            _ => {
                *next_fresh += 1;
                *next_fresh
            }
        })
        .collect()
}

/// The closed-form TD path coloring: the base pattern for n ≡ 0 (mod 4), a
/// recolored 5/6/7-position tail for the other residues, and stored
/// witnesses for n <= 7. Always validates with exactly `path_tdc(n)` colors
/// (which exhaustive search shows is not the optimum at every order).
pub fn path_construction(n: usize) -> Result<ConstructionOutcome, ConstructionError> {
    const STORED: [&[usize]; 6] = [
        &[1, 2],
        &[1, 2, 1],
        &[1, 2, 3, 1],
        &[1, 2, 1, 3, 4],
        &[1, 2, 1, 3, 4, 3],
        &[1, 2, 3, 1, 4, 5, 4],
    ];
    if n < 2 {
        return Err(ConstructionError::PathTooShort(n));
    }
    let g = generate(Family::Path, n)?;
    let claimed = path_tdc(n)?;
    if n <= 7 {
        return Ok(finish(
            &g,
            STORED[n - 2].to_vec(),
            claimed,
            ConstructionId::PathColoring,
        ));
    }

    let mut next_fresh = 2;
    let raw = if n.is_multiple_of(4) {
        base_pattern(n, &mut next_fresh)
    } else {
        let prefix_len = 4 * (n / 4 - 1);
        let mut raw = base_pattern(prefix_len, &mut next_fresh);
        let mut fresh = || {
            next_fresh += 1;
            next_fresh
        };
        let tail: Vec<usize> = match n % 4 {
            1 => vec![1, fresh(), fresh(), fresh(), 2],
            2 => vec![1, fresh(), fresh(), fresh(), fresh(), 2],
            _ => vec![1, fresh(), fresh(), 2, fresh(), fresh(), 2],
        };
        raw.extend(tail);
        raw
    };
    Ok(finish(&g, raw, claimed, ConstructionId::PathColoring))
}

/// The star-subdivision colorings with 2n+1 (k = 3) and 2n+2 (k = 4)
/// colors. With spokes written center-outwards as v, (z_i,) w_i, q_i, p_i:
/// for k = 3 each w_i takes color n+i and the center shares color 2n+1 with
/// every pendant; for k = 4 each w_i and p_i share n+i, the center takes
/// 2n+1, and every z_i takes 2n+2.
pub fn star_sub_construction(n: usize, k: usize) -> Result<ConstructionOutcome, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::StarTooSmall(n));
    }
    if k != 3 && k != 4 {
        return Err(ConstructionError::StarBadK(k));
    }
    let star = generate(Family::Star, n)?;
    let sg = subdivide(&star, k)?;
    let graph = sg.graph();
    let claimed = star_sub_tdc(n, k)?;
    let mut raw = vec![0usize; graph.n()];
    raw[sg.original_of(0)] = 2 * n + 1; // center
    for i in 1..=n {
        let pendant = sg.original_of(i);
        let q = sg.internal_vertex(0, i, k - 1)?;
        let w = sg.internal_vertex(0, i, k - 2)?;
        raw[q] = i;
        match k {
            3 => {
                raw[w] = n + i;
                raw[pendant] = 2 * n + 1;
            }
            _ => {
                let z = sg.internal_vertex(0, i, 1)?;
                raw[w] = n + i;
                raw[pendant] = n + i;
                raw[z] = 2 * n + 2;
            }
        }
    }
    Ok(finish(graph, raw, claimed, ConstructionId::StarSubdivision))
}

/// Colors one superedge path given fixed endpoint colors, using at most
/// `max_fresh` fresh colors for the unassigned positions. Requires
/// properness along the path and a locally visible dominated class for every
/// newly colored vertex: either a fresh class confined to this superedge or
/// an already-final class of a fixed endpoint. Returns the assignment for
/// the free positions, lowest colors first, or `None`.
struct SuperedgeSearch<'a> {
    path: &'a [usize],
    free: &'a [usize],
    color: &'a mut [usize],
    class_of: &'a [Vec<usize>],
    fresh_base: usize,
    max_fresh: usize,
    require_domination: bool,
    graph: &'a Graph,
}

impl SuperedgeSearch<'_> {
    fn run(&mut self) -> bool {
        self.assign(0, 0)
    }

    fn assign(&mut self, idx: usize, fresh_used: usize) -> bool {
        if idx == self.free.len() {
            return !self.require_domination || self.locally_dominated();
        }
        let v = self.free[idx];
        let cap = (fresh_used + 1).min(self.max_fresh);
        for f in 1..=cap {
            let c = self.fresh_base + f;
            if self.graph.neighbors(v).iter().any(|&w| self.color[w] == c) {
                continue;
            }
            self.color[v] = c;
            if self.assign(idx + 1, fresh_used.max(f)) {
                return true;
            }
            self.color[v] = 0;
        }
        false
    }

    /// Checks every free vertex of this superedge for a dominated class.
    /// Fresh classes live only on this superedge, and fixed endpoint classes
    /// are final (palettes are pairwise disjoint), so the check is exact for
    /// the finished coloring.
    fn locally_dominated(&self) -> bool {
        'vertices: for &v in self.free {
            let nbrs = self.graph.neighbors(v);
            // fresh classes on this superedge
            for f in 1..=self.max_fresh {
                let c = self.fresh_base + f;
                let mut nonempty = false;
                let mut inside = true;
                for &u in self.path {
                    if self.color[u] == c {
                        nonempty = true;
                        if nbrs.binary_search(&u).is_err() {
                            inside = false;
                            break;
                        }
                    }
                }
                if nonempty && inside {
                    continue 'vertices;
                }
            }
            // final classes of previously colored vertices
            for &u in nbrs {
                let c = self.color[u];
                if c == 0 || c > self.fresh_base {
                    continue;
                }
                if self.class_of[c]
                    .iter()
                    .all(|&x| nbrs.binary_search(&x).is_ok())
                {
                    continue 'vertices;
                }
            }
            return false;
        }
        true
    }
}

/// The superedge-palette upper-bound construction: superedges are processed
/// breadth-first from the lexicographically smallest base edge; the first is
/// colored as an optimal TD path coloring of P_{k+1}, and each later one
/// keeps its already-colored endpoints and spends a disjoint fresh palette
/// of at most χ_d^t(P_k) colors on its remaining vertices, chosen by a small
/// exact search. If some superedge admits no such locally dominating
/// assignment the palette is still spent on a proper assignment and the
/// failed verdict is reported; nothing is repaired silently.
pub fn subdivision_upper_construction(
    g: &Graph,
    k: usize,
) -> Result<ConstructionOutcome, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::KTooSmall);
    }
    if !g.is_connected() || g.m() == 0 {
        return Err(ConstructionError::BaseNotConnected);
    }
    let sg = subdivide(g, k)?;
    let graph = sg.graph();
    let claimed = (g.m() - 1) * path_tdc(k)? + path_tdc(k + 1)?;

    // Breadth-first order over base edges from the smallest one.
    let edge_order = {
        let edges = g.edges();
        let mut order = Vec::with_capacity(edges.len());
        let mut seen = vec![false; edges.len()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            order.push(i);
            let (a, b) = edges[i];
            for (j, &(c, d)) in edges.iter().enumerate() {
                if !seen[j] && (c == a || c == b || d == a || d == b) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        order
    };

    let superedge_path = |edge: (usize, usize)| -> Vec<usize> {
        let (u, v) = edge;
        let mut path = Vec::with_capacity(k + 1);
        path.push(sg.original_of(u));
        for l in 1..k {
            path.push(sg.internal_vertex(u, v, l).expect("base edge"));
        }
        path.push(sg.original_of(v));
        path
    };

    let mut color = vec![0usize; graph.n()];
    let mut class_of: Vec<Vec<usize>> = vec![Vec::new()];
    let mut next_color = 0usize;

    for (rank, &edge_idx) in edge_order.iter().enumerate() {
        let path = superedge_path(g.edges()[edge_idx]);
        if rank == 0 {
            let first = path_construction(k + 1)?;
            for (pos, &v) in path.iter().enumerate() {
                color[v] = first.coloring.color_of(pos);
            }
            next_color = first.coloring.num_colors();
        } else {
            let free: Vec<usize> = path.iter().copied().filter(|&v| color[v] == 0).collect();
            let max_fresh = path_tdc(k)?;
            let mut search = SuperedgeSearch {
                path: &path,
                free: &free,
                color: &mut color,
                class_of: &class_of,
                fresh_base: next_color,
                max_fresh,
                require_domination: true,
                graph,
            };
            if !search.run() {
                // No locally dominating assignment exists; spend the palette
                // on a proper assignment and let the verdict report the gap.
                let mut fallback = SuperedgeSearch {
                    path: &path,
                    free: &free,
                    color: &mut color,
                    class_of: &class_of,
                    fresh_base: next_color,
                    max_fresh,
                    require_domination: false,
                    graph,
                };
                fallback.run();
            }
            next_color += max_fresh;
        }
        class_of.resize(next_color + 1, Vec::new());
        for &v in &path {
            if color[v] != 0 && !class_of[color[v]].contains(&v) {
                class_of[color[v]].push(v);
            }
        }
    }

    Ok(finish(
        graph,
        color,
        claimed,
        ConstructionId::SubdivisionUpper,
    ))
}

/// The γ_t + 2 construction: each member of a minimum total dominating set
/// gets its own color 1..=s, then uncolored vertices are swept lowest id
/// first, a vertex with no uncolored neighbors taking color s+1 and a vertex
/// with uncolored neighbors taking s+1 while those neighbors take s+2.
pub fn gamma_construction(sg: &SubdividedGraph) -> Result<ConstructionOutcome, ConstructionError> {
    if sg.k() < 2 {
        return Err(ConstructionError::KTooSmall);
    }
    if !sg.base().is_connected() || sg.base().m() == 0 {
        return Err(ConstructionError::BaseNotConnected);
    }
    let graph = sg.graph();
    let (s, dominating) = exact_gamma_t(graph)?;
    let mut raw = vec![0usize; graph.n()];
    for (i, &y) in dominating.members().iter().enumerate() {
        raw[y] = i + 1;
    }
    while let Some(x) = (0..graph.n()).find(|&v| raw[v] == 0) {
        raw[x] = s + 1;
        for &u in graph.neighbors(x) {
            if raw[u] == 0 {
                raw[u] = s + 2;
            }
        }
    }
    Ok(finish(graph, raw, s + 2, ConstructionId::GammaSandwich))
}
