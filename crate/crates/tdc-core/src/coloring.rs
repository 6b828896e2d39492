//! Color assignments and the checkers for properness, total dominator
//! validity, and total dominating sets.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    DomainMismatch { got: usize, expected: usize },
    #[error("graph has an isolated vertex; TD-coloring is undefined")]
    IsolatedVertex,
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// A total color assignment with colors normalized to the contiguous range
/// `1..=num_colors`, in order of first appearance. The color count is always
/// derived from the assignment, never declared.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    assignment: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    /// Normalizes an arbitrary assignment of color ids: distinct raw values
    /// map to `1..=λ` in increasing value order, so an assignment that
    /// already uses exactly `1..=λ` is kept verbatim. Two vertices share a
    /// normalized color iff they shared a raw color.
    pub fn new(raw: &[usize]) -> Self {
        let mut values: Vec<usize> = raw.to_vec();
        values.sort_unstable();
        values.dedup();
        let assignment: Vec<usize> = raw
            .iter()
            .map(|c| values.binary_search(c).expect("value present") + 1)
            .collect();
        let mut classes = vec![Vec::new(); values.len()];
        for (v, &c) in assignment.iter().enumerate() {
            classes[c - 1].push(v);
        }
        Coloring {
            assignment,
            classes,
        }
    }

    /// Number of distinct colors, λ.
    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Members of color class `color` (1-based), sorted ascending.
    pub fn class(&self, color: usize) -> &[usize] {
        &self.classes[color - 1]
    }
}

fn check_domain(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::DomainMismatch {
            got: c.len(),
            expected: g.n(),
        });
    }
    Ok(())
}

/// True iff no edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    check_domain(g, c)?;
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| c.color_of(u) != c.color_of(v)))
}

/// The smallest color class entirely contained in the open neighborhood of
/// `v`, or `None` when no class qualifies (always `None` for isolated `v`).
pub fn dominated_class(g: &Graph, c: &Coloring, v: usize) -> Result<Option<usize>, ColoringError> {
    check_domain(g, c)?;
    if v >= g.n() {
        return Err(ColoringError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let nbrs = g.neighbors(v);
    'colors: for color in 1..=c.num_colors() {
        let class = c.class(color);
        if class.is_empty() {
            continue;
        }
        for &member in class {
            if nbrs.binary_search(&member).is_err() {
                continue 'colors;
            }
        }
        return Ok(Some(color));
    }
    Ok(None)
}

/// True iff `c` is proper and every vertex has a dominated class. Rejects
/// graphs with isolated vertices, where no TD-coloring exists by definition.
pub fn is_td_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    check_domain(g, c)?;
    if g.has_isolated_vertex() {
        return Err(ColoringError::IsolatedVertex);
    }
    if !is_proper(g, c)? {
        return Ok(false);
    }
    for v in 0..g.n() {
        if dominated_class(g, c, v)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every vertex of `g` (members of `s` included) has at least one
/// neighbor in `s`.
pub fn is_total_dominating_set(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).iter().any(|&w| s.contains(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn path(n: usize) -> Graph {
        generate(Family::Path, n).unwrap()
    }

    #[test]
    fn normalization_is_value_order() {
        let c = Coloring::new(&[7, 3, 7, 9]);
        assert_eq!(c.assignment(), &[2, 1, 2, 3]);
        assert_eq!(c.num_colors(), 3);
        assert_eq!(c.class(2), &[0, 2]);
        // Already-contiguous assignments are kept verbatim.
        let c = Coloring::new(&[1, 3, 4, 2, 1]);
        assert_eq!(c.assignment(), &[1, 3, 4, 2, 1]);
    }

    #[test]
    fn proper_examples() {
        assert!(is_proper(&path(4), &Coloring::new(&[1, 2, 3, 1])).unwrap());
        assert!(!is_proper(&path(2), &Coloring::new(&[1, 1])).unwrap());
        let c3 = generate(Family::Cycle, 3).unwrap();
        assert!(is_proper(&c3, &Coloring::new(&[1, 2, 3])).unwrap());
    }

    #[test]
    fn domain_mismatch_rejected() {
        let err = is_proper(&path(4), &Coloring::new(&[1, 2])).unwrap_err();
        assert_eq!(
            err,
            ColoringError::DomainMismatch {
                got: 2,
                expected: 4
            }
        );
    }

    #[test]
    fn dominated_class_examples() {
        let p3 = path(3);
        let c = Coloring::new(&[1, 2, 1]);
        assert_eq!(dominated_class(&p3, &c, 1).unwrap(), Some(1));

        let p4 = path(4);
        let c = Coloring::new(&[1, 2, 3, 1]);
        assert_eq!(dominated_class(&p4, &c, 0).unwrap(), Some(2));

        let c = Coloring::new(&[1, 2, 1, 2]);
        assert_eq!(dominated_class(&p4, &c, 0).unwrap(), None);
    }

    #[test]
    fn td_coloring_examples() {
        let p4 = path(4);
        let c = Coloring::new(&[1, 2, 3, 1]);
        assert!(is_td_coloring(&p4, &c).unwrap());
        assert_eq!(c.num_colors(), 3);

        let p3 = path(3);
        let c = Coloring::new(&[1, 2, 1]);
        assert!(is_td_coloring(&p3, &c).unwrap());
        assert_eq!(c.num_colors(), 2);

        let p5 = path(5);
        let c = Coloring::new(&[1, 2, 1, 3, 1]);
        assert!(!is_td_coloring(&p5, &c).unwrap());
    }

    #[test]
    fn td_coloring_rejects_isolated() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            is_td_coloring(&g, &Coloring::new(&[1, 2, 3])).unwrap_err(),
            ColoringError::IsolatedVertex
        );
    }

    #[test]
    fn total_dominating_set_examples() {
        let p4 = path(4);
        let s = VertexSet::new(&p4, [1, 2]).unwrap();
        assert!(is_total_dominating_set(&p4, &s));
        let s = VertexSet::new(&p4, [0]).unwrap();
        assert!(!is_total_dominating_set(&p4, &s));
        let c4 = generate(Family::Cycle, 4).unwrap();
        let s = VertexSet::new(&c4, [0, 1]).unwrap();
        assert!(is_total_dominating_set(&c4, &s));
    }
}
