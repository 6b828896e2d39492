//! Closed-form evaluators for the total dominator chromatic number of paths
//! and for every bound on subdivided graphs. Evaluators are total over their
//! validated ranges; out-of-range parameters are errors, never extrapolated.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("path order must be >= 2, got {0}")]
    PathTooShort(usize),
    #[error("star parameter n must be >= 3, got {0}")]
    StarTooSmall(usize),
    #[error("subdivision parameter k must be one of {{3, 4}} for stars, got {0}")]
    StarBadK(usize),
    #[error("k = {got} below threshold {min} for this bound")]
    KBelowThreshold { got: usize, min: usize },
    #[error("edge count m must be >= 1, got {0}")]
    NoEdges(usize),
}

/// Certified `[lo, hi]` interval.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundPair {
    pub lo: usize,
    pub hi: usize,
}

impl BoundPair {
    pub fn contains(&self, value: usize) -> bool {
        self.lo <= value && value <= self.hi
    }
}

/// χ_d^t(P_n): the small cases n = 2..=7 are {2, 2, 3, 4, 4, 5}; for n >= 8
/// the value is 2k+2, 2k+3, or 2k+4 according to n = 4k, 4k+1, or 4k+2/4k+3.
pub fn path_tdc(n: usize) -> Result<usize, FormulaError> {
    const SMALL: [usize; 6] = [2, 2, 3, 4, 4, 5];
    match n {
        0 | 1 => Err(FormulaError::PathTooShort(n)),
        2..=7 => Ok(SMALL[n - 2]),
        _ => {
            let k = n / 4;
            Ok(match n % 4 {
                0 => 2 * k + 2,
                1 => 2 * k + 3,
                _ => 2 * k + 4,
            })
        }
    }
}

/// χ_d^t of the subdivided star: 2n+1 for K_{1,n}^{1/3}, 2n+2 for
/// K_{1,n}^{1/4} (n >= 3).
pub fn star_sub_tdc(n: usize, k: usize) -> Result<usize, FormulaError> {
    if n < 3 {
        return Err(FormulaError::StarTooSmall(n));
    }
    match k {
        3 => Ok(2 * n + 1),
        4 => Ok(2 * n + 2),
        other => Err(FormulaError::StarBadK(other)),
    }
}

/// Sandwich bounds on χ_d^t(G^{1/k}) for a connected base with m edges and
/// k >= 2: lo = χ_d^t(P_{k+1}), hi = (m-1)·χ_d^t(P_k) + χ_d^t(P_{k+1}).
pub fn sandwich_thm22(m: usize, k: usize) -> Result<BoundPair, FormulaError> {
    if m < 1 {
        return Err(FormulaError::NoEdges(m));
    }
    if k < 2 {
        return Err(FormulaError::KBelowThreshold { got: k, min: 2 });
    }
    let lo = path_tdc(k + 1)?;
    Ok(BoundPair {
        lo,
        hi: (m - 1) * path_tdc(k)? + lo,
    })
}

/// Lower bound m·(χ_d^t(P_{k-1}) - 2) + 2, valid for k >= 9.
pub fn lower_thm24(m: usize, k: usize) -> Result<usize, FormulaError> {
    if m < 1 {
        return Err(FormulaError::NoEdges(m));
    }
    if k < 9 {
        return Err(FormulaError::KBelowThreshold { got: k, min: 9 });
    }
    Ok(m * (path_tdc(k - 1)? - 2) + 2)
}

/// The same lower bound in its mod-4 piecewise form, exactly as printed.
pub fn lower_thm25(m: usize, k: usize) -> Result<usize, FormulaError> {
    if m < 1 {
        return Err(FormulaError::NoEdges(m));
    }
    if k < 9 {
        return Err(FormulaError::KBelowThreshold { got: k, min: 9 });
    }
    Ok(match k % 4 {
        0 => m * k / 2 + 2,
        1 => m * ((k - 1) / 2) + 2,
        2 => m * ((k - 2) / 2 + 1) + 2,
        _ => m * ((k - 3) / 2 + 2) + 2,
    })
}

/// Upper bound m·(χ_d^t(P_{k+1}) - 2) + 2, valid for k >= 7.
pub fn upper_thm26(m: usize, k: usize) -> Result<usize, FormulaError> {
    if m < 1 {
        return Err(FormulaError::NoEdges(m));
    }
    if k < 7 {
        return Err(FormulaError::KBelowThreshold { got: k, min: 7 });
    }
    Ok(m * (path_tdc(k + 1)? - 2) + 2)
}

/// The same upper bound in its mod-4 piecewise form, valid for k >= 9.
pub fn upper_thm27(m: usize, k: usize) -> Result<usize, FormulaError> {
    if m < 1 {
        return Err(FormulaError::NoEdges(m));
    }
    if k < 9 {
        return Err(FormulaError::KBelowThreshold { got: k, min: 9 });
    }
    Ok(match k % 4 {
        0 => m * (k / 2 + 1) + 2,
        1 => m * ((k - 1) / 2 + 2) + 2,
        2 => m * ((k - 2) / 2 + 2) + 2,
        _ => m * ((k - 3) / 2 + 2) + 2,
    })
}

/// Henning's sandwich γ_t(G) <= χ_d^t(G) <= γ_t(G) + χ(G).
pub fn henning_bounds(gamma_t: usize, chi: usize) -> BoundPair {
    BoundPair {
        lo: gamma_t,
        hi: gamma_t + chi,
    }
}

/// γ_t(G^{1/k}) <= χ_d^t(G^{1/k}) <= γ_t(G^{1/k}) + 2, for k >= 2.
pub fn gamma_sandwich_sub(gamma_t_sub: usize) -> BoundPair {
    BoundPair {
        lo: gamma_t_sub,
        hi: gamma_t_sub + 2,
    }
}

/// χ_d^t(G^{1/k}) >= m holds for k >= 4 and is known to fail for k = 2 and
/// k = 3; `None` marks the not-applicable range.
pub fn edge_lower_thm_last(m: usize, k: usize) -> Option<usize> {
    if k >= 4 {
        Some(m)
    } else {
        None
    }
}
