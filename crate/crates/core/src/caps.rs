//! Resource guards for the engine.
//!
//! Groebner-type computations can blow up without warning. Every
//! potentially unbounded loop in this crate checks one of these caps and
//! fails with [`Error::ResourceExceeded`](crate::Error::ResourceExceeded)
//! instead of hanging.

/// Caps on the sizes the engine is allowed to reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements in a basis under construction.
    pub max_basis: usize,
    /// Maximum number of pending S-pairs.
    pub max_pairs: usize,
    /// Maximum number of terms in any single polynomial.
    pub max_terms: usize,
    /// Maximum size of an enumerated monomial set (graded-piece spans).
    pub max_monomials: usize,
    /// Maximum number of subproblems in the Hilbert-series recursion.
    pub max_hilbert_nodes: usize,
}

impl Caps {
    /// Deliberately small caps, mainly useful to make runaway inputs fail fast.
    pub fn tiny() -> Self {
        Caps {
            max_basis: 12,
            max_pairs: 128,
            max_terms: 10_000,
            max_monomials: 1_000,
            max_hilbert_nodes: 1_000,
        }
    }

    pub fn large() -> Self {
        Caps {
            max_basis: 40_000,
            max_pairs: 4_000_000,
            max_terms: 5_000_000,
            max_monomials: 10_000_000,
            max_hilbert_nodes: 10_000_000,
        }
    }

    pub fn unlimited() -> Self {
        Caps {
            max_basis: usize::MAX,
            max_pairs: usize::MAX,
            max_terms: usize::MAX,
            max_monomials: usize::MAX,
            max_hilbert_nodes: usize::MAX,
        }
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_basis: 4_000,
            max_pairs: 400_000,
            max_terms: 500_000,
            max_monomials: 1_000_000,
            max_hilbert_nodes: 1_000_000,
        }
    }
}
