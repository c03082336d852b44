use std::fmt;

use num_traits::One;

use super::Int;

/// Finitely generated abelian group `Z^rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk`,
/// `d1 | d2 | ... | dk`, every `di >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub invariant_factors: Vec<Int>,
}

impl AbelianGroup {
    pub fn new(rank: usize, mut invariant_factors: Vec<Int>) -> Self {
        invariant_factors.retain(|d| !d.is_one());
        debug_assert!(invariant_factors.iter().all(|d| *d > Int::one()));
        debug_assert!(invariant_factors
            .windows(2)
            .all(|w| num_integer::Integer::is_multiple_of(&w[1], &w[0])));
        AbelianGroup {
            rank,
            invariant_factors,
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup::new(0, vec![])
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> Int {
        self.invariant_factors.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(format!("Z^{}", self.rank));
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
