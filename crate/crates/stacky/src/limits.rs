/// Configured bounds for the searches in this crate.
///
/// Exceeding a bound is an error ([`crate::Error::OrderBoundExceeded`] or
/// [`crate::Error::BudgetExceeded`]), never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group produced by permutation closure.
    pub max_group_order: usize,
    /// Largest group whose automorphisms are enumerated.
    pub max_aut_order: usize,
    /// Largest groups handed to the isomorphism test.
    pub max_iso_order: usize,
    /// Default coset-table size for Todd-Coxeter.
    pub max_cosets: usize,
    /// Node budget for homomorphism counting.
    pub hom_budget: u64,
    /// Largest acting group for second cohomology.
    pub max_h2_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 20160,
            max_aut_order: 128,
            max_iso_order: 512,
            max_cosets: 1_000_000,
            hom_budget: 50_000_000,
            max_h2_order: 24,
        }
    }
}
