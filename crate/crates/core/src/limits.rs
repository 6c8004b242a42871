/// Size caps and execution mode shared by the heavier operations.
///
/// Every cap is a plain value so desk-scale limits can be raised from the
/// command line without recompiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum order of a group built by closure.
    pub closure_cap: usize,
    /// Groups up to this order get a cached multiplication table.
    pub table_cap: usize,
    /// Maximum order for automorphism searches.
    pub automorphism_cap: usize,
    /// Maximum order for subgroup lattice enumeration.
    pub lattice_cap: usize,
    /// Maximum number of word evaluations for brute-force counting and tuple scans.
    pub oracle_budget: u128,
    /// Maximum order of a universal cover group built element by element.
    pub cover_closure_cap: usize,
    /// Run data-parallel kernels on the rayon pool. Ignored without the
    /// `parallel` feature.
    pub parallel: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            closure_cap: 2_000_000,
            table_cap: 4096,
            automorphism_cap: 2000,
            lattice_cap: 1200,
            oracle_budget: 100_000_000,
            cover_closure_cap: 10_000_000,
            parallel: true,
        }
    }
}

impl Limits {
    pub fn sequential() -> Self {
        Limits {
            parallel: false,
            ..Limits::default()
        }
    }
}
