/// Resource limits shared by every stage of the pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Caps {
    /// Largest accepted |M|.
    pub max_module_order: usize,
    /// Largest accepted number of submodules.
    pub max_lattice: usize,
    /// Largest graph for which the full spectrum is computed.
    pub max_spectrum: usize,
    /// Largest |A| for which the brute-force Hom oracle runs.
    pub max_oracle_order: usize,
    /// Largest number of candidate image tuples the oracle may enumerate.
    pub max_oracle_candidates: u64,
    /// Candidate budget for the oracle cross-check run while building graphs.
    pub max_cross_check: u64,
    /// Largest graph for which automorphism searches run.
    pub max_automorphism: usize,
    /// Node budget for isomorphism backtracking.
    pub iso_budget: u64,
    /// Eigenvalue tolerance.
    pub tol: f64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_module_order: 4096,
            max_lattice: 5000,
            max_spectrum: 500,
            max_oracle_order: 64,
            max_oracle_candidates: 1 << 22,
            max_cross_check: 1 << 12,
            max_automorphism: 64,
            iso_budget: 5_000_000,
            tol: 1e-9,
        }
    }
}
