/// Size limits applied by constructors and exhaustive searches.
///
/// Exceeding a cap is always an error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order for subgroup enumeration and searches.
    pub max_order: usize,
    /// Largest ambient Hilbert-space dimension for models.
    pub max_dim: usize,
    /// Largest group order for which a multiplication table is stored.
    pub max_table_order: usize,
    /// Largest `|G|^n · n!` accepted by the permutation semidirect product.
    pub max_perm_product: usize,
    /// Largest ambient dimension accepted by code searches.
    pub max_search_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 64,
            max_dim: 64,
            max_table_order: 4096,
            max_perm_product: 1_000_000,
            max_search_dim: 16,
        }
    }
}

impl Caps {
    /// Defaults overridden by `QECLAB_MAX_ORDER` and `QECLAB_MAX_DIM`.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(v) = read_env("QECLAB_MAX_ORDER") {
            caps.max_order = v;
        }
        if let Some(v) = read_env("QECLAB_MAX_DIM") {
            caps.max_dim = v;
        }
        caps
    }
}

fn read_env(key: &str) -> Option<usize> {
    std::env::var(key).ok()?.trim().parse().ok()
}
