use serde::{Deserialize, Serialize};

/// Switches for the conditions whose inclusion had to be calibrated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Toggles {
    /// Require `k_1 < s < k_r` for valency arrays.
    pub bracket_condition: bool,
    /// Require `(2t-1)² < 8n` for spectral parameter arrays.
    pub apply_n_lower_bound: bool,
    /// Refute candidates meeting the Bell-Rowlinson bound with equality.
    pub apply_br_uniqueness: bool,
    /// Require `k_r <= n - 2`: a vertex of degree `n - 1` makes the graph a cone.
    pub non_cone_cap: bool,
}

impl Default for Toggles {
    fn default() -> Self {
        Self {
            bracket_condition: true,
            apply_n_lower_bound: false,
            apply_br_uniqueness: true,
            non_cone_cap: true,
        }
    }
}
