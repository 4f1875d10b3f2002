//! Consistency audit of isotypic tables against Fukuda's chain lemma: if
//! P_n^{τ,γ} is nondegenerate for n > 1, then for each 1 ≤ i < n some simple
//! D_i has P_i^{τ,D_i} and P_{n−i}^{D_i,γ} nondegenerate.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coalgebra::IsotypicKey;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FukudaFailure {
    pub n: usize,
    pub key: IsotypicKey,
    pub i: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FukudaReport {
    /// Nondegenerate components with n > 1 that were checked.
    pub checked: usize,
    pub failures: Vec<FukudaFailure>,
}

impl FukudaReport {
    pub fn consistent(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `nondegenerate[n]` lists the (τ, γ) with P_n^{τ,γ} ⊄ P_{n−1}; `blocks`
/// is the number of simple subcoalgebras.
pub fn fukuda_chain_check(nondegenerate: &[BTreeSet<IsotypicKey>], blocks: usize) -> FukudaReport {
    let nd = |n: usize, left: usize, right: usize| nondegenerate.get(n).is_some_and(|s| s.contains(&IsotypicKey { left, right }));
    let mut checked = 0;
    let mut failures = Vec::new();
    for (n, keys) in nondegenerate.iter().enumerate().skip(2) {
        for key in keys {
            checked += 1;
            for i in 1..n {
                if !(0..blocks).any(|d| nd(i, key.left, d) && nd(n - i, d, key.right)) {
                    failures.push(FukudaFailure { n, key: *key, i });
                }
            }
        }
    }
    FukudaReport { checked, failures }
}
