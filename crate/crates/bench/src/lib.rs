//! Benchmark fixtures shared by the criterion targets.

use exreg_core::{FamilyId, Prime};

/// Coprime (q, r) pairs for `family` with q up to `q_max` and prime r up to `r_max`.
pub fn workload(family: FamilyId, q_max: u64, r_max: u64) -> Vec<(u64, Prime)> {
    let primes = exreg_core::arith::primes_up_to(r_max);
    family
        .valid_qs(q_max)
        .into_iter()
        .flat_map(|q| {
            primes
                .iter()
                .filter(move |r| q % r.get() != 0)
                .map(move |&r| (q, r))
        })
        .collect()
}
