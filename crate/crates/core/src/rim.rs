//! Reduction of partitions with at most `k` rows modulo `n`-rim hooks, done on
//! the `k`-bead abacus.
//!
//! Removing an `n`-rim hook subtracts `n` from one beta number. A partition
//! reduces into the box exactly when its beta numbers are pairwise distinct
//! modulo `n`; each removed rim contributes `(-1)^(k - height)`.

use crate::error::{invalid, Result};
use crate::partition::{BoxShape, BoxedPartition, Partition};

/// Outcome of [`rim_reduce`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RimReduction {
    /// No sequence of rim removals lands in the box.
    Zero,
    /// `|ρ| = |ν| + d·n`.
    Reduced { nu: BoxedPartition, d: usize, sign: i32 },
}

impl RimReduction {
    pub fn is_zero(&self) -> bool {
        matches!(self, RimReduction::Zero)
    }
}

/// `β_i = λ_i + k - i` for `i = 1..=k`; strictly decreasing.
pub fn beta_numbers(lambda: &Partition, k: usize) -> Result<Vec<usize>> {
    if lambda.len() > k {
        return Err(invalid(format!("{lambda} has more than {k} parts")));
    }
    Ok(lambda.padded(k).iter().enumerate().map(|(i, p)| p + k - 1 - i).collect())
}

/// Removes `n`-rims from `rho` until it fits the `k × (n-k)` box.
///
/// The sign is `sgn(w) · (-1)^(d(k-1))` where `w` sorts the reduced beta
/// numbers back into decreasing order.
pub fn rim_reduce(rho: &Partition, shape: BoxShape) -> Result<RimReduction> {
    let (k, n) = (shape.k(), shape.n());
    let beta = beta_numbers(rho, k)?;

    let mut seen = vec![false; n];
    let mut reduced = Vec::with_capacity(k);
    let mut d = 0;
    for b in beta {
        let r = b % n;
        if seen[r] {
            return Ok(RimReduction::Zero);
        }
        seen[r] = true;
        d += b / n;
        reduced.push(r);
    }

    // Parity of the sorting permutation = parity of its inversion count.
    let inversions: usize = (0..k).map(|i| (i + 1..k).filter(|&j| reduced[i] < reduced[j]).count()).sum();
    let odd = (inversions + d * (k - 1)) % 2 == 1;
    let sign = if odd { -1 } else { 1 };

    reduced.sort_unstable_by(|a, b| b.cmp(a));
    let parts = reduced.iter().enumerate().map(|(i, b)| b - (k - 1 - i)).collect();
    let nu = shape.boxed(Partition::from_sorted(parts))?;
    Ok(RimReduction::Reduced { nu, d, sign })
}
