//! Classical Littlewood-Richardson coefficients by depth-first enumeration of
//! LR skew tableaux, and the classical Schubert product built on top of them.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::partition::{BoxShape, BoxedPartition, Partition};

/// A finite nonnegative combination of Schur functions (or Schubert classes),
/// `Σ c_ν s_ν`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurCombination {
    terms: BTreeMap<Partition, BigUint>,
}

impl SchurCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(p: Partition) -> Self {
        let mut c = Self::new();
        c.add(p, BigUint::from(1u32));
        c
    }

    pub fn add(&mut self, p: Partition, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry(p).or_default() += coeff;
    }

    /// Coefficient of `s_p` (zero when absent).
    pub fn coeff(&self, p: &Partition) -> BigUint {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    /// Terms in descending lexicographic order of the partition.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Partition) -> bool) {
        self.terms.retain(|p, _| keep(p));
    }
}

impl FromIterator<(Partition, BigUint)> for SchurCombination {
    fn from_iter<I: IntoIterator<Item = (Partition, BigUint)>>(iter: I) -> Self {
        let mut c = Self::new();
        for (p, v) in iter {
            c.add(p, v);
        }
        c
    }
}

struct TableauCounter<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl TableauCounter<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        // Reading right to left: entries weakly decrease along the row.
        let mut hi = if c + 1 < self.outer.part(r) { self.grid[r][c + 1] } else { self.content.len() };
        hi = hi.min(r + 1);
        let lo = if r > 0 && c >= self.inner.part(r - 1) { self.grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            let fits = self.used[v] < self.content[v - 1];
            let lattice = v == 1 || self.used[v] < self.used[v - 1];
            if fits && lattice {
                self.used[v] += 1;
                self.grid[r][c] = v;
                total += self.count(idx + 1);
                self.used[v] -= 1;
            }
        }
        self.grid[r][c] = 0;
        total
    }
}

/// `c_{λμ}^ν`: the number of semistandard skew tableaux of shape `ν/λ` and
/// content `μ` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    BigUint::from(count_lr_tableaux(lambda, mu, nu))
}

pub(crate) fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let cells = (0..nu.len()).flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c))).collect();
    let mut counter = TableauCounter {
        outer: nu,
        inner: lambda,
        content: mu.parts(),
        cells,
        grid: nu.parts().iter().map(|&p| vec![0; p]).collect(),
        used: vec![0; mu.len() + 1],
    };
    counter.count(0)
}

/// Partitions of `|λ|+|μ|` with at most `k` rows that contain both `λ` and
/// `μ` and have first part at most `λ_1 + μ_1`.
fn product_candidates(lambda: &Partition, mu: &Partition, k: usize) -> Vec<Partition> {
    let lower: Vec<usize> = (0..k).map(|i| lambda.part(i).max(mu.part(i))).collect();
    let mut suffix = vec![0; k + 1];
    for i in (0..k).rev() {
        suffix[i] = suffix[i + 1] + lower[i];
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        i: usize,
        remaining: usize,
        cap: usize,
        lower: &[usize],
        suffix: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let k = lower.len();
        if i == k {
            if remaining == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let top = cap.min(remaining - suffix[i + 1].min(remaining));
        for v in (lower[i]..=top).rev() {
            let rest = remaining - v;
            if rest < suffix[i + 1] || rest > v * (k - i - 1) {
                continue;
            }
            cur.push(v);
            rec(i + 1, rest, v, lower, suffix, cur, out);
            cur.pop();
        }
    }
    let total = lambda.weight() + mu.weight();
    if suffix[0] <= total {
        rec(0, total, lambda.first() + mu.first(), &lower, &suffix, &mut cur, &mut out);
    }
    out
}

/// `s_λ · s_μ` with every term of more than `k` rows discarded.
pub fn schur_product_k_rows(lambda: &Partition, mu: &Partition, k: usize) -> Result<SchurCombination> {
    if lambda.len() > k || mu.len() > k {
        return Err(invalid(format!("{lambda} or {mu} has more than {k} parts")));
    }
    Ok(product_candidates(lambda, mu, k)
        .into_iter()
        .filter_map(|nu| {
            let c = count_lr_tableaux(lambda, mu, &nu);
            (c > 0).then(|| (nu, BigUint::from(c)))
        })
        .collect())
}

/// The product `σ_λ · σ_μ` in `H*(Gr(k,n))`.
pub fn classical_product(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<SchurCombination> {
    check_shape(shape, lambda, mu)?;
    let mut c = schur_product_k_rows(lambda.partition(), mu.partition(), shape.k())?;
    c.retain(|nu| nu.first() <= shape.width());
    Ok(c)
}

pub(crate) fn check_shape(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<()> {
    if lambda.shape() != shape || mu.shape() != shape {
        return Err(invalid(format!("shape mismatch: expected {shape}, got {} and {}", lambda.shape(), mu.shape())));
    }
    Ok(())
}

/// Insert-only memo table for [`schur_product_k_rows`], keyed with the
/// lexicographically smaller factor first. Concurrent inserts of the same key
/// store identical values, so races are harmless.
#[derive(Debug, Default)]
pub struct LrMemo {
    table: RwLock<HashMap<(usize, Partition, Partition), Arc<SchurCombination>>>,
}

impl LrMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn product_k_rows(&self, lambda: &Partition, mu: &Partition, k: usize) -> Result<Arc<SchurCombination>> {
        let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
        let key = (k, a.clone(), b.clone());
        if let Some(hit) = self.table.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let value = Arc::new(schur_product_k_rows(a, b, k)?);
        let mut table = self.table.write().unwrap();
        Ok(table.entry(key).or_insert(value).clone())
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn combo(terms: &[(&str, u32)]) -> SchurCombination {
        terms.iter().map(|(s, c)| (p(s), BigUint::from(*c))).collect()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("4,1"), &p("3,2,1,1"), &p("5,3,2,2")), 1u32.into());
        for mu in ["3,2,1", "5,4,4,1", "0", "2,2"] {
            assert_eq!(lr_coefficient(&p(""), &p(mu), &p(mu)), 1u32.into());
        }
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), 1u32.into());
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("1,1")), 1u32.into());
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("3")), 0u32.into());
        // A classic multiplicity-two coefficient.
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2u32.into());
    }

    #[test]
    fn k_row_product_examples() {
        assert_eq!(schur_product_k_rows(&p("2,1"), &p("2,1"), 2).unwrap(), combo(&[("4,2", 1), ("3,3", 1)]));
        assert_eq!(schur_product_k_rows(&p(""), &p("3,1"), 2).unwrap(), combo(&[("3,1", 1)]));
        assert_eq!(schur_product_k_rows(&p("2,2"), &p("2,2"), 2).unwrap(), combo(&[("4,4", 1)]));
        assert!(schur_product_k_rows(&p("1,1,1"), &p("1"), 2).is_err());
    }

    #[test]
    fn classical_examples() {
        let s = BoxShape::new(4, 9).unwrap();
        let got = classical_product(s, &s.parse_boxed("4,1").unwrap(), &s.parse_boxed("3,2,1,1").unwrap());
        assert_eq!(got.unwrap(), combo(&[("5,3,2,2", 1), ("5,3,3,1", 1), ("5,4,2,1", 1)]));
        let got = classical_product(s, &s.parse_boxed("5,4,4,3").unwrap(), &s.parse_boxed("5,4,4,1").unwrap());
        assert!(got.unwrap().is_empty());

        let s = BoxShape::new(2, 4).unwrap();
        for lam in s.partitions() {
            let c = classical_product(s, &lam, &lam.dual()).unwrap();
            assert_eq!(c.coeff(&p("2,2")), 1u32.into());
        }
        let other = BoxShape::new(2, 5).unwrap();
        assert!(classical_product(s, &s.empty(), &other.empty()).is_err());
    }

    #[test]
    fn memo_matches_direct_and_is_symmetric() {
        let memo = LrMemo::new();
        let a = p("3,1");
        let b = p("2,2,1");
        let direct = schur_product_k_rows(&a, &b, 4).unwrap();
        assert_eq!(*memo.product_k_rows(&a, &b, 4).unwrap(), direct);
        assert_eq!(*memo.product_k_rows(&b, &a, 4).unwrap(), direct);
        assert_eq!(memo.len(), 1);
    }
}
