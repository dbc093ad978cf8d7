//! Schur polynomials in `m` variables as explicit monomial sums.
//!
//! Used as an oracle for [`crate::classical`]: a product of Schur polynomials
//! is expanded monomial by monomial and then re-expanded in the Schur basis by
//! repeatedly peeling off the lexicographically leading dominant monomial.
//! Nothing here touches LR tableaux.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::error::{invalid, Error, Result};
use crate::partition::Partition;

/// Upper bound on the number of monomial products formed during expansion.
pub const MONOMIAL_GUARD: u128 = 10_000_000;

type Poly = HashMap<Vec<u16>, i128>;

/// Monomial expansion of `s_λ(x_1..x_m)`, by semistandard tableaux.
fn schur_polynomial(lambda: &Partition, m: usize) -> Poly {
    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        m: usize,
        grid: &mut Vec<Vec<u16>>,
        content: &mut Vec<u16>,
        out: &mut Poly,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            *out.entry(content.clone()).or_default() += 1;
            return;
        };
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=m as u16 {
            grid[r][c] = v;
            content[v as usize - 1] += 1;
            rec(cells, idx + 1, m, grid, content, out);
            content[v as usize - 1] -= 1;
        }
    }
    let mut out = Poly::new();
    if lambda.len() > m {
        return out;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len()).flat_map(|r| (0..lambda.part(r)).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u16>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    rec(&cells, 0, m, &mut grid, &mut vec![0; m], &mut out);
    out
}

fn multiply(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut out = Poly::with_capacity(a.len() * 2);
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let prod = ca.checked_mul(*cb).ok_or_else(overflow)?;
            let slot = out.entry(e).or_default();
            *slot = slot.checked_add(prod).ok_or_else(overflow)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn overflow() -> Error {
    Error::ResourceLimit("monomial coefficient overflow".into())
}

fn dominant_part(p: &Poly) -> BTreeMap<Partition, i128> {
    p.iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (Partition::from_sorted(e.iter().map(|&x| x as usize).collect()), *c))
        .collect()
}

/// Expands `Π s_λ` in `m` variables and returns its Schur-basis coefficients.
/// Only partitions with at most `m` rows can appear.
pub fn schur_expand_monomials(lambdas: &[Partition], m: usize) -> Result<BTreeMap<Partition, BigInt>> {
    if m == 0 {
        return Err(invalid("need at least one variable"));
    }
    if let Some(bad) = lambdas.iter().find(|l| l.len() > m) {
        return Err(invalid(format!("{bad} has more than {m} parts")));
    }
    let factors: Vec<Poly> = lambdas.iter().map(|l| schur_polynomial(l, m)).collect();
    let work: u128 = factors.iter().map(|f| f.len() as u128).product();
    if work > MONOMIAL_GUARD {
        return Err(Error::ResourceLimit(format!(
            "dense expansion needs {work} monomial products (limit {MONOMIAL_GUARD})"
        )));
    }
    let mut product = Poly::from([(vec![0; m], 1)]);
    for f in &factors {
        product = multiply(&product, f)?;
    }

    let mut remaining = dominant_part(&product);
    let mut kostka_cache: HashMap<Partition, BTreeMap<Partition, i128>> = HashMap::new();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = remaining.iter().next_back().map(|(p, c)| (p.clone(), *c)) {
        let row = kostka_cache.entry(lead.clone()).or_insert_with(|| dominant_part(&schur_polynomial(&lead, m)));
        for (alpha, k) in row.iter() {
            let slot = remaining.entry(alpha.clone()).or_default();
            *slot -= c * k;
            if *slot == 0 {
                remaining.remove(alpha);
            }
        }
        out.insert(lead, BigInt::from(c));
    }
    Ok(out)
}
