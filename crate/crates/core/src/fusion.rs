//! Numerical cross-check through the fusion ring of `U(k)` at level `n - k`.
//!
//! Specializing `q = 1` turns `QH*(Gr(k,n))` into a semisimple algebra whose
//! characters are evaluations of Schur polynomials at `k`-subsets of the
//! roots of `x^n = (-1)^(k-1)`. Given the square table of those evaluations,
//! the structure constants of `σ_λ σ_μ` are recovered by solving one linear
//! system per pair, with no normalization constants involved.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector, LU};
use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{inconsistent, Error, Result};
use crate::partition::{BoxShape, BoxedPartition, Partition};
use crate::quantum::QuantumRing;

/// Largest `n` accepted by [`CharacterTable::new`]; `C(12,6) = 924`.
pub const MAX_N: usize = 12;
/// Bound on both the solve residual and the distance to the nearest integer.
pub const TOLERANCE: f64 = 1e-6;
/// Smallest accepted ratio of the smallest to the largest LU pivot magnitude.
pub const PIVOT_RATIO_FLOOR: f64 = 1e-10;

/// `M[S][ν] = s_ν(x_S)`, rows indexed by `k`-subsets `S` of `{0..n-1}` in
/// lexicographic order and columns by boxed partitions in
/// [`BoxShape::partitions`] order. The point `x_S` has coordinates
/// `exp(πi (2s + k - 1) / n)` for `s ∈ S`.
pub struct CharacterTable {
    shape: BoxShape,
    subsets: Vec<Vec<usize>>,
    columns: Vec<BoxedPartition>,
    index: BTreeMap<Partition, usize>,
    values: DMatrix<Complex64>,
    lu: LU<Complex64, nalgebra::Dyn, nalgebra::Dyn>,
    pivot_ratio: f64,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..=n - (k - cur.len()) {
            cur.push(s);
            rec(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `x^e` for `x = exp(πi·odd/n)`, reducing the angle exactly first.
fn root_power(odd: usize, e: usize, n: usize) -> Complex64 {
    let num = (odd * e) % (2 * n);
    Complex64::from_polar(1.0, std::f64::consts::PI * num as f64 / n as f64)
}

fn schur_value(subset: &[usize], nu: &Partition, shape: BoxShape, denom: Complex64) -> Complex64 {
    let k = shape.k();
    let parts = nu.padded(k);
    let m = DMatrix::from_fn(k, k, |i, j| root_power(2 * subset[j] + k - 1, parts[i] + k - 1 - i, shape.n()));
    m.determinant() / denom
}

impl CharacterTable {
    pub fn new(shape: BoxShape) -> Result<Self> {
        if shape.n() > MAX_N {
            return Err(Error::ResourceLimit(format!("character table for {shape} exceeds n <= {MAX_N}")));
        }
        let k = shape.k();
        let subsets = subsets(shape.n(), k);
        let columns = shape.partitions();
        if subsets.len() != columns.len() {
            return Err(inconsistent(format!("{} points but {} classes for {shape}", subsets.len(), columns.len())));
        }
        let size = columns.len();
        let empty = Partition::empty();
        let mut values = DMatrix::zeros(size, size);
        for (r, s) in subsets.iter().enumerate() {
            // Vandermonde denominator: the Schur numerator for the empty partition.
            let denom = schur_value(s, &empty, shape, Complex64::new(1.0, 0.0));
            for (c, nu) in columns.iter().enumerate() {
                values[(r, c)] = schur_value(s, nu.partition(), shape, denom);
            }
        }
        let lu = values.clone().lu();
        let pivots: Vec<f64> = (0..size).map(|i| lu.u()[(i, i)].norm()).collect();
        let max = pivots.iter().cloned().fold(0.0, f64::max);
        let min = pivots.iter().cloned().fold(f64::INFINITY, f64::min);
        let pivot_ratio = if max > 0.0 { min / max } else { 0.0 };
        if pivot_ratio < PIVOT_RATIO_FLOOR {
            return Err(inconsistent(format!("character table for {shape} is singular (pivot ratio {pivot_ratio:e})")));
        }
        let index = columns.iter().enumerate().map(|(i, c)| (c.partition().clone(), i)).collect();
        Ok(CharacterTable { shape, subsets, columns, index, values, lu, pivot_ratio })
    }

    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn columns(&self) -> &[BoxedPartition] {
        &self.columns
    }

    pub fn values(&self) -> &DMatrix<Complex64> {
        &self.values
    }

    pub fn pivot_ratio(&self) -> f64 {
        self.pivot_ratio
    }

    fn column(&self, p: &BoxedPartition) -> Result<usize> {
        if p.shape() != self.shape {
            return Err(Error::InvalidInput(format!("{p} is not a class of {}", self.shape)));
        }
        Ok(self.index[p.partition()])
    }
}

/// Structure constants of `V_λ ⊗ V_μ` recovered from the character table.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionProduct {
    pub coefficients: BTreeMap<Partition, u64>,
    /// `max_S |(M c - rhs)_S|` for the unrounded solution.
    pub residual: f64,
    /// `max_ν |c_ν - round(c_ν)|`, imaginary parts included.
    pub rounding: f64,
}

pub fn fusion_product(table: &CharacterTable, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<FusionProduct> {
    let (a, b) = (table.column(lambda)?, table.column(mu)?);
    let size = table.columns.len();
    let rhs = DVector::from_fn(size, |r, _| table.values[(r, a)] * table.values[(r, b)]);
    let sol =
        table.lu.solve(&rhs).ok_or_else(|| inconsistent(format!("character table for {} is singular", table.shape)))?;
    let residual = (&table.values * &sol - &rhs).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut rounding: f64 = 0.0;
    let mut coefficients = BTreeMap::new();
    for (i, c) in sol.iter().enumerate() {
        let nearest = c.re.round();
        rounding = rounding.max((c - Complex64::new(nearest, 0.0)).norm());
        if nearest < 0.0 {
            return Err(inconsistent(format!(
                "fusion coefficient {nearest} of {} in {lambda} ⊗ {mu}",
                table.columns[i]
            )));
        }
        if nearest > 0.0 {
            coefficients.insert(table.columns[i].partition().clone(), nearest as u64);
        }
    }
    if !(residual < TOLERANCE && rounding < TOLERANCE) {
        return Err(Error::Numerical(format!(
            "{lambda} ⊗ {mu} in {}: residual {residual:e}, rounding error {rounding:e}",
            table.shape
        )));
    }
    Ok(FusionProduct { coefficients, residual, rounding })
}

/// Summary of [`verify_quantum_vs_fusion`].
#[derive(Clone, Debug, PartialEq)]
pub struct FusionReport {
    pub shape: BoxShape,
    pub pairs: usize,
    pub max_residual: f64,
    pub max_rounding: f64,
    pub mismatches: Vec<String>,
}

/// Compares the fusion structure constants with the degree-collapsed quantum
/// product for one pair; `None` when they agree.
pub fn compare_pair(
    table: &CharacterTable,
    ring: &QuantumRing,
    lambda: &BoxedPartition,
    mu: &BoxedPartition,
) -> Result<(FusionProduct, Option<String>)> {
    let fusion = fusion_product(table, lambda, mu)?;
    let product = ring.product(lambda, mu)?;
    let collapsed: BTreeMap<Partition, BigInt> = product.collapse_degrees();
    let fused: BTreeMap<Partition, BigInt> =
        fusion.coefficients.iter().map(|(p, c)| (p.clone(), BigInt::from(*c))).collect();
    let n = table.shape.n();
    let total = lambda.weight() + mu.weight();
    let misgraded = fused.keys().find(|nu| nu.weight() > total || !(total - nu.weight()).is_multiple_of(n));
    let mismatch = if collapsed != fused {
        Some(format!("{lambda} * {mu}: quantum {product} vs fusion {:?}", fusion.coefficients))
    } else {
        misgraded.map(|nu| format!("{lambda} * {mu}: fusion term {nu} has no valid degree"))
    };
    Ok((fusion, mismatch))
}

/// Checks every pair `(λ, μ)` of the shape, in parallel.
pub fn verify_quantum_vs_fusion(shape: BoxShape) -> Result<FusionReport> {
    let table = CharacterTable::new(shape)?;
    let ring = QuantumRing::new(shape);
    let all = shape.partitions();
    let pairs: Vec<(&BoxedPartition, &BoxedPartition)> =
        all.iter().flat_map(|l| all.iter().map(move |m| (l, m))).collect();
    verify_pairs(&table, &ring, &pairs)
}

pub fn verify_pairs(
    table: &CharacterTable,
    ring: &QuantumRing,
    pairs: &[(&BoxedPartition, &BoxedPartition)],
) -> Result<FusionReport> {
    let results = pairs.par_iter().map(|(l, m)| compare_pair(table, ring, l, m)).collect::<Result<Vec<_>>>()?;
    let mut report = FusionReport {
        shape: table.shape,
        pairs: pairs.len(),
        max_residual: 0.0,
        max_rounding: 0.0,
        mismatches: Vec::new(),
    };
    for (f, mismatch) in results {
        report.max_residual = report.max_residual.max(f.residual);
        report.max_rounding = report.max_rounding.max(f.rounding);
        report.mismatches.extend(mismatch);
    }
    if !report.mismatches.is_empty() {
        return Err(inconsistent(format!(
            "{} of {} pairs in {} disagree with the fusion ring; first: {}",
            report.mismatches.len(),
            report.pairs,
            table.shape,
            report.mismatches[0]
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(k: usize, n: usize) -> BoxShape {
        BoxShape::new(k, n).unwrap()
    }

    fn close(a: Complex64, re: f64) -> bool {
        (a - Complex64::new(re, 0.0)).norm() < 1e-12
    }

    #[test]
    fn projective_line_table() {
        let t = CharacterTable::new(shape(1, 2)).unwrap();
        assert_eq!(t.subsets(), &[vec![0], vec![1]]);
        let v = t.values();
        assert!(close(v[(0, 0)], 1.0) && close(v[(0, 1)], 1.0));
        assert!(close(v[(1, 0)], 1.0) && close(v[(1, 1)], -1.0));
    }

    #[test]
    fn empty_column_is_ones_and_tables_are_square() {
        for s in BoxShape::all_up_to(7) {
            let t = CharacterTable::new(s).unwrap();
            assert_eq!(t.values().nrows(), t.values().ncols());
            assert_eq!(t.columns()[0], s.empty());
            assert!(t.values().column(0).iter().all(|z| close(*z, 1.0)), "{s}");
        }
        let t = CharacterTable::new(shape(2, 4)).unwrap();
        assert_eq!(t.values().nrows(), 6);
        assert!(t.pivot_ratio() > PIVOT_RATIO_FLOOR);
    }

    #[test]
    fn guard() {
        assert!(matches!(CharacterTable::new(shape(2, 13)), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn fusion_examples() {
        let s = shape(2, 4);
        let t = CharacterTable::new(s).unwrap();
        let one = s.parse_boxed("1").unwrap();
        let f = fusion_product(&t, &one, &one).unwrap();
        let want: BTreeMap<Partition, u64> = [("2".parse().unwrap(), 1), ("1,1".parse().unwrap(), 1)].into();
        assert_eq!(f.coefficients, want);
        for mu in s.partitions() {
            let f = fusion_product(&t, &s.empty(), &mu).unwrap();
            assert_eq!(f.coefficients, [(mu.partition().clone(), 1)].into());
        }
    }

    #[test]
    fn gr49_pair_fusion() {
        let s = shape(4, 9);
        let t = CharacterTable::new(s).unwrap();
        let f = fusion_product(&t, &s.parse_boxed("5,4,4,3").unwrap(), &s.parse_boxed("5,4,4,1").unwrap()).unwrap();
        let got: Vec<(String, u64)> = f.coefficients.iter().map(|(p, c)| (p.to_string(), *c)).collect();
        let want = [("(1,1,1)", 1), ("(2,1)", 2), ("(3)", 1), ("(5,3,2,2)", 1), ("(5,3,3,1)", 1), ("(5,4,2,1)", 1)];
        assert_eq!(got, want.map(|(p, c)| (p.to_string(), c)));
    }

    #[test]
    fn small_sweeps() {
        let r = verify_quantum_vs_fusion(shape(2, 4)).unwrap();
        assert_eq!((r.pairs, r.mismatches.len()), (36, 0));
        let r = verify_quantum_vs_fusion(shape(1, 2)).unwrap();
        assert_eq!((r.pairs, r.mismatches.len()), (4, 0));
    }
}
