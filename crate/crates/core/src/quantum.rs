//! The small quantum cohomology ring `QH*(Gr(k,n))`.
//!
//! Products are computed by the rim-hook rule: multiply in the Schur basis
//! keeping at most `k` rows, then reduce every term modulo `n`-rims. Each
//! removed rim contributes a factor of `q` (of degree `n`).

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::classical::{check_shape, schur_product_k_rows, LrMemo, SchurCombination};
use crate::error::{inconsistent, invalid, Result};
use crate::partition::{BoxShape, BoxedPartition, Partition};
use crate::rim::{rim_reduce, RimReduction};

/// A `Z[q]`-combination `Σ c · q^d σ_ν` of Schubert classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumClass {
    shape: BoxShape,
    terms: BTreeMap<(usize, Reverse<Partition>), BigInt>,
}

impl QuantumClass {
    pub fn zero(shape: BoxShape) -> Self {
        QuantumClass { shape, terms: BTreeMap::new() }
    }

    /// `σ_∅`, the unit.
    pub fn one(shape: BoxShape) -> Self {
        Self::schubert(&shape.empty())
    }

    pub fn schubert(lambda: &BoxedPartition) -> Self {
        Self::monomial(lambda, 0, BigInt::one())
    }

    /// `coeff · q^d σ_ν`.
    pub fn monomial(nu: &BoxedPartition, d: usize, coeff: BigInt) -> Self {
        let mut c = Self::zero(nu.shape());
        c.add_term(d, nu.partition().clone(), coeff);
        c
    }

    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    fn add_term(&mut self, d: usize, nu: Partition, coeff: BigInt) {
        debug_assert!(self.shape.fits(&nu));
        if coeff.is_zero() {
            return;
        }
        let key = (d, Reverse(nu));
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms by ascending `d`, then descending lexicographic `ν`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Partition, &BigInt)> {
        self.terms.iter().map(|((d, Reverse(nu)), c)| (*d, nu, c))
    }

    pub fn coeff(&self, d: usize, nu: &Partition) -> BigInt {
        self.terms.get(&(d, Reverse(nu.clone()))).cloned().unwrap_or_default()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Powers of `q` that occur.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|(d, _)| *d).collect()
    }

    /// The coefficient of `q^d` as a combination of classes. Fails when a
    /// coefficient there is negative.
    pub fn layer(&self, d: usize) -> Result<SchurCombination> {
        self.terms()
            .filter(|(e, _, _)| *e == d)
            .map(|(_, nu, c)| {
                c.to_biguint()
                    .map(|c| (nu.clone(), c))
                    .ok_or_else(|| inconsistent(format!("negative coefficient {c} at q^{d} {nu}")))
            })
            .collect()
    }

    /// Sets `q = 1` and sums over degrees.
    pub fn collapse_degrees(&self) -> BTreeMap<Partition, BigInt> {
        let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (_, nu, c) in self.terms() {
            *out.entry(nu.clone()).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `c · q^d`.
    pub fn scale(&self, c: &BigInt, d: usize) -> QuantumClass {
        let mut out = Self::zero(self.shape);
        for (e, nu, v) in self.terms() {
            out.add_term(e + d, nu.clone(), v * c);
        }
        out
    }
}

impl Add for &QuantumClass {
    type Output = QuantumClass;

    fn add(self, rhs: &QuantumClass) -> QuantumClass {
        assert_eq!(self.shape, rhs.shape, "adding classes of different shapes");
        let mut out = self.clone();
        for (d, nu, c) in rhs.terms() {
            out.add_term(d, nu.clone(), c.clone());
        }
        out
    }
}

impl Neg for &QuantumClass {
    type Output = QuantumClass;

    fn neg(self) -> QuantumClass {
        self.scale(&BigInt::from(-1), 0)
    }
}

impl Sub for &QuantumClass {
    type Output = QuantumClass;

    fn sub(self, rhs: &QuantumClass) -> QuantumClass {
        self + &(-rhs)
    }
}

/// Plain text, e.g. `q^2*s[5,3,2,2] + 2*q*s[1] - s[]`.
impl fmt::Display for QuantumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, nu, c)) in self.terms().enumerate() {
            let neg = c.sign() == Sign::Minus;
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.magnitude();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match d {
                0 => {}
                1 => write!(f, "q*")?,
                _ => write!(f, "q^{d}*")?,
            }
            let parts: Vec<String> = nu.parts().iter().map(|p| p.to_string()).collect();
            write!(f, "s[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

fn reduce_combination(shape: BoxShape, combo: &SchurCombination) -> Result<QuantumClass> {
    let mut out = QuantumClass::zero(shape);
    for (rho, c) in combo.iter() {
        if let RimReduction::Reduced { nu, d, sign } = rim_reduce(rho, shape)? {
            let c = BigInt::from_biguint(Sign::Plus, c.clone());
            out.add_term(d, nu.into_partition(), if sign < 0 { -c } else { c });
        }
    }
    Ok(out)
}

fn check_schubert_product(product: &QuantumClass, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<()> {
    if let Some((d, nu, c)) = product.terms().find(|(_, _, c)| c.is_negative()) {
        return Err(inconsistent(format!("σ{lambda} * σ{mu} has coefficient {c} at q^{d} σ{nu}")));
    }
    if product.is_zero() {
        return Err(inconsistent(format!("σ{lambda} * σ{mu} vanished")));
    }
    Ok(())
}

/// `σ_λ * σ_μ` by the rim-hook rule.
pub fn quantum_product(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<QuantumClass> {
    check_shape(shape, lambda, mu)?;
    let combo = schur_product_k_rows(lambda.partition(), mu.partition(), shape.k())?;
    let product = reduce_combination(shape, &combo)?;
    check_schubert_product(&product, lambda, mu)?;
    Ok(product)
}

/// The Gromov-Witten number `c_{λμ}^ν(d)`, the coefficient of `q^d σ_ν`.
pub fn quantum_lr(
    shape: BoxShape,
    lambda: &BoxedPartition,
    mu: &BoxedPartition,
    nu: &BoxedPartition,
    d: usize,
) -> Result<BigUint> {
    check_shape(shape, lambda, mu)?;
    check_shape(shape, nu, nu)?;
    if nu.weight() + d * shape.n() != lambda.weight() + mu.weight() {
        return Ok(BigUint::zero());
    }
    let product = quantum_product(shape, lambda, mu)?;
    Ok(product.coeff(d, nu.partition()).to_biguint().unwrap_or_default())
}

/// `σ_(a,…,a) * σ_λ = q^m σ_λ'`: glue a `k × a` rectangle to the left of `λ`
/// and strip `n`-rims. Returns `(m, λ')`.
pub fn rectangle_multiply(shape: BoxShape, a: usize, lambda: &BoxedPartition) -> Result<(usize, BoxedPartition)> {
    if a > shape.width() {
        return Err(invalid(format!("rectangle width {a} exceeds {}", shape.width())));
    }
    check_shape(shape, lambda, lambda)?;
    let glued = lambda.partition().add_left_rectangle(a, shape.k())?;
    let (d, nu) = match rim_reduce(&glued, shape)? {
        RimReduction::Reduced { nu, d, sign: 1 } => (d, nu),
        other => {
            return Err(inconsistent(format!("rectangle {a} times {lambda} reduced to {other:?}")));
        }
    };
    let expected = QuantumClass::monomial(&nu, d, BigInt::one());
    let product = quantum_product(shape, &shape.rectangle(a), lambda)?;
    if product != expected {
        return Err(inconsistent(format!("rectangle rule gives {expected} but the product is {product}")));
    }
    Ok((d, nu))
}

/// Result of [`QuantumRing::presentation_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub shape: BoxShape,
    /// `h_m` for `m = 0..=n`.
    pub h: Vec<QuantumClass>,
    /// Number of relations confirmed: `k - 1` vanishings plus `h_n`.
    pub relations_checked: usize,
}

/// The quantum ring of one Grassmannian with a memoized multiplication table.
/// Safe to share between threads.
#[derive(Debug)]
pub struct QuantumRing {
    shape: BoxShape,
    memo: Arc<LrMemo>,
    table: RwLock<HashMap<(Partition, Partition), Arc<QuantumClass>>>,
}

impl QuantumRing {
    pub fn new(shape: BoxShape) -> Self {
        Self::with_memo(shape, Arc::new(LrMemo::new()))
    }

    /// Shares classical products with other rings (they depend only on `k`).
    pub fn with_memo(shape: BoxShape, memo: Arc<LrMemo>) -> Self {
        QuantumRing { shape, memo, table: RwLock::new(HashMap::new()) }
    }

    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    /// Memoized `σ_λ * σ_μ`.
    pub fn product(&self, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<Arc<QuantumClass>> {
        check_shape(self.shape, lambda, mu)?;
        let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
        let key = (a.partition().clone(), b.partition().clone());
        if let Some(hit) = self.table.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let combo = self.memo.product_k_rows(a.partition(), b.partition(), self.shape.k())?;
        let product = reduce_combination(self.shape, &combo)?;
        check_schubert_product(&product, lambda, mu)?;
        let product = Arc::new(product);
        Ok(self.table.write().unwrap().entry(key).or_insert(product).clone())
    }

    fn boxed(&self, p: &Partition) -> BoxedPartition {
        self.shape.boxed(p.clone()).expect("class terms are boxed")
    }

    /// Bilinear extension of [`Self::product`].
    pub fn multiply(&self, x: &QuantumClass, y: &QuantumClass) -> Result<QuantumClass> {
        if x.shape != self.shape || y.shape != self.shape {
            return Err(invalid("multiplying classes from a different Grassmannian"));
        }
        let mut out = QuantumClass::zero(self.shape);
        for (dx, nx, cx) in x.terms() {
            for (dy, ny, cy) in y.terms() {
                let p = self.product(&self.boxed(nx), &self.boxed(ny))?;
                let coeff = cx * cy;
                for (d, nu, c) in p.terms() {
                    out.add_term(d + dx + dy, nu.clone(), c * &coeff);
                }
            }
        }
        Ok(out)
    }

    /// `e_m = σ_(1^m)` for `0 <= m <= k`, zero otherwise.
    pub fn elementary(&self, m: isize) -> QuantumClass {
        if m < 0 || m as usize > self.shape.k() {
            return QuantumClass::zero(self.shape);
        }
        QuantumClass::schubert(&self.boxed(&Partition::from_sorted(vec![1; m as usize])))
    }

    /// `h_m = σ_(m)` for `0 <= m <= n-k`, zero for negative `m`. Larger `m`
    /// are defined by recursion in [`Self::presentation_check`].
    fn complete_seed(&self, m: isize) -> QuantumClass {
        if m < 0 || m as usize > self.shape.width() {
            return QuantumClass::zero(self.shape);
        }
        QuantumClass::schubert(&self.boxed(&Partition::from_sorted(vec![m as usize])))
    }

    /// Expands `det(e_{λ'_i + j - i})` over permutations using quantum
    /// products and checks it equals `σ_λ` with no `q` terms.
    pub fn giambelli_check(&self, lambda: &BoxedPartition) -> Result<bool> {
        check_shape(self.shape, lambda, lambda)?;
        let conj = lambda.partition().conjugate();
        let size = conj.len();
        let entry = |i: usize, j: usize| self.elementary(conj.part(i) as isize + j as isize - i as isize);

        struct Expansion<'a, F> {
            ring: &'a QuantumRing,
            entry: F,
            size: usize,
            used: Vec<bool>,
            total: QuantumClass,
        }
        impl<F: Fn(usize, usize) -> QuantumClass> Expansion<'_, F> {
            fn run(&mut self, row: usize, odd: bool, acc: QuantumClass) -> Result<()> {
                if row == self.size {
                    self.total = if odd { &self.total - &acc } else { &self.total + &acc };
                    return Ok(());
                }
                for col in 0..self.size {
                    if self.used[col] {
                        continue;
                    }
                    let e = (self.entry)(row, col);
                    if e.is_zero() {
                        continue;
                    }
                    let flips = self.used[col + 1..].iter().filter(|u| **u).count();
                    let next = self.ring.multiply(&acc, &e)?;
                    self.used[col] = true;
                    self.run(row + 1, odd ^ (flips % 2 == 1), next)?;
                    self.used[col] = false;
                }
                Ok(())
            }
        }

        let mut exp =
            Expansion { ring: self, entry, size, used: vec![false; size], total: QuantumClass::zero(self.shape) };
        exp.run(0, false, QuantumClass::one(self.shape))?;
        Ok(exp.total == QuantumClass::schubert(lambda))
    }

    /// Builds `h_m` for `m > n-k` from `h_m = Σ_{i=1..k} (-1)^(i-1) e_i * h_{m-i}`
    /// and confirms `h_{n-k+1} = … = h_{n-1} = 0` and `h_n = (-1)^(k-1) q`.
    pub fn presentation_check(&self) -> Result<PresentationReport> {
        let (k, n, w) = (self.shape.k(), self.shape.n(), self.shape.width());
        let mut h: Vec<QuantumClass> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            if m <= w {
                h.push(self.complete_seed(m as isize));
                continue;
            }
            let mut acc = QuantumClass::zero(self.shape);
            for i in 1..=k.min(m) {
                let term = self.multiply(&self.elementary(i as isize), &h[m - i])?;
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            h.push(acc);
        }
        for (m, hm) in h.iter().enumerate().take(n).skip(w + 1) {
            if !hm.is_zero() {
                return Err(inconsistent(format!("{}: h_{m} = {hm}, expected 0", self.shape)));
            }
        }
        let sign = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let expected = QuantumClass::monomial(&self.shape.empty(), 1, sign);
        if h[n] != expected {
            return Err(inconsistent(format!("{}: h_{n} = {}, expected {expected}", self.shape, h[n])));
        }
        Ok(PresentationReport { shape: self.shape, h, relations_checked: n - w })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(k: usize, n: usize) -> BoxShape {
        BoxShape::new(k, n).unwrap()
    }

    fn bp(s: BoxShape, p: &str) -> BoxedPartition {
        s.parse_boxed(p).unwrap()
    }

    fn class(s: BoxShape, terms: &[(usize, &str, i64)]) -> QuantumClass {
        terms.iter().fold(QuantumClass::zero(s), |acc, (d, p, c)| {
            &acc + &QuantumClass::monomial(&bp(s, p), *d, BigInt::from(*c))
        })
    }

    #[test]
    fn gr49_product() {
        let s = shape(4, 9);
        let got = quantum_product(s, &bp(s, "5,4,4,3"), &bp(s, "5,4,4,1")).unwrap();
        let want = class(
            s,
            &[
                (2, "5,3,2,2", 1),
                (2, "5,3,3,1", 1),
                (2, "5,4,2,1", 1),
                (3, "3", 1),
                // The q^3 layer is σ_1^3, so σ(2,1) occurs twice.
                (3, "2,1", 2),
                (3, "1,1,1", 1),
            ],
        );
        assert_eq!(got, want);
        assert_eq!(
            got.to_string(),
            "q^2*s[5,4,2,1] + q^2*s[5,3,3,1] + q^2*s[5,3,2,2] + q^3*s[3] + 2*q^3*s[2,1] + q^3*s[1,1,1]"
        );
    }

    #[test]
    fn small_products() {
        let s = shape(2, 4);
        assert_eq!(quantum_product(s, &bp(s, "2,1"), &bp(s, "2,1")).unwrap(), class(s, &[(1, "2", 1), (1, "1,1", 1)]));
        assert_eq!(quantum_product(s, &bp(s, "2,2"), &bp(s, "2,2")).unwrap(), class(s, &[(2, "", 1)]));
        for s in BoxShape::all_up_to(6) {
            for lam in s.partitions() {
                assert_eq!(quantum_product(s, &s.empty(), &lam).unwrap(), QuantumClass::schubert(&lam));
            }
        }
    }

    #[test]
    fn quantum_lr_examples() {
        let s = shape(4, 9);
        let (l, m) = (bp(s, "5,4,4,3"), bp(s, "5,4,4,1"));
        assert_eq!(quantum_lr(s, &l, &m, &bp(s, "5,4,2,1"), 2).unwrap(), 1u32.into());
        assert_eq!(quantum_lr(s, &l, &m, &bp(s, "5,4,2,1"), 1).unwrap(), 0u32.into());
        let s = shape(2, 4);
        assert_eq!(quantum_lr(s, &bp(s, "2,1"), &bp(s, "2,1"), &bp(s, "1,1"), 1).unwrap(), 1u32.into());
    }

    #[test]
    fn rectangle_examples() {
        let s = shape(4, 9);
        assert_eq!(rectangle_multiply(s, 4, &bp(s, "5,4,4,3")).unwrap(), (3, bp(s, "4,1")));
        assert_eq!(rectangle_multiply(s, 5, &bp(s, "5,4,4,1")).unwrap(), (3, bp(s, "3,2,1,1")));
        assert_eq!(rectangle_multiply(s, 0, &bp(s, "2,1")).unwrap(), (0, bp(s, "2,1")));
        assert!(rectangle_multiply(s, 6, &bp(s, "2,1")).is_err());
    }

    #[test]
    fn giambelli_examples() {
        let s = shape(2, 4);
        let ring = QuantumRing::new(s);
        assert!(ring.giambelli_check(&bp(s, "2,1")).unwrap());
        assert!(ring.giambelli_check(&bp(s, "1,1")).unwrap());
        assert!(ring.giambelli_check(&bp(s, "")).unwrap());
        let s = shape(4, 9);
        let ring = QuantumRing::new(s);
        assert!(ring.giambelli_check(&bp(s, "5,4,4,3")).unwrap());
    }

    #[test]
    fn presentation_examples() {
        let s = shape(2, 4);
        let rep = QuantumRing::new(s).presentation_check().unwrap();
        assert!(rep.h[3].is_zero());
        assert_eq!(rep.h[4], class(s, &[(1, "", -1)]));
        assert_eq!(rep.h[2], class(s, &[(0, "2", 1)]));
        let s = shape(1, 2);
        let rep = QuantumRing::new(s).presentation_check().unwrap();
        assert_eq!(rep.h[2], class(s, &[(1, "", 1)]));
    }

    #[test]
    fn ring_product_matches_free_function() {
        let s = shape(3, 6);
        let ring = QuantumRing::new(s);
        for l in s.partitions() {
            for m in s.partitions() {
                assert_eq!(*ring.product(&l, &m).unwrap(), quantum_product(s, &l, &m).unwrap());
            }
        }
    }

    #[test]
    fn display_signs_and_coefficients() {
        let s = shape(2, 4);
        let c = class(s, &[(0, "", -1), (1, "1", 2), (3, "2,1", -3)]);
        assert_eq!(c.to_string(), "-s[] + 2*q*s[1] - 3*q^3*s[2,1]");
        assert_eq!(QuantumClass::zero(s).to_string(), "0");
    }
}
