//! Which powers of `q` occur in `σ_λ * σ_μ`.
//!
//! The smallest power is the side of the largest square that fits inside
//! `λ` and outside `μ∨`. Its coefficient is a classical product
//! `σ_λ' · σ_μ'` obtained by rectangle gluing and rim stripping. The
//! occurring powers form an interval whose top end is found by sliding the
//! periodic boundary of `μ∨` diagonally until it meets the next period of
//! `λ`'s boundary.

use std::collections::BTreeSet;

use crate::classical::{check_shape, classical_product, SchurCombination};
use crate::error::{inconsistent, invalid, Result};
use crate::partition::{BoxShape, BoxedPartition, Partition};
use crate::quantum::{quantum_product, QuantumClass};
use crate::rim::{rim_reduce, RimReduction};

/// A `size × size` block of cells with top-left cell (`row`, `col`),
/// 1-based, lying in `λ` and disjoint from `μ∨`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarePlacement {
    pub size: usize,
    pub row: usize,
    pub col: usize,
}

impl SquarePlacement {
    /// Lattice point at the south-east corner.
    pub fn south_east(&self) -> (usize, usize) {
        (self.row + self.size - 1, self.col + self.size - 1)
    }

    /// Lattice point at the north-west corner.
    pub fn north_west(&self) -> (usize, usize) {
        (self.row - 1, self.col - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BelkaleReduction {
    /// `None` when `d_min = 0`.
    pub square: Option<SquarePlacement>,
    pub d: usize,
    /// Steps along `λ`'s path from its NE end to the square's SE corner.
    pub a: usize,
    /// Steps along `μ∨`'s path from its SW end to the square's NW corner.
    pub b: usize,
    pub lambda_prime: BoxedPartition,
    pub mu_prime: BoxedPartition,
}

fn fits_square(lambda: &Partition, dual_mu: &Partition, size: usize, row: usize, col: usize) -> bool {
    lambda.has_cell(row + size - 1, col + size - 1) && !dual_mu.has_cell(row, col)
}

fn placements(shape: BoxShape, lambda: &Partition, dual_mu: &Partition, size: usize) -> Vec<SquarePlacement> {
    if size == 0 || size > shape.k().min(shape.width()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for row in 1..=shape.k() + 1 - size {
        for col in 1..=shape.width() + 1 - size {
            if fits_square(lambda, dual_mu, size, row, col) {
                out.push(SquarePlacement { size, row, col });
            }
        }
    }
    out
}

/// The largest `d` such that a `d × d` square fits inside `λ` and outside
/// `μ∨`.
pub fn dmin(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<usize> {
    check_shape(shape, lambda, mu)?;
    let dual = mu.dual();
    Ok((1..=shape.k().min(shape.width()))
        .rev()
        .find(|&d| !placements(shape, lambda.partition(), dual.partition(), d).is_empty())
        .unwrap_or(0))
}

/// Every placement of a `d_min × d_min` square, in row-major order. Empty when
/// `d_min = 0`.
pub fn maximal_squares(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<Vec<SquarePlacement>> {
    let d = dmin(shape, lambda, mu)?;
    Ok(placements(shape, lambda.partition(), mu.dual().partition(), d))
}

fn strip_rims(shape: BoxShape, p: &BoxedPartition, width: usize) -> Result<(usize, BoxedPartition)> {
    let glued = p.partition().add_left_rectangle(width, shape.k())?;
    match rim_reduce(&glued, shape)? {
        RimReduction::Reduced { nu, d, sign: 1 } => Ok((d, nu)),
        other => Err(inconsistent(format!("gluing a {}x{width} rectangle onto {p} reduced to {other:?}", shape.k()))),
    }
}

/// `λ'` and `μ'` for one maximal square.
pub fn belkale_reduce(
    shape: BoxShape,
    lambda: &BoxedPartition,
    mu: &BoxedPartition,
    square: &SquarePlacement,
) -> Result<BelkaleReduction> {
    check_shape(shape, lambda, mu)?;
    let dual = mu.dual();
    let d = dmin(shape, lambda, mu)?;
    let sq = *square;
    let inside = sq.row >= 1
        && sq.col >= 1
        && sq.row + sq.size - 1 <= shape.k()
        && sq.col + sq.size - 1 <= shape.width()
        && fits_square(lambda.partition(), dual.partition(), sq.size, sq.row, sq.col);
    if sq.size != d || d == 0 || !inside {
        return Err(invalid(format!("{sq:?} is not a maximal square for {lambda}, {mu}")));
    }

    let se = sq.south_east();
    let a = lambda
        .to_path()
        .points()
        .iter()
        .position(|&p| p == se)
        .ok_or_else(|| inconsistent(format!("SE corner {se:?} of {sq:?} is not on the path of {lambda}")))?;
    let nw = sq.north_west();
    let b = dual
        .to_path()
        .points()
        .iter()
        .rev()
        .position(|&p| p == nw)
        .ok_or_else(|| inconsistent(format!("NW corner {nw:?} of {sq:?} is not on the path of {dual}")))?;

    let (da, lambda_prime) = strip_rims(shape, lambda, a)?;
    let (db, mu_prime) = strip_rims(shape, mu, b)?;
    let before = lambda.weight() + mu.weight();
    let after = lambda_prime.weight() + mu_prime.weight() + d * shape.n();
    if before != after {
        return Err(inconsistent(format!(
            "reduction of {lambda}, {mu} via {sq:?} has weight {after} (rims {da}+{db}), expected {before}"
        )));
    }
    Ok(BelkaleReduction { square: Some(sq), d, a, b, lambda_prime, mu_prime })
}

/// The reduction for the maximal square met first along `λ`'s path (smallest
/// `a`), or the identity reduction when `d_min = 0`.
pub fn belkale_default(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<BelkaleReduction> {
    let squares = maximal_squares(shape, lambda, mu)?;
    if squares.is_empty() {
        return Ok(BelkaleReduction {
            square: None,
            d: 0,
            a: 0,
            b: 0,
            lambda_prime: lambda.clone(),
            mu_prime: mu.clone(),
        });
    }
    let all = squares.iter().map(|sq| belkale_reduce(shape, lambda, mu, sq)).collect::<Result<Vec<_>>>()?;
    Ok(all.into_iter().min_by_key(|r| r.a).expect("nonempty"))
}

/// The `q^{d_min}` coefficient of `σ_λ * σ_μ`, computed as `σ_λ' · σ_μ'`.
pub fn minimal_term(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<SchurCombination> {
    let product = quantum_product(shape, lambda, mu)?;
    minimal_term_against(shape, lambda, mu, &product)
}

/// As [`minimal_term`], checking against an already computed product.
pub fn minimal_term_against(
    shape: BoxShape,
    lambda: &BoxedPartition,
    mu: &BoxedPartition,
    product: &QuantumClass,
) -> Result<SchurCombination> {
    let squares = maximal_squares(shape, lambda, mu)?;
    let d = squares.first().map_or(0, |s| s.size);
    let term = if squares.is_empty() {
        classical_product(shape, lambda, mu)?
    } else {
        let mut first: Option<(SquarePlacement, SchurCombination)> = None;
        for sq in &squares {
            let red = belkale_reduce(shape, lambda, mu, sq)?;
            let c = classical_product(shape, &red.lambda_prime, &red.mu_prime)?;
            match &first {
                None => first = Some((*sq, c)),
                Some((sq0, c0)) if *c0 != c => {
                    return Err(inconsistent(format!(
                        "{lambda}, {mu}: squares {sq0:?} and {sq:?} give different minimal terms"
                    )));
                }
                Some(_) => {}
            }
        }
        first.expect("nonempty").1
    };
    if product.layer(d)? != term {
        return Err(inconsistent(format!(
            "{lambda}, {mu}: reduced classical product differs from the q^{d} layer of {product}"
        )));
    }
    Ok(term)
}

/// The set of `d` with a `q^d` term in `σ_λ * σ_μ`; always an interval.
pub fn degree_support(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<BTreeSet<usize>> {
    degree_support_of(&quantum_product(shape, lambda, mu)?)
}

pub fn degree_support_of(product: &QuantumClass) -> Result<BTreeSet<usize>> {
    let degrees = product.degrees();
    if let (Some(lo), Some(hi)) = (degrees.first(), degrees.last()) {
        if hi - lo + 1 != degrees.len() {
            return Err(inconsistent(format!("degrees {degrees:?} of {product} are not contiguous")));
        }
    }
    Ok(degrees)
}

/// Value at row `i` (1-based, any integer) of the periodic lift of a boxed
/// partition's boundary: `f(i + k) = f(i) - (n - k)`.
fn lift(parts: &[usize], width: usize, i: isize) -> isize {
    let k = parts.len() as isize;
    let q = (i - 1).div_euclid(k);
    let r = (i - 1).rem_euclid(k) as usize;
    parts[r] as isize - q * width as isize
}

/// Outcome of the diagonal slide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slide {
    /// First translation at which `λ` lies weakly inside the slid `μ∨`.
    pub cleared: usize,
    /// First translation after that at which the slid boundary meets the next
    /// period of `λ`'s boundary.
    pub contact: usize,
}

/// Slides the periodic boundary of `μ∨` by `(+1, +1)` per step.
///
/// Both boundaries are lifted to staircases in the plane that drop `k` rows
/// every `n - k` columns. The slid region at step `t` is
/// `{(i, j) : j <= μ∨(i - t) + t}`. Contact with the next period of `λ`
/// (region `j <= λ(i) + n - k`) means the two boundaries share a lattice
/// point, or have crossed, on some row line.
pub fn slide(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<Slide> {
    check_shape(shape, lambda, mu)?;
    let (k, w) = (shape.k(), shape.width());
    let lam = lambda.partition().padded(k);
    let dual = mu.dual().partition().padded(k);
    let lam_at = |i: isize| lift(&lam, w, i);
    let slid = |t: isize, i: isize| lift(&dual, w, i - t) + t;
    let rows = 1..=k as isize;
    // Every gap closes by at least one per step, so this bound is generous.
    let limit = 2 * shape.n() as isize + 2;

    let cleared = (0..=limit)
        .find(|&t| rows.clone().all(|i| slid(t, i) >= lam_at(i)))
        .ok_or_else(|| inconsistent(format!("slide of {mu} never clears {lambda}")))?;
    let contact = (cleared..=cleared + limit)
        .find(|&t| (0..k as isize).any(|r| slid(t, r) >= lam_at(r + 1) + w as isize))
        .ok_or_else(|| inconsistent(format!("slide of {mu} never meets {lambda} again")))?;
    Ok(Slide { cleared: cleared as usize, contact: contact as usize })
}

/// `d_max` from the slide, checked against the actual product.
pub fn dmax_slide(shape: BoxShape, lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<usize> {
    let s = slide(shape, lambda, mu)?;
    let support = degree_support(shape, lambda, mu)?;
    let top = *support.last().expect("products never vanish");
    if s.contact != top {
        return Err(inconsistent(format!(
            "{lambda}, {mu}: slide gives d_max = {} but the product tops out at q^{top}",
            s.contact
        )));
    }
    Ok(top)
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

    fn sq(size: usize, row: usize, col: usize) -> SquarePlacement {
        SquarePlacement { size, row, col }
    }

    #[test]
    fn dmin_examples() {
        let s = shape(4, 9);
        assert_eq!(dmin(s, &bp(s, "5,4,4,3"), &bp(s, "5,4,4,1")).unwrap(), 2);
        assert_eq!(dmin(s, &s.empty(), &bp(s, "5,4,4,1")).unwrap(), 0);
        let s = shape(2, 4);
        assert_eq!(dmin(s, &bp(s, "2,2"), &bp(s, "2,2")).unwrap(), 2);
    }

    #[test]
    fn square_examples() {
        let s = shape(4, 9);
        assert_eq!(
            maximal_squares(s, &bp(s, "5,4,4,3"), &bp(s, "5,4,4,1")).unwrap(),
            vec![sq(2, 2, 2), sq(2, 2, 3), sq(2, 3, 2)]
        );
        let s = shape(2, 4);
        assert_eq!(maximal_squares(s, &bp(s, "2,2"), &bp(s, "2,2")).unwrap(), vec![sq(2, 1, 1)]);
        assert!(maximal_squares(s, &bp(s, "1"), &bp(s, "1")).unwrap().is_empty());
    }

    #[test]
    fn belkale_examples() {
        let s = shape(4, 9);
        let (l, m) = (bp(s, "5,4,4,3"), bp(s, "5,4,4,1"));
        let r = belkale_reduce(s, &l, &m, &sq(2, 2, 3)).unwrap();
        assert_eq!((r.a, r.b), (4, 5));
        assert_eq!(r.lambda_prime, bp(s, "4,1"));
        assert_eq!(r.mu_prime, bp(s, "3,2,1,1"));
        assert_eq!(belkale_default(s, &l, &m).unwrap(), r);
        assert!(belkale_reduce(s, &l, &m, &sq(2, 1, 1)).is_err());

        let s = shape(2, 4);
        let r = belkale_reduce(s, &bp(s, "2,2"), &bp(s, "2,2"), &sq(2, 1, 1)).unwrap();
        assert_eq!((r.a, r.b), (2, 2));
        assert_eq!((r.lambda_prime, r.mu_prime), (s.empty(), s.empty()));

        let r = belkale_default(s, &bp(s, "1"), &bp(s, "1")).unwrap();
        assert_eq!((r.square, r.a, r.b, r.d), (None, 0, 0, 0));
        assert_eq!(r.lambda_prime, bp(s, "1"));
    }

    #[test]
    fn minimal_term_examples() {
        let s = shape(4, 9);
        let t = minimal_term(s, &bp(s, "5,4,4,3"), &bp(s, "5,4,4,1")).unwrap();
        let parts: Vec<String> = t.iter().map(|(p, c)| format!("{p}:{c}")).collect();
        assert_eq!(parts, ["(5,4,2,1):1", "(5,3,3,1):1", "(5,3,2,2):1"]);

        let s = shape(2, 4);
        let t = minimal_term(s, &bp(s, "2,2"), &bp(s, "2,2")).unwrap();
        assert_eq!(t, SchurCombination::single(Partition::empty()));
        let (l, m) = (bp(s, "1"), bp(s, "1"));
        assert_eq!(minimal_term(s, &l, &m).unwrap(), classical_product(s, &l, &m).unwrap());
    }

    #[test]
    fn support_and_slide_examples() {
        let s = shape(4, 9);
        let (l, m) = (bp(s, "5,4,4,3"), bp(s, "5,4,4,1"));
        assert_eq!(degree_support(s, &l, &m).unwrap(), BTreeSet::from([2, 3]));
        assert_eq!(slide(s, &l, &m).unwrap(), Slide { cleared: 2, contact: 3 });
        assert_eq!(dmax_slide(s, &l, &m).unwrap(), 3);
        assert_eq!(dmax_slide(s, &s.empty(), &m).unwrap(), 0);
        assert_eq!(degree_support(s, &s.empty(), &m).unwrap(), BTreeSet::from([0]));

        let s = shape(2, 4);
        assert_eq!(degree_support(s, &bp(s, "2,1"), &bp(s, "2,1")).unwrap(), BTreeSet::from([1]));
        assert_eq!(dmax_slide(s, &bp(s, "2,2"), &bp(s, "2,2")).unwrap(), 2);
    }

    #[test]
    fn lift_is_periodic() {
        let p = [5, 4, 4, 3];
        assert_eq!(lift(&p, 5, 1), 5);
        assert_eq!(lift(&p, 5, 4), 3);
        assert_eq!(lift(&p, 5, 0), 8);
        assert_eq!(lift(&p, 5, 5), 0);
        assert_eq!(lift(&p, 5, -3), 10);
    }
}
