//! Partitions, the `k × (n-k)` box they live in, and the boundary-path view
//! of a boxed partition.
//!
//! Coordinates follow the matrix convention: cell rows are numbered `1..=k`
//! downward and columns `1..=n-k` rightward. Lattice points are `(r, c)` with
//! `0 <= r <= k`, `0 <= c <= n-k`, so the cell `(i, j)` has its north-west
//! corner at lattice point `(i-1, j-1)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped on construction, so `(4,1,0,0)` and `(4,1)` are the same value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Parts padded with zeros to length `len` (never truncates).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Whether the cell in 1-based row `row`, column `col` is in the diagram.
    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row - 1) >= col
    }

    /// Glues a `k × a` rectangle onto the left edge: pads to exactly `k` parts
    /// and adds `a` to each.
    pub fn add_left_rectangle(&self, a: usize, k: usize) -> Result<Partition> {
        if self.len() > k {
            return Err(invalid(format!("{self} has more than {k} parts")));
        }
        Ok(Partition::from_sorted(self.padded(k).into_iter().map(|p| p + a).collect()))
    }

    /// All partitions of `weight` with at most `max_rows` parts, each at most
    /// `max_part`, in descending lexicographic order.
    pub fn enumerate(weight: usize, max_rows: usize, max_part: usize) -> Vec<Partition> {
        fn rec(remaining: usize, rows_left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows_left == 0 || cap == 0 || remaining > rows_left * cap {
                return;
            }
            for p in (1..=cap.min(remaining)).rev() {
                cur.push(p);
                rec(remaining - p, rows_left - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(weight, max_rows, max_part, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"5,4,4,3"`; both `""` and `"0"` give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| invalid(format!("bad partition part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Parameters `(k, n)` of the Grassmannian `Gr(k, n)`, fixing the
/// `k × (n-k)` rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxShape {
    k: usize,
    n: usize,
}

impl BoxShape {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(invalid(format!("shape ({k},{n}) needs 0 < k < n")));
        }
        Ok(BoxShape { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns, `n - k`.
    pub fn width(&self) -> usize {
        self.n - self.k
    }

    pub fn cells(&self) -> usize {
        self.k * self.width()
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.len() <= self.k && p.first() <= self.width()
    }

    pub fn boxed(&self, p: Partition) -> Result<BoxedPartition> {
        if !self.fits(&p) {
            return Err(invalid(format!(
                "{p} does not fit in the {}x{} box of Gr({},{})",
                self.k,
                self.width(),
                self.k,
                self.n
            )));
        }
        Ok(BoxedPartition { shape: *self, partition: p })
    }

    pub fn parse_boxed(&self, s: &str) -> Result<BoxedPartition> {
        self.boxed(s.parse()?)
    }

    pub fn empty(&self) -> BoxedPartition {
        BoxedPartition { shape: *self, partition: Partition::empty() }
    }

    /// The full `k × (n-k)` rectangle.
    pub fn full(&self) -> BoxedPartition {
        self.rectangle(self.width())
    }

    /// The `k × a` rectangle `(a, …, a)`.
    pub fn rectangle(&self, a: usize) -> BoxedPartition {
        let a = a.min(self.width());
        BoxedPartition { shape: *self, partition: Partition::from_sorted(vec![a; self.k]) }
    }

    /// Every boxed partition, by increasing weight and descending
    /// lexicographic order within a weight. There are `C(n, k)` of them.
    pub fn partitions(&self) -> Vec<BoxedPartition> {
        (0..=self.cells())
            .flat_map(|w| Partition::enumerate(w, self.k, self.width()))
            .map(|partition| BoxedPartition { shape: *self, partition })
            .collect()
    }

    /// All shapes `(k, n)` with `2 <= n <= max_n`, ordered by `n` then `k`.
    pub fn all_up_to(max_n: usize) -> Vec<BoxShape> {
        (2..=max_n).flat_map(|n| (1..n).map(move |k| BoxShape { k, n })).collect()
    }
}

impl fmt::Display for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

/// Parses `"k,n"`.
impl FromStr for BoxShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nums = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| invalid(format!("bad shape {s:?}, expected k,n"))))
            .collect::<Result<Vec<_>>>()?;
        match nums[..] {
            [k, n] => BoxShape::new(k, n),
            _ => Err(invalid(format!("bad shape {s:?}, expected k,n"))),
        }
    }
}

/// A partition that fits the box of its shape; indexes the Schubert class
/// `σ_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxedPartition {
    shape: BoxShape,
    partition: Partition,
}

impl BoxedPartition {
    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    pub fn weight(&self) -> usize {
        self.partition.weight()
    }

    /// `λ∨ = (n-k-λ_k, …, n-k-λ_1)`: the complement rotated by 180°.
    pub fn dual(&self) -> BoxedPartition {
        let w = self.shape.width();
        let parts = self.partition.padded(self.shape.k).iter().rev().map(|p| w - p).collect();
        BoxedPartition { shape: self.shape, partition: Partition::from_sorted(parts) }
    }

    /// Boundary path from the upper-right corner to the lower-left corner.
    pub fn to_path(&self) -> LatticePath {
        let mut steps = Vec::with_capacity(self.shape.n);
        let mut col = self.shape.width();
        for i in 0..self.shape.k {
            let target = self.partition.part(i);
            steps.extend(std::iter::repeat_n(Step::Left, col - target));
            col = target;
            steps.push(Step::Down);
        }
        steps.extend(std::iter::repeat_n(Step::Left, col));
        LatticePath { shape: self.shape, steps }
    }

    /// `r_i` = number of rows passed after `i` steps along the path, for
    /// `i = 1..=n`.
    pub fn rank_vector(&self) -> Vec<usize> {
        self.to_path()
            .steps()
            .iter()
            .scan(0, |rows, s| {
                if *s == Step::Down {
                    *rows += 1;
                }
                Some(*rows)
            })
            .collect()
    }

    /// Whether this diagram is contained in `other`'s.
    pub fn is_inside(&self, other: &BoxedPartition) -> bool {
        other.partition.contains(&self.partition)
    }
}

impl fmt::Display for BoxedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Down,
    Left,
}

/// A monotone path of `n` steps through the box, from lattice point
/// `(0, n-k)` to `(k, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    shape: BoxShape,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(shape: BoxShape, steps: Vec<Step>) -> Result<Self> {
        let downs = steps.iter().filter(|s| **s == Step::Down).count();
        if steps.len() != shape.n || downs != shape.k {
            return Err(invalid(format!(
                "path needs {} steps with {} downs, got {} with {downs}",
                shape.n,
                shape.k,
                steps.len()
            )));
        }
        Ok(LatticePath { shape, steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The `n + 1` lattice points visited, starting at the upper-right corner.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pt = (0, self.shape.width());
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(pt);
        for s in &self.steps {
            match s {
                Step::Down => pt.0 += 1,
                Step::Left => pt.1 -= 1,
            }
            out.push(pt);
        }
        out
    }

    pub fn to_partition(&self) -> BoxedPartition {
        let mut col = self.shape.width();
        let mut parts = Vec::with_capacity(self.shape.k);
        for s in &self.steps {
            match s {
                Step::Left => col -= 1,
                Step::Down => parts.push(col),
            }
        }
        BoxedPartition { shape: self.shape, partition: Partition::from_sorted(parts) }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.steps.iter().map(|s| if *s == Step::Down { "D" } else { "L" }).collect();
        write!(f, "{}", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Step::{Down as D, Left as L};

    fn bp(shape: (usize, usize), s: &str) -> BoxedPartition {
        BoxShape::new(shape.0, shape.1).unwrap().parse_boxed(s).unwrap()
    }

    #[test]
    fn path_examples() {
        assert_eq!(bp((4, 9), "5,4,4,3").to_path().steps(), &[D, L, D, D, L, D, L, L, L]);
        assert_eq!(bp((4, 9), "0").to_path().steps(), &[L, L, L, L, L, D, D, D, D]);
        assert_eq!(bp((2, 4), "2,2").to_path().steps(), &[D, D, L, L]);
    }

    #[test]
    fn rank_vector_examples() {
        assert_eq!(bp((4, 9), "5,4,4,3").rank_vector(), vec![1, 1, 2, 3, 3, 4, 4, 4, 4]);
        assert_eq!(bp((4, 9), "").rank_vector(), vec![0, 0, 0, 0, 0, 1, 2, 3, 4]);
        assert_eq!(bp((2, 4), "2,2").rank_vector(), vec![1, 2, 2, 2]);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(bp((4, 9), "5,4,4,1").dual(), bp((4, 9), "4,1,1,0"));
        assert_eq!(bp((4, 9), "0").dual(), bp((4, 9), "5,5,5,5"));
        assert_eq!(bp((2, 4), "2,1").dual(), bp((2, 4), "1"));
    }

    #[test]
    fn left_rectangle() {
        let p: Partition = "5,4,4,3".parse().unwrap();
        assert_eq!(p.add_left_rectangle(4, 4).unwrap().parts(), &[9, 8, 8, 7]);
        let p: Partition = "5,4,4,1".parse().unwrap();
        assert_eq!(p.add_left_rectangle(5, 4).unwrap().parts(), &[10, 9, 9, 6]);
        assert!(Partition::empty().add_left_rectangle(0, 3).unwrap().is_empty());
        assert!(matches!(p.add_left_rectangle(1, 3), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn parsing() {
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("4,1,0,0".parse::<Partition>().unwrap().parts(), &[4, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("2,4".parse::<BoxShape>().is_ok());
        assert!("4,4".parse::<BoxShape>().is_err());
        assert!("0,4".parse::<BoxShape>().is_err());
        assert!("4".parse::<BoxShape>().is_err());
        let shape = BoxShape::new(2, 4).unwrap();
        assert!(shape.parse_boxed("3,1").is_err());
        assert!(shape.parse_boxed("1,1,1").is_err());
    }

    #[test]
    fn box_enumeration_counts_binomials() {
        for shape in BoxShape::all_up_to(9) {
            let all = shape.partitions();
            let binom = (1..=shape.k()).fold(1usize, |acc, i| acc * (shape.n() - shape.k() + i) / i);
            assert_eq!(all.len(), binom, "{shape}");
            assert!(all.windows(2).all(|w| w[0] != w[1]));
        }
    }

    #[test]
    fn exhaustive_round_trip_and_duality() {
        for shape in BoxShape::all_up_to(8) {
            for lam in shape.partitions() {
                assert_eq!(lam.to_path().to_partition(), lam);
                let d = lam.dual();
                assert_eq!(d.dual(), lam);
                assert_eq!(lam.weight() + d.weight(), shape.cells());
                let r = lam.rank_vector();
                assert_eq!(r.len(), shape.n());
                assert_eq!(*r.last().unwrap(), shape.k());
                assert!(r[0] <= 1 && r.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for w in 0..10 {
            for p in Partition::enumerate(w, 10, 10) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().weight(), w);
            }
        }
        let p: Partition = "4,1".parse().unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1, 1]);
    }

    #[test]
    fn path_rejects_wrong_step_counts() {
        let shape = BoxShape::new(2, 4).unwrap();
        assert!(LatticePath::new(shape, vec![D, D, D, L]).is_err());
        assert!(LatticePath::new(shape, vec![D, L, L]).is_err());
        let p = LatticePath::new(shape, vec![L, D, L, D]).unwrap();
        assert_eq!(p.to_partition().partition().parts(), &[1]);
        assert_eq!(p.points(), vec![(0, 2), (0, 1), (1, 1), (1, 0), (2, 0)]);
    }
}
