//! Exhaustive invariant sweeps over small Grassmannians.
//!
//! Each sweep returns a [`SweepReport`]; engine errors raised while checking
//! an item count as failures of that item. Items are checked in parallel but
//! reported in a fixed order.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classical::{classical_product, count_lr_tableaux, schur_product_k_rows, LrMemo};
use crate::degree::{degree_support_of, dmin, maximal_squares, minimal_term_against, slide};
use crate::error::Result;
use crate::fusion::{compare_pair, fusion_product, CharacterTable, TOLERANCE};
use crate::partition::{BoxShape, BoxedPartition, Partition};
use crate::quantum::{QuantumClass, QuantumRing};
use crate::rim::{rim_reduce, RimReduction};
use crate::symmetric::schur_expand_monomials;

/// Failures kept verbatim in a report; the rest are only counted.
pub const MAX_EXAMPLES: usize = 5;
/// Random triples per shape in the sampled associativity sweep.
pub const RANDOM_TRIPLES: usize = 1000;
/// Largest `n` checked exhaustively for associativity.
pub const EXHAUSTIVE_ASSOCIATIVITY_N: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub examples: Vec<String>,
    pub note: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(f, "{status:4} {:<28} {:>8} checked, {} failed", self.name, self.checked, self.failed)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        for e in &self.examples {
            write!(f, "\n     {e}")?;
        }
        Ok(())
    }
}

/// Checks every item; `Ok(None)` is a pass.
fn sweep<T: Sync>(name: &str, items: &[T], check: impl Fn(&T) -> Result<Option<String>> + Sync) -> SweepReport {
    let outcomes: Vec<Option<String>> = items
        .par_iter()
        .map(|item| match check(item) {
            Ok(r) => r,
            Err(e) => Some(e.to_string()),
        })
        .collect();
    let failures: Vec<String> = outcomes.into_iter().flatten().collect();
    SweepReport {
        name: name.to_string(),
        checked: items.len(),
        failed: failures.len(),
        examples: failures.into_iter().take(MAX_EXAMPLES).collect(),
        note: None,
    }
}

fn fail_unless(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(msg)
}

/// Rings for every shape with `n <= max_n`, sharing one classical memo.
pub struct Rings {
    rings: BTreeMap<BoxShape, QuantumRing>,
}

impl Rings {
    pub fn new(max_n: usize) -> Self {
        let memo = Arc::new(LrMemo::new());
        let rings =
            BoxShape::all_up_to(max_n).into_iter().map(|s| (s, QuantumRing::with_memo(s, memo.clone()))).collect();
        Rings { rings }
    }

    pub fn shapes(&self) -> impl Iterator<Item = BoxShape> + '_ {
        self.rings.keys().copied()
    }

    pub fn ring(&self, shape: BoxShape) -> &QuantumRing {
        &self.rings[&shape]
    }

    /// Every ordered pair `(λ, μ)` of every shape up to `max_n`.
    pub fn pairs(&self, max_n: usize) -> Vec<(BoxShape, BoxedPartition, BoxedPartition)> {
        self.shapes()
            .filter(|s| s.n() <= max_n)
            .flat_map(|s| {
                let all = s.partitions();
                let mut out = Vec::with_capacity(all.len() * all.len());
                for l in &all {
                    for m in &all {
                        out.push((s, l.clone(), m.clone()));
                    }
                }
                out
            })
            .collect()
    }
}

fn shapes(max_n: usize) -> Vec<BoxShape> {
    BoxShape::all_up_to(max_n)
}

fn boxed_all(max_n: usize) -> Vec<BoxedPartition> {
    shapes(max_n).into_iter().flat_map(|s| s.partitions()).collect()
}

pub fn paths(max_n: usize) -> SweepReport {
    sweep("path round trip and duality", &boxed_all(max_n), |l| {
        let s = l.shape();
        let back = l.to_path().to_partition();
        let dual = l.dual();
        Ok(fail_unless(back == *l && dual.dual() == *l && l.weight() + dual.weight() == s.cells(), || {
            format!("{s} {l}: path gives {back}, dual {dual}")
        }))
    })
}

/// `(σ, rows)` for every partition `σ ⊂ ρ` with `ρ/σ` a connected skew shape
/// of `n` cells containing no 2×2 block; `rows` is the number of rows it
/// meets.
pub fn border_strips(rho: &Partition, n: usize) -> Vec<(Partition, usize)> {
    if rho.weight() < n {
        return Vec::new();
    }
    let rows = rho.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(
        rho: &Partition,
        n: usize,
        i: usize,
        removed: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<(Partition, usize)>,
    ) {
        if i == rho.len() {
            if removed == n {
                let sigma = Partition::from_sorted(cur.clone());
                if let Some(h) = strip_height(rho, &sigma) {
                    out.push((sigma, h));
                }
            }
            return;
        }
        let cap = if i == 0 { rho.part(0) } else { cur[i - 1].min(rho.part(i)) };
        for v in 0..=cap {
            let r = rho.part(i) - v;
            if removed + r > n {
                continue;
            }
            cur.push(v);
            rec(rho, n, i + 1, removed + r, cur, out);
            cur.pop();
        }
    }
    rec(rho, n, 0, 0, &mut cur, &mut out);
    out
}

fn strip_height(rho: &Partition, sigma: &Partition) -> Option<usize> {
    let cells: HashSet<(usize, usize)> =
        (0..rho.len()).flat_map(|r| (sigma.part(r)..rho.part(r)).map(move |c| (r, c))).collect();
    let has = |r: usize, c: usize| cells.contains(&(r, c));
    if cells.iter().any(|&(r, c)| has(r + 1, c) && has(r, c + 1) && has(r + 1, c + 1)) {
        return None;
    }
    let start = *cells.iter().next()?;
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((r, c)) = queue.pop_front() {
        let mut near = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            near.push((r - 1, c));
        }
        if c > 0 {
            near.push((r, c - 1));
        }
        for p in near {
            if cells.contains(&p) && seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    if seen.len() != cells.len() {
        return None;
    }
    Some(cells.iter().map(|&(r, _)| r).collect::<BTreeSet<_>>().len())
}

/// Rim reduction by removing one border strip at a time. Every removal order
/// must give the same answer; a disagreement is returned as `Err`.
pub fn rim_reduce_recursive(rho: &Partition, shape: BoxShape) -> std::result::Result<RimReduction, String> {
    let k = shape.k();
    if rho.len() > k {
        return Err(format!("{rho} has more than {k} rows"));
    }
    if rho.first() <= shape.width() {
        let nu = shape.boxed(rho.clone()).map_err(|e| e.to_string())?;
        return Ok(RimReduction::Reduced { nu, d: 0, sign: 1 });
    }
    let mut result: Option<RimReduction> = None;
    for (sigma, height) in border_strips(rho, shape.n()) {
        let sub = match rim_reduce_recursive(&sigma, shape)? {
            RimReduction::Zero => RimReduction::Zero,
            RimReduction::Reduced { nu, d, sign } => {
                let s = if (k - height) % 2 == 1 { -sign } else { sign };
                RimReduction::Reduced { nu, d: d + 1, sign: s }
            }
        };
        match &result {
            None => result = Some(sub),
            Some(r) if *r != sub => {
                return Err(format!("{rho} in {shape}: removal orders give {r:?} and {sub:?}"));
            }
            Some(_) => {}
        }
    }
    Ok(result.unwrap_or(RimReduction::Zero))
}

/// Abacus against recursive rim removal for `|ρ| <= 3n`, `ρ` with at most `k` rows.
pub fn rim_equivalence(max_n: usize) -> SweepReport {
    let items: Vec<(BoxShape, Partition)> = shapes(max_n)
        .into_iter()
        .flat_map(|s| {
            (0..=3 * s.n()).flat_map(move |w| Partition::enumerate(w, s.k(), w).into_iter().map(move |p| (s, p)))
        })
        .collect();
    let zeros = items.par_iter().filter(|(s, p)| matches!(rim_reduce(p, *s), Ok(RimReduction::Zero))).count();
    sweep("rim abacus vs recursive", &items, |(s, rho)| {
        let abacus = rim_reduce(rho, *s)?;
        let recursive = rim_reduce_recursive(rho, *s);
        Ok(match recursive {
            Err(e) => Some(e),
            Ok(r) => fail_unless(r == abacus, || format!("{rho} in {s}: abacus {abacus:?}, recursive {r:?}")),
        })
    })
    .with_note(format!("{zeros} zero reductions"))
}

fn partitions_up_to(max_weight: usize, max_rows: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(|w| Partition::enumerate(w, max_rows, w)).collect()
}

/// Tableau LR products against monomial expansion, in `rows` variables.
pub fn lr_vs_monomial(rows: usize, max_weight: usize) -> SweepReport {
    let parts = partitions_up_to(max_weight, rows);
    let mut pairs = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i..] {
            pairs.push((a.clone(), b.clone()));
        }
    }
    sweep("LR tableaux vs monomials", &pairs, |(a, b)| {
        let lr: BTreeMap<Partition, BigInt> =
            schur_product_k_rows(a, b, rows)?.iter().map(|(p, c)| (p.clone(), BigInt::from(c.clone()))).collect();
        let mono = schur_expand_monomials(&[a.clone(), b.clone()], rows)?;
        Ok(fail_unless(lr == mono, || format!("s{a} s{b}: tableaux {lr:?}, monomials {mono:?}")))
    })
}

/// `c^ν_{λμ} = c^ν_{μλ}` for `|ν| <= max_weight`.
pub fn lr_symmetry(max_weight: usize) -> SweepReport {
    let parts = partitions_up_to(max_weight, max_weight);
    let mut pairs = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if a.weight() + b.weight() <= max_weight {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    sweep("LR symmetry", &pairs, |(a, b)| {
        let rows = a.weight() + b.weight();
        let ab = schur_product_k_rows(a, b, rows)?;
        let ba = schur_product_k_rows(b, a, rows)?;
        Ok(fail_unless(ab == ba, || format!("s{a} s{b} is not symmetric")))
    })
}

/// `s_(p) s_μ` is the sum of the horizontal-strip extensions of `μ`.
pub fn pieri(max_rows: usize, max_weight: usize, max_p: usize) -> SweepReport {
    let items: Vec<(usize, Partition)> =
        (1..=max_p).flat_map(|p| partitions_up_to(max_weight, max_rows).into_iter().map(move |m| (p, m))).collect();
    sweep("Pieri rule", &items, |(p, mu)| {
        let rows = mu.len() + 1;
        let row = Partition::from_sorted(vec![*p]);
        let got = schur_product_k_rows(&row, mu, rows)?;
        let mut want = BTreeSet::new();
        for nu in Partition::enumerate(mu.weight() + p, rows, mu.first() + p) {
            let strip = nu.contains(mu) && (0..rows).all(|i| i == 0 || nu.part(i) <= mu.part(i - 1));
            if strip {
                want.insert(nu);
            }
        }
        let ok = got.len() == want.len()
            && got.iter().all(|(nu, c)| want.contains(nu) && *c == BigUint::from(1u32))
            && want.iter().all(|nu| count_lr_tableaux(&row, mu, nu) == 1);
        Ok(fail_unless(ok, || format!("s({p}) s{mu}: got {got:?}")))
    })
}

/// Duality pairing and the classical nonvanishing criterion.
pub fn classical_duality(rings: &Rings, max_n: usize) -> SweepReport {
    sweep("classical duality", &rings.pairs(max_n), |(s, l, m)| {
        let c = classical_product(*s, l, m)?;
        let full = c.coeff(s.full().partition());
        let want_full = BigUint::from(u32::from(*m == l.dual()));
        let nonzero = !c.is_empty();
        let inside = l.is_inside(&m.dual());
        Ok(fail_unless(full == want_full && nonzero == inside, || {
            format!("{s} {l}·{m}: full coefficient {full}, nonzero {nonzero}, λ ⊆ μ∨ {inside}")
        }))
    })
}

/// Commutativity, grading, positivity, nonvanishing, the classical layer,
/// the minimal degree, the degree interval and `d_min` symmetry.
pub fn quantum_products(rings: &Rings, max_n: usize) -> Vec<SweepReport> {
    let pairs = rings.pairs(max_n);
    let product = |s: &BoxShape, l: &BoxedPartition, m: &BoxedPartition| rings.ring(*s).product(l, m);
    vec![
        sweep("commutativity", &pairs, |(s, l, m)| {
            let a = quantum_product_raw(*s, l, m)?;
            let b = quantum_product_raw(*s, m, l)?;
            Ok(fail_unless(a == b, || format!("{s} {l}*{m}: {a} vs {b}")))
        }),
        sweep("grading", &pairs, |(s, l, m)| {
            let p = product(s, l, m)?;
            let total = l.weight() + m.weight();
            let ok = p.terms().all(|(d, nu, _)| nu.weight() + d * s.n() == total);
            Ok(fail_unless(ok, || format!("{s} {l}*{m} = {p}")))
        }),
        sweep("positivity and nonvanishing", &pairs, |(s, l, m)| {
            let p = product(s, l, m)?;
            Ok(fail_unless(!p.is_zero() && p.is_nonnegative(), || format!("{s} {l}*{m} = {p}")))
        }),
        sweep("degree-0 layer is classical", &pairs, |(s, l, m)| {
            let p = product(s, l, m)?;
            let c = classical_product(*s, l, m)?;
            Ok(fail_unless(p.layer(0)? == c, || format!("{s} {l}*{m} = {p}")))
        }),
        sweep("minimal degree (squares)", &pairs, |(s, l, m)| {
            let p = product(s, l, m)?;
            let support = degree_support_of(&p)?;
            let (d, d_swapped) = (dmin(*s, l, m)?, dmin(*s, m, l)?);
            let classical = !classical_product(*s, l, m)?.is_empty();
            let ok = support.first() == Some(&d) && d == d_swapped && (d == 0) == classical;
            Ok(fail_unless(ok, || format!("{s} {l}*{m}: support {support:?}, d_min {d}/{d_swapped}")))
        }),
        sweep("degree interval", &pairs, |(s, l, m)| {
            degree_support_of(&*product(s, l, m)?)?;
            Ok(None)
        }),
    ]
}

/// Unmemoized product, so commutativity is not satisfied by construction.
fn quantum_product_raw(s: BoxShape, l: &BoxedPartition, m: &BoxedPartition) -> Result<QuantumClass> {
    crate::quantum::quantum_product(s, l, m)
}

/// `minimal_term` for every maximal square equals the `q^{d_min}` layer.
pub fn belkale(rings: &Rings, max_n: usize) -> SweepReport {
    let pairs = rings.pairs(max_n);
    let squares: usize = pairs.par_iter().map(|(s, l, m)| maximal_squares(*s, l, m).map_or(0, |v| v.len())).sum();
    sweep("Belkale minimal term", &pairs, |(s, l, m)| {
        let p = rings.ring(*s).product(l, m)?;
        minimal_term_against(*s, l, m, &p)?;
        Ok(None)
    })
    .with_note(format!("{squares} maximal squares"))
}

/// The torus slide reproduces the top degree.
pub fn slide_model(rings: &Rings, max_n: usize) -> SweepReport {
    sweep("torus slide d_max", &rings.pairs(max_n), |(s, l, m)| {
        let p = rings.ring(*s).product(l, m)?;
        let top = p.degrees().last().copied();
        let sl = slide(*s, l, m)?;
        Ok(fail_unless(Some(sl.contact) == top, || format!("{s} {l}*{m}: slide {sl:?}, product top degree {top:?}")))
    })
}

fn associator(
    ring: &QuantumRing,
    a: &BoxedPartition,
    b: &BoxedPartition,
    c: &BoxedPartition,
) -> Result<Option<String>> {
    let left = ring.multiply(&*ring.product(a, b)?, &QuantumClass::schubert(c))?;
    let right = ring.multiply(&QuantumClass::schubert(a), &*ring.product(b, c)?)?;
    Ok(fail_unless(left == right, || format!("{} ({a}*{b})*{c} = {left}, {a}*({b}*{c}) = {right}", ring.shape())))
}

/// Associativity: every triple for `n <= 6`, seeded random triples above.
pub fn associativity(rings: &Rings, max_n: usize, seed: u64) -> SweepReport {
    let mut triples = Vec::new();
    for s in rings.shapes().filter(|s| s.n() <= max_n) {
        let all = s.partitions();
        if s.n() <= EXHAUSTIVE_ASSOCIATIVITY_N {
            for a in &all {
                for b in &all {
                    for c in &all {
                        triples.push((s, a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((s.k() as u64) << 32 | s.n() as u64));
            for _ in 0..RANDOM_TRIPLES {
                let mut pick = || all[rng.gen_range(0..all.len())].clone();
                triples.push((s, pick(), pick(), pick()));
            }
        }
    }
    sweep("associativity", &triples, |(s, a, b, c)| associator(rings.ring(*s), a, b, c))
}

/// `N(λ,μ,ρ) = c^{ρ∨}_{λμ}(d)` is invariant under permuting the three classes.
pub fn s3_symmetry(rings: &Rings, max_n: usize) -> SweepReport {
    let mut triples = Vec::new();
    for s in rings.shapes().filter(|s| s.n() <= max_n) {
        let all = s.partitions();
        for a in &all {
            for b in &all {
                for c in &all {
                    let w = a.weight() + b.weight() + c.weight();
                    if w >= s.cells() && (w - s.cells()) % s.n() == 0 {
                        triples.push((s, a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        }
    }
    sweep("S3 symmetry", &triples, |(s, a, b, c)| {
        let ring = rings.ring(*s);
        let d = (a.weight() + b.weight() + c.weight() - s.cells()) / s.n();
        let n = |x: &BoxedPartition, y: &BoxedPartition, z: &BoxedPartition| -> Result<BigInt> {
            Ok(ring.product(x, y)?.coeff(d, z.dual().partition()))
        };
        let values = [n(a, b, c)?, n(a, c, b)?, n(b, a, c)?, n(b, c, a)?, n(c, a, b)?, n(c, b, a)?];
        Ok(fail_unless(values.iter().all(|v| *v == values[0]), || format!("{s} ({a},{b},{c}) at q^{d}: {values:?}")))
    })
}

pub fn giambelli(rings: &Rings, max_n: usize) -> SweepReport {
    let items: Vec<BoxedPartition> = rings.shapes().filter(|s| s.n() <= max_n).flat_map(|s| s.partitions()).collect();
    sweep("quantum Giambelli", &items, |l| {
        let ok = rings.ring(l.shape()).giambelli_check(l)?;
        Ok(fail_unless(ok, || format!("{} {l}", l.shape())))
    })
}

pub fn presentation(max_n: usize) -> SweepReport {
    let memo = Arc::new(LrMemo::new());
    sweep("presentation relations", &shapes(max_n), |s| {
        QuantumRing::with_memo(*s, memo.clone()).presentation_check()?;
        Ok(None)
    })
}

/// Fusion structure constants against the quantum product, every pair, plus
/// the single-term product of the full rectangle with itself.
pub fn fusion(rings: &Rings, max_n: usize) -> SweepReport {
    let tables: BTreeMap<BoxShape, CharacterTable> = rings
        .shapes()
        .filter(|s| s.n() <= max_n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|s| CharacterTable::new(s).ok().map(|t| (s, t)))
        .collect();
    let mut pairs = rings.pairs(max_n);
    pairs.retain(|(s, _, _)| tables.contains_key(s));
    let missing = rings.shapes().filter(|s| s.n() <= max_n && !tables.contains_key(s)).count();
    let residuals: Vec<f64> = pairs
        .par_iter()
        .filter_map(|(s, l, m)| fusion_product(&tables[s], l, m).ok().map(|f| f.residual.max(f.rounding)))
        .collect();
    let worst = residuals.iter().cloned().fold(0.0, f64::max);
    let mut report = sweep("fusion ring agreement", &pairs, |(s, l, m)| {
        let (f, mismatch) = compare_pair(&tables[s], rings.ring(*s), l, m)?;
        if f.coefficients.is_empty() {
            return Ok(Some(format!("{s} {l}⊗{m} vanished")));
        }
        if *l == s.full() && *m == s.full() {
            let p = rings.ring(*s).product(l, m)?;
            if p.len() != 1 || f.coefficients.len() != 1 {
                return Ok(Some(format!("{s} top*top = {p}, fusion {:?}", f.coefficients)));
            }
        }
        Ok(mismatch)
    });
    report.failed += missing;
    report.with_note(format!("max residual {worst:.1e}, tolerance {TOLERANCE:.0e}"))
}

/// Every sweep with its default bounds clamped to `max_n`.
pub fn run_all(max_n: usize, seed: u64) -> Vec<SweepReport> {
    let rings = Rings::new(max_n);
    let mut out = vec![
        paths(max_n),
        rim_equivalence(max_n.min(7)),
        lr_vs_monomial(4, 8.min(max_n.max(2))),
        lr_symmetry(12.min(max_n + 4)),
        pieri(4, 8.min(max_n), 4),
        classical_duality(&rings, max_n),
    ];
    out.extend(quantum_products(&rings, max_n));
    out.push(belkale(&rings, max_n.min(7)));
    out.push(slide_model(&rings, max_n.min(7)));
    out.push(associativity(&rings, max_n.min(8), seed));
    out.push(s3_symmetry(&rings, max_n.min(6)));
    out.push(giambelli(&rings, max_n.min(8)));
    out.push(presentation(max_n.min(9)));
    out.push(fusion(&rings, max_n.min(crate::fusion::MAX_N)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn strips_of_a_row() {
        let strips = border_strips(&p("4"), 4);
        assert_eq!(strips, vec![(p(""), 1)]);
        assert_eq!(border_strips(&p("2,2"), 3), vec![(p("1"), 2)]);
        // (3,2)/(2) is disconnected.
        assert_eq!(border_strips(&p("3,2"), 3), vec![(p("1,1"), 2)]);
        assert!(border_strips(&p("2,2"), 4).is_empty());
    }

    #[test]
    fn recursive_rim_examples() {
        let s = BoxShape::new(4, 9).unwrap();
        let want = RimReduction::Reduced { nu: s.parse_boxed("4,1").unwrap(), d: 3, sign: 1 };
        assert_eq!(rim_reduce_recursive(&p("9,8,8,7"), s), Ok(want));
        let s = BoxShape::new(2, 4).unwrap();
        assert_eq!(rim_reduce_recursive(&p("3"), s), Ok(RimReduction::Zero));
        let want = RimReduction::Reduced { nu: s.empty(), d: 1, sign: -1 };
        assert_eq!(rim_reduce_recursive(&p("4"), s), Ok(want));
    }

    #[test]
    fn small_sweeps_pass() {
        for r in run_all(5, 7) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn failures_are_reported() {
        let r = sweep("demo", &[1, 2, 3], |x| Ok(fail_unless(*x != 2, || "two".into())));
        assert_eq!((r.checked, r.failed, r.passed()), (3, 1, false));
        assert!(r.to_string().starts_with("FAIL"));
    }
}
