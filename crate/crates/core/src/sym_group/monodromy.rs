//! Brute-force monodromy enumeration.
//!
//! A monodromy tuple is `(σ, τ_1, .., τ_r)` with every `τ_i` a
//! transposition of `S_d`, `τ_r ··· τ_1 σ = e`, and the group
//! `<σ, τ_1, .., τ_r>` transitive on the `d` sheets. Since `σ` is forced to
//! be `(τ_r ··· τ_1)^{-1}`, walking every transposition word once visits
//! every tuple once, and a single walk tallies all cycle types of `σ` at
//! the same time.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::partition::Partition;
use super::permutation::{transposition_pairs, Permutation};

/// Largest degree the word walk supports.
pub const MAX_ENUMERATION_DEGREE: usize = 8;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper bound on the number of transposition words, `(d(d-1)/2)^r`, that
/// one enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumerationBudget(u64);

impl EnumerationBudget {
    pub fn new(words: u64) -> Result<Self> {
        if words == 0 {
            return Err(Error::InvalidArgument(
                "enumeration budget must be positive".into(),
            ));
        }
        Ok(Self(words))
    }

    pub fn words(self) -> u64 {
        self.0
    }

    /// Number of words needed for `(d, r)`, or a capacity error naming the bound.
    pub fn check(self, d: usize, r: usize) -> Result<u64> {
        if d == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if d > MAX_ENUMERATION_DEGREE {
            return Err(Error::Capacity {
                what: format!("brute-force enumeration in degree {d}"),
                bound: format!("degree <= {MAX_ENUMERATION_DEGREE}"),
            });
        }
        let t = (d * (d - 1) / 2) as u64;
        match t.checked_pow(r as u32) {
            Some(words) if words <= self.0 => Ok(words),
            _ => Err(Error::Capacity {
                what: format!("enumerating {t}^{r} transposition words (d = {d}, r = {r})"),
                bound: format!("enumeration budget {} words", self.0),
            }),
        }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self(DEFAULT_BUDGET)
    }
}

/// Per-cycle-type counts from one walk over all words of length `r` in `S_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyTally {
    pub degree: usize,
    pub branch_points: usize,
    /// Tuples with transitive monodromy, keyed by the cycle type of `σ`.
    pub transitive: BTreeMap<Partition, u64>,
    /// Every tuple regardless of transitivity.
    pub all: BTreeMap<Partition, u64>,
}

impl MonodromyTally {
    pub fn transitive_count(&self, eta: &Partition) -> u64 {
        self.transitive.get(eta).copied().unwrap_or(0)
    }

    pub fn all_count(&self, eta: &Partition) -> u64 {
        self.all.get(eta).copied().unwrap_or(0)
    }
}

/// Walks every word of `r` transpositions in `S_d` and tallies tuples by
/// the cycle type of `σ`.
pub fn tally_monodromy(d: usize, r: usize, budget: EnumerationBudget) -> Result<MonodromyTally> {
    budget.check(d, r)?;
    let walker = Walker::new(d, Leaf::Tally);
    let counts = walker.run(r);
    let mut transitive = BTreeMap::new();
    let mut all = BTreeMap::new();
    for (key, (&c_trans, &c_all)) in counts.transitive.iter().zip(&counts.all).enumerate() {
        if c_all == 0 {
            continue;
        }
        let eta = walker.decode(key);
        if c_trans > 0 {
            transitive.insert(eta.clone(), c_trans);
        }
        all.insert(eta, c_all);
    }
    Ok(MonodromyTally {
        degree: d,
        branch_points: r,
        transitive,
        all,
    })
}

/// Number of transitive monodromy tuples with `σ` ranging over the whole
/// conjugacy class of type `eta`.
pub fn count_monodromy_tuples(eta: &Partition, r: usize, budget: EnumerationBudget) -> Result<u64> {
    let d = eta.size();
    budget.check(d, r)?;
    if (r + eta.transposition_length()) % 2 == 1 {
        return Ok(0);
    }
    Ok(tally_monodromy(d, r, budget)?.transitive_count(eta))
}

/// Same as [`count_monodromy_tuples`] without the transitivity filter.
pub fn count_all_tuples(eta: &Partition, r: usize, budget: EnumerationBudget) -> Result<u64> {
    let d = eta.size();
    budget.check(d, r)?;
    if (r + eta.transposition_length()) % 2 == 1 {
        return Ok(0);
    }
    Ok(tally_monodromy(d, r, budget)?.all_count(eta))
}

/// Transitive tuples for one fixed `σ`.
pub fn count_for_representative(
    sigma: &Permutation,
    r: usize,
    budget: EnumerationBudget,
) -> Result<u64> {
    let d = sigma.degree();
    budget.check(d, r)?;
    let mut target = [0u8; MAX_ENUMERATION_DEGREE];
    // the walk builds τ_r ··· τ_1, which must equal σ^{-1}
    for (i, &j) in sigma.inverse().images().iter().enumerate() {
        target[i] = j as u8;
    }
    let walker = Walker::new(d, Leaf::Match(target));
    Ok(walker.run(r).matched)
}

#[derive(Clone, Copy)]
enum Leaf {
    Tally,
    Match([u8; MAX_ENUMERATION_DEGREE]),
}

struct Counts {
    transitive: Vec<u64>,
    all: Vec<u64>,
    matched: u64,
}

impl Counts {
    fn new(keys: usize) -> Self {
        Self {
            transitive: vec![0; keys],
            all: vec![0; keys],
            matched: 0,
        }
    }

    fn absorb(mut self, other: Counts) -> Counts {
        for (a, b) in self.transitive.iter_mut().zip(other.transitive) {
            *a += b;
        }
        for (a, b) in self.all.iter_mut().zip(other.all) {
            *a += b;
        }
        self.matched += other.matched;
        self
    }
}

type Points = [u8; MAX_ENUMERATION_DEGREE];

struct Walker {
    d: usize,
    pairs: Vec<(usize, usize)>,
    /// Mixed-radix strides: a cycle type with multiplicities `m_k` maps to
    /// `sum_k m_k * stride[k]`.
    stride: Vec<usize>,
    keys: usize,
    leaf: Leaf,
}

impl Walker {
    fn new(d: usize, leaf: Leaf) -> Self {
        let mut stride = vec![0; d + 1];
        let mut keys = 1;
        for (k, s) in stride.iter_mut().enumerate().skip(1) {
            *s = keys;
            keys *= d / k + 1;
        }
        Self {
            d,
            pairs: transposition_pairs(d),
            stride,
            keys,
            leaf,
        }
    }

    fn decode(&self, mut key: usize) -> Partition {
        let mut parts = Vec::new();
        for k in 1..=self.d {
            let radix = self.d / k + 1;
            let m = key % radix;
            key /= radix;
            parts.extend(std::iter::repeat_n(k, m));
        }
        Partition::new(parts).expect("decoded cycle type is non-empty")
    }

    fn run(&self, r: usize) -> Counts {
        let start = identity_points();
        let mut counts = Counts::new(self.keys);
        if r == 0 || self.pairs.is_empty() {
            if r == 0 {
                self.finish(&start, &start, 1, &mut counts);
            }
            return counts;
        }
        if self.d <= TABLE_DEGREE {
            let table = StateTable::get(self.d);
            for (state, &n) in table.walk(r).iter().enumerate() {
                if n > 0 {
                    self.finish(&table.product[state], &table.comp[state], n, &mut counts);
                }
            }
            return counts;
        }
        self.run_direct(r)
    }

    /// Walks words as explicit permutation arrays, without the state table.
    fn run_direct(&self, r: usize) -> Counts {
        let start = identity_points();
        // split on the first transposition; sums are order independent
        self.pairs
            .par_iter()
            .map(|&(a, b)| {
                let mut counts = Counts::new(self.keys);
                let (q, comp) = step(self.d, &start, &start, a, b);
                self.walk(r - 1, &q, &comp, &mut counts);
                counts
            })
            .reduce(|| Counts::new(self.keys), Counts::absorb)
    }

    fn walk(&self, left: usize, q: &Points, comp: &Points, counts: &mut Counts) {
        if left == 0 {
            self.finish(q, comp, 1, counts);
            return;
        }
        for &(a, b) in &self.pairs {
            let (q2, comp2) = step(self.d, q, comp, a, b);
            self.walk(left - 1, &q2, &comp2, counts);
        }
    }

    /// `q` is the product of the word, `comp` labels the components of the
    /// graph whose edges are the word's transpositions.
    fn finish(&self, q: &Points, comp: &Points, weight: u64, counts: &mut Counts) {
        if let Leaf::Match(target) = self.leaf {
            if q[..self.d] != target[..self.d] {
                return;
            }
        }
        let d = self.d;
        let mut seen = 0u32;
        let mut key = 0;
        let mut cycle_masks = [0u32; MAX_ENUMERATION_DEGREE];
        let mut n_cycles = 0;
        for start in 0..d {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut len = 0;
            let mut mask = 0u32;
            let mut i = start;
            while seen & (1 << i) == 0 {
                seen |= 1 << i;
                mask |= 1 << comp[i];
                len += 1;
                i = q[i] as usize;
            }
            key += self.stride[len];
            cycle_masks[n_cycles] = mask;
            n_cycles += 1;
        }
        // labels reachable from the first cycle through shared labels
        let mut all_labels = 0u32;
        for &m in &cycle_masks[..n_cycles] {
            all_labels |= m;
        }
        let mut reach = cycle_masks[0];
        loop {
            let before = reach;
            for &m in &cycle_masks[..n_cycles] {
                if m & reach != 0 {
                    reach |= m;
                }
            }
            if reach == before {
                break;
            }
        }
        let transitive = reach == all_labels;
        match self.leaf {
            Leaf::Tally => {
                counts.all[key] += weight;
                if transitive {
                    counts.transitive[key] += weight;
                }
            }
            Leaf::Match(_) => {
                if transitive {
                    counts.matched += weight;
                }
            }
        }
    }
}

/// Degrees up to which the walk runs on a precomputed state table.
const TABLE_DEGREE: usize = 6;

fn identity_points() -> Points {
    let mut p: Points = [0; MAX_ENUMERATION_DEGREE];
    for (i, x) in p.iter_mut().enumerate() {
        *x = i as u8;
    }
    p
}

/// Relabels components by first appearance so equal partitions compare equal.
fn canonical_labels(d: usize, comp: &Points) -> Points {
    let mut map = [u8::MAX; MAX_ENUMERATION_DEGREE];
    let mut next = 0u8;
    let mut out = *comp;
    for c in out[..d].iter_mut() {
        let slot = &mut map[*c as usize];
        if *slot == u8::MAX {
            *slot = next;
            next += 1;
        }
        *c = *slot;
    }
    out
}

/// Every reachable pair (word product, component partition) in `S_d`,
/// with the successor of each state under each transposition. At most
/// `d! · Bell(d)` states.
struct StateTable {
    pairs: usize,
    next: Vec<u32>,
    product: Vec<Points>,
    comp: Vec<Points>,
}

static TABLES: [OnceLock<StateTable>; TABLE_DEGREE + 1] = [const { OnceLock::new() }; TABLE_DEGREE + 1];

impl StateTable {
    fn get(d: usize) -> &'static StateTable {
        TABLES[d].get_or_init(|| StateTable::build(d))
    }

    fn build(d: usize) -> Self {
        let pairs = transposition_pairs(d);
        let start = identity_points();
        let mut index: HashMap<(Points, Points), u32> = HashMap::new();
        let mut product = vec![start];
        let mut comp = vec![start];
        index.insert((start, start), 0);
        let mut next = Vec::new();
        let mut state = 0;
        while state < product.len() {
            for &(a, b) in &pairs {
                let (q2, c2) = step(d, &product[state], &comp[state], a, b);
                let c2 = canonical_labels(d, &c2);
                let id = *index.entry((q2, c2)).or_insert_with(|| {
                    product.push(q2);
                    comp.push(c2);
                    (product.len() - 1) as u32
                });
                next.push(id);
            }
            state += 1;
        }
        Self {
            pairs: pairs.len(),
            next,
            product,
            comp,
        }
    }

    /// Number of words of length `r >= 1` ending in each state.
    fn walk(&self, r: usize) -> Vec<u64> {
        let n = self.product.len();
        (0..self.pairs)
            .into_par_iter()
            .map(|first| {
                let mut hits = vec![0u64; n];
                self.descend(self.next[first] as usize, r - 1, &mut hits);
                hits
            })
            .reduce(
                || vec![0u64; n],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    }

    fn descend(&self, state: usize, left: usize, hits: &mut [u64]) {
        if left == 0 {
            hits[state] += 1;
            return;
        }
        let row = &self.next[state * self.pairs..(state + 1) * self.pairs];
        if left == 1 {
            for &s in row {
                hits[s as usize] += 1;
            }
            return;
        }
        for &s in row {
            self.descend(s as usize, left - 1, hits);
        }
    }
}

/// Right-multiplies the product by `(a b)` and merges the components of `a`, `b`.
#[inline]
fn step(d: usize, q: &Points, comp: &Points, a: usize, b: usize) -> (Points, Points) {
    let mut q2 = *q;
    q2.swap(a, b);
    let mut comp2 = *comp;
    let (la, lb) = (comp[a], comp[b]);
    if la != lb {
        for c in comp2[..d].iter_mut() {
            if *c == lb {
                *c = la;
            }
        }
    }
    (q2, comp2)
}
