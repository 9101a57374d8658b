use crate::error::{Error, Result};

use super::partition::Partition;

/// A bijection of `{0, .., d-1}`; `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Self {
            images: (0..d).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{d}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of degree `d` from disjoint cycles of 0-based points.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut touched = vec![false; d];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= d || touched[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint in degree {d}"
                    )));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn transposition(d: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a >= d || b >= d {
            return Err(Error::InvalidPermutation(format!(
                "({a} {b}) is not a transposition in degree {d}"
            )));
        }
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(a, b);
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles including fixed points, each starting at its
    /// smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type as a partition of the degree. Panics on degree 0.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
            .expect("a permutation of positive degree has a cycle type")
    }
}

/// All `d(d-1)/2` transpositions of `S_d`, lexicographic in `(a, b)`.
pub fn transpositions(d: usize) -> Vec<Permutation> {
    transposition_pairs(d)
        .into_iter()
        .map(|(a, b)| Permutation::transposition(d, a, b).expect("a < b < d"))
        .collect()
}

pub(crate) fn transposition_pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d)
        .flat_map(|a| (a + 1..d).map(move |b| (a, b)))
        .collect()
}

/// Disjoint-set forest over `{0, .., n-1}` with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Whether `<gens>` acts transitively on `{0, .., d-1}`. Orbits of the
/// generated group are the connected components of the graph joining
/// `i` to `g(i)` for every generator `g`.
pub fn is_transitive(gens: &[Permutation], d: usize) -> Result<bool> {
    let mut uf = UnionFind::new(d);
    for g in gens {
        if g.degree() != d {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: d,
            });
        }
        for (i, &j) in g.images.iter().enumerate() {
            uf.union(i, j);
        }
    }
    Ok(uf.components() <= 1)
}
