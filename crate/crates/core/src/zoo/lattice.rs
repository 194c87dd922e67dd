//! Finite meet-semilattices with top, their mosaics and small lattices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::magma::{Carrier, Hypermagma};
use crate::subset::Subset;

/// A finite meet-semilattice with a top element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub carrier: Carrier,
    /// Row-major meet table.
    pub meet: Vec<usize>,
    pub top: usize,
}

impl Lattice {
    pub fn new(carrier: Carrier, meet: Vec<usize>, top: usize) -> Result<Self> {
        let n = carrier.len();
        if meet.len() != n * n || meet.iter().any(|&z| z >= n) || (n > 0 && top >= n) {
            return Err(Error::DimensionMismatch("meet table is not n x n".into()));
        }
        if n == 0 {
            return Err(Error::NotASemilattice("empty carrier has no top".into()));
        }
        let m = |a: usize, b: usize| meet[a * n + b];
        for a in 0..n {
            if m(a, a) != a {
                return Err(Error::NotASemilattice(format!("{} is not idempotent", carrier.label(a))));
            }
            if m(top, a) != a {
                return Err(Error::NotASemilattice("top is not a meet identity".into()));
            }
            for b in 0..n {
                if m(a, b) != m(b, a) {
                    return Err(Error::NotASemilattice("meet is not commutative".into()));
                }
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NotASemilattice("meet is not associative".into()));
                    }
                }
            }
        }
        Ok(Lattice { carrier, meet, top })
    }

    /// Builds the lattice of a partial order given by `leq(a, b)`, taking
    /// meets as greatest lower bounds.
    pub fn from_order<F: Fn(usize, usize) -> bool>(carrier: Carrier, leq: F) -> Result<Self> {
        let n = carrier.len();
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&c| leq(c, a) && leq(c, b)).collect();
                let glb = lower.iter().copied().find(|&c| lower.iter().all(|&d| leq(d, c)));
                meet[a * n + b] = glb
                    .ok_or_else(|| Error::NotASemilattice("some pair has no meet".into()))?;
            }
        }
        let top = (0..n)
            .find(|&t| (0..n).all(|a| leq(a, t)))
            .ok_or_else(|| Error::NotASemilattice("no top element".into()))?;
        Self::new(carrier, meet, top)
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    /// Least upper bound (always exists: the meet of all upper bounds).
    pub fn join(&self, a: usize, b: usize) -> usize {
        (0..self.size())
            .filter(|&c| self.leq(a, c) && self.leq(b, c))
            .fold(self.top, |acc, c| self.meet(acc, c))
    }

    /// `a ≤ c ⟹ a ∨ (b ∧ c) = (a ∨ b) ∧ c`.
    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    pub fn modularity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for a in 0..n {
            for c in (0..n).filter(|&c| self.leq(a, c)) {
                for b in 0..n {
                    if self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// The chain `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> Result<Self> {
        Self::from_order(Carrier::numbered(n)?, |a, b| a <= b)
    }

    /// The diamond `M₃ = {0, a, b, c, 1}`.
    pub fn m3() -> Self {
        let c = Carrier::from_strs(&["0", "a", "b", "c", "1"]).unwrap();
        Self::from_order(c, |x, y| x == y || x == 0 || y == 4).unwrap()
    }

    /// The pentagon `N₅ = {0, a, b, c, 1}` with `a < b`.
    pub fn n5() -> Self {
        let c = Carrier::from_strs(&["0", "a", "b", "c", "1"]).unwrap();
        Self::from_order(c, |x, y| x == y || x == 0 || y == 4 || (x, y) == (1, 2)).unwrap()
    }

    /// Subsets of a `k`-element set under intersection.
    pub fn boolean(k: usize) -> Result<Self> {
        let n = 1usize << k;
        let labels = (0..n)
            .map(|s| (0..k).map(|i| if s >> i & 1 == 1 { '1' } else { '0' }).collect())
            .collect();
        Self::from_order(Carrier::new(labels)?, |a, b| a & b == a)
    }
}

/// `a ⊼ b = {c | a ∧ c = b ∧ c = a ∧ b}`, identity the top, every element
/// its own inverse.
pub fn lattice_mosaic(l: &Lattice) -> Result<Hypermagma> {
    let n = l.size();
    Hypermagma::new(
        l.carrier.clone(),
        (0..n * n)
            .map(|k| {
                let (a, b) = (k / n, k % n);
                let ab = l.meet(a, b);
                (0..n)
                    .filter(|&c| l.meet(a, c) == ab && l.meet(b, c) == ab)
                    .collect::<Subset>()
            })
            .collect(),
        Some(l.top),
    )
}

/// All lattices with `n` elements up to isomorphism, bottom labelled `0`,
/// top `1` and the others `a, b, …`.
pub fn all_lattices(n: usize) -> Result<Vec<Lattice>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![Lattice::new(Carrier::from_strs(&["1"])?, vec![0], 0)?]);
    }
    let k = n - 2;
    if k > 6 {
        return Err(Error::CarrierTooLarge { size: n, limit: 8 });
    }
    // Strict orders on the inner elements compatible with index order.
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let perms = permutations(k);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        let lt = |i: usize, j: usize| -> bool {
            i < j && pairs.iter().position(|&p| p == (i, j)).is_some_and(|q| bits >> q & 1 == 1)
        };
        let transitive = (0..k).all(|i| {
            (0..k).all(|j| (0..k).all(|l| !(lt(i, j) && lt(j, l)) || lt(i, l)))
        });
        if !transitive {
            continue;
        }
        let rel: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| lt(i, j)).collect()).collect();
        // Canonical form: least relation matrix over relabellings.
        let canon = perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for i in 0..k {
                    for j in 0..k {
                        if rel[i][j] {
                            code |= 1 << (p[i] * k + p[j]);
                        }
                    }
                }
                code
            })
            .min()
            .unwrap_or(0);
        if !seen.insert(canon) {
            continue;
        }
        let mut labels = vec!["0".to_string()];
        labels.extend((0..k).map(|i| ((b'a' + i as u8) as char).to_string()));
        labels.push("1".to_string());
        let leq = |x: usize, y: usize| -> bool {
            x == y || x == 0 || y == n - 1 || (x >= 1 && y >= 1 && x < n - 1 && y < n - 1 && rel[x - 1][y - 1])
        };
        if let Ok(l) = Lattice::from_order(Carrier::new(labels)?, leq) {
            out.push(l);
        }
    }
    Ok(out)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut p: Vec<usize> = (0..k).collect();
    fn rec(i: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(i + 1, p, out);
            p.swap(i, j);
        }
    }
    rec(0, &mut p, &mut out);
    out
}
