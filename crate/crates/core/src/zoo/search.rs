//! Exhaustive search for small canonical hypergroups and for finite
//! witnesses of an empty sum in `Can(ℤ₂, H)`.
//!
//! A canonical hypergroup is determined by its involution and by the set of
//! nonzero multisets `{a, b, c}` with `0 ∈ a + b + c` (equivalently
//! `−c ∈ a + b`). That set is closed under negation, and every
//! negation-closed choice gives a commutative reversible hypermagma with
//! unique inverses; associativity is then checked directly.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::axioms::analyze;
use crate::error::{Error, Result};
use crate::hom::{count_morphisms, search_cap, CategoryTag};
use crate::magma::{Carrier, Hypermagma};
use crate::monoidal::hom_object;
use crate::subset::Subset;
use crate::zoo::z2;

/// Number of nonzero self-inverse elements and of `±` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Shape {
    pub self_inverse: usize,
    pub pairs: usize,
}

impl Shape {
    pub fn size(self) -> usize {
        1 + self.self_inverse + 2 * self.pairs
    }

    /// All shapes of a given carrier size.
    pub fn all(n: usize) -> Vec<Shape> {
        if n == 0 {
            return Vec::new();
        }
        (0..=(n - 1) / 2)
            .map(|pairs| Shape {
                self_inverse: n - 1 - 2 * pairs,
                pairs,
            })
            .collect()
    }

    /// Labels `0, x1.., p1, -p1, ..` and the negation map.
    pub fn layout(self) -> (Vec<String>, Vec<usize>) {
        let mut labels = vec!["0".to_string()];
        let mut neg = vec![0];
        for i in 1..=self.self_inverse {
            labels.push(format!("x{i}"));
            neg.push(i);
        }
        for j in 1..=self.pairs {
            let p = labels.len();
            labels.push(format!("p{j}"));
            labels.push(format!("-p{j}"));
            neg.push(p + 1);
            neg.push(p);
        }
        (labels, neg)
    }

    fn automorphisms(self) -> Vec<Vec<usize>> {
        let s = self.self_inverse;
        let k = self.pairs;
        let mut out = Vec::new();
        for ps in permutations(s) {
            for pk in permutations(k) {
                for signs in 0..(1usize << k) {
                    let mut sigma = vec![0];
                    sigma.extend(ps.iter().map(|&i| 1 + i));
                    sigma.resize(self.size(), 0);
                    for j in 0..k {
                        let (src, dst) = (1 + s + 2 * j, 1 + s + 2 * pk[j]);
                        let flip = signs >> j & 1;
                        sigma[src] = dst + flip;
                        sigma[src + 1] = dst + 1 - flip;
                    }
                    out.push(sigma);
                }
            }
        }
        out
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
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
    let mut out = Vec::new();
    rec(0, &mut (0..k).collect(), &mut out);
    out
}

/// One negation orbit of nonzero multisets, with the table bits it sets.
#[derive(Clone, Debug)]
struct Orbit {
    members: Vec<[usize; 3]>,
    /// `(x * n + y, z)`: `z ∈ x + y`.
    bits: Vec<(usize, usize)>,
}

fn orbits(shape: Shape, neg: &[usize]) -> Vec<Orbit> {
    let n = shape.size();
    let sorted = |mut t: [usize; 3]| {
        t.sort();
        t
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 1..n {
        for b in a..n {
            for c in b..n {
                let t = [a, b, c];
                let nt = sorted([neg[a], neg[b], neg[c]]);
                let key = t.min(nt);
                if !seen.insert(key) {
                    continue;
                }
                let members: Vec<[usize; 3]> = if nt == t { vec![t] } else { vec![t, nt] };
                let mut bits = BTreeSet::new();
                for m in &members {
                    for i in 0..3 {
                        let z = neg[m[i]];
                        let (x, y) = (m[(i + 1) % 3], m[(i + 2) % 3]);
                        bits.insert((x * n + y, z));
                        bits.insert((y * n + x, z));
                    }
                }
                out.push(Orbit {
                    members,
                    bits: bits.into_iter().collect(),
                });
            }
        }
    }
    out
}

/// Per-shape search state: a table of bitmasks updated by Gray code.
struct ShapeSearch {
    n: usize,
    neg: Vec<usize>,
    labels: Vec<String>,
    base: Vec<u16>,
    free: Vec<Orbit>,
}

impl ShapeSearch {
    /// `forced_in` orbits are always present, `forced_out` never; the
    /// rest are free.
    fn new(shape: Shape, forced_in: &[[usize; 3]], forced_out: &[[usize; 3]]) -> Result<Self> {
        let n = shape.size();
        if n > 16 {
            return Err(Error::CarrierTooLarge { size: n, limit: 16 });
        }
        let (labels, neg) = shape.layout();
        let mut base = vec![0u16; n * n];
        for x in 0..n {
            base[x] |= 1 << x;
            base[x * n] |= 1 << x;
            base[x * n + neg[x]] |= 1;
        }
        let contains = |o: &Orbit, list: &[[usize; 3]]| {
            list.iter().any(|t| {
                let mut t = *t;
                t.sort();
                o.members.contains(&t)
            })
        };
        let mut free = Vec::new();
        for o in orbits(shape, &neg) {
            if contains(&o, forced_in) {
                for &(cell, z) in &o.bits {
                    base[cell] |= 1 << z;
                }
            } else if !contains(&o, forced_out) {
                free.push(o);
            }
        }
        Ok(ShapeSearch {
            n,
            neg,
            labels,
            base,
            free,
        })
    }

    fn combinations(&self) -> u64 {
        1u64.checked_shl(self.free.len() as u32).unwrap_or(u64::MAX)
    }

    /// Visits every associative table; `visit` returns whether to go on.
    fn run<F: FnMut(&[u16]) -> bool>(&self, budget: &mut u64, mut visit: F) -> Result<()> {
        let total = self.combinations();
        if total > *budget {
            return Err(Error::SearchCapExceeded(search_cap()));
        }
        *budget -= total;
        let mut table = self.base.clone();
        for i in 0..total {
            if i > 0 {
                let flip = i.trailing_zeros() as usize;
                for &(cell, z) in &self.free[flip].bits {
                    table[cell] ^= 1 << z;
                }
            }
            if self.is_hypergroup(&table) && !visit(&table) {
                break;
            }
        }
        Ok(())
    }

    fn is_hypergroup(&self, t: &[u16]) -> bool {
        let n = self.n;
        if t.contains(&0) {
            return false;
        }
        let sum = |mask: u16, z: usize| -> u16 {
            let mut out = 0;
            let mut m = mask;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                out |= t[w * n + z];
                m &= m - 1;
            }
            out
        };
        for x in 1..n {
            for y in 1..n {
                let xy = t[x * n + y];
                for z in y..n {
                    // (x + y) + z = x + (y + z), using commutativity.
                    if sum(xy, z) != sum(t[y * n + z], x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn canonical(&self, t: &[u16], autos: &[Vec<usize>]) -> Vec<u16> {
        let n = self.n;
        autos
            .iter()
            .map(|s| {
                let mut code = vec![0u16; n * n];
                for x in 0..n {
                    for y in 0..n {
                        let mut img = 0u16;
                        let mut m = t[x * n + y];
                        while m != 0 {
                            img |= 1 << s[m.trailing_zeros() as usize];
                            m &= m - 1;
                        }
                        code[s[x] * n + s[y]] = img;
                    }
                }
                code
            })
            .min()
            .expect("identity automorphism")
    }

    fn build(&self, t: &[u16]) -> Hypermagma {
        let n = self.n;
        let table = t.iter().map(|&m| Subset::from_bits(m as u64)).collect();
        let h = Hypermagma::new(Carrier::new(self.labels.clone()).unwrap(), table, Some(0))
            .expect("search tables have identity 0");
        debug_assert_eq!(h.inverse_map(), Some(self.neg.as_slice()));
        debug_assert!(n == 0 || analyze(&h).classification.is_canonical_hypergroup());
        h
    }
}

/// All canonical hypergroups with `n` elements, one per isomorphism class,
/// in a deterministic order. Labels follow [`Shape::layout`].
pub fn canonical_hypergroups(n: usize) -> Result<Vec<Hypermagma>> {
    let mut budget = search_cap();
    let mut out = Vec::new();
    for shape in Shape::all(n) {
        let s = ShapeSearch::new(shape, &[], &[])?;
        let autos = shape.automorphisms();
        let mut found: BTreeMap<Vec<u16>, ()> = BTreeMap::new();
        s.run(&mut budget, |t| {
            found.insert(s.canonical(t, &autos), ());
            true
        })?;
        out.extend(found.keys().map(|t| s.build(t)));
    }
    Ok(out)
}

/// All canonical hypergroups with at most `max` elements.
pub fn canonical_hypergroups_up_to(max: usize) -> Result<Vec<Hypermagma>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(canonical_hypergroups(n)?);
    }
    Ok(out)
}

/// A verified instance of `f + g = ∅` in `Can(ℤ₂, H)`.
#[derive(Clone, Debug)]
pub struct EmptySumWitness {
    pub hypergroup: Arc<Hypermagma>,
    pub x: usize,
    pub y: usize,
    /// `1 ↦ x` and `1 ↦ y` as index arrays `ℤ₂ → H`.
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

/// Outcome of [`empty_sum_search`].
#[derive(Clone, Debug)]
pub enum EmptySumOutcome {
    Found(EmptySumWitness),
    Exhausted { max_size: usize, tables: u64 },
}

/// Re-checks a witness: `H` is a canonical hypergroup, `0 ∈ x + x`,
/// `0 ∈ y + y`, `|Can(ℤ₂, H)| = |{x | 0 ∈ x + x}|`, and `f + g = ∅` in the
/// internal hom.
pub fn verify_empty_sum(w: &EmptySumWitness) -> Result<bool> {
    let h = &w.hypergroup;
    if !analyze(h).classification.is_canonical_hypergroup() {
        return Ok(false);
    }
    let zero = h.identity().unwrap();
    let involutions = (0..h.size()).filter(|&x| h.op(x, x).contains(zero)).count();
    let z = Arc::new(z2());
    if count_morphisms(&z, h, CategoryTag::Can)? != involutions {
        return Ok(false);
    }
    let hom = hom_object(&z, h, CategoryTag::Can)?;
    let (Some(f), Some(g)) = (hom.element(&w.f), hom.element(&w.g)) else {
        return Ok(false);
    };
    Ok(w.f == [zero, w.x] && w.g == [zero, w.y] && hom.object.op(f, g).is_empty())
}

/// Searches canonical hypergroups of size `≤ max_size` for self-inverse
/// `x, y` such that `x + y` contains no self-inverse element, which makes
/// `f + g = ∅` for `f(1) = x`, `g(1) = y`.
///
/// Without loss of generality `x = x1`, `y = x2` and `−p1 ∈ x1 + x2`; such
/// a configuration needs at least two self-inverse elements and one pair.
pub fn empty_sum_search(max_size: usize) -> Result<EmptySumOutcome> {
    let mut budget = search_cap();
    let mut tables = 0u64;
    for n in 1..=max_size {
        for shape in Shape::all(n) {
            if shape.self_inverse < 2 || shape.pairs < 1 {
                continue;
            }
            let p1 = 1 + shape.self_inverse;
            let forced_out: Vec<[usize; 3]> = (1..=shape.self_inverse).map(|w| [1, 2, w]).collect();
            let s = ShapeSearch::new(shape, &[[1, 2, p1]], &forced_out)?;
            tables += s.combinations();
            let mut hit = None;
            s.run(&mut budget, |t| {
                hit = Some(t.to_vec());
                false
            })?;
            if let Some(t) = hit {
                let w = EmptySumWitness {
                    hypergroup: Arc::new(s.build(&t)),
                    x: 1,
                    y: 2,
                    f: vec![0, 1],
                    g: vec![0, 2],
                };
                return Ok(EmptySumOutcome::Found(w));
            }
        }
    }
    Ok(EmptySumOutcome::Exhausted { max_size, tables })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::find_isomorphism;

    #[test]
    fn small_counts_are_pairwise_non_isomorphic() {
        for n in 1..=4 {
            let hs = canonical_hypergroups(n).unwrap();
            for (i, a) in hs.iter().enumerate() {
                assert!(analyze(a).classification.is_canonical_hypergroup());
                for b in &hs[i + 1..] {
                    assert!(find_isomorphism(a, b).is_none());
                }
            }
        }
        assert_eq!(canonical_hypergroups(1).unwrap().len(), 1);
        // ℤ₂ and 𝐊.
        assert_eq!(canonical_hypergroups(2).unwrap().len(), 2);
    }

    #[test]
    fn krasner_and_f9_are_found() {
        let k = crate::zoo::krasner();
        assert!(canonical_hypergroups(2).unwrap().iter().any(|h| find_isomorphism(h, &k).is_some()));
        let f9 = crate::zoo::f9_hypergroup();
        let five = canonical_hypergroups(5).unwrap();
        assert!(five.iter().any(|h| find_isomorphism(h, &f9).is_some()));
    }

    #[test]
    fn no_witness_below_five() {
        assert!(matches!(empty_sum_search(4).unwrap(), EmptySumOutcome::Exhausted { .. }));
    }
}
