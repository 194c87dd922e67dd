//! Carriers, subsets and finite hypermagmas.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_CARRIER};

/// An ordered list of distinct element labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Carrier {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Carrier {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size: names.len(),
                limit: MAX_CARRIER,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(n.clone()));
            }
        }
        Ok(Carrier { names, index })
    }

    pub fn from_strs(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().map(|s| s.to_string()).collect())
    }

    /// Carrier labelled `0, 1, ..., n-1`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn subset_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            s.insert(self.require(l.as_ref())?);
        }
        Ok(s)
    }

    /// Renders a subset as `{a, b}`.
    pub fn show(&self, s: Subset) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Makes a label list unique by priming later duplicates.
pub(crate) fn dedup_labels(labels: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    labels
        .into_iter()
        .map(|mut l| {
            while !seen.insert(l.clone()) {
                l.push('\'');
            }
            l
        })
        .collect()
}

/// A finite set with a hyperoperation `x ⋆ y ⊆ M`.
///
/// The identity is detected at construction (it is unique when it exists),
/// and the inverse involution is stored exactly when every element has
/// exactly one inverse.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypermagma {
    carrier: Carrier,
    table: Vec<Subset>,
    identity: Option<usize>,
    inverse: Option<Vec<usize>>,
}

impl Hypermagma {
    /// Builds a hypermagma from a row-major `n × n` table.
    ///
    /// If `identity` is given it must satisfy `e ⋆ x = {x} = x ⋆ e`;
    /// otherwise an identity is searched for.
    pub fn new(carrier: Carrier, table: Vec<Subset>, identity: Option<usize>) -> Result<Self> {
        let n = carrier.len();
        if table.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "table has {} entries, carrier needs {n}x{n}",
                table.len()
            )));
        }
        let full = Subset::full(n);
        if let Some(pos) = table.iter().position(|s| !s.is_subset(&full)) {
            return Err(Error::DimensionMismatch(format!(
                "entry ({}, {}) names an element outside the carrier",
                pos / n,
                pos % n
            )));
        }
        let mut m = Hypermagma {
            carrier,
            table,
            identity: None,
            inverse: None,
        };
        match identity {
            Some(e) => {
                if e >= n || !m.is_identity(e) {
                    let name = if e < n { m.label(e).to_string() } else { e.to_string() };
                    return Err(Error::IdentityAxiomViolated(name));
                }
                m.identity = Some(e);
            }
            None => m.identity = (0..n).find(|&e| m.is_identity(e)),
        }
        m.inverse = m.detect_inverse();
        Ok(m)
    }

    /// Builds a hypermagma from a function computing each product.
    pub fn from_fn<F: FnMut(usize, usize) -> Subset>(carrier: Carrier, mut f: F) -> Result<Self> {
        let n = carrier.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(f(i, j));
            }
        }
        Self::new(carrier, table, None)
    }

    /// Builds a hypermagma from rows of cells, each cell a space-separated
    /// list of labels (empty string for the empty product).
    pub fn from_rows(labels: &[&str], rows: &[&[&str]]) -> Result<Self> {
        let carrier = Carrier::from_strs(labels)?;
        let n = carrier.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("rows do not form an n x n table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            for cell in row.iter() {
                let parts: Vec<&str> = cell.split_whitespace().collect();
                table.push(carrier.subset_of(&parts)?);
            }
        }
        Self::new(carrier, table, None)
    }

    fn is_identity(&self, e: usize) -> bool {
        (0..self.size()).all(|x| {
            self.op(e, x) == Subset::singleton(x) && self.op(x, e) == Subset::singleton(x)
        })
    }

    fn detect_inverse(&self) -> Option<Vec<usize>> {
        let e = self.identity?;
        let n = self.size();
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let mut found = None;
            for y in 0..n {
                if self.op(x, y).contains(e) && self.op(y, x).contains(e) {
                    if found.is_some() {
                        return None;
                    }
                    found = Some(y);
                }
            }
            inv.push(found?);
        }
        Some(inv)
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn label(&self, i: usize) -> &str {
        self.carrier.label(i)
    }

    pub fn labels(&self) -> &[String] {
        self.carrier.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.carrier.index_of(label)
    }

    /// `x ⋆ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> Subset {
        self.table[x * self.size() + y]
    }

    /// The row-major table.
    pub fn table(&self) -> &[Subset] {
        &self.table
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_unital(&self) -> bool {
        self.identity.is_some()
    }

    /// The inverse of `x`, when inverses are unique.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inverse.as_ref().map(|v| v[x])
    }

    pub fn inverse_map(&self) -> Option<&[usize]> {
        self.inverse.as_deref()
    }

    /// `X ⋆ Y = ⋃ x ⋆ y`; empty if either side is empty.
    pub fn product(&self, xs: Subset, ys: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for x in xs.iter() {
            for y in ys.iter() {
                out |= self.op(x, y);
            }
        }
        out
    }

    /// `x ⊙ y`, i.e. `x ⋆ y ≠ ∅`.
    pub fn defined(&self, x: usize, y: usize) -> bool {
        !self.op(x, y).is_empty()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    /// The table transposed: `x ⋆_op y = y ⋆ x`.
    pub fn opposite(&self) -> Hypermagma {
        let n = self.size();
        let mut table = vec![Subset::EMPTY; n * n];
        for i in 0..n {
            for j in 0..n {
                table[j * n + i] = self.op(i, j);
            }
        }
        Hypermagma {
            carrier: self.carrier.clone(),
            table,
            identity: self.identity,
            inverse: self.inverse.clone(),
        }
    }

    /// The same structure with new labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Hypermagma> {
        if labels.len() != self.size() {
            return Err(Error::DimensionMismatch("relabel needs one label per element".into()));
        }
        Ok(Hypermagma {
            carrier: Carrier::new(labels)?,
            table: self.table.clone(),
            identity: self.identity,
            inverse: self.inverse.clone(),
        })
    }

    /// An isomorphic copy in which old element `i` sits at index `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Hypermagma> {
        let n = self.size();
        let mut seen = Subset::EMPTY;
        for &p in perm {
            seen.insert(p);
        }
        if perm.len() != n || seen != self.full() {
            return Err(Error::DimensionMismatch("not a permutation of the carrier".into()));
        }
        let mut labels = vec![String::new(); n];
        for i in 0..n {
            labels[perm[i]] = self.label(i).to_string();
        }
        let mut table = vec![Subset::EMPTY; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = self.op(i, j).map(perm);
            }
        }
        Hypermagma::new(Carrier::new(labels)?, table, None)
    }

    /// Restricts the hyperoperation to `L`: `x ⋆_L y = (x ⋆ y) ∩ L`.
    ///
    /// Returns the sub-object and the indices of its elements in `self`.
    /// With `unital` set, `L` must contain the identity.
    pub fn weak_sub(&self, l: Subset, unital: bool) -> Result<(Hypermagma, Vec<usize>)> {
        if unital {
            match self.identity {
                Some(e) if l.contains(e) => {}
                _ => return Err(Error::IdentityMissing),
            }
        }
        let elems: Vec<usize> = (l & self.full()).to_vec();
        let mut pos = vec![usize::MAX; self.size()];
        for (k, &x) in elems.iter().enumerate() {
            pos[x] = k;
        }
        let labels = elems.iter().map(|&x| self.label(x).to_string()).collect();
        let mut table = Vec::with_capacity(elems.len() * elems.len());
        for &x in &elems {
            for &y in &elems {
                table.push((self.op(x, y) & l).iter().map(|z| pos[z]).collect());
            }
        }
        let identity = if unital { self.identity.map(|e| pos[e]) } else { None };
        Ok((Hypermagma::new(Carrier::new(labels)?, table, identity)?, elems))
    }

    /// Whether `x, y ∈ K` implies `x ⋆ y ⊆ K`.
    pub fn is_strict_sub(&self, k: Subset) -> bool {
        k.iter().all(|x| k.iter().all(|y| self.op(x, y).is_subset(&k)))
    }

    /// Whether `(x ⋆ K ∪ K ⋆ x) ∩ K ≠ ∅` implies `x ∈ K`.
    pub fn is_absorptive(&self, k: Subset) -> bool {
        (0..self.size())
            .filter(|&x| !k.contains(x))
            .all(|x| !self.touches(x, k))
    }

    fn touches(&self, x: usize, k: Subset) -> bool {
        k.iter()
            .any(|y| self.op(x, y).intersects(&k) || self.op(y, x).intersects(&k))
    }

    /// Least `K ⊇ S` closed under products, also containing the identity
    /// and closed under inverses when these exist.
    pub fn strict_sub_closure(&self, s: Subset) -> Subset {
        let mut k = s & self.full();
        if let Some(e) = self.identity {
            k.insert(e);
        }
        loop {
            let mut next = k;
            for x in k.iter() {
                if let Some(inv) = self.inverse(x) {
                    next.insert(inv);
                }
                for y in k.iter() {
                    next |= self.op(x, y);
                }
            }
            if next == k {
                return k;
            }
            k = next;
        }
    }

    /// Least set containing `S` that is both a strict sub (in the sense of
    /// [`strict_sub_closure`](Self::strict_sub_closure)) and absorptive.
    pub fn absorptive_closure(&self, s: Subset) -> Subset {
        let mut k = s & self.full();
        loop {
            let mut next = self.strict_sub_closure(k);
            for x in 0..self.size() {
                if !next.contains(x) && self.touches(x, next) {
                    next.insert(x);
                }
            }
            if next == k {
                return k;
            }
            k = next;
        }
    }
}

impl fmt::Debug for Hypermagma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Hypermagma {:?}", self.carrier)?;
        for i in 0..self.size() {
            let row: Vec<String> = (0..self.size())
                .map(|j| self.carrier.show(self.op(i, j)))
                .collect();
            writeln!(f, "  {}: {}", self.label(i), row.join(" "))?;
        }
        Ok(())
    }
}

/// Per-element data preserved by isomorphisms, used to prune the search.
fn signature(m: &Hypermagma, x: usize) -> (bool, bool, Vec<usize>, Vec<usize>, usize, bool) {
    let n = m.size();
    let mut rows: Vec<usize> = (0..n).map(|y| m.op(x, y).len()).collect();
    let mut cols: Vec<usize> = (0..n).map(|y| m.op(y, x).len()).collect();
    rows.sort_unstable();
    cols.sort_unstable();
    (
        m.identity == Some(x),
        m.inverse(x) == Some(x),
        rows,
        cols,
        m.op(x, x).len(),
        m.op(x, x).contains(x),
    )
}

/// Searches for a bijection `f` with `z ∈ x ⋆ y ⟺ f(z) ∈ f(x) ⋆ f(y)`.
///
/// Returns the lexicographically first such map, as an index array.
pub fn find_isomorphism(m: &Hypermagma, n: &Hypermagma) -> Option<Vec<usize>> {
    let size = m.size();
    if size != n.size() || m.is_unital() != n.is_unital() {
        return None;
    }
    let sm: Vec<_> = (0..size).map(|x| signature(m, x)).collect();
    let sn: Vec<_> = (0..size).map(|x| signature(n, x)).collect();
    let mut a = sm.clone();
    let mut b = sn.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..size)
        .map(|x| (0..size).filter(|&y| sm[x] == sn[y]).collect())
        .collect();
    let mut map = vec![usize::MAX; size];
    let mut used = vec![false; size];
    if iso_step(m, n, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn iso_consistent(m: &Hypermagma, n: &Hypermagma, k: usize, map: &[usize]) -> bool {
    for i in 0..=k {
        for j in 0..=k {
            let (mi, nj) = (m.op(i, j), n.op(map[i], map[j]));
            if mi.len() != nj.len() {
                return false;
            }
            let lo = if i == k || j == k { 0 } else { k };
            for z in lo..=k {
                if mi.contains(z) != nj.contains(map[z]) {
                    return false;
                }
            }
        }
    }
    true
}

fn iso_step(
    m: &Hypermagma,
    n: &Hypermagma,
    candidates: &[Vec<usize>],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == m.size() {
        return true;
    }
    for &y in &candidates[k] {
        if used[y] {
            continue;
        }
        map[k] = y;
        used[y] = true;
        if iso_consistent(m, n, k, map) && iso_step(m, n, candidates, k + 1, map, used) {
            return true;
        }
        used[y] = false;
    }
    map[k] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn krasner() -> Hypermagma {
        Hypermagma::from_rows(&["0", "1"], &[&["0", "1"], &["1", "0 1"]]).unwrap()
    }

    #[test]
    fn detects_identity_and_inverse() {
        let k = krasner();
        assert_eq!(k.identity(), Some(0));
        assert_eq!(k.inverse_map(), Some(&[0, 1][..]));
        let c = Carrier::from_strs(&["a", "b"]).unwrap();
        let free = Hypermagma::from_fn(c, |_, _| Subset::EMPTY).unwrap();
        assert_eq!(free.identity(), None);
        assert_eq!(free.inverse_map(), None);
    }

    #[test]
    fn rejects_bad_input() {
        let c = Carrier::from_strs(&["0", "1"]).unwrap();
        let t = vec![Subset::singleton(0); 4];
        assert!(matches!(
            Hypermagma::new(c.clone(), t[..3].to_vec(), None),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            Hypermagma::new(c, t, Some(1)),
            Err(Error::IdentityAxiomViolated(_))
        ));
        assert!(matches!(
            Carrier::from_strs(&["a", "a"]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn terminal_object() {
        let t = Hypermagma::from_rows(&["e"], &[&["e"]]).unwrap();
        assert_eq!(t.identity(), Some(0));
        assert_eq!(t.inverse(0), Some(0));
    }

    #[test]
    fn subset_products() {
        let k = krasner();
        let one = Subset::singleton(1);
        assert_eq!(k.product(one, one), k.full());
        assert_eq!(k.product(one, Subset::EMPTY), Subset::EMPTY);
        assert_eq!(k.product(Subset::EMPTY, k.full()), Subset::EMPTY);
    }

    #[test]
    fn weak_sub_of_non_identity_point() {
        let k = krasner();
        let (s, elems) = k.weak_sub(Subset::singleton(1), false).unwrap();
        assert_eq!(elems, vec![1]);
        assert_eq!(s.op(0, 0), Subset::singleton(0));
        assert!(matches!(
            k.weak_sub(Subset::singleton(1), true),
            Err(Error::IdentityMissing)
        ));
    }

    #[test]
    fn closures() {
        let k = krasner();
        assert_eq!(k.strict_sub_closure(Subset::EMPTY), Subset::singleton(0));
        assert_eq!(k.strict_sub_closure(Subset::singleton(1)), k.full());
        assert_eq!(k.absorptive_closure(Subset::singleton(0)), Subset::singleton(0));
        assert!(k.is_absorptive(Subset::singleton(0)));
        assert!(k.is_strict_sub(Subset::singleton(0)));
    }

    #[test]
    fn opposite_is_involutive() {
        let m = Hypermagma::from_rows(&["a", "b"], &[&["b", ""], &["a b", "a"]]).unwrap();
        assert_eq!(m.opposite().opposite(), m);
        assert_eq!(m.opposite().op(1, 0), m.op(0, 1));
    }

    #[test]
    fn isomorphism_search() {
        let m = Hypermagma::from_rows(
            &["a", "b", "c"],
            &[&["b", "", "c"], &["a b", "a", ""], &["", "c", "a b c"]],
        )
        .unwrap();
        let p = m.permute(&[2, 0, 1]).unwrap();
        let f = find_isomorphism(&m, &p).unwrap();
        assert_eq!(f, vec![2, 0, 1]);
        assert_eq!(find_isomorphism(&m, &m), Some(vec![0, 1, 2]));
        let other = Hypermagma::from_rows(
            &["a", "b", "c"],
            &[&["b", "", "c"], &["a b", "a", ""], &["", "c", "a b"]],
        )
        .unwrap();
        assert_eq!(find_isomorphism(&m, &other), None);
    }
}
