//! Finite groups and rings with single-valued Cayley tables.

use crate::error::{Error, Result};
use crate::magma::{Carrier, Hypermagma};
use crate::subset::Subset;

/// A finite group; the group axioms are checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    carrier: Carrier,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

fn check_table(n: usize, table: &[usize], what: &str) -> Result<()> {
    if table.len() != n * n {
        return Err(Error::DimensionMismatch(format!("{what} table is not {n}x{n}")));
    }
    if table.iter().any(|&z| z >= n) {
        return Err(Error::DimensionMismatch(format!("{what} table leaves the carrier")));
    }
    Ok(())
}

fn is_associative(n: usize, t: &[usize]) -> bool {
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])))
}

fn find_identity(n: usize, t: &[usize]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| t[e * n + x] == x && t[x * n + e] == x))
}

impl FiniteGroup {
    pub fn new(carrier: Carrier, table: Vec<usize>) -> Result<Self> {
        let n = carrier.len();
        check_table(n, &table, "group")?;
        if n == 0 {
            return Err(Error::NotAGroup("empty carrier".into()));
        }
        if !is_associative(n, &table) {
            return Err(Error::NotAGroup("not associative".into()));
        }
        let identity = find_identity(n, &table).ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x * n + y] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{:?} has no inverse", carrier.label(x))))?;
            inverse.push(y);
        }
        Ok(FiniteGroup {
            carrier,
            table,
            identity,
            inverse,
        })
    }

    /// `ℤ/n` labelled `0..n-1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::new(Carrier::numbered(n)?, table)
    }

    /// `ℤ/2 × ℤ/2` with elements `0, a, b, c` and `a + b = c`.
    pub fn klein_four() -> Self {
        let table = (0..16).map(|k| (k / 4) ^ (k % 4)).collect();
        Self::new(Carrier::from_strs(&["0", "a", "b", "c"]).unwrap(), table).unwrap()
    }

    /// The symmetric group on `k` letters, elements in lexicographic order
    /// of one-line notation, composed as `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(k: usize) -> Result<Self> {
        let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
        // Lexicographic enumeration of permutations.
        loop {
            let mut p = perms.last().unwrap().clone();
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
            .collect();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let n = perms.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let c: Vec<usize> = (0..k).map(|i| perms[a][perms[b][i]]).collect();
                table[a * n + b] = index(&c);
            }
        }
        Self::new(Carrier::new(labels)?, table)
    }

    /// Dihedral group of order `2n`: rotations `r0..`, reflections `s0..`.
    pub fn dihedral(n: usize) -> Result<Self> {
        let mut labels: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
        labels.extend((0..n).map(|i| format!("s{i}")));
        let m = 2 * n;
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                let (ra, sa) = (a % n, a >= n);
                let (rb, sb) = (b % n, b >= n);
                // r^i s^e composed with r^j s^f.
                let rot = if sa { (ra + n - rb) % n } else { (ra + rb) % n };
                let refl = sa != sb;
                table[a * m + b] = rot + if refl { n } else { 0 };
            }
        }
        Self::new(Carrier::new(labels)?, table)
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let (n, m) = (self.size(), other.size());
        let labels = (0..n * m)
            .map(|k| format!("{}|{}", self.label(k / m), other.label(k % m)))
            .collect();
        let mut table = vec![0; n * m * n * m];
        for a in 0..n * m {
            for b in 0..n * m {
                table[a * n * m + b] = self.op(a / m, b / m) * m + other.op(a % m, b % m);
            }
        }
        Self::new(Carrier::new(labels)?, table)
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn label(&self, x: usize) -> &str {
        self.carrier.label(x)
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn is_subgroup(&self, s: Subset) -> bool {
        s.contains(self.identity)
            && s.iter().all(|a| s.contains(self.inv(a)) && s.iter().all(|b| s.contains(self.op(a, b))))
    }

    /// Whether `f` is a bijective homomorphism `G → G`.
    pub fn is_automorphism(&self, f: &[usize]) -> bool {
        let n = self.size();
        f.len() == n
            && f.iter().copied().collect::<Subset>() == Subset::full(n)
            && (0..n).all(|a| (0..n).all(|b| f[self.op(a, b)] == self.op(f[a], f[b])))
    }

    pub fn to_hypermagma(&self) -> Hypermagma {
        Hypermagma::from_fn(self.carrier.clone(), |a, b| Subset::singleton(self.op(a, b)))
            .expect("group table is valid")
    }
}

/// A finite ring with identity; axioms checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    carrier: Carrier,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl FiniteRing {
    pub fn new(carrier: Carrier, add: Vec<usize>, mul: Vec<usize>) -> Result<Self> {
        let n = carrier.len();
        check_table(n, &add, "addition")?;
        check_table(n, &mul, "multiplication")?;
        let group = FiniteGroup::new(carrier.clone(), add.clone())
            .map_err(|e| Error::NotARing(format!("addition: {e}")))?;
        if !group.is_abelian() {
            return Err(Error::NotARing("addition is not commutative".into()));
        }
        if !is_associative(n, &mul) {
            return Err(Error::NotARing("multiplication is not associative".into()));
        }
        let one = find_identity(n, &mul).ok_or_else(|| Error::NotARing("no multiplicative identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let bc = add[b * n + c];
                    let left = mul[a * n + bc] == add[mul[a * n + b] * n + mul[a * n + c]];
                    let right = mul[bc * n + a] == add[mul[b * n + a] * n + mul[c * n + a]];
                    if !(left && right) {
                        return Err(Error::NotARing("multiplication does not distribute".into()));
                    }
                }
            }
        }
        Ok(FiniteRing {
            zero: group.identity(),
            carrier,
            add,
            mul,
            one,
        })
    }

    /// `ℤ/n`.
    pub fn zmod(n: usize) -> Result<Self> {
        let add = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let mul = (0..n * n).map(|k| (k / n) * (k % n) % n).collect();
        Self::new(Carrier::numbered(n)?, add, mul)
    }

    /// The prime field `𝔽_p`.
    pub fn prime_field(p: usize) -> Result<Self> {
        let r = Self::zmod(p)?;
        if !r.is_field() {
            return Err(Error::NotARing(format!("{p} is not prime")));
        }
        Ok(r)
    }

    /// `𝔽₄ = 𝔽₂[w]/(w² + w + 1)` with elements `0, 1, w, w+1`.
    pub fn gf4() -> Self {
        // Index bit 0 is the constant term, bit 1 the coefficient of w.
        let mul_poly = |a: usize, b: usize| {
            let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
            // w² = w + 1.
            let c0 = (a0 & b0) ^ (a1 & b1);
            let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
            c0 | (c1 << 1)
        };
        let add = (0..16).map(|k| (k / 4) ^ (k % 4)).collect();
        let mul = (0..16).map(|k| mul_poly(k / 4, k % 4)).collect();
        Self::new(Carrier::from_strs(&["0", "1", "w", "w+1"]).unwrap(), add, mul).unwrap()
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn label(&self, x: usize) -> &str {
        self.carrier.label(x)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.size()).find(|&b| self.add(a, b) == self.zero).unwrap()
    }

    /// `a^k`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn units(&self) -> Subset {
        let n = self.size();
        (0..n)
            .filter(|&a| (0..n).any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one))
            .collect()
    }

    pub fn is_field(&self) -> bool {
        self.size() > 1 && self.units().len() == self.size() - 1 && self.is_commutative()
    }

    /// Multiplicative order of a unit.
    pub fn order(&self, a: usize) -> Option<usize> {
        let mut x = a;
        for k in 1..=self.size() {
            if x == self.one {
                return Some(k);
            }
            x = self.mul(x, a);
        }
        None
    }

    /// Least element (in carrier order) generating the unit group, if the
    /// unit group is cyclic.
    pub fn multiplicative_generator(&self) -> Option<usize> {
        let units = self.units().len();
        self.units().iter().find(|&a| self.order(a) == Some(units))
    }

    /// Nonzero multiples of `1`: the units of the prime subring when the
    /// characteristic is prime.
    pub fn prime_subfield_units(&self) -> Subset {
        let mut out = Subset::EMPTY;
        let mut x = self.one;
        while x != self.zero && !out.contains(x) {
            out.insert(x);
            x = self.add(x, self.one);
        }
        out
    }

    pub fn additive_group(&self) -> FiniteGroup {
        FiniteGroup::new(self.carrier.clone(), self.add.clone()).expect("ring addition is a group")
    }
}

/// `𝔽₉ = ℤ₃[i]/(i² + 1)`; element `a + bi` sits at index `a + 3b`.
pub fn make_gf9() -> FiniteRing {
    let label = |a: usize, b: usize| -> String {
        match (a, b) {
            (a, 0) => a.to_string(),
            (0, 1) => "i".to_string(),
            (0, b) => format!("{b}i"),
            (a, 1) => format!("{a}+i"),
            (a, b) => format!("{a}+{b}i"),
        }
    };
    let labels = (0..9).map(|k| label(k % 3, k / 3)).collect();
    let mut add = vec![0; 81];
    let mut mul = vec![0; 81];
    for x in 0..9 {
        for y in 0..9 {
            let (a, b, c, d) = (x % 3, x / 3, y % 3, y / 3);
            add[x * 9 + y] = (a + c) % 3 + 3 * ((b + d) % 3);
            // (a + bi)(c + di) = (ac - bd) + (ad + bc)i.
            let re = (a * c + 2 * b * d) % 3;
            let im = (a * d + b * c) % 3;
            mul[x * 9 + y] = re + 3 * im;
        }
    }
    FiniteRing::new(Carrier::new(labels).unwrap(), add, mul).expect("GF(9) tables are a ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_groups() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.size(), 6);
        assert_eq!(s3.label(s3.identity()), "012");
        assert!(!s3.is_abelian());
        assert_eq!(FiniteGroup::symmetric(4).unwrap().size(), 24);
    }

    #[test]
    fn dihedral_matches_s3() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.size(), 6);
        assert!(!d3.is_abelian());
        let d3h = d3.to_hypermagma();
        let s3h = FiniteGroup::symmetric(3).unwrap().to_hypermagma();
        assert!(crate::magma::find_isomorphism(&d3h, &s3h).is_some());
    }

    #[test]
    fn gf9_generator() {
        let f = make_gf9();
        assert!(f.is_field());
        let alpha = f.multiplicative_generator().unwrap();
        assert_eq!(f.label(alpha), "1+i");
        assert_eq!(f.pow(alpha, 4), f.neg(f.one()));
        assert_eq!(f.pow(alpha, 8), f.one());
        assert_eq!(f.prime_subfield_units().len(), 2);
    }

    #[test]
    fn small_fields() {
        assert!(FiniteRing::gf4().is_field());
        assert!(FiniteRing::prime_field(5).is_ok());
        assert!(FiniteRing::prime_field(7).is_ok());
        assert!(FiniteRing::prime_field(6).is_err());
        assert!(!FiniteRing::zmod(6).unwrap().is_field());
    }

    #[test]
    fn group_validation() {
        let c = Carrier::numbered(2).unwrap();
        assert!(FiniteGroup::new(c, vec![0, 0, 0, 0]).is_err());
    }
}
