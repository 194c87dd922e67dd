//! Multirings, hyperrings and Krasner quotients.

use std::sync::Arc;

use crate::axioms::analyze;
use crate::error::{Error, Result};
use crate::magma::{Carrier, Hypermagma};
use crate::subset::Subset;
use crate::zoo::group::FiniteRing;

/// A canonical hypergroup with a single-valued multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiring {
    pub additive: Arc<Hypermagma>,
    /// Row-major `n × n` product table.
    pub mul: Vec<usize>,
    pub one: usize,
    /// `a(b + c) = ab + ac` and `(b + c)a = ba + ca` everywhere.
    pub hyperring: bool,
}

/// Result of [`check_multiring`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiringFlags {
    pub multiring: bool,
    pub hyperring: bool,
}

/// Checks the multiring axioms for an additive structure and a product
/// table: canonical hypergroup, associative unital multiplication,
/// absorbing zero, and subdistributivity on both sides.
pub fn check_multiring(additive: &Hypermagma, mul: &[usize]) -> Result<MultiringFlags> {
    let n = additive.size();
    if mul.len() != n * n || mul.iter().any(|&z| z >= n) {
        return Err(Error::DimensionMismatch("multiplication table is not n x n".into()));
    }
    let r = analyze(additive);
    if !r.classification.is_canonical_hypergroup() {
        return Err(Error::AdditiveNotCanonical(format!("classified as {}", r.classification)));
    }
    let zero = additive.identity().expect("canonical hypergroups are unital");
    let m = |a: usize, b: usize| mul[a * n + b];
    if let Some(a) = (0..n).find(|&a| m(a, zero) != zero || m(zero, a) != zero) {
        return Err(Error::ZeroNotAbsorbing(format!("fails at {:?}", additive.label(a))));
    }
    let monoid = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))))
        && (0..n).any(|e| (0..n).all(|x| m(e, x) == x && m(x, e) == x));
    let mut sub = monoid;
    let mut dist = monoid;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let sum = additive.op(b, c);
                let left_in: Subset = sum.iter().map(|s| m(a, s)).collect();
                let left_out = additive.op(m(a, b), m(a, c));
                let right_in: Subset = sum.iter().map(|s| m(s, a)).collect();
                let right_out = additive.op(m(b, a), m(c, a));
                sub &= left_in.is_subset(&left_out) && right_in.is_subset(&right_out);
                dist &= left_in == left_out && right_in == right_out;
            }
        }
    }
    Ok(MultiringFlags {
        multiring: sub,
        hyperring: sub && dist,
    })
}

impl Multiring {
    pub fn new(additive: Arc<Hypermagma>, mul: Vec<usize>) -> Result<Self> {
        let flags = check_multiring(&additive, &mul)?;
        if !flags.multiring {
            return Err(Error::NotMultiring("multiplication is not a subdistributive monoid".into()));
        }
        let n = additive.size();
        let one = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] == x && mul[x * n + e] == x))
            .expect("checked monoid");
        Ok(Multiring {
            additive,
            mul,
            one,
            hyperring: flags.hyperring,
        })
    }

    pub fn size(&self) -> usize {
        self.additive.size()
    }

    pub fn zero(&self) -> usize {
        self.additive.identity().unwrap()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    pub fn label(&self, a: usize) -> &str {
        self.additive.label(a)
    }

    /// A ring viewed as a multiring with singleton sums.
    pub fn from_ring(r: &FiniteRing) -> Result<Self> {
        let n = r.size();
        let add = Hypermagma::from_fn(r.carrier().clone(), |a, b| Subset::singleton(r.add(a, b)))?;
        let mul = (0..n * n).map(|k| r.mul(k / n, k % n)).collect();
        Self::new(Arc::new(add), mul)
    }
}

/// The Krasner hyperfield `𝐊 = {0, 1}` with `1 + 1 = {0, 1}`.
pub fn krasner_hyperfield() -> Multiring {
    let add = Hypermagma::from_rows(&["0", "1"], &[&["0", "1"], &["1", "0 1"]]).unwrap();
    Multiring::new(Arc::new(add), vec![0, 0, 0, 1]).unwrap()
}

/// `R/G` for a subgroup `G` of the units of a commutative ring: classes
/// `xG` with `[f] + [g] = {[h] | h ∈ fG + gG}` and `[f][g] = [fg]`.
/// Classes are labelled by their least representative.
pub fn krasner_quotient(r: &FiniteRing, g: Subset) -> Result<Multiring> {
    let n = r.size();
    if !r.is_commutative() {
        return Err(Error::NotUnitSubgroup("ring is not commutative".into()));
    }
    let units = r.units();
    if !g.contains(r.one()) || !g.is_subset(&units) || !g.fits(n) {
        return Err(Error::NotUnitSubgroup("not a set of units containing 1".into()));
    }
    if g.iter().any(|a| g.iter().any(|b| !g.contains(r.mul(a, b)))) {
        return Err(Error::NotUnitSubgroup("not closed under multiplication".into()));
    }
    let orbit = |x: usize| -> Subset { g.iter().map(|u| r.mul(x, u)).collect() };
    let mut class = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if class[x] == usize::MAX {
            for y in orbit(x).iter() {
                class[y] = reps.len();
            }
            reps.push(x);
        }
    }
    let k = reps.len();
    let labels: Vec<String> = reps.iter().map(|&x| r.label(x).to_string()).collect();
    let add = Hypermagma::from_fn(Carrier::new(labels)?, |a, b| {
        let mut out = Subset::EMPTY;
        for x in orbit(reps[a]).iter() {
            for y in orbit(reps[b]).iter() {
                out.insert(class[r.add(x, y)]);
            }
        }
        out
    })?;
    let mul = (0..k * k).map(|i| class[r.mul(reps[i / k], reps[i % k])]).collect();
    Multiring::new(Arc::new(add), mul)
}
