//! Hypergroups obtained as quotients of groups.

use crate::error::{Error, Result};
use crate::magma::{Carrier, Hypermagma};
use crate::subset::Subset;
use crate::zoo::group::FiniteGroup;

/// `G/∼` for a partition `classes` of `G` with `[a] ⋆ [b] = {[c] | c ∈ [a][b]}`.
///
/// Classes are ordered and labelled by their least representative.
pub fn group_quotient(g: &FiniteGroup, classes: &[Subset]) -> Result<Hypermagma> {
    let n = g.size();
    let mut class_of = vec![usize::MAX; n];
    let mut sorted: Vec<Subset> = classes.to_vec();
    sorted.sort_by_key(|c| c.first());
    for (k, c) in sorted.iter().enumerate() {
        for x in c.iter() {
            if x >= n || class_of[x] != usize::MAX {
                return Err(Error::DimensionMismatch("classes do not partition the group".into()));
            }
            class_of[x] = k;
        }
    }
    if class_of.contains(&usize::MAX) {
        return Err(Error::DimensionMismatch("classes do not cover the group".into()));
    }
    let labels = sorted
        .iter()
        .map(|c| g.label(c.first().expect("nonempty class")).to_string())
        .collect();
    Hypermagma::from_fn(Carrier::new(labels)?, |a, b| {
        let mut out = Subset::EMPTY;
        for x in sorted[a].iter() {
            for y in sorted[b].iter() {
                out.insert(class_of[g.op(x, y)]);
            }
        }
        out
    })
}

/// Double cosets `KaK` of a subgroup `K`; the identity is `K` itself.
pub fn double_coset_hypergroup(g: &FiniteGroup, k: Subset) -> Result<Hypermagma> {
    if !k.fits(g.size()) || !g.is_subgroup(k) {
        return Err(Error::NotASubgroup(g.carrier().show(k & Subset::full(g.size()))));
    }
    let mut seen = Subset::EMPTY;
    let mut classes = Vec::new();
    for a in 0..g.size() {
        if seen.contains(a) {
            continue;
        }
        let mut c = Subset::EMPTY;
        for x in k.iter() {
            for y in k.iter() {
                c.insert(g.op(g.op(x, a), y));
            }
        }
        seen |= c;
        classes.push(c);
    }
    group_quotient(g, &classes)
}

/// Conjugacy classes with the induced class products.
pub fn conjugacy_hypergroup(g: &FiniteGroup) -> Result<Hypermagma> {
    let mut seen = Subset::EMPTY;
    let mut classes = Vec::new();
    for a in 0..g.size() {
        if seen.contains(a) {
            continue;
        }
        let c: Subset = (0..g.size()).map(|x| g.op(g.op(x, a), g.inv(x))).collect();
        seen |= c;
        classes.push(c);
    }
    group_quotient(g, &classes)
}

/// Orbits of an abelian group under a finite group of automorphisms,
/// given as the full list of its elements.
pub fn orbit_hypergroup(a: &FiniteGroup, action: &[Vec<usize>]) -> Result<Hypermagma> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = a.size();
    if action.is_empty() {
        return Err(Error::NotAnAutomorphismGroup("empty action".into()));
    }
    for f in action {
        if !a.is_automorphism(f) {
            return Err(Error::NotAnAutomorphismGroup(format!("{f:?} is not an automorphism")));
        }
    }
    let id: Vec<usize> = (0..n).collect();
    if !action.contains(&id) {
        return Err(Error::NotAnAutomorphismGroup("missing the identity".into()));
    }
    for f in action {
        for g in action {
            let fg: Vec<usize> = (0..n).map(|x| f[g[x]]).collect();
            if !action.contains(&fg) {
                return Err(Error::NotAnAutomorphismGroup("not closed under composition".into()));
            }
        }
    }
    let mut seen = Subset::EMPTY;
    let mut classes = Vec::new();
    for x in 0..n {
        if seen.contains(x) {
            continue;
        }
        let c: Subset = action.iter().map(|f| f[x]).collect();
        seen |= c;
        classes.push(c);
    }
    group_quotient(a, &classes)
}

/// `{id, x ↦ −x}` on an abelian group.
pub fn sign_action(a: &FiniteGroup) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..a.size()).collect();
    let neg: Vec<usize> = (0..a.size()).map(|x| a.inv(x)).collect();
    if id == neg {
        vec![id]
    } else {
        vec![id, neg]
    }
}
