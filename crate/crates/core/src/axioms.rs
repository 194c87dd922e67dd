//! Axiom checks and classification in the hierarchy of hyperstructures.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::magma::Hypermagma;
use crate::subset::Subset;

/// The most specific kind of structure a hypermagma belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Classification {
    Hypermagma,
    UnitalHypermagma,
    Hypermonoid,
    Mosaic,
    CommutativeMosaic,
    Hypergroup,
    CanonicalHypergroup,
    Monoid,
    Group,
    AbelianGroup,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Hypermagma => "hypermagma",
            Classification::UnitalHypermagma => "unital hypermagma",
            Classification::Hypermonoid => "hypermonoid",
            Classification::Mosaic => "mosaic",
            Classification::CommutativeMosaic => "commutative mosaic",
            Classification::Hypergroup => "hypergroup",
            Classification::CanonicalHypergroup => "canonical hypergroup",
            Classification::Monoid => "monoid",
            Classification::Group => "group",
            Classification::AbelianGroup => "abelian group",
        }
    }

    /// Unital and reversible.
    pub fn is_mosaic(self) -> bool {
        use Classification::*;
        matches!(
            self,
            Mosaic | CommutativeMosaic | Hypergroup | CanonicalHypergroup | Group | AbelianGroup
        )
    }

    pub fn is_commutative_mosaic(self) -> bool {
        use Classification::*;
        matches!(self, CommutativeMosaic | CanonicalHypergroup | AbelianGroup)
    }

    pub fn is_hypergroup(self) -> bool {
        use Classification::*;
        matches!(self, Hypergroup | CanonicalHypergroup | Group | AbelianGroup)
    }

    pub fn is_canonical_hypergroup(self) -> bool {
        matches!(self, Classification::CanonicalHypergroup | Classification::AbelianGroup)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    Total,
    Commutative,
    Associative,
    SingleValued,
    UniqueInverses,
    Reversible,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Total => "total",
            Axiom::Commutative => "commutative",
            Axiom::Associative => "associative",
            Axiom::SingleValued => "single-valued",
            Axiom::UniqueInverses => "unique inverses",
            Axiom::Reversible => "reversible",
        }
    }
}

/// A counterexample to one axiom.
///
/// The tuple is the lexicographically least violating tuple: `(x, y)` for
/// totality, commutativity and single-valuedness, `(x, y, z)` for
/// associativity and for reversibility (with `x ∈ y ⋆ z`), and `(x)` for an
/// element without exactly one inverse. An empty tuple means the axiom
/// could not be attempted: an empty carrier for totality, no identity for
/// inverses, non-unique inverses for reversibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: Axiom,
    pub tuple: Vec<usize>,
}

impl Witness {
    /// Re-derives the violation from the table.
    pub fn rechecks(&self, m: &Hypermagma) -> bool {
        let t = &self.tuple;
        match (self.axiom, t.len()) {
            (Axiom::Total, 0) => m.is_empty(),
            (Axiom::Total, 2) => m.op(t[0], t[1]).is_empty(),
            (Axiom::Commutative, 2) => m.op(t[0], t[1]) != m.op(t[1], t[0]),
            (Axiom::SingleValued, 2) => m.op(t[0], t[1]).len() != 1,
            (Axiom::Associative, 3) => {
                let (x, y, z) = (t[0], t[1], t[2]);
                let sx = Subset::singleton(x);
                let sz = Subset::singleton(z);
                m.product(m.op(x, y), sz) != m.product(sx, m.op(y, z))
            }
            (Axiom::UniqueInverses, 0) => m.identity().is_none(),
            (Axiom::UniqueInverses, 1) => inverses_of(m, t[0]).len() != 1,
            (Axiom::Reversible, 0) => m.inverse_map().is_none(),
            (Axiom::Reversible, 3) => match m.inverse_map() {
                Some(inv) => {
                    let (x, y, z) = (t[0], t[1], t[2]);
                    m.op(y, z).contains(x)
                        && !(m.op(x, inv[z]).contains(y) && m.op(inv[y], x).contains(z))
                }
                None => false,
            },
            _ => false,
        }
    }

    pub fn render(&self, m: &Hypermagma) -> String {
        let parts: Vec<&str> = self.tuple.iter().map(|&i| m.label(i)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Result of [`analyze`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub size: usize,
    pub has_identity: Option<usize>,
    pub weak_identities: Vec<usize>,
    pub total: bool,
    pub commutative: bool,
    pub associative: bool,
    pub single_valued: bool,
    pub unique_inverses: bool,
    pub reversible: bool,
    pub classification: Classification,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    pub fn witness(&self, axiom: Axiom) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.axiom == axiom)
    }

    /// Short description; the empty hypermagma is reported as initial.
    pub fn description(&self) -> &'static str {
        if self.size == 0 {
            "initial hypermagma"
        } else {
            self.classification.name()
        }
    }
}

/// The inverses of `x`: all `y` with `e ∈ x ⋆ y ∩ y ⋆ x`.
pub fn inverses_of(m: &Hypermagma, x: usize) -> Subset {
    match m.identity() {
        Some(e) => (0..m.size())
            .filter(|&y| m.op(x, y).contains(e) && m.op(y, x).contains(e))
            .collect(),
        None => Subset::EMPTY,
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

pub fn totality_witness(m: &Hypermagma) -> Option<Vec<usize>> {
    if m.is_empty() {
        return Some(vec![]);
    }
    pairs(m.size())
        .find(|&(x, y)| m.op(x, y).is_empty())
        .map(|(x, y)| vec![x, y])
}

pub fn commutativity_witness(m: &Hypermagma) -> Option<Vec<usize>> {
    pairs(m.size())
        .find(|&(x, y)| m.op(x, y) != m.op(y, x))
        .map(|(x, y)| vec![x, y])
}

pub fn single_valued_witness(m: &Hypermagma) -> Option<Vec<usize>> {
    pairs(m.size())
        .find(|&(x, y)| m.op(x, y).len() != 1)
        .map(|(x, y)| vec![x, y])
}

pub fn associativity_witness(m: &Hypermagma) -> Option<Vec<usize>> {
    let n = m.size();
    for x in 0..n {
        for y in 0..n {
            let xy = m.op(x, y);
            for z in 0..n {
                let left = m.product(xy, Subset::singleton(z));
                let right = m.product(Subset::singleton(x), m.op(y, z));
                if left != right {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

pub fn inverse_witness(m: &Hypermagma) -> Option<Vec<usize>> {
    if m.identity().is_none() {
        return Some(vec![]);
    }
    (0..m.size())
        .find(|&x| inverses_of(m, x).len() != 1)
        .map(|x| vec![x])
}

pub fn reversibility_witness(m: &Hypermagma) -> Option<Vec<usize>> {
    let Some(inv) = m.inverse_map() else {
        return Some(vec![]);
    };
    let n = m.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m.op(y, z).contains(x)
                    && !(m.op(x, inv[z]).contains(y) && m.op(inv[y], x).contains(z))
                {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// All `e` with `x ∈ e ⋆ x ∩ x ⋆ e` for every `x`.
pub fn weak_identity_set(m: &Hypermagma) -> Subset {
    (0..m.size())
        .filter(|&e| (0..m.size()).all(|x| m.op(e, x).contains(x) && m.op(x, e).contains(x)))
        .collect()
}

fn classify(r: &AxiomReport) -> Classification {
    use Classification::*;
    if r.has_identity.is_none() {
        return Hypermagma;
    }
    if r.single_valued && r.associative {
        // In a monoid, e ∈ xy ∩ yx says y is a two-sided inverse.
        return match (r.unique_inverses, r.commutative) {
            (true, true) => AbelianGroup,
            (true, false) => Group,
            _ => Monoid,
        };
    }
    if r.reversible {
        return match (r.associative && r.total, r.commutative) {
            (true, true) => CanonicalHypergroup,
            (true, false) => Hypergroup,
            (false, true) => CommutativeMosaic,
            (false, false) => Mosaic,
        };
    }
    if r.associative {
        Hypermonoid
    } else {
        UnitalHypermagma
    }
}

/// Decides every axiom and classifies `m`.
pub fn analyze(m: &Hypermagma) -> AxiomReport {
    let mut witnesses = Vec::new();
    let mut flag = |axiom: Axiom, w: Option<Vec<usize>>| match w {
        Some(tuple) => {
            witnesses.push(Witness { axiom, tuple });
            false
        }
        None => true,
    };
    let total = flag(Axiom::Total, totality_witness(m));
    let commutative = flag(Axiom::Commutative, commutativity_witness(m));
    let associative = flag(Axiom::Associative, associativity_witness(m));
    let single_valued = flag(Axiom::SingleValued, single_valued_witness(m));
    let unique_inverses = flag(Axiom::UniqueInverses, inverse_witness(m));
    // Only attempted once the involution is known.
    let reversible = flag(Axiom::Reversible, reversibility_witness(m));
    let mut report = AxiomReport {
        size: m.size(),
        has_identity: m.identity(),
        weak_identities: weak_identity_set(m).to_vec(),
        total,
        commutative,
        associative,
        single_valued,
        unique_inverses,
        reversible,
        classification: Classification::Hypermagma,
        witnesses,
    };
    report.classification = classify(&report);
    report
}

/// Consistency check for mosaics: an associative mosaic is total, so a
/// mosaic is a hypergroup exactly when it is associative. Returns whether
/// `associative ⟹ total` holds. The converse fails in general (the Fano
/// mosaic is total but not associative).
pub fn check_total_iff_associative_for_mosaics(m: &Hypermagma) -> Result<bool> {
    let r = analyze(m);
    if !r.classification.is_mosaic() {
        return Err(Error::NotAMosaic(format!("classified as {}", r.classification)));
    }
    Ok(!r.associative || r.total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn krasner() -> Hypermagma {
        Hypermagma::from_rows(&["0", "1"], &[&["0", "1"], &["1", "0 1"]]).unwrap()
    }

    #[test]
    fn krasner_is_canonical() {
        let r = analyze(&krasner());
        assert_eq!(r.classification, Classification::CanonicalHypergroup);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witness(Axiom::SingleValued).unwrap().tuple, vec![1, 1]);
        assert_eq!(r.weak_identities, vec![0]);
    }

    #[test]
    fn z2_is_abelian_group() {
        let z2 = Hypermagma::from_rows(&["0", "1"], &[&["0", "1"], &["1", "0"]]).unwrap();
        assert_eq!(analyze(&z2).classification, Classification::AbelianGroup);
    }

    #[test]
    fn empty_is_initial() {
        let m = Hypermagma::from_rows(&[], &[]).unwrap();
        let r = analyze(&m);
        assert_eq!(r.description(), "initial hypermagma");
        assert!(!r.total);
        for w in &r.witnesses {
            assert!(w.rechecks(&m), "{w:?}");
        }
    }

    #[test]
    fn non_unital_and_witnesses() {
        let m = Hypermagma::from_rows(&["a", "b"], &[&["b", ""], &["a b", "a"]]).unwrap();
        let r = analyze(&m);
        assert_eq!(r.classification, Classification::Hypermagma);
        assert_eq!(r.witness(Axiom::Total).unwrap().tuple, vec![0, 1]);
        assert_eq!(r.witness(Axiom::Commutative).unwrap().tuple, vec![0, 1]);
        for w in &r.witnesses {
            assert!(w.rechecks(&m), "{w:?}");
        }
    }

    #[test]
    fn unital_non_reversible() {
        // {0,1,2} with 1+1 = 1+2 = 2+2 = everything, 0 the identity.
        let d = Hypermagma::from_rows(
            &["0", "1", "2"],
            &[&["0", "1", "2"], &["1", "0 1 2", "0 1 2"], &["2", "0 1 2", "0 1 2"]],
        )
        .unwrap();
        let r = analyze(&d);
        assert!(!r.unique_inverses);
        assert_eq!(r.classification, Classification::Hypermonoid);
        assert!(r.witness(Axiom::Reversible).unwrap().rechecks(&d));
    }

    #[test]
    fn mosaic_consistency() {
        assert_eq!(check_total_iff_associative_for_mosaics(&krasner()), Ok(true));
        let m = Hypermagma::from_rows(&["a"], &[&[""]]).unwrap();
        assert!(check_total_iff_associative_for_mosaics(&m).is_err());
    }
}
