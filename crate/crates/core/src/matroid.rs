//! Finite matroids given by their flats, simplification, the mosaic of a
//! pointed simple matroid, strong maps and projective checks.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::axioms::analyze;
use crate::error::{Error, Result};
use crate::hom::{enumerate_maps, search_cap, CategoryTag};
use crate::magma::{dedup_labels, Carrier, Hypermagma};
use crate::subset::Subset;

/// Largest ground set accepted as a flat list.
pub const FLATS_CAP: usize = 14;
/// Largest ground set accepted for rank or independent-set input.
pub const CONVERSION_CAP: usize = 10;

/// A finite matroid presented by its intersection-closed family of flats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    pub ground: Carrier,
    /// Sorted, without duplicates; contains the ground set.
    pub flats: Vec<Subset>,
    /// Distinguished loop of a pointed matroid.
    pub point: Option<usize>,
}

fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0u64..(1u64 << n)).map(Subset::from_bits)
}

impl Matroid {
    /// Validates intersection closure and the exchange property.
    pub fn from_flats(ground: Carrier, flats: Vec<Subset>, point: Option<usize>) -> Result<Self> {
        let n = ground.len();
        if n > FLATS_CAP {
            return Err(Error::CarrierTooLarge { size: n, limit: FLATS_CAP });
        }
        let full = Subset::full(n);
        if let Some(f) = flats.iter().find(|f| !f.is_subset(&full)) {
            return Err(Error::DimensionMismatch(format!("flat {f:?} leaves the ground set")));
        }
        let flats: Vec<Subset> = flats.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if flats.binary_search(&full).is_err() {
            return Err(Error::FlatsNotIntersectionClosed("the ground set is not a flat".into()));
        }
        for (i, a) in flats.iter().enumerate() {
            for b in &flats[i + 1..] {
                if flats.binary_search(&(*a & *b)).is_err() {
                    return Err(Error::FlatsNotIntersectionClosed(format!(
                        "{} ∩ {} is not a flat",
                        ground.show(*a),
                        ground.show(*b)
                    )));
                }
            }
        }
        let m = Matroid { ground, flats, point };
        if let Some(p) = point {
            if p >= n || !m.loops().contains(p) {
                return Err(Error::NotSimplePointed("the point is not a loop".into()));
            }
        }
        if let Some((s, x, y)) = m.exchange_witness() {
            let g = &m.ground;
            return Err(Error::ExchangeFails {
                s: s.iter().map(|i| g.label(i).to_string()).collect(),
                x: g.label(x).to_string(),
                y: g.label(y).to_string(),
            });
        }
        Ok(m)
    }

    /// Flats of a rank function: sets to which no element can be added
    /// without raising the rank.
    pub fn from_rank<F: Fn(Subset) -> usize>(ground: Carrier, rank: F, point: Option<usize>) -> Result<Self> {
        let n = ground.len();
        if n > CONVERSION_CAP {
            return Err(Error::CarrierTooLarge { size: n, limit: CONVERSION_CAP });
        }
        let flats = all_subsets(n)
            .filter(|&s| {
                let r = rank(s);
                (0..n).filter(|&x| !s.contains(x)).all(|x| rank(s | Subset::singleton(x)) > r)
            })
            .collect();
        Self::from_flats(ground, flats, point)
    }

    /// Rank is the size of a largest independent subset.
    pub fn from_independent(ground: Carrier, independent: &[Subset], point: Option<usize>) -> Result<Self> {
        let indep = independent.to_vec();
        Self::from_rank(
            ground,
            move |s| indep.iter().filter(|i| i.is_subset(&s)).map(|i| i.len()).max().unwrap_or(0),
            point,
        )
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    /// Least flat containing `s`.
    pub fn closure(&self, s: Subset) -> Subset {
        self.flats
            .iter()
            .filter(|f| s.is_subset(f))
            .fold(Subset::full(self.size()), |acc, f| acc & *f)
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.flats.binary_search(&s).is_ok()
    }

    /// `C(∅)`.
    pub fn loops(&self) -> Subset {
        self.closure(Subset::EMPTY)
    }

    /// Flats covering `C(∅)`.
    pub fn atoms(&self) -> Vec<Subset> {
        let l = self.loops();
        let above: Vec<Subset> = self.flats.iter().copied().filter(|f| *f != l).collect();
        above
            .iter()
            .copied()
            .filter(|f| !above.iter().any(|g| g != f && g.is_subset(f)))
            .collect()
    }

    /// Classes of non-loops with equal closures, each of size at least two.
    pub fn parallel_classes(&self) -> Vec<Subset> {
        let l = self.loops();
        self.atoms()
            .into_iter()
            .map(|a| a - l)
            .filter(|c| c.len() > 1)
            .collect()
    }

    /// Some flat `S` and `x, y ∉ S` with `y ∈ C(S ∪ x)` but
    /// `x ∉ C(S ∪ y)`. Checking flats suffices since `C(S ∪ x) = C(C(S) ∪ x)`.
    pub fn exchange_witness(&self) -> Option<(Subset, usize, usize)> {
        let n = self.size();
        for &s in &self.flats {
            for x in (0..n).filter(|&x| !s.contains(x)) {
                let cx = self.closure(s | Subset::singleton(x));
                for y in cx.iter().filter(|&y| y != x && !s.contains(y)) {
                    if !self.closure(s | Subset::singleton(y)).contains(x) {
                        return Some((s, x, y));
                    }
                }
            }
        }
        None
    }

    /// No loops and every point closed.
    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && (0..self.size()).all(|x| self.closure(Subset::singleton(x)).len() == 1)
    }

    /// The point is the only loop and `C(x) = {x, 0}` for every `x`.
    pub fn is_simple_pointed(&self) -> bool {
        let Some(p) = self.point else { return false };
        self.loops() == Subset::singleton(p)
            && (0..self.size())
                .filter(|&x| x != p)
                .all(|x| self.closure(Subset::singleton(x)).len() == 2)
    }

    /// Adjoins a fresh loop labelled `0` (primed if taken) at index 0.
    pub fn with_point(&self) -> Result<Matroid> {
        let mut labels = vec!["0".to_string()];
        labels.extend(self.ground.labels().iter().cloned());
        let mut labels = dedup_labels(labels.into_iter().rev().collect());
        labels.reverse();
        let shift: Vec<usize> = (1..=self.size()).collect();
        let flats = self.flats.iter().map(|f| f.map(&shift) | Subset::singleton(0)).collect();
        Matroid::from_flats(Carrier::new(labels)?, flats, Some(0))
    }

    /// The uniform matroid `U_{r,n}` on points labelled `1..n`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if n > FLATS_CAP {
            return Err(Error::CarrierTooLarge { size: n, limit: FLATS_CAP });
        }
        let ground = Carrier::new((1..=n).map(|i| i.to_string()).collect())?;
        let flats = all_subsets(n).filter(|s| s.len() < r || s.len() == n).collect();
        Matroid::from_flats(ground, flats, None)
    }

    /// The Fano plane on points `1..7`.
    pub fn fano() -> Matroid {
        const LINES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
        let ground = Carrier::new((1..=7).map(|i| i.to_string()).collect()).unwrap();
        let mut flats = vec![Subset::EMPTY, Subset::full(7)];
        flats.extend((0..7).map(Subset::singleton));
        flats.extend(LINES.iter().map(|l| l.iter().map(|p| p - 1).collect::<Subset>()));
        Matroid::from_flats(ground, flats, None).expect("the Fano plane is a matroid")
    }

    /// Every subset a flat, on points `1..n`.
    pub fn free(n: usize) -> Result<Matroid> {
        let ground = Carrier::new((1..=n).map(|i| i.to_string()).collect())?;
        if n > FLATS_CAP {
            return Err(Error::CarrierTooLarge { size: n, limit: FLATS_CAP });
        }
        Matroid::from_flats(ground, all_subsets(n).collect(), None)
    }

    /// Cycle matroid of a graph on vertices `0..vertices`; edges are
    /// labelled `e0, e1, …` in input order. A set is a flat when no outside
    /// edge joins two vertices it already connects.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        let m = edges.len();
        if m > FLATS_CAP {
            return Err(Error::CarrierTooLarge { size: m, limit: FLATS_CAP });
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::DimensionMismatch(format!("edge ({u}, {v}) leaves the vertex set")));
        }
        let ground = Carrier::new((0..m).map(|i| format!("e{i}")).collect())?;
        let flats = all_subsets(m)
            .filter(|s| {
                let mut parent: Vec<usize> = (0..vertices).collect();
                fn find(p: &mut [usize], x: usize) -> usize {
                    let mut r = x;
                    while p[r] != r {
                        r = p[r];
                    }
                    p[x] = r;
                    r
                }
                for e in s.iter() {
                    let (a, b) = (find(&mut parent, edges[e].0), find(&mut parent, edges[e].1));
                    parent[a] = b;
                }
                (0..m)
                    .filter(|&e| !s.contains(e))
                    .all(|e| find(&mut parent, edges[e].0) != find(&mut parent, edges[e].1))
            })
            .collect();
        Matroid::from_flats(ground, flats, None)
    }
}

/// A simplification with its unit map.
#[derive(Clone, Debug)]
pub struct Simplification {
    pub matroid: Matroid,
    /// Image of each original element; loops have none unless pointed.
    pub unit: Vec<Option<usize>>,
}

/// The simple matroid on the atoms of the flat lattice; with `pointed`,
/// the loops collapse to a point `0` and the unit map is a strong map.
/// Atoms are labelled by their least non-loop element.
pub fn simplify(m: &Matroid, pointed: bool) -> Result<Simplification> {
    let atoms = m.atoms();
    let loops = m.loops();
    let offset = usize::from(pointed);
    let mut labels: Vec<String> = Vec::new();
    if pointed {
        labels.push(match m.point {
            Some(p) => m.ground.label(p).to_string(),
            None => "0".to_string(),
        });
    }
    labels.extend(atoms.iter().map(|a| m.ground.label((*a - loops).first().unwrap()).to_string()));
    let mut labels = dedup_labels(labels);
    if pointed && labels[1..].contains(&labels[0]) {
        labels[0].push('\'');
    }
    let unit: Vec<Option<usize>> = (0..m.size())
        .map(|x| {
            if loops.contains(x) {
                pointed.then_some(0)
            } else {
                atoms.iter().position(|a| a.contains(x)).map(|i| i + offset)
            }
        })
        .collect();
    let flats = m
        .flats
        .iter()
        .map(|f| {
            let mut s: Subset = atoms
                .iter()
                .enumerate()
                .filter(|(_, a)| a.is_subset(f))
                .map(|(i, _)| i + offset)
                .collect();
            if pointed {
                s.insert(0);
            }
            s
        })
        .collect();
    let matroid = Matroid::from_flats(Carrier::new(labels)?, flats, pointed.then_some(0))?;
    Ok(Simplification { matroid, unit })
}

/// `x + 0 = {x}`, `x + x = {x, 0}` and `x + y = C(x, y) ∖ {x, y, 0}` for
/// distinct non-zero points.
pub fn matroid_to_mosaic(m: &Matroid) -> Result<Hypermagma> {
    if !m.is_simple_pointed() {
        return Err(Error::NotSimplePointed(
            "the matroid must be pointed with the point as its only loop and no parallel points".into(),
        ));
    }
    let z = m.point.unwrap();
    Hypermagma::from_fn(m.ground.clone(), |x, y| {
        if x == z {
            Subset::singleton(y)
        } else if y == z {
            Subset::singleton(x)
        } else if x == y {
            Subset::from_indices([x, z])
        } else {
            m.closure(Subset::from_indices([x, y])) - Subset::from_indices([x, y, z])
        }
    })
}

/// Whether `f` sends point to point and pulls every flat back to a flat.
pub fn is_strong_map(src: &Matroid, dst: &Matroid, f: &[usize]) -> bool {
    if f.len() != src.size() || f.iter().any(|&y| y >= dst.size()) {
        return false;
    }
    if let (Some(p), Some(q)) = (src.point, dst.point) {
        if f[p] != q {
            return false;
        }
    }
    dst.flats.iter().all(|g| {
        let pre: Subset = (0..src.size()).filter(|&x| g.contains(f[x])).collect();
        src.is_flat(pre)
    })
}

/// All strong maps between pointed matroids, by brute force over
/// point-preserving functions.
pub fn strong_maps(src: &Matroid, dst: &Matroid) -> Result<Vec<Vec<usize>>> {
    let (n, k) = (src.size(), dst.size());
    let total = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > search_cap() as u128 {
        return Err(Error::SearchCapExceeded(search_cap()));
    }
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    'outer: loop {
        if is_strong_map(src, dst, &f) {
            out.push(f.clone());
        }
        for i in 0..n {
            f[i] += 1;
            if f[i] < k {
                continue 'outer;
            }
            f[i] = 0;
        }
        break;
    }
    Ok(out)
}

/// Outcome of [`projective_checks`].
#[derive(Clone, Debug, Serialize)]
pub struct ProjectiveReport {
    pub projective_law: bool,
    /// Flats `(S, T)` with `C(S ∪ T) ≠ ⋃ C(x, y)`, as labels.
    pub law_witness: Option<(Vec<String>, Vec<String>)>,
    /// `C(S) = ⟨S⟩` in the mosaic for every subset `S`.
    pub closure_eq_generated: bool,
    pub closure_witness: Option<Vec<String>>,
    /// Every mosaic endomorphism is a strong map.
    pub fullness: bool,
}

/// Flats `(S, T)` of a pointed matroid violating
/// `C(S ∪ T) = ⋃ {C(x, y) | x ∈ S, y ∈ T}`.
pub fn projective_law_witness(m: &Matroid) -> Option<(Subset, Subset)> {
    let nonempty: Vec<Subset> = m.flats.iter().copied().filter(|f| !f.is_empty()).collect();
    for (i, &s) in nonempty.iter().enumerate() {
        for &t in &nonempty[i..] {
            let mut u = Subset::EMPTY;
            for x in s.iter() {
                for y in t.iter() {
                    u |= m.closure(Subset::from_indices([x, y]));
                }
            }
            if u != m.closure(s | t) {
                return Some((s, t));
            }
        }
    }
    None
}

/// Whether every morphism between the two mosaics is a strong map.
pub fn fullness(a: &Matroid, b: &Matroid) -> Result<bool> {
    let (ma, mb) = (matroid_to_mosaic(a)?, matroid_to_mosaic(b)?);
    Ok(enumerate_maps(&ma, &mb, CategoryTag::CMsc, false)?
        .iter()
        .all(|f| is_strong_map(a, b, f)))
}

/// Projective law, `C(S) = ⟨S⟩` and fullness on `M → M`.
pub fn projective_checks(m: &Matroid) -> Result<ProjectiveReport> {
    let mosaic = matroid_to_mosaic(m)?;
    let show = |s: Subset| s.iter().map(|i| m.ground.label(i).to_string()).collect::<Vec<_>>();
    let law = projective_law_witness(m);
    let n = m.size();
    let closure_witness = if n <= 16 {
        all_subsets(n).find(|&s| m.closure(s) != mosaic.strict_sub_closure(s))
    } else {
        m.flats.iter().copied().find(|&s| m.closure(s) != mosaic.strict_sub_closure(s))
    };
    Ok(ProjectiveReport {
        projective_law: law.is_none(),
        law_witness: law.map(|(s, t)| (show(s), show(t))),
        closure_eq_generated: closure_witness.is_none(),
        closure_witness: closure_witness.map(show),
        fullness: fullness(m, m)?,
    })
}

/// Associativity failure of shape `(x, x, y)` in a matroid mosaic.
pub fn xxy_associativity_witness(mosaic: &Hypermagma) -> Option<(usize, usize)> {
    let z = mosaic.identity()?;
    let n = mosaic.size();
    (0..n)
        .filter(|&x| x != z)
        .flat_map(|x| (0..n).filter(move |&y| y != z && y != x).map(move |y| (x, y)))
        .find(|&(x, y)| {
            mosaic.product(mosaic.op(x, x), Subset::singleton(y)) != mosaic.product(Subset::singleton(x), mosaic.op(x, y))
        })
}

/// Whether the mosaic satisfies the general guarantees: commutative mosaic,
/// `x = −x` and `x + y ⊆ C(x, y)`.
pub fn mosaic_invariants_hold(m: &Matroid, mosaic: &Hypermagma) -> bool {
    let r = analyze(mosaic);
    let n = m.size();
    r.classification.is_commutative_mosaic()
        && (0..n).all(|x| mosaic.inverse(x) == Some(x))
        && (0..n).all(|x| {
            (0..n).all(|y| mosaic.op(x, y).is_subset(&m.closure(Subset::from_indices([x, y]))))
        })
}

/// Wraps the mosaic in an `Arc` for morphism construction.
pub fn mosaic_arc(m: &Matroid) -> Result<Arc<Hypermagma>> {
    matroid_to_mosaic(m).map(Arc::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano_p() -> Matroid {
        Matroid::fano().with_point().unwrap()
    }

    #[test]
    fn uniform_and_fano_are_simple() {
        let u = Matroid::uniform(2, 3).unwrap();
        assert!(u.is_simple());
        assert_eq!(u.flats.len(), 5);
        let f = Matroid::fano();
        assert!(f.is_simple());
        assert_eq!(f.flats.len(), 16);
        assert_eq!(f.closure(Subset::EMPTY), Subset::EMPTY);
        assert_eq!(f.closure(Subset::from_indices([0, 1])), Subset::from_indices([0, 1, 2]));
        assert!(Matroid::free(4).unwrap().is_simple());
    }

    #[test]
    fn validation_errors() {
        let g = Carrier::from_strs(&["a", "b", "c"]).unwrap();
        let bad = vec![Subset::from_indices([0, 1]), Subset::from_indices([1, 2]), Subset::full(3)];
        assert!(matches!(
            Matroid::from_flats(g.clone(), bad, None),
            Err(Error::FlatsNotIntersectionClosed(_))
        ));
        // a ∈ C(b) = ground but b ∉ C(a) = {a}.
        let flats = vec![Subset::EMPTY, Subset::singleton(0), Subset::full(3)];
        assert!(matches!(
            Matroid::from_flats(g, flats, None),
            Err(Error::ExchangeFails { .. })
        ));
    }

    #[test]
    fn conversions_agree() {
        let u = Matroid::uniform(2, 4).unwrap();
        let g = u.ground.clone();
        let indep: Vec<Subset> = all_subsets(4).filter(|s| s.len() <= 2).collect();
        assert_eq!(Matroid::from_independent(g, &indep, None).unwrap(), u);
        // Triangle graph: cycle matroid is U_{2,3}.
        let t = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(t.flats.len(), 5);
    }

    #[test]
    fn simplification_merges_parallel_points() {
        // Graph with a doubled edge and a loop.
        let m = Matroid::graphic(3, &[(0, 1), (0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(m.loops(), Subset::singleton(3));
        assert_eq!(m.parallel_classes(), vec![Subset::from_indices([0, 1])]);
        let s = simplify(&m, false).unwrap();
        assert!(s.matroid.is_simple());
        assert_eq!(s.matroid.size(), 2);
        assert_eq!(s.unit, vec![Some(0), Some(0), Some(1), None]);
        let p = simplify(&m, true).unwrap();
        assert!(p.matroid.is_simple_pointed());
        let unit: Vec<usize> = p.unit.iter().map(|u| u.unwrap()).collect();
        let mp = Matroid { point: Some(3), ..m.clone() };
        assert!(is_strong_map(&mp, &p.matroid, &unit));
    }

    #[test]
    fn pointed_simplification_of_pointed_simple_is_identity() {
        let f = fano_p();
        let s = simplify(&f, true).unwrap();
        assert_eq!(s.matroid, f);
    }

    #[test]
    fn u23_mosaic() {
        let u = Matroid::uniform(2, 3).unwrap().with_point().unwrap();
        let m = matroid_to_mosaic(&u).unwrap();
        assert_eq!(m.op(1, 2), Subset::singleton(3));
        assert_eq!(m.op(1, 1), Subset::from_indices([0, 1]));
        assert!(mosaic_invariants_hold(&u, &m));
        assert!(matches!(
            matroid_to_mosaic(&Matroid::uniform(2, 3).unwrap()),
            Err(Error::NotSimplePointed(_))
        ));
    }

    #[test]
    fn fano_mosaic_is_not_associative() {
        let f = fano_p();
        let m = matroid_to_mosaic(&f).unwrap();
        let r = analyze(&m);
        assert!(r.classification.is_commutative_mosaic() && !r.associative);
        assert!(xxy_associativity_witness(&m).is_some());
        assert!(mosaic_invariants_hold(&f, &m));
    }

    #[test]
    fn u24_is_projective_hypergroup() {
        let u = Matroid::uniform(2, 4).unwrap().with_point().unwrap();
        let m = matroid_to_mosaic(&u).unwrap();
        assert!(analyze(&m).classification.is_hypergroup());
        let r = projective_checks(&u).unwrap();
        assert!(r.projective_law && r.closure_eq_generated && r.fullness);
    }

    #[test]
    fn u34_is_not_projective() {
        let u = Matroid::uniform(3, 4).unwrap().with_point().unwrap();
        let r = projective_checks(&u).unwrap();
        assert!(!r.projective_law);
        let (s, t) = r.law_witness.unwrap();
        assert!(!s.is_empty() && !t.is_empty());
    }

    #[test]
    fn strong_maps_are_mosaic_morphisms() {
        let a = Matroid::uniform(2, 3).unwrap().with_point().unwrap();
        let b = Matroid::uniform(2, 4).unwrap().with_point().unwrap();
        let (ma, mb) = (mosaic_arc(&a).unwrap(), mosaic_arc(&b).unwrap());
        let maps = strong_maps(&a, &b).unwrap();
        assert!(!maps.is_empty());
        for f in maps {
            let m = crate::Morphism::new(ma.clone(), mb.clone(), f).unwrap();
            assert!(m.is_morphism_in(CategoryTag::CMsc));
        }
    }
}
