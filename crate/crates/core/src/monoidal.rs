//! The tensor products `⊡`, `⩕`, `⊠`, internal homs, bimorphisms, the
//! Krasner classifier and monoid objects.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::axioms::analyze;
use crate::error::{Error, Result};
use crate::hom::{enumerate_maps, CategoryTag, Morphism};
use crate::magma::{Carrier, Hypermagma};
use crate::subset::{Subset, MAX_CARRIER};
use crate::univ::{coequalizer, unitize, QuotientMap};
use crate::zoo::multiring::{check_multiring, Multiring};

/// Which of the three products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorOp {
    /// `⊡` on `HMag`, unit `1_∅`.
    Boxdot,
    /// `⩕` on `uHMag`.
    Wedge,
    /// `⊠` on `cMsc`, unit `𝐅`.
    Boxtimes,
}

impl TensorOp {
    pub const ALL: [TensorOp; 3] = [TensorOp::Boxdot, TensorOp::Wedge, TensorOp::Boxtimes];

    pub fn name(self) -> &'static str {
        match self {
            TensorOp::Boxdot => "boxdot",
            TensorOp::Wedge => "wedge",
            TensorOp::Boxtimes => "boxtimes",
        }
    }

    /// The category in which the product represents bimorphisms.
    pub fn tag(self) -> CategoryTag {
        match self {
            TensorOp::Boxdot => CategoryTag::HMag,
            TensorOp::Wedge => CategoryTag::UHMag,
            TensorOp::Boxtimes => CategoryTag::CMsc,
        }
    }

    /// The monoidal unit. For `⩕` this is `1_∅` with a unit adjoined: the
    /// terminal object collapses `1 ⩕ M` to a point.
    pub fn unit(self) -> Hypermagma {
        match self {
            TensorOp::Boxdot => crate::univ::empty_square_point(),
            TensorOp::Wedge => crate::univ::free(CategoryTag::UHMag, &["1"]).expect("fixed labels"),
            TensorOp::Boxtimes => crate::zoo::sign_mosaic(),
        }
    }
}

impl fmt::Display for TensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TensorOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "boxdot" => Ok(TensorOp::Boxdot),
            "wedge" => Ok(TensorOp::Wedge),
            "boxtimes" => Ok(TensorOp::Boxtimes),
            _ => Err(Error::Parse(format!("unknown tensor op {s:?}"))),
        }
    }
}

/// A map `M × N → L`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimorphism {
    pub dom1: Arc<Hypermagma>,
    pub dom2: Arc<Hypermagma>,
    pub cod: Arc<Hypermagma>,
    pub table: Vec<usize>,
}

impl Bimorphism {
    pub fn new(
        dom1: Arc<Hypermagma>,
        dom2: Arc<Hypermagma>,
        cod: Arc<Hypermagma>,
        table: Vec<usize>,
    ) -> Result<Self> {
        if table.len() != dom1.size() * dom2.size() || table.iter().any(|&z| z >= cod.size()) {
            return Err(Error::DimensionMismatch("bimorphism table does not fit".into()));
        }
        Ok(Bimorphism {
            dom1,
            dom2,
            cod,
            table,
        })
    }

    pub fn at(&self, x: usize, y: usize) -> usize {
        self.table[x * self.dom2.size() + y]
    }

    /// `B(x, −)`.
    pub fn row(&self, x: usize) -> Morphism {
        let n = self.dom2.size();
        Morphism::new(self.dom2.clone(), self.cod.clone(), self.table[x * n..(x + 1) * n].to_vec())
            .expect("validated table")
    }

    /// `B(−, y)`.
    pub fn col(&self, y: usize) -> Morphism {
        let map = (0..self.dom1.size()).map(|x| self.at(x, y)).collect();
        Morphism::new(self.dom1.clone(), self.cod.clone(), map).expect("validated table")
    }

    /// Whether every slice is a morphism of `tag`.
    pub fn is_bimorphism_in(&self, tag: CategoryTag) -> bool {
        (0..self.dom1.size()).all(|x| self.row(x).is_morphism_in(tag))
            && (0..self.dom2.size()).all(|y| self.col(y).is_morphism_in(tag))
    }

    /// `φ ∘ B`.
    pub fn then(&self, phi: &Morphism) -> Result<Bimorphism> {
        if phi.dom().as_ref() != self.cod.as_ref() {
            return Err(Error::NotParallel);
        }
        let table = self.table.iter().map(|&z| phi.apply(z)).collect();
        Bimorphism::new(self.dom1.clone(), self.dom2.clone(), phi.cod().clone(), table)
    }
}

/// `M ⊡ N` on `M × N` with the four-case hyperoperation.
pub fn boxdot(m: &Hypermagma, n: &Hypermagma) -> Result<Hypermagma> {
    let (a, b) = (m.size(), n.size());
    if a * b > MAX_CARRIER {
        return Err(Error::CarrierTooLarge {
            size: a * b,
            limit: MAX_CARRIER,
        });
    }
    let labels = (0..a * b)
        .map(|k| format!("{}|{}", m.label(k / b), n.label(k % b)))
        .collect();
    let pair = |x: usize, y: usize| x * b + y;
    Hypermagma::from_fn(Carrier::new(labels)?, |p, q| {
        let (x, y) = (p / b, p % b);
        let (x2, y2) = (q / b, q % b);
        let mut out = Subset::EMPTY;
        if x == x2 && y != y2 {
            out = n.op(y, y2).iter().map(|w| pair(x, w)).collect();
        } else if x != x2 && y == y2 {
            out = m.op(x, x2).iter().map(|w| pair(w, y)).collect();
        } else if x == x2 && y == y2 {
            out = m.op(x, x).iter().map(|w| pair(w, y)).collect();
            out |= n.op(y, y).iter().map(|w| pair(x, w)).collect();
        }
        out
    })
}

/// `M ⩕ N = (M ⊡ N)_E` with `E = M ⊡ e ∪ e ⊡ N`, as a quotient of `M ⊡ N`.
pub fn wedge_smash(m: &Hypermagma, n: &Hypermagma) -> Result<QuotientMap> {
    let (Some(em), Some(en)) = (m.identity(), n.identity()) else {
        return Err(Error::NotUnital("both factors need an identity".into()));
    };
    let b = n.size();
    let d = Arc::new(boxdot(m, n)?);
    let e: Subset = (0..m.size())
        .map(|x| x * b + en)
        .chain((0..b).map(|y| em * b + y))
        .collect();
    unitize(&d, e)
}

/// `x ↦ −x` on a commutative mosaic.
pub fn negation(m: &Arc<Hypermagma>) -> Result<Morphism> {
    let inv = m
        .inverse_map()
        .ok_or_else(|| Error::NotCommutativeMosaic("no inverse involution".into()))?
        .to_vec();
    Morphism::new(m.clone(), m.clone(), inv)
}

/// `M ⊠ N`: the `uHMag` coequalizer of `id` and `(−1) ⩕ (−1)` on `M ⩕ N`,
/// as a quotient of `M ⊡ N`.
pub fn boxtimes(m: &Hypermagma, n: &Hypermagma) -> Result<QuotientMap> {
    for (side, x) in [("left", m), ("right", n)] {
        if !analyze(x).classification.is_commutative_mosaic() {
            return Err(Error::NotCommutativeMosaic(format!("{side} factor")));
        }
    }
    let w = wedge_smash(m, n)?;
    let b = n.size();
    let (mi, ni) = (m.inverse_map().unwrap(), n.inverse_map().unwrap());
    let wm = w.cod().clone();
    let minus = (0..wm.size())
        .map(|c| {
            let p = w.blocks[c].first().expect("quotient blocks are nonempty");
            w.class_of(mi[p / b] * b + ni[p % b])
        })
        .collect();
    let minus = Morphism::new(wm.clone(), wm.clone(), minus)?;
    let id = Morphism::identity(wm);
    let q = coequalizer(&id, &minus, CategoryTag::UHMag)?;
    Ok(QuotientMap::from_morphism(w.morphism.then(&q.morphism)?))
}

/// A tensor object with its universal bimorphism.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub op: TensorOp,
    pub left: Arc<Hypermagma>,
    pub right: Arc<Hypermagma>,
    pub object: Arc<Hypermagma>,
    pub universal: Bimorphism,
    /// The map from `M ⊡ N`, for the quotient products.
    pub quotient: Option<QuotientMap>,
}

impl Tensor {
    /// The unique `φ: T → L` with `φ ∘ u = B`, if it exists.
    pub fn factor(&self, bim: &Bimorphism) -> Result<Morphism> {
        let t = self.object.size();
        let mut map = vec![usize::MAX; t];
        for (k, &c) in self.universal.table.iter().enumerate() {
            let v = bim.table[k];
            if map[c] == usize::MAX {
                map[c] = v;
            } else if map[c] != v {
                return Err(Error::NotAMorphism("bimorphism is not constant on fibres".into()));
            }
        }
        if map.contains(&usize::MAX) {
            return Err(Error::NotAMorphism("universal bimorphism is not surjective".into()));
        }
        let phi = Morphism::new(self.object.clone(), bim.cod.clone(), map)?;
        if !phi.is_morphism_in(self.op.tag()) {
            return Err(Error::NotAMorphism("induced map is not a morphism".into()));
        }
        Ok(phi)
    }
}

/// Builds `M ⊗ N` for the chosen product.
pub fn tensor(op: TensorOp, m: &Arc<Hypermagma>, n: &Arc<Hypermagma>) -> Result<Tensor> {
    let (object, table, quotient) = match op {
        TensorOp::Boxdot => {
            let d = boxdot(m, n)?;
            let t = (0..d.size()).collect();
            (Arc::new(d), t, None)
        }
        TensorOp::Wedge | TensorOp::Boxtimes => {
            let q = if op == TensorOp::Wedge { wedge_smash(m, n)? } else { boxtimes(m, n)? };
            (q.cod().clone(), q.morphism.map().to_vec(), Some(q))
        }
    };
    let universal = Bimorphism::new(m.clone(), n.clone(), object.clone(), table)?;
    Ok(Tensor {
        op,
        left: m.clone(),
        right: n.clone(),
        object,
        universal,
        quotient,
    })
}

/// The internal hom: the hom-set with `h ∈ f ⋆ g ⟺ h(x) ∈ f(x) ⋆ g(x)`.
#[derive(Clone, Debug)]
pub struct HomObject {
    pub dom: Arc<Hypermagma>,
    pub cod: Arc<Hypermagma>,
    pub tag: CategoryTag,
    pub maps: Vec<Vec<usize>>,
    pub index: HashMap<Vec<usize>, usize>,
    pub object: Arc<Hypermagma>,
}

impl HomObject {
    pub fn element(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).copied()
    }

    pub fn morphism(&self, k: usize) -> Morphism {
        Morphism::new(self.dom.clone(), self.cod.clone(), self.maps[k].clone()).expect("valid map")
    }
}

fn map_label(map: &[usize]) -> String {
    let parts: Vec<String> = map.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// `[M, N]` in the tag; elements are labelled by their index arrays.
pub fn hom_object(m: &Arc<Hypermagma>, n: &Arc<Hypermagma>, tag: CategoryTag) -> Result<HomObject> {
    let tag = tag.ambient();
    let maps = enumerate_maps(m, n, tag, false)?;
    let k = maps.len();
    if k > MAX_CARRIER {
        return Err(Error::CarrierTooLarge {
            size: k,
            limit: MAX_CARRIER,
        });
    }
    let index: HashMap<Vec<usize>, usize> =
        maps.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
    let labels = maps.iter().map(|f| map_label(f)).collect();
    let dm = m.size();
    let object = Hypermagma::from_fn(Carrier::new(labels)?, |f, g| {
        let sums: Vec<Subset> = (0..dm).map(|x| n.op(maps[f][x], maps[g][x])).collect();
        (0..k)
            .filter(|&h| (0..dm).all(|x| sums[x].contains(maps[h][x])))
            .collect()
    })?;
    Ok(HomObject {
        dom: m.clone(),
        cod: n.clone(),
        tag,
        maps,
        index,
        object: Arc::new(object),
    })
}

/// All bimorphisms `M × N → L` in the tag, ordered lexicographically by
/// table. Rows are drawn from `Hom(N, L)`; columns are pruned as soon as a
/// relation `z ∈ x ⋆ y` of `M` is fully assigned.
pub fn enumerate_bimorphisms(
    m: &Arc<Hypermagma>,
    n: &Arc<Hypermagma>,
    l: &Arc<Hypermagma>,
    tag: CategoryTag,
) -> Result<Vec<Bimorphism>> {
    let tag = tag.ambient();
    let rows = enumerate_maps(n, l, tag, false)?;
    let (a, b) = (m.size(), n.size());
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); a];
    for x in 0..a {
        for y in 0..a {
            for z in m.op(x, y).iter() {
                checks[x.max(y).max(z)].push((x, y, z));
            }
        }
    }
    let unit = if tag.is_unital() {
        match (m.identity(), l.identity()) {
            (Some(e), Some(el)) => Some((e, el)),
            _ => return Ok(Vec::new()),
        }
    } else {
        None
    };
    let cap = crate::hom::search_cap();
    let mut nodes = 0u64;
    let mut chosen: Vec<usize> = Vec::with_capacity(a);
    let mut out = Vec::new();
    fn ok_level(
        i: usize,
        chosen: &[usize],
        rows: &[Vec<usize>],
        checks: &[Vec<(usize, usize, usize)>],
        l: &Hypermagma,
        b: usize,
        unit: Option<(usize, usize)>,
    ) -> bool {
        if let Some((e, el)) = unit {
            if i == e && rows[chosen[i]].iter().any(|&v| v != el) {
                return false;
            }
        }
        checks[i].iter().all(|&(x, y, z)| {
            (0..b).all(|j| {
                l.op(rows[chosen[x]][j], rows[chosen[y]][j]).contains(rows[chosen[z]][j])
            })
        })
    }
    // Iterative DFS over row choices.
    if a == 0 {
        out.push(Bimorphism::new(m.clone(), n.clone(), l.clone(), Vec::new())?);
        return Ok(out);
    }
    let mut next = vec![0usize; a + 1];
    let mut depth = 0usize;
    loop {
        if next[depth] >= rows.len() {
            if depth == 0 {
                break;
            }
            depth -= 1;
            chosen.pop();
            continue;
        }
        nodes += 1;
        if nodes > cap {
            return Err(Error::SearchCapExceeded(cap));
        }
        let r = next[depth];
        next[depth] += 1;
        chosen.push(r);
        if !ok_level(depth, &chosen, &rows, &checks, l, b, unit) {
            chosen.pop();
            continue;
        }
        if depth + 1 == a {
            let table = chosen.iter().flat_map(|&r| rows[r].iter().copied()).collect();
            out.push(Bimorphism::new(m.clone(), n.clone(), l.clone(), table)?);
            chosen.pop();
            continue;
        }
        depth += 1;
        next[depth] = 0;
    }
    Ok(out)
}

/// `φ: M ⊗ N → L` to `x ↦ φ(x ⊗ −)` into `[N, L]`.
pub fn curry(phi: &Morphism, t: &Tensor, hom: &HomObject) -> Result<Morphism> {
    let b = t.right.size();
    let mut map = Vec::with_capacity(t.left.size());
    for x in 0..t.left.size() {
        let slice: Vec<usize> = (0..b).map(|y| phi.apply(t.universal.at(x, y))).collect();
        let k = hom
            .element(&slice)
            .ok_or_else(|| Error::NotAMorphism(format!("slice {slice:?} is not in the hom object")))?;
        map.push(k);
    }
    let out = Morphism::new(t.left.clone(), hom.object.clone(), map)?;
    if !out.is_morphism_in(t.op.tag()) {
        return Err(Error::NotAMorphism("curried map is not a morphism".into()));
    }
    Ok(out)
}

/// `ψ: M → [N, L]` to the induced `M ⊗ N → L`.
pub fn uncurry(psi: &Morphism, t: &Tensor, hom: &HomObject) -> Result<Morphism> {
    let b = t.right.size();
    let table = (0..t.left.size() * b)
        .map(|k| hom.maps[psi.apply(k / b)][k % b])
        .collect();
    let bim = Bimorphism::new(t.left.clone(), t.right.clone(), hom.cod.clone(), table)?;
    t.factor(&bim)
}

/// Why a candidate fails to represent bimorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RepresentationFailure {
    /// `|Hom(T, L)| ≠ |Bim(M, N; L)|`.
    CountMismatch {
        target: String,
        homs: usize,
        bimorphisms: usize,
    },
    /// `φ ∘ u` is not a bimorphism.
    NotBimorphism { target: String, phi: Vec<usize> },
    /// Two morphisms `T → L` restrict to the same bimorphism.
    NotInjective {
        target: String,
        phi1: Vec<usize>,
        phi2: Vec<usize>,
    },
    /// A bimorphism not of the form `φ ∘ u`.
    Missing { target: String, bimorphism: Vec<usize> },
}

impl RepresentationFailure {
    /// Re-derives the failure from scratch.
    pub fn recheck(
        &self,
        u: &Bimorphism,
        battery: &[(String, Arc<Hypermagma>)],
        tag: CategoryTag,
    ) -> Result<bool> {
        let find = |name: &str| battery.iter().find(|(n, _)| n == name).map(|(_, l)| l.clone());
        let tag = tag.ambient();
        Ok(match self {
            RepresentationFailure::CountMismatch {
                target,
                homs,
                bimorphisms,
            } => {
                let Some(l) = find(target) else { return Ok(false) };
                enumerate_maps(&u.cod, &l, tag, false)?.len() == *homs
                    && enumerate_bimorphisms(&u.dom1, &u.dom2, &l, tag)?.len() == *bimorphisms
                    && homs != bimorphisms
            }
            RepresentationFailure::NotBimorphism { target, phi } => {
                let Some(l) = find(target) else { return Ok(false) };
                let phi = Morphism::new(u.cod.clone(), l, phi.clone())?;
                phi.is_morphism_in(tag) && !u.then(&phi)?.is_bimorphism_in(tag)
            }
            RepresentationFailure::NotInjective { target, phi1, phi2 } => {
                let Some(l) = find(target) else { return Ok(false) };
                let p1 = Morphism::new(u.cod.clone(), l.clone(), phi1.clone())?;
                let p2 = Morphism::new(u.cod.clone(), l, phi2.clone())?;
                phi1 != phi2
                    && p1.is_morphism_in(tag)
                    && p2.is_morphism_in(tag)
                    && u.then(&p1)? == u.then(&p2)?
            }
            RepresentationFailure::Missing { target, bimorphism } => {
                let Some(l) = find(target) else { return Ok(false) };
                let bim = Bimorphism::new(u.dom1.clone(), u.dom2.clone(), l.clone(), bimorphism.clone())?;
                bim.is_bimorphism_in(tag)
                    && enumerate_maps(&u.cod, &l, tag, false)?.iter().all(|phi| {
                        u.table.iter().map(|&z| phi[z]).collect::<Vec<_>>() != *bimorphism
                    })
            }
        })
    }
}

/// Checks that `φ ↦ φ ∘ u` is a bijection `Hom(T, L) → Bim(M, N; L)` for
/// every `L` in the battery; returns the first failure.
pub fn represents_bimorphisms(
    u: &Bimorphism,
    battery: &[(String, Arc<Hypermagma>)],
    tag: CategoryTag,
) -> Result<Option<RepresentationFailure>> {
    let tag = tag.ambient();
    for (name, l) in battery {
        let homs = enumerate_maps(&u.cod, l, tag, false)?;
        let bims = enumerate_bimorphisms(&u.dom1, &u.dom2, l, tag)?;
        if let Some(f) = compare_representation(u, name, &homs, &bims) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// The bijection test with precomputed hom-set and bimorphisms.
pub fn compare_representation(
    u: &Bimorphism,
    target: &str,
    homs: &[Vec<usize>],
    bims: &[Bimorphism],
) -> Option<RepresentationFailure> {
    if homs.len() != bims.len() {
        return Some(RepresentationFailure::CountMismatch {
            target: target.to_string(),
            homs: homs.len(),
            bimorphisms: bims.len(),
        });
    }
    let bim_set: HashSet<&[usize]> = bims.iter().map(|b| b.table.as_slice()).collect();
    let mut seen: HashMap<Vec<usize>, &Vec<usize>> = HashMap::new();
    for phi in homs {
        let restricted: Vec<usize> = u.table.iter().map(|&z| phi[z]).collect();
        if !bim_set.contains(restricted.as_slice()) {
            return Some(RepresentationFailure::NotBimorphism {
                target: target.to_string(),
                phi: phi.clone(),
            });
        }
        if let Some(prev) = seen.insert(restricted, phi) {
            return Some(RepresentationFailure::NotInjective {
                target: target.to_string(),
                phi1: prev.clone(),
                phi2: phi.clone(),
            });
        }
    }
    // Equal counts and injectivity into the set give surjectivity; this
    // branch is reached only if the counts were computed inconsistently.
    bims.iter()
        .find(|b| !seen.contains_key(&b.table))
        .map(|b| RepresentationFailure::Missing {
            target: target.to_string(),
            bimorphism: b.table.clone(),
        })
}

/// Result of [`strict_classifier_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictClassifier {
    /// Strict submosaics in ascending order.
    pub subs: Vec<Subset>,
    /// `Msc(M, 𝐊)` as index arrays.
    pub morphisms: Vec<Vec<usize>>,
    /// The kernel map is a bijection onto `subs`.
    pub bijection: bool,
}

/// Compares strict submosaics of `M` with morphisms `M → 𝐊` via kernels.
pub fn strict_classifier_check(m: &Hypermagma) -> Result<StrictClassifier> {
    if !analyze(m).classification.is_mosaic() {
        return Err(Error::NotAMosaic("the classifier applies to mosaics".into()));
    }
    let e = m.identity().unwrap();
    let n = m.size();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    if others.len() > 24 {
        return Err(Error::CarrierTooLarge {
            size: n,
            limit: 25,
        });
    }
    let mut subs = Vec::new();
    for bits in 0u64..(1u64 << others.len()) {
        let mut k = Subset::singleton(e);
        for (i, &x) in others.iter().enumerate() {
            if bits >> i & 1 == 1 {
                k.insert(x);
            }
        }
        let inv_closed = k.iter().all(|x| m.inverse(x).is_some_and(|y| k.contains(y)));
        if inv_closed && m.is_strict_sub(k) {
            subs.push(k);
        }
    }
    subs.sort();
    let k = Arc::new(crate::zoo::krasner());
    let morphisms = enumerate_maps(m, &k, CategoryTag::Msc, false)?;
    let kernels: HashSet<Subset> = morphisms
        .iter()
        .map(|f| (0..n).filter(|&x| f[x] == 0).collect())
        .collect();
    let sub_set: HashSet<Subset> = subs.iter().copied().collect();
    let bijection = kernels.len() == morphisms.len() && kernels == sub_set;
    Ok(StrictClassifier {
        subs,
        morphisms,
        bijection,
    })
}

/// A multiring as a monoid object of `(cMsc, ⊠, 𝐅)`.
#[derive(Clone, Debug)]
pub struct MonoidObject {
    pub ring: Multiring,
    pub multiplication: Bimorphism,
    /// `𝐅 → R`, `1 ↦ 1`.
    pub unit: Morphism,
    /// Every slice `x ↦ ax` and `x ↦ xa` is strict.
    pub strict_slices: bool,
    /// The multiplication factored through `R ⊠ R`, when the product fits.
    pub factored: Option<Morphism>,
}

/// Packages a multiring as a monoid object, checking the laws pointwise.
pub fn to_monoid_object(r: &Multiring) -> Result<MonoidObject> {
    let flags = check_multiring(&r.additive, &r.mul)?;
    if !flags.multiring {
        return Err(Error::NotMultiring("subdistributivity fails".into()));
    }
    let add = r.additive.clone();
    let n = r.size();
    let mult = Bimorphism::new(add.clone(), add.clone(), add.clone(), r.mul.clone())?;
    if !mult.is_bimorphism_in(CategoryTag::CMsc) {
        return Err(Error::NotMultiring("multiplication slices are not morphisms".into()));
    }
    let assoc = (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))))
    });
    let unital = (0..n).all(|a| r.mul(r.one, a) == a && r.mul(a, r.one) == a);
    if !assoc || !unital {
        return Err(Error::NotMultiring("multiplication is not a monoid".into()));
    }
    let f = Arc::new(crate::zoo::sign_mosaic());
    let neg_one = add.inverse(r.one).unwrap();
    let unit_map = (0..f.size())
        .map(|x| match f.label(x) {
            "0" => r.zero(),
            "1" => r.one,
            _ => neg_one,
        })
        .collect();
    let unit = Morphism::new(f, add.clone(), unit_map)?;
    if !unit.is_morphism_in(CategoryTag::CMsc) {
        return Err(Error::NotMultiring("unit is not a morphism".into()));
    }
    let strict_slices = (0..n).all(|x| mult.row(x).is_strict() && mult.col(x).is_strict());
    let factored = match tensor(TensorOp::Boxtimes, &add, &add) {
        Ok(t) => Some(t.factor(&mult)?),
        Err(Error::CarrierTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(MonoidObject {
        ring: r.clone(),
        multiplication: mult,
        unit,
        strict_slices,
        factored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::find_isomorphism;
    use crate::zoo;

    fn arc(m: Hypermagma) -> Arc<Hypermagma> {
        Arc::new(m)
    }

    #[test]
    fn boxdot_diagonal() {
        let k = zoo::krasner();
        let d = boxdot(&k, &k).unwrap();
        let i = |l: &str| d.index_of(l).unwrap();
        assert_eq!(d.op(i("1|1"), i("1|1")), Subset::from_indices([i("0|1"), i("1|0"), i("1|1")]));
        assert!(d.op(i("0|1"), i("1|0")).is_empty());
    }

    #[test]
    fn wedge_of_z2() {
        let z = zoo::z2();
        let w = wedge_smash(&z, &z).unwrap();
        let c = w.cod();
        assert_eq!(c.size(), 2);
        let e = c.identity().unwrap();
        assert_eq!(c.op(1 - e, 1 - e), Subset::singleton(e));
    }

    #[test]
    fn terminal_collapses_wedge() {
        let w = wedge_smash(&crate::univ::terminal(), &zoo::klein()).unwrap();
        assert_eq!(w.cod().size(), 1);
    }

    #[test]
    fn z2_boxtimes_z2_is_z2() {
        let z = zoo::z2();
        let b = boxtimes(&z, &z).unwrap();
        assert!(find_isomorphism(b.cod(), &z).is_some());
        let k = zoo::krasner();
        let b = boxtimes(&k, &k).unwrap();
        assert!(find_isomorphism(b.cod(), &k).is_some());
    }

    #[test]
    fn units() {
        for (_, m) in zoo::battery() {
            let u = arc(TensorOp::Boxtimes.unit());
            let t = tensor(TensorOp::Boxtimes, &u, &m).unwrap();
            assert!(find_isomorphism(&t.object, &m).is_some());
            let t = tensor(TensorOp::Wedge, &arc(TensorOp::Wedge.unit()), &m).unwrap();
            assert!(find_isomorphism(&t.object, &m).is_some());
            let t = tensor(TensorOp::Boxdot, &arc(TensorOp::Boxdot.unit()), &m).unwrap();
            assert!(find_isomorphism(&t.object, &m).is_some());
        }
    }

    #[test]
    fn hom_z2_k() {
        let h = hom_object(&arc(zoo::z2()), &arc(zoo::krasner()), CategoryTag::CMsc).unwrap();
        assert_eq!(h.object.size(), 2);
        assert!(find_isomorphism(&h.object, &zoo::krasner()).is_some());
    }

    #[test]
    fn klein_bimorphisms_into_k() {
        let v = arc(zoo::klein());
        let k = arc(zoo::krasner());
        let bims = enumerate_bimorphisms(&v, &v, &k, CategoryTag::Can).unwrap();
        let ones = bims.iter().filter(|b| {
            (1..4).all(|i| (1..4).all(|j| b.at(i, j) == 1))
        });
        assert_eq!(ones.count(), 1);
        assert!(bims.iter().all(|b| b.is_bimorphism_in(CategoryTag::Can)));
    }

    #[test]
    fn curry_roundtrip() {
        let z = arc(zoo::z2());
        let k = arc(zoo::krasner());
        let t = tensor(TensorOp::Boxtimes, &z, &z).unwrap();
        let h = hom_object(&z, &k, CategoryTag::CMsc).unwrap();
        let homs = crate::hom::enumerate_morphisms(&t.object, &k, CategoryTag::CMsc, false).unwrap();
        assert_eq!(homs.len(), 2);
        for phi in homs {
            let c = curry(&phi, &t, &h).unwrap();
            assert_eq!(uncurry(&c, &t, &h).unwrap(), phi);
        }
    }

    #[test]
    fn boxdot_represents() {
        let a = arc(crate::univ::free(CategoryTag::HMag, &["a"]).unwrap());
        let t = tensor(TensorOp::Boxdot, &a, &a).unwrap();
        let battery = vec![("K".to_string(), arc(zoo::krasner()))];
        assert_eq!(represents_bimorphisms(&t.universal, &battery, CategoryTag::HMag).unwrap(), None);
    }

    #[test]
    fn classifier() {
        for m in [zoo::z2(), zoo::sign_mosaic()] {
            let s = strict_classifier_check(&m).unwrap();
            assert_eq!(s.subs.len(), 2);
            assert!(s.bijection);
        }
        let s = strict_classifier_check(&crate::univ::terminal()).unwrap();
        assert_eq!((s.subs.len(), s.morphisms.len()), (1, 1));
    }

    #[test]
    fn monoid_objects() {
        let k = to_monoid_object(&zoo::multiring::krasner_hyperfield()).unwrap();
        assert!(k.strict_slices);
        let h = to_monoid_object(&zoo::f9_over_f3()).unwrap();
        assert!(h.strict_slices && h.factored.is_some());
    }
}
