//! Morphisms, hom-set enumeration, and the representing objects that turn
//! morphism properties into lifting problems.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::magma::{Carrier, Hypermagma};
use crate::subset::Subset;

/// The categories objects and morphisms are taken in.
///
/// `HGrp` and `Can` are full subcategories of `UHMag`; for hom-sets they
/// behave like `Msc` and `CMsc`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CategoryTag {
    HMag,
    UHMag,
    Msc,
    CMsc,
    HGrp,
    Can,
}

impl CategoryTag {
    pub const FOUR: [CategoryTag; 4] = [
        CategoryTag::HMag,
        CategoryTag::UHMag,
        CategoryTag::Msc,
        CategoryTag::CMsc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CategoryTag::HMag => "hmag",
            CategoryTag::UHMag => "uhmag",
            CategoryTag::Msc => "msc",
            CategoryTag::CMsc => "cmsc",
            CategoryTag::HGrp => "hgrp",
            CategoryTag::Can => "can",
        }
    }

    /// Morphisms must preserve the identity.
    pub fn is_unital(self) -> bool {
        self != CategoryTag::HMag
    }

    /// The enclosing tag among the four with a representing object.
    pub fn ambient(self) -> CategoryTag {
        match self {
            CategoryTag::HGrp => CategoryTag::Msc,
            CategoryTag::Can => CategoryTag::CMsc,
            t => t,
        }
    }
}

impl fmt::Display for CategoryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CategoryTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "hmag" => CategoryTag::HMag,
            "uhmag" => CategoryTag::UHMag,
            "msc" => CategoryTag::Msc,
            "cmsc" => CategoryTag::CMsc,
            "hgrp" => CategoryTag::HGrp,
            "can" => CategoryTag::Can,
            _ => return Err(Error::Parse(format!("unknown category tag {s:?}"))),
        })
    }
}

/// Default node budget for a single enumeration.
pub const DEFAULT_SEARCH_CAP: u64 = 100_000_000;

static SEARCH_CAP: AtomicU64 = AtomicU64::new(0);

/// Current node budget: `HYPERKIT_SEARCH_CAP` if set, else the default.
pub fn search_cap() -> u64 {
    let cap = SEARCH_CAP.load(Ordering::Relaxed);
    if cap != 0 {
        return cap;
    }
    let cap = std::env::var("HYPERKIT_SEARCH_CAP")
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_SEARCH_CAP);
    SEARCH_CAP.store(cap, Ordering::Relaxed);
    cap
}

/// Overrides the node budget for the rest of the process.
pub fn set_search_cap(cap: u64) {
    SEARCH_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Which containments a map satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Kind {
    /// `f(x ⋆ y) ⊆ f(x) ⋆ f(y)`.
    pub colax: bool,
    /// `f(x ⋆ y) ⊇ f(x) ⋆ f(y)`.
    pub lax: bool,
    pub strict: bool,
    /// Both sides unital and `f(e) = e`.
    pub unital: bool,
    pub injective: bool,
    pub surjective: bool,
}

/// A function between carriers, together with its endpoints.
///
/// Being a (colax) morphism is a property, see [`Morphism::kind`].
#[derive(Clone)]
pub struct Morphism {
    dom: Arc<Hypermagma>,
    cod: Arc<Hypermagma>,
    map: Vec<usize>,
    kind: OnceLock<Kind>,
}

impl Morphism {
    pub fn new(dom: Arc<Hypermagma>, cod: Arc<Hypermagma>, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.size() {
            return Err(Error::DimensionMismatch(format!(
                "map has {} entries for a domain of size {}",
                map.len(),
                dom.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= cod.size()) {
            return Err(Error::DimensionMismatch(format!(
                "image index {bad} outside a codomain of size {}",
                cod.size()
            )));
        }
        Ok(Morphism {
            dom,
            cod,
            map,
            kind: OnceLock::new(),
        })
    }

    /// Builds a map from `(source label, target label)` pairs.
    pub fn from_labels(
        dom: Arc<Hypermagma>,
        cod: Arc<Hypermagma>,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut map = vec![usize::MAX; dom.size()];
        for (a, b) in pairs {
            map[dom.carrier().require(a)?] = cod.carrier().require(b)?;
        }
        if let Some(x) = map.iter().position(|&y| y == usize::MAX) {
            return Err(Error::DimensionMismatch(format!(
                "no image given for {:?}",
                dom.label(x)
            )));
        }
        Morphism::new(dom, cod, map)
    }

    pub fn identity(m: Arc<Hypermagma>) -> Self {
        let map = (0..m.size()).collect();
        Morphism::new(m.clone(), m, map).expect("identity map is valid")
    }

    pub fn dom(&self) -> &Arc<Hypermagma> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Hypermagma> {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image_of(&self, s: Subset) -> Subset {
        s.map(&self.map)
    }

    pub fn image(&self) -> Subset {
        self.map.iter().copied().collect()
    }

    pub fn preimage(&self, s: Subset) -> Subset {
        (0..self.map.len()).filter(|&x| s.contains(self.map[x])).collect()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        if !Arc::ptr_eq(&self.cod, &g.dom) && self.cod != g.dom {
            return Err(Error::DimensionMismatch("composition of non-composable maps".into()));
        }
        let map = self.map.iter().map(|&y| g.map[y]).collect();
        Morphism::new(self.dom.clone(), g.cod.clone(), map)
    }

    /// The containment flags, computed once.
    pub fn kind(&self) -> Kind {
        *self.kind.get_or_init(|| check_kind(self))
    }

    pub fn is_colax(&self) -> bool {
        self.kind().colax
    }

    pub fn is_strict(&self) -> bool {
        self.kind().strict
    }

    /// Whether this is a morphism of the given category.
    pub fn is_morphism_in(&self, tag: CategoryTag) -> bool {
        let k = self.kind();
        k.colax && (!tag.is_unital() || k.unital)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = (0..self.map.len())
            .map(|x| format!("{}->{}", self.dom.label(x), self.cod.label(self.map[x])))
            .collect();
        parts.join(" ")
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
            && (Arc::ptr_eq(&self.dom, &other.dom) || self.dom == other.dom)
            && (Arc::ptr_eq(&self.cod, &other.cod) || self.cod == other.cod)
    }
}

impl Eq for Morphism {}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism[{}]", self.render())
    }
}

/// Decides every flag of [`Kind`] over all pairs.
pub fn check_kind(f: &Morphism) -> Kind {
    let (m, n) = (f.dom.as_ref(), f.cod.as_ref());
    let mut colax = true;
    let mut lax = true;
    for x in 0..m.size() {
        for y in 0..m.size() {
            let img = f.image_of(m.op(x, y));
            let target = n.op(f.map[x], f.map[y]);
            colax &= img.is_subset(&target);
            lax &= target.is_subset(&img);
        }
    }
    let unital = match (m.identity(), n.identity()) {
        (Some(e), Some(e2)) => f.map[e] == e2,
        _ => false,
    };
    let image = f.image();
    Kind {
        colax,
        lax,
        strict: colax && lax,
        unital,
        injective: image.len() == m.size(),
        surjective: image == n.full(),
    }
}

/// Surjective with `x ⋆ y ⊆ p(p⁻¹(x) ⋆ p⁻¹(y))` for all `x, y`.
///
/// For a colax `p` this is the equation `x ⋆ y = p(p⁻¹x ⋆ p⁻¹y)`.
pub fn is_short(p: &Morphism) -> bool {
    let (m, n) = (p.dom.as_ref(), p.cod.as_ref());
    let fibres: Vec<Subset> = (0..n.size()).map(|y| p.preimage(Subset::singleton(y))).collect();
    if fibres.iter().any(|f| f.is_empty()) {
        return false;
    }
    (0..n.size()).all(|x| {
        (0..n.size()).all(|y| {
            let lifted = p.image_of(m.product(fibres[x], fibres[y]));
            n.op(x, y).is_subset(&lifted)
        })
    })
}

/// Injective with `i⁻¹(i(x) ⋆ i(y)) ⊆ x ⋆ y` for all `x, y`.
pub fn is_coshort(i: &Morphism) -> bool {
    let (m, n) = (i.dom.as_ref(), i.cod.as_ref());
    if i.image().len() != m.size() {
        return false;
    }
    (0..m.size()).all(|x| {
        (0..m.size()).all(|y| i.preimage(n.op(i.map[x], i.map[y])).is_subset(&m.op(x, y)))
    })
}

/// `f⁻¹(e)`; always absorptive.
pub fn kernel(f: &Morphism) -> Result<Subset> {
    let e = f.cod.identity().ok_or(Error::CodomainNotUnital)?;
    let k = f.preimage(Subset::singleton(e));
    debug_assert!(f.dom.is_absorptive(k) || !f.is_colax());
    Ok(k)
}

/// Depth-first enumeration of colax maps in lexicographic order.
struct MapSearch<'a> {
    dom: &'a Hypermagma,
    cod: &'a Hypermagma,
    /// `checks[k]`: pairs whose product becomes fully determined at `k`.
    checks: Vec<Vec<(usize, usize)>>,
    fixed: Option<(usize, usize)>,
    strict: bool,
    nodes: u64,
    cap: u64,
}

impl<'a> MapSearch<'a> {
    fn new(dom: &'a Hypermagma, cod: &'a Hypermagma, unital: bool, strict: bool) -> Result<Self> {
        let fixed = if unital {
            match (dom.identity(), cod.identity()) {
                (Some(e), Some(e2)) => Some((e, e2)),
                (None, _) => return Err(Error::NotUnital("domain has no identity".into())),
                (_, None) => return Err(Error::NotUnital("codomain has no identity".into())),
            }
        } else {
            None
        };
        let n = dom.size();
        let mut checks = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                let level = [Some(x), Some(y), dom.op(x, y).last()]
                    .into_iter()
                    .flatten()
                    .max()
                    .unwrap();
                checks[level].push((x, y));
            }
        }
        Ok(MapSearch {
            dom,
            cod,
            checks,
            fixed,
            strict,
            nodes: 0,
            cap: search_cap(),
        })
    }

    fn consistent(&self, k: usize, map: &[usize]) -> bool {
        self.checks[k].iter().all(|&(x, y)| {
            let img = self.dom.op(x, y).map(map);
            let target = self.cod.op(map[x], map[y]);
            if self.strict {
                img == target
            } else {
                img.is_subset(&target)
            }
        })
    }

    /// Calls `visit` on every map; stops early when it returns `false`.
    fn run<F: FnMut(&[usize]) -> bool>(&mut self, visit: &mut F) -> Result<()> {
        let n = self.dom.size();
        let mut map = vec![0usize; n];
        if n == 0 {
            visit(&map);
            return Ok(());
        }
        if self.cod.size() == 0 {
            return Ok(());
        }
        self.step(0, &mut map, visit).map(|_| ())
    }

    fn step<F: FnMut(&[usize]) -> bool>(
        &mut self,
        k: usize,
        map: &mut [usize],
        visit: &mut F,
    ) -> Result<bool> {
        let range = match self.fixed {
            Some((e, e2)) if e == k => e2..e2 + 1,
            _ => 0..self.cod.size(),
        };
        for y in range {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::SearchCapExceeded(self.cap));
            }
            map[k] = y;
            if !self.consistent(k, map) {
                continue;
            }
            if k + 1 == map.len() {
                if !visit(map) {
                    return Ok(false);
                }
            } else if !self.step(k + 1, map, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Visits every colax (or strict) map `dom → cod` in lexicographic order,
/// preserving identities when `unital` is set. `visit` returns whether to
/// continue.
pub fn for_each_map<F: FnMut(&[usize]) -> bool>(
    dom: &Hypermagma,
    cod: &Hypermagma,
    unital: bool,
    strict_only: bool,
    mut visit: F,
) -> Result<()> {
    MapSearch::new(dom, cod, unital, strict_only)?.run(&mut visit)
}

/// All morphism index arrays `dom → cod` for the tag.
pub fn enumerate_maps(
    dom: &Hypermagma,
    cod: &Hypermagma,
    tag: CategoryTag,
    strict_only: bool,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_map(dom, cod, tag.is_unital(), strict_only, |m| {
        out.push(m.to_vec());
        true
    })?;
    Ok(out)
}

/// Like [`enumerate_maps`], but returns `None` once more than `limit`
/// maps have been found.
pub fn enumerate_maps_limited(
    dom: &Hypermagma,
    cod: &Hypermagma,
    tag: CategoryTag,
    limit: usize,
) -> Result<Option<Vec<Vec<usize>>>> {
    let mut out = Vec::new();
    let mut over = false;
    for_each_map(dom, cod, tag.is_unital(), false, |m| {
        if out.len() == limit {
            over = true;
            return false;
        }
        out.push(m.to_vec());
        true
    })?;
    Ok(if over { None } else { Some(out) })
}

pub fn count_morphisms(dom: &Hypermagma, cod: &Hypermagma, tag: CategoryTag) -> Result<usize> {
    let mut count = 0;
    for_each_map(dom, cod, tag.is_unital(), false, |_| {
        count += 1;
        true
    })?;
    Ok(count)
}

/// All morphisms `dom → cod` in the tag, in lexicographic order of maps.
pub fn enumerate_morphisms(
    dom: &Arc<Hypermagma>,
    cod: &Arc<Hypermagma>,
    tag: CategoryTag,
    strict_only: bool,
) -> Result<Vec<Morphism>> {
    enumerate_maps(dom, cod, tag, strict_only)?
        .into_iter()
        .map(|m| Morphism::new(dom.clone(), cod.clone(), m))
        .collect()
}

/// The lexicographically first isomorphism, as a morphism.
pub fn isomorphism(m: &Arc<Hypermagma>, n: &Arc<Hypermagma>) -> Option<Morphism> {
    crate::magma::find_isomorphism(m, n).map(|map| {
        Morphism::new(m.clone(), n.clone(), map).expect("isomorphism map is valid")
    })
}

/// `ℰ` with `Hom(ℰ, M) ≅ {(x, y, z) | z ∈ x ⋆ y}`, and the inclusion of
/// the free object on two generators.
#[derive(Clone, Debug)]
pub struct RepresentingObject {
    pub tag: CategoryTag,
    pub object: Arc<Hypermagma>,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub free2: Arc<Hypermagma>,
    pub iota: Morphism,
}

fn table_from_entries(labels: &[&str], unit: Option<&str>, entries: &[(&str, &str, &str)]) -> Hypermagma {
    let carrier = Carrier::from_strs(labels).expect("fixed labels");
    let n = carrier.len();
    let mut table = vec![Subset::EMPTY; n * n];
    if let Some(u) = unit {
        let e = carrier.index_of(u).unwrap();
        for x in 0..n {
            table[e * n + x] = Subset::singleton(x);
            table[x * n + e] = Subset::singleton(x);
        }
    }
    for (x, y, z) in entries {
        let (x, y, z) = (
            carrier.index_of(x).unwrap(),
            carrier.index_of(y).unwrap(),
            carrier.index_of(z).unwrap(),
        );
        table[x * n + y].insert(z);
    }
    Hypermagma::new(carrier, table, None).expect("fixed table")
}

/// Symmetric closure of a list of sums.
fn symmetric(entries: &[(&'static str, &'static str, &'static str)]) -> Vec<(&'static str, &'static str, &'static str)> {
    let mut out = entries.to_vec();
    for &(x, y, z) in entries {
        out.push((y, x, z));
    }
    out
}

/// The representing object of the (ambient) tag.
pub fn representing_object(tag: CategoryTag) -> RepresentingObject {
    let tag = tag.ambient();
    let (object, free2, iota_pairs): (Hypermagma, Hypermagma, Vec<(&str, &str)>) = match tag {
        CategoryTag::HMag => (
            table_from_entries(&["a", "b", "c"], None, &[("a", "b", "c")]),
            table_from_entries(&["a", "b"], None, &[]),
            vec![("a", "a"), ("b", "b")],
        ),
        CategoryTag::UHMag => (
            table_from_entries(&["e", "a", "b", "c"], Some("e"), &[("a", "b", "c")]),
            table_from_entries(&["e", "a", "b"], Some("e"), &[]),
            vec![("e", "e"), ("a", "a"), ("b", "b")],
        ),
        CategoryTag::Msc => (
            table_from_entries(
                &["e", "a", "a^-1", "b", "b^-1", "c", "c^-1"],
                Some("e"),
                &[
                    ("a", "a^-1", "e"),
                    ("a^-1", "a", "e"),
                    ("b", "b^-1", "e"),
                    ("b^-1", "b", "e"),
                    ("c", "c^-1", "e"),
                    ("c^-1", "c", "e"),
                    ("a", "b", "c"),
                    ("a^-1", "c", "b"),
                    ("c", "b^-1", "a"),
                    ("b^-1", "a^-1", "c^-1"),
                    ("c^-1", "a", "b^-1"),
                    ("b", "c^-1", "a^-1"),
                ],
            ),
            free_commutative_two(),
            vec![("0", "e"), ("a", "a"), ("-a", "a^-1"), ("b", "b"), ("-b", "b^-1")],
        ),
        _ => (
            table_from_entries(
                &["0", "a", "-a", "b", "-b", "c", "-c"],
                Some("0"),
                &symmetric(&[
                    ("a", "-a", "0"),
                    ("b", "-b", "0"),
                    ("c", "-c", "0"),
                    ("a", "b", "c"),
                    ("a", "-c", "-b"),
                    ("-a", "-b", "-c"),
                    ("-a", "c", "b"),
                    ("b", "-c", "-a"),
                    ("-b", "c", "a"),
                ]),
            ),
            free_commutative_two(),
            vec![("0", "0"), ("a", "a"), ("-a", "-a"), ("b", "b"), ("-b", "-b")],
        ),
    };
    let object = Arc::new(object);
    let free2 = Arc::new(free2);
    let iota = Morphism::from_labels(free2.clone(), object.clone(), &iota_pairs)
        .expect("fixed inclusion");
    let idx = |l: &str| object.index_of(l).unwrap();
    let (a, b, c) = (idx("a"), idx("b"), idx("c"));
    RepresentingObject {
        tag,
        object,
        a,
        b,
        c,
        free2,
        iota,
    }
}

fn free_commutative_two() -> Hypermagma {
    table_from_entries(
        &["0", "a", "-a", "b", "-b"],
        Some("0"),
        &symmetric(&[("a", "-a", "0"), ("b", "-b", "0")]),
    )
}

fn compose_maps(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&y| g[y]).collect()
}

/// Strictness as a lifting property against `ι: F₂ → ℰ`: every square
/// `f∘α = β∘ι` has a diagonal `g` with `g∘ι = α` and `f∘g = β`.
pub fn is_strict_via_lifting(f: &Morphism, tag: CategoryTag) -> Result<bool> {
    let rep = representing_object(tag);
    let (m, n) = (f.dom.as_ref(), f.cod.as_ref());
    let iota = rep.iota.map();
    let alphas = enumerate_maps(&rep.free2, m, rep.tag, false)?;
    let mut betas: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    for beta in enumerate_maps(&rep.object, n, rep.tag, false)? {
        betas.entry(compose_maps(iota, &beta)).or_default().push(beta);
    }
    let mut diagonals: HashMap<Vec<usize>, HashSet<Vec<usize>>> = HashMap::new();
    for g in enumerate_maps(&rep.object, m, rep.tag, false)? {
        diagonals
            .entry(compose_maps(iota, &g))
            .or_default()
            .insert(compose_maps(&g, f.map()));
    }
    for alpha in &alphas {
        let f_alpha = compose_maps(alpha, f.map());
        let Some(squares) = betas.get(&f_alpha) else {
            continue;
        };
        let lifts = diagonals.get(alpha);
        for beta in squares {
            if !lifts.is_some_and(|l| l.contains(beta)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Shortness as surjectivity of `p∘−: Hom(ℰ, M) → Hom(ℰ, N)`; in `HMag`
/// surjectivity of `p` is required separately.
pub fn is_short_via_lifting(p: &Morphism, tag: CategoryTag) -> Result<bool> {
    let rep = representing_object(tag);
    if rep.tag == CategoryTag::HMag && !p.kind().surjective {
        return Ok(false);
    }
    let targets = count_morphisms(&rep.object, &p.cod, rep.tag)?;
    let mut reached = HashSet::new();
    for_each_map(&rep.object, &p.dom, rep.tag.is_unital(), false, |g| {
        reached.insert(compose_maps(g, p.map()));
        true
    })?;
    Ok(reached.len() == targets)
}

/// Reversibility as bijectivity of restriction along `ℰ_uHMag → ℰ_Msc`.
pub fn is_reversible_via_lifting(m: &Hypermagma) -> Result<bool> {
    if !m.is_unital() {
        return Err(Error::NotUnital("reversibility needs an identity".into()));
    }
    let small = representing_object(CategoryTag::UHMag);
    let big = representing_object(CategoryTag::Msc);
    let labels = ["e", "a", "b", "c"];
    let incl: Vec<usize> = labels.iter().map(|l| big.object.index_of(l).unwrap()).collect();
    debug_assert!(Morphism::new(small.object.clone(), big.object.clone(), incl.clone())
        .unwrap()
        .is_morphism_in(CategoryTag::UHMag));
    let targets = count_morphisms(&small.object, m, CategoryTag::UHMag)?;
    let mut restricted = HashSet::new();
    let mut sources = 0usize;
    for_each_map(&big.object, m, true, false, |g| {
        sources += 1;
        restricted.insert(compose_maps(&incl, g));
        true
    })?;
    Ok(sources == restricted.len() && restricted.len() == targets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::analyze;

    fn krasner() -> Arc<Hypermagma> {
        Arc::new(Hypermagma::from_rows(&["0", "1"], &[&["0", "1"], &["1", "0 1"]]).unwrap())
    }

    fn z2() -> Arc<Hypermagma> {
        Arc::new(Hypermagma::from_rows(&["0", "1"], &[&["0", "1"], &["1", "0"]]).unwrap())
    }

    fn triples(m: &Hypermagma) -> usize {
        (0..m.size())
            .flat_map(|x| (0..m.size()).map(move |y| (x, y)))
            .map(|(x, y)| m.op(x, y).len())
            .sum()
    }

    #[test]
    fn can_z2_k_has_two_elements() {
        let maps = enumerate_maps(&z2(), &krasner(), CategoryTag::Can, false).unwrap();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn kinds_of_inclusion() {
        let f = Morphism::new(z2(), krasner(), vec![0, 1]).unwrap();
        let k = f.kind();
        assert!(k.colax && !k.lax && !k.strict && k.unital && k.injective && k.surjective);
        assert!(!is_short(&f));
        assert!(!is_coshort(&f));
        assert_eq!(kernel(&f).unwrap(), Subset::singleton(0));
    }

    #[test]
    fn krasner_to_z2_is_not_a_morphism() {
        let f = Morphism::new(krasner(), z2(), vec![0, 1]).unwrap();
        assert!(!f.is_colax());
        assert!(f.kind().lax);
    }

    #[test]
    fn representing_objects_are_well_formed() {
        for tag in CategoryTag::FOUR {
            let rep = representing_object(tag);
            assert!(rep.object.op(rep.a, rep.b).contains(rep.c));
            assert!(rep.iota.is_morphism_in(tag), "{tag}");
            assert!(rep.iota.kind().injective);
            let e = rep.object.as_ref();
            for m in [krasner(), z2(), rep.object.clone()] {
                assert_eq!(count_morphisms(e, &m, tag).unwrap(), triples(&m), "{tag}");
            }
        }
        assert!(analyze(&representing_object(CategoryTag::Msc).object).reversible);
        assert!(analyze(&representing_object(CategoryTag::CMsc).object)
            .classification
            .is_commutative_mosaic());
    }

    #[test]
    fn liftings_agree_on_small_cases() {
        for (m, n) in [(z2(), krasner()), (krasner(), krasner()), (z2(), z2())] {
            for f in enumerate_morphisms(&m, &n, CategoryTag::CMsc, false).unwrap() {
                assert_eq!(is_strict_via_lifting(&f, CategoryTag::CMsc).unwrap(), f.is_strict());
                assert_eq!(is_short_via_lifting(&f, CategoryTag::CMsc).unwrap(), is_short(&f));
            }
        }
        assert!(is_reversible_via_lifting(&krasner()).unwrap());
    }

    #[test]
    fn search_cap_is_enforced() {
        let big = Arc::new(
            Hypermagma::from_fn(Carrier::numbered(12).unwrap(), |_, _| Subset::EMPTY).unwrap(),
        );
        let mut s = MapSearch::new(&big, &big, false, false).unwrap();
        s.cap = 1000;
        assert_eq!(s.run(&mut |_| true), Err(Error::SearchCapExceeded(1000)));
    }
}
