//! Free and cofree objects, limits, colimits and unitization.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::{kernel, CategoryTag, Morphism};
use crate::magma::{dedup_labels, Carrier, Hypermagma};
use crate::subset::{Subset, MAX_CARRIER};

/// An apex with its legs: projections for a cone, injections for a cocone.
#[derive(Clone, Debug)]
pub struct Cone {
    pub apex: Arc<Hypermagma>,
    pub legs: Vec<Morphism>,
}

/// A map onto a quotient, together with its blocks.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub morphism: Morphism,
    /// `blocks[y]` is the fibre over codomain element `y`.
    pub blocks: Vec<Subset>,
    pub short: bool,
    pub unital: bool,
}

impl QuotientMap {
    pub fn from_morphism(morphism: Morphism) -> QuotientMap {
        let blocks = (0..morphism.cod().size())
            .map(|y| morphism.preimage(Subset::singleton(y)))
            .collect();
        let short = crate::hom::is_short(&morphism);
        let unital = morphism.kind().unital;
        QuotientMap {
            morphism,
            blocks,
            short,
            unital,
        }
    }

    pub fn dom(&self) -> &Arc<Hypermagma> {
        self.morphism.dom()
    }

    pub fn cod(&self) -> &Arc<Hypermagma> {
        self.morphism.cod()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.morphism.apply(x)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_CARRIER {
        Err(Error::CarrierTooLarge {
            size: n,
            limit: MAX_CARRIER,
        })
    } else {
        Ok(())
    }
}

/// The free object on a set of generators.
///
/// `HMag`: all products empty. Unital tags: an identity `e` is adjoined and
/// products of generators are empty. `Msc`/`CMsc`: `X ⊔ −X ⊔ {0}` with
/// `x + (−x) = 0` the only nonempty sums of non-zero elements.
pub fn free(tag: CategoryTag, gens: &[&str]) -> Result<Hypermagma> {
    match tag {
        CategoryTag::HMag => {
            let c = Carrier::from_strs(gens)?;
            Hypermagma::from_fn(c, |_, _| Subset::EMPTY)
        }
        CategoryTag::UHMag => {
            let mut labels = vec!["e".to_string()];
            labels.extend(gens.iter().map(|g| g.to_string()));
            free_pointed(Carrier::new(labels)?, 0)
        }
        CategoryTag::Msc | CategoryTag::CMsc => {
            let mut labels = vec!["0".to_string()];
            for g in gens {
                labels.push(g.to_string());
                labels.push(format!("-{g}"));
            }
            let c = Carrier::new(labels)?;
            Hypermagma::from_fn(c, |x, y| {
                if x == 0 {
                    Subset::singleton(y)
                } else if y == 0 {
                    Subset::singleton(x)
                } else if x.div_ceil(2) == y.div_ceil(2) && x != y {
                    Subset::singleton(0)
                } else {
                    Subset::EMPTY
                }
            })
        }
        CategoryTag::HGrp | CategoryTag::Can => Err(Error::UnsupportedCategory(format!(
            "no free objects in {tag}"
        ))),
    }
}

/// The free unital hypermagma on a pointed set: the base point is the
/// identity and every other product is empty.
pub fn free_pointed(carrier: Carrier, base: usize) -> Result<Hypermagma> {
    if base >= carrier.len() {
        return Err(Error::DimensionMismatch("base point outside the carrier".into()));
    }
    Hypermagma::from_fn(carrier, |x, y| {
        if x == base {
            Subset::singleton(y)
        } else if y == base {
            Subset::singleton(x)
        } else {
            Subset::EMPTY
        }
    })
}

/// `D(X)`: every product is the whole carrier.
pub fn cofree(carrier: Carrier) -> Result<Hypermagma> {
    let full = Subset::full(carrier.len());
    Hypermagma::from_fn(carrier, |_, _| full)
}

/// The terminal object `1`.
pub fn terminal() -> Hypermagma {
    Hypermagma::from_rows(&["()"], &[&["()"]]).expect("fixed table")
}

/// `1_∅`: one point with empty square, the unit of `⊡`.
pub fn empty_square_point() -> Hypermagma {
    Hypermagma::from_rows(&["1"], &[&[""]]).expect("fixed table")
}

/// Componentwise product with its projections.
pub fn product(ms: &[Arc<Hypermagma>]) -> Result<Cone> {
    let sizes: Vec<usize> = ms.iter().map(|m| m.size()).collect();
    let total = sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s).filter(|&p| p <= MAX_CARRIER));
    let Some(total) = total else {
        return Err(Error::CarrierTooLarge {
            size: usize::MAX,
            limit: MAX_CARRIER,
        });
    };
    let coords = |mut i: usize| -> Vec<usize> {
        let mut c = vec![0; sizes.len()];
        for k in (0..sizes.len()).rev() {
            c[k] = i % sizes[k];
            i /= sizes[k];
        }
        c
    };
    let index = |c: &[usize]| c.iter().zip(&sizes).fold(0, |acc, (&x, &s)| acc * s + x);
    let all: Vec<Vec<usize>> = (0..total).map(coords).collect();
    let labels = if ms.is_empty() {
        vec!["()".to_string()]
    } else {
        all.iter()
            .map(|c| {
                let parts: Vec<&str> = c.iter().zip(ms).map(|(&x, m)| m.label(x)).collect();
                parts.join("|")
            })
            .collect()
    };
    let apex = Hypermagma::from_fn(Carrier::new(dedup_labels(labels))?, |i, j| {
        let (a, b) = (&all[i], &all[j]);
        let mut out = Subset::EMPTY;
        let mut partial = vec![0; ms.len()];
        let factors: Vec<Vec<usize>> = (0..ms.len()).map(|k| ms[k].op(a[k], b[k]).to_vec()).collect();
        if factors.iter().any(|f| f.is_empty()) {
            return out;
        }
        // Odometer over the componentwise products.
        let mut pos = vec![0; ms.len()];
        loop {
            for k in 0..ms.len() {
                partial[k] = factors[k][pos[k]];
            }
            out.insert(index(&partial));
            let mut k = ms.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                pos[k] += 1;
                if pos[k] < factors[k].len() {
                    break;
                }
                pos[k] = 0;
            }
        }
    })?;
    let apex = Arc::new(apex);
    let legs = ms
        .iter()
        .enumerate()
        .map(|(k, m)| Morphism::new(apex.clone(), m.clone(), all.iter().map(|c| c[k]).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cone { apex, legs })
}

/// Disjoint union (`HMag`) or wedge sum (unital tags), with injections.
/// Cross products are empty.
pub fn coproduct(ms: &[Arc<Hypermagma>], tag: CategoryTag) -> Result<Cone> {
    match tag {
        CategoryTag::HGrp | CategoryTag::Can => {
            return Err(Error::UnsupportedCategory(format!("{tag} lacks coproducts")))
        }
        CategoryTag::HMag => {}
        _ => {
            if let Some(m) = ms.iter().find(|m| !m.is_unital()) {
                return Err(Error::NotUnital(format!("summand {:?} has no identity", m.carrier())));
            }
        }
    }
    let unital = tag.is_unital();
    // (summand, element) for every element of the sum; the wedge point first.
    let mut elems: Vec<Option<(usize, usize)>> = Vec::new();
    let mut labels = Vec::new();
    if unital {
        elems.push(None);
        labels.push("e".to_string());
    }
    let mut maps: Vec<Vec<usize>> = ms.iter().map(|m| vec![0; m.size()]).collect();
    for (i, m) in ms.iter().enumerate() {
        for x in 0..m.size() {
            if unital && m.identity() == Some(x) {
                maps[i][x] = 0;
                continue;
            }
            maps[i][x] = elems.len();
            elems.push(Some((i, x)));
            labels.push(format!("{i}:{}", m.label(x)));
        }
    }
    check_size(elems.len())?;
    let apex = Hypermagma::from_fn(Carrier::new(dedup_labels(labels))?, |a, b| {
        match (elems[a], elems[b]) {
            (None, _) => Subset::singleton(b),
            (_, None) => Subset::singleton(a),
            (Some((i, x)), Some((j, y))) if i == j => ms[i].op(x, y).map(&maps[i]),
            _ => Subset::EMPTY,
        }
    })?;
    let apex = Arc::new(apex);
    let legs = ms
        .iter()
        .zip(maps)
        .map(|(m, map)| Morphism::new(m.clone(), apex.clone(), map))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cone { apex, legs })
}

fn parallel(f: &Morphism, g: &Morphism) -> Result<()> {
    let same = |a: &Arc<Hypermagma>, b: &Arc<Hypermagma>| Arc::ptr_eq(a, b) || a == b;
    if same(f.dom(), g.dom()) && same(f.cod(), g.cod()) {
        Ok(())
    } else {
        Err(Error::NotParallel)
    }
}

/// The weak sub on `{x | f(x) = g(x)}` with its (coshort) inclusion.
pub fn equalizer(f: &Morphism, g: &Morphism) -> Result<Cone> {
    parallel(f, g)?;
    let m = f.dom();
    let set: Subset = (0..m.size()).filter(|&x| f.apply(x) == g.apply(x)).collect();
    let (sub, elems) = m.weak_sub(set, false)?;
    let apex = Arc::new(sub);
    let incl = Morphism::new(apex.clone(), m.clone(), elems)?;
    Ok(Cone {
        apex,
        legs: vec![incl],
    })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // Keep the smaller index as root so roots are least representatives.
        if ra < rb {
            self.0[rb] = ra;
        } else if rb < ra {
            self.0[ra] = rb;
        }
    }

    /// Class ids numbered by least representative.
    fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.0.len();
        let mut id = vec![usize::MAX; n];
        let mut class = vec![0; n];
        let mut k = 0;
        for x in 0..n {
            let r = self.find(x);
            if id[r] == usize::MAX {
                id[r] = k;
                k += 1;
            }
            class[x] = id[r];
        }
        (class, k)
    }
}

/// Quotient with `[x] ⋆ [y] = π(π⁻¹[x] ⋆ π⁻¹[y])`, except that the unit
/// class (if any) acts as an identity and is labelled `e`.
fn quotient(
    m: &Arc<Hypermagma>,
    class: Vec<usize>,
    k: usize,
    unit: Option<usize>,
) -> Result<QuotientMap> {
    let n = m.size();
    let mut reps = vec![usize::MAX; k];
    for x in (0..n).rev() {
        reps[class[x]] = x;
    }
    let mut table = vec![Subset::EMPTY; k * k];
    for x in 0..n {
        for y in 0..n {
            table[class[x] * k + class[y]] |= m.op(x, y).map(&class);
        }
    }
    if let Some(u) = unit {
        for c in 0..k {
            table[u * k + c] = Subset::singleton(c);
            table[c * k + u] = Subset::singleton(c);
        }
    }
    let mut labels: Vec<String> = reps.iter().map(|&r| m.label(r).to_string()).collect();
    if let Some(u) = unit {
        labels[u] = "e".to_string();
        // Keep the unit's label fixed when priming duplicates.
        labels.swap(0, u);
        labels = dedup_labels(labels);
        labels.swap(0, u);
    }
    let q = Hypermagma::new(Carrier::new(labels)?, table, unit)?;
    let morphism = Morphism::new(m.clone(), Arc::new(q), class)?;
    Ok(QuotientMap::from_morphism(morphism))
}

/// Coequalizer of a parallel pair.
///
/// In `HMag` the partition generated by `f(x) ~ g(x)` carries the induced
/// hyperoperation; in the unital tags this is followed by unitization at
/// the class of the identity.
pub fn coequalizer(f: &Morphism, g: &Morphism, tag: CategoryTag) -> Result<QuotientMap> {
    parallel(f, g)?;
    let n = f.cod();
    let mut uf = UnionFind::new(n.size());
    for x in 0..f.dom().size() {
        uf.union(f.apply(x), g.apply(x));
    }
    let (class, k) = uf.classes();
    let q = quotient(n, class, k, None)?;
    if !tag.is_unital() {
        return Ok(q);
    }
    let e = n
        .identity()
        .ok_or_else(|| Error::NotUnital("codomain has no identity".into()))?;
    let u = unitize(q.cod(), Subset::singleton(q.class_of(e)))?;
    Ok(QuotientMap::from_morphism(q.morphism.then(&u.morphism)?))
}

/// The universal unital quotient `π_E: M → M_E` collapsing `E` to the unit.
///
/// For `E = ∅` a fresh unit is adjoined. Otherwise `K` is the absorptive
/// closure of `E`, classes are the components of `y ∈ x ⋆ K ∪ K ⋆ x` with
/// `K` itself one class, and `K` becomes the identity.
pub fn unitize(m: &Arc<Hypermagma>, e: Subset) -> Result<QuotientMap> {
    let n = m.size();
    if e.is_empty() {
        check_size(n + 1)?;
        let mut labels: Vec<String> = m.labels().to_vec();
        labels.insert(0, "e".to_string());
        let labels = dedup_labels(labels);
        let u = Hypermagma::from_fn(Carrier::new(labels)?, |a, b| match (a, b) {
            (0, _) => Subset::singleton(b),
            (_, 0) => Subset::singleton(a),
            _ => m.op(a - 1, b - 1).iter().map(|z| z + 1).collect(),
        })?;
        let morphism = Morphism::new(m.clone(), Arc::new(u), (1..=n).collect())?;
        return Ok(QuotientMap::from_morphism(morphism));
    }
    let k = m.absorptive_closure(e);
    let mut uf = UnionFind::new(n);
    let first = k.first().expect("closure of a nonempty set");
    for x in k.iter() {
        uf.union(first, x);
    }
    for x in 0..n {
        for u in k.iter() {
            for y in (m.op(x, u) | m.op(u, x)).iter() {
                uf.union(x, y);
            }
        }
    }
    let (class, count) = uf.classes();
    let unit = class[first];
    quotient(m, class, count, Some(unit))
}

/// Fibre product with `(x, x') ⋆ (y, y') = [(x ⋆ y) × (x' ⋆ y')] ∩ P`.
pub fn pullback(f: &Morphism, g: &Morphism) -> Result<Cone> {
    let same = Arc::ptr_eq(f.cod(), g.cod()) || f.cod() == g.cod();
    if !same {
        return Err(Error::NoCommonCodomain);
    }
    let (l, m) = (f.dom(), g.dom());
    let pairs: Vec<(usize, usize)> = (0..l.size())
        .flat_map(|x| (0..m.size()).map(move |y| (x, y)))
        .filter(|&(x, y)| f.apply(x) == g.apply(y))
        .collect();
    check_size(pairs.len())?;
    let mut pos = vec![usize::MAX; l.size() * m.size()];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        pos[x * m.size() + y] = i;
    }
    let labels = pairs
        .iter()
        .map(|&(x, y)| format!("{}|{}", l.label(x), m.label(y)))
        .collect();
    let apex = Hypermagma::from_fn(Carrier::new(dedup_labels(labels))?, |i, j| {
        let ((x, y), (x2, y2)) = (pairs[i], pairs[j]);
        let mut out = Subset::EMPTY;
        for a in l.op(x, x2).iter() {
            for b in m.op(y, y2).iter() {
                let p = pos[a * m.size() + b];
                if p != usize::MAX {
                    out.insert(p);
                }
            }
        }
        out
    })?;
    let apex = Arc::new(apex);
    let legs = vec![
        Morphism::new(apex.clone(), l.clone(), pairs.iter().map(|p| p.0).collect())?,
        Morphism::new(apex.clone(), m.clone(), pairs.iter().map(|p| p.1).collect())?,
    ];
    Ok(Cone { apex, legs })
}

/// `f = m ∘ q` with `q` the coequalizer of the kernel pair of `f` and `m`
/// the induced injective morphism.
pub fn regular_image_factorization(
    f: &Morphism,
    tag: CategoryTag,
) -> Result<(QuotientMap, Morphism)> {
    let pair = pullback(f, f)?;
    let q = coequalizer(&pair.legs[0], &pair.legs[1], tag)?;
    let mut map = vec![usize::MAX; q.cod().size()];
    for x in 0..f.dom().size() {
        let c = q.class_of(x);
        if map[c] != usize::MAX && map[c] != f.apply(x) {
            return Err(Error::NotAMorphism(
                "kernel-pair quotient does not factor the map".into(),
            ));
        }
        map[c] = f.apply(x);
    }
    if map.contains(&usize::MAX) {
        return Err(Error::NotAMorphism("quotient is not surjective".into()));
    }
    let m = Morphism::new(q.cod().clone(), f.cod().clone(), map)?;
    Ok((q, m))
}

fn require_unital_tag(tag: CategoryTag) -> Result<()> {
    if tag.is_unital() {
        Ok(())
    } else {
        Err(Error::NotUnitalTag(format!("{tag} is not a unital category")))
    }
}

/// `i` is an isomorphism onto an absorptive strict unital sub.
pub fn is_normal_mono(i: &Morphism, tag: CategoryTag) -> Result<bool> {
    require_unital_tag(tag)?;
    let k = i.kind();
    if !(k.injective && k.strict && k.unital) {
        return Ok(false);
    }
    let image = i.image();
    let n = i.cod();
    Ok(n.is_strict_sub(image) && n.is_absorptive(image))
}

/// `p` is isomorphic, under `M`, to `π: M → M_{ker p}`.
pub fn is_normal_epi(p: &Morphism, tag: CategoryTag) -> Result<bool> {
    require_unital_tag(tag)?;
    if !p.kind().unital || !p.is_colax() {
        return Ok(false);
    }
    let ker = kernel(p)?;
    let q = unitize(p.dom(), ker)?;
    let mut map = vec![usize::MAX; q.cod().size()];
    for x in 0..p.dom().size() {
        let c = q.class_of(x);
        if map[c] != usize::MAX && map[c] != p.apply(x) {
            return Ok(false);
        }
        map[c] = p.apply(x);
    }
    if map.contains(&usize::MAX) {
        return Ok(false);
    }
    let h = Morphism::new(q.cod().clone(), p.cod().clone(), map)?;
    let k = h.kind();
    Ok(k.strict && k.injective && k.surjective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::analyze;
    use crate::Classification;

    fn arc(m: Hypermagma) -> Arc<Hypermagma> {
        Arc::new(m)
    }

    fn z2() -> Arc<Hypermagma> {
        arc(Hypermagma::from_rows(&["0", "1"], &[&["0", "1"], &["1", "0"]]).unwrap())
    }

    #[test]
    fn free_cmsc_on_one_generator() {
        let f = free(CategoryTag::CMsc, &["1"]).unwrap();
        assert_eq!(f.labels(), &["0", "1", "-1"]);
        assert_eq!(f.op(1, 2), Subset::singleton(0));
        assert!(f.op(1, 1).is_empty());
        assert_eq!(analyze(&f).classification, Classification::CommutativeMosaic);
    }

    #[test]
    fn klein_product() {
        let v = product(&[z2(), z2()]).unwrap();
        assert_eq!(v.apex.size(), 4);
        assert_eq!(analyze(&v.apex).classification, Classification::AbelianGroup);
        for p in &v.legs {
            assert!(p.is_strict() && crate::hom::is_short(p));
        }
        let t = product(&[]).unwrap();
        assert_eq!(t.apex.size(), 1);
        assert_eq!(t.apex.identity(), Some(0));
    }

    #[test]
    fn wedge_of_z2() {
        let w = coproduct(&[z2(), z2()], CategoryTag::UHMag).unwrap();
        assert_eq!(w.apex.labels(), &["e", "0:1", "1:1"]);
        assert!(w.apex.op(1, 2).is_empty());
        assert_eq!(w.apex.op(1, 1), Subset::singleton(0));
        assert!(coproduct(&[z2()], CategoryTag::Can).is_err());
    }

    #[test]
    fn coequalizer_example() {
        let d = arc(Hypermagma::from_rows(
            &["0", "1", "2"],
            &[&["0", "1", "2"], &["1", "0 1 2", "0 1 2"], &["2", "0 1 2", "0 1 2"]],
        )
        .unwrap());
        let fx = arc(free_pointed(Carrier::from_strs(&["0", "1", "2"]).unwrap(), 0).unwrap());
        let f = Morphism::new(fx.clone(), d.clone(), vec![0, 1, 2]).unwrap();
        let g = Morphism::new(fx, d, vec![0, 0, 2]).unwrap();
        assert!(f.is_colax() && g.is_colax());
        let q = coequalizer(&f, &g, CategoryTag::HMag).unwrap();
        assert_eq!(q.cod().labels(), &["0", "2"]);
        assert_eq!(q.cod().op(0, 0), Subset::from_indices([0, 1]));
        let u = coequalizer(&f, &g, CategoryTag::UHMag).unwrap();
        assert_eq!(u.cod().size(), 1);
    }

    #[test]
    fn unitize_empty_adjoins_unit() {
        let m = arc(free(CategoryTag::HMag, &["a"]).unwrap());
        let q = unitize(&m, Subset::EMPTY).unwrap();
        assert_eq!(q.cod().labels(), &["e", "a"]);
        assert_eq!(q.cod().identity(), Some(0));
    }

    #[test]
    fn pullback_and_equalizer() {
        let g = z2();
        let id = Morphism::identity(g.clone());
        let zero = Morphism::new(g.clone(), g.clone(), vec![0, 0]).unwrap();
        let eq = equalizer(&id, &zero).unwrap();
        assert_eq!(eq.apex.size(), 1);
        assert!(crate::hom::is_coshort(&eq.legs[0]));
        let pb = pullback(&id, &id).unwrap();
        assert_eq!(pb.apex.size(), 2);
    }

    #[test]
    fn factorization_of_collapse() {
        let g = z2();
        let t = arc(terminal());
        let f = Morphism::new(g, t, vec![0, 0]).unwrap();
        let (q, m) = regular_image_factorization(&f, CategoryTag::UHMag).unwrap();
        assert_eq!(q.cod().size(), 1);
        assert!(m.kind().injective);
        assert!(is_normal_epi(&f, CategoryTag::UHMag).unwrap());
    }
}
