//! The sixteen verification checks, each with a time budget.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::axioms::analyze;
use crate::error::{Error, Result};
use crate::hom::{
    count_morphisms, enumerate_maps, enumerate_maps_limited, is_reversible_via_lifting, is_short,
    is_short_via_lifting, is_strict_via_lifting, representing_object, CategoryTag, Morphism,
};
use crate::magma::{find_isomorphism, Carrier, Hypermagma};
use crate::matroid::{self, Matroid};
use crate::monoidal::{
    curry, enumerate_bimorphisms, hom_object, strict_classifier_check, tensor, uncurry, TensorOp,
};
use crate::subset::Subset;
use crate::univ;
use crate::zoo::{self, lattice, multiring, refute, search};
use crate::Classification;

/// Check names in running order.
pub const CHECKS: [&str; 16] = [
    "krasner",
    "can-z2-k",
    "f9-quotient",
    "representing-objects",
    "coequalizer-example",
    "monoidal-units",
    "closed-structure",
    "z2-boxtimes",
    "morphism-characterizations",
    "regularity",
    "strict-classifier",
    "klein-four",
    "coproduct-equalizer-refuters",
    "matroid-functor",
    "nakano",
    "hom-object-health",
];

/// Parameters of a suite run.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteConfig {
    /// Largest canonical hypergroup tried by the refuters.
    pub max_size: usize,
    /// Largest size tried by the empty-sum search.
    pub empty_sum_size: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_size: 5,
            empty_sum_size: 6,
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub elapsed_ms: f64,
    pub budget_ms: f64,
    /// One line per verified or failed fact.
    pub lines: Vec<String>,
}

impl CheckResult {
    pub fn within_budget(&self) -> bool {
        self.elapsed_ms <= self.budget_ms
    }

    /// `PASS name (t ms / budget ms)`.
    pub fn summary(&self) -> String {
        let verdict = if self.passed && self.within_budget() { "PASS" } else { "FAIL" };
        let over = if self.within_budget() { "" } else { " over budget" };
        format!(
            "{verdict} {} ({:.1} ms / {:.0} ms{over})",
            self.name, self.elapsed_ms, self.budget_ms
        )
    }
}

/// `x: x⋆a x⋆b ... | y: ...` with every product shown as a set.
fn one_line_table(m: &Hypermagma) -> String {
    (0..m.size())
        .map(|x| {
            let cells: Vec<String> = (0..m.size()).map(|y| m.carrier().show(m.op(x, y))).collect();
            format!("{}: {}", m.label(x), cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Time budget of a check.
pub fn budget(name: &str) -> Duration {
    let ms = match name {
        "krasner" | "can-z2-k" => 1,
        "f9-quotient" | "coequalizer-example" => 10,
        "representing-objects" => 5_000,
        "monoidal-units" | "z2-boxtimes" => 1_000,
        "closed-structure" | "regularity" => 60_000,
        "morphism-characterizations" | "coproduct-equalizer-refuters" => 300_000,
        "strict-classifier" => 10_000,
        "klein-four" | "matroid-functor" | "nakano" => 120_000,
        "hom-object-health" => 600_000,
        _ => 0,
    };
    Duration::from_millis(ms)
}

struct Log {
    ok: bool,
    lines: Vec<String>,
}

impl Log {
    fn new() -> Self {
        Log {
            ok: true,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, cond: bool, what: impl Into<String>) {
        let what = what.into();
        self.lines.push(format!("{} {what}", if cond { "ok  " } else { "FAIL" }));
        self.ok &= cond;
    }

    fn note(&mut self, what: impl Into<String>) {
        self.lines.push(format!("note {}", what.into()));
    }
}

/// Runs one named check; `Err` signals an internal error, not a failure.
pub fn run_check(name: &str, cfg: &SuiteConfig) -> Result<CheckResult> {
    let Some(&name) = CHECKS.iter().find(|&&c| c == name) else {
        return Err(Error::Parse(format!("unknown check {name}")));
    };
    let start = Instant::now();
    let mut log = Log::new();
    match name {
        "krasner" => krasner(&mut log),
        "can-z2-k" => can_z2_k(&mut log)?,
        "f9-quotient" => f9_quotient(&mut log)?,
        "representing-objects" => representing_objects(&mut log)?,
        "coequalizer-example" => coequalizer_example(&mut log)?,
        "monoidal-units" => monoidal_units(&mut log)?,
        "closed-structure" => closed_structure(&mut log)?,
        "z2-boxtimes" => z2_boxtimes(&mut log)?,
        "morphism-characterizations" => morphism_characterizations(&mut log)?,
        "regularity" => regularity(&mut log)?,
        "strict-classifier" => strict_classifier(&mut log)?,
        "klein-four" => klein_four(&mut log, cfg)?,
        "coproduct-equalizer-refuters" => refuters(&mut log, cfg)?,
        "matroid-functor" => matroid_functor(&mut log)?,
        "nakano" => nakano(&mut log)?,
        "hom-object-health" => hom_object_health(&mut log, cfg)?,
        _ => unreachable!(),
    }
    Ok(CheckResult {
        name,
        passed: log.ok,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        budget_ms: budget(name).as_secs_f64() * 1e3,
        lines: log.lines,
    })
}

fn named_battery() -> Vec<(String, Arc<Hypermagma>)> {
    zoo::battery().into_iter().map(|(n, m)| (n.to_string(), m)).collect()
}

fn krasner(log: &mut Log) {
    let k = zoo::krasner();
    let c = analyze(&k).classification;
    log.check(c == Classification::CanonicalHypergroup, format!("K classifies as {c}"));
    log.check(k.op(1, 1) == Subset::from_indices([0, 1]), "1 + 1 = {0, 1} in K");
}

fn can_z2_k(log: &mut Log) -> Result<()> {
    let maps = enumerate_maps(&zoo::z2(), &zoo::krasner(), CategoryTag::Can, false)?;
    log.check(maps.len() == 2, format!("|Can(Z2, K)| = {}", maps.len()));
    log.check(
        maps.contains(&vec![0, 0]) && maps.contains(&vec![0, 1]),
        "Can(Z2, K) = {zero, identity on labels}",
    );
    Ok(())
}

fn f9_quotient(log: &mut Log) -> Result<()> {
    let r = zoo::f9_over_f3();
    let h = &r.additive;
    log.check(h.size() == 5, format!("F9/F3x has {} elements", h.size()));
    let sum = h.op(zoo::f9_alpha_pow(0), zoo::f9_alpha_pow(2));
    log.check(
        sum == Subset::from_indices([zoo::f9_alpha_pow(1), zoo::f9_alpha_pow(3)]),
        format!("[1] + [α²] = {}", h.carrier().show(sum)),
    );
    let flags = multiring::check_multiring(h, &r.mul)?;
    log.check(flags.multiring && flags.hyperring, "hyperring axioms hold");
    Ok(())
}

fn representing_objects(log: &mut Log) -> Result<()> {
    for tag in CategoryTag::FOUR {
        let rep = representing_object(tag);
        for (name, m) in zoo::battery() {
            let n = m.size();
            let triples: usize = (0..n * n).map(|k| m.op(k / n, k % n).len()).sum();
            let homs = count_morphisms(&rep.object, &m, tag)?;
            log.check(
                homs == triples,
                format!("{}: |Hom(E, {name})| = {homs}, relations = {triples}", tag.name()),
            );
        }
    }
    Ok(())
}

fn coequalizer_example(log: &mut Log) -> Result<()> {
    let d = Arc::new(Hypermagma::from_rows(
        &["0", "1", "2"],
        &[&["0", "1", "2"], &["1", "0 1 2", "0 1 2"], &["2", "0 1 2", "0 1 2"]],
    )?);
    let fx = Arc::new(univ::free_pointed(Carrier::from_strs(&["0", "1", "2"])?, 0)?);
    let f = Morphism::new(fx.clone(), d.clone(), vec![0, 1, 2])?;
    let g = Morphism::new(fx, d, vec![0, 0, 2])?;
    let q = univ::coequalizer(&f, &g, CategoryTag::HMag)?;
    let c = q.cod();
    let (z, two) = (q.class_of(0), q.class_of(2));
    log.check(
        c.size() == 2 && c.op(z, z) == Subset::from_indices([z, two]),
        format!("HMag: [0] + [0] = {}", c.carrier().show(c.op(z, z))),
    );
    let u = univ::coequalizer(&f, &g, CategoryTag::UHMag)?;
    log.check(
        u.cod().as_ref() == &univ::terminal() || (u.cod().size() == 1 && u.cod().op(0, 0) == Subset::singleton(0)),
        format!("uHMag: coequalizer has {} element(s)", u.cod().size()),
    );
    Ok(())
}

fn monoidal_units(log: &mut Log) -> Result<()> {
    let terminal = Arc::new(univ::terminal());
    for (name, m) in zoo::battery() {
        for op in TensorOp::ALL {
            let unit = Arc::new(op.unit());
            let left = tensor(op, &unit, &m)?;
            let right = tensor(op, &m, &unit)?;
            log.check(
                find_isomorphism(&left.object, &m).is_some() && find_isomorphism(&right.object, &m).is_some(),
                format!("{} ⊗ {name} ≅ {name} for {op} with unit {:?}", unit_name(op), unit.labels()),
            );
        }
        // The terminal object as the unit of ⩕.
        let t = tensor(TensorOp::Wedge, &terminal, &m)?;
        log.check(
            find_isomorphism(&t.object, &m).is_some(),
            format!("1 ⩕ {name} ≅ {name} with 1 terminal: got {} element(s)", t.object.size()),
        );
    }
    log.note("the unit of ⩕ that works is the free unital hypermagma on one generator");
    Ok(())
}

fn unit_name(op: TensorOp) -> &'static str {
    match op {
        TensorOp::Boxdot => "1_∅",
        TensorOp::Wedge => "Fu(1)",
        TensorOp::Boxtimes => "F",
    }
}

const CLOSED_LIMIT: usize = 200;

fn closed_structure(log: &mut Log) -> Result<()> {
    let battery = zoo::battery();
    for op in TensorOp::ALL {
        let tag = op.tag();
        let (mut checked, mut skipped) = (0usize, 0usize);
        let mut failures = Vec::new();
        for (xn, x) in &battery {
            for (yn, y) in &battery {
                let t = tensor(op, x, y)?;
                for (zn, z) in &battery {
                    let Some(hom_yz) = enumerate_maps_limited(y, z, tag, CLOSED_LIMIT)? else {
                        skipped += 1;
                        continue;
                    };
                    if hom_yz.is_empty() {
                        skipped += 1;
                        continue;
                    }
                    let left = enumerate_maps_limited(&t.object, z, tag, CLOSED_LIMIT)?;
                    let hom = hom_object(y, z, tag)?;
                    let right = enumerate_maps_limited(x, &hom.object, tag, CLOSED_LIMIT)?;
                    let (Some(left), Some(right)) = (left, right) else {
                        skipped += 1;
                        continue;
                    };
                    checked += 1;
                    let mut ok = left.len() == right.len();
                    for phi in &left {
                        let phi = Morphism::new(t.object.clone(), z.clone(), phi.clone())?;
                        ok &= curry(&phi, &t, &hom).and_then(|c| uncurry(&c, &t, &hom)).is_ok_and(|p| p == phi);
                    }
                    for psi in &right {
                        let psi = Morphism::new(x.clone(), hom.object.clone(), psi.clone())?;
                        ok &= uncurry(&psi, &t, &hom).and_then(|u| curry(&u, &t, &hom)).is_ok_and(|p| p == psi);
                    }
                    if !ok {
                        failures.push(format!("({xn}, {yn}, {zn}): {} vs {}", left.len(), right.len()));
                    }
                }
            }
        }
        log.check(
            failures.is_empty(),
            format!(
                "{}: |Hom(X⊗Y, Z)| = |Hom(X, [Y, Z])| with curry/uncurry inverse on {checked} triples ({skipped} over {CLOSED_LIMIT} or empty){}",
                tag.name(),
                if failures.is_empty() { String::new() } else { format!("; failures {failures:?}") }
            ),
        );
    }
    Ok(())
}

fn z2_boxtimes(log: &mut Log) -> Result<()> {
    let z = Arc::new(zoo::z2());
    let t = tensor(TensorOp::Boxtimes, &z, &z)?;
    let k = zoo::krasner();
    log.check(
        find_isomorphism(&t.object, &k).is_some(),
        format!(
            "Z2 ⊠ Z2 ≅ K: got {:?} with {}, isomorphic to Z2: {}",
            t.object.labels(),
            analyze(&t.object).classification,
            find_isomorphism(&t.object, &z).is_some()
        ),
    );
    for (mn, m) in zoo::battery() {
        for (nn, n) in zoo::battery() {
            let t = tensor(TensorOp::Boxtimes, &m, &n)?;
            let (em, en, et) = (m.identity().unwrap(), n.identity().unwrap(), t.object.identity().unwrap());
            let ok = (0..m.size())
                .filter(|&x| x != em)
                .all(|x| (0..n.size()).filter(|&y| y != en).all(|y| t.universal.at(x, y) != et));
            log.check(ok, format!("x, y ≠ 0 ⟹ x ⊠ y ≠ 0 in {mn} ⊠ {nn}"));
        }
    }
    Ok(())
}

/// Objects of size at most four used for morphism-level checks.
pub fn small_objects() -> Vec<(String, Arc<Hypermagma>)> {
    let mut out: Vec<(String, Hypermagma)> = vec![
        ("K".into(), zoo::krasner()),
        ("Z2".into(), zoo::z2()),
        ("F".into(), zoo::sign_mosaic()),
        ("V".into(), zoo::klein()),
        ("Z3".into(), zoo::group::FiniteGroup::cyclic(3).unwrap().to_hypermagma()),
        ("C3".into(), lattice::lattice_mosaic(&lattice::Lattice::chain(3).unwrap()).unwrap()),
        ("1".into(), univ::terminal()),
        ("1_∅".into(), univ::empty_square_point()),
        ("Fu(a)".into(), univ::free(CategoryTag::UHMag, &["a"]).unwrap()),
        ("B".into(), Hypermagma::from_rows(&["0", "1"], &[&["0", "1"], &["1", "1"]]).unwrap()),
    ];
    out.sort_by_key(|(_, m)| m.size());
    out.into_iter().map(|(n, m)| (n, Arc::new(m))).collect()
}

fn in_tag(m: &Hypermagma, tag: CategoryTag) -> bool {
    let c = analyze(m).classification;
    match tag {
        CategoryTag::HMag => true,
        CategoryTag::UHMag => m.is_unital(),
        CategoryTag::Msc | CategoryTag::HGrp => c.is_mosaic(),
        CategoryTag::CMsc | CategoryTag::Can => c.is_commutative_mosaic(),
    }
}

fn morphism_characterizations(log: &mut Log) -> Result<()> {
    let objects = small_objects();
    for tag in CategoryTag::FOUR {
        let members: Vec<_> = objects.iter().filter(|(_, m)| in_tag(m, tag)).collect();
        let (mut count, mut strict_bad, mut short_bad) = (0usize, Vec::new(), Vec::new());
        for (an, a) in &members {
            for (bn, b) in &members {
                for map in enumerate_maps(a, b, tag, false)? {
                    let f = Morphism::new(a.clone(), b.clone(), map)?;
                    count += 1;
                    if f.is_strict() != is_strict_via_lifting(&f, tag)? {
                        strict_bad.push(format!("{an}->{bn} {:?}", f.map()));
                    }
                    if is_short(&f) != is_short_via_lifting(&f, tag)? {
                        short_bad.push(format!("{an}->{bn} {:?}", f.map()));
                    }
                }
            }
        }
        log.check(
            strict_bad.is_empty(),
            format!("{}: strict ⟺ lifting on {count} morphisms {strict_bad:?}", tag.name()),
        );
        log.check(
            short_bad.is_empty(),
            format!("{}: short ⟺ Hom(E, -) surjective on {count} morphisms {short_bad:?}", tag.name()),
        );
    }
    let mut bad = Vec::new();
    let mut n = 0;
    for (name, m) in objects.iter().filter(|(_, m)| m.is_unital()) {
        n += 1;
        if analyze(m).reversible != is_reversible_via_lifting(m)? {
            bad.push(name.clone());
        }
    }
    log.check(bad.is_empty(), format!("reversible ⟺ ι* bijective on {n} unital objects {bad:?}"));
    Ok(())
}

fn regularity(log: &mut Log) -> Result<()> {
    let objects = small_objects();
    for tag in [CategoryTag::HMag, CategoryTag::UHMag] {
        let members: Vec<_> = objects.iter().filter(|(_, m)| in_tag(m, tag)).collect();
        let (mut shorts, mut squares) = (0usize, 0usize);
        let mut pb_bad = Vec::new();
        let mut pres_bad = Vec::new();
        for (an, a) in &members {
            let ra = analyze(a);
            for (nn, n) in &members {
                for map in enumerate_maps(a, n, tag, false)? {
                    let p = Morphism::new(a.clone(), n.clone(), map)?;
                    if !is_short(&p) {
                        continue;
                    }
                    shorts += 1;
                    let rn = analyze(n);
                    if (ra.commutative && !rn.commutative) || (ra.associative && !rn.associative) {
                        pres_bad.push(format!("{an}->{nn} {:?}", p.map()));
                    }
                    for (ln, l) in &members {
                        for gm in enumerate_maps(l, n, tag, false)? {
                            let g = Morphism::new(l.clone(), n.clone(), gm)?;
                            let pb = univ::pullback(&p, &g)?;
                            squares += 1;
                            if !is_short(&pb.legs[1]) {
                                pb_bad.push(format!("p: {an}->{nn} {:?}, g: {ln} {:?}", p.map(), g.map()));
                            }
                        }
                    }
                }
            }
        }
        log.check(
            pb_bad.is_empty(),
            format!("{}: pullbacks of {shorts} short maps along {squares} maps stay short {:?}", tag.name(), &pb_bad[..pb_bad.len().min(3)]),
        );
        log.check(
            pres_bad.is_empty(),
            format!("{}: short quotients preserve commutativity and associativity {pres_bad:?}", tag.name()),
        );
    }
    Ok(())
}

fn strict_classifier(log: &mut Log) -> Result<()> {
    for (name, m) in zoo::battery() {
        let s = strict_classifier_check(&m)?;
        log.check(
            s.bijection && s.subs.len() == s.morphisms.len(),
            format!("{name}: |Sub_str| = {}, |Msc(-, K)| = {}, kernels biject", s.subs.len(), s.morphisms.len()),
        );
    }
    Ok(())
}

/// 3×3 matrices over `L` with `x = −x` and the row and column relations
/// `x₁ ∈ x₂ + x₃`, by brute force.
pub fn klein_matrices(l: &Hypermagma) -> Vec<[usize; 9]> {
    let n = l.size();
    let ok_entry: Vec<usize> = (0..n).filter(|&x| l.inverse(x) == Some(x)).collect();
    let rel = |a: usize, b: usize, c: usize| l.op(b, c).contains(a);
    let mut out = Vec::new();
    let total = ok_entry.len().pow(9);
    for code in 0..total {
        let mut m = [0usize; 9];
        let mut c = code;
        for e in m.iter_mut() {
            *e = ok_entry[c % ok_entry.len()];
            c /= ok_entry.len();
        }
        let x = |i: usize, j: usize| m[i * 3 + j];
        let cols = (0..3).all(|j| rel(x(0, j), x(1, j), x(2, j)));
        let rows = (0..3).all(|i| rel(x(i, 0), x(i, 1), x(i, 2)));
        if cols && rows {
            out.push(m);
        }
    }
    out.sort();
    out
}

fn klein_four(log: &mut Log, cfg: &SuiteConfig) -> Result<()> {
    let v = Arc::new(zoo::klein());
    let idx = |l: &str| v.index_of(l).unwrap();
    let (a, b, c) = (idx("a"), idx("b"), idx("c"));
    let nz = [a, b, c];
    for (name, l) in [("K", Arc::new(zoo::krasner())), ("V", v.clone())] {
        let bims = enumerate_bimorphisms(&v, &v, &l, CategoryTag::Can)?;
        let mut from_bims: Vec<[usize; 9]> = bims
            .iter()
            .map(|bm| {
                let mut m = [0; 9];
                for i in 0..3 {
                    for j in 0..3 {
                        m[i * 3 + j] = bm.at(nz[i], nz[j]);
                    }
                }
                m
            })
            .collect();
        from_bims.sort();
        let zero_edges = bims.iter().all(|bm| (0..4).all(|x| bm.at(0, x) == 0 && bm.at(x, 0) == 0));
        let oracle = klein_matrices(&l);
        log.check(
            zero_edges && from_bims == oracle,
            format!("Bim(V, V; {name}) has {} elements and matches the matrix characterization ({} matrices)", bims.len(), oracle.len()),
        );
        if name == "K" {
            log.check(from_bims.contains(&[1; 9]), "the all-ones matrix lies in Bim(V, V; K)");
            log.check(
                from_bims.contains(&[0, 0, 0, 0, 1, 1, 0, 1, 1]),
                "(0 0 0; 0 1 1; 0 1 1) lies in Bim(V, V; K)",
            );
            let no_zero = from_bims.iter().filter(|m| m.iter().all(|&e| e != 0)).count();
            let no_nonzero = from_bims.iter().filter(|m| m.iter().all(|&e| e == 0)).count();
            log.note(format!("matrices with no zero entries: {no_zero}; with no nonzero entries: {no_nonzero}"));
            log.check(no_zero == 1, "exactly one matrix over K has no zero entries");
        } else {
            log.check(from_bims.contains(&[a, b, c, b, c, a, c, a, b]), "the cyclic matrix lies in Bim(V, V; V)");
        }
    }
    let report = refute::exhaustive_klein(cfg.max_size)?;
    log.check(
        report.survivors.is_empty(),
        format!(
            "V × V and {} canonical hypergroups of size ≤ {} fail to represent Bim(V, V; -) against K, Z2, V ({} by hom counts, {} bimorphisms checked individually)",
            report.objects - 1,
            cfg.max_size,
            report.objects_by_count,
            report.candidates
        ),
    );
    Ok(())
}

fn refuters(log: &mut Log, cfg: &SuiteConfig) -> Result<()> {
    let co = refute::exhaustive_coproduct(cfg.max_size)?;
    log.check(
        co.survivors.is_empty(),
        format!(
            "no canonical hypergroup of size ≤ {} passes the Z2 ⊔ Z2 battery: {} objects, {} injection pairs, {:?}",
            cfg.max_size, co.objects, co.candidates, co.by_step
        ),
    );
    let eq = refute::exhaustive_equalizer(cfg.max_size)?;
    log.check(
        eq.survivors.is_empty(),
        format!(
            "no equalizer candidate of size ≤ {} survives the F9/F3x replay: {} objects, {} equalizing maps, {:?}",
            cfg.max_size, eq.objects, eq.candidates, eq.by_step
        ),
    );
    Ok(())
}

fn matroid_functor(log: &mut Log) -> Result<()> {
    let u23 = Matroid::uniform(2, 3)?.with_point()?;
    let m = matroid::matroid_to_mosaic(&u23)?;
    let ok = (1..4).all(|x| (1..4).filter(|&y| y != x).all(|y| m.op(x, y) == Subset::singleton(6 - x - y)));
    log.check(ok, "U(2,3): x + y is the third point");

    let fano = Matroid::fano().with_point()?;
    let fm = matroid::matroid_to_mosaic(&fano)?;
    let r = analyze(&fm);
    let w = matroid::xxy_associativity_witness(&fm);
    log.check(
        r.classification == Classification::CommutativeMosaic && !r.associative && w.is_some(),
        format!("Fano: {} with associativity failing at (x, x, y) = {:?}", r.classification, w.map(|(x, y)| (fm.label(x).to_string(), fm.label(y).to_string()))),
    );

    let u24 = Matroid::uniform(2, 4)?.with_point()?;
    log.check(
        analyze(&matroid::matroid_to_mosaic(&u24)?).classification.is_hypergroup(),
        "U(2,4): the mosaic is a hypergroup",
    );

    let battery: Vec<(&str, Matroid)> = vec![
        ("U(1,1)", Matroid::uniform(1, 1)?.with_point()?),
        ("U(2,2)", Matroid::uniform(2, 2)?.with_point()?),
        ("U(2,3)", u23),
        ("U(2,4)", u24),
        ("U(3,4)", Matroid::uniform(3, 4)?.with_point()?),
        ("Fano", fano),
    ];
    let mut invariant_bad = Vec::new();
    for (name, m) in &battery {
        let mo = matroid::matroid_to_mosaic(m)?;
        if !matroid::mosaic_invariants_hold(m, &mo) {
            invariant_bad.push(*name);
        }
    }
    log.check(invariant_bad.is_empty(), format!("mosaic invariants hold on {} matroids {invariant_bad:?}", battery.len()));

    let mut strong = 0usize;
    let mut bad = Vec::new();
    for (an, a) in &battery {
        for (bn, b) in &battery {
            if (b.size() as f64).powi(a.size() as i32) > 1e6 {
                continue;
            }
            let (ma, mb) = (matroid::mosaic_arc(a)?, matroid::mosaic_arc(b)?);
            for f in matroid::strong_maps(a, b)? {
                strong += 1;
                if !Morphism::new(ma.clone(), mb.clone(), f.clone())?.is_morphism_in(CategoryTag::CMsc) {
                    bad.push(format!("{an}->{bn} {f:?}"));
                }
            }
        }
    }
    log.check(bad.is_empty(), format!("{strong} strong maps are mosaic morphisms {bad:?}"));

    let mut projective = Vec::new();
    for (name, m) in &battery {
        let p = matroid::projective_checks(m)?;
        log.check(
            p.projective_law == p.closure_eq_generated,
            format!("{name}: projective law {}, C(S) = ⟨S⟩ {}, witness {:?}", p.projective_law, p.closure_eq_generated, p.law_witness),
        );
        if p.projective_law {
            projective.push((*name, m));
        }
    }
    log.check(
        !battery.iter().any(|(n, _)| *n == "U(3,4)") || !projective.iter().any(|(n, _)| *n == "U(3,4)"),
        "U(3,4) is not projective",
    );
    let mut full_bad = Vec::new();
    for (an, a) in &projective {
        for (bn, b) in &projective {
            if !matroid::fullness(a, b)? {
                full_bad.push(format!("{an}->{bn}"));
            }
        }
    }
    log.check(
        full_bad.is_empty(),
        format!("every mosaic morphism between {} projective matroids is strong {full_bad:?}", projective.len()),
    );
    Ok(())
}

fn nakano(log: &mut Log) -> Result<()> {
    for n in 1..=6 {
        let ls = lattice::all_lattices(n)?;
        let mut bad = Vec::new();
        let mut modular = 0;
        for l in &ls {
            let h = analyze(&lattice::lattice_mosaic(l)?).classification.is_hypergroup();
            modular += usize::from(l.is_modular());
            if h != l.is_modular() {
                bad.push(format!("{:?}", l.meet));
            }
        }
        log.check(
            bad.is_empty(),
            format!("{} lattices of size {n}, {modular} modular: hypergroup ⟺ modular {bad:?}", ls.len()),
        );
    }
    Ok(())
}

fn hom_object_health(log: &mut Log, cfg: &SuiteConfig) -> Result<()> {
    let battery = named_battery();
    let mut bad = BTreeSet::new();
    let mut pairs = 0;
    for (mn, m) in &battery {
        for (nn, n) in &battery {
            pairs += 1;
            let h = hom_object(m, n, CategoryTag::CMsc)?;
            if !analyze(&h.object).classification.is_commutative_mosaic() {
                bad.insert(format!("[{mn}, {nn}]"));
            }
        }
    }
    log.check(bad.is_empty(), format!("cMsc hom objects of {pairs} battery pairs are commutative mosaics {bad:?}"));
    match search::empty_sum_search(cfg.empty_sum_size)? {
        search::EmptySumOutcome::Found(w) => {
            let h = &w.hypergroup;
            log.check(
                search::verify_empty_sum(&w)?,
                format!(
                    "empty sum witness of size {}: 1 ↦ {} and 1 ↦ {} in Can(Z2, H) have empty sum, H rows {}",
                    h.size(),
                    h.label(w.x),
                    h.label(w.y),
                    one_line_table(h)
                ),
            );
        }
        search::EmptySumOutcome::Exhausted { max_size, tables } => {
            log.note(format!("empty sum search exhausted sizes ≤ {max_size} over {tables} tables"));
        }
    }
    Ok(())
}

/// Runs the selected checks in order.
pub fn run_all(cfg: &SuiteConfig, only: Option<&[String]>) -> Result<Vec<CheckResult>> {
    CHECKS
        .iter()
        .filter(|c| only.is_none_or(|o| o.iter().any(|x| x == *c)))
        .map(|c| run_check(c, cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_checks_pass() {
        let cfg = SuiteConfig::default();
        for name in ["krasner", "can-z2-k", "f9-quotient", "coequalizer-example", "strict-classifier"] {
            let r = run_check(name, &cfg).unwrap();
            assert!(r.passed, "{name}: {:?}", r.lines);
        }
    }

    #[test]
    fn unknown_check_is_an_error() {
        assert!(run_check("nope", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn matrix_oracle_over_k() {
        let k = zoo::krasner();
        let ms = klein_matrices(&k);
        assert!(ms.contains(&[1; 9]));
    }
}
