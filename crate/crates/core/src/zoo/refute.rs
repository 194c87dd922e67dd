//! Refuters for candidate coproducts, equalizers and bimorphism tensors in
//! `Can`. Each refutation is a single re-checkable step; none of these
//! functions claims global non-existence.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::axioms::analyze;
use crate::error::{Error, Result};
use crate::hom::{enumerate_maps, CategoryTag, Morphism};
use crate::magma::Hypermagma;
use crate::monoidal::{compare_representation, enumerate_bimorphisms, Bimorphism, RepresentationFailure};
use crate::zoo::{f9_alpha_pow, f9_frobenius, f9_hypergroup, krasner, search, z2};

const CAN: CategoryTag = CategoryTag::Can;

/// One failed requirement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RefutationStep {
    /// The candidate is not even of the right kind.
    NotCandidate { reason: String },
    /// `|Can(G, T)|` differs from the count the universal property forces.
    CountMismatch {
        test_object: String,
        hom_count: usize,
        expected: usize,
    },
    /// No mediating morphism for the pair `(f1, f2)`.
    NoMediator {
        test_object: String,
        f1: Vec<usize>,
        f2: Vec<usize>,
    },
    /// Two mediating morphisms for the pair `(f1, f2)`.
    DuplicateMediator {
        test_object: String,
        f1: Vec<usize>,
        f2: Vec<usize>,
        h1: Vec<usize>,
        h2: Vec<usize>,
    },
    /// The equalizing map `𝐊 → H` with `1 ↦ target` does not factor.
    MissingPreimage { target: String },
    /// `z ∈ x + y` is sent outside the fixed points.
    FixednessViolated {
        x: usize,
        y: usize,
        z: usize,
        image: String,
    },
    /// The candidate tensor does not represent bimorphisms.
    NotRepresenting(RepresentationFailure),
}

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&y| g[y]).collect()
}

fn is_can_from_z2(i: &Morphism, gc: &Hypermagma) -> bool {
    i.dom().as_ref() == &z2() && i.cod().as_ref() == gc && i.is_morphism_in(CAN)
}

/// Checks whether `(Gc, i1, i2)` is a coproduct `ℤ₂ ⊔ ℤ₂` against the
/// battery; returns the first failure or `None` if it survives.
pub fn refute_coproduct_candidate(
    gc: &Arc<Hypermagma>,
    i1: &Morphism,
    i2: &Morphism,
    battery: &[(String, Arc<Hypermagma>)],
) -> Result<Option<RefutationStep>> {
    if !analyze(gc).classification.is_canonical_hypergroup() {
        return Ok(Some(RefutationStep::NotCandidate {
            reason: "not a canonical hypergroup".into(),
        }));
    }
    if !is_can_from_z2(i1, gc) || !is_can_from_z2(i2, gc) {
        return Ok(Some(RefutationStep::NotCandidate {
            reason: "injections are not morphisms Z2 -> candidate".into(),
        }));
    }
    let z = z2();
    for (name, t) in battery {
        let homs = enumerate_maps(gc, t, CAN, false)?;
        let singles = enumerate_maps(&z, t, CAN, false)?;
        if let Some(step) = coproduct_step(name, &homs, &singles, i1.map(), i2.map()) {
            return Ok(Some(step));
        }
    }
    Ok(None)
}

fn coproduct_step(
    name: &str,
    homs: &[Vec<usize>],
    singles: &[Vec<usize>],
    i1: &[usize],
    i2: &[usize],
) -> Option<RefutationStep> {
    let expected = singles.len() * singles.len();
    if homs.len() != expected {
        return Some(RefutationStep::CountMismatch {
            test_object: name.to_string(),
            hom_count: homs.len(),
            expected,
        });
    }
    // Legs of each mediator, keyed by the pair of composites.
    type Legs = (Vec<usize>, Vec<usize>);
    let mut mediators: BTreeMap<Legs, Vec<&Vec<usize>>> = BTreeMap::new();
    for h in homs {
        mediators.entry((compose(i1, h), compose(i2, h))).or_default().push(h);
    }
    for f1 in singles {
        for f2 in singles {
            match mediators.get(&(f1.clone(), f2.clone())).map(|v| v.as_slice()) {
                None | Some([]) => {
                    return Some(RefutationStep::NoMediator {
                        test_object: name.to_string(),
                        f1: f1.clone(),
                        f2: f2.clone(),
                    })
                }
                Some([_]) => {}
                Some([h1, h2, ..]) => {
                    return Some(RefutationStep::DuplicateMediator {
                        test_object: name.to_string(),
                        f1: f1.clone(),
                        f2: f2.clone(),
                        h1: (*h1).clone(),
                        h2: (*h2).clone(),
                    })
                }
            }
        }
    }
    None
}

/// Re-derives a coproduct refutation step from scratch.
pub fn recheck_coproduct_step(
    step: &RefutationStep,
    gc: &Arc<Hypermagma>,
    i1: &Morphism,
    i2: &Morphism,
    battery: &[(String, Arc<Hypermagma>)],
) -> Result<bool> {
    let find = |n: &str| battery.iter().find(|(b, _)| b == n).map(|(_, t)| t.clone());
    let z = z2();
    Ok(match step {
        RefutationStep::NotCandidate { .. } => {
            !analyze(gc).classification.is_canonical_hypergroup()
                || !is_can_from_z2(i1, gc)
                || !is_can_from_z2(i2, gc)
        }
        RefutationStep::CountMismatch {
            test_object,
            hom_count,
            expected,
        } => {
            let Some(t) = find(test_object) else { return Ok(false) };
            let s = enumerate_maps(&z, &t, CAN, false)?.len();
            enumerate_maps(gc, &t, CAN, false)?.len() == *hom_count
                && s * s == *expected
                && hom_count != expected
        }
        RefutationStep::NoMediator { test_object, f1, f2 } => {
            let Some(t) = find(test_object) else { return Ok(false) };
            enumerate_maps(gc, &t, CAN, false)?
                .iter()
                .all(|h| compose(i1.map(), h) != *f1 || compose(i2.map(), h) != *f2)
        }
        RefutationStep::DuplicateMediator {
            test_object,
            f1,
            f2,
            h1,
            h2,
        } => {
            let Some(t) = find(test_object) else { return Ok(false) };
            let ok = |h: &Vec<usize>| {
                Morphism::new(gc.clone(), t.clone(), h.clone()).is_ok_and(|m| m.is_morphism_in(CAN))
                    && compose(i1.map(), h) == *f1
                    && compose(i2.map(), h) == *f2
            };
            h1 != h2 && ok(h1) && ok(h2)
        }
        _ => false,
    })
}

fn h_label(x: usize) -> String {
    f9_hypergroup().label(x).to_string()
}

/// Replays the argument that `(E, e)` cannot equalize `id` and the
/// Frobenius on `𝔽₉/𝔽₃ˣ` in `Can`.
pub fn refute_equalizer_candidate(e_obj: &Arc<Hypermagma>, e: &Morphism) -> Result<RefutationStep> {
    let h = f9_hypergroup();
    if e.cod().as_ref() != &h || e.dom().as_ref() != e_obj.as_ref() || !e.is_morphism_in(CAN) {
        return Err(Error::CandidateDoesNotEqualize("not a morphism into F9/F3x".into()));
    }
    let frob = f9_frobenius();
    let fe = compose(e.map(), frob.map());
    if fe != e.map() {
        return Err(Error::CandidateDoesNotEqualize(format!(
            "F(e(x)) differs from e(x) at {:?}",
            (0..e.map().len()).find(|&x| fe[x] != e.map()[x]).map(|x| e_obj.label(x))
        )));
    }
    let r = analyze(e_obj);
    if !r.classification.is_canonical_hypergroup() {
        return Ok(RefutationStep::NotCandidate {
            reason: format!("{} is {}", "candidate", r.classification),
        });
    }
    let k = krasner();
    let factor = |target: usize| -> Result<Option<usize>> {
        for m in enumerate_maps(&k, e_obj, CAN, false)? {
            if e.apply(m[1]) == target {
                return Ok(Some(m[1]));
            }
        }
        Ok(None)
    };
    let (one, a2) = (f9_alpha_pow(0), f9_alpha_pow(2));
    let Some(x) = factor(one)? else {
        return Ok(RefutationStep::MissingPreimage { target: h_label(one) });
    };
    let Some(y) = factor(a2)? else {
        return Ok(RefutationStep::MissingPreimage { target: h_label(a2) });
    };
    let z = e_obj.op(x, y).first().expect("canonical hypergroups are total");
    let image = e.apply(z);
    Ok(RefutationStep::FixednessViolated {
        x,
        y,
        z,
        image: h_label(image),
    })
}

/// Re-derives an equalizer refutation step.
pub fn recheck_equalizer_step(step: &RefutationStep, e_obj: &Arc<Hypermagma>, e: &Morphism) -> Result<bool> {
    let h = f9_hypergroup();
    let k = krasner();
    Ok(match step {
        RefutationStep::NotCandidate { .. } => !analyze(e_obj).classification.is_canonical_hypergroup(),
        RefutationStep::MissingPreimage { target } => {
            let Some(t) = h.index_of(target) else { return Ok(false) };
            enumerate_maps(&k, e_obj, CAN, false)?.iter().all(|m| e.apply(m[1]) != t)
        }
        RefutationStep::FixednessViolated { x, y, z, image } => {
            let frob = f9_frobenius();
            e_obj.op(*x, *y).contains(*z)
                && h_label(e.apply(*z)) == *image
                && frob.apply(e.apply(*z)) != e.apply(*z)
        }
        _ => false,
    })
}

/// Whether a tensor candidate `(T, u)` for `V ⊗ V` in `Can` survives the
/// battery.
pub fn refute_klein_candidate(
    u: &Bimorphism,
    battery: &[(String, Arc<Hypermagma>)],
) -> Result<Option<RefutationStep>> {
    if !analyze(&u.cod).classification.is_canonical_hypergroup() {
        return Ok(Some(RefutationStep::NotCandidate {
            reason: "not a canonical hypergroup".into(),
        }));
    }
    if !u.is_bimorphism_in(CAN) {
        return Ok(Some(RefutationStep::NotCandidate {
            reason: "u is not a bimorphism".into(),
        }));
    }
    Ok(crate::monoidal::represents_bimorphisms(u, battery, CAN)?.map(RefutationStep::NotRepresenting))
}

/// Tally of an exhaustive refutation run.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ExhaustiveReport {
    pub objects: usize,
    pub candidates: usize,
    /// Objects refuted wholesale by a hom-count mismatch.
    pub objects_by_count: usize,
    /// Counts of refutations by step kind.
    pub by_step: BTreeMap<String, usize>,
    /// Descriptions of candidates that were not refuted.
    pub survivors: Vec<String>,
}

impl ExhaustiveReport {
    fn record(&mut self, step: &RefutationStep) {
        let name = match step {
            RefutationStep::NotCandidate { .. } => "NotCandidate",
            RefutationStep::CountMismatch { .. } => "CountMismatch",
            RefutationStep::NoMediator { .. } => "NoMediator",
            RefutationStep::DuplicateMediator { .. } => "DuplicateMediator",
            RefutationStep::MissingPreimage { .. } => "MissingPreimage",
            RefutationStep::FixednessViolated { .. } => "FixednessViolated",
            RefutationStep::NotRepresenting(_) => "NotRepresenting",
        };
        *self.by_step.entry(name.to_string()).or_default() += 1;
    }
}

/// The battery `{𝐊, ℤ₂}` of the coproduct argument.
pub fn coproduct_battery() -> Vec<(String, Arc<Hypermagma>)> {
    vec![("K".into(), Arc::new(krasner())), ("Z2".into(), Arc::new(z2()))]
}

/// The battery `{𝐊, ℤ₂, V}` of the Klein-four argument.
pub fn klein_battery() -> Vec<(String, Arc<Hypermagma>)> {
    let mut b = coproduct_battery();
    b.push(("V".into(), Arc::new(crate::zoo::klein())));
    b
}

/// Every canonical hypergroup of size `≤ max_size`, with every pair of
/// morphisms from `ℤ₂`, tried as `ℤ₂ ⊔ ℤ₂`.
pub fn exhaustive_coproduct(max_size: usize) -> Result<ExhaustiveReport> {
    let battery = coproduct_battery();
    let z = Arc::new(z2());
    let singles: Vec<Vec<Vec<usize>>> = battery
        .iter()
        .map(|(_, t)| enumerate_maps(&z, t, CAN, false))
        .collect::<Result<_>>()?;
    let mut report = ExhaustiveReport::default();
    for gc in search::canonical_hypergroups_up_to(max_size)? {
        let gc = Arc::new(gc);
        report.objects += 1;
        let homs: Vec<Vec<Vec<usize>>> = battery
            .iter()
            .map(|(_, t)| enumerate_maps(&gc, t, CAN, false))
            .collect::<Result<_>>()?;
        let injections = enumerate_maps(&z, &gc, CAN, false)?;
        for i1 in &injections {
            for i2 in &injections {
                report.candidates += 1;
                let step = battery.iter().enumerate().find_map(|(k, (name, _))| {
                    coproduct_step(name, &homs[k], &singles[k], i1, i2)
                });
                match step {
                    Some(s) => report.record(&s),
                    None => report.survivors.push(format!("{:?} with {i1:?}, {i2:?}", gc.labels())),
                }
            }
        }
    }
    Ok(report)
}

/// Every canonical hypergroup `E` of size `≤ max_size` and every `e: E → H`
/// equalizing `id` and the Frobenius, replayed.
pub fn exhaustive_equalizer(max_size: usize) -> Result<ExhaustiveReport> {
    let h = Arc::new(f9_hypergroup());
    let frob = f9_frobenius();
    let mut report = ExhaustiveReport::default();
    for e_obj in search::canonical_hypergroups_up_to(max_size)? {
        let e_obj = Arc::new(e_obj);
        report.objects += 1;
        for map in enumerate_maps(&e_obj, &h, CAN, false)? {
            if compose(&map, frob.map()) != map {
                continue;
            }
            report.candidates += 1;
            let e = Morphism::new(e_obj.clone(), h.clone(), map)?;
            let step = refute_equalizer_candidate(&e_obj, &e)?;
            if matches!(step, RefutationStep::FixednessViolated { .. }) && !recheck_equalizer_step(&step, &e_obj, &e)? {
                report.survivors.push(format!("{:?} via {:?}", e_obj.labels(), e.map()));
            } else {
                report.record(&step);
            }
        }
    }
    Ok(report)
}

/// `V × V` and every canonical hypergroup of size `≤ max_size`, tried as
/// `V ⊗ V` against `{𝐊, ℤ₂, V}`. A count mismatch refutes every
/// bimorphism into `T` at once, so those objects are tallied under
/// `objects_by_count` without enumerating their bimorphisms; the others
/// have each bimorphism `V × V → T` checked.
pub fn exhaustive_klein(max_size: usize) -> Result<ExhaustiveReport> {
    let battery = klein_battery();
    let v = Arc::new(crate::zoo::klein());
    let bims: Vec<Vec<Bimorphism>> = battery
        .iter()
        .map(|(_, l)| enumerate_bimorphisms(&v, &v, l, CAN))
        .collect::<Result<_>>()?;
    let vv = crate::univ::product(&[v.clone(), v.clone()])?.apex;
    let mut objects: Vec<Arc<Hypermagma>> = vec![vv];
    objects.extend(search::canonical_hypergroups_up_to(max_size)?.into_iter().map(Arc::new));
    let mut report = ExhaustiveReport::default();
    for t in objects {
        report.objects += 1;
        let mut homs = Vec::with_capacity(battery.len());
        let mut mismatch = false;
        for (k, (_, l)) in battery.iter().enumerate() {
            let h = enumerate_maps(&t, l, CAN, false)?;
            if h.len() != bims[k].len() {
                mismatch = true;
                break;
            }
            homs.push(h);
        }
        if mismatch {
            report.objects_by_count += 1;
            continue;
        }
        for u in enumerate_bimorphisms(&v, &v, &t, CAN)? {
            report.candidates += 1;
            let step = battery
                .iter()
                .enumerate()
                .find_map(|(k, (name, _))| compare_representation(&u, name, &homs[k], &bims[k]));
            match step {
                Some(f) => report.record(&RefutationStep::NotRepresenting(f)),
                None => report.survivors.push(format!("{:?} with {:?}", t.labels(), u.table)),
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_with_identities_is_refuted() {
        let z = Arc::new(z2());
        let id = Morphism::identity(z.clone());
        let b = coproduct_battery();
        let step = refute_coproduct_candidate(&z, &id, &id, &b).unwrap().unwrap();
        assert!(matches!(step, RefutationStep::CountMismatch { ref test_object, .. } if test_object == "K"));
        assert!(recheck_coproduct_step(&step, &z, &id, &id, &b).unwrap());
    }

    #[test]
    fn klein_coordinate_injections_are_refuted() {
        let v = Arc::new(crate::zoo::klein());
        let z = Arc::new(z2());
        let i1 = Morphism::from_labels(z.clone(), v.clone(), &[("0", "0"), ("1", "a")]).unwrap();
        let i2 = Morphism::from_labels(z, v.clone(), &[("0", "0"), ("1", "b")]).unwrap();
        let b = coproduct_battery();
        let step = refute_coproduct_candidate(&v, &i1, &i2, &b).unwrap().unwrap();
        assert!(recheck_coproduct_step(&step, &v, &i1, &i2, &b).unwrap());
    }

    #[test]
    fn z2_equalizer_candidate() {
        let z = Arc::new(z2());
        let h = Arc::new(f9_hypergroup());
        let one = f9_alpha_pow(0);
        let e = Morphism::new(z.clone(), h, vec![0, one]).unwrap();
        let step = refute_equalizer_candidate(&z, &e).unwrap();
        assert!(matches!(step, RefutationStep::MissingPreimage { .. }));
        assert!(recheck_equalizer_step(&step, &z, &e).unwrap());
    }

    #[test]
    fn non_equalizing_map_errors() {
        let z = Arc::new(z2());
        let h = Arc::new(f9_hypergroup());
        let a = f9_alpha_pow(1);
        // 0 ∈ [α] + [α] in H, so this is a morphism, but F moves [α].
        let e = Morphism::new(z.clone(), h, vec![0, a]).unwrap();
        assert!(matches!(
            refute_equalizer_candidate(&z, &e),
            Err(Error::CandidateDoesNotEqualize(_))
        ));
    }
}
