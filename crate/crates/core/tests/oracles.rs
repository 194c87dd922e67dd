//! Independent brute-force oracles for enumerated values. None of these use
//! the library's axiom checker or morphism enumerator on the side being
//! tested.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::sync::Arc;

use hyperkit::hom::{enumerate_maps, CategoryTag};
use hyperkit::monoidal::{enumerate_bimorphisms, hom_object, strict_classifier_check};
use hyperkit::zoo::{self, lattice, search};
use hyperkit::{Hypermagma, Subset};

/// Table as bitmasks, `t[x][y]`.
fn masks(m: &Hypermagma) -> Vec<Vec<u32>> {
    let n = m.size();
    (0..n)
        .map(|x| (0..n).map(|y| m.op(x, y).low_bits() as u32).collect())
        .collect()
}

fn set_sum(t: &[Vec<u32>], a: u32, b: u32) -> u32 {
    let mut out = 0;
    for x in 0..t.len() {
        if a >> x & 1 == 1 {
            for y in 0..t.len() {
                if b >> y & 1 == 1 {
                    out |= t[x][y];
                }
            }
        }
    }
    out
}

/// Canonical hypergroup with identity 0, from first principles.
fn is_canonical(t: &[Vec<u32>]) -> bool {
    let n = t.len();
    for x in 0..n {
        if t[0][x] != 1 << x || t[x][0] != 1 << x {
            return false;
        }
        for y in 0..n {
            if t[x][y] != t[y][x] || t[x][y] == 0 {
                return false;
            }
        }
    }
    let mut inv = vec![0; n];
    for x in 0..n {
        let ys: Vec<usize> = (0..n).filter(|&y| t[x][y] & 1 == 1).collect();
        if ys.len() != 1 {
            return false;
        }
        inv[x] = ys[0];
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // z ∈ x + y ⟹ x ∈ z + (−y).
                if t[x][y] >> z & 1 == 1 && t[z][inv[y]] >> x & 1 == 0 {
                    return false;
                }
                if set_sum(t, t[x][y], 1 << z) != set_sum(t, 1 << x, t[y][z]) {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn canonical_code(t: &[Vec<u32>], perms: &[Vec<usize>]) -> Vec<u32> {
    let n = t.len();
    perms
        .iter()
        .map(|p| {
            let mut code = vec![0u32; n * n];
            for x in 0..n {
                for y in 0..n {
                    let mut s = 0;
                    for z in 0..n {
                        if t[x][y] >> z & 1 == 1 {
                            s |= 1 << p[z];
                        }
                    }
                    code[p[x] * n + p[y]] = s;
                }
            }
            code
        })
        .min()
        .unwrap()
}

/// Canonical hypergroups of order `n` up to isomorphism, by enumerating
/// every symmetric table with identity 0.
fn brute_force_canonical(n: usize) -> usize {
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
    let rest: Vec<usize> = (1..n).collect();
    let perms: Vec<Vec<usize>> = permutations(&rest)
        .into_iter()
        .map(|p| std::iter::once(0).chain(p).collect())
        .collect();
    let mut seen = BTreeSet::new();
    let values = 1u64 << n;
    let total = values.pow(cells.len() as u32);
    let mut t = vec![vec![0u32; n]; n];
    for x in 0..n {
        t[0][x] = 1 << x;
        t[x][0] = 1 << x;
    }
    for code in 0..total {
        let mut c = code;
        for &(x, y) in &cells {
            let v = (c % values) as u32;
            c /= values;
            t[x][y] = v;
            t[y][x] = v;
        }
        if is_canonical(&t) {
            seen.insert(canonical_code(&t, &perms));
        }
    }
    seen.len()
}

#[test]
fn canonical_hypergroup_counts_match_brute_force() {
    for n in 1..=4 {
        let lib = search::canonical_hypergroups(n).unwrap().len();
        assert_eq!(lib, brute_force_canonical(n), "order {n}");
    }
    assert_eq!(brute_force_canonical(3), 10);
}

/// `f: M → N` colax and, if `unital`, identity-preserving; from the tables.
fn colax(m: &Hypermagma, n: &Hypermagma, f: &[usize], unital: bool) -> bool {
    if unital && m.identity().map(|e| f[e]) != n.identity() {
        return false;
    }
    (0..m.size()).all(|x| {
        (0..m.size()).all(|y| m.op(x, y).iter().all(|z| n.op(f[x], f[y]).contains(f[z])))
    })
}

fn all_maps(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for code in 0..k.pow(n as u32) {
        let mut c = code;
        out.push((0..n).map(|_| { let v = c % k; c /= k; v }).collect());
    }
    out
}

fn small() -> Vec<Hypermagma> {
    let mut v: Vec<Hypermagma> = zoo::battery()
        .into_iter()
        .filter(|(_, m)| m.size() <= 4)
        .map(|(_, m)| m.as_ref().clone())
        .collect();
    v.extend(search::canonical_hypergroups(3).unwrap());
    v.push(hyperkit::univ::empty_square_point());
    v.push(hyperkit::univ::free(CategoryTag::UHMag, &["a"]).unwrap());
    v
}

#[test]
fn hom_sets_match_brute_force() {
    let objs = small();
    for a in &objs {
        for b in &objs {
            for (tag, unital) in [(CategoryTag::HMag, false), (CategoryTag::UHMag, true)] {
                if unital && !(a.is_unital() && b.is_unital()) {
                    continue;
                }
                let lib: BTreeSet<Vec<usize>> = enumerate_maps(a, b, tag, false).unwrap().into_iter().collect();
                let brute: BTreeSet<Vec<usize>> = all_maps(a.size(), b.size())
                    .into_iter()
                    .filter(|f| colax(a, b, f, unital))
                    .collect();
                assert_eq!(lib, brute, "{:?} -> {:?} in {tag:?}", a.labels(), b.labels());
            }
        }
    }
}

#[test]
fn can_z2_counts_self_inverse_elements() {
    let z = zoo::z2();
    for h in search::canonical_hypergroups(4).unwrap() {
        let t = masks(&h);
        let involutions = (0..h.size()).filter(|&x| t[x][x] & 1 == 1).count();
        assert_eq!(enumerate_maps(&z, &h, CategoryTag::Can, false).unwrap().len(), involutions);
    }
}

#[test]
fn klein_bimorphisms_match_full_table_enumeration() {
    let v = Arc::new(zoo::klein());
    // Every table V × V → K, each row and column checked as a map.
    let k = Arc::new(zoo::krasner());
    let slice_ok = |table: &[usize], l: &Hypermagma| {
        (0..4).all(|x| {
            let row: Vec<usize> = (0..4).map(|y| table[x * 4 + y]).collect();
            let col: Vec<usize> = (0..4).map(|y| table[y * 4 + x]).collect();
            colax(&v, l, &row, true) && colax(&v, l, &col, true)
        })
    };
    let brute_k: BTreeSet<Vec<usize>> = all_maps(16, 2).into_iter().filter(|t| slice_ok(t, &k)).collect();
    let lib_k: BTreeSet<Vec<usize>> = enumerate_bimorphisms(&v, &v, &k, CategoryTag::Can)
        .unwrap()
        .into_iter()
        .map(|b| b.table)
        .collect();
    assert_eq!(lib_k, brute_k);
    assert_eq!(lib_k.len(), 50);
    // Into V, the zero row and column are forced by unitality.
    let brute_v = all_maps(9, 4)
        .into_iter()
        .map(|inner| {
            let mut t = vec![0; 16];
            for i in 0..3 {
                for j in 0..3 {
                    t[(i + 1) * 4 + j + 1] = inner[i * 3 + j];
                }
            }
            t
        })
        .filter(|t| slice_ok(t, &v))
        .count();
    assert_eq!(enumerate_bimorphisms(&v, &v, &v, CategoryTag::Can).unwrap().len(), brute_v);
}

#[test]
fn strict_classifier_matches_brute_force() {
    let k = zoo::krasner();
    for (_, m) in zoo::battery() {
        if !hyperkit::axioms::analyze(&m).classification.is_mosaic() {
            continue;
        }
        let n = m.size();
        let e = m.identity().unwrap();
        let to_k = all_maps(n, 2).into_iter().filter(|f| colax(&m, &k, f, true)).count();
        let t = masks(&m);
        // Strict subs: contain 0, closed under sums and inverses.
        let subs = (0u32..1 << n)
            .filter(|s| s >> e & 1 == 1)
            .filter(|&s| {
                (0..n).all(|x| {
                    s >> x & 1 == 0
                        || ((0..n).all(|y| s >> y & 1 == 0 || t[x][y] & !s == 0)
                            && (0..n).any(|y| s >> y & 1 == 1 && t[x][y] >> e & 1 == 1))
                })
            })
            .count();
        let c = strict_classifier_check(&m).unwrap();
        assert_eq!((c.subs.len(), c.morphisms.len()), (subs, to_k));
    }
}

/// Lattices on `n` labelled points from partial orders, up to isomorphism.
fn brute_force_lattices(n: usize) -> (usize, usize) {
    let perms = permutations(&(0..n).collect::<Vec<_>>());
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::new();
    let mut modular = BTreeSet::new();
    for bits in 0u64..1 << pairs.len() {
        let mut le = vec![vec![false; n]; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            le[a][b] = bits >> i & 1 == 1;
        }
        for (a, row) in le.iter_mut().enumerate() {
            row[a] = true;
        }
        let order = (0..n).all(|a| {
            (0..n).all(|b| (a == b || !(le[a][b] && le[b][a])) && (0..n).all(|c| !(le[a][b] && le[b][c]) || le[a][c]))
        });
        if !order {
            continue;
        }
        let glb = |a: usize, b: usize| {
            let lower: Vec<usize> = (0..n).filter(|&c| le[c][a] && le[c][b]).collect();
            lower.iter().copied().find(|&c| lower.iter().all(|&d| le[d][c]))
        };
        let lub = |a: usize, b: usize| {
            let upper: Vec<usize> = (0..n).filter(|&c| le[a][c] && le[b][c]).collect();
            upper.iter().copied().find(|&c| upper.iter().all(|&d| le[c][d]))
        };
        let is_lattice = (0..n).all(|a| (0..n).all(|b| glb(a, b).is_some() && lub(a, b).is_some()));
        if !is_lattice {
            continue;
        }
        let code = perms
            .iter()
            .map(|p| {
                let mut c = 0u64;
                for a in 0..n {
                    for b in 0..n {
                        if le[a][b] {
                            c |= 1 << (p[a] * n + p[b]);
                        }
                    }
                }
                c
            })
            .min()
            .unwrap();
        let m = |a, b| glb(a, b).unwrap();
        let j = |a, b| lub(a, b).unwrap();
        let is_mod = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !le[a][c] || j(a, m(b, c)) == m(j(a, b), c)))
        });
        seen.insert(code);
        if is_mod {
            modular.insert(code);
        }
    }
    (seen.len(), modular.len())
}

#[test]
fn lattice_counts_match_brute_force() {
    for n in 1..=5 {
        let ls = lattice::all_lattices(n).unwrap();
        let modular = ls.iter().filter(|l| l.is_modular()).count();
        assert_eq!((ls.len(), modular), brute_force_lattices(n), "size {n}");
    }
}

#[test]
fn empty_sum_witness_rechecked_from_tables() {
    let search::EmptySumOutcome::Found(w) = search::empty_sum_search(5).unwrap() else {
        panic!("a witness exists at size 5");
    };
    let h = &w.hypergroup;
    let t = masks(h);
    assert!(is_canonical(&t));
    // f + g in the hom object: maps h with h(x) ∈ f(x) + g(x) for all x.
    let z = zoo::z2();
    let homs: Vec<Vec<usize>> = all_maps(2, h.size()).into_iter().filter(|f| colax(&z, h, f, true)).collect();
    assert!(homs.contains(&w.f) && homs.contains(&w.g));
    let sum: Vec<&Vec<usize>> = homs
        .iter()
        .filter(|k| (0..2).all(|x| t[w.f[x]][w.g[x]] >> k[x] & 1 == 1))
        .collect();
    assert!(sum.is_empty());
    let hobj = hom_object(&Arc::new(z), h, CategoryTag::Can).unwrap();
    let (fi, gi) = (hobj.element(&w.f).unwrap(), hobj.element(&w.g).unwrap());
    assert_eq!(hobj.object.op(fi, gi), Subset::EMPTY);
}
