//! `hyperkit`: check objects, construct new ones, run the verification suite.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use hyperkit::format::{parse_action, ObjectFile};
use hyperkit::hom::Morphism;
use hyperkit::monoidal::{hom_object, tensor, TensorOp};
use hyperkit::suite::{self, SuiteConfig, CHECKS};
use hyperkit::univ;
use hyperkit::zoo::hypergroups::{conjugacy_hypergroup, double_coset_hypergroup, orbit_hypergroup, sign_action};
use hyperkit::zoo::lattice::lattice_mosaic;
use hyperkit::zoo::multiring::{krasner_quotient, Multiring};
use hyperkit::{analyze, matroid, CategoryTag, Carrier, Error, Hypermagma, Subset};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "hyperkit", version, about = "Finite hypermagmas, mosaics and hypergroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the object in a file.
    Check {
        path: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build an object and write it canonically.
    Construct(ConstructArgs),
    /// Run the verification checks.
    PaperSuite {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 6)]
        empty_sum_size: usize,
        /// Number of checks run concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Comma-separated check names.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Include elapsed times (makes output run-dependent).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    verb: Verb,
    /// Output path; the object goes to stdout when absent.
    #[arg(short = 'o', long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// Categorical product with its projections.
    Product { inputs: Vec<PathBuf> },
    /// Coproduct in the tag with its injections.
    Coproduct {
        #[arg(long)]
        tag: CategoryTag,
        inputs: Vec<PathBuf>,
    },
    /// Equalizer of two morphism files.
    Equalizer { f: PathBuf, g: PathBuf },
    /// Coequalizer of two morphism files in the tag.
    Coequalizer {
        #[arg(long)]
        tag: CategoryTag,
        f: PathBuf,
        g: PathBuf,
    },
    /// Unitization collapsing a set of labels.
    Unitize {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
    },
    /// One of the three tensor products.
    Tensor {
        #[arg(long)]
        op: TensorOp,
        left: PathBuf,
        right: PathBuf,
    },
    /// Internal hom object.
    Hom {
        #[arg(long)]
        tag: CategoryTag,
        dom: PathBuf,
        cod: PathBuf,
    },
    /// Free object on generators.
    Free {
        #[arg(long)]
        tag: CategoryTag,
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
    },
    /// Cofree object on a carrier.
    Cofree {
        #[arg(long, value_delimiter = ',')]
        carrier: Vec<String>,
    },
    /// Hypergroup derived from a group.
    FromGroup {
        #[arg(long)]
        construction: Construction,
        input: PathBuf,
        /// Subgroup labels for double cosets.
        #[arg(long, value_delimiter = ',')]
        subgroup: Option<Vec<String>>,
        /// Action file (list of maps) or `neg`.
        #[arg(long)]
        action: Option<String>,
    },
    /// Hyperring from a ring: the ring itself or a quotient by units.
    FromRing {
        input: PathBuf,
        #[arg(long)]
        quotient_units: bool,
        /// Unit-subgroup labels, or `f3x` for the prime-field units.
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Mosaic of the pointed simplification of a matroid.
    FromMatroid { input: PathBuf },
    /// Mosaic of a lattice.
    FromLattice { input: PathBuf },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Construction {
    Dcoset,
    Conj,
    Orbit,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<ObjectFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    ObjectFile::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn object(path: &Path) -> Result<Arc<Hypermagma>, Failure> {
    Ok(Arc::new(read(path)?.to_hypermagma()?))
}

fn morphism(path: &Path) -> Result<Morphism, Failure> {
    Ok(read(path)?.to_morphism()?)
}

/// Reports the flags of a morphism file.
fn check_morphism(f: &Morphism, json: bool) {
    let k = f.kind();
    let flags = [
        ("colax", k.colax),
        ("lax", k.lax),
        ("strict", k.strict),
        ("unital", k.unital),
        ("injective", k.injective),
        ("surjective", k.surjective),
    ];
    let (dom, cod) = (analyze(f.dom()).description(), analyze(f.cod()).description());
    if json {
        let mut v = serde_json::json!({ "kind": "morphism", "dom": dom, "cod": cod, "map": f.render() });
        for (name, b) in flags {
            v[name] = serde_json::Value::Bool(b);
        }
        println!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
        return;
    }
    println!("morphism from {dom} ({}) to {cod} ({}); colax: {}", f.dom().size(), f.cod().size(), k.colax);
    println!("map: {}", f.render());
    for (name, b) in flags {
        println!("{name}: {b}");
    }
}

fn check(path: &Path, json: bool) -> Result<(), Failure> {
    let file = read(path)?;
    if file.kind() == "morphism" {
        check_morphism(&file.to_morphism()?, json);
        return Ok(());
    }
    let m = file.to_hypermagma()?;
    let r = analyze(&m);
    if json {
        let witnesses: Vec<serde_json::Value> = r
            .witnesses
            .iter()
            .map(|w| serde_json::json!({ "axiom": w.axiom.name(), "labels": w.tuple.iter().map(|&i| m.label(i)).collect::<Vec<_>>() }))
            .collect();
        let v = serde_json::json!({
            "kind": file.kind(),
            "size": r.size,
            "classification": r.description(),
            "identity": r.has_identity.map(|e| m.label(e)),
            "total": r.total,
            "commutative": r.commutative,
            "associative": r.associative,
            "single_valued": r.single_valued,
            "unique_inverses": r.unique_inverses,
            "reversible": r.reversible,
            "witnesses": witnesses,
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
        return Ok(());
    }
    let mut head = vec![r.description().to_string(), format!("associative: {}", r.associative)];
    if let Some(w) = r.witness(hyperkit::axioms::Axiom::Associative) {
        head.push(format!("witness {}", w.render(&m)));
    }
    println!("{}", head.join("; "));
    println!("size: {}", r.size);
    println!("identity: {}", r.has_identity.map_or("none", |e| m.label(e)));
    for (name, v) in [
        ("total", r.total),
        ("commutative", r.commutative),
        ("single-valued", r.single_valued),
        ("unique inverses", r.unique_inverses),
        ("reversible", r.reversible),
    ] {
        println!("{name}: {v}");
    }
    for w in &r.witnesses {
        println!("witness {}: {}", w.axiom.name(), w.render(&m));
    }
    Ok(())
}

/// Writes the object and its accompanying morphisms.
fn emit(out: Option<&Path>, obj: &Hypermagma, maps: &[(String, &Morphism)]) -> Result<(), Failure> {
    let text = ObjectFile::from_hypermagma(obj).to_canonical();
    let Some(out) = out else {
        print!("{text}");
        return Ok(());
    };
    let write = |p: &Path, t: &str| fs::write(p, t).map_err(|e| usage(format!("cannot write {}: {e}", p.display())));
    write(out, &text)?;
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    for (role, m) in maps {
        let p = out.with_file_name(format!("{stem}.{role}.json"));
        write(&p, &ObjectFile::from_morphism(m).to_canonical())?;
    }
    Ok(())
}

fn legs(prefix: &str, ms: &[Morphism]) -> Vec<(String, Morphism)> {
    ms.iter().enumerate().map(|(i, m)| (format!("{prefix}{i}"), m.clone())).collect()
}

fn construct(args: ConstructArgs) -> Result<(), Failure> {
    let out = args.out.as_deref();
    let (obj, maps): (Arc<Hypermagma>, Vec<(String, Morphism)>) = match args.verb {
        Verb::Product { inputs } => {
            let ms = inputs.iter().map(|p| object(p)).collect::<Result<Vec<_>, _>>()?;
            let c = univ::product(&ms)?;
            (c.apex.clone(), legs("proj", &c.legs))
        }
        Verb::Coproduct { tag, inputs } => {
            let ms = inputs.iter().map(|p| object(p)).collect::<Result<Vec<_>, _>>()?;
            let c = univ::coproduct(&ms, tag)?;
            (c.apex.clone(), legs("inj", &c.legs))
        }
        Verb::Equalizer { f, g } => {
            let c = univ::equalizer(&morphism(&f)?, &morphism(&g)?)?;
            (c.apex.clone(), legs("incl", &c.legs))
        }
        Verb::Coequalizer { tag, f, g } => {
            let q = univ::coequalizer(&morphism(&f)?, &morphism(&g)?, tag)?;
            (q.cod().clone(), vec![("quotient".into(), q.morphism.clone())])
        }
        Verb::Unitize { input, set } => {
            let m = object(&input)?;
            let e = m.carrier().subset_of(&set)?;
            let q = univ::unitize(&m, e)?;
            (q.cod().clone(), vec![("quotient".into(), q.morphism.clone())])
        }
        Verb::Tensor { op, left, right } => {
            let t = tensor(op, &object(&left)?, &object(&right)?)?;
            let maps = t.quotient.iter().map(|q| ("quotient".to_string(), q.morphism.clone())).collect();
            (t.object.clone(), maps)
        }
        Verb::Hom { tag, dom, cod } => (hom_object(&object(&dom)?, &object(&cod)?, tag)?.object, vec![]),
        Verb::Free { tag, gens } => {
            let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
            (Arc::new(univ::free(tag, &gens)?), vec![])
        }
        Verb::Cofree { carrier } => (Arc::new(univ::cofree(Carrier::new(carrier)?)?), vec![]),
        Verb::FromGroup {
            construction,
            input,
            subgroup,
            action,
        } => {
            let g = read(&input)?.to_group()?;
            let h = match construction {
                Construction::Dcoset => {
                    let labels = subgroup.ok_or_else(|| usage("dcoset needs --subgroup"))?;
                    double_coset_hypergroup(&g, g.carrier().subset_of(&labels)?)?
                }
                Construction::Conj => conjugacy_hypergroup(&g)?,
                Construction::Orbit => {
                    let spec = action.ok_or_else(|| usage("orbit needs --action"))?;
                    let maps = if spec == "neg" {
                        sign_action(&g)
                    } else {
                        let text = fs::read_to_string(&spec).map_err(|e| usage(format!("cannot read {spec}: {e}")))?;
                        parse_action(&text, g.carrier()).map_err(|e| usage(e.to_string()))?
                    };
                    orbit_hypergroup(&g, &maps)?
                }
            };
            (Arc::new(h), vec![])
        }
        Verb::FromRing {
            input,
            quotient_units,
            subgroup,
        } => {
            let r = read(&input)?.to_ring()?;
            let m = if quotient_units {
                let spec = subgroup.ok_or_else(|| usage("--quotient-units needs --subgroup"))?;
                let g: Subset = if spec == "f3x" {
                    r.prime_subfield_units()
                } else {
                    let labels: Vec<&str> = spec.split(',').collect();
                    r.carrier().subset_of(&labels)?
                };
                krasner_quotient(&r, g)?
            } else {
                Multiring::from_ring(&r)?
            };
            (m.additive.clone(), vec![])
        }
        Verb::FromMatroid { input } => {
            let m = read(&input)?.to_matroid()?;
            let simple = if m.is_simple_pointed() { m } else { matroid::simplify(&m, true)?.matroid };
            (Arc::new(matroid::matroid_to_mosaic(&simple)?), vec![])
        }
        Verb::FromLattice { input } => (Arc::new(lattice_mosaic(&read(&input)?.to_lattice()?)?), vec![]),
    };
    let refs: Vec<(String, &Morphism)> = maps.iter().map(|(r, m)| (r.clone(), m)).collect();
    emit(out, &obj, &refs)
}

fn paper_suite(
    cfg: SuiteConfig,
    jobs: usize,
    only: Option<Vec<String>>,
    timings: bool,
    json: bool,
) -> Result<bool, Failure> {
    if let Some(o) = &only {
        if let Some(bad) = o.iter().find(|n| !CHECKS.contains(&n.as_str())) {
            return Err(usage(format!("unknown check {bad}; known: {}", CHECKS.join(", "))));
        }
    }
    let selected: Vec<&str> = CHECKS
        .iter()
        .copied()
        .filter(|c| only.as_ref().is_none_or(|o| o.iter().any(|x| x == c)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| usage(e.to_string()))?;
    let results = pool.install(|| selected.par_iter().map(|c| suite::run_check(c, &cfg)).collect::<Vec<_>>());
    let mut all = Vec::new();
    for r in results {
        all.push(r.map_err(|e| Failure {
            code: 2,
            message: format!("internal error: {}: {e}", e.name()),
        })?);
    }
    let passed = all.iter().all(|r| r.passed && r.within_budget());
    if json {
        let v: Vec<serde_json::Value> = all
            .iter()
            .map(|r| {
                let mut v = serde_json::json!({ "name": r.name, "passed": r.passed && r.within_budget(), "lines": r.lines });
                if timings {
                    v["elapsed_ms"] = r.elapsed_ms.into();
                    v["budget_ms"] = r.budget_ms.into();
                }
                v
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&v).expect("results serialize"));
    } else {
        for r in &all {
            if timings {
                println!("{}", r.summary());
            } else {
                println!("{} {}", if r.passed && r.within_budget() { "PASS" } else { "FAIL" }, r.name);
            }
            for l in &r.lines {
                println!("    {l}");
            }
        }
        let failed = all.iter().filter(|r| !(r.passed && r.within_budget())).count();
        println!("{} of {} checks passed", all.len() - failed, all.len());
    }
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { path, json } => check(&path, json).map(|_| true),
        Command::Construct(args) => construct(args).map(|_| true),
        Command::PaperSuite {
            max_size,
            empty_sum_size,
            jobs,
            only,
            timings,
            json,
        } => paper_suite(SuiteConfig { max_size, empty_sum_size }, jobs, only, timings, json),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
