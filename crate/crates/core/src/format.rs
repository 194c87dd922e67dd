//! JSON object files with a canonical writer.
//!
//! Every table entry is explicit; an empty product is an empty array.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom::Morphism;
use crate::magma::{Carrier, Hypermagma};
use crate::matroid::{self, Matroid};
use crate::subset::Subset;
use crate::zoo::group::{FiniteGroup, FiniteRing};
use crate::zoo::lattice::{lattice_mosaic, Lattice};

/// One entry of a rank-function listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankEntry {
    pub set: Vec<String>,
    pub rank: usize,
}

/// A parsed object file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ObjectFile {
    Hypermagma {
        carrier: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        identity: Option<String>,
        table: Vec<Vec<Vec<String>>>,
    },
    Group {
        carrier: Vec<String>,
        table: Vec<Vec<String>>,
    },
    Ring {
        carrier: Vec<String>,
        add: Vec<Vec<String>>,
        mul: Vec<Vec<String>>,
    },
    Matroid {
        ground: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        point: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        flats: Option<Vec<Vec<String>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rank: Option<Vec<RankEntry>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        independent: Option<Vec<Vec<String>>>,
    },
    Lattice {
        carrier: Vec<String>,
        meet: Vec<Vec<String>>,
        top: String,
    },
    /// A map between two embedded hypermagma objects.
    Morphism {
        dom: Box<ObjectFile>,
        cod: Box<ObjectFile>,
        map: Vec<String>,
    },
}

fn labels(ls: &[String]) -> Vec<String> {
    ls.to_vec()
}

fn square<'a, T>(table: &'a [Vec<T>], n: usize, what: &str) -> Result<&'a [Vec<T>]> {
    if table.len() != n || table.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("{what} must be a {n} x {n} array")));
    }
    Ok(table)
}

fn single_valued(c: &Carrier, table: &[Vec<String>], what: &str) -> Result<Vec<usize>> {
    square(table, c.len(), what)?
        .iter()
        .flatten()
        .map(|l| c.require(l))
        .collect()
}

fn subset(c: &Carrier, ls: &[String]) -> Result<Subset> {
    c.subset_of(ls)
}

fn show(c: &Carrier, s: Subset) -> Vec<String> {
    s.iter().map(|i| c.label(i).to_string()).collect()
}

impl ObjectFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical serialization: JSON with two-space indentation, arrays of
    /// scalars on one line, arrays of short scalar arrays on one line, and a
    /// trailing newline.
    pub fn to_canonical(&self) -> String {
        let v = serde_json::to_value(self).expect("object files serialize");
        let mut s = String::new();
        render(&v, 0, &mut s);
        s.push('\n');
        s
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ObjectFile::Hypermagma { .. } => "hypermagma",
            ObjectFile::Group { .. } => "group",
            ObjectFile::Ring { .. } => "ring",
            ObjectFile::Matroid { .. } => "matroid",
            ObjectFile::Lattice { .. } => "lattice",
            ObjectFile::Morphism { .. } => "morphism",
        }
    }

    pub fn from_hypermagma(m: &Hypermagma) -> Self {
        let n = m.size();
        ObjectFile::Hypermagma {
            carrier: labels(m.labels()),
            identity: m.identity().map(|e| m.label(e).to_string()),
            table: (0..n)
                .map(|x| (0..n).map(|y| show(m.carrier(), m.op(x, y))).collect())
                .collect(),
        }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        let n = g.size();
        ObjectFile::Group {
            carrier: labels(g.carrier().labels()),
            table: (0..n)
                .map(|a| (0..n).map(|b| g.label(g.op(a, b)).to_string()).collect())
                .collect(),
        }
    }

    pub fn from_ring(r: &FiniteRing) -> Self {
        let n = r.size();
        let tab = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<String>> {
            (0..n)
                .map(|a| (0..n).map(|b| r.label(f(a, b)).to_string()).collect())
                .collect()
        };
        ObjectFile::Ring {
            carrier: labels(r.carrier().labels()),
            add: tab(&|a, b| r.add(a, b)),
            mul: tab(&|a, b| r.mul(a, b)),
        }
    }

    pub fn from_matroid(m: &Matroid) -> Self {
        ObjectFile::Matroid {
            ground: labels(m.ground.labels()),
            point: m.point.map(|p| m.ground.label(p).to_string()),
            flats: Some(m.flats.iter().map(|f| show(&m.ground, *f)).collect()),
            rank: None,
            independent: None,
        }
    }

    pub fn from_lattice(l: &Lattice) -> Self {
        let n = l.size();
        ObjectFile::Lattice {
            carrier: labels(l.carrier.labels()),
            meet: (0..n)
                .map(|a| (0..n).map(|b| l.carrier.label(l.meet(a, b)).to_string()).collect())
                .collect(),
            top: l.carrier.label(l.top).to_string(),
        }
    }

    pub fn from_morphism(f: &Morphism) -> Self {
        ObjectFile::Morphism {
            dom: Box::new(Self::from_hypermagma(f.dom())),
            cod: Box::new(Self::from_hypermagma(f.cod())),
            map: f.map().iter().map(|&y| f.cod().label(y).to_string()).collect(),
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        match self {
            ObjectFile::Group { carrier, table } => {
                let c = Carrier::new(labels(carrier))?;
                let t = single_valued(&c, table, "group table")?;
                FiniteGroup::new(c, t)
            }
            _ => Err(Error::Parse(format!("expected a group, found {}", self.kind()))),
        }
    }

    pub fn to_ring(&self) -> Result<FiniteRing> {
        match self {
            ObjectFile::Ring { carrier, add, mul } => {
                let c = Carrier::new(labels(carrier))?;
                let a = single_valued(&c, add, "add table")?;
                let m = single_valued(&c, mul, "mul table")?;
                FiniteRing::new(c, a, m)
            }
            _ => Err(Error::Parse(format!("expected a ring, found {}", self.kind()))),
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        match self {
            ObjectFile::Lattice { carrier, meet, top } => {
                let c = Carrier::new(labels(carrier))?;
                let m = single_valued(&c, meet, "meet table")?;
                let t = c.require(top)?;
                Lattice::new(c, m, t)
            }
            _ => Err(Error::Parse(format!("expected a lattice, found {}", self.kind()))),
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        let ObjectFile::Matroid {
            ground,
            point,
            flats,
            rank,
            independent,
        } = self
        else {
            return Err(Error::Parse(format!("expected a matroid, found {}", self.kind())));
        };
        let g = Carrier::new(labels(ground))?;
        let p = point.as_deref().map(|l| g.require(l)).transpose()?;
        match (flats, rank, independent) {
            (Some(fs), None, None) => {
                let fs = fs.iter().map(|f| subset(&g, f)).collect::<Result<_>>()?;
                Matroid::from_flats(g, fs, p)
            }
            (None, Some(rs), None) => {
                let n = g.len();
                if n > matroid::CONVERSION_CAP {
                    return Err(Error::CarrierTooLarge {
                        size: n,
                        limit: matroid::CONVERSION_CAP,
                    });
                }
                let mut table = vec![None; 1 << n];
                for e in rs {
                    let s = subset(&g, &e.set)?.low_bits() as usize;
                    if table[s].replace(e.rank).is_some() {
                        return Err(Error::Parse(format!("rank of {:?} given twice", e.set)));
                    }
                }
                let table: Vec<usize> = table
                    .into_iter()
                    .enumerate()
                    .map(|(s, r)| r.ok_or_else(|| Error::Parse(format!("rank missing for {:?}", show(&g, Subset::from_bits(s as u64))))))
                    .collect::<Result<_>>()?;
                Matroid::from_rank(g, |s| table[s.low_bits() as usize], p)
            }
            (None, None, Some(is)) => {
                let is: Vec<Subset> = is.iter().map(|i| subset(&g, i)).collect::<Result<_>>()?;
                Matroid::from_independent(g, &is, p)
            }
            _ => Err(Error::Parse(
                "a matroid needs exactly one of flats, rank, independent".into(),
            )),
        }
    }

    /// The hypermagma an object denotes: groups and rings by their
    /// (additive) group, lattices by their mosaic, matroids by the mosaic of
    /// their pointed simplification.
    pub fn to_hypermagma(&self) -> Result<Hypermagma> {
        match self {
            ObjectFile::Hypermagma {
                carrier,
                identity,
                table,
            } => {
                let c = Carrier::new(labels(carrier))?;
                let t = square(table, c.len(), "table")?
                    .iter()
                    .flatten()
                    .map(|cell| subset(&c, cell))
                    .collect::<Result<Vec<_>>>()?;
                let e = identity.as_deref().map(|l| c.require(l)).transpose()?;
                Hypermagma::new(c, t, e)
            }
            ObjectFile::Group { .. } => Ok(self.to_group()?.to_hypermagma()),
            ObjectFile::Ring { .. } => Ok(self.to_ring()?.additive_group().to_hypermagma()),
            ObjectFile::Lattice { .. } => lattice_mosaic(&self.to_lattice()?),
            ObjectFile::Matroid { .. } => {
                let m = self.to_matroid()?;
                let simple = if m.is_simple_pointed() {
                    m
                } else {
                    matroid::simplify(&m, true)?.matroid
                };
                matroid::matroid_to_mosaic(&simple)
            }
            ObjectFile::Morphism { .. } => Err(Error::Parse("expected an object, found a morphism".into())),
        }
    }

    pub fn to_morphism(&self) -> Result<Morphism> {
        match self {
            ObjectFile::Morphism { dom, cod, map } => {
                let d = Arc::new(dom.to_hypermagma()?);
                let c = Arc::new(cod.to_hypermagma()?);
                if map.len() != d.size() {
                    return Err(Error::DimensionMismatch(format!(
                        "map has {} entries for a domain of size {}",
                        map.len(),
                        d.size()
                    )));
                }
                let m = map.iter().map(|l| c.carrier().require(l)).collect::<Result<_>>()?;
                Morphism::new(d, c, m)
            }
            _ => Err(Error::Parse(format!("expected a morphism, found {}", self.kind()))),
        }
    }
}

fn is_flat(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Array(xs) => xs.iter().all(|x| !x.is_array() && !x.is_object()),
        serde_json::Value::Object(_) => false,
        _ => true,
    }
}

/// Arrays of arrays wider than this are written one element per line.
const INLINE_WIDTH: usize = 100;

fn inline_width(xs: &[serde_json::Value]) -> usize {
    if xs.iter().all(|x| !x.is_array()) {
        return 0;
    }
    xs.iter().map(|x| serde_json::to_string(x).expect("values serialize").len() + 2).sum()
}

fn render(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(xs) if xs.iter().all(is_flat) && inline_width(xs) <= INLINE_WIDTH => {
            out.push('[');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                render(x, depth, out);
            }
            out.push(']');
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                render(x, depth + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                render(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("values serialize")),
    }
}

/// Reads a list of maps, each the images of the carrier in order.
pub fn parse_action(text: &str, carrier: &Carrier) -> Result<Vec<Vec<usize>>> {
    let raw: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.iter()
        .map(|m| {
            if m.len() != carrier.len() {
                return Err(Error::DimensionMismatch("action map has the wrong length".into()));
            }
            m.iter().map(|l| carrier.require(l)).collect()
        })
        .collect()
}
