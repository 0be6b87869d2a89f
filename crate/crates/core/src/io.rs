//! JSON formats and command execution behind the `bergman` binary.
//!
//! Labels are 1-based everywhere in JSON and on the command line. Output
//! objects go through `serde_json::Value`, whose maps keep keys sorted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complexes::{
    bergman_complex, matroid_type_from_flats, matroid_type_oracle, refinement_audit,
    BergmanComplex, MatroidType, WeightVector,
};
use crate::decomposition::{coarseness_all, decompose_face, verify_finest, Decomposition};
use crate::error::Error;
use crate::lattice::{lattice_of_flats, SimplicialComplex};
use crate::matroid::Matroid;
use crate::subset::{GroundSubset, MAX_GROUND};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Invalid(#[from] Error),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    Io(String),
    #[error("regenerated {0} differs from its golden file")]
    GoldenMismatch(String),
}

impl CliError {
    /// 2 for I/O failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 2,
            _ => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Invalid(e) => e.code(),
            CliError::Malformed(_) => "MalformedInput",
            CliError::Io(_) => "Io",
            CliError::GoldenMismatch(_) => "GoldenMismatch",
        }
    }

    /// `{"error": code, "witness": ...}`.
    pub fn to_json(&self) -> Value {
        let witness = match self {
            CliError::Invalid(e) => json!(e.witness()),
            CliError::GoldenMismatch(name) => json!([name]),
            CliError::Malformed(_) | CliError::Io(_) => json!([]),
        };
        json!({ "error": self.code(), "witness": witness })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasesJson {
    pub bases: Vec<Vec<usize>>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitsJson {
    pub circuits: Vec<Vec<usize>>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniformJson {
    pub uniform: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Graph {
    pub edges: Vec<[usize; 2]>,
    pub vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphicJson {
    pub graphic: Graph,
}

/// The four accepted matroid encodings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidJson {
    Bases(BasesJson),
    Circuits(CircuitsJson),
    Uniform(UniformJson),
    Graphic(GraphicJson),
}

fn subset_from_labels(n: usize, labels: &[usize]) -> Result<GroundSubset, Error> {
    GroundSubset::from_labels(n, labels).map_err(|label| Error::ElementOutOfRange { label, n })
}

fn subsets_from_labels(n: usize, lists: &[Vec<usize>]) -> Result<Vec<GroundSubset>, Error> {
    if n > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(n));
    }
    lists.iter().map(|l| subset_from_labels(n, l)).collect()
}

impl MatroidJson {
    pub fn to_matroid(&self) -> Result<Matroid, Error> {
        match self {
            MatroidJson::Bases(b) => Matroid::from_bases(b.n, subsets_from_labels(b.n, &b.bases)?),
            MatroidJson::Circuits(c) => {
                Matroid::from_circuits(c.n, subsets_from_labels(c.n, &c.circuits)?)
            }
            MatroidJson::Uniform(u) => Matroid::uniform(u.uniform[0], u.uniform[1]),
            MatroidJson::Graphic(g) => {
                let v = g.graphic.vertices;
                let edges = g
                    .graphic
                    .edges
                    .iter()
                    .map(|&[a, b]| match (a, b) {
                        (1.., 1..) if a <= v && b <= v => Ok((a - 1, b - 1)),
                        _ => Err(Error::ElementOutOfRange {
                            label: if (1..=v).contains(&a) { b } else { a },
                            n: v,
                        }),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Matroid::graphic(v, &edges)
            }
        }
    }

    /// Basis-list encoding with every array sorted.
    pub fn from_matroid(m: &Matroid) -> MatroidJson {
        MatroidJson::Bases(BasesJson {
            bases: label_lists(m.bases()),
            n: m.n(),
        })
    }
}

/// Reads a matroid from JSON text.
pub fn parse_matroid(text: &str) -> Result<Matroid, CliError> {
    let parsed: MatroidJson =
        serde_json::from_str(text).map_err(|e| CliError::Malformed(e.to_string()))?;
    Ok(parsed.to_matroid()?)
}

/// Sorted label lists, one per subset.
pub fn label_lists(sets: &[GroundSubset]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = sets.iter().map(|s| s.labels()).collect();
    out.sort();
    out
}

/// Label lists in the given order.
fn labels_in_order(sets: &[GroundSubset]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.labels()).collect()
}

/// Parses `1;2;1234;1256` (digit strings, ground sets of at most nine
/// elements) or `[1,2];[10,11]`. `[]` is the empty set.
pub fn parse_flat_list(n: usize, text: &str) -> Result<Vec<GroundSubset>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|item| {
            let item = item.trim();
            let labels: Vec<usize> = if let Some(inner) = item.strip_prefix('[') {
                let inner = inner
                    .strip_suffix(']')
                    .ok_or_else(|| CliError::Malformed(format!("unclosed bracket in {item:?}")))?;
                inner
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse()
                            .map_err(|_| CliError::Malformed(format!("bad label {s:?}")))
                    })
                    .collect::<Result<_, _>>()?
            } else {
                if n > 9 {
                    return Err(CliError::Malformed(format!(
                        "{item:?}: digit notation needs at most 9 elements, use [a,b,..]"
                    )));
                }
                item.chars()
                    .map(|c| {
                        c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                            CliError::Malformed(format!("bad label {c:?} in {item:?}"))
                        })
                    })
                    .collect::<Result<_, _>>()?
            };
            Ok(subset_from_labels(n, &labels)?)
        })
        .collect()
}

/// Parses comma-separated integer weights.
pub fn parse_weights(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Malformed(format!("bad weight {s:?}")))
        })
        .collect()
}

/// `{"faces", "maximal", "vertices"}`; faces index into `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub faces: Vec<Vec<usize>>,
    pub maximal: Vec<usize>,
    pub vertices: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            faces: c.faces.clone(),
            maximal: c.maximal.clone(),
            vertices: labels_in_order(&c.vertices),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BergmanFaceJson {
    pub bases: Vec<Vec<usize>>,
    pub dimension: isize,
    pub vertices: Vec<usize>,
}

/// Bergman face poset. `faces[0]` is the empty face; `covers` are pairs
/// `[i, j]` where face `i` is a facet of face `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BergmanJson {
    pub covers: Vec<[usize; 2]>,
    pub faces: Vec<BergmanFaceJson>,
    pub facet_census: BTreeMap<usize, usize>,
    pub maximal: Vec<usize>,
    pub vertices: Vec<Vec<usize>>,
}

impl From<&BergmanComplex<'_>> for BergmanJson {
    fn from(c: &BergmanComplex<'_>) -> Self {
        let position = |f: &GroundSubset| c.flacets.iter().position(|g| g == f).unwrap();
        let mut covers: Vec<[usize; 2]> = c.covers.iter().map(|&(a, b)| [a, b]).collect();
        covers.sort();
        BergmanJson {
            covers,
            faces: c
                .faces
                .iter()
                .map(|f| BergmanFaceJson {
                    bases: label_lists(f.matroid_type.bases()),
                    dimension: f.dimension,
                    vertices: f.vertices.iter().map(position).collect(),
                })
                .collect(),
            facet_census: c.facet_census(),
            maximal: c.maximal_faces(),
            vertices: labels_in_order(&c.flacets),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandJson {
    /// Bases of the summand in the parent's labels.
    pub bases: Vec<Vec<usize>>,
    pub block: Vec<usize>,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionJson {
    pub partition: Vec<Vec<usize>>,
    pub summands: Vec<SummandJson>,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        DecompositionJson {
            partition: labels_in_order(d.partition.blocks()),
            summands: d
                .summands
                .iter()
                .map(|s| {
                    let place: Vec<usize> = s.block.iter().collect();
                    let lifted: Vec<GroundSubset> = s
                        .matroid
                        .bases()
                        .iter()
                        .map(|b| GroundSubset::from_indices(b.iter().map(|i| place[i])))
                        .collect();
                    SummandJson {
                        bases: label_lists(&lifted),
                        block: s.block.labels(),
                        lower: s.spec.lower.labels(),
                        upper: s.spec.upper.labels(),
                    }
                })
                .collect(),
        }
    }
}

fn type_json(t: &MatroidType<'_>) -> Value {
    json!({
        "bases": label_lists(t.bases()),
        "components": (!t.is_empty()).then(|| t.component_count()),
        "loopless": t.is_loopless(),
    })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("output types serialize")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildingSetChoice {
    Minimal,
    Maximal,
    Explicit(Vec<GroundSubset>),
}

/// One command, with its arguments already parsed against the matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Request {
    Flats,
    Flacets,
    Lattice,
    OrderComplex,
    NestedSet(BuildingSetChoice),
    Bergman,
    TypeFromWeights(Vec<i64>),
    TypeFromFlats(Vec<GroundSubset>),
    Decompose(Vec<GroundSubset>),
    Audit,
}

pub fn run(m: &Matroid, request: &Request) -> Result<Value, Error> {
    Ok(match request {
        Request::Flats => {
            let flats = m.flats();
            json!({
                "flats": labels_in_order(&flats),
                "ranks": flats.iter().map(|f| m.rank_of(*f)).collect::<Vec<_>>(),
            })
        }
        Request::Flacets => {
            let ineq = m.polytope_inequalities()?;
            json!({
                "flacets": ineq.iter().map(|(f, _)| f.labels()).collect::<Vec<_>>(),
                "ranks": ineq.iter().map(|(_, r)| *r).collect::<Vec<_>>(),
            })
        }
        Request::Lattice => {
            let l = lattice_of_flats(m);
            json!({
                "connected": (0..l.len()).map(|i| l.is_connected_flat(i)).collect::<Vec<_>>(),
                "covers": l.covers().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
                "flats": labels_in_order(l.flats()),
                "ranks": (0..l.len()).map(|i| l.rank(i)).collect::<Vec<_>>(),
            })
        }
        Request::OrderComplex => to_value(&ComplexJson::from(&lattice_of_flats(m).order_complex())),
        Request::NestedSet(choice) => {
            let l = lattice_of_flats(m);
            let g = match choice {
                BuildingSetChoice::Minimal => l.minimal_building_set(),
                BuildingSetChoice::Maximal => l.maximal_building_set(),
                BuildingSetChoice::Explicit(members) => {
                    let idx = members
                        .iter()
                        .map(|&f| l.require(f))
                        .collect::<Result<Vec<_>, _>>()?;
                    l.building_set(idx)?
                }
            };
            to_value(&ComplexJson::from(&l.nested_set_complex(&g)?))
        }
        Request::Bergman => to_value(&BergmanJson::from(&bergman_complex(m)?)),
        Request::TypeFromWeights(w) => {
            type_json(&matroid_type_oracle(m, &WeightVector::new(w.clone()))?)
        }
        Request::TypeFromFlats(gamma) => type_json(&matroid_type_from_flats(m, gamma)?),
        Request::Decompose(gamma) => to_value(&DecompositionJson::from(&decompose_face(m, gamma)?)),
        Request::Audit => {
            let audit = refinement_audit(m)?;
            let reports = coarseness_all(m)?;
            let flat_maximal = reports
                .iter()
                .filter(|r| r.chain.len() + 1 == m.rank())
                .map(|r| {
                    if r.is_flat() {
                        Ok(())
                    } else {
                        Err(Error::AuditFailure {
                            chain: r.chain.clone(),
                            reason: "maximal chain changes its partition".into(),
                        })
                    }
                })
                .collect::<Result<Vec<_>, _>>()?
                .len();
            let complex = bergman_complex(m)?;
            for face in &complex.faces {
                if !verify_finest(m, face)? {
                    return Err(Error::AuditFailure {
                        chain: face.vertices.clone(),
                        reason: "Bergman face has a disconnected summand".into(),
                    });
                }
            }
            json!({
                "bergman_faces": audit.bergman_faces,
                "chains": audit.chains,
                "finest_faces": complex.faces.len(),
                "flat_maximal_chains": flat_maximal,
                "nested_faces": audit.nested_faces,
                "refined_chains": reports.len(),
            })
        }
    })
}

/// Pretty JSON with a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

/// The six-element matroid with circuits 1234, 1256, 3456.
pub const SIX_ELEMENT: &str = r#"{"circuits": [[1, 2, 3, 4], [1, 2, 5, 6], [3, 4, 5, 6]], "n": 6}"#;

/// Name, regenerated output and golden copy of each worked example.
pub fn examples() -> Vec<(&'static str, String, &'static str)> {
    let m = parse_matroid(SIX_ELEMENT).expect("example matroid is valid");
    let gamma = parse_flat_list(6, "1;2;1234;1256").expect("example vertex set parses");
    let out = |r: Request| render(&run(&m, &r).expect("examples succeed"));
    vec![
        (
            "bergman.json",
            out(Request::Bergman),
            include_str!("../golden/bergman.json"),
        ),
        (
            "nested_minimal.json",
            out(Request::NestedSet(BuildingSetChoice::Minimal)),
            include_str!("../golden/nested_minimal.json"),
        ),
        (
            "quadrangle_type.json",
            out(Request::TypeFromFlats(gamma.clone())),
            include_str!("../golden/quadrangle_type.json"),
        ),
        (
            "quadrangle_decomposition.json",
            out(Request::Decompose(gamma)),
            include_str!("../golden/quadrangle_decomposition.json"),
        ),
    ]
}

/// Regenerates every example and compares it byte for byte with its golden file.
pub fn check_examples() -> Result<Value, CliError> {
    let mut report = serde_json::Map::new();
    for (name, fresh, golden) in examples() {
        if fresh != golden {
            return Err(CliError::GoldenMismatch(name.into()));
        }
        report.insert(name.into(), json!("identical"));
    }
    Ok(Value::Object(report))
}
