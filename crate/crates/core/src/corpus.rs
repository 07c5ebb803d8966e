//! Example families, their expected walls, and the problem file format.
//!
//! A problem file is a single JSON object:
//!
//! ```text
//! {
//!   "name": "sl4",
//!   "ambient_rank": 2,
//!   "weights": [[2, 0], ...],
//!   "fface": {"type": "hypersurface", "index": 12, "exponent": 2},
//!   "relations": [[30, 6]],
//!   "dim_r": 11,
//!   "notes": "..."
//! }
//! ```
//!
//! `fface.type` is one of `all`, `hypersurface` (`index`, `exponent`),
//! `explicit` (`faces`: lists of indices), `walls` (`walls`: cones) or
//! `cones` (`cones`: cones). Generator indices are 1-based. Cones are given
//! by `rays` and optional `lineality`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arith::Vector;
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::gitfan::{face_indices, face_set, weight_cone, FaceSpec, WeightSystem};

pub type Params = BTreeMap<String, i64>;

pub const FAMILIES: [&str; 5] = ["sp", "sl-minors", "sl6", "sl4", "butterfly"];

/// Shipped problem files, by file stem.
pub const SHIPPED: [(&str, &str); 8] = [
    ("butterfly", include_str!("../corpus/butterfly.json")),
    ("sl4", include_str!("../corpus/sl4.json")),
    ("sl6", include_str!("../corpus/sl6.json")),
    ("sp-4", include_str!("../corpus/sp-4.json")),
    ("sp-5", include_str!("../corpus/sp-5.json")),
    ("sp-6", include_str!("../corpus/sp-6.json")),
    ("sl-minors-2-4", include_str!("../corpus/sl-minors-2-4.json")),
    ("sl-minors-3-5", include_str!("../corpus/sl-minors-3-5.json")),
];

pub fn shipped(stem: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|(s, _)| *s == stem).map(|(_, t)| *t)
}

/// File stem of a family instance, e.g. `sp-5`.
pub fn family_stem(name: &str, params: &Params) -> Result<String> {
    Ok(match name {
        "sp" => format!("sp-{}", param(name, params, "m")?),
        "sl-minors" => format!(
            "sl-minors-{}-{}",
            param(name, params, "n")?,
            param(name, params, "m")?
        ),
        "sl6" | "sl4" | "butterfly" => name.to_string(),
        _ => return Err(Error::UnknownFamily(name.to_string())),
    })
}

fn param(family: &str, params: &Params, key: &str) -> Result<usize> {
    let v = params.get(key).ok_or_else(|| Error::BadParams {
        family: family.to_string(),
        reason: format!("missing parameter {key}"),
    })?;
    usize::try_from(*v).map_err(|_| Error::BadParams {
        family: family.to_string(),
        reason: format!("parameter {key} must be nonnegative"),
    })
}

/// `u_ij = e_i + e_j` for `i < j`, lexicographically.
pub fn sp_weights(m: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut v = vec![0; m];
            v[i] = 1;
            v[j] = 1;
            out.push(v);
        }
    }
    out
}

/// All 0/1 vectors of length `m` with exactly `n` ones, in lexicographic
/// order of their supports.
pub fn minors_weights(n: usize, m: usize) -> Vec<Vector> {
    subsets_of_size(m, n)
        .into_iter()
        .map(|s| {
            let mut v = vec![0; m];
            for i in s {
                v[i] = 1;
            }
            v
        })
        .collect()
}

fn subsets_of_size(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

pub const SL6_WEIGHTS: [[i64; 3]; 6] = [[0, 0, 4], [0, 3, 0], [0, 3, 4], [1, 1, 1], [2, 2, 2], [1, 1, 3]];

pub fn sl4_weights() -> Vec<Vector> {
    let mut w: Vec<Vector> = (0..5).map(|i| vec![2 + i, 0]).collect();
    w.extend((0..6).map(|j| vec![j, 1]));
    w.push(vec![15, 3]);
    w
}

fn line(v: &[i64]) -> Cone {
    Cone::from_generators(v.len(), &[v.to_vec(), v.iter().map(|x| -x).collect()])
}

/// Closed half-plane bounded by the line through `v`, on the side of `side`.
fn half_plane(v: &[i64], side: &[i64]) -> Cone {
    Cone::from_generators(2, &[v.to_vec(), v.iter().map(|x| -x).collect(), side.to_vec()])
}

/// The three lines `Q·e1`, `Q·e2`, `Q·(e1+e2)`.
pub fn butterfly_lines() -> Vec<Cone> {
    vec![line(&[1, 0]), line(&[0, 1]), line(&[1, 1])]
}

/// Half-planes `ω_i^+` bounded by the lines, oriented so that their open
/// interiors have no common point; `ω_i^- = -ω_i^+`.
pub fn butterfly_half_planes() -> (Vec<Cone>, Vec<Cone>) {
    // inward normals (0,1), (-1,0), (1,-1): y > 0, x < 0, x > y is empty
    let plus = vec![
        half_plane(&[1, 0], &[0, 1]),
        half_plane(&[0, 1], &[-1, 0]),
        half_plane(&[1, 1], &[1, -1]),
    ];
    let minus = vec![
        half_plane(&[1, 0], &[0, -1]),
        half_plane(&[0, 1], &[1, 0]),
        half_plane(&[1, 1], &[-1, 1]),
    ];
    (plus, minus)
}

pub fn butterfly_cones() -> Vec<Cone> {
    let (plus, minus) = butterfly_half_planes();
    let mut all = vec![Cone::full(2)];
    all.extend(plus);
    all.extend(minus);
    all.extend(butterfly_lines());
    all.sort();
    all
}

pub fn gen_family(name: &str, params: &Params) -> Result<WeightSystem> {
    let bad = |reason: &str| Error::BadParams {
        family: name.to_string(),
        reason: reason.to_string(),
    };
    match name {
        "sp" => {
            let m = param(name, params, "m")?;
            if m < 4 {
                return Err(bad("m must be at least 4"));
            }
            WeightSystem::new(m, sp_weights(m), FaceSpec::AllSubsets)
        }
        "sl-minors" => {
            let n = param(name, params, "n")?;
            let m = param(name, params, "m")?;
            if n < 2 || m < n + 2 {
                return Err(bad("need n >= 2 and m >= n + 2"));
            }
            let walls = minors_walls(n, m);
            WeightSystem::new(m, minors_weights(n, m), FaceSpec::WallsGiven(walls))
        }
        "sl6" => WeightSystem::new(
            3,
            SL6_WEIGHTS.iter().map(|w| w.to_vec()).collect(),
            FaceSpec::AllSubsets,
        ),
        "sl4" => Ok(WeightSystem::new(
            2,
            sl4_weights(),
            FaceSpec::Hypersurface {
                index: 11,
                exponent: 2,
            },
        )?
        .with_relations(vec![vec![30, 6]])?
        .with_dim_r(11)),
        "butterfly" => WeightSystem::new(2, Vec::new(), FaceSpec::ExplicitCones(butterfly_cones())),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

fn slice(support: &Cone, normal: &Vector) -> Cone {
    Cone::from_inequalities(
        support.ambient_rank(),
        support.facet_normals(),
        &[support.span_equations(), std::slice::from_ref(normal)].concat(),
    )
}

fn dedup_walls(mut walls: Vec<Cone>, d: usize) -> Vec<Cone> {
    walls.retain(|w| w.dim() + 1 == d);
    walls.sort();
    walls.dedup();
    walls
}

/// The two wall families of the symplectic example, as stated:
/// `ω ∩ {Σ_J s = Σ_{J^c} s}` for `1 < |J| ≤ m/2`, and the cones of the
/// weights on `{Σ_{J1} s = Σ_{J2} s}` for disjoint `J1, J2` with
/// `|J1| + |J2| ≤ m - 3`, where an empty side forces the other to be a
/// singleton.
pub fn sp_walls_as_stated(m: usize) -> Vec<Cone> {
    let weights = sp_weights(m);
    let omega = Cone::from_generators(m, &weights);
    let mut walls = Vec::new();
    for size in 2..=m / 2 {
        for j in subsets_of_size(m, size) {
            let h: Vector = (0..m).map(|i| if j.contains(&i) { 1 } else { -1 }).collect();
            walls.push(slice(&omega, &h));
        }
    }
    // each index goes to J1, J2 or neither
    let mut assign = vec![0u8; m];
    loop {
        let j1: Vec<usize> = (0..m).filter(|&i| assign[i] == 1).collect();
        let j2: Vec<usize> = (0..m).filter(|&i| assign[i] == 2).collect();
        let size_ok = j1.len() + j2.len() <= m.saturating_sub(3);
        let empty_ok = match (j1.len(), j2.len()) {
            (0, 0) => false,
            (0, b) => b == 1,
            (a, 0) => a == 1,
            _ => true,
        };
        if size_ok && empty_ok {
            let h: Vector = (0..m)
                .map(|i| match assign[i] {
                    1 => 1,
                    2 => -1,
                    _ => 0,
                })
                .collect();
            let on: Vec<Vector> = weights
                .iter()
                .filter(|w| crate::arith::dot(w, &h) == 0)
                .cloned()
                .collect();
            walls.push(Cone::from_generators(m, &on));
        }
        let Some(i) = assign.iter().position(|&a| a < 2) else {
            break;
        };
        assign[i] += 1;
        for a in assign.iter_mut().take(i) {
            *a = 0;
        }
    }
    dedup_walls(walls, m)
}

/// Facets `2 s_i = Σ s` of the symplectic weight cone. They are facets of
/// full-dimensional orbit cones, hence walls, although the stated
/// families start at `|J| = 2`.
pub fn sp_boundary_walls(m: usize) -> Vec<Cone> {
    let omega = Cone::from_generators(m, &sp_weights(m));
    let walls = (0..m)
        .map(|i| {
            let mut h = vec![-1; m];
            h[i] = 1;
            slice(&omega, &h)
        })
        .collect();
    dedup_walls(walls, m)
}

/// `ω ∩ {(n-k) Σ_J s = k Σ_{J^c} s}` for `1 ≤ k ≤ n/2`, `k < |J| < m+k-n`.
pub fn minors_walls(n: usize, m: usize) -> Vec<Cone> {
    let omega = Cone::from_generators(m, &minors_weights(n, m));
    let mut walls = Vec::new();
    for k in 1..=n / 2 {
        for size in k + 1..(m + k).saturating_sub(n) {
            for j in subsets_of_size(m, size) {
                let h: Vector = (0..m)
                    .map(|i| {
                        if j.contains(&i) {
                            (n - k) as i64
                        } else {
                            -(k as i64)
                        }
                    })
                    .collect();
                walls.push(slice(&omega, &h));
            }
        }
    }
    dedup_walls(walls, m)
}

pub fn expected_walls(name: &str, params: &Params) -> Result<Vec<Cone>> {
    match name {
        "sp" => {
            let m = param(name, params, "m")?;
            if m < 4 {
                return Err(Error::BadParams {
                    family: name.into(),
                    reason: "m must be at least 4".into(),
                });
            }
            let mut w = sp_walls_as_stated(m);
            w.extend(sp_boundary_walls(m));
            Ok(dedup_walls(w, m))
        }
        "sl-minors" => {
            let n = param(name, params, "n")?;
            let m = param(name, params, "m")?;
            if n < 2 || m < n + 2 {
                return Err(Error::BadParams {
                    family: name.into(),
                    reason: "need n >= 2 and m >= n + 2".into(),
                });
            }
            Ok(minors_walls(n, m))
        }
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub name: String,
    pub ambient_rank: usize,
    pub weights: Vec<Vector>,
    pub fface: FaceSpec,
    pub relation_degrees: Option<Vec<Vector>>,
    pub dim_r: Option<usize>,
    pub notes: String,
}

impl ProblemFile {
    pub fn from_system(name: &str, ws: &WeightSystem, notes: &str) -> ProblemFile {
        ProblemFile {
            name: name.to_string(),
            ambient_rank: ws.ambient_rank,
            weights: ws.weights.clone(),
            fface: ws.fface.clone(),
            relation_degrees: ws.relation_degrees.clone(),
            dim_r: ws.dim_r,
            notes: notes.to_string(),
        }
    }

    pub fn to_system(&self) -> Result<WeightSystem> {
        let mut ws = WeightSystem::new(self.ambient_rank, self.weights.clone(), self.fface.clone())?;
        if let Some(rel) = &self.relation_degrees {
            ws = ws.with_relations(rel.clone())?;
        }
        if let Some(d) = self.dim_r {
            ws = ws.with_dim_r(d);
        }
        Ok(ws)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    name: String,
    ambient_rank: usize,
    #[serde(default)]
    weights: Vec<Vector>,
    fface: FfaceRepr,
    #[serde(default)]
    relations: Option<Vec<Vector>>,
    #[serde(default)]
    dim_r: Option<usize>,
    #[serde(default)]
    notes: String,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum FfaceRepr {
    All,
    Hypersurface { index: usize, exponent: u32 },
    Explicit { faces: Vec<Vec<usize>> },
    Walls { walls: Vec<ConeSpec> },
    Cones { cones: Vec<ConeSpec> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeSpec {
    #[serde(default)]
    rays: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    lineality: Vec<Vector>,
}

impl ConeSpec {
    fn of(c: &Cone) -> ConeSpec {
        ConeSpec {
            rays: c.rays().to_vec(),
            lineality: c.lineality().to_vec(),
        }
    }

    fn to_cone(&self, n: usize) -> Result<Cone> {
        if let Some(v) = self.rays.iter().chain(&self.lineality).find(|v| v.len() != n) {
            return Err(Error::InvalidSystem(format!("cone vector {v:?} does not have length {n}")));
        }
        let mut gens = self.rays.clone();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(l.iter().map(|x| -x).collect());
        }
        Ok(Cone::from_generators(n, &gens))
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let repr: FileRepr = serde_json::from_str(text).map_err(json_error)?;
    let n = repr.ambient_rank;
    let r = repr.weights.len();
    let cones = |specs: &[ConeSpec]| -> Result<Vec<Cone>> {
        let mut v = specs.iter().map(|s| s.to_cone(n)).collect::<Result<Vec<_>>>()?;
        v.sort();
        v.dedup();
        Ok(v)
    };
    let one_based = |i: usize| -> Result<usize> {
        if i == 0 || i > r {
            return Err(Error::InvalidSystem(format!("generator index {i} out of range 1..={r}")));
        }
        Ok(i - 1)
    };
    let fface = match repr.fface {
        FfaceRepr::All => FaceSpec::AllSubsets,
        FfaceRepr::Hypersurface { index, exponent } => FaceSpec::Hypersurface {
            index: one_based(index)?,
            exponent,
        },
        FfaceRepr::Explicit { faces } => {
            let mut fs = faces
                .iter()
                .map(|f| {
                    let idx = f.iter().map(|&i| one_based(i)).collect::<Result<Vec<_>>>()?;
                    Ok(face_set(&idx))
                })
                .collect::<Result<Vec<_>>>()?;
            fs.sort_unstable();
            fs.dedup();
            FaceSpec::ExplicitFaces(fs)
        }
        FfaceRepr::Walls { walls } => FaceSpec::WallsGiven(cones(&walls)?),
        FfaceRepr::Cones { cones: cs } => FaceSpec::ExplicitCones(cones(&cs)?),
    };
    let p = ProblemFile {
        name: repr.name,
        ambient_rank: n,
        weights: repr.weights,
        fface,
        relation_degrees: repr.relations,
        dim_r: repr.dim_r,
        notes: repr.notes,
    };
    p.to_system()?;
    Ok(p)
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn vector_list(out: &mut String, items: &[String]) {
    if items.is_empty() {
        out.push_str("[]");
        return;
    }
    out.push_str("[\n");
    for (i, it) in items.iter().enumerate() {
        let sep = if i + 1 < items.len() { "," } else { "" };
        let _ = writeln!(out, "    {it}{sep}");
    }
    out.push_str("  ]");
}

/// Canonical text: fixed key order, one vector or cone per line.
pub fn serialize_problem(p: &ProblemFile) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"name\": {},", compact(&p.name));
    let _ = writeln!(out, "  \"ambient_rank\": {},", p.ambient_rank);
    out.push_str("  \"weights\": ");
    vector_list(&mut out, &p.weights.iter().map(compact).collect::<Vec<_>>());
    out.push_str(",\n  \"fface\": ");
    match &p.fface {
        FaceSpec::AllSubsets => out.push_str(r#"{"type": "all"}"#),
        FaceSpec::Hypersurface { index, exponent } => {
            let _ = write!(
                out,
                r#"{{"type": "hypersurface", "index": {}, "exponent": {exponent}}}"#,
                index + 1
            );
        }
        FaceSpec::ExplicitFaces(fs) => {
            let faces: Vec<Vec<usize>> = fs
                .iter()
                .map(|&f| face_indices(f).into_iter().map(|i| i + 1).collect())
                .collect();
            let _ = write!(out, r#"{{"type": "explicit", "faces": {}}}"#, compact(&faces));
        }
        FaceSpec::WallsGiven(cs) | FaceSpec::ExplicitCones(cs) => {
            let key = if matches!(p.fface, FaceSpec::WallsGiven(_)) {
                "walls"
            } else {
                "cones"
            };
            let _ = write!(out, "{{\"type\": \"{key}\", \"{key}\": ");
            let items: Vec<String> = cs.iter().map(|c| compact(&ConeSpec::of(c))).collect();
            vector_list(&mut out, &items);
            out.push('}');
        }
    }
    if let Some(rel) = &p.relation_degrees {
        out.push_str(",\n  \"relations\": ");
        vector_list(&mut out, &rel.iter().map(compact).collect::<Vec<_>>());
    }
    if let Some(d) = p.dim_r {
        let _ = write!(out, ",\n  \"dim_r\": {d}");
    }
    let _ = write!(out, ",\n  \"notes\": {}\n}}\n", compact(&p.notes));
    out
}

/// Short description recorded in generated problem files.
pub fn family_notes(name: &str, params: &Params) -> String {
    match name {
        "sp" => format!(
            "Sp(2n) on m = {} copies of P^(2n-1): weights e_i + e_j of the Gram invariants.",
            params.get("m").copied().unwrap_or(0)
        ),
        "sl-minors" => format!(
            "SL(n) on (P^(n-1))^m, n = {}, m = {}: weights of the maximal minors, walls given.",
            params.get("n").copied().unwrap_or(0),
            params.get("m").copied().unwrap_or(0)
        ),
        "sl6" => "SL(6) example: free algebra of invariants in three degrees.".into(),
        "sl4" => "SL(4) on P(V) x P(W): hypersurface T_12^2 + g(T_1..T_11).".into(),
        "butterfly" => {
            "Torus action on SO(3)\\SL(3): the plane, six half-planes and three lines.".into()
        }
        _ => String::new(),
    }
}

/// Resolves a family instance to its canonical problem file.
pub fn family_problem(name: &str, params: &Params) -> Result<ProblemFile> {
    let ws = gen_family(name, params)?;
    Ok(ProblemFile::from_system(
        &family_stem(name, params)?,
        &ws,
        &family_notes(name, params),
    ))
}

/// Support of the fan of a system: the weight cone.
pub fn support_of(ws: &WeightSystem) -> Cone {
    weight_cone(ws)
}

/// Parameters of each shipped file, keyed by file stem.
pub fn shipped_params() -> Vec<(&'static str, &'static str, Params)> {
    let p = |pairs: &[(&str, i64)]| -> Params {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    };
    vec![
        ("butterfly", "butterfly", p(&[])),
        ("sl4", "sl4", p(&[])),
        ("sl6", "sl6", p(&[])),
        ("sp-4", "sp", p(&[("m", 4)])),
        ("sp-5", "sp", p(&[("m", 5)])),
        ("sp-6", "sp", p(&[("m", 6)])),
        ("sl-minors-2-4", "sl-minors", p(&[("n", 2), ("m", 4)])),
        ("sl-minors-3-5", "sl-minors", p(&[("n", 3), ("m", 5)])),
    ]
}
