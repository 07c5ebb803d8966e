use std::fmt::Write as _;

use gitq::bunch::{self, GeometryReport};
use gitq::collections::{enumerate_two_maximal, ConeCollection};
use gitq::corpus;
use gitq::gitfan::{self, FaceSpec, GITFan, OrbitConeSet, WeightSystem};
use gitq::Cone;
use serde::Serialize;

use crate::input::{self, Problem};
use crate::{oracle, svg, Failure, Format, Options};

type Out = Result<String, Failure>;

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn reject(o: &Options, verb: &str, chi: bool, figure: bool) -> Result<(), Failure> {
    if !chi && o.chi.is_some() {
        return Err(Failure::Usage(format!("--chi does not apply to {verb}")));
    }
    if !figure && (o.svg.is_some() || o.slice.is_some()) {
        return Err(Failure::Usage(format!("--svg and --slice do not apply to {verb}")));
    }
    Ok(())
}

fn fface_kind(ws: &WeightSystem) -> String {
    match &ws.fface {
        FaceSpec::AllSubsets => "all subsets".into(),
        FaceSpec::Hypersurface { index, exponent } => {
            format!("hypersurface, T_{}^{exponent} + ...", index + 1)
        }
        FaceSpec::ExplicitFaces(f) => format!("{} explicit faces", f.len()),
        FaceSpec::WallsGiven(w) => format!("{} walls given", w.len()),
        FaceSpec::ExplicitCones(c) => format!("{} explicit orbit cones", c.len()),
    }
}

/// Orbit cones, unless the problem only supplies walls.
fn orbit_set(ws: &WeightSystem) -> Result<Option<OrbitConeSet>, Failure> {
    match ws.fface {
        FaceSpec::WallsGiven(_) => Ok(None),
        _ => Ok(Some(gitfan::orbit_cones(ws)?)),
    }
}

fn compute_fan(ws: &WeightSystem) -> Result<GITFan, Failure> {
    match &ws.fface {
        FaceSpec::WallsGiven(w) => Ok(gitfan::git_fan_from_walls(&gitfan::weight_cone(ws), w)?),
        _ => Ok(gitfan::git_fan(&gitfan::orbit_cones(ws)?)?),
    }
}

fn list_cones(out: &mut String, title: &str, tag: &str, cones: &[Cone]) {
    let _ = writeln!(out, "{title} ({}):", cones.len());
    for (i, c) in cones.iter().enumerate() {
        let _ = writeln!(out, "  {tag}{i}  {c}");
    }
}

pub fn info(o: &Options) -> Out {
    reject(o, "info", false, false)?;
    let p = input::resolve(o)?;
    let ws = &p.system;
    let omega = gitfan::weight_cone(ws);
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", p.name);
    let _ = writeln!(out, "ambient rank: {}", ws.ambient_rank);
    let _ = writeln!(out, "generators: {}", ws.r());
    let _ = writeln!(out, "F-faces: {}", fface_kind(ws));
    if let Some(d) = ws.dim_r {
        let _ = writeln!(out, "dim R: {d}");
    }
    if let Some(rel) = &ws.relation_degrees {
        let degs: Vec<String> = rel.iter().map(|v| fmt_vec(v)).collect();
        let _ = writeln!(out, "relation degrees: {}", degs.join(" "));
    }
    let _ = writeln!(out, "weight cone: {omega}");
    let _ = writeln!(out, "weight cone pointed: {}", yes_no(omega.is_pointed()));
    if ws.r() > 0 {
        let adm = match bunch::check_admissible(ws) {
            Ok(()) => "yes".to_string(),
            Err(f) => format!("no, facet {}", fmt_set(f)),
        };
        let _ = writeln!(out, "admissible: {adm}");
    }
    if let Some(oc) = orbit_set(ws)? {
        let _ = writeln!(out, "orbit cones: {}", oc.len());
    }
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fmt_set(f: gitfan::FaceSet) -> String {
    let parts: Vec<String> = bunch::one_based(f).iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn fan(o: &Options) -> Out {
    reject(o, "fan", false, true)?;
    let p = input::resolve(o)?;
    let rank = p.system.ambient_rank;
    let plane = match (&o.svg, &o.slice) {
        (None, Some(_)) => return Err(Failure::Usage("--slice needs --svg".into())),
        (Some(_), None) if rank != 2 => {
            return Err(Failure::Usage(format!(
                "--svg needs ambient rank 2, or rank 3 with --slice; the rank is {rank}"
            )))
        }
        (Some(_), Some(_)) if rank != 3 => {
            return Err(Failure::Usage(format!("--slice needs ambient rank 3; the rank is {rank}")))
        }
        (Some(_), Some(s)) => Some(input::slice(s, rank)?),
        _ => None,
    };
    let fan = compute_fan(&p.system)?;
    let mut out = String::new();
    if o.check_oracle {
        fan.verify_fan_property()?;
    }
    if let Some(path) = &o.svg {
        let figure = match &plane {
            None => svg::fan_2d(&fan),
            Some((a, b)) => svg::fan_sliced(&fan, a, *b).map_err(Failure::Domain)?,
        };
        std::fs::write(path, figure)
            .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
    }
    if o.format == Format::Json {
        return Ok(json(&fan));
    }
    let _ = writeln!(out, "fan of {}", p.name);
    let _ = writeln!(out, "support: {}", fan.support());
    let counts: Vec<String> = fan
        .count_by_dim()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    let _ = writeln!(out, "cones by dimension: {}", counts.join(" "));
    list_cones(&mut out, "chambers", "c", fan.chambers());
    list_cones(&mut out, "walls", "w", fan.walls());
    list_cones(&mut out, "lower cones", "l", fan.lower_cones());
    let _ = writeln!(out, "face relations: {}", fan.face_relations().len());
    if o.check_oracle {
        out.push_str("oracle: fan property holds\n");
    }
    Ok(out)
}

pub fn walls(o: &Options) -> Out {
    reject(o, "walls", false, false)?;
    let p = input::resolve(o)?;
    let ws = &p.system;
    let found = match &ws.fface {
        FaceSpec::WallsGiven(w) => w.clone(),
        _ => gitfan::walls(&gitfan::orbit_cones(ws)?),
    };
    let mut checks = String::new();
    if o.check_oracle {
        compare_walls(&mut checks, &p, &found)?;
    }
    let mut out = String::new();
    if o.format == Format::Json {
        out = json(&found);
    } else {
        let _ = writeln!(out, "walls of {}", p.name);
        list_cones(&mut out, "walls", "w", &found);
    }
    out.push_str(&checks);
    Ok(out)
}

fn compare_walls(out: &mut String, p: &Problem, found: &[Cone]) -> Result<(), Failure> {
    let mut agree = true;
    let mut report = |label: &str, expected: &[Cone]| {
        let missing = expected.iter().filter(|c| found.binary_search(c).is_err()).count();
        let extra = found.iter().filter(|c| expected.binary_search(c).is_err()).count();
        if missing == 0 && extra == 0 {
            let _ = writeln!(out, "oracle {label}: agree ({} walls)", found.len());
        } else {
            agree = false;
            let _ = writeln!(out, "oracle {label}: differ ({missing} missing, {extra} extra)");
        }
    };
    if let Some((family, params)) = &p.family {
        if matches!(family.as_str(), "sp" | "sl-minors") {
            report("expected walls", &corpus::expected_walls(family, params)?);
        }
    }
    if let Some(brute) = oracle::facet_walls(&p.system)? {
        report("facets of subset cones", &brute);
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Domain(format!("wall oracle disagrees\n{out}")))
    }
}

#[derive(Serialize)]
struct ChamberOut<'a> {
    chi: &'a [i64],
    cone: &'a Cone,
}

pub fn chamber(o: &Options) -> Out {
    reject(o, "chamber", true, false)?;
    let p = input::resolve(o)?;
    let ws = &p.system;
    let chi = input::chi(o, ws.ambient_rank)?;
    let cone = match orbit_set(ws)? {
        Some(oc) => {
            let c = gitfan::git_cone(&oc, &chi)?;
            if o.check_oracle {
                let via_fan = gitfan::chamber_of(&gitfan::git_fan(&oc)?, &chi)?;
                if via_fan != c {
                    return Err(Failure::Domain(format!(
                        "oracle: the fan cone of chi is {via_fan}, the GIT-cone is {c}"
                    )));
                }
            }
            c
        }
        None => gitfan::chamber_of(&compute_fan(ws)?, &chi)?,
    };
    if o.format == Format::Json {
        return Ok(json(&ChamberOut { chi: &chi, cone: &cone }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "chi: {}", fmt_vec(&chi));
    let _ = writeln!(out, "GIT-cone: {cone}");
    let _ = writeln!(
        out,
        "full-dimensional: {}",
        yes_no(cone.dim() == gitfan::weight_cone(ws).dim())
    );
    if o.check_oracle {
        out.push_str("oracle: agrees with the fan\n");
    }
    Ok(out)
}

pub fn two_maximal(o: &Options) -> Out {
    reject(o, "two-maximal", false, false)?;
    let p = input::resolve(o)?;
    let oc = orbit_set(&p.system)?.ok_or(Failure::Domain(gitq::Error::WallsGiven.to_string()))?;
    let found = enumerate_two_maximal(&oc);
    if o.check_oracle {
        match oracle::two_maximal_brute(&oc) {
            Some(brute) if brute != found => {
                return Err(Failure::Domain(format!(
                    "oracle: {} collections by exhaustion, {} enumerated",
                    brute.len(),
                    found.len()
                )))
            }
            Some(_) => {}
            None => return Err(Failure::Domain("oracle: too many orbit cones for exhaustion".into())),
        }
    }
    if o.format == Format::Json {
        return Ok(json(&found));
    }
    let mut out = String::new();
    list_cones(&mut out, "orbit cones", "o", oc.cones());
    let _ = writeln!(out, "2-maximal collections ({}):", found.len());
    for psi in &found {
        let idx: Vec<String> = psi
            .members()
            .iter()
            .map(|c| format!("o{}", oc.index_of(c).expect("members are orbit cones")))
            .collect();
        let _ = writeln!(out, "  {{{}}}", idx.join(", "));
    }
    if o.check_oracle {
        out.push_str("oracle: agrees with exhaustion\n");
    }
    Ok(out)
}

#[derive(Serialize)]
struct BunchOut<'a> {
    chi: &'a [i64],
    phi: &'a ConeCollection,
    f_bunch: &'a bunch::FBunchCheck,
    report: &'a GeometryReport,
}

pub fn bunch(o: &Options) -> Out {
    reject(o, "bunch", true, false)?;
    let p = input::resolve(o)?;
    let ws = &p.system;
    let chi = input::chi(o, ws.ambient_rank)?;
    // every corpus algebra is positively graded with constants in degree zero
    let b = bunch::bunch_of_character(ws, &chi, true)?;
    let check = bunch::is_f_bunch(&b)?;
    let report = bunch::geometry_report(&b)?;
    let mut checks = String::new();
    if o.check_oracle {
        if !bunch::semiample_equals_gitcone_check(ws, &chi)? {
            return Err(Failure::Domain("oracle: the semiample cone differs from the GIT-cone".into()));
        }
        checks.push_str("oracle: semiample cone equals the GIT-cone\n");
    }
    if o.format == Format::Json {
        let mut s = json(&BunchOut {
            chi: &chi,
            phi: &b.phi,
            f_bunch: &check,
            report: &report,
        });
        s.push_str(&checks);
        return Ok(s);
    }
    let mut out = String::new();
    let _ = writeln!(out, "bunch of {} at chi {}", p.name, fmt_vec(&chi));
    list_cones(&mut out, "phi", "t", b.phi.members());
    let _ = writeln!(out, "F-bunch: {}", yes_no(check.valid));
    for d in &check.diagnostics {
        let _ = writeln!(out, "  {d}");
    }
    write_report(&mut out, &report);
    out.push_str(&checks);
    Ok(out)
}

fn write_report(out: &mut String, r: &GeometryReport) {
    let opt = |v: &Option<gitq::Vector>| v.as_deref().map_or("none".to_string(), fmt_vec);
    let _ = writeln!(
        out,
        "dim X: {}",
        r.dim_x.map_or("unknown".to_string(), |d| d.to_string())
    );
    let _ = writeln!(out, "Cl rank: {}", r.cl_rank);
    let basis: Vec<String> = r
        .picard
        .basis()
        .to_rows()
        .iter()
        .map(|row| {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let _ = writeln!(out, "Picard lattice: [{}]", basis.join(" "));
    let _ = writeln!(
        out,
        "Picard index: {}",
        r.picard_index.as_ref().map_or("infinite".to_string(), |i| i.to_string())
    );
    let _ = writeln!(out, "Eff: {}", r.eff);
    let _ = writeln!(out, "Mov: {}", r.mov);
    let _ = writeln!(out, "SAmple: {}", r.semiample);
    let _ = writeln!(out, "ample class: {}", opt(&r.ample_witness));
    let _ = writeln!(out, "locally factorial: {}", yes_no(r.locally_factorial));
    let _ = writeln!(out, "Q-factorial: {}", yes_no(r.q_factorial));
    let _ = writeln!(out, "canonical class: {}", opt(&r.canonical_class));
    let fano = serde_json::to_value(r.fano).expect("plain data serializes");
    let _ = writeln!(out, "Fano: {}", fano.as_str().unwrap_or("unknown"));
    let sets = |v: &[gitfan::FaceSet]| v.iter().map(|&f| fmt_set(f)).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "relevant faces: {}", r.rlv.len());
    let _ = writeln!(out, "covering faces ({}): {}", r.cov.len(), sets(&r.cov));
}

pub fn corpus(o: &Options) -> Out {
    reject(o, "corpus", false, false)?;
    if o.corpus.is_none() && o.input.is_none() {
        let mut out = String::from("families:\n");
        for f in corpus::FAMILIES {
            let _ = writeln!(out, "  {f}");
        }
        out.push_str("shipped problems:\n");
        for (stem, _) in corpus::SHIPPED {
            let _ = writeln!(out, "  {stem}");
        }
        return Ok(out);
    }
    let p = input::resolve(o)?;
    let notes = match &p.family {
        Some((f, ps)) => corpus::family_notes(f, ps),
        None => String::new(),
    };
    let file = corpus::ProblemFile::from_system(&p.name, &p.system, &notes);
    Ok(corpus::serialize_problem(&file))
}

pub fn check(o: &Options) -> Out {
    reject(o, "check", false, false)?;
    let p = input::resolve(o)?;
    let ws = &p.system;
    let mut out = String::new();
    let _ = writeln!(out, "{}: valid problem", p.name);
    if ws.r() > 0 {
        match bunch::check_admissible(ws) {
            Ok(()) => out.push_str("admissible: yes\n"),
            Err(f) => {
                let _ = writeln!(out, "admissible: no, facet {}", fmt_set(f));
            }
        }
    }
    if o.check_oracle {
        let fan = compute_fan(ws)?;
        fan.verify_fan_property()?;
        let _ = writeln!(out, "fan: {} cones, fan property holds", fan.len());
        let found = match &ws.fface {
            FaceSpec::WallsGiven(w) => w.clone(),
            _ => gitfan::walls(&gitfan::orbit_cones(ws)?),
        };
        compare_walls(&mut out, &p, &found)?;
    }
    Ok(out)
}
