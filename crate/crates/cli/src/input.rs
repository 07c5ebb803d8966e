use gitq::corpus::{self, Params};
use gitq::gitfan::WeightSystem;
use gitq::Vector;
use num_rational::Ratio;

use crate::{Failure, Options};

pub struct Problem {
    pub name: String,
    pub system: WeightSystem,
    /// Family name and parameters when the problem comes from a generator.
    pub family: Option<(String, Params)>,
}

pub fn family_params(o: &Options) -> Params {
    let mut p = Params::new();
    if let Some(n) = o.n {
        p.insert("n".into(), n);
    }
    if let Some(m) = o.m {
        p.insert("m".into(), m);
    }
    p
}

pub fn resolve(o: &Options) -> Result<Problem, Failure> {
    match (&o.corpus, &o.input) {
        (Some(_), Some(_)) => Err(Failure::Usage("give exactly one of --corpus and --input".into())),
        (None, None) => Err(Failure::Usage("an input is required: --corpus NAME or --input FILE".into())),
        (None, Some(path)) => {
            if o.n.is_some() || o.m.is_some() {
                return Err(Failure::Usage("--n and --m apply to --corpus only".into()));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
            let p = corpus::parse_problem(&text)?;
            Ok(Problem {
                name: p.name.clone(),
                system: p.to_system()?,
                family: None,
            })
        }
        (Some(name), None) => {
            let params = family_params(o);
            if corpus::FAMILIES.contains(&name.as_str()) {
                let p = corpus::family_problem(name, &params)?;
                return Ok(Problem {
                    name: p.name.clone(),
                    system: p.to_system()?,
                    family: Some((name.clone(), params)),
                });
            }
            let text = corpus::shipped(name).ok_or_else(|| {
                Failure::Domain(format!("unknown corpus entry {name:?}"))
            })?;
            if !params.is_empty() {
                return Err(Failure::Usage(format!("{name} takes no parameters")));
            }
            let p = corpus::parse_problem(text)?;
            let family = corpus::shipped_params()
                .into_iter()
                .find(|(stem, _, _)| stem == name)
                .map(|(_, f, ps)| (f.to_string(), ps));
            Ok(Problem {
                name: p.name.clone(),
                system: p.to_system()?,
                family,
            })
        }
    }
}

fn parse_rationals(s: &str, what: &str) -> Result<Vec<Ratio<i64>>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Ratio<i64>>()
                .map_err(|_| Failure::Usage(format!("{what}: cannot parse {t:?} as a rational number")))
        })
        .collect()
}

/// The character as a primitive integral vector on the same ray.
pub fn chi(o: &Options, rank: usize) -> Result<Vector, Failure> {
    let s = o
        .chi
        .as_deref()
        .ok_or_else(|| Failure::Usage("--chi is required".into()))?;
    let q = parse_rationals(s, "--chi")?;
    if q.len() != rank {
        return Err(Failure::Usage(format!(
            "--chi has {} entries, the ambient rank is {rank}",
            q.len()
        )));
    }
    if q.iter().all(|x| *x.numer() == 0) {
        return Ok(vec![0; rank]);
    }
    Ok(gitq::cone::integral_point(&q))
}

/// `a1,...,ak=b` as `(a, b)`.
pub fn slice(s: &str, rank: usize) -> Result<(Vec<f64>, f64), Failure> {
    let (lhs, rhs) = s
        .split_once('=')
        .ok_or_else(|| Failure::Usage("--slice expects a1,...,ak=b".into()))?;
    let to_f = |x: &Ratio<i64>| *x.numer() as f64 / *x.denom() as f64;
    let a: Vec<f64> = parse_rationals(lhs, "--slice")?.iter().map(to_f).collect();
    let b = parse_rationals(rhs, "--slice")?;
    if a.len() != rank || b.len() != 1 {
        return Err(Failure::Usage(format!("--slice needs {rank} coefficients and one right-hand side")));
    }
    Ok((a, to_f(&b[0])))
}
