//! JSON output for every command. Exact numbers are printed as strings and
//! object keys come out sorted, so the same input always yields the same
//! bytes.

use serde_json::{json, Map, Value};

use crate::corpus::{corpus, Builtin};
use crate::document::PolytopeDocument;
use crate::ehrhart::{ehrhart_report, hibi_reflexive, reciprocity_check, EhrhartReport, ReciprocityWitness};
use crate::enumerate::{sample_range, DilationSample};
use crate::error::{Error, Result};
use crate::exact::{format_rat, Int, Rat};
use crate::invariance::{run_trials, InvarianceTrial};
use crate::poly::{RatPoly, VecPoly};
use crate::polytope::{AffineUnimodularMap, Polytope};
use crate::toric::{
    classify, delzant_check, ono_from_parts, unimodular_equivalent, volume_and_barycenter, Barycenter, DelzantReport,
    OnoReport, Verdict,
};

pub fn rat_json(x: &Rat) -> Value {
    Value::String(format_rat(x))
}

pub fn int_json(x: &Int) -> Value {
    Value::String(x.to_string())
}

pub fn rat_vec_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

pub fn int_vec_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

/// `{"coeffs": [...]}`, ascending degree.
pub fn poly_json(p: &RatPoly) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(rat_json).collect::<Vec<_>>() })
}

pub fn vec_poly_json(p: &VecPoly) -> Value {
    Value::Array(p.components().iter().map(poly_json).collect())
}

/// `{"A": rows, "c": translation}`.
pub fn map_json(t: &AffineUnimodularMap) -> Value {
    json!({
        "A": t.linear().rows().iter().map(|r| int_vec_json(r)).collect::<Vec<_>>(),
        "c": int_vec_json(t.translation_vector()),
    })
}

pub fn polytope_json(p: &Polytope) -> Value {
    json!({
        "dim": p.dim(),
        "vertices": p.vertices().iter().map(|v| rat_vec_json(v)).collect::<Vec<_>>(),
        "facets": p.facets().iter().map(|f| json!({
            "normal": int_vec_json(&f.normal),
            "offset": rat_json(&f.offset),
        })).collect::<Vec<_>>(),
    })
}

pub fn sample_json(s: &DilationSample) -> Value {
    json!({
        "m": s.m.to_string(),
        "count": int_json(&s.count),
        "vector_sum": int_vec_json(&s.vector_sum),
        "interior_count": int_json(&s.interior_count),
        "interior_vector_sum": int_vec_json(&s.interior_vector_sum),
    })
}

pub fn ehrhart_json(r: &EhrhartReport) -> Value {
    json!({
        "dim": r.dim,
        "polynomial": poly_json(&r.polynomial),
        "display": r.polynomial.to_string(),
        "volume": rat_json(&r.volume),
        "lambda_match": r.lambda_match.as_ref().map(int_json),
    })
}

pub fn vector_ehrhart_json(r: &EhrhartReport) -> Value {
    let n = r.dim;
    json!({
        "dim": n,
        "vector_polynomial": vec_poly_json(&r.vector_polynomial),
        "leading_coefficient": rat_vec_json(&r.vector_polynomial.coeff(n + 1)),
    })
}

pub fn reciprocity_json(w: &ReciprocityWitness) -> Value {
    json!({
        "m": w.m.to_string(),
        "scalar": {
            "from_polynomial": rat_json(&w.scalar_from_polynomial),
            "interior_count": int_json(&w.interior_count),
            "holds": w.scalar_holds,
        },
        "vector": {
            "from_polynomial": rat_vec_json(&w.vector_from_polynomial),
            "interior_sum": int_vec_json(&w.interior_vector_sum),
            "holds": w.vector_holds,
        },
    })
}

pub fn delzant_json(d: &DelzantReport) -> Value {
    json!({
        "is_delzant": d.is_delzant,
        "vertices": d.per_vertex.iter().map(|v| json!({
            "vertex": rat_vec_json(&v.vertex),
            "edges": v.directions.iter().map(|e| int_vec_json(e)).collect::<Vec<_>>(),
            "edge_count": v.edge_count.to_string(),
            "edge_matrix_det": v.edge_matrix_det.as_ref().map(int_json),
        })).collect::<Vec<_>>(),
        "first_failure": d.first_failure.as_ref().map(|(i, why)| json!({
            "vertex_index": i.to_string(),
            "reason": why,
        })),
    })
}

pub fn barycenter_json(b: &Barycenter) -> Value {
    json!({ "volume": rat_json(&b.volume), "barycenter": rat_vec_json(&b.value) })
}

pub fn ono_json(o: &OnoReport) -> Value {
    json!({
        "holds": o.holds,
        "barycenter": rat_vec_json(&o.barycenter),
        "residual": vec_poly_json(&o.residual),
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    let c = &v.certificates;
    let mut certs = Map::new();
    let mut put = |k: &str, val: Option<Value>| {
        if let Some(val) = val {
            certs.insert(k.to_string(), val);
        }
    };
    put("volume", c.volume.as_ref().map(rat_json));
    put("interior_point_count", c.interior_point_count.as_ref().map(int_json));
    put("barycenter", c.barycenter.as_deref().map(rat_vec_json));
    put("centering_shift", c.centering_shift.as_deref().map(int_vec_json));
    put("centered_barycenter", c.centered_barycenter.as_deref().map(rat_vec_json));
    put("reflexive_hibi", c.reflexive_hibi.map(Value::Bool));
    put("reflexive_dual", c.reflexive_dual.map(Value::Bool));
    put("ono_holds", c.ono_holds.map(Value::Bool));
    put("edge_multiples", c.edge_multiples.as_deref().map(int_vec_json));
    put("map", c.map.as_ref().map(map_json));
    put("map_det", c.map_det.as_ref().map(int_json));
    put("target", c.target.clone().map(Value::String));
    json!({
        "case": v.case_applied.as_str(),
        "lambda": v.lambda.as_ref().map(int_json),
        "isomorphic_to_projective": v.isomorphic_to_projective,
        "acsemis": v.acsemis,
        "cases_verified": v.cases_verified.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        "certificates": certs,
    })
}

pub fn invariance_json(seed: u64, trials: &[InvarianceTrial]) -> Value {
    let failures: Vec<Value> = trials
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.holds())
        .map(|(i, t)| json!({ "trial": i.to_string(), "map": map_json(&t.map), "failed": t.failures() }))
        .collect();
    json!({
        "seed": seed.to_string(),
        "trials": trials.len().to_string(),
        "all_hold": failures.is_empty(),
        "failures": failures,
    })
}

pub fn error_json(e: &Error) -> Value {
    json!({ "error": e.tag(), "reason": e.to_string() })
}

/// The operations exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Points,
    Ehrhart,
    VectorEhrhart,
    Reciprocity,
    Dual,
    Reflexive,
    Delzant,
    Barycenter,
    Ono,
    Equiv,
    Classify,
    Invariance,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Points,
        Command::Ehrhart,
        Command::VectorEhrhart,
        Command::Reciprocity,
        Command::Dual,
        Command::Reflexive,
        Command::Delzant,
        Command::Barycenter,
        Command::Ono,
        Command::Equiv,
        Command::Classify,
        Command::Invariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Points => "points",
            Command::Ehrhart => "ehrhart",
            Command::VectorEhrhart => "vector-ehrhart",
            Command::Reciprocity => "reciprocity",
            Command::Dual => "dual",
            Command::Reflexive => "reflexive",
            Command::Delzant => "delzant",
            Command::Barycenter => "barycenter",
            Command::Ono => "ono",
            Command::Equiv => "equiv",
            Command::Classify => "classify",
            Command::Invariance => "invariance",
        }
    }

    pub fn from_name(s: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    /// Largest dilation enumerated by `points` and `reciprocity`; defaults
    /// to `dim + 3`.
    pub max_dilation: Option<u64>,
    /// Move the unique interior lattice point to the origin first.
    pub center: bool,
    pub seed: u64,
    pub trials: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { max_dilation: None, center: false, seed: 0, trials: 20 }
    }
}

fn centered(p: &Polytope) -> Result<(Polytope, Vec<Int>)> {
    p.translate_interior_point_to_origin()
}

/// Runs one command. `other` is the second polytope for `equiv`.
pub fn run(cmd: Command, p: &Polytope, other: Option<&Polytope>, opts: &Options) -> Result<Value> {
    let (owned, shift) = if opts.center {
        let (q, s) = centered(p)?;
        (Some(q), Some(s))
    } else {
        (None, None)
    };
    let p = owned.as_ref().unwrap_or(p);
    let max_m = opts.max_dilation.unwrap_or(p.dim() as u64 + 3);
    let mut out = match cmd {
        Command::Points => {
            let samples = sample_range(p, max_m)?;
            json!({ "samples": samples.iter().map(sample_json).collect::<Vec<_>>() })
        }
        Command::Ehrhart => ehrhart_json(&ehrhart_report(p)?),
        Command::VectorEhrhart => vector_ehrhart_json(&ehrhart_report(p)?),
        Command::Reciprocity => {
            let r = ehrhart_report(p)?;
            let checks = (1..=max_m.max(1)).map(|m| reciprocity_check(p, m, &r)).collect::<Result<Vec<_>>>()?;
            json!({
                "holds": checks.iter().all(ReciprocityWitness::holds),
                "checks": checks.iter().map(reciprocity_json).collect::<Vec<_>>(),
            })
        }
        Command::Dual => {
            let d = p.dual()?;
            json!({ "dual": polytope_json(&d), "lattice": d.is_lattice() })
        }
        Command::Reflexive => {
            let hibi = hibi_reflexive(p)?;
            let dual = match p.dual() {
                Ok(d) => Some(d.is_lattice()),
                Err(Error::OriginNotInterior) => None,
                Err(e) => return Err(e),
            };
            json!({ "reflexive_hibi": hibi, "reflexive_dual": dual })
        }
        Command::Delzant => delzant_json(&delzant_check(p)?),
        Command::Barycenter => barycenter_json(&volume_and_barycenter(p)?),
        Command::Ono => {
            let r = ehrhart_report(p)?;
            let b = volume_and_barycenter(p)?;
            ono_json(&ono_from_parts(&r, &b.value))
        }
        Command::Equiv => {
            let q = other.ok_or_else(|| Error::InvalidInput("equiv needs a second polytope".into()))?;
            let q = if opts.center { centered(q)?.0 } else { q.clone() };
            let t = unimodular_equivalent(p, &q)?;
            json!({
                "equivalent": t.is_some(),
                "map": t.as_ref().map(map_json),
                "map_det": t.as_ref().map(|t| int_json(&t.det())),
            })
        }
        Command::Classify => verdict_json(&classify(p)?),
        Command::Invariance => invariance_json(opts.seed, &run_trials(p, opts.seed, opts.trials)?),
    };
    if let (Some(s), Value::Object(o)) = (shift, &mut out) {
        o.insert("centering_shift".into(), int_vec_json(&s));
    }
    Ok(out)
}

/// The builtin grammar and the fixture corpus.
pub fn builtin_list() -> Value {
    json!({
        "builtins": [
            "simplex:N[:LAMBDA]",
            "box:C1[:C2...]",
            "hirzebruch:A",
            "cp1_product:N",
            "counterexample5d",
        ],
        "corpus": corpus().iter().map(|e| json!({
            "name": e.name(),
            "dim": e.dim(),
            "ehrhart": poly_json(&e.ehrhart),
            "delzant": e.delzant,
            "reflexive": e.reflexive,
            "lambda": e.lambda.as_ref().map(int_json),
        })).collect::<Vec<_>>(),
    })
}

/// Loads a polytope either from JSON text or from a builtin name.
pub fn load(json_text: Option<&str>, builtin: Option<&str>) -> Result<Polytope> {
    match (json_text, builtin) {
        (Some(t), None) => PolytopeDocument::parse(t)?.to_polytope(),
        (None, Some(b)) => Builtin::parse(b)?.build(),
        (Some(_), Some(_)) => Err(Error::InvalidInput("give either an input file or a builtin, not both".into())),
        (None, None) => Err(Error::InvalidInput("no polytope given (use --input or --builtin)".into())),
    }
}

/// Serializes with a trailing newline.
pub fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
