//! Command handlers. Each returns the JSON payload or an error message.

use ribbonlab::conormal::{is_limit_quadric, is_limit_relation, LambdaFunctional};
use ribbonlab::exact::format_rational;
use ribbonlab::families::*;
use ribbonlab::fitting::{verify_power_ideal, FittingMode};
use ribbonlab::json::{infer_genus, strings, wpoly_from_json};
use ribbonlab::poly::WPoly;
use ribbonlab::rnc::QuadForm;
use ribbonlab::xg::{ribbon_ell, split_ribbon_ideal};
use ribbonlab::Error;
use serde_json::{json, Value};

use crate::input;

pub fn limit_quadric(g: usize, q: &str) -> Result<Value, Error> {
    let q = QuadForm::new(g, input::matrix(&input::json_arg(q)?)?)?;
    let v = is_limit_quadric(&q);
    Ok(json!({
        "g": g,
        "degenerate": v.degenerate,
        "det": format_rational(&v.det),
        "witness_lambda": v.witness.map(|w| strings(&w)),
    }))
}

pub fn limit_relation(g: Option<usize>, d: usize, poly: &str) -> Result<Value, Error> {
    let raw = input::json_arg(poly)?;
    let g = g.or_else(|| infer_genus(&raw)).ok_or_else(|| Error::Parse("cannot infer g from an empty polynomial; pass --g".into()))?;
    let x: WPoly = wpoly_from_json(g, &raw)?;
    let v = is_limit_relation(&x, d)?;
    Ok(json!({
        "g": g,
        "d": d,
        "limit": v.limit,
        "rank": v.rank,
        "matrix": v.matrix.matrix.to_rows().iter().map(|r| strings(r)).collect::<Vec<_>>(),
        "left_kernel": v.left_kernel.iter().map(|r| strings(r)).collect::<Vec<_>>(),
        "witness_lambda": v.witness.map(|w| strings(&w)),
    }))
}

pub fn fitting(m: usize, r: usize, mode: FittingMode) -> Result<Value, Error> {
    Ok(serde_json::to_value(verify_power_ideal(m, r, mode)?).expect("report serializes"))
}

pub struct BuildArgs<'a> {
    pub g: usize,
    pub d: usize,
    pub h: &'a str,
    pub n: Option<usize>,
    pub ell: Option<&'a str>,
    pub lambda: Option<&'a str>,
    pub complete: bool,
}

pub fn family_build(a: BuildArgs) -> Result<Value, Error> {
    let h = input::binary_form(&input::json_arg(a.h)?)?;
    let ell = match (a.ell, a.lambda) {
        (Some(_), Some(_)) => return Err(Error::Parse("pass at most one of --ell and --lambda".into())),
        (Some(e), None) => {
            let raw = input::json_arg(e)?;
            let list = raw.as_array().ok_or_else(|| Error::Parse("--ell must be a list of polynomials".into()))?;
            list.iter().map(|p| wpoly_from_json(a.g, p)).collect::<Result<Vec<WPoly>, _>>()?
        }
        (None, Some(l)) => ribbon_ell(&LambdaFunctional::new(a.g, input::rational_list(&input::json_arg(l)?)?)?)?,
        (None, None) => ribbon_ell(&LambdaFunctional::unit(a.g, 0))?,
    };
    let n = a.n.unwrap_or_else(|| experiment_order_bound(a.d));
    let f = if a.complete {
        complete_odd_perturbation(a.g, &h, a.d, n, &ell)?
    } else {
        perturb_hyperelliptic(a.g, &h, a.d, n, &ell)?
    };
    Ok(f.to_json())
}

pub fn family_split(g: usize, n: usize) -> Result<Value, Error> {
    Ok(TruncatedFamily::constant(&split_ribbon_ideal(g)?, n)?.to_json())
}

/// A family JSON, or the output of an earlier `family` command.
fn load_family(arg: &str) -> Result<TruncatedFamily, Error> {
    let raw = input::json_arg(arg)?;
    match raw.get("payload") {
        Some(p) if raw.get("status").is_some() => TruncatedFamily::from_json(p),
        _ => TruncatedFamily::from_json(&raw),
    }
}

pub fn family_rescale(family: &str, k: i64) -> Result<Value, Error> {
    Ok(rescale_v(&load_family(family)?, k)?.to_json())
}

pub fn family_order(family: &str) -> Result<Value, Error> {
    let f = load_family(family)?;
    let show = |o: FamilyOrder| json!({ "order": o.order, "at_bound": o.at_bound, "display": o.display() });
    Ok(json!({
        "g": f.g(),
        "N": f.order_bound(),
        "ribbon_order": show(ribbon_order(&f)),
        "hyperell_order": show(hyperell_order(&f)),
    }))
}

pub fn family_discriminant(family: &str) -> Result<Value, Error> {
    let f = load_family(family)?;
    let section = discriminant_section(&f)?;
    let disc = binary_discriminant(&section.s)?;
    Ok(json!({
        "g": section.g,
        "s": strings(section.s.coeffs()),
        "discriminant": format_rational(&disc),
        "smooth": !num_traits::Zero::is_zero(&disc),
    }))
}
