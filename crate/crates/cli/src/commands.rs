use std::path::Path;
use std::time::Instant;

use octad::fixtures::{fixtures, ReferenceContext, Status, VerifyReport};
use octad::hyperelliptic::{
    branch_pullback_check, cubic_factor_identity, gamma_restriction_identity, BranchData,
};
use octad::octad::{build_configuration, DERIVED_NAMES, FREE_NAMES};
use octad::quadric::analyze_net as analyze;
use octad::rational::{self, Rational};
use octad::wedge::{
    label, lefschetz_matrix, piece_basis, primitive_dimensions, q_wedge, wedge_cube_map, WeightOneIvhs,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{self, InputError, InputResult};
use crate::Outcome;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn ok(report: Value) -> InputResult<Outcome> {
    Ok(Outcome {
        report,
        mismatch: false,
    })
}

fn required(inline: Option<&str>, path: Option<&Path>, what: &str, flag: &str) -> InputResult<Value> {
    input::load(inline, path, what)?
        .ok_or_else(|| InputError(format!("{what}: pass {flag} or --input")))
}

pub fn analyze_net(inline: Option<&str>, path: Option<&Path>) -> InputResult<Outcome> {
    let v = required(inline, path, "net", "--net")?;
    let net = input::net(&v)?;
    let report = analyze(&net)?;
    ok(json!({ "net": to_value(&net), "quartic": to_value(&report) }))
}

fn named(names: &[&str], values: &[Rational]) -> Value {
    Value::Object(
        names
            .iter()
            .zip(values)
            .map(|(n, v)| (n.to_string(), Value::String(rational::format_rational(v))))
            .collect(),
    )
}

pub fn octad_close(inline: Option<&str>, path: Option<&Path>) -> InputResult<Outcome> {
    let v = required(inline, path, "parameters", "--params")?;
    let params = input::close(input::free_parameters(&v)?)?;
    let config = build_configuration(&params)?;
    ok(json!({
        "free": named(&FREE_NAMES, &params.free),
        "derived": named(&DERIVED_NAMES, &params.derived),
        "configuration": to_value(&config.matrix),
        "general_position": true,
    }))
}

pub fn ivhs_report(
    inline: Option<&str>,
    path: Option<&Path>,
    timings: bool,
    verbose: bool,
) -> InputResult<Outcome> {
    let v = required(inline, path, "parameters", "--params")?;
    let (points, batch) = input::parameter_points(&v)?;
    let reports = points
        .into_par_iter()
        .enumerate()
        .map(|(i, free)| {
            let clock = Instant::now();
            let params = input::close(free).map_err(|e| InputError(format!("item {i}: {e}")))?;
            let r = octad::ivhs::ivhs_report(&params, timings)
                .map_err(|e| InputError(format!("item {i}: {e}")))?;
            if verbose {
                eprintln!("point {i}: done in {:.1?}", clock.elapsed());
            }
            Ok(to_value(&r))
        })
        .collect::<InputResult<Vec<Value>>>()?;
    let report = if batch {
        Value::Array(reports)
    } else {
        reports.into_iter().next().expect("one point")
    };
    ok(report)
}

pub fn wedge_check(inline: Option<&str>, path: Option<&Path>) -> InputResult<Outcome> {
    let ivhs = match input::load(inline, path, "theta")? {
        Some(v) => WeightOneIvhs::new(input::theta(&v)?)?,
        None => WeightOneIvhs::e11(),
    };
    let cube = wedge_cube_map(&ivhs)?;
    let q = q_wedge(&ivhs)?;
    let basis = piece_basis(2);
    let q_terms: Vec<Value> = basis
        .iter()
        .zip(&q.full)
        .filter(|(_, c)| **c != rational::zero())
        .map(|(t, c)| json!({ "monomial": label(t), "coeff": rational::format_rational(c) }))
        .collect();
    let e11_zero = q_wedge(&WeightOneIvhs::e11())?.is_zero();
    let lefschetz_rank = lefschetz_matrix().rank();
    let dims = primitive_dimensions();
    let mismatch = !e11_zero || lefschetz_rank != 6 || dims != [1, 6, 6, 1];
    Ok(Outcome {
        report: json!({
            "theta": to_value(&ivhs.theta),
            "cube": to_value(&cube),
            "q_full": q_terms,
            "q_full_coordinates": to_value(&q),
            "q_is_zero": q.is_zero(),
            "e11_q_is_zero": e11_zero,
            "lefschetz_rank": lefschetz_rank,
            "primitive_dimensions": dims,
        }),
        mismatch,
    })
}

pub fn hyperelliptic_check(inline: Option<&str>, path: Option<&Path>) -> InputResult<Outcome> {
    let data = match input::load(inline, path, "lambdas")? {
        Some(v) => input::lambdas(&v)?,
        None => BranchData::new((1..=8).map(rational::int).collect())?,
    };
    let cubic = cubic_factor_identity();
    let gamma = gamma_restriction_identity();
    let pullback = branch_pullback_check(&data);
    Ok(Outcome {
        report: json!({
            "lambdas": to_value(&data),
            "cubic_factor_identity": cubic,
            "gamma_restriction_identity": gamma,
            "branch_pullback": pullback,
        }),
        mismatch: !(cubic && gamma && pullback),
    })
}

pub fn verify_paper(verbose: bool) -> Outcome {
    let ctx = ReferenceContext::new();
    let results = fixtures()
        .par_iter()
        .map(|f| {
            let clock = Instant::now();
            let r = f.run(&ctx);
            if verbose {
                let s = if r.status == Status::Pass { "PASS" } else { "FAIL" };
                eprintln!("{s} {} ({:.1?})", f.name, clock.elapsed());
            }
            r
        })
        .collect();
    let report = VerifyReport::from_results(results);
    Outcome {
        mismatch: !report.all_pass(),
        report: to_value(&report),
    }
}
