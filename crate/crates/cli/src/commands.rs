//! The prs, rprs, subres, and rootcount subcommands.

use serde_json::{json, Value};

use recsubres::{
    build_recsubres_matrix, compute_prs, compute_recursive_prs, count_real_roots_detailed,
    nested_matrix, nested_subres_poly, closed_form_size, recsubres_poly, reduced_nested_matrix,
    reduced_nested_poly, subres_matrix, subres_poly, DivisionRule, Poly, Prs,
};

use crate::poly_text::parse_input;
use crate::report::{degree_value, matrix_value, poly_value, rational_value};
use crate::{AppError, KindArg};

pub fn parse_poly_arg(text: &str) -> Result<Poly, AppError> {
    parse_input(text).map_err(AppError::Usage)
}

fn prs_value(prs: &Prs) -> Value {
    let elements: Vec<Value> = prs.elements().iter().map(poly_value).collect();
    let degrees: Vec<Value> = prs
        .elements()
        .iter()
        .map(|p| degree_value(p.degree()))
        .collect();
    let steps: Vec<Value> = prs
        .steps()
        .iter()
        .enumerate()
        .map(|(idx, s)| {
            json!({
                "i": idx + 3,
                "alpha": rational_value(&s.alpha),
                "beta": rational_value(&s.beta),
                "quotient": poly_value(&s.quotient),
            })
        })
        .collect();
    json!({
        "elements": elements,
        "degrees": degrees,
        "complete": prs.is_complete(),
        "steps": steps,
    })
}

pub fn cmd_prs(f: &str, g: &str, rule: &dyn DivisionRule) -> Result<Value, AppError> {
    let f = parse_poly_arg(f)?;
    let g = parse_poly_arg(g)?;
    let prs = compute_prs(&f, &g, rule)?;
    let mut body = prs_value(&prs);
    body["command"] = json!("prs");
    body["rule"] = json!(rule.name());
    body["input"] = json!({ "f": poly_value(&f), "g": poly_value(&g) });
    Ok(body)
}

pub fn cmd_rprs(f: &str, g: &str, rule: &dyn DivisionRule) -> Result<Value, AppError> {
    let f = parse_poly_arg(f)?;
    let g = parse_poly_arg(g)?;
    let rprs = compute_recursive_prs(&f, &g, rule)?;
    let levels: Vec<Value> = rprs
        .levels()
        .iter()
        .enumerate()
        .map(|(idx, level)| {
            let mut v = prs_value(level);
            v["level"] = json!(idx + 1);
            v
        })
        .collect();
    Ok(json!({
        "command": "rprs",
        "rule": rule.name(),
        "input": { "f": poly_value(&f), "g": poly_value(&g) },
        "levels": levels,
        "j_indices": rprs.j_indices(),
        "complete": rprs.is_complete(),
    }))
}

pub struct SubresArgs<'a> {
    pub f: &'a str,
    pub g: &'a str,
    pub kind: KindArg,
    pub k: Option<usize>,
    pub j: usize,
    pub matrix: bool,
}

pub fn cmd_subres(args: SubresArgs<'_>, rule: &dyn DivisionRule) -> Result<Value, AppError> {
    let f = parse_poly_arg(args.f)?;
    let g = parse_poly_arg(args.g)?;
    let j = args.j;
    let (kind_name, level, poly, mat, u_det) = match args.kind {
        KindArg::Classic => {
            if args.k.is_some_and(|k| k != 1) {
                return Err(AppError::Usage(
                    "--k applies to recursive, nested, and reduced kinds only".into(),
                ));
            }
            let sm = subres_matrix(&f, &g, j)?;
            let poly = subres_poly(&f, &g, j)?;
            ("classic", 1, poly, sm.matrix().clone(), None)
        }
        kind => {
            let k = args.k.ok_or_else(|| {
                AppError::Usage("--k is required for recursive, nested, and reduced kinds".into())
            })?;
            let rprs = compute_recursive_prs(&f, &g, rule)?;
            match kind {
                KindArg::Recursive => {
                    let built = build_recsubres_matrix(&rprs, k, j)?;
                    let poly = recsubres_poly(&rprs, k, j)?;
                    let closed_form = closed_form_size(&rprs, k, j)?;
                    debug_assert_eq!(built.dims(), closed_form);
                    ("recursive", k, poly, built.matrix().clone(), None)
                }
                KindArg::Nested => {
                    let built = nested_matrix(&rprs, k, j)?;
                    let poly = nested_subres_poly(&rprs, k, j)?;
                    ("nested", k, poly, built.matrix().clone(), None)
                }
                KindArg::Reduced => {
                    let built = reduced_nested_matrix(&rprs, k, j)?;
                    let poly = reduced_nested_poly(&rprs, k, j)?;
                    let u_det = built.u_det().clone();
                    ("reduced", k, poly, built.matrix().clone(), Some(u_det))
                }
                KindArg::Classic => unreachable!("handled above"),
            }
        }
    };
    let mut body = json!({
        "command": "subres",
        "kind": kind_name,
        "k": level,
        "j": j,
        "rule": rule.name(),
        "input": { "f": poly_value(&f), "g": poly_value(&g) },
        "polynomial": poly_value(&poly),
        "dims": [mat.rows(), mat.cols()],
    });
    if let Some(u) = u_det {
        body["u_det"] = rational_value(&u);
    }
    if args.matrix {
        body["matrix"] = matrix_value(&mat);
    }
    Ok(body)
}

pub fn cmd_rootcount(f: &str) -> Result<Value, AppError> {
    let f = parse_poly_arg(f)?;
    let report = count_real_roots_detailed(&f)?;
    Ok(json!({
        "command": "rootcount",
        "input": poly_value(&f),
        "count": report.total,
        "per_level": report.per_level,
    }))
}
