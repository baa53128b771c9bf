//! The bench subcommand: matrix sizes and wall-clock timings for the
//! recursive and reduced constructions. Measurement only, no assertions.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use recsubres::{
    build_recsubres_matrix, compute_recursive_prs, closed_form_size, recsubres_poly,
    reduced_nested_matrix, reduced_nested_poly, sturm_rule, Poly, RecursivePrs,
};

use crate::commands::parse_poly_arg;
use crate::poly_text::print_poly;
use crate::AppError;

pub struct BenchArgs<'a> {
    pub f: Option<&'a str>,
    pub g: Option<&'a str>,
    pub sweep: Option<&'a str>,
    pub seed: Option<u64>,
    pub csv: bool,
}

#[derive(Debug)]
struct BenchRow {
    m: usize,
    n: usize,
    k: usize,
    j: usize,
    rec_rows: usize,
    rec_cols: usize,
    red_rows: usize,
    red_cols: usize,
    recursive_us: Option<u128>,
    reduced_us: Option<u128>,
}

/// Fixed-shape sweep input of degree `m`: a triple root, a double root,
/// and simple roots, so the recursive chain has depth at least two.
fn sweep_instance(m: usize) -> Poly {
    let mut mults: Vec<usize> = if m >= 5 {
        vec![3, 2]
    } else if m >= 3 {
        vec![m - 1]
    } else {
        vec![m]
    };
    let mut total: usize = mults.iter().sum();
    while total < m {
        mults.push(1);
        total += 1;
    }
    let mut p = Poly::one();
    for (idx, mult) in mults.iter().enumerate() {
        let root = idx as i64 + 1;
        for _ in 0..*mult {
            p = &p * &Poly::from_integers(&[-root, 1]);
        }
    }
    p
}

fn parse_sweep(spec: &str) -> Result<(usize, usize), AppError> {
    let (lo, hi) = spec
        .split_once("..")
        .ok_or_else(|| AppError::Usage(format!("sweep must look like 6..12, got {spec:?}")))?;
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| AppError::Usage(format!("bad sweep bound {lo:?}")))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| AppError::Usage(format!("bad sweep bound {hi:?}")))?;
    Ok((lo, hi))
}

fn instance_rows(rprs: &RecursivePrs, rows: &mut Vec<BenchRow>) {
    let (m, n) = (rprs.m(), rprs.n());
    for k in 1..=rprs.t() {
        if closed_form_size(rprs, k, 0).is_err() {
            break;
        }
        let top = if k == 1 { rprs.n() } else { rprs.j(k - 1) - 1 };
        for j in 0..top {
            let (rec_rows, rec_cols) = closed_form_size(rprs, k, j).expect("validated");
            let (red_rows, red_cols) = if k == 1 {
                (m + n - j, m + n - 2 * j)
            } else {
                let b = 2 * rprs.j(k - 1) - 2 * j - 1;
                (b + j, b)
            };
            let recursive_us = {
                let start = Instant::now();
                let ok = build_recsubres_matrix(rprs, k, j).is_ok()
                    && recsubres_poly(rprs, k, j).is_ok();
                ok.then(|| start.elapsed().as_micros())
            };
            let reduced_us = {
                let start = Instant::now();
                let ok = reduced_nested_matrix(rprs, k, j).is_ok()
                    && reduced_nested_poly(rprs, k, j).is_ok();
                ok.then(|| start.elapsed().as_micros())
            };
            rows.push(BenchRow {
                m,
                n,
                k,
                j,
                rec_rows,
                rec_cols,
                red_rows,
                red_cols,
                recursive_us,
                reduced_us,
            });
        }
    }
}

fn random_instance(seed: u64) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let distinct = rng.gen_range(2..=3usize);
        let mut p = Poly::one();
        let mut total = 0usize;
        for idx in 0..distinct {
            let mult = if idx == 0 { rng.gen_range(2..=3) } else { rng.gen_range(1..=2) };
            total += mult;
            let root = rng.gen_range(-4i64..=4) + 10 * idx as i64; // distinct by construction
            for _ in 0..mult {
                p = &p * &Poly::from_integers(&[-root, 1]);
            }
        }
        if (3..=8).contains(&total) {
            return p;
        }
    }
}

pub enum BenchOutput {
    Json(Value),
    Csv(String),
}

pub fn cmd_bench(args: BenchArgs<'_>) -> Result<BenchOutput, AppError> {
    let mut inputs: Vec<(Poly, Poly)> = Vec::new();
    match (args.f, args.g) {
        (Some(f), Some(g)) => {
            inputs.push((parse_poly_arg(f)?, parse_poly_arg(g)?));
        }
        (None, None) => {}
        _ => {
            return Err(AppError::Usage(
                "provide both polynomials, or neither".into(),
            ))
        }
    }
    if let Some(spec) = args.sweep {
        let (lo, hi) = parse_sweep(spec)?;
        for m in lo..=hi {
            if m < 2 {
                continue;
            }
            let p = sweep_instance(m);
            let dp = p.derivative();
            inputs.push((p, dp));
        }
    }
    if inputs.is_empty() {
        if let Some(seed) = args.seed {
            let p = random_instance(seed);
            let dp = p.derivative();
            inputs.push((p, dp));
        }
    }

    let mut rows: Vec<BenchRow> = Vec::new();
    for (f, g) in &inputs {
        let rprs = compute_recursive_prs(f, g, &sturm_rule())?;
        instance_rows(&rprs, &mut rows);
    }

    if args.csv {
        let mut out = String::from(
            "m,n,k,j,recursive_rows,recursive_cols,reduced_rows,reduced_cols,recursive_us,reduced_us\n",
        );
        for r in &rows {
            let fmt_opt = |v: Option<u128>| v.map_or(String::new(), |x| x.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                r.m,
                r.n,
                r.k,
                r.j,
                r.rec_rows,
                r.rec_cols,
                r.red_rows,
                r.red_cols,
                fmt_opt(r.recursive_us),
                fmt_opt(r.reduced_us),
            ));
        }
        return Ok(BenchOutput::Csv(out));
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "m": r.m, "n": r.n, "k": r.k, "j": r.j,
                "recursive_dims": [r.rec_rows, r.rec_cols],
                "reduced_dims": [r.red_rows, r.red_cols],
                "recursive_us": r.recursive_us.map(|v| v as u64),
                "reduced_us": r.reduced_us.map(|v| v as u64),
            })
        })
        .collect();
    let input_desc: Vec<Value> = inputs
        .iter()
        .map(|(f, g)| json!({ "f": print_poly(f), "g": print_poly(g) }))
        .collect();
    Ok(BenchOutput::Json(json!({
        "command": "bench",
        "inputs": input_desc,
        "rows": json_rows,
    })))
}
