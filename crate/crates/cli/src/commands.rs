use fliess_core::coeff::{self, Coeff};
use fliess_core::fliess::{eval_pair, eval_series, eval_word, oracle_feedback, oracle_mixed_compose, OracleReport};
use fliess_core::hopf::{
    antipode, full_coproduct, hilbert_dimensions, inverse_via_antipode, shuffle_coproduct, tilde_coproduct,
    CoordinateMap, Kind,
};
use fliess_core::prelie::{lie_bracket, prelie_sides};
use fliess_core::reldeg::{decompose, linearizing_element, relative_degree};
use fliess_core::verify::{run_all, run_criterion, CriterionReport};
use fliess_core::{
    feedback_product, group_compose, group_inverse_fixed_point, mixed_compose, series_compose, unshuffle,
    PiecewiseConstantSignal, Series, SeriesPair, Word,
};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::input;
use crate::{CliError, Command, KindArg, Method, Outcome, Which};

type Run = Result<Outcome, CliError>;

fn series_out(s: &Series) -> Outcome {
    Outcome::new(s.to_string(), json!(s))
}

fn pair_out(p: &SeriesPair) -> Outcome {
    Outcome::new(p.to_string(), json!(p))
}

/// A JSON number when the count fits in `u64`, a string otherwise.
fn big_json(x: &impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<u64>().map_or(Value::String(s), Value::from)
}

fn rational_json(k: &Coeff) -> Value {
    json!({ "exact": coeff::format(k), "approx": coeff::to_f64(k) })
}

pub fn run(command: Command, n: usize) -> Run {
    match command {
        Command::Shuffle { a, b } => Ok(series_out(&input::series(&a, n)?.shuffle(&input::series(&b, n)?)?)),
        Command::ShuffleInv { c } => Ok(series_out(&input::series(&c, n)?.shuffle_inverse()?)),
        Command::Unshuffle { word } => unshuffle_word(&word, n),
        Command::MixedCompose { c, d } => {
            Ok(series_out(&mixed_compose(&input::series(&c, n)?, &input::pair(&d, n)?)?))
        }
        Command::Compose { c, d } => {
            Ok(series_out(&series_compose(&input::series(&c, n)?, &input::series(&d, n)?)?))
        }
        Command::GroupCompose { c, d } => {
            Ok(pair_out(&group_compose(&input::pair(&c, n)?, &input::pair(&d, n)?)?))
        }
        Command::Invert { c, method } => invert(&input::pair(&c, n)?, method),
        Command::Feedback { c, d } => {
            Ok(series_out(&feedback_product(&input::series(&c, n)?, &input::series(&d, n)?)?))
        }
        Command::Antipode { coord } => {
            let h: CoordinateMap = coord.parse()?;
            let s = antipode(&h);
            Ok(Outcome::new(s.to_string(), json!({ "coord": h.to_string(), "antipode": s.to_string() })))
        }
        Command::Coproduct { which, coord, right_kind } => coproduct(which, &coord, right_kind),
        Command::Hilbert { max_degree } => Ok(hilbert(max_degree)),
        Command::Reldeg { c } => {
            let rd = relative_degree(&input::series(&c, n)?);
            let out = Outcome::new(format!("relative degree: {rd}"), json!(rd));
            Ok(match rd.value() {
                Some(_) => out,
                None => out.diagnostic(rd.diagnostic()),
            })
        }
        Command::Linearize { c } => linearize(&input::series(&c, n)?),
        Command::Bracket { v1, v2 } => Ok(pair_out(&lie_bracket(&input::pair(&v1, n)?, &input::pair(&v2, n)?)?)),
        Command::PrelieCheck { v1, v2, v3 } => {
            let (l, r) = prelie_sides(&input::pair(&v1, n)?, &input::pair(&v2, n)?, &input::pair(&v3, n)?)?;
            let holds = l == r;
            let text = format!(
                "(v1•v2)•v3 - v1•(v2•v3) = {l}\n(v1•v3)•v2 - v1•(v3•v2) = {r}\n{}",
                if holds { "HOLDS" } else { "FAILS" }
            );
            Ok(Outcome::new(text, json!({ "holds": holds, "lhs": l, "rhs": r })).failed_if(!holds))
        }
        Command::Simulate { series, pair, word, signal, at } => {
            let u = input::signal(&signal)?;
            let t = time(&u, at.as_deref())?;
            let value = if let Some(c) = series {
                eval_series(&input::series(&c, n)?, &u, &t)?
            } else if let Some(p) = pair {
                eval_pair(&input::pair(&p, n)?, &u, &t)?
            } else {
                let w: Word = word.as_deref().unwrap_or_default().parse()?;
                eval_word(&w, &u, &t)?
            };
            let text = format!("F({}) = {} ≈ {:.12e}", coeff::format(&t), coeff::format(&value), coeff::to_f64(&value));
            Ok(Outcome::new(text, json!({ "t": coeff::format(&t), "value": rational_json(&value) })))
        }
        Command::OracleCheck { c, d, signal, at, refinement, feedback, iterations, tolerance } => {
            let c = input::series(&c, n)?;
            let u = input::signal(&signal)?;
            let t = time(&u, at.as_deref())?;
            let tolerance = tolerance.as_deref().map(input::rational).transpose()?;
            if refinement.is_empty() {
                return Err(CliError::usage("--refinement needs at least one value"));
            }
            let mut reports = Vec::with_capacity(refinement.len());
            for &k in &refinement {
                let r = if feedback {
                    let d = input::series(&d, n)?;
                    oracle_feedback(&c, &d, &u, &t, k, iterations.unwrap_or(n + 2))?
                } else {
                    oracle_mixed_compose(&c, &input::pair(&d, n)?, &u, &t, k)?
                };
                reports.push((k, r));
            }
            Ok(oracle_table(&reports, tolerance.as_ref()))
        }
        Command::Check { criterion, seed, timings } => {
            let reports = match criterion {
                Some(id) if (1..=8).contains(&id) => vec![run_criterion(id, seed)],
                Some(id) => return Err(CliError::usage(format!("criterion {id} is not in 1..=8"))),
                None => run_all(seed),
            };
            Ok(check_table(&reports, timings))
        }
    }
}

fn unshuffle_word(text: &str, n: usize) -> Run {
    let w: Word = text.trim().parse()?;
    if w.len() > n {
        return Err(fliess_core::Error::WordTooLong { word: w.to_string(), len: w.len(), trunc: n }.into());
    }
    let t = unshuffle(&w);
    let rows: Vec<Value> = t
        .terms()
        .map(|(l, r, m)| json!({ "left": l.to_string(), "right": r.to_string(), "multiplicity": m }))
        .collect();
    Ok(Outcome::new(t.to_string(), Value::Array(rows)))
}

fn invert(c: &SeriesPair, method: Method) -> Run {
    let fixed = matches!(method, Method::FixedPoint | Method::Both)
        .then(|| group_inverse_fixed_point(c))
        .transpose()?;
    let via_s = matches!(method, Method::Antipode | Method::Both)
        .then(|| inverse_via_antipode(c))
        .transpose()?;
    match (fixed, via_s) {
        (Some(f), Some(s)) => {
            let same = f == s;
            let text = format!(
                "fixed-point: {f}\nantipode:    {s}\n{}",
                if same { "MATCH" } else { "MISMATCH" }
            );
            Ok(Outcome::new(text, json!({ "fixed_point": f, "antipode": s, "match": same })).failed_if(!same))
        }
        (Some(p), None) | (None, Some(p)) => Ok(pair_out(&p)),
        (None, None) => unreachable!("every method computes at least one inverse"),
    }
}

fn coproduct(which: Which, coord: &str, right_kind: Option<KindArg>) -> Run {
    let h: CoordinateMap = coord.parse()?;
    let (name, t) = match which {
        Which::Shuffle => {
            let kind = match right_kind {
                Some(KindArg::A) => Kind::A,
                Some(KindArg::B) => Kind::B,
                None => h.kind,
            };
            ("shuffle", shuffle_coproduct(&h, kind))
        }
        Which::Tilde => ("tilde", tilde_coproduct(&h)),
        Which::Full => ("full", (*full_coproduct(&h)).clone()),
    };
    Ok(Outcome::new(
        t.to_string(),
        json!({ "coord": h.to_string(), "which": name, "coproduct": t.to_string() }),
    ))
}

fn hilbert(max_degree: usize) -> Outcome {
    let rows = hilbert_dimensions(max_degree);
    let mut text = format!("{:>3} {:>12} {:>12} {:>12} {:>16}\n", "k", "p_a", "p_b", "p", "dim H_k");
    let mut json_rows = vec![];
    for r in &rows {
        text.push_str(&format!("{:>3} {:>12} {:>12} {:>12} {:>16}\n", r.degree, r.p_a, r.p_b, r.p, r.dim_h));
        json_rows.push(json!({
            "degree": r.degree,
            "p_a": big_json(&r.p_a),
            "p_b": big_json(&r.p_b),
            "p": big_json(&r.p),
            "dim_h": big_json(&r.dim_h),
            "closed_form_agrees": r.consistent(),
        }));
    }
    let agree = rows.iter().all(|r| r.consistent());
    text.push_str(if agree {
        "closed forms agree"
    } else {
        "closed forms DISAGREE"
    });
    Outcome::new(text, Value::Array(json_rows)).failed_if(!agree)
}

fn linearize(c: &Series) -> Run {
    let d = decompose(c)?;
    let e = linearizing_element(c)?;
    let inv = group_inverse_fixed_point(&e)?;
    let normal = d.normal_form();
    let text = format!(
        "relative degree: {}\nlinearizing element: {e}\ninverse: {inv}\nnormal form: {normal}",
        d.r
    );
    Ok(Outcome::new(
        text,
        json!({ "relative_degree": d.r, "element": e, "inverse": inv, "normal_form": normal }),
    ))
}

fn time(u: &PiecewiseConstantSignal, at: Option<&str>) -> Result<Coeff, CliError> {
    match at {
        Some(a) => input::rational(a),
        None => Ok(u.end().clone()),
    }
}

fn oracle_table(reports: &[(usize, OracleReport)], tolerance: Option<&Coeff>) -> Outcome {
    let mut text = format!("{:>10} {:>16} {:>10}\n", "refinement", "residual", "ratio");
    let mut rows = vec![];
    let mut prev: Option<&Coeff> = None;
    for (k, r) in reports {
        let ratio = prev.filter(|_| !r.residual.is_zero()).map(|p| coeff::to_f64(&(p / &r.residual)));
        text.push_str(&format!(
            "{:>10} {:>16.6e} {:>10}\n",
            k,
            r.residual_f64(),
            ratio.map_or("-".to_string(), |x| format!("{x:.4}"))
        ));
        rows.push(json!({
            "refinement": k,
            "simulated": rational_json(&r.simulated),
            "predicted": rational_json(&r.predicted),
            "residual": rational_json(&r.residual),
            "ratio": ratio,
        }));
        prev = Some(&r.residual);
    }
    let finest = &reports.last().expect("nonempty").1.residual;
    let failed = tolerance.is_some_and(|tol| finest > tol);
    if let Some(tol) = tolerance {
        text.push_str(&format!(
            "finest residual {} tolerance {}",
            if failed { "exceeds" } else { "within" },
            coeff::format(tol)
        ));
    }
    Outcome::new(text.trim_end().to_string(), json!({ "rows": rows })).failed_if(failed)
}

fn check_table(reports: &[CriterionReport], timings: bool) -> Outcome {
    let mut lines = vec![];
    let mut rows = vec![];
    for r in reports {
        let mut line = format!(
            "{} criterion {}: {} ({} checks",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.title,
            r.checks
        );
        if timings {
            line.push_str(&format!(", {} ms", r.elapsed_ms));
        }
        line.push(')');
        lines.push(line);
        lines.extend(r.failures.iter().take(5).map(|f| format!("    {f}")));
        let mut v = json!(r);
        if !timings {
            v.as_object_mut().expect("report is an object").remove("elapsed_ms");
        }
        rows.push(v);
    }
    let failed = reports.iter().any(|r| !r.passed);
    Outcome::new(lines.join("\n"), Value::Array(rows)).failed_if(failed)
}
