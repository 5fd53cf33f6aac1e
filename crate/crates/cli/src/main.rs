//! Command-line front end: classify structure data, list covariants, apply
//! conformal moves, follow the translation flow, and reproduce the
//! vanishing-matrix table. Machine output is JSON (deterministic for fixed
//! inputs); `--format table` renders aligned text instead.
//!
//! Exit codes: 0 success; 1 malformed input (flags or JSON, with a
//! line/column diagnostic where available); 2 domain errors (poles, null
//! inversion centers, singular maps, flow blow-up); 3 a vanishing pattern
//! that matches no class row.

use serde_json::{json, Map, Number, Value};
use sextic_core::catalog::{catalog_sextic, catalog_y, entry, reproduce_table3, CATALOG};
use sextic_core::classify::{classify, hasse_order, ClassLabel, ClassVerdict, IdealName};
use sextic_core::conformal::{apply_move_y, ConformalMove};
use sextic_core::covariant::hilbert_basis;
use sextic_core::error::Error;
use sextic_core::flow::{integrate_checkpoints, Path as FlowPath};
use sextic_core::repspace::{
    sextic_from_y, xy_from_qrs, y_from_sextic, StructurePoint, Var, YSeptet,
};
use sextic_core::scalar::{Ctx, Scalar};
use sextic_core::sextic::{mobius_apply, MobiusMap, RootLoc, Sextic};

/// Significant digits used for every number in machine output.
const OUT_DIGITS: usize = 36;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&args));
}

/// Print a line, exiting quietly if the consumer closed the pipe.
fn say(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

fn run(args: &[String]) -> i32 {
    match run_inner(args) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            2
        }
        Err(CliError::Pattern(e)) => {
            eprintln!("error: {e}");
            3
        }
    }
}

enum CliError {
    Usage(String),
    Domain(Error),
    Pattern(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InconsistentPattern { .. } => CliError::Pattern(e),
            Error::Pole { .. }
            | Error::NullCenter
            | Error::FlowBlowUp { .. }
            | Error::SingularMobius
            | Error::DegenerateMultiRatio
            | Error::RepeatedRoots => CliError::Domain(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn usage() -> String {
    [
        "usage: sextic-class [--precision N] [--tol X] [--format json|table] [--seed N] <command>",
        "",
        "commands:",
        "  classify  --y <json> | --qrs <json> | --system NAME --point x1,x2,x3 | --batch FILE",
        "  covariants --p <json> | --y <json>",
        "  transform --y <json> [--invert u1,u2,u3 | --dilate d | --mobius a,b,c,d]...",
        "  flow      --from <json> --path x1,x2,x3;... --steps N",
        "  catalog   list | show LABEL | hasse",
        "  table3",
    ]
    .join("\n")
}

struct Globals {
    ctx: Ctx,
    format_table: bool,
    #[allow(dead_code)]
    seed: u64,
}

fn run_inner(args: &[String]) -> Result<(), CliError> {
    let mut precision: u32 = std::env::var("SEXTIC_PRECISION")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(64);
    let mut tol: f64 = std::env::var("SEXTIC_TOL")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1e-30);
    let mut format_table = false;
    let mut seed: u64 = 0;
    let mut rest: Vec<String> = Vec::new();
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--precision" => {
                precision = take(&mut it, "--precision")?
                    .parse()
                    .map_err(|_| CliError::Usage("--precision expects an integer".into()))?
            }
            "--tol" => {
                tol = take(&mut it, "--tol")?
                    .parse()
                    .map_err(|_| CliError::Usage("--tol expects a float".into()))?
            }
            "--format" => {
                let v = take(&mut it, "--format")?;
                match v.as_str() {
                    "json" => format_table = false,
                    "table" => format_table = true,
                    other => {
                        return Err(CliError::Usage(format!("unknown format `{other}`")));
                    }
                }
            }
            "--seed" => {
                seed = take(&mut it, "--seed")?
                    .parse()
                    .map_err(|_| CliError::Usage("--seed expects an integer".into()))?
            }
            "--help" | "-h" => {
                say(&usage());
                return Ok(());
            }
            _ => {
                rest.push(arg.clone());
                rest.extend(it.cloned());
                break;
            }
        }
    }
    if rest.is_empty() {
        return Err(CliError::Usage(usage()));
    }
    let g = Globals {
        ctx: Ctx::new(precision, tol),
        format_table,
        seed,
    };
    let cmd = rest.remove(0);
    match cmd.as_str() {
        "classify" => cmd_classify(&g, &rest),
        "covariants" => cmd_covariants(&g, &rest),
        "transform" => cmd_transform(&g, &rest),
        "flow" => cmd_flow(&g, &rest),
        "catalog" => cmd_catalog(&g, &rest),
        "table3" => cmd_table3(&g, &rest),
        other => Err(CliError::Usage(format!(
            "unknown subcommand `{other}`\n{}",
            usage()
        ))),
    }
}

fn take<'a>(
    it: &mut std::iter::Peekable<std::slice::Iter<'a, String>>,
    flag: &str,
) -> Result<&'a String, CliError> {
    it.next()
        .ok_or_else(|| CliError::Usage(format!("{flag} expects a value")))
}

// ---------------------------------------------------------------------------
// Input parsing
// ---------------------------------------------------------------------------

fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| {
        CliError::Usage(format!(
            "malformed JSON at line {}, column {}: {}",
            e.line(),
            e.column(),
            e
        ))
    })
}

fn scalar_from_value(v: &Value, ctx: &Ctx) -> Result<Scalar, CliError> {
    let from_number = |n: &Value| -> Result<Scalar, CliError> {
        let text = match n {
            Value::Number(num) => num.to_string(),
            Value::String(s) => s.clone(),
            _ => return Err(CliError::Usage("expected a number".into())),
        };
        ctx.parse_real(&text)
            .ok_or_else(|| CliError::Usage(format!("cannot parse number `{text}`")))
    };
    match v {
        Value::Array(pair) if pair.len() == 2 => {
            let re = from_number(&pair[0])?;
            let im = from_number(&pair[1])?;
            Ok(&re + &im.mul_i())
        }
        Value::Number(_) | Value::String(_) => from_number(v),
        _ => Err(CliError::Usage(
            "expected a number or an [re, im] pair".into(),
        )),
    }
}

fn septet_from_value(v: &Value, ctx: &Ctx) -> Result<YSeptet, CliError> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 7)
        .ok_or_else(|| CliError::Usage("expected an array of 7 [re, im] pairs".into()))?;
    let mut out: Vec<Scalar> = Vec::with_capacity(7);
    for item in arr {
        out.push(scalar_from_value(item, ctx)?);
    }
    Ok(out.try_into().unwrap())
}

fn sextic_from_value(v: &Value, ctx: &Ctx) -> Result<Sextic, CliError> {
    let y = septet_from_value(v, ctx)?;
    Ok(Sextic::new(y.to_vec()))
}

fn qrs_from_value(v: &Value, ctx: &Ctx) -> Result<StructurePoint, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::Usage("expected a structure-point object".into()))?;
    let mut sp = StructurePoint::zero(ctx);
    let s = obj
        .get("S")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 3)
        .ok_or_else(|| CliError::Usage("structure point needs \"S\": [s1, s2, s3]".into()))?;
    sp.set(Var::S1, scalar_from_value(&s[0], ctx)?);
    sp.set(Var::S2, scalar_from_value(&s[1], ctx)?);
    sp.set(Var::S3, scalar_from_value(&s[2], ctx)?);
    let r = obj
        .get("R")
        .and_then(Value::as_object)
        .ok_or_else(|| CliError::Usage("structure point needs \"R\": {\"12_1\": ...}".into()))?;
    for (key, var) in [
        ("12_1", Var::R12_1),
        ("12_2", Var::R12_2),
        ("13_1", Var::R13_1),
        ("13_3", Var::R13_3),
        ("23_2", Var::R23_2),
        ("23_3", Var::R23_3),
    ] {
        let item = r
            .get(key)
            .ok_or_else(|| CliError::Usage(format!("missing R component \"{key}\"")))?;
        sp.set(var, scalar_from_value(item, ctx)?);
    }
    let q = obj
        .get("Q123")
        .ok_or_else(|| CliError::Usage("structure point needs \"Q123\"".into()))?;
    sp.set(Var::Q123, scalar_from_value(q, ctx)?);
    Ok(sp)
}

/// Parse `a`, `a+bi`, `a-bi`, `bi`, `i`, `-i`.
fn parse_complex(text: &str, ctx: &Ctx) -> Result<Scalar, CliError> {
    let t = text.trim();
    let bad = || CliError::Usage(format!("cannot parse complex number `{text}`"));
    if let Some(stripped) = t.strip_suffix(['i', 'I']) {
        // pure imaginary or full complex: find the split point of the
        // imaginary summand (last +/- not at position 0 and not after e/E).
        let bytes = stripped.as_bytes();
        let mut split = None;
        for pos in (1..bytes.len()).rev() {
            let b = bytes[pos];
            if (b == b'+' || b == b'-') && bytes[pos - 1] != b'e' && bytes[pos - 1] != b'E' {
                split = Some(pos);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(pos) => (&stripped[..pos], &stripped[pos..]),
            None => ("0", stripped),
        };
        let im_text = match im_part {
            "" | "+" => "1".to_string(),
            "-" => "-1".to_string(),
            other => other.to_string(),
        };
        let re = ctx.parse_real(re_part.trim()).ok_or_else(bad)?;
        let im = ctx.parse_real(im_text.trim()).ok_or_else(bad)?;
        Ok(&re + &im.mul_i())
    } else {
        ctx.parse_real(t).ok_or_else(bad)
    }
}

fn parse_triple(text: &str, ctx: &Ctx) -> Result<[Scalar; 3], CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "expected three comma-separated values, got `{text}`"
        )));
    }
    Ok([
        parse_complex(parts[0], ctx)?,
        parse_complex(parts[1], ctx)?,
        parse_complex(parts[2], ctx)?,
    ])
}

// ---------------------------------------------------------------------------
// Output rendering
// ---------------------------------------------------------------------------

fn num(s: String) -> Value {
    Value::Number(s.parse::<Number>().expect("decimal rendering is a valid JSON number"))
}

fn scalar_value(x: &Scalar) -> Value {
    let (re, im) = x.to_decimal_parts(OUT_DIGITS);
    Value::Array(vec![num(re), num(im)])
}

fn septet_value(y: &YSeptet) -> Value {
    Value::Array(y.iter().map(scalar_value).collect())
}

fn sextic_value(p: &Sextic) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_value).collect())
}

fn root_value(loc: &RootLoc) -> Value {
    match loc {
        RootLoc::Infinity => Value::String("inf".into()),
        RootLoc::Finite(z) => scalar_value(z),
    }
}

fn verdict_value(v: &ClassVerdict) -> Value {
    let mut vanishing = Map::new();
    let mut ratios = Map::new();
    for (k, ideal) in IdealName::PERSISTENT.iter().enumerate() {
        vanishing.insert(ideal.label().into(), Value::Bool(v.vanishing[k]));
        ratios.insert(
            ideal.label().into(),
            json!(format!("{:.3e}", v.residual_ratios[k])),
        );
    }
    json!({
        "class": v.label.label(),
        "vanishing": Value::Object(vanishing),
        "residual_ratios": Value::Object(ratios),
        "diagnostics": {
            "partition": v.diagnostics.root_structure.partition,
            "roots": v.diagnostics.root_structure.roots.iter()
                .map(|(loc, m)| json!({"location": root_value(loc), "multiplicity": m}))
                .collect::<Vec<_>>(),
            "multiratios": v.diagnostics.multiratios.iter().map(scalar_value).collect::<Vec<_>>(),
            "m6": v.diagnostics.m6,
        },
    })
}

fn emit(value: &Value) {
    say(&serde_json::to_string(value).expect("serializable"));
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_classify(g: &Globals, args: &[String]) -> Result<(), CliError> {
    let ctx = &g.ctx;
    let mut y_arg = None;
    let mut qrs_arg = None;
    let mut system = None;
    let mut point = None;
    let mut batch = None;
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--y" => y_arg = Some(take(&mut it, "--y")?.clone()),
            "--qrs" => qrs_arg = Some(take(&mut it, "--qrs")?.clone()),
            "--system" => system = Some(take(&mut it, "--system")?.clone()),
            "--point" => point = Some(take(&mut it, "--point")?.clone()),
            "--batch" => batch = Some(take(&mut it, "--batch")?.clone()),
            other => return Err(CliError::Usage(format!("unknown flag `{other}`"))),
        }
    }
    if let Some(path) = batch {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let value = parse_json(line)?;
            let y = value_to_y(&value, ctx)?;
            let verdict = classify(&y, ctx)?;
            emit(&verdict_value(&verdict));
        }
        return Ok(());
    }
    let y: YSeptet = if let Some(text) = y_arg {
        septet_from_value(&parse_json(&text)?, ctx)?
    } else if let Some(text) = qrs_arg {
        let sp = qrs_from_value(&parse_json(&text)?, ctx)?;
        let (_, y) = xy_from_qrs(&sp, ctx);
        y
    } else if let Some(name) = system {
        let label = ClassLabel::from_label(&name)
            .ok_or_else(|| CliError::Usage(format!("unknown system `{name}`")))?;
        let pt = parse_triple(
            &point.ok_or_else(|| CliError::Usage("--system needs --point".into()))?,
            ctx,
        )?;
        catalog_y(label, &pt, ctx)?
    } else {
        return Err(CliError::Usage(
            "classify needs --y, --qrs, --system/--point, or --batch".into(),
        ));
    };
    let verdict = classify(&y, ctx)?;
    if g.format_table {
        say(&format!("class: {}", verdict.label));
        say(&format!("partition: {:?}", verdict.diagnostics.root_structure.partition));
        for (k, ideal) in IdealName::PERSISTENT.iter().enumerate() {
            say(&format!(
                "  {:12} {}",
                ideal.label(),
                if verdict.vanishing[k] { "vanishes" } else { "-" }
            ));
        }
    } else {
        emit(&verdict_value(&verdict));
    }
    Ok(())
}

fn value_to_y(value: &Value, ctx: &Ctx) -> Result<YSeptet, CliError> {
    if value.is_array() {
        septet_from_value(value, ctx)
    } else {
        let sp = qrs_from_value(value, ctx)?;
        let (_, y) = xy_from_qrs(&sp, ctx);
        Ok(y)
    }
}

fn cmd_covariants(g: &Globals, args: &[String]) -> Result<(), CliError> {
    let ctx = &g.ctx;
    let mut p_arg = None;
    let mut y_arg = None;
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--p" => p_arg = Some(take(&mut it, "--p")?.clone()),
            "--y" => y_arg = Some(take(&mut it, "--y")?.clone()),
            other => return Err(CliError::Usage(format!("unknown flag `{other}`"))),
        }
    }
    let p = if let Some(text) = p_arg {
        sextic_from_value(&parse_json(&text)?, ctx)?
    } else if let Some(text) = y_arg {
        sextic_from_y(&septet_from_value(&parse_json(&text)?, ctx)?, ctx)
    } else {
        return Err(CliError::Usage("covariants needs --p or --y".into()));
    };
    let basis = hilbert_basis(&p);
    if g.format_table {
        for cov in &basis {
            let norm = Scalar::max_abs(&cov.poly);
            say(&format!(
                "{:5} d={:2} k={:2} m={:2}  max|coeff| = {:.6e}",
                cov.name.label(),
                cov.degree,
                cov.order,
                cov.weight,
                norm.to_f64()
            ));
        }
        return Ok(());
    }
    let items: Vec<Value> = basis
        .iter()
        .map(|cov| {
            json!({
                "name": cov.name.label(),
                "degree": cov.degree,
                "order": cov.order,
                "weight": cov.weight,
                "coeffs": Value::Array(cov.poly.iter().map(scalar_value).collect()),
            })
        })
        .collect();
    emit(&Value::Array(items));
    Ok(())
}

fn cmd_transform(g: &Globals, args: &[String]) -> Result<(), CliError> {
    let ctx = &g.ctx;
    let mut y_arg = None;
    let mut moves: Vec<(String, String)> = Vec::new();
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--y" => y_arg = Some(take(&mut it, "--y")?.clone()),
            "--invert" | "--dilate" | "--mobius" => {
                moves.push((arg.clone(), take(&mut it, arg)?.clone()));
            }
            other => return Err(CliError::Usage(format!("unknown flag `{other}`"))),
        }
    }
    let text = y_arg.ok_or_else(|| CliError::Usage("transform needs --y".into()))?;
    let mut y = septet_from_value(&parse_json(&text)?, ctx)?;
    for (kind, value) in &moves {
        match kind.as_str() {
            "--invert" => {
                let center = parse_triple(value, ctx)?;
                y = apply_move_y(&y, &ConformalMove::Inversion { center }, ctx)?;
            }
            "--dilate" => {
                let factor = parse_complex(value, ctx)?;
                y = apply_move_y(&y, &ConformalMove::Dilation { factor }, ctx)?;
            }
            "--mobius" => {
                let parts: Vec<&str> = value.split(',').collect();
                if parts.len() != 4 {
                    return Err(CliError::Usage("--mobius expects a,b,c,d".into()));
                }
                let m = MobiusMap::new(
                    parse_complex(parts[0], ctx)?,
                    parse_complex(parts[1], ctx)?,
                    parse_complex(parts[2], ctx)?,
                    parse_complex(parts[3], ctx)?,
                )?;
                let p = sextic_from_y(&y, ctx);
                y = y_from_sextic(&mobius_apply(&p, &m), ctx);
            }
            _ => unreachable!(),
        }
    }
    let p = sextic_from_y(&y, ctx);
    emit(&json!({ "y": septet_value(&y), "sextic": sextic_value(&p) }));
    Ok(())
}

fn cmd_flow(g: &Globals, args: &[String]) -> Result<(), CliError> {
    let ctx = &g.ctx;
    let mut from_arg = None;
    let mut path_arg = None;
    let mut steps: u32 = 64;
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--from" => from_arg = Some(take(&mut it, "--from")?.clone()),
            "--path" => path_arg = Some(take(&mut it, "--path")?.clone()),
            "--steps" => {
                steps = take(&mut it, "--steps")?
                    .parse()
                    .map_err(|_| CliError::Usage("--steps expects an integer".into()))?
            }
            other => return Err(CliError::Usage(format!("unknown flag `{other}`"))),
        }
    }
    let sp0 = qrs_from_value(
        &parse_json(&from_arg.ok_or_else(|| CliError::Usage("flow needs --from".into()))?)?,
        ctx,
    )?;
    let path_text = path_arg.ok_or_else(|| CliError::Usage("flow needs --path".into()))?;
    let mut waypoints = vec![[ctx.zero(), ctx.zero(), ctx.zero()]];
    for leg in path_text.split(';') {
        waypoints.push(parse_triple(leg, ctx)?);
    }
    let path = FlowPath::new(waypoints, steps);
    let checkpoints = integrate_checkpoints(&sp0, &path, ctx)?;
    let mut out = Vec::new();
    for (k, sp) in checkpoints.iter().enumerate() {
        let (_, y) = xy_from_qrs(sp, ctx);
        let verdict = classify(&y, ctx)?;
        let mut obj = Map::new();
        obj.insert("checkpoint".into(), json!(k));
        obj.insert("y".into(), septet_value(&y));
        obj.insert("class".into(), json!(verdict.label.label()));
        let mut ratios = Map::new();
        for (i, ideal) in IdealName::PERSISTENT.iter().enumerate() {
            ratios.insert(
                ideal.label().into(),
                json!(format!("{:.3e}", verdict.residual_ratios[i])),
            );
        }
        obj.insert("residual_ratios".into(), Value::Object(ratios));
        out.push(Value::Object(obj));
    }
    emit(&Value::Array(out));
    Ok(())
}

fn cmd_catalog(g: &Globals, args: &[String]) -> Result<(), CliError> {
    let ctx = &g.ctx;
    match args.first().map(String::as_str) {
        Some("list") => {
            let h = hasse_order();
            let items: Vec<Value> = CATALOG
                .iter()
                .map(|e| {
                    let node = h.node(e.label);
                    json!({
                        "label": e.label.label(),
                        "potential": e.potential,
                        "poles": e.poles,
                        "factor_structure": node.factor_structure,
                        "bocher": node.bocher_bracket,
                        "hilbert_dim": node.hilbert_dim,
                    })
                })
                .collect();
            emit(&Value::Array(items));
            Ok(())
        }
        Some("show") => {
            let name = args
                .get(1)
                .ok_or_else(|| CliError::Usage("catalog show needs a label".into()))?;
            let label = ClassLabel::from_label(name)
                .ok_or_else(|| CliError::Usage(format!("unknown system `{name}`")))?;
            let e = entry(label);
            let h = hasse_order();
            let node = h.node(label);
            let mut obj = json!({
                "label": e.label.label(),
                "potential": e.potential,
                "poles": e.poles,
                "factor_structure": node.factor_structure,
                "bocher": node.bocher_bracket,
                "hilbert_dim": node.hilbert_dim,
            });
            if let Some(point) = args.get(2) {
                let pt = parse_triple(point, ctx)?;
                let p = catalog_sextic(label, &pt, ctx)?;
                obj["sextic"] = sextic_value(&p);
            }
            emit(&obj);
            Ok(())
        }
        Some("hasse") => {
            let h = hasse_order();
            say("digraph degenerations {");
            for node in &h.nodes {
                say(&format!(
                    "  \"{}\" [label=\"{}\\n{} d={}\"];",
                    node.label.label(),
                    node.label.label(),
                    node.factor_structure,
                    node.hilbert_dim
                ));
            }
            for (from, to) in &h.edges {
                say(&format!("  \"{}\" -> \"{}\";", from.label(), to.label()));
            }
            say("}");
            Ok(())
        }
        _ => Err(CliError::Usage(
            "catalog expects: list | show LABEL [point] | hasse".into(),
        )),
    }
}

fn cmd_table3(g: &Globals, _args: &[String]) -> Result<(), CliError> {
    let ctx = &g.ctx;
    let report = reproduce_table3(ctx)?;
    if g.format_table {
        let mut header = format!("{:6}", "");
        for ideal in IdealName::PERSISTENT {
            header.push_str(&format!("{:>12}", ideal.label()));
        }
        say(&header);
        for (row, e) in CATALOG.iter().enumerate() {
            let mut line = format!("{:6}", e.label.label());
            for col in 0..9 {
                line.push_str(&format!("{:>12}", if report.matrix[row][col] { "0" } else { "" }));
            }
            say(&line);
        }
        say(if report.ok() { "PASS" } else { "FAIL" });
        return Ok(());
    }
    let rows: Vec<Value> = CATALOG
        .iter()
        .enumerate()
        .map(|(row, e)| {
            let mut cols = Map::new();
            for (col, ideal) in IdealName::PERSISTENT.iter().enumerate() {
                cols.insert(ideal.label().into(), Value::Bool(report.matrix[row][col]));
            }
            json!({ "system": e.label.label(), "vanishing": Value::Object(cols) })
        })
        .collect();
    emit(&json!({ "ok": report.ok(), "rows": rows }));
    if !report.ok() {
        return Err(CliError::Pattern(Error::InconsistentPattern {
            residuals: vec![],
        }));
    }
    Ok(())
}
