//! Command orchestration and deterministic JSON/text reports.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{Mat, PrimeModulus};
use crate::character::{
    central_idempotents, columns_orthogonal, rows_orthonormal, splitting_element, GroupAlgebraElement, GroupContext,
};
use crate::cover::{builtin_action, pushforward_report, validate_action};
use crate::cyclic::{build_cyclic, cyclic_report, Variant};
use crate::error::{Error, Result};
use crate::group::{build_group, builtin, parse_generators, parse_multiplication_table, DEFAULT_CAP};
use crate::rep::{decompose, evaluation_iso_check, hom_dim, irreducible_models, MatrixRep};

pub const SCHEMA: u32 = 1;
pub const DEFAULT_MAX_DEGREE: usize = 12;

/// Groups and actions exercised by `verify-all`.
pub const VERIFY_ALL_COVERS: [(&str, &str); 8] = [
    ("C2", "faithful"),
    ("C3", "faithful"),
    ("C4", "faithful"),
    ("C6", "faithful"),
    ("S3", "perm3"),
    ("D4", "reflection"),
    ("Q8", "faithful"),
    ("A4", "faithful"),
];
pub const VERIFY_ALL_CYCLIC: [usize; 5] = [1, 2, 3, 4, 6];

/// One named check. The witness is only kept when the check fails.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub check: String,
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl VerificationOutcome {
    pub fn new(check: &str, anchor: &str, pass: bool, witness: impl FnOnce() -> Value) -> Self {
        VerificationOutcome {
            check: check.to_string(),
            anchor: anchor.to_string(),
            pass,
            witness: if pass { None } else { Some(witness()) },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Builtin group name.
    pub group: Option<String>,
    /// Generator file, one permutation in cycle notation per line.
    pub gens: Option<PathBuf>,
    /// Multiplication table file, converted to the left-regular action.
    pub table: Option<PathBuf>,
    pub prime: Option<u64>,
    pub max_degree: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            group: None,
            gens: None,
            table: None,
            prime: None,
            max_degree: DEFAULT_MAX_DEGREE,
            format: OutputFormat::Text,
            out: None,
            seed: 0,
        }
    }
}

/// The JSON document of a command and whether all of its checks passed.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandOutput {
    pub json: Value,
    pub pass: bool,
}

impl CommandOutput {
    fn new(command: &str, body: Value, checks: &[VerificationOutcome]) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        let mut json = json!({ "schema": SCHEMA, "command": command, "pass": pass, "checks": checks });
        if let (Value::Object(doc), Value::Object(extra)) = (&mut json, body) {
            doc.extend(extra);
        }
        CommandOutput { json, pass }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                s
            }
            OutputFormat::Text => render_text(&self.json),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Builds the group context from `--group`, `--gens` or `--table`, with an optional
/// prime override (`file_prime` comes from a matrix file).
pub fn load_context(config: &RunConfig, file_prime: Option<u64>) -> Result<GroupContext> {
    let sources = [config.group.is_some(), config.gens.is_some(), config.table.is_some()];
    if sources.iter().filter(|&&s| s).count() > 1 {
        return Err(Error::Parse("give only one of --group, --gens, --table".into()));
    }
    let group = if let Some(name) = &config.group {
        builtin(name)?
    } else if let Some(path) = &config.gens {
        build_group(&parse_generators(&read(path)?)?, DEFAULT_CAP)?.with_name(path.display().to_string())
    } else if let Some(path) = &config.table {
        build_group(&parse_multiplication_table(&read(path)?)?, DEFAULT_CAP)?.with_name(path.display().to_string())
    } else {
        return Err(Error::Parse("a group is required (--group, --gens or --table)".into()));
    };
    let prime = match (config.prime, file_prime) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::InvalidPrime { p: b, reason: format!("file modulus differs from --prime {a}") })
        }
        (a, b) => a.or(b),
    };
    match prime {
        Some(p) => GroupContext::with_prime(group, p),
        None => GroupContext::new(group),
    }
}

/// Parses `p <modulus>` followed by blank-line separated square matrices.
/// Lines starting with `#` are ignored.
pub fn parse_matrix_file(text: &str) -> Result<(u64, Vec<Vec<Vec<i64>>>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.starts_with('#'));
    let header = lines.by_ref().find(|l| !l.is_empty()).ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let p = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["p", value] => value.parse::<u64>().map_err(|_| Error::Parse(format!("bad modulus {value:?}")))?,
        _ => return Err(Error::Parse(format!("expected `p <modulus>`, found {header:?}"))),
    };
    let mut blocks: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut current: Vec<Vec<i64>> = Vec::new();
    for line in lines.chain(std::iter::once("")) {
        if line.is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        current.push(row);
    }
    let dim = blocks.first().map_or(0, Vec::len);
    for (k, b) in blocks.iter().enumerate() {
        if b.len() != dim || b.iter().any(|r| r.len() != dim) {
            return Err(Error::Parse(format!("matrix {k} is not {dim}x{dim}")));
        }
    }
    Ok((p, blocks))
}

fn file_matrices(path: &Path) -> Result<(u64, Vec<Vec<Vec<i64>>>)> {
    parse_matrix_file(&read(path)?)
}

fn to_mats(field: PrimeModulus, blocks: &[Vec<Vec<i64>>]) -> Vec<Mat> {
    blocks.iter().map(|b| Mat::from_rows(field, b)).collect()
}

fn signed_rows(field: PrimeModulus, rows: &[Vec<u64>]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.iter().map(|&v| field.signed(v)).collect()).collect()
}

fn table_checks(ctx: &GroupContext) -> Vec<VerificationOutcome> {
    let f = ctx.field;
    let order = ctx.order();
    let mut checks = vec![
        VerificationOutcome::new("table.rows", "⟨χ_i, χ_j⟩ = δ_ij", rows_orthonormal(ctx), || json!(null)),
        VerificationOutcome::new("table.columns", "column orthogonality", columns_orthogonal(ctx), || json!(null)),
    ];
    let sum_sq: u64 = ctx.table.degrees.iter().map(|d| d * d).sum();
    checks.push(VerificationOutcome::new("table.degrees", "Σ n_i² = |G|", sum_sq == order as u64, || {
        json!({ "sum": sum_sq, "order": order })
    }));
    let es = central_idempotents(&ctx.table, &ctx.group, &ctx.classes);
    let mut bad = Vec::new();
    let mut total = GroupAlgebraElement::zero(order);
    for (i, ei) in es.iter().enumerate() {
        for (j, ej) in es.iter().enumerate() {
            let prod = ei.convolve(ej, &ctx.group, f);
            let want = if i == j { ei.clone() } else { GroupAlgebraElement::zero(order) };
            if prod != want {
                bad.push(json!({ "product": [i, j] }));
            }
        }
        for g in 0..order {
            let b = GroupAlgebraElement::basis(order, g, f);
            if ei.convolve(&b, &ctx.group, f) != b.convolve(ei, &ctx.group, f) {
                bad.push(json!({ "central": i, "element": g }));
                break;
            }
        }
        total = total.add(ei, f);
    }
    if total != GroupAlgebraElement::one(order, f) {
        bad.push(json!("sum of idempotents is not 1"));
    }
    checks.push(VerificationOutcome::new("table.idempotents", "e_i e_j = δ_ij e_i, Σ e_i = 1, central", bad.is_empty(), || {
        json!(bad)
    }));
    let split: Vec<Value> = (0..ctx.irrep_count())
        .filter(|&i| ctx.degree(i) >= 2)
        .filter_map(|i| splitting_element(ctx, i).err().map(|e| json!({ "irrep": i, "error": e.to_string() })))
        .collect();
    checks.push(VerificationOutcome::new(
        "table.splitting",
        "every irreducible of degree ≥ 2 has a splitting element",
        split.is_empty(),
        || json!(split),
    ));
    checks
}

pub fn cmd_table(config: &RunConfig) -> Result<CommandOutput> {
    let ctx = load_context(config, None)?;
    let f = ctx.field;
    let checks = table_checks(&ctx);
    let characters: Vec<Vec<u64>> = ctx.table.irreps.iter().map(|c| c.values.clone()).collect();
    let idempotents: Vec<Vec<u64>> = central_idempotents(&ctx.table, &ctx.group, &ctx.classes)
        .into_iter()
        .map(|e| e.coeffs)
        .collect();
    let body = json!({
        "group": ctx.group.name(),
        "order": ctx.order(),
        "modulus": f.p(),
        "elements": ctx.group.elements(),
        "class_reps": ctx.table.class_reps,
        "class_sizes": ctx.table.class_sizes,
        "degrees": ctx.table.degrees,
        "characters": characters,
        "characters_signed": signed_rows(f, &characters),
        "idempotents": idempotents,
    });
    Ok(CommandOutput::new("table", body, &checks))
}

fn rep_checks(ctx: &GroupContext, rep: &MatrixRep, models: &[MatrixRep], label: &str) -> Result<(Value, Vec<VerificationOutcome>)> {
    let (dec, ty) = decompose(rep, ctx)?;
    let mut checks = Vec::new();
    let dim_ok = ty.dim(ctx) == rep.dim as u64;
    checks.push(VerificationOutcome::new(&format!("{label}.type_dim"), "Σ m_i n_i = dim", dim_ok, || {
        json!({ "type": ty })
    }));
    let mut homs = Vec::new();
    let mut eval_bad = Vec::new();
    for (i, model) in models.iter().enumerate() {
        homs.push(hom_dim(model, rep, ctx)? as u64);
        if let Err(e) = evaluation_iso_check(rep, i, ctx, model) {
            eval_bad.push(json!({ "irrep": i, "error": e.to_string() }));
        }
    }
    checks.push(VerificationOutcome::new(
        &format!("{label}.hom"),
        "dim Hom_G(V_i, E) = m_i",
        homs == ty.multiplicities,
        || json!({ "hom": homs, "type": ty }),
    ));
    checks.push(VerificationOutcome::new(
        &format!("{label}.evaluation"),
        "V_i ⊗ Hom_G(V_i, E) → e_i E is an isomorphism",
        eval_bad.is_empty(),
        || json!(eval_bad),
    ));
    let body = json!({
        "dim": rep.dim,
        "type": ty,
        "component_dims": dec.dims(),
        "hom_dims": homs,
    });
    Ok((body, checks))
}

/// `source` is `regular`, `perm` or a matrix file path.
pub fn cmd_decompose(config: &RunConfig, source: &str) -> Result<CommandOutput> {
    let (ctx, rep) = match source {
        "regular" | "perm" => {
            let ctx = load_context(config, None)?;
            let rep = if source == "regular" { ctx.regular_rep() } else { ctx.permutation_rep() };
            (ctx, rep)
        }
        path => {
            let (p, blocks) = file_matrices(Path::new(path))?;
            let ctx = load_context(config, Some(p))?;
            let dim = blocks.first().map_or(1, Vec::len);
            let rep = MatrixRep::from_generators(&ctx.group, ctx.field, dim, &to_mats(ctx.field, &blocks))?;
            (ctx, rep)
        }
    };
    let validation = rep.validate(&ctx.group)?;
    let models = irreducible_models(&ctx)?;
    let (mut body, checks) = rep_checks(&ctx, &rep, &models, "decompose")?;
    body["group"] = json!(ctx.group.name());
    body["modulus"] = json!(ctx.field.p());
    body["rep"] = json!(source);
    body["validation"] = json!(validation);
    body["degrees"] = json!(ctx.table.degrees);
    Ok(CommandOutput::new("decompose", body, &checks))
}

/// `action` is a builtin action name or a matrix file path.
pub fn cmd_cover(config: &RunConfig, action: &str) -> Result<CommandOutput> {
    let (ctx, gens) = if Path::new(action).is_file() {
        let (p, blocks) = file_matrices(Path::new(action))?;
        let ctx = load_context(config, Some(p))?;
        let mats = to_mats(ctx.field, &blocks);
        (ctx, mats)
    } else {
        let ctx = load_context(config, None)?;
        let mats = builtin_action(&ctx, action)?;
        (ctx, mats)
    };
    let n = gens.first().map_or(1, Mat::rows);
    let validated = validate_action(&ctx, n, &gens)?;
    let report = pushforward_report(&validated, &ctx, config.max_degree)?;
    let mut body = serde_json::to_value(&report).expect("reports serialize");
    body["action_source"] = json!(action);
    let checks = report.checks.clone();
    Ok(CommandOutput::new("cover", body, &checks))
}

pub fn cmd_cyclic(config: &RunConfig, n: usize, variant: Variant) -> Result<CommandOutput> {
    let model = build_cyclic(n, variant)?;
    if let Some(p) = config.prime {
        if p != model.modulus.p() {
            return Err(Error::InvalidPrime { p, reason: format!("cyclic models use p = {}", model.modulus.p()) });
        }
    }
    let report = cyclic_report(&model, config.seed)?;
    let body = serde_json::to_value(&report).expect("reports serialize");
    let checks = report.checks.clone();
    Ok(CommandOutput::new("cyclic", body, &checks))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Scenario {
    pub name: String,
    pub pass: bool,
    pub summary: Value,
    pub outcomes: Vec<VerificationOutcome>,
}

impl Scenario {
    fn new(name: String, summary: Value, outcomes: Vec<VerificationOutcome>) -> Self {
        Scenario { pass: outcomes.iter().all(|o| o.pass), name, summary, outcomes }
    }

    fn failed(name: String, err: &Error) -> Self {
        let outcome = VerificationOutcome::new("scenario", "scenario runs", false, || json!(err.to_string()));
        Scenario { name, pass: false, summary: Value::Null, outcomes: vec![outcome] }
    }
}

fn group_scenario(name: &str, action: &str, max_degree: usize) -> Result<Vec<Scenario>> {
    let ctx = GroupContext::new(builtin(name)?)?;
    let mut out = Vec::new();
    let checks = table_checks(&ctx);
    out.push(Scenario::new(
        format!("{name}/table"),
        json!({ "modulus": ctx.field.p(), "degrees": ctx.table.degrees }),
        checks,
    ));
    let models = irreducible_models(&ctx)?;
    for (label, rep) in [("regular", ctx.regular_rep()), ("perm", ctx.permutation_rep())] {
        let (body, mut checks) = rep_checks(&ctx, &rep, &models, label)?;
        if label == "regular" {
            let ty = body["type"].clone();
            checks.push(VerificationOutcome::new(
                "regular.type",
                "regular representation contains V_i n_i times",
                ty == json!(ctx.table.degrees),
                || json!({ "type": ty, "degrees": ctx.table.degrees }),
            ));
        }
        out.push(Scenario::new(format!("{name}/{label}"), body, checks));
    }
    let gens = builtin_action(&ctx, action)?;
    let n = gens.first().map_or(1, Mat::rows);
    let validated = validate_action(&ctx, n, &gens)?;
    let report = pushforward_report(&validated, &ctx, max_degree)?;
    out.push(Scenario::new(
        format!("{name}/cover-{action}"),
        json!({
            "variables": report.variables,
            "orientation": report.orientation,
            "generic_multiplicities": report.generic_multiplicities,
            "invariant_dims": report.invariant_dims,
        }),
        report.checks,
    ));
    Ok(out)
}

pub fn cmd_verify_all(config: &RunConfig) -> Result<CommandOutput> {
    let mut scenarios = Vec::new();
    for (name, action) in VERIFY_ALL_COVERS {
        match group_scenario(name, action, config.max_degree) {
            Ok(s) => scenarios.extend(s),
            Err(e) => scenarios.push(Scenario::failed(name.to_string(), &e)),
        }
    }
    for n in VERIFY_ALL_CYCLIC {
        for variant in [Variant::Polynomial, Variant::Laurent] {
            let label = format!("cyclic-{n}-{}", if variant == Variant::Polynomial { "polynomial" } else { "laurent" });
            match build_cyclic(n, variant).and_then(|m| cyclic_report(&m, config.seed)) {
                Ok(r) => scenarios.push(Scenario::new(
                    label,
                    json!({ "modulus": r.modulus, "det": r.det, "elementary_divisors": r.elementary_divisors }),
                    r.checks,
                )),
                Err(e) => scenarios.push(Scenario::failed(label, &e)),
            }
        }
    }
    let outcomes: Vec<VerificationOutcome> = scenarios
        .iter()
        .map(|s| VerificationOutcome::new(&s.name, "scenario", s.pass, || json!(null)))
        .collect();
    let body = json!({ "max_degree": config.max_degree, "seed": config.seed, "scenarios": scenarios });
    Ok(CommandOutput::new("verify-all", body, &outcomes))
}

fn flag(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_checks(out: &mut String, checks: &Value, indent: &str) {
    for c in checks.as_array().into_iter().flatten() {
        let _ = writeln!(
            out,
            "{indent}[{}] {}: {}",
            flag(c["pass"].as_bool().unwrap_or(false)),
            scalar(&c["check"]),
            scalar(&c["anchor"])
        );
        if let Some(w) = c.get("witness") {
            let _ = writeln!(out, "{indent}       witness: {w}");
        }
    }
}

fn render_grid(out: &mut String, title: &str, row_label: &str, rows: &Value) {
    let Some(rows) = rows.as_array() else { return };
    let _ = writeln!(out, "{title}");
    for (k, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.as_array().into_iter().flatten().map(|v| format!("{:>4}", scalar(v))).collect();
        let _ = writeln!(out, "  {row_label}{k:<3}{}", cells.join(""));
    }
}

/// Human-readable rendering of a command's JSON document.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let command = scalar(&doc["command"]);
    let _ = writeln!(out, "{command}: {}", flag(doc["pass"].as_bool().unwrap_or(false)));
    for key in ["group", "order", "modulus", "rep", "dim", "variables", "max_degree", "n", "zeta", "variant", "orientation"] {
        if let Some(v) = doc.get(key) {
            let _ = writeln!(out, "{key}: {}", scalar(v));
        }
    }
    for key in ["degrees", "class_sizes", "type", "component_dims", "hom_dims", "generic_multiplicities", "det", "elementary_divisors"] {
        if let Some(v) = doc.get(key) {
            let _ = writeln!(out, "{key}: {v}");
        }
    }
    if doc.get("characters_signed").is_some() {
        render_grid(&mut out, "characters (rows = irreducibles, columns = classes):", "χ", &doc["characters_signed"]);
    }
    if doc.get("multiplicities").is_some() {
        render_grid(&mut out, "multiplicities (rows = degree, columns = irreducibles):", "d=", &doc["multiplicities"]);
    }
    if let Some(scenarios) = doc.get("scenarios").and_then(Value::as_array) {
        for s in scenarios {
            let _ = writeln!(out, "[{}] {}", flag(s["pass"].as_bool().unwrap_or(false)), scalar(&s["name"]));
            render_checks(&mut out, &s["outcomes"], "    ");
        }
    } else {
        let _ = writeln!(out, "checks:");
        render_checks(&mut out, &doc["checks"], "  ");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(group: &str) -> RunConfig {
        RunConfig { group: Some(group.to_string()), ..RunConfig::default() }
    }

    #[test]
    fn table_command() {
        let out = cmd_table(&config("S3")).unwrap();
        assert!(out.pass);
        assert_eq!(out.json["degrees"], json!([1, 1, 2]));
        assert_eq!(out.json["modulus"], json!(7));
        assert_eq!(out.json["schema"], json!(1));
        let out = cmd_table(&config("C1")).unwrap();
        assert_eq!(out.json["characters"], json!([[1]]));
        let out = cmd_table(&config("Q8")).unwrap();
        assert_eq!((out.json["degrees"].clone(), out.json["modulus"].clone()), (json!([1, 1, 1, 1, 2]), json!(13)));
    }

    #[test]
    fn decompose_command() {
        let out = cmd_decompose(&config("S3"), "regular").unwrap();
        assert!(out.pass);
        assert_eq!(out.json["type"], json!([1, 1, 2]));
        assert_eq!(cmd_decompose(&config("C1"), "regular").unwrap().json["type"], json!([1]));
        assert_eq!(cmd_decompose(&config("S3"), "perm").unwrap().json["type"], json!([1, 0, 1]));
    }

    #[test]
    fn matrix_file_format() {
        let (p, blocks) = parse_matrix_file("p 7\n0 1\n1 0\n\n# rotation\n0 6\n1 6\n").unwrap();
        assert_eq!(p, 7);
        assert_eq!(blocks, vec![vec![vec![0, 1], vec![1, 0]], vec![vec![0, 6], vec![1, 6]]]);
        assert!(parse_matrix_file("q 7\n1\n").is_err());
        assert!(parse_matrix_file("p 7\n1 2\n3\n").is_err());
    }

    #[test]
    fn prime_override_validated() {
        let mut c = config("S3");
        c.prime = Some(13);
        assert_eq!(cmd_table(&c).unwrap().json["modulus"], json!(13));
        c.prime = Some(11);
        assert!(matches!(cmd_table(&c), Err(Error::InvalidPrime { .. })));
        c.prime = Some(2);
        assert_eq!(cmd_table(&c).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn cyclic_command() {
        let out = cmd_cyclic(&RunConfig::default(), 1, Variant::Polynomial).unwrap();
        assert!(out.pass);
        let text = out.render(OutputFormat::Text);
        assert!(text.starts_with("cyclic: PASS"));
    }

    #[test]
    fn failing_outcome_keeps_witness() {
        let o = VerificationOutcome::new("x", "y", false, || json!({ "d": 3 }));
        assert_eq!(o.witness, Some(json!({ "d": 3 })));
        assert_eq!(VerificationOutcome::new("x", "y", true, || json!(1)).witness, None);
    }
}
