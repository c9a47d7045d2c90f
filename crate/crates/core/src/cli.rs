//! Command-line front end. `run` is pure apart from reading constants files,
//! so the binary and the tests share it.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bignum::{BigReal, NumericContext};
use crate::characteristics::{alpha_characteristic, compute_set, PrimePair};
use crate::electroweak::{compare, predict, MeasuredInputs};
use crate::error::{Error, Result};
use crate::geometry::{build_system, verify_identities, IdentityCheck};
use crate::kinematics::{build_orbit, light_speed_check, marry_with_geometry, Subgroup};
use crate::report::{fixed, json_num, render_json, Table};
use crate::search::{
    enumerate_pairs, load_constants, matches_json, matches_table, reference_constants, scan,
    ConstantRecord, ScanBounds, DEFAULT_SCAN_DIGITS,
};

/// Exit status and rendered streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NO_MATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cyclic-alpha",
    version,
    about = "Characteristics of cyclic-group polygon systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic set of a pair
    Char {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Concentric circle radii and identity residuals
    Geometry {
        #[command(flatten)]
        pair: PairArgs,
        /// Inscribed radius of the n1·n2-gon
        #[arg(long = "r-b", default_value = "1", value_parser = parse_real)]
        r_b: BigReal,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Quantized orbit, from --alpha or from a pair and subgroup
    Kinematics {
        #[arg(long, value_parser = parse_real)]
        alpha: Option<BigReal>,
        #[arg(long)]
        n1: Option<u64>,
        #[arg(long)]
        n2: Option<u64>,
        #[arg(long)]
        relax: bool,
        #[arg(long, value_enum, default_value_t = SubgroupArg::N1)]
        subgroup: SubgroupArg,
        /// Outer radius
        #[arg(long, default_value = "1", value_parser = parse_real)]
        r0: BigReal,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Electroweak predictions and comparison with measured values
    Predict {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        constants_file: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Full identity suite for a pair
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long = "r-b", default_value = "1", value_parser = parse_real)]
        r_b: BigReal,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Scan pairs for characteristics close to measured constants
    Search {
        /// Name of a row in the constants table (repeatable); default all
        #[arg(long, conflicts_with = "value")]
        target: Vec<String>,
        /// Ad-hoc target value instead of the constants table
        #[arg(long, value_parser = parse_real)]
        value: Option<BigReal>,
        #[arg(long, requires = "value", value_parser = parse_real)]
        uncertainty: Option<BigReal>,
        #[arg(long)]
        constants_file: Option<PathBuf>,
        #[arg(long, default_value_t = 150)]
        max_n1: u64,
        #[arg(long, default_value_t = 50)]
        max_n2: u64,
        /// Acceptance threshold in σ
        #[arg(long, default_value = "3", value_parser = parse_real)]
        sigma: BigReal,
        /// Relative tolerance for targets without uncertainty
        #[arg(long, default_value = "1e-3", value_parser = parse_real)]
        rel_tolerance: BigReal,
        /// Include composite orders
        #[arg(long)]
        relax: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    n1: u64,
    #[arg(long)]
    n2: u64,
    /// Allow composite and equal orders
    #[arg(long)]
    relax: bool,
}

impl PairArgs {
    fn pair(&self) -> Result<PrimePair> {
        PrimePair::with_check(self.n1, self.n2, !self.relax)
    }
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Decimal places of output
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=1000))]
    digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SubgroupArg {
    N1,
    N2,
}

impl From<SubgroupArg> for Subgroup {
    fn from(s: SubgroupArg) -> Self {
        match s {
            SubgroupArg::N1 => Subgroup::N1,
            SubgroupArg::N2 => Subgroup::N2,
        }
    }
}

fn parse_real(s: &str) -> std::result::Result<BigReal, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A rendered result; `code` is nonzero for a report that is itself a failure.
struct Rendered {
    text: String,
    json: Value,
    code: i32,
    stderr: String,
}

impl Rendered {
    fn ok(text: String, json: Value) -> Self {
        Rendered {
            text,
            json,
            code: EXIT_OK,
            stderr: String::new(),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return clap_outcome(e),
    };
    let format = match &cli.command {
        Command::Char { out, .. }
        | Command::Geometry { out, .. }
        | Command::Kinematics { out, .. }
        | Command::Predict { out, .. }
        | Command::Verify { out, .. }
        | Command::Search { out, .. } => out.format,
    };
    match execute(cli.command) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: match format {
                Format::Table => r.text,
                Format::Json => render_json(&r.json),
            },
            stderr: r.stderr,
        },
        Err(e) => error_outcome(e.category(), &e.to_string()),
    }
}

fn error_outcome(category: &str, message: &str) -> Outcome {
    Outcome {
        code: EXIT_ERROR,
        stdout: String::new(),
        stderr: format!("error:{category}: {message}\n"),
    }
}

fn clap_outcome(e: clap::Error) -> Outcome {
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
            code: EXIT_OK,
            stdout: e.render().to_string(),
            stderr: String::new(),
        },
        kind => {
            let category = match kind {
                ErrorKind::InvalidValue | ErrorKind::ValueValidation => "validation",
                _ => "parse",
            };
            let rendered = e.render().to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            let mut out = error_outcome(category, first);
            out.stderr.push_str(&rendered);
            if !rendered.ends_with('\n') {
                out.stderr.push('\n');
            }
            out
        }
    }
}

fn context(digits: u32) -> Result<NumericContext> {
    NumericContext::new(digits)
}

fn execute(command: Command) -> Result<Rendered> {
    match command {
        Command::Char { pair, out } => char_command(&pair.pair()?, out.digits),
        Command::Geometry { pair, r_b, out } => geometry_command(&pair.pair()?, &r_b, out.digits),
        Command::Kinematics {
            alpha,
            n1,
            n2,
            relax,
            subgroup,
            r0,
            out,
        } => {
            let pair = match (n1, n2) {
                (Some(a), Some(b)) => Some(PrimePair::with_check(a, b, !relax)?),
                (None, None) => None,
                _ => {
                    return Err(Error::Validation(
                        "--n1 and --n2 must be given together".into(),
                    ))
                }
            };
            kinematics_command(alpha, pair, subgroup.into(), &r0, out.digits)
        }
        Command::Predict {
            pair,
            constants_file,
            out,
        } => predict_command(&pair.pair()?, constants_file, out.digits),
        Command::Verify { pair, r_b, out } => verify_command(&pair.pair()?, &r_b, out.digits),
        Command::Search {
            target,
            value,
            uncertainty,
            constants_file,
            max_n1,
            max_n2,
            sigma,
            rel_tolerance,
            relax,
            out,
        } => {
            let mut bounds = ScanBounds::new(max_n1, max_n2)?;
            bounds.sigma_threshold = sigma;
            bounds.relative_tolerance = rel_tolerance;
            bounds.prime_only = !relax;
            bounds.validate()?;
            let targets = match value {
                Some(v) => vec![ConstantRecord::new(
                    "value",
                    v,
                    uncertainty.unwrap_or_default(),
                )],
                None => select_targets(constants_file, &target)?,
            };
            search_command(&targets, &bounds, out.digits)
        }
    }
}

fn pair_json(pair: &PrimePair) -> Value {
    json!({ "n1": pair.n1(), "n2": pair.n2(), "order": pair.order(), "swapped": pair.was_swapped() })
}

fn header(pair: &PrimePair, digits: u32) -> String {
    let mut s = format!("pair {pair}, order {}, digits {digits}\n", pair.order());
    if pair.was_swapped() {
        s.push_str("note: orders swapped so that n1 > n2\n");
    }
    s
}

/// Quantity rows shared by the table and JSON renderings.
struct Quantities {
    rows: Vec<(String, String, Option<BigReal>)>,
}

impl Quantities {
    fn new() -> Self {
        Quantities { rows: Vec::new() }
    }

    fn add(&mut self, name: &str, symbol: impl Into<String>, value: Option<&BigReal>) {
        self.rows
            .push((name.to_string(), symbol.into(), value.cloned()));
    }

    fn table(&self, digits: u32) -> String {
        let mut t = Table::new(["quantity", "symbol", "value"]);
        for (name, symbol, value) in &self.rows {
            let v = value
                .as_ref()
                .map_or_else(|| "undefined".to_string(), |v| fixed(v, digits));
            t.push([name.clone(), symbol.clone(), v]);
        }
        t.render()
    }

    fn json(&self, digits: u32) -> Value {
        let mut map = Map::new();
        for (name, _, value) in &self.rows {
            map.insert(
                name.clone(),
                value.as_ref().map_or(Value::Null, |v| json_num(v, digits)),
            );
        }
        Value::Object(map)
    }
}

fn char_command(pair: &PrimePair, digits: u32) -> Result<Rendered> {
    let ctx = context(digits)?;
    let set = compute_set(pair, &ctx)?;
    let (n1, n2, order) = (pair.n1(), pair.n2(), pair.order());
    let mut q = Quantities::new();
    q.add("chi_n1", format!("pi/{n1}"), Some(set.chi_n1.radians()));
    q.add("chi_n2", format!("pi/{n2}"), Some(set.chi_n2.radians()));
    q.add(
        "chi_n1n2",
        format!("pi/{order}"),
        Some(set.chi_n1n2.radians()),
    );
    q.add("beta", format!("beta({order})"), Some(&set.beta));
    q.add(
        "alpha_n1",
        format!("alpha_{n1}({order})"),
        Some(&set.alpha_n1),
    );
    q.add(
        "alpha_n2",
        format!("alpha_{n2}({order})"),
        Some(&set.alpha_n2),
    );
    q.add(
        "chi_star_n1",
        format!("chi*_{n1}"),
        Some(set.chi_star_n1.radians()),
    );
    q.add(
        "chi_star_n2",
        format!("chi*_{n2}"),
        set.chi_star_n2.as_ref().map(|a| a.radians()),
    );
    q.add(
        "alpha_n1_d",
        format!("alpha_{n1}/{n2}"),
        Some(&set.alpha_n1_d),
    );
    q.add(
        "alpha_n1_e",
        format!("alpha_{n2}/{n1}"),
        Some(&set.alpha_n1_e),
    );
    q.add("sin2_theta_g", "sin^2(theta_G)", set.sin2_theta_g.as_ref());
    q.add(
        "ratio_d_e",
        format!("cos(pi/{n1})/cos(pi/{n2})"),
        set.ratio_d_e.as_ref(),
    );
    let text = header(pair, digits) + &q.table(digits);
    let json = json!({
        "command": "char",
        "pair": pair_json(pair),
        "digits": digits,
        "values": q.json(digits),
    });
    Ok(Rendered::ok(text, json))
}

fn checks_table(checks: &[IdentityCheck], digits: u32) -> String {
    let mut t = Table::new(["check", "relation", "residual", "result"]);
    for c in checks {
        let verdict = if c.passed { "pass" } else { "FAIL" };
        t.push([
            c.label.clone(),
            c.relation.clone(),
            fixed(&c.residual, digits),
            verdict.to_string(),
        ]);
    }
    t.render()
}

fn checks_json(checks: &[IdentityCheck], digits: u32) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                json!({
                    "label": c.label,
                    "relation": c.relation,
                    "residual": json_num(&c.residual, digits),
                    "passed": c.passed,
                })
            })
            .collect(),
    )
}

fn geometry_command(pair: &PrimePair, r_b: &BigReal, digits: u32) -> Result<Rendered> {
    let ctx = context(digits)?;
    let system = build_system(pair, r_b, &ctx)?;
    let report = verify_identities(&system, &ctx, &ctx.loose_tolerance(2));
    let [a, b, c] = system.polygon_sides();
    let mut q = Quantities::new();
    q.add("r_b", format!("inscribed, P_{a}"), Some(&system.r_b));
    q.add("r_c", "threading circle", Some(&system.r_c));
    q.add("r_a", format!("circumscribed, P_{a}"), Some(&system.r_a));
    q.add("r_d", format!("circumscribed, P_{b}"), Some(&system.r_d));
    q.add("r_e", format!("circumscribed, P_{c}"), Some(&system.r_e));
    q.add(
        "perimeter",
        format!("perimeter of P_{a}"),
        Some(&system.perimeter),
    );
    q.add("l_n1", format!("l_{}", pair.n1()), Some(&system.l_n1));
    q.add("l_n2", format!("l_{}", pair.n2()), Some(&system.l_n2));
    q.add(
        "l_n1n2",
        format!("l_{}", pair.order()),
        Some(&system.l_n1n2),
    );
    let text = format!(
        "{}{}\n{}",
        header(pair, digits),
        q.table(digits),
        checks_table(&report.checks, digits)
    );
    let json = json!({
        "command": "geometry",
        "pair": pair_json(pair),
        "digits": digits,
        "values": q.json(digits),
        "checks": checks_json(&report.checks, digits),
        "all_passed": report.all_passed(),
    });
    Ok(Rendered::ok(text, json))
}

fn kinematics_command(
    alpha: Option<BigReal>,
    pair: Option<PrimePair>,
    choice: Subgroup,
    r_0: &BigReal,
    digits: u32,
) -> Result<Rendered> {
    let ctx = context(digits)?;
    let alpha = match (alpha, &pair) {
        (Some(a), _) => a,
        (None, Some(p)) => {
            let n = choice.order(p);
            alpha_characteristic(n, p.partner_of(n).unwrap_or(n), &ctx)?
        }
        (None, None) => {
            return Err(Error::Validation(
                "kinematics needs --alpha or --n1/--n2".into(),
            ))
        }
    };
    let orbit = build_orbit(&alpha, r_0, &ctx)?;
    let consistency = match &pair {
        Some(p) => Some(marry_with_geometry(&orbit, p, choice, &ctx)?),
        None => None,
    };

    let mut q = Quantities::new();
    q.add("alpha", "v_q/c", Some(&orbit.alpha));
    q.add("v_c", format!("{}·alpha", orbit.n_max), Some(&orbit.v_c));
    q.add("chi_star", "arccos(v_c)", Some(orbit.chi_star.radians()));
    q.add(
        "chi_nmax",
        format!("pi/{}", orbit.n_max),
        Some(orbit.chi_nmax.radians()),
    );
    q.add("r_0", "outer radius", Some(&orbit.r_0));
    q.add("r_c", "orbit radius", Some(&orbit.r_c_orbit));
    q.add("l_c", "r_c/n_max", Some(&orbit.l_c));
    q.add("r_b", "r_0·cos(pi/n_max)", Some(&orbit.r_b_proj));
    q.add(
        "circumferential_quantum",
        "pi·l_c",
        Some(&orbit.circumferential_quantum(&ctx)),
    );
    q.add(
        "light_speed_residual",
        "|r_c/r_0 - v_c|",
        Some(&light_speed_check(&orbit, &ctx)),
    );

    let mut text = format!(
        "n_max {}, digits {digits}\n{}",
        orbit.n_max,
        q.table(digits)
    );
    let mut json = json!({
        "command": "kinematics",
        "digits": digits,
        "n_max": orbit.n_max,
        "values": q.json(digits),
    });
    if let (Some(report), Some(p)) = (&consistency, &pair) {
        text.push_str(&format!(
            "\nconsistency with {p}, subgroup {} (order {})\n",
            report.choice, report.order
        ));
        text.push_str(&checks_table(&report.checks, digits));
        json["consistency"] = json!({
            "pair": pair_json(p),
            "subgroup": report.choice.as_str(),
            "checks": checks_json(&report.checks, digits),
            "all_passed": report.all_passed(),
        });
    }
    Ok(Rendered::ok(text, json))
}

fn predict_command(pair: &PrimePair, constants: Option<PathBuf>, digits: u32) -> Result<Rendered> {
    let ctx = context(digits)?;
    let records = match constants {
        Some(path) => load_constants(path)?,
        None => reference_constants(),
    };
    let measured = MeasuredInputs::from_records(&records, &ctx)?;
    let p = predict(pair, &ctx)?;
    let report = compare(&p, &measured, &ctx)?;

    let mut q = Quantities::new();
    q.add("alpha_fs", "alpha", Some(&p.alpha_fs));
    q.add("g2_over_4pi", "g^2/4pi", Some(&p.g2_over_4pi));
    q.add("sin2_theta_w", "sin^2(theta_W)", Some(&p.sin2_theta_w));
    q.add("cos_theta_w", "cos(theta_W)", Some(&p.cos_theta_w));
    q.add("g_prime_over_e", "|g'|/e", Some(&p.g_prime_over_e));
    q.add("g_z_over_e", "g_Z/e", Some(&p.g_z_over_e));
    q.add("alpha_w", "(g^2/4pi)/8", Some(&p.alpha_w));
    q.add("mz_over_mw", "M_Z/M_W", Some(&p.mz_over_mw));

    let mut text = header(pair, digits) + &q.table(digits) + "\n" + &report.table(digits);
    for note in &report.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            json!({
                "quantity": r.quantity,
                "theory": json_num(&r.theory, digits),
                "measured": json_num(&r.measured, digits),
                "measured_label": r.measured_label,
                "uncertainty": r.uncertainty.as_ref().map_or(Value::Null, |u| json_num(u, digits)),
                "signed_diff": json_num(&r.signed_diff, digits),
                "abs_diff": json_num(&r.abs_diff, digits),
                "rel_diff": r.rel_diff.as_ref().map_or(Value::Null, |v| json_num(v, digits)),
                "sigma_diff": r.sigma_diff.as_ref().map_or(Value::Null, |v| json_num(v, digits)),
            })
        })
        .collect();
    let json = json!({
        "command": "predict",
        "pair": pair_json(pair),
        "digits": digits,
        "prediction": q.json(digits),
        "comparison": rows,
        "notes": report.notes,
    });
    Ok(Rendered::ok(text, json))
}

fn verify_command(pair: &PrimePair, r_b: &BigReal, digits: u32) -> Result<Rendered> {
    let ctx = context(digits)?;
    let tolerance = ctx.loose_tolerance(2);
    let system = build_system(pair, r_b, &ctx)?;
    let mut checks = verify_identities(&system, &ctx, &tolerance).checks;

    let set = compute_set(pair, &ctx)?;
    let (beta1, beta2) = set.beta_cross_residuals();
    let (star1, star2) = set.chi_star_residuals();
    let (n1, n2) = (pair.n1(), pair.n2());
    let named = [
        (
            "beta.a",
            format!("cos(χ*_{n1})/cos(χ_{n1}) = β"),
            Some(beta1),
        ),
        ("beta.b", format!("cos(χ*_{n2})/cos(χ_{n2}) = β"), beta2),
        (
            "chi_star.a",
            format!("cos(χ*_{n1}) = {n1}·α_{n1}"),
            Some(star1),
        ),
        ("chi_star.b", format!("cos(χ*_{n2}) = {n2}·α_{n2}"), star2),
    ];
    for (label, relation, residual) in named {
        if let Some(residual) = residual {
            checks.push(IdentityCheck::new(
                label, &relation, residual, &tolerance, &ctx,
            ));
        }
    }
    if let (Some(s), true) = (&set.sin2_theta_g, n1 >= 5) {
        let inside = s.is_positive() && *s < BigReal::one();
        checks.push(IdentityCheck::with_outcome(
            "mixing",
            "0 < sin²θ_G < 1",
            BigReal::zero(),
            inside,
            &ctx,
        ));
    }

    let failures = checks.iter().filter(|c| !c.passed).count();
    let text = format!(
        "{}tolerance {}\n{}{} of {} checks passed\n",
        header(pair, digits),
        tolerance,
        checks_table(&checks, digits),
        checks.len() - failures,
        checks.len()
    );
    let json = json!({
        "command": "verify",
        "pair": pair_json(pair),
        "digits": digits,
        "tolerance": tolerance.to_string(),
        "checks": checks_json(&checks, digits),
        "all_passed": failures == 0,
    });
    let mut rendered = Rendered::ok(text, json);
    if failures > 0 {
        rendered.code = EXIT_ERROR;
        rendered.stderr = format!("error:validation: {failures} identity checks failed\n");
    }
    Ok(rendered)
}

fn select_targets(path: Option<PathBuf>, names: &[String]) -> Result<Vec<ConstantRecord>> {
    let records = match path {
        Some(path) => load_constants(path)?,
        None => reference_constants(),
    };
    if names.is_empty() {
        return Ok(records);
    }
    names
        .iter()
        .map(|name| {
            let record = records
                .iter()
                .find(|r| &r.name == name)
                .ok_or_else(|| Error::Validation(format!("no constant named `{name}`")))?;
            if !record.is_matchable() {
                return Err(Error::Validation(format!(
                    "constant `{name}` has unit `{}` and cannot be matched",
                    record.unit
                )));
            }
            Ok(record.clone())
        })
        .collect()
}

fn search_command(
    targets: &[ConstantRecord],
    bounds: &ScanBounds,
    digits: u32,
) -> Result<Rendered> {
    let ctx = context(digits.max(DEFAULT_SCAN_DIGITS))?;
    let results = scan(targets, bounds, &ctx)?;
    let pairs = enumerate_pairs(bounds)?.len();
    let names: Vec<&str> = targets
        .iter()
        .filter(|t| t.is_matchable())
        .map(|t| t.name.as_str())
        .collect();
    let summary = format!(
        "{} matches for {} target(s) over {pairs} pairs (n1 <= {}, n2 <= {}, sigma <= {}, rel <= {})\n",
        results.len(),
        names.len(),
        bounds.max_n1,
        bounds.max_n2,
        bounds.sigma_threshold,
        bounds.relative_tolerance
    );
    let text = if results.is_empty() {
        summary.clone()
    } else {
        summary.clone() + &matches_table(&results, digits)
    };
    let json = json!({
        "command": "search",
        "digits": digits,
        "scan_digits": ctx.requested_digits(),
        "bounds": {
            "max_n1": bounds.max_n1,
            "max_n2": bounds.max_n2,
            "prime_only": bounds.prime_only,
            "sigma_threshold": bounds.sigma_threshold.to_string(),
            "relative_tolerance": bounds.relative_tolerance.to_string(),
        },
        "pairs": pairs,
        "targets": names,
        "matches": matches_json(&results, digits),
    });
    let mut rendered = Rendered::ok(text, json);
    if results.is_empty() {
        rendered.code = EXIT_NO_MATCH;
        rendered.stderr = "no matches\n".to_string();
    }
    Ok(rendered)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> Outcome {
        run(std::iter::once("cyclic-alpha").chain(args.split_whitespace()))
    }

    #[test]
    fn char_prints_137_29_values() {
        let out = call("char --n1 137 --n2 29 --digits 12");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("0.007297352532"));
        assert!(out.stdout.contains("0.034280626357"));
        assert!(out.stdout.contains("0.212871038465"));
    }

    #[test]
    fn invalid_pair_is_a_validation_error() {
        let out = call("char --n1 4 --n2 2");
        assert_eq!(out.code, 1);
        assert!(
            out.stderr.starts_with("error:validation:"),
            "{}",
            out.stderr
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call("char --n1 137").code, 1);
        assert!(call("char --n1 137 --n2 29 --digits 0")
            .stderr
            .starts_with("error:validation:"));
        assert!(call("frobnicate").stderr.starts_with("error:parse:"));
        assert_eq!(call("--help").code, 0);
        assert!(call("--help").stdout.contains("search"));
    }
}
