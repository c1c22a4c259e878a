//! `iterres` — iterated resultants, lex Groebner elimination, and factor
//! analysis over exact integer polynomials.

mod sysfile;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::Duration;

use num_bigint::BigInt;

use iterres_core::analysis::{
    classify_factors, degree_growth_report, factor_univariate_with, squarefree_decompose,
    sturm_real_roots, AnalysisConfig, ClassifyError, Endpoint, FactorConfig, FactorError,
    GenuinePartError, ReportError,
};
use iterres_core::groebner::{buchberger, GroebnerConfig, GroebnerError};
use iterres_core::plan::{evaluate_plan, parse_plan, PlanError};
use iterres_core::poly::Polynomial;
use iterres_core::resultant::{discriminant, resultant, ResultantError};
use iterres_core::variable::Variable;

use sysfile::{parse_system, SystemFile};

const USAGE: &str = "\
iterres — iterated resultants in exact integer arithmetic

USAGE:
    iterres <command> [flags] <system.sys> [names]

COMMANDS:
    resultant --var <v> <file> <f> <g>    resultant of f and g in v
    discriminant --var <v> <file> <f>     discriminant of f in v
    iterate --plan <plan> <file>          evaluate a nested plan
    groebner <file>                       reduced lex Groebner basis
    analyze --plan <plan> <file>          factor a nested resultant and label
                                          factors genuine/spurious
    degree-report --plan <plan> <file>    nested degrees vs the Bezout bound
    sturm <file> <f>                      distinct real roots (whole line,
                                          counted on the squarefree part)
    factor <file> <f>                     irreducible factorization over Z

FLAGS:
    --plan <text>         nested plan: res(y,res(z,f,g),res(z,f,h)), disc(z,f)
    --var <name>          variable for resultant/discriminant
    --json                machine-readable output
    --budget-pairs <n>    Groebner S-pair budget (default 100000)
    --factor-ceiling <n>  factorization degree ceiling (default 600)
    --timeout <seconds>   abort the computation after this many seconds
    --help                this text

SYSTEM FILES:
    # comment
    vars: z, y, x            highest (eliminated first) to lowest
    f = y^2 + z^2 + x + z - 1

EXIT STATUS:
    0 success, 1 user error, 2 resource budget exceeded
";

enum CliError {
    User(String),
    Budget(String),
}

fn user(msg: impl Into<String>) -> CliError {
    CliError::User(msg.into())
}

fn budget(msg: impl Into<String>) -> CliError {
    CliError::Budget(msg.into())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--help") {
        print!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    match run(args) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(args: Vec<String>) -> Result<String, CliError> {
    let (command, opts) = Opts::parse(args)?;
    match opts.timeout {
        None => dispatch(&command, &opts),
        Some(secs) => {
            let (tx, rx) = mpsc::channel();
            let cmd = command.clone();
            let opts_owned = opts;
            std::thread::spawn(move || {
                let _ = tx.send(dispatch(&cmd, &opts_owned));
            });
            match rx.recv_timeout(Duration::from_secs(secs)) {
                Ok(result) => result,
                Err(_) => Err(budget(format!(
                    "`{command}` exceeded the {secs}s time budget"
                ))),
            }
        }
    }
}

struct Opts {
    positionals: Vec<String>,
    plan: Option<String>,
    var: Option<String>,
    json: bool,
    budget_pairs: Option<usize>,
    factor_ceiling: Option<usize>,
    timeout: Option<u64>,
}

impl Opts {
    fn parse(args: Vec<String>) -> Result<(String, Opts), CliError> {
        let mut it = args.into_iter();
        let command = it.next().ok_or_else(|| {
            user("missing command; run `iterres --help` for usage")
        })?;
        let mut opts = Opts {
            positionals: Vec::new(),
            plan: None,
            var: None,
            json: false,
            budget_pairs: None,
            factor_ceiling: None,
            timeout: None,
        };
        let take_value = |it: &mut std::vec::IntoIter<String>, flag: &str| {
            it.next().ok_or_else(|| user(format!("flag `{flag}` needs a value")))
        };
        while let Some(arg) = it.next() {
            match arg.as_str() {
                "--plan" => opts.plan = Some(take_value(&mut it, "--plan")?),
                "--var" => opts.var = Some(take_value(&mut it, "--var")?),
                "--json" => opts.json = true,
                "--budget-pairs" => {
                    let v = take_value(&mut it, "--budget-pairs")?;
                    opts.budget_pairs = Some(v.parse().map_err(|_| {
                        user(format!("`--budget-pairs {v}` is not a count"))
                    })?);
                }
                "--factor-ceiling" => {
                    let v = take_value(&mut it, "--factor-ceiling")?;
                    opts.factor_ceiling = Some(v.parse().map_err(|_| {
                        user(format!("`--factor-ceiling {v}` is not a degree"))
                    })?);
                }
                "--timeout" => {
                    let v = take_value(&mut it, "--timeout")?;
                    opts.timeout = Some(v.parse().map_err(|_| {
                        user(format!("`--timeout {v}` is not a number of seconds"))
                    })?);
                }
                other if other.starts_with("--") => {
                    return Err(user(format!("unknown flag `{other}`")));
                }
                _ => opts.positionals.push(arg),
            }
        }
        Ok((command, opts))
    }

    fn groebner_config(&self) -> GroebnerConfig {
        GroebnerConfig {
            max_pairs: self.budget_pairs.unwrap_or(100_000),
            ..GroebnerConfig::default()
        }
    }

    fn factor_config(&self) -> FactorConfig {
        FactorConfig {
            degree_ceiling: self.factor_ceiling.unwrap_or(600),
            ..FactorConfig::default()
        }
    }

    fn analysis_config(&self) -> AnalysisConfig {
        AnalysisConfig {
            factor: self.factor_config(),
            groebner: self.groebner_config(),
        }
    }
}

fn dispatch(command: &str, opts: &Opts) -> Result<String, CliError> {
    match command {
        "resultant" => cmd_resultant(opts),
        "discriminant" => cmd_discriminant(opts),
        "iterate" => cmd_iterate(opts),
        "groebner" => cmd_groebner(opts),
        "analyze" => cmd_analyze(opts),
        "degree-report" => cmd_degree_report(opts),
        "sturm" => cmd_sturm(opts),
        "factor" => cmd_factor(opts),
        other => Err(user(format!(
            "unknown command `{other}`; run `iterres --help` for usage"
        ))),
    }
}

fn load_system(opts: &Opts, extra_names: usize) -> Result<(SystemFile, Vec<String>), CliError> {
    let needed = 1 + extra_names;
    if opts.positionals.len() != needed {
        return Err(user(format!(
            "expected a system file{}, got {} arguments",
            if extra_names == 0 {
                String::new()
            } else {
                format!(" and {extra_names} polynomial name(s)")
            },
            opts.positionals.len()
        )));
    }
    let path = &opts.positionals[0];
    let text = std::fs::read_to_string(path)
        .map_err(|e| user(format!("cannot read `{path}`: {e}")))?;
    let sys = parse_system(&text).map_err(|e| user(format!("{path}: {e}")))?;
    Ok((sys, opts.positionals[1..].to_vec()))
}

fn lookup<'s>(sys: &'s SystemFile, name: &str, path_hint: &str) -> Result<&'s Polynomial, CliError> {
    sys.get(name)
        .ok_or_else(|| user(format!("no polynomial `{name}` in `{path_hint}`")))
}

fn variable_in(sys: &SystemFile, name: &str) -> Result<Variable, CliError> {
    if sys.ordering.index_of_name(name).is_none() {
        return Err(user(format!(
            "variable `{name}` is not in the ordering {}",
            sys.ordering
        )));
    }
    Variable::new(name).map_err(|e| user(e.to_string()))
}

fn cmd_resultant(opts: &Opts) -> Result<String, CliError> {
    let (sys, names) = load_system(opts, 2)?;
    let var = opts
        .var
        .as_deref()
        .ok_or_else(|| user("`resultant` needs `--var <name>`"))?;
    let v = variable_in(&sys, var)?;
    let f = lookup(&sys, &names[0], &opts.positionals[0])?;
    let g = lookup(&sys, &names[1], &opts.positionals[0])?;
    let out = resultant(f, g, &v).map_err(map_resultant)?;
    Ok(poly_output(&out, opts.json))
}

fn cmd_discriminant(opts: &Opts) -> Result<String, CliError> {
    let (sys, names) = load_system(opts, 1)?;
    let var = opts
        .var
        .as_deref()
        .ok_or_else(|| user("`discriminant` needs `--var <name>`"))?;
    let v = variable_in(&sys, var)?;
    let f = lookup(&sys, &names[0], &opts.positionals[0])?;
    let out = discriminant(f, &v).map_err(map_resultant)?;
    Ok(poly_output(&out, opts.json))
}

fn cmd_iterate(opts: &Opts) -> Result<String, CliError> {
    let (sys, _) = load_system(opts, 0)?;
    let plan_text = opts
        .plan
        .as_deref()
        .ok_or_else(|| user("`iterate` needs `--plan <text>`"))?;
    let plan = parse_plan(plan_text).map_err(|e| user(e.to_string()))?;
    let out = evaluate_plan(&plan, &sys.named()).map_err(map_plan)?;
    Ok(poly_output(&out, opts.json))
}

fn cmd_groebner(opts: &Opts) -> Result<String, CliError> {
    let (sys, _) = load_system(opts, 0)?;
    let basis = buchberger(&sys.system(), &opts.groebner_config()).map_err(map_groebner)?;
    if opts.json {
        let items: Vec<String> = basis
            .polynomials()
            .iter()
            .map(|q| json_string(&q.to_string()))
            .collect();
        Ok(format!("{{\"basis\":[{}]}}\n", items.join(",")))
    } else {
        let mut out = String::new();
        for q in basis.polynomials() {
            let _ = writeln!(out, "{q}");
        }
        Ok(out)
    }
}

fn cmd_analyze(opts: &Opts) -> Result<String, CliError> {
    let (sys, _) = load_system(opts, 0)?;
    let plan_text = opts
        .plan
        .as_deref()
        .ok_or_else(|| user("`analyze` needs `--plan <text>`"))?;
    let plan = parse_plan(plan_text).map_err(|e| user(e.to_string()))?;
    let iterated = evaluate_plan(&plan, &sys.named()).map_err(map_plan)?;
    let report = classify_factors(&iterated, &sys.system(), &opts.analysis_config())
        .map_err(|e| match e {
            ClassifyError::Factor(f) => map_factor(f),
        })?;
    if opts.json {
        Ok(factor_report_json(&report.content, report.factors.iter().map(|cf| {
            (
                cf.factor.to_string(),
                cf.multiplicity,
                Some((cf.label.as_str(), cf.evidence.as_str())),
            )
        })))
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "content {}", report.content);
        for cf in &report.factors {
            let _ = writeln!(
                out,
                "{}: {} (mult {}; {})",
                cf.label.as_str(),
                cf.factor,
                cf.multiplicity,
                cf.evidence.as_str()
            );
        }
        Ok(out)
    }
}

fn cmd_degree_report(opts: &Opts) -> Result<String, CliError> {
    let (sys, _) = load_system(opts, 0)?;
    let plan_text = opts
        .plan
        .as_deref()
        .ok_or_else(|| user("`degree-report` needs `--plan <text>`"))?;
    let plan = parse_plan(plan_text).map_err(|e| user(e.to_string()))?;
    let report = degree_growth_report(&sys.named(), &plan, &opts.analysis_config())
        .map_err(|e| match e {
            ReportError::Plan(p) => map_plan(p),
            ReportError::Genuine(g) => map_genuine(g),
        })?;
    if opts.json {
        let degrees: Vec<String> = report
            .nested_degrees
            .iter()
            .map(u32::to_string)
            .collect();
        Ok(format!(
            "{{\"nested_degrees\":[{}],\"bezout_bound\":{},\"genuine_degree\":{}}}\n",
            degrees.join(","),
            report.bezout_bound,
            report.genuine_degree
        ))
    } else {
        let degrees: Vec<String> = report
            .nested_degrees
            .iter()
            .map(u32::to_string)
            .collect();
        let mut out = String::new();
        let _ = writeln!(out, "nested degrees: {}", degrees.join(" "));
        let _ = writeln!(out, "final degree: {}", report.final_degree());
        let _ = writeln!(out, "bezout bound: {}", report.bezout_bound);
        let _ = writeln!(out, "genuine degree: {}", report.genuine_degree);
        Ok(out)
    }
}

fn cmd_sturm(opts: &Opts) -> Result<String, CliError> {
    let (sys, names) = load_system(opts, 1)?;
    let f = lookup(&sys, &names[0], &opts.positionals[0])?;
    if f.is_zero() {
        return Err(user(format!("`{}` is the zero polynomial", names[0])));
    }
    // count on the squarefree part, over the whole real line
    let (_, parts) = squarefree_decompose(f).map_err(|e| user(e.to_string()))?;
    let mut squarefree = Polynomial::one(f.ordering());
    for (part, _) in &parts {
        squarefree = &squarefree * part;
    }
    let count = if squarefree.total_degree().unwrap_or(0) == 0 {
        0
    } else {
        sturm_real_roots(
            &squarefree,
            &Endpoint::NegativeInfinity,
            &Endpoint::PositiveInfinity,
        )
        .map_err(|e| user(e.to_string()))?
    };
    if opts.json {
        Ok(format!("{{\"count\":{count}}}\n"))
    } else {
        Ok(format!("{count}\n"))
    }
}

fn cmd_factor(opts: &Opts) -> Result<String, CliError> {
    let (sys, names) = load_system(opts, 1)?;
    let f = lookup(&sys, &names[0], &opts.positionals[0])?;
    let factorization =
        factor_univariate_with(f, &opts.factor_config()).map_err(map_factor)?;
    if opts.json {
        Ok(factor_report_json(
            &factorization.content,
            factorization
                .factors
                .iter()
                .map(|(q, m)| (q.to_string(), *m, None)),
        ))
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "content {}", factorization.content);
        for (q, m) in &factorization.factors {
            let _ = writeln!(out, "{q} (mult {m})");
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// output helpers
// ---------------------------------------------------------------------------

fn poly_output(p: &Polynomial, json: bool) -> String {
    if json {
        format!("{{\"result\":{}}}\n", json_string(&p.to_string()))
    } else {
        format!("{p}\n")
    }
}

/// `{"content":"2","factors":[{"poly":"...","mult":1,"label":"...","evidence":"..."}]}`
fn factor_report_json<'a>(
    content: &BigInt,
    factors: impl Iterator<Item = (String, u32, Option<(&'a str, &'a str)>)>,
) -> String {
    let mut items = Vec::new();
    for (poly, mult, labelled) in factors {
        let mut entry = format!("{{\"poly\":{},\"mult\":{}", json_string(&poly), mult);
        if let Some((label, evidence)) = labelled {
            let _ = write!(
                entry,
                ",\"label\":{},\"evidence\":{}",
                json_string(label),
                json_string(evidence)
            );
        }
        entry.push('}');
        items.push(entry);
    }
    format!(
        "{{\"content\":{},\"factors\":[{}]}}\n",
        json_string(&content.to_string()),
        items.join(",")
    )
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

// ---------------------------------------------------------------------------
// error mapping: user errors exit 1, resource budgets exit 2
// ---------------------------------------------------------------------------

fn map_resultant(e: ResultantError) -> CliError {
    user(e.to_string())
}

fn map_plan(e: PlanError) -> CliError {
    user(e.to_string())
}

fn map_groebner(e: GroebnerError) -> CliError {
    match e {
        GroebnerError::BudgetExceeded { .. } | GroebnerError::CoefficientCeiling { .. } => {
            budget(e.to_string())
        }
        _ => user(e.to_string()),
    }
}

fn map_factor(e: FactorError) -> CliError {
    match e {
        FactorError::DegreeCeiling { .. }
        | FactorError::RecombinationBudget
        | FactorError::NoSuitablePrime => budget(e.to_string()),
        _ => user(e.to_string()),
    }
}

fn map_genuine(e: GenuinePartError) -> CliError {
    match e {
        GenuinePartError::Groebner(g) => map_groebner(g),
        GenuinePartError::NoUnivariateGenerator => user(e.to_string()),
    }
}
