//! Command-line frontend: solve game files, decompose games into dividend
//! coefficients, run the randomized axiom suites, and generate test games.
//!
//! Exit codes: 0 on success, 1 for unreadable or malformed input, 2 for
//! input that parses but violates the model (or for usage errors), 3 when a
//! verification step or an axiom suite fails unexpectedly.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, ToPrimitive};
use serde_json::json;

use pdg_core::verify::{
    check_indicator_axioms, check_value_axioms, dividend_oracle, planted_unanimity_game,
    planted_zero_below_grand, random_game, random_game_alpha, GeneratorConfig,
};
use pdg_core::{
    moebius_decompose, moebius_recompose, parse_game_file, rational_from_text, rational_to_text,
    rational_to_value, run_examination, serialize_game_file, staged_value, Coalition, CostProfile,
    ExitRule, FullGame, Rational, MAX_PLAYERS,
};

#[derive(Parser)]
#[command(
    name = "pdg",
    version,
    about = "Solver for cooperative games whose coalition worths are examined at a cost"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the stage payoff table of a game file and run a stopping rule
    Solve(SolveArgs),
    /// Decompose a game into its dividend coefficients
    Decompose(DecomposeArgs),
    /// Run a randomized axiom suite and report per-axiom results
    Check(CheckArgs),
    /// Generate a random game file on stdout
    Gen(GenArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Path to a JSON game file
    file: PathBuf,
    /// Stopping rule applied to the examination sequence
    #[arg(long, value_enum, default_value_t = RuleArg::Gamma)]
    rule: RuleArg,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Path to a JSON game file
    file: PathBuf,
    /// Cross-check the coefficients against the inverse transform and the
    /// closed-form oracle
    #[arg(long)]
    verify: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Which suite to run
    #[arg(long, value_enum)]
    suite: Suite,
    /// Number of seeded trials
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Number of players in generated games
    #[arg(long = "n", default_value_t = 3)]
    n: usize,
    /// Base seed; trial t uses seed + t
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability that a proper coalition's worth is drawn as zero
    #[arg(long, default_value_t = 0.3)]
    zero_probability: f64,
    /// Upper bound for drawn examination costs (a rational)
    #[arg(long, default_value = "3")]
    cost_scale: String,
    /// Rotate in planted games so the conditional axioms fire (values suite)
    #[arg(long)]
    structured: bool,
    /// Common grand worth for generated pairs (indicators suite)
    #[arg(long, default_value = "20")]
    alpha: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
}

#[derive(Args)]
struct GenArgs {
    /// Number of players
    #[arg(long = "n", default_value_t = 3)]
    n: usize,
    /// Generator seed; identical seeds give identical files
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability that a proper coalition's worth is drawn as zero
    #[arg(long, default_value_t = 0.3)]
    zero_probability: f64,
    /// Upper bound for drawn examination costs (a rational)
    #[arg(long, default_value = "3")]
    cost_scale: String,
    /// Pin the grand worth to this value (plain shape only)
    #[arg(long)]
    alpha: Option<String>,
    /// Game shape to draw
    #[arg(long, value_enum, default_value_t = Shape::Plain)]
    shape: Shape,
}

#[derive(Copy, Clone, ValueEnum)]
enum RuleArg {
    /// Stop once an examined worth reaches what is left of the grand worth
    Gamma,
    /// Never stop before everything is examined
    #[value(name = "gammaA")]
    GammaA,
    /// Stop at the first positive examined worth
    #[value(name = "gammaB")]
    GammaB,
}

impl From<RuleArg> for ExitRule {
    fn from(arg: RuleArg) -> ExitRule {
        match arg {
            RuleArg::Gamma => ExitRule::Gamma,
            RuleArg::GammaA => ExitRule::GammaA,
            RuleArg::GammaB => ExitRule::GammaB,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum Suite {
    Values,
    Indicators,
}

#[derive(Copy, Clone, ValueEnum)]
enum Shape {
    Plain,
    Unanimity,
    ZeroBelowGrand,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::new(2, message)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Check(args) => cmd_check(args),
        Command::Gen(args) => cmd_gen(args),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn load(path: &Path) -> Result<(FullGame, CostProfile), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(1, format!("cannot read {}: {e}", path.display())))?;
    parse_game_file(&text).map_err(|e| {
        let code = if e.is_validation() { 2 } else { 1 };
        Failure::new(code, e.to_string())
    })
}

/// Exact value plus a decimal approximation for non-integers.
fn display_value(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{r} (≈{:.4})", r.to_f64().unwrap_or(f64::NAN))
    }
}

fn render_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let emit = |cells: &[String]| {
        let line = cells
            .iter()
            .enumerate()
            .map(|(i, cell)| format!("{:<width$}", cell, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ");
        format!("{}\n", line.trim_end())
    };
    let mut out = emit(headers);
    for row in rows {
        out.push_str(&emit(row));
    }
    out
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode, Failure> {
    let (game, profile) = load(&args.file)?;
    let matrix = staged_value(&game, &profile).expect("parsed inputs share dimensions");
    let rule: ExitRule = args.rule.into();
    let (trace, payoffs) =
        run_examination(&game, &profile, rule).expect("parsed inputs share dimensions");

    match args.format {
        Format::Json => {
            let doc = json!({
                "players": game.n(),
                "order": profile.order().iter().map(|s| s.key()).collect::<Vec<_>>(),
                "stages": matrix
                    .columns()
                    .iter()
                    .map(|col| col.iter().map(rational_to_value).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "trace": {
                    "rule": rule.name(),
                    "raw": trace.raw.flags().iter().map(|f| u8::from(*f)).collect::<Vec<_>>(),
                    "stop_stage": trace.stop_stage,
                    "examinations_performed": trace.examinations_performed,
                },
                "final": payoffs.iter().map(rational_to_value).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        }
        Format::Table => {
            let mut headers =
                vec!["stage".to_string(), "examined".to_string(), "accrued".to_string()];
            headers.extend((1..=game.n()).map(|i| format!("player {i}")));
            let mut rows = Vec::new();
            for k in 0..matrix.num_columns() {
                let mut row = vec![
                    k.to_string(),
                    if k == 0 { "-".to_string() } else { profile.stage_coalition(k).to_string() },
                    rational_to_text(&profile.accrued(k)),
                ];
                row.extend(matrix.column(k).iter().map(display_value));
                rows.push(row);
            }
            print!("{}", render_table(&headers, &rows));
            println!();
            println!("rule {}: flags {}", rule.name(), trace.raw);
            match trace.stop_stage {
                Some(k) => println!(
                    "stops at stage {k}; {} examination(s) performed",
                    trace.examinations_performed
                ),
                None => println!(
                    "never stops; all {} examinations performed",
                    trace.examinations_performed
                ),
            }
            println!(
                "final payoffs: {}",
                payoffs.iter().map(display_value).collect::<Vec<_>>().join(", ")
            );
        }
        Format::Csv => {
            let mut out = String::from("stage,examined,accrued");
            for i in 1..=game.n() {
                out.push_str(&format!(",player_{i}"));
            }
            out.push('\n');
            for k in 0..matrix.num_columns() {
                let examined = if k == 0 {
                    String::new()
                } else {
                    format!("\"{}\"", profile.stage_coalition(k).key())
                };
                out.push_str(&format!("{k},{examined},{}", rational_to_text(&profile.accrued(k))));
                for value in matrix.column(k) {
                    out.push_str(&format!(",{}", rational_to_text(value)));
                }
                out.push('\n');
            }
            print!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(args: DecomposeArgs) -> Result<ExitCode, Failure> {
    let (game, _) = load(&args.file)?;
    let n = game.n();
    let coeffs = moebius_decompose(&game);

    if args.verify {
        let rebuilt = moebius_recompose(n, &coeffs)
            .map_err(|e| Failure::new(3, format!("recomposition failed verification: {e}")))?;
        if rebuilt != game {
            return Err(Failure::new(3, "recomposition deviates from the input game"));
        }
        if dividend_oracle(&game).values() != coeffs.as_slice() {
            return Err(Failure::new(3, "closed-form oracle disagrees with the fast transform"));
        }
    }

    let mut coalitions: Vec<Coalition> = Coalition::all(n).filter(|s| !s.is_empty()).collect();
    coalitions.sort_by_key(|s| (s.len(), s.mask()));

    match args.format {
        Format::Json => {
            let coefficients: serde_json::Map<String, serde_json::Value> = coalitions
                .iter()
                .map(|s| (s.key(), rational_to_value(&coeffs[s.mask() as usize])))
                .collect();
            let doc = json!({
                "players": n,
                "coefficients": coefficients,
                "verified": args.verify,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        }
        Format::Table => {
            let headers = vec!["coalition".to_string(), "coefficient".to_string()];
            let rows: Vec<Vec<String>> = coalitions
                .iter()
                .map(|s| vec![s.to_string(), display_value(&coeffs[s.mask() as usize])])
                .collect();
            print!("{}", render_table(&headers, &rows));
            if args.verify {
                println!("verified: recomposition and closed-form oracle agree");
            }
        }
        Format::Csv => {
            let mut out = String::from("coalition,coefficient\n");
            for s in &coalitions {
                out.push_str(&format!(
                    "\"{}\",{}\n",
                    s.key(),
                    rational_to_text(&coeffs[s.mask() as usize])
                ));
            }
            print!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_rational_flag(text: &str, flag: &str) -> Result<Rational, Failure> {
    rational_from_text(text)
        .ok_or_else(|| usage(format!("{flag} expects a rational like 5, 3/2 or 0.25")))
}

fn build_config(
    n: usize,
    seed: u64,
    zero_probability: f64,
    cost_scale: &str,
) -> Result<GeneratorConfig, Failure> {
    if !(2..=MAX_PLAYERS).contains(&n) {
        return Err(usage(format!("--n must be between 2 and {MAX_PLAYERS}")));
    }
    if !(0.0..=1.0).contains(&zero_probability) {
        return Err(usage("--zero-probability must be between 0 and 1"));
    }
    let cost_scale = parse_rational_flag(cost_scale, "--cost-scale")?;
    if cost_scale.is_negative() {
        return Err(usage("--cost-scale must be nonnegative"));
    }
    let mut config = GeneratorConfig::new(n, seed);
    config.zero_probability = zero_probability;
    config.cost_scale = cost_scale;
    Ok(config)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, Failure> {
    if args.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let mut config = build_config(args.n, args.seed, args.zero_probability, &args.cost_scale)?;
    config.structured = args.structured;

    let report = match args.suite {
        Suite::Values => check_value_axioms(args.trials, &config),
        Suite::Indicators => {
            let alpha = parse_rational_flag(&args.alpha, "--alpha")?;
            check_indicator_axioms(args.trials, &config, &alpha)
                .map_err(|e| usage(format!("--alpha: {e}")))?
        }
    };

    match args.format {
        ReportFormat::Table => print!("{}", report.render_text()),
        ReportFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("report serializes"))
        }
    }

    let unexpected = report.unexpected_failures();
    if unexpected > 0 {
        eprintln!("error: {unexpected} axiom(s) failed unexpectedly");
        Ok(ExitCode::from(3))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, Failure> {
    let config = build_config(args.n, args.seed, args.zero_probability, &args.cost_scale)?;
    let (game, profile) = match (args.shape, &args.alpha) {
        (Shape::Plain, None) => random_game(&config),
        (Shape::Plain, Some(text)) => {
            let alpha = parse_rational_flag(text, "--alpha")?;
            random_game_alpha(&config, &alpha).map_err(|e| usage(format!("--alpha: {e}")))?
        }
        (Shape::Unanimity, None) => planted_unanimity_game(&config),
        (Shape::ZeroBelowGrand, None) => planted_zero_below_grand(&config),
        (_, Some(_)) => return Err(usage("--alpha only applies to --shape plain")),
    };
    print!("{}", serialize_game_file(&game, &profile));
    Ok(ExitCode::SUCCESS)
}
