//! `redop`: JSON-in, JSON-out interface to the reduction-operator calculus.
//!
//! Exit codes: 0 on success, 2 for malformed input (with a position-bearing
//! diagnostic), 3 when a boolean query run with `--strict` is false, 1 for
//! computation failures. Output is deterministic byte for byte for identical
//! inputs.

mod report;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use sha2::{Digest, Sha256};

use redop::completion;
use redop::general;
use redop::gens::GenSet;
use redop::io::{
    operator_report, parse_matrix, rules_report, vector_from_pairs, vector_to_pairs, FamilyFile,
    PresentationFile, TermPair,
};
use redop::lattice::{self, OperatorFamily};
use redop::operator::{matrix_product, validate_reduction_matrix, ReductionOperator};
use redop::pairs;
use redop::presentation::{FamilySelector, Presentation};
use redop::rewriting::{self, Strategy};

use report::*;

const DEFAULT_MAX_GENERATORS: usize = 4096;

#[derive(Parser)]
#[command(
    name = "redop",
    version,
    about = "Exact-arithmetic calculus of reduction operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Greatest lower bound of the operators in a family file
    Meet { family: PathBuf },
    /// Least upper bound of the operators in a family file
    Join { family: PathBuf },
    /// Order test between the first two operators of a family file
    Leq {
        family: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Generators fixed by the family and the obstructions among them
    Obstructions { family: PathBuf },
    /// Confluence of a family
    Confluent {
        family: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Rewrite a vector (JSON pairs) to a normal form, printing the trace
    NormalForm {
        family: PathBuf,
        /// Vector as a JSON array of [coefficient, label] pairs
        vector: String,
        /// `first` or `priority:i,j,...`
        #[arg(long, default_value = "first")]
        strategy: String,
    },
    /// Both alternating products of a pair, with the confluence verdict
    Braided { family: PathBuf },
    /// Canonical minimal complement of a family
    Complement { family: PathBuf },
    /// Adjoin the canonical complement and report the completed family
    Complete { family: PathBuf },
    /// Presentations over a finite alphabet
    Pres {
        #[command(subcommand)]
        command: PresCommand,
    },
    /// Reduction operators relative to a partial order
    General {
        #[command(subcommand)]
        command: GeneralCommand,
    },
    /// Invariant audit of an operator or family file
    Check {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SelectorArg {
    Pair,
    Full,
}

#[derive(Subcommand)]
enum PresCommand {
    /// Obstruction scan of the reduction family at a degree bound
    Check {
        presentation: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value = "full")]
        family: SelectorArg,
        #[arg(long)]
        strict: bool,
    },
    /// Complete the rule set until no bounded-degree obstruction remains
    Complete {
        presentation: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Normal form of a polynomial (JSON pairs or a bare word)
    Nf {
        presentation: PathBuf,
        poly: String,
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GeneralCommand {
    /// Search for a reduction operator with the summed kernel
    Completable {
        family: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Confluence report for a completable family
    Confluent {
        family: PathBuf,
        #[arg(long)]
        strict: bool,
    },
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn malformed(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn computation(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

struct Outcome {
    result: Value,
    degree_bound: Option<usize>,
    warnings: Vec<String>,
    /// Verdict consulted when `--strict` was passed.
    strict_verdict: Option<bool>,
}

impl Outcome {
    fn new(result: impl serde::Serialize) -> Self {
        Outcome {
            result: serde_json::to_value(result).expect("report types serialize"),
            degree_bound: None,
            warnings: Vec::new(),
            strict_verdict: None,
        }
    }

    fn with_degree(mut self, degree: usize) -> Self {
        self.degree_bound = Some(degree);
        self
    }

    fn with_warnings(mut self, warnings: Vec<String>) -> Self {
        self.warnings = warnings;
        self
    }

    fn with_strict(mut self, verdict: Option<bool>) -> Self {
        self.strict_verdict = verdict;
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, digest, outcome) = dispatch(&cli.command);
    match outcome {
        Ok(outcome) => {
            let envelope = Envelope {
                command: name,
                inputs_digest: digest,
                degree_bound: outcome.degree_bound,
                result: outcome.result,
                warnings: outcome.warnings,
            };
            println!(
                "{}",
                serde_json::to_string(&envelope).expect("envelope serializes")
            );
            match outcome.strict_verdict {
                Some(false) => ExitCode::from(3),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(failure) => {
            let envelope = ErrorEnvelope {
                command: name,
                inputs_digest: digest,
                error: failure.message,
            };
            println!(
                "{}",
                serde_json::to_string(&envelope).expect("envelope serializes")
            );
            ExitCode::from(failure.code)
        }
    }
}

fn dispatch(command: &Command) -> (String, String, Result<Outcome, Failure>) {
    match command {
        Command::Meet { family } => run_family("meet", family, None, cmd_meet),
        Command::Join { family } => run_family("join", family, None, cmd_join),
        Command::Leq { family, strict } => {
            run_family("leq", family, Some(*strict), cmd_leq)
        }
        Command::Obstructions { family } => {
            run_family("obstructions", family, None, cmd_obstructions)
        }
        Command::Confluent { family, strict } => {
            run_family("confluent", family, Some(*strict), cmd_confluent)
        }
        Command::NormalForm {
            family,
            vector,
            strategy,
        } => {
            let (digest, outcome) = with_input(family, vector.as_bytes(), |bytes| {
                let (gens, fam) = load_family(bytes)?;
                cmd_normal_form(&gens, &fam, vector, strategy)
            });
            ("normal-form".into(), digest, outcome)
        }
        Command::Braided { family } => run_family("braided", family, None, cmd_braided),
        Command::Complement { family } => {
            run_family("complement", family, None, cmd_complement)
        }
        Command::Complete { family } => run_family("complete", family, None, cmd_complete),
        Command::Pres { command } => match command {
            PresCommand::Check {
                presentation,
                degree,
                family,
                strict,
            } => {
                let (digest, outcome) = with_input(presentation, &[], |bytes| {
                    let pres = load_presentation(bytes, *degree)?;
                    cmd_pres_check(&pres, *family, *strict)
                });
                ("pres check".into(), digest, outcome)
            }
            PresCommand::Complete {
                presentation,
                degree,
            } => {
                let (digest, outcome) = with_input(presentation, &[], |bytes| {
                    let pres = load_presentation(bytes, *degree)?;
                    cmd_pres_complete(&pres)
                });
                ("pres complete".into(), digest, outcome)
            }
            PresCommand::Nf {
                presentation,
                poly,
                degree,
            } => {
                let (digest, outcome) = with_input(presentation, poly.as_bytes(), |bytes| {
                    let pres = load_presentation(bytes, *degree)?;
                    cmd_pres_nf(&pres, poly)
                });
                ("pres nf".into(), digest, outcome)
            }
        },
        Command::General { command } => match command {
            GeneralCommand::Completable { family, strict } => {
                let (digest, outcome) = with_input(family, &[], |bytes| {
                    let (gens, order, members) = load_general(bytes)?;
                    cmd_general_completable(&gens, &order, &members, *strict)
                });
                ("general completable".into(), digest, outcome)
            }
            GeneralCommand::Confluent { family, strict } => {
                let (digest, outcome) = with_input(family, &[], |bytes| {
                    let (_, order, members) = load_general(bytes)?;
                    cmd_general_confluent(&order, &members, *strict)
                });
                ("general confluent".into(), digest, outcome)
            }
        },
        Command::Check { file, strict } => {
            let (digest, outcome) = with_input(file, &[], |bytes| cmd_check(bytes, *strict));
            ("check".into(), digest, outcome)
        }
    }
}

fn run_family(
    name: &str,
    path: &Path,
    strict: Option<bool>,
    body: fn(&GenSet, &OperatorFamily, Option<bool>) -> Result<Outcome, Failure>,
) -> (String, String, Result<Outcome, Failure>) {
    let (digest, outcome) = with_input(path, &[], |bytes| {
        let (gens, family) = load_family(bytes)?;
        body(&gens, &family, strict)
    });
    (name.to_string(), digest, outcome)
}

/// Reads the input file, digests it together with any inline argument, and
/// runs the body.
fn with_input<F>(path: &Path, extra: &[u8], body: F) -> (String, Result<Outcome, Failure>)
where
    F: FnOnce(&[u8]) -> Result<Outcome, Failure>,
{
    let bytes = match std::fs::read(path) {
        Ok(bytes) => bytes,
        Err(err) => {
            return (
                String::new(),
                Err(Failure::malformed(format!(
                    "cannot read {}: {err}",
                    path.display()
                ))),
            )
        }
    };
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    if !extra.is_empty() {
        hasher.update([0u8]);
        hasher.update(extra);
    }
    let digest = format!("{:x}", hasher.finalize());
    (digest, body(&bytes))
}

fn max_generators() -> usize {
    std::env::var("REDOP_MAX_GENERATORS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_GENERATORS)
}

fn check_size(n: usize) -> Result<(), Failure> {
    let cap = max_generators();
    if n > cap {
        return Err(Failure::malformed(format!(
            "instance has {n} generators, exceeding REDOP_MAX_GENERATORS={cap}"
        )));
    }
    Ok(())
}

fn parse_json<'a, T: serde::Deserialize<'a>>(bytes: &'a [u8]) -> Result<T, Failure> {
    serde_json::from_slice(bytes).map_err(|err| Failure::malformed(err.to_string()))
}

fn load_family(bytes: &[u8]) -> Result<(GenSet, OperatorFamily), Failure> {
    let file: FamilyFile = parse_json(bytes)?;
    check_size(file.generators.len())?;
    file.resolve().map_err(|err| Failure::malformed(err.to_string()))
}

fn load_presentation(bytes: &[u8], degree_override: Option<usize>) -> Result<Presentation, Failure> {
    let file: PresentationFile = parse_json(bytes)?;
    let degree = degree_override.unwrap_or(file.degree);
    let letters = file.alphabet.len() as u128;
    let mut words: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 0..=degree {
        words = words.saturating_add(layer);
        layer = layer.saturating_mul(letters);
    }
    check_size(usize::try_from(words).unwrap_or(usize::MAX))?;
    file.resolve(degree_override)
        .map_err(|err| Failure::malformed(err.to_string()))
}

fn load_general(
    bytes: &[u8],
) -> Result<(GenSet, general::PartialOrder, Vec<general::GeneralOperator>), Failure> {
    let file: FamilyFile = parse_json(bytes)?;
    check_size(file.generators.len())?;
    file.resolve_general()
        .map_err(|err| Failure::malformed(err.to_string()))
}

fn labels(gens: &GenSet, set: &BTreeSet<usize>) -> Vec<String> {
    set.iter().map(|&g| gens.label(g).to_string()).collect()
}

fn cmd_meet(gens: &GenSet, family: &OperatorFamily, _: Option<bool>) -> Result<Outcome, Failure> {
    let meet = lattice::meet(family);
    Ok(Outcome::new(OperatorResult {
        operator: operator_report(&meet, gens),
    }))
}

fn cmd_join(gens: &GenSet, family: &OperatorFamily, _: Option<bool>) -> Result<Outcome, Failure> {
    let mut join = family.member(0).clone();
    for member in &family.members()[1..] {
        join = lattice::join(&join, member)
            .map_err(|err| Failure::computation(err.to_string()))?;
    }
    Ok(Outcome::new(OperatorResult {
        operator: operator_report(&join, gens),
    }))
}

fn cmd_leq(
    _gens: &GenSet,
    family: &OperatorFamily,
    strict: Option<bool>,
) -> Result<Outcome, Failure> {
    if family.len() < 2 {
        return Err(Failure::malformed(
            "leq needs two operators in the family file",
        ));
    }
    let mut warnings = Vec::new();
    if family.len() > 2 {
        warnings.push(format!(
            "family has {} operators; comparing the first two",
            family.len()
        ));
    }
    let verdict = lattice::leq(family.member(0), family.member(1))
        .map_err(|err| Failure::computation(err.to_string()))?;
    Ok(Outcome::new(LeqResult { leq: verdict })
        .with_warnings(warnings)
        .with_strict(strict.filter(|s| *s).map(|_| verdict)))
}

fn cmd_obstructions(
    gens: &GenSet,
    family: &OperatorFamily,
    _: Option<bool>,
) -> Result<Outcome, Failure> {
    let red_family = lattice::red_set(family);
    let red_meet = lattice::meet(family).red();
    let obstructions = lattice::obstructions(family);
    Ok(Outcome::new(ObstructionsResult {
        red_family: labels(gens, &red_family),
        red_meet: labels(gens, &red_meet),
        obstructions: labels(gens, &obstructions),
    }))
}

fn cmd_confluent(
    gens: &GenSet,
    family: &OperatorFamily,
    strict: Option<bool>,
) -> Result<Outcome, Failure> {
    let obstructions = lattice::obstructions(family);
    let confluent = obstructions.is_empty();
    Ok(Outcome::new(ConfluentResult {
        confluent,
        obstructions: labels(gens, &obstructions),
    })
    .with_strict(strict.filter(|s| *s).map(|_| confluent)))
}

fn parse_strategy(text: &str) -> Result<Strategy, Failure> {
    if text == "first" {
        return Ok(Strategy::FirstChanging);
    }
    if let Some(rest) = text.strip_prefix("priority:") {
        let indices = rest
            .split(',')
            .map(|part| part.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| {
                Failure::malformed(format!("bad strategy `{text}`: indices must be integers"))
            })?;
        return Ok(Strategy::Priority(indices));
    }
    Err(Failure::malformed(format!(
        "bad strategy `{text}`: expected `first` or `priority:i,j,...`"
    )))
}

fn cmd_normal_form(
    gens: &GenSet,
    family: &OperatorFamily,
    vector: &str,
    strategy: &str,
) -> Result<Outcome, Failure> {
    let pairs: Vec<TermPair> =
        serde_json::from_str(vector).map_err(|err| Failure::malformed(err.to_string()))?;
    let start =
        vector_from_pairs(&pairs, gens).map_err(|err| Failure::malformed(err.to_string()))?;
    let strategy = parse_strategy(strategy)?;
    let trace = rewriting::normal_form(family, &start, &strategy)
        .map_err(|err| Failure::computation(err.to_string()))?;
    Ok(Outcome::new(NormalFormResult {
        strategy: match &strategy {
            Strategy::FirstChanging => "first".to_string(),
            Strategy::Priority(list) => format!(
                "priority:{}",
                list.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        },
        normal_form: vector_to_pairs(trace.result(), gens),
        trace: TraceReport {
            start: vector_to_pairs(&trace.start, gens),
            steps: trace
                .steps
                .iter()
                .map(|(i, v)| TraceStep {
                    operator: *i,
                    vector: vector_to_pairs(v, gens),
                })
                .collect(),
        },
    }))
}

fn cmd_braided(
    gens: &GenSet,
    family: &OperatorFamily,
    _: Option<bool>,
) -> Result<Outcome, Failure> {
    if family.len() != 2 {
        return Err(Failure::malformed(
            "braided needs exactly two operators in the family file",
        ));
    }
    let braid = pairs::braided(family.member(0), family.member(1))
        .map_err(|err| Failure::computation(err.to_string()))?;
    let images = |map: &pairs::LinearMap| -> Vec<Vec<TermPair>> {
        map.images()
            .iter()
            .map(|v| vector_to_pairs(v, gens))
            .collect()
    };
    Ok(Outcome::new(BraidedResult {
        confluent: braid.limits_agree(),
        steps: braid.steps.clone(),
        left_first: images(&braid.left_first),
        right_first: images(&braid.right_first),
    }))
}

fn cmd_complement(
    gens: &GenSet,
    family: &OperatorFamily,
    _: Option<bool>,
) -> Result<Outcome, Failure> {
    cmd_complete(gens, family, None)
}

fn cmd_complete(
    gens: &GenSet,
    family: &OperatorFamily,
    _: Option<bool>,
) -> Result<Outcome, Failure> {
    let report = completion::complete(family)
        .map_err(|err| Failure::computation(err.to_string()))?;
    let reports = |members: &[ReductionOperator]| -> Vec<_> {
        members.iter().map(|op| operator_report(op, gens)).collect()
    };
    Ok(Outcome::new(CompleteResult {
        family: reports(report.family.members()),
        meet: operator_report(&report.meet, gens),
        obstructions: labels(gens, &report.obstructions),
        complement: operator_report(&report.complement, gens),
        completed_family: reports(report.completed_family.members()),
        confluent: lattice::is_confluent(&report.completed_family),
    }))
}

fn cmd_pres_check(
    pres: &Presentation,
    selector: SelectorArg,
    strict: bool,
) -> Result<Outcome, Failure> {
    let selector_enum = match selector {
        SelectorArg::Pair => FamilySelector::Pair,
        SelectorArg::Full => FamilySelector::Full,
    };
    let family = pres.reduction_family(selector_enum);
    let meet = lattice::meet(&family);
    let nred_meet: Vec<String> = meet
        .nred()
        .iter()
        .map(|&g| pres.space().label(g).to_string())
        .collect();
    let obstructions: Vec<String> = pres
        .obstruction_words(selector_enum)
        .into_iter()
        .collect();
    let confluent = obstructions.is_empty();
    Ok(Outcome::new(PresCheckResult {
        degree: pres.degree(),
        family: match selector {
            SelectorArg::Pair => "pair".to_string(),
            SelectorArg::Full => "full".to_string(),
        },
        family_size: family.len(),
        nred_meet,
        obstructions,
        confluent,
    })
    .with_degree(pres.degree())
    .with_strict(strict.then_some(confluent)))
}

fn cmd_pres_complete(pres: &Presentation) -> Result<Outcome, Failure> {
    let (completed, rounds) = pres
        .complete()
        .map_err(|err| Failure::computation(err.to_string()))?;
    Ok(Outcome::new(PresCompleteResult {
        degree: completed.degree(),
        rounds,
        rules: rules_report(&completed),
        confluent: completed.is_confluent(FamilySelector::Full),
    })
    .with_degree(completed.degree()))
}

fn cmd_pres_nf(pres: &Presentation, poly: &str) -> Result<Outcome, Failure> {
    let terms: Vec<(redop::Scalar, String)> = if poly.trim_start().starts_with('[') {
        let pairs: Vec<TermPair> =
            serde_json::from_str(poly).map_err(|err| Failure::malformed(err.to_string()))?;
        pairs
            .into_iter()
            .map(|(coeff, word)| {
                redop::scalar::parse_scalar(&coeff)
                    .map(|c| (c, word))
                    .map_err(|err| Failure::malformed(err.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        vec![(redop::scalar::int(1), poly.trim().to_string())]
    };
    let input = pres
        .parse_polynomial(&terms)
        .map_err(|err| Failure::malformed(err.to_string()))?;
    let trace = pres
        .polynomial_normal_form(&input)
        .map_err(|err| Failure::computation(err.to_string()))?;
    let rendered: Vec<TermPair> = pres
        .render_polynomial(trace.result())
        .into_iter()
        .map(|(c, w)| (redop::scalar::format_scalar(&c), w))
        .collect();
    Ok(Outcome::new(PresNfResult {
        degree: pres.degree(),
        normal_form: rendered,
        steps: trace.steps.len(),
    })
    .with_degree(pres.degree()))
}

fn general_report(
    gens: &GenSet,
    op: &general::GeneralOperator,
) -> GeneralOperatorReport {
    GeneralOperatorReport {
        matrix: op
            .to_matrix()
            .iter()
            .map(|row| row.iter().map(redop::scalar::format_scalar).collect())
            .collect(),
        nred: op
            .nred()
            .iter()
            .map(|&g| gens.label(g).to_string())
            .collect(),
    }
}

fn cmd_general_completable(
    gens: &GenSet,
    order: &general::PartialOrder,
    members: &[general::GeneralOperator],
    strict: bool,
) -> Result<Outcome, Failure> {
    let meet = general::is_completable(members, order)
        .map_err(|err| Failure::computation(err.to_string()))?;
    let completable = meet.is_some();
    Ok(Outcome::new(CompletableResult {
        completable,
        meet: meet.map(|op| general_report(gens, &op)),
        assumption: general::IMAGE_ASSUMPTION_NOTE.to_string(),
    })
    .with_strict(strict.then_some(completable)))
}

fn cmd_general_confluent(
    order: &general::PartialOrder,
    members: &[general::GeneralOperator],
    strict: bool,
) -> Result<Outcome, Failure> {
    let report = general::general_confluence(members, order)
        .map_err(|err| Failure::computation(err.to_string()))?;
    let confluent = report.confluent;
    Ok(Outcome::new(GeneralConfluentResult {
        confluent: report.confluent,
        church_rosser: report.church_rosser,
        normalising: report.normalising,
        relation_confluent: report.relation_confluent,
        assumption: report.assumption.to_string(),
    })
    .with_strict(strict.then_some(confluent)))
}

fn cmd_check(bytes: &[u8], strict: bool) -> Result<Outcome, Failure> {
    let value: Value = parse_json(bytes)?;
    let mut violations = Vec::new();
    if value.get("operators").is_some() {
        let (_, family) = load_family(bytes)?;
        for (i, member) in family.members().iter().enumerate() {
            for violation in audit_operator(member) {
                violations.push(format!("operator {i}: {violation}"));
            }
        }
    } else {
        let gens = check_gen_set(&value)?;
        if let Some(matrix_value) = value.get("matrix") {
            let matrix: Vec<Vec<String>> = serde_json::from_value(matrix_value.clone())
                .map_err(|err| Failure::malformed(err.to_string()))?;
            let gens = match gens {
                Some(gens) => gens,
                None => GenSet::numbered(matrix.len()),
            };
            check_size(gens.len())?;
            let parsed = parse_matrix(&matrix, gens.len())
                .map_err(|err| Failure::malformed(err.to_string()))?;
            let condition_violations = validate_reduction_matrix(&parsed)
                .map_err(|err| Failure::malformed(err.to_string()))?;
            for violation in &condition_violations {
                violations.push(violation.to_string());
            }
            if matrix_product(&parsed, &parsed) != parsed {
                violations.push("matrix is not idempotent".to_string());
            }
            if condition_violations.is_empty() {
                let op = ReductionOperator::from_matrix(&parsed)
                    .map_err(|err| Failure::malformed(err.to_string()))?;
                violations.extend(audit_operator(&op));
            }
        } else if let Some(kernel_value) = value.get("kernel") {
            let gens = gens.ok_or_else(|| {
                Failure::malformed("kernel form needs a `generators` list to resolve labels")
            })?;
            check_size(gens.len())?;
            let kernel: Vec<Vec<TermPair>> = serde_json::from_value(kernel_value.clone())
                .map_err(|err| Failure::malformed(err.to_string()))?;
            let file = redop::io::OperatorFile {
                matrix: None,
                kernel: Some(kernel),
            };
            let op = file
                .resolve(&gens)
                .map_err(|err| Failure::malformed(err.to_string()))?;
            violations.extend(audit_operator(&op));
        } else {
            return Err(Failure::malformed(
                "expected a family file or an operator file with `matrix` or `kernel`",
            ));
        }
    }
    let valid = violations.is_empty();
    Ok(Outcome::new(CheckResult { valid, violations })
        .with_strict(strict.then_some(valid)))
}

fn check_gen_set(value: &Value) -> Result<Option<GenSet>, Failure> {
    match value.get("generators") {
        None => Ok(None),
        Some(generators) => {
            let labels: Vec<String> = serde_json::from_value(generators.clone())
                .map_err(|err| Failure::malformed(err.to_string()))?;
            GenSet::new(labels)
                .map(Some)
                .map_err(|err| Failure::malformed(err.to_string()))
        }
    }
}

fn audit_operator(op: &ReductionOperator) -> Vec<String> {
    let mut violations = op.audit();
    // round-trip through the kernel bijection must reproduce the operator
    let round_trip = ReductionOperator::with_kernel(&op.kernel_basis());
    if &round_trip != op {
        violations.push("kernel round trip does not reproduce the operator".to_string());
    }
    // validated matrices are idempotent
    let matrix = op.to_matrix();
    if matrix_product(&matrix, &matrix) != matrix {
        violations.push("matrix is not idempotent".to_string());
    }
    violations
}
