//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use liespectra::fixtures;
use liespectra::koszul::homology;
use liespectra::lie::{character_space, ideal_chain, is_nilpotent, lower_central_series, Character, FlagKind};
use liespectra::module_ops::{dual_rep, tensor_rep, verify_module_identities};
use liespectra::spectra::{joint_spectrum, verify_main_theorems, SpectrumReport};
use liespectra::weights::{verify_weight_properties, weight_table};
use liespectra::{Error, LieRep, Subspace};
use num_complex::Complex;

use crate::document::{fixture_help, read_input, InputDocument, Resolved, TolerancesDoc};
use crate::error::{CliError, EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION};
use crate::report::{
    char_out, checks_out, columns_out, document_text, set_out, CandidateOut, ChainOut, CheckOut, Diag, DiagnosticsOut,
    HomologyOut, ReportDocument, SlodkowskiOut, WeightOut,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Closure, nilpotency and the chain of ideals.
    Check,
    /// Weight table.
    Weights,
    /// Joint spectrum with all degreewise sets.
    Spectrum,
    /// The two Slodkowski sets for one k (needs --k).
    Slodkowski,
    /// Homology at one character (needs --character).
    Homology,
    /// The dual module, written as an input document.
    Dual,
    /// The tensor product with the right operand, written as an input document.
    Tensor,
    /// All identities that apply to the input.
    Verify,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Weights => "weights",
            Command::Spectrum => "spectrum",
            Command::Slodkowski => "slodkowski",
            Command::Homology => "homology",
            Command::Dual => "dual",
            Command::Tensor => "tensor",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "liespectra", version, about = "Joint spectra and weights of Lie algebras of complex matrices")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Input document (JSON).
    #[arg(long, conflicts_with = "fixture")]
    pub input: Option<PathBuf>,
    /// Built-in representation instead of a document.
    #[arg(long, help = format!("Built-in representation: {}", fixture_help()))]
    pub fixture: Option<String>,
    /// Right operand for `tensor` and for the module checks in `verify`.
    #[arg(long, conflicts_with = "right_fixture")]
    pub right_input: Option<PathBuf>,
    /// Built-in right operand [default: the left operand for `tensor`, diag-1-2 for `verify`].
    #[arg(long)]
    pub right_fixture: Option<String>,
    /// Degree for `slodkowski`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Character for `homology`: comma-separated values such as "0,0.5" or "1+2i,-i".
    #[arg(long, allow_hyphen_values = true)]
    pub character: Option<String>,
    /// Relative threshold for rank decisions.
    #[arg(long, allow_hyphen_values = true)]
    pub eps_rank: Option<f64>,
    /// Radius for identifying characters and eigenvalues.
    #[arg(long, allow_hyphen_values = true)]
    pub eps_cluster: Option<f64>,
    /// JSON output (the default).
    #[arg(long, conflicts_with = "pretty")]
    pub json: bool,
    /// Human-readable text output.
    #[arg(long)]
    pub pretty: bool,
}

/// Runs the command line `argv` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(&args) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            if let Some(msg) = &output.failure {
                let _ = writeln!(err, "verification failed: {msg}");
                return EXIT_VERIFICATION;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// What a command produced.
pub struct Output {
    pub text: String,
    /// Set when the command ran but something it checked does not hold.
    pub failure: Option<String>,
}

fn source(input: &Option<PathBuf>, fixture: &Option<String>) -> Result<Option<InputDocument>, CliError> {
    match (input, fixture) {
        (Some(p), _) => Ok(Some(read_input(p)?)),
        (None, Some(name)) => Ok(Some(InputDocument::from_fixture(name))),
        (None, None) => Ok(None),
    }
}

pub fn execute(args: &Args) -> Result<Output, CliError> {
    let overrides = TolerancesDoc { eps_rank: args.eps_rank, eps_cluster: args.eps_cluster, eps_residual: None };
    let doc =
        source(&args.input, &args.fixture)?.ok_or_else(|| CliError::Usage("one of --input or --fixture is required".into()))?;
    let left = doc.resolve(overrides)?;
    let right = source(&args.right_input, &args.right_fixture)?.map(|d| d.resolve(overrides)).transpose()?;

    match args.command {
        Command::Dual => {
            let rep = dual_rep(&left.rep)?;
            let names: Vec<String> = left.names.iter().map(|n| format!("{n}^T")).collect();
            return Ok(document_output(&InputDocument::from_matrices(&names, rep.generators(), doc.tolerances), args.pretty));
        }
        Command::Tensor => {
            let r = right.as_ref().unwrap_or(&left);
            let rep = tensor_rep(&left.rep, &r.rep)?;
            let names: Vec<String> =
                left.names.iter().map(|n| format!("{n} (x) 1")).chain(r.names.iter().map(|n| format!("1 (x) {n}"))).collect();
            return Ok(document_output(&InputDocument::from_matrices(&names, rep.generators(), doc.tolerances), args.pretty));
        }
        _ => {}
    }

    let mut report = ReportDocument::new(args.command.name(), left.expanded.clone(), left.rep.tolerances());
    match args.command {
        Command::Check => check(&left, &mut report)?,
        Command::Weights => weights(&left, &mut report)?,
        Command::Spectrum => spectrum(&left, &mut report)?,
        Command::Slodkowski => slodkowski(&left, args.k, &mut report)?,
        Command::Homology => homology_at(&left, args.character.as_deref(), &mut report)?,
        Command::Verify => verify(&left, right.as_ref(), &mut report)?,
        Command::Dual | Command::Tensor => unreachable!("handled above"),
    }
    let failure = (report.status != "ok").then(|| {
        report.checks.iter().flatten().filter(|c| c.status == "fail").map(|c| c.name.clone()).collect::<Vec<_>>().join("; ")
    });
    let text = if args.pretty { report.to_text() } else { report.to_json() };
    Ok(Output { text, failure })
}

fn document_output(doc: &InputDocument, pretty: bool) -> Output {
    let text = if pretty {
        document_text(doc)
    } else {
        let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
        s.push('\n');
        s
    };
    Output { text, failure: None }
}

fn chain_out(rep: &LieRep<f64>) -> Result<ChainOut, CliError> {
    let chain = ideal_chain(rep)?;
    Ok(ChainOut {
        kind: match chain.kind {
            FlagKind::Central => "central",
            FlagKind::Subnormal => "subnormal",
        },
        dims: chain.dims(),
        basis: columns_out(&chain.basis),
    })
}

fn check(r: &Resolved, report: &mut ReportDocument) -> Result<(), CliError> {
    let rep = &r.rep;
    report.closure_residual = Some(crate::format::Num(rep.closure_residual()));
    report.nilpotent = Some(is_nilpotent(rep)?);
    report.central_series_dims = Some(lower_central_series(rep)?.iter().map(Subspace::dim).collect());
    report.derived_dim = Some(rep.derived_subalgebra()?.dim());
    match chain_out(rep) {
        Ok(c) => report.chain = Some(c),
        Err(CliError::Core(Error::Unsupported(msg))) => report.notes.push(msg),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn weight_entries(rep: &LieRep<f64>) -> Result<Vec<WeightOut>, CliError> {
    Ok(weight_table(rep)?
        .entries
        .iter()
        .map(|e| WeightOut { weight: char_out(&e.weight), multiplicity: e.multiplicity })
        .collect())
}

fn weights(r: &Resolved, report: &mut ReportDocument) -> Result<(), CliError> {
    report.nilpotent = Some(is_nilpotent(&r.rep)?);
    report.weights = Some(weight_entries(&r.rep)?);
    Ok(())
}

fn diagnostics(s: &SpectrumReport<f64>) -> DiagnosticsOut {
    DiagnosticsOut { min_retained_singular_value: Diag(s.min_retained), max_discarded_singular_value: Diag(s.max_discarded) }
}

fn spectrum(r: &Resolved, report: &mut ReportDocument) -> Result<(), CliError> {
    let s = joint_spectrum(&r.rep)?;
    report.nilpotent = Some(s.nilpotent);
    report.chain = Some(chain_out(&r.rep)?);
    report.weights = Some(weight_entries(&r.rep)?);
    report.candidates =
        Some(s.candidates.iter().map(|c| CandidateOut { character: char_out(&c.character), homology: c.dims.clone() }).collect());
    report.sigma_p = Some(s.sigma_p.iter().map(set_out).collect());
    report.sp = Some(set_out(&s.sp));
    report.delta = Some((0..=s.n).map(|k| s.delta(k).map(|d| set_out(&d))).collect::<Result<_, _>>()?);
    report.pi = Some((0..=s.n).map(|k| s.pi(k).map(|d| set_out(&d))).collect::<Result<_, _>>()?);
    if !s.weights_match() {
        if s.nilpotent {
            report.checks = Some(vec![CheckOut {
                name: "Sp equals the weight set".into(),
                status: "fail",
                detail: Some("nilpotent input whose spectrum and weights differ".into()),
            }]);
            report.status = "verification failed";
        } else {
            report.notes.push("Sp differs from the weight set (expected: non-nilpotent input)".into());
        }
    }
    report.diagnostics = Some(diagnostics(&s));
    Ok(())
}

fn slodkowski(r: &Resolved, k: Option<usize>, report: &mut ReportDocument) -> Result<(), CliError> {
    let k = k.ok_or_else(|| CliError::Usage("slodkowski needs --k".into()))?;
    let n = r.rep.dim();
    if k > n {
        return Err(CliError::invalid("--k", format!("k = {k} outside 0..={n}")));
    }
    let s = joint_spectrum(&r.rep)?;
    report.nilpotent = Some(s.nilpotent);
    report.sp = Some(set_out(&s.sp));
    report.slodkowski = Some(SlodkowskiOut { k, delta: set_out(&s.delta(k)?), pi: set_out(&s.pi(k)?) });
    report.diagnostics = Some(diagnostics(&s));
    Ok(())
}

/// Parses "a,b,.." where each entry is a real or complex literal.
pub fn parse_character(text: &str, n: usize) -> Result<Character<f64>, CliError> {
    let values: Vec<Complex<f64>> = text
        .split(',')
        .enumerate()
        .map(|(i, s)| {
            let s = s.trim();
            let s = if s.ends_with('i') && !s[..s.len() - 1].chars().last().is_some_and(|c| c.is_ascii_digit() || c == '.') {
                // "i", "-i", "2+i": give the unit an explicit coefficient
                format!("{}1i", &s[..s.len() - 1])
            } else {
                s.to_string()
            };
            s.parse::<Complex<f64>>().map_err(|_| CliError::invalid("--character", format!("entry {i} ({s:?}) is not a number")))
        })
        .collect::<Result<_, _>>()?;
    if values.len() != n {
        return Err(CliError::invalid("--character", format!("{} values given, the algebra has dimension {n}", values.len())));
    }
    Ok(Character::new(values))
}

fn homology_at(r: &Resolved, text: Option<&str>, report: &mut ReportDocument) -> Result<(), CliError> {
    let text = text.ok_or_else(|| CliError::Usage("homology needs --character".into()))?;
    let f = parse_character(text, r.rep.dim())?;
    if !liespectra::lie::is_character(&r.rep, &f) {
        let dim = character_space(&r.rep)?.dim();
        return Err(CliError::invalid(
            "--character",
            format!("does not vanish on [L, L] (the characters form a {dim}-dimensional space)"),
        ));
    }
    let h = homology(&r.rep, &f)?;
    report.homology = Some(HomologyOut {
        character: char_out(&f),
        dims: h.dims.clone(),
        ranks: h.ranks.clone(),
        euler_characteristic: h.euler_characteristic(),
        in_spectrum: !h.is_acyclic(),
    });
    report.diagnostics = Some(DiagnosticsOut {
        min_retained_singular_value: Diag(h.min_retained),
        max_discarded_singular_value: Diag(h.max_discarded),
    });
    Ok(())
}

fn verify(r: &Resolved, right: Option<&Resolved>, report: &mut ReportDocument) -> Result<(), CliError> {
    let rep = &r.rep;
    let main = verify_main_theorems(rep)?;
    let mut all = verify_weight_properties(rep, &weight_table(rep)?)?;
    all.extend(main);
    let partner = match right {
        Some(p) => p.rep.clone(),
        None => LieRep::new(fixtures::diag_1_2(), *rep.tolerances())?,
    };
    all.extend(verify_module_identities(rep, &partner)?);
    report.nilpotent = Some(true);
    report.checks = Some(checks_out(&all));
    if !all.passed() {
        report.status = "verification failed";
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_character_literals() {
        let f = parse_character("0, 0.5, -i, 2+i, 1-2.5i, i", 6).unwrap();
        let want = [(0.0, 0.0), (0.5, 0.0), (0.0, -1.0), (2.0, 1.0), (1.0, -2.5), (0.0, 1.0)];
        for (z, (re, im)) in f.values.iter().zip(want) {
            assert_eq!((z.re, z.im), (re, im));
        }
    }

    #[test]
    fn rejects_bad_characters() {
        assert!(parse_character("0,x", 2).unwrap_err().to_string().contains("entry 1"));
        assert!(parse_character("0", 2).unwrap_err().to_string().contains("1 values given"));
    }
}
