//! `qcosine` command-line frontend.
//!
//! Exit codes: 0 success, 2 input error (unreadable or malformed files,
//! dimension problems), 3 invalid configuration.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qcosine::analysis::{density_matrix, spectrum};
use qcosine::estimator::{ClassicalEstimator, EstimatorConfig, EstimatorRegistry, SimilarityEstimator};
use qcosine::format::Embedding;
use qcosine::interference::{phase_scan, SlitConfig};
use qcosine::qsim::NoiseModel;
use qcosine::similarity::{Method, SimilarityResult};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "qcosine",
    version,
    about = "Complex cosine similarity via single-qubit interference circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two embedding files classically and with the circuit estimator.
    Similarity {
        file_a: PathBuf,
        file_b: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// Keep the first K components of each vector, then renormalize.
        #[arg(long, value_name = "K")]
        truncate: Option<usize>,
    },
    /// Density matrix diagonal, trace and spectrum for a pair of embeddings.
    Analyze {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long, value_name = "K")]
        truncate: Option<usize>,
    },
    /// Scan the two-slit phase difference over [-π, π] and emit CSV.
    DoubleSlit {
        #[arg(long = "A", value_name = "A")]
        amp_a: f64,
        #[arg(long = "B", value_name = "B")]
        amp_b: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
    /// Convert between real and packed complex embeddings.
    Pack {
        file: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    /// Estimator: exact, shots or classical.
    #[arg(long, default_value = "exact")]
    mode: String,
    #[arg(long, default_value_t = 4096)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Symmetric readout bit-flip probability in [0, 0.5).
    #[arg(long, default_value_t = 0.0)]
    noise_flip: f64,
    /// Invert the readout flip after measuring.
    #[arg(long)]
    mitigate: bool,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ToComplex,
    ToReal,
}

enum Failure {
    Input(String),
    Config(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Config(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Config(m) => m,
        }
    }
}

impl From<qcosine::Error> for Failure {
    fn from(e: qcosine::Error) -> Self {
        use qcosine::Error::*;
        match e {
            InvalidNoise(_) | InvalidShots | InvalidConfig(_) | UnknownEstimator(_) => {
                Failure::Config(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn load_pair(a: &PathBuf, b: &PathBuf, truncate: Option<usize>) -> Result<(Embedding, Embedding), Failure> {
    let mut a = Embedding::load(a)?;
    let mut b = Embedding::load(b)?;
    if let Some(k) = truncate {
        a = a.truncate(k)?;
        b = b.truncate(k)?;
    }
    if a.dim() != b.dim() {
        return Err(Failure::Input(format!("dimension mismatch: {} vs {}", a.dim(), b.dim())));
    }
    Ok((a, b))
}

fn estimator_config(run: &RunArgs) -> Result<EstimatorConfig, Failure> {
    if run.shots == 0 {
        return Err(Failure::Config("--shots must be at least 1".into()));
    }
    let noise = NoiseModel::new(run.noise_flip).map_err(|e| Failure::Config(format!("--noise-flip: {e}")))?;
    if run.mitigate && run.noise_flip == 0.0 {
        return Err(Failure::Config("--mitigate requires --noise-flip > 0".into()));
    }
    Ok(EstimatorConfig {
        shots: run.shots,
        seed: run.seed,
        noise: (run.noise_flip > 0.0).then_some(noise),
        mitigate: run.mitigate,
    })
}

fn method_name(method: &Method) -> &'static str {
    match method {
        Method::ClassicalOracle => "classical",
        Method::QuantumExact => "exact",
        Method::QuantumSampled { .. } => "shots",
    }
}

fn cmd_similarity(a: &PathBuf, b: &PathBuf, run: &RunArgs, truncate: Option<usize>) -> CmdResult {
    let cfg = estimator_config(run)?;
    let registry = EstimatorRegistry::with_builtins();
    let estimator = registry.get(&run.mode).map_err(|_| {
        let names: Vec<_> = registry.names().collect();
        Failure::Config(format!("unknown --mode `{}` (expected one of {})", run.mode, names.join(", ")))
    })?;
    let (a, b) = load_pair(a, b, truncate)?;

    // quantum estimators need unit vectors
    let (a, b) = (a.normalize()?, b.normalize()?);
    let (classical, quantum): (SimilarityResult, SimilarityResult) = match (&a, &b) {
        (Embedding::Real(x), Embedding::Real(y)) => {
            (ClassicalEstimator.estimate_real(x, y, &cfg)?, estimator.estimate_real(x, y, &cfg)?)
        }
        (x, y) => {
            let (x, y) = (x.to_complex(), y.to_complex());
            (ClassicalEstimator.estimate(&x, &y, &cfg)?, estimator.estimate(&x, &y, &cfg)?)
        }
    };
    let delta = (quantum.value - classical.value).norm();
    Ok(match run.output {
        Output::Json => similarity_json(&classical.value, &quantum, delta),
        Output::Csv => similarity_csv(&classical.value, &quantum, delta),
    })
}

fn similarity_json(classical: &Complex64, quantum: &SimilarityResult, delta: f64) -> String {
    let mut q = json!({
        "re": quantum.value.re,
        "im": quantum.value.im,
        "stderr_re": quantum.stderr_real,
        "stderr_im": quantum.stderr_imag,
        "method": method_name(&quantum.method),
    });
    if let Method::QuantumSampled { shots, seed } = quantum.method {
        q["shots"] = json!(shots);
        q["seed"] = json!(seed);
    }
    let doc = json!({
        "classical": { "re": classical.re, "im": classical.im },
        "quantum": q,
        "magnitude": quantum.magnitude,
        "delta": delta,
    });
    serde_json::to_string_pretty(&doc).expect("finite values") + "\n"
}

fn similarity_csv(classical: &Complex64, quantum: &SimilarityResult, delta: f64) -> String {
    format!(
        "classical_re,classical_im,quantum_re,quantum_im,stderr_re,stderr_im,method,magnitude,delta\n\
         {:?},{:?},{:?},{:?},{:?},{:?},{},{:?},{:?}\n",
        classical.re,
        classical.im,
        quantum.value.re,
        quantum.value.im,
        quantum.stderr_real,
        quantum.stderr_imag,
        method_name(&quantum.method),
        quantum.magnitude,
        delta
    )
}

fn cmd_analyze(a: &PathBuf, b: &PathBuf, truncate: Option<usize>) -> CmdResult {
    let (a, b) = load_pair(a, b, truncate)?;
    let rho = density_matrix(&a.to_complex(), &b.to_complex())?;
    let doc = json!({
        "diagonal": rho.diagonal(),
        "trace": rho.trace(),
        "spectrum": spectrum(&rho),
    });
    Ok(serde_json::to_string_pretty(&doc).expect("finite values") + "\n")
}

fn cmd_double_slit(amp_a: f64, amp_b: f64, steps: usize) -> CmdResult {
    if steps < 2 {
        return Err(Failure::Config(format!("--steps must be at least 2 (got {steps})")));
    }
    let cfg = SlitConfig::new(amp_a, amp_b, 0.0, 0.0).map_err(|e| Failure::Config(e.to_string()))?;
    let rows = phase_scan(&cfg, steps).map_err(|e| Failure::Config(e.to_string()))?;
    let mut out = String::from("delta_phase,intensity,p0,p1\n");
    for r in rows {
        out.push_str(&format!("{:?},{:?},{:?},{:?}\n", r.delta_phase, r.intensity, r.p0, r.p1));
    }
    Ok(out)
}

fn cmd_pack(file: &PathBuf, direction: Direction) -> CmdResult {
    let packed: Embedding = match (Embedding::load(file)?, direction) {
        (Embedding::Real(r), Direction::ToComplex) => r.pack_to_complex()?.into(),
        (Embedding::Complex(c), Direction::ToReal) => c.unpack_to_real().into(),
        (e, _) => {
            return Err(Failure::Input(format!(
                "{} embedding cannot be converted in that direction",
                e.kind()
            )))
        }
    };
    Ok(packed.to_json() + "\n")
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Similarity { file_a, file_b, run, truncate } => {
            cmd_similarity(&file_a, &file_b, &run, truncate)
        }
        Command::Analyze { file_a, file_b, truncate } => cmd_analyze(&file_a, &file_b, truncate),
        Command::DoubleSlit { amp_a, amp_b, steps } => cmd_double_slit(amp_a, amp_b, steps),
        Command::Pack { file, direction } => cmd_pack(&file, direction),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(3);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("qcosine: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
