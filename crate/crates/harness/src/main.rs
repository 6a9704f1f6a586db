use std::process::ExitCode;

use braid_core::{
    are_conjugate, classify, embed_general, embed_standard, equal_words, normal_form, BraidError, BraidWord,
    DEFAULT_MAX_SSS,
};
use braid_harness::bench::run_bench;
use braid_harness::report::{render_boundary, render_suite, Format};
use braid_harness::{boundary_suite, verify_nonmerging, HarnessError, SuiteConfig};
use clap::{Parser, Subcommand, ValueEnum};

/// Braid group computations: normal forms, conjugacy, embeddings and the
/// Nielsen–Thurston type, plus verification suites.
///
/// Words are written `n: l1 l2 ...` with `i` for σ_i and `-i` for its
/// inverse, e.g. `"3: 1 2 -1"`.
#[derive(Parser)]
#[command(name = "braid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Records,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Records => Format::Records,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the left normal form.
    Nf { word: BraidWord },
    /// Decide whether two words represent the same braid.
    Eq { left: BraidWord, right: BraidWord },
    /// Decide conjugacy and print a conjugator c with c·a·c⁻¹ = b.
    Conj {
        a: BraidWord,
        b: BraidWord,
        #[arg(long, default_value_t = DEFAULT_MAX_SSS)]
        max_sss: usize,
    },
    /// Embed a word of B_m into B_n, optionally conjugated by g as g⁻¹·η(w)·g.
    Embed {
        word: BraidWord,
        n: usize,
        #[arg(long)]
        conjugator: Option<BraidWord>,
    },
    /// Nielsen–Thurston type.
    Classify {
        word: BraidWord,
        #[arg(long, default_value_t = DEFAULT_MAX_SSS)]
        max_sss: usize,
    },
    /// Check that embedding B_m into B_n neither merges nor splits conjugacy classes.
    VerifyNonmerging {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        maxlen: usize,
        #[arg(long)]
        seed: u64,
        /// Also test a random conjugated embedding with a conjugator of this length.
        #[arg(long)]
        general_conj_len: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_SSS)]
        max_sss: usize,
        /// Fraction of trials using constructed conjugate pairs.
        #[arg(long, default_value_t = 0.5)]
        constructed_fraction: f64,
        /// Largest tolerated fraction of skipped trials.
        #[arg(long, default_value_t = 0.05)]
        skip_threshold: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Include wall-clock timings in records and JSON output.
        #[arg(long)]
        timings: bool,
    },
    /// Check that embedded braids preserve the boundary curve and are not periodic.
    BoundarySuite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        maxlen: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Time normal forms and conjugacy decisions over a grid of sizes.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        maxlen: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_SSS)]
        max_sss: usize,
    },
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

fn braid_failure(e: &BraidError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        BraidError::ResourceLimit { .. } => ExitCode::from(EXIT_RESOURCE),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn harness_failure(e: &HarnessError) -> ExitCode {
    match e {
        HarnessError::Braid(b) => braid_failure(b),
        HarnessError::InvalidConfig(_) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        HarnessError::TheoremViolation { .. } => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Nf { word } => println!("{}", normal_form(&word)),
        Command::Eq { left, right } => match equal_words(&left, &right) {
            Ok(eq) => println!("{eq}"),
            Err(e) => return braid_failure(&e),
        },
        Command::Conj { a, b, max_sss } => match are_conjugate(&a, &b, max_sss) {
            Ok(Some(cert)) if cert.verified => println!("conjugate conjugator={}", cert.conjugator),
            Ok(Some(cert)) => {
                eprintln!("certificate {} failed verification", cert.conjugator);
                return ExitCode::from(EXIT_VIOLATION);
            }
            Ok(None) => println!("not-conjugate"),
            Err(e) => return braid_failure(&e),
        },
        Command::Embed { word, n, conjugator } => {
            let result = match &conjugator {
                Some(g) => embed_general(&word, n, g),
                None => embed_standard(&word, n),
            };
            match result {
                Ok(w) => println!("{w}"),
                Err(e) => return braid_failure(&e),
            }
        }
        Command::Classify { word, max_sss } => match classify(&word, max_sss) {
            Ok(result) => match result.verify_witness(&word) {
                Ok(true) => println!("{result}"),
                Ok(false) => {
                    eprintln!("reducibility witness failed verification: {result}");
                    return ExitCode::from(EXIT_VIOLATION);
                }
                Err(e) => return braid_failure(&e),
            },
            Err(e) => return braid_failure(&e),
        },
        Command::VerifyNonmerging {
            m,
            n,
            trials,
            maxlen,
            seed,
            general_conj_len,
            max_sss,
            constructed_fraction,
            skip_threshold,
            format,
            timings,
        } => {
            let cfg = SuiteConfig {
                general_conj_len,
                max_sss,
                constructed_fraction,
                skip_threshold,
                ..SuiteConfig::new(m, n, trials, maxlen, seed)
            };
            match verify_nonmerging(&cfg) {
                Ok(report) => {
                    print!("{}", render_suite(&report, format.into(), timings));
                    return ExitCode::from(report.exit_code() as u8);
                }
                Err(e) => return harness_failure(&e),
            }
        }
        Command::BoundarySuite { m, n, trials, seed, maxlen, format } => {
            match boundary_suite(m, n, trials, maxlen, seed) {
                Ok(report) => {
                    print!("{}", render_boundary(&report, format.into()));
                    if !report.passed() {
                        return ExitCode::from(EXIT_VIOLATION);
                    }
                }
                Err(e) => return harness_failure(&e),
            }
        }
        Command::Bench { n, maxlen, trials, seed, max_sss } => match run_bench(n, maxlen, trials, seed, max_sss) {
            Ok(rows) => {
                println!("n\tlen\ttrials\tnf_us\tconj_us\tconj_max_us\tskipped");
                for r in rows {
                    println!(
                        "{}\t{}\t{}\t{:.1}\t{:.1}\t{}\t{}",
                        r.n, r.len, r.trials, r.normal_form_us, r.conjugacy_us, r.max_conjugacy_us, r.skipped
                    );
                }
            }
            Err(e) => return braid_failure(&e),
        },
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    run(Cli::parse())
}
