use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fibnum::format::{export_dot, export_native, import_native, parse_word};
use fibnum::numeration::{
    canonical, cg_check, format_digits, parse_digits, value, zeck_check, zeck_encode, Nat,
};
use fibnum::synthesis::{apply_functional, synth_by_name, SYNTH_NAMES};
use fibnum::verify::{run_all, VerifyOptions};
use fibnum::{DigitWord, Error};

#[derive(Parser)]
#[command(name = "fibnum")]
#[command(about = "Zeckendorf and Chung-Graham numeration: converters, adders, automata")]
#[command(version)]
struct Cli {
    /// Read and print digit words most-significant-digit first
    #[arg(long, global = true)]
    msd: bool,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum System {
    Dec,
    Zeck,
    Cg,
    /// Arbitrary {0,1,2} digit string valued in shifted Fibonacci weights
    Raw2,
}

#[derive(Copy, Clone, ValueEnum)]
enum AddSystem {
    Zeck,
    Cg,
}

#[derive(Copy, Clone, ValueEnum)]
enum ExportFormat {
    Native,
    Dot,
}

#[derive(Subcommand)]
enum Commands {
    /// Convert a number between decimal, Zeckendorf and Chung-Graham
    Convert {
        #[arg(long, value_enum)]
        from: System,
        #[arg(long, value_enum)]
        to: System,
        value: String,
    },
    /// Add two numbers through the synthesized addition relation
    Add {
        #[arg(value_enum)]
        system: AddSystem,
        x: String,
        y: String,
    },
    /// Synthesize a named automaton and export it
    Synth {
        /// One of: zeckval, cgval, cg0, cgeq, cgsplit, zeckadd, cgadd,
        /// fibcg, fibrep-lsd, fibrep-msd, cgrep, phin, cgphin
        name: String,
        /// Output file (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "native")]
        format: ExportFormat,
    },
    /// Re-check every claim and print the report
    Verify {
        /// Cap the oracle sweeps at this n
        #[arg(long)]
        max_n: Option<u64>,
        /// Directory of golden .native files (defaults to the embedded copies)
        #[arg(long)]
        golden_dir: Option<PathBuf>,
    },
    /// Test words against an automaton file
    Accepts {
        automaton: PathBuf,
        /// Plain digit strings, or bracketed tuples like [2,2][0,0]
        words: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> fibnum::Result<ExitCode> {
    match &cli.command {
        Commands::Convert { from, to, value } => cmd_convert(*from, *to, value, cli.msd),
        Commands::Add { system, x, y } => cmd_add(*system, x, y, cli.msd),
        Commands::Synth { name, out, format } => cmd_synth(name, out.as_deref(), *format),
        Commands::Verify { max_n, golden_dir } => cmd_verify(*max_n, golden_dir.clone()),
        Commands::Accepts { automaton, words } => cmd_accepts(automaton, words, cli.msd),
    }
}

fn cmd_convert(from: System, to: System, input: &str, msd: bool) -> fibnum::Result<ExitCode> {
    let digits: Vec<u8> = match from {
        System::Dec => Vec::new(),
        _ => {
            let d = parse_digits(input, msd)?;
            match from {
                System::Zeck => zeck_check(&d)?,
                System::Cg => cg_check(&d)?,
                System::Raw2 => {
                    if let Some(&bad) = d.iter().find(|&&x| x > 2) {
                        return Err(Error::InvalidWord {
                            system: "raw2",
                            word: input.to_string(),
                            reason: format!("digit {bad} exceeds 2"),
                        });
                    }
                }
                System::Dec => unreachable!(),
            }
            d
        }
    };
    let out = match (from, to) {
        (System::Dec, System::Dec) => {
            let n: Nat = input
                .trim()
                .parse()
                .map_err(|_| bad_decimal(input))?;
            n.to_string()
        }
        (System::Dec, System::Zeck) => {
            let n: Nat = input.trim().parse().map_err(|_| bad_decimal(input))?;
            format_digits(&zeck_encode(&n), msd)
        }
        (System::Dec, System::Cg) => {
            let n: Nat = input.trim().parse().map_err(|_| bad_decimal(input))?;
            let fibcg = synth_by_name("fibcg")?;
            format_digits(&apply_functional(&fibcg, &[Some(&zeck_encode(&n)), None])?, msd)
        }
        (_, System::Dec) => value(&digits, 0).to_string(),
        (System::Zeck, System::Zeck) | (System::Cg, System::Cg) => {
            format_digits(&canonical(&digits), msd)
        }
        (System::Zeck, System::Cg) => {
            let fibcg = synth_by_name("fibcg")?;
            format_digits(&apply_functional(&fibcg, &[Some(&digits), None])?, msd)
        }
        (System::Cg, System::Zeck) => {
            let fibcg = synth_by_name("fibcg")?;
            format_digits(&apply_functional(&fibcg, &[None, Some(&digits)])?, msd)
        }
        (System::Raw2, System::Zeck) => {
            // cgrep normalizes the {0,1,2} string, fibcg maps it back
            let cgrep = synth_by_name("cgrep")?;
            let cg = apply_functional(&cgrep, &[Some(&digits), None])?;
            let fibcg = synth_by_name("fibcg")?;
            format_digits(&apply_functional(&fibcg, &[None, Some(&cg)])?, msd)
        }
        (System::Raw2, System::Cg) => {
            let cgrep = synth_by_name("cgrep")?;
            format_digits(&apply_functional(&cgrep, &[Some(&digits), None])?, msd)
        }
        (_, System::Raw2) => {
            return Err(Error::Synthesis(
                "raw2 is an input system only".to_string(),
            ))
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn bad_decimal(input: &str) -> Error {
    Error::InvalidWord {
        system: "dec",
        word: input.to_string(),
        reason: "not a decimal natural number".to_string(),
    }
}

fn cmd_add(system: AddSystem, x: &str, y: &str, msd: bool) -> fibnum::Result<ExitCode> {
    let (name, check): (&str, fn(&[u8]) -> fibnum::Result<()>) = match system {
        AddSystem::Zeck => ("zeckadd", zeck_check),
        AddSystem::Cg => ("cgadd", cg_check),
    };
    let xd = parse_digits(x, msd)?;
    let yd = parse_digits(y, msd)?;
    check(&xd)?;
    check(&yd)?;
    let adder = synth_by_name(name)?;
    let z = apply_functional(&adder, &[Some(&xd), Some(&yd), None])?;
    // independent exact-arithmetic check; a mismatch is an internal bug
    let sum = value(&xd, 0) + value(&yd, 0);
    if check(&z).is_err() || value(&z, 0) != sum {
        eprintln!("internal error: adder output {z:?} does not match exact sum {sum}");
        return Ok(ExitCode::from(3));
    }
    println!("{}", format_digits(&z, msd));
    Ok(ExitCode::SUCCESS)
}

fn cmd_synth(
    name: &str,
    out: Option<&std::path::Path>,
    format: ExportFormat,
) -> fibnum::Result<ExitCode> {
    if !SYNTH_NAMES.contains(&name) {
        return Err(Error::UnknownName(name.to_string()));
    }
    let a = synth_by_name(name)?;
    let text = match format {
        ExportFormat::Native => export_native(&a),
        ExportFormat::Dot => export_dot(&a, &name.replace('-', "_")),
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text)?;
            println!(
                "live states: {}, total states: {}",
                a.live_state_count(),
                a.total_state_count()
            );
        }
        None => {
            print!("{text}");
            eprintln!(
                "live states: {}, total states: {}",
                a.live_state_count(),
                a.total_state_count()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(max_n: Option<u64>, golden_dir: Option<PathBuf>) -> fibnum::Result<ExitCode> {
    let report = run_all(&VerifyOptions { max_n, golden_dir });
    let mut stdout = std::io::stdout().lock();
    report.write(&mut stdout)?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_accepts(path: &std::path::Path, words: &[String], msd: bool) -> fibnum::Result<ExitCode> {
    let a = import_native(&std::fs::read_to_string(path)?)?;
    let mut lines = Vec::with_capacity(words.len());
    for word in words {
        let mut rows = parse_word(word, msd)?;
        if rows.len() == 1 && a.tracks().len() > 1 && rows[0].is_empty() {
            // empty word against a multi-track automaton
            rows = vec![Vec::new(); a.tracks().len()];
        }
        let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
        let w = DigitWord::from_rows(&refs)?;
        lines.push(a.accepts(&w)?);
    }
    for ok in &lines {
        println!("{ok}");
    }
    // exit 1 when any word is rejected, so scripts can branch on acceptance
    Ok(if lines.iter().all(|&b| b) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
