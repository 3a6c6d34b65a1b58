use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jennings_socle::verify::{
    self, catalog_listing, gl_check, jennings_fragment, parse_auto_arg, resolve_seed, to_json, FieldSpec,
    GroupSource, RunConfig,
};
use jennings_socle::Error;

#[derive(Parser)]
#[command(name = "socle-verify", version, about = "Socle scalars of automorphisms of modular group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify lambda = det(A)^(p-1) for the given automorphisms.
    Run {
        /// Catalog name or path to a pc-presentation file.
        #[arg(long)]
        group: String,
        /// `p[,n[,modulus]]`, e.g. `3,2` or `2,2,t^2+t+1`.
        #[arg(long)]
        field: String,
        /// Automorphism spec, or `@file` with one spec per line. Repeatable.
        #[arg(long = "auto")]
        autos: Vec<String>,
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Check multiplicativity on all pairs (sampled above order 256).
        #[arg(long)]
        full_check: bool,
    },
    /// Run every catalog group over GF(p) and GF(p^2).
    Sweep {
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the Jennings series, lifts and graded dimensions.
    Jennings {
        #[arg(long)]
        group: String,
        #[arg(long)]
        field: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the top-monomial scalar against det^(p-1) on GL_m(GF(p^n)).
    GlCheck {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the built-in groups.
    Catalog,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    verify::parse_seed(s).ok_or_else(|| format!("`{s}` is not a u64"))
}

fn emit(format: Format, text: String, json: String) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{json}"),
    }
}

fn execute(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Run {
            group,
            field,
            autos,
            seed,
            format,
            full_check,
        } => {
            let mut specs = Vec::new();
            for a in &autos {
                specs.extend(parse_auto_arg(a)?);
            }
            let config = RunConfig {
                group: GroupSource::from_arg(&group),
                field: FieldSpec::parse(&field)?,
                autos: specs,
                full_check,
                seed: resolve_seed(seed)?,
            };
            let report = verify::run(&config)?;
            emit(format, report.to_text(), to_json(&report));
            Ok(report.verdict)
        }
        Command::Sweep { seed, format } => {
            let report = verify::sweep(resolve_seed(seed)?)?;
            emit(format, report.to_text(), to_json(&report));
            Ok(report.verdict)
        }
        Command::Jennings { group, field, format } => {
            let frag = jennings_fragment(&GroupSource::from_arg(&group), &FieldSpec::parse(&field)?)?;
            emit(format, frag.to_text(), to_json(&frag));
            Ok(true)
        }
        Command::GlCheck {
            p,
            n,
            m,
            count,
            seed,
            format,
        } => {
            let report = gl_check(p, n, m, count, resolve_seed(seed)?)?;
            emit(format, report.to_text(), to_json(&report));
            Ok(report.verdict)
        }
        Command::Catalog => {
            print!("{}", catalog_listing());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
