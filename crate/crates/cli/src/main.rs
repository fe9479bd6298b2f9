//! Thin command-line shell over the sidon-c4 library. Every number printed
//! here is produced by the library; this layer only parses flags, formats,
//! and maps outcomes to exit codes (0 success, 1 verification failure,
//! 2 usage error).

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sidon_c4::field::poly_string;
use sidon_c4::{
    certify_artifacts, render_csv, render_text, sweep, CertifyOptions, Error, FieldParams,
    SidonSet,
};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Largest q accepted without --unsafe-large; keeps graph build and scans
/// within desk-scale time and memory.
const Q_GUARD: u64 = 1024;

#[derive(Parser)]
#[command(name = "sidon-c4", version, about = "Sidon sets, 4-cycle-free graphs, and certified excision")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the field and the Sidon set for one q and print them.
    Build {
        /// Odd prime power.
        #[arg(long)]
        q: u64,
        /// Which generator to use, in lexicographic scan order.
        #[arg(long, default_value_t = 0)]
        generator_index: usize,
        /// Write the residues of A, one per line.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Lift the q <= 1024 resource guard.
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Run the full pipeline for one q and print the certificate.
    Excise {
        /// Odd prime power.
        #[arg(long)]
        q: u64,
        /// Which generator to use, in lexicographic scan order.
        #[arg(long, default_value_t = 0)]
        generator_index: usize,
        /// Write the excised graph's edge list.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Lift the q <= 1024 resource guard.
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Certify every odd prime power in a range and emit one CSV row each.
    Sweep {
        #[arg(long)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
        /// Destination CSV; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Which generator to use, in lexicographic scan order.
        #[arg(long, default_value_t = 0)]
        generator_index: usize,
        /// Lift the q <= 1024 resource guard.
        #[arg(long)]
        unsafe_large: bool,
    },
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Build { q, generator_index, export, unsafe_large } => {
            cmd_build(q, generator_index, export.as_deref(), unsafe_large)
        }
        Cmd::Excise { q, generator_index, export, unsafe_large } => {
            cmd_excise(q, generator_index, export.as_deref(), unsafe_large)
        }
        Cmd::Sweep { q_min, q_max, out, generator_index, unsafe_large } => {
            cmd_sweep(q_min, q_max, out.as_deref(), generator_index, unsafe_large)
        }
    }
}

fn guard_q(q: u64, unsafe_large: bool) -> Result<(), ExitCode> {
    if q > Q_GUARD && !unsafe_large {
        eprintln!("error: q = {q} exceeds the resource guard {Q_GUARD}; pass --unsafe-large to override");
        return Err(ExitCode::from(EXIT_USAGE));
    }
    Ok(())
}

/// Bad input (not an odd prime power, generator index out of range) is a
/// usage error; anything else that escapes the library is a verification
/// failure.
fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::NotOddPrimePower { .. } | Error::GeneratorNotFound { .. } => {
            ExitCode::from(EXIT_USAGE)
        }
        _ => ExitCode::from(EXIT_VERIFY),
    }
}

fn cmd_build(q: u64, generator_index: usize, export: Option<&Path>, unsafe_large: bool) -> ExitCode {
    if let Err(code) = guard_q(q, unsafe_large) {
        return code;
    }
    let field = match FieldParams::with_generator_index(q, generator_index) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    let a = match SidonSet::bose_chowla(&field) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    println!("q = {} (p = {}, e = {})", field.q(), field.p(), field.e());
    println!("modulus = {}", poly_string(field.modulus()));
    println!("theta = {}", poly_string(field.theta().coeffs()));
    println!("|A| = {}", a.elements().len());
    let rendered: Vec<String> = a.elements().iter().map(u64::to_string).collect();
    println!("A = {{{}}}", rendered.join(", "));
    println!("t = {}", a.even_count());
    if let Some(path) = export {
        if let Err(e) = write_to(path, |w| a.write_residues(w)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_VERIFY);
        }
        println!("wrote {} residues to {}", a.elements().len(), path.display());
    }
    ExitCode::SUCCESS
}

fn cmd_excise(q: u64, generator_index: usize, export: Option<&Path>, unsafe_large: bool) -> ExitCode {
    if let Err(code) = guard_q(q, unsafe_large) {
        return code;
    }
    let opts = CertifyOptions { generator_index };
    let artifacts = match certify_artifacts(q, &opts) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    print!("{}", render_text(&artifacts.report));
    if let Some(path) = export {
        let written = write_to(path, |w| {
            sidon_c4::write_excised_edge_list(&artifacts.graph, &artifacts.plan, w)
        });
        if let Err(e) = written {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_VERIFY);
        }
        println!("wrote excised edge list to {}", path.display());
    }
    if artifacts.report.all_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}

fn cmd_sweep(
    q_min: u64,
    q_max: u64,
    out: Option<&Path>,
    generator_index: usize,
    unsafe_large: bool,
) -> ExitCode {
    if q_min < 3 || q_min > q_max {
        eprintln!("error: need 3 <= q_min <= q_max (got {q_min}..{q_max})");
        return ExitCode::from(EXIT_USAGE);
    }
    if let Err(code) = guard_q(q_max, unsafe_large) {
        return code;
    }
    let opts = CertifyOptions { generator_index };
    let reports = match sweep(q_min, q_max, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    let csv = render_csv(&reports);
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, &csv) {
                // Do not leave a half-written CSV behind.
                let _ = fs::remove_file(path);
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_VERIFY);
            }
        }
        None => print!("{csv}"),
    }
    let failures = reports.iter().filter(|r| !r.all_ok()).count();
    eprintln!("sweep complete: {} rows, {failures} failures", reports.len());
    if failures > 0 {
        ExitCode::from(EXIT_VERIFY)
    } else {
        ExitCode::SUCCESS
    }
}

fn write_to<F>(path: &Path, body: F) -> io::Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> io::Result<()>,
{
    let mut w = BufWriter::new(File::create(path)?);
    body(&mut w)?;
    w.flush()
}
