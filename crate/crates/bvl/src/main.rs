//! Command-line front end: exact d2 counts, construction of certified
//! Beauville structures on A_n^k, certificate re-verification, the triple
//! catalog, class representatives, and the A_5 obstruction scan.
//!
//! Exit codes: 0 success/verified, 1 verification failure or no structure,
//! 2 usage or parse error, 3 infeasible parameters.

use beauville::cert::{CertError, Certificate};
use beauville::count::{
    class_representatives, phi2_bruteforce, phi2_moebius, CountReport, EquivalenceLevel,
};
use beauville::error::BuildError;
use beauville::structure::{build_beauville, condition3_exact, BuildOutcome, ProductTriple};
use beauville::triples::{catalog_small, GeneratingTriple};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "bvl", version, about = "Beauville structures on powers of alternating groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Brute,
    Moebius,
}

#[derive(Subcommand)]
enum Command {
    /// Count the automorphism orbits of ordered generating pairs of A_n.
    D2 {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Build a verified Beauville structure on A_n^k and emit a certificate.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for the bounded fallback searches (search order only).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Feasibility cap on k; BVL_CAP overrides the default 10000.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Re-verify a certificate file from scratch.
    Verify { path: PathBuf },
    /// Print the catalog of explicit generating triples for degree n.
    Catalog {
        #[arg(long)]
        n: usize,
        /// Gate the exit code on every entry verifying.
        #[arg(long)]
        verify: bool,
    },
    /// Print one generating triple per automorphism class (n <= 7).
    Classreps {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustively confirm that A_5 itself admits no Beauville structure.
    NoBeauville {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

fn build_error_code(e: &BuildError) -> u8 {
    match e {
        BuildError::DegreeOutOfRange(..)
        | BuildError::InfeasibleK { .. }
        | BuildError::ExceedsClassCount { .. }
        | BuildError::Unsupported(_) => 3,
        BuildError::IllegalParams(_) => 2,
        BuildError::Perm(_)
        | BuildError::PoolExhausted { .. }
        | BuildError::SearchExhausted(_)
        | BuildError::VerificationFailed(_) => 1,
    }
}

fn print_count_report(report: &CountReport) {
    println!(
        "d2(A{}) = {}  [phi2 = {}, |Aut A{}| = {}, method = {:?}]",
        report.n, report.d2, report.phi2, report.n, report.aut_order, report.method
    );
}

fn cmd_d2(n: usize, method: Method) -> u8 {
    let result = match method {
        Method::Brute => phi2_bruteforce(n, 2520),
        Method::Moebius => phi2_moebius(n),
    };
    match result {
        Ok(report) => {
            print_count_report(&report);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            build_error_code(&e)
        }
    }
}

fn effective_cap(flag: Option<usize>) -> usize {
    if let Some(cap) = flag {
        return cap;
    }
    if let Ok(value) = std::env::var("BVL_CAP") {
        if let Ok(cap) = value.parse::<usize>() {
            return cap;
        }
    }
    10_000
}

fn cmd_construct(n: usize, k: usize, out: Option<PathBuf>, seed: u64, cap: Option<usize>) -> u8 {
    let cap = effective_cap(cap);
    match build_beauville(n, k, cap, seed) {
        Ok(BuildOutcome::Structure(s)) => {
            let cert = Certificate::from_structure(&s, seed);
            let bytes = cert.to_bytes();
            let io_result = match &out {
                Some(path) => std::fs::write(path, &bytes),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(&bytes)
                }
            };
            if let Err(e) = io_result {
                eprintln!("error: cannot write certificate: {e}");
                return 2;
            }
            eprintln!(
                "constructed A_{n}^{k} structure of type {:?} / {:?} via {}",
                s.report.type1, s.report.type2, s.provenance
            );
            0
        }
        Ok(BuildOutcome::NoStructure { reason }) => {
            eprintln!("no structure: {reason}");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            build_error_code(&e)
        }
    }
}

fn cmd_verify(path: PathBuf) -> u8 {
    let bytes = match std::fs::read(&path) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    let cert = match Certificate::parse(&bytes) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match cert.reverify() {
        Ok(report) => {
            println!(
                "group: A_{}^{}  types {:?} / {:?}",
                cert.group.degree, cert.group.power, report.type1, report.type2
            );
            println!("condition 1 (products are the identity): ok");
            println!("condition 2 (both types hyperbolic): ok");
            for ev in &report.condition3.evidence {
                println!(
                    "condition 3 at p = {}: {} checks, {} collisions",
                    ev.p, ev.checks, ev.conjugate_hits
                );
            }
            println!("condition 3 (power conjugacy): ok");
            println!("generation of both sides: ok");
            println!("verified");
            0
        }
        Err(CertError::Malformed(msg)) => {
            eprintln!("error: malformed certificate: {msg}");
            2
        }
        Err(CertError::Failed(msg)) => {
            eprintln!("verification failed: {msg}");
            1
        }
    }
}

fn cmd_catalog(n: usize, verify: bool) -> u8 {
    let entries = match catalog_small(n) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return build_error_code(&e);
        }
    };
    let mut all_good = true;
    for e in &entries {
        let t = &e.triple;
        let diags: Vec<String> = e.diagnostics.iter().map(|d| d.name().to_string()).collect();
        println!(
            "{} degree={} x={} y={} z={} type={:?} provenance={} proof={} diagnostics={:?}",
            e.label,
            e.degree,
            t.x().cycle_string(),
            t.y().cycle_string(),
            t.z().cycle_string(),
            t.triple_type(),
            t.provenance(),
            e.generation_proof,
            diags
        );
        let failed = e.diagnostics.iter().any(|d| {
            matches!(
                d.name(),
                "generation-failed" | "type-mismatch" | "z-cycle-type-mismatch"
            )
        });
        if failed {
            all_good = false;
        }
    }
    println!("{} entries", entries.len());
    if verify && !all_good {
        return 1;
    }
    0
}

fn cmd_classreps(n: usize) -> u8 {
    match class_representatives(n, EquivalenceLevel::FullAut, None) {
        Ok(reps) => {
            for (i, rep) in reps.iter().enumerate() {
                println!(
                    "{:4}  type {:?}  x={} y={} z={}",
                    i + 1,
                    rep.triple_type,
                    rep.x.cycle_string(),
                    rep.y.cycle_string(),
                    rep.z.cycle_string()
                );
            }
            println!("{} classes", reps.len());
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            build_error_code(&e)
        }
    }
}

fn cmd_no_beauville(n: usize) -> u8 {
    if n != 5 {
        eprintln!("error: the exhaustive obstruction scan is defined for n = 5 only");
        return 3;
    }
    let reps = match class_representatives(5, EquivalenceLevel::FullAut, None) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return build_error_code(&e);
        }
    };
    let triples: Vec<GeneratingTriple> = reps
        .iter()
        .enumerate()
        .map(|(i, r)| {
            GeneratingTriple::from_xy(r.x.clone(), r.y.clone(), format!("classrep#{i}"))
                .expect("class representatives are even")
        })
        .collect();
    let mut checks = 0u64;
    let mut passing = 0u64;
    for t1 in &triples {
        let p1 = ProductTriple::new(5, vec![t1.clone()]).expect("degree 5");
        for t2 in &triples {
            let p2 = ProductTriple::new(5, vec![t2.clone()]).expect("degree 5");
            let report = condition3_exact(&p1, &p2).expect("equal degrees");
            checks += 1;
            if report.holds {
                passing += 1;
            }
        }
    }
    println!(
        "{} pair checks over {} class representatives, {} satisfying the power-conjugacy condition",
        checks,
        triples.len(),
        passing
    );
    if passing == 0 {
        println!("confirmed: A_5 admits no Beauville structure");
        0
    } else {
        println!("unexpected: some pair satisfied the condition");
        1
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::D2 { n, method } => cmd_d2(n, method),
        Command::Construct { n, k, out, seed, cap } => cmd_construct(n, k, out, seed, cap),
        Command::Verify { path } => cmd_verify(path),
        Command::Catalog { n, verify } => cmd_catalog(n, verify),
        Command::Classreps { n } => cmd_classreps(n),
        Command::NoBeauville { n } => cmd_no_beauville(n),
    };
    ExitCode::from(code)
}
