//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code with everything meant for stdout and stderr, so
//! the binary and the tests share one code path.
//!
//! Exit codes: 0 success, 1 a negative answer (or a failed verification),
//! 2 usage or parse error, 3 resource limit.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gf2_unitary::classification::{classify, orbit, theorem_table};
use gf2_unitary::divisor_sums::{sigma_of, sigma_star_of};
use gf2_unitary::factorization::{factor, factor_with_seed};
use gf2_unitary::lemma_suite::{run_all, Bounds};
use gf2_unitary::search::{
    brute_force_search_with, structured_search_with, BruteOptions, SearchReport, StructuredOptions,
    DEFAULT_ODD_BOUND,
};
use gf2_unitary::{Error, Poly};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "gf2u", version, about = "Unitary perfect polynomials over GF(2)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn parse_poly(s: &str) -> Result<Poly, String> {
    s.parse::<Poly>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct PolyArg {
    /// Polynomial such as "x^3+x+1", "0xb" or "0b1011".
    #[arg(value_parser = parse_poly)]
    poly: Poly,
}

#[derive(Debug, Args)]
struct Parallel {
    /// Worker threads; 0 uses every core. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Report elapsed_ms as 0 so identical runs print identical bytes.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor into irreducibles.
    Factor {
        #[command(flatten)]
        poly: PolyArg,
        /// Seed for the randomized splitting step.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sum of all divisors.
    Sigma(PolyArg),
    /// Sum of unitary divisors.
    SigmaStar(PolyArg),
    /// Whether the polynomial equals the sum of its unitary divisors.
    Check(PolyArg),
    /// Find the table entry whose orbit contains the polynomial.
    Classify(PolyArg),
    /// Exhaustive search up to a degree bound.
    Search {
        #[arg(long, default_value_t = 14)]
        max_degree: usize,
        /// Scan every polynomial, not only multiples of x(x+1).
        #[arg(long)]
        no_prune: bool,
        #[command(flatten)]
        parallel: Parallel,
    },
    /// Search over exponent shapes with up to four prime factors.
    StructuredSearch {
        #[arg(long, default_value_t = 13)]
        max_prime_degree: usize,
        #[arg(long, default_value_t = 5)]
        max_exp_log: u32,
        /// Largest odd part of the exponents of x and x+1.
        #[arg(long, default_value_t = DEFAULT_ODD_BOUND)]
        odd_bound: u64,
        #[command(flatten)]
        parallel: Parallel,
    },
    /// Check every table entry, its conjugate and its square orbit.
    VerifyTheorems {
        #[arg(long, default_value_t = 256)]
        max_degree: usize,
    },
    /// Run the bounded lemma checks.
    Lemmas {
        /// key=value file overriding the default bounds.
        #[arg(long)]
        bounds: Option<std::path::PathBuf>,
    },
    /// Print the classification table.
    Table,
    /// Time packed against naive multiplication.
    Bench {
        #[arg(long, default_value_t = 1023)]
        degree: usize,
        #[arg(long, default_value_t = 100)]
        reps: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Out {
    fn ok(stdout: String) -> Self {
        Out { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn answer(yes: bool, stdout: String) -> Self {
        Out { code: if yes { EXIT_OK } else { EXIT_NO }, stdout, stderr: String::new() }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { (EXIT_USAGE, String::new(), text) } else { (EXIT_OK, text, String::new()) };
        }
    };
    match dispatch(&cli) {
        Ok(out) => (out.code, out.stdout, out.stderr),
        Err(e) => (error_code(&e), String::new(), format!("error: {e}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<Out, Error> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Factor { poly, seed } => {
            let a = &poly.poly;
            let f = match seed {
                Some(s) => factor_with_seed(a, *s)?,
                None => factor(a)?,
            };
            Ok(Out::ok(if json {
                let factors: Vec<Value> =
                    f.iter().map(|(p, e)| json!({ "prime": p.to_string(), "multiplicity": e })).collect();
                json_text(&json!({ "poly": a.to_string(), "factors": factors, "omega": f.omega() }))
            } else {
                format!("{f}\n")
            }))
        }
        Command::Sigma(p) | Command::SigmaStar(p) => {
            let a = &p.poly;
            let star = matches!(cli.command, Command::SigmaStar(_));
            let key = if star { "sigma_star" } else { "sigma" };
            if a.is_constant() {
                return Err(Error::InvalidArgument(format!("{key} needs a nonconstant polynomial")));
            }
            let f = factor(a)?;
            let s = if star { sigma_star_of(&f) } else { sigma_of(&f) };
            Ok(Out::ok(if json {
                json_text(&json!({ "poly": a.to_string(), key: s.to_string() }))
            } else {
                format!("{s}\n")
            }))
        }
        Command::Check(p) => {
            let a = &p.poly;
            if a.is_constant() {
                return Err(Error::InvalidArgument("check needs a nonconstant polynomial".into()));
            }
            let s = sigma_star_of(&factor(a)?);
            let yes = s == *a;
            Ok(Out::answer(
                yes,
                if json {
                    json_text(&json!({ "poly": a.to_string(), "unitary_perfect": yes, "sigma_star": s.to_string() }))
                } else {
                    format!("unitary-perfect: {yes}\n")
                },
            ))
        }
        Command::Classify(p) => {
            let a = &p.poly;
            let c = classify(a);
            let text = match (&c, json) {
                (_, true) => json_text(&json!({
                    "poly": a.to_string(),
                    "label": c.as_ref().map(|c| c.label),
                    "n": c.as_ref().map(|c| c.n),
                    "conjugated": c.as_ref().map(|c| c.conjugated),
                })),
                (Some(c), false) => format!("label: {}\nn: {}\nconjugated: {}\n", c.label, c.n, c.conjugated),
                (None, false) => "unclassified\n".to_string(),
            };
            Ok(Out::answer(c.is_some(), text))
        }
        Command::Search { max_degree, no_prune, parallel } => {
            let opts = BruteOptions { jobs: parallel.jobs, ..Default::default() };
            let r = brute_force_search_with(*max_degree, !no_prune, &opts)?;
            Ok(report_out(&r, json, !parallel.no_timing))
        }
        Command::StructuredSearch { max_prime_degree, max_exp_log, odd_bound, parallel } => {
            let opts = StructuredOptions { odd_bound: *odd_bound, jobs: parallel.jobs };
            let r = structured_search_with(*max_prime_degree, *max_exp_log, &opts)?;
            Ok(report_out(&r, json, !parallel.no_timing))
        }
        Command::VerifyTheorems { max_degree } => verify_theorems(*max_degree, json),
        Command::Lemmas { bounds } => {
            let b = match bounds {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?
                    .parse()?,
                None => Bounds::default(),
            };
            let results = run_all(&b)?;
            let all = results.iter().all(|r| r.passed());
            let mut s = String::new();
            for r in &results {
                if json {
                    s.push_str(&r.to_json_line());
                    s.push('\n');
                } else {
                    let verdict = if r.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{verdict} {} [{}] checked={}", r.lemma_id, r.range_description, r.checked_count);
                    if let Some(c) = &r.counterexample {
                        let _ = writeln!(s, "  counterexample {} {}: {}", c.check, Value::Object(c.params.clone()), c.detail);
                    }
                }
            }
            Ok(Out::answer(all, s))
        }
        Command::Table => {
            let rows: Vec<_> = theorem_table().iter().map(|e| e.row()).collect();
            Ok(Out::ok(if json {
                json_text(&serde_json::to_value(&rows).expect("rows serialize"))
            } else {
                let mut s = String::new();
                for r in &rows {
                    let _ = writeln!(
                        s,
                        "{:<12} deg={:<3} omega={} self_conjugate={:<5} {} {}",
                        r.label, r.degree, r.omega, r.self_conjugate, r.hex, r.factored
                    );
                }
                s
            }))
        }
        Command::Bench { degree, reps, seed } => Ok(bench(*degree, *reps, *seed, json)),
    }
}

fn report_out(r: &SearchReport, json: bool, timing: bool) -> Out {
    let unclassified: Vec<_> = r.unclassified().collect();
    let mut stderr = String::new();
    for h in &unclassified {
        let _ = writeln!(stderr, "unclassified hit with {} prime factors: {}", h.omega, h.poly);
    }
    let stdout = if json {
        json_text(&r.to_json(timing))
    } else {
        let mut s = String::new();
        let ms = if timing { r.elapsed.as_millis() } else { 0 };
        let _ = writeln!(
            s,
            "max_degree: {} hits: {} candidates_tested: {} elapsed_ms: {ms}",
            r.max_degree,
            r.hits.len(),
            r.candidates_tested
        );
        for h in &r.hits {
            let label = match (h.label, h.omega) {
                (Some(l), _) => l,
                (None, w) if w >= 5 => "outside-scope",
                (None, _) => "UNCLASSIFIED",
            };
            let _ = writeln!(s, "{}\t{}\t{}\t{}", h.degree(), h.omega, label, h.poly);
        }
        s
    };
    Out { code: if unclassified.is_empty() { EXIT_OK } else { EXIT_NO }, stdout, stderr }
}

fn verify_theorems(max_degree: usize, json: bool) -> Result<Out, Error> {
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut all = true;
    for e in theorem_table() {
        let up = |a: &Poly| -> Result<bool, Error> { Ok(sigma_star_of(&factor(a)?) == *a) };
        let base_ok = up(&e.base)?;
        let conj_ok = up(&e.base.conjugate())?;
        let members = orbit(e, max_degree);
        let mut orbit_ok = true;
        for m in &members {
            let back = classify(m).is_some_and(|c| c.label == e.label);
            orbit_ok &= back && up(m)?;
        }
        let pass = base_ok && conj_ok && orbit_ok;
        all &= pass;
        rows.push(json!({
            "label": e.label,
            "degree": e.degree(),
            "omega": e.omega,
            "self_conjugate": e.self_conjugate,
            "new": e.newly_found,
            "base": base_ok,
            "conjugate": conj_ok,
            "orbit_size": members.len(),
            "orbit": orbit_ok,
            "pass": pass,
        }));
    }
    let passed = rows.iter().filter(|r| r["pass"] == true).count();
    let stdout = if json {
        json_text(&json!({ "max_degree": max_degree, "entries": rows, "passed": passed, "all_pass": all }))
    } else {
        let mut s = String::new();
        for r in &rows {
            let _ = writeln!(
                s,
                "{:<12} deg={:<3} omega={} new={:<5} base={:<5} conjugate={:<5} orbit={}/{:<5} {}",
                r["label"].as_str().unwrap_or(""),
                r["degree"],
                r["omega"],
                r["new"],
                r["base"],
                r["conjugate"],
                r["orbit_size"],
                r["orbit"],
                if r["pass"] == true { "PASS" } else { "FAIL" }
            );
        }
        let _ = writeln!(s, "{passed}/{} entries pass (orbits to degree {max_degree}, {:?})", rows.len(), start.elapsed());
        s
    };
    Ok(Out::answer(all, stdout))
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    let mut words: Vec<u64> = (0..degree / 64 + 1).map(|_| rng.next_u64()).collect();
    let top = degree % 64;
    let last = words.len() - 1;
    words[last] &= if top == 63 { u64::MAX } else { (1u64 << (top + 1)) - 1 };
    words[last] |= 1 << top;
    Poly::from_words(words)
}

fn bench(degree: usize, reps: u32, seed: u64, json: bool) -> Out {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reps = reps.max(1);
    let pairs: Vec<(Poly, Poly)> = (0..reps).map(|_| (random_poly(&mut rng, degree), random_poly(&mut rng, degree))).collect();

    let t = Instant::now();
    let packed: Vec<Poly> = pairs.iter().map(|(a, b)| a * b).collect();
    let packed_time = t.elapsed();
    let t = Instant::now();
    let naive: Vec<Poly> = pairs.iter().map(|(a, b)| a.mul_naive(b)).collect();
    let naive_time = t.elapsed();

    let equal = packed == naive;
    let per = |d: std::time::Duration| d.as_nanos() as f64 / reps as f64;
    let speedup = if packed_time.as_nanos() == 0 { f64::INFINITY } else { per(naive_time) / per(packed_time) };
    let stdout = if json {
        json_text(&json!({
            "degree": degree,
            "reps": reps,
            "equal": equal,
            "packed_ns_per_mul": per(packed_time),
            "naive_ns_per_mul": per(naive_time),
            "speedup": if speedup.is_finite() { json!(speedup) } else { Value::Null },
        }))
    } else {
        format!(
            "degree {degree}, {reps} reps: equal={equal} packed={:.0} ns/mul naive={:.0} ns/mul speedup={speedup:.1}x\n",
            per(packed_time),
            per(naive_time)
        )
    };
    Out::answer(equal, stdout)
}
