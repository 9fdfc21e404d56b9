//! Command-line front end: classification, corpus verification, spectrum
//! and poset rendering, solving, decomposition, and lifting.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.
//! Every error path prints a single diagnostic line of the form
//! `error[kind]: message` to standard error.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::{classify_report, Consensus, CriteriaMatrix, Verdict};
use crate::corpus::{builtin, CorpusSpec};
use crate::error::{Error, Result};
use crate::ideal::ideal_generate;
use crate::poly::PolySystem;
use crate::ring::{ring_from_descriptor_with, Caps, RingDescriptor, RingElement, RingHandle};
use crate::spectrum::primes;
use crate::topology::SpectralSpace;

#[derive(Parser)]
#[command(
    name = "ringlab",
    about = "Exact classification of computable commutative rings and finite spectral spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Classify a ring against every criteria matrix.
    Classify {
        /// Ring descriptor JSON file, or '-' for standard input.
        ring: PathBuf,
        #[arg(long, default_value_t = 4096)]
        cap_ring_size: u64,
        #[arg(long, default_value_t = 64)]
        cap_ideal_enum: u64,
    },
    /// Run the agreement suites over a ring corpus.
    Verify {
        /// 'builtin' or a corpus spec JSON file.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 4096)]
        cap_ring_size: u64,
        #[arg(long, default_value_t = 64)]
        cap_ideal_enum: u64,
        /// Flip one criterion (format `theorem:id`) to exercise failure
        /// reporting.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Render the prime spectrum of a ring.
    Spectrum {
        ring: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Normalize, dualize, or classify a finite poset.
    Poset {
        poset: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Reverse the order before rendering.
        #[arg(long)]
        dual: bool,
        /// Emit the space-level classification instead of the poset.
        #[arg(long)]
        classify: bool,
    },
    /// Solve a polynomial system through the local factors.
    Solve {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        system: PathBuf,
    },
    /// Write an element as an idempotent plus a unit.
    Decompose {
        #[arg(long)]
        ring: PathBuf,
        /// Element JSON, e.g. `5` or `{"num":1,"den":5}`.
        #[arg(long)]
        element: String,
    },
    /// Lift an idempotent modulo the ideal generated by the given elements.
    Lift {
        #[arg(long)]
        ring: PathBuf,
        /// JSON array of ideal generators.
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        element: String,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Io(e.to_string()))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn load_ring(path: &Path, caps: Caps) -> Result<RingHandle> {
    let text = read_input(path)?;
    let desc: RingDescriptor = parse_json(&text, "ring descriptor")?;
    ring_from_descriptor_with(&desc, caps)
}

pub struct VerifyRow {
    pub ring: String,
    pub theorem: String,
    pub agree: bool,
    pub detail: String,
}

fn apply_fault(matrix: &mut CriteriaMatrix, fault: Option<&str>) {
    if let Some(fault) = fault {
        if let Some((theorem, id)) = fault.split_once(':') {
            if matrix.theorem == theorem {
                for c in matrix.criteria.iter_mut() {
                    if c.id == id {
                        c.verdict = match c.verdict {
                            Verdict::True => Verdict::False,
                            Verdict::False => Verdict::True,
                            Verdict::NotApplicable => Verdict::NotApplicable,
                        };
                    }
                }
            }
        }
    }
}

/// Evaluates every matrix over the corpus and checks intra-matrix agreement
/// plus the implication lattice between the agreed verdicts.
pub fn run_verify(
    spec: &CorpusSpec,
    caps: Caps,
    inject_fault: Option<&str>,
) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for desc in spec.all_descriptors() {
        let ring = ring_from_descriptor_with(&desc, caps)?;
        let label = ring.label();
        if ring.is_zero_ring() {
            continue;
        }
        let mut verdicts: Vec<(String, Option<bool>)> = Vec::new();
        let matrices = [
            crate::classify::criteria_zero_dimensional(&ring)?,
            crate::classify::criteria_gelfand(&ring)?,
            crate::classify::criteria_clean(&ring)?,
            crate::classify::criteria_mp(&ring)?,
            crate::classify::criteria_reduced_mp(&ring)?,
            crate::classify::criteria_purified(&ring)?,
        ];
        for mut m in matrices {
            apply_fault(&mut m, inject_fault);
            let (agree, detail, verdict) = match m.consensus() {
                Consensus::Agreed(v) => (true, format!("all {v}"), Some(v)),
                Consensus::Empty => (true, "no applicable criteria".into(), None),
                Consensus::Disagreement(vs) => {
                    let detail = vs
                        .iter()
                        .map(|(id, v)| format!("{id}={v}"))
                        .collect::<Vec<_>>()
                        .join(",");
                    (false, detail, None)
                }
            };
            rows.push(VerifyRow {
                ring: label.clone(),
                theorem: m.theorem.clone(),
                agree,
                detail,
            });
            verdicts.push((m.theorem, verdict));
        }
        let get = |name: &str| {
            verdicts
                .iter()
                .find(|(t, _)| t == name)
                .and_then(|(_, v)| *v)
                .unwrap_or(false)
        };
        let reduced = crate::ideal::is_reduced(&ring);
        let mut violations = Vec::new();
        if get("clean") && !get("gelfand") {
            violations.push("clean=>gelfand");
        }
        if get("purified") && !get("mp") {
            violations.push("purified=>mp");
        }
        if get("zero_dimensional")
            && !(get("gelfand") && get("mp") && get("clean") && get("purified"))
        {
            violations.push("zero_dimensional=>all");
        }
        if reduced && get("purified") && !get("reduced_mp") {
            violations.push("reduced purified=>pf");
        }
        rows.push(VerifyRow {
            ring: label.clone(),
            theorem: "implications".into(),
            agree: violations.is_empty(),
            detail: if violations.is_empty() {
                "lattice holds".into()
            } else {
                violations.join(",")
            },
        });
    }
    rows.sort_by(|a, b| a.ring.cmp(&b.ring).then_with(|| a.theorem.cmp(&b.theorem)));
    Ok(rows)
}

fn cmd_classify(path: &Path, caps: Caps) -> Result<i32> {
    let ring = load_ring(path, caps)?;
    let report = classify_report(&ring)?;
    println!("{}", serde_json::to_string(&report).expect("serializable report"));
    Ok(if report.disagreements.is_empty() { 0 } else { 1 })
}

fn cmd_verify(
    corpus: &str,
    seed: Option<u64>,
    caps: Caps,
    inject_fault: Option<&str>,
) -> Result<i32> {
    let mut spec = if corpus == "builtin" {
        builtin()
    } else {
        let text = read_input(Path::new(corpus))?;
        parse_json::<CorpusSpec>(&text, "corpus spec")?
    };
    if let Some(seed) = seed {
        spec.seed = seed;
    }
    let rows = run_verify(&spec, caps, inject_fault)?;
    let mut failures = 0usize;
    for row in &rows {
        if !row.agree {
            failures += 1;
        }
        println!(
            "{}\t{}\t{}\t{}",
            row.ring,
            row.theorem,
            if row.agree { "agree" } else { "DISAGREE" },
            row.detail
        );
    }
    println!(
        "# rings with seed {}: {} rows, {} disagreements",
        spec.seed,
        rows.len(),
        failures
    );
    Ok(if failures == 0 { 0 } else { 1 })
}

fn cmd_spectrum(path: &Path, format: Format, caps: Caps) -> Result<i32> {
    let ring = load_ring(path, caps)?;
    let spec = primes(&ring)?;
    match format {
        Format::Json => {
            let json = crate::report::spectrum_json(&ring, &spec);
            println!("{}", serde_json::to_string(&json).expect("serializable spectrum"));
        }
        Format::Dot => print!("{}", crate::report::spectrum_dot(&spec)),
    }
    Ok(0)
}

fn cmd_poset(path: &Path, format: Format, dual: bool, classify: bool) -> Result<i32> {
    let text = read_input(path)?;
    let json: crate::topology::PosetJson = parse_json(&text, "poset")?;
    let mut space = SpectralSpace::from_json(&json)?;
    if dual {
        space = space.hochster_dual();
    }
    if classify {
        let c = space.classify();
        let render = |group: &[(String, bool)]| -> serde_json::Value {
            serde_json::Value::Array(
                group
                    .iter()
                    .map(|(id, v)| serde_json::json!({"id": id, "verdict": v}))
                    .collect(),
            )
        };
        let out = serde_json::json!({
            "gelfand": render(&c.gelfand),
            "mp": render(&c.mp),
            "zero_dimensional": render(&c.zero_dim),
        });
        println!("{out}");
        return Ok(0);
    }
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&space.to_json()).expect("serializable poset")
        ),
        Format::Dot => print!("{}", space.to_dot()),
    }
    Ok(0)
}

fn cmd_solve(ring_path: &Path, system_path: &Path, caps: Caps) -> Result<i32> {
    let ring = load_ring(ring_path, caps)?;
    let text = read_input(system_path)?;
    let sys: PolySystem = parse_json(&text, "polynomial system")?;
    let sys = PolySystem::new(&ring, sys.vars, sys.polys)?;
    let out = crate::report::solve_json(&ring, &sys)?;
    println!("{}", serde_json::to_string(&out).expect("serializable solution"));
    Ok(0)
}

fn cmd_decompose(ring_path: &Path, element: &str, caps: Caps) -> Result<i32> {
    let ring = load_ring(ring_path, caps)?;
    let elem: RingElement = parse_json(element, "element")?;
    let d = crate::construct::clean_decompose(&ring, &elem)?;
    println!(
        "{}",
        serde_json::json!({"idempotent": d.idempotent, "unit": d.unit})
    );
    Ok(0)
}

fn cmd_lift(ring_path: &Path, ideal: &str, element: &str, caps: Caps) -> Result<i32> {
    let ring = load_ring(ring_path, caps)?;
    let gens: Vec<RingElement> = parse_json(ideal, "ideal generators")?;
    let elem: RingElement = parse_json(element, "element")?;
    let ideal = ideal_generate(&ring, &gens)?;
    let out = crate::construct::lift_idempotent(&ring, &ideal, &elem)?;
    println!(
        "{}",
        serde_json::json!({
            "idempotent": out.idempotent,
            "newton_steps": out.newton_steps,
        })
    );
    Ok(0)
}

/// Dispatches a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.cmd {
        Cmd::Classify {
            ring,
            cap_ring_size,
            cap_ideal_enum,
        } => cmd_classify(
            &ring,
            Caps {
                max_ring_size: cap_ring_size,
                ideal_enum_cap: cap_ideal_enum,
            },
        ),
        Cmd::Verify {
            corpus,
            seed,
            cap_ring_size,
            cap_ideal_enum,
            inject_fault,
        } => cmd_verify(
            &corpus,
            seed,
            Caps {
                max_ring_size: cap_ring_size,
                ideal_enum_cap: cap_ideal_enum,
            },
            inject_fault.as_deref(),
        ),
        Cmd::Spectrum { ring, format } => cmd_spectrum(&ring, format, Caps::default()),
        Cmd::Poset {
            poset,
            format,
            dual,
            classify,
        } => cmd_poset(&poset, format, dual, classify),
        Cmd::Solve { ring, system } => cmd_solve(&ring, &system, Caps::default()),
        Cmd::Decompose { ring, element } => cmd_decompose(&ring, &element, Caps::default()),
        Cmd::Lift {
            ring,
            ideal,
            element,
        } => cmd_lift(&ring, &ideal, &element, Caps::default()),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            2
        }
    }
}
