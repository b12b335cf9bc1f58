use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cppo::atlas::spec::{load_corpus, parse_corpus};
use cppo::atlas::{GroupSpec, NamedGroup, CATALOG};
use cppo::harness::{
    classify, lemma_ids, render_results, run_lemma_suite, run_theorem_suite, ClassificationReport, Field,
    LemmaSuiteReport, TheoremSuiteReport, TheoremVerdict,
};
use cppo::towers::{find_max_tower, validate_tower, Verdict};
use cppo::{Error, FiniteGroup};

#[derive(Parser)]
#[command(name = "cppo", version, about = "Commutator prime-power-order checks on permutation groups")]
struct Cli {
    /// Enumeration cap (group elements).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Treat skipped fields as failures.
    #[arg(long, global = true)]
    strict: bool,
    /// Also write the structured report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a group given as a spec file or `atlas:<id>`.
    Classify { spec: String },
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    Atlas {
        #[command(subcommand)]
        action: AtlasAction,
    },
    Tower {
        #[command(subcommand)]
        action: TowerAction,
    },
    /// List the commutator set.
    Commutators {
        spec: String,
        /// Only counts by element order.
        #[arg(long)]
        orders_only: bool,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Theorem checks on every corpus group.
    Theorems {
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Lemma checks on seeded instances.
    Lemmas {
        /// Comma-separated ids, or `all`.
        #[arg(long, default_value = "all")]
        ids: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum AtlasAction {
    List,
    Build { id: String },
}

#[derive(Subcommand)]
enum TowerAction {
    /// A tower of maximal height.
    Find { spec: String },
}

/// Violations found; distinct from operational errors.
struct Violations(bool);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Violations(false)) => ExitCode::SUCCESS,
        Ok(Violations(true)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_groups(spec: &str, cap: Option<usize>) -> Result<Vec<NamedGroup>, Error> {
    let specs = if let Some(id) = spec.strip_prefix("atlas:") {
        vec![GroupSpec::atlas(id)?]
    } else {
        let text = std::fs::read_to_string(spec)?;
        if text.trim_start().starts_with('[') {
            parse_corpus(&text)?
        } else {
            vec![GroupSpec::parse(&text)?]
        }
    };
    specs
        .iter()
        .map(|s| {
            let mut g = s.build()?;
            if let Some(c) = cap {
                g.group = g.group.with_cap(c);
            }
            Ok(g)
        })
        .collect()
}

fn emit<T: serde::Serialize>(cli: &Cli, reports: &[T], text: impl FnOnce() -> String) -> Result<(), Error> {
    let doc = render_results(reports)?;
    match cli.format {
        Format::Structured => print!("{doc}"),
        Format::Text => print!("{}", text()),
    }
    if let Some(path) = &cli.out {
        write_out(path, &doc)?;
    }
    Ok(())
}

fn write_out(path: &Path, doc: &str) -> Result<(), Error> {
    std::fs::write(path, doc)?;
    Ok(())
}

fn run(cli: &Cli) -> Result<Violations, Error> {
    match &cli.command {
        Command::Classify { spec } => {
            let reports: Vec<ClassificationReport> =
                load_groups(spec, cli.cap)?.iter().map(|g| classify(&g.group, &g.name)).collect();
            emit(cli, &reports, || reports.iter().map(report_text).collect::<Vec<_>>().join("\n"))?;
            let bad = reports
                .iter()
                .any(|r| r.theorem1.is_violation(cli.strict) || r.theorem2.is_violation(cli.strict));
            Ok(Violations(bad))
        }
        Command::Verify { suite: Suite::Theorems { corpus } } => {
            let corpus = load_corpus(corpus)?;
            let suite = run_theorem_suite(&corpus, cli.cap)?;
            let violations = suite.violations(cli.strict);
            emit(cli, std::slice::from_ref(&suite), || theorem_suite_text(&suite, &violations))?;
            Ok(Violations(!violations.is_empty()))
        }
        Command::Verify { suite: Suite::Lemmas { ids, seed } } => {
            let ids: Vec<&str> = if ids == "all" {
                Vec::new()
            } else {
                ids.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
            };
            let report = run_lemma_suite(&ids, *seed)?;
            emit(cli, std::slice::from_ref(&report), || lemma_suite_text(&report))?;
            Ok(Violations(report.failed > 0 || (cli.strict && report.undecided > 0)))
        }
        Command::Atlas { action: AtlasAction::List } => {
            for e in CATALOG {
                println!("{:<28} {}", e.signature, e.description);
            }
            println!("\nlemma ids: {}", lemma_ids().join(", "));
            Ok(Violations(false))
        }
        Command::Atlas { action: AtlasAction::Build { id } } => {
            let g = GroupSpec::atlas(id)?.build()?;
            println!("{}: order {}, degree {}", g.name, g.group.order(), g.group.degree());
            for x in g.group.generators() {
                println!("  {x}");
            }
            Ok(Violations(false))
        }
        Command::Tower { action: TowerAction::Find { spec } } => {
            let mut records = Vec::new();
            let mut text = String::new();
            let mut bad = false;
            for g in load_groups(spec, cli.cap)? {
                let (h, t) = find_max_tower(&g.group)?;
                let v = validate_tower(&t);
                bad |= !v.valid;
                text.push_str(&format!("{}: height {h}, valid {}\n", g.name, v.valid));
                for (i, s) in t.stages().iter().enumerate() {
                    let gens: Vec<String> = s.group.reduced_generators().iter().map(|x| x.to_string()).collect();
                    text.push_str(&format!("  P{} (p = {}, order {}): {}\n", i + 1, s.prime, s.group.order(), gens.join(", ")));
                }
                records.push(t.record());
            }
            emit(cli, &records, || text)?;
            Ok(Violations(bad))
        }
        Command::Commutators { spec, orders_only } => {
            let mut text = String::new();
            let mut docs = Vec::new();
            for g in load_groups(spec, cli.cap)? {
                let set = g.group.commutator_set()?;
                let doc = commutator_doc(&g.name, &g.group, &set, *orders_only);
                text.push_str(&format!("{}: {} commutators in a group of order {}\n", g.name, set.len(), g.group.order()));
                let mut counts = std::collections::BTreeMap::new();
                for c in &set {
                    *counts.entry(c.order()).or_insert(0usize) += 1;
                }
                for (o, n) in &counts {
                    text.push_str(&format!("  order {o}: {n}\n"));
                }
                if !orders_only {
                    for c in &set {
                        text.push_str(&format!("  {c}\n"));
                    }
                }
                docs.push(doc);
            }
            emit(cli, &docs, || text)?;
            Ok(Violations(false))
        }
    }
}

fn commutator_doc(name: &str, g: &FiniteGroup, set: &[cppo::Permutation], orders_only: bool) -> serde_json::Value {
    let mut counts = std::collections::BTreeMap::new();
    for c in set {
        *counts.entry(c.order().to_string()).or_insert(0usize) += 1;
    }
    let mut doc = serde_json::json!({
        "name": name,
        "order": g.order() as u64,
        "commutators": set.len(),
        "orders": counts,
    });
    if !orders_only {
        doc["elements"] = set.iter().map(|c| c.to_string()).collect();
    }
    doc
}

fn field<T: Display>(f: &Field<T>) -> String {
    match f {
        Field::Value(v) => v.to_string(),
        Field::Skipped(s) => s.clone(),
        Field::NotApplicable => "n/a".to_string(),
    }
}

fn verdict(v: &TheoremVerdict) -> String {
    let status = serde_json::to_value(v.status).ok().and_then(|s| s.as_str().map(String::from)).unwrap_or_default();
    if v.detail.is_empty() {
        status
    } else {
        format!("{status} ({})", v.detail)
    }
}

fn list(v: &[u64]) -> String {
    let s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", s.join(", "))
}

fn report_text(r: &ClassificationReport) -> String {
    let mut s = format!("{}: order {}, degree {}, primes {}\n", r.name, r.order, r.degree, list(&r.primes));
    s.push_str(&format!("  EPPO: {}", field(&r.is_eppo)));
    if let Some(w) = &r.eppo_witness {
        s.push_str(&format!(" (element {} of order {})", w.element, w.order));
    }
    s.push_str(&format!("\n  CPPO: {}", field(&r.is_cppo)));
    if let Some(w) = &r.cppo_witness {
        s.push_str(&format!(" ([{}, {}] = {} of order {})", w.x, w.y, w.commutator, w.order));
    }
    s.push_str(&format!("\n  soluble: {}, perfect: {}\n", r.is_soluble, r.is_perfect));
    s.push_str(&format!("  |G'| = {}, primes {}\n", r.derived_order, list(&r.derived_primes)));
    s.push_str(&format!("  |R(G)| = {}\n", field(&r.soluble_radical_order)));
    if r.is_soluble {
        s.push_str(&format!("  Fitting height: {}\n", field(&r.fitting_height)));
        if let Field::Value(t) = &r.tower {
            for (i, st) in t.stages.iter().enumerate() {
                s.push_str(&format!("  P{} (p = {}): {}\n", i + 1, st.prime, st.generators.join(", ")));
            }
        }
    } else {
        s.push_str(&format!("  G'' = G': {}\n", field(&r.second_derived_is_derived)));
        s.push_str(&format!(
            "  |R(G')| = {} (2-group: {}), |[G',R(G)]| = {}\n",
            field(&r.derived_radical_order),
            field(&r.derived_radical_is_2group),
            field(&r.derived_radical_commutator_order)
        ));
        let q = match &r.simple_quotient {
            Field::Value(Some(id)) => id.to_string(),
            Field::Value(None) => "not simple".to_string(),
            Field::Skipped(x) => x.clone(),
            Field::NotApplicable => "n/a".to_string(),
        };
        s.push_str(&format!("  G'/R(G'): {q}\n"));
    }
    if !matches!(r.derived_is_eppo, Field::NotApplicable) {
        s.push_str(&format!("  G' EPPO: {}\n", field(&r.derived_is_eppo)));
    }
    s.push_str(&format!("  theorem 1: {}\n  theorem 2: {}\n", verdict(&r.theorem1), verdict(&r.theorem2)));
    s
}

fn theorem_suite_text(suite: &TheoremSuiteReport, violations: &[String]) -> String {
    let mut s = String::new();
    for r in &suite.reports {
        s.push_str(&format!("{:<36} theorem 1: {:<40} theorem 2: {}\n", r.name, verdict(&r.theorem1), verdict(&r.theorem2)));
    }
    let c = |v: &cppo::harness::VerdictCounts| {
        format!("{} pass, {} fail, {} n/a, {} skipped", v.pass, v.fail, v.not_applicable, v.skipped)
    };
    s.push_str(&format!("\ntheorem 1: {}\ntheorem 2: {}\n", c(&suite.theorem1), c(&suite.theorem2)));
    for v in violations {
        s.push_str(&format!("violation: {v}\n"));
    }
    s
}

fn lemma_suite_text(r: &LemmaSuiteReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let tag = match c.outcome {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Undecided => "undecided",
        };
        s.push_str(&format!("{tag:<9} {:<20} {} | {}\n", c.lemma, c.instance, c.witness));
    }
    s.push_str(&format!(
        "\nseed {}: {} checks, {} pass, {} fail, {} undecided\n",
        r.seed,
        r.checks.len(),
        r.passed,
        r.failed,
        r.undecided
    ));
    s
}
