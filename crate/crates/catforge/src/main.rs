use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use catforge::error::{CliError, ExitStatus};
use catforge::input::{parse_group, parse_monoid, read_bimodule, read_category};
use catforge::json::{
    count_report_csv, csv_table, rows_inline, to_json, BimoduleJson, CategoryJson, CountReportJson, MonoidJson,
};
use catforge::{parallel, reproduce};
use catforge_core::bimodule::Normalization;
use catforge_core::category::LemmaReport;
use catforge_core::engine::{construct_all, sort_categories, CountOptions};
use catforge_core::{
    check_idempotent_lemmas, check_orbit_laws, compute_imax, detect_grouplike, submonoid_embedding_check, validate_bimodule,
    validate_category, HomSet, TwoObjectCategory, DEFAULT_BUDGET,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "catforge", version, about = "Grouplike monoids, bimodules and two-object categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Bimodule normalization.
    #[arg(long, global = true, value_enum, default_value_t = Normalize::Orbit)]
    normalize: Normalize,
    /// Node expansion limit for every search.
    #[arg(long, global = true, env = "CATFORGE_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Also run the completion search and compare.
    #[arg(long, global = true)]
    cross_validate: bool,
    /// Also count isomorphism classes of categories.
    #[arg(long, global = true)]
    up_to_iso: bool,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Monoids of order N up to isomorphism, with grouplike structure.
    EnumerateMonoids { n: usize },
    /// (A, B)-bimodules on L points. A and B are monoid specs.
    EnumerateBimodules { a: String, b: String, l: usize },
    /// Categories between G^{*K1} and G^{*K2} with cross hom-sets of sizes CL, CR.
    Count { group: String, k1: usize, k2: usize, cl: usize, cr: usize },
    /// Closed-form categories on a bimodule pair.
    Construct {
        l: PathBuf,
        r: PathBuf,
        /// Only this i_max.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Every associative completion of a bimodule pair.
    Search { l: PathBuf, r: PathBuf },
    /// Check a category file against the axioms and structural laws.
    Verify { category: PathBuf },
    /// Recompute the reference counts and compare.
    Reproduce,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Normalize {
    /// Labelled action tables.
    Labeled,
    /// Up to carrier relabelling.
    None,
    /// Free actions with the pinned orbit, up to relabelling.
    Orbit,
}

impl From<Normalize> for Normalization {
    fn from(n: Normalize) -> Self {
        match n {
            Normalize::Labeled => Normalization::Labeled,
            Normalize::None => Normalization::UpToRelabeling,
            Normalize::Orbit => Normalization::FixOrbitRepresentative,
        }
    }
}

/// Rendered output plus the status it implies.
struct Outcome {
    text: String,
    status: ExitStatus,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, status: ExitStatus::Ok }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { ExitStatus::InputError.code() } else { 0 });
        }
    };
    let workers = cli.workers.map_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()), |w| w as usize);
    let result = parallel::with_workers(workers, || run(&cli)).and_then(|r| r);
    match result {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(e.status().code());
            }
            ExitCode::from(out.status.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status().code())
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::EnumerateMonoids { n } => enumerate_monoids(cli, *n),
        Command::EnumerateBimodules { a, b, l } => enumerate_bimodules(cli, a, b, *l),
        Command::Count { group, k1, k2, cl, cr } => count(cli, group, *k1, *k2, *cl, *cr),
        Command::Construct { l, r, level } => {
            let (l, r) = (read_bimodule(l)?, read_bimodule(r)?);
            let mut cats: Vec<_> = construct_all(&l, &r)?.into_iter().filter(|(i, _)| level.map_or(true, |v| v == *i)).map(|(_, c)| c).collect();
            sort_categories(&mut cats);
            categories(cli, &cats)
        }
        Command::Search { l, r } => {
            let (l, r) = (read_bimodule(l)?, read_bimodule(r)?);
            categories(cli, &parallel::search_completions(&l, &r, cli.budget)?)
        }
        Command::Verify { category } => verify(cli, &read_category(category)?),
        Command::Reproduce => {
            let rows = reproduce::run(cli.normalize.into(), cli.budget)?;
            let status = if rows.iter().all(|r| r.matches) { ExitStatus::Ok } else { ExitStatus::Mismatch };
            let text = match cli.format {
                Format::Text => reproduce::render_text(&rows),
                Format::Json => to_json(&rows),
                Format::Csv => csv_table(
                    &["criterion", "what", "expected", "actual", "matches"],
                    &rows.iter().map(|r| vec![r.id.clone(), r.what.trim().to_string(), r.expected.clone(), r.actual.clone(), r.matches.to_string()]).collect::<Vec<_>>(),
                )?,
            };
            Ok(Outcome { text, status })
        }
    }
}

fn enumerate_monoids(cli: &Cli, n: usize) -> Result<Outcome, CliError> {
    let ms = parallel::enumerate_monoids(n, cli.budget)?;
    let entries: Vec<MonoidJson> = ms.iter().map(MonoidJson::annotated).collect();
    let text = match cli.format {
        Format::Json => to_json(&entries),
        Format::Csv => {
            let rows: Vec<Vec<String>> = ms
                .iter()
                .zip(&entries)
                .enumerate()
                .map(|(i, (m, e))| {
                    let s = detect_grouplike(m);
                    vec![
                        i.to_string(),
                        e.n.to_string(),
                        e.identity.to_string(),
                        rows_inline(&e.table),
                        s.is_some().to_string(),
                        s.as_ref().map_or(String::new(), |s| s.group_order().to_string()),
                        s.as_ref().map_or(String::new(), |s| s.k().to_string()),
                    ]
                })
                .collect();
            csv_table(&["index", "n", "identity", "table", "grouplike", "group_order", "k"], &rows)?
        }
        Format::Text => {
            let mut out = format!("{} monoids of order {n}\n", ms.len());
            for (i, (m, e)) in ms.iter().zip(&entries).enumerate() {
                let tag = match detect_grouplike(m) {
                    Some(s) => format!("grouplike |G|={} k={} group={:?} chain={:?}", s.group_order(), s.k(), s.group(), s.chain()),
                    None => "not grouplike".into(),
                };
                out.push_str(&format!("#{i}  {}  {tag}\n", rows_inline(&e.table)));
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn enumerate_bimodules(cli: &Cli, a: &str, b: &str, l: usize) -> Result<Outcome, CliError> {
    let (a, b) = (parse_monoid(a)?, parse_monoid(b)?);
    let bs = parallel::enumerate_bimodules(&a, &b, l, cli.normalize.into(), cli.budget)?;
    let text = match cli.format {
        Format::Json => to_json(&bs.iter().map(BimoduleJson::from).collect::<Vec<_>>()),
        Format::Csv => csv_table(
            &["index", "l", "left", "right"],
            &bs.iter().enumerate().map(|(i, b)| vec![i.to_string(), l.to_string(), rows_inline(&b.left_rows()), rows_inline(&b.right_rows())]).collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut out = format!("{} bimodules\n", bs.len());
            for (i, b) in bs.iter().enumerate() {
                out.push_str(&format!("#{i}  left: {}  right: {}\n", rows_inline(&b.left_rows()), rows_inline(&b.right_rows())));
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn count(cli: &Cli, group: &str, k1: usize, k2: usize, cl: usize, cr: usize) -> Result<Outcome, CliError> {
    let g = parse_group(group)?;
    let opts = CountOptions { normalization: cli.normalize.into(), cross_validate: cli.cross_validate, up_to_iso: cli.up_to_iso, budget: cli.budget };
    let rep = parallel::count_categories(&g, k1, k2, cl, cr, &opts)?;
    let text = match cli.format {
        Format::Json => to_json(&CountReportJson::from(&rep)),
        Format::Csv => count_report_csv(&rep)?,
        Format::Text => {
            let mut out = format!("bimodules: {} left, {} right\n", rep.left_bimodules, rep.right_bimodules);
            out.push_str(&format!("ordered pairs: total {} by i_max {:?}, non-reduced {}\n", rep.total, rep.by_i, rep.non_reduced));
            if let Some(u) = &rep.unordered {
                out.push_str(&format!(
                    "unordered pairs: total {} (equal {:?}, distinct {:?}), non-reduced {}\n",
                    u.total, u.diagonal_by_i, u.off_diagonal_by_i, u.non_reduced
                ));
            }
            out.push_str(&format!("reduced total: {}\n", rep.reduced_total()));
            if let Some(s) = rep.searched_total() {
                out.push_str(&format!("search total: {s}, mismatching pairs: {}\n", rep.discrepancies.len()));
            }
            if let Some(n) = rep.iso_classes {
                out.push_str(&format!("isomorphism classes: {n}\n"));
            }
            out
        }
    };
    let status = if rep.discrepancies.is_empty() { ExitStatus::Ok } else { ExitStatus::Mismatch };
    Ok(Outcome { text, status })
}

fn categories(cli: &Cli, cats: &[TwoObjectCategory]) -> Result<Outcome, CliError> {
    let imax = |c: &TwoObjectCategory| compute_imax(c).map_or(String::new(), |r| r.i_max.to_string());
    let text = match cli.format {
        Format::Json => to_json(&cats.iter().map(CategoryJson::from).collect::<Vec<_>>()),
        Format::Csv => csv_table(
            &["index", "i_max", "reduced", "comp_LR", "comp_RL"],
            &cats
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), imax(c), c.is_reduced().to_string(), rows_inline(&c.comp_lr_rows()), rows_inline(&c.comp_rl_rows())])
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut out = format!("{} categories\n", cats.len());
            for (i, c) in cats.iter().enumerate() {
                out.push_str(&format!(
                    "#{i}  i_max={}  reduced={}  LR: {}  RL: {}\n",
                    imax(c),
                    c.is_reduced(),
                    rows_inline(&c.comp_lr_rows()),
                    rows_inline(&c.comp_rl_rows())
                ));
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct CheckJson {
    check: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct VerifyJson {
    passed: bool,
    notices: Vec<String>,
    checks: Vec<CheckJson>,
}

fn lemma_checks(report: &LemmaReport) -> impl Iterator<Item = CheckJson> + '_ {
    report.checks.iter().map(|k| CheckJson {
        check: k.lemma.to_string(),
        passed: k.witness.is_none(),
        witness: k.witness.as_ref().map(|w| format!("{w:?}")),
    })
}


fn verify(cli: &Cli, c: &TwoObjectCategory) -> Result<Outcome, CliError> {
    let mut checks = Vec::new();
    let mut notices = Vec::new();
    for (name, b) in [("bimodule L", c.l()), ("bimodule R", c.r())] {
        let res = validate_bimodule(b);
        checks.push(CheckJson { check: name.into(), passed: res.is_ok(), witness: res.err().map(|e| e.to_string()) });
    }
    let empty = [HomSet::L, HomSet::R].into_iter().filter(|&h| c.size(h) == 0).map(|h| h.to_string()).collect::<Vec<_>>();
    let bimodules_ok = checks.iter().all(|k| k.passed);
    if !empty.is_empty() {
        notices.push(format!("hom-set {} is empty: category-level checks skipped", empty.join(", ")));
    } else if !bimodules_ok {
        notices.push("invalid bimodule: category-level checks skipped".into());
    } else {
        let res = validate_category(c);
        let valid = res.is_ok();
        checks.push(CheckJson { check: "category axioms".into(), passed: valid, witness: res.err().map(|e| e.to_string()) });
        let grouplike = detect_grouplike(c.a()).is_some() && detect_grouplike(c.b()).is_some();
        if !valid {
            notices.push("axioms fail: structural laws skipped".into());
        } else if !grouplike {
            notices.push("endomorphism monoids are not both grouplike: structural laws skipped".into());
        } else {
            for rep in [check_idempotent_lemmas(c), check_orbit_laws(c)] {
                match rep {
                    Ok(rep) => checks.extend(lemma_checks(&rep)),
                    Err(e) => checks.push(CheckJson { check: "grouplike structure".into(), passed: false, witness: Some(e.to_string()) }),
                }
            }
            let emb = submonoid_embedding_check(c);
            checks.push(CheckJson {
                check: "submonoid embeddings".into(),
                passed: emb.passed(),
                witness: (!emb.passed()).then(|| format!("{emb:?}")),
            });
        }
    }
    let passed = checks.iter().all(|k| k.passed);
    let text = match cli.format {
        Format::Json => to_json(&VerifyJson { passed, notices, checks }),
        Format::Csv => csv_table(
            &["check", "passed", "witness"],
            &checks.iter().map(|k| vec![k.check.clone(), k.passed.to_string(), k.witness.clone().unwrap_or_default()]).collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut out = String::new();
            for n in &notices {
                out.push_str(&format!("note: {n}\n"));
            }
            for k in &checks {
                let mark = if k.passed { "PASS" } else { "FAIL" };
                match &k.witness {
                    Some(w) => out.push_str(&format!("{mark} {}  witness {w}\n", k.check)),
                    None => out.push_str(&format!("{mark} {}\n", k.check)),
                }
            }
            out.push_str(if passed { "all checks passed\n" } else { "some checks failed\n" });
            out
        }
    };
    Ok(Outcome { text, status: if passed { ExitStatus::Ok } else { ExitStatus::Mismatch } })
}
