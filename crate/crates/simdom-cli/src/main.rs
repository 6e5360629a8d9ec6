//! Command-line front end: generate factorings, solve and verify them,
//! evaluate closed-form bounds, reproduce the coefficient tables, and run
//! batch experiments with machine-readable reports.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use simdom::bounds::{
    bound_report, bound_report_for, BoundKind, BoundReport, Descriptor, StructureProfile,
};
use simdom::constructive::{applicable_methods, run_method};
use simdom::exact::{is_sd_set, sd_number_exact_capped, SDResult};
use simdom::extremal::{
    gen_family_g, gen_k5_two_c5, gen_one_factorization, gen_one_factorization_even,
    gen_random_factoring, gen_star_factoring, gen_tree_pair, probe_conjecture, ProbeReport,
    RandomModel,
};
use simdom::numeric::{format4_scaled, from_int, to_f64};
use simdom::{Factoring, MethodKind, EXACT_CAP};

#[derive(Parser)]
#[command(
    name = "simdom",
    version,
    about = "Simultaneous dominating sets across graph factorings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a factoring from a named family and print its hash.
    Gen(GenArgs),
    /// Solve an instance file, verify every produced set, report per method.
    Solve(SolveArgs),
    /// Evaluate every closed-form bound for an instance or a descriptor.
    Bounds(BoundsArgs),
    /// Print the four coefficient tables.
    Tables(TablesArgs),
    /// Run a batch of generate+solve jobs from a config file.
    Experiment(ExperimentArgs),
    /// Random search for 2-factor, min-degree-2 instances with large ratio.
    Probe(ProbeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct GenArgs {
    /// stars | treepair | onefactorization | k5c5 | familyg |
    /// random:{gnp,regular,kr,cr,hamiltonian,matching}
    family: String,
    /// Family parameters as key=value pairs, e.g. `k=3 n=8` or `n=12,k=2,r=3`.
    params: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the instance here; without it the instance goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(required_unless_present = "help_methods")]
    input: Option<PathBuf>,
    /// `all` for every applicable method, or a comma-separated list of
    /// method names (see `simdom solve --help-methods`).
    #[arg(long, default_value = "all")]
    methods: String,
    /// Vertex cap for the exact solver.
    #[arg(long, default_value_t = EXACT_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Zero the timing column so output bytes are reproducible.
    #[arg(long)]
    deterministic: bool,
    /// List the method names and exit.
    #[arg(long)]
    help_methods: bool,
}

#[derive(Args)]
struct BoundsArgs {
    /// Evaluate bounds for this instance file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Descriptor mode: order, factor count, and guaranteed minimum degree.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    /// Every factor is regular of this common degree.
    #[arg(long)]
    regular: Option<usize>,
    /// Every factor is a disjoint union of complete blocks of this order.
    #[arg(long)]
    kr: Option<usize>,
    /// Every factor is a disjoint union of cycle blocks of this length.
    #[arg(long)]
    cr: Option<usize>,
    /// Every factor is a perfect matching.
    #[arg(long)]
    one_factors: bool,
    /// Every factor is a spanning cycle.
    #[arg(long)]
    spanning_cycles: bool,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Config file: one `family params seeds methods` line per job.
    config: PathBuf,
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long, default_value_t = EXACT_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct ProbeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

const ALL_METHODS: [MethodKind; 13] = [
    MethodKind::Exact,
    MethodKind::Greedy,
    MethodKind::Cover,
    MethodKind::Hypergraph,
    MethodKind::KrTransversal,
    MethodKind::PairMatching,
    MethodKind::KrInductive,
    MethodKind::KrPairing,
    MethodKind::OneFactors,
    MethodKind::CyclePair,
    MethodKind::CyclesInductive,
    MethodKind::C4Three,
    MethodKind::C5Inductive,
];

fn main() -> Result<()> {
    // exit quietly when the output pipe closes (`simdom tables | head`)
    // instead of panicking mid-print; Rust ignores SIGPIPE by default
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match Cli::parse().cmd {
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Bounds(a) => cmd_bounds(a),
        Cmd::Tables(a) => cmd_tables(a),
        Cmd::Experiment(a) => cmd_experiment(a),
        Cmd::Probe(a) => cmd_probe(a),
    }
}

fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

// ---------------------------------------------------------------- families

struct FamilyParams(BTreeMap<String, String>);

impl FamilyParams {
    fn parse<'a>(items: impl Iterator<Item = &'a str>) -> Result<Self> {
        const KEYS: [&str; 9] = ["n", "k", "t", "copies", "half", "r", "d", "p", "min_degree"];
        let mut map = BTreeMap::new();
        for item in items.flat_map(|s| s.split(',')) {
            let item = item.trim();
            if item.is_empty() || item == "-" {
                continue;
            }
            let (key, value) = item
                .split_once('=')
                .with_context(|| format!("parameter '{item}' is not key=value"))?;
            if !KEYS.contains(&key) {
                bail!("unknown parameter '{key}' (expected one of {KEYS:?})");
            }
            map.insert(key.to_string(), value.to_string());
        }
        Ok(FamilyParams(map))
    }

    fn usize(&self, key: &str) -> Result<usize> {
        self.0
            .get(key)
            .with_context(|| format!("missing parameter '{key}'"))?
            .parse()
            .with_context(|| format!("parameter '{key}' is not a count"))
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        match self.0.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .with_context(|| format!("parameter '{key}' is not a count")),
        }
    }

    fn f64(&self, key: &str) -> Result<f64> {
        self.0
            .get(key)
            .with_context(|| format!("missing parameter '{key}'"))?
            .parse()
            .with_context(|| format!("parameter '{key}' is not a number"))
    }
}

fn generate_family(family: &str, p: &FamilyParams, seed: u64) -> Result<Factoring> {
    let f = match family.to_ascii_lowercase().as_str() {
        "stars" => gen_star_factoring(p.usize("k")?, p.usize("n")?)?,
        "treepair" => gen_tree_pair(p.usize("t")?)?,
        "onefactorization" => {
            let k = p.usize("k")?;
            let copies = p.usize_or("copies", 1)?;
            if k % 2 == 0 {
                gen_one_factorization_even(k, copies)?
            } else {
                gen_one_factorization(k, copies)?
            }
        }
        "k5c5" => gen_k5_two_c5(p.usize_or("copies", 1)?)?,
        "familyg" => {
            let half = p.usize("half")?;
            let g1 = gen_family_g(half, seed)?;
            let g2 = gen_family_g(half, seed.wrapping_add(1))?;
            Factoring::new(vec![g1, g2])?
        }
        "random:gnp" => gen_random_factoring(
            p.usize("n")?,
            p.usize("k")?,
            &RandomModel::Gnp {
                p: p.f64("p")?,
                min_degree: p.usize_or("min_degree", 0)?,
            },
            seed,
        )?,
        "random:regular" => gen_random_factoring(
            p.usize("n")?,
            p.usize("k")?,
            &RandomModel::Regular { d: p.usize("d")? },
            seed,
        )?,
        "random:kr" => gen_random_factoring(
            p.usize("n")?,
            p.usize("k")?,
            &RandomModel::KrUnion { r: p.usize("r")? },
            seed,
        )?,
        "random:cr" => gen_random_factoring(
            p.usize("n")?,
            p.usize("k")?,
            &RandomModel::CrUnion { r: p.usize("r")? },
            seed,
        )?,
        "random:hamiltonian" => gen_random_factoring(
            p.usize("n")?,
            p.usize("k")?,
            &RandomModel::HamiltonianCycle,
            seed,
        )?,
        "random:matching" => gen_random_factoring(
            p.usize("n")?,
            p.usize("k")?,
            &RandomModel::PerfectMatching,
            seed,
        )?,
        other => bail!(
            "unknown family '{other}' (expected stars, treepair, onefactorization, k5c5, \
             familyg, or random:{{gnp,regular,kr,cr,hamiltonian,matching}})"
        ),
    };
    Ok(f)
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let params = FamilyParams::parse(a.params.iter().map(String::as_str))?;
    let f = generate_family(&a.family, &params, a.seed)?;
    let text = f.serialize();
    let hash = sha256_hex(&text);
    match a.out {
        Some(path) => {
            fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
            println!("{hash}  {}", path.display());
        }
        None => {
            println!("# sha256={hash}");
            print!("{text}");
        }
    }
    Ok(())
}

// ------------------------------------------------------------- run reports

#[derive(Serialize)]
struct MethodRow {
    method: String,
    /// ok | inapplicable | error
    status: String,
    size: Option<usize>,
    valid: Option<bool>,
    bound: Option<String>,
    bound_proven: Option<bool>,
    bound_respected: Option<bool>,
    detail: Option<String>,
    millis: u128,
}

#[derive(Serialize)]
struct RunReport {
    version: String,
    instance: String,
    hash: String,
    n: usize,
    k: usize,
    exact: Option<usize>,
    passed: bool,
    methods: Vec<MethodRow>,
}

enum MethodSelection {
    All,
    List(Vec<MethodKind>),
}

fn parse_methods(s: &str) -> Result<MethodSelection> {
    if s.trim() == "all" {
        return Ok(MethodSelection::All);
    }
    let mut list = Vec::new();
    for name in s.split(',') {
        let name = name.trim();
        let kind = ALL_METHODS
            .iter()
            .copied()
            .find(|m| m.label() == name)
            .with_context(|| {
                let names: Vec<&str> = ALL_METHODS.iter().map(|m| m.label()).collect();
                format!("unknown method '{name}' (expected one of {names:?} or 'all')")
            })?;
        if !list.contains(&kind) {
            list.push(kind);
        }
    }
    Ok(MethodSelection::List(list))
}

fn build_run_report(
    f: &Factoring,
    instance: &str,
    selection: &MethodSelection,
    cap: usize,
    deterministic: bool,
) -> RunReport {
    let applicable = applicable_methods(f);
    let requested: Vec<MethodKind> = match selection {
        MethodSelection::All => applicable
            .iter()
            .copied()
            .filter(|&m| m != MethodKind::Exact || f.n() <= cap)
            .collect(),
        MethodSelection::List(list) => list.clone(),
    };

    // Solve exactly once up front so every row can be checked against it.
    let mut exact_result: Option<SDResult> = None;
    if requested.contains(&MethodKind::Exact) && f.n() <= cap {
        exact_result = sd_number_exact_capped(f, cap).ok();
    }
    let exact = exact_result.as_ref().map(SDResult::size);

    let mut passed = true;
    let mut rows = Vec::new();
    for kind in requested {
        let applicable_here = match kind {
            MethodKind::Exact => f.n() <= cap,
            _ => applicable.contains(&kind),
        };
        if !applicable_here {
            let why = if kind == MethodKind::Exact {
                format!("n={} exceeds cap {cap}", f.n())
            } else {
                "structural precondition not met".to_string()
            };
            rows.push(MethodRow {
                method: kind.label().to_string(),
                status: "inapplicable".into(),
                size: None,
                valid: None,
                bound: None,
                bound_proven: None,
                bound_respected: None,
                detail: Some(why),
                millis: 0,
            });
            continue;
        }
        let start = Instant::now();
        let outcome = match (kind, &exact_result) {
            (MethodKind::Exact, Some(res)) => Ok(res.clone()),
            (MethodKind::Exact, None) => sd_number_exact_capped(f, cap),
            _ => run_method(f, kind),
        };
        let millis = if deterministic {
            0
        } else {
            start.elapsed().as_millis()
        };
        match outcome {
            Err(e) => {
                passed = false;
                rows.push(MethodRow {
                    method: kind.label().to_string(),
                    status: "error".into(),
                    size: None,
                    valid: None,
                    bound: None,
                    bound_proven: None,
                    bound_respected: None,
                    detail: Some(e.to_string()),
                    millis,
                });
            }
            Ok(res) => {
                let valid = is_sd_set(f, &res.set) && res.all_factors_dominated();
                let (bound, bound_proven, bound_respected) = match &res.bound_context {
                    None => (None, None, None),
                    Some(ctx) => {
                        let respected = from_int(res.size()) <= ctx.value;
                        (
                            Some(format!("{:.4}", to_f64(&ctx.value))),
                            Some(ctx.proven),
                            Some(respected),
                        )
                    }
                };
                if !valid
                    || bound_respected == Some(false) && bound_proven == Some(true)
                    || exact.is_some_and(|e| res.size() < e)
                {
                    passed = false;
                }
                let status = if exact.is_some_and(|e| res.size() < e) {
                    "error".into()
                } else {
                    "ok".into()
                };
                rows.push(MethodRow {
                    method: kind.label().to_string(),
                    status,
                    size: Some(res.size()),
                    valid: Some(valid),
                    bound,
                    bound_proven,
                    bound_respected,
                    detail: res.detail.clone(),
                    millis,
                });
            }
        }
    }
    RunReport {
        version: simdom::VERSION.to_string(),
        instance: instance.to_string(),
        hash: sha256_hex(&f.serialize()),
        n: f.n(),
        k: f.k(),
        exact,
        passed,
        methods: rows,
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), T::to_string)
}

fn report_to_tsv(r: &RunReport) -> String {
    let mut s = String::from(
        "instance\thash\tn\tk\texact\tversion\tpassed\tmethod\tstatus\tsize\tvalid\tbound\
         \tbound_proven\tbound_respected\tdetail\tmillis\n",
    );
    for m in &r.methods {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.instance,
            r.hash,
            r.n,
            r.k,
            opt(&r.exact),
            r.version,
            r.passed,
            m.method,
            m.status,
            opt(&m.size),
            opt(&m.valid),
            opt(&m.bound),
            opt(&m.bound_proven),
            opt(&m.bound_respected),
            opt(&m.detail),
            m.millis,
        ));
    }
    s
}

fn render_report(r: &RunReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Tsv => report_to_tsv(r),
        Format::Json => serde_json::to_string_pretty(r).context("serializing report")? + "\n",
    })
}

fn cmd_solve(a: SolveArgs) -> Result<()> {
    if a.help_methods {
        for m in ALL_METHODS {
            println!("{}", m.label());
        }
        return Ok(());
    }
    let input = a.input.expect("clap enforces input unless --help-methods");
    let text =
        fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
    let f = Factoring::parse(&text).with_context(|| format!("parsing {}", input.display()))?;
    let selection = parse_methods(&a.methods)?;
    let instance = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".into());
    let report = build_run_report(&f, &instance, &selection, a.cap, a.deterministic);
    print!("{}", render_report(&report, a.format)?);
    if !report.passed {
        eprintln!("FAILED: a verification or bound assertion did not hold");
        std::process::exit(1);
    }
    Ok(())
}

// ------------------------------------------------------------------ bounds

fn bound_kind_name(kind: BoundKind) -> &'static str {
    match kind {
        BoundKind::Lower => "lower",
        BoundKind::Upper => "upper",
    }
}

fn bound_report_rows(r: &BoundReport) -> Vec<[String; 6]> {
    r.entries
        .iter()
        .map(|e| {
            [
                bound_kind_name(e.kind).to_string(),
                e.label.to_string(),
                e.coefficient
                    .as_ref()
                    .map_or_else(|| "-".into(), |c| c.to_string()),
                e.value
                    .as_ref()
                    .map_or_else(|| "-".into(), |v| v.to_string()),
                e.applicable.to_string(),
                e.note.clone().unwrap_or_else(|| "-".into()),
            ]
        })
        .collect()
}

fn cmd_bounds(a: BoundsArgs) -> Result<()> {
    let report = match &a.input {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let f =
                Factoring::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
            bound_report_for(&f)
        }
        None => {
            let (n, k, delta) = match (a.n, a.k, a.delta) {
                (Some(n), Some(k), Some(delta)) => (n, k, delta),
                _ => bail!("descriptor mode needs --n, --k and --delta (or use --input)"),
            };
            let structure = StructureProfile {
                one_factors: a.one_factors,
                spanning_cycles: a.spanning_cycles,
                kr_order: a.kr,
                cr_order: a.cr,
                regular_degree: a.regular,
            };
            bound_report(&Descriptor::closed_form(n, k, delta, structure))
        }
    };
    match a.format {
        Format::Tsv => {
            println!(
                "# n={} k={} delta={} structure={}",
                report.n, report.k, report.delta, report.structure
            );
            println!("kind\tlabel\tcoefficient\tvalue\tapplicable\tnote");
            for row in bound_report_rows(&report) {
                println!("{}", row.join("\t"));
            }
        }
        Format::Json => {
            let entries: Vec<serde_json::Value> = bound_report_rows(&report)
                .into_iter()
                .map(|r| {
                    serde_json::json!({
                        "kind": r[0], "label": r[1], "coefficient": r[2],
                        "value": r[3], "applicable": r[4] == "true", "note": r[5],
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "n": report.n, "k": report.k, "delta": report.delta,
                "structure": report.structure, "entries": entries,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(())
}

// ------------------------------------------------------------------ tables

fn table_rows() -> Vec<(String, String, String, String)> {
    let mut rows = Vec::new();
    for (k, v) in simdom::bounds::table_known_bounds() {
        rows.push(("general".into(), k.to_string(), "-".into(), v.to_string()));
    }
    for (k, v) in simdom::bounds::table_regular_bounds() {
        rows.push(("regular".into(), k.to_string(), "-".into(), v.to_string()));
    }
    let f = simdom::bounds::table_coeff_f();
    for (i, &row) in f.rows.iter().enumerate() {
        for (j, &col) in f.cols.iter().enumerate() {
            rows.push((
                "sampling".into(),
                row.to_string(),
                col.to_string(),
                format4_scaled(f.scaled[i][j]),
            ));
        }
    }
    let g = simdom::bounds::table_coeff_g();
    for (i, &row) in g.rows.iter().enumerate() {
        for (j, &col) in g.cols.iter().enumerate() {
            rows.push((
                "blocks".into(),
                row.to_string(),
                col.to_string(),
                format4_scaled(g.scaled[i][j]),
            ));
        }
    }
    rows
}

fn cmd_tables(a: TablesArgs) -> Result<()> {
    let rows = table_rows();
    match a.format {
        Format::Tsv => {
            println!("table\trow\tcol\tvalue");
            for (t, r, c, v) in rows {
                println!("{t}\t{r}\t{c}\t{v}");
            }
        }
        Format::Json => {
            let docs: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(t, r, c, v)| serde_json::json!({"table": t, "row": r, "col": c, "value": v}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&docs)?);
        }
    }
    Ok(())
}

// -------------------------------------------------------------- experiment

struct FamilySummary {
    instances: usize,
    exact_solved: usize,
    /// (size, n) of the instance with the largest observed size/n.
    max_ratio: Option<(usize, usize)>,
    all_passed: bool,
}

fn ratio_exceeds(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 * b.1 > b.0 * a.1
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Comma-separated seeds; each entry is an integer or an inclusive `a-b` range.
fn parse_seeds(text: &str) -> Result<Vec<u64>> {
    const MAX_SEEDS: usize = 10_000;
    let mut seeds = Vec::new();
    for entry in text.split(',') {
        let entry = entry.trim();
        match entry.split_once('-') {
            None => seeds.push(
                entry
                    .parse()
                    .with_context(|| format!("seed '{entry}' is not an integer"))?,
            ),
            Some((lo, hi)) => {
                let lo: u64 = lo
                    .trim()
                    .parse()
                    .with_context(|| format!("range '{entry}' start is not an integer"))?;
                let hi: u64 = hi
                    .trim()
                    .parse()
                    .with_context(|| format!("range '{entry}' end is not an integer"))?;
                if lo > hi {
                    bail!("range '{entry}' is empty");
                }
                seeds.extend(lo..=hi);
            }
        }
        if seeds.len() > MAX_SEEDS {
            bail!("more than {MAX_SEEDS} seeds on one line");
        }
    }
    Ok(seeds)
}

struct ExperimentJob {
    line_no: usize,
    family: String,
    params: FamilyParams,
    seeds: Vec<u64>,
    selection: MethodSelection,
}

fn parse_experiment_config(text: &str) -> Result<Vec<ExperimentJob>> {
    let mut jobs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            bail!(
                "config line {line_no}: expected 'family params seeds methods', got {} fields",
                fields.len()
            );
        }
        let context = || format!("config line {line_no}");
        jobs.push(ExperimentJob {
            line_no,
            family: fields[0].to_string(),
            params: FamilyParams::parse(std::iter::once(fields[1])).with_context(context)?,
            seeds: parse_seeds(fields[2]).with_context(context)?,
            selection: parse_methods(fields[3]).with_context(context)?,
        });
    }
    Ok(jobs)
}

fn cmd_experiment(a: ExperimentArgs) -> Result<()> {
    let text =
        fs::read_to_string(&a.config).with_context(|| format!("reading {}", a.config.display()))?;
    // a config typo must not leave a half-written out-dir
    let jobs = parse_experiment_config(&text)?;
    fs::create_dir_all(&a.out_dir).with_context(|| format!("creating {}", a.out_dir.display()))?;

    let mut summaries: BTreeMap<String, FamilySummary> = BTreeMap::new();
    let mut all_passed = true;
    for job in &jobs {
        let (line_no, family) = (job.line_no, job.family.as_str());
        let (params, selection) = (&job.params, &job.selection);
        for &seed in &job.seeds {
            let f = generate_family(family, params, seed)
                .with_context(|| format!("config line {line_no}, seed {seed}"))?;
            let stem = format!("{line_no:03}-{}-s{seed}", family.replace(':', "-"));
            fs::write(a.out_dir.join(format!("{stem}.sd")), f.serialize())?;
            let report = build_run_report(&f, &stem, selection, a.cap, true);
            let ext = match a.format {
                Format::Tsv => "report.tsv",
                Format::Json => "report.json",
            };
            fs::write(
                a.out_dir.join(format!("{stem}.{ext}")),
                render_report(&report, a.format)?,
            )?;

            let entry = summaries
                .entry(family.to_string())
                .or_insert(FamilySummary {
                    instances: 0,
                    exact_solved: 0,
                    max_ratio: None,
                    all_passed: true,
                });
            entry.instances += 1;
            entry.all_passed &= report.passed;
            all_passed &= report.passed;
            let observed = report.exact.or_else(|| {
                report
                    .methods
                    .iter()
                    .filter(|m| m.status == "ok" && m.valid == Some(true))
                    .filter_map(|m| m.size)
                    .min()
            });
            if report.exact.is_some() {
                entry.exact_solved += 1;
            }
            if let Some(size) = observed {
                let candidate = (size, f.n());
                if entry
                    .max_ratio
                    .is_none_or(|best| ratio_exceeds(candidate, best))
                {
                    entry.max_ratio = Some(candidate);
                }
            }
        }
    }

    let mut summary =
        String::from("family\tinstances\texact_solved\tmax_ratio\tmax_ratio_decimal\tall_passed\n");
    for (family, s) in &summaries {
        let (ratio, decimal) = match s.max_ratio {
            None => ("-".to_string(), "-".to_string()),
            Some((size, n)) => {
                let g = gcd(size, n).max(1);
                (
                    format!("{}/{}", size / g, n / g),
                    format!("{:.4}", size as f64 / n as f64),
                )
            }
        };
        summary.push_str(&format!(
            "{family}\t{}\t{}\t{ratio}\t{decimal}\t{}\n",
            s.instances, s.exact_solved, s.all_passed
        ));
    }
    fs::write(a.out_dir.join("summary.tsv"), &summary)?;
    print!("{summary}");
    if !all_passed {
        eprintln!("FAILED: at least one instance report failed its assertions");
        std::process::exit(1);
    }
    Ok(())
}

// ----------------------------------------------------------------- probing

fn cmd_probe(a: ProbeArgs) -> Result<()> {
    let report = probe_conjecture(a.n, a.trials, a.seed)?;
    let ratio_decimal = report.best_ratio().map(|r| format!("{:.4}", to_f64(&r)));
    match a.format {
        Format::Tsv => {
            println!("key\tvalue");
            println!("n\t{}", report.n);
            println!("trials\t{}", report.trials);
            println!("generated\t{}", report.generated);
            println!(
                "best_gamma_sd\t{}",
                report
                    .best
                    .as_ref()
                    .map_or_else(|| "-".into(), |h| h.gamma_sd.to_string())
            );
            println!("best_ratio\t{}", ratio_decimal.as_deref().unwrap_or("-"));
            println!(
                "counterexample_candidates\t{}",
                report.counterexample_candidates.len()
            );
            println!("note\t{}", ProbeReport::disclaimer());
        }
        Format::Json => {
            let doc = serde_json::json!({
                "n": report.n,
                "trials": report.trials,
                "generated": report.generated,
                "best": report.best.as_ref().map(|h| serde_json::json!({
                    "gamma_sd": h.gamma_sd,
                    "instance": h.instance,
                })),
                "best_ratio": ratio_decimal,
                "counterexample_candidates": report
                    .counterexample_candidates
                    .iter()
                    .map(|h| serde_json::json!({
                        "gamma_sd": h.gamma_sd,
                        "instance": h.instance,
                    }))
                    .collect::<Vec<_>>(),
                "note": ProbeReport::disclaimer(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(())
}
