//! Command-line front end.
//!
//! Exit codes are uniform across subcommands: 0 for a clean result or an
//! inconclusive search, 2 when a witness/collision was found, 1 for usage or
//! I/O errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sepinv::{
    apply_permutation, build_m, build_s, divisor_summatory, eval_invariant, find_witness,
    fingerprint, lemma1_witness, lemma2_witness, match_points, paper_fixtures, parse_point_file,
    size_formulas, validate_witness, verify_separation, Axis, BiIndex, Error, GridSpec, IndexSet,
    MatchResult, PointFile, PointPair, Result, WitnessPair,
};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_FOUND: u8 = 2;

fn emit(args: std::fmt::Arguments<'_>) {
    let mut out = std::io::stdout().lock();
    if out
        .write_fmt(args)
        .and_then(|()| out.write_all(b"\n"))
        .is_err()
    {
        // the consumer closed the pipe (e.g. `sepinv ... | head`); stop quietly
        std::process::exit(i32::from(EXIT_OK));
    }
}

/// `println!` that tolerates a closed stdout instead of panicking.
macro_rules! outln {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

#[derive(Parser)]
#[command(
    name = "sepinv",
    version,
    about = "Separating invariants for the diagonal S_n-action on pairs of vectors",
    after_help = "Environment:\n  SEPINV_THREADS  cap verifier parallelism (default: all cores)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetKind {
    /// All (j,k) != (0,0) with j + k <= n
    #[value(name = "M", alias = "m")]
    M,
    /// The separating subset: j <= n, k <= n/(j+1)
    #[value(name = "S", alias = "s")]
    S,
}

impl SetKind {
    fn build(self, n: usize) -> Result<IndexSet> {
        match self {
            SetKind::M => build_m(n),
            SetKind::S => build_s(n),
        }
    }

    fn letter(self) -> &'static str {
        match self {
            SetKind::M => "M",
            SetKind::S => "S",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_index(s: &str) -> Result<BiIndex> {
    let (j, k) = s
        .split_once(',')
        .ok_or_else(|| Error::ParseIndex(s.to_string()))?;
    let j: u32 = j
        .trim()
        .parse()
        .map_err(|_| Error::ParseIndex(s.to_string()))?;
    let k: u32 = k
        .trim()
        .parse()
        .map_err(|_| Error::ParseIndex(s.to_string()))?;
    BiIndex::new(j, k)
}

fn default_search_grid() -> GridSpec {
    GridSpec::symmetric_int(10)
}

fn default_lemma2_grid() -> GridSpec {
    GridSpec::from_ints(&[0, 1, 2, 3, 4, 5, 6])
}

#[derive(Subcommand)]
enum Command {
    /// List the members of M(n) or S(n) in canonical order
    Indexset {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        set: SetKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Tabulate |M(n)|, |S(n)| and the divisor summatory function D(n)
    Sizes {
        #[arg(long = "max-n")]
        max_n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate every invariant of a set on a point
    Fingerprint {
        /// Point file: {"n": 3, "x": ["1","2","3"], "y": ["1","0","2"]}
        #[arg(long)]
        point: PathBuf,
        /// Must match the point file if given
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "S")]
        set: SetKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check a set against every orbit of a finite grid (exit 2 on collision)
    CheckSeparation {
        #[arg(long)]
        n: usize,
        /// Comma-separated rational values, e.g. -1,0,1/2,2
        #[arg(long, allow_hyphen_values = true)]
        grid: GridSpec,
        #[arg(long, value_enum, default_value = "S")]
        set: SetKind,
        /// Remove one index j,k before checking
        #[arg(long, value_parser = parse_index)]
        drop: Option<BiIndex>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Match two points: a permutation mapping q to p, or a distinguishing index
    Match {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        q: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Validate the built-in witness pairs
    PaperWitnesses {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Corrupt one fixture first (negative control)
        #[arg(long, hide = true)]
        tamper: bool,
    },
    /// Search a grid for a pair separated only by the dropped index (exit 2 when found)
    FindWitness {
        #[arg(long)]
        n: usize,
        /// The index j,k to remove from S(n)
        #[arg(long, value_parser = parse_index)]
        drop: BiIndex,
        #[arg(long, allow_hyphen_values = true, default_value_t = default_search_grid())]
        grid: GridSpec,
        /// Max representatives examined; 0 = unlimited
        #[arg(long, default_value_t = 0)]
        budget: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Construct a witness for dropping a pure power sum f_{j,0} or f_{0,j}
    Lemma1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        axis: Axis,
        #[arg(long)]
        j: u32,
        #[arg(long, allow_hyphen_values = true, default_value_t = default_search_grid())]
        grid: GridSpec,
        /// Max candidates examined; 0 = unlimited
        #[arg(long, default_value_t = 0)]
        budget: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Construct the even-n witness for dropping f_{1,n/2}
    Lemma2 {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = default_lemma2_grid())]
        grid: GridSpec,
        /// Max candidates examined; 0 = unlimited
        #[arg(long, default_value_t = 0)]
        budget: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version land here too and must keep exit code 0
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Indexset { n, set, format } => cmd_indexset(n, set, format),
        Command::Sizes { max_n, format } => cmd_sizes(max_n, format),
        Command::Fingerprint {
            point,
            n,
            set,
            format,
        } => cmd_fingerprint(&point, n, set, format),
        Command::CheckSeparation {
            n,
            grid,
            set,
            drop,
            format,
        } => cmd_check_separation(n, &grid, set, drop, format),
        Command::Match { p, q, format } => cmd_match(&p, &q, format),
        Command::PaperWitnesses { format, tamper } => cmd_paper_witnesses(format, tamper),
        Command::FindWitness {
            n,
            drop,
            grid,
            budget,
            format,
        } => {
            let found = find_witness(n, drop, &grid, budget)?;
            report_search(
                found,
                &grid,
                format,
                json!({"n": n, "drop": [drop.j, drop.k]}),
            )
        }
        Command::Lemma1 {
            n,
            axis,
            j,
            grid,
            budget,
            format,
        } => {
            let found = lemma1_witness(n, axis, j, &grid, budget)?;
            report_search(
                found,
                &grid,
                format,
                json!({"n": n, "axis": axis.to_string(), "j": j}),
            )
        }
        Command::Lemma2 {
            n,
            grid,
            budget,
            format,
        } => {
            let found = lemma2_witness(n, &grid, budget)?;
            report_search(found, &grid, format, json!({"n": n}))
        }
    }
}

fn read_point(path: &PathBuf) -> Result<PointPair> {
    parse_point_file(&fs::read_to_string(path)?)
}

fn render_inline(p: &PointPair) -> String {
    let join = |vals: &[sepinv::Rational]| {
        vals.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("({} | {})", join(p.xs()), join(p.ys()))
}

fn point_json(p: &PointPair) -> serde_json::Value {
    serde_json::to_value(PointFile::from_point(p)).expect("plain data serializes")
}

fn index_json(idx: BiIndex) -> serde_json::Value {
    json!([idx.j, idx.k])
}

fn cmd_indexset(n: usize, set: SetKind, format: Format) -> Result<u8> {
    let built = set.build(n)?;
    match format {
        Format::Text => {
            outln!("{}({}): {} indices", set.letter(), n, built.len());
            for idx in &built {
                outln!("{idx}");
            }
        }
        Format::Json => {
            let pairs: Vec<serde_json::Value> = built.iter().map(|&idx| index_json(idx)).collect();
            outln!("{}", serde_json::Value::Array(pairs));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_sizes(max_n: u64, format: Format) -> Result<u8> {
    if max_n == 0 {
        return Err(Error::InvalidN);
    }
    let rows: Vec<(u64, u64, u64, u64)> = (1..=max_n)
        .map(|n| {
            let (m, s) = size_formulas(n);
            (n, m, s, divisor_summatory(n))
        })
        .collect();
    match format {
        Format::Text => {
            outln!("{:>8} {:>12} {:>12} {:>12}", "n", "|M|", "|S|", "D(n)");
            for (n, m, s, d) in rows {
                outln!("{n:>8} {m:>12} {s:>12} {d:>12}");
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(n, m, s, d)| json!({"n": n, "M": m, "S": s, "D": d}))
                .collect();
            outln!("{}", serde_json::Value::Array(rows));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_fingerprint(path: &PathBuf, n: Option<usize>, set: SetKind, format: Format) -> Result<u8> {
    let p = read_point(path)?;
    if let Some(n) = n {
        if n != p.n() {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: p.n(),
            });
        }
    }
    let built = set.build(p.n())?;
    let fp = fingerprint(&built, &p)?;
    match format {
        Format::Text => {
            for (idx, value) in built.iter().zip(fp.values()) {
                outln!("{idx} -> {value}");
            }
        }
        Format::Json => {
            let indices: Vec<serde_json::Value> =
                built.iter().map(|&idx| index_json(idx)).collect();
            let values: Vec<String> = fp.values().iter().map(|v| v.canonical_string()).collect();
            outln!(
                "{}",
                json!({
                    "n": p.n(),
                    "set": set.letter(),
                    "indices": indices,
                    "values": values,
                })
            );
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check_separation(
    n: usize,
    grid: &GridSpec,
    set: SetKind,
    drop: Option<BiIndex>,
    format: Format,
) -> Result<u8> {
    let mut built = set.build(n)?;
    if let Some(idx) = drop {
        built = built.without(idx)?;
    }
    let report = verify_separation(&built, n, grid)?;
    let set_desc = match drop {
        Some(idx) => format!("{}({}) \\ {{{}}}", set.letter(), n, idx),
        None => format!("{}({})", set.letter(), n),
    };
    match format {
        Format::Text => {
            outln!("set: {set_desc} ({} indices)", built.len());
            outln!("grid: {grid}");
            outln!("orbits: {}", report.orbit_count());
            outln!("collisions: {}", report.collision_pairs().len());
            for (p, q) in report.collision_pairs() {
                outln!("{} vs {}", render_inline(p), render_inline(q));
            }
        }
        Format::Json => {
            let collisions: Vec<serde_json::Value> = report
                .collision_pairs()
                .iter()
                .map(|(p, q)| json!({"p": point_json(p), "q": point_json(q)}))
                .collect();
            outln!(
                "{}",
                json!({
                    "n": n,
                    "set": set.letter(),
                    "drop": drop.map(index_json),
                    "grid": grid.to_string(),
                    "orbit_count": report.orbit_count(),
                    "collision_count": report.collision_pairs().len(),
                    "collisions": collisions,
                })
            );
        }
    }
    Ok(if report.separates() {
        EXIT_OK
    } else {
        EXIT_FOUND
    })
}

fn cmd_match(p_path: &PathBuf, q_path: &PathBuf, format: Format) -> Result<u8> {
    let p = read_point(p_path)?;
    let q = read_point(q_path)?;
    match match_points(&p, &q)? {
        MatchResult::Matched(sigma) => {
            debug_assert_eq!(apply_permutation(&sigma, &q)?, p);
            match format {
                Format::Text => {
                    outln!("matched");
                    outln!("sigma: {}", sigma.one_line());
                }
                Format::Json => outln!(
                    "{}",
                    json!({
                        "matched": true,
                        "images": sigma.images(),
                        "one_line": sigma.one_line(),
                    })
                ),
            }
            Ok(EXIT_OK)
        }
        MatchResult::Witness(idx) => {
            let vp = eval_invariant(idx, &p);
            let vq = eval_invariant(idx, &q);
            match format {
                Format::Text => outln!("witness {idx}: {vp} vs {vq}"),
                Format::Json => outln!(
                    "{}",
                    json!({
                        "matched": false,
                        "witness": index_json(idx),
                        "values": [vp.canonical_string(), vq.canonical_string()],
                    })
                ),
            }
            Ok(EXIT_FOUND)
        }
    }
}

fn cmd_paper_witnesses(format: Format, tamper: bool) -> Result<u8> {
    let mut fixtures = paper_fixtures();
    if tamper {
        // negative control: perturb one y-coordinate of the first pair
        let w = &fixtures[0];
        let mut ys: Vec<sepinv::Rational> = w.q().ys().to_vec();
        ys[0] = &ys[0] + &sepinv::Rational::one();
        let q = PointPair::new(w.q().xs().to_vec(), ys)?;
        fixtures[0] = WitnessPair::new(w.p().clone(), q, w.removed());
    }
    let mut valid = 0usize;
    let mut entries = Vec::new();
    for w in &fixtures {
        let n = w.p().n();
        let ok = validate_witness(w, n)?;
        if ok {
            valid += 1;
        }
        let vp = eval_invariant(w.removed(), w.p());
        let vq = eval_invariant(w.removed(), w.q());
        match format {
            Format::Text => outln!(
                "n={} removed={}: {} ({} vs {})",
                n,
                w.removed(),
                if ok { "valid" } else { "INVALID" },
                vp,
                vq
            ),
            Format::Json => entries.push(json!({
                "n": n,
                "removed": index_json(w.removed()),
                "valid": ok,
                "values": [vp.canonical_string(), vq.canonical_string()],
                "p": point_json(w.p()),
                "q": point_json(w.q()),
            })),
        }
    }
    match format {
        Format::Text => outln!("{valid}/{} fixtures valid", fixtures.len()),
        Format::Json => outln!(
            "{}",
            json!({"total": fixtures.len(), "valid": valid, "fixtures": entries})
        ),
    }
    Ok(if valid == fixtures.len() {
        EXIT_OK
    } else {
        EXIT_USAGE
    })
}

fn report_search(
    found: Option<WitnessPair>,
    grid: &GridSpec,
    format: Format,
    mut context: serde_json::Value,
) -> Result<u8> {
    match found {
        Some(w) => {
            match format {
                Format::Text => {
                    outln!("witness found: S \\ {{{}}} does not separate", w.removed());
                    outln!("p: {}", sepinv::render_point_file(w.p()));
                    outln!("q: {}", sepinv::render_point_file(w.q()));
                    outln!("removed: {}", w.removed());
                }
                Format::Json => {
                    let obj = context.as_object_mut().expect("context is an object");
                    obj.insert("found".into(), json!(true));
                    obj.insert("grid".into(), json!(grid.to_string()));
                    obj.insert("p".into(), point_json(w.p()));
                    obj.insert("q".into(), point_json(w.q()));
                    obj.insert("removed".into(), index_json(w.removed()));
                    outln!("{context}");
                }
            }
            Ok(EXIT_FOUND)
        }
        None => {
            match format {
                Format::Text => outln!("no witness found within grid/budget — inconclusive"),
                Format::Json => {
                    let obj = context.as_object_mut().expect("context is an object");
                    obj.insert("found".into(), json!(false));
                    obj.insert("grid".into(), json!(grid.to_string()));
                    obj.insert(
                        "message".into(),
                        json!("no witness found within grid/budget — inconclusive"),
                    );
                    outln!("{context}");
                }
            }
            Ok(EXIT_OK)
        }
    }
}
