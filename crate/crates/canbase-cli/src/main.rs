//! Command-line driver: golden-example reproduction, JSON I/O, verification
//! sweeps, and text/SVG rendering.
//!
//! Exit codes: `0` pass, `1` a verification sweep found counterexamples
//! (their reports go to standard output), `2` usage error.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use canbase::render::{
    component_panel, cone_listing, slice_numbers, triangle_labels, triangle_values,
};
use canbase::{
    apply_monomial, c_pbw_cone, d_map, e_map, l_pbw_cone, lusztig_cone, slices_for, string_of,
    verify_coincide, verify_cone_correspondence, verify_crystal, verify_image, verify_inclusion,
    word_for_quiver, ConeSpec, IntLinearMap, QuiverA, RenderFormat, Triangle, VerificationReport,
};

#[derive(Parser)]
#[command(name = "canbase", version, about = "Combinatorics of canonical-basis parametrizations in type A", long_about = None)]
struct Cli {
    /// Rank of the root system (selects all quivers of that rank in `verify`)
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Quiver orientation, one L or R per edge (e.g. RLRL)
    #[arg(long, global = true)]
    quiver: Option<String>,

    /// Per-coordinate cap for lattice sweeps (defaults depend on the check)
    #[arg(long, global = true)]
    bound: Option<i64>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for the randomized part of the crystal suite
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced word of the longest element adapted to the quiver
    Word,
    /// Print the slice partition of the positive roots
    Slices,
    /// Apply the exponent-sum map D to a triangle, or print D symbolically
    Dmap {
        /// Triangle JSON ({"c_i_j": value}): a path, or `-` for stdin
        payload: Option<String>,
    },
    /// Apply the inverse map E to a word-exponent vector, or print E symbolically
    Emap {
        /// JSON array of word exponents: a path, or `-` for stdin
        payload: Option<String>,
    },
    /// Extract the string vector of a triangle along the adapted word
    String {
        /// Triangle JSON ({"c_i_j": value}): a path, or `-` for stdin
        payload: String,
    },
    /// Apply the lowering-operator monomial of a word-exponent vector to the
    /// empty triangle
    Monomial {
        /// JSON array of word exponents: a path, or `-` for stdin
        payload: String,
    },
    /// Print the inequalities of a cone family
    Cone {
        #[arg(value_enum)]
        family: Family,
    },
    /// Run a verification sweep and report counterexamples
    Verify {
        #[arg(value_enum)]
        check: Check,
    },
    /// Render a diagram as text or SVG
    Render {
        #[command(subcommand)]
        artifact: Artifact,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Lusztig cone of the adapted word, in word-exponent coordinates
    Lusztig,
    /// Cone of adapted PBW triangles, in triangle coordinates
    Cpbw,
    /// Lusztig-image cone in triangle coordinates
    Lpbw,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// String extraction along the adapted word equals D
    Coincide,
    /// The Lusztig-image cone sits inside the adapted cone
    Inclusion,
    /// E transports the Lusztig cone onto the Lusztig-image cone
    Correspondence,
    /// The string-to-triangle map carries the Lusztig cone onto the
    /// Lusztig-image cone
    Image,
    /// All of the above plus the crystal-operator property suite
    All,
}

#[derive(Subcommand)]
enum Artifact {
    /// The staggered triangle array: values from a payload, labels otherwise
    Triangle {
        /// Triangle JSON ({"c_i_j": value}): a path, or `-` for stdin
        payload: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The slice-number grid, or one component's occupancy panel
    Slices {
        /// Restrict to the 1-based component with this index
        #[arg(long)]
        component: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The inequality listing of a cone family
    Cone {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Svg,
}

impl From<Format> for RenderFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => RenderFormat::Text,
            Format::Svg => RenderFormat::Svg,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Word => {
            let q = resolve_quiver(cli)?;
            let word = word_for_quiver(&q);
            if cli.json {
                println!(
                    "{}",
                    json!({ "quiver": q.to_string(), "n": q.rank(), "word": word.letters() })
                );
            } else {
                println!("{}", join(word.letters().iter()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Slices => {
            let q = resolve_quiver(cli)?;
            if cli.json {
                let mut obj = serde_json::Map::new();
                for (root, z) in slices_for(&q).as_map() {
                    obj.insert(format!("{},{}", root.lo(), root.hi()), z.into());
                }
                println!("{}", Value::Object(obj));
            } else {
                print!("{}", slice_numbers(&q, RenderFormat::Text));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dmap { payload } => {
            let q = resolve_quiver(cli)?;
            let d = d_map(&q);
            match read_payload(payload.as_deref())? {
                None => print_map(cli, &d),
                Some(text) => {
                    let t = Triangle::from_json(q.rank(), &parse_json(&text)?)?;
                    let a = d.apply(t.entries());
                    if cli.json {
                        println!("{}", json!(a));
                    } else {
                        println!("{}", join(a.iter()));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Emap { payload } => {
            let q = resolve_quiver(cli)?;
            let e = e_map(&q);
            match read_payload(payload.as_deref())? {
                None => print_map(cli, &e),
                Some(text) => {
                    let a = parse_vector(&parse_json(&text)?, e.ncols(), "word-exponent vector")?;
                    let t = Triangle::new(q.rank(), e.apply(&a));
                    print_triangle(cli, &t);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::String { payload } => {
            let q = resolve_quiver(cli)?;
            let text = read_payload(Some(payload))?.expect("payload is present");
            let t = Triangle::from_json(q.rank(), &parse_json(&text)?)?;
            let sv = string_of(&word_for_quiver(&q), &t);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_value(&sv).expect("string vector serializes")
                );
            } else {
                println!("word: {}", join(sv.word.iter()));
                println!("a:    {}", join(sv.a.iter()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Monomial { payload } => {
            let q = resolve_quiver(cli)?;
            let word = word_for_quiver(&q);
            let text = read_payload(Some(payload))?.expect("payload is present");
            let a = parse_vector(&parse_json(&text)?, word.len(), "word-exponent vector")?;
            let t = apply_monomial(&word, &a);
            print_triangle(cli, &t);
            Ok(ExitCode::SUCCESS)
        }
        Command::Cone { family } => {
            let q = resolve_quiver(cli)?;
            let (cone, title) = family_cone(*family, &q);
            if cli.json {
                println!("{}", cone.to_json());
            } else {
                print!("{}", cone_listing(&cone, &title, RenderFormat::Text));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check } => run_verify(cli, *check),
        Command::Render { artifact } => {
            run_render(cli, artifact)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The quiver named by `--quiver`, cross-checked against `--n` when both
/// are given.
fn resolve_quiver(cli: &Cli) -> Result<QuiverA, String> {
    let spec = cli
        .quiver
        .as_deref()
        .ok_or("this command needs --quiver")?;
    let q: QuiverA = spec
        .parse()
        .map_err(|e| format!("--quiver {spec:?}: {e}"))?;
    if let Some(n) = cli.n {
        if n != q.rank() {
            return Err(format!(
                "--n {n} conflicts with --quiver {spec} of rank {}",
                q.rank()
            ));
        }
    }
    Ok(q)
}

/// The rank named by `--n` or implied by `--quiver`.
fn resolve_rank(cli: &Cli) -> Result<usize, String> {
    if cli.quiver.is_some() {
        return Ok(resolve_quiver(cli)?.rank());
    }
    match cli.n {
        Some(0) => Err("--n must be at least 1".into()),
        Some(n) => Ok(n),
        None => Err("this command needs --n or --quiver".into()),
    }
}

/// The quivers a verify sweep covers: the one named by `--quiver`, or all
/// quivers of rank `--n`.
fn verify_targets(cli: &Cli) -> Result<Vec<QuiverA>, String> {
    if cli.quiver.is_some() {
        return Ok(vec![resolve_quiver(cli)?]);
    }
    match cli.n {
        Some(0) => Err("--n must be at least 1".into()),
        Some(n) => Ok(QuiverA::all(n)),
        None => Err("verify needs --quiver or --n".into()),
    }
}

fn read_payload(payload: Option<&str>) -> Result<Option<String>, String> {
    let Some(src) = payload else {
        return Ok(None);
    };
    let text = if src == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        buf
    } else {
        fs::read_to_string(src).map_err(|e| format!("{src}: {e}"))?
    };
    Ok(Some(text))
}

fn parse_json(text: &str) -> Result<Value, String> {
    serde_json::from_str(text).map_err(|e| format!("payload is not JSON: {e}"))
}

fn parse_vector(v: &Value, len: usize, what: &str) -> Result<Vec<i64>, String> {
    let arr = v
        .as_array()
        .ok_or_else(|| format!("{what} must be a JSON array"))?;
    if arr.len() != len {
        return Err(format!(
            "{what} must have {len} entries, got {}",
            arr.len()
        ));
    }
    arr.iter()
        .map(|x| {
            x.as_i64()
                .ok_or_else(|| format!("{what} entries must be integers"))
        })
        .collect()
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_triangle(cli: &Cli, t: &Triangle) {
    if cli.json {
        println!("{}", t.to_json());
    } else {
        print!("{}", triangle_values(t, RenderFormat::Text));
    }
}

fn print_map(cli: &Cli, m: &IntLinearMap) {
    if cli.json {
        println!("{}", m.to_json());
    } else {
        for line in symbolic_rows(m) {
            println!("{line}");
        }
    }
}

/// One `row_label = ±col ± col…` line per row, positive terms first.
fn symbolic_rows(m: &IntLinearMap) -> Vec<String> {
    let labels = m.col_labels();
    (0..m.nrows())
        .map(|r| {
            let row = &m.rows()[r];
            let mut expr = String::new();
            for positive in [true, false] {
                for (c, &v) in row.iter().enumerate() {
                    if v == 0 || (v > 0) != positive {
                        continue;
                    }
                    if expr.is_empty() {
                        if v < 0 {
                            expr.push('-');
                        }
                    } else {
                        expr.push_str(if v > 0 { " + " } else { " - " });
                    }
                    if v.unsigned_abs() != 1 {
                        expr.push_str(&format!("{}*", v.unsigned_abs()));
                    }
                    expr.push_str(&labels[c]);
                }
            }
            if expr.is_empty() {
                expr.push('0');
            }
            format!("{} = {}", m.row_labels()[r], expr)
        })
        .collect()
}

fn family_cone(family: Family, q: &QuiverA) -> (ConeSpec, String) {
    match family {
        Family::Lusztig => {
            let word = word_for_quiver(q);
            (lusztig_cone(&word), format!("lusztig cone of i({q})"))
        }
        Family::Cpbw => (c_pbw_cone(q), format!("adapted cone of {q}")),
        Family::Lpbw => (l_pbw_cone(q), format!("lusztig-image cone of {q}")),
    }
}

fn run_verify(cli: &Cli, check: Check) -> Result<ExitCode, String> {
    let targets = verify_targets(cli)?;
    let mut reports: Vec<VerificationReport> = Vec::new();
    for q in &targets {
        match check {
            Check::Coincide => reports.push(verify_coincide(q, cli.bound.unwrap_or(2))),
            Check::Inclusion => reports.push(verify_inclusion(q, cli.bound.unwrap_or(3))),
            Check::Correspondence => {
                reports.push(verify_cone_correspondence(q, cli.bound.unwrap_or(3)));
            }
            Check::Image => reports.push(verify_image(q, cli.bound.unwrap_or(2))),
            Check::All => {
                reports.push(verify_coincide(q, cli.bound.unwrap_or(2)));
                reports.push(verify_inclusion(q, cli.bound.unwrap_or(3)));
                reports.push(verify_cone_correspondence(q, cli.bound.unwrap_or(3)));
                reports.push(verify_image(q, cli.bound.unwrap_or(2)));
            }
        }
    }
    if check == Check::All {
        let mut ranks: Vec<usize> = targets.iter().map(QuiverA::rank).collect();
        ranks.sort_unstable();
        ranks.dedup();
        for n in ranks {
            reports.push(verify_crystal(n, cli.seed.unwrap_or(0)));
        }
    }

    let passed = reports.iter().all(|r| r.passed);
    if cli.json {
        let arr: Vec<Value> = reports.iter().map(VerificationReport::to_json).collect();
        println!("{}", Value::Array(arr));
    } else {
        for r in &reports {
            println!("{}", r.summary());
        }
        for r in reports.iter().filter(|r| !r.passed) {
            println!("{}", r.to_json());
        }
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_render(cli: &Cli, artifact: &Artifact) -> Result<(), String> {
    match artifact {
        Artifact::Triangle { payload, format } => {
            let n = resolve_rank(cli)?;
            let doc = match read_payload(payload.as_deref())? {
                Some(text) => {
                    let t = Triangle::from_json(n, &parse_json(&text)?)?;
                    triangle_values(&t, (*format).into())
                }
                None => triangle_labels(n, (*format).into()),
            };
            print!("{doc}");
        }
        Artifact::Slices { component, format } => {
            let q = resolve_quiver(cli)?;
            let doc = match component {
                Some(k) => component_panel(&q, *k, (*format).into()).map_err(|e| e.to_string())?,
                None => slice_numbers(&q, (*format).into()),
            };
            print!("{doc}");
        }
        Artifact::Cone { family, format } => {
            let q = resolve_quiver(cli)?;
            let (cone, title) = family_cone(*family, &q);
            print!("{}", cone_listing(&cone, &title, (*format).into()));
        }
    }
    Ok(())
}
