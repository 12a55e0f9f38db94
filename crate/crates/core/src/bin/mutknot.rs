use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use mutknot::coloredjones::{colored_jones_with, ColoredJonesOptions};
use mutknot::khovanov::{format_kh, kh_diff, khovanov_with, BigradedGroups, Group, KhOptions};
use mutknot::mutation::{cable, cabled_mutate, close, data, CableSpec, Closure, Involution, Tangle};
use mutknot::pipeline::{classify, ingest, parse_decimal, report, resolve_knot, ClassifyOptions, KnotRecord, ReportMode};
use mutknot::skein::{alexander, homfly_with, jones, kauffman_poly_with, SkeinOptions};
use mutknot::{diagram, Error, PlanarDiagram, Result};

/// Knot diagrams, mutation and the invariants that separate mutants.
#[derive(Parser)]
#[command(name = "mutknot", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Directory searched for `<name>.pd` knot files (repeatable).
    #[arg(long = "knots", global = true, value_name = "DIR")]
    knots: Vec<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a diagram and print its basic data.
    Parse { knot: String },
    /// Compute invariants (Jones, HOMFLY-PT, Kauffman, Alexander and signature
    /// when no flag is given).
    Invariants(InvArgs),
    /// Mutate a region of a knot, or a tangle.
    Mutate(MutateArgs),
    /// Replace the strings of a tangle by parallel copies.
    Cable {
        #[arg(long)]
        tangle: String,
        /// Copies of the two strings, `n,m`.
        #[arg(long, default_value = "1,1")]
        spec: String,
        /// Framing of the two strings, `f0,f1` (default: blackboard).
        #[arg(long, allow_hyphen_values = true)]
        framing: Option<String>,
    },
    /// Close a tangle into a knot or link.
    Close {
        #[arg(long)]
        tangle: String,
        #[arg(long, default_value = "numerator")]
        closure: String,
    },
    /// Almost-mutant classes of the knots in the given files or directories.
    Classify {
        paths: Vec<PathBuf>,
        #[arg(long, default_value = "1e-9")]
        volume_tol: String,
        /// Also classify mirror images.
        #[arg(long)]
        mirrors: bool,
        /// Compare Khovanov homology within each class.
        #[arg(long)]
        kh: bool,
    },
    /// Bidegrees where the Khovanov homology of two knots differs.
    KhDiff {
        k1: String,
        k2: String,
        #[arg(long)]
        reduced: bool,
    },
}

#[derive(Args)]
struct InvArgs {
    knot: String,
    #[arg(long)]
    jones: bool,
    #[arg(long)]
    homfly: bool,
    #[arg(long)]
    kauffman: bool,
    #[arg(long)]
    alexander: bool,
    #[arg(long)]
    signature: bool,
    #[arg(long)]
    kh: bool,
    #[arg(long)]
    reduced_kh: bool,
    #[arg(long, value_name = "N")]
    colored_jones: Option<usize>,
    /// Skein-tree node limit for HOMFLY-PT and Kauffman.
    #[arg(long, default_value_t = SkeinOptions::default().node_limit)]
    node_limit: u64,
    /// Largest crossing number accepted by Khovanov homology.
    #[arg(long, default_value_t = KhOptions::default().max_crossings)]
    max_kh_crossings: usize,
    /// Largest frontier for the coloured Jones sweep.
    #[arg(long, default_value_t = ColoredJonesOptions::default().max_width)]
    max_width: usize,
}

#[derive(Args)]
struct MutateArgs {
    /// Knot whose region is mutated.
    knot: Option<String>,
    /// Crossing indices of the region, comma separated.
    #[arg(long)]
    region: Option<String>,
    /// Tangle to mutate instead of a knot region.
    #[arg(long, conflicts_with_all = ["knot", "region"])]
    tangle: Option<String>,
    #[arg(long, short = 's')]
    involution: String,
    /// Cable sizes `n,m` of the region (cabled mutation).
    #[arg(long, default_value = "1,1")]
    cable: String,
    /// With `--tangle`: close the tangle and its mutant.
    #[arg(long)]
    closure: Option<String>,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse { pos: 0, msg: msg.into() }
}

fn pair(text: &str, what: &str) -> Result<(i64, i64)> {
    let (a, b) = text.split_once(',').ok_or_else(|| usage(format!("{what}: expected 'a,b'")))?;
    let p = |s: &str| s.trim().parse::<i64>().map_err(|_| usage(format!("{what}: bad number '{s}'")));
    Ok((p(a)?, p(b)?))
}

fn spec(text: &str) -> Result<CableSpec> {
    let (n, m) = pair(text, "cable spec")?;
    if n < 1 || m < 1 {
        return Err(usage("cable spec: sizes must be positive"));
    }
    CableSpec::new(n as usize, m as usize)
}

fn load_tangle(arg: &str) -> Result<Tangle> {
    if let Some(t) = data::builtin_tangle(arg) {
        return Ok(t);
    }
    let p = Path::new(arg);
    if p.is_file() {
        return Tangle::parse(&std::fs::read_to_string(p)?);
    }
    Tangle::parse(&arg.replace(';', "\n"))
}

fn diagram_json(d: &PlanarDiagram) -> Value {
    json!({
        "pd": d.to_pd_string(),
        "crossings": d.n_crossings(),
        "components": d.n_components(),
        "writhe": d.writhe(),
    })
}

fn group_json(g: &Group) -> Value {
    json!({ "rank": g.rank, "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>() })
}

fn kh_json(g: &BigradedGroups) -> Value {
    let t = format_kh(g);
    json!({ "ranks": t.ranks, "torsion": t.torsion })
}

struct Out {
    json: bool,
    value: serde_json::Map<String, Value>,
    text: Vec<String>,
}

impl Out {
    fn new(json: bool) -> Out {
        Out { json, value: serde_json::Map::new(), text: Vec::new() }
    }

    fn put(&mut self, key: &str, v: Value, text: impl Into<String>) {
        self.value.insert(key.to_string(), v);
        self.text.push(text.into());
    }

    fn print(self) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&Value::Object(self.value)).expect("json"));
        } else {
            for t in self.text {
                println!("{t}");
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let mut dirs: Vec<&Path> = cli.knots.iter().map(PathBuf::as_path).collect();
    if dirs.is_empty() && Path::new("knots").is_dir() {
        dirs.push(Path::new("knots"));
    }
    let knot = |arg: &str| resolve_knot(arg, &dirs);
    let mut out = Out::new(cli.json);
    match cli.cmd {
        Cmd::Parse { knot: k } => {
            let r = knot(&k)?;
            let d = &r.diagram;
            out.put("name", json!(r.name), format!("name: {}", r.name));
            out.put("diagram", diagram_json(d), format!("crossings: {}  components: {}  writhe: {}", d.n_crossings(), d.n_components(), d.writhe()));
            if d.is_knot() && d.n_crossings() > 0 {
                let dt = diagram::canonical_dt(d)?;
                out.put("dt", json!(dt), format!("dt: {}", dt.iter().map(i32::to_string).collect::<Vec<_>>().join(" ")));
            }
            out.put("pd_text", json!(d.to_pd_string()), format!("pd: {}", d.to_pd_string()));
        }
        Cmd::Invariants(a) => invariants(&knot(&a.knot)?, &a, &mut out)?,
        Cmd::Mutate(a) => {
            let s: Involution = a.involution.parse()?;
            let sp = spec(&a.cable)?;
            if let Some(t) = a.tangle {
                let t = load_tangle(&t)?;
                let m = t.mutate(s);
                out.put("tangle", json!(m.to_string()), m.to_string().trim_end().to_string());
                out.put("string_preserving", json!(t.is_string_preserving(s)), format!("string-preserving: {}", t.is_string_preserving(s)));
                if let Some(c) = a.closure {
                    let c = Closure::parse(&c)?;
                    let before = close(&t, &c)?.diagram;
                    let after = close(&m, &c)?.diagram;
                    out.put("original", diagram_json(&before), format!("original: {}", before.to_pd_string()));
                    out.put("mutant", diagram_json(&after), format!("mutant: {}", after.to_pd_string()));
                }
            } else {
                let k = knot(a.knot.as_deref().ok_or_else(|| usage("mutate needs a knot with --region, or --tangle"))?)?;
                let region: Vec<usize> = a
                    .region
                    .ok_or_else(|| usage("mutate needs --region"))?
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| usage(format!("bad crossing index '{x}'"))))
                    .collect::<Result<_>>()?;
                let m = cabled_mutate(&k.diagram, &region, s, sp)?;
                out.put("mutant", diagram_json(&m), format!("mutant: {}", m.to_pd_string()));
            }
        }
        Cmd::Cable { tangle, spec: sp, framing } => {
            let mut t = load_tangle(&tangle)?;
            if let Some(f) = framing {
                let (a, b) = pair(&f, "framing")?;
                t = t.with_framing([a as i32, b as i32]);
            }
            let c = cable(&t, spec(&sp)?);
            out.put("crossings", json!(c.n_crossings()), format!("crossings: {}", c.n_crossings()));
            out.put("tangle", json!(c.to_string()), c.to_string().trim_end().to_string());
        }
        Cmd::Close { tangle, closure } => {
            let t = load_tangle(&tangle)?;
            let c = close(&t, &Closure::parse(&closure)?)?;
            let d = &c.diagram;
            out.put("diagram", diagram_json(d), format!("components: {}  crossings: {}", d.n_components(), d.n_crossings()));
            out.put("is_knot", json!(c.is_knot()), if c.is_knot() { "knot".to_string() } else { "link (more than one component)".to_string() });
            out.put("pd_text", json!(d.to_pd_string()), format!("pd: {}", d.to_pd_string()));
        }
        Cmd::Classify { paths, volume_tol, mirrors, kh } => {
            let tol = parse_decimal(&volume_tol).ok_or_else(|| usage(format!("bad tolerance '{volume_tol}'")))?;
            let records = ingest(&paths)?;
            let classes = classify(&records, &ClassifyOptions { volume_tol: tol, mirrors })?;
            let mode = if kh { ReportMode::Khovanov } else { ReportMode::Summary };
            let rep = report(&classes, &records, mode)?;
            out.put("classes", serde_json::to_value(&classes).expect("json"), format!("{} records, {} classes", records.len(), classes.len()));
            out.put("report", serde_json::to_value(&rep).expect("json"), rep.to_string().trim_end().to_string());
        }
        Cmd::KhDiff { k1, k2, reduced } => {
            let opts = KhOptions { reduced, ..KhOptions::default() };
            let a = khovanov_with(&knot(&k1)?.diagram, opts)?.0;
            let b = khovanov_with(&knot(&k2)?.diagram, opts)?.0;
            let diff = kh_diff(&a, &b);
            let rows: Vec<Value> =
                diff.iter().map(|d| json!({ "i": d.i, "j": d.j, "left": group_json(&d.left), "right": group_json(&d.right) })).collect();
            let mut text = vec![format!("{} differing bidegrees", diff.len())];
            for d in &diff {
                text.push(format!("  (i={}, j={}): {} vs {}", d.i, d.j, d.left, d.right));
            }
            out.put("differences", json!(rows), text.join("\n"));
            out.put("differs", json!(!diff.is_empty()), String::new());
        }
    }
    out.print();
    Ok(())
}

fn invariants(r: &KnotRecord, a: &InvArgs, out: &mut Out) -> Result<()> {
    let d = &r.diagram;
    let none = !(a.jones || a.homfly || a.kauffman || a.alexander || a.signature || a.kh || a.reduced_kh || a.colored_jones.is_some());
    let skein = SkeinOptions { node_limit: a.node_limit };
    out.put("name", json!(r.name), format!("name: {}", r.name));
    if a.jones || none {
        let v = jones(d)?;
        out.put("jones", serde_json::to_value(v.to_json()).expect("json"), format!("jones: {v}"));
    }
    if a.homfly || none {
        let p = homfly_with(d, skein)?;
        out.put("homfly", serde_json::to_value(p.to_json()).expect("json"), format!("homfly:\n{}", p.table(2)));
    }
    if a.kauffman || none {
        let f = kauffman_poly_with(d, skein)?;
        out.put("kauffman", serde_json::to_value(f.to_json()).expect("json"), format!("kauffman:\n{}", f.table(1)));
    }
    if a.alexander || none {
        let v = alexander(d)?;
        out.put("alexander", serde_json::to_value(v.to_json()).expect("json"), format!("alexander: {v}"));
    }
    if a.signature || none {
        let s = diagram::signature(d)?;
        out.put("signature", json!(s), format!("signature: {s}"));
    }
    for (flag, reduced, key) in [(a.kh, false, "khovanov"), (a.reduced_kh, true, "reduced_khovanov")] {
        if flag {
            let opts = KhOptions { reduced, max_crossings: a.max_kh_crossings, ..KhOptions::default() };
            let g = khovanov_with(d, opts)?.0;
            out.put(key, kh_json(&g), format!("{key}:\n{}", format_kh(&g).to_string().trim_end()));
        }
    }
    if let Some(n) = a.colored_jones {
        let opts = ColoredJonesOptions { max_width: a.max_width, ..ColoredJonesOptions::default() };
        let j = colored_jones_with(d, n, opts)?;
        out.put("colored_jones", json!({ "color": n, "value": j.to_json() }), format!("colored jones J_{n}: {j}"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if json {
                println!("{}", json!({ "error": e.to_string(), "exit_code": e.exit_code() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
