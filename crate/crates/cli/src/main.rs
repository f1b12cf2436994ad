//! Batch front-end: run the coherence checkers, export a slice of the ring
//! completion, compute component-ring tables, and run the pair-model
//! comparison. Exit codes: 0 clean, 1 axiom violation, 2 usage error,
//! 3 resource limit, 4 partition not stabilized at the given bounds.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rigcat::biperm::check_bipermutative;
use rigcat::cube::build_gr;
use rigcat::effcat::{Bound, CatError, Report};
use rigcat::examples::{example, registry, Example};
use rigcat::gq::gq_compare;
use rigcat::pi0::{alt_sum, grothendieck_oracle, pi0_stable, pi0_ring, verify_zigzag};
use rigcat::zeros::dhocolim;

#[derive(Parser)]
#[command(name = "rigcat", version, about = "coherence checking and ring completion at desk scale")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the permutative/bipermutative axiom suites on an example.
    Check(RunArgs),
    /// Export the level-0 slice of the ring completion as JSON.
    Complete(RunArgs),
    /// Compute the component ring table with inverse witnesses.
    Pi0(RunArgs),
    /// Compare the colimit against the pair model of group completion.
    #[command(name = "compare-gq")]
    CompareGq(RunArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Example name (see `--example help` for the list).
    #[arg(long)]
    example: Option<String>,
    /// Optional JSON config file; explicit flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Index-category size bound (grades n ≤ n-max, entries ≤ n-max).
    #[arg(long)]
    n_max: Option<usize>,
    /// Alias for --n-max, natural for matrix examples.
    #[arg(long)]
    rank_max: Option<usize>,
    /// Formal-sum length bound for colimit objects.
    #[arg(long)]
    len_max: Option<usize>,
    /// Enumeration cap on objects per category.
    #[arg(long)]
    count: Option<usize>,
    /// Randomized sample budget for the sampled law suites.
    #[arg(long)]
    samples: Option<usize>,
    /// RNG seed for the sampled law suites.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of derived simplicial levels above level 0.
    #[arg(long)]
    q_max: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also emit a DOT graph of the component zigzags.
    #[arg(long)]
    emit_dot: bool,
}

/// Fully resolved run configuration: defaults, then config file, then flags.
struct RunConfig {
    example: Example,
    bound: Bound,
    samples: usize,
    seed: u64,
    q_max: usize,
    format: Format,
    output: Option<PathBuf>,
    emit_dot: bool,
}

fn usage_err(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve(
    args: &RunArgs,
    dn: Option<usize>,
    dl: usize,
    dc: usize,
    dq: usize,
) -> Result<RunConfig, String> {
    let file: Value = match &args.config {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
            serde_json::from_str(&text)
                .map_err(|e| format!("config {} is not valid JSON: {e}", p.display()))?
        }
        None => Value::Null,
    };
    let from_file = |key: &str| file.get(key).cloned();
    let usize_of = |key: &str, flag: Option<usize>, dflt: usize| -> Result<usize, String> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match from_file(key) {
            Some(Value::Number(n)) => n
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| format!("config field {key} must be a nonnegative integer")),
            Some(_) => Err(format!("config field {key} must be a number")),
            None => Ok(dflt),
        }
    };
    let name = match (&args.example, from_file("example")) {
        (Some(n), _) => n.clone(),
        (None, Some(Value::String(n))) => n,
        (None, Some(_)) => return Err("config field example must be a string".into()),
        (None, None) => return Err("missing --example (or an example entry in --config)".into()),
    };
    let ex = example(&name).ok_or_else(|| {
        let known: Vec<&str> = registry().iter().map(|e| e.name).collect();
        format!("unknown example {name:?}; known: {}", known.join(", "))
    })?;
    let n = usize_of(
        "n_max",
        args.n_max.or(args.rank_max),
        dn.unwrap_or(ex.default_bound.size),
    )?;
    let l = usize_of("len_max", args.len_max, dl)?;
    let count = usize_of("count", args.count, dc)?;
    let samples = usize_of("samples", args.samples, 1000)?;
    let q_max = usize_of("q_max", args.q_max, dq)?;
    let seed = match (args.seed, from_file("seed")) {
        (Some(s), _) => s,
        (None, Some(Value::Number(s))) => {
            s.as_u64().ok_or("config field seed must be a nonnegative integer")?
        }
        (None, Some(_)) => return Err("config field seed must be a number".into()),
        (None, None) => 0,
    };
    let format = match (args.format, from_file("format")) {
        (Some(f), _) => f,
        (None, Some(Value::String(s))) => match s.as_str() {
            "json" => Format::Json,
            "text" => Format::Text,
            other => return Err(format!("config field format must be json|text, got {other:?}")),
        },
        (None, Some(_)) => return Err("config field format must be a string".into()),
        (None, None) => Format::Json,
    };
    let output = match (&args.output, from_file("output")) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(Value::String(s))) => Some(PathBuf::from(s)),
        (None, Some(_)) => return Err("config field output must be a string".into()),
        (None, None) => None,
    };
    Ok(RunConfig {
        example: ex,
        // `samples` budgets the seeded random suites only; the deterministic
        // checkers keep the default per-condition instance cap.
        bound: Bound::default().with_size(n).with_depth(l).with_count(count),
        samples,
        seed,
        q_max,
        format,
        output,
        emit_dot: args.emit_dot,
    })
}

fn bound_json(b: &Bound) -> Value {
    json!({ "n_max": b.size, "len_max": b.depth, "count": b.count, "instance_cap": b.tuples })
}

fn report_json(r: &Report) -> Value {
    json!({
        "checked": r.checked,
        "ok": r.ok(),
        "violations": r.violations.iter().map(|v| json!({
            "law": v.law,
            "detail": v.detail,
        })).collect::<Vec<_>>(),
    })
}

fn report_text(out: &mut String, r: &Report) {
    out.push_str(&format!("checked {} law instances\n", r.checked));
    if r.ok() {
        out.push_str("no violations\n");
    } else {
        out.push_str(&format!("{} violation(s):\n", r.violations.len()));
        for v in &r.violations {
            out.push_str(&format!("  [{}] {}\n", v.law, v.detail));
        }
    }
}

fn deliver(cfg: &RunConfig, body: &str) -> Result<(), String> {
    match &cfg.output {
        Some(p) => std::fs::write(p, body).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Writes the DOT companion: next to the main output file when there is
/// one, to stdout otherwise.
fn deliver_dot(cfg: &RunConfig, dot: &str) -> Result<(), String> {
    match &cfg.output {
        Some(p) => {
            let path = p.with_extension("dot");
            std::fs::write(&path, dot).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{dot}");
            Ok(())
        }
    }
}

fn exit_for(e: &CatError) -> ExitCode {
    match e {
        CatError::Resource(_) => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn cmd_check(cfg: &RunConfig) -> Result<ExitCode, String> {
    let axioms = check_bipermutative(&cfg.example.cat, &cfg.bound);
    // The sampled colimit suite only adds signal on a clean structure; on a
    // corrupted one the axiom report already names the failing law.
    let colimit = if axioms.ok() {
        let gr = build_gr(&cfg.example.cat);
        let h = rigcat::thomason::Hocolim::new(gr);
        Some(rigcat::thomason::check_hocolim_laws(&h, cfg.seed, cfg.samples, &cfg.bound))
    } else {
        None
    };
    let clean = axioms.ok() && colimit.as_ref().is_none_or(|r| r.ok());
    let body = match cfg.format {
        Format::Json => {
            let mut v = json!({
                "schema": 1,
                "command": "check",
                "example": cfg.example.name,
                "bound": bound_json(&cfg.bound),
                "seed": cfg.seed,
            });
            v["axioms"] = report_json(&axioms);
            if let Some(c) = &colimit {
                v["colimit_laws"] = report_json(c);
            }
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
        Format::Text => {
            let mut out = format!("check {} (n ≤ {})\n", cfg.example.name, cfg.bound.size);
            report_text(&mut out, &axioms);
            if let Some(c) = &colimit {
                out.push_str("sampled colimit laws:\n");
                report_text(&mut out, c);
            }
            out
        }
    };
    deliver(cfg, &body)?;
    Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_complete(cfg: &RunConfig) -> Result<ExitCode, String> {
    let gr = build_gr(&cfg.example.cat);
    let dh = dhocolim(&gr, cfg.q_max);
    let level0 = dh.level_cat(0);
    let objs = level0.base.enum_objects(&cfg.bound);
    let mut mors = Vec::new();
    for a in &objs {
        for c in &objs {
            for m in level0.base.enum_homs(a, c, &cfg.bound) {
                mors.push(json!({
                    "dom": format!("{:?}", m.dom),
                    "cod": format!("{:?}", m.cod),
                    "payload": format!("{:?}", m.pay),
                }));
            }
        }
    }
    let level_counts: Vec<usize> = (0..=cfg.q_max)
        .map(|q| dh.level_cat(q).base.enum_objects(&cfg.bound).len())
        .collect();
    let doc = json!({
        "schema": 1,
        "command": "complete",
        "example": cfg.example.name,
        "bound": bound_json(&cfg.bound),
        "q_max": cfg.q_max,
        "level_object_counts": level_counts,
        "level0": {
            "objects": objs.iter().map(|o| format!("{o:?}")).collect::<Vec<_>>(),
            "morphisms": mors,
        },
    });
    let body = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&doc).unwrap() + "\n",
        Format::Text => {
            let mut out = format!(
                "complete {}: {} level-0 objects, {} morphisms, levels 0..={}\n",
                cfg.example.name,
                objs.len(),
                mors.len(),
                cfg.q_max
            );
            for o in &objs {
                out.push_str(&format!("  {o:?}\n"));
            }
            out
        }
    };
    deliver(cfg, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn zigzag_dot(ring: &rigcat::pi0::Pi0Ring) -> String {
    let mut dot = String::from("digraph zigzags {\n  rankdir=LR;\n  node [shape=box];\n");
    for (ci, w) in ring.witnesses.iter().enumerate() {
        let Some(w) = w else { continue };
        dot.push_str(&format!(
            "  c{ci}_s0 [label=\"{:?} ⊕ {:?}\"];\n",
            w.object, w.partner
        ));
        let mut prev = format!("c{ci}_s0");
        for (si, (fwd, m)) in w.zigzag.iter().enumerate() {
            let node = format!("c{ci}_s{}", si + 1);
            let label = if *fwd { &m.cod } else { &m.dom };
            dot.push_str(&format!("  {node} [label=\"{label:?}\"];\n"));
            if *fwd {
                dot.push_str(&format!("  {prev} -> {node};\n"));
            } else {
                dot.push_str(&format!("  {node} -> {prev};\n"));
            }
            prev = node;
        }
    }
    dot.push_str("}\n");
    dot
}

fn cmd_pi0(cfg: &RunConfig) -> Result<ExitCode, String> {
    let gr = build_gr(&cfg.example.cat);
    let q = cfg.q_max.max(1);
    let dh = dhocolim(&gr, q);
    let ring = match pi0_ring(&dh, &cfg.bound) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(exit_for(&e));
        }
    };
    let level0 = dh.level_cat(0);
    let larger = cfg.bound.with_count(cfg.bound.count + cfg.bound.count / 4);
    let stable = match pi0_stable(&level0.base, &cfg.bound, &larger) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(exit_for(&e));
        }
    };
    let oracle = grothendieck_oracle(&cfg.example.pi0, 8).map_err(|e| e.to_string())?;
    let mut classes = Vec::new();
    for (ci, rep) in ring.reps.iter().enumerate() {
        let label = match alt_sum(rep, &cfg.example.pi0, &oracle) {
            Ok(k) => json!({ "pos": k.pos, "neg": k.neg }),
            Err(_) => Value::Null,
        };
        let verified = ring.witnesses[ci]
            .as_ref()
            .is_some_and(|w| verify_zigzag(&dh.levels[0].h, w).is_ok());
        classes.push(json!({
            "class": ci,
            "representative": format!("{rep:?}"),
            "alt_sum": label,
            "inverse_witness_verified": verified,
        }));
    }
    let doc = json!({
        "schema": 1,
        "command": "pi0",
        "example": cfg.example.name,
        "bound": bound_json(&cfg.bound),
        "q_max": q,
        "stabilized": stable,
        "incomplete": ring.incomplete,
        "zero_class": ring.zero,
        "one_class": ring.one,
        "classes": classes,
        "add_table": ring.add,
        "mul_table": ring.mul,
        "ring_axioms": report_json(&ring.report),
    });
    let body = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&doc).unwrap() + "\n",
        Format::Text => {
            let mut out = format!(
                "pi0 {}: {} classes (zero = {}, one = {}), stabilized = {stable}\n",
                cfg.example.name,
                ring.reps.len(),
                ring.zero,
                ring.one
            );
            for c in &classes {
                out.push_str(&format!(
                    "  class {}: {} alt_sum={}\n",
                    c["class"], c["representative"], c["alt_sum"]
                ));
            }
            out.push_str(&format!("add: {:?}\nmul: {:?}\n", ring.add, ring.mul));
            report_text(&mut out, &ring.report);
            out
        }
    };
    deliver(cfg, &body)?;
    if cfg.emit_dot {
        deliver_dot(cfg, &zigzag_dot(&ring))?;
    }
    if !ring.report.ok() {
        return Ok(ExitCode::from(1));
    }
    if !stable || ring.incomplete {
        eprintln!("partition not stabilized at count {}; raise --count", cfg.bound.count);
        return Ok(ExitCode::from(4));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare_gq(cfg: &RunConfig) -> Result<ExitCode, String> {
    let comp = match gq_compare(&cfg.example.cat, &cfg.bound) {
        Ok(c) => c,
        Err(CatError::Structural(msg)) if msg.contains("not a groupoid") => {
            return Err(format!("{}: {msg}", cfg.example.name));
        }
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(exit_for(&e));
        }
    };
    let h = comp.colimit.as_permcat();
    let objs = h.base.enum_objects(&cfg.bound);
    let mut functorial = Report::default();
    let budget = cfg.samples.max(200) as u64;
    'sweep: for a in &objs {
        for mid in &objs {
            for f in h.base.enum_homs(a, mid, &cfg.bound) {
                for c in &objs {
                    for g in h.base.enum_homs(mid, c, &cfg.bound) {
                        let gf = comp.colimit.compose(&g, &f).map_err(|e| e.to_string())?;
                        let lhs = comp.functor.mor(&gf);
                        let rhs = comp.pairs.comp(&comp.functor.mor(&g), &comp.functor.mor(&f));
                        functorial.check("functoriality", lhs == rhs, || {
                            format!("image of composite differs on {f:?} ; {g:?}")
                        });
                        if functorial.checked >= budget {
                            break 'sweep;
                        }
                    }
                }
            }
        }
    }
    let ph = rigcat::pi0::pi0(&h.base, &cfg.bound).map_err(|e| e.to_string())?;
    let pg = rigcat::pi0::pi0(&comp.pairs.base, &cfg.bound).map_err(|e| e.to_string())?;
    let mut map: std::collections::BTreeMap<usize, usize> = Default::default();
    let mut well_defined = true;
    for obj in &ph.objects {
        let img = comp.functor.obj(obj);
        if let Some(gc) = pg.class_of(&img) {
            let hc = ph.class_of(obj).unwrap();
            if *map.entry(hc).or_insert(gc) != gc {
                well_defined = false;
            }
        }
    }
    let images: std::collections::BTreeSet<usize> = map.values().copied().collect();
    let injective = images.len() == map.len();
    let surjective = images.len() == pg.num_classes();
    let bijective = well_defined && injective && surjective;
    let doc = json!({
        "schema": 1,
        "command": "compare-gq",
        "example": cfg.example.name,
        "bound": bound_json(&cfg.bound),
        "functorial": report_json(&functorial),
        "pi0": {
            "colimit_classes_mapped": map.len(),
            "pair_classes": pg.num_classes(),
            "well_defined": well_defined,
            "injective": injective,
            "surjective": surjective,
            "bijective": bijective,
        },
    });
    let body = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&doc).unwrap() + "\n",
        Format::Text => {
            let mut out = format!(
                "compare-gq {}: bijective = {bijective} ({} ↔ {} classes)\n",
                cfg.example.name,
                map.len(),
                pg.num_classes()
            );
            report_text(&mut out, &functorial);
            out
        }
    };
    deliver(cfg, &body)?;
    if !functorial.ok() {
        return Ok(ExitCode::from(1));
    }
    if !well_defined {
        eprintln!("component map not yet well-defined at count {}; raise --count", cfg.bound.count);
        return Ok(ExitCode::from(4));
    }
    Ok(if bijective { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Check(a) => resolve(a, None, 3, 64, 0).map(|cfg| cmd_check(&cfg)),
        Cmd::Complete(a) => resolve(a, Some(1), 2, 24, 0).map(|cfg| cmd_complete(&cfg)),
        Cmd::Pi0(a) => resolve(a, Some(1), 2, 220, 1).map(|cfg| cmd_pi0(&cfg)),
        Cmd::CompareGq(a) => resolve(a, Some(1), 2, 200, 0).map(|cfg| cmd_compare_gq(&cfg)),
    };
    match result {
        Err(msg) => usage_err(&msg),
        Ok(Err(msg)) => usage_err(&msg),
        Ok(Ok(code)) => code,
    }
}
