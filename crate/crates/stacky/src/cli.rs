//! Command-line front end.
//!
//! Every verb prints one JSON object (or one table row per result) tagged
//! with `"schema": "v1"` and the verb name. Scans print one JSON object per
//! line in input order; a failing item carries an `"error"` field instead
//! of aborting the scan. Exit codes: 0 success, 2 invalid input, 3 a
//! configured bound or budget was exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::algebra::catalog::{abelian, alternating, describe, dicyclic, dihedral, minimal_panel, product, quaternion, small_groups, symmetric};
use crate::algebra::textfmt::parse_group_with;
use crate::algebra::{cyclic, FinAbGroup, FiniteGroup};
use crate::error::{Error, Result};
use crate::fpgroup::{parse_presentation, todd_coxeter, CosetResult, Word};
use crate::gerbe::{classify_over_p, dn_trivial_band_classes};
use crate::limits::Limits;
use crate::orbifold::{football, heisenberg_witness, psl2_witness, triangle_group_with, OrbifoldCurve, OrbifoldCurveData};
use crate::twogroup::cohomology::{h2_with, GammaModule};
use crate::wpgl::{class_size_dd, classify_spherical_mn, Pgl2Image};

pub const SCHEMA: &str = "v1";

/// Exit code for invalid input.
pub const EXIT_INVALID: i32 = 2;
/// Exit code for an exceeded bound or budget.
pub const EXIT_BOUND: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "stacky", version, about = "Classification of orbifold and Deligne-Mumford curves")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Coset-table limit for Todd-Coxeter.
    #[arg(long, global = true)]
    max_cosets: Option<usize>,
    /// Node budget for homomorphism counting.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Target groups for homomorphism profiles.
    #[arg(long, value_enum, default_value_t = Panel::Minimal, global = true)]
    panel: Panel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Panel {
    Small24,
    Minimal,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Uniformization type of an orbifold curve given as JSON
    /// `{"genus", "orders", "punctures", "compact"}`.
    ClassifyOrbifold { curve: String },
    /// Fundamental-group presentation and abelianization of an orbifold curve.
    Pi1 {
        curve: String,
        /// Also count homomorphisms into the panel.
        #[arg(long)]
        profile: bool,
    },
    /// Triangle group type; `--scan N` runs over all sorted triples in `1..=N`.
    Triangle {
        orders: Vec<u64>,
        #[arg(long)]
        scan: Option<u64>,
    },
    /// Football fundamental groups; `--scan N` runs over `1 <= m, n <= N`.
    Footballs {
        orders: Vec<u64>,
        #[arg(long)]
        scan: Option<u64>,
    },
    /// Gerbes over P(m, n) up to Out(H), or over the disc with an order-`disc` point.
    Gerbes {
        #[arg(long = "H")]
        h: String,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long)]
        disc: Option<u64>,
    },
    /// Spherical curves with universal cover P(m, n), m != n, and fundamental group Gamma.
    Spherical {
        #[arg(long = "Gamma")]
        gamma: String,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Conjugacy class size over P(d, d) for a surjection Gamma -> image.
    DdClasses {
        #[arg(long = "Gamma")]
        gamma: String,
        /// Image group; defaults to Gamma with the identity map.
        #[arg(long)]
        image: Option<String>,
        /// Element map Gamma -> image as a JSON list.
        #[arg(long)]
        chi: Option<String>,
        #[arg(long)]
        d: u64,
    },
    /// H^2(Gamma, A) with trivial action; `--scan N` tabulates Z_n with Z_m for n, m <= N.
    H2 {
        #[arg(long = "Gamma")]
        gamma: Option<String>,
        /// Invariant factors of A, comma separated.
        #[arg(long = "A")]
        a: Option<String>,
        #[arg(long)]
        scan: Option<u64>,
    },
    /// Todd-Coxeter index of a subgroup (the group order by default).
    CosetEnum {
        presentation: String,
        /// Subgroup generators as words in the presentation's letters.
        #[arg(long)]
        subgroup: Vec<String>,
    },
    /// Finite quotients certifying cone-point injectivity.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
}

#[derive(Subcommand, Debug)]
enum WitnessKind {
    Heisenberg { n: u64 },
    Psl2 {
        m: u64,
        n: u64,
        p: u64,
        #[arg(long, default_value_t = 101)]
        q_max: u64,
    },
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `args` (without the program name). `env_budget` is the
/// value of `STACKY_BUDGET`, used when `--budget` is absent.
pub fn run<S: AsRef<str>>(args: &[S], env_budget: Option<&str>) -> Outcome {
    let argv = std::iter::once("stacky").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INVALID, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match limits(&cli.common, env_budget).and_then(|l| dispatch(&cli, &l)) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_bound() {
        EXIT_BOUND
    } else {
        EXIT_INVALID
    }
}

fn limits(c: &Common, env_budget: Option<&str>) -> Result<Limits> {
    let mut l = Limits::default();
    if let Some(raw) = env_budget {
        l.hom_budget = raw.trim().parse().map_err(|_| Error::invalid(format!("STACKY_BUDGET={raw:?} is not a number")))?;
    }
    if let Some(b) = c.budget {
        l.hom_budget = b;
    }
    if let Some(m) = c.max_cosets {
        l.max_cosets = m;
    }
    Ok(l)
}

/// A group argument: `Z<n>`, `C<n>`, `D<n>` (order `2n`), `Dic<n>`, `S<n>`,
/// `A<n>`, `Q8`, `V4`, `1`, products joined by `x`, `@path` to a group
/// file, or inline `perm`/`table` text with `;` for line breaks.
pub fn parse_group_arg(text: &str, limits: &Limits) -> Result<FiniteGroup> {
    let text = text.trim();
    if let Some(path) = text.strip_prefix('@') {
        let body = std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?;
        return parse_group_with(&body, limits);
    }
    if text.starts_with("perm") || text.starts_with("table") {
        return parse_group_with(&text.replace(';', "\n"), limits);
    }
    let factors: Vec<FiniteGroup> = text.split('x').map(preset).collect::<Result<_>>()?;
    let mut g = factors[0].clone();
    for f in &factors[1..] {
        g = product(&g, f);
    }
    Ok(g)
}

fn preset(name: &str) -> Result<FiniteGroup> {
    let bad = || Error::invalid(format!("unknown group {name:?}"));
    let num = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix).and_then(|s| s.parse().ok()) };
    let g = match name {
        "1" => FiniteGroup::trivial(),
        "Q8" => quaternion(),
        "V4" => abelian(&[2, 2]),
        _ => {
            if let Some(n) = num("Dic") {
                if n < 2 {
                    return Err(bad());
                }
                dicyclic(n)
            } else if let Some(n) = num("Z").or_else(|| num("C")) {
                if n == 0 {
                    return Err(bad());
                }
                cyclic(n)
            } else if let Some(n) = num("D") {
                if n < 1 {
                    return Err(bad());
                }
                dihedral(n)
            } else if let Some(n) = num("S") {
                if !(1..=7).contains(&n) {
                    return Err(bad());
                }
                symmetric(n)
            } else if let Some(n) = num("A") {
                if !(1..=7).contains(&n) {
                    return Err(bad());
                }
                alternating(n)
            } else {
                return Err(bad());
            }
        }
    };
    Ok(g)
}

fn tagged(verb: &str, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("verb".into(), json!(verb));
    if let Value::Object(fields) = body {
        map.extend(fields);
    }
    Value::Object(map)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn error_value(e: &Error) -> Value {
    json!({ "error": { "kind": if e.is_bound() { "bound" } else { "invalid" }, "message": e.to_string() } })
}

/// A single report, or a scan's per-item results.
enum Report {
    One { json: Value, table: Vec<String> },
    Scan(Vec<(Value, String)>),
}

fn render(verb: &str, format: Format, report: Report) -> String {
    let mut out = String::new();
    match report {
        Report::One { json, table } => match format {
            Format::Json => {
                out.push_str(&serde_json::to_string(&tagged(verb, json)).expect("json"));
                out.push('\n');
            }
            Format::Table => {
                for row in table {
                    out.push_str(&row);
                    out.push('\n');
                }
            }
        },
        Report::Scan(items) => {
            for (index, (json, row)) in items.into_iter().enumerate() {
                match format {
                    Format::Json => {
                        let mut v = tagged(verb, json);
                        v.as_object_mut().expect("object").insert("index".into(), json!(index));
                        out.push_str(&serde_json::to_string(&v).expect("json"));
                    }
                    Format::Table => out.push_str(&row),
                }
                out.push('\n');
            }
        }
    }
    out
}

fn curve_arg(text: &str) -> Result<OrbifoldCurve> {
    let data: OrbifoldCurveData = serde_json::from_str(text).map_err(|e| Error::invalid(format!("curve JSON: {e}")))?;
    OrbifoldCurve::try_from(data)
}

fn dispatch(cli: &Cli, limits: &Limits) -> Result<String> {
    let (verb, report) = match &cli.verb {
        Verb::ClassifyOrbifold { curve } => ("classify-orbifold", classify_orbifold(curve)?),
        Verb::Pi1 { curve, profile } => ("pi1", pi1(curve, *profile, cli.common.panel, limits)?),
        Verb::Triangle { orders, scan } => ("triangle", triangle(orders, *scan, limits)?),
        Verb::Footballs { orders, scan } => ("footballs", footballs(orders, *scan)?),
        Verb::Gerbes { h, m, n, disc } => ("gerbes", gerbes(h, *m, *n, *disc, limits)?),
        Verb::Spherical { gamma, m, n } => ("spherical", spherical(gamma, *m, *n, limits)?),
        Verb::DdClasses { gamma, image, chi, d } => ("dd-classes", dd_classes(gamma, image.as_deref(), chi.as_deref(), *d, limits)?),
        Verb::H2 { gamma, a, scan } => ("h2", h2_verb(gamma.as_deref(), a.as_deref(), *scan, limits)?),
        Verb::CosetEnum { presentation, subgroup } => ("coset-enum", coset_enum(presentation, subgroup, limits)?),
        Verb::Witness { kind } => ("witness", witness(kind)?),
    };
    Ok(render(verb, cli.common.format, report))
}

fn classify_orbifold(text: &str) -> Result<Report> {
    let c = curve_arg(text)?;
    let u = c.uniformization();
    let json = json!({
        "curve": to_value(&OrbifoldCurveData::from(&c)),
        "euler_weight": c.euler_weight().to_string(),
        "uniformization": to_value(&u),
    });
    Ok(Report::One { json, table: vec![u.to_string()] })
}

fn pi1(text: &str, profile: bool, panel: Panel, limits: &Limits) -> Result<Report> {
    let c = curve_arg(text)?;
    let p = c.pi1_presentation();
    let (free_rank, torsion) = p.abelianization();
    let mut json = json!({
        "presentation": p.to_string(),
        "abelianization": { "free_rank": free_rank, "torsion": torsion.factors() },
        "simply_connected": c.is_simply_connected(),
    });
    let mut table = vec![p.to_string(), format!("abelianization Z^{free_rank} + {torsion}")];
    if profile {
        let groups: Vec<FiniteGroup> = match panel {
            Panel::Small24 => small_groups().to_vec(),
            Panel::Minimal => minimal_panel(),
        };
        let prof = crate::fpgroup::hom_profile_with(&p, &groups, limits)?;
        table.extend(prof.entries.iter().map(|e| format!("{} {}", e.target, e.count)));
        json["profile"] = to_value(&prof);
    }
    Ok(Report::One { json, table })
}

fn triangle_item(p: u64, q: u64, r: u64, limits: &Limits) -> (Value, String) {
    match triangle_group_with(p, q, r, limits) {
        Ok(t) => (json!({ "p": p, "q": q, "r": r, "class": to_value(&t) }), format!("{p} {q} {r} {t}")),
        Err(e) => {
            let mut v = error_value(&e);
            v["p"] = json!(p);
            v["q"] = json!(q);
            v["r"] = json!(r);
            (v, format!("{p} {q} {r} error: {e}"))
        }
    }
}

fn triangle(orders: &[u64], scan: Option<u64>, limits: &Limits) -> Result<Report> {
    if let Some(max) = scan {
        let mut triples = Vec::new();
        for p in 1..=max {
            for q in p..=max {
                for r in q..=max {
                    triples.push((p, q, r));
                }
            }
        }
        let items = triples.into_par_iter().map(|(p, q, r)| triangle_item(p, q, r, limits)).collect();
        return Ok(Report::Scan(items));
    }
    let [p, q, r] = <[u64; 3]>::try_from(orders).map_err(|_| Error::invalid("triangle needs three orders or --scan"))?;
    let t = triangle_group_with(p, q, r, limits)?;
    Ok(Report::One { json: json!({ "p": p, "q": q, "r": r, "class": to_value(&t) }), table: vec![t.to_string()] })
}

fn football_item(m: u64, n: u64) -> Result<(Value, String)> {
    let f = football(m, n)?;
    let (free_rank, torsion) = OrbifoldCurve::football(m, n)?.pi1_presentation().abelianization();
    let json = json!({
        "m": m,
        "n": n,
        "pi1": f.pi1.factors(),
        "presentation_abelianization": { "free_rank": free_rank, "torsion": torsion.factors() },
        "cover": [f.cover.0, f.cover.1],
    });
    Ok((json, format!("{m} {n} {} P({},{})", f.pi1, f.cover.0, f.cover.1)))
}

fn footballs(orders: &[u64], scan: Option<u64>) -> Result<Report> {
    if let Some(max) = scan {
        let pairs: Vec<(u64, u64)> = (1..=max).flat_map(|m| (1..=max).map(move |n| (m, n))).collect();
        let items = pairs
            .into_par_iter()
            .map(|(m, n)| football_item(m, n).unwrap_or_else(|e| (error_value(&e), format!("{m} {n} error: {e}"))))
            .collect();
        return Ok(Report::Scan(items));
    }
    let [m, n] = <[u64; 2]>::try_from(orders).map_err(|_| Error::invalid("footballs needs two orders or --scan"))?;
    let (json, row) = football_item(m, n)?;
    Ok(Report::One { json, table: vec![row] })
}

fn gerbes(h: &str, m: u64, n: u64, disc: Option<u64>, limits: &Limits) -> Result<Report> {
    let g = parse_group_arg(h, limits)?;
    if let Some(k) = disc {
        let classes = dn_trivial_band_classes(&g, k)?;
        let table = classes.iter().map(|c| format!("a={}", c.a)).collect();
        return Ok(Report::One { json: json!({ "H": to_value(&describe(&g)), "n": k, "classes": to_value(&classes) }), table });
    }
    let orbits = classify_over_p(&g, m, n)?;
    let table = orbits
        .iter()
        .map(|o| {
            let orbit: Vec<String> = o.orbit.iter().map(usize::to_string).collect();
            format!("a={} orbit={{{}}} pi1={}", o.a, orbit.join(","), o.pi1.name)
        })
        .collect();
    Ok(Report::One { json: json!({ "H": to_value(&describe(&g)), "m": m, "n": n, "classes": to_value(&orbits) }), table })
}

fn spherical(gamma: &str, m: u64, n: u64, limits: &Limits) -> Result<Report> {
    let g = parse_group_arg(gamma, limits)?;
    if g.order() > limits.max_h2_order {
        return Err(Error::OrderBoundExceeded { what: "spherical classification input", bound: limits.max_h2_order, actual: g.order() });
    }
    let c = classify_spherical_mn(&g, m, n)?;
    let table = c
        .classes
        .iter()
        .map(|x| {
            let chi: Vec<String> = x.chi.iter().map(u64::to_string).collect();
            format!("chi=[{}] class={} K={}", chi.join(","), x.cocycle_class, x.k.name)
        })
        .collect();
    Ok(Report::One { json: json!({ "Gamma": to_value(&describe(&g)), "classification": to_value(&c) }), table })
}

fn dd_classes(gamma: &str, image: Option<&str>, chi: Option<&str>, d: u64, limits: &Limits) -> Result<Report> {
    let g = parse_group_arg(gamma, limits)?;
    let target = match image {
        Some(t) => parse_group_arg(t, limits)?,
        None => g.clone(),
    };
    let map: Vec<usize> = match chi {
        Some(text) => serde_json::from_str(text).map_err(|e| Error::invalid(format!("chi JSON: {e}")))?,
        None if image.is_none() => g.elements().collect(),
        None => return Err(Error::invalid("--image needs --chi")),
    };
    let img = Pgl2Image::new(&g, &target, map)?;
    let r = class_size_dd(&g, &img, d)?;
    let row = format!("{:?} d={} |C|={} |D|={}", r.image_type, d, r.centralizer_order.map_or("inf".into(), |c| c.to_string()), r.d_order);
    Ok(Report::One { json: to_value(&r), table: vec![row] })
}

fn factors_arg(text: &str) -> Result<FinAbGroup> {
    let orders = text
        .split(',')
        .map(|w| w.trim().parse::<u64>().ok().filter(|&x| x >= 1).ok_or_else(|| Error::invalid(format!("bad factor {w:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(FinAbGroup::from_cyclic_orders(&orders))
}

fn h2_order(g: &FiniteGroup, a: &FinAbGroup, limits: &Limits) -> Result<FinAbGroup> {
    Ok(h2_with(&GammaModule::trivial(g, a), limits)?.group().clone())
}

fn h2_verb(gamma: Option<&str>, a: Option<&str>, scan: Option<u64>, limits: &Limits) -> Result<Report> {
    if let Some(max) = scan {
        let pairs: Vec<(u64, u64)> = (1..=max).flat_map(|n| (1..=max).map(move |m| (n, m))).collect();
        let items = pairs
            .into_par_iter()
            .map(|(n, m)| match h2_order(&cyclic(n as usize), &FinAbGroup::cyclic(m), limits) {
                Ok(h) => (
                    json!({ "n": n, "m": m, "h2": h.factors(), "order": h.order(), "gcd": n.gcd(&m) }),
                    format!("{n} {m} {h}"),
                ),
                Err(e) => (error_value(&e), format!("{n} {m} error: {e}")),
            })
            .collect();
        return Ok(Report::Scan(items));
    }
    let (Some(gamma), Some(a)) = (gamma, a) else {
        return Err(Error::invalid("h2 needs --Gamma and --A, or --scan"));
    };
    let g = parse_group_arg(gamma, limits)?;
    let a = factors_arg(a)?;
    let h = h2_order(&g, &a, limits)?;
    Ok(Report::One {
        json: json!({ "Gamma": to_value(&describe(&g)), "A": a.factors(), "h2": h.factors(), "order": h.order() }),
        table: vec![h.to_string()],
    })
}

fn coset_enum(text: &str, subgroup: &[String], limits: &Limits) -> Result<Report> {
    let p = parse_presentation(text)?;
    let words: Vec<Word> = subgroup
        .iter()
        .map(|w| {
            let wrapped = format!("<{} | {w}>", p.generators().join(","));
            parse_presentation(&wrapped).map(|q| q.relators().first().cloned().unwrap_or_default())
        })
        .collect::<std::result::Result<_, _>>()?;
    match todd_coxeter(&p, &words, limits.max_cosets) {
        CosetResult::Index(i) => Ok(Report::One { json: json!({ "presentation": p.to_string(), "index": i }), table: vec![i.to_string()] }),
        CosetResult::Unknown => Err(Error::BudgetExceeded { budget: limits.max_cosets as u64 }),
    }
}

fn witness(kind: &WitnessKind) -> Result<Report> {
    match *kind {
        WitnessKind::Heisenberg { n } => {
            let w = heisenberg_witness(n)?;
            let ok = w.certifies(n);
            Ok(Report::One {
                json: json!({ "kind": "heisenberg", "n": n, "order": w.group.order(), "certified": ok }),
                table: vec![format!("Heis({n}) order {} certified {ok}", w.group.order())],
            })
        }
        WitnessKind::Psl2 { m, n, p, q_max } => match psl2_witness(m, n, p, q_max)? {
            Some(w) => Ok(Report::One {
                json: json!({ "kind": "psl2", "q": w.q, "x": w.x.to_string(), "y": w.y.to_string(), "orders": [m, n, p] }),
                table: vec![format!("PSL(2,{}) x={} y={}", w.q, w.x, w.y)],
            }),
            None => Err(Error::BudgetExceeded { budget: q_max }),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(args: &[&str]) -> String {
        let o = run(args, None);
        assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
        o.stdout
    }

    #[test]
    fn presets() {
        let l = Limits::default();
        assert_eq!(parse_group_arg("Z6", &l).unwrap().order(), 6);
        assert_eq!(parse_group_arg("D4", &l).unwrap().order(), 8);
        assert_eq!(parse_group_arg("Z2xZ4", &l).unwrap().order(), 8);
        assert_eq!(parse_group_arg("perm 3;(0 1 2);(0 1)", &l).unwrap().order(), 6);
        assert!(parse_group_arg("Y5", &l).is_err());
        assert!(parse_group_arg("Z0", &l).is_err());
    }

    #[test]
    fn triangle_table_row() {
        assert_eq!(ok(&["triangle", "2", "3", "5", "--format", "table"]), "spherical icosahedral 60\n");
    }

    #[test]
    fn classify_orbifold_euclidean() {
        let out = ok(&["classify-orbifold", r#"{"genus":0,"orders":[3,3,3],"punctures":0,"compact":true}"#, "--format", "table"]);
        assert_eq!(out, "Euclidean\n");
    }

    #[test]
    fn gerbes_rows() {
        let out = ok(&["gerbes", "--H", "Z4", "--m", "1", "--n", "1", "--format", "table"]);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].ends_with("pi1=Z4") && rows[1].ends_with("pi1=1") && rows[2].ends_with("pi1=Z2"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["triangle", "2", "3"], None).code, EXIT_INVALID);
        assert_eq!(run(&["gerbes", "--H", "Z4", "--m", "2", "--n", "4"], None).code, EXIT_INVALID);
        assert_eq!(run(&["nonsense"], None).code, EXIT_INVALID);
        assert_eq!(run(&["coset-enum", "<a,b | >", "--max-cosets", "50"], None).code, EXIT_BOUND);
        assert_eq!(run(&["h2", "--Gamma", "S5", "--A", "2"], None).code, EXIT_BOUND);
        assert_eq!(run(&["triangle", "2", "3", "5"], Some("lots")).code, EXIT_INVALID);
        assert_eq!(run(&["--help"], None).code, 0);
    }

    #[test]
    fn scans_are_ordered_json_lines() {
        let out = ok(&["triangle", "--scan", "6"]);
        let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 56);
        for (i, v) in lines.iter().enumerate() {
            assert_eq!(v["index"], i);
            assert_eq!(v["schema"], SCHEMA);
        }
        assert!(lines[0].get("error").is_some());
        assert_eq!(ok(&["triangle", "--scan", "6"]), out);
    }

    #[test]
    fn h2_scan_is_gcd_table() {
        let out = ok(&["h2", "--scan", "5"]);
        for line in out.lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["order"], v["gcd"]);
        }
    }
}
