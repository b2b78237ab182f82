use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use cogebra::alg::{EnumConfig, DEFAULT_BUDGET};
use cogebra::cofree::{cofree_truncated, structure_map_onto};
use cogebra::comodprod::{
    dimension_profile, enumerate_simple_joint, extension_commutation_report, strictly_increasing, truncated_product,
    Family,
};
use cogebra::extlab::{run_experiment, Experiment};
use cogebra::grouphopf::embedding_check;
use cogebra::recseq::{parse_poly, LinRecSeq};
use cogebra::{Coalgebra, Embedding, Error, Field};

#[derive(Parser, Debug)]
#[command(name = "cogebra", version, about = "Exact experiments with coalgebras, comodules and truncated products")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct Global {
    /// Ground field: a prime power such as 3, 4, 2^3, GF(8), or Q.
    #[arg(long, global = true, default_value = "2")]
    field: String,
    /// Dimension bound for enumerations.
    #[arg(long = "max-dim", visible_alias = "d", global = true, default_value_t = 1)]
    max_dim: usize,
    /// Enumeration budget; defaults to $COGEBRA_BUDGET, then 10^7.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
enum Command {
    /// Check the coalgebra axioms of a coalgebra JSON file.
    Validate { file: PathBuf },
    /// Count simple joint comodules by dimension.
    Simples(FamilyArgs),
    /// Truncated product of a family.
    Product(FamilyArgs),
    /// Carrier dimensions of the truncated products for d = 1..max-dim.
    Profile(FamilyArgs),
    /// Compare truncations before and after a finite field extension.
    Extension {
        #[command(flatten)]
        #[serde(flatten)]
        family: FamilyArgs,
        /// Embedding such as gf2-gf4.
        #[arg(long)]
        embed: String,
    },
    /// Truncated cofree coalgebra on an m-dimensional space.
    Cofree {
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Linearly recursive sequences.
    Recseq(RecseqArgs),
    /// Coefficient spans of free-group representations on all words and on
    /// positive words.
    Group {
        #[arg(long, default_value_t = 1)]
        alphabet: usize,
    },
    /// Witness experiments for transcendental and algebraic extensions.
    Witness(WitnessArgs),
    /// Rerun the configuration embedded in a report.
    Replay { report: PathBuf },
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct FamilyArgs {
    /// Members: dihedral, trivial, matrix:N, grouplike:N, dualfield:N or a
    /// coalgebra JSON file. Repeat or separate with commas.
    #[arg(long, value_delimiter = ',', required = true)]
    family: Vec<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum RecOp {
    Minpoly,
    Hadamard,
    Hurwitz,
    Antipode,
    Comult,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct RecseqArgs {
    #[arg(value_enum)]
    op: RecOp,
    /// Monic recurrence polynomial in x, e.g. "x^2-x-1".
    #[arg(long)]
    minpoly: String,
    /// Comma-separated initial terms.
    #[arg(long, allow_hyphen_values = true)]
    initial: String,
    #[arg(long)]
    other_minpoly: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    other_initial: Option<String>,
    /// Number of terms to print.
    #[arg(long, default_value_t = 10)]
    terms: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum WitnessKind {
    MatrixSpan,
    Nilpotent,
    Character,
    Dualfields,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
struct WitnessArgs {
    #[arg(value_enum)]
    kind: WitnessKind,
    /// Characteristic (0 for the rationals where allowed).
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Number of powers.
    #[arg(long = "N", default_value_t = 8)]
    n: usize,
    /// Polynomial degree bound.
    #[arg(long = "D", default_value_t = 4)]
    degree: usize,
    /// Extension degrees of the dual-field family.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    exts: Vec<usize>,
    /// Degree of the extension field for the dual-field comparison.
    #[arg(long, default_value_t = 6)]
    m: usize,
}

/// Everything needed to reproduce a report.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RunConfig {
    command: Command,
    field: String,
    max_dim: usize,
    budget: u64,
    format: Format,
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Violation(_)) => 1,
            Failure::Lib(Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Input(s) => write!(f, "{s}"),
        }
    }
}

type Outcome = Result<Report, Failure>;

struct Report {
    json: Value,
    tsv: String,
    /// Exit with 1: the report records a failed property.
    violation: bool,
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::rationals());
    }
    let inner = t
        .strip_prefix("GF(")
        .or_else(|| t.strip_prefix("gf("))
        .and_then(|x| x.strip_suffix(')'))
        .or_else(|| t.strip_prefix("gf"))
        .or_else(|| t.strip_prefix("GF"))
        .unwrap_or(t);
    let bad = || Failure::Input(format!("cannot parse field {s:?}"));
    let (p, n) = match inner.split_once('^') {
        Some((p, n)) => (p.parse::<u64>().map_err(|_| bad())?, n.parse::<u32>().map_err(|_| bad())?),
        None => {
            let q = inner.parse::<u64>().map_err(|_| bad())?;
            prime_power(q).ok_or_else(bad)?
        }
    };
    let p = u32::try_from(p).map_err(|_| bad())?;
    Ok(Field::gf(p, n as usize)?)
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut n = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    (r == 1).then_some((p, n))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_family(field: &Field, specs: &[String]) -> Result<Family, Failure> {
    let mut members = Vec::new();
    let mut names = Vec::new();
    for spec in specs {
        let (kind, arg) = match spec.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (spec.as_str(), None),
        };
        let num = |a: Option<&str>| -> Result<usize, Failure> {
            a.ok_or_else(|| Failure::Input(format!("{spec}: missing size")))?
                .parse()
                .map_err(|_| Failure::Input(format!("{spec}: bad size")))
        };
        match kind {
            "dihedral" => {
                let g = Coalgebra::grouplike(field, &["a", "b"])?;
                members.extend([g.clone(), g]);
                names.extend(["grouplike(a,b)".to_string(), "grouplike(a,b)".to_string()]);
            }
            "trivial" => {
                members.push(Coalgebra::trivial(field));
                names.push("trivial".into());
            }
            "matrix" => {
                let n = num(arg)?;
                members.push(Coalgebra::matrix(field, n)?);
                names.push(format!("matrix({n})"));
            }
            "grouplike" => {
                let n = num(arg)?;
                let labels: Vec<String> = (1..=n).map(|i| format!("g{i}")).collect();
                members.push(Coalgebra::grouplike(field, &labels)?);
                names.push(format!("grouplike({n})"));
            }
            "dualfield" => {
                let n = num(arg)?;
                let ff = field.as_finite().ok_or_else(|| Failure::Input("dualfield needs a finite field".into()))?;
                let big = Field::gf(ff.characteristic(), field.degree().unwrap_or(1) * n)?;
                let e = Embedding::find(field, &big)?;
                members.push(Coalgebra::dual_field(&e)?);
                names.push(format!("dualfield({n})"));
            }
            _ => {
                let c = Coalgebra::from_json(&read_json(Path::new(spec))?)?;
                if c.field() != field {
                    return Err(Failure::Input(format!("{spec} is over {}, not {}", c.field().descriptor(), field.descriptor())));
                }
                members.push(c);
                names.push(spec.clone());
            }
        }
    }
    Ok(Family::named(members, names)?)
}

fn parse_embedding(s: &str) -> Result<Embedding, Failure> {
    let (a, b) = s
        .split_once('-')
        .ok_or_else(|| Failure::Input(format!("embedding {s:?} should look like gf2-gf4")))?;
    let src = parse_field(a)?;
    let tgt = parse_field(b)?;
    Ok(Embedding::find(&src, &tgt)?)
}

fn parse_terms(field: &Field, s: &str) -> Result<Vec<cogebra::Elem>, Failure> {
    s.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| field.parse(t).map_err(Failure::from))
        .collect()
}

fn seq(field: &Field, minpoly: &str, initial: &str) -> Result<LinRecSeq, Failure> {
    let p = parse_poly(field, minpoly, "x")?;
    Ok(LinRecSeq::new(field, parse_terms(field, initial)?, p)?)
}

fn fmt_terms(field: &Field, v: &[cogebra::Elem]) -> Vec<String> {
    v.iter().map(|x| field.format(x)).collect()
}

fn run(cfg: &RunConfig) -> Outcome {
    let ecfg = EnumConfig { budget: cfg.budget, ..Default::default() };
    let d = cfg.max_dim;
    if d == 0 {
        return Err(Failure::Input("--max-dim must be positive".into()));
    }
    match &cfg.command {
        Command::Validate { file } => {
            let c = Coalgebra::from_json(&read_json(file)?)?;
            let res = c.validate();
            let violation = res.as_ref().err().map(|v| v.to_string());
            let tsv = match &violation {
                None => format!("valid\t{}\n", c.dim()),
                Some(v) => format!("invalid\t{v}\n"),
            };
            Ok(Report { json: json!({ "dim": c.dim(), "valid": res.is_ok(), "violation": violation }), tsv, violation: res.is_err() })
        }
        Command::Simples(fa) => {
            let field = parse_field(&cfg.field)?;
            let fam = load_family(&field, &fa.family)?;
            let census = enumerate_simple_joint(&fam, d, &ecfg)?;
            let p = &fam.free_product().presentation;
            let mut tsv = String::from("dimension\tclasses\twitness\n");
            let mut rows = Vec::new();
            for (e, classes) in &census.levels {
                let witness = if classes.is_empty() { "-".to_string() } else { format!("d{e}-0") };
                let _ = writeln!(tsv, "{e}\t{}\t{witness}", classes.len());
                rows.push(json!({
                    "dimension": e,
                    "classes": classes.len(),
                    "witnesses": classes.iter().map(|r| r.to_json(p)).collect::<Vec<_>>(),
                }));
            }
            Ok(Report { json: json!({ "family": fam.names(), "census": rows }), tsv, violation: false })
        }
        Command::Product(fa) => {
            let field = parse_field(&cfg.field)?;
            let fam = load_family(&field, &fa.family)?;
            let t = truncated_product(&fam, d, &ecfg)?;
            let valid = t.carrier.as_ref().map(|c| c.is_valid());
            let morphisms = t.projections_are_morphisms(&fam);
            let census = enumerate_simple_joint(&fam, d, &ecfg)?;
            let p = &fam.free_product().presentation;
            let simple_census: BTreeMap<String, usize> =
                census.counts().into_iter().map(|(e, c)| (e.to_string(), c)).collect();
            let json = json!({
                "family": fam.names(),
                "d": d,
                "carrier_dim": t.carrier_dim,
                "carrier_valid": valid,
                "projections_are_morphisms": morphisms,
                "simple_census": simple_census,
                "witnesses": t.provenance.iter().map(|r| r.to_json(p)).collect::<Vec<_>>(),
                "carrier": t.carrier.as_ref().map(|c| c.to_json()),
                "projections": t.projections.iter().map(|m| m.format_rows()).collect::<Vec<_>>(),
                "pairing": "projections pair a coefficient functional with the dual basis of each factor's dual algebra",
            });
            let tsv = format!(
                "d\tcarrier_dim\tcarrier_valid\tprojections_are_morphisms\n{d}\t{}\t{}\t{}\n",
                t.carrier_dim,
                opt(valid),
                opt(morphisms)
            );
            Ok(Report { json, tsv, violation: valid == Some(false) || morphisms == Some(false) })
        }
        Command::Profile(fa) => {
            let field = parse_field(&cfg.field)?;
            let fam = load_family(&field, &fa.family)?;
            let profile = dimension_profile(&fam, d, &ecfg)?;
            let growing = strictly_increasing(&profile);
            let mut tsv = String::from("d\tcarrier_dim\n");
            for (i, x) in profile.iter().enumerate() {
                let _ = writeln!(tsv, "{}\t{x}", i + 1);
            }
            let verdict = if growing {
                format!("strictly increasing through d = {d}: infinite-dimensionality evidence")
            } else {
                "not strictly increasing".to_string()
            };
            Ok(Report { json: json!({ "family": fam.names(), "profile": profile, "verdict": verdict }), tsv, violation: false })
        }
        Command::Extension { family, embed } => {
            let e = parse_embedding(embed)?;
            let fam = load_family(e.source(), &family.family)?;
            let r = extension_commutation_report(&fam, &e, d, &ecfg)?;
            let verdict = if r.equal { "dimensions equal" } else { "dimensions differ" };
            let tsv = format!("{verdict}\t{}\t{}\n", r.source_dim, r.extended_dim);
            Ok(Report {
                json: json!({
                    "family": fam.names(),
                    "d": d,
                    "source_dim": r.source_dim,
                    "extended_dim": r.extended_dim,
                    "verdict": verdict,
                    "comparison_injective": r.comparison_injective,
                    "comparison": r.comparison.format_rows(),
                }),
                tsv,
                violation: false,
            })
        }
        Command::Cofree { m } => {
            let field = parse_field(&cfg.field)?;
            let t = cofree_truncated(&field, *m, d, &ecfg)?;
            let onto = structure_map_onto(&t);
            let tsv = format!("m\td\tcarrier_dim\tonto\n{m}\t{d}\t{}\t{}\n", t.dim(), onto.onto);
            Ok(Report {
                json: json!({
                    "m": m,
                    "d": d,
                    "carrier_dim": t.dim(),
                    "stabilization_length": t.span.stabilization_length(),
                    "structure_map": t.structure_map.format_rows(),
                    "onto": onto.onto,
                    "preimages": onto.preimages.iter().map(|v| fmt_terms(&field, v)).collect::<Vec<_>>(),
                }),
                tsv,
                violation: !onto.onto,
            })
        }
        Command::Recseq(a) => recseq(cfg, a),
        Command::Group { alphabet } => {
            let field = parse_field(&cfg.field)?;
            let r = embedding_check(&field, *alphabet, d, &ecfg)?;
            let tsv = format!(
                "alphabet\td\tall_words_dim\tpositive_words_dim\tequal\n{}\t{}\t{}\t{}\t{}\n",
                r.alphabet, r.d, r.all_words_dim, r.positive_words_dim, r.equal
            );
            Ok(Report { json: serde_json::to_value(&r).expect("plain data"), tsv, violation: !r.equal })
        }
        Command::Witness(w) => {
            let x = match w.kind {
                WitnessKind::MatrixSpan => Experiment::MatrixSpan { p: w.p, n: w.n },
                WitnessKind::Nilpotent => Experiment::Nilpotent { p: w.p, n: w.n },
                WitnessKind::Character => Experiment::Character { p: w.p, degree: w.degree },
                WitnessKind::Dualfields => Experiment::Dualfields { p: w.p, exts: w.exts.clone(), d, m: w.m },
            };
            let r = run_experiment(&x, &ecfg)?;
            let mut tsv = format!("verdict\t{}\n", r.verdict);
            if let Some(dims) = r.evidence.get("dims").and_then(Value::as_array) {
                let dims: Vec<String> = dims.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(tsv, "dims\t{}", dims.join(","));
            }
            Ok(Report { json: serde_json::to_value(&r).expect("plain data"), tsv, violation: false })
        }
        Command::Replay { .. } => Err(Failure::Input("replay cannot be nested".into())),
    }
}

fn opt(b: Option<bool>) -> String {
    b.map_or_else(|| "unchecked".to_string(), |b| b.to_string())
}

fn recseq(cfg: &RunConfig, a: &RecseqArgs) -> Outcome {
    let field = parse_field(&cfg.field)?;
    let f = seq(&field, &a.minpoly, &a.initial)?;
    let n = a.terms;
    let other = || -> Result<LinRecSeq, Failure> {
        match (&a.other_minpoly, &a.other_initial) {
            (Some(p), Some(i)) => seq(&field, p, i),
            _ => Err(Failure::Input("this operation needs --other-minpoly and --other-initial".into())),
        }
    };
    let describe = |s: &LinRecSeq| {
        json!({
            "minpoly": cogebra::field::poly::format(&field, s.minimal_polynomial(), "x"),
            "terms": fmt_terms(&field, &s.terms(n)),
            "bilaterally_extendable": s.is_bilaterally_extendable(),
            "sequence": s.to_json(),
        })
    };
    let (json, tsv) = match a.op {
        RecOp::Minpoly => {
            let j = describe(&f);
            let tsv = format!("minpoly\t{}\nterms\t{}\n", j["minpoly"].as_str().unwrap_or(""), fmt_terms(&field, &f.terms(n)).join(","));
            (json!({ "model": "sequence", "result": j }), tsv)
        }
        RecOp::Hadamard | RecOp::Hurwitz => {
            let g = other()?;
            let (model, h) = match a.op {
                RecOp::Hadamard => ("grouplike (Hadamard)", f.hadamard_product(&g)?),
                _ => ("primitive (Hurwitz)", f.hurwitz_product(&g)?),
            };
            let j = describe(&h);
            let tsv = format!("minpoly\t{}\nterms\t{}\n", j["minpoly"].as_str().unwrap_or(""), fmt_terms(&field, &h.terms(n)).join(","));
            (json!({ "model": model, "result": j }), tsv)
        }
        RecOp::Antipode => {
            let s = f.antipode()?;
            let forward = fmt_terms(&field, &f.terms(n));
            let backward = fmt_terms(&field, &s.terms(n));
            // f_{-(n-1)}, ..., f_{-1}, f_0, f_1, ..., f_{n-1}
            let bilateral: Vec<String> = backward.iter().skip(1).rev().chain(forward.iter()).cloned().collect();
            let tsv = format!(
                "antipode\t{}\nbilateral\t{}\n",
                backward.join(","),
                bilateral.join(",")
            );
            (json!({ "model": "grouplike (Hadamard)", "antipode": describe(&s), "bilateral_terms": bilateral, "first_index": -(n as i64 - 1) }), tsv)
        }
        RecOp::Comult => {
            let pairs = f.comultiplication_components()?;
            let mut tsv = String::from("g\th\n");
            let mut js = Vec::new();
            for (g, h) in &pairs {
                let (gt, ht) = (fmt_terms(&field, &g.terms(n)), fmt_terms(&field, &h.terms(n)));
                let _ = writeln!(tsv, "{}\t{}", gt.join(","), ht.join(","));
                js.push(json!({ "g": gt, "h": ht }));
            }
            (json!({ "model": "grouplike (Hadamard)", "pairs": js }), tsv)
        }
    };
    Ok(Report { json, tsv, violation: false })
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Failure> {
    let b = match flag {
        Some(b) => b,
        None => match std::env::var("COGEBRA_BUDGET") {
            Ok(s) => s.trim().parse().map_err(|_| Failure::Input(format!("COGEBRA_BUDGET={s:?} is not a number")))?,
            Err(_) => DEFAULT_BUDGET,
        },
    };
    if b == 0 {
        return Err(Failure::Input("budget must be positive".into()));
    }
    Ok(b)
}

fn render(cfg: &RunConfig, report: &Report) -> String {
    match cfg.format {
        Format::Json => {
            let mut v = json!({ "config": cfg });
            if let (Some(obj), Value::Object(body)) = (v.as_object_mut(), &report.json) {
                for (k, x) in body {
                    obj.insert(k.clone(), x.clone());
                }
            } else if let Some(obj) = v.as_object_mut() {
                obj.insert("result".into(), report.json.clone());
            }
            let mut s = serde_json::to_string_pretty(&v).expect("serializable");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let config = serde_json::to_string(cfg).expect("serializable");
            format!("# config\t{config}\n{}", report.tsv)
        }
    }
}

fn emit(cfg: &RunConfig, text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            // write then rename so readers never see a partial report
            let tmp = path.with_extension("partial");
            std::fs::write(&tmp, text).map_err(|e| Failure::Input(format!("{}: {e}", tmp.display())))?;
            std::fs::rename(&tmp, path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            let _ = cfg;
            print!("{text}");
            Ok(())
        }
    }
}

fn load_replay(path: &Path) -> Result<RunConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let config = if let Some(rest) = text.strip_prefix("# config\t") {
        let line = rest.lines().next().unwrap_or("");
        serde_json::from_str(line)
    } else {
        serde_json::from_str::<Value>(&text).and_then(|v| serde_json::from_value(v.get("config").cloned().unwrap_or(v)))
    };
    config.map_err(|e| Failure::Input(format!("{}: no replayable config: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> Result<bool, Failure> {
        let (cfg, out) = match &cli.command {
            Command::Replay { report } => {
                let cfg = load_replay(report)?;
                let out = cli.global.out.clone();
                (cfg, out)
            }
            command => {
                let cfg = RunConfig {
                    command: command.clone(),
                    field: cli.global.field.clone(),
                    max_dim: cli.global.max_dim,
                    budget: resolve_budget(cli.global.budget)?,
                    format: cli.global.format,
                    out: cli.global.out.clone(),
                };
                let out = cfg.out.clone();
                (cfg, out)
            }
        };
        let report = run(&cfg)?;
        emit(&cfg, &render(&cfg, &report), out.as_deref())?;
        Ok(report.violation)
    })();
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("cogebra: {e}");
            ExitCode::from(e.code())
        }
    }
}
