//! `qed`: command-line access to quiver classification, `Λ_Q` and
//! essential-dimension growth.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quiver_ed::classify::{self, RepType};
use quiver_ed::forms::{self, DimVector};
use quiver_ed::growth;
use quiver_ed::lambda::{self, LambdaOptions};
use quiver_ed::linrep::{self, Representation};
use quiver_ed::rational::{self, Rational};
use quiver_ed::{catalog, Error, Quiver};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "qed", version, about = "Representation type and essential-dimension growth of quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Print a single JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Also print rationals as decimals (6 significant digits).
    #[arg(long)]
    approx: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Representation type of every connected component.
    Classify {
        /// Quiver file or catalog name such as @K_3.
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Null root of a connected tame quiver.
    Nullroot {
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// The wild growth coefficient Λ_Q.
    Lambda {
        input: String,
        /// Also print the witness subquiver and its critical point.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_name = "N", default_value_t = 20)]
        max_vertices: usize,
        #[command(flatten)]
        out: Output,
    },
    /// r_Q(n) exactly, or bounds and the leading coefficient for wild quivers.
    Growth {
        input: String,
        #[arg(long = "n", value_name = "N")]
        n: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Essential dimension of Rep(Q, α) for finite and tame quivers.
    Edrep {
        input: String,
        #[arg(long, value_name = "a1,a2,...", value_delimiter = ',', required = true, allow_hyphen_values = true)]
        alpha: Vec<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Positive real roots with entries at most the bound.
    Roots {
        input: String,
        #[arg(long, value_name = "H", default_value_t = 10)]
        bound: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Minimal wildness checks.
    MinimalWild {
        input: String,
        /// Removing any arrow destroys wildness.
        #[arg(long, conflicts_with = "quiver")]
        graph: bool,
        /// No proper induced subquiver is wild.
        #[arg(long)]
        quiver: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Λ for the eighteen minimal wild graphs, recomputed.
    Table {
        #[command(flatten)]
        out: Output,
    },
    /// The four-subspace representation of U_4 for a monic polynomial.
    FamilyD4 {
        #[arg(long, value_name = "M")]
        m: usize,
        /// Coefficients c0,c1,...,1 from the constant term up.
        #[arg(long, value_name = "c0,c1,...,1", value_delimiter = ',', required = true, allow_hyphen_values = true)]
        poly: Vec<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// dim Hom and dim Ext¹ between two representations.
    Hom {
        file_m: String,
        file_n: String,
        #[command(flatten)]
        out: Output,
    },
    /// Builtin quivers.
    Catalog {
        /// Print the JSON document of one catalog quiver.
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: Output,
    },
}

/// Input problems exit with 2, violated preconditions with 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_text(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

fn load_quiver(input: &str) -> Result<Quiver, Failure> {
    if input.starts_with('@') {
        return catalog::lookup(input).map_err(|e| Failure::Usage(e.to_string()));
    }
    Ok(Quiver::parse(&read_text(input)?)?)
}

fn json_doc(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn show(r: &Rational, out: Output) -> String {
    let exact = rational::to_canonical_string(r);
    if out.approx {
        format!("{exact} (approx {})", rational::approx(r))
    } else {
        exact
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Classify { input, out } => classify_cmd(&load_quiver(&input)?, out),
        Command::Nullroot { input, out } => {
            let q = load_quiver(&input)?;
            let delta = classify::null_root(&q)?;
            Ok(if out.json { json_doc(json!({ "null_root": delta })) } else { format!("{delta}\n") })
        }
        Command::Lambda { input, witness, max_vertices, out } => {
            let q = load_quiver(&input)?;
            let report = lambda::lambda_max_with(&q, &LambdaOptions { max_vertices })?;
            if out.json {
                return Ok(json_doc(to_value(&report)));
            }
            let mut s = format!("lambda: {}\n", show(&report.lambda_max, out));
            if witness {
                writeln!(s, "witness: {}", q.format_set(&report.witness)).unwrap();
                writeln!(s, "alpha: {}", report.witness_point.alpha).unwrap();
            }
            Ok(s)
        }
        Command::Growth { input, n, out } => {
            let q = load_quiver(&input)?;
            let report = growth::growth(&q, n)?;
            if out.json {
                return Ok(json_doc(to_value(&report)));
            }
            let mut s = format!("type: {}\n", report.rep_type);
            match report.exact_value {
                Some(v) => writeln!(s, "r({n}) = {v}").unwrap(),
                None => {
                    writeln!(s, "lower bound: {}", show(&report.lower_bound, out)).unwrap();
                    writeln!(s, "upper bound: {}", show(&report.upper_bound, out)).unwrap();
                }
            }
            let a = &report.asymptotic;
            let marker = if report.exact_value.is_none() { " (asymptotic only)" } else { "" };
            writeln!(s, "a{} = {}{marker}", a.order, show(&a.coefficient, out)).unwrap();
            Ok(s)
        }
        Command::Edrep { input, alpha, out } => {
            let q = load_quiver(&input)?;
            let ed = growth::ed_rep(&q, &DimVector::from_ints(&alpha))?;
            Ok(if out.json { json_doc(json!({ "ed": ed })) } else { format!("ed = {ed}\n") })
        }
        Command::Roots { input, bound, out } => {
            let q = load_quiver(&input)?;
            let roots = forms::real_roots(&q, bound)?;
            if out.json {
                return Ok(json_doc(json!({ "bound": bound, "count": roots.len(), "roots": roots })));
            }
            let mut s = String::new();
            for r in &roots {
                writeln!(s, "{r}").unwrap();
            }
            writeln!(s, "{} positive real roots with entries <= {bound}", roots.len()).unwrap();
            Ok(s)
        }
        Command::MinimalWild { input, graph, quiver, out } => {
            let q = load_quiver(&input)?;
            let mut checks = serde_json::Map::new();
            if !quiver {
                checks.insert("minimal_wild_graph".into(), json!(classify::is_minimal_wild_graph(&q)));
            }
            if !graph {
                checks.insert("minimal_wild_quiver".into(), json!(classify::is_minimal_wild_quiver(&q)));
            }
            if out.json {
                return Ok(json_doc(Value::Object(checks)));
            }
            Ok(checks.iter().map(|(k, v)| format!("{}: {v}\n", k.replace('_', " "))).collect())
        }
        Command::Table { out } => table_cmd(out),
        Command::FamilyD4 { m, poly, out } => {
            let (q, rep) = linrep::d4_family(m, &poly)?;
            let brick = linrep::is_brick(&q, &rep)?;
            if out.json {
                return Ok(json_doc(rep.to_json(&q)));
            }
            let mut s = format!("dims: {}\n", rep.dim_vector());
            for (k, mat) in rep.matrices().iter().enumerate() {
                let a = q.arrows()[k];
                writeln!(s, "arrow {k} ({} -> {}):", q.vertex_name(a.source), q.vertex_name(a.target)).unwrap();
                for row in mat {
                    let cells: Vec<String> = row.iter().map(rational::to_canonical_string).collect();
                    writeln!(s, "  [{}]", cells.join(" ")).unwrap();
                }
            }
            writeln!(s, "brick: {brick}").unwrap();
            Ok(s)
        }
        Command::Hom { file_m, file_n, out } => {
            let (qm, m) = Representation::parse_document(&read_text(&file_m)?)?;
            let (qn, n) = Representation::parse_document(&read_text(&file_n)?)?;
            if qm != qn {
                return Err(Failure::Domain("the representations are over different quivers".into()));
            }
            let hom = linrep::hom_dim(&qm, &m, &n)?;
            let ext = linrep::ext1_dim(&qm, &m, &n)?;
            let euler = forms::euler_form(&qm, &m.dim_vector(), &n.dim_vector())?;
            if out.json {
                return Ok(json_doc(json!({
                    "euler_form": rational::to_canonical_string(&euler),
                    "ext1_dim": ext,
                    "hom_dim": hom,
                })));
            }
            Ok(format!("hom = {hom}\next1 = {ext}\neuler form = {euler}\n"))
        }
        Command::Catalog { name, list, out } => catalog_cmd(name, list, out),
    }
}

fn classify_cmd(q: &Quiver, out: Output) -> Outcome {
    let report = classify::rep_type(q);
    if out.json {
        return Ok(json_doc(to_value(&report)));
    }
    let mut s = String::new();
    for c in &report.components {
        write!(s, "component {}: {}", q.format_set(&c.vertices), c.rep_type).unwrap();
        if let Some(name) = &c.dynkin_name {
            write!(s, " ({name})").unwrap();
        }
        if let Some(delta) = &c.null_root {
            write!(s, ", null root {delta}").unwrap();
        }
        s.push('\n');
    }
    if report.components.len() > 1 {
        writeln!(s, "aggregate: {}", report.aggregate).unwrap();
    }
    Ok(s)
}

fn table_cmd(out: Output) -> Outcome {
    let mut rows = Vec::new();
    let mut text = String::new();
    for entry in catalog::minimal_wild_graphs() {
        let report = lambda::lambda_max(&entry.quiver)?;
        if classify::connected_rep_type(&entry.quiver)? != RepType::Wild {
            return Err(Failure::Domain(format!("{} is not wild", entry.label)));
        }
        writeln!(
            text,
            "{:<16} {:<7} lambda = {:<8} alpha = {}",
            entry.label,
            format!("@{}", entry.name),
            show(&report.lambda_max, out),
            report.witness_point.alpha
        )
        .unwrap();
        let mut row = to_value(&report);
        row["name"] = json!(entry.label);
        row["catalog"] = json!(format!("@{}", entry.name));
        rows.push(row);
    }
    Ok(if out.json { json_doc(Value::Array(rows)) } else { text })
}

fn catalog_cmd(name: Option<String>, list: bool, out: Output) -> Outcome {
    if let Some(name) = name.filter(|_| !list) {
        let q = catalog::lookup(&name).map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok(json_doc(q.to_json()));
    }
    let entries = catalog::listing();
    if out.json {
        let map: serde_json::Map<String, Value> =
            entries.iter().map(|(n, d)| ((*n).to_string(), json!(d))).collect();
        return Ok(json_doc(Value::Object(map)));
    }
    Ok(entries.iter().map(|(n, d)| format!("@{n:<20} {d}\n")).collect())
}
