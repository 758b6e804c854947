use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coverideal_core::polymatroid::{find_wp_order_with, is_weakly_polymatroidal};
use coverideal_core::resolution::{betti_numbers_with, regularity_of_truncation, regularity_with};
use coverideal_core::symbolic::{
    check_odd_cycle_neighborhood_with, herzog_symbolic_with, l_ideal, symbolic_power,
};
use coverideal_core::{
    Graph, Limits, MonomialIdeal, SimplicialComplex, SymbolicPowerReport, VariableOrder, WpSearch,
};
use coverideal_lab::corpus::{load_graph, load_ideal};
use coverideal_lab::experiments;
use coverideal_lab::report::{Case, ExperimentReport, Outcome};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "coverideal-lab",
    version,
    about = "Cover ideals, symbolic powers and weak polymatroidality"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Seed for randomized corpora.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Maximum lcm-lattice size.
    #[arg(long, global = true)]
    cap_lattice: Option<usize>,
    /// Maximum number of variables for WP order search.
    #[arg(long, global = true)]
    cap_ambient: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

/// An ideal given by a graph (its cover ideal) or by a file, optionally raised
/// to an ordinary or symbolic power.
#[derive(Args, Clone)]
struct IdealInput {
    /// Graph file (JSON or edge list) or name such as c5, p3, k4, star4, wc5.
    #[arg(long, conflicts_with = "file")]
    graph: Option<String>,
    /// Ideal file (JSON or one generator per line).
    #[arg(long)]
    file: Option<String>,
    /// Number of variables for text ideal files.
    #[arg(long)]
    ambient: Option<usize>,
    /// Raise to this power.
    #[arg(long, default_value_t = 1)]
    power: u32,
    /// Use the symbolic power of the cover ideal (graph input only).
    #[arg(long)]
    symbolic: bool,
}

impl IdealInput {
    fn describe(&self) -> serde_json::Value {
        json!({
            "graph": self.graph,
            "file": self.file,
            "power": self.power,
            "symbolic": self.symbolic,
        })
    }

    fn load(&self) -> anyhow::Result<MonomialIdeal> {
        match (&self.graph, &self.file) {
            (Some(g), None) => {
                let g = load_graph(g)?;
                if self.symbolic {
                    Ok(symbolic_power(&g, self.power)?)
                } else {
                    Ok(g.cover_ideal()?.power(self.power)?)
                }
            }
            (None, Some(f)) => {
                if self.symbolic {
                    bail!("--symbolic needs --graph");
                }
                Ok(load_ideal(f, self.ambient)?.power(self.power)?)
            }
            _ => bail!("give exactly one of --graph or --file"),
        }
    }
}

#[derive(Args, Clone)]
struct GraphInput {
    /// Graph file (JSON or edge list) or name such as c5, p3, k4, star4, wc5.
    #[arg(long)]
    graph: String,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators of an ideal.
    Ideal(IdealInput),
    /// Vertex covers and structural properties of a graph.
    Graph(GraphInput),
    /// Symbolic power by intersection and by the closed form.
    Symbolic {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        s: u32,
    },
    /// Closed-form symbolic power, when the odd-cycle hypothesis holds.
    Herzog {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        s: u32,
    },
    /// The ideal L_{s,t} on the whiskered graph.
    Lideal {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
    },
    /// J^(s) and J^s agree in degrees >= s·Deg(J) on odd cycles.
    TruncationCheck {
        #[arg(long, value_delimiter = ',', default_values_t = [3, 5])]
        n: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        smax: u32,
    },
    /// Castelnuovo–Mumford regularity.
    Reg {
        #[command(flatten)]
        input: IdealInput,
        /// Intersect with the t-th power of the maximal ideal first.
        #[arg(long)]
        truncate: Option<u32>,
    },
    /// Multigraded Betti numbers.
    Betti(IdealInput),
    /// Weak polymatroidality.
    Wp {
        #[command(subcommand)]
        command: WpCommand,
    },
    /// Vertex decomposability of the independence complex (graph input) or
    /// of the complex whose cover ideal is the given squarefree ideal.
    Vdec(IdealInput),
    /// reg(J(C_n)^s) against reg(J(C_n)^(s)).
    OddCycle {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long)]
        smax: u32,
    },
    /// deg and Deg of J(C_n) for odd n.
    DegFormula {
        #[arg(long, default_value_t = 15)]
        max: usize,
    },
    /// WP and regularity of powers of clique-whiskered cover ideals.
    WhiskerSuite,
    /// Golden membership facts in J(C5)^2.
    #[command(name = "example-5-1")]
    Example51,
    /// WP order search over unmixed vertex-decomposable connected graphs.
    Scan {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// reg(R/(I ∩ m^t)) against reg(R/I) on random ideals.
    TruncationReg {
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// WP implies vertex decomposable and linear quotients.
    Implications {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 500)]
        random: usize,
    },
    /// Symbolic and ordinary powers on bipartite graphs.
    Bipartite {
        #[arg(long, value_delimiter = ',', default_values_t = ["c4".to_string(), "c6".to_string(), "p4".to_string(), "p5".to_string()])]
        graphs: Vec<String>,
        #[arg(long, default_value_t = 3)]
        smax: u32,
    },
    /// Cohen–Macaulay odd cycles and the star graph.
    CohenMacaulay {
        #[arg(long, default_value_t = 9)]
        max: usize,
    },
}

#[derive(Subcommand)]
enum WpCommand {
    /// Check a given order, e.g. --order 3,1,2 for x3 > x1 > x2.
    Check {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        order: VariableOrder,
    },
    /// Search for an order (lexicographically least).
    Search(IdealInput),
    /// Same as the top-level scan.
    Scan {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

fn single(
    experiment: &str,
    inputs: serde_json::Value,
    claim: &str,
    run: impl Fn() -> anyhow::Result<Outcome> + Send + Sync + 'static,
) -> ExperimentReport {
    ExperimentReport::run(
        experiment,
        inputs.clone(),
        vec![Case::new(experiment, inputs, claim, run)],
    )
}

fn labels(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.generators().iter().map(ToString::to_string).collect()
}

fn ideal_values(ideal: &MonomialIdeal) -> anyhow::Result<Outcome> {
    Ok(Outcome::new(true)
        .with("ambient", ideal.ambient())
        .with("generators", labels(ideal))
        .with("count", ideal.len())
        .with("deg_min", ideal.deg_min().ok())
        .with("deg_max", ideal.deg_max().ok()))
}

fn graph_values(g: &Graph) -> anyhow::Result<Outcome> {
    Ok(Outcome::new(true)
        .with("n", g.n())
        .with("edges", g.edges())
        .with("minimal_vertex_covers", g.minimal_vertex_cover_sets()?)
        .with("unmixed", g.is_unmixed()?)
        .with("bipartite", g.is_bipartite())
        .with("connected", g.is_connected())
        .with("girth", g.girth())
        .with("cactus", g.is_cactus())
        .with("chordal", g.is_chordal()))
}

fn dispatch(command: Command, limits: &Limits, seed: u64) -> anyhow::Result<ExperimentReport> {
    let limits = limits.clone();
    Ok(match command {
        Command::Ideal(input) => single("ideal", input.describe(), "computed", move || {
            ideal_values(&input.load()?)
        }),
        Command::Graph(input) => single(
            "graph",
            json!({ "graph": input.graph }),
            "computed",
            move || graph_values(&load_graph(&input.graph)?),
        ),
        Command::Symbolic { graph, s } => single(
            "symbolic",
            json!({ "graph": graph.graph, "s": s }),
            "intersection and closed form agree when the closed form applies",
            move || {
                let r = SymbolicPowerReport::compute(&load_graph(&graph.graph)?, s)?;
                let applies = r.via_formula.is_some();
                Ok(Outcome::new(!applies || r.equal)
                    .with("generators", labels(&r.via_intersection))
                    .with("closed_form_applies", applies)
                    .with("equal", r.equal))
            },
        ),
        Command::Herzog { graph, s } => single(
            "herzog",
            json!({ "graph": graph.graph, "s": s }),
            "computed",
            move || {
                let g = load_graph(&graph.graph)?;
                let hyp = check_odd_cycle_neighborhood_with(&g, &limits)?;
                let j = herzog_symbolic_with(&g, s, &limits)?;
                Ok(Outcome::new(true)
                    .with("hypothesis", hyp)
                    .with("generators", labels(&j)))
            },
        ),
        Command::Lideal { graph, s, t } => single(
            "lideal",
            json!({ "graph": graph.graph, "s": s, "t": t }),
            "computed",
            move || {
                let g = load_graph(&graph.graph)?;
                let l = l_ideal(&g, s, t)?;
                let sym = symbolic_power(&g.whisker()?, s)?;
                let wp =
                    is_weakly_polymatroidal(&l, &VariableOrder::identity(l.ambient()))?.is_wp();
                Ok(Outcome::new(true)
                    .with("generators", labels(&l))
                    .with("equals_whisker_symbolic_power", l == sym)
                    .with("weakly_polymatroidal", wp))
            },
        ),
        Command::TruncationCheck { n, smax } => experiments::truncation_suite(&n, smax)?,
        Command::Reg { input, truncate } => {
            let mut inputs = input.describe();
            inputs["truncate"] = json!(truncate);
            single("reg", inputs, "computed", move || {
                let ideal = input.load()?;
                let reg = match truncate {
                    Some(t) => regularity_of_truncation(&ideal, t, &limits)?,
                    None => regularity_with(&ideal, &limits)?,
                };
                Ok(Outcome::new(true)
                    .with("reg", reg)
                    .with("reg_quotient", reg - 1))
            })
        }
        Command::Betti(input) => single("betti", input.describe(), "computed", move || {
            let table = betti_numbers_with(&input.load()?, &limits)?;
            let entries: serde_json::Value = serde_json::from_str(&table.to_json())?;
            Ok(Outcome::new(true)
                .with("table", table.to_text())
                .with("regularity", table.regularity())
                .with("projective_dimension", table.projective_dimension())
                .with("betti", entries))
        }),
        Command::Wp { command } => match command {
            WpCommand::Check { input, order } => {
                let mut inputs = input.describe();
                inputs["order"] = json!(order.labels());
                single(
                    "wp-check",
                    inputs,
                    "weakly polymatroidal under the given order",
                    move || {
                        let out = is_weakly_polymatroidal(&input.load()?, &order)?;
                        Ok(Outcome::new(out.is_wp()).with("outcome", &out))
                    },
                )
            }
            WpCommand::Search(input) => single(
                "wp-search",
                input.describe(),
                "some order is weakly polymatroidal",
                move || {
                    let search = find_wp_order_with(&input.load()?, &limits)?;
                    Ok(match &search {
                        WpSearch::Found { order, certificate } => Outcome::new(true)
                            .with("order", order.labels())
                            .with("certificate", certificate),
                        WpSearch::Exhausted => {
                            Outcome::new(false).with("order", None::<Vec<usize>>)
                        }
                    })
                },
            ),
            WpCommand::Scan { max_n } => experiments::scan(max_n, &limits)?,
        },
        Command::Vdec(input) => {
            single("vdec", input.describe(), "vertex decomposable", move || {
                let complex = match &input.graph {
                    Some(g) if input.power == 1 && !input.symbolic => {
                        load_graph(g)?.independence_complex()?
                    }
                    _ => SimplicialComplex::from_dual_ideal(&input.load()?)?,
                };
                let tree = complex.is_vertex_decomposable()?;
                Ok(Outcome::new(tree.is_some())
                    .with("facets", complex.facets())
                    .with("shedding", tree))
            })
        }
        Command::OddCycle { n, smax } => experiments::odd_cycle_regularity(&n, smax, &limits)?,
        Command::DegFormula { max } => experiments::deg_formula(max)?,
        Command::WhiskerSuite => {
            experiments::whisker_suite(&experiments::default_whisker_cases()?, &limits)
        }
        Command::Example51 => experiments::example_5_1(),
        Command::Scan { max_n } => experiments::scan(max_n, &limits)?,
        Command::TruncationReg { count } => {
            experiments::truncation_regularity_suite(count, seed, &limits)
        }
        Command::Implications { max_n, random } => {
            experiments::implication_suite(max_n, random, seed, &limits)?
        }
        Command::Bipartite { graphs, smax } => {
            let names: Vec<&str> = graphs.iter().map(String::as_str).collect();
            experiments::bipartite_suite(&names, smax)
        }
        Command::CohenMacaulay { max } => experiments::cohen_macaulay_corner(max, &limits),
    })
}

/// 0 when every row passes, 1 when some assertion fails, 2 when some row
/// could not be computed.
fn run(cli: Cli) -> anyhow::Result<u8> {
    let g = &cli.global;
    if let Some(jobs) = g.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    let mut limits = Limits::default();
    if let Some(cap) = g.cap_lattice {
        limits.lattice = cap;
    }
    if let Some(cap) = g.cap_ambient {
        limits.wp_search_ambient = cap;
    }
    let (format, seed) = (g.format, g.seed);
    let report = dispatch(cli.command, &limits, seed)?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Tsv => print!("{}", report.to_tsv()),
    }
    Ok(if report.rows.iter().any(|r| r.error.is_some()) {
        2
    } else if report.all_pass() {
        0
    } else {
        1
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
