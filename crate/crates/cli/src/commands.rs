use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use specgraph::construct::{
    cartesian_product, complement, disjoint_union, double_graph, extended_double_cover, iterated_edc,
    iterated_edc_order, join, k_fold, kronecker_product, line_graph,
};
use specgraph::io::{emit_graph, encode_edgelist, parse_graph, GraphDocument, GraphFormat, ParseError};
use specgraph::spectra::{
    edc_spanning_trees_exact, edc_spanning_trees_formula, energy, laplacian_energy, signless_laplacian_energy,
    spanning_trees_eigen, spanning_trees_exact, spectrum_of, MatrixKind, SpectraError,
};
use specgraph::theorems::{self, CheckConfig, FamilyInput, VerifyInput, DEFAULT_MAX_VERTICES};
use specgraph::{Graph, TheoremError, TheoremId, Verdict};

use crate::args::{BinaryOp, Command, EnergyArg, FormatArg, MatrixArg, TreeMethod, UnaryOp};
use crate::canonical;

pub const SCHEMA_VERSION: u32 = 1;
pub const MAX_VERTICES_VAR: &str = "SPECGRAPH_MAX_VERTICES";

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DEVIATION: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Theorem(#[from] TheoremError),
    #[error("{0}")]
    Spectra(#[from] SpectraError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Theorem(TheoremError::Parameter(_)) => EXIT_USAGE,
            _ => EXIT_INPUT,
        }
    }
}

pub struct Output {
    pub stdout: String,
    pub exit_code: u8,
}

struct Input {
    path: PathBuf,
    format: GraphFormat,
    graph: Graph,
}

impl Input {
    fn load(path: &Path) -> Result<Self, CliError> {
        let payload = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
        let format = GraphFormat::detect(path.extension().and_then(|e| e.to_str()), &payload);
        let graph = parse_graph(&GraphDocument::new(format, payload))
            .map_err(|source| CliError::Parse { path: path.to_path_buf(), source })?;
        Ok(Self { path: path.to_path_buf(), format, graph })
    }

    fn digest(&self) -> Value {
        let hash = Sha256::digest(encode_edgelist(&self.graph).as_bytes());
        json!({
            "path": self.path.display().to_string(),
            "format": self.format,
            "n": self.graph.n(),
            "m": self.graph.m(),
            "sha256": hex::encode(hash),
        })
    }
}

fn max_vertices() -> Result<usize, CliError> {
    match env::var(MAX_VERTICES_VAR) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_VERTICES_VAR} must be a non-negative integer, got `{raw}`"))),
        Err(_) => Ok(DEFAULT_MAX_VERTICES),
    }
}

fn ensure_order(order: Option<usize>, cap: usize) -> Result<(), CliError> {
    match order {
        Some(v) if v <= cap => Ok(()),
        v => Err(TheoremError::ResourceCap { vertices: v.unwrap_or(usize::MAX), cap }.into()),
    }
}

fn matrix_kind(m: MatrixArg) -> MatrixKind {
    match m {
        MatrixArg::A => MatrixKind::Adjacency,
        MatrixArg::L => MatrixKind::Laplacian,
        MatrixArg::Q => MatrixKind::SignlessLaplacian,
    }
}

fn parse_theorem(raw: &str) -> Result<TheoremId, CliError> {
    raw.parse().map_err(|e: TheoremError| CliError::Usage(e.to_string()))
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize to JSON")
}

fn report(command: &str, args: Value, inputs: &[&Input], result: Value) -> String {
    canonical::render(json!({
        "schema_version": SCHEMA_VERSION,
        "command": { "name": command, "args": args },
        "inputs": inputs.iter().map(|i| i.digest()).collect::<Vec<_>>(),
        "result": result,
    }))
}

fn verdict_exit(v: Verdict) -> u8 {
    match v {
        Verdict::Deviation => EXIT_DEVIATION,
        Verdict::Confirmed | Verdict::HypothesisNotMet => EXIT_OK,
    }
}

pub fn run(command: &Command) -> Result<Output, CliError> {
    let cap = max_vertices()?;
    let ok = |stdout| Ok(Output { stdout, exit_code: EXIT_OK });
    match command {
        Command::Spectra { input, matrix } => {
            let g = Input::load(input)?;
            ensure_order(Some(g.graph.n()), cap)?;
            let kind = matrix_kind(*matrix);
            let spec = spectrum_of::<f64>(&g.graph, kind);
            let args = json!({ "matrix": kind.short_name() });
            ok(report("spectra", args, &[&g], json!({ "matrix": kind, "values": spec.values(), "tol": spec.tol() })))
        }
        Command::Energy { input, kind } => {
            let g = Input::load(input)?;
            ensure_order(Some(g.graph.n()), cap)?;
            let (name, value) = match kind {
                EnergyArg::E => ("e", energy::<f64>(&g.graph)),
                EnergyArg::Le => ("le", laplacian_energy::<f64>(&g.graph)?),
                EnergyArg::LePlus => ("le+", signless_laplacian_energy::<f64>(&g.graph)?),
            };
            ok(report("energy", json!({ "kind": name }), &[&g], to_value(value)))
        }
        Command::Construct { input, op, k, with, op2, out } => {
            if op.is_none() && with.is_none() {
                return Err(CliError::Usage("construct needs --op, --with/--op2, or both".into()));
            }
            let g = Input::load(input)?;
            let mut built = g.graph.clone();
            if let Some(op) = op {
                built = apply_unary(&built, *op, *k, cap)?;
            }
            if let (Some(path), Some(op2)) = (with, op2) {
                let h = Input::load(path)?;
                built = apply_binary(&built, &h.graph, *op2, cap)?;
            }
            let format = match out {
                FormatArg::Graph6 => GraphFormat::Graph6,
                FormatArg::Edgelist => GraphFormat::Edgelist,
            };
            ok(emit_graph(&built, format).payload)
        }
        Command::Trees { input, method } => {
            let g = Input::load(input)?;
            if g.graph.n() == 0 {
                return Err(CliError::Usage("spanning trees need at least one vertex".into()));
            }
            let (name, result) = trees(&g.graph, *method, cap)?;
            ok(report("trees", json!({ "method": name }), &[&g], result))
        }
        Command::Verify { input, theorem, input2, k, s, matrix, eps } => {
            let id = parse_theorem(theorem)?;
            if id.is_family() {
                return Err(CliError::Usage(format!("`{id}` is a family generator; use the family command")));
            }
            let g = Input::load(input)?;
            let h = input2.as_deref().map(Input::load).transpose()?;
            let cfg = CheckConfig { eps: *eps, max_vertices: cap };
            let verify_input = VerifyInput {
                graph: &g.graph,
                other: h.as_ref().map(|h| &h.graph),
                k: *k,
                s: *s,
                kind: matrix.map(matrix_kind),
            };
            let result = theorems::verify(id, &verify_input, &cfg)?;
            let args = json!({
                "theorem": id,
                "k": k,
                "s": s,
                "matrix": matrix.map(|m| matrix_kind(m).short_name()),
                "eps": eps,
            });
            let inputs: Vec<&Input> = std::iter::once(&g).chain(h.as_ref()).collect();
            Ok(Output {
                stdout: report("verify", args, &inputs, to_value(&result)),
                exit_code: verdict_exit(result.verdict),
            })
        }
        Command::Family { theorem, input, input2, p, k, t, eps } => {
            let id = parse_theorem(theorem)?;
            if !id.is_family() {
                return Err(CliError::Usage(format!("`{id}` is not a family generator; use the verify command")));
            }
            let g = Input::load(input)?;
            let h = input2.as_deref().map(Input::load).transpose()?;
            let cfg = CheckConfig { eps: *eps, max_vertices: cap };
            let family_input =
                FamilyInput { graph: &g.graph, other: h.as_ref().map(|h| &h.graph), p: *p, k: *k, t: *t };
            let outcome = theorems::family(id, &family_input, &cfg)?;
            let args = json!({ "theorem": id, "p": p, "k": k, "t": t, "eps": eps });
            let inputs: Vec<&Input> = std::iter::once(&g).chain(h.as_ref()).collect();
            let exit_code = verdict_exit(outcome.report.verdict);
            Ok(Output { stdout: report("family", args, &inputs, to_value(&outcome)), exit_code })
        }
    }
}

fn required_k(op: &str, k: Option<usize>) -> Result<usize, CliError> {
    match k {
        Some(k) if k >= 1 => Ok(k),
        Some(_) => Err(CliError::Usage(format!("--k must be at least 1 for {op}"))),
        None => Err(CliError::Usage(format!("{op} needs --k"))),
    }
}

fn apply_unary(g: &Graph, op: UnaryOp, k: Option<usize>, cap: usize) -> Result<Graph, CliError> {
    let n = g.n();
    Ok(match op {
        UnaryOp::Edc => {
            ensure_order(iterated_edc_order(n, 1), cap)?;
            extended_double_cover(g)
        }
        UnaryOp::EdcK => {
            let k = required_k("edc^k", k)?;
            ensure_order(iterated_edc_order(n, k), cap)?;
            iterated_edc(g, k)
        }
        UnaryOp::Double => {
            ensure_order(n.checked_mul(2), cap)?;
            double_graph(g)
        }
        UnaryOp::Kfold => {
            let k = required_k("kfold", k)?;
            ensure_order(n.checked_mul(k), cap)?;
            k_fold(g, k)
        }
        UnaryOp::Line => {
            ensure_order(Some(g.m()), cap)?;
            line_graph(g)
        }
        UnaryOp::Complement => complement(g),
    })
}

fn apply_binary(g: &Graph, h: &Graph, op: BinaryOp, cap: usize) -> Result<Graph, CliError> {
    Ok(match op {
        BinaryOp::Join | BinaryOp::Union => {
            ensure_order(g.n().checked_add(h.n()), cap)?;
            if op == BinaryOp::Join {
                join(g, h)
            } else {
                disjoint_union(g, h)
            }
        }
        BinaryOp::Cartesian | BinaryOp::Kronecker => {
            ensure_order(g.n().checked_mul(h.n()), cap)?;
            if op == BinaryOp::Cartesian {
                cartesian_product(g, h)
            } else {
                kronecker_product(g, h)
            }
        }
    })
}

fn trees(g: &Graph, method: TreeMethod, cap: usize) -> Result<(&'static str, Value), CliError> {
    Ok(match method {
        TreeMethod::Exact => ("exact", json!({ "count": spanning_trees_exact(g).to_string() })),
        TreeMethod::Eigen => {
            ensure_order(Some(g.n()), cap)?;
            ("eigen", json!({ "count": spanning_trees_eigen::<f64>(g) }))
        }
        TreeMethod::EdcFormula => {
            ensure_order(iterated_edc_order(g.n(), 1), cap)?;
            let formula = edc_spanning_trees_formula::<f64>(g);
            let result = json!({
                "count": formula.general,
                "bipartite_form": formula.bipartite,
                "base_count": formula.base_trees.to_string(),
                "cover_count_exact": edc_spanning_trees_exact(g).to_string(),
            });
            ("edc-formula", result)
        }
    })
}
