//! Text formats.
//!
//! * DIMACS CNF: `p cnf <n> <m>` then `m` clauses of signed 1-based
//!   literals, each terminated by `0`. Clauses may span lines. `c` lines
//!   are comments and a line starting with `%` ends the input.
//! * XNF: `p xnf <n> <m>` then `m` lines `e <rhs> <v1> … <vk> 0` with
//!   `rhs` in `{0,1}`, plus optional `w <v> <weight>` lines and `c`
//!   comments.
//! * Query sidecar: `mode <max|exact>` and `d <int>` lines.
//! * DIMACS graph: `p edge <n> <m>` then `m` lines `e <u> <v>`.
//!
//! Writers emit the canonical form, so `parse(write(x)) == x` for every
//! normalized value.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{AffineEquation, AffineSystem, CnfFormula, DifferQuery, Instance, Literal, Mode, VarId};
use crate::reductions::SimpleGraph;

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .take_while(|(_, l)| !l.starts_with('%'))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::parse(line, format!("invalid {what} `{token}`")))
}

/// Largest variable or vertex count a header may declare.
pub const MAX_DECLARED: usize = 1 << 24;

fn header(line: usize, text: &str, kind: &str) -> Result<(usize, usize)> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let ["p", k, n, m] = tokens.as_slice() else {
        return Err(Error::parse(line, format!("expected header `p {kind} <n> <m>`")));
    };
    if *k != kind {
        return Err(Error::parse(line, format!("expected header `p {kind} <n> <m>`")));
    }
    let n: usize = parse_num(line, n, "count")?;
    if n > MAX_DECLARED {
        return Err(Error::parse(line, format!("{n} exceeds the supported maximum of {MAX_DECLARED}")));
    }
    Ok((n, parse_num(line, m, "item count")?))
}

pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut lines = content_lines(text);
    let (hline, htext) = lines.next().ok_or_else(|| Error::parse(0, "missing header"))?;
    let (n, m) = header(hline, htext, "cnf")?;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        for token in l.split_whitespace() {
            let value: i64 = parse_num(line, token, "literal")?;
            match Literal::from_dimacs(value) {
                None => clauses.push(std::mem::take(&mut current)),
                Some(lit) if lit.var.0 >= n => {
                    return Err(Error::parse(line, format!("literal {value} exceeds {n} variables")));
                }
                Some(lit) => current.push(lit),
            }
        }
    }
    if !current.is_empty() {
        return Err(Error::parse(last_line, "unterminated clause"));
    }
    if clauses.len() != m {
        return Err(Error::parse(hline, format!("header declares {m} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(n, clauses)
}

pub fn write_dimacs_cnf(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.num_clauses());
    for c in phi.clauses() {
        for l in c.literals() {
            let _ = write!(out, "{} ", l.to_dimacs());
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse_xnf(text: &str) -> Result<AffineSystem> {
    let mut lines = content_lines(text);
    let (hline, htext) = lines.next().ok_or_else(|| Error::parse(0, "missing header"))?;
    let (n, m) = header(hline, htext, "xnf")?;
    let mut equations = Vec::new();
    let mut weights: Option<Vec<u64>> = None;
    let var = |line: usize, token: &str| -> Result<VarId> {
        let v: usize = parse_num(line, token, "variable")?;
        if v == 0 || v > n {
            return Err(Error::parse(line, format!("variable {v} outside 1..={n}")));
        }
        Ok(VarId(v - 1))
    };
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.as_slice() {
            ["e", rhs, rest @ ..] => {
                let rhs = match *rhs {
                    "0" => false,
                    "1" => true,
                    other => return Err(Error::parse(line, format!("right-hand side `{other}` is not 0 or 1"))),
                };
                let Some((&"0", vars)) = rest.split_last() else {
                    return Err(Error::parse(line, "equation must end with 0"));
                };
                let vars = vars.iter().map(|t| var(line, t)).collect::<Result<Vec<_>>>()?;
                equations.push(AffineEquation::new(vars, rhs));
            }
            ["w", v, k] => {
                let v = var(line, v)?;
                let k: u64 = parse_num(line, k, "weight")?;
                if k == 0 {
                    return Err(Error::parse(line, "weight must be at least 1"));
                }
                weights.get_or_insert_with(|| vec![1; n])[v.0] = k;
            }
            _ => return Err(Error::parse(line, format!("unrecognized line `{l}`"))),
        }
    }
    if equations.len() != m {
        return Err(Error::parse(hline, format!("header declares {m} equations, found {}", equations.len())));
    }
    let sys = AffineSystem::new(n, equations)?;
    match weights {
        Some(w) => sys.with_weights(w),
        None => Ok(sys),
    }
}

pub fn write_xnf(sys: &AffineSystem) -> String {
    let mut out = format!("p xnf {} {}\n", sys.num_vars(), sys.equations().len());
    for eq in sys.equations() {
        let _ = write!(out, "e {}", eq.rhs() as u8);
        for v in eq.vars() {
            let _ = write!(out, " {}", v.0 + 1);
        }
        out.push_str(" 0\n");
    }
    for (i, &w) in sys.weights().iter().enumerate() {
        if w != 1 {
            let _ = writeln!(out, "w {} {w}", i + 1);
        }
    }
    out
}

pub fn parse_query(text: &str) -> Result<DifferQuery> {
    let mut mode = None;
    let mut d = None;
    for (line, l) in content_lines(text) {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.as_slice() {
            ["mode", m] if mode.is_none() => {
                mode = Some(m.parse::<Mode>().map_err(|e| Error::parse(line, e.to_string()))?)
            }
            ["d", v] if d.is_none() => d = Some(parse_num(line, v, "distance")?),
            _ => return Err(Error::parse(line, format!("unrecognized line `{l}`"))),
        }
    }
    match (mode, d) {
        (Some(mode), Some(d)) => Ok(DifferQuery { mode, d }),
        _ => Err(Error::parse(0, "query needs both `mode` and `d` lines")),
    }
}

pub fn write_query(q: &DifferQuery) -> String {
    format!("mode {}\nd {}\n", q.mode, q.d)
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = content_lines(text);
    let (hline, htext) = lines.next().ok_or_else(|| Error::parse(0, "missing header"))?;
    let (n, m) = header(hline, htext, "edge")?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let ["e", u, v] = tokens.as_slice() else {
            return Err(Error::parse(line, format!("unrecognized line `{l}`")));
        };
        let u: usize = parse_num(line, u, "vertex")?;
        let v: usize = parse_num(line, v, "vertex")?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::parse(line, format!("vertex outside 1..={n}")));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(Error::parse(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    SimpleGraph::new(n, edges)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("p edge {} {}\n", g.num_vertices(), g.edges().len());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceFormat {
    DimacsCnf,
    Xnf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub format: InstanceFormat,
    pub instance: Instance,
}

impl InstanceFile {
    pub fn new(instance: Instance) -> Self {
        let format = match instance {
            Instance::Cnf(_) => InstanceFormat::DimacsCnf,
            Instance::Affine(_) => InstanceFormat::Xnf,
        };
        InstanceFile { format, instance }
    }
}

/// Detects the format from the header line.
pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let (line, first) = content_lines(text).next().ok_or_else(|| Error::parse(0, "missing header"))?;
    match first.split_whitespace().nth(1) {
        Some("cnf") => Ok(InstanceFile { format: InstanceFormat::DimacsCnf, instance: parse_dimacs_cnf(text)?.into() }),
        Some("xnf") => Ok(InstanceFile { format: InstanceFormat::Xnf, instance: parse_xnf(text)?.into() }),
        _ => Err(Error::parse(line, "expected a `p cnf` or `p xnf` header")),
    }
}

pub fn write_instance(instance: &Instance) -> String {
    match instance {
        Instance::Cnf(phi) => write_dimacs_cnf(phi),
        Instance::Affine(sys) => write_xnf(sys),
    }
}
