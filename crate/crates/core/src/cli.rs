//! Command-line front end. `run` is the whole program; the binary only
//! forwards `std::env::args` and exits with the returned status.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::admissible::{self, adm};
use crate::affine_weyl::{AffineWeylGroup, Element};
use crate::config::{parse_vector, GroupConfig, GroupField, OutputFormat, Setup};
use crate::error::Error;
use crate::gln_perm;
use crate::notation::format_element;
use crate::stembridge;
use crate::straight::{self, Frobenius};
use crate::suite::{self, Scope};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable holding the size of the worker pool.
pub const THREADS_VAR: &str = "IWAHORI_THREADS";

#[derive(Debug, Parser)]
#[command(name = "iwahori", version, about = "Admissible sets, Newton strata and Bruhat order in extended affine Weyl groups")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Group preset such as GL3, SL2, PGL3, GSp4.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Cocharacter, comma separated: `--mu 1,0,0`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// `id` or `flip`.
    #[arg(long, global = true)]
    pub sigma: Option<String>,
    /// Parahoric level as generator names: `--level s1,s2`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub level: Option<Vec<String>>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// JSON config; its fields override the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PosetFormat {
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root datum, fundamental group and generators.
    Describe,
    /// The μ-admissible set (or its image at level K).
    Adm {
        #[arg(long, value_enum)]
        poset: Option<PosetFormat>,
    },
    /// Straight classes in Adm(μ) and the Newton set B(G, μ).
    Newton {
        #[arg(long, value_enum)]
        poset: Option<PosetFormat>,
    },
    /// Levi and connected-component data for one Newton class.
    ComponentsBound {
        /// Class id as printed by `newton`.
        #[arg(long = "b")]
        b: usize,
    },
    /// Positive-coroot chain from μ down to λ.
    Stembridge {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Run the minuscule lift to λ instead (λ need not be dominant).
        #[arg(long)]
        lift: bool,
    },
    /// Compare Adm(μ) with the permissible set for GL_n.
    PermCheck {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Kottwitz–Rapoport poset at level K.
    Poset,
    /// Run the regression oracles.
    Oracles {
        #[arg(long, value_enum, default_value = "all")]
        scope: Scope,
    },
}

#[derive(Debug)]
enum Failure {
    /// Exit status 2, printed with the usage line.
    Usage(String),
    /// Exit status 1.
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Rendered output plus the status to exit with.
struct Emitted {
    text: String,
    status: i32,
}

impl Emitted {
    fn ok(text: String) -> Self {
        Emitted { text, status: 0 }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if status == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return status;
        }
    };
    if let Err(msg) = configure_threads() {
        return usage(err, &msg);
    }
    match execute(&cli) {
        Ok(emitted) => {
            let written = match &cli.common.out {
                Some(path) => std::fs::write(path, &emitted.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(emitted.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => emitted.status,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    1
                }
            }
        }
        Err(Failure::Usage(msg)) => usage(err, &msg),
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn usage(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {msg}\n\n{}", Cli::command().render_usage());
    2
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("{THREADS_VAR} must be a positive integer, got `{raw}`"))?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn layered_config(common: &CommonArgs, default_group: Option<String>) -> Result<GroupConfig, Failure> {
    let mu = common
        .mu
        .as_deref()
        .map(parse_vector)
        .transpose()
        .map_err(|e| Failure::Usage(format!("--mu: {e}")))?;
    let flags = GroupConfig {
        group: common.group.clone().or(default_group).map(GroupField::Name),
        mu,
        sigma: common.sigma.clone(),
        level: common.level.clone(),
        format: common.format,
    };
    match &common.config {
        None => Ok(flags),
        Some(path) => {
            let file = GroupConfig::from_path(path).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(flags.overridden_by(file))
        }
    }
}

fn resolve(config: &GroupConfig) -> Result<Setup, Failure> {
    config.resolve().map_err(|e| Failure::Usage(e.to_string()))
}

fn require_mu(setup: &Setup) -> Result<&[i64], Failure> {
    setup
        .mu
        .as_deref()
        .ok_or_else(|| Failure::Usage("this command needs --mu".into()))
}

fn execute(cli: &Cli) -> Result<Emitted, Failure> {
    if let Command::Oracles { scope } = &cli.command {
        let format = layered_config(&cli.common, None)?.format;
        return Ok(oracles(*scope, format));
    }
    let default_group = match &cli.command {
        Command::PermCheck { n: Some(n) } => Some(format!("GL{n}")),
        _ => None,
    };
    let config = layered_config(&cli.common, default_group)?;
    let setup = resolve(&config)?;
    let ctx = Context { setup: &setup };
    match &cli.command {
        Command::Describe => ctx.describe(),
        Command::Adm { poset } => ctx.adm(*poset),
        Command::Newton { poset } => ctx.newton(*poset),
        Command::ComponentsBound { b } => ctx.components_bound(*b),
        Command::Stembridge { lambda, lift } => {
            let lambda = parse_vector(lambda).map_err(|e| Failure::Usage(format!("--lambda: {e}")))?;
            ctx.stembridge(&lambda, *lift)
        }
        Command::PermCheck { n } => ctx.perm_check(*n),
        Command::Poset => ctx.poset(),
        Command::Oracles { .. } => unreachable!(),
    }
}

fn vec_string(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn kappa_string(k: &[i64]) -> String {
    if k.is_empty() {
        "0".into()
    } else {
        let parts: Vec<String> = k.iter().map(|x| x.to_string()).collect();
        parts.join(",")
    }
}

/// Rows of strings rendered as an aligned table, TSV or a JSON array of objects.
struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn tsv(&self, header: &str) -> String {
        let mut s = format!("# {header}\n{}\n", self.columns.join("\t"));
        for r in &self.rows {
            s.push_str(&r.join("\t"));
            s.push('\n');
        }
        s
    }

    fn aligned(&self, header: &str) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &self.rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut s = format!("# {header}\n{}\n", line(self.columns.clone()));
        for r in &self.rows {
            s.push_str(&line(r.iter().map(String::as_str).collect()));
            s.push('\n');
        }
        s
    }

    fn json_rows(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| {
                self.columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| (c.to_string(), json!(v)))
                    .collect()
            })
            .collect();
        json!(rows)
    }
}

fn json_doc(meta: serde_json::Value, result: impl Serialize) -> String {
    let doc = json!({ "meta": meta, "result": result });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

struct Context<'a> {
    setup: &'a Setup,
}

impl Context<'_> {
    fn g(&self) -> &AffineWeylGroup {
        &self.setup.group
    }

    fn el(&self, w: &Element) -> String {
        format_element(self.g(), w)
    }

    fn level_label(&self) -> String {
        if self.setup.level.is_iwahori() {
            "iwahori".into()
        } else {
            self.setup.level.names(self.g()).join(",")
        }
    }

    fn mu_label(&self) -> String {
        self.setup.mu.as_deref().map_or_else(|| "-".into(), vec_string)
    }

    fn header(&self) -> String {
        format!(
            "iwahori {VERSION} group={} mu={} sigma={} K={}",
            self.g().datum().spec().label(),
            self.mu_label(),
            self.setup.sigma.name(),
            self.level_label()
        )
    }

    fn meta(&self) -> serde_json::Value {
        json!({
            "tool": format!("iwahori {VERSION}"),
            "group": self.g().datum().spec(),
            "mu": self.setup.mu,
            "sigma": self.setup.sigma.name(),
            "level": self.level_label(),
        })
    }

    fn format_or(&self, default: OutputFormat) -> OutputFormat {
        self.setup.format.unwrap_or(default)
    }

    fn render_table(&self, table: &Table, format: OutputFormat) -> Result<String, Failure> {
        match format {
            OutputFormat::Table => Ok(table.aligned(&self.header())),
            OutputFormat::Tsv => Ok(table.tsv(&self.header())),
            OutputFormat::Json => Ok(json_doc(self.meta(), table.json_rows())),
            OutputFormat::Dot => Err(Failure::Usage("dot output is only available for posets".into())),
        }
    }

    fn dot(&self, name: &str, nodes: &[(String, String)], edges: &[(usize, usize)]) -> String {
        let mut s = format!("// {}\ndigraph {name} {{\n  rankdir=BT;\n", self.header());
        for (i, (label, extra)) in nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{label}\\n{extra}\"];");
        }
        for (lo, hi) in edges {
            let _ = writeln!(s, "  n{lo} -> n{hi};");
        }
        s.push_str("}\n");
        s
    }

    fn describe(&self) -> Result<Emitted, Failure> {
        let g = self.g();
        let rd = g.datum();
        let fr = Frobenius::new(g, &self.setup.sigma)?;
        let mut t = Table::new(&["key", "value"]);
        let vecs = |vs: &[Vec<i64>]| vs.iter().map(|v| vec_string(v)).collect::<Vec<_>>().join(" ");
        t.push(vec!["group".into(), rd.name()]);
        t.push(vec!["type".into(), rd.type_label()]);
        t.push(vec!["rank".into(), rd.rank().to_string()]);
        t.push(vec!["semisimple_rank".into(), rd.semisimple_rank().to_string()]);
        t.push(vec!["simple_roots".into(), vecs(rd.simple_roots())]);
        t.push(vec!["simple_coroots".into(), vecs(rd.simple_coroots())]);
        t.push(vec!["positive_roots".into(), rd.positive_roots().len().to_string()]);
        t.push(vec!["weyl_order".into(), g.weyl().len().to_string()]);
        t.push(vec!["pi1".into(), g.pi1().to_string()]);
        t.push(vec!["sigma".into(), self.setup.sigma.name().to_string()]);
        t.push(vec!["sigma_order".into(), self.setup.sigma.order().to_string()]);
        t.push(vec!["pi1_sigma_invariants".into(), fr.pi1_invariants().to_string()]);
        for gen in g.generators() {
            t.push(vec![format!("generator {}", gen.name), self.el(&gen.element)]);
        }
        for (i, w) in g.omega_generators().iter().enumerate() {
            t.push(vec![format!("omega {i}"), self.el(w)]);
        }
        Ok(Emitted::ok(self.render_table(&t, self.format_or(OutputFormat::Table))?))
    }

    fn adm(&self, poset: Option<PosetFormat>) -> Result<Emitted, Failure> {
        let format = self.format_or(OutputFormat::Tsv);
        if poset.is_some() || format == OutputFormat::Dot {
            return self.poset();
        }
        let g = self.g();
        let mu = require_mu(self.setup)?;
        let a = adm(g, mu);
        let elements = if self.setup.level.is_iwahori() {
            a.elements
        } else {
            admissible::adm_k(g, &a, &self.setup.level)
        };
        let mut t = Table::new(&["element", "length", "kappa"]);
        for w in &elements {
            t.push(vec![self.el(w), g.length(w).to_string(), kappa_string(&g.kottwitz(w))]);
        }
        Ok(Emitted::ok(self.render_table(&t, format)?))
    }

    fn poset(&self) -> Result<Emitted, Failure> {
        let g = self.g();
        let mu = require_mu(self.setup)?;
        let a = adm(g, mu);
        let p = admissible::kr_poset(g, &a, &self.setup.level);
        match self.format_or(OutputFormat::Dot) {
            OutputFormat::Dot => {
                let nodes: Vec<(String, String)> = p
                    .nodes
                    .iter()
                    .zip(&p.ranks)
                    .map(|(w, r)| (self.el(w), format!("l={r}")))
                    .collect();
                Ok(Emitted::ok(self.dot("kr", &nodes, &p.edges)))
            }
            format => {
                let mut t = Table::new(&["lower", "upper"]);
                for &(lo, hi) in &p.edges {
                    t.push(vec![self.el(&p.nodes[lo]), self.el(&p.nodes[hi])]);
                }
                Ok(Emitted::ok(self.render_table(&t, format)?))
            }
        }
    }

    fn newton(&self, poset: Option<PosetFormat>) -> Result<Emitted, Failure> {
        let g = self.g();
        let mu = require_mu(self.setup)?;
        let fr = Frobenius::new(g, &self.setup.sigma)?;
        let a = adm(g, mu);
        let set = straight::b_set(&fr, &a)?;
        let format = self.format_or(OutputFormat::Table);
        if poset.is_some() || format == OutputFormat::Dot {
            let nodes: Vec<(String, String)> = set
                .classes
                .iter()
                .map(|c| (format!("{}", c.newton.nu), format!("kappa={}", c.newton.kappa_string())))
                .collect();
            let edges: Vec<(usize, usize)> = set.covers.iter().map(|&(hi, lo)| (lo, hi)).collect();
            return Ok(Emitted::ok(self.dot("newton", &nodes, &edges)));
        }
        let mut t = Table::new(&["id", "representative", "nu", "denom", "kappa", "members", "basic"]);
        for c in &set.classes {
            t.push(vec![
                c.id.to_string(),
                self.el(&c.representative),
                c.newton.nu.to_string(),
                c.newton.nu.denominator().to_string(),
                c.newton.kappa_string(),
                c.members_in_adm.len().to_string(),
                if set.is_basic(c.id) { "basic".into() } else { String::new() },
            ]);
        }
        Ok(Emitted::ok(self.render_table(&t, format)?))
    }

    fn components_bound(&self, id: usize) -> Result<Emitted, Failure> {
        let g = self.g();
        let mu = require_mu(self.setup)?;
        let fr = Frobenius::new(g, &self.setup.sigma)?;
        let a = adm(g, mu);
        let set = straight::b_set(&fr, &a)?;
        let class = set
            .classes
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| Error::NotInNewtonSet(format!("class id {id} (B(G, mu) has {} classes)", set.classes.len())))?;
        let report = straight::components_bound_report(&fr, &set, &class.newton)?;
        match self.format_or(OutputFormat::Json) {
            OutputFormat::Json => Ok(Emitted::ok(json_doc(self.meta(), &report))),
            format => {
                let mut t = Table::new(&["element", "length", "nu", "levi", "levi_length", "lambda_w", "certified", "bound"]);
                for w in &report.witnesses {
                    let bound = match &w.bound {
                        straight::ComponentBound::Pi1Invariants { group, .. } => group.clone(),
                        straight::ComponentBound::Discrete { marker } => marker.clone(),
                    };
                    t.push(vec![
                        w.element.clone(),
                        w.length.to_string(),
                        w.nu_raw.clone(),
                        w.levi.type_label.clone(),
                        w.levi_length.to_string(),
                        vec_string(&w.lambda_w),
                        w.lift_certified.to_string(),
                        bound,
                    ]);
                }
                Ok(Emitted::ok(self.render_table(&t, format)?))
            }
        }
    }

    fn stembridge(&self, lambda: &[i64], lift: bool) -> Result<Emitted, Failure> {
        let rd = self.g().datum();
        let mu = require_mu(self.setup)?;
        let format = self.format_or(OutputFormat::Table);
        if lift {
            let l = stembridge::minuscule_lift(rd, lambda, mu)?;
            if format == OutputFormat::Json {
                return Ok(Emitted::ok(json_doc(self.meta(), &l)));
            }
            let mut t = Table::new(&["step", "coroot", "from", "to"]);
            for (i, s) in l.steps.iter().enumerate() {
                t.push(vec![(i + 1).to_string(), vec_string(&s.coroot), vec_string(&s.from), vec_string(&s.to)]);
            }
            return Ok(Emitted::ok(self.render_table(&t, format)?));
        }
        let chain = stembridge::stembridge_chain(rd, lambda, mu)?;
        if format == OutputFormat::Json {
            return Ok(Emitted::ok(json_doc(self.meta(), &chain)));
        }
        let mut t = Table::new(&["step", "coroot", "point"]);
        t.push(vec!["0".into(), String::new(), vec_string(&chain.start)]);
        for (i, (s, p)) in chain.steps.iter().zip(&chain.points[1..]).enumerate() {
            t.push(vec![(i + 1).to_string(), vec_string(s), vec_string(p)]);
        }
        Ok(Emitted::ok(self.render_table(&t, format)?))
    }

    fn perm_check(&self, n: Option<usize>) -> Result<Emitted, Failure> {
        let g = self.g();
        if let Some(n) = n {
            if g.rank() != n {
                return Err(Failure::Usage(format!("--n {n} disagrees with group {}", g.datum().name())));
            }
        }
        let mu = require_mu(self.setup)?;
        let report = gln_perm::adm_eq_perm_check(g, mu)?;
        let status = if report.equal { 0 } else { 1 };
        let text = match self.format_or(OutputFormat::Table) {
            OutputFormat::Json => json_doc(self.meta(), &report),
            format => {
                let mut t = Table::new(&["key", "value"]);
                t.push(vec!["n".into(), report.n.to_string()]);
                t.push(vec!["mu".into(), vec_string(&report.mu)]);
                t.push(vec!["adm_size".into(), report.adm_size.to_string()]);
                t.push(vec!["perm_size".into(), report.perm_size.to_string()]);
                t.push(vec!["equal".into(), report.equal.to_string()]);
                for p in &report.only_in_adm {
                    t.push(vec!["only_in_adm".into(), p.clone()]);
                }
                for p in &report.only_in_perm {
                    t.push(vec!["only_in_perm".into(), p.clone()]);
                }
                self.render_table(&t, format)?
            }
        };
        Ok(Emitted { text, status })
    }
}

fn oracles(scope: Scope, format: Option<OutputFormat>) -> Emitted {
    let results = suite::run_oracle_suite(scope);
    let status = if results.iter().all(|r| r.passed) { 0 } else { 1 };
    let scope_name = scope.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let header = format!("iwahori {VERSION} oracles scope={scope_name}");
    let text = match format.unwrap_or(OutputFormat::Table) {
        OutputFormat::Json => json_doc(json!({ "tool": format!("iwahori {VERSION}"), "scope": scope_name }), &results),
        _ => {
            let mut s = format!("# {header}\n");
            for r in &results {
                let _ = writeln!(s, "{r}");
            }
            s
        }
    };
    Emitted { text, status }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["iwahori"];
        full.extend_from_slice(args);
        let status = run(full, &mut out, &mut err);
        (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn body(s: &str) -> Vec<&str> {
        s.lines().filter(|l| !l.starts_with('#')).collect()
    }

    #[test]
    fn adm_gl2_is_three_rows() {
        let (status, out, _) = call(&["adm", "--group", "GL2", "--mu", "1,0"]);
        assert_eq!(status, 0);
        let lines = body(&out);
        assert_eq!(lines[0], "element\tlength\tkappa");
        assert_eq!(&lines[1..], ["t[1,0]*s1\t0\t1", "t[0,1]\t1\t1", "t[1,0]\t1\t1"]);
        assert!(out.starts_with("# iwahori "));
        assert!(out.lines().next().unwrap().contains("group=GL2 mu=[1,0] sigma=id K=iwahori"));
    }

    #[test]
    fn newton_gl2_marks_basic() {
        let (status, out, _) = call(&["newton", "--group", "GL2", "--mu", "1,0"]);
        assert_eq!(status, 0);
        let lines = body(&out);
        assert_eq!(lines.len(), 3);
        assert!(lines[1].contains("(1,0)") && !lines[1].contains("basic"));
        assert!(lines[2].contains("(1/2,1/2)") && lines[2].ends_with("basic"));
    }

    #[test]
    fn describe_gsp4() {
        let (status, out, _) = call(&["describe", "--group", "GSp4", "--format", "tsv"]);
        assert_eq!(status, 0);
        assert!(out.contains("pi1\tZ\n"), "{out}");
        assert!(out.contains("rank\t3\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["adm", "--group", "GL2"]).0, 2);
        assert_eq!(call(&["adm", "--group", "GL2", "--mu", "1,0,0"]).0, 2);
        assert_eq!(call(&["adm", "--group", "XX2", "--mu", "1,0"]).0, 2);
        let (status, _, err) = call(&["stembridge", "--group", "GL2", "--mu", "1,1", "--lambda", "1,0"]);
        assert_eq!(status, 1);
        assert!(err.contains("kappa mismatch"), "{err}");
        assert_eq!(call(&["components-bound", "--group", "GL2", "--mu", "1,0", "--b", "7"]).0, 1);
    }

    #[test]
    fn stembridge_chain_output() {
        let (status, out, _) = call(&["stembridge", "--group", "GL3", "--mu", "2,1,0", "--lambda", "1,1,1"]);
        assert_eq!(status, 0);
        assert_eq!(body(&out), ["step  coroot    point", "0               [2,1,0]", "1     [1,0,-1]  [1,1,1]"]);
    }

    #[test]
    fn perm_check_and_poset() {
        let (status, out, _) = call(&["perm-check", "--n", "3", "--mu", "1,1,0", "--format", "json"]);
        assert_eq!(status, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["equal"], json!(true));
        assert_eq!(v["result"]["adm_size"], json!(7));

        let (status, out, _) = call(&["adm", "--group", "GL2", "--mu", "1,0", "--poset", "dot"]);
        assert_eq!(status, 0);
        assert!(out.starts_with("// iwahori"));
        assert_eq!(out.matches(" -> ").count(), 2);
    }

    #[test]
    fn components_json() {
        let (status, out, _) = call(&["components-bound", "--group", "GL2", "--mu", "1,0", "--b", "1"]);
        assert_eq!(status, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["basic"], json!(true));
        assert_eq!(v["meta"]["sigma"], json!("id"));
    }
}
