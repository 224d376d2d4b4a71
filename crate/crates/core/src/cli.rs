//! Command-line front end. The binary parses [`Cli`] and hands it to [`execute`].

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::conjectures::{check_nabla_p1n, run_scope, ConjectureReport, Scope, Verdict};
use crate::error::{Error, Result};
use crate::macdonald::{b_mu, htilde, t_mu};
use crate::poincare::{compute, f_truncated_infinite, Method, PoincareJson, PoincareSeries};
use crate::qt_arith::emit::{poly_latex, poly_plain, poly_terms_json, rational_latex, rational_plain, TermJson};
use crate::qt_arith::PolyQAT;
use crate::symfunc::{basis_p, link_sym, link_sym_normalized, ExpansionJson, Partition, SymFunc};
use crate::words::{enumerate_barred_fubini, BarredWord, BinaryWord};

/// Largest word length accepted without `--unsafe-max`.
pub const DEFAULT_MAX_LEN: usize = 6;

/// Largest partition size for `macdonald`, which only sums over fillings.
pub const DEFAULT_MAX_PARTITION: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "linksym", version, about = "Exact q,a,t computations for link symmetric functions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Raise the word-length limit to this value.
    #[arg(long, value_name = "N", global = true)]
    pub unsafe_max: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recurrence,
    BarredFubini,
    TruncatedInfinite,
    InnerProduct,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    Routes,
    Lemma23,
    Conj43,
    Bergeron,
    Epos,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré series f_v(q, a, t).
    Fv {
        v: BinaryWord,
        #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
        method: MethodArg,
        /// q-degree for the truncated route.
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
    /// Link symmetric function L_v in the monomial basis.
    Linksym {
        v: BinaryWord,
        /// Print (1-q)^(n-|v|) L_v instead.
        #[arg(long)]
        normalized: bool,
    },
    /// Barred Fubini words of v with their statistics.
    Fubini { v: BinaryWord },
    /// The cell alphabet and modified Macdonald polynomial of a partition.
    Macdonald { partition: Partition },
    /// Compare nabla p_{1^n} with the normalized L_{0^n}.
    #[command(name = "nabla-p1n")]
    NablaP1n { n: usize },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value_t = ScopeArg::All)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// q-order for truncated and e-positivity checks (default 8 and 10).
        #[arg(long)]
        order: Option<u32>,
        /// Exit with status 1 when any check fails.
        #[arg(long)]
        strict: bool,
    },
}

/// Rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    /// False when `--strict` is set and a check failed.
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }
}

fn check_len(len: usize, cli_max: Option<usize>) -> Result<()> {
    check_size(len, cli_max.unwrap_or(DEFAULT_MAX_LEN))
}

fn check_size(len: usize, max: usize) -> Result<()> {
    if len > max {
        return Err(Error::TooLarge { len, max });
    }
    Ok(())
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

/// `fv --method all` as JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RoutesJson {
    pub v: BinaryWord,
    pub routes: Vec<PoincareJson>,
    pub truncated_order: u32,
    pub truncated: Vec<TermJson>,
    pub verdict: String,
}

/// One row of the `fubini` table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FubiniRow {
    pub word: BarredWord,
    pub area: u32,
    pub bar: usize,
    pub dinv: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MacdonaldJson {
    pub partition: Partition,
    pub cells: Vec<(u32, u32)>,
    pub t_mu: String,
    pub htilde: ExpansionJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NablaJson {
    pub n: usize,
    pub nabla: ExpansionJson,
    pub l_tilde: ExpansionJson,
    pub report: ConjectureReport,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyJson {
    pub reports: Vec<ConjectureReport>,
    pub summary: Summary,
}

fn render_symfunc(f: &SymFunc, format: Format) -> String {
    match format {
        Format::Plain => f.to_plain(),
        Format::Latex => f.to_latex(),
        Format::Json => to_json(&f.to_json()),
    }
}

fn method_of(m: MethodArg) -> Option<Method> {
    match m {
        MethodArg::Recurrence => Some(Method::Recurrence),
        MethodArg::BarredFubini => Some(Method::BarredFubini),
        MethodArg::TruncatedInfinite => Some(Method::TruncatedInfinite),
        MethodArg::InnerProduct => Some(Method::InnerProduct),
        MethodArg::All => None,
    }
}

fn render_series(s: &PoincareSeries, format: Format) -> String {
    match format {
        Format::Plain => format!("f_{} [{}] = {}", s.v, s.method.name(), rational_plain(&s.value)),
        Format::Latex => format!("f_{{{}}} = {}", s.v, rational_latex(&s.value)),
        Format::Json => to_json(&s.to_json()),
    }
}

fn cmd_fv(v: &BinaryWord, method: MethodArg, order: u32, format: Format) -> Result<Output> {
    if let Some(m) = method_of(method) {
        return Ok(Output::ok(render_series(&compute(v, m, order)?, format)));
    }
    let mut routes = vec![compute(v, Method::Recurrence, order)?, compute(v, Method::BarredFubini, order)?];
    if v.len() <= 5 {
        routes.push(compute(v, Method::InnerProduct, order)?);
    }
    let truncated = f_truncated_infinite(v, order);
    let exact_agree = routes.windows(2).all(|w| w[0].value == w[1].value);
    let agree = exact_agree && routes[0].value.q_series(order) == truncated;
    let verdict = if agree { "AGREE" } else { "DISAGREE" };
    let text = match format {
        Format::Json => to_json(&RoutesJson {
            v: v.clone(),
            routes: routes.iter().map(PoincareSeries::to_json).collect(),
            truncated_order: order,
            truncated: poly_terms_json(&truncated),
            verdict: verdict.to_string(),
        }),
        Format::Plain => {
            let mut lines: Vec<String> = routes.iter().map(|s| render_series(s, format)).collect();
            lines.push(format!("f_{v} [truncated_infinite, q^<={order}] = {}", poly_plain(&truncated)));
            lines.push(verdict.to_string());
            lines.join("\n")
        }
        Format::Latex => {
            let mut lines: Vec<String> = routes
                .iter()
                .map(|s| format!("{} & \\text{{{}}}", rational_latex(&s.value), s.method.name()))
                .collect();
            lines.push(format!("{} + O(q^{{{}}}) & \\text{{truncated}}", poly_latex(&truncated), order + 1));
            format!("\\begin{{aligned}}\n{}\n\\end{{aligned}}\n% {verdict}", lines.join(" \\\\\n"))
        }
    };
    Ok(Output::ok(text))
}

fn cmd_linksym(v: &BinaryWord, normalized: bool, format: Format) -> Result<Output> {
    let f = if normalized { link_sym_normalized(v)? } else { link_sym(v) };
    Ok(Output::ok(render_symfunc(&f, format)))
}

fn fubini_rows(v: &BinaryWord) -> Vec<FubiniRow> {
    enumerate_barred_fubini(v)
        .into_iter()
        .map(|w| FubiniRow { area: w.area(), bar: w.bar_count(), dinv: w.dinv_vector(), word: w })
        .collect()
}

fn cmd_fubini(v: &BinaryWord, format: Format) -> Output {
    let rows = fubini_rows(v);
    let text = match format {
        Format::Json => to_json(&rows),
        Format::Plain => {
            let width = rows.iter().map(|r| r.word.to_string().chars().count()).max().unwrap_or(4).max(4);
            let mut lines = vec![format!("{:<width$}  area  bar  dinv", "word")];
            for r in &rows {
                let d: Vec<String> = r.dinv.iter().map(u32::to_string).collect();
                lines.push(format!("{:<width$}  {:>4}  {:>3}  ({})", r.word.to_string(), r.area, r.bar, d.join(",")));
            }
            lines.push(format!("{} words", rows.len()));
            lines.join("\n")
        }
        Format::Latex => {
            let mut lines =
                vec!["\\begin{tabular}{lccc}".to_string(), "$\\gamma$ & area & bar & dinv \\\\ \\hline".to_string()];
            for r in &rows {
                let word: String = r
                    .word
                    .levels()
                    .iter()
                    .zip(r.word.bars())
                    .map(|(x, &b)| if b { format!("\\bar{{{x}}}") } else { x.to_string() })
                    .collect();
                let d: Vec<String> = r.dinv.iter().map(u32::to_string).collect();
                lines.push(format!("${word}$ & {} & {} & $({})$ \\\\", r.area, r.bar, d.join(",")));
            }
            lines.push("\\end{tabular}".into());
            lines.join("\n")
        }
    };
    Output::ok(text)
}

fn cmd_macdonald(mu: &Partition, format: Format) -> Output {
    let b = b_mu(mu);
    let t = t_mu(mu);
    let t_poly = PolyQAT::monomial(t.q, 0, t.t);
    let h = htilde(mu);
    let text = match format {
        Format::Json => to_json(&MacdonaldJson {
            partition: mu.clone(),
            cells: b.cells.clone(),
            t_mu: poly_plain(&t_poly),
            htilde: h.to_json(),
        }),
        Format::Plain => {
            format!("B_({mu}) = {b}\nT_({mu}) = {}\nHtilde_({mu}) = {}", poly_plain(&t_poly), h.to_plain())
        }
        Format::Latex => {
            let cells: Vec<String> =
                b.monomials().iter().map(|m| poly_latex(&PolyQAT::monomial(m.q, 0, m.t))).collect();
            format!(
                "B_{{{mu}}} = \\{{{}\\}}, \\quad T_{{{mu}}} = {}\n\\widetilde{{H}}_{{{mu}}} = {}",
                cells.join(", "),
                poly_latex(&t_poly),
                h.to_latex()
            )
        }
    };
    Output::ok(text)
}

fn cmd_nabla_p1n(n: usize, format: Format) -> Result<Output> {
    let report = check_nabla_p1n(n);
    let nabla = crate::macdonald::nabla(&basis_p(&Partition::column(n)));
    let lt = link_sym_normalized(&BinaryWord::zeros(n))?;
    let text = match format {
        Format::Json => {
            to_json(&NablaJson { n, nabla: nabla.to_json(), l_tilde: lt.to_json(), report: report.clone() })
        }
        Format::Plain => format!("nabla p_1^{n} = {}\nLtilde_0^{n} = {}\n{report}", nabla.to_plain(), lt.to_plain()),
        Format::Latex => format!(
            "\\nabla p_{{1^{{{n}}}}} = {}\n\\widetilde{{L}}_{{0^{{{n}}}}} = {}\n% {report}",
            nabla.to_latex(),
            lt.to_latex()
        ),
    };
    Ok(Output { text, success: report.verdict != Verdict::Fail })
}

fn scope_of(s: ScopeArg) -> Scope {
    match s {
        ScopeArg::Routes => Scope::Routes,
        ScopeArg::Lemma23 => Scope::Lemma23,
        ScopeArg::Conj43 => Scope::Conj43,
        ScopeArg::Bergeron => Scope::Bergeron,
        ScopeArg::Epos => Scope::Epos,
        ScopeArg::All => Scope::All,
    }
}

pub fn summarize(reports: &[ConjectureReport]) -> Summary {
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    Summary {
        total: reports.len(),
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        not_applicable: count(Verdict::NotApplicable),
    }
}

fn cmd_verify(scope: ScopeArg, max_n: usize, order: Option<u32>, strict: bool, format: Format) -> Output {
    let scope = scope_of(scope);
    let reports = match (scope, order) {
        (Scope::All, None) => {
            let mut r = run_scope(Scope::Routes, max_n, 8);
            for s in [Scope::Lemma23, Scope::Conj43, Scope::Bergeron] {
                r.extend(run_scope(s, max_n, 0));
            }
            r.extend(run_scope(Scope::Epos, max_n, 10));
            r
        }
        (Scope::Epos, None) => run_scope(scope, max_n, 10),
        (_, o) => run_scope(scope, max_n, o.unwrap_or(8)),
    };
    let summary = summarize(&reports);
    let success = !strict || summary.failed == 0;
    let text = match format {
        Format::Json => to_json(&VerifyJson { reports, summary }),
        Format::Plain => {
            let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            lines.push(format!(
                "{} checks: {} passed, {} failed, {} not applicable",
                summary.total, summary.passed, summary.failed, summary.not_applicable
            ));
            lines.join("\n")
        }
        Format::Latex => {
            let mut lines =
                vec!["\\begin{tabular}{lll}".to_string(), "identity & parameters & verdict \\\\ \\hline".to_string()];
            for r in &reports {
                let verdict = match r.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "fail",
                    Verdict::NotApplicable => "n/a",
                };
                lines.push(format!("\\texttt{{{}}} & \\texttt{{{}}} & {verdict} \\\\", r.id, r.parameters));
            }
            lines.push("\\end{tabular}".into());
            lines.join("\n")
        }
    };
    Output { text, success }
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Output> {
    let format = cli.format;
    match &cli.command {
        Command::Fv { v, method, order } => {
            check_len(v.len(), cli.unsafe_max)?;
            cmd_fv(v, *method, *order, format)
        }
        Command::Linksym { v, normalized } => {
            check_len(v.len(), cli.unsafe_max)?;
            cmd_linksym(v, *normalized, format)
        }
        Command::Fubini { v } => {
            check_len(v.len(), cli.unsafe_max)?;
            Ok(cmd_fubini(v, format))
        }
        Command::Macdonald { partition } => {
            check_size(partition.size(), cli.unsafe_max.unwrap_or(DEFAULT_MAX_PARTITION))?;
            Ok(cmd_macdonald(partition, format))
        }
        Command::NablaP1n { n } => {
            check_len(*n, cli.unsafe_max)?;
            if *n == 0 {
                return Err(Error::Parse("n must be at least 1".into()));
            }
            cmd_nabla_p1n(*n, format)
        }
        Command::Verify { scope, max_n, order, strict } => {
            check_len(*max_n, cli.unsafe_max)?;
            Ok(cmd_verify(*scope, *max_n, *order, *strict, format))
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> std::result::Result<Output, String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| e.to_string())?;
    execute(&cli).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Output {
        run_from(std::iter::once("linksym").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn fv_commands() {
        assert_eq!(run(&["fv", "1"]).text, "f_1 [recurrence] = 1 + a");
        assert_eq!(run(&["fv", "0", "--method", "recurrence"]).text, "f_0 [recurrence] = (1 + a)/(1 - q)");
        let all = run(&["fv", "11", "--method", "all"]).text;
        assert!(all.ends_with("AGREE"), "{all}");
        assert!(!all.contains("DISAGREE"));
    }

    #[test]
    fn linksym_commands() {
        assert_eq!(run(&["linksym", "11"]).text, "m[2] + (1 + t)*m[1,1]");
        assert_eq!(run(&["linksym", "0", "--normalized"]).text, "m[1]");
    }

    #[test]
    fn fubini_command() {
        let out = run(&["fubini", "110"]).text;
        assert!(out.contains("001'"));
        assert!(out.ends_with("2 words"));
        assert!(run(&["fubini", "000"]).text.ends_with("7 words"));
    }

    #[test]
    fn size_guard() {
        let err = run_from(["linksym", "linksym", "0000000"]).unwrap_err();
        assert!(err.contains("--unsafe-max"), "{err}");
        assert!(run_from(["linksym", "fubini", "0000000", "--unsafe-max", "7"]).is_ok());
    }

    #[test]
    fn bad_input() {
        assert!(run_from(["linksym", "fv", "012"]).is_err());
        assert!(run_from(["linksym", "macdonald", "1,2"]).is_err());
    }
}
