//! Command-line front end. Problems arrive as JSON documents (or are
//! generated by the built-in families), reports leave as JSON on stdout and
//! diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 self-test failure, 2 invalid input, 3 parse
//! error, 4 failed mathematical precondition.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::biext::{
    jump_identity_check, jump_identity_symbolic, make_mixed_extension, mu_coordinates, pullback_test_curve, tau_tilde,
    torsion_invariants, torsion_pairing, MixedExtension, Ring,
};
use crate::ceresa::build_ceresa;
use crate::exact::{format_rational, parse_rational, MatrixQ, Rational};
use crate::families::{ceresa_extension, jordan_classes, jordan_rep};
use crate::heights::{
    check_class, check_polarization, h_q, h_q_symbolic, height_pairing, height_pairing_symbolic, PairingReport,
};
use crate::koszul::{build_complexes, multi_indices, Cochain, MonodromyRep, Which};
use crate::selftest;
use crate::{Error, Result};

pub const SCHEMA_VERSION: &str = "1";

/// Rows of rational strings.
pub type Grid = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: String,
    pub rep: RepDocument,
    /// One row per variable: the components `α_i` of a degree-1 cochain.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<QueryDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDocument {
    pub rank: usize,
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub logs: Option<Vec<Grid>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unipotents: Option<Vec<Grid>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarization: Option<Grid>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingName {
    #[default]
    Rational,
    Integer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDocument {
    /// `γ_i`, one per variable.
    pub gamma: Vec<String>,
    #[serde(default)]
    pub ring: RingName,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
pub enum PairingKind {
    /// `h(t)(α, β)` with `β` a class of the dual.
    #[default]
    #[serde(rename = "h")]
    #[value(name = "h")]
    H,
    /// `h_Q(t)(α, β)` with both classes of the polarized system.
    #[serde(rename = "hQ")]
    #[value(name = "hQ")]
    HQ,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<String>>,
    /// 1-based indices of the positive variables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stratum: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<PairingKind>,
}

/// A parsed and shape-checked document.
#[derive(Clone, Debug)]
pub struct Problem {
    pub rep: MonodromyRep,
    pub alpha: Option<Cochain<Rational>>,
    pub beta: Option<Cochain<Rational>>,
    pub gamma: Option<(Vec<Rational>, Ring)>,
    pub query: QueryDocument,
}

pub fn parse_document(text: &str) -> Result<ProblemDocument> {
    let doc: ProblemDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unsupported schema_version {:?}", doc.schema_version)));
    }
    Ok(doc)
}

fn parse_row(row: &[String]) -> Result<Vec<Rational>> {
    row.iter().map(|s| parse_rational(s)).collect()
}

fn parse_grid(g: &Grid) -> Result<Vec<Vec<Rational>>> {
    g.iter().map(|r| parse_row(r)).collect()
}

fn shaped(rows: Vec<Vec<Rational>>, nrows: usize, ncols: usize, what: &str) -> Result<Vec<Vec<Rational>>> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::DimensionMismatch(format!("{what} must be {nrows}x{ncols}")));
    }
    Ok(rows)
}

fn matrix(g: &Grid, n: usize, what: &str) -> Result<MatrixQ> {
    Ok(MatrixQ::from_rows(n, shaped(parse_grid(g)?, n, n, what)?))
}

fn cochain(g: &Grid, r: usize, n: usize, what: &str) -> Result<Cochain<Rational>> {
    Cochain::from_components(1, r, shaped(parse_grid(g)?, r, n, what)?)
}

fn parse_stratum(s: &[usize], r: usize) -> Result<Vec<usize>> {
    s.iter()
        .map(|&j| if (1..=r).contains(&j) { Ok(j - 1) } else { Err(Error::Validation(format!("stratum index {j} is not in 1..={r}"))) })
        .collect()
}

impl Problem {
    pub fn from_document(doc: &ProblemDocument) -> Result<Problem> {
        // Rational strings are parsed up front so malformed numbers are
        // reported as parse errors before any shape check.
        let grids = doc.rep.logs.iter().chain(&doc.rep.unipotents).flatten();
        for g in grids.chain(&doc.rep.polarization).chain(&doc.alpha).chain(&doc.beta) {
            parse_grid(g)?;
        }
        if let Some(e) = &doc.extension {
            parse_row(&e.gamma)?;
        }
        if let Some(t) = doc.query.as_ref().and_then(|q| q.t.as_ref()) {
            parse_row(t)?;
        }

        let (n, r) = (doc.rep.rank, doc.rep.r);
        let mut rep = match (&doc.rep.logs, &doc.rep.unipotents) {
            (Some(logs), None) => {
                if logs.len() != r {
                    return Err(Error::DimensionMismatch(format!("expected {r} logarithms, got {}", logs.len())));
                }
                let ms = logs.iter().enumerate().map(|(i, g)| matrix(g, n, &format!("N{}", i + 1))).collect::<Result<_>>()?;
                MonodromyRep::new(n, ms)?
            }
            (None, Some(ts)) => {
                if ts.len() != r {
                    return Err(Error::DimensionMismatch(format!("expected {r} monodromies, got {}", ts.len())));
                }
                let ms = ts.iter().enumerate().map(|(i, g)| matrix(g, n, &format!("T{}", i + 1))).collect::<Result<_>>()?;
                MonodromyRep::from_unipotent(n, ms)?
            }
            _ => return Err(Error::Validation("give exactly one of rep.logs and rep.unipotents".into())),
        };
        if let Some(k) = doc.rep.weight {
            rep = rep.with_weight(k);
        }
        if let Some(q) = &doc.rep.polarization {
            rep = rep.with_polarization(matrix(q, n, "polarization")?)?;
        }
        let alpha = doc.alpha.as_ref().map(|g| cochain(g, r, n, "alpha")).transpose()?;
        let beta = doc.beta.as_ref().map(|g| cochain(g, r, n, "beta")).transpose()?;
        let gamma = match &doc.extension {
            Some(e) => {
                let g = parse_row(&e.gamma)?;
                if g.len() != r {
                    return Err(Error::DimensionMismatch(format!("gamma must have {r} entries")));
                }
                let ring = match e.ring {
                    RingName::Rational => Ring::Rational,
                    RingName::Integer => Ring::Integer,
                };
                Some((g, ring))
            }
            None => None,
        };
        let query = doc.query.clone().unwrap_or_default();
        if let Some(s) = &query.stratum {
            parse_stratum(s, r)?;
        }
        Ok(Problem { rep, alpha, beta, gamma, query })
    }

    fn pairing(&self) -> PairingKind {
        self.query.pairing.unwrap_or_default()
    }

    fn classes(&self) -> Result<(&Cochain<Rational>, &Cochain<Rational>)> {
        match (&self.alpha, &self.beta) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::Validation("the document needs alpha and beta".into())),
        }
    }

    fn polarization(&self) -> Result<&MatrixQ> {
        self.rep.polarization().ok_or_else(|| Error::Validation("the hQ pairing needs rep.polarization".into()))
    }

    /// The mixed extension glued from `α`, `β` and `γ` (zero if absent).
    pub fn extension(&self) -> Result<MixedExtension> {
        let (a, b) = self.classes()?;
        let (gamma, ring) = self.gamma.clone().unwrap_or_else(|| (vec![Rational::from_integer(0.into()); self.rep.r()], Ring::Rational));
        make_mixed_extension(&self.rep, a, b, &gamma, ring)
    }
}

fn row_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn grid_of(m: &MatrixQ) -> Grid {
    m.to_rows().iter().map(|r| row_strings(r)).collect()
}

fn components(x: &Cochain<Rational>) -> Grid {
    (0..x.as_slice().len() / x.rank().max(1)).map(|pos| row_strings(x.component(pos))).collect()
}

/// Document for a rep with optional classes, extension and query.
pub fn document_for(
    rep: &MonodromyRep,
    alpha: Option<&Cochain<Rational>>,
    beta: Option<&Cochain<Rational>>,
    extension: Option<ExtensionDocument>,
    query: Option<QueryDocument>,
) -> ProblemDocument {
    ProblemDocument {
        schema_version: SCHEMA_VERSION.into(),
        rep: RepDocument {
            rank: rep.rank(),
            r: rep.r(),
            logs: Some(rep.logs().iter().map(grid_of).collect()),
            unipotents: None,
            weight: rep.weight(),
            polarization: rep.polarization().map(grid_of),
        },
        alpha: alpha.map(components),
        beta: beta.map(components),
        extension,
        query,
    }
}

/// Comma-separated rationals, e.g. `"1,1/2,-3"`.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|x| parse_rational(x.trim())).collect()
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("not an integer: {x:?}")))).collect()
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("not an index: {x:?}")))).collect()
}

#[derive(Debug, Parser)]
#[command(name = "heightlab", version, about = "Exact asymptotic height pairings of unipotent local systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct EvalArgs {
    /// Evaluation point, e.g. "1,1".
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Return a rational function of t1, t2, ...
    #[arg(long)]
    pub symbolic: bool,
    /// 1-based positive variables for --symbolic, e.g. "1,2"; all by default.
    #[arg(long)]
    pub stratum: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum BuiltinOp {
    Height,
    Jump,
    Ih,
    Document,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a problem document.
    Validate { file: String },
    /// Intersection cohomology IH^p.
    Ih {
        file: String,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Asymptotic height pairing.
    Height {
        file: String,
        #[command(flatten)]
        eval: EvalArgs,
        #[arg(long, value_enum)]
        pairing: Option<PairingKind>,
    },
    /// Torsion pairing of a one-variable integral system.
    Torsion { file: String },
    /// Height jump identity of the mixed extension in a document.
    Jump {
        file: String,
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// The r-fold Jordan family with classes a, b.
    Jordan {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[command(flatten)]
        eval: EvalArgs,
        #[arg(long, value_enum, default_value = "height")]
        op: BuiltinOp,
    },
    /// The genus-g bounding-pair degeneration and its singularity class.
    Ceresa {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        h: usize,
        #[command(flatten)]
        eval: EvalArgs,
        #[arg(long, value_enum, default_value = "height")]
        op: BuiltinOp,
    },
    /// Run the built-in acceptance checks.
    Selftest {
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Serialize)]
struct ValidateReport {
    valid: bool,
    rank: usize,
    r: usize,
    integral: bool,
    checks: Vec<&'static str>,
}

#[derive(Serialize)]
struct InvalidReport {
    valid: bool,
    error: String,
}

#[derive(Serialize)]
struct IhReport {
    p: usize,
    dim: usize,
    dim_h: usize,
    multi_indices: Vec<Vec<usize>>,
    basis: Vec<Grid>,
}

#[derive(Serialize)]
struct Representatives {
    alpha: Grid,
    beta: Grid,
}

#[derive(Serialize)]
struct HeightReport {
    pairing: PairingKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<Vec<String>>,
    stratum: Vec<usize>,
    value: String,
    l_t: Vec<String>,
    representatives: Representatives,
}

#[derive(Serialize)]
struct TorsionReport {
    value: String,
    invariants: Vec<String>,
}

#[derive(Serialize)]
struct JumpOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<Vec<String>>,
    stratum: Vec<usize>,
    h: String,
    mu: String,
    sum_t_mu: String,
    jump: String,
    holds: bool,
    mu_i: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau_tilde: Option<String>,
}

#[derive(Serialize)]
struct SelftestReport {
    passed: bool,
    seed: u64,
    results: Vec<selftest::CriterionResult>,
}

/// A failed command: exit code and message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
    /// JSON written to stdout before failing, if any.
    pub report: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string(), report: None }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 3,
        Error::NotAdmissible(_) | Error::NotTorsion(_) | Error::NotRestricted(_) | Error::NotInImage | Error::PoleAtPoint => 4,
        _ => 2,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Where to evaluate: a point of the closed cone or a symbolic stratum.
enum Eval {
    Point(Vec<Rational>),
    Stratum(Vec<usize>),
}

fn resolve_eval(eval: &EvalArgs, problem: &Problem) -> Result<Eval> {
    let r = problem.rep.r();
    let all = || (0..r).collect::<Vec<_>>();
    if eval.t.is_some() && (eval.symbolic || eval.stratum.is_some()) {
        return Err(Error::Validation("--t cannot be combined with --symbolic or --stratum".into()));
    }
    if let Some(t) = &eval.t {
        return Ok(Eval::Point(parse_list(t)?));
    }
    if let Some(s) = &eval.stratum {
        return Ok(Eval::Stratum(parse_stratum(&parse_indices(s)?, r)?));
    }
    if eval.symbolic {
        return Ok(Eval::Stratum(problem.query.stratum.as_ref().map(|s| parse_stratum(s, r)).transpose()?.unwrap_or_else(all)));
    }
    if let Some(t) = &problem.query.t {
        return Ok(Eval::Point(parse_row(t)?));
    }
    if let Some(s) = &problem.query.stratum {
        return Ok(Eval::Stratum(parse_stratum(s, r)?));
    }
    Err(Error::Validation("give --t, --symbolic or a query in the document".into()))
}

fn one_based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|j| j + 1).collect()
}

fn check_point(t: &[Rational], r: usize) -> Result<()> {
    if t.len() != r {
        return Err(Error::DimensionMismatch(format!("t must have {r} entries")));
    }
    if t.iter().any(|x| x < &Rational::from_integer(0.into())) {
        return Err(Error::Validation("t must lie in the closed positive cone".into()));
    }
    Ok(())
}

fn cmd_validate(problem: &Problem) -> Result<String> {
    let rep = &problem.rep;
    let mut checks = vec!["commuting", "nilpotent"];
    if rep.has_integral_structure() {
        checks.push("integral monodromy");
    }
    if let Some(q) = rep.polarization() {
        check_polarization(rep, q)?;
        checks.push("polarization");
    }
    if let Some(a) = &problem.alpha {
        check_class(rep, a, "alpha")?;
        checks.push("alpha cocycle");
    }
    if let Some(b) = &problem.beta {
        match problem.pairing() {
            PairingKind::H => check_class(&rep.dual(), b, "beta")?,
            PairingKind::HQ => check_class(rep, b, "beta")?,
        }
        checks.push("beta cocycle");
    }
    if problem.gamma.is_some() {
        problem.extension()?;
        checks.push("gluing");
    }
    Ok(to_json(&ValidateReport { valid: true, rank: rep.rank(), r: rep.r(), integral: rep.is_integral(), checks }))
}

fn cmd_ih(problem: &Problem, p: Option<usize>) -> Result<String> {
    let rep = &problem.rep;
    let p = p.or(problem.query.p).unwrap_or(1);
    if p > rep.r() {
        return Err(Error::Validation(format!("p must be at most r = {}", rep.r())));
    }
    let c = build_complexes(rep);
    let ih = c.cohomology(Which::B, p);
    let dim_h = c.cohomology(Which::K, p).dim();
    let basis = ih
        .transversal
        .iter()
        .map(|v| v.chunks(rep.rank().max(1)).map(row_strings).collect())
        .collect();
    let multi_indices = multi_indices(rep.r(), p).iter().map(|j| one_based(j)).collect();
    Ok(to_json(&IhReport { p, dim: ih.dim(), dim_h, multi_indices, basis }))
}

fn cmd_height(problem: &Problem, eval: &EvalArgs, pairing: Option<PairingKind>) -> Result<String> {
    let (alpha, beta) = problem.classes()?;
    let pairing = pairing.unwrap_or(problem.pairing());
    let rep = &problem.rep;
    let how = resolve_eval(eval, problem)?;
    let report: PairingReport = match (&how, pairing) {
        (Eval::Point(t), PairingKind::H) => height_pairing(rep, alpha, beta, t)?,
        (Eval::Point(t), PairingKind::HQ) => h_q(rep, alpha, beta, t, problem.polarization()?)?,
        (Eval::Stratum(s), PairingKind::H) => height_pairing_symbolic(rep, alpha, beta, s)?,
        (Eval::Stratum(s), PairingKind::HQ) => h_q_symbolic(rep, alpha, beta, s, problem.polarization()?)?,
    };
    let t = match &how {
        Eval::Point(t) => Some(row_strings(t)),
        Eval::Stratum(_) => None,
    };
    Ok(to_json(&HeightReport {
        pairing,
        t,
        stratum: one_based(&report.stratum),
        value: report.value.to_string(),
        l_t: report.l_t.iter().map(ToString::to_string).collect(),
        representatives: Representatives { alpha: components(alpha), beta: components(beta) },
    }))
}

fn cmd_torsion(problem: &Problem) -> Result<String> {
    let rep = &problem.rep;
    if rep.r() != 1 {
        return Err(Error::Validation("the torsion pairing needs a one-variable system".into()));
    }
    let (alpha, beta) = problem.classes()?;
    let t = rep.unipotents().remove(0);
    let value = torsion_pairing(&t, alpha.component(0), beta.component(0))?;
    let invariants = torsion_invariants(&t)?.iter().map(ToString::to_string).collect();
    Ok(to_json(&TorsionReport { value: value.to_string(), invariants }))
}

fn cmd_jump(problem: &Problem, eval: &EvalArgs) -> Result<String> {
    let x = problem.extension()?;
    let mu_i = row_strings(&mu_coordinates(&x)?);
    let out = match resolve_eval(eval, problem)? {
        Eval::Point(t) => {
            check_point(&t, x.r())?;
            let rep = jump_identity_check(&x, &t)?;
            let integral_point = t.iter().all(Rational::is_integer);
            let tau_tilde = if x.ring() == Ring::Integer && integral_point {
                Some(format_rational(&tau_tilde(&pullback_test_curve(&x, &t)?)?))
            } else {
                None
            };
            JumpOutput {
                stratum: (0..t.len()).filter(|&i| t[i] != Rational::from_integer(0.into())).map(|i| i + 1).collect(),
                t: Some(row_strings(&t)),
                h: format_rational(&rep.h),
                mu: format_rational(&rep.mu),
                sum_t_mu: format_rational(&rep.sum_t_mu),
                jump: format_rational(&rep.jump),
                holds: rep.holds,
                mu_i,
                tau_tilde,
            }
        }
        Eval::Stratum(s) => {
            let rep = jump_identity_symbolic(&x, &s)?;
            let mut s = s;
            s.sort_unstable();
            s.dedup();
            JumpOutput {
                t: None,
                stratum: one_based(&s),
                h: rep.h.to_string(),
                mu: rep.mu.to_string(),
                sum_t_mu: rep.sum_t_mu.to_string(),
                jump: rep.jump.to_string(),
                holds: rep.holds,
                mu_i,
                tau_tilde: None,
            }
        }
    };
    Ok(to_json(&out))
}

fn query_for(eval: &EvalArgs, pairing: PairingKind) -> Result<QueryDocument> {
    let t = eval.t.as_deref().map(parse_list).transpose()?.map(|v| row_strings(&v));
    let stratum = eval.stratum.as_deref().map(parse_indices).transpose()?;
    Ok(QueryDocument { t, stratum, p: None, pairing: Some(pairing) })
}

/// Problem document for the Jordan family.
pub fn jordan_document(a: &[i64], b: &[i64], gamma: Option<&[Rational]>, query: Option<QueryDocument>) -> Result<ProblemDocument> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::Validation("a and b need the same positive length".into()));
    }
    let rep = jordan_rep(a.len());
    let (alpha, beta) = jordan_classes(a, b);
    let extension = match gamma {
        Some(g) if g.len() != a.len() => return Err(Error::DimensionMismatch("gamma needs one entry per variable".into())),
        Some(g) => {
            let ring = if g.iter().all(Rational::is_integer) { RingName::Integer } else { RingName::Rational };
            Some(ExtensionDocument { gamma: row_strings(g), ring })
        }
        None => None,
    };
    Ok(document_for(&rep, Some(&alpha), Some(&beta), extension, query))
}

/// Problem document for the Ceresa degeneration: the singularity class
/// paired with itself through `h_Q`, or for `jump` the glued extension over
/// the dual.
pub fn ceresa_document(g: usize, h: usize, op: BuiltinOp, query: Option<QueryDocument>) -> Result<ProblemDocument> {
    let model = build_ceresa(g)?;
    if op == BuiltinOp::Jump {
        let x = ceresa_extension(&model, h, Ring::Integer)?;
        let extension = ExtensionDocument { gamma: row_strings(x.gamma()), ring: RingName::Integer };
        let query = query.map(|q| QueryDocument { pairing: Some(PairingKind::H), ..q });
        return Ok(document_for(x.rep(), Some(&x.alpha()), Some(&x.beta()), Some(extension), query));
    }
    let rep = model.bounding_pair_rep(h)?;
    let s = model.sing_class(h)?;
    Ok(document_for(&rep, Some(&s), Some(&s), None, query))
}

fn run_builtin(doc: ProblemDocument, op: BuiltinOp, eval: &EvalArgs) -> Result<String> {
    if op == BuiltinOp::Document {
        return Ok(to_json(&doc));
    }
    let problem = Problem::from_document(&doc)?;
    let eval = if eval.t.is_none() && eval.stratum.is_none() { EvalArgs { symbolic: true, ..eval.clone() } } else { eval.clone() };
    match op {
        BuiltinOp::Height => cmd_height(&problem, &eval, None),
        BuiltinOp::Jump => cmd_jump(&problem, &eval),
        BuiltinOp::Ih => cmd_ih(&problem, Some(1)),
        BuiltinOp::Document => unreachable!(),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(|e| Error::Validation(format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Validation(format!("cannot read {path}: {e}")))?;
    }
    Ok(text)
}

fn load(path: &str, stdin: &mut dyn Read) -> Result<Problem> {
    Problem::from_document(&parse_document(&read_input(path, stdin)?)?)
}

/// Runs one parsed command, returning the JSON report.
pub fn execute(cmd: &Command, stdin: &mut dyn Read) -> std::result::Result<String, Failure> {
    match cmd {
        Command::Validate { file } => {
            let doc = parse_document(&read_input(file, stdin)?)?;
            match Problem::from_document(&doc).and_then(|p| cmd_validate(&p)) {
                Ok(s) => Ok(s),
                Err(e) if exit_code(&e) == 3 => Err(e.into()),
                Err(e) => Err(Failure {
                    code: 2,
                    message: e.to_string(),
                    report: Some(to_json(&InvalidReport { valid: false, error: e.to_string() })),
                }),
            }
        }
        Command::Ih { file, p } => Ok(cmd_ih(&load(file, stdin)?, *p)?),
        Command::Height { file, eval, pairing } => Ok(cmd_height(&load(file, stdin)?, eval, *pairing)?),
        Command::Torsion { file } => Ok(cmd_torsion(&load(file, stdin)?)?),
        Command::Jump { file, eval } => Ok(cmd_jump(&load(file, stdin)?, eval)?),
        Command::Jordan { a, b, gamma, eval, op } => {
            let gamma = gamma.as_deref().map(parse_list).transpose()?;
            let gamma = match (op, gamma) {
                (BuiltinOp::Jump, None) => Some(vec![Rational::from_integer(0.into()); parse_ints(a)?.len()]),
                (_, g) => g,
            };
            let doc = jordan_document(&parse_ints(a)?, &parse_ints(b)?, gamma.as_deref(), Some(query_for(eval, PairingKind::H)?))?;
            Ok(run_builtin(doc, *op, eval)?)
        }
        Command::Ceresa { g, h, eval, op } => {
            let doc = ceresa_document(*g, *h, *op, Some(query_for(eval, PairingKind::HQ)?))?;
            Ok(run_builtin(doc, *op, eval)?)
        }
        Command::Selftest { seed, criterion } => {
            let results = match criterion {
                Some(id) => vec![selftest::run_criterion(*id, *seed)
                    .ok_or_else(|| Error::Validation(format!("no criterion {id}; valid ids are 1..=9")))?],
                None => selftest::run_all(*seed),
            };
            let passed = results.iter().all(|r| r.passed);
            let report = to_json(&SelftestReport { passed, seed: *seed, results });
            if passed {
                Ok(report)
            } else {
                Err(Failure { code: 1, message: "self-test failed".into(), report: Some(report) })
            }
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = execute(&cli.command, stdin);
    if let Command::Selftest { .. } = &cli.command {
        let report = match &result {
            Ok(s) => Some(s.as_str()),
            Err(f) => f.report.as_deref(),
        };
        if let Some(results) = report.and_then(|s| serde_json::from_str::<serde_json::Value>(s).ok()) {
            for r in results["results"].as_array().into_iter().flatten() {
                let verdict = if r["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                let _ = writeln!(stderr, "{verdict} {} {}: {}", r["id"], r["name"].as_str().unwrap_or(""), r["detail"].as_str().unwrap_or(""));
            }
        }
    }
    match result {
        Ok(s) => {
            let _ = stdout.write_all(s.as_bytes());
            0
        }
        Err(f) => {
            if let Some(r) = &f.report {
                let _ = stdout.write_all(r.as_bytes());
            }
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_codes() {
        assert_eq!(parse_list("1, -2/4,3").unwrap(), vec![Rational::from_integer(1.into()), Rational::new((-1).into(), 2.into()), Rational::from_integer(3.into())]);
        assert!(matches!(parse_list("1,x"), Err(Error::Parse(_))));
        assert_eq!(exit_code(&Error::Parse("x".into())), 3);
        assert_eq!(exit_code(&Error::NotCommuting(0, 1)), 2);
        assert_eq!(exit_code(&Error::NotAdmissible("x".into())), 4);
        assert_eq!(exit_code(&Error::NotTorsion("x".into())), 4);
    }

    #[test]
    fn documents_round_trip_through_serde() {
        let doc = jordan_document(&[0, 1], &[2, -1], Some(&[Rational::new(1.into(), 2.into()), Rational::from_integer(0.into())]), None).unwrap();
        assert_eq!(doc.extension.as_ref().unwrap().ring, RingName::Rational);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(parse_document(&text).unwrap(), doc);
        let problem = Problem::from_document(&doc).unwrap();
        assert_eq!((problem.rep.rank(), problem.rep.r()), (2, 2));
        assert!(problem.extension().is_ok());
    }

    #[test]
    fn rejects_ambiguous_reps() {
        let mut doc = jordan_document(&[0, 1], &[0, 1], None, None).unwrap();
        doc.rep.unipotents = doc.rep.logs.clone();
        assert!(matches!(Problem::from_document(&doc), Err(Error::Validation(_))));
        doc.rep.logs = None;
        doc.rep.unipotents = None;
        assert!(matches!(Problem::from_document(&doc), Err(Error::Validation(_))));
        let mut doc = jordan_document(&[0, 1], &[0, 1], None, None).unwrap();
        doc.query = Some(QueryDocument { stratum: Some(vec![3]), ..Default::default() });
        assert!(matches!(Problem::from_document(&doc), Err(Error::Validation(_))));
    }
}
