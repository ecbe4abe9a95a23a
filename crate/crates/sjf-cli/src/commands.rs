//! Command definitions and their JSON results.

use crate::error::{CliError, EXIT_ASSERT, EXIT_OK};
use crate::format::{read_expansion, write_expansion, write_text};
use crate::numfmt::{complex, rational, sig};
use crate::oracle::oracle_agrees;
use crate::parse;
use crate::selfcheck;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sjf_eisenstein::{hecke_euler_verify, EisensteinSeries, EisensteinSpec, ThetaMethod, VerifyOptions};
use sjf_exact::rational::{to_pq, Rational};
use sjf_exact::{RatMatrix, SymMatrix};
use sjf_fourier::FourierKey;
use sjf_group::{JacobiElement, JacobiPoint, WeightIndex};
use sjf_hecke::cosets::expected_count;
use sjf_hecke::{bad_closure_check, full_coset_reps, jacobi_coset_reps, CharacterModN, HeckeOperator, SatakeData};
use sjf_lfunction::{
    admissible_exponents, euler_factor_good, euler_factor_good_exact, exponents, form_hypotheses, g_kn, m_plus_check, pole_sets, satake_solve_and_predict,
    sigma_violations, ArithmeticFlags,
};
use sjf_theta::{assemble, decompose, property_a, Convention, ThetaComponents, ThetaSetup};
use std::path::PathBuf;

/// Result of a command: JSON for stdout and the exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub exit: i32,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, exit: EXIT_OK }
    }

    /// Exit 0 when `passed`, 1 otherwise.
    fn checked(value: Value, passed: bool) -> Self {
        Outcome { value, exit: if passed { EXIT_OK } else { EXIT_ASSERT } }
    }
}

#[derive(Debug, Parser)]
#[command(name = "sjf", version, about = "Siegel-Jacobi modular forms: group arithmetic, theta decomposition, Hecke operators, L-factors and Eisenstein series")]
pub struct Cli {
    /// Cap on worker threads for parallel inner loops.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jacobi group checks.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Theta series and theta decomposition.
    #[command(subcommand)]
    Theta(ThetaCmd),
    /// Hecke coset representatives and operators.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Local factors, Gamma factors, poles and exponents.
    #[command(subcommand)]
    Lf(LfCmd),
    /// Numeric Eisenstein series.
    #[command(subcommand)]
    Eis(EisCmd),
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Runs the seeded property suites: cocycle, group laws, parabolic
    /// restriction and the diagonal closed form.
    Selfcheck {
        /// Cases per suite; defaults to 1000 for the cocycle and 200 otherwise.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionArg {
    Classical,
    Diagonalized,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Classical => Convention::Classical,
            ConventionArg::Diagonalized => Convention::Diagonalized,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ThetaCmd {
    /// Writes the theta series with characteristic h for index S.
    Expand {
        /// Index S, inline (`1`, `1,0;0,1`) or a file.
        #[arg(long = "S")]
        s: String,
        /// Characteristic h as an l x 1 matrix (`0`, `1/2;0`).
        #[arg(long)]
        h: String,
        #[arg(long)]
        trunc: String,
        #[arg(long, value_enum, default_value = "classical")]
        convention: ConventionArg,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Splits an expansion into theta components, one file per class.
    Decompose {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "classical")]
        convention: ConventionArg,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Reassembles components written by `decompose`.
    Assemble {
        dir: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CosetFamily {
    /// Upper-triangular family at a prime dividing the level.
    Bad,
    /// Full double coset at a prime not dividing the level (n = 1).
    Good,
}

#[derive(Debug, Subcommand)]
pub enum HeckeCmd {
    /// Counts and lists coset representatives.
    Cosets {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long)]
        p: u64,
        /// Diagonal of ξ (`4`, `1,2`); defaults to p in every entry.
        #[arg(long)]
        xi: Option<String>,
        #[arg(long, value_enum, default_value = "bad")]
        set: CosetFamily,
        /// Level; defaults to p for the bad family and 1 for the good one.
        #[arg(long)]
        level: Option<u64>,
        /// Compare against random double-coset products.
        #[arg(long)]
        oracle: bool,
        /// Also check that products of two ξ = p families close up.
        #[arg(long)]
        closure: bool,
        /// Omit the representative list.
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Applies T(p) to a degree-one expansion.
    Apply {
        #[arg(long)]
        op: u64,
        input: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        /// Coset family; defaults to good at level one and bad otherwise.
        #[arg(long, value_enum)]
        set: Option<CosetFamily>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Parity {
    Int,
    Half,
}

#[derive(Debug, Subcommand)]
pub enum LfCmd {
    /// The good local factor Π(1 − μX)(1 − μ⁻¹X) and its reciprocal series.
    Euler {
        /// Satake parameters, comma separated (`2`, `1+i,3/2`).
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Satake parameter from λ(p) and the predicted λ(p²).
    Satake {
        #[arg(long = "lambda-p", allow_hyphen_values = true)]
        lambda_p: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        l: usize,
    },
    /// The Gamma factor 𝒢_{k,n}(s).
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Possible pole sets of the normalized L-function.
    Poles {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, value_enum)]
        parity: Option<Parity>,
    },
    /// Exponents e and e_σ with the admissibility conditions.
    Exponents {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        l: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        sigma: i64,
        /// Exit 2 naming the first violated condition.
        #[arg(long)]
        strict: bool,
        /// χψ_S trivial.
        #[arg(long)]
        chi_psi_trivial: bool,
    },
    /// The maximality condition M⁺ at p.
    Mplus {
        #[arg(long = "S")]
        s: String,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Transformation,
}

#[derive(Debug, Subcommand)]
pub enum EisCmd {
    /// Evaluates the series by truncated coset summation.
    Eval {
        #[arg(long)]
        k: i64,
        /// Index: an integer m or a matrix.
        #[arg(long = "S")]
        s: String,
        /// `τ,w₁[,w₂]`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Defaults to the holomorphic point s = k/2.
        #[arg(long = "s", allow_hyphen_values = true)]
        s_param: Option<String>,
        #[arg(long = "B", default_value_t = 200)]
        b: u64,
        #[arg(long, default_value_t = 1)]
        level: u64,
        /// Fundamental discriminant of the Kronecker character; trivial if absent.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Reduce the point by the full modular group first (level one).
        #[arg(long)]
        reduced: bool,
    },
    /// λ(p), the predicted and measured λ(p²) over B/2, B, 2B.
    VerifyEuler {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        p: u64,
        #[arg(long = "B", default_value_t = 200)]
        b: u64,
        #[arg(long, default_value_t = 1e-4)]
        max_residual: f64,
        #[arg(long, default_value_t = 1e-3)]
        max_gap: f64,
    },
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Group(GroupCmd::Selfcheck { trials, seed }) => group_selfcheck(trials, seed),
        Command::Theta(c) => theta(c),
        Command::Hecke(c) => hecke(c),
        Command::Lf(c) => lf(c),
        Command::Eis(c) => eis(c),
    }
}

fn rows(m: &RatMatrix) -> Value {
    json!((0..m.rows()).map(|i| m.row(i).iter().map(to_pq).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn element(a: &JacobiElement) -> Value {
    json!({ "g": rows(a.g()), "lambda": rows(a.lambda()), "mu": rows(a.mu()), "kappa": rows(a.kappa()) })
}

fn group_selfcheck(trials: Option<usize>, seed: u64) -> Result<Outcome, CliError> {
    let suites = selfcheck::run_all(trials, seed)?;
    let passed = suites.iter().all(selfcheck::SuiteResult::passed);
    let list: Vec<Value> = suites
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "cases": s.cases,
                "exact_failures": s.exact_failures,
                "worst_relative": sig(s.worst_relative),
                "tolerance": sig(s.tolerance),
                "passed": s.passed(),
            })
        })
        .collect();
    Ok(Outcome::checked(json!({ "seed": seed, "suites": list, "passed": passed }), passed))
}

fn index_matrix(s: &str) -> Result<RatMatrix, CliError> {
    let m = parse::matrix_arg(s)?;
    if !m.is_square() || !m.is_symmetric() || !m.is_positive_definite() {
        return Err(CliError::usage(format!("index {m} must be symmetric positive definite"), "S symmetric positive definite"));
    }
    Ok(m)
}

const MANIFEST: &str = "manifest.json";
const MANIFEST_VERSION: &str = "sjf-theta-components-v1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentEntry {
    h: Vec<Vec<String>>,
    file: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    version: String,
    #[serde(rename = "S")]
    s: Vec<Vec<String>>,
    n: usize,
    convention: ConventionArg,
    trunc: String,
    components: Vec<ComponentEntry>,
}

fn string_rows(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(to_pq).collect()).collect()
}

fn from_string_rows(v: &[Vec<String>]) -> Result<RatMatrix, CliError> {
    let joined: Vec<String> = v.iter().map(|r| r.join(",")).collect();
    parse::matrix(&joined.join(";")).map_err(|_| CliError::format("malformed matrix in manifest"))
}

fn theta(c: ThetaCmd) -> Result<Outcome, CliError> {
    match c {
        ThetaCmd::Expand { s, h, trunc, convention, out } => {
            let s = index_matrix(&s)?;
            let h = parse::matrix(&h)?;
            if h.rows() != s.rows() || h.cols() != 1 {
                return Err(CliError::usage(format!("h must be {}x1", s.rows()), "h of size l x n"));
            }
            let trunc = parse::rational(&trunc)?;
            let setup = ThetaSetup::new(&s, 1, convention.into())?;
            let f = setup.theta(&h, &trunc)?;
            write_expansion(&out, &f)?;
            Ok(Outcome::ok(json!({ "file": out.display().to_string(), "terms": f.len(), "trunc": to_pq(f.trunc()), "fell_back": setup.fell_back() })))
        }
        ThetaCmd::Decompose { input, convention, out } => {
            let f = read_expansion(&input)?;
            let setup = ThetaSetup::new(&f.meta().index, f.meta().n, convention.into())?;
            let comps = decompose(&f, &setup)?;
            let zero = FourierKey::zero(f.meta().n, f.meta().l);
            let mut entries = Vec::new();
            let mut report = Vec::new();
            for (i, (h, comp)) in comps.iter().enumerate() {
                let file = format!("component_{i}.json");
                write_expansion(&out.join(&file), comp)?;
                report.push(json!({
                    "h": rows(h),
                    "file": file,
                    "terms": comp.len(),
                    "trunc": to_pq(comp.trunc()),
                    "constant": to_pq(&comp.coeff(&zero)),
                }));
                entries.push(ComponentEntry { h: string_rows(h), file });
            }
            let manifest = Manifest {
                version: MANIFEST_VERSION.into(),
                s: string_rows(&f.meta().index),
                n: f.meta().n,
                convention,
                trunc: to_pq(f.trunc()),
                components: entries,
            };
            let text = serde_json::to_string_pretty(&serde_json::to_value(&manifest).expect("serializable")).expect("serializable") + "\n";
            write_text(&out.join(MANIFEST), &text)?;
            Ok(Outcome::ok(json!({ "classes": comps.components().len(), "components": report, "property_a": property_a(&comps), "fell_back": setup.fell_back() })))
        }
        ThetaCmd::Assemble { dir, out } => {
            let path = dir.join(MANIFEST);
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
            let manifest: Manifest = serde_json::from_str(&text).map_err(|e| CliError::format(format!("invalid manifest: {e}")))?;
            if manifest.version != MANIFEST_VERSION {
                return Err(CliError::format(format!("unknown manifest version {:?}", manifest.version)));
            }
            let s = from_string_rows(&manifest.s)?;
            let setup = ThetaSetup::new(&s, manifest.n, manifest.convention.into())?;
            if setup.reps().len() != manifest.components.len() {
                return Err(CliError::format(format!("{} components for {} classes", manifest.components.len(), setup.reps().len())));
            }
            let mut comps = Vec::new();
            for (entry, h) in manifest.components.iter().zip(setup.reps()) {
                if from_string_rows(&entry.h)? != *h {
                    return Err(CliError::format(format!("component {} is not in class order", entry.file)));
                }
                comps.push(read_expansion(&dir.join(&entry.file))?);
            }
            let comps = ThetaComponents::new(setup, comps)?;
            let f = assemble(&comps, &parse::rational(&manifest.trunc)?)?;
            write_expansion(&out, &f)?;
            Ok(Outcome::ok(json!({ "file": out.display().to_string(), "terms": f.len(), "trunc": to_pq(f.trunc()) })))
        }
    }
}

fn identity_index(k: i64, l: usize, level: u64) -> Result<WeightIndex, CliError> {
    let s = SymMatrix::new(RatMatrix::identity(l))?;
    Ok(WeightIndex::new(k, s, Rational::from_integer(1.into()), level)?)
}

fn xi_matrix(xi: Option<&str>, n: usize, p: u64) -> Result<RatMatrix, CliError> {
    let diag: Vec<Rational> = match xi {
        Some(s) => s.split(',').map(parse::rational).collect::<Result<_, _>>()?,
        None => vec![Rational::from_integer(p.into()); n],
    };
    if diag.len() != n {
        return Err(CliError::usage(format!("ξ needs {n} diagonal entries"), "xi of size n x n"));
    }
    Ok(RatMatrix::diag(&diag))
}

fn hecke(c: HeckeCmd) -> Result<Outcome, CliError> {
    match c {
        HeckeCmd::Cosets { n, l, p, xi, set, level, oracle, closure, count_only, seed } => {
            if p < 2 || !sjf_exact::rational::is_prime(p) {
                return Err(CliError::usage(format!("{p} is not prime"), "p is prime"));
            }
            let xi = xi_matrix(xi.as_deref(), n, p)?;
            let level = level.unwrap_or(match set {
                CosetFamily::Bad => p,
                CosetFamily::Good => 1,
            });
            let wi = identity_index(4, l, level)?;
            let mut cosets = match set {
                CosetFamily::Bad => jacobi_coset_reps(&xi, &wi)?,
                CosetFamily::Good => {
                    if n != 1 {
                        return Err(CliError::usage("the full double coset is implemented for n = 1", "n = 1"));
                    }
                    let m = xi.get(0, 0);
                    if !m.is_integer() || m <= &Rational::from_integer(0.into()) {
                        return Err(CliError::usage("ξ must be a positive integer", "xi positive integral"));
                    }
                    full_coset_reps(m.to_integer().try_into().map_err(|_| CliError::usage("ξ too large", "xi fits in u64"))?, &wi)?
                }
            };
            let mut out = json!({ "count": cosets.len(), "disjoint": cosets.is_disjoint(), "level": level });
            let mut passed = cosets.is_disjoint();
            if set == CosetFamily::Bad {
                let expected = expected_count(&xi, l)?;
                passed &= expected == cosets.len().into();
                out["expected"] = json!(expected.to_string());
            }
            if oracle {
                if n != 1 {
                    return Err(CliError::usage("the oracle samples degree-one products", "n = 1"));
                }
                let (agrees, found) = oracle_agrees(&mut cosets, &xi, level as i64, seed, 4000)?;
                passed &= agrees;
                out["oracle"] = json!({ "classes_found": found, "agrees": agrees });
            }
            if closure {
                let pm = RatMatrix::from_i64(1, 1, &[p as i64]);
                let report = bad_closure_check(&pm, &pm, &identity_index(4, l, level)?)?;
                passed &= report.closed();
                out["closure"] = json!({ "products": report.products, "outside": report.outside, "closed": report.closed() });
            }
            if !count_only {
                out["reps"] = json!(cosets.reps().iter().map(element).collect::<Vec<_>>());
            }
            out["passed"] = json!(passed);
            Ok(Outcome::checked(out, passed))
        }
        HeckeCmd::Apply { op, input, out, set } => {
            let f = read_expansion(&input)?;
            let wi = f.meta().weight_index()?;
            let n = f.meta().n;
            if n != 1 {
                return Err(CliError::usage("expansions must have degree one", "n = 1"));
            }
            let set = set.unwrap_or(if wi.level_c == 1 { CosetFamily::Good } else { CosetFamily::Bad });
            let cosets = match set {
                CosetFamily::Good => full_coset_reps(op, &wi)?,
                CosetFamily::Bad => jacobi_coset_reps(&RatMatrix::from_i64(1, 1, &[op as i64]), &wi)?,
            };
            let count = cosets.len();
            let t = HeckeOperator::new(cosets, wi.clone(), CharacterModN::trivial(wi.level_c))?;
            let g = t.apply_expansion(&f)?;
            write_expansion(&out, &g)?;
            Ok(Outcome::ok(json!({ "file": out.display().to_string(), "cosets": count, "terms": g.len(), "trunc": to_pq(g.trunc()) })))
        }
    }
}

fn lf(c: LfCmd) -> Result<Outcome, CliError> {
    match c {
        LfCmd::Euler { mu, p, order } => {
            let exact: Option<Vec<Rational>> = mu.split(',').map(|x| parse::rational(x).ok()).collect();
            let mu = parse::complex_list(&mu)?;
            let factor = euler_factor_good(&SatakeData::new(p, mu)?)?;
            let mut out = json!({
                "p": p,
                "coeffs": factor.coeffs.iter().map(|c| complex(*c)).collect::<Vec<_>>(),
                "inverse_series": factor.inverse_series(order).iter().map(|c| complex(*c)).collect::<Vec<_>>(),
                "palindrome_defect": sig(factor.palindrome_defect()),
            });
            if let Some(q) = exact {
                out["exact"] = json!(euler_factor_good_exact(&q)?.iter().map(to_pq).collect::<Vec<_>>());
            }
            Ok(Outcome::ok(out))
        }
        LfCmd::Satake { lambda_p, p, l } => {
            let lam = match parse::rational(&lambda_p) {
                Ok(q) => Complex64::new(sjf_exact::rational::to_f64(&q), 0.0),
                Err(_) => parse::complex(&lambda_p)?,
            };
            let pred = satake_solve_and_predict(lam, p, l);
            Ok(Outcome::ok(json!({ "p": p, "lambda_p": complex(lam), "mu": complex(pred.mu), "predicted_lambda_p2": complex(pred.predicted_lambda_p2) })))
        }
        LfCmd::Gamma { n, k, s } => {
            let k = parse::rational(&k)?;
            let s = parse::pair(&s)?;
            let v = g_kn(s, &k, n)?;
            Ok(Outcome::ok(json!({ "n": n, "k": to_pq(&k), "s": complex(s), "value": complex(v) })))
        }
        LfCmd::Poles { n, k, parity } => {
            let k = parse::rational(&k)?;
            let integral = k.is_integer();
            match parity {
                Some(Parity::Int) if !integral => return Err(CliError::usage(format!("k = {k} is not integral"), "parity int requires integral k")),
                Some(Parity::Half) if integral || !(&k * Rational::from_integer(2.into())).is_integer() => {
                    return Err(CliError::usage(format!("k = {k} is not half-integral"), "parity half requires k in 1/2 + Z"));
                }
                _ => {}
            }
            let ps = pole_sets(&k, n);
            let list = |v: &[Rational]| json!(v.iter().map(to_pq).collect::<Vec<_>>());
            Ok(Outcome::ok(json!({
                "n": n,
                "k": to_pq(&k),
                "small_weight": ps.small_weight,
                "first": list(&ps.first),
                "second": list(&ps.second),
                "isolated": ps.isolated.as_ref().map(to_pq),
            })))
        }
        LfCmd::Exponents { k, l, n, sigma, strict, chi_psi_trivial } => {
            let flags = ArithmeticFlags { chi_psi_s_trivial: chi_psi_trivial, ..ArithmeticFlags::default() };
            let ex = if strict { admissible_exponents(k, l, n, sigma, &flags)? } else { exponents(k, l, n, sigma) };
            let violations: Vec<Value> = sigma_violations(k, l, n, sigma, &flags).iter().map(|v| json!({ "condition": v.condition, "message": v.message })).collect();
            let hypotheses: Vec<Value> = form_hypotheses(k, l, n).iter().map(|v| json!({ "condition": v.condition, "message": v.message })).collect();
            Ok(Outcome::ok(json!({
                "e": rational(&ex.e),
                "e_sigma": rational(&ex.e_sigma),
                "admissible": violations.is_empty(),
                "violations": violations,
                "hypotheses": hypotheses,
            })))
        }
        LfCmd::Mplus { s, p } => {
            let s = index_matrix(&s)?;
            Ok(Outcome::ok(json!({ "S": rows(&s), "p": p, "holds": m_plus_check(&s, p)? })))
        }
    }
}

fn eis_point(z: &str, l: usize) -> Result<JacobiPoint, CliError> {
    let v = parse::complex_list(z)?;
    if v.len() != l + 1 {
        return Err(CliError::usage(format!("z needs τ and {l} entries of w"), "z = tau,w_1..w_l"));
    }
    Ok(JacobiPoint::deg1(v[0], &v[1..])?)
}

fn eis(c: EisCmd) -> Result<Outcome, CliError> {
    match c {
        EisCmd::Eval { k, s, z, s_param, b, level, chi, method, reduced } => {
            let index = SymMatrix::new(index_matrix(&s)?)?;
            let l = index.dim();
            let chi = match chi {
                Some(d) => CharacterModN::kronecker(d)?,
                None => CharacterModN::trivial(level),
            };
            let mut spec = EisensteinSpec::holomorphic(k, index, level, chi, b);
            if let Some(sp) = s_param {
                spec.s = parse::pair(&sp)?;
            }
            let mut series = EisensteinSeries::new(spec)?;
            if let Some(m) = method {
                series = series.with_method(match m {
                    MethodArg::Direct => ThetaMethod::Direct,
                    MethodArg::Transformation => ThetaMethod::Transformation,
                })?;
            }
            let point = eis_point(&z, l)?;
            let v = if reduced { series.eval_reduced(&point)? } else { series.eval(&point)? };
            Ok(Outcome::ok(json!({
                "value": complex(v.value),
                "error_proxy": sig(v.error_proxy),
                "B": b,
                "cosets": series.cosets().len(),
                "method": format!("{:?}", series.method()).to_lowercase(),
            })))
        }
        EisCmd::VerifyEuler { k, p, b, max_residual, max_gap } => {
            let report = hecke_euler_verify(k, p, b, &VerifyOptions::default())?;
            let at = report.at(b).ok_or_else(|| CliError::assertion("missing rung", "rung at B"))?;
            let residual_ok = at.residual_p < max_residual;
            let gap_ok = at.gap < max_gap;
            let monotone = report.monotone();
            let rungs: Vec<Value> = report
                .rungs
                .iter()
                .map(|r| {
                    json!({
                        "B": r.b,
                        "lambda_p": complex(r.lambda_p),
                        "residual_p": sig(r.residual_p),
                        "mu": complex(r.mu),
                        "predicted_lambda_p2": complex(r.predicted_p2),
                        "lambda_p2": complex(r.lambda_p2),
                        "residual_p2": sig(r.residual_p2),
                        "gap": sig(r.gap),
                        "error_proxy": sig(r.error_proxy),
                    })
                })
                .collect();
            let passed = residual_ok && gap_ok && monotone;
            Ok(Outcome::checked(
                json!({
                    "k": k,
                    "p": p,
                    "B": b,
                    "rungs": rungs,
                    "checks": {
                        "residual_below": { "limit": sig(max_residual), "value": sig(at.residual_p), "passed": residual_ok },
                        "gap_below": { "limit": sig(max_gap), "value": sig(at.gap), "passed": gap_ok },
                        "monotone": monotone,
                    },
                    "passed": passed,
                }),
                passed,
            ))
        }
    }
}

/// Parses `argv`, runs the command and returns the JSON text and exit code.
pub fn main_with_args(args: Vec<String>) -> (String, i32) {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                return (e.to_string(), if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 });
            }
            let err = CliError::usage(e.to_string().trim().to_string(), "valid command line");
            return (pretty(&err.to_json()), err.exit);
        }
    };
    if let Some(j) = cli.jobs {
        // A global pool can only be installed once per process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match run(cli) {
        Ok(o) => (pretty(&o.value), o.exit),
        Err(e) => (pretty(&e.to_json()), e.exit),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}
