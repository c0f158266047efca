//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on invalid input, 1 when an identity the
//! library guarantees turns out to fail.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{generator_set, poincare_polynomial, ChowClass, GeneratorContext, Monomial};
use crate::correspondences::{compose, projector_system, theta, x_cycle, Correspondence};
use crate::error::{Error, Result};
use crate::jinvariant::{
    cdim2, is_split, max_rational_codim, quadratic_j, x1_bounds, HermitianProfile, JInvariant,
};
use crate::motives::{decompose, is_indecomposable};
use crate::parse::parse_class;
use crate::reduction::{beta_push, i_push, split_decomposition_check};
use crate::steenrod::{steenrod_sq, total_steenrod};
use crate::verify::run_suites;

#[derive(Parser, Debug)]
#[command(
    name = "chowk",
    version,
    about = "Mod-2 Chow K-rings of split maximal unitary grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Dim {
    /// Dimension of the hermitian form h (never dim X).
    #[arg(long)]
    dim: i64,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct DimJ {
    #[command(flatten)]
    dim: Dim,
    /// J-invariant as a comma-separated list of odd indices ("" for ∅).
    #[arg(long = "J", value_name = "LIST")]
    j: String,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the monomial basis in canonical order.
    Basis(Dim),
    /// Multiply two classes.
    Mul {
        #[command(flatten)]
        dim: Dim,
        a: String,
        b: String,
    },
    /// Degree of a class (coefficient of the point class).
    Deg {
        #[command(flatten)]
        dim: Dim,
        x: Option<String>,
        /// Read the class from a JSON file.
        #[arg(long)]
        file: Option<String>,
    },
    /// Steenrod squares S^i(x), or the whole total operation without --i.
    Sq {
        #[command(flatten)]
        dim: Dim,
        #[arg(long)]
        i: Option<i64>,
        x: Option<String>,
        #[arg(long)]
        file: Option<String>,
    },
    /// The correspondence x_I for a comma-separated index set.
    Xcycle {
        #[command(flatten)]
        dim: Dim,
        #[arg(default_value = "")]
        set: String,
    },
    /// Compose two correspondences given as JSON: SECOND ∘ FIRST.
    Compose {
        #[command(flatten)]
        dim: Dim,
        second: String,
        first: String,
    },
    /// The projector system θ_L for L ⊆ J, or one θ_{S,L,L'} when any of --S/--L/--L2 is given.
    Theta {
        #[command(flatten)]
        dim_j: DimJ,
        #[arg(long = "S", value_name = "LIST")]
        s: Option<String>,
        #[arg(long = "L", value_name = "LIST")]
        l: Option<String>,
        #[arg(long = "L2", value_name = "LIST")]
        l2: Option<String>,
    },
    /// Validate a hermitian profile and report its J-invariant data.
    Jinv {
        #[arg(long)]
        dim: Option<i64>,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "LIST")]
        witt: Option<String>,
        #[arg(long = "J", value_name = "LIST")]
        j: Option<String>,
        /// Profile JSON file: {"dim": 6, "witt": [0,1,2,3], "J": [5]}.
        #[arg(long)]
        file: Option<String>,
    },
    /// Canonical 2-dimension dim X - ||J||.
    Cdim(DimJ),
    /// Motivic decomposition shift profile.
    Decompose(DimJ),
    /// J-invariant of the associated quadratic form.
    #[command(name = "compare-q")]
    CompareQ(DimJ),
    /// Check the reduction split of the basis; map a class of dim(h)-2 if given.
    Reduce {
        #[command(flatten)]
        dim: Dim,
        x: Option<String>,
        #[arg(long)]
        file: Option<String>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-dim", default_value_t = 9)]
        max_dim: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `argv` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(cli.verb, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_user_error() {
                2
            } else {
                1
            }
        }
    }
}

fn context(d: &Dim) -> Result<GeneratorContext> {
    generator_set(d.dim)
}

/// `"1,3,5"` → set; `""` and `"{}"` are the empty set.
fn parse_list(text: &str) -> Result<Vec<i64>> {
    let t = text
        .trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| {
            p.trim().parse::<i64>().map_err(|_| {
                Error::InvalidArgument(format!("'{}' is not an integer in list '{text}'", p.trim()))
            })
        })
        .collect()
}

fn parse_set(text: &str, ctx: &GeneratorContext, what: &str) -> Result<Monomial> {
    let ix = parse_list(text)?;
    let mut idx = Vec::with_capacity(ix.len());
    for k in ix {
        if k < 0 {
            return Err(Error::InvalidIndex {
                index: k,
                reason: format!("{what} indices must be positive"),
            });
        }
        idx.push(k as u32);
    }
    let m = Monomial::from_indices(idx)?;
    ctx.check_subset(m, what)?;
    Ok(m)
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))
}

fn parse_j(dim_j: &DimJ) -> Result<JInvariant> {
    let ctx = context(&dim_j.dim)?;
    JInvariant::new(&ctx, parse_set(&dim_j.j, &ctx, "J")?)
}

fn read_class(
    ctx: &GeneratorContext,
    text: Option<&str>,
    file: Option<&str>,
    err: &mut dyn Write,
) -> Result<ChowClass> {
    match (text, file) {
        (Some(_), Some(_)) => Err(Error::InvalidArgument(
            "give the class either positionally or with --file, not both".into(),
        )),
        (None, None) => Err(Error::InvalidArgument("missing class argument".into())),
        (None, Some(path)) => ChowClass::from_json(ctx, &read_file(path)?),
        (Some(t), None) => class_arg(ctx, t, err),
    }
}

/// A class given on the command line: JSON if it starts with `[`, else the
/// `e[..] + …` syntax.
fn class_arg(ctx: &GeneratorContext, text: &str, err: &mut dyn Write) -> Result<ChowClass> {
    if text.trim_start().starts_with('[') {
        return ChowClass::from_json(ctx, text);
    }
    let parsed = parse_class(text, ctx)?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok(parsed.class)
}

fn emit_json(out: &mut dyn Write, verb: &str, body: Value) -> Result<()> {
    let mut obj = serde_json::Map::new();
    obj.insert("schema".into(), json!(1));
    obj.insert("verb".into(), json!(verb));
    if let Value::Object(fields) = body {
        obj.extend(fields);
    }
    writeln!(out, "{}", Value::Object(obj))?;
    Ok(())
}

fn class_json(x: &ChowClass) -> Value {
    json!(x.to_index_lists())
}

fn corr_json(c: &Correspondence) -> Value {
    json!(c.to_index_pairs())
}

fn brace(m: Monomial) -> String {
    let items: Vec<String> = m.indices().map(|k| k.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn set_json(m: Monomial) -> Value {
    json!(m.to_vec())
}

fn dispatch(verb: Verb, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match verb {
        Verb::Basis(d) => {
            let ctx = context(&d)?;
            let basis = ctx.basis();
            if d.json {
                emit_json(
                    out,
                    "basis",
                    json!({
                        "dim_h": ctx.dim_h(),
                        "dim_x": ctx.dim_x(),
                        "generators": ctx.generator_indices(),
                        "poincare": poincare_polynomial(&ctx).coeffs().iter().map(|c| *c as u64).collect::<Vec<_>>(),
                        "basis": basis.iter().map(|m| m.to_vec()).collect::<Vec<_>>(),
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "dim(h)={} n={} parity={} dim(X)={} rank={}",
                    ctx.dim_h(),
                    ctx.n(),
                    ctx.parity(),
                    ctx.dim_x(),
                    basis.len()
                )?;
                writeln!(out, "codim  monomial")?;
                for m in basis {
                    writeln!(out, "{:>5}  {m}", m.codim())?;
                }
            }
        }
        Verb::Mul { dim, a, b } => {
            let ctx = context(&dim)?;
            let p = class_arg(&ctx, &a, err)?.multiply(&class_arg(&ctx, &b, err)?)?;
            if dim.json {
                emit_json(
                    out,
                    "mul",
                    json!({ "dim_h": ctx.dim_h(), "result": class_json(&p) }),
                )?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        Verb::Deg { dim, x, file } => {
            let ctx = context(&dim)?;
            let x = read_class(&ctx, x.as_deref(), file.as_deref(), err)?;
            let d = u8::from(x.degree());
            if dim.json {
                emit_json(out, "deg", json!({ "dim_h": ctx.dim_h(), "degree": d }))?;
            } else {
                writeln!(out, "{d}")?;
            }
        }
        Verb::Sq { dim, i, x, file } => {
            let ctx = context(&dim)?;
            let x = read_class(&ctx, x.as_deref(), file.as_deref(), err)?;
            match i {
                Some(i) => {
                    let s = steenrod_sq(i, &x)?;
                    if dim.json {
                        emit_json(
                            out,
                            "sq",
                            json!({ "dim_h": ctx.dim_h(), "i": i, "result": class_json(&s) }),
                        )?;
                    } else {
                        writeln!(out, "{s}")?;
                    }
                }
                None => {
                    let total = total_steenrod(&x);
                    if dim.json {
                        let comps: Vec<Value> = total.iter().map(class_json).collect();
                        emit_json(out, "sq", json!({ "dim_h": ctx.dim_h(), "total": comps }))?;
                    } else {
                        for (i, s) in total.iter().enumerate() {
                            if i == 0 || !s.is_zero() {
                                writeln!(out, "S^{i} = {s}")?;
                            }
                        }
                    }
                }
            }
        }
        Verb::Xcycle { dim, set } => {
            let ctx = context(&dim)?;
            let c = x_cycle(parse_set(&set, &ctx, "x-cycle index set")?, &ctx)?;
            if dim.json {
                emit_json(
                    out,
                    "xcycle",
                    json!({ "dim_h": ctx.dim_h(), "result": corr_json(&c) }),
                )?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Verb::Compose { dim, second, first } => {
            let ctx = context(&dim)?;
            let g = Correspondence::from_json(&ctx, &second)?;
            let f = Correspondence::from_json(&ctx, &first)?;
            let c = compose(&g, &f)?;
            if dim.json {
                emit_json(
                    out,
                    "compose",
                    json!({ "dim_h": ctx.dim_h(), "result": corr_json(&c) }),
                )?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Verb::Theta { dim_j, s, l, l2 } => {
            let j = parse_j(&dim_j)?;
            let ctx = *j.context();
            let json_out = dim_j.dim.json;
            if s.is_some() || l.is_some() || l2.is_some() {
                let s = match s {
                    Some(t) => parse_set(&t, &ctx, "S")?,
                    None => j.complement(),
                };
                let l = match l {
                    Some(t) => parse_set(&t, &ctx, "L")?,
                    None => Monomial::ONE,
                };
                let l2 = match l2 {
                    Some(t) => parse_set(&t, &ctx, "L'")?,
                    None => l,
                };
                let c = theta(s, l, l2, j.set(), &ctx)?;
                if json_out {
                    emit_json(
                        out,
                        "theta",
                        json!({
                            "dim_h": ctx.dim_h(), "J": set_json(j.set()), "S": set_json(s),
                            "L": set_json(l), "L2": set_json(l2), "result": corr_json(&c),
                        }),
                    )?;
                } else {
                    writeln!(
                        out,
                        "θ_{{S={}, L={}, L'={}}} = {c}",
                        brace(s),
                        brace(l),
                        brace(l2)
                    )?;
                }
            } else {
                let system = projector_system(j.set(), &ctx)?;
                let mut ls: Vec<Monomial> = j.set().subsets().collect();
                ls.sort();
                if json_out {
                    let items: Vec<Value> = ls
                        .iter()
                        .zip(&system)
                        .map(|(l, t)| json!({ "L": set_json(*l), "theta": corr_json(t) }))
                        .collect();
                    emit_json(
                        out,
                        "theta",
                        json!({ "dim_h": ctx.dim_h(), "J": set_json(j.set()), "projectors": items }),
                    )?;
                } else {
                    for (l, t) in ls.iter().zip(&system) {
                        writeln!(out, "θ_{} = {t}", brace(*l))?;
                    }
                }
            }
        }
        Verb::Jinv {
            dim,
            json: json_out,
            witt,
            j,
            file,
        } => {
            let profile = match (file, dim) {
                (Some(_), Some(_)) => {
                    return Err(Error::InvalidArgument(
                        "give the profile either with --file or with --dim, not both".into(),
                    ))
                }
                (Some(path), None) => {
                    if witt.is_some() || j.is_some() {
                        return Err(Error::InvalidArgument(
                            "--witt and --J cannot be combined with --file".into(),
                        ));
                    }
                    HermitianProfile::from_json(&read_file(&path)?)?
                }
                (None, Some(d)) => {
                    let witt = witt.as_deref().map(parse_list).transpose()?;
                    let jl = match j.as_deref() {
                        Some(t) => Some(
                            parse_list(t)?
                                .into_iter()
                                .map(|k| {
                                    u32::try_from(k).map_err(|_| Error::InvalidIndex {
                                        index: k,
                                        reason: "J indices must be positive".into(),
                                    })
                                })
                                .collect::<Result<Vec<u32>>>()?,
                        ),
                        None => None,
                    };
                    HermitianProfile::new(d, witt.as_deref(), jl.as_deref())?
                }
                (None, None) => {
                    return Err(Error::InvalidArgument("jinv needs --dim or --file".into()))
                }
            };
            report_profile(&profile, json_out, out)?;
        }
        Verb::Cdim(dj) => {
            let j = parse_j(&dj)?;
            let c = cdim2(&j);
            if dj.dim.json {
                emit_json(
                    out,
                    "cdim",
                    json!({ "dim_h": j.context().dim_h(), "dim_x": j.context().dim_x(), "J": set_json(j.set()), "cdim2": c }),
                )?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Verb::Decompose(dj) => {
            let j = parse_j(&dj)?;
            let m = decompose(&j);
            if !m.poincare_check() {
                return Err(Error::Defect(format!(
                    "shift profile for J={j} does not factor the Poincaré polynomial"
                )));
            }
            if dj.dim.json {
                let mut body: Value = serde_json::from_str(&m.to_json())?;
                if let Value::Object(ref mut o) = body {
                    o.insert("indecomposable".into(), json!(is_indecomposable(&j)));
                }
                emit_json(out, "decompose", body)?;
            } else {
                writeln!(out, "copies of R(h) at shifts: {:?}", m.copy_shifts())?;
                writeln!(out, "split R(h) Tate shifts:   {:?}", m.tate_shifts())?;
                writeln!(out, "indecomposable: {}", is_indecomposable(&j))?;
                writeln!(
                    out,
                    "({}) · ({}) = {}",
                    m.copy_polynomial(),
                    m.tate_polynomial(),
                    poincare_polynomial(m.context())
                )?;
            }
        }
        Verb::CompareQ(dj) => {
            let j = parse_j(&dj)?;
            let q: Vec<u32> = quadratic_j(&j).into_iter().collect();
            if dj.dim.json {
                emit_json(
                    out,
                    "compare-q",
                    json!({ "dim_h": j.context().dim_h(), "J": set_json(j.set()), "J_q": q }),
                )?;
            } else {
                let items: Vec<String> = q.iter().map(u32::to_string).collect();
                writeln!(out, "{{{}}}", items.join(","))?;
            }
        }
        Verb::Reduce { dim, x, file } => {
            let ctx = context(&dim)?;
            let ok = split_decomposition_check(&ctx)?;
            if !ok {
                return Err(Error::Defect(format!(
                    "reduction images do not partition the basis at dim(h)={}",
                    ctx.dim_h()
                )));
            }
            let small = generator_set(ctx.dim_h() as i64 - 2)?;
            let images = match (x.as_deref(), file.as_deref()) {
                (None, None) => None,
                (t, f) => {
                    let x = read_class(&small, t, f, err)?;
                    Some((beta_push(&x, &ctx)?, i_push(&x, &ctx)?))
                }
            };
            if dim.json {
                let mut body =
                    json!({ "dim_h": ctx.dim_h(), "partition": ok, "shift": 2 * ctx.n() + 1 });
                if let (Some((b, i)), Value::Object(o)) = (&images, &mut body) {
                    o.insert("beta_push".into(), class_json(b));
                    o.insert("i_push".into(), class_json(i));
                }
                emit_json(out, "reduce", body)?;
            } else {
                writeln!(
                    out,
                    "basis of dim(h)={} = β_*(basis of dim(h)={}) ⊔ i_*(…) with codim shift {}: ok",
                    ctx.dim_h(),
                    small.dim_h(),
                    2 * ctx.n() + 1
                )?;
                if let Some((b, i)) = images {
                    writeln!(out, "β_* = {b}")?;
                    writeln!(out, "i_* = {i}")?;
                }
            }
        }
        Verb::Verify {
            suite,
            max_dim,
            seed,
            json: json_out,
        } => {
            let reports = run_suites(&suite, max_dim, seed)?;
            let all_ok = reports.iter().all(|r| r.passed());
            if json_out {
                let items: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "suite": r.suite, "passed": r.passed(), "contexts": r.contexts,
                            "checks": r.checks, "capped_at": r.capped_at, "failure": r.failure,
                        })
                    })
                    .collect();
                emit_json(
                    out,
                    "verify",
                    json!({ "seed": seed, "max_dim": max_dim, "suites": items }),
                )?;
            } else if reports.len() == 1 {
                writeln!(out, "{}", reports[0])?;
            } else {
                for r in &reports {
                    writeln!(out, "{:<15} {r}", r.suite)?;
                }
            }
            return Ok(if all_ok { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn report_profile(p: &HermitianProfile, json_out: bool, out: &mut dyn Write) -> Result<()> {
    let ctx = p.context();
    let bound = p.lower_bound();
    let best = p.best_known_j();
    if json_out {
        let mut body = json!({
            "dim_h": ctx.dim_h(),
            "generators": ctx.generator_indices(),
            "witt": p.witt_indices(),
            "height": p.height(),
            "declared_J": p.declared_j().map(|j| j.indices()),
            "lower_bound": bound.map(|j| j.indices()),
        });
        if let (Some(j), Value::Object(o)) = (best, &mut body) {
            let (lo, hi) = x1_bounds(&j);
            o.insert("split".into(), json!(is_split(&j)));
            o.insert("max_rational_codim".into(), json!(max_rational_codim(&j)));
            o.insert("cdim2".into(), json!(cdim2(&j)));
            o.insert("x1_bounds".into(), json!([lo.indices(), hi.indices()]));
        }
        return emit_json(out, "jinv", body);
    }
    writeln!(
        out,
        "dim(h)={} generators={:?} dim(X)={}",
        ctx.dim_h(),
        ctx.generator_indices(),
        ctx.dim_x()
    )?;
    if let (Some(w), Some(h)) = (p.witt_indices(), p.height()) {
        writeln!(out, "witt indices {w:?}, height {h}")?;
    }
    if let Some(b) = bound {
        writeln!(out, "lower bound for J: {b}")?;
    }
    if let Some(j) = p.declared_j() {
        writeln!(out, "declared J: {j}")?;
    }
    match best {
        Some(j) => {
            let (lo, hi) = x1_bounds(&j);
            let (ge, le) = if p.declared_j().is_some() {
                ("=", "=")
            } else {
                ("≥", "≤")
            };
            if is_split(&j) || p.declared_j().is_some() {
                writeln!(out, "split: {}", is_split(&j))?;
            } else {
                writeln!(out, "split: unknown")?;
            }
            writeln!(out, "max rational codim {ge} {}", max_rational_codim(&j))?;
            writeln!(out, "cdim2 {le} {}", cdim2(&j))?;
            if p.declared_j().is_some() {
                writeln!(out, "over F(X_1): {lo} ⊆ J ⊆ {hi}")?;
            } else {
                writeln!(out, "over F(X_1): J ⊇ {lo}")?;
            }
        }
        None => writeln!(out, "no J data: pass --witt or --J")?,
    }
    Ok(())
}
