//! Exhaustive and seeded-random checks of the closed-form identities the
//! library relies on. Each suite reports how many contexts and cases it
//! covered and the first counterexample, if any.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{generator_set, ChowClass, GeneratorContext, Monomial, Parity};
use crate::correspondences::{
    compose, diagonal, family_rank, projector_system, pullback, pushforward, theta, theta_between,
    x_cycle, Correspondence,
};
use crate::error::{Error, Result};
use crate::jinvariant::{quadratic_j, JInvariant};
use crate::motives::decompose;
use crate::reduction::split_decomposition_check;
use crate::steenrod::{steenrod_sq, total_steenrod};

pub const SUITES: &[&str] = &[
    "algebra",
    "pairing",
    "xcycle-action",
    "cartan",
    "projectors",
    "rational-basis",
    "poincare",
    "reduction",
    "quadratic",
    "matrix",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub contexts: usize,
    pub checks: u64,
    pub unit: &'static str,
    /// Set when the requested `max_dim` exceeded what the suite can enumerate.
    pub capped_at: Option<u32>,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => {
                write!(
                    f,
                    "OK: {} contexts, {} {} checked",
                    self.contexts, self.checks, self.unit
                )?;
                if let Some(cap) = self.capped_at {
                    write!(f, " (capped at dim(h) ≤ {cap})")?;
                }
                Ok(())
            }
            Some(msg) => write!(
                f,
                "FAIL: {} after {} {} ({} contexts): {msg}",
                self.suite, self.checks, self.unit, self.contexts
            ),
        }
    }
}

struct Run {
    suite: &'static str,
    unit: &'static str,
    contexts: usize,
    checks: u64,
}

impl Run {
    fn new(suite: &'static str, unit: &'static str) -> Self {
        Run {
            suite,
            unit,
            contexts: 0,
            checks: 0,
        }
    }

    fn finish(self, outcome: std::result::Result<(), String>) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            contexts: self.contexts,
            checks: self.checks,
            unit: self.unit,
            capped_at: None,
            failure: outcome.err(),
        }
    }
}

fn contexts(lo: u32, max_dim: u32) -> impl Iterator<Item = GeneratorContext> {
    (lo..=max_dim).map(|d| generator_set(d as i64).expect("dimension in range"))
}

fn mono_class(ctx: &GeneratorContext, m: Monomial) -> ChowClass {
    ChowClass::monomial(ctx, m).expect("basis monomial")
}

fn random_class(ctx: &GeneratorContext, rng: &mut ChaCha8Rng) -> ChowClass {
    let ms: Vec<Monomial> = ctx
        .basis()
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    ChowClass::from_monomials(ctx, ms).expect("basis monomials")
}

/// A correspondence with each monomial pair present with probability 1/2.
pub fn random_correspondence(ctx: &GeneratorContext, rng: &mut ChaCha8Rng) -> Correspondence {
    let basis = ctx.basis();
    let mut pairs = Vec::new();
    for &a in &basis {
        for &b in &basis {
            if rng.gen_bool(0.5) {
                pairs.push((a, b));
            }
        }
    }
    Correspondence::from_pairs(ctx, pairs).expect("basis monomials")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Commutativity, associativity, unit and vanishing squares.
pub fn algebra_laws(max_dim: u32, seed: u64) -> SuiteReport {
    let mut run = Run::new("algebra", "products");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            let one = ChowClass::one(&ctx);
            let triples: Vec<[ChowClass; 3]> = if ctx.rank() <= 16 {
                let b: Vec<ChowClass> = ctx
                    .basis()
                    .into_iter()
                    .map(|m| mono_class(&ctx, m))
                    .collect();
                let mut v = Vec::new();
                for x in &b {
                    for y in &b {
                        for z in &b {
                            v.push([x.clone(), y.clone(), z.clone()]);
                        }
                    }
                }
                v
            } else {
                (0..200)
                    .map(|_| {
                        [
                            random_class(&ctx, &mut rng),
                            random_class(&ctx, &mut rng),
                            random_class(&ctx, &mut rng),
                        ]
                    })
                    .collect()
            };
            for [x, y, z] in &triples {
                let xy = lift(x.multiply(y))?;
                ensure(xy == lift(y.multiply(x))?, || format!("{x}·{y} ≠ {y}·{x}"))?;
                ensure(
                    lift(xy.multiply(z))? == lift(x.multiply(&lift(y.multiply(z))?))?,
                    || format!("({x}·{y})·{z} ≠ {x}·({y}·{z})"),
                )?;
                ensure(lift(x.multiply(&one))? == *x, || format!("{x}·1 ≠ {x}"))?;
                run.checks += 1;
            }
            for m in ctx.basis() {
                let x = mono_class(&ctx, m);
                let sq = lift(x.multiply(&x))?;
                ensure(m.is_empty() || sq.is_zero(), || format!("({x})² = {sq}"))?;
                for m2 in ctx.basis() {
                    let p = lift(x.multiply(&mono_class(&ctx, m2)))?;
                    ensure(
                        p.is_zero() || p.pure_codim() == Some(m.codim() + m2.codim()),
                        || format!("grading fails for {m}·{m2}"),
                    )?;
                }
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// `deg(e_I · e_J)` is 1 exactly when `J` is the complement of `I`.
pub fn degree_pairing(max_dim: u32) -> SuiteReport {
    let mut run = Run::new("pairing", "monomial pairs");
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            let basis = ctx.basis();
            for &a in &basis {
                for &b in &basis {
                    let d = lift(mono_class(&ctx, a).multiply(&mono_class(&ctx, b)))?.degree();
                    ensure(d == (b == ctx.complement(a)), || {
                        format!("deg({a}·{b}) = {d} at dim(h)={}", ctx.dim_h())
                    })?;
                    run.checks += 1;
                }
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// `(x_J)_*(e_I) = e_{I∩J}` when `I ∪ J` is everything, `0` otherwise.
pub fn x_cycle_action(max_dim: u32) -> SuiteReport {
    let mut run = Run::new("xcycle-action", "(I, J) pairs");
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            for j in ctx.basis() {
                let xj = lift(x_cycle(j, &ctx))?;
                for i in ctx.basis() {
                    let got = lift(pushforward(&xj, &mono_class(&ctx, i)))?;
                    let expected = if i.union(j) == ctx.generators() {
                        mono_class(&ctx, i.intersection(j))
                    } else {
                        ChowClass::zero(&ctx)
                    };
                    ensure(got == expected, || {
                        format!("(x_{j})_*({i}) = {got}, expected {expected}")
                    })?;
                    run.checks += 1;
                }
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// Cartan formula, `S^0 = id`, vanishing top square and instability.
pub fn steenrod_cartan(max_dim: u32) -> SuiteReport {
    let mut run = Run::new("cartan", "monomial pairs");
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            let basis = ctx.basis();
            let totals: Vec<Vec<ChowClass>> = basis
                .iter()
                .map(|&m| total_steenrod(&mono_class(&ctx, m)))
                .collect();
            for (m, t) in basis.iter().zip(&totals) {
                let x = mono_class(&ctx, *m);
                ensure(t[0] == x, || format!("S^0({x}) = {}", t[0]))?;
                for (i, s) in t.iter().enumerate() {
                    if i as u32 > m.codim() || (i as u32 == m.codim() && !m.is_empty()) {
                        ensure(s.is_zero(), || format!("S^{i}({x}) = {s} should vanish"))?;
                    }
                }
            }
            for (a, ta) in basis.iter().zip(&totals) {
                for (b, tb) in basis.iter().zip(&totals) {
                    let xy = lift(mono_class(&ctx, *a).multiply(&mono_class(&ctx, *b)))?;
                    for i in 0..=ctx.dim_x() as usize {
                        let lhs = lift(steenrod_sq(i as i64, &xy))?;
                        let mut rhs = ChowClass::zero(&ctx);
                        for k in 0..=i {
                            rhs = lift(rhs.add(&lift(ta[k].multiply(&tb[i - k]))?))?;
                        }
                        ensure(lhs == rhs, || {
                            format!("Cartan fails: S^{i}({a}·{b}) = {lhs}, Σ = {rhs}")
                        })?;
                    }
                    run.checks += 1;
                }
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// The full projector calculus for every `J`.
pub fn projectors(max_dim: u32) -> SuiteReport {
    let mut run = Run::new("projectors", "projector systems");
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            for j in ctx.basis() {
                check_projector_calculus(&ctx, j)?;
                run.checks += 1;
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

fn check_projector_calculus(
    ctx: &GeneratorContext,
    j: Monomial,
) -> std::result::Result<(), String> {
    let system = lift(projector_system(j, ctx))?;
    let mut ls: Vec<Monomial> = j.subsets().collect();
    ls.sort();
    let mut sum = Correspondence::zero(ctx);
    for (l, t) in ls.iter().zip(&system) {
        ensure(lift(compose(t, t))? == *t, || {
            format!("θ_{l} not idempotent, J={j}")
        })?;
        for (l2, t2) in ls.iter().zip(&system) {
            if l != l2 {
                ensure(lift(compose(t2, t))?.is_zero(), || {
                    format!("θ_{l2}∘θ_{l} ≠ 0, J={j}")
                })?;
            }
        }
        for n in &ls {
            let got = lift(pullback(t, &mono_class(ctx, *n)))?;
            let expected = if n == l {
                mono_class(ctx, *l)
            } else {
                ChowClass::zero(ctx)
            };
            ensure(got == expected, || format!("θ_{l}^*(e_{n}) = {got}, J={j}"))?;
        }
        sum = lift(sum.add(t))?;
    }
    ensure(sum == diagonal(ctx), || format!("Σθ_L ≠ Δ, J={j}"))?;
    for &l in &ls {
        for &l2 in &ls {
            let first = lift(theta_between(l2, l, j, ctx))?;
            for &n in &ls {
                let second = lift(theta_between(l, n, j, ctx))?;
                let expected = lift(theta_between(l2, n, j, ctx))?;
                ensure(lift(compose(&second, &first))? == expected, || {
                    format!("θ_{{{l},{n}}}∘θ_{{{l2},{l}}} ≠ θ_{{{l2},{n}}}, J={j}")
                })?;
            }
        }
    }
    Ok(())
}

/// `{θ_{S,L,L'}}` has rank `2^{|J̄| + 2|J|}`.
pub fn rational_basis(max_dim: u32) -> SuiteReport {
    let mut run = Run::new("rational-basis", "θ families");
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            for j in ctx.basis() {
                let j_bar = ctx.complement(j);
                let mut family = Vec::new();
                for s in j_bar.subsets() {
                    for l in j.subsets() {
                        for l2 in j.subsets() {
                            family.push(lift(theta(s, l, l2, j, &ctx))?);
                        }
                    }
                }
                let expected = 1usize << (j_bar.len() + 2 * j.len());
                let rank = family_rank(&family);
                ensure(family.len() == expected && rank == expected, || {
                    format!(
                        "J={j} at dim(h)={}: {} elements of rank {rank}, expected {expected}",
                        ctx.dim_h(),
                        family.len()
                    )
                })?;
                run.checks += 1;
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// Copy and Tate shift polynomials multiply to the Poincaré polynomial.
pub fn poincare_factorization(max_dim: u32) -> SuiteReport {
    let mut run = Run::new("poincare", "J subsets");
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            for j in ctx.basis() {
                let d = decompose(&lift(JInvariant::new(&ctx, j))?);
                ensure(d.poincare_check(), || {
                    format!("factorization fails for J={j} at dim(h)={}", ctx.dim_h())
                })?;
                run.checks += 1;
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

pub fn reduction_partition(max_dim: u32) -> SuiteReport {
    let mut run = Run::new("reduction", "bases");
    let outcome = (|| {
        for ctx in contexts(3, max_dim) {
            run.contexts += 1;
            ensure(lift(split_decomposition_check(&ctx))?, || {
                format!(
                    "β_*/i_* images do not partition the basis at dim(h)={}",
                    ctx.dim_h()
                )
            })?;
            run.checks += 1;
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// `Σ J(q) - ||J|| = n(n+1)` for even `dim(h)`, `Σ J(q) = n(2n+1)` for odd.
pub fn quadratic_gap(max_dim: u32) -> SuiteReport {
    let mut run = Run::new("quadratic", "J subsets");
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            let n = ctx.n();
            for j in ctx.basis() {
                let q: u32 = quadratic_j(&lift(JInvariant::new(&ctx, j))?).iter().sum();
                let ok = match ctx.parity() {
                    Parity::Even => q - j.codim() == n * (n + 1),
                    Parity::Odd => q == n * (2 * n + 1),
                };
                ensure(ok, || {
                    format!("gap identity fails for J={j} at dim(h)={}", ctx.dim_h())
                })?;
                run.checks += 1;
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// Composition matches the product of pushforward matrices on random pairs.
pub fn matrix_oracle(max_dim: u32, seed: u64, samples: usize) -> SuiteReport {
    let mut run = Run::new("matrix", "random pairs");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = (|| {
        for ctx in contexts(1, max_dim) {
            run.contexts += 1;
            for _ in 0..samples {
                let f = random_correspondence(&ctx, &mut rng);
                let g = random_correspondence(&ctx, &mut rng);
                let gf = lift(compose(&g, &f))?;
                ensure(
                    gf.action_matrix() == g.action_matrix().mul(&f.action_matrix()),
                    || format!("matrix mismatch at dim(h)={} for f={f}, g={g}", ctx.dim_h()),
                )?;
                run.checks += 1;
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// Largest `dim(h)` a suite enumerates in reasonable time.
pub fn suite_ceiling(suite: &str) -> u32 {
    match suite {
        "algebra" | "pairing" => 13,
        "xcycle-action" | "cartan" | "projectors" | "rational-basis" | "matrix" => 11,
        _ => 21,
    }
}

/// Runs one named suite, or all of them for `"all"`.
pub fn run_suites(name: &str, max_dim: u32, seed: u64) -> Result<Vec<SuiteReport>> {
    let names: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&name) {
        vec![name]
    } else {
        return Err(Error::InvalidArgument(format!(
            "unknown suite '{name}', expected one of: all, {}",
            SUITES.join(", ")
        )));
    };
    if max_dim == 0 || max_dim > 21 {
        return Err(Error::InvalidArgument(format!(
            "--max-dim must lie in 1..=21, got {max_dim}"
        )));
    }
    Ok(names
        .into_iter()
        .map(|n| {
            let cap = suite_ceiling(n);
            let d = max_dim.min(cap);
            let mut report = match n {
                "algebra" => algebra_laws(d, seed),
                "pairing" => degree_pairing(d),
                "xcycle-action" => x_cycle_action(d),
                "cartan" => steenrod_cartan(d),
                "projectors" => projectors(d),
                "rational-basis" => rational_basis(d),
                "poincare" => poincare_factorization(d),
                "reduction" => reduction_partition(d),
                "quadratic" => quadratic_gap(d),
                "matrix" => matrix_oracle(d, seed, 100),
                _ => unreachable!("suite names are checked above"),
            };
            if max_dim > cap {
                report.capped_at = Some(cap);
            }
            report
        })
        .collect())
}
