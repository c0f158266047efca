//! Basis-level maps between the algebras of `h̃` and `h = h̃ ⊥ H`.
//!
//! `β_*` relabels `ẽ_J ↦ e_J`, `i_*` sends `ẽ_J ↦ e_{J ∪ {2n+1}}`, and `i^*`
//! relabels back on classes avoiding `e_{2n+1}`. Together the images of `β_*`
//! and `i_*` split the basis of the larger algebra in two.

use crate::algebra::{ChowClass, GeneratorContext, Monomial};
use crate::error::{Error, Result};

fn check_gap(small: &GeneratorContext, large: &GeneratorContext) -> Result<()> {
    if small.dim_h() + 2 != large.dim_h() {
        return Err(Error::InvalidArgument(format!(
            "reduction maps need dim(h) = dim(h̃) + 2, got dim(h̃)={} and dim(h)={}",
            small.dim_h(),
            large.dim_h()
        )));
    }
    Ok(())
}

fn top(large: &GeneratorContext) -> Monomial {
    let k = large
        .top_generator()
        .expect("a context two dimensions above another has a top generator");
    Monomial::single(k).expect("odd generator")
}

/// `β_*`: the monomial-wise relabeling `ẽ_J ↦ e_J`.
pub fn beta_push(x: &ChowClass, target: &GeneratorContext) -> Result<ChowClass> {
    check_gap(x.context(), target)?;
    ChowClass::from_monomials(target, x.terms())
}

/// `i_*`: `ẽ_J ↦ e_J · e_{2n+1}`.
pub fn i_push(x: &ChowClass, target: &GeneratorContext) -> Result<ChowClass> {
    check_gap(x.context(), target)?;
    let t = top(target);
    ChowClass::from_monomials(target, x.terms().map(|m| m.union(t)))
}

/// `i^*`: `e_J ↦ ẽ_J`, defined only when no monomial contains `2n+1`.
pub fn i_pull(x: &ChowClass, target: &GeneratorContext) -> Result<ChowClass> {
    check_gap(target, x.context())?;
    let t = top(x.context());
    if let Some(m) = x.terms().find(|m| !m.is_disjoint(t)) {
        return Err(Error::OutOfDomain(format!(
            "i^* is not defined on {m}: it contains e_{}",
            x.context().n() * 2 + 1
        )));
    }
    ChowClass::from_monomials(target, x.terms())
}

/// Checks that `β_*` and `i_*` images of the smaller basis partition the basis
/// of `ctx`, with `i_*` raising codimension by `2n+1`.
pub fn split_decomposition_check(ctx: &GeneratorContext) -> Result<bool> {
    if ctx.dim_h() < 3 {
        return Err(Error::InvalidDimension {
            dim: ctx.dim_h() as i64,
            reason: "the reduction needs dim(h) ≥ 3".into(),
        });
    }
    let small = GeneratorContext::new(ctx.dim_h() as i64 - 2)?;
    let shift = 2 * ctx.n() + 1;
    let mut seen = vec![false; ctx.rank()];
    for m in small.basis() {
        let tilde = ChowClass::monomial(&small, m)?;
        let b = beta_push(&tilde, ctx)?;
        let i = i_push(&tilde, ctx)?;
        let (Some(bm), Some(im)) = (single_term(&b), single_term(&i)) else {
            return Ok(false);
        };
        if bm.codim() != m.codim() || im.codim() != m.codim() + shift {
            return Ok(false);
        }
        for img in [bm, im] {
            let slot = &mut seen[ctx.dense_index(img)];
            if *slot {
                return Ok(false);
            }
            *slot = true;
        }
    }
    Ok(seen.iter().all(|&s| s))
}

fn single_term(x: &ChowClass) -> Option<Monomial> {
    let mut it = x.terms();
    let m = it.next()?;
    it.next().is_none().then_some(m)
}
