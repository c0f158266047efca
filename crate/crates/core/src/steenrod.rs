//! Steenrod operations of cohomological type on the split algebra.
//!
//! On generators `S^i(e_k) = C(k, i) · e_{k+i}`, where `e_{k+i}` is read through
//! [`generator_class`] so even or out-of-range targets vanish. Monomials are
//! handled by the Cartan formula and everything extends linearly. The formula
//! is only meaningful over fields of characteristic other than 2; here it is
//! applied formally.

use crate::algebra::{generator_class, ChowClass, GeneratorContext, Monomial};
use crate::error::{Error, Result};

/// `C(k, i) mod 2`: odd exactly when the binary digits of `i` are a subset of
/// those of `k` (Lucas).
pub fn binom_mod2(k: u64, i: u64) -> bool {
    i & !k == 0
}

/// Total operation `[S^0, S^1, …, S^{dim X}]` of a single generator.
fn generator_total(k: u32, ctx: &GeneratorContext) -> Vec<ChowClass> {
    (0..=ctx.dim_x())
        .map(|i| {
            if binom_mod2(k as u64, i as u64) {
                generator_class((k + i) as i64, ctx).expect("non-negative index")
            } else {
                ChowClass::zero(ctx)
            }
        })
        .collect()
}

fn convolve(a: &[ChowClass], b: &[ChowClass], ctx: &GeneratorContext) -> Vec<ChowClass> {
    let len = a.len();
    let mut out = vec![ChowClass::zero(ctx); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if y.is_zero() {
                continue;
            }
            let prod = x.multiply(y).expect("same context");
            out[i + j] = out[i + j].add(&prod).expect("same context");
        }
    }
    out
}

fn monomial_total(m: Monomial, ctx: &GeneratorContext) -> Vec<ChowClass> {
    let mut acc = vec![ChowClass::zero(ctx); ctx.dim_x() as usize + 1];
    acc[0] = ChowClass::one(ctx);
    for k in m.indices() {
        acc = convolve(&acc, &generator_total(k, ctx), ctx);
    }
    acc
}

/// `[S^0(x), S^1(x), …, S^{dim X}(x)]`. Components above `dim X` are always zero.
pub fn total_steenrod(x: &ChowClass) -> Vec<ChowClass> {
    let ctx = *x.context();
    let mut out = vec![ChowClass::zero(&ctx); ctx.dim_x() as usize + 1];
    for m in x.terms() {
        for (slot, part) in out.iter_mut().zip(monomial_total(m, &ctx)) {
            *slot = slot.add(&part).expect("same context");
        }
    }
    out
}

/// `S^i(x)`.
pub fn steenrod_sq(i: i64, x: &ChowClass) -> Result<ChowClass> {
    if i < 0 {
        return Err(Error::InvalidIndex {
            index: i,
            reason: "Steenrod degree must be non-negative".into(),
        });
    }
    let ctx = x.context();
    if i > ctx.dim_x() as i64 {
        return Ok(ChowClass::zero(ctx));
    }
    Ok(total_steenrod(x).swap_remove(i as usize))
}
