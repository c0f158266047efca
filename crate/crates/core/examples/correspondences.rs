// Correspondences on X × X: x-cycles, composition and their action on classes.

use chowk::correspondences::diagonal;
use chowk::{
    compose, generator_set, pullback, pushforward, transpose, x_cycle, ChowClass, Monomial,
};

pub fn run_example() -> chowk::Result<()> {
    let ctx = generator_set(6)?;
    let x = x_cycle(Monomial::from_indices([1, 5])?, &ctx)?;
    println!("x_{{1,5}} = {x}");
    for m in ctx.basis() {
        let e = ChowClass::monomial(&ctx, m)?;
        let image = pushforward(&x, &e)?;
        if !image.is_zero() {
            println!("  (x_{{1,5}})_*({e}) = {image}");
        }
    }
    let delta = diagonal(&ctx);
    println!("Δ ∘ x = x: {}", compose(&delta, &x)? == x);
    println!("x is symmetric: {}", transpose(&x) == x);
    let e3 = ChowClass::monomial(&ctx, Monomial::from_indices([3])?)?;
    println!("pull-back of e_3 along x_{{1,5}}: {}", pullback(&x, &e3)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
