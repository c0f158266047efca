// Bases, products and degrees in small dimensions.

use chowk::{generator_class, generator_set, poincare_polynomial, ChowClass, Monomial};

pub fn run_example() -> chowk::Result<()> {
    for dim in [4, 5, 6] {
        let ctx = generator_set(dim)?;
        println!(
            "dim(h)={dim}: generators {:?}, dim(X)={}, rank {}",
            ctx.generator_indices(),
            ctx.dim_x(),
            ctx.rank()
        );
        println!("  Poincaré polynomial: {}", poincare_polynomial(&ctx));
    }

    let ctx = generator_set(6)?;
    let e1 = generator_class(1, &ctx)?;
    let e35 = ChowClass::monomial(&ctx, Monomial::from_indices([3, 5])?)?;
    let point = e1.multiply(&e35)?;
    println!(
        "e_1 · e_{{3,5}} = {point}, degree {}",
        u8::from(point.degree())
    );
    println!(
        "e_3 · e_3 = {}",
        generator_class(3, &ctx)?.multiply(&generator_class(3, &ctx)?)?
    );
    println!("e_4 = {}", generator_class(4, &ctx)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
