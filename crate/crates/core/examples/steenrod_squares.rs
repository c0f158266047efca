// Steenrod operations on generators and their Cartan behaviour on products.

use chowk::{generator_class, generator_set, steenrod_sq, total_steenrod};

pub fn run_example() -> chowk::Result<()> {
    let ctx = generator_set(8)?;
    for k in ctx.generator_indices() {
        let e = generator_class(k as i64, &ctx)?;
        let nonzero: Vec<String> = total_steenrod(&e)
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| format!("S^{i} = {s}"))
            .collect();
        println!("e_{k}: {}", nonzero.join(", "));
    }
    let x = generator_class(1, &ctx)?.multiply(&generator_class(3, &ctx)?)?;
    println!("S^2({x}) = {}", steenrod_sq(2, &x)?);
    println!("S^4({x}) = {}", steenrod_sq(4, &x)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
