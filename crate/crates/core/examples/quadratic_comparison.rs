// J-invariants of the quadratic form attached to a hermitian form.

use chowk::jinvariant::quadratic_j;
use chowk::{generator_set, JInvariant};

pub fn run_example() -> chowk::Result<()> {
    for dim in [6, 7] {
        let ctx = generator_set(dim)?;
        for s in ctx.generators().subsets() {
            let j = JInvariant::new(&ctx, s)?;
            let q = quadratic_j(&j);
            println!("dim(h)={dim} J={j}: J_q={q:?}, Σ={}", q.iter().sum::<u32>());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
