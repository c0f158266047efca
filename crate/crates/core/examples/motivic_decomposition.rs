// Shift profiles of the motivic decomposition for every J in one dimension.

use chowk::motives::is_indecomposable;
use chowk::{decompose, generator_set, JInvariant};

pub fn run_example() -> chowk::Result<()> {
    let ctx = generator_set(6)?;
    for s in ctx.generators().subsets() {
        let j = JInvariant::new(&ctx, s)?;
        let m = decompose(&j);
        println!(
            "J={j}: copies {:?}, Tate {:?}, factorization {}, indecomposable {}",
            m.copy_shifts(),
            m.tate_shifts(),
            m.poincare_check(),
            is_indecomposable(&j)
        );
    }
    println!(
        "{}",
        decompose(&JInvariant::from_indices(&generator_set(4)?, &[1])?).to_json()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
