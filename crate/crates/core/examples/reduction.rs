// The maps relating the algebras of h̃ and h̃ ⊥ H.

use chowk::reduction::{beta_push, i_pull, i_push, split_decomposition_check};
use chowk::{generator_set, ChowClass};

pub fn run_example() -> chowk::Result<()> {
    let small = generator_set(4)?;
    let large = generator_set(6)?;
    for m in small.basis() {
        let x = ChowClass::monomial(&small, m)?;
        println!(
            "{x}: β_* = {}, i_* = {}",
            beta_push(&x, &large)?,
            i_push(&x, &large)?
        );
    }
    println!("partition at dim 6: {}", split_decomposition_check(&large)?);
    let e5 = ChowClass::from_index_lists(&large, &[vec![5]])?;
    match i_pull(&e5, &small) {
        Ok(x) => println!("i^*(e_5) = {x}"),
        Err(e) => println!("i^*(e_5): {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
