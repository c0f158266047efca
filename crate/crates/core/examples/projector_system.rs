// The orthogonal projectors θ_L, one per L ⊆ J.

use chowk::correspondences::{is_projector, projector_system};
use chowk::{generator_set, Monomial};

pub fn run_example() -> chowk::Result<()> {
    let ctx = generator_set(6)?;
    let j = Monomial::from_indices([3, 5])?;
    let mut ls: Vec<Monomial> = j.subsets().collect();
    ls.sort();
    let system = projector_system(j, &ctx)?;
    for (l, theta) in ls.iter().zip(&system) {
        println!(
            "L={:?}: codim {:?}, idempotent {}, {} terms",
            l.to_vec(),
            theta.pure_codim(),
            is_projector(theta),
            theta.num_terms()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
