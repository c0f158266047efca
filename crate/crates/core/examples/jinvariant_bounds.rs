// Witt-index lower bounds for J and the canonical 2-dimension.

use chowk::jinvariant::{hyperbolic_extend, is_split, max_rational_codim, witt_lower_bound};
use chowk::{cdim2, HermitianProfile};

pub fn run_example() -> chowk::Result<()> {
    for (dim, witt) in [
        (6, vec![0, 1, 2, 3]),
        (6, vec![0, 3]),
        (7, vec![1, 3]),
        (8, vec![0, 2, 4]),
    ] {
        let j = witt_lower_bound(dim, &witt)?;
        println!(
            "dim(h)={dim} witt {witt:?}: J ⊇ {j}, split {}, rational codim ≤ {}, cdim2 ≤ {}",
            is_split(&j),
            max_rational_codim(&j),
            cdim2(&j)
        );
    }
    let profile = HermitianProfile::from_json(r#"{"dim": 6, "witt": [0, 1, 3], "J": [1, 5]}"#)?;
    if let Some(j) = profile.best_known_j() {
        let ext = hyperbolic_extend(&j, 1)?;
        println!(
            "J={j} at dim 6 becomes {ext} at dim 8; cdim2 {} = {}",
            cdim2(&j),
            cdim2(&ext)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
