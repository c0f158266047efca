// JSON and text forms of classes and correspondences.

use chowk::{generator_set, parse_class, x_cycle, ChowClass, Correspondence, Monomial};

pub fn run_example() -> chowk::Result<()> {
    let ctx = generator_set(6)?;
    let parsed = parse_class("e[1,3] + e[5] + e[4]", &ctx)?;
    for w in &parsed.warnings {
        println!("warning: {w}");
    }
    let x = parsed.class;
    let json = x.to_json();
    println!("{x} ↔ {json}");
    assert_eq!(ChowClass::from_json(&ctx, &json)?, x);
    assert_eq!(parse_class(&x.to_string(), &ctx)?.class, x);

    let c = x_cycle(Monomial::from_indices([3])?, &ctx)?;
    let json = c.to_json();
    println!("{c} ↔ {json}");
    assert_eq!(Correspondence::from_json(&ctx, &json)?, c);
    Ok(())
}

#[allow(dead_code)]
fn main() -> chowk::Result<()> {
    run_example()
}
