use chowk::algebra::{generator_set, ChowClass, Monomial};
use chowk::correspondences::{theta, theta_between};
use chowk::jinvariant::{cdim2, hyperbolic_extend, JInvariant};
use chowk::motives::decompose;
use chowk::reduction::i_push;

fn mono(ix: &[u32]) -> Monomial {
    Monomial::from_indices(ix.iter().copied()).unwrap()
}

/// Adding a hyperbolic plane adds the same index to J that `i_*` attaches to
/// every monomial.
#[test]
fn hyperbolic_extension_matches_i_push() {
    for d in 1..=13 {
        let small = generator_set(d).unwrap();
        let large = generator_set(d + 2).unwrap();
        let pushed = i_push(&ChowClass::one(&small), &large).unwrap();
        for s in small.generators().subsets() {
            let j = JInvariant::new(&small, s).unwrap();
            let ext = hyperbolic_extend(&j, 1).unwrap();
            let added = ext.set().difference(j.set());
            assert_eq!(pushed.terms().collect::<Vec<_>>(), vec![added], "dim {d}");
            assert_eq!(cdim2(&ext), cdim2(&j), "dim {d}, J={j}");
        }
    }
}

/// `θ_{L,J}` sits in codimension `||J̄|| + ||L||`, so above `||J̄||` the
/// codimensions are the copy shifts.
#[test]
fn theta_codims_track_copy_shifts() {
    for d in 1..=9 {
        let c = generator_set(d).unwrap();
        for s in c.generators().subsets() {
            let j = JInvariant::new(&c, s).unwrap();
            let mut codims: Vec<u32> = s
                .subsets()
                .map(|l| {
                    let t = theta_between(l, s, s, &c).unwrap();
                    t.pure_codim().unwrap() - c.complement(s).codim()
                })
                .collect();
            codims.sort_unstable();
            assert_eq!(codims, decompose(&j).copy_shifts(), "dim {d}, J={j}");
        }
    }
}

/// `θ_{J̄,L,L}` always has codimension dim X, but other `θ_{S,L,L'}` can too.
#[test]
fn theta_codimension_is_not_a_characterization() {
    for d in 1..=9 {
        let c = generator_set(d).unwrap();
        for j in c.generators().subsets() {
            let jbar = c.complement(j);
            for l in j.subsets() {
                let t = theta(jbar, l, l, j, &c).unwrap();
                assert_eq!(t.pure_codim(), Some(c.dim_x()));
            }
        }
    }
    for d in 1..=7 {
        let c = generator_set(d).unwrap();
        for j in c.generators().subsets() {
            let jbar = c.complement(j);
            for s in jbar.subsets() {
                for l in j.subsets() {
                    for l2 in j.subsets() {
                        let t = theta(s, l, l2, j, &c).unwrap();
                        let top = t.pure_codim() == Some(c.dim_x());
                        assert_eq!(top, s == jbar && l == l2, "dim {d}");
                    }
                }
            }
        }
    }
    let c = generator_set(8).unwrap();
    let t = theta(
        Monomial::ONE,
        mono(&[1, 7]),
        mono(&[5]),
        mono(&[1, 5, 7]),
        &c,
    )
    .unwrap();
    assert_eq!(t.pure_codim(), Some(c.dim_x()));
}
