//! Motivic decomposition bookkeeping.
//!
//! `M(X) ≅ ⊕_{L ⊆ J} R(h)(||L||)` where, over a splitting field, `R(h)` is the
//! sum of Tate motives shifted by `||M||` for `M ⊆ J̄`. Only these split shift
//! profiles are represented.

use serde::Serialize;

use crate::algebra::{poincare_polynomial, GeneratorContext, Monomial};
use crate::jinvariant::JInvariant;
use crate::poly::Polynomial;

fn subset_sums(set: Monomial) -> Vec<u32> {
    let mut sums: Vec<u32> = set.subsets().map(Monomial::codim).collect();
    sums.sort_unstable();
    sums
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MotiveDecomposition {
    ctx: GeneratorContext,
    j: JInvariant,
    copy_shifts: Vec<u32>,
    tate_shifts: Vec<u32>,
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    copies: &'a [u32],
    tate: &'a [u32],
    poincare_check: bool,
}

impl MotiveDecomposition {
    pub fn context(&self) -> &GeneratorContext {
        &self.ctx
    }

    pub fn j(&self) -> &JInvariant {
        &self.j
    }

    /// Shifts `||L||` of the copies of `R(h)`, ascending with multiplicity.
    pub fn copy_shifts(&self) -> &[u32] {
        &self.copy_shifts
    }

    /// Tate shifts `||M||` of `R(h)` over a splitting field.
    pub fn tate_shifts(&self) -> &[u32] {
        &self.tate_shifts
    }

    pub fn copy_polynomial(&self) -> Polynomial {
        Polynomial::from_exponents(self.copy_shifts.iter().copied())
    }

    pub fn tate_polynomial(&self) -> Polynomial {
        Polynomial::from_exponents(self.tate_shifts.iter().copied())
    }

    /// Whether the shift generating functions multiply to the Poincaré polynomial.
    pub fn poincare_check(&self) -> bool {
        self.copy_polynomial().mul(&self.tate_polynomial()) == poincare_polynomial(&self.ctx)
    }

    /// `{"copies":[…],"tate":[…],"poincare_check":…}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DecompositionJson {
            copies: &self.copy_shifts,
            tate: &self.tate_shifts,
            poincare_check: self.poincare_check(),
        })
        .expect("plain data serializes")
    }
}

pub fn decompose(j: &JInvariant) -> MotiveDecomposition {
    MotiveDecomposition {
        ctx: *j.context(),
        j: *j,
        copy_shifts: subset_sums(j.set()),
        tate_shifts: subset_sums(j.complement()),
    }
}

/// The motive is indecomposable exactly when `J` is empty.
pub fn is_indecomposable(j: &JInvariant) -> bool {
    j.is_empty()
}

/// Sorted shifts of all copies of `R(h)`; every direct summand of the motive
/// has shifts forming a sub-multiset of this list.
pub fn summand_shift_set(j: &JInvariant) -> Vec<u32> {
    subset_sums(j.set())
}
