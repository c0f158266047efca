//! J-invariant bookkeeping: Witt-index lower bounds, hyperbolic extension,
//! split criterion, canonical 2-dimension and the comparison with the
//! J-invariant of the associated quadratic form.
//!
//! `J` is always supplied by the caller or derived as a certified lower bound;
//! nothing here computes the exact invariant of a concrete form.

use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;

use crate::algebra::{generator_set, GeneratorContext, Monomial, Parity};
use crate::error::{Error, Result};

/// A subset of the generator set: the indices `k` with `e_k` rational.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct JInvariant {
    ctx: GeneratorContext,
    set: Monomial,
}

impl JInvariant {
    pub fn new(ctx: &GeneratorContext, set: Monomial) -> Result<Self> {
        ctx.check_subset(set, "J")?;
        Ok(JInvariant { ctx: *ctx, set })
    }

    pub fn from_indices(ctx: &GeneratorContext, indices: &[u32]) -> Result<Self> {
        Self::new(ctx, Monomial::from_indices(indices.iter().copied())?)
    }

    pub fn empty(ctx: &GeneratorContext) -> Self {
        JInvariant {
            ctx: *ctx,
            set: Monomial::ONE,
        }
    }

    pub fn maximal(ctx: &GeneratorContext) -> Self {
        JInvariant {
            ctx: *ctx,
            set: ctx.generators(),
        }
    }

    pub fn context(&self) -> &GeneratorContext {
        &self.ctx
    }

    pub fn set(&self) -> Monomial {
        self.set
    }

    pub fn indices(&self) -> Vec<u32> {
        self.set.to_vec()
    }

    /// `J̄`, the complement in the generator set.
    pub fn complement(&self) -> Monomial {
        self.ctx.complement(self.set)
    }

    pub fn len(&self) -> u32 {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains_all(&self, other: &JInvariant) -> bool {
        other.set.is_subset(self.set)
    }
}

impl fmt::Display for JInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, k) in self.set.indices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("}")
    }
}

/// Checks `0 ≤ j_0 < j_1 < … < j_height = ⌊dim_h/2⌋`.
fn validate_witt(ctx: &GeneratorContext, witt: &[i64]) -> Result<Vec<u32>> {
    let top = (ctx.dim_h() / 2) as i64;
    let Some(&last) = witt.last() else {
        return Err(Error::InvalidWitt(
            "the list of Witt indices is empty".into(),
        ));
    };
    if witt[0] < 0 {
        return Err(Error::InvalidWitt(format!("j_0 = {} is negative", witt[0])));
    }
    if let Some(w) = witt.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidWitt(format!(
            "indices must be strictly increasing, found {} then {}",
            w[0], w[1]
        )));
    }
    if last != top {
        return Err(Error::InvalidWitt(format!(
            "last index must equal ⌊dim(h)/2⌋ = {top}, found {last}"
        )));
    }
    Ok(witt.iter().map(|&j| j as u32).collect())
}

/// The complement of `{2n+1-2j_i : i < height}` in the generator set, a lower
/// bound for `J(h)`.
pub fn witt_lower_bound(dim_h: i64, witt: &[i64]) -> Result<JInvariant> {
    let ctx = generator_set(dim_h)?;
    let witt = validate_witt(&ctx, witt)?;
    let top = 2 * ctx.n() + 1;
    let excluded = witt[..witt.len() - 1]
        .iter()
        .filter_map(|&j| top.checked_sub(2 * j))
        .filter_map(|k| Monomial::single(k).ok())
        .fold(Monomial::ONE, Monomial::union);
    JInvariant::new(&ctx, ctx.generators().difference(excluded))
}

/// `J(h' ⊥ jH) = J(h') ∪ {2n+1, 2n-1, …, 2n+1-2(j-1)}`, with `n` taken for
/// `dim h = dim h' + 2j`.
pub fn hyperbolic_extend(j_prime: &JInvariant, j: u32) -> Result<JInvariant> {
    let ctx = generator_set(j_prime.ctx.dim_h() as i64 + 2 * j as i64)?;
    let top = 2 * ctx.n() + 1;
    let added = Monomial::from_indices((0..j).map(|s| top - 2 * s))?;
    JInvariant::new(&ctx, j_prime.set.union(added))
}

/// `h` is split exactly when `J(h)` is the whole generator set.
pub fn is_split(j: &JInvariant) -> bool {
    j.set == j.ctx.generators()
}

/// `||J||`, the top codimension carrying a rational class.
pub fn max_rational_codim(j: &JInvariant) -> u32 {
    j.set.codim()
}

/// Canonical 2-dimension `dim(X) - ||J||`.
pub fn cdim2(j: &JInvariant) -> u32 {
    j.ctx.dim_x() - j.set.codim()
}

/// J-invariant of the associated quadratic form: `J ∪ {0, 2, …, 2n}` for even
/// `dim(h)`, the full interval `[1, 2n]` for odd `dim(h)`.
pub fn quadratic_j(j: &JInvariant) -> BTreeSet<u32> {
    let n = j.ctx.n();
    match j.ctx.parity() {
        Parity::Even => j.set.indices().chain((0..=n).map(|i| 2 * i)).collect(),
        Parity::Odd => (1..=2 * n).collect(),
    }
}

/// Bounds `J ⊆ J(h_{F(X_1)}) ⊆ J ∪ {2n+1}` over the function field of the
/// hermitian quadric.
pub fn x1_bounds(j: &JInvariant) -> (JInvariant, JInvariant) {
    let upper = match j.ctx.top_generator() {
        Some(k) => j.set.union(Monomial::single(k).expect("odd generator")),
        None => j.set,
    };
    (
        *j,
        JInvariant {
            ctx: j.ctx,
            set: upper,
        },
    )
}

/// Hermitian-form data: dimension, optional absolute Witt indices and an
/// optional declared J-invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianProfile {
    ctx: GeneratorContext,
    witt_indices: Option<Vec<u32>>,
    declared_j: Option<JInvariant>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileInput {
    dim: i64,
    #[serde(default)]
    witt: Option<Vec<i64>>,
    #[serde(default, rename = "J")]
    j: Option<Vec<u32>>,
}

impl HermitianProfile {
    pub fn new(dim_h: i64, witt: Option<&[i64]>, declared_j: Option<&[u32]>) -> Result<Self> {
        let ctx = generator_set(dim_h)?;
        let witt_indices = witt.map(|w| validate_witt(&ctx, w)).transpose()?;
        let declared_j = match declared_j {
            Some(ix) => {
                let m = Monomial::from_indices(ix.iter().copied())?;
                if !ctx.is_subset(m) {
                    return Err(Error::InvalidArgument(format!(
                        "declared J must be a subset of the generators {:?} of dim(h)={dim_h}",
                        ctx.generator_indices()
                    )));
                }
                Some(JInvariant::new(&ctx, m)?)
            }
            None => None,
        };
        if let (Some(w), Some(j)) = (witt, &declared_j) {
            let bound = witt_lower_bound(dim_h, w)?;
            if !j.contains_all(&bound) {
                return Err(Error::InvalidArgument(format!(
                    "declared J {j} must contain the Witt-index lower bound {bound}"
                )));
            }
        }
        Ok(HermitianProfile {
            ctx,
            witt_indices,
            declared_j,
        })
    }

    /// Reads `{"dim": 6, "witt": [0,1,2,3], "J": [5]}`; `witt` and `J` are optional.
    pub fn from_json(text: &str) -> Result<Self> {
        let input: ProfileInput = serde_json::from_str(text)?;
        Self::new(input.dim, input.witt.as_deref(), input.j.as_deref())
    }

    /// A generic form: Witt indices `0, 1, …, ⌊dim/2⌋` and empty J.
    pub fn generic(dim_h: i64) -> Result<Self> {
        let top = dim_h.max(0) / 2;
        let witt: Vec<i64> = (0..=top).collect();
        Self::new(dim_h, Some(&witt), Some(&[]))
    }

    pub fn context(&self) -> &GeneratorContext {
        &self.ctx
    }

    pub fn witt_indices(&self) -> Option<&[u32]> {
        self.witt_indices.as_deref()
    }

    pub fn declared_j(&self) -> Option<&JInvariant> {
        self.declared_j.as_ref()
    }

    pub fn height(&self) -> Option<usize> {
        self.witt_indices.as_ref().map(|w| w.len() - 1)
    }

    pub fn lower_bound(&self) -> Option<JInvariant> {
        let w: Vec<i64> = self
            .witt_indices
            .as_ref()?
            .iter()
            .map(|&j| j as i64)
            .collect();
        Some(witt_lower_bound(self.ctx.dim_h() as i64, &w).expect("validated on construction"))
    }

    /// The declared J if present, otherwise the Witt-index lower bound.
    pub fn best_known_j(&self) -> Option<JInvariant> {
        self.declared_j.or_else(|| self.lower_bound())
    }
}
