//! The split mod-2 Chow K-ring of a maximal unitary grassmannian.
//!
//! For a hermitian form `h` of dimension `2n+2` (resp. `2n+1`) the ring is an
//! exterior-type algebra over F2 on odd generators `e_1, e_3, …, e_{2n+1}`
//! (resp. `e_3, …, e_{2n+1}`): monomials `e_I` indexed by subsets `I` form a
//! basis, `e_k² = 0`, and `e_I · e_J = e_{I∪J}` when `I` and `J` are disjoint.
//!
//! Monomials are bitmasks where the odd index `k` sits at bit `(k-1)/2`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Largest supported `dim(h)`: the top generator `2n+1` must fit in a `u64` mask.
pub const MAX_DIM_H: u32 = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// A subset of odd generator indices, read as the basis monomial `e_I`.
///
/// The empty set is the unit `1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub const fn from_bits(bits: u64) -> Self {
        Monomial(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds `e_I` from a list of odd indices; duplicates and even or
    /// out-of-range indices are rejected.
    pub fn from_indices<I: IntoIterator<Item = u32>>(indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for k in indices {
            let bit = Self::bit_of(k)?;
            if bits & bit != 0 {
                return Err(Error::InvalidIndex {
                    index: k as i64,
                    reason: "repeated index in monomial".into(),
                });
            }
            bits |= bit;
        }
        Ok(Monomial(bits))
    }

    pub fn single(k: u32) -> Result<Self> {
        Ok(Monomial(Self::bit_of(k)?))
    }

    fn bit_of(k: u32) -> Result<u64> {
        if k.is_multiple_of(2) {
            return Err(Error::InvalidIndex {
                index: k as i64,
                reason: "generator indices are odd".into(),
            });
        }
        let pos = (k - 1) / 2;
        if pos >= 64 {
            return Err(Error::InvalidIndex {
                index: k as i64,
                reason: format!("exceeds the largest supported generator {}", 2 * 63 + 1),
            });
        }
        Ok(1u64 << pos)
    }

    pub fn contains(self, k: u32) -> bool {
        k % 2 == 1 && (k - 1) / 2 < 64 && self.0 & (1u64 << ((k - 1) / 2)) != 0
    }

    /// Indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros();
            rest &= rest - 1;
            Some(2 * b + 1)
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.indices().collect()
    }

    /// `||I||`, the sum of the indices; this is the codimension of `e_I`.
    pub fn codim(self) -> u32 {
        self.indices().sum()
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    pub fn intersection(self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    pub fn difference(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    /// All subsets of `self`, starting from the full set and ending with `∅`.
    pub fn subsets(self) -> impl Iterator<Item = Monomial> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(Monomial(cur))
        })
    }
}

/// Codimension first, then lexicographic order on the sorted index lists.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.codim()
            .cmp(&other.codim())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        f.write_str("e[")?;
        for (i, k) in self.indices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ambient data for `dim(h)`: parity, `n`, the generator set and `dim(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorContext {
    dim_h: u32,
    n: u32,
    parity: Parity,
    generators: Monomial,
    dim_x: u32,
}

/// Generator data for a hermitian form of dimension `dim_h`.
pub fn generator_set(dim_h: i64) -> Result<GeneratorContext> {
    GeneratorContext::new(dim_h)
}

impl GeneratorContext {
    pub fn new(dim_h: i64) -> Result<Self> {
        if dim_h < 1 {
            return Err(Error::InvalidDimension {
                dim: dim_h,
                reason: "dim(h) must be at least 1".into(),
            });
        }
        if dim_h > MAX_DIM_H as i64 {
            return Err(Error::InvalidDimension {
                dim: dim_h,
                reason: format!("dim(h) above {MAX_DIM_H} is not supported"),
            });
        }
        let dim_h = dim_h as u32;
        let (parity, n, first) = if dim_h.is_multiple_of(2) {
            (Parity::Even, (dim_h - 2) / 2, 1)
        } else {
            (Parity::Odd, (dim_h - 1) / 2, 3)
        };
        let generators = Monomial::from_indices((first..=2 * n + 1).step_by(2))?;
        let dim_x = match parity {
            Parity::Even => (n + 1) * (n + 1),
            Parity::Odd => n * (n + 2),
        };
        debug_assert_eq!(dim_x, generators.codim());
        Ok(GeneratorContext {
            dim_h,
            n,
            parity,
            generators,
            dim_x,
        })
    }

    pub fn dim_h(&self) -> u32 {
        self.dim_h
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// The full generator set as a monomial; `e_{generators}` is the point class.
    pub fn generators(&self) -> Monomial {
        self.generators
    }

    pub fn generator_indices(&self) -> Vec<u32> {
        self.generators.to_vec()
    }

    pub fn dim_x(&self) -> u32 {
        self.dim_x
    }

    pub fn num_generators(&self) -> u32 {
        self.generators.len()
    }

    /// Rank of the algebra over F2.
    pub fn rank(&self) -> usize {
        1usize << self.num_generators()
    }

    /// `2n+1`, when it is a generator (every context except `dim(h) = 1`).
    pub fn top_generator(&self) -> Option<u32> {
        let k = 2 * self.n + 1;
        self.generators.contains(k).then_some(k)
    }

    pub fn is_subset(&self, m: Monomial) -> bool {
        m.is_subset(self.generators)
    }

    pub(crate) fn check_subset(&self, m: Monomial, what: &str) -> Result<()> {
        if let Some(k) = m.difference(self.generators).indices().next() {
            return Err(Error::InvalidIndex {
                index: k as i64,
                reason: format!(
                    "{what} must lie in the generator set of dim(h)={}",
                    self.dim_h
                ),
            });
        }
        Ok(())
    }

    pub(crate) fn check_same(&self, other: &GeneratorContext) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch {
                left: self.dim_h,
                right: other.dim_h,
            });
        }
        Ok(())
    }

    /// Complement inside the generator set.
    pub fn complement(&self, m: Monomial) -> Monomial {
        self.generators.difference(m)
    }

    fn bit_offset(&self) -> u32 {
        match self.parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// Position of a monomial in `0..rank()`; generator bits are contiguous.
    pub fn dense_index(&self, m: Monomial) -> usize {
        (m.bits() >> self.bit_offset()) as usize
    }

    pub fn from_dense_index(&self, i: usize) -> Monomial {
        Monomial::from_bits((i as u64) << self.bit_offset())
    }

    /// All `2^|generators|` monomials in canonical order.
    pub fn basis(&self) -> Vec<Monomial> {
        let mut all: Vec<Monomial> = self.generators.subsets().collect();
        all.sort();
        all
    }
}

/// The canonically ordered basis of the algebra for `ctx`.
pub fn basis(ctx: &GeneratorContext) -> Vec<Monomial> {
    ctx.basis()
}

/// `∏_{k ∈ generators} (1 + t^k)`.
pub fn poincare_polynomial(ctx: &GeneratorContext) -> Polynomial {
    ctx.generators.indices().fold(Polynomial::one(), |acc, k| {
        acc.mul(&Polynomial::binomial(k))
    })
}

/// An F2-linear combination of monomials in one context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    ctx: GeneratorContext,
    terms: BTreeSet<Monomial>,
}

impl ChowClass {
    pub fn zero(ctx: &GeneratorContext) -> Self {
        ChowClass {
            ctx: *ctx,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(ctx: &GeneratorContext) -> Self {
        Self::from_monomial_unchecked(ctx, Monomial::ONE)
    }

    pub fn monomial(ctx: &GeneratorContext, m: Monomial) -> Result<Self> {
        ctx.check_subset(m, "monomial")?;
        Ok(Self::from_monomial_unchecked(ctx, m))
    }

    pub(crate) fn from_monomial_unchecked(ctx: &GeneratorContext, m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        ChowClass { ctx: *ctx, terms }
    }

    /// Sums the given monomials mod 2; repeated monomials cancel in pairs.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(
        ctx: &GeneratorContext,
        monomials: I,
    ) -> Result<Self> {
        let mut out = Self::zero(ctx);
        for m in monomials {
            ctx.check_subset(m, "monomial")?;
            out.toggle(m);
        }
        Ok(out)
    }

    pub(crate) fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn context(&self) -> &GeneratorContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.terms.contains(&m)
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.ctx.check_same(&other.ctx)?;
        let terms = self
            .terms
            .symmetric_difference(&other.terms)
            .copied()
            .collect();
        Ok(ChowClass {
            ctx: self.ctx,
            terms,
        })
    }

    pub fn multiply(&self, other: &ChowClass) -> Result<ChowClass> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = ChowClass::zero(&self.ctx);
        for a in &self.terms {
            for b in &other.terms {
                if a.is_disjoint(*b) {
                    out.toggle(a.union(*b));
                }
            }
        }
        Ok(out)
    }

    /// Coefficient of the point class `e_{generators}`.
    pub fn degree(&self) -> bool {
        self.terms.contains(&self.ctx.generators)
    }

    /// The component of pure codimension `codim`.
    pub fn homogeneous_component(&self, codim: u32) -> ChowClass {
        ChowClass {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|m| m.codim() == codim)
                .collect(),
        }
    }

    /// `Some(c)` when every term has codimension `c`; the zero class has none.
    pub fn pure_codim(&self) -> Option<u32> {
        let mut codims = self.terms.iter().map(|m| m.codim());
        let first = codims.next()?;
        codims.all(|c| c == first).then_some(first)
    }

    /// Monomials as sorted index lists, in canonical order.
    pub fn to_index_lists(&self) -> Vec<Vec<u32>> {
        self.terms.iter().map(|m| m.to_vec()).collect()
    }

    pub fn from_index_lists(ctx: &GeneratorContext, lists: &[Vec<u32>]) -> Result<Self> {
        let monomials = lists
            .iter()
            .map(|l| Monomial::from_indices(l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_monomials(ctx, monomials)
    }

    /// Serializes as `[[1,3],[5]]`; `[]` is zero and `[[]]` is one.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_index_lists()).expect("index lists always serialize")
    }

    pub fn from_json(ctx: &GeneratorContext, text: &str) -> Result<Self> {
        let lists: Vec<Vec<u32>> = serde_json::from_str(text)?;
        Self::from_index_lists(ctx, &lists)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChowClass[dim(h)={}]({self})", self.ctx.dim_h)
    }
}

/// The class of `e_k` in the algebra.
///
/// `e_0` is the unit. Even indices, indices above `2n+1` and `e_1` for odd
/// `dim(h)` are all zero.
pub fn generator_class(k: i64, ctx: &GeneratorContext) -> Result<ChowClass> {
    if k < 0 {
        return Err(Error::InvalidIndex {
            index: k,
            reason: "generator index must be non-negative".into(),
        });
    }
    if k == 0 {
        return Ok(ChowClass::one(ctx));
    }
    if k % 2 == 0 || k > (2 * ctx.n() + 1) as i64 {
        return Ok(ChowClass::zero(ctx));
    }
    let m = Monomial::single(k as u32)?;
    if ctx.is_subset(m) {
        Ok(ChowClass::from_monomial_unchecked(ctx, m))
    } else {
        Ok(ChowClass::zero(ctx))
    }
}

pub fn multiply(a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
    a.multiply(b)
}

pub fn degree(x: &ChowClass) -> bool {
    x.degree()
}
