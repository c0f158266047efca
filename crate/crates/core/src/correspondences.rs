//! Correspondences on `X̄ × X̄` in the split basis.
//!
//! A correspondence is stored fully expanded as a set of monomial pairs
//! `(A, B)` standing for `e_A × e_B`. It acts on classes by contracting
//! against the degree pairing, and composition contracts the middle factor:
//! `(C × D) ∘ (A × B) = deg(e_B · e_C) · (A × D)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{ChowClass, GeneratorContext, Monomial};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// `deg(e_a · e_b)`: one exactly when `a` and `b` are complementary.
pub fn degree_pairing(ctx: &GeneratorContext, a: Monomial, b: Monomial) -> bool {
    a.is_disjoint(b) && a.union(b) == ctx.generators()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Correspondence {
    ctx: GeneratorContext,
    terms: BTreeSet<(Monomial, Monomial)>,
}

impl Correspondence {
    pub fn zero(ctx: &GeneratorContext) -> Self {
        Correspondence {
            ctx: *ctx,
            terms: BTreeSet::new(),
        }
    }

    /// Sums `e_A × e_B` over the pairs mod 2.
    pub fn from_pairs<I: IntoIterator<Item = (Monomial, Monomial)>>(
        ctx: &GeneratorContext,
        pairs: I,
    ) -> Result<Self> {
        let mut out = Self::zero(ctx);
        for (a, b) in pairs {
            ctx.check_subset(a, "left factor")?;
            ctx.check_subset(b, "right factor")?;
            out.toggle(a, b);
        }
        Ok(out)
    }

    fn toggle(&mut self, a: Monomial, b: Monomial) {
        if !self.terms.remove(&(a, b)) {
            self.terms.insert((a, b));
        }
    }

    pub fn context(&self) -> &GeneratorContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, Monomial)> + '_ {
        self.terms.iter().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Correspondence) -> Result<Correspondence> {
        self.ctx.check_same(&other.ctx)?;
        Ok(Correspondence {
            ctx: self.ctx,
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .copied()
                .collect(),
        })
    }

    /// Ring product in `Ch(X̄ × X̄)`: `(a × b) · (c × d) = ac × bd`.
    pub fn product(&self, other: &Correspondence) -> Result<Correspondence> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = Correspondence::zero(&self.ctx);
        for &(a, b) in &self.terms {
            for &(c, d) in &other.terms {
                if a.is_disjoint(c) && b.is_disjoint(d) {
                    out.toggle(a.union(c), b.union(d));
                }
            }
        }
        Ok(out)
    }

    /// `Some(c)` when every term has total codimension `c`.
    pub fn pure_codim(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(a, b)| a.codim() + b.codim());
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }

    /// Matrix of `x ↦ c_*(x)` on the monomial basis, columns indexed by the
    /// input monomial and rows by the output, both via `dense_index`.
    pub fn action_matrix(&self) -> BitMatrix {
        let ctx = self.ctx;
        let mut m = BitMatrix::zeros(ctx.rank(), ctx.rank());
        for x in ctx.basis() {
            let col = ctx.dense_index(x);
            let image = pushforward(self, &ChowClass::from_monomial_unchecked(&ctx, x))
                .expect("same context");
            for y in image.terms() {
                m.set(ctx.dense_index(y), col, true);
            }
        }
        m
    }

    /// Coordinates in the `rank² `-dimensional space of monomial pairs.
    pub fn pair_coordinates(&self) -> impl Iterator<Item = usize> + '_ {
        let r = self.ctx.rank();
        self.terms
            .iter()
            .map(move |(a, b)| self.ctx.dense_index(*a) * r + self.ctx.dense_index(*b))
    }

    /// `[[A, B], …]` with each monomial a sorted index list.
    pub fn to_index_pairs(&self) -> Vec<[Vec<u32>; 2]> {
        self.terms
            .iter()
            .map(|(a, b)| [a.to_vec(), b.to_vec()])
            .collect()
    }

    pub fn from_index_pairs(ctx: &GeneratorContext, pairs: &[[Vec<u32>; 2]]) -> Result<Self> {
        let parsed = pairs
            .iter()
            .map(|[a, b]| {
                Ok((
                    Monomial::from_indices(a.iter().copied())?,
                    Monomial::from_indices(b.iter().copied())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(ctx, parsed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_index_pairs()).expect("index pairs always serialize")
    }

    pub fn from_json(ctx: &GeneratorContext, text: &str) -> Result<Self> {
        let pairs: Vec<[Vec<u32>; 2]> = serde_json::from_str(text)?;
        Self::from_index_pairs(ctx, &pairs)
    }
}

impl fmt::Display for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, b)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{a}×{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Correspondence[dim(h)={}]({self})", self.ctx.dim_h())
    }
}

pub fn external_product(a: &ChowClass, b: &ChowClass) -> Result<Correspondence> {
    a.context().check_same(b.context())?;
    let ctx = a.context();
    let mut out = Correspondence::zero(ctx);
    for x in a.terms() {
        for y in b.terms() {
            out.toggle(x, y);
        }
    }
    Ok(out)
}

pub fn transpose(c: &Correspondence) -> Correspondence {
    Correspondence {
        ctx: c.ctx,
        terms: c.terms.iter().map(|&(a, b)| (b, a)).collect(),
    }
}

/// `second ∘ first`: apply `first`, then `second`.
///
/// Inhomogeneous inputs are composed term by term with no degree filtering.
pub fn compose(second: &Correspondence, first: &Correspondence) -> Result<Correspondence> {
    second.ctx.check_same(&first.ctx)?;
    let ctx = first.ctx;
    let mut out = Correspondence::zero(&ctx);
    for &(a, b) in &first.terms {
        for &(c, d) in &second.terms {
            if degree_pairing(&ctx, b, c) {
                out.toggle(a, d);
            }
        }
    }
    Ok(out)
}

/// `c_*(x) = Σ_{(A,B) ∈ c} deg(x · e_A) · e_B`.
pub fn pushforward(c: &Correspondence, x: &ChowClass) -> Result<ChowClass> {
    c.ctx.check_same(x.context())?;
    let mut out = ChowClass::zero(&c.ctx);
    for &(a, b) in &c.terms {
        let weight = x.terms().filter(|&m| degree_pairing(&c.ctx, m, a)).count();
        if weight % 2 == 1 {
            out.toggle(b);
        }
    }
    Ok(out)
}

/// `c^*(x)`, the pushforward along the transpose.
pub fn pullback(c: &Correspondence, x: &ChowClass) -> Result<ChowClass> {
    pushforward(&transpose(c), x)
}

/// `x_I = ∏_{k ∈ I} (e_k × 1 + 1 × e_k)`.
pub fn x_cycle(indices: Monomial, ctx: &GeneratorContext) -> Result<Correspondence> {
    ctx.check_subset(indices, "x-cycle index set")?;
    let mut acc = Correspondence::from_pairs(ctx, [(Monomial::ONE, Monomial::ONE)])?;
    for k in indices.indices() {
        let ek = Monomial::single(k)?;
        let factor = Correspondence::from_pairs(ctx, [(ek, Monomial::ONE), (Monomial::ONE, ek)])?;
        acc = acc.product(&factor)?;
    }
    Ok(acc)
}

/// The diagonal class `Σ_I e_I × e_{complement(I)}`.
pub fn diagonal(ctx: &GeneratorContext) -> Correspondence {
    Correspondence {
        ctx: *ctx,
        terms: ctx
            .generators()
            .subsets()
            .map(|i| (i, ctx.complement(i)))
            .collect(),
    }
}

/// `θ_{S,L,L'} = x_S · (e_L × e_{J \ L'})`.
///
/// Requires `J ⊆ generators`, `S ⊆ J̄` and `L, L' ⊆ J`.
pub fn theta(
    s: Monomial,
    l: Monomial,
    l2: Monomial,
    j: Monomial,
    ctx: &GeneratorContext,
) -> Result<Correspondence> {
    if !ctx.is_subset(j) {
        return Err(Error::InvalidArgument(format!(
            "theta requires J ⊆ generators, got J={}",
            j
        )));
    }
    let j_bar = ctx.complement(j);
    if !s.is_subset(j_bar) {
        return Err(Error::InvalidArgument(format!(
            "theta requires S ⊆ complement of J, got S={s}, J={j}"
        )));
    }
    if !l.is_subset(j) {
        return Err(Error::InvalidArgument(format!(
            "theta requires L ⊆ J, got L={l}, J={j}"
        )));
    }
    if !l2.is_subset(j) {
        return Err(Error::InvalidArgument(format!(
            "theta requires L' ⊆ J, got L'={l2}, J={j}"
        )));
    }
    let base = Correspondence::from_pairs(ctx, [(l, j.difference(l2))])?;
    x_cycle(s, ctx)?.product(&base)
}

/// `θ_L = θ_{J̄, L, L}`.
pub fn theta_projector(l: Monomial, j: Monomial, ctx: &GeneratorContext) -> Result<Correspondence> {
    theta(ctx.complement(j), l, l, j, ctx)
}

/// `θ_{L,L'} = θ_{J̄, L, L'}`.
pub fn theta_between(
    l: Monomial,
    l2: Monomial,
    j: Monomial,
    ctx: &GeneratorContext,
) -> Result<Correspondence> {
    theta(ctx.complement(j), l, l2, j, ctx)
}

pub fn is_projector(c: &Correspondence) -> bool {
    compose(c, c).map(|cc| cc == *c).unwrap_or(false)
}

/// `{θ_L : L ⊆ J}`, ordered by `L` in canonical monomial order.
///
/// The family is checked to consist of pairwise orthogonal idempotents that
/// sum to the diagonal; a failure is reported as [`Error::Defect`].
pub fn projector_system(j: Monomial, ctx: &GeneratorContext) -> Result<Vec<Correspondence>> {
    ctx.check_subset(j, "J")?;
    let mut ls: Vec<Monomial> = j.subsets().collect();
    ls.sort();
    let system = ls
        .iter()
        .map(|&l| theta_projector(l, j, ctx))
        .collect::<Result<Vec<_>>>()?;

    let mut sum = Correspondence::zero(ctx);
    for (a, pa) in ls.iter().zip(&system) {
        for (b, pb) in ls.iter().zip(&system) {
            let c = compose(pb, pa)?;
            let expected = if a == b {
                pa
            } else {
                &Correspondence::zero(ctx)
            };
            if c != *expected {
                return Err(Error::Defect(format!(
                    "θ_{b}∘θ_{a} = {c} for J={j} at dim(h)={}",
                    ctx.dim_h()
                )));
            }
        }
        sum = sum.add(pa)?;
    }
    if sum != diagonal(ctx) {
        return Err(Error::Defect(format!(
            "Σθ_L ≠ Δ for J={j} at dim(h)={}",
            ctx.dim_h()
        )));
    }
    Ok(system)
}

/// F2-rank of a family of correspondences inside the space of monomial pairs.
pub fn family_rank(family: &[Correspondence]) -> usize {
    let Some(first) = family.first() else {
        return 0;
    };
    let r = first.ctx.rank();
    let mut m = BitMatrix::zeros(family.len(), r * r);
    for (row, c) in family.iter().enumerate() {
        for col in c.pair_coordinates() {
            m.set(row, col, true);
        }
    }
    m.rank()
}

/// `{θ_{S,L,L'} : S ⊆ J̄, L, L' ⊆ J}`, of size `2^{|J̄| + 2|J|}`.
///
/// Linear independence is checked; a rank deficit is an [`Error::Defect`].
pub fn rational_basis_x2(j: Monomial, ctx: &GeneratorContext) -> Result<Vec<Correspondence>> {
    ctx.check_subset(j, "J")?;
    let j_bar = ctx.complement(j);
    let mut family = Vec::new();
    for s in j_bar.subsets() {
        for l in j.subsets() {
            for l2 in j.subsets() {
                family.push(theta(s, l, l2, j, ctx)?);
            }
        }
    }
    let rank = family_rank(&family);
    if rank != family.len() {
        return Err(Error::Defect(format!(
            "θ family for J={j} at dim(h)={} has rank {rank} < {}",
            ctx.dim_h(),
            family.len()
        )));
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator_set;

    fn ctx(d: i64) -> GeneratorContext {
        generator_set(d).unwrap()
    }

    fn mono(ix: &[u32]) -> Monomial {
        Monomial::from_indices(ix.iter().copied()).unwrap()
    }

    fn corr(c: &GeneratorContext, pairs: &[(&[u32], &[u32])]) -> Correspondence {
        Correspondence::from_pairs(c, pairs.iter().map(|(a, b)| (mono(a), mono(b)))).unwrap()
    }

    fn class(c: &GeneratorContext, ms: &[&[u32]]) -> ChowClass {
        ChowClass::from_monomials(c, ms.iter().map(|m| mono(m))).unwrap()
    }

    #[test]
    fn external_products() {
        let c4 = ctx(4);
        let one = ChowClass::one(&c4);
        assert_eq!(
            external_product(&one, &one).unwrap(),
            corr(&c4, &[(&[], &[])])
        );
        let e1 = class(&c4, &[&[1]]);
        let e3 = class(&c4, &[&[3]]);
        assert_eq!(
            external_product(&e1, &e3).unwrap(),
            corr(&c4, &[(&[1], &[3])])
        );
        let s = class(&c4, &[&[1], &[3]]);
        assert_eq!(
            external_product(&s, &one).unwrap(),
            corr(&c4, &[(&[1], &[]), (&[3], &[])])
        );
        assert!(external_product(&e1, &ChowClass::one(&ctx(6))).is_err());
    }

    #[test]
    fn transposes() {
        let c4 = ctx(4);
        assert_eq!(
            transpose(&corr(&c4, &[(&[1], &[])])),
            corr(&c4, &[(&[], &[1])])
        );
        assert_eq!(transpose(&diagonal(&c4)), diagonal(&c4));
    }

    #[test]
    fn x_cycles() {
        let c4 = ctx(4);
        assert_eq!(
            x_cycle(Monomial::ONE, &c4).unwrap(),
            corr(&c4, &[(&[], &[])])
        );
        assert_eq!(
            x_cycle(mono(&[1]), &c4).unwrap(),
            corr(&c4, &[(&[1], &[]), (&[], &[1])])
        );
        assert_eq!(
            x_cycle(mono(&[1, 3]), &c4).unwrap(),
            corr(
                &c4,
                &[(&[1, 3], &[]), (&[1], &[3]), (&[3], &[1]), (&[], &[1, 3])]
            )
        );
        assert!(matches!(
            x_cycle(mono(&[5]), &c4),
            Err(Error::InvalidIndex { index: 5, .. })
        ));
    }

    #[test]
    fn diagonals() {
        assert_eq!(diagonal(&ctx(1)), corr(&ctx(1), &[(&[], &[])]));
        let c4 = ctx(4);
        assert_eq!(
            diagonal(&c4),
            corr(
                &c4,
                &[(&[], &[1, 3]), (&[1], &[3]), (&[3], &[1]), (&[1, 3], &[])]
            )
        );
        for d in 1..=9 {
            let c = ctx(d);
            assert_eq!(diagonal(&c), x_cycle(c.generators(), &c).unwrap());
        }
    }

    #[test]
    fn compositions() {
        let c4 = ctx(4);
        let x1 = x_cycle(mono(&[1]), &c4).unwrap();
        let x3 = x_cycle(mono(&[3]), &c4).unwrap();
        assert_eq!(compose(&x3, &x1).unwrap(), corr(&c4, &[(&[], &[])]));
        assert_eq!(compose(&diagonal(&c4), &x1).unwrap(), x1);
        assert_eq!(compose(&x1, &diagonal(&c4)).unwrap(), x1);
        assert!(compose(&x1, &diagonal(&ctx(6))).is_err());
    }

    #[test]
    fn actions() {
        let c4 = ctx(4);
        let x1 = x_cycle(mono(&[1]), &c4).unwrap();
        assert_eq!(
            pushforward(&x1, &class(&c4, &[&[1, 3]])).unwrap(),
            class(&c4, &[&[1]])
        );
        assert!(pushforward(&x1, &class(&c4, &[&[1]])).unwrap().is_zero());
        let x = class(&c4, &[&[1], &[3], &[]]);
        assert_eq!(pushforward(&diagonal(&c4), &x).unwrap(), x);
        assert_eq!(pullback(&diagonal(&c4), &x).unwrap(), x);

        let j = mono(&[1]);
        let theta_l = theta_projector(mono(&[1]), j, &c4).unwrap();
        assert_eq!(
            pullback(&theta_l, &class(&c4, &[&[1]])).unwrap(),
            class(&c4, &[&[1]])
        );
        assert!(pullback(&theta_l, &ChowClass::one(&c4)).unwrap().is_zero());
    }

    #[test]
    fn theta_expansions() {
        let c4 = ctx(4);
        let j = mono(&[1]);
        let t0 = theta_projector(Monomial::ONE, j, &c4).unwrap();
        assert_eq!(t0, corr(&c4, &[(&[3], &[1]), (&[], &[1, 3])]));
        assert_eq!(t0.to_json(), "[[[],[1,3]],[[3],[1]]]");
        assert_eq!(
            Correspondence::from_json(&c4, "[[[3],[1]],[[],[1,3]]]").unwrap(),
            t0
        );

        // split case: θ_L = e_L × e_{J \ L}
        let g = c4.generators();
        for l in g.subsets() {
            assert_eq!(
                theta_projector(l, g, &c4).unwrap(),
                Correspondence::from_pairs(&c4, [(l, g.difference(l))]).unwrap()
            );
        }
    }

    #[test]
    fn theta_preconditions() {
        let c6 = ctx(6);
        let j = mono(&[1, 3]);
        let err = theta(mono(&[1]), Monomial::ONE, Monomial::ONE, j, &c6).unwrap_err();
        assert!(err.to_string().contains("S ⊆ complement of J"), "{err}");
        let err = theta(Monomial::ONE, mono(&[5]), Monomial::ONE, j, &c6).unwrap_err();
        assert!(err.to_string().contains("L ⊆ J"), "{err}");
        let err = theta(Monomial::ONE, Monomial::ONE, mono(&[5]), j, &c6).unwrap_err();
        assert!(err.to_string().contains("L' ⊆ J"), "{err}");
        let err = theta(Monomial::ONE, Monomial::ONE, Monomial::ONE, mono(&[7]), &c6).unwrap_err();
        assert!(err.to_string().contains("J ⊆ generators"), "{err}");
    }

    #[test]
    fn projectors() {
        let c4 = ctx(4);
        assert!(is_projector(&diagonal(&c4)));
        assert!(!is_projector(&x_cycle(mono(&[1]), &c4).unwrap()));

        let sys = projector_system(Monomial::ONE, &c4).unwrap();
        assert_eq!(sys, vec![diagonal(&c4)]);

        let sys = projector_system(c4.generators(), &c4).unwrap();
        let expected: Vec<Correspondence> = [
            (&[][..], &[1, 3][..]),
            (&[1], &[3]),
            (&[3], &[1]),
            (&[1, 3], &[]),
        ]
        .iter()
        .map(|(a, b)| corr(&c4, &[(a, b)]))
        .collect();
        assert_eq!(sys, expected);
    }

    #[test]
    fn rational_basis_sizes() {
        let c4 = ctx(4);
        let b = rational_basis_x2(Monomial::ONE, &c4).unwrap();
        assert_eq!(b.len(), 4);
        let xs: BTreeSet<_> = c4
            .generators()
            .subsets()
            .map(|s| x_cycle(s, &c4).unwrap().to_json())
            .collect();
        let got: BTreeSet<_> = b.iter().map(Correspondence::to_json).collect();
        assert_eq!(got, xs);
        assert_eq!(rational_basis_x2(c4.generators(), &c4).unwrap().len(), 16);
    }

    #[test]
    fn action_matrix_of_diagonal_is_identity() {
        for d in [1, 4, 7] {
            let c = ctx(d);
            assert_eq!(diagonal(&c).action_matrix(), BitMatrix::identity(c.rank()));
        }
    }
}
