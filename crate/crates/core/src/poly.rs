//! Integer polynomials in one variable, used for Poincaré series and shift
//! generating functions.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    // coeffs[i] is the coefficient of t^i; no trailing zeros
    coeffs: Vec<u128>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![1] }
    }

    /// `1 + t^k`.
    pub fn binomial(k: u32) -> Self {
        let mut p = Self::from_exponents(std::iter::once(k));
        p.add_monomial(0);
        p
    }

    /// `Σ t^e` over the given exponents, with multiplicity.
    pub fn from_exponents<I: IntoIterator<Item = u32>>(exponents: I) -> Self {
        let mut p = Self::zero();
        for e in exponents {
            p.add_monomial(e);
        }
        p
    }

    fn add_monomial(&mut self, e: u32) {
        let e = e as usize;
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, 0);
        }
        self.coeffs[e] += 1;
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> u128 {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial { coeffs: out }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (e, *c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, c) => write!(f, "{c}t^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_products() {
        let p = Polynomial::binomial(1).mul(&Polynomial::binomial(3));
        assert_eq!(p.coeffs(), &[1, 1, 0, 1, 1]);
        assert_eq!(p.to_string(), "1 + t + t^3 + t^4");
        let sq = Polynomial::binomial(1).mul(&Polynomial::binomial(1));
        assert_eq!(sq.to_string(), "1 + 2t + t^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(
            Polynomial::from_exponents([0, 3, 3]).coeffs(),
            &[1, 0, 0, 2]
        );
    }
}
