//! Sparse vectors with exact rational coefficients.
//!
//! A vector is a finitely supported map from generator indices to nonzero
//! scalars; a zero coefficient is never stored. Vectors remember the size of
//! their ambient generator set so that arithmetic across different sets is
//! rejected.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};

/// Sparse element of the free vector space over an ordered generator set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    dim: usize,
    terms: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector of a single generator.
    pub fn unit(dim: usize, generator: usize) -> Result<Self> {
        let mut v = Vector::zero(dim);
        v.add_term(generator, Scalar::from_integer(1.into()))?;
        Ok(v)
    }

    /// Builds a vector from `(generator, coefficient)` terms. Repeated
    /// generators are summed; zero results are dropped.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut v = Vector::zero(dim);
        for (g, c) in terms {
            v.add_term(g, c)?;
        }
        Ok(v)
    }

    fn add_term(&mut self, generator: usize, coeff: Scalar) -> Result<()> {
        if generator >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: generator,
                dim: self.dim,
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(generator).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&generator);
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a generator (zero when absent).
    pub fn coeff(&self, generator: usize) -> Scalar {
        self.terms.get(&generator).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn contains(&self, generator: usize) -> bool {
        self.terms.contains_key(&generator)
    }

    /// Terms in ascending generator order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(g, c)| (*g, c))
    }

    /// The support, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    /// Greatest element of the support. Errors on the zero vector.
    pub fn leading_generator(&self) -> Result<usize> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::ZeroVector)
    }

    /// Coefficient of the leading generator. Errors on the zero vector.
    pub fn leading_coefficient(&self) -> Result<Scalar> {
        self.terms
            .values()
            .next_back()
            .cloned()
            .ok_or(Error::ZeroVector)
    }

    fn check_dim(&self, other: &Vector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (g, c) in other.iter() {
            out.add_term(g, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (g, c) in other.iter() {
            out.add_term(g, -c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Scalar) -> Vector {
        if factor.is_zero() {
            return Vector::zero(self.dim);
        }
        Vector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (*g, c * factor))
                .collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            dim: self.dim,
            terms: self.terms.iter().map(|(g, c)| (*g, -c.clone())).collect(),
        }
    }

    /// In-place `self += factor * other`. Used by elimination loops.
    pub fn add_scaled(&mut self, other: &Vector, factor: &Scalar) -> Result<()> {
        self.check_dim(other)?;
        if factor.is_zero() {
            return Ok(());
        }
        for (g, c) in other.iter() {
            self.add_term(g, c * factor)?;
        }
        Ok(())
    }

    /// Support-only multiset comparison: `self <= other` when every generator
    /// of `support(self) \ support(other)` is exceeded by some generator of
    /// `support(other) \ support(self)`. The order is total on supports but
    /// only a preorder on vectors (coefficients are ignored).
    pub fn multiset_le(&self, other: &Vector) -> Result<bool> {
        self.check_dim(other)?;
        let only_self = self.support().filter(|g| !other.contains(*g)).max();
        let only_other = other.support().filter(|g| !self.contains(*g)).max();
        Ok(match (only_self, only_other) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a < b,
        })
    }

    /// Strict multiset descent: `self` below `other` with distinct supports.
    pub fn multiset_lt(&self, other: &Vector) -> Result<bool> {
        Ok(self.multiset_le(other)? && !other.multiset_le(self)?)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in self.iter() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*[{}]", format_scalar(c), g)?;
        }
        Ok(())
    }
}
