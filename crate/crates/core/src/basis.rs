//! Reduced bases of subspaces.
//!
//! Every subspace of the free vector space over a well-ordered set has a
//! unique basis whose elements are monic, have pairwise distinct leading
//! generators, and whose supports avoid every other element's leading
//! generator. `reduce_basis` computes it by ordered Gaussian elimination:
//! eliminate leading generators top-down, then back-substitute so that no
//! leading generator appears in any other support. The output depends only on
//! the span of the input, not on its order or redundancy.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::vector::Vector;

/// The unique reduced basis of a subspace, indexed by leading generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedBasis {
    dim: usize,
    entries: BTreeMap<usize, Vector>,
}

impl ReducedBasis {
    pub fn empty(dim: usize) -> Self {
        ReducedBasis {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the spanned subspace.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Leading generators, ascending.
    pub fn leading_generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn entry(&self, leading: usize) -> Option<&Vector> {
        self.entries.get(&leading)
    }

    /// Basis elements in ascending leading-generator order.
    pub fn vectors(&self) -> impl Iterator<Item = &Vector> {
        self.entries.values()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Vector)> {
        self.entries.iter().map(|(g, v)| (*g, v))
    }

    /// Fully reduces `v` against the basis: the remainder has no leading
    /// generator of the basis in its support, and `v - reduce(v)` lies in the
    /// span. The remainder is zero exactly when `v` is in the span.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let mut rest = v.clone();
        // Supports of basis elements avoid each other's leading generators,
        // so one descending pass clears everything.
        for (&g, e) in self.entries.iter().rev() {
            let c = rest.coeff(g);
            if !c.is_zero() {
                rest.add_scaled(e, &(-c))?;
            }
        }
        Ok(rest)
    }

    /// Span membership.
    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }
}

/// Computes the unique reduced basis of the span of `vectors`. Zero vectors
/// and linear redundancy are dropped; the empty input yields the empty basis.
pub fn reduce_basis<I>(dim: usize, vectors: I) -> Result<ReducedBasis>
where
    I: IntoIterator<Item = Vector>,
{
    let mut rows: BTreeMap<usize, Vector> = BTreeMap::new();
    for v in vectors {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: v.dim(),
            });
        }
        let mut v = v;
        // Forward elimination against existing pivots.
        while !v.is_zero() {
            let g = v.leading_generator()?;
            match rows.get(&g) {
                Some(pivot) => {
                    let c = v.leading_coefficient()?;
                    v.add_scaled(pivot, &(-c))?;
                }
                None => break,
            }
        }
        if v.is_zero() {
            continue;
        }
        let lc = v.leading_coefficient()?;
        let monic = v.scale(&lc.recip());
        rows.insert(monic.leading_generator()?, monic);
    }

    // Back-substitution, ascending leads: once a lead is processed it no
    // longer appears in any other row, so substituting a processed row never
    // re-introduces processed leads.
    let leads: Vec<usize> = rows.keys().copied().collect();
    for &g in &leads {
        let pivot = rows.get(&g).cloned().expect("pivot row exists");
        for &h in &leads {
            if h == g {
                continue;
            }
            let row = rows.get_mut(&h).expect("row exists");
            let c = row.coeff(g);
            if !c.is_zero() {
                row.add_scaled(&pivot, &(-c))?;
            }
        }
    }

    Ok(ReducedBasis { dim, entries: rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(dim: usize, terms: &[(usize, i64)]) -> Vector {
        Vector::from_terms(dim, terms.iter().map(|&(g, c)| (g, int(c)))).unwrap()
    }

    #[test]
    fn worked_four_generator_span() {
        // span{g2-g1, g4-g3, g4-g2} reduces to {g2-g1, g3-g1, g4-g1}
        let basis = reduce_basis(
            4,
            vec![
                v(4, &[(1, 1), (0, -1)]),
                v(4, &[(3, 1), (2, -1)]),
                v(4, &[(3, 1), (1, -1)]),
            ],
        )
        .unwrap();
        assert_eq!(basis.rank(), 3);
        assert_eq!(basis.entry(1).unwrap(), &v(4, &[(1, 1), (0, -1)]));
        assert_eq!(basis.entry(2).unwrap(), &v(4, &[(2, 1), (0, -1)]));
        assert_eq!(basis.entry(3).unwrap(), &v(4, &[(3, 1), (0, -1)]));
    }

    #[test]
    fn empty_input_empty_basis() {
        let basis = reduce_basis(4, Vec::new()).unwrap();
        assert!(basis.is_empty());
    }

    #[test]
    fn leading_coefficient_normalised() {
        let basis = reduce_basis(2, vec![v(2, &[(0, 2)])]).unwrap();
        assert_eq!(basis.entry(0).unwrap(), &v(2, &[(0, 1)]));
    }

    #[test]
    fn zero_vectors_and_duplicates_dropped() {
        let basis = reduce_basis(
            3,
            vec![
                Vector::zero(3),
                v(3, &[(1, 1), (0, -1)]),
                v(3, &[(1, 2), (0, -2)]),
                Vector::zero(3),
            ],
        )
        .unwrap();
        assert_eq!(basis.rank(), 1);
    }

    #[test]
    fn span_invariance_under_order_and_redundancy() {
        let gens = vec![
            v(4, &[(1, 1), (0, -1)]),
            v(4, &[(3, 1), (2, -1)]),
            v(4, &[(3, 1), (1, -1)]),
        ];
        let a = reduce_basis(4, gens.clone()).unwrap();
        let mut shuffled = gens.clone();
        shuffled.reverse();
        shuffled.push(gens[0].add(&gens[1]).unwrap());
        let b = reduce_basis(4, shuffled).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reduce_detects_membership() {
        let basis = reduce_basis(
            4,
            vec![v(4, &[(1, 1), (0, -1)]), v(4, &[(3, 1), (2, -1)])],
        )
        .unwrap();
        // g4 - g2 is not in span{g2-g1, g4-g3}
        let outside = v(4, &[(3, 1), (1, -1)]);
        assert!(!basis.contains(&outside).unwrap());
        // but g4 - g3 is
        assert!(basis.contains(&v(4, &[(3, 1), (2, -1)])).unwrap());
        // remainder support avoids all leading generators
        let rest = basis.reduce(&outside).unwrap();
        for g in basis.leading_generators() {
            assert!(!rest.contains(g));
        }
    }
}
