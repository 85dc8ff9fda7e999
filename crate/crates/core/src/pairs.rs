//! Alternating products of a pair of reduction operators.
//!
//! For a pair `(T1, T2)`, the two alternating-composition limits agree on
//! every generator exactly when the pair is confluent, and then both equal
//! the meet. The dual limits built from `id - T1` and `id - T2` recover the
//! join of a confluent pair through an alternating-sum identity, which gives
//! a second, independent route to the least upper bound.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{is_confluent, OperatorFamily};
use crate::operator::ReductionOperator;
use crate::scalar::Scalar;
use crate::vector::Vector;

/// A plain linear endomorphism given by its generator images. Alternating
/// limits are linear maps but not reduction operators in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    images: Vec<Vector>,
}

impl LinearMap {
    pub fn new(images: Vec<Vector>) -> Self {
        LinearMap { images }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image_of(&self, generator: usize) -> &Vector {
        &self.images[generator]
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.images.len() {
            return Err(Error::DimensionMismatch {
                left: self.images.len(),
                right: v.dim(),
            });
        }
        let mut out = Vector::zero(self.images.len());
        for (g, c) in v.iter() {
            out.add_scaled(&self.images[g], c)?;
        }
        Ok(out)
    }
}

/// Both alternating limits of a pair, with the per-generator number of
/// factors at which they stabilise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedPair {
    /// Limit of the products whose rightmost factor is the left operator.
    pub left_first: LinearMap,
    /// Limit of the products whose rightmost factor is the right operator.
    pub right_first: LinearMap,
    /// Least number of factors making both chains normal forms, per generator.
    pub steps: Vec<usize>,
}

fn is_pair_normal_form(t1: &ReductionOperator, t2: &ReductionOperator, v: &Vector) -> bool {
    !t1.moves(v) && !t2.moves(v)
}

/// Computes both alternating limits per generator. Termination is guaranteed
/// by the multiset order; the step cap only guards against implementation
/// bugs and fails loudly when exceeded.
pub fn braided(t1: &ReductionOperator, t2: &ReductionOperator) -> Result<BraidedPair> {
    if t1.dim() != t2.dim() {
        return Err(Error::DimensionMismatch {
            left: t1.dim(),
            right: t2.dim(),
        });
    }
    let n = t1.dim();
    let cap = n * (n + 1) + 1;
    let mut left_first = Vec::with_capacity(n);
    let mut right_first = Vec::with_capacity(n);
    let mut steps = Vec::with_capacity(n);
    for g in 0..n {
        let unit = Vector::unit(n, g)?;
        let mut chain_left = unit.clone(); // rightmost factor t1
        let mut chain_right = unit; // rightmost factor t2
        let mut count = 0usize;
        while !(is_pair_normal_form(t1, t2, &chain_left)
            && is_pair_normal_form(t1, t2, &chain_right))
        {
            // factor index `count` applies t1 to the left chain when even
            let (next_left, next_right) = if count % 2 == 0 {
                (t1.apply(&chain_left)?, t2.apply(&chain_right)?)
            } else {
                (t2.apply(&chain_left)?, t1.apply(&chain_right)?)
            };
            chain_left = next_left;
            chain_right = next_right;
            count += 1;
            if count > cap {
                return Err(Error::StepCapExceeded { cap });
            }
        }
        left_first.push(chain_left);
        right_first.push(chain_right);
        steps.push(count);
    }
    Ok(BraidedPair {
        left_first: LinearMap::new(left_first),
        right_first: LinearMap::new(right_first),
        steps,
    })
}

impl BraidedPair {
    /// A pair is confluent exactly when its two limits agree on every
    /// generator.
    pub fn limits_agree(&self) -> bool {
        self.left_first == self.right_first
    }
}

/// Pair confluence through the alternating limits. The family-level
/// obstruction test must agree.
pub fn pair_confluent(t1: &ReductionOperator, t2: &ReductionOperator) -> Result<bool> {
    let braid = braided(t1, t2)?;
    let verdict = braid.limits_agree();
    let family_verdict = is_confluent(&OperatorFamily::pair(t1.clone(), t2.clone())?);
    assert_eq!(
        verdict, family_verdict,
        "alternating limits and obstruction test disagree on pair confluence"
    );
    Ok(verdict)
}

/// Evaluates the dual alternating chain on one generator through the
/// alternating-sum expansion: with `k` factors,
/// `id + sum_{i=1}^{k-1} (-1)^i (A_i + B_i) + (-1)^k A_k`
/// where `A_i`, `B_i` are the two plain chains with `i` factors. At least one
/// factor is needed even when the generator is already reduced.
fn dual_chain_value(
    t1: &ReductionOperator,
    t2: &ReductionOperator,
    g: usize,
    factors: usize,
) -> Result<Vector> {
    let n = t1.dim();
    let k = factors.max(1);
    let unit = Vector::unit(n, g)?;
    let mut acc = unit.clone();
    let mut chain_left = unit.clone(); // will hold the i-factor product ending in t1
    let mut chain_right = unit; // ending in t2
    let mut sign_positive = false; // sign of the i = 1 term is negative
    for i in 1..=k {
        let (next_left, next_right) = if (i - 1) % 2 == 0 {
            (t1.apply(&chain_left)?, t2.apply(&chain_right)?)
        } else {
            (t2.apply(&chain_left)?, t1.apply(&chain_right)?)
        };
        chain_left = next_left;
        chain_right = next_right;
        let sign = if sign_positive {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        if i < k {
            acc.add_scaled(&chain_left, &sign)?;
            acc.add_scaled(&chain_right, &sign)?;
        } else {
            acc.add_scaled(&chain_left, &sign)?;
        }
        sign_positive = !sign_positive;
    }
    Ok(acc)
}

/// Direct evaluation of the dual chain by composing `id - T1` and `id - T2`
/// alternately, `factors` times, starting with `id - T1`. Used to cross-check
/// the alternating-sum route.
pub fn dual_chain_by_composition(
    t1: &ReductionOperator,
    t2: &ReductionOperator,
    g: usize,
    factors: usize,
) -> Result<Vector> {
    let n = t1.dim();
    let mut value = Vector::unit(n, g)?;
    for i in 0..factors.max(1) {
        let t = if i % 2 == 0 { t1 } else { t2 };
        let image = t.apply(&value)?;
        value = value.sub(&image)?;
    }
    Ok(value)
}

/// Join of a confluent pair via the dual limits: the complement of the common
/// dual chain is itself a reduction operator and equals the lattice join. Its
/// non-reduced generators are exactly those moved by both members.
pub fn join_via_duality(
    t1: &ReductionOperator,
    t2: &ReductionOperator,
) -> Result<ReductionOperator> {
    let braid = braided(t1, t2)?;
    if !braid.limits_agree() {
        return Err(Error::PairNotConfluent);
    }
    let n = t1.dim();
    let mut images = BTreeMap::new();
    for g in 0..n {
        let dual = dual_chain_value(t1, t2, g, braid.steps[g])?;
        let image = Vector::unit(n, g)?.sub(&dual)?;
        if image != Vector::unit(n, g)? {
            images.insert(g, image);
        }
    }
    let join = ReductionOperator::from_images(n, images)?;
    debug_assert_eq!(
        join.nred(),
        t1.nred().intersection(&t2.nred()).copied().collect(),
        "join of a confluent pair must move exactly the common non-reduced generators"
    );
    Ok(join)
}
