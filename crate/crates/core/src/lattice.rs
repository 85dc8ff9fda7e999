//! The lattice of reduction operators.
//!
//! Operators are ordered by reverse kernel inclusion. Meets are computed by
//! one elimination over the union of all kernel bases; joins by kernel
//! intersection using a Zassenhaus-style echelon over the doubled coordinate
//! space. Obstructions of a family are the generators fixed by every member
//! but moved by the meet; a family is confluent when there are none.

use std::collections::BTreeSet;

use crate::basis::{reduce_basis, ReducedBasis};
use crate::error::{Error, Result};
use crate::operator::ReductionOperator;
use crate::vector::Vector;

/// A nonempty finite family of reduction operators over a common ambient set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorFamily {
    dim: usize,
    members: Vec<ReductionOperator>,
}

impl OperatorFamily {
    pub fn new(members: Vec<ReductionOperator>) -> Result<Self> {
        let dim = members.first().ok_or(Error::EmptyFamily)?.dim();
        for member in &members {
            if member.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: member.dim(),
                });
            }
        }
        Ok(OperatorFamily { dim, members })
    }

    pub fn pair(left: ReductionOperator, right: ReductionOperator) -> Result<Self> {
        OperatorFamily::new(vec![left, right])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn members(&self) -> &[ReductionOperator] {
        &self.members
    }

    pub fn member(&self, index: usize) -> &ReductionOperator {
        &self.members[index]
    }

    /// The family extended by one more operator.
    pub fn with_member(&self, op: ReductionOperator) -> Result<Self> {
        let mut members = self.members.clone();
        members.push(op);
        OperatorFamily::new(members)
    }
}

fn check_same_dim(t1: &ReductionOperator, t2: &ReductionOperator) -> Result<()> {
    if t1.dim() != t2.dim() {
        return Err(Error::DimensionMismatch {
            left: t1.dim(),
            right: t2.dim(),
        });
    }
    Ok(())
}

/// Order test `t1 <= t2`, i.e. the kernel of `t2` is contained in the kernel
/// of `t1`. The equivalent composition criterion `t1 * t2 = t1` is evaluated
/// as well; the two must agree.
pub fn leq(t1: &ReductionOperator, t2: &ReductionOperator) -> Result<bool> {
    check_same_dim(t1, t2)?;
    let basis1 = t1.kernel_basis();
    let mut contained = true;
    for e in t2.kernel_basis().vectors() {
        if !basis1.contains(e)? {
            contained = false;
            break;
        }
    }
    let mut composed = true;
    for g in 0..t1.dim() {
        if t1.apply(&t2.image_of(g))? != t1.image_of(g) {
            composed = false;
            break;
        }
    }
    assert_eq!(
        contained, composed,
        "kernel containment and composition criteria disagree"
    );
    Ok(contained)
}

/// Greatest lower bound of a family: the operator whose kernel is the sum of
/// all member kernels. A single elimination over the concatenated kernel
/// bases keeps the result independent of the member order.
pub fn meet(family: &OperatorFamily) -> ReductionOperator {
    let vectors: Vec<Vector> = family
        .members()
        .iter()
        .flat_map(|t| t.kernel_basis().vectors().cloned().collect::<Vec<_>>())
        .collect();
    let basis = reduce_basis(family.dim(), vectors).expect("members share the ambient");
    ReductionOperator::with_kernel(&basis)
}

/// Meet of two operators.
pub fn meet_pair(t1: &ReductionOperator, t2: &ReductionOperator) -> Result<ReductionOperator> {
    Ok(meet(&OperatorFamily::pair(t1.clone(), t2.clone())?))
}

/// Reduced basis of the intersection of the two kernels.
///
/// Zassenhaus construction: each basis vector `u` of the first kernel embeds
/// as `(u | u)` over a doubled coordinate space with the first copy in the
/// high block, each basis vector `w` of the second as `(w | 0)`. In the
/// reduced basis of the span, the elements supported entirely on the low
/// block are exactly a basis of the intersection.
pub fn kernel_intersection(
    t1: &ReductionOperator,
    t2: &ReductionOperator,
) -> Result<ReducedBasis> {
    check_same_dim(t1, t2)?;
    let n = t1.dim();
    let mut stacked: Vec<Vector> = Vec::new();
    for u in t1.kernel_basis().vectors() {
        let doubled = Vector::from_terms(
            2 * n,
            u.iter()
                .flat_map(|(g, c)| [(g + n, c.clone()), (g, c.clone())]),
        )?;
        stacked.push(doubled);
    }
    for w in t2.kernel_basis().vectors() {
        let high = Vector::from_terms(2 * n, w.iter().map(|(g, c)| (g + n, c.clone())))?;
        stacked.push(high);
    }
    let echelon = reduce_basis(2 * n, stacked)?;
    let mut low_rows = Vec::new();
    for (lead, e) in echelon.iter() {
        if lead < n {
            low_rows.push(Vector::from_terms(n, e.iter().map(|(g, c)| (g, c.clone())))?);
        }
    }
    reduce_basis(n, low_rows)
}

/// Least upper bound of two operators: the operator whose kernel is the
/// intersection of the two kernels.
pub fn join(t1: &ReductionOperator, t2: &ReductionOperator) -> Result<ReductionOperator> {
    Ok(ReductionOperator::with_kernel(&kernel_intersection(
        t1, t2,
    )?))
}

/// Generators fixed by every member of the family.
pub fn red_set(family: &OperatorFamily) -> BTreeSet<usize> {
    let mut moved = BTreeSet::new();
    for member in family.members() {
        moved.extend(member.nred());
    }
    (0..family.dim()).filter(|g| !moved.contains(g)).collect()
}

/// Generators fixed by every member but moved by the meet.
pub fn obstructions(family: &OperatorFamily) -> BTreeSet<usize> {
    let meet_red = meet(family).red();
    red_set(family)
        .into_iter()
        .filter(|g| !meet_red.contains(g))
        .collect()
}

/// A family is confluent when it has no obstruction.
pub fn is_confluent(family: &OperatorFamily) -> bool {
    obstructions(family).is_empty()
}
