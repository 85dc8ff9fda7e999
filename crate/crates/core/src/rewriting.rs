//! Rewriting with a family of reduction operators.
//!
//! A vector rewrites in one step when some member of the family changes it;
//! normal forms are the vectors supported on the generators fixed by every
//! member. Each step strictly decreases the support in the multiset order, so
//! every strategy terminates on a finite ambient set. Equivalence of two
//! vectors is a kernel-membership test against the meet of the family.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::lattice::{is_confluent, meet, OperatorFamily};
use crate::vector::Vector;

/// Deterministic choice of the next operator to apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// Lowest member index that changes the vector.
    FirstChanging,
    /// Explicit member priorities; indices not listed are tried afterwards in
    /// ascending order.
    Priority(Vec<usize>),
}

impl Strategy {
    fn order(&self, len: usize) -> Vec<usize> {
        match self {
            Strategy::FirstChanging => (0..len).collect(),
            Strategy::Priority(list) => {
                let mut order: Vec<usize> = list.iter().copied().filter(|i| *i < len).collect();
                for i in 0..len {
                    if !order.contains(&i) {
                        order.push(i);
                    }
                }
                order
            }
        }
    }
}

/// One rewrite run: the start vector and every `(member index, result)` step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteTrace {
    pub start: Vector,
    pub steps: Vec<(usize, Vector)>,
}

impl RewriteTrace {
    /// Final vector of the run.
    pub fn result(&self) -> &Vector {
        self.steps.last().map(|(_, v)| v).unwrap_or(&self.start)
    }
}

fn check_vector(family: &OperatorFamily, v: &Vector) -> Result<()> {
    if v.dim() != family.dim() {
        return Err(Error::DimensionMismatch {
            left: family.dim(),
            right: v.dim(),
        });
    }
    Ok(())
}

/// Whether `v` is a normal form for the family, i.e. fixed by every member.
pub fn is_normal_form(family: &OperatorFamily, v: &Vector) -> Result<bool> {
    check_vector(family, v)?;
    Ok(family.members().iter().all(|t| !t.moves(v)))
}

/// One step under the strategy; `None` when `v` is already a normal form.
pub fn rewrite_step(
    family: &OperatorFamily,
    v: &Vector,
    strategy: &Strategy,
) -> Result<Option<(usize, Vector)>> {
    check_vector(family, v)?;
    for i in strategy.order(family.len()) {
        let t = family.member(i);
        if t.moves(v) {
            let next = t.apply(v)?;
            debug_assert!(
                next.multiset_lt(v).expect("same ambient"),
                "rewrite step must strictly descend"
            );
            return Ok(Some((i, next)));
        }
    }
    Ok(None)
}

/// Rewrites to a normal form under the strategy, recording the trace.
pub fn normal_form(
    family: &OperatorFamily,
    v: &Vector,
    strategy: &Strategy,
) -> Result<RewriteTrace> {
    let mut trace = RewriteTrace {
        start: v.clone(),
        steps: Vec::new(),
    };
    let mut current = v.clone();
    while let Some((i, next)) = rewrite_step(family, &current, strategy)? {
        current = next.clone();
        trace.steps.push((i, next));
    }
    Ok(trace)
}

/// All distinct vectors reachable from `v`, including `v` itself.
pub fn reachable(family: &OperatorFamily, v: &Vector) -> Result<BTreeSet<Vector>> {
    check_vector(family, v)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(current) = queue.pop_front() {
        for t in family.members() {
            if t.moves(&current) {
                let next = t.apply(&current)?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// Exhaustive breadth-first search for every normal form reachable from `v`.
/// Finite because each step strictly descends in a well-founded order and the
/// branching is bounded by the family size.
pub fn all_normal_forms(family: &OperatorFamily, v: &Vector) -> Result<BTreeSet<Vector>> {
    let mut out = BTreeSet::new();
    for u in reachable(family, v)? {
        if is_normal_form(family, &u)? {
            out.insert(u);
        }
    }
    Ok(out)
}

/// Whether `v1` and `v2` are joined by a zigzag of rewrite steps, decided as
/// membership of `v1 - v2` in the kernel of the meet.
pub fn equivalent(family: &OperatorFamily, v1: &Vector, v2: &Vector) -> Result<bool> {
    check_vector(family, v1)?;
    check_vector(family, v2)?;
    let diff = v1.sub(v2)?;
    meet(family).kernel_basis().contains(&diff)
}

/// The smallest element of the equivalence class of `v`: the image of `v`
/// under the meet of the family.
pub fn class_minimum(family: &OperatorFamily, v: &Vector) -> Result<Vector> {
    check_vector(family, v)?;
    meet(family).apply(v)
}

fn generators(family: &OperatorFamily) -> Vec<Vector> {
    (0..family.dim())
        .map(|g| Vector::unit(family.dim(), g).expect("generator in range"))
        .collect()
}

fn joinable(family: &OperatorFamily, a: &Vector, b: &Vector) -> Result<bool> {
    let nfs_a = all_normal_forms(family, a)?;
    let nfs_b = all_normal_forms(family, b)?;
    Ok(nfs_a.intersection(&nfs_b).next().is_some())
}

/// Local confluence. Decided through the obstruction test; a direct witness
/// search (joining the one-step reducts of every generator and of every sum
/// of two generators) runs alongside and must agree.
pub fn is_locally_confluent(family: &OperatorFamily) -> Result<bool> {
    let verdict = is_confluent(family);
    let mut starts = generators(family);
    let units = generators(family);
    for i in 0..units.len() {
        for j in (i + 1)..units.len() {
            starts.push(units[i].add(&units[j])?);
        }
    }
    let mut searched = true;
    'outer: for v in &starts {
        for i in 0..family.len() {
            for j in (i + 1)..family.len() {
                let a = family.member(i).apply(v)?;
                let b = family.member(j).apply(v)?;
                if !joinable(family, &a, &b)? {
                    searched = false;
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(
        verdict, searched,
        "local-confluence witness search disagrees with the obstruction test"
    );
    Ok(verdict)
}

/// Church-Rosser property: every vector rewrites into its meet-image.
/// Decided through the obstruction test; a witness search over all
/// generators runs alongside and must agree.
pub fn has_church_rosser(family: &OperatorFamily) -> Result<bool> {
    let verdict = is_confluent(family);
    let lower = meet(family);
    let mut searched = true;
    for g in generators(family) {
        let target = lower.apply(&g)?;
        if !reachable(family, &g)?.contains(&target) {
            searched = false;
            break;
        }
    }
    assert_eq!(
        verdict, searched,
        "Church-Rosser witness search disagrees with the obstruction test"
    );
    Ok(verdict)
}
