//! Shared test support: a brute-force abstract-rewriting engine used as
//! ground truth, and seeded random instance generators.
//!
//! The engine works directly on the step relation: `v` steps to `T(v)`
//! whenever a member `T` changes `v`. It never consults the lattice, the
//! obstruction test, or any other decision machinery under test; reachability
//! is enumerated exhaustively, which is finite because every step strictly
//! descends in the well-founded multiset order.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use redop::lattice::OperatorFamily;
use redop::scalar::int;
use redop::{reduce_basis, ReductionOperator, Vector};

/// Every vector reachable from `v` by the step relation, including `v`.
pub fn reach(members: &[ReductionOperator], v: &Vector) -> BTreeSet<Vector> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(current) = queue.pop_front() {
        for t in members {
            if t.moves(&current) {
                let next = t.apply(&current).expect("same ambient");
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// The normal forms reachable from `v`.
pub fn normal_forms(members: &[ReductionOperator], v: &Vector) -> BTreeSet<Vector> {
    reach(members, v)
        .into_iter()
        .filter(|u| members.iter().all(|t| !t.moves(u)))
        .collect()
}

pub fn joinable(members: &[ReductionOperator], a: &Vector, b: &Vector) -> bool {
    normal_forms(members, a)
        .intersection(&normal_forms(members, b))
        .next()
        .is_some()
}

fn generators(dim: usize) -> Vec<Vector> {
    (0..dim)
        .map(|g| Vector::unit(dim, g).expect("in range"))
        .collect()
}

/// Ground truth for unique normal forms: exhaustive search from every
/// generator.
pub fn unique_normal_forms_at_generators(members: &[ReductionOperator], dim: usize) -> bool {
    generators(dim)
        .iter()
        .all(|g| normal_forms(members, g).len() == 1)
}

/// Ground truth for local confluence: one-step peaks from every generator and
/// every sum of two generators must rejoin.
pub fn locally_confluent_by_search(members: &[ReductionOperator], dim: usize) -> bool {
    let mut starts = generators(dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            starts.push(
                Vector::unit(dim, i)
                    .unwrap()
                    .add(&Vector::unit(dim, j).unwrap())
                    .unwrap(),
            );
        }
    }
    for v in &starts {
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                let a = members[i].apply(v).expect("same ambient");
                let b = members[j].apply(v).expect("same ambient");
                if !joinable(members, &a, &b) {
                    return false;
                }
            }
        }
    }
    true
}

/// Ground truth for the Church-Rosser witness: every generator must reach its
/// image under the candidate lower bound.
pub fn church_rosser_by_search(
    members: &[ReductionOperator],
    lower: &ReductionOperator,
    dim: usize,
) -> bool {
    generators(dim).iter().all(|g| {
        let target = lower.apply(g).expect("same ambient");
        reach(members, g).contains(&target)
    })
}

/// Random sparse vector; may be zero.
pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    let support = rng.gen_range(1..=3.min(dim));
    let mut terms = Vec::with_capacity(support);
    for _ in 0..support {
        let coeff = loop {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        terms.push((rng.gen_range(0..dim), int(coeff)));
    }
    Vector::from_terms(dim, terms).expect("in range")
}

/// Random subspace of dimension at most `max_rank`, as its reduced basis.
pub fn random_subspace(
    rng: &mut ChaCha8Rng,
    dim: usize,
    max_rank: usize,
) -> redop::ReducedBasis {
    let rank = rng.gen_range(0..=max_rank);
    let vectors: Vec<Vector> = (0..rank).map(|_| random_vector(rng, dim)).collect();
    reduce_basis(dim, vectors).expect("same ambient")
}

/// Random reduction operator with kernel dimension at most `max_rank`.
pub fn random_operator(rng: &mut ChaCha8Rng, dim: usize, max_rank: usize) -> ReductionOperator {
    ReductionOperator::with_kernel(&random_subspace(rng, dim, max_rank))
}

/// Random family of `size` operators.
pub fn random_family(
    rng: &mut ChaCha8Rng,
    dim: usize,
    size: usize,
    max_rank: usize,
) -> OperatorFamily {
    OperatorFamily::new((0..size).map(|_| random_operator(rng, dim, max_rank)).collect())
        .expect("nonempty")
}
