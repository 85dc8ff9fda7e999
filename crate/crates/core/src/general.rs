//! Reduction operators relative to a partial order.
//!
//! Without a total order the kernel map is no longer onto: a sum of kernels
//! need not be the kernel of any reduction operator, so meets can fail to
//! exist in the required shape. A family is completable when some reduction
//! operator has exactly the summed kernel; the search enumerates candidate
//! complements of the kernel inside the generator basis, which is exhaustive
//! because a valid operator projects onto the span of its fixed generators.
//!
//! For completable families the rewriting notions (confluence, Church-Rosser,
//! normalisation, confluence of the step relation) are evaluated by finite
//! search and their equivalence is asserted.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Zero};

use crate::basis::reduce_basis;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Largest generator count accepted by the completability search.
pub const COMPLETABILITY_BOUND: usize = 16;

/// Note attached to every completability/confluence report.
pub const IMAGE_ASSUMPTION_NOTE: &str =
    "completability search assumes operator images spanned by fixed generators; \
     this holds for every idempotent order-decreasing operator";

/// A strict partial order on `n` generators, stored transitively closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrder {
    n: usize,
    lt: Vec<Vec<bool>>,
}

impl PartialOrder {
    /// Builds the order from cover pairs `(smaller, greater)`, closing
    /// transitively and rejecting cycles.
    pub fn from_cover_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut lt = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, dim: n });
                }
            }
            lt[a][b] = true;
        }
        let lt = transitive_closure(lt);
        for (g, row) in lt.iter().enumerate() {
            if row[g] {
                return Err(Error::OrderCycle(g));
            }
        }
        Ok(PartialOrder { n, lt })
    }

    /// The total order `g0 < g1 < ... < g(n-1)`.
    pub fn total(n: usize) -> Self {
        let mut lt = vec![vec![false; n]; n];
        for (a, row) in lt.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = a < b;
            }
        }
        PartialOrder { n, lt }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Strictly below.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a][b]
    }

    /// All strict pairs `(smaller, greater)`, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn transitive_closure(mut lt: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let n = lt.len();
    for k in 0..n {
        for i in 0..n {
            if lt[i][k] {
                for j in 0..n {
                    if lt[k][j] {
                        lt[i][j] = true;
                    }
                }
            }
        }
    }
    lt
}

/// An arbitrary idempotent linear endomorphism, given by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projector {
    images: Vec<Vector>,
}

impl Projector {
    pub fn new(images: Vec<Vector>) -> Result<Self> {
        let n = images.len();
        for image in &images {
            if image.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: image.dim(),
                });
            }
        }
        let p = Projector { images };
        for g in 0..n {
            if p.apply(&p.images[g])? != p.images[g] {
                return Err(Error::NotIdempotent(g));
            }
        }
        Ok(p)
    }

    /// Column convention: column `j` holds the image of generator `j`.
    pub fn from_matrix(matrix: &[Vec<Scalar>]) -> Result<Self> {
        let n = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedMatrix {
                    row: i + 1,
                    got: row.len(),
                    expected: n,
                });
            }
        }
        let images = (0..n)
            .map(|j| Vector::from_terms(n, (0..n).map(|i| (i, matrix[i][j].clone()))))
            .collect::<Result<Vec<_>>>()?;
        Projector::new(images)
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image_of(&self, g: usize) -> &Vector {
        &self.images[g]
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        let n = self.images.len();
        if v.dim() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: v.dim(),
            });
        }
        let mut out = Vector::zero(n);
        for (g, c) in v.iter() {
            out.add_scaled(&self.images[g], c)?;
        }
        Ok(out)
    }
}

/// Validation of the generalized definition: idempotent, and every moved
/// generator maps to a combination of strictly smaller generators (possibly
/// empty).
pub fn is_general_reduction_operator(p: &Projector, order: &PartialOrder) -> bool {
    if p.dim() != order.len() {
        return false;
    }
    for g in 0..p.dim() {
        let image = p.image_of(g);
        if image == &Vector::unit(p.dim(), g).expect("generator in range") {
            continue;
        }
        if image.support().any(|h| !order.lt(h, g)) {
            return false;
        }
    }
    true
}

/// A reduction operator relative to a partial order, stored by its action on
/// moved generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralOperator {
    n: usize,
    images: BTreeMap<usize, Vector>,
}

impl GeneralOperator {
    pub fn identity(n: usize) -> Self {
        GeneralOperator {
            n,
            images: BTreeMap::new(),
        }
    }

    /// Builds and validates against the order: each stored image must be
    /// supported strictly below its generator, and the operator must be
    /// idempotent.
    pub fn from_images(order: &PartialOrder, images: BTreeMap<usize, Vector>) -> Result<Self> {
        let n = order.len();
        for (&g, image) in &images {
            if g >= n {
                return Err(Error::IndexOutOfRange { index: g, dim: n });
            }
            if image.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: image.dim(),
                });
            }
            for h in image.support() {
                if !order.lt(h, g) {
                    return Err(Error::ImageNotSmaller {
                        generator: g,
                        offending: h,
                    });
                }
            }
        }
        let op = GeneralOperator { n, images };
        for (&g, image) in &op.images {
            if op.apply(image)? != *image {
                return Err(Error::NotIdempotent(g));
            }
        }
        Ok(op)
    }

    pub fn from_projector(order: &PartialOrder, p: &Projector) -> Result<Self> {
        let n = p.dim();
        let mut images = BTreeMap::new();
        for g in 0..n {
            let image = p.image_of(g);
            if image != &Vector::unit(n, g)? {
                images.insert(g, image.clone());
            }
        }
        GeneralOperator::from_images(order, images)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nred(&self) -> BTreeSet<usize> {
        self.images.keys().copied().collect()
    }

    pub fn red(&self) -> BTreeSet<usize> {
        (0..self.n).filter(|g| !self.images.contains_key(g)).collect()
    }

    pub fn image_of(&self, g: usize) -> Vector {
        match self.images.get(&g) {
            Some(image) => image.clone(),
            None => Vector::unit(self.n, g).expect("generator in range"),
        }
    }

    pub fn moves(&self, v: &Vector) -> bool {
        v.support().any(|g| self.images.contains_key(&g))
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: v.dim(),
            });
        }
        let mut out = Vector::zero(self.n);
        for (g, c) in v.iter() {
            match self.images.get(&g) {
                Some(image) => out.add_scaled(image, c)?,
                None => out.add_scaled(&Vector::unit(self.n, g)?, c)?,
            }
        }
        Ok(out)
    }

    /// The kernel vectors `g - T(g)` over the moved generators; they are
    /// linearly independent.
    pub fn kernel_vectors(&self) -> Vec<Vector> {
        self.images
            .iter()
            .map(|(&g, image)| {
                Vector::unit(self.n, g)
                    .expect("generator in range")
                    .sub(image)
                    .expect("same ambient")
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Vec<Vec<Scalar>> {
        let n = self.n;
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for j in 0..n {
            match self.images.get(&j) {
                None => m[j][j] = Scalar::one(),
                Some(image) => {
                    for (i, c) in image.iter() {
                        m[i][j] = c.clone();
                    }
                }
            }
        }
        m
    }
}

/// Builds the smallest order making every projector order-decreasing:
/// `g' < g` whenever some member moves `g` and `g'` occurs in its image.
/// Returns `None` when the transitive closure has a cycle.
pub fn order_from_projectors(projectors: &[Projector]) -> Option<PartialOrder> {
    let n = projectors.first().map(|p| p.dim()).unwrap_or(0);
    let mut lt = vec![vec![false; n]; n];
    for p in projectors {
        if p.dim() != n {
            return None;
        }
        for g in 0..n {
            let image = p.image_of(g);
            if image == &Vector::unit(n, g).expect("generator in range") {
                continue;
            }
            for h in image.support() {
                lt[h][g] = true;
            }
        }
    }
    let lt = transitive_closure(lt);
    if (0..n).any(|g| lt[g][g]) {
        return None;
    }
    let order = PartialOrder { n, lt };
    debug_assert!(projectors
        .iter()
        .all(|p| is_general_reduction_operator(p, &order)));
    Some(order)
}

/// Solves `sum_i x_i * columns[i] = target` exactly; `None` when unsolvable.
fn solve(columns: &[Vector], target: &Vector, n: usize) -> Option<Vec<Scalar>> {
    let m = columns.len();
    // dense augmented matrix, rows are coordinates
    let mut a = vec![vec![Scalar::zero(); m + 1]; n];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col.iter() {
            a[i][j] = c.clone();
        }
    }
    for (i, c) in target.iter() {
        a[i][m] = c.clone();
    }
    let mut pivot_of_col = vec![usize::MAX; m];
    let mut row = 0;
    for col in 0..m {
        let pivot = (row..n).find(|&r| !a[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        a.swap(row, pivot);
        let inv = a[row][col].clone().recip();
        for j in col..=m {
            a[row][j] = &a[row][j] * &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..=m {
                    let delta = &factor * &a[row][j];
                    a[r][j] -= delta;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
    }
    // inconsistent when a zero row has a nonzero augmented entry
    for r in row..n {
        if !a[r][m].is_zero() {
            return None;
        }
    }
    let mut x = vec![Scalar::zero(); m];
    for col in 0..m {
        if pivot_of_col[col] != usize::MAX {
            x[col] = a[pivot_of_col[col]][m].clone();
        }
    }
    // verify, since free columns were set to zero
    let mut check = Vector::zero(n);
    for (j, col) in columns.iter().enumerate() {
        check.add_scaled(col, &x[j]).ok()?;
    }
    if &check == target {
        Some(x)
    } else {
        None
    }
}

fn summed_kernel_basis(family: &[GeneralOperator], n: usize) -> Result<crate::basis::ReducedBasis> {
    let vectors: Vec<Vector> = family.iter().flat_map(|t| t.kernel_vectors()).collect();
    // echelon by generator index, used purely as linear algebra
    reduce_basis(n, vectors)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn walk(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for g in start..=n.saturating_sub(remaining) {
            current.push(g);
            walk(g + 1, n, k, current, out);
            current.pop();
        }
    }
    walk(0, n, k, &mut current, &mut out);
    out
}

/// Searches for the reduction operator whose kernel is the sum of the member
/// kernels. Candidate fixed sets are enumerated in ascending lexicographic
/// order, so the reported witness is canonical; at most one candidate can
/// succeed because operators with equal kernels are equal.
pub fn is_completable(
    family: &[GeneralOperator],
    order: &PartialOrder,
) -> Result<Option<GeneralOperator>> {
    let n = order.len();
    if n > COMPLETABILITY_BOUND {
        return Err(Error::TooLarge {
            got: n,
            bound: COMPLETABILITY_BOUND,
        });
    }
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for member in family {
        if member.dim() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: member.dim(),
            });
        }
    }
    let kernel = summed_kernel_basis(family, n)?;
    let rank = kernel.rank();
    let k = n - rank;
    let kernel_vectors: Vec<Vector> = kernel.vectors().cloned().collect();
    'candidates: for fixed in subsets_of_size(n, k) {
        // direct-sum test: the kernel together with the candidate units must
        // span the whole space
        let mut stacked = kernel_vectors.clone();
        for &b in &fixed {
            stacked.push(Vector::unit(n, b)?);
        }
        if reduce_basis(n, stacked)?.rank() != n {
            continue;
        }
        let mut columns = kernel_vectors.clone();
        for &b in &fixed {
            columns.push(Vector::unit(n, b)?);
        }
        let mut images = BTreeMap::new();
        let fixed_set: BTreeSet<usize> = fixed.iter().copied().collect();
        for g in 0..n {
            if fixed_set.contains(&g) {
                continue;
            }
            let coords = solve(&columns, &Vector::unit(n, g)?, n)
                .expect("direct sum guarantees a solution");
            let mut image = Vector::zero(n);
            for (offset, &b) in fixed.iter().enumerate() {
                image.add_scaled(&Vector::unit(n, b)?, &coords[kernel_vectors.len() + offset])?;
            }
            if image.support().any(|h| !order.lt(h, g)) {
                continue 'candidates;
            }
            images.insert(g, image);
        }
        let op = GeneralOperator::from_images(order, images)?;
        debug_assert_eq!(summed_kernel_basis(std::slice::from_ref(&op), n)?, kernel);
        return Ok(Some(op));
    }
    Ok(None)
}

/// Verdicts of the finite rewriting search for a completable family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralConfluenceReport {
    pub confluent: bool,
    pub church_rosser: bool,
    pub normalising: bool,
    pub relation_confluent: bool,
    /// Recorded modelling assumption of the completability search.
    pub assumption: &'static str,
}

fn reach(family: &[GeneralOperator], start: &Vector) -> Result<BTreeSet<Vector>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    // termination is guaranteed by the well-founded order; the cap guards bugs
    let cap = 1_000_000usize;
    while let Some(current) = queue.pop_front() {
        for t in family {
            if t.moves(&current) {
                let next = t.apply(&current)?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::StepCapExceeded { cap });
        }
    }
    Ok(seen)
}

fn normal_forms_in(family: &[GeneralOperator], reachable: &BTreeSet<Vector>) -> BTreeSet<Vector> {
    reachable
        .iter()
        .filter(|v| family.iter().all(|t| !t.moves(v)))
        .cloned()
        .collect()
}

fn family_red(family: &[GeneralOperator], n: usize) -> BTreeSet<usize> {
    let mut moved = BTreeSet::new();
    for t in family {
        moved.extend(t.nred());
    }
    (0..n).filter(|g| !moved.contains(g)).collect()
}

/// Obstructions of a completable family, relative to the found meet.
pub fn general_obstructions(
    family: &[GeneralOperator],
    meet: &GeneralOperator,
    n: usize,
) -> BTreeSet<usize> {
    let meet_red = meet.red();
    family_red(family, n)
        .into_iter()
        .filter(|g| !meet_red.contains(g))
        .collect()
}

/// Evaluates confluence, the Church-Rosser property, normalisation of the
/// step relation, and confluence of the step relation by finite search over
/// generators, pair sums, and meet images. The three assertions of the
/// generalized confluence theorem must come out equivalent; a violation is a
/// bug.
pub fn general_confluence(
    family: &[GeneralOperator],
    order: &PartialOrder,
) -> Result<GeneralConfluenceReport> {
    let n = order.len();
    let meet = is_completable(family, order)?.ok_or(Error::NotCompletable)?;
    let obstruction_set = general_obstructions(family, &meet, n);
    let confluent = obstruction_set.is_empty();

    let mut starts: BTreeSet<Vector> = BTreeSet::new();
    for g in 0..n {
        let unit = Vector::unit(n, g)?;
        starts.insert(meet.apply(&unit)?);
        starts.insert(unit.clone());
        for h in (g + 1)..n {
            starts.insert(unit.add(&Vector::unit(n, h)?)?);
        }
    }
    starts.remove(&Vector::zero(n));

    let kernel = summed_kernel_basis(family, n)?;

    let mut normalising = true;
    let mut church_rosser = true;
    let mut relation_confluent = true;
    let mut normal_form_sets: BTreeMap<Vector, BTreeSet<Vector>> = BTreeMap::new();
    for v in &starts {
        let reachable = reach(family, v)?;
        let nfs = normal_forms_in(family, &reachable);
        if nfs.is_empty() {
            normalising = false;
        }
        if !reachable.contains(&meet.apply(v)?) {
            church_rosser = false;
        }
        // peak joinability over one-step reducts
        let reducts: Vec<Vector> = family
            .iter()
            .filter(|t| t.moves(v))
            .map(|t| t.apply(v))
            .collect::<Result<_>>()?;
        for i in 0..reducts.len() {
            for j in (i + 1)..reducts.len() {
                let nfs_i = normal_forms_in(family, &reach(family, &reducts[i])?);
                let nfs_j = normal_forms_in(family, &reach(family, &reducts[j])?);
                if nfs_i.intersection(&nfs_j).next().is_none() {
                    relation_confluent = false;
                }
            }
        }
        normal_form_sets.insert(v.clone(), nfs);
    }
    // zigzag-equivalent test pairs must share a normal form
    let start_list: Vec<&Vector> = starts.iter().collect();
    for i in 0..start_list.len() {
        for j in (i + 1)..start_list.len() {
            let diff = start_list[i].sub(start_list[j])?;
            if kernel.contains(&diff)? {
                let nfs_i = &normal_form_sets[start_list[i]];
                let nfs_j = &normal_form_sets[start_list[j]];
                if nfs_i.intersection(nfs_j).next().is_none() {
                    relation_confluent = false;
                }
            }
        }
    }

    assert_eq!(
        confluent && normalising,
        church_rosser,
        "confluence-with-normalisation and Church-Rosser verdicts disagree"
    );
    assert_eq!(
        church_rosser, relation_confluent,
        "Church-Rosser and relation-confluence verdicts disagree"
    );

    Ok(GeneralConfluenceReport {
        confluent,
        church_rosser,
        normalising,
        relation_confluent,
        assumption: IMAGE_ASSUMPTION_NOTE,
    })
}

/// Complement test for a completable family: the candidate kernel must sit
/// inside the summed kernel and the candidate must move every obstruction.
pub fn general_is_complement(
    family: &[GeneralOperator],
    candidate: &GeneralOperator,
    order: &PartialOrder,
) -> Result<bool> {
    let n = order.len();
    let meet = is_completable(family, order)?.ok_or(Error::NotCompletable)?;
    let kernel = summed_kernel_basis(family, n)?;
    for v in candidate.kernel_vectors() {
        if !kernel.contains(&v)? {
            return Ok(false);
        }
    }
    let nred = candidate.nred();
    Ok(general_obstructions(family, &meet, n)
        .iter()
        .all(|g| nred.contains(g)))
}
