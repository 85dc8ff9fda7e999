//! Reduction operators.
//!
//! A reduction operator is an idempotent linear endomorphism that maps each
//! generator either to itself or to a combination of strictly smaller
//! generators. Operators are stored sparsely: only the images of non-reduced
//! generators are kept, and every stored image is supported on reduced
//! generators. Dense matrices exist only at the I/O boundary.
//!
//! Subspaces and operators determine each other: the kernel map is a
//! bijection, realised here by [`ReductionOperator::with_kernel`] and
//! [`ReductionOperator::kernel_basis`].

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::basis::{reduce_basis, ReducedBasis};
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};
use crate::vector::Vector;

/// Idempotent, order-decreasing endomorphism stored by its action on
/// non-reduced generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ReductionOperator {
    dim: usize,
    images: BTreeMap<usize, Vector>,
}

impl ReductionOperator {
    /// The identity operator (kernel `{0}`).
    pub fn identity(dim: usize) -> Self {
        ReductionOperator {
            dim,
            images: BTreeMap::new(),
        }
    }

    /// The zero operator (kernel is the whole space).
    pub fn zero(dim: usize) -> Self {
        ReductionOperator {
            dim,
            images: (0..dim).map(|g| (g, Vector::zero(dim))).collect(),
        }
    }

    /// The unique reduction operator whose kernel is the span of `basis`:
    /// each leading generator `g` maps to `g - e_g`, everything else is fixed.
    pub fn with_kernel(basis: &ReducedBasis) -> Self {
        let dim = basis.dim();
        let images = basis
            .iter()
            .map(|(g, e)| {
                let mut image = e.neg();
                image
                    .add_scaled(&Vector::unit(dim, g).expect("lead in range"), &Scalar::one())
                    .expect("same ambient");
                (g, image)
            })
            .collect();
        ReductionOperator { dim, images }
    }

    /// Builds an operator from explicit images of the non-reduced generators,
    /// validating the two structural conditions: every image is supported
    /// strictly below its generator and touches only reduced generators.
    /// Idempotency follows from the two conditions.
    pub fn from_images(dim: usize, images: BTreeMap<usize, Vector>) -> Result<Self> {
        for (&g, image) in &images {
            if g >= dim {
                return Err(Error::IndexOutOfRange { index: g, dim });
            }
            if image.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: image.dim(),
                });
            }
            for h in image.support() {
                if h >= g {
                    return Err(Error::ImageNotSmaller {
                        generator: g,
                        offending: h,
                    });
                }
            }
        }
        for (&g, image) in &images {
            for h in image.support() {
                if images.contains_key(&h) {
                    return Err(Error::ImageNotReduced {
                        generator: g,
                        offending: h,
                    });
                }
            }
        }
        Ok(ReductionOperator { dim, images })
    }

    /// Parses a canonical matrix (column `j` holds the coefficients of the
    /// image of the `j`-th generator) after validating the three
    /// reduction-matrix conditions. Violations name the condition and the
    /// offending row and column (1-based, matching the matrix layout).
    pub fn from_matrix(matrix: &[Vec<Scalar>]) -> Result<Self> {
        let violations = validate_reduction_matrix(matrix)?;
        if let Some(first) = violations.into_iter().next() {
            return Err(first);
        }
        let n = matrix.len();
        let mut images = BTreeMap::new();
        for j in 0..n {
            if matrix[j][j].is_zero() {
                let image = Vector::from_terms(
                    n,
                    (0..n).map(|i| (i, matrix[i][j].clone())),
                )?;
                images.insert(j, image);
            }
        }
        ReductionOperator::from_images(n, images)
    }

    /// Canonical matrix of the operator; column `j` is the image of `g_j`.
    pub fn to_matrix(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim;
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

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Generators moved by the operator, ascending.
    pub fn nred(&self) -> BTreeSet<usize> {
        self.images.keys().copied().collect()
    }

    /// Generators fixed by the operator, ascending.
    pub fn red(&self) -> BTreeSet<usize> {
        (0..self.dim).filter(|g| !self.is_moved(*g)).collect()
    }

    pub fn is_moved(&self, generator: usize) -> bool {
        self.images.contains_key(&generator)
    }

    /// Image of a single generator.
    pub fn image_of(&self, generator: usize) -> Vector {
        match self.images.get(&generator) {
            Some(image) => image.clone(),
            None => Vector::unit(self.dim, generator).expect("generator in range"),
        }
    }

    /// Whether `v` lies outside the span of the reduced generators, i.e. the
    /// operator changes it.
    pub fn moves(&self, v: &Vector) -> bool {
        v.support().any(|g| self.images.contains_key(&g))
    }

    /// Linear extension of the stored generator images.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let mut out = Vector::zero(self.dim);
        for (g, c) in v.iter() {
            match self.images.get(&g) {
                None => out.add_scaled(&Vector::unit(self.dim, g)?, c)?,
                Some(image) => out.add_scaled(image, c)?,
            }
        }
        Ok(out)
    }

    /// The reduced basis `{g - T(g) : g in Nred(T)}` of the kernel.
    pub fn kernel_basis(&self) -> ReducedBasis {
        let vectors: Vec<Vector> = self
            .images
            .iter()
            .map(|(&g, image)| {
                Vector::unit(self.dim, g)
                    .expect("generator in range")
                    .sub(image)
                    .expect("same ambient")
            })
            .collect();
        reduce_basis(self.dim, vectors).expect("kernel vectors share the ambient")
    }

    /// Structural and behavioural audit used by the `check` command: returns
    /// human-readable violations instead of stopping at the first error.
    pub fn audit(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (&g, image) in &self.images {
            for h in image.support() {
                if h >= g {
                    out.push(format!(
                        "image of generator {g} is not order-decreasing: support contains {h}"
                    ));
                }
                if self.images.contains_key(&h) {
                    out.push(format!(
                        "image of generator {g} touches non-reduced generator {h}"
                    ));
                }
            }
        }
        for g in 0..self.dim {
            let once = self.image_of(g);
            let twice = self.apply(&once).expect("same ambient");
            if once != twice {
                out.push(format!("operator is not idempotent at generator {g}"));
            }
        }
        out
    }
}

/// Checks the three reduction-matrix conditions, collecting every violation:
/// 1. upper triangular with a 0/1 diagonal,
/// 2. a zero diagonal entry forces the rest of its row to zero,
/// 3. a unit diagonal entry forces the rest of its column to zero.
///
/// Row/column positions in the report are 1-based. A ragged or empty-row
/// matrix is rejected outright.
pub fn validate_reduction_matrix(matrix: &[Vec<Scalar>]) -> Result<Vec<Error>> {
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
    let mut violations = Vec::new();
    for i in 0..n {
        let d = &matrix[i][i];
        if !d.is_zero() && !d.is_one() {
            violations.push(Error::MatrixCondition {
                condition: 1,
                row: i + 1,
                col: i + 1,
                detail: format!("diagonal entry {} is neither 0 nor 1", format_scalar(d)),
            });
        }
        for j in 0..i {
            if !matrix[i][j].is_zero() {
                violations.push(Error::MatrixCondition {
                    condition: 1,
                    row: i + 1,
                    col: j + 1,
                    detail: "nonzero entry below the diagonal".to_string(),
                });
            }
        }
    }
    for i in 0..n {
        if matrix[i][i].is_zero() {
            for j in 0..n {
                if j != i && !matrix[i][j].is_zero() {
                    violations.push(Error::MatrixCondition {
                        condition: 2,
                        row: i + 1,
                        col: j + 1,
                        detail: "row of a zero diagonal entry must vanish".to_string(),
                    });
                }
            }
        }
    }
    for j in 0..n {
        if matrix[j][j].is_one() {
            for i in 0..n {
                if i != j && !matrix[i][j].is_zero() {
                    violations.push(Error::MatrixCondition {
                        condition: 3,
                        row: i + 1,
                        col: j + 1,
                        detail: "column of a unit diagonal entry must vanish".to_string(),
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// Exact matrix product, used to confirm that validated reduction matrices
/// are idempotent.
pub fn matrix_product(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    let term = &a[i][k] * &b[k][j];
                    out[i][j] += term;
                }
            }
        }
    }
    out
}
