//! JSON file formats.
//!
//! Scalars travel as canonical `p/q` strings, vectors as arrays of
//! `[coefficient, generator-label]` pairs in ascending generator order, and
//! generator sets as `{"generators": [labels ascending]}`. Operators are
//! accepted in matrix form (`{"matrix": [[row-major strings]]}`, column `j`
//! holding the image of the `j`-th generator) or kernel form
//! (`{"kernel": [vector, ...]}`) everywhere an operator is an input. Reports
//! emit the kernel form always and add the matrix form for small ambients.

use serde::{Deserialize, Serialize};

use crate::basis::reduce_basis;
use crate::error::{Error, Result};
use crate::gens::GenSet;
use crate::general::{GeneralOperator, PartialOrder};
use crate::lattice::OperatorFamily;
use crate::operator::ReductionOperator;
use crate::presentation::Presentation;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::vector::Vector;

/// Ambient sizes up to this bound also get the dense matrix form in reports.
pub const MATRIX_REPORT_BOUND: usize = 32;

/// `[coefficient, label]` pair.
pub type TermPair = (String, String);

/// Serializes a vector as coefficient/label pairs, ascending by generator.
pub fn vector_to_pairs(v: &Vector, gens: &GenSet) -> Vec<TermPair> {
    v.iter()
        .map(|(g, c)| (format_scalar(c), gens.label(g).to_string()))
        .collect()
}

/// Parses coefficient/label pairs into a vector over `gens`.
pub fn vector_from_pairs(pairs: &[TermPair], gens: &GenSet) -> Result<Vector> {
    let mut terms = Vec::with_capacity(pairs.len());
    for (coeff, label) in pairs {
        terms.push((gens.index_of(label)?, parse_scalar(coeff)?));
    }
    Vector::from_terms(gens.len(), terms)
}

/// An operator in transit: exactly one of the two forms must be present.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<Vec<TermPair>>>,
}

impl OperatorFile {
    /// Resolves the file against a generator set, validating matrix
    /// conditions or reducing the kernel vectors as appropriate.
    pub fn resolve(&self, gens: &GenSet) -> Result<ReductionOperator> {
        match (&self.matrix, &self.kernel) {
            (Some(matrix), None) => {
                let parsed = parse_matrix(matrix, gens.len())?;
                ReductionOperator::from_matrix(&parsed)
            }
            (None, Some(kernel)) => {
                let vectors = kernel
                    .iter()
                    .map(|pairs| vector_from_pairs(pairs, gens))
                    .collect::<Result<Vec<_>>>()?;
                let basis = reduce_basis(gens.len(), vectors)?;
                Ok(ReductionOperator::with_kernel(&basis))
            }
            _ => Err(Error::AmbiguousOperatorForm),
        }
    }
}

/// Parses a row-major string matrix, enforcing the expected square size.
pub fn parse_matrix(matrix: &[Vec<String>], expected: usize) -> Result<Vec<Vec<Scalar>>> {
    if matrix.len() != expected {
        return Err(Error::DimensionMismatch {
            left: expected,
            right: matrix.len(),
        });
    }
    matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != expected {
                return Err(Error::RaggedMatrix {
                    row: i + 1,
                    got: row.len(),
                    expected,
                });
            }
            row.iter().map(|s| parse_scalar(s)).collect()
        })
        .collect()
}

fn matrix_to_strings(matrix: &[Vec<Scalar>]) -> Vec<Vec<String>> {
    matrix
        .iter()
        .map(|row| row.iter().map(format_scalar).collect())
        .collect()
}

/// Report form of an operator: kernel basis always, matrix for small ambients.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorReport {
    pub kernel: Vec<Vec<TermPair>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

pub fn operator_report(op: &ReductionOperator, gens: &GenSet) -> OperatorReport {
    let kernel = op
        .kernel_basis()
        .vectors()
        .map(|v| vector_to_pairs(v, gens))
        .collect();
    let matrix = if gens.len() <= MATRIX_REPORT_BOUND {
        Some(matrix_to_strings(&op.to_matrix()))
    } else {
        None
    };
    OperatorReport { kernel, matrix }
}

/// Strict-order input for the partial-order commands.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrderFile {
    pub pairs: Vec<(String, String)>,
}

/// A family of operators over named generators, with an optional partial
/// order for the generalized commands.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyFile {
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderFile>,
    pub operators: Vec<OperatorFile>,
}

impl FamilyFile {
    pub fn gen_set(&self) -> Result<GenSet> {
        GenSet::new(self.generators.clone())
    }

    pub fn resolve(&self) -> Result<(GenSet, OperatorFamily)> {
        let gens = self.gen_set()?;
        let members = self
            .operators
            .iter()
            .map(|op| op.resolve(&gens))
            .collect::<Result<Vec<_>>>()?;
        Ok((gens, OperatorFamily::new(members)?))
    }

    /// Resolves the order and the members as generalized operators; kernel
    /// form is rejected here because a kernel does not determine an operator
    /// without a total order.
    pub fn resolve_general(&self) -> Result<(GenSet, PartialOrder, Vec<GeneralOperator>)> {
        let gens = self.gen_set()?;
        let order_file = self.order.as_ref().ok_or_else(|| {
            Error::Invalid("a partial order is required: add an `order` section".to_string())
        })?;
        let pairs = order_file
            .pairs
            .iter()
            .map(|(a, b)| Ok((gens.index_of(a)?, gens.index_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let order = PartialOrder::from_cover_pairs(gens.len(), &pairs)?;
        let mut members = Vec::with_capacity(self.operators.len());
        for op in &self.operators {
            match (&op.matrix, &op.kernel) {
                (Some(matrix), None) => {
                    let parsed = parse_matrix(matrix, gens.len())?;
                    let mut images = std::collections::BTreeMap::new();
                    for j in 0..gens.len() {
                        let column = Vector::from_terms(
                            gens.len(),
                            (0..gens.len()).map(|i| (i, parsed[i][j].clone())),
                        )?;
                        if column != Vector::unit(gens.len(), j)? {
                            images.insert(j, column);
                        }
                    }
                    members.push(GeneralOperator::from_images(&order, images)?);
                }
                (None, Some(_)) => {
                    return Err(Error::Invalid(
                        "generalized operators must be given in matrix form".to_string(),
                    ))
                }
                _ => return Err(Error::AmbiguousOperatorForm),
            }
        }
        Ok((gens, order, members))
    }
}

/// One oriented rule in a presentation file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuleFile {
    pub lhs: String,
    pub rhs: Vec<TermPair>,
}

/// A presentation over a finite alphabet with a degree bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationFile {
    pub alphabet: Vec<String>,
    pub order: String,
    pub degree: usize,
    pub rules: Vec<RuleFile>,
}

impl PresentationFile {
    /// Builds the presentation, optionally overriding the stored degree.
    pub fn resolve(&self, degree_override: Option<usize>) -> Result<Presentation> {
        if self.order != "deglex" {
            return Err(Error::Invalid(format!(
                "unsupported monomial order `{}`: only `deglex` is built in",
                self.order
            )));
        }
        let mut letters = Vec::with_capacity(self.alphabet.len());
        for entry in &self.alphabet {
            let mut chars = entry.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => letters.push(c),
                _ => {
                    return Err(Error::Invalid(format!(
                        "alphabet letters must be single characters, got `{entry}`"
                    )))
                }
            }
        }
        let rules = self
            .rules
            .iter()
            .map(|rule| {
                let rhs = rule
                    .rhs
                    .iter()
                    .map(|(coeff, word)| Ok((parse_scalar(coeff)?, word.clone())))
                    .collect::<Result<Vec<_>>>()?;
                Ok((rule.lhs.clone(), rhs))
            })
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(&letters, &rules, degree_override.unwrap_or(self.degree))
    }
}

/// Renders a presentation's rule set back to file form.
pub fn rules_report(pres: &Presentation) -> Vec<RuleFile> {
    pres.rules()
        .into_iter()
        .map(|rule| RuleFile {
            lhs: word_label(pres, &rule.lhs),
            rhs: rule
                .rhs
                .iter()
                .map(|(c, w)| (format_scalar(c), word_label(pres, w)))
                .collect(),
        })
        .collect()
}

fn word_label(pres: &Presentation, word: &crate::words::Word) -> String {
    word.iter()
        .map(|&i| pres.space().letters()[i as usize])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{t1, v};

    fn gens() -> GenSet {
        GenSet::new(["g1", "g2", "g3", "g4"]).unwrap()
    }

    #[test]
    fn vector_pairs_round_trip() {
        let gens = gens();
        let x = v(4, &[(3, 1), (0, -2)]);
        let pairs = vector_to_pairs(&x, &gens);
        assert_eq!(
            pairs,
            vec![
                ("-2".to_string(), "g1".to_string()),
                ("1".to_string(), "g4".to_string())
            ]
        );
        assert_eq!(vector_from_pairs(&pairs, &gens).unwrap(), x);
    }

    #[test]
    fn operator_file_accepts_both_forms() {
        let gens = gens();
        let matrix_file: OperatorFile = serde_json::from_str(
            r#"{"matrix": [["1","1","0","0"],["0","0","0","0"],["0","0","1","1"],["0","0","0","0"]]}"#,
        )
        .unwrap();
        let kernel_file: OperatorFile = serde_json::from_str(
            r#"{"kernel": [[["1","g2"],["-1","g1"]],[["1","g4"],["-1","g3"]]]}"#,
        )
        .unwrap();
        let a = matrix_file.resolve(&gens).unwrap();
        let b = kernel_file.resolve(&gens).unwrap();
        assert_eq!(a, t1());
        assert_eq!(b, t1());
    }

    #[test]
    fn exactly_one_form_required() {
        let neither: OperatorFile = serde_json::from_str("{}").unwrap();
        assert_eq!(
            neither.resolve(&gens()).unwrap_err(),
            Error::AmbiguousOperatorForm
        );
    }

    #[test]
    fn emitted_operators_reparse_identically() {
        let gens = gens();
        let report = operator_report(&t1(), &gens);
        let file = OperatorFile {
            matrix: report.matrix.clone(),
            kernel: None,
        };
        assert_eq!(file.resolve(&gens).unwrap(), t1());
        let file = OperatorFile {
            matrix: None,
            kernel: Some(report.kernel),
        };
        assert_eq!(file.resolve(&gens).unwrap(), t1());
    }

    #[test]
    fn family_file_resolves_with_order() {
        let text = r#"{
            "generators": ["g1", "g2", "g3"],
            "order": {"pairs": [["g1", "g3"], ["g2", "g3"]]},
            "operators": [
                {"matrix": [["1","0","1"],["0","1","0"],["0","0","0"]]},
                {"matrix": [["1","0","0"],["0","1","1"],["0","0","0"]]}
            ]
        }"#;
        let file: FamilyFile = serde_json::from_str(text).unwrap();
        let (gens, order, members) = file.resolve_general().unwrap();
        assert_eq!(gens.len(), 3);
        assert!(order.lt(0, 2) && order.lt(1, 2) && !order.lt(0, 1));
        assert_eq!(members.len(), 2);
        assert_eq!(members[0].image_of(2), v(3, &[(0, 1)]));
    }

    #[test]
    fn presentation_file_resolves() {
        let text = r#"{
            "alphabet": ["x", "y", "z"],
            "order": "deglex",
            "degree": 3,
            "rules": [
                {"lhs": "yz", "rhs": [["1", "x"]]},
                {"lhs": "zx", "rhs": [["1", "xy"]]}
            ]
        }"#;
        let file: PresentationFile = serde_json::from_str(text).unwrap();
        let pres = file.resolve(None).unwrap();
        assert_eq!(pres.space().len(), 40);
        assert_eq!(rules_report(&pres).len(), 2);
        assert!(file.resolve(Some(2)).is_ok());
        assert!(file.resolve(Some(1)).is_err());
    }
}
