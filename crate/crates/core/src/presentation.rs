//! Presentations by operator over a truncated word space.
//!
//! A presentation is a rule operator on words: its kernel is spanned by the
//! oriented rules `lhs - rhs`, kept semi-reduced as the reduced basis of
//! their span. Extension operators rewrite the middle of a word while fixing
//! `n` letters on the left and `m` on the right; the family of all extensions
//! within the degree bound plays the role of the rewriting system induced by
//! the rules. Confluence of that family is the (degree-truncated) Groebner
//! property of the rule set, and completion adjoins the canonical complement
//! of the family to the rule operator until no obstruction of bounded degree
//! remains.
//!
//! Every verdict of this module is relative to the degree bound: nothing is
//! claimed about words longer than the truncation.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::basis::reduce_basis;
use crate::error::{Error, Result};
use crate::lattice::{is_confluent, meet, meet_pair, obstructions, OperatorFamily};
use crate::operator::ReductionOperator;
use crate::rewriting::{normal_form, RewriteTrace, Strategy};
use crate::scalar::Scalar;
use crate::vector::Vector;
use crate::words::{deglex_compare, Word, WordSpace};

/// Which extension operators to assemble from a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySelector {
    /// Every extension with room for some rule inside the degree bound.
    Full,
    /// Exactly the two one-letter extensions (left flank 0 and right flank 1,
    /// and vice versa).
    Pair,
}

/// A rule `lhs -> rhs` with a single word on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(Scalar, Word)>,
}

/// A rule operator on a truncated word space.
#[derive(Debug, Clone)]
pub struct Presentation {
    space: WordSpace,
    operator: ReductionOperator,
}

impl Presentation {
    /// Builds the rule operator from oriented rules. Every word of a right
    /// hand side must be deglex-smaller than the left hand side; the rule set
    /// is stored semi-reduced (the reduced basis of its span), and the degree
    /// bound must accommodate every rule.
    pub fn new(
        letters: &[char],
        rules: &[(String, Vec<(Scalar, String)>)],
        degree: usize,
    ) -> Result<Self> {
        let space = WordSpace::new(letters, degree)?;
        let mut kernel = Vec::new();
        for (lhs_text, rhs_terms) in rules {
            let lhs = space.parse_word(lhs_text)?;
            if lhs.len() > degree {
                return Err(Error::DegreeBoundTooSmall {
                    bound: degree,
                    needed: lhs.len(),
                    lhs: lhs_text.clone(),
                });
            }
            let mut vector_terms = vec![(space.index_of(&lhs)?, Scalar::from_integer(1.into()))];
            for (coeff, word_text) in rhs_terms {
                let word = space.parse_word(word_text)?;
                if deglex_compare(&word, &lhs) != std::cmp::Ordering::Less {
                    return Err(Error::MisorientedRule {
                        lhs: lhs_text.clone(),
                        word: word_text.clone(),
                    });
                }
                vector_terms.push((space.index_of(&word)?, -coeff.clone()));
            }
            kernel.push(Vector::from_terms(space.len(), vector_terms)?);
        }
        let basis = reduce_basis(space.len(), kernel)?;
        let operator = ReductionOperator::with_kernel(&basis);
        Ok(Presentation { space, operator })
    }

    fn from_operator(space: WordSpace, operator: ReductionOperator) -> Self {
        Presentation { space, operator }
    }

    pub fn space(&self) -> &WordSpace {
        &self.space
    }

    /// The rule operator itself (the zero-flank extension).
    pub fn operator(&self) -> &ReductionOperator {
        &self.operator
    }

    pub fn degree(&self) -> usize {
        self.space.degree()
    }

    /// The semi-reduced rule set, read off the kernel basis.
    pub fn rules(&self) -> Vec<Rule> {
        self.operator
            .kernel_basis()
            .iter()
            .map(|(lead, e)| {
                let rhs = e
                    .iter()
                    .filter(|(g, _)| *g != lead)
                    .map(|(g, c)| (-c.clone(), self.space.word_at(g).clone()))
                    .collect();
                Rule {
                    lhs: self.space.word_at(lead).clone(),
                    rhs,
                }
            })
            .collect()
    }

    /// Smallest rule degree, if there is any rule.
    pub fn min_rule_degree(&self) -> Option<usize> {
        self.operator
            .nred()
            .iter()
            .map(|&g| self.space.word_at(g).len())
            .min()
    }

    /// The extension fixing `n` letters on the left and `m` on the right:
    /// identity on words shorter than `n + m`, otherwise the rule operator
    /// applied to the middle. Rules never increase length under deglex, so
    /// the extension stays inside the truncation.
    pub fn extension(&self, n: usize, m: usize) -> ReductionOperator {
        let space = &self.space;
        let dim = space.len();
        let mut images: BTreeMap<usize, Vector> = BTreeMap::new();
        for &lhs_index in &self.operator.nred() {
            let lhs = space.word_at(lhs_index).clone();
            let image = self.operator.image_of(lhs_index);
            let total = n + lhs.len() + m;
            if total > space.degree() {
                continue;
            }
            for left in words_of_length(space, n) {
                for right in words_of_length(space, m) {
                    let moved_word = space.concat(&[&left, &lhs, &right]);
                    let moved_index = space
                        .index_of(&moved_word)
                        .expect("length checked against the bound");
                    let mut terms = Vec::new();
                    for (g, c) in image.iter() {
                        let inner = space.word_at(g);
                        let target = space.concat(&[&left, inner, &right]);
                        let target_index = space
                            .index_of(&target)
                            .expect("rules never increase length");
                        terms.push((target_index, c.clone()));
                    }
                    images.insert(moved_index, Vector::from_terms(dim, terms).expect("in range"));
                }
            }
        }
        ReductionOperator::from_images(dim, images)
            .expect("middle rewriting preserves the operator conditions")
    }

    /// The reduction family of the presentation within the truncation.
    pub fn reduction_family(&self, selector: FamilySelector) -> OperatorFamily {
        let members = match selector {
            FamilySelector::Pair => vec![self.extension(0, 1), self.extension(1, 0)],
            FamilySelector::Full => match self.min_rule_degree() {
                None => vec![self.operator.clone()],
                Some(min_deg) => {
                    let mut out = Vec::new();
                    let room = self.space.degree().saturating_sub(min_deg);
                    for total in 0..=room {
                        for n in 0..=total {
                            out.push(self.extension(n, total - n));
                        }
                    }
                    out
                }
            },
        };
        OperatorFamily::new(members).expect("family is never empty")
    }

    /// Obstruction words of the selected family, valid up to the degree bound.
    pub fn obstruction_words(&self, selector: FamilySelector) -> BTreeSet<String> {
        obstructions(&self.reduction_family(selector))
            .into_iter()
            .map(|g| self.space.label(g).to_string())
            .collect()
    }

    /// Confluence of the selected family up to the degree bound.
    pub fn is_confluent(&self, selector: FamilySelector) -> bool {
        is_confluent(&self.reduction_family(selector))
    }

    /// Completion at the degree bound: repeatedly meet the rule operator with
    /// the canonical complement of the full family until no obstruction of
    /// bounded degree remains. Returns the completed presentation and the
    /// number of rounds taken.
    pub fn complete(&self) -> Result<(Presentation, usize)> {
        let cap = 2 * self.space.len();
        let mut current = self.operator.clone();
        for round in 0..cap {
            let pres = Presentation::from_operator(self.space.clone(), current.clone());
            let family = pres.reduction_family(FamilySelector::Full);
            if is_confluent(&family) {
                return Ok((pres, round));
            }
            let complement = crate::completion::canonical_complement(&family)?;
            current = meet_pair(&current, &complement)?;
        }
        Err(Error::CompletionCapExceeded { cap })
    }

    /// Parses a polynomial given as `(coefficient, word)` terms.
    pub fn parse_polynomial(&self, terms: &[(Scalar, String)]) -> Result<Vector> {
        let mut out = Vec::new();
        for (coeff, text) in terms {
            let word = self.space.parse_word(text)?;
            out.push((self.space.index_of(&word)?, coeff.clone()));
        }
        Vector::from_terms(self.space.len(), out)
    }

    /// Renders a vector of the word space back into `(coefficient, word)` terms.
    pub fn render_polynomial(&self, v: &Vector) -> Vec<(Scalar, String)> {
        v.iter()
            .map(|(g, c)| (c.clone(), self.space.label(g).to_string()))
            .collect()
    }

    /// Normal form of a polynomial under the full family, first-changing
    /// strategy. Canonical modulo the truncated ideal when the presentation
    /// is confluent.
    pub fn polynomial_normal_form(&self, v: &Vector) -> Result<RewriteTrace> {
        let family = self.reduction_family(FamilySelector::Full);
        normal_form(&family, v, &Strategy::FirstChanging)
    }

    /// The meet of the full family; its kernel is the degree-truncated
    /// two-sided ideal spanned by the rules.
    pub fn family_meet(&self) -> ReductionOperator {
        meet(&self.reduction_family(FamilySelector::Full))
    }
}

fn words_of_length(space: &WordSpace, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let k = space.letters().len();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    if k == 0 {
        return out;
    }
    // enumerate in lexicographic order, consistent with the space order
    let mut stack = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        if w.len() == len {
            out.push(w);
            continue;
        }
        for i in (0..k).rev() {
            let mut next = w.clone();
            next.push(i as u8);
            stack.push(next);
        }
    }
    out
}
