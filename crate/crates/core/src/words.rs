//! Truncated word spaces over a finite alphabet, ordered by deglex.
//!
//! Deglex compares length first, then letter-by-letter in alphabet order; the
//! empty word is smallest. All words of length up to the degree bound are
//! enumerated in deglex order, so the generator index order of the resulting
//! set *is* the deglex order and the whole operator calculus applies
//! unchanged.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gens::GenSet;

/// A word as a sequence of letter indices into the alphabet.
pub type Word = Vec<u8>;

/// All words of length at most `degree` over an ordered alphabet.
#[derive(Debug, Clone)]
pub struct WordSpace {
    letters: Vec<char>,
    degree: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    gens: GenSet,
}

impl WordSpace {
    pub fn new(letters: &[char], degree: usize) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &c in letters {
            if !seen.insert(c) {
                return Err(Error::DuplicateLetter(c));
            }
        }
        let mut words: Vec<Word> = vec![Vec::new()];
        let mut current: Vec<Word> = vec![Vec::new()];
        for _ in 0..degree {
            let mut next = Vec::with_capacity(current.len() * letters.len());
            for w in &current {
                for i in 0..letters.len() {
                    let mut longer = w.clone();
                    longer.push(i as u8);
                    next.push(longer);
                }
            }
            words.extend(next.iter().cloned());
            current = next;
        }
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let labels: Vec<String> = words
            .iter()
            .map(|w| Self::label_of(letters, w))
            .collect();
        let gens = GenSet::new(labels)?;
        Ok(WordSpace {
            letters: letters.to_vec(),
            degree,
            words,
            index,
            gens,
        })
    }

    fn label_of(letters: &[char], word: &Word) -> String {
        word.iter().map(|&i| letters[i as usize]).collect()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of words of length at most the degree bound.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn gens(&self) -> &GenSet {
        &self.gens
    }

    pub fn word_at(&self, index: usize) -> &Word {
        &self.words[index]
    }

    pub fn label(&self, index: usize) -> &str {
        self.gens.label(index)
    }

    /// Index of a word inside the truncation; errors past the degree bound.
    pub fn index_of(&self, word: &Word) -> Result<usize> {
        self.index.get(word).copied().ok_or(Error::DegreeOverflow {
            word: Self::label_of(&self.letters, word),
            bound: self.degree,
        })
    }

    /// Parses a string of letters; the empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.chars()
            .map(|c| {
                self.letters
                    .iter()
                    .position(|&l| l == c)
                    .map(|i| i as u8)
                    .ok_or(Error::ForeignLetter(c))
            })
            .collect()
    }

    pub fn concat(&self, parts: &[&[u8]]) -> Word {
        let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for part in parts {
            out.extend_from_slice(part);
        }
        out
    }
}

/// Deglex comparison: shorter words first, ties broken lexicographically by
/// letter position in the alphabet.
pub fn deglex_compare(w1: &Word, w2: &Word) -> Ordering {
    w1.len().cmp(&w2.len()).then_with(|| w1.cmp(w2))
}
