//! Ordered generator sets.
//!
//! A generator set is a finite sequence of distinct labels; the position in
//! the sequence is the total order (index 0 is smallest). All arithmetic
//! identifies generators by index, labels exist only for I/O.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A finite totally ordered set of named generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GenSet {
    /// Builds a generator set from labels listed in ascending order.
    /// Labels must be pairwise distinct; the empty set is allowed.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GenSet { labels, index })
    }

    /// Anonymous generators `g1 < g2 < ... < gn`.
    pub fn numbered(n: usize) -> Self {
        GenSet::new((1..=n).map(|i| format!("g{i}"))).expect("numbered labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}
