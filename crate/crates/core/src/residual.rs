use num_traits::Zero;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualEntry {
    pub index: Vec<usize>,
    pub value: Scalar,
}

/// Outcome of an exact identity check: every nonzero residual coefficient
/// with its index tuple. `pass` holds exactly when `entries` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub pass: bool,
    pub entries: Vec<ResidualEntry>,
    pub checked: usize,
}

impl ResidualReport {
    pub fn new(entries: Vec<ResidualEntry>, checked: usize) -> Self {
        ResidualReport {
            pass: entries.is_empty(),
            entries,
            checked,
        }
    }

    pub fn empty(checked: usize) -> Self {
        Self::new(Vec::new(), checked)
    }

    /// Keeps only the nonzero values.
    pub fn from_values(
        values: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
        checked: usize,
    ) -> Self {
        let entries = values
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(index, value)| ResidualEntry { index, value })
            .collect();
        Self::new(entries, checked)
    }

    /// Concatenates reports, prefixing each entry index with `tag`.
    pub fn merge(parts: impl IntoIterator<Item = (usize, ResidualReport)>) -> Self {
        let mut entries = Vec::new();
        let mut checked = 0;
        for (tag, part) in parts {
            checked += part.checked;
            entries.extend(part.entries.into_iter().map(|mut e| {
                e.index.insert(0, tag);
                e
            }));
        }
        Self::new(entries, checked)
    }

    pub fn value_at(&self, index: &[usize]) -> Option<&Scalar> {
        self.entries
            .iter()
            .find(|e| e.index == index)
            .map(|e| &e.value)
    }
}
