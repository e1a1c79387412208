//! Partition of the original factor colors into temporary classes.

use crate::error::{Error, Result};

/// Partition of colors `0..|J|` into classes `J_i`, with the pointer
/// `t_c: color -> class` kept up to date on every merge.
///
/// Class ids are color ids: the class that survives a merge keeps the id it
/// already had, dead ids are never reused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPartition {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    live: usize,
}

impl ColorPartition {
    /// The trivial partition into singletons.
    pub fn new(colors: usize) -> Self {
        ColorPartition {
            class_of: (0..colors).collect(),
            members: (0..colors).map(|c| vec![c]).collect(),
            live: colors,
        }
    }

    pub fn color_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.live
    }

    /// `t_c(color)`.
    #[inline]
    pub fn class_of(&self, color: usize) -> usize {
        self.class_of[color]
    }

    pub fn is_live(&self, class: usize) -> bool {
        self.members.get(class).is_some_and(|m| !m.is_empty())
    }

    /// Colors of a live class, ascending.
    pub fn members(&self, class: usize) -> Result<&[usize]> {
        if self.is_live(class) {
            Ok(&self.members[class])
        } else {
            Err(Error::UnknownClass(class))
        }
    }

    /// Live class ids, ascending.
    pub fn classes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.members.len()).filter(move |&c| !self.members[c].is_empty())
    }

    /// Unifies the given classes and returns the surviving id.
    ///
    /// The largest class survives (smallest id on ties); the colors of the
    /// others are moved over and their pointers reset.
    pub fn merge_classes(&mut self, classes: &[usize]) -> Result<usize> {
        let first = *classes.first().ok_or(Error::UnknownClass(usize::MAX))?;
        if let Some(&c) = classes.iter().find(|&&c| !self.is_live(c)) {
            return Err(Error::UnknownClass(c));
        }
        let survivor = classes.iter().copied().fold(first, |best, c| {
            let (lb, lc) = (self.members[best].len(), self.members[c].len());
            if lc > lb || (lc == lb && c < best) {
                c
            } else {
                best
            }
        });
        let mut merged = std::mem::take(&mut self.members[survivor]);
        for &c in classes {
            if c == survivor || self.members[c].is_empty() {
                continue;
            }
            for color in std::mem::take(&mut self.members[c]) {
                self.class_of[color] = survivor;
                merged.push(color);
            }
            self.live -= 1;
        }
        merged.sort_unstable();
        self.members[survivor] = merged;
        Ok(survivor)
    }
}
