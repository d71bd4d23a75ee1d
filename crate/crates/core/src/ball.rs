//! Exact word metric by breadth-first search of the Cayley graph.

use std::hash::Hash;

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::group::GroupModel;
use crate::word::{GenSymbol, Word};

/// Default cap on the number of stored elements.
pub const DEFAULT_BUDGET: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallEntry {
    pub distance: u32,
    /// BFS parent index and the generator leading from the parent here.
    pub parent: Option<(u32, GenSymbol)>,
}

/// The ball of radius `R` around the identity, with exact distances and
/// BFS parents. Elements are stored in BFS order, so index order is
/// nondecreasing in distance.
#[derive(Clone, Debug)]
pub struct BallIndex<E> {
    entries: IndexMap<E, BallEntry>,
    layer_starts: Vec<usize>,
    radius: u32,
    budget: usize,
}

pub fn bfs_ball<M: GroupModel>(model: &M, radius: u32) -> Result<BallIndex<M::Element>> {
    bfs_ball_with_budget(model, radius, DEFAULT_BUDGET)
}

pub fn bfs_ball_with_budget<M: GroupModel>(
    model: &M,
    radius: u32,
    budget: usize,
) -> Result<BallIndex<M::Element>> {
    let mut entries = IndexMap::new();
    entries.insert(
        model.identity(),
        BallEntry {
            distance: 0,
            parent: None,
        },
    );
    let mut ball = BallIndex {
        entries,
        layer_starts: vec![0],
        radius: 0,
        budget: budget.max(1),
    };
    ball.extend(model, radius)?;
    Ok(ball)
}

impl<E: Clone + Eq + Hash> BallIndex<E> {
    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Grows the ball layer by layer up to `radius`. On a budget overrun the
    /// ball is left at the last complete radius.
    pub fn extend<M: GroupModel<Element = E>>(&mut self, model: &M, radius: u32) -> Result<()> {
        let directions = model.alphabet().directions();
        while self.radius < radius {
            let start = *self.layer_starts.last().expect("layer 0 always exists");
            let end = self.entries.len();
            let next = self.radius + 1;
            for index in start..end {
                let (g, _) = self.entries.get_index(index).expect("index in range");
                let g = g.clone();
                for &s in &directions {
                    let h = model.apply(&g, s);
                    if self.entries.contains_key(&h) {
                        continue;
                    }
                    if self.entries.len() >= self.budget {
                        self.entries.truncate(end);
                        return Err(Error::Resource {
                            budget: self.budget,
                            radius: next,
                        });
                    }
                    self.entries.insert(
                        h,
                        BallEntry {
                            distance: next,
                            parent: Some((index as u32, s)),
                        },
                    );
                }
            }
            self.layer_starts.push(end);
            self.radius = next;
        }
        Ok(())
    }

    pub fn contains(&self, g: &E) -> bool {
        self.entries.contains_key(g)
    }

    pub fn entry(&self, g: &E) -> Option<&BallEntry> {
        self.entries.get(g)
    }

    /// `d_A(g)`.
    pub fn distance(&self, g: &E) -> Result<u32> {
        self.entries
            .get(g)
            .map(|e| e.distance)
            .ok_or(Error::OutOfRange {
                radius: self.radius,
            })
    }

    /// A geodesic word for `g`, read off the BFS parents.
    pub fn shortest_word(&self, g: &E) -> Result<Word> {
        let mut index = self.entries.get_index_of(g).ok_or(Error::OutOfRange {
            radius: self.radius,
        })?;
        let mut reversed = Vec::new();
        while let Some((parent, s)) = self.entries[index].parent {
            reversed.push(s);
            index = parent as usize;
        }
        reversed.reverse();
        Ok(Word::from_symbols(reversed))
    }

    pub fn elements(&self) -> impl Iterator<Item = &E> + '_ {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, &BallEntry)> + '_ {
        self.entries.iter()
    }

    pub fn element(&self, index: usize) -> Option<&E> {
        self.entries.get_index(index).map(|(g, _)| g)
    }

    pub fn as_slice(&self) -> &indexmap::map::Slice<E, BallEntry> {
        self.entries.as_slice()
    }

    /// Number of elements at each exact distance `0..=R`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut bounds = self.layer_starts.clone();
        bounds.push(self.entries.len());
        bounds.windows(2).map(|w| w[1] - w[0]).collect()
    }
}
