use std::collections::BTreeSet;

use super::ConeH;

/// Maximal cones of a fan together with their facet adjacency.
#[derive(Clone, Debug, Default)]
pub struct Fan {
    pub cones: Vec<ConeH>,
    /// Pairs `(i, j)` with `i < j` of cones sharing a facet.
    pub adjacency: BTreeSet<(usize, usize)>,
}

impl Fan {
    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Whether all maximal cones have the same dimension.
    pub fn is_homogeneous(&self) -> bool {
        self.cones.windows(2).all(|w| w[0].dim() == w[1].dim())
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().filter_map(move |&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Whether every cone can be reached from the first one through facets.
    pub fn is_connected(&self) -> bool {
        if self.cones.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.cones.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
