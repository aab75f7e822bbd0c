//! Simple undirected graphs (facet graphs, 1-skeletons, layer graphs) and
//! exact graph coloring.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Node cap above which [`chromatic_decision`] reports [`ColoringOutcome::Undecided`].
pub const DEFAULT_NODE_CAP: usize = 24;

/// A loopless graph without multiple edges on nodes `0..node_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(node_count: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); node_count],
        }
    }

    pub fn complete(node_count: usize) -> Self {
        let mut g = Self::new(node_count);
        for a in 0..node_count {
            for b in a + 1..node_count {
                g.insert_edge(a, b);
            }
        }
        g
    }

    pub fn cycle(node_count: usize) -> Self {
        let mut g = Self::new(node_count);
        for a in 0..node_count {
            let b = (a + 1) % node_count;
            if a != b {
                g.insert_edge(a, b);
            }
        }
        g
    }

    pub fn from_edges(node_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(node_count);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds the edge `{a, b}`. Returns whether it was new.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        let n = self.node_count();
        if a >= n || b >= n {
            return Err(Error::OutOfRange(format!("edge {a}-{b} on {n} nodes")));
        }
        if a == b {
            return Err(Error::OutOfRange(format!("loop at node {a}")));
        }
        Ok(self.insert_edge(a, b))
    }

    pub(crate) fn insert_edge(&mut self, a: usize, b: usize) -> bool {
        debug_assert_ne!(a, b);
        let fresh = self.adj[a].insert(b);
        self.adj[b].insert(a);
        fresh
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(a).is_some_and(|s| s.contains(&b))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, s)| s.range(a + 1..).map(move |&b| (a, b)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.node_count();
        self.adj.iter().all(|s| s.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// True for a single cycle through every node (at least 3 nodes).
    pub fn is_hamiltonian_cycle(&self) -> bool {
        self.node_count() >= 3 && self.adj.iter().all(|s| s.len() == 2) && self.is_connected()
    }

    /// Proper 2-coloring with node 0's class labelled `0`, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.node_count();
        let mut side = vec![u8::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Checks that `coloring` assigns different values to adjacent nodes.
    /// Returns the first offending edge otherwise.
    pub fn check_proper(&self, coloring: &[usize]) -> std::result::Result<(), (usize, usize)> {
        match self.edges().find(|&(a, b)| coloring[a] == coloring[b]) {
            Some(edge) => Err(edge),
            None => Ok(()),
        }
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} nodes:", self.node_count())?;
        for (a, b) in self.edges() {
            write!(f, " {a}-{b}")?;
        }
        Ok(())
    }
}

/// Result of an exact `c`-colorability decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    /// A proper coloring with colors `1..=c`, one entry per node.
    Colorable(Vec<usize>),
    NotColorable,
    /// The graph exceeds the node cap; no answer is given.
    Undecided,
}

impl ColoringOutcome {
    pub fn coloring(&self) -> Option<&[usize]> {
        match self {
            ColoringOutcome::Colorable(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_colorable(&self) -> bool {
        matches!(self, ColoringOutcome::Colorable(_))
    }
}

/// Decides whether `g` admits a proper coloring with `colors` colors.
pub fn chromatic_decision(g: &SimpleGraph, colors: usize) -> ColoringOutcome {
    chromatic_decision_capped(g, colors, DEFAULT_NODE_CAP)
}

/// Exact DSATUR branch and bound. Deterministic for a fixed node order.
pub fn chromatic_decision_capped(g: &SimpleGraph, colors: usize, node_cap: usize) -> ColoringOutcome {
    let n = g.node_count();
    if n == 0 {
        return ColoringOutcome::Colorable(Vec::new());
    }
    if colors == 0 {
        return ColoringOutcome::NotColorable;
    }
    if n > node_cap {
        return ColoringOutcome::Undecided;
    }
    let mut search = Dsatur {
        graph: g,
        colors,
        assignment: vec![0; n],
    };
    if search.extend(0) {
        ColoringOutcome::Colorable(search.assignment)
    } else {
        ColoringOutcome::NotColorable
    }
}

struct Dsatur<'a> {
    graph: &'a SimpleGraph,
    colors: usize,
    assignment: Vec<usize>,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> usize {
        let used: BTreeSet<usize> = self
            .graph
            .neighbors(v)
            .map(|w| self.assignment[w])
            .filter(|&c| c != 0)
            .collect();
        used.len()
    }

    fn pick(&self) -> Option<usize> {
        (0..self.graph.node_count())
            .filter(|&v| self.assignment[v] == 0)
            .max_by(|&a, &b| {
                (self.saturation(a), self.graph.degree(a))
                    .cmp(&(self.saturation(b), self.graph.degree(b)))
                    // prefer the smaller index on ties
                    .then(b.cmp(&a))
            })
    }

    fn extend(&mut self, max_used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        // colors above max_used + 1 are interchangeable
        let limit = self.colors.min(max_used + 1);
        for c in 1..=limit {
            if self.graph.neighbors(v).any(|w| self.assignment[w] == c) {
                continue;
            }
            self.assignment[v] = c;
            if self.extend(max_used.max(c)) {
                return true;
            }
            self.assignment[v] = 0;
        }
        false
    }
}
