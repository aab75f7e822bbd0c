//! Flag graphs of pre-maniplexes, maniplexes and polytopes.
//!
//! A rank-`n` [`Maniplex`] stores, for every flag `f` and color `i < n`, the
//! flag `f^i` that is `i`-adjacent to it. Each color class is a perfect
//! matching on the flags. The structural predicates (commutation, the path
//! intersection property, flatness, bipartiteness) and the face machinery all
//! work directly on this table.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Index of a flag, `0..flag_count`.
pub type Flag = usize;
/// Index of an edge color, `0..rank`.
pub type Color = usize;

/// A properly edge-colored regular flag graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Maniplex {
    rank: usize,
    flag_count: usize,
    adj: Vec<Flag>,
    name: Option<String>,
}

impl Maniplex {
    /// Builds a maniplex from one row of `rank` neighbours per flag.
    pub fn new(rank: usize, rows: Vec<Vec<Flag>>) -> Result<Self> {
        let flag_count = rows.len();
        let mut adj = Vec::with_capacity(flag_count * rank);
        for row in rows {
            if row.len() != rank {
                return Err(Error::TableShape {
                    expected: rank,
                    actual: row.len(),
                });
            }
            adj.extend(row);
        }
        Self::from_table(rank, flag_count, adj)
    }

    /// Builds a maniplex from a flat row-major table (`adj[f * rank + i] = f^i`).
    pub fn from_table(rank: usize, flag_count: usize, adj: Vec<Flag>) -> Result<Self> {
        let m = Self {
            rank,
            flag_count,
            adj,
            name: None,
        };
        m.validate()?;
        Ok(m)
    }

    /// The single-flag rank-0 maniplex.
    pub fn point() -> Self {
        Self {
            rank: 0,
            flag_count: 1,
            adj: Vec::new(),
            name: Some("point".into()),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    /// Checks the table invariants: shape, no fixed points, every color an involution.
    pub fn validate(&self) -> Result<()> {
        if self.adj.len() != self.flag_count * self.rank {
            return Err(Error::TableShape {
                expected: self.flag_count * self.rank,
                actual: self.adj.len(),
            });
        }
        if self.rank == 0 && self.flag_count != 1 {
            return Err(Error::RankZeroFlagCount(self.flag_count));
        }
        if self.flag_count == 0 {
            return Err(Error::OutOfRange("flag count 0".into()));
        }
        for f in 0..self.flag_count {
            for i in 0..self.rank {
                let g = self.adj[f * self.rank + i];
                if g >= self.flag_count {
                    return Err(Error::FlagOutOfRange {
                        flag: g,
                        flag_count: self.flag_count,
                    });
                }
                if g == f {
                    return Err(Error::FixedPoint { flag: f, color: i });
                }
                let back = self.adj[g * self.rank + i];
                if back != f {
                    return Err(Error::NotInvolution {
                        flag: f,
                        color: i,
                        image: g,
                        back,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn flag_count(&self) -> usize {
        self.flag_count
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The flag `i`-adjacent to `f`.
    #[inline]
    pub fn adj(&self, f: Flag, i: Color) -> Flag {
        debug_assert!(i < self.rank);
        self.adj[f * self.rank + i]
    }

    /// Follows the colors of `word` in order starting from `f`.
    pub fn walk(&self, f: Flag, word: &[Color]) -> Flag {
        word.iter().fold(f, |g, &i| self.adj(g, i))
    }

    pub fn row(&self, f: Flag) -> &[Flag] {
        &self.adj[f * self.rank..(f + 1) * self.rank]
    }

    /// The row-major adjacency table.
    pub fn table(&self) -> &[Flag] {
        &self.adj
    }

    fn check_colors(&self, colors: &[Color]) -> Result<()> {
        match colors.iter().find(|&&c| c >= self.rank) {
            Some(&color) => Err(Error::ColorOutOfRange {
                color,
                rank: self.rank,
            }),
            None => Ok(()),
        }
    }

    /// Connected components of the subgraph using only `colors`.
    pub fn components(&self, colors: &[Color]) -> Result<ColorComponentLabeling> {
        self.check_colors(colors)?;
        let (labels, count) = self.label_components(colors);
        let mut colors = colors.to_vec();
        colors.sort_unstable();
        colors.dedup();
        Ok(ColorComponentLabeling {
            colors,
            labels,
            count,
        })
    }

    /// Component labels numbered by smallest member flag.
    pub(crate) fn label_components(&self, colors: &[Color]) -> (Vec<usize>, usize) {
        const UNSEEN: usize = usize::MAX;
        let mut labels = vec![UNSEEN; self.flag_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.flag_count {
            if labels[start] != UNSEEN {
                continue;
            }
            labels[start] = count;
            stack.push(start);
            while let Some(f) = stack.pop() {
                for &i in colors {
                    let g = self.adj(f, i);
                    if labels[g] == UNSEEN {
                        labels[g] = count;
                        stack.push(g);
                    }
                }
            }
            count += 1;
        }
        (labels, count)
    }

    fn all_colors_except(&self, skip: Color) -> Vec<Color> {
        (0..self.rank).filter(|&c| c != skip).collect()
    }

    /// The `i`-faces: components of the graph with color `i` removed.
    pub fn faces(&self, i: Color) -> Result<Vec<Face>> {
        self.check_colors(&[i])?;
        let labeling = self.components(&self.all_colors_except(i))?;
        Ok(labeling
            .groups()
            .into_iter()
            .enumerate()
            .map(|(id, flags)| Face { rank: i, id, flags })
            .collect())
    }

    /// Number of `i`-faces for each `i` in `0..rank`.
    pub fn face_census(&self) -> Vec<usize> {
        (0..self.rank)
            .map(|i| self.label_components(&self.all_colors_except(i)).1)
            .collect()
    }

    pub fn facet_count(&self) -> usize {
        if self.rank == 0 {
            return 0;
        }
        self.label_components(&self.all_colors_except(self.rank - 1)).1
    }

    pub fn is_connected(&self) -> bool {
        let colors: Vec<Color> = (0..self.rank).collect();
        self.label_components(&colors).1 == 1
    }

    /// Checks that colors at distance greater than one commute, returning the
    /// first failing `(flag, i, j)` in flag-major order otherwise.
    pub fn check_maniplex(&self) -> std::result::Result<(), NonCommuting> {
        for f in 0..self.flag_count {
            for i in 0..self.rank {
                for j in i + 2..self.rank {
                    if self.adj(self.adj(f, i), j) != self.adj(self.adj(f, j), i) {
                        return Err(NonCommuting { flag: f, i, j });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_maniplex(&self) -> bool {
        self.check_maniplex().is_ok()
    }

    /// Checks connectivity, commutation and the path intersection property.
    ///
    /// For every pair of colors `(i, j)`, two flags joined both by a path with
    /// colors `i..rank` and by a path with colors `0..=j` must be joined by a
    /// path with colors `i..=j`. When `i > j` that last range is empty and the
    /// flags must coincide.
    pub fn check_polytope(&self) -> std::result::Result<(), PolytopeViolation> {
        if !self.is_connected() {
            return Err(PolytopeViolation::Disconnected);
        }
        self.check_maniplex().map_err(PolytopeViolation::NotManiplex)?;
        let n = self.rank;
        if n < 2 {
            return Ok(());
        }
        let interval = |lo: usize, hi: usize| -> Vec<usize> {
            let colors: Vec<Color> = (lo..=hi).collect();
            self.label_components(&colors).0
        };
        // i = 0 or j = n - 1 makes one hypothesis the conclusion itself
        let lower: Vec<Vec<usize>> = (0..n - 1).map(|j| interval(0, j)).collect();
        let mut seen: HashMap<(usize, usize), Flag> = HashMap::new();
        for i in 1..n {
            let upper = interval(i, n - 1);
            for (j, lower) in lower.iter().enumerate() {
                let meet: Option<Vec<usize>> = (i <= j).then(|| interval(i, j));
                seen.clear();
                for f in 0..self.flag_count {
                    let g = *seen.entry((upper[f], lower[f])).or_insert(f);
                    if g == f {
                        continue;
                    }
                    let joined = meet.as_ref().is_some_and(|labels| labels[f] == labels[g]);
                    if !joined {
                        return Err(PolytopeViolation::PathIntersection {
                            flags: (g, f),
                            i,
                            j,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_polytope(&self) -> bool {
        self.check_polytope().is_ok()
    }

    /// Whether every `i`-face meets every `j`-face.
    pub fn is_flat(&self, i: Color, j: Color) -> Result<bool> {
        if i >= j {
            return Err(Error::BadColorPair { i, j });
        }
        self.check_colors(&[i, j])?;
        let (i_faces, ni) = self.label_components(&self.all_colors_except(i));
        let (j_faces, nj) = self.label_components(&self.all_colors_except(j));
        let mut met = vec![false; ni * nj];
        let mut distinct = 0;
        for f in 0..self.flag_count {
            let cell = &mut met[i_faces[f] * nj + j_faces[f]];
            if !*cell {
                *cell = true;
                distinct += 1;
            }
        }
        Ok(distinct == ni * nj)
    }

    /// The facet graph: facets joined when a color-`(n-1)` edge connects them.
    pub fn facet_graph(&self) -> Result<FacetGraph> {
        if self.rank == 0 {
            return Err(Error::RankTooSmall { rank: 0, min: 1 });
        }
        let top = self.rank - 1;
        let facets = self.components(&self.all_colors_except(top))?;
        let mut graph = SimpleGraph::new(facets.count);
        let mut degenerate = false;
        for f in 0..self.flag_count {
            let (a, b) = (facets.labels[f], facets.labels[self.adj(f, top)]);
            if a == b {
                degenerate = true;
            } else {
                graph.insert_edge(a, b);
            }
        }
        Ok(FacetGraph {
            graph,
            facets,
            degenerate,
        })
    }

    /// The 1-skeleton, i.e. the facet graph of the dual.
    pub fn skeleton_graph(&self) -> Result<FacetGraph> {
        self.dual().facet_graph()
    }

    /// Relabels every color `i` as `rank - 1 - i`.
    pub fn dual(&self) -> Maniplex {
        let n = self.rank;
        let mut adj = Vec::with_capacity(self.adj.len());
        for f in 0..self.flag_count {
            adj.extend((0..n).map(|i| self.adj(f, n - 1 - i)));
        }
        Maniplex {
            rank: n,
            flag_count: self.flag_count,
            adj,
            name: None,
        }
    }

    /// Parity of the number of color-`color` edges on paths from `root`.
    ///
    /// Flags are labelled `false` (even, "red") or `true` (odd, "blue"). Fails
    /// with a closed walk using an odd number of color-`color` edges when the
    /// parity is not well defined.
    pub fn color_parity(&self, color: Color, root: Flag) -> std::result::Result<Vec<bool>, OddCycle> {
        assert!(color < self.rank, "color {color} out of range");
        const UNSEEN: u8 = u8::MAX;
        let mut parity = vec![UNSEEN; self.flag_count];
        let mut parent = vec![usize::MAX; self.flag_count];
        let starts = std::iter::once(root).chain(0..self.flag_count);
        for start in starts {
            if parity[start] != UNSEEN {
                continue;
            }
            parity[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                for i in 0..self.rank {
                    let g = self.adj(f, i);
                    let expected = parity[f] ^ u8::from(i == color);
                    if parity[g] == UNSEEN {
                        parity[g] = expected;
                        parent[g] = f;
                        queue.push_back(g);
                    } else if parity[g] != expected {
                        return Err(OddCycle(closed_walk(&parent, f, g)));
                    }
                }
            }
        }
        Ok(parity.into_iter().map(|p| p == 1).collect())
    }

    /// Red/blue classes of the facets, red containing flag 0.
    pub fn facet_bipartition(&self) -> std::result::Result<Bipartition, OddCycle> {
        if self.rank == 0 {
            return Err(OddCycle(Vec::new()));
        }
        let parity = self.color_parity(self.rank - 1, 0)?;
        let facets = self
            .components(&self.all_colors_except(self.rank - 1))
            .expect("colors in range");
        Ok(Bipartition::new(facets, parity))
    }

    /// Red/blue classes of the vertices, red containing flag 0.
    pub fn vertex_bipartition(&self) -> std::result::Result<Bipartition, OddCycle> {
        if self.rank == 0 {
            return Err(OddCycle(Vec::new()));
        }
        let parity = self.color_parity(0, 0)?;
        let vertices = self
            .components(&self.all_colors_except(0))
            .expect("colors in range");
        Ok(Bipartition::new(vertices, parity))
    }

    pub fn is_facet_bipartite(&self) -> bool {
        self.facet_bipartition().is_ok()
    }

    pub fn is_vertex_bipartite(&self) -> bool {
        self.vertex_bipartition().is_ok()
    }
}

fn path_to_root(parent: &[usize], mut f: Flag) -> Vec<Flag> {
    let mut path = vec![f];
    while parent[f] != usize::MAX {
        f = parent[f];
        path.push(f);
    }
    path
}

/// Cycle through the BFS tree closed by the non-tree edge `f - g`.
fn closed_walk(parent: &[usize], f: Flag, g: Flag) -> Vec<Flag> {
    let mut up_f = path_to_root(parent, f);
    let mut up_g = path_to_root(parent, g);
    // drop the shared tail above the lowest common ancestor, keeping the ancestor once
    while up_f.len() > 1 && up_g.len() > 1 && up_f[up_f.len() - 2] == up_g[up_g.len() - 2] {
        up_f.pop();
        up_g.pop();
    }
    up_g.pop();
    up_g.reverse();
    up_f.extend(up_g);
    up_f
}

impl fmt::Display for Maniplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name.as_deref().unwrap_or("maniplex");
        write!(f, "{name} (rank {}, {} flags)", self.rank, self.flag_count)
    }
}

/// A maniplex together with a chosen base flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedManiplex {
    pub maniplex: Maniplex,
    base_flag: Flag,
}

impl RootedManiplex {
    pub fn new(maniplex: Maniplex, base_flag: Flag) -> Result<Self> {
        if base_flag >= maniplex.flag_count() {
            return Err(Error::FlagOutOfRange {
                flag: base_flag,
                flag_count: maniplex.flag_count(),
            });
        }
        Ok(Self { maniplex, base_flag })
    }

    pub fn base_flag(&self) -> Flag {
        self.base_flag
    }
}

impl From<Maniplex> for RootedManiplex {
    fn from(maniplex: Maniplex) -> Self {
        Self {
            maniplex,
            base_flag: 0,
        }
    }
}

/// Connected components of the subgraph restricted to a set of colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorComponentLabeling {
    pub colors: Vec<Color>,
    /// Component id of each flag; ids are ordered by smallest member flag.
    pub labels: Vec<usize>,
    pub count: usize,
}

impl ColorComponentLabeling {
    pub fn label(&self, f: Flag) -> usize {
        self.labels[f]
    }

    /// The flags of every component, each list sorted.
    pub fn groups(&self) -> Vec<Vec<Flag>> {
        let mut groups = vec![Vec::new(); self.count];
        for (f, &l) in self.labels.iter().enumerate() {
            groups[l].push(f);
        }
        groups
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }

    /// True when every component of `self` lies inside a component of `other`.
    pub fn refines(&self, other: &ColorComponentLabeling) -> bool {
        let mut image = vec![usize::MAX; self.count];
        self.labels.iter().zip(&other.labels).all(|(&a, &b)| {
            if image[a] == usize::MAX {
                image[a] = b;
            }
            image[a] == b
        })
    }
}

/// An `i`-face: one component of the graph with color `i` deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub rank: Color,
    pub id: usize,
    pub flags: Vec<Flag>,
}

impl Face {
    pub fn is_incident(&self, other: &Face) -> bool {
        // both flag lists are sorted
        let (mut a, mut b) = (self.flags.iter().peekable(), other.flags.iter().peekable());
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// Facet graph (or 1-skeleton) of a maniplex.
#[derive(Debug, Clone)]
pub struct FacetGraph {
    pub graph: SimpleGraph,
    /// Which facet each flag belongs to.
    pub facets: ColorComponentLabeling,
    /// Set when some color-`(n-1)` edge stays inside a single facet.
    pub degenerate: bool,
}

/// Colors `i` and `j` fail to commute at `flag`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonCommuting {
    pub flag: Flag,
    pub i: Color,
    pub j: Color,
}

impl fmt::Display for NonCommuting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "colors {} and {} do not commute at flag {}",
            self.i, self.j, self.flag
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolytopeViolation {
    Disconnected,
    NotManiplex(NonCommuting),
    /// `flags` are joined by paths in colors `i..n` and `0..=j` but not `i..=j`.
    PathIntersection { flags: (Flag, Flag), i: Color, j: Color },
}

impl fmt::Display for PolytopeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeViolation::Disconnected => write!(f, "flag graph is disconnected"),
            PolytopeViolation::NotManiplex(w) => write!(f, "{w}"),
            PolytopeViolation::PathIntersection { flags: (a, b), i, j } => write!(
                f,
                "path intersection fails for flags {a} and {b} with (i, j) = ({i}, {j})"
            ),
        }
    }
}

/// A closed walk using an odd number of edges of some color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<Flag>);

/// Two-coloring of facets (or vertices) and the induced flag coloring.
#[derive(Debug, Clone)]
pub struct Bipartition {
    pub faces: ColorComponentLabeling,
    /// `true` for blue flags.
    pub flag_is_blue: Vec<bool>,
    pub red: Vec<usize>,
    pub blue: Vec<usize>,
}

impl Bipartition {
    fn new(faces: ColorComponentLabeling, flag_is_blue: Vec<bool>) -> Self {
        let mut face_blue = vec![false; faces.count];
        for (f, &b) in flag_is_blue.iter().enumerate() {
            face_blue[faces.labels[f]] = b;
        }
        let (blue, red): (Vec<usize>, Vec<usize>) = (0..faces.count).partition(|&i| face_blue[i]);
        Self {
            faces,
            flag_is_blue,
            red,
            blue,
        }
    }
}
