//! Building new polytopes out of old ones.
//!
//! An extension with `k` layers stacks `k` copies of an `n`-polytope `P` and
//! joins them by a perfect matching of color `n`. Flag `f` of layer `i`
//! (1-based) gets index `(i - 1) * F + f`, where `F` is the flag count of `P`.
//! Every extension here matches a flag only to copies of itself in other layers.
//!
//! Mixes and flat amalgamations live on pairs of flags; their flags are
//! numbered in breadth-first order from the base pair.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::factorization::OneFactorization;
use crate::graph::{chromatic_decision, ColoringOutcome};
use crate::maniplex::{Color, Flag, Maniplex, RootedManiplex};

/// Flag `underlying` of the base polytope, in layer `layer` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LayeredFlag {
    pub underlying: Flag,
    pub layer: usize,
}

/// An extension together with its layer structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layered {
    pub maniplex: Maniplex,
    base_flags: usize,
    layers: usize,
}

impl Layered {
    pub fn base_flag_count(&self) -> usize {
        self.base_flags
    }

    pub fn layers(&self) -> usize {
        self.layers
    }

    /// Index of the flag `underlying` in layer `layer` (1-based).
    pub fn flag(&self, underlying: Flag, layer: usize) -> Flag {
        debug_assert!((1..=self.layers).contains(&layer));
        (layer - 1) * self.base_flags + underlying
    }

    pub fn layered_flag(&self, f: Flag) -> LayeredFlag {
        LayeredFlag {
            underlying: f % self.base_flags,
            layer: f / self.base_flags + 1,
        }
    }

    pub fn into_maniplex(self) -> Maniplex {
        self.maniplex
    }
}

/// Stacks `k` copies of `p` and adds color `rank(p)` from `partner(flag, layer)`,
/// both layers 0-based.
fn stack_layers(p: &Maniplex, k: usize, partner: impl Fn(Flag, usize) -> usize) -> Result<Layered> {
    let n = p.rank();
    let fc = p.flag_count();
    let mut adj = Vec::with_capacity(fc * k * (n + 1));
    for layer in 0..k {
        for f in 0..fc {
            adj.extend(p.row(f).iter().map(|&g| layer * fc + g));
            adj.push(partner(f, layer) * fc + f);
        }
    }
    let maniplex = Maniplex::from_table(n + 1, fc * k, adj)?;
    Ok(Layered {
        maniplex,
        base_flags: fc,
        layers: k,
    })
}

fn require_polytope(p: &Maniplex) -> Result<()> {
    p.check_polytope().map_err(|v| Error::NotPolytope(v.to_string()))
}

fn display_name(m: &Maniplex) -> String {
    m.name().unwrap_or("P").to_string()
}

/// `{P, 2}`: two copies of `P` with every flag matched to its twin.
pub fn trivial_extension(p: &Maniplex) -> Result<Layered> {
    require_polytope(p)?;
    let mut out = stack_layers(p, 2, |_, layer| 1 - layer)?;
    out.maniplex.set_name(Some(format!("{}|2", display_name(p))));
    Ok(out)
}

/// The flat extension `P|k` of a facet-bipartite polytope.
///
/// Red flags (the facet class of flag 0) match layers `1-2, 3-4, ...`; blue
/// flags match `2-3, 4-5, ..., k-1`. For `k = 2` this is the trivial extension
/// and `P` need not be facet-bipartite.
pub fn flat_extension(p: &Maniplex, k: usize) -> Result<Layered> {
    if k < 2 {
        return Err(Error::TooFewLayers { k, min: 2 });
    }
    if k % 2 == 1 {
        return Err(Error::OddLayerCount(k));
    }
    if p.rank() == 0 {
        return Err(Error::RankTooSmall { rank: 0, min: 1 });
    }
    if k == 2 {
        return trivial_extension(p);
    }
    require_polytope(p)?;
    let bipartition = p.facet_bipartition().map_err(|c| Error::NotFacetBipartite(c.0))?;
    let blue = bipartition.flag_is_blue;
    let mut out = stack_layers(p, k, |f, layer| match (blue[f], layer % 2) {
        (false, _) => layer ^ 1,
        (true, 1) => (layer + 1) % k,
        (true, _) => (layer + k - 1) % k,
    })?;
    out.maniplex.set_name(Some(format!("{}|{k}", display_name(p))));
    Ok(out)
}

/// Exact `(k - 1)`-colorability of the facet graph: the necessary condition
/// for an `(n-2, n)`-flat extension with `k >= 3` facets isomorphic to `P`.
pub fn check_flat_extension_necessary(p: &Maniplex, k: usize) -> Result<ColoringOutcome> {
    if k < 3 {
        return Err(Error::TooFewLayers { k, min: 3 });
    }
    let fg = p.facet_graph()?;
    if fg.degenerate {
        // a color-(n-1) edge inside one facet can never be matched to two layers
        return Ok(ColoringOutcome::NotColorable);
    }
    Ok(chromatic_decision(&fg.graph, k - 1))
}

/// Extension driven by a perfect 1-factorization of `K_k`.
///
/// `coloring[facet]` is a color in `1..=k-1`; flag `f` of layer `i` is matched
/// to layer `sigma_c(i)`, where `c` is the color of the facet of `f` and
/// `sigma_c` is factor `c` of `fac`.
pub fn factorization_extension(p: &Maniplex, coloring: &[usize], fac: &OneFactorization) -> Result<Layered> {
    let k = fac.k();
    if k % 2 == 1 {
        return Err(Error::OddLayerCount(k));
    }
    if k < 4 {
        return Err(Error::TooFewLayers { k, min: 4 });
    }
    if p.rank() == 0 {
        return Err(Error::RankTooSmall { rank: 0, min: 1 });
    }
    require_polytope(p)?;
    let fg = p.facet_graph()?;
    let facets = fg.graph.node_count();
    if facets < 2 {
        return Err(Error::NotPolytope("extension needs at least two facets".into()));
    }
    if coloring.len() != facets {
        return Err(Error::ColoringLength {
            expected: facets,
            actual: coloring.len(),
        });
    }
    if let Some((facet, &color)) = coloring.iter().enumerate().find(|(_, &c)| c == 0 || c >= k) {
        return Err(Error::ColoringValue { facet, color, max: k - 1 });
    }
    if let Err((a, b)) = fg.graph.check_proper(coloring) {
        return Err(Error::ImproperColoring(a, b));
    }
    if let Err((a, b)) = fac.check_perfect() {
        return Err(Error::NotPerfect(a + 1, b + 1));
    }
    let facet_of = &fg.facets.labels;
    let mut out = stack_layers(p, k, |f, layer| fac.partner(coloring[facet_of[f]] - 1, layer))?;
    out.maniplex.set_name(Some(format!("{}|{k} (1-factorization)", display_name(p))));
    Ok(out)
}

/// [`factorization_extension`] with an exact `(k - 1)`-coloring of the facet
/// graph and the prime-case factorization (requires `k - 1` prime).
pub fn auto_factorization_extension(p: &Maniplex, k: usize) -> Result<Layered> {
    let fac = OneFactorization::prime_case(k)?;
    let coloring = match check_flat_extension_necessary(p, k)? {
        ColoringOutcome::Colorable(c) => c,
        ColoringOutcome::NotColorable => return Err(Error::NotColorable { colors: k - 1 }),
        ColoringOutcome::Undecided => {
            return Err(Error::OutOfRange("facet graph too large for exact coloring".into()))
        }
    };
    factorization_extension(p, &coloring, &fac)
}

/// Left fold of [`flat_extension`] over `ks`.
pub fn iterate_extension(p: &Maniplex, ks: &[usize]) -> Result<Maniplex> {
    ks.iter()
        .try_fold(p.clone(), |acc, &k| flat_extension(&acc, k).map(Layered::into_maniplex))
}

/// A flag of a mix: a pair of flags of the two factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MixFlag {
    pub left: Flag,
    pub right: Flag,
}

/// The result of an `r`-mix, with the pair behind each flag.
#[derive(Debug, Clone)]
pub struct Mix {
    pub rooted: RootedManiplex,
    pub flags: Vec<MixFlag>,
    pub r: usize,
    index: HashMap<MixFlag, Flag>,
}

impl Mix {
    pub fn maniplex(&self) -> &Maniplex {
        &self.rooted.maniplex
    }

    pub fn into_maniplex(self) -> Maniplex {
        self.rooted.maniplex
    }

    pub fn index_of(&self, flag: MixFlag) -> Option<Flag> {
        self.index.get(&flag).copied()
    }
}

/// The `r`-mix of `(P, base_p)` with `(Q, base_q)`.
///
/// Color `i` acts as color `i` on the left factor when `i < rank(P)` and as
/// color `i - r` on the right factor when `i >= r`; an out-of-range color acts
/// as the identity. Only the component of the base pair is kept.
pub fn mix(p: &RootedManiplex, q: &RootedManiplex, r: usize) -> Result<Mix> {
    let (pm, qm) = (&p.maniplex, &q.maniplex);
    let (n, m) = (pm.rank(), qm.rank());
    if n == 0 || r > n - 1 || r + m < n {
        return Err(Error::MixOutOfBounds { r, left: n, right: m });
    }
    let rank = m + r;
    let act = |pair: MixFlag, i: Color| MixFlag {
        left: if i < n { pm.adj(pair.left, i) } else { pair.left },
        right: if i >= r { qm.adj(pair.right, i - r) } else { pair.right },
    };
    let base = MixFlag {
        left: p.base_flag(),
        right: q.base_flag(),
    };
    let mut index = HashMap::from([(base, 0)]);
    let mut flags = vec![base];
    let mut queue = VecDeque::from([base]);
    while let Some(pair) = queue.pop_front() {
        for i in 0..rank {
            let next = act(pair, i);
            if let Entry::Vacant(slot) = index.entry(next) {
                slot.insert(flags.len());
                flags.push(next);
                queue.push_back(next);
            }
        }
    }
    let mut adj = Vec::with_capacity(flags.len() * rank);
    for &pair in &flags {
        adj.extend((0..rank).map(|i| index[&act(pair, i)]));
    }
    let mut maniplex = Maniplex::from_table(rank, flags.len(), adj)?;
    maniplex.set_name(Some(format!("{} <>{r} {}", display_name(pm), display_name(qm))));
    Ok(Mix {
        rooted: RootedManiplex::new(maniplex, 0)?,
        flags,
        r,
        index,
    })
}

/// The flat amalgamation `P|Q`, the `(n - 1)`-mix of a facet-bipartite
/// `n`-polytope with a vertex-bipartite polytope.
pub fn flat_amalgamation(p: &RootedManiplex, q: &RootedManiplex) -> Result<Mix> {
    for m in [&p.maniplex, &q.maniplex] {
        if m.rank() == 0 {
            return Err(Error::RankTooSmall { rank: 0, min: 1 });
        }
        require_polytope(m)?;
    }
    p.maniplex
        .facet_bipartition()
        .map_err(|c| Error::NotFacetBipartite(c.0))?;
    q.maniplex
        .vertex_bipartition()
        .map_err(|c| Error::NotVertexBipartite(c.0))?;
    let mut out = mix(p, q, p.maniplex.rank() - 1)?;
    out.rooted.maniplex.set_name(Some(format!(
        "{}|{}",
        display_name(&p.maniplex),
        display_name(&q.maniplex)
    )));
    Ok(out)
}
