//! Automorphism groups, flag orbits and symmetry type graphs.

use std::fmt;

use crate::constructions::{Layered, Mix, MixFlag};
use crate::error::{Error, Result};
use crate::maniplex::{Color, Flag, Maniplex, RootedManiplex};
use crate::morphism::propagate_into;

/// A color-preserving permutation of the flags, stored as an image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism(Box<[u32]>);

impl Automorphism {
    fn from_map(map: &[Flag]) -> Self {
        Self(map.iter().map(|&f| f as u32).collect())
    }

    pub fn identity(flag_count: usize) -> Self {
        Self((0..flag_count as u32).collect())
    }

    #[inline]
    pub fn apply(&self, f: Flag) -> Flag {
        self.0[f] as Flag
    }

    pub fn images(&self) -> Vec<Flag> {
        self.0.iter().map(|&f| f as Flag).collect()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Self(self.0.iter().map(|&f| other.0[f as usize]).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0u32; self.0.len()];
        for (f, &g) in self.0.iter().enumerate() {
            inv[g as usize] = f as u32;
        }
        Self(inv.into())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(f, &g)| f as u32 == g)
    }
}

/// All color-preserving automorphisms of a connected flag graph.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    /// Elements ordered by the image of flag 0; the identity comes first.
    pub elements: Vec<Automorphism>,
    /// Orbit id of each flag, numbered by smallest member flag.
    pub orbit_label: Vec<usize>,
    pub orbit_count: usize,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The element sending flag 0 to `f`, if any.
    pub fn element_sending_base_to(&self, f: Flag) -> Option<&Automorphism> {
        self.elements.iter().find(|a| a.apply(0) == f)
    }
}

/// Computes the automorphism group by anchored propagation from flag 0.
pub fn automorphism_group(m: &Maniplex) -> Result<AutomorphismGroup> {
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    let fc = m.flag_count();
    let mut map = vec![usize::MAX; fc];
    let mut stack = Vec::new();
    let mut hit = vec![false; fc];
    let mut elements = Vec::new();
    for target in 0..fc {
        if !propagate_into(m, m, 0, target, &mut map, &mut stack) {
            continue;
        }
        hit.fill(false);
        if map.iter().all(|&g| !std::mem::replace(&mut hit[g], true)) {
            elements.push(Automorphism::from_map(&map));
        }
    }
    let mut orbit_label = vec![usize::MAX; fc];
    let mut orbit_count = 0;
    for f in 0..fc {
        if orbit_label[f] != usize::MAX {
            continue;
        }
        for a in &elements {
            orbit_label[a.apply(f)] = orbit_count;
        }
        orbit_count += 1;
    }
    Ok(AutomorphismGroup {
        elements,
        orbit_label,
        orbit_count,
    })
}

/// Whether the automorphism group acts transitively on flags.
pub fn is_regular(m: &Maniplex) -> Result<bool> {
    Ok(automorphism_group(m)?.order() == m.flag_count())
}

/// What a color does at one node of a symmetry type graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dart {
    /// The edge leads to another orbit.
    To(usize),
    /// The edge stays in its orbit and is reversed by an automorphism.
    SemiEdge,
}

/// Quotient of a flag graph by the orbits of its automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryTypeGraph {
    pub rank: usize,
    /// `darts[node][color]`.
    pub darts: Vec<Vec<Dart>>,
}

impl SymmetryTypeGraph {
    pub fn node_count(&self) -> usize {
        self.darts.len()
    }

    pub fn semi_edge_count(&self) -> usize {
        self.darts.iter().flatten().filter(|d| **d == Dart::SemiEdge).count()
    }

    /// Adds a new top color carried by a semi-edge at every node.
    pub fn with_semi_edges_on_new_color(&self) -> SymmetryTypeGraph {
        SymmetryTypeGraph {
            rank: self.rank + 1,
            darts: self
                .darts
                .iter()
                .map(|row| row.iter().copied().chain([Dart::SemiEdge]).collect())
                .collect(),
        }
    }

    /// Whether the two graphs agree up to renumbering nodes.
    pub fn is_isomorphic(&self, other: &SymmetryTypeGraph) -> bool {
        if self.rank != other.rank || self.node_count() != other.node_count() {
            return false;
        }
        if self.node_count() == 0 {
            return true;
        }
        // quotients of connected graphs are connected, so node 0's image fixes everything
        (0..other.node_count()).any(|anchor| self.map_from(other, anchor).is_some())
    }

    fn map_from(&self, other: &SymmetryTypeGraph, anchor: usize) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.node_count()];
        let mut used = vec![false; other.node_count()];
        map[0] = anchor;
        used[anchor] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for c in 0..self.rank {
                match (self.darts[v][c], other.darts[map[v]][c]) {
                    (Dart::SemiEdge, Dart::SemiEdge) => {}
                    (Dart::To(w), Dart::To(x)) => {
                        if map[w] == usize::MAX {
                            if used[x] {
                                return None;
                            }
                            map[w] = x;
                            used[x] = true;
                            stack.push(w);
                        } else if map[w] != x {
                            return None;
                        }
                    }
                    _ => return None,
                }
            }
        }
        map.iter().all(|&x| x != usize::MAX).then_some(map)
    }
}

impl fmt::Display for SymmetryTypeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, row) in self.darts.iter().enumerate() {
            write!(f, "{v}:")?;
            for (c, d) in row.iter().enumerate() {
                match d {
                    Dart::To(w) => write!(f, " {c}->{w}")?,
                    Dart::SemiEdge => write!(f, " {c}:semi")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The symmetry type graph of a connected maniplex.
pub fn symmetry_type_graph(m: &Maniplex) -> Result<SymmetryTypeGraph> {
    let group = automorphism_group(m)?;
    Ok(quotient(m, &group))
}

/// The orbit quotient for a precomputed group.
pub fn quotient(m: &Maniplex, group: &AutomorphismGroup) -> SymmetryTypeGraph {
    let mut representative = vec![usize::MAX; group.orbit_count];
    for f in (0..m.flag_count()).rev() {
        representative[group.orbit_label[f]] = f;
    }
    let darts = representative
        .iter()
        .enumerate()
        .map(|(node, &rep)| {
            (0..m.rank())
                .map(|c| {
                    let target = group.orbit_label[m.adj(rep, c)];
                    if target == node {
                        Dart::SemiEdge
                    } else {
                        Dart::To(target)
                    }
                })
                .collect()
        })
        .collect();
    SymmetryTypeGraph { rank: m.rank(), darts }
}

/// Whether every automorphism of `p` lifts to an automorphism of the
/// extension `q` acting on underlying flags as it does on `p`.
pub fn is_hereditary_extension(p: &Maniplex, q: &Layered) -> Result<bool> {
    if q.base_flag_count() != p.flag_count() || q.maniplex.rank() != p.rank() + 1 {
        return Err(Error::LayerMismatch(format!(
            "extension has {} flags per layer at rank {}, base has {} flags at rank {}",
            q.base_flag_count(),
            q.maniplex.rank(),
            p.flag_count(),
            p.rank()
        )));
    }
    let group = automorphism_group(p)?;
    let qm = &q.maniplex;
    let mut map = vec![usize::MAX; qm.flag_count()];
    let mut stack = Vec::new();
    let lifts = |phi: &Automorphism, map: &mut Vec<Flag>, stack: &mut Vec<Flag>| {
        (1..=q.layers()).any(|layer| {
            propagate_into(qm, qm, q.flag(0, 1), q.flag(phi.apply(0), layer), map, stack)
                && (0..p.flag_count()).all(|f| q.layered_flag(map[q.flag(f, 1)]).underlying == phi.apply(f))
        })
    };
    Ok(group.elements.iter().all(|phi| lifts(phi, &mut map, &mut stack)))
}

/// The layer permutation `Lambda_i -> Lambda_{k + offset - i}` (indices mod `k`,
/// 1-based) of an extension.
pub fn layer_reflection(q: &Layered, offset: usize) -> Vec<Flag> {
    let k = q.layers();
    (0..q.maniplex.flag_count())
        .map(|f| {
            let lf = q.layered_flag(f);
            let layer = (k + offset - lf.layer) % k;
            q.flag(lf.underlying, if layer == 0 { k } else { layer })
        })
        .collect()
}

/// Even or odd number of edges of a color along a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of the number of color-`color` edges on any path from flag 0 to its image.
pub fn automorphism_parity(m: &Maniplex, phi: &Automorphism, color: Color) -> Result<Parity> {
    automorphism_parity_from(m, phi, color, 0)
}

fn automorphism_parity_from(m: &Maniplex, phi: &Automorphism, color: Color, base: Flag) -> Result<Parity> {
    if color >= m.rank() {
        return Err(Error::ColorOutOfRange { color, rank: m.rank() });
    }
    let parity = m
        .color_parity(color, base)
        .map_err(|c| Error::ParityUndefined { color, cycle: c.0 })?;
    Ok(parity_of(&parity, base, phi.apply(base)))
}

fn parity_of(parity: &[bool], from: Flag, to: Flag) -> Parity {
    if parity[from] == parity[to] {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Outcome of checking the automorphism group of a flat amalgamation against
/// the parity-matched product of the factors' groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamGroupReport {
    pub left_order: usize,
    pub right_order: usize,
    /// Pairs `(phi, psi)` with `phi` `(n-1)`-even exactly when `psi` is 0-even.
    pub matched_pairs: usize,
    pub amalgam_order: usize,
    /// Every matched pair acts on the amalgamation component-wise.
    pub pairs_act: bool,
}

impl AmalgamGroupReport {
    pub fn holds(&self) -> bool {
        self.pairs_act && self.amalgam_order == self.matched_pairs
    }
}

/// Checks `Gamma(P|Q)` against parity-matched pairs of automorphisms of `P` and `Q`.
pub fn amalgam_group_check(p: &RootedManiplex, q: &RootedManiplex, amalgam: &Mix) -> Result<AmalgamGroupReport> {
    let (pm, qm) = (&p.maniplex, &q.maniplex);
    let n = pm.rank();
    if n == 0 || amalgam.r != n - 1 {
        return Err(Error::MixOutOfBounds {
            r: amalgam.r,
            left: n,
            right: qm.rank(),
        });
    }
    let gp = automorphism_group(pm)?;
    let gq = automorphism_group(qm)?;
    let p_parity = pm
        .color_parity(n - 1, p.base_flag())
        .map_err(|c| Error::NotFacetBipartite(c.0))?;
    let q_parity = qm
        .color_parity(0, q.base_flag())
        .map_err(|c| Error::NotVertexBipartite(c.0))?;
    let m = amalgam.maniplex();
    let mut matched_pairs = 0;
    let mut pairs_act = true;
    for phi in &gp.elements {
        let phi_parity = parity_of(&p_parity, p.base_flag(), phi.apply(p.base_flag()));
        for psi in &gq.elements {
            if phi_parity != parity_of(&q_parity, q.base_flag(), psi.apply(q.base_flag())) {
                continue;
            }
            matched_pairs += 1;
            if pairs_act {
                pairs_act = acts_componentwise(m, amalgam, phi, psi);
            }
        }
    }
    let amalgam_order = automorphism_group(m)?.order();
    Ok(AmalgamGroupReport {
        left_order: gp.order(),
        right_order: gq.order(),
        matched_pairs,
        amalgam_order,
        pairs_act,
    })
}

fn acts_componentwise(m: &Maniplex, amalgam: &Mix, phi: &Automorphism, psi: &Automorphism) -> bool {
    let image: Option<Vec<Flag>> = amalgam
        .flags
        .iter()
        .map(|pair| {
            amalgam.index_of(MixFlag {
                left: phi.apply(pair.left),
                right: psi.apply(pair.right),
            })
        })
        .collect();
    image.is_some_and(|perm| crate::morphism::is_automorphism(m, &perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cuboctahedron, hypercube, point_segment, polygon};
    use crate::constructions::{flat_amalgamation, flat_extension};

    #[test]
    fn small_group_orders() {
        assert_eq!(automorphism_group(&polygon(4).unwrap()).unwrap().order(), 8);
        assert_eq!(automorphism_group(&hypercube(3).unwrap()).unwrap().order(), 48);
        let co = automorphism_group(&cuboctahedron()).unwrap();
        assert_eq!(co.order(), 48);
        assert_eq!(co.orbit_count, 2);
    }

    #[test]
    fn identity_comes_first() {
        let g = automorphism_group(&polygon(5).unwrap()).unwrap();
        assert!(g.elements[0].is_identity());
    }

    #[test]
    fn disconnected_group_errors() {
        let m = Maniplex::new(1, vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
        assert_eq!(automorphism_group(&m).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&hypercube(3).unwrap()).unwrap());
        assert!(!is_regular(&cuboctahedron()).unwrap());
    }

    #[test]
    fn cube_stg_is_one_node() {
        let stg = symmetry_type_graph(&hypercube(3).unwrap()).unwrap();
        assert_eq!(stg.node_count(), 1);
        assert_eq!(stg.semi_edge_count(), 3);
    }

    #[test]
    fn cuboctahedron_stg() {
        let stg = symmetry_type_graph(&cuboctahedron()).unwrap();
        assert_eq!(stg.node_count(), 2);
        // colors 0 and 1 stay in an orbit, color 2 swaps triangle and square flags
        assert_eq!(stg.darts[0], vec![Dart::SemiEdge, Dart::SemiEdge, Dart::To(1)]);
        assert_eq!(stg.darts[1], vec![Dart::SemiEdge, Dart::SemiEdge, Dart::To(0)]);
    }

    #[test]
    fn hexagon_rotation_is_odd() {
        let hex = polygon(6).unwrap();
        let g = automorphism_group(&hex).unwrap();
        // one-step rotation: flag 0 -> flag 0^{1,0}
        let target = hex.walk(0, &[1, 0]);
        let rot = g.element_sending_base_to(target).unwrap();
        assert_eq!(automorphism_parity(&hex, rot, 1).unwrap(), Parity::Odd);
        assert_eq!(automorphism_parity(&hex, &g.elements[0], 1).unwrap(), Parity::Even);
    }

    #[test]
    fn parity_undefined_on_odd_cycles() {
        let tri = polygon(3).unwrap();
        let id = Automorphism::identity(6);
        assert!(matches!(
            automorphism_parity(&tri, &id, 1),
            Err(Error::ParityUndefined { color: 1, .. })
        ));
    }

    #[test]
    fn cuboctahedron_automorphisms_are_two_even() {
        let co = cuboctahedron();
        for phi in automorphism_group(&co).unwrap().elements {
            assert_eq!(automorphism_parity(&co, &phi, 2).unwrap(), Parity::Even);
        }
    }

    #[test]
    fn hereditary_small_cases() {
        let sq = polygon(4).unwrap();
        assert!(is_hereditary_extension(&sq, &flat_extension(&sq, 4).unwrap()).unwrap());
        let seg = point_segment();
        assert!(is_hereditary_extension(&seg, &flat_extension(&seg, 6).unwrap()).unwrap());
        assert!(matches!(
            is_hereditary_extension(&polygon(5).unwrap(), &flat_extension(&sq, 4).unwrap()),
            Err(Error::LayerMismatch(_))
        ));
    }

    #[test]
    fn layer_reflections_are_automorphisms() {
        for k in [2, 4, 6] {
            let ext = flat_extension(&polygon(4).unwrap(), k).unwrap();
            for offset in [3, 5] {
                let perm = layer_reflection(&ext, offset);
                assert!(crate::morphism::is_automorphism(&ext.maniplex, &perm), "k={k} offset={offset}");
            }
        }
    }

    #[test]
    fn square_square_amalgam_group() {
        let sq: RootedManiplex = polygon(4).unwrap().into();
        let amalgam = flat_amalgamation(&sq, &sq).unwrap();
        let report = amalgam_group_check(&sq, &sq, &amalgam).unwrap();
        assert_eq!(report.matched_pairs, 32);
        assert_eq!(report.amalgam_order, 32);
        assert!(report.holds());
    }

    #[test]
    fn stg_isomorphism_ignores_numbering() {
        let c = SymmetryTypeGraph {
            rank: 2,
            darts: vec![vec![Dart::To(1), Dart::SemiEdge], vec![Dart::To(0), Dart::SemiEdge]],
        };
        assert!(c.is_isomorphic(&c.clone()));
        let d = SymmetryTypeGraph {
            rank: 2,
            darts: vec![vec![Dart::SemiEdge, Dart::To(1)], vec![Dart::SemiEdge, Dart::To(0)]],
        };
        assert!(!c.is_isomorphic(&d));
        let e = SymmetryTypeGraph {
            rank: 2,
            darts: vec![vec![Dart::SemiEdge, Dart::SemiEdge], vec![Dart::SemiEdge, Dart::SemiEdge]],
        };
        assert!(!c.is_isomorphic(&e));
    }
}
