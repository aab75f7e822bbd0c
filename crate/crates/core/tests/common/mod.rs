//! Brute-force reference implementations, written directly from the
//! definitions and sharing no code with the library beyond `Maniplex::adj`.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use maniplex::Maniplex;

/// Flags reachable from `start` along edges whose colors are in `colors`.
pub fn reach(m: &Maniplex, start: usize, colors: &[usize]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for &c in colors {
            let g = m.adj(f, c);
            if seen.insert(g) {
                queue.push_back(g);
            }
        }
    }
    seen
}

/// All `i`-faces as flag sets, in no particular order.
pub fn faces(m: &Maniplex, i: usize) -> Vec<BTreeSet<usize>> {
    let colors: Vec<usize> = (0..m.rank()).filter(|&c| c != i).collect();
    let mut out: Vec<BTreeSet<usize>> = Vec::new();
    let mut covered = vec![false; m.flag_count()];
    for f in 0..m.flag_count() {
        if !covered[f] {
            let face = reach(m, f, &colors);
            for &g in &face {
                covered[g] = true;
            }
            out.push(face);
        }
    }
    out
}

pub fn is_connected(m: &Maniplex) -> bool {
    let all: Vec<usize> = (0..m.rank()).collect();
    reach(m, 0, &all).len() == m.flag_count()
}

/// Commutation of colors at distance at least two; connectivity is not required.
pub fn is_maniplex(m: &Maniplex) -> bool {
    (0..m.flag_count()).all(|f| {
        (0..m.rank()).all(|i| {
            (i + 2..m.rank()).all(|j| m.adj(m.adj(m.adj(m.adj(f, i), j), i), j) == f)
        })
    })
}

/// The path intersection property by exhaustive search: whenever two flags
/// are joined by a path over colors `>= i` and by one over colors `<= j`,
/// they are joined by a path over colors in `i..=j` (the empty path when
/// `i > j`).
pub fn is_polytope(m: &Maniplex) -> bool {
    if !is_connected(m) || !is_maniplex(m) {
        return false;
    }
    let n = m.rank();
    for i in 0..n {
        let upper: Vec<usize> = (i..n).collect();
        for j in 0..n {
            let lower: Vec<usize> = (0..=j).collect();
            let middle: Vec<usize> = (i..=j).collect();
            for f in 0..m.flag_count() {
                let up = reach(m, f, &upper);
                let down = reach(m, f, &lower);
                let mid = reach(m, f, &middle);
                if up.intersection(&down).any(|g| !mid.contains(g)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every `i`-face meets every `j`-face.
pub fn is_flat(m: &Maniplex, i: usize, j: usize) -> bool {
    let fi = faces(m, i);
    let fj = faces(m, j);
    fi.iter().all(|a| fj.iter().all(|b| !a.is_disjoint(b)))
}

/// Two-coloring of the flags where `color` edges switch sides and all other
/// edges keep them; `None` on an odd cycle.
pub fn parity(m: &Maniplex, color: usize) -> Option<Vec<bool>> {
    let mut side: Vec<Option<bool>> = vec![None; m.flag_count()];
    for root in 0..m.flag_count() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let s = side[f].unwrap();
            for c in 0..m.rank() {
                let g = m.adj(f, c);
                let want = s ^ (c == color);
                match side[g] {
                    None => {
                        side[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(t) if t != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Adjacency table after relabeling by BFS from `start`, visiting colors in
/// order. Two connected flag graphs are isomorphic iff some start flag gives
/// the same table as flag 0 of the other.
pub fn bfs_form(m: &Maniplex, start: usize) -> Vec<usize> {
    let mut label = vec![usize::MAX; m.flag_count()];
    let mut order = vec![start];
    label[start] = 0;
    let mut head = 0;
    while head < order.len() {
        let f = order[head];
        head += 1;
        for c in 0..m.rank() {
            let g = m.adj(f, c);
            if label[g] == usize::MAX {
                label[g] = order.len();
                order.push(g);
            }
        }
    }
    order
        .iter()
        .flat_map(|&f| (0..m.rank()).map(move |c| (f, c)))
        .map(|(f, c)| label[m.adj(f, c)])
        .collect()
}

pub fn isomorphic(a: &Maniplex, b: &Maniplex) -> bool {
    if a.rank() != b.rank() || a.flag_count() != b.flag_count() {
        return false;
    }
    let target = bfs_form(a, 0);
    (0..b.flag_count()).any(|s| bfs_form(b, s) == target)
}

/// Number of color-preserving automorphisms of a connected flag graph.
pub fn automorphism_count(m: &Maniplex) -> usize {
    let target = bfs_form(m, 0);
    (0..m.flag_count()).filter(|&s| bfs_form(m, s) == target).count()
}

/// Whether `map` is a color-preserving surjection from `q` onto `p`.
pub fn is_covering_map(q: &Maniplex, p: &Maniplex, map: &[usize]) -> bool {
    map.len() == q.flag_count()
        && (0..q.flag_count()).all(|f| (0..q.rank()).all(|c| map[q.adj(f, c)] == p.adj(map[f], c)))
        && map.iter().collect::<HashSet<_>>().len() == p.flag_count()
}

/// Proper `colors`-colorings of a simple graph, found by enumerating all
/// assignments.
pub fn count_colorings(nodes: usize, edges: &[(usize, usize)], colors: usize) -> usize {
    let mut assignment = vec![0usize; nodes];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(a, b)| assignment[a] != assignment[b]) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == nodes {
                return count;
            }
            assignment[pos] += 1;
            if assignment[pos] < colors {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

/// Whether the union of two perfect matchings on `k` nodes, given as partner
/// tables, is a single `k`-cycle.
pub fn union_is_hamiltonian(a: &[usize], b: &[usize]) -> bool {
    let k = a.len();
    let mut v = 0;
    let mut steps = 0;
    loop {
        v = b[a[v]];
        steps += 2;
        if v == 0 {
            return steps == k;
        }
    }
}

/// Relabels the flags of `m` by the permutation `perm` (old -> new).
pub fn relabel(m: &Maniplex, perm: &[usize]) -> Maniplex {
    let mut inv = vec![0; perm.len()];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let rows = (0..m.flag_count())
        .map(|new| (0..m.rank()).map(|c| perm[m.adj(inv[new], c)]).collect())
        .collect();
    Maniplex::new(m.rank(), rows).unwrap()
}

/// A rank-3 maniplex on `4 * blocks` flags: colors 0 and 2 act inside
/// fixed blocks of four (so they commute) and color 1 is the given perfect
/// matching. The result may be disconnected.
pub fn map_from_matching(blocks: usize, matching: &[usize]) -> Maniplex {
    let rows = (0..4 * blocks)
        .map(|f| vec![f ^ 1, matching[f], f ^ 2])
        .collect();
    Maniplex::new(3, rows).unwrap()
}

/// A perfect matching on `0..2m` read off a permutation: pairs consecutive entries.
pub fn matching_from_perm(perm: &[usize]) -> Vec<usize> {
    let mut partner = vec![0; perm.len()];
    for pair in perm.chunks(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    partner
}
