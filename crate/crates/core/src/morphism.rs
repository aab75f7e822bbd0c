//! Color-preserving maps between flag graphs.
//!
//! Every map here is found by anchored propagation: once the image of one
//! flag is fixed, color preservation forces the image of every flag reachable
//! from it.

use crate::error::{Error, Result};
use crate::maniplex::{Flag, Maniplex};

/// Extends `from_flag -> to_flag` to a color-preserving map on the component
/// of `from_flag`. Returns `None` on the first inconsistency.
///
/// Flags outside that component are left as `usize::MAX`.
pub fn propagate(from: &Maniplex, to: &Maniplex, from_flag: Flag, to_flag: Flag) -> Option<Vec<Flag>> {
    let mut map = vec![usize::MAX; from.flag_count()];
    propagate_into(from, to, from_flag, to_flag, &mut map, &mut Vec::new()).then_some(map)
}

/// Same as [`propagate`] with caller-owned buffers, so repeated attempts do not reallocate.
pub(crate) fn propagate_into(
    from: &Maniplex,
    to: &Maniplex,
    from_flag: Flag,
    to_flag: Flag,
    map: &mut [Flag],
    stack: &mut Vec<Flag>,
) -> bool {
    debug_assert_eq!(from.rank(), to.rank());
    map.fill(usize::MAX);
    stack.clear();
    map[from_flag] = to_flag;
    stack.push(from_flag);
    while let Some(f) = stack.pop() {
        let image = map[f];
        for i in 0..from.rank() {
            let g = from.adj(f, i);
            let target = to.adj(image, i);
            if map[g] == usize::MAX {
                map[g] = target;
                stack.push(g);
            } else if map[g] != target {
                return false;
            }
        }
    }
    true
}

/// A color-preserving bijection `a -> b`, if the two are isomorphic.
pub fn is_isomorphic(a: &Maniplex, b: &Maniplex) -> Option<Vec<Flag>> {
    if a.rank() != b.rank() || a.flag_count() != b.flag_count() || !a.is_connected() {
        return None;
    }
    let mut map = vec![usize::MAX; a.flag_count()];
    let mut stack = Vec::new();
    let mut hit = vec![false; b.flag_count()];
    for target in 0..b.flag_count() {
        if !propagate_into(a, b, 0, target, &mut map, &mut stack) {
            continue;
        }
        hit.fill(false);
        let injective = map.iter().all(|&g| !std::mem::replace(&mut hit[g], true));
        if injective {
            return Some(map);
        }
    }
    None
}

/// A color-preserving surjection `q -> p`, if `q` covers `p`.
pub fn covers(q: &Maniplex, p: &Maniplex) -> Result<Option<Vec<Flag>>> {
    if q.rank() != p.rank() {
        return Err(Error::RankMismatch(q.rank(), p.rank()));
    }
    if !q.is_connected() || !p.is_connected() {
        return Err(Error::Disconnected);
    }
    if !q.flag_count().is_multiple_of(p.flag_count()) {
        // fibres of a covering of connected flag graphs all have the same size
        return Ok(None);
    }
    let mut map = vec![usize::MAX; q.flag_count()];
    let mut stack = Vec::new();
    let mut hit = vec![false; p.flag_count()];
    for target in 0..p.flag_count() {
        if !propagate_into(q, p, 0, target, &mut map, &mut stack) {
            continue;
        }
        hit.fill(false);
        for &g in &map {
            hit[g] = true;
        }
        if hit.iter().all(|&h| h) {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

/// Whether `perm` is a color-preserving permutation of the flags of `m`.
pub fn is_automorphism(m: &Maniplex, perm: &[Flag]) -> bool {
    if perm.len() != m.flag_count() {
        return false;
    }
    let mut hit = vec![false; perm.len()];
    for &g in perm {
        if g >= perm.len() || std::mem::replace(&mut hit[g], true) {
            return false;
        }
    }
    (0..m.flag_count()).all(|f| (0..m.rank()).all(|i| perm[m.adj(f, i)] == m.adj(perm[f], i)))
}
