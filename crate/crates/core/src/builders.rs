//! Flag graphs of the standard examples: polygons, simplices, cubes, toroidal
//! maps, the cuboctahedron and the rhombic dodecahedron.

use crate::error::{Error, Result};
use crate::maniplex::{Flag, Maniplex};

/// The `k`-gon: `2k` flags on a single cycle alternating colors 0 and 1.
pub fn polygon(k: usize) -> Result<Maniplex> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("polygon with {k} sides")));
    }
    let n = 2 * k;
    let rows = (0..n)
        .map(|f| {
            let c0 = f ^ 1;
            let c1 = if f % 2 == 1 { (f + 1) % n } else { (f + n - 1) % n };
            vec![c0, c1]
        })
        .collect();
    Ok(Maniplex::new(2, rows)?.with_name(format!("{{{k}}}")))
}

/// The unique 1-polytope: two flags joined by a color-0 edge.
pub fn point_segment() -> Maniplex {
    Maniplex::new(1, vec![vec![1], vec![0]])
        .expect("segment table is valid")
        .with_name("segment")
}

/// The `n`-simplex. Flags are orderings of the `n + 1` vertices, numbered by
/// lexicographic rank; color `i` swaps positions `i` and `i + 1`.
pub fn simplex(n: usize) -> Result<Maniplex> {
    if !(1..=7).contains(&n) {
        return Err(Error::OutOfRange(format!("simplex of rank {n}")));
    }
    let perms = permutations(n + 1);
    let rows = perms
        .iter()
        .map(|p| {
            (0..n)
                .map(|i| {
                    let mut q = p.clone();
                    q.swap(i, i + 1);
                    permutation_rank(&q)
                })
                .collect()
        })
        .collect();
    Ok(Maniplex::new(n, rows)?.with_name(format!("simplex({n})")))
}

/// The `n`-cube. A flag is a vertex of `{0,1}^n` and an ordering of the
/// coordinate directions; the rank-`r` face spans the first `r` directions.
pub fn hypercube(n: usize) -> Result<Maniplex> {
    if !(1..=5).contains(&n) {
        return Err(Error::OutOfRange(format!("hypercube of rank {n}")));
    }
    let perms = permutations(n);
    let fact = perms.len();
    let index = |vertex: usize, dirs: &[usize]| vertex * fact + permutation_rank(dirs);
    let mut rows = Vec::with_capacity((1 << n) * fact);
    for vertex in 0..(1usize << n) {
        for dirs in &perms {
            let mut row = Vec::with_capacity(n);
            row.push(index(vertex ^ (1 << dirs[0]), dirs));
            for i in 1..n {
                let mut d = dirs.clone();
                d.swap(i - 1, i);
                row.push(index(vertex, &d));
            }
            rows.push(row);
        }
    }
    let name = if n == 3 { "cube".to_string() } else { format!("hypercube({n})") };
    Ok(Maniplex::new(n, rows)?.with_name(name))
}

/// The toroidal map `{4,4}_(s,0)`: an `s x s` grid of squares on the torus.
///
/// A flag is a vertex, a unit direction `a` along its edge and a unit
/// direction `b` perpendicular to `a` pointing into its square.
pub fn torus44(s: usize) -> Result<Maniplex> {
    if s == 0 {
        return Err(Error::OutOfRange("torus44(0)".into()));
    }
    const DIRS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let dir_index = |d: (i64, i64)| DIRS.iter().position(|&e| e == d).expect("unit vector");
    let side = s as i64;
    let wrap = |v: i64| v.rem_euclid(side) as usize;
    // b is a rotated by +90 degrees (side 0) or -90 degrees (side 1)
    let perp = |a: (i64, i64), side: usize| if side == 0 { (-a.1, a.0) } else { (a.1, -a.0) };
    let side_of = |a: (i64, i64), b: (i64, i64)| usize::from(perp(a, 0) != b);
    let index = |x: usize, y: usize, a: (i64, i64), b: (i64, i64)| ((x * s + y) * 4 + dir_index(a)) * 2 + side_of(a, b);

    let mut rows = vec![Vec::new(); 8 * s * s];
    for x in 0..s {
        for y in 0..s {
            for &a in &DIRS {
                for sd in 0..2 {
                    let b = perp(a, sd);
                    let f = index(x, y, a, b);
                    let neg = |v: (i64, i64)| (-v.0, -v.1);
                    let (nx, ny) = (wrap(x as i64 + a.0), wrap(y as i64 + a.1));
                    rows[f] = vec![index(nx, ny, neg(a), b), index(x, y, b, a), index(x, y, a, neg(b))];
                }
            }
        }
    }
    Ok(Maniplex::new(3, rows)?.with_name(format!("{{4,4}}_({s},0)")))
}

/// The cuboctahedron, built as the medial of the cube.
///
/// A medial flag is a cube flag `(v, e, f)` together with a choice of the
/// medial face through it: the vertex figure of `v` or the shrunken face `f`.
/// Flag `2 * cube_flag + t` uses the vertex figure when `t = 0`.
pub fn cuboctahedron() -> Maniplex {
    medial(&hypercube(3).expect("cube")).with_name("cuboctahedron")
}

/// The dual of the cuboctahedron.
pub fn rhombic_dodecahedron() -> Maniplex {
    cuboctahedron().dual().with_name("rhombic dodecahedron")
}

/// Medial of a rank-3 map.
pub fn medial(m: &Maniplex) -> Maniplex {
    assert_eq!(m.rank(), 3, "medial is defined for rank 3");
    let rows = (0..2 * m.flag_count())
        .map(|g| {
            let (f, t) = (g / 2, g % 2);
            let c0 = 2 * m.adj(f, 1) + t;
            let c1 = if t == 0 { 2 * m.adj(f, 2) } else { 2 * m.adj(f, 0) + 1 };
            let c2 = 2 * f + (1 - t);
            vec![c0, c1, c2]
        })
        .collect();
    Maniplex::new(3, rows).expect("medial table is valid")
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).expect("successor");
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

/// Lexicographic rank of a permutation of `0..p.len()`.
fn permutation_rank(p: &[usize]) -> Flag {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}
