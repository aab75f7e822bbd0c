//! Reference examples for flat extensions and flat amalgamations, each
//! checked end to end with the library's own operations.

use crate::builders::{cuboctahedron, point_segment, polygon, rhombic_dodecahedron, simplex, torus44};
use crate::constructions::{
    check_flat_extension_necessary, factorization_extension, flat_amalgamation, flat_extension, iterate_extension,
};
use crate::factorization::OneFactorization;
use crate::graph::{ColoringOutcome, SimpleGraph};
use crate::maniplex::{Maniplex, PolytopeViolation, RootedManiplex};
use crate::morphism::{covers, is_isomorphic};
use crate::symmetry::{amalgam_group_check, automorphism_group, symmetry_type_graph};

/// One verified statement.
#[derive(Debug, Clone)]
pub struct Claim {
    pub id: usize,
    pub statement: &'static str,
    /// `Ok(detail)` when verified, `Err(reason)` otherwise.
    pub outcome: Result<String, String>,
}

impl Claim {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

type Check = fn() -> Result<String, String>;

const CLAIMS: [(&str, Check); 14] = [
    ("segment|k is the k-gon for k = 2, 4, 6, 8", k_gons),
    ("square|4 is the torus map {4,4}_(2,0)", torus_map),
    ("simplex(n) has facet graph K_(n+1) and no flat extension with n+1 facets", simplex_obstruction),
    ("P|k is an (n-2,n)-flat facet-bipartite polytope with k facets isomorphic to P", extension_suite),
    ("|Gamma(P|k)| = k |Gamma(P)|, regularity and symmetry type graph of P|k", extension_symmetry),
    ("P|8 covers P|4 covers P|2, and covers lift to extensions", covering_lattice),
    ("prime-case 1-factorizations of K_k are perfect for k = 4, 6, 8, 12, 14", perfect_factorizations),
    ("triangle with K_4 factorization gives a (0,2)-flat 24-flag polytope", triangle_extension),
    ("|F(P|Q)| = |F(P)| |F(Q)| / 2 and flags are same-colored pairs", amalgam_flag_count),
    ("cuboctahedron | rhombic dodecahedron is a (1,3)-flat rank-5 polytope with 4608 flags", amalgam_polytope),
    ("|Gamma(cuboctahedron | rhombic dodecahedron)| = 48^2", amalgam_symmetry),
    ("square | k-gon is isomorphic to square|k for k = 4, 6", mix_consistency),
    ("square|4 iterated is the tight polytope with 32 flags", tight_iterate),
    ("{4,4}_(1,0) fails path intersection; a non-commuting graph is not a maniplex", negative_controls),
];

pub fn claim_count() -> usize {
    CLAIMS.len()
}

/// Runs every claim in order.
pub fn run_all() -> Vec<Claim> {
    (1..=CLAIMS.len()).map(run).collect()
}

/// Runs claim `id` (1-based).
pub fn run(id: usize) -> Claim {
    let (statement, check) = CLAIMS[id - 1];
    Claim {
        id,
        statement,
        outcome: check(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn k_gons() -> Result<String, String> {
    for k in [2, 4, 6, 8] {
        let ext = flat_extension(&point_segment(), k).map_err(err)?.into_maniplex();
        ensure(is_isomorphic(&ext, &polygon(k).map_err(err)?).is_some(), || format!("k = {k}"))?;
    }
    Ok("isomorphic for all k".into())
}

fn torus_map() -> Result<String, String> {
    let ext = flat_extension(&polygon(4).map_err(err)?, 4).map_err(err)?.into_maniplex();
    ensure(ext.flag_count() == 32, || format!("{} flags", ext.flag_count()))?;
    ensure(is_isomorphic(&ext, &torus44(2).map_err(err)?).is_some(), || "not isomorphic".into())?;
    Ok("32 flags, isomorphic".into())
}

fn simplex_obstruction() -> Result<String, String> {
    for n in 1..=6 {
        let s = simplex(n).map_err(err)?;
        let fg = s.facet_graph().map_err(err)?;
        ensure(fg.graph == SimpleGraph::complete(n + 1), || format!("facet graph of simplex({n})"))?;
        if n >= 2 {
            let outcome = check_flat_extension_necessary(&s, n + 1).map_err(err)?;
            ensure(outcome == ColoringOutcome::NotColorable, || format!("simplex({n}): {outcome:?}"))?;
        }
    }
    Ok("K_(n+1) for n <= 6; not n-colorable".into())
}

fn facet_bipartite_corpus() -> Result<Vec<Maniplex>, String> {
    Ok(vec![
        polygon(4).map_err(err)?,
        polygon(6).map_err(err)?,
        cuboctahedron(),
        torus44(2).map_err(err)?,
    ])
}

fn extension_suite() -> Result<String, String> {
    let mut checked = 0;
    for p in facet_bipartite_corpus()? {
        let n = p.rank();
        for k in [2, 4, 6] {
            let ext = flat_extension(&p, k).map_err(err)?.into_maniplex();
            let tag = || format!("{} | {k}", p.name().unwrap_or("P"));
            ext.check_polytope().map_err(|v| format!("{}: {v}", tag()))?;
            ensure(ext.is_flat(n - 2, n).map_err(err)?, || format!("{}: not flat", tag()))?;
            let facets = ext.faces(n).map_err(err)?;
            ensure(facets.len() == k, || format!("{}: {} facets", tag(), facets.len()))?;
            for facet in &facets {
                let sub = induced(&ext, &facet.flags, n);
                ensure(is_isomorphic(&sub, &p).is_some(), || format!("{}: facet not isomorphic", tag()))?;
            }
            ensure(ext.is_facet_bipartite(), || format!("{}: not facet-bipartite", tag()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} extensions verified"))
}

/// The rank-`rank` flag graph induced on `flags` by colors `0..rank`.
pub fn induced(m: &Maniplex, flags: &[usize], rank: usize) -> Maniplex {
    let mut index = vec![usize::MAX; m.flag_count()];
    for (i, &f) in flags.iter().enumerate() {
        index[f] = i;
    }
    let rows = flags
        .iter()
        .map(|&f| (0..rank).map(|c| index[m.adj(f, c)]).collect())
        .collect();
    Maniplex::new(rank, rows).expect("color component is closed under its colors")
}

fn extension_symmetry() -> Result<String, String> {
    for p in facet_bipartite_corpus()? {
        let gp = automorphism_group(&p).map_err(err)?;
        let stg_p = symmetry_type_graph(&p).map_err(err)?;
        for k in [2, 4, 6] {
            let ext = flat_extension(&p, k).map_err(err)?.into_maniplex();
            let tag = || format!("{} | {k}", p.name().unwrap_or("P"));
            let g = automorphism_group(&ext).map_err(err)?;
            ensure(g.order() == k * gp.order(), || format!("{}: order {}", tag(), g.order()))?;
            let regular = g.order() == ext.flag_count();
            ensure(regular == (gp.order() == p.flag_count()), || format!("{}: regularity", tag()))?;
            let stg = symmetry_type_graph(&ext).map_err(err)?;
            ensure(stg.is_isomorphic(&stg_p.with_semi_edges_on_new_color()), || {
                format!("{}: symmetry type graph", tag())
            })?;
        }
    }
    Ok("orders, regularity and symmetry type graphs agree".into())
}

fn covering_lattice() -> Result<String, String> {
    let sq = polygon(4).map_err(err)?;
    let e = |p: &Maniplex, k| flat_extension(p, k).map(|l| l.into_maniplex()).map_err(err);
    let (e8, e4, e2) = (e(&sq, 8)?, e(&sq, 4)?, e(&sq, 2)?);
    ensure(covers(&e8, &e4).map_err(err)?.is_some(), || "square|8 -> square|4".into())?;
    ensure(covers(&e4, &e2).map_err(err)?.is_some(), || "square|4 -> square|2".into())?;
    let (oct, sq) = (polygon(8).map_err(err)?, polygon(4).map_err(err)?);
    ensure(covers(&oct, &sq).map_err(err)?.is_some(), || "octagon -> square".into())?;
    for k in [2, 4, 6] {
        ensure(covers(&e(&oct, k)?, &e(&sq, k)?).map_err(err)?.is_some(), || {
            format!("octagon|{k} -> square|{k}")
        })?;
    }
    let (hex, tri) = (polygon(6).map_err(err)?, polygon(3).map_err(err)?);
    ensure(covers(&e(&hex, 2)?, &e(&tri, 2)?).map_err(err)?.is_some(), || "hexagon|2 -> triangle|2".into())?;
    Ok("all covers found".into())
}

fn perfect_factorizations() -> Result<String, String> {
    let mut pairs = 0;
    for k in [4, 6, 8, 12, 14] {
        let fac = OneFactorization::prime_case(k).map_err(err)?;
        fac.check_perfect()
            .map_err(|(a, b)| format!("k = {k}: factors {} and {}", a + 1, b + 1))?;
        pairs += (k - 1) * (k - 2) / 2;
    }
    Ok(format!("{pairs} factor pairs Hamiltonian"))
}

fn triangle_extension() -> Result<String, String> {
    let tri = polygon(3).map_err(err)?;
    let fg = tri.facet_graph().map_err(err)?;
    let coloring = match crate::graph::chromatic_decision(&fg.graph, 3) {
        ColoringOutcome::Colorable(c) => c,
        other => return Err(format!("triangle facet graph: {other:?}")),
    };
    let fac = OneFactorization::prime_case(4).map_err(err)?;
    let ext = factorization_extension(&tri, &coloring, &fac).map_err(err)?.into_maniplex();
    ensure(ext.rank() == 3 && ext.flag_count() == 24, || format!("{ext}"))?;
    ext.check_polytope().map_err(err)?;
    ensure(ext.is_flat(0, 2).map_err(err)?, || "not (0,2)-flat".into())?;
    let facets = ext.faces(2).map_err(err)?;
    ensure(facets.len() == 4, || format!("{} facets", facets.len()))?;
    for f in &facets {
        ensure(is_isomorphic(&induced(&ext, &f.flags, 2), &tri).is_some(), || "facet not a triangle".into())?;
    }
    Ok("24 flags, 4 triangles, (0,2)-flat".into())
}

fn amalgam_corpus() -> Result<Vec<Maniplex>, String> {
    Ok(vec![
        point_segment(),
        polygon(2).map_err(err)?,
        polygon(4).map_err(err)?,
        polygon(6).map_err(err)?,
        crate::builders::hypercube(3).map_err(err)?,
        cuboctahedron(),
        rhombic_dodecahedron(),
        torus44(2).map_err(err)?,
    ])
}

fn amalgam_flag_count() -> Result<String, String> {
    let corpus = amalgam_corpus()?;
    let mut checked = 0;
    for p in corpus.iter().filter(|p| p.is_facet_bipartite()) {
        for q in corpus.iter().filter(|q| q.is_vertex_bipartite()) {
            if p.flag_count() * q.flag_count() > 20000 {
                continue;
            }
            let (rp, rq): (RootedManiplex, RootedManiplex) = (p.clone().into(), q.clone().into());
            let amalgam = flat_amalgamation(&rp, &rq).map_err(err)?;
            let expected = p.flag_count() * q.flag_count() / 2;
            let tag = || format!("{} | {}", p.name().unwrap_or("P"), q.name().unwrap_or("Q"));
            ensure(amalgam.flags.len() == expected, || format!("{}: {} flags", tag(), amalgam.flags.len()))?;
            let pc = p.facet_bipartition().map_err(|_| tag())?.flag_is_blue;
            let qc = q.vertex_bipartition().map_err(|_| tag())?.flag_is_blue;
            ensure(amalgam.flags.iter().all(|f| pc[f.left] == qc[f.right]), || {
                format!("{}: mixed-color flag", tag())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} amalgamations"))
}

fn cubo_rhombic() -> Result<(RootedManiplex, RootedManiplex, crate::constructions::Mix), String> {
    let p: RootedManiplex = cuboctahedron().into();
    let q: RootedManiplex = rhombic_dodecahedron().into();
    let m = flat_amalgamation(&p, &q).map_err(err)?;
    Ok((p, q, m))
}

fn amalgam_polytope() -> Result<String, String> {
    let (_, _, m) = cubo_rhombic()?;
    let m = m.maniplex();
    ensure(m.rank() == 5 && m.flag_count() == 4608, || format!("{m}"))?;
    m.check_polytope().map_err(err)?;
    ensure(m.is_flat(1, 3).map_err(err)?, || "not (1,3)-flat".into())?;
    Ok("rank 5, 4608 flags, polytope, (1,3)-flat".into())
}

fn amalgam_symmetry() -> Result<String, String> {
    let (p, q, m) = cubo_rhombic()?;
    let report = amalgam_group_check(&p, &q, &m).map_err(err)?;
    ensure(report.holds() && report.amalgam_order == 2304, || format!("{report:?}"))?;
    Ok(format!("order {}", report.amalgam_order))
}

fn mix_consistency() -> Result<String, String> {
    let sq = polygon(4).map_err(err)?;
    for k in [4, 6] {
        let amalgam = flat_amalgamation(&sq.clone().into(), &polygon(k).map_err(err)?.into()).map_err(err)?;
        let ext = flat_extension(&sq, k).map_err(err)?.into_maniplex();
        ensure(is_isomorphic(amalgam.maniplex(), &ext).is_some(), || format!("k = {k}"))?;
    }
    Ok("isomorphic".into())
}

fn tight_iterate() -> Result<String, String> {
    let m = iterate_extension(&polygon(4).map_err(err)?, &[4]).map_err(err)?;
    ensure(m.flag_count() == 2 * 4 * 4, || format!("{m}"))?;
    ensure(automorphism_group(&m).map_err(err)?.order() == m.flag_count(), || "not regular".into())?;
    Ok("32 flags, regular".into())
}

fn negative_controls() -> Result<String, String> {
    let t = torus44(1).map_err(err)?;
    let witness = match t.check_polytope() {
        Err(v @ PolytopeViolation::PathIntersection { .. }) => v.to_string(),
        other => return Err(format!("torus44(1): {other:?}")),
    };
    let bad = Maniplex::new(
        3,
        vec![
            vec![1, 3, 5],
            vec![0, 4, 2],
            vec![3, 5, 1],
            vec![2, 0, 4],
            vec![5, 1, 3],
            vec![4, 2, 0],
        ],
    )
    .map_err(err)?;
    let w = bad.check_maniplex().err().ok_or("commutation failure not detected")?;
    Ok(format!("{witness}; {w}"))
}
