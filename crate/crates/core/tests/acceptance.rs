//! End-to-end acceptance criteria. Runs without the libtest harness and
//! prints one PASS/FAIL line per criterion.

mod common;

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use maniplex::builders::{cuboctahedron, hypercube, point_segment, polygon, rhombic_dodecahedron, simplex, torus44};
use maniplex::reproduce::induced;
use maniplex::{
    amalgam_group_check, automorphism_group, automorphism_parity, chromatic_decision, check_flat_extension_necessary, covers,
    factorization_extension, flat_amalgamation, flat_extension, is_isomorphic, is_regular, iterate_extension,
    symmetry_type_graph, ColoringOutcome, Dart, Maniplex, OneFactorization, Parity, PolytopeViolation, RootedManiplex,
};

fn ext(p: &Maniplex, k: usize) -> Maniplex {
    flat_extension(p, k).unwrap().into_maniplex()
}

fn rooted(m: &Maniplex) -> RootedManiplex {
    m.clone().into()
}

fn facet_bipartite_corpus() -> Vec<Maniplex> {
    vec![polygon(4).unwrap(), polygon(6).unwrap(), cuboctahedron(), torus44(2).unwrap()]
}

fn k_gon_identity() {
    for k in [2, 4, 6, 8] {
        let e = ext(&point_segment(), k);
        let gon = polygon(k).unwrap();
        assert!(is_isomorphic(&e, &gon).is_some(), "segment|{k}");
        assert!(common::isomorphic(&e, &gon), "oracle: segment|{k}");
    }
}

fn torus_map() {
    let e = ext(&polygon(4).unwrap(), 4);
    let t = torus44(2).unwrap();
    assert_eq!(e.flag_count(), 32);
    assert!(is_isomorphic(&e, &t).is_some());
    assert!(common::isomorphic(&e, &t));
}

fn simplex_obstruction() {
    for n in 1..=6 {
        let s = simplex(n).unwrap();
        let fg = s.facet_graph().unwrap();
        assert_eq!(fg.graph.node_count(), n + 1);
        assert!(fg.graph.is_complete(), "simplex({n})");
        // facet adjacency straight from the definition
        let facets = common::faces(&s, n - 1);
        assert_eq!(facets.len(), n + 1);
        for (a, fa) in facets.iter().enumerate() {
            for (b, fb) in facets.iter().enumerate().filter(|&(b, _)| b != a) {
                assert!(fa.iter().any(|&f| fb.contains(&s.adj(f, n - 1))), "facets {a}, {b}");
            }
        }
        if n >= 2 {
            assert_eq!(check_flat_extension_necessary(&s, n + 1).unwrap(), ColoringOutcome::NotColorable);
            assert_eq!(common::count_colorings(n + 1, &fg.graph.edges().collect::<Vec<_>>(), n), 0);
        }
    }
}

fn extension_suite() {
    for p in facet_bipartite_corpus() {
        let n = p.rank();
        for k in [2, 4, 6] {
            let e = ext(&p, k);
            assert!(e.is_polytope(), "{e}");
            assert!(e.is_flat(n - 2, n).unwrap(), "{e}");
            assert!(common::is_flat(&e, n - 2, n), "oracle: {e}");
            let facets = e.faces(n).unwrap();
            assert_eq!(facets.len(), k);
            assert_eq!(common::faces(&e, n).len(), k);
            for facet in &facets {
                let sub = induced(&e, &facet.flags, n);
                assert!(is_isomorphic(&sub, &p).is_some(), "{e}");
                assert!(common::isomorphic(&sub, &p), "oracle: {e}");
            }
            assert!(e.is_facet_bipartite());
            assert!(common::parity(&e, n).is_some());
            if e.flag_count() <= 200 {
                assert!(common::is_polytope(&e), "oracle: {e}");
            }
        }
    }
}

fn automorphism_orders() {
    for p in facet_bipartite_corpus() {
        let gp = automorphism_group(&p).unwrap().order();
        assert_eq!(gp, common::automorphism_count(&p));
        let stg_p = symmetry_type_graph(&p).unwrap();
        for k in [2, 4, 6] {
            let e = ext(&p, k);
            let g = automorphism_group(&e).unwrap().order();
            assert_eq!(g, k * gp, "{e}");
            assert_eq!(common::automorphism_count(&e), k * gp, "oracle: {e}");
            assert_eq!(is_regular(&e).unwrap(), is_regular(&p).unwrap(), "{e}");
            let stg = symmetry_type_graph(&e).unwrap();
            assert_eq!(stg.node_count(), stg_p.node_count());
            assert!(stg.darts.iter().all(|row| row[p.rank()] == Dart::SemiEdge));
            assert_eq!(stg.semi_edge_count(), stg_p.semi_edge_count() + stg_p.node_count());
            assert!(stg.is_isomorphic(&stg_p.with_semi_edges_on_new_color()));
        }
    }
}

fn assert_covers(q: &Maniplex, p: &Maniplex) {
    let map = covers(q, p).unwrap().unwrap_or_else(|| panic!("{q} does not cover {p}"));
    assert!(common::is_covering_map(q, p, &map), "{q} -> {p}");
}

fn covering_lattice() {
    let sq = polygon(4).unwrap();
    let (e8, e4, e2) = (ext(&sq, 8), ext(&sq, 4), ext(&sq, 2));
    assert_covers(&e8, &e4);
    assert_covers(&e4, &e2);
    assert_covers(&e8, &e2);
    assert!(covers(&e4, &e8).unwrap().is_none());
    let (oct, hex, tri) = (polygon(8).unwrap(), polygon(6).unwrap(), polygon(3).unwrap());
    assert_covers(&hex, &tri);
    assert_covers(&ext(&hex, 2), &ext(&tri, 2));
    assert_covers(&oct, &sq);
    for k in [2, 4, 6] {
        assert_covers(&ext(&oct, k), &ext(&sq, k));
    }
}

fn perfect_factorizations() {
    for k in [4, 6, 8, 12, 14] {
        let fac = OneFactorization::prime_case(k).unwrap();
        assert!(fac.is_perfect(), "k = {k}");
        let pairs = fac.pairs();
        assert_eq!(pairs.len(), k - 1);
        let mut edges = HashSet::new();
        for factor in &pairs {
            for &(a, b) in factor {
                assert!(edges.insert((a.min(b), a.max(b))), "k = {k}: repeated edge");
            }
        }
        assert_eq!(edges.len(), k * (k - 1) / 2);
        let tables: Vec<Vec<usize>> = (0..k - 1).map(|c| (0..k).map(|v| fac.partner(c, v)).collect()).collect();
        let mut checked = 0;
        for a in 0..k - 1 {
            for b in a + 1..k - 1 {
                assert!(common::union_is_hamiltonian(&tables[a], &tables[b]), "k = {k}: {a}, {b}");
                checked += 1;
            }
        }
        assert!(checked <= 91);
    }
}

fn non_bipartite_extension() {
    let tri = polygon(3).unwrap();
    let fg = tri.facet_graph().unwrap();
    let coloring = chromatic_decision(&fg.graph, 3).coloring().unwrap().to_vec();
    assert!(fg.graph.edges().all(|(a, b)| coloring[a] != coloring[b]));
    let e = factorization_extension(&tri, &coloring, &OneFactorization::prime_case(4).unwrap())
        .unwrap()
        .into_maniplex();
    assert_eq!((e.rank(), e.flag_count()), (3, 24));
    assert!(e.is_polytope());
    assert!(common::is_polytope(&e));
    assert!(e.is_flat(0, 2).unwrap());
    assert!(common::is_flat(&e, 0, 2));
    let facets = e.faces(2).unwrap();
    assert_eq!(facets.len(), 4);
    for f in &facets {
        assert!(common::isomorphic(&induced(&e, &f.flags, 2), &tri));
    }
}

fn amalgamation_flag_count() {
    let corpus = [
        point_segment(),
        polygon(2).unwrap(),
        polygon(4).unwrap(),
        polygon(6).unwrap(),
        hypercube(3).unwrap(),
        cuboctahedron(),
        rhombic_dodecahedron(),
        torus44(2).unwrap(),
    ];
    let mut pairs = 0;
    for p in corpus.iter().filter(|p| common::parity(p, p.rank() - 1).is_some()) {
        for q in corpus.iter().filter(|q| common::parity(q, 0).is_some()) {
            if p.flag_count() * q.flag_count() > 20000 {
                continue;
            }
            let mix = flat_amalgamation(&rooted(p), &rooted(q)).unwrap();
            assert_eq!(mix.flags.len(), p.flag_count() * q.flag_count() / 2, "{p} | {q}");
            let pc = common::parity(p, p.rank() - 1).unwrap();
            let qc = common::parity(q, 0).unwrap();
            let expected: HashSet<(usize, usize)> = (0..p.flag_count())
                .flat_map(|a| (0..q.flag_count()).map(move |b| (a, b)))
                .filter(|&(a, b)| pc[a] == qc[b])
                .collect();
            let actual: HashSet<(usize, usize)> = mix.flags.iter().map(|f| (f.left, f.right)).collect();
            assert_eq!(actual, expected, "{p} | {q}");
            pairs += 1;
        }
    }
    assert!(pairs >= 20, "{pairs} pairs");
}

fn amalgamation_polytopality() {
    let mix = flat_amalgamation(&rooted(&cuboctahedron()), &rooted(&rhombic_dodecahedron())).unwrap();
    let m = mix.maniplex();
    assert_eq!((m.rank(), m.flag_count()), (5, 4608));
    assert!(m.is_polytope());
    assert!(m.is_flat(1, 3).unwrap());
    assert!(common::is_flat(m, 1, 3));
    assert!(common::is_maniplex(m));
}

fn amalgamation_symmetry() {
    let (p, q) = (rooted(&cuboctahedron()), rooted(&rhombic_dodecahedron()));
    let mix = flat_amalgamation(&p, &q).unwrap();
    let report = amalgam_group_check(&p, &q, &mix).unwrap();
    assert!(report.holds(), "{report:?}");
    for (m, color) in [(&p.maniplex, 2), (&q.maniplex, 0)] {
        for phi in &automorphism_group(m).unwrap().elements {
            assert_eq!(automorphism_parity(m, phi, color).unwrap(), Parity::Even, "{m}");
        }
    }
    assert_eq!(report.amalgam_order, 48 * 48);
    assert_eq!(common::automorphism_count(mix.maniplex()), 2304);
}

fn mix_consistency() {
    let sq = polygon(4).unwrap();
    for k in [4, 6] {
        let mix = flat_amalgamation(&rooted(&sq), &rooted(&polygon(k).unwrap())).unwrap();
        let e = ext(&sq, k);
        assert!(is_isomorphic(mix.maniplex(), &e).is_some(), "k = {k}");
        assert!(common::isomorphic(mix.maniplex(), &e), "oracle: k = {k}");
    }
}

fn tight_iterate() {
    let m = iterate_extension(&polygon(4).unwrap(), &[4]).unwrap();
    assert_eq!(m.flag_count(), 2 * 4 * 4);
    assert!(is_regular(&m).unwrap());
    assert_eq!(common::automorphism_count(&m), 32);
    assert!(m.is_flat(0, 2).unwrap() && common::is_flat(&m, 0, 2));
    assert!(common::is_polytope(&m));
}

fn negative_controls() {
    let t = torus44(1).unwrap();
    assert!(common::is_maniplex(&t));
    assert!(!common::is_polytope(&t));
    match t.check_polytope() {
        Err(PolytopeViolation::PathIntersection { flags: (a, b), i, j }) => {
            assert_ne!(a, b);
            let n = t.rank();
            let up = common::reach(&t, a, &(i..n).collect::<Vec<_>>());
            let down = common::reach(&t, a, &(0..=j).collect::<Vec<_>>());
            let mid = common::reach(&t, a, &(i..=j).collect::<Vec<_>>());
            assert!(up.contains(&b) && down.contains(&b) && !mid.contains(&b));
        }
        other => panic!("torus44(1): {other:?}"),
    }
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
    .unwrap();
    assert!(!common::is_maniplex(&bad));
    let w = bad.check_maniplex().unwrap_err();
    let f = w.flag;
    assert_ne!(bad.adj(bad.adj(bad.adj(bad.adj(f, w.i), w.j), w.i), w.j), f);
}

const CRITERIA: [(&str, fn()); 14] = [
    ("k-gon identity", k_gon_identity),
    ("torus map", torus_map),
    ("simplex obstruction", simplex_obstruction),
    ("extension suite", extension_suite),
    ("automorphism orders", automorphism_orders),
    ("covering lattice", covering_lattice),
    ("perfect 1-factorizations", perfect_factorizations),
    ("non-bipartite extension", non_bipartite_extension),
    ("amalgamation flag count", amalgamation_flag_count),
    ("amalgamation polytopality", amalgamation_polytopality),
    ("amalgamation symmetry", amalgamation_symmetry),
    ("mix consistency", mix_consistency),
    ("tight iterate", tight_iterate),
    ("negative controls", negative_controls),
];

fn main() {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = Vec::new();
    for (n, (name, check)) in CRITERIA.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({elapsed:.2}s)", n + 1),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2}s): {msg}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
