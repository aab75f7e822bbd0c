use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use maniplex::dot::{factorization_dot, maniplex_dot, simple_graph_dot, stg_dot};
use maniplex::{builders, graph, reproduce};
use maniplex::{
    automorphism_group, check_flat_extension_necessary, covers, factorization_extension, flat_amalgamation,
    flat_extension, is_isomorphic, mix, read_mpx, symmetry_type_graph, trivial_extension, write_mpx, ColoringOutcome,
    Maniplex, OneFactorization, RootedManiplex,
};

/// Flag graphs of abstract polytopes: checks, constructions and symmetry.
///
/// Exit status: 0 on success or a true answer, 1 on a false answer (with a
/// witness on stdout), 2 on bad input.
#[derive(Parser)]
#[command(name = "maniplex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Point,
    Segment,
    Polygon,
    Simplex,
    Hypercube,
    Torus44,
    Cuboctahedron,
    RhombicDodecahedron,
    /// The prime-case 1-factorization of K_k, in FAC format.
    Factorization,
}

#[derive(Subcommand)]
enum Command {
    /// Build a standard flag graph (or factorization) and print it.
    Build {
        shape: Shape,
        /// Size parameter: polygon sides, simplex or cube rank, torus side, factorization k.
        size: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Rank, flag count, face census and bipartiteness.
    Info { file: PathBuf },
    /// Check one property; exits 1 with a witness when it fails.
    Verify {
        file: PathBuf,
        #[arg(long, group = "property")]
        maniplex: bool,
        #[arg(long, group = "property")]
        polytope: bool,
        #[arg(long, group = "property", num_args = 2, value_names = ["I", "J"])]
        flat: Option<Vec<usize>>,
    },
    /// Flat extension P|k, or an extension driven by a 1-factorization of K_k.
    Extend {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// FAC file with a perfect 1-factorization of K_k.
        #[arg(long)]
        factorization: Option<PathBuf>,
        /// `auto` or a file with one color in 1..k-1 per facet, in facet order.
        #[arg(long)]
        coloring: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// The trivial extension {P, 2}.
    TrivialExt {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Flat amalgamation P|Q of a facet-bipartite P with a vertex-bipartite Q.
    Amalgamate {
        p: PathBuf,
        q: PathBuf,
        #[arg(long, default_value_t = 0)]
        base_p: usize,
        #[arg(long, default_value_t = 0)]
        base_q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// The r-mix of P and Q.
    Mix {
        p: PathBuf,
        q: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        base_p: usize,
        #[arg(long, default_value_t = 0)]
        base_q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Reverse the colors.
    Dual {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// The flag graph in DOT, edges colored by label.
    Dot { file: PathBuf },
    /// Automorphism group order, flag orbits and regularity.
    Aut { file: PathBuf },
    /// Symmetry type graph.
    Stg {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Whether A covers B; prints the flag map.
    Covers { a: PathBuf, b: PathBuf },
    /// Whether A and B are isomorphic; prints the flag map.
    Iso { a: PathBuf, b: PathBuf },
    /// Facets joined by top-color edges.
    FacetGraph {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Vertices joined by edges.
    Skeleton {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Whether the facet graph is (k-1)-colorable.
    CheckNecessary {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Whether a FAC file is a perfect 1-factorization.
    CheckFactorization {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Run every reference example and print one line per claim.
    PaperExamples,
}

enum Verdict {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path) -> Result<Maniplex> {
    read_mpx(&read_text(path)?).with_context(|| format!("in {}", path.display()))
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(b: bool) -> Verdict {
    if b {
        Verdict::Yes
    } else {
        Verdict::No
    }
}

fn run(command: Command) -> Result<Verdict> {
    match command {
        Command::Build { shape, size, out } => {
            build(shape, size, &out)?;
        }
        Command::Info { file } => info(&load(&file)?)?,
        Command::Verify {
            file,
            maniplex,
            polytope,
            flat,
        } => return verify(&load(&file)?, maniplex, polytope, flat),
        Command::Extend {
            file,
            k,
            factorization,
            coloring,
            out,
        } => {
            let p = load(&file)?;
            let m = match factorization {
                None if coloring.is_none() => flat_extension(&p, k)?.into_maniplex(),
                None => bail!("--coloring needs --factorization"),
                Some(path) => {
                    let fac = OneFactorization::parse(&read_text(&path)?)
                        .with_context(|| format!("in {}", path.display()))?;
                    if fac.k() != k {
                        bail!("factorization is for K_{}, not K_{k}", fac.k());
                    }
                    let colors = match coloring.as_deref() {
                        None | Some("auto") => auto_coloring(&p, k)?,
                        Some(file) => read_coloring(Path::new(file))?,
                    };
                    factorization_extension(&p, &colors, &fac)?.into_maniplex()
                }
            };
            emit(&out, &write_mpx(&m))?;
        }
        Command::TrivialExt { file, out } => {
            emit(&out, &write_mpx(&trivial_extension(&load(&file)?)?.into_maniplex()))?;
        }
        Command::Amalgamate {
            p,
            q,
            base_p,
            base_q,
            out,
        } => {
            let (p, q) = (rooted(&p, base_p)?, rooted(&q, base_q)?);
            emit(&out, &write_mpx(&flat_amalgamation(&p, &q)?.into_maniplex()))?;
        }
        Command::Mix {
            p,
            q,
            r,
            base_p,
            base_q,
            out,
        } => {
            let (p, q) = (rooted(&p, base_p)?, rooted(&q, base_q)?);
            emit(&out, &write_mpx(&mix(&p, &q, r)?.into_maniplex()))?;
        }
        Command::Dual { file, out } => emit(&out, &write_mpx(&load(&file)?.dual()))?,
        Command::Dot { file } => print!("{}", maniplex_dot(&load(&file)?)),
        Command::Aut { file } => {
            let m = load(&file)?;
            let g = automorphism_group(&m)?;
            println!("order: {}", g.order());
            println!("orbits: {}", g.orbit_count);
            println!("regular: {}", yes_no(g.orbit_count == 1));
        }
        Command::Stg { file, dot } => {
            let m = load(&file)?;
            let stg = symmetry_type_graph(&m)?;
            if dot {
                print!("{}", stg_dot(&stg, &format!("stg {}", m.name().unwrap_or("maniplex"))));
            } else {
                print!("{stg}");
            }
        }
        Command::Covers { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let found = covers(&a, &b)?;
            return Ok(report_map("covers", found));
        }
        Command::Iso { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            for m in [&a, &b] {
                if !m.is_connected() {
                    bail!("{m} is disconnected");
                }
            }
            return Ok(report_map("isomorphic", is_isomorphic(&a, &b)));
        }
        Command::FacetGraph { file, dot } => {
            let m = load(&file)?;
            print_graph(&m.facet_graph()?, "facet graph", dot);
        }
        Command::Skeleton { file, dot } => {
            let m = load(&file)?;
            print_graph(&m.skeleton_graph()?, "skeleton", dot);
        }
        Command::CheckNecessary { file, k } => {
            let m = load(&file)?;
            return check_necessary(&m, k);
        }
        Command::CheckFactorization { file, dot } => {
            let fac = OneFactorization::parse(&read_text(&file)?).with_context(|| format!("in {}", file.display()))?;
            if dot {
                print!("{}", factorization_dot(&fac));
            }
            return Ok(match fac.check_perfect() {
                Ok(()) => {
                    println!("perfect: yes");
                    Verdict::Yes
                }
                Err((a, b)) => {
                    println!("perfect: no");
                    println!("witness: factors {} and {} do not form a Hamiltonian cycle", a + 1, b + 1);
                    Verdict::No
                }
            });
        }
        Command::PaperExamples => {
            let claims = reproduce::run_all();
            let mut ok = true;
            for claim in &claims {
                match &claim.outcome {
                    Ok(detail) => println!("{:>2}  verified  {} -> {detail}", claim.id, claim.statement),
                    Err(reason) => {
                        ok = false;
                        println!("{:>2}  FAILED    {} -> {reason}", claim.id, claim.statement);
                    }
                }
            }
            return Ok(verdict(ok));
        }
    }
    Ok(Verdict::Yes)
}

fn build(shape: Shape, size: Option<usize>, out: &Output) -> Result<()> {
    let need = |what: &str| size.ok_or_else(|| anyhow!("this shape needs a size ({what})"));
    let m = match shape {
        Shape::Point => Maniplex::point(),
        Shape::Segment => builders::point_segment(),
        Shape::Polygon => builders::polygon(need("number of sides")?)?,
        Shape::Simplex => builders::simplex(need("rank")?)?,
        Shape::Hypercube => builders::hypercube(need("rank")?)?,
        Shape::Torus44 => builders::torus44(need("side length")?)?,
        Shape::Cuboctahedron => builders::cuboctahedron(),
        Shape::RhombicDodecahedron => builders::rhombic_dodecahedron(),
        Shape::Factorization => {
            return emit(out, &OneFactorization::prime_case(need("k")?)?.to_fac());
        }
    };
    emit(out, &write_mpx(&m))
}

fn info(m: &Maniplex) -> Result<()> {
    println!("name: {}", m.name().unwrap_or("-"));
    println!("rank: {}", m.rank());
    println!("flags: {}", m.flag_count());
    let census: Vec<String> = m.face_census().iter().map(ToString::to_string).collect();
    println!("faces: {}", census.join(" "));
    println!("connected: {}", yes_no(m.is_connected()));
    println!("maniplex: {}", yes_no(m.is_maniplex()));
    println!("polytope: {}", yes_no(m.is_polytope()));
    if m.rank() > 0 {
        println!("facet-bipartite: {}", yes_no(m.is_facet_bipartite()));
        println!("vertex-bipartite: {}", yes_no(m.is_vertex_bipartite()));
    }
    Ok(())
}

fn verify(m: &Maniplex, maniplex: bool, polytope: bool, flat: Option<Vec<usize>>) -> Result<Verdict> {
    if maniplex {
        return Ok(match m.check_maniplex() {
            Ok(()) => {
                println!("maniplex: yes");
                Verdict::Yes
            }
            Err(w) => {
                println!("maniplex: no");
                println!("witness: {w}");
                Verdict::No
            }
        });
    }
    if polytope {
        return Ok(match m.check_polytope() {
            Ok(()) => {
                println!("polytope: yes");
                Verdict::Yes
            }
            Err(w) => {
                println!("polytope: no");
                println!("witness: {w}");
                Verdict::No
            }
        });
    }
    let Some([i, j]) = flat.as_deref().map(|v| [v[0], v[1]]) else {
        bail!("choose one of --maniplex, --polytope, --flat I J");
    };
    let flat = m.is_flat(i, j)?;
    println!("({i},{j})-flat: {}", yes_no(flat));
    if !flat {
        let fi = m.faces(i)?;
        let fj = m.faces(j)?;
        if let Some((a, b)) = fi
            .iter()
            .flat_map(|a| fj.iter().map(move |b| (a, b)))
            .find(|(a, b)| !a.is_incident(b))
        {
            println!("witness: {i}-face {} and {j}-face {} are not incident", a.id, b.id);
        }
    }
    Ok(verdict(flat))
}

fn rooted(path: &Path, base: usize) -> Result<RootedManiplex> {
    Ok(RootedManiplex::new(load(path)?, base)?)
}

fn report_map(what: &str, map: Option<Vec<usize>>) -> Verdict {
    match map {
        Some(map) => {
            println!("{what}: yes");
            let pairs: Vec<String> = map.iter().enumerate().map(|(f, g)| format!("{f}->{g}")).collect();
            println!("map: {}", pairs.join(" "));
            Verdict::Yes
        }
        None => {
            println!("{what}: no");
            Verdict::No
        }
    }
}

fn print_graph(fg: &maniplex::FacetGraph, name: &str, dot: bool) {
    if dot {
        print!("{}", simple_graph_dot(&fg.graph, name));
    } else {
        println!("{}", fg.graph);
        if fg.degenerate {
            println!("note: some top-color edge stays inside one facet");
        }
    }
}

fn check_necessary(m: &Maniplex, k: usize) -> Result<Verdict> {
    let colors = k.checked_sub(1).filter(|&c| c >= 2).ok_or_else(|| anyhow!("--k must be at least 3"))?;
    let fg = m.facet_graph()?;
    let nodes = fg.graph.node_count();
    let name = if fg.graph.is_complete() {
        format!("K_{nodes}")
    } else {
        "facet graph".to_string()
    };
    match check_flat_extension_necessary(m, k)? {
        ColoringOutcome::Colorable(c) => {
            let c: Vec<String> = c.iter().map(ToString::to_string).collect();
            println!("{name} {colors}-colorable: {}", c.join(" "));
            Ok(Verdict::Yes)
        }
        ColoringOutcome::NotColorable => {
            if fg.degenerate {
                println!("{name} not {colors}-colorable (a top-color edge joins a facet to itself)");
            } else {
                println!("{name} not {colors}-colorable");
            }
            Ok(Verdict::No)
        }
        ColoringOutcome::Undecided => bail!(
            "undecided: facet graph has {nodes} nodes, above the exact-coloring cap of {}",
            graph::DEFAULT_NODE_CAP
        ),
    }
}

fn auto_coloring(p: &Maniplex, k: usize) -> Result<Vec<usize>> {
    match check_flat_extension_necessary(p, k)? {
        ColoringOutcome::Colorable(c) => Ok(c),
        ColoringOutcome::NotColorable => bail!("facet graph is not {}-colorable", k - 1),
        ColoringOutcome::Undecided => bail!("facet graph too large for exact coloring"),
    }
}

fn read_coloring(path: &Path) -> Result<Vec<usize>> {
    let text = read_text(path)?;
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse()
                .with_context(|| format!("{}: entry {} `{tok}` is not a color", path.display(), i + 1))
        })
        .collect()
}
