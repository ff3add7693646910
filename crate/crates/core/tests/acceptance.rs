//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//!     cargo test -p gislat --test acceptance

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gislat::census::{acyclic_multigraphs, canonical_form, connected_simple_graphs, out_forests, simple_graphs, CanonicalForm};
use gislat::generators::{generator_candidates, minimal_generating_set};
use gislat::lattice::{ConLattice, DEFAULT_LATTICE_CAP};
use gislat::oracle::{verify_isomorphism, OracleCaps};
use gislat::predicates;
use gislat::triple::{self, CoverCase};
use gislat::{CycleFunction, Digraph, Error, ExtPos, VertexSet, WangTriple};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "fork regression", limit: Some(Duration::from_secs(1)), run: fork_regression },
    Criterion { id: 2, name: "oracle equivalence", limit: Some(Duration::from_secs(60)), run: oracle_equivalence },
    Criterion { id: 3, name: "forked vertices decide lower-semimodularity", limit: Some(Duration::from_secs(30)), run: semimodularity_census },
    Criterion { id: 4, name: "lower-semimodular = modular = distributive = comparable ranges", limit: None, run: equivalences },
    Criterion { id: 5, name: "upper-semimodularity", limit: None, run: upper_semimodularity },
    Criterion { id: 6, name: "power-set lattices of out-forests", limit: None, run: power_set },
    Criterion { id: 7, name: "generating sets", limit: None, run: generators },
    Criterion { id: 8, name: "cycle-function calculus on a loop", limit: None, run: cycle_calculus },
    Criterion { id: 9, name: "cover characterisation", limit: None, run: covers },
    Criterion { id: 10, name: "fork-free meet fast path", limit: None, run: fork_free_meet },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|l| elapsed <= l);
        let limit = c.limit.map_or(String::new(), |l| format!(" ≤ {}s", l.as_secs()));
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("too slow; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("[{status}] {:>2}. {} ({:.2}s{limit}): {detail}", c.id, c.name, elapsed.as_secs_f64());
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn fork() -> Digraph {
    Digraph::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("b", "d")]).unwrap()
}

fn parallel() -> Digraph {
    Digraph::build(&["l", "m", "r"], &[("m", "l"), ("m", "l"), ("m", "r"), ("m", "r")]).unwrap()
}

fn enumerate(g: &Digraph) -> Result<ConLattice, String> {
    ConLattice::enumerate(g, DEFAULT_LATTICE_CAP).map_err(|e| e.to_string())
}

/// Every graph with an enumerable lattice used by the sweeps: the
/// multigraph sweep, the connected simple census, and the two named graphs.
fn sweep_graphs() -> Vec<Digraph> {
    let mut gs = acyclic_multigraphs(3, 4);
    gs.extend(connected_simple_graphs(4));
    gs.push(fork());
    gs.push(parallel());
    gs
}

fn fork_regression() -> Outcome {
    let g = fork();
    let l = enumerate(&g)?;
    let fl = l.lattice();
    ensure!(l.len() == 14, "{} elements", l.len());
    ensure!(fl.atoms().len() == 3, "bottom has {} covers", fl.atoms().len());
    ensure!(!fl.is_lower_semimodular(), "lattice is lower-semimodular");
    ensure!(fl.is_upper_semimodular(), "lattice is not upper-semimodular");
    let forked = g.forked_vertices();
    ensure!(g.fmt_set(forked) == "{b}", "forked vertices {}", g.fmt_set(forked));
    Ok("14 elements, 3 atoms, forked {b}".into())
}

/// Acyclic multigraphs found independently: every multiplicity matrix
/// over ordered pairs, kept if acyclic.
fn brute_acyclic_multigraphs(max_vertices: usize, max_edges: usize) -> BTreeSet<CanonicalForm> {
    let mut out = BTreeSet::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let mut mult = vec![0usize; pairs.len()];
        loop {
            if mult.iter().sum::<usize>() <= max_edges {
                let edges: Vec<(usize, usize)> =
                    pairs.iter().zip(&mult).flat_map(|(&p, &k)| std::iter::repeat_n(p, k)).collect();
                let g = Digraph::from_edges(n, &edges).unwrap();
                if g.is_acyclic() {
                    out.insert(canonical_form(&g));
                }
            }
            let Some(k) = (0..mult.len()).find(|&k| mult[k] < max_edges) else { break };
            mult[k] += 1;
            mult[..k].iter_mut().for_each(|m| *m = 0);
        }
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let sweep = acyclic_multigraphs(3, 4);
    let forms: BTreeSet<CanonicalForm> = sweep.iter().map(canonical_form).collect();
    ensure!(forms.len() == sweep.len(), "sweep has isomorphic duplicates");
    let brute = brute_acyclic_multigraphs(3, 4);
    ensure!(forms == brute, "sweep has {} classes, independent count {}", forms.len(), brute.len());

    let mut graphs = sweep;
    graphs.push(fork());
    graphs.push(parallel());
    let mut largest = 0;
    for g in &graphs {
        let r = verify_isomorphism(g, OracleCaps::default()).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{:?}: {}", g.edges(), r.display(g));
        largest = largest.max(r.semigroup_size);
    }
    Ok(format!("{} graphs, largest |G(E)| = {largest}", graphs.len()))
}

/// The fourteen lower-semimodular connected simple graphs on four vertices,
/// as drawn in the reference census; edges point downwards in the drawing.
const FOUR_VERTEX_POSITIVES: [&[(u32, u32)]; 14] = [
    &[(1, 4), (2, 4), (3, 4)],
    &[(5, 7), (6, 7), (7, 8)],
    &[(9, 10), (10, 12), (11, 12)],
    &[(13, 14), (14, 15), (15, 16)],
    &[(25, 27), (26, 27), (27, 28), (26, 28)],
    &[(29, 30), (30, 32), (31, 32), (29, 32)],
    &[(33, 34), (34, 35), (35, 36), (34, 36)],
    &[(37, 38), (38, 39), (39, 40), (37, 40)],
    &[(55, 57), (56, 57), (57, 58), (56, 58), (55, 58)],
    &[(59, 60), (60, 61), (61, 62), (59, 62), (60, 62)],
    &[(73, 74), (74, 75), (75, 76), (73, 75)],
    &[(77, 78), (78, 79), (79, 80), (77, 79), (77, 80)],
    &[(90, 91), (91, 92), (92, 93), (90, 92), (91, 93)],
    &[(94, 95), (95, 96), (96, 97), (94, 96), (94, 97), (95, 97)],
];

fn labelled(edges: &[(u32, u32)]) -> Digraph {
    let mut labels: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    labels.sort_unstable();
    labels.dedup();
    let names: Vec<String> = labels.iter().map(u32::to_string).collect();
    let named: Vec<(String, String)> = edges.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    Digraph::build(&names, &named).unwrap()
}

fn semimodularity_census() -> Outcome {
    let census = connected_simple_graphs(4);
    let mut positive = BTreeSet::new();
    for g in &census {
        let by_graph = predicates::is_lower_semimodular(g);
        let by_lattice = enumerate(g)?.lattice().is_lower_semimodular();
        ensure!(by_graph == by_lattice, "{:?}: predicate {by_graph}, lattice {by_lattice}", g.edges());
        if by_graph && g.vertex_count() == 4 {
            positive.insert(canonical_form(g));
        }
    }
    let expected: BTreeSet<CanonicalForm> = FOUR_VERTEX_POSITIVES.iter().map(|e| canonical_form(&labelled(e))).collect();
    ensure!(expected.len() == 14, "reference list has isomorphic duplicates");
    ensure!(positive == expected, "{} positives, {} shared with the reference", positive.len(), positive.intersection(&expected).count());
    Ok(format!("{} graphs, 14 positive on four vertices, matching the reference set", census.len()))
}

fn equivalences() -> Outcome {
    let census = connected_simple_graphs(4);
    for g in &census {
        let l = enumerate(g)?;
        let fl = l.lattice();
        let lower = fl.is_lower_semimodular();
        let iv = predicates::condition_iv(g).map_err(|e| e.to_string())?;
        ensure!(fl.is_modular() == lower && fl.is_distributive() == lower && iv == lower,
            "{:?}: lower {lower}, modular {}, distributive {}, ranges {iv}", g.edges(), fl.is_modular(), fl.is_distributive());
        // law-based checks against sublattice searches
        ensure!(fl.find_pentagon().is_none() == fl.is_modular(), "{:?}: pentagon search disagrees", g.edges());
        ensure!((fl.find_pentagon().is_none() && fl.find_diamond().is_none()) == fl.is_distributive(),
            "{:?}: diamond search disagrees", g.edges());
    }
    Ok(format!("{} graphs", census.len()))
}

fn upper_semimodularity() -> Outcome {
    let graphs = sweep_graphs();
    for g in &graphs {
        ensure!(enumerate(g)?.lattice().is_upper_semimodular(), "{:?}", g.edges());
    }
    Ok(format!("{} lattices", graphs.len()))
}

fn power_set() -> Outcome {
    let forests = out_forests(5);
    for g in &forests {
        let l = enumerate(g)?;
        let fl = l.lattice();
        let n = g.vertex_count();
        ensure!(l.len() == 1 << n, "{:?}: {} elements", g.edges(), l.len());
        let unions: Vec<VertexSet> = l.elements().iter().map(|t| t.h() | t.w()).collect();
        let distinct: BTreeSet<u64> = unions.iter().map(|u| u.bits()).collect();
        ensure!(distinct.len() == 1 << n, "{:?}: H ∪ W is not injective", g.edges());
        for i in 0..l.len() {
            for j in 0..l.len() {
                ensure!(unions[fl.join(i, j)] == unions[i] | unions[j], "{:?}: join not preserved", g.edges());
                ensure!(unions[fl.meet(i, j)] == unions[i] & unions[j], "{:?}: meet not preserved", g.edges());
            }
        }
        ensure!(fl.is_atomistic(), "{:?}: not atomistic", g.edges());
    }
    let mut converse = 0;
    for g in sweep_graphs().iter().chain(&simple_graphs(4)) {
        if enumerate(g)?.lattice().is_atomistic() {
            ensure!(g.vertices().iter().all(|v| g.out_degree(v) <= 1), "{:?}: atomistic with a branching vertex", g.edges());
            converse += 1;
        }
    }
    Ok(format!("{} forests; {converse} atomistic census lattices all from out-forests", forests.len()))
}

fn generators() -> Outcome {
    let graphs = simple_graphs(4);
    for g in &graphs {
        let l = enumerate(g)?;
        let gens = minimal_generating_set(g).map_err(|e| e.to_string())?;
        ensure!(l.generated_sublattice(&gens).unwrap().len() == l.len(), "{:?}: closure is not everything", g.edges());
        for i in 0..gens.len() {
            let mut fewer = gens.clone();
            fewer.remove(i);
            ensure!(l.generated_sublattice(&fewer).unwrap().len() < l.len(), "{:?}: generator {i} is redundant", g.edges());
        }
    }
    let p = parallel();
    let cands = generator_candidates(&p, 1 << 20).map_err(|e| e.to_string())?;
    let closure = enumerate(&p)?.generated_sublattice(&cands).map_err(|e| e.to_string())?;
    ensure!(!closure.contains(&WangTriple::top(&p)), "parallel-edge closure reaches the top");
    ensure!(minimal_generating_set(&p) == Err(Error::NotSimple), "parallel-edge graph accepted as simple");
    Ok(format!("{} simple graphs; parallel-edge closure has {} of 5 elements", graphs.len(), closure.len()))
}

fn cycle_calculus() -> Outcome {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    fn prime(n: u64) -> bool {
        n >= 2 && (2..n).all(|d| !n.is_multiple_of(d))
    }
    // 0 stands for ∞ in this grid
    let grid: Vec<u64> = (0..=12).collect();
    let ext = |k: u64| if k == 0 { ExtPos::Infinity } else { ExtPos::Finite(k) };
    let divides = |b: u64, a: u64| a == 0 || (b != 0 && a.is_multiple_of(b));

    let g = Digraph::build(&["v"], &[("v", "v")]).unwrap();
    let c = g.cycles()[0].clone();
    let t = |k: u64| {
        let f = CycleFunction::new().with(c.clone(), ext(k));
        WangTriple::validate(&g, VertexSet::EMPTY, VertexSet::singleton(0), f).unwrap()
    };
    let mut checked = 0;
    for &a in &grid {
        for &b in &grid {
            let (ta, tb) = (t(a), t(b));
            let join = triple::join(&g, &ta, &tb).unwrap().value(&c);
            let meet = triple::meet(&g, &ta, &tb).unwrap().value(&c);
            let want_join = ext(if a == 0 { b } else if b == 0 { a } else { gcd(a, b) });
            let want_meet = ext(if a == 0 || b == 0 { 0 } else { a / gcd(a, b) * b });
            ensure!(join == want_join, "join({a}, {b}) = {join}");
            ensure!(meet == want_meet, "meet({a}, {b}) = {meet}");
            let below = triple::leq(&g, &ta, &tb).unwrap();
            ensure!(below == divides(b, a), "leq({a}, {b}) = {below}");
            match triple::covers(&g, &ta, &tb) {
                Ok(cov) => {
                    let want = a != 0 && b != 0 && a != b && a.is_multiple_of(b) && prime(a / b);
                    ensure!(cov == want, "covers({a}, {b}) = {cov}");
                    ensure!(cov == (triple::cover_case(&g, &ta, &tb).unwrap() == Some(CoverCase::CycleValue)), "case mismatch");
                }
                Err(Error::NotComparable) => ensure!(a == b || !divides(b, a), "covers({a}, {b}) refused a comparable pair"),
                Err(e) => return Err(e.to_string()),
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} value pairs over {{1..12, ∞}}"))
}

fn covers() -> Outcome {
    let graphs = sweep_graphs();
    let (mut pairs, mut case_iii) = (0, 0);
    for g in &graphs {
        let l = enumerate(g)?;
        let fl = l.lattice();
        let ts = l.elements();
        let n = ts.len();
        for i in 0..n {
            for j in 0..n {
                if i == j || !fl.leq(i, j) {
                    continue;
                }
                // empty open interval, straight from the order
                let order_cover = !(0..n).any(|k| k != i && k != j && fl.leq(i, k) && fl.leq(k, j));
                let case = triple::cover_case(g, &ts[i], &ts[j]).map_err(|e| e.to_string())?;
                ensure!(case.is_some() == order_cover, "{:?}: {} < {}", g.edges(), ts[i].display(g), ts[j].display(g));
                if case == Some(CoverCase::HereditaryStep) {
                    ensure!(triple::downward_directed_check(g, &ts[i], &ts[j]) == Ok(true),
                        "{:?}: H₂ \\ H₁ not downward directed", g.edges());
                    case_iii += 1;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} comparable pairs in {} lattices, {case_iii} hereditary-step covers", graphs.len()))
}

fn fork_free_meet() -> Outcome {
    let (mut graphs, mut pairs) = (0, 0);
    for g in sweep_graphs().iter().filter(|g| predicates::is_lower_semimodular(g)) {
        let l = enumerate(g)?;
        for a in l.elements() {
            for b in l.elements() {
                let fast = triple::meet_no_fork(g, a, b).map_err(|e| e.to_string())?;
                ensure!(fast == triple::meet(g, a, b).unwrap(), "{:?}: {} ∧ {}", g.edges(), a.display(g), b.display(g));
                pairs += 1;
            }
        }
        graphs += 1;
    }
    Ok(format!("{pairs} pairs over {graphs} fork-free graphs"))
}
