//! Acceptance suite: one test per shipped claim.
//!
//! Each test prints a single `acceptance N (name): pass/FAIL` line with its
//! elapsed time, so `cargo test --test acceptance -- --nocapture` reads as a
//! checklist. Failures re-raise the original assertion so the harness still
//! shows what broke. Elapsed times are informational only — nothing here
//! asserts on wall-clock.

use std::collections::HashMap;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use locdom::{
    check_structure_lemmas, construct_half_ld, enumerate_graphs, generate, iset, ld_number_exact,
    leaves_and_supports, ltd_number_exact, naive_ld_number, normalize_leaves_out,
    normalize_supports_in, open_twins_of_degree, parse_graph6, subcubic_lower_bound,
    sweep_conjecture, to_graph6, triangles, twin_report, verify_ld, verify_ltd, ClaimKind,
    DegreeFilter, EnumFilter, FamilyInstance, FamilySpec, Graph, LdCertificate, SolveBudget,
    SolveError, SweepBound, VertexSet, RULE_TABLE,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Runs one criterion body, printing exactly one summary line.
fn criterion(number: usize, name: &str, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed().as_secs_f64();
    let verdict = if outcome.is_ok() { "pass" } else { "FAIL" };
    println!("acceptance {number} ({name}): {verdict} ({elapsed:.2}s)");
    if let Err(payload) = outcome {
        resume_unwind(payload);
    }
}

/// All connected subcubic graphs on `n` vertices, enumerated once and
/// shared across criteria.
fn connected_subcubic(n: usize) -> Arc<Vec<Graph>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry(n)
        .or_insert_with(|| {
            let filter = EnumFilter {
                n,
                degree: DegreeFilter::Subcubic,
                connected: true,
                twin_free: false,
            };
            Arc::new(enumerate_graphs(filter).expect("enumeration within canonical ceiling"))
        })
        .clone()
}

fn gamma(g: &Graph) -> usize {
    ld_number_exact(g, SolveBudget::unlimited())
        .expect("unbudgeted solve")
        .value
}

fn family(spec: FamilySpec) -> FamilyInstance {
    generate(spec).expect("family parameters are in range")
}

// -- 1 ------------------------------------------------------------------

#[test]
fn c1_small_graph_exact_values() {
    criterion(1, "small-graph exact values", || {
        assert_eq!(gamma(&family(FamilySpec::Path { n: 4 }).graph), 2);
        for n in 3..=6 {
            assert_eq!(
                gamma(&family(FamilySpec::CompleteK { n }).graph),
                n - 1,
                "K_{n}"
            );
        }
        for n in 4..=6 {
            let star = family(FamilySpec::StarK1 { leaves: n - 1 });
            assert_eq!(gamma(&star.graph), n - 1, "star on {n} vertices");
        }
    });
}

// -- 2 ------------------------------------------------------------------

#[test]
fn c2_solver_matches_subset_enumeration() {
    criterion(2, "exact solver vs naive enumeration, n ≤ 8", || {
        let mut checked = 0usize;
        for n in 1..=8 {
            for g in connected_subcubic(n).iter() {
                let fast = ld_number_exact(g, SolveBudget::unlimited()).unwrap();
                let slow = naive_ld_number(g);
                assert_eq!(fast.value, slow.value, "value mismatch on {}", to_graph6(g));
                assert_eq!(
                    fast.witness,
                    slow.witness,
                    "lex-min witness mismatch on {}",
                    to_graph6(g)
                );
                checked += 1;
            }
        }
        assert!(checked > 250, "only {checked} graphs enumerated");
    });
}

// -- 3 ------------------------------------------------------------------

#[test]
fn c3_tight_families_attain_half() {
    criterion(3, "tight families attain n/2", || {
        for k in 1..=2 {
            let inst = family(FamilySpec::TightSubcubic { k });
            assert_eq!(inst.graph.n(), 2 * (4 * k + 1));
            assert!(verify_ld(&inst.graph, &inst.witness).is_valid());
            assert_eq!(inst.witness.len(), 4 * k + 1);
            assert_eq!(gamma(&inst.graph), 4 * k + 1, "k = {k}");
        }
        let inst = family(FamilySpec::TightCubic10);
        let stated: VertexSet = [1, 2, 4, 6, 8].into_iter().collect();
        assert_eq!(inst.witness, stated);
        assert!(verify_ld(&inst.graph, &stated).is_valid());
        assert_eq!(gamma(&inst.graph), 5);
    });
}

// -- 4 ------------------------------------------------------------------

/// Local feasibility inside the 11-vertex hanging gadget: every gadget
/// vertex except the attachment point has its whole closed neighborhood
/// inside the gadget, so any locating-dominating set of the full graph
/// must restrict to a subset that dominates those ten vertices and gives
/// the unchosen ones pairwise-distinct codes. The attachment vertex may
/// be dominated and separated from outside, so it carries no local
/// obligation.
fn gadget_feasible(h: &Graph, t: &VertexSet) -> bool {
    let mut codes: Vec<Vec<usize>> = Vec::new();
    for v in 1..11 {
        if t.contains(v) {
            continue;
        }
        let code: Vec<usize> = iset(h, t, v).unwrap().iter().collect();
        if code.is_empty() {
            return false;
        }
        codes.push(code);
    }
    codes.sort();
    codes.windows(2).all(|w| w[0] != w[1])
}

#[test]
fn c4_twinned_families_exceed_half() {
    criterion(4, "families above n/2", || {
        let inst = family(FamilySpec::Deg1Twins { k: 1 });
        assert_eq!(inst.graph.n(), 12);
        assert_eq!(gamma(&inst.graph), 7, "degree-1 twins block");

        let inst = family(FamilySpec::ClosedReg { r: 4, k: 1 });
        assert_eq!(inst.graph.n(), 15);
        assert_eq!(gamma(&inst.graph), 8, "closed-twin 4-regular chain");

        let inst = family(FamilySpec::Deg2Twins { k: 1 });
        let g = &inst.graph;
        assert_eq!(g.n(), 60);
        assert_eq!(inst.witness.len(), 32);
        assert!(verify_ld(g, &inst.witness).is_valid());

        // Block 0 occupies vertices 0..12: spine vertex 0 plus the
        // 11-vertex gadget 1..=11. Exhaustively confirm no locally
        // feasible subset of the gadget has fewer than 6 vertices, which
        // forces ≥ 6 per gadget, hence ≥ 30 overall.
        let drop: VertexSet = (0..g.n()).filter(|&v| !(1..=11).contains(&v)).collect();
        let (h, _) = g.remove_vertices(&drop);
        assert_eq!(h.n(), 11);
        let mut smallest = usize::MAX;
        for mask in 0u32..(1 << 11) {
            let t: VertexSet = (0..11).filter(|&v| mask & (1 << v) != 0).collect();
            if gadget_feasible(&h, &t) {
                smallest = smallest.min(t.len());
            }
        }
        assert_eq!(smallest, 6, "per-gadget minimum");

        // A full exact solve at n = 60 is attempted under a fixed node
        // budget and reported either way; the hard facts above stand on
        // their own.
        match ld_number_exact(g, SolveBudget::nodes(200_000_000)) {
            Ok(res) => {
                println!("  n=60 exact solve finished: value {}", res.value);
                assert_eq!(res.value, 32);
            }
            Err(SolveError::BudgetExceeded {
                upper,
                lower,
                explored,
                ..
            }) => {
                println!(
                    "  n=60 solve hit the node budget after {explored} nodes: optimum in [{lower}, {upper}]"
                );
                assert!(
                    lower <= 32,
                    "proven lower bound contradicts the verified witness"
                );
                assert!(upper >= 30, "incumbent contradicts the per-gadget bound");
            }
            Err(other) => panic!("unexpected solver error: {other}"),
        }
    });
}

// -- 5 ------------------------------------------------------------------

/// The construction's hypotheses, restated independently of the library:
/// order ≥ 2, subcubic, connected (guaranteed by the enumeration filter),
/// no open twins of degree 1 or 2, and none of the three exceptional
/// graphs.
fn meets_hypotheses(g: &Graph) -> bool {
    let triangle_free = || triangles(g).is_empty();
    let cubic = || (0..g.n()).all(|v| g.degree(v) == 3);
    g.n() >= 2
        && open_twins_of_degree(g, 1).is_empty()
        && open_twins_of_degree(g, 2).is_empty()
        && !(g.n() == 3 && g.edge_count() == 3)
        && !(g.n() == 4 && g.edge_count() == 6)
        && !(g.n() == 6 && g.edge_count() == 9 && cubic() && triangle_free())
}

fn certificate_is_sound(g: &Graph, cert: &LdCertificate) {
    assert!(
        verify_ld(g, &cert.witness).is_valid(),
        "invalid witness on {}",
        to_graph6(g)
    );
    assert!(
        cert.witness.len() <= g.n() / 2,
        "witness of {} exceeds ⌊n/2⌋ on {}",
        cert.witness.len(),
        to_graph6(g)
    );
    assert_eq!(
        cert.replay(),
        cert.witness,
        "replay mismatch on {}",
        to_graph6(g)
    );
    for step in &cert.trace {
        assert!(
            RULE_TABLE.contains(&step.rule_id),
            "unknown rule {}",
            step.rule_id
        );
        assert!(
            !step.rule_id.starts_with("FALLBACK-"),
            "escape rule {} fired on {}",
            step.rule_id,
            to_graph6(g)
        );
    }
}

#[test]
fn c5_construction_covers_every_small_graph() {
    criterion(5, "constructive bound, exhaustive n ≤ 10", || {
        let mut certified = 0usize;
        for n in 2..=10 {
            for g in connected_subcubic(n).iter() {
                if meets_hypotheses(g) {
                    let cert = construct_half_ld(g)
                        .unwrap_or_else(|e| panic!("rejected {}: {e}", to_graph6(g)));
                    certificate_is_sound(g, &cert);
                    assert!(
                        gamma(g) <= g.n() / 2,
                        "exact optimum exceeds ⌊n/2⌋ on {}",
                        to_graph6(g)
                    );
                    certified += 1;
                } else {
                    assert!(
                        construct_half_ld(g).is_err(),
                        "accepted out-of-hypothesis graph {}",
                        to_graph6(g)
                    );
                }
            }
        }
        println!("  certified {certified} graphs");
        assert!(
            certified > 1000,
            "only {certified} graphs met the hypotheses"
        );
    });
}

// -- 6 ------------------------------------------------------------------

#[test]
fn c6_cubic_sweep_with_single_exception() {
    criterion(6, "cubic sweep, n ∈ {6, 8, 10}", || {
        for (n, count) in [(6usize, 2usize), (8, 5), (10, 19)] {
            let filter = EnumFilter {
                n,
                degree: DegreeFilter::Regular(3),
                connected: true,
                twin_free: false,
            };
            let report =
                sweep_conjecture(filter, SweepBound::HalfOrder, SolveBudget::unlimited()).unwrap();
            assert_eq!(report.count(), count, "cubic count at n = {n}");
            let violations = report.violations();
            if n == 6 {
                // K₃,₃ is the lone graph over the bound: γ = 4 > 3.
                assert_eq!(violations.len(), 1);
                assert_eq!(violations[0].gamma, 4);
                assert!(violations[0].open_twin_pairs > 0);
            } else {
                assert!(violations.is_empty(), "bound violated at n = {n}");
            }
            if n == 10 {
                let tight_twin_free = report
                    .records
                    .iter()
                    .filter(|r| {
                        r.open_twin_pairs == 0 && r.closed_twin_pairs == 0 && 2 * r.gamma == r.n
                    })
                    .count();
                assert_eq!(tight_twin_free, 0, "tight twin-free cubic graph at n = 10");
            }
        }
    });
}

// -- 7 ------------------------------------------------------------------

#[test]
fn c7_gadget_witnesses_verify() {
    criterion(7, "stated gadget witnesses", || {
        let cases = [
            (FamilySpec::F3Prime, 2usize),
            (FamilySpec::FGraph { i: 3 }, 3),
            (FamilySpec::FGraph { i: 4 }, 4),
            (FamilySpec::FGraph { i: 5 }, 3),
            (FamilySpec::FGraph { i: 6 }, 4),
        ];
        for (spec, size) in cases {
            let inst = family(spec);
            assert_eq!(inst.witness.len(), size, "{:?}", inst.labels);
            assert!(verify_ld(&inst.graph, &inst.witness).is_valid());
            assert!(
                2 * inst.witness.len() <= inst.graph.n(),
                "stated witness misses n/2 on n = {}",
                inst.graph.n()
            );
        }
    });
}

// -- 8 ------------------------------------------------------------------

#[test]
fn c8_total_variant_exceeds_half() {
    criterion(8, "total-domination variant breaks n/2", || {
        let inst = family(FamilySpec::LtdComb { p: 4 });
        assert_eq!(inst.graph.n(), 12);
        assert_eq!(inst.claim_kind, ClaimKind::ExactLtd);
        assert!(verify_ltd(&inst.graph, &inst.witness).is_valid());
        let solved = ltd_number_exact(&inst.graph, SolveBudget::unlimited()).unwrap();
        assert_eq!(solved.value, 8);
        assert!(2 * solved.value > inst.graph.n());
    });
}

// -- 9 ------------------------------------------------------------------

#[test]
fn c9_property_suites() {
    criterion(
        9,
        "normalization, lower bound, structure, round-trip",
        || {
            // Randomized normalization: 1 000 (graph, valid set) pairs drawn
            // from the enumerated pool with a fixed seed.
            let pool: Vec<Graph> = (3..=8)
                .flat_map(|n| connected_subcubic(n).iter().cloned().collect::<Vec<_>>())
                .collect();
            let mut rng = ChaCha8Rng::seed_from_u64(0x10cd0);
            let mut pairs = 0usize;
            while pairs < 1_000 {
                let g = &pool[rng.random_range(0..pool.len())];
                let mut s: VertexSet = (0..g.n()).filter(|_| rng.random_bool(2.0 / 3.0)).collect();
                if !verify_ld(g, &s).is_valid() {
                    s = (0..g.n()).collect();
                }
                let (leaves, supports) = leaves_and_supports(g);
                let pulled = normalize_supports_in(g, &s).unwrap();
                assert!(verify_ld(g, &pulled).is_valid());
                assert_eq!(pulled.len(), s.len());
                assert!(supports.is_subset(&pulled));
                if open_twins_of_degree(g, 1).is_empty() {
                    let swept = normalize_leaves_out(g, &s).unwrap();
                    assert!(verify_ld(g, &swept).is_valid());
                    assert!(swept.len() <= s.len());
                    assert!(supports.is_subset(&swept));
                    assert!(swept.intersection(&leaves).is_empty());
                }
                pairs += 1;
            }

            // Slater-style floor, structure facts, and graph6 round-trips over
            // the full enumerated range.
            for n in 1..=10 {
                for g in connected_subcubic(n).iter() {
                    let floor = subcubic_lower_bound(g).unwrap();
                    assert!(floor <= gamma(g), "floor breached on {}", to_graph6(g));
                    if twin_report(g).is_twin_free() {
                        let report = check_structure_lemmas(g).unwrap();
                        assert!(
                            report.violations.is_empty(),
                            "structure violation on {}",
                            to_graph6(g)
                        );
                    }
                    assert_eq!(parse_graph6(&to_graph6(g)).unwrap(), *g);
                }
            }
        },
    );
}
