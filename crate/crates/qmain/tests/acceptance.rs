//! Acceptance suite. Each test covers one release criterion, pins its
//! tolerance in code, and prints a PASS line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qmain::canon::canonical_certificate;
use qmain::enumerate::{
    enumerate_bicyclic, equivalence_sweep, labeled_graphs, random_connected_graph,
    verify_classification, ClassificationReport, EnumerationConfig,
};
use qmain::families::{make_family, FamilySpec};
use qmain::graph::{is_connected, Graph};
use qmain::jacobi::eigen_decompose;
use qmain::parabolic::check_parabolic;
use qmain::spectra::{inf_norm, main_eigenvalue_count, signless_laplacian};

const SWEEP_SEED: u64 = 42;
const SWEEP_SAMPLES: usize = 1000;

fn verify_report_12() -> &'static ClassificationReport {
    static REPORT: OnceLock<ClassificationReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let cfg = EnumerationConfig::new(12).expect("12 is in range");
        verify_classification(&cfg)
    })
}

fn family_graphs() -> Vec<(FamilySpec, Graph)> {
    let mut specs = vec![
        FamilySpec::G1,
        FamilySpec::G2,
        FamilySpec::G3,
        FamilySpec::G4,
        FamilySpec::G5,
        FamilySpec::G6,
        FamilySpec::G7,
    ];
    for k in 2..=5 {
        specs.push(FamilySpec::H { k });
    }
    specs
        .into_iter()
        .map(|s| (s, make_family(&s).expect("valid family")))
        .collect()
}

#[test]
fn criterion_1_family_parameters_match_published_values() {
    let start = Instant::now();
    let expected: &[(&str, (i64, i64))] = &[
        ("G1", (7, 4)),
        ("G2", (7, 5)),
        ("G3", (6, 3)),
        ("G4", (6, 2)),
        ("G5", (7, 5)),
        ("G6", (5, 0)),
        ("G7", (6, 3)),
        ("H(2)", (6, 2)),
        ("H(3)", (6, 2)),
        ("H(4)", (6, 2)),
        ("H(5)", (6, 2)),
    ];
    for (spec, g) in family_graphs() {
        let name = spec.to_string();
        let want = expected
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, ab)| *ab)
            .expect("every family is tabled");
        let params = check_parabolic(&g)
            .params()
            .unwrap_or_else(|| panic!("{name} must be parabolic"));
        assert_eq!((params.a, params.b), want, "{name}: integer equality");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 (family parameters, zero tolerance, {elapsed:?}): PASS");
}

#[test]
fn criterion_2_equivalence_sweep_has_no_counterexamples() {
    let start = Instant::now();
    let report = equivalence_sweep(6, SWEEP_SAMPLES, SWEEP_SEED).expect("valid sweep config");
    assert!(
        report.counterexamples.is_empty(),
        "counterexamples: {:?}",
        report.counterexamples
    );
    // All labeled connected graphs on 1..=6 vertices.
    assert_eq!(report.exhaustive_checked, 1 + 1 + 4 + 38 + 728 + 26704);
    assert_eq!(report.random_checked, 3 * SWEEP_SAMPLES);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "criterion 2 (count/verdict equivalence, {} exhaustive + {} random graphs, {elapsed:?}): PASS",
        report.exhaustive_checked, report.random_checked
    );
}

#[test]
fn criterion_3_classification_at_order_12() {
    let start = Instant::now();
    let report = verify_report_12();
    let families: BTreeSet<&str> = report.found.iter().map(|e| e.family.as_str()).collect();
    let expected: BTreeSet<&str> = [
        "G1", "G2", "G3", "G4", "G5", "G6", "G7", "H(2)", "H(3)", "H(4)", "H(5)",
    ]
    .into_iter()
    .collect();
    assert_eq!(report.found.len(), 11, "found: {:#?}", report.found);
    assert_eq!(families, expected);
    assert!(report.missing.is_empty(), "missing: {:?}", report.missing);
    assert!(
        report.unexpected().is_empty(),
        "unexpected: {:?}",
        report.unexpected()
    );
    assert!(
        report.lemma1_counterexamples.is_empty(),
        "equivalence broke on: {:?}",
        report.lemma1_counterexamples
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!(
        "criterion 3 (classification at n <= 12: 11 graphs, none unexpected/missing, {elapsed:?}): PASS"
    );
}

#[test]
fn criterion_4_main_eigenvalues_solve_the_parabolic_quadratic() {
    for (spec, g) in family_graphs() {
        let params = check_parabolic(&g).params().expect("parabolic family");
        let spectrum = eigen_decompose(&signless_laplacian(&g), 1e-12).expect("convergence");
        let mains = spectrum.main_values();
        assert_eq!(mains.len(), 2, "{spec}: two main clusters");
        let (lo, hi) = params.main_eigenvalues();
        assert!(
            (mains[0] - lo).abs() <= 1e-8,
            "{spec}: {} vs {lo}",
            mains[0]
        );
        assert!(
            (mains[1] - hi).abs() <= 1e-8,
            "{spec}: {} vs {hi}",
            mains[1]
        );
    }
    println!("criterion 4 (main eigenvalues at (a +- sqrt(a^2-8b))/2 within 1e-8): PASS");
}

fn three_cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in [1usize, 2, 4] {
            let v = u ^ bit;
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &edges).expect("cube")
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5usize {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen")
}

#[test]
fn criterion_5_regular_graphs_have_one_main_eigenvalue_at_twice_degree() {
    let mut cases: Vec<(String, Graph, usize)> = Vec::new();
    for n in 3..=12 {
        let g = make_family(&FamilySpec::Cycle { n }).unwrap();
        cases.push((format!("C{n}"), g, 2));
    }
    for n in 2..=6 {
        let g = make_family(&FamilySpec::Complete { n }).unwrap();
        cases.push((format!("K{n}"), g, n - 1));
    }
    cases.push(("Q3".into(), three_cube(), 3));
    cases.push(("Petersen".into(), petersen(), 3));
    for (name, g, k) in cases {
        assert_eq!(main_eigenvalue_count(&g), 1, "{name}: exact count");
        let spectrum = eigen_decompose(&signless_laplacian(&g), 1e-12).expect("convergence");
        let mains = spectrum.main_values();
        assert_eq!(mains.len(), 1, "{name}: float count");
        assert!(
            (mains[0] - 2.0 * k as f64).abs() <= 1e-8,
            "{name}: main cluster {} vs {}",
            mains[0],
            2 * k
        );
    }
    println!("criterion 5 (regular graphs: one main eigenvalue at 2k within 1e-8): PASS");
}

/// Float mainness must agree with the exact rank, and the decomposition
/// residual must stay tiny, for one graph.
fn cross_check(g: &Graph, context: &str) {
    let m = signless_laplacian(g);
    let spectrum = eigen_decompose(&m, 1e-12).expect("convergence");
    assert_eq!(
        spectrum.float_main_count(),
        spectrum.exact_main_count,
        "{context}: float vs exact main count"
    );
    assert!(
        spectrum.residual_inf <= 1e-9 * inf_norm(&m).max(f64::MIN_POSITIVE),
        "{context}: residual {}",
        spectrum.residual_inf
    );
}

#[test]
fn criterion_6_exact_and_float_paths_agree_on_the_sweep_corpora() {
    // The corpus of criterion 2: exhaustive small graphs plus the seeded
    // random batches.
    for n in 1..=6 {
        for g in labeled_graphs(n) {
            if is_connected(&g) {
                cross_check(&g, &format!("exhaustive n={n}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SWEEP_SEED);
    for n in 8..=10 {
        for i in 0..SWEEP_SAMPLES {
            let g = random_connected_graph(n, 0.4, &mut rng);
            cross_check(&g, &format!("random n={n} #{i}"));
        }
    }
    // The corpus of criterion 3: every enumerated bicyclic graph.
    let cfg = EnumerationConfig::new(12).expect("in range");
    for g in enumerate_bicyclic(&cfg) {
        cross_check(&g, "bicyclic enumeration");
    }
    println!("criterion 6 (exact/float agreement + Jacobi residual <= 1e-9 * ||L+||_inf): PASS");
}

#[test]
fn criterion_7_structural_audit_passes_on_every_found_graph() {
    let report = verify_report_12();
    assert!(!report.found.is_empty());
    assert!(
        report.audit_failures.is_empty(),
        "audit failures: {:?}",
        report.audit_failures
    );
    for entry in &report.found {
        assert!(entry.audit_pass, "{}: {:?}", entry.family, entry.audit);
    }
    println!(
        "criterion 7 (lemma audit clean on all {} two-main graphs): PASS",
        report.found.len()
    );
}

/// Independent generation route: every labeled graph with exactly n+1
/// edges, connectivity-filtered, deduplicated by certificate.
fn brute_force_bicyclic_count(n: usize) -> usize {
    let mut classes = BTreeSet::new();
    for g in labeled_graphs(n) {
        if g.edge_count() == n + 1 && is_connected(&g) {
            classes.insert(canonical_certificate(&g));
        }
    }
    classes.len()
}

#[test]
fn criterion_8_enumeration_matches_labeled_brute_force() {
    let cfg = EnumerationConfig::new(6).expect("in range");
    let graphs = enumerate_bicyclic(&cfg);
    let count_at = |n: usize| graphs.iter().filter(|g| g.n() == n).count();
    assert_eq!(count_at(4), 1);
    assert_eq!(count_at(5), 5);
    let mut six = 0;
    for n in 4..=6 {
        let brute = brute_force_bicyclic_count(n);
        assert_eq!(count_at(n), brute, "n = {n}");
        if n == 6 {
            six = brute;
        }
    }
    println!("criterion 8 (enumeration vs brute force: 1, 5, {six} classes at n = 4, 5, 6): PASS");
}
