use qspectra::enumeration::{classes, graph6};
use qspectra::spectral::m_interval;
use qspectra::theorems::{Outcome, Registry, Status, TheoremReport};
use qspectra::Graph;
use qspectra_cli::{build_expr, resolve_threshold, run, EXIT_FALSE, EXIT_OK, EXIT_USAGE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn exec(registry: &Registry, args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qspectra").chain(args.iter().copied());
    let code = run(argv, registry, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn std_exec(args: &[&str]) -> (i32, String, String) {
    exec(&Registry::standard(), args)
}

#[test]
fn count_examples() {
    assert_eq!(std_exec(&["count", "C(5)", "--a", "0", "--b", "d1"]), (0, "2\n".into(), String::new()));
    assert_eq!(std_exec(&["count", "Kminus(4)", "--a", "dn", "--b", "2n-2"]).1, "3\n");
    assert_eq!(std_exec(&["count", "proof(fig-n6)", "--a", "0", "--b", "3", "--paranoid"]).1, "4\n");
    // Rational endpoints: C4 has Q-spectrum {4, 2, 2, 0}.
    assert_eq!(std_exec(&["count", "C(4)", "--a", "1/2", "--b", "5/2"]).1, "2\n");
    let (code, out, _) = std_exec(&["count", "K(3)", "--a", "-1", "--b", "dmax", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["method"], "inertia");
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = std_exec(&["count", "union(K(3) K(2))", "--a", "0", "--b", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("byte 11"), "{err}");
    assert_eq!(std_exec(&["count", "K(3)", "--a", "d9", "--b", "1"]).0, EXIT_USAGE);
    assert_eq!(std_exec(&["count", "K(3)", "--a", "2", "--b", "1"]).0, EXIT_USAGE);
    assert_eq!(std_exec(&["verify", "no-such-id", "--max-n", "3"]).0, EXIT_USAGE);
    assert_eq!(std_exec(&["verify", "T-dn-eq-1", "--max-n", "10"]).0, EXIT_USAGE);
    assert_eq!(std_exec(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(std_exec(&["family", "gs", "3", "--t", "1,2"]).0, EXIT_USAGE);
    let (code, out, _) = std_exec(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn verify_json_round_trips() {
    let (code, out, _) = std_exec(&["verify", "T-dn-eq-1", "--max-n", "7", "--json", "-"]);
    assert_eq!(code, EXIT_OK);
    let report: TheoremReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.graphs_checked, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
    for (n, w) in &report.witnesses {
        assert_eq!(w, &[graph6::encode(&Graph::complete(*n).unwrap())]);
    }
    let again: TheoremReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, table, _) = std_exec(&["verify", "L-das", "--max-n", "5", "--jobs", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(table.starts_with("L-das"));
    let saved: TheoremReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(saved.theorem_id, "L-das");
}

#[test]
fn falsified_entry_exits_1() {
    let mut registry = Registry::standard();
    registry.register("X-no-edges", "every graph is edgeless", |max_n| {
        let mut out = Outcome {
            n_min: 1,
            n_max: max_n,
            ..Outcome::default()
        };
        for n in 1..=max_n {
            for g in classes(n)?.iter() {
                out.graphs_checked += 1;
                if g.edge_count() > 0 {
                    out.counterexamples.push(graph6::encode(g));
                }
            }
        }
        Ok(out)
    });
    let (code, out, _) = exec(&registry, &["verify", "X-no-edges", "--max-n", "3", "--json", "-"]);
    assert_eq!(code, EXIT_FALSE);
    let report: TheoremReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.status, Status::Counterexample);
    assert_eq!(report.counterexamples.len(), 1 + 3);
    // Same entry, but at an order where it holds.
    assert_eq!(exec(&registry, &["verify", "X-no-edges", "--max-n", "1"]).0, EXIT_OK);
}

fn random_expr(rng: &mut ChaCha8Rng, budget: usize) -> String {
    let leaf = |rng: &mut ChaCha8Rng| -> String {
        let n = rng.random_range(1..=4);
        match rng.random_range(0..8) {
            0 => format!("K({n})"),
            1 => format!("P({n})"),
            2 => format!("C({})", n + 2),
            3 => format!("S({n})"),
            4 => format!("E({n})"),
            5 => format!("K({n},{})", rng.random_range(1..=3)),
            6 => format!("Kminus({})", n + 1),
            _ => format!("Gs(3)[{},1,{}]", rng.random_range(1..=2), rng.random_range(1..=2)),
        }
    };
    if budget == 0 {
        return leaf(rng);
    }
    match rng.random_range(0..4) {
        0 => format!("union({},{})", random_expr(rng, budget - 1), random_expr(rng, budget - 1)),
        1 => format!("join({},{})", random_expr(rng, budget - 1), random_expr(rng, budget - 1)),
        2 => format!("{}*{}", rng.random_range(1..=2), random_expr(rng, budget - 1)),
        _ => leaf(rng),
    }
}

#[test]
fn degree_symbols_resolve_per_expression() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let registry = Registry::standard();
    let int = |v: usize| num_rational::BigRational::from_integer(v.into());
    for _ in 0..100 {
        let src = random_expr(&mut rng, 3);
        let g = build_expr(&src).unwrap();
        let ds = g.degree_sequence();
        assert_eq!(resolve_threshold("dn", &g).unwrap(), int(ds.min()), "{src}");
        assert_eq!(resolve_threshold("dmax", &g).unwrap(), int(ds.max()), "{src}");
        assert_eq!(resolve_threshold("d1", &g).unwrap(), int(ds.max()), "{src}");
        let last = format!("d{}", g.order());
        assert_eq!(resolve_threshold(&last, &g).unwrap(), int(ds.min()), "{src}");
        let (code, out, _) = exec(&registry, &["count", &src, "--a", "dn", "--b", "2n-2"]);
        assert_eq!(code, EXIT_OK);
        let top = int(2 * g.order() - 2);
        let want = m_interval(&g, &int(ds.min()), &top).unwrap().count;
        assert_eq!(out.trim(), want.to_string(), "{src}");
    }
}

#[test]
fn enumerate_and_search_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g5.g6");
    assert_eq!(std_exec(&["enumerate", "--n", "5", "--out", path.to_str().unwrap()]).0, EXIT_OK);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 34);
    assert!(text.ends_with('\n'));
    let (_, connected, _) = std_exec(&["enumerate", "--n", "5", "--connected"]);
    assert_eq!(connected.lines().count(), 21);

    let first = std_exec(&["search", "P1", "--max-n", "5"]);
    assert_eq!(first, std_exec(&["search", "P1", "--max-n", "5"]));
    let c4 = graph6::encode(&Graph::cycle(4).unwrap().canonical_labeling().into_graph());
    assert!(first.1.lines().any(|l| l == c4));
    assert_eq!(std_exec(&["search", "P3", "--max-n", "5"]).0, EXIT_USAGE);
}

#[test]
fn spectrum_and_family_output() {
    let (code, out, _) = std_exec(&["spectrum", "Gs(3)[2,1,2]", "--exact"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("charpoly  x^5 - 12x^4 + 50x^3 - 92x^2 + 77x - 24"), "{out}");
    assert!(!out.contains("\nq "));
    let (_, out, _) = std_exec(&["spectrum", "P(4)", "--float", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let eig: Vec<f64> = serde_json::from_value(v["eigenvalues"].clone()).unwrap();
    let want = [2.0 + 2f64.sqrt(), 2.0, 2.0 - 2f64.sqrt(), 0.0];
    assert!(eig.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-9));

    // B_3(2) has charpoly (x - 3)(x^2 - 7x + 8).
    let (_, out, _) = std_exec(&["family", "gs", "3", "--t", "2,1,2"]);
    assert!(out.contains("charpoly  x^3 - 10x^2 + 29x - 24"), "{out}");
    let (_, out, _) = std_exec(&["family", "gn", "4"]);
    assert!(out.contains("edges     0-1 1-2 2-3"));
}
