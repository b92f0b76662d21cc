//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use soltes::families::{
    cycle, dual_k5_3, duplicated_dual_k4, hemi_dodecahedron, interval_family, multipartite_hk, small_example,
    steiner_2_4_13, theorem_order_n, twelve_vertex_6uniform,
};
use soltes::formats::{parse_graph6, parse_hg, write_graph6, write_hg};
use soltes::hypercore::{is_isomorphic, Uniformity};
use soltes::metrics::{delta_report, diameter, distances_from, is_soltes, transmission, wiener, Distance};
use soltes::screen::{appendix_fixtures, screen_records, Transform};
use soltes::search::{bounds_check, check_3uniform_diam1, search_by_order, search_size5};
use soltes::Hypergraph;

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn w(h: &Hypergraph) -> u64 {
    wiener(h).finite().expect("connected")
}

/// `W(H)` and every `W(H - v)` equal `expected`.
fn all_deletions_equal(h: &Hypergraph, expected: u64) {
    let r = delta_report(h);
    assert_eq!(r.w, Distance::Finite(expected));
    for row in &r.rows {
        assert_eq!(row.w_minus, Distance::Finite(expected), "deleting {}", row.vertex);
    }
    assert!(r.verdict);
}

fn c1() {
    let c11 = cycle(11).unwrap();
    let n = 11u64;
    assert_eq!(w(&c11), 165);
    assert_eq!(w(&c11), n * (n * n - 1) / 8);
    assert!(is_soltes(&c11));
    all_deletions_equal(&c11, 165);
}

fn c2() {
    for n in 5..=8 {
        let h = small_example(n).unwrap();
        assert!(is_soltes(&h), "n = {n}");
        all_deletions_equal(&h, binom(n as u64, 2));
    }
    // order 7 degrees
    let d = small_example(7).unwrap().degrees();
    assert_eq!((d.min, d.max), (4, 6));
    // order 8 deletion of vertex 0 splits into odds, evens and cross pairs
    let minus = small_example(8).unwrap().delete_vertex(0).unwrap();
    // after the shift, old odd vertex 2j+1 is 2j and old even 2j is 2j-1
    let odds = [0usize, 2, 4, 6];
    let evens = [1usize, 3, 5];
    let dist = |a: usize, b: usize| distances_from(&minus, a).unwrap().dist[b].finite().unwrap();
    let within = |s: &[usize]| -> u64 {
        s.iter().enumerate().flat_map(|(i, &a)| s[i + 1..].iter().map(move |&b| (a, b))).map(|(a, b)| dist(a, b)).sum()
    };
    let cross: u64 = evens.iter().flat_map(|&e| odds.iter().map(move |&o| (e, o))).map(|(e, o)| dist(e, o)).sum();
    assert_eq!((within(&odds), within(&evens), cross), (6, 4, 18));
    assert_eq!(w(&minus), 28);
}

fn c3() {
    for n in 2..=5 {
        let r = bounds_check(n).unwrap();
        assert!(r.holds(), "n = {n}: {r:?}");
        assert_eq!(r.upper_equality, (1..=n as u64).product::<u64>() / 2, "labeled paths, n = {n}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut paths = 0;
    for n in 6..=10u64 {
        for _ in 0..10_000 {
            let h = common::random_connected(&mut rng, n as usize);
            let x = w(&h);
            assert!(binom(n, 2) <= x && x <= binom(n + 1, 3), "{h}");
            if x == binom(n + 1, 3) {
                assert!(common::is_path(&h), "upper bound attained by a non-path: {h}");
                paths += 1;
            }
        }
    }
    assert!(paths > 0, "the sample should contain paths");
}

fn c4() {
    for n in 2..=4 {
        let r = search_by_order(n).unwrap();
        assert!(r.witnesses.is_empty(), "n = {n}");
        assert!(r.all_checks_passed());
    }
    let r = search_by_order(5).unwrap();
    assert_eq!(r.witnesses.len(), 1);
    assert!(is_isomorphic(&r.witnesses[0], &small_example(5).unwrap()));
    assert!(r.all_checks_passed(), "{}", r.render_text(false));
}

fn c5() {
    let r = search_size5();
    assert_eq!(r.witnesses.len(), 1);
    assert!(is_isomorphic(&r.witnesses[0], &dual_k5_3()));
    assert_eq!(w(&r.witnesses[0]), 45);
    assert_eq!(45, binom(9, 2) + 9);
    assert!(r.all_checks_passed(), "{}", r.render_text(false));
}

fn c6() {
    let h = hemi_dodecahedron();
    assert_eq!(h.order(), 10);
    all_deletions_equal(&h, 45);
    assert_eq!(45, binom(9, 2) + 3 * 4 - binom(3, 2));
    assert_eq!(diameter(&h), Distance::Finite(1));
    assert_eq!(h.uniformity().unwrap(), Uniformity::Uniform(5));
    assert_eq!(h.regularity(), Some(3));
}

fn c7() {
    let h4 = interval_family(4).unwrap();
    assert!(is_soltes(&h4));
    assert_eq!(h4.order(), 11);
    all_deletions_equal(&h4, 55);
    assert_eq!(55, binom(10, 2) + 10);
    assert!(is_soltes(&interval_family(5).unwrap()));
}

fn c8() {
    let h = steiner_2_4_13().unwrap();
    for a in 0..13 {
        for b in a + 1..13 {
            let count = h.edges().iter().filter(|e| e.contains(&a) && e.contains(&b)).count();
            assert_eq!(count, 1, "pair {a} {b}");
        }
    }
    assert_eq!(h.uniformity().unwrap(), Uniformity::Uniform(4));
    all_deletions_equal(&h, 78);
    assert_eq!(78, binom(12, 2) + 12);
}

fn c9() {
    for h in [twelve_vertex_6uniform(), duplicated_dual_k4()] {
        assert!(is_soltes(&h), "{h}");
        assert_eq!(diameter(&h), Distance::Finite(2));
    }
}

fn c10() {
    let r = check_3uniform_diam1(6).unwrap();
    assert!(r.witnesses.is_empty());
    assert!(r.all_checks_passed());
}

fn c11() {
    let records = appendix_fixtures();
    for r in &records {
        let g = parse_graph6(r).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.regularity(), Some(4));
    }
    let rows = screen_records(&records, Transform::StarDual);
    let mut diams = Vec::new();
    for row in &rows {
        let s = row.result.as_ref().unwrap();
        assert_eq!(s.regular, Some(2));
        assert_eq!(s.uniformity, Uniformity::Uniform(4));
        assert!(s.soltes);
        diams.push(s.diameter.finite().unwrap());
    }
    diams.sort_unstable();
    assert_eq!(diams, vec![2, 6, 7, 8]);
    let first = rows[0].result.as_ref().unwrap();
    assert_eq!((first.order, first.diameter), (20, Distance::Finite(2)));
}

fn c12() {
    for n in 9..=24 {
        let h = theorem_order_n(n, None).unwrap();
        assert_eq!(h.order(), n);
        assert!(is_soltes(&h), "n = {n}");
        assert_eq!(w(&h), binom(n as u64, 2));
        for v in 0..n {
            assert_eq!(diameter(&h.delete_vertex(v).unwrap()), Distance::Finite(2), "n = {n}, v = {v}");
        }
    }
}

fn c13() {
    for k in 2..=3u64 {
        let h = multipartite_hk(k as usize).unwrap();
        assert!(is_soltes(&h));
        assert_eq!(diameter(&h), Distance::Finite(2));
        assert_eq!(k * (2 * k + 3) + 1, binom(2 * k + 2, 2));
        for v in 0..h.order() {
            assert_eq!(transmission(&h, v).unwrap(), Distance::Finite(binom(2 * k + 2, 2)));
        }
    }
}

fn c14() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for i in 0..1000 {
        let n = 2 + i % 11;
        let h = common::random_hypergraph(&mut rng, n);
        assert_eq!(wiener(&h), wiener(&h.two_section()), "{h}");
        assert_eq!(parse_hg(&write_hg(&h)).unwrap(), h);
        let g = h.two_section();
        assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
    }
    // every Šoltés instance this crate reports
    let mut reported: Vec<Hypergraph> = Vec::new();
    reported.extend((5..=8).map(|n| small_example(n).unwrap()));
    reported.extend((9..=16).map(|n| theorem_order_n(n, None).unwrap()));
    reported.extend([4, 5].map(|m| interval_family(m).unwrap()));
    reported.extend([2, 3].map(|k| multipartite_hk(k).unwrap()));
    reported.extend([
        cycle(11).unwrap(),
        steiner_2_4_13().unwrap(),
        hemi_dodecahedron(),
        dual_k5_3(),
        duplicated_dual_k4(),
        twelve_vertex_6uniform(),
    ]);
    reported.extend(search_by_order(5).unwrap().witnesses);
    reported.extend(search_size5().witnesses);
    for h in &reported {
        assert!(is_soltes(h), "{h}");
        let d = h.degrees();
        assert!(d.min >= 2, "{h}");
        assert!(h.size() >= d.max + 2, "{h}");
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 14] = [
        ("C11 Wiener index 165 and deletion-invariant", c1),
        ("small examples of orders 5 to 8", c2),
        ("distance bounds C(n,2) <= W <= C(n+1,3), equality only for paths", c3),
        ("search by order: none up to 4, unique at 5", c4),
        ("search by size 5: unique witness, dual of K5^(3), W = 45", c5),
        ("hemi-dodecahedron", c6),
        ("interval family m = 4, 5", c7),
        ("Steiner system S(2,4,13)", c8),
        ("12-vertex 6-uniform and duplicated dual of K4", c9),
        ("no 3-uniform diameter-1 witness up to order 6", c10),
        ("bundled 4-regular graphs screened through the star dual", c11),
        ("generator for orders 9 to 24", c12),
        ("multipartite family k = 2, 3", c13),
        ("property suite", c14),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
