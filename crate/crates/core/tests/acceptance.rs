//! Acceptance suite: one PASS/FAIL line per criterion, each timed against
//! its budget. Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{
    brute_force_mis, brute_force_valid, canonical_form, graph_from_mask, random_graph, random_tree,
};
use levelable::algebra::{independence_complex, is_level_quotient, vtz_feasible};
use levelable::experiments::{wcw_dim_zero_fraction, DEFAULT_SEED};
use levelable::families::{
    classify_cameron_walker, classify_cubic_circulant, classify_tree, multipartite_weights,
};
use levelable::generators::{big_star, circulant, complete_multipartite, cycle, path};
use levelable::{
    attach_graphs, decide_levelable, duplicate_vertex, enumerate_max_independent_sets,
    expand_vertex, realize_weight_profile, validate_weights, verify_certificate, wcw_basis, CwSpec,
    ExponentVector, Graph, Rational, WeightFunction, WeightProfile,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn levelable(g: &Graph) -> bool {
    let cert = decide_levelable(g).expect("decision succeeds");
    assert!(
        verify_certificate(g, &cert).unwrap(),
        "certificate fails to verify"
    );
    cert.is_levelable()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn paths() -> Outcome {
    let got: Vec<usize> = (2..=25).filter(|&n| levelable(&path(n))).collect();
    ensure(got == [2, 3, 4], || format!("levelable paths {got:?}"))?;
    Ok("levelable exactly for n in {2,3,4} over 2..=25".into())
}

fn cycles() -> Outcome {
    let got: Vec<usize> = (2..=25).filter(|&n| levelable(&cycle(n))).collect();
    ensure(got == [2, 3, 4, 5, 7], || {
        format!("levelable cycles {got:?}")
    })?;
    Ok("levelable exactly for n in {2,3,4,5,7} over 2..=25".into())
}

fn cubic_circulants() -> Outcome {
    let first: Vec<usize> = (2..=12)
        .filter(|&n| levelable(&circulant(2 * n, &[1, n])))
        .collect();
    ensure(first == [2, 3, 4], || {
        format!("C_2n(1,n) levelable for {first:?}")
    })?;
    let second: Vec<usize> = (3..=13)
        .step_by(2)
        .filter(|&n| levelable(&circulant(2 * n, &[2, n])))
        .collect();
    ensure(second == [3, 5], || {
        format!("C_2n(2,n) levelable for {second:?}")
    })?;
    Ok("C_2n(1,n): {2,3,4}; C_2n(2,n), n odd: {3,5}".into())
}

fn davis_domke() -> Outcome {
    let mut checked = 0;
    for n in 2..=10 {
        for a in 1..n {
            let rule = classify_cubic_circulant(n, a).map_err(|e| e.to_string())?;
            let lp = levelable(&circulant(2 * n, &[a, n]));
            ensure(rule.levelable == lp, || {
                format!("n={n}, a={a}: rule {} vs LP {lp}", rule.levelable)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs agree"))
}

fn trees() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7EE5);
    let mut positive = 0;
    for k in 0..500 {
        let n = rng.gen_range(1..=16);
        let t = random_tree(&mut rng, n);
        let rule = classify_tree(&t).map_err(|e| e.to_string())?;
        let lp = levelable(&t);
        ensure(rule.levelable == lp, || {
            format!(
                "tree #{k} ({}): rule {} vs LP {lp}",
                t.to_edge_list(),
                rule.levelable
            )
        })?;
        positive += lp as usize;
    }
    Ok(format!("500 trees agree ({positive} levelable)"))
}

fn named_fixtures() -> Outcome {
    // Cameron-Walker figure: U = {x4,x5,x6}, V = {x7,x8}; x7 carries the
    // triangle x7x9x10, x8 is exceptional.
    let figure: Vec<(usize, usize)> = [
        (1, 4),
        (4, 7),
        (7, 9),
        (9, 10),
        (10, 7),
        (7, 5),
        (5, 2),
        (3, 6),
        (6, 8),
        (8, 5),
    ]
    .iter()
    .map(|&(u, v)| (u - 1, v - 1))
    .collect();
    let cw = Graph::from_edges(10, figure).unwrap();
    ensure(!levelable(&cw), || {
        "figure Cameron-Walker graph decided levelable".into()
    })?;
    let spec = CwSpec {
        u_count: 3,
        v_count: 2,
        edges: vec![(0, 0), (1, 0), (1, 1), (2, 1)],
        legs: vec![1, 1, 1],
        triangles: vec![1, 0],
    };
    let realized = spec.realize().unwrap();
    ensure(!levelable(&realized), || {
        "realized spec decided levelable".into()
    })?;
    ensure(!classify_cameron_walker(&spec).unwrap().levelable, || {
        "closed-form rule says levelable".into()
    })?;

    let k1 = (
        Graph::empty(1),
        WeightFunction {
            weights: vec![1],
            independence_weight: 1,
        },
    );
    let (corona, _) = attach_graphs(&path(5), &vec![k1; 5]).map_err(|e| e.to_string())?;
    ensure(levelable(&corona), || "P5 corona not levelable".into())?;
    ensure(brute_force_valid(&corona, &[1; 10]), || {
        "all-ones invalid on P5 corona".into()
    })?;

    ensure(!levelable(&big_star(&[1, 2, 2, 3])), || {
        "big star (1,2,2,3) levelable".into()
    })?;
    Ok("Cameron-Walker figure not levelable; P5 corona levelable with all ones; G(1,2,2,3) not levelable".into())
}

fn multipartite() -> Outcome {
    let mut count = 0;
    let mut parts = Vec::new();
    fn rec(parts: &mut Vec<usize>, count: &mut usize) -> Result<(), String> {
        if !parts.is_empty() {
            let g = complete_multipartite(parts);
            ensure(levelable(&g), || format!("K{parts:?} not levelable"))?;
            let w = multipartite_weights(parts).map_err(|e| e.to_string())?;
            ensure(brute_force_valid(&g, &w.weights), || {
                format!("lcm weights fail on K{parts:?}")
            })?;
            *count += 1;
        }
        if parts.len() == 4 {
            return Ok(());
        }
        let low = parts.last().copied().unwrap_or(1);
        for a in low..=4 {
            parts.push(a);
            rec(parts, count)?;
            parts.pop();
        }
        Ok(())
    }
    rec(&mut parts, &mut count)?;
    Ok(format!(
        "{count} part-size multisets, all levelable with lcm weights"
    ))
}

fn random_levelable<R: Rng>(rng: &mut R, max_n: usize) -> (Graph, WeightFunction) {
    loop {
        let n = rng.gen_range(1..=max_n);
        let g = random_graph(rng, n, 0.5);
        if let Some(w) = decide_levelable(&g).unwrap().weights() {
            let w = w.clone();
            return (g, w);
        }
    }
}

fn check_construction(name: &str, k: usize, g: &Graph, w: &WeightFunction) -> Result<(), String> {
    validate_weights(g, &w.weights).map_err(|e| format!("{name} #{k}: {e}"))?;
    ensure(brute_force_valid(g, &w.weights), || {
        format!("{name} #{k}: brute-force check fails")
    })?;
    ensure(levelable(g), || {
        format!("{name} #{k}: result not levelable")
    })
}

fn constructions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    for k in 0..100 {
        let (g, w) = random_levelable(&mut rng, 7);
        let x = rng.gen_range(0..g.n());
        let (h, hw) = duplicate_vertex(&g, x, &w).map_err(|e| e.to_string())?;
        check_construction("duplicate", k, &h, &hw)?;
        let (h, hw) = expand_vertex(&g, x, &w).map_err(|e| e.to_string())?;
        check_construction("expand", k, &h, &hw)?;

        let base_n = rng.gen_range(1..=4);
        let base = random_graph(&mut rng, base_n, 0.5);
        let hs: Vec<(Graph, WeightFunction)> =
            (0..base_n).map(|_| random_levelable(&mut rng, 3)).collect();
        let (h, hw) = attach_graphs(&base, &hs).map_err(|e| e.to_string())?;
        check_construction("attach", k, &h, &hw)?;

        let len = rng.gen_range(1..=4);
        let profile = if rng.gen_bool(0.5) {
            WeightProfile::Pendants {
                counts: (0..len).map(|_| rng.gen_range(1..=3)).collect(),
            }
        } else {
            WeightProfile::Cliques {
                pairs: (0..len)
                    .map(|_| (rng.gen_range(1..=4), rng.gen_range(2..=4)))
                    .collect(),
            }
        };
        let (h, hw) = realize_weight_profile(&profile).map_err(|e| e.to_string())?;
        check_construction("profile", k, &h, &hw)?;
    }
    Ok("400 constructions validated and decided levelable".into())
}

fn algebra_equivalence() -> Outcome {
    let mut graphs = 0;
    let mut cases = 0;
    let mut connected_classes = BTreeSet::new();
    let mut all_classes = BTreeSet::new();
    for n in 1..=5usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..1u64 << pairs {
            let g = graph_from_mask(n, mask);
            let form = canonical_form(&g);
            all_classes.insert(form);
            if g.is_connected() {
                connected_classes.insert(form);
            }
            graphs += 1;
            let fc = independence_complex(&g).unwrap();
            for bits in 0..1u32 << n {
                let a: Vec<u32> = (0..n).map(|i| 2 + (bits >> i & 1)).collect();
                let shifted: Vec<u64> = a.iter().map(|&x| x as u64 - 1).collect();
                let a = ExponentVector::new(a).unwrap();
                let level = is_level_quotient(&g, &a).unwrap();
                let valid = validate_weights(&g, &shifted).is_ok();
                let vtz = vtz_feasible(&fc, &a).unwrap();
                ensure(level == valid && valid == vtz, || {
                    format!(
                        "{} a={:?}: level {level}, weights {valid}, system {vtz}",
                        g.to_edge_list(),
                        a.as_slice()
                    )
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{graphs} labelled graphs ({} connected / {} total isomorphism classes), {cases} exponent vectors, no disagreement",
        connected_classes.len(),
        all_classes.len()
    ))
}

fn wcw_fixtures() -> Outcome {
    let p5 = wcw_basis(&path(5)).unwrap();
    ensure(p5.dim == 2, || format!("dim WCW(P5) = {}", p5.dim))?;
    let v: Vec<Rational> = [1, 1, 0, -1, -1]
        .iter()
        .map(|&x| Rational::from(x))
        .collect();
    ensure(p5.contains(&v), || "(1,1,0,-1,-1) not in span".into())?;
    let k2 = wcw_basis(&Graph::complete(2)).unwrap();
    ensure(k2.dim == 1, || format!("dim WCW(K2) = {}", k2.dim))?;
    Ok("dim WCW(P5) = 2 containing (1,1,0,-1,-1); dim WCW(K2) = 1".into())
}

fn mis_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x315);
    for k in 0..200 {
        let n = rng.gen_range(0..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let mis = enumerate_max_independent_sets(&g).unwrap();
        ensure(mis.sets() == brute_force_mis(&g).as_slice(), || {
            format!("graph #{k}: {}", g.to_edge_list())
        })?;
    }
    Ok("200 random graphs match the 2^n filter".into())
}

fn random_trend() -> Outcome {
    let small = wcw_dim_zero_fraction(8, 0.5, 200, DEFAULT_SEED).map_err(|e| e.to_string())?;
    let large = wcw_dim_zero_fraction(16, 0.5, 200, DEFAULT_SEED).map_err(|e| e.to_string())?;
    for report in [&small, &large] {
        ensure(report.cap_exceeded == 0, || {
            format!("n={}: {} capped trials", report.n, report.cap_exceeded)
        })?;
        for t in &report.trials {
            ensure(t.levelable != Some(true) || t.dim.unwrap() >= 1, || {
                format!("n={} trial {}: levelable with dim 0", t.n, t.trial)
            })?;
        }
        ensure(
            report.levelable_count <= report.dim_positive_count(),
            || "levelable count exceeds dim>0 count".into(),
        )?;
    }
    ensure(small.fraction <= large.fraction, || {
        format!("fraction n=8 {} > n=16 {}", small.fraction, large.fraction)
    })?;
    Ok(format!(
        "seed {DEFAULT_SEED}: dim-0 fraction {} at n=8, {} at n=16; levelable {} and {}",
        small.fraction, large.fraction, small.levelable_count, large.levelable_count
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("paths", 10, paths),
        ("cycles", 30, cycles),
        ("cubic circulants", 120, cubic_circulants),
        ("circulant decomposition rule", 300, davis_domke),
        ("random trees", 120, trees),
        ("named fixtures", 60, named_fixtures),
        ("complete multipartite", 60, multipartite),
        ("constructions", 300, constructions),
        ("socle levelness equivalence", 600, algebra_equivalence),
        ("well-covered weighting space", 10, wcw_fixtures),
        ("maximal independent set oracle", 300, mis_oracle),
        ("random graph trend", 600, random_trend),
    ];
    let mut failures = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => Err(format!(
                "{detail}; took {:.1}s over the {limit}s budget",
                elapsed.as_secs_f64()
            )),
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS  {:>2} {name}: {detail} [{:.2}s/{limit}s]",
                k + 1,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failures += 1;
                println!(
                    "FAIL  {:>2} {name}: {why} [{:.2}s/{limit}s]",
                    k + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
