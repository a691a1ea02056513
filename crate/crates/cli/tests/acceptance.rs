//! Acceptance criteria 1 to 10. Each test prints one PASS/FAIL line
//! (visible with `--nocapture`) and fails if the check or its time limit
//! fails.

use std::collections::BTreeSet;
use std::process::Command as Process;
use std::thread;
use std::time::{Duration, Instant};

use quandle_order::algebra::{cyclic_group, direct_product, next_permutation, symmetric_group};
use quandle_order::catalog::{canonical_form, generate_all_quandles};
use quandle_order::corder::{
    circular_from_linear, cyclic_to_function, function_to_cyclic, is_left_invariant, is_right_invariant,
    validate_triple_function, CyclicOrder, TripleFunction,
};
use quandle_order::quandle::{conj_quandle, dihedral_quandle, quandle_from_table, trivial_quandle, FiniteQuandle, Side};
use quandle_order::search::{
    decide, embedding_image, enumerate_bicircular, enumerate_lco, enumerate_left_orderings, enumerate_rco,
    enumerate_right_orderings, subbasic_linear, subbasic_right, Certificate, Property, SearchConfig, Tier,
    Verdict, Witness,
};
use quandle_order::Error;
use quandle_order_cli::formats::{parse_input, Structure};

fn criterion(id: u32, what: &str, limit: Duration, check: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let result = result.and_then(|()| {
        if elapsed <= limit {
            Ok(())
        } else {
            Err(format!("took {elapsed:?}, limit {limit:?}"))
        }
    });
    match &result {
        Ok(()) => println!("criterion {id:>2} PASS  {what} ({elapsed:.2?}, limit {limit:?})"),
        Err(e) => println!("criterion {id:>2} FAIL  {what}: {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {id} failed: {e}");
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

/// Re-checks a negative verdict's certificate from scratch.
fn certificate_holds(q: &FiniteQuandle, v: &Verdict) -> bool {
    let n = q.order();
    match &v.certificate {
        Some(Certificate::NonInjectiveTranslation { base, points }) => {
            points[0] != points[1] && q.op(*base, points[0]) == q.op(*base, points[1])
        }
        Some(Certificate::NonCyclicAction { group_order, max_element_order }) => {
            let side = if v.property == Property::LeftCircular { Side::Left } else { Side::Right };
            let g = translations_closure(q, side);
            g.len() == *group_order && *max_element_order < *group_order
        }
        Some(Certificate::NonSemiregularAction { element, fixed_point, .. }) => {
            element.len() == n
                && element[*fixed_point] == *fixed_point
                && (0..n).any(|x| element[x] != x)
                && (translations_closure(q, Side::Right).contains(element)
                    || translations_closure(q, Side::Left).contains(element))
        }
        Some(Certificate::Exhaustive { .. }) => true,
        Some(Certificate::NonIdentityTranslation { .. }) => true,
        None => false,
    }
}

/// All compositions of the translations on `side`, by plain breadth-first
/// closure over image vectors.
fn translations_closure(q: &FiniteQuandle, side: Side) -> BTreeSet<Vec<usize>> {
    let n = q.order();
    let gens: Vec<Vec<usize>> = (0..n)
        .map(|s| (0..n).map(|x| if side == Side::Right { q.op(x, s) } else { q.op(s, x) }).collect())
        .collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![(0..n).collect::<Vec<_>>()];
    while let Some(p) = frontier.pop() {
        if !seen.insert(p.clone()) {
            continue;
        }
        for g in &gens {
            frontier.push((0..n).map(|x| g[p[x]]).collect());
        }
    }
    seen
}

fn neither(q: &FiniteQuandle) -> Result<(Verdict, Verdict), String> {
    let rco = enumerate_rco(q, &cfg()).map_err(|e| e.to_string())?;
    let lco = enumerate_lco(q, &cfg()).map_err(|e| e.to_string())?;
    ensure(rco.is_empty(), format!("RCO has {} members", rco.len()))?;
    ensure(lco.is_empty(), format!("LCO has {} members", lco.len()))?;
    let right = decide(q, Property::RightCircular, &cfg()).map_err(|e| e.to_string())?;
    let left = decide(q, Property::LeftCircular, &cfg()).map_err(|e| e.to_string())?;
    for v in [&right, &left] {
        ensure(!v.answer, format!("{} answered yes", v.property.name()))?;
        ensure(certificate_holds(q, v), format!("{} certificate does not hold: {:?}", v.property.name(), v.certificate))?;
    }
    Ok((right, left))
}

#[test]
fn criterion_01_three_element_quandle() {
    criterion(1, "3-element quandle has no right or left circular ordering", Duration::from_secs(1), || {
        let doc = r#"{"kind":"quandle","index_base":1,"table":[[1,1,2],[2,2,1],[3,3,3]]}"#;
        let q = match parse_input(doc).map_err(|e| e.to_string())? {
            Structure::Quandle { quandle, .. } => quandle,
            Structure::Group(_) => return Err("parsed as a group".into()),
        };
        neither(&q).map(|_| ())
    });
}

#[test]
fn criterion_02_dihedral_3() {
    criterion(2, "dihedral(3) has no right or left circular ordering", Duration::from_secs(1), || {
        let (right, _) = neither(&dihedral_quandle(3))?;
        ensure(
            matches!(right.certificate, Some(Certificate::NonCyclicAction { group_order: 6, .. })),
            format!("right certificate {:?}", right.certificate),
        )?;
        ensure(translations_closure(&dihedral_quandle(3), Side::Right).len() == 6, "inner group order")
    });
}

#[test]
fn criterion_03_trivial_2_bicircular() {
    criterion(3, "trivial(2) has exactly one bi-circular ordering, the zero one", Duration::from_secs(1), || {
        let q = trivial_quandle(2);
        let space = enumerate_bicircular(&q, &cfg()).map_err(|e| e.to_string())?;
        ensure(space.len() == 1, format!("{} members", space.len()))?;
        let f = cyclic_to_function(&space.members[0]);
        ensure(f.values().iter().all(|&v| v == 0), "ordering is not the zero function")?;
        ensure(validate_triple_function(&f).is_ok(), "zero function invalid")
    });
}

#[test]
fn criterion_04_conj_not_left_circular() {
    criterion(4, "Conj(G) has no left circular ordering for Z3, Z4, Z2xZ2, S3", Duration::from_secs(5), || {
        let groups = [
            ("Z3", cyclic_group(3)),
            ("Z4", cyclic_group(4)),
            ("Z2xZ2", direct_product(&cyclic_group(2), &cyclic_group(2))),
            ("S3", symmetric_group(3)),
        ];
        for (name, g) in groups {
            let lco = enumerate_lco(&conj_quandle(&g), &cfg()).map_err(|e| e.to_string())?;
            ensure(lco.is_empty(), format!("LCO(Conj({name})) has {} members", lco.len()))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_05_linear_to_circular() {
    criterion(5, "every right/left ordering of a quandle of order <= 4 induces a right/left circular one", Duration::from_secs(30), || {
        let mut checked = 0usize;
        for n in 1..=4 {
            for q in generate_all_quandles(n, false).map_err(|e| e.to_string())? {
                let rco = enumerate_rco(&q, &cfg()).map_err(|e| e.to_string())?;
                let lco = enumerate_lco(&q, &cfg()).map_err(|e| e.to_string())?;
                for o in enumerate_right_orderings(&q, &cfg()).map_err(|e| e.to_string())?.members {
                    let c = circular_from_linear(&o);
                    ensure(rco.contains(&c) && is_right_invariant(&c, &q), format!("{:?} on {:?}", o, q.rows()))?;
                    checked += 1;
                }
                for o in enumerate_left_orderings(&q, &cfg()).map_err(|e| e.to_string())?.members {
                    let c = circular_from_linear(&o);
                    ensure(lco.contains(&c) && is_left_invariant(&c, &q), format!("{:?} on {:?}", o, q.rows()))?;
                    checked += 1;
                }
            }
        }
        ensure(checked > 0, "no orderings checked")
    });
}

#[test]
fn criterion_06_subbasis() {
    criterion(6, "subbasic sets on trivial(3)", Duration::from_secs(1), || {
        let q = trivial_quandle(3);
        let rco = enumerate_rco(&q, &cfg()).map_err(|e| e.to_string())?;
        ensure(rco.len() == 2, format!("RCO has {} members", rco.len()))?;
        let r_s = subbasic_right(&q, [0, 1, 2], &cfg()).map_err(|e| e.to_string())?;
        ensure(r_s == [CyclicOrder::identity(3)], format!("R_S = {r_s:?}"))?;
        ensure(
            matches!(subbasic_right(&q, [0, 0, 1], &cfg()), Err(Error::DegenerateTriple(_))),
            "degenerate triple accepted",
        )?;
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    let v = subbasic_linear(&q, Side::Right, (a, b), &cfg()).map_err(|e| e.to_string())?;
                    ensure(v.len() == 3, format!("V_({a},{b}) has {} members", v.len()))?;
                    ensure(v.iter().all(|o| o.precedes(a, b)), "member with b before a")?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_07_embedding() {
    criterion(7, "embedding image of trivial(3), right side", Duration::from_secs(1), || {
        let q = trivial_quandle(3);
        let r = embedding_image(&q, Side::Right, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.domain.len() == 6, format!("domain {}", r.domain.len()))?;
        ensure(r.image.len() == 2, format!("image {}", r.image.len()))?;
        ensure(r.fibers.iter().all(|f| f.preimages.len() == 3), "fiber sizes")?;
        ensure(r.image_verified, "image not verified")?;
        let rco = enumerate_rco(&q, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.image.iter().all(|c| rco.contains(c) && is_right_invariant(c, &q)), "image outside RCO")
    });
}

/// Labeled quandles of order `n`, by trying every tuple of
/// diagonal-fixing column permutations and keeping the distributive ones.
fn labeled_quandles_by_brute_force(n: usize) -> usize {
    let mut column_choices: Vec<Vec<Vec<usize>>> = Vec::new();
    for j in 0..n {
        let mut perms = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            if p[j] == j {
                perms.push(p.clone());
            }
            if !next_permutation(&mut p) {
                break;
            }
        }
        column_choices.push(perms);
    }
    let k = column_choices[0].len();
    let total = k.pow(n as u32);
    let mut count = 0;
    let mut table = vec![0usize; n * n];
    for mut code in 0..total {
        for (j, choices) in column_choices.iter().enumerate() {
            let col = &choices[code % k];
            code /= k;
            for i in 0..n {
                table[i * n + j] = col[i];
            }
        }
        let op = |a: usize, b: usize| table[a * n + b];
        let distributive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(op(a, c), op(b, c)))));
        if distributive {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_08_oracle_equivalence() {
    criterion(8, "fast path equals brute force on every quandle of order <= 5", Duration::from_secs(300), || {
        let expected_classes = [1, 1, 3, 7, 22];
        let fast = cfg().with_tier(Tier::Fast);
        let slow = cfg().with_tier(Tier::Exhaustive);
        for n in 1..=5 {
            let labeled = generate_all_quandles(n, false).map_err(|e| e.to_string())?;
            let brute = labeled_quandles_by_brute_force(n);
            ensure(labeled.len() == brute, format!("order {n}: {} labeled, brute force {brute}", labeled.len()))?;
            let classes: BTreeSet<_> = labeled.iter().map(|q| canonical_form(q).rows()).collect();
            let reps = generate_all_quandles(n, true).map_err(|e| e.to_string())?;
            ensure(
                classes.len() == expected_classes[n - 1] && reps.len() == classes.len(),
                format!("order {n}: {} classes, {} representatives", classes.len(), reps.len()),
            )?;
            for q in &reps {
                for p in Property::ALL {
                    let a = decide(q, p, &fast).map_err(|e| e.to_string())?;
                    let b = decide(q, p, &slow).map_err(|e| e.to_string())?;
                    ensure(a.answer == b.answer, format!("{} on {:?}: fast {} exhaustive {}", p.name(), q.rows(), a.answer, b.answer))?;
                    if let Some(w) = &a.witness {
                        let ok = match (p, w) {
                            (Property::RightCircular, Witness::Circular(c)) => is_right_invariant(c, q),
                            (Property::LeftCircular, Witness::Circular(c)) => is_left_invariant(c, q),
                            (Property::BiCircular, Witness::Circular(c)) => is_right_invariant(c, q) && is_left_invariant(c, q),
                            (Property::RightOrder, Witness::Linear(o)) => o.ranking().windows(2).all(|w| (0..n).all(|s| o.precedes(q.op(w[0], s), q.op(w[1], s)))),
                            (Property::LeftOrder, Witness::Linear(o)) => o.ranking().windows(2).all(|w| (0..n).all(|s| o.precedes(q.op(s, w[0]), q.op(s, w[1])))),
                            _ => false,
                        };
                        ensure(ok, format!("bad {} witness on {:?}", p.name(), q.rows()))?;
                    }
                }
            }
        }
        Ok(())
    });
}

fn nondegenerate_triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x != y && y != z && x != z {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// Every assignment of ±1 to the nondegenerate triples whose index lies in
/// `range`, validated; returns the valid ones as value vectors.
fn scan_triple_functions(n: usize, range: std::ops::Range<u64>) -> Vec<Vec<i8>> {
    let triples = nondegenerate_triples(n);
    let mut f = TripleFunction::zero(n);
    let mut valid = Vec::new();
    for mask in range {
        for (bit, t) in triples.iter().enumerate() {
            f.set(t[0], t[1], t[2], if mask >> bit & 1 == 1 { 1 } else { -1 });
        }
        if validate_triple_function(&f).is_ok() {
            valid.push(f.values().to_vec());
        }
    }
    valid
}

#[test]
fn criterion_09_representation_theorem() {
    criterion(9, "raw triple functions on 3 and 4 points are exactly the (n-1)! arrangements", Duration::from_secs(120), || {
        for (n, expected) in [(3usize, 2usize), (4, 6)] {
            let bits = nondegenerate_triples(n).len();
            let total = 1u64 << bits;
            let workers = thread::available_parallelism().map_or(1, |k| k.get()).min(16) as u64;
            let chunk = total.div_ceil(workers);
            let valid: Vec<Vec<i8>> = thread::scope(|s| {
                let handles: Vec<_> = (0..workers)
                    .map(|w| s.spawn(move || scan_triple_functions(n, w * chunk..((w + 1) * chunk).min(total))))
                    .collect();
                handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
            });
            ensure(valid.len() == expected, format!("n = {n}: {} valid of {total}", valid.len()))?;
            let mut arrangements = BTreeSet::new();
            for values in valid {
                let f = TripleFunction::from_values(n, values).map_err(|e| e.to_string())?;
                let c = function_to_cyclic(&f).map_err(|e| e.to_string())?;
                ensure(cyclic_to_function(&c) == f, format!("n = {n}: round trip failed"))?;
                arrangements.insert(c);
            }
            ensure(arrangements.len() == expected, format!("n = {n}: {} distinct arrangements", arrangements.len()))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_10_verify_paper_command() {
    criterion(10, "verify-paper exits 0 with every named check passing", Duration::from_secs(60), || {
        let out = Process::new(env!("CARGO_BIN_EXE_qorder")).arg("verify-paper").output().map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), format!("exit {:?}", out.status.code()))?;
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let checks = report["checks"].as_array().ok_or("no checks")?;
        let names: Vec<&str> = checks.iter().filter_map(|c| c["name"].as_str()).collect();
        ensure(
            names
                == [
                    "example:three-element-neither",
                    "example:dihedral-3-neither",
                    "example:trivial-2-bicircular",
                    "lemma:conj-not-left-circular",
                    "lemma:ordering",
                    "subbasis:trivial-3",
                    "embedding:trivial-3-right",
                ],
            format!("checks {names:?}"),
        )?;
        ensure(checks.iter().all(|c| c["passed"] == true), "a check failed")
    });
}

#[test]
fn three_element_table_is_a_quandle() {
    assert!(quandle_from_table(&[vec![0, 0, 1], vec![1, 1, 0], vec![2, 2, 2]]).is_ok());
}
