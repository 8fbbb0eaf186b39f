//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is always printed.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use flagpos::coxeter::*;
use flagpos::exact::{cauchy_binet_check, rat, ratio, subsets, Mat, Rat, SubsetIndex};
use flagpos::flags::*;
use flagpos::positivity::*;
use flagpos::sample::*;
use flagpos::strata::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration) -> Check {
    let spent = start.elapsed();
    ensure!(spent < limit, "took {spent:?}, limit {limit:?}");
    Ok(())
}

fn perm(s: &str) -> Perm {
    s.parse().expect("literal permutation")
}

fn word(s: &str, n: usize) -> Perm {
    s.parse::<Word>().expect("literal word").product(n).expect("letters in range")
}

fn nonempty_dims(n: usize) -> Vec<Vec<usize>> {
    all_parabolics(n).into_iter().filter(|k| !k.is_empty()).collect()
}

fn intervals(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for low in 1..n {
        for high in low..n {
            out.push((low..=high).collect());
        }
    }
    out
}

fn worked_examples() -> Check {
    let start = Instant::now();
    ensure!(length(&perm("5214763")) == 9, "length(5214763) != 9");
    ensure!(word("s1s3s4s3s2s1s5s6s5", 7) == perm("5214763"), "worked reduced word");
    ensure!(reduced_word(&perm("5214763")).product(7).unwrap() == perm("5214763"), "reduced word");
    let factor = ok(parabolic_factor(&perm("5214763"), &[1, 2, 4, 6]))?;
    ensure!(factor == (perm("1254736"), perm("3214576")), "parabolic factor {factor:?}");
    let (v, w) = (word("s1s2s3", 4), word("s2s3s2", 4));
    ensure!(ok(demazure_star(&v, &w))? == word("s1s2s3s2", 4), "Demazure product");
    ensure!(ok(demazure_down(&v, &w))? == word("s1", 4), "downwards Demazure product");
    let got = ok(interval_mod_parabolic(&word("s4s3s5", 7), &word("s3s4s3s6s5", 7), &[1, 2, 4, 6]))?;
    let expected: BTreeSet<Perm> =
        ["s4s3s5", "s3s4s3s5", "s4s3s6s5", "s3s4s3s6s5"].iter().map(|s| word(s, 7)).collect();
    ensure!(got == expected, "interval mod W_J: {got:?}");
    let reduced = ok(demazure_reduce(&word("s1s4s3s2s1s5", 7), &word("s1s3s4s3s2s1s5s6s5", 7), &[1, 2, 4, 6]))?;
    ensure!(reduced == (word("s4s3s5", 7), word("s3s4s3s6s5", 7)), "reduced pair {reduced:?}");
    within(start, Duration::from_secs(1))
}

fn plucker_formulas() -> Check {
    let tuples: [[Rat; 5]; 5] = [
        [rat(1), rat(2), rat(3), rat(4), rat(5)],
        [ratio(1, 2), ratio(-3, 4), rat(2), ratio(5, 3), rat(-1)],
        [rat(0), rat(0), rat(0), rat(0), rat(0)],
        [rat(-7), ratio(2, 9), ratio(11, 5), rat(3), ratio(-1, 8)],
        [ratio(13, 7), rat(6), ratio(-5, 2), ratio(1, 11), rat(4)],
    ];
    for [a, b, c, d, e] in tuples {
        let rep = ok(Mat::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![a.clone(), rat(1), rat(0)],
            vec![b.clone(), rat(0), rat(1)],
            vec![c.clone(), d.clone(), e.clone()],
        ]))?;
        let v1: Vec<Rat> = ok(GrPoint::new(rep.first_columns(1)))?.plucker_coords().into_iter().map(|x| x.1).collect();
        let v3: Vec<Rat> = ok(GrPoint::new(rep.clone()))?.plucker_coords().into_iter().map(|x| x.1).collect();
        let f1 = vec![rat(1), a.clone(), b.clone(), c.clone()];
        let f3 = vec![rat(1), e.clone(), -d.clone(), -(&a * &d) + &c - &b * &e];
        ensure!(v1 == f1, "order-1 coordinates {v1:?} != {f1:?}");
        ensure!(v3 == f3, "order-3 coordinates {v3:?} != {f3:?}");
    }
    Ok(())
}

fn witnesses_for_interval_k() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    for n in 2..=5 {
        for dims in intervals(n) {
            for trial in 0..50 {
                let flag = ok(random_positive_flag(n, &dims, &mut rng))?;
                ensure!(ok(classify_plucker(&flag))? == PluckerClass::PluckerPositive, "generator failed");
                let witness = ok(tp_witness_complete(&ok(complete_flag(&flag))?))?;
                ensure!(ok(is_totally_positive(&witness.matrix))?, "n={n} K={dims:?} #{trial}: not TP");
                let as_flag = ok(Flag::new(n, dims.clone(), witness.matrix.clone()))?;
                for &k in &dims {
                    ensure!(
                        ok(plucker(&as_flag, k))? == ok(plucker(&flag, k))?,
                        "n={n} K={dims:?} #{trial}: witness represents another flag at k={k}"
                    );
                }
            }
        }
    }
    within(start, Duration::from_secs(300))
}

fn converse_counterexamples() -> Check {
    let mut instances = 0;
    for n in 4..=7 {
        for dims in nonempty_dims(n) {
            for pair in dims.windows(2) {
                let (k, l) = (pair[0], pair[1]);
                if l < k + 2 || n < k + 3 {
                    continue;
                }
                instances += 1;
                let (flag, cert) = ok(converse_counterexample(n, &dims, k, l))?;
                let tag = format!("n={n} K={dims:?} k={k} l={l}");
                ensure!(
                    ok(classify_plucker(&flag))? == PluckerClass::PluckerNonnegNotPositive,
                    "{tag}: classification"
                );
                let negative = ok(flag.left_minors(k + 1))?.iter().any(|(_, x)| *x < rat(0));
                ensure!(negative, "{tag}: no negative order-{} minor", k + 1);
                ensure!(cert.validate(&flag), "{tag}: returned certificate invalid");
                let found = ok(certify_not_tnn(&flag))?.ok_or(format!("{tag}: no certificate found"))?;
                ensure!(found.validate(&flag), "{tag}: searched certificate invalid");
            }
        }
    }
    ensure!(instances > 0, "no instances");

    let (flag, cert) = ok(converse_counterexample(4, &[1, 3], 1, 3))?;
    ensure!(*flag.rep() == Mat::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 0]]), "n=4 rep");
    let minor = ok(flag.rep().minor(&ok(SubsetIndex::parse(4, "2,4"))?, &SubsetIndex::initial(3, 2)))?;
    ensure!(minor == rat(-1), "order-2 minor on rows 2,4 is {minor}");
    ensure!(cert.m == 4 && cert.c == rat(1), "certificate m={} c={}", cert.m, cert.c);
    let v1 = ok(flag.subspace(1))?;
    let mut e14 = unit(4, 1);
    e14[3] = rat(1);
    ensure!(v1.contains_vector(&e14), "V_1 != span(e1+e4)");
    Ok(())
}

fn cyclic_counterexamples() -> Check {
    let start = Instant::now();
    for n in 3..=6 {
        for dims in nonempty_dims(n).into_iter().filter(|k| k.len() >= 2) {
            for eps in [Parity::Odd, Parity::Even] {
                let tag = format!("n={n} K={dims:?} eps={eps:?}");
                let (w, x, cert) = ok(cyclic_counterexample(n, &dims, eps))?;
                let full = ok(w.with_dims((1..n).collect()))?;
                ensure!(ok(classify_plucker(&full))? != PluckerClass::NotPluckerNonneg, "{tag}: W not nonnegative");
                ensure!(x == ok(cyclic_shift(&w, eps))?, "{tag}: X is not the shift of W");
                ensure!(cert.validate(&x), "{tag}: certificate invalid");
                let found = ok(certify_not_tnn(&x))?.ok_or(format!("{tag}: no certificate"))?;
                ensure!(found.validate(&x), "{tag}: searched certificate invalid");
            }
        }
    }
    within(start, Duration::from_secs(60))
}

fn dichotomy() -> Check {
    let start = Instant::now();
    for n in 3..=5 {
        for dims in nonempty_dims(n) {
            let report = ok(injectivity_experiment(n, &dims, DEFAULT_MAX_N))?;
            ensure!(report.injective == is_interval(&dims), "n={n} K={dims:?}: injective={}", report.injective);
        }
    }
    let report = ok(injectivity_experiment(4, &[1, 3], DEFAULT_MAX_N))?;
    ensure!(report.has_collision(("1234", "4231"), ("1324", "4231")), "worked collision missing");
    within(start, Duration::from_secs(600))
}

fn singleton_k() -> Check {
    for n in 2..=5 {
        for k in 1..n {
            ensure!(ok(injectivity_experiment(n, &[k], DEFAULT_MAX_N))?.injective, "n={n} K={{{k}}}");
        }
    }
    Ok(())
}

fn minkowski() -> Check {
    for dims in nonempty_dims(4) {
        for cell in ok(enumerate_cells(4, &dims))? {
            ensure!(minkowski_check(&cell), "n=4 K={dims:?} cell {cell}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xB1B);
    let all_dims = nonempty_dims(5);
    for _ in 0..100 {
        let dims = &all_dims[rng.gen_range(0..all_dims.len())];
        let cell = ok(random_cell(5, dims, &mut rng))?;
        ensure!(minkowski_check(&cell), "n=5 K={dims:?} cell {cell}");
    }
    let cell = ok(CellIndex::new(&[1, 3], perm("1234"), perm("4231")))?;
    let left = ok(CellIndex::new(&[1], perm("1234"), perm("4123")))?;
    let right = ok(CellIndex::new(&[3], perm("1234"), perm("2341")))?;
    let sum = ok(bip_vertices(&left).minkowski_sum(&bip_vertices(&right)))?;
    ensure!(bip_vertices(&cell).same_polytope(&sum), "displayed identity");
    ensure!(minkowski_summands(&cell) == vec![left, right], "summand cells");
    Ok(())
}

fn property_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for i in 0..500 {
        let (m, p, q) = (rng.gen_range(1..=4), rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = random_int_mat(m, p, 3, &mut rng);
        let b = random_int_mat(p, q, 3, &mut rng);
        let k = rng.gen_range(1..=m.min(q));
        ensure!(ok(cauchy_binet_check(&a, &b, k))?, "Cauchy-Binet triple {i}");
    }
    for i in 0..200 {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(1..n);
        let v = random_gr_point(n, k, &mut rng);
        let w = perp(&v);
        ensure!(perp(&w).same_subspace(&v), "duality involution {i}");
        let coords_w = w.plucker_coords();
        let lhs: Vec<Rat> = v.plucker_coords().into_iter().map(|x| x.1).collect();
        let rhs: Vec<Rat> = subsets(n, k)
            .iter()
            .map(|s| coords_w.iter().find(|(j, _)| *j == s.complement()).expect("complement").1.clone())
            .collect();
        ensure!(proportional(&lhs, &rhs), "complementary minors {i}");
    }
    let mut passing = 0;
    while passing < 200 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=rows);
        let a = fekete_candidate(rows, cols, &mut rng);
        if ok(fekete_positive(&a))? {
            passing += 1;
            ensure!(top_minors_positive(&a), "Fekete-passing matrix with a nonpositive top-order minor");
        }
    }
    for i in 0..100 {
        let n = rng.gen_range(2..=6);
        let (v, w, c) = random_nested_pair(n, &mut rng);
        ensure!(ok(counterexample_lemma_check(&v, &w, &c))?, "nested pair {i}");
    }
    let perms = all_perms(4);
    for v in &perms {
        for w in &perms {
            let leq = ok(bruhat_leq(v, w))?;
            ensure!(leq == bruhat_subword(v, w), "rank vs subword at {v},{w}");
            if !leq {
                continue;
            }
            for j in all_parabolics(4) {
                let (vj, _) = ok(parabolic_factor(v, &j))?;
                let (wj, _) = ok(parabolic_factor(w, &j))?;
                ensure!(ok(bruhat_leq(&vj, &wj))?, "projection monotonicity {v},{w},{j:?}");
                let (v2, w2) = ok(demazure_reduce(v, w, &j))?;
                ensure!(
                    ok(interval_mod_parabolic(v, w, &j))? == ok(interval_mod_parabolic(&v2, &w2, &j))?,
                    "reduction at {v},{w},{j:?}"
                );
            }
            for x in &perms {
                ensure!(ok(bruhat_leq(&ok(demazure_star(v, x))?, &ok(demazure_star(w, x))?))?, "∗ monotone");
                ensure!(ok(bruhat_leq(&ok(demazure_down(v, x))?, &ok(demazure_down(w, x))?))?, "◁ monotone");
            }
        }
    }
    Ok(())
}

fn perturbation_family() -> Check {
    for n in 1..=5 {
        for t in [ratio(1, 10), ratio(1, 3), ratio(1, 2), ratio(9, 10)] {
            let f = ok(f_family(n, &t))?;
            ensure!(ok(is_totally_positive(&f))?, "f({t}) at n={n}");
            ensure!(all_minors_positive(&f), "f({t}) at n={n} by cofactor oracle");
        }
        ensure!(ok(f_family(n, &rat(0)))? == Mat::identity(n), "f(0) at n={n}");
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("1 worked Coxeter examples", worked_examples),
        ("2 Plücker coordinate formulas", plucker_formulas),
        ("3 witnesses for interval K", witnesses_for_interval_k),
        ("4 converse counterexamples", converse_counterexamples),
        ("5 cyclic shift counterexamples", cyclic_counterexamples),
        ("6 cell/matroid dichotomy", dichotomy),
        ("7 singleton K injective", singleton_k),
        ("8 Minkowski identity", minkowski),
        ("9 property suites", property_suites),
        ("10 perturbation family", perturbation_family),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("[PASS] {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
