//! `flagpos verify`: families of checks with one PASS/FAIL line each.

use flagpos::exact::parse_rat;
use flagpos::flags::{
    classify_plucker, complete_flag, converse_counterexample, certify_not_tnn, cyclic_counterexample,
    cyclic_shift, is_interval, plucker, tp_witness_complete, Flag, Parity, PluckerClass,
};
use flagpos::positivity::{f_family, fekete_positive, is_totally_positive};
use flagpos::sample::{fekete_candidate, random_positive_flag, random_tnn_matrix};
use flagpos::strata::{enumerate_cells, injectivity_experiment, minkowski_check, InjectivityReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commands::{max_n, parse_dims};
use crate::output::{emit, Report};
use crate::{Failure, Status, Theorem, VerifyArgs};

/// Largest `n` for the matrix-based suites (`converse`, `cyclic`,
/// `fekete`, `perturb`).
pub const MATRIX_MAX_N: usize = 8;

#[derive(Serialize)]
struct Check {
    name: String,
    status: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    theorem: String,
    n: usize,
    #[serde(rename = "K")]
    dims: String,
    seed: u64,
    count: usize,
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    experiments: Vec<InjectivityReport>,
    status: &'static str,
}

impl Report for VerifyReport {
    fn csv_header(&self) -> Vec<String> {
        ["check", "status", "detail"].map(String::from).to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.checks.iter().map(|c| vec![c.name.clone(), c.status.to_string(), c.detail.clone()]).collect()
    }
}

struct Suite {
    checks: Vec<Check>,
    experiments: Vec<InjectivityReport>,
}

impl Suite {
    fn record(&mut self, name: String, outcome: Result<String, String>) {
        let (status, detail) = match outcome {
            Ok(detail) => ("PASS", detail),
            Err(detail) => ("FAIL", detail),
        };
        self.checks.push(Check { name, status, detail });
    }
}

fn dims_list(n: usize, text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    if text.trim() == "all" {
        let m = n.saturating_sub(1);
        let all: Vec<Vec<usize>> =
            (1u32..1 << m).map(|mask| (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect();
        if all.is_empty() {
            return Err(Failure::input(format!("no nonempty K ⊆ [1, {m}]")));
        }
        Ok(all)
    } else {
        let mut dims = parse_dims(text)?;
        dims.sort_unstable();
        dims.dedup();
        if dims.is_empty() || dims.iter().any(|&k| k == 0 || k >= n) {
            return Err(Failure::input(format!("K = {text} is not a nonempty subset of [1, {}]", n.saturating_sub(1))));
        }
        Ok(vec![dims])
    }
}

fn show(dims: &[usize]) -> String {
    dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn run(args: VerifyArgs) -> Result<Status, Failure> {
    let n = args.n;
    let count = args.count.unwrap_or(if args.theorem == Theorem::Fekete { 200 } else { 50 });
    let bound = match args.theorem {
        Theorem::Decompositions | Theorem::Minkowski => max_n()?,
        _ => MATRIX_MAX_N,
    };
    if n > bound {
        return Err(Failure::new(Status::ResourceBound, format!("n = {n} exceeds the bound {bound}")));
    }
    if n == 0 {
        return Err(Failure::input("n must be at least 1"));
    }
    let eps = match args.eps {
        Some(0) => return Err(Failure::input("--eps must be a positive integer")),
        e => e.map(Parity::of),
    };
    let all_dims = match args.theorem {
        Theorem::Fekete | Theorem::Perturb if args.dims.trim() == "all" => vec![(1..n).collect()],
        _ => dims_list(n, &args.dims)?,
    };
    let t = parse_rat(&args.t).map_err(Failure::from)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut suite = Suite { checks: Vec::new(), experiments: Vec::new() };

    match args.theorem {
        Theorem::Converse => {
            for dims in &all_dims {
                if is_interval(dims) {
                    let outcome = (|| {
                        for trial in 0..count {
                            let flag = random_positive_flag(n, dims, &mut rng).map_err(err)?;
                            witness_check(&flag).map_err(|e| format!("trial {trial}: {e}"))?;
                        }
                        Ok(format!("{} random Plücker-positive flags have verified witnesses", count))
                    })();
                    suite.record(format!("K={} witnesses", show(dims)), outcome);
                } else {
                    for pair in dims.windows(2).filter(|p| p[1] >= p[0] + 2) {
                        let (k, l) = (pair[0], pair[1]);
                        suite.record(format!("K={} k={k} l={l} counterexample", show(dims)), converse_check(n, dims, k, l));
                    }
                }
            }
        }
        Theorem::Cyclic => {
            if n < 3 {
                return Err(Failure::input("cyclic shifts need n ≥ 3"));
            }
            for dims in &all_dims {
                if dims.len() >= 2 {
                    let parities = match eps {
                        Some(p) => vec![p],
                        None => vec![Parity::Odd, Parity::Even],
                    };
                    for p in parities {
                        suite.record(
                            format!("K={} eps={} counterexample", show(dims), parity_digit(p)),
                            cyclic_check(n, dims, p),
                        );
                    }
                } else {
                    let p = Parity::of(dims[0]);
                    let outcome = (|| {
                        for trial in 0..count {
                            let flag = random_positive_flag(n, dims, &mut rng).map_err(err)?;
                            let shifted = cyclic_shift(&flag, p).map_err(err)?;
                            let k = dims[0];
                            let rotated = plucker(&flag, k).map_err(err)?.rotated();
                            if plucker(&shifted, k).map_err(err)? != rotated || !rotated.is_positive() {
                                return Err(format!("trial {trial}: shift is not the positive rotation"));
                            }
                        }
                        Ok(format!("{} random positive points stay positive", count))
                    })();
                    suite.record(format!("K={} eps={} rotation", show(dims), parity_digit(p)), outcome);
                }
            }
        }
        Theorem::Decompositions => {
            for dims in &all_dims {
                let report = injectivity_experiment(n, dims, bound)?;
                let expected = is_interval(dims);
                let mut detail = if report.injective {
                    "injective".to_string()
                } else {
                    let [a, b] = &report.collisions[0];
                    format!(
                        "not injective; {} collisions, e.g. ({},{}) and ({},{})",
                        report.collisions.len(),
                        a[0],
                        a[1],
                        b[0],
                        b[1]
                    )
                };
                detail.push_str(&format!("; {} cells, {} strata", report.cell_count, report.stratum_count));
                let outcome = if report.injective == expected { Ok(detail) } else { Err(detail) };
                suite.record(format!("K={}", show(dims)), outcome);
                suite.experiments.push(report);
            }
        }
        Theorem::Minkowski => {
            for dims in &all_dims {
                let cells = enumerate_cells(n, dims)?;
                let failing: Vec<String> =
                    cells.iter().filter(|c| !minkowski_check(c)).map(ToString::to_string).collect();
                let outcome = if failing.is_empty() {
                    Ok(format!("{} cells", cells.len()))
                } else {
                    Err(format!("failing cells: {}", failing.join(" ")))
                };
                suite.record(format!("K={}", show(dims)), outcome);
            }
        }
        Theorem::Fekete => {
            let outcome = (|| {
                let (mut passing, mut tried) = (0, 0);
                while passing < count {
                    tried += 1;
                    if tried > 1000 * count.max(1) {
                        return Err(format!("only {passing} of {tried} candidates passed the criterion"));
                    }
                    let cols = rng.gen_range(1..=n);
                    let a = fekete_candidate(n, cols, &mut rng);
                    if fekete_positive(&a).map_err(err)? {
                        passing += 1;
                        let top = a.all_minors(cols).map_err(err)?;
                        if let Some((rows, _, x)) = top.iter().find(|m| m.2 <= flagpos::exact::rat(0)) {
                            return Err(format!("accepted a matrix whose minor on rows {rows} is {x}"));
                        }
                    }
                }
                Ok(format!("{passing} passing matrices of {tried} candidates have positive top-order minors"))
            })();
            suite.record("fekete soundness".to_string(), outcome);
        }
        Theorem::Perturb => {
            let g = f_family(n, &t)?;
            let tp = is_totally_positive(&g)?;
            suite.record(format!("f({t}) totally positive"), if tp { Ok(String::new()) } else { Err(String::new()) });
            for dims in &all_dims {
                let top = *dims.last().expect("nonempty K");
                let outcome = (|| {
                    for trial in 0..count {
                        let a = random_tnn_matrix(n, &mut rng).first_columns(top);
                        let moved = Flag::new(n, dims.clone(), g.mul(&a).map_err(err)?).map_err(err)?;
                        if classify_plucker(&moved).map_err(err)? != PluckerClass::PluckerPositive {
                            return Err(format!("trial {trial}: g·W is not Plücker-positive"));
                        }
                    }
                    Ok(format!("{} random nonnegative flags", count))
                })();
                suite.record(format!("K={} g·W positive", show(dims)), outcome);
            }
        }
    }

    let passed = suite.checks.iter().all(|c| c.status == "PASS");
    let report = VerifyReport {
        theorem: format!("{:?}", args.theorem).to_lowercase(),
        n,
        dims: args.dims.clone(),
        seed: args.seed,
        count,
        checks: suite.checks,
        experiments: suite.experiments,
        status: if passed { "PASS" } else { "FAIL" },
    };
    emit(&report, &args.output)?;
    Ok(if passed { Status::Pass } else { Status::CheckFailed })
}

fn parity_digit(p: Parity) -> u8 {
    match p {
        Parity::Odd => 1,
        Parity::Even => 2,
    }
}

fn witness_check(flag: &Flag) -> Result<(), String> {
    let witness = tp_witness_complete(&complete_flag(flag).map_err(err)?).map_err(err)?;
    if !is_totally_positive(&witness.matrix).map_err(err)? {
        return Err("witness is not totally positive".into());
    }
    let as_flag = Flag::new(flag.n(), flag.dims().to_vec(), witness.matrix).map_err(err)?;
    for &k in flag.dims() {
        if plucker(&as_flag, k).map_err(err)? != plucker(flag, k).map_err(err)? {
            return Err(format!("witness represents a different flag at k = {k}"));
        }
    }
    Ok(())
}

fn converse_check(n: usize, dims: &[usize], k: usize, l: usize) -> Result<String, String> {
    let (flag, cert) = converse_counterexample(n, dims, k, l).map_err(err)?;
    let class = classify_plucker(&flag).map_err(err)?;
    if class != PluckerClass::PluckerNonnegNotPositive {
        return Err(format!("classified {class}"));
    }
    let negative = flag.left_minors(k + 1).map_err(err)?.into_iter().find(|(_, x)| *x < flagpos::exact::rat(0));
    let Some((rows, value)) = negative else {
        return Err(format!("no negative order-{} minor", k + 1));
    };
    let searched = certify_not_tnn(&flag).map_err(err)?.ok_or("no obstruction found")?;
    if !cert.validate(&flag) || !searched.validate(&flag) {
        return Err("certificate does not validate".into());
    }
    Ok(format!("{class}; minor on rows {rows} is {value}; certificate m={} c={}", cert.m, cert.c))
}

fn cyclic_check(n: usize, dims: &[usize], eps: Parity) -> Result<String, String> {
    let (w, x, cert) = cyclic_counterexample(n, dims, eps).map_err(err)?;
    let full = w.with_dims((1..n).collect()).map_err(err)?;
    if classify_plucker(&full).map_err(err)? == PluckerClass::NotPluckerNonneg {
        return Err("W is not Plücker-nonnegative at every order".into());
    }
    if x != cyclic_shift(&w, eps).map_err(err)? {
        return Err("X is not the shift of W".into());
    }
    if !cert.validate(&x) {
        return Err("certificate does not validate".into());
    }
    Ok(format!("W nonnegative; shift obstructed at k={} l={} m={}", cert.k, cert.l, cert.m))
}
