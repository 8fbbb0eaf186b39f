use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use flagpos::coxeter::Perm;
use flagpos::exact::Mat;
use flagpos::flags::{
    classify_plucker, complete_flag, converse_counterexample, cyclic_counterexample, cyclic_shift,
    is_interval, plucker, tp_witness_complete, Flag, ObstructionCertificate, Parity, PluckerClass,
    PluckerVector, PositivityClass,
};
use flagpos::positivity::is_totally_positive;
use flagpos::strata::{bip_vertices, injectivity_experiment, CellIndex, InjectivityReport, DEFAULT_MAX_N};
use serde::Serialize;

use crate::output::{emit, matrix_header, matrix_rows, Report};
use crate::{Command, CounterexampleKind, Failure, Status};

pub fn run(command: Command) -> Result<Status, Failure> {
    match command {
        Command::Pluecker { file, output } => {
            let flag = read_flag(&file)?;
            let mut vectors = BTreeMap::new();
            for &k in flag.dims() {
                vectors.insert(k, plucker(&flag, k)?);
            }
            let report = PluckerReport {
                n: flag.n(),
                dims: flag.dims().to_vec(),
                class: classify_plucker(&flag)?,
                plucker: vectors,
            };
            emit(&report, &output)?;
        }
        Command::Classify { file, output } => {
            let flag = read_flag(&file)?;
            let class = flagpos::flags::is_lusztig_positive(&flag)?;
            emit(&ClassifyReport { n: flag.n(), dims: flag.dims().to_vec(), class }, &output)?;
        }
        Command::Witness { file, output } => {
            let flag = read_flag(&file)?;
            check_completable(&flag)?;
            let witness = tp_witness_complete(&complete_flag(&flag)?)?;
            if !is_totally_positive(&witness.matrix)? {
                return Err(Failure::new(Status::CheckFailed, "witness failed verification"));
            }
            let as_flag = Flag::new(flag.n(), flag.dims().to_vec(), witness.matrix.clone())?;
            for &k in flag.dims() {
                if plucker(&as_flag, k)? != plucker(&flag, k)? {
                    return Err(Failure::new(Status::CheckFailed, format!("witness disagrees at k = {k}")));
                }
            }
            let report =
                WitnessReport { n: flag.n(), dims: flag.dims().to_vec(), t: witness.t.to_string(), matrix: witness.matrix, verified: true };
            emit(&report, &output)?;
        }
        Command::Complete { file, output } => {
            let flag = read_flag(&file)?;
            check_completable(&flag)?;
            emit(&FlagReport(complete_flag(&flag)?), &output)?;
        }
        Command::Shift { file, eps, output } => {
            let flag = read_flag(&file)?;
            if eps == 0 {
                return Err(Failure::input("--eps must be a positive integer"));
            }
            emit(&FlagReport(cyclic_shift(&flag, Parity::of(eps))?), &output)?;
        }
        Command::Counterexample { kind, n, dims, k, l, eps, output } => {
            let dims = parse_dims(&dims)?;
            match kind {
                CounterexampleKind::Converse => {
                    let (k, l) = match (k, l) {
                        (Some(k), Some(l)) => (k, l),
                        (None, None) => first_gap(&dims)
                            .ok_or_else(|| Failure::input(format!("K = {dims:?} has no gap of size ≥ 2")))?,
                        _ => return Err(Failure::input("give both --k and --l, or neither")),
                    };
                    let (flag, certificate) = converse_counterexample(n, &dims, k, l)?;
                    let valid = certificate.validate(&flag);
                    emit(&ConverseReport { flag, certificate, valid }, &output)?;
                    if !valid {
                        return Ok(Status::CheckFailed);
                    }
                }
                CounterexampleKind::Cyclic => {
                    let eps = eps.ok_or_else(|| Failure::input("cyclic counterexample needs --eps"))?;
                    if eps == 0 {
                        return Err(Failure::input("--eps must be a positive integer"));
                    }
                    let (w, x, certificate) = cyclic_counterexample(n, &dims, Parity::of(eps))?;
                    let valid = certificate.validate(&x);
                    emit(&CyclicReport { w, x, certificate, valid }, &output)?;
                    if !valid {
                        return Ok(Status::CheckFailed);
                    }
                }
            }
        }
        Command::Verify(args) => return crate::verify::run(args),
        Command::Strata { n, dims, output } => {
            let dims = parse_dims(&dims)?;
            let report = injectivity_experiment(n, &dims, max_n()?)?;
            emit(&StrataReport(report), &output)?;
        }
        Command::Bip { n, dims, v, w, output } => {
            let dims = parse_dims(&dims)?;
            let bound = max_n()?;
            if n > bound {
                return Err(Failure::new(Status::ResourceBound, format!("n = {n} exceeds the bound {bound}")));
            }
            let (v, w) = (parse_perm(&v)?, parse_perm(&w)?);
            if v.n() != n || w.n() != n {
                return Err(Failure::input(format!("permutations must have {n} entries")));
            }
            let cell = CellIndex::new(&dims, v, w)?;
            let polytope = bip_vertices(&cell);
            let report = BipReport {
                n,
                dims,
                v: cell.v().to_string(),
                w: cell.w().to_string(),
                vertices: polytope.vertices().to_vec(),
            };
            emit(&report, &output)?;
        }
    }
    Ok(Status::Pass)
}

pub fn read_flag(path: &Path) -> Result<Flag, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Parses a comma list such as `1,3`.
pub fn parse_dims(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Failure::input(format!("bad K {text:?}"))))
        .collect()
}

pub fn parse_perm(text: &str) -> Result<Perm, Failure> {
    text.parse::<Perm>().map_err(Failure::from)
}

/// The stratification bound, from `FLAGPOS_MAX_N` if set.
pub fn max_n() -> Result<usize, Failure> {
    match std::env::var("FLAGPOS_MAX_N") {
        Ok(text) => text.trim().parse().map_err(|_| Failure::input(format!("bad FLAGPOS_MAX_N {text:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn first_gap(dims: &[usize]) -> Option<(usize, usize)> {
    dims.windows(2).find(|p| p[1] >= p[0] + 2).map(|p| (p[0], p[1]))
}

fn check_completable(flag: &Flag) -> Result<(), Failure> {
    if !is_interval(flag.dims()) {
        return Err(Failure::new(Status::NotInterval, format!("K = {:?} is not an interval", flag.dims())));
    }
    let class = classify_plucker(flag)?;
    if class != PluckerClass::PluckerPositive {
        return Err(Failure::new(Status::NotPluckerPositive, format!("flag is {class}, not Plücker-positive")));
    }
    Ok(())
}

#[derive(Serialize)]
struct PluckerReport {
    n: usize,
    #[serde(rename = "K")]
    dims: Vec<usize>,
    class: PluckerClass,
    plucker: BTreeMap<usize, PluckerVector>,
}

impl Report for PluckerReport {
    fn csv_header(&self) -> Vec<String> {
        ["k", "subset", "value"].map(String::from).to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.plucker
            .iter()
            .flat_map(|(k, vector)| {
                vector.coords().iter().map(move |(i, x)| vec![k.to_string(), i.to_string(), x.to_string()])
            })
            .collect()
    }
}

#[derive(Serialize)]
struct ClassifyReport {
    n: usize,
    #[serde(rename = "K")]
    dims: Vec<usize>,
    class: PositivityClass,
}

impl Report for ClassifyReport {
    fn csv_header(&self) -> Vec<String> {
        ["plucker", "lusztig"].map(String::from).to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let status = serde_json::to_value(&self.class.lusztig)
            .ok()
            .and_then(|v| v.get("status").and_then(|s| s.as_str()).map(String::from))
            .unwrap_or_default();
        vec![vec![self.class.plucker.to_string(), status]]
    }
}

#[derive(Serialize)]
struct WitnessReport {
    n: usize,
    #[serde(rename = "K")]
    dims: Vec<usize>,
    t: String,
    matrix: Mat,
    verified: bool,
}

impl Report for WitnessReport {
    fn csv_header(&self) -> Vec<String> {
        matrix_header(&self.matrix)
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        matrix_rows(&self.matrix)
    }
}

#[derive(Serialize)]
#[serde(transparent)]
struct FlagReport(Flag);

impl Report for FlagReport {
    fn csv_header(&self) -> Vec<String> {
        matrix_header(self.0.rep())
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        matrix_rows(self.0.rep())
    }
}

fn labelled_rows(label: &str, m: &Mat) -> Vec<Vec<String>> {
    matrix_rows(m)
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut out = vec![label.to_string(), (i + 1).to_string()];
            out.extend(row);
            out
        })
        .collect()
}

fn labelled_header(m: &Mat) -> Vec<String> {
    let mut header = vec!["matrix".to_string(), "row".to_string()];
    header.extend(matrix_header(m));
    header
}

#[derive(Serialize)]
struct ConverseReport {
    flag: Flag,
    certificate: ObstructionCertificate,
    valid: bool,
}

impl Report for ConverseReport {
    fn csv_header(&self) -> Vec<String> {
        labelled_header(self.flag.rep())
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        labelled_rows("V", self.flag.rep())
    }
}

#[derive(Serialize)]
struct CyclicReport {
    #[serde(rename = "W")]
    w: Flag,
    #[serde(rename = "X")]
    x: Flag,
    certificate: ObstructionCertificate,
    valid: bool,
}

impl Report for CyclicReport {
    fn csv_header(&self) -> Vec<String> {
        labelled_header(self.w.rep())
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = labelled_rows("W", self.w.rep());
        rows.extend(labelled_rows("X", self.x.rep()));
        rows
    }
}

#[derive(Serialize)]
#[serde(transparent)]
struct StrataReport(InjectivityReport);

impl Report for StrataReport {
    fn csv_header(&self) -> Vec<String> {
        ["v1", "w1", "v2", "w2"].map(String::from).to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .collisions
            .iter()
            .map(|[a, b]| vec![a[0].clone(), a[1].clone(), b[0].clone(), b[1].clone()])
            .collect()
    }
}

#[derive(Serialize)]
struct BipReport {
    n: usize,
    #[serde(rename = "K")]
    dims: Vec<usize>,
    v: String,
    w: String,
    vertices: Vec<Vec<i64>>,
}

impl Report for BipReport {
    fn csv_header(&self) -> Vec<String> {
        (1..=self.n).map(|i| format!("x{i}")).collect()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.vertices.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect()
    }
}
