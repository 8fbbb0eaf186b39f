mod common;

use common::*;
use flagpos::flags::is_interval;
use flagpos::strata::*;

fn nonempty_dims(n: usize) -> Vec<Vec<usize>> {
    all_parabolics(n).into_iter().filter(|k| !k.is_empty()).collect()
}

#[test]
fn stratum_is_well_defined() {
    for n in 2..=4 {
        for dims in nonempty_dims(n) {
            for cell in enumerate_cells(n, &dims).unwrap() {
                assert_eq!(cell_matroid(&cell), cell_matroid_reduced(&cell), "{cell} K={dims:?}");
                for &k in &dims {
                    assert!(grassmann_consistency_check(&cell, k).unwrap());
                }
            }
        }
    }
}

#[test]
fn cell_strata_match_interval_oracle() {
    for cell in enumerate_cells(4, &[1, 3]).unwrap() {
        let stratum = cell_matroid(&cell);
        let elements = interval_oracle(cell.v(), cell.w());
        for &k in cell.dims() {
            let expected: std::collections::BTreeSet<Vec<usize>> =
                elements.iter().map(|x| x.image_of_initial(k)).collect();
            let got: std::collections::BTreeSet<Vec<usize>> =
                stratum.part(k).unwrap().iter().map(|s| s.members().to_vec()).collect();
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn dichotomy_up_to_four() {
    for n in 2..=4 {
        for dims in nonempty_dims(n) {
            let report = injectivity_experiment(n, &dims, DEFAULT_MAX_N).unwrap();
            assert_eq!(report.injective, is_interval(&dims), "n={n} K={dims:?}");
            assert_eq!(report.cell_count, enumerate_cells(n, &dims).unwrap().len());
        }
    }
}

#[test]
fn fast_and_direct_strata_counts_agree() {
    for dims in nonempty_dims(4) {
        let cells = enumerate_cells(4, &dims).unwrap();
        let strata: std::collections::BTreeSet<_> = cells.iter().map(cell_matroid).collect();
        let report = injectivity_experiment(4, &dims, DEFAULT_MAX_N).unwrap();
        assert_eq!(report.stratum_count, strata.len());
    }
}

#[test]
fn minkowski_identity_on_gapped_k() {
    for cell in enumerate_cells(4, &[1, 3]).unwrap() {
        assert!(minkowski_check(&cell), "{cell}");
    }
}

#[test]
fn zero_dimensional_cells_are_points() {
    for cell in enumerate_cells(4, &[2, 3]).unwrap().into_iter().filter(|c| c.dimension() == 0) {
        assert_eq!(bip_vertices(&cell).vertices().len(), 1);
    }
}
