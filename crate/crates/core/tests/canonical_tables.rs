//! Computed canonical bases against the published tables.

mod golden;

use fock_core::fock::a1::llt_canonical_basis;
use fock_core::fock::a2::canonical_basis_a2;
use fock_core::{CanonicalBasisMatrix, LaurentPoly, Partition};
use golden::Table;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Differences between a computed matrix and a table, keyed by labels.
fn mismatches(mat: &CanonicalBasisMatrix, table: &Table) -> Vec<String> {
    let mut out = Vec::new();
    let mut rows: Vec<Partition> = table.rows.iter().map(|(r, _)| p(r)).collect();
    rows.sort();
    if rows != mat.rows {
        out.push(format!("row labels differ: {:?} vs {:?}", rows, mat.rows));
    }
    let mut cols: Vec<Partition> = table.cols.iter().map(|c| p(c)).collect();
    cols.sort();
    if cols != mat.cols {
        out.push(format!("column labels differ: {:?} vs {:?}", cols, mat.cols));
    }
    for (row, entries) in table.rows {
        for (col, e) in table.cols.iter().zip(entries.iter()) {
            let expected: LaurentPoly = if *e == "." { LaurentPoly::zero() } else { e.parse().unwrap() };
            let got = mat.entry(&p(row), &p(col)).cloned().unwrap_or_default();
            if got != expected {
                out.push(format!("({row}) x ({col}): got {got}, table has {expected}"));
            }
        }
    }
    out
}

#[test]
fn type_a1_core_2211() {
    let mat = llt_canonical_basis(&p("2,2,1,1"), 3, 3).unwrap();
    assert_eq!(mismatches(&mat, &golden::CORE_2211_M3_W3), Vec::<String>::new());
    assert!(mat.check_shape().passed());
}

#[test]
fn type_a2_bar_core_h5() {
    let mat = canonical_basis_a2(&p("12,11,7,6,2,1"), 3, 5).unwrap();
    assert_eq!(mismatches(&mat, &golden::BAR_CORE_12_11_7_6_2_1_H5_W3), Vec::<String>::new());
    assert!(mat.check_shape().passed());
}

#[test]
fn type_a2_bar_core_h3() {
    let mat = canonical_basis_a2(&p("10,7,4,1"), 4, 3).unwrap();
    assert_eq!(mismatches(&mat, &golden::BAR_CORE_10_7_4_1_H3_W4), Vec::<String>::new());
    assert!(mat.check_shape().passed());
}
