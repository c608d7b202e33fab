//! Closed formulas on Rouquier weight spaces against directly computed
//! canonical bases.

mod golden;

use fock_core::rouquier::{
    mainrouq_formula, minimal_rouquier_bar_core, minimal_rouquier_core, verify_ct, verify_mainrouq,
    verify_quotient_round_trip,
};
use fock_core::{LaurentPoly, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn published_rouquier_table_from_quotients() {
    let table = &golden::BAR_CORE_10_7_4_1_H3_W4;
    let gamma = p("10,7,4,1");
    for (c, beta) in table.cols.iter().enumerate() {
        for (alpha, entries) in table.rows {
            let expected = match entries[c] {
                "." => LaurentPoly::zero(),
                e => e.parse().unwrap(),
            };
            assert_eq!(mainrouq_formula(&p(alpha), &p(beta), &gamma, 3).unwrap(), expected, "{alpha} / {beta}");
        }
    }
}

#[test]
fn type_a_formula_matches_llt() {
    for (m, max_w) in [(2, 3), (3, 3)] {
        for w in 1..=max_w {
            let nu = minimal_rouquier_core(w, m).unwrap();
            let report = verify_ct(&nu, w, m).unwrap();
            assert!(report.passed(), "{report}");
            let report = verify_quotient_round_trip(&nu, w, m).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
}

#[test]
fn bar_formula_matches_computed_basis() {
    for (h, max_w) in [(3, 4), (5, 3)] {
        for w in 1..=max_w {
            let gamma = minimal_rouquier_bar_core(w, h).unwrap();
            let report = verify_mainrouq(&gamma, w, h).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
}

#[test]
fn non_minimal_rouquier_cores() {
    let report = verify_mainrouq(&p("32,27,22,17,16,12,11,7,6,2,1"), 2, 5).unwrap();
    assert!(report.passed(), "{report}");
    let report = verify_ct(&p("5,3,1,1"), 2, 3).unwrap();
    assert!(report.passed(), "{report}");
}
