//! Byte-for-byte comparison of dumps against files in `tests/golden`.
//! Run with `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use koszul_graphs::freealg::{MonomialOrder, Precedence};
use koszul_graphs::graphs::{Family, Graph};
use koszul_graphs::groebner::{complete, complete_exterior};
use koszul_graphs::presentations::{b_presentation, bdual_handwritten, q_presentation, quadratic_dual};

fn check(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} differs from the golden file");
}

fn path3() -> Graph {
    Graph::named_family(Family::Line, 3).unwrap()
}

#[test]
fn presentation_dumps() {
    let g = path3();
    check("path3_q.txt", &q_presentation(&g).dump());
    check("path3_b.txt", &b_presentation(&g).dump());
    check(
        "path3_bdual_orthogonal.txt",
        &quadratic_dual(&b_presentation(&g)).dump(),
    );
}

#[test]
fn groebner_dumps() {
    let h = bdual_handwritten(&path3());
    let ord = MonomialOrder::new(h.alphabet(), Precedence::Default);
    let gb = complete(&h, &ord, 4);
    check(
        "path3_bdual_gb.txt",
        &format!("{}dims {}\n", gb.dump(), gb.dim_vector(4).unwrap().render()),
    );
    let ext = complete_exterior(&h, &ord, 4);
    check(
        "path3_bdual_exterior_gb.txt",
        &format!("{}dims {}\n", ext.dump(), ext.dim_vector(4).unwrap().render()),
    );
    let q = q_presentation(&path3());
    let qgb = complete(&q, &MonomialOrder::new(q.alphabet(), Precedence::Default), 3);
    check(
        "path3_q_gb.txt",
        &format!("{}dims {}\n", qgb.dump(), qgb.dim_vector(3).unwrap().render()),
    );
}
