//! A fixed list of small rings used by the test suites, benches and the CLI.

use crate::build::{local_f2_xy, GroupSpec, RingExpr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub expr: RingExpr,
}

fn fp_algebra(p: u32, labels: &[&str], consts: &[(u32, u32, u32, u32)]) -> RingExpr {
    RingExpr::FpAlgebra {
        p,
        dim: labels.len() as u32,
        labels: labels.iter().map(|l| l.to_string()).collect(),
        consts: consts.to_vec(),
    }
}

/// `F_2[x, y]/(x², y²)`, local and Frobenius, order 16.
pub fn f2_xy_squares() -> RingExpr {
    // basis 1, x, y, xy
    fp_algebra(
        2,
        &["1", "x", "y", "xy"],
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (0, 3, 3, 1),
            (3, 0, 3, 1),
            (1, 2, 3, 1),
            (2, 1, 3, 1),
        ],
    )
}

/// Upper triangular 2×2 matrices over `F_2`.
pub fn upper_triangular_f2() -> RingExpr {
    // basis e11, e12, e22
    fp_algebra(
        2,
        &["e11", "e12", "e22"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
    )
}

/// Every ring here has order at most 64.
pub fn standard_catalog() -> Vec<CatalogEntry> {
    let f2 = || RingExpr::zmod(2);
    let entry = |name, expr| CatalogEntry { name, expr };
    vec![
        entry("Z/2", f2()),
        entry("Z/3", RingExpr::zmod(3)),
        entry("Z/4", RingExpr::zmod(4)),
        entry("Z/6", RingExpr::zmod(6)),
        entry("Z/8", RingExpr::zmod(8)),
        entry("Z/9", RingExpr::zmod(9)),
        entry("Z/12", RingExpr::zmod(12)),
        entry("F_4", RingExpr::gf(2, 2)),
        entry("F_8", RingExpr::gf(2, 3)),
        entry("F_2xF_2", RingExpr::product(vec![f2(), f2()])),
        entry("Z/2xZ/4", RingExpr::product(vec![f2(), RingExpr::zmod(4)])),
        entry("M_2(F_2)", RingExpr::matrix(2, f2())),
        entry("F_2[C_2]", RingExpr::group_ring(f2(), GroupSpec::Cyclic(2))),
        entry("F_2[C_3]", RingExpr::group_ring(f2(), GroupSpec::Cyclic(3))),
        entry("F_2[C_4]", RingExpr::group_ring(f2(), GroupSpec::Cyclic(4))),
        entry("F_2[S_3]", RingExpr::group_ring(f2(), GroupSpec::Sym3)),
        entry(
            "F_3[C_3]",
            RingExpr::group_ring(RingExpr::zmod(3), GroupSpec::Cyclic(3)),
        ),
        entry("F_2[x,y]/(x,y)^2", local_f2_xy()),
        entry("F_2[x,y]/(x^2,y^2)", f2_xy_squares()),
        entry("T_2(F_2)", upper_triangular_f2()),
        entry("T_2(F_2)^op", RingExpr::opposite(upper_triangular_f2())),
        entry(
            "F_2[x,y]/(x,y)^2 x F_2",
            RingExpr::product(vec![local_f2_xy(), f2()]),
        ),
        entry(
            "M_2(F_2) x F_3",
            RingExpr::product(vec![RingExpr::matrix(2, f2()), RingExpr::zmod(3)]),
        ),
    ]
}
