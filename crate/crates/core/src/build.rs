//! Constructors turning a [`RingExpr`] into explicit tables.
//!
//! Every constructor uses a fixed mixed-radix element encoding, so the same
//! expression always yields the same indexing:
//!
//! * `ZMod(n)`: the residue itself.
//! * `GaloisField`: `Σ c_i p^i` over the coefficient vector.
//! * `Matrix(k, B)`: entry `(i, j)` is digit `i·k + j` in base `|B|`.
//! * `Product`: component `t` is digit `t`, first factor least significant.
//! * `GroupRing(B, G)`: coefficient of group element `g` is digit `g`.
//! * `FpAlgebra`: coefficient of basis vector `i` is digit `i` in base `p`.
//! * `Opposite(B)`: same indices as `B`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Finite groups available as group-ring coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    Cyclic(u32),
    Dihedral(u32),
    Sym3,
}

/// Syntax tree describing how a ring is built.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingExpr {
    ZMod(u32),
    /// `F_{p^k}` modulo a monic polynomial given by `c_0..c_k`, or the least
    /// irreducible one when absent.
    GaloisField {
        p: u32,
        k: u32,
        poly: Option<Vec<u32>>,
    },
    Matrix {
        size: u32,
        base: Box<RingExpr>,
    },
    Product(Vec<RingExpr>),
    GroupRing {
        base: Box<RingExpr>,
        group: GroupSpec,
    },
    /// Algebra over `F_p` with basis `labels` and structure constants
    /// `(i, j, k, v)` meaning the coefficient of `b_k` in `b_i · b_j` is `v`.
    FpAlgebra {
        p: u32,
        dim: u32,
        labels: Vec<String>,
        consts: Vec<(u32, u32, u32, u32)>,
    },
    Opposite(Box<RingExpr>),
}

impl RingExpr {
    pub fn zmod(n: u32) -> Self {
        RingExpr::ZMod(n)
    }

    pub fn gf(p: u32, k: u32) -> Self {
        RingExpr::GaloisField { p, k, poly: None }
    }

    pub fn matrix(size: u32, base: RingExpr) -> Self {
        RingExpr::Matrix {
            size,
            base: Box::new(base),
        }
    }

    pub fn product(factors: Vec<RingExpr>) -> Self {
        RingExpr::Product(factors)
    }

    pub fn group_ring(base: RingExpr, group: GroupSpec) -> Self {
        RingExpr::GroupRing {
            base: Box::new(base),
            group,
        }
    }

    pub fn opposite(base: RingExpr) -> Self {
        RingExpr::Opposite(Box::new(base))
    }

    /// The ring order, or `None` if it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        match self {
            RingExpr::ZMod(n) => Some(*n as u128),
            RingExpr::GaloisField { p, k, .. } => (*p as u128).checked_pow(*k),
            RingExpr::Matrix { size, base } => base.order()?.checked_pow(size.checked_mul(*size)?),
            RingExpr::Product(fs) => fs
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.order()?)),
            RingExpr::GroupRing { base, group } => base.order()?.checked_pow(group_order(group)?),
            RingExpr::FpAlgebra { p, dim, .. } => (*p as u128).checked_pow(*dim),
            RingExpr::Opposite(b) => b.order(),
        }
    }
}

fn group_order(g: &GroupSpec) -> Option<u32> {
    match g {
        GroupSpec::Cyclic(m) => Some(*m),
        GroupSpec::Dihedral(m) => m.checked_mul(2),
        GroupSpec::Sym3 => Some(6),
    }
}

pub fn build_ring(expr: &RingExpr) -> Result<FiniteRing> {
    build_ring_with_cap(expr, DEFAULT_ORDER_CAP)
}

/// Builds `expr`, refusing before any allocation if the order exceeds `cap`.
pub fn build_ring_with_cap(expr: &RingExpr, cap: usize) -> Result<FiniteRing> {
    let limit = cap as u64;
    match expr.order() {
        Some(n) if n <= cap as u128 => {}
        _ => {
            return Err(Error::CapExceeded {
                what: "ring order",
                limit,
            })
        }
    }
    build_node(expr)
}

fn build_node(expr: &RingExpr) -> Result<FiniteRing> {
    match expr {
        RingExpr::ZMod(n) => zmod(*n),
        RingExpr::GaloisField { p, k, poly } => galois_field(*p, *k, poly.as_deref()),
        RingExpr::Matrix { size, base } => matrix_ring(*size, &build_node(base)?),
        RingExpr::Product(factors) => {
            let rings = factors.iter().map(build_node).collect::<Result<Vec<_>>>()?;
            product(&rings)
        }
        RingExpr::GroupRing { base, group } => group_ring(&build_node(base)?, group),
        RingExpr::FpAlgebra {
            p,
            dim,
            labels,
            consts,
        } => fp_algebra(*p, *dim, labels, consts),
        RingExpr::Opposite(base) => Ok(build_node(base)?.opposite()),
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn zmod(n: u32) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "ZMod modulus must be positive".into(),
        ));
    }
    let m = n as usize;
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            add.push(((a + b) % m) as Elem);
            mul.push(((a * b) % m) as Elem);
        }
    }
    let labels = (0..m).map(|a| a.to_string()).collect();
    Ok(FiniteRing::from_parts(
        format!("Z/{n}"),
        m,
        add,
        mul,
        0,
        (1 % m) as Elem,
        Some(labels),
    ))
}

/// Digits of `x` in the mixed radix given by `radices`, least significant first.
pub fn mixed_radix_digits(radices: &[usize], mut x: usize) -> Vec<Elem> {
    radices
        .iter()
        .map(|&r| {
            let d = x % r;
            x /= r;
            d as Elem
        })
        .collect()
}

pub fn mixed_radix_index(radices: &[usize], digits: &[Elem]) -> usize {
    digits
        .iter()
        .zip(radices)
        .rev()
        .fold(0, |acc, (&d, &r)| acc * r + d as usize)
}

/// Components of a product-ring element.
pub fn product_components(orders: &[usize], x: Elem) -> Vec<Elem> {
    mixed_radix_digits(orders, x as usize)
}

/// Row-major entries of a matrix-ring element.
pub fn matrix_entries(size: usize, base_order: usize, x: Elem) -> Vec<Elem> {
    mixed_radix_digits(&vec![base_order; size * size], x as usize)
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, coefficient vectors with the constant term first.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inverse(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    (1..p)
        .find(|&b| (a as u64 * b as u64) % p as u64 == 1)
        .unwrap_or(0)
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for low in 0..count {
            let mut g = mixed_radix_digits(&vec![p as usize; d], low);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn galois_field(p: u32, k: u32, poly: Option<&[u32]>) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter(
            "field degree must be positive".into(),
        ));
    }
    let kk = k as usize;
    let modulus = match poly {
        Some(c) => {
            if c.len() != kk + 1 || c[kk] != 1 || c.iter().any(|&x| x >= p) {
                return Err(Error::InvalidParameter(format!(
                    "field polynomial must be monic of degree {k} with coefficients below {p}"
                )));
            }
            if !is_irreducible(c, p) {
                return Err(Error::ReduciblePolynomial(c.to_vec()));
            }
            c.to_vec()
        }
        None => {
            let count = (p as usize).pow(k);
            (0..count)
                .map(|low| {
                    let mut f = mixed_radix_digits(&vec![p as usize; kk], low);
                    f.push(1);
                    f
                })
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        }
    };
    let radices = vec![p as usize; kk];
    let n = (p as usize).pow(k);
    let coeffs: Vec<Vec<u32>> = (0..n).map(|x| mixed_radix_digits(&radices, x)).collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in &coeffs {
        for b in &coeffs {
            let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
            add.push(mixed_radix_index(&radices, &s) as Elem);
            let mut prod = vec![0u32; 2 * kk];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
                }
            }
            let mut r = poly_rem(&prod, &modulus, p);
            r.resize(kk, 0);
            mul.push(mixed_radix_index(&radices, &r) as Elem);
        }
    }
    let labels = coeffs.iter().map(|c| poly_label(c)).collect();
    let name = if k == 1 {
        format!("F_{p}")
    } else {
        format!("F_{}", n)
    };
    Ok(FiniteRing::from_parts(
        name,
        n,
        add,
        mul,
        0,
        1,
        Some(labels),
    ))
}

fn poly_label(c: &[u32]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| {
            let coef = if x == 1 && i > 0 {
                String::new()
            } else {
                x.to_string()
            };
            match i {
                0 => coef,
                1 => format!("{coef}a"),
                _ => format!("{coef}a^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

// ---------------------------------------------------------------------------

fn matrix_ring(size: u32, base: &FiniteRing) -> Result<FiniteRing> {
    if size == 0 {
        return Err(Error::InvalidParameter(
            "matrix size must be positive".into(),
        ));
    }
    let k = size as usize;
    let b = base.order();
    let radices = vec![b; k * k];
    let n = b.pow((k * k) as u32);
    let entries: Vec<Vec<Elem>> = (0..n).map(|x| mixed_radix_digits(&radices, x)).collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut buf = vec![0; k * k];
    for x in &entries {
        for y in &entries {
            for (slot, (&a, &c)) in buf.iter_mut().zip(x.iter().zip(y)) {
                *slot = base.add(a, c);
            }
            add.push(mixed_radix_index(&radices, &buf) as Elem);
            for i in 0..k {
                for j in 0..k {
                    let mut acc = base.zero();
                    for l in 0..k {
                        acc = base.add(acc, base.mul(x[i * k + l], y[l * k + j]));
                    }
                    buf[i * k + j] = acc;
                }
            }
            mul.push(mixed_radix_index(&radices, &buf) as Elem);
        }
    }
    let diag_one: Vec<Elem> = (0..k * k)
        .map(|pos| {
            if pos / k == pos % k {
                base.one()
            } else {
                base.zero()
            }
        })
        .collect();
    let zero = mixed_radix_index(&radices, &vec![base.zero(); k * k]) as Elem;
    let one = mixed_radix_index(&radices, &diag_one) as Elem;
    let labels = entries
        .iter()
        .map(|e| {
            let rows: Vec<String> = e
                .chunks(k)
                .map(|row| {
                    let cells: Vec<String> = row.iter().map(|&c| base.label(c)).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    Ok(FiniteRing::from_parts(
        format!("M_{k}({})", base.name()),
        n,
        add,
        mul,
        zero,
        one,
        Some(labels),
    ))
}

fn product(rings: &[FiniteRing]) -> Result<FiniteRing> {
    if rings.is_empty() {
        return Err(Error::InvalidParameter("empty product".into()));
    }
    let radices: Vec<usize> = rings.iter().map(FiniteRing::order).collect();
    let n: usize = radices.iter().product();
    let comps: Vec<Vec<Elem>> = (0..n).map(|x| mixed_radix_digits(&radices, x)).collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut buf = vec![0; rings.len()];
    for x in &comps {
        for y in &comps {
            for (t, r) in rings.iter().enumerate() {
                buf[t] = r.add(x[t], y[t]);
            }
            add.push(mixed_radix_index(&radices, &buf) as Elem);
            for (t, r) in rings.iter().enumerate() {
                buf[t] = r.mul(x[t], y[t]);
            }
            mul.push(mixed_radix_index(&radices, &buf) as Elem);
        }
    }
    let zeros: Vec<Elem> = rings.iter().map(FiniteRing::zero).collect();
    let ones: Vec<Elem> = rings.iter().map(FiniteRing::one).collect();
    let labels = comps
        .iter()
        .map(|c| {
            let parts: Vec<String> = c.iter().zip(rings).map(|(&e, r)| r.label(e)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let name = rings
        .iter()
        .map(|r| r.name().to_string())
        .collect::<Vec<_>>()
        .join("x");
    Ok(FiniteRing::from_parts(
        name,
        n,
        add,
        mul,
        mixed_radix_index(&radices, &zeros) as Elem,
        mixed_radix_index(&radices, &ones) as Elem,
        Some(labels),
    ))
}

/// Multiplication table and element labels of a small group; element 0 is
/// the identity.
struct GroupTable {
    name: String,
    mul: Vec<usize>,
    labels: Vec<String>,
}

fn group_table(g: &GroupSpec) -> Result<GroupTable> {
    match *g {
        GroupSpec::Cyclic(m) => {
            if m == 0 {
                return Err(Error::InvalidParameter(
                    "cyclic group order must be positive".into(),
                ));
            }
            let m = m as usize;
            let mul = (0..m * m).map(|i| (i / m + i % m) % m).collect();
            let labels = (0..m)
                .map(|i| match i {
                    0 => "1".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{i}"),
                })
                .collect();
            Ok(GroupTable {
                name: format!("C_{m}"),
                mul,
                labels,
            })
        }
        GroupSpec::Dihedral(m) => {
            if m < 2 {
                return Err(Error::InvalidParameter(
                    "dihedral parameter must be at least 2".into(),
                ));
            }
            // r^i s^j at index i + m·j, with s r = r^{-1} s
            let m = m as usize;
            let n = 2 * m;
            let mut mul = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    let (a, b) = (x % m, x / m);
                    let (c, d) = (y % m, y / m);
                    let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
                    mul.push(rot + m * ((b + d) % 2));
                }
            }
            let labels = (0..n)
                .map(|x| {
                    let (i, j) = (x % m, x / m);
                    let r = match i {
                        0 => String::new(),
                        1 => "r".to_string(),
                        _ => format!("r^{i}"),
                    };
                    match (r.is_empty(), j) {
                        (true, 0) => "1".to_string(),
                        (_, 0) => r,
                        _ => format!("{r}s"),
                    }
                })
                .collect();
            Ok(GroupTable {
                name: format!("D_{m}"),
                mul,
                labels,
            })
        }
        GroupSpec::Sym3 => {
            let perms: Vec<[usize; 3]> = vec![
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ];
            let mut mul = Vec::with_capacity(36);
            for s in &perms {
                for t in &perms {
                    // (s ∘ t)(i) = s(t(i))
                    let c = [s[t[0]], s[t[1]], s[t[2]]];
                    mul.push(perms.iter().position(|q| *q == c).unwrap());
                }
            }
            let labels = perms
                .iter()
                .map(|q| {
                    if *q == [0, 1, 2] {
                        "1".to_string()
                    } else {
                        format!("p{}{}{}", q[0] + 1, q[1] + 1, q[2] + 1)
                    }
                })
                .collect();
            Ok(GroupTable {
                name: "S_3".into(),
                mul,
                labels,
            })
        }
    }
}

fn group_ring(base: &FiniteRing, g: &GroupSpec) -> Result<FiniteRing> {
    let group = group_table(g)?;
    let m = group.labels.len();
    let b = base.order();
    let radices = vec![b; m];
    let n = b.pow(m as u32);
    let coeffs: Vec<Vec<Elem>> = (0..n).map(|x| mixed_radix_digits(&radices, x)).collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut buf = vec![0; m];
    for x in &coeffs {
        for y in &coeffs {
            for (slot, (&a, &c)) in buf.iter_mut().zip(x.iter().zip(y)) {
                *slot = base.add(a, c);
            }
            add.push(mixed_radix_index(&radices, &buf) as Elem);
            buf.iter_mut().for_each(|s| *s = base.zero());
            for (g, &a) in x.iter().enumerate() {
                if a == base.zero() {
                    continue;
                }
                for (h, &c) in y.iter().enumerate() {
                    let gh = group.mul[g * m + h];
                    buf[gh] = base.add(buf[gh], base.mul(a, c));
                }
            }
            mul.push(mixed_radix_index(&radices, &buf) as Elem);
        }
    }
    let mut one = vec![base.zero(); m];
    one[0] = base.one();
    let zero = mixed_radix_index(&radices, &vec![base.zero(); m]) as Elem;
    let labels = coeffs
        .iter()
        .map(|c| {
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != base.zero())
                .map(|(g, &a)| {
                    let coef = base.label(a);
                    match (g, a == base.one()) {
                        (0, _) => coef,
                        (_, true) => group.labels[g].clone(),
                        _ => format!("{coef}*{}", group.labels[g]),
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    Ok(FiniteRing::from_parts(
        format!("{}[{}]", base.name(), group.name),
        n,
        add,
        mul,
        zero,
        mixed_radix_index(&radices, &one) as Elem,
        Some(labels),
    ))
}

fn fp_algebra(
    p: u32,
    dim: u32,
    labels: &[String],
    consts: &[(u32, u32, u32, u32)],
) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let d = dim as usize;
    if d == 0 || labels.len() != d {
        return Err(Error::InvalidParameter(format!(
            "algebra of dimension {dim} needs {dim} basis labels"
        )));
    }
    // c[(i * d + j) * d + k]: coefficient of b_k in b_i b_j
    let mut c = vec![0u32; d * d * d];
    for &(i, j, k, v) in consts {
        if i >= dim || j >= dim || k >= dim {
            return Err(Error::InvalidParameter(format!(
                "structure constant index ({i}, {j}, {k}) out of range"
            )));
        }
        c[(i as usize * d + j as usize) * d + k as usize] = v % p;
    }
    let pm = p as u64;
    let mul_vec = |x: &[u32], y: &[u32]| -> Vec<u32> {
        let mut out = vec![0u64; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = xi as u64 * yj as u64 % pm;
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + s * c[(i * d + j) * d + k] as u64) % pm;
                }
            }
        }
        out.into_iter().map(|v| v as u32).collect()
    };
    let basis: Vec<Vec<u32>> = (0..d)
        .map(|i| (0..d).map(|k| u32::from(i == k)).collect())
        .collect();
    for x in &basis {
        for y in &basis {
            let xy = mul_vec(x, y);
            for z in &basis {
                if mul_vec(&xy, z) != mul_vec(x, &mul_vec(y, z)) {
                    return Err(Error::NotARing(
                        "structure constants are not associative".into(),
                    ));
                }
            }
        }
    }
    let radices = vec![p as usize; d];
    let n = (p as usize).pow(dim);
    let coeffs: Vec<Vec<u32>> = (0..n).map(|x| mixed_radix_digits(&radices, x)).collect();
    let one = coeffs
        .iter()
        .position(|e| {
            basis
                .iter()
                .all(|b| mul_vec(e, b) == *b && mul_vec(b, e) == *b)
        })
        .ok_or_else(|| Error::NotARing("structure constants admit no identity".into()))?;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in &coeffs {
        for y in &coeffs {
            let s: Vec<u32> = x.iter().zip(y).map(|(a, b)| (a + b) % p).collect();
            add.push(mixed_radix_index(&radices, &s) as Elem);
            mul.push(mixed_radix_index(&radices, &mul_vec(x, y)) as Elem);
        }
    }
    let elem_labels = coeffs
        .iter()
        .map(|v| {
            let terms: Vec<String> = v
                .iter()
                .zip(labels)
                .filter(|(&a, _)| a != 0)
                .map(|(&a, l)| match (a, l.as_str()) {
                    (1, _) => l.clone(),
                    (_, "1") => a.to_string(),
                    _ => format!("{a}{l}"),
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    Ok(FiniteRing::from_parts(
        format!("F_{p}<{}>", labels.join(",")),
        n,
        add,
        mul,
        0,
        one as Elem,
        Some(elem_labels),
    ))
}

/// `F_2[x, y]/(x, y)^2`, the order-8 local ring with a non-simple socle.
pub fn local_f2_xy() -> RingExpr {
    RingExpr::FpAlgebra {
        p: 2,
        dim: 3,
        labels: vec!["1".into(), "x".into(), "y".into()],
        consts: vec![
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label_index(r: &FiniteRing, label: &str) -> Elem {
        r.elements().find(|&x| r.label(x) == label).unwrap()
    }

    #[test]
    fn zmod4_arithmetic() {
        let r = build_ring(&RingExpr::zmod(4)).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.add(1, 3), 0);
        assert_eq!(r.mul(2, 2), 0);
        r.validate().unwrap();
    }

    #[test]
    fn matrix_ring_order() {
        let r = build_ring(&RingExpr::matrix(2, RingExpr::zmod(2))).unwrap();
        assert_eq!(r.order(), 16);
        assert_eq!(r.label(r.one()), "[[1,0],[0,1]]");
        r.validate().unwrap();
    }

    #[test]
    fn local_ring_layout() {
        let r = build_ring(&local_f2_xy()).unwrap();
        assert_eq!(r.order(), 8);
        assert_eq!(r.one(), 1);
        let x = label_index(&r, "x");
        let y = label_index(&r, "y");
        assert_eq!((x, y), (2, 4));
        assert_eq!(r.mul(x, y), 0);
        assert_eq!(r.mul(x, x), 0);
        r.validate().unwrap();
    }

    #[test]
    fn galois_fields() {
        let f4 = build_ring(&RingExpr::gf(2, 2)).unwrap();
        f4.validate().unwrap();
        assert_eq!(f4.units().len(), 3);
        let f9 = build_ring(&RingExpr::gf(3, 2)).unwrap();
        assert_eq!(f9.units().len(), 8);
        let bad = RingExpr::GaloisField {
            p: 2,
            k: 2,
            poly: Some(vec![1, 0, 1]),
        };
        assert_eq!(
            build_ring(&bad),
            Err(Error::ReduciblePolynomial(vec![1, 0, 1]))
        );
    }

    #[test]
    fn group_rings_are_rings() {
        for g in [
            GroupSpec::Cyclic(3),
            GroupSpec::Dihedral(3),
            GroupSpec::Sym3,
        ] {
            let r = build_ring(&RingExpr::group_ring(RingExpr::zmod(2), g)).unwrap();
            r.validate().unwrap();
        }
        let s3 = build_ring(&RingExpr::group_ring(RingExpr::zmod(2), GroupSpec::Sym3)).unwrap();
        assert!(!s3.is_commutative());
    }

    #[test]
    fn cap_is_checked_first() {
        let big = RingExpr::matrix(3, RingExpr::gf(2, 3));
        assert!(matches!(
            build_ring(&big),
            Err(Error::CapExceeded {
                what: "ring order",
                ..
            })
        ));
    }

    #[test]
    fn non_associative_algebra_rejected() {
        // b1 b1 = b2, b2 b1 = b1, b1 b2 = 0 breaks (b1 b1) b1 = b1 (b1 b1)
        let expr = RingExpr::FpAlgebra {
            p: 2,
            dim: 3,
            labels: vec!["1".into(), "a".into(), "b".into()],
            consts: vec![
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (1, 0, 1, 1),
                (0, 2, 2, 1),
                (2, 0, 2, 1),
                (1, 1, 2, 1),
                (2, 1, 1, 1),
            ],
        };
        assert!(matches!(build_ring(&expr), Err(Error::NotARing(_))));
    }

    #[test]
    fn construction_is_deterministic() {
        let e = RingExpr::product(vec![RingExpr::gf(2, 2), RingExpr::zmod(3)]);
        let a = build_ring(&e).unwrap();
        let b = build_ring(&e).unwrap();
        assert_eq!(a.to_canonical_string(), b.to_canonical_string());
    }
}
