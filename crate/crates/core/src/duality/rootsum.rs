//! Exact sums of `N`-th roots of unity.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

/// `Σ_j c_j ζ_N^j` with `ζ_N = e^{2πi/N}`, stored as the multiplicities
/// `c_0..c_{N-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSum {
    denominator: u64,
    coefficients: Vec<i64>,
}

impl RootSum {
    pub fn zero(denominator: u64) -> Self {
        assert!(denominator > 0);
        RootSum {
            denominator,
            coefficients: vec![0; denominator as usize],
        }
    }

    pub fn from_coefficients(coefficients: Vec<i64>) -> Self {
        assert!(!coefficients.is_empty());
        RootSum {
            denominator: coefficients.len() as u64,
            coefficients,
        }
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Adds `c·ζ_N^j`.
    pub fn add_root(&mut self, j: u64, c: i64) {
        self.coefficients[(j % self.denominator) as usize] += c;
    }

    pub fn add_assign(&mut self, other: &RootSum) {
        assert_eq!(self.denominator, other.denominator);
        for (a, b) in self.coefficients.iter_mut().zip(&other.coefficients) {
            *a += b;
        }
    }

    /// Remainder of `Σ c_j x^j` modulo the `N`-th cyclotomic polynomial, of
    /// degree below `φ(N)`. Two sums are equal iff their remainders are.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic(self.denominator);
        let deg = phi.len() - 1;
        let mut r = self.coefficients.clone();
        for top in (deg..r.len()).rev() {
            let c = r[top];
            if c != 0 {
                let shift = top - deg;
                for (i, &p) in phi.iter().enumerate() {
                    r[shift + i] -= c * p;
                }
            }
        }
        r.truncate(deg);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    /// The integer value, when the sum is rational.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        match r.split_first() {
            None => Some(0),
            Some((&c, rest)) if rest.iter().all(|&x| x == 0) => Some(c),
            Some(_) => None,
        }
    }
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of `Φ_N`, constant term first: `x^N − 1` divided exactly by
/// every `Φ_d` with `d | N`, `d < N`.
pub fn cyclotomic(n: u64) -> Arc<Vec<i64>> {
    assert!(n > 0);
    if let Some(p) = cache().lock().expect("cache lock").get(&n) {
        return Arc::clone(p);
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_div(&num, &cyclotomic(d));
    }
    let p = Arc::new(num);
    cache()
        .lock()
        .expect("cache lock")
        .insert(n, Arc::clone(&p));
    p
}

/// Quotient of `a` by the monic `b`, which must divide it.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for top in (db..a.len()).rev() {
        let c = r[top];
        q[top - db] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[top - db + i] -= c * bi;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}
