//! The character group `R̂ = Hom((R,+), Q/Z)` with its bimodule structure.

use std::sync::OnceLock;

use serde::Serialize;

use super::qz::QZ;
use crate::build::{mixed_radix_digits, mixed_radix_index};
use crate::error::{Error, Result};
use crate::group::{AbelianBasis, AdditiveGroup};
use crate::module::FiniteModule;
use crate::ring::{Elem, FiniteRing};

/// A character, given by its values on an invariant-factor basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Character {
    /// Orders `d_i` of the basis generators.
    pub orders: Vec<u64>,
    /// `χ(g_i)`, each with denominator dividing `d_i`.
    pub values_on_generators: Vec<QZ>,
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.values_on_generators.iter().all(|v| v.is_zero())
    }

    /// `χ(x) = Σ c_i χ(g_i)` for the basis coordinates `c` of `x`.
    pub fn evaluate(&self, basis: &AbelianBasis, x: Elem) -> QZ {
        basis
            .coordinates(x)
            .iter()
            .zip(&self.values_on_generators)
            .map(|(&c, v)| v.times(c as u64))
            .sum()
    }
}

/// All characters of `(R,+)` with the actions `(χr)(x) = χ(rx)` and
/// `(rχ)(x) = χ(xr)`.
///
/// Character `k` has digits `k_i` in the mixed radix `(d_i)` and takes the
/// value `k_i/d_i` on the `i`-th basis generator; index 0 is trivial.
#[derive(Debug)]
pub struct DualModule {
    order: usize,
    zero: Elem,
    basis: AbelianBasis,
    exponent: u64,
    /// `values[k * order + x]`: numerator of `χ_k(x)` over `exponent`.
    values: Vec<u32>,
    right: Vec<Elem>,
    left: Vec<Elem>,
    sum_table: OnceLock<Vec<Elem>>,
}

impl DualModule {
    /// Tabulates `R̂`, checking that the evaluation pairing is
    /// non-degenerate in both slots.
    pub fn new(ring: &FiniteRing) -> Result<Self> {
        let n = ring.order();
        let basis = AbelianBasis::of_ring(ring)?;
        let exponent = basis.exponent();
        let radices: Vec<usize> = basis.orders().iter().map(|&d| d as usize).collect();
        let scale: Vec<u64> = basis.orders().iter().map(|&d| exponent / d).collect();
        let mut values = vec![0u32; n * n];
        for k in 0..n {
            let digits = mixed_radix_digits(&radices, k);
            for x in ring.elements() {
                let v = basis
                    .coordinates(x)
                    .iter()
                    .zip(&digits)
                    .zip(&scale)
                    .map(|((&c, &kd), &s)| c as u64 * kd as u64 % exponent * s % exponent)
                    .sum::<u64>()
                    % exponent;
                values[k * n + x as usize] = v as u32;
            }
        }
        let mut dual = DualModule {
            order: n,
            zero: ring.zero(),
            basis,
            exponent,
            values,
            right: Vec::new(),
            left: Vec::new(),
            sum_table: OnceLock::new(),
        };
        let gens = dual.basis.generators().to_vec();
        let mut right = vec![0; n * n];
        let mut left = vec![0; n * n];
        for k in 0..n {
            for r in ring.elements() {
                let at = |f: &dyn Fn(Elem) -> Elem| -> Elem {
                    let nums: Vec<u32> = gens
                        .iter()
                        .map(|&g| dual.values[k * n + f(g) as usize])
                        .collect();
                    dual.index_from_generator_values(&nums) as Elem
                };
                right[k * n + r as usize] = at(&|g| ring.mul(r, g));
                left[k * n + r as usize] = at(&|g| ring.mul(g, r));
            }
        }
        dual.right = right;
        dual.left = left;
        if !dual.pairing_is_nondegenerate() {
            return Err(Error::Inconsistent(
                "evaluation pairing is degenerate".into(),
            ));
        }
        Ok(dual)
    }

    fn index_from_generator_values(&self, nums: &[u32]) -> usize {
        let radices: Vec<usize> = self.basis.orders().iter().map(|&d| d as usize).collect();
        let digits: Vec<Elem> = nums
            .iter()
            .zip(self.basis.orders())
            .map(|(&v, &d)| (v as u64 * d / self.exponent) as Elem)
            .collect();
        mixed_radix_index(&radices, &digits)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn basis(&self) -> &AbelianBasis {
        &self.basis
    }

    /// Exponent `N` of `(R,+)`; every value has denominator dividing it.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn characters(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Numerator of `χ_k(x)` over [`Self::exponent`].
    #[inline]
    pub fn value_numerator(&self, k: usize, x: Elem) -> u32 {
        self.values[k * self.order + x as usize]
    }

    pub fn value(&self, k: usize, x: Elem) -> QZ {
        QZ::new(self.value_numerator(k, x) as u64, self.exponent)
    }

    pub fn is_trivial(&self, k: usize) -> bool {
        k == 0
    }

    pub fn character(&self, k: usize) -> Character {
        Character {
            orders: self.basis.orders().to_vec(),
            values_on_generators: self
                .basis
                .generators()
                .iter()
                .map(|&g| self.value(k, g))
                .collect(),
        }
    }

    pub fn index_of(&self, chi: &Character) -> Option<usize> {
        if chi.orders != self.basis.orders() {
            return None;
        }
        let nums: Vec<u32> = chi
            .values_on_generators
            .iter()
            .zip(&chi.orders)
            .map(|(v, &d)| (d % v.denominator() == 0).then(|| v.over(self.exponent) as u32))
            .collect::<Option<_>>()?;
        Some(self.index_from_generator_values(&nums))
    }

    /// Index of the character with the given value on every element, if
    /// that table is additive.
    pub fn index_of_table(&self, table: &[QZ]) -> Option<usize> {
        let nums: Vec<u32> = self
            .basis
            .generators()
            .iter()
            .map(|&g| {
                let v = table[g as usize];
                self.exponent
                    .is_multiple_of(v.denominator())
                    .then(|| v.over(self.exponent) as u32)
            })
            .collect::<Option<_>>()?;
        let k = self.index_from_generator_values(&nums);
        (0..self.order as Elem)
            .all(|x| self.value(k, x) == table[x as usize])
            .then_some(k)
    }

    /// `ker χ_k`, sorted.
    pub fn kernel(&self, k: usize) -> Vec<Elem> {
        (0..self.order as Elem)
            .filter(|&x| self.value_numerator(k, x) == 0)
            .collect()
    }

    /// `χ_k · r`.
    #[inline]
    pub fn right_act(&self, k: usize, r: Elem) -> usize {
        self.right[k * self.order + r as usize] as usize
    }

    /// `r · χ_k`.
    #[inline]
    pub fn left_act(&self, k: usize, r: Elem) -> usize {
        self.left[k * self.order + r as usize] as usize
    }

    /// Index of `χ_a + χ_b`.
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.sum_table()[a * self.order + b] as usize
    }

    fn sum_table(&self) -> &[Elem] {
        self.sum_table.get_or_init(|| {
            let radices: Vec<usize> = self.basis.orders().iter().map(|&d| d as usize).collect();
            let digits: Vec<Vec<Elem>> = (0..self.order)
                .map(|k| mixed_radix_digits(&radices, k))
                .collect();
            let mut table = Vec::with_capacity(self.order * self.order);
            for a in &digits {
                for b in &digits {
                    let s: Vec<Elem> = a
                        .iter()
                        .zip(b)
                        .zip(&radices)
                        .map(|((&x, &y), &r)| ((x as usize + y as usize) % r) as Elem)
                        .collect();
                    table.push(mixed_radix_index(&radices, &s) as Elem);
                }
            }
            table
        })
    }

    /// `(R̂, +)` as an additive group, character indices as elements.
    pub fn group(&self) -> AdditiveGroup<'_> {
        AdditiveGroup::new(self.order, self.sum_table(), 0)
    }

    /// Distinct rows, and for every `x ≠ 0` some `χ` with `χ(x) ≠ 0`, and for
    /// every `χ ≠ 0` some `x` with `χ(x) ≠ 0`.
    pub fn pairing_is_nondegenerate(&self) -> bool {
        let n = self.order;
        let rows: std::collections::HashSet<&[u32]> =
            (0..n).map(|k| &self.values[k * n..(k + 1) * n]).collect();
        rows.len() == n
            && (0..n as Elem)
                .filter(|&x| x != self.zero)
                .all(|x| (0..n).any(|k| self.value_numerator(k, x) != 0))
            && (1..n).all(|k| (0..n as Elem).any(|x| self.value_numerator(k, x) != 0))
    }

    /// Module axioms for both actions; `O(|R|³)`.
    pub fn actions_are_module_actions(&self, ring: &FiniteRing) -> bool {
        let one = ring.one();
        self.characters().all(|k| {
            self.right_act(k, one) == k
                && self.left_act(k, one) == k
                && ring.elements().all(|r| {
                    ring.elements().all(|s| {
                        self.right_act(self.right_act(k, r), s) == self.right_act(k, ring.mul(r, s))
                            && self.left_act(self.left_act(k, s), r)
                                == self.left_act(k, ring.mul(r, s))
                            && self.right_act(k, ring.add(r, s))
                                == self.add(self.right_act(k, r), self.right_act(k, s))
                    })
                })
        })
    }

    /// `R̂_R` as a left module over `R^op`.
    pub fn right_module(&self) -> FiniteModule {
        let n = self.order;
        let act = (0..n)
            .flat_map(|r| (0..n).map(move |k| (r, k)))
            .map(|(r, k)| self.right_act(k, r as Elem) as Elem)
            .collect();
        FiniteModule::from_parts(n, n, self.sum_table().to_vec(), act, 0)
    }

    /// `_R R̂` as a left module over `R`.
    pub fn left_module(&self) -> FiniteModule {
        let n = self.order;
        let act = (0..n)
            .flat_map(|r| (0..n).map(move |k| (r, k)))
            .map(|(r, k)| self.left_act(k, r as Elem) as Elem)
            .collect();
        FiniteModule::from_parts(n, n, self.sum_table().to_vec(), act, 0)
    }

    /// `Γ(A) = {χ : χ|_A = 0}`, sorted.
    pub fn gamma(&self, ring: &FiniteRing, a: &[Elem]) -> Result<Vec<usize>> {
        if !AdditiveGroup::of_ring(ring).is_subgroup(a) {
            return Err(Error::NotASubgroup);
        }
        Ok(self
            .characters()
            .filter(|&k| a.iter().all(|&x| self.value_numerator(k, x) == 0))
            .collect())
    }

    /// `Δ(B) = ⋂_{χ ∈ B} ker χ`, sorted.
    pub fn delta(&self, b: &[usize]) -> Result<Vec<Elem>> {
        let as_elems: Vec<Elem> = b.iter().map(|&k| k as Elem).collect();
        if b.iter().any(|&k| k >= self.order) || !self.group().is_subgroup(&as_elems) {
            return Err(Error::NotASubgroup);
        }
        Ok((0..self.order as Elem)
            .filter(|&x| b.iter().all(|&k| self.value_numerator(k, x) == 0))
            .collect())
    }

    /// `χ_k R`, sorted.
    pub fn right_orbit(&self, k: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = (0..self.order as Elem)
            .map(|r| self.right_act(k, r))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    /// `R χ_k`, sorted.
    pub fn left_orbit(&self, k: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = (0..self.order as Elem)
            .map(|r| self.left_act(k, r))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }
}
