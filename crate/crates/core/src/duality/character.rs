//! Torsion-free characters: tests, the semisimple construction, the
//! extension from the socle, and exact character sums.

use serde::Serialize;

use super::dual::{Character, DualModule};
use super::qz::QZ;
use super::rootsum::RootSum;
use crate::build::{build_ring, is_prime, matrix_entries, product_components, RingExpr};
use crate::decomp::{classify, Classification};
use crate::error::{Error, Result};
use crate::group::AbelianBasis;
use crate::ideal::{minimal_left_ideals, quotient_ring, radical, LeftIdeal};
use crate::ring::{Elem, FiniteRing};

/// Minimal one-sided ideals of a ring, computed once for repeated
/// torsion-freeness tests.
#[derive(Clone, Debug)]
pub struct MinimalIdeals {
    pub left: Vec<LeftIdeal>,
    /// Minimal right ideals (minimal left ideals of the opposite ring).
    pub right: Vec<LeftIdeal>,
}

impl MinimalIdeals {
    pub fn of(ring: &FiniteRing) -> Self {
        MinimalIdeals {
            left: minimal_left_ideals(ring),
            right: minimal_left_ideals(&ring.opposite()),
        }
    }

    /// No minimal left ideal inside `ker χ_k`; every nonzero left ideal
    /// contains one, so this is left torsion-freeness.
    pub fn left_torsion_free(&self, dual: &DualModule, k: usize) -> bool {
        !self.left.iter().any(|m| inside_kernel(dual, k, m))
    }

    pub fn right_torsion_free(&self, dual: &DualModule, k: usize) -> bool {
        !self.right.iter().any(|m| inside_kernel(dual, k, m))
    }
}

fn inside_kernel(dual: &DualModule, k: usize, ideal: &LeftIdeal) -> bool {
    ideal
        .elements()
        .iter()
        .all(|&x| dual.value_numerator(k, x) == 0)
}

pub fn is_left_torsion_free(ring: &FiniteRing, dual: &DualModule, k: usize) -> bool {
    MinimalIdeals::of(ring).left_torsion_free(dual, k)
}

pub fn is_right_torsion_free(ring: &FiniteRing, dual: &DualModule, k: usize) -> bool {
    MinimalIdeals::of(ring).right_torsion_free(dual, k)
}

/// Left torsion-freeness as `χR = R̂`.
pub fn torsion_free_via_density(dual: &DualModule, k: usize) -> bool {
    dual.right_orbit(k).len() == dual.order()
}

/// Right torsion-freeness as `Rχ = R̂`.
pub fn right_torsion_free_via_density(dual: &DualModule, k: usize) -> bool {
    dual.left_orbit(k).len() == dual.order()
}

/// Least left torsion-free character by exhaustive scan.
pub fn scan_torsion_free_character(ring: &FiniteRing, dual: &DualModule) -> Option<usize> {
    let minimal = MinimalIdeals::of(ring);
    dual.characters()
        .find(|&k| minimal.left_torsion_free(dual, k))
}

/// A character of a ring built in Wedderburn form.
#[derive(Clone, Debug)]
pub struct SemisimpleCharacter {
    pub ring: FiniteRing,
    pub character: Character,
    /// Index in the dual of `ring`.
    pub index: usize,
    /// `χ(x)` for every element.
    pub table: Vec<QZ>,
}

/// Builds a torsion-free character of a product of matrix rings over finite
/// fields: `AbsTrace(x)/p` on `F_{p^k}`, composed with the matrix trace, and
/// summed over the factors. The result is checked torsion-free on both sides
/// by the minimal-ideal scan and by orbit density.
pub fn semisimple_character(expr: &RingExpr) -> Result<SemisimpleCharacter> {
    let (ring, table) = wedderburn_table(expr)?;
    let dual = DualModule::new(&ring)?;
    let index = dual
        .index_of_table(&table)
        .ok_or_else(|| Error::Inconsistent("constructed character is not additive".into()))?;
    let minimal = MinimalIdeals::of(&ring);
    let ok = minimal.left_torsion_free(&dual, index)
        && minimal.right_torsion_free(&dual, index)
        && torsion_free_via_density(&dual, index)
        && right_torsion_free_via_density(&dual, index);
    if !ok {
        return Err(Error::Inconsistent(format!(
            "character constructed on {} is not torsion-free",
            ring.name()
        )));
    }
    Ok(SemisimpleCharacter {
        character: dual.character(index),
        ring,
        index,
        table,
    })
}

fn wedderburn_table(expr: &RingExpr) -> Result<(FiniteRing, Vec<QZ>)> {
    let not_form = || Error::NotInWedderburnForm(format!("{expr:?}"));
    match expr {
        RingExpr::ZMod(p) => {
            if !is_prime(*p) {
                return Err(not_form());
            }
            let ring = build_ring(expr)?;
            let table = ring
                .elements()
                .map(|x| QZ::new(x as u64, *p as u64))
                .collect();
            Ok((ring, table))
        }
        RingExpr::GaloisField { p, k, .. } => {
            let ring = build_ring(expr)?;
            let table = ring
                .elements()
                .map(|x| field_trace(&ring, *p, *k, x).map(|c| QZ::new(c, *p as u64)))
                .collect::<Result<_>>()?;
            Ok((ring, table))
        }
        RingExpr::Matrix { size, base } => {
            let (b, tb) = wedderburn_table(base)?;
            let ring = build_ring(expr)?;
            let k = *size as usize;
            let table = ring
                .elements()
                .map(|x| {
                    let entries = matrix_entries(k, b.order(), x);
                    (0..k).map(|i| tb[entries[i * k + i] as usize]).sum()
                })
                .collect();
            Ok((ring, table))
        }
        RingExpr::Product(factors) => {
            let parts = factors
                .iter()
                .map(wedderburn_table)
                .collect::<Result<Vec<_>>>()?;
            let ring = build_ring(expr)?;
            let orders: Vec<usize> = parts.iter().map(|(r, _)| r.order()).collect();
            let table = ring
                .elements()
                .map(|x| {
                    product_components(&orders, x)
                        .iter()
                        .zip(&parts)
                        .map(|(&c, (_, t))| t[c as usize])
                        .sum()
                })
                .collect();
            Ok((ring, table))
        }
        RingExpr::Opposite(base) => {
            let (b, tb) = wedderburn_table(base)?;
            Ok((b.opposite(), tb))
        }
        RingExpr::GroupRing { .. } | RingExpr::FpAlgebra { .. } => Err(not_form()),
    }
}

/// `Σ_{i<k} x^{p^i}` as an integer `c` with the sum equal to `c·1`.
fn field_trace(ring: &FiniteRing, p: u32, k: u32, x: Elem) -> Result<u64> {
    let power = |mut y: Elem| {
        let base = y;
        for _ in 1..p {
            y = ring.mul(y, base);
        }
        y
    };
    let mut sum = ring.zero();
    let mut y = x;
    for _ in 0..k {
        sum = ring.add(sum, y);
        y = power(y);
    }
    (0..p as u64)
        .find(|&c| ring.multiple(c, ring.one()) == sum)
        .ok_or_else(|| Error::Inconsistent("field trace left the prime field".into()))
}

/// How a torsion-free character was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CharacterSource {
    /// Embedding of the socle into `R/rad R`, then divisible extension.
    SocleExtension,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionFreeCharacter {
    pub character: Character,
    pub index: usize,
    pub source: CharacterSource,
}

/// A left torsion-free character of `ring`, or `None` if none exists.
///
/// When the socle embeds into `R/rad R`, the embedding is built summand by
/// summand, composed with a torsion-free character of `R/rad R` and
/// extended to `(R,+)` one basis generator at a time. Otherwise every
/// character is scanned to confirm that none is torsion-free.
pub fn find_torsion_free_character(ring: &FiniteRing) -> Result<Option<TorsionFreeCharacter>> {
    let classification = classify(ring)?;
    find_with_classification(ring, &classification)
}

pub fn find_with_classification(
    ring: &FiniteRing,
    classification: &Classification,
) -> Result<Option<TorsionFreeCharacter>> {
    let dual = DualModule::new(ring)?;
    let minimal = MinimalIdeals::of(ring);
    if !classification.socle_embeds_left {
        if let Some(k) = dual
            .characters()
            .find(|&k| minimal.left_torsion_free(&dual, k))
        {
            return Err(Error::Inconsistent(format!(
                "socle does not embed but character {k} is left torsion-free"
            )));
        }
        return Ok(None);
    }
    let table = socle_extension(ring, classification)?;
    let index = dual
        .index_of_table(&table)
        .ok_or_else(|| Error::Inconsistent("extended map is not additive".into()))?;
    if !minimal.left_torsion_free(&dual, index) || !torsion_free_via_density(&dual, index) {
        return Err(Error::Inconsistent(
            "character extended from the socle is not left torsion-free".into(),
        ));
    }
    Ok(Some(TorsionFreeCharacter {
        character: dual.character(index),
        index,
        source: CharacterSource::SocleExtension,
    }))
}

/// Values of `χ̄` on every element, where `χ̄|_soc = χ_S ∘ φ`.
fn socle_extension(ring: &FiniteRing, classification: &Classification) -> Result<Vec<QZ>> {
    let rad = radical(ring);
    let q = quotient_ring(ring, &rad);
    let s = &q.ring;
    let h = |x: Elem| q.projection[x as usize];
    let s_dual = DualModule::new(s)?;
    let chi_s = scan_torsion_free_character(s, &s_dual).ok_or_else(|| {
        Error::Inconsistent("semisimple quotient has no torsion-free character".into())
    })?;

    let dec = &classification.decomposition;
    let profile = &classification.profile;
    let mut used = vec![false; dec.idempotents.len()];
    let n = ring.order();
    let mut value: Vec<Option<QZ>> = vec![None; n];
    value[ring.zero() as usize] = Some(QZ::ZERO);
    let mut domain = vec![ring.zero()];

    for (m, &class) in profile.summands.iter().zip(&profile.summand_class) {
        let slot = (0..dec.idempotents.len())
            .find(|&j| !used[j] && dec.class_of[j] == class)
            .ok_or_else(|| Error::Inconsistent("more socle summands than top summands".into()))?;
        used[slot] = true;
        let e_bar = h(dec.idempotents[slot]);
        // S·ē as an R-module: r·y = h(r)y
        let mut target: Vec<Elem> = s.elements().map(|t| s.mul(t, e_bar)).collect();
        target.sort_unstable();
        target.dedup();
        let m0 = *m
            .elements()
            .iter()
            .find(|&&x| x != ring.zero())
            .expect("minimal ideals are nonzero");
        let ann: Vec<Elem> = ring
            .elements()
            .filter(|&r| ring.mul(r, m0) == ring.zero())
            .collect();
        let y = *target
            .iter()
            .find(|&&y| {
                ann.iter().all(|&r| s.mul(h(r), y) == s.zero()) && {
                    let mut orbit: Vec<Elem> = ring.elements().map(|r| s.mul(h(r), y)).collect();
                    orbit.sort_unstable();
                    orbit.dedup();
                    orbit == target
                }
            })
            .ok_or_else(|| Error::Inconsistent("socle summand does not map onto its top".into()))?;
        let mut on_summand: Vec<Option<QZ>> = vec![None; n];
        for r in ring.elements() {
            let x = ring.mul(r, m0);
            let v = s_dual.value(chi_s, s.mul(h(r), y));
            match on_summand[x as usize] {
                Some(w) if w != v => {
                    return Err(Error::Inconsistent(
                        "socle embedding is not well defined".into(),
                    ))
                }
                _ => on_summand[x as usize] = Some(v),
            }
        }
        let mut next = Vec::with_capacity(domain.len() * m.len());
        for &a in &domain {
            for &b in m.elements() {
                let x = ring.add(a, b);
                let v = value[a as usize].expect("in domain")
                    + on_summand[b as usize].expect("in summand");
                match value[x as usize] {
                    Some(w) if w != v => {
                        return Err(Error::Inconsistent(
                            "socle summands are not independent".into(),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        value[x as usize] = Some(v);
                        next.push(x);
                    }
                }
            }
        }
        domain.extend(next);
    }

    // divisible extension over the invariant-factor generators
    let basis = AbelianBasis::of_ring(ring)?;
    for &g in basis.generators() {
        let mut k = 1u64;
        let mut kg = g;
        while value[kg as usize].is_none() {
            kg = ring.add(kg, g);
            k += 1;
        }
        if k == 1 {
            continue;
        }
        let v = value[kg as usize]
            .expect("in domain")
            .least_divisor_solution(k);
        let mut next = Vec::new();
        for &a in &domain {
            let mut x = a;
            for i in 1..k {
                x = ring.add(x, g);
                debug_assert!(value[x as usize].is_none());
                value[x as usize] = Some(value[a as usize].expect("in domain") + v.times(i));
                next.push(x);
            }
        }
        domain.extend(next);
    }
    value
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::Inconsistent("extension does not cover the ring".into())))
        .collect()
}

/// `R̂_R` is cyclic: some `χ` with `χR = R̂`.
pub fn dual_is_cyclic(dual: &DualModule) -> bool {
    dual.right_module().cyclic_generator().is_some()
}

/// `Σ_x ζ^{N χ(x)}` with the normalized integral (1 for the trivial
/// character, 0 otherwise).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HaarSum {
    pub sum: RootSum,
    pub integral: u8,
}

/// Exact `Σ_x χ(x)` over the group, as a sum of roots of unity. For a
/// nontrivial character the sum must reduce to zero; this is checked.
pub fn haar_character_sum(dual: &DualModule, k: usize) -> Result<HaarSum> {
    let mut sum = RootSum::zero(dual.exponent());
    for x in 0..dual.order() as Elem {
        sum.add_root(dual.value_numerator(k, x) as u64, 1);
    }
    let trivial = dual.kernel(k).len() == dual.order();
    if trivial {
        if sum.as_integer() != Some(dual.order() as i64) {
            return Err(Error::Inconsistent(
                "trivial character sum is not |G|".into(),
            ));
        }
        return Ok(HaarSum { sum, integral: 1 });
    }
    if !sum.is_zero() {
        return Err(Error::Inconsistent(format!(
            "character {k} sums to a nonzero value"
        )));
    }
    Ok(HaarSum { sum, integral: 0 })
}

/// `w(x) = n − Σ_i (1/|R̂|) Σ_γ γ(x_i)`, evaluated exactly.
pub fn hamming_weight_via_characters(dual: &DualModule, x: &[Elem]) -> Result<usize> {
    let mut total = RootSum::zero(dual.exponent());
    for &xi in x {
        for k in dual.characters() {
            total.add_root(dual.value_numerator(k, xi) as u64, 1);
        }
    }
    let c = total
        .as_integer()
        .ok_or_else(|| Error::Inconsistent("character average is not rational".into()))?;
    let g = dual.order() as i64;
    if c % g != 0 {
        return Err(Error::Inconsistent(
            "character average is not an integer".into(),
        ));
    }
    Ok((x.len() as i64 - c / g) as usize)
}
