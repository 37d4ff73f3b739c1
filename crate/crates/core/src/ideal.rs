//! Left and two-sided ideals: spans, minimal ideals, radical, socle and
//! quotient rings.
//!
//! Ideals are stored as sorted element lists, which also fixes the
//! lexicographic order used for every "least witness" tie-break. Right-sided
//! versions run the left-sided code on the opposite ring.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::AdditiveGroup;
use crate::ring::{Elem, FiniteRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A left ideal of some ring; the ring is supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LeftIdeal {
    elements: Vec<Elem>,
    generators: Vec<Elem>,
}

impl LeftIdeal {
    pub(crate) fn from_sorted(elements: Vec<Elem>, generators: Vec<Elem>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        LeftIdeal {
            elements,
            generators,
        }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        LeftIdeal::from_sorted(vec![ring.zero()], Vec::new())
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &LeftIdeal) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn membership(&self, order: usize) -> Vec<bool> {
        let mut m = vec![false; order];
        for &x in &self.elements {
            m[x as usize] = true;
        }
        m
    }
}

/// A two-sided ideal, stored like a left ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoSidedIdeal(LeftIdeal);

impl TwoSidedIdeal {
    /// Wraps `ideal` after checking closure under right multiplication.
    pub fn new(ring: &FiniteRing, ideal: LeftIdeal) -> Option<Self> {
        is_two_sided(ring, ideal.elements()).then_some(TwoSidedIdeal(ideal))
    }

    pub fn as_left(&self) -> &LeftIdeal {
        &self.0
    }

    pub fn elements(&self) -> &[Elem] {
        self.0.elements()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.0.contains(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

pub fn is_left_ideal(ring: &FiniteRing, set: &[Elem]) -> bool {
    let group = AdditiveGroup::of_ring(ring);
    if !group.is_subgroup(set) {
        return false;
    }
    let mut member = vec![false; ring.order()];
    for &x in set {
        member[x as usize] = true;
    }
    set.iter()
        .all(|&x| ring.elements().all(|r| member[ring.mul(r, x) as usize]))
}

pub fn is_two_sided(ring: &FiniteRing, set: &[Elem]) -> bool {
    if !is_left_ideal(ring, set) {
        return false;
    }
    let mut member = vec![false; ring.order()];
    for &x in set {
        member[x as usize] = true;
    }
    set.iter()
        .all(|&x| ring.elements().all(|r| member[ring.mul(x, r) as usize]))
}

/// `Rx`, sorted.
fn left_multiples(ring: &FiniteRing, x: Elem) -> Vec<Elem> {
    let mut member = vec![false; ring.order()];
    let mut out = Vec::new();
    for r in ring.elements() {
        let y = ring.mul(r, x);
        if !member[y as usize] {
            member[y as usize] = true;
            out.push(y);
        }
    }
    out.sort_unstable();
    out
}

/// The principal left ideal `Rx`.
pub fn cyclic_left_ideal(ring: &FiniteRing, x: Elem) -> LeftIdeal {
    LeftIdeal::from_sorted(left_multiples(ring, x), vec![x])
}

/// Smallest left ideal containing `gens`: the subgroup sum of the `R g`.
pub fn span_left(ring: &FiniteRing, gens: &[Elem]) -> LeftIdeal {
    let group = AdditiveGroup::of_ring(ring);
    let elements = gens.iter().fold(vec![ring.zero()], |acc, &g| {
        group.sum(&acc, &left_multiples(ring, g))
    });
    LeftIdeal::from_sorted(elements, gens.to_vec())
}

/// Generating set built by repeatedly adding the least element outside the
/// current span.
pub fn greedy_generators(ring: &FiniteRing, elements: &[Elem]) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = LeftIdeal::zero(ring);
    for &x in elements {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = span_left(ring, &gens);
        }
    }
    gens
}

/// All distinct minimal nonzero left ideals, in lexicographic order.
///
/// `Rx ≠ 0` is minimal iff `Ry = Rx` for every nonzero `y ∈ Rx`; since
/// `Ry ⊆ Rx` it suffices to compare sizes.
pub fn minimal_left_ideals(ring: &FiniteRing) -> Vec<LeftIdeal> {
    let sizes: Vec<usize> = ring
        .elements()
        .map(|x| {
            let mut member = vec![false; ring.order()];
            ring.elements()
                .filter(|&r| {
                    let y = ring.mul(r, x) as usize;
                    !std::mem::replace(&mut member[y], true)
                })
                .count()
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in ring.elements() {
        if x == ring.zero() || sizes[x as usize] == 1 {
            continue;
        }
        let rx = left_multiples(ring, x);
        let minimal = rx
            .iter()
            .all(|&y| y == ring.zero() || sizes[y as usize] == rx.len());
        if minimal && seen.insert(rx.clone()) {
            out.push(LeftIdeal::from_sorted(rx, vec![x]));
        }
    }
    out.sort();
    out
}

/// Jacobson radical via quasi-regularity: `x ∈ rad R` iff `1 − rx` is a unit
/// for every `r`.
pub fn radical(ring: &FiniteRing) -> TwoSidedIdeal {
    let elements: Vec<Elem> = ring
        .elements()
        .filter(|&x| {
            ring.elements()
                .all(|r| ring.is_unit(ring.sub(ring.one(), ring.mul(r, x))))
        })
        .collect();
    let generators = greedy_generators(ring, &elements);
    let ideal = LeftIdeal::from_sorted(elements, generators);
    TwoSidedIdeal::new(ring, ideal).expect("the Jacobson radical is two-sided")
}

/// Every left ideal of `ring`, sorted lexicographically.
pub fn left_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<LeftIdeal>> {
    let group = AdditiveGroup::of_ring(ring);
    let principal: Vec<Vec<Elem>> = ring.elements().map(|x| left_multiples(ring, x)).collect();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let zero = vec![ring.zero()];
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(ideal) = frontier.pop() {
        let member = {
            let mut m = vec![false; ring.order()];
            ideal.iter().for_each(|&x| m[x as usize] = true);
            m
        };
        for x in ring.elements() {
            if member[x as usize] {
                continue;
            }
            let next = group.sum(&ideal, &principal[x as usize]);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "number of left ideals",
                        limit: cap as u64,
                    });
                }
                frontier.push(next);
            }
        }
    }
    let mut all: Vec<LeftIdeal> = seen
        .into_iter()
        .map(|elements| {
            let generators = greedy_generators(ring, &elements);
            LeftIdeal::from_sorted(elements, generators)
        })
        .collect();
    all.sort();
    Ok(all)
}

/// The radical as the intersection of all maximal left ideals. Slow; kept
/// as an independent check of [`radical`].
pub fn radical_by_maximal_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<Elem>> {
    let ideals = left_ideals(ring, cap)?;
    let n = ring.order();
    let proper: Vec<&LeftIdeal> = ideals.iter().filter(|i| i.len() < n).collect();
    let maximal = proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.len() > i.len() && i.is_subset_of(j))
        })
        .collect::<Vec<_>>();
    Ok(ring
        .elements()
        .filter(|&x| maximal.iter().all(|m| m.contains(x)))
        .collect())
}

/// Socle of the regular module on one side, with the note that for a finite
/// ring it coincides with the finitary socle (every minimal ideal is finite).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Socle {
    pub side: Side,
    pub ideal: LeftIdeal,
    pub minimal_ideals: usize,
    pub equals_finitary_socle: bool,
}

/// `soc(_R R)`: join of all minimal left ideals.
pub fn socle_left(ring: &FiniteRing) -> Socle {
    socle_from_minimal(ring, minimal_left_ideals(ring), Side::Left)
}

/// `soc(R_R)`, computed as the left socle of the opposite ring.
pub fn socle_right(ring: &FiniteRing) -> Socle {
    let op = ring.opposite();
    socle_from_minimal(&op, minimal_left_ideals(&op), Side::Right)
}

fn socle_from_minimal(ring: &FiniteRing, minimal: Vec<LeftIdeal>, side: Side) -> Socle {
    let group = AdditiveGroup::of_ring(ring);
    let elements = minimal
        .iter()
        .fold(vec![ring.zero()], |acc, m| group.sum(&acc, m.elements()));
    let generators = minimal.iter().map(|m| m.generators()[0]).collect();
    Socle {
        side,
        ideal: LeftIdeal::from_sorted(elements, generators),
        minimal_ideals: minimal.len(),
        equals_finitary_socle: true,
    }
}

/// Left annihilator description of the socle: `{x : (rad R)·x = 0}`.
pub fn socle_by_radical_annihilator(ring: &FiniteRing) -> Vec<Elem> {
    let rad = radical(ring);
    ring.elements()
        .filter(|&x| {
            rad.elements()
                .iter()
                .all(|&j| ring.mul(j, x) == ring.zero())
        })
        .collect()
}

/// Smallest `k` with `J^k = 0`, or `None` if the powers stabilise at a
/// nonzero ideal.
pub fn nilpotency_index(ring: &FiniteRing, ideal: &TwoSidedIdeal) -> Option<usize> {
    let group = AdditiveGroup::of_ring(ring);
    let mut power = ideal.elements().to_vec();
    for k in 1..=ring.order() {
        if power.len() == 1 {
            return Some(k);
        }
        let products: Vec<Elem> = power
            .iter()
            .flat_map(|&a| ideal.elements().iter().map(move |&b| (a, b)))
            .map(|(a, b)| ring.mul(a, b))
            .collect();
        let next = group.closure(&products);
        if next == power {
            return None;
        }
        power = next;
    }
    None
}

/// A quotient ring together with the canonical surjection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ring: FiniteRing,
    /// Image of each element of the original ring.
    pub projection: Vec<Elem>,
    /// Least element of each coset, indexed by quotient element.
    pub representatives: Vec<Elem>,
}

/// `R/J` with cosets numbered by their least representative.
pub fn quotient_ring(ring: &FiniteRing, ideal: &TwoSidedIdeal) -> Quotient {
    let n = ring.order();
    let mut projection = vec![Elem::MAX; n];
    let mut representatives = Vec::new();
    for x in ring.elements() {
        if projection[x as usize] != Elem::MAX {
            continue;
        }
        let class = representatives.len() as Elem;
        representatives.push(x);
        for &j in ideal.elements() {
            projection[ring.add(x, j) as usize] = class;
        }
    }
    let m = representatives.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &representatives {
        for &b in &representatives {
            add.push(projection[ring.add(a, b) as usize]);
            mul.push(projection[ring.mul(a, b) as usize]);
        }
    }
    let labels = representatives
        .iter()
        .map(|&r| format!("[{}]", ring.label(r)))
        .collect();
    let quotient = FiniteRing::from_parts(
        format!("{}/J", ring.name()),
        m,
        add,
        mul,
        projection[ring.zero() as usize],
        projection[ring.one() as usize],
        Some(labels),
    );
    Quotient {
        ring: quotient,
        projection,
        representatives,
    }
}

impl Quotient {
    /// Checks that the projection is a surjective unital ring homomorphism.
    pub fn verify(&self, ring: &FiniteRing) -> bool {
        let h = |x: Elem| self.projection[x as usize];
        h(ring.one()) == self.ring.one()
            && ring.elements().all(|a| {
                ring.elements().all(|b| {
                    h(ring.add(a, b)) == self.ring.add(h(a), h(b))
                        && h(ring.mul(a, b)) == self.ring.mul(h(a), h(b))
                })
            })
            && self
                .representatives
                .iter()
                .enumerate()
                .all(|(c, &r)| h(r) as usize == c)
    }
}
