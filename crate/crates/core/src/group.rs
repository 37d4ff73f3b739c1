//! Finite abelian groups given by an addition table: subgroup closure,
//! subgroup lattices and invariant-factor bases.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// Borrowed view of a finite abelian group `({0..n}, +)`.
#[derive(Clone, Copy, Debug)]
pub struct AdditiveGroup<'a> {
    order: usize,
    table: &'a [Elem],
    zero: Elem,
}

impl<'a> AdditiveGroup<'a> {
    pub fn new(order: usize, table: &'a [Elem], zero: Elem) -> Self {
        debug_assert_eq!(table.len(), order * order);
        AdditiveGroup { order, table, zero }
    }

    pub fn of_ring(ring: &'a FiniteRing) -> Self {
        AdditiveGroup::new(ring.order(), ring.add_table(), ring.zero())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn multiple(&self, k: u64, x: Elem) -> Elem {
        (0..k).fold(self.zero, |acc, _| self.add(acc, x))
    }

    pub fn element_order(&self, x: Elem) -> u64 {
        let mut k = 1;
        let mut acc = x;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `gens`, sorted.
    pub fn closure(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order];
        member[self.zero as usize] = true;
        let mut elems = vec![self.zero];
        for &g in gens {
            self.adjoin(&mut member, &mut elems, g);
        }
        elems.sort_unstable();
        elems
    }

    /// Extends the subgroup `elems` (with membership mask) by `g` in place.
    pub(crate) fn adjoin(&self, member: &mut [bool], elems: &mut Vec<Elem>, g: Elem) {
        if member[g as usize] {
            return;
        }
        let base = elems.clone();
        let mut step = g;
        while !member[step as usize] {
            for &h in &base {
                let s = self.add(h, step);
                if !member[s as usize] {
                    member[s as usize] = true;
                    elems.push(s);
                }
            }
            step = self.add(step, g);
        }
    }

    /// `A + B` for subgroups given as element lists.
    pub fn sum(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order];
        let mut out = Vec::new();
        for &x in a {
            for &y in b {
                let s = self.add(x, y);
                if !member[s as usize] {
                    member[s as usize] = true;
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_subgroup(&self, set: &[Elem]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            if x as usize >= self.order {
                return false;
            }
            member[x as usize] = true;
        }
        member[self.zero as usize]
            && set
                .iter()
                .all(|&x| set.iter().all(|&y| member[self.add(x, y) as usize]))
    }

    /// Every subgroup, each sorted, the list sorted lexicographically.
    pub fn subgroup_lattice(&self, cap: usize) -> Result<Vec<Vec<Elem>>> {
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let zero = vec![self.zero];
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(h) = frontier.pop() {
            let mut member = vec![false; self.order];
            for &x in &h {
                member[x as usize] = true;
            }
            for x in 0..self.order as Elem {
                if member[x as usize] {
                    continue;
                }
                let mut m = member.clone();
                let mut elems = h.clone();
                self.adjoin(&mut m, &mut elems, x);
                elems.sort_unstable();
                if seen.insert(elems.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "subgroup lattice size",
                            limit: cap as u64,
                        });
                    }
                    frontier.push(elems);
                }
            }
        }
        let mut all: Vec<_> = seen.into_iter().collect();
        all.sort();
        Ok(all)
    }
}

/// Invariant-factor decomposition `Z/d_1 ⊕ … ⊕ Z/d_r` with `d_1 | … | d_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianBasis {
    generators: Vec<Elem>,
    orders: Vec<u64>,
    coordinates: Vec<Vec<u32>>,
}

impl AbelianBasis {
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Exponent of the group, `d_r` (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.orders.last().copied().unwrap_or(1)
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn coordinates(&self, x: Elem) -> &[u32] {
        &self.coordinates[x as usize]
    }

    pub fn group_order(&self) -> usize {
        self.coordinates.len()
    }

    pub fn compute(group: AdditiveGroup<'_>) -> Result<Self> {
        let n = group.order();
        let mut per_prime: Vec<Vec<(Elem, u64)>> = Vec::new();
        let mut rest = n as u64;
        let mut p = 2;
        while rest > 1 {
            if rest.is_multiple_of(p) {
                while rest.is_multiple_of(p) {
                    rest /= p;
                }
                per_prime.push(primary_basis(group, p));
            }
            p += 1;
        }
        for part in &mut per_prime {
            part.sort_by_key(|e| std::cmp::Reverse(e.1));
        }
        let rank = per_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut generators = Vec::with_capacity(rank);
        let mut orders = Vec::with_capacity(rank);
        for t in (0..rank).rev() {
            let mut g = group.zero();
            let mut d = 1u64;
            for part in &per_prime {
                if let Some(&(x, o)) = part.get(t) {
                    g = group.add(g, x);
                    d *= o;
                }
            }
            generators.push(g);
            orders.push(d);
        }
        debug_assert!(orders.windows(2).all(|w| w[1] % w[0] == 0));

        let mut coordinates: Vec<Option<Vec<u32>>> = vec![None; n];
        let radices: Vec<usize> = orders.iter().map(|&d| d as usize).collect();
        let total: usize = radices.iter().product();
        if total != n {
            return Err(Error::Inconsistent(format!(
                "invariant factors {orders:?} do not multiply to {n}"
            )));
        }
        for idx in 0..total {
            let digits = crate::build::mixed_radix_digits(&radices, idx);
            let x = digits
                .iter()
                .zip(&generators)
                .fold(group.zero(), |acc, (&c, &g)| {
                    group.add(acc, group.multiple(c as u64, g))
                });
            if coordinates[x as usize].replace(digits).is_some() {
                return Err(Error::Inconsistent("basis coordinates not unique".into()));
            }
        }
        Ok(AbelianBasis {
            generators,
            orders,
            coordinates: coordinates.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn of_ring(ring: &FiniteRing) -> Result<Self> {
        Self::compute(AdditiveGroup::of_ring(ring))
    }
}

/// Basis of the `p`-primary component, as (generator, order) pairs.
///
/// Greedy: repeatedly take an element of maximal order modulo the span so
/// far, then move it within its coset to an element of that same order.
fn primary_basis(group: AdditiveGroup<'_>, p: u64) -> Vec<(Elem, u64)> {
    let n = group.order();
    let is_p_power = |mut k: u64| {
        while k.is_multiple_of(p) {
            k /= p;
        }
        k == 1
    };
    let component: Vec<Elem> = (0..n as Elem)
        .filter(|&x| is_p_power(group.element_order(x)))
        .collect();
    let mut member = vec![false; n];
    member[group.zero() as usize] = true;
    let mut span = vec![group.zero()];
    let mut basis = Vec::new();
    while span.len() < component.len() {
        let order_mod = |x: Elem, member: &[bool]| {
            let mut k = 1;
            let mut acc = x;
            while !member[acc as usize] {
                acc = group.add(acc, x);
                k += 1;
            }
            k
        };
        let (best, k) = component.iter().map(|&x| (x, order_mod(x, &member))).fold(
            (group.zero(), 0),
            |acc, c| if c.1 > acc.1 { c } else { acc },
        );
        let sorted: BTreeSet<Elem> = span.iter().copied().collect();
        let lift = sorted
            .iter()
            .map(|&h| group.add(best, h))
            .find(|&y| group.element_order(y) == k)
            .expect("a coset of maximal order contains an element of that order");
        group.adjoin(&mut member, &mut span, lift);
        basis.push((lift, k));
    }
    debug_assert!(basis.iter().all(|&(_, k)| is_p_power(k) && k.gcd(&p) == p));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_ring, local_f2_xy, RingExpr};

    #[test]
    fn invariant_factors() {
        let cases = [
            (RingExpr::zmod(4), vec![4]),
            (RingExpr::zmod(6), vec![6]),
            (local_f2_xy(), vec![2, 2, 2]),
            (
                RingExpr::product(vec![RingExpr::zmod(2), RingExpr::zmod(4)]),
                vec![2, 4],
            ),
            (
                RingExpr::product(vec![
                    RingExpr::zmod(4),
                    RingExpr::zmod(6),
                    RingExpr::zmod(9),
                ]),
                vec![6, 36],
            ),
            (RingExpr::zmod(1), vec![]),
        ];
        for (expr, orders) in cases {
            let r = build_ring(&expr).unwrap();
            let basis = AbelianBasis::of_ring(&r).unwrap();
            assert_eq!(basis.orders(), orders.as_slice(), "{}", r.name());
        }
    }

    #[test]
    fn subgroups_of_z12() {
        let r = build_ring(&RingExpr::zmod(12)).unwrap();
        let g = AdditiveGroup::of_ring(&r);
        // one subgroup per divisor of 12
        assert_eq!(g.subgroup_lattice(100).unwrap().len(), 6);
        assert!(g.is_subgroup(&[0, 3, 6, 9]));
        assert!(!g.is_subgroup(&[0, 3, 6]));
    }

    #[test]
    fn klein_four_has_five_subgroups() {
        let r = build_ring(&RingExpr::product(vec![
            RingExpr::zmod(2),
            RingExpr::zmod(2),
        ]))
        .unwrap();
        let lattice = AdditiveGroup::of_ring(&r).subgroup_lattice(100).unwrap();
        assert_eq!(lattice.len(), 5);
    }
}
