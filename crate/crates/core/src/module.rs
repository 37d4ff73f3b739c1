//! Explicit finite modules given by addition and action tables.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::AdditiveGroup;
use crate::ring::{Elem, FiniteRing};

/// A finite left module over a ring of order `ring_order`. Right modules are
/// represented as left modules over the opposite ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    ring_order: usize,
    order: usize,
    add: Vec<Elem>,
    /// `act[r * order + m] = r·m`.
    act: Vec<Elem>,
    zero: Elem,
    /// A ring element standing for each module element, when the module is
    /// built from ring data (ideal members, least coset members).
    representatives: Option<Vec<Elem>>,
}

impl FiniteModule {
    /// Builds a module from tables, checking the module axioms.
    pub fn from_tables(ring: &FiniteRing, add: Vec<Elem>, act: Vec<Elem>) -> Result<Self> {
        let order = (0..=add.len())
            .find(|k| k * k == add.len())
            .ok_or_else(|| Error::InvalidParameter("addition table is not square".into()))?;
        if act.len() != ring.order() * order {
            return Err(Error::InvalidParameter(
                "action table has the wrong size".into(),
            ));
        }
        let zero = act
            .get(ring.zero() as usize * order)
            .copied()
            .unwrap_or_default();
        let m = FiniteModule {
            ring_order: ring.order(),
            order,
            add,
            act,
            zero,
            representatives: None,
        };
        m.check_axioms(ring)?;
        Ok(m)
    }

    fn check_axioms(&self, ring: &FiniteRing) -> Result<()> {
        let bad = |what: &str| Err(Error::Inconsistent(format!("module axiom fails: {what}")));
        let group = AdditiveGroup::new(self.order, &self.add, self.zero);
        for a in 0..self.order as Elem {
            if group.add(a, self.zero) != a || self.act(ring.one(), a) != a {
                return bad("identity");
            }
            for b in 0..self.order as Elem {
                if group.add(a, b) != group.add(b, a) {
                    return bad("commutativity");
                }
            }
        }
        for r in ring.elements() {
            for s in ring.elements() {
                for m in 0..self.order as Elem {
                    if self.act(ring.mul(r, s), m) != self.act(r, self.act(s, m))
                        || self.act(ring.add(r, s), m) != self.add(self.act(r, m), self.act(s, m))
                    {
                        return bad("action");
                    }
                }
            }
        }
        Ok(())
    }

    /// Tables assumed to satisfy the module axioms.
    pub(crate) fn from_parts(
        ring_order: usize,
        order: usize,
        add: Vec<Elem>,
        act: Vec<Elem>,
        zero: Elem,
    ) -> Self {
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(act.len(), ring_order * order);
        FiniteModule {
            ring_order,
            order,
            add,
            act,
            zero,
            representatives: None,
        }
    }

    /// Checks the module axioms; `O(|R|²·|M|)`.
    pub fn verify(&self, ring: &FiniteRing) -> bool {
        self.check_axioms(ring).is_ok()
    }

    /// `I` as a left module, elements numbered in the order of `elements`.
    pub fn from_left_ideal(ring: &FiniteRing, elements: &[Elem]) -> Self {
        let k = elements.len();
        let mut index = vec![Elem::MAX; ring.order()];
        for (i, &x) in elements.iter().enumerate() {
            index[x as usize] = i as Elem;
        }
        let idx = |x: Elem| index[x as usize];
        let add = elements
            .iter()
            .flat_map(|&a| elements.iter().map(move |&b| (a, b)))
            .map(|(a, b)| idx(ring.add(a, b)))
            .collect();
        let act = ring
            .elements()
            .flat_map(|r| elements.iter().map(move |&x| (r, x)))
            .map(|(r, x)| idx(ring.mul(r, x)))
            .collect();
        FiniteModule {
            ring_order: ring.order(),
            order: k,
            add,
            act,
            zero: idx(ring.zero()),
            representatives: Some(elements.to_vec()),
        }
    }

    /// `L/N` for left ideals `N ⊆ L`; cosets numbered by least member.
    pub fn ideal_quotient(ring: &FiniteRing, big: &[Elem], small: &[Elem]) -> Self {
        let mut class = vec![Elem::MAX; ring.order()];
        let mut reps = Vec::new();
        for &x in big {
            if class[x as usize] != Elem::MAX {
                continue;
            }
            let c = reps.len() as Elem;
            reps.push(x);
            for &j in small {
                class[ring.add(x, j) as usize] = c;
            }
        }
        let cls = |x: Elem| class[x as usize];
        let add = reps
            .iter()
            .flat_map(|&a| reps.iter().map(move |&b| (a, b)))
            .map(|(a, b)| cls(ring.add(a, b)))
            .collect();
        let act = ring
            .elements()
            .flat_map(|r| reps.iter().map(move |&x| (r, x)))
            .map(|(r, x)| cls(ring.mul(r, x)))
            .collect();
        FiniteModule {
            ring_order: ring.order(),
            order: reps.len(),
            add,
            act,
            zero: cls(ring.zero()),
            representatives: Some(reps),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring_order(&self) -> usize {
        self.ring_order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn act(&self, r: Elem, m: Elem) -> Elem {
        self.act[r as usize * self.order + m as usize]
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn representatives(&self) -> Option<&[Elem]> {
        self.representatives.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1
    }

    /// `Rm`, sorted.
    pub fn cyclic_submodule(&self, m: Elem) -> Vec<Elem> {
        let mut member = vec![false; self.order];
        let mut out: Vec<Elem> = (0..self.ring_order as Elem)
            .map(|r| self.act(r, m))
            .filter(|&y| !std::mem::replace(&mut member[y as usize], true))
            .collect();
        out.sort_unstable();
        out
    }

    /// `ann(m) = {r : r·m = 0}`, sorted.
    pub fn annihilator(&self, m: Elem) -> Vec<Elem> {
        (0..self.ring_order as Elem)
            .filter(|&r| self.act(r, m) == self.zero)
            .collect()
    }

    /// Nonzero with no proper nonzero submodule: every `Rm` with `m ≠ 0` is
    /// everything.
    pub fn is_simple(&self) -> bool {
        !self.is_zero()
            && self
                .elements()
                .filter(|&m| m != self.zero)
                .all(|m| self.cyclic_submodule(m).len() == self.order)
    }

    /// Least generator `m` with `Rm = M`, if the module is cyclic.
    pub fn cyclic_generator(&self) -> Option<Elem> {
        self.elements()
            .find(|&m| self.cyclic_submodule(m).len() == self.order)
    }

    /// Every submodule, each sorted, the list sorted lexicographically.
    pub fn submodules(&self, cap: usize) -> Result<Vec<Vec<Elem>>> {
        let group = AdditiveGroup::new(self.order, &self.add, self.zero);
        let cyclic: Vec<Vec<Elem>> = self.elements().map(|m| self.cyclic_submodule(m)).collect();
        let zero = vec![self.zero];
        let mut seen: HashSet<Vec<Elem>> = HashSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(sub) = frontier.pop() {
            let mut member = vec![false; self.order];
            sub.iter().for_each(|&x| member[x as usize] = true);
            for m in self.elements() {
                if member[m as usize] {
                    continue;
                }
                let next = group.sum(&sub, &cyclic[m as usize]);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "number of submodules",
                            limit: cap as u64,
                        });
                    }
                    frontier.push(next);
                }
            }
        }
        let mut all: Vec<_> = seen.into_iter().collect();
        all.sort();
        Ok(all)
    }

    /// Whether the maximal proper submodules cover the module.
    pub fn covered_by_proper_submodules(&self, cap: usize) -> Result<bool> {
        let subs = self.submodules(cap)?;
        let proper: Vec<&Vec<Elem>> = subs.iter().filter(|s| s.len() < self.order).collect();
        let mut covered = vec![false; self.order];
        for s in &proper {
            let maximal = !proper
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|x| t.binary_search(x).is_ok()));
            if maximal {
                s.iter().for_each(|&x| covered[x as usize] = true);
            }
        }
        Ok(covered.iter().all(|&c| c))
    }
}

/// For simple `M`, `N`: an element `n ∈ N` such that `r·m_0 ↦ r·n` is an
/// isomorphism, where `m_0` is the least nonzero element of `M`.
///
/// `ann(m_0) ⊆ ann(n)` makes the map well defined and `Rn = N` makes it
/// onto; equal orders then make it bijective.
pub fn simple_modules_isomorphic(m: &FiniteModule, n: &FiniteModule) -> Option<Elem> {
    if m.order() != n.order() || m.ring_order() != n.ring_order() || m.is_zero() {
        return None;
    }
    let m0 = m.elements().find(|&x| x != m.zero())?;
    let ann = m.annihilator(m0);
    n.elements().find(|&y| {
        ann.iter().all(|&r| n.act(r, y) == n.zero()) && n.cyclic_submodule(y).len() == n.order()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_ring, RingExpr};

    #[test]
    fn socle_and_top_of_z4_agree() {
        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        let soc = FiniteModule::from_left_ideal(&z4, &[0, 2]);
        let top = FiniteModule::ideal_quotient(&z4, &[0, 1, 2, 3], &[0, 2]);
        assert!(soc.is_simple() && top.is_simple());
        assert_eq!(simple_modules_isomorphic(&soc, &top), Some(1));
        assert_eq!(simple_modules_isomorphic(&soc, &soc), Some(1));
        let whole = FiniteModule::from_left_ideal(&z4, &[0, 1, 2, 3]);
        assert!(!whole.is_simple());
        assert_eq!(whole.cyclic_generator(), Some(1));
        assert_eq!(whole.submodules(10).unwrap().len(), 3);
        assert!(!whole.covered_by_proper_submodules(10).unwrap());
    }

    #[test]
    fn klein_group_over_f2_is_covered() {
        let f2 = build_ring(&RingExpr::zmod(2)).unwrap();
        let k = build_ring(&RingExpr::product(vec![
            RingExpr::zmod(2),
            RingExpr::zmod(2),
        ]))
        .unwrap();
        let act = f2
            .elements()
            .flat_map(|r| k.elements().map(move |x| (r, x)))
            .map(|(r, x)| if r == 0 { 0 } else { x })
            .collect();
        let m = FiniteModule::from_tables(&f2, k.add_table().to_vec(), act).unwrap();
        assert_eq!(m.cyclic_generator(), None);
        assert!(m.covered_by_proper_submodules(10).unwrap());
    }

    #[test]
    fn bad_action_rejected() {
        let z2 = build_ring(&RingExpr::zmod(2)).unwrap();
        // 1 acting as zero breaks the identity axiom
        assert!(FiniteModule::from_tables(&z2, vec![0, 1, 1, 0], vec![0, 0, 0, 0]).is_err());
    }
}
