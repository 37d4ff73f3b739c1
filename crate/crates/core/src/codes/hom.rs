//! Module homomorphisms out of a code, and their enumeration.
//!
//! A homomorphism `M → R^m` is fixed by the images `y_1..y_g` of a generating
//! set `g_1..g_g` of `M`. With `M_t = M_{t-1} + R g_t`, the map extends from
//! `M_{t-1}` to `M_t` iff `s·y_t = f(s·g_t)` whenever `s·g_t ∈ M_{t-1}`. The
//! enumerator checks this stage by stage and prunes early.

use std::ops::ControlFlow;

use serde::Serialize;

use super::code::{add_words, all_words, hamming_weight, scale_word, Code, Word};
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// A homomorphism of left modules between two codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeHom {
    domain: Code,
    codomain: Code,
    images_of_generators: Vec<Word>,
    /// Codomain index of the image of each domain element.
    full_map: Vec<usize>,
}

impl CodeHom {
    /// Builds the homomorphism determined by images of the domain's
    /// generators, with the image code as codomain.
    pub fn from_generator_images(
        ring: &FiniteRing,
        domain: &Code,
        images: &[Word],
    ) -> Result<Self> {
        if images.len() != domain.generators().len() {
            return Err(Error::InvalidParameter(
                "one image per generator is required".into(),
            ));
        }
        let target_len = images.first().map_or(domain.length(), Vec::len);
        let plan = StagePlan::new(ring, domain);
        let table = plan.evaluate(ring, target_len, images).ok_or_else(|| {
            Error::InvalidParameter("generator images do not define a homomorphism".into())
        })?;
        Ok(CodeHom::from_table(ring, domain, target_len, table))
    }

    /// `table[i]` is the image of `domain.elements()[i]`.
    pub(crate) fn from_table(
        ring: &FiniteRing,
        domain: &Code,
        target_len: usize,
        table: Vec<Word>,
    ) -> Self {
        let codomain = Code::from_submodule(ring, target_len, {
            let mut im = table.clone();
            im.sort();
            im.dedup();
            im
        });
        let full_map = table
            .iter()
            .map(|y| codomain.index_of(y).expect("image lies in the image code"))
            .collect();
        let images_of_generators = domain
            .generator_indices()
            .iter()
            .map(|&i| table[i].clone())
            .collect();
        CodeHom {
            domain: domain.clone(),
            codomain,
            images_of_generators,
            full_map,
        }
    }

    /// Inclusion of a code into `R^n`.
    pub fn inclusion(domain: &Code) -> Self {
        CodeHom {
            domain: domain.clone(),
            codomain: domain.clone(),
            images_of_generators: domain.generators().to_vec(),
            full_map: (0..domain.len()).collect(),
        }
    }

    pub fn domain(&self) -> &Code {
        &self.domain
    }

    pub fn codomain(&self) -> &Code {
        &self.codomain
    }

    pub fn images_of_generators(&self) -> &[Word] {
        &self.images_of_generators
    }

    pub fn full_map(&self) -> &[usize] {
        &self.full_map
    }

    /// Image of the `i`-th domain element.
    pub fn image(&self, i: usize) -> &Word {
        &self.codomain.elements()[self.full_map[i]]
    }

    pub fn apply(&self, x: &[Elem]) -> Option<&Word> {
        self.domain.index_of(x).map(|i| self.image(i))
    }

    /// Pairs `(x, φ(x))` in domain order.
    pub fn graph(&self) -> Vec<(Word, Word)> {
        self.domain
            .elements()
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), self.image(i).clone()))
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.len()];
        self.full_map
            .iter()
            .all(|&j| !std::mem::replace(&mut seen[j], true))
    }
}

/// `w_H(φ(x)) = w_H(x)` for every element of the domain.
pub fn is_weight_preserving(ring: &FiniteRing, phi: &CodeHom) -> bool {
    phi.domain()
        .elements()
        .iter()
        .enumerate()
        .all(|(i, x)| hamming_weight(ring, phi.image(i)) == hamming_weight(ring, x))
}

struct Stage {
    /// Domain indices that first appear in `M_t`, with a representation
    /// `a + r·g_t` (`a` a domain index in `M_{t-1}`).
    fresh: Vec<(usize, usize, Elem)>,
    /// `(s, idx)` with `s·g_t = elements[idx] ∈ M_{t-1}`.
    constraints: Vec<(Elem, usize)>,
}

/// Precomputed generator chain of a code.
pub(crate) struct StagePlan {
    zero_idx: usize,
    stages: Vec<Stage>,
}

impl StagePlan {
    pub(crate) fn new(ring: &FiniteRing, domain: &Code) -> Self {
        let zero_idx = domain
            .index_of(&vec![ring.zero(); domain.length()])
            .expect("code contains zero");
        let mut member = vec![false; domain.len()];
        member[zero_idx] = true;
        let mut span = vec![zero_idx];
        let mut stages = Vec::new();
        for &gi in domain.generator_indices() {
            let g = &domain.elements()[gi];
            let constraints = ring
                .elements()
                .filter_map(|s| {
                    let idx = domain
                        .index_of(&scale_word(ring, s, g))
                        .expect("closed code");
                    member[idx].then_some((s, idx))
                })
                .collect();
            let mut fresh = Vec::new();
            let mut new_members = Vec::new();
            for &a in &span {
                for r in ring.elements() {
                    let z = add_words(ring, &domain.elements()[a], &scale_word(ring, r, g));
                    let idx = domain.index_of(&z).expect("closed code");
                    if !member[idx] {
                        member[idx] = true;
                        fresh.push((idx, a, r));
                        new_members.push(idx);
                    }
                }
            }
            span.extend(new_members);
            stages.push(Stage { fresh, constraints });
        }
        debug_assert_eq!(span.len(), domain.len());
        StagePlan { zero_idx, stages }
    }

    /// Full value table for the given generator images, if well defined.
    pub(crate) fn evaluate(
        &self,
        ring: &FiniteRing,
        target_len: usize,
        images: &[Word],
    ) -> Option<Vec<Word>> {
        let mut table: Vec<Word> = vec![Vec::new(); self.total_len()];
        table[self.zero_idx] = vec![ring.zero(); target_len];
        for (stage, y) in self.stages.iter().zip(images) {
            if !self.extend(ring, stage, y, &mut table) {
                return None;
            }
        }
        Some(table)
    }

    fn total_len(&self) -> usize {
        1 + self.stages.iter().map(|s| s.fresh.len()).sum::<usize>()
    }

    fn extend(&self, ring: &FiniteRing, stage: &Stage, y: &[Elem], table: &mut [Word]) -> bool {
        for &(s, idx) in &stage.constraints {
            if scale_word(ring, s, y) != table[idx] {
                return false;
            }
        }
        for &(idx, a, r) in &stage.fresh {
            table[idx] = add_words(ring, &table[a], &scale_word(ring, r, y));
        }
        true
    }
}

/// Options for [`enumerate_homs`].
pub(crate) struct HomFilter<'f> {
    /// Candidate image for generator `t`; checked before the stage extension.
    pub generator_ok: &'f dyn Fn(usize, &[Elem]) -> bool,
    /// Check on each newly defined value `(domain index, image)`.
    pub value_ok: &'f dyn Fn(usize, &[Elem]) -> bool,
}

/// Depth-first enumeration of homomorphisms `domain → R^target_len` in
/// lexicographic order of generator images. `budget` counts candidate images
/// that pass the generator filter; exceeding it aborts with `CapExceeded`.
/// The visitor may stop the enumeration early with `Break`.
pub(crate) fn enumerate_homs(
    ring: &FiniteRing,
    domain: &Code,
    target_len: usize,
    filter: &HomFilter<'_>,
    budget: &mut HomBudget,
    visit: &mut Visitor<'_>,
) -> Result<()> {
    let plan = StagePlan::new(ring, domain);
    let candidates: Vec<Word> = all_words(ring, target_len).collect();
    let mut table: Vec<Word> = vec![Vec::new(); plan.total_len()];
    table[plan.zero_idx] = vec![ring.zero(); target_len];
    let mut images = Vec::with_capacity(plan.stages.len());
    let _stopped = recurse(
        ring,
        &plan,
        &candidates,
        filter,
        budget,
        &mut table,
        &mut images,
        visit,
    )?;
    Ok(())
}

/// Called with the full image table and the generator images.
type Visitor<'a> = dyn FnMut(&[Word], &[Word]) -> ControlFlow<()> + 'a;

#[allow(clippy::too_many_arguments)]
fn recurse(
    ring: &FiniteRing,
    plan: &StagePlan,
    candidates: &[Word],
    filter: &HomFilter<'_>,
    budget: &mut HomBudget,
    table: &mut Vec<Word>,
    images: &mut Vec<Word>,
    visit: &mut Visitor<'_>,
) -> Result<ControlFlow<()>> {
    let t = images.len();
    let Some(stage) = plan.stages.get(t) else {
        return Ok(visit(table, images));
    };
    for y in candidates {
        if !(filter.generator_ok)(t, y) {
            continue;
        }
        budget.spend()?;
        if !plan.extend(ring, stage, y, table) {
            continue;
        }
        if !stage
            .fresh
            .iter()
            .all(|&(idx, _, _)| (filter.value_ok)(idx, &table[idx]))
        {
            continue;
        }
        images.push(y.clone());
        let flow = recurse(ring, plan, candidates, filter, budget, table, images, visit)?;
        images.pop();
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Shared counter for candidate images examined across a whole search.
#[derive(Clone, Debug)]
pub struct HomBudget {
    spent: u64,
    limit: u64,
}

impl HomBudget {
    pub fn new(limit: u64) -> Self {
        HomBudget { spent: 0, limit }
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    fn spend(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.limit {
            return Err(Error::CapExceeded {
                what: "homomorphism candidates",
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// All Hamming-weight-preserving homomorphisms `domain → R^n` (these are
/// automatically injective).
pub fn weight_preserving_homs(
    ring: &FiniteRing,
    domain: &Code,
    budget: &mut HomBudget,
) -> Result<Vec<CodeHom>> {
    let n = domain.length();
    let gen_weights: Vec<usize> = domain
        .generators()
        .iter()
        .map(|g| hamming_weight(ring, g))
        .collect();
    let weights: Vec<usize> = domain
        .elements()
        .iter()
        .map(|x| hamming_weight(ring, x))
        .collect();
    let generator_ok = |t: usize, y: &[Elem]| hamming_weight(ring, y) == gen_weights[t];
    let value_ok = |idx: usize, y: &[Elem]| hamming_weight(ring, y) == weights[idx];
    let filter = HomFilter {
        generator_ok: &generator_ok,
        value_ok: &value_ok,
    };
    let mut out = Vec::new();
    enumerate_homs(ring, domain, n, &filter, budget, &mut |table, _| {
        out.push(CodeHom::from_table(ring, domain, n, table.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Every homomorphism `domain → R^target_len`, in lexicographic order of
/// generator images.
pub fn all_homs(
    ring: &FiniteRing,
    domain: &Code,
    target_len: usize,
    budget: &mut HomBudget,
) -> Result<Vec<CodeHom>> {
    let filter = HomFilter {
        generator_ok: &|_, _| true,
        value_ok: &|_, _| true,
    };
    let mut out = Vec::new();
    enumerate_homs(
        ring,
        domain,
        target_len,
        &filter,
        budget,
        &mut |table, _| {
            out.push(CodeHom::from_table(
                ring,
                domain,
                target_len,
                table.to_vec(),
            ));
            ControlFlow::Continue(())
        },
    )?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_ring, local_f2_xy, RingExpr};
    use crate::codes::code::span_code;

    #[test]
    fn weight_preservation_examples() {
        let l = build_ring(&local_f2_xy()).unwrap();
        let m = span_code(&l, 1, &[vec![2]], 64).unwrap();
        let phi = CodeHom::from_generator_images(&l, &m, &[vec![4]]).unwrap();
        assert!(is_weight_preserving(&l, &phi));
        assert!(is_weight_preserving(&l, &CodeHom::inclusion(&m)));

        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        let full = span_code(&z4, 1, &[vec![1]], 64).unwrap();
        let double = CodeHom::from_generator_images(&z4, &full, &[vec![2]]).unwrap();
        assert!(!is_weight_preserving(&z4, &double));
        assert!(!double.is_injective());
    }

    #[test]
    fn ill_defined_images_rejected() {
        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        let m = span_code(&z4, 1, &[vec![2]], 64).unwrap();
        // 2·2 = 0 forces 2·y = 0
        assert!(CodeHom::from_generator_images(&z4, &m, &[vec![1]]).is_err());
        assert!(CodeHom::from_generator_images(&z4, &m, &[vec![2]]).is_ok());
    }

    #[test]
    fn weight_preserving_homs_of_z4_ideal() {
        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        let m = span_code(&z4, 1, &[vec![2]], 64).unwrap();
        let homs = weight_preserving_homs(&z4, &m, &mut HomBudget::new(1000)).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].images_of_generators(), &[vec![2]]);
    }

    #[test]
    fn homs_from_z4_ideal_into_z4() {
        // 2 ↦ y needs 2y = 0, so y ∈ {0, 2}
        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        let m = span_code(&z4, 1, &[vec![2]], 64).unwrap();
        let homs = all_homs(&z4, &m, 1, &mut HomBudget::new(1000)).unwrap();
        let images: Vec<_> = homs
            .iter()
            .map(|h| h.images_of_generators()[0].clone())
            .collect();
        assert_eq!(images, vec![vec![0], vec![2]]);
    }

    #[test]
    fn hom_budget_enforced() {
        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        let m = span_code(&z4, 2, &[vec![1, 0], vec![0, 1]], 64).unwrap();
        let err = all_homs(&z4, &m, 2, &mut HomBudget::new(10)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}
