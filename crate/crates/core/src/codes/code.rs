use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// A vector in `R^n`.
pub type Word = Vec<Elem>;

pub fn add_words(ring: &FiniteRing, a: &[Elem], b: &[Elem]) -> Word {
    a.iter().zip(b).map(|(&x, &y)| ring.add(x, y)).collect()
}

/// Left scalar multiple `r·a`.
pub fn scale_word(ring: &FiniteRing, r: Elem, a: &[Elem]) -> Word {
    a.iter().map(|&x| ring.mul(r, x)).collect()
}

pub fn zero_word(ring: &FiniteRing, len: usize) -> Word {
    vec![ring.zero(); len]
}

/// Hamming weight: number of nonzero coordinates.
pub fn hamming_weight(ring: &FiniteRing, x: &[Elem]) -> usize {
    x.iter().filter(|&&c| c != ring.zero()).count()
}

/// All of `R^len` in lexicographic order.
pub(crate) fn all_words(ring: &FiniteRing, len: usize) -> impl Iterator<Item = Word> + '_ {
    let n = ring.order() as u64;
    let total = n.pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = (idx % n) as Elem;
            idx /= n;
        }
        w
    })
}

/// A left submodule of `R^n` with its elements enumerated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Code {
    length: usize,
    elements: Vec<Word>,
    generators: Vec<Word>,
    #[serde(skip)]
    generator_idx: Vec<usize>,
}

impl Code {
    pub(crate) fn from_sorted(length: usize, elements: Vec<Word>, generators: Vec<Word>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let generator_idx = generators
            .iter()
            .map(|g| {
                elements
                    .binary_search(g)
                    .expect("generator lies in the code")
            })
            .collect();
        Code {
            length,
            elements,
            generators,
            generator_idx,
        }
    }

    pub fn zero(ring: &FiniteRing, length: usize) -> Self {
        Code::from_sorted(length, vec![zero_word(ring, length)], Vec::new())
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    /// Positions of the generators within [`Self::elements`].
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_idx
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

    pub fn index_of(&self, x: &[Elem]) -> Option<usize> {
        self.elements.binary_search_by(|w| w.as_slice().cmp(x)).ok()
    }

    pub fn contains(&self, x: &[Elem]) -> bool {
        self.index_of(x).is_some()
    }

    /// Re-derives the greedy generating set: repeatedly the least element not
    /// yet in the span.
    pub(crate) fn with_greedy_generators(self, ring: &FiniteRing) -> Self {
        let mut gens: Vec<Word> = Vec::new();
        let mut span: HashSet<Word> = HashSet::from([zero_word(ring, self.length)]);
        for x in &self.elements {
            if span.len() == self.elements.len() {
                break;
            }
            if !span.contains(x) {
                let rx: Vec<Word> = ring.elements().map(|r| scale_word(ring, r, x)).collect();
                span = span
                    .iter()
                    .flat_map(|a| rx.iter().map(move |b| (a, b)))
                    .map(|(a, b)| add_words(ring, a, b))
                    .collect();
                gens.push(x.clone());
            }
        }
        Code::from_sorted(self.length, self.elements, gens)
    }

    /// Builds a code from an element set that is already a submodule.
    pub(crate) fn from_submodule(
        ring: &FiniteRing,
        length: usize,
        mut elements: Vec<Word>,
    ) -> Self {
        elements.sort();
        Code::from_sorted(length, elements, Vec::new()).with_greedy_generators(ring)
    }
}

/// Smallest submodule of `_R R^n` containing `gens`.
pub fn span_code(ring: &FiniteRing, length: usize, gens: &[Word], cap: usize) -> Result<Code> {
    if let Some(g) = gens.iter().find(|g| g.len() != length) {
        return Err(Error::InvalidParameter(format!(
            "generator {g:?} does not have length {length}"
        )));
    }
    let mut set: HashSet<Word> = HashSet::from([zero_word(ring, length)]);
    for g in gens {
        let rg: HashSet<Word> = ring.elements().map(|r| scale_word(ring, r, g)).collect();
        let next: HashSet<Word> = set
            .iter()
            .flat_map(|a| rg.iter().map(move |b| (a, b)))
            .map(|(a, b)| add_words(ring, a, b))
            .collect();
        if next.len() > cap {
            return Err(Error::CapExceeded {
                what: "code size",
                limit: cap as u64,
            });
        }
        set = next;
    }
    let mut elements: Vec<Word> = set.into_iter().collect();
    elements.sort();
    Ok(Code::from_sorted(length, elements, gens.to_vec()))
}

/// Every submodule of `R^n` with at most `size_cap` elements, sorted by
/// element list.
pub fn enumerate_codes(
    ring: &FiniteRing,
    length: usize,
    size_cap: usize,
    count_cap: usize,
) -> Result<Vec<Code>> {
    if size_cap == 0 {
        return Ok(Vec::new());
    }
    let words: Vec<Word> = all_words(ring, length).collect();
    let cyclic: Vec<Vec<Word>> = words
        .iter()
        .map(|v| {
            let mut rv: Vec<Word> = ring.elements().map(|r| scale_word(ring, r, v)).collect();
            rv.sort();
            rv.dedup();
            rv
        })
        .collect();
    let zero = vec![zero_word(ring, length)];
    let mut seen: HashSet<Vec<Word>> = HashSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(code) = frontier.pop() {
        let member: HashSet<&Word> = code.iter().collect();
        for (v, rv) in words.iter().zip(&cyclic) {
            if member.contains(v) {
                continue;
            }
            let common = rv.iter().filter(|w| member.contains(w)).count();
            if code.len() * rv.len() / common > size_cap {
                continue;
            }
            let mut next: Vec<Word> = code
                .iter()
                .flat_map(|a| rv.iter().map(move |b| (a, b)))
                .map(|(a, b)| add_words(ring, a, b))
                .collect();
            next.sort();
            next.dedup();
            if !seen.contains(&next) {
                if seen.len() >= count_cap {
                    return Err(Error::CapExceeded {
                        what: "number of codes",
                        limit: count_cap as u64,
                    });
                }
                seen.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    let mut codes: Vec<Code> = seen
        .into_iter()
        .map(|els| Code::from_sorted(length, els, Vec::new()).with_greedy_generators(ring))
        .collect();
    codes.sort();
    Ok(codes)
}
