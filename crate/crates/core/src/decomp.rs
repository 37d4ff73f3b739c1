//! Principal decomposition, simple tops, socle multiplicities, the Nakayama
//! permutation and the resulting classification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::AdditiveGroup;
use crate::ideal::{minimal_left_ideals, radical, socle_left, LeftIdeal};
use crate::module::{simple_modules_isomorphic, FiniteModule};
use crate::ring::{Elem, FiniteRing};

/// `eRe`, sorted.
pub fn corner(ring: &FiniteRing, e: Elem, f: Elem) -> Vec<Elem> {
    let mut out: Vec<Elem> = ring
        .elements()
        .map(|r| ring.mul(ring.mul(e, r), f))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Least idempotent of `eRe` other than `0` and `e`.
fn splitting_idempotent(ring: &FiniteRing, e: Elem) -> Option<Elem> {
    corner(ring, e, e)
        .into_iter()
        .find(|&f| f != ring.zero() && f != e && ring.is_idempotent(f))
}

pub fn is_primitive(ring: &FiniteRing, e: Elem) -> bool {
    e != ring.zero() && ring.is_idempotent(e) && splitting_idempotent(ring, e).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalDecomposition {
    /// Orthogonal primitive idempotents summing to 1, sorted.
    pub idempotents: Vec<Elem>,
    /// One representative per isomorphism class of `Re_i`, in order of
    /// first appearance.
    pub basic: Vec<Elem>,
    /// Class (position in `basic`) of each idempotent.
    pub class_of: Vec<usize>,
    /// `μ_j`: number of idempotents in class `j`.
    pub multiplicities: Vec<usize>,
}

/// Splits `1` recursively at the least nontrivial corner idempotent.
pub fn principal_decomposition(ring: &FiniteRing) -> PrincipalDecomposition {
    let mut idempotents = Vec::new();
    if ring.order() > 1 {
        let mut stack = vec![ring.one()];
        while let Some(e) = stack.pop() {
            match splitting_idempotent(ring, e) {
                Some(f) => {
                    stack.push(ring.sub(e, f));
                    stack.push(f);
                }
                None => idempotents.push(e),
            }
        }
    }
    idempotents.sort_unstable();
    let mut basic: Vec<Elem> = Vec::new();
    let mut class_of = Vec::with_capacity(idempotents.len());
    let mut multiplicities: Vec<usize> = Vec::new();
    for &e in &idempotents {
        match basic
            .iter()
            .position(|&b| indecomposables_isomorphic(ring, b, e).is_some())
        {
            Some(c) => {
                class_of.push(c);
                multiplicities[c] += 1;
            }
            None => {
                class_of.push(basic.len());
                basic.push(e);
                multiplicities.push(1);
            }
        }
    }
    PrincipalDecomposition {
        idempotents,
        basic,
        class_of,
        multiplicities,
    }
}

impl PrincipalDecomposition {
    /// `e_i e_j = δ_ij e_i`, `Σ e_i = 1` and every `e_i` primitive.
    pub fn verify(&self, ring: &FiniteRing) -> bool {
        let es = &self.idempotents;
        let sum = es.iter().fold(ring.zero(), |acc, &e| ring.add(acc, e));
        let orthogonal = es.iter().enumerate().all(|(i, &a)| {
            es.iter()
                .enumerate()
                .all(|(j, &b)| ring.mul(a, b) == if i == j { a } else { ring.zero() })
        });
        (sum == ring.one() || ring.order() == 1)
            && orthogonal
            && es.iter().all(|&e| is_primitive(ring, e))
            && self.multiplicities.iter().sum::<usize>() == es.len()
    }
}

/// `(a, b)` with `a ∈ eRf`, `b ∈ fRe`, `ab = e`, `ba = f`; right
/// multiplication by `a` and `b` are then inverse isomorphisms `Re ≅ Rf`.
pub fn indecomposables_isomorphic(ring: &FiniteRing, e: Elem, f: Elem) -> Option<(Elem, Elem)> {
    let erf = corner(ring, e, f);
    let fre = corner(ring, f, e);
    erf.iter().find_map(|&a| {
        fre.iter()
            .find(|&&b| ring.mul(a, b) == e && ring.mul(b, a) == f)
            .map(|&b| (a, b))
    })
}

/// `Re`, sorted.
pub fn projective(ring: &FiniteRing, e: Elem) -> Vec<Elem> {
    let mut out: Vec<Elem> = ring.elements().map(|r| ring.mul(r, e)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `tp(Re) = Re / (rad R)e`, checked simple.
pub fn simple_top(ring: &FiniteRing, e: Elem) -> Result<FiniteModule> {
    if !is_primitive(ring, e) {
        return Err(Error::NotPrimitive(e));
    }
    let rad = radical(ring);
    let mut je: Vec<Elem> = rad.elements().iter().map(|&j| ring.mul(j, e)).collect();
    je.sort_unstable();
    je.dedup();
    let top = FiniteModule::ideal_quotient(ring, &projective(ring, e), &je);
    if !top.is_simple() {
        return Err(Error::Inconsistent(format!("top of R·{e} is not simple")));
    }
    Ok(top)
}

/// `soc(Re) = Re ∩ soc(R)`, sorted.
pub fn projective_socle(ring: &FiniteRing, e: Elem, socle: &LeftIdeal) -> Vec<Elem> {
    projective(ring, e)
        .into_iter()
        .filter(|&x| socle.contains(x))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleProfile {
    /// `ν_i`: copies of the `i`-th basic simple module in the socle.
    pub multiplicities: Vec<usize>,
    /// Basic classes whose simple module is finite (all of them here).
    pub finite_classes: Vec<usize>,
    /// Minimal left ideals peeled off, forming a direct sum equal to the
    /// socle.
    pub summands: Vec<LeftIdeal>,
    /// Basic class of each summand.
    pub summand_class: Vec<usize>,
    pub socle_order: usize,
}

/// Writes the socle as a direct sum of minimal ideals (greedily, in
/// lexicographic order) and counts each simple class.
pub fn socle_profile(ring: &FiniteRing, dec: &PrincipalDecomposition) -> Result<SocleProfile> {
    let tops = dec
        .basic
        .iter()
        .map(|&e| simple_top(ring, e))
        .collect::<Result<Vec<_>>>()?;
    profile_against(ring, &tops)
}

fn profile_against(ring: &FiniteRing, tops: &[FiniteModule]) -> Result<SocleProfile> {
    let socle = socle_left(ring).ideal;
    let group = AdditiveGroup::of_ring(ring);
    let mut span = vec![ring.zero()];
    let mut multiplicities = vec![0; tops.len()];
    let mut summands = Vec::new();
    let mut summand_class = Vec::new();
    let mut product = 1usize;
    for m in minimal_left_ideals(ring) {
        if m.elements().iter().all(|x| span.binary_search(x).is_ok()) {
            continue;
        }
        let module = FiniteModule::from_left_ideal(ring, m.elements());
        let class = tops
            .iter()
            .position(|t| simple_modules_isomorphic(&module, t).is_some())
            .ok_or_else(|| {
                Error::Inconsistent(format!(
                    "minimal ideal {:?} matches no simple top",
                    m.elements()
                ))
            })?;
        multiplicities[class] += 1;
        product *= m.len();
        span = group.sum(&span, m.elements());
        summands.push(m);
        summand_class.push(class);
    }
    if span != socle.elements() || product != socle.len() {
        return Err(Error::Inconsistent(
            "peeled minimal ideals do not form a direct sum equal to the socle".into(),
        ));
    }
    Ok(SocleProfile {
        multiplicities,
        finite_classes: (0..tops.len()).collect(),
        summands,
        summand_class,
        socle_order: socle.len(),
    })
}

/// Least `π` on basic classes with `soc(Re_i) ≅ tp(Re_π(i))` and
/// `soc(e_π(i) R) ≅ tp(e_i R)`, or `None` if there is none.
pub fn nakayama_permutation(
    ring: &FiniteRing,
    dec: &PrincipalDecomposition,
) -> Result<Option<Vec<usize>>> {
    let op = ring.opposite();
    let left = socle_matching(ring, &dec.basic)?;
    let right = socle_matching(&op, &dec.basic)?;
    let (Some(left), Some(right)) = (left, right) else {
        return Ok(None);
    };
    let m = dec.basic.len();
    let mut seen = vec![false; m];
    if !left.iter().all(|&j| !std::mem::replace(&mut seen[j], true)) {
        return Ok(None);
    }
    // right[j] is the class whose top matches soc(e_j R); need right[π(i)] = i
    Ok((0..m).all(|i| right[left[i]] == i).then_some(left))
}

/// For each basic `e_i`, the class `j` with `soc(Re_i) ≅ tp(Re_j)`, provided
/// every `soc(Re_i)` is simple.
fn socle_matching(ring: &FiniteRing, basic: &[Elem]) -> Result<Option<Vec<usize>>> {
    let socle = socle_left(ring).ideal;
    let tops = basic
        .iter()
        .map(|&e| simple_top(ring, e))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(basic.len());
    for &e in basic {
        let soc = FiniteModule::from_left_ideal(ring, &projective_socle(ring, e, &socle));
        if !soc.is_simple() {
            return Ok(None);
        }
        match tops
            .iter()
            .position(|t| simple_modules_isomorphic(&soc, t).is_some())
        {
            Some(j) => out.push(j),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub semisimple: bool,
    pub quasi_frobenius: bool,
    pub frobenius: bool,
    pub socle_embeds_left: bool,
    pub socle_embeds_right: bool,
    pub nakayama: Option<Vec<usize>>,
    pub decomposition: PrincipalDecomposition,
    pub profile: SocleProfile,
    /// Socle profile of `R_R`, computed on the opposite ring.
    pub right_profile: SocleProfile,
    pub radical_order: usize,
}

impl Classification {
    pub fn mu(&self) -> &[usize] {
        &self.decomposition.multiplicities
    }

    pub fn nu(&self) -> &[usize] {
        &self.profile.multiplicities
    }

    /// The implications that must hold between the verdicts.
    pub fn is_consistent(&self) -> bool {
        (!self.frobenius
            || (self.quasi_frobenius && self.socle_embeds_left && self.socle_embeds_right))
            && (!self.semisimple || self.frobenius)
            && (!self.quasi_frobenius || self.socle_embeds_left == self.socle_embeds_right)
    }
}

pub fn classify(ring: &FiniteRing) -> Result<Classification> {
    let rad = radical(ring);
    let decomposition = principal_decomposition(ring);
    let profile = socle_profile(ring, &decomposition)?;
    let op = ring.opposite();
    let right_tops = decomposition
        .basic
        .iter()
        .map(|&e| simple_top(&op, e))
        .collect::<Result<Vec<_>>>()?;
    let right_profile = profile_against(&op, &right_tops)?;
    let nakayama = nakayama_permutation(ring, &decomposition)?;
    let mu = &decomposition.multiplicities;
    let fits = |nu: &[usize]| nu.iter().zip(mu).all(|(n, m)| n <= m);
    let quasi_frobenius = nakayama.is_some();
    let c = Classification {
        semisimple: rad.is_zero(),
        quasi_frobenius,
        frobenius: quasi_frobenius && profile.multiplicities == *mu,
        socle_embeds_left: fits(&profile.multiplicities),
        socle_embeds_right: fits(&right_profile.multiplicities),
        nakayama,
        decomposition,
        profile,
        right_profile,
        radical_order: rad.len(),
    };
    if !c.is_consistent() {
        return Err(Error::Inconsistent(format!(
            "classification verdicts contradict each other: {c:?}"
        )));
    }
    Ok(c)
}
