//! Extending weight-preserving maps to monomial transformations.

use itertools::Itertools;
use serde::Serialize;

use super::code::{hamming_weight, Code, Word};
use super::hom::CodeHom;
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// `Φ_{σ,u}: x ↦ (x_{σ(0)} u_0, …, x_{σ(n-1)} u_{n-1})`, coordinates 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialTransform {
    sigma: Vec<usize>,
    units: Vec<Elem>,
}

impl MonomialTransform {
    pub fn new(ring: &FiniteRing, sigma: Vec<usize>, units: Vec<Elem>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidParameter(format!(
                    "{sigma:?} is not a permutation"
                )));
            }
        }
        if units.len() != n || !units.iter().all(|&u| ring.is_unit(u)) {
            return Err(Error::InvalidParameter(format!(
                "{units:?} is not a vector of {n} units"
            )));
        }
        Ok(MonomialTransform { sigma, units })
    }

    pub fn identity(ring: &FiniteRing, n: usize) -> Self {
        MonomialTransform {
            sigma: (0..n).collect(),
            units: vec![ring.one(); n],
        }
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn units(&self) -> &[Elem] {
        &self.units
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn apply(&self, ring: &FiniteRing, x: &[Elem]) -> Word {
        self.sigma
            .iter()
            .zip(&self.units)
            .map(|(&s, &u)| ring.mul(x[s], u))
            .collect()
    }

    /// `Φ(x) = φ(x)` for every `x` in the domain of `φ`.
    pub fn restricts_to(&self, ring: &FiniteRing, phi: &CodeHom) -> bool {
        self.len() == phi.codomain().length()
            && phi
                .domain()
                .elements()
                .iter()
                .enumerate()
                .all(|(i, x)| &self.apply(ring, x) == phi.image(i))
    }
}

/// `ker φ_i = {x ∈ M : φ(x)_i = 0}` for each target coordinate `i`.
pub fn coordinate_kernels(ring: &FiniteRing, phi: &CodeHom) -> Vec<Code> {
    let domain = phi.domain();
    (0..phi.codomain().length())
        .map(|i| {
            let elems = domain
                .elements()
                .iter()
                .enumerate()
                .filter(|&(t, _)| phi.image(t)[i] == ring.zero())
                .map(|(_, x)| x.clone())
                .collect();
            Code::from_submodule(ring, domain.length(), elems)
        })
        .collect()
}

fn kernel_masks(ring: &FiniteRing, values: &[&Word], len: usize) -> Vec<Vec<bool>> {
    (0..len)
        .map(|i| values.iter().map(|v| v[i] == ring.zero()).collect())
        .collect()
}

fn check_same_domain(phi: &CodeHom, psi: &CodeHom) -> Result<()> {
    if phi.domain() != psi.domain() {
        return Err(Error::InvalidParameter(
            "homomorphisms have different domains".into(),
        ));
    }
    Ok(())
}

/// Least `(j, k)` with `ker φ_j = ker ψ_k`.
pub fn kernel_match(
    ring: &FiniteRing,
    phi: &CodeHom,
    psi: &CodeHom,
) -> Result<Option<(usize, usize)>> {
    check_same_domain(phi, psi)?;
    let kp = coordinate_kernels(ring, phi);
    let ks = coordinate_kernels(ring, psi);
    Ok((0..kp.len())
        .cartesian_product(0..ks.len())
        .find(|&(j, k)| kp[j].elements() == ks[k].elements()))
}

/// Whether every `ker φ_j` contains some `ker ψ_k`.
pub fn kernel_containment(ring: &FiniteRing, phi: &CodeHom, psi: &CodeHom) -> Result<bool> {
    check_same_domain(phi, psi)?;
    let kp = coordinate_kernels(ring, phi);
    let ks = coordinate_kernels(ring, psi);
    Ok(kp.iter().all(|a| {
        ks.iter()
            .any(|b| b.elements().iter().all(|x| a.contains(x)))
    }))
}

/// Least unit `u` with `h_vals[t] = g_vals[t]·u` for every `t`.
///
/// `g_vals[t]` and `h_vals[t]` are the images of the `t`-th generator of the
/// common domain; since `x ↦ g(x)u` is left linear, agreement on generators
/// is agreement everywhere.
pub fn unit_between_values(ring: &FiniteRing, g_vals: &[Elem], h_vals: &[Elem]) -> Option<Elem> {
    ring.units().iter().copied().find(|&u| {
        g_vals
            .iter()
            .zip(h_vals)
            .all(|(&g, &h)| ring.mul(g, u) == h)
    })
}

/// Least unit `u` with `h(x) = g(x)·u` for homomorphisms `g, h: M → R`.
pub fn unit_between(ring: &FiniteRing, g: &CodeHom, h: &CodeHom) -> Result<Option<Elem>> {
    check_same_domain(g, h)?;
    if g.codomain().length() != 1 || h.codomain().length() != 1 {
        return Err(Error::InvalidParameter(
            "unit_between needs maps into R".into(),
        ));
    }
    let gv: Vec<Elem> = g.images_of_generators().iter().map(|w| w[0]).collect();
    let hv: Vec<Elem> = h.images_of_generators().iter().map(|w| w[0]).collect();
    Ok(unit_between_values(ring, &gv, &hv))
}

/// Inductive extension of `φ: M → R^n` against the inclusion `M ↪ R^n`.
///
/// Each round takes the least pair `(j, k)` of remaining source and target
/// coordinates with `ker x_j = ker φ_k` that admits a unit `u` with
/// `φ_k(x) = x_j u`, fixes `σ(k) = j`, `u_k = u` and drops both coordinates.
/// Any such pair keeps the residual problem solvable if the original one is,
/// so no backtracking is needed.
pub fn extend_to_monomial(ring: &FiniteRing, phi: &CodeHom) -> Result<Option<MonomialTransform>> {
    let domain = phi.domain();
    let n = domain.length();
    if phi.codomain().length() != n {
        return Err(Error::InvalidParameter(
            "domain and codomain lengths differ".into(),
        ));
    }
    let xs: Vec<&Word> = domain.elements().iter().collect();
    let ys: Vec<&Word> = (0..domain.len()).map(|i| phi.image(i)).collect();
    let src_kernels = kernel_masks(ring, &xs, n);
    let tgt_kernels = kernel_masks(ring, &ys, n);
    let gens: Vec<&Word> = domain.generators().iter().collect();
    let gen_images = phi.images_of_generators();

    let mut sources: Vec<usize> = (0..n).collect();
    let mut targets: Vec<usize> = (0..n).collect();
    let mut sigma = vec![usize::MAX; n];
    let mut units = vec![ring.one(); n];
    while !targets.is_empty() {
        let found = sources
            .iter()
            .enumerate()
            .cartesian_product(targets.iter().enumerate())
            .filter(|((_, &j), (_, &k))| src_kernels[j] == tgt_kernels[k])
            .find_map(|((a, &j), (b, &k))| {
                let gv: Vec<Elem> = gens.iter().map(|g| g[j]).collect();
                let hv: Vec<Elem> = gen_images.iter().map(|y| y[k]).collect();
                unit_between_values(ring, &gv, &hv).map(|u| (a, j, b, k, u))
            });
        let Some((a, j, b, k, u)) = found else {
            return Ok(None);
        };
        sigma[k] = j;
        units[k] = u;
        sources.remove(a);
        targets.remove(b);
    }
    let transform = MonomialTransform { sigma, units };
    if !transform.restricts_to(ring, phi) {
        return Err(Error::Inconsistent(
            "assembled monomial transform does not restrict to the given map".into(),
        ));
    }
    Ok(Some(transform))
}

/// Least `(σ, u)` (σ lexicographic, then `u`) with `Φ_{σ,u}|_M = φ`, by
/// trying every candidate. Refuses when `n!·|U|^n` exceeds `cap`.
pub fn exhaustive_extension_oracle(
    ring: &FiniteRing,
    phi: &CodeHom,
    cap: u64,
) -> Result<Option<MonomialTransform>> {
    let n = phi.domain().length();
    if phi.codomain().length() != n {
        return Err(Error::InvalidParameter(
            "domain and codomain lengths differ".into(),
        ));
    }
    let units = ring.units();
    let total = (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i * units.len() as u64));
    if total.is_none_or(|t| t > cap) {
        return Err(Error::CapExceeded {
            what: "monomial transform candidates",
            limit: cap,
        });
    }
    if n == 0 {
        return Ok(Some(MonomialTransform::identity(ring, 0)));
    }
    for sigma in (0..n).permutations(n) {
        for u in std::iter::repeat_n(units.iter().copied(), n).multi_cartesian_product() {
            let candidate = MonomialTransform {
                sigma: sigma.clone(),
                units: u,
            };
            if candidate.restricts_to(ring, phi) {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}

/// Total Hamming weight preserved by `Φ` on the given word.
pub fn preserves_weight(ring: &FiniteRing, t: &MonomialTransform, x: &[Elem]) -> bool {
    hamming_weight(ring, &t.apply(ring, x)) == hamming_weight(ring, x)
}
