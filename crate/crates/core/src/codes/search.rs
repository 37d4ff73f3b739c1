//! Exhaustive MacWilliams verification over all small codes.

use serde::Serialize;

use super::code::{enumerate_codes, Code, Word};
use super::extension::{exhaustive_extension_oracle, extend_to_monomial};
use super::hom::{weight_preserving_homs, CodeHom, HomBudget};
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// Search limits for [`verify_macwilliams`].
#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    /// Largest code (number of elements) examined.
    pub code_size_cap: usize,
    /// Total candidate generator images over the whole run.
    pub hom_cap: u64,
    /// Largest number of codes enumerated per length.
    pub code_count_cap: usize,
    /// Largest `n!·|U|^n` for which the exhaustive oracle runs.
    pub oracle_cap: u64,
    /// Run the oracle on every instance, not only on failures.
    pub cross_check: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            code_size_cap: 256,
            hom_cap: 1_000_000,
            code_count_cap: 100_000,
            oracle_cap: 1_000_000,
            cross_check: false,
        }
    }
}

/// What a run actually examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub length: usize,
    pub code_size_cap: usize,
    pub codes: usize,
    pub homs: usize,
    pub oracle_runs: usize,
}

/// A weight-preserving isomorphism `M → N` that is not a monomial restriction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub length: usize,
    pub domain: Code,
    pub image: Code,
    pub hom: CodeHom,
}

impl Counterexample {
    pub fn graph(&self) -> Vec<(Word, Word)> {
        self.hom.graph()
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MacWilliamsVerdict {
    HoldsOnScope(Scope),
    Counterexample {
        scope: Scope,
        counterexample: Counterexample,
    },
}

impl MacWilliamsVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, MacWilliamsVerdict::HoldsOnScope(_))
    }

    pub fn scope(&self) -> &Scope {
        match self {
            MacWilliamsVerdict::HoldsOnScope(s) => s,
            MacWilliamsVerdict::Counterexample { scope, .. } => scope,
        }
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            MacWilliamsVerdict::HoldsOnScope(_) => None,
            MacWilliamsVerdict::Counterexample { counterexample, .. } => Some(counterexample),
        }
    }
}

/// Checks every weight-preserving map out of every code `M ≤ R^n` with
/// `|M| ≤ code_size_cap` for extendability. Codes are visited in
/// element-list order; the first failing code yields its least failing map
/// by graph.
pub fn verify_macwilliams(
    ring: &FiniteRing,
    n: usize,
    config: &VerifyConfig,
) -> Result<MacWilliamsVerdict> {
    let mut budget = HomBudget::new(config.hom_cap);
    verify_with_budget(ring, n, config, &mut budget)
}

fn verify_with_budget(
    ring: &FiniteRing,
    n: usize,
    config: &VerifyConfig,
    budget: &mut HomBudget,
) -> Result<MacWilliamsVerdict> {
    let codes = enumerate_codes(ring, n, config.code_size_cap, config.code_count_cap)?;
    let mut scope = Scope {
        length: n,
        code_size_cap: config.code_size_cap,
        codes: codes.len(),
        homs: 0,
        oracle_runs: 0,
    };
    for code in &codes {
        let mut failures = Vec::new();
        for phi in weight_preserving_homs(ring, code, budget)? {
            scope.homs += 1;
            let extension = extend_to_monomial(ring, &phi)?;
            if config.cross_check || extension.is_none() {
                match exhaustive_extension_oracle(ring, &phi, config.oracle_cap) {
                    Ok(oracle) => {
                        scope.oracle_runs += 1;
                        if oracle.is_some() != extension.is_some() {
                            return Err(Error::Inconsistent(format!(
                                "extension algorithm and oracle disagree on {:?}",
                                phi.graph()
                            )));
                        }
                    }
                    Err(Error::CapExceeded { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
            if extension.is_none() {
                failures.push(phi);
            }
        }
        if let Some(hom) = failures.into_iter().min_by_key(CodeHom::graph) {
            return Ok(MacWilliamsVerdict::Counterexample {
                scope,
                counterexample: Counterexample {
                    length: n,
                    domain: code.clone(),
                    image: hom.codomain().clone(),
                    hom,
                },
            });
        }
    }
    Ok(MacWilliamsVerdict::HoldsOnScope(scope))
}

/// First counterexample over lengths `1..=n_max`, sharing one hom budget.
pub fn search_counterexample(
    ring: &FiniteRing,
    n_max: usize,
    config: &VerifyConfig,
) -> Result<Option<Counterexample>> {
    let mut budget = HomBudget::new(config.hom_cap);
    for n in 1..=n_max {
        if let MacWilliamsVerdict::Counterexample { counterexample, .. } =
            verify_with_budget(ring, n, config, &mut budget)?
        {
            return Ok(Some(counterexample));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_ring, local_f2_xy, RingExpr};

    fn config(size: usize) -> VerifyConfig {
        VerifyConfig {
            code_size_cap: size,
            cross_check: true,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn z4_holds_at_length_two() {
        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        let verdict = verify_macwilliams(&z4, 2, &config(16)).unwrap();
        assert!(verdict.holds());
        assert!(verdict.scope().codes > 1);
        assert_eq!(verdict.scope().oracle_runs, verdict.scope().homs);
    }

    #[test]
    fn local_ring_fails_at_length_one() {
        let l = build_ring(&local_f2_xy()).unwrap();
        let verdict = verify_macwilliams(&l, 1, &config(8)).unwrap();
        let cx = verdict.counterexample().unwrap();
        assert_eq!(cx.domain.elements(), &[vec![0], vec![2]]);
        assert_eq!(cx.image.elements(), &[vec![0], vec![4]]);
        assert_eq!(cx.graph(), vec![(vec![0], vec![0]), (vec![2], vec![4])]);
    }

    #[test]
    fn vacuous_scope() {
        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        let verdict = verify_macwilliams(&z4, 1, &config(0)).unwrap();
        assert!(verdict.holds());
        assert_eq!(verdict.scope().codes, 0);
    }

    #[test]
    fn search_stops_at_first_length() {
        let l = build_ring(&local_f2_xy()).unwrap();
        let cx = search_counterexample(&l, 3, &config(8)).unwrap().unwrap();
        assert_eq!(cx.length, 1);
        let z4 = build_ring(&RingExpr::zmod(4)).unwrap();
        assert!(search_counterexample(&z4, 2, &config(16))
            .unwrap()
            .is_none());
        let zero = build_ring(&RingExpr::zmod(1)).unwrap();
        assert!(search_counterexample(&zero, 2, &config(16))
            .unwrap()
            .is_none());
    }
}
