//! Pseudo-injectivity: every injective map from an ideal into the ring is a
//! multiplication.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::codes::{enumerate_homs, Code, HomBudget, HomFilter};
use crate::error::Result;
use crate::ideal::{left_ideals, LeftIdeal, Side};
use crate::ring::{Elem, FiniteRing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PseudoInjectivity {
    Holds {
        side: Side,
        ideals: usize,
        injective_homs: usize,
    },
    /// `graph` lists `(x, f(x))` for every `x` in the ideal.
    Fails {
        side: Side,
        ideal: LeftIdeal,
        graph: Vec<(Elem, Elem)>,
    },
}

impl PseudoInjectivity {
    pub fn holds(&self) -> bool {
        matches!(self, PseudoInjectivity::Holds { .. })
    }
}

/// Limits for the ideal lattice and the hom enumeration.
#[derive(Clone, Copy, Debug)]
pub struct InjectivityCaps {
    pub ideal_cap: usize,
    pub hom_cap: u64,
}

impl Default for InjectivityCaps {
    fn default() -> Self {
        InjectivityCaps {
            ideal_cap: 10_000,
            hom_cap: 1_000_000,
        }
    }
}

/// Checks every injective `f: I → R` from a left ideal `I` for the form
/// `f(x) = xa`. On failure reports the first failing ideal in element-list
/// order and its least failing map by graph.
pub fn is_pseudo_injective_left(
    ring: &FiniteRing,
    caps: InjectivityCaps,
) -> Result<PseudoInjectivity> {
    check(ring, caps, Side::Left)
}

/// Right-sided version, computed on the opposite ring.
pub fn is_pseudo_injective_right(
    ring: &FiniteRing,
    caps: InjectivityCaps,
) -> Result<PseudoInjectivity> {
    check(&ring.opposite(), caps, Side::Right)
}

fn check(ring: &FiniteRing, caps: InjectivityCaps, side: Side) -> Result<PseudoInjectivity> {
    let ideals = left_ideals(ring, caps.ideal_cap)?;
    let mut budget = HomBudget::new(caps.hom_cap);
    let mut injective_homs = 0;
    let filter = HomFilter {
        generator_ok: &|_, _| true,
        value_ok: &|_, _| true,
    };
    for ideal in &ideals {
        let code =
            Code::from_submodule(ring, 1, ideal.elements().iter().map(|&x| vec![x]).collect());
        let gens: Vec<Elem> = code.generators().iter().map(|g| g[0]).collect();
        let mut least: Option<Vec<Elem>> = None;
        enumerate_homs(
            ring,
            &code,
            1,
            &filter,
            &mut budget,
            &mut |table, images| {
                let values: Vec<Elem> = table.iter().map(|w| w[0]).collect();
                let mut sorted = values.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != values.len() {
                    return ControlFlow::Continue(());
                }
                injective_homs += 1;
                let is_multiplication = ring.elements().any(|a| {
                    gens.iter()
                        .zip(images)
                        .all(|(&g, y)| ring.mul(g, a) == y[0])
                });
                if !is_multiplication && least.as_ref().is_none_or(|l| values < *l) {
                    least = Some(values);
                }
                ControlFlow::Continue(())
            },
        )?;
        if let Some(values) = least {
            let graph = code.elements().iter().map(|x| x[0]).zip(values).collect();
            return Ok(PseudoInjectivity::Fails {
                side,
                ideal: ideal.clone(),
                graph,
            });
        }
    }
    Ok(PseudoInjectivity::Holds {
        side,
        ideals: ideals.len(),
        injective_homs,
    })
}
