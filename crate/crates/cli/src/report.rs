//! Certificates and their canonical JSON form.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use frobring::codes::{Counterexample, MacWilliamsVerdict, VerifyConfig};
use frobring::decomp::Classification;
use frobring::duality::{DualModule, TorsionFreeCharacter, QZ};
use frobring::injective::PseudoInjectivity;
use frobring::{Elem, FiniteRing};

pub const TOOL: &str = "frobring";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingInfo {
    pub name: String,
    pub order: usize,
    /// The expression in canonical single-line form.
    pub spec: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub semisimple: bool,
    pub quasi_frobenius: bool,
    pub frobenius: bool,
    pub socle_embeds_left: bool,
    pub socle_embeds_right: bool,
    /// `μ_i`: multiplicity of each basic projective.
    pub mu: Vec<usize>,
    /// `ν_i`: multiplicity of each basic simple in the left socle.
    pub nu: Vec<usize>,
    pub nu_right: Vec<usize>,
    pub nakayama: Option<Vec<usize>>,
    pub idempotents: Vec<String>,
    pub basic_idempotents: Vec<String>,
    pub radical_order: usize,
    pub socle_order: usize,
}

impl ClassificationReport {
    pub fn new(ring: &FiniteRing, c: &Classification) -> Self {
        let labels = |xs: &[Elem]| xs.iter().map(|&x| ring.label(x)).collect();
        ClassificationReport {
            semisimple: c.semisimple,
            quasi_frobenius: c.quasi_frobenius,
            frobenius: c.frobenius,
            socle_embeds_left: c.socle_embeds_left,
            socle_embeds_right: c.socle_embeds_right,
            mu: c.mu().to_vec(),
            nu: c.nu().to_vec(),
            nu_right: c.right_profile.multiplicities.clone(),
            nakayama: c.nakayama.clone(),
            idempotents: labels(&c.decomposition.idempotents),
            basic_idempotents: labels(&c.decomposition.basic),
            radical_order: c.radical_order,
            socle_order: c.profile.socle_order,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoInjectivityReport {
    pub left: bool,
    pub right: bool,
    /// `(x, f(x))` labels of a non-multiplication, when one side fails.
    pub witness: Option<Vec<(String, String)>>,
}

impl PseudoInjectivityReport {
    pub fn new(ring: &FiniteRing, left: &PseudoInjectivity, right: &PseudoInjectivity) -> Self {
        let witness = [left, right].into_iter().find_map(|v| match v {
            PseudoInjectivity::Fails { graph, .. } => Some(
                graph
                    .iter()
                    .map(|&(x, y)| (ring.label(x), ring.label(y)))
                    .collect(),
            ),
            PseudoInjectivity::Holds { .. } => None,
        });
        PseudoInjectivityReport {
            left: left.holds(),
            right: right.holds(),
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub present: bool,
    /// Orders of the invariant-factor basis of `(R, +)`.
    pub basis_orders: Vec<u64>,
    /// Basis elements, by label.
    pub basis: Vec<String>,
    pub values_on_basis: Option<Vec<QZ>>,
}

impl CharacterReport {
    pub fn new(ring: &FiniteRing, dual: &DualModule, found: Option<&TorsionFreeCharacter>) -> Self {
        CharacterReport {
            present: found.is_some(),
            basis_orders: dual.basis().orders().to_vec(),
            basis: dual
                .basis()
                .generators()
                .iter()
                .map(|&g| ring.label(g))
                .collect(),
            values_on_basis: found.map(|c| c.character.values_on_generators.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualReport {
    pub order: usize,
    pub exponent: u64,
    pub cyclic_right_module: bool,
}

/// The three statements that coincide for every finite ring, side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub socle_embeds: bool,
    pub torsion_free_character: bool,
    pub dual_cyclic: bool,
    /// MacWilliams verdict restricted to the explored scopes.
    pub macwilliams_on_scope: bool,
}

impl EquivalenceReport {
    pub fn agree(&self) -> bool {
        self.socle_embeds == self.torsion_free_character && self.socle_embeds == self.dual_cyclic
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub length: usize,
    pub domain_generators: Vec<Vec<Elem>>,
    pub image_generators: Vec<Vec<Elem>>,
    /// `(x, φ(x))` for every `x` in the domain.
    pub graph: Vec<(Vec<Elem>, Vec<Elem>)>,
    pub graph_labels: Vec<(Vec<String>, Vec<String>)>,
}

impl CounterexampleReport {
    pub fn new(ring: &FiniteRing, ce: &Counterexample) -> Self {
        let lab = |w: &[Elem]| w.iter().map(|&x| ring.label(x)).collect::<Vec<_>>();
        let graph = ce.graph();
        CounterexampleReport {
            length: ce.length,
            domain_generators: ce.domain.generators().to_vec(),
            image_generators: ce.hom.images_of_generators().to_vec(),
            graph_labels: graph.iter().map(|(x, y)| (lab(x), lab(y))).collect(),
            graph,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScopeReport {
    pub length: usize,
    pub code_size_cap: usize,
    pub hom_cap: u64,
    pub cross_check: bool,
    pub holds: bool,
    pub codes: usize,
    pub homs: usize,
    pub oracle_runs: usize,
    pub counterexample: Option<CounterexampleReport>,
}

impl ScopeReport {
    pub fn new(ring: &FiniteRing, config: &VerifyConfig, v: &MacWilliamsVerdict) -> Self {
        let s = v.scope();
        ScopeReport {
            length: s.length,
            code_size_cap: s.code_size_cap,
            hom_cap: config.hom_cap,
            cross_check: config.cross_check,
            holds: v.holds(),
            codes: s.codes,
            homs: s.homs,
            oracle_runs: s.oracle_runs,
            counterexample: v
                .counterexample()
                .map(|c| CounterexampleReport::new(ring, c)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub tool: String,
    pub tool_version: String,
    pub ring: RingInfo,
    pub classification: ClassificationReport,
    pub pseudo_injective: PseudoInjectivityReport,
    pub character: CharacterReport,
    pub dual: DualReport,
    pub equivalence: EquivalenceReport,
    pub macwilliams: Vec<ScopeReport>,
    /// SHA-256 of the canonical JSON of every other field.
    pub content_hash: String,
}

/// Serializes with keys sorted at every level and no insignificant
/// whitespace.
pub fn canonical_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    // serde_json's default map is ordered by key
    let v: Value = serde_json::to_value(value)?;
    serde_json::to_string(&v)
}

pub fn pretty_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let v: Value = serde_json::to_value(value)?;
    serde_json::to_string_pretty(&v)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl CertificateReport {
    pub fn compute_hash(&self) -> serde_json::Result<String> {
        let mut v = serde_json::to_value(self)?;
        if let Value::Object(map) = &mut v {
            map.remove("content_hash");
        }
        Ok(sha256_hex(serde_json::to_string(&v)?.as_bytes()))
    }

    pub fn seal(mut self) -> serde_json::Result<Self> {
        self.content_hash = self.compute_hash()?;
        Ok(self)
    }

    pub fn hash_is_valid(&self) -> bool {
        self.compute_hash().is_ok_and(|h| h == self.content_hash)
    }

    /// The implications every certificate must satisfy.
    pub fn is_consistent(&self) -> bool {
        let c = &self.classification;
        (!c.frobenius || c.quasi_frobenius)
            && (!c.semisimple || c.frobenius)
            && self.equivalence.agree()
            && self.equivalence.socle_embeds == c.socle_embeds_left
            && self.character.present == self.character.values_on_basis.is_some()
    }

    pub fn to_text(&self) -> String {
        let c = &self.classification;
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "  {k:<26}{v}");
        };
        line(
            "ring",
            format!("{} (order {})", self.ring.name, self.ring.order),
        );
        line("spec", self.ring.spec.clone());
        line("semisimple", c.semisimple.to_string());
        line("quasi_frobenius", c.quasi_frobenius.to_string());
        line("frobenius", c.frobenius.to_string());
        line("socle_embeds_left", c.socle_embeds_left.to_string());
        line("socle_embeds_right", c.socle_embeds_right.to_string());
        line("mu", format!("{:?}", c.mu));
        line("nu", format!("{:?}", c.nu));
        line("nu_right", format!("{:?}", c.nu_right));
        line(
            "nakayama",
            c.nakayama
                .as_ref()
                .map_or("none".into(), |p| format!("{p:?}")),
        );
        line("basic_idempotents", c.basic_idempotents.join(", "));
        line("radical_order", c.radical_order.to_string());
        line("socle_order", c.socle_order.to_string());
        line(
            "pseudo_injective_left",
            self.pseudo_injective.left.to_string(),
        );
        line(
            "pseudo_injective_right",
            self.pseudo_injective.right.to_string(),
        );
        let ch = &self.character;
        line("torsion_free_character", ch.present.to_string());
        if let Some(vals) = &ch.values_on_basis {
            let shown: Vec<String> = ch
                .basis
                .iter()
                .zip(vals)
                .map(|(g, v)| format!("chi({g}) = {v}"))
                .collect();
            line("character_values", shown.join(", "));
        }
        line("dual_cyclic", self.dual.cyclic_right_module.to_string());
        line("dual_exponent", self.dual.exponent.to_string());
        for s in &self.macwilliams {
            line(&format!("macwilliams n={}", s.length), scope_summary(s));
        }
        line("equivalences_agree", self.equivalence.agree().to_string());
        line("tool_version", self.tool_version.clone());
        line("content_hash", self.content_hash.clone());
        out
    }
}

pub fn scope_summary(s: &ScopeReport) -> String {
    let verdict = if s.holds { "holds" } else { "counterexample" };
    format!(
        "{verdict} (codes of size <= {}: {}, maps: {}, oracle runs: {})",
        s.code_size_cap, s.codes, s.homs, s.oracle_runs
    )
}

pub fn counterexample_text(ce: &CounterexampleReport) -> String {
    let word = |w: &[String]| format!("({})", w.join(","));
    let pairs: Vec<String> = ce
        .graph_labels
        .iter()
        .map(|(x, y)| format!("{} -> {}", word(x), word(y)))
        .collect();
    format!("length {}: {}", ce.length, pairs.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commands::{certificate, load_ring, Caps};

    fn z4() -> CertificateReport {
        let caps = Caps {
            order_cap: 4096,
            code_size_cap: 256,
            hom_cap: 1_000_000,
        };
        let loaded = load_ring("zmod 4", "inline", "Z/4", &caps).unwrap();
        certificate(&loaded, &caps, &[1]).unwrap()
    }

    #[test]
    fn hash_covers_verdicts() {
        let cert = z4();
        assert!(cert.hash_is_valid());
        let mut tampered = cert.clone();
        tampered.classification.frobenius = false;
        assert!(!tampered.hash_is_valid());
        let mut renamed = cert;
        renamed.ring.name = "other".into();
        assert!(!renamed.hash_is_valid());
    }

    #[test]
    fn canonical_json_sorts_keys() {
        let text = canonical_json(&z4()).unwrap();
        let c = text.find("\"character\"").unwrap();
        let r = text.find("\"ring\"").unwrap();
        let t = text.find("\"tool\"").unwrap();
        assert!(c < r && r < t);
    }

    #[test]
    fn exit_codes_follow_error_kind() {
        use crate::error::CliError;
        let cap = CliError::Core(frobring::Error::CapExceeded {
            what: "x",
            limit: 1,
        });
        assert_eq!(cap.exit_code(), 2);
        assert_eq!(CliError::Inconsistent("x".into()).exit_code(), 3);
        assert_eq!(
            CliError::Core(frobring::Error::Inconsistent("x".into())).exit_code(),
            3
        );
        assert_eq!(CliError::Usage("x".into()).exit_code(), 1);
    }
}
