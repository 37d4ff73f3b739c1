//! The subcommands, each returning the text to print.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use frobring::codes::{search_counterexample, verify_macwilliams, VerifyConfig};
use frobring::decomp::classify;
use frobring::duality::{
    dual_is_cyclic, find_with_classification, is_left_torsion_free, is_right_torsion_free,
    right_torsion_free_via_density, semisimple_character, torsion_free_via_density, DualModule,
};
use frobring::injective::{is_pseudo_injective_left, is_pseudo_injective_right, InjectivityCaps};
use frobring::{build_ring_with_cap, Error, FiniteRing};

use crate::error::{CliError, CliResult};
use crate::parse::{parse_ring_file, to_spec, RingSpecFile};
use crate::report::{
    canonical_json, counterexample_text, pretty_json, scope_summary, sha256_hex, CertificateReport,
    CharacterReport, ClassificationReport, CounterexampleReport, DualReport, EquivalenceReport,
    PseudoInjectivityReport, RingInfo, ScopeReport, TOOL, TOOL_VERSION,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Limits shared by every command.
#[derive(Clone, Debug, Serialize)]
pub struct Caps {
    pub order_cap: usize,
    pub code_size_cap: usize,
    pub hom_cap: u64,
}

impl Caps {
    fn verify_config(&self, cross_check: bool) -> VerifyConfig {
        VerifyConfig {
            code_size_cap: self.code_size_cap,
            hom_cap: self.hom_cap,
            cross_check,
            ..VerifyConfig::default()
        }
    }

    fn injectivity(&self) -> InjectivityCaps {
        InjectivityCaps {
            hom_cap: self.hom_cap,
            ..InjectivityCaps::default()
        }
    }
}

/// A parsed and built ring.
pub struct LoadedRing {
    pub spec: RingSpecFile,
    pub ring: FiniteRing,
    pub name: String,
}

pub fn read_source(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(CliError::io(path))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(CliError::io(path))
}

pub fn load_ring(
    text: &str,
    origin: &str,
    default_name: &str,
    caps: &Caps,
) -> CliResult<LoadedRing> {
    let spec = parse_ring_file(text).map_err(|source| CliError::Parse {
        path: origin.to_string(),
        source,
    })?;
    let ring = build_ring_with_cap(&spec.expr, caps.order_cap)?;
    let name = spec
        .name
        .clone()
        .unwrap_or_else(|| default_name.to_string());
    Ok(LoadedRing { spec, ring, name })
}

/// Every verdict of the certificate, with the consistency gates applied.
pub fn certificate(
    loaded: &LoadedRing,
    caps: &Caps,
    lengths: &[usize],
) -> CliResult<CertificateReport> {
    let ring = &loaded.ring;
    let c = classify(ring)?;
    if !c.is_consistent() {
        return Err(CliError::Inconsistent(
            "classification flags contradict each other".into(),
        ));
    }
    let found = find_with_classification(ring, &c)?;
    let dual = DualModule::new(ring)?;
    let cyclic = dual_is_cyclic(&dual);
    let left = is_pseudo_injective_left(ring, caps.injectivity())?;
    let right = is_pseudo_injective_right(ring, caps.injectivity())?;
    if c.quasi_frobenius != (left.holds() && right.holds()) {
        return Err(CliError::Inconsistent(format!(
            "QF is {} but two-sided pseudo-injectivity is {}",
            c.quasi_frobenius,
            left.holds() && right.holds()
        )));
    }
    let config = caps.verify_config(false);
    let macwilliams = lengths
        .iter()
        .map(|&n| {
            Ok(ScopeReport::new(
                ring,
                &config,
                &verify_macwilliams(ring, n, &config)?,
            ))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let equivalence = EquivalenceReport {
        socle_embeds: c.socle_embeds_left,
        torsion_free_character: found.is_some(),
        dual_cyclic: cyclic,
        macwilliams_on_scope: macwilliams.iter().all(|s| s.holds),
    };
    if !equivalence.agree() {
        return Err(CliError::Inconsistent(format!(
            "socle embeds {}, character {}, dual cyclic {}",
            equivalence.socle_embeds, equivalence.torsion_free_character, equivalence.dual_cyclic
        )));
    }
    if equivalence.socle_embeds && !equivalence.macwilliams_on_scope {
        return Err(CliError::Inconsistent(
            "Frobenius ring has a non-extendable weight-preserving map".into(),
        ));
    }
    let report = CertificateReport {
        tool: TOOL.into(),
        tool_version: TOOL_VERSION.into(),
        ring: RingInfo {
            name: loaded.name.clone(),
            order: ring.order(),
            spec: to_spec(&loaded.spec.expr),
        },
        classification: ClassificationReport::new(ring, &c),
        pseudo_injective: PseudoInjectivityReport::new(ring, &left, &right),
        character: CharacterReport::new(ring, &dual, found.as_ref()),
        dual: DualReport {
            order: dual.order(),
            exponent: dual.exponent(),
            cyclic_right_module: cyclic,
        },
        equivalence,
        macwilliams,
        content_hash: String::new(),
    }
    .seal()?;
    if !report.is_consistent() {
        return Err(CliError::Inconsistent(
            "certificate fails its own invariants".into(),
        ));
    }
    Ok(report)
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map_or("R".into(), |s| s.to_string_lossy().into_owned())
}

fn load_path(path: &Path, caps: &Caps) -> CliResult<LoadedRing> {
    let text = read_source(path)?;
    load_ring(&text, &path.display().to_string(), &stem(path), caps)
}

fn emit<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> CliResult<String> {
    match format {
        Format::Json => Ok(pretty_json(value)? + "\n"),
        Format::Text => Ok(text()),
    }
}

pub fn cmd_classify(
    path: &Path,
    caps: &Caps,
    lengths: &[usize],
    format: Format,
) -> CliResult<String> {
    let loaded = load_path(path, caps)?;
    let report = certificate(&loaded, caps, lengths)?;
    emit(format, &report, || report.to_text())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub tool_version: String,
    pub ring: RingInfo,
    pub scope: ScopeReport,
}

pub fn cmd_verify(
    path: &Path,
    caps: &Caps,
    length: usize,
    cross_check: bool,
    format: Format,
) -> CliResult<String> {
    let loaded = load_path(path, caps)?;
    let config = caps.verify_config(cross_check);
    let verdict = verify_macwilliams(&loaded.ring, length, &config)?;
    let report = VerifyReport {
        tool_version: TOOL_VERSION.into(),
        ring: RingInfo {
            name: loaded.name.clone(),
            order: loaded.ring.order(),
            spec: to_spec(&loaded.spec.expr),
        },
        scope: ScopeReport::new(&loaded.ring, &config, &verdict),
    };
    emit(format, &report, || {
        let mut out = format!(
            "{} (order {}), length {}: {}\n",
            report.ring.name,
            report.ring.order,
            length,
            scope_summary(&report.scope)
        );
        if let Some(ce) = &report.scope.counterexample {
            out += &format!("  {}\n", counterexample_text(ce));
        }
        out
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub tool_version: String,
    pub ring: RingInfo,
    pub max_length: usize,
    pub code_size_cap: usize,
    pub hom_cap: u64,
    pub counterexample: Option<CounterexampleReport>,
}

pub fn cmd_search(
    path: &Path,
    caps: &Caps,
    max_length: usize,
    format: Format,
) -> CliResult<String> {
    let loaded = load_path(path, caps)?;
    let config = caps.verify_config(false);
    let found = search_counterexample(&loaded.ring, max_length, &config)?;
    let report = SearchReport {
        tool_version: TOOL_VERSION.into(),
        ring: RingInfo {
            name: loaded.name.clone(),
            order: loaded.ring.order(),
            spec: to_spec(&loaded.spec.expr),
        },
        max_length,
        code_size_cap: caps.code_size_cap,
        hom_cap: caps.hom_cap,
        counterexample: found
            .as_ref()
            .map(|c| CounterexampleReport::new(&loaded.ring, c)),
    };
    emit(format, &report, || match &report.counterexample {
        Some(ce) => format!(
            "{}: counterexample at {}\n",
            report.ring.name,
            counterexample_text(ce)
        ),
        None => format!(
            "{}: none up to length {max_length} (codes of size <= {})\n",
            report.ring.name, caps.code_size_cap
        ),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCommandReport {
    pub ring: RingInfo,
    pub invariant_factors: Vec<u64>,
    pub basis: Vec<String>,
    pub order: usize,
    pub exponent: u64,
    pub pairing_nondegenerate: bool,
    pub actions_are_module_actions: bool,
    pub cyclic_right_module: bool,
    pub cyclic_left_module: bool,
    /// Characters that generate `R̂` as a right module.
    pub generating_characters: usize,
}

pub fn cmd_dual(path: &Path, caps: &Caps, format: Format) -> CliResult<String> {
    let loaded = load_path(path, caps)?;
    let ring = &loaded.ring;
    let dual = DualModule::new(ring)?;
    let generating = dual
        .characters()
        .filter(|&k| torsion_free_via_density(&dual, k))
        .count();
    let report = DualCommandReport {
        ring: RingInfo {
            name: loaded.name.clone(),
            order: ring.order(),
            spec: to_spec(&loaded.spec.expr),
        },
        invariant_factors: dual.basis().orders().to_vec(),
        basis: dual
            .basis()
            .generators()
            .iter()
            .map(|&g| ring.label(g))
            .collect(),
        order: dual.order(),
        exponent: dual.exponent(),
        pairing_nondegenerate: dual.pairing_is_nondegenerate(),
        actions_are_module_actions: dual.actions_are_module_actions(ring),
        cyclic_right_module: dual_is_cyclic(&dual),
        cyclic_left_module: dual.left_module().cyclic_generator().is_some(),
        generating_characters: generating,
    };
    if report.cyclic_right_module != (generating > 0) {
        return Err(CliError::Inconsistent(
            "cyclic dual without a generating character".into(),
        ));
    }
    emit(format, &report, || {
        let factors: Vec<String> = report
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        format!(
            "{} (order {})\n  group                     {}\n  exponent                  {}\n  \
             pairing_nondegenerate     {}\n  dual_cyclic_right         {}\n  dual_cyclic_left          {}\n  \
             generating_characters     {}\n",
            report.ring.name,
            report.order,
            if factors.is_empty() { "0".into() } else { factors.join(" + ") },
            report.exponent,
            report.pairing_nondegenerate,
            report.cyclic_right_module,
            report.cyclic_left_module,
            report.generating_characters
        )
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterCommandReport {
    pub ring: RingInfo,
    pub character: CharacterReport,
    /// The trace construction, when the ring is given as a product of
    /// matrix rings over fields.
    pub semisimple: Option<SemisimpleReport>,
    /// `(x, χ(x))` for every element, on request.
    pub table: Option<Vec<(String, frobring::duality::QZ)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimpleReport {
    pub values_on_basis: Vec<frobring::duality::QZ>,
    pub left_torsion_free: bool,
    pub right_torsion_free: bool,
}

pub fn cmd_character(path: &Path, caps: &Caps, table: bool, format: Format) -> CliResult<String> {
    let loaded = load_path(path, caps)?;
    let ring = &loaded.ring;
    let c = classify(ring)?;
    let found = find_with_classification(ring, &c)?;
    let dual = DualModule::new(ring)?;
    let semisimple = match semisimple_character(&loaded.spec.expr) {
        Ok(sc) => {
            let sd = DualModule::new(&sc.ring)?;
            let k = sc.index;
            Some(SemisimpleReport {
                values_on_basis: sc.character.values_on_generators.clone(),
                left_torsion_free: is_left_torsion_free(&sc.ring, &sd, k)
                    && torsion_free_via_density(&sd, k),
                right_torsion_free: is_right_torsion_free(&sc.ring, &sd, k)
                    && right_torsion_free_via_density(&sd, k),
            })
        }
        Err(Error::NotInWedderburnForm(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let report = CharacterCommandReport {
        ring: RingInfo {
            name: loaded.name.clone(),
            order: ring.order(),
            spec: to_spec(&loaded.spec.expr),
        },
        character: CharacterReport::new(ring, &dual, found.as_ref()),
        table: match (&found, table) {
            (Some(f), true) => Some(
                ring.elements()
                    .map(|x| (ring.label(x), dual.value(f.index, x)))
                    .collect(),
            ),
            _ => None,
        },
        semisimple,
    };
    emit(format, &report, || {
        let mut out = format!("{} (order {})\n", report.ring.name, report.ring.order);
        let ch = &report.character;
        match &ch.values_on_basis {
            Some(vals) => {
                out += "  left torsion-free character:\n";
                for ((g, d), v) in ch.basis.iter().zip(&ch.basis_orders).zip(vals) {
                    out += &format!("    chi({g}) = {v}    (order {d})\n");
                }
            }
            None => out += "  no left torsion-free character\n",
        }
        if let Some(s) = &report.semisimple {
            let vals: Vec<String> = s.values_on_basis.iter().map(|v| v.to_string()).collect();
            out += &format!(
                "  trace character on basis: [{}] (left torsion-free {}, right torsion-free {})\n",
                vals.join(", "),
                s.left_torsion_free,
                s.right_torsion_free
            );
        }
        if let Some(t) = &report.table {
            for (x, v) in t {
                out += &format!("    {x:>12}  {v}\n");
            }
        }
        out
    })
}

/// One row of the catalog index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub file: String,
    pub name: String,
    pub order: usize,
    pub certificate: String,
    pub input_hash: String,
    pub content_hash: String,
    pub frobenius: bool,
    pub quasi_frobenius: bool,
    pub socle_embeds: bool,
    pub torsion_free_character: bool,
    pub dual_cyclic: bool,
    pub macwilliams_on_scope: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexError {
    pub file: String,
    pub exit_code: i32,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSummary {
    pub rings: usize,
    pub frobenius: usize,
    pub quasi_frobenius_not_frobenius: usize,
    pub neither: usize,
    pub equivalences_agree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogIndex {
    pub tool_version: String,
    pub rings: Vec<IndexEntry>,
    pub summary: IndexSummary,
    pub errors: Vec<IndexError>,
}

/// Counts from one catalog run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogRun {
    pub computed: usize,
    pub skipped: usize,
    pub errors: usize,
    pub first_exit_code: Option<i32>,
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name()
            .map_or("out".into(), |n| n.to_string_lossy())
    ));
    fs::write(&tmp, contents).map_err(CliError::io(&tmp))?;
    fs::rename(&tmp, path).map_err(CliError::io(path))
}

fn input_hash(text: &str, caps: &Caps, lengths: &[usize]) -> String {
    let settings = format!(
        "\n--\ncode_size_cap {} hom_cap {} lengths {lengths:?} version {TOOL_VERSION}",
        caps.code_size_cap, caps.hom_cap
    );
    sha256_hex((text.to_string() + &settings).as_bytes())
}

fn cached_certificate(
    path: &Path,
    hash: &str,
    index: &BTreeMap<String, IndexEntry>,
    file: &str,
) -> Option<CertificateReport> {
    let entry = index.get(file)?;
    if entry.input_hash != hash {
        return None;
    }
    let text = fs::read_to_string(path).ok()?;
    let cert: CertificateReport = serde_json::from_str(&text).ok()?;
    (cert.hash_is_valid() && cert.content_hash == entry.content_hash).then_some(cert)
}

/// Classifies every `*.ring` file in `dir`, writing one certificate per ring
/// and `index.json` into `out`. Files are processed in name order; errors
/// are recorded and the run continues.
pub fn run_catalog(
    dir: &Path,
    out: &Path,
    caps: &Caps,
    lengths: &[usize],
) -> CliResult<(CatalogIndex, CatalogRun)> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(CliError::io(dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "ring"))
        .collect();
    files.sort();
    fs::create_dir_all(out).map_err(CliError::io(out))?;
    let index_path = out.join("index.json");
    let previous: BTreeMap<String, IndexEntry> = fs::read_to_string(&index_path)
        .ok()
        .and_then(|t| serde_json::from_str::<CatalogIndex>(&t).ok())
        .map(|i| i.rings.into_iter().map(|e| (e.file.clone(), e)).collect())
        .unwrap_or_default();
    let mut run = CatalogRun::default();
    let mut rings = Vec::new();
    let mut errors = Vec::new();
    for path in &files {
        let file = path.file_name().unwrap().to_string_lossy().into_owned();
        let cert_name = format!("{}.json", stem(path));
        let cert_path = out.join(&cert_name);
        let result = (|| -> CliResult<(CertificateReport, String, bool)> {
            let text = fs::read_to_string(path).map_err(CliError::io(path))?;
            let hash = input_hash(&text, caps, lengths);
            if let Some(cert) = cached_certificate(&cert_path, &hash, &previous, &file) {
                return Ok((cert, hash, false));
            }
            let loaded = load_ring(&text, &path.display().to_string(), &stem(path), caps)?;
            let cert = certificate(&loaded, caps, lengths)?;
            write_atomic(&cert_path, &(pretty_json(&cert)? + "\n"))?;
            Ok((cert, hash, true))
        })();
        match result {
            Ok((cert, hash, computed)) => {
                if computed {
                    run.computed += 1;
                } else {
                    run.skipped += 1;
                }
                let c = &cert.classification;
                rings.push(IndexEntry {
                    file,
                    name: cert.ring.name.clone(),
                    order: cert.ring.order,
                    certificate: cert_name,
                    input_hash: hash,
                    content_hash: cert.content_hash.clone(),
                    frobenius: c.frobenius,
                    quasi_frobenius: c.quasi_frobenius,
                    socle_embeds: cert.equivalence.socle_embeds,
                    torsion_free_character: cert.equivalence.torsion_free_character,
                    dual_cyclic: cert.equivalence.dual_cyclic,
                    macwilliams_on_scope: cert.equivalence.macwilliams_on_scope,
                });
            }
            Err(e) => {
                run.errors += 1;
                run.first_exit_code.get_or_insert(e.exit_code());
                errors.push(IndexError {
                    file,
                    exit_code: e.exit_code(),
                    message: e.to_string(),
                });
            }
        }
    }
    let summary = IndexSummary {
        rings: rings.len(),
        frobenius: rings.iter().filter(|r| r.frobenius).count(),
        quasi_frobenius_not_frobenius: rings
            .iter()
            .filter(|r| r.quasi_frobenius && !r.frobenius)
            .count(),
        neither: rings.iter().filter(|r| !r.quasi_frobenius).count(),
        equivalences_agree: rings
            .iter()
            .filter(|r| {
                r.socle_embeds == r.torsion_free_character && r.socle_embeds == r.dual_cyclic
            })
            .count(),
    };
    let index = CatalogIndex {
        tool_version: TOOL_VERSION.into(),
        rings,
        summary,
        errors,
    };
    write_atomic(&index_path, &(pretty_json(&index)? + "\n"))?;
    Ok((index, run))
}

pub fn cmd_catalog(
    dir: &Path,
    out: Option<&Path>,
    caps: &Caps,
    lengths: &[usize],
    format: Format,
) -> CliResult<(String, Option<i32>)> {
    let out = out.map_or_else(|| dir.join("certificates"), Path::to_path_buf);
    let (index, run) = run_catalog(dir, &out, caps, lengths)?;
    let text = match format {
        Format::Json => canonical_json(&index)? + "\n",
        Format::Text => {
            let mut s = format!(
                "{} rings: {} computed, {} unchanged, {} errors\n",
                index.rings.len() + index.errors.len(),
                run.computed,
                run.skipped,
                run.errors
            );
            s += &format!(
                "{:<28}{:>6}  {:<10}{:<7}{:<8}{:<10}{:<7}{}\n",
                "ring", "order", "frobenius", "qf", "socle", "character", "cyclic", "macwilliams"
            );
            for r in &index.rings {
                s += &format!(
                    "{:<28}{:>6}  {:<10}{:<7}{:<8}{:<10}{:<7}{}\n",
                    r.name,
                    r.order,
                    r.frobenius,
                    r.quasi_frobenius,
                    r.socle_embeds,
                    r.torsion_free_character,
                    r.dual_cyclic,
                    r.macwilliams_on_scope
                );
            }
            let sm = &index.summary;
            s += &format!(
                "frobenius {}, quasi-frobenius only {}, neither {}\n",
                sm.frobenius, sm.quasi_frobenius_not_frobenius, sm.neither
            );
            for e in &index.errors {
                s += &format!("error: {}: {}\n", e.file, e.message);
            }
            s
        }
    };
    Ok((text, run.first_exit_code))
}
