//! Input loading, run manifests and atomic output writing.

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use flatcert_core::{CoefficientDomain, IdealPresentation, Polynomial, VariableTable};

/// Provenance block embedded in every JSON artifact.
pub struct RunManifest {
    pub command: Vec<String>,
    pub inputs: Vec<(String, String)>,
    started: Instant,
}

impl RunManifest {
    pub fn new() -> Self {
        RunManifest { command: std::env::args().collect(), inputs: Vec::new(), started: Instant::now() }
    }

    pub fn record_input(&mut self, path: &Path, bytes: &[u8]) {
        let mut h = Sha256::new();
        h.update(bytes);
        let digest: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        self.inputs.push((path.display().to_string(), digest));
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs.iter().map(|(p, d)| json!({"path": p, "sha256": d})).collect::<Vec<_>>(),
            "version": env!("CARGO_PKG_VERSION"),
            "elapsed_seconds": self.started.elapsed().as_secs_f64(),
        })
    }
}

/// Parse a field tag: `Q` or `Fp:<p>`.
pub fn parse_field(tag: &str) -> Result<CoefficientDomain> {
    if tag == "Q" {
        return Ok(CoefficientDomain::Rationals);
    }
    if let Some(p) = tag.strip_prefix("Fp:") {
        let p: u64 = p.parse().context("prime field modulus")?;
        return CoefficientDomain::prime_field(p).map_err(|e| anyhow::anyhow!(e));
    }
    bail!("unknown field tag {tag:?}; expected Q or Fp:<p>")
}

pub fn field_tag(domain: &CoefficientDomain) -> String {
    match domain {
        CoefficientDomain::Rationals => "Q".into(),
        CoefficientDomain::PrimeField(p) => format!("Fp:{p}"),
    }
}

/// An ideal-presentation file: JSON with `variables`, `field` and either
/// `generators` or `elements` (a basis file works as input unchanged).
pub struct LoadedIdeal {
    pub presentation: IdealPresentation,
    pub table: Arc<VariableTable>,
    pub domain: CoefficientDomain,
}

pub fn load_ideal(path: &Path, manifest: &mut RunManifest) -> Result<LoadedIdeal> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    manifest.record_input(path, &bytes);
    let value: Value = serde_json::from_slice(&bytes).context("input is not valid JSON")?;
    let vars: Vec<String> = value
        .get("variables")
        .and_then(|v| v.as_array())
        .context("missing \"variables\" array")?
        .iter()
        .map(|v| v.as_str().map(str::to_string).context("variable names must be strings"))
        .collect::<Result<_>>()?;
    let table = VariableTable::new(vars).map_err(|e| anyhow::anyhow!(e))?;
    let field = value.get("field").and_then(|v| v.as_str()).unwrap_or("Q");
    let domain = parse_field(field)?;
    let gens_value = value
        .get("generators")
        .or_else(|| value.get("elements"))
        .and_then(|v| v.as_array())
        .context("missing \"generators\" (or \"elements\") array")?;
    if gens_value.is_empty() {
        bail!("the generator list is empty");
    }
    let mut gens: Vec<Polynomial> = Vec::with_capacity(gens_value.len());
    for g in gens_value {
        let text = g.as_str().context("generators must be polynomial strings")?;
        gens.push(
            flatcert_core::parse_poly(text, &domain, &table)
                .map_err(|e| anyhow::anyhow!("parsing {text:?}: {e}"))?,
        );
    }
    let presentation = IdealPresentation::new(gens, domain.clone(), table.clone())?;
    Ok(LoadedIdeal { presentation, table, domain })
}

/// Write atomically: temp file in the target directory, then rename.
pub fn write_atomic(path: &Path, content: &str) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let tmp: PathBuf = dir.join(format!(
        ".{}.tmp{}",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("out"),
        std::process::id()
    ));
    std::fs::write(&tmp, content).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

/// Emit a JSON value with the manifest attached, to stdout or `--out`.
pub fn emit_json(value: Value, manifest: &RunManifest, out: Option<&Path>) -> Result<()> {
    let mut value = value;
    if let Value::Object(map) = &mut value {
        map.insert("manifest".into(), manifest.to_json());
    }
    let text = serde_json::to_string_pretty(&value).expect("serializable");
    match out {
        Some(path) => write_atomic(path, &text)?,
        None => println!("{text}"),
    }
    Ok(())
}

pub fn emit_text(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, &format!("{text}\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
