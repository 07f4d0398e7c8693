//! `flatcert`: radicality certification for determinantal ideals and
//! affine Weyl group tables, from one command line.

mod diff;
mod io;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use flatcert_core::certificate::CertificateJson;
use flatcert_core::groebner::{buchberger, BasisFile, Checkpoint, EngineConfig};
use flatcert_core::ideal::{elimination_subset, ideal_equal, ideal_quotient};
use flatcert_core::{
    certify, format_poly, is_groebner_basis, parse_poly, CertifyOptions, DeterminantalIdealSpec,
    Tier,
};
use flatcert_weyl::reduction::{ReductionNode, ReductionStrategy};
use flatcert_weyl::tables::classification_table;
use flatcert_weyl::{
    admissible_set_j, newton_point, reduced_word, reduction_tree, BruhatContext, CartanDatum,
    FrobeniusAction, Side,
};

use io::{emit_json, emit_text, field_tag, load_ideal, RunManifest};

#[derive(Parser)]
#[command(
    name = "flatcert",
    version,
    about = "exact radicality certificates and affine Weyl group tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Clone)]
struct GlobalOpts {
    /// Write the primary artifact here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized sampling; reserved for property-style commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on processed S-pairs before aborting with a resource error.
    #[arg(long, global = true)]
    max_steps: Option<usize>,
    /// Checkpoint file for long basis computations.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Groebner basis computations.
    Gb {
        #[command(subcommand)]
        sub: GbCmd,
    },
    /// Ideal-level operations on presentations.
    Ideal {
        #[command(subcommand)]
        sub: IdealCmd,
    },
    /// Radicality certification pipeline.
    Flatness {
        #[command(subcommand)]
        sub: FlatnessCmd,
    },
    /// Extended affine Weyl group queries.
    Weyl {
        #[command(subcommand)]
        sub: WeylCmd,
    },
    /// Report utilities.
    Report {
        #[command(subcommand)]
        sub: ReportCmd,
    },
}

#[derive(Subcommand)]
enum GbCmd {
    /// Compute the reduced lexicographic basis of an ideal file.
    Compute {
        #[arg(long = "in")]
        input: PathBuf,
        /// Resume from the checkpoint file instead of starting fresh.
        #[arg(long)]
        resume: bool,
    },
    /// Verify that a basis file is a Groebner basis with a valid checksum.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Quotient ideal (I : s).
    Quotient {
        #[arg(long = "in")]
        input: PathBuf,
        /// The divisor polynomial, in the input's variables.
        #[arg(long)]
        by: String,
    },
    /// Equality of two ideals by reduced-basis comparison.
    Equal {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Elimination ideal in the trailing variables from `--keep-from` on.
    Eliminate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        keep_from: String,
    },
}

#[derive(Subcommand)]
enum FlatnessCmd {
    /// Certify J(s, n); exits 0 when radical away from the excluded set,
    /// 3 when inconclusive.
    Run {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TierArg::Required)]
        tier: TierArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Required,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum SigmaArg {
    Split,
    Nonsplit,
}

impl From<SigmaArg> for FrobeniusAction {
    fn from(v: SigmaArg) -> Self {
        match v {
            SigmaArg::Split => FrobeniusAction::Split,
            SigmaArg::Nonsplit => FrobeniusAction::NonSplit,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(v: SideArg) -> Self {
        match v {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Admissible set for a coweight at a level subset.
    Adm {
        /// Coweight, comma-separated integers, e.g. 1,1,0.
        #[arg(long)]
        mu: String,
        /// Level subset of simple reflections, e.g. 0,1,2.
        #[arg(long = "J", default_value = "0,1,2")]
        level: String,
        #[arg(long, value_enum, default_value_t = SigmaArg::Split)]
        sigma: SigmaArg,
    },
    /// Newton point of a word.
    Newton {
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = SigmaArg::Split)]
        sigma: SigmaArg,
    },
    /// Reduction tree of a word.
    Reduce {
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = SigmaArg::Split)]
        sigma: SigmaArg,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
    },
    /// Full classification row of one element.
    Classify {
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = SigmaArg::Split)]
        sigma: SigmaArg,
        #[arg(long = "J", default_value = "0,1,2")]
        level: String,
    },
    /// Preset tables reproducing the published classification.
    Table {
        #[arg(long, value_enum)]
        preset: Preset,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// Rank-3 datum, trivial Frobenius.
    Gu24Split,
    /// Rank-3 datum, fork-swapping Frobenius.
    Gu24Nonsplit,
}

#[derive(Subcommand)]
enum ReportCmd {
    /// Field-level diff of two JSON reports (volatile sections ignored).
    Diff {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn engine_config(global: &GlobalOpts) -> EngineConfig {
    let mut cfg = EngineConfig::default();
    if let Some(steps) = global.max_steps {
        cfg.max_pairs = Some(steps);
    }
    cfg.checkpoint_path = global.checkpoint.clone();
    cfg
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut manifest = RunManifest::new();
    let global = cli.global.clone();
    match cli.command {
        Command::Gb { sub } => run_gb(sub, &global, &mut manifest),
        Command::Ideal { sub } => run_ideal(sub, &global, &mut manifest),
        Command::Flatness { sub } => run_flatness(sub, &global, &mut manifest),
        Command::Weyl { sub } => run_weyl(sub, &global, &mut manifest),
        Command::Report { sub } => run_report(sub, &global, &mut manifest),
    }
}

fn run_gb(cmd: GbCmd, global: &GlobalOpts, manifest: &mut RunManifest) -> Result<ExitCode> {
    match cmd {
        GbCmd::Compute { input, resume } => {
            let loaded = load_ideal(&input, manifest)?;
            let cfg = engine_config(global);
            let computation = if resume {
                let path =
                    global.checkpoint.as_ref().context("--resume requires --checkpoint")?;
                let bytes = std::fs::read(path)
                    .with_context(|| format!("reading checkpoint {}", path.display()))?;
                let checkpoint: Checkpoint =
                    serde_json::from_slice(&bytes).context("invalid checkpoint file")?;
                flatcert_core::groebner::buchberger_resume(&loaded.presentation, &cfg, &checkpoint)
            } else {
                buchberger(&loaded.presentation, &cfg)
            };
            let computation = match computation {
                Ok(c) => c,
                Err(flatcert_core::EngineError::ResourceLimit { processed, checkpoint }) => {
                    eprintln!(
                        "resource limit after {processed} pairs{}",
                        checkpoint
                            .map(|p| format!("; checkpoint saved to {}", p.display()))
                            .unwrap_or_default()
                    );
                    return Ok(ExitCode::from(3));
                }
                Err(e) => return Err(e.into()),
            };
            let file = BasisFile::from_basis(&computation.basis);
            let value = serde_json::to_value(&file).expect("serializable");
            emit_json(value, manifest, global.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        GbCmd::Check { input } => {
            let loaded = load_ideal(&input, manifest)?;
            let elements: Vec<_> = loaded.presentation.generators().to_vec();
            let ok = is_groebner_basis(&elements);
            let bytes = std::fs::read(&input)?;
            let value: Value = serde_json::from_slice(&bytes)?;
            let checksum_ok = match value.get("checksum").and_then(|c| c.as_str()) {
                Some(stored) => {
                    let texts: Vec<String> = elements.iter().map(format_poly).collect();
                    let recomputed = flatcert_core::groebner::checksum_of(
                        &loaded.table.names().join(","),
                        &field_tag(&loaded.domain),
                        &texts,
                    );
                    stored == recomputed
                }
                None => true,
            };
            emit_json(
                json!({"groebner": ok, "checksum_valid": checksum_ok}),
                manifest,
                global.out.as_deref(),
            )?;
            Ok(if ok && checksum_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn run_ideal(cmd: IdealCmd, global: &GlobalOpts, manifest: &mut RunManifest) -> Result<ExitCode> {
    let cfg = engine_config(global);
    match cmd {
        IdealCmd::Quotient { input, by } => {
            let loaded = load_ideal(&input, manifest)?;
            let s = parse_poly(&by, &loaded.domain, &loaded.table)
                .map_err(|e| anyhow::anyhow!("parsing --by: {e}"))?;
            let quotient = ideal_quotient(&loaded.presentation, &s, &cfg)?;
            let file = BasisFile::from_basis(&quotient.quotient_basis);
            emit_json(serde_json::to_value(&file)?, manifest, global.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        IdealCmd::Equal { a, b } => {
            let la = load_ideal(&a, manifest)?;
            let lb = load_ideal(&b, manifest)?;
            let equal = ideal_equal(&la.presentation, &lb.presentation, &cfg)?;
            emit_json(json!({ "equal": equal }), manifest, global.out.as_deref())?;
            Ok(if equal { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        IdealCmd::Eliminate { input, keep_from } => {
            let loaded = load_ideal(&input, manifest)?;
            let k = loaded
                .table
                .index_of(&keep_from)
                .with_context(|| format!("unknown variable {keep_from:?}"))?;
            let basis = loaded.presentation.groebner_basis(&cfg)?;
            let subset = elimination_subset(&basis, k);
            let value = json!({
                "variables": loaded.table.names(),
                "field": field_tag(&loaded.domain),
                "keep_from": keep_from,
                "elements": subset.iter().map(format_poly).collect::<Vec<_>>(),
            });
            emit_json(value, manifest, global.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_flatness(
    cmd: FlatnessCmd,
    global: &GlobalOpts,
    manifest: &mut RunManifest,
) -> Result<ExitCode> {
    match cmd {
        FlatnessCmd::Run { s, n, tier } => {
            let spec = DeterminantalIdealSpec::new(s, n).map_err(|e| anyhow::anyhow!(e))?;
            let options = CertifyOptions {
                tier: match tier {
                    TierArg::Required => Tier::Required,
                    TierArg::Extended => Tier::Extended,
                },
                engine: engine_config(global),
            };
            let cert = certify(&spec, &options);
            let code = cert.verdict.exit_code();
            match global.format {
                Format::Json => emit_json(cert.to_json(), manifest, global.out.as_deref())?,
                Format::Text => {
                    let mut lines =
                        vec![format!("{}: {}", cert.ideal_label, cert.verdict.label())];
                    lines.push(format!(
                        "excluded primes: {:?}",
                        cert.excluded_primes.iter().collect::<Vec<_>>()
                    ));
                    for step in &cert.chain {
                        let kind = match &step.kind {
                            flatcert_core::ChainStepKind::Empty => "empty".to_string(),
                            flatcert_core::ChainStepKind::Linear { leading_coeff, .. } => {
                                format!("linear, lc = {}", format_poly(leading_coeff))
                            }
                            flatcert_core::ChainStepKind::Quadratic { leading_coeff, .. } => {
                                format!("quadratic, lc = {}", format_poly(leading_coeff))
                            }
                        };
                        lines.push(format!("  {:<5} {kind}", step.var_name));
                    }
                    emit_text(&lines.join("\n"), global.out.as_deref())?;
                }
            }
            Ok(ExitCode::from(code as u8))
        }
    }
}

fn parse_word(text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<usize>().context("word letters are reflection indices"))
        .collect()
}

fn parse_level(text: &str) -> Result<BTreeSet<usize>> {
    Ok(parse_word(text)?.into_iter().collect())
}

fn parse_mu(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().context("coweight coordinates are integers"))
        .collect()
}

fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("")
    }
}

fn run_weyl(cmd: WeylCmd, global: &GlobalOpts, manifest: &mut RunManifest) -> Result<ExitCode> {
    let datum = CartanDatum::affine_b(3).map_err(|e| anyhow::anyhow!(e.to_string()))?;
    match cmd {
        WeylCmd::Adm { mu, level, sigma: _ } => {
            let mu = parse_mu(&mu)?;
            if mu.len() != datum.rank() {
                bail!("the coweight must have {} coordinates", datum.rank());
            }
            let level = parse_level(&level)?;
            let mut ctx = BruhatContext::new(datum.clone());
            let adm = admissible_set_j(&mut ctx, &mu, &level);
            let words: Vec<Vec<usize>> = adm.iter().map(|w| reduced_word(&datum, w)).collect();
            match global.format {
                Format::Json => {
                    let rows: Vec<Value> = words
                        .iter()
                        .map(|w| {
                            json!({
                                "element": word_string(w),
                                "word": w.iter().map(|&i| i as u64).collect::<Vec<_>>(),
                                "length": w.len() as u64,
                            })
                        })
                        .collect();
                    emit_json(
                        json!({"count": rows.len(), "elements": rows}),
                        manifest,
                        global.out.as_deref(),
                    )?;
                }
                Format::Text => {
                    let lines: Vec<String> = words.iter().map(|w| word_string(w)).collect();
                    emit_text(&lines.join("\n"), global.out.as_deref())?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        WeylCmd::Newton { word, sigma } => {
            let word = parse_word(&word)?;
            let w = flatcert_weyl::from_word(&datum, &word);
            let nu = newton_point(&datum, &w, sigma.into())
                .map_err(|e| anyhow::anyhow!(e.to_string()))?;
            match global.format {
                Format::Json => emit_json(
                    json!({
                        "element": word_string(&word),
                        "newton": nu.to_string(),
                        "straight": flatcert_weyl::is_sigma_straight(&datum, &w, sigma.into())
                            .map_err(|e| anyhow::anyhow!(e.to_string()))?,
                        "length": datum.length(&w),
                    }),
                    manifest,
                    global.out.as_deref(),
                )?,
                Format::Text => emit_text(&nu.to_string(), global.out.as_deref())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        WeylCmd::Reduce { word, sigma, side } => {
            let word = parse_word(&word)?;
            let w = flatcert_weyl::from_word(&datum, &word);
            let strategy = ReductionStrategy { side: side.into(), ..Default::default() };
            let tree = reduction_tree(&datum, &w, sigma.into(), &strategy)
                .map_err(|e| anyhow::anyhow!(e.to_string()))?;
            match global.format {
                Format::Json => {
                    emit_json(render_tree(&datum, &tree), manifest, global.out.as_deref())?
                }
                Format::Text => {
                    emit_text(&render_tree_text(&datum, &tree), global.out.as_deref())?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        WeylCmd::Classify { word, sigma, level } => {
            let word = parse_word(&word)?;
            let level = parse_level(&level)?;
            let w = flatcert_weyl::from_word(&datum, &word);
            let row = flatcert_weyl::tables::classification_row(
                &datum,
                &w,
                &level,
                sigma.into(),
                &ReductionStrategy::default(),
            );
            let table = flatcert_weyl::tables::ClassificationTable {
                sigma: sigma.into(),
                mu: vec![],
                level,
                rows: vec![row],
            };
            match global.format {
                Format::Json => emit_json(table.to_json(), manifest, global.out.as_deref())?,
                Format::Text => emit_text(&table.to_text(), global.out.as_deref())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        WeylCmd::Table { preset } => {
            let (sigma, label) = match preset {
                Preset::Gu24Split => (FrobeniusAction::Split, "gu24-split"),
                Preset::Gu24Nonsplit => (FrobeniusAction::NonSplit, "gu24-nonsplit"),
            };
            // Presets fix inputs only; all table content is computed.
            let level: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
            let table = classification_table(
                &datum,
                &[1, 1, 0],
                &level,
                sigma,
                &ReductionStrategy::default(),
            );
            match global.format {
                Format::Json => {
                    let mut value = table.to_json();
                    if let Value::Object(map) = &mut value {
                        map.insert("preset".into(), json!(label));
                    }
                    emit_json(value, manifest, global.out.as_deref())?;
                }
                Format::Text => emit_text(&table.to_text(), global.out.as_deref())?,
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn render_tree(datum: &CartanDatum, tree: &flatcert_weyl::ReductionTree) -> Value {
    fn node_value(datum: &CartanDatum, node: &ReductionNode) -> Value {
        match node {
            ReductionNode::Leaf(leaf) => json!({
                "kind": "leaf",
                "element": word_string(&reduced_word(datum, &leaf.elem)),
                "length": leaf.length,
                "newton": leaf.newton.to_string(),
                "straight": leaf.straight,
                "sigma_coxeter": leaf.sigma_coxeter,
                "minimal": leaf.minimality.label(),
                "finite_support": leaf.finite_support,
                "nonempty": leaf.nonempty,
            }),
            ReductionNode::Conjugate { conjugator, result, child } => json!({
                "kind": "conjugate",
                "by": conjugator,
                "result": word_string(&reduced_word(datum, result)),
                "child": node_value(datum, child),
            }),
            ReductionNode::Split { conjugator, open_elem, open_alt, closed_elem, open, closed } => {
                json!({
                    "kind": "split",
                    "by": conjugator,
                    "open": word_string(&reduced_word(datum, open_elem)),
                    "open_alt": word_string(&reduced_word(datum, open_alt)),
                    "closed": word_string(&reduced_word(datum, closed_elem)),
                    "open_child": node_value(datum, open),
                    "closed_child": node_value(datum, closed),
                })
            }
        }
    }
    let main = tree.main_leaf();
    json!({
        "root": word_string(&reduced_word(datum, &tree.root)),
        "side": tree.side.to_string(),
        "main_leaf": word_string(&reduced_word(datum, &main.report.elem)),
        "affine_dim": main.affine_dim,
        "tree": node_value(datum, &tree.node),
    })
}

fn render_tree_text(datum: &CartanDatum, tree: &flatcert_weyl::ReductionTree) -> String {
    fn walk(datum: &CartanDatum, node: &ReductionNode, indent: usize, lines: &mut Vec<String>) {
        let pad = "  ".repeat(indent);
        match node {
            ReductionNode::Leaf(leaf) => lines.push(format!(
                "{pad}leaf {} newton {} {}",
                word_string(&reduced_word(datum, &leaf.elem)),
                leaf.newton,
                if leaf.nonempty { "nonempty" } else { "empty" },
            )),
            ReductionNode::Conjugate { conjugator, result, child } => {
                lines.push(format!(
                    "{pad}conjugate by s{conjugator} -> {}",
                    word_string(&reduced_word(datum, result))
                ));
                walk(datum, child, indent, lines);
            }
            ReductionNode::Split { conjugator, open_elem, closed_elem, open, closed, .. } => {
                lines.push(format!(
                    "{pad}split at s{conjugator}: closed {} / open {}",
                    word_string(&reduced_word(datum, closed_elem)),
                    word_string(&reduced_word(datum, open_elem)),
                ));
                walk(datum, closed, indent + 1, lines);
                walk(datum, open, indent + 1, lines);
            }
        }
    }
    let mut lines = vec![format!("root {}", word_string(&reduced_word(datum, &tree.root)))];
    walk(&datum, &tree.node, 1, &mut lines);
    lines.join("\n")
}

fn run_report(cmd: ReportCmd, global: &GlobalOpts, manifest: &mut RunManifest) -> Result<ExitCode> {
    match cmd {
        ReportCmd::Diff { a, b } => {
            let bytes_a = std::fs::read(&a).with_context(|| format!("reading {}", a.display()))?;
            let bytes_b = std::fs::read(&b).with_context(|| format!("reading {}", b.display()))?;
            manifest.record_input(&a, &bytes_a);
            manifest.record_input(&b, &bytes_b);
            let va: Value = serde_json::from_slice(&bytes_a).context("left report is not JSON")?;
            let vb: Value = serde_json::from_slice(&bytes_b).context("right report is not JSON")?;
            let diffs = diff::diff_reports(&va, &vb);
            let rows: Vec<Value> = diffs
                .iter()
                .map(|d| json!({"path": d.path, "left": d.left, "right": d.right}))
                .collect();
            emit_json(
                json!({"identical": diffs.is_empty(), "differences": rows}),
                manifest,
                global.out.as_deref(),
            )?;
            Ok(if diffs.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
