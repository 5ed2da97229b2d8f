use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use trojan_sentinel_core::corpus::{expand_placeholders, write_corpus};
use trojan_sentinel_core::detect::bidi::BidiMode;
use trojan_sentinel_core::oracle::OraclePattern;
use trojan_sentinel_core::render::{annotate, needs_preview, render_line};
use trojan_sentinel_core::scan::config::{resolve_config_path, CONFIG_ENV_VAR};
use trojan_sentinel_core::scan::{decode_file, exit_code, scan_paths, DecodeError, ReportFormat, ScanConfig};
use trojan_sentinel_core::unicode::InvisibleSet;
use trojan_sentinel_core::{CheckId, Severity};

/// Exit status for usage and configuration errors.
const USAGE_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "trojan-sentinel", version, about = "Find source code whose display hides what the compiler reads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scan files and directories and report findings.
    Scan(ScanArgs),
    /// Show each line of a file in logical and displayed order.
    Render { file: PathBuf },
    /// Write the attack and benign fixture corpus to a directory.
    GenCorpus { dir: PathBuf },
    /// Run the regular-expression baseline over one line. Placeholders
    /// such as `{RLO}` or `{U+2067}` are expanded unless --raw is given.
    #[command(hide = true)]
    Oracle {
        line: String,
        #[arg(long)]
        raw: bool,
    },
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Files or directories; defaults to the current directory.
    paths: Vec<PathBuf>,
    #[arg(long, default_value = "human", value_parser = parse_format)]
    format: ReportFormat,
    /// Config file; overrides TROJAN_SENTINEL_CONFIG and discovery.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated check ids to enable.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<CheckId>>,
    #[arg(long, value_name = "strict|ucd")]
    bidi_mode: Option<BidiMode>,
    /// Report every directional control, balanced or not.
    #[arg(long)]
    flag_all_bidi: bool,
    /// Compare identifiers across all scanned files.
    #[arg(long)]
    project_index: bool,
    /// Map a file extension to a language id, e.g. `h=cpp`.
    #[arg(long = "lang", value_name = "EXT=ID", value_parser = parse_lang)]
    langs: Vec<(String, String)>,
    #[arg(long, value_name = "error|warning|info")]
    fail_on: Option<Severity>,
    /// Exit 1 when any file could not be read.
    #[arg(long)]
    strict_io: bool,
    #[arg(long)]
    max_file_bytes: Option<u64>,
    /// Worker threads; defaults to one per CPU.
    #[arg(long)]
    jobs: Option<usize>,
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse()
}

fn parse_lang(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((ext, id)) if !ext.is_empty() && !id.is_empty() => {
            Ok((ext.trim_start_matches('.').to_string(), id.to_string()))
        }
        _ => Err(format!("expected EXT=ID, got `{s}`")),
    }
}

fn load_config(args: &ScanArgs, roots: &[PathBuf]) -> Result<ScanConfig> {
    let env_value = std::env::var(CONFIG_ENV_VAR).ok();
    let path = resolve_config_path(args.config.as_deref(), env_value.as_deref(), &roots[0]);
    let mut cfg = match path {
        Some(p) => ScanConfig::load(&p)?,
        None => ScanConfig::default(),
    };
    if let Some(checks) = &args.checks {
        cfg.checks = Some(checks.iter().copied().collect());
    }
    if let Some(mode) = args.bidi_mode {
        cfg.bidi_mode = mode;
    }
    cfg.flag_all_bidi |= args.flag_all_bidi;
    cfg.project_index |= args.project_index;
    for (ext, id) in &args.langs {
        cfg.languages.insert(ext.clone(), id.clone());
    }
    if let Some(s) = args.fail_on {
        cfg.fail_on = s;
    }
    if let Some(n) = args.max_file_bytes {
        cfg.max_file_bytes = n;
    }
    Ok(cfg)
}

fn scan(args: ScanArgs) -> Result<u8> {
    let roots = if args.paths.is_empty() {
        vec![PathBuf::from(".")]
    } else {
        args.paths.clone()
    };
    let settings = load_config(&args, &roots)?.prepare()?;
    let report = scan_paths(&roots, &settings, args.jobs)?;
    let mut out = std::io::stdout().lock();
    out.write_all(report.format(args.format).as_bytes())?;
    if args.format != ReportFormat::Human {
        writeln!(out)?;
    }
    Ok(exit_code(&report, settings.fail_on, args.strict_io) as u8)
}

fn render(file: &Path) -> Result<u8> {
    let bytes = std::fs::read(file).with_context(|| format!("cannot read {}", file.display()))?;
    let text = match decode_file(&bytes) {
        Ok(d) => d.text,
        Err(DecodeError::Invalid { offset, .. }) => {
            eprintln!("{}: invalid UTF-8 at byte {offset}", file.display());
            return Ok(1);
        }
    };
    let invisibles = InvisibleSet::builtin();
    let mut out = std::io::stdout().lock();
    for line in text.lines() {
        if needs_preview(line, &invisibles) {
            writeln!(out, "logical:  {}", annotate(line, &invisibles))?;
            writeln!(out, "rendered: {}", render_line(line, &invisibles))?;
        } else {
            writeln!(out, "{line}")?;
        }
    }
    Ok(0)
}

fn gen_corpus(dir: &Path) -> Result<u8> {
    let manifest = write_corpus(dir).with_context(|| format!("cannot write corpus to {}", dir.display()))?;
    println!(
        "wrote {} fixtures and {} benign samples to {}",
        manifest.fixtures.len(),
        manifest.benign.len(),
        dir.display()
    );
    Ok(0)
}

fn oracle(line: &str, raw: bool) -> Result<u8> {
    let line = if raw { line.to_string() } else { expand_placeholders(line) };
    if line.contains('\n') {
        bail!("the oracle works on a single line");
    }
    let hit = OraclePattern::shared().try_detect(&line)?;
    println!("{}", if hit { "match" } else { "no match" });
    Ok(u8::from(hit))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Scan(args) => scan(args),
        Command::Render { file } => render(&file),
        Command::GenCorpus { dir } => gen_corpus(&dir),
        Command::Oracle { line, raw } => oracle(&line, raw),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
