//! `logmorph`: run classical and logarithmic morphology on images, and the
//! desk-scale comparison experiments.
//!
//! Exit codes: 0 success, 1 failed property or precondition, 2 usage.

mod selftest;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use logmorph::image::{self, Image};
use logmorph::io::{self, format_sig9};
use logmorph::ops::apply;
use logmorph::study::{self, ExposureConfig, Fig1Config, DEFAULT_DARKENING};
use logmorph::{GreyScale, Implementation, Mode, MorphOp, SfShape};

#[derive(Parser, Debug)]
#[command(
    name = "logmorph",
    version,
    about = "Classical and logarithmic grey-level morphology"
)]
struct Cli {
    /// Grey-scale upper bound M.
    #[arg(long = "M", global = true, default_value = "256", value_parser = parse_scale)]
    m: GreyScale,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Imp {
    Direct,
    Iso,
}

impl From<Imp> for Implementation {
    fn from(i: Imp) -> Self {
        match i {
            Imp::Direct => Implementation::Direct,
            Imp::Iso => Implementation::Isomorphism,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply one operator to an image.
    Morph {
        #[arg(long)]
        op: MorphOp,
        #[arg(long, default_value = "log")]
        mode: Mode,
        #[arg(long = "impl", value_enum, default_value = "iso")]
        imp: Imp,
        /// Structuring function: `hemisphere:r=R[,a=A]` or `flat:r=R`.
        #[arg(long, default_value = "hemisphere:r=2,a=2")]
        sf: SfShape,
        /// Process the complement `M-1-f` and complement the result back.
        #[arg(long)]
        complement: bool,
        /// Rescale the result to 0..=255 before saving instead of rounding
        /// and clamping.
        #[arg(long)]
        rescale: bool,
        /// Directory for the output when OUTPUT is omitted.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        input: PathBuf,
        /// Output file; defaults to `<stem>_<op>_<mode>.<ext>` in --out-dir.
        output: Option<PathBuf>,
    },
    /// Run the eight operators on the synthetic two-bump signal and write
    /// CSV files.
    SimulateFig1 {
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = 512)]
        length: usize,
        #[arg(long, default_value_t = 20.0)]
        radius: f64,
        #[arg(long, default_value_t = 64.0)]
        amplitude: f64,
        #[arg(long = "impl", value_enum, default_value = "iso")]
        imp: Imp,
    },
    /// Compare how classical and logarithmic gradients react to a simulated
    /// exposure change.
    ExposureStudy {
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Darkening constant, LIP-added to the complemented image.
        #[arg(long, default_value_t = DEFAULT_DARKENING)]
        c: f64,
        #[arg(long, default_value = "hemisphere:r=2,a=2")]
        sf: SfShape,
        #[arg(long = "impl", value_enum, default_value = "iso")]
        imp: Imp,
    },
    /// Run the invariant suite on seeded random inputs.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let scale = cli.m;
    match cli.command {
        Command::Morph {
            op,
            mode,
            imp,
            sf,
            complement,
            rescale,
            out_dir,
            input,
            output,
        } => {
            let output = output.unwrap_or_else(|| out_dir.join(default_name(&input, op, mode)));
            let raw = morph(&input, scale, op, mode, imp.into(), &sf, complement)?;
            println!(
                "min={} max={}",
                format_sig9(raw.min()),
                format_sig9(raw.max())
            );
            let shown = if rescale {
                image::rescale_for_display(&raw)?
            } else {
                image::quantize_for_display(&raw)
            };
            create_parent(&output)?;
            io::save_image(&shown, &output)
                .with_context(|| format!("writing {}", output.display()))?;
        }
        Command::SimulateFig1 {
            out_dir,
            length,
            radius,
            amplitude,
            imp,
        } => {
            let cfg = Fig1Config {
                length,
                radius,
                amplitude,
                implementation: imp.into(),
                scale,
                ..Fig1Config::default()
            };
            print!("{}", simulate_fig1(&cfg, &out_dir)?);
        }
        Command::ExposureStudy {
            input,
            out_dir,
            c,
            sf,
            imp,
        } => {
            let cfg = ExposureConfig {
                darkening: c,
                shape: sf,
                implementation: imp.into(),
            };
            print!("{}", exposure_study(&input, scale, &cfg, &out_dir)?);
        }
        Command::Selftest { seed } => {
            let ok = selftest::run(seed, scale, &mut std::io::stdout())?;
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_scale(s: &str) -> Result<GreyScale, String> {
    let m: f64 = s.parse().map_err(|e| format!("{e}"))?;
    GreyScale::new(m).map_err(|e| e.to_string())
}

fn load(path: &Path, scale: GreyScale) -> Result<Image> {
    let img = io::load_image(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(img.with_scale(scale))
}

fn create_parent(path: &Path) -> Result<()> {
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))
        }
        _ => Ok(()),
    }
}

fn stem(input: &Path) -> String {
    input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "image".into())
}

fn default_name(input: &Path, op: MorphOp, mode: Mode) -> String {
    let ext = match input.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("pgm") => "pgm",
        _ => "png",
    };
    format!("{}_{op}_{mode}.{ext}", stem(input))
}

fn morph(
    input: &Path,
    scale: GreyScale,
    op: MorphOp,
    mode: Mode,
    imp: Implementation,
    sf: &SfShape,
    complement: bool,
) -> Result<Image> {
    let f = load(input, scale)?;
    if !complement {
        return Ok(apply(op, mode, &f, sf, imp)?);
    }
    let g = apply(op, mode, &image::complement(&f)?, sf, imp)?;
    let top = scale.m() - 1.0;
    Ok(Image::new(
        g.width(),
        g.height(),
        g.pixels().iter().map(|&v| top - v).collect(),
        scale,
    )?)
}

fn simulate_fig1(cfg: &Fig1Config, out_dir: &Path) -> Result<String> {
    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let run = study::fig1_study(cfg)?;
    io::write_signal_csv(&run.signal, out_dir.join("fig1_signal.csv"))?;
    let mut table = format!("{:<10}{:<11}{:>14}{:>14}\n", "op", "mode", "min", "max");
    for o in &run.outputs {
        io::write_signal_csv(
            &o.result,
            out_dir.join(format!("fig1_{}_{}.csv", o.op, o.mode)),
        )?;
        let _ = writeln!(
            table,
            "{:<10}{:<11}{:>14}{:>14}",
            o.op.name(),
            o.mode.name(),
            format_sig9(o.result.min()),
            format_sig9(o.result.max())
        );
    }
    let (hi, lo) = run.opening_disparity();
    let _ = writeln!(
        table,
        "opening disparity: {} where f > 3M/4, {} where f < M/4",
        format_sig9(hi),
        format_sig9(lo)
    );
    Ok(table)
}

fn exposure_study(
    input: &Path,
    scale: GreyScale,
    cfg: &ExposureConfig,
    out_dir: &Path,
) -> Result<String> {
    let bright = load(input, scale)?;
    if cfg.darkening >= scale.m() {
        bail!("darkening constant must be below M = {}", scale.m());
    }
    let st = study::exposure_study(&bright, cfg)?;
    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let stem = stem(input);
    for (suffix, img) in [
        ("gradient_classical", &st.bright_classical),
        ("gradient_log", &st.bright_log),
        ("dark_gradient_classical", &st.dark_classical),
        ("dark_gradient_log", &st.dark_log),
    ] {
        io::save_image(img, out_dir.join(format!("{stem}_{suffix}.png")))?;
    }
    let report = format!(
        "input: {}\nM: {}\ndarkening c: {}\nstructuring function: {}\nclassical score: {}\nlog score: {}\n",
        input.display(),
        format_sig9(scale.m()),
        format_sig9(cfg.darkening),
        cfg.shape,
        format_sig9(st.classical_score),
        format_sig9(st.log_score),
    );
    fs::write(out_dir.join(format!("{stem}_exposure_report.txt")), &report)?;
    Ok(report)
}
