//! One function per subcommand.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use chisq_mine::bench::{run_bench, BenchConfig};
use chisq_mine::synth::PRNG_NAME;
use chisq_mine::{
    build_prefix_counts, generate, p_value, scan, scan_threshold_streaming, GeneratorSpec, Kind,
    Variant,
};
use clap::ValueEnum;
use serde_json::json;

use crate::args::{
    BenchArgs, EncodeArgs, GenArgs, GeneratorArgs, Mode, PvalueArgs, ScanArgs, VariantArgs,
};
use crate::encode::{encode_updown, parse_series};
use crate::error::CliError;
use crate::io::{read_model_file, read_string_file, read_text, resolve_model, write_text};
use crate::output::{
    bench_footer, bench_row, output_order, span_row, stats_line, BENCH_HEADER, SCAN_HEADER,
};

pub fn variant(args: &VariantArgs) -> Result<Variant, CliError> {
    let mode = args
        .mode
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let stray = |flag: &str| {
        Err(CliError::Usage(format!(
            "--{flag} does not apply to --mode {mode}"
        )))
    };
    let missing = |flag: &str| Err(CliError::Usage(format!("--mode {mode} requires --{flag}")));
    let (t, alpha, gamma) = (args.t.is_some(), args.alpha.is_some(), args.gamma.is_some());
    match args.mode {
        Mode::Mss if t => stray("t"),
        Mode::Mss | Mode::Topt if alpha => stray("alpha"),
        Mode::Mss | Mode::Topt | Mode::Threshold if gamma => stray("gamma"),
        Mode::Threshold | Mode::Minlen if t => stray("t"),
        Mode::Minlen if alpha => stray("alpha"),
        Mode::Mss => Ok(Variant::Mss),
        Mode::Topt => args
            .t
            .map(|t| Variant::TopT { t })
            .map_or_else(|| missing("t"), Ok),
        Mode::Threshold => args
            .alpha
            .map(|alpha| Variant::Threshold { alpha })
            .map_or_else(|| missing("alpha"), Ok),
        Mode::Minlen => args
            .gamma
            .map(|gamma| Variant::MinLength { gamma })
            .map_or_else(|| missing("gamma"), Ok),
    }
}

fn generator_spec(args: &GeneratorArgs, n: usize) -> Result<GeneratorSpec, CliError> {
    if args.kind == Kind::BiasedBinary && args.p.is_none() {
        return Err(CliError::Usage("--kind biased_binary requires --p".into()));
    }
    if args.model.is_some() && args.kind != Kind::Null {
        return Err(CliError::Usage(format!(
            "--model only applies to --kind null, not {}",
            args.kind
        )));
    }
    let mut spec = GeneratorSpec::new(args.kind, n, args.k, args.seed);
    spec.p = args.p;
    if let Some(path) = &args.model {
        spec = spec.with_model(read_model_file(path)?);
    }
    spec.validate()?;
    Ok(spec)
}

/// Runs `f` against `--out` when given, otherwise against `stdout`.
fn with_output<F>(path: Option<&Path>, stdout: &mut dyn Write, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| CliError::io(p, e))?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush().map_err(|e| CliError::io(p, e))
        }
        None => {
            f(stdout)?;
            Ok(stdout.flush()?)
        }
    }
}

pub fn run_scan(args: &ScanArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let variant = variant(&args.variant)?;
    let oracle = args.variant.oracle;
    let text = read_string_file(&args.input)?;
    let model = resolve_model(&args.model, &text)?;
    let pc = build_prefix_counts(&model.encode(&text)?);
    let k = model.k();
    variant.validate(pc.len())?;

    with_output(args.out.as_deref(), stdout, |w| {
        let ins = match variant {
            // Result sets can be quadratic in n, so rows stream in scan order.
            Variant::Threshold { alpha } => {
                writeln!(w, "{SCAN_HEADER}")?;
                let mut failure = None;
                let ins = scan_threshold_streaming(&pc, &model, alpha, oracle, |mut s| {
                    if failure.is_none() {
                        s.p_value = p_value(s.score, k).ok();
                        if let Err(e) = writeln!(w, "{}", span_row(&s)) {
                            failure = Some(e);
                        }
                    }
                })?;
                if let Some(e) = failure {
                    return Err(e.into());
                }
                ins
            }
            _ => {
                let mut result = scan(&pc, &model, variant, oracle)?.with_p_values(k)?;
                result.spans.sort_by(output_order);
                writeln!(w, "{SCAN_HEADER}")?;
                for s in &result.spans {
                    writeln!(w, "{}", span_row(s))?;
                }
                result.instrumentation
            }
        };
        if args.stats {
            writeln!(w, "{}", stats_line(&ins, &variant, oracle))?;
        }
        Ok(())
    })
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut name = OsString::from(path.as_os_str());
    name.push(".");
    name.push(suffix);
    PathBuf::from(name)
}

/// Writes the string, `<out>.model` and `<out>.meta.json`.
pub fn run_gen(args: &GenArgs) -> Result<(), CliError> {
    let spec = generator_spec(&args.generator, args.n)?;
    let generated = generate(&spec)?;
    let model_path = sibling(&args.out, "model");
    let meta_path = sibling(&args.out, "meta.json");

    let mut text = generated.string.decode(&generated.model);
    text.push('\n');
    write_text(&args.out, &text)?;
    write_text(&model_path, &generated.model.to_string())?;
    let meta = json!({
        "spec": spec,
        "prng": PRNG_NAME,
        "string_file": args.out,
        "model_file": model_path,
        "null_model": generated.model,
    });
    let meta = serde_json::to_string_pretty(&meta).map_err(|e| CliError::Data(e.to_string()))?;
    write_text(&meta_path, &(meta + "\n"))
}

pub fn run_encode(args: &EncodeArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let series = parse_series(&read_text(&args.input)?)?;
    let encoded = encode_updown(&series)?;
    with_output(args.out.as_deref(), stdout, |w| {
        Ok(writeln!(w, "{encoded}")?)
    })
}

pub fn run_bench_command(args: &BenchArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let variant = variant(&args.variant)?;
    let first = args.sizes.first().copied().unwrap_or(1);
    let config = BenchConfig {
        sizes: args.sizes.clone(),
        trials: args.trials,
        generator: generator_spec(&args.generator, first.max(1))?,
        variant,
        oracle: args.variant.oracle,
        seed: args.generator.seed,
    };
    let report = run_bench(&config)?;
    with_output(args.out.as_deref(), stdout, |w| {
        writeln!(w, "{BENCH_HEADER}")?;
        for row in &report.rows {
            writeln!(w, "{}", bench_row(row))?;
        }
        for line in bench_footer(&report, PRNG_NAME) {
            writeln!(w, "{line}")?;
        }
        Ok(())
    })
}

pub fn run_pvalue(args: &PvalueArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let p = p_value(args.chi2, args.k)?;
    writeln!(stdout, "{p:?}")?;
    Ok(stdout.flush()?)
}
