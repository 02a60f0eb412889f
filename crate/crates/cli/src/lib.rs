//! Command-line front end: checks, interpolants, decompositions and graph
//! samples of polynomial functions, written as CSV with a JSON manifest.

pub mod config;
pub mod error;
pub mod output;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use frechet_core::explore::{parameter_samples, render_decimal};
use frechet_core::interp::default_box;
use frechet_core::poly::{parse_poly, parse_scalar, parse_scalar_list};
use frechet_core::sample::Lcg;
use frechet_core::scalar::{is_squarefree, Interval};
use frechet_core::shear::field_roots;
use frechet_core::{
    bivariate_jacobian, build_interpolant, check_integer_extension, check_rational_refinement, coverage_fraction,
    fixed_step_diff, growth_table, image_cloud, sample_graph, shear_decompose, slice_polynomial, variable_step_diff,
    GridSpec, PointCloud, QuadScalar, Rect, WitnessModel,
};

pub use error::CliError;
use output::{sha256_hex, Csv, Manifest};

const SUBCOMMANDS: &[&str] = &["check-frechet", "interpolate", "decompose", "explore", "growth", "image"];

#[derive(Debug, Parser)]
#[command(name = "frechet", version, about = "Sample and verify polynomial functions over Q(sqrt(d))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// CSV destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Manifest destination; defaults to `<out>.manifest.json`, or standard
    /// error when writing CSV to standard output.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Square-free d >= 2 selecting the field Q(sqrt(d)).
    #[arg(long, default_value_t = 2)]
    field: u32,
}

#[derive(Debug, Args)]
struct GridArgs {
    /// Base point a, comma-separated; the origin when absent.
    #[arg(long)]
    base: Option<String>,
    /// Steps h_1..h_{n+1}, comma-separated and nonzero.
    #[arg(long)]
    steps: String,
    /// Directions v_1..v_{n+1}, `;`-separated vectors of comma-separated
    /// coordinates. Defaults to e_1..e_n followed by e_axis.
    #[arg(long)]
    dirs: Option<String>,
    /// Selected axis s (1-based).
    #[arg(long, default_value_t = 1)]
    axis: usize,
    /// Degree bound m; the model's declared order when absent.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the (m+1)-th difference on seeded sample pairs.
    #[command(name = "check-frechet", args_override_self = true)]
    CheckFrechet {
        #[arg(long)]
        model: String,
        /// m; the model's declared order when absent.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Height bound for sampled coordinates.
        #[arg(long, default_value_t = 5)]
        height: u32,
        /// Use m+1 distinct steps instead of one repeated step.
        #[arg(long)]
        variable: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Build the grid interpolant and check its integer and rational extensions.
    #[command(args_override_self = true)]
    Interpolate {
        #[arg(long)]
        model: String,
        #[command(flatten)]
        grid: GridArgs,
        /// Margin B of the integer box [-B, m+B].
        #[arg(long = "box", default_value_t = 4)]
        margin: i64,
        /// Step denominators p_1..p_{n+1}; all 2 when absent.
        #[arg(long)]
        denominators: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Shear-decompose a bivariate polynomial.
    #[command(args_override_self = true)]
    Decompose {
        /// Polynomial in x and y.
        #[arg(long)]
        poly: String,
        /// Degree bound m; the largest per-variable degree when absent.
        #[arg(long)]
        m: Option<usize>,
        /// Also report the slice polynomial at this alpha.
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Sample the graph over a window and measure rectangle coverage.
    #[command(args_override_self = true)]
    Explore {
        #[arg(long)]
        model: String,
        /// `lo,hi` per axis, `;`-separated.
        #[arg(long)]
        window: String,
        #[arg(long)]
        height: u64,
        /// `x_lo,x_hi,y_lo,y_hi` for coverage of (x_1, f).
        #[arg(long)]
        rect: Option<String>,
        #[arg(long, default_value_t = 50)]
        resolution: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate sup |f| over a window for increasing height bounds.
    #[command(args_override_self = true)]
    Growth {
        #[arg(long)]
        model: String,
        #[arg(long)]
        window: String,
        /// Strictly increasing height bounds, comma-separated.
        #[arg(long)]
        heights: String,
        #[command(flatten)]
        output: Output,
    },
    /// Image of parameter samples under t -> (a + sum t_k v_k, P(t)).
    #[command(args_override_self = true)]
    Image {
        #[arg(long)]
        model: String,
        #[command(flatten)]
        grid: GridArgs,
        /// `lo,hi` for every parameter coordinate.
        #[arg(long, default_value = "-1,1")]
        window: String,
        /// Height bound for parameter coordinates.
        #[arg(long, default_value_t = 1)]
        height: u64,
        #[command(flatten)]
        output: Output,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 1 when a check fails, 2 on usage errors.
pub fn run(args: Vec<String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let args = match config::merge_config(args, SUBCOMMANDS) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

struct Report {
    csv: Csv,
    model: Option<String>,
    parameters: BTreeMap<String, String>,
    results: BTreeMap<String, Value>,
    /// Set when a check failed; outputs are still written.
    failure: Option<String>,
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let (name, output, report) = match command {
        Command::CheckFrechet { model, order, samples, seed, height, variable, output } => {
            let r = check_frechet_cmd(&model, order, samples, seed, height, variable, output.field)?;
            ("check-frechet", output, r)
        }
        Command::Interpolate { model, grid, margin, denominators, output } => {
            let r = interpolate_cmd(&model, &grid, margin, denominators.as_deref(), output.field)?;
            ("interpolate", output, r)
        }
        Command::Decompose { poly, m, alpha, output } => {
            let r = decompose_cmd(&poly, m, alpha.as_deref(), output.field, stderr)?;
            ("decompose", output, r)
        }
        Command::Explore { model, window, height, rect, resolution, output } => {
            let r = explore_cmd(&model, &window, height, rect.as_deref(), resolution, output.field)?;
            ("explore", output, r)
        }
        Command::Growth { model, window, heights, output } => {
            let r = growth_cmd(&model, &window, &heights, output.field)?;
            ("growth", output, r)
        }
        Command::Image { model, grid, window, height, output } => {
            let r = image_cmd(&model, &grid, &window, height, output.field)?;
            ("image", output, r)
        }
    };
    emit(name, &output, report, stdout, stderr)
}

fn emit(name: &str, output: &Output, report: Report, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let csv = report.csv.as_str();
    let mut parameters = report.parameters;
    parameters.insert("field".into(), output.field.to_string());
    let manifest = Manifest {
        subcommand: name.to_string(),
        model: report.model,
        parameters,
        output_rows: report.csv.rows(),
        output_sha256: sha256_hex(csv.as_bytes()),
        results: report.results,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    match &output.out {
        Some(path) => fs::write(path, csv).map_err(|e| CliError::usage("--out", format!("{}: {e}", path.display())))?,
        None => stdout.write_all(csv.as_bytes()).map_err(|e| CliError::usage("--out", e))?,
    }
    let manifest_path = output.manifest.clone().or_else(|| {
        output.out.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(".manifest.json");
            PathBuf::from(s)
        })
    });
    match manifest_path {
        Some(path) => fs::write(&path, manifest.to_json())
            .map_err(|e| CliError::usage("--manifest", format!("{}: {e}", path.display())))?,
        None => stderr.write_all(manifest.to_json().as_bytes()).map_err(|e| CliError::usage("--manifest", e))?,
    }
    match report.failure {
        Some(msg) => Err(CliError::Verification(msg)),
        None => Ok(()),
    }
}

fn check_field(d: u32) -> Result<u32, CliError> {
    if is_squarefree(d as u64) {
        Ok(d)
    } else {
        Err(CliError::usage("--field", format!("{d} is not a square-free integer >= 2")))
    }
}

fn parse_model(text: &str) -> Result<WitnessModel, CliError> {
    WitnessModel::parse(text).map_err(|e| CliError::usage("--model", e))
}

fn parse_points(flag: &str, text: &str) -> Result<Vec<QuadScalar>, CliError> {
    parse_scalar_list(text).map_err(|e| CliError::usage(flag, e))
}

fn parse_ints<T: std::str::FromStr>(flag: &str, text: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|_| CliError::usage(flag, format!("'{}' is not an integer", s.trim()))))
        .collect()
}

fn parse_interval(flag: &str, text: &str) -> Result<Interval, CliError> {
    match parse_points(flag, text)?.as_slice() {
        [lo, hi] => Interval::new(lo.clone(), hi.clone()).map_err(|e| CliError::usage(flag, e)),
        _ => Err(CliError::usage(flag, format!("expected lo,hi but found '{text}'"))),
    }
}

fn parse_windows(flag: &str, text: &str, n: usize) -> Result<Vec<Interval>, CliError> {
    let windows = text.split(';').map(|w| parse_interval(flag, w)).collect::<Result<Vec<_>, _>>()?;
    if windows.len() != n {
        return Err(CliError::usage(flag, format!("model has {n} variables but {} windows were given", windows.len())));
    }
    Ok(windows)
}

fn decimal_row(points: &[QuadScalar]) -> Vec<String> {
    points.iter().map(render_decimal).collect()
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn check_frechet_cmd(
    model: &str,
    order: Option<usize>,
    samples: usize,
    seed: u64,
    height: u32,
    variable: bool,
    d: u32,
) -> Result<Report, CliError> {
    let d = check_field(d)?;
    let f = parse_model(model)?;
    if samples == 0 {
        return Err(CliError::usage("--samples", "at least one sample is required"));
    }
    if height == 0 {
        return Err(CliError::usage("--height", "height bound must be at least 1"));
    }
    let n = f.nvars();
    let m = order.unwrap_or_else(|| f.declared_order());
    let mut rng = Lcg::new(seed);
    let nsteps = if variable { m + 1 } else { 1 };
    let mut header = vec!["index".to_string()];
    header.extend(numbered("x", n));
    for j in 1..=nsteps {
        header.extend(numbered(&if variable { format!("h{j}_") } else { "h".into() }, n));
    }
    header.push("difference".into());
    let mut csv = Csv::new(&header);
    let tuples = if variable {
        rng.step_tuples(samples, n, m + 1, height, d)
    } else {
        rng.frechet_pairs(samples, n, height, d).into_iter().map(|(x, h)| (x, vec![h])).collect()
    };
    let mut first_violation = None;
    for (i, (x, steps)) in tuples.iter().enumerate() {
        let value = if variable { variable_step_diff(&f, x, steps)? } else { fixed_step_diff(&f, x, &steps[0], m + 1)? };
        if !value.is_zero() && first_violation.is_none() {
            first_violation = Some((i, value.to_string()));
        }
        let mut row = vec![i.to_string()];
        row.extend(decimal_row(x));
        for h in steps {
            row.extend(decimal_row(h));
        }
        row.push(render_decimal(&value));
        csv.row(&row);
    }
    let mut results = BTreeMap::new();
    results.insert("order".into(), json!(m + 1));
    results.insert("tested_pairs".into(), json!(tuples.len()));
    results.insert(
        "first_violation".into(),
        first_violation.as_ref().map_or(Value::Null, |(i, v)| json!({"index": i, "value": v})),
    );
    let failure = first_violation.map(|(i, v)| format!("difference of order {} is {v} at sample {i}", m + 1));
    Ok(Report {
        csv,
        model: Some(f.to_string()),
        parameters: params(&[
            ("order", m.to_string()),
            ("samples", samples.to_string()),
            ("seed", seed.to_string()),
            ("height", height.to_string()),
            ("variable", variable.to_string()),
        ]),
        results,
        failure,
    })
}

fn build_grid(f: &WitnessModel, grid: &GridArgs) -> Result<GridSpec, CliError> {
    let n = f.nvars();
    let m = grid.m.unwrap_or_else(|| f.declared_order());
    let a = match &grid.base {
        Some(text) => parse_points("--base", text)?,
        None => vec![QuadScalar::zero(); n],
    };
    if a.len() != n {
        return Err(CliError::usage("--base", format!("expected {n} coordinates, found {}", a.len())));
    }
    let steps = parse_points("--steps", &grid.steps)?;
    if steps.len() != n + 1 {
        return Err(CliError::usage("--steps", format!("expected {} steps, found {}", n + 1, steps.len())));
    }
    if steps.iter().any(QuadScalar::is_zero) {
        return Err(CliError::usage("--steps", "steps must be nonzero"));
    }
    if grid.axis == 0 || grid.axis > n {
        return Err(CliError::usage("--axis", format!("axis must lie in 1..={n}")));
    }
    match &grid.dirs {
        None => GridSpec::coordinate_frame(a, steps, grid.axis - 1, m).map_err(|e| CliError::usage("--axis", e)),
        Some(text) => {
            let dirs = text.split(';').map(|v| parse_points("--dirs", v)).collect::<Result<Vec<_>, _>>()?;
            GridSpec::new(a, steps, dirs, m).map_err(|e| CliError::usage("--dirs", e))
        }
    }
}

fn grid_params(g: &GridSpec, axis: usize) -> Vec<(&'static str, String)> {
    let join = |v: &[QuadScalar]| v.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(",");
    vec![
        ("m", g.m().to_string()),
        ("base", join(g.a())),
        ("steps", join(g.steps())),
        ("dirs", g.dirs().iter().map(|v| join(v)).collect::<Vec<_>>().join(";")),
        ("axis", axis.to_string()),
    ]
}

fn interpolate_cmd(model: &str, grid: &GridArgs, margin: i64, denominators: Option<&str>, d: u32) -> Result<Report, CliError> {
    check_field(d)?;
    let f = parse_model(model)?;
    let g = build_grid(&f, grid)?;
    let k = g.n() + 1;
    if margin < 0 {
        return Err(CliError::usage("--box", "margin must be non-negative"));
    }
    let dens: Vec<i64> = match denominators {
        Some(text) => parse_ints("--denominators", text)?,
        None => vec![2; k],
    };
    if dens.len() != k || dens.contains(&0) {
        return Err(CliError::usage("--denominators", format!("expected {k} nonzero integers")));
    }
    let p = build_interpolant(&f, &g)?;
    let bounds = default_box(&g, margin);
    let ext = check_integer_extension(&p, &f, &g, &bounds)?;
    let refined = check_rational_refinement(&f, &g, &dens)?;

    let mut header = numbered("e", k);
    header.push("coefficient".into());
    header.push("exact".into());
    let mut csv = Csv::new(&header);
    for (e, c) in p.terms() {
        let mut row: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        row.push(render_decimal(c));
        row.push(c.to_string());
        csv.row(&row);
    }
    let mut results = BTreeMap::new();
    results.insert("interpolant".into(), json!(p.to_string()));
    results.insert("integer_extension".into(), json!({"checked": ext.checked, "counterexample": ext.counterexample}));
    results.insert("rational_refinement".into(), json!(refined));
    let failure = match (&ext.counterexample, refined) {
        (Some(i), _) => Some(format!("interpolant differs from the model at grid index {i:?}")),
        (None, false) => Some("refined interpolant differs from the original".to_string()),
        (None, true) => None,
    };
    let mut ps = grid_params(&g, grid.axis);
    ps.push(("box", margin.to_string()));
    ps.push(("denominators", dens.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")));
    Ok(Report { csv, model: Some(f.to_string()), parameters: params(&ps), results, failure })
}

fn decompose_cmd(poly: &str, m: Option<usize>, alpha: Option<&str>, d: u32, stderr: &mut dyn Write) -> Result<Report, CliError> {
    let d = check_field(d)?;
    let p = parse_poly(poly, Some(2)).map_err(|e| CliError::usage("--poly", e))?;
    let m = m.unwrap_or_else(|| p.trimmed().maxdeg());
    let dec = shear_decompose(&p, m).map_err(|e| CliError::usage("--m", e))?;
    let mut csv = Csv::new(&["i", "A_i"]);
    for (i, a) in dec.coeffs().iter().enumerate() {
        csv.row(&[i.to_string(), a.to_string()]);
    }
    // Printed with the conventional -1 for the zero polynomial.
    let n = dec.leading_index().map_or(-1, |n| n as i64);
    let mut results = BTreeMap::new();
    results.insert("leading_index".into(), json!(n));
    let forbidden = match dec.leading() {
        Some(lead) => field_roots(lead, d).map_err(|e| CliError::usage("--field", e))?,
        None => Vec::new(),
    };
    results.insert("forbidden_alphas".into(), json!(forbidden.iter().map(|z| z.to_string()).collect::<Vec<_>>()));
    let mut failure = None;
    match bivariate_jacobian(&p, &dec) {
        Ok(j) => {
            results.insert("jacobian".into(), json!(j.to_string()));
        }
        Err(e) => failure = Some(e.to_string()),
    }
    let mut ps = vec![("m", m.to_string())];
    if let Some(text) = alpha {
        let a = parse_scalar(text).map_err(|e| CliError::usage("--alpha", e))?;
        let slice = slice_polynomial(&dec, &a);
        results.insert("slice".into(), json!(slice.display_with("x").to_string()));
        ps.push(("alpha", a.to_string()));
    }
    let _ = writeln!(stderr, "N = {n}");
    Ok(Report { csv, model: Some(p.to_string()), parameters: params(&ps), results, failure })
}

fn explore_cmd(model: &str, window: &str, height: u64, rect: Option<&str>, resolution: usize, d: u32) -> Result<Report, CliError> {
    let d = check_field(d)?;
    let f = parse_model(model)?;
    let n = f.nvars();
    let windows = parse_windows("--window", window, n)?;
    if height == 0 {
        return Err(CliError::usage("--height", "height bound must be at least 1"));
    }
    let cloud = sample_graph(&f, &windows, height, d)?;
    let mut header = numbered("x", n);
    header.push("y".into());
    let mut csv = Csv::new(&header);
    for p in &cloud.points {
        if f.eval(&p[..n])? != p[n] {
            return Err(CliError::Verification(format!("sampled point {p:?} is off the graph")));
        }
        csv.row(&decimal_row(p));
    }
    let mut results = BTreeMap::new();
    let mut ps = vec![("window", window.to_string()), ("height", height.to_string())];
    if let Some(text) = rect {
        let bounds = parse_points("--rect", text)?;
        let [x0, x1, y0, y1] = bounds.as_slice() else {
            return Err(CliError::usage("--rect", "expected x_lo,x_hi,y_lo,y_hi"));
        };
        let r = Rect {
            x: Interval::new(x0.clone(), x1.clone()).map_err(|e| CliError::usage("--rect", e))?,
            y: Interval::new(y0.clone(), y1.clone()).map_err(|e| CliError::usage("--rect", e))?,
        };
        let plane = PointCloud {
            dim: 2,
            points: cloud.points.iter().map(|p| vec![p[0].clone(), p[n].clone()]).collect(),
            provenance: cloud.provenance.clone(),
        };
        let grid = coverage_fraction(&plane, &r, resolution).map_err(|e| CliError::usage("--resolution", e))?;
        results.insert("coverage".into(), json!({"fraction": grid.fraction(), "occupied": grid.occupied(), "resolution": resolution}));
        ps.push(("rect", text.to_string()));
        ps.push(("resolution", resolution.to_string()));
    }
    results.insert("points".into(), json!(cloud.points.len()));
    Ok(Report { csv, model: Some(f.to_string()), parameters: params(&ps), results, failure: None })
}

fn growth_cmd(model: &str, window: &str, heights: &str, d: u32) -> Result<Report, CliError> {
    let d = check_field(d)?;
    let f = parse_model(model)?;
    let n = f.nvars();
    let windows = parse_windows("--window", window, n)?;
    let hs: Vec<u64> = parse_ints("--heights", heights)?;
    if hs.is_empty() || hs[0] == 0 || hs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::usage("--heights", "heights must be positive and strictly increasing"));
    }
    let table = growth_table(&f, &windows, &hs, d)?;
    let mut header = vec!["height".to_string(), "sup".into(), "samples".into()];
    header.extend(numbered("argmax_x", n));
    let mut csv = Csv::new(&header);
    for row in &table.rows {
        let mut fields = vec![row.height.to_string(), row.sup.as_ref().map(render_decimal).unwrap_or_default(), row.samples.to_string()];
        match &row.argmax {
            Some(x) => fields.extend(decimal_row(x)),
            None => fields.extend(std::iter::repeat_n(String::new(), n)),
        }
        csv.row(&fields);
    }
    let sups: Vec<Value> = table.rows.iter().map(|r| r.sup.as_ref().map_or(Value::Null, |s| json!(s.to_string()))).collect();
    let mut results = BTreeMap::new();
    results.insert("sup_values".into(), Value::Array(sups));
    results.insert("monotone".into(), json!(table.is_monotone()));
    let failure = (!table.is_monotone()).then(|| "sup column decreases".to_string());
    Ok(Report {
        csv,
        model: Some(f.to_string()),
        parameters: params(&[("window", window.to_string()), ("heights", heights.to_string())]),
        results,
        failure,
    })
}

fn image_cmd(model: &str, grid: &GridArgs, window: &str, height: u64, d: u32) -> Result<Report, CliError> {
    let d = check_field(d)?;
    let f = parse_model(model)?;
    let g = build_grid(&f, grid)?;
    let k = g.n() + 1;
    let w = parse_interval("--window", window)?;
    if height == 0 {
        return Err(CliError::usage("--height", "height bound must be at least 1"));
    }
    let p = build_interpolant(&f, &g)?;
    let ts = parameter_samples(k, &w, height, d)?;
    let img = image_cloud(&p, &g, grid.axis - 1, &ts)?;
    let mut header = numbered("y", g.n());
    header.push("value".into());
    let mut csv = Csv::new(&header);
    for pt in &img.cloud.points {
        csv.row(&decimal_row(pt));
    }
    let mut results = BTreeMap::new();
    results.insert("interpolant".into(), json!(p.to_string()));
    results.insert("skipped".into(), json!(img.skipped));
    results.insert("retained".into(), json!(img.cloud.points.len()));
    let mut ps = grid_params(&g, grid.axis);
    ps.push(("window", window.to_string()));
    ps.push(("height", height.to_string()));
    Ok(Report { csv, model: Some(f.to_string()), parameters: params(&ps), results, failure: None })
}
