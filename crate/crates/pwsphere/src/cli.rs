//! Job layer behind the `pwsphere` binary: a small function DSL, a JobSpec
//! that can come from flags or a JSON job file (flags win), and bit-stable
//! CSV/JSON emitters.  No numeric logic lives here; every subcommand is a
//! thin adapter over the library modules.
//!
//! File formats:
//! * coefficient tables: `l,re,im,quad_err` (`n,...` for the group case);
//! * rays: `sigma,re,im`;
//! * sampled functions: `t,value`;
//! * reports: JSON mirroring the report structs.
//!
//! Floats are printed with Rust's shortest round-trip formatting, `\n` line
//! endings, and `.` decimal separator; outputs are written to a temporary
//! sibling and renamed into place.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::geometry::{catalog_space, SpaceDescriptor, SpaceKind};
use crate::groupcase::{
    group_pw_check, group_table, group_transform, k_average, support_transfer_check, ClassFunction,
};
use crate::holo::{
    extend_on_ray, fit_exponential_type, pw_membership, support_radius_with, RaySamples,
};
use crate::transform::{
    coefficient_table, forward_value, synthesize, CoefficientEntry, CoefficientTable,
    RadialFunction, DEFAULT_BUMP_SHARPNESS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Everything a run needs; unset fields fall back to per-command defaults.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct JobSpec {
    pub command: String,
    pub space: Option<String>,
    pub function: Option<String>,
    pub l_max: Option<f64>,
    pub n_max: Option<u32>,
    pub sigma_min: Option<f64>,
    pub sigma_max: Option<f64>,
    pub sigma_samples: Option<usize>,
    pub r_claimed: Option<f64>,
    pub grid: Option<usize>,
    pub theta_grid: Option<usize>,
    pub threshold: Option<f64>,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Option<OutputFormat>,
}

impl JobSpec {
    /// Fill unset fields from `base` (typically a JSON job file); set flags
    /// always win.
    pub fn or_from(mut self, base: JobSpec) -> JobSpec {
        if self.command.is_empty() {
            self.command = base.command;
        }
        macro_rules! fill {
            ($($field:ident),*) => {
                $(if self.$field.is_none() { self.$field = base.$field; })*
            };
        }
        fill!(
            space,
            function,
            l_max,
            n_max,
            sigma_min,
            sigma_max,
            sigma_samples,
            r_claimed,
            grid,
            theta_grid,
            threshold,
            input,
            output,
            format
        );
        self
    }

    pub fn from_json_file(path: &Path) -> Result<JobSpec> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// Parsed function descriptor, before committing to the radial or the class
/// interpretation.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    Bump { r: f64, p: f64 },
    CosPow { r: f64, q: u32 },
    Sph { l: u32 },
    Char { n: u32 },
    SamplesPath(PathBuf),
}

impl FunctionSpec {
    /// Commit to a radial function on [0, pi]; `char(...)` is refused here.
    pub fn into_radial(self) -> Result<RadialFunction> {
        match self {
            FunctionSpec::Bump { r, p } => Ok(RadialFunction::Bump {
                radius: r,
                sharpness: p,
            }),
            FunctionSpec::CosPow { r, q } => Ok(RadialFunction::CosPow {
                radius: r,
                power: q,
            }),
            FunctionSpec::Sph { l } => Ok(RadialFunction::PolySpherical { degree: l }),
            FunctionSpec::Char { .. } => Err(Error::InvalidRequest {
                reason: "char(...) is a class function; use a group subcommand".into(),
            }),
            FunctionSpec::SamplesPath(path) => {
                let values = read_samples_csv(&path, PI)?;
                RadialFunction::from_samples(values)
            }
        }
    }

    /// Commit to a class function on [0, 2pi]; bumps become conjugacy-angle
    /// bumps.
    pub fn into_class(self) -> Result<ClassFunction> {
        match self {
            FunctionSpec::Bump { r, p } => Ok(ClassFunction::BumpAngle {
                radius: r,
                sharpness: p,
            }),
            FunctionSpec::Char { n } => Ok(ClassFunction::Char { n }),
            FunctionSpec::SamplesPath(path) => {
                let values = read_samples_csv(&path, 2.0 * PI)?;
                ClassFunction::from_samples(values)
            }
            other => Err(Error::InvalidRequest {
                reason: format!("{other:?} is not a class function; use char/bump/samples"),
            }),
        }
    }
}

/// Parse the function DSL:
/// `bump(r=<float>[,p=<float>]) | cospow(r=<float>,q=<int>) | sph(l=<int>) |
/// char(n=<int>) | samples(<path>)`.
pub fn parse_function_dsl(text: &str) -> Result<FunctionSpec> {
    let s = text.trim();
    let open = s.find('(').ok_or_else(|| Error::Parse {
        position: s.len(),
        reason: "expected '(' after the function name".into(),
    })?;
    if !s.ends_with(')') {
        return Err(Error::Parse {
            position: s.len(),
            reason: "expected closing ')'".into(),
        });
    }
    let name = &s[..open];
    let body = &s[open + 1..s.len() - 1];
    let body_pos = open + 1;

    let parse_args = |body: &str| -> Result<Vec<(String, String, usize)>> {
        let mut out = Vec::new();
        let mut cursor = 0usize;
        for piece in body.split(',') {
            let at = body_pos + cursor;
            cursor += piece.len() + 1;
            if piece.trim().is_empty() {
                return Err(Error::Parse {
                    position: at,
                    reason: "empty argument".into(),
                });
            }
            let eq = piece.find('=').ok_or_else(|| Error::Parse {
                position: at,
                reason: format!("expected key=value, got `{}`", piece.trim()),
            })?;
            out.push((
                piece[..eq].trim().to_owned(),
                piece[eq + 1..].trim().to_owned(),
                at,
            ));
        }
        Ok(out)
    };

    let get_f64 = |v: &str, at: usize| -> Result<f64> {
        v.parse::<f64>().map_err(|_| Error::Parse {
            position: at,
            reason: format!("`{v}` is not a number"),
        })
    };
    let get_u32 = |v: &str, at: usize| -> Result<u32> {
        v.parse::<u32>().map_err(|_| Error::Parse {
            position: at,
            reason: format!("`{v}` is not a nonnegative integer"),
        })
    };

    match name {
        "bump" | "cospow" => {
            let mut r = None;
            let mut p = None;
            let mut q = None;
            for (k, v, at) in parse_args(body)? {
                match (name, k.as_str()) {
                    (_, "r") => r = Some(get_f64(&v, at)?),
                    ("bump", "p") => p = Some(get_f64(&v, at)?),
                    ("cospow", "q") => q = Some(get_u32(&v, at)?),
                    _ => {
                        return Err(Error::Parse {
                            position: at,
                            reason: format!("unknown argument `{k}` for {name}"),
                        })
                    }
                }
            }
            let r = r.ok_or_else(|| Error::Parse {
                position: body_pos,
                reason: "missing required argument r".into(),
            })?;
            if !(r > 0.0 && r < PI) {
                return Err(Error::OutOfRange {
                    name: "r",
                    value: r,
                    reason: "support radius must satisfy 0 < r < pi".into(),
                });
            }
            if name == "bump" {
                let p = p.unwrap_or(DEFAULT_BUMP_SHARPNESS);
                if p <= 0.0 {
                    return Err(Error::OutOfRange {
                        name: "p",
                        value: p,
                        reason: "sharpness must be positive".into(),
                    });
                }
                Ok(FunctionSpec::Bump { r, p })
            } else {
                let q = q.ok_or_else(|| Error::Parse {
                    position: body_pos,
                    reason: "missing required argument q".into(),
                })?;
                if q == 0 {
                    return Err(Error::OutOfRange {
                        name: "q",
                        value: 0.0,
                        reason: "power must be at least 1".into(),
                    });
                }
                Ok(FunctionSpec::CosPow { r, q })
            }
        }
        "sph" => {
            let args = parse_args(body)?;
            match args.as_slice() {
                [(k, v, at)] if k == "l" => Ok(FunctionSpec::Sph {
                    l: get_u32(v, *at)?,
                }),
                _ => Err(Error::Parse {
                    position: body_pos,
                    reason: "sph takes exactly l=<int>".into(),
                }),
            }
        }
        "char" => {
            let args = parse_args(body)?;
            match args.as_slice() {
                [(k, v, at)] if k == "n" => Ok(FunctionSpec::Char {
                    n: get_u32(v, *at)?,
                }),
                _ => Err(Error::Parse {
                    position: body_pos,
                    reason: "char takes exactly n=<int>".into(),
                }),
            }
        }
        "samples" => {
            if body.trim().is_empty() {
                return Err(Error::Parse {
                    position: body_pos,
                    reason: "samples needs a file path".into(),
                });
            }
            Ok(FunctionSpec::SamplesPath(PathBuf::from(body.trim())))
        }
        other => Err(Error::Parse {
            position: 0,
            reason: format!(
                "unknown function `{other}`; expected bump, cospow, sph, char, or samples"
            ),
        }),
    }
}

/// One-line machine-parsable run summary plus the files written.
#[derive(Debug, Clone, Default)]
pub struct RunSummary {
    pub pairs: Vec<(String, String)>,
    pub artifacts: Vec<PathBuf>,
}

impl RunSummary {
    fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.pairs.push((key.to_owned(), value.to_string()));
    }
}

impl fmt::Display for RunSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.pairs {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{k}={v}")?;
            first = false;
        }
        Ok(())
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn table_csv(table: &CoefficientTable, index_name: &str) -> String {
    let mut out = format!("{index_name},re,im,quad_err\n");
    for e in &table.entries {
        out.push_str(&format!(
            "{},{},{},{}\n",
            e.l, e.value.re, e.value.im, e.quad_err
        ));
    }
    out
}

fn ray_csv(ray: &RaySamples) -> String {
    let mut out = String::from("sigma,re,im\n");
    for (s, v) in ray.sigmas.iter().zip(&ray.values) {
        out.push_str(&format!("{},{},{}\n", s, v.re, v.im));
    }
    out
}

fn samples_csv(grid: &[f64], values: &[f64]) -> String {
    let mut out = String::from("t,value\n");
    for (t, v) in grid.iter().zip(values) {
        out.push_str(&format!("{t},{v}\n"));
    }
    out
}

/// Read a `t,value` CSV of uniform samples over [0, span] and return the
/// values.
fn read_samples_csv(path: &Path, span: f64) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path)?;
    let mut grid = Vec::new();
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 && line.starts_with('t') {
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let mut cols = line.split(',');
        let (Some(a), Some(b)) = (cols.next(), cols.next()) else {
            return Err(Error::Parse {
                position: i,
                reason: format!("samples file line {i} needs t,value"),
            });
        };
        grid.push(a.trim().parse::<f64>().map_err(|_| Error::Parse {
            position: i,
            reason: format!("bad t `{a}`"),
        })?);
        values.push(b.trim().parse::<f64>().map_err(|_| Error::Parse {
            position: i,
            reason: format!("bad value `{b}`"),
        })?);
    }
    let n = grid.len();
    if n < 5 {
        return Err(Error::BadSampleGrid {
            reason: "too few samples".into(),
        });
    }
    let h = span / (n - 1) as f64;
    for (i, &t) in grid.iter().enumerate() {
        if (t - i as f64 * h).abs() > 1e-9 * span {
            return Err(Error::BadSampleGrid {
                reason: format!("samples must be uniform on [0, {span:.6}]; row {i} has t={t}"),
            });
        }
    }
    Ok(values)
}

fn read_ray_csv(path: &Path) -> Result<RaySamples> {
    let text = std::fs::read_to_string(path)?;
    let mut sigmas = Vec::new();
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 && line.starts_with("sigma") {
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() < 3 {
            return Err(Error::Parse {
                position: i,
                reason: "ray rows need sigma,re,im".into(),
            });
        }
        let parse = |s: &str| -> Result<f64> {
            s.trim().parse::<f64>().map_err(|_| Error::Parse {
                position: i,
                reason: format!("bad number `{s}`"),
            })
        };
        sigmas.push(parse(cols[0])?);
        values.push(Complex64::new(parse(cols[1])?, parse(cols[2])?));
    }
    Ok(RaySamples {
        space: "(file)".to_owned(),
        center: Complex64::new(0.0, 0.0),
        direction: Complex64::new(0.0, 1.0),
        sigmas,
        values,
        truncated: false,
    })
}

fn require_space(job: &JobSpec) -> Result<SpaceDescriptor> {
    let name = job.space.as_deref().ok_or_else(|| Error::InvalidRequest {
        reason: "--space is required".into(),
    })?;
    catalog_space(name)
}

fn require_function(job: &JobSpec) -> Result<FunctionSpec> {
    let text = job
        .function
        .as_deref()
        .ok_or_else(|| Error::InvalidRequest {
            reason: "--f <descriptor> is required".into(),
        })?;
    parse_function_dsl(text)
}

fn sigma_grid(job: &JobSpec, default_min: f64, default_max: f64) -> Result<Vec<f64>> {
    let lo = job.sigma_min.unwrap_or(default_min);
    let hi = job.sigma_max.unwrap_or(default_max);
    let n = job.sigma_samples.unwrap_or(31);
    if !(hi > lo && lo >= 0.0) || n < 2 {
        return Err(Error::InvalidRequest {
            reason: format!("bad sigma grid [{lo}, {hi}] with {n} samples"),
        });
    }
    Ok((0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect())
}

fn out_path(job: &JobSpec, default_name: &str) -> PathBuf {
    job.output
        .clone()
        .unwrap_or_else(|| PathBuf::from(default_name))
}

/// Execute one job.  Every artifact the command declares is written before
/// the summary is returned.
pub fn run(job: &JobSpec) -> Result<RunSummary> {
    match job.command.as_str() {
        "transform" => run_transform(job),
        "synthesize" => run_synthesize(job),
        "extend" => run_extend(job),
        "type-fit" => run_type_fit(job),
        "pw-check" => run_pw_check(job),
        "support" => run_support(job),
        "group-transform" => run_group_transform(job),
        "k-average" => run_k_average(job),
        "carlson-demo" => run_carlson(job),
        "bounds" => run_bounds(job),
        other => Err(Error::InvalidRequest {
            reason: format!(
                "unknown command `{other}`; expected transform, synthesize, extend, type-fit, \
                 pw-check, support, group-transform, k-average, carlson-demo, or bounds"
            ),
        }),
    }
}

fn run_transform(job: &JobSpec) -> Result<RunSummary> {
    let space = require_space(job)?;
    let f = require_function(job)?.into_radial()?;
    let l_max = job.l_max.unwrap_or(40.0);
    let table = coefficient_table(&space, &f, l_max)?;
    let path = out_path(job, "coefficients.csv");
    write_atomic(&path, &table_csv(&table, "l"))?;
    let max_abs = table
        .entries
        .iter()
        .map(|e| e.value.norm())
        .fold(0.0f64, f64::max);
    let mut summary = RunSummary::default();
    summary.push("command", "transform");
    summary.push("space", &space.name);
    summary.push("f", f.describe());
    summary.push("l_max", l_max);
    summary.push("entries", table.entries.len());
    summary.push("max_abs", max_abs);
    summary.push("max_quad_err", table.max_quad_err);
    summary.push("wrote", path.display());
    summary.artifacts.push(path);
    Ok(summary)
}

fn run_synthesize(job: &JobSpec) -> Result<RunSummary> {
    let space = require_space(job)?;
    let grid_n = job.grid.unwrap_or(1025);
    if grid_n < 2 {
        return Err(Error::InvalidRequest {
            reason: "--grid must be at least 2".into(),
        });
    }
    let table = match (&job.input, &job.function) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)?;
            let mut entries = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if i == 0 || line.trim().is_empty() {
                    continue;
                }
                let cols: Vec<&str> = line.split(',').collect();
                if cols.len() < 4 {
                    return Err(Error::Parse {
                        position: i,
                        reason: "table rows need l,re,im,quad_err".into(),
                    });
                }
                let p = |s: &str| -> Result<f64> {
                    s.trim().parse().map_err(|_| Error::Parse {
                        position: i,
                        reason: format!("bad number `{s}`"),
                    })
                };
                entries.push(CoefficientEntry {
                    l: p(cols[0])?,
                    value: Complex64::new(p(cols[1])?, p(cols[2])?),
                    quad_err: p(cols[3])?,
                });
            }
            CoefficientTable {
                space: space.name.clone(),
                function: format!("file:{}", path.display()),
                entries,
                max_nodes: 0,
                max_quad_err: 0.0,
            }
        }
        (None, Some(_)) => {
            let f = require_function(job)?.into_radial()?;
            coefficient_table(&space, &f, job.l_max.unwrap_or(40.0))?
        }
        (None, None) => {
            return Err(Error::InvalidRequest {
                reason: "synthesize needs --table <csv> or --f <descriptor>".into(),
            })
        }
    };
    let grid: Vec<f64> = (0..grid_n).map(|i| PI * i as f64 / grid_n as f64).collect();
    let values = synthesize(&space, &table, &grid)?;
    let path = out_path(job, "synthesis.csv");
    write_atomic(&path, &samples_csv(&grid, &values))?;
    let mut summary = RunSummary::default();
    summary.push("command", "synthesize");
    summary.push("space", &space.name);
    summary.push("terms", table.entries.len());
    summary.push("grid", grid_n);
    if let Some(text) = &job.function {
        if job.input.is_none() {
            let f = parse_function_dsl(text)?.into_radial()?;
            let sup_err = grid
                .iter()
                .zip(&values)
                .map(|(&t, &v)| (v - f.eval(&space, t)).abs())
                .fold(0.0f64, f64::max);
            summary.push("sup_err", sup_err);
        }
    }
    summary.push("wrote", path.display());
    summary.artifacts.push(path);
    Ok(summary)
}

fn run_extend(job: &JobSpec) -> Result<RunSummary> {
    let space = require_space(job)?;
    let spec = require_function(job)?;
    let sigmas = sigma_grid(job, 60.0, 120.0)?;
    let ray = match space.kind {
        SpaceKind::GroupSu2 => crate::groupcase::group_extend_on_ray(&spec.into_class()?, &sigmas)?,
        _ => extend_on_ray(
            &space,
            &spec.into_radial()?,
            Complex64::new(0.0, 1.0),
            &sigmas,
        )?,
    };
    let path = out_path(job, "ray.csv");
    write_atomic(&path, &ray_csv(&ray))?;
    let mut summary = RunSummary::default();
    summary.push("command", "extend");
    summary.push("space", &space.name);
    summary.push("samples", ray.sigmas.len());
    summary.push("sigma_max", ray.sigmas.last().copied().unwrap_or(0.0));
    summary.push("truncated", ray.truncated);
    summary.push("wrote", path.display());
    summary.artifacts.push(path);
    Ok(summary)
}

fn run_type_fit(job: &JobSpec) -> Result<RunSummary> {
    let input = job.input.as_ref().ok_or_else(|| Error::InvalidRequest {
        reason: "type-fit needs --ray <csv>".into(),
    })?;
    let ray = read_ray_csv(input)?;
    let fit = fit_exponential_type(&ray)?;
    let path = out_path(job, "type_fit.json");
    write_atomic(&path, &format!("{}\n", serde_json::to_string_pretty(&fit)?))?;
    let mut summary = RunSummary::default();
    summary.push("command", "type-fit");
    summary.push("r_hat", fit.r_hat);
    summary.push("stderr", fit.slope_stderr);
    summary.push("window", format!("{}..{}", fit.window.0, fit.window.1));
    summary.push("envelope", fit.envelope_used);
    summary.push("zero_input", fit.zero_input);
    summary.push("wrote", path.display());
    summary.artifacts.push(path);
    Ok(summary)
}

fn run_pw_check(job: &JobSpec) -> Result<RunSummary> {
    let space = require_space(job)?;
    let claimed = job.r_claimed.ok_or_else(|| Error::InvalidRequest {
        reason: "pw-check needs --r <claimed radius>".into(),
    })?;
    let sigma_max = job.sigma_max.unwrap_or(80.0);
    let spec = require_function(job)?;
    let report = match space.kind {
        SpaceKind::GroupSu2 => {
            let f = spec.into_class()?;
            let g = move |n: Complex64| group_transform(&f, n);
            group_pw_check(&g, claimed, sigma_max)?
        }
        _ => {
            let f = spec.into_radial()?;
            let sp = space.clone();
            let g = move |lambda: Complex64| forward_value(&sp, &f, lambda);
            pw_membership(&space, &g, claimed, sigma_max)?
        }
    };
    let path = out_path(job, "pw_report.json");
    write_atomic(
        &path,
        &format!("{}\n", serde_json::to_string_pretty(&report)?),
    )?;
    let mut summary = RunSummary::default();
    summary.push("command", "pw-check");
    summary.push("space", &space.name);
    summary.push("r_claimed", claimed);
    summary.push("r_hat", report.type_fit.r_hat);
    summary.push("symmetry_residual", report.symmetry_residual);
    summary.push("coverage", report.coverage);
    summary.push("verdict", report.verdict_for_r);
    summary.push("wrote", path.display());
    summary.artifacts.push(path);
    Ok(summary)
}

fn run_support(job: &JobSpec) -> Result<RunSummary> {
    let space = require_space(job)?;
    let spec = require_function(job)?;
    let sigma_max = job.sigma_max.unwrap_or(120.0);
    let sigmas = {
        let lo = job.sigma_min.unwrap_or(sigma_max / 2.0);
        let n = job.sigma_samples.unwrap_or(31);
        (0..n)
            .map(|i| lo + (sigma_max - lo) * i as f64 / (n - 1) as f64)
            .collect::<Vec<f64>>()
    };
    let (estimate, described) = match space.kind {
        SpaceKind::GroupSu2 => {
            let f = spec.into_class()?;
            let ray = crate::groupcase::group_extend_on_ray(&f, &sigmas)?;
            let fit = fit_exponential_type(&ray)?;
            (
                crate::holo::SupportEstimate {
                    r_hat: fit.r_hat,
                    zero_function: fit.zero_input,
                    fit,
                },
                f.describe(),
            )
        }
        _ => {
            let f = spec.into_radial()?;
            (support_radius_with(&space, &f, &sigmas)?, f.describe())
        }
    };
    let mut summary = RunSummary::default();
    summary.push("command", "support");
    summary.push("space", &space.name);
    summary.push("f", described);
    summary.push("r_hat", estimate.r_hat);
    summary.push("stderr", estimate.fit.slope_stderr);
    summary.push("zero_function", estimate.zero_function);
    if let Some(path) = &job.output {
        write_atomic(
            path,
            &format!("{}\n", serde_json::to_string_pretty(&estimate)?),
        )?;
        summary.push("wrote", path.display());
        summary.artifacts.push(path.clone());
    }
    Ok(summary)
}

fn run_group_transform(job: &JobSpec) -> Result<RunSummary> {
    let f = require_function(job)?.into_class()?;
    let n_max = job.n_max.unwrap_or(40);
    let table = group_table(&f, n_max)?;
    let path = out_path(job, "group_coefficients.csv");
    write_atomic(&path, &table_csv(&table, "n"))?;
    let mut summary = RunSummary::default();
    summary.push("command", "group-transform");
    summary.push("f", f.describe());
    summary.push("n_max", n_max);
    summary.push("entries", table.entries.len());
    summary.push("wrote", path.display());
    summary.artifacts.push(path);
    Ok(summary)
}

fn run_k_average(job: &JobSpec) -> Result<RunSummary> {
    let f = require_function(job)?.into_class()?;
    let grid_n = job.grid.unwrap_or(4097);
    let theta_n = job.theta_grid.unwrap_or(1024);
    let averaged = k_average(&f, grid_n, theta_n)?;
    let RadialFunction::Samples { values, .. } = &averaged else {
        unreachable!("k_average returns samples");
    };
    let grid: Vec<f64> = (0..grid_n)
        .map(|i| PI * i as f64 / (grid_n - 1) as f64)
        .collect();
    let path = out_path(job, "k_average.csv");
    write_atomic(&path, &samples_csv(&grid, values))?;
    let transfer = support_transfer_check(&f, job.threshold.unwrap_or(1e-12))?;
    let mut summary = RunSummary::default();
    summary.push("command", "k-average");
    summary.push("f", f.describe());
    summary.push("grid", grid_n);
    summary.push("measured_support", transfer.measured_radius);
    match transfer.within_bound {
        Some(ok) => summary.push("within_bound", ok),
        None => summary.push("within_bound", "skipped"),
    }
    summary.push("wrote", path.display());
    summary.artifacts.push(path);
    Ok(summary)
}

fn run_carlson(job: &JobSpec) -> Result<RunSummary> {
    let report = crate::holo::carlson_sharpness()?;
    let mut summary = RunSummary::default();
    summary.push("command", "carlson-demo");
    summary.push("type", report.type_fit.r_hat);
    summary.push("threshold", report.threshold);
    summary.push("max_lattice_abs", report.max_abs_on_lattice);
    summary.push("symmetry_residual", report.symmetry_residual);
    summary.push(
        "sharp",
        report.lattice_vanishing_ok && report.type_within_two_percent,
    );
    if let Some(path) = &job.output {
        write_atomic(
            path,
            &format!("{}\n", serde_json::to_string_pretty(&report)?),
        )?;
        summary.push("wrote", path.display());
        summary.artifacts.push(path.clone());
    }
    Ok(summary)
}

fn run_bounds(job: &JobSpec) -> Result<RunSummary> {
    let space = require_space(job)?;
    let bounds = space.radius_bounds();
    let mut summary = RunSummary::default();
    summary.push("command", "bounds");
    summary.push("space", &space.name);
    summary.push("r_forward_conservative", bounds.r_forward_conservative);
    summary.push("r_forward_sharp", bounds.r_forward_sharp);
    summary.push("r_unique", bounds.r_unique);
    summary.push("inj_radius_t", bounds.inj_radius_t);
    if let Some(path) = &job.output {
        #[derive(Serialize)]
        struct BoundsDoc<'a> {
            space: &'a SpaceDescriptor,
            bounds: &'a crate::geometry::RadiusBounds,
        }
        write_atomic(
            path,
            &format!(
                "{}\n",
                serde_json::to_string_pretty(&BoundsDoc {
                    space: &space,
                    bounds: &bounds
                })?
            ),
        )?;
        summary.push("wrote", path.display());
        summary.artifacts.push(path.clone());
    }
    Ok(summary)
}
