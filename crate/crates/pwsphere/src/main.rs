//! Thin command-line front end; all numeric work lives in the library.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use pwsphere::cli::{run, JobSpec, OutputFormat};

#[derive(Parser)]
#[command(
    name = "pwsphere",
    about = "Spherical Fourier transforms on compact rank-one symmetric spaces and \
             support-radius recovery from coefficient growth",
    version
)]
struct Cli {
    /// JSON job file providing defaults; explicit flags override its fields.
    #[arg(long, global = true)]
    job: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct Common {
    /// Space name (torus, s2, s3, s4, s5, cp2, su2-group).
    #[arg(long)]
    space: Option<String>,
    /// Function descriptor: bump(r=..[,p=..]) | cospow(r=..,q=..) |
    /// sph(l=..) | char(n=..) | samples(path).
    #[arg(long = "f")]
    function: Option<String>,
    /// Output artifact path.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient table over the spherical lattice, as CSV.
    Transform {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        l_max: Option<f64>,
    },
    /// Fourier series synthesis from a table (or directly from a function).
    Synthesize {
        #[command(flatten)]
        common: Common,
        /// Coefficient CSV produced by `transform`.
        #[arg(long = "table")]
        input: Option<PathBuf>,
        #[arg(long)]
        l_max: Option<f64>,
        /// Number of grid points on [0, pi).
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Sample the holomorphic extension along the imaginary ray, as CSV.
    Extend {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        sigma_min: Option<f64>,
        #[arg(long)]
        sigma_max: Option<f64>,
        #[arg(long)]
        sigma_samples: Option<usize>,
    },
    /// Fit the exponential type of a stored ray.
    TypeFit {
        /// Ray CSV produced by `extend`.
        #[arg(long = "ray")]
        input: Option<PathBuf>,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Growth/decay/symmetry membership report for a claimed radius.
    PwCheck {
        #[command(flatten)]
        common: Common,
        /// Claimed support radius r.
        #[arg(long = "r")]
        r_claimed: Option<f64>,
        #[arg(long)]
        sigma_max: Option<f64>,
    },
    /// Estimate the support radius from coefficient growth.
    Support {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        sigma_min: Option<f64>,
        #[arg(long)]
        sigma_max: Option<f64>,
        #[arg(long)]
        sigma_samples: Option<usize>,
    },
    /// Character-transform table of a class function on SU(2).
    GroupTransform {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Average a class function over the circle subgroup onto the sphere.
    KAverage {
        #[command(flatten)]
        common: Common,
        /// Radial grid points (4k+1).
        #[arg(long)]
        grid: Option<usize>,
        /// Quadrature points in the averaging angle.
        #[arg(long)]
        theta_grid: Option<usize>,
        /// Support-measurement threshold relative to max |f|.
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// The sharpness demonstration: cos(pi(lambda+1/2)) has type exactly pi.
    CarlsonDemo {
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Print the radius bounds of a space.
    Bounds {
        #[command(flatten)]
        common: Common,
    },
}

fn to_job(command: Command) -> JobSpec {
    let mut job = JobSpec::default();
    match command {
        Command::Transform { common, l_max } => {
            job.command = "transform".into();
            apply_common(&mut job, common);
            job.l_max = l_max;
        }
        Command::Synthesize {
            common,
            input,
            l_max,
            grid,
        } => {
            job.command = "synthesize".into();
            apply_common(&mut job, common);
            job.input = input;
            job.l_max = l_max;
            job.grid = grid;
        }
        Command::Extend {
            common,
            sigma_min,
            sigma_max,
            sigma_samples,
        } => {
            job.command = "extend".into();
            apply_common(&mut job, common);
            job.sigma_min = sigma_min;
            job.sigma_max = sigma_max;
            job.sigma_samples = sigma_samples;
        }
        Command::TypeFit { input, output } => {
            job.command = "type-fit".into();
            job.input = input;
            job.output = output;
        }
        Command::PwCheck {
            common,
            r_claimed,
            sigma_max,
        } => {
            job.command = "pw-check".into();
            apply_common(&mut job, common);
            job.r_claimed = r_claimed;
            job.sigma_max = sigma_max;
        }
        Command::Support {
            common,
            sigma_min,
            sigma_max,
            sigma_samples,
        } => {
            job.command = "support".into();
            apply_common(&mut job, common);
            job.sigma_min = sigma_min;
            job.sigma_max = sigma_max;
            job.sigma_samples = sigma_samples;
        }
        Command::GroupTransform { common, n_max } => {
            job.command = "group-transform".into();
            apply_common(&mut job, common);
            job.n_max = n_max;
        }
        Command::KAverage {
            common,
            grid,
            theta_grid,
            threshold,
        } => {
            job.command = "k-average".into();
            apply_common(&mut job, common);
            job.grid = grid;
            job.theta_grid = theta_grid;
            job.threshold = threshold;
        }
        Command::CarlsonDemo { output } => {
            job.command = "carlson-demo".into();
            job.output = output;
        }
        Command::Bounds { common } => {
            job.command = "bounds".into();
            apply_common(&mut job, common);
        }
    }
    job.format = Some(OutputFormat::Csv);
    job
}

fn apply_common(job: &mut JobSpec, common: Common) {
    job.space = common.space;
    job.function = common.function;
    job.output = common.output;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut job = to_job(cli.command);
    if let Some(path) = &cli.job {
        match JobSpec::from_json_file(path) {
            Ok(base) => job = job.or_from(base),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
    }
    match run(&job) {
        Ok(summary) => {
            println!("{summary}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
