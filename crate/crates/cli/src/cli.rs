use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "fracspec",
    version,
    about = "Zeta functions, fractal strings and the spectral operator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write output here instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Absolute error target for ζ
    #[arg(long, default_value_t = 1e-12, global = true)]
    pub target_error: f64,

    /// Term budget for ζ
    #[arg(long, default_value_t = 20_000, global = true)]
    pub max_terms: usize,

    /// Grid step for scans along vertical lines
    #[arg(long, default_value_t = 0.05, global = true)]
    pub grid_step: f64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// ζ(s), Γ(s) and ξ(s)
    Zeta {
        /// Point such as `2`, `0.5+14.13i` or `-3i`
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Zeros of ζ on the critical line
    Zeros {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        t_max: f64,
    },
    /// Geometric side of a fractal string
    String {
        #[command(flatten)]
        source: Source,
        #[command(subcommand)]
        action: StringAction,
    },
    /// Frequencies of a fractal string
    Spectral {
        #[command(flatten)]
        source: Source,
        #[command(subcommand)]
        action: SpectralAction,
    },
    /// The spectral operator, its truncations and invertibility
    Op {
        #[command(subcommand)]
        action: OpAction,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    Cantor,
    Power,
    Selfsimilar,
    Unit,
}

#[derive(Args, Debug)]
pub struct Source {
    /// Built-in string
    #[arg(long, value_enum, conflicts_with = "spec_file")]
    pub builtin: Option<Builtin>,
    /// JSON string description
    #[arg(long)]
    pub spec_file: Option<PathBuf>,
    /// Lattice depth (cantor, selfsimilar)
    #[arg(long, default_value_t = 30)]
    pub depth: usize,
    /// Ratio a (selfsimilar)
    #[arg(long, default_value_t = 3.0)]
    pub a: f64,
    /// Base b (selfsimilar)
    #[arg(long, default_value_t = 2.0)]
    pub b: f64,
    /// Exponent D (power)
    #[arg(long, default_value_t = 0.5)]
    pub exponent: f64,
    /// Number of lengths (power)
    #[arg(long, default_value_t = 10_000)]
    pub count: usize,
}

#[derive(Subcommand, Debug)]
pub enum StringAction {
    /// Geometric zeta, as a series and (for lattice strings) in closed form
    Zeta {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Complex dimensions with |Im| up to the window
    Dims {
        #[arg(long, default_value_t = 20.0)]
        im_window: f64,
    },
    /// Geometric counting function N_η(x)
    Count {
        #[arg(long)]
        x: f64,
    },
    /// Tube volume from the complex dimensions
    Tube {
        #[arg(long)]
        epsilon: f64,
        #[arg(long, default_value_t = 500)]
        n_terms: usize,
        /// Also compute the volume directly and exit 1 when they differ by more than --tol
        #[arg(long)]
        compare_direct: bool,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Dimension and Minkowski content estimated from the atoms
    DimEst,
}

#[derive(Subcommand, Debug)]
pub enum SpectralAction {
    /// Spectral counting function N_ν(x)
    Count {
        #[arg(long)]
        x: f64,
    },
    /// Compare ζ_ν with ζ_η·ζ; exit 1 when the gap exceeds the bound
    ZetaCheck {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value_t = 1e6)]
        cutoff: f64,
    },
    /// Normalized Weyl remainder (W(x) - N_ν(x)) / x^D
    Weyl {
        #[arg(long, default_value_t = 1e4)]
        x_min: f64,
        #[arg(long, default_value_t = 1e5)]
        x_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        /// Total length |Ω| (default: length of the string as built)
        #[arg(long)]
        omega: Option<f64>,
        /// Dimension D (default: exponent for power strings, else estimated)
        #[arg(long)]
        dimension: Option<f64>,
        /// Minkowski content (default: estimated from counting)
        #[arg(long)]
        minkowski: Option<f64>,
        /// Factor in W(x) = factor·|Ω|·x
        #[arg(long, default_value_t = 1.0)]
        weyl_factor: f64,
    },
    /// Explicit formula for N_η against direct counting (lattice strings)
    Explicit {
        #[arg(long)]
        x: Option<f64>,
        #[arg(long, default_value_t = 500)]
        n_terms: usize,
        /// Profile over [x-min, x-max] at this many log-spaced points instead of one x
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, default_value_t = 2.0)]
        x_min: f64,
        #[arg(long, default_value_t = 1e3)]
        x_max: f64,
        /// Exit 1 when any gap exceeds this
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctionKind {
    /// 1 on [0, ∞)
    UnitStep,
    /// 1 on [a, b)
    Indicator,
    /// sin² bump on [a, b]
    Bump,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OperatorKind {
    /// a(f)(t) = Σ_k f(t - ln k)
    Spectral,
    /// a_p for one prime
    Euler,
    /// ∏_{p ≤ P} a_p
    Product,
}

#[derive(Args, Debug)]
pub struct FunctionArgs {
    #[arg(long, value_enum, default_value_t = FunctionKind::UnitStep)]
    pub function: FunctionKind,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub b: f64,
    /// Right end of the sampling window (left end is min(a, 0))
    #[arg(long, default_value_t = 5.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    /// Weight c of H_c
    #[arg(long, default_value_t = 0.0)]
    pub c: f64,
}

#[derive(Subcommand, Debug)]
pub enum OpAction {
    /// Apply a(f), a_p(f) or a partial Euler product to a test function
    Apply {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long, value_enum, default_value_t = OperatorKind::Spectral)]
        operator: OperatorKind,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 11)]
        p_max: u64,
    },
    /// Möbius inverse Σ μ(n) f(t - ln n); with --roundtrip, check a⁻¹(a f) = f
    Invert {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long, default_value_t = 1000)]
        n_max: u64,
        #[arg(long)]
        roundtrip: bool,
    },
    /// Sampled spectrum {ζ(c+iτ) : T0 ≤ |τ| ≤ T} of the truncated operator
    Spectrum {
        #[arg(long)]
        c: f64,
        #[arg(long = "T")]
        t: f64,
        #[arg(long = "T0", default_value_t = 0.0)]
        t0: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
    },
    /// Phase reports for several c
    Scan {
        #[arg(long, value_delimiter = ',', required = true)]
        c_grid: Vec<f64>,
        #[arg(long = "T")]
        t: f64,
    },
    /// Quasi-invertibility verdict (almost-invertibility when --T0 is given); exit 3 on "no"
    Verdict {
        #[arg(long)]
        c: f64,
        #[arg(long = "T-max")]
        t_max: f64,
        #[arg(long = "T0")]
        t0: Option<f64>,
    },
}
