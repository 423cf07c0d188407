mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use xdproj::{codec, cs, CodecSpec, Error, SensingMatrix, Side, Spark};

use crate::io::Payload;

#[derive(Parser)]
#[command(
    name = "xdproj",
    version,
    about = "Compress, decompress, and analyze signals via cross-dimensional projection",
    after_help = "Input formats are detected by content: XDH hypermatrices (magic \
\"XDH1\"), PGM images (P2/P5), otherwise CSV vectors (one value per line). \
Outputs keep the input's format family.\n\nExit codes: 0 success, 2 usage \
error, 3 parse/input error, 4 shape or dimension error, 5 numeric capacity \
or overflow error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compress a signal to the given target shape
    Compress {
        input: PathBuf,
        output: PathBuf,
        /// Target shape, comma-separated, one entry per signal axis
        #[arg(long, value_delimiter = ',', required = true)]
        target_dims: Vec<usize>,
        /// One-vector system to use
        #[arg(long, default_value_t = Side::Left)]
        side: Side,
    },
    /// Decompress a signal back to the given source shape
    Decompress {
        input: PathBuf,
        output: PathBuf,
        /// Source shape to reconstruct, comma-separated
        #[arg(long, value_delimiter = ',', required = true)]
        source_dims: Vec<usize>,
        #[arg(long, default_value_t = Side::Left)]
        side: Side,
    },
    /// Compress then decompress, reporting the reconstruction error
    Roundtrip {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        target_dims: Vec<usize>,
        #[arg(long, default_value_t = Side::Left)]
        side: Side,
        /// Also write the report to this file, one key=value per line
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Report spark, coherence, and the sparse-recovery bound of a CSV matrix
    Analyze {
        matrix: PathBuf,
        /// Also analyze the Kronecker expansion by an identity of this order
        #[arg(long)]
        kron_s: Option<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    /// Unreadable or malformed input (exit 3).
    Parse(String),
    /// Shape, dimension, or content mismatch (exit 4).
    Shape(String),
    /// Dimension arithmetic overflow or search capacity (exit 5).
    Numeric(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Shape(_) => 4,
            CliError::Numeric(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Shape(m) | CliError::Numeric(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow { .. } | Error::SparkCapacity { .. } => CliError::Numeric(e.to_string()),
            _ => CliError::Shape(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(), // usage errors exit 2, --help/--version exit 0
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Compress {
            input,
            output,
            target_dims,
            side,
        } => run_compress(&input, &output, &target_dims, side),
        Command::Decompress {
            input,
            output,
            source_dims,
            side,
        } => run_decompress(&input, &output, &source_dims, side),
        Command::Roundtrip {
            input,
            target_dims,
            side,
            report,
        } => run_roundtrip(&input, &target_dims, side, report.as_deref()),
        Command::Analyze { matrix, kron_s } => run_analyze(&matrix, kron_s),
    }
}

fn check_arity(payload_order: usize, dims: &[usize], flag: &str) -> Result<(), CliError> {
    if dims.len() != payload_order {
        return Err(CliError::Shape(format!(
            "{flag} has {} entries but the input signal has order {payload_order}",
            dims.len()
        )));
    }
    Ok(())
}

fn ratio(target: &[usize], source: &[usize]) -> f64 {
    let t: f64 = target.iter().map(|&d| d as f64).product();
    let s: f64 = source.iter().map(|&d| d as f64).product();
    t / s
}

fn run_compress(
    input: &std::path::Path,
    output: &std::path::Path,
    target_dims: &[usize],
    side: Side,
) -> Result<(), CliError> {
    let payload = io::read_signal(input)?;
    check_arity(payload.order(), target_dims, "--target-dims")?;
    let source = payload.dims();
    let compressed = match &payload {
        Payload::Vector(x) => Payload::Vector(codec::compress_1d(x, target_dims[0], side)?),
        Payload::Image { pixels, binary } => Payload::Image {
            pixels: codec::compress_2d(pixels, target_dims[0], target_dims[1], side)?,
            binary: *binary,
        },
        Payload::Hyper(h) => {
            let spec = CodecSpec::new(h.dims().to_vec(), target_dims.to_vec(), side)?;
            Payload::Hyper(codec::compress_nd(h, &spec)?)
        }
    };
    io::write_signal(output, &compressed)?;
    println!("compression_ratio={}", ratio(target_dims, &source));
    Ok(())
}

fn run_decompress(
    input: &std::path::Path,
    output: &std::path::Path,
    source_dims: &[usize],
    side: Side,
) -> Result<(), CliError> {
    let payload = io::read_signal(input)?;
    check_arity(payload.order(), source_dims, "--source-dims")?;
    let recovered = match &payload {
        Payload::Vector(y) => Payload::Vector(codec::decompress_1d(y, source_dims[0], side)?),
        Payload::Image { pixels, binary } => Payload::Image {
            pixels: codec::decompress_2d(pixels, source_dims[0], source_dims[1], side)?,
            binary: *binary,
        },
        Payload::Hyper(h) => {
            let spec = CodecSpec::new(source_dims.to_vec(), h.dims().to_vec(), side)?;
            Payload::Hyper(codec::decompress_nd(h, &spec)?)
        }
    };
    io::write_signal(output, &recovered)
}

fn run_roundtrip(
    input: &std::path::Path,
    target_dims: &[usize],
    side: Side,
    report_path: Option<&std::path::Path>,
) -> Result<(), CliError> {
    let payload = io::read_signal(input)?;
    check_arity(payload.order(), target_dims, "--target-dims")?;
    let signal = payload.to_hypermatrix();
    let spec = CodecSpec::new(signal.dims().to_vec(), target_dims.to_vec(), side)?;
    let (_, _, report) = codec::roundtrip(&signal, &spec)?;
    let block = format!(
        "l2_error={}\nrmse={}\ndv_error={}\ncompression_ratio={}\n",
        report.l2_error, report.rmse, report.dv_error, report.compression_ratio
    );
    print!("{block}");
    if let Some(path) = report_path {
        std::fs::write(path, &block)
            .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn spark_field(spark: &Option<Spark>) -> String {
    match spark {
        Some(s) => s.to_string(),
        None => "skipped".to_owned(),
    }
}

fn run_analyze(matrix: &std::path::Path, kron_s: Option<usize>) -> Result<(), CliError> {
    let mat = io::read_csv_matrix(matrix)?;
    let sensing = SensingMatrix::new(mat)?;
    if !sensing.is_wide() {
        eprintln!(
            "warning: matrix is {}x{}; sensing matrices usually have fewer rows than columns",
            sensing.matrix().rows(),
            sensing.matrix().cols()
        );
    }
    let summary = cs::recovery_bound(&sensing);
    println!("spark={}", spark_field(&summary.spark));
    println!("coherence={}", summary.coherence);
    println!("sparsity_bound={}", summary.sparsity_bound);
    match summary.max_guaranteed_k {
        Some(k) => println!("max_guaranteed_k={k}"),
        None => println!("max_guaranteed_k=unbounded"),
    }
    if let Some(s) = kron_s {
        let report = cs::kron_invariance_report(&sensing, s)?;
        println!("kron_s={s}");
        println!("spark_kron={}", spark_field(&report.spark_expanded));
        println!("coherence_kron={}", report.coherence_expanded);
    }
    Ok(())
}
