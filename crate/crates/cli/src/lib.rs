//! `cminor`: build and draw regions, evaluate minors and tiling polynomials, analyse networks,
//! and stream verification reports.
//!
//! Exit codes: 0 on success, 1 on bad input, 2 when a verification fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cminor_algebra::{format_rational, parse_rational, Matrix};
use cminor_minors::{central_minor, contiguous_minor, minor_on, sm_minor, SemiContigSpec, Side, SignedOffset};
use cminor_networks::{response_matrix, well_connected_by_minors, well_connected_by_paths, Network};
use cminor_regions::{build_aztec_diamond, build_aztec_rectangle, build_q, build_tad, render, QParams, Region};
use cminor_tilings::{
    count_tilings, enumerate_tilings, tiling_polynomial_symbolic, tiling_polynomial_value, WeightMap,
    SYMBOLIC_TILING_CAP,
};
use cminor_verify::{
    generic_matrix, network_family, oracle_equivalence, reference_cases, rng, run_parallel, semicontig_specs,
    summarize, symbolic_consistency, verify_condensations, verify_networks, verify_reference_case, verify_semicontig,
    verify_theorem1, SweepBounds, VerificationReport,
};

#[derive(Parser, Debug)]
#[command(name = "cminor", version, about = "Exact checks of circular minors against weighted domino tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build regions.
    #[command(subcommand)]
    Region(RegionCmd),
    /// Draw a region. Cells are shaded by checkerboard class, covering points are dots, and the
    /// lines y=0 and y=n are drawn as guides.
    Render(RenderArgs),
    /// Count or list the domino tilings of a region.
    Tilings(TilingsArgs),
    /// Evaluate one minor of a matrix exactly.
    Minor(MinorArgs),
    /// Tiling polynomial of a region, symbolic or at a matrix's central minors.
    Poly(PolyArgs),
    /// Response matrix and well-connectivity of a circular planar network.
    #[command(subcommand)]
    Network(NetworkCmd),
    /// Stream verification reports as JSON lines; a summary table goes to stderr.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum RegionCmd {
    /// Emit region JSON. Exactly one of --q, --ad, --tad, --rect.
    Build(BuildArgs),
}

#[derive(Args, Debug)]
struct BuildArgs {
    /// Q-region `x,h` (h may be 0+ or 0-); needs --ks and --n.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Block sizes k_1,..,k_s.
    #[arg(long)]
    ks: Option<String>,
    /// Gap sizes t_1,..,t_{s-1}.
    #[arg(long, default_value = "")]
    ts: String,
    /// Strip height.
    #[arg(long)]
    n: Option<i64>,
    /// Build the mirrored region.
    #[arg(long)]
    mirrored: bool,
    /// Aztec diamond `x0,y0,h`.
    #[arg(long, allow_hyphen_values = true)]
    ad: Option<String>,
    /// Truncated diamond `x0,y0,h,n`.
    #[arg(long, allow_hyphen_values = true)]
    tad: Option<String>,
    /// Aztec rectangle `top_x,top_y,nw,ne`.
    #[arg(long, allow_hyphen_values = true)]
    rect: Option<String>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[arg(long)]
    region: PathBuf,
    #[arg(long, conflicts_with = "ascii")]
    svg: bool,
    #[arg(long)]
    ascii: bool,
    /// Strip height: draws y=n and applies the top-line covering rule.
    #[arg(long)]
    n: Option<i64>,
}

#[derive(Args, Debug)]
struct TilingsArgs {
    #[arg(long)]
    region: PathBuf,
    /// Print every tiling as a JSON line (regions up to the enumeration cap only).
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct MinorArgs {
    /// Square matrix JSON: rows of "p/q" strings or integers.
    #[arg(long)]
    matrix: PathBuf,
    /// Contiguous minor `a,b,y`.
    #[arg(long)]
    con: Option<String>,
    /// Central minor `x,y`.
    #[arg(long)]
    cm: Option<String>,
    /// Semicontiguous spec JSON `{a,b,ks,ts,n,side}` with side "SM" or "SMbar".
    #[arg(long)]
    sm: Option<PathBuf>,
    /// Explicit row labels (1-based), with --cols.
    #[arg(long, requires = "cols")]
    rows: Option<String>,
    #[arg(long)]
    cols: Option<String>,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long)]
    region: PathBuf,
    /// Symbolic Laurent polynomial in the v_{x,y}.
    #[arg(long, conflicts_with = "matrix")]
    symbolic: bool,
    /// Strip height for the symbolic covering monomial.
    #[arg(long, requires = "symbolic")]
    n: Option<i64>,
    /// Evaluate with v_{x,y} = CM_{x,y} of this matrix.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum NetworkCmd {
    /// Print the response matrix as JSON.
    Response {
        #[arg(long)]
        net: PathBuf,
    },
    /// Decide well-connectivity; with `both`, disagreement is a verification failure.
    Wellconnected {
        #[arg(long)]
        net: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Minors,
    Paths,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    /// Contiguous minors against truncated diamonds, every (a,b,y) with y <= n/2.
    Thm1,
    /// SM minors against Q-regions.
    Thm2,
    /// SMbar minors against mirrored Q-regions.
    Thm3,
    /// Dodgson, jaw move, recurrence and Kuo, --count checks in total.
    Condense,
    /// Profile DP against enumeration on AD^4 sub-regions.
    Oracle,
    /// Symbolic against numeric tiling polynomials.
    Symbolic,
    /// Minors against paths on the small network family.
    Networks,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Matrix size for thm1/thm2/thm3.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Number of checks for condense/oracle/symbolic.
    #[arg(long, default_value_t = 60)]
    count: usize,
    /// Worker threads; reports keep case order.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 2)]
    s_min: usize,
    #[arg(long, default_value_t = 2)]
    s_max: usize,
    /// Largest block size in thm2/thm3 sweeps.
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    /// Largest gap in thm2/thm3 sweeps.
    #[arg(long, default_value_t = 3)]
    t_max: usize,
    /// Also run the illustrated reference regions (thm2/thm3).
    #[arg(long)]
    reference: bool,
}

/// A failure with its exit code.
struct Failure(i32, String);

fn bad(msg: impl std::fmt::Display) -> Failure {
    Failure(1, msg.to_string())
}

fn ints<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<T>().map_err(|_| bad(format!("{what}: cannot parse {p:?}"))))
        .collect()
}

fn fixed<T: std::str::FromStr + Copy, const N: usize>(s: &str, what: &str) -> Result<[T; N], Failure> {
    let v: Vec<T> = ints(s, what)?;
    v.try_into().map_err(|_| bad(format!("{what}: expected {N} comma-separated values")))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| bad(format!("{}: {e}", path.display())))
}

/// Matrix JSON with entries as "p/q" strings or plain integers.
fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    let raw: Vec<Vec<serde_json::Value>> = read_json(path)?;
    let rows = raw
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| match v {
                    serde_json::Value::String(s) => parse_rational(s).map_err(bad),
                    serde_json::Value::Number(x) if x.is_i64() => parse_rational(&x.to_string()).map_err(bad),
                    other => Err(bad(format!("matrix entry {other} is not an integer or \"p/q\" string"))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = Matrix::from_rows(rows).map_err(bad)?;
    if !m.is_square() {
        return Err(bad(format!("matrix is {}x{}, expected square", m.rows(), m.cols())));
    }
    Ok(m)
}

fn build(args: &BuildArgs) -> Result<Region, Failure> {
    let chosen = [args.q.is_some(), args.ad.is_some(), args.tad.is_some(), args.rect.is_some()];
    if chosen.iter().filter(|&&c| c).count() != 1 {
        return Err(bad("give exactly one of --q, --ad, --tad, --rect"));
    }
    if let Some(q) = &args.q {
        let (x, h) = q.split_once(',').ok_or_else(|| bad("--q expects x,h"))?;
        let x: i64 = x.trim().parse().map_err(|_| bad(format!("--q: bad x {x:?}")))?;
        let h = SignedOffset::parse(h).ok_or_else(|| bad(format!("--q: bad h {h:?}")))?;
        let ks = ints(args.ks.as_deref().ok_or_else(|| bad("--q needs --ks"))?, "--ks")?;
        let ts = ints(&args.ts, "--ts")?;
        let n = args.n.ok_or_else(|| bad("--q needs --n"))?;
        let params = QParams { x, h, ks, ts, n, mirrored: args.mirrored };
        return build_q(&params).map_err(bad);
    }
    if let Some(s) = &args.ad {
        let [x0, y0, h] = fixed::<i64, 3>(s, "--ad")?;
        return Ok(build_aztec_diamond(x0, y0, u64::try_from(h).map_err(|_| bad("--ad: h must be >= 0"))?));
    }
    if let Some(s) = &args.tad {
        let [x0, y0, h, n] = fixed::<i64, 4>(s, "--tad")?;
        return Ok(build_tad(x0, y0, u64::try_from(h).map_err(|_| bad("--tad: h must be >= 0"))?, n));
    }
    let [x, y, nw, ne] = fixed::<i64, 4>(args.rect.as_deref().unwrap_or_default(), "--rect")?;
    let (nw, ne) = (
        u64::try_from(nw).map_err(|_| bad("--rect: sides must be >= 0"))?,
        u64::try_from(ne).map_err(|_| bad("--rect: sides must be >= 0"))?,
    );
    Ok(build_aztec_rectangle(x, y, nw, ne))
}

fn emit_reports(out: &mut dyn Write, err: &mut dyn Write, reports: &[VerificationReport]) -> Result<(), Failure> {
    for r in reports {
        writeln!(out, "{}", r.to_json_line()).map_err(bad)?;
    }
    let s = summarize(reports);
    write!(err, "{}", s.table()).map_err(bad)?;
    if s.all_passed() {
        Ok(())
    } else {
        Err(Failure(2, format!("{} of {} checks failed", s.total - s.passed, s.total)))
    }
}

fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let mut r = rng(args.seed);
    let reports: Vec<VerificationReport> = match args.suite {
        Suite::Thm1 => {
            if args.n == 0 {
                return Err(bad("--n must be positive"));
            }
            let g = generic_matrix(&mut r, args.n);
            let n = args.n as i64;
            let cases: Vec<(i64, i64, usize)> = (1..=n)
                .flat_map(|a| (1..=n).flat_map(move |b| (0..=(n / 2) as usize).map(move |y| (a, b, y))))
                .collect();
            run_parallel(&cases, args.jobs, |&(a, b, y)| verify_theorem1(&g, a, b, y))
                .into_iter()
                .collect::<Result<_, _>>()
                .map_err(bad)?
        }
        Suite::Thm2 | Suite::Thm3 => {
            if args.n == 0 || args.s_min == 0 || args.s_min > args.s_max || args.k_max == 0 || args.t_max == 0 {
                return Err(bad("sweep bounds need n, k-max, t-max >= 1 and 1 <= s-min <= s-max"));
            }
            let side = if args.suite == Suite::Thm2 { Side::Sm } else { Side::SmBar };
            let g = generic_matrix(&mut r, args.n);
            let bounds = SweepBounds { s_min: args.s_min, s_max: args.s_max, k_max: args.k_max, t_max: args.t_max };
            let specs = semicontig_specs(args.n, side, bounds);
            let mut reps: Vec<VerificationReport> = run_parallel(&specs, args.jobs, |s| verify_semicontig(&g, s))
                .into_iter()
                .collect::<Result<_, _>>()
                .map_err(bad)?;
            if args.reference {
                for case in reference_cases().iter().filter(|c| c.params.mirrored == (side == Side::SmBar)) {
                    reps.push(verify_reference_case(&mut r, case).map_err(bad)?);
                }
            }
            reps
        }
        Suite::Condense => verify_condensations(args.seed, args.count).map_err(bad)?,
        Suite::Oracle => oracle_equivalence(&mut r, args.count).map_err(bad)?,
        Suite::Symbolic => symbolic_consistency(&mut r, args.count).map_err(bad)?,
        Suite::Networks => verify_networks(&network_family(args.seed)).map_err(bad)?,
    };
    emit_reports(out, err, &reports)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Region(RegionCmd::Build(args)) => {
            let r = build(&args)?;
            writeln!(out, "{}", serde_json::to_string(&r).map_err(bad)?).map_err(bad)?;
        }
        Command::Render(args) => {
            if args.svg == args.ascii {
                return Err(bad("give exactly one of --svg, --ascii"));
            }
            let r: Region = read_json(&args.region)?;
            let pic = if args.svg { render::svg(&r, args.n) } else { render::ascii(&r, args.n) };
            write!(out, "{pic}").map_err(bad)?;
        }
        Command::Tilings(args) => {
            let r: Region = read_json(&args.region)?;
            if args.list {
                for t in enumerate_tilings(&r, cminor_tilings::ORACLE_CELL_CAP).map_err(bad)? {
                    writeln!(out, "{}", serde_json::to_string(&t).map_err(bad)?).map_err(bad)?;
                }
            } else {
                writeln!(out, "{}", count_tilings(&r)).map_err(bad)?;
            }
        }
        Command::Minor(args) => {
            let m = read_matrix(&args.matrix)?;
            let given = [args.con.is_some(), args.cm.is_some(), args.sm.is_some(), args.rows.is_some()];
            if given.iter().filter(|&&g| g).count() != 1 {
                return Err(bad("give exactly one of --con, --cm, --sm, --rows/--cols"));
            }
            let v = if let Some(s) = &args.con {
                let [a, b, y] = fixed::<i64, 3>(s, "--con")?;
                contiguous_minor(&m, a, b, usize::try_from(y).map_err(|_| bad("--con: y must be >= 0"))?)
            } else if let Some(s) = &args.cm {
                let [x, y] = fixed::<i64, 2>(s, "--cm")?;
                central_minor(&m, x, usize::try_from(y).map_err(|_| bad("--cm: y must be >= 0"))?)
            } else if let Some(p) = &args.sm {
                let spec: SemiContigSpec = read_json(p)?;
                if spec.n != m.rows() {
                    return Err(bad(format!("spec has n={} but the matrix is {}x{}", spec.n, m.rows(), m.rows())));
                }
                sm_minor(&m, &spec)
            } else {
                let rows: Vec<usize> = ints(args.rows.as_deref().unwrap_or_default(), "--rows")?;
                let cols: Vec<usize> = ints(args.cols.as_deref().unwrap_or_default(), "--cols")?;
                let n = m.rows();
                if rows.len() != cols.len() || rows.iter().chain(&cols).any(|&i| i == 0 || i > n) {
                    return Err(bad(format!("--rows/--cols need equally many labels in 1..={n}")));
                }
                minor_on(&m, &rows, &cols)
            }
            .map_err(bad)?;
            writeln!(out, "{}", format_rational(&v)).map_err(bad)?;
        }
        Command::Poly(args) => {
            let r: Region = read_json(&args.region)?;
            if args.symbolic {
                let p = tiling_polynomial_symbolic(&r, args.n, SYMBOLIC_TILING_CAP).map_err(bad)?;
                writeln!(out, "{p}").map_err(bad)?;
            } else {
                let path = args.matrix.as_ref().ok_or_else(|| bad("give --symbolic or --matrix"))?;
                let w = WeightMap::from_matrix(&read_matrix(path)?).map_err(bad)?;
                let v = tiling_polynomial_value(&r, &w).map_err(bad)?;
                writeln!(out, "{}", format_rational(&v)).map_err(bad)?;
            }
        }
        Command::Network(NetworkCmd::Response { net }) => {
            let net: Network = read_json(&net)?;
            let lam = response_matrix(&net).map_err(bad)?;
            writeln!(out, "{}", serde_json::to_string(&lam).map_err(bad)?).map_err(bad)?;
        }
        Command::Network(NetworkCmd::Wellconnected { net, method }) => {
            let net: Network = read_json(&net)?;
            let by_minors = match method {
                Method::Paths => None,
                _ => Some(well_connected_by_minors(&response_matrix(&net).map_err(bad)?).map_err(bad)?),
            };
            let by_paths = match method {
                Method::Minors => None,
                _ => Some(well_connected_by_paths(&net).map_err(bad)?),
            };
            let verdict = serde_json::json!({
                "minors": by_minors.as_ref().map(|t| t.well_connected),
                "first_failure": by_minors.as_ref().and_then(|t| t.first_failure),
                "paths": by_paths,
            });
            writeln!(out, "{verdict}").map_err(bad)?;
            if let (Some(m), Some(p)) = (&by_minors, by_paths) {
                if m.well_connected != p {
                    return Err(Failure(2, "minors and paths disagree".into()));
                }
            }
        }
        Command::Verify(args) => verify(&args, out, err)?,
    }
    Ok(())
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
