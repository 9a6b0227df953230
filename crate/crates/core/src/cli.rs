//! The `rmtdpp` command line: distribution grids, moments, correlation
//! coefficients and samplers.
//!
//! Settings resolve as flags, then `RMTDPP_*` environment variables, then a
//! `key=value` file given by `--config`. Standard output carries data only;
//! progress and wall time go to standard error. Exit code 2 means an invalid
//! configuration, 3 a numerical or sampler failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::airyproc::{self, MultitimeGrid, ProcessPath};
use crate::aztec::{self, AztecKernel};
use crate::error::{Error, Result};
use crate::kernels::hermite_kernel;
use crate::rmtstats::{self, EdgeStats, EnsembleEdge, MomentSummary, StatsConfig};
use crate::samplers::{sample_discretized, Rng};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "rmtdpp", version, about = "Random-matrix eigenvalue statistics and DPP samplers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a distribution on a grid.
    Dist(StatArgs),
    /// Mean, variance, skewness and excess kurtosis.
    Moments(StatArgs),
    /// Correlation coefficient of the two extreme eigenvalues.
    Corr(StatArgs),
    /// Draw a sample.
    Sample(SampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Gue,
    Aztec,
    DrPath,
    AiryProcess,
    Dbm,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// Line-based key=value file with defaults.
    #[arg(long, env = "RMTDPP_CONFIG")]
    pub config: Option<PathBuf>,
    /// csv or json.
    #[arg(long, env = "RMTDPP_FORMAT")]
    pub format: Option<String>,
    /// Output file (standard output when absent).
    #[arg(long, env = "RMTDPP_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, env = "RMTDPP_SEED")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct StatArgs {
    /// Statistic name, e.g. extreme-pdf or bulk-gap.
    #[arg(long, env = "RMTDPP_STAT")]
    pub stat: Option<String>,
    /// soft, hard, bulk or gue.
    #[arg(long, env = "RMTDPP_EDGE")]
    pub edge: Option<String>,
    #[arg(long, env = "RMTDPP_ALPHA")]
    pub alpha: Option<usize>,
    /// Matrix size for the finite GUE.
    #[arg(long = "N", env = "RMTDPP_N")]
    pub big_n: Option<usize>,
    /// start:step:stop
    #[arg(long, env = "RMTDPP_GRID", allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Quadrature order of standalone Fredholm determinants.
    #[arg(long, env = "RMTDPP_ORDER")]
    pub order: Option<usize>,
    #[arg(long, env = "RMTDPP_RTOL")]
    pub rtol: Option<f64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[arg(value_enum)]
    pub target: Target,
    /// Aztec diamond order.
    #[arg(long = "n", env = "RMTDPP_AZTEC_N")]
    pub small_n: Option<usize>,
    /// Matrix size (gue, dbm).
    #[arg(long = "N", env = "RMTDPP_N")]
    pub big_n: Option<usize>,
    /// Times as start:step:stop (airy-process, dbm).
    #[arg(long = "t", env = "RMTDPP_TIMES", allow_hyphen_values = true)]
    pub times: Option<String>,
    /// Number of spatial cells.
    #[arg(long, env = "RMTDPP_GRID")]
    pub grid: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run(args: impl IntoIterator<Item = String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let start = Instant::now();
    match execute(cli.command) {
        Ok(()) => {
            eprintln!("wall_time_s={:.3}", start.elapsed().as_secs_f64());
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidConfig(_) | Error::Parse(_) | Error::UnsupportedVariant | Error::UnsupportedOrder(_) => 2,
        _ => 3,
    }
}

fn execute(cmd: Command) -> Result<()> {
    let (out, text) = match cmd {
        Command::Dist(a) => {
            let cfg = StatConfig::resolve(a)?;
            (cfg.out.clone(), cmd_dist(&cfg)?)
        }
        Command::Moments(a) => {
            let cfg = StatConfig::resolve(a)?;
            (cfg.out.clone(), cmd_moments(&cfg)?)
        }
        Command::Corr(a) => {
            let cfg = StatConfig::resolve(a)?;
            (cfg.out.clone(), cmd_corr(&cfg)?)
        }
        Command::Sample(a) => {
            let cfg = SampleConfig::resolve(a)?;
            (cfg.out.clone(), cmd_sample(&cfg)?)
        }
    };
    // nothing is written unless the whole computation succeeded
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `key=value` lines; blank lines and `#` comments are ignored.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("config line {}: expected key=value", no + 1)))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn load_file(common: &Common) -> Result<BTreeMap<String, String>> {
    match &common.config {
        None => Ok(BTreeMap::new()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::InvalidConfig(format!("cannot read {}: {e}", p.display())))?;
            parse_config_file(&text)
        }
    }
}

fn fill<T: std::str::FromStr>(slot: Option<T>, file: &BTreeMap<String, String>, key: &str) -> Result<Option<T>> {
    if slot.is_some() {
        return Ok(slot);
    }
    file.get(key)
        .map(|v| v.parse().map_err(|_| Error::Parse(format!("config key `{key}`: bad value `{v}`"))))
        .transpose()
}

/// `start:step:stop`, inclusive of `stop` up to rounding.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::InvalidConfig(format!("grid `{spec}` is not start:step:stop"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums: Vec<f64> = parts.iter().map(|p| p.trim().parse::<f64>().map_err(|_| bad())).collect::<Result<_>>()?;
    let (start, step, stop) = (nums[0], nums[1], nums[2]);
    if !(start.is_finite() && step.is_finite() && stop.is_finite()) || step <= 0.0 || stop < start {
        return Err(Error::InvalidConfig(format!("grid `{spec}` is empty")));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    match seed {
        Some(s) if s != 0 => s,
        _ => {
            use std::hash::{BuildHasher, Hasher};
            let mut h = std::collections::hash_map::RandomState::new().build_hasher();
            h.write_u128(std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_nanos()).unwrap_or(0));
            let s = h.finish().max(1);
            eprintln!("seed={s}");
            s
        }
    }
}

fn parse_format(f: Option<String>) -> Result<Format> {
    match f.as_deref() {
        None | Some("csv") => Ok(Format::Csv),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(Error::InvalidConfig(format!("unknown format `{other}`"))),
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Fully resolved settings of `dist`, `moments` and `corr`.
#[derive(Debug, Clone)]
pub struct StatConfig {
    pub stat: Option<String>,
    pub edge: EnsembleEdge,
    pub grid: Option<Vec<f64>>,
    pub grid_spec: Option<String>,
    pub stats: StatsConfig,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl StatConfig {
    pub fn resolve(a: StatArgs) -> Result<Self> {
        let file = load_file(&a.common)?;
        let stat = fill(a.stat, &file, "stat")?;
        let edge_name = fill(a.edge, &file, "edge")?.unwrap_or_else(|| "soft".into());
        let alpha = fill(a.alpha, &file, "alpha")?.unwrap_or(0);
        let big_n = fill(a.big_n, &file, "N")?;
        let grid_spec: Option<String> = fill(a.grid, &file, "grid")?;
        let order: Option<usize> = fill(a.order, &file, "order")?;
        let rtol: Option<f64> = fill(a.rtol, &file, "rtol")?;
        let format = parse_format(fill(a.common.format, &file, "format")?)?;
        let out = fill(a.common.out, &file, "out")?;
        let edge = match edge_name.as_str() {
            "soft" => EnsembleEdge::Soft,
            "hard" => EnsembleEdge::Hard { alpha },
            "bulk" => EnsembleEdge::Bulk,
            "gue" => EnsembleEdge::FiniteGue {
                n: big_n.ok_or_else(|| Error::InvalidConfig("--edge gue needs --N".into()))?,
            },
            other => return Err(Error::InvalidConfig(format!("unknown edge `{other}`"))),
        };
        let mut stats = StatsConfig::default();
        if let Some(m) = order {
            if m < 2 {
                return Err(Error::InvalidConfig("order must be >= 2".into()));
            }
            stats.order = m;
        }
        if let Some(r) = rtol {
            if !(r > 0.0) {
                return Err(Error::InvalidConfig("rtol must be positive".into()));
            }
            stats.rtol = r;
        }
        let grid = grid_spec.as_deref().map(parse_grid).transpose()?;
        Ok(Self {
            stat,
            edge,
            grid,
            grid_spec,
            stats,
            format,
            out,
        })
    }

    fn meta(&self, command: &str) -> Vec<(&'static str, String)> {
        let mut m = vec![
            ("rmtdpp", VERSION.to_string()),
            ("command", command.to_string()),
            ("edge", self.edge.label()),
            ("order", self.stats.order.to_string()),
            ("rtol", format!("{:e}", self.stats.rtol)),
        ];
        if let Some(s) = &self.stat {
            m.insert(2, ("stat", s.clone()));
        }
        if let Some(g) = &self.grid_spec {
            m.push(("grid", g.clone()));
        }
        m
    }
}

fn csv_header(meta: &[(&str, String)]) -> String {
    let mut s = String::new();
    for (k, v) in meta {
        let _ = writeln!(s, "# {k}={v}");
    }
    s
}

fn json_meta(meta: &[(&str, String)]) -> Value {
    Value::Object(meta.iter().map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect())
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

pub fn cmd_dist(cfg: &StatConfig) -> Result<String> {
    let stat = cfg.stat.as_deref().ok_or_else(|| Error::InvalidConfig("dist needs --stat".into()))?;
    let grid = cfg.grid.as_ref().ok_or_else(|| Error::InvalidConfig("dist needs --grid".into()))?;
    let st = EdgeStats::with_config(cfg.edge, cfg.stats);
    let m = cfg.stats.order;
    let one: Box<dyn Fn(f64) -> Result<f64>> = match stat {
        "extreme-cdf" => Box::new(|s| st.extreme_cdf(s)),
        "extreme-pdf" => Box::new(|s| st.extreme_pdf(s)),
        "second-cdf" => Box::new(|s| st.second_cdf(s)),
        "second-pdf" => Box::new(|s| st.second_pdf(s)),
        "bulk-gap-ccdf" => Box::new(move |s| rmtstats::bulk_gap_ccdf_with_order(s, m)),
        "bulk-gap-pdf" => Box::new(move |s| rmtstats::bulk_gap_pdf_with_order(s, m)),
        "spacing-pdf" => Box::new(|s| st.spacing_pdf(s)),
        "spacing-cdf" => Box::new(|s| st.spacing_cdf(s)),
        "joint-pdf" => Box::new(|_| Ok(f64::NAN)),
        other => return Err(Error::InvalidConfig(format!("unknown statistic `{other}`"))),
    };
    let mut rows: Vec<Vec<f64>> = Vec::new();
    if stat == "joint-pdf" {
        for &x1 in grid {
            for &x2 in grid {
                rows.push(vec![x1, x2, st.joint_pdf(&[x1, x2])?]);
            }
        }
    } else {
        for (i, &s) in grid.iter().enumerate() {
            rows.push(vec![s, one(s)?]);
            if grid.len() >= 50 && (i + 1) % 50 == 0 {
                eprintln!("{}/{} grid points", i + 1, grid.len());
            }
        }
    }
    let columns: &[&str] = if stat == "joint-pdf" { &["x1", "x2", "value"] } else { &["s", "value"] };
    let meta = cfg.meta("dist");
    Ok(match cfg.format {
        Format::Csv => {
            let mut s = csv_header(&meta);
            let _ = writeln!(s, "{}", columns.join(","));
            for r in &rows {
                let _ = writeln!(s, "{}", r.iter().map(|&x| num(x)).collect::<Vec<_>>().join(","));
            }
            s
        }
        Format::Json => json_text(&json!({ "meta": json_meta(&meta), "columns": columns, "rows": rows })),
    })
}

fn summary_output(cfg: &StatConfig, command: &str, fields: &[(&str, f64)]) -> String {
    let meta = cfg.meta(command);
    match cfg.format {
        Format::Csv => {
            let mut s = csv_header(&meta);
            s.push_str("quantity,value\n");
            for (k, v) in fields {
                let _ = writeln!(s, "{k},{}", num(*v));
            }
            s
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("meta".into(), json_meta(&meta));
            for (k, v) in fields {
                obj.insert(k.to_string(), json!(v));
            }
            json_text(&Value::Object(obj))
        }
    }
}

pub fn cmd_moments(cfg: &StatConfig) -> Result<String> {
    let stat = cfg.stat.as_deref().unwrap_or("extreme");
    let st = EdgeStats::with_config(cfg.edge, cfg.stats);
    eprintln!("computing {stat} moments for {}", cfg.edge.label());
    let m: MomentSummary = match stat {
        "extreme" => st.extreme_moments()?,
        "second" => st.second_moments()?,
        "spacing" => st.spacing_moments()?,
        "bulk-gap" => rmtstats::bulk_gap_moments(cfg.stats.rtol)?,
        other => return Err(Error::InvalidConfig(format!("unknown moment statistic `{other}`"))),
    };
    Ok(summary_output(
        cfg,
        "moments",
        &[
            ("mean", m.mean),
            ("variance", m.variance),
            ("skewness", m.skewness),
            ("excess_kurtosis", m.excess_kurtosis),
            ("est_error", m.est_error),
        ],
    ))
}

pub fn cmd_corr(cfg: &StatConfig) -> Result<String> {
    eprintln!("computing correlation coefficient for {}", cfg.edge.label());
    let (rho, err) = EdgeStats::with_config(cfg.edge, cfg.stats).corr_coeff()?;
    Ok(summary_output(cfg, "corr", &[("rho", rho), ("est_error", err)]))
}

/// Fully resolved settings of `sample`.
#[derive(Debug, Clone)]
pub struct SampleConfig {
    pub target: Target,
    pub small_n: usize,
    pub big_n: usize,
    pub times: Vec<f64>,
    pub times_spec: String,
    pub cells: usize,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl SampleConfig {
    pub fn resolve(a: SampleArgs) -> Result<Self> {
        let file = load_file(&a.common)?;
        let small_n = fill(a.small_n, &file, "n")?.unwrap_or(10);
        let big_n = fill(a.big_n, &file, "N")?.unwrap_or(match a.target {
            Target::Dbm => 200,
            _ => 5,
        });
        let times_spec = fill(a.times, &file, "t")?.unwrap_or_else(|| "0:0.5:5".into());
        let times = parse_grid(&times_spec)?;
        let cells = match fill(a.grid, &file, "grid")? {
            None => match a.target {
                Target::Gue => 400,
                _ => airyproc::DEFAULT_CELLS,
            },
            Some(g) => g.parse().map_err(|_| Error::InvalidConfig(format!("sample --grid takes a cell count, got `{g}`")))?,
        };
        if small_n == 0 || big_n == 0 {
            return Err(Error::InvalidConfig("sizes must be positive".into()));
        }
        let seed = resolve_seed(fill(a.common.seed, &file, "seed")?);
        Ok(Self {
            target: a.target,
            small_n,
            big_n,
            times,
            times_spec,
            cells,
            seed,
            format: parse_format(fill(a.common.format, &file, "format")?)?,
            out: fill(a.common.out, &file, "out")?,
        })
    }

    fn meta(&self) -> Vec<(&'static str, String)> {
        let target = self.target.to_possible_value().expect("plain variant").get_name().to_string();
        let mut m = vec![("rmtdpp", VERSION.to_string()), ("command", "sample".into()), ("target", target)];
        match self.target {
            Target::Aztec | Target::DrPath => m.push(("n", self.small_n.to_string())),
            Target::Gue => {
                m.push(("N", self.big_n.to_string()));
                m.push(("grid", self.cells.to_string()));
            }
            Target::AiryProcess => {
                m.push(("t", self.times_spec.clone()));
                m.push(("grid", self.cells.to_string()));
            }
            Target::Dbm => {
                m.push(("N", self.big_n.to_string()));
                m.push(("t", self.times_spec.clone()));
            }
        }
        m.push(("seed", self.seed.to_string()));
        m
    }
}

fn path_output(cfg: &SampleConfig, p: &ProcessPath) -> String {
    let meta = cfg.meta();
    match cfg.format {
        Format::Csv => {
            let without_seed: Vec<_> = meta.into_iter().filter(|(k, _)| *k != "seed").collect();
            csv_header(&without_seed) + &p.to_csv(cfg.seed)
        }
        Format::Json => json_text(&json!({ "meta": json_meta(&meta), "t": p.times, "value": p.values })),
    }
}

pub fn cmd_sample(cfg: &SampleConfig) -> Result<String> {
    let mut rng = Rng::new(cfg.seed);
    let meta = cfg.meta();
    Ok(match cfg.target {
        Target::Gue => {
            let n = cfg.big_n;
            let half = (2.0 * n as f64).sqrt() + 8.0;
            let pts = sample_discretized(hermite_kernel(n).as_ref(), -half, half, cfg.cells, &mut rng)?;
            match cfg.format {
                Format::Csv => {
                    let mut s = csv_header(&meta) + "index,eigenvalue\n";
                    for (i, x) in pts.iter().enumerate() {
                        let _ = writeln!(s, "{i},{}", num(*x));
                    }
                    s
                }
                Format::Json => json_text(&json!({ "meta": json_meta(&meta), "eigenvalues": pts })),
            }
        }
        Target::Aztec => {
            let t = aztec::sample_tiling(cfg.small_n, &mut rng)?;
            match cfg.format {
                Format::Csv => csv_header(&meta) + &t.to_text(),
                Format::Json => json_text(&json!({ "meta": json_meta(&meta), "tiling": t })),
            }
        }
        Target::DrPath => {
            let p = AztecKernel::new(cfg.small_n)?.sample_top_dr_path(&mut rng)?;
            match cfg.format {
                Format::Csv => {
                    let mut s = csv_header(&meta) + "kind,x0,y0,x1,y1\n";
                    for seg in &p.segments {
                        let kind = serde_json::to_value(seg.kind).expect("kind serializes");
                        let _ = writeln!(s, "{},{},{},{},{}", kind.as_str().unwrap_or("?"), seg.start[0], seg.start[1], seg.end[0], seg.end[1]);
                    }
                    s
                }
                Format::Json => json_text(&json!({ "meta": json_meta(&meta), "segments": p.segments })),
            }
        }
        Target::AiryProcess => {
            let (lo, hi) = airyproc::DEFAULT_WINDOW;
            let grid = MultitimeGrid::new(&cfg.times, lo, hi, cfg.cells)?;
            eprintln!("building {0}x{0} block kernel", grid.dim());
            let k = airyproc::build_block_kernel(&grid);
            path_output(cfg, &airyproc::sample_airy_path(&k, &mut rng)?)
        }
        Target::Dbm => path_output(cfg, &airyproc::simulate_dbm(cfg.big_n, &cfg.times, &mut rng)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("-6:0.05:2").unwrap().len(), 161);
        assert_eq!(parse_grid("0:1:0").unwrap(), vec![0.0]);
        assert!(parse_grid("1:0.1:0").is_err());
        assert!(parse_grid("0:0:1").is_err());
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("a:1:2").is_err());
    }

    #[test]
    fn config_file_parsing() {
        let m = parse_config_file("# defaults\nedge = hard\n\nalpha=2\n").unwrap();
        assert_eq!(m["edge"], "hard");
        assert_eq!(m["alpha"], "2");
        assert!(parse_config_file("novalue").is_err());
    }

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg");
        std::fs::write(&path, "edge=hard\nalpha=2\norder=30\n").unwrap();
        let args = StatArgs {
            edge: Some("soft".into()),
            common: Common {
                config: Some(path),
                ..Default::default()
            },
            ..Default::default()
        };
        let cfg = StatConfig::resolve(args).unwrap();
        assert_eq!(cfg.edge, EnsembleEdge::Soft);
        assert_eq!(cfg.stats.order, 30);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["rmtdpp", "dist", "--stat", "extreme-pdf", "--grid", "1:0.1:0"].map(String::from)), 2);
        assert_eq!(run(["rmtdpp", "dist", "--stat", "nope", "--grid", "0:1:1"].map(String::from)), 2);
        assert_eq!(run(["rmtdpp", "moments", "--stat", "extreme", "--edge", "bulk"].map(String::from)), 2);
        assert_eq!(run(["rmtdpp", "frobnicate"].map(String::from)), 2);
    }

    #[test]
    fn dist_rows_and_header() {
        let args = StatArgs {
            stat: Some("extreme-pdf".into()),
            grid: Some("-2:0.5:0".into()),
            ..Default::default()
        };
        let text = cmd_dist(&StatConfig::resolve(args).unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# rmtdpp="));
        assert!(lines.contains(&"# stat=extreme-pdf"));
        let data: Vec<&str> = lines.iter().copied().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(data[0], "s,value");
        assert_eq!(data.len(), 6);
        let v: f64 = data[1].split(',').nth(1).unwrap().parse().unwrap();
        assert!((v - rmtstats::extreme_pdf(EnsembleEdge::Soft, -2.0).unwrap()).abs() < 1e-14);
    }
}
