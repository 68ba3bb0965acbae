//! Command-line front end.
//!
//! Subcommands: `nu`, `counts`, `soares`, `subvariety`, `verify`, `sweep`.
//! Reports are emitted as json (default), csv, or a plain table; every
//! integer is printed in full decimal. Exit codes: 0 success, 1
//! verification failure, 2 usage or spec-file error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::consistency::{self, CheckReport, EllPolicy, SweepRange};
use crate::error::Error;
use crate::invariants::{self, FoliationSpec, SingularComponent};
use crate::jsonnum;
use crate::subvariety::{self, SubvarietyPair};
use crate::symfun::MultiDegree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "folcensus",
    version,
    about = "Exact singularity counts for foliations by curves with positive-dimensional singular components"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format for the emitted report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Contribution of one singular component to the singularity census.
    Nu {
        /// Ambient projective dimension (>= 3).
        #[arg(long)]
        n: u32,
        /// Degree of the foliation (>= 1).
        #[arg(long)]
        k: u32,
        /// Multidegree of the component, comma separated (e.g. 1,2).
        #[arg(long)]
        w: String,
        /// Order of vanishing along the exceptional divisor.
        #[arg(long)]
        ell: u32,
    },
    /// All blowup counts for one component, or a full report from a spec file.
    Counts {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        ell: Option<u32>,
        /// Embedded-point count for the component (input, not computed).
        #[arg(long)]
        embedded: Option<u64>,
        /// JSON spec file; replaces the flag parameters.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Singularity count on an invariant complete intersection.
    Soares {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Degrees cutting the subvariety, comma separated; the codimension
        /// is their number.
        #[arg(long)]
        v: String,
    },
    /// Counts on an invariant subvariety containing the singular component,
    /// and the bound for isolated singularities off the component.
    Subvariety {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        /// Multidegree of the singular component W (codimension d).
        #[arg(long)]
        w: Option<String>,
        /// Multidegree of the invariant subvariety V (codimension m < d).
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        ell: Option<u32>,
        /// Embedded-point count off W (input, not computed).
        #[arg(long)]
        embedded: Option<u64>,
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Run the exact-identity verification suite.
    Verify {
        /// Sweep preset: default or quick.
        #[arg(long, default_value = "default")]
        preset: String,
        /// Run only the named checks (repeatable).
        #[arg(long)]
        check: Vec<String>,
    },
    /// Evaluate the counts over a parameter grid, one row per cell.
    Sweep {
        #[arg(long, default_value = "default")]
        preset: String,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        d_min: Option<u32>,
        #[arg(long)]
        d_max: Option<u32>,
        #[arg(long)]
        k_min: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long)]
        max_entry: Option<u32>,
        /// Orders of vanishing per k: "all" (0..=k), "k-minus-1", or a
        /// fixed integer.
        #[arg(long)]
        ell_policy: Option<String>,
    },
}

/// Parses argv, dispatches, writes the report to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn run<I, W, E>(argv: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = String>,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or("invalid arguments");
                let _ = writeln!(err, "{first}");
                2
            } else {
                // --help / --version
                let _ = write!(out, "{e}");
                0
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<i32, Error> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Nu { n, k, w, ell } => {
            let w = parse_multidegree(&w, "w")?;
            let spec = FoliationSpec::new(
                n,
                k,
                vec![SingularComponent {
                    center: w,
                    ell,
                    embedded_points: None,
                }],
            )?;
            let c = &spec.components()[0];
            let value = NuOut {
                nu: invariants::nu(spec.n(), spec.k(), &c.center, c.ell),
            };
            emit(out, format, &value)?;
            Ok(0)
        }
        Cmd::Counts {
            n,
            k,
            w,
            ell,
            embedded,
            spec,
        } => {
            if let Some(path) = spec {
                let loaded = load_spec(&path)?;
                let fol = loaded.foliation.ok_or_else(|| Error::SpecFile {
                    path: path.display().to_string(),
                    message: "no components section for the counts command".into(),
                })?;
                emit(out, format, &invariants::report(&fol))?;
                return Ok(0);
            }
            let n = require(n, "n")?;
            let k = require(k, "k")?;
            let w = parse_multidegree(&require(w, "w")?, "w")?;
            let ell = require(ell, "ell")?;
            let spec = FoliationSpec::new(
                n,
                k,
                vec![SingularComponent {
                    center: w,
                    ell,
                    embedded_points: embedded,
                }],
            )?;
            let c = &spec.components()[0];
            let nu = invariants::nu(n, k, &c.center, c.ell);
            let value = CountsOut {
                blowup_total: invariants::count_blowup_total(n, k, &c.center, c.ell),
                exceptional: invariants::count_exceptional(n, k, &c.center, c.ell),
                isolated_sum: invariants::isolated_sum(&spec),
                baum_bott: invariants::baum_bott(n, k),
                milnor: embedded.map(|q| invariants::milnor_contribution(&nu, &BigInt::from(q))),
            };
            emit(out, format, &value)?;
            Ok(0)
        }
        Cmd::Soares { n, k, v } => {
            let v = parse_multidegree(&v, "v")?;
            let codim = v.len() as u32;
            if codim > n.saturating_sub(1) {
                return Err(Error::invalid(
                    "v",
                    format!(
                        "codimension {codim} must be <= n-1 = {}",
                        n.saturating_sub(1)
                    ),
                ));
            }
            if n < 2 {
                return Err(Error::invalid("n", "require n >= 2"));
            }
            if k < 1 {
                return Err(Error::invalid("k", "require k >= 1"));
            }
            let value = SoaresOut {
                soares: subvariety::soares_count(n, k, codim, v.degrees()),
            };
            emit(out, format, &value)?;
            Ok(0)
        }
        Cmd::Subvariety {
            n,
            k,
            w,
            v,
            ell,
            embedded,
            spec,
        } => {
            let pair = if let Some(path) = spec {
                let loaded = load_spec(&path)?;
                loaded.pair.ok_or_else(|| Error::SpecFile {
                    path: path.display().to_string(),
                    message: "no pair section for the subvariety command".into(),
                })?
            } else {
                let n = require(n, "n")?;
                let k = require(k, "k")?;
                let w = parse_multidegree(&require(w, "w")?, "w")?;
                let v = parse_multidegree(&require(v, "v")?, "v")?;
                let ell = require(ell, "ell")?;
                SubvarietyPair::new(n, k, w, v, ell, embedded)?
            };
            let report = subvariety::report(&pair);
            emit(out, format, &report)?;
            Ok(0)
        }
        Cmd::Verify { preset, check } => {
            let range = preset_range(&preset)?;
            let reports = if check.is_empty() {
                consistency::run_suite(&range)?
            } else {
                check
                    .iter()
                    .map(|name| consistency::run_check(name, &range))
                    .collect::<Result<Vec<_>, _>>()?
            };
            emit_verify(out, format, &reports)?;
            Ok(if reports.iter().all(CheckReport::passed) {
                0
            } else {
                1
            })
        }
        Cmd::Sweep {
            preset,
            n_min,
            n_max,
            d_min,
            d_max,
            k_min,
            k_max,
            max_entry,
            ell_policy,
        } => {
            let mut range = preset_range(&preset)?;
            if let Some(v) = n_min {
                range.n_min = v;
            }
            if let Some(v) = n_max {
                range.n_max = v;
            }
            if let Some(v) = d_min {
                range.d_min = v;
            }
            if let Some(v) = d_max {
                range.d_max = v;
            }
            if let Some(v) = k_min {
                range.k_min = v;
            }
            if let Some(v) = k_max {
                range.k_max = v;
            }
            if let Some(v) = max_entry {
                range.max_entry = v;
            }
            if let Some(p) = ell_policy {
                range.ell_policy = parse_ell_policy(&p)?;
            }
            range.validate()?;
            emit_sweep(out, format, &range)?;
            Ok(0)
        }
    }
}

fn require<T>(v: Option<T>, field: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::invalid(field, "required unless --spec is given"))
}

fn parse_multidegree(s: &str, field: &str) -> Result<MultiDegree, Error> {
    let degrees = s
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::invalid(field, format!("'{part}' is not a positive integer")))
        })
        .collect::<Result<Vec<u32>, Error>>()?;
    MultiDegree::new(degrees).map_err(|_| Error::invalid(field, "entries must be >= 1"))
}

fn parse_ell_policy(s: &str) -> Result<EllPolicy, Error> {
    match s {
        "all" => Ok(EllPolicy::UpToK),
        "k-minus-1" => Ok(EllPolicy::KMinusOne),
        other => other.parse::<u32>().map(EllPolicy::Fixed).map_err(|_| {
            Error::invalid("ell-policy", "expected 'all', 'k-minus-1', or an integer")
        }),
    }
}

fn preset_range(preset: &str) -> Result<SweepRange, Error> {
    match preset {
        "default" => Ok(consistency::default_range()),
        "quick" => Ok(consistency::quick_range()),
        other => Err(Error::invalid(
            "preset",
            format!("unknown preset '{other}' (expected default or quick)"),
        )),
    }
}

// ---------------------------------------------------------------------------
// spec files

/// Versioned spec file. `n` and `k` are shared by the component list and
/// the subvariety pair; unknown fields are rejected.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    #[serde(default = "default_schema")]
    schema: u32,
    n: u32,
    k: u32,
    #[serde(default)]
    components: Option<Vec<SpecComponent>>,
    #[serde(default)]
    pair: Option<SpecPair>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecComponent {
    w: Vec<u32>,
    ell: u32,
    #[serde(default)]
    embedded_points: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecPair {
    w: Vec<u32>,
    v: Vec<u32>,
    ell: u32,
    #[serde(default)]
    embedded_off_w: Option<u64>,
}

fn default_schema() -> u32 {
    1
}

/// A validated spec file: a foliation spec, a subvariety pair, or both.
pub struct LoadedSpec {
    pub foliation: Option<FoliationSpec>,
    pub pair: Option<SubvarietyPair>,
}

/// Reads and validates a JSON spec file.
pub fn load_spec(path: &Path) -> Result<LoadedSpec, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::SpecFile {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let file: SpecFile = serde_json::from_str(&text).map_err(|e| Error::SpecFile {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    if file.schema != 1 {
        return Err(Error::SpecFile {
            path: path.display().to_string(),
            message: format!("unsupported schema version {}", file.schema),
        });
    }
    if file.components.is_none() && file.pair.is_none() {
        return Err(Error::SpecFile {
            path: path.display().to_string(),
            message: "spec has neither components nor pair".into(),
        });
    }
    let foliation = file
        .components
        .map(|comps| {
            let components = comps
                .into_iter()
                .map(|c| {
                    Ok(SingularComponent {
                        center: MultiDegree::new(c.w)?,
                        ell: c.ell,
                        embedded_points: c.embedded_points,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            FoliationSpec::new(file.n, file.k, components)
        })
        .transpose()?;
    let pair = file
        .pair
        .map(|p| {
            SubvarietyPair::new(
                file.n,
                file.k,
                MultiDegree::new(p.w)?,
                MultiDegree::new(p.v)?,
                p.ell,
                p.embedded_off_w,
            )
        })
        .transpose()?;
    Ok(LoadedSpec { foliation, pair })
}

// ---------------------------------------------------------------------------
// output

#[derive(Serialize)]
struct NuOut {
    #[serde(serialize_with = "jsonnum::ser")]
    nu: BigInt,
}

#[derive(Serialize)]
struct CountsOut {
    #[serde(serialize_with = "jsonnum::ser")]
    blowup_total: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    exceptional: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    isolated_sum: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    baum_bott: BigInt,
    #[serde(
        serialize_with = "jsonnum::ser_opt",
        skip_serializing_if = "Option::is_none"
    )]
    milnor: Option<BigInt>,
}

#[derive(Serialize)]
struct SoaresOut {
    #[serde(serialize_with = "jsonnum::ser")]
    soares: BigInt,
}

/// Flattens a JSON value into (path, scalar) rows for the csv and table
/// formats.
fn flatten(prefix: &str, v: &serde_json::Value, out: &mut Vec<(String, String)>) {
    match v {
        serde_json::Value::Object(map) => {
            for (key, val) in map {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                flatten(&path, val, out);
            }
        }
        serde_json::Value::Array(items) => {
            for (i, val) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), val, out);
            }
        }
        serde_json::Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn emit<W: Write, T: Serialize>(out: &mut W, format: Format, value: &T) -> Result<(), Error> {
    match format {
        Format::Json => {
            let text = serde_json::to_string(value).expect("report serializes");
            writeln!(out, "{text}")?;
        }
        Format::Csv => {
            let json = serde_json::to_value(value).expect("report serializes");
            let mut rows = Vec::new();
            flatten("", &json, &mut rows);
            let mut writer = csv::Writer::from_writer(vec![]);
            writer
                .write_record(rows.iter().map(|(k, _)| k.as_str()))
                .and_then(|_| writer.write_record(rows.iter().map(|(_, v)| v.as_str())))
                .map_err(|e| Error::invalid("output", e.to_string()))?;
            let data = writer
                .into_inner()
                .map_err(|e| Error::invalid("output", e.to_string()))?;
            out.write_all(&data)?;
        }
        Format::Table => {
            let json = serde_json::to_value(value).expect("report serializes");
            let mut rows = Vec::new();
            flatten("", &json, &mut rows);
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in rows {
                writeln!(out, "{k:<width$}  {v}")?;
            }
        }
    }
    Ok(())
}

fn emit_verify<W: Write>(
    out: &mut W,
    format: Format,
    reports: &[CheckReport],
) -> Result<(), Error> {
    match format {
        Format::Json => {
            let text = serde_json::to_string(reports).expect("report serializes");
            writeln!(out, "{text}")?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(vec![]);
            writer
                .write_record(["check", "status", "instances", "failures"])
                .map_err(|e| Error::invalid("output", e.to_string()))?;
            for r in reports {
                writer
                    .write_record([
                        r.name.as_str(),
                        if r.passed() { "pass" } else { "fail" },
                        &r.instances.to_string(),
                        &r.failures.len().to_string(),
                    ])
                    .map_err(|e| Error::invalid("output", e.to_string()))?;
            }
            let data = writer
                .into_inner()
                .map_err(|e| Error::invalid("output", e.to_string()))?;
            out.write_all(&data)?;
        }
        Format::Table => {
            for r in reports {
                if r.passed() {
                    writeln!(out, "check {}: pass ({} instances)", r.name, r.instances)?;
                } else {
                    writeln!(
                        out,
                        "check {}: FAIL ({} of {} instances)",
                        r.name,
                        r.failures.len(),
                        r.instances
                    )?;
                    for f in r.failures.iter().take(5) {
                        writeln!(out, "  {} : {} != {}", f.input, f.lhs, f.rhs)?;
                    }
                    if r.failures.len() > 5 {
                        writeln!(out, "  ... {} more", r.failures.len() - 5)?;
                    }
                }
                for note in &r.diagnostics {
                    writeln!(out, "  note: {note}")?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SweepRow {
    n: u32,
    d: u32,
    w: Vec<u32>,
    #[serde(serialize_with = "jsonnum::ser")]
    deg_w: BigInt,
    k: u32,
    ell: u32,
    #[serde(serialize_with = "jsonnum::ser")]
    nu: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    blowup_total: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    exceptional: BigInt,
    #[serde(serialize_with = "jsonnum::ser")]
    baum_bott: BigInt,
}

fn sweep_rows(range: &SweepRange) -> impl Iterator<Item = SweepRow> + '_ {
    let mut cells: Vec<(u32, MultiDegree, u32, u32)> = Vec::new();
    for n in range.n_min..=range.n_max {
        for d in range.d_min..=range.d_max.min(n - 1) {
            for w in consistency::multidegrees(d, range.max_entry) {
                for k in range.k_min..=range.k_max {
                    for ell in range.ell_policy.values(k) {
                        cells.push((n, w.clone(), k, ell));
                    }
                }
            }
        }
    }
    // rows are generated in ascending (n, d, w, k, ell) order already
    cells.into_iter().map(|(n, w, k, ell)| SweepRow {
        n,
        d: w.len() as u32,
        deg_w: w.degree().clone(),
        nu: invariants::nu(n, k, &w, ell),
        blowup_total: invariants::count_blowup_total(n, k, &w, ell),
        exceptional: invariants::count_exceptional(n, k, &w, ell),
        baum_bott: invariants::baum_bott(n, k),
        w: w.degrees().to_vec(),
        k,
        ell,
    })
}



fn emit_sweep<W: Write>(out: &mut W, format: Format, range: &SweepRange) -> Result<(), Error> {
    match format {
        Format::Json => {
            let rows: Vec<SweepRow> = sweep_rows(range).collect();
            let text = serde_json::to_string(&rows).expect("rows serialize");
            writeln!(out, "{text}")?;
        }
        Format::Csv => {
            // streamed: one record written per evaluated cell
            let mut writer = csv::Writer::from_writer(out);
            writer
                .write_record([
                    "n",
                    "d",
                    "w",
                    "deg_w",
                    "k",
                    "ell",
                    "nu",
                    "blowup_total",
                    "exceptional",
                    "baum_bott",
                ])
                .map_err(|e| Error::invalid("output", e.to_string()))?;
            for row in sweep_rows(range) {
                let w = row
                    .w
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                writer
                    .write_record([
                        row.n.to_string(),
                        row.d.to_string(),
                        w,
                        row.deg_w.to_string(),
                        row.k.to_string(),
                        row.ell.to_string(),
                        row.nu.to_string(),
                        row.blowup_total.to_string(),
                        row.exceptional.to_string(),
                        row.baum_bott.to_string(),
                    ])
                    .map_err(|e| Error::invalid("output", e.to_string()))?;
            }
            writer
                .flush()
                .map_err(|e| Error::invalid("output", e.to_string()))?;
        }
        Format::Table => {
            writeln!(
                out,
                "{:>3} {:>3} {:<10} {:>8} {:>3} {:>4} {:>14} {:>14} {:>14} {:>14}",
                "n", "d", "w", "deg_w", "k", "ell", "nu", "total", "exceptional", "baum_bott"
            )?;
            for row in sweep_rows(range) {
                let w = row
                    .w
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(
                    out,
                    "{:>3} {:>3} {:<10} {:>8} {:>3} {:>4} {:>14} {:>14} {:>14} {:>14}",
                    row.n,
                    row.d,
                    w,
                    row.deg_w.to_string(),
                    row.k,
                    row.ell,
                    row.nu.to_string(),
                    row.blowup_total.to_string(),
                    row.exceptional.to_string(),
                    row.baum_bott.to_string()
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv =
            std::iter::once("folcensus".to_string()).chain(args.iter().map(|s| s.to_string()));
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn nu_json_example() {
        let (code, out, _) = run_args(&["nu", "--n", "3", "--k", "2", "--w", "1,1", "--ell", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["nu"].to_string(), "-12");
    }

    #[test]
    fn counts_json_example() {
        let (code, out, _) =
            run_args(&["counts", "--n", "3", "--k", "2", "--w", "1,1", "--ell", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["blowup_total"].to_string(), "9");
        assert_eq!(v["exceptional"].to_string(), "6");
        assert_eq!(v["isolated_sum"].to_string(), "3");
        assert_eq!(v["baum_bott"].to_string(), "15");
        assert!(v.get("milnor").is_none());
    }

    #[test]
    fn out_of_range_parameters_exit_2() {
        let (code, _, err) =
            run_args(&["nu", "--n", "3", "--k", "2", "--w", "1,1,1", "--ell", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("w"), "diagnostic names the field: {err}");

        let (code, _, err) = run_args(&["nu", "--n", "3", "--k", "0", "--w", "1,1", "--ell", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("k"));

        let (code, _, _) = run_args(&["nu", "--n", "3", "--w", "1,1", "--ell", "0"]);
        assert_eq!(code, 2); // missing required --k

        let (code, _, err) = run_args(&[
            "subvariety",
            "--n",
            "4",
            "--k",
            "2",
            "--w",
            "1,1",
            "--v",
            "1,1",
            "--ell",
            "0",
        ]);
        assert_eq!(code, 2); // m >= d
        assert!(err.contains("m"), "{err}");
    }

    #[test]
    fn unknown_flag_exits_2() {
        let (code, _, err) = run_args(&["nu", "--frobnicate", "9"]);
        assert_eq!(code, 2);
        assert!(!err.trim().is_empty());
        assert_eq!(err.trim().lines().count(), 1, "one-line diagnostic: {err}");
    }

    #[test]
    fn soares_values_through_cli() {
        let (code, out, _) = run_args(&["soares", "--n", "3", "--k", "2", "--v", "2"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["soares"].to_string(), "10"); // 2(k^2+1) at k=2
    }

    #[test]
    fn table_and_csv_formats_work() {
        let (code, out, _) = run_args(&[
            "counts", "--n", "3", "--k", "2", "--w", "1,1", "--ell", "1", "--format", "table",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("blowup_total"));
        let (code, out, _) = run_args(&[
            "counts", "--n", "3", "--k", "2", "--w", "1,1", "--ell", "1", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert!(lines.next().unwrap().starts_with("blowup_total,"));
        assert!(lines.next().unwrap().starts_with("9,"));
    }
}
