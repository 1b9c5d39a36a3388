//! `heptagon`: spectrum tables, the check suite, Galois actions and JSON export.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use heptagon::galois::action::act_on_spectrum;
use heptagon::galois::lattice::{act_on_subfields, Subfield};
use heptagon::galois::wreath::ElementSpec;
use heptagon::galois::WreathElement;
use heptagon::model::spectrum::total_multiplicity;
use heptagon::model::{full_spectrum, SpectrumRecord};
use heptagon::numbers::Momentum;
use heptagon::verify::{run, Section};
use heptagon::Error;

const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "heptagon", version, about = "Exact Galois-qubit solution of the seven-node Heisenberg ring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print all 128 levels grouped by (k, r′, ν).
    Spectrum {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Add a 15-significant-digit decimal column.
        #[arg(long)]
        numeric: bool,
    },
    /// Run the check suite; exits 1 if any check fails.
    Verify {
        /// A section number 2..=7, or `all`.
        #[arg(long, default_value = "all")]
        section: String,
    },
    /// Show the permutations induced by a group element given as
    /// `{"eps": [[±1,±1,±1],[±1,±1,±1]], "l": int}`.
    Galois { element: String },
    /// Write the spectrum and all exact matrices as JSON.
    Export {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

enum Failure {
    Usage(String),
    Checks,
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cmd: Command) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    let io = |e: std::io::Error| Failure::Runtime(e.into());
    match cmd {
        Command::Spectrum { format, numeric } => {
            let records = full_spectrum()?;
            let text = match format {
                Format::Table => spectrum_table(&records, numeric),
                Format::Json => serde_json::to_string_pretty(&records).map_err(Error::from)? + "\n",
            };
            out.write_all(text.as_bytes()).map_err(io)?;
        }
        Command::Verify { section } => {
            let sections = parse_sections(&section)?;
            let report = run(&sections);
            writeln!(out, "{report}").map_err(io)?;
            if !report.passed() {
                return Err(Failure::Checks);
            }
        }
        Command::Galois { element } => {
            let spec: ElementSpec = serde_json::from_str(&element)
                .map_err(|e| Failure::Usage(format!("malformed element: {e}")))?;
            let g = WreathElement::try_from(spec).map_err(|e| Failure::Usage(format!("malformed element: {e}")))?;
            out.write_all(galois_report(&g)?.as_bytes()).map_err(io)?;
        }
        Command::Export { out: path } => {
            heptagon::export::write_export(&path)?;
            writeln!(out, "wrote {}", path.display()).map_err(io)?;
        }
    }
    Ok(())
}

fn parse_sections(arg: &str) -> Result<Vec<Section>, Failure> {
    if arg == "all" {
        return Ok(Section::ALL.to_vec());
    }
    let n: u8 = arg
        .parse()
        .map_err(|_| Failure::Usage(format!("--section expects 2..=7 or all, got {arg:?}")))?;
    Section::from_number(n).map(|s| vec![s]).map_err(|e| Failure::Usage(e.to_string()))
}

fn nu_label(nu: Option<i8>) -> &'static str {
    match nu {
        Some(1) => "+1",
        Some(_) => "-1",
        None => "",
    }
}

fn spectrum_table(records: &[SpectrumRecord], numeric: bool) -> String {
    let mut rows = vec![vec!["k".to_string(), "r'".into(), "ν".into(), "r".into(), "mult".into(), "energy".into()]];
    if numeric {
        rows[0].push("decimal".into());
    }
    for rec in records {
        let rs = format!("{}..{}", rec.r_values[0], rec.r_values[rec.r_values.len() - 1]);
        let mut row = vec![
            rec.k.to_string(),
            rec.r_prime.to_string(),
            nu_label(rec.nu).to_string(),
            rs,
            rec.multiplicity.to_string(),
            rec.energy_exact.to_string(),
        ];
        if numeric {
            row.push(significant(rec.energy_float, 15));
        }
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    s.push_str(&format!("total: {} levels in {} records\n", total_multiplicity(records), records.len()));
    s
}

/// `x` rounded to `digits` significant digits, in positional notation.
fn significant(x: f64, digits: i32) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32 + 1;
    format!("{:.*}", (digits - magnitude).max(0) as usize, x)
}

fn record_label(r: &SpectrumRecord) -> String {
    r.key()
}

/// Cycle notation of a permutation, fixed points omitted.
fn cycles(perm: &[usize], label: impl Fn(usize) -> String) -> Vec<String> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(label(i));
            i = perm[i];
        }
        out.push(format!("({})", cycle.join(" → ")));
    }
    out
}

fn density_labels() -> Vec<(Momentum, u8, i8)> {
    let mut v = Vec::new();
    for rp in [2u8, 3] {
        for k in Momentum::nonzero() {
            for nu in [1i8, -1] {
                v.push((k, rp, nu));
            }
        }
    }
    v
}

fn galois_report(g: &WreathElement) -> Result<String, Failure> {
    let records = full_spectrum()?;
    let perm = act_on_spectrum(g, &records);
    if perm.iter().enumerate().all(|(i, j)| i == *j) && g.is_identity() {
        return Ok("identity permutation\n".into());
    }
    let mut s = format!("element {g}\n");
    let mut section = |title: &str, cs: Vec<String>| {
        s.push_str(&format!("{title}:\n"));
        if cs.is_empty() {
            s.push_str("  identity permutation\n");
        }
        for c in cs {
            s.push_str(&format!("  {c}\n"));
        }
    };
    section("energies", cycles(&perm, |i| record_label(&records[i])));
    let fields = Subfield::all();
    section("subfields", cycles(&act_on_subfields(g), |i| fields[i].name()));
    let labels = density_labels();
    let rho_perm: Vec<usize> = labels
        .iter()
        .map(|&(k, rp, nu)| {
            let (k2, _, nu2) = heptagon::galois::action::act_on_level(g, k, rp, Some(nu));
            labels.iter().position(|l| *l == (k2, rp, nu2.expect("qubit level"))).expect("closed")
        })
        .collect();
    section(
        "density matrices",
        cycles(&rho_perm, |i| {
            let (k, rp, nu) = labels[i];
            format!("ϱ[k={k} r'={rp} ν={}]", nu_label(Some(nu)))
        }),
    );
    Ok(s)
}
