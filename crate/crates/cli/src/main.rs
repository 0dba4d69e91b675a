//! Command-line front end: orbit analysis, degeneration sets, multiplicity
//! tables, identity verification, and character-formula expansion.
//!
//! Exit codes: 0 on success, 1 when a verified identity fails, 2 on input
//! errors.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kspectra::charformula::{
    assemble_b_orbit, assemble_r_obar, formula_combo, ktype_multiplicity, FixtureSet,
    SymmetrizedFormula, TorusCharCombo,
};
use kspectra::degeneration::{degeneration_sites, norm_set};
use kspectra::kmult::{
    diminutive_table, exterior_to_ktype, normality_report, verify_column_lemma,
    verify_main_theorem, DimTable, LemmaKind,
};
use kspectra::liecore::{dominant, weight_multiplicity, KType, RootFamily, Weight};
use kspectra::orbits::{Family, Orbit};
use kspectra::parameters::{distinguished_epsilon, module_param, Sign};

#[derive(Parser)]
#[command(name = "kspectra", version, about = "K-spectra of classical nilpotent orbit closures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct OrbitArgs {
    /// Column sizes, weakly decreasing, comma-separated (e.g. 4,2,2,0).
    #[arg(long, value_delimiter = ',')]
    orbit: Vec<u32>,
    /// Group family: Sp, Oeven or Oodd.
    #[arg(long, default_value = "Sp")]
    group: String,
}

impl OrbitArgs {
    fn parse(&self) -> Result<Orbit, String> {
        let family: Family = self.group.parse()?;
        if self.orbit.is_empty() {
            return Err("--orbit requires at least one column".into());
        }
        Orbit::new(family, &self.orbit).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct FixtureArgs {
    /// Path to a unipotent fixture file (default: $ORBIT_FIXTURES, then the
    /// built-in set).
    #[arg(long)]
    fixtures: Option<String>,
}

impl FixtureArgs {
    fn load(&self) -> Result<FixtureSet, String> {
        let path = self.fixtures.clone().or_else(|| std::env::var("ORBIT_FIXTURES").ok());
        match path {
            None => Ok(FixtureSet::builtin()),
            Some(p) => {
                let data = std::fs::read_to_string(&p).map_err(|e| format!("{p}: {e}"))?;
                FixtureSet::from_json_str(&data).map_err(|e| format!("{p}: {e}"))
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Report the combinatorial invariants of one orbit.
    Analyze {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Enumerate the closure of the orbit under fundamental degenerations.
    Norm {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List the distinguished module of every member of the Norm set.
    Distinguished {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Diminutive multiplicity table of the orbit-closure model.
    Dimtable {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Verify one column-lemma identity, or sweep all shapes up to a bound.
    LemmaCheck {
        /// Lemma kind: 3, 4 or 5 columns.
        #[arg(long)]
        kind: u8,
        /// Column sizes for a single check (omit to sweep).
        #[arg(long, value_delimiter = ',')]
        columns: Option<Vec<u32>>,
        /// Sign variant of the head string: + or -.
        #[arg(long, default_value = "+")]
        variant: String,
        /// Largest column size for sweep mode.
        #[arg(long, default_value_t = 10)]
        max: u32,
    },
    /// Verify the degeneration sum identity for one orbit or a sweep.
    VerifyMain {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Sweep every even generic orbit of the family up to this column
        /// sum instead of checking a single orbit.
        #[arg(long)]
        max_sum: Option<u32>,
    },
    /// Compare the orbit and orbit-closure models; detects non-normality.
    Normality {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Expand a model's character formula into torus-induced terms.
    Charformula {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        fixtures: FixtureArgs,
        /// Which model to expand: the orbit closure or the orbit itself.
        #[arg(long, default_value = "closure")]
        model: String,
    },
    /// Tabulate K-type multiplicities of a model from its full formula.
    Ktypes {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        fixtures: FixtureArgs,
        #[arg(long, default_value = "closure")]
        model: String,
        /// Largest highest-weight entry to tabulate.
        #[arg(long, default_value_t = 2)]
        max_entry: i64,
    },
    /// Weight multiplicity in one irreducible representation.
    Weightmult {
        /// Root-system family: A, B, C or D.
        #[arg(long)]
        family: String,
        /// Highest weight, comma-separated (halves allowed, e.g. 1.5,0.5).
        #[arg(long, value_delimiter = ',')]
        highest: Vec<String>,
        /// Weight to evaluate, same length as the highest weight.
        #[arg(long, value_delimiter = ',')]
        weight: Vec<String>,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Analyze { orbit, format } => analyze(&orbit.parse()?, format.format),
        Command::Norm { orbit, format } => norm(&orbit.parse()?, format.format),
        Command::Distinguished { orbit, format } => distinguished(&orbit.parse()?, format.format),
        Command::Dimtable { orbit, format } => {
            let o = orbit.parse()?;
            print_table(&diminutive_table(&kspectra::parameters::gamma_normal_form(&o)), format.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::LemmaCheck { kind, columns, variant, max } => {
            lemma_check(kind, columns.as_deref(), &variant, max)
        }
        Command::VerifyMain { orbit, max_sum } => verify_main(&orbit, max_sum),
        Command::Normality { orbit, format } => normality(&orbit.parse()?, format.format),
        Command::Charformula { orbit, format, fixtures, model } => {
            let combo = model_combo(&orbit.parse()?, &fixtures.load()?, &model)?;
            print_combo(&combo, format.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Ktypes { orbit, format, fixtures, model, max_entry } => {
            let o = orbit.parse()?;
            let combo = model_combo(&o, &fixtures.load()?, &model)?;
            ktypes(&combo, max_entry, format.format)
        }
        Command::Weightmult { family, highest, weight, format } => {
            weightmult(&family, &highest, &weight, format.format)
        }
    }
}

fn analyze(o: &Orbit, format: Format) -> Result<ExitCode, String> {
    let dec = o.generic_part();
    let tau: Vec<usize> = o.tau().iter().collect();
    let sites: Vec<(usize, usize)> =
        degeneration_sites(o).iter().map(|s| (s.start(), s.end())).collect();
    match format {
        Format::Json => {
            let value = json!({
                "group": o.group().to_string(),
                "family": o.family().name(),
                "columns": o.columns(),
                "dimension": o.dimension(),
                "tau": tau,
                "reduced": o.reduced().columns(),
                "generic": o.is_generic(),
                "generic_part": dec.generic_orbit.columns(),
                "removed_pairs": dec.removed_pairs,
                "parity": format!("{:?}", o.parity()),
                "degeneration_sites": sites,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text | Format::Latex => {
            let sep = if format == Format::Latex { " \\\\" } else { "" };
            println!("orbit {} in {}{sep}", o, o.group());
            println!("tau: {tau:?}{sep}");
            println!("reduced: {}{sep}", o.reduced());
            println!("generic: {}{sep}", o.is_generic());
            println!(
                "generic part: {} (removed pairs {:?}){sep}",
                dec.generic_orbit, dec.removed_pairs
            );
            println!("column parity: {:?}{sep}", o.parity());
            println!("degeneration sites (start,end): {sites:?}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn norm(o: &Orbit, format: Format) -> Result<ExitCode, String> {
    let ns = norm_set(o);
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&ns.members).unwrap());
        }
        Format::Text => {
            for m in &ns.members {
                println!("{m}");
            }
        }
        Format::Latex => {
            for m in &ns.members {
                println!(
                    "({}) \\\\",
                    m.columns().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn distinguished(o: &Orbit, format: Format) -> Result<ExitCode, String> {
    let members = norm_set(o).members;
    let mut rows = Vec::new();
    for p in &members {
        let eps = distinguished_epsilon(p);
        let m = module_param(p, &eps).map_err(|e| e.to_string())?;
        rows.push(m);
    }
    match format {
        Format::Json => {
            let value: Vec<_> = rows.iter().map(|m| m.to_json()).collect();
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            for m in &rows {
                println!("{m}");
            }
        }
        Format::Latex => {
            for m in &rows {
                println!("\\mathcal{{M}}({}; {}) \\\\", m.source, m.epsilon);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn table_labels(t: &DimTable) -> Vec<String> {
    if t.group.family == Family::Symplectic {
        (0..t.values.len()).map(|k| format!("(1^{})", 2 * k)).collect()
    } else {
        (0..t.values.len())
            .map(|k| {
                let (boxes, tag) = exterior_to_ktype(t.group.dimension, 2 * k as u32);
                format!("(1^{boxes}|{tag:+})")
            })
            .collect()
    }
}

fn print_table(t: &DimTable, format: Format) {
    let labels = table_labels(t);
    match format {
        Format::Json => {
            let value = json!({
                "group": t.group.to_string(),
                "ktypes": labels,
                "values": t.values,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            let width = labels
                .iter()
                .zip(&t.values)
                .map(|(l, v)| l.len().max(v.to_string().len()))
                .collect::<Vec<_>>();
            let mut head = String::new();
            let mut body = String::new();
            for ((l, v), w) in labels.iter().zip(&t.values).zip(&width) {
                let _ = write!(head, "{l:>w$}  ", w = w);
                let _ = write!(body, "{v:>w$}  ", w = w);
            }
            println!("{}", head.trim_end());
            println!("{}", body.trim_end());
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{{}}}", "c".repeat(labels.len()));
            println!("{} \\\\", labels.join(" & "));
            println!(
                "{} \\\\",
                t.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" & ")
            );
            println!("\\end{{tabular}}");
        }
    }
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        other => Err(format!("invalid sign `{other}` (expected + or -)")),
    }
}

fn lemma_kind(kind: u8) -> Result<LemmaKind, String> {
    match kind {
        3 => Ok(LemmaKind::Three),
        4 => Ok(LemmaKind::Four),
        5 => Ok(LemmaKind::Five),
        other => Err(format!("invalid lemma kind {other} (expected 3, 4 or 5)")),
    }
}

fn lemma_check(
    kind: u8,
    columns: Option<&[u32]>,
    variant: &str,
    max: u32,
) -> Result<ExitCode, String> {
    let kind = lemma_kind(kind)?;
    let variant = parse_sign(variant)?;
    let check = |cols: &[u32], variant: Sign| -> Result<bool, String> {
        let report = verify_column_lemma(kind, cols, variant).map_err(|e| e.to_string())?;
        let sigma = report
            .inferred_sigma
            .map_or_else(|| "none".to_string(), |s| s.to_string());
        println!(
            "{kind:?} {cols:?} variant {variant}: {} (sigma {sigma})",
            if report.equal { "holds" } else { "FAILS" }
        );
        if !report.equal {
            println!("  left  {:?}", report.lhs.values);
            println!("  right {:?}", report.rhs_sum.values);
        }
        Ok(report.equal)
    };
    if let Some(cols) = columns {
        let ok = check(cols, variant)?;
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    // Sweep every even shape of the requested kind up to the bound.
    let evens = |hi: u32| (2..=hi).step_by(2);
    let mut shapes: Vec<Vec<u32>> = Vec::new();
    for b in evens(max) {
        for d in (0..=b).step_by(2) {
            match kind {
                LemmaKind::Three => shapes.push(vec![b, b, d]),
                LemmaKind::Four => {
                    for a in (b..=max).step_by(2) {
                        shapes.push(vec![a, b, b, d]);
                    }
                }
                LemmaKind::Five => {
                    for a in (b..=max).step_by(2) {
                        for z in (a + 2..=max).step_by(2) {
                            shapes.push(vec![z, a, b, b, d]);
                        }
                    }
                }
            }
        }
    }
    let mut checked = 0;
    for cols in &shapes {
        let head_strict = match kind {
            LemmaKind::Three => true,
            LemmaKind::Four => cols[0] > cols[1],
            LemmaKind::Five => cols[1] > cols[2],
        };
        if variant == Sign::Minus && !head_strict {
            continue;
        }
        checked += 1;
        if !check(cols, variant)? {
            println!("first counterexample: {cols:?}");
            return Ok(ExitCode::from(1));
        }
    }
    println!("{checked} shapes verified, no counterexample");
    Ok(ExitCode::SUCCESS)
}

fn verify_main(args: &OrbitArgs, max_sum: Option<u32>) -> Result<ExitCode, String> {
    let family: Family = args.group.parse()?;
    let orbits: Vec<Orbit> = match max_sum {
        None => vec![args.parse()?],
        Some(bound) => {
            let mut out = Vec::new();
            for total in (2..=bound).step_by(2) {
                collect_even_orbits(family, total, &mut out);
            }
            out
        }
    };
    for o in &orbits {
        let report = verify_main_theorem(o).map_err(|e| format!("{o}: {e}"))?;
        if !report.equal {
            println!("FAIL {o}: closure model {:?} != sum {:?}", report.gamma.values, report.sum.values);
            return Ok(ExitCode::from(1));
        }
        println!("ok {o}: {:?}", report.gamma.values);
    }
    Ok(ExitCode::SUCCESS)
}

fn collect_even_orbits(family: Family, total: u32, out: &mut Vec<Orbit>) {
    fn rec(family: Family, rem: u32, maxv: u32, prefix: &mut Vec<u32>, out: &mut Vec<Orbit>) {
        if rem == 0 {
            if let Ok(o) = Orbit::new(family, prefix) {
                if o.is_generic() {
                    out.push(o);
                }
            }
            return;
        }
        let mut v = rem.min(maxv);
        if v % 2 == 1 {
            v -= 1;
        }
        while v >= 2 {
            prefix.push(v);
            rec(family, rem - v, v, prefix, out);
            prefix.pop();
            v -= 2;
        }
    }
    rec(family, total, total, &mut Vec::new(), out);
}

fn ktype_name(t: &DimTable, k: usize) -> String {
    if t.group.family == Family::Symplectic {
        let ones = vec!["1"; 2 * k];
        format!("V_({})", ones.join(","))
    } else {
        let (boxes, tag) = exterior_to_ktype(t.group.dimension, 2 * k as u32);
        format!("V_(1^{boxes}|{tag:+})")
    }
}

fn normality(o: &Orbit, format: Format) -> Result<ExitCode, String> {
    let report = normality_report(o);
    if format == Format::Json {
        let value = json!({
            "orbit": o.columns(),
            "group": o.group().to_string(),
            "normal_closure_detected": report.equal,
            "closure_model": report.r_obar.values,
            "orbit_model": report.r_o.values,
            "discrepancies": report.discrepancies,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
        return Ok(if report.equal { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    if report.equal {
        println!("NORMAL (at diminutive level): models agree, {:?}", report.r_o.values);
        Ok(ExitCode::SUCCESS)
    } else {
        for &(k, delta) in &report.discrepancies {
            println!("NOT NORMAL: discrepancy at {}, Δ={delta}", ktype_name(&report.r_o, k));
        }
        Ok(ExitCode::from(1))
    }
}

fn model_combo(o: &Orbit, fixtures: &FixtureSet, model: &str) -> Result<TorusCharCombo, String> {
    let formula: SymmetrizedFormula = match model {
        "closure" => assemble_r_obar(o, fixtures),
        "orbit" => assemble_b_orbit(o, fixtures),
        other => return Err(format!("invalid model `{other}` (expected closure or orbit)")),
    }
    .map_err(|e| e.to_string())?;
    formula_combo(&formula).map_err(|e| e.to_string())
}

fn print_combo(combo: &TorusCharCombo, format: Format) {
    match format {
        Format::Json => {
            let terms: Vec<_> = combo
                .terms()
                .map(|(w, c)| json!({"weight": w.doubled().iter().map(|x| x / 2).collect::<Vec<_>>(), "coeff": c}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&terms).unwrap());
        }
        Format::Text => {
            for (w, c) in combo.terms() {
                println!("{c:+} Ind_T^K(C_{w})");
            }
        }
        Format::Latex => {
            for (w, c) in combo.terms() {
                println!("{c:+}\\,\\mathrm{{Ind}}_T^K(\\mathbb{{C}}_{{{w}}}) \\\\");
            }
        }
    }
}

/// Dominant symplectic highest weights with entries bounded by `max_entry`.
fn dominant_mus(rank: usize, max_entry: i64) -> Vec<Vec<i64>> {
    fn rec(rank: usize, maxv: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == rank {
            out.push(prefix.clone());
            return;
        }
        for v in (0..=maxv).rev() {
            prefix.push(v);
            rec(rank, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, max_entry, &mut Vec::new(), &mut out);
    out
}

fn ktypes(combo: &TorusCharCombo, max_entry: i64, format: Format) -> Result<ExitCode, String> {
    let mut rows = Vec::new();
    for mu in dominant_mus(combo.rank, max_entry) {
        let ktype = KType::plain(Weight::from_ints(&mu));
        let m = ktype_multiplicity(combo, &ktype).map_err(|e| e.to_string())?;
        if m != 0 {
            rows.push((mu, m));
        }
    }
    match format {
        Format::Json => {
            let value: Vec<_> =
                rows.iter().map(|(mu, m)| json!({"mu": mu, "multiplicity": m})).collect();
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            for (mu, m) in &rows {
                let label: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
                println!("V_({}): {m}", label.join(","));
            }
        }
        Format::Latex => {
            for (mu, m) in &rows {
                let label: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
                println!("V_{{({})}} & {m} \\\\", label.join(","));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_half_coords(entries: &[String]) -> Result<Weight, String> {
    let mut doubled = Vec::new();
    for e in entries {
        let value: f64 = e.parse().map_err(|_| format!("invalid coordinate `{e}`"))?;
        let twice = 2.0 * value;
        if twice.fract() != 0.0 {
            return Err(format!("coordinate `{e}` is not a half-integer"));
        }
        doubled.push(twice as i64);
    }
    Ok(Weight::from_doubled(doubled))
}

fn weightmult(
    family: &str,
    highest: &[String],
    weight: &[String],
    format: Format,
) -> Result<ExitCode, String> {
    let family = match family {
        "A" | "a" => RootFamily::A,
        "B" | "b" => RootFamily::B,
        "C" | "c" => RootFamily::C,
        "D" | "d" => RootFamily::D,
        other => return Err(format!("invalid family `{other}` (expected A, B, C or D)")),
    };
    let mu_raw = parse_half_coords(highest)?;
    let lam = parse_half_coords(weight)?;
    if mu_raw.rank() != lam.rank() {
        return Err(format!(
            "rank mismatch: highest weight has {} coordinates, weight has {}",
            mu_raw.rank(),
            lam.rank()
        ));
    }
    let mu = dominant(family, &mu_raw);
    let m = weight_multiplicity(family, &mu, &lam);
    match format {
        Format::Json => {
            let value = json!({
                "family": format!("{family:?}"),
                "highest": mu.to_string(),
                "weight": lam.to_string(),
                "multiplicity": m,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => println!("{m}"),
        Format::Latex => println!("m_{{{mu}}}({lam}) = {m}"),
    }
    Ok(ExitCode::SUCCESS)
}
