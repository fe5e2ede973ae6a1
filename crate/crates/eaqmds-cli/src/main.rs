//! Command-line front end over the `eaqmds` library.
//!
//! Exit codes: 0 success, 1 usage or precondition error, 2 internal
//! invariant violation, 3 catalog verification mismatch.

use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use eaqmds::catalog::{self, CatalogRecord};
use eaqmds::families::{
    self, published, Family1Spec, Family2Spec, FamilyCode, FamilyId, GenOptions,
};
use eaqmds::{CosetContext, Error};

#[derive(Parser)]
#[command(
    name = "eaqmds",
    version,
    about = "Constacyclic defining sets, their decompositions, and entanglement-assisted MDS code parameters, with every claim re-derived from scratch"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the exponent set Omega, its q^2-cyclotomic cosets, and their
    /// skew classification; with --s, inspect a single coset.
    Cosets {
        /// Prime power q of the coefficient field GF(q^2)
        #[arg(long)]
        q: u64,
        /// Code length n (coprime to q)
        #[arg(long)]
        n: u64,
        /// Order r of the constacyclic unit (must divide q + 1)
        #[arg(long)]
        r: u64,
        /// Residue to inspect (canonicalized mod rn)
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Generate one family instance (--d) or the full advertised distance
    /// range (--all), verify it, and emit catalog records.
    Family {
        /// Family number: 1 or 2
        #[arg(long)]
        family: u8,
        /// Prime power q
        #[arg(long)]
        q: u64,
        /// Family-1 parameter h (3, 5, or 7)
        #[arg(long)]
        h: Option<u64>,
        /// Family-2 parameter lambda (odd divisor of q + 1)
        #[arg(long)]
        lambda: Option<u64>,
        /// Single target distance
        #[arg(long, conflicts_with = "all")]
        d: Option<u64>,
        /// Sweep the whole advertised distance range
        #[arg(long)]
        all: bool,
        /// Append records (newline-delimited JSON) to this catalog file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stdout rendering; the --out file is always newline-delimited JSON
        #[arg(long, value_enum, default_value_t = RecordFormat::Json)]
        format: RecordFormat,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Reproduce a published parameter table side by side with computed
    /// values, marking each cell agree/disagree. Always exits 0.
    Table {
        /// Which table: 1, 2, or 3 (the symbolic rows, instantiated)
        which: u8,
        /// Largest q instantiated for table 3
        #[arg(long, default_value_t = 128)]
        max_q: u64,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Re-derive every record of a catalog file from scratch and compare
    /// field by field (timestamps excluded). Exits 3 on any mismatch.
    Verify {
        /// Catalog file (newline-delimited JSON records)
        catalog: PathBuf,
        #[command(flatten)]
        budgets: Budgets,
    },
}

#[derive(Args)]
struct Budgets {
    /// Cap on exhaustive distance verification, in subset rank tests
    #[arg(long, default_value_t = families::DEFAULT_MDS_BUDGET)]
    mds_budget: u64,
    /// Run the Gram-rank ebit oracle only for q up to this cap
    #[arg(long, default_value_t = families::DEFAULT_ORACLE_CAP_Q)]
    oracle_cap_q: u64,
}

impl Budgets {
    fn options(&self) -> GenOptions {
        GenOptions {
            mds_budget: self.mds_budget,
            oracle_cap_q: self.oracle_cap_q,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RecordFormat {
    Json,
    Csv,
}

/// Failures mapped to exit codes 1, 2, 3.
enum Failure {
    Usage(String),
    Internal(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Internal(_) => 2,
            Failure::Mismatch(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Internal(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInvariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a pipe reader (head, grep -m) closes early.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Cosets { q, n, r, s, format } => cmd_cosets(q, n, r, s, format),
        Cmd::Family {
            family,
            q,
            h,
            lambda,
            d,
            all,
            out,
            format,
            budgets,
        } => cmd_family(family, q, h, lambda, d, all, out, format, &budgets.options()),
        Cmd::Table {
            which,
            max_q,
            budgets,
        } => cmd_table(which, max_q, &budgets.options()),
        Cmd::Verify { catalog, budgets } => cmd_verify(&catalog, &budgets.options()),
    }
}

// ---------------------------------------------------------------------------
// cosets
// ---------------------------------------------------------------------------

fn coset_json(ctx: &CosetContext, c: &eaqmds::Coset) -> serde_json::Value {
    serde_json::json!({
        "rep": c.rep(),
        "elems": c.elems(),
        "skew_symmetric": ctx.is_skew_symmetric(c),
        "partner": ctx.skew_partner(c).rep(),
    })
}

fn cmd_cosets(q: u64, n: u64, r: u64, s: Option<u64>, format: TextFormat) -> Result<(), Failure> {
    let ctx = CosetContext::new(q, n, r)?;
    if ctx.rn() > 10_000_000 {
        return Err(Failure::Usage(format!(
            "rn = {} is too large to enumerate",
            ctx.rn()
        )));
    }
    let describe = |c: &eaqmds::Coset| {
        let elems: Vec<String> = c.elems().iter().map(u64::to_string).collect();
        format!("C_{} = {{{}}}", c.rep(), elems.join(", "))
    };

    if let Some(s) = s {
        let c = ctx.coset(s);
        let symmetric = ctx.is_skew_symmetric(&c);
        let partner = ctx.skew_partner(&c);
        match format {
            TextFormat::Json => {
                println!("{}", coset_json(&ctx, &c));
            }
            TextFormat::Text => {
                println!("{}, skew-symmetric: {symmetric}", describe(&c));
                println!("partner: C_{}", partner.rep());
            }
        }
        return Ok(());
    }

    // Distinct cosets covering Omega, in ascending representative order.
    let mut cosets = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for x in ctx.omega() {
        if seen.contains(&x) {
            continue;
        }
        let c = ctx.coset(x);
        seen.extend(c.elems().iter().copied());
        cosets.push(c);
    }
    cosets.sort();

    match format {
        TextFormat::Json => {
            let val = serde_json::json!({
                "q": ctx.q(),
                "n": ctx.n(),
                "r": ctx.r(),
                "rn": ctx.rn(),
                "ord_q2": ctx.order_q2(),
                "omega": ctx.omega(),
                "cosets": cosets.iter().map(|c| coset_json(&ctx, c)).collect::<Vec<_>>(),
            });
            println!("{val}");
        }
        TextFormat::Text => {
            println!(
                "context: q={} n={} r={} rn={} ord_q2={}",
                ctx.q(),
                ctx.n(),
                ctx.r(),
                ctx.rn(),
                ctx.order_q2()
            );
            let omega: Vec<String> = ctx.omega().iter().map(u64::to_string).collect();
            println!("omega: {}", omega.join(" "));
            for c in &cosets {
                if ctx.is_skew_symmetric(c) {
                    println!("{}, skew-symmetric", describe(c));
                } else {
                    println!(
                        "{}, skew-asymmetric, partner C_{}",
                        describe(c),
                        ctx.skew_partner(c).rep()
                    );
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn cmd_family(
    family: u8,
    q: u64,
    h: Option<u64>,
    lambda: Option<u64>,
    d: Option<u64>,
    all: bool,
    out: Option<PathBuf>,
    format: RecordFormat,
    opts: &GenOptions,
) -> Result<(), Failure> {
    let family = FamilyId::from_number(family)
        .ok_or_else(|| Failure::Usage(format!("--family must be 1 or 2, got {family}")))?;
    let parameter = match family {
        FamilyId::One => {
            if lambda.is_some() {
                return Err(Failure::Usage("--lambda applies to family 2 only".into()));
            }
            h.ok_or_else(|| Failure::Usage("family 1 needs --h".into()))?
        }
        FamilyId::Two => {
            if h.is_some() {
                return Err(Failure::Usage("--h applies to family 1 only".into()));
            }
            lambda.ok_or_else(|| Failure::Usage("family 2 needs --lambda".into()))?
        }
    };
    let ds: Vec<u64> = match (d, all) {
        (Some(d), false) => vec![d],
        (None, true) => match family {
            FamilyId::One => {
                let spec = Family1Spec::minimal(q, parameter)?;
                let (lo, hi) = spec.d_range();
                (lo..=hi).collect()
            }
            FamilyId::Two => {
                let spec = Family2Spec::minimal(q, parameter)?;
                (spec.d_range(1).0..=spec.d_range(2).1).collect()
            }
        },
        _ => return Err(Failure::Usage("pass exactly one of --d or --all".into())),
    };

    let timestamp = catalog::utc_timestamp();
    let mut records = Vec::with_capacity(ds.len());
    for d in ds {
        let code: FamilyCode = match family {
            FamilyId::One => families::family1_generate(q, parameter, d, opts)?,
            FamilyId::Two => families::family2_generate(q, parameter, d, opts)?,
        };
        for note in &code.report.notes {
            eprintln!("warning: q={q} d={d}: {note}");
        }
        records.push(CatalogRecord::from_family_code(&code, timestamp.clone()));
    }

    match format {
        RecordFormat::Json => {
            for rec in &records {
                println!("{}", rec.to_json_line());
            }
        }
        RecordFormat::Csv => print!("{}", catalog::to_csv(&records)),
    }
    if let Some(path) = out {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)
            .map_err(|e| Failure::Usage(format!("cannot open {}: {e}", path.display())))?;
        for rec in &records {
            writeln!(file, "{}", rec.to_json_line())
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }

    // Precondition failures abort above; a bound violation in an emitted
    // record is an internal error.
    if let Some(bad) = records.iter().find(|r| r.singleton_slack < 0) {
        return Err(Failure::Internal(format!(
            "record q={} d={} violates the Singleton bound (slack {})",
            bad.q, bad.d, bad.singleton_slack
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn check_row(row: &published::PublishedRow, opts: &GenOptions) -> (usize, usize) {
    let (mut cells, mut disagreements) = (0, 0);
    println!(
        "q={} {}={} published [[{}, {}-2d, d; {}]] for {} <= d <= {}",
        row.q,
        match row.family {
            FamilyId::One => "h",
            FamilyId::Two => "lambda",
        },
        row.parameter,
        row.n,
        row.k_const,
        row.c,
        row.d_min,
        row.d_max
    );
    for d in row.d_min..=row.d_max {
        let generated = match row.family {
            FamilyId::One => families::family1_generate(row.q, row.parameter, d, opts),
            FamilyId::Two => families::family2_generate(row.q, row.parameter, d, opts),
        };
        let code = match generated {
            Ok(c) => c,
            Err(e) => {
                println!("  d={d}: inadmissible: {e}");
                disagreements += 1;
                cells += 1;
                continue;
            }
        };
        let p = code.params;
        let marks = [
            ("n", p.n as i64, row.n as i64),
            ("k", p.k, row.claimed_k(d)),
            ("d", p.d as i64, d as i64),
            ("c", p.c as i64, row.c as i64),
        ];
        let mut parts = Vec::new();
        for (name, got, want) in marks {
            cells += 1;
            if got == want {
                parts.push(format!("{name}={got} ok"));
            } else {
                disagreements += 1;
                parts.push(format!("{name}: computed {got} vs published {want} DISAGREE"));
            }
        }
        let extra = match code.report.oracle_c {
            Some(oc) => format!(" oracle_c={oc}"),
            None => String::new(),
        };
        println!(
            "  d={d}: [[{}, {}, {}; {}]] {} slack={}{extra}",
            p.n,
            p.k,
            p.d,
            p.c,
            parts.join(", "),
            code.report.singleton_slack
        );
        for note in &code.report.notes {
            println!("    note: {note}");
        }
    }
    (cells, disagreements)
}

fn cmd_table(which: u8, max_q: u64, opts: &GenOptions) -> Result<(), Failure> {
    let rows: Vec<published::PublishedRow> = match which {
        1 => published::TABLE_1.to_vec(),
        2 => published::TABLE_2.to_vec(),
        3 => instantiate_symbolic_rows(max_q),
        _ => return Err(Failure::Usage(format!("no table {which}; pick 1, 2, or 3"))),
    };
    let mut cells = 0;
    let mut disagreements = 0;
    for row in &rows {
        let admissible = match row.family {
            FamilyId::One => Family1Spec::admissible(row.q, row.parameter),
            FamilyId::Two => Family2Spec::admissible(row.q, row.parameter),
        };
        if let Err(e) = admissible {
            println!(
                "q={} {}={}: inadmissible: {e}",
                row.q,
                match row.family {
                    FamilyId::One => "h",
                    FamilyId::Two => "lambda",
                },
                row.parameter
            );
            continue;
        }
        let (c, dis) = check_row(row, opts);
        cells += c;
        disagreements += dis;
    }
    println!("{cells} cells checked, {disagreements} disagreements");
    Ok(())
}

/// Instantiates the two symbolic family rows over every admissible q up to
/// `max_q`, with the published claims derived from the family formulas.
fn instantiate_symbolic_rows(max_q: u64) -> Vec<published::PublishedRow> {
    let mut rows = Vec::new();
    for q in 2..=max_q {
        for h in [3, 5, 7] {
            if Family1Spec::admissible(q, h).is_ok() {
                let spec = Family1Spec::minimal(q, h).unwrap();
                let (d_min, d_max) = spec.d_range();
                rows.push(published::PublishedRow {
                    family: FamilyId::One,
                    q,
                    parameter: h,
                    n: spec.n(),
                    c: 1,
                    k_const: spec.n() + 3,
                    d_min,
                    d_max,
                });
            }
        }
        if Family2Spec::admissible(q, 1).is_ok() {
            for lambda in eaqmds::arith::divisors(q + 1) {
                if lambda % 2 == 0 || Family2Spec::admissible(q, lambda).is_err() {
                    continue;
                }
                let spec = Family2Spec::minimal(q, lambda).unwrap();
                for tier in [1, 2] {
                    let (d_min, d_max) = spec.d_range(tier);
                    rows.push(published::PublishedRow {
                        family: FamilyId::Two,
                        q,
                        parameter: lambda,
                        n: spec.n(),
                        c: 2 * tier,
                        k_const: spec.n() + 2 + 2 * tier,
                        d_min,
                        d_max,
                    });
                }
            }
        }
    }
    rows
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(path: &PathBuf, opts: &GenOptions) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let records = catalog::parse_catalog_str(&text)?;
    let report = catalog::verify_records(&records, opts);
    if report.is_clean() {
        println!("{} records verified", report.records);
        return Ok(());
    }
    for m in &report.mismatches {
        eprintln!(
            "record {}: field {} expected {} found {}",
            m.index, m.field, m.expected, m.found
        );
    }
    Err(Failure::Mismatch(format!(
        "{} of {} records disagree with re-derivation",
        report
            .mismatches
            .iter()
            .map(|m| m.index)
            .collect::<std::collections::BTreeSet<_>>()
            .len(),
        report.records
    )))
}
