//! Command-line surface: every table, bound and census as reproducible
//! TSV or JSON. Output is byte-deterministic for fixed arguments: rows come
//! out in a fixed order, rationals print exactly as num/den, floats with 10
//! decimal places.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use twopart::bounds::{self, BoundMode};
use twopart::census::{self, BuiltinFamily};
use twopart::error::Error;
use twopart::involutions::{self, CentralizerKind, CentralizerSpec, PmRow};
use twopart::rat::{fmt_f64, fmt_rat, to_f64, Rat};
use twopart::table_data;
use twopart::weyl::{self, Family, GroupSpec, Variant};

#[derive(Parser)]
#[command(
    name = "twopart",
    version,
    about = "Exact and lower-bound statistics of 2-part element orders in symmetric and classical groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,

    /// Print rational values only (drop the decimal companion columns).
    #[arg(long, global = true)]
    exact: bool,

    /// Seed for the random-word sampler.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Override the bundled published-constant table (TSV file).
    #[arg(long, global = true)]
    table1_fixture: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    /// Published per-interval constant lower bounds.
    Table1,
    /// Strong-involution window calculation.
    Table2,
    /// Symplectic per-rank pair-bound rows.
    Table3,
    /// Orthogonal exponent-class weights (takes --qmod4).
    Table4,
    /// Orthogonal per-rank pair-bound rows.
    Table5,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Paper,
    Exact,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit one of the bundled/derived tables.
    Tables {
        #[arg(value_enum)]
        which: TableName,
        /// Residue of q mod 4 for table4.
        #[arg(long, default_value_t = 1)]
        qmod4: u8,
    },
    /// Torus-sum and closed-form lower bounds for one 2-part order.
    Bound {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        target: u128,
        #[arg(long, value_enum, default_value_t = ModeArg::Paper)]
        mode: ModeArg,
        /// Also transfer the named bound to the central quotient.
        #[arg(long)]
        projective: bool,
    },
    /// Exact odd-order and twice-odd-order bounds for Sp/SO families.
    OddBounds {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "plain")]
        variant: String,
    },
    /// Involution-pair probability bounds for Cl_m x Cl_(d-m).
    Pm {
        #[arg(long)]
        family: String,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        q: u64,
    },
    /// Exhaustive (or sampled) census of a matrix group by 2-part order.
    Census {
        /// Group input file.
        #[arg(long, conflicts_with = "builtin")]
        file: Option<PathBuf>,
        /// Builtin generators: FAMILY,DIM,P (e.g. GL,2,3).
        #[arg(long)]
        builtin: Option<String>,
        /// Second group (file path or FAMILY,DIM,P) for the pair probability.
        #[arg(long)]
        pm_against: Option<String>,
        /// Draw this many random words instead of enumerating (approximate).
        #[arg(long)]
        sample: Option<usize>,
        /// Walk length for the sampler.
        #[arg(long, default_value_t = 50)]
        walk: usize,
        /// Enumeration budget.
        #[arg(long, default_value_t = census::DEFAULT_BUDGET)]
        cap: usize,
    },
    /// Run the full acceptance suite and print one line per criterion.
    Verify,
}

enum Cell {
    Text(String),
    Rat(Rat),
    Float(f64),
    Count(u128),
    Empty,
}

impl Cell {
    fn tsv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Rat(r) => fmt_rat(r),
            Cell::Float(x) => fmt_f64(*x),
            Cell::Count(n) => n.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Text(s) => serde_json::Value::String(s.clone()),
            Cell::Rat(r) => serde_json::json!({
                "num": r.numer().to_string(),
                "den": r.denom().to_string(),
            }),
            Cell::Float(x) => serde_json::json!(x),
            Cell::Count(n) => serde_json::Value::String(n.to_string()),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

struct Table {
    name: String,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(name: impl Into<String>, columns: Vec<&'static str>) -> Table {
        Table {
            name: name.into(),
            columns,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

fn emit(tables: &[Table], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Tsv => {
            for (i, t) in tables.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "# {}", t.name)?;
                writeln!(out, "{}", t.columns.join("\t"))?;
                for row in &t.rows {
                    let cells: Vec<String> = row.iter().map(Cell::tsv).collect();
                    writeln!(out, "{}", cells.join("\t"))?;
                }
            }
        }
        Format::Json => {
            let value: Vec<serde_json::Value> = tables
                .iter()
                .map(|t| {
                    let rows: Vec<serde_json::Value> = t
                        .rows
                        .iter()
                        .map(|row| {
                            let obj: serde_json::Map<String, serde_json::Value> = t
                                .columns
                                .iter()
                                .zip(row.iter())
                                .map(|(c, cell)| (c.to_string(), cell.json()))
                                .collect();
                            serde_json::Value::Object(obj)
                        })
                        .collect();
                    serde_json::json!({ "table": t.name, "rows": rows })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        }
    }
    Ok(())
}

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests are successful exits; bad usage is 2.
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        // A closed output stream (e.g. piping into `head`) is not an error.
        Err(Error::Unsupported(msg)) if msg.contains("Broken pipe") => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> twopart::Result<i32> {
    let io_err = |e: std::io::Error| Error::Unsupported(format!("write failed: {e}"));
    match &cli.cmd {
        Cmd::Tables { which, qmod4 } => {
            let tables = match which {
                TableName::Table1 => vec![table1(cli)?],
                TableName::Table2 => vec![table2()],
                TableName::Table3 => vec![pm_rows_table(
                    "table3: symplectic pair-bound rows",
                    &involutions::SYMPLECTIC_PM_ROWS,
                    "25/116 at argument l-1 (k=1)",
                )],
                TableName::Table4 => vec![table4(cli, *qmod4)?],
                TableName::Table5 => vec![pm_rows_table(
                    "table5: orthogonal pair-bound rows",
                    &involutions::ORTHOGONAL_PM_ROWS,
                    "25/116 at argument l-2 (k=1, m=3)",
                )],
            };
            emit(&tables, cli.format, out).map_err(io_err)?;
            Ok(0)
        }
        Cmd::Bound {
            family,
            rank,
            q,
            target,
            mode,
            projective,
        } => {
            let spec = GroupSpec::new(Family::parse(family)?, *rank, *q)?;
            let mode = match mode {
                ModeArg::Paper => BoundMode::Paper,
                ModeArg::Exact => BoundMode::ExactTori,
            };
            let table = bound_table(cli, &spec, *target, mode, *projective)?;
            emit(&[table], cli.format, out).map_err(io_err)?;
            Ok(0)
        }
        Cmd::OddBounds {
            family,
            rank,
            q,
            variant,
        } => {
            let spec = GroupSpec::with_variant(
                Family::parse(family)?,
                *rank,
                *q,
                Variant::parse(variant)?,
            )?;
            let report = bounds::odd_twice_odd(&spec)?;
            let mut t = Table::new(
                format!("odd/twice-odd bounds for {}", spec.label()),
                columns_with_float(cli, vec!["kind", "value"], vec!["simplified_floor", "dim_scaled"]),
            );
            for (kind, rep, scaled) in [
                ("odd-order", &report.odd, report.odd_dim_scaled),
                ("twice-odd-order", &report.twice_odd, report.twice_odd_dim_scaled),
            ] {
                let mut row = vec![
                    Cell::Text(kind.into()),
                    Cell::Rat(rep.value.exact().cloned().unwrap_or_else(|| Rat::new(0.into(), 1.into()))),
                ];
                if !cli.exact {
                    row.push(Cell::Float(rep.value.to_f64()));
                }
                row.push(rep.simplified.map(Cell::Float).unwrap_or(Cell::Empty));
                row.push(Cell::Float(scaled));
                t.push(row);
            }
            emit(&[t], cli.format, out).map_err(io_err)?;
            Ok(0)
        }
        Cmd::Pm { family, d, m, q } => {
            let cs = CentralizerSpec::new(CentralizerKind::parse(family)?, *d, *m, *q)?;
            let table = pm_table(cli, &cs)?;
            emit(&[table], cli.format, out).map_err(io_err)?;
            Ok(0)
        }
        Cmd::Census {
            file,
            builtin,
            pm_against,
            sample,
            walk,
            cap,
        } => {
            let input = load_group(file.as_deref(), builtin.as_deref())?;
            let table = match sample {
                Some(count) => census::random_word_sample(&input, *walk, *count, cli.seed)?,
                None => census::census(&input, *cap)?,
            };
            let mut tables = vec![census_tables(cli, &input.label, &table)];
            if let Some(other_spec) = pm_against {
                if table.approximate {
                    return Err(Error::Domain(
                        "pair probabilities need exact censuses, not samples".into(),
                    ));
                }
                let other_input = load_group_spec(other_spec)?;
                let other = census::census(&other_input, *cap)?;
                let p = census::pm_exact(&table, &other);
                let mut t = Table::new(
                    format!("pair probability vs {}", other_input.label),
                    columns_with_float(cli, vec!["pm"], vec![]),
                );
                let mut row = vec![Cell::Rat(p.clone())];
                if !cli.exact {
                    row.push(Cell::Float(to_f64(&p)));
                }
                t.push(row);
                tables.push(t);
            }
            emit(&tables, cli.format, out).map_err(io_err)?;
            Ok(0)
        }
        Cmd::Verify => {
            let outcomes = twopart::acceptance::run_all()?;
            let mut all_ok = true;
            for o in &outcomes {
                writeln!(out, "{}", o.line()).map_err(io_err)?;
                all_ok &= o.passed;
            }
            writeln!(
                out,
                "{} of {} criteria passed",
                outcomes.iter().filter(|o| o.passed).count(),
                outcomes.len()
            )
            .map_err(io_err)?;
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}

/// Append a float companion column unless --exact was given, then the tail
/// columns.
fn columns_with_float(
    cli: &Cli,
    mut head: Vec<&'static str>,
    tail: Vec<&'static str>,
) -> Vec<&'static str> {
    if !cli.exact {
        head.push("value_float");
    }
    head.extend(tail);
    head
}

fn table1(cli: &Cli) -> twopart::Result<Table> {
    let rows = match &cli.table1_fixture {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
            table_data::parse_table1(&text)?
        }
        None => table_data::builtin_table1(),
    };
    let mut t = Table::new(
        "table1: published constant lower bounds",
        vec![
            "interval",
            "n_min_sym",
            "sym_bound",
            "n_min_classical",
            "linear_bound",
            "symplectic_bound",
        ],
    );
    for row in &rows {
        t.push(row.raw.iter().map(|s| Cell::Text(s.clone())).collect());
    }
    Ok(t)
}

fn table2() -> Table {
    let (rows, total) = involutions::table2();
    let mut t = Table::new(
        "table2: strong-involution window calculation",
        vec!["interval", "factor", "sn_constant", "contribution"],
    );
    for row in rows {
        t.push(vec![
            Cell::Text(row.interval.into()),
            Cell::Float(row.factor),
            Cell::Float(row.sn_constant),
            Cell::Float(row.contribution),
        ]);
    }
    t.push(vec![
        Cell::Text("total".into()),
        Cell::Empty,
        Cell::Empty,
        Cell::Float(total),
    ]);
    t
}

fn pm_rows_table(name: &str, rows: &[PmRow], k1_note: &str) -> Table {
    let mut t = Table::new(
        name,
        vec!["k", "s_not8_coeff", "s_not4_coeff", "s_not2_coeff", "sqrt_coeff", "uses_chi"],
    );
    t.push(vec![
        Cell::Text("1".into()),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Text(k1_note.into()),
        Cell::Text("no".into()),
    ]);
    for row in rows {
        let label = if row.k_lo == row.k_hi {
            row.k_lo.to_string()
        } else {
            format!("{}-{}", row.k_lo, row.k_hi)
        };
        let coeff_at = |p0: u64| {
            row.s_terms
                .iter()
                .find(|&&(_, _, p)| p == p0)
                .map(|&(n, d, _)| Cell::Rat(Rat::new((n as i64).into(), (d as i64).into())))
                .unwrap_or(Cell::Empty)
        };
        t.push(vec![
            Cell::Text(label),
            coeff_at(8),
            coeff_at(4),
            coeff_at(2),
            Cell::Rat(Rat::new(
                (row.sqrt_coeff.0 as i64).into(),
                (row.sqrt_coeff.1 as i64).into(),
            )),
            Cell::Text(if row.uses_chi { "yes" } else { "no" }.into()),
        ]);
    }
    t
}

fn table4(cli: &Cli, qmod4: u8) -> twopart::Result<Table> {
    if qmod4 != 1 && qmod4 != 3 {
        return Err(Error::Domain("--qmod4 must be 1 or 3".into()));
    }
    let rows = weyl::table4()?;
    let mut t = Table::new(
        format!("table4: orthogonal exponent-class weights (q = {qmod4} mod 4)"),
        columns_with_float(cli, vec!["group", "two_part_exponent", "weight"], vec!["lower_bound"]),
    );
    for row in rows {
        let w = if qmod4 == 1 {
            row.weight_q1.clone()
        } else {
            row.weight_q3.clone()
        };
        let mut cells = vec![
            Cell::Text(row.group.into()),
            Cell::Text(row.exp.label()),
            Cell::Rat(w.clone()),
        ];
        if !cli.exact {
            cells.push(Cell::Float(to_f64(&w)));
        }
        cells.push(Cell::Rat(row.lower_bound.clone()));
        t.push(cells);
    }
    Ok(t)
}

fn bound_table(
    cli: &Cli,
    spec: &GroupSpec,
    target: u128,
    mode: BoundMode,
    projective: bool,
) -> twopart::Result<Table> {
    let mut t = Table::new(
        format!("lower bounds for {} at 2-part order {target}", spec.label()),
        columns_with_float(cli, vec!["method", "value"], vec!["simplified_floor", "provenance"]),
    );
    let push_report = |t: &mut Table, method: String, rep: &bounds::BoundReport| {
        let mut row = vec![Cell::Text(method)];
        match rep.value.exact() {
            Some(r) => {
                row.push(Cell::Rat(r.clone()));
                if !cli.exact {
                    row.push(Cell::Float(rep.value.to_f64()));
                }
            }
            None => {
                row.push(Cell::Float(rep.value.to_f64()));
                if !cli.exact {
                    row.push(Cell::Float(rep.value.to_f64()));
                }
            }
        }
        row.push(rep.simplified.map(Cell::Float).unwrap_or(Cell::Empty));
        row.push(Cell::Text(rep.provenance.into()));
        t.push(row);
    };

    let torus = bounds::quokka_lower_bound(spec, target, mode)?;
    push_report(&mut t, format!("torus-sum ({})", mode.label()), &torus);

    match bounds::named_bound(spec, target) {
        Ok(named) => {
            push_report(&mut t, "named-row".into(), &named);
            if projective {
                let pspec = GroupSpec::with_variant(
                    spec.family,
                    spec.rank,
                    spec.q,
                    Variant::Projective,
                )?;
                let adjusted = bounds::projective_adjust(&named, &pspec)?;
                push_report(&mut t, "named-row (central quotient)".into(), &adjusted);
            }
        }
        Err(Error::BoundNotApplicable(reason)) => {
            let width = t.columns.len();
            let mut row = vec![
                Cell::Text("named-row".into()),
                Cell::Text("no bound from this theorem".into()),
            ];
            while row.len() < width - 1 {
                row.push(Cell::Empty);
            }
            row.push(Cell::Text(reason));
            t.push(row);
        }
        Err(e) => return Err(e),
    }
    Ok(t)
}

fn pm_table(_cli: &Cli, cs: &CentralizerSpec) -> twopart::Result<Table> {
    let mut t = Table::new(
        format!(
            "pair-probability bounds for {} factors, d={}, m={}, q={}",
            cs.kind.label(),
            cs.d,
            cs.m,
            cs.q
        ),
        vec!["method", "value_float", "value_exact", "note"],
    );
    match involutions::pm_balanced_bound(cs) {
        Ok(rep) => {
            t.push(vec![
                Cell::Text("balanced".into()),
                Cell::Float(rep.value),
                rep.computed_exact.map(Cell::Rat).unwrap_or(Cell::Empty),
                Cell::Text(format!(
                    "floor {} (range {}), recomputed {}",
                    fmt_f64(rep.floor),
                    rep.range,
                    fmt_f64(rep.computed)
                )),
            ]);
        }
        Err(Error::Domain(reason)) => {
            t.push(vec![
                Cell::Text("balanced".into()),
                Cell::Text("not applicable".into()),
                Cell::Empty,
                Cell::Text(reason),
            ]);
        }
        Err(e) => return Err(e),
    }
    match involutions::pm_general_bound(cs) {
        Ok(rep) => {
            t.push(vec![
                Cell::Text("per-rank".into()),
                Cell::Float(rep.value),
                rep.exact.map(Cell::Rat).unwrap_or(Cell::Empty),
                Cell::Text(rep.formula.into()),
            ]);
        }
        Err(Error::BoundNotApplicable(reason)) => {
            t.push(vec![
                Cell::Text("per-rank".into()),
                Cell::Text("not covered".into()),
                Cell::Empty,
                Cell::Text(reason),
            ]);
        }
        Err(e) => return Err(e),
    }
    let corollary = involutions::corollary_bound(cs.d)?;
    t.push(vec![
        Cell::Text("dimension-only".into()),
        Cell::Float(corollary.value),
        Cell::Empty,
        Cell::Text(format!(
            "K/sqrt(d) with derived K = {}",
            fmt_f64(corollary.k_constant)
        )),
    ]);
    Ok(t)
}

fn census_tables(cli: &Cli, label: &str, table: &census::CensusTable) -> Table {
    let kind = if table.approximate {
        "APPROXIMATE random-word sample (not uniform)"
    } else {
        "exact enumeration"
    };
    let mut t = Table::new(
        format!("census of {label} ({kind}; total {})", table.total),
        columns_with_float(cli, vec!["two_part_order", "count", "proportion"], vec![]),
    );
    for (&key, &count) in &table.by_two_part {
        let p = table.proportion(key);
        let mut row = vec![
            Cell::Count(key),
            Cell::Count(count),
            Cell::Rat(p.clone()),
        ];
        if !cli.exact {
            row.push(Cell::Float(to_f64(&p)));
        }
        t.push(row);
    }
    t
}

fn parse_builtin(spec: &str) -> twopart::Result<(BuiltinFamily, usize, u64)> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Domain(format!(
            "builtin spec must be FAMILY,DIM,P (e.g. GL,2,3), got {spec:?}"
        )));
    }
    let family = BuiltinFamily::parse(parts[0])?;
    let dim: usize = parts[1]
        .parse()
        .map_err(|_| Error::Domain(format!("bad dimension {:?}", parts[1])))?;
    let p: u64 = parts[2]
        .parse()
        .map_err(|_| Error::Domain(format!("bad characteristic {:?}", parts[2])))?;
    Ok((family, dim, p))
}

fn load_group(
    file: Option<&std::path::Path>,
    builtin: Option<&str>,
) -> twopart::Result<census::MatrixGroupInput> {
    match (file, builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
            census::parse_group_file(&text)
        }
        (None, Some(spec)) => {
            let (family, dim, p) = parse_builtin(spec)?;
            census::builtin_generators(family, dim, p)
        }
        _ => Err(Error::Domain(
            "census needs exactly one of --file or --builtin".into(),
        )),
    }
}

/// A pm-against spec: `builtin:GL,2,3`, a bare `GL,2,3`, or a file path.
fn load_group_spec(spec: &str) -> twopart::Result<census::MatrixGroupInput> {
    if let Some(rest) = spec.strip_prefix("builtin:") {
        let (family, dim, p) = parse_builtin(rest)?;
        return census::builtin_generators(family, dim, p);
    }
    if spec.contains(',') && !std::path::Path::new(spec).exists() {
        let (family, dim, p) = parse_builtin(spec)?;
        return census::builtin_generators(family, dim, p);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Domain(format!("cannot read {spec}: {e}")))?;
    census::parse_group_file(&text)
}
