//! Command-line front end over the character library: single values,
//! whole tables, the closed-form classification, and the oracle scan.
//!
//! Exit codes: 0 success (for `classify`, membership; for `verify` and
//! `regress`, a clean run), 1 negative or failed outcome, 2 usage error,
//! 3 resource limit refused.

mod store;

use clap::{Parser, Subcommand, ValueEnum};
use signclass::{
    an_char_value, classify, mn_value, partitions_of, AnClass, AnError, AnIrreducible, AnTable,
    CharError, ClassLabel, Group, Partition, ScanOptions, SnTable, VerifyError, TABLE_LIMIT,
};
use std::fmt::Display;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "signclass", version, about = "Exact S_n and A_n character computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the S_n character chi^lambda on the class gamma
    Char {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        gamma: Partition,
    },
    /// Evaluate an A_n irreducible character on a labeled class
    Anchar {
        #[arg(long)]
        lambda: Partition,
        /// Character label, required exactly when lambda is self-conjugate
        #[arg(long, value_parser = parse_label)]
        chi: Option<ClassLabel>,
        #[arg(long)]
        gamma: Partition,
        /// Class label, required exactly when gamma has distinct odd parts
        #[arg(long = "class", value_parser = parse_label)]
        class_label: Option<ClassLabel>,
    },
    /// Classify one cycle type by the closed form (JSON on stdout)
    Classify {
        #[arg(long)]
        gamma: Partition,
    },
    /// Print a full character table
    Table {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = Group::Sn)]
        group: Group,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Compare the closed form against the brute-force oracle over a range
    Verify {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = Group::Sn)]
        group: Group,
        /// Worker threads (0 = all available)
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Restrict the scan to one cycle type
        #[arg(long)]
        gamma: Option<Partition>,
        /// Keep scanning past the first witness of each verdict
        #[arg(long)]
        exhaustive: bool,
        /// Record wall-clock timing in the report
        #[arg(long)]
        stats: bool,
    },
    /// Re-derive every pinned character-value fixture
    Regress,
    /// List the partitions of n in reverse-lexicographic order
    Partitions {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

fn parse_label(s: &str) -> Result<ClassLabel, String> {
    match s {
        "+" => Ok(ClassLabel::Plus),
        "-" => Ok(ClassLabel::Minus),
        other => Err(format!("expected \"+\" or \"-\", got {other:?}")),
    }
}

struct Config {
    cache_dir: Option<PathBuf>,
    table_limit: u64,
}

impl Config {
    fn from_env() -> Self {
        Config { cache_dir: store::cache_dir(), table_limit: TABLE_LIMIT }
    }
}

fn usage(err: &dyn Display) -> i32 {
    eprintln!("error: {err}");
    2
}

fn limit(err: &dyn Display) -> i32 {
    eprintln!("error: {err}");
    3
}

fn main() {
    let cli = Cli::parse();
    let config = Config::from_env();
    let code = match cli.command {
        Command::Char { lambda, gamma } => cmd_char(&lambda, &gamma),
        Command::Anchar { lambda, chi, gamma, class_label } => {
            cmd_anchar(lambda, chi, gamma, class_label)
        }
        Command::Classify { gamma } => cmd_classify(&gamma),
        Command::Table { n, group, format } => cmd_table(&config, n, group, format),
        Command::Verify { from, to, group, workers, gamma, exhaustive, stats } => {
            cmd_verify(from, to, group, ScanOptions { workers, gamma, exhaustive, record_timing: stats })
        }
        Command::Regress => cmd_regress(),
        Command::Partitions { n, format } => cmd_partitions(n, format),
    };
    std::process::exit(code);
}

fn cmd_char(lambda: &Partition, gamma: &Partition) -> i32 {
    match mn_value(lambda, gamma) {
        Ok(value) => {
            println!("{value}");
            0
        }
        Err(err) => usage(&err),
    }
}

fn cmd_anchar(
    lambda: Partition,
    chi_label: Option<ClassLabel>,
    gamma: Partition,
    class_label: Option<ClassLabel>,
) -> i32 {
    if gamma.n() < 2 {
        return usage(&AnError::DegreeTooSmall { n: gamma.n() });
    }
    let class = match AnClass::new(gamma, class_label) {
        Ok(class) => class,
        Err(err) => return usage(&err),
    };
    let conjugate = lambda.conjugate();
    let chi = if lambda == conjugate {
        match chi_label {
            Some(label) => AnIrreducible::Split { lambda, label },
            None => return usage(&AnError::CharLabelRequired { lambda }),
        }
    } else if chi_label.is_some() {
        return usage(&AnError::LabelOnPair { lambda });
    } else if lambda > conjugate {
        AnIrreducible::Pair { repr: lambda, partner: conjugate }
    } else {
        AnIrreducible::Pair { repr: conjugate, partner: lambda }
    };
    match an_char_value(&chi, &class) {
        Ok(value) => {
            println!("{value}");
            0
        }
        Err(err @ AnError::RadicandOverflow) => limit(&err),
        Err(err) => usage(&err),
    }
}

fn cmd_classify(gamma: &Partition) -> i32 {
    let result = classify(gamma);
    println!("{}", serde_json::to_string(&result).expect("classification serializes"));
    i32::from(!result.an_sign_partition)
}

fn cmd_table(config: &Config, n: u64, group: Group, format: TableFormat) -> i32 {
    if n > config.table_limit {
        return limit(&format!("full table for n = {n} exceeds the limit {}", config.table_limit));
    }
    let dir = config.cache_dir.as_deref();
    match group {
        Group::Sn => match store::sn_table_cached(dir, n, config.table_limit) {
            Ok(table) => {
                print_sn_table(&table, format);
                0
            }
            Err(err @ CharError::TableTooLarge { .. }) => limit(&err),
            Err(err) => usage(&err),
        },
        Group::An => match store::an_table_cached(dir, n, config.table_limit) {
            Ok(table) => {
                print_an_table(&table, format);
                0
            }
            Err(err @ AnError::TableTooLarge { .. }) => limit(&err),
            Err(err) => usage(&err),
        },
    }
}

fn print_sn_table(table: &SnTable, format: TableFormat) {
    match format {
        TableFormat::Text => print!("{}", align_tsv(&table.to_tsv())),
        TableFormat::Tsv => print!("{}", table.to_tsv()),
        TableFormat::Json => println!("{}", table.to_json()),
    }
}

fn print_an_table(table: &AnTable, format: TableFormat) {
    match format {
        TableFormat::Text => print!("{}", align_tsv(&table.to_tsv())),
        TableFormat::Tsv => print!("{}", table.to_tsv()),
        TableFormat::Json => println!("{}", table.to_json()),
    }
}

/// Pads TSV cells into aligned columns: the row-label column flush left,
/// value columns flush right.
fn align_tsv(tsv: &str) -> String {
    let rows: Vec<Vec<&str>> = tsv.lines().map(|line| line.split('\t').collect()).collect();
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; columns];
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            if i == 0 {
                out.push_str(&format!("{cell:<width$}", width = widths[0]));
            } else {
                out.push_str(&format!("  {cell:>width$}", width = widths[i]));
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out
}

fn cmd_verify(from: u64, to: u64, group: Group, options: ScanOptions) -> i32 {
    match signclass::check_equivalence(from, to, group, options) {
        Ok(report) => {
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            i32::from(!report.mismatches.is_empty())
        }
        Err(err) => {
            let code = match &err {
                VerifyError::RangeTooLarge { .. } | VerifyError::GammaTooLarge { .. } => 3,
                VerifyError::An(AnError::TableTooLarge { .. } | AnError::RadicandOverflow) => 3,
                VerifyError::Char(CharError::TableTooLarge { .. }) => 3,
                VerifyError::Pool { .. } | VerifyError::PropertyViolation { .. } => 1,
                _ => 2,
            };
            eprintln!("error: {err}");
            code
        }
    }
}

fn cmd_regress() -> i32 {
    let outcomes = match signclass::regression_suite() {
        Ok(outcomes) => outcomes,
        Err(err) => {
            eprintln!("error: {err}");
            return 1;
        }
    };
    let mut failed = 0;
    for outcome in &outcomes {
        let value = format!(
            "chi^{}_{}",
            outcome.lambda.bracketed(),
            outcome.gamma.bracketed()
        );
        if outcome.pass {
            println!("pass  {}: {} = {}", outcome.id, value, outcome.actual);
        } else {
            failed += 1;
            println!(
                "FAIL  {}: {} expected {} got {}",
                outcome.id, value, outcome.expected, outcome.actual
            );
        }
    }
    println!("{} fixtures, {} passed, {} failed", outcomes.len(), outcomes.len() - failed, failed);
    i32::from(failed != 0)
}

fn cmd_partitions(n: u64, format: ListFormat) -> i32 {
    match format {
        ListFormat::Text => {
            for p in partitions_of(n) {
                println!("{p}");
            }
        }
        ListFormat::Json => {
            let all: Vec<Partition> = partitions_of(n).collect();
            println!("{}", serde_json::to_string(&all).expect("partitions serialize"));
        }
    }
    0
}
