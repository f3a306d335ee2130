use std::process::ExitCode;

use clap::{Parser, Subcommand};

use stackenum_cli::verify::{self, Limits, Suite};
use stackenum_cli::{
    brute_force_warning, count, curves, render_series, render_table, series_record, table, Method,
    SeriesFormat, TableFormat,
};

/// Exact counts of m-regular d-contact stacks.
#[derive(Parser)]
#[command(name = "stackenum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn positive() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(1..)
}

#[derive(Subcommand)]
enum Command {
    /// Print s_{m,d}(n).
    Count {
        #[arg(long, value_parser = positive())]
        m: usize,
        #[arg(long, value_parser = positive())]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Gf)]
        method: Method,
    },
    /// Print the table of s_{m,d}(n) for m = 1..m_max, n = 1..n_max.
    Table {
        #[arg(long, value_parser = positive())]
        d: usize,
        #[arg(long, default_value_t = 6, value_parser = positive())]
        m_max: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
        #[arg(long, value_enum, default_value_t = Method::Gf)]
        method: Method,
    },
    /// Print the coefficients of S_{m,d} through the given order.
    Series {
        #[arg(long, value_parser = positive())]
        m: usize,
        #[arg(long, value_parser = positive())]
        d: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Json)]
        format: SeriesFormat,
        #[arg(long, value_enum, default_value_t = Method::Gf)]
        method: Method,
    },
    /// Print growth-curve data as long-format CSV (m,d,n,count).
    Curves {
        #[arg(long, value_delimiter = ',', default_values_t = [2, 5], value_parser = positive())]
        m: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3], value_parser = positive())]
        d: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Run an invariant suite; exit 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, value_parser = positive())]
        d: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_parser = positive())]
        m_max: Option<usize>,
    },
}

fn run(command: Command) -> stackenum::Result<ExitCode> {
    match command {
        Command::Count { m, d, n, method } => {
            if let Some(w) = brute_force_warning(m, d, n, method) {
                eprintln!("{w}");
            }
            println!("{}", count(m, d, n, method)?);
        }
        Command::Table {
            d,
            m_max,
            n_max,
            format,
            method,
        } => {
            if let Some(w) = brute_force_warning(1, d, n_max, method) {
                eprintln!("{w}");
            }
            let rows = table(d, m_max, n_max, method)?;
            print!("{}", render_table(d, &rows, format));
        }
        Command::Series {
            m,
            d,
            order,
            format,
            method,
        } => {
            if let Some(w) = brute_force_warning(m, d, order, method) {
                eprintln!("{w}");
            }
            print!(
                "{}",
                render_series(&series_record(m, d, order, method)?, format)
            );
        }
        Command::Curves { m, d, n_max } => {
            print!("{}", curves(&m, &d, n_max)?);
        }
        Command::Verify {
            suite,
            d,
            n_max,
            m_max,
        } => {
            let report = verify::run(suite, Limits { d, n_max, m_max })?;
            print!("{}", report.render());
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
