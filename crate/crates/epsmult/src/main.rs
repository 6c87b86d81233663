//! Command-line front end: reads a session file declaring rings and ideals,
//! then runs one of the computation pipelines.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 mathematical refusal
//! (script-parity analytic-spread gate).

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use epsmult::blowup;
use epsmult::epsilon::{self, EpsilonOptions};
use epsmult::error::Error;
use epsmult::hilbert;
use epsmult::ideal_ops;
use epsmult::mixed;
use epsmult::oracle;
use epsmult::poly::format_q;
use epsmult::session::{parse_session, Session};
use epsmult::Ideal;

#[derive(Parser)]
#[command(
    name = "epsmult",
    about = "Epsilon multiplicities of homogeneous ideals over QQ",
    version
)]
struct Cli {
    /// Session file declaring rings and ideals ('-' for stdin)
    #[arg(short, long, global = true, default_value = "-")]
    input: String,

    /// Output format on stdout
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Refuse (exit 2) when the analytic spread is not maximal, like the
    /// reference computer-algebra script
    #[arg(long, global = true)]
    script_parity: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    /// associated-graded values e_i(m|I)
    Kv,
    /// Rees-grading values e_i(R[It])
    Ht,
}

#[derive(Subcommand)]
enum Command {
    /// Epsilon multiplicity via the saturated-Rees Hilbert series pipeline
    Epsilon {
        #[arg(long)]
        ideal: String,
        /// Generation-degree bound for the saturated Rees algebra
        #[arg(long)]
        sat_bound: u32,
        /// Verify the bound by one extra saturation (slower)
        #[arg(long)]
        check_bound: bool,
    },
    /// Values of the epsilon function n -> length(sat(I^n)/I^n)
    EpsilonFunction {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        sat_bound: u32,
        /// Largest power to report
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long)]
        check_bound: bool,
    },
    /// Brute-force epsilon table, power by power
    Oracle {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        max_power: u32,
    },
    /// Mixed multiplicities
    Mixed {
        #[arg(long)]
        ideal: String,
        /// Truncate the extension ideal at this degree (default: the maximal
        /// generator degree) and report associated-graded values including
        /// the top index
        #[arg(long)]
        truncate: Option<i64>,
        #[arg(long, value_enum, default_value_t = ConventionArg::Kv)]
        convention: ConventionArg,
    },
    /// Saturation of a power of an ideal with respect to the maximal ideal
    Saturate {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Minimal homogeneous generators
    Mingens {
        #[arg(long)]
        ideal: String,
    },
    /// Rees algebra presentation (defining ideal and bidegrees)
    Rees {
        #[arg(long)]
        ideal: String,
    },
    /// Analytic spread
    AnalyticSpread {
        #[arg(long)]
        ideal: String,
    },
    /// Top truncated mixed multiplicities e_2(n|<J_bs>) for intersections of
    /// powers of two points on a plane curve
    FatpointTable {
        /// Preset curve: 'elliptic' (x^3+y^3+z^3 with points [1:-1:0],
        /// [1:0:-1]) or 'cuspidal' (x^3-y^2 z with points [0:0:1], [0:1:0])
        #[arg(long)]
        curve: String,
        /// Power pairs a,b separated by ';', e.g. "1,1;1,2;2,2"
        #[arg(long)]
        powers: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            match e.downcast_ref::<Error>() {
                Some(Error::AnalyticSpreadNotMaximal) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_session(cli: &Cli) -> anyhow::Result<Session> {
    let text = read_input(&cli.input)?;
    Ok(parse_session(&text)?)
}

fn find_ideal<'s>(session: &'s Session, name: &str) -> anyhow::Result<&'s Ideal> {
    session
        .ideal(name)
        .ok_or_else(|| anyhow::anyhow!("ideal '{}' is not declared in the session", name))
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Epsilon {
            ideal,
            sat_bound,
            check_bound,
        } => {
            let session = load_session(cli)?;
            let i = find_ideal(&session, ideal)?;
            let report = epsilon::epsilon_report(
                i,
                *sat_bound,
                EpsilonOptions {
                    script_parity: cli.script_parity,
                    check_bound: *check_bound,
                },
            )?;
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => {
                    for w in &report.warnings {
                        eprintln!("warning: {}", w);
                    }
                    println!("series = {}", report.series.to_text());
                    println!("epsilon = {}", format_q(&report.epsilon));
                }
            }
        }
        Command::EpsilonFunction {
            ideal,
            sat_bound,
            max_n,
            check_bound,
        } => {
            let session = load_session(cli)?;
            let i = find_ideal(&session, ideal)?;
            let report = epsilon::epsilon_report(
                i,
                *sat_bound,
                EpsilonOptions {
                    script_parity: cli.script_parity,
                    check_bound: *check_bound,
                },
            )?;
            let coeffs = report.series.expand1(*max_n as usize);
            match cli.format {
                Format::Json => {
                    let values: Vec<String> = coeffs.iter().map(format_q).collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "values": values,
                            "quasipolynomial": report.quasi.as_ref().map(|q| q.to_json()),
                            "epsilon": format_q(&report.epsilon),
                        })
                    );
                }
                Format::Text => {
                    for (n, c) in coeffs.iter().enumerate() {
                        println!("{}\t{}", n, format_q(c));
                    }
                }
            }
        }
        Command::Oracle { ideal, max_power } => {
            let session = load_session(cli)?;
            let i = find_ideal(&session, ideal)?;
            let table = oracle::epsilon_table(i, *max_power)?;
            match cli.format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = table
                        .iter()
                        .map(|(v, l)| serde_json::json!({"power": v, "length": l.to_string()}))
                        .collect();
                    println!("{}", serde_json::json!({ "table": rows }));
                }
                Format::Text => {
                    println!("power,length");
                    for (v, l) in &table {
                        println!("{},{}", v, l);
                    }
                }
            }
        }
        Command::Mixed {
            ideal,
            truncate,
            convention,
        } => {
            let session = load_session(cli)?;
            let i = find_ideal(&session, ideal)?;
            let mm = match convention {
                ConventionArg::Ht => {
                    let pres = blowup::rees_presentation(i)?;
                    mixed::bigraded_mixed(&pres)?
                }
                ConventionArg::Kv => {
                    let beta = match truncate {
                        Some(b) => *b,
                        None => i
                            .generators()
                            .iter()
                            .filter_map(|g| i.ring().multidegree(g))
                            .map(|d| d.0[0])
                            .max()
                            .unwrap_or(1),
                    };
                    mixed::truncated_mixed(i, beta)?
                }
            };
            match cli.format {
                Format::Json => println!("{}", mm.to_json()),
                Format::Text => {
                    for w in &mm.warnings {
                        eprintln!("warning: {}", w);
                    }
                    for (k, v) in mm.values.iter().enumerate() {
                        println!("e_{} = {}", k, v);
                    }
                }
            }
        }
        Command::Saturate { ideal, power } => {
            let session = load_session(cli)?;
            let i = find_ideal(&session, ideal)?;
            let p = i.power(*power);
            let sat = ideal_ops::saturate(&p, None)?;
            let mins = ideal_ops::minimal_generators(&sat);
            print_generators(cli, i, &mins);
        }
        Command::Mingens { ideal } => {
            let session = load_session(cli)?;
            let i = find_ideal(&session, ideal)?;
            let mins = ideal_ops::minimal_generators(i);
            print_generators(cli, i, &mins);
        }
        Command::Rees { ideal } => {
            let session = load_session(cli)?;
            let i = find_ideal(&session, ideal)?;
            let pres = blowup::rees_presentation(i)?;
            match cli.format {
                Format::Json => {
                    let vars: Vec<serde_json::Value> = pres
                        .ring
                        .names()
                        .iter()
                        .zip(pres.ring.degrees())
                        .map(|(n, d)| serde_json::json!({"name": n, "bidegree": d.0}))
                        .collect();
                    let gens: Vec<String> = pres
                        .defining
                        .iter()
                        .map(|g| g.display(pres.ring.names(), pres.ring.default_order()))
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({"variables": vars, "defining_ideal": gens})
                    );
                }
                Format::Text => {
                    let names = pres.ring.names();
                    for (n, d) in names.iter().zip(pres.ring.degrees()) {
                        println!("var {} bidegree ({},{})", n, d.0[0], d.0[1]);
                    }
                    for g in &pres.defining {
                        println!("{}", g.display(names, pres.ring.default_order()));
                    }
                }
            }
        }
        Command::AnalyticSpread { ideal } => {
            let session = load_session(cli)?;
            let i = find_ideal(&session, ideal)?;
            let spread = ideal_ops::analytic_spread(i)?;
            let dim = ideal_ops::krull_dim_ring(i.ring());
            if cli.script_parity && spread != dim {
                return Err(Error::AnalyticSpreadNotMaximal.into());
            }
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"analytic_spread": spread, "ring_dimension": dim})
                ),
                Format::Text => println!("{}", spread),
            }
        }
        Command::FatpointTable { curve, powers } => {
            let (session_text, p1, p2) = match curve.as_str() {
                "elliptic" => (
                    "ring R = QQ[x, y, z] / (x^3 + y^3 + z^3);\n\
                     ideal P1 = (x + y, z) in R;\n\
                     ideal P2 = (x + z, y) in R;\n",
                    "P1",
                    "P2",
                ),
                "cuspidal" => (
                    "ring R = QQ[x, y, z] / (x^3 - y^2*z);\n\
                     ideal P1 = (x, y) in R;\n\
                     ideal P2 = (x, z) in R;\n",
                    "P1",
                    "P2",
                ),
                other => {
                    return Err(anyhow::anyhow!(
                        "unknown curve preset '{}'; use 'elliptic' or 'cuspidal'",
                        other
                    ))
                }
            };
            let session = parse_session(session_text).expect("preset parses");
            let p1 = session.ideal(p1).unwrap();
            let p2 = session.ideal(p2).unwrap();
            let mut rows = Vec::new();
            for pair in powers.split(';') {
                let parts: Vec<&str> = pair.split(',').collect();
                if parts.len() != 2 {
                    return Err(anyhow::anyhow!("bad power pair '{}'", pair));
                }
                let a: u32 = parts[0].trim().parse()?;
                let b: u32 = parts[1].trim().parse()?;
                let i = ideal_ops::intersect(&p1.power(a), &p2.power(b));
                let mins = ideal_ops::minimal_generators(&i);
                let bs = mins
                    .iter()
                    .filter_map(|g| i.ring().multidegree(g))
                    .map(|d| d.0[0])
                    .max()
                    .unwrap_or(1);
                let mm = mixed::truncated_mixed(&i, bs)?;
                let e_top = *mm.values.last().unwrap();
                rows.push((a, b, bs, e_top));
            }
            match cli.format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(a, b, bs, e)| {
                            serde_json::json!({"a": a, "b": b, "b_s": bs, "e_top": e})
                        })
                        .collect();
                    println!("{}", serde_json::json!({ "curve": curve, "rows": rows }));
                }
                Format::Text => {
                    println!("a,b,b_s,e_top");
                    for (a, b, bs, e) in rows {
                        println!("{},{},{},{}", a, b, bs, e);
                    }
                }
            }
        }
    }
    Ok(())
}

fn print_generators(cli: &Cli, ideal: &Ideal, gens: &[epsmult::Polynomial]) {
    let ring = ideal.ring();
    let rendered: Vec<String> = gens
        .iter()
        .map(|g| g.display(ring.names(), ring.default_order()))
        .collect();
    match cli.format {
        Format::Json => println!("{}", serde_json::json!({ "generators": rendered })),
        Format::Text => {
            for g in rendered {
                println!("{}", g);
            }
        }
    }
}

// keep the unused import warning away when hilbert is only used indirectly
#[allow(unused_imports)]
use hilbert as _hilbert_used_by_reexports;
