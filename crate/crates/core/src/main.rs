//! `pq`: command-line front end for the path monoid library. Thin shell —
//! every verb maps straight onto a library operation.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pq::enumeration::{
    self, count_by_descents, count_by_image_size, count_by_max_image, count_idempotents,
    count_idempotents_by_top, count_monotone_idempotents, count_nilpotents, count_preimages,
    count_zigzag_words, idempotent_paths, verify_identity_rect, verify_identity_square,
    CountReport,
};
use pq::idempotent::{is_idempotent_path, is_nilpotent_path, is_upper_zigzag};
use pq::quantale;
use pq::verify::{run_all, VerifyConfig};
use pq::{Emmentaler, JoinContMap, Path};

#[derive(Parser)]
#[command(
    name = "pq",
    version,
    about = "Products, residuals, and idempotent counting for discrete lattice paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two composable paths
    Product {
        left: String,
        right: String,
        /// Keep the block boundaries visible as vertical bars
        #[arg(long)]
        traced: bool,
    },
    /// Dual sum of two composable paths
    Oplus { left: String, right: String },
    /// Report the properties of one path
    Check { word: String },
    /// The join-continuous map of a path, as `v0,v1,.../m`
    Map { word: String },
    /// The path of a join-continuous map given as `v0,v1,.../m`
    Path { map: String },
    /// The idempotent paths of P(n,n)
    Idempotents {
        n: usize,
        /// Print only the count
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print the words, one per line (the default)
        #[arg(long)]
        list: bool,
    },
    /// The interval system of an idempotent path, as `y-x;y-x;...`
    Emmentaler { word: String },
    /// The idempotent path of an interval system given as `y-x;y-x;...`
    FromEmmentaler { system: String },
    /// Exact counts: formula next to an enumeration oracle
    Count {
        /// One of: idempotents, monotone-idempotents, idempotents-by-top,
        /// nilpotents, descents, image-size, max-image, zigzag-words,
        /// preimages
        family: String,
        /// Family parameters (integers; a path word for `preimages`)
        params: Vec<String>,
        /// Middle dimension for `preimages`
        #[arg(long)]
        m: Option<usize>,
        /// Largest instance the enumeration oracle still runs on
        #[arg(long)]
        oracle_cap: Option<usize>,
    },
    /// Check the summation identities: one argument for the square form,
    /// three for the rectangular form
    Identity { args: Vec<usize> },
    /// Epi-mono factorization through the descents
    Factor { word: String },
    /// Largest path whose product with the divisor stays below the target
    Residual {
        side: Side,
        /// Target for `right`, divisor for `left`
        first: String,
        /// Divisor for `right`, target for `left`
        second: String,
    },
    /// ASCII drawing of a path on a dot grid
    Render { word: String },
    /// Run the exhaustive oracle suite
    Verify {
        /// Cap for whole-path-space sweeps
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Cap for pair/triple product sweeps
        #[arg(long, default_value_t = 3)]
        oracle_cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    /// r with f (x) r <= h, arguments f h
    Left,
    /// r with r (x) f <= h, arguments h f
    Right,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<pq::Error> for Failure {
    fn from(e: pq::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Product {
            left,
            right,
            traced,
        } => {
            let w = Path::parse(&left)?;
            let u = Path::parse(&right)?;
            let t = quantale::product_traced(&w, &u)?;
            if json {
                print_json(json!({
                    "left": w.word(),
                    "right": u.word(),
                    "product": t.word().word(),
                    "traced": t.to_string(),
                    "bars": t.bars(),
                }));
            } else if traced {
                println!("{t}");
            } else {
                println!("{}", t.word());
            }
        }
        Command::Oplus { left, right } => {
            let w = Path::parse(&left)?;
            let u = Path::parse(&right)?;
            let s = quantale::oplus(&w, &u)?;
            if json {
                print_json(json!({
                    "left": w.word(),
                    "right": u.word(),
                    "oplus": s.word(),
                }));
            } else {
                println!("{s}");
            }
        }
        Command::Check { word } => check(&Path::parse(&word)?, json)?,
        Command::Map { word } => {
            let f = JoinContMap::from_path(&Path::parse(&word)?);
            if json {
                print_json(json!({
                    "map": f.to_string(),
                    "values": f.values(),
                    "codomain": f.codomain_end(),
                }));
            } else {
                println!("{f}");
            }
        }
        Command::Path { map } => {
            let w = JoinContMap::parse(&map)?.to_path();
            if json {
                print_json(json!({ "word": w.word() }));
            } else {
                println!("{w}");
            }
        }
        Command::Idempotents { n, count, list: _ } => {
            let words: Vec<String> = idempotent_paths(n).map(|w| w.word()).collect();
            if json {
                let mut doc = json!({ "n": n, "count": words.len() });
                if !count {
                    doc["paths"] = json!(words);
                }
                print_json(doc);
            } else if count {
                println!("{}", words.len());
            } else {
                for w in words {
                    println!("{w}");
                }
            }
        }
        Command::Emmentaler { word } => {
            let w = Path::parse(&word)?;
            let e = Emmentaler::from_path(&w)?;
            if json {
                let (f, g) = e.to_maps();
                print_json(json!({
                    "word": w.word(),
                    "emmentaler": e.to_string(),
                    "zigzag": e.encode().to_string(),
                    "map": f.to_string(),
                    "adjoint": g.to_string(),
                }));
            } else {
                println!("{e}");
            }
        }
        Command::FromEmmentaler { system } => {
            let e = Emmentaler::parse(&system)?;
            let w = e.to_path();
            if json {
                print_json(json!({
                    "emmentaler": e.to_string(),
                    "word": w.word(),
                    "map": e.to_maps().0.to_string(),
                    "zigzag": e.encode().to_string(),
                }));
            } else {
                println!("{w}");
            }
        }
        Command::Count {
            family,
            params,
            m,
            oracle_cap,
        } => {
            let report = run_count(&family, &params, m, oracle_cap)?;
            print_report(&report, json);
        }
        Command::Identity { args } => {
            let report = match args.len() {
                1 => verify_identity_square(args[0]),
                3 => verify_identity_rect(args[0], args[1], args[2]),
                other => {
                    return Err(Failure::Usage(format!(
                        "identity takes 1 argument (square) or 3 (rectangular), got {other}"
                    )))
                }
            };
            print_report(&report, json);
        }
        Command::Factor { word } => {
            let f = quantale::factorize(&Path::parse(&word)?);
            if json {
                print_json(json!({
                    "left": f.left.word(),
                    "right": f.right.word(),
                    "descents": f.descents,
                }));
            } else {
                println!("left: {}", f.left);
                println!("right: {}", f.right);
                println!("descents: {}", f.descents);
            }
        }
        Command::Residual {
            side,
            first,
            second,
        } => {
            let a = Path::parse(&first)?;
            let b = Path::parse(&second)?;
            let r = match side {
                Side::Right => quantale::residual_right(&a, &b)?,
                Side::Left => quantale::residual_left(&a, &b)?,
            };
            if json {
                print_json(json!({ "residual": r.word() }));
            } else {
                println!("{r}");
            }
        }
        Command::Render { word } => {
            println!("{}", Path::parse(&word)?.render_ascii());
        }
        Command::Verify { n, oracle_cap } => {
            let cfg = VerifyConfig {
                sweep_cap: n,
                product_cap: oracle_cap,
            };
            let checks = run_all(&cfg);
            let pass = checks.iter().all(|c| c.pass);
            if json {
                print_json(json!({
                    "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                    "pass": pass,
                }));
            } else {
                for c in &checks {
                    println!(
                        "{}: {} ({})",
                        c.name,
                        if c.pass { "ok" } else { "FAIL" },
                        c.detail
                    );
                }
                println!(
                    "{} of {} checks passed",
                    checks.iter().filter(|c| c.pass).count(),
                    checks.len()
                );
            }
            if !pass {
                return Err(Failure::Domain("oracle disagreement detected".into()));
            }
        }
    }
    Ok(())
}

fn check(w: &Path, json: bool) -> Result<(), Failure> {
    let f = JoinContMap::from_path(w);
    let square = w.is_square();
    let mut doc = json!({
        "word": w.word(),
        "n": w.width(),
        "m": w.height(),
        "square": square,
        "descents": w.descent_count(),
        "map": f.to_string(),
        "image": f.image().into_iter().collect::<Vec<_>>(),
    });
    if square {
        let idempotent = is_idempotent_path(w)?;
        doc["idempotent"] = json!(idempotent);
        doc["upper_zigzag"] = json!(is_upper_zigzag(w)?);
        doc["nilpotent"] = json!(is_nilpotent_path(w)?);
        doc["aperiodicity_index"] = json!(f.aperiodicity_index()?);
        if idempotent {
            let e = Emmentaler::from_path(w)?;
            doc["emmentaler"] = json!(e.to_string());
            doc["zigzag"] = json!(e.encode().to_string());
        }
    }
    if json {
        print_json(doc);
        return Ok(());
    }
    println!("word: {}", w.word());
    println!("dimensions: ({},{})", w.width(), w.height());
    println!("descents: {}", w.descent_count());
    println!("map: {f}");
    if square {
        println!("idempotent: {}", doc["idempotent"]);
        println!("upper_zigzag: {}", doc["upper_zigzag"]);
        println!("nilpotent: {}", doc["nilpotent"]);
        println!("aperiodicity_index: {}", doc["aperiodicity_index"]);
        if doc["idempotent"] == json!(true) {
            println!("emmentaler: {}", doc["emmentaler"].as_str().unwrap());
            println!("zigzag: {}", doc["zigzag"].as_str().unwrap());
        }
    }
    Ok(())
}

fn run_count(
    family: &str,
    params: &[String],
    middle: Option<usize>,
    oracle_cap: Option<usize>,
) -> Result<CountReport, Failure> {
    let ints = |expected: usize| -> Result<Vec<usize>, Failure> {
        if params.len() != expected {
            return Err(Failure::Usage(format!(
                "family `{family}` takes {expected} integer parameter(s), got {}",
                params.len()
            )));
        }
        params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|e| Failure::Usage(format!("bad parameter `{p}`: {e}")))
            })
            .collect()
    };
    let enum_cap = oracle_cap.unwrap_or(enumeration::DEFAULT_ENUM_ORACLE_CAP);
    let product_cap = oracle_cap.unwrap_or(enumeration::DEFAULT_PRODUCT_ORACLE_CAP);
    match family {
        "idempotents" => Ok(count_idempotents(ints(1)?[0], enum_cap)),
        "monotone-idempotents" => Ok(count_monotone_idempotents(ints(1)?[0], enum_cap)),
        "idempotents-by-top" => {
            let p = ints(2)?;
            Ok(count_idempotents_by_top(p[0], p[1], enum_cap)?)
        }
        "nilpotents" => Ok(count_nilpotents(ints(1)?[0], product_cap)),
        "descents" => {
            let p = ints(3)?;
            Ok(count_by_descents(p[0], p[1], p[2], product_cap))
        }
        "image-size" => {
            let p = ints(2)?;
            Ok(count_by_image_size(p[0], p[1], product_cap)?)
        }
        "max-image" => {
            let p = ints(2)?;
            Ok(count_by_max_image(p[0], p[1], product_cap)?)
        }
        "zigzag-words" => Ok(count_zigzag_words(ints(1)?[0])),
        "preimages" => {
            if params.len() != 1 {
                return Err(Failure::Usage(
                    "family `preimages` takes one path word".into(),
                ));
            }
            let w = Path::parse(&params[0])?;
            let m = middle.ok_or_else(|| {
                Failure::Usage("family `preimages` needs --m <middle dimension>".into())
            })?;
            Ok(count_preimages(&w, m, oracle_cap.unwrap_or(4)))
        }
        other => Err(Failure::Usage(format!("unknown counting family `{other}`"))),
    }
}

fn print_report(report: &CountReport, json: bool) {
    if json {
        print_json(report.to_json());
    } else {
        println!("{report}");
    }
}

fn print_json(value: serde_json::Value) {
    println!("{value}");
}
