mod args;

use std::fs;
use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use cfgsg_core::bounds::{
    emit_table1, emit_table2, table1_csv, table1_text, table2_csv, table2_text,
};
use cfgsg_core::golomb::{known_ruler, MAX_SEARCH_ORDER};
use cfgsg_core::{
    admits_pattern, affine_restriction, brute_force_exists, cyclic_from_ruler, d_closure, glue,
    projective_plane, shortest_ruler, AffinePlane, ConfigurationFile, Existence, GolombRuler,
    IncidenceStructure, LinearPattern, NumericalSemigroup, PatternVerdict,
};
use clap::Parser;
use serde_json::json;

use args::{Cli, Command, Construct, Table};

/// A failure reported as `error: <code>: <message>` with exit status 1.
struct Failure {
    code: &'static str,
    message: String,
}

impl From<cfgsg_core::Error> for Failure {
    fn from(e: cfgsg_core::Error) -> Self {
        Failure {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure {
        code: "io",
        message: format!("{}: {e}", path.display()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}: {}", f.code, f.message.replace('\n', " "));
            ExitCode::from(1)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("CFGSG_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Semigroup { generators, json } => {
            let s = NumericalSemigroup::from_generators(&generators)?;
            if json {
                let out = json!({
                    "generators": s.generators(),
                    "multiplicity": s.multiplicity(),
                    "conductor": s.conductor(),
                    "genus": s.genus(),
                    "gaps": s.gaps(),
                });
                println!("{out}");
            } else {
                println!("generators: {}", join(s.generators()));
                println!("multiplicity: {}", s.multiplicity());
                println!("conductor: {}", s.conductor());
                println!("frobenius: {}", s.frobenius_number());
                println!("genus: {}", s.genus());
                println!("gaps: {}", join(&s.gaps()));
            }
        }
        Command::Pattern {
            generators,
            pattern,
            include_zero,
            json,
        } => {
            let s = NumericalSemigroup::from_generators(&generators)?;
            let p: LinearPattern = pattern.parse()?;
            let verdict = admits_pattern(&s, &p, include_zero);
            match (&verdict, json) {
                (PatternVerdict::Admitted { window, conclusive }, true) => println!(
                    "{}",
                    json!({"pattern": p.to_string(), "admitted": true, "window": [window.0, window.1], "conclusive": conclusive})
                ),
                (PatternVerdict::Counterexample { tuple, value }, true) => println!(
                    "{}",
                    json!({"pattern": p.to_string(), "admitted": false, "counterexample": tuple, "value": *value as i64})
                ),
                (PatternVerdict::Admitted { window, conclusive }, false) => {
                    let scope = if *conclusive { "" } else { " (within window only)" };
                    println!("{p}: admitted, checked members in [{}, {}]{scope}", window.0, window.1);
                }
                (PatternVerdict::Counterexample { tuple, value }, false) => {
                    println!("{p}: counterexample ({}) gives {value}, not in S", join(tuple));
                }
            }
        }
        Command::Construct { kind, output } => {
            let text = construct(kind)?;
            emit(&text, output.as_deref())?;
        }
        Command::Validate { input, r, k } => {
            let text = match &input {
                Some(path) => fs::read_to_string(path).map_err(|e| io_failure(path, e))?,
                None => {
                    let mut buf = String::new();
                    io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| io_failure(Path::new("<stdin>"), e))?;
                    buf
                }
            };
            let file = ConfigurationFile::from_json(&text)?;
            let (r, k) = (r.unwrap_or(file.r), k.unwrap_or(file.k));
            let s = file.structure()?;
            let report = s.validate(r, k);
            let d = s.associated_integer(r, k).ok();
            println!(
                "{}",
                json!({
                    "is_configuration": report.is_configuration(),
                    "v": s.num_points(),
                    "b": s.num_lines(),
                    "r": r,
                    "k": k,
                    "d": d,
                    "failures": report.failures,
                })
            );
            if !report.is_configuration() {
                return Err(Failure {
                    code: "not_a_configuration",
                    message: format!("{} finding(s); first: {}", report.failures.len(), report.failures[0]),
                });
            }
        }
        Command::Closure {
            r,
            k,
            limit,
            recipes,
        } => {
            let closure = d_closure(r, k, limit)?;
            println!("{}", closure.to_json(recipes));
        }
        Command::Golomb { order, max_length } => {
            let (ruler, certified) = if order <= MAX_SEARCH_ORDER {
                (shortest_ruler(order, max_length)?, true)
            } else {
                let ruler = known_ruler(order).ok_or(cfgsg_core::Error::UnknownOrder(order))?;
                (ruler, false)
            };
            println!(
                "{}",
                json!({
                    "order": ruler.order(),
                    "length": ruler.length(),
                    "marks": ruler.marks(),
                    "certified": certified,
                })
            );
        }
        Command::Bounds { table } => match table {
            Table::Table1 {
                rmax,
                search_up_to,
                format,
            } => {
                let rows = emit_table1(rmax, search_up_to)?;
                if format.csv {
                    print!("{}", table1_csv(&rows));
                } else if format.json {
                    println!("{}", serde_json::to_string(&rows).unwrap());
                } else {
                    print!("{}", table1_text(&rows));
                }
            }
            Table::Table2 { format } => {
                let rows = emit_table2();
                if format.csv {
                    print!("{}", table2_csv(&rows));
                } else if format.json {
                    println!("{}", serde_json::to_string(&rows).unwrap());
                } else {
                    print!("{}", table2_text(&rows));
                }
            }
        },
        Command::Exists { v, b, r, k, budget } => {
            let out = match brute_force_exists(v, b, r, k, budget) {
                Existence::Exists(witness) => json!({
                    "result": "exists",
                    "witness": serde_json::to_value(ConfigurationFile::new(&witness, r, k)).unwrap(),
                }),
                Existence::NotExists => json!({"result": "not_exists"}),
                Existence::Unknown { nodes } => json!({"result": "unknown", "nodes": nodes}),
            };
            println!("{out}");
        }
    }
    Ok(())
}

fn construct(kind: Construct) -> Result<String, Failure> {
    let (structure, r, k) = match kind {
        Construct::Affine { r, k, q } => (affine_restriction(r, k, q)?, r, k),
        Construct::Cyclic { ruler, v } => {
            let ruler = GolombRuler::new(ruler)?;
            let order = ruler.order();
            (cyclic_from_ruler(&ruler, v)?, order, order)
        }
        Construct::Projective { q } => {
            let order = q as usize + 1;
            (projective_plane(q)?, order, order)
        }
        Construct::Plane { q } => {
            return Ok(AffinePlane::new(q)?.to_file().to_canonical_json());
        }
        Construct::Glue { a, b, r, k, n } => {
            let a = read_structure(&a)?;
            let b = read_structure(&b)?;
            (glue(&a, &b, r, k, n)?, r, k)
        }
    };
    Ok(ConfigurationFile::new(&structure, r, k).to_canonical_json())
}

fn read_structure(path: &Path) -> Result<IncidenceStructure, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(ConfigurationFile::from_json(&text)?.structure()?)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n")).map_err(|e| io_failure(path, e)),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
