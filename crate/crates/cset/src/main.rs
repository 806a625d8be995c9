//! Command-line front end for the `cset` library.
//!
//! Every subcommand prints machine-readable output: one JSON document per
//! line (an envelope with `schema_version`, `command`, and `payload`), or CSV
//! for `census --format csv`. Domain failures print a JSON error payload and
//! exit 1; malformed invocations exit 2 with a message on stderr.

use std::num::NonZeroUsize;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cset::{
    ap_lower_bound, augment_zero_sum, census, certificate, check_prodset_theorem,
    check_scalar_theorem, check_scaled_difference, check_sumset2_theorem,
    check_union_t_condition, complete_extension, enumerate_complete, geometric_search,
    growth_table, normal_form, resolve_worker_count, scan_prime_conjecture, translate_search,
    Constructed, Error, GrowthRow, IntSet, TheoremReport, MAX_N,
};

#[derive(Parser)]
#[command(
    name = "cset",
    version,
    about = "Explore complete integer sets: membership checks, exhaustive censuses, \
             closure constructions, and conjecture scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a set is complete and print its certificate
    Check {
        /// Comma-separated integers, e.g. "3,5,7" or "-2, 5, 3, -1"
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Factor out the gcd of consecutive differences: A = a0 + d*A'
    NormalForm {
        /// Comma-separated integers with at least two elements
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Count the complete subsets of {1, ..., N}
    Census {
        /// Upper end of the ground set {1, ..., N}; at most 30
        #[arg(long)]
        n: u32,
        /// Smallest subset size to count
        #[arg(long, default_value_t = 2)]
        min_size: u32,
        /// Output format
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Worker threads (overrides the CSET_THREADS environment variable)
        #[arg(long)]
        threads: Option<NonZeroUsize>,
        /// Also report the count for each subset size
        #[arg(long)]
        histogram: bool,
    },
    /// List the complete subsets of {1, ..., N}, one record per set
    Enumerate {
        /// Upper end of the ground set {1, ..., N}; at most 30
        #[arg(long)]
        n: u32,
        /// Smallest subset size to emit
        #[arg(long, default_value_t = 2)]
        min_size: u32,
        /// Largest subset size to emit
        #[arg(long, default_value_t = MAX_N)]
        max_size: u32,
    },
    /// Lower bound on the census from odd-length arithmetic progressions
    ApBound {
        /// Upper end of the ground set {1, ..., N}
        #[arg(long)]
        n: u64,
    },
    /// Compare census counts or bounds against N*ln(N) and N*ln(N)*ln(ln(N))
    Growth {
        /// Ground-set sizes to tabulate, e.g. --ns 10,100,1000
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<u64>,
        /// Run the exact census for every N up to this value (and 30 at most)
        #[arg(long, default_value_t = 0)]
        exact_up_to: u32,
        /// Worker threads for the exact censuses
        #[arg(long)]
        threads: Option<NonZeroUsize>,
    },
    /// Check one closure construction and re-verify what it builds
    Theorem {
        #[command(subcommand)]
        part: TheoremPart,
    },
    /// Run one empirical conjecture scan
    Conjecture {
        #[command(subcommand)]
        scan: ConjectureScan,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum TheoremPart {
    /// Pairwise products of two complete sets: multiset divisibility check
    Prodset {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Union of two complete sets when every cross product x*y equals t*(x+y)
    UnionT {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Augment a complete set with a disjoint set that sums to zero
    Augment {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Scale a complete set by the gcd-like factor t
    ScaledDifference {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        t: i64,
    },
    /// Two-fold sumset: size and divisibility condition, then re-verification
    Sumset2 {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Scale a complete set by an arbitrary nonzero integer q
    Scalar {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
}

#[derive(Subcommand)]
enum ConjectureScan {
    /// First n odd primes: completeness vs. prime sums vs. omega(sum) = 2
    Primes {
        /// Largest prefix length to scan
        #[arg(long)]
        max_n: u32,
        /// Also scan even prefix lengths
        #[arg(long)]
        include_even: bool,
    },
    /// Try to complete a positive set by adding new positive integers
    Extend {
        /// Comma-separated positive integers
        #[arg(long)]
        set: String,
        /// Largest candidate element to try
        #[arg(long)]
        bound: u32,
        /// Most elements to add at once
        #[arg(long, default_value_t = 1)]
        max_added: u32,
    },
    /// Scan geometric sets {r, r^2, ..., r^n} for complete members
    Geometric {
        /// Smallest ratio to scan
        #[arg(long, allow_negative_numbers = true, default_value_t = -10)]
        r_min: i64,
        /// Largest ratio to scan
        #[arg(long, allow_negative_numbers = true, default_value_t = 10)]
        r_max: i64,
        /// Largest exponent to scan
        #[arg(long, default_value_t = 12)]
        n_max: u32,
    },
    /// Smallest positive shift that keeps a complete set complete
    Translate {
        /// Comma-separated integers forming a complete set
        #[arg(long)]
        set: String,
        /// Scan shifts s with 0 < s < max
        #[arg(long)]
        max: u32,
    },
}

enum Failure {
    Domain(Error),
    Parse(String),
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::Domain(error)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let label = cli.command.label();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(error)) => {
            emit(
                &label,
                json!({"error": {"kind": error.kind(), "message": error.to_string()}}),
            );
            ExitCode::from(1)
        }
        Err(Failure::Parse(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

impl Command {
    fn label(&self) -> String {
        match self {
            Command::Check { .. } => "check".into(),
            Command::NormalForm { .. } => "normal-form".into(),
            Command::Census { .. } => "census".into(),
            Command::Enumerate { .. } => "enumerate".into(),
            Command::ApBound { .. } => "ap-bound".into(),
            Command::Growth { .. } => "growth".into(),
            Command::Theorem { part } => format!(
                "theorem {}",
                match part {
                    TheoremPart::Prodset { .. } => "prodset",
                    TheoremPart::UnionT { .. } => "union-t",
                    TheoremPart::Augment { .. } => "augment",
                    TheoremPart::ScaledDifference { .. } => "scaled-difference",
                    TheoremPart::Sumset2 { .. } => "sumset2",
                    TheoremPart::Scalar { .. } => "scalar",
                }
            ),
            Command::Conjecture { scan } => format!(
                "conjecture {}",
                match scan {
                    ConjectureScan::Primes { .. } => "primes",
                    ConjectureScan::Extend { .. } => "extend",
                    ConjectureScan::Geometric { .. } => "geometric",
                    ConjectureScan::Translate { .. } => "translate",
                }
            ),
        }
    }
}

/// Print one envelope line: schema version, command label, payload.
fn emit(command: &str, payload: Value) {
    let record = json!({
        "schema_version": "1",
        "command": command,
        "payload": payload,
    });
    println!("{record}");
}

/// Parse a comma-separated integer literal such as "3, 5, 7".
///
/// Malformed integers are usage errors (exit 2); duplicate elements are
/// domain errors (exit 1) so callers can tell the two apart.
fn parse_set(literal: &str) -> Result<IntSet, Failure> {
    let mut elements = Vec::new();
    for chunk in literal.split(',') {
        let token = chunk.trim();
        let value: i64 = token.parse().map_err(|_| {
            Failure::Parse(format!(
                "invalid set literal: {token:?} is not a 64-bit integer"
            ))
        })?;
        elements.push(value);
    }
    Ok(IntSet::new(elements)?)
}

fn run(command: Command) -> Result<(), Failure> {
    let label = command.label();
    match command {
        Command::Check { set } => {
            let a = parse_set(&set)?;
            let cert = certificate(&a)?;
            let mut payload = json!({
                "elements": a.elements(),
                "sum": cert.sum,
                "complete": cert.witness.is_some(),
            });
            if let Some(witness) = &cert.witness {
                payload["witness"] = json!(witness.to_string());
            }
            if let Some(residue) = cert.residue {
                payload["residue"] = json!(residue);
            }
            emit(&label, payload);
        }
        Command::NormalForm { set } => {
            let a = parse_set(&set)?;
            let result = normal_form(&a)?;
            emit(
                &label,
                json!({
                    "original": result.original.elements(),
                    "d": result.d,
                    "normalized": result.normalized.elements(),
                }),
            );
        }
        Command::Census {
            n,
            min_size,
            format,
            threads,
            histogram,
        } => {
            let workers = resolve_worker_count(threads);
            let report = census(n, min_size, workers)?;
            match format {
                Format::Json => {
                    let by_size: Value = report
                        .by_size
                        .iter()
                        .map(|(size, count)| (size.to_string(), json!(count)))
                        .collect::<serde_json::Map<_, _>>()
                        .into();
                    emit(
                        &label,
                        json!({
                            "n": report.n,
                            "min_size": report.min_size,
                            "total": report.total,
                            "by_size": by_size,
                            "ap_lower_bound": report.ap_lower_bound,
                            "worker_count": report.worker_count,
                            "elapsed_ms": report.elapsed.as_millis() as u64,
                        }),
                    );
                }
                Format::Csv => {
                    println!("N,min_size,total,ap_lower_bound");
                    println!(
                        "{},{},{},{}",
                        report.n, report.min_size, report.total, report.ap_lower_bound
                    );
                    if histogram {
                        println!();
                        println!("size,count");
                        for (size, count) in &report.by_size {
                            println!("{size},{count}");
                        }
                    }
                }
            }
        }
        Command::Enumerate {
            n,
            min_size,
            max_size,
        } => {
            let count = enumerate_complete(n, min_size, max_size, |set| {
                emit(&label, json!({"elements": set.elements()}));
            })?;
            emit(&label, json!({"count": count}));
        }
        Command::ApBound { n } => {
            emit(&label, json!({"n": n, "ap_lower_bound": ap_lower_bound(n)}));
        }
        Command::Growth {
            ns,
            exact_up_to,
            threads,
        } => {
            let workers = resolve_worker_count(threads);
            let rows = growth_table(&ns, exact_up_to, workers)?;
            let rows: Vec<Value> = rows.iter().map(growth_row_payload).collect();
            emit(&label, json!({"rows": rows}));
        }
        Command::Theorem { part } => {
            let report = match part {
                TheoremPart::Prodset { a, b } => {
                    check_prodset_theorem(&parse_set(&a)?, &parse_set(&b)?)?
                }
                TheoremPart::UnionT { a, b } => {
                    check_union_t_condition(&parse_set(&a)?, &parse_set(&b)?)?
                }
                TheoremPart::Augment { a, h } => {
                    augment_zero_sum(&parse_set(&a)?, &parse_set(&h)?)?
                }
                TheoremPart::ScaledDifference { a, t } => {
                    check_scaled_difference(&parse_set(&a)?, t)?
                }
                TheoremPart::Sumset2 { a } => check_sumset2_theorem(&parse_set(&a)?)?,
                TheoremPart::Scalar { a, q } => check_scalar_theorem(q, &parse_set(&a)?)?,
            };
            emit(&label, theorem_payload(&report));
        }
        Command::Conjecture { scan } => run_conjecture(&label, scan)?,
    }
    Ok(())
}

fn growth_row_payload(row: &GrowthRow) -> Value {
    json!({
        "n": row.n,
        "count_or_bound": row.count_or_bound,
        "flavor": row.flavor.as_str(),
        "nlogn": row.nlogn,
        "nloglog": row.nloglog,
        "ratio_lower": row.ratio_lower,
        "ratio_upper": row.ratio_upper,
    })
}

fn theorem_payload(report: &TheoremReport) -> Value {
    let constructed = match &report.constructed {
        Constructed::Set(set) => json!({"set": set.elements()}),
        Constructed::Multiset {
            aggregate,
            dedup,
            dedup_complete,
        } => json!({
            "multiset": {
                "count": aggregate.count,
                "total": aggregate.total,
                "product_residue": aggregate.product_residue,
                "product_is_zero": aggregate.product_is_zero,
                "divisible": aggregate.divisible(),
            },
            "dedup": dedup.elements(),
            "dedup_complete": dedup_complete,
        }),
    };
    json!({
        "theorem_id": report.theorem_id.as_str(),
        "condition_met": report.condition_met,
        "condition_detail": report.condition_detail,
        "constructed": constructed,
        "constructed_complete": report.constructed_complete,
    })
}

fn run_conjecture(label: &str, scan: ConjectureScan) -> Result<(), Failure> {
    match scan {
        ConjectureScan::Primes { max_n, include_even } => {
            let findings = scan_prime_conjecture(max_n, include_even)?;
            let mut violations = Vec::new();
            for finding in &findings {
                if !finding.holds {
                    violations.push(finding.n);
                }
                emit(
                    label,
                    json!({
                        "n": finding.n,
                        "primes": finding.primes.elements(),
                        "sum": finding.sum,
                        "is_complete": finding.is_complete,
                        "sum_is_prime": finding.sum_is_prime,
                        "omega_of_sum": finding.omega_of_sum,
                        "holds": finding.holds,
                    }),
                );
            }
            emit(
                label,
                json!({
                    "violations": violations,
                    "holds": findings.len() - violations.len(),
                    "total": findings.len(),
                }),
            );
        }
        ConjectureScan::Extend {
            set,
            bound,
            max_added,
        } => {
            let base = parse_set(&set)?;
            match complete_extension(&base, bound, max_added)? {
                Some(result) => emit(
                    label,
                    json!({
                        "found": true,
                        "base": result.base.elements(),
                        "added": result.added,
                        "combined_complete": result.combined_complete,
                        "search_bound": result.search_bound,
                    }),
                ),
                None => emit(
                    label,
                    json!({
                        "found": false,
                        "base": base.elements(),
                        "search_bound": bound,
                    }),
                ),
            }
        }
        ConjectureScan::Geometric {
            r_min,
            r_max,
            n_max,
        } => {
            let hits = geometric_search(r_min, r_max, n_max);
            for (r, n) in &hits {
                emit(label, json!({"r": r, "n": n}));
            }
            emit(label, json!({"hits": hits.len()}));
        }
        ConjectureScan::Translate { set, max } => {
            let f = parse_set(&set)?;
            let shift = translate_search(&f, max)?;
            emit(
                label,
                json!({"found": shift.is_some(), "s": shift, "max": max}),
            );
        }
    }
    Ok(())
}
