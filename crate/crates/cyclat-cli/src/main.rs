//! Command-line front end: analysis of single vectors, census sweeps,
//! planar closed forms, the full-rank probability experiment, explicit
//! family construction, and permutation-invariance checks.
//!
//! All numeric output is exact: decimal integers, rationals as "p/q", and
//! interval bounds as 6-decimal fixed point with the safe rounding
//! direction stated. Identical inputs produce byte-identical output.
//!
//! Exit codes: 0 success, 1 when a verification fails (a bound violated,
//! a construction not verified), 2 on malformed input or guard overflow.

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

use cyclat::census::{
    census_circulant, dim2_closed_forms, prob_full_rank, tau_census, CensusRecord, DEFAULT_GUARD,
};
use cyclat::cyclic::{
    angles_certificate, circulant_lattice, in_d_n, in_r_n, in_rprime, lcm_family_vector,
    rotations_are_minimal_set,
};
use cyclat::perm::{is_invariant, is_signed_invariant, Permutation, SignedPermutation};
use cyclat::poly::{circulant_det_resultant, cyclic_order};
use cyclat::rational::{format_fixed, Rounding};
use cyclat::svp::{is_well_rounded, is_wr_prime, successive_minima};
use cyclat::{IntVec, Lattice};

#[derive(Parser)]
#[command(
    name = "cyclat",
    version,
    about = "Exact toolkit for cyclic and permutation-invariant sublattices of Z^N"
)]
struct Cli {
    /// Cap the worker pool used by counting sweeps.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single vector: cyclic order, determinant, minima,
    /// well-roundedness, membership predicates.
    Analyze {
        /// Comma-separated integer coordinates, e.g. 4,1
        #[arg(short = 'v', long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Census of rotation lattices with equal first and last minima <= R.
    Census {
        #[arg(short = 'N')]
        n: usize,
        #[arg(short = 'R')]
        r: u64,
        /// Emit a CSV header and row instead of a JSON line.
        #[arg(long)]
        csv: bool,
        /// Also emit one JSON line per deduplicated lattice.
        #[arg(long)]
        list_lattices: bool,
        /// Census of tau-invariant lattices for this N-cycle instead of
        /// the cyclic one, e.g. "(1 3 2)".
        #[arg(short = 't', long)]
        tau: Option<String>,
    },
    /// Planar closed forms, bound evaluation and brute-force cross-check.
    Dim2 {
        #[arg(short = 'R')]
        r: u64,
        /// Skip the brute-force count even when within guard.
        #[arg(long)]
        no_brute: bool,
    },
    /// Probability that a cube point generates a full-rank rotation
    /// lattice, against the guaranteed bound.
    Prob {
        #[arg(short = 'N')]
        n: usize,
        #[arg(short = 'R')]
        r: u64,
    },
    /// Build the vector (m, m/k_1, ..., m/k_{N-1}) and verify that its
    /// rotations are exactly the minimal vectors of their lattice.
    Construct {
        /// Comma-separated nonzero integers, e.g. 31,31
        #[arg(short = 'k', long, value_delimiter = ',', num_args = 1.., allow_hyphen_values = true)]
        k: Vec<i64>,
    },
    /// Check invariance of a lattice under a permutation, optionally
    /// signed.
    PermCheck {
        /// Cycle notation, 1-indexed, e.g. "(1 3 2)"
        #[arg(short = 't', long)]
        tau: String,
        /// Basis columns: coordinates comma-separated, columns separated
        /// by semicolons, e.g. "1,0;0,2"
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
        /// Optional +/-1 signs, comma-separated, one per coordinate.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            fail_input("--workers must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .expect("worker pool configured once at startup");
    }
    let guard = match std::env::var("CYCLAT_GUARD") {
        Ok(s) => match s.parse::<u64>() {
            Ok(g) if g > 0 => g,
            _ => fail_input("CYCLAT_GUARD must be a positive integer"),
        },
        Err(_) => DEFAULT_GUARD,
    };
    let code = match cli.command {
        Command::Analyze { vector } => analyze(&vector),
        Command::Census {
            n,
            r,
            csv,
            list_lattices,
            tau,
        } => census(n, r, csv, list_lattices, tau.as_deref(), guard),
        Command::Dim2 { r, no_brute } => dim2(r, no_brute),
        Command::Prob { n, r } => prob(n, r, guard),
        Command::Construct { k } => construct(&k),
        Command::PermCheck { tau, basis, signs } => perm_check(&tau, &basis, signs.as_deref()),
    };
    std::process::exit(code);
}

fn fail_input(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn parse_vector(s: &str) -> IntVec {
    let coords: Vec<BigInt> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .unwrap_or_else(|_| fail_input(&format!("bad integer '{t}' in vector")))
        })
        .collect();
    if coords.len() < 2 {
        fail_input("vector needs at least two coordinates");
    }
    IntVec::new(coords)
}

fn parse_basis(s: &str) -> Lattice {
    let cols: Vec<IntVec> = s.split(';').map(parse_vector).collect();
    if cols.iter().any(|c| c.dim() != cols[0].dim()) {
        fail_input("basis columns must share one dimension");
    }
    Lattice::from_vectors(&cols).unwrap_or_else(|e| fail_input(&format!("bad basis: {e}")))
}

fn json_ints(xs: &[BigInt]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn json_rat(r: &BigRational) -> String {
    format!("\"{}/{}\"", r.numer(), r.denom())
}

fn analyze(vector: &str) -> i32 {
    let a = parse_vector(vector);
    if a.is_zero() {
        fail_input("zero vector rejected");
    }
    let n = a.dim();
    let co = cyclic_order(&a).expect("nonzero");
    let det = circulant_det_resultant(&a);
    let lat = circulant_lattice(&a).expect("nonzero");
    let smin = successive_minima(&lat);
    println!(
        "{{\"n\":{},\"vector\":{},\"cyclic_order\":{},\"det\":{},\"resultant\":{},\"lambda_sq\":{},\"minimal_count\":{},\"wr\":{},\"wr_prime\":{},\"in_d_n\":{},\"in_r_n\":{},\"in_rprime\":{},\"angles_certificate\":{}}}",
        n,
        json_ints(a.coords()),
        co,
        det,
        det,
        json_ints(&smin.lambda_sq),
        smin.minimal_count(),
        is_well_rounded(&lat),
        is_wr_prime(&lat),
        in_d_n(&a),
        in_r_n(&a),
        in_rprime(&a),
        angles_certificate(&a),
    );
    0
}

fn census(n: usize, r: u64, csv: bool, list_lattices: bool, tau: Option<&str>, guard: u64) -> i32 {
    if n < 2 {
        fail_input("N must be at least 2");
    }
    if csv && list_lattices {
        fail_input("--csv and --list-lattices are mutually exclusive");
    }
    let inventory = match tau {
        None => census_circulant(n, r, guard),
        Some(t) => {
            let perm = Permutation::parse_cycles(t, n)
                .unwrap_or_else(|e| fail_input(&format!("bad permutation: {e}")));
            tau_census(n, &perm, r, guard)
        }
    };
    let inventory = inventory.unwrap_or_else(|e| fail_input(&format!("{e}")));
    if csv {
        println!("{}", CensusRecord::csv_header());
        println!("{}", inventory.record.to_csv_row());
    } else {
        println!("{}", inventory.record.to_json_line());
        if list_lattices {
            for class in &inventory.lattices {
                println!("{}", class.to_json_line());
            }
        }
    }
    0
}

fn dim2(r: u64, no_brute: bool) -> i32 {
    if r == 0 {
        fail_input("R must be at least 1");
    }
    let rep = dim2_closed_forms(r, !no_brute).unwrap_or_else(|e| fail_input(&format!("{e}")));
    let brute = rep
        .brute_count
        .map_or("null".to_string(), |b| b.to_string());
    let discrepancy = rep
        .discrepancy
        .as_ref()
        .map_or("null".to_string(), |d| d.to_string());
    let in_bounds = rep.in_bounds.map_or("null".to_string(), |b| b.to_string());
    println!(
        "{{\"R\":{},\"a_cap\":{},\"f2_formula\":{},\"g2_formula\":{},\"brute_count\":{},\"discrepancy\":{},\"lower_bound\":\"{}\",\"lower_rounding\":\"floor\",\"upper_bound\":\"{}\",\"upper_rounding\":\"ceil\",\"in_bounds\":{}}}",
        rep.r,
        rep.a_cap,
        rep.f2_formula,
        rep.g2_formula,
        brute,
        discrepancy,
        format_fixed(&rep.lower_bound.lo, 6, Rounding::Floor),
        format_fixed(&rep.upper_bound.hi, 6, Rounding::Ceil),
        in_bounds,
    );
    match rep.in_bounds {
        Some(false) => 1,
        _ => 0,
    }
}

fn prob(n: usize, r: u64, guard: u64) -> i32 {
    if n < 2 {
        fail_input("N must be at least 2");
    }
    let rep = prob_full_rank(n, r, guard).unwrap_or_else(|e| fail_input(&format!("{e}")));
    let hits: Vec<String> = rep
        .divisor_hits
        .iter()
        .map(|(d, c)| format!("[{d},{c}]"))
        .collect();
    println!(
        "{{\"N\":{},\"R\":{},\"total\":{},\"full_rank\":{},\"fraction\":{},\"bound\":{},\"ok\":{},\"divisor_hits\":[{}]}}",
        rep.n,
        rep.r,
        rep.total,
        rep.full_rank,
        json_rat(&rep.fraction),
        json_rat(&rep.bound),
        rep.ok,
        hits.join(","),
    );
    if rep.ok {
        0
    } else {
        1
    }
}

fn construct(k: &[i64]) -> i32 {
    if k.is_empty() {
        fail_input("need at least one k");
    }
    let ks: Vec<BigInt> = k.iter().map(|&x| BigInt::from(x)).collect();
    let a = lcm_family_vector(&ks).unwrap_or_else(|e| fail_input(&format!("{e}")));
    let verified = rotations_are_minimal_set(&a);
    let k_strs: Vec<String> = k.iter().map(|x| x.to_string()).collect();
    println!(
        "{{\"k\":[{}],\"vector\":{},\"norm_sq\":{},\"verified\":{}}}",
        k_strs.join(","),
        json_ints(a.coords()),
        a.norm_sq(),
        verified,
    );
    if verified {
        0
    } else {
        1
    }
}

fn perm_check(tau: &str, basis: &str, signs: Option<&str>) -> i32 {
    let lattice = parse_basis(basis);
    let n = lattice.ambient_dim();
    let perm = Permutation::parse_cycles(tau, n)
        .unwrap_or_else(|e| fail_input(&format!("bad permutation: {e}")));
    let (signed, invariant) = match signs {
        None => (false, is_invariant(&lattice, &perm)),
        Some(s) => {
            let parsed: Vec<i8> = s
                .split(',')
                .map(|t| match t.trim() {
                    "1" | "+1" => 1i8,
                    "-1" => -1i8,
                    other => fail_input(&format!("bad sign '{other}'")),
                })
                .collect();
            let sp = SignedPermutation::new(perm.clone(), parsed)
                .unwrap_or_else(|e| fail_input(&format!("{e}")));
            (true, is_signed_invariant(&lattice, &sp))
        }
    };
    println!(
        "{{\"tau\":\"{}\",\"n\":{},\"rank\":{},\"signed\":{},\"invariant\":{}}}",
        perm,
        n,
        lattice.rank(),
        signed,
        invariant,
    );
    0
}
