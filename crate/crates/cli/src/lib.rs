//! Command-line front end for `rank2-ehrhart`.
//!
//! Exit codes: 0 when every check passes, 1 when a verification fails, 2 for
//! usage errors, malformed partitions and oracle guard violations.

mod report;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use rank2_ehrhart::analysis::{
    bounds_check, bounds_lemma_value, positivity_check, real_root_certificate, stepping_check,
    superadditivity_check, theta_grid, trig_identity_residual, y_grid, LEMMA_TOLERANCE,
};
use rank2_ehrhart::exactmath::{CoeffOrder, Polynomial, Rational};
use rank2_ehrhart::formulas::{
    ehr_hypersimplex, ehr_matroid, ehr_q, ehr_r_halfopen, ehr_simplex, hstar_matroid,
};
use rank2_ehrhart::matroid::{enumerate_partitions, sparse_paving_partitions, Rank2Matroid};
use rank2_ehrhart::oracle::{
    count_lattice_points, count_region, oracle_ehrhart, separation_audit, Guard, Region,
};

use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_MAX_N: usize = 10;
const ORACLE_MAX_N: usize = 7;
const SEPARATION_MAX_T: u64 = 4;
const TRIG_MAX_N: u32 = 20;
const THETA_POINTS: usize = 50;
const BOUNDS_LEMMA_MAX_N: i64 = 50;
const Y_STEPS: usize = 100;

#[derive(Parser, Debug)]
#[command(
    name = "rank2-ehrhart",
    version,
    about = "Ehrhart and h*-polynomials of rank-2 matroid base polytopes"
)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ehrhart polynomial (and h*-vector) of one matroid.
    Ehrhart(PartitionArg),
    /// h*-vector of one matroid.
    Hstar(PartitionArg),
    /// Real-root certificate of the h*-polynomial.
    Roots(PartitionArg),
    /// Brute-force lattice-point count of the t-th dilate.
    Count {
        #[command(flatten)]
        partition: PartitionArg,
        #[arg(long)]
        t: u64,
        #[command(flatten)]
        guard: GuardArg,
    },
    /// Brute-force counts of the half-open regions that decompose the hypersimplex.
    Regions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u64,
        #[command(flatten)]
        guard: GuardArg,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Subcommand, Debug)]
enum Check {
    /// Every Ehrhart coefficient is positive.
    Positivity(Range),
    /// The minimal and uniform matroids bound every connected matroid.
    Bounds(Range),
    /// P_{a,n} + P_{b,n} against P_{a+b,n}, with the single-step inequality.
    Superadditivity(Range),
    /// Formulas against brute-force counts, plus the separation audit.
    Oracle {
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        guard: GuardArg,
    },
    /// Root certificates for connected sparse paving matroids.
    Roots(Range),
    /// Sampled checks of the trigonometric identity and the bounds lemma.
    Lemmas,
    /// All of the above.
    All(Range),
}

#[derive(Args, Debug)]
struct PartitionArg {
    /// Hyperplane sizes, e.g. 2,1,1.
    #[arg(long)]
    partition: String,
}

#[derive(Args, Debug)]
struct GuardArg {
    /// Lift the enumeration size limits (dimension 10, t = 8).
    #[arg(long)]
    unsafe_no_guard: bool,
}

impl GuardArg {
    fn guard(&self) -> Guard {
        if self.unsafe_no_guard {
            Guard::unlimited()
        } else {
            Guard::DEFAULT
        }
    }
}

#[derive(Args, Debug)]
struct Range {
    /// Check exactly this ground set size.
    #[arg(long, conflicts_with = "max_n")]
    n: Option<usize>,
    /// Check every ground set size up to this one.
    #[arg(long)]
    max_n: Option<usize>,
}

impl Range {
    fn bounds(&self, floor: usize) -> (usize, usize) {
        match (self.n, self.max_n) {
            (Some(n), _) => (n.max(floor), n),
            (None, Some(m)) => (floor, m),
            (None, None) => (floor, DEFAULT_MAX_N),
        }
    }
}

/// Usage-level failure: printed to stderr, exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<Box<dyn Emit>, UsageError>;

trait Emit {
    fn emit(&self, json: bool, out: &mut dyn Write) -> std::io::Result<bool>;
}

impl<R: Report> Emit for R {
    fn emit(&self, json: bool, out: &mut dyn Write) -> std::io::Result<bool> {
        if json {
            let doc = serde_json::to_string(self).map_err(std::io::Error::other)?;
            writeln!(out, "{doc}")?;
        } else {
            write!(out, "{}", self.text())?;
        }
        Ok(self.passed())
    }
}

fn boxed<R: Report + 'static>(r: R) -> Outcome {
    Ok(Box::new(r))
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Ehrhart(p) => ehrhart(p),
        Command::Hstar(p) => hstar(p),
        Command::Roots(p) => roots(p),
        Command::Count {
            partition,
            t,
            guard,
        } => count(partition, *t, guard.guard()),
        Command::Regions { n, t, guard } => regions(*n, *t, guard.guard()),
        Command::Verify { check } => verify(check),
    };
    match outcome {
        Ok(report) => match report.emit(cli.json, out) {
            Ok(true) => EXIT_OK,
            Ok(false) => EXIT_FAILED,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn parse(p: &PartitionArg) -> Result<Rank2Matroid, UsageError> {
    Ok(p.partition.parse::<Rank2Matroid>()?)
}

fn ehrhart(p: &PartitionArg) -> Outcome {
    let m = parse(p)?;
    let poly = ehr_matroid(&m);
    boxed(EhrhartReport {
        n: m.n(),
        connected: m.is_connected(),
        ehrhart: poly.to_strings(),
        hstar: hstar_matroid(&m).coeffs().to_vec(),
        partition: m.to_string(),
        polynomial: poly,
    })
}

fn hstar(p: &PartitionArg) -> Outcome {
    let m = parse(p)?;
    boxed(HStarReport::new(
        m.to_string(),
        m.n(),
        m.is_connected(),
        &hstar_matroid(&m),
    ))
}

fn roots(p: &PartitionArg) -> Outcome {
    let m = parse(p)?;
    let h = hstar_matroid(&m);
    boxed(RootsReport::new(
        m.to_string(),
        &h,
        &real_root_certificate(&h),
    ))
}

fn count(p: &PartitionArg, t: u64, guard: Guard) -> Outcome {
    let m = parse(p)?;
    let count = count_lattice_points(&m, t, guard)?;
    let formula = ehr_matroid(&m).eval_int(t as i64);
    boxed(CountReport {
        partition: m.to_string(),
        t,
        count,
        agrees: formula == Rational::from_integer(BigInt::from(count)),
        formula: formula.to_string(),
    })
}

fn regions(n: usize, t: u64, guard: Guard) -> Outcome {
    let ni = n as i64;
    let mut rows = Vec::new();
    let mut row = |region: Region, formula: Polynomial| -> Result<u64, UsageError> {
        let count = count_region(region, t, guard)?;
        let value = formula.eval_int(t as i64);
        rows.push(RegionRow {
            region: region.to_string(),
            count,
            agrees: value == Rational::from_integer(BigInt::from(count)),
            formula: value.to_string(),
        });
        Ok(count)
    };
    let whole = row(Region::Hypersimplex { n }, ehr_hypersimplex(ni)?)?;
    let mut pieces = 0;
    for k in 1..n {
        row(Region::Q { k, n }, ehr_q(k as i64, ni, false)?)?;
        pieces += row(Region::QHalfOpen { k, n }, ehr_q(k as i64, ni, true)?)?;
    }
    for l in 1..n {
        row(Region::RHalfOpen { l, n }, ehr_r_halfopen(l as i64, ni)?)?;
    }
    pieces += row(Region::EmbeddedSimplex { n }, ehr_simplex(ni - 1))?;
    boxed(RegionsReport {
        n,
        t,
        regions: rows,
        decomposition_sum: pieces,
        decomposition_holds: pieces == whole,
    })
}

fn verify(check: &Check) -> Outcome {
    match check {
        Check::Positivity(r) => boxed(positivity_sweep(r.bounds(2))),
        Check::Bounds(r) => boxed(bounds_sweep(r.bounds(3))),
        Check::Superadditivity(r) => boxed(superadditivity_sweep(r.bounds(1).1)),
        Check::Oracle { range, guard } => boxed(oracle_sweep(range.bounds(2), guard.guard())?),
        Check::Roots(r) => boxed(roots_sweep(r.bounds(4))),
        Check::Lemmas => boxed(lemmas_sweep()?),
        Check::All(r) => {
            let max_n = r.bounds(2).1;
            let positivity = positivity_sweep(r.bounds(2));
            let bounds = bounds_sweep(r.bounds(3));
            let superadditivity = superadditivity_sweep(max_n);
            let oracle = oracle_sweep((2, max_n.min(ORACLE_MAX_N)), Guard::DEFAULT)?;
            let roots = roots_sweep(r.bounds(4));
            let lemmas = lemmas_sweep()?;
            let passed = positivity.passed
                && bounds.passed
                && superadditivity.passed
                && oracle.passed
                && roots.passed
                && lemmas.passed;
            boxed(AllReport {
                check: "all",
                max_n,
                passed,
                positivity,
                bounds,
                superadditivity,
                oracle,
                roots,
                lemmas,
            })
        }
    }
}

fn positivity_sweep((min_n, max_n): (usize, usize)) -> PositivityReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in min_n..=max_n {
        for m in enumerate_partitions(n, 2) {
            let p = positivity_check(&ehr_matroid(&m));
            checked += 1;
            if !(p.positive && p.unit_constant) {
                failures.push(PositivityRow {
                    partition: m.to_string(),
                    positive: p.positive,
                    unit_constant: p.unit_constant,
                    witness: Witness::from_pair(&p.witness),
                });
            }
        }
    }
    PositivityReport {
        check: "positivity",
        min_n,
        max_n,
        checked,
        passed: failures.is_empty(),
        failures,
    }
}

fn bounds_sweep((min_n, max_n): (usize, usize)) -> BoundsSweep {
    let partitions: Vec<BoundsRow> = (min_n..=max_n)
        .flat_map(|n| enumerate_partitions(n, 3))
        .map(|m| {
            BoundsRow::new(
                m.to_string(),
                &bounds_check(&m).expect("three or more parts are connected"),
            )
        })
        .collect();
    BoundsSweep {
        check: "bounds",
        min_n,
        max_n,
        checked: partitions.len(),
        passed: partitions.iter().all(|r| r.passed),
        partitions,
    }
}

fn superadditivity_sweep(max_n: usize) -> SuperadditivityReport {
    let mut pairs = 0;
    let mut stepping_pairs = 0;
    let mut failures = Vec::new();
    for n in 1..=max_n as i64 {
        for a in 0..=n {
            for b in a..=(n - a) {
                let c = superadditivity_check(a, b, n).expect("range checked");
                pairs += 1;
                let expected = if a == 0 {
                    CoeffOrder::Equal
                } else {
                    CoeffOrder::StrictOnPositiveDegree
                };
                if c.order != expected {
                    failures.push(PairRow {
                        a,
                        b,
                        n,
                        relation: "superadditivity",
                        order: c.order.as_str(),
                        witness: Witness::from_pair(&c.witness),
                    });
                }
                if a >= 1 {
                    let s = stepping_check(a, b, n).expect("range checked");
                    stepping_pairs += 1;
                    if !s.order.is_leq() {
                        failures.push(PairRow {
                            a,
                            b,
                            n,
                            relation: "stepping",
                            order: s.order.as_str(),
                            witness: Witness::from_pair(&s.witness),
                        });
                    }
                }
            }
        }
    }
    SuperadditivityReport {
        check: "superadditivity",
        max_n,
        pairs,
        stepping_pairs,
        passed: failures.is_empty(),
        failures,
    }
}

fn oracle_sweep((min_n, max_n): (usize, usize), guard: Guard) -> Result<OracleReport, UsageError> {
    let mut partitions = Vec::new();
    for n in min_n..=max_n {
        for m in enumerate_partitions(n, 2) {
            let formula_matches = oracle_ehrhart(&m, guard)? == ehr_matroid(&m);
            let mut outside = 0;
            let mut separation_passes = true;
            for t in 1..=SEPARATION_MAX_T {
                let audit = separation_audit(&m, t, guard)?;
                outside += audit.outside;
                separation_passes &= audit.passes();
            }
            partitions.push(OracleRow {
                partition: m.to_string(),
                formula_matches,
                separation_outside: outside,
                separation_passes,
            });
        }
    }
    Ok(OracleReport {
        check: "oracle",
        max_n,
        max_separation_t: SEPARATION_MAX_T,
        checked: partitions.len(),
        passed: partitions
            .iter()
            .all(|r| r.formula_matches && r.separation_passes),
        partitions,
    })
}

fn roots_sweep((min_n, max_n): (usize, usize)) -> RootsSweep {
    let mut certificates = Vec::new();
    let mut passed = true;
    for n in min_n..=max_n {
        for m in sparse_paving_partitions(n) {
            let h = hstar_matroid(&m);
            if h.degree().unwrap_or(0) <= 1 {
                continue;
            }
            let c = real_root_certificate(&h);
            passed &= c.real_rooted
                && c.all_roots_negative
                && c.degree == n / 2
                && c.unimodal
                && c.log_concave
                && c.implications_hold();
            certificates.push(RootsReport::new(m.to_string(), &h, &c));
        }
    }
    RootsSweep {
        check: "roots",
        min_n,
        max_n,
        checked: certificates.len(),
        passed,
        certificates,
    }
}

fn lemmas_sweep() -> Result<LemmasReport, UsageError> {
    let mut failures = Vec::new();
    let mut max_trig: f64 = 0.0;
    for n in 0..=TRIG_MAX_N {
        for theta in theta_grid(THETA_POINTS) {
            let r = trig_identity_residual(n, theta)?;
            max_trig = max_trig.max(r);
            if r.is_nan() || r >= LEMMA_TOLERANCE {
                failures.push(LemmaFailure {
                    lemma: "trig-identity",
                    params: format!("n={n} theta={theta}"),
                    value: r,
                });
            }
        }
    }
    let mut min_margin = f64::INFINITY;
    for a in 1..=2 {
        for n in 9..=BOUNDS_LEMMA_MAX_N {
            let bound = a as f64 / n as f64;
            for y in y_grid(Y_STEPS) {
                let v = bounds_lemma_value(a, n, y)?;
                min_margin = min_margin.min(bound - v.abs());
                if !(-bound + LEMMA_TOLERANCE < v && v < bound - LEMMA_TOLERANCE) {
                    failures.push(LemmaFailure {
                        lemma: "bounds",
                        params: format!("a={a} n={n} y={y}"),
                        value: v,
                    });
                }
            }
        }
    }
    Ok(LemmasReport {
        check: "lemmas",
        tolerance: LEMMA_TOLERANCE,
        trig_max_n: TRIG_MAX_N,
        theta_points: THETA_POINTS,
        max_trig_residual: max_trig,
        bounds_max_n: BOUNDS_LEMMA_MAX_N,
        y_points: Y_STEPS,
        min_bounds_margin: min_margin,
        passed: failures.is_empty(),
        failures,
    })
}
