//! Report values: each renders as plain text or as JSON with a fixed key order.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::One;
use serde::{Serialize, Serializer};

use rank2_ehrhart::analysis::{BoundsReport, RootCertificate};
use rank2_ehrhart::exactmath::{Polynomial, Rational};
use rank2_ehrhart::formulas::HStarVector;

pub trait Report: Serialize {
    fn text(&self) -> String;

    /// Whether every check in the report succeeded; drives exit code 1.
    fn passed(&self) -> bool {
        true
    }
}

/// Big integers are emitted as JSON numbers without loss.
pub fn big_ints<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        values
            .iter()
            .map(|v| serde_json::Number::from_str(&v.to_string()).expect("integer literal")),
    )
}

pub fn big_int<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    serde_json::Number::from_str(&value.to_string())
        .expect("integer literal")
        .serialize(s)
}

#[derive(Serialize)]
pub struct Witness {
    pub degree: usize,
    pub coefficient: String,
}

impl Witness {
    pub fn from_pair(w: &Option<(usize, Rational)>) -> Option<Self> {
        w.as_ref().map(|(degree, c)| Witness {
            degree: *degree,
            coefficient: c.to_string(),
        })
    }
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        Some(w) => format!(" (t^{} coefficient {})", w.degree, w.coefficient),
        None => String::new(),
    }
}

fn hstar_text(h: &[BigInt]) -> String {
    let terms: Vec<String> = h
        .iter()
        .enumerate()
        .filter(|(_, c)| c.sign() != Sign::NoSign)
        .map(|(j, c)| {
            let coeff = if j > 0 && c.is_one() {
                String::new()
            } else {
                c.to_string()
            };
            match j {
                0 => coeff,
                1 if coeff.is_empty() => "x".into(),
                1 => format!("{coeff}*x"),
                _ if coeff.is_empty() => format!("x^{j}"),
                _ => format!("{coeff}*x^{j}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

#[derive(Serialize)]
pub struct EhrhartReport {
    pub n: usize,
    pub connected: bool,
    pub ehrhart: Vec<String>,
    #[serde(serialize_with = "big_ints")]
    pub hstar: Vec<BigInt>,
    #[serde(skip)]
    pub partition: String,
    #[serde(skip)]
    pub polynomial: Polynomial,
}

impl Report for EhrhartReport {
    fn text(&self) -> String {
        format!(
            "matroid {} (n = {}, {})\nehr(t) = {}\nh*(x) = {}\n",
            self.partition,
            self.n,
            if self.connected {
                "connected"
            } else {
                "disconnected"
            },
            self.polynomial,
            hstar_text(&self.hstar)
        )
    }
}

#[derive(Serialize)]
pub struct HStarReport {
    pub n: usize,
    pub connected: bool,
    pub dimension: usize,
    #[serde(serialize_with = "big_ints")]
    pub hstar: Vec<BigInt>,
    #[serde(serialize_with = "big_int")]
    pub normalized_volume: BigInt,
    pub nonnegative: bool,
    #[serde(skip)]
    pub partition: String,
}

impl HStarReport {
    pub fn new(partition: String, n: usize, connected: bool, h: &HStarVector) -> Self {
        HStarReport {
            n,
            connected,
            dimension: h.ambient_dim(),
            hstar: h.coeffs().to_vec(),
            normalized_volume: h.sum(),
            nonnegative: h.is_nonnegative(),
            partition,
        }
    }
}

impl Report for HStarReport {
    fn text(&self) -> String {
        format!(
            "matroid {} (n = {}, dimension {})\nh*(x) = {}\nnormalized volume {}\n",
            self.partition,
            self.n,
            self.dimension,
            hstar_text(&self.hstar),
            self.normalized_volume
        )
    }

    fn passed(&self) -> bool {
        self.nonnegative
    }
}

#[derive(Serialize)]
pub struct RootsReport {
    pub partition: String,
    #[serde(serialize_with = "big_ints")]
    pub hstar: Vec<BigInt>,
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub real_rooted: bool,
    pub all_roots_negative: bool,
    pub positive_coefficients: bool,
    pub unimodal: bool,
    pub log_concave: bool,
}

impl RootsReport {
    pub fn new(partition: String, h: &HStarVector, c: &RootCertificate) -> Self {
        RootsReport {
            partition,
            hstar: h.coeffs().to_vec(),
            degree: c.degree,
            distinct_real_roots: c.distinct_real_roots,
            real_rooted: c.real_rooted,
            all_roots_negative: c.all_roots_negative,
            positive_coefficients: c.positive_coefficients,
            unimodal: c.unimodal,
            log_concave: c.log_concave,
        }
    }

    fn line(&self) -> String {
        format!(
            "{}: h* = [{}], degree {}, {} distinct real roots, real-rooted {}, all negative {}, unimodal {}, log-concave {}",
            self.partition,
            self.hstar.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            self.degree,
            self.distinct_real_roots,
            self.real_rooted,
            self.all_roots_negative,
            self.unimodal,
            self.log_concave
        )
    }
}

impl Report for RootsReport {
    fn text(&self) -> String {
        self.line() + "\n"
    }
}

#[derive(Serialize)]
pub struct CountReport {
    pub partition: String,
    pub t: u64,
    pub count: u64,
    pub formula: String,
    pub agrees: bool,
}

impl Report for CountReport {
    fn text(&self) -> String {
        format!(
            "lattice points of {} P({}): {} (formula {}, {})\n",
            self.t,
            self.partition,
            self.count,
            self.formula,
            mark(self.agrees)
        )
    }

    fn passed(&self) -> bool {
        self.agrees
    }
}

#[derive(Serialize)]
pub struct RegionRow {
    pub region: String,
    pub count: u64,
    pub formula: String,
    pub agrees: bool,
}

#[derive(Serialize)]
pub struct RegionsReport {
    pub n: usize,
    pub t: u64,
    pub regions: Vec<RegionRow>,
    pub decomposition_sum: u64,
    pub decomposition_holds: bool,
}

impl Report for RegionsReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.regions {
            let _ = writeln!(
                s,
                "{:<28} {:>10}  formula {:>10}  {}",
                r.region,
                r.count,
                r.formula,
                mark(r.agrees)
            );
        }
        let _ = writeln!(
            s,
            "half-open pieces + embedded simplex = {} ({})",
            self.decomposition_sum,
            mark(self.decomposition_holds)
        );
        s
    }

    fn passed(&self) -> bool {
        self.decomposition_holds && self.regions.iter().all(|r| r.agrees)
    }
}

#[derive(Serialize)]
pub struct PositivityRow {
    pub partition: String,
    pub positive: bool,
    pub unit_constant: bool,
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
pub struct PositivityReport {
    pub check: &'static str,
    pub min_n: usize,
    pub max_n: usize,
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<PositivityRow>,
}

impl Report for PositivityReport {
    fn text(&self) -> String {
        let mut s = format!(
            "positivity: {} partitions with {} <= n <= {}: {}\n",
            self.checked,
            self.min_n,
            self.max_n,
            mark(self.passed)
        );
        for f in &self.failures {
            let _ = writeln!(
                s,
                "  {} not positive{}",
                f.partition,
                witness_text(&f.witness)
            );
        }
        s
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

#[derive(Serialize)]
pub struct BoundsRow {
    pub partition: String,
    pub lower: &'static str,
    pub upper: &'static str,
    pub minimal: bool,
    pub uniform: bool,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl BoundsRow {
    pub fn new(partition: String, r: &BoundsReport) -> Self {
        BoundsRow {
            partition,
            lower: r.lower.as_str(),
            upper: r.upper.as_str(),
            minimal: r.minimal,
            uniform: r.uniform,
            passed: r.passes(),
            witness: Witness::from_pair(&r.witness),
        }
    }
}

#[derive(Serialize)]
pub struct BoundsSweep {
    pub check: &'static str,
    pub min_n: usize,
    pub max_n: usize,
    pub checked: usize,
    pub passed: bool,
    pub partitions: Vec<BoundsRow>,
}

impl Report for BoundsSweep {
    fn text(&self) -> String {
        let mut s = format!(
            "bounds: {} connected partitions with {} <= n <= {}: {}\n",
            self.checked,
            self.min_n,
            self.max_n,
            mark(self.passed)
        );
        for r in &self.partitions {
            let role = match (r.minimal, r.uniform) {
                (true, true) => " [minimal, uniform]",
                (true, false) => " [minimal]",
                (false, true) => " [uniform]",
                _ => "",
            };
            let _ = writeln!(
                s,
                "  {:<24} lower {:<22} upper {:<22} {}{}{}",
                r.partition,
                r.lower,
                r.upper,
                mark(r.passed),
                role,
                witness_text(&r.witness)
            );
        }
        s
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

#[derive(Serialize)]
pub struct PairRow {
    pub a: i64,
    pub b: i64,
    pub n: i64,
    pub relation: &'static str,
    pub order: &'static str,
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
pub struct SuperadditivityReport {
    pub check: &'static str,
    pub max_n: usize,
    pub pairs: usize,
    pub stepping_pairs: usize,
    pub passed: bool,
    pub failures: Vec<PairRow>,
}

impl Report for SuperadditivityReport {
    fn text(&self) -> String {
        let mut s = format!(
            "superadditivity: {} pairs (and {} stepping pairs) with n <= {}: {}\n",
            self.pairs,
            self.stepping_pairs,
            self.max_n,
            mark(self.passed)
        );
        for f in &self.failures {
            let _ = writeln!(
                s,
                "  {} a={} b={} n={}: {}{}",
                f.relation,
                f.a,
                f.b,
                f.n,
                f.order,
                witness_text(&f.witness)
            );
        }
        s
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

#[derive(Serialize)]
pub struct OracleRow {
    pub partition: String,
    pub formula_matches: bool,
    pub separation_outside: u64,
    pub separation_passes: bool,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub check: &'static str,
    pub max_n: usize,
    pub max_separation_t: u64,
    pub checked: usize,
    pub passed: bool,
    pub partitions: Vec<OracleRow>,
}

impl Report for OracleReport {
    fn text(&self) -> String {
        let mut s = format!(
            "oracle: {} partitions with n <= {} (separation for t <= {}): {}\n",
            self.checked,
            self.max_n,
            self.max_separation_t,
            mark(self.passed)
        );
        for r in self
            .partitions
            .iter()
            .filter(|r| !r.formula_matches || !r.separation_passes)
        {
            let _ = writeln!(
                s,
                "  {}: formula {}, separation {}",
                r.partition,
                mark(r.formula_matches),
                mark(r.separation_passes)
            );
        }
        s
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

#[derive(Serialize)]
pub struct RootsSweep {
    pub check: &'static str,
    pub min_n: usize,
    pub max_n: usize,
    pub checked: usize,
    pub passed: bool,
    pub certificates: Vec<RootsReport>,
}

impl Report for RootsSweep {
    fn text(&self) -> String {
        let mut s = format!(
            "roots: {} connected sparse paving matroids with {} <= n <= {}: {}\n",
            self.checked,
            self.min_n,
            self.max_n,
            mark(self.passed)
        );
        for c in &self.certificates {
            let _ = writeln!(s, "  {}", c.line());
        }
        s
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

#[derive(Serialize)]
pub struct LemmaFailure {
    pub lemma: &'static str,
    pub params: String,
    pub value: f64,
}

#[derive(Serialize)]
pub struct LemmasReport {
    pub check: &'static str,
    pub tolerance: f64,
    pub trig_max_n: u32,
    pub theta_points: usize,
    pub max_trig_residual: f64,
    pub bounds_max_n: i64,
    pub y_points: usize,
    pub min_bounds_margin: f64,
    pub passed: bool,
    pub failures: Vec<LemmaFailure>,
}

impl Report for LemmasReport {
    fn text(&self) -> String {
        let mut s = format!(
            "lemmas: trig identity n <= {} on {} angles, max residual {:.1e}; bounds 9 <= n <= {} on {} points, min margin {:.3e}: {}\n",
            self.trig_max_n,
            self.theta_points,
            self.max_trig_residual,
            self.bounds_max_n,
            self.y_points,
            self.min_bounds_margin,
            mark(self.passed)
        );
        for f in &self.failures {
            let _ = writeln!(s, "  {} {}: {}", f.lemma, f.params, f.value);
        }
        s
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

#[derive(Serialize)]
pub struct AllReport {
    pub check: &'static str,
    pub max_n: usize,
    pub passed: bool,
    pub positivity: PositivityReport,
    pub bounds: BoundsSweep,
    pub superadditivity: SuperadditivityReport,
    pub oracle: OracleReport,
    pub roots: RootsSweep,
    pub lemmas: LemmasReport,
}

impl Report for AllReport {
    fn text(&self) -> String {
        let parts: [(&str, bool); 6] = [
            ("positivity", self.positivity.passed),
            ("bounds", self.bounds.passed),
            ("superadditivity", self.superadditivity.passed),
            ("oracle", self.oracle.passed),
            ("roots", self.roots.passed),
            ("lemmas", self.lemmas.passed),
        ];
        let mut s = String::new();
        for (name, ok) in parts {
            let _ = writeln!(s, "{name:<16} {}", mark(ok));
        }
        let _ = writeln!(s, "all (n <= {}): {}", self.max_n, mark(self.passed));
        if !self.superadditivity.passed {
            s.push('\n');
            s.push_str(&self.superadditivity.text());
        }
        s
    }

    fn passed(&self) -> bool {
        self.passed
    }
}
