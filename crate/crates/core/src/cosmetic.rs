//! The cosmetic-crossing pipeline: knot records with double-branched-cover
//! data, the determinant condition, and the per-knot verdict combining
//!
//! * (a) the double branched cover `Σ(K)` is an L-space,
//! * (b) `Σ(K)` is `P/Q`-surgery on a torus knot `T(r, s)` with `|P| = det(K)`,
//! * (b') the unknotting number or the H2-unknotting number of `K` is 1,
//! * (c) `det(K) = 9·p'` with `p'` square-free and coprime to 3.
//!
//! Conditions (a) + (b) + (c) confirm the cosmetic crossing conjecture for
//! the knot via the stronger criterion; (a) + (b') + (c) via the weaker
//! one. Anything less leaves the knot open. Each condition is tri-state
//! (holds / fails / unknown) and the verdict is monotone: downgrading any
//! condition toward `unknown` can only move a verdict toward `Open`.

use std::fmt;
use std::io;
use std::path::Path;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::casson_walker::Slope;
use crate::error::{Error, Result};
use crate::rational::{gcd_pair, squarefree_decompose};

/// The ten knots of the genus-one reproduction list, in table order.
pub const COR_TEN_NAMES: [&str; 10] = [
    "10_65", "10_66", "10_67", "10_77", "10_87", "10_98", "10_108", "10_129", "10_147", "10_164",
];

/// Bundled knot table (CSV) used by [`reproduce_cor_ten`].
pub fn bundled_knot_table() -> &'static str {
    include_str!("../data/knots.csv")
}

/// A tri-state data field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriState {
    /// Recorded as true.
    True,
    /// Recorded as false.
    False,
    /// Not recorded.
    Unknown,
}

impl TriState {
    fn parse(s: &str) -> Option<TriState> {
        match s {
            "true" => Some(TriState::True),
            "false" => Some(TriState::False),
            "unknown" | "" => Some(TriState::Unknown),
            _ => None,
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriState::True => "true",
            TriState::False => "false",
            TriState::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

impl Serialize for TriState {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A double-branched-cover surgery description: `P/Q`-surgery on the
/// torus knot `T(r, s)`, written `T(r,s)@P/Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurgeryWitness {
    /// First torus parameter (`2 <= r`).
    pub r: i64,
    /// Second torus parameter (`2 <= s`, coprime to `r`).
    pub s: i64,
    /// The surgery slope.
    pub slope: Slope,
}

impl fmt::Display for SurgeryWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})@{}", self.r, self.s, self.slope)
    }
}

impl FromStr for SurgeryWitness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "invalid surgery witness {s:?}: expected T(r,s)@P/Q"
            ))
        };
        let rest = s.trim().strip_prefix("T(").ok_or_else(bad)?;
        let (params, slope) = rest.split_once(")@").ok_or_else(bad)?;
        let (r, t) = params.split_once(',').ok_or_else(bad)?;
        let r: i64 = r.trim().parse().map_err(|_| bad())?;
        let t: i64 = t.trim().parse().map_err(|_| bad())?;
        if r < 2 || t < 2 {
            return Err(Error::Parse(format!(
                "invalid surgery witness {s:?}: torus parameters must be at least 2"
            )));
        }
        if gcd_pair(r, t) != 1 {
            return Err(Error::NotCoprime {
                what: "torus knot parameters",
                a: r,
                b: t,
            });
        }
        Ok(SurgeryWitness {
            r,
            s: t,
            slope: slope.trim().parse()?,
        })
    }
}

impl Serialize for SurgeryWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One row of the knot table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotRecord {
    /// Knot name, e.g. `10_65`.
    pub name: String,
    /// Knot determinant (odd and positive).
    pub det: i64,
    /// Whether the double branched cover is an L-space.
    pub dbc_lspace: TriState,
    /// Unknotting number, when recorded.
    pub u: Option<i64>,
    /// H2-unknotting number, when recorded.
    pub u_h2: Option<i64>,
    /// Torus surgery description of the double branched cover, when known.
    pub dbc_surgery: Option<SurgeryWitness>,
    /// Where the row's data comes from.
    pub provenance: String,
}

fn validate_record(rec: &KnotRecord) -> Result<()> {
    if rec.name.is_empty() {
        return Err(Error::Parse("knot name must be nonempty".into()));
    }
    if rec.det < 1 {
        return Err(Error::NonPositive {
            what: "knot determinant",
            got: rec.det,
        });
    }
    if rec.det % 2 == 0 {
        return Err(Error::InconsistentInstance(format!(
            "knot determinant must be odd, got {}",
            rec.det
        )));
    }
    for (what, v) in [
        ("unknotting number", rec.u),
        ("H2-unknotting number", rec.u_h2),
    ] {
        if let Some(v) = v {
            if v < 0 {
                return Err(Error::NonPositive { what, got: v });
            }
        }
    }
    if let Some(w) = &rec.dbc_surgery {
        if w.slope.p().checked_abs() != Some(rec.det) {
            return Err(Error::InconsistentInstance(format!(
                "surgery witness {w} has |{}| != det = {}",
                w.slope.p(),
                rec.det
            )));
        }
    }
    Ok(())
}

const EXPECTED_HEADER: [&str; 7] = [
    "name",
    "det",
    "dbc_lspace",
    "u",
    "u_h2",
    "dbc_surgery",
    "provenance",
];

fn parse_opt_int(field: &str, what: &str, row: usize) -> Result<Option<i64>> {
    if field.is_empty() {
        return Ok(None);
    }
    field
        .parse::<i64>()
        .map(Some)
        .map_err(|_| Error::KnotTable {
            row,
            message: format!("invalid {what}: {field:?}"),
        })
}

/// Parses a knot table in CSV form. Errors carry the 1-based line number
/// of the offending row (the header is line 1).
pub fn parse_knot_table(reader: impl io::Read) -> Result<Vec<KnotRecord>> {
    let mut csv = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(false)
        .from_reader(reader);
    let headers = csv.headers().map_err(|e| Error::KnotTable {
        row: 1,
        message: format!("cannot read header: {e}"),
    })?;
    let got: Vec<&str> = headers.iter().collect();
    if got != EXPECTED_HEADER {
        return Err(Error::KnotTable {
            row: 1,
            message: format!(
                "unexpected header {:?}; expected {:?}",
                got.join(","),
                EXPECTED_HEADER.join(",")
            ),
        });
    }
    let mut out = Vec::new();
    for record in csv.records() {
        let record = record.map_err(|e| {
            let row = e.position().map(|p| p.line() as usize).unwrap_or(0);
            Error::KnotTable {
                row,
                message: format!("malformed row: {e}"),
            }
        })?;
        let row = record.position().map(|p| p.line() as usize).unwrap_or(0);
        let field = |i: usize| record.get(i).unwrap_or("");
        let det: i64 = field(1).parse().map_err(|_| Error::KnotTable {
            row,
            message: format!("invalid determinant: {:?}", field(1)),
        })?;
        let dbc_lspace = TriState::parse(field(2)).ok_or_else(|| Error::KnotTable {
            row,
            message: format!("invalid tri-state value: {:?}", field(2)),
        })?;
        let u = parse_opt_int(field(3), "unknotting number", row)?;
        let u_h2 = parse_opt_int(field(4), "H2-unknotting number", row)?;
        let dbc_surgery = if field(5).is_empty() {
            None
        } else {
            Some(
                field(5)
                    .parse::<SurgeryWitness>()
                    .map_err(|e| Error::KnotTable {
                        row,
                        message: e.to_string(),
                    })?,
            )
        };
        let rec = KnotRecord {
            name: field(0).to_string(),
            det,
            dbc_lspace,
            u,
            u_h2,
            dbc_surgery,
            provenance: field(6).to_string(),
        };
        validate_record(&rec).map_err(|e| Error::KnotTable {
            row,
            message: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

/// Loads and validates a knot table from a CSV file.
pub fn load_knot_table(path: impl AsRef<Path>) -> Result<Vec<KnotRecord>> {
    let file = std::fs::File::open(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_knot_table(file)
}

/// Checks the determinant condition: `det = 9·p'` with `p'` square-free
/// and coprime to 3. Returns `Some(p')` when it holds.
pub fn check_condition_c(det: i64) -> Result<Option<i64>> {
    if det < 1 {
        return Err(Error::NonPositive {
            what: "knot determinant",
            got: det,
        });
    }
    if det % 9 != 0 {
        return Ok(None);
    }
    let p_prime = det / 9;
    if gcd_pair(p_prime, 3) != 1 {
        return Ok(None);
    }
    if squarefree_decompose(p_prime)?.d != 1 {
        return Ok(None);
    }
    Ok(Some(p_prime))
}

/// Status of one hypothesis of the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionStatus {
    /// Established by the record.
    Holds,
    /// Refuted by the record.
    Fails,
    /// Not determined by the record.
    Unknown,
}

/// Statuses of the four conditions for one knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Conditions {
    /// (a) the double branched cover is an L-space.
    pub a: ConditionStatus,
    /// (b) the double branched cover is torus-knot surgery of order `det`.
    pub b: ConditionStatus,
    /// (b') an unknotting invariant equals 1.
    pub b_prime: ConditionStatus,
    /// (c) the determinant condition.
    pub c: ConditionStatus,
}

/// Per-knot verdict of the cosmetic-crossing pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CosmeticVerdict {
    /// Conditions (a), (b), and (c) all hold.
    ConfirmedByThm110,
    /// Conditions (a), (b'), and (c) all hold.
    ConfirmedByCor111,
    /// Some needed condition is unknown or fails.
    Open,
}

/// Full per-knot report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosmeticReport {
    /// Knot name.
    pub name: String,
    /// Knot determinant.
    pub det: i64,
    /// Condition statuses.
    pub conditions: Conditions,
    /// The verdict.
    pub verdict: CosmeticVerdict,
    /// Human-readable explanations, one per condition.
    pub reasons: Vec<String>,
}

/// Evaluates the cosmetic-crossing verdict for one knot record.
pub fn cosmetic_verdict(rec: &KnotRecord) -> Result<CosmeticReport> {
    validate_record(rec)?;
    let mut reasons = Vec::new();

    let a = match rec.dbc_lspace {
        TriState::True => {
            reasons.push("(a) holds: the double branched cover is an L-space".to_string());
            ConditionStatus::Holds
        }
        TriState::False => {
            reasons.push("(a) fails: the double branched cover is not an L-space".to_string());
            ConditionStatus::Fails
        }
        TriState::Unknown => {
            reasons.push("(a) unknown: no L-space status recorded".to_string());
            ConditionStatus::Unknown
        }
    };

    let b = match &rec.dbc_surgery {
        Some(w) => {
            reasons.push(format!(
                "(b) holds: the double branched cover is {}-surgery on T({},{})",
                w.slope, w.r, w.s
            ));
            ConditionStatus::Holds
        }
        None => {
            reasons.push("(b) unknown: no torus surgery description recorded".to_string());
            ConditionStatus::Unknown
        }
    };

    let b_prime = match (rec.u, rec.u_h2) {
        (Some(1), _) => {
            reasons.push("(b') holds: unknotting number is 1".to_string());
            ConditionStatus::Holds
        }
        (_, Some(1)) => {
            reasons.push("(b') holds: H2-unknotting number is 1".to_string());
            ConditionStatus::Holds
        }
        (Some(u), Some(v)) => {
            reasons.push(format!(
                "(b') fails: unknotting number {u} and H2-unknotting number {v} both exceed 1"
            ));
            ConditionStatus::Fails
        }
        _ => {
            reasons.push("(b') unknown: no unknotting invariant recorded as 1".to_string());
            ConditionStatus::Unknown
        }
    };

    let c = match check_condition_c(rec.det)? {
        Some(p_prime) => {
            reasons.push(format!(
                "(c) holds: det = {} = 9*{p_prime} with {p_prime} square-free and coprime to 3",
                rec.det
            ));
            ConditionStatus::Holds
        }
        None => {
            reasons.push(format!(
                "(c) fails: det = {} is not 9 times a square-free integer coprime to 3",
                rec.det
            ));
            ConditionStatus::Fails
        }
    };

    let verdict = if a == ConditionStatus::Holds
        && b == ConditionStatus::Holds
        && c == ConditionStatus::Holds
    {
        CosmeticVerdict::ConfirmedByThm110
    } else if a == ConditionStatus::Holds
        && b_prime == ConditionStatus::Holds
        && c == ConditionStatus::Holds
    {
        CosmeticVerdict::ConfirmedByCor111
    } else {
        CosmeticVerdict::Open
    };

    Ok(CosmeticReport {
        name: rec.name.clone(),
        det: rec.det,
        conditions: Conditions { a, b, b_prime, c },
        verdict,
        reasons,
    })
}

/// The resolved/open split of the reproduction list, in table order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorTenPartition {
    /// Knots confirmed by either criterion.
    pub resolved: Vec<String>,
    /// Knots left open.
    pub open: Vec<String>,
}

/// Full reproduction result: the partition plus per-knot reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorTenReport {
    /// The resolved/open partition.
    pub partition: CorTenPartition,
    /// One report per knot, in table order.
    pub reports: Vec<CosmeticReport>,
}

/// Runs the pipeline over the ten bundled genus-one knots and partitions
/// them into resolved and open. Errors if any of the ten is missing from
/// the bundled table, listing the absentees.
pub fn reproduce_cor_ten() -> Result<CorTenReport> {
    let table = parse_knot_table(bundled_knot_table().as_bytes())?;
    let missing: Vec<&str> = COR_TEN_NAMES
        .iter()
        .copied()
        .filter(|name| !table.iter().any(|r| r.name == *name))
        .collect();
    if !missing.is_empty() {
        return Err(Error::InconsistentInstance(format!(
            "knot table is missing required entries: {}",
            missing.join(", ")
        )));
    }
    let mut reports = Vec::new();
    for name in COR_TEN_NAMES {
        let rec = table
            .iter()
            .find(|r| r.name == name)
            .expect("checked above");
        reports.push(cosmetic_verdict(rec)?);
    }
    let resolved = reports
        .iter()
        .filter(|r| r.verdict != CosmeticVerdict::Open)
        .map(|r| r.name.clone())
        .collect();
    let open = reports
        .iter()
        .filter(|r| r.verdict == CosmeticVerdict::Open)
        .map(|r| r.name.clone())
        .collect();
    Ok(CorTenReport {
        partition: CorTenPartition { resolved, open },
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundled() -> Vec<KnotRecord> {
        parse_knot_table(bundled_knot_table().as_bytes()).unwrap()
    }

    #[test]
    fn condition_c_examples() {
        assert_eq!(check_condition_c(63).unwrap(), Some(7));
        assert_eq!(check_condition_c(9).unwrap(), Some(1));
        assert_eq!(check_condition_c(45).unwrap(), Some(5));
        assert_eq!(check_condition_c(99).unwrap(), Some(11));
        assert_eq!(check_condition_c(27).unwrap(), None); // p' = 3 shares a factor with 3
        assert_eq!(check_condition_c(75).unwrap(), None); // 9 does not divide 75
        assert_eq!(check_condition_c(81).unwrap(), None); // p' = 9 not square-free
        assert_eq!(check_condition_c(25).unwrap(), None);
        assert!(check_condition_c(0).is_err());
        assert!(check_condition_c(-9).is_err());
    }

    #[test]
    fn witness_parsing() {
        let w: SurgeryWitness = "T(3,4)@63/5".parse().unwrap();
        assert_eq!((w.r, w.s), (3, 4));
        assert_eq!((w.slope.p(), w.slope.q()), (63, 5));
        assert_eq!(w.to_string(), "T(3,4)@63/5");
        assert!("T(2,3)@63/10".parse::<SurgeryWitness>().is_ok());
        assert!("T( 2 , 3 )@ 63/10 ".parse::<SurgeryWitness>().is_ok()); // whitespace tolerated
        assert!("T(2,4)@63/5".parse::<SurgeryWitness>().is_err()); // not coprime
        assert!("T(1,4)@63/5".parse::<SurgeryWitness>().is_err()); // r < 2
        assert!("T(3,4)63/5".parse::<SurgeryWitness>().is_err());
        assert!("T(3,4)@63/0".parse::<SurgeryWitness>().is_err());
    }

    #[test]
    fn bundled_table_loads() {
        let table = bundled();
        assert_eq!(table.len(), 10);
        let k65 = table.iter().find(|r| r.name == "10_65").unwrap();
        assert_eq!(k65.det, 63);
        assert_eq!(k65.dbc_lspace, TriState::True);
        let w = k65.dbc_surgery.unwrap();
        assert_eq!((w.r, w.s, w.slope.p(), w.slope.q()), (3, 4, 63, 5));
        let k67 = table.iter().find(|r| r.name == "10_67").unwrap();
        assert_eq!(k67.u_h2, Some(1));
        assert_eq!(k67.u, None);
        let k164 = table.iter().find(|r| r.name == "10_164").unwrap();
        assert_eq!(k164.u, Some(1));
        assert!(table.iter().all(|r| r.det % 2 == 1));
        assert!(table.iter().all(|r| !r.provenance.is_empty()));
    }

    #[test]
    fn table_errors_carry_line_numbers() {
        // Even determinant on line 2.
        let bad = "name,det,dbc_lspace,u,u_h2,dbc_surgery,provenance\nk,64,true,,,,x\n";
        match parse_knot_table(bad.as_bytes()) {
            Err(Error::KnotTable { row, message }) => {
                assert_eq!(row, 2);
                assert!(message.contains("odd"));
            }
            other => panic!("expected table error, got {other:?}"),
        }
        // Witness order mismatch on line 3.
        let bad = "name,det,dbc_lspace,u,u_h2,dbc_surgery,provenance\n\
                   a,63,true,,,,x\n\
                   b,63,true,,,\"T(3,4)@65/5\",x\n";
        match parse_knot_table(bad.as_bytes()) {
            Err(Error::KnotTable { row, message }) => {
                assert_eq!(row, 3);
                assert!(message.contains("det"));
            }
            other => panic!("expected table error, got {other:?}"),
        }
        // Bad tri-state.
        let bad = "name,det,dbc_lspace,u,u_h2,dbc_surgery,provenance\nk,63,yes,,,,x\n";
        match parse_knot_table(bad.as_bytes()) {
            Err(Error::KnotTable { row, .. }) => assert_eq!(row, 2),
            other => panic!("expected table error, got {other:?}"),
        }
        // Wrong header.
        let bad = "name,determinant\nk,63\n";
        match parse_knot_table(bad.as_bytes()) {
            Err(Error::KnotTable { row, .. }) => assert_eq!(row, 1),
            other => panic!("expected table error, got {other:?}"),
        }
    }

    #[test]
    fn verdict_examples() {
        let table = bundled();
        let by_name = |n: &str| table.iter().find(|r| r.name == n).unwrap();

        let r = cosmetic_verdict(by_name("10_65")).unwrap();
        assert_eq!(r.verdict, CosmeticVerdict::ConfirmedByThm110);
        assert_eq!(r.conditions.a, ConditionStatus::Holds);
        assert_eq!(r.conditions.b, ConditionStatus::Holds);
        assert_eq!(r.conditions.c, ConditionStatus::Holds);

        let r = cosmetic_verdict(by_name("10_77")).unwrap();
        assert_eq!(r.verdict, CosmeticVerdict::ConfirmedByThm110);

        for name in ["10_67", "10_108", "10_164"] {
            let r = cosmetic_verdict(by_name(name)).unwrap();
            assert_eq!(r.verdict, CosmeticVerdict::ConfirmedByCor111, "{name}");
            assert_eq!(r.conditions.b_prime, ConditionStatus::Holds, "{name}");
        }

        for name in ["10_66", "10_87", "10_98", "10_129", "10_147"] {
            let r = cosmetic_verdict(by_name(name)).unwrap();
            assert_eq!(r.verdict, CosmeticVerdict::Open, "{name}");
            assert_eq!(r.conditions.c, ConditionStatus::Fails, "{name}");
        }
    }

    #[test]
    fn verdict_is_monotone_under_downgrades() {
        let table = bundled();
        let base = table.iter().find(|r| r.name == "10_65").unwrap().clone();
        assert_eq!(
            cosmetic_verdict(&base).unwrap().verdict,
            CosmeticVerdict::ConfirmedByThm110
        );

        let mut no_witness = base.clone();
        no_witness.dbc_surgery = None;
        assert_eq!(
            cosmetic_verdict(&no_witness).unwrap().verdict,
            CosmeticVerdict::Open
        );

        let mut no_lspace = base.clone();
        no_lspace.dbc_lspace = TriState::Unknown;
        assert_eq!(
            cosmetic_verdict(&no_lspace).unwrap().verdict,
            CosmeticVerdict::Open
        );

        // Downgrading a Cor-grade knot similarly opens it.
        let mut k = table.iter().find(|r| r.name == "10_164").unwrap().clone();
        k.u = None;
        assert_eq!(cosmetic_verdict(&k).unwrap().verdict, CosmeticVerdict::Open);
    }

    #[test]
    fn b_prime_fails_only_when_both_known() {
        let mut rec = KnotRecord {
            name: "test".into(),
            det: 63,
            dbc_lspace: TriState::True,
            u: Some(2),
            u_h2: Some(2),
            dbc_surgery: None,
            provenance: "synthetic".into(),
        };
        let r = cosmetic_verdict(&rec).unwrap();
        assert_eq!(r.conditions.b_prime, ConditionStatus::Fails);
        rec.u_h2 = None;
        let r = cosmetic_verdict(&rec).unwrap();
        assert_eq!(r.conditions.b_prime, ConditionStatus::Unknown);
        rec.u = Some(2);
        rec.u_h2 = Some(1);
        let r = cosmetic_verdict(&rec).unwrap();
        assert_eq!(r.conditions.b_prime, ConditionStatus::Holds);
    }

    #[test]
    fn reproduction_partition() {
        let report = reproduce_cor_ten().unwrap();
        assert_eq!(
            report.partition.resolved,
            vec!["10_65", "10_67", "10_77", "10_108", "10_164"]
        );
        assert_eq!(
            report.partition.open,
            vec!["10_66", "10_87", "10_98", "10_129", "10_147"]
        );
        assert_eq!(report.reports.len(), 10);
    }
}
