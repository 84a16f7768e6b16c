//! Classical and Siegel cusp form dimension bookkeeping: the closed formula
//! for level-one elliptic cusp forms, the genus-based dimension formula for
//! prime level, the paramodular oldform/newform count, the endoscopic-lift
//! count, and the dimension identity for definite algebraic modular forms of
//! paramodular-type level, evaluated over an ingested table of published
//! Siegel dimensions.

use crate::local_reps::is_prime;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimError {
    #[error("weight {0} is invalid here (need even weight >= 2)")]
    InvalidWeight(i64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid j = {0} (need j >= 3)")]
    InvalidJ(i64),
    #[error("invalid k = {0} (need k >= 0)")]
    InvalidK(i64),
    #[error("missing dimension record for {0}")]
    MissingRecord(String),
    #[error("csv line {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error(
        "conflicting duplicate for {key}: value {old_value} from {old_source:?} \
         vs value {new_value} from {new_source:?}"
    )]
    ConflictingDuplicate {
        key: String,
        old_value: u64,
        old_source: String,
        new_value: u64,
        new_source: String,
    },
    #[error(
        "table inconsistency: newform dimension at (k={k}, j={j}, p={p}) \
         evaluates to {value}, which is negative"
    )]
    NegativeNewformDim { k: i64, j: i64, p: u64, value: i64 },
    #[error(
        "table inconsistency: algebraic modular form dimension at \
         (k={k}, j={j}, p={p}) evaluates to {value}, which is negative"
    )]
    NegativeAlgebraicDim { k: i64, j: i64, p: u64, value: i64 },
}

/// dim of level-one elliptic cusp forms of weight k, by the classical closed
/// formula. Odd or small weights give 0.
pub fn dim_cusp_level1(k: i64) -> u64 {
    if k < 4 || k % 2 != 0 {
        return 0;
    }
    let q = k / 12;
    let d = if k % 12 == 2 { q - 1 } else { q };
    d.max(0) as u64
}

fn elliptic_counts(p: u64) -> (i64, i64) {
    // numbers of elliptic points of order 2 and 3 on the prime-level curve
    let e2 = match p {
        2 => 1,
        p if p % 4 == 1 => 2,
        _ => 0,
    };
    let e3 = match p {
        3 => 1,
        p if p % 3 == 1 => 2,
        _ => 0,
    };
    (e2, e3)
}

/// Genus of the prime-level modular curve.
pub fn genus_gamma0p(p: u64) -> Result<u64, DimError> {
    if !is_prime(p) {
        return Err(DimError::NotPrime(p));
    }
    let (e2, e3) = elliptic_counts(p);
    let num = p as i64 + 1 - 3 * e2 - 4 * e3;
    debug_assert_eq!(num.rem_euclid(12), 0);
    Ok((num / 12) as u64)
}

/// dim of cusp forms of even weight k >= 2 and prime level, by the standard
/// genus / elliptic-point / cusp count formula.
pub fn dim_cusp_gamma0p(k: i64, p: u64) -> Result<u64, DimError> {
    if k < 2 || k % 2 != 0 {
        return Err(DimError::InvalidWeight(k));
    }
    let g = genus_gamma0p(p)? as i64;
    if k == 2 {
        return Ok(g as u64);
    }
    let (e2, e3) = elliptic_counts(p);
    let cusps = 2i64;
    let d = (k - 1) * (g - 1) + (k / 4) * e2 + (k / 3) * e3 + (k / 2 - 1) * cusps;
    debug_assert!(d >= 0);
    Ok(d.max(0) as u64)
}

/// p-new subspace dimension: total minus two copies of the level-one space.
pub fn dim_cusp_gamma0p_new(k: i64, p: u64) -> Result<u64, DimError> {
    let full = dim_cusp_gamma0p(k, p)? as i64;
    let new = full - 2 * dim_cusp_level1(k) as i64;
    debug_assert!(new >= 0);
    Ok(new.max(0) as u64)
}

/// Level of a classical record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ClassicalLevel {
    One,
    Prime(u64),
}

impl fmt::Display for ClassicalLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalLevel::One => write!(f, "Gamma0(1)"),
            ClassicalLevel::Prime(p) => write!(f, "Gamma0({p})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ClassicalKey {
    pub k: i64,
    pub level: ClassicalLevel,
    pub new_only: bool,
}

impl fmt::Display for ClassicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S_{}[{}]{}",
            self.k,
            self.level,
            if self.new_only { "^new" } else { "" }
        )
    }
}

/// Level of a Siegel record: level one or paramodular of prime level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum SiegelLevel {
    K1,
    Kp(u64),
}

impl fmt::Display for SiegelLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SiegelLevel::K1 => write!(f, "K(1)"),
            SiegelLevel::Kp(p) => write!(f, "K({p})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SiegelKey {
    pub k: i64,
    pub j: i64,
    pub level: SiegelLevel,
}

impl fmt::Display for SiegelKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{{{},{}}}[{}]", self.k, self.j, self.level)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimRecord {
    pub value: u64,
    pub source: String,
}

/// Ingested dimension records, keyed separately for classical and Siegel
/// spaces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DimTable {
    pub classical: BTreeMap<ClassicalKey, DimRecord>,
    pub siegel: BTreeMap<SiegelKey, DimRecord>,
}

pub const CSV_HEADER: &str = "kind,k,j,level,p,value,source";

impl DimTable {
    pub fn insert_classical(
        &mut self,
        key: ClassicalKey,
        value: u64,
        source: &str,
    ) -> Result<(), DimError> {
        if let Some(old) = self.classical.get(&key) {
            if old.value != value {
                return Err(DimError::ConflictingDuplicate {
                    key: key.to_string(),
                    old_value: old.value,
                    old_source: old.source.clone(),
                    new_value: value,
                    new_source: source.to_string(),
                });
            }
            return Ok(());
        }
        self.classical.insert(
            key,
            DimRecord {
                value,
                source: source.to_string(),
            },
        );
        Ok(())
    }

    pub fn insert_siegel(
        &mut self,
        key: SiegelKey,
        value: u64,
        source: &str,
    ) -> Result<(), DimError> {
        if let Some(old) = self.siegel.get(&key) {
            if old.value != value {
                return Err(DimError::ConflictingDuplicate {
                    key: key.to_string(),
                    old_value: old.value,
                    old_source: old.source.clone(),
                    new_value: value,
                    new_source: source.to_string(),
                });
            }
            return Ok(());
        }
        self.siegel.insert(
            key,
            DimRecord {
                value,
                source: source.to_string(),
            },
        );
        Ok(())
    }

    pub fn siegel_value(&self, key: SiegelKey) -> Result<u64, DimError> {
        self.siegel
            .get(&key)
            .map(|r| r.value)
            .ok_or_else(|| DimError::MissingRecord(key.to_string()))
    }

    pub fn len(&self) -> usize {
        self.classical.len() + self.siegel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classical.is_empty() && self.siegel.is_empty()
    }

    /// (k, j, p) triples for which both the level-one and the prime-level
    /// Siegel records are present.
    pub fn siegel_pairs(&self) -> Vec<(i64, i64, u64)> {
        let mut out = Vec::new();
        for key in self.siegel.keys() {
            if let SiegelLevel::Kp(p) = key.level {
                let k1 = SiegelKey {
                    k: key.k,
                    j: key.j,
                    level: SiegelLevel::K1,
                };
                if self.siegel.contains_key(&k1) {
                    out.push((key.k, key.j, p));
                }
            }
        }
        out
    }
}

/// Parse the fixed seven-column CSV schema. The final column is free text
/// and may contain commas.
pub fn ingest_csv(content: &str) -> Result<DimTable, DimError> {
    let mut lines = content.lines().enumerate();
    let bad = |line: usize, reason: String| DimError::Csv { line, reason };
    let (_, header) = lines
        .next()
        .ok_or_else(|| bad(1, "empty file, expected header".to_string()))?;
    if header.trim_end() != CSV_HEADER {
        return Err(bad(
            1,
            format!("bad header {header:?}, expected {CSV_HEADER:?}"),
        ));
    }

    let mut table = DimTable::default();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.splitn(7, ',').collect();
        if fields.len() != 7 {
            return Err(bad(line_no, format!("expected 7 fields, got {}", fields.len())));
        }
        let kind = fields[0].trim();
        let k: i64 = fields[1]
            .trim()
            .parse()
            .map_err(|_| bad(line_no, format!("bad k {:?}", fields[1])))?;
        let value: i64 = fields[5]
            .trim()
            .parse()
            .map_err(|_| bad(line_no, format!("bad value {:?}", fields[5])))?;
        if value < 0 {
            return Err(bad(line_no, format!("negative dimension {value}")));
        }
        let value = value as u64;
        let source = fields[6].trim();

        let parse_p = |field: &str| -> Result<u64, DimError> {
            let p: u64 = field
                .trim()
                .parse()
                .map_err(|_| bad(line_no, format!("bad prime {field:?}")))?;
            if !is_prime(p) {
                return Err(bad(line_no, format!("{p} is not prime")));
            }
            Ok(p)
        };

        match kind {
            "classical" | "classical_new" => {
                if !fields[2].trim().is_empty() {
                    return Err(bad(line_no, "classical rows must leave j empty".into()));
                }
                if k < 2 || k % 2 != 0 {
                    return Err(bad(line_no, format!("classical weight {k} must be even >= 2")));
                }
                let new_only = kind == "classical_new";
                let level = match fields[3].trim() {
                    "1" => {
                        if new_only {
                            return Err(bad(
                                line_no,
                                "classical_new requires prime level".into(),
                            ));
                        }
                        ClassicalLevel::One
                    }
                    "p" => ClassicalLevel::Prime(parse_p(fields[4])?),
                    other => {
                        return Err(bad(line_no, format!("bad classical level {other:?}")))
                    }
                };
                table.insert_classical(ClassicalKey { k, level, new_only }, value, source)?;
            }
            "siegel" => {
                let j: i64 = fields[2]
                    .trim()
                    .parse()
                    .map_err(|_| bad(line_no, format!("bad j {:?}", fields[2])))?;
                if k < 0 {
                    return Err(bad(line_no, format!("siegel k {k} must be >= 0")));
                }
                if j < 3 {
                    return Err(bad(line_no, format!("siegel j {j} must be >= 3")));
                }
                let level = match fields[3].trim() {
                    "K1" => SiegelLevel::K1,
                    "Kp" => SiegelLevel::Kp(parse_p(fields[4])?),
                    other => return Err(bad(line_no, format!("bad siegel level {other:?}"))),
                };
                table.insert_siegel(SiegelKey { k, j, level }, value, source)?;
            }
            other => return Err(bad(line_no, format!("unknown kind {other:?}"))),
        }
    }
    Ok(table)
}

fn check_kj(k: i64, j: i64) -> Result<(), DimError> {
    if k < 0 {
        return Err(DimError::InvalidK(k));
    }
    if j < 3 {
        return Err(DimError::InvalidJ(j));
    }
    Ok(())
}

/// Oldform collision correction: for k = 0 and even j, level-one eigenforms
/// in the image of the endoscopic lift from weight 2j-2 produce coinciding
/// oldform pairs.
fn oldform_collision_term(k: i64, j: i64) -> u64 {
    if k == 0 && j % 2 == 0 {
        dim_cusp_level1(2 * j - 2)
    } else {
        0
    }
}

/// Newform dimension of the prime-level paramodular space:
/// `dim S_{k,j}[K(p)] - 2 dim S_{k,j}[K(1)] + collision term`.
/// A negative value reports a table inconsistency instead of a result.
pub fn paramodular_new_dim(k: i64, j: i64, p: u64, table: &DimTable) -> Result<u64, DimError> {
    check_kj(k, j)?;
    if !is_prime(p) {
        return Err(DimError::NotPrime(p));
    }
    let kp = table.siegel_value(SiegelKey {
        k,
        j,
        level: SiegelLevel::Kp(p),
    })? as i64;
    let k1 = table.siegel_value(SiegelKey {
        k,
        j,
        level: SiegelLevel::K1,
    })? as i64;
    let value = kp - 2 * k1 + oldform_collision_term(k, j) as i64;
    if value < 0 {
        return Err(DimError::NegativeNewformDim { k, j, p, value });
    }
    Ok(value as u64)
}

/// Number of relevant endoscopic lifts at prime paramodular level:
/// `dim S_{2j-2+k}[Gamma0(1)] x dim S_{k+2}[Gamma0(p)]^new`.
pub fn yoshida_count(k: i64, j: i64, p: u64) -> Result<u64, DimError> {
    check_kj(k, j)?;
    Ok(dim_cusp_level1(2 * j - 2 + k) * dim_cusp_gamma0p_new(k + 2, p)?)
}

/// Reading of the final delta term of the dimension identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum DeltaConvention {
    /// The constant algebraic modular forms enter at k = 0, j = 3.
    #[default]
    ConstantFormsAtJ3,
    /// The term as printed, firing at j = 0 only (never, since j >= 3).
    LiteralJZero,
}

fn final_delta(convention: DeltaConvention, k: i64, j: i64) -> u64 {
    let fires = match convention {
        DeltaConvention::ConstantFormsAtJ3 => k == 0 && j == 3,
        DeltaConvention::LiteralJZero => k == 0 && j == 0,
    };
    u64::from(fires)
}

/// Term-by-term evaluation of the dimension identity for the definite
/// algebraic modular forms of paramodular-type prime level:
///
/// `dim = dim S_{2j-2+k}[Gamma0(1)] * dim S_{k+2}[Gamma0(p)]^new
///        + dim S_{k,j}[K(p)] - 2 dim S_{k,j}[K(1)]
///        + delta_{k,0} dim S_{2j-2}[Gamma0(1)] + final delta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IbukiyamaBreakdown {
    pub yoshida_term: u64,
    pub siegel_kp: u64,
    pub siegel_k1: u64,
    pub delta_level1_term: u64,
    pub final_delta_term: u64,
    pub total: u64,
    /// In the k = 0, odd-j case the vanishing-cycle map has a cokernel of
    /// this size; it is already contained in the delta terms above and is
    /// surfaced here separately.
    pub alpha_cokernel: Option<u64>,
}

pub fn ibukiyama_breakdown(
    k: i64,
    j: i64,
    p: u64,
    table: &DimTable,
    convention: DeltaConvention,
) -> Result<IbukiyamaBreakdown, DimError> {
    check_kj(k, j)?;
    let yoshida_term = yoshida_count(k, j, p)?;
    let siegel_kp = table.siegel_value(SiegelKey {
        k,
        j,
        level: SiegelLevel::Kp(p),
    })?;
    let siegel_k1 = table.siegel_value(SiegelKey {
        k,
        j,
        level: SiegelLevel::K1,
    })?;
    let delta_level1_term = if k == 0 { dim_cusp_level1(2 * j - 2) } else { 0 };
    let final_delta_term = final_delta(convention, k, j);
    let total = yoshida_term as i64 + siegel_kp as i64 - 2 * siegel_k1 as i64
        + delta_level1_term as i64
        + final_delta_term as i64;
    if total < 0 {
        return Err(DimError::NegativeAlgebraicDim {
            k,
            j,
            p,
            value: total,
        });
    }
    let alpha_cokernel = (k == 0 && j % 2 == 1)
        .then(|| dim_cusp_level1(2 * j - 2) + final_delta(convention, k, j));
    Ok(IbukiyamaBreakdown {
        yoshida_term,
        siegel_kp,
        siegel_k1,
        delta_level1_term,
        final_delta_term,
        total: total as u64,
        alpha_cokernel,
    })
}

pub fn ibukiyama_dim(
    k: i64,
    j: i64,
    p: u64,
    table: &DimTable,
    convention: DeltaConvention,
) -> Result<u64, DimError> {
    Ok(ibukiyama_breakdown(k, j, p, table, convention)?.total)
}

/// The substitution identity between the newform count and the dimension
/// identity: the identity total equals lift count + newform dimension + the
/// vanishing-cycle cokernel corrections, exactly.
pub fn substitution_identity_holds(
    k: i64,
    j: i64,
    p: u64,
    table: &DimTable,
    convention: DeltaConvention,
) -> Result<bool, DimError> {
    let lhs = ibukiyama_dim(k, j, p, table, convention)?;
    let new_dim = paramodular_new_dim(k, j, p, table)?;
    let lifts = yoshida_count(k, j, p)?;
    let odd_j_cokernel = if k == 0 && j % 2 == 1 {
        dim_cusp_level1(2 * j - 2)
    } else {
        0
    };
    let rhs = lifts + new_dim + odd_j_cokernel + final_delta(convention, k, j);
    Ok(lhs == rhs)
}

/// One line of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckLine>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.ok).count()
    }

    fn push(&mut self, name: String, ok: bool, detail: String) {
        self.checks.push(CheckLine { name, ok, detail });
    }
}

/// Run every identity over every table row:
/// classical rows against the closed formulas, the old/new structural
/// identity, newform nonnegativity, the substitution identity, and the
/// constant-forms lower bound at (0, 3).
pub fn verify_table(table: &DimTable, convention: DeltaConvention) -> VerifyReport {
    let mut report = VerifyReport::default();

    for (key, record) in &table.classical {
        let computed = match (key.level, key.new_only) {
            (ClassicalLevel::One, _) => Some(dim_cusp_level1(key.k)),
            (ClassicalLevel::Prime(p), false) => dim_cusp_gamma0p(key.k, p).ok(),
            (ClassicalLevel::Prime(p), true) => dim_cusp_gamma0p_new(key.k, p).ok(),
        };
        match computed {
            Some(c) => report.push(
                format!("classical formula vs table at {key}"),
                c == record.value,
                format!("formula {c}, table {} ({})", record.value, record.source),
            ),
            None => report.push(
                format!("classical formula vs table at {key}"),
                false,
                "formula rejected the weight".to_string(),
            ),
        }
    }

    // old/new structural identity on rows where both spaces are tabulated
    for (key, record) in &table.classical {
        if let (ClassicalLevel::Prime(p), false) = (key.level, key.new_only) {
            let new_key = ClassicalKey {
                new_only: true,
                ..*key
            };
            if let Some(new_rec) = table.classical.get(&new_key) {
                let lhs = record.value;
                let rhs = new_rec.value + 2 * dim_cusp_level1(key.k);
                report.push(
                    format!("old/new decomposition at weight {} level {p}", key.k),
                    lhs == rhs,
                    format!("full {lhs} = new {} + 2 x level-one", new_rec.value),
                );
            }
        }
    }

    for (k, j, p) in table.siegel_pairs() {
        let label = format!("(k={k}, j={j}, p={p})");
        match paramodular_new_dim(k, j, p, table) {
            Ok(new_dim) => report.push(
                format!("newform dimension nonnegative at {label}"),
                true,
                format!("value {new_dim}"),
            ),
            Err(e) => report.push(
                format!("newform dimension nonnegative at {label}"),
                false,
                e.to_string(),
            ),
        }
        match substitution_identity_holds(k, j, p, table, convention) {
            Ok(ok) => report.push(
                format!("substitution identity at {label}"),
                ok,
                "identity total = lifts + newforms + cokernel corrections".to_string(),
            ),
            Err(e) => report.push(format!("substitution identity at {label}"), false, e.to_string()),
        }
        if k == 0 && j == 3 {
            match ibukiyama_dim(k, j, p, table, convention) {
                Ok(v) => report.push(
                    format!("constant forms exist at {label}"),
                    v >= 1,
                    format!("dimension {v}"),
                ),
                Err(e) => report.push(format!("constant forms exist at {label}"), false, e.to_string()),
            }
        }
    }

    report
}
