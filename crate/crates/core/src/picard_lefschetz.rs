//! The ledger: abstract Hecke-eigensystem contributions to middle-degree
//! inner cohomology, the rank bookkeeping of the vanishing-cycle map, the
//! three-step weight filtration, the integral component group as a Smith
//! normal form cokernel, and the level-lowering decision procedure.

use crate::local_reps::{
    wd_of_iia, LocalRepError, LocalRepType, ParamodularLocalRep, ScalarSymbol,
};
use crate::matrix::IntMatrix;
use crate::snf::smith_normal_form;
use crate::wd::WdError;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LedgerError {
    #[error("primes p and ell must be distinct, got {0} twice")]
    PrimesNotDistinct(u64),
    #[error("contribution {id:?}: {reason}")]
    BadContribution { id: String, reason: String },
    #[error(
        "weight profile inconsistent: total dimension {total} is smaller than \
         2 x alpha rank {alpha_rank}"
    )]
    ProfileInconsistent { total: u64, alpha_rank: u64 },
    #[error("number of distinct Frobenius eigenvalues must be in 1..=4, got {0}")]
    BadEigenvalueCount(u8),
    #[error("gamma matrix has ragged rows")]
    BadGammaMatrix,
    #[error("invalid scenario JSON: {0}")]
    Json(String),
    #[error(transparent)]
    LocalRep(#[from] LocalRepError),
    #[error(transparent)]
    Wd(#[from] WdError),
}

/// Arthur-type tag of a contribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArthurType {
    General,
    Yoshida,
    SaitoKurokawa,
}

/// Archimedean member tag: holomorphic (H), generic (W), or anything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PiInfinity {
    H,
    W,
    #[serde(rename = "other")]
    Other,
}

/// The local-at-p behavior of the Galois piece a contribution carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocalAtP {
    Unramified,
    Ramified {
        rep_type: LocalRepType,
        chi: ScalarSymbol,
        sigma: ScalarSymbol,
    },
}

/// One Hecke eigensystem's contribution to inner cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerContribution {
    pub id: String,
    pub arthur_type: ArthurType,
    pub pi_infty: PiInfinity,
    pub local_at_p: LocalAtP,
    /// Dimension of the Galois piece: 2 for endoscopic/CAP types, 4 for
    /// general type with holomorphic infinity, 0 for the generic partner.
    pub galois_dim: u8,
    /// dim of the fixed vectors of the finite part, at least 1.
    pub multiplicity: u32,
}

impl LedgerContribution {
    pub fn validate(&self) -> Result<(), LedgerError> {
        let fail = |reason: &str| LedgerError::BadContribution {
            id: self.id.clone(),
            reason: reason.to_string(),
        };
        if self.multiplicity < 1 {
            return Err(fail("multiplicity must be at least 1"));
        }
        let expected = match (self.arthur_type, self.pi_infty) {
            (ArthurType::Yoshida, _) | (ArthurType::SaitoKurokawa, _) => 2,
            (ArthurType::General, PiInfinity::H) => 4,
            (ArthurType::General, PiInfinity::W) => 0,
            // non-discrete-series members carry no Galois piece
            (ArthurType::General, PiInfinity::Other) => 0,
        };
        if self.galois_dim != expected {
            return Err(fail(&format!(
                "galois_dim must be {expected} for ({:?}, {:?}), got {}",
                self.arthur_type, self.pi_infty, self.galois_dim
            )));
        }
        Ok(())
    }
}

/// Scenario: the contributions together with the geometric and coefficient
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerScenario {
    pub prime_p: u64,
    pub prime_ell: u64,
    /// Coefficient-system weight k.
    pub coefficient_weight: i64,
    /// Fiber dimension of the coefficient system.
    pub coefficient_fiber_dim: u64,
    /// Number of singular points of the paramodular model.
    pub sigma_size: u64,
    pub contributions: Vec<LedgerContribution>,
    /// Optional integral matrix of the monodromy map on integral images; when
    /// absent it is assembled block-diagonally with a unit block per ramified
    /// generic contribution.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<Vec<i64>>>,
    /// Optional inputs for the level-lowering decision.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mazur: Option<MazurHypotheses>,
}

impl LedgerScenario {
    pub fn validate(&self) -> Result<(), LedgerError> {
        if self.prime_p == self.prime_ell {
            return Err(LedgerError::PrimesNotDistinct(self.prime_p));
        }
        if !crate::local_reps::is_prime(self.prime_p) {
            return Err(LocalRepError::NotPrime(self.prime_p).into());
        }
        if !crate::local_reps::is_prime(self.prime_ell) {
            return Err(LocalRepError::NotPrime(self.prime_ell).into());
        }
        for c in &self.contributions {
            c.validate()?;
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self, LedgerError> {
        let scenario: LedgerScenario =
            serde_json::from_str(s).map_err(|e| LedgerError::Json(e.to_string()))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// Localization at one residual eigensystem: keep only the contributions
    /// with the given label. A supplied gamma matrix refers to the full
    /// scenario and is dropped; the localized gamma is reassembled.
    pub fn localize(&self, id: &str) -> LedgerScenario {
        LedgerScenario {
            contributions: self
                .contributions
                .iter()
                .filter(|c| c.id == id)
                .cloned()
                .collect(),
            gamma: None,
            ..self.clone()
        }
    }

    /// Total dimension of the cohomology modeled by the scenario.
    pub fn total_galois_dim(&self) -> u64 {
        self.contributions
            .iter()
            .map(|c| c.multiplicity as u64 * c.galois_dim as u64)
            .sum()
    }
}

/// dim of the stalkwise vanishing-cycle space: one copy of the coefficient
/// fiber per singular point.
pub fn vanishing_cycle_dim(scenario: &LedgerScenario) -> u64 {
    scenario.sigma_size * scenario.coefficient_fiber_dim
}

fn alpha_contribution(c: &LedgerContribution) -> u64 {
    if c.galois_dim == 0 {
        return 0;
    }
    match &c.local_at_p {
        LocalAtP::Unramified => 0,
        LocalAtP::Ramified { rep_type, .. } => {
            // only the generic type has an implemented realization, and its
            // monodromy has rank one
            if *rep_type == LocalRepType::IIa {
                c.multiplicity as u64
            } else {
                0
            }
        }
    }
}

/// Rank of the vanishing-cycle map: one dimension per ramified generic
/// contribution, weighted by multiplicity.
pub fn alpha_rank(scenario: &LedgerScenario) -> u64 {
    scenario.contributions.iter().map(alpha_contribution).sum()
}

/// Graded dimensions of the three-step weight filtration, keyed by weight.
/// The bottom and top graded pieces both have dimension alpha_rank, the
/// middle piece absorbs the rest. Zero-dimensional pieces are omitted.
pub fn weight_filtration_profile(
    scenario: &LedgerScenario,
) -> Result<BTreeMap<i64, u64>, LedgerError> {
    scenario.validate()?;
    let total = scenario.total_galois_dim();
    let a = alpha_rank(scenario);
    if total < 2 * a {
        return Err(LedgerError::ProfileInconsistent {
            total,
            alpha_rank: a,
        });
    }
    let k = scenario.coefficient_weight;
    let mut profile = BTreeMap::new();
    if a > 0 {
        profile.insert(k + 2, a);
        profile.insert(k + 4, a);
    }
    if total - 2 * a > 0 {
        profile.insert(k + 3, total - 2 * a);
    }
    Ok(profile)
}

/// The integral matrix of the monodromy map between the integral images of
/// the vanishing-cycle maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralMonodromyMap {
    pub matrix: IntMatrix,
}

impl IntegralMonodromyMap {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, LedgerError> {
        let matrix = IntMatrix::from_rows(rows).map_err(|_| LedgerError::BadGammaMatrix)?;
        Ok(IntegralMonodromyMap { matrix })
    }

    pub fn identity(n: usize) -> Self {
        IntegralMonodromyMap {
            matrix: IntMatrix::identity(n),
        }
    }
}

/// The cokernel of an integral monodromy map: torsion invariant factors plus
/// a free rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGroup {
    /// Invariant factors > 1, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl Serialize for ComponentGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ComponentGroup", 2)?;
        let factors: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| d.to_string())
            .collect();
        s.serialize_field("invariant_factors", &factors)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        s.end()
    }
}

impl ComponentGroup {
    pub fn trivial() -> Self {
        ComponentGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// The ell-primary part: each invariant factor is replaced by its
    /// ell-power part, trivial factors dropped; the free rank survives.
    pub fn ell_part(&self, ell: u64) -> ComponentGroup {
        let ell = BigInt::from(ell);
        let mut factors = Vec::new();
        for d in &self.invariant_factors {
            let mut part = BigInt::from(1);
            let mut rest = d.clone();
            while (&rest % &ell).is_zero() {
                rest /= &ell;
                part *= &ell;
            }
            if part > BigInt::from(1) {
                factors.push(part);
            }
        }
        ComponentGroup {
            invariant_factors: factors,
            free_rank: self.free_rank,
        }
    }
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Cokernel of the map via Smith normal form over the integers. An empty
/// matrix (no columns) leaves the whole target as free rank.
pub fn component_group(map: &IntegralMonodromyMap) -> ComponentGroup {
    let snf = smith_normal_form(&map.matrix);
    ComponentGroup {
        invariant_factors: snf.nontrivial_factors(),
        free_rank: snf.rows - snf.rank,
    }
}

/// The monodromy matrix of a scenario: the supplied integral matrix when
/// present, otherwise a unit block per ramified generic contribution, i.e.
/// the identity in rank alpha_rank(scenario).
pub fn assembled_gamma(scenario: &LedgerScenario) -> Result<IntegralMonodromyMap, LedgerError> {
    match &scenario.gamma {
        Some(rows) => IntegralMonodromyMap::from_rows(rows),
        None => Ok(IntegralMonodromyMap::identity(alpha_rank(scenario) as usize)),
    }
}

/// True iff every ramified Galois piece in the scenario passes the purity
/// test of its Weil-Deligne realization. Purity is invariant under Tate
/// twisting, so the test runs at the realization's own center; shifting to
/// the cohomological normalization changes nothing.
pub fn is_weight_monodromy_ok(scenario: &LedgerScenario) -> Result<bool, LedgerError> {
    scenario.validate()?;
    for c in &scenario.contributions {
        if c.galois_dim == 0 {
            continue;
        }
        if let LocalAtP::Ramified {
            rep_type,
            chi,
            sigma,
        } = &c.local_at_p
        {
            if !rep_type.has_wd_realization() {
                // the non-generic types fail weight-monodromy
                return Ok(false);
            }
            let rep = ParamodularLocalRep::new(
                *rep_type,
                chi.clone(),
                sigma.clone(),
                scenario.prime_p,
            )?;
            let cert = wd_of_iia(&rep)?.is_pure()?;
            if !cert.pure {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Inputs of the level-lowering decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MazurHypotheses {
    pub n_distinct_frobenius_eigenvalues: u8,
    pub irreducible: bool,
    pub unramified_mod_ell: bool,
}

/// Full input of `mazur_check`, with the component-group hypothesis filled
/// in (usually from a computed component group).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MazurInput {
    pub n_distinct_frobenius_eigenvalues: u8,
    pub irreducible: bool,
    pub unramified_mod_ell: bool,
    pub component_group_trivial: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Irreducibility,
    UnramifiedModEll,
    ComponentGroupTrivial,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Irreducibility => write!(f, "irreducibility"),
            Hypothesis::UnramifiedModEll => write!(f, "unramified mod ell"),
            Hypothesis::ComponentGroupTrivial => write!(f, "component group trivial"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MazurVerdict {
    /// All hypotheses hold and four distinct eigenvalues persist: a
    /// congruence to an unramified eigensystem is forced.
    LevelLoweringForced,
    /// Hypotheses hold but at most three distinct eigenvalues: the counting
    /// argument gives nothing.
    Inconclusive { distinct_eigenvalues: u8 },
    /// At least one hypothesis fails.
    HypothesisFail { failed: Vec<Hypothesis> },
}

impl fmt::Display for MazurVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MazurVerdict::LevelLoweringForced => write!(f, "LevelLoweringForced"),
            MazurVerdict::Inconclusive {
                distinct_eigenvalues,
            } => write!(f, "Inconclusive({distinct_eigenvalues} distinct eigenvalues)"),
            MazurVerdict::HypothesisFail { failed } => {
                let names: Vec<String> = failed.iter().map(|h| h.to_string()).collect();
                write!(f, "HypothesisFail({})", names.join(", "))
            }
        }
    }
}

/// The counting argument: an unramified irreducible piece lands in the
/// kernel of the reduced vanishing-cycle map, which supports at most three
/// Frobenius eigenvalue classes. Four distinct persisting eigenvalues are
/// therefore incompatible with staying ramified, forcing level lowering.
pub fn mazur_check(input: MazurInput) -> Result<MazurVerdict, LedgerError> {
    let n = input.n_distinct_frobenius_eigenvalues;
    if !(1..=4).contains(&n) {
        return Err(LedgerError::BadEigenvalueCount(n));
    }
    let mut failed = Vec::new();
    if !input.irreducible {
        failed.push(Hypothesis::Irreducibility);
    }
    if !input.unramified_mod_ell {
        failed.push(Hypothesis::UnramifiedModEll);
    }
    if !input.component_group_trivial {
        failed.push(Hypothesis::ComponentGroupTrivial);
    }
    if !failed.is_empty() {
        return Ok(MazurVerdict::HypothesisFail { failed });
    }
    if n == 4 {
        Ok(MazurVerdict::LevelLoweringForced)
    } else {
        Ok(MazurVerdict::Inconclusive {
            distinct_eigenvalues: n,
        })
    }
}

/// Everything the ledger computes for one scenario.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerReport {
    pub total_galois_dim: u64,
    pub vanishing_cycle_dim: u64,
    pub alpha_rank: u64,
    pub weight_profile: BTreeMap<i64, u64>,
    pub component_group: ComponentGroup,
    pub component_group_ell_part: ComponentGroup,
    pub weight_monodromy_ok: bool,
    pub mazur: Option<MazurVerdict>,
    pub warnings: Vec<String>,
}

/// Run the whole ledger over one scenario. The component-group hypothesis of
/// the level-lowering check is derived from the computed component group.
pub fn run_scenario(scenario: &LedgerScenario) -> Result<LedgerReport, LedgerError> {
    scenario.validate()?;
    let total = scenario.total_galois_dim();
    let vc_dim = vanishing_cycle_dim(scenario);
    let a = alpha_rank(scenario);
    let profile = weight_filtration_profile(scenario)?;
    let gamma = assembled_gamma(scenario)?;
    let theta = component_group(&gamma);
    let theta_ell = theta.ell_part(scenario.prime_ell);
    let wm_ok = is_weight_monodromy_ok(scenario)?;

    let mut warnings = Vec::new();
    if a > vc_dim {
        warnings.push(format!(
            "inconsistent scenario: alpha rank {a} exceeds the vanishing-cycle dimension {vc_dim}"
        ));
    }

    let mazur = match &scenario.mazur {
        Some(h) => Some(mazur_check(MazurInput {
            n_distinct_frobenius_eigenvalues: h.n_distinct_frobenius_eigenvalues,
            irreducible: h.irreducible,
            unramified_mod_ell: h.unramified_mod_ell,
            component_group_trivial: theta_ell.is_trivial(),
        })?),
        None => None,
    };

    Ok(LedgerReport {
        total_galois_dim: total,
        vanishing_cycle_dim: vc_dim,
        alpha_rank: a,
        weight_profile: profile,
        component_group: theta,
        component_group_ell_part: theta_ell,
        weight_monodromy_ok: wm_ok,
        mazur,
        warnings,
    })
}
