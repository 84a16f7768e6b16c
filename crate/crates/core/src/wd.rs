//! Weil-Deligne representations with diagonal symbolic Frobenius and an
//! integer nilpotent monodromy operator, the monodromy filtration attached to
//! such an operator, and the weight-monodromy purity test.
//!
//! Frobenius eigenvalues are modeled as a formal monomial in unramified
//! character generators together with an integer weight `w`, meaning the
//! eigenvalue has complex absolute value `q^(w/2)`. Purity only ever consumes
//! the weights and the graded ranks of the monodromy operator, so nothing
//! beyond exact integer/rational arithmetic is needed.

use crate::matrix::{IntMatrix, MatrixError, Subspace};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WdError {
    #[error("monodromy operator must be square, got {rows}x{cols}")]
    MonodromyNotSquare { rows: usize, cols: usize },
    #[error("monodromy operator is not nilpotent")]
    NotNilpotent,
    #[error(
        "monodromy entry ({row},{col}) maps weight {from_weight} to weight {to_weight}; \
         the monodromy operator must lower weight by exactly 2"
    )]
    WeightLoweringViolated {
        row: usize,
        col: usize,
        from_weight: i64,
        to_weight: i64,
    },
    #[error("dimension mismatch: {basis} basis labels, {frobenius} eigenvalue symbols, {n} x {n} monodromy")]
    DimensionMismatch {
        basis: usize,
        frobenius: usize,
        n: usize,
    },
    #[error("declared dimension {declared} does not match {actual} basis vectors")]
    DeclaredDimensionMismatch { declared: usize, actual: usize },
    #[error("direct sum requires equal base weights, got {left} and {right}")]
    BaseWeightMismatch { left: i64, right: i64 },
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Formal monomial in unramified character generators, e.g. `chi^2*sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(BTreeMap<String, i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn generator(name: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (k, v) in &other.0 {
            let e = out.entry(k.clone()).or_insert(0);
            *e += v;
            if *e == 0 {
                out.remove(k);
            }
        }
        Monomial(out)
    }

    pub fn pow(&self, e: i64) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(
            self.0
                .iter()
                .map(|(k, v)| (k.clone(), v * e))
                .collect(),
        )
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    pub fn exponents(&self) -> &BTreeMap<String, i64> {
        &self.0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| {
                if *v == 1 {
                    k.clone()
                } else {
                    format!("{k}^{v}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// One diagonal Frobenius eigenvalue: unitary monomial times weight `w`
/// (absolute value `q^(w/2)`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueSymbol {
    pub monomial: Monomial,
    pub weight: i64,
}

impl EigenvalueSymbol {
    pub fn new(monomial: Monomial, weight: i64) -> Self {
        EigenvalueSymbol { monomial, weight }
    }
}

/// A Weil-Deligne representation in the diagonal-Frobenius model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilDeligneRep {
    basis: Vec<String>,
    frobenius: Vec<EigenvalueSymbol>,
    monodromy: IntMatrix,
    base_weight: i64,
}

/// JSON mirror; the on-disk schema is fixed.
#[derive(Serialize, Deserialize)]
struct WdJson {
    dimension: usize,
    basis: Vec<String>,
    frobenius: Vec<EigenvalueSymbol>,
    #[serde(rename = "N")]
    n: Vec<Vec<i64>>,
    base_weight: i64,
}

impl WeilDeligneRep {
    pub fn new(
        basis: Vec<String>,
        frobenius: Vec<EigenvalueSymbol>,
        monodromy: IntMatrix,
        base_weight: i64,
    ) -> Result<Self, WdError> {
        let rep = WeilDeligneRep {
            basis,
            frobenius,
            monodromy,
            base_weight,
        };
        rep.validate()?;
        Ok(rep)
    }

    /// A one-dimensional representation with the given eigenvalue symbol.
    pub fn line(label: &str, symbol: EigenvalueSymbol, base_weight: i64) -> Self {
        WeilDeligneRep {
            basis: vec![label.to_string()],
            frobenius: vec![symbol],
            monodromy: IntMatrix::zero(1, 1),
            base_weight,
        }
    }

    fn validate(&self) -> Result<(), WdError> {
        let n = self.basis.len();
        if self.frobenius.len() != n || self.monodromy.rows() != n || self.monodromy.cols() != n {
            return Err(WdError::DimensionMismatch {
                basis: n,
                frobenius: self.frobenius.len(),
                n: self.monodromy.rows(),
            });
        }
        if !self.monodromy.is_nilpotent() {
            return Err(WdError::NotNilpotent);
        }
        for i in 0..n {
            for j in 0..n {
                if !self.monodromy.get(i, j).is_zero() {
                    let from = self.frobenius[j].weight;
                    let to = self.frobenius[i].weight;
                    if to != from - 2 {
                        return Err(WdError::WeightLoweringViolated {
                            row: i,
                            col: j,
                            from_weight: from,
                            to_weight: to,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn frobenius(&self) -> &[EigenvalueSymbol] {
        &self.frobenius
    }

    pub fn monodromy(&self) -> &IntMatrix {
        &self.monodromy
    }

    pub fn base_weight(&self) -> i64 {
        self.base_weight
    }

    /// Basis indices whose Frobenius weight equals `w`.
    pub fn weight_indices(&self, w: i64) -> Vec<usize> {
        self.frobenius
            .iter()
            .enumerate()
            .filter(|(_, s)| s.weight == w)
            .map(|(i, _)| i)
            .collect()
    }

    /// The distinct Frobenius weights, sorted.
    pub fn weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.frobenius.iter().map(|s| s.weight).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// Rank of the monodromy operator over the rationals.
    pub fn n_rank(&self) -> usize {
        self.monodromy.rank()
    }

    /// Tate twist by `(n)`: every weight drops by `2n`, monodromy and
    /// unitary parts untouched.
    pub fn tate_twist(&self, n: i64) -> WeilDeligneRep {
        WeilDeligneRep {
            basis: self.basis.clone(),
            frobenius: self
                .frobenius
                .iter()
                .map(|s| EigenvalueSymbol::new(s.monomial.clone(), s.weight - 2 * n))
                .collect(),
            monodromy: self.monodromy.clone(),
            base_weight: self.base_weight - 2 * n,
        }
    }

    /// Dual: weights negate, unitary monomials invert, monodromy transposes.
    pub fn dual(&self) -> WeilDeligneRep {
        WeilDeligneRep {
            basis: self.basis.clone(),
            frobenius: self
                .frobenius
                .iter()
                .map(|s| EigenvalueSymbol::new(s.monomial.inverse(), -s.weight))
                .collect(),
            monodromy: self.monodromy.transpose(),
            base_weight: -self.base_weight,
        }
    }

    /// Block direct sum; both summands must share the base weight.
    pub fn direct_sum(&self, other: &WeilDeligneRep) -> Result<WeilDeligneRep, WdError> {
        if self.base_weight != other.base_weight {
            return Err(WdError::BaseWeightMismatch {
                left: self.base_weight,
                right: other.base_weight,
            });
        }
        let mut basis = self.basis.clone();
        basis.extend(other.basis.clone());
        let mut frobenius = self.frobenius.clone();
        frobenius.extend(other.frobenius.clone());
        Ok(WeilDeligneRep {
            basis,
            frobenius,
            monodromy: IntMatrix::block_diag(&[&self.monodromy, &other.monodromy]),
            base_weight: self.base_weight,
        })
    }

    /// The monodromy filtration of the rep's operator, centered at the rep's
    /// base weight.
    pub fn monodromy_filtration(&self) -> Result<MonodromyFiltration, WdError> {
        monodromy_filtration(&self.monodromy, self.base_weight)
    }

    /// Weight-monodromy purity test with certificate.
    ///
    /// Pure means: for every i >= 1 the i-th power of monodromy restricts to
    /// an isomorphism from the Frobenius eigenspace of weight base+i onto the
    /// one of weight base-i, and the graded pieces of the monodromy
    /// filtration are concentrated in the matching Frobenius weight.
    pub fn is_pure(&self) -> Result<PurityCertificate, WdError> {
        self.validate()?;
        let n = self.dimension();
        let c = self.base_weight;
        let filt = self.monodromy_filtration()?;

        // per-power rank table between opposite weight eigenspaces
        let max_offset = self
            .frobenius
            .iter()
            .map(|s| (s.weight - c).abs())
            .max()
            .unwrap_or(0);
        let mut n_power_checks = Vec::new();
        let mut all_isos = true;
        for i in 1..=max_offset {
            let upper = Subspace::coordinate(n, &self.weight_indices(c + i));
            let lower_dim = self.weight_indices(c - i).len();
            if upper.is_zero() && lower_dim == 0 {
                continue;
            }
            let power = self.monodromy.pow(i as usize)?;
            let image = upper.apply_int(&power);
            let rank = image.dim();
            let check = NPowerCheck {
                power: i,
                upper_dim: upper.dim(),
                lower_dim,
                rank,
                max_rank: upper.dim().min(lower_dim),
            };
            if !(rank == check.upper_dim && rank == check.lower_dim) {
                all_isos = false;
            }
            n_power_checks.push(check);
        }

        // graded pieces of the filtration vs Frobenius eigenspace dims
        let mut graded_match = Vec::new();
        let mut graded_ok = true;
        let mut ws = self.weights();
        for m in filt.support() {
            if !ws.contains(&m) {
                ws.push(m);
            }
        }
        ws.sort_unstable();
        ws.dedup();
        for w in ws {
            let fr_dim = self.weight_indices(w).len();
            let gr_dim = filt.graded_dim(w);
            if fr_dim != gr_dim {
                graded_ok = false;
            }
            graded_match.push(GradedWeightLine {
                weight: w,
                filtration_graded_dim: gr_dim,
                frobenius_eigenspace_dim: fr_dim,
            });
        }

        Ok(PurityCertificate {
            base_weight: c,
            n_power_checks,
            graded_weight_match: graded_match,
            pure: all_isos && graded_ok,
        })
    }

    pub fn to_json(&self) -> String {
        let mirror = WdJson {
            dimension: self.dimension(),
            basis: self.basis.clone(),
            frobenius: self.frobenius.clone(),
            n: self
                .monodromy
                .to_i64_rows()
                .expect("monodromy entries fit in i64"),
            base_weight: self.base_weight,
        };
        serde_json::to_string(&mirror).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, WdError> {
        let mirror: WdJson =
            serde_json::from_str(s).map_err(|e| WdError::Json(e.to_string()))?;
        if mirror.dimension != mirror.basis.len() {
            return Err(WdError::DeclaredDimensionMismatch {
                declared: mirror.dimension,
                actual: mirror.basis.len(),
            });
        }
        let monodromy = IntMatrix::from_rows(&mirror.n)?;
        WeilDeligneRep::new(mirror.basis, mirror.frobenius, monodromy, mirror.base_weight)
    }
}

/// Rank table entry for one power of the monodromy operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NPowerCheck {
    pub power: i64,
    pub upper_dim: usize,
    pub lower_dim: usize,
    pub rank: usize,
    pub max_rank: usize,
}

/// One graded weight compared between the monodromy filtration and the
/// Frobenius eigenspace decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedWeightLine {
    pub weight: i64,
    pub filtration_graded_dim: usize,
    pub frobenius_eigenspace_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PurityCertificate {
    pub base_weight: i64,
    pub n_power_checks: Vec<NPowerCheck>,
    pub graded_weight_match: Vec<GradedWeightLine>,
    pub pure: bool,
}

/// The increasing filtration attached to a nilpotent operator, centered at
/// `center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyFiltration {
    center: i64,
    ambient: usize,
    steps: BTreeMap<i64, Subspace>,
}

impl MonodromyFiltration {
    pub fn center(&self) -> i64 {
        self.center
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Step `M_m`, with the filtration extended by zero below and the full
    /// space above its recorded range.
    pub fn step(&self, m: i64) -> Subspace {
        match self.steps.range(..=m).next_back() {
            Some((_, s)) => s.clone(),
            None => Subspace::zero(self.ambient),
        }
    }

    pub fn graded_dim(&self, m: i64) -> usize {
        self.step(m).dim() - self.step(m - 1).dim()
    }

    /// Indices with nonzero graded piece, sorted.
    pub fn support(&self) -> Vec<i64> {
        let Some((&lo, _)) = self.steps.iter().next() else {
            return Vec::new();
        };
        let (&hi, _) = self.steps.iter().next_back().expect("nonempty");
        (lo..=hi).filter(|&m| self.graded_dim(m) > 0).collect()
    }

    pub fn steps(&self) -> &BTreeMap<i64, Subspace> {
        &self.steps
    }

    /// Checks `N * M_m ⊆ M_{m-2}` for every recorded step.
    pub fn check_lowering(&self, n: &IntMatrix) -> bool {
        self.steps.iter().all(|(&m, s)| {
            let image = s.apply_int(n);
            self.step(m - 2).contains(&image)
        })
    }

    /// Checks that `N^i` induces an isomorphism `gr_{c+i} -> gr_{c-i}` for
    /// every i >= 1 in range.
    pub fn check_graded_isomorphisms(&self, n: &IntMatrix) -> bool {
        let c = self.center;
        let max_offset = self
            .steps
            .keys()
            .map(|&m| (m - c).abs())
            .max()
            .unwrap_or(0);
        for i in 1..=max_offset {
            let upper_dim = self.graded_dim(c + i);
            let lower_dim = self.graded_dim(c - i);
            if upper_dim != lower_dim {
                return false;
            }
            if upper_dim == 0 {
                continue;
            }
            let power = match n.pow(i as usize) {
                Ok(p) => p,
                Err(_) => return false,
            };
            // rank of the induced map gr_{c+i} -> gr_{c-i}:
            // dim((N^i M_{c+i} + M_{c-i-1}) / M_{c-i-1})
            let image = self.step(c + i).apply_int(&power);
            let below = self.step(c - i - 1);
            let induced_rank = image.sum(&below).dim() - below.dim();
            if induced_rank != upper_dim {
                return false;
            }
        }
        true
    }
}

/// The unique increasing filtration with `N·M_m ⊆ M_{m-2}` and
/// `N^i: gr_{center+i} ≅ gr_{center-i}`, computed over exact rationals as
///
/// `M_{center+m} = Σ_{i-j=m, i,j>=0} ker(N^{i+1}) ∩ im(N^j)`.
pub fn monodromy_filtration(
    n: &IntMatrix,
    center: i64,
) -> Result<MonodromyFiltration, WdError> {
    if n.rows() != n.cols() {
        return Err(WdError::MonodromyNotSquare {
            rows: n.rows(),
            cols: n.cols(),
        });
    }
    let dim = n.rows();
    let Some(e) = n.nilpotency_index() else {
        return Err(WdError::NotNilpotent);
    };

    let mut steps = BTreeMap::new();
    if e == 0 {
        // zero-dimensional space: a single step, already everything
        steps.insert(center, Subspace::full(dim));
        return Ok(MonodromyFiltration {
            center,
            ambient: dim,
            steps,
        });
    }

    // kernels and images of all powers, computed once
    let e = e as i64;
    let mut kernels = Vec::new(); // kernels[i] = ker N^i
    let mut images = Vec::new(); // images[i] = im N^i
    for i in 0..=(e as usize) {
        let p = n.pow(i)?;
        let rp = p.to_rational();
        kernels.push(rp.kernel());
        images.push(rp.column_space());
    }
    let ker = |i: i64| -> Subspace {
        if i <= 0 {
            Subspace::zero(dim)
        } else if i >= e {
            Subspace::full(dim)
        } else {
            kernels[i as usize].clone()
        }
    };
    let im = |j: i64| -> Subspace {
        if j <= 0 {
            Subspace::full(dim)
        } else if j >= e {
            Subspace::zero(dim)
        } else {
            images[j as usize].clone()
        }
    };

    for m in -e..=(e - 1) {
        let mut acc = Subspace::zero(dim);
        for i in 0..=e {
            let j = i - m;
            if j < 0 {
                continue;
            }
            let term = ker(i + 1).intersect(&im(j));
            if !term.is_zero() {
                acc = acc.sum(&term);
            }
        }
        steps.insert(center + m, acc);
    }

    Ok(MonodromyFiltration {
        center,
        ambient: dim,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(weight: i64) -> EigenvalueSymbol {
        EigenvalueSymbol::new(Monomial::one(), weight)
    }

    fn jordan_block(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, 1.into());
        }
        m
    }

    /// The 4x4 single-entry operator sending e3 to e2.
    fn n1() -> IntMatrix {
        let mut m = IntMatrix::zero(4, 4);
        m.set(1, 2, 1.into());
        m
    }

    #[test]
    fn filtration_zero_operator() {
        let filt = monodromy_filtration(&IntMatrix::zero(2, 2), 0).unwrap();
        assert_eq!(filt.step(-1).dim(), 0);
        assert_eq!(filt.step(0).dim(), 2);
        assert_eq!(filt.graded_dim(0), 2);
        assert_eq!(filt.support(), vec![0]);
    }

    #[test]
    fn filtration_jordan_block_2() {
        let filt = monodromy_filtration(&jordan_block(2), 0).unwrap();
        assert_eq!(filt.graded_dim(-1), 1);
        assert_eq!(filt.graded_dim(0), 0);
        assert_eq!(filt.graded_dim(1), 1);
    }

    #[test]
    fn filtration_n1() {
        // gr dims 1 at -1, 2 at 0, 1 at +1
        let filt = monodromy_filtration(&n1(), 0).unwrap();
        assert_eq!(filt.graded_dim(-1), 1);
        assert_eq!(filt.graded_dim(0), 2);
        assert_eq!(filt.graded_dim(1), 1);
        assert!(filt.check_lowering(&n1()));
        assert!(filt.check_graded_isomorphisms(&n1()));
    }

    #[test]
    fn filtration_rejects_non_nilpotent() {
        let err = monodromy_filtration(&IntMatrix::identity(2), 0).unwrap_err();
        assert_eq!(err, WdError::NotNilpotent);
    }

    #[test]
    fn filtration_center_shift() {
        let filt = monodromy_filtration(&jordan_block(3), 5).unwrap();
        assert_eq!(filt.support(), vec![3, 5, 7]);
    }

    fn iia_weights_rep(n: IntMatrix) -> Result<WeilDeligneRep, WdError> {
        WeilDeligneRep::new(
            vec!["e1".into(), "e2".into(), "e3".into(), "e4".into()],
            vec![sym(0), sym(-1), sym(1), sym(0)],
            n,
            0,
        )
    }

    #[test]
    fn purity_of_iia_shape() {
        let rep = iia_weights_rep(n1()).unwrap();
        let cert = rep.is_pure().unwrap();
        assert!(cert.pure);
        assert_eq!(rep.n_rank(), 1);
    }

    #[test]
    fn same_weights_no_monodromy_fails() {
        let rep = iia_weights_rep(IntMatrix::zero(4, 4)).unwrap();
        let cert = rep.is_pure().unwrap();
        assert!(!cert.pure);
        let level1 = cert
            .n_power_checks
            .iter()
            .find(|c| c.power == 1)
            .expect("offset 1 is populated");
        assert_eq!(level1.rank, 0);
        assert_eq!(level1.max_rank, 1);
    }

    #[test]
    fn unramified_line_is_pure() {
        let rep = WeilDeligneRep::line("e1", sym(0), 0);
        assert!(rep.is_pure().unwrap().pure);
    }

    #[test]
    fn concentrated_weight_no_monodromy_is_pure() {
        // every weight equals the base weight and N = 0
        let rep = WeilDeligneRep::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![sym(5), sym(5), sym(5)],
            IntMatrix::zero(3, 3),
            5,
        )
        .unwrap();
        assert!(rep.is_pure().unwrap().pure);
    }

    #[test]
    fn weight_lowering_invariant_enforced() {
        let mut n = IntMatrix::zero(2, 2);
        n.set(0, 1, 1.into());
        // weights (0, 0): entry maps weight 0 to weight 0, must be rejected
        let err = WeilDeligneRep::new(
            vec!["a".into(), "b".into()],
            vec![sym(0), sym(0)],
            n,
            0,
        )
        .unwrap_err();
        assert!(matches!(err, WdError::WeightLoweringViolated { .. }));
    }

    #[test]
    fn tate_twist_shifts_weights() {
        let line = WeilDeligneRep::line("e", sym(0), 0);
        let twisted = line.tate_twist(-2);
        assert_eq!(twisted.frobenius()[0].weight, 4);
        assert_eq!(twisted.base_weight(), 4);
        assert_eq!(line.tate_twist(0), line);
        assert_eq!(line.tate_twist(1).tate_twist(-1), line);
    }

    #[test]
    fn dual_negates_weights() {
        let rep = iia_weights_rep(n1()).unwrap();
        let dual = rep.dual();
        let w: Vec<i64> = dual.frobenius().iter().map(|s| s.weight).collect();
        assert_eq!(w, vec![0, 1, -1, 0]);
        assert_eq!(dual.dual(), rep);
        assert!(dual.is_pure().unwrap().pure);
    }

    #[test]
    fn direct_sum_ranks_add() {
        let a = iia_weights_rep(n1()).unwrap();
        let b = a.clone();
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(sum.dimension(), 8);
        assert_eq!(sum.n_rank(), 2);
        assert!(sum.is_pure().unwrap().pure);
    }

    #[test]
    fn direct_sum_base_weight_mismatch() {
        let a = WeilDeligneRep::line("x", sym(0), 0);
        let b = WeilDeligneRep::line("y", sym(2), 2);
        assert!(matches!(
            a.direct_sum(&b),
            Err(WdError::BaseWeightMismatch { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let rep = iia_weights_rep(n1()).unwrap();
        let s1 = rep.to_json();
        let back = WeilDeligneRep::from_json(&s1).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.to_json(), s1);
    }

    #[test]
    fn json_rejects_malformed() {
        // dimension field lies about the basis length
        let doc = r#"{"dimension": 3, "basis": ["e1"], "frobenius": [{"monomial": {}, "weight": 0}], "N": [[0]], "base_weight": 0}"#;
        assert!(WeilDeligneRep::from_json(doc).is_err());
    }
}
