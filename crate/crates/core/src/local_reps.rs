//! The five types of ramified paramodular-spherical irreducible smooth
//! representations of GSp4(Q_p), their genericity flags, the type-IIa
//! Weil-Deligne realization, and Atkin-Lehner / Frobenius eigenvalue
//! formulas.
//!
//! Only type IIa is generic and only type IIa gets an explicit Weil-Deligne
//! realization here; the remaining four types are catalogued by flags alone.

use crate::matrix::IntMatrix;
use crate::wd::{EigenvalueSymbol, Monomial, WeilDeligneRep};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LocalRepError {
    #[error("operation requires a type IIa representation, got {0}")]
    NotTypeIIa(LocalRepType),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unramified character values must be nonzero")]
    ZeroCharacterValue,
    #[error("cannot parse scalar symbol {input:?}: {reason}")]
    ScalarParse { input: String, reason: String },
}

/// The type tag of a ramified paramodular-spherical representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LocalRepType {
    IIa,
    IVc,
    Vb,
    Vc,
    VIc,
}

impl LocalRepType {
    pub const ALL: [LocalRepType; 5] = [
        LocalRepType::IIa,
        LocalRepType::IVc,
        LocalRepType::Vb,
        LocalRepType::Vc,
        LocalRepType::VIc,
    ];

    /// Only type IIa is generic.
    pub fn is_generic(self) -> bool {
        self == LocalRepType::IIa
    }

    /// The non-generic types are expected to fail weight-monodromy.
    pub fn expected_pure(self) -> bool {
        self.is_generic()
    }

    /// An explicit Weil-Deligne matrix is implemented for type IIa only.
    pub fn has_wd_realization(self) -> bool {
        self == LocalRepType::IIa
    }
}

impl fmt::Display for LocalRepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LocalRepType::IIa => "IIa",
            LocalRepType::IVc => "IVc",
            LocalRepType::Vb => "Vb",
            LocalRepType::Vc => "Vc",
            LocalRepType::VIc => "VIc",
        };
        write!(f, "{s}")
    }
}

impl FromStr for LocalRepType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "IIa" => Ok(LocalRepType::IIa),
            "IVc" => Ok(LocalRepType::IVc),
            "Vb" => Ok(LocalRepType::Vb),
            "Vc" => Ok(LocalRepType::Vc),
            "VIc" => Ok(LocalRepType::VIc),
            other => Err(format!("unknown representation type {other:?}")),
        }
    }
}

/// One catalog line, as dumped by the JSON interface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub tag: LocalRepType,
    pub generic: bool,
    pub expected_pure: bool,
    pub has_wd_realization: bool,
}

pub fn catalog() -> Vec<CatalogEntry> {
    LocalRepType::ALL
        .iter()
        .map(|&tag| CatalogEntry {
            tag,
            generic: tag.is_generic(),
            expected_pure: tag.expected_pure(),
            has_wd_realization: tag.has_wd_realization(),
        })
        .collect()
}

/// A scalar that is a rational number times a monomial in formal symbols,
/// e.g. `2/3*a*b^2`. Character values at p live here: concrete values have
/// no symbols, formal values are symbols with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarSymbol {
    coeff: BigRational,
    exponents: BTreeMap<String, i64>,
}

impl ScalarSymbol {
    pub fn one() -> Self {
        ScalarSymbol {
            coeff: BigRational::one(),
            exponents: BTreeMap::new(),
        }
    }

    pub fn rational(value: BigRational) -> Self {
        ScalarSymbol {
            coeff: value,
            exponents: BTreeMap::new(),
        }
    }

    pub fn integer(value: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn symbol(name: &str) -> Self {
        let mut exponents = BTreeMap::new();
        exponents.insert(name.to_string(), 1);
        ScalarSymbol {
            coeff: BigRational::one(),
            exponents,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn rational_value(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.coeff)
    }

    pub fn mul(&self, other: &ScalarSymbol) -> ScalarSymbol {
        let mut exponents = self.exponents.clone();
        for (k, v) in &other.exponents {
            let e = exponents.entry(k.clone()).or_insert(0);
            *e += v;
            if *e == 0 {
                exponents.remove(k);
            }
        }
        ScalarSymbol {
            coeff: &self.coeff * &other.coeff,
            exponents,
        }
    }

    pub fn square(&self) -> ScalarSymbol {
        self.mul(self)
    }

    /// Integer power; negative exponents invert the (nonzero) coefficient.
    pub fn pow(&self, e: i64) -> ScalarSymbol {
        let mut coeff = BigRational::one();
        for _ in 0..e.unsigned_abs() {
            coeff *= &self.coeff;
        }
        if e < 0 {
            coeff = coeff.recip();
        }
        let exponents = self
            .exponents
            .iter()
            .map(|(k, v)| (k.clone(), v * e))
            .filter(|(_, v)| *v != 0)
            .collect();
        ScalarSymbol { coeff, exponents }
    }

    pub fn scale_int(&self, n: u64) -> ScalarSymbol {
        ScalarSymbol {
            coeff: &self.coeff * BigRational::from_integer(BigInt::from(n)),
            exponents: self.exponents.clone(),
        }
    }
}

impl fmt::Display for ScalarSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.coeff.is_one() || self.exponents.is_empty() {
            parts.push(self.coeff.to_string());
        }
        for (k, v) in &self.exponents {
            if *v == 1 {
                parts.push(k.clone());
            } else {
                parts.push(format!("{k}^{v}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for ScalarSymbol {
    type Err = LocalRepError;

    /// Grammar: `*`-separated factors, each either a rational (`3`, `-2/5`)
    /// or `ident` or `ident^int`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| LocalRepError::ScalarParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(bad("empty string"));
        }
        let mut out = ScalarSymbol::one();
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(bad("empty factor"));
            }
            let starts_numeric = factor
                .chars()
                .next()
                .map(|c| c.is_ascii_digit() || c == '-' || c == '+')
                .unwrap_or(false);
            if starts_numeric {
                let r = BigRational::from_str(factor)
                    .map_err(|e| bad(&format!("bad rational {factor:?}: {e}")))?;
                out = out.mul(&ScalarSymbol::rational(r));
            } else {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let exp: i64 = e
                            .parse()
                            .map_err(|_| bad(&format!("bad exponent in {factor:?}")))?;
                        (n, exp)
                    }
                    None => (factor, 1),
                };
                if !name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_')
                    || name.is_empty()
                {
                    return Err(bad(&format!("bad symbol name {name:?}")));
                }
                let mut exponents = BTreeMap::new();
                if exp != 0 {
                    exponents.insert(name.to_string(), exp);
                }
                out = out.mul(&ScalarSymbol {
                    coeff: BigRational::one(),
                    exponents,
                });
            }
        }
        Ok(out)
    }
}

impl Serialize for ScalarSymbol {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ScalarSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        ScalarSymbol::from_str(&s).map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A ramified paramodular-spherical representation, pinned down by its type
/// tag and the two unramified character values at p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamodularLocalRep {
    pub rep_type: LocalRepType,
    pub chi_at_p: ScalarSymbol,
    pub sigma_at_p: ScalarSymbol,
    pub prime_p: u64,
}

impl ParamodularLocalRep {
    pub fn new(
        rep_type: LocalRepType,
        chi_at_p: ScalarSymbol,
        sigma_at_p: ScalarSymbol,
        prime_p: u64,
    ) -> Result<Self, LocalRepError> {
        if !is_prime(prime_p) {
            return Err(LocalRepError::NotPrime(prime_p));
        }
        if chi_at_p.is_zero() || sigma_at_p.is_zero() {
            return Err(LocalRepError::ZeroCharacterValue);
        }
        Ok(ParamodularLocalRep {
            rep_type,
            chi_at_p,
            sigma_at_p,
            prime_p,
        })
    }

    /// Type IIa with trivial characters.
    pub fn iia_trivial(prime_p: u64) -> Result<Self, LocalRepError> {
        Self::new(
            LocalRepType::IIa,
            ScalarSymbol::one(),
            ScalarSymbol::one(),
            prime_p,
        )
    }

    /// Validity flag for the type-IIa inducing data: chi^2 must not be the
    /// normalised absolute value or its inverse, and chi must not be a
    /// (half-odd) power of it. With concrete rational character values the
    /// excluded cases require chi(p)^2 = p^(+-1), which is checked exactly;
    /// formal symbols are treated as being in general position.
    pub fn iia_constraints_ok(&self) -> bool {
        let Some(value) = self.chi_at_p.rational_value() else {
            return true;
        };
        let p = BigRational::from_integer(BigInt::from(self.prime_p));
        let sq = value * value;
        sq != p && sq != p.recip()
    }

    /// The central character value at p, chi(p)^2 sigma(p)^2, which equals
    /// the similitude character of the associated Weil-Deligne
    /// representation.
    pub fn central_character(&self) -> ScalarSymbol {
        self.chi_at_p.square().mul(&self.sigma_at_p.square())
    }
}

/// Atkin-Lehner data on the one-dimensional paramodular-fixed line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtkinLehnerEigenvalue {
    /// The scalar (chi sigma)(p).
    pub eigenvalue: ScalarSymbol,
    /// dim of the paramodular-fixed subspace, always 1 for type IIa.
    pub fixed_space_dim: usize,
}

/// The Atkin-Lehner involution acts on the paramodular-fixed line of a type
/// IIa representation by (chi sigma)(p).
pub fn atkin_lehner_eigenvalue(
    rep: &ParamodularLocalRep,
) -> Result<AtkinLehnerEigenvalue, LocalRepError> {
    if rep.rep_type != LocalRepType::IIa {
        return Err(LocalRepError::NotTypeIIa(rep.rep_type));
    }
    Ok(AtkinLehnerEigenvalue {
        eigenvalue: rep.chi_at_p.mul(&rep.sigma_at_p),
        fixed_space_dim: 1,
    })
}

/// Frobenius acts on the image of the vanishing-cycle map attached to a
/// type IIa representation by p times the Atkin-Lehner eigenvalue.
pub fn frobenius_on_vanishing_cycles(
    rep: &ParamodularLocalRep,
) -> Result<ScalarSymbol, LocalRepError> {
    let al = atkin_lehner_eigenvalue(rep)?;
    Ok(al.eigenvalue.scale_int(rep.prime_p))
}

/// The Weil-Deligne representation of a type IIa representation: diagonal
/// Frobenius with symbols (chi^2 sigma, chi sigma, chi sigma, sigma) at
/// weights (0, -1, +1, 0), and monodromy sending the weight +1 line to the
/// weight -1 line.
pub fn wd_of_iia(rep: &ParamodularLocalRep) -> Result<WeilDeligneRep, LocalRepError> {
    if rep.rep_type != LocalRepType::IIa {
        return Err(LocalRepError::NotTypeIIa(rep.rep_type));
    }
    let chi = Monomial::generator("chi");
    let sigma = Monomial::generator("sigma");
    let chi_sigma = chi.mul(&sigma);
    let frobenius = vec![
        EigenvalueSymbol::new(chi.pow(2).mul(&sigma), 0),
        EigenvalueSymbol::new(chi_sigma.clone(), -1),
        EigenvalueSymbol::new(chi_sigma, 1),
        EigenvalueSymbol::new(sigma, 0),
    ];
    let mut n = IntMatrix::zero(4, 4);
    n.set(1, 2, 1.into());
    let basis = vec!["e1".into(), "e2".into(), "e3".into(), "e4".into()];
    Ok(WeilDeligneRep::new(basis, frobenius, n, 0).expect("the IIa matrix is well formed"))
}

/// The similitude character of the IIa Weil-Deligne representation as a
/// formal monomial, chi^2 sigma^2.
pub fn iia_similitude_monomial() -> Monomial {
    Monomial::generator("chi")
        .pow(2)
        .mul(&Monomial::generator("sigma").pow(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genericity_table() {
        assert!(LocalRepType::IIa.is_generic());
        assert!(!LocalRepType::Vb.is_generic());
        assert!(!LocalRepType::VIc.is_generic());
        assert_eq!(
            LocalRepType::ALL.iter().filter(|t| t.is_generic()).count(),
            1
        );
    }

    #[test]
    fn genericity_matches_pure_realization() {
        // a tag is generic iff it has an implemented pure WD realization
        for entry in catalog() {
            let has_pure_realization = if entry.has_wd_realization {
                let rep = ParamodularLocalRep::iia_trivial(3).unwrap();
                wd_of_iia(&rep).unwrap().is_pure().unwrap().pure
            } else {
                false
            };
            assert_eq!(entry.generic, has_pure_realization, "tag {}", entry.tag);
            assert_eq!(entry.expected_pure, entry.generic);
        }
    }

    #[test]
    fn iia_wd_shape() {
        let rep = ParamodularLocalRep::iia_trivial(3).unwrap();
        let wd = wd_of_iia(&rep).unwrap();
        assert_eq!(wd.dimension(), 4);
        let weights: Vec<i64> = wd.frobenius().iter().map(|s| s.weight).collect();
        assert_eq!(weights, vec![0, -1, 1, 0]);
        assert_eq!(wd.n_rank(), 1);
        assert!(wd.is_pure().unwrap().pure);
    }

    #[test]
    fn wd_of_other_types_rejected() {
        let rep = ParamodularLocalRep::new(
            LocalRepType::Vb,
            ScalarSymbol::one(),
            ScalarSymbol::one(),
            5,
        )
        .unwrap();
        assert!(matches!(
            wd_of_iia(&rep),
            Err(LocalRepError::NotTypeIIa(LocalRepType::Vb))
        ));
        assert!(atkin_lehner_eigenvalue(&rep).is_err());
    }

    #[test]
    fn atkin_lehner_trivial_characters() {
        let rep = ParamodularLocalRep::iia_trivial(3).unwrap();
        let al = atkin_lehner_eigenvalue(&rep).unwrap();
        assert_eq!(al.eigenvalue, ScalarSymbol::one());
        assert_eq!(al.fixed_space_dim, 1);
    }

    #[test]
    fn atkin_lehner_symbolic() {
        let rep = ParamodularLocalRep::new(
            LocalRepType::IIa,
            ScalarSymbol::symbol("a"),
            ScalarSymbol::symbol("b"),
            2,
        )
        .unwrap();
        let al = atkin_lehner_eigenvalue(&rep).unwrap();
        assert_eq!(al.eigenvalue.to_string(), "a*b");
        // square equals the central character value at p
        assert_eq!(al.eigenvalue.square(), rep.central_character());
    }

    #[test]
    fn frobenius_scalar_is_p_times_al() {
        let rep = ParamodularLocalRep::iia_trivial(3).unwrap();
        assert_eq!(
            frobenius_on_vanishing_cycles(&rep).unwrap(),
            ScalarSymbol::integer(3)
        );
        let sym = ParamodularLocalRep::new(
            LocalRepType::IIa,
            ScalarSymbol::symbol("a"),
            ScalarSymbol::symbol("b"),
            2,
        )
        .unwrap();
        let frob = frobenius_on_vanishing_cycles(&sym).unwrap();
        assert_eq!(frob.to_string(), "2*a*b");
        // dividing p back out recovers the Atkin-Lehner eigenvalue
        let al = atkin_lehner_eigenvalue(&sym).unwrap().eigenvalue;
        assert_eq!(al.scale_int(2), frob);
    }

    #[test]
    fn rejects_non_prime() {
        assert!(matches!(
            ParamodularLocalRep::iia_trivial(6),
            Err(LocalRepError::NotPrime(6))
        ));
    }

    #[test]
    fn scalar_symbol_parsing() {
        let parsed: ScalarSymbol = "2/3*a*b^2".parse().unwrap();
        assert_eq!(parsed.to_string(), "2/3*a*b^2");
        let one: ScalarSymbol = "1".parse().unwrap();
        assert_eq!(one, ScalarSymbol::one());
        let neg: ScalarSymbol = "-5".parse().unwrap();
        assert_eq!(neg, ScalarSymbol::integer(-5));
        assert!("".parse::<ScalarSymbol>().is_err());
        assert!("a^x".parse::<ScalarSymbol>().is_err());
    }

    #[test]
    fn iia_constraint_flag() {
        let rep = ParamodularLocalRep::iia_trivial(5).unwrap();
        assert!(rep.iia_constraints_ok());
        let sym = ParamodularLocalRep::new(
            LocalRepType::IIa,
            ScalarSymbol::symbol("a"),
            ScalarSymbol::one(),
            5,
        )
        .unwrap();
        assert!(sym.iia_constraints_ok());
    }

    #[test]
    fn similitude_is_square_of_al_unitary_part() {
        let sim = iia_similitude_monomial();
        let al_part = Monomial::generator("chi").mul(&Monomial::generator("sigma"));
        assert_eq!(sim, al_part.pow(2));
    }

    #[test]
    fn catalog_json_shape() {
        let json = serde_json::to_string(&catalog()).unwrap();
        assert!(json.contains("\"tag\":\"IIa\""));
        assert!(json.contains("\"generic\":true"));
        let back: Vec<CatalogEntry> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, catalog());
    }
}
