//! Essential-dimension growth of quiver representations.
//!
//! For a connected quiver the function `r_Q(n)` (the largest essential
//! dimension of a representation of total dimension at most `n`) is
//!
//! * `0` for finite type,
//! * `⌊n / Σδ_i⌋` for tame type with null root `δ`,
//! * `Λ_Q·n² + O(n)` for wild type.
//!
//! Only the leading term is known in the wild case, so this module returns
//! rigorous bounds there and never an exact value.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::classify::{self, RepType};
use crate::error::{Error, Result};
use crate::forms::{check_len, euler_form, tits_q, DimVector};
use crate::lambda::{self, SchurRoot};
use crate::quiver::Quiver;
use crate::rational::{self, Rational};

/// Leading term of `r_Q(n)`: `coefficient · n^order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Asymptotic {
    pub order: u32,
    #[serde(with = "rational::as_string")]
    pub coefficient: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub n: u64,
    pub rep_type: RepType,
    /// `r_Q(n)` when it is known exactly.
    pub exact_value: Option<u64>,
    #[serde(with = "rational::as_string")]
    pub lower_bound: Rational,
    #[serde(with = "rational::as_string")]
    pub upper_bound: Rational,
    pub asymptotic: Asymptotic,
}

/// Exact value for connected finite and tame quivers, bounds for wild ones.
pub fn growth(q: &Quiver, n: u64) -> Result<GrowthReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let asymptotic = asymptotic_coefficients(q)?;
    if classify::is_wild(q) {
        let bounds = r_bounds_wild(q, n)?;
        return Ok(GrowthReport {
            n,
            rep_type: RepType::Wild,
            exact_value: None,
            lower_bound: bounds.lower,
            upper_bound: bounds.upper,
            asymptotic,
        });
    }
    let value = r_exact(q, n)?;
    let exact = rational::int(value as i64);
    Ok(GrowthReport {
        n,
        rep_type: classify::connected_rep_type(q)?,
        exact_value: Some(value),
        lower_bound: exact.clone(),
        upper_bound: exact,
        asymptotic,
    })
}

fn nonnegative_integral(q: &Quiver, alpha: &DimVector) -> Result<Vec<u64>> {
    check_len(q.vertex_count(), alpha)?;
    alpha.to_counts()
}

/// The null root of a connected non-wild quiver, or `None` for finite type.
fn tame_null_root(q: &Quiver) -> Result<Option<Vec<u64>>> {
    match classify::connected_rep_type(q)? {
        RepType::Finite => Ok(None),
        RepType::Tame => Ok(Some(classify::null_root(q)?.to_counts()?)),
        RepType::Wild => Err(Error::Wild("exact value unknown, use bounds")),
    }
}

/// Essential dimension of `Rep_{Q,α}`: 0 for finite type, and for tame type
/// the largest `m` with `m·δ ≤ α`.
pub fn ed_rep(q: &Quiver, alpha: &DimVector) -> Result<u64> {
    let alpha = nonnegative_integral(q, alpha)?;
    let Some(delta) = tame_null_root(q)? else {
        return Ok(0);
    };
    Ok(alpha.iter().zip(&delta).map(|(a, d)| a / d).min().unwrap_or(0))
}

/// `r_Q(n)` for a connected finite or tame quiver.
pub fn r_exact(q: &Quiver, n: u64) -> Result<u64> {
    match tame_null_root(q)? {
        None => Ok(0),
        Some(delta) => Ok(n / delta.iter().sum::<u64>()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WildBounds {
    #[serde(with = "rational::as_string")]
    pub lower: Rational,
    #[serde(with = "rational::as_string")]
    pub upper: Rational,
    #[serde(with = "rational::as_string")]
    pub lambda: Rational,
    /// Least `m` with `m·α` integral for the witness critical point.
    pub multiple: u64,
}

/// Bounds on `r_Q(n)` for wild `q`.
///
/// The lower bound comes from the Schur root `m·h·α` of the witness
/// subquiver, `h = ⌊n/m⌋`: `1 + Λ·(mh)²`. The upper bound is `Λn² + 2n − 1`.
pub fn r_bounds_wild(q: &Quiver, n: u64) -> Result<WildBounds> {
    let report = lambda::lambda_max(q)?;
    let m = report
        .witness_point
        .minimal_multiple()
        .to_u64()
        .ok_or_else(|| Error::Internal("denominator overflow".into()))?;
    let lambda = report.lambda_max;
    let h = n / m;
    let lower = if h >= 1 {
        let reached = rational::int((m * h) as i64);
        let value = Rational::one() + &lambda * &reached * &reached;
        if value.is_negative() {
            Rational::zero()
        } else {
            value
        }
    } else {
        Rational::zero()
    };
    let nn = rational::int(n as i64);
    let upper = &lambda * &nn * &nn + rational::int(2) * &nn - Rational::one();
    Ok(WildBounds { lower, upper, lambda, multiple: m })
}

/// `(0, 0)` for finite, `(1, 1/Σδ)` for tame, `(2, Λ_Q)` for wild.
/// Orders 0 and 1 need a connected quiver.
pub fn asymptotic_coefficients(q: &Quiver) -> Result<Asymptotic> {
    if classify::is_wild(q) {
        return Ok(Asymptotic { order: 2, coefficient: lambda::lambda_max(q)?.lambda_max });
    }
    Ok(match tame_null_root(q)? {
        None => Asymptotic { order: 0, coefficient: Rational::zero() },
        Some(delta) => Asymptotic {
            order: 1,
            coefficient: Rational::new(BigInt::one(), BigInt::from(delta.iter().sum::<u64>())),
        },
    })
}

/// `|α| + Λ_Q·|α|²`, an upper bound for the transcendence degree of the
/// field of definition of a representation of dimension `α`.
pub fn trdeg_bound(q: &Quiver, alpha: &DimVector) -> Result<Rational> {
    if !classify::is_wild(q) {
        return Err(Error::NotWild);
    }
    nonnegative_integral(q, alpha)?;
    let lambda = lambda::lambda_max(q)?.lambda_max;
    let total = alpha.total();
    Ok(&total + lambda * &total * &total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationBounds {
    #[serde(with = "rational::as_string")]
    pub nil_dim: Rational,
    #[serde(with = "rational::as_string")]
    pub indec_trdeg_bound: Rational,
}

/// For the graded pieces `β_1, …, β_n` of a filtration: the local dimension
/// `−Σ⟨β_h,β_h⟩` of the nilpotent stack and the resulting bound
/// `1 − Σ⟨β_h,β_h⟩` for indecomposables.
pub fn filtration_bounds(q: &Quiver, betas: &[DimVector]) -> Result<FiltrationBounds> {
    if betas.is_empty() {
        return Err(Error::InvalidArgument("at least one dimension vector is required".into()));
    }
    let mut nil_dim = Rational::zero();
    for beta in betas {
        nil_dim -= euler_form(q, beta, beta)?;
    }
    let indec_trdeg_bound = Rational::one() + &nil_dim;
    Ok(FiltrationBounds { nil_dim, indec_trdeg_bound })
}

/// Why a vector is taken to be a Schur root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchurEvidence {
    Certified(SchurRoot),
    /// The caller vouches for it; nothing is checked.
    Asserted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurLowerBound {
    #[serde(with = "rational::as_string")]
    pub bound: Rational,
    /// `"certified"` or `"asserted"`.
    pub evidence: &'static str,
}

/// `1 − q(α)`, a lower bound on the essential dimension of a general
/// representation of the Schur root `α`.
pub fn ed_lower_schur(q: &Quiver, alpha: &DimVector, evidence: &SchurEvidence) -> Result<SchurLowerBound> {
    check_len(q.vertex_count(), alpha)?;
    let label = match evidence {
        SchurEvidence::Certified(root) => {
            if &root.vector != alpha {
                return Err(Error::InvalidArgument(format!(
                    "certificate is for {} but the vector is {alpha}",
                    root.vector
                )));
            }
            "certified"
        }
        SchurEvidence::Asserted => "asserted",
    };
    Ok(SchurLowerBound { bound: Rational::one() - tits_q(q, alpha)?, evidence: label })
}
