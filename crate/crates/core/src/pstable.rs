//! Exponent sets `I ⊆ {2, 3, ...}`, p-stability, the triangular groups
//! `B^I`, and the containment order on the affine-type groups `A^I`.

use std::collections::BTreeSet;
use std::fmt;

use crate::automorphism::{Auto, TriangularParts};
use crate::coefficients::Ring;
use crate::error::{Error, Result};

/// Default horizon for checks on infinite sets that have no closed form.
pub const DEFAULT_BOUND: u64 = 200;

/// A symbolic subset of `{2, 3, ...}`; `p` is supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PStableSet {
    Finite(BTreeSet<u64>),
    /// `{2, ..., k}`.
    RangeTo(u64),
    /// `{p^j : j >= 1}`.
    PPowers,
    /// `{p, 2p, 3p, ...}`.
    PMultiples,
    AllGe2,
    Empty,
    /// `p^n {1, ..., k}`.
    ScaledRange(u32, u64),
    /// `p^n {1, 2, ...}`.
    ScaledAll(u32),
    /// `{p^n, p^(n+1)}`.
    PPowerPair(u32),
    Union(Vec<PStableSet>),
    Intersection(Vec<PStableSet>),
}

/// Why a set is (or is not) p-stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Condition (iv) checked exhaustively over a finite set.
    ConditionIv,
    /// `n ∈ I`, `C(n,k) ≠ 0 mod p`, `k ∉ I`.
    Counterexample { n: u64, k: u64 },
    /// `{2,...,k}`, `∅` and `ℕ≥2` are downward closed above 2.
    DownwardClosed,
    /// `(y+1)^(p^n k) = (y^(p^n)+1)^k`.
    FrobeniusScaling,
    /// `(y+1)^(p^n+1) = y^(p^n+1) + y^(p^n) + y + 1`.
    PowerPair,
    /// `p^j` has binomial support `{0, p^j}`.
    PPowers,
    /// Multiples of `p`: `(y+1)^(pm) = (y^p+1)^m`.
    PMultiples,
    /// Unions and intersections of p-stable sets.
    Closure,
    /// Condition (iv) checked only for `n <= bound`.
    Bounded { bound: u64 },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::ConditionIv => write!(f, "condition (iv) checked on every element"),
            Certificate::Counterexample { n, k } => {
                write!(f, "C({n},{k}) is nonzero mod p but {k} is missing")
            }
            Certificate::DownwardClosed => write!(f, "downward closed above 2"),
            Certificate::FrobeniusScaling => write!(f, "(y+1)^(p^n k) = (y^(p^n)+1)^k"),
            Certificate::PowerPair => write!(f, "(y+1)^(p^n+1) = y^(p^n+1)+y^(p^n)+y+1"),
            Certificate::PPowers => write!(f, "(y+1)^(p^j) = y^(p^j)+1"),
            Certificate::PMultiples => write!(f, "(y+1)^(pm) = (y^p+1)^m"),
            Certificate::Closure => write!(f, "union/intersection of p-stable sets"),
            Certificate::Bounded { bound } => write!(f, "condition (iv) checked for n <= {bound}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stability {
    pub stable: bool,
    pub certificate: Certificate,
}

impl Stability {
    /// True when the verdict holds for the whole set, not just up to a bound.
    pub fn is_exact(&self) -> bool {
        !matches!(self.certificate, Certificate::Bounded { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// `exact = false` means no counterexample up to the reported bound.
    Subset { exact: bool, bound: Option<u64> },
    /// The smallest `n ∈ I \ J`.
    NotSubset(u64),
}

/// `C(n, k) mod p` by Lucas' theorem. For `p = 0` returns `1` when the
/// integer binomial is nonzero, `0` otherwise.
pub fn binom_mod_p(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    if p == 0 {
        return 1;
    }
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binom_mod(ni, ki, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    // n < p, so n!/(k!(n-k)!) has no factor p; compute with inverses.
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Support of `(y+1)^n` over `F_p`.
pub fn expand_binomial_support(n: u64, p: u64) -> BTreeSet<u64> {
    (0..=n).filter(|&k| binom_mod_p(n, k, p) != 0).collect()
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

impl PStableSet {
    pub fn finite(items: impl IntoIterator<Item = u64>) -> Self {
        PStableSet::Finite(items.into_iter().collect())
    }

    pub fn contains(&self, n: u64, p: u64) -> bool {
        if n < 2 {
            return false;
        }
        match self {
            PStableSet::Finite(s) => s.contains(&n),
            PStableSet::RangeTo(k) => n <= *k,
            PStableSet::PPowers => p >= 2 && crate::bipoly::is_power_of(n, p),
            PStableSet::PMultiples => p >= 2 && n.is_multiple_of(p),
            PStableSet::AllGe2 => true,
            PStableSet::Empty => false,
            PStableSet::ScaledRange(m, k) => match checked_pow(p, *m) {
                Some(q) if q > 0 => n.is_multiple_of(q) && n / q >= 1 && n / q <= *k,
                _ => false,
            },
            PStableSet::ScaledAll(m) => match checked_pow(p, *m) {
                Some(q) if q > 0 => n.is_multiple_of(q),
                _ => false,
            },
            PStableSet::PPowerPair(m) => {
                let a = checked_pow(p, *m);
                let b = checked_pow(p, m + 1);
                Some(n) == a || Some(n) == b
            }
            PStableSet::Union(parts) => parts.iter().any(|s| s.contains(n, p)),
            PStableSet::Intersection(parts) => parts.iter().all(|s| s.contains(n, p)),
        }
    }

    /// Largest element if the set is finite (`Some(None)` when empty),
    /// `None` if it is infinite.
    pub fn max_element(&self, p: u64) -> Option<Option<u64>> {
        match self {
            PStableSet::Finite(s) => Some(s.iter().next_back().copied()),
            PStableSet::RangeTo(k) => Some((*k >= 2).then_some(*k)),
            PStableSet::Empty => Some(None),
            PStableSet::PPowerPair(m) => {
                let top = checked_pow(p, m + 1)?;
                Some([checked_pow(p, *m), Some(top)].into_iter().flatten().filter(|&n| n >= 2).max())
            }
            PStableSet::ScaledRange(m, k) => {
                let q = checked_pow(p, *m)?;
                if q == 0 {
                    return Some(None);
                }
                let top = q.checked_mul(*k)?;
                Some((top >= 2).then_some(top))
            }
            PStableSet::PPowers | PStableSet::PMultiples | PStableSet::ScaledAll(_) if p == 0 => {
                Some(None)
            }
            PStableSet::PPowers | PStableSet::PMultiples | PStableSet::ScaledAll(_) | PStableSet::AllGe2 => {
                None
            }
            PStableSet::Union(parts) => {
                let mut best = None;
                for s in parts {
                    best = best.max(s.max_element(p)?);
                }
                Some(best)
            }
            PStableSet::Intersection(parts) => {
                let finite: Vec<_> = parts.iter().filter_map(|s| s.max_element(p)).collect();
                if finite.is_empty() && !parts.is_empty() {
                    return None;
                }
                Some(finite.into_iter().min().flatten())
            }
        }
    }

    /// Elements up to `bound`, ascending.
    pub fn elements_up_to(&self, p: u64, bound: u64) -> Vec<u64> {
        (2..=bound).filter(|&n| self.contains(n, p)).collect()
    }

    fn uses_p(&self) -> bool {
        match self {
            PStableSet::PPowers
            | PStableSet::PMultiples
            | PStableSet::ScaledRange(..)
            | PStableSet::ScaledAll(_)
            | PStableSet::PPowerPair(_) => true,
            PStableSet::Union(parts) | PStableSet::Intersection(parts) => parts.iter().any(|s| s.uses_p()),
            _ => false,
        }
    }

    /// Rejects families that only make sense in positive characteristic.
    pub fn validate(&self, p: u64) -> Result<()> {
        if p == 0 && self.uses_p() {
            return Err(Error::UnsupportedInCharacteristic(self.to_string(), 0));
        }
        Ok(())
    }
}

/// First `(n, k)` with `n ∈ I`, `n <= bound`, `2 <= k < n`, `C(n,k) ≠ 0 mod p`
/// and `k ∉ I`.
pub fn condition_iv_counterexample(set: &PStableSet, p: u64, bound: u64) -> Option<(u64, u64)> {
    for n in set.elements_up_to(p, bound) {
        for k in 2..n {
            if binom_mod_p(n, k, p) != 0 && !set.contains(k, p) {
                return Some((n, k));
            }
        }
    }
    None
}

/// Decides p-stability. Finite sets are decided exactly by condition (iv);
/// the named families carry their closed-form certificate; unions and
/// intersections of stable parts are stable. Anything else falls back to
/// condition (iv) up to [`DEFAULT_BOUND`], and the answer says so.
pub fn is_p_stable(set: &PStableSet, p: u64) -> Result<Stability> {
    set.validate(p)?;
    let ok = |certificate| Stability { stable: true, certificate };
    let named = match set {
        PStableSet::Empty | PStableSet::AllGe2 | PStableSet::RangeTo(_) => Some(Certificate::DownwardClosed),
        PStableSet::PPowers => Some(Certificate::PPowers),
        PStableSet::PMultiples => Some(Certificate::PMultiples),
        PStableSet::ScaledRange(..) | PStableSet::ScaledAll(_) => Some(Certificate::FrobeniusScaling),
        PStableSet::PPowerPair(_) => Some(Certificate::PowerPair),
        _ => None,
    };
    if let Some(c) = named {
        return Ok(ok(c));
    }
    if let PStableSet::Union(parts) | PStableSet::Intersection(parts) = set {
        let mut all = true;
        for s in parts {
            all &= is_p_stable(s, p)?.stable;
        }
        if all {
            return Ok(ok(Certificate::Closure));
        }
    }
    let (bound, exact) = match set.max_element(p) {
        Some(max) => (max.unwrap_or(0), true),
        None => (DEFAULT_BOUND, false),
    };
    Ok(match condition_iv_counterexample(set, p, bound) {
        Some((n, k)) => Stability { stable: false, certificate: Certificate::Counterexample { n, k } },
        None if exact => ok(Certificate::ConditionIv),
        None => ok(Certificate::Bounded { bound }),
    })
}

/// Exact containment rules between named families.
fn family_subset(i: &PStableSet, j: &PStableSet, p: u64) -> bool {
    use PStableSet::*;
    if i == j {
        return true;
    }
    match (i, j) {
        (Empty, _) | (_, AllGe2) => true,
        (PPowers, PMultiples) => true,
        (PPowers, ScaledAll(1)) | (PMultiples, ScaledAll(1)) | (ScaledAll(1), PMultiples) => true,
        (ScaledAll(m), ScaledAll(n)) => n <= m,
        (ScaledAll(m), PMultiples) => *m >= 1,
        (ScaledRange(m, _), ScaledAll(n)) => n <= m,
        (ScaledRange(m, _), PMultiples) => *m >= 1 && p >= 2,
        (PPowerPair(m), PPowers) => *m >= 1,
        (PPowerPair(m), PMultiples) => *m >= 1,
        (Union(parts), _) => parts.iter().all(|s| family_subset(s, j, p)),
        (_, Union(parts)) => parts.iter().any(|s| family_subset(i, s, p)),
        (Intersection(parts), _) => parts.iter().any(|s| family_subset(s, j, p)),
        (_, Intersection(parts)) => parts.iter().all(|s| family_subset(i, s, p)),
        _ => false,
    }
}

/// Decides `I ⊆ J`, which is equivalent to `A^I ⊆ A^J`. A counterexample is
/// always exact; a positive answer on infinite `I` without a closed-form rule
/// holds only up to `bound`.
pub fn ai_order(i: &PStableSet, j: &PStableSet, p: u64, bound: u64) -> Result<Order> {
    i.validate(p)?;
    j.validate(p)?;
    if let Some(max) = i.max_element(p) {
        let top = max.unwrap_or(0);
        return Ok(match (2..=top).find(|&n| i.contains(n, p) && !j.contains(n, p)) {
            Some(n) => Order::NotSubset(n),
            None => Order::Subset { exact: true, bound: None },
        });
    }
    if family_subset(i, j, p) {
        return Ok(Order::Subset { exact: true, bound: None });
    }
    Ok(match (2..=bound).find(|&n| i.contains(n, p) && !j.contains(n, p)) {
        Some(n) => Order::NotSubset(n),
        None => Order::Subset { exact: false, bound: Some(bound) },
    })
}

/// Splits a triangular `β = (ux + P(y), vy + w)` as `b · c` (first `b`,
/// then `c`) with `b = (x + S(y), y) ∈ B^I`, `S = P_{>=2}/u`, and
/// `c = (ux + P_1 y + P_0, vy + w)` affine triangular, provided every
/// exponent `>= 2` of `P` lies in `I`. `Ok(None)` when it does not.
pub fn triangular_in_ai<C: Ring>(
    beta: &Auto<C>,
    set: &PStableSet,
    p: u64,
) -> Result<Option<(Auto<C>, Auto<C>)>> {
    let parts = beta.triangular_parts().ok_or(Error::NotTriangular)?;
    let outside = parts
        .p
        .iter()
        .enumerate()
        .skip(2)
        .any(|(k, c)| !c.is_zero() && !set.contains(k as u64, p));
    if outside {
        return Ok(None);
    }
    Ok(Some(split_triangular(&parts)))
}

/// `(x + P_{>=2}/u, y)` and `(ux + P_1 y + P_0, vy + w)`.
pub(crate) fn split_triangular<C: Ring>(parts: &TriangularParts<C>) -> (Auto<C>, Auto<C>) {
    let ctx = parts.u.ctx();
    let ui = parts.u.unit_inverse().expect("triangular u is a unit");
    let zero = C::zero(&ctx);
    let high: Vec<C> = parts
        .p
        .iter()
        .enumerate()
        .map(|(k, c)| if k >= 2 { c.mul(&ui) } else { zero.clone() })
        .collect();
    let b = Auto::x_shear(crate::bipoly::BiPoly::from_y_coeffs(&ctx, high));
    let low = TriangularParts {
        u: parts.u.clone(),
        p: parts.p.iter().take(2).cloned().collect(),
        v: parts.v.clone(),
        w: parts.w.clone(),
    };
    (b, Auto::triangular(&low))
}

impl fmt::Display for PStableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, parts: &[PStableSet], sep: &str| {
            write!(f, "(")?;
            for (i, s) in parts.iter().enumerate() {
                if i > 0 {
                    write!(f, " {sep} ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, ")")
        };
        match self {
            PStableSet::Finite(s) => {
                let items: Vec<String> = s.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            PStableSet::RangeTo(k) => write!(f, "2..{k}"),
            PStableSet::PPowers => write!(f, "ppowers"),
            PStableSet::PMultiples => write!(f, "pmult"),
            PStableSet::AllGe2 => write!(f, "all"),
            PStableSet::Empty => write!(f, "empty"),
            PStableSet::ScaledRange(n, k) => write!(f, "scaled({n},{k})"),
            PStableSet::ScaledAll(n) => write!(f, "scaledall({n})"),
            PStableSet::PPowerPair(n) => write!(f, "ppair({n})"),
            PStableSet::Union(parts) => join(f, parts, "|"),
            PStableSet::Intersection(parts) => join(f, parts, "&"),
        }
    }
}
