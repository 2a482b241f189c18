//! Arithmetic inputs to the `SO_{2n+1}` counting problems: Kottwitz signs and
//! the existence of Gross inner forms, orders of finite symplectic and odd
//! orthogonal groups, prime-counting bounds for ideals, and the exponent
//! ledger comparing proven cohomology bounds with rate predictions.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arthur::{gsk_deficiencies, shape_catalog_so5, Levi, Rate, RateValue, ShapeName};
use crate::error::{Error, Result};
use crate::lie::{build_root_datum, positive_roots, qi, Family, Rational};

/// Real signatures `(2 a_v + 1, 2n - 2 a_v)` of an `SO_{2n+1}`, one per
/// infinite place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    pub n: u32,
    pub a_list: Vec<u32>,
}

impl SignatureProfile {
    pub fn new(n: u32, a_list: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some(a) = a_list.iter().find(|&&a| a > n) {
            return Err(Error::InvalidArgument(format!("a = {a} outside [0, {n}]")));
        }
        Ok(Self { n, a_list })
    }
}

/// `(-1)^{n(n-1)/2 - a}` for `SO(2a + 1, 2n - 2a)`.
pub fn kottwitz_sign(n: u32, a: u32) -> Result<i8> {
    if a > n {
        return Err(Error::InvalidArgument(format!("a = {a} outside [0, {n}]")));
    }
    let e = (n as i64) * (n as i64 - 1) / 2 - a as i64;
    Ok(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// A Gross inner form exists iff `sum_v (n(n-1)/2 + a_v)` is even; the
/// product of Kottwitz signs is computed alongside and must agree.
pub fn gross_form_exists(profile: &SignatureProfile) -> Result<bool> {
    let n = profile.n as u64;
    let parity: u64 = profile.a_list.iter().map(|&a| n * (n - 1) / 2 + a as u64).sum::<u64>() % 2;
    let product: i8 = profile
        .a_list
        .iter()
        .map(|&a| kottwitz_sign(profile.n, a))
        .product::<Result<i8>>()?;
    let exists = parity == 0;
    if exists != (product == 1) {
        return Err(Error::Invariant(format!("parity and Kottwitz product disagree for {profile:?}")));
    }
    Ok(exists)
}

/// Split classical groups whose finite orders coincide by isogeny.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassicalFamily {
    /// `Sp_{2r}`.
    Sp,
    /// `SO_{2r+1}`.
    SoOdd,
}

impl std::str::FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sp" => Ok(Self::Sp),
            "so" | "so_odd" | "soodd" => Ok(Self::SoOdd),
            _ => Err(Error::InvalidArgument(format!("unknown group family {s:?}"))),
        }
    }
}

/// `dim Sp_{2r} = dim SO_{2r+1} = r (2r + 1)`.
pub fn dim_group(_family: ClassicalFamily, rank: u32) -> u64 {
    let r = rank as u64;
    r * (2 * r + 1)
}

/// `dim SO_m = m (m - 1) / 2`.
pub fn dim_so(m: u32) -> u64 {
    let m = m as u64;
    m * m.saturating_sub(1) / 2
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

/// `|G(Z / p^m)| = p^{(m-1) dim G} p^{r^2} prod_{i=1..r} (p^{2i} - 1)`.
pub fn group_order(family: ClassicalFamily, rank: u32, p: u64, level: u32) -> Result<BigUint> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if level == 0 {
        return Err(Error::InvalidArgument("level must be at least 1".into()));
    }
    let pb = BigUint::from(p);
    let mut order = pb.pow(rank * rank);
    for i in 1..=rank {
        order *= pb.pow(2 * i) - BigUint::one();
    }
    let lift = (level as u64 - 1) * dim_group(family, rank);
    Ok(order * pb.pow(lift as u32))
}

/// `omega(q)`, `|q|`, and the smallest prime not dividing `q`, for an ideal
/// of `Z` given by its factorisation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OmegaReport {
    pub omega: u32,
    pub norm: u128,
    pub smallest_coprime_prime: u64,
    /// `omega log log |q| / log |q|`, defined for `|q| >= 3`.
    pub omega_ratio: Option<f64>,
    /// `p / log |q|`, defined for `|q| >= 2`.
    pub coprime_ratio: Option<f64>,
}

impl OmegaReport {
    /// `omega(q) <= c log|q| / log log|q|`.
    pub fn omega_bound_holds(&self, c: f64) -> Option<bool> {
        self.omega_ratio.map(|r| r <= c)
    }

    /// `smallest coprime prime <= d log|q|`.
    pub fn coprime_bound_holds(&self, d: f64) -> Option<bool> {
        self.coprime_ratio.map(|r| r <= d)
    }
}

fn ratios(omega: u32, norm: f64, p: u64) -> (Option<f64>, Option<f64>) {
    let log = norm.ln();
    let omega_ratio = (norm >= 3.0).then(|| omega as f64 * log.ln() / log);
    let coprime_ratio = (norm >= 2.0).then(|| p as f64 / log);
    (omega_ratio, coprime_ratio)
}

pub fn omega_and_bounds(factors: &[(u64, u32)]) -> Result<OmegaReport> {
    let mut primes: Vec<u64> = Vec::with_capacity(factors.len());
    let mut norm: u128 = 1;
    for &(p, e) in factors {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if primes.contains(&p) {
            return Err(Error::InvalidArgument(format!("prime {p} repeated")));
        }
        if e == 0 {
            return Err(Error::InvalidArgument(format!("exponent of {p} must be positive")));
        }
        primes.push(p);
        norm = (0..e)
            .try_fold(norm, |acc, _| acc.checked_mul(p as u128))
            .ok_or_else(|| Error::LimitExceeded("ideal norm overflows u128".into()))?;
    }
    let smallest = (2..).find(|&p| is_prime(p) && !primes.contains(&p)).unwrap_or(2);
    let (omega_ratio, coprime_ratio) = ratios(primes.len() as u32, norm as f64, smallest);
    Ok(OmegaReport { omega: primes.len() as u32, norm, smallest_coprime_prime: smallest, omega_ratio, coprime_ratio })
}

/// Worst constants over all square-free `q <= limit`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OmegaScan {
    pub limit: u64,
    pub square_free: u64,
    /// `max omega log log q / log q` over `q >= 3`.
    pub c_fitted: f64,
    pub c_worst_q: u64,
    /// `max p_min(q) / log q` over `q >= 2`.
    pub d_fitted: f64,
    pub d_worst_q: u64,
    /// Largest `q` violating the bound with `d = 2`, if any.
    pub d2_last_failure: Option<u64>,
    /// Largest `q` violating the bound with `c = 2`, if any.
    pub c2_last_failure: Option<u64>,
}

/// Exhaustive scan of square-free integers using a smallest-prime-factor sieve.
pub fn omega_scan(limit: u64) -> Result<OmegaScan> {
    if limit < 3 {
        return Err(Error::InvalidArgument("scan limit must be at least 3".into()));
    }
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            for j in (i..=n).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    let small_primes: Vec<u64> = (2..200).filter(|&p| is_prime(p)).collect();
    let mut scan = OmegaScan {
        limit,
        square_free: 0,
        c_fitted: 0.0,
        c_worst_q: 0,
        d_fitted: 0.0,
        d_worst_q: 0,
        d2_last_failure: None,
        c2_last_failure: None,
    };
    for q in 2..=n {
        let (mut m, mut omega, mut square_free) = (q, 0u32, true);
        while m > 1 {
            let p = spf[m] as usize;
            m /= p;
            if m % p == 0 {
                square_free = false;
                break;
            }
            omega += 1;
        }
        if !square_free {
            continue;
        }
        scan.square_free += 1;
        let q64 = q as u64;
        let p_min = *small_primes.iter().find(|&&p| !q64.is_multiple_of(p)).expect("q is below the primorial of 200");
        let (omega_ratio, coprime_ratio) = ratios(omega, q as f64, p_min);
        if let Some(r) = omega_ratio {
            if r > scan.c_fitted {
                scan.c_fitted = r;
                scan.c_worst_q = q64;
            }
            if r > 2.0 {
                scan.c2_last_failure = Some(q64);
            }
        }
        if let Some(r) = coprime_ratio {
            if r > scan.d_fitted {
                scan.d_fitted = r;
                scan.d_worst_q = q64;
            }
            if r > 2.0 {
                scan.d2_last_failure = Some(q64);
            }
        }
    }
    Ok(scan)
}

/// Parabolic subgroups of `SO_5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parabolic {
    Borel,
    Klingen,
    Siegel,
}

impl Parabolic {
    pub const ALL: [Parabolic; 3] = [Parabolic::Borel, Parabolic::Klingen, Parabolic::Siegel];

    fn levi(self) -> Levi {
        match self {
            Parabolic::Borel => Levi::T,
            Parabolic::Klingen => Levi::M,
            Parabolic::Siegel => Levi::S,
        }
    }
}

/// `p_v`-exponent of the growth of induced contributions:
/// `(dim G - dim M) / 2` plus the exponent `|Phi^+(M)|` of the Levi.
pub fn induction_growth_exponent(parabolic: Parabolic) -> i64 {
    let levi_positive_roots: i64 = match parabolic.levi() {
        Levi::T => 0,
        Levi::M | Levi::S => 1,
        Levi::G => positive_roots(Family::B, 2).len() as i64,
    };
    let rank = 2;
    let dim_m = rank + 2 * levi_positive_roots;
    let dim_g = dim_group(ClassicalFamily::SoOdd, 2) as i64;
    (dim_g - dim_m) / 2 + levi_positive_roots
}

/// Proven `|q|`-exponent against the rate prediction `dim G * 2 / r`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LedgerRow {
    pub shape: ShapeName,
    pub rate: RateValue,
    pub bound_exponent: i64,
    pub dim_g: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub target_exponent: Rational,
    pub verdict: bool,
    pub tight: bool,
}

pub(crate) fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// Proven exponent of each `SO_5` shape: the full `dim G` for the shapes
/// bounded by the volume, none for the one-dimensional shape, and the GSK
/// deficiency for the Saito-Kurokawa type.
fn bound_exponent(shape: ShapeName) -> Result<i64> {
    let dim_g = dim_group(ClassicalFamily::SoOdd, 2) as i64;
    Ok(match shape {
        ShapeName::G | ShapeName::Y => dim_g,
        ShapeName::F => 0,
        ShapeName::B => 4,
        ShapeName::Q => 5,
        ShapeName::P => gsk_deficiencies(1, 2)?.1,
        ShapeName::Generic => return Err(Error::InvalidShape("no proven exponent for a generic shape".into())),
    })
}

/// One row per `SO_5` shape, with target `dim G * 2 / r` (0 at `r = inf`).
pub fn sxdh_ledger() -> Result<Vec<LedgerRow>> {
    let rd = build_root_datum(Family::B, 2)?;
    let dim_g = dim_group(ClassicalFamily::SoOdd, rd.rank as u32);
    shape_catalog_so5()
        .into_iter()
        .map(|row| {
            let e = bound_exponent(row.shape.name)?;
            let target = match &row.rate {
                Rate::Finite(r) => qi(dim_g as i64) * qi(2) / r,
                Rate::Infinite => Rational::zero(),
            };
            let verdict = qi(e) <= target;
            Ok(LedgerRow {
                shape: row.shape.name,
                rate: row.rate,
                bound_exponent: e,
                dim_g,
                tight: qi(e) == target,
                target_exponent: target,
                verdict,
            })
        })
        .collect()
}
