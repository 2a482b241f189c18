//! Integrability of unramified matrix coefficients.
//!
//! By Macdonald's formula the spherical function of an unramified
//! representation with exponent `nu` behaves on the dominant coweight `λ`
//! like `p^{<nu - rho, λ>}`, up to constants and lower order Weyl terms.
//! Weighted by the volume `p^{<2 rho, λ>}` of the double coset, the `L^r`
//! norm converges iff `<2 rho + r (nu - rho), λ> < 0` on every dominant `λ`,
//! which it suffices to test on the fundamental coweights.
//!
//! The exact test lives in [`lr_converges`] and [`decay_threshold`]. The
//! floating-point helpers [`macdonald_profile`] and [`lr_partial_sum`] are
//! asymptotic surrogates: the `c`-function constants are replaced by 1.

use num_traits::Zero;

use crate::arthur::{Rate, RateValue};
use crate::error::{Error, Result};
use crate::lie::{pairing, q, qi, ratio_to_f64, Coweight, Rational, RootDatum, Weight, WeylElement};

/// Unramified parameter: a weight in `[0, rho]` and a residue field size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnramifiedParam {
    pub nu: Weight,
    pub p: u64,
}

impl UnramifiedParam {
    pub fn new(nu: Weight, p: u64, rd: &RootDatum) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidArgument(format!("residue field size must be >= 2, got {p}")));
        }
        if !rd.in_rho_interval(&nu)? {
            return Err(Error::OutsideInterval(nu.to_string()));
        }
        Ok(Self { nu, p })
    }
}

/// `<2 rho + r (nu - rho), omega_i^vee>` for each fundamental coweight.
pub fn lr_exponents(nu: &Weight, r: Rational, rd: &RootDatum) -> Result<Vec<Rational>> {
    let rho = &rd.weyl_vector;
    let v = rho.scale(qi(2)).add(&nu.sub(rho).scale(r));
    rd.fundamental_coweights.iter().map(|c| pairing(&v, c)).collect()
}

/// Exact `L^r` convergence test for the spherical function of `nu`.
pub fn lr_converges(nu: &Weight, r: Rational, rd: &RootDatum) -> Result<bool> {
    if r < qi(2) {
        return Err(Error::InvalidArgument(format!("r must be >= 2, got {r}")));
    }
    Ok(lr_exponents(nu, r, rd)?.iter().all(|e| *e < Rational::zero()))
}

/// Infimum of the `r` for which [`lr_converges`] holds.
///
/// Each constraint is affine in `r`; its root is read off from the exponent
/// at `r = 0` and `r = 1`, and the result is confirmed on both sides.
pub fn decay_threshold(param: &UnramifiedParam, rd: &RootDatum) -> Result<RateValue> {
    let nu = &param.nu;
    let at0 = lr_exponents(nu, qi(0), rd)?;
    let at1 = lr_exponents(nu, qi(1), rd)?;
    let mut threshold = Rate::Finite(qi(2));
    for (c, e1) in at0.iter().zip(&at1) {
        let slope = e1 - c;
        let root = if slope >= Rational::zero() {
            Rate::Infinite
        } else {
            Rate::Finite(-c / slope)
        };
        threshold = threshold.max(root);
    }
    if let Rate::Finite(r) = threshold {
        let after = r + q(1, 1_000);
        if lr_converges(nu, r, rd)? || !lr_converges(nu, after, rd)? {
            return Err(Error::Invariant(format!("threshold {r} for {nu} is not sharp")));
        }
    }
    Ok(threshold)
}

fn require_dominant_coweight(lam: &Coweight, rd: &RootDatum) -> Result<()> {
    for a in &rd.simple_roots {
        if pairing(a, lam)? < Rational::zero() {
            return Err(Error::InvalidArgument(format!("coweight {lam} is not dominant")));
        }
    }
    Ok(())
}

fn pow_rational(p: f64, e: Rational) -> f64 {
    p.powf(ratio_to_f64(e))
}

/// `Σ_{w ∈ W} p^{<w nu - rho, λ>}`, the constant-free shape of the spherical
/// function at the dominant coweight `lam`.
pub fn macdonald_profile(
    param: &UnramifiedParam,
    lam: &Coweight,
    rd: &RootDatum,
    weyl: &[WeylElement],
) -> Result<f64> {
    require_dominant_coweight(lam, rd)?;
    let p = param.p as f64;
    let mut acc = NeumaierSum::default();
    for w in weyl {
        let e = pairing(&w.act(&param.nu).sub(&rd.weyl_vector), lam)?;
        acc.add(pow_rational(p, e));
    }
    Ok(acc.value())
}

/// Which surrogate stands in for `|c(λ)|` inside [`lr_partial_sum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Surrogate {
    /// Leading term `p^{<nu - rho, λ>}`.
    #[default]
    DominantTerm,
    /// Full Weyl sum of [`macdonald_profile`].
    WeylSum,
}

/// `Σ_{λ} p^{<2 rho, λ>} S(λ)^r` over `λ = Σ a_i omega_i^vee` with
/// `0 <= a_i <= radius`.
pub fn lr_partial_sum(
    param: &UnramifiedParam,
    r: Rational,
    radius: u32,
    rd: &RootDatum,
    surrogate: Surrogate,
    weyl: &[WeylElement],
) -> Result<f64> {
    let n = rd.rank;
    let p = param.p as f64;
    let rf = ratio_to_f64(r);
    let rho2 = rd.weyl_vector.scale(qi(2));
    let dominant_exps = lr_exponents(&param.nu, r, rd)?;
    let mut counter = vec![0u32; n];
    let mut acc = NeumaierSum::default();
    loop {
        let lam = counter.iter().enumerate().fold(Coweight::zero(n), |acc, (i, &a)| {
            acc.add(&rd.fundamental_coweights[i].scale(qi(a as i64)))
        });
        let term = match surrogate {
            Surrogate::DominantTerm => {
                let e: Rational = counter.iter().zip(&dominant_exps).map(|(&a, c)| qi(a as i64) * c).sum();
                pow_rational(p, e)
            }
            Surrogate::WeylSum => {
                let volume = pow_rational(p, pairing(&rho2, &lam)?);
                volume * macdonald_profile(param, &lam, rd, weyl)?.powf(rf)
            }
        };
        acc.add(term);
        // odometer over the box
        let mut i = 0;
        loop {
            if i == n {
                return Ok(acc.value());
            }
            if counter[i] < radius {
                counter[i] += 1;
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

/// Rate bound read off an eigenvalue of a `d`-regular averaging operator:
/// `|λ| = d^{-1/r}`, clamped below at the tempered value 2.
pub fn rate_from_eigenvalue(lambda_abs: f64, d: u64) -> Result<Rate<f64>> {
    if !(lambda_abs > 0.0 && lambda_abs <= 1.0) {
        return Err(Error::InvalidArgument(format!("|lambda| must lie in (0, 1], got {lambda_abs}")));
    }
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree must be >= 2, got {d}")));
    }
    if lambda_abs == 1.0 {
        return Ok(Rate::Infinite);
    }
    let r = (d as f64).ln() / (1.0 / lambda_abs).ln();
    Ok(Rate::Finite(r.max(2.0)))
}

/// Compensated summation with a fixed evaluation order.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
