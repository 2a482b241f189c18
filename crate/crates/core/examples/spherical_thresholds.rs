//! Exact L^r thresholds of unramified spherical functions, and truncated
//! sums that bracket them.

use densitometer::lie::{build_root_datum, weyl_elements, Family, Rational, Weight};
use densitometer::spherical::{decay_threshold, lr_partial_sum, Surrogate, UnramifiedParam};

fn main() -> densitometer::Result<()> {
    let rd = build_root_datum(Family::B, 2)?;
    let weyl = weyl_elements(&rd)?;
    let nu = Weight::new(vec![Rational::new(1, 2), Rational::from_integer(0)]);
    let param = UnramifiedParam::new(nu, 3, &rd)?;
    println!("threshold for nu = {}, p = 3: {}", param.nu, decay_threshold(&param, &rd)?);
    for r in [Rational::new(5, 2), Rational::new(7, 2)] {
        let sums: Vec<f64> = [5, 10, 20, 40]
            .iter()
            .map(|&k| lr_partial_sum(&param, r, k, &rd, Surrogate::WeylSum, &weyl))
            .collect::<densitometer::Result<_>>()?;
        let growth: Vec<f64> = sums.windows(2).map(|w| w[1] / w[0]).collect();
        println!("r = {r}: doubling ratios {growth:.4?}");
    }
    Ok(())
}
