//! Arithmetic side: group orders, Gross forms, prime-factor bounds and the
//! exponent ledger of the SO_5 shapes.

use densitometer::arith::{
    gross_form_exists, group_order, induction_growth_exponent, omega_scan, sxdh_ledger, ClassicalFamily, Parabolic,
    SignatureProfile,
};

fn main() -> densitometer::Result<()> {
    for p in [2u64, 3, 5] {
        println!("|Sp_4(F_{p})| = {}", group_order(ClassicalFamily::Sp, 2, p, 1)?);
    }
    for degree in 1..=4 {
        let definite = SignatureProfile::new(2, vec![2; degree])?;
        println!("definite SO_5 over a degree-{degree} field: {}", gross_form_exists(&definite)?);
    }
    let scan = omega_scan(100_000)?;
    println!(
        "omega scan to 1e5: c = {:.3} at q = {}, d = {:.3} at q = {}",
        scan.c_fitted, scan.c_worst_q, scan.d_fitted, scan.d_worst_q
    );
    for p in Parabolic::ALL {
        println!("{p:?} induction exponent {}", induction_growth_exponent(p));
    }
    for row in sxdh_ledger()? {
        println!(
            "{}: r = {}, proven {} vs target {} -> {}{}",
            row.shape,
            row.rate,
            row.bound_exponent,
            row.target_exponent,
            if row.verdict { "PASS" } else { "FAIL" },
            if row.tight { " (tight)" } else { "" }
        );
    }
    Ok(())
}
