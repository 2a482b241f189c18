//! Root data of B_n and C_n: Cartan matrices, Weyl vectors, Weyl group orders
//! and the dominance order.

use densitometer::lie::{build_root_datum, dominance_leq, dominant_representative, weyl_elements, Family, Weight};

fn main() -> densitometer::Result<()> {
    for family in [Family::B, Family::C] {
        for rank in 2..=4 {
            let rd = build_root_datum(family, rank)?;
            println!(
                "{family}{rank}: rho = {}, |W| = {}, cartan = {:?}",
                rd.weyl_vector,
                weyl_elements(&rd)?.len(),
                rd.cartan
            );
        }
    }
    let b2 = build_root_datum(Family::B, 2)?;
    let nu = Weight::from_ints(&[-1, 2]);
    let top = dominant_representative(&nu, &b2)?;
    println!("dominant representative of {nu} is {top}; {nu} <= {top}: {}", dominance_leq(&nu, &top, &b2)?);
    Ok(())
}
