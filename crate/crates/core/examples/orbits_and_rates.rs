//! Nilpotent orbits of Sp_4 and Sp_6, their weighted Dynkin diagrams and
//! decay rates, and the SO_5 A-shape catalog.

use densitometer::arthur::{nilpotent_partitions, nu_sigma, rate_invariant, rate_oracle, shape_catalog_so5, weighted_dynkin};
use densitometer::lie::{build_root_datum, Family};

fn main() -> densitometer::Result<()> {
    for rank in [2usize, 3] {
        let rd = build_root_datum(Family::B, rank)?;
        println!("orbits of Sp_{}:", 2 * rank);
        for orbit in nilpotent_partitions(Family::C, 2 * rank as u32) {
            let nu = nu_sigma(&orbit, &rd)?;
            let rate = rate_invariant(&nu, &rd)?;
            assert_eq!(rate, rate_oracle(&nu, &rd)?);
            println!("  {orbit:<14} h = {:?}  nu = {nu:<12} r = {rate}", weighted_dynkin(&orbit));
        }
    }
    println!("SO_5 shapes:");
    for row in shape_catalog_so5() {
        println!("  {} {:?} -> {} r = {}", row.shape.name, row.shape.pairs, row.orbit, row.rate);
    }
    Ok(())
}
