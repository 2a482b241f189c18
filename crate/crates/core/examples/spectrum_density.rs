//! Walk-operator spectra of non-backtracking lifts and the density of
//! eigenvalues above d^{-1/r}.

use densitometer::nbrw::spectrum::{density_check_reports, RATE_GRID};
use densitometer::nbrw::{nb_lift_spectrum, nonbacktracking_lift, power_norm_profile, BaseSpectrum, UndirectedGraph};

fn main() -> densitometer::Result<()> {
    let mut family = Vec::new();
    for n in [200usize, 400, 800, 1600] {
        let s = nb_lift_spectrum(&UndirectedGraph::random_regular(n, 3, 0)?, BaseSpectrum::Dense)?;
        println!(
            "lift of {n}: top nontrivial |lambda| = {:.4}, counts {:?}",
            s.top_nontrivial().unwrap_or(0.0),
            RATE_GRID.iter().zip(s.density_grid()).map(|(r, (_, c))| (*r, c)).collect::<Vec<_>>()
        );
        family.push(s);
    }
    let v = density_check_reports(&family, 3.0)?;
    println!("density slope at r = 3: {:.4} (bound {:.4}, pass {})", v.slope, v.bound, v.pass);
    let small = nonbacktracking_lift(&UndirectedGraph::petersen())?;
    let prof = power_norm_profile(&small, 12, 4000)?;
    println!("Petersen lift: spectral radius {:.4}, ||T^l||^(1/l) = {:.4?}", prof.spectral_radius, prof.values);
    Ok(())
}
