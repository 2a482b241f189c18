//! Mixing time of the non-backtracking walk on lifts of random cubic graphs,
//! compared with the counting lower bound and log_d n.

use densitometer::nbrw::{nonbacktracking_lift, walk_report, MixingOptions, UndirectedGraph};

fn main() -> densitometer::Result<()> {
    for n in [100usize, 1000, 4000] {
        let lift = nonbacktracking_lift(&UndirectedGraph::random_regular(n, 3, 1)?)?;
        let r = walk_report(&lift, "rr3-nb", &MixingOptions { seed: 1, ..Default::default() }, 0.1)?;
        println!(
            "lift of {n}: n = {}, t_mix = {}, lower bound = {}, log_d n = {:.3}, ratio = {:.3}, AD = {}, diam = {}",
            r.n, r.t_mix, r.lower_bound, r.log_d_n, r.cutoff_ratio, r.almost_diameter, r.diameter
        );
    }
    Ok(())
}
