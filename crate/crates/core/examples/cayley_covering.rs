//! Ball growth and covering exponents of Cayley digraphs of SL_2(F_p)
//! acting on nonzero vectors.

use densitometer::nbrw::{cayley_digraph, cayley_generators, covering_exponents};
use densitometer::nbrw::graph::CAYLEY_CAP;

fn main() -> densitometer::Result<()> {
    for p in [5, 7, 11, 13] {
        let g = cayley_digraph(&cayley_generators(&format!("sl2:{p}"))?, CAYLEY_CAP)?;
        let c = covering_exponents(&g, 0.1)?;
        println!(
            "p = {p}: n = {}, d = {}, diameter {} (kappa {:.3}), 90% radius {} (kappa {:.3}), balls {:?}",
            g.n(),
            g.d(),
            c.radius_all,
            c.kappa,
            c.radius_mu,
            c.kappa_mu,
            c.ball_sizes
        );
    }
    Ok(())
}
