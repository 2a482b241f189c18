use serde::Serialize;

use super::distance::{distance_summary, DISTANCE_SAMPLES};
use super::graph::Digraph;
use super::walk::{collision_free_check, lower_bound, mixing_time, MixingOptions};
use crate::error::{Error, Result};

/// One row of the `walk` output. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WalkReport {
    pub graph: String,
    pub n: usize,
    pub d: usize,
    pub seed: u64,
    pub eps: f64,
    pub ad_eps: f64,
    pub t_mix: usize,
    pub log_d_n: f64,
    pub cutoff_ratio: f64,
    pub lower_bound: usize,
    pub almost_diameter: usize,
    pub diameter: usize,
    pub diameter_exact: bool,
    /// First step `j <= 2 t_mix` at which the walk from vertex 0 revisits
    /// an earlier support.
    pub collision_horizon: Option<usize>,
}

/// Mixing time, distances and collision horizon of `g`, with the
/// support-size, lower-bound and diameter checks enforced.
pub fn walk_report(g: &Digraph, graph: &str, opts: &MixingOptions, ad_eps: f64) -> Result<WalkReport> {
    let mixing = mixing_time(g, opts)?;
    let lb = lower_bound(g.n(), g.d(), opts.eps)?;
    if lb > mixing.t_mix {
        return Err(Error::Invariant(format!("lower bound {lb} exceeds t_mix {}", mixing.t_mix)));
    }
    let dist = distance_summary(g, ad_eps, opts.exact_limit, DISTANCE_SAMPLES, opts.seed)?;
    if dist.almost_diameter > dist.diameter {
        return Err(Error::Invariant("almost diameter exceeds diameter".into()));
    }
    let log_d_n = (g.n() as f64).ln() / (g.d() as f64).ln();
    Ok(WalkReport {
        graph: graph.to_string(),
        n: g.n(),
        d: g.d(),
        seed: opts.seed,
        eps: opts.eps,
        ad_eps,
        t_mix: mixing.t_mix,
        log_d_n,
        cutoff_ratio: mixing.t_mix as f64 / log_d_n,
        lower_bound: lb,
        almost_diameter: dist.almost_diameter,
        diameter: dist.diameter,
        diameter_exact: dist.exact,
        collision_horizon: collision_free_check(g, 0, 2 * mixing.t_mix)?.map(|(_, j)| j),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nbrw::graph::{nonbacktracking_lift, UndirectedGraph};

    #[test]
    fn petersen_report() {
        let g = nonbacktracking_lift(&UndirectedGraph::petersen()).unwrap();
        let r = walk_report(&g, "petersen-nb", &MixingOptions::default(), 0.1).unwrap();
        assert_eq!((r.n, r.d), (30, 2));
        assert!(r.lower_bound <= r.t_mix);
        assert!(r.diameter <= 2 * r.almost_diameter);
        assert!(r.diameter_exact);
        // girth 5: a collision (i, j) needs i + j >= 5
        assert!(r.collision_horizon.unwrap() >= 3);
    }
}
