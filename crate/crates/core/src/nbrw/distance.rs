use std::collections::VecDeque;

use super::graph::Digraph;
use super::walk::{check_eps, start_vertices, EXACT_LIMIT};
use crate::error::{Error, Result};

/// Default sample of BFS sources above [`EXACT_LIMIT`].
pub const DISTANCE_SAMPLES: usize = 64;

/// Directed distances from `s`; `usize::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &Digraph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in g.out_neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Distance histogram over pairs `(x, y)` with `x` in `sources`.
fn histogram(g: &Digraph, sources: &[usize]) -> Result<Vec<u64>> {
    let mut hist = Vec::new();
    for &s in sources {
        for d in bfs_distances(g, s) {
            if d == usize::MAX {
                return Err(Error::Disconnected);
            }
            if hist.len() <= d {
                hist.resize(d + 1, 0);
            }
            hist[d] += 1;
        }
    }
    Ok(hist)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistanceSummary {
    pub diameter: usize,
    pub almost_diameter: usize,
    pub eps: f64,
    pub sources: usize,
    /// The diameter is exact rather than a lower bound from sampled sources.
    pub exact: bool,
}

/// Diameter and `eps`-almost diameter from BFS histograms: all sources up to
/// `exact_limit` vertices, otherwise a seeded sample plus orbit
/// representatives.
///
/// The almost diameter is the least `R` with at most `eps n^2` pairs (scaled
/// to the sample) at distance beyond `R`. On vertex-transitive digraphs with
/// `eps < 1/2` it must satisfy `diameter <= 2 AD`; a violation is an error.
pub fn distance_summary(g: &Digraph, eps: f64, exact_limit: usize, samples: usize, seed: u64) -> Result<DistanceSummary> {
    check_eps(eps)?;
    let (sources, exact) = start_vertices(g, exact_limit, samples, seed);
    let hist = histogram(g, &sources)?;
    let total = (sources.len() * g.n()) as f64;
    let diameter = hist.len() - 1;
    let mut beyond = 0u64;
    let mut almost_diameter = diameter;
    for r in (0..diameter).rev() {
        beyond += hist[r + 1];
        if beyond as f64 > eps * total {
            break;
        }
        almost_diameter = r;
    }
    if g.is_vertex_transitive() && eps < 0.5 && diameter > 2 * almost_diameter {
        return Err(Error::Invariant(format!(
            "vertex-transitive digraph with diameter {diameter} > 2 * AD = {}",
            2 * almost_diameter
        )));
    }
    Ok(DistanceSummary { diameter, almost_diameter, eps, sources: sources.len(), exact })
}

/// Exact diameter for `n <= 5000`, otherwise a lower bound from sampled sources.
pub fn diameter(g: &Digraph) -> Result<usize> {
    Ok(distance_summary(g, 0.1, EXACT_LIMIT, DISTANCE_SAMPLES, 0)?.diameter)
}

pub fn almost_diameter(g: &Digraph, eps: f64) -> Result<usize> {
    Ok(distance_summary(g, eps, EXACT_LIMIT, DISTANCE_SAMPLES, 0)?.almost_diameter)
}

/// Word-metric ball growth from the identity of a Cayley digraph.
#[derive(Clone, Debug, PartialEq)]
pub struct Covering {
    /// Least radius whose ball is the whole group.
    pub radius_all: usize,
    /// Least radius whose ball holds a `1 - eps` fraction.
    pub radius_mu: usize,
    pub log_d_n: f64,
    pub kappa: f64,
    pub kappa_mu: f64,
    /// `|B(r)|` for `r = 0..=radius_all`.
    pub ball_sizes: Vec<usize>,
}

/// Covering exponents `radius / log_d n`, checking `radius_all <= 2 radius_mu + 1`
/// when `eps < 1/2`.
pub fn covering_exponents(g: &Digraph, eps: f64) -> Result<Covering> {
    check_eps(eps)?;
    if g.d() < 2 {
        return Err(Error::InvalidArgument("covering exponents need d >= 2".into()));
    }
    if !g.is_vertex_transitive() {
        return Err(Error::InvalidArgument("covering exponents need a vertex-transitive digraph".into()));
    }
    let hist = histogram(g, &[0])?;
    let n = g.n();
    let ball_sizes: Vec<usize> = hist
        .iter()
        .scan(0usize, |acc, &h| {
            *acc += h as usize;
            Some(*acc)
        })
        .collect();
    let radius_all = ball_sizes.len() - 1;
    let radius_mu = ball_sizes
        .iter()
        .position(|&b| b as f64 >= (1.0 - eps) * n as f64)
        .unwrap_or(radius_all);
    if eps < 0.5 && radius_all > 2 * radius_mu + 1 {
        return Err(Error::Invariant(format!(
            "covering radius {radius_all} exceeds 2 * {radius_mu} + 1"
        )));
    }
    let log_d_n = (n as f64).ln() / (g.d() as f64).ln();
    Ok(Covering {
        radius_all,
        radius_mu,
        log_d_n,
        kappa: radius_all as f64 / log_d_n,
        kappa_mu: radius_mu as f64 / log_d_n,
        ball_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nbrw::graph::{cayley_digraph, cayley_generators, nonbacktracking_lift, UndirectedGraph, CAYLEY_CAP};

    #[allow(clippy::needless_range_loop)]
    fn floyd(g: &Digraph) -> Vec<Vec<usize>> {
        let n = g.n();
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for u in 0..n {
            d[u][u] = 0;
            for &v in g.out_neighbors(u) {
                d[u][v] = d[u][v].min(1);
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        d
    }

    #[test]
    fn cycle_diameter() {
        assert_eq!(diameter(&Digraph::directed_cycle(9).unwrap()).unwrap(), 8);
    }

    #[test]
    fn k4_lift_matches_floyd() {
        let g = nonbacktracking_lift(&UndirectedGraph::complete(4).unwrap()).unwrap();
        let want = floyd(&g).iter().flatten().copied().max().unwrap();
        let s = distance_summary(&g, 0.1, EXACT_LIMIT, 0, 0).unwrap();
        assert_eq!(s.diameter, want);
        assert!(s.exact);
        assert!(s.almost_diameter <= s.diameter);
        assert!(s.diameter <= 2 * s.almost_diameter);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Digraph::new(vec![vec![0], vec![1]]).unwrap();
        assert_eq!(diameter(&g), Err(Error::Disconnected));
    }

    #[test]
    fn almost_diameter_discards_far_pairs() {
        // on the directed 10-cycle each distance 0..9 holds n pairs
        let g = Digraph::directed_cycle(10).unwrap();
        assert_eq!(almost_diameter(&g, 0.1).unwrap(), 8);
        assert_eq!(almost_diameter(&g, 0.25).unwrap(), 7);
    }

    #[test]
    fn sampled_distances_on_transitive_graph_are_exact() {
        let g = nonbacktracking_lift(&UndirectedGraph::petersen()).unwrap();
        let full = distance_summary(&g, 0.1, EXACT_LIMIT, 0, 0).unwrap();
        let sampled = distance_summary(&g, 0.1, 5, 4, 9).unwrap();
        assert!(sampled.exact);
        assert_eq!(sampled.diameter, full.diameter);
    }

    #[test]
    fn covering_examples() {
        let k = Digraph::complete_with_loops(7).unwrap();
        let c = covering_exponents(&k, 0.1).unwrap();
        assert_eq!((c.radius_all, c.radius_mu), (1, 1));
        let s3 = cayley_digraph(&cayley_generators("sym:3").unwrap(), CAYLEY_CAP).unwrap();
        let c = covering_exponents(&s3, 0.1).unwrap();
        assert_eq!(*c.ball_sizes.last().unwrap(), 6);
        assert!(c.kappa >= c.kappa_mu);
        assert_eq!(c.radius_all, diameter(&s3).unwrap());
        assert!(covering_exponents(&Digraph::directed_cycle(5).unwrap(), 0.1).is_err());
    }
}
