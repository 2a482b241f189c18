use std::collections::VecDeque;

use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::graph::Digraph;
use crate::error::{Error, Result};
use crate::spherical::NeumaierSum;

/// Tolerance on the total mass of a distribution.
pub const MASS_TOLERANCE: f64 = 1e-12;

/// Number of vertices below which mixing and distances use every start.
pub const EXACT_LIMIT: usize = 5_000;

/// A probability vector on the vertices of a digraph.
#[derive(Clone, Debug, PartialEq)]
pub struct Dist(Vec<f64>);

impl Dist {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if let Some(x) = p.iter().find(|x| x.is_nan() || **x < 0.0) {
            return Err(Error::InvalidArgument(format!("negative or NaN mass {x}")));
        }
        let d = Self(p);
        d.check_mass()?;
        Ok(d)
    }

    pub fn point(n: usize, x: usize) -> Self {
        let mut p = vec![0.0; n];
        p[x] = 1.0;
        Self(p)
    }

    pub fn uniform(n: usize) -> Self {
        Self(vec![1.0 / n as f64; n])
    }

    pub fn probs(&self) -> &[f64] {
        &self.0
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0.0).count()
    }

    pub fn total(&self) -> f64 {
        let mut s = NeumaierSum::default();
        self.0.iter().for_each(|&x| s.add(x));
        s.value()
    }

    fn check_mass(&self) -> Result<()> {
        let t = self.total();
        if (t - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::Invariant(format!("distribution has mass {t:.17}")));
        }
        Ok(())
    }

    /// One step of the walk: the mass at `v` splits equally over its out-edges.
    pub fn step(&self, g: &Digraph) -> Self {
        let mut next = vec![0.0; self.0.len()];
        let share = 1.0 / g.d() as f64;
        for (v, &m) in self.0.iter().enumerate() {
            if m > 0.0 {
                let w = m * share;
                for &u in g.out_neighbors(v) {
                    next[u] += w;
                }
            }
        }
        Self(next)
    }
}

/// Distribution of the walk started at `x` after `steps` steps.
pub fn walk_distribution(g: &Digraph, x: usize, steps: usize) -> Result<Dist> {
    check_vertex(g, x)?;
    let mut p = Dist::point(g.n(), x);
    for _ in 0..steps {
        p = p.step(g);
    }
    Ok(p)
}

fn check_vertex(g: &Digraph, x: usize) -> Result<()> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { id: x, n: g.n(), line: 0 });
    }
    Ok(())
}

/// Total variation distance to the uniform distribution.
pub fn tv_to_uniform(dist: &Dist) -> f64 {
    let u = 1.0 / dist.0.len() as f64;
    0.5 * dist.0.iter().map(|&p| (p - u).abs()).sum::<f64>()
}

/// Fewest steps after which the support can hold a `1 - eps` fraction of
/// the vertices: the least `l` with `d^l >= (1 - eps) n`.
pub fn lower_bound(n: usize, d: usize, eps: f64) -> Result<usize> {
    if d < 2 {
        return Err(Error::InvalidArgument("lower bound needs d >= 2".into()));
    }
    check_eps(eps)?;
    let target = (1.0 - eps) * n as f64 * (1.0 - 1e-12);
    let mut l = 0;
    let mut reach = 1.0f64;
    while reach < target {
        reach *= d as f64;
        l += 1;
    }
    Ok(l)
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!("eps must lie in (0, 1), got {eps}")));
    }
    Ok(())
}

fn reaches_all(adj: impl Fn(usize) -> Vec<usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in adj(u) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

pub fn is_strongly_connected(g: &Digraph) -> bool {
    let inn = g.in_neighbors();
    reaches_all(|u| g.out_neighbors(u).to_vec(), g.n()) && reaches_all(|u| inn[u].clone(), g.n())
}

/// Period of a strongly connected digraph: the gcd of `level(u) + 1 - level(v)`
/// over all edges `u -> v`, with BFS levels from vertex 0.
pub fn period(g: &Digraph) -> Result<usize> {
    if !is_strongly_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut level = vec![usize::MAX; g.n()];
    level[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &v in g.out_neighbors(u) {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let mut p = 0usize;
    for u in 0..g.n() {
        for &v in g.out_neighbors(u) {
            p = p.gcd(&(level[u] + 1).abs_diff(level[v]));
        }
    }
    Ok(p)
}

/// Start selection and stopping rules for [`mixing_time`].
#[derive(Clone, Debug)]
pub struct MixingOptions {
    pub eps: f64,
    /// Step budget; defaults to `64 + 16 ceil(log_d n)`.
    pub horizon: Option<usize>,
    /// Use every start when `n` is at most this.
    pub exact_limit: usize,
    /// Random starts used above `exact_limit`, besides orbit representatives.
    pub samples: usize,
    pub seed: u64,
}

impl Default for MixingOptions {
    fn default() -> Self {
        Self { eps: 0.25, horizon: None, exact_limit: EXACT_LIMIT, samples: 32, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mixing {
    pub t_mix: usize,
    pub starts: usize,
    /// Every start was examined.
    pub exact: bool,
}

/// Start vertices: all of them up to `exact_limit`, otherwise the orbit
/// representatives plus `samples` seeded random vertices.
pub fn start_vertices(g: &Digraph, exact_limit: usize, samples: usize, seed: u64) -> (Vec<usize>, bool) {
    let n = g.n();
    if n <= exact_limit {
        return ((0..n).collect(), true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts: Vec<usize> = rand::seq::index::sample(&mut rng, n, samples.min(n)).into_vec();
    if let Some(h) = &g.symmetry_hint {
        starts.extend(&h.orbit_reps);
    }
    starts.sort_unstable();
    starts.dedup();
    let exact = g.is_vertex_transitive();
    (starts, exact)
}

/// TV distance to uniform at steps `0..=horizon` from `x`, stopping early at
/// the first value `<= stop`. Checks mass and the `d^l` support bound on
/// every step.
pub fn tv_profile(g: &Digraph, x: usize, horizon: usize, stop: Option<f64>) -> Result<Vec<f64>> {
    check_vertex(g, x)?;
    let mut p = Dist::point(g.n(), x);
    let mut out = Vec::new();
    let mut cap = 1usize;
    for l in 0..=horizon {
        if l > 0 {
            p = p.step(g);
            cap = cap.saturating_mul(g.d());
        }
        let support = p.support_size();
        if support > cap {
            return Err(Error::Invariant(format!("support {support} exceeds d^{l} = {cap} from start {x}")));
        }
        p.check_mass()?;
        let tv = tv_to_uniform(&p);
        out.push(tv);
        if stop.is_some_and(|s| tv <= s) {
            break;
        }
    }
    Ok(out)
}

/// `min { l : max_x d_x(l) <= eps }` over the starts of [`start_vertices`].
pub fn mixing_time(g: &Digraph, opts: &MixingOptions) -> Result<Mixing> {
    check_eps(opts.eps)?;
    let n = g.n();
    if n == 1 {
        return Ok(Mixing { t_mix: 0, starts: 1, exact: true });
    }
    let per = period(g)?;
    if per != 1 {
        return Err(Error::NoMixing(format!("chain has period {per}; TV to uniform never settles")));
    }
    let logd = (n as f64).ln() / (g.d().max(2) as f64).ln();
    let horizon = opts.horizon.unwrap_or(64 + 16 * logd.ceil() as usize);
    let (starts, exact) = start_vertices(g, opts.exact_limit, opts.samples, opts.seed);
    // TV to a stationary law cannot increase, so each start may stop early
    let monotone = g.is_in_regular();
    let stop = monotone.then_some(opts.eps);
    let profiles: Vec<Vec<f64>> = starts
        .par_iter()
        .map(|&x| tv_profile(g, x, horizon, stop))
        .collect::<Result<_>>()?;
    let t_mix = (0..=horizon).find(|&l| {
        profiles.iter().all(|prof| match prof.get(l) {
            Some(&tv) => tv <= opts.eps,
            None => monotone,
        })
    });
    match t_mix {
        Some(t_mix) => Ok(Mixing { t_mix, starts: starts.len(), exact }),
        None => {
            let worst = profiles.iter().filter_map(|p| p.last()).fold(0.0f64, |a, &b| a.max(b));
            Err(Error::NoMixing(format!(
                "TV distance {worst:.6} still above {} after {horizon} steps",
                opts.eps
            )))
        }
    }
}

/// First pair `i < j <= horizon` for which the supports of `T^i 1_x` and
/// `T^j 1_x` meet, ordered by `j` and then `i`.
pub fn collision_free_check(g: &Digraph, x: usize, horizon: usize) -> Result<Option<(usize, usize)>> {
    check_vertex(g, x)?;
    let mut first_seen = vec![usize::MAX; g.n()];
    let mut stamp = vec![usize::MAX; g.n()];
    first_seen[x] = 0;
    let mut frontier = vec![x];
    for j in 1..=horizon {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.out_neighbors(v) {
                if stamp[w] != j {
                    stamp[w] = j;
                    next.push(w);
                }
            }
        }
        if let Some(i) = next.iter().map(|&w| first_seen[w]).filter(|&i| i != usize::MAX).min() {
            return Ok(Some((i, j)));
        }
        for &w in &next {
            first_seen[w] = j;
        }
        frontier = next;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nbrw::graph::{nonbacktracking_lift, UndirectedGraph};

    #[test]
    fn distributions() {
        let c = Digraph::directed_cycle(7).unwrap();
        assert_eq!(walk_distribution(&c, 3, 0).unwrap(), Dist::point(7, 3));
        assert_eq!(walk_distribution(&c, 3, 5).unwrap(), Dist::point(7, 1));
        let k4 = nonbacktracking_lift(&UndirectedGraph::complete(4).unwrap()).unwrap();
        let p = walk_distribution(&k4, 5, 1).unwrap();
        for &w in k4.out_neighbors(5) {
            assert_eq!(p.probs()[w], 0.5);
        }
        assert_eq!(p.support_size(), 2);
        assert!(walk_distribution(&k4, 12, 1).is_err());
    }

    #[test]
    fn tv_values() {
        assert_eq!(tv_to_uniform(&Dist::uniform(4)), 0.0);
        assert_eq!(tv_to_uniform(&Dist::point(4, 0)), 0.75);
        assert_eq!(tv_to_uniform(&Dist::new(vec![0.5, 0.5, 0.0, 0.0]).unwrap()), 0.5);
        assert!(Dist::new(vec![0.5, 0.4]).is_err());
        assert!(Dist::new(vec![1.5, -0.5]).is_err());
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(59_049, 3, 2.0 / 3.0).unwrap(), 9);
        assert_eq!(lower_bound(59_049, 3, 1e-9).unwrap(), 10);
        assert_eq!(lower_bound(1000, 2, 1e-9).unwrap(), 10);
        assert!(lower_bound(10, 1, 0.25).is_err());
        assert!(lower_bound(10, 2, 1.0).is_err());
    }

    #[test]
    fn mixing_examples() {
        let k = Digraph::complete_with_loops(6).unwrap();
        assert_eq!(mixing_time(&k, &MixingOptions::default()).unwrap().t_mix, 1);
        let c = Digraph::directed_cycle(5).unwrap();
        assert!(matches!(mixing_time(&c, &MixingOptions::default()), Err(Error::NoMixing(_))));
        let two = Digraph::new(vec![vec![0], vec![1]]).unwrap();
        assert_eq!(mixing_time(&two, &MixingOptions::default()), Err(Error::Disconnected));
    }

    #[test]
    fn non_doubly_stochastic_chain_mixes_or_reports() {
        // 0 -> {0, 1}, 1 -> {0, 0}: stationary law (2/3, 1/3), TV floor 1/6;
        // max_x d_x(l) = 1/2, 1/4, 1/4, 3/16 for l = 1..4
        let g = Digraph::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(!g.is_in_regular());
        let opts = MixingOptions { eps: 0.2, ..Default::default() };
        assert_eq!(mixing_time(&g, &opts).unwrap().t_mix, 4);
        let strict = MixingOptions { eps: 0.1, ..Default::default() };
        assert!(matches!(mixing_time(&g, &strict), Err(Error::NoMixing(_))));
    }

    #[test]
    fn periods() {
        assert_eq!(period(&Digraph::directed_cycle(6).unwrap()).unwrap(), 6);
        let pet = nonbacktracking_lift(&UndirectedGraph::petersen()).unwrap();
        assert_eq!(period(&pet).unwrap(), 1);
        let k33 = UndirectedGraph::new(
            6,
            (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect(),
        )
        .unwrap();
        assert_eq!(period(&nonbacktracking_lift(&k33).unwrap()).unwrap(), 2);
    }

    #[test]
    fn collisions() {
        let c = Digraph::directed_cycle(9).unwrap();
        assert_eq!(collision_free_check(&c, 0, 8).unwrap(), None);
        assert_eq!(collision_free_check(&c, 0, 9).unwrap(), Some((0, 9)));
        let looped = Digraph::new(vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(collision_free_check(&looped, 0, 5).unwrap(), Some((0, 1)));
        let base = UndirectedGraph::petersen();
        let girth = base.girth().unwrap();
        let lift = nonbacktracking_lift(&base).unwrap();
        for x in 0..lift.n() {
            let (i, j) = collision_free_check(&lift, x, 50).unwrap().unwrap();
            assert!(i + j >= girth, "start {x}: collision ({i}, {j})");
        }
    }

    #[test]
    fn profile_enforces_support_bound() {
        let pet = nonbacktracking_lift(&UndirectedGraph::petersen()).unwrap();
        let prof = tv_profile(&pet, 0, 30, None).unwrap();
        assert_eq!(prof.len(), 31);
        assert!(prof.windows(2).all(|w| w[1] <= w[0] + 1e-15));
    }
}
