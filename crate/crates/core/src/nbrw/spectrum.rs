use faer::prelude::Solve;
use faer::{Mat, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};

/// Largest digraph handed to the dense eigensolver.
pub const DENSE_LIMIT: usize = 4_000;

/// Eigenvalues at least this close to the unit circle count as trivial.
pub const TRIVIAL_TOLERANCE: f64 = 1e-9;

/// Rates at which [`SpectrumReport::density_grid`] counts slow modes.
pub const RATE_GRID: [f64; 7] = [2.5, 3.0, 3.5, 4.0, 5.0, 6.0, 8.0];

/// Eigenvalue magnitudes of `T = A / d`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub n: usize,
    pub d: usize,
    /// Sorted descending.
    pub magnitudes: Vec<f64>,
    pub trivial: usize,
    /// False when only part of the spectrum was computed.
    pub complete: bool,
}

impl SpectrumReport {
    fn new(n: usize, d: usize, mut magnitudes: Vec<f64>, complete: bool) -> Self {
        magnitudes.sort_by(|a, b| b.total_cmp(a));
        let trivial = magnitudes.iter().take_while(|&&m| m >= 1.0 - TRIVIAL_TOLERANCE).count();
        Self { n, d, magnitudes, trivial, complete }
    }

    pub fn nontrivial(&self) -> &[f64] {
        &self.magnitudes[self.trivial..]
    }

    pub fn top_nontrivial(&self) -> Option<f64> {
        self.nontrivial().first().copied()
    }

    /// `N(r)`: nontrivial magnitudes at least `d^{-1/r}`.
    pub fn density_count(&self, r: f64) -> usize {
        let cut = (self.d as f64).powf(-1.0 / r) * (1.0 - 1e-12);
        self.nontrivial().iter().take_while(|&&m| m >= cut).count()
    }

    pub fn density_grid(&self) -> Vec<(f64, usize)> {
        RATE_GRID.iter().map(|&r| (r, self.density_count(r))).collect()
    }
}

/// Dense `T = A / d` with `T[v][w]` the chance of stepping from `v` to `w`.
pub fn transition_matrix(g: &Digraph) -> Mat<f64> {
    let n = g.n();
    let share = 1.0 / g.d() as f64;
    let mut t = Mat::zeros(n, n);
    for v in 0..n {
        for &w in g.out_neighbors(v) {
            t[(v, w)] += share;
        }
    }
    t
}

fn check_dense(g: &Digraph, dense_limit: usize) -> Result<()> {
    if g.n() > dense_limit {
        return Err(Error::LimitExceeded(format!(
            "{} vertices exceed the dense limit {dense_limit}; use arnoldi_spectrum for the top magnitudes",
            g.n()
        )));
    }
    Ok(())
}

fn eigen_magnitudes(m: &Mat<f64>) -> Result<Vec<f64>> {
    let eig = m
        .eigenvalues()
        .map_err(|e| Error::Numerical(format!("eigensolver failed to converge: {e:?}")))?;
    Ok(eig.iter().map(|z| z.norm()).collect())
}

/// Full spectrum of `T` by a dense eigensolve.
pub fn spectrum(g: &Digraph, dense_limit: usize) -> Result<SpectrumReport> {
    check_dense(g, dense_limit)?;
    let mags = eigen_magnitudes(&transition_matrix(g))?;
    let report = SpectrumReport::new(g.n(), g.d(), mags, true);
    if report.magnitudes[0] > 1.0 + TRIVIAL_TOLERANCE || report.trivial == 0 {
        return Err(Error::Invariant(format!("spectral radius {} of a stochastic matrix", report.magnitudes[0])));
    }
    Ok(report)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(y: &mut [f64], c: f64, x: &[f64]) {
    y.iter_mut().zip(x).for_each(|(yi, xi)| *yi += c * xi);
}

fn random_unit(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<f64> = (0..n).map(|_| rng.random::<f64>() - 0.5).collect();
    let norm = dot(&v, &v).sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    v
}

/// Orthogonalise `w` against `basis` twice, returning the accumulated
/// coefficients.
fn orthogonalise(w: &mut [f64], basis: &[Vec<f64>]) -> Vec<f64> {
    let mut coeffs = vec![0.0; basis.len()];
    for _ in 0..2 {
        for (c, q) in coeffs.iter_mut().zip(basis) {
            let h = dot(q, w);
            *c += h;
            axpy(w, -h, q);
        }
    }
    coeffs
}

/// Ritz magnitudes from `steps` Arnoldi iterations with a seeded start: a
/// partial spectrum that is reliable at the outer edge only.
pub fn arnoldi_spectrum(g: &Digraph, steps: usize, seed: u64) -> Result<SpectrumReport> {
    let n = g.n();
    let m = steps.clamp(1, n);
    let share = 1.0 / g.d() as f64;
    let apply = |x: &[f64]| -> Vec<f64> {
        (0..n).map(|v| g.out_neighbors(v).iter().map(|&w| x[w]).sum::<f64>() * share).collect()
    };
    let mut basis = vec![random_unit(n, seed)];
    let mut h = Mat::<f64>::zeros(m, m);
    for j in 0..m {
        let mut w = apply(&basis[j]);
        for (i, c) in orthogonalise(&mut w, &basis).into_iter().enumerate() {
            h[(i, j)] = c;
        }
        let beta = dot(&w, &w).sqrt();
        if j + 1 == m || beta < 1e-12 {
            let k = j + 1;
            let mags = eigen_magnitudes(&h.submatrix(0, 0, k, k).to_owned())?;
            return Ok(SpectrumReport::new(n, g.d(), mags, k == n));
        }
        h[(j + 1, j)] = beta;
        w.iter_mut().for_each(|x| *x /= beta);
        basis.push(w);
    }
    unreachable!("the loop returns on its final iteration")
}

/// How [`nb_lift_spectrum`] obtains the adjacency eigenvalues of the base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseSpectrum {
    /// Full symmetric eigendecomposition.
    Dense,
    /// Converged Ritz values of a Lanczos run with full reorthogonalisation.
    Lanczos { steps: usize, seed: u64 },
}

/// Dense adjacency matrix with multiplicity; a loop adds 2 on the diagonal.
pub fn adjacency_matrix(g: &UndirectedGraph) -> Mat<f64> {
    let mut a = Mat::zeros(g.n, g.n);
    for &(u, v) in &g.edges {
        a[(u, v)] += 1.0;
        a[(v, u)] += 1.0;
    }
    a
}

fn symmetric_eigenvalues(a: &Mat<f64>) -> Result<Vec<f64>> {
    a.self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::Numerical(format!("symmetric eigensolver failed: {e:?}")))
}

/// Converged Ritz values of the adjacency operator: those whose residual
/// bound is below `1e-8` times the spectral scale.
pub fn lanczos_eigenvalues(g: &UndirectedGraph, steps: usize, seed: u64) -> Result<Vec<f64>> {
    let n = g.n;
    let adj = g.neighbors();
    let apply = |x: &[f64]| -> Vec<f64> { (0..n).map(|v| adj[v].iter().map(|&w| x[w]).sum()).collect() };
    let m = steps.clamp(1, n);
    let mut basis = vec![random_unit(n, seed)];
    let mut alpha = Vec::with_capacity(m);
    let mut beta: Vec<f64> = Vec::with_capacity(m);
    loop {
        let j = basis.len() - 1;
        let mut w = apply(&basis[j]);
        alpha.push(dot(&basis[j], &w));
        orthogonalise(&mut w, &basis);
        let b = dot(&w, &w).sqrt();
        beta.push(b);
        if basis.len() == m || b < 1e-10 {
            break;
        }
        w.iter_mut().for_each(|x| *x /= b);
        basis.push(w);
    }
    let k = alpha.len();
    let t = Mat::<f64>::from_fn(k, k, |i, j| match i.abs_diff(j) {
        0 => alpha[i],
        1 => beta[i.min(j)],
        _ => 0.0,
    });
    let eig = t
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Numerical(format!("tridiagonal eigensolver failed: {e:?}")))?;
    let vals: Vec<f64> = (0..k).map(|i| eig.S()[i]).collect();
    let scale = vals.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    let last = beta[k - 1];
    Ok((0..k)
        .filter(|&i| (last * eig.U()[(k - 1, i)]).abs() <= 1e-8 * scale)
        .map(|i| vals[i])
        .collect())
}

/// Spectrum of the non-backtracking lift of a `k`-regular graph from the
/// base adjacency spectrum: each adjacency eigenvalue `mu` yields the two
/// roots of `x^2 - mu x + (k - 1)`, and `+1`, `-1` each occur `m - n` more
/// times. Magnitudes are divided by `d = k - 1`.
pub fn nb_lift_spectrum(base: &UndirectedGraph, method: BaseSpectrum) -> Result<SpectrumReport> {
    let k = base.regular_degree()?;
    if k < 3 {
        return Err(Error::InvalidArgument(format!("lift spectrum needs degree >= 3, got {k}")));
    }
    let (mus, complete) = match method {
        BaseSpectrum::Dense => (symmetric_eigenvalues(&adjacency_matrix(base))?, true),
        BaseSpectrum::Lanczos { steps, seed } => (lanczos_eigenvalues(base, steps, seed)?, false),
    };
    let d = (k - 1) as f64;
    let mut mags = Vec::with_capacity(base.n * k);
    for mu in mus {
        let disc = mu * mu - 4.0 * d;
        if disc < 0.0 {
            mags.extend([d.sqrt() / d; 2]);
        } else {
            let s = disc.sqrt();
            mags.push((mu + s).abs() / 2.0 / d);
            mags.push((mu - s).abs() / 2.0 / d);
        }
    }
    if complete {
        let extra = base.edges.len() - base.n;
        mags.extend(std::iter::repeat_n(1.0 / d, 2 * extra));
    }
    Ok(SpectrumReport::new(base.n * k, k - 1, mags, complete))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityVerdict {
    pub r: f64,
    pub slope: f64,
    pub intercept: f64,
    pub bound: f64,
    pub pass: bool,
}

/// Least-squares slope of `log(1 + N(r))` against `log n`; passes when the
/// slope is at most `2/r + 0.15`.
pub fn density_check(points: &[(usize, usize)], r: f64) -> Result<DensityVerdict> {
    if points.len() < 3 {
        return Err(Error::InvalidArgument(format!("density check needs 3 family members, got {}", points.len())));
    }
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, c)| (1.0 + c as f64).ln()).collect();
    let k = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / k, ys.iter().sum::<f64>() / k);
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("density check needs distinct sizes".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let bound = 2.0 / r + 0.15;
    Ok(DensityVerdict { r, slope, intercept: my - slope * mx, bound, pass: slope <= bound })
}

/// [`density_check`] on the `N(r)` counts of a family of spectra.
pub fn density_check_reports(family: &[SpectrumReport], r: f64) -> Result<DensityVerdict> {
    let pts: Vec<(usize, usize)> = family.iter().map(|s| (s.n, s.density_count(r))).collect();
    density_check(&pts, r)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormProfile {
    /// `||T^l (I - 1 pi^T)||^{1/l}` for `l = 1..=l_max`.
    pub values: Vec<f64>,
    /// Top nontrivial eigenvalue magnitude.
    pub spectral_radius: f64,
    /// Constant fitted at `l = 1` in `||T^l|| <= c l^n lambda^l`.
    pub c: f64,
}

fn operator_norm(m: &Mat<f64>) -> Result<f64> {
    let sv = m
        .singular_values()
        .map_err(|e| Error::Numerical(format!("SVD failed to converge: {e:?}")))?;
    Ok(sv.into_iter().fold(0.0, f64::max))
}

/// `||M^l||_2^{1/l}` for `l = 1..=l_max`.
pub fn matrix_norm_profile(m: &Mat<f64>, l_max: usize) -> Result<Vec<f64>> {
    let mut p = m.clone();
    let mut out = Vec::with_capacity(l_max);
    for l in 1..=l_max {
        if l > 1 {
            p = m * &p;
        }
        out.push(operator_norm(&p)?.powf(1.0 / l as f64));
    }
    Ok(out)
}

/// Stationary law `pi` of `T`: `pi T = pi`, `sum pi = 1`.
fn stationary(t: &Mat<f64>) -> Mat<f64> {
    let n = t.nrows();
    let a = Mat::<f64>::from_fn(n, n, |i, j| {
        if i == n - 1 {
            1.0
        } else {
            t[(j, i)] - if i == j { 1.0 } else { 0.0 }
        }
    });
    let b = Mat::<f64>::from_fn(n, 1, |i, _| if i == n - 1 { 1.0 } else { 0.0 });
    a.partial_piv_lu().solve(&b)
}

/// Norms of powers of `T` on the complement of its stationary direction.
/// The bound `||T^l (I - 1 pi^T)|| <= c l^n lambda^l` is checked at every
/// `l`, with `c` fitted at `l = 1`; a violation is an error.
pub fn power_norm_profile(g: &Digraph, l_max: usize, dense_limit: usize) -> Result<NormProfile> {
    check_dense(g, dense_limit)?;
    let n = g.n();
    let t = transition_matrix(g);
    let pi = stationary(&t);
    if pi.col(0).iter().any(|x| !x.is_finite()) {
        return Err(Error::Disconnected);
    }
    let m1 = Mat::<f64>::from_fn(n, n, |i, j| t[(i, j)] - pi[(j, 0)]);
    let lambda = eigen_magnitudes(&m1)?.into_iter().fold(0.0, f64::max);
    let values = matrix_norm_profile(&m1, l_max)?;
    let c = if lambda > 1e-9 { values[0] / lambda } else { 0.0 };
    if lambda > 1e-9 {
        for (i, v) in values.iter().enumerate() {
            let l = (i + 1) as f64;
            let lhs = l * v.ln();
            let rhs = c.ln() + n as f64 * l.ln() + l * lambda.ln();
            if lhs > rhs + 1e-9 {
                return Err(Error::Invariant(format!("||T^{l}|| exceeds c l^n lambda^l")));
            }
        }
    }
    Ok(NormProfile { values, spectral_radius: lambda, c })
}
