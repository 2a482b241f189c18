//! Exact root data for the classical families B_n and C_n.
//!
//! Coordinates are the standard ones on the character lattice: for B_n the
//! simple roots are `e_i - e_{i+1}` and `e_n`, with coroots `e_i - e_{i+1}`
//! and `2 e_n`; C_n swaps the roles of roots and coroots. The pairing between
//! weights and coweights is the coordinate dot product, so every quantity in
//! this module is an exact rational.
//!
//! The Weyl group of either family is the hyperoctahedral group of signed
//! permutations, which is how [`WeylElement`] stores it.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the algebraic modules.
pub type Rational = Ratio<i64>;

/// Largest rank for which [`weyl_elements`] will enumerate the group.
pub const WEYL_ENUMERATION_LIMIT: usize = 8;

pub(crate) fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub(crate) fn qi(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Classical family of a root datum (or of the partition parity rule).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    B,
    C,
}

impl Family {
    /// Langlands dual family.
    pub fn dual(self) -> Family {
        match self {
            Family::B => Family::C,
            Family::C => Family::B,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
        }
    }
}

macro_rules! rational_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub Vec<Rational>);

        impl $name {
            pub fn new(coords: Vec<Rational>) -> Self {
                Self(coords)
            }

            pub fn from_ints(coords: &[i64]) -> Self {
                Self(coords.iter().map(|&c| qi(c)).collect())
            }

            pub fn zero(rank: usize) -> Self {
                Self(vec![Rational::zero(); rank])
            }

            /// Standard basis vector `e_i` (0-indexed).
            pub fn basis(rank: usize, i: usize) -> Self {
                let mut v = Self::zero(rank);
                v.0[i] = Rational::one();
                v
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[Rational] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|c| c.is_zero())
            }

            pub fn scale(&self, s: Rational) -> Self {
                Self(self.0.iter().map(|c| c * s).collect())
            }

            pub fn add(&self, other: &Self) -> Self {
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }

            pub fn sub(&self, other: &Self) -> Self {
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
            }

            pub fn to_f64(&self) -> Vec<f64> {
                self.0.iter().map(|c| ratio_to_f64(*c)).collect()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }

        impl Serialize for $name {
            fn serialize<S: serde::Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                use serde::ser::SerializeSeq;
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for c in &self.0 {
                    seq.serialize_element(&c.to_string())?;
                }
                seq.end()
            }
        }
    };
}

rational_vector!(Weight, "An element of the real weight space, with exact coordinates.");
rational_vector!(Coweight, "An element of the coweight space, with exact coordinates.");

pub fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Natural pairing between weights and coweights.
pub fn pairing(w: &Weight, cw: &Coweight) -> Result<Rational> {
    if w.rank() != cw.rank() {
        return Err(Error::DimensionMismatch {
            expected: w.rank(),
            got: cw.rank(),
        });
    }
    Ok(w.0.iter().zip(&cw.0).map(|(a, b)| a * b).sum())
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert_matrix(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `m x = b` exactly; `None` if `m` is singular.
pub fn solve_linear(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let inv = invert_matrix(m)?;
    Some(inv.iter().map(|row| dot(row, b)).collect())
}

/// Root datum of type B_n or C_n in standard coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub family: Family,
    pub rank: usize,
    pub simple_roots: Vec<Weight>,
    pub simple_coroots: Vec<Coweight>,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Inverse transpose of the Cartan matrix.
    pub cartan_bar: Vec<Vec<Rational>>,
    pub fundamental_coweights: Vec<Coweight>,
    pub weyl_vector: Weight,
}

/// Builds the root datum of the given family and rank.
pub fn build_root_datum(family: Family, rank: usize) -> Result<RootDatum> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let n = rank;
    let chain = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v[i + 1] = -Rational::one();
        v
    };
    let short_end = Weight::basis(n, n - 1);
    let long_end = short_end.scale(qi(2));

    let mut simple_roots: Vec<Weight> = (0..n - 1).map(|i| Weight(chain(i))).collect();
    let mut simple_coroots: Vec<Coweight> = (0..n - 1).map(|i| Coweight(chain(i))).collect();
    let (root_end, coroot_end) = match family {
        Family::B => (short_end, long_end),
        Family::C => (long_end, short_end),
    };
    simple_roots.push(root_end);
    simple_coroots.push(Coweight(coroot_end.0));

    let cartan: Vec<Vec<i64>> = simple_roots
        .iter()
        .map(|a| {
            simple_coroots
                .iter()
                .map(|c| {
                    let v = dot(&a.0, &c.0);
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    let cartan_t: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| qi(cartan[j][i])).collect())
        .collect();
    let cartan_bar = invert_matrix(&cartan_t).expect("Cartan matrix of a semisimple datum is invertible");

    let fundamental_coweights = (0..n)
        .map(|i| {
            let mut acc = Coweight::zero(n);
            for j in 0..n {
                acc = acc.add(&simple_coroots[j].scale(cartan_bar[i][j]));
            }
            acc
        })
        .collect();

    let weyl_vector = positive_roots(family, n)
        .iter()
        .fold(Weight::zero(n), |acc, r| acc.add(r))
        .scale(q(1, 2));

    Ok(RootDatum {
        family,
        rank,
        simple_roots,
        simple_coroots,
        cartan,
        cartan_bar,
        fundamental_coweights,
        weyl_vector,
    })
}

/// Positive roots of B_n (`e_i +- e_j`, `e_i`) or C_n (`e_i +- e_j`, `2 e_i`).
pub fn positive_roots(family: Family, rank: usize) -> Vec<Weight> {
    let n = rank;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = Weight::zero(n);
            minus.0[i] = qi(1);
            minus.0[j] = qi(-1);
            let mut plus = Weight::zero(n);
            plus.0[i] = qi(1);
            plus.0[j] = qi(1);
            out.push(minus);
            out.push(plus);
        }
        let e = Weight::basis(n, i);
        out.push(match family {
            Family::B => e,
            Family::C => e.scale(qi(2)),
        });
    }
    out
}

/// All roots (positive and negative).
pub fn all_roots(family: Family, rank: usize) -> Vec<Weight> {
    let pos = positive_roots(family, rank);
    let neg: Vec<Weight> = pos.iter().map(|r| r.scale(qi(-1))).collect();
    pos.into_iter().chain(neg).collect()
}

impl RootDatum {
    /// `<nu, alpha_i^vee>` for every simple coroot.
    pub fn coroot_pairings(&self, nu: &Weight) -> Result<Vec<Rational>> {
        self.simple_coroots.iter().map(|c| pairing(nu, c)).collect()
    }

    /// `<nu, omega_i^vee>` for every fundamental coweight.
    pub fn coweight_pairings(&self, nu: &Weight) -> Result<Vec<Rational>> {
        self.fundamental_coweights.iter().map(|c| pairing(nu, c)).collect()
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// True when `0 <= nu <= rho` in the dominance order.
    pub fn in_rho_interval(&self, nu: &Weight) -> Result<bool> {
        Ok(dominance_leq(&Weight::zero(self.rank), nu, self)?
            && dominance_leq(nu, &self.weyl_vector, self)?)
    }

    pub fn roots(&self) -> Vec<Weight> {
        all_roots(self.family, self.rank)
    }
}

/// `nu <= mu` iff `<nu - mu, omega_i^vee> <= 0` for every fundamental coweight.
pub fn dominance_leq(nu: &Weight, mu: &Weight, rd: &RootDatum) -> Result<bool> {
    rd.check_rank(nu)?;
    rd.check_rank(mu)?;
    let diff = nu.sub(mu);
    for cw in &rd.fundamental_coweights {
        if pairing(&diff, cw)? > Rational::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Signed permutation: `e_i` is sent to `signs[i] * e_{perm[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            perm: (0..rank).collect(),
            signs: vec![1; rank],
        }
    }

    /// Builds an element from a permutation and a sign vector; `None` when
    /// the data is not a signed permutation.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Option<Self> {
        let n = perm.len();
        if signs.len() != n || signs.iter().any(|s| *s != 1 && *s != -1) {
            return None;
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        Some(Self { perm, signs })
    }

    /// Reflection `v -> v - 2 (v.a)/(a.a) a` in the hyperplane orthogonal to
    /// `root`, if it is a signed permutation.
    pub fn reflection(root: &Weight) -> Option<Self> {
        let n = root.rank();
        let norm = dot(&root.0, &root.0);
        if norm.is_zero() {
            return None;
        }
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for k in 0..n {
            let e = Weight::basis(n, k);
            let f = qi(2) * dot(&e.0, &root.0) / norm;
            let image = e.sub(&root.scale(f));
            let nz: Vec<usize> = (0..n).filter(|&j| !image.0[j].is_zero()).collect();
            if nz.len() != 1 || image.0[nz[0]].abs() != Rational::one() {
                return None;
            }
            perm[k] = nz[0];
            signs[k] = if image.0[nz[0]].is_positive() { 1 } else { -1 };
        }
        Self::new(perm, signs)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i) && self.signs.iter().all(|&s| s == 1)
    }

    fn apply_coords(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for i in 0..v.len() {
            out[self.perm[i]] = v[i] * qi(self.signs[i] as i64);
        }
        out
    }

    pub fn act(&self, w: &Weight) -> Weight {
        Weight(self.apply_coords(&w.0))
    }

    pub fn act_coweight(&self, w: &Coweight) -> Coweight {
        Coweight(self.apply_coords(&w.0))
    }

    /// `self.compose(other)` acts as `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        Self { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        Self { perm, signs }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Every element of the Weyl group of `rd`, identity first.
pub fn weyl_elements(rd: &RootDatum) -> Result<Vec<WeylElement>> {
    let n = rd.rank;
    if n > WEYL_ENUMERATION_LIMIT {
        return Err(Error::RankTooLarge {
            rank: n,
            limit: WEYL_ENUMERATION_LIMIT,
        });
    }
    let perms = permutations(n);
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in &perms {
        for mask in 0u32..(1 << n) {
            let signs = (0..n)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            out.push(WeylElement {
                perm: p.clone(),
                signs,
            });
        }
    }
    Ok(out)
}

/// Closure of a set of generators under composition.
pub fn subgroup_closure(generators: &[WeylElement], rank: usize) -> Vec<WeylElement> {
    let mut seen = std::collections::BTreeSet::new();
    let id = WeylElement::identity(rank);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in generators {
            let h = s.compose(&g);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen.into_iter().collect()
}

/// The dominant element of the Weyl orbit of `nu`.
///
/// For B_n and C_n the dominant chamber is `x_1 >= ... >= x_n >= 0`, so the
/// representative is the sorted vector of absolute values.
pub fn dominant_representative(nu: &Weight, rd: &RootDatum) -> Result<Weight> {
    rd.check_rank(nu)?;
    let mut coords: Vec<Rational> = nu.0.iter().map(|c| c.abs()).collect();
    coords.sort_by(|a, b| b.cmp(a));
    Ok(Weight(coords))
}
