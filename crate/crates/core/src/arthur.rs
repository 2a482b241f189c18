//! Nilpotent orbits of the classical dual groups, Arthur SL2-types of
//! A-shapes, and the rate invariant attached to a weight.
//!
//! A nilpotent orbit of `Sp_{2n}(C)` (family C) or `SO_{2n+1}(C)` (family B)
//! is a partition of `N` obeying the usual parity rule. Its weighted Dynkin
//! diagram is read off from the dominant semisimple element `h` of an
//! SL2-triple, whose eigenvalues are the strings `m-1, m-3, ..., 1-m` for
//! each part `m`.
//!
//! The dual group's simple roots coincide with the simple coroots of the
//! group-side [`RootDatum`], so half the weighted Dynkin diagram of an orbit
//! for `Sp_4(C)` is exactly the vector `<nu, alpha_i^vee>` of a weight of
//! `SO_5`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{
    build_root_datum, dominance_leq, qi, solve_linear, Family, Rational, RootDatum, Weight,
};

/// A decay rate: either a finite value or infinity.
///
/// Variant order makes every finite value compare below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rate<T> {
    Finite(T),
    Infinite,
}

/// Exact rate, as produced by the algebraic rate formulas.
pub type RateValue = Rate<Rational>;

impl<T> Rate<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Rate::Infinite)
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            Rate::Finite(v) => Some(v),
            Rate::Infinite => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Rate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rate::Finite(v) => write!(f, "{v}"),
            Rate::Infinite => write!(f, "inf"),
        }
    }
}

impl<T: fmt::Display> Serialize for Rate<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl RateValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            Rate::Finite(v) => crate::lie::ratio_to_f64(*v),
            Rate::Infinite => f64::INFINITY,
        }
    }
}

/// A nilpotent orbit, stored as its partition (weakly decreasing).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NilpotentOrbit {
    pub family: Family,
    pub partition: Vec<u32>,
}

fn parity_ok(family: Family, parts: &[u32]) -> bool {
    // C: odd parts occur with even multiplicity. B: even parts do.
    let restricted = |m: u32| match family {
        Family::C => m % 2 == 1,
        Family::B => m.is_multiple_of(2),
    };
    let mut i = 0;
    while i < parts.len() {
        let m = parts[i];
        let mult = parts[i..].iter().take_while(|&&p| p == m).count();
        if restricted(m) && mult % 2 == 1 {
            return false;
        }
        i += mult;
    }
    true
}

impl NilpotentOrbit {
    /// Validates parity, the size parity of `N`, and sorts the parts.
    pub fn new(family: Family, mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} must be non-empty with positive parts")));
        }
        parts.sort_by(|a, b| b.cmp(a));
        let total: u32 = parts.iter().sum();
        let size_ok = match family {
            Family::C => total.is_multiple_of(2),
            Family::B => total % 2 == 1,
        };
        if !size_ok {
            return Err(Error::InvalidPartition(format!(
                "partition of {total} cannot label an orbit of type {family}"
            )));
        }
        if !parity_ok(family, &parts) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} violates the type {family} parity rule"
            )));
        }
        Ok(Self {
            family,
            partition: parts,
        })
    }

    pub fn size(&self) -> u32 {
        self.partition.iter().sum()
    }

    /// Rank of the dual group the orbit lives in.
    pub fn rank(&self) -> usize {
        (self.size() / 2) as usize
    }

    /// Dominant `h` of the SL2-triple, in the dual group's torus coordinates.
    pub fn dominant_h(&self) -> Vec<i64> {
        let mut eig: Vec<i64> = self
            .partition
            .iter()
            .flat_map(|&m| {
                let m = m as i64;
                (0..m).map(move |j| m - 1 - 2 * j)
            })
            .collect();
        eig.sort_by(|a, b| b.cmp(a));
        eig.truncate(self.rank());
        eig
    }
}

impl fmt::Display for NilpotentOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.partition.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub(crate) fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every nilpotent orbit of type `family` labelled by a partition of `n`.
///
/// Reverse lexicographic order is a linear extension of the dominance order,
/// so larger orbits come first. Returns an empty list when `n` has the wrong
/// parity for the family.
pub fn nilpotent_partitions(family: Family, n: u32) -> Vec<NilpotentOrbit> {
    partitions(n)
        .into_iter()
        .filter_map(|p| NilpotentOrbit::new(family, p).ok())
        .collect()
}

/// Weighted Dynkin diagram `(<alpha_i, h>)_i` in the dual group's root system.
pub fn weighted_dynkin(orbit: &NilpotentOrbit) -> Vec<i64> {
    let rank = orbit.rank();
    if rank == 0 {
        return Vec::new();
    }
    let h = orbit.dominant_h();
    let dual = build_root_datum(orbit.family, rank).expect("orbit has positive rank");
    dual.simple_roots
        .iter()
        .map(|a| {
            a.0.iter()
                .zip(&h)
                .map(|(x, &y)| x * qi(y))
                .sum::<Rational>()
                .to_integer()
        })
        .collect()
}

fn check_dual(orbit: &NilpotentOrbit, rd: &RootDatum) -> Result<()> {
    if rd.family != orbit.family.dual() || rd.rank != orbit.rank() {
        return Err(Error::FamilyMismatch(format!(
            "orbit {orbit} of type {} needs the group datum {}_{}, got {}_{}",
            orbit.family,
            orbit.family.dual(),
            orbit.rank(),
            rd.family,
            rd.rank
        )));
    }
    Ok(())
}

/// The weight `nu_sigma` with `<nu, alpha_i^vee>` equal to half the weighted
/// Dynkin diagram of `orbit`.
pub fn nu_sigma(orbit: &NilpotentOrbit, rd: &RootDatum) -> Result<Weight> {
    check_dual(orbit, rd)?;
    let target: Vec<Rational> = weighted_dynkin(orbit)
        .into_iter()
        .map(|x| Rational::new(x, 2))
        .collect();
    let m: Vec<Vec<Rational>> = rd.simple_coroots.iter().map(|c| c.0.clone()).collect();
    let coords = solve_linear(&m, &target)
        .ok_or_else(|| Error::Invariant("coroot matrix is singular".into()))?;
    Ok(Weight(coords))
}

fn require_interval(nu: &Weight, rd: &RootDatum) -> Result<()> {
    if !rd.in_rho_interval(nu)? {
        return Err(Error::OutsideInterval(nu.to_string()));
    }
    Ok(())
}

/// Closed-form rate invariant `2 max_i (1 - (C̄ w)_i / (C̄ 1)_i)^{-1}` where
/// `w = (<nu, alpha_i^vee>)_i`.
pub fn rate_invariant(nu: &Weight, rd: &RootDatum) -> Result<RateValue> {
    require_interval(nu, rd)?;
    let w = rd.coroot_pairings(nu)?;
    let n = rd.rank;
    let mut worst = Rational::zero();
    for i in 0..n {
        let cw: Rational = (0..n).map(|j| rd.cartan_bar[i][j] * w[j]).sum();
        let c1: Rational = rd.cartan_bar[i].iter().sum();
        worst = worst.max(cw / c1);
    }
    if worst >= Rational::one() {
        return Ok(Rate::Infinite);
    }
    Ok(Rate::Finite(qi(2) / (Rational::one() - worst)))
}

/// `inf { r >= 2 : nu <= (1 - 2/r) rho }`, found constraint by constraint
/// from coweight pairings and confirmed with the dominance test.
pub fn rate_oracle(nu: &Weight, rd: &RootDatum) -> Result<RateValue> {
    require_interval(nu, rd)?;
    let rho = &rd.weyl_vector;
    let mut threshold = Rate::Finite(qi(2));
    for cw in &rd.fundamental_coweights {
        let a = crate::lie::pairing(nu, cw)?;
        let b = crate::lie::pairing(rho, cw)?;
        // a <= (1 - 2/r) b  <=>  r >= 2b / (b - a), or never when a = b
        let t = if a == b {
            Rate::Infinite
        } else {
            Rate::Finite(qi(2) * b / (b - a))
        };
        threshold = threshold.max(t);
    }
    if let Rate::Finite(r) = threshold {
        let scaled = rho.scale(Rational::one() - qi(2) / r);
        if !dominance_leq(nu, &scaled, rd)? {
            return Err(Error::Invariant(format!("{nu} not below (1-2/{r}) rho")));
        }
        if r > qi(2) {
            let below = r - Rational::new(1, 1_000);
            let scaled = rho.scale(Rational::one() - qi(2) / below);
            if dominance_leq(nu, &scaled, rd)? {
                return Err(Error::Invariant(format!("threshold {r} for {nu} is not minimal")));
            }
        }
    }
    Ok(threshold)
}

/// Name of an A-shape in the `SO_5` catalog, or a generic label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ShapeName {
    G,
    Y,
    F,
    B,
    Q,
    P,
    Generic,
}

impl fmt::Display for ShapeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ShapeName::G => "G",
            ShapeName::Y => "Y",
            ShapeName::F => "F",
            ShapeName::B => "B",
            ShapeName::Q => "Q",
            ShapeName::P => "P",
            ShapeName::Generic => "generic",
        };
        f.write_str(s)
    }
}

/// A-shape: pairs `(n_i, m_i)` of block size and SL2 dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AShape {
    pub name: ShapeName,
    pub pairs: Vec<(u32, u32)>,
}

impl AShape {
    pub fn new(name: ShapeName, pairs: Vec<(u32, u32)>) -> Self {
        Self { name, pairs }
    }

    pub fn size(&self) -> u32 {
        self.pairs.iter().map(|(n, m)| n * m).sum()
    }
}

/// Partition of `N` formed by `m_i` repeated `n_i` times, sorted descending.
pub fn arthur_partition_of_shape(shape: &AShape, family: Family, n: u32) -> Result<NilpotentOrbit> {
    if shape.pairs.is_empty() || shape.pairs.iter().any(|&(a, b)| a == 0 || b == 0) {
        return Err(Error::InvalidShape(format!("{:?} has empty or zero entries", shape.pairs)));
    }
    if shape.size() != n {
        return Err(Error::InvalidShape(format!(
            "{:?} sums to {}, expected {n}",
            shape.pairs,
            shape.size()
        )));
    }
    let parts = shape
        .pairs
        .iter()
        .flat_map(|&(mult, m)| std::iter::repeat_n(m, mult as usize))
        .collect();
    NilpotentOrbit::new(family, parts)
}

/// The six A-shapes of `SO_5`.
pub fn so5_shapes() -> Vec<AShape> {
    vec![
        AShape::new(ShapeName::G, vec![(4, 1)]),
        AShape::new(ShapeName::Y, vec![(2, 1), (2, 1)]),
        AShape::new(ShapeName::F, vec![(1, 4)]),
        AShape::new(ShapeName::B, vec![(1, 2), (1, 2)]),
        AShape::new(ShapeName::Q, vec![(2, 2)]),
        AShape::new(ShapeName::P, vec![(2, 1), (1, 2)]),
    ]
}

/// One row of the `SO_5` shape catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeRow {
    pub shape: AShape,
    pub orbit: NilpotentOrbit,
    pub nu: Weight,
    pub rate: RateValue,
}

/// Each `SO_5` A-shape with its Arthur SL2-type and rate.
pub fn shape_catalog_so5() -> Vec<ShapeRow> {
    let rd = build_root_datum(Family::B, 2).expect("rank 2");
    so5_shapes()
        .into_iter()
        .map(|shape| {
            let orbit = arthur_partition_of_shape(&shape, Family::C, 4).expect("catalog shapes are valid");
            let nu = nu_sigma(&orbit, &rd).expect("C2 orbit on B2");
            let rate = rate_invariant(&nu, &rd).expect("nu_sigma lies in [0, rho]");
            ShapeRow {
                shape,
                orbit,
                nu,
                rate,
            }
        })
        .collect()
}

/// Conjugacy class of a standard Levi subgroup of `Sp_4(C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Levi {
    /// Torus (Borel).
    T,
    /// `Sp_2 x GL_1` (Klingen).
    M,
    /// `GL_2` (Siegel).
    S,
    /// The whole group.
    G,
}

impl Levi {
    pub const ALL: [Levi; 4] = [Levi::T, Levi::M, Levi::S, Levi::G];

    pub fn parabolic_name(&self) -> &'static str {
        match self {
            Levi::T => "Borel",
            Levi::M => "Klingen",
            Levi::S => "Siegel",
            Levi::G => "full",
        }
    }
}

impl fmt::Display for Levi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Levi::T => "T",
            Levi::M => "M",
            Levi::S => "S",
            Levi::G => "G",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Levi {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" | "borel" => Ok(Levi::T),
            "M" | "m" | "klingen" => Ok(Levi::M),
            "S" | "s" | "siegel" => Ok(Levi::S),
            "G" | "g" | "full" => Ok(Levi::G),
            _ => Err(Error::InvalidArgument(format!("unknown Levi label {s:?}"))),
        }
    }
}

/// Levi subgroup of `Sp_4(C)` in which a nilpotent orbit is principal.
pub fn principal_levi_of(orbit: &NilpotentOrbit) -> Result<Levi> {
    if orbit.family != Family::C || orbit.size() != 4 {
        return Err(Error::FamilyMismatch(format!("{orbit} is not an orbit of Sp_4(C)")));
    }
    match orbit.partition.as_slice() {
        [4] => Ok(Levi::G),
        [2, 2] => Ok(Levi::S),
        [2, 1, 1] => Ok(Levi::M),
        [1, 1, 1, 1] => Ok(Levi::T),
        _ => unreachable!("all C2 orbits are listed"),
    }
}

fn dim_so_odd(m: i64) -> i64 {
    // dim SO_{2m+1}
    m * (2 * m + 1)
}

/// Deficiencies `(delta, delta_2)` of the GSK type `nu(2k) + nu(1)^{2(n-k)}`
/// for `SO_{2n+1}`.
pub fn gsk_deficiencies(k: u32, n: u32) -> Result<(i64, i64)> {
    if k < 1 || k >= n {
        return Err(Error::InvalidArgument(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    let (k, n) = (k as i64, n as i64);
    let twice_delta = dim_so_odd(n) - dim_so_odd(k) - dim_so_odd(n - k);
    debug_assert_eq!(twice_delta % 2, 0);
    let delta = twice_delta / 2;
    let delta2 = delta + dim_so_odd(n - k);
    let closed = (2 * n + 1) * (n - k);
    if delta2 != closed {
        return Err(Error::Invariant(format!("delta_2 = {delta2} but (2n+1)(n-k) = {closed}")));
    }
    Ok((delta, delta2))
}

/// Compares two orbits of the same size in the dominance order of partitions.
pub fn partition_dominance(a: &[u32], b: &[u32]) -> Option<Ordering> {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0u32, 0u32);
    let (mut le, mut ge) = (true, true);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        le &= sa <= sb;
        ge &= sa >= sb;
    }
    match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::q;

    fn orbit(parts: &[u32]) -> NilpotentOrbit {
        NilpotentOrbit::new(Family::C, parts.to_vec()).unwrap()
    }

    #[test]
    fn sp4_orbits() {
        let got: Vec<Vec<u32>> = nilpotent_partitions(Family::C, 4)
            .into_iter()
            .map(|o| o.partition)
            .collect();
        assert_eq!(got, vec![vec![4], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(nilpotent_partitions(Family::C, 2).len(), 2);
    }

    #[test]
    fn parity_rejections() {
        assert!(NilpotentOrbit::new(Family::C, vec![3, 1]).is_err());
        assert!(NilpotentOrbit::new(Family::B, vec![4, 1]).is_err());
        assert!(NilpotentOrbit::new(Family::B, vec![2, 2, 1]).is_ok());
        assert!(NilpotentOrbit::new(Family::C, vec![3]).is_err());
        assert!(nilpotent_partitions(Family::C, 5).is_empty());
    }

    #[test]
    fn weighted_dynkin_table() {
        assert_eq!(weighted_dynkin(&orbit(&[4])), vec![2, 2]);
        assert_eq!(weighted_dynkin(&orbit(&[2, 2])), vec![0, 2]);
        assert_eq!(weighted_dynkin(&orbit(&[2, 1, 1])), vec![1, 0]);
        assert_eq!(weighted_dynkin(&orbit(&[1, 1, 1, 1])), vec![0, 0]);
    }

    #[test]
    fn sp6_non_pl_orbit_weight() {
        assert_eq!(weighted_dynkin(&orbit(&[4, 2])), vec![2, 0, 2]);
    }

    #[test]
    fn nu_sigma_values() {
        let rd = build_root_datum(Family::B, 2).unwrap();
        assert_eq!(nu_sigma(&orbit(&[2, 1, 1]), &rd).unwrap(), Weight::new(vec![q(1, 2), qi(0)]));
        assert_eq!(nu_sigma(&orbit(&[1, 1, 1, 1]), &rd).unwrap(), Weight::zero(2));
        assert_eq!(nu_sigma(&orbit(&[4]), &rd).unwrap(), rd.weyl_vector);
        let wrong = build_root_datum(Family::C, 2).unwrap();
        assert!(matches!(nu_sigma(&orbit(&[4]), &wrong), Err(Error::FamilyMismatch(_))));
    }

    #[test]
    fn so5_rate_values() {
        let rd = build_root_datum(Family::B, 2).unwrap();
        let cases = [
            (Weight::zero(2), Rate::Finite(qi(2))),
            (Weight::new(vec![q(1, 2), q(1, 2)]), Rate::Finite(qi(4))),
            (Weight::new(vec![q(1, 2), qi(0)]), Rate::Finite(qi(3))),
            (rd.weyl_vector.clone(), Rate::Infinite),
        ];
        for (nu, want) in cases {
            assert_eq!(rate_invariant(&nu, &rd).unwrap(), want, "{nu}");
            assert_eq!(rate_oracle(&nu, &rd).unwrap(), want, "{nu}");
        }
    }

    #[test]
    fn rate_rejects_outside_interval() {
        let rd = build_root_datum(Family::B, 2).unwrap();
        let nu = Weight::from_ints(&[2, 0]);
        assert!(matches!(rate_invariant(&nu, &rd), Err(Error::OutsideInterval(_))));
        assert!(matches!(rate_oracle(&nu, &rd), Err(Error::OutsideInterval(_))));
        let neg = Weight::from_ints(&[-1, 0]);
        assert!(rate_invariant(&neg, &rd).is_err());
    }

    #[test]
    fn infinity_orders_above_everything() {
        assert!(Rate::Infinite > Rate::Finite(qi(1_000_000)));
        assert!(Rate::Finite(qi(3)) < Rate::Finite(qi(4)));
        assert_eq!(Rate::<Rational>::Infinite.to_string(), "inf");
        assert_eq!(Rate::Finite(q(20, 3)).to_string(), "20/3");
    }

    #[test]
    fn catalog_rows() {
        let rows = shape_catalog_so5();
        let summary: Vec<(String, Vec<u32>, RateValue)> = rows
            .iter()
            .map(|r| (r.shape.name.to_string(), r.orbit.partition.clone(), r.rate))
            .collect();
        let two = Rate::Finite(qi(2));
        let four = Rate::Finite(qi(4));
        assert_eq!(
            summary,
            vec![
                ("G".into(), vec![1, 1, 1, 1], two),
                ("Y".into(), vec![1, 1, 1, 1], two),
                ("F".into(), vec![4], Rate::Infinite),
                ("B".into(), vec![2, 2], four),
                ("Q".into(), vec![2, 2], four),
                ("P".into(), vec![2, 1, 1], Rate::Finite(qi(3))),
            ]
        );
    }

    #[test]
    fn shape_partitions() {
        let p = AShape::new(ShapeName::P, vec![(2, 1), (1, 2)]);
        assert_eq!(arthur_partition_of_shape(&p, Family::C, 4).unwrap().partition, vec![2, 1, 1]);
        let g = AShape::new(ShapeName::G, vec![(4, 1)]);
        assert_eq!(arthur_partition_of_shape(&g, Family::C, 4).unwrap().partition, vec![1, 1, 1, 1]);
        let bad = AShape::new(ShapeName::Generic, vec![(1, 3)]);
        assert!(matches!(arthur_partition_of_shape(&bad, Family::C, 4), Err(Error::InvalidShape(_))));
    }

    #[test]
    fn principal_levis() {
        assert_eq!(principal_levi_of(&orbit(&[2, 2])).unwrap(), Levi::S);
        assert_eq!(principal_levi_of(&orbit(&[1, 1, 1, 1])).unwrap(), Levi::T);
        assert_eq!(principal_levi_of(&orbit(&[4])).unwrap(), Levi::G);
        assert_eq!(principal_levi_of(&orbit(&[2, 1, 1])).unwrap(), Levi::M);
        assert!(principal_levi_of(&orbit(&[2, 2, 2])).is_err());
    }

    #[test]
    fn gsk_values() {
        assert_eq!(gsk_deficiencies(1, 2).unwrap(), (2, 5));
        assert_eq!(gsk_deficiencies(1, 3).unwrap(), (4, 14));
        for n in 2..=6 {
            for k in 1..n {
                let (_, d2) = gsk_deficiencies(k, n).unwrap();
                assert_eq!(d2, ((2 * n + 1) * (n - k)) as i64);
            }
        }
        assert!(gsk_deficiencies(2, 2).is_err());
        assert!(gsk_deficiencies(0, 2).is_err());
    }

    #[test]
    fn dominance_on_partitions() {
        assert_eq!(partition_dominance(&[4], &[2, 2]), Some(Ordering::Greater));
        assert_eq!(partition_dominance(&[3, 3], &[4, 1, 1]), None);
    }
}
