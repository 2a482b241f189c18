//! Cohomological A-packets of the three real forms of `SO_5`.
//!
//! Everything is computed on the compact torus in `B_2` coordinates. The
//! compact Weyl group `W_K` is generated by reflections in the compact roots
//! of each form; the Levi `L̂` of the dual group is identified with the
//! reflection subgroup `W_L` (Klingen `M̂` with `<s_{e2}>`, Siegel `Ŝ` with
//! `<s_{e1-e2}>`). Packet members are the `W_K`-orbits of θ-stable parabolic
//! directions `λ`, equivalently the double cosets `W_K \ W / W_L`. The Cartan
//! involution acts trivially on the compact torus, so `W` and `W_L` carry no
//! θ-twist.
//!
//! For `λ ≠ 0` the cohomology of `A_q(λ)` with trivial coefficients sits in
//! degrees `R` and `dim p - R`, where `R` counts noncompact roots positive on
//! `λ`. When `L̂ = Ĝ` the packet is the trivial representation, whose degrees
//! are the Betti numbers of the compact dual and are tabulated.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::arthur::Levi;
use crate::error::{Error, Result};
use crate::lie::{
    all_roots, build_root_datum, qi, subgroup_closure, weyl_elements, Family, Weight, WeylElement,
};

/// Real forms of `SO_5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RealForm {
    /// `SO(3,2)`.
    Split,
    /// `SO(1,4)`.
    Hyperbolic,
    /// `SO(5)`.
    Compact,
}

impl RealForm {
    pub const ALL: [RealForm; 3] = [RealForm::Split, RealForm::Hyperbolic, RealForm::Compact];

    pub fn signature(&self) -> (u32, u32) {
        match self {
            RealForm::Split => (3, 2),
            RealForm::Hyperbolic => (1, 4),
            RealForm::Compact => (5, 0),
        }
    }

    pub fn is_compact_root(&self, root: &Weight) -> bool {
        let c = root.coords();
        let (a, b) = (c[0], c[1]);
        match self {
            RealForm::Split => b.is_zero(),
            RealForm::Hyperbolic => !a.is_zero() && !b.is_zero(),
            RealForm::Compact => true,
        }
    }

    pub fn compact_roots(&self) -> Vec<Weight> {
        all_roots(Family::B, 2)
            .into_iter()
            .filter(|r| self.is_compact_root(r))
            .collect()
    }

    pub fn noncompact_roots(&self) -> Vec<Weight> {
        all_roots(Family::B, 2)
            .into_iter()
            .filter(|r| !self.is_compact_root(r))
            .collect()
    }

    /// Rank of the maximal compact subgroup `K`.
    pub fn rank_k(&self) -> u32 {
        // S(O(p) x O(q)) has rank floor(p/2) + floor(q/2).
        let (p, q) = self.signature();
        p / 2 + q / 2
    }

    pub fn dim_p(&self) -> u32 {
        let (p, q) = self.signature();
        p * q
    }

    fn trivial_rep_degrees(&self) -> BTreeSet<u32> {
        match self {
            RealForm::Split => [0, 2, 4, 6].into(),
            RealForm::Hyperbolic => [0, 4].into(),
            RealForm::Compact => [0].into(),
        }
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RealForm::Split => "split",
            RealForm::Hyperbolic => "hyperbolic",
            RealForm::Compact => "compact",
        };
        f.write_str(s)
    }
}

impl FromStr for RealForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "split" | "so32" | "so(3,2)" => Ok(RealForm::Split),
            "hyperbolic" | "so14" | "so(1,4)" => Ok(RealForm::Hyperbolic),
            "compact" | "so5" | "so(5)" => Ok(RealForm::Compact),
            _ => Err(Error::InvalidArgument(format!("unknown real form {s:?}"))),
        }
    }
}

fn b2_weyl() -> Vec<WeylElement> {
    weyl_elements(&build_root_datum(Family::B, 2).expect("rank 2")).expect("rank 2")
}

fn reflection(coords: &[i64]) -> WeylElement {
    WeylElement::reflection(&Weight::from_ints(coords)).expect("B2 roots give signed permutations")
}

/// `W(K, T^c)`: generated by reflections in the compact roots of `form`.
pub fn weyl_k(form: RealForm) -> Vec<WeylElement> {
    let gens: Vec<WeylElement> = form
        .compact_roots()
        .iter()
        .map(|r| WeylElement::reflection(r).expect("B2 roots give signed permutations"))
        .collect();
    subgroup_closure(&gens, 2)
}

/// Reflection subgroup of `W` attached to a standard Levi of `Sp_4(C)`.
pub fn levi_subgroup(levi: Levi) -> Vec<WeylElement> {
    let gens = match levi {
        Levi::T => vec![],
        Levi::M => vec![reflection(&[0, 1])],
        Levi::S => vec![reflection(&[1, -1])],
        Levi::G => vec![reflection(&[0, 1]), reflection(&[1, -1])],
    };
    subgroup_closure(&gens, 2)
}

/// Number of double cosets `W_K \ W / W_L`, by explicit partition of `W`.
pub fn packet_size(form: RealForm, levi: Levi) -> usize {
    let w = b2_weyl();
    let k = weyl_k(form);
    let l = levi_subgroup(levi);
    let mut covered: BTreeSet<WeylElement> = BTreeSet::new();
    let mut count = 0;
    for g in &w {
        if covered.contains(g) {
            continue;
        }
        count += 1;
        for a in &k {
            for b in &l {
                covered.insert(a.compose(g).compose(b));
            }
        }
    }
    count
}

fn admissible_directions(levi: Levi) -> Vec<Weight> {
    let mut dirs: Vec<Weight> = match levi {
        Levi::T => {
            let regular = Weight::from_ints(&[2, 1]);
            let set: BTreeSet<Vec<_>> = b2_weyl().iter().map(|g| g.act(&regular).0).collect();
            set.into_iter().map(Weight).collect()
        }
        Levi::M => [[1, 0], [-1, 0], [0, 1], [0, -1]].iter().map(|c| Weight::from_ints(c)).collect(),
        Levi::S => [[1, 1], [1, -1], [-1, 1], [-1, -1]].iter().map(|c| Weight::from_ints(c)).collect(),
        Levi::G => vec![Weight::zero(2)],
    };
    dirs.sort_by(|a, b| b.0.cmp(&a.0));
    dirs
}

/// One `λ` per `W_K`-orbit of admissible directions, taking the
/// lexicographically largest element of each orbit.
pub fn theta_parabolic_reps(form: RealForm, levi: Levi) -> Vec<Weight> {
    let k = weyl_k(form);
    let mut covered: BTreeSet<Weight> = BTreeSet::new();
    let mut reps = Vec::new();
    for dir in admissible_directions(levi) {
        if covered.contains(&dir) {
            continue;
        }
        for g in &k {
            covered.insert(g.act(&dir));
        }
        reps.push(dir);
    }
    reps
}

/// Combinatorial description of a cohomological A-packet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PacketReport {
    pub form: RealForm,
    pub levi: Levi,
    pub size: usize,
    pub representatives: Vec<Weight>,
    pub degree_sets: Vec<BTreeSet<u32>>,
    pub total_dim: usize,
}

/// `dim(u ∩ p)`: noncompact roots strictly positive on `lambda`.
pub fn lowest_degree(form: RealForm, lambda: &Weight) -> u32 {
    form.noncompact_roots()
        .iter()
        .filter(|r| r.0.iter().zip(&lambda.0).map(|(a, b)| a * b).sum::<crate::lie::Rational>() > qi(0))
        .count() as u32
}

pub fn cohomology_degrees(form: RealForm, levi: Levi) -> PacketReport {
    let reps = theta_parabolic_reps(form, levi);
    let degree_sets: Vec<BTreeSet<u32>> = reps
        .iter()
        .map(|lambda| {
            if lambda.is_zero() {
                form.trivial_rep_degrees()
            } else {
                let r = lowest_degree(form, lambda);
                [r, form.dim_p() - r].into()
            }
        })
        .collect();
    let total_dim = degree_sets.iter().map(|s| s.len()).sum();
    PacketReport {
        form,
        levi,
        size: reps.len(),
        representatives: reps,
        degree_sets,
        total_dim,
    }
}

/// Checks `Σ |degree set| = 2^{rank G - rank K} · |W_K \ W|`.
pub fn total_dim_check(form: RealForm, levi: Levi) -> bool {
    let report = cohomology_degrees(form, levi);
    let w = b2_weyl().len();
    let k = weyl_k(form).len();
    let expected = (1usize << (2 - form.rank_k())) * (w / k);
    report.total_dim == expected
}

/// All twelve `(form, levi)` reports.
pub fn packet_table() -> Vec<PacketReport> {
    RealForm::ALL
        .iter()
        .flat_map(|&f| Levi::ALL.iter().map(move |&l| cohomology_degrees(f, l)))
        .collect()
}
