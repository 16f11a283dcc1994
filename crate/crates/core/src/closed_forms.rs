//! Closed-form strong metric dimension of the order supergraph, enhanced
//! power graph and reduced power graph, with the neighbourhood-class
//! predicates the formulas rest on.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::arith::{big_omega, prime_power_base};
use crate::error::{Error, Result};
use crate::graph::GraphFamily;
use crate::group::{CyclicLattice, ElementOrderProfile, FiniteGroup};

/// Which case of a formula produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The trivial group: one vertex, dimension 0.
    Degenerate,
    /// Supergraph of a p-group: complete.
    PGroup,
    /// Supergraph of a cyclic group that is not a p-group.
    CyclicNonP,
    /// Supergraph of a CP-group that is not a p-group.
    CpNonP,
    /// Supergraph of a non-CP group whose exponent is not an element order.
    NonCp,
    /// Supergraph of a non-cyclic, non-CP group with an element of order
    /// `exp(G)`: the identity and those elements share a neighbourhood, so
    /// the quotient clique loses one vertex.
    NonCpExponentRealized,
    /// Enhanced power graph: distinct membership signatures per maximal
    /// cyclic subgroup.
    MaximalCyclicSignatures,
    /// Reduced power graph of `Z_{2^k}`.
    CyclicTwoGroup,
    /// Reduced power graph of a generalized quaternion 2-group.
    GeneralizedQuaternion,
    /// Reduced power graph of any other group.
    General,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Degenerate => "degenerate",
            Branch::PGroup => "p_group",
            Branch::CyclicNonP => "cyclic_non_p",
            Branch::CpNonP => "cp_non_p",
            Branch::NonCp => "non_cp",
            Branch::NonCpExponentRealized => "non_cp_exponent_realized",
            Branch::MaximalCyclicSignatures => "maximal_cyclic_signatures",
            Branch::CyclicTwoGroup => "cyclic_two_group",
            Branch::GeneralizedQuaternion => "generalized_quaternion",
            Branch::General => "general",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaReport {
    pub family: GraphFamily,
    pub branch: Branch,
    pub value: usize,
    pub n: usize,
    pub omega_n: u32,
    pub lambda: Option<u32>,
    pub exponent: u64,
    pub max_big_omega: u32,
    /// Predicted clique number of the neighbourhood quotient.
    pub omega_reduced: usize,
    /// Predicted clique number of the graph itself, where known.
    #[serde(skip)]
    pub omega_graph: Option<usize>,
}

impl FormulaReport {
    fn new(
        family: GraphFamily,
        profile: &ElementOrderProfile,
        branch: Branch,
        omega_reduced: usize,
    ) -> Self {
        let n = profile.order as usize;
        FormulaReport {
            family,
            branch,
            value: n - omega_reduced,
            n,
            omega_n: big_omega(profile.order),
            lambda: profile.lambda,
            exponent: profile.exponent,
            max_big_omega: profile.max_big_omega(),
            omega_reduced,
            omega_graph: None,
        }
    }
}

/// Dispatches to the formula for `family`; the plain power graph has none.
pub fn closed_form(group: &FiniteGroup, family: GraphFamily) -> Result<FormulaReport> {
    match family {
        GraphFamily::Supergraph => Ok(sdim_order_supergraph(group)),
        GraphFamily::Enhanced => Ok(sdim_enhanced(group)),
        GraphFamily::ReducedPower => Ok(sdim_reduced(group)),
        GraphFamily::Power => Err(Error::Precondition(
            "no closed form for the power graph; use an engine method".into(),
        )),
    }
}

/// Order supergraph. Values are `n - omega(R)` with `omega(R)` equal to 1 for
/// p-groups, `big_omega(n)` for cyclic groups, 2 for other CP-groups, and
/// `lambda + 1` otherwise, dropping to `lambda` when `exp(G)` is an element
/// order.
pub fn sdim_order_supergraph(group: &FiniteGroup) -> FormulaReport {
    let profile = group.profile();
    supergraph_formula(&profile)
}

pub(crate) fn supergraph_formula(profile: &ElementOrderProfile) -> FormulaReport {
    let flags = &profile.flags;
    let (branch, omega_reduced) = if profile.order == 1 {
        (Branch::Degenerate, 1)
    } else if flags.is_p_group {
        (Branch::PGroup, 1)
    } else if flags.is_cyclic {
        (Branch::CyclicNonP, big_omega(profile.order) as usize)
    } else if flags.is_cp_group {
        (Branch::CpNonP, 2)
    } else {
        let lambda = profile.lambda.expect("non-CP groups have a lambda") as usize;
        if profile.exponent_realized() {
            (Branch::NonCpExponentRealized, lambda)
        } else {
            (Branch::NonCp, lambda + 1)
        }
    };
    FormulaReport::new(GraphFamily::Supergraph, profile, branch, omega_reduced)
}

/// Whether `x` and `y` have equal closed neighbourhoods in the order
/// supergraph, decided from element orders alone. Requires `|G|` to have at
/// least two prime divisors.
pub fn supergraph_same_class(group: &FiniteGroup, x: usize, y: usize) -> Result<bool> {
    let profile = group.profile();
    supergraph_same_class_with(&profile, x, y)
}

pub fn supergraph_same_class_with(
    profile: &ElementOrderProfile,
    x: usize,
    y: usize,
) -> Result<bool> {
    let n = profile.order as usize;
    for e in [x, y] {
        if e >= n {
            return Err(Error::ElementOutOfRange {
                element: e,
                order: n,
            });
        }
    }
    if x == y {
        return Err(Error::Precondition("elements must be distinct".into()));
    }
    if profile.flags.is_p_group {
        return Err(Error::Precondition(
            "the group order must have two distinct prime divisors (the supergraph of a p-group is complete)"
                .into(),
        ));
    }
    let (a, b) = (profile.order_of(x), profile.order_of(y));
    if a == b {
        return Ok(true);
    }
    let (small, large) = (a.min(b), a.max(b));
    if small == 1 && large == profile.exponent {
        return Ok(true);
    }
    match (prime_power_base(small), prime_power_base(large)) {
        (Some(p), Some(q)) if p == q => Ok(profile
            .prime_divisors()
            .iter()
            .filter(|&&r| r != p)
            .all(|&r| !profile.pi_e.contains(&(small * r)))),
        _ => Ok(false),
    }
}

/// Enhanced power graph: `n` minus the largest number of distinct
/// membership signatures `M_x` found inside one maximal cyclic subgroup.
pub fn sdim_enhanced(group: &FiniteGroup) -> FormulaReport {
    let profile = group.profile();
    let lattice = group.cyclic_lattice();
    enhanced_formula(&profile, &lattice)
}

pub(crate) fn enhanced_formula(
    profile: &ElementOrderProfile,
    lattice: &CyclicLattice,
) -> FormulaReport {
    let classes = max_signature_count(lattice);
    let branch = if profile.order == 1 {
        Branch::Degenerate
    } else {
        Branch::MaximalCyclicSignatures
    };
    FormulaReport::new(GraphFamily::Enhanced, profile, branch, classes)
}

fn max_signature_count(lattice: &CyclicLattice) -> usize {
    lattice
        .maximal_subgroups()
        .map(|m| {
            let mut sigs: Vec<&FixedBitSet> =
                m.elements.ones().map(|x| &lattice.membership[x]).collect();
            sigs.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
            sigs.dedup();
            sigs.len()
        })
        .max()
        .unwrap_or(1)
}

/// `{x : M_x = M_g}`.
pub fn enhanced_signature_class(lattice: &CyclicLattice, g: usize) -> FixedBitSet {
    let n = lattice.generated.len();
    let mut out = FixedBitSet::with_capacity(n);
    for x in 0..n {
        if lattice.membership[x] == lattice.membership[g] {
            out.insert(x);
        }
    }
    out
}

/// `C(g)`: the intersection of the maximal cyclic subgroups containing `g`,
/// minus every maximal cyclic subgroup that does not.
pub fn enhanced_class_by_set_algebra(lattice: &CyclicLattice, g: usize) -> FixedBitSet {
    let n = lattice.generated.len();
    let mut inside = FixedBitSet::with_capacity(n);
    inside.insert_range(..);
    let mut outside = FixedBitSet::with_capacity(n);
    for slot in 0..lattice.maximals.len() {
        let m = &lattice.maximal(slot).elements;
        if lattice.membership[g].contains(slot) {
            inside.intersect_with(m);
        } else {
            outside.union_with(m);
        }
    }
    inside.difference_with(&outside);
    inside
}

/// Non-cyclic abelian p-group of exponent `p^m`: `n - m - 1`.
pub fn sdim_enhanced_abelian_p(group: &FiniteGroup) -> Result<usize> {
    let profile = group.profile();
    let flags = &profile.flags;
    if flags.prime.is_none() || flags.is_cyclic || !group.is_abelian() {
        return Err(Error::Precondition(format!(
            "{} is not a non-cyclic abelian p-group",
            group.name()
        )));
    }
    let m = big_omega(profile.exponent) as usize;
    Ok(group.order() - m - 1)
}

/// Reduced power graph: `2^k - k` for `Z_{2^k}`, `2^{t+2} - t - 1` for the
/// generalized quaternion group of order `2^{t+2}`, and
/// `n - max big_omega(pi_e) - 1` otherwise.
pub fn sdim_reduced(group: &FiniteGroup) -> FormulaReport {
    reduced_formula(&group.profile())
}

pub(crate) fn reduced_formula(profile: &ElementOrderProfile) -> FormulaReport {
    let max_omega = profile.max_big_omega() as usize;
    let (branch, omega_reduced) = if profile.order == 1 {
        (Branch::Degenerate, 1)
    } else if let Some(k) = profile.cyclic_two_group_rank() {
        (Branch::CyclicTwoGroup, k as usize)
    } else if let Some(t) = profile.flags.generalized_quaternion {
        (Branch::GeneralizedQuaternion, t as usize + 1)
    } else {
        (Branch::General, max_omega + 1)
    };
    let mut report = FormulaReport::new(GraphFamily::ReducedPower, profile, branch, omega_reduced);
    report.omega_graph = Some(max_omega + 1);
    report
}

/// Whether `x` and `y` have equal closed neighbourhoods in the reduced power
/// graph: only the identity and the unique involution of a cyclic or
/// generalized quaternion 2-group do.
pub fn reduced_power_same_class(group: &FiniteGroup, x: usize, y: usize) -> Result<bool> {
    reduced_power_same_class_with(&group.profile(), x, y)
}

pub fn reduced_power_same_class_with(
    profile: &ElementOrderProfile,
    x: usize,
    y: usize,
) -> Result<bool> {
    let n = profile.order as usize;
    for e in [x, y] {
        if e >= n {
            return Err(Error::ElementOutOfRange {
                element: e,
                order: n,
            });
        }
    }
    if x == y {
        return Err(Error::Precondition("elements must be distinct".into()));
    }
    let two_group_kind =
        profile.cyclic_two_group_rank().is_some() || profile.flags.generalized_quaternion.is_some();
    Ok(match (two_group_kind, profile.flags.unique_involution) {
        (true, Some(a)) => (x.min(y), x.max(y)) == (0, a) || (x.min(y), x.max(y)) == (a, 0),
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> FiniteGroup {
        FiniteGroup::from_descriptor(s).unwrap()
    }

    fn element_of_order(g: &FiniteGroup, o: u64) -> usize {
        g.elements().find(|&a| g.element_order(a) == o).unwrap()
    }

    #[test]
    fn supergraph_values() {
        let cases = [
            ("Z9", 8, Branch::PGroup),
            ("Z6", 4, Branch::CyclicNonP),
            ("S3", 4, Branch::CpNonP),
            ("Q12", 9, Branch::NonCp),
            ("D12", 10, Branch::NonCpExponentRealized),
            ("Z1", 0, Branch::Degenerate),
        ];
        for (s, value, branch) in cases {
            let r = sdim_order_supergraph(&group(s));
            assert_eq!((r.value, r.branch), (value, branch), "{s}");
        }
    }

    #[test]
    fn supergraph_report_fields() {
        let r = sdim_order_supergraph(&group("Z6"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["value"], 4);
        assert_eq!(json["branch"], "cyclic_non_p");
        assert_eq!(json["family"], "supergraph");
        for key in [
            "n",
            "omega_n",
            "lambda",
            "exponent",
            "max_big_omega",
            "omega_reduced",
        ] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json.as_object().unwrap().len(), 9);
    }

    #[test]
    fn supergraph_class_predicate_examples() {
        let z6 = group("Z6");
        let gen = element_of_order(&z6, 6);
        assert!(supergraph_same_class(&z6, 0, gen).unwrap());

        let s3 = group("S3");
        let invs: Vec<usize> = s3
            .elements()
            .filter(|&a| s3.element_order(a) == 2)
            .collect();
        assert!(supergraph_same_class(&s3, invs[0], invs[1]).unwrap());

        let q12 = group("Q12");
        let (a4, a2) = (element_of_order(&q12, 4), element_of_order(&q12, 2));
        assert!(!supergraph_same_class(&q12, a4, a2).unwrap());

        assert!(supergraph_same_class(&group("Q8"), 1, 2).is_err());
        assert!(supergraph_same_class(&z6, 1, 1).is_err());
        assert!(supergraph_same_class(&z6, 1, 6).is_err());
    }

    #[test]
    fn enhanced_values() {
        for (s, v) in [("Z10", 9), ("S3", 4), ("Q8", 6), ("Z2xZ4", 5), ("Z1", 0)] {
            assert_eq!(sdim_enhanced(&group(s)).value, v, "{s}");
        }
    }

    #[test]
    fn abelian_p_group_enhanced_values() {
        for (s, v) in [("Z2xZ4", 5), ("E3^2", 7), ("Z2xZ2xZ4", 13)] {
            let g = group(s);
            assert_eq!(sdim_enhanced_abelian_p(&g).unwrap(), v, "{s}");
            assert_eq!(sdim_enhanced(&g).value, v, "{s}");
        }
        for s in ["Z8", "S3", "Q8", "Z2xZ6"] {
            assert!(sdim_enhanced_abelian_p(&group(s)).is_err(), "{s}");
        }
    }

    #[test]
    fn set_algebra_class_matches_signature_class() {
        for s in ["Q8", "S3", "Z2xZ4", "D12", "Z3xS3"] {
            let g = group(s);
            let l = g.cyclic_lattice();
            for x in g.elements() {
                let c = enhanced_class_by_set_algebra(&l, x);
                assert!(c.contains(x));
                assert_eq!(c, enhanced_signature_class(&l, x), "{s} element {x}");
            }
        }
    }

    #[test]
    fn reduced_values() {
        let cases = [
            ("Z8", 5, Branch::CyclicTwoGroup),
            ("Q8", 6, Branch::GeneralizedQuaternion),
            ("Q16", 13, Branch::GeneralizedQuaternion),
            ("Z12", 8, Branch::General),
            ("Z4", 2, Branch::CyclicTwoGroup),
            ("Z2", 1, Branch::CyclicTwoGroup),
            ("S3", 4, Branch::General),
            ("Z1", 0, Branch::Degenerate),
        ];
        for (s, value, branch) in cases {
            let r = sdim_reduced(&group(s));
            assert_eq!((r.value, r.branch), (value, branch), "{s}");
        }
        assert_eq!(sdim_reduced(&group("Z12")).omega_graph, Some(4));
    }

    #[test]
    fn reduced_class_predicate_examples() {
        let z16 = group("Z16");
        assert!(reduced_power_same_class(&z16, 0, 8).unwrap());
        let z12 = group("Z12");
        assert!(!reduced_power_same_class(&z12, 0, 6).unwrap());
        let q16 = group("Q16");
        let inv = q16.profile().flags.unique_involution.unwrap();
        assert!(reduced_power_same_class(&q16, inv, 0).unwrap());
        assert!(!reduced_power_same_class(&q16, 1, inv).unwrap());
        assert!(reduced_power_same_class(&q16, 3, 3).is_err());
    }

    #[test]
    fn power_graph_has_no_closed_form() {
        assert!(closed_form(&group("Z4"), GraphFamily::Power).is_err());
    }
}
