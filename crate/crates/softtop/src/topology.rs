//! Soft topologies as validated finite families of soft sets.
//!
//! A topology lives over a carrier set: the absolute set for a whole space,
//! or any non-null soft set for a subspace produced by [`SoftTopology::relative`].
//! Opens are kept deduplicated in ascending bit-encoding order, so equality
//! of topologies is bit-exact list equality.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Axiom, Error, Result};
use crate::ground::{same_ground, Ground};
use crate::set::SoftSet;

/// Largest family the generation fixpoint will grow before giving up.
const GENERATE_CAP: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftTopology {
    ground: Arc<Ground>,
    carrier: SoftSet,
    opens: Vec<SoftSet>,
}

impl SoftTopology {
    /// Checks the three axioms over the absolute carrier and returns the
    /// canonical topology. Violations name the axiom and a witness pair.
    pub fn validate(ground: &Arc<Ground>, sets: Vec<SoftSet>) -> Result<SoftTopology> {
        SoftTopology::validate_within(&SoftSet::absolute(ground), sets)
    }

    /// Checks the axioms relative to an arbitrary non-null carrier.
    pub fn validate_within(carrier: &SoftSet, sets: Vec<SoftSet>) -> Result<SoftTopology> {
        let ground = carrier.ground().clone();
        if carrier.is_null() {
            return Err(Error::Rejected("carrier must be non-null".into()));
        }
        let mut opens = Vec::with_capacity(sets.len());
        for set in sets {
            if !same_ground(set.ground(), &ground) {
                return Err(Error::GroundMismatch);
            }
            if !set.is_subset(carrier)? {
                return Err(Error::Rejected(format!(
                    "member {set} is not contained in the carrier {carrier}"
                )));
            }
            opens.push(set);
        }
        opens.sort_unstable();
        opens.dedup();

        let members: HashSet<&Bits> = opens.iter().map(|s| s.bits()).collect();
        if opens.first().map(|s| s.is_null()) != Some(true) {
            return Err(Error::AxiomViolation {
                axiom: Axiom::NullAndAbsolute,
                witness: "the null soft set is missing".into(),
            });
        }
        if opens.last().map(|s| s == carrier) != Some(true) {
            return Err(Error::AxiomViolation {
                axiom: Axiom::NullAndAbsolute,
                witness: format!("the carrier {carrier} is missing"),
            });
        }
        for i in 0..opens.len() {
            for j in (i + 1)..opens.len() {
                let meet = opens[i].intersection(&opens[j])?;
                if !members.contains(meet.bits()) {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::Intersection,
                        witness: format!(
                            "intersection {} of {} and {} is not in the family",
                            meet, opens[i], opens[j]
                        ),
                    });
                }
                let join = opens[i].union(&opens[j])?;
                if !members.contains(join.bits()) {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::Union,
                        witness: format!(
                            "union {} of {} and {} is not in the family",
                            join, opens[i], opens[j]
                        ),
                    });
                }
            }
        }
        Ok(SoftTopology {
            ground,
            carrier: carrier.clone(),
            opens,
        })
    }

    /// `{null, absolute}`, the coarsest topology.
    pub fn indiscrete(ground: &Arc<Ground>) -> SoftTopology {
        SoftTopology::indiscrete_within(&SoftSet::absolute(ground))
    }

    pub fn indiscrete_within(carrier: &SoftSet) -> SoftTopology {
        assert!(!carrier.is_null(), "carrier must be non-null");
        SoftTopology {
            ground: carrier.ground().clone(),
            carrier: carrier.clone(),
            opens: vec![SoftSet::empty(carrier.ground()), carrier.clone()],
        }
    }

    /// The full power family, the finest topology. Guarded because the
    /// family has `2^cells` members.
    pub fn discrete(ground: &Arc<Ground>) -> Result<SoftTopology> {
        SoftTopology::discrete_within(&SoftSet::absolute(ground))
    }

    pub fn discrete_within(carrier: &SoftSet) -> Result<SoftTopology> {
        let cells = carrier.cell_count();
        if cells > 16 {
            return Err(Error::Capacity(format!(
                "discrete topology on {cells} cells has 2^{cells} opens"
            )));
        }
        if carrier.is_null() {
            return Err(Error::Rejected("carrier must be non-null".into()));
        }
        let ground = carrier.ground().clone();
        let cell_ixs: Vec<usize> = carrier.bits().ones().collect();
        let mut opens = Vec::with_capacity(1 << cells);
        for choice in 0u64..(1 << cells) {
            let mut bits = Bits::empty(ground.cells());
            for (k, &cell) in cell_ixs.iter().enumerate() {
                if choice & (1 << k) != 0 {
                    bits.set(cell, true);
                }
            }
            opens.push(SoftSet::from_bits(&ground, bits));
        }
        opens.sort_unstable();
        Ok(SoftTopology {
            ground,
            carrier: carrier.clone(),
            opens,
        })
    }

    /// The smallest topology including a collection, by alternating
    /// pairwise-intersection and pairwise-union closure to a fixpoint.
    pub fn generate(ground: &Arc<Ground>, sets: &[SoftSet]) -> Result<SoftTopology> {
        SoftTopology::generate_within(&SoftSet::absolute(ground), sets)
    }

    pub fn generate_within(carrier: &SoftSet, sets: &[SoftSet]) -> Result<SoftTopology> {
        let opens = close_family(carrier, sets, Closure::Both)?;
        Ok(SoftTopology {
            ground: carrier.ground().clone(),
            carrier: carrier.clone(),
            opens,
        })
    }

    /// Two-phase generation: finite-intersection closure first, then union
    /// closure. Cross-checked against the fixpoint route by the test suite
    /// before being leaned on anywhere.
    pub fn generate_two_phase(ground: &Arc<Ground>, sets: &[SoftSet]) -> Result<SoftTopology> {
        let carrier = SoftSet::absolute(ground);
        let meets = close_family(&carrier, sets, Closure::IntersectionsOnly)?;
        let opens = close_family(&carrier, &meets, Closure::UnionsOnly)?;
        Ok(SoftTopology {
            ground: ground.clone(),
            carrier,
            opens,
        })
    }

    pub fn ground(&self) -> &Arc<Ground> {
        &self.ground
    }

    pub fn carrier(&self) -> &SoftSet {
        &self.carrier
    }

    pub fn opens(&self) -> &[SoftSet] {
        &self.opens
    }

    pub fn is_open(&self, set: &SoftSet) -> bool {
        self.opens
            .binary_search_by(|o| o.bits().cmp(set.bits()))
            .is_ok()
    }

    pub fn is_closed(&self, set: &SoftSet) -> Result<bool> {
        Ok(self.is_open(&self.carrier.difference(set)?))
    }

    /// Complements of the opens relative to the carrier, in canonical order.
    pub fn closed_sets(&self) -> Vec<SoftSet> {
        let mut closed: Vec<SoftSet> = self
            .opens
            .iter()
            .map(|o| self.carrier.difference(o).expect("same ground"))
            .collect();
        closed.sort_unstable();
        closed.dedup();
        closed
    }

    /// Whether every open of `self` is open in `other` (same carrier).
    pub fn is_coarser_or_equal(&self, other: &SoftTopology) -> Result<bool> {
        if !same_ground(&self.ground, &other.ground) {
            return Err(Error::GroundMismatch);
        }
        if self.carrier != other.carrier {
            return Err(Error::Rejected(
                "topologies live over different carriers".into(),
            ));
        }
        Ok(subset_sorted(&self.opens, &other.opens))
    }

    pub fn is_strictly_coarser(&self, other: &SoftTopology) -> Result<bool> {
        Ok(self.is_coarser_or_equal(other)? && self.opens.len() < other.opens.len())
    }

    /// Greatest lower bound: the intersection of the two open families.
    pub fn meet(&self, other: &SoftTopology) -> Result<SoftTopology> {
        self.check_compatible(other)?;
        let keep: HashSet<&Bits> = other.opens.iter().map(|s| s.bits()).collect();
        let opens: Vec<SoftSet> = self
            .opens
            .iter()
            .filter(|s| keep.contains(s.bits()))
            .cloned()
            .collect();
        let meet = SoftTopology {
            ground: self.ground.clone(),
            carrier: self.carrier.clone(),
            opens,
        };
        debug_assert!(meet.revalidate().is_ok());
        Ok(meet)
    }

    /// Least upper bound: generates from the union of the open families and
    /// cross-checks the pairwise-intersection generating route; the two must
    /// produce the same topology.
    pub fn join(&self, other: &SoftTopology) -> Result<SoftTopology> {
        self.check_compatible(other)?;
        let mut combined = self.opens.clone();
        combined.extend(other.opens.iter().cloned());
        let direct = SoftTopology::generate_within(&self.carrier, &combined)?;

        let mut pairwise = Vec::with_capacity(self.opens.len() * other.opens.len());
        for a in &self.opens {
            for b in &other.opens {
                pairwise.push(a.intersection(b)?);
            }
        }
        let via_intersections = SoftTopology::generate_within(&self.carrier, &pairwise)?;
        if direct != via_intersections {
            return Err(Error::Internal(format!(
                "join routes disagree: direct {direct} vs pairwise {via_intersections}"
            )));
        }
        Ok(direct)
    }

    /// The relative topology over a non-null soft subset of the carrier.
    pub fn relative(&self, subset: &SoftSet) -> Result<SoftTopology> {
        if !same_ground(subset.ground(), &self.ground) {
            return Err(Error::GroundMismatch);
        }
        if subset.is_null() {
            return Err(Error::Rejected(
                "relative topology requires a non-null subset".into(),
            ));
        }
        if !subset.is_subset(&self.carrier)? {
            return Err(Error::Rejected(
                "subset must be contained in the carrier".into(),
            ));
        }
        let mut opens: Vec<SoftSet> = self
            .opens
            .iter()
            .map(|o| o.intersection(subset))
            .collect::<Result<_>>()?;
        opens.sort_unstable();
        opens.dedup();
        let rel = SoftTopology {
            ground: self.ground.clone(),
            carrier: subset.clone(),
            opens,
        };
        debug_assert!(rel.revalidate().is_ok());
        Ok(rel)
    }

    /// Largest open contained in `set`.
    pub fn interior(&self, set: &SoftSet) -> Result<SoftSet> {
        self.check_subset_of_carrier(set)?;
        let mut acc = SoftSet::empty(&self.ground);
        for open in &self.opens {
            if open.is_subset(set)? {
                acc = acc.union(open)?;
            }
        }
        Ok(acc)
    }

    /// Smallest closed set containing `set`.
    pub fn closure(&self, set: &SoftSet) -> Result<SoftSet> {
        self.check_subset_of_carrier(set)?;
        let mut acc = self.carrier.clone();
        for closed in self.closed_sets() {
            if set.is_subset(&closed)? {
                acc = acc.intersection(&closed)?;
            }
        }
        Ok(acc)
    }

    pub fn is_dense(&self, set: &SoftSet) -> Result<bool> {
        Ok(self.closure(set)? == self.carrier)
    }

    /// The s-extension: the smallest topology containing this one and a
    /// non-open subset of the carrier.
    pub fn s_extension(&self, set: &SoftSet) -> Result<SoftTopology> {
        self.check_subset_of_carrier(set)?;
        if self.is_open(set) {
            return Err(Error::NotAProperExtension);
        }
        let mut sets = self.opens.clone();
        sets.push(set.clone());
        SoftTopology::generate_within(&self.carrier, &sets)
    }

    /// Whether `base` generates every open as a union of its members; the
    /// null set counts as the union of the empty subfamily.
    pub fn is_base(&self, base: &[SoftSet]) -> Result<bool> {
        for b in base {
            if !self.is_open(b) {
                return Err(Error::Rejected(format!(
                    "base member {b} is not open in the topology"
                )));
            }
        }
        for open in &self.opens {
            let mut acc = SoftSet::empty(&self.ground);
            for b in base {
                if b.is_subset(open)? {
                    acc = acc.union(b)?;
                }
            }
            if acc != *open {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Renders the topology file format: ground header, carrier line for
    /// subspaces, one open per line in canonical order.
    pub fn to_file_string(&self) -> String {
        let mut out = format!(
            "ground Z={} E={}\n",
            self.ground.universe().join(","),
            self.ground.params().join(",")
        );
        if !self.carrier.is_absolute() {
            out.push_str(&format!("carrier {}\n", self.carrier));
        }
        for open in &self.opens {
            out.push_str(&format!("{open}\n"));
        }
        out
    }

    pub(crate) fn from_parts_unchecked(
        carrier: SoftSet,
        mut opens: Vec<SoftSet>,
    ) -> SoftTopology {
        opens.sort_unstable();
        opens.dedup();
        let t = SoftTopology {
            ground: carrier.ground().clone(),
            carrier,
            opens,
        };
        // Quadratic revalidation is only affordable for small families.
        debug_assert!(
            t.opens.len() > 16 || t.revalidate().is_ok(),
            "family is not a topology"
        );
        t
    }

    fn revalidate(&self) -> Result<SoftTopology> {
        SoftTopology::validate_within(&self.carrier, self.opens.clone())
    }

    fn check_compatible(&self, other: &SoftTopology) -> Result<()> {
        if !same_ground(&self.ground, &other.ground) {
            return Err(Error::GroundMismatch);
        }
        if self.carrier != other.carrier {
            return Err(Error::Rejected(
                "topologies live over different carriers".into(),
            ));
        }
        Ok(())
    }

    fn check_subset_of_carrier(&self, set: &SoftSet) -> Result<()> {
        if !same_ground(set.ground(), &self.ground) {
            return Err(Error::GroundMismatch);
        }
        if !set.is_subset(&self.carrier)? {
            return Err(Error::Rejected(
                "set must be contained in the carrier".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for SoftTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, open) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{open}")?;
        }
        write!(f, "]")
    }
}

enum Closure {
    Both,
    IntersectionsOnly,
    UnionsOnly,
}

/// Worklist closure of a family under the selected operations, seeded with
/// the null set and the carrier. Output is sorted and deduplicated.
fn close_family(carrier: &SoftSet, sets: &[SoftSet], mode: Closure) -> Result<Vec<SoftSet>> {
    let ground = carrier.ground();
    let mut members: Vec<SoftSet> = Vec::new();
    let mut seen: HashSet<Bits> = HashSet::new();
    let push = |s: SoftSet, members: &mut Vec<SoftSet>, seen: &mut HashSet<Bits>| {
        if seen.insert(s.bits().clone()) {
            members.push(s);
        }
    };
    if !matches!(mode, Closure::IntersectionsOnly) {
        push(SoftSet::empty(ground), &mut members, &mut seen);
    }
    push(carrier.clone(), &mut members, &mut seen);
    for s in sets {
        if !same_ground(s.ground(), ground) {
            return Err(Error::GroundMismatch);
        }
        if !s.is_subset(carrier)? {
            return Err(Error::Rejected(format!(
                "generator {s} is not contained in the carrier {carrier}"
            )));
        }
        push(s.clone(), &mut members, &mut seen);
    }

    let mut frontier = 0;
    while frontier < members.len() {
        let current = members[frontier].clone();
        frontier += 1;
        for i in 0..frontier {
            let partner = members[i].clone();
            if !matches!(mode, Closure::UnionsOnly) {
                push(
                    current.intersection(&partner)?,
                    &mut members,
                    &mut seen,
                );
            }
            if !matches!(mode, Closure::IntersectionsOnly) {
                push(current.union(&partner)?, &mut members, &mut seen);
            }
            if members.len() > GENERATE_CAP {
                return Err(Error::Capacity(format!(
                    "generated family exceeded {GENERATE_CAP} members"
                )));
            }
        }
    }
    members.sort_unstable();
    Ok(members)
}

fn subset_sorted(a: &[SoftSet], b: &[SoftSet]) -> bool {
    let mut j = 0;
    for x in a {
        loop {
            if j >= b.len() {
                return false;
            }
            match b[j].bits().cmp(x.bits()) {
                std::cmp::Ordering::Less => j += 1,
                std::cmp::Ordering::Equal => {
                    j += 1;
                    break;
                }
                std::cmp::Ordering::Greater => return false,
            }
        }
    }
    true
}
