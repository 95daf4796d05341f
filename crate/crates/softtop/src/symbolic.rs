//! Exact symbolic treatment of three anchored soft topologies over a
//! countably infinite universe: the Fort-type family (all sets avoiding an
//! anchor soft point, plus anchor-containing sets with soft-finite
//! complement), the particular-point family, and the excluded-point family.
//!
//! Symbolic soft sets keep one finite-or-cofinite component per parameter,
//! which is closed under the Boolean operations the case analyses need.
//! Every closed-form decider is backed by finite truncation models: an
//! explicit region plus tail elements that stand in for the infinite rest,
//! with "soft-finite" read as "touching no tail cell".

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::Ground;
use crate::maximal::Property;
use crate::set::SoftSet;
use crate::topology::SoftTopology;

/// One parameter's component: an explicit finite subset of the naturals or
/// the complement of one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymComponent {
    Fin(BTreeSet<u64>),
    Cof(BTreeSet<u64>),
}

impl SymComponent {
    fn complement(&self) -> SymComponent {
        match self {
            SymComponent::Fin(s) => SymComponent::Cof(s.clone()),
            SymComponent::Cof(s) => SymComponent::Fin(s.clone()),
        }
    }

    fn union(&self, other: &SymComponent) -> SymComponent {
        use SymComponent::*;
        match (self, other) {
            (Fin(a), Fin(b)) => Fin(a.union(b).copied().collect()),
            (Fin(a), Cof(b)) => Cof(b.difference(a).copied().collect()),
            (Cof(a), Fin(b)) => Cof(a.difference(b).copied().collect()),
            (Cof(a), Cof(b)) => Cof(a.intersection(b).copied().collect()),
        }
    }

    fn intersection(&self, other: &SymComponent) -> SymComponent {
        self.complement()
            .union(&other.complement())
            .complement()
    }

    fn contains(&self, elem: u64) -> bool {
        match self {
            SymComponent::Fin(s) => s.contains(&elem),
            SymComponent::Cof(s) => !s.contains(&elem),
        }
    }

    fn is_empty(&self) -> bool {
        matches!(self, SymComponent::Fin(s) if s.is_empty())
    }

    fn is_all(&self) -> bool {
        matches!(self, SymComponent::Cof(s) if s.is_empty())
    }

    fn is_finite(&self) -> bool {
        matches!(self, SymComponent::Fin(_))
    }

    fn is_subset(&self, other: &SymComponent) -> bool {
        use SymComponent::*;
        match (self, other) {
            (Fin(a), Fin(b)) => a.is_subset(b),
            (Fin(a), Cof(b)) => a.intersection(b).next().is_none(),
            (Cof(_), Fin(_)) => false,
            (Cof(a), Cof(b)) => b.is_subset(a),
        }
    }
}

/// A soft set over the naturals with finite-or-cofinite components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSoftSet {
    params: Vec<String>,
    comps: Vec<SymComponent>,
}

impl SymbolicSoftSet {
    pub fn new(params: Vec<String>, comps: Vec<SymComponent>) -> Result<SymbolicSoftSet> {
        if params.is_empty() || params.len() != comps.len() {
            return Err(Error::Rejected(
                "one component is required per parameter".into(),
            ));
        }
        Ok(SymbolicSoftSet { params, comps })
    }

    pub fn null(params: &[String]) -> SymbolicSoftSet {
        SymbolicSoftSet {
            params: params.to_vec(),
            comps: vec![SymComponent::Fin(BTreeSet::new()); params.len()],
        }
    }

    pub fn absolute(params: &[String]) -> SymbolicSoftSet {
        SymbolicSoftSet {
            params: params.to_vec(),
            comps: vec![SymComponent::Cof(BTreeSet::new()); params.len()],
        }
    }

    /// The singleton `{z(e)}`.
    pub fn point(params: &[String], param_ix: usize, elem: u64) -> SymbolicSoftSet {
        let mut comps = vec![SymComponent::Fin(BTreeSet::new()); params.len()];
        comps[param_ix] = SymComponent::Fin([elem].into());
        SymbolicSoftSet {
            params: params.to_vec(),
            comps,
        }
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn components(&self) -> &[SymComponent] {
        &self.comps
    }

    pub fn complement(&self) -> SymbolicSoftSet {
        SymbolicSoftSet {
            params: self.params.clone(),
            comps: self.comps.iter().map(|c| c.complement()).collect(),
        }
    }

    pub fn union(&self, other: &SymbolicSoftSet) -> Result<SymbolicSoftSet> {
        self.check_params(other)?;
        Ok(SymbolicSoftSet {
            params: self.params.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.union(b))
                .collect(),
        })
    }

    pub fn intersection(&self, other: &SymbolicSoftSet) -> Result<SymbolicSoftSet> {
        self.check_params(other)?;
        Ok(SymbolicSoftSet {
            params: self.params.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.intersection(b))
                .collect(),
        })
    }

    pub fn is_subset(&self, other: &SymbolicSoftSet) -> Result<bool> {
        self.check_params(other)?;
        Ok(self
            .comps
            .iter()
            .zip(&other.comps)
            .all(|(a, b)| a.is_subset(b)))
    }

    pub fn is_null(&self) -> bool {
        self.comps.iter().all(|c| c.is_empty())
    }

    pub fn is_absolute(&self) -> bool {
        self.comps.iter().all(|c| c.is_all())
    }

    /// Soft-finite: every component is an explicit finite set.
    pub fn is_soft_finite(&self) -> bool {
        self.comps.iter().all(|c| c.is_finite())
    }

    /// Co-soft-finite: every component is cofinite.
    pub fn is_co_soft_finite(&self) -> bool {
        self.comps.iter().all(|c| !c.is_finite())
    }

    pub fn contains(&self, param_ix: usize, elem: u64) -> bool {
        self.comps[param_ix].contains(elem)
    }

    fn check_params(&self, other: &SymbolicSoftSet) -> Result<()> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(Error::Rejected("parameter sets differ".into()))
        }
    }
}

impl fmt::Display for SymbolicSoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (param, comp)) in self.params.iter().zip(&self.comps).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let (tag, set) = match comp {
                SymComponent::Fin(s) => ("FIN", s),
                SymComponent::Cof(s) => ("COF", s),
            };
            write!(f, "{param}:{tag}{{")?;
            for (j, elem) in set.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{elem}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymFamily {
    Fort,
    ParticularPoint,
    ExcludedPoint,
}

impl fmt::Display for SymFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymFamily::Fort => write!(f, "FORT"),
            SymFamily::ParticularPoint => write!(f, "PARTICULAR_POINT"),
            SymFamily::ExcludedPoint => write!(f, "EXCLUDED_POINT"),
        }
    }
}

/// An anchored symbolic topology over the naturals with a finite parameter
/// set; membership of a symbolic soft set is decidable in closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicTopology {
    family: SymFamily,
    params: Vec<String>,
    anchor_param: usize,
    anchor_elem: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymQuery {
    Open,
    Closed,
    Compact,
    Dense,
    ConnectedSpace,
}

impl SymbolicTopology {
    pub fn new(
        family: SymFamily,
        params: Vec<String>,
        anchor_param: &str,
        anchor_elem: u64,
    ) -> Result<SymbolicTopology> {
        let anchor_param = params
            .iter()
            .position(|p| p == anchor_param)
            .ok_or_else(|| Error::UnknownParameter(anchor_param.to_string()))?;
        if params.is_empty() {
            return Err(Error::Rejected("parameter set must be non-empty".into()));
        }
        Ok(SymbolicTopology {
            family,
            params,
            anchor_param,
            anchor_elem,
        })
    }

    pub fn family(&self) -> SymFamily {
        self.family
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn anchor(&self) -> (&str, u64) {
        (&self.params[self.anchor_param], self.anchor_elem)
    }

    fn contains_anchor(&self, set: &SymbolicSoftSet) -> bool {
        set.contains(self.anchor_param, self.anchor_elem)
    }

    /// Closed-form openness.
    pub fn is_open(&self, set: &SymbolicSoftSet) -> Result<bool> {
        self.check_params(set)?;
        Ok(match self.family {
            SymFamily::Fort => {
                !self.contains_anchor(set) || set.complement().is_soft_finite()
            }
            SymFamily::ParticularPoint => set.is_null() || self.contains_anchor(set),
            SymFamily::ExcludedPoint => set.is_absolute() || !self.contains_anchor(set),
        })
    }

    pub fn is_closed(&self, set: &SymbolicSoftSet) -> Result<bool> {
        self.is_open(&set.complement())
    }

    /// Closed-form soft closure.
    pub fn closure(&self, set: &SymbolicSoftSet) -> Result<SymbolicSoftSet> {
        self.check_params(set)?;
        if self.is_closed(set)? {
            return Ok(set.clone());
        }
        match self.family {
            // Adjoining the anchor point always closes a non-closed set in
            // the anchored families.
            SymFamily::Fort | SymFamily::ExcludedPoint => {
                set.union(&self.anchor_point())
            }
            // Any anchor-containing set is dense.
            SymFamily::ParticularPoint => Ok(SymbolicSoftSet::absolute(&self.params)),
        }
    }

    fn anchor_point(&self) -> SymbolicSoftSet {
        SymbolicSoftSet::point(&self.params, self.anchor_param, self.anchor_elem)
    }

    /// Closed-form compactness of a symbolic subset.
    pub fn is_compact(&self, set: &SymbolicSoftSet) -> Result<bool> {
        self.check_params(set)?;
        Ok(match self.family {
            // A member containing the anchor has soft-finite complement and
            // mops up all but finitely many cells; without the anchor an
            // infinite set is covered only pointwise.
            SymFamily::Fort => self.contains_anchor(set) || set.is_soft_finite(),
            // Anchor-containing opens can still be arbitrarily thin
            // (anchor plus one point), so only soft-finite sets are compact.
            SymFamily::ParticularPoint => set.is_soft_finite(),
            // The only open containing the anchor is the absolute set.
            SymFamily::ExcludedPoint => self.contains_anchor(set) || set.is_soft_finite(),
        })
    }

    pub fn is_dense(&self, set: &SymbolicSoftSet) -> Result<bool> {
        Ok(self.closure(set)?.is_absolute())
    }

    pub fn is_connected_space(&self) -> bool {
        match self.family {
            // A non-anchor soft point and its complement disconnect the
            // space.
            SymFamily::Fort => false,
            // Non-null opens pairwise meet (in the anchor, or through the
            // absolute set), so no disconnection exists.
            SymFamily::ParticularPoint | SymFamily::ExcludedPoint => true,
        }
    }

    fn check_params(&self, set: &SymbolicSoftSet) -> Result<()> {
        if set.params() == self.params {
            Ok(())
        } else {
            Err(Error::Rejected(
                "set parameters do not match the topology".into(),
            ))
        }
    }
}

/// Unified query surface used by the CLI.
pub fn sym_query(
    t: &SymbolicTopology,
    set: Option<&SymbolicSoftSet>,
    query: SymQuery,
) -> Result<bool> {
    let need_set = || {
        set.ok_or_else(|| Error::Rejected("this query requires a symbolic set".into()))
    };
    match query {
        SymQuery::Open => t.is_open(need_set()?),
        SymQuery::Closed => t.is_closed(need_set()?),
        SymQuery::Compact => t.is_compact(need_set()?),
        SymQuery::Dense => t.is_dense(need_set()?),
        SymQuery::ConnectedSpace => Ok(t.is_connected_space()),
    }
}

/// The property each family is maximal for.
pub fn family_property(family: SymFamily) -> Property {
    match family {
        SymFamily::Fort => Property::Compact,
        SymFamily::ParticularPoint | SymFamily::ExcludedPoint => Property::Connected,
    }
}

/// Outcome of the symbolic maximality decision: the verdict plus a
/// human-readable case table.
#[derive(Debug, Clone)]
pub struct SymMaximality {
    pub maximal: bool,
    pub certificate: String,
}

/// Applies the s-extension criterion symbolically: for every non-open case
/// shape, the extension by that shape destroys the property.
pub fn sym_is_maximal(t: &SymbolicTopology, property: Property) -> Result<SymMaximality> {
    let anchor = format!("{}({})", t.anchor().1, t.anchor().0);
    let mut lines = Vec::new();
    lines.push(format!(
        "space: {}({anchor}) over E={{{}}} on the naturals",
        t.family(),
        t.params().join(",")
    ));
    match (t.family(), property) {
        (SymFamily::Fort, Property::Compact) => {
            lines.push("property: soft compact -- holds: any open cover of the absolute set has a member containing the anchor; that member has soft-finite complement, and the finitely many remaining cells take one cover member each".into());
            lines.push("criterion: maximal iff every s-extension by a non-open set fails the property (a finer topology with the property would pass it down to the extension by any of its non-open sets)".into());
            lines.push("non-open case shapes:".into());
            lines.push(format!(
                "  case 1: {anchor} in Y and Y^c not soft-finite"
            ));
            lines.push("    -> Y^c avoids the anchor and has an infinite component, so its pointwise open cover has no finite subcover: Y^c is not compact".into());
            lines.push("    -> the extension transfer law (the extension by Y is compact iff Y^c is compact below) makes the s-extension by Y non-compact".into());
            lines.push("conclusion: maximal soft compact".into());
        }
        (SymFamily::ParticularPoint, Property::Connected) => {
            lines.push("property: soft connected -- holds: all non-null opens contain the anchor point, so no two non-null opens are disjoint".into());
            lines.push("criterion: maximal iff every s-extension by a non-open set fails the property".into());
            lines.push("non-open case shapes:".into());
            lines.push(format!(
                "  case 1: Y non-null and {anchor} not in Y"
            ));
            lines.push("    -> Y^c contains the anchor, so Y^c is already open; Y becomes open in the extension".into());
            lines.push("    -> {Y, Y^c} are disjoint non-null opens of the extension covering the absolute set: the extension is disconnected".into());
            lines.push("conclusion: maximal soft connected".into());
        }
        (SymFamily::ExcludedPoint, Property::Connected) => {
            lines.push("property: soft connected -- holds: every non-null open other than the absolute set avoids the anchor, so two disjoint opens cannot cover the anchor point".into());
            lines.push("criterion: maximal iff every s-extension by a non-open set fails the property".into());
            lines.push("non-open case shapes:".into());
            lines.push(format!(
                "  case 1: {anchor} in Y and Y not absolute"
            ));
            lines.push("    -> Y^c is non-null and avoids the anchor, so Y^c is already open; Y becomes open in the extension".into());
            lines.push("    -> {Y, Y^c} are disjoint non-null opens of the extension covering the absolute set: the extension is disconnected".into());
            lines.push("conclusion: maximal soft connected".into());
        }
        (family, property) => {
            return Err(Error::Rejected(format!(
                "property `{property}` does not match family `{family}`"
            )));
        }
    }
    Ok(SymMaximality {
        maximal: true,
        certificate: lines.join("\n"),
    })
}

/// A finite model of a symbolic topology: an explicit region of naturals
/// plus `n_tail` tail elements standing in for the infinite rest.
/// "Soft-finite" is modelled as "contains no tail cell", which keeps the
/// family rules exact for openness, closure, and density.
pub struct TruncationModel {
    pub ground: Arc<Ground>,
    pub topology: SoftTopology,
    params: Vec<String>,
    explicit: Vec<u64>,
    n_tail: usize,
}

impl TruncationModel {
    /// Maps a symbolic set with explicit parts inside the model region to
    /// its model soft set; cofinite components pick up every tail element.
    pub fn to_model_set(&self, set: &SymbolicSoftSet) -> Result<SoftSet> {
        if set.params() != self.params {
            return Err(Error::Rejected(
                "set parameters do not match the model".into(),
            ));
        }
        let ground = &self.ground;
        let mut out = SoftSet::empty(ground);
        for (param_ix, comp) in set.components().iter().enumerate() {
            let explicit_members: &BTreeSet<u64> = match comp {
                SymComponent::Fin(s) | SymComponent::Cof(s) => s,
            };
            for elem in explicit_members {
                if !self.explicit.contains(elem) {
                    return Err(Error::Rejected(format!(
                        "element {elem} lies outside the model's explicit region"
                    )));
                }
            }
            for (pos, value) in self.explicit.iter().enumerate() {
                if comp.contains(*value) {
                    out.insert_cell(param_ix, pos);
                }
            }
            if !comp.is_finite() {
                for tail in 0..self.n_tail {
                    out.insert_cell(param_ix, self.explicit.len() + tail);
                }
            }
        }
        Ok(out)
    }

    fn anchor_cell(&self, t: &SymbolicTopology) -> (usize, usize) {
        let pos = self
            .explicit
            .iter()
            .position(|&v| v == t.anchor().1)
            .expect("anchor is in the explicit region");
        let param_ix = self
            .params
            .iter()
            .position(|p| p == t.anchor().0)
            .expect("anchor parameter exists");
        (param_ix, pos)
    }
}

/// Builds the truncation model with a validated model topology.
pub fn truncation_model(
    t: &SymbolicTopology,
    n_explicit: usize,
    n_tail: usize,
) -> Result<TruncationModel> {
    let (ground, explicit) = truncation_ground(t, n_explicit, n_tail)?;
    let cells = ground.cells();
    if cells > 12 {
        return Err(Error::Capacity(format!(
            "truncation model with {cells} cells"
        )));
    }
    let model = TruncationModel {
        ground: ground.clone(),
        topology: SoftTopology::indiscrete(&ground), // replaced below
        params: t.params().to_vec(),
        explicit,
        n_tail,
    };
    let (anchor_param, anchor_pos) = model.anchor_cell(t);
    let anchor_cell = ground.cell_index(anchor_param, anchor_pos);
    let n_explicit_elems = model.explicit.len();
    let is_tail_cell = |cell: usize| {
        let (_, elem) = ground.cell_coords(cell);
        elem >= n_explicit_elems
    };

    let mut opens = Vec::new();
    for mask in 0u64..(1 << cells) {
        let contains_anchor = mask & (1 << anchor_cell) != 0;
        let complement_touches_tail =
            (0..cells).any(|c| is_tail_cell(c) && mask & (1 << c) == 0);
        let open = match t.family() {
            SymFamily::Fort => !contains_anchor || !complement_touches_tail,
            SymFamily::ParticularPoint => mask == 0 || contains_anchor,
            SymFamily::ExcludedPoint => {
                mask == (1 << cells) - 1 || !contains_anchor
            }
        };
        if open {
            opens.push(SoftSet::from_mask(&ground, mask));
        }
    }
    let topology = SoftTopology::validate(&ground, opens)?;
    Ok(TruncationModel { topology, ..model })
}

fn truncation_ground(
    t: &SymbolicTopology,
    n_explicit: usize,
    n_tail: usize,
) -> Result<(Arc<Ground>, Vec<u64>)> {
    if n_explicit == 0 || n_tail == 0 {
        return Err(Error::Rejected(
            "truncation needs at least one explicit and one tail element".into(),
        ));
    }
    let mut explicit: BTreeSet<u64> = (0..n_explicit as u64).collect();
    explicit.insert(t.anchor().1);
    let explicit: Vec<u64> = explicit.into_iter().collect();
    let mut universe: Vec<String> = explicit.iter().map(|v| format!("n{v}")).collect();
    for tail in 0..n_tail {
        universe.push(format!("inf{tail}"));
    }
    let ground = Ground::new(universe, t.params().to_vec())?;
    Ok((ground, explicit))
}

/// Every symbolic set whose explicit parts live inside the first
/// `n_explicit` naturals (plus the anchor), for exhaustive oracle runs.
pub fn truncated_symbolic_sets(
    t: &SymbolicTopology,
    n_explicit: usize,
) -> Vec<SymbolicSoftSet> {
    let mut region: BTreeSet<u64> = (0..n_explicit as u64).collect();
    region.insert(t.anchor().1);
    let region: Vec<u64> = region.into_iter().collect();
    let mut sets = vec![SymbolicSoftSet::null(t.params())];
    for param_ix in 0..t.params().len() {
        let mut next = Vec::new();
        for partial in &sets {
            for choice in 0u64..(1 << region.len()) {
                let members: BTreeSet<u64> = region
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| choice & (1 << k) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                for comp in [
                    SymComponent::Fin(members.clone()),
                    SymComponent::Cof(members.clone()),
                ] {
                    let mut comps = partial.components().to_vec();
                    comps[param_ix] = comp;
                    next.push(
                        SymbolicSoftSet::new(t.params().to_vec(), comps)
                            .expect("component count matches"),
                    );
                }
            }
        }
        sets = next;
    }
    sets
}

/// Independent compactness oracle: set-cover growth over finite models.
///
/// For tail sizes 1 and 2, covers drawn from a generating subbase of the
/// model are scanned exhaustively; `M(k)` is the size of the largest
/// irredundant subbase cover of the modelled set. A compact set keeps
/// `M(k)` constant while a non-compact one needs more cover members as the
/// tail grows (its tail cells are only covered pointwise).
pub fn compact_growth_oracle(
    t: &SymbolicTopology,
    set: &SymbolicSoftSet,
    n_explicit: usize,
) -> Result<bool> {
    let mut m = [0usize; 2];
    for (slot, n_tail) in [(0usize, 1usize), (1, 2)] {
        let (ground, explicit) = truncation_ground(t, n_explicit, n_tail)?;
        let cells = ground.cells();
        if cells > 16 {
            return Err(Error::Capacity(format!(
                "growth oracle model with {cells} cells"
            )));
        }
        let model = TruncationModel {
            ground: ground.clone(),
            topology: SoftTopology::indiscrete(&ground),
            params: t.params().to_vec(),
            explicit,
            n_tail,
        };
        let (anchor_param, anchor_pos) = model.anchor_cell(t);
        let anchor_cell = ground.cell_index(anchor_param, anchor_pos);
        let n_explicit_elems = model.explicit.len();
        let y_mask = model.to_model_set(set)?.as_mask();

        // A generating subbase of the model family.
        let full = (1u64 << cells) - 1;
        let mut subbase: Vec<u64> = Vec::new();
        match t.family() {
            SymFamily::Fort => {
                for c in 0..cells {
                    if c != anchor_cell {
                        subbase.push(1 << c);
                        let (_, elem) = ground.cell_coords(c);
                        if elem < n_explicit_elems {
                            subbase.push(full & !(1 << c));
                        }
                    }
                }
                subbase.push(full);
            }
            SymFamily::ParticularPoint => {
                for c in 0..cells {
                    subbase.push((1 << c) | (1 << anchor_cell));
                }
            }
            SymFamily::ExcludedPoint => {
                for c in 0..cells {
                    if c != anchor_cell {
                        subbase.push(1 << c);
                    }
                }
                subbase.push(full);
            }
        }

        let k = subbase.len();
        if k > 20 {
            return Err(Error::Capacity(format!(
                "growth oracle subbase with {k} members"
            )));
        }
        let mut max_irredundant = 0usize;
        for choice in 0u64..(1 << k) {
            let mut union = 0u64;
            let mut members = Vec::new();
            let mut rem = choice;
            while rem != 0 {
                let i = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                union |= subbase[i];
                members.push(i);
            }
            if y_mask & !union != 0 {
                continue;
            }
            // Irredundant: every member covers a cell of the set privately.
            let irredundant = members.iter().all(|&i| {
                let mut others = 0u64;
                for &j in &members {
                    if j != i {
                        others |= subbase[j];
                    }
                }
                subbase[i] & y_mask & !others != 0
            });
            if irredundant {
                max_irredundant = max_irredundant.max(members.len());
            }
        }
        m[slot] = max_irredundant;
    }
    Ok(m[0] == m[1])
}
