//! Soft sets over a fixed ground.
//!
//! A soft set assigns to every parameter `e` a subset `Y(e)` of the universe;
//! equivalently it is a subset of the cell grid `E x Z`. Sets are stored as
//! fixed-width bit vectors indexed by `param_ix * |Z| + elem_ix`, so equality
//! and the canonical ordering are bit-exact. All values are immutable once
//! built and cheap to share across threads.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::ground::{same_ground, Ground};

#[derive(Debug, Clone)]
pub struct SoftSet {
    ground: Arc<Ground>,
    bits: Bits,
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        same_ground(&self.ground, &other.ground) && self.bits == other.bits
    }
}

impl Eq for SoftSet {}

impl std::hash::Hash for SoftSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

/// Canonical order: the bit encoding read as an unsigned integer. Only
/// meaningful between sets over the same ground.
impl Ord for SoftSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl SoftSet {
    pub fn empty(ground: &Arc<Ground>) -> SoftSet {
        SoftSet {
            ground: ground.clone(),
            bits: Bits::empty(ground.cells()),
        }
    }

    pub fn absolute(ground: &Arc<Ground>) -> SoftSet {
        SoftSet {
            ground: ground.clone(),
            bits: Bits::full(ground.cells()),
        }
    }

    /// Builds a set from named `(param, elements)` components; parameters not
    /// mentioned get an empty component.
    pub fn from_components(
        ground: &Arc<Ground>,
        components: &[(&str, &[&str])],
    ) -> Result<SoftSet> {
        let mut set = SoftSet::empty(ground);
        for (param, elems) in components {
            let param_ix = ground.param_index(param)?;
            for elem in *elems {
                let elem_ix = ground.elem_index(elem)?;
                set.insert_cell(param_ix, elem_ix);
            }
        }
        Ok(set)
    }

    pub fn ground(&self) -> &Arc<Ground> {
        &self.ground
    }

    pub fn is_null(&self) -> bool {
        self.bits.is_empty_set()
    }

    pub fn is_absolute(&self) -> bool {
        self.bits.is_full_set()
    }

    pub fn cell_count(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn contains_cell(&self, param_ix: usize, elem_ix: usize) -> bool {
        self.bits.get(self.ground.cell_index(param_ix, elem_ix))
    }

    /// Membership of a soft point: `z(e) in (Y, E)` means `z in Y(e)`.
    pub fn contains_point(&self, point: &SoftPoint) -> bool {
        debug_assert!(same_ground(&self.ground, &point.ground));
        self.contains_cell(point.param_ix, point.elem_ix)
    }

    /// The component `Y(e)` as element indices.
    pub fn component(&self, param_ix: usize) -> Vec<usize> {
        (0..self.ground.n_elems())
            .filter(|&z| self.contains_cell(param_ix, z))
            .collect()
    }

    pub fn union(&self, other: &SoftSet) -> Result<SoftSet> {
        self.check_ground(other)?;
        Ok(self.with_bits(self.bits.union(&other.bits)))
    }

    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet> {
        self.check_ground(other)?;
        Ok(self.with_bits(self.bits.intersection(&other.bits)))
    }

    pub fn difference(&self, other: &SoftSet) -> Result<SoftSet> {
        self.check_ground(other)?;
        Ok(self.with_bits(self.bits.difference(&other.bits)))
    }

    pub fn complement(&self) -> SoftSet {
        self.with_bits(self.bits.complement())
    }

    pub fn is_subset(&self, other: &SoftSet) -> Result<bool> {
        self.check_ground(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn is_disjoint(&self, other: &SoftSet) -> Result<bool> {
        self.check_ground(other)?;
        Ok(self.bits.is_disjoint(&other.bits))
    }

    /// Folds a family into its union; the empty family gives the null set.
    pub fn union_all<'a>(
        ground: &Arc<Ground>,
        sets: impl IntoIterator<Item = &'a SoftSet>,
    ) -> Result<SoftSet> {
        let mut acc = SoftSet::empty(ground);
        for s in sets {
            acc = acc.union(s)?;
        }
        Ok(acc)
    }

    /// Folds a family into its intersection; the empty family gives the
    /// absolute set.
    pub fn intersect_all<'a>(
        ground: &Arc<Ground>,
        sets: impl IntoIterator<Item = &'a SoftSet>,
    ) -> Result<SoftSet> {
        let mut acc = SoftSet::absolute(ground);
        for s in sets {
            acc = acc.intersection(s)?;
        }
        Ok(acc)
    }

    /// True when every component `Y(e)` is the same subset of `Z`.
    pub fn is_stable(&self) -> bool {
        let n_elems = self.ground.n_elems();
        for elem_ix in 0..n_elems {
            let first = self.contains_cell(0, elem_ix);
            for param_ix in 1..self.ground.n_params() {
                if self.contains_cell(param_ix, elem_ix) != first {
                    return false;
                }
            }
        }
        true
    }

    /// The soft points contained in this set, in cell order.
    pub fn points(&self) -> Vec<SoftPoint> {
        self.bits
            .ones()
            .map(|cell| {
                let (param_ix, elem_ix) = self.ground.cell_coords(cell);
                SoftPoint::new(self.ground.clone(), param_ix, elem_ix)
            })
            .collect()
    }

    pub(crate) fn insert_cell(&mut self, param_ix: usize, elem_ix: usize) {
        let cell = self.ground.cell_index(param_ix, elem_ix);
        self.bits.set(cell, true);
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    pub(crate) fn from_bits(ground: &Arc<Ground>, bits: Bits) -> SoftSet {
        debug_assert_eq!(bits.len(), ground.cells());
        SoftSet {
            ground: ground.clone(),
            bits,
        }
    }

    /// The canonical cell encoding as an integer, for grounds with at most
    /// 64 cells: bit `param_ix * |Z| + elem_ix` marks cell membership.
    pub fn as_mask(&self) -> u64 {
        assert!(self.ground.cells() <= 64, "mask form needs at most 64 cells");
        self.bits.as_mask()
    }

    /// Builds a set from its canonical cell encoding; see [`Self::as_mask`].
    pub fn from_mask(ground: &Arc<Ground>, mask: u64) -> SoftSet {
        assert!(ground.cells() <= 64, "mask form needs at most 64 cells");
        SoftSet::from_bits(ground, Bits::from_mask(ground.cells(), mask))
    }

    fn with_bits(&self, bits: Bits) -> SoftSet {
        SoftSet {
            ground: self.ground.clone(),
            bits,
        }
    }

    fn check_ground(&self, other: &SoftSet) -> Result<()> {
        if same_ground(&self.ground, &other.ground) {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }
}

/// Renders the canonical literal, e.g. `{e1:{a,b}; e2:{}}`.
impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (param_ix, param) in self.ground.params().iter().enumerate() {
            if param_ix > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{param}:{{")?;
            let mut first = true;
            for (elem_ix, elem) in self.ground.universe().iter().enumerate() {
                if self.contains_cell(param_ix, elem_ix) {
                    if !first {
                        write!(f, ",")?;
                    }
                    write!(f, "{elem}")?;
                    first = false;
                }
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// A soft point `z(e)`: the soft set with exactly one cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SoftPoint {
    ground: Arc<Ground>,
    param_ix: usize,
    elem_ix: usize,
}

impl SoftPoint {
    pub(crate) fn new(ground: Arc<Ground>, param_ix: usize, elem_ix: usize) -> SoftPoint {
        SoftPoint {
            ground,
            param_ix,
            elem_ix,
        }
    }

    pub fn ground(&self) -> &Arc<Ground> {
        &self.ground
    }

    pub fn param_ix(&self) -> usize {
        self.param_ix
    }

    pub fn elem_ix(&self) -> usize {
        self.elem_ix
    }

    /// The singleton soft set `{z(e)}`.
    pub fn to_set(&self) -> SoftSet {
        let mut set = SoftSet::empty(&self.ground);
        set.insert_cell(self.param_ix, self.elem_ix);
        set
    }
}

impl fmt::Display for SoftPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({})",
            self.ground.universe()[self.elem_ix],
            self.ground.params()[self.param_ix]
        )
    }
}
