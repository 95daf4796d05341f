//! The ground of a soft computation: an ordered universe `Z` and an ordered
//! parameter set `E`. Every soft set, topology, and function refers back to
//! one shared ground; the cell grid `E x Z` is indexed row-by-parameter.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::set::{SoftPoint, SoftSet};

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ground {
    universe: Vec<String>,
    params: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ground {
    /// Builds a ground from element names (`Z`) and parameter names (`E`).
    ///
    /// Both lists must be non-empty and duplicate-free; names are restricted
    /// to `[A-Za-z0-9_]+` so every value round-trips through the textual
    /// literal formats.
    pub fn new<S: Into<String>>(
        universe: impl IntoIterator<Item = S>,
        params: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Ground>> {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        if universe.is_empty() {
            return Err(Error::InvalidGround("universe must be non-empty".into()));
        }
        if params.is_empty() {
            return Err(Error::InvalidGround(
                "parameter set must be non-empty".into(),
            ));
        }
        for name in universe.iter().chain(&params) {
            if !valid_name(name) {
                return Err(Error::InvalidGround(format!(
                    "name `{name}` must match [A-Za-z0-9_]+"
                )));
            }
        }
        for (list, what) in [(&universe, "universe"), (&params, "parameter set")] {
            let mut seen = std::collections::HashSet::new();
            for name in list.iter() {
                if !seen.insert(name) {
                    return Err(Error::InvalidGround(format!(
                        "duplicate name `{name}` in {what}"
                    )));
                }
            }
        }
        Ok(Arc::new(Ground { universe, params }))
    }

    /// Ground with parameters `e1..em` and elements `a, b, c, ...`; the
    /// shape used by enumeration scans.
    pub fn canonical(n_params: usize, n_elems: usize) -> Arc<Ground> {
        assert!(n_elems <= 26, "canonical grounds use single-letter elements");
        let universe = (0..n_elems).map(|i| ((b'a' + i as u8) as char).to_string());
        let params = (1..=n_params).map(|i| format!("e{i}"));
        Ground::new(universe, params).expect("canonical names are valid")
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn n_elems(&self) -> usize {
        self.universe.len()
    }

    pub fn n_params(&self) -> usize {
        self.params.len()
    }

    /// Number of cells in the grid `E x Z`.
    pub fn cells(&self) -> usize {
        self.universe.len() * self.params.len()
    }

    pub fn elem_index(&self, name: &str) -> Result<usize> {
        self.universe
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn param_index(&self, name: &str) -> Result<usize> {
        self.params
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }

    pub fn cell_index(&self, param_ix: usize, elem_ix: usize) -> usize {
        debug_assert!(param_ix < self.n_params() && elem_ix < self.n_elems());
        param_ix * self.n_elems() + elem_ix
    }

    /// Inverse of [`cell_index`](Self::cell_index).
    pub fn cell_coords(&self, cell: usize) -> (usize, usize) {
        (cell / self.n_elems(), cell % self.n_elems())
    }

    /// The null soft set.
    pub fn null_set(self: &Arc<Self>) -> SoftSet {
        SoftSet::empty(self)
    }

    /// The absolute soft set.
    pub fn absolute_set(self: &Arc<Self>) -> SoftSet {
        SoftSet::absolute(self)
    }

    /// The soft point `z(e)`.
    pub fn soft_point(self: &Arc<Self>, elem: &str, param: &str) -> Result<SoftPoint> {
        let elem_ix = self.elem_index(elem)?;
        let param_ix = self.param_index(param)?;
        Ok(SoftPoint::new(self.clone(), param_ix, elem_ix))
    }

    /// The soft element `({z}, E)`: the cell set `{(e, z) : e in E}`.
    pub fn soft_element(self: &Arc<Self>, elem: &str) -> Result<SoftSet> {
        let elem_ix = self.elem_index(elem)?;
        let mut set = SoftSet::empty(self);
        for param_ix in 0..self.n_params() {
            set.insert_cell(param_ix, elem_ix);
        }
        Ok(set)
    }
}

/// True when two grounds are interchangeable (same names in the same order).
pub fn same_ground(a: &Arc<Ground>, b: &Arc<Ground>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grounds() {
        assert!(Ground::new(Vec::<String>::new(), vec!["e1".into()]).is_err());
        assert!(Ground::new(vec!["a".into()], Vec::<String>::new()).is_err());
        assert!(Ground::new(vec!["a", "a"], vec!["e1"]).is_err());
        assert!(Ground::new(vec!["a b"], vec!["e1"]).is_err());
        assert!(Ground::new(vec![""], vec!["e1"]).is_err());
    }

    #[test]
    fn cell_indexing_round_trips() {
        let g = Ground::canonical(2, 3);
        assert_eq!(g.cells(), 6);
        for cell in 0..g.cells() {
            let (p, z) = g.cell_coords(cell);
            assert_eq!(g.cell_index(p, z), cell);
        }
    }

    #[test]
    fn name_lookup() {
        let g = Ground::canonical(2, 2);
        assert_eq!(g.elem_index("b").unwrap(), 1);
        assert_eq!(g.param_index("e2").unwrap(), 1);
        assert!(matches!(
            g.elem_index("z"),
            Err(Error::UnknownElement(_))
        ));
        assert!(matches!(
            g.param_index("e9"),
            Err(Error::UnknownParameter(_))
        ));
    }
}
