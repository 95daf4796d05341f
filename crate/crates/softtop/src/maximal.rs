//! Gamma-maximality of soft topologies: a topology with a property is
//! maximal when no strictly finer topology keeps the property.
//!
//! Three routes are implemented. `Brute` enumerates every finer topology.
//! `Extension` quantifies over single-set s-extensions only, which is
//! equivalent by coarsening monotonicity: a finer topology with the property
//! contains some non-open set `Y`, and the property passes down to the
//! intermediate extension `T[Y]`. `Characterization` (compactness only)
//! compares the closed and compact set families. `All` runs every route
//! that fits its capacity guard and insists they agree.

use std::fmt;

use crate::enumerate::{enumerate_topologies_within, ENUM_CELL_GUARD};
use crate::error::{Error, Result};
use crate::props;
use crate::set::SoftSet;
use crate::topology::SoftTopology;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Compact,
    Connected,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Compact => write!(f, "compact"),
            Property::Connected => write!(f, "connected"),
        }
    }
}

impl std::str::FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Property> {
        match s {
            "compact" => Ok(Property::Compact),
            "connected" => Ok(Property::Connected),
            other => Err(Error::Rejected(format!("unknown property `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Extension,
    Characterization,
    All,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        match s {
            "brute" => Ok(Method::Brute),
            "extension" => Ok(Method::Extension),
            "characterization" => Ok(Method::Characterization),
            "all" => Ok(Method::All),
            other => Err(Error::Rejected(format!("unknown method `{other}`"))),
        }
    }
}

/// Whether the space itself has the property.
pub fn space_has_property(t: &SoftTopology, property: Property) -> Result<bool> {
    match property {
        Property::Compact => props::is_compact_subset(t, t.carrier()),
        Property::Connected => Ok(props::is_connected(t)),
    }
}

/// All strictly finer topologies over the same carrier, in canonical order.
/// This is the brute-force oracle for maximality; guarded by the enumeration
/// cell limit.
pub fn finer_topologies(t: &SoftTopology) -> Result<Vec<SoftTopology>> {
    let all = enumerate_topologies_within(t.carrier(), ENUM_CELL_GUARD)?;
    let mut finer = Vec::new();
    for candidate in all {
        if t.is_strictly_coarser(&candidate)? {
            finer.push(candidate);
        }
    }
    Ok(finer)
}

/// Decides Gamma-maximality by the requested route(s). The topology must
/// have the property to begin with.
pub fn is_maximal(t: &SoftTopology, property: Property, method: Method) -> Result<bool> {
    if !space_has_property(t, property)? {
        return Err(Error::Precondition(format!(
            "the space is not soft {property}"
        )));
    }
    match method {
        Method::Brute => brute(t, property),
        Method::Extension => extension(t, property),
        Method::Characterization => characterization(t, property),
        Method::All => {
            let mut results: Vec<(&str, bool)> = Vec::new();
            if t.carrier().cell_count() <= ENUM_CELL_GUARD {
                results.push(("brute", brute(t, property)?));
            }
            results.push(("extension", extension(t, property)?));
            if property == Property::Compact {
                results.push(("characterization", characterization(t, property)?));
            }
            let first = results[0].1;
            if results.iter().any(|&(_, r)| r != first) {
                let detail: Vec<String> = results
                    .iter()
                    .map(|(name, r)| format!("{name}={r}"))
                    .collect();
                return Err(Error::MethodDisagreement(format!(
                    "{} on {}",
                    detail.join(" "),
                    t
                )));
            }
            Ok(first)
        }
    }
}

fn brute(t: &SoftTopology, property: Property) -> Result<bool> {
    for finer in finer_topologies(t)? {
        if space_has_property(&finer, property)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn extension(t: &SoftTopology, property: Property) -> Result<bool> {
    for y in non_open_subsets(t, 10)? {
        let extended = t.s_extension(&y)?;
        if space_has_property(&extended, property)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn characterization(t: &SoftTopology, property: Property) -> Result<bool> {
    if property != Property::Compact {
        return Err(Error::Rejected(
            "the closed-equals-compact characterization applies to compactness only".into(),
        ));
    }
    for y in all_subsets(t, 20)? {
        if t.is_closed(&y)? != props::is_compact_subset(t, &y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn all_subsets(t: &SoftTopology, max_cells: usize) -> Result<Vec<SoftSet>> {
    let positions: Vec<usize> = t.carrier().bits().ones().collect();
    if positions.len() > max_cells {
        return Err(Error::Capacity(format!(
            "subset scan over 2^{} soft sets",
            positions.len()
        )));
    }
    let ground = t.ground();
    let mut out = Vec::with_capacity(1 << positions.len());
    for choice in 0u64..(1 << positions.len()) {
        let mut bits = crate::bits::Bits::empty(ground.cells());
        for (k, &pos) in positions.iter().enumerate() {
            if choice & (1 << k) != 0 {
                bits.set(pos, true);
            }
        }
        out.push(SoftSet::from_bits(ground, bits));
    }
    Ok(out)
}

fn non_open_subsets(t: &SoftTopology, max_cells: usize) -> Result<Vec<SoftSet>> {
    Ok(all_subsets(t, max_cells)?
        .into_iter()
        .filter(|y| !t.is_open(y))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_topologies;
    use crate::ground::Ground;
    use std::sync::Arc;

    fn g12() -> Arc<Ground> {
        Ground::canonical(1, 2)
    }

    fn sierpinski(g: &Arc<Ground>, mask: u64) -> SoftTopology {
        SoftTopology::generate(g, &[SoftSet::from_mask(g, mask)]).unwrap()
    }

    #[test]
    fn finer_topology_examples() {
        let g = g12();
        assert!(finer_topologies(&SoftTopology::discrete(&g).unwrap())
            .unwrap()
            .is_empty());
        let finer = finer_topologies(&SoftTopology::indiscrete(&g)).unwrap();
        assert_eq!(finer.len(), 3);
        assert_eq!(
            finer_topologies(&sierpinski(&g, 1)).unwrap(),
            vec![SoftTopology::discrete(&g).unwrap()]
        );
    }

    #[test]
    fn precondition_is_enforced() {
        let g = g12();
        let disc = SoftTopology::discrete(&g).unwrap();
        assert!(matches!(
            is_maximal(&disc, Property::Connected, Method::Brute),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sierpinski_is_maximal_connected() {
        let g = g12();
        let s = sierpinski(&g, 1);
        for method in [Method::Brute, Method::Extension, Method::All] {
            assert!(is_maximal(&s, Property::Connected, method).unwrap());
        }
        assert!(!is_maximal(
            &SoftTopology::indiscrete(&g),
            Property::Connected,
            Method::All
        )
        .unwrap());
    }

    #[test]
    fn characterization_rejects_connectedness() {
        let g = g12();
        let s = sierpinski(&g, 1);
        assert!(matches!(
            is_maximal(&s, Property::Connected, Method::Characterization),
            Err(Error::Rejected(_))
        ));
    }

    #[test]
    fn maximal_compact_is_exactly_discrete_on_finite_grounds() {
        for (m, k) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)] {
            let g = Ground::canonical(m, k);
            let discrete = SoftTopology::discrete(&g).unwrap();
            for t in enumerate_topologies(&g).unwrap() {
                let expected = t == discrete;
                for method in [Method::Brute, Method::Extension, Method::Characterization] {
                    assert_eq!(
                        is_maximal(&t, Property::Compact, method).unwrap(),
                        expected,
                        "{t} via {method:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn methods_agree_on_all_small_topologies() {
        for (m, k) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)] {
            let g = Ground::canonical(m, k);
            for t in enumerate_topologies(&g).unwrap() {
                // Compactness always holds; `All` hard-errors on any
                // disagreement between routes.
                is_maximal(&t, Property::Compact, Method::All).unwrap();
                if props::is_connected(&t) {
                    let brute = is_maximal(&t, Property::Connected, Method::Brute).unwrap();
                    let ext =
                        is_maximal(&t, Property::Connected, Method::Extension).unwrap();
                    assert_eq!(brute, ext, "{t}");
                    is_maximal(&t, Property::Connected, Method::All).unwrap();
                }
            }
        }
    }

    #[test]
    fn maximal_connected_extensions_are_disconnected() {
        // Direct restatement of the extension route, asserted independently.
        let g = Ground::canonical(1, 3);
        for t in enumerate_topologies(&g).unwrap() {
            if !props::is_connected(&t) {
                continue;
            }
            if !is_maximal(&t, Property::Connected, Method::Brute).unwrap() {
                continue;
            }
            for mask in 0..8u64 {
                let y = SoftSet::from_mask(&g, mask);
                if t.is_open(&y) {
                    continue;
                }
                let ext = t.s_extension(&y).unwrap();
                assert!(t.is_strictly_coarser(&ext).unwrap());
                assert!(!props::is_connected(&ext));
            }
        }
    }

    #[test]
    fn subspace_maximality_uses_the_carrier() {
        // The relative Sierpinski topology on a 2-cell carrier inside a
        // 3-cell ground behaves like the 2-cell space.
        let g = Ground::canonical(1, 3);
        let y = SoftSet::from_mask(&g, 0b011);
        let t = SoftTopology::generate_within(&y, &[SoftSet::from_mask(&g, 0b001)]).unwrap();
        assert!(is_maximal(&t, Property::Connected, Method::All).unwrap());
        let finer = finer_topologies(&t).unwrap();
        assert_eq!(finer.len(), 1);
        assert_eq!(finer[0], SoftTopology::discrete_within(&y).unwrap());
    }
}
