//! Decision procedures for the topological properties the maximality
//! machinery quantifies over: connectedness, compactness, separation
//! axioms, submaximality, stability, and soft-map properties.
//!
//! All checkers are pure functions over immutable inputs.

use crate::error::{Error, Result};
use crate::func::SoftFunction;
use crate::ground::same_ground;
use crate::set::SoftSet;
use crate::topology::SoftTopology;

/// A space is disconnected when two disjoint non-null opens cover the
/// carrier; the null/absolute pair does not count as a disconnection.
pub fn is_connected(t: &SoftTopology) -> bool {
    let opens = t.opens();
    for (i, g) in opens.iter().enumerate() {
        if g.is_null() {
            continue;
        }
        for h in &opens[i + 1..] {
            if h.is_null() {
                continue;
            }
            let disjoint = g.is_disjoint(h).expect("same ground");
            if disjoint && g.union(h).expect("same ground") == *t.carrier() {
                return false;
            }
        }
    }
    true
}

/// Connectedness of a non-null soft subset in its relative topology.
pub fn is_connected_subset(t: &SoftTopology, subset: &SoftSet) -> Result<bool> {
    if subset.is_null() {
        return Err(Error::Precondition(
            "connectedness of a subset requires a non-null subset".into(),
        ));
    }
    Ok(is_connected(&t.relative(subset)?))
}

/// Soft compactness of a subset: every cover by opens of the ambient
/// topology admits a finite subcover. On a finite ground this always holds;
/// the constant answer is licensed by the exhaustive checker below, which
/// the test suite keeps in agreement with this one.
pub fn is_compact_subset(t: &SoftTopology, subset: &SoftSet) -> Result<bool> {
    if !same_ground(subset.ground(), t.ground()) {
        return Err(Error::GroundMismatch);
    }
    if !subset.is_subset(t.carrier())? {
        return Err(Error::Rejected("set must be contained in the carrier".into()));
    }
    Ok(true)
}

/// Exhaustive compactness: walks every open cover of the subset and finds a
/// minimal finite subcover for it.
pub fn is_compact_subset_exhaustive(t: &SoftTopology, subset: &SoftSet) -> Result<bool> {
    if !same_ground(subset.ground(), t.ground()) {
        return Err(Error::GroundMismatch);
    }
    if !subset.is_subset(t.carrier())? {
        return Err(Error::Rejected("set must be contained in the carrier".into()));
    }
    let opens = t.opens();
    if opens.len() > 16 {
        return Err(Error::Capacity(format!(
            "exhaustive cover search over {} opens",
            opens.len()
        )));
    }
    let covers_subset = |members: &[usize]| -> bool {
        let mut acc = SoftSet::empty(t.ground());
        for &i in members {
            acc = acc.union(&opens[i]).expect("same ground");
        }
        subset.is_subset(&acc).expect("same ground")
    };
    for choice in 0u64..(1 << opens.len()) {
        let members: Vec<usize> =
            (0..opens.len()).filter(|&i| choice & (1 << i) != 0).collect();
        if !covers_subset(&members) {
            continue;
        }
        // Shrink to a minimal subcover; its existence is the finite subcover.
        let mut minimal = members.clone();
        let mut i = 0;
        while i < minimal.len() {
            let mut trial = minimal.clone();
            trial.remove(i);
            if covers_subset(&trial) {
                minimal = trial;
            } else {
                i += 1;
            }
        }
        if !covers_subset(&minimal) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparationLevel {
    T0,
    T1,
    T2,
}

impl std::str::FromStr for SeparationLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<SeparationLevel> {
        match s {
            "t0" | "T0" => Ok(SeparationLevel::T0),
            "t1" | "T1" => Ok(SeparationLevel::T1),
            "t2" | "T2" => Ok(SeparationLevel::T2),
            other => Err(Error::Rejected(format!("unknown separation level `{other}`"))),
        }
    }
}

/// Separation axioms over soft points (= cells of the carrier).
///
/// T0 separates every pair of distinct soft points by some open containing
/// exactly one; T1 is the singleton-soft-point-closed criterion; T2 asks for
/// disjoint open neighbourhoods.
pub fn separation_axiom(t: &SoftTopology, level: SeparationLevel) -> bool {
    let cells: Vec<usize> = t.carrier().bits().ones().collect();
    let point_in = |open: &SoftSet, cell: usize| open.bits().get(cell);
    match level {
        SeparationLevel::T0 => {
            for (i, &u) in cells.iter().enumerate() {
                for &v in &cells[i + 1..] {
                    let separated = t
                        .opens()
                        .iter()
                        .any(|g| point_in(g, u) != point_in(g, v));
                    if !separated {
                        return false;
                    }
                }
            }
            true
        }
        SeparationLevel::T1 => cells.iter().all(|&u| {
            let mut singleton = SoftSet::empty(t.ground());
            let (p, z) = t.ground().cell_coords(u);
            singleton.insert_cell(p, z);
            t.is_closed(&singleton).expect("singleton is in the carrier")
        }),
        SeparationLevel::T2 => {
            for (i, &u) in cells.iter().enumerate() {
                for &v in &cells[i + 1..] {
                    let mut found = false;
                    'search: for g in t.opens() {
                        if !point_in(g, u) {
                            continue;
                        }
                        for h in t.opens() {
                            if point_in(h, v) && g.is_disjoint(h).expect("same ground") {
                                found = true;
                                break 'search;
                            }
                        }
                    }
                    if !found {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// The symmetric point-separation form of T1 (each point of a pair has an
/// open excluding the other). Kept separate so the suite can report whether
/// it ever diverges from the singleton-closed criterion.
pub fn point_separation_t1(t: &SoftTopology) -> bool {
    let cells: Vec<usize> = t.carrier().bits().ones().collect();
    for (i, &u) in cells.iter().enumerate() {
        for &v in &cells[i + 1..] {
            let u_without_v = t
                .opens()
                .iter()
                .any(|g| g.bits().get(u) && !g.bits().get(v));
            let v_without_u = t
                .opens()
                .iter()
                .any(|g| g.bits().get(v) && !g.bits().get(u));
            if !(u_without_v && v_without_u) {
                return false;
            }
        }
    }
    true
}

/// Submaximal: every dense soft subset of the carrier is open.
pub fn is_submaximal(t: &SoftTopology) -> Result<bool> {
    let positions: Vec<usize> = t.carrier().bits().ones().collect();
    let k = positions.len();
    if k > 20 {
        return Err(Error::Capacity(format!(
            "submaximality enumerates 2^{k} subsets"
        )));
    }
    let compress = |s: &SoftSet| -> u64 {
        let mut out = 0u64;
        for (bit, &pos) in positions.iter().enumerate() {
            if s.bits().get(pos) {
                out |= 1 << bit;
            }
        }
        out
    };
    let opens_c: Vec<u64> = t.opens().iter().map(compress).collect();
    let nonnull: Vec<u64> = opens_c.iter().copied().filter(|&m| m != 0).collect();
    for candidate in 0u64..(1 << k) {
        // Dense exactly when it meets every non-null open.
        let dense = nonnull.iter().all(|&g| g & candidate != 0);
        if dense && opens_c.binary_search(&candidate).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stable space: every open has identical components across parameters.
pub fn is_stable_space(t: &SoftTopology) -> bool {
    t.opens().iter().all(|o| o.is_stable())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapProperty {
    Continuous,
    Open,
    Homeomorphism,
}

/// Soft continuity / openness / homeomorphism of a soft function between two
/// whole spaces.
pub fn map_property(
    f: &SoftFunction,
    t_src: &SoftTopology,
    t_dst: &SoftTopology,
    which: MapProperty,
) -> Result<bool> {
    if !same_ground(f.src(), t_src.ground()) || !same_ground(f.dst(), t_dst.ground()) {
        return Err(Error::GroundMismatch);
    }
    if !t_src.carrier().is_absolute() || !t_dst.carrier().is_absolute() {
        return Err(Error::Rejected(
            "map properties are defined between whole spaces".into(),
        ));
    }
    let continuous = || -> Result<bool> {
        for o in t_dst.opens() {
            if !t_src.is_open(&f.preimage(o)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let open = || -> Result<bool> {
        for o in t_src.opens() {
            if !t_dst.is_open(&f.image(o)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match which {
        MapProperty::Continuous => continuous(),
        MapProperty::Open => open(),
        MapProperty::Homeomorphism => Ok(f.is_bijective() && continuous()? && open()?),
    }
}
