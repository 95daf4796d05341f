//! Exhaustive verification of the maximality claims over every soft
//! topology on every ground shape up to a cell bound.
//!
//! Each claim scan walks grounds in a fixed order and topologies in
//! canonical order, so reports are byte-identical across runs. Within a
//! ground the per-topology checks run in parallel; counterexamples are
//! merged by taking the least topology index, which keeps the output
//! independent of the worker count.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::func::{all_bijections, SoftFunction};
use crate::ground::Ground;
use crate::maximal::Property;
use crate::props::{self, MapProperty, SeparationLevel};
use crate::set::SoftSet;
use crate::topology::SoftTopology;

/// Largest cell bound the claim scans accept.
pub const CLAIM_BOUND_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimId {
    /// Complete-lattice laws: subfamily meets/joins are glb/lub.
    Lat1,
    /// Interior/closure complement duality.
    Dual1,
    /// An s-extension by `Y` is compact iff `Y^c` is compact below.
    Ext1,
    /// Maximal compact iff the closed and compact families coincide.
    Mc1,
    /// Maximal compact implies T1.
    Mc2,
    /// Maximal compact iff every soft continuous bijection from a compact
    /// space onto the space is a homeomorphism.
    Mc3,
    /// Stable compact T2 implies maximal compact.
    Mc4,
    /// Maximal connected implies T0.
    Cn1,
    /// Maximal connected implies submaximal.
    Cn2,
    /// Connected subspaces of a maximal connected space are maximal
    /// connected in their relative topology.
    Cn3,
    /// An s-extension by a dense set preserves connectedness.
    Cn4,
    /// Observe-mode: complementary connected subspaces, one of them open,
    /// force maximal connectedness. Scanned under several readings and
    /// reported without asserting any of them.
    Cn5,
    /// Bijective soft functions commute with complement.
    Fun1,
}

pub const ALL_CLAIMS: [ClaimId; 13] = [
    ClaimId::Lat1,
    ClaimId::Dual1,
    ClaimId::Ext1,
    ClaimId::Mc1,
    ClaimId::Mc2,
    ClaimId::Mc3,
    ClaimId::Mc4,
    ClaimId::Cn1,
    ClaimId::Cn2,
    ClaimId::Cn3,
    ClaimId::Cn4,
    ClaimId::Cn5,
    ClaimId::Fun1,
];

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClaimId::Lat1 => "LAT1",
            ClaimId::Dual1 => "DUAL1",
            ClaimId::Ext1 => "EXT1",
            ClaimId::Mc1 => "MC1",
            ClaimId::Mc2 => "MC2",
            ClaimId::Mc3 => "MC3",
            ClaimId::Mc4 => "MC4",
            ClaimId::Cn1 => "CN1",
            ClaimId::Cn2 => "CN2",
            ClaimId::Cn3 => "CN3",
            ClaimId::Cn4 => "CN4",
            ClaimId::Cn5 => "CN5",
            ClaimId::Fun1 => "FUN1",
        };
        write!(f, "{name}")
    }
}

impl std::str::FromStr for ClaimId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ClaimId> {
        ALL_CLAIMS
            .iter()
            .copied()
            .find(|c| c.to_string() == s.to_uppercase())
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample,
    Observed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Counterexample => write!(f, "CE"),
            Verdict::Observed => write!(f, "OBSERVED"),
        }
    }
}

/// A replayable counterexample: the ground, the topology, the sets and the
/// map involved, plus a note saying what failed.
#[derive(Debug, Clone)]
pub struct Witness {
    pub ground: Arc<Ground>,
    pub topology: Option<SoftTopology>,
    pub sets: Vec<SoftSet>,
    pub map: Option<SoftFunction>,
    pub note: String,
}

impl Witness {
    fn new(ground: &Arc<Ground>, note: impl Into<String>) -> Witness {
        Witness {
            ground: ground.clone(),
            topology: None,
            sets: Vec::new(),
            map: None,
            note: note.into(),
        }
    }

    fn with_topology(mut self, t: &SoftTopology) -> Witness {
        self.topology = Some(t.clone());
        self
    }

    fn with_set(mut self, s: &SoftSet) -> Witness {
        self.sets.push(s.clone());
        self
    }

    fn with_map(mut self, f: &SoftFunction) -> Witness {
        self.map = Some(f.clone());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[Z={} E={}",
            self.ground.universe().join(","),
            self.ground.params().join(",")
        )?;
        if let Some(t) = &self.topology {
            write!(f, " | topology={t}")?;
        }
        for (i, s) in self.sets.iter().enumerate() {
            write!(f, " | set{}={}", i + 1, s)?;
        }
        if let Some(m) = &self.map {
            write!(f, " | map={m}")?;
        }
        if !self.note.is_empty() {
            write!(f, " | {}", self.note)?;
        }
        write!(f, "]")
    }
}

/// One observe-mode reading outcome.
#[derive(Debug, Clone)]
pub struct Finding {
    pub reading: &'static str,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub bound: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub findings: Vec<Finding>,
}

impl ClaimReport {
    /// Line-oriented text record:
    /// `claim=<id> bound=<n> verdict=<PASS|CE|OBSERVED> witness=<literal or ->`,
    /// followed by one `finding` line per observe-mode reading.
    pub fn render(&self) -> String {
        let mut out = format!(
            "claim={} bound={} verdict={} witness={}",
            self.claim,
            self.bound,
            self.verdict,
            match &self.witness {
                Some(w) => w.to_string(),
                None => "-".to_string(),
            }
        );
        for finding in &self.findings {
            out.push_str(&format!(
                "\nfinding claim={} reading={} verdict={} witness={}",
                self.claim,
                finding.reading,
                finding.verdict,
                match &finding.witness {
                    Some(w) => w.to_string(),
                    None => "-".to_string(),
                }
            ));
        }
        out
    }
}

/// Ground shapes scanned for a bound: every `(|E|, |Z|)` with
/// `|E| * |Z| <= bound`, ordered by cell count then parameter count.
pub fn scan_grounds(bound: usize) -> Vec<Arc<Ground>> {
    let mut shapes = Vec::new();
    for cells in 1..=bound {
        for m in 1..=cells {
            if cells % m == 0 {
                shapes.push((m, cells / m));
            }
        }
    }
    shapes.sort_by_key(|&(m, k)| (m * k, m));
    shapes
        .into_iter()
        .map(|(m, k)| Ground::canonical(m, k))
        .collect()
}

fn all_sets(ground: &Arc<Ground>) -> Vec<SoftSet> {
    (0..(1u64 << ground.cells()))
        .map(|mask| SoftSet::from_mask(ground, mask))
        .collect()
}

fn canonical_cmp(a: &SoftTopology, b: &SoftTopology) -> Ordering {
    a.opens()
        .len()
        .cmp(&b.opens().len())
        .then_with(|| a.opens().cmp(b.opens()))
}

/// Per-ground context shared by the claim scans.
struct Scan {
    ground: Arc<Ground>,
    topologies: Vec<SoftTopology>,
    sets: Vec<SoftSet>,
}

impl Scan {
    fn new(ground: &Arc<Ground>) -> Result<Scan> {
        Ok(Scan {
            ground: ground.clone(),
            topologies: crate::enumerate::enumerate_topologies(ground)?,
            sets: all_sets(ground),
        })
    }

    fn find(&self, t: &SoftTopology) -> Option<usize> {
        self.topologies
            .binary_search_by(|probe| canonical_cmp(probe, t))
            .ok()
    }

    /// Maximality against the precomputed enumeration (brute route).
    fn brute_maximal(&self, t: &SoftTopology, property: Property) -> bool {
        match property {
            Property::Compact => {}
            Property::Connected => {
                if !props::is_connected(t) {
                    return false;
                }
            }
        }
        !self.topologies.iter().any(|finer| {
            t.is_strictly_coarser(finer).expect("same carrier")
                && match property {
                    Property::Compact => true,
                    Property::Connected => props::is_connected(finer),
                }
        })
    }
}

/// Runs a per-topology check in parallel and keeps the least-index witness,
/// so the outcome does not depend on the worker count.
fn first_witness<F>(scan: &Scan, check: F) -> Result<Option<Witness>>
where
    F: Fn(&SoftTopology) -> Result<Option<Witness>> + Sync,
{
    let outcomes: Vec<Result<Option<Witness>>> =
        scan.topologies.par_iter().map(&check).collect();
    for outcome in outcomes {
        match outcome {
            Err(e) => return Err(e),
            Ok(Some(w)) => return Ok(Some(w)),
            Ok(None) => {}
        }
    }
    Ok(None)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Compactness via the exhaustive cover search wherever that is affordable
/// (every topology at bound 3), falling back to the validated constant
/// checker on larger open families.
fn compact_checked(t: &SoftTopology, y: &SoftSet) -> Result<bool> {
    if t.opens().len() <= 8 {
        props::is_compact_subset_exhaustive(t, y)
    } else {
        props::is_compact_subset(t, y)
    }
}

/// Verifies one claim by exhaustive scan up to `bound` cells.
pub fn verify_claim(claim: ClaimId, bound: usize) -> Result<ClaimReport> {
    if bound == 0 {
        return Err(Error::Rejected("bound must be at least 1".into()));
    }
    if bound > CLAIM_BOUND_CAP {
        return Err(Error::Capacity(format!(
            "claim scans are guarded at {CLAIM_BOUND_CAP} cells"
        )));
    }
    let grounds = scan_grounds(bound);
    if claim == ClaimId::Cn5 {
        return Ok(ClaimReport {
            claim,
            bound,
            verdict: Verdict::Observed,
            witness: None,
            findings: cn5_findings(&grounds)?,
        });
    }
    let mut witness = None;
    for ground in &grounds {
        let scan = Scan::new(ground)?;
        let found = match claim {
            ClaimId::Lat1 => claim_lat1(&scan)?,
            ClaimId::Dual1 => claim_dual1(&scan)?,
            ClaimId::Ext1 => claim_ext1(&scan)?,
            ClaimId::Mc1 => claim_mc1(&scan)?,
            ClaimId::Mc2 => claim_mc2(&scan)?,
            ClaimId::Mc3 => claim_mc3(&scan)?,
            ClaimId::Mc4 => claim_mc4(&scan)?,
            ClaimId::Cn1 => claim_cn1(&scan)?,
            ClaimId::Cn2 => claim_cn2(&scan)?,
            ClaimId::Cn3 => claim_cn3(&scan)?,
            ClaimId::Cn4 => claim_cn4(&scan)?,
            ClaimId::Fun1 => claim_fun1(&scan)?,
            ClaimId::Cn5 => unreachable!(),
        };
        if let Some(w) = found {
            witness = Some(w);
            break;
        }
    }
    Ok(ClaimReport {
        claim,
        bound,
        verdict: if witness.is_some() {
            Verdict::Counterexample
        } else {
            Verdict::Pass
        },
        witness,
        findings: Vec::new(),
    })
}

/// Verifies every claim, in catalog order.
pub fn verify_all(bound: usize) -> Result<Vec<ClaimReport>> {
    ALL_CLAIMS
        .iter()
        .map(|&claim| verify_claim(claim, bound))
        .collect()
}

fn claim_lat1(scan: &Scan) -> Result<Option<Witness>> {
    let n = scan.topologies.len();
    // Empty subfamily: glb is the finest node, lub the coarsest.
    let top = &scan.topologies[n - 1];
    let bottom = &scan.topologies[0];
    for t in &scan.topologies {
        if !t.is_coarser_or_equal(top)? || !bottom.is_coarser_or_equal(t)? {
            return Ok(Some(Witness::new(
                &scan.ground,
                "extreme elements are not bounds of the whole lattice",
            )));
        }
    }

    let mut subfamilies: Vec<Vec<usize>> = Vec::new();
    if n <= 40 {
        for i in 0..n {
            subfamilies.push(vec![i]);
            for j in i..n {
                subfamilies.push(vec![i, j]);
                for k in j..n {
                    subfamilies.push(vec![i, j, k]);
                }
            }
        }
    } else {
        for i in 0..n {
            subfamilies.push(vec![i]);
            for j in i..n {
                subfamilies.push(vec![i, j]);
            }
        }
        let mut state = 0x1a77_1ce5;
        for _ in 0..20_000 {
            let i = (splitmix64(&mut state) % n as u64) as usize;
            let j = (splitmix64(&mut state) % n as u64) as usize;
            let k = (splitmix64(&mut state) % n as u64) as usize;
            subfamilies.push(vec![i, j, k]);
        }
    }
    let mut state = 0x1a77_1ce5 ^ 0xffff;
    for _ in 0..1000 {
        let size = 4 + (splitmix64(&mut state) % 5) as usize;
        subfamilies.push(
            (0..size)
                .map(|_| (splitmix64(&mut state) % n as u64) as usize)
                .collect(),
        );
    }

    let outcome = subfamilies
        .par_iter()
        .map(|members| -> Result<Option<Witness>> {
            let mut glb = scan.topologies[members[0]].clone();
            let mut lub = scan.topologies[members[0]].clone();
            for &m in &members[1..] {
                glb = glb.meet(&scan.topologies[m])?;
                lub = lub.join(&scan.topologies[m])?;
            }
            let describe = |what: &str| {
                Witness::new(
                    &scan.ground,
                    format!("{what} for subfamily indices {members:?}"),
                )
            };
            if scan.find(&glb).is_none() || scan.find(&lub).is_none() {
                return Ok(Some(describe("meet or join left the lattice")));
            }
            for &m in members {
                if !glb.is_coarser_or_equal(&scan.topologies[m])? {
                    return Ok(Some(describe("meet is not a lower bound")));
                }
                if !scan.topologies[m].is_coarser_or_equal(&lub)? {
                    return Ok(Some(describe("join is not an upper bound")));
                }
            }
            for candidate in &scan.topologies {
                let lower = members
                    .iter()
                    .all(|&m| candidate.is_coarser_or_equal(&scan.topologies[m]).unwrap());
                if lower && !candidate.is_coarser_or_equal(&glb)? {
                    return Ok(Some(describe("meet is not the greatest lower bound")));
                }
                let upper = members
                    .iter()
                    .all(|&m| scan.topologies[m].is_coarser_or_equal(candidate).unwrap());
                if upper && !lub.is_coarser_or_equal(candidate)? {
                    return Ok(Some(describe("join is not the least upper bound")));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(outcome.into_iter().flatten().next())
}

fn claim_dual1(scan: &Scan) -> Result<Option<Witness>> {
    first_witness(scan, |t| {
        for y in &scan.sets {
            let int_of_comp = t.interior(&y.complement())?;
            let cl = t.closure(y)?;
            if int_of_comp != cl.complement() {
                return Ok(Some(
                    Witness::new(&scan.ground, "Int(Y^c) != (Cl Y)^c")
                        .with_topology(t)
                        .with_set(y),
                ));
            }
            let cl_of_comp = t.closure(&y.complement())?;
            let int = t.interior(y)?;
            if cl_of_comp != int.complement() {
                return Ok(Some(
                    Witness::new(&scan.ground, "Cl(Y^c) != (Int Y)^c")
                        .with_topology(t)
                        .with_set(y),
                ));
            }
        }
        Ok(None)
    })
}

fn claim_ext1(scan: &Scan) -> Result<Option<Witness>> {
    first_witness(scan, |t| {
        for y in &scan.sets {
            if t.is_open(y) {
                continue;
            }
            let extended = t.s_extension(y)?;
            let ext_compact = compact_checked(&extended, extended.carrier())?;
            let comp_compact = compact_checked(t, &y.complement())?;
            if ext_compact != comp_compact {
                return Ok(Some(
                    Witness::new(
                        &scan.ground,
                        format!(
                            "extension compact={ext_compact} but complement compact={comp_compact}"
                        ),
                    )
                    .with_topology(t)
                    .with_set(y),
                ));
            }
        }
        Ok(None)
    })
}

fn claim_mc1(scan: &Scan) -> Result<Option<Witness>> {
    first_witness(scan, |t| {
        let maximal = scan.brute_maximal(t, Property::Compact);
        let mut closed_eq_compact = true;
        for y in &scan.sets {
            if t.is_closed(y)? != compact_checked(t, y)? {
                closed_eq_compact = false;
                break;
            }
        }
        if maximal != closed_eq_compact {
            return Ok(Some(
                Witness::new(
                    &scan.ground,
                    format!("maximal={maximal} but closed-equals-compact={closed_eq_compact}"),
                )
                .with_topology(t),
            ));
        }
        Ok(None)
    })
}

fn claim_mc2(scan: &Scan) -> Result<Option<Witness>> {
    first_witness(scan, |t| {
        if scan.brute_maximal(t, Property::Compact)
            && !props::separation_axiom(t, SeparationLevel::T1)
        {
            return Ok(Some(
                Witness::new(&scan.ground, "maximal compact but not T1").with_topology(t),
            ));
        }
        Ok(None)
    })
}

fn claim_mc3(scan: &Scan) -> Result<Option<Witness>> {
    let bijections = all_bijections(&scan.ground, &scan.ground);
    first_witness(scan, |t| {
        let maximal = scan.brute_maximal(t, Property::Compact);
        // Every continuous bijection from a compact same-shape space onto t
        // must be a homeomorphism.
        let mut criterion = true;
        let mut culprit: Option<(SoftTopology, SoftFunction)> = None;
        'outer: for src in &scan.topologies {
            if !compact_checked(src, src.carrier())? {
                continue;
            }
            for f in &bijections {
                if props::map_property(f, src, t, MapProperty::Continuous)?
                    && !props::map_property(f, src, t, MapProperty::Homeomorphism)?
                {
                    criterion = false;
                    culprit = Some((src.clone(), f.clone()));
                    break 'outer;
                }
            }
        }
        if maximal != criterion {
            let mut w = Witness::new(
                &scan.ground,
                format!("maximal={maximal} but homeomorphism criterion={criterion}"),
            )
            .with_topology(t);
            if let Some((src, f)) = culprit {
                w.note = format!("{} (source topology {src})", w.note);
                w = w.with_map(&f);
            }
            return Ok(Some(w));
        }
        Ok(None)
    })
}

fn claim_mc4(scan: &Scan) -> Result<Option<Witness>> {
    first_witness(scan, |t| {
        let stable = props::is_stable_space(t);
        let t2 = props::separation_axiom(t, SeparationLevel::T2);
        let compact = compact_checked(t, t.carrier())?;
        if stable && t2 && compact && !scan.brute_maximal(t, Property::Compact) {
            return Ok(Some(
                Witness::new(&scan.ground, "stable compact T2 but not maximal compact")
                    .with_topology(t),
            ));
        }
        Ok(None)
    })
}

fn claim_cn1(scan: &Scan) -> Result<Option<Witness>> {
    first_witness(scan, |t| {
        if scan.brute_maximal(t, Property::Connected)
            && !props::separation_axiom(t, SeparationLevel::T0)
        {
            return Ok(Some(
                Witness::new(&scan.ground, "maximal connected but not T0").with_topology(t),
            ));
        }
        Ok(None)
    })
}

fn claim_cn2(scan: &Scan) -> Result<Option<Witness>> {
    first_witness(scan, |t| {
        if scan.brute_maximal(t, Property::Connected) && !props::is_submaximal(t)? {
            return Ok(Some(
                Witness::new(&scan.ground, "maximal connected but not submaximal")
                    .with_topology(t),
            ));
        }
        Ok(None)
    })
}

fn claim_cn3(scan: &Scan) -> Result<Option<Witness>> {
    // Enumerations of the subspace lattices, one per non-null carrier.
    let mut sub_enums: HashMap<u64, Vec<SoftTopology>> = HashMap::new();
    for y in &scan.sets {
        if !y.is_null() {
            sub_enums.insert(
                y.as_mask(),
                crate::enumerate::enumerate_topologies_within(
                    y,
                    crate::enumerate::ENUM_CELL_GUARD,
                )?,
            );
        }
    }
    first_witness(scan, |t| {
        if !scan.brute_maximal(t, Property::Connected) {
            return Ok(None);
        }
        for y in &scan.sets {
            if y.is_null() {
                continue;
            }
            if !props::is_connected_subset(t, y)? {
                continue;
            }
            let rel = t.relative(y)?;
            let candidates = &sub_enums[&y.as_mask()];
            let rel_maximal = props::is_connected(&rel)
                && !candidates.iter().any(|finer| {
                    rel.is_strictly_coarser(finer).expect("same carrier")
                        && props::is_connected(finer)
                });
            if !rel_maximal {
                return Ok(Some(
                    Witness::new(
                        &scan.ground,
                        "connected subspace of a maximal connected space is not maximal",
                    )
                    .with_topology(t)
                    .with_set(y),
                ));
            }
        }
        Ok(None)
    })
}

fn claim_cn4(scan: &Scan) -> Result<Option<Witness>> {
    first_witness(scan, |t| {
        if !props::is_connected(t) {
            return Ok(None);
        }
        for y in &scan.sets {
            if t.is_open(y) || !t.is_dense(y)? {
                continue;
            }
            let extended = t.s_extension(y)?;
            if !props::is_connected(&extended) {
                return Ok(Some(
                    Witness::new(&scan.ground, "dense s-extension is disconnected")
                        .with_topology(t)
                        .with_set(y),
                ));
            }
        }
        Ok(None)
    })
}

fn claim_fun1(scan: &Scan) -> Result<Option<Witness>> {
    let bijections = all_bijections(&scan.ground, &scan.ground);
    for f in &bijections {
        for a in &scan.sets {
            if f.image(&a.complement())? != f.image(a)?.complement() {
                return Ok(Some(
                    Witness::new(&scan.ground, "f(A^c) != (f A)^c for a bijection")
                        .with_set(a)
                        .with_map(f),
                ));
            }
        }
    }
    Ok(None)
}

/// Observe-mode scan: the split statement is checked under three readings
/// and the first counterexample (if any) is reported per reading.
type Hypothesis = fn(&Scan, &SoftTopology, &SoftSet) -> Result<bool>;

fn cn5_findings(grounds: &[Arc<Ground>]) -> Result<Vec<Finding>> {
    let readings: [(&'static str, Hypothesis); 3] = [
        // As stated: complementary connected subspaces with one of them
        // open; the space is claimed maximal connected.
        ("as-stated", |_, t, y| {
            Ok(props::is_connected_subset(t, y)?
                && props::is_connected_subset(t, &y.complement())?
                && (t.is_open(y) || t.is_open(&y.complement())))
        }),
        // Same hypothesis plus connectedness of the space itself.
        ("connected-hypothesis", |_, t, y| {
            Ok(props::is_connected(t)
                && props::is_connected_subset(t, y)?
                && props::is_connected_subset(t, &y.complement())?
                && (t.is_open(y) || t.is_open(&y.complement())))
        }),
        // The supposition the argument actually works under: neither part
        // open.
        ("proof-supposition", |_, t, y| {
            Ok(props::is_connected(t)
                && props::is_connected_subset(t, y)?
                && props::is_connected_subset(t, &y.complement())?
                && !t.is_open(y)
                && !t.is_open(&y.complement()))
        }),
    ];

    let mut findings = Vec::new();
    for (name, hypothesis) in readings {
        let mut witness: Option<Witness> = None;
        'grounds: for ground in grounds {
            let scan = Scan::new(ground)?;
            let found = first_witness(&scan, |t| {
                for y in &scan.sets {
                    if y.is_null() || y.is_absolute() {
                        continue;
                    }
                    if hypothesis(&scan, t, y)?
                        && !scan.brute_maximal(t, Property::Connected)
                    {
                        return Ok(Some(
                            Witness::new(
                                ground,
                                "hypothesis holds but the space is not maximal connected",
                            )
                            .with_topology(t)
                            .with_set(y),
                        ));
                    }
                }
                Ok(None)
            })?;
            if let Some(w) = found {
                witness = Some(w);
                break 'grounds;
            }
        }
        findings.push(Finding {
            reading: name,
            verdict: if witness.is_some() {
                Verdict::Counterexample
            } else {
                Verdict::Pass
            },
            witness,
        });
    }
    Ok(findings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_scan_order() {
        let grounds = scan_grounds(4);
        let shapes: Vec<(usize, usize)> = grounds
            .iter()
            .map(|g| (g.n_params(), g.n_elems()))
            .collect();
        assert_eq!(
            shapes,
            vec![
                (1, 1),
                (1, 2),
                (2, 1),
                (1, 3),
                (3, 1),
                (1, 4),
                (2, 2),
                (4, 1)
            ]
        );
    }

    #[test]
    fn claim_ids_round_trip() {
        for claim in ALL_CLAIMS {
            let s = claim.to_string();
            assert_eq!(s.parse::<ClaimId>().unwrap(), claim);
        }
        assert!(matches!(
            "XYZ".parse::<ClaimId>(),
            Err(Error::UnknownClaim(_))
        ));
    }

    #[test]
    fn bound_is_guarded() {
        assert!(matches!(
            verify_claim(ClaimId::Cn1, 5),
            Err(Error::Capacity(_))
        ));
        assert!(verify_claim(ClaimId::Cn1, 0).is_err());
    }

    #[test]
    fn all_claims_pass_at_bound_two() {
        for claim in ALL_CLAIMS {
            let report = verify_claim(claim, 2).unwrap();
            if claim == ClaimId::Cn5 {
                assert_eq!(report.verdict, Verdict::Observed);
            } else {
                assert_eq!(report.verdict, Verdict::Pass, "claim {claim}");
                assert!(report.witness.is_none());
            }
        }
    }

    #[test]
    fn spot_checks_at_bound_three() {
        assert_eq!(
            verify_claim(ClaimId::Cn1, 3).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            verify_claim(ClaimId::Dual1, 3).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            verify_claim(ClaimId::Mc1, 2).unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn cn5_reports_findings_with_replayable_witnesses() {
        let report = verify_claim(ClaimId::Cn5, 3).unwrap();
        assert_eq!(report.verdict, Verdict::Observed);
        assert_eq!(report.findings.len(), 3);
        // The statement as written fails; replay each counterexample
        // through the public checkers.
        for finding in &report.findings {
            assert_eq!(finding.verdict, Verdict::Counterexample, "{}", finding.reading);
            let w = finding.witness.as_ref().unwrap();
            let t = w.topology.as_ref().unwrap();
            let y = &w.sets[0];
            assert!(props::is_connected_subset(t, y).unwrap());
            assert!(props::is_connected_subset(t, &y.complement()).unwrap());
            match finding.reading {
                "as-stated" => {
                    assert!(t.is_open(y) || t.is_open(&y.complement()));
                }
                "connected-hypothesis" => {
                    assert!(props::is_connected(t));
                    assert!(t.is_open(y) || t.is_open(&y.complement()));
                }
                "proof-supposition" => {
                    assert!(props::is_connected(t));
                    assert!(!t.is_open(y) && !t.is_open(&y.complement()));
                }
                other => panic!("unexpected reading {other}"),
            }
            // The conclusion fails: some finer topology stays connected.
            if props::is_connected(t) {
                assert!(!crate::maximal::is_maximal(
                    t,
                    Property::Connected,
                    crate::maximal::Method::Brute
                )
                .unwrap());
            }
        }
    }

    #[test]
    fn reports_render_deterministically() {
        let a = verify_claim(ClaimId::Cn5, 2).unwrap().render();
        let b = verify_claim(ClaimId::Cn5, 2).unwrap().render();
        assert_eq!(a, b);
        assert!(a.starts_with("claim=CN5 bound=2 verdict=OBSERVED witness=-"));
    }
}
