//! Exhaustive enumeration of soft topologies on tiny grounds, the lattice
//! they form under inclusion, and DOT export of its Hasse diagram.
//!
//! Internally a topology over a carrier with `n` cells is a single `u64`
//! "family word": bit `s` is set when the submask with compressed value `s`
//! belongs to the family. Meets are word ANDs and joins are word closures,
//! which keeps the all-pairs lattice work cheap. The representation needs
//! `2^n <= 64`, so the override cap sits at 5 cells; the default guard is 4.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::ground::Ground;
use crate::props;
use crate::set::SoftSet;
use crate::topology::SoftTopology;

/// Default carrier-size guard for enumeration and lattice construction.
pub const ENUM_CELL_GUARD: usize = 4;
/// Hard cap for the documented override (6942 topologies at 5 cells).
pub const ENUM_CELL_CAP: usize = 5;

const SAMPLE_SEED: u64 = 0x5eed_50f7_0001;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Closes a family word under pairwise union and intersection of its
/// member submasks.
fn close_word(fam: u64) -> u64 {
    let mut fam = fam;
    loop {
        let mut next = fam;
        let mut rem = fam;
        while rem != 0 {
            let s = rem.trailing_zeros() as u64;
            rem &= rem - 1;
            let mut rem2 = fam;
            while rem2 != 0 {
                let t = rem2.trailing_zeros() as u64;
                rem2 &= rem2 - 1;
                next |= 1 << (s | t);
                next |= 1 << (s & t);
            }
        }
        if next == fam {
            return fam;
        }
        fam = next;
    }
}

fn word_is_topology(fam: u64, n_cells: usize) -> bool {
    let full = (1u64 << n_cells) - 1;
    fam & 1 != 0 && fam & (1 << full) != 0 && close_word(fam) == fam
}

/// Depth-first family extension with closure pruning; the seen-set makes
/// every closed family come out exactly once.
fn enumerate_words(n_cells: usize) -> Vec<u64> {
    let full = (1u64 << n_cells) - 1;
    let seed = close_word(1 | (1 << full));
    let mut seen: HashSet<u64> = HashSet::new();
    let mut stack = vec![seed];
    let mut words = Vec::new();
    while let Some(fam) = stack.pop() {
        if !seen.insert(fam) {
            continue;
        }
        words.push(fam);
        for s in 0..=full {
            if fam & (1 << s) == 0 {
                stack.push(close_word(fam | (1 << s)));
            }
        }
    }
    sort_canonical(&mut words);
    words
}

/// The slow oracle: filters every candidate family through the axioms.
/// Only feasible at up to 4 cells (`2^16` candidates).
fn naive_words(n_cells: usize) -> Vec<u64> {
    let n_subsets = 1usize << n_cells;
    assert!(n_subsets <= 16, "naive filter is limited to 4 cells");
    let mut words: Vec<u64> = (0..(1u64 << n_subsets))
        .filter(|&fam| word_is_topology(fam, n_cells))
        .collect();
    sort_canonical(&mut words);
    words
}

/// Canonical topology order: by number of opens, then lexicographically on
/// the ascending list of member submasks.
fn sort_canonical(words: &mut [u64]) {
    words.sort_unstable_by(|&a, &b| {
        a.count_ones().cmp(&b.count_ones()).then_with(|| {
            let mut x = a;
            let mut y = b;
            while x != 0 && y != 0 {
                let sx = x.trailing_zeros();
                let sy = y.trailing_zeros();
                if sx != sy {
                    return sx.cmp(&sy);
                }
                x &= x - 1;
                y &= y - 1;
            }
            std::cmp::Ordering::Equal
        })
    });
}

/// Translation between compressed submasks (bit `k` = `k`-th carrier cell)
/// and soft sets over the full ground.
struct CellSpace {
    ground: Arc<Ground>,
    carrier: SoftSet,
    positions: Vec<usize>,
}

impl CellSpace {
    fn new(carrier: &SoftSet) -> CellSpace {
        CellSpace {
            ground: carrier.ground().clone(),
            carrier: carrier.clone(),
            positions: carrier.bits().ones().collect(),
        }
    }

    fn n_cells(&self) -> usize {
        self.positions.len()
    }

    fn submask_to_set(&self, submask: u64) -> SoftSet {
        let mut bits = Bits::empty(self.ground.cells());
        for (k, &pos) in self.positions.iter().enumerate() {
            if submask & (1 << k) != 0 {
                bits.set(pos, true);
            }
        }
        SoftSet::from_bits(&self.ground, bits)
    }

    fn word_to_topology(&self, fam: u64) -> SoftTopology {
        let full = (1u64 << self.n_cells()) - 1;
        let opens: Vec<SoftSet> = (0..=full)
            .filter(|&s| fam & (1 << s) != 0)
            .map(|s| self.submask_to_set(s))
            .collect();
        SoftTopology::from_parts_unchecked(self.carrier.clone(), opens)
    }
}

fn check_guard(n_cells: usize, limit: usize) -> Result<()> {
    let limit = limit.min(ENUM_CELL_CAP);
    if n_cells > limit {
        return Err(Error::Capacity(format!(
            "enumeration guard: {n_cells} cells exceeds the {limit}-cell limit"
        )));
    }
    Ok(())
}

/// All soft topologies on the ground, canonically ordered.
pub fn enumerate_topologies(ground: &Arc<Ground>) -> Result<Vec<SoftTopology>> {
    enumerate_topologies_within(&SoftSet::absolute(ground), ENUM_CELL_GUARD)
}

/// All soft topologies over an arbitrary non-null carrier, canonically
/// ordered. `limit` overrides the default cell guard up to the hard cap.
pub fn enumerate_topologies_within(
    carrier: &SoftSet,
    limit: usize,
) -> Result<Vec<SoftTopology>> {
    if carrier.is_null() {
        return Err(Error::Rejected("carrier must be non-null".into()));
    }
    let space = CellSpace::new(carrier);
    check_guard(space.n_cells(), limit)?;
    Ok(enumerate_words(space.n_cells())
        .into_iter()
        .map(|w| space.word_to_topology(w))
        .collect())
}

/// Brute-force enumeration oracle over all candidate families.
pub fn naive_enumerate(carrier: &SoftSet) -> Result<Vec<SoftTopology>> {
    if carrier.is_null() {
        return Err(Error::Rejected("carrier must be non-null".into()));
    }
    let space = CellSpace::new(carrier);
    if space.n_cells() > 4 {
        return Err(Error::Capacity(
            "naive enumeration is guarded at 4 cells".into(),
        ));
    }
    Ok(naive_words(space.n_cells())
        .into_iter()
        .map(|w| space.word_to_topology(w))
        .collect())
}

/// The complete lattice of all soft topologies on a ground: nodes in
/// canonical order plus the covering relation of strict inclusion.
pub struct TopologyLattice {
    pub ground: Arc<Ground>,
    pub nodes: Vec<SoftTopology>,
    /// Covering pairs `(coarser_index, finer_index)`, lexicographic.
    pub hasse_edges: Vec<(usize, usize)>,
    above: Vec<BitRow>,
}

type BitRow = Vec<u64>;

fn row_get(row: &BitRow, i: usize) -> bool {
    row[i / 64] & (1 << (i % 64)) != 0
}

fn row_set(row: &mut BitRow, i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

fn row_ones(row: &BitRow) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            }
        })
    })
}

impl TopologyLattice {
    /// Indices of the strict refinements of a node.
    pub fn finer_than(&self, node: usize) -> Vec<usize> {
        row_ones(&self.above[node]).collect()
    }

    pub fn node_index(&self, t: &SoftTopology) -> Option<usize> {
        self.nodes.iter().position(|n| n == t)
    }
}

pub fn build_lattice(ground: &Arc<Ground>) -> Result<TopologyLattice> {
    build_lattice_with_limit(ground, ENUM_CELL_GUARD)
}

pub fn build_lattice_with_limit(ground: &Arc<Ground>, limit: usize) -> Result<TopologyLattice> {
    let carrier = SoftSet::absolute(ground);
    let space = CellSpace::new(&carrier);
    check_guard(space.n_cells(), limit)?;
    let words = enumerate_words(space.n_cells());
    let n = words.len();
    let blocks = n.div_ceil(64);

    // Strict inclusion as bit rows.
    let mut above = vec![vec![0u64; blocks]; n];
    let mut below = vec![vec![0u64; blocks]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && words[i] & !words[j] == 0 {
                row_set(&mut above[i], j);
                row_set(&mut below[j], i);
            }
        }
    }

    // Covering pairs: strict inclusions with nothing strictly between.
    let mut hasse_edges = Vec::new();
    for (i, above_i) in above.iter().enumerate() {
        for j in row_ones(above_i) {
            let nothing_between = above_i.iter().zip(&below[j]).all(|(a, b)| a & b == 0);
            if nothing_between {
                hasse_edges.push((i, j));
            }
        }
    }
    hasse_edges.sort_unstable();

    verify_complete_lattice(&words, &above, &below)?;

    let nodes: Vec<SoftTopology> = words.iter().map(|&w| space.word_to_topology(w)).collect();
    Ok(TopologyLattice {
        ground: ground.clone(),
        nodes,
        hasse_edges,
        above,
    })
}

/// Confirms glb/lub existence inside the node set: for all subfamilies of
/// size <= 3 (exhaustively when the lattice is small, sampled above that)
/// and for 1000 deterministically sampled larger subfamilies.
fn verify_complete_lattice(words: &[u64], above: &[BitRow], below: &[BitRow]) -> Result<()> {
    let n = words.len();
    let blocks = n.div_ceil(64);
    let index: HashMap<u64, usize> = words.iter().enumerate().map(|(i, &w)| (w, i)).collect();

    // Bottom and top of the canonical order must be the extreme elements.
    if !(0..n).all(|j| words[0] & !words[j] == 0) {
        return Err(Error::Internal("first node is not the indiscrete topology".into()));
    }
    if !(0..n).all(|j| words[j] & !words[n - 1] == 0) {
        return Err(Error::Internal("last node is not the discrete topology".into()));
    }

    let meet_ix = |a: usize, b: usize| -> Result<usize> {
        index
            .get(&(words[a] & words[b]))
            .copied()
            .ok_or_else(|| Error::Internal("meet fell outside the lattice".into()))
    };
    let join_ix = |a: usize, b: usize| -> Result<usize> {
        index
            .get(&close_word(words[a] | words[b]))
            .copied()
            .ok_or_else(|| Error::Internal("join fell outside the lattice".into()))
    };

    let check_subset = |members: &[usize]| -> Result<()> {
        let mut glb = members[0];
        let mut lub = members[0];
        for &m in &members[1..] {
            glb = meet_ix(glb, m)?;
            lub = join_ix(lub, m)?;
        }
        // Common lower bounds of the subfamily, as a bit row.
        let mut lower = vec![u64::MAX; blocks];
        let mut upper = vec![u64::MAX; blocks];
        for &m in members {
            for b in 0..blocks {
                let mut below_eq = below[m][b];
                let mut above_eq = above[m][b];
                if m / 64 == b {
                    below_eq |= 1 << (m % 64);
                    above_eq |= 1 << (m % 64);
                }
                lower[b] &= below_eq;
                upper[b] &= above_eq;
            }
        }
        let in_row = |row: &BitRow, i: usize| row_get(row, i);
        if !in_row(&lower, glb) {
            return Err(Error::Internal("glb is not a common lower bound".into()));
        }
        if !in_row(&upper, lub) {
            return Err(Error::Internal("lub is not a common upper bound".into()));
        }
        // Every common lower bound must sit at or below the glb.
        for b in 0..blocks {
            let mut glb_below_eq = below[glb][b];
            let mut lub_above_eq = above[lub][b];
            if glb / 64 == b {
                glb_below_eq |= 1 << (glb % 64);
            }
            if lub / 64 == b {
                lub_above_eq |= 1 << (lub % 64);
            }
            if lower[b] & !glb_below_eq != 0 {
                return Err(Error::Internal("a common lower bound exceeds the glb".into()));
            }
            if upper[b] & !lub_above_eq != 0 {
                return Err(Error::Internal("a common upper bound undercuts the lub".into()));
            }
        }
        Ok(())
    };

    if n <= 400 {
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    check_subset(&[i, j, k])?;
                }
            }
        }
    } else {
        let mut state = SAMPLE_SEED;
        for _ in 0..50_000 {
            let i = (splitmix64(&mut state) % n as u64) as usize;
            let j = (splitmix64(&mut state) % n as u64) as usize;
            let k = (splitmix64(&mut state) % n as u64) as usize;
            check_subset(&[i, j, k])?;
        }
    }
    let mut state = SAMPLE_SEED ^ 0xa5a5_a5a5;
    for _ in 0..1000 {
        let size = 4 + (splitmix64(&mut state) % 5) as usize;
        let members: Vec<usize> = (0..size)
            .map(|_| (splitmix64(&mut state) % n as u64) as usize)
            .collect();
        check_subset(&members)?;
    }
    Ok(())
}

/// Renders the lattice as a DOT digraph: edges run coarser to finer and node
/// labels carry the open count plus property badges. Byte-deterministic.
pub fn lattice_to_dot(lattice: &TopologyLattice) -> String {
    let mut out = String::from("digraph soft_topologies {\n  rankdir=BT;\n");
    for (i, node) in lattice.nodes.iter().enumerate() {
        let mut label = format!("{} opens", node.opens().len());
        if props::is_connected(node) {
            label.push_str("|connected");
            let any_finer_connected = lattice
                .finer_than(i)
                .into_iter()
                .any(|j| props::is_connected(&lattice.nodes[j]));
            if !any_finer_connected {
                label.push_str("|maximal-connected");
            }
        }
        if props::separation_axiom(node, props::SeparationLevel::T0) {
            label.push_str("|T0");
        }
        if props::separation_axiom(node, props::SeparationLevel::T1) {
            label.push_str("|T1");
        }
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
    for &(a, b) in &lattice.hasse_edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Writes the DOT rendering to a file.
pub fn export_dot(lattice: &TopologyLattice, path: &std::path::Path) -> Result<()> {
    std::fs::write(path, lattice_to_dot(lattice))?;
    Ok(())
}

/// The `counts` report line.
pub fn counts_report(cells: usize, topologies: usize) -> String {
    format!("cells={cells} topologies={topologies}")
}
