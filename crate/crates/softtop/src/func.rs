//! Soft functions: a pair of total maps `p : Z -> Y` and `q : E -> E'`
//! inducing image and preimage operators on soft sets.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::{same_ground, Ground};
use crate::set::SoftSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftFunction {
    src: Arc<Ground>,
    dst: Arc<Ground>,
    /// `elem_map[z]` is the index in `dst` of `p(z)`.
    elem_map: Vec<usize>,
    /// `param_map[e]` is the index in `dst` of `q(e)`.
    param_map: Vec<usize>,
}

impl SoftFunction {
    /// Builds a soft function from index maps. Both maps must be total on
    /// the source ground and land inside the destination ground.
    pub fn new(
        src: &Arc<Ground>,
        dst: &Arc<Ground>,
        elem_map: Vec<usize>,
        param_map: Vec<usize>,
    ) -> Result<SoftFunction> {
        if elem_map.len() != src.n_elems() || elem_map.iter().any(|&i| i >= dst.n_elems()) {
            return Err(Error::Rejected(
                "element map must be total from the source universe into the destination"
                    .into(),
            ));
        }
        if param_map.len() != src.n_params() || param_map.iter().any(|&i| i >= dst.n_params()) {
            return Err(Error::Rejected(
                "parameter map must be total from the source parameters into the destination"
                    .into(),
            ));
        }
        Ok(SoftFunction {
            src: src.clone(),
            dst: dst.clone(),
            elem_map,
            param_map,
        })
    }

    /// Builds a soft function from name pairs.
    pub fn from_names(
        src: &Arc<Ground>,
        dst: &Arc<Ground>,
        elem_pairs: &[(&str, &str)],
        param_pairs: &[(&str, &str)],
    ) -> Result<SoftFunction> {
        let mut elem_map = vec![usize::MAX; src.n_elems()];
        for (from, to) in elem_pairs {
            elem_map[src.elem_index(from)?] = dst.elem_index(to)?;
        }
        let mut param_map = vec![usize::MAX; src.n_params()];
        for (from, to) in param_pairs {
            param_map[src.param_index(from)?] = dst.param_index(to)?;
        }
        if elem_map.contains(&usize::MAX) || param_map.contains(&usize::MAX) {
            return Err(Error::Rejected("maps must be total".into()));
        }
        SoftFunction::new(src, dst, elem_map, param_map)
    }

    pub fn identity(ground: &Arc<Ground>) -> SoftFunction {
        SoftFunction {
            src: ground.clone(),
            dst: ground.clone(),
            elem_map: (0..ground.n_elems()).collect(),
            param_map: (0..ground.n_params()).collect(),
        }
    }

    pub fn src(&self) -> &Arc<Ground> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<Ground> {
        &self.dst
    }

    /// Bijective means both `p` and `q` are bijective.
    pub fn is_bijective(&self) -> bool {
        is_permutation(&self.elem_map, self.dst.n_elems())
            && is_permutation(&self.param_map, self.dst.n_params())
    }

    /// Image of a soft set: componentwise `f(A)(e') = U p(A(e))` over
    /// `e in q^{-1}(e')`, and the empty component when `q^{-1}(e')` is empty.
    pub fn image(&self, a: &SoftSet) -> Result<SoftSet> {
        if !same_ground(a.ground(), &self.src) {
            return Err(Error::GroundMismatch);
        }
        let mut out = SoftSet::empty(&self.dst);
        for dst_param in 0..self.dst.n_params() {
            for (src_param, &mapped) in self.param_map.iter().enumerate() {
                if mapped != dst_param {
                    continue;
                }
                for src_elem in 0..self.src.n_elems() {
                    if a.contains_cell(src_param, src_elem) {
                        out.insert_cell(dst_param, self.elem_map[src_elem]);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Preimage of a soft set: `f^{-1}(B)(e) = p^{-1}(B(q(e)))`.
    pub fn preimage(&self, b: &SoftSet) -> Result<SoftSet> {
        if !same_ground(b.ground(), &self.dst) {
            return Err(Error::GroundMismatch);
        }
        let mut out = SoftSet::empty(&self.src);
        for src_param in 0..self.src.n_params() {
            let dst_param = self.param_map[src_param];
            for src_elem in 0..self.src.n_elems() {
                if b.contains_cell(dst_param, self.elem_map[src_elem]) {
                    out.insert_cell(src_param, src_elem);
                }
            }
        }
        Ok(out)
    }

    /// `g . f`, applying `self` first.
    pub fn compose(&self, g: &SoftFunction) -> Result<SoftFunction> {
        if !same_ground(&self.dst, &g.src) {
            return Err(Error::GroundMismatch);
        }
        SoftFunction::new(
            &self.src,
            &g.dst,
            self.elem_map.iter().map(|&z| g.elem_map[z]).collect(),
            self.param_map.iter().map(|&e| g.param_map[e]).collect(),
        )
    }

    /// Inverse of a bijective soft function.
    pub fn inverse(&self) -> Result<SoftFunction> {
        if !self.is_bijective() {
            return Err(Error::Precondition(
                "only a bijective soft function has an inverse".into(),
            ));
        }
        let mut elem_map = vec![0; self.dst.n_elems()];
        for (z, &w) in self.elem_map.iter().enumerate() {
            elem_map[w] = z;
        }
        let mut param_map = vec![0; self.dst.n_params()];
        for (e, &d) in self.param_map.iter().enumerate() {
            param_map[d] = e;
        }
        SoftFunction::new(&self.dst, &self.src, elem_map, param_map)
    }
}

impl fmt::Display for SoftFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p[")?;
        for (z, &w) in self.elem_map.iter().enumerate() {
            if z > 0 {
                write!(f, ",")?;
            }
            write!(
                f,
                "{}>{}",
                self.src.universe()[z],
                self.dst.universe()[w]
            )?;
        }
        write!(f, "] q[")?;
        for (e, &d) in self.param_map.iter().enumerate() {
            if e > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}>{}", self.src.params()[e], self.dst.params()[d])?;
        }
        write!(f, "]")
    }
}

fn is_permutation(map: &[usize], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &i in map {
        if seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            if k.is_multiple_of(2) {
                current.swap(i, k - 1);
            } else {
                current.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out.sort();
    out
}

fn all_maps(from: usize, to: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..from {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..to).map(move |i| {
                    let mut next = prefix.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}

/// Every soft function between two grounds, in a deterministic order.
/// Intended for exhaustive scans on tiny grounds.
pub fn all_functions(src: &Arc<Ground>, dst: &Arc<Ground>) -> Vec<SoftFunction> {
    let mut out = Vec::new();
    for elem_map in all_maps(src.n_elems(), dst.n_elems()) {
        for param_map in all_maps(src.n_params(), dst.n_params()) {
            out.push(
                SoftFunction::new(src, dst, elem_map.clone(), param_map)
                    .expect("maps are total by construction"),
            );
        }
    }
    out
}

/// Every bijective soft function between two grounds (empty when the shapes
/// differ), in a deterministic order.
pub fn all_bijections(src: &Arc<Ground>, dst: &Arc<Ground>) -> Vec<SoftFunction> {
    if src.n_elems() != dst.n_elems() || src.n_params() != dst.n_params() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for elem_map in permutations(src.n_elems()) {
        for param_map in permutations(src.n_params()) {
            out.push(
                SoftFunction::new(src, dst, elem_map.clone(), param_map)
                    .expect("permutations are total"),
            );
        }
    }
    out
}
