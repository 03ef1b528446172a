//! Exhaustive bipartition enumeration, used as an oracle.

use super::{crossing_edges, Cut, CutError, Graph};

pub const BRUTE_FORCE_MAX_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceCuts {
    pub min_cut: Cut,
    /// `None` when the graph has fewer than four vertices.
    pub min_nontrivial_cut: Option<Cut>,
}

/// Minimum cut and minimum nontrivial cut over all `2^(n-1) - 1`
/// bipartitions. Ties resolve to the first side in enumeration order.
pub fn brute_force_cuts(g: &Graph) -> Result<BruteForceCuts, CutError> {
    let mut best: Option<(usize, u32)> = None;
    let mut best_nontrivial: Option<(usize, u32)> = None;
    for_each_bipartition(g, |mask, size, nontrivial| {
        if best.is_none_or(|(s, _)| size < s) {
            best = Some((size, mask));
        }
        if nontrivial && best_nontrivial.is_none_or(|(s, _)| size < s) {
            best_nontrivial = Some((size, mask));
        }
    })?;
    let (_, mask) = best.expect("n >= 2 gives a bipartition");
    Ok(BruteForceCuts {
        min_cut: crossing_edges(g, &mask_members(mask))?,
        min_nontrivial_cut: best_nontrivial
            .map(|(_, mask)| crossing_edges(g, &mask_members(mask)))
            .transpose()?,
    })
}

/// Every cut attaining the global minimum, one per bipartition.
pub fn brute_force_minimum_cuts(g: &Graph) -> Result<Vec<Cut>, CutError> {
    let mut best = usize::MAX;
    let mut masks = Vec::new();
    for_each_bipartition(g, |mask, size, _| {
        if size < best {
            best = size;
            masks.clear();
        }
        if size == best {
            masks.push(mask);
        }
    })?;
    masks.into_iter().map(|m| crossing_edges(g, &mask_members(m))).collect()
}

/// Minimum cut among bipartitions whose sides both have at least `k`
/// vertices; `None` when there is no such bipartition.
pub fn brute_force_min_balanced_cut(g: &Graph, k: usize) -> Result<Option<Cut>, CutError> {
    let n = g.vertex_count();
    let mut best: Option<(usize, u32)> = None;
    for_each_bipartition(g, |mask, size, _| {
        let side = mask.count_ones() as usize;
        if side >= k && n - side >= k && best.is_none_or(|(s, _)| size < s) {
            best = Some((size, mask));
        }
    })?;
    best.map(|(_, mask)| crossing_edges(g, &mask_members(mask))).transpose()
}

fn for_each_bipartition<F>(g: &Graph, mut visit: F) -> Result<(), CutError>
where
    F: FnMut(u32, usize, bool),
{
    let n = g.vertex_count();
    if n < 2 {
        return Err(CutError::TooFewVertices { min: 2, n });
    }
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(CutError::TooLarge { max: BRUTE_FORCE_MAX_VERTICES, n });
    }
    let neighbors: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full: u32 = (1 << n) - 1;
    // Vertex 0 always on the enumerated side.
    for rest in 0..(1u32 << (n - 1)) {
        let mask = 1 | (rest << 1);
        if mask == full {
            continue;
        }
        let size: u32 = (0..n)
            .filter(|&v| mask & (1 << v) != 0)
            .map(|v| (neighbors[v] & !mask).count_ones())
            .sum();
        let k = mask.count_ones() as usize;
        visit(mask, size as usize, k >= 2 && n - k >= 2);
    }
    Ok(())
}

fn mask_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}
