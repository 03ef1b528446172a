use super::flow::UnitFlowNetwork;
use super::stoer_wagner::phase_cuts;
use super::{crossing_edges, cut_from_membership, Cut, CutError, Graph};

/// Minimum cut among cuts whose two sides both have at least two vertices.
///
/// Fix `u0 = 0`. Every such cut has some `v != u0` on the side of `u0` and
/// some pair `{x, y}` on the other side, so the answer is the minimum over
/// all `(v, {x, y})` of the max-flow from `{u0, v}` to `{x, y}`; every pair
/// is examined. Flows are capped at the incumbent, and a pair containing
/// `x` is skipped once the flow from `{u0, v}` to `x` alone already reaches
/// the incumbent (it lower-bounds the pair's flow). Neither shortcut can
/// change the returned value.
///
/// Returns `Ok(None)` for graphs with fewer than four vertices.
pub fn min_nontrivial_cut(g: &Graph) -> Result<Option<Cut>, CutError> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Err(CutError::Disconnected);
    }
    if n < 4 {
        return Ok(None);
    }

    let mut best = initial_incumbent(g);
    let mut net = UnitFlowNetwork::new(g);
    let u0 = 0;
    let mut candidates = Vec::with_capacity(n);

    for v in 1..n {
        candidates.clear();
        for x in 1..n {
            if x == v {
                continue;
            }
            let value = net.max_flow(&[u0, v], &[x], best.size);
            if value >= best.size {
                continue;
            }
            candidates.push(x);
            // The single-sink cut is itself nontrivial when x is not alone.
            let side = net.source_side();
            if n - side.iter().filter(|&&s| s).count() >= 2 {
                best = cut_from_membership(g, &side)?;
                debug_assert_eq!(best.size, value);
            }
        }
        for (i, &x) in candidates.iter().enumerate() {
            for &y in &candidates[i + 1..] {
                let value = net.max_flow(&[u0, v], &[x, y], best.size);
                if value < best.size {
                    best = cut_from_membership(g, &net.source_side())?;
                    debug_assert_eq!(best.size, value);
                }
            }
        }
    }
    Ok(Some(best))
}

/// A nontrivial cut to start from: the best two-vertex side, improved by
/// any nontrivial Stoer–Wagner phase cut.
fn initial_incumbent(g: &Graph) -> Cut {
    let n = g.vertex_count();
    let mut best_pair = (usize::MAX, 0, 0);
    for a in 0..n {
        for b in a + 1..n {
            let size = g.degree(a) + g.degree(b) - 2 * usize::from(g.has_edge(a, b));
            if size < best_pair.0 {
                best_pair = (size, a, b);
            }
        }
    }
    let mut best = crossing_edges(g, &[best_pair.1, best_pair.2]).expect("n >= 4");
    for (weight, side) in phase_cuts(g) {
        if weight < best.size && side.len() >= 2 && n - side.len() >= 2 {
            best = crossing_edges(g, &side).expect("proper side");
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::super::brute::brute_force_cuts;
    use super::*;

    #[test]
    fn examples() {
        let oct = super::super::tests::octahedron_graph();
        let cut = min_nontrivial_cut(&oct).unwrap().unwrap();
        assert_eq!(cut.size, 6);
        assert!(!cut.trivial);

        assert_eq!(min_nontrivial_cut(&Graph::complete(5)).unwrap().unwrap().size, 6);
        assert_eq!(min_nontrivial_cut(&Graph::complete(4)).unwrap().unwrap().size, 4);
        assert_eq!(min_nontrivial_cut(&Graph::path(4)).unwrap().unwrap().size, 1);
        assert_eq!(min_nontrivial_cut(&Graph::path(3)).unwrap(), None);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_nontrivial_cut(&g).unwrap_err(), CutError::Disconnected);
    }

    #[test]
    fn agrees_with_enumeration_on_cycles_and_wheels() {
        for n in 4..=12 {
            let g = Graph::cycle(n);
            let oracle = brute_force_cuts(&g).unwrap();
            let cut = min_nontrivial_cut(&g).unwrap().unwrap();
            assert_eq!(Some(cut.size), oracle.min_nontrivial_cut.map(|c| c.size));

            // Wheel: hub n joined to every vertex of the cycle.
            let mut edges = Graph::cycle(n).edges();
            edges.extend((0..n).map(|v| (v, n)));
            let wheel = Graph::from_edges(n + 1, edges).unwrap();
            let oracle = brute_force_cuts(&wheel).unwrap();
            let cut = min_nontrivial_cut(&wheel).unwrap().unwrap();
            assert_eq!(Some(cut.size), oracle.min_nontrivial_cut.map(|c| c.size));
        }
    }
}
