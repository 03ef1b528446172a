use super::{crossing_edges, Cut, CutError, Graph};

/// Global minimum edge cut by Stoer–Wagner.
///
/// Deterministic: the maximum-adjacency order starts from the smallest live
/// super-vertex and breaks ties by smallest index; a phase cut replaces the
/// incumbent only when strictly smaller.
pub fn global_min_cut(g: &Graph) -> Result<Cut, CutError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(CutError::TooFewVertices { min: 2, n });
    }
    if !g.is_connected() {
        return Err(CutError::Disconnected);
    }
    let phases = phase_cuts(g);
    let (_, side) = phases
        .into_iter()
        .fold(None::<(usize, Vec<usize>)>, |best, (w, side)| match best {
            Some((bw, _)) if bw <= w => best,
            _ => Some((w, side)),
        })
        .expect("at least one phase");
    crossing_edges(g, &side)
}

/// The cut-of-the-phase of every Stoer–Wagner phase, as (weight, side).
pub(crate) fn phase_cuts(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    let mut weight = vec![vec![0usize; n]; n];
    for (u, v) in g.edges() {
        weight[u][v] = 1;
        weight[v][u] = 1;
    }
    let mut groups: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut live: Vec<usize> = (0..n).collect();
    let mut phases = Vec::with_capacity(n.saturating_sub(1));

    let mut in_order = vec![false; n];
    let mut attach = vec![0usize; n];
    while live.len() > 1 {
        for &v in &live {
            in_order[v] = false;
            attach[v] = 0;
        }
        let mut prev = live[0];
        let mut last = live[0];
        in_order[last] = true;
        for &v in &live {
            attach[v] += weight[last][v];
        }
        for _ in 1..live.len() {
            let mut pick = usize::MAX;
            for &v in &live {
                if !in_order[v] && (pick == usize::MAX || attach[v] > attach[pick]) {
                    pick = v;
                }
            }
            prev = last;
            last = pick;
            in_order[last] = true;
            for &v in &live {
                attach[v] += weight[last][v];
            }
        }
        phases.push((attach_weight(&weight, &live, last), groups[last].clone()));

        let moved = std::mem::take(&mut groups[last]);
        groups[prev].extend(moved);
        groups[prev].sort_unstable();
        for &v in &live {
            if v != prev && v != last {
                weight[prev][v] += weight[last][v];
                weight[v][prev] = weight[prev][v];
            }
        }
        live.retain(|&v| v != last);
    }
    phases
}

fn attach_weight(weight: &[Vec<usize>], live: &[usize], v: usize) -> usize {
    live.iter().filter(|&&u| u != v).map(|&u| weight[v][u]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(global_min_cut(&Graph::path(3)).unwrap().size, 1);
        assert_eq!(global_min_cut(&Graph::complete(4)).unwrap().size, 3);
        assert_eq!(global_min_cut(&Graph::cycle(7)).unwrap().size, 2);
        assert_eq!(global_min_cut(&super::super::tests::octahedron_graph()).unwrap().size, 4);
    }

    #[test]
    fn barbell_cut_is_the_bridge() {
        let mut edges = Vec::new();
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    edges.push((base + u, base + v));
                }
            }
        }
        edges.push((3, 4));
        let g = Graph::from_edges(8, edges).unwrap();
        let cut = global_min_cut(&g).unwrap();
        assert_eq!(cut.size, 1);
        assert_eq!(cut.side, vec![0, 1, 2, 3]);
        assert!(!cut.trivial);
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(global_min_cut(&g).unwrap_err(), CutError::Disconnected);
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(global_min_cut(&g).unwrap_err(), CutError::TooFewVertices { min: 2, n: 1 });
    }
}
