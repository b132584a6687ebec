//! Canonical certificates for small graphs.
//!
//! Iterated degree/neighborhood refinement, then backtracking over the
//! remaining color classes. The certificate is the lexicographically
//! smallest graph6 encoding over all admissible labelings, so equal
//! certificates mean isomorphic graphs. Built for desk scale, not speed.

use crate::graph::Graph;
use crate::graph6::to_graph6_bytes;

/// Refines vertex colors until stable: the new color of a vertex is the
/// rank of (old color, sorted multiset of neighbor colors).
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..g.n())
            .map(|v| {
                let mut nbr: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let mut uniq: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        uniq.sort_unstable();
        uniq.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).unwrap() as u32)
            .collect();
        if next == *colors {
            return;
        }
        *colors = next;
    }
}

/// Smallest color whose class has more than one vertex, if any.
fn first_split_class(colors: &[u32]) -> Option<u32> {
    let mut counts = std::collections::BTreeMap::new();
    for &c in colors {
        *counts.entry(c).or_insert(0usize) += 1;
    }
    counts.into_iter().find(|&(_, k)| k > 1).map(|(c, _)| c)
}

fn leaf_bytes(g: &Graph, colors: &[u32]) -> Vec<u8> {
    // All classes are singletons: color rank is the new vertex index.
    let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
    to_graph6_bytes(&g.permuted(&perm))
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<Vec<u8>>) {
    match first_split_class(&colors) {
        None => {
            let candidate = leaf_bytes(g, &colors);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                *best = Some(candidate);
            }
        }
        Some(class) => {
            let fresh = g.n() as u32;
            for v in 0..g.n() {
                if colors[v] != class {
                    continue;
                }
                let mut branch = colors.clone();
                branch[v] = fresh;
                refine(g, &mut branch);
                search(g, branch, best);
            }
        }
    }
}

/// Isomorphism-invariant byte string: equal certificates if and only if the
/// graphs are isomorphic. The bytes are the graph6 encoding of the
/// canonical labeling.
pub fn canonical_certificate(g: &Graph) -> Vec<u8> {
    let mut colors: Vec<u32> = g.degrees().iter().map(|&d| d as u32).collect();
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    best.expect("search always reaches a discrete coloring")
}

/// The canonical labeling itself, as a graph6 string.
pub fn canonical_graph6(g: &Graph) -> String {
    String::from_utf8(canonical_certificate(g)).expect("certificates are printable ASCII")
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.n() == g2.n()
        && g1.edge_count() == g2.edge_count()
        && canonical_certificate(g1) == canonical_certificate(g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn k23() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Brute-force isomorphism over all n! bijections; test oracle only.
    fn brute_isomorphic(g1: &Graph, g2: &Graph) -> bool {
        if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
            return false;
        }
        all_permutations(g1.n())
            .into_iter()
            .any(|p| &g1.permuted(&p) == g2)
    }

    #[test]
    fn relabeled_bowtie_is_isomorphic() {
        let g = bowtie();
        let relabeled = g.permuted(&[3, 0, 4, 2, 1]);
        assert!(is_isomorphic(&g, &relabeled));
        assert_eq!(canonical_certificate(&g), canonical_certificate(&relabeled));
    }

    #[test]
    fn bowtie_vs_k23() {
        assert!(!is_isomorphic(&bowtie(), &k23()));
    }

    #[test]
    fn pendant_position_distinguishes_diamonds() {
        // Diamond plus pendant at a degree-3 vertex vs at a degree-2 vertex.
        let base = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
        let mut e1 = base.to_vec();
        e1.push((0, 4)); // vertex 0 has degree 3 in the diamond
        let mut e2 = base.to_vec();
        e2.push((1, 4)); // vertex 1 has degree 2
        let g1 = Graph::from_edges(5, &e1).unwrap();
        let g2 = Graph::from_edges(5, &e2).unwrap();
        assert!(!brute_isomorphic(&g1, &g2));
        assert!(!is_isomorphic(&g1, &g2));
    }

    #[test]
    fn certificate_agrees_with_brute_force_on_small_graphs() {
        // Every pair of 4-vertex graphs: certificate equality must match
        // the 4!-permutation oracle.
        let mut graphs = Vec::new();
        for mask in 0u32..64 {
            let mut edges = Vec::new();
            let mut bit = 0;
            for j in 1..4 {
                for i in 0..j {
                    if mask >> bit & 1 == 1 {
                        edges.push((i, j));
                    }
                    bit += 1;
                }
            }
            graphs.push(Graph::from_edges(4, &edges).unwrap());
        }
        for a in &graphs {
            for b in &graphs {
                assert_eq!(
                    is_isomorphic(a, b),
                    brute_isomorphic(a, b),
                    "disagreement on {:?} vs {:?}",
                    a,
                    b
                );
            }
        }
    }

    #[test]
    fn certificate_parses_back_to_an_isomorphic_graph() {
        let g = bowtie();
        let canon = parse_graph6(&canonical_graph6(&g)).unwrap();
        assert!(is_isomorphic(&g, &canon));
        // The canonical form is a fixed point.
        assert_eq!(canonical_graph6(&canon), canonical_graph6(&g));
    }

    #[test]
    fn highly_symmetric_graphs() {
        // C6 vs two triangles: same degree sequence, not isomorphic.
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tri2 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &tri2));
        assert!(is_isomorphic(&c6, &c6.permuted(&[2, 4, 0, 5, 1, 3])));
    }
}
