//! Degree-based indices. All values are exact integers.

use serde::Serialize;

use super::Graph;

/// Sum over edges of `|d(u) - d(v)|`, also known as the third Zagreb index
/// `M3`.
pub fn irregularity(g: &Graph) -> u64 {
    let d = g.degrees();
    g.edges().map(|(u, v)| d[u].abs_diff(d[v]) as u64).sum()
}

/// `M1 = Σ_v d(v)²`.
pub fn zagreb1(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

/// `M2 = Σ_{uv ∈ E} d(u)·d(v)`.
pub fn zagreb2(g: &Graph) -> u64 {
    let d = g.degrees();
    g.edges().map(|(u, v)| (d[u] * d[v]) as u64).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrregularityReport {
    pub n: usize,
    pub m: usize,
    pub irr: u64,
    pub zagreb1: u64,
    pub zagreb2: u64,
    pub max_degree: usize,
    pub min_degree: usize,
}

pub fn report(g: &Graph) -> IrregularityReport {
    let d = g.degrees();
    let mut irr = 0;
    let mut m2 = 0;
    let mut m = 0;
    for (u, v) in g.edges() {
        irr += d[u].abs_diff(d[v]) as u64;
        m2 += (d[u] * d[v]) as u64;
        m += 1;
    }
    IrregularityReport {
        n: g.order(),
        m,
        irr,
        zagreb1: d.iter().map(|&x| (x * x) as u64).sum(),
        zagreb2: m2,
        max_degree: d.iter().copied().max().unwrap_or(0),
        min_degree: d.iter().copied().min().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    #[test]
    fn regular_graphs_have_zero_irregularity() {
        assert_eq!(irregularity(&cycle(5)), 0);
        assert_eq!(irregularity(&Graph::complete(6)), 0);
        assert_eq!(irregularity(&Graph::empty(4)), 0);
    }

    #[test]
    fn path_on_three_vertices() {
        assert_eq!(irregularity(&path(3)), 2);
    }

    #[test]
    fn zagreb_indices() {
        let empty = Graph::empty(3);
        assert_eq!((zagreb1(&empty), zagreb2(&empty)), (0, 0));
        let k3 = Graph::complete(3);
        assert_eq!((zagreb1(&k3), zagreb2(&k3)), (12, 12));
        // star on four vertices: degrees 3,1,1,1, three edges of product 3
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!((zagreb1(&star), zagreb2(&star)), (12, 9));
    }

    #[test]
    fn report_matches_individual_indices() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)]).unwrap();
        let r = report(&g);
        assert_eq!(r.irr, irregularity(&g));
        assert_eq!(r.zagreb1, zagreb1(&g));
        assert_eq!(r.zagreb2, zagreb2(&g));
        assert_eq!((r.n, r.m, r.max_degree, r.min_degree), (5, 5, 3, 1));
    }

    #[test]
    fn empty_report_is_all_zero() {
        let r = report(&Graph::empty(1));
        assert_eq!(
            (r.m, r.irr, r.zagreb1, r.zagreb2, r.max_degree, r.min_degree),
            (0, 0, 0, 0, 0, 0)
        );
    }
}
