use crate::graph::Graph;

use super::{erdos_gallai_violation, DegreeSequence, SequenceError};

/// Havel–Hakimi greedy realization. Vertex `i` receives degree `degrees[i]`;
/// the input need not be sorted. Returns `None` when the greedy step runs
/// out of partners.
///
/// Each round takes the vertex with the largest residual degree and joins it
/// to the next-largest residual vertices. Ties go to the smaller index.
pub fn havel_hakimi(degrees: &[usize]) -> Option<Graph> {
    let n = degrees.len();
    let mut residual = degrees.to_vec();
    let mut g = Graph::empty(n);
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let Some(&v) = order.first() else {
            return Some(g);
        };
        let need = residual[v];
        if need == 0 {
            return Some(g);
        }
        if need >= n || residual[order[need]] == 0 {
            return None;
        }
        residual[v] = 0;
        for &w in &order[1..=need] {
            residual[w] -= 1;
            g.add_edge(v, w);
        }
    }
}

pub fn realize(s: &DegreeSequence) -> Result<Graph, SequenceError> {
    match havel_hakimi(s.values()) {
        Some(g) => Ok(g),
        None => Err(match erdos_gallai_violation(s.values()) {
            Some(v) => SequenceError::NotGraphic(v),
            None => SequenceError::Inconsistent(s.clone()),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::Violation;
    use crate::graph::irregularity;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn triangle() {
        assert_eq!(realize(&seq(&[2, 2, 2])).unwrap(), Graph::complete(3));
    }

    #[test]
    fn clique_star_sequence() {
        let g = realize(&seq(&[5, 5, 2, 2, 2, 2])).unwrap();
        assert_eq!(g.degrees(), vec![5, 5, 2, 2, 2, 2]);
        assert_eq!(irregularity(&g), 24);
    }

    #[test]
    fn perfect_matching() {
        let g = realize(&seq(&[1, 1, 1, 1])).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(irregularity(&g), 0);
    }

    #[test]
    fn non_graphic_reports_violation() {
        assert_eq!(
            realize(&seq(&[3, 3, 1, 1])),
            Err(SequenceError::NotGraphic(Violation::Inequality { r: 2 }))
        );
        assert_eq!(
            realize(&seq(&[1, 0])),
            Err(SequenceError::NotGraphic(Violation::OddSum))
        );
    }

    #[test]
    fn unsorted_input_keeps_positions() {
        let g = havel_hakimi(&[1, 2, 1]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert!(havel_hakimi(&[3, 1, 1]).is_none());
    }

    #[test]
    fn empty_sequence() {
        assert_eq!(havel_hakimi(&[]), Some(Graph::empty(0)));
    }
}
