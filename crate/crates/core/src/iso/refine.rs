//! Equitable partition refinement on ordered partitions.
//!
//! A partition is an ordered list of cells. Refinement repeatedly splits
//! cells by neighbor counts into a splitter cell until stable. All ordering
//! decisions (splitter scan order, subcell order by ascending count) depend
//! only on the partition structure, never on vertex indices, so refinement
//! commutes with graph isomorphisms.

use crate::graph::Graph;

pub(crate) type Partition = Vec<Vec<usize>>;

pub(crate) fn unit_partition(n: usize) -> Partition {
    vec![(0..n).collect()]
}

/// Refines to the coarsest equitable partition at or below the input.
pub(crate) fn refine(g: &Graph, partition: &mut Partition) {
    let n = g.vertex_count();
    let mut in_splitter = vec![false; n];
    loop {
        let mut split_happened = false;
        'search: for s in 0..partition.len() {
            for &v in &partition[s] {
                in_splitter[v] = true;
            }
            for c in 0..partition.len() {
                if partition[c].len() > 1 && try_split(g, partition, c, &in_splitter) {
                    split_happened = true;
                    for v in 0..n {
                        in_splitter[v] = false;
                    }
                    break 'search;
                }
            }
            for &v in &partition[s] {
                in_splitter[v] = false;
            }
        }
        if !split_happened {
            return;
        }
    }
}

/// Splits cell `c` by neighbor count into the marked splitter; subcells are
/// ordered by ascending count. Returns whether a split happened.
fn try_split(g: &Graph, partition: &mut Partition, c: usize, in_splitter: &[bool]) -> bool {
    let count_into = |v: usize| g.neighbors(v).iter().filter(|&&w| in_splitter[w]).count();
    let cell = &partition[c];
    let first = count_into(cell[0]);
    if cell.iter().all(|&v| count_into(v) == first) {
        return false;
    }
    let mut keyed: Vec<(usize, usize)> = cell.iter().map(|&v| (count_into(v), v)).collect();
    keyed.sort_unstable();
    let mut subcells: Vec<Vec<usize>> = Vec::new();
    let mut current_key = usize::MAX;
    for (key, v) in keyed {
        if key != current_key {
            subcells.push(Vec::new());
            current_key = key;
        }
        subcells.last_mut().expect("pushed above").push(v);
    }
    partition.splice(c..=c, subcells);
    true
}

/// Splits `v` out of cell `c` as a new singleton placed before the rest,
/// then refines.
pub(crate) fn individualize(g: &Graph, partition: &Partition, c: usize, v: usize) -> Partition {
    let mut child: Partition = Vec::with_capacity(partition.len() + 1);
    for (i, cell) in partition.iter().enumerate() {
        if i == c {
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
        } else {
            child.push(cell.clone());
        }
    }
    refine(g, &mut child);
    child
}

/// Index of the target cell: smallest non-singleton, lowest index tiebreak.
pub(crate) fn target_cell(partition: &Partition) -> Option<usize> {
    partition
        .iter()
        .enumerate()
        .filter(|(_, cell)| cell.len() > 1)
        .min_by_key(|(i, cell)| (cell.len(), *i))
        .map(|(i, _)| i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::petersen;
    use crate::graph::Graph;

    #[test]
    fn refinement_splits_by_degree_first() {
        // Star K_{1,3}: center separates from leaves.
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut p = unit_partition(4);
        refine(&g, &mut p);
        assert_eq!(p, vec![vec![1, 2, 3], vec![0]]);
    }

    #[test]
    fn regular_graph_starts_equitable() {
        let g = petersen();
        let mut p = unit_partition(10);
        refine(&g, &mut p);
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn individualization_discretizes_a_path() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let mut p = unit_partition(3);
        refine(&g, &mut p);
        // Ends {0,2} then middle {1}.
        assert_eq!(p, vec![vec![0, 2], vec![1]]);
        let child = individualize(&g, &p, 0, 2);
        assert!(child.iter().all(|cell| cell.len() == 1));
    }

    #[test]
    fn target_cell_prefers_smallest() {
        let p: Partition = vec![vec![0], vec![1, 2, 3], vec![4, 5]];
        assert_eq!(target_cell(&p), Some(2));
        let discrete: Partition = vec![vec![0], vec![1]];
        assert_eq!(target_cell(&discrete), None);
    }
}
