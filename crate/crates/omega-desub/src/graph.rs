//! Strongly connected components of a finite directed graph.
//!
//! Iterative Tarjan, so large coding automata cannot overflow the stack.
//! Components come out in reverse topological order: every edge leaving a
//! component points to a component emitted earlier.

/// SCC partition of a graph given as adjacency lists.
#[derive(Debug, Clone)]
pub struct SccDecomposition {
    /// Components in emission (reverse topological) order.
    pub components: Vec<Vec<usize>>,
    /// Component index of each vertex.
    pub component_of: Vec<usize>,
    /// Per component: does it carry an infinite walk (size > 1 or a
    /// self-loop)?
    pub cyclic: Vec<bool>,
}

impl SccDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// True when `v` lies in a component that supports an infinite walk.
    pub fn in_cyclic_component(&self, v: usize) -> bool {
        self.cyclic[self.component_of[v]]
    }
}

/// Tarjan's algorithm on `adjacency` (vertex -> successor list).
pub fn scc_decomposition(adjacency: &[Vec<usize>]) -> SccDecomposition {
    let n = adjacency.len();
    const UNSET: usize = usize::MAX;

    let mut index = vec![UNSET; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;

    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut component_of = vec![UNSET; n];

    // Explicit DFS frames: (vertex, next child position).
    let mut call_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call_stack.push((root, 0));
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut child)) = call_stack.last_mut() {
            if *child < adjacency[v].len() {
                let w = adjacency[v][*child];
                *child += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call_stack.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            } else {
                call_stack.pop();
                if let Some(&(parent, _)) = call_stack.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        component_of[w] = components.len();
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
    }

    let cyclic = components
        .iter()
        .map(|comp| comp.len() > 1 || comp.iter().any(|&v| adjacency[v].contains(&v)))
        .collect();

    SccDecomposition {
        components,
        component_of,
        cyclic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_one_cyclic_component() {
        let adj = vec![vec![1], vec![2], vec![0]];
        let scc = scc_decomposition(&adj);
        assert_eq!(scc.count(), 1);
        assert_eq!(scc.components[0], vec![0, 1, 2]);
        assert!(scc.cyclic[0]);
    }

    #[test]
    fn dag_gives_singletons() {
        let adj = vec![vec![1, 2], vec![2], vec![]];
        let scc = scc_decomposition(&adj);
        assert_eq!(scc.count(), 3);
        assert!(scc.cyclic.iter().all(|&c| !c));
    }

    #[test]
    fn two_cycle_plus_pendant() {
        // 0 <-> 1, 2 -> 0
        let adj = vec![vec![1], vec![0], vec![0]];
        let scc = scc_decomposition(&adj);
        assert_eq!(scc.count(), 2);
        let cyc: Vec<_> = scc
            .components
            .iter()
            .zip(&scc.cyclic)
            .filter(|(_, &c)| c)
            .map(|(comp, _)| comp.clone())
            .collect();
        assert_eq!(cyc, vec![vec![0, 1]]);
    }

    #[test]
    fn self_loop_is_cyclic() {
        let adj = vec![vec![0]];
        let scc = scc_decomposition(&adj);
        assert!(scc.cyclic[0]);
    }

    #[test]
    fn reverse_topological_emission() {
        // 0 -> 1 -> 2: component of 2 must be emitted before that of 0.
        let adj = vec![vec![1], vec![2], vec![]];
        let scc = scc_decomposition(&adj);
        assert!(scc.component_of[2] < scc.component_of[0]);
    }
}
