//! The meta-automaton of desubstitutions, nilpotency pruning, the
//! infinitely-desubstitutable decision, directive-sequence languages, and
//! Büchi-constrained decisions via product emptiness.
//!
//! Vertices are ω-automata, hash-consed by their transition bits; an edge
//! labeled σ goes from an automaton to its σ-desubstitution. A word is
//! infinitely desubstitutable along a directive sequence accepted here iff
//! the corresponding walk never enters a vertex with empty language.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, Letter};
use crate::automaton::OmegaAutomaton;
use crate::desub::desubstitute;
use crate::error::{Error, Result};
use crate::graph::{scc_decomposition, SccDecomposition};
use crate::relation::{Relation, StateSet};
use crate::substitution::{DirectiveLasso, NamedSubstitution};

/// Default cap on the number of hash-consed meta vertices.
pub const DEFAULT_VERTEX_BUDGET: usize = 100_000;

/// The desubstitution closure of one automaton under a set of named
/// substitutions, with one edge per (vertex, substitution) pair.
#[derive(Clone, Debug)]
pub struct MetaAutomaton {
    substitutions: Vec<NamedSubstitution>,
    vertices: Vec<OmegaAutomaton>,
    /// `edges[v][s]` = index of `substitutions[s]⁻¹(vertices[v])`.
    edges: Vec<Vec<usize>>,
    /// Per vertex: is its infinite language empty?
    empty: Vec<bool>,
}

impl MetaAutomaton {
    /// BFS closure of `a` under desubstitution by every substitution,
    /// deduplicating vertices bit-exactly. Fails if more than `budget`
    /// distinct vertices appear.
    pub fn build(
        a: &OmegaAutomaton,
        substitutions: &[NamedSubstitution],
        budget: usize,
    ) -> Result<MetaAutomaton> {
        let mut names = std::collections::HashSet::new();
        for s in substitutions {
            if !s.substitution.is_nonerasing() {
                return Err(Error::Precondition(format!(
                    "substitution `{}` is erasing",
                    s.name
                )));
            }
            if a.alphabet() != s.substitution.alphabet() {
                return Err(Error::AlphabetMismatch {
                    expected: a.alphabet().to_string(),
                    got: s.substitution.alphabet().to_string(),
                });
            }
            if !names.insert(s.name.as_str()) {
                return Err(Error::Precondition(format!(
                    "duplicate substitution name `{}`",
                    s.name
                )));
            }
        }

        let mut vertices = vec![a.clone()];
        let mut empty = vec![a.is_empty_infinite()];
        let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
        index.insert(a.transition_key(), 0);
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut next = 0usize;
        while next < vertices.len() {
            let mut row = Vec::with_capacity(substitutions.len());
            for s in substitutions {
                let image = desubstitute(&vertices[next], &s.substitution)?;
                let key = image.transition_key();
                let target = match index.get(&key) {
                    Some(&t) => t,
                    None => {
                        if vertices.len() >= budget {
                            return Err(Error::VertexBudget { budget });
                        }
                        let t = vertices.len();
                        index.insert(key, t);
                        empty.push(image.is_empty_infinite());
                        vertices.push(image);
                        t
                    }
                };
                row.push(target);
            }
            edges.push(row);
            next += 1;
        }
        Ok(MetaAutomaton {
            substitutions: substitutions.to_vec(),
            vertices,
            edges,
            empty,
        })
    }

    pub fn substitutions(&self) -> &[NamedSubstitution] {
        &self.substitutions
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: usize) -> &OmegaAutomaton {
        &self.vertices[v]
    }

    /// The initial vertex is always the automaton the closure started from.
    pub fn initial_vertex(&self) -> usize {
        0
    }

    pub fn edge(&self, v: usize, s: usize) -> usize {
        self.edges[v][s]
    }

    pub fn is_empty_vertex(&self, v: usize) -> bool {
        self.empty[v]
    }

    /// Restriction to the vertices with nonempty language. Walks in the
    /// pruned graph are exactly the non-nilpotent walks of the meta.
    pub fn prune(&self) -> PrunedMeta<'_> {
        let surviving: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| !self.empty[v])
            .collect();
        let mut pruned_index = vec![None; self.vertices.len()];
        for (i, &v) in surviving.iter().enumerate() {
            pruned_index[v] = Some(i);
        }
        let adjacency = surviving
            .iter()
            .map(|&v| {
                self.edges[v]
                    .iter()
                    .enumerate()
                    .filter_map(|(s, &t)| pruned_index[t].map(|pt| (s, pt)))
                    .collect()
            })
            .collect();
        let initial = pruned_index[0];
        PrunedMeta {
            meta: self,
            surviving,
            adjacency,
            initial,
        }
    }
}

/// View of a meta-automaton restricted to its nonempty vertices.
#[derive(Debug)]
pub struct PrunedMeta<'a> {
    meta: &'a MetaAutomaton,
    /// Original indices of surviving vertices, ascending.
    pub surviving: Vec<usize>,
    /// `adjacency[i]` = (substitution index, surviving target index),
    /// in substitution order.
    pub adjacency: Vec<Vec<(usize, usize)>>,
    /// Surviving index of the original initial vertex, if it survived.
    pub initial: Option<usize>,
}

impl PrunedMeta<'_> {
    pub fn vertex_count(&self) -> usize {
        self.surviving.len()
    }

    /// The automaton behind surviving vertex `i`.
    pub fn vertex(&self, i: usize) -> &OmegaAutomaton {
        self.meta.vertex(self.surviving[i])
    }

    fn successors_only(&self) -> Vec<Vec<usize>> {
        self.adjacency
            .iter()
            .map(|row| row.iter().map(|&(_, t)| t).collect())
            .collect()
    }
}

/// Outcome of a lasso-producing decision over the meta-automaton.
#[derive(Clone, Debug)]
pub struct LassoDecision {
    pub answer: bool,
    pub lasso: Option<DirectiveLasso>,
    /// Number of hash-consed vertices explored.
    pub vertices: usize,
    /// Number of vertices with nonempty language.
    pub live_vertices: usize,
}

impl LassoDecision {
    fn no(meta: &MetaAutomaton, pruned: &PrunedMeta<'_>) -> LassoDecision {
        LassoDecision {
            answer: false,
            lasso: None,
            vertices: meta.vertex_count(),
            live_vertices: pruned.vertex_count(),
        }
    }
}

/// BFS over labeled adjacency lists from `start`; returns discovery order
/// and per-vertex `(parent, label)` of a shortest path.
fn bfs_forest(
    adjacency: &[Vec<(usize, usize)>],
    start: usize,
) -> (Vec<usize>, Vec<Option<(usize, usize)>>) {
    let mut parents = vec![None; adjacency.len()];
    let mut seen = vec![false; adjacency.len()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &(label, t) in &adjacency[v] {
            if !seen[t] {
                seen[t] = true;
                parents[t] = Some((v, label));
                queue.push_back(t);
            }
        }
    }
    (order, parents)
}

fn labels_to(parents: &[Option<(usize, usize)>], target: usize) -> Vec<usize> {
    let mut labels = Vec::new();
    let mut cur = target;
    while let Some((prev, label)) = parents[cur] {
        labels.push(label);
        cur = prev;
    }
    labels.reverse();
    labels
}

/// Shortest nonempty label path from `v` back to `v` staying inside `v`'s
/// strongly connected component.
fn shortest_cycle_labels(
    adjacency: &[Vec<(usize, usize)>],
    scc: &SccDecomposition,
    v: usize,
) -> Vec<usize> {
    let comp = scc.component_of[v];
    let mut parents: Vec<Option<(usize, usize)>> = vec![None; adjacency.len()];
    let mut seen = vec![false; adjacency.len()];
    let mut queue = VecDeque::new();
    for &(label, t) in &adjacency[v] {
        if scc.component_of[t] != comp {
            continue;
        }
        if t == v {
            return vec![label];
        }
        if !seen[t] {
            seen[t] = true;
            parents[t] = Some((v, label));
            queue.push_back(t);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &(label, t) in &adjacency[u] {
            if scc.component_of[t] != comp {
                continue;
            }
            if t == v {
                let mut labels = labels_to(&parents, u);
                labels.push(label);
                return labels;
            }
            if !seen[t] {
                seen[t] = true;
                parents[t] = Some((u, label));
                queue.push_back(t);
            }
        }
    }
    unreachable!("cyclic component admits a cycle through each member")
}

/// Does `a` accept a word infinitely desubstitutable by the given
/// substitutions? Positive answers carry an eventually periodic directive
/// sequence as witness.
pub fn decide_inf_desub(
    a: &OmegaAutomaton,
    substitutions: &[NamedSubstitution],
    budget: usize,
) -> Result<LassoDecision> {
    let meta = MetaAutomaton::build(a, substitutions, budget)?;
    let pruned = meta.prune();
    let Some(init) = pruned.initial else {
        return Ok(LassoDecision::no(&meta, &pruned));
    };
    let scc = scc_decomposition(&pruned.successors_only());
    let (order, parents) = bfs_forest(&pruned.adjacency, init);
    let Some(&target) = order.iter().find(|&&v| scc.in_cyclic_component(v)) else {
        return Ok(LassoDecision::no(&meta, &pruned));
    };
    let stem = labels_to(&parents, target);
    let cycle = shortest_cycle_labels(&pruned.adjacency, &scc, target);
    let name = |s: &usize| substitutions[*s].name.clone();
    Ok(LassoDecision {
        answer: true,
        lasso: Some(DirectiveLasso::new(
            stem.iter().map(name).collect(),
            cycle.iter().map(name).collect(),
        )),
        vertices: meta.vertex_count(),
        live_vertices: pruned.vertex_count(),
    })
}

/// The pruned meta-automaton re-emitted as an ω-automaton over the
/// substitution names: its infinite language is the set of directive
/// sequences of infinitely desubstitutable words accepted by `a`.
pub fn directive_language(
    a: &OmegaAutomaton,
    substitutions: &[NamedSubstitution],
    budget: usize,
) -> Result<OmegaAutomaton> {
    if substitutions.is_empty() {
        return Err(Error::Precondition(
            "directive language needs at least one substitution".into(),
        ));
    }
    let meta = MetaAutomaton::build(a, substitutions, budget)?;
    let pruned = meta.prune();
    let alphabet = Alphabet::new(substitutions.iter().map(|s| s.name.as_str()))?;
    let names: Vec<String> = pruned.surviving.iter().map(|v| format!("v{v}")).collect();
    let initial: Vec<usize> = pruned.initial.into_iter().collect();
    let mut edges = Vec::new();
    for (v, row) in pruned.adjacency.iter().enumerate() {
        for &(s, t) in row {
            edges.push((v, s, t));
        }
    }
    OmegaAutomaton::new(alphabet, names, &initial, &edges)
}

/// A Büchi automaton over substitution names: a run is accepting when it
/// visits an accepting state infinitely often.
#[derive(Clone, Debug)]
pub struct BuchiAutomaton {
    alphabet: Alphabet,
    state_names: Vec<String>,
    initial: StateSet,
    accepting: StateSet,
    relations: Vec<Relation>,
}

impl BuchiAutomaton {
    pub fn new(
        alphabet: Alphabet,
        state_names: Vec<String>,
        initial: &[usize],
        accepting: &[usize],
        edges: &[(usize, Letter, usize)],
    ) -> Result<BuchiAutomaton> {
        let n = state_names.len();
        let base = OmegaAutomaton::new(alphabet.clone(), state_names.clone(), initial, edges)?;
        let mut acc = StateSet::empty(n);
        for &q in accepting {
            if q >= n {
                return Err(Error::Precondition(format!(
                    "accepting state {q} out of range"
                )));
            }
            acc.insert(q);
        }
        Ok(BuchiAutomaton {
            alphabet,
            state_names,
            initial: base.initial().clone(),
            accepting: acc,
            relations: base.relations().to_vec(),
        })
    }

    /// One accepting initial state with a self-loop on every symbol:
    /// accepts every infinite word over `alphabet`.
    pub fn total(alphabet: Alphabet) -> BuchiAutomaton {
        let edges: Vec<(usize, Letter, usize)> = (0..alphabet.len()).map(|a| (0, a, 0)).collect();
        BuchiAutomaton::new(alphabet, vec!["all".into()], &[0], &[0], &edges)
            .expect("total gadget is valid")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.state_names[q]
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn accepting(&self) -> &StateSet {
        &self.accepting
    }

    pub fn relation(&self, letter: Letter) -> &Relation {
        &self.relations[letter]
    }

    /// Deterministic list of transitions `(src, letter, dst)`.
    pub fn transitions(&self) -> Vec<(usize, Letter, usize)> {
        let mut out = Vec::new();
        for src in 0..self.state_count() {
            for (a, rel) in self.relations.iter().enumerate() {
                for dst in 0..self.state_count() {
                    if rel.contains(src, dst) {
                        out.push((src, a, dst));
                    }
                }
            }
        }
        out
    }

    /// Is the accepted language empty? Nonempty iff an accepting state
    /// lies in a cyclic strongly connected component reachable from an
    /// initial state.
    pub fn is_empty(&self) -> bool {
        let n = self.state_count();
        let mut adjacency = vec![Vec::new(); n];
        for rel in &self.relations {
            for (q, r) in rel.edges() {
                if !adjacency[q].contains(&r) {
                    adjacency[q].push(r);
                }
            }
        }
        let scc = scc_decomposition(&adjacency);
        let mut reach = self.initial.clone();
        let mut queue: VecDeque<usize> = reach.iter().collect();
        while let Some(q) = queue.pop_front() {
            for &r in &adjacency[q] {
                if !reach.contains(r) {
                    reach.insert(r);
                    queue.push_back(r);
                }
            }
        }
        !(0..n)
            .any(|q| reach.contains(q) && self.accepting.contains(q) && scc.in_cyclic_component(q))
    }

    /// Exact membership of `stem·cycle^ω` in the Büchi language, decided
    /// by restricting the automaton to the positions of the lasso and
    /// checking emptiness of the restriction.
    pub fn accepts_lasso(&self, stem: &[Letter], cycle: &[Letter]) -> Result<bool> {
        if cycle.is_empty() {
            return Err(Error::Precondition("lasso cycle must be nonempty".into()));
        }
        self.alphabet.check_word(stem)?;
        self.alphabet.check_word(cycle)?;
        let n = self.state_count();
        let positions = stem.len() + cycle.len();
        let word_at = |pos: usize| {
            if pos < stem.len() {
                stem[pos]
            } else {
                cycle[pos - stem.len()]
            }
        };
        let next_pos = |pos: usize| {
            if pos + 1 < positions {
                pos + 1
            } else {
                stem.len()
            }
        };
        let id = |q: usize, pos: usize| q * positions + pos;
        let mut adjacency = vec![Vec::new(); n * positions];
        for pos in 0..positions {
            let rel = &self.relations[word_at(pos)];
            for (q, r) in rel.edges() {
                adjacency[id(q, pos)].push(id(r, next_pos(pos)));
            }
        }
        let scc = scc_decomposition(&adjacency);
        let mut reach = vec![false; n * positions];
        let mut queue: VecDeque<usize> = self.initial.iter().map(|q| id(q, 0)).collect();
        for &s in &queue {
            reach[s] = true;
        }
        while let Some(s) = queue.pop_front() {
            for &t in &adjacency[s] {
                if !reach[t] {
                    reach[t] = true;
                    queue.push_back(t);
                }
            }
        }
        Ok((0..n * positions).any(|s| {
            reach[s] && self.accepting.contains(s / positions) && scc.in_cyclic_component(s)
        }))
    }
}

/// Does `a` accept a word that is infinitely desubstitutable along a
/// directive sequence accepted by the Büchi constraint `r`?
///
/// Builds the product of the pruned meta-automaton with `r` and checks
/// Büchi emptiness; a positive answer carries the lasso of substitution
/// names read off an accepting product cycle.
pub fn decide_constrained(
    a: &OmegaAutomaton,
    substitutions: &[NamedSubstitution],
    r: &BuchiAutomaton,
    budget: usize,
) -> Result<LassoDecision> {
    // Align R's alphabet with the substitution names.
    let mut r_letter = Vec::with_capacity(substitutions.len());
    for s in substitutions {
        r_letter.push(r.alphabet().letter(&s.name)?);
    }
    if r.alphabet().len() != substitutions.len() {
        return Err(Error::AlphabetMismatch {
            expected: substitutions
                .iter()
                .map(|s| s.name.clone())
                .collect::<Vec<_>>()
                .join(" "),
            got: r.alphabet().to_string(),
        });
    }

    let meta = MetaAutomaton::build(a, substitutions, budget)?;
    let pruned = meta.prune();
    let Some(init) = pruned.initial else {
        return Ok(LassoDecision::no(&meta, &pruned));
    };

    let rn = r.state_count();
    let id = |v: usize, q: usize| v * rn + q;
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); pruned.vertex_count() * rn];
    for (v, row) in pruned.adjacency.iter().enumerate() {
        for &(s, t) in row {
            let rel = r.relation(r_letter[s]);
            for q in 0..rn {
                for q2 in 0..rn {
                    if rel.contains(q, q2) {
                        adjacency[id(v, q)].push((s, id(t, q2)));
                    }
                }
            }
        }
    }

    let scc = scc_decomposition(
        &adjacency
            .iter()
            .map(|row| row.iter().map(|&(_, t)| t).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );

    // Multi-source BFS from every initial product state.
    let starts: Vec<usize> = r.initial().iter().map(|q| id(init, q)).collect();
    let mut seen = vec![false; adjacency.len()];
    let mut parents: Vec<Option<(usize, usize)>> = vec![None; adjacency.len()];
    let mut order = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in &starts {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(s) = queue.pop_front() {
        order.push(s);
        for &(label, t) in &adjacency[s] {
            if !seen[t] {
                seen[t] = true;
                parents[t] = Some((s, label));
                queue.push_back(t);
            }
        }
    }

    let accepting_target = order
        .iter()
        .copied()
        .find(|&s| r.accepting().contains(s % rn) && scc.in_cyclic_component(s));
    let Some(target) = accepting_target else {
        return Ok(LassoDecision::no(&meta, &pruned));
    };
    let stem = labels_to(&parents, target);
    let cycle = shortest_cycle_labels(&adjacency, &scc, target);
    let name = |s: &usize| substitutions[*s].name.clone();
    Ok(LassoDecision {
        answer: true,
        lasso: Some(DirectiveLasso::new(
            stem.iter().map(name).collect(),
            cycle.iter().map(name).collect(),
        )),
        vertices: meta.vertex_count(),
        live_vertices: pruned.vertex_count(),
    })
}
