//! Sturmian-specific pipeline: the four elementary Sturmian morphisms,
//! the type-alternation constraint, the Sturmian-walk decision, coding of
//! word sets, the totality search, property (H), and the Fibonacci orbit.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::alphabet::{Alphabet, Word};
use crate::automaton::OmegaAutomaton;
use crate::desub::{desubstitute, orbit};
use crate::error::{Error, Result};
use crate::graph::{scc_decomposition, SccDecomposition};
use crate::meta::{BuchiAutomaton, LassoDecision, MetaAutomaton};
use crate::substitution::{DirectiveLasso, Homomorphism, NamedSubstitution};

/// Type of an elementary Sturmian morphism: the letter it keeps short.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SturmianType {
    Type0,
    Type1,
}

/// The four elementary Sturmian morphisms L0, L1, R0, R1 over a binary
/// alphabet, in that fixed order.
#[derive(Clone, Debug)]
pub struct SturmianKit {
    substitutions: Vec<NamedSubstitution>,
}

fn require_binary(alphabet: &Alphabet) -> Result<()> {
    if alphabet.len() != 2 {
        return Err(Error::Precondition(format!(
            "expected a binary alphabet, got [{alphabet}]"
        )));
    }
    Ok(())
}

impl SturmianKit {
    /// Instantiates the kit over any two-letter alphabet; the first letter
    /// plays the role of 0.
    pub fn new(alphabet: &Alphabet) -> Result<SturmianKit> {
        require_binary(alphabet)?;
        let build = |name: &str, img0: &[usize], img1: &[usize]| -> Result<NamedSubstitution> {
            Ok(NamedSubstitution::new(
                name,
                Homomorphism::new(alphabet.clone(), vec![img0.to_vec(), img1.to_vec()])?,
            ))
        };
        Ok(SturmianKit {
            substitutions: vec![
                build("L0", &[0], &[0, 1])?,
                build("L1", &[1, 0], &[1])?,
                build("R0", &[0], &[1, 0])?,
                build("R1", &[0, 1], &[1])?,
            ],
        })
    }

    pub fn substitutions(&self) -> &[NamedSubstitution] {
        &self.substitutions
    }

    /// Type of the morphism at `index` in kit order L0, L1, R0, R1.
    pub fn type_of(index: usize) -> SturmianType {
        match index {
            0 | 2 => SturmianType::Type0,
            1 | 3 => SturmianType::Type1,
            _ => panic!("sturmian kit has four morphisms"),
        }
    }

    pub fn type_of_name(name: &str) -> Option<SturmianType> {
        match name {
            "L0" | "R0" => Some(SturmianType::Type0),
            "L1" | "R1" => Some(SturmianType::Type1),
            _ => None,
        }
    }
}

/// The Fibonacci substitution `0 -> 01, 1 -> 0` over a binary alphabet.
pub fn fibonacci_substitution(alphabet: &Alphabet) -> Result<Homomorphism> {
    require_binary(alphabet)?;
    Homomorphism::new(alphabet.clone(), vec![vec![0, 1], vec![0]])
}

/// A 3-state Büchi automaton over `L0 L1 R0 R1` accepting exactly the
/// directive sequences with infinitely many type-0 and infinitely many
/// type-1 morphisms: `wait0` owes a type-0, `wait1` owes a type-1, and
/// `alt` is entered each time a 0-then-1 round completes.
pub fn alternation_buchi() -> BuchiAutomaton {
    let alphabet = Alphabet::new(["L0", "L1", "R0", "R1"]).expect("kit alphabet is valid");
    let type0 = [0usize, 2];
    let type1 = [1usize, 3];
    let mut edges = Vec::new();
    for &a in &type0 {
        edges.push((0, a, 1)); // wait0: saw type-0, now owe a type-1
        edges.push((1, a, 1));
        edges.push((2, a, 1));
    }
    for &a in &type1 {
        edges.push((0, a, 0));
        edges.push((1, a, 2)); // wait1: round complete
        edges.push((2, a, 0));
    }
    BuchiAutomaton::new(
        alphabet,
        vec!["wait0".into(), "wait1".into(), "alt".into()],
        &[0],
        &[2],
        &edges,
    )
    .expect("alternation gadget is valid")
}

/// Shortest intra-component label path `from -> to` (empty if equal).
fn intra_path(
    adjacency: &[Vec<(usize, usize)>],
    scc: &SccDecomposition,
    from: usize,
    to: usize,
) -> Vec<usize> {
    if from == to {
        return Vec::new();
    }
    let comp = scc.component_of[from];
    debug_assert_eq!(comp, scc.component_of[to]);
    let mut parents: Vec<Option<(usize, usize)>> = vec![None; adjacency.len()];
    let mut seen = vec![false; adjacency.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        for &(label, t) in &adjacency[v] {
            if scc.component_of[t] != comp || seen[t] {
                continue;
            }
            seen[t] = true;
            parents[t] = Some((v, label));
            if t == to {
                let mut labels = Vec::new();
                let mut cur = to;
                while let Some((prev, label)) = parents[cur] {
                    labels.push(label);
                    cur = prev;
                }
                labels.reverse();
                return labels;
            }
            queue.push_back(t);
        }
    }
    unreachable!("states of one component are mutually reachable inside it")
}

/// Is some Sturmian word accepted by `a`?
///
/// Looks for a strongly connected component of the pruned meta-automaton,
/// reachable from the start vertex, that contains both a type-0 and a
/// type-1 edge: cycling through both alternates types infinitely often.
pub fn decide_sturmian(a: &OmegaAutomaton, budget: usize) -> Result<LassoDecision> {
    require_binary(a.alphabet())?;
    let kit = SturmianKit::new(a.alphabet())?;
    let meta = MetaAutomaton::build(a, kit.substitutions(), budget)?;
    let pruned = meta.prune();
    let no = LassoDecision {
        answer: false,
        lasso: None,
        vertices: meta.vertex_count(),
        live_vertices: pruned.vertex_count(),
    };
    let Some(init) = pruned.initial else {
        return Ok(no);
    };

    let plain: Vec<Vec<usize>> = pruned
        .adjacency
        .iter()
        .map(|row| row.iter().map(|&(_, t)| t).collect())
        .collect();
    let scc = scc_decomposition(&plain);

    // Per component: smallest intra-component edge of each type.
    let mut edge0: Vec<Option<(usize, usize)>> = vec![None; scc.count()];
    let mut edge1: Vec<Option<(usize, usize)>> = vec![None; scc.count()];
    for (v, row) in pruned.adjacency.iter().enumerate() {
        for &(s, t) in row {
            if scc.component_of[t] != scc.component_of[v] {
                continue;
            }
            let slot = match SturmianKit::type_of(s) {
                SturmianType::Type0 => &mut edge0[scc.component_of[v]],
                SturmianType::Type1 => &mut edge1[scc.component_of[v]],
            };
            if slot.is_none_or(|(ev, es)| (v, s) < (ev, es)) {
                *slot = Some((v, s));
            }
        }
    }

    // BFS from the start vertex; take the first vertex whose component
    // carries both edge types.
    let mut parents: Vec<Option<(usize, usize)>> = vec![None; plain.len()];
    let mut seen = vec![false; plain.len()];
    let mut queue = VecDeque::from([init]);
    seen[init] = true;
    let mut entry = None;
    'bfs: while let Some(v) = queue.pop_front() {
        let comp = scc.component_of[v];
        if edge0[comp].is_some() && edge1[comp].is_some() {
            entry = Some(v);
            break 'bfs;
        }
        for &(label, t) in &pruned.adjacency[v] {
            if !seen[t] {
                seen[t] = true;
                parents[t] = Some((v, label));
                queue.push_back(t);
            }
        }
    }
    let Some(entry) = entry else {
        return Ok(no);
    };

    let mut stem = Vec::new();
    {
        let mut cur = entry;
        while let Some((prev, label)) = parents[cur] {
            stem.push(label);
            cur = prev;
        }
        stem.reverse();
    }
    let comp = scc.component_of[entry];
    let (u0, s0) = edge0[comp].expect("component was selected for both types");
    let (u1, s1) = edge1[comp].expect("component was selected for both types");
    let t0 = meta_target(&pruned.adjacency, u0, s0);
    let t1 = meta_target(&pruned.adjacency, u1, s1);
    let mut cycle = intra_path(&pruned.adjacency, &scc, entry, u0);
    cycle.push(s0);
    cycle.extend(intra_path(&pruned.adjacency, &scc, t0, u1));
    cycle.push(s1);
    cycle.extend(intra_path(&pruned.adjacency, &scc, t1, entry));

    let name = |s: &usize| kit.substitutions()[*s].name.clone();
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

fn meta_target(adjacency: &[Vec<(usize, usize)>], v: usize, s: usize) -> usize {
    adjacency[v]
        .iter()
        .find(|&&(label, _)| label == s)
        .map(|&(_, t)| t)
        .expect("edge exists by construction")
}

/// The flower automaton of a finite set of nonempty binary words: one
/// root state, one fresh cycle per word, and exactly the infinite
/// concatenations of the words as language.
pub fn coding_automaton(words: &[Word]) -> Result<OmegaAutomaton> {
    if words.is_empty() {
        return Err(Error::Precondition("the word set must be nonempty".into()));
    }
    let alphabet = Alphabet::binary();
    let mut seen: HashSet<&Word> = HashSet::new();
    let mut names = vec!["root".to_string()];
    let mut edges = Vec::new();
    for (i, word) in words.iter().enumerate() {
        if word.is_empty() {
            return Err(Error::Precondition(
                "the empty word cannot participate in a coding".into(),
            ));
        }
        alphabet.check_word(word)?;
        if !seen.insert(word) {
            continue;
        }
        if word.len() == 1 {
            edges.push((0, word[0], 0));
            continue;
        }
        let mut prev = 0usize;
        for (j, &letter) in word.iter().enumerate() {
            let next = if j + 1 == word.len() {
                0
            } else {
                names.push(format!("w{i}p{j}"));
                names.len() - 1
            };
            edges.push((prev, letter, next));
            prev = next;
        }
    }
    OmegaAutomaton::new(alphabet, names, &[0], &edges)
}

/// Does the set of infinite concatenations of `words` contain a Sturmian
/// word?
pub fn decide_coding(words: &[Word], budget: usize) -> Result<LassoDecision> {
    decide_sturmian(&coding_automaton(words)?, budget)
}

/// A path through the meta-automaton ending on a total vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalityPath {
    /// Substitution names along the path, in application order from the
    /// start vertex.
    pub labels: Vec<String>,
    /// BFS index of the total vertex reached.
    pub target: usize,
}

impl TotalityPath {
    /// The composed substitution `σ₁ ∘ σ₂ ∘ … ∘ σₖ` of the path labels.
    pub fn composed(&self, kit: &SturmianKit) -> Result<Homomorphism> {
        let by_name: HashMap<&str, &Homomorphism> = kit
            .substitutions()
            .iter()
            .map(|s| (s.name.as_str(), &s.substitution))
            .collect();
        let alphabet = kit.substitutions()[0].substitution.alphabet().clone();
        let mut composed = Homomorphism::identity(alphabet);
        for name in &self.labels {
            let step = by_name
                .get(name.as_str())
                .ok_or_else(|| Error::UnknownSymbol {
                    symbol: name.clone(),
                })?;
            composed = composed.compose(step)?;
        }
        Ok(composed)
    }
}

/// Breadth-first search over the Sturmian meta-automaton for a vertex
/// whose automaton is total; returns the shortest label path, or `None`
/// when no reachable vertex is total.
///
/// When a path comes back, the composed desubstitution of `a` along it is
/// total, hence the composed substitution maps the full binary shift into
/// the language of `a`.
pub fn find_total_reachable(a: &OmegaAutomaton, budget: usize) -> Result<Option<TotalityPath>> {
    require_binary(a.alphabet())?;
    let kit = SturmianKit::new(a.alphabet())?;

    let mut vertices = vec![a.clone()];
    let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
    index.insert(a.transition_key(), 0);
    let mut parents: Vec<Option<(usize, usize)>> = vec![None];
    if a.is_total() {
        return Ok(Some(TotalityPath {
            labels: Vec::new(),
            target: 0,
        }));
    }
    let mut next = 0usize;
    while next < vertices.len() {
        for (s, sub) in kit.substitutions().iter().enumerate() {
            let image = desubstitute(&vertices[next], &sub.substitution)?;
            let key = image.transition_key();
            if index.contains_key(&key) {
                continue;
            }
            if vertices.len() >= budget {
                return Err(Error::VertexBudget { budget });
            }
            let t = vertices.len();
            index.insert(key, t);
            parents.push(Some((next, s)));
            let total = image.is_total();
            vertices.push(image);
            if total {
                let mut labels = Vec::new();
                let mut cur = t;
                while let Some((prev, label)) = parents[cur] {
                    labels.push(kit.substitutions()[label].name.clone());
                    cur = prev;
                }
                labels.reverse();
                return Ok(Some(TotalityPath { labels, target: t }));
            }
        }
        next += 1;
    }
    Ok(None)
}

/// Property (H) of a state: it can continue on 0 into a live state iff it
/// can continue on 1 into a live state.
pub fn property_h(a: &OmegaAutomaton, state: usize) -> Result<bool> {
    require_binary(a.alphabet())?;
    if state >= a.state_count() {
        return Err(Error::Precondition(format!("state {state} out of range")));
    }
    let live = a.live_states();
    let side = |letter: usize| live.iter().any(|r| a.relation(letter).contains(state, r));
    Ok(side(0) == side(1))
}

/// Least orbit index `n` with `σ_f⁻ⁿ(a)` total, searched over one full
/// orbit of the Fibonacci substitution; `None` when the orbit contains no
/// total automaton.
pub fn fibonacci_totality(a: &OmegaAutomaton) -> Result<Option<usize>> {
    require_binary(a.alphabet())?;
    let fib = fibonacci_substitution(a.alphabet())?;
    let orb = orbit(a, &fib)?;
    for (n, automaton) in orb.automata[..orb.first_repeat].iter().enumerate() {
        if automaton.is_total() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
