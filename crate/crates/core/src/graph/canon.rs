//! Exact canonical labeling by individualization and refinement.
//!
//! Every node of the search tree is an ordered partition of the vertices,
//! refined to an equitable partition. A node's refinement trace records each
//! cell split (position, fragment counts and sizes) and is invariant under
//! relabeling. The canonical leaf is the discrete partition minimizing
//! `(trace at level 0, trace at level 1, ..., relabeled adjacency)`.
//!
//! Pruning:
//! - a subtree whose trace prefix exceeds the best leaf's is dropped;
//! - a leaf equal to a stored leaf (same traces and relabeled adjacency)
//!   yields an automorphism, and the search resumes at the two leaves'
//!   deepest common ancestor;
//! - at any node, a child in the same orbit as an explored child under the
//!   automorphisms found so far that fix the node's prefix is skipped.
//!
//! Stored leaves are the best leaf and the first leaf found below each node
//! of the current path.

use alloc::collections::BTreeSet;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{graph6_encode, DenseGraph};
use crate::bits::{iter_ones, words_for, BitMatrix};

/// Canonical representative of a graph's isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// The input relabeled into canonical order.
    pub graph: DenseGraph,
    /// graph6 string of `graph`.
    pub g6: String,
    /// `labeling[u]` is the canonical label of input vertex `u`.
    pub labeling: Vec<usize>,
}

/// Counters from one canonical labeling run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CanonStats {
    pub nodes: u64,
    pub leaves: u64,
    pub generators: usize,
    pub pruned_by_trace: u64,
    pub pruned_by_orbit: u64,
    pub jumps: u64,
}

pub fn canonical_form(g: &DenseGraph) -> CanonicalForm {
    canonical_form_with_stats(g).0
}

pub fn canonical_form_with_stats(g: &DenseGraph) -> (CanonicalForm, CanonStats) {
    let mut search = Search::new(g);
    let mut root = Partition::by_degree(g);
    let mut trace = Vec::new();
    root.refine(g, &mut search.scratch, &mut trace);
    let mut state = PathState {
        traces: vec![trace],
        path: Vec::new(),
        firsts: Vec::new(),
    };
    search.visit(root, &mut state, Cmp::Equal);
    let best = search.best.take().expect("search always reaches a leaf");
    let v = g.vertex_count();
    let mut labeling = vec![0usize; v];
    for (p, &u) in best.order.iter().enumerate() {
        labeling[u as usize] = p;
    }
    let mut adj = BitMatrix::zeros(v, v);
    for r in 0..v {
        adj.row_mut(r).copy_from_slice(&best.cert[r * search.words..(r + 1) * search.words]);
    }
    let graph = DenseGraph { adj };
    let g6 = graph6_encode(&graph);
    search.stats.generators = search.generators.len();
    (CanonicalForm { graph, g6, labeling }, search.stats)
}

/// Ordered partition. `order[p]` is the vertex at position `p`; a cell is a
/// position range `[s, end[s])`, identified by its start `s`.
#[derive(Clone)]
struct Partition {
    order: Vec<u32>,
    pos: Vec<u32>,
    end: Vec<u32>,
    cells: usize,
    /// Cells still to be used as splitters.
    queue: BTreeSet<u32>,
}

struct Scratch {
    splitter: Vec<u64>,
    counts: Vec<u32>,
    keyed: Vec<(u32, u32)>,
}

impl Partition {
    fn by_degree(g: &DenseGraph) -> Self {
        let v = g.vertex_count();
        let mut keyed: Vec<(usize, u32)> = (0..v).map(|u| (g.degree(u), u as u32)).collect();
        keyed.sort_unstable();
        let order: Vec<u32> = keyed.iter().map(|&(_, u)| u).collect();
        let mut pos = vec![0u32; v];
        for (p, &u) in order.iter().enumerate() {
            pos[u as usize] = p as u32;
        }
        let mut end = vec![0u32; v];
        let mut queue = BTreeSet::new();
        let mut cells = 0;
        let mut s = 0;
        while s < v {
            let mut e = s + 1;
            while e < v && keyed[e].0 == keyed[s].0 {
                e += 1;
            }
            end[s] = e as u32;
            queue.insert(s as u32);
            cells += 1;
            s = e;
        }
        Partition {
            order,
            pos,
            end,
            cells,
            queue,
        }
    }

    #[inline]
    fn is_discrete(&self) -> bool {
        self.cells == self.order.len()
    }

    /// First smallest non-singleton cell, as `(start, end)`.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let v = self.order.len();
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < v {
            let e = self.end[s] as usize;
            if e - s > 1 && best.is_none_or(|(bs, be)| e - s < be - bs) {
                best = Some((s, e));
                if e - s == 2 {
                    break;
                }
            }
            s = e;
        }
        best
    }

    /// Splits `u` off the front of its cell `[s, e)` and queues it.
    fn individualize(&mut self, u: u32, s: usize, e: usize) {
        let p = self.pos[u as usize] as usize;
        let first = self.order[s];
        self.order.swap(s, p);
        self.pos[first as usize] = p as u32;
        self.pos[u as usize] = s as u32;
        self.end[s] = (s + 1) as u32;
        self.end[s + 1] = e as u32;
        self.cells += 1;
        self.queue.insert(s as u32);
    }

    fn refine(&mut self, g: &DenseGraph, scratch: &mut Scratch, trace: &mut Vec<u32>) {
        let v = self.order.len();
        while let Some(sp) = self.queue.pop_first() {
            let sp = sp as usize;
            let sp_end = self.end[sp] as usize;
            scratch.splitter.fill(0);
            for &u in &self.order[sp..sp_end] {
                scratch.splitter[u as usize / 64] |= 1 << (u % 64);
            }
            let mut s = 0;
            while s < v {
                let e = self.end[s] as usize;
                if e - s > 1 {
                    self.split_cell(g, s, e, sp as u32, scratch, trace);
                }
                s = e;
            }
            if self.is_discrete() {
                self.queue.clear();
            }
        }
        trace.push(u32::MAX);
        trace.push(self.cells as u32);
    }

    fn split_cell(
        &mut self,
        g: &DenseGraph,
        s: usize,
        e: usize,
        splitter: u32,
        scratch: &mut Scratch,
        trace: &mut Vec<u32>,
    ) {
        let mut uniform = true;
        for p in s..e {
            let u = self.order[p] as usize;
            let c: u32 = g
                .neighbors(u)
                .iter()
                .zip(&scratch.splitter)
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            scratch.counts[p] = c;
            uniform &= c == scratch.counts[s];
        }
        if uniform {
            return;
        }
        scratch.keyed.clear();
        scratch
            .keyed
            .extend((s..e).map(|p| (scratch.counts[p], self.order[p])));
        scratch.keyed.sort_unstable();
        for (i, &(_, u)) in scratch.keyed.iter().enumerate() {
            self.order[s + i] = u;
            self.pos[u as usize] = (s + i) as u32;
        }
        let was_queued = self.queue.contains(&(s as u32));
        trace.extend([splitter, s as u32]);
        let mut fragments: Vec<(usize, usize)> = Vec::new();
        let mut a = 0;
        while a < scratch.keyed.len() {
            let mut b = a + 1;
            while b < scratch.keyed.len() && scratch.keyed[b].0 == scratch.keyed[a].0 {
                b += 1;
            }
            fragments.push((s + a, s + b));
            trace.extend([scratch.keyed[a].0, (b - a) as u32]);
            a = b;
        }
        self.cells += fragments.len() - 1;
        for &(fs, fe) in &fragments {
            self.end[fs] = fe as u32;
        }
        // Hopcroft: an unqueued cell was already used whole, so its largest
        // fragment is implied by the rest.
        let skip = if was_queued {
            None
        } else {
            fragments
                .iter()
                .enumerate()
                .max_by(|(i, x), (j, y)| (x.1 - x.0).cmp(&(y.1 - y.0)).then(j.cmp(i)))
                .map(|(i, _)| i)
        };
        for (i, &(fs, _)) in fragments.iter().enumerate() {
            if Some(i) != skip {
                self.queue.insert(fs as u32);
            }
        }
    }
}

struct Leaf {
    traces: Vec<Vec<u32>>,
    path: Vec<u32>,
    order: Vec<u32>,
    cert: Vec<u64>,
}

struct PathState {
    traces: Vec<Vec<u32>>,
    path: Vec<u32>,
    /// First leaf found below each interior node of the current path.
    firsts: Vec<Option<Rc<Leaf>>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Cmp {
    /// Every trace so far equals the best leaf's.
    Equal,
    /// Some earlier trace is smaller than the best leaf's.
    Better,
}

enum Flow {
    Continue,
    /// Resume at the node with this many individualized vertices.
    Jump(usize),
}

struct Search<'g> {
    g: &'g DenseGraph,
    words: usize,
    best: Option<Rc<Leaf>>,
    best_generation: u64,
    generators: Vec<Vec<u32>>,
    scratch: Scratch,
    stats: CanonStats,
}

/// Union-find over vertices, fed by the generators that fix a node's prefix.
struct Orbits {
    parent: Vec<u32>,
    seen_generators: usize,
}

impl Orbits {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

impl<'g> Search<'g> {
    fn new(g: &'g DenseGraph) -> Self {
        let v = g.vertex_count();
        Search {
            g,
            words: words_for(v),
            best: None,
            best_generation: 0,
            generators: Vec::new(),
            scratch: Scratch {
                splitter: vec![0; words_for(v)],
                counts: vec![0; v],
                keyed: Vec::with_capacity(v),
            },
            stats: CanonStats::default(),
        }
    }

    fn visit(&mut self, part: Partition, st: &mut PathState, mut cmp: Cmp) -> Flow {
        self.stats.nodes += 1;
        let depth = st.path.len();
        if cmp == Cmp::Equal {
            if let Some(best) = &self.best {
                match best.traces.get(depth).map(|b| st.traces[depth].cmp(b)) {
                    Some(Ordering::Greater) | None => {
                        self.stats.pruned_by_trace += 1;
                        return Flow::Continue;
                    }
                    Some(Ordering::Less) => cmp = Cmp::Better,
                    Some(Ordering::Equal) => {}
                }
            }
        }
        if part.is_discrete() {
            return self.leaf(&part, st, cmp);
        }

        let (ts, te) = part.target_cell().expect("non-discrete partition has a target cell");
        let mut children: Vec<u32> = part.order[ts..te].to_vec();
        children.sort_unstable();
        let mut explored: Vec<u32> = Vec::new();
        let mut orbits: Option<Orbits> = None;
        st.firsts.push(None);
        for w in children {
            if !explored.is_empty() && self.same_orbit_as_explored(w, &explored, &st.path, &mut orbits) {
                self.stats.pruned_by_orbit += 1;
                continue;
            }
            let mut child = part.clone();
            child.individualize(w, ts, te);
            let mut trace = vec![ts as u32];
            child.refine(self.g, &mut self.scratch, &mut trace);
            st.traces.push(trace);
            st.path.push(w);
            let generation = self.best_generation;
            let flow = self.visit(child, st, cmp);
            st.path.pop();
            st.traces.pop();
            explored.push(w);
            if self.best_generation != generation {
                // The new best leaf lies below this node.
                cmp = Cmp::Equal;
            }
            if let Flow::Jump(target) = flow {
                if target < depth {
                    st.firsts.pop();
                    return flow;
                }
            }
        }
        st.firsts.pop();
        Flow::Continue
    }

    fn leaf(&mut self, part: &Partition, st: &mut PathState, cmp: Cmp) -> Flow {
        self.stats.leaves += 1;
        let v = part.order.len();
        let w = self.words;
        let mut cert = vec![0u64; v * w];
        for (i, &u) in part.order.iter().enumerate() {
            let row = &mut cert[i * w..(i + 1) * w];
            for nb in iter_ones(self.g.neighbors(u as usize)) {
                let p = part.pos[nb] as usize;
                row[p / 64] |= 1 << (p % 64);
            }
        }
        let leaf = Rc::new(Leaf {
            traces: st.traces.clone(),
            path: st.path.clone(),
            order: part.order.clone(),
            cert,
        });

        let mut candidates: Vec<Rc<Leaf>> = Vec::new();
        for cand in st.firsts.iter().flatten().chain(self.best.iter()) {
            if !candidates.iter().any(|c| Rc::ptr_eq(c, cand)) {
                candidates.push(cand.clone());
            }
        }
        for cand in candidates {
            if cand.cert == leaf.cert && cand.traces == leaf.traces {
                let mut gamma = vec![0u32; v];
                for (p, &u) in leaf.order.iter().enumerate() {
                    gamma[u as usize] = cand.order[p];
                }
                if gamma.iter().enumerate().any(|(i, &x)| i as u32 != x) {
                    self.generators.push(gamma);
                }
                let common = leaf
                    .path
                    .iter()
                    .zip(&cand.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                self.stats.jumps += 1;
                return Flow::Jump(common);
            }
        }

        let better = match &self.best {
            None => true,
            Some(best) => cmp == Cmp::Better || (leaf.traces == best.traces && leaf.cert < best.cert),
        };
        if better {
            self.best = Some(leaf.clone());
            self.best_generation += 1;
        }
        for slot in st.firsts.iter_mut() {
            if slot.is_none() {
                *slot = Some(leaf.clone());
            }
        }
        Flow::Continue
    }

    fn same_orbit_as_explored(
        &mut self,
        w: u32,
        explored: &[u32],
        prefix: &[u32],
        orbits: &mut Option<Orbits>,
    ) -> bool {
        if self.generators.is_empty() {
            return false;
        }
        let v = self.g.vertex_count();
        let orb = orbits.get_or_insert_with(|| Orbits {
            parent: (0..v as u32).collect(),
            seen_generators: 0,
        });
        if orb.seen_generators < self.generators.len() {
            for gen in &self.generators[orb.seen_generators..] {
                if prefix.iter().all(|&p| gen[p as usize] == p) {
                    for (i, &x) in gen.iter().enumerate() {
                        orb.union(i as u32, x);
                    }
                }
            }
            orb.seen_generators = self.generators.len();
        }
        let rw = orb.find(w);
        explored.iter().any(|&e| orb.find(e) == rw)
    }
}
