//! Stallings graphs of finitely generated subgroups.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Names used for the letters of a subgroup basis, in order.
pub const BASIS_NAMES: &str = "xyzwvutsrqponmlkjihgfedcba";

pub fn basis_letter(i: usize) -> char {
    BASIS_NAMES.as_bytes()[i] as char
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub gen: char,
    pub dst: usize,
}

/// A folded core graph with basepoint `0`. Vertices are numbered in
/// breadth-first order from the basepoint, exploring letters in letter
/// order, so two graphs of the same subgroup are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StallingsGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    // (letter read, endpoint, edge index), sorted by letter
    adj: Vec<Vec<(Letter, usize, usize)>>,
}

#[derive(Debug, Clone)]
struct RawEdge {
    s: usize,
    t: usize,
    gen: Letter,
    label: Word,
    alive: bool,
}

struct Folder {
    inc: Vec<Vec<usize>>,
    alive: Vec<bool>,
    edges: Vec<RawEdge>,
    base: usize,
    labeled: bool,
}

impl Folder {
    fn new(vertex_count: usize, base: usize, labeled: bool) -> Folder {
        Folder {
            inc: vec![Vec::new(); vertex_count],
            alive: vec![true; vertex_count],
            edges: Vec::new(),
            base,
            labeled,
        }
    }

    fn add_vertex(&mut self) -> usize {
        self.inc.push(Vec::new());
        self.alive.push(true);
        self.inc.len() - 1
    }

    fn add_edge(&mut self, s: usize, l: Letter, t: usize, label: Word) {
        let (s, t, gen, label) = if l.is_inverse() {
            (t, s, l.inverse(), label.inverse())
        } else {
            (s, t, l, label)
        };
        let id = self.edges.len();
        self.edges.push(RawEdge {
            s,
            t,
            gen,
            label,
            alive: true,
        });
        self.inc[s].push(id);
        if t != s {
            self.inc[t].push(id);
        }
    }

    fn live_incident(&mut self, v: usize) -> Vec<usize> {
        let edges = &self.edges;
        let list = &mut self.inc[v];
        list.retain(|&e| edges[e].alive);
        list.sort_unstable();
        list.dedup();
        list.clone()
    }

    /// Half-edges at `v`: (letter read leaving v, far endpoint, edge, path label).
    fn half_edges(&mut self, v: usize) -> Vec<(Letter, usize, usize, Word)> {
        let mut out = Vec::new();
        for e in self.live_incident(v) {
            let r = &self.edges[e];
            if r.s == v {
                out.push((r.gen, r.t, e, r.label.clone()));
            }
            if r.t == v {
                out.push((r.gen.inverse(), r.s, e, r.label.inverse()));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0).then(a.2.cmp(&b.2)));
        out
    }

    fn gauge(&mut self, d: usize, g: &Word) {
        if g.is_identity() {
            return;
        }
        let gi = g.inverse();
        for e in self.live_incident(d) {
            let r = &mut self.edges[e];
            if r.t == d {
                r.label = &r.label * g;
            }
            if r.s == d {
                r.label = &gi * &r.label;
            }
        }
    }

    fn merge(&mut self, d: usize, k: usize) {
        for e in self.live_incident(d) {
            let r = &mut self.edges[e];
            if r.s == d {
                r.s = k;
            }
            if r.t == d {
                r.t = k;
            }
            self.inc[k].push(e);
        }
        self.inc[d].clear();
        self.alive[d] = false;
    }

    fn fold(&mut self) -> Result<()> {
        let mut work: VecDeque<usize> = (0..self.inc.len()).collect();
        while let Some(v) = work.pop_front() {
            if !self.alive[v] {
                continue;
            }
            let halves = self.half_edges(v);
            let clash = halves
                .windows(2)
                .find(|p| p[0].0 == p[1].0)
                .map(|p| (p[0].clone(), p[1].clone()));
            let Some(((_, o1, _, p1), (_, o2, e2, p2))) = clash else {
                continue;
            };
            if o1 == o2 {
                if self.labeled && p1 != p2 {
                    return Err(Error::NotFree);
                }
                self.edges[e2].alive = false;
            } else {
                let (d, k) = if o2 == self.base { (o1, o2) } else { (o2, o1) };
                if self.labeled {
                    let g = if d == o2 {
                        &p2.inverse() * &p1
                    } else {
                        &p1.inverse() * &p2
                    };
                    self.gauge(d, &g);
                }
                self.merge(d, k);
                work.push_back(k);
            }
            work.push_back(v);
        }
        Ok(())
    }

    fn trim(&mut self) {
        let n = self.inc.len();
        let mut degree = vec![0usize; n];
        for r in self.edges.iter().filter(|r| r.alive) {
            degree[r.s] += 1;
            degree[r.t] += 1;
        }
        let mut queue: Vec<usize> = (0..n)
            .filter(|&v| self.alive[v] && v != self.base && degree[v] <= 1)
            .collect();
        while let Some(v) = queue.pop() {
            if !self.alive[v] {
                continue;
            }
            for e in self.live_incident(v) {
                let r = &mut self.edges[e];
                r.alive = false;
                let other = if r.s == v { r.t } else { r.s };
                degree[r.s] -= 1;
                degree[r.t] -= 1;
                if other != self.base && degree[other] <= 1 {
                    queue.push(other);
                }
            }
            self.alive[v] = false;
        }
    }

    fn finish(mut self) -> (StallingsGraph, Vec<Word>) {
        let n = self.inc.len();
        let mut order = vec![usize::MAX; n];
        let mut queue = VecDeque::from([self.base]);
        order[self.base] = 0;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for (_, o, _, _) in self.half_edges(v) {
                if order[o] == usize::MAX {
                    order[o] = count;
                    count += 1;
                    queue.push_back(o);
                }
            }
        }
        let mut labeled_edges: Vec<(Edge, Word)> = self
            .edges
            .iter()
            .filter(|r| r.alive)
            .map(|r| {
                (
                    Edge {
                        src: order[r.s],
                        gen: r.gen.generator(),
                        dst: order[r.t],
                    },
                    r.label.clone(),
                )
            })
            .collect();
        labeled_edges.sort_by_key(|e| e.0);
        let (edges, labels): (Vec<Edge>, Vec<Word>) = labeled_edges.into_iter().unzip();
        (StallingsGraph::from_canonical(count, edges), labels)
    }
}

impl StallingsGraph {
    fn from_canonical(vertex_count: usize, edges: Vec<Edge>) -> StallingsGraph {
        let mut adj = vec![Vec::new(); vertex_count];
        for (i, e) in edges.iter().enumerate() {
            let l = Letter::positive(e.gen);
            adj[e.src].push((l, e.dst, i));
            adj[e.dst].push((l.inverse(), e.src, i));
        }
        for list in &mut adj {
            list.sort();
        }
        StallingsGraph {
            vertex_count,
            edges,
            adj,
        }
    }

    /// The folded core graph of `⟨gens⟩`.
    pub fn from_generators(gens: &[Word]) -> StallingsGraph {
        let mut f = Folder::new(1, 0, false);
        for g in gens {
            add_petal(&mut f, g, Word::identity());
        }
        f.fold().expect("unlabeled folding cannot fail");
        f.trim();
        f.finish().0
    }

    /// Fold and trim an arbitrary based graph given as directed edges.
    pub fn from_edges(vertex_count: usize, base: usize, edges: &[(usize, Letter, usize)]) -> StallingsGraph {
        let mut f = Folder::new(vertex_count, base, false);
        for &(s, l, t) in edges {
            f.add_edge(s, l, t, Word::identity());
        }
        f.fold().expect("unlabeled folding cannot fail");
        f.trim();
        f.finish().0
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn basepoint(&self) -> usize {
        0
    }

    /// Follow the letter `l` out of `v`.
    pub fn step(&self, v: usize, l: Letter) -> Option<usize> {
        self.adj[v]
            .binary_search_by(|probe| probe.0.cmp(&l))
            .ok()
            .map(|i| self.adj[v][i].1)
    }

    /// Endpoint of the path reading `w` from the basepoint.
    pub fn read(&self, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(0, |v, &l| self.step(v, l))
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.read(w) == Some(0)
    }

    pub fn rank(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertex_count)
    }

    pub fn radius(&self) -> usize {
        self.distances().into_iter().max().unwrap_or(0)
    }

    pub fn rank_and_radius(&self) -> (usize, usize) {
        (self.rank(), self.radius())
    }

    fn distances(&self) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count];
        dist[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &(_, o, _) in &self.adj[v] {
                if dist[o] == usize::MAX {
                    dist[o] = dist[v] + 1;
                    queue.push_back(o);
                }
            }
        }
        dist
    }

    /// Breadth-first spanning tree: the word read along the tree from the
    /// basepoint to each vertex, and which edges belong to the tree.
    fn spanning_tree(&self) -> (Vec<Word>, Vec<bool>) {
        let mut path = vec![None; self.vertex_count];
        let mut in_tree = vec![false; self.edges.len()];
        path[0] = Some(Word::identity());
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &(l, o, e) in &self.adj[v] {
                if path[o].is_none() {
                    let p = path[v].as_ref().expect("visited") * &Word::letter(l);
                    path[o] = Some(p);
                    in_tree[e] = true;
                    queue.push_back(o);
                }
            }
        }
        (path.into_iter().map(|p| p.expect("connected")).collect(), in_tree)
    }

    /// Schreier basis from the breadth-first tree, sorted ShortLex.
    pub fn canonical_basis(&self) -> SubgroupBasis {
        let (path, in_tree) = self.spanning_tree();
        let mut gens: Vec<(Word, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !in_tree[*i])
            .map(|(i, e)| {
                let g = &(&path[e.src] * &Word::generator(e.gen)) * &path[e.dst].inverse();
                (g, i)
            })
            .collect();
        gens.sort();
        let mut labels = vec![Word::identity(); self.edges.len()];
        for (k, (_, i)) in gens.iter().enumerate() {
            labels[*i] = Word::generator(basis_letter(k));
        }
        SubgroupBasis {
            generators: gens.into_iter().map(|(g, _)| g).collect(),
            graph: self.clone(),
            labels,
        }
    }

    /// One line per edge `v_i --g--> v_j`, after a basepoint line.
    pub fn dump(&self) -> String {
        let mut s = String::from("basepoint v0\n");
        for e in &self.edges {
            let _ = writeln!(s, "v{} --{}--> v{}", e.src, e.gen, e.dst);
        }
        s
    }
}

fn add_petal(f: &mut Folder, g: &Word, label: Word) {
    let letters = g.letters();
    if letters.is_empty() {
        return;
    }
    let mut v = f.base;
    for (i, &l) in letters.iter().enumerate() {
        let t = if i + 1 == letters.len() {
            f.base
        } else {
            f.add_vertex()
        };
        let lab = if i == 0 { label.clone() } else { Word::identity() };
        f.add_edge(v, l, t, lab);
        v = t;
    }
}

/// A free basis of a subgroup, with the folded graph labeled so that every
/// closed path at the basepoint reads its expression in the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgroupBasis {
    generators: Vec<Word>,
    graph: StallingsGraph,
    labels: Vec<Word>,
}

impl SubgroupBasis {
    /// Errors with [`Error::NotFree`] unless `gens` are freely independent.
    pub fn new(gens: &[Word]) -> Result<SubgroupBasis> {
        if gens.len() > BASIS_NAMES.len() {
            return Err(Error::InvalidParameters("too many generators".into()));
        }
        let mut f = Folder::new(1, 0, true);
        for (i, g) in gens.iter().enumerate() {
            if g.is_identity() {
                return Err(Error::NotFree);
            }
            add_petal(&mut f, g, Word::generator(basis_letter(i)));
        }
        f.fold()?;
        f.trim();
        let (graph, labels) = f.finish();
        if graph.rank() != gens.len() {
            return Err(Error::NotFree);
        }
        Ok(SubgroupBasis {
            generators: gens.to_vec(),
            graph,
            labels,
        })
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn graph(&self) -> &StallingsGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// The unique word in the basis letters that evaluates to `w`.
    pub fn express(&self, w: &Word) -> Result<Word> {
        let mut v = 0;
        let mut stack: Vec<Letter> = Vec::new();
        for &l in w.letters() {
            let adj = &self.graph.adj[v];
            let i = adj
                .binary_search_by(|probe| probe.0.cmp(&l))
                .map_err(|_| Error::NotInSubgroup(w.clone()))?;
            let (_, o, e) = adj[i];
            let label = &self.labels[e];
            if l.is_inverse() {
                for &m in label.letters().iter().rev() {
                    push(&mut stack, m.inverse());
                }
            } else {
                for &m in label.letters() {
                    push(&mut stack, m);
                }
            }
            v = o;
        }
        if v != 0 {
            return Err(Error::NotInSubgroup(w.clone()));
        }
        Ok(Word::from_letters(stack))
    }

    /// Evaluate a word in the basis letters.
    pub fn evaluate(&self, omega: &Word) -> Word {
        omega.substitute(|c| {
            BASIS_NAMES
                .find(c)
                .and_then(|i| self.generators.get(i))
        })
    }
}

fn push(stack: &mut Vec<Letter>, l: Letter) {
    if stack.last() == Some(&l.inverse()) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

pub fn build_subgroup_graph(gens: &[Word]) -> StallingsGraph {
    StallingsGraph::from_generators(gens)
}

pub fn membership(g: &StallingsGraph, w: &Word) -> bool {
    g.contains(w)
}

pub fn rank_and_radius(g: &StallingsGraph) -> (usize, usize) {
    g.rank_and_radius()
}

pub fn canonical_basis(g: &StallingsGraph) -> SubgroupBasis {
    g.canonical_basis()
}

pub fn express_in_basis(basis: &SubgroupBasis, w: &Word) -> Result<Word> {
    basis.express(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn graph(gens: &[&str]) -> StallingsGraph {
        StallingsGraph::from_generators(&gens.iter().map(|s| w(s)).collect::<Vec<_>>())
    }

    #[test]
    fn build_examples() {
        let g = graph(&["a", "b"]);
        assert_eq!((g.vertex_count(), g.edges().len()), (1, 2));
        assert_eq!(g.rank_and_radius(), (2, 0));

        let g = graph(&["aa"]);
        assert_eq!((g.vertex_count(), g.edges().len()), (2, 2));
        assert_eq!(g.rank_and_radius(), (1, 1));

        let g = graph(&["ab", "b"]);
        assert_eq!(g, graph(&["a", "b"]));
        assert_eq!(g.rank_and_radius(), (2, 0));
        assert!(g.contains(&w("a")));
        assert_eq!(graph(&[]).vertex_count(), 1);
    }

    #[test]
    fn membership_examples() {
        let g = graph(&["aa"]);
        assert!(g.contains(&w("aaaa")));
        assert!(!g.contains(&w("a")));
        assert!(g.contains(&Word::identity()));
    }

    #[test]
    fn dump_format() {
        assert_eq!(
            graph(&["aa"]).dump(),
            "basepoint v0\nv0 --a--> v1\nv1 --a--> v0\n"
        );
    }

    #[test]
    fn trimming_keeps_basepoint() {
        let g = graph(&["Aba"]);
        assert_eq!(g.rank(), 1);
        assert_eq!(g.vertex_count(), 2);
        assert!(g.contains(&w("AbBBa")));
    }

    #[test]
    fn canonical_basis_examples() {
        let b = graph(&["a", "b"]).canonical_basis();
        assert_eq!(b.generators(), &[w("a"), w("b")]);
        let b = graph(&["b", "a"]).canonical_basis();
        assert_eq!(b.generators(), &[w("a"), w("b")]);
        let b = graph(&["ab", "ba"]).canonical_basis();
        assert_eq!(b.generators(), &[w("ab"), w("ba")]);
    }

    #[test]
    fn express_examples() {
        let b = SubgroupBasis::new(&[w("aa"), w("b")]).unwrap();
        assert_eq!(b.express(&w("aab")).unwrap(), w("xy"));
        let b = SubgroupBasis::new(&[w("a"), w("b")]).unwrap();
        assert_eq!(b.express(&w("ABab")).unwrap(), w("XYxy"));
        let b = SubgroupBasis::new(&[w("ab"), w("b")]).unwrap();
        assert_eq!(b.express(&w("a")).unwrap(), w("xY"));
        assert_eq!(
            SubgroupBasis::new(&[w("aa"), w("b")]).unwrap().express(&w("a")),
            Err(Error::NotInSubgroup(w("a")))
        );
    }

    #[test]
    fn dependent_generators_rejected() {
        assert_eq!(SubgroupBasis::new(&[w("a"), w("aa")]), Err(Error::NotFree));
        assert_eq!(SubgroupBasis::new(&[w("ab"), w("ab")]), Err(Error::NotFree));
        assert_eq!(
            SubgroupBasis::new(&[w("a"), w("b"), w("ab")]),
            Err(Error::NotFree)
        );
        assert_eq!(SubgroupBasis::new(&[Word::identity()]), Err(Error::NotFree));
    }

    #[test]
    fn canonical_basis_expresses() {
        let g = graph(&["aab", "bab", "Ba"]);
        let basis = g.canonical_basis();
        for x in basis.generators() {
            assert!(g.contains(x));
        }
        let probe = w("aabBaBa");
        let omega = basis.express(&probe).unwrap();
        assert_eq!(basis.evaluate(&omega), probe);
    }
}
