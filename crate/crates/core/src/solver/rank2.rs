//! Rank 2 solutions: terminal pairs, seeds and Δ-minimal representatives.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::aut::{AutF2, CanonicalGenerators, LevelSet, OrbitResult};
use crate::error::{Error, Result};
use crate::stallings::StallingsGraph;
use crate::word::{Letter, Word};

use super::{Budgets, EquationInstance};

pub type Pair = (Word, Word);

pub fn l_f(p: &Pair) -> usize {
    p.0.len() + p.1.len()
}

/// Sort key of a solution: total length, then ShortLex per coordinate.
pub fn pair_key(p: &Pair) -> (usize, &Word, &Word) {
    (l_f(p), &p.0, &p.1)
}

fn bell_bound(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for v in &row {
            let s = next.last().expect("nonempty").saturating_add(*v);
            next.push(s);
        }
        row = next;
    }
    row[0]
}

fn quotient_graph(u: &[Letter], blocks: &[usize]) -> StallingsGraph {
    let n = u.len();
    let count = blocks.iter().max().map_or(1, |m| m + 1);
    let edges: Vec<(usize, Letter, usize)> = (0..n)
        .map(|i| (blocks[i], u[i], blocks[(i + 1) % n]))
        .collect();
    StallingsGraph::from_edges(count, 0, &edges)
}

fn extend_partitions(u: &[Letter], blocks: &mut Vec<usize>, max: usize, out: &mut HashSet<StallingsGraph>) {
    if blocks.len() == u.len() {
        let g = quotient_graph(u, blocks);
        if g.rank() == 2 {
            out.insert(g);
        }
        return;
    }
    for b in 0..=max + 1 {
        blocks.push(b);
        extend_partitions(u, blocks, max.max(b), out);
        blocks.pop();
    }
}

/// Folded graphs of rank 2 obtained as quotients of the closed path of `u`.
/// Every rank 2 subgroup whose graph is traced by `u` arises this way.
pub fn terminal_graphs(u: &Word, partition_cap: u128) -> Result<Vec<StallingsGraph>> {
    let letters = u.letters();
    let n = letters.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if bell_bound(n) > partition_cap {
        return Err(Error::BudgetExhausted(format!(
            "{} partitions of a closed path of length {n} exceed the cap {partition_cap}",
            bell_bound(n)
        )));
    }
    let depth = n.min(5);
    let mut prefixes = vec![vec![0usize]];
    for _ in 1..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                let m = *p.iter().max().expect("nonempty");
                (0..=m + 1).map(move |b| {
                    let mut q = p.clone();
                    q.push(b);
                    q
                })
            })
            .collect();
    }
    let found: HashSet<StallingsGraph> = prefixes
        .into_par_iter()
        .map(|mut p| {
            let mut out = HashSet::new();
            let max = *p.iter().max().expect("nonempty");
            extend_partitions(letters, &mut p, max, &mut out);
            out
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut graphs: Vec<StallingsGraph> = found.into_iter().collect();
    graphs.sort_by_cached_key(|g| {
        let b = g.canonical_basis();
        (b.generators()[0].clone(), b.generators()[1].clone())
    });
    Ok(graphs)
}

/// A rank 2 solution obtained from a terminal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub terminal_pair: Pair,
    pub terminal_word: Word,
    pub aut: AutF2,
    pub solution: Pair,
}

pub fn seeds(eq: &EquationInstance, level: &LevelSet, budgets: &Budgets) -> Result<Vec<Seed>> {
    let mut out = Vec::new();
    for g in terminal_graphs(&eq.u, budgets.partition_cap)? {
        let basis = g.canonical_basis();
        let tp = (basis.generators()[0].clone(), basis.generators()[1].clone());
        let tw = basis.express(&eq.u)?;
        match level.find(&tw) {
            OrbitResult::Found(aut) => {
                let solution = aut.act(&tp.0, &tp.1);
                if !eq.is_solution(&solution.0, &solution.1) {
                    return Err(Error::Invariant(format!(
                        "seed ({}, {}) is not a solution",
                        solution.0, solution.1
                    )));
                }
                out.push(Seed {
                    terminal_pair: tp,
                    terminal_word: tw,
                    aut,
                    solution,
                });
            }
            OrbitResult::NotInOrbit => {}
            OrbitResult::CapExceeded => {
                return Err(Error::Unresolved(format!(
                    "orbit search for terminal word {tw} exceeded the cap"
                )))
            }
        }
    }
    Ok(out)
}

fn in_ball(p: &Pair, r: usize) -> bool {
    p.0.len() <= r && p.1.len() <= r
}

/// Breadth-first closure of `start` under `gens`, staying in the ball of
/// radius `r` per coordinate.
pub fn closure(
    eq: &EquationInstance,
    start: &[Pair],
    gens: &[AutF2],
    r: usize,
    cap: usize,
) -> Result<Vec<Pair>> {
    let mut seen: HashSet<Pair> = HashSet::new();
    let mut queue = VecDeque::new();
    for s in start {
        if in_ball(s, r) && seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.act(&p.0, &p.1);
            if !in_ball(&q, r) || seen.contains(&q) {
                continue;
            }
            if !eq.is_solution(&q.0, &q.1) {
                return Err(Error::Invariant(format!(
                    "{g} maps a solution to ({}, {})",
                    q.0, q.1
                )));
            }
            if seen.len() >= cap {
                return Err(Error::Unresolved(format!(
                    "solution closure exceeds {cap} pairs at radius {r}"
                )));
            }
            seen.insert(q.clone());
            queue.push_back(q);
        }
    }
    let mut out: Vec<Pair> = seen.into_iter().collect();
    out.sort_by(|a, b| pair_key(a).cmp(&pair_key(b)));
    Ok(out)
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// One least representative per class of `pairs` under the relation
/// generated by `gens` (within `pairs`).
pub fn representatives(pairs: &[Pair], gens: &[AutF2]) -> Vec<Pair> {
    let index: HashMap<&Pair, usize> = pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    for (i, p) in pairs.iter().enumerate() {
        for g in gens {
            if let Some(&j) = index.get(&g.act(&p.0, &p.1)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    // pairs are sorted, so the least index of a class is its least element
    let roots: BTreeSet<usize> = (0..pairs.len()).map(|i| find(&mut parent, i)).collect();
    roots.into_iter().map(|i| pairs[i].clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSolutions {
    pub solutions: Vec<Pair>,
    pub seeds: Vec<Seed>,
    pub radius: usize,
}

fn minimal_at(
    eq: &EquationInstance,
    seeds: &[Pair],
    stab: &[AutF2],
    delta: &[AutF2],
    r: usize,
    cap: usize,
) -> Result<Vec<Pair>> {
    let all = closure(eq, seeds, stab, r, cap)?;
    Ok(representatives(&all, delta))
}

/// Δ-minimal rank 2 solutions: seeds from terminal pairs, closed under the
/// stabilizer of `w`, then reduced to one least pair per Δ-class.
pub fn minimal_rank2_solutions(
    eq: &EquationInstance,
    level: &LevelSet,
    generators: &CanonicalGenerators,
    budgets: &Budgets,
) -> Result<MinimalSolutions> {
    let seeds = seeds(eq, level, budgets)?;
    let seed_pairs: Vec<Pair> = seeds.iter().map(|s| s.solution.clone()).collect();
    let mut stab = level.stabilizer()?;
    stab.extend(stab.iter().map(AutF2::inverse).collect::<Vec<_>>());
    stab.sort();
    stab.dedup();
    let delta = generators.with_inverses();
    let max_seed = seed_pairs
        .iter()
        .map(|p| p.0.len().max(p.1.len()))
        .max()
        .unwrap_or(0);
    let mut r = budgets
        .ball
        .unwrap_or(2 * eq.u.len() + 4)
        .max(max_seed);
    for _ in 0..=budgets.widen_retries {
        let inner = minimal_at(eq, &seed_pairs, &stab, &delta, r, budgets.closure_cap)?;
        let outer = minimal_at(eq, &seed_pairs, &stab, &delta, r + eq.u.len(), budgets.closure_cap)?;
        if inner == outer {
            return Ok(MinimalSolutions {
                solutions: inner,
                seeds,
                radius: r,
            });
        }
        r *= 2;
    }
    Err(Error::Unresolved(format!(
        "Δ-minimal set did not stabilize up to radius {r}"
    )))
}
