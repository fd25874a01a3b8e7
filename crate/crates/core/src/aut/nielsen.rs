//! Elementary Nielsen moves on generating pairs and terminal data.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::AutF2;
use crate::error::{Error, Result};
use crate::stallings::{StallingsGraph, SubgroupBasis};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    First,
    Second,
}

/// `f1 ↦ (f1^ε1 f2^ε2)^ε3` on the chosen side, the other entry fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NielsenMove {
    pub side: Side,
    pub e1: i8,
    pub e2: i8,
    pub e3: i8,
}

impl NielsenMove {
    pub fn new(side: Side, e1: i8, e2: i8, e3: i8) -> Result<NielsenMove> {
        let ok = e1.abs() == 1 && e3.abs() == 1 && e2.abs() <= 1;
        if !ok {
            return Err(Error::InvalidParameters(format!(
                "illegal Nielsen move exponents ({e1},{e2},{e3})"
            )));
        }
        Ok(NielsenMove { side, e1, e2, e3 })
    }

    /// Every move that changes the pair, inversion listed once per side.
    pub fn all() -> Vec<NielsenMove> {
        let mut out = Vec::with_capacity(18);
        for side in [Side::First, Side::Second] {
            for e1 in [1, -1] {
                for e2 in [1, -1] {
                    for e3 in [1, -1] {
                        out.push(NielsenMove { side, e1, e2, e3 });
                    }
                }
            }
            out.push(NielsenMove {
                side,
                e1: -1,
                e2: 0,
                e3: 1,
            });
        }
        out
    }

    /// Four moves exchanging the two entries.
    pub fn swap() -> [NielsenMove; 4] {
        [
            NielsenMove { side: Side::Second, e1: 1, e2: 1, e3: 1 },
            NielsenMove { side: Side::First, e1: 1, e2: -1, e3: 1 },
            NielsenMove { side: Side::Second, e1: -1, e2: -1, e3: -1 },
            NielsenMove { side: Side::First, e1: -1, e2: 0, e3: 1 },
        ]
    }

    /// The substitution on `F(x,y)` that performs this move on a pair.
    pub fn substitution(&self) -> AutF2 {
        let x = Word::generator('x');
        let y = Word::generator('y');
        match self.side {
            Side::First => {
                let img = (&x.pow(self.e1 as i64) * &y.pow(self.e2 as i64)).pow(self.e3 as i64);
                AutF2::from_images(img, y)
            }
            Side::Second => {
                let img = (&y.pow(self.e1 as i64) * &x.pow(self.e2 as i64)).pow(self.e3 as i64);
                AutF2::from_images(x, img)
            }
        }
    }

    /// The matching Nielsen transformation, carrying `w_j` to `w_{j+1}`.
    pub fn transformation(&self) -> AutF2 {
        self.substitution().inverse()
    }

    pub fn apply_pair(&self, f1: &Word, f2: &Word) -> (Word, Word) {
        let (a, b) = match self.side {
            Side::First => (f1, f2),
            Side::Second => (f2, f1),
        };
        let img = (&a.pow(self.e1 as i64) * &b.pow(self.e2 as i64)).pow(self.e3 as i64);
        match self.side {
            Side::First => (img, f2.clone()),
            Side::Second => (f1.clone(), img),
        }
    }
}

impl fmt::Display for NielsenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::First => "first",
            Side::Second => "second",
        };
        write!(f, "{side}({},{},{})", self.e1, self.e2, self.e3)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NielsenReduction {
    pub pair: (Word, Word),
    pub moves: Vec<NielsenMove>,
}

type Pair = (Word, Word);

fn total(p: &(Word, Word)) -> usize {
    p.0.len() + p.1.len()
}

fn pair_key(p: &(Word, Word)) -> (usize, &Word, &Word) {
    (total(p), &p.0, &p.1)
}

struct Run {
    f: (Word, Word),
    omega: (Word, Word),
    moves: Vec<NielsenMove>,
}

impl Run {
    fn push(&mut self, m: NielsenMove) {
        self.f = m.apply_pair(&self.f.0, &self.f.1);
        self.omega = m.apply_pair(&self.omega.0, &self.omega.1);
        self.moves.push(m);
    }
}

/// Best strictly shorter image of `p` under one move, ShortLex tie-break.
fn greedy_step(p: &(Word, Word)) -> Option<NielsenMove> {
    let mut best: Option<(NielsenMove, (Word, Word))> = None;
    for m in NielsenMove::all() {
        let q = m.apply_pair(&p.0, &p.1);
        if total(&q) < total(p)
            && best
                .as_ref()
                .is_none_or(|(_, b)| pair_key(&q) < pair_key(b))
        {
            best = Some((m, q));
        }
    }
    best.map(|(m, _)| m)
}

/// Moves leading from `start` to a strictly shorter pair through pairs of
/// total length at most `total(start) + slack`.
fn escape(start: &(Word, Word), slack: usize, cap: usize) -> Option<Vec<NielsenMove>> {
    let bound = total(start) + slack;
    let mut parent: HashMap<Pair, Option<(Pair, NielsenMove)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(p) = queue.pop_front() {
        for m in NielsenMove::all() {
            let q = m.apply_pair(&p.0, &p.1);
            if total(&q) > bound || parent.contains_key(&q) {
                continue;
            }
            parent.insert(q.clone(), Some((p.clone(), m)));
            if total(&q) < total(start) {
                let mut path = Vec::new();
                let mut cur = q;
                while let Some(Some((prev, mv))) = parent.get(&cur) {
                    path.push(*mv);
                    cur = prev.clone();
                }
                path.reverse();
                return Some(path);
            }
            if parent.len() >= cap {
                return None;
            }
            queue.push_back(q);
        }
    }
    None
}

/// Reduce `(g1, g2)` by elementary Nielsen moves to the canonical basis of
/// `⟨g1, g2⟩`, logging every move.
pub fn nielsen_reduce_pair(g1: &Word, g2: &Word) -> Result<NielsenReduction> {
    let basis = SubgroupBasis::new(&[g1.clone(), g2.clone()]).map_err(|_| {
        Error::RankTooLow(StallingsGraph::from_generators(&[g1.clone(), g2.clone()]).rank())
    })?;
    let target = basis.graph().canonical_basis();
    let omega = (target.express(g1)?, target.express(g2)?);
    let mut run = Run {
        f: (g1.clone(), g2.clone()),
        omega,
        moves: Vec::new(),
    };

    while let Some(m) = greedy_step(&run.f) {
        run.push(m);
    }

    while total(&run.omega) > 2 {
        if let Some(m) = greedy_step(&run.omega) {
            run.push(m);
            continue;
        }
        let path = [0, 2, 4, 8, 16]
            .into_iter()
            .find_map(|slack| escape(&run.omega, slack, 200_000))
            .ok_or_else(|| Error::Invariant("Nielsen reduction stalled".into()))?;
        for m in path {
            run.push(m);
        }
    }

    if run.omega.0.first().map(|l| l.generator()) == Some('y') {
        for m in NielsenMove::swap() {
            run.push(m);
        }
    }
    if run.omega.0.first().is_some_and(|l| l.is_inverse()) {
        run.push(NielsenMove { side: Side::First, e1: -1, e2: 0, e3: 1 });
    }
    if run.omega.1.first().is_some_and(|l| l.is_inverse()) {
        run.push(NielsenMove { side: Side::Second, e1: -1, e2: 0, e3: 1 });
    }

    let want = (target.generators()[0].clone(), target.generators()[1].clone());
    if run.f != want {
        return Err(Error::Invariant(format!(
            "Nielsen reduction ended at ({}, {}) instead of ({}, {})",
            run.f.0, run.f.1, want.0, want.1
        )));
    }
    Ok(NielsenReduction {
        pair: run.f,
        moves: run.moves,
    })
}

/// Terminal pair, terminal word and associated automorphism of a rank 2
/// solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalData {
    pub terminal_pair: (Word, Word),
    pub terminal_word: Word,
    pub associated_aut: AutF2,
    pub moves: Vec<NielsenMove>,
}

pub fn terminal_data(w: &Word, g1: &Word, g2: &Word, u: &Word) -> Result<TerminalData> {
    if w.evaluate(g1, g2) != *u {
        return Err(Error::NotASolution(g1.clone(), g2.clone()));
    }
    let red = nielsen_reduce_pair(g1, g2)?;
    let mut pair = (g1.clone(), g2.clone());
    let mut wj = w.clone();
    let mut alpha = AutF2::identity();
    for m in &red.moves {
        let t = m.transformation();
        pair = m.apply_pair(&pair.0, &pair.1);
        wj = t.apply(&wj);
        alpha = t.compose(&alpha);
        if wj.evaluate(&pair.0, &pair.1) != *u {
            return Err(Error::Invariant(format!(
                "u = w_j(x_j, y_j) broken after move {m}"
            )));
        }
    }
    let tp = SubgroupBasis::new(&[pair.0.clone(), pair.1.clone()])?;
    if alpha.apply(w) != wj || tp.express(u)? != wj {
        return Err(Error::Invariant("terminal word mismatch".into()));
    }
    Ok(TerminalData {
        terminal_pair: pair,
        terminal_word: wj,
        associated_aut: alpha,
        moves: red.moves,
    })
}
