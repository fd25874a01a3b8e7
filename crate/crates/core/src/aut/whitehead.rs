//! Whitehead minimization, orbit search and stabilizers of words in `F(x,y)`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use super::AutF2;
use crate::error::{Error, Result};
use crate::word::Word;

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// The 7 non-trivial signed permutations followed by the 12 type-2 moves.
pub fn whitehead_moves() -> &'static [AutF2] {
    static MOVES: OnceLock<Vec<AutF2>> = OnceLock::new();
    MOVES.get_or_init(|| {
        let w = |s: &str| Word::parse(s).expect("literal");
        let mut out = Vec::with_capacity(19);
        for (x, y) in [
            ("x", "Y"),
            ("X", "y"),
            ("X", "Y"),
            ("y", "x"),
            ("y", "X"),
            ("Y", "x"),
            ("Y", "X"),
        ] {
            out.push(AutF2::from_images(w(x), w(y)));
        }
        for a in ["x", "X", "y", "Y"] {
            let a = w(a);
            let fixed_is_x = a.letters()[0].generator() == 'x';
            let z = Word::generator(if fixed_is_x { 'y' } else { 'x' });
            let ai = a.inverse();
            for img in [&z * &a, &ai * &z, &(&ai * &z) * &a] {
                let aut = if fixed_is_x {
                    AutF2::from_images(Word::generator('x'), img)
                } else {
                    AutF2::from_images(img, Word::generator('y'))
                };
                out.push(aut);
            }
        }
        out
    })
}

/// A cyclically reduced word of least length in the orbit, with an
/// automorphism carrying the input onto it exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimized {
    pub word: Word,
    pub aut: AutF2,
    pub steps: Vec<AutF2>,
}

/// `φ` followed by the inner automorphism that cyclically reduces the image.
fn reduced_image(phi: &AutF2, w: &Word) -> (Word, AutF2) {
    let v = phi.apply(w);
    let (core, c) = v.cyclic_reduce();
    let inner = AutF2::inner(&c.inverse());
    (core, inner.compose(phi))
}

pub fn whitehead_minimize(w: &Word) -> Minimized {
    let (mut cur, c) = w.cyclic_reduce();
    let first = AutF2::inner(&c.inverse());
    let mut aut = first.clone();
    let mut steps = vec![first];
    loop {
        let mut best: Option<(Word, AutF2)> = None;
        for phi in whitehead_moves() {
            let (v, e) = reduced_image(phi, &cur);
            if v.len() < cur.len() && best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, e));
            }
        }
        let Some((v, e)) = best else { break };
        aut = e.compose(&aut);
        steps.push(e);
        cur = v;
    }
    Minimized {
        word: cur,
        aut,
        steps,
    }
}

fn letter_to_x(letter: &Word) -> AutF2 {
    let img = match letter.to_string().as_str() {
        "x" => ("x", "y"),
        "X" => ("X", "y"),
        "y" => ("y", "x"),
        _ => ("y", "X"),
    };
    AutF2::from_images(
        Word::parse(img.0).expect("literal"),
        Word::parse(img.1).expect("literal"),
    )
}

/// An automorphism sending `w` to `x`, if `w` is primitive.
pub fn is_primitive(w: &Word) -> Option<AutF2> {
    let m = whitehead_minimize(w);
    if m.word.len() != 1 {
        return None;
    }
    let alpha = letter_to_x(&m.word).compose(&m.aut);
    debug_assert_eq!(alpha.apply(w), Word::generator('x'));
    Some(alpha)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitResult {
    Found(AutF2),
    NotInOrbit,
    CapExceeded,
}

impl OrbitResult {
    pub fn is_found(&self) -> bool {
        matches!(self, OrbitResult::Found(_))
    }
}

#[derive(Debug, Clone)]
struct State {
    word: Word,
    parent: Option<(usize, u8)>,
}

/// The graph of least-length cyclic words in the orbit of a word, joined by
/// Whitehead moves. States are least rotations.
#[derive(Debug, Clone)]
pub struct LevelSet {
    start: Word,
    mu: AutF2,
    states: Vec<State>,
    index: HashMap<Word, usize>,
    complete: bool,
    extra: usize,
}

/// Least rotation of a cyclically reduced word and the inner automorphism
/// realizing it.
fn normalize_rotation(core: &Word) -> (Word, AutF2) {
    let (rot, k) = core.least_rotation();
    let p = Word::from_letters(core.letters()[..k].iter().copied());
    (rot, AutF2::inner(&p))
}

impl LevelSet {
    pub fn explore(w: &Word, cap: usize) -> LevelSet {
        LevelSet::explore_ball(w, 0, cap, |_| false).0
    }

    /// Breadth-first search over cyclic words in the orbit of `w` of length
    /// at most the minimum plus `extra`, stopping at the first state that
    /// satisfies `accept`. Only `extra = 0` yields a level set suitable for
    /// [`LevelSet::stabilizer`].
    pub fn explore_ball<F>(w: &Word, extra: usize, cap: usize, mut accept: F) -> (LevelSet, Option<usize>)
    where
        F: FnMut(&Word) -> bool,
    {
        let m = whitehead_minimize(w);
        let (r0, rot) = normalize_rotation(&m.word);
        let mu = rot.compose(&m.aut);
        let bound = r0.len() + extra;
        let mut ls = LevelSet {
            start: w.clone(),
            mu,
            states: vec![State {
                word: r0.clone(),
                parent: None,
            }],
            index: HashMap::from([(r0.clone(), 0)]),
            complete: true,
            extra,
        };
        if accept(&r0) {
            return (ls, Some(0));
        }
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for k in 0..whitehead_moves().len() {
                let v = ls.edge_word(i, k);
                if v.len() > bound || ls.index.contains_key(&v) {
                    continue;
                }
                if ls.states.len() >= cap {
                    ls.complete = false;
                    return (ls, None);
                }
                let j = ls.states.len();
                ls.index.insert(v.clone(), j);
                let hit = accept(&v);
                ls.states.push(State {
                    word: v,
                    parent: Some((i, k as u8)),
                });
                if hit {
                    return (ls, Some(j));
                }
                queue.push_back(j);
            }
        }
        (ls, None)
    }

    /// The word of state `i`.
    pub fn word(&self, i: usize) -> &Word {
        &self.states[i].word
    }

    /// Automorphism carrying the start word exactly onto state `i`.
    pub fn aut_to(&self, i: usize) -> AutF2 {
        self.path_aut(i).compose(&self.mu)
    }

    fn edge_word(&self, i: usize, k: usize) -> Word {
        let v = whitehead_moves()[k].apply(&self.states[i].word);
        v.cyclic_reduce().0.least_rotation().0
    }

    /// Image state of move `k` at state `i`, with the exact automorphism.
    fn edge(&self, i: usize, k: usize) -> (Word, AutF2) {
        let (core, e) = reduced_image(&whitehead_moves()[k], &self.states[i].word);
        let (rot, inner) = normalize_rotation(&core);
        (rot, inner.compose(&e))
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn start(&self) -> &Word {
        &self.start
    }

    pub fn minimal_length(&self) -> usize {
        self.states[0].word.len()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.states.iter().map(|s| &s.word)
    }

    /// `mu(start) = ` the first state.
    pub fn normalizer(&self) -> &AutF2 {
        &self.mu
    }

    /// Automorphism carrying the first state to state `i`.
    fn path_aut(&self, i: usize) -> AutF2 {
        let mut chain = Vec::new();
        let mut cur = i;
        while let Some((p, k)) = self.states[cur].parent {
            chain.push((p, k as usize));
            cur = p;
        }
        chain
            .iter()
            .rev()
            .fold(AutF2::identity(), |acc, &(p, k)| self.edge(p, k).1.compose(&acc))
    }

    /// An automorphism `α` with `α(start) = target`.
    pub fn find(&self, target: &Word) -> OrbitResult {
        let m = whitehead_minimize(target);
        if m.word.len() != self.minimal_length() {
            return OrbitResult::NotInOrbit;
        }
        let (r, rot) = normalize_rotation(&m.word);
        let Some(&i) = self.index.get(&r) else {
            return if self.complete {
                OrbitResult::NotInOrbit
            } else {
                OrbitResult::CapExceeded
            };
        };
        let back = rot.compose(&m.aut).inverse();
        let alpha = back.compose(&self.path_aut(i)).compose(&self.mu);
        assert_eq!(alpha.apply(&self.start), *target, "orbit automorphism check");
        OrbitResult::Found(alpha)
    }

    /// Generators of `{α : α(start) = start}`: the loops of the level set
    /// together with conjugation by the start word.
    pub fn stabilizer(&self) -> Result<Vec<AutF2>> {
        if self.extra != 0 {
            return Err(Error::Invariant("stabilizer needs a level set".into()));
        }
        if !self.complete {
            return Err(Error::BudgetExhausted(format!(
                "level set of {} exceeds the orbit cap",
                self.start
            )));
        }
        let paths: Vec<AutF2> = (0..self.states.len()).map(|i| self.path_aut(i)).collect();
        let inverses: Vec<AutF2> = paths.iter().map(AutF2::inverse).collect();
        let mu_inv = self.mu.inverse();
        let mut gens = BTreeSet::new();
        for (i, path) in paths.iter().enumerate() {
            for k in 0..whitehead_moves().len() {
                let Some(&j) = self.index.get(&self.edge_word(i, k)) else {
                    continue;
                };
                if self.states[j].parent == Some((i, k as u8)) {
                    continue;
                }
                let e = self.edge(i, k).1;
                let lp = inverses[j].compose(&e).compose(path);
                let g = mu_inv.compose(&lp).compose(&self.mu);
                if !g.is_identity() {
                    gens.insert(g);
                }
            }
        }
        if !self.start.is_empty() {
            gens.insert(AutF2::inner(&self.start));
        }
        let gens: Vec<AutF2> = gens.into_iter().collect();
        for g in &gens {
            if g.apply(&self.start) != self.start {
                return Err(Error::Invariant(format!("{g} does not fix {}", self.start)));
            }
        }
        Ok(gens)
    }
}

pub fn orbit_search(w1: &Word, w2: &Word, cap: usize) -> OrbitResult {
    LevelSet::explore(w1, cap).find(w2)
}

/// `α` with `α(w1) = w2`; errors if the orbit cap is exceeded.
pub fn orbit_automorphism(w1: &Word, w2: &Word) -> Result<Option<AutF2>> {
    match orbit_search(w1, w2, DEFAULT_ORBIT_CAP) {
        OrbitResult::Found(a) => Ok(Some(a)),
        OrbitResult::NotInOrbit => Ok(None),
        OrbitResult::CapExceeded => Err(Error::BudgetExhausted(format!(
            "orbit search from {w1} to {w2}"
        ))),
    }
}
