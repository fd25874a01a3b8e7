#![allow(dead_code)]

//! Helpers shared by the integration tests, including naive oracles that
//! work on plain strings and share no code with the library.

use std::collections::{BTreeSet, HashSet, VecDeque};

use freeq::solver::EquationInstance;
use freeq::{Alphabet, Word};
use rand::Rng;

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn eq(w: &str, u: &str) -> EquationInstance {
    EquationInstance::parse("ab", w, u).unwrap()
}

pub fn ab() -> Alphabet {
    Alphabet::coefficients("ab").unwrap()
}

/// Instances with rank 2 solutions, one or more per splitting case.
pub const RANK2_SUITE: &[(&str, &str)] = &[
    ("xxyy", "aabb"),
    ("XYxy", "ABab"),
    ("xyXY", "abAB"),
    ("xYxy", "aBab"),
    ("xxyyy", "aabbb"),
    ("xxxyyy", "aaabbb"),
    ("xxyXY", "aabAB"),
    ("xyxYY", "abaBB"),
    ("xyyxYY", "abbaBB"),
];

pub fn random_word<R: Rng>(rng: &mut R, gens: &str, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    let chars: Vec<char> = gens.chars().flat_map(|c| [c, c.to_ascii_uppercase()]).collect();
    let s: String = (0..n).map(|_| chars[rng.gen_range(0..chars.len())]).collect();
    Word::parse(&s).unwrap()
}

pub fn inv_char(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

/// Free reduction of a string word.
pub fn reduce(s: &str) -> String {
    let mut out: Vec<char> = Vec::new();
    for c in s.chars() {
        if out.last() == Some(&inv_char(c)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out.into_iter().collect()
}

pub fn invert(s: &str) -> String {
    s.chars().rev().map(inv_char).collect()
}

/// Substitute string images for `x` and `y`.
pub fn substitute(w: &str, x: &str, y: &str) -> String {
    let mut out = String::new();
    for c in w.chars() {
        match c {
            'x' => out.push_str(x),
            'X' => out.push_str(&invert(x)),
            'y' => out.push_str(y),
            'Y' => out.push_str(&invert(y)),
            other => out.push(other),
        }
    }
    reduce(&out)
}

/// All reduced words of length at most `max_len` over `gens` and inverses,
/// obtained by filtering every raw sequence.
pub fn naive_words(gens: &str, max_len: usize) -> Vec<String> {
    let chars: Vec<char> = gens.chars().flat_map(|c| [c, c.to_ascii_uppercase()]).collect();
    let mut all = BTreeSet::new();
    let mut layer = vec![String::new()];
    all.insert(String::new());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for &c in &chars {
                let t = format!("{s}{c}");
                next.push(t.clone());
                all.insert(t);
            }
        }
        layer = next;
    }
    all.into_iter().filter(|s| reduce(s) == *s).collect()
}

/// Solutions in the ball by nested loops over every candidate pair.
pub fn naive_solutions(w: &str, u: &str, max_len: usize) -> BTreeSet<(String, String)> {
    let words = naive_words("ab", max_len);
    let u = reduce(u);
    let mut out = BTreeSet::new();
    for g1 in &words {
        for g2 in &words {
            if substitute(w, g1, g2) == u {
                out.insert((g1.clone(), g2.clone()));
            }
        }
    }
    out
}

/// Membership by breadth-first enumeration of subgroup elements whose length
/// stays within `2(|w| + Σ|gᵢ|)`.
pub fn naive_member(gens: &[String], w: &str) -> bool {
    let cap = 2 * (w.len() + gens.iter().map(String::len).sum::<usize>());
    let target = reduce(w);
    let steps: Vec<String> = gens.iter().flat_map(|g| [reduce(g), invert(&reduce(g))]).collect();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(String::new());
    queue.push_back(String::new());
    while let Some(h) = queue.pop_front() {
        if h == target {
            return true;
        }
        for s in &steps {
            let next = reduce(&format!("{h}{s}"));
            if next.len() <= cap && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

fn cyclic_core(s: &str) -> String {
    let mut v: Vec<char> = reduce(s).chars().collect();
    while v.len() >= 2 && v[0] == inv_char(v[v.len() - 1]) {
        v.remove(0);
        v.pop();
    }
    v.into_iter().collect()
}

/// Conjugacy class representative: least rotation of the cyclic core.
pub fn cyclic_class(s: &str) -> String {
    let core = cyclic_core(s);
    (0..core.len().max(1))
        .map(|k| format!("{}{}", &core[k..], &core[..k]))
        .min()
        .unwrap_or_default()
}

/// Substitutions generating Aut(F(x,y)) modulo inner automorphisms:
/// signed permutations and one-sided multiplications.
pub fn elementary_substitutions() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (a, b) in [("x", "y"), ("y", "x")] {
        for sa in [false, true] {
            for sb in [false, true] {
                let a = if sa { invert(a) } else { a.to_string() };
                let b = if sb { invert(b) } else { b.to_string() };
                out.push((a, b.clone()));
            }
        }
    }
    for m in ["y", "Y"] {
        out.push((format!("x{m}"), "y".into()));
        out.push((format!("{m}x"), "y".into()));
    }
    for m in ["x", "X"] {
        out.push(("x".into(), format!("y{m}")));
        out.push(("x".into(), format!("{m}y")));
    }
    out
}

/// Conjugacy classes of primitive elements with cyclic length at most
/// `max_len`, found by breadth-first search from `x` with every
/// intermediate class pruned at `max_len`.
pub fn primitive_classes(max_len: usize) -> HashSet<String> {
    let subs = elementary_substitutions();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert("x".to_string());
    queue.push_back("x".to_string());
    while let Some(c) = queue.pop_front() {
        for (x, y) in &subs {
            let next = cyclic_class(&substitute(&c, x, y));
            if next.len() <= max_len && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}
