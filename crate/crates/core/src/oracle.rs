//! Exhaustive ground truth in a length ball, and completeness certification
//! of a computed description against it.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::aut::CanonicalGenerators;
use crate::error::{Error, Result};
use crate::solver::{closure, pair_rank, EquationInstance, Pair, VarietyDescription, VarietyShape};
use crate::word::{Alphabet, Word};

/// Pairs with both coordinates of length at most `max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSpec {
    pub max_len: usize,
    pub alphabet: Alphabet,
}

impl BallSpec {
    pub fn new(max_len: usize, alphabet: Alphabet) -> BallSpec {
        BallSpec { max_len, alphabet }
    }

    pub fn contains(&self, p: &Pair) -> bool {
        p.0.len() <= self.max_len && p.1.len() <= self.max_len
    }
}

/// A solution tagged with the rank of the subgroup it generates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankedSolution {
    pub x: Word,
    pub y: Word,
    pub rank: usize,
}

impl RankedSolution {
    pub fn pair(&self) -> Pair {
        (self.x.clone(), self.y.clone())
    }
}

fn abelian(w: &Word, alphabet: &Alphabet) -> Vec<i64> {
    alphabet.generators().iter().map(|&g| w.exponent_sum(g)).collect()
}

/// Every solution in the ball, sorted by ShortLex per coordinate.
///
/// Candidates are bucketed by abelianization so that only pairs whose
/// abelian image matches that of `u` are evaluated.
pub fn brute_force_solutions(eq: &EquationInstance, ball: &BallSpec) -> Vec<RankedSolution> {
    let alphabet = eq.alphabet.union(&ball.alphabet);
    let words = alphabet.words_up_to(ball.max_len);
    let (sx, sy) = eq.sums();
    let target = abelian(&eq.u, &alphabet);
    let mut buckets: BTreeMap<Vec<i64>, Vec<&Word>> = BTreeMap::new();
    for w in &words {
        buckets.entry(abelian(w, &alphabet)).or_default().push(w);
    }
    let keys: Vec<&Vec<i64>> = buckets.keys().collect();
    let mut found: Vec<RankedSolution> = words
        .par_iter()
        .flat_map_iter(|g1| {
            let a1 = abelian(g1, &alphabet);
            let mut out = Vec::new();
            for key in &keys {
                let ok = a1
                    .iter()
                    .zip(key.iter())
                    .zip(&target)
                    .all(|((p, q), t)| sx * p + sy * q == *t);
                if !ok {
                    continue;
                }
                for g2 in &buckets[*key] {
                    if eq.w.evaluate(g1, g2) == eq.u {
                        out.push(RankedSolution {
                            x: g1.clone(),
                            y: (*g2).clone(),
                            rank: pair_rank(g1, g2),
                        });
                    }
                }
            }
            out
        })
        .collect();
    found.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
    found
}

/// Closure of `seeds` under the generators and their inverses, truncated to
/// the ball. Fails if a generator image is not a solution.
pub fn delta_orbit_closure(
    eq: &EquationInstance,
    seeds: &[Pair],
    gens: &CanonicalGenerators,
    ball: &BallSpec,
) -> Result<Vec<Pair>> {
    for s in seeds {
        if !eq.is_solution(&s.0, &s.1) {
            return Err(Error::NotASolution(s.0.clone(), s.1.clone()));
        }
    }
    closure(eq, seeds, &gens.with_inverses(), ball.max_len, usize::MAX)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyReport {
    pub ball: usize,
    pub closure_ball: usize,
    /// Solutions found by brute force, indexed by rank.
    pub counts: [usize; 3],
    pub covered_by_rank1: usize,
    pub covered_by_orbits: usize,
    pub uncovered: Vec<RankedSolution>,
    pub brute_time: Duration,
    pub closure_time: Duration,
}

impl CertifyReport {
    pub fn covered(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

enum Cover<'a> {
    All,
    None,
    Rank1(&'a crate::solver::Rank1Family),
    Trivial(&'a crate::solver::TrivialUFamily),
    Orbits(Option<&'a crate::solver::Rank1Family>, HashSet<Pair>),
}

fn cover<'a>(desc: &'a VarietyDescription, closure_ball: &BallSpec) -> Result<Cover<'a>> {
    Ok(match &desc.shape {
        VarietyShape::TrivialU { family } => Cover::Trivial(family),
        VarietyShape::Primitive { .. } => Cover::All,
        // roots are unique in a free group, so both equations have the same solutions
        VarietyShape::Reduced { inner, .. } => cover(inner, closure_ball)?,
        VarietyShape::Empty => Cover::None,
        VarietyShape::Rank1Only => match &desc.rank1 {
            Some(f) => Cover::Rank1(f),
            None => Cover::None,
        },
        VarietyShape::Rank2 { generators, minimal } => {
            let orbit = delta_orbit_closure(&desc.eq, &minimal.solutions, generators, closure_ball)?;
            Cover::Orbits(desc.rank1.as_ref(), orbit.into_iter().collect())
        }
        VarietyShape::Unresolved { .. } => Cover::Orbits(desc.rank1.as_ref(), HashSet::new()),
    })
}

/// Compare brute force at radius `ball` with the rank 1 family and the orbit
/// closure of the minimal solutions at radius `ball + 2|u|`.
pub fn certify(eq: &EquationInstance, desc: &VarietyDescription, ball: &BallSpec) -> Result<CertifyReport> {
    if *eq != desc.eq {
        return Err(Error::InvalidParameters(format!(
            "description is for {}, not {}",
            desc.eq, eq
        )));
    }
    let closure_ball = BallSpec::new(ball.max_len + 2 * eq.u.len(), ball.alphabet.clone());
    let t0 = Instant::now();
    let found = brute_force_solutions(eq, ball);
    let brute_time = t0.elapsed();
    let t1 = Instant::now();
    let cover = cover(desc, &closure_ball)?;
    let closure_time = t1.elapsed();

    let mut report = CertifyReport {
        ball: ball.max_len,
        closure_ball: closure_ball.max_len,
        counts: [0; 3],
        covered_by_rank1: 0,
        covered_by_orbits: 0,
        uncovered: Vec::new(),
        brute_time,
        closure_time,
    };
    for s in found {
        report.counts[s.rank] += 1;
        let ok = match &cover {
            Cover::All => true,
            Cover::None => false,
            Cover::Trivial(f) => f.contains(&s.x, &s.y),
            Cover::Rank1(f) => {
                let hit = f.contains(&s.x, &s.y);
                report.covered_by_rank1 += hit as usize;
                hit
            }
            Cover::Orbits(f, orbit) => {
                if f.is_some_and(|f| f.contains(&s.x, &s.y)) {
                    report.covered_by_rank1 += 1;
                    true
                } else if orbit.contains(&s.pair()) {
                    report.covered_by_orbits += 1;
                    true
                } else {
                    false
                }
            }
        };
        if !ok {
            report.uncovered.push(s);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(w: &str, u: &str) -> EquationInstance {
        EquationInstance::parse("ab", w, u).unwrap()
    }

    fn ball(l: usize) -> BallSpec {
        BallSpec::new(l, Alphabet::coefficients("ab").unwrap())
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn commutator_length_one() {
        let sols = brute_force_solutions(&eq("XYxy", "ABab"), &ball(1));
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].pair(), (w("a"), w("b")));
        assert_eq!(sols[0].rank, 2);
    }

    #[test]
    fn rank1_ball() {
        let sols = brute_force_solutions(&eq("xxyy", "aaaa"), &ball(2));
        assert!(sols.iter().all(|s| s.rank <= 1));
        let pairs: Vec<Pair> = sols.iter().map(RankedSolution::pair).collect();
        assert!(pairs.contains(&(w("a"), w("a"))));
        assert!(pairs.contains(&(w("aa"), w(""))));
    }

    #[test]
    fn empty_closure() {
        let e = eq("XYxy", "ABab");
        let d = crate::solver::describe_variety(&e, &Default::default()).unwrap();
        assert!(delta_orbit_closure(&e, &[], d.generators().unwrap(), &ball(3))
            .unwrap()
            .is_empty());
        let orbit = delta_orbit_closure(&e, &[(w("a"), w("b"))], d.generators().unwrap(), &ball(3)).unwrap();
        assert!(orbit.contains(&(w("a"), w("ab"))));
        assert!(orbit.contains(&(w("ba"), w("b"))));
    }
}
