//! Splitting classification: quadratically hanging, HNN or rigid.

use crate::aut::{AutF2, LevelSet, OrbitResult, SplittingData};
use crate::error::{Error, Result};
use crate::stallings::StallingsGraph;
use crate::word::Word;

use super::{Budgets, JsjCase};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HnnSearch {
    Found { p: Word, q: Word, basis: AutF2 },
    Exhausted,
    BudgetHit,
}

fn hnn_vertex_graph() -> StallingsGraph {
    StallingsGraph::from_generators(&[Word::generator('x'), Word::parse("Yxy").expect("literal")])
}

/// The `y`-letters of the cyclic word alternate in sign.
fn y_alternates(v: &Word) -> bool {
    let signs: Vec<bool> = v
        .letters()
        .iter()
        .filter(|l| l.generator() == 'y')
        .map(|l| l.is_inverse())
        .collect();
    !signs.is_empty() && (0..signs.len()).all(|i| signs[i] != signs[(i + 1) % signs.len()])
}

/// Search automorphic images of `w` for a word in `⟨x, y⁻¹xy⟩`, which
/// exhibits a basis `(p, t)` with `w ∈ ⟨p, t⁻¹pt⟩`.
pub fn detect_hnn_splitting(w: &Word, budget: usize, slack: usize) -> HnnSearch {
    let k = hnn_vertex_graph();
    if k.contains(w) {
        return HnnSearch::Found {
            p: Word::generator('x'),
            q: Word::parse("Yxy").expect("literal"),
            basis: AutF2::identity(),
        };
    }
    let (ball, hit) = LevelSet::explore_ball(w, slack, budget, y_alternates);
    let Some(i) = hit else {
        return if ball.is_complete() {
            HnnSearch::Exhausted
        } else {
            HnnSearch::BudgetHit
        };
    };
    let v = ball.word(i);
    let first_y = v
        .letters()
        .iter()
        .position(|l| l.generator() == 'y' && !l.is_inverse())
        .expect("alternating word has a positive y");
    let prefix = Word::from_letters(v.letters()[..=first_y].iter().copied());
    let gamma = AutF2::inner(&prefix).compose(&ball.aut_to(i));
    let image = gamma.apply(w);
    assert!(k.contains(&image) && image.exponent_sum('y') == 0, "HNN witness check");
    let basis = gamma.inverse();
    let p = basis.image_x().clone();
    let q = p.conjugate(basis.image_y());
    HnnSearch::Found { p, q, basis }
}

/// Classify `w` assuming it is neither primitive nor a proper power.
/// `level` is the level set of `w`.
pub fn classify_jsj(w: &Word, level: &LevelSet, budgets: &Budgets) -> Result<(JsjCase, SplittingData)> {
    match level.find(&Word::parse("XYxy").expect("literal")) {
        OrbitResult::Found(normalizer) => {
            return Ok((
                JsjCase::Case3QH {
                    normalizer: normalizer.clone(),
                },
                SplittingData::Qh { normalizer },
            ))
        }
        OrbitResult::CapExceeded => {
            return Ok((
                JsjCase::Unresolved(format!("orbit of {w} exceeds the orbit cap")),
                SplittingData::Rigid,
            ))
        }
        OrbitResult::NotInOrbit => {}
    }
    Ok(match detect_hnn_splitting(w, budgets.hnn_budget, budgets.hnn_slack) {
        HnnSearch::Found { p, q, basis } => (
            JsjCase::Case2HNN {
                p: p.clone(),
                q: q.clone(),
                basis: basis.clone(),
            },
            SplittingData::Hnn { p, q, basis },
        ),
        HnnSearch::Exhausted => (JsjCase::Case1Rigid, SplittingData::Rigid),
        HnnSearch::BudgetHit => (
            JsjCase::Unresolved(format!(
                "HNN search for {w} hit its budget of {} bases",
                budgets.hnn_budget
            )),
            SplittingData::Rigid,
        ),
    })
}

/// Convenience entry point that builds the level set itself.
pub fn classify_word(w: &Word, budgets: &Budgets) -> Result<JsjCase> {
    if w.is_empty() {
        return Err(Error::InvalidEquation("w is the identity".into()));
    }
    let level = LevelSet::explore(w, budgets.orbit_cap);
    Ok(classify_jsj(w, &level, budgets)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn alternation() {
        assert!(y_alternates(&w("xYxy")));
        assert!(!y_alternates(&w("xxyy")));
        assert!(!y_alternates(&w("xx")));
    }

    #[test]
    fn hnn_examples() {
        match detect_hnn_splitting(&w("xYxy"), 10_000, 2) {
            HnnSearch::Found { p, q, basis } => {
                assert_eq!((p, q), (w("x"), w("Yxy")));
                assert!(basis.is_identity());
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            detect_hnn_splitting(&w("XYxy"), 10_000, 2),
            HnnSearch::Found { .. }
        ));
        match detect_hnn_splitting(&w("xxyy"), 10_000, 2) {
            HnnSearch::Found { p, q, basis } => {
                assert!(StallingsGraph::from_generators(&[p.clone(), q.clone()]).contains(&w("xxyy")));
                assert_eq!(q, p.conjugate(basis.image_y()));
                assert_eq!(basis.inverse().apply(&w("xxyy")).exponent_sum('y'), 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn classify_examples() {
        let b = Budgets::default();
        assert!(matches!(classify_word(&w("XYxy"), &b).unwrap(), JsjCase::Case3QH { .. }));
        assert!(matches!(classify_word(&w("xyXY"), &b).unwrap(), JsjCase::Case3QH { .. }));
        assert!(matches!(classify_word(&w("xYxy"), &b).unwrap(), JsjCase::Case2HNN { .. }));
        assert!(matches!(classify_word(&w("xxyy"), &b).unwrap(), JsjCase::Case2HNN { .. }));
    }
}
