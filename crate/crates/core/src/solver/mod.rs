//! The pipeline from an equation `w(x,y) = u` to a description of its
//! solution set.

mod classify;
mod easy;
mod generate;
mod rank2;

use std::fmt;

use crate::aut::{canonical_generators, is_primitive, AutF2, CanonicalGenerators, LevelSet};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

pub use classify::{classify_jsj, classify_word, detect_hnn_splitting, HnnSearch};
pub use easy::{
    extended_gcd, no_rank2_by_baumslag, rank1_family, reduce_proper_power, solve_trivial_u,
    Rank1Family, TrivialUFamily,
};
pub use generate::{
    generate_solution, generate_solutions, mega_word, sweep_params, two_level_family,
    two_level_u, verify_mega, GenParams,
};
pub use rank2::{
    closure, l_f, minimal_rank2_solutions, pair_key, representatives, seeds, terminal_graphs,
    MinimalSolutions, Pair, Seed,
};

/// An equation `w(x,y) = u` with `u` over a coefficient alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquationInstance {
    pub alphabet: Alphabet,
    pub w: Word,
    pub u: Word,
}

impl EquationInstance {
    pub fn new(alphabet: Alphabet, w: Word, u: Word) -> Result<EquationInstance> {
        Alphabet::variables().check(&w)?;
        alphabet.check(&u)?;
        Ok(EquationInstance { alphabet, w, u })
    }

    pub fn parse(alphabet: &str, w: &str, u: &str) -> Result<EquationInstance> {
        let alphabet = Alphabet::coefficients(alphabet)?;
        let w = Alphabet::variables().parse(w)?;
        let u = alphabet.parse(u)?;
        Ok(EquationInstance { alphabet, w, u })
    }

    pub fn with(&self, w: Word, u: Word) -> Result<EquationInstance> {
        EquationInstance::new(self.alphabet.clone(), w, u)
    }

    pub fn sums(&self) -> (i64, i64) {
        (self.w.exponent_sum('x'), self.w.exponent_sum('y'))
    }

    pub fn is_solution(&self, g1: &Word, g2: &Word) -> bool {
        self.w.evaluate(g1, g2) == self.u
    }
}

impl fmt::Display for EquationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {} over F({})", self.w, self.u, self.alphabet)
    }
}

/// Rank of `⟨g1, g2⟩`.
pub fn pair_rank(g1: &Word, g2: &Word) -> usize {
    if g1.is_empty() && g2.is_empty() {
        0
    } else if g1 * g2 == g2 * g1 {
        1
    } else {
        2
    }
}

pub fn verify_solution(eq: &EquationInstance, g1: &Word, g2: &Word) -> (bool, usize) {
    (eq.is_solution(g1, g2), pair_rank(g1, g2))
}

/// Search limits. Every limit that is hit is reported, never silently
/// truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budgets {
    pub orbit_cap: usize,
    pub hnn_budget: usize,
    pub hnn_slack: usize,
    /// Radius of the Δ-minimization ball; `None` means `2|u| + 4`.
    pub ball: Option<usize>,
    pub partition_cap: u128,
    pub closure_cap: usize,
    pub widen_retries: usize,
}

impl Default for Budgets {
    fn default() -> Budgets {
        Budgets {
            orbit_cap: crate::aut::DEFAULT_ORBIT_CAP,
            hnn_budget: 10_000,
            hnn_slack: 2,
            ball: None,
            partition_cap: 10_000_000,
            closure_cap: 2_000_000,
            widen_retries: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JsjCase {
    Primitive,
    ProperPowerReduced,
    TrivialU,
    Rank1Only,
    Case1Rigid,
    Case2HNN { p: Word, q: Word, basis: AutF2 },
    Case3QH { normalizer: AutF2 },
    Unresolved(String),
}

impl JsjCase {
    pub fn tag(&self) -> &'static str {
        match self {
            JsjCase::Primitive => "Primitive",
            JsjCase::ProperPowerReduced => "ProperPowerReduced",
            JsjCase::TrivialU => "TrivialU",
            JsjCase::Rank1Only => "Rank1Only",
            JsjCase::Case1Rigid => "Case1Rigid",
            JsjCase::Case2HNN { .. } => "Case2HNN",
            JsjCase::Case3QH { .. } => "Case3QH",
            JsjCase::Unresolved(_) => "Unresolved",
        }
    }

    pub fn is_unresolved(&self) -> bool {
        matches!(self, JsjCase::Unresolved(_))
    }
}

/// Which closed form generates the solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaTag {
    TrivialU,
    Primitive,
    Reduced,
    Empty,
    Rank1Only,
    Item1,
    Item2,
    Item3,
    Unresolved,
}

impl fmt::Display for FormulaTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaTag::TrivialU => "trivial-u",
            FormulaTag::Primitive => "primitive",
            FormulaTag::Reduced => "reduced",
            FormulaTag::Empty => "empty",
            FormulaTag::Rank1Only => "rank1-only",
            FormulaTag::Item1 => "item1",
            FormulaTag::Item2 => "item2",
            FormulaTag::Item3 => "item3",
            FormulaTag::Unresolved => "unresolved",
        })
    }
}

/// Shape of the Hom diagram, including the branch carrying rank 1 solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramTag {
    NotApplicable,
    Rank1Only,
    Case1 { rank1: bool },
    Case2 { rank1: bool },
    Case3,
}

impl fmt::Display for DiagramTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramTag::NotApplicable => "none",
            DiagramTag::Rank1Only => "rank1-only",
            DiagramTag::Case1 { rank1: false } => "case1",
            DiagramTag::Case1 { rank1: true } => "case1;rank1=pi1.sigma.pi2",
            DiagramTag::Case2 { rank1: false } => "case2",
            DiagramTag::Case2 { rank1: true } => "case2;rank1=sigma.pi3",
            DiagramTag::Case3 => "case3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarietyShape {
    TrivialU {
        family: TrivialUFamily,
    },
    Primitive {
        aut: AutF2,
    },
    Reduced {
        reduced: EquationInstance,
        inner: Box<VarietyDescription>,
    },
    Empty,
    Rank1Only,
    Rank2 {
        generators: CanonicalGenerators,
        minimal: MinimalSolutions,
    },
    Unresolved {
        generators: Option<CanonicalGenerators>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyDescription {
    pub eq: EquationInstance,
    pub case: JsjCase,
    pub rank1: Option<Rank1Family>,
    pub shape: VarietyShape,
    pub formula: FormulaTag,
    pub diagram: DiagramTag,
    pub budgets: Budgets,
}

impl VarietyDescription {
    pub fn minimal_solutions(&self) -> &[Pair] {
        match &self.shape {
            VarietyShape::Rank2 { minimal, .. } => &minimal.solutions,
            _ => &[],
        }
    }

    pub fn generators(&self) -> Option<&CanonicalGenerators> {
        match &self.shape {
            VarietyShape::Rank2 { generators, .. } => Some(generators),
            VarietyShape::Unresolved { generators } => generators.as_ref(),
            _ => None,
        }
    }

    pub fn is_unresolved(&self) -> bool {
        match &self.shape {
            VarietyShape::Reduced { inner, .. } => inner.is_unresolved(),
            _ => self.case.is_unresolved(),
        }
    }

    fn simple(eq: &EquationInstance, case: JsjCase, shape: VarietyShape, formula: FormulaTag, budgets: &Budgets) -> Self {
        VarietyDescription {
            eq: eq.clone(),
            case,
            rank1: None,
            shape,
            formula,
            diagram: DiagramTag::NotApplicable,
            budgets: budgets.clone(),
        }
    }
}

pub fn describe_variety(eq: &EquationInstance, budgets: &Budgets) -> Result<VarietyDescription> {
    if eq.w.is_empty() {
        return Err(Error::InvalidEquation("w is the identity".into()));
    }
    if !eq.w.contains_generator('x') || !eq.w.contains_generator('y') {
        return Err(Error::OneVariable(eq.w.clone()));
    }
    if eq.u.is_identity() {
        let family = solve_trivial_u(eq)?;
        return Ok(VarietyDescription::simple(
            eq,
            JsjCase::TrivialU,
            VarietyShape::TrivialU { family },
            FormulaTag::TrivialU,
            budgets,
        ));
    }
    if let Some(aut) = is_primitive(&eq.w) {
        return Ok(VarietyDescription::simple(
            eq,
            JsjCase::Primitive,
            VarietyShape::Primitive { aut },
            FormulaTag::Primitive,
            budgets,
        ));
    }
    if let Some(reduced) = reduce_proper_power(eq)? {
        let (shape, formula) = match reduced {
            Some(r) => {
                let inner = describe_variety(&r, budgets)?;
                (
                    VarietyShape::Reduced {
                        reduced: r,
                        inner: Box::new(inner),
                    },
                    FormulaTag::Reduced,
                )
            }
            None => (VarietyShape::Empty, FormulaTag::Empty),
        };
        return Ok(VarietyDescription::simple(
            eq,
            JsjCase::ProperPowerReduced,
            shape,
            formula,
            budgets,
        ));
    }

    let rank1 = rank1_family(eq)?;
    let has_rank1 = !rank1.empty;
    let mut desc = VarietyDescription {
        eq: eq.clone(),
        case: JsjCase::Rank1Only,
        rank1: Some(rank1),
        shape: VarietyShape::Rank1Only,
        formula: if has_rank1 { FormulaTag::Rank1Only } else { FormulaTag::Empty },
        diagram: if has_rank1 { DiagramTag::Rank1Only } else { DiagramTag::NotApplicable },
        budgets: budgets.clone(),
    };
    if no_rank2_by_baumslag(eq)? {
        return Ok(desc);
    }

    let level = LevelSet::explore(&eq.w, budgets.orbit_cap);
    let (case, data) = classify_jsj(&eq.w, &level, budgets)?;
    desc.case = if level.is_complete() || case.is_unresolved() {
        case
    } else {
        JsjCase::Unresolved(format!(
            "level set of {} exceeds the orbit cap {}",
            eq.w, budgets.orbit_cap
        ))
    };
    if desc.case.is_unresolved() {
        desc.shape = VarietyShape::Unresolved { generators: None };
        desc.formula = FormulaTag::Unresolved;
        desc.diagram = DiagramTag::NotApplicable;
        return Ok(desc);
    }
    let generators = canonical_generators(&eq.w, &data)?;
    let minimal = match minimal_rank2_solutions(eq, &level, &generators, budgets) {
        Ok(m) => m,
        Err(Error::Unresolved(reason)) | Err(Error::BudgetExhausted(reason)) => {
            desc.case = JsjCase::Unresolved(reason);
            desc.shape = VarietyShape::Unresolved {
                generators: Some(generators),
            };
            desc.formula = FormulaTag::Unresolved;
            desc.diagram = DiagramTag::NotApplicable;
            return Ok(desc);
        }
        Err(e) => return Err(e),
    };
    desc.budgets.ball = Some(minimal.radius);
    if !minimal.solutions.is_empty() {
        desc.formula = match desc.case {
            JsjCase::Case1Rigid => FormulaTag::Item1,
            JsjCase::Case2HNN { .. } => FormulaTag::Item2,
            _ => FormulaTag::Item3,
        };
        desc.diagram = match desc.case {
            JsjCase::Case1Rigid => DiagramTag::Case1 { rank1: has_rank1 },
            JsjCase::Case2HNN { .. } => DiagramTag::Case2 { rank1: has_rank1 },
            _ => DiagramTag::Case3,
        };
    }
    desc.shape = VarietyShape::Rank2 {
        generators,
        minimal,
    };
    Ok(desc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn eq(w: &str, u: &str) -> EquationInstance {
        EquationInstance::parse("ab", w, u).unwrap()
    }

    #[test]
    fn verify_examples() {
        assert_eq!(verify_solution(&eq("xxyy", "aabb"), &w("a"), &w("b")), (true, 2));
        assert_eq!(verify_solution(&eq("XYxy", "ABab"), &w("a"), &w("b")), (true, 2));
        assert_eq!(verify_solution(&eq("xxyy", "aaaa"), &w("aaa"), &w("A")), (true, 1));
        assert_eq!(verify_solution(&eq("xy", ""), &w(""), &w("")), (true, 0));
    }

    #[test]
    fn instance_validation() {
        assert!(EquationInstance::parse("ab", "xa", "a").is_err());
        assert!(EquationInstance::parse("ab", "xy", "c").is_err());
        assert!(EquationInstance::parse("xb", "xy", "b").is_err());
        let b = Budgets::default();
        assert_eq!(
            describe_variety(&eq("xx", "aa"), &b),
            Err(Error::OneVariable(w("xx")))
        );
    }

    #[test]
    fn pipeline_routes() {
        let b = Budgets::default();
        assert_eq!(describe_variety(&eq("xy", "ab"), &b).unwrap().case, JsjCase::Primitive);
        assert_eq!(describe_variety(&eq("xxyy", ""), &b).unwrap().case, JsjCase::TrivialU);
        let d = describe_variety(&eq("xyxy", "abab"), &b).unwrap();
        assert_eq!(d.case, JsjCase::ProperPowerReduced);
        assert_eq!(d.formula, FormulaTag::Reduced);
        let d = describe_variety(&eq("xyxy", "aab"), &b).unwrap();
        assert_eq!(d.formula, FormulaTag::Empty);
        let d = describe_variety(&eq("xxyy", "aaaa"), &b).unwrap();
        assert_eq!(d.case, JsjCase::Rank1Only);
        assert!(d.minimal_solutions().is_empty());
    }
}
