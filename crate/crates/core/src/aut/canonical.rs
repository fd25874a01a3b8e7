//! Canonical automorphism generators for the three splitting shapes.

use super::AutF2;
use crate::error::{Error, Result};
use crate::stallings::StallingsGraph;
use crate::word::Word;

/// What the classifier learned about the splitting of `F(x,y)` relative to `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplittingData {
    Rigid,
    /// `w ∈ ⟨p, q⟩` with `q = t⁻¹pt`, where `basis` maps `x ↦ p`, `y ↦ t`.
    Hnn { p: Word, q: Word, basis: AutF2 },
    /// `normalizer(w) = [x,y]`.
    Qh { normalizer: AutF2 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: &'static str,
    pub aut: AutF2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGenerators {
    pub w: Word,
    pub generators: Vec<Generator>,
}

impl CanonicalGenerators {
    pub fn get(&self, name: &str) -> Option<&AutF2> {
        self.generators.iter().find(|g| g.name == name).map(|g| &g.aut)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.generators.iter().map(|g| g.name).collect()
    }

    /// Generators followed by their inverses.
    pub fn with_inverses(&self) -> Vec<AutF2> {
        let mut out: Vec<AutF2> = self.generators.iter().map(|g| g.aut.clone()).collect();
        out.extend(self.generators.iter().map(|g| g.aut.inverse()));
        out.sort();
        out.dedup();
        out
    }

    /// Evaluate a product such as `"tau gw^-1 tau"`, composed left to right
    /// as written: the rightmost factor acts first on `w`.
    pub fn product(&self, text: &str) -> Result<AutF2> {
        let mut acc = AutF2::identity();
        for token in text.split(|c: char| c.is_whitespace() || c == '*' || c == '.') {
            if token.is_empty() {
                continue;
            }
            let (name, power) = match token.split_once('^') {
                Some((n, p)) => (
                    n,
                    p.parse::<i64>().map_err(|_| {
                        Error::InvalidParameters(format!("bad exponent in {token:?}"))
                    })?,
                ),
                None => (token, 1),
            };
            let full = match name {
                "gw" | "gamma_w" => "gamma_w",
                "tau" => "tau",
                "dx" | "delta_x" => "delta_x",
                "dy" | "delta_y" => "delta_y",
                other => {
                    return Err(Error::InvalidParameters(format!(
                        "unknown generator {other:?}"
                    )))
                }
            };
            let g = self.get(full).ok_or_else(|| {
                Error::InvalidParameters(format!("{full} is not a generator in this case"))
            })?;
            let step = if power < 0 { g.inverse() } else { g.clone() };
            for _ in 0..power.unsigned_abs() {
                acc = acc.compose(&step);
            }
        }
        Ok(acc)
    }
}

fn word(s: &str) -> Word {
    Word::parse(s).expect("literal")
}

pub fn delta_x() -> AutF2 {
    AutF2::from_images(word("yx"), word("y"))
}

pub fn delta_y() -> AutF2 {
    AutF2::from_images(word("x"), word("xy"))
}

pub fn canonical_generators(w: &Word, data: &SplittingData) -> Result<CanonicalGenerators> {
    let malformed = |m: &str| Error::InvalidParameters(format!("malformed case data: {m}"));
    let mut generators = vec![Generator {
        name: "gamma_w",
        aut: AutF2::inner(w),
    }];
    match data {
        SplittingData::Rigid => {}
        SplittingData::Hnn { p, q, basis } => {
            let t = basis.image_y();
            if basis.image_x() != p || *q != p.conjugate(t) {
                return Err(malformed("p, q and the basis disagree"));
            }
            if !StallingsGraph::from_generators(&[p.clone(), q.clone()]).contains(w) {
                return Err(malformed("w is not in <p, q>"));
            }
            let twist = AutF2::from_images(word("x"), word("xy"));
            generators.push(Generator {
                name: "tau",
                aut: basis.compose(&twist).compose(&basis.inverse()),
            });
        }
        SplittingData::Qh { normalizer } => {
            if normalizer.apply(w) != word("XYxy") {
                return Err(malformed("normalizer does not carry w to [x,y]"));
            }
            let inv = normalizer.inverse();
            for (name, d) in [("delta_x", delta_x()), ("delta_y", delta_y())] {
                generators.push(Generator {
                    name,
                    aut: inv.compose(&d).compose(normalizer),
                });
            }
        }
    }
    for g in &generators {
        if g.aut.apply(w) != *w {
            return Err(Error::Invariant(format!("{} does not fix {w}", g.name)));
        }
    }
    Ok(CanonicalGenerators {
        w: w.clone(),
        generators,
    })
}
