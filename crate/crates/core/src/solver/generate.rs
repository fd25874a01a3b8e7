//! Instantiating the parametric description, and the two-level family.

use crate::error::{Error, Result};
use crate::word::Word;

use super::{JsjCase, VarietyDescription, VarietyShape};

/// Parameters selecting one member of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenParams {
    /// Member `m` of the rank 1 lattice family.
    Rank1 { m: i64 },
    /// `(u⁻ⁿ xᵢ uⁿ, u⁻ⁿ yᵢ uⁿ)`.
    Item1 { i: usize, n: i64 },
    /// `(X(u⁻ⁿpᵢuⁿ, u⁻ⁿtᵢqᵢᵐuⁿ), Y(…))`.
    Item2 { i: usize, n: i64, m: i64 },
    /// `σ` applied to the `i`-th minimal solution, `σ` a product of named
    /// generators such as `"dx dy^-1 gw"`.
    Item3 { i: usize, sigma: String },
    /// `(X(u,z), Y(u,z))`.
    Primitive { z: Word },
    /// `(r^a, r^b)` with `(a,b) = n1·g1 + n2·g2` over the lattice generators.
    TrivialU { r: Word, n1: i64, n2: i64 },
}

fn minimal(desc: &VarietyDescription, i: usize) -> Result<&(Word, Word)> {
    desc.minimal_solutions().get(i).ok_or_else(|| {
        Error::InvalidParameters(format!(
            "index {i} out of range for {} minimal solutions",
            desc.minimal_solutions().len()
        ))
    })
}

fn mismatch(params: &GenParams, desc: &VarietyDescription) -> Error {
    Error::InvalidParameters(format!(
        "{params:?} does not apply to case {}",
        desc.case.tag()
    ))
}

pub fn generate_solution(desc: &VarietyDescription, params: &GenParams) -> Result<(Word, Word)> {
    if let VarietyShape::Reduced { inner, .. } = &desc.shape {
        return generate_solution(inner, params);
    }
    let u = &desc.eq.u;
    let pair = match (params, &desc.shape) {
        (GenParams::Rank1 { m }, _) => desc
            .rank1
            .as_ref()
            .and_then(|f| f.instance(*m))
            .ok_or_else(|| Error::InvalidParameters("no rank 1 family".into()))?,
        (GenParams::Primitive { z }, VarietyShape::Primitive { aut }) => {
            (aut.image_x().evaluate(u, z), aut.image_y().evaluate(u, z))
        }
        (GenParams::TrivialU { r, n1, n2 }, VarietyShape::TrivialU { family }) => {
            family.instance(r, *n1, *n2)
        }
        (GenParams::Item1 { i, n }, VarietyShape::Rank2 { .. })
            if matches!(desc.case, JsjCase::Case1Rigid | JsjCase::Case2HNN { .. }) =>
        {
            let (x, y) = minimal(desc, *i)?;
            let c = u.pow(*n);
            (x.conjugate(&c), y.conjugate(&c))
        }
        (GenParams::Item2 { i, n, m }, VarietyShape::Rank2 { .. }) => {
            let JsjCase::Case2HNN { basis, .. } = &desc.case else {
                return Err(mismatch(params, desc));
            };
            let (x, y) = minimal(desc, *i)?;
            let pi = basis.image_x().evaluate(x, y);
            let ti = basis.image_y().evaluate(x, y);
            let qi = pi.conjugate(&ti);
            let c = u.pow(*n);
            let p_new = pi.conjugate(&c);
            let t_new = (&ti * &qi.pow(*m)).conjugate(&c);
            let back = basis.inverse();
            (
                back.image_x().evaluate(&p_new, &t_new),
                back.image_y().evaluate(&p_new, &t_new),
            )
        }
        (GenParams::Item3 { i, sigma }, VarietyShape::Rank2 { generators, .. }) => {
            let (x, y) = minimal(desc, *i)?;
            generators.product(sigma)?.act(x, y)
        }
        _ => return Err(mismatch(params, desc)),
    };
    if desc.eq.w.evaluate(&pair.0, &pair.1) != *u {
        return Err(Error::Invariant(format!(
            "generated ({}, {}) is not a solution",
            pair.0, pair.1
        )));
    }
    Ok(pair)
}

/// A deterministic spread of parameters valid for `desc`, each radius `k`.
pub fn sweep_params(desc: &VarietyDescription, k: i64) -> Vec<GenParams> {
    let mut out = Vec::new();
    if let VarietyShape::Reduced { inner, .. } = &desc.shape {
        return sweep_params(inner, k);
    }
    if desc.rank1.as_ref().is_some_and(|f| !f.empty) {
        out.extend((-k..=k).map(|m| GenParams::Rank1 { m }));
    }
    let zs = ["", "a", "b", "ab", "Ba", "aab"];
    match &desc.shape {
        VarietyShape::Primitive { .. } => {
            for z in zs {
                out.push(GenParams::Primitive {
                    z: Word::parse(z).expect("literal"),
                });
            }
        }
        VarietyShape::TrivialU { family } => {
            for r in ["a", "ab", "aBB"] {
                for n1 in -k..=k {
                    let n2s: Vec<i64> = if family.generators.len() == 2 { (-k..=k).collect() } else { vec![0] };
                    for n2 in n2s {
                        out.push(GenParams::TrivialU {
                            r: Word::parse(r).expect("literal"),
                            n1,
                            n2,
                        });
                    }
                }
            }
        }
        VarietyShape::Rank2 { generators, .. } => {
            for i in 0..desc.minimal_solutions().len() {
                match &desc.case {
                    JsjCase::Case1Rigid => {
                        out.extend((-k..=k).map(|n| GenParams::Item1 { i, n }));
                    }
                    JsjCase::Case2HNN { .. } => {
                        for n in -k..=k {
                            for m in -k..=k {
                                out.push(GenParams::Item2 { i, n, m });
                            }
                        }
                    }
                    JsjCase::Case3QH { .. } => {
                        let names = generators.names();
                        out.push(GenParams::Item3 { i, sigma: String::new() });
                        for a in &names {
                            for b in &names {
                                out.push(GenParams::Item3 {
                                    i,
                                    sigma: format!("{} {}^-1", short(a), short(b)),
                                });
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        _ => {}
    }
    out
}

fn short(name: &str) -> &'static str {
    match name {
        "gamma_w" => "gw",
        "tau" => "tau",
        "delta_x" => "dx",
        _ => "dy",
    }
}

pub fn generate_solutions(desc: &VarietyDescription, params: &[GenParams]) -> Result<Vec<(Word, Word)>> {
    params.iter().map(|p| generate_solution(desc, p)).collect()
}

/// `E(x,y) = [a⁻¹ba[b,a][x,y]²x, a]`.
pub fn mega_word() -> Word {
    Word::parse("[Aba[b,a][x,y]^2x,a]").expect("literal")
}

/// `uₙ = [a,b]a⁻¹b⁻¹a·aⁿ`.
pub fn two_level_u(n: i64) -> Word {
    &Word::parse("[a,b]ABa").expect("literal") * &Word::generator('a').pow(n)
}

/// `(b⁻¹aⁿ, b⁻¹ab)` conjugated by `uₙᵐ`.
pub fn two_level_family(n: i64, m: i64) -> (Word, Word) {
    let b_inv = Word::parse("B").expect("literal");
    let x = &b_inv * &Word::generator('a').pow(n);
    let y = Word::parse("Bab").expect("literal");
    let c = two_level_u(n).pow(m);
    (x.conjugate(&c), y.conjugate(&c))
}

pub fn verify_mega(pair: &(Word, Word)) -> bool {
    mega_word().evaluate(&pair.0, &pair.1).is_identity()
}
