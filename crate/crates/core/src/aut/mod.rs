//! Automorphisms of the free group `F(x,y)`.

mod canonical;
mod nielsen;
mod whitehead;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::stallings::SubgroupBasis;
use crate::word::{Alphabet, Word};

pub use canonical::{canonical_generators, CanonicalGenerators, Generator, SplittingData};
pub use nielsen::{
    nielsen_reduce_pair, terminal_data, NielsenMove, NielsenReduction, Side, TerminalData,
};
pub use whitehead::{
    is_primitive, orbit_automorphism, whitehead_minimize, whitehead_moves, LevelSet, Minimized,
    OrbitResult, DEFAULT_ORBIT_CAP,
};

/// An automorphism stored as the images of `x` and `y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutF2 {
    x: Word,
    y: Word,
}

impl AutF2 {
    pub fn identity() -> AutF2 {
        AutF2 {
            x: Word::generator('x'),
            y: Word::generator('y'),
        }
    }

    /// Checked constructor: the images must form a basis of `F(x,y)`.
    pub fn new(x: Word, y: Word) -> Result<AutF2> {
        let xy = Alphabet::variables();
        xy.check(&x)?;
        xy.check(&y)?;
        if !is_basis(&x, &y) {
            return Err(Error::NotABasis(x, y));
        }
        Ok(AutF2 { x, y })
    }

    /// For images already known to form a basis.
    pub(crate) fn from_images(x: Word, y: Word) -> AutF2 {
        AutF2 { x, y }
    }

    pub fn parse(text: &str) -> Result<AutF2> {
        let bad = || Error::Parse {
            input: text.to_string(),
            offset: 0,
            message: "expected \"x->WORD; y->WORD\"".into(),
        };
        let (left, right) = text.split_once(';').ok_or_else(bad)?;
        let image = |part: &str, var: &str| -> Result<Word> {
            let (name, body) = part.split_once("->").ok_or_else(bad)?;
            if name.trim() != var {
                return Err(bad());
            }
            Word::parse(body.trim())
        };
        AutF2::new(image(left, "x")?, image(right, "y")?)
    }

    pub fn image_x(&self) -> &Word {
        &self.x
    }

    pub fn image_y(&self) -> &Word {
        &self.y
    }

    pub fn is_identity(&self) -> bool {
        *self == AutF2::identity()
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.evaluate(&self.x, &self.y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AutF2) -> AutF2 {
        AutF2 {
            x: self.apply(&other.x),
            y: self.apply(&other.y),
        }
    }

    pub fn inverse(&self) -> AutF2 {
        let basis = SubgroupBasis::new(&[self.x.clone(), self.y.clone()])
            .expect("automorphism images are free");
        let x = basis
            .express(&Word::generator('x'))
            .expect("automorphism images generate");
        let y = basis
            .express(&Word::generator('y'))
            .expect("automorphism images generate");
        AutF2 { x, y }
    }

    /// `z ↦ g⁻¹ z g`.
    pub fn inner(g: &Word) -> AutF2 {
        AutF2 {
            x: Word::generator('x').conjugate(g),
            y: Word::generator('y').conjugate(g),
        }
    }

    /// Action on a pair `(g1, g2)` of a solution: `(σ(x)(g1,g2), σ(y)(g1,g2))`.
    pub fn act(&self, g1: &Word, g2: &Word) -> (Word, Word) {
        (self.x.evaluate(g1, g2), self.y.evaluate(g1, g2))
    }
}

impl fmt::Display for AutF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x->{}; y->{}", self.x, self.y)
    }
}

impl fmt::Debug for AutF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AutF2({self})")
    }
}

impl FromStr for AutF2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<AutF2> {
        AutF2::parse(s)
    }
}

/// Whether `(a, b)` is a basis of `F(x,y)`.
pub fn is_basis(a: &Word, b: &Word) -> bool {
    match SubgroupBasis::new(&[a.clone(), b.clone()]) {
        Ok(basis) => {
            let g = basis.graph();
            g.vertex_count() == 1 && g.edges().len() == 2
        }
        Err(_) => false,
    }
}

pub fn apply(a: &AutF2, w: &Word) -> Word {
    a.apply(w)
}

pub fn compose(a: &AutF2, b: &AutF2) -> AutF2 {
    a.compose(b)
}

pub fn invert_aut(a: &AutF2) -> AutF2 {
    a.inverse()
}
