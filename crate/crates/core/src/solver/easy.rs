//! Degenerate cases and the rank 1 component.

use super::EquationInstance;
use crate::error::{Error, Result};
use crate::word::Word;

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return if a < 0 { (-a, -1, 0) } else { (a, 1, 0) };
    }
    let (g, s, t) = extended_gcd(b, a.rem_euclid(b));
    (g, t, s - a.div_euclid(b) * t)
}

/// Pairs `(r^{m1}, r^{m2})` with `m1·σx + m2·σy = e`, where `u = r^e` and
/// `r` is the primitive root of `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank1Family {
    pub root: Word,
    pub exponent: i64,
    pub sums: (i64, i64),
    pub gcd: i64,
    pub particular: (i64, i64),
    pub direction: (i64, i64),
    pub empty: bool,
}

impl Rank1Family {
    /// Exponents of the `m`-th member.
    pub fn exponents(&self, m: i64) -> Option<(i64, i64)> {
        if self.empty {
            return None;
        }
        Some((
            self.particular.0 + m * self.direction.0,
            self.particular.1 + m * self.direction.1,
        ))
    }

    pub fn instance(&self, m: i64) -> Option<(Word, Word)> {
        self.exponents(m)
            .map(|(a, b)| (self.root.pow(a), self.root.pow(b)))
    }

    /// Every member with both coordinates of length at most `max_len`,
    /// sorted.
    pub fn instances_in_ball(&self, max_len: usize) -> Vec<(Word, Word)> {
        if self.empty {
            return Vec::new();
        }
        let reach = max_len as i64 + self.particular.0.abs() + self.particular.1.abs() + 1;
        let mut out: Vec<(Word, Word)> = (-reach..=reach)
            .filter_map(|m| self.instance(m))
            .filter(|(a, b)| a.len() <= max_len && b.len() <= max_len)
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn contains(&self, g1: &Word, g2: &Word) -> bool {
        if self.empty {
            return false;
        }
        let (Some(a), Some(b)) = (g1.log_base(&self.root), g2.log_base(&self.root)) else {
            return false;
        };
        a * self.sums.0 + b * self.sums.1 == self.exponent
    }
}

/// Solutions of `w = 1`: `(r^{n·a}, r^{n·b})` for `(a, b)` in the kernel
/// lattice of `(σx, σy)`, `r` arbitrary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialUFamily {
    pub sums: (i64, i64),
    pub generators: Vec<(i64, i64)>,
}

impl TrivialUFamily {
    pub fn instance(&self, r: &Word, n1: i64, n2: i64) -> (Word, Word) {
        let coeffs = [n1, n2];
        let (a, b) = self
            .generators
            .iter()
            .zip(coeffs)
            .fold((0, 0), |(a, b), (g, n)| (a + n * g.0, b + n * g.1));
        (r.pow(a), r.pow(b))
    }

    pub fn contains(&self, g1: &Word, g2: &Word) -> bool {
        let base = if g1.is_empty() { g2 } else { g1 };
        if base.is_empty() {
            return true;
        }
        let root = base.primitive_root().expect("nonempty").root;
        match (g1.log_base(&root), g2.log_base(&root)) {
            (Some(a), Some(b)) => a * self.sums.0 + b * self.sums.1 == 0,
            _ => false,
        }
    }
}

pub fn solve_trivial_u(eq: &EquationInstance) -> Result<TrivialUFamily> {
    if !eq.u.is_identity() {
        return Err(Error::InvalidEquation(format!("{} is not the identity", eq.u)));
    }
    let sums = eq.sums();
    let (d, _, _) = extended_gcd(sums.0, sums.1);
    let generators = if d == 0 {
        vec![(1, 0), (0, 1)]
    } else {
        let g = (sums.1 / d, -sums.0 / d);
        vec![if g.0 < 0 || (g.0 == 0 && g.1 < 0) { (-g.0, -g.1) } else { g }]
    };
    Ok(TrivialUFamily { sums, generators })
}

/// `Some(Some(eq'))` when `w = vⁿ`, `u = rⁿ` reduces to `v = r`;
/// `Some(None)` when `u` has no `n`-th root; `None` if `w` is not a power.
pub fn reduce_proper_power(eq: &EquationInstance) -> Result<Option<Option<EquationInstance>>> {
    let pw = eq.w.primitive_root()?;
    let n = pw.exponent as i64;
    if n == 1 {
        return Ok(None);
    }
    if eq.u.is_identity() {
        return Ok(Some(Some(eq.with(pw.root, Word::identity())?)));
    }
    let pu = eq.u.primitive_root()?;
    let e = pu.exponent as i64;
    if e % n != 0 {
        return Ok(Some(None));
    }
    Ok(Some(Some(eq.with(pw.root, pu.root.pow(e / n))?)))
}

pub fn rank1_family(eq: &EquationInstance) -> Result<Rank1Family> {
    if eq.u.is_identity() {
        return Err(Error::InvalidEquation(
            "trivial u has a lattice family, not a rank 1 family".into(),
        ));
    }
    let sums = eq.sums();
    let pu = eq.u.primitive_root()?;
    let e = pu.exponent as i64;
    let (d, s, t) = extended_gcd(sums.0, sums.1);
    let empty = d == 0 || e % d != 0;
    let (particular, direction) = if empty {
        ((0, 0), (0, 0))
    } else {
        ((s * e / d, t * e / d), (sums.1 / d, -sums.0 / d))
    };
    Ok(Rank1Family {
        root: pu.root,
        exponent: e,
        sums,
        gcd: d,
        particular,
        direction,
        empty,
    })
}

/// A proper power `u` forbids rank 2 solutions.
pub fn no_rank2_by_baumslag(eq: &EquationInstance) -> Result<bool> {
    Ok(!eq.u.is_identity() && eq.u.primitive_root()?.exponent > 1)
}
