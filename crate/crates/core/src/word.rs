//! Freely reduced words.
//!
//! A letter is an ASCII letter: lowercase names a generator, uppercase its
//! inverse. The variables `x` and `y` share this encoding with coefficient
//! generators, so one [`Word`] type covers group elements, words in the
//! variables and mixed words. Membership in a particular alphabet is checked
//! by [`Alphabet`] at construction time.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A signed generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(ch: char) -> Option<Letter> {
        ch.is_ascii_alphabetic().then_some(Letter(ch as u8))
    }

    /// The positive letter of generator `gen`.
    pub fn positive(gen: char) -> Letter {
        assert!(gen.is_ascii_lowercase(), "generator names are lowercase");
        Letter(gen as u8)
    }

    pub fn generator(self) -> char {
        self.0.to_ascii_lowercase() as char
    }

    pub fn is_inverse(self) -> bool {
        self.0.is_ascii_uppercase()
    }

    pub fn sign(self) -> i64 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 0x20)
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }

    fn key(self) -> (u8, bool) {
        (self.0.to_ascii_lowercase(), self.is_inverse())
    }
}

/// Generators in name order, each generator before its inverse.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Push `l` onto a reduced stack, cancelling against the top.
#[inline]
fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    if stack.last() == Some(&l.inverse()) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

#[inline]
fn extend_reduced(stack: &mut Vec<Letter>, word: &[Letter]) {
    for &l in word {
        push_reduced(stack, l);
    }
}

#[inline]
fn extend_inverse_reduced(stack: &mut Vec<Letter>, word: &[Letter]) {
    for &l in word.iter().rev() {
        push_reduced(stack, l.inverse());
    }
}

/// A freely reduced word. Equality is letter-sequence equality; ordering is
/// ShortLex over the letter order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

/// `word = root^exponent` with `exponent` maximal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerDecomposition {
    pub root: Word,
    pub exponent: u32,
}

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    /// Freely reduce an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut stack = Vec::new();
        for l in letters {
            push_reduced(&mut stack, l);
        }
        Word(stack)
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    pub fn generator(gen: char) -> Word {
        Word::letter(Letter::positive(gen))
    }

    /// Parse the word grammar:
    ///
    /// ```text
    /// word := term* ;  term := atom ('^' int)?
    /// atom := letter | '1' | '(' word ')' | '[' word ',' word ']'
    /// ```
    ///
    /// `[g,h]` expands to `g⁻¹h⁻¹gh`. Whitespace is ignored.
    pub fn parse(text: &str) -> Result<Word> {
        let mut parser = Parser {
            input: text,
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let w = parser.word()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.error("unexpected character"));
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let a = &self.0;
        let b = &other.0;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[k].inverse() {
            k += 1;
        }
        let mut out = Vec::with_capacity(a.len() + b.len() - 2 * k);
        out.extend_from_slice(&a[..a.len() - k]);
        out.extend_from_slice(&b[k..]);
        Word(out)
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut stack = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            extend_reduced(&mut stack, &base.0);
        }
        Word(stack)
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &Word) -> Word {
        let mut stack = Vec::with_capacity(self.len() + 2 * g.len());
        extend_inverse_reduced(&mut stack, &g.0);
        extend_reduced(&mut stack, &self.0);
        extend_reduced(&mut stack, &g.0);
        Word(stack)
    }

    /// `[g,h] = g⁻¹h⁻¹gh`.
    pub fn commutator(g: &Word, h: &Word) -> Word {
        let mut stack = Vec::with_capacity(2 * (g.len() + h.len()));
        extend_inverse_reduced(&mut stack, &g.0);
        extend_inverse_reduced(&mut stack, &h.0);
        extend_reduced(&mut stack, &g.0);
        extend_reduced(&mut stack, &h.0);
        Word(stack)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => self.len() == 1 || f != l.inverse(),
            _ => true,
        }
    }

    /// Returns `(core, conjugator)` with `self = conjugator⁻¹ · core · conjugator`
    /// and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.0[k] == self.0[n - 1 - k].inverse() {
            k += 1;
        }
        let core = Word(self.0[k..n - k].to_vec());
        let conjugator = Word(self.0[n - k..].to_vec());
        (core, conjugator)
    }

    /// Rotation `self[k..] · self[..k]`; only meaningful for cyclically
    /// reduced words, where it equals `p⁻¹ · self · p` with `p = self[..k]`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::identity();
        }
        let k = k % self.len();
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// The ShortLex-least rotation and the offset that produces it.
    pub fn least_rotation(&self) -> (Word, usize) {
        let n = self.len();
        if n == 0 {
            return (Word::identity(), 0);
        }
        let mut best = 0;
        for k in 1..n {
            let better = (0..n)
                .map(|i| self.0[(k + i) % n].cmp(&self.0[(best + i) % n]))
                .find(|o| *o != Ordering::Equal)
                == Some(Ordering::Less);
            if better {
                best = k;
            }
        }
        (self.rotate(best), best)
    }

    /// Maximal power decomposition. The identity is rejected.
    pub fn primitive_root(&self) -> Result<PowerDecomposition> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let (core, conj) = self.cyclic_reduce();
        let n = core.len();
        let period = (1..=n)
            .filter(|p| n % p == 0)
            .find(|&p| (p..n).all(|i| core.0[i] == core.0[i - p]))
            .unwrap_or(n);
        let root = Word(core.0[..period].to_vec()).conjugate(&conj);
        Ok(PowerDecomposition {
            root,
            exponent: (n / period) as u32,
        })
    }

    /// Signed number of occurrences of generator `gen`.
    pub fn exponent_sum(&self, gen: char) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator() == gen)
            .map(|l| l.sign())
            .sum()
    }

    pub fn contains_generator(&self, gen: char) -> bool {
        self.0.iter().any(|l| l.generator() == gen)
    }

    /// Substitute every generator for which `image` returns a word; other
    /// letters are kept. Inverse letters map to inverse images.
    pub fn substitute<'a, F>(&self, image: F) -> Word
    where
        F: Fn(char) -> Option<&'a Word>,
    {
        let mut stack = Vec::with_capacity(self.len() * 2);
        for &l in &self.0 {
            match image(l.generator()) {
                Some(img) if l.is_inverse() => extend_inverse_reduced(&mut stack, &img.0),
                Some(img) => extend_reduced(&mut stack, &img.0),
                None => push_reduced(&mut stack, l),
            }
        }
        Word(stack)
    }

    /// Substitute `x ↦ g1`, `y ↦ g2`.
    pub fn evaluate(&self, g1: &Word, g2: &Word) -> Word {
        self.substitute(|c| match c {
            'x' => Some(g1),
            'y' => Some(g2),
            _ => None,
        })
    }

    /// Rename generators letter by letter, keeping signs.
    pub fn rename(&self, map: impl Fn(char) -> char) -> Word {
        Word::from_letters(self.0.iter().map(|l| {
            let g = Letter::positive(map(l.generator()));
            if l.is_inverse() {
                g.inverse()
            } else {
                g
            }
        }))
    }

    /// Exponent of `self` as a power of `base`, if any.
    pub fn log_base(&self, base: &Word) -> Option<i64> {
        if self.is_empty() {
            return Some(0);
        }
        if base.is_empty() {
            return None;
        }
        let (core, conj) = base.cyclic_reduce();
        let body = self.len().checked_sub(2 * conj.len())?;
        if body % core.len() != 0 {
            return None;
        }
        let k = (body / core.len()) as i64;
        [k, -k].into_iter().find(|&e| base.pow(e) == *self)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl Mul<Word> for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self.multiply(&rhs)
    }
}

impl Mul<&Word> for Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

/// Plain letter string; the identity prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let s: String = self.0.iter().map(|l| l.as_char()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            offset: self
                .chars
                .get(self.pos)
                .map(|&(i, _)| i)
                .unwrap_or(self.input.len()),
            message: message.to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut stack = Vec::new();
        while let Some(c) = self.peek() {
            if c == ')' || c == ']' || c == ',' {
                break;
            }
            let t = self.term()?;
            extend_reduced(&mut stack, &t.0);
        }
        Ok(Word(stack))
    }

    fn term(&mut self) -> Result<Word> {
        let atom = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                w
            }
            Some('[') => {
                self.pos += 1;
                let g = self.word()?;
                self.expect(',')?;
                let h = self.word()?;
                self.expect(']')?;
                Word::commutator(&g, &h)
            }
            Some('1') => {
                self.pos += 1;
                Word::identity()
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Word::letter(Letter::new(c).expect("ascii letter"))
            }
            _ => return Err(self.error("expected a letter, '(', '[' or '1'")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.int()?;
            Ok(atom.pow(n))
        } else {
            Ok(atom)
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        let mut s = String::new();
        if self.peek() == Some('-') {
            s.push('-');
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent")
        })
    }
}

/// An ordered set of generator names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    generators: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(names: I) -> Result<Alphabet> {
        let generators: Vec<char> = names.into_iter().collect();
        if generators.is_empty() {
            return Err(Error::InvalidAlphabet("no generators".into()));
        }
        for (i, &c) in generators.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidAlphabet(format!(
                    "{c:?} is not a lowercase ASCII letter"
                )));
            }
            if generators[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("{c:?} repeated")));
            }
        }
        Ok(Alphabet { generators })
    }

    /// A coefficient alphabet; `x` and `y` are reserved for variables.
    pub fn coefficients(names: &str) -> Result<Alphabet> {
        let a = Alphabet::new(names.chars())?;
        if a.contains('x') || a.contains('y') {
            return Err(Error::InvalidAlphabet(
                "x and y are reserved for variables".into(),
            ));
        }
        Ok(a)
    }

    pub fn variables() -> Alphabet {
        Alphabet {
            generators: vec!['x', 'y'],
        }
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, gen: char) -> bool {
        self.generators.contains(&gen)
    }

    /// All signed letters in letter order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = self
            .generators
            .iter()
            .flat_map(|&g| [Letter::positive(g), Letter::positive(g).inverse()])
            .collect();
        v.sort();
        v
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut generators = self.generators.clone();
        for &g in &other.generators {
            if !generators.contains(&g) {
                generators.push(g);
            }
        }
        Alphabet { generators }
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|l| !self.contains(l.generator())) {
            Some(l) => Err(Error::UnknownGenerator(l.generator())),
            None => Ok(()),
        }
    }

    /// Reduce a raw sequence of `(generator, ±1)` pairs.
    pub fn reduce(&self, raw: &[(char, i8)]) -> Result<Word> {
        let mut letters = Vec::with_capacity(raw.len());
        for &(g, s) in raw {
            if !self.contains(g) {
                return Err(Error::UnknownGenerator(g));
            }
            let l = Letter::positive(g);
            letters.push(if s < 0 { l.inverse() } else { l });
        }
        Ok(Word::from_letters(letters))
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        let w = Word::parse(text)?;
        self.check(&w)?;
        Ok(w)
    }

    /// Signed count of `gen` in `w`, rejecting generators outside the alphabet.
    pub fn exponent_sum(&self, w: &Word, gen: char) -> Result<i64> {
        if !self.contains(gen) {
            return Err(Error::UnknownGenerator(gen));
        }
        Ok(w.exponent_sum(gen))
    }

    /// Every reduced word of length at most `max_len`, in ShortLex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let letters = self.letters();
        let mut all = vec![Word::identity()];
        let mut layer = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * (letters.len() - 1).max(1));
            for w in &layer {
                for &l in &letters {
                    if w.last() == Some(l.inverse()) {
                        continue;
                    }
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.generators.iter().collect();
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let ab = Alphabet::coefficients("ab").unwrap();
        assert_eq!(ab.reduce(&[('a', 1), ('b', 1), ('b', -1)]).unwrap(), w("a"));
        assert_eq!(ab.reduce(&[('a', 1), ('a', -1)]).unwrap(), Word::identity());
        assert_eq!(w("aBbA"), Word::identity());
        assert_eq!(
            ab.reduce(&[('c', 1)]),
            Err(Error::UnknownGenerator('c'))
        );
    }

    #[test]
    fn multiply_and_invert() {
        assert_eq!(&w("ab") * &w("Ba"), w("aa"));
        assert_eq!(&w("a") * &Word::identity(), w("a"));
        assert_eq!(w("aB").inverse(), w("bA"));
        assert_eq!(w("ab").conjugate(&w("b")), w("Babb"));
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(w("Aba").cyclic_reduce(), (w("b"), w("a")));
        assert_eq!(w("ab").cyclic_reduce(), (w("ab"), Word::identity()));
        assert_eq!(
            Word::identity().cyclic_reduce(),
            (Word::identity(), Word::identity())
        );
        // a single letter is its own core
        assert_eq!(w("a").cyclic_reduce(), (w("a"), Word::identity()));
    }

    #[test]
    fn primitive_root_examples() {
        let pd = w("abab").primitive_root().unwrap();
        assert_eq!((pd.root, pd.exponent), (w("ab"), 2));
        let pd = w("aabb").primitive_root().unwrap();
        assert_eq!((pd.root, pd.exponent), (w("aabb"), 1));
        // BaabBaab reduces to Baaaab = (Bab)^4
        let pd = w("BaabBaab").primitive_root().unwrap();
        assert_eq!((pd.root, pd.exponent), (w("Bab"), 4));
        let pd = w("BaabBaabb").primitive_root().unwrap();
        assert_eq!((pd.root, pd.exponent), (w("Baaaabb"), 1));
        assert_eq!(Word::identity().primitive_root(), Err(Error::EmptyWord));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("xxyXY").exponent_sum('x'), 1);
        assert_eq!(w("xxyXY").exponent_sum('y'), 0);
        assert_eq!(w("XYxy").exponent_sum('x'), 0);
        assert_eq!(w("XYxy").exponent_sum('y'), 0);
        let xy = Alphabet::variables();
        assert_eq!(xy.exponent_sum(&w("x"), 'a'), Err(Error::UnknownGenerator('a')));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(w("XYxy").evaluate(&w("a"), &w("b")), w("ABab"));
        assert_eq!(w("xxyy").evaluate(&w("a"), &w("A")), Word::identity());
        assert_eq!(w("xy").evaluate(&w("ab"), &w("Ba")), w("aa"));
    }

    #[test]
    fn grammar() {
        assert_eq!(w("[x,y]"), w("XYxy"));
        assert_eq!(w("[x,y]^2x"), w("XYxyXYxyx"));
        assert_eq!(w("(ab)^-2"), w("BABA"));
        assert_eq!(w("a^3B"), w("aaaB"));
        assert_eq!(w("1"), Word::identity());
        assert_eq!(w(""), Word::identity());
        assert!(Word::parse("a^").is_err());
        assert!(Word::parse("[a,b").is_err());
        assert!(Word::parse("a)").is_err());
        assert_eq!(Word::identity().to_string(), "1");
    }

    #[test]
    fn alphabet_rules() {
        assert!(Alphabet::coefficients("ax").is_err());
        assert!(Alphabet::coefficients("aa").is_err());
        assert!(Alphabet::coefficients("").is_err());
        let ab = Alphabet::coefficients("ab").unwrap();
        assert_eq!(ab.parse("ac"), Err(Error::UnknownGenerator('c')));
        // 1 + 4 + 12 reduced words
        assert_eq!(ab.words_up_to(2).len(), 17);
        let words = ab.words_up_to(3);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn shortlex_order() {
        assert!(w("a") < w("A"));
        assert!(w("A") < w("b"));
        assert!(w("b") < w("aa"));
        assert_eq!(w("baab").least_rotation().0, w("aabb"));
    }

    #[test]
    fn log_base() {
        assert_eq!(w("aaa").log_base(&w("a")), Some(3));
        assert_eq!(w("AA").log_base(&w("a")), Some(-2));
        assert_eq!(w("Baaab").log_base(&w("Bab")), Some(3));
        assert_eq!(w("Bab").log_base(&w("ab")), None);
        assert_eq!(w("Baab").log_base(&w("Bab")), Some(2));
        assert_eq!(w("ab").log_base(&w("a")), None);
    }

    fn arb_word(gens: &'static str, max: usize) -> impl Strategy<Value = Word> {
        let letters: Vec<char> = gens
            .chars()
            .flat_map(|c| [c, c.to_ascii_uppercase()])
            .collect();
        proptest::collection::vec(proptest::sample::select(letters), 0..max)
            .prop_map(|cs| Word::from_letters(cs.into_iter().map(|c| Letter::new(c).unwrap())))
    }

    proptest! {
        #[test]
        fn reduce_idempotent(raw in proptest::collection::vec(proptest::sample::select(vec!['a','A','b','B']), 0..30)) {
            let once = Word::from_letters(raw.iter().map(|&c| Letter::new(c).unwrap()));
            let twice = Word::from_letters(once.letters().iter().copied());
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.len() <= raw.len());
        }

        #[test]
        fn inverse_cancels(a in arb_word("ab", 20)) {
            prop_assert!((&a.inverse() * &a).is_identity());
            prop_assert!((&a * &a.inverse()).is_identity());
        }

        #[test]
        fn multiply_associative(a in arb_word("ab", 12), b in arb_word("ab", 12), c in arb_word("ab", 12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn cyclic_reduce_recomposes(a in arb_word("ab", 20)) {
            let (core, conj) = a.cyclic_reduce();
            prop_assert!(core.is_cyclically_reduced());
            prop_assert_eq!(core.conjugate(&conj), a);
        }

        #[test]
        fn primitive_root_recomposes(a in arb_word("ab", 8), n in 1i64..4) {
            prop_assume!(!a.is_empty());
            let p = a.pow(n);
            let pd = p.primitive_root().unwrap();
            prop_assert_eq!(pd.root.pow(pd.exponent as i64), p);
            prop_assert_eq!(pd.root.primitive_root().unwrap().exponent, 1);
            prop_assert_eq!(pd.exponent as i64 % n, 0);
        }

        #[test]
        fn evaluate_homomorphism(e1 in arb_word("abxy", 10), e2 in arb_word("abxy", 10),
                                 g1 in arb_word("ab", 6), g2 in arb_word("ab", 6)) {
            let whole = (&e1 * &e2).evaluate(&g1, &g2);
            prop_assert_eq!(whole, &e1.evaluate(&g1, &g2) * &e2.evaluate(&g1, &g2));
        }

        #[test]
        fn exponent_sum_of_evaluation(v in arb_word("xy", 10), g1 in arb_word("ab", 6), g2 in arb_word("ab", 6)) {
            let e = v.evaluate(&g1, &g2);
            for a in ['a', 'b'] {
                prop_assert_eq!(
                    e.exponent_sum(a),
                    v.exponent_sum('x') * g1.exponent_sum(a) + v.exponent_sum('y') * g2.exponent_sum(a)
                );
            }
        }

        #[test]
        fn display_parse_roundtrip(a in arb_word("ab", 20)) {
            prop_assert_eq!(Word::parse(&a.to_string()).unwrap(), a);
        }
    }
}
