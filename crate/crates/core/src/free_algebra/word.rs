use std::fmt;

use crate::error::{Error, Result};

/// A generator `x_i` or `x_i*` of the free algebra.
///
/// Stored as the code `2*(i-1) + starred`, so the derived order is
/// `x1 < x1* < x2 < x2* < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u16);

impl Letter {
    /// `index` is 1-based.
    pub fn new(index: usize, starred: bool) -> Letter {
        assert!(
            index >= 1 && index <= u16::MAX as usize / 2,
            "letter index {index} out of range"
        );
        Letter(((index - 1) * 2 + starred as usize) as u16)
    }

    pub fn x(index: usize) -> Letter {
        Letter::new(index, false)
    }

    pub fn star(index: usize) -> Letter {
        Letter::new(index, true)
    }

    pub fn from_code(code: usize) -> Letter {
        Letter(code as u16)
    }

    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn index(self) -> usize {
        self.0 as usize / 2 + 1
    }

    pub fn is_starred(self) -> bool {
        self.0 & 1 == 1
    }

    /// `x_i <-> x_i*`.
    pub fn dual(self) -> Letter {
        Letter(self.0 ^ 1)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.index())?;
        if self.is_starred() {
            f.write_str("*")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The set of generators a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `x_1..x_d` together with `x_1*..x_d*`.
    Doubled(usize),
    /// `x_1..x_n` only (tensor algebra of an n-dimensional space).
    Plain(usize),
}

impl Alphabet {
    pub fn contains(&self, l: Letter) -> bool {
        match *self {
            Alphabet::Doubled(d) => l.index() <= d,
            Alphabet::Plain(n) => !l.is_starred() && l.index() <= n,
        }
    }

    pub fn letters(&self) -> Vec<Letter> {
        match *self {
            Alphabet::Doubled(d) => (0..2 * d).map(Letter::from_code).collect(),
            Alphabet::Plain(n) => (1..=n).map(Letter::x).collect(),
        }
    }

    pub fn size(&self) -> usize {
        match *self {
            Alphabet::Doubled(d) => 2 * d,
            Alphabet::Plain(n) => n,
        }
    }

    pub fn check(&self, l: Letter) -> Result<()> {
        if self.contains(l) {
            Ok(())
        } else {
            Err(Error::UnknownLetter {
                letter: l.to_string(),
                alphabet: self.to_string(),
            })
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.letters().iter().try_for_each(|&l| self.check(l))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Alphabet::Doubled(d) => write!(f, "x1..x{d} and starred"),
            Alphabet::Plain(n) => write!(f, "x1..x{n}"),
        }
    }
}

/// A word in the generators; the empty word is the unit `1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Number of unstarred letters.
    pub fn deg_x(&self) -> usize {
        self.0.iter().filter(|l| !l.is_starred()).count()
    }

    /// Number of starred letters.
    pub fn deg_star(&self) -> usize {
        self.0.iter().filter(|l| l.is_starred()).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Concatenation of several slices.
    pub fn join(parts: &[&[Letter]]) -> Word {
        let mut v = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            v.extend_from_slice(p);
        }
        Word(v)
    }

    /// Left rotation by `k`: `w[k..] w[..k]`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Start offset of the lexicographically least rotation (two-pointer
/// minimum-expression algorithm, linear time).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

pub fn canonical_rotation(w: &Word) -> Word {
    w.rotate(least_rotation(w.letters()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_min(w: &Word) -> Word {
        (0..w.len().max(1)).map(|k| w.rotate(k)).min().unwrap()
    }

    #[test]
    fn letter_order() {
        let ls = [Letter::x(1), Letter::star(1), Letter::x(2), Letter::star(2)];
        assert!(ls.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(Letter::star(3).to_string(), "x3*");
        assert_eq!(Letter::x(2).dual(), Letter::star(2));
    }

    #[test]
    fn canonical_examples() {
        let (x, s) = (Letter::x(1), Letter::star(1));
        assert_eq!(
            canonical_rotation(&Word::new(vec![s, x])),
            Word::new(vec![x, s])
        );
        assert_eq!(canonical_rotation(&Word::unit()), Word::unit());
        assert_eq!(
            canonical_rotation(&Word::new(vec![s, x, s, x])),
            Word::new(vec![x, s, x, s])
        );
    }

    #[test]
    fn matches_brute_force_exhaustively() {
        for n in 0..=9usize {
            for code in 0..(3usize.pow(n as u32)) {
                let mut c = code;
                let w = Word::new(
                    (0..n)
                        .map(|_| {
                            let l = Letter::from_code(c % 3);
                            c /= 3;
                            l
                        })
                        .collect(),
                );
                assert_eq!(canonical_rotation(&w), brute_min(&w), "{w}");
            }
        }
    }

    #[test]
    fn alphabet_membership() {
        assert!(Alphabet::Doubled(1).contains(Letter::star(1)));
        assert!(!Alphabet::Doubled(1).contains(Letter::x(2)));
        assert!(!Alphabet::Plain(4).contains(Letter::star(1)));
        assert!(Alphabet::Plain(4).check(Letter::x(5)).is_err());
    }
}
