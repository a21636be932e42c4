use necklace_core::free_algebra::{Letter, NecklaceElement, Word};
use necklace_core::Rational;
use num_like::is_one;

/// Letter naming used in output.
#[derive(Clone, Copy, Debug)]
pub enum Names {
    /// `x1, x1*, x2, ...`
    Indexed,
    /// `x, x*` for a single symbol pair.
    Short,
    /// `e11, e12, ...` for the generators of 𝔫𝔤𝔩_n.
    MatrixUnits(usize),
}

impl Names {
    pub fn for_pairs(d: usize) -> Names {
        if d == 1 {
            Names::Short
        } else {
            Names::Indexed
        }
    }

    pub fn letter(self, l: Letter) -> String {
        match self {
            Names::Indexed => l.to_string(),
            Names::Short => if l.is_starred() { "x*" } else { "x" }.to_string(),
            Names::MatrixUnits(n) => {
                let k = l.index() - 1;
                format!("e{}{}", k / n + 1, k % n + 1)
            }
        }
    }

    pub fn word(self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let sep = if matches!(self, Names::MatrixUnits(_)) {
            "·"
        } else {
            ""
        };
        w.letters()
            .iter()
            .map(|&l| self.letter(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Terms as `c w` joined by signs; parseable by the element grammar.
    pub fn element(self, e: &NecklaceElement) -> String {
        let mut out = String::new();
        for (i, (n, c)) in e.iter().enumerate() {
            let neg = c < &Rational::from_integer(0.into());
            let mag = if neg { -c.clone() } else { c.clone() };
            out.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let w = self.word(n.word());
            if n.degree() == 0 {
                out.push_str(&mag.to_string());
            } else if is_one(&mag) {
                out.push_str(&w);
            } else {
                out.push_str(&format!("{mag} {w}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

mod num_like {
    use necklace_core::Rational;

    pub fn is_one(q: &Rational) -> bool {
        *q == Rational::from_integer(1.into())
    }
}
