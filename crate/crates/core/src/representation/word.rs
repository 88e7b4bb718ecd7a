use std::fmt;

use super::{Entry, Mat2};

/// A generator of the link group or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    SInv,
    T,
    TInv,
}

impl Letter {
    pub fn inverse(self) -> Self {
        match self {
            Letter::S => Letter::SInv,
            Letter::SInv => Letter::S,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::S => "S",
            Letter::SInv => "S⁻¹",
            Letter::T => "T",
            Letter::TInv => "T⁻¹",
        })
    }
}

/// Word in the free group on `s, t`, read left to right. Not reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn then(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.then(y).then(&x.inverse()).then(&y.inverse())
    }

    /// `w = s⁻¹[s,t]²[s,t⁻¹]²`.
    pub fn w() -> Word {
        let (s, t) = (Word::letter(Letter::S), Word::letter(Letter::T));
        s.inverse()
            .then(&Word::commutator(&s, &t).pow(2))
            .then(&Word::commutator(&s, &t.inverse()).pow(2))
    }

    /// The defining relator `s w s⁻¹ w⁻¹`.
    pub fn relator() -> Word {
        let s = Word::letter(Letter::S);
        Word::commutator(&s, &Word::w())
    }

    /// Longitude `l_s = w s`.
    pub fn longitude_s() -> Word {
        Word::w().then(&Word::letter(Letter::S))
    }

    /// Longitude `l_t = t⁻¹[t,s]²[t,s⁻¹]² t`.
    pub fn longitude_t() -> Word {
        let (s, t) = (Word::letter(Letter::S), Word::letter(Letter::T));
        t.inverse()
            .then(&Word::commutator(&t, &s).pow(2))
            .then(&Word::commutator(&t, &s.inverse()).pow(2))
            .then(&t)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Left-to-right product of the letters under `s ↦ S`, `t ↦ T`.
///
/// Inverses are adjugates, so `S` and `T` must have unit determinant.
pub fn word_eval<T: Entry>(word: &Word, s: &Mat2<T>, t: &Mat2<T>) -> Mat2<T> {
    let (s_inv, t_inv) = (s.sl2_inverse(), t.sl2_inverse());
    word.letters().iter().fold(Mat2::identity(), |acc, l| {
        let m = match l {
            Letter::S => s,
            Letter::SInv => &s_inv,
            Letter::T => t,
            Letter::TInv => &t_inv,
        };
        acc.matmul(m)
    })
}
