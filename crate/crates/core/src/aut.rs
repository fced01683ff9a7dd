//! Automorphisms of F2 = <a, b>, stored by the images of `a` and `b`
//! together with the images under the inverse.
//!
//! Products are read left to right: `f · g` first applies `f`, then `g`, so
//! `(f · g)(u) = g(f(u))`. With this order the presentation relations hold
//! as written, e.g. `(py)^2 = tb`; see [`convention_self_test`].

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gl2z::Mat2;
use crate::word::{free_conjugator, reduce, FreeWord, Gen, Letter, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AutGen {
    P,
    X,
    Y,
    Ta,
    Tb,
}

impl AutGen {
    pub const ALL: [AutGen; 5] = [AutGen::P, AutGen::X, AutGen::Y, AutGen::Ta, AutGen::Tb];

    pub fn name(self) -> &'static str {
        match self {
            AutGen::P => "p",
            AutGen::X => "x",
            AutGen::Y => "y",
            AutGen::Ta => "ta",
            AutGen::Tb => "tb",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AutElt {
    img: [FreeWord; 2],
    inv_img: [FreeWord; 2],
    word: Vec<(AutGen, Sign)>,
}

fn fw(s: &str) -> FreeWord {
    s.parse().expect("static word")
}

/// Substitutes `images[0]` for `a` and `images[1]` for `b`.
fn substitute(images: &[FreeWord; 2], w: &FreeWord) -> FreeWord {
    let mut raw = Vec::new();
    for l in w.letters() {
        let img = match l.gen {
            Gen::A => &images[0],
            Gen::B => &images[1],
        };
        match l.sign {
            Sign::Pos => raw.extend_from_slice(img.letters()),
            Sign::Neg => raw.extend(img.letters().iter().rev().map(|l| l.inv())),
        }
    }
    reduce(raw)
}

impl AutElt {
    pub fn identity() -> AutElt {
        AutElt {
            img: [FreeWord::letter(Letter::A), FreeWord::letter(Letter::B)],
            inv_img: [FreeWord::letter(Letter::A), FreeWord::letter(Letter::B)],
            word: Vec::new(),
        }
    }

    pub fn generator(g: AutGen) -> AutElt {
        let (img, inv_img) = match g {
            AutGen::P => (["b", "a"], ["b", "a"]),
            AutGen::X => (["b", "A"], ["B", "a"]),
            AutGen::Y => (["b", "Ab"], ["aB", "a"]),
            AutGen::Ta => (["a", "Aba"], ["a", "abA"]),
            AutGen::Tb => (["Bab", "b"], ["baB", "b"]),
        };
        let f = AutElt {
            img: img.map(fw),
            inv_img: inv_img.map(fw),
            word: vec![(g, Sign::Pos)],
        };
        debug_assert!(
            f.inverse_is_consistent(),
            "bad hard-coded inverse for {g:?}"
        );
        f
    }

    /// Conjugation `u ↦ h⁻¹ u h`, recorded as the word `h(ta, tb)`.
    pub fn inner(h: &FreeWord) -> AutElt {
        let hi = h.inv();
        let a = FreeWord::letter(Letter::A);
        let b = FreeWord::letter(Letter::B);
        AutElt {
            img: [a.conjugate_by(h), b.conjugate_by(h)],
            inv_img: [a.conjugate_by(&hi), b.conjugate_by(&hi)],
            word: h
                .letters()
                .iter()
                .map(|l| {
                    (
                        if l.gen == Gen::A {
                            AutGen::Ta
                        } else {
                            AutGen::Tb
                        },
                        l.sign,
                    )
                })
                .collect(),
        }
    }

    pub fn from_word(word: &[(AutGen, Sign)]) -> AutElt {
        word.iter().fold(AutElt::identity(), |acc, &(g, s)| {
            let f = AutElt::generator(g);
            acc.compose(&if s == Sign::Pos { f } else { f.invert() })
        })
    }

    pub fn images(&self) -> &[FreeWord; 2] {
        &self.img
    }

    pub fn inverse_images(&self) -> &[FreeWord; 2] {
        &self.inv_img
    }

    /// A defining generator word; not canonical.
    pub fn word(&self) -> &[(AutGen, Sign)] {
        &self.word
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        substitute(&self.img, w)
    }

    pub fn apply_inverse(&self, w: &FreeWord) -> FreeWord {
        substitute(&self.inv_img, w)
    }

    /// `self` first, then `g`.
    pub fn compose(&self, g: &AutElt) -> AutElt {
        let mut word = self.word.clone();
        word.extend_from_slice(&g.word);
        AutElt {
            img: [g.apply(&self.img[0]), g.apply(&self.img[1])],
            inv_img: [
                self.apply_inverse(&g.inv_img[0]),
                self.apply_inverse(&g.inv_img[1]),
            ],
            word,
        }
    }

    pub fn invert(&self) -> AutElt {
        AutElt {
            img: self.inv_img.clone(),
            inv_img: self.img.clone(),
            word: self
                .word
                .iter()
                .rev()
                .map(|&(g, s)| (g, s.flip()))
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> AutElt {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = AutElt::identity();
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                out = out.compose(&sq);
            }
            sq = sq.compose(&sq);
            k >>= 1;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.img[0].letters() == [Letter::A] && self.img[1].letters() == [Letter::B]
    }

    fn inverse_is_consistent(&self) -> bool {
        let a = FreeWord::letter(Letter::A);
        let b = FreeWord::letter(Letter::B);
        self.apply(&self.inv_img[0]) == a
            && self.apply(&self.inv_img[1]) == b
            && self.apply_inverse(&self.img[0]) == a
            && self.apply_inverse(&self.img[1]) == b
    }

    /// Row i holds the exponent sums of the image of the i-th generator.
    pub fn abelianize(&self) -> Mat2 {
        let [r0, r1] = [self.img[0].exponent_vector(), self.img[1].exponent_vector()];
        Mat2::new(r0[0], r0[1], r1[0], r1[1])
    }

    pub fn is_inner(&self) -> bool {
        self.abelianize().is_identity()
    }

    /// The unique `h` with `self(u) = h⁻¹ u h` for all `u`.
    ///
    /// Every `h` conjugating `a` to `self(a)` has the form `a^k h0`; the
    /// image of `b` pins down `k`.
    pub fn inner_conjugator(&self) -> Result<FreeWord> {
        if !self.is_inner() {
            return Err(Error::NotInner);
        }
        let a = FreeWord::letter(Letter::A);
        let b = FreeWord::letter(Letter::B);
        let fail =
            || Error::InternalInconsistency("trivial abelianization but no conjugator".into());
        let h0 = free_conjugator(&a, &self.img[0]).ok_or_else(fail)?;
        // a^-k b a^k = h0 f(b) h0⁻¹
        let c = h0.mul(&self.img[1]).mul(&h0.inv());
        let letters = c.letters();
        if letters.len() % 2 == 0 {
            return Err(fail());
        }
        let mid = letters.len() / 2;
        if letters[mid] != Letter::B {
            return Err(fail());
        }
        let a_power = reduce(letters[mid + 1..].iter().copied());
        let h = a_power.mul(&h0);
        if a.conjugate_by(&h) == self.img[0] && b.conjugate_by(&h) == self.img[1] {
            Ok(h)
        } else {
            Err(fail())
        }
    }
}

impl PartialEq for AutElt {
    fn eq(&self, other: &Self) -> bool {
        self.img == other.img
    }
}

impl Eq for AutElt {}

impl Hash for AutElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.img.hash(state);
    }
}

impl fmt::Display for AutElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a -> {}, b -> {}", self.img[0], self.img[1])
    }
}

/// Prints a generator word such as `p x^3 tb'`.
pub fn display_aut_word(word: &[(AutGen, Sign)]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<(AutGen, i64)> = Vec::new();
    for &(g, s) in word {
        match parts.last_mut() {
            Some((h, e)) if *h == g => *e += s.as_i64(),
            _ => parts.push((g, s.as_i64())),
        }
        if matches!(parts.last(), Some((_, 0))) {
            parts.pop();
        }
    }
    if parts.is_empty() {
        return "1".into();
    }
    parts
        .iter()
        .map(|&(g, e)| match e {
            1 => g.name().to_string(),
            -1 => format!("{}'", g.name()),
            e => format!("{}^{e}", g.name()),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Checks that the left-to-right product order reproduces `(py)^2 = tb`
/// and that the opposite order does not.
pub fn convention_self_test() -> bool {
    let p = AutElt::generator(AutGen::P);
    let y = AutElt::generator(AutGen::Y);
    let tb = AutElt::generator(AutGen::Tb);
    let py = p.compose(&y);
    let yp = y.compose(&p);
    py.compose(&py) == tb && yp.compose(&yp) != tb
}
