//! The holomorph Hol(F2) = F2 ⋊ Aut(F2).
//!
//! An element is the product `V · z` with `V` an automorphism and `z` a
//! reduced word in `a, b`. Conjugating a word by an automorphism applies it,
//! `V⁻¹ z V = V(z)`, which gives
//!
//! ```text
//! (V1 z1)(V2 z2) = (V1 V2) · V2(z1) z2
//! ```

use std::fmt;

use serde::Serialize;

use crate::aut::{display_aut_word, AutElt, AutGen};
use crate::gl2z::{order_of, Mat2, Order};
use crate::word::{FreeWord, Gen, Letter, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HolGen {
    P,
    X,
    Y,
    Ta,
    Tb,
    A,
    B,
}

impl HolGen {
    pub const ALL: [HolGen; 7] = [
        HolGen::P,
        HolGen::X,
        HolGen::Y,
        HolGen::Ta,
        HolGen::Tb,
        HolGen::A,
        HolGen::B,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HolGen::P => "p",
            HolGen::X => "x",
            HolGen::Y => "y",
            HolGen::Ta => "ta",
            HolGen::Tb => "tb",
            HolGen::A => "a",
            HolGen::B => "b",
        }
    }

    pub fn from_name(name: &str) -> Option<HolGen> {
        HolGen::ALL.into_iter().find(|g| g.name() == name)
    }

    fn aut_gen(self) -> Option<AutGen> {
        match self {
            HolGen::P => Some(AutGen::P),
            HolGen::X => Some(AutGen::X),
            HolGen::Y => Some(AutGen::Y),
            HolGen::Ta => Some(AutGen::Ta),
            HolGen::Tb => Some(AutGen::Tb),
            HolGen::A | HolGen::B => None,
        }
    }
}

/// The fourteen generator letters: each generator with both signs.
pub fn generator_letters() -> Vec<(HolGen, Sign)> {
    HolGen::ALL
        .iter()
        .flat_map(|&g| [(g, Sign::Pos), (g, Sign::Neg)])
        .collect()
}

/// A generator word, printed as `p x^3 tb' a`.
pub fn display_hol_word(word: &[(HolGen, Sign)]) -> String {
    let mut parts: Vec<(HolGen, i64)> = Vec::new();
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

pub fn invert_hol_word(word: &[(HolGen, Sign)]) -> Vec<(HolGen, Sign)> {
    word.iter().rev().map(|&(g, s)| (g, s.flip())).collect()
}

/// Faithful identity key: the images of `a`, `b` and the word `z`.
pub type HolKey = ([FreeWord; 2], FreeWord);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HolElt {
    aut: AutElt,
    z: FreeWord,
}

impl HolElt {
    pub fn new(aut: AutElt, z: FreeWord) -> HolElt {
        HolElt { aut, z }
    }

    pub fn identity() -> HolElt {
        HolElt {
            aut: AutElt::identity(),
            z: FreeWord::identity(),
        }
    }

    pub fn generator(g: HolGen) -> HolElt {
        match (g.aut_gen(), g) {
            (Some(ag), _) => HolElt::new(AutElt::generator(ag), FreeWord::identity()),
            (None, HolGen::A) => HolElt::new(AutElt::identity(), FreeWord::letter(Letter::A)),
            (None, _) => HolElt::new(AutElt::identity(), FreeWord::letter(Letter::B)),
        }
    }

    pub fn letter(g: HolGen, s: Sign) -> HolElt {
        let e = HolElt::generator(g);
        if s == Sign::Pos {
            e
        } else {
            e.inv()
        }
    }

    pub fn from_word(word: &[(HolGen, Sign)]) -> HolElt {
        word.iter().fold(HolElt::identity(), |acc, &(g, s)| {
            acc.mul(&HolElt::letter(g, s))
        })
    }

    pub fn from_aut(aut: AutElt) -> HolElt {
        HolElt::new(aut, FreeWord::identity())
    }

    pub fn from_free(z: FreeWord) -> HolElt {
        HolElt::new(AutElt::identity(), z)
    }

    pub fn aut(&self) -> &AutElt {
        &self.aut
    }

    pub fn z(&self) -> &FreeWord {
        &self.z
    }

    pub fn key(&self) -> HolKey {
        (self.aut.images().clone(), self.z.clone())
    }

    pub fn mul(&self, o: &HolElt) -> HolElt {
        HolElt {
            aut: self.aut.compose(&o.aut),
            z: o.aut.apply(&self.z).mul(&o.z),
        }
    }

    pub fn inv(&self) -> HolElt {
        HolElt {
            aut: self.aut.invert(),
            z: self.aut.apply_inverse(&self.z.inv()),
        }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &HolElt) -> HolElt {
        g.inv().mul(self).mul(g)
    }

    pub fn commutes_with(&self, o: &HolElt) -> bool {
        self.mul(o) == o.mul(self)
    }

    pub fn pow(&self, n: i64) -> HolElt {
        let mut sq = if n < 0 { self.inv() } else { self.clone() };
        let mut out = HolElt::identity();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.aut.is_identity() && self.z.is_identity()
    }

    pub fn project_aut(&self) -> AutElt {
        self.aut.clone()
    }

    pub fn project_gl2z(&self) -> Mat2 {
        self.aut.abelianize()
    }

    /// The order of the GL(2,Z) image `n` bounds the search: the kernel
    /// F2 ⋊ Inn(F2) is torsion-free, so `self` has finite order exactly when
    /// `self^n = 1`, and then its order is `n`.
    pub fn order(&self) -> Order {
        match order_of(&self.project_gl2z()) {
            Order::Infinite => Order::Infinite,
            Order::Finite(n) if self.pow(n as i64).is_identity() => Order::Finite(n),
            Order::Finite(_) => Order::Infinite,
        }
    }

    /// The automorphism part's defining word followed by `z`; a generator
    /// word for `self`, not canonical.
    pub fn word(&self) -> Vec<(HolGen, Sign)> {
        let mut out: Vec<(HolGen, Sign)> = self
            .aut
            .word()
            .iter()
            .map(|&(g, s)| {
                let hg = match g {
                    AutGen::P => HolGen::P,
                    AutGen::X => HolGen::X,
                    AutGen::Y => HolGen::Y,
                    AutGen::Ta => HolGen::Ta,
                    AutGen::Tb => HolGen::Tb,
                };
                (hg, s)
            })
            .collect();
        out.extend(self.z.letters().iter().map(|l| {
            (
                if l.gen == Gen::A {
                    HolGen::A
                } else {
                    HolGen::B
                },
                l.sign,
            )
        }));
        out
    }
}

impl fmt::Display for HolElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V: {} (word {}); z = {}",
            self.aut,
            display_aut_word(self.aut.word()),
            self.z
        )
    }
}
