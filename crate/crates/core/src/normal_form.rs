//! The unique normal form `p^r · u(x, y) · x^(2s) · w(ta, tb) · z(a, b)`.
//!
//! The GL(2,Z) image fixes `r`, `u` and `s`. Lifting that form back along
//! `P ↦ p, X ↦ x, Y ↦ y` leaves an inner automorphism, whose conjugating
//! word is `w`. The `z` part is read off the element directly.

use std::fmt;

use serde::Serialize;

use crate::aut::{AutElt, AutGen};
use crate::error::{Error, Result};
use crate::gl2z::{gl_normal_form, GlNormalForm, Syllable};
use crate::hol::HolElt;
use crate::word::{FreeWord, Sign};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalForm {
    pub r: u8,
    pub u: Vec<Syllable>,
    pub s: u8,
    #[serde(serialize_with = "ser_t_word")]
    pub w: FreeWord,
    #[serde(serialize_with = "ser_free_word")]
    pub z: FreeWord,
}

fn ser_t_word<S: serde::Serializer>(w: &FreeWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.display_with(["ta", "tb"]))
}

fn ser_free_word<S: serde::Serializer>(w: &FreeWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

impl NormalForm {
    pub fn identity() -> NormalForm {
        NormalForm::default()
    }

    pub fn gl_part(&self) -> GlNormalForm {
        GlNormalForm {
            r: self.r,
            syllables: self.u.clone(),
            s: self.s,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.gl_part().is_valid()
    }

    pub fn in_kernel(&self) -> bool {
        self.r == 0 && self.u.is_empty() && self.s == 0
    }

    /// The whole form as one word, e.g. `p x y' x^2 ta tb' a`.
    pub fn to_word_string(&self) -> String {
        let mut parts = Vec::new();
        if self.r == 1 {
            parts.push("p".to_string());
        }
        parts.extend(self.u.iter().map(|s| s.name().to_string()));
        if self.s == 1 {
            parts.push("x^2".to_string());
        }
        if !self.w.is_identity() {
            parts.push(self.w.display_with(["ta", "tb"]));
        }
        if !self.z.is_identity() {
            parts.push(self.z.to_string());
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u: Vec<&str> = self.u.iter().map(|s| s.name()).collect();
        write!(
            f,
            "({}, [{}], {}, {}, {})",
            self.r,
            u.join(", "),
            self.s,
            self.w.display_with(["ta", "tb"]),
            self.z
        )
    }
}

/// The automorphism `p^r · u(x, y) · x^(2s)`.
pub fn lift_gl_form(nf: &GlNormalForm) -> AutElt {
    let mut word = Vec::with_capacity(nf.syllables.len() + 3);
    if nf.r == 1 {
        word.push((AutGen::P, Sign::Pos));
    }
    for syl in &nf.syllables {
        word.push(match syl {
            Syllable::X => (AutGen::X, Sign::Pos),
            Syllable::Y => (AutGen::Y, Sign::Pos),
            Syllable::YInv => (AutGen::Y, Sign::Neg),
        });
    }
    if nf.s == 1 {
        word.push((AutGen::X, Sign::Pos));
        word.push((AutGen::X, Sign::Pos));
    }
    AutElt::from_word(&word)
}

pub fn compute_nf(w: &HolElt) -> Result<NormalForm> {
    let gl = gl_normal_form(&w.project_gl2z())?;
    let lift = lift_gl_form(&gl);
    let inner = lift.invert().compose(w.aut());
    if !inner.is_inner() {
        return Err(Error::InternalInconsistency(format!(
            "lift of {gl} leaves a non-inner remainder {inner}"
        )));
    }
    let h = inner.inner_conjugator()?;
    Ok(NormalForm {
        r: gl.r,
        u: gl.syllables,
        s: gl.s,
        w: h,
        z: w.z().clone(),
    })
}

pub fn eval_nf(nf: &NormalForm) -> HolElt {
    let aut = lift_gl_form(&nf.gl_part()).compose(&AutElt::inner(&nf.w));
    HolElt::new(aut, nf.z.clone())
}

/// Normal form of the automorphism part alone (`z` is dropped).
pub fn compute_aut_nf(f: &AutElt) -> Result<NormalForm> {
    compute_nf(&HolElt::from_aut(f.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::hol;

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn identity_form() {
        assert_eq!(
            compute_nf(&HolElt::identity()).unwrap(),
            NormalForm::identity()
        );
        assert!(eval_nf(&NormalForm::identity()).is_identity());
        assert_eq!(compute_nf(&hol("p p")).unwrap(), NormalForm::identity());
    }

    #[test]
    fn x_squared_relation() {
        assert_eq!(
            compute_nf(&hol("x^2")).unwrap(),
            compute_nf(&hol("y^3 tb' ta")).unwrap()
        );
        let nf = compute_nf(&hol("x^2")).unwrap();
        assert_eq!((nf.r, nf.u.len(), nf.s), (0, 0, 1));
    }

    #[test]
    fn already_normal_element() {
        let nf = compute_nf(&hol("p ta a")).unwrap();
        assert_eq!(
            nf,
            NormalForm {
                r: 1,
                u: vec![],
                s: 0,
                w: fw("a"),
                z: fw("a")
            }
        );
        assert_eq!(nf.to_word_string(), "p ta a");
        assert_eq!(nf.to_string(), "(1, [], 0, ta, a)");
    }

    #[test]
    fn round_trip_on_mixed_words() {
        for s in [
            "y x tb' a p",
            "x' y' y' b ta^3",
            "p y^5 ta tb' ta a' b",
            "tb^2 p x^3 y a^2",
        ] {
            let w = hol(s);
            let nf = compute_nf(&w).unwrap();
            assert!(nf.is_valid());
            assert_eq!(eval_nf(&nf), w, "{s}");
        }
    }

    #[test]
    fn kernel_elements_have_trivial_gl_part() {
        let nf = compute_nf(&hol("ta b tb' a' ta")).unwrap();
        assert!(nf.in_kernel());
        assert!(!compute_nf(&hol("y ta")).unwrap().in_kernel());
    }
}
