//! Finite-order elements of Hol(F2) and their conjugacy classes.
//!
//! Every torsion element is conjugate to one of ten representatives. Given
//! an element, [`classify`] searches breadth first through its conjugates by
//! the fourteen generator letters until one of them is a representative, and
//! returns the conjugator as a certificate. A failed search is reported as
//! [`ClassifyResult::UnknownAtDepth`]; it is not a proof of non-conjugacy.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::expr::hol;
use crate::gl2z::{gl_generator, GlGen, Mat2, Order};
use crate::hol::{display_hol_word, generator_letters, invert_hol_word, HolElt, HolGen, HolKey};
use crate::report::{ClaimReport, Status};
use crate::word::Sign;

pub const DEFAULT_DEPTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TorsionClass {
    P,
    Px,
    Pxa,
    PxTa,
    PxTaA,
    X2,
    X2B,
    Y2TbInv,
    Y2TbInvA,
    X,
}

impl TorsionClass {
    pub const ALL: [TorsionClass; 10] = [
        TorsionClass::P,
        TorsionClass::Px,
        TorsionClass::Pxa,
        TorsionClass::PxTa,
        TorsionClass::PxTaA,
        TorsionClass::X2,
        TorsionClass::X2B,
        TorsionClass::Y2TbInv,
        TorsionClass::Y2TbInvA,
        TorsionClass::X,
    ];

    /// The representative as a generator word.
    pub fn word(self) -> &'static str {
        match self {
            TorsionClass::P => "p",
            TorsionClass::Px => "p x",
            TorsionClass::Pxa => "p x a",
            TorsionClass::PxTa => "p x ta",
            TorsionClass::PxTaA => "p x ta a",
            TorsionClass::X2 => "x^2",
            TorsionClass::X2B => "x^2 b",
            TorsionClass::Y2TbInv => "y^2 tb'",
            TorsionClass::Y2TbInvA => "y^2 tb' a",
            TorsionClass::X => "x",
        }
    }

    pub fn expected_order(self) -> u32 {
        match self {
            TorsionClass::Y2TbInv | TorsionClass::Y2TbInvA => 3,
            TorsionClass::X => 4,
            _ => 2,
        }
    }

    pub fn representative(self) -> HolElt {
        hol(self.word())
    }
}

impl fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

/// `conjugator⁻¹ · representative · conjugator` equals the classified element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub class: TorsionClass,
    pub conjugator_word: Vec<(HolGen, Sign)>,
    pub conjugator: HolElt,
}

impl Certificate {
    pub fn verify(&self, element: &HolElt) -> bool {
        self.class.representative().conjugate_by(&self.conjugator) == *element
    }

    pub fn conjugator_string(&self) -> String {
        display_hol_word(&self.conjugator_word)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyResult {
    Classified(Certificate),
    NotTorsion,
    UnknownAtDepth(usize),
}

impl ClassifyResult {
    pub fn class(&self) -> Option<TorsionClass> {
        match self {
            ClassifyResult::Classified(c) => Some(c.class),
            _ => None,
        }
    }
}

/// A conjugator `c` with `c⁻¹ · start · c` equal to target number `index`.
#[derive(Clone, Debug)]
pub struct SearchHit {
    pub index: usize,
    pub conjugator_word: Vec<(HolGen, Sign)>,
    pub depth: usize,
}

/// Level-synchronous breadth-first search through the conjugates of `start`
/// by generator letters, deduplicated on the faithful key. Letters are tried
/// in a fixed order, so the first hit is deterministic.
pub fn conjugacy_search(start: &HolElt, targets: &[HolElt], max_depth: usize) -> Option<SearchHit> {
    let index: HashMap<HolKey, usize> = targets
        .iter()
        .enumerate()
        .map(|(i, t)| (t.key(), i))
        .collect();
    if let Some(&i) = index.get(&start.key()) {
        return Some(SearchHit {
            index: i,
            conjugator_word: Vec::new(),
            depth: 0,
        });
    }
    let letters: Vec<(HolGen, Sign, HolElt)> = generator_letters()
        .into_iter()
        .map(|(g, s)| (g, s, HolElt::letter(g, s)))
        .collect();
    let mut seen: HashSet<HolKey> = HashSet::new();
    seen.insert(start.key());
    let mut frontier: Vec<(HolElt, Vec<(HolGen, Sign)>)> = vec![(start.clone(), Vec::new())];
    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for (elt, word) in &frontier {
            for (g, s, letter) in &letters {
                let conj = elt.conjugate_by(letter);
                let key = conj.key();
                if !seen.insert(key.clone()) {
                    continue;
                }
                let mut w = word.clone();
                w.push((*g, *s));
                if let Some(&i) = index.get(&key) {
                    return Some(SearchHit {
                        index: i,
                        conjugator_word: w,
                        depth,
                    });
                }
                if depth < max_depth {
                    next.push((conj, w));
                }
            }
        }
        frontier = next;
    }
    None
}

/// Pairs `(g⁻¹, g)` for the six letters `P^±1, X^±1, Y^±1`.
fn gl_letters() -> Vec<(Mat2, Mat2)> {
    [GlGen::P, GlGen::X, GlGen::Y]
        .into_iter()
        .flat_map(|g| {
            let m = gl_generator(g);
            let mi = m.inverse().expect("generators are invertible");
            [(mi.clone(), m.clone()), (m, mi)]
        })
        .collect()
}

/// Bounded search for `c` with `c⁻¹ m c = target` in GL(2,Z).
pub fn gl_conjugate_within(m: &Mat2, target: &Mat2, max_depth: usize) -> bool {
    if m == target {
        return true;
    }
    let letters = gl_letters();
    let mut seen: HashSet<Mat2> = HashSet::from([m.clone()]);
    let mut frontier = vec![m.clone()];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for x in &frontier {
            for (gi, g) in &letters {
                let c = gi.mul(x).mul(g);
                if c == *target {
                    return true;
                }
                if seen.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    false
}

pub fn classify(w: &HolElt, max_depth: usize) -> ClassifyResult {
    classify_against(w, &TorsionClass::ALL, max_depth)
}

/// As [`classify`], restricted to the given representatives. Candidates are
/// pruned to those with the same order whose GL(2,Z) image is conjugate to
/// the image of `w` within `max_depth`.
pub fn classify_against(w: &HolElt, classes: &[TorsionClass], max_depth: usize) -> ClassifyResult {
    let order = match w.order() {
        Order::Infinite => return ClassifyResult::NotTorsion,
        Order::Finite(n) => n,
    };
    let image = w.project_gl2z();
    let candidates: Vec<TorsionClass> = classes
        .iter()
        .copied()
        .filter(|c| c.expected_order() == order)
        .filter(|c| gl_conjugate_within(&image, &c.representative().project_gl2z(), max_depth))
        .collect();
    if candidates.is_empty() {
        return ClassifyResult::UnknownAtDepth(max_depth);
    }
    let reps: Vec<HolElt> = candidates.iter().map(|c| c.representative()).collect();
    match conjugacy_search(w, &reps, max_depth) {
        None => ClassifyResult::UnknownAtDepth(max_depth),
        Some(hit) => {
            // G⁻¹ w G = rep, so w = (G⁻¹)⁻¹ rep G⁻¹
            let conjugator_word = invert_hol_word(&hit.conjugator_word);
            let cert = Certificate {
                class: candidates[hit.index],
                conjugator: HolElt::from_word(&conjugator_word),
                conjugator_word,
            };
            assert!(cert.verify(w), "conjugacy certificate failed to re-verify");
            ClassifyResult::Classified(cert)
        }
    }
}

/// One conjugation identity `left · middle · right = rhs`, with `right` the
/// inverse of `left`. `also` lists further expressions asserted equal.
struct Identity {
    left: &'static str,
    middle: &'static str,
    right: &'static str,
    rhs: &'static str,
    also: &'static [&'static str],
}

const IDENTITIES: [Identity; 12] = [
    Identity {
        left: "x^2",
        middle: "p x^3 tb b",
        right: "x^2",
        rhs: "p x ta a",
        also: &[],
    },
    Identity {
        left: "x^2",
        middle: "p x^3 tb",
        right: "x^2",
        rhs: "p x ta",
        also: &[],
    },
    Identity {
        left: "x^2",
        middle: "p x^3 b",
        right: "x^2",
        rhs: "p x a",
        also: &[],
    },
    Identity {
        left: "x",
        middle: "p x^2",
        right: "x'",
        rhs: "p",
        also: &[],
    },
    Identity {
        left: "y",
        middle: "x^2 tb",
        right: "y'",
        rhs: "x^2",
        also: &[],
    },
    Identity {
        left: "b'",
        middle: "x^2 tb b'",
        right: "b",
        rhs: "x^2 tb b",
        also: &[],
    },
    Identity {
        left: "x ta' tb y'",
        middle: "x^2 tb b' a",
        right: "y tb' ta x'",
        rhs: "x^2 tb b",
        also: &[],
    },
    Identity {
        left: "y b' x ta' tb y'",
        middle: "x^2 tb b",
        right: "y tb' ta x' b y'",
        rhs: "x^2 b",
        also: &[],
    },
    Identity {
        left: "x^2",
        middle: "y^2 tb' ta",
        right: "x^2",
        rhs: "y^2 tb'",
        also: &["y^3 tb' ta y^2 tb' ta ta' tb y^-3"],
    },
    Identity {
        left: "ta' x'",
        middle: "p x^3 tb",
        right: "x ta",
        rhs: "p x ta",
        also: &[],
    },
    Identity {
        left: "y",
        middle: "x^2 tb",
        right: "y'",
        rhs: "x^2",
        also: &[],
    },
    Identity {
        left: "x'",
        middle: "p x^2",
        right: "x",
        rhs: "p",
        also: &[],
    },
];

/// Depth of the repair search run when a tabulated identity does not hold.
const REPAIR_DEPTH: usize = 4;

/// Evaluates the twelve tabulated conjugation identities exactly as written.
/// When one fails, a bounded search looks for a conjugator that does relate
/// the two sides; a hit goes into the certificate but the status stays `Fail`.
pub fn lemma_identity_suite() -> Vec<ClaimReport> {
    IDENTITIES
        .iter()
        .enumerate()
        .map(|(i, id)| {
            let id_str = format!("conjugation-identity-{:02}", i + 1);
            let stmt = format!("{} ({}) {} = {}", id.left, id.middle, id.right, id.rhs);
            let lhs = hol(&format!("{} {} {}", id.left, id.middle, id.right));
            let rhs = hol(id.rhs);
            let mut ok = lhs == rhs;
            let mut details = stmt.clone();
            for alt in id.also {
                let eq = hol(alt) == rhs;
                ok &= eq;
                details.push_str(&format!(
                    "; {alt} = {}: {}",
                    id.rhs,
                    if eq { "holds" } else { "fails" }
                ));
            }
            if ok {
                return ClaimReport::new(id_str, Status::Pass, details);
            }
            let middle = hol(id.middle);
            details.push_str(&format!(
                "; as written the left side evaluates to [{}] but the right side is [{}]",
                lhs, rhs
            ));
            match conjugacy_search(&middle, std::slice::from_ref(&rhs), REPAIR_DEPTH) {
                Some(hit) => {
                    let c = display_hol_word(&hit.conjugator_word);
                    details.push_str(&format!(
                        "; the conjugacy itself holds: ({c})' ({}) ({c}) = {}",
                        id.middle, id.rhs
                    ));
                    ClaimReport::new(id_str, Status::Fail, details).with_certificate(c)
                }
                None => {
                    details.push_str(&format!(
                        "; no conjugator found within depth {REPAIR_DEPTH}"
                    ));
                    ClaimReport::new(id_str, Status::Fail, details)
                }
            }
        })
        .collect()
}

/// The six finite-order elements of Aut(F2) up to conjugacy, with orders.
pub const AUT_TORSION: [(&str, u32); 6] = [
    ("p", 2),
    ("p x", 2),
    ("p x ta", 2),
    ("x^2", 2),
    ("y^2 tb'", 3),
    ("x", 4),
];

/// Orders of the ten representatives against the expected list, the
/// six Aut(F2) representatives, and an identity sanity row.
pub fn representative_orders() -> Vec<ClaimReport> {
    let mut out: Vec<ClaimReport> = TorsionClass::ALL
        .iter()
        .map(|c| {
            let got = c.representative().order();
            let want = Order::Finite(c.expected_order());
            ClaimReport::check(
                format!("order.{}", c.word().replace(' ', "")),
                got == want,
                format!("order({}) = {got}, expected {want}", c.word()),
            )
        })
        .collect();
    for (w, n) in AUT_TORSION {
        let got = hol(w).order();
        out.push(ClaimReport::check(
            format!("aut-order.{}", w.replace(' ', "")),
            got == Order::Finite(n) && hol(w).z().is_identity(),
            format!("order({w}) in Aut(F2) = {got}, expected {n}"),
        ));
    }
    let id = HolElt::identity().order();
    out.push(ClaimReport::check(
        "order.identity",
        id == Order::Finite(1),
        format!("order(1) = {id}"),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representatives_have_listed_orders() {
        for c in TorsionClass::ALL {
            assert_eq!(
                c.representative().order(),
                Order::Finite(c.expected_order()),
                "{c}"
            );
        }
    }

    #[test]
    fn classify_px3_tb_b() {
        let w = hol("p x^3 tb b");
        match classify(&w, DEFAULT_DEPTH) {
            ClassifyResult::Classified(cert) => {
                assert_eq!(cert.class, TorsionClass::PxTaA);
                assert!(cert.verify(&w));
            }
            other => panic!("unexpected {other:?}"),
        }
        // The tabulated conjugator x^2 does not work; p does.
        let rep = TorsionClass::PxTaA.representative();
        assert_ne!(w.conjugate_by(&hol("x^2")), rep);
        assert_eq!(w.conjugate_by(&hol("p")), rep);
    }

    #[test]
    fn classify_px2_and_non_torsion() {
        let w = hol("p x^2");
        let r = classify(&w, DEFAULT_DEPTH);
        assert_eq!(r.class(), Some(TorsionClass::P));
        assert_eq!(hol("p x^2").conjugate_by(&hol("x")), hol("p"));
        assert_eq!(
            classify(&hol("a"), DEFAULT_DEPTH),
            ClassifyResult::NotTorsion
        );
        assert_eq!(
            classify(&hol("x y"), DEFAULT_DEPTH),
            ClassifyResult::NotTorsion
        );
    }

    #[test]
    fn representatives_classify_to_themselves() {
        for c in TorsionClass::ALL {
            let r = classify(&c.representative(), 2);
            assert_eq!(r.class(), Some(c));
        }
    }

    #[test]
    fn conjugates_of_representatives() {
        let g = hol("y a' tb p");
        for c in TorsionClass::ALL {
            let w = c.representative().conjugate_by(&g);
            match classify(&w, DEFAULT_DEPTH) {
                ClassifyResult::Classified(cert) => {
                    assert_eq!(cert.class, c);
                    assert!(cert.verify(&w));
                }
                other => panic!("{c}: {other:?}"),
            }
        }
    }

    #[test]
    fn gl_conjugacy_filter() {
        let x = gl_generator(GlGen::X);
        assert!(gl_conjugate_within(&x, &x.inverse().unwrap(), 2));
        let p = gl_generator(GlGen::P);
        assert!(!gl_conjugate_within(&p, &x.pow(2).unwrap(), 4));
    }

    #[test]
    fn lemma_suite_shape() {
        let reports = lemma_identity_suite();
        assert_eq!(reports.len(), 12);
        let passing: Vec<usize> = reports
            .iter()
            .enumerate()
            .filter(|(_, r)| r.status == Status::Pass)
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(passing, vec![4, 5, 6, 9, 10, 11, 12]);
        // failing rows carry a repaired conjugator
        for r in reports.iter().filter(|r| r.status.is_fail()) {
            assert!(r.certificate.is_some(), "{r}");
        }
    }

    #[test]
    fn order_report() {
        let reports = representative_orders();
        assert_eq!(reports.len(), 17);
        assert!(reports.iter().all(|r| r.status == Status::Pass));
    }
}
