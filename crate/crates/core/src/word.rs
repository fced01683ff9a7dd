//! Reduced words in the free group of rank two.
//!
//! The same word type carries both the `z(a, b)` component of a holomorph
//! element and the inner-automorphism word `w(ta, tb)`; the two generators
//! are simply called [`Gen::A`] and [`Gen::B`] and printed with whichever
//! names the caller supplies.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
        }
    }

    fn index(self) -> usize {
        match self {
            Gen::A => 0,
            Gen::B => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub gen: Gen,
    pub sign: Sign,
}

impl Letter {
    pub const A: Letter = Letter {
        gen: Gen::A,
        sign: Sign::Pos,
    };
    pub const A_INV: Letter = Letter {
        gen: Gen::A,
        sign: Sign::Neg,
    };
    pub const B: Letter = Letter {
        gen: Gen::B,
        sign: Sign::Pos,
    };
    pub const B_INV: Letter = Letter {
        gen: Gen::B,
        sign: Sign::Neg,
    };

    /// All four letters, in the order `a, a', b, b'`.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];

    pub fn new(gen: Gen, sign: Sign) -> Letter {
        Letter { gen, sign }
    }

    pub fn inv(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }

    pub fn swap_gen(self) -> Letter {
        Letter {
            gen: self.gen.other(),
            sign: self.sign,
        }
    }
}

/// A freely reduced word. The constructor functions maintain reducedness,
/// so no value of this type ever contains an adjacent cancelling pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<Letter>);

/// Free reduction by a single left-to-right stack pass.
pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> FreeWord {
    let mut stack: Vec<Letter> = Vec::new();
    for l in raw {
        match stack.last() {
            Some(&top) if top.cancels(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    FreeWord(stack)
}

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn letter(l: Letter) -> FreeWord {
        FreeWord(vec![l])
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

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let (u, v) = (&self.0, &other.0);
        let mut k = 0;
        while k < u.len() && k < v.len() && u[u.len() - 1 - k].cancels(v[k]) {
            k += 1;
        }
        let mut out = Vec::with_capacity(u.len() + v.len() - 2 * k);
        out.extend_from_slice(&u[..u.len() - k]);
        out.extend_from_slice(&v[k..]);
        FreeWord(out)
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `h⁻¹ · self · h`.
    pub fn conjugate_by(&self, h: &FreeWord) -> FreeWord {
        h.inv().mul(self).mul(h)
    }

    /// Splits `self = conj⁻¹ · core · conj` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let w = &self.0;
        let n = w.len();
        let mut k = 0;
        while 2 * k + 1 < n && w[k].cancels(w[n - 1 - k]) {
            k += 1;
        }
        (
            FreeWord(w[k..n - k].to_vec()),
            FreeWord(w[n - k..].to_vec()),
        )
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&f), Some(&l)) => self.0.len() == 1 || !f.cancels(l),
            _ => true,
        }
    }

    /// Left rotation by `k` letters: `w[k..] w[..k]`, which equals `w[..k]⁻¹ · w · w[..k]`.
    fn rotate(&self, k: usize) -> FreeWord {
        let mut out = self.0[k..].to_vec();
        out.extend_from_slice(&self.0[..k]);
        FreeWord(out)
    }

    pub fn exponent_sum(&self, gen: Gen) -> i64 {
        self.0
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    pub fn exponent_vector(&self) -> [i64; 2] {
        let mut v = [0i64; 2];
        for l in &self.0 {
            v[l.gen.index()] += l.sign.as_i64();
        }
        v
    }

    /// Exchanges the two generators letter by letter.
    pub fn swap_generators(&self) -> FreeWord {
        FreeWord(self.0.iter().map(|l| l.swap_gen()).collect())
    }

    /// True when no two adjacent letters cancel. Always true for values built
    /// through this module; exposed for checks on hand-assembled sequences.
    pub fn is_reduced_sequence(letters: &[Letter]) -> bool {
        letters.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    /// Concatenates without reducing. The caller owns the reducedness check.
    pub fn concat_raw(&self, other: &FreeWord) -> Vec<Letter> {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        out
    }

    /// Prints the word using `names[0]` for the first generator and
    /// `names[1]` for the second, merging runs into powers.
    pub fn display_with(&self, names: [&str; 2]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let run = (j - i) as i64 * l.sign.as_i64();
            let name = names[l.gen.index()];
            parts.push(match run {
                1 => name.to_string(),
                -1 => format!("{name}'"),
                e => format!("{name}^{e}"),
            });
            i = j;
        }
        parts.join(" ")
    }
}

/// Returns some `h` with `h⁻¹ · u · h = v`, or `None` when `u` and `v` are
/// not conjugate. The witness is re-checked before it is returned.
pub fn free_conjugator(u: &FreeWord, v: &FreeWord) -> Option<FreeWord> {
    let (cu, qu) = u.cyclic_reduce();
    let (cv, qv) = v.cyclic_reduce();
    if cu.len() != cv.len() {
        return None;
    }
    // u = qu⁻¹ cu qu, v = qv⁻¹ cv qv, cv = rot_k(cu) = x⁻¹ cu x with x = cu[..k]
    let n = cu.len();
    let ks: Vec<usize> = if n == 0 { vec![0] } else { (0..n).collect() };
    for k in ks {
        if n > 0 && cu.rotate(k) != cv {
            continue;
        }
        let x = FreeWord(cu.0[..k].to_vec());
        let h = qu.inv().mul(&x).mul(&qv);
        if u.conjugate_by(&h) == *v {
            return Some(h);
        }
    }
    None
}

/// Every reduced word of exactly `len` letters, in lexicographic order of
/// [`Letter::ALL`] indices.
pub fn reduced_words_of_length(len: usize) -> Vec<FreeWord> {
    let mut words = vec![FreeWord::identity()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(words.len() * 3);
        for w in &words {
            for l in Letter::ALL {
                if w.0.last().is_some_and(|&last| last.cancels(l)) {
                    continue;
                }
                let mut v = w.0.clone();
                v.push(l);
                next.push(FreeWord(v));
            }
        }
        words = next;
    }
    words
}

/// Reduced words of length at most `max_len`, shortest first.
pub fn reduced_words_up_to(max_len: usize) -> Vec<FreeWord> {
    (0..=max_len).flat_map(reduced_words_of_length).collect()
}

/// `4 · 3^(len-1)` for `len ≥ 1`.
pub fn reduced_word_count(len: usize) -> u64 {
    if len == 0 {
        1
    } else {
        4 * 3u64.pow(len as u32 - 1)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(["a", "b"]))
    }
}

/// Compact letter notation: `a`, `b` for generators and `A`, `B` for their
/// inverses. Whitespace is ignored and the result is reduced.
impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut raw = Vec::new();
        for (pos, c) in s.char_indices() {
            let l = match c {
                'a' => Letter::A,
                'A' => Letter::A_INV,
                'b' => Letter::B,
                'B' => Letter::B_INV,
                c if c.is_whitespace() => continue,
                _ => {
                    return Err(Error::Syntax {
                        position: pos,
                        expected: "one of a, A, b, B".into(),
                    })
                }
            };
            raw.push(l);
        }
        Ok(reduce(raw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce([Letter::A, Letter::A_INV]), FreeWord::identity());
        assert_eq!(reduce([Letter::A, Letter::B, Letter::B_INV]), w("a"));
        let raw = [
            Letter::A,
            Letter::B,
            Letter::A_INV,
            Letter::A,
            Letter::B_INV,
            Letter::A_INV,
        ];
        assert_eq!(reduce(raw), FreeWord::identity());
    }

    #[test]
    fn mul_inv_cyclic() {
        assert_eq!(w("a").mul(&w("A")), FreeWord::identity());
        assert_eq!(w("ab").inv(), w("BA"));
        let (core, conj) = w("Bab").cyclic_reduce();
        assert_eq!(core, w("a"));
        assert_eq!(conj, w("b"));
        assert_eq!(w("abAB").cyclic_reduce().1, FreeWord::identity());
        assert_eq!(w("aa").pow(-2), w("AAAA"));
    }

    #[test]
    fn cyclic_reduce_single_letter_and_empty() {
        assert_eq!(w("a").cyclic_reduce(), (w("a"), FreeWord::identity()));
        assert_eq!(
            FreeWord::identity().cyclic_reduce(),
            (FreeWord::identity(), FreeWord::identity())
        );
        let (core, conj) = w("abaBA").cyclic_reduce();
        assert_eq!(core, w("a"));
        assert_eq!(conj, w("BA"));
    }

    #[test]
    fn conjugator_examples() {
        assert_eq!(free_conjugator(&w("a"), &w("Bab")), Some(w("b")));
        assert_eq!(free_conjugator(&w("a"), &w("b")), None);
        assert_eq!(free_conjugator(&w("ab"), &w("ba")), Some(w("a")));
        assert_eq!(free_conjugator(&w(""), &w("")), Some(w("")));
        assert_eq!(free_conjugator(&w("ab"), &w("abab")), None);
        assert_eq!(free_conjugator(&w("ab"), &w("aB")), None);
    }

    #[test]
    fn display_merges_runs() {
        assert_eq!(w("aaBab").display_with(["ta", "tb"]), "ta^2 tb' ta tb");
        assert_eq!(w("AAA").to_string(), "a^-3");
        assert_eq!(FreeWord::identity().to_string(), "1");
        assert!("abc".parse::<FreeWord>().is_err());
    }

    #[test]
    fn reduced_word_enumeration() {
        for len in 0..=6 {
            let words = reduced_words_of_length(len);
            assert_eq!(words.len() as u64, reduced_word_count(len));
            assert!(words
                .iter()
                .all(|w| w.len() == len && FreeWord::is_reduced_sequence(w.letters())));
        }
        assert_eq!(reduced_words_up_to(2).len(), 1 + 4 + 12);
    }

    #[test]
    fn exponent_sums_and_swap() {
        assert_eq!(w("abAAb").exponent_vector(), [-1, 2]);
        assert_eq!(w("aB").swap_generators(), w("bA"));
    }
}
