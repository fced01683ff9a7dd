//! GL(2,Z) with the generators P, X, Y and the amalgam normal form
//! `P^r · U(X, Y) · X^(2s)`.
//!
//! Matrices act on row vectors, so they are the abelianizations of `p`, `x`
//! and `y` with the image of the i-th free generator in row i:
//!
//! ```text
//! P = [[0, 1], [1, 0]]   X = [[0, 1], [-1, 0]]   Y = [[0, 1], [-1, 1]]
//! ```
//!
//! `U` alternates between the syllable `X` and the syllables `Y`, `Y'`.
//! Since `X^2 = Y^3 = -I` is central and `P` inverts both `X` and `Y`, every
//! generator word collapses onto such a form by a stack pass (see
//! [`FormBuilder`]).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Sign;

/// Element orders in GL(2,Z) divide 4 or 6, so 12 bounds every finite order.
pub const MAX_FINITE_ORDER: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// 2×2 integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    e: [BigInt; 4],
}

impl Mat2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2 {
            e: [a.into(), b.into(), c.into(), d.into()],
        }
    }

    pub fn from_entries(e: [BigInt; 4]) -> Mat2 {
        Mat2 { e }
    }

    pub fn identity() -> Mat2 {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn entries(&self) -> &[BigInt; 4] {
        &self.e
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.e[2 * row + col]
    }

    pub fn det(&self) -> BigInt {
        &self.e[0] * &self.e[3] - &self.e[1] * &self.e[2]
    }

    pub fn is_identity(&self) -> bool {
        self.e[0].is_one() && self.e[1].is_zero() && self.e[2].is_zero() && self.e[3].is_one()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        Mat2 {
            e: [a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s],
        }
    }

    /// Inverse in GL(2,Z); `None` unless the determinant is a unit.
    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        let [a, b, c, d] = &self.e;
        if det.is_one() {
            Some(Mat2 {
                e: [d.clone(), -b, -c, a.clone()],
            })
        } else if det == -BigInt::one() {
            Some(Mat2 {
                e: [-d, b.clone(), c.clone(), -a],
            })
        } else {
            None
        }
    }

    pub fn pow(&self, n: i64) -> Option<Mat2> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut out = Mat2::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Some(out)
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            e: self.e.clone().map(|x| -x),
        }
    }

    /// Largest absolute entry.
    pub fn height(&self) -> BigInt {
        self.e.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    pub fn to_i64_rows(&self) -> Option<[[i64; 2]; 2]> {
        let v: Vec<i64> = self.e.iter().map(|x| x.to_i64()).collect::<Option<_>>()?;
        Some([[v[0], v[1]], [v[2], v[3]]])
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.e;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GlGen {
    P,
    X,
    Y,
}

pub fn gl_generator(g: GlGen) -> Mat2 {
    match g {
        GlGen::P => Mat2::new(0, 1, 1, 0),
        GlGen::X => Mat2::new(0, 1, -1, 0),
        GlGen::Y => Mat2::new(0, 1, -1, 1),
    }
}

/// Order of `m`, found by powering up to [`MAX_FINITE_ORDER`].
pub fn order_of(m: &Mat2) -> Order {
    let mut acc = m.clone();
    for n in 1..=MAX_FINITE_ORDER {
        if acc.is_identity() {
            return Order::Finite(n);
        }
        acc = acc.mul(m);
    }
    Order::Infinite
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Syllable {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "y'")]
    YInv,
}

impl Syllable {
    pub fn is_y_power(self) -> bool {
        !matches!(self, Syllable::X)
    }

    pub fn matrix(self) -> Mat2 {
        match self {
            Syllable::X => gl_generator(GlGen::X),
            Syllable::Y => gl_generator(GlGen::Y),
            Syllable::YInv => Mat2::new(1, -1, 1, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Syllable::X => "x",
            Syllable::Y => "y",
            Syllable::YInv => "y'",
        }
    }
}

/// `P^r · U · X^(2s)` with `U` an alternating syllable sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GlNormalForm {
    pub r: u8,
    pub syllables: Vec<Syllable>,
    pub s: u8,
}

impl GlNormalForm {
    pub fn identity() -> GlNormalForm {
        GlNormalForm::default()
    }

    /// True when `r, s ∈ {0, 1}` and the syllables alternate.
    pub fn is_valid(&self) -> bool {
        self.r <= 1
            && self.s <= 1
            && self
                .syllables
                .windows(2)
                .all(|p| p[0].is_y_power() != p[1].is_y_power())
    }

    pub fn to_matrix(&self) -> Mat2 {
        let mut m = if self.r == 1 {
            gl_generator(GlGen::P)
        } else {
            Mat2::identity()
        };
        for s in &self.syllables {
            m = m.mul(&s.matrix());
        }
        if self.s == 1 {
            m = m.neg();
        }
        m
    }

    /// Letters in upper case (`P X Y' X^2`), `1` for the identity.
    pub fn display_upper(&self) -> String {
        let mut parts = Vec::new();
        if self.r == 1 {
            parts.push("P".to_string());
        }
        parts.extend(self.syllables.iter().map(|s| s.name().to_uppercase()));
        if self.s == 1 {
            parts.push("X^2".to_string());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for GlNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_upper())
    }
}

pub fn gl_word_to_matrix(nf: &GlNormalForm) -> Mat2 {
    nf.to_matrix()
}

/// Collapses a stream of generator letters, appended on the right, onto
/// the normal form.
#[derive(Clone, Debug, Default)]
pub struct FormBuilder {
    form: GlNormalForm,
}

impl FormBuilder {
    pub fn new() -> FormBuilder {
        FormBuilder::default()
    }

    pub fn push(&mut self, g: GlGen, sign: Sign) {
        match (g, sign) {
            (GlGen::P, _) => self.push_p(),
            (GlGen::X, Sign::Pos) => self.push_syllable(Syllable::X),
            (GlGen::X, Sign::Neg) => {
                // X' = X · X^2
                self.push_syllable(Syllable::X);
                self.form.s ^= 1;
            }
            (GlGen::Y, Sign::Pos) => self.push_syllable(Syllable::Y),
            (GlGen::Y, Sign::Neg) => self.push_syllable(Syllable::YInv),
        }
    }

    pub fn push_syllable(&mut self, syl: Syllable) {
        let syls = &mut self.form.syllables;
        match (syls.last().copied(), syl) {
            (Some(Syllable::X), Syllable::X) => {
                syls.pop();
                self.form.s ^= 1;
            }
            (Some(Syllable::Y), Syllable::YInv) | (Some(Syllable::YInv), Syllable::Y) => {
                syls.pop();
            }
            // Y Y = Y' X^2 and Y' Y' = Y X^2
            (Some(Syllable::Y), Syllable::Y) => {
                syls.pop();
                syls.push(Syllable::YInv);
                self.form.s ^= 1;
            }
            (Some(Syllable::YInv), Syllable::YInv) => {
                syls.pop();
                syls.push(Syllable::Y);
                self.form.s ^= 1;
            }
            _ => syls.push(syl),
        }
    }

    /// `P^r U X^2s · P = P^(r+1) · (P U P) · X^2s`, and conjugation by P
    /// inverts every syllable.
    fn push_p(&mut self) {
        self.form.r ^= 1;
        for syl in self.form.syllables.iter_mut() {
            *syl = match *syl {
                Syllable::X => {
                    self.form.s ^= 1;
                    Syllable::X
                }
                Syllable::Y => Syllable::YInv,
                Syllable::YInv => Syllable::Y,
            };
        }
    }

    pub fn finish(self) -> GlNormalForm {
        self.form
    }
}

/// Normal form of a generator word in P, X, Y.
pub fn normalize_word(word: &[(GlGen, Sign)]) -> GlNormalForm {
    let mut b = FormBuilder::new();
    for &(g, s) in word {
        b.push(g, s);
    }
    b.finish()
}

/// Unique normal form of `m`.
///
/// The determinant fixes `r`. The SL(2,Z) part is brought to upper triangular
/// shape by Euclidean descent on the first column using `T = Y'X` (row
/// addition) and `X` (row swap); the recorded left factors, inverted, give a
/// generator word that [`FormBuilder`] collapses.
pub fn gl_normal_form(m: &Mat2) -> Result<GlNormalForm> {
    let det = m.det();
    let mut b = FormBuilder::new();
    let mut cur = if det.is_one() {
        m.clone()
    } else if det == -BigInt::one() {
        b.push(GlGen::P, Sign::Pos);
        gl_generator(GlGen::P).mul(m)
    } else {
        return Err(Error::NotInvertible(det.to_string()));
    };

    enum Step {
        T(i64),
        X,
    }
    let mut steps = Vec::new();
    while !cur.e[2].is_zero() {
        let q = &cur.e[0] / &cur.e[2];
        if !q.is_zero() {
            let k = q.to_i64().expect("quotient fits in i64");
            // T^-k · cur: row0 -= k · row1
            let [a, bb, c, d] = &cur.e;
            cur = Mat2 {
                e: [a - &q * c, bb - &q * d, c.clone(), d.clone()],
            };
            steps.push(Step::T(-k));
        }
        cur = gl_generator(GlGen::X).mul(&cur);
        steps.push(Step::X);
    }
    // cur = ±[[1, t], [0, 1]] up to sign, i.e. T^t or X^2 T^-t
    let negative = cur.e[0].is_negative();
    let t = cur.e[1].to_i64().expect("entry fits in i64");
    let t = if negative { -t } else { t };

    let push_t = |b: &mut FormBuilder, k: i64| {
        for _ in 0..k.unsigned_abs() {
            if k > 0 {
                b.push(GlGen::Y, Sign::Neg);
                b.push(GlGen::X, Sign::Pos);
            } else {
                b.push(GlGen::X, Sign::Neg);
                b.push(GlGen::Y, Sign::Pos);
            }
        }
    };
    // m' = step_1⁻¹ · ... · step_n⁻¹ · cur
    for step in &steps {
        match *step {
            Step::T(k) => push_t(&mut b, -k),
            Step::X => b.push(GlGen::X, Sign::Neg),
        }
    }
    if negative {
        b.push(GlGen::X, Sign::Pos);
        b.push(GlGen::X, Sign::Pos);
    }
    push_t(&mut b, t);

    let nf = b.finish();
    if nf.to_matrix() != *m {
        return Err(Error::InternalInconsistency(format!(
            "normal form {nf} does not evaluate to {m}"
        )));
    }
    Ok(nf)
}

/// Number of alternating syllable sequences of length `k`:
/// those starting with `X` have `⌊k/2⌋` free Y-signs, the others `⌈k/2⌉`.
pub fn alternating_count(k: usize) -> u64 {
    if k == 0 {
        1
    } else {
        (1u64 << (k / 2)) + (1u64 << k.div_ceil(2))
    }
}

fn alternating_of_length(k: usize) -> Vec<Vec<Syllable>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for start_x in [true, false] {
        let mut partial: Vec<Vec<Syllable>> = vec![Vec::new()];
        for i in 0..k {
            let x_slot = (i % 2 == 0) == start_x;
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    let choices: &[Syllable] = if x_slot {
                        &[Syllable::X]
                    } else {
                        &[Syllable::Y, Syllable::YInv]
                    };
                    choices.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

/// Every alternating syllable sequence with at most `max_syllables`
/// syllables, once each, shortest first. With `with_rs` each pattern is
/// emitted with all four `(r, s)` pairs, otherwise with `r = s = 0`.
pub fn enumerate_alternating(
    max_syllables: usize,
    with_rs: bool,
) -> impl Iterator<Item = GlNormalForm> {
    let rs: &'static [(u8, u8)] = if with_rs {
        &[(0, 0), (0, 1), (1, 0), (1, 1)]
    } else {
        &[(0, 0)]
    };
    (0..=max_syllables)
        .flat_map(alternating_of_length)
        .flat_map(move |syllables| {
            rs.iter().map(move |&(r, s)| GlNormalForm {
                r,
                syllables: syllables.clone(),
                s,
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gen(g: GlGen) -> Mat2 {
        gl_generator(g)
    }

    #[test]
    fn presentation_relations() {
        let (p, x, y) = (gen(GlGen::P), gen(GlGen::X), gen(GlGen::Y));
        assert!(x.pow(4).unwrap().is_identity());
        assert!(p.pow(2).unwrap().is_identity());
        assert!(p.mul(&x).pow(2).unwrap().is_identity());
        assert!(p.mul(&y).pow(2).unwrap().is_identity());
        assert_eq!(x.pow(2), y.pow(3));
        assert_eq!(x.pow(2).unwrap(), Mat2::identity().neg());
    }

    #[test]
    fn determinants() {
        assert_eq!(gen(GlGen::P).det(), BigInt::from(-1));
        assert_eq!(gen(GlGen::X).det(), BigInt::from(1));
        assert_eq!(gen(GlGen::Y).det(), BigInt::from(1));
    }

    #[test]
    fn orders() {
        assert_eq!(order_of(&Mat2::identity()), Order::Finite(1));
        assert_eq!(order_of(&gen(GlGen::X)), Order::Finite(4));
        assert_eq!(order_of(&gen(GlGen::Y)), Order::Finite(6));
        assert_eq!(
            order_of(&gen(GlGen::X).mul(&gen(GlGen::Y))),
            Order::Infinite
        );
        assert_eq!(order_of(&Mat2::new(1, 1, 0, 1)), Order::Infinite);
    }

    #[test]
    fn normal_form_examples() {
        let p = gl_normal_form(&gen(GlGen::P)).unwrap();
        assert_eq!(
            p,
            GlNormalForm {
                r: 1,
                syllables: vec![],
                s: 0
            }
        );
        let minus = gl_normal_form(&Mat2::identity().neg()).unwrap();
        assert_eq!(
            minus,
            GlNormalForm {
                r: 0,
                syllables: vec![],
                s: 1
            }
        );
        assert_eq!(
            gl_normal_form(&Mat2::identity()).unwrap(),
            GlNormalForm::identity()
        );
        let x_inv = gl_normal_form(&gen(GlGen::X).inverse().unwrap()).unwrap();
        assert_eq!(
            x_inv,
            GlNormalForm {
                r: 0,
                syllables: vec![Syllable::X],
                s: 1
            }
        );
        assert!(gl_normal_form(&Mat2::new(2, 0, 0, 1)).is_err());
    }

    #[test]
    fn builder_collapses_relations() {
        use Sign::*;
        // Y^3 = X^2, P X P = X', (PY)^2 = 1
        let y3 = normalize_word(&[(GlGen::Y, Pos), (GlGen::Y, Pos), (GlGen::Y, Pos)]);
        assert_eq!(
            y3,
            GlNormalForm {
                r: 0,
                syllables: vec![],
                s: 1
            }
        );
        let pxp = normalize_word(&[(GlGen::P, Pos), (GlGen::X, Pos), (GlGen::P, Pos)]);
        assert_eq!(pxp, normalize_word(&[(GlGen::X, Neg)]));
        let pypy = normalize_word(&[
            (GlGen::P, Pos),
            (GlGen::Y, Pos),
            (GlGen::P, Pos),
            (GlGen::Y, Pos),
        ]);
        assert_eq!(pypy, GlNormalForm::identity());
    }

    #[test]
    fn enumeration_counts() {
        for k in 0..=8 {
            let n = enumerate_alternating(k, false)
                .filter(|f| f.syllables.len() == k)
                .count() as u64;
            assert_eq!(n, alternating_count(k), "k = {k}");
        }
        assert_eq!(enumerate_alternating(0, true).count(), 4);
        let one: Vec<_> = enumerate_alternating(1, false)
            .map(|f| f.syllables)
            .collect();
        assert_eq!(
            one,
            vec![
                vec![],
                vec![Syllable::X],
                vec![Syllable::Y],
                vec![Syllable::YInv]
            ]
        );
    }

    #[test]
    fn enumerated_forms_are_valid_distinct_and_round_trip() {
        let mut seen = HashSet::new();
        for nf in enumerate_alternating(6, true) {
            assert!(nf.is_valid());
            let m = nf.to_matrix();
            assert!(seen.insert(m.clone()), "duplicate matrix for {nf}");
            assert_eq!(gl_normal_form(&m).unwrap(), nf);
        }
    }
}
