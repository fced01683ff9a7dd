//! Table-driven checks: presentations, the relations satisfied by the vertex
//! and edge groups of the graph-of-groups decompositions, and the bounded
//! enumerations behind the finite-by-cyclic subgroup analysis.
//!
//! Statements that quantify over all words are checked exhaustively up to a
//! bound and reported as [`Status::Evidence`], never as [`Status::Pass`].

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aut::{AutElt, AutGen};
use crate::expr::{hol, parse_word, WordExpr};
use crate::gl2z::{
    alternating_count, enumerate_alternating, gl_generator, GlGen, GlNormalForm, Mat2, Order,
    Syllable,
};
use crate::hol::{display_hol_word, generator_letters, HolElt, HolGen, HolKey};
use crate::normal_form::{compute_nf, eval_nf};
use crate::report::{ClaimReport, Status};
use crate::torsion::{
    classify, lemma_identity_suite, representative_orders, ClassifyResult, TorsionClass,
};
use crate::word::{reduced_word_count, reduced_words_of_length, FreeWord, Sign};

fn expr(s: &str) -> WordExpr {
    parse_word(s).unwrap_or_else(|e| panic!("bad static word {s:?}: {e}"))
}

/// Evaluates a word in `p, x, y, ta, tb` as an automorphism.
pub fn aut_of(w: &WordExpr) -> Option<AutElt> {
    let mut word = Vec::new();
    for (g, s) in w.letters() {
        let ag = match g {
            HolGen::P => AutGen::P,
            HolGen::X => AutGen::X,
            HolGen::Y => AutGen::Y,
            HolGen::Ta => AutGen::Ta,
            HolGen::Tb => AutGen::Tb,
            HolGen::A | HolGen::B => return None,
        };
        word.push((ag, s));
    }
    Some(AutElt::from_word(&word))
}

/// Image in GL(2,Z) under `p ↦ P, x ↦ X, y ↦ Y` and `ta, tb, a, b ↦ 1`.
pub fn gl_image(w: &WordExpr) -> Mat2 {
    let mut m = Mat2::identity();
    for (g, s) in w.letters() {
        let gen = match g {
            HolGen::P => GlGen::P,
            HolGen::X => GlGen::X,
            HolGen::Y => GlGen::Y,
            _ => continue,
        };
        let mut factor = gl_generator(gen);
        if s == Sign::Neg {
            factor = factor.inverse().expect("generator is invertible");
        }
        m = m.mul(&factor);
    }
    m
}

const AUT_RELATIONS: [(&str, &str); 11] = [
    ("x^4", "1"),
    ("p^2", "1"),
    ("p x p x", "1"),
    ("p y p y", "tb"),
    ("x^2", "y^3 tb' ta"),
    ("p' ta p", "tb"),
    ("x' ta x", "tb"),
    ("y' ta y", "tb"),
    ("p' tb p", "ta"),
    ("x' tb x", "ta'"),
    ("y' tb y", "ta' tb"),
];

const ACTION_RELATIONS: [(&str, &str); 10] = [
    ("ta' a ta", "a"),
    ("ta' b ta", "a' b a"),
    ("tb' a tb", "b' a b"),
    ("tb' b tb", "b"),
    ("p' a p", "b"),
    ("p' b p", "a"),
    ("x' a x", "b"),
    ("x' b x", "a'"),
    ("y' a y", "b"),
    ("y' b y", "a' b"),
];

const GL_RELATIONS: [(&str, &str); 5] = [
    ("x^4", "1"),
    ("p^2", "1"),
    ("p x p x", "1"),
    ("p y p y", "1"),
    ("x^2", "y^3"),
];

fn side(s: &str) -> WordExpr {
    if s == "1" {
        WordExpr::default()
    } else {
        expr(s)
    }
}

fn upper(s: &str) -> String {
    s.chars()
        .map(|c| {
            if matches!(c, 'p' | 'x' | 'y') {
                c.to_ascii_uppercase()
            } else {
                c
            }
        })
        .collect()
}

/// Every relation of the Aut(F2), GL(2,Z) and Hol(F2) presentations, each
/// evaluated in its own group.
pub fn verify_presentations() -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for (i, (l, r)) in AUT_RELATIONS.iter().enumerate() {
        let (lhs, rhs) = (aut_of(&side(l)).unwrap(), aut_of(&side(r)).unwrap());
        out.push(ClaimReport::check(
            format!("presentation.aut.{:02}", i + 1),
            lhs == rhs,
            format!("{l} = {r} in Aut(F2): left [{lhs}], right [{rhs}]"),
        ));
    }
    for (i, (l, r)) in GL_RELATIONS.iter().enumerate() {
        let (lhs, rhs) = (gl_image(&side(l)), gl_image(&side(r)));
        out.push(ClaimReport::check(
            format!("presentation.gl2z.{:02}", i + 1),
            lhs == rhs,
            format!(
                "{} = {} in GL(2,Z): left {lhs}, right {rhs}",
                upper(l),
                upper(r)
            ),
        ));
    }
    for (i, (l, r)) in AUT_RELATIONS
        .iter()
        .chain(ACTION_RELATIONS.iter())
        .enumerate()
    {
        let (lhs, rhs) = (side(l).eval(), side(r).eval());
        out.push(ClaimReport::check(
            format!("presentation.hol.{:02}", i + 1),
            lhs == rhs,
            format!("{l} = {r} in Hol(F2): left [{lhs}], right [{rhs}]"),
        ));
    }
    let id = HolElt::identity();
    out.push(ClaimReport::check(
        "presentation.sanity",
        id == HolElt::identity(),
        "1 = 1",
    ));
    out
}

fn order_claim(id: &str, w: &str, want: Order) -> ClaimReport {
    let got = hol(w).order();
    ClaimReport::check(
        id,
        got == want,
        format!("order({w}) = {got}, expected {want}"),
    )
}

/// Klein four-group: two distinct commuting involutions.
fn klein_claim(id: &str, u: &str, v: &str) -> ClaimReport {
    let (eu, ev) = (hol(u), hol(v));
    let mut problems = Vec::new();
    for (name, e) in [(u, &eu), (v, &ev)] {
        if e.order() != Order::Finite(2) {
            problems.push(format!("order({name}) = {}", e.order()));
        }
    }
    if eu == ev {
        problems.push(format!("{u} = {v}"));
    }
    let (uv, vu) = (eu.mul(&ev), ev.mul(&eu));
    if uv != vu {
        problems.push(format!("({u})({v}) = [{uv}] but ({v})({u}) = [{vu}]"));
    } else if uv.order() != Order::Finite(2) {
        problems.push(format!("order of the product is {}", uv.order()));
    }
    let details = if problems.is_empty() {
        format!("<{u}, {v}>: both of order 2, commuting, product of order 2")
    } else {
        format!(
            "<{u}, {v}> is not a Klein four-group: {}",
            problems.join("; ")
        )
    };
    ClaimReport::check(id, problems.is_empty(), details)
}

/// Dihedral group of order `2n` on a rotation `r` and a reflection `s`.
fn dihedral_claim(id: &str, r: &str, s: &str, n: u32) -> ClaimReport {
    let (er, es) = (hol(r), hol(s));
    let mut problems = Vec::new();
    if er.order() != Order::Finite(n) {
        problems.push(format!("order({r}) = {}, expected {n}", er.order()));
    }
    if es.order() != Order::Finite(2) {
        problems.push(format!("order({s}) = {}, expected 2", es.order()));
    }
    let srs = es.mul(&er).mul(&es);
    if srs != er.inv() {
        problems.push(format!("({s})({r})({s}) = [{srs}] is not ({r})'"));
    }
    let details = if problems.is_empty() {
        format!("<{r}, {s}>: rotation of order {n}, reflection inverts it")
    } else {
        format!(
            "<{r}, {s}> fails the dihedral relations: {}",
            problems.join("; ")
        )
    };
    ClaimReport::check(id, problems.is_empty(), details)
}

fn commute_claim(id: &str, u: &HolElt, v: &HolElt, names: (&str, &str)) -> ClaimReport {
    let (uv, vu) = (u.mul(v), v.mul(u));
    let details = if uv == vu {
        format!("[{}, {}] = 1", names.0, names.1)
    } else {
        format!(
            "[{}, {}] != 1: {}{} = [{uv}] but {}{} = [{vu}]",
            names.0, names.1, names.0, names.1, names.1, names.0
        )
    };
    ClaimReport::check(id, uv == vu, details)
}

fn equal_claim(id: &str, lhs: &HolElt, rhs: &HolElt, stmt: &str) -> ClaimReport {
    let details = if lhs == rhs {
        stmt.to_string()
    } else {
        format!("{stmt} fails: left [{lhs}], right [{rhs}]")
    };
    ClaimReport::check(id, lhs == rhs, details)
}

/// Generator orders, commutations and dihedral relations for every vertex and
/// edge group of the decompositions, the Klein four-subgroups considered for
/// `D2 ⋊ Z`, and the relations of the worked Tietze example.
pub fn verify_decomposition_relations() -> Vec<ClaimReport> {
    let two = Order::Finite(2);
    let mut out = vec![
        // Aut(F2) = B *_D C, each factor again an amalgam of finite groups
        dihedral_claim("decomp.aut.B.vertex-D4", "x", "p", 4),
        order_claim("decomp.aut.B.edge", "p x", two),
        klein_claim("decomp.aut.B.vertex-D2", "p x", "x^2 tb"),
        dihedral_claim("decomp.aut.C.vertex-D3", "y^2 tb' ta", "p", 3),
        order_claim("decomp.aut.C.edge", "p", two),
        klein_claim("decomp.aut.C.vertex-D2", "p", "x^2"),
        klein_claim("decomp.aut.D.vertex-D2", "p", "x^2"),
        order_claim("decomp.aut.D.vertex-Z2", "x^2 tb", two),
    ];
    for (w, n) in [
        ("p", 2),
        ("p x", 2),
        ("x^2 tb", 2),
        ("p x^3 tb", 2),
        ("x^2", 2),
        ("p x^2", 2),
        ("y^2 tb' ta", 3),
        ("x", 4),
    ] {
        out.push(order_claim(
            &format!("decomp.aut.torsion.{}", w.replace(' ', "")),
            w,
            Order::Finite(n),
        ));
    }
    out.extend([
        // F2 ⋊ B
        dihedral_claim("decomp.hol.B.D4.vertex-D4", "x", "p", 4),
        order_claim("decomp.hol.B.D4.edge", "p x", two),
        klein_claim("decomp.hol.B.D4.vertex-D2", "p x", "x^2 b"),
        klein_claim("decomp.hol.B.D2.vertex-1", "p x", "x^2 tb"),
        order_claim("decomp.hol.B.D2.edge-1", "p x", two),
        klein_claim("decomp.hol.B.D2.vertex-2", "p x", "x^2 tb b'"),
        order_claim("decomp.hol.B.D2.edge-2", "x^2 tb b'", two),
        klein_claim("decomp.hol.B.D2.vertex-3", "p x a", "x^2 tb b'"),
        order_claim("decomp.hol.B.Z2.base", "p x", two),
        commute_claim(
            "decomp.hol.B.Z2.stable-letter",
            &hol("p x"),
            &hol("b"),
            ("px", "b"),
        ),
        order_claim("decomp.hol.B.Z2.free-factor", "p x a", two),
        // F2 ⋊ C
        dihedral_claim("decomp.hol.C.D3.vertex-1", "y^2 tb'", "p", 3),
        dihedral_claim("decomp.hol.C.D3.vertex-2", "y^2 tb' a", "p", 3),
        order_claim("decomp.hol.C.D3.edge", "p", two),
        klein_claim("decomp.hol.C.D2.vertex-D2", "p", "x^2"),
        order_claim("decomp.hol.C.D2.vertex-Z2", "x^2 b", two),
        order_claim("decomp.hol.C.Z2.factor-1", "p", two),
        order_claim("decomp.hol.C.Z2.factor-2", "p b a'", two),
        // F2 ⋊ D
        klein_claim("decomp.hol.D.D2.vertex-D2", "p", "x^2"),
        order_claim("decomp.hol.D.D2.vertex-Z2", "x^2 b", two),
        order_claim("decomp.hol.D.Z2.factor-1", "x^2 tb", two),
        order_claim("decomp.hol.D.Z2.factor-2", "x^2 tb b", two),
        order_claim("decomp.hol.D.Z2.factor-3", "x^2 tb b' a", two),
    ]);
    // Klein four-subgroups up to conjugacy
    for (i, (u, v)) in [
        ("x^2", "p"),
        ("p x", "x^2"),
        ("p x", "x^2 b"),
        ("p x", "x^2 tb"),
        ("p x", "x^2 tb b'"),
        ("p x a", "x^2 tb b'"),
    ]
    .iter()
    .enumerate()
    {
        out.push(klein_claim(
            &format!("decomp.klein-subgroup.{}", i + 1),
            u,
            v,
        ));
    }
    out.extend(tietze_example());
    out
}

/// `F2 ⋊ <px, x^2 tb>` rewritten on `ξ1 = px`, `ξ2 = x^2 tb`, `ζ2 = b ξ2`,
/// `ξ3 = ξ1 a`.
fn tietze_example() -> Vec<ClaimReport> {
    let x1 = hol("p x");
    let x2 = hol("x^2 tb");
    let (a, b) = (hol("a"), hol("b"));
    let z2 = b.mul(&x2);
    let x3 = x1.mul(&a);
    let id = HolElt::identity();
    let sq = |e: &HolElt| e.mul(e);
    let conj3 = |s: &HolElt, m: &HolElt| s.mul(m).mul(s);
    vec![
        equal_claim("tietze.xi1-squared", &sq(&x1), &id, "xi1^2 = 1"),
        equal_claim("tietze.xi2-squared", &sq(&x2), &id, "xi2^2 = 1"),
        commute_claim("tietze.xi1-xi2", &x1, &x2, ("xi1", "xi2")),
        equal_claim("tietze.xi1-a", &conj3(&x1, &a), &a.inv(), "xi1 a xi1 = a'"),
        equal_claim("tietze.xi1-b", &conj3(&x1, &b), &b, "xi1 b xi1 = b"),
        equal_claim(
            "tietze.xi2-a",
            &conj3(&x2, &a),
            &hol("b' a' b"),
            "xi2 a xi2 = b' a' b",
        ),
        equal_claim("tietze.xi2-b", &conj3(&x2, &b), &b.inv(), "xi2 b xi2 = b'"),
        equal_claim("tietze.zeta2-squared", &sq(&z2), &id, "zeta2^2 = 1"),
        equal_claim(
            "tietze.zeta2-a",
            &conj3(&z2, &a),
            &a.inv(),
            "zeta2 a zeta2 = a'",
        ),
        commute_claim("tietze.xi1-zeta2", &x1, &z2, ("xi1", "zeta2")),
        equal_claim("tietze.xi3-squared", &sq(&x3), &id, "xi3^2 = 1"),
        commute_claim("tietze.zeta2-xi3", &z2, &x3, ("zeta2", "xi3")),
    ]
}

/// `<px, b>` is `Z/2 × Z`.
pub fn check_zxz() -> ClaimReport {
    let px = hol("p x");
    let b = hol("b");
    let sq = px.mul(&px).is_identity();
    let inf = b.order() == Order::Infinite;
    let comm = px.commutes_with(&b);
    ClaimReport::check(
        "zxz",
        sq && inf && comm,
        format!(
            "(px)^2 = 1: {sq}; order(b) infinite: {inf}; [px, b] = 1: {comm}; so <px, b> = Z/2 x Z"
        ),
    )
}

/// For every alternating `U` with 1 to `max_syllables` syllables, checks
/// `U P U' ≠ P` and collects the solutions of `U P U' = P X^2`, which must be
/// exactly `{X}`.
pub fn check_upu(max_syllables: usize) -> ClaimReport {
    let p = gl_generator(GlGen::P);
    let px2 = p.mul(&gl_generator(GlGen::X).pow(2).expect("power"));
    let mut checked = 0u64;
    let mut fixes_p = Vec::new();
    let mut to_px2 = Vec::new();
    for nf in enumerate_alternating(max_syllables, false).filter(|f| !f.syllables.is_empty()) {
        checked += 1;
        let u = nf.to_matrix();
        let conj = u.mul(&p).mul(&u.inverse().expect("invertible"));
        if conj == p {
            fixes_p.push(nf.display_upper());
        }
        if conj == px2 {
            to_px2.push(nf.display_upper());
        }
    }
    let expected: u64 = (1..=max_syllables).map(alternating_count).sum();
    let only_x = to_px2
        == [GlNormalForm {
            r: 0,
            syllables: vec![Syllable::X],
            s: 0,
        }
        .display_upper()];
    let ok = fixes_p.is_empty() && only_x && checked == expected;
    let details = format!(
        "{checked} alternating U with 1..={max_syllables} syllables (closed form {expected}); \
         U P U' = P for {} of them [{}]; U P U' = P X^2 exactly for [{}]",
        fixes_p.len(),
        fixes_p.join(", "),
        to_px2.join(", ")
    );
    ClaimReport::new(
        "upu",
        if ok {
            Status::Evidence(max_syllables as u64)
        } else {
            Status::Fail
        },
        details,
    )
}

/// For every reduced `w` in `ta, tb` with `1 ≤ |w| ≤ max_len`, the swapped word
/// is reduced and `swap(w) · w'` is reduced and cyclically reduced as
/// written, hence nontrivial.
pub fn check_word_swap(max_len: usize) -> ClaimReport {
    let mut checked = 0u64;
    let mut expected = 0u64;
    let mut violations = Vec::new();
    for len in 1..=max_len {
        expected += reduced_word_count(len);
        for w in reduced_words_of_length(len) {
            checked += 1;
            let sw = w.swap_generators();
            let raw = sw.concat_raw(&w.inv());
            let reduced =
                FreeWord::is_reduced_sequence(sw.letters()) && FreeWord::is_reduced_sequence(&raw);
            let cyclic = raw.len() < 2 || !raw[0].cancels(raw[raw.len() - 1]);
            if !(reduced && cyclic && !raw.is_empty()) && violations.len() < 5 {
                violations.push(w.display_with(["ta", "tb"]));
            }
        }
    }
    let ok = violations.is_empty() && checked == expected;
    let details = format!(
        "{checked} reduced words of length 1..={max_len} (closed form {expected}); violations: [{}]",
        violations.join(", ")
    );
    ClaimReport::new(
        "swap",
        if ok {
            Status::Evidence(max_len as u64)
        } else {
            Status::Fail
        },
        details,
    )
}

/// A uniformly random generator word of exactly `len` letters.
pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> Vec<(HolGen, Sign)> {
    let letters = generator_letters();
    (0..len)
        .map(|_| letters[rng.gen_range(0..letters.len())])
        .collect()
}

/// Normal-form round trip on `samples` random words of length at most
/// `max_len`, drawn from a seeded generator.
pub fn nf_round_trip_sample(seed: u64, samples: usize, max_len: usize) -> ClaimReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let word = random_word(&mut rng, len);
        let w = HolElt::from_word(&word);
        let ok = match compute_nf(&w) {
            Ok(nf) => nf.is_valid() && eval_nf(&nf) == w,
            Err(_) => false,
        };
        if !ok {
            return ClaimReport::new(
                "nf-round-trip",
                Status::Fail,
                format!("round trip fails for {}", display_hol_word(&word)),
            );
        }
    }
    ClaimReport::new(
        "nf-round-trip",
        Status::Evidence(samples as u64),
        format!("eval_nf(compute_nf(W)) = W on {samples} random words of length <= {max_len}, seed {seed}"),
    )
}

/// Elements of the Cayley ball of the given radius over the fourteen
/// generator letters, each once, with a shortest generator word.
pub fn cayley_ball(radius: usize) -> Vec<(HolElt, Vec<(HolGen, Sign)>)> {
    let letters: Vec<((HolGen, Sign), HolElt)> = generator_letters()
        .into_iter()
        .map(|(g, s)| ((g, s), HolElt::letter(g, s)))
        .collect();
    let mut seen: HashSet<HolKey> = HashSet::from([HolElt::identity().key()]);
    let mut all = vec![(HolElt::identity(), Vec::new())];
    let mut frontier_start = 0;
    for _ in 0..radius {
        let frontier_end = all.len();
        for i in frontier_start..frontier_end {
            for (l, e) in &letters {
                let next = all[i].0.mul(e);
                if seen.insert(next.key()) {
                    let mut w = all[i].1.clone();
                    w.push(*l);
                    all.push((next, w));
                }
            }
        }
        frontier_start = frontier_end;
    }
    all
}

#[derive(Clone, Debug, Default)]
pub struct ScanReport {
    pub radius: usize,
    pub depth: usize,
    pub ball_size: usize,
    pub identity_count: usize,
    pub torsion: usize,
    pub per_class: BTreeMap<TorsionClass, usize>,
    pub certificates_verified: usize,
    pub unknown: Vec<String>,
    /// Number of ball elements meeting each normalizing condition.
    pub condition_hits: Vec<(String, usize)>,
    pub violations: Vec<String>,
}

impl ScanReport {
    pub fn to_reports(&self) -> Vec<ClaimReport> {
        let bound = self.radius as u64;
        let classes: Vec<String> = self
            .per_class
            .iter()
            .map(|(c, n)| format!("{c}: {n}"))
            .collect();
        let classify_status = if self.unknown.is_empty() {
            Status::Evidence(bound)
        } else {
            Status::Fail
        };
        let hits: Vec<String> = self
            .condition_hits
            .iter()
            .map(|(c, n)| format!("{c}: {n}"))
            .collect();
        let cond_status = if self.violations.is_empty() {
            Status::Evidence(bound)
        } else {
            Status::Fail
        };
        vec![
            ClaimReport::check(
                "scan.identity-once",
                self.identity_count == 1,
                format!("identity occurs {} time(s) among {} ball elements", self.identity_count, self.ball_size),
            ),
            ClaimReport::new(
                "scan.classification",
                classify_status,
                format!(
                    "radius {}, depth {}: {} elements, {} nontrivial of finite order, {} certificates verified; \
                     per class [{}]; unclassified [{}]",
                    self.radius,
                    self.depth,
                    self.ball_size,
                    self.torsion,
                    self.certificates_verified,
                    classes.join(", "),
                    self.unknown.join(", ")
                ),
            ),
            ClaimReport::new(
                "scan.normalizers",
                cond_status,
                format!(
                    "elements g with the stated conjugation condition [{}]; infinite-order among them [{}]",
                    hits.join(", "),
                    self.violations.join(", ")
                ),
            ),
        ]
    }
}

/// Enumerates the ball, classifies every finite-order element, and checks that
/// each element normalizing `<t>` for `t` of order 3 or 4 (`g⁻¹ t g = t^±1`),
/// or normalizing `<p, x^2>` in the two admissible ways, has finite order.
pub fn scan_torsion_ball(radius: usize, classify_depth: usize) -> ScanReport {
    let ball = cayley_ball(radius);
    let mut rep = ScanReport {
        radius,
        depth: classify_depth,
        ball_size: ball.len(),
        ..Default::default()
    };
    let cyclic_targets: Vec<(&str, HolElt)> = ["y^2 tb'", "y^2 tb' a", "x"]
        .into_iter()
        .map(|w| (w, hol(w)))
        .collect();
    let cyclic_inverses: Vec<HolElt> = cyclic_targets.iter().map(|(_, t)| t.inv()).collect();
    let (p, px2, x2) = (hol("p"), hol("p x^2"), hol("x^2"));
    let mut hits = vec![0usize; cyclic_targets.len() + 2];

    for (g, word) in &ball {
        if g.is_identity() {
            rep.identity_count += 1;
        }
        let order = g.order();
        if order.is_finite() && !g.is_identity() {
            rep.torsion += 1;
            match classify(g, classify_depth) {
                ClassifyResult::Classified(cert) => {
                    if cert.verify(g) {
                        rep.certificates_verified += 1;
                    }
                    *rep.per_class.entry(cert.class).or_default() += 1;
                }
                _ => rep.unknown.push(display_hol_word(word)),
            }
        }
        let mut note = |slot: usize, label: &str| {
            hits[slot] += 1;
            if !order.is_finite() {
                rep.violations
                    .push(format!("{} ({label})", display_hol_word(word)));
            }
        };
        for (i, (name, t)) in cyclic_targets.iter().enumerate() {
            let c = t.conjugate_by(g);
            if c == *t || c == cyclic_inverses[i] {
                note(i, &format!("normalizes <{name}>"));
            }
        }
        let cp = p.conjugate_by(g);
        if x2.conjugate_by(g) == x2 {
            if cp == p {
                note(cyclic_targets.len(), "fixes p and x^2");
            } else if cp == px2 {
                note(cyclic_targets.len() + 1, "sends p to p x^2, fixes x^2");
            }
        }
    }
    let mut labels: Vec<String> = cyclic_targets
        .iter()
        .map(|(n, _)| format!("g' ({n}) g = ({n})^+-1"))
        .collect();
    labels.push("g' p g = p, g' x^2 g = x^2".into());
    labels.push("g' p g = p x^2, g' x^2 g = x^2".into());
    rep.condition_hits = labels.into_iter().zip(hits).collect();
    rep
}

pub const DEFAULT_BOUND: usize = 10;
pub const DEFAULT_SAMPLES: usize = 2000;
pub const SAMPLE_WORD_LEN: usize = 8;

/// Everything except the ball scan, in a fixed order.
pub fn verify_all(bound: usize, seed: u64) -> Vec<ClaimReport> {
    let mut out = verify_presentations();
    out.extend(verify_decomposition_relations());
    out.extend(lemma_identity_suite());
    out.extend(representative_orders());
    out.push(check_zxz());
    out.push(check_upu(bound));
    out.push(check_word_swap(bound));
    out.push(nf_round_trip_sample(seed, DEFAULT_SAMPLES, SAMPLE_WORD_LEN));
    out
}
