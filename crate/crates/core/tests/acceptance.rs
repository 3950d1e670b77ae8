//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use common::*;
use num::{One, Zero};
use scf_hopf::base_theory::{BaseElement, BaseTheory};
use scf_hopf::characters::LinearCharacter;
use scf_hopf::combinatorics::*;
use scf_hopf::hopf::HopfContext;
use scf_hopf::nsym::{descent_class, structure_constants, NSymBridge, NSymKind};
use scf_hopf::scalar::int;
use scf_hopf::tensor::{BasisWord, Letter, TensorElement, TensorSquare};
use scf_hopf::Scalar;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn all_words(d: usize, max: usize) -> Vec<BasisWord> {
    (0..=max).flat_map(|n| BasisWord::all(d, n)).collect()
}

fn both_contexts(q: u64) -> Vec<(&'static str, HopfContext)> {
    vec![
        ("(1,1,1)", trivial_ctx(&two_dim(q))),
        ("(reg,1,β)", h_ctx(q)),
    ]
}

// ---------------------------------------------------------------------------
// 1 and 9: Hopf axioms

type Cube = BTreeMap<(BasisWord, BasisWord, BasisWord), Scalar>;

fn add<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    let e = map.entry(k).or_insert_with(Scalar::zero);
    *e += c;
}

fn strip<K: Ord>(mut map: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    map.retain(|_, c| !c.is_zero());
    map
}

fn hopf_axioms(ctx: &HopfContext, max_total: usize) -> Outcome {
    let d = ctx.theory().dim();
    let words = all_words(d, max_total);
    let unit = TensorElement::unit();
    let mut delta: BTreeMap<BasisWord, TensorSquare> = BTreeMap::new();
    let mut anti: BTreeMap<BasisWord, TensorElement> = BTreeMap::new();
    for w in &words {
        delta.insert(w.clone(), ctx.coproduct(&w.to_element()).unwrap());
        anti.insert(w.clone(), ctx.antipode_closed(&w.to_element()).unwrap());
    }
    for w in &words {
        let x = w.to_element();
        ensure(
            ctx.product(&x, &unit).unwrap() == x && ctx.product(&unit, &x).unwrap() == x,
            || format!("unit law fails on {w:?}"),
        )?;
        let dw = &delta[w];
        // counit: (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
        let mut left = TensorElement::zero(w.degree);
        let mut right = TensorElement::zero(w.degree);
        for ((l, r), c) in dw.terms() {
            if l.degree == 0 {
                left.add_term(r.letters.clone(), c.clone());
            }
            if r.degree == 0 {
                right.add_term(l.letters.clone(), c.clone());
            }
        }
        ensure(left == x && right == x, || {
            format!("counit law fails on {w:?}")
        })?;
        // coassociativity
        let (mut lhs, mut rhs) = (Cube::new(), Cube::new());
        for ((l, r), c) in dw.terms() {
            for ((a, b), e) in delta[l].terms() {
                add(&mut lhs, (a.clone(), b.clone(), r.clone()), c * e);
            }
            for ((a, b), e) in delta[r].terms() {
                add(&mut rhs, (l.clone(), a.clone(), b.clone()), c * e);
            }
        }
        ensure(strip(lhs) == strip(rhs), || {
            format!("coassociativity fails on {w:?}")
        })?;
        // antipode: m(S ⊗ id)Δ = ηε = m(id ⊗ S)Δ
        let expected = if w.degree == 0 {
            unit.clone()
        } else {
            TensorElement::zero(w.degree)
        };
        let (mut s_id, mut id_s) = (TensorElement::zero(w.degree), TensorElement::zero(w.degree));
        for ((l, r), c) in dw.terms() {
            s_id.add_scaled(&ctx.product(&anti[l], &r.to_element()).unwrap(), c);
            id_s.add_scaled(&ctx.product(&l.to_element(), &anti[r]).unwrap(), c);
        }
        ensure(s_id == expected && id_s == expected, || {
            format!("antipode axiom fails on {w:?}")
        })?;
    }
    for x in &words {
        for y in words.iter().filter(|y| x.degree + y.degree <= max_total) {
            let xy = ctx.product(&x.to_element(), &y.to_element()).unwrap();
            // Δ(xy) = Δ(x)Δ(y), the right side multiplied out term by term
            let mut rhs = TensorSquare::new();
            for ((a, b), c) in delta[x].terms() {
                for ((e, f), g) in delta[y].terms() {
                    let left = ctx.product(&a.to_element(), &e.to_element()).unwrap();
                    let right = ctx.product(&b.to_element(), &f.to_element()).unwrap();
                    rhs.add_tensor(&left, &right, &(c * g));
                }
            }
            ensure(ctx.coproduct(&xy).unwrap() == rhs, || {
                format!("Δ(xy) ≠ Δ(x)Δ(y) for {x:?}, {y:?}")
            })?;
            for z in words
                .iter()
                .filter(|z| x.degree + y.degree + z.degree <= max_total)
            {
                let ze = z.to_element();
                let lhs = ctx.product(&xy, &ze).unwrap();
                let rhs = ctx
                    .product(&x.to_element(), &ctx.product(&y.to_element(), &ze).unwrap())
                    .unwrap();
                ensure(lhs == rhs, || {
                    format!("associativity fails on {x:?}, {y:?}, {z:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    for q in [2, 3, 5] {
        for (name, ctx) in both_contexts(q) {
            hopf_axioms(&ctx, 6).map_err(|e| format!("q = {q}, {name}: {e}"))?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 2: compatibility is sharp

fn criterion_2() -> Outcome {
    let t = two_dim(3);
    let reg = t.reg();
    let pairing = t.inner(&reg, &reg).unwrap();
    ensure(pairing == int(3), || format!("⟨reg, reg⟩ = {pairing}"))?;
    ensure(
        HopfContext::new(t.clone(), reg.clone(), reg.clone(), t.one()).is_err(),
        || "(reg, reg, 1) accepted as a Hopf triple".into(),
    )?;
    let ctx = HopfContext::unchecked(t.clone(), reg.clone(), reg, t.one()).unwrap();
    let found = ctx
        .compatibility_counterexample(3)
        .unwrap()
        .ok_or("no counterexample of total degree ≤ 3")?;
    // recompute the witness independently
    let (x, y) = (found.x.to_element(), found.y.to_element());
    let lhs = ctx.coproduct(&ctx.product(&x, &y).unwrap()).unwrap();
    let mut rhs = TensorSquare::new();
    for ((a, b), c) in ctx.coproduct(&x).unwrap().terms() {
        for ((e, f), g) in ctx.coproduct(&y).unwrap().terms() {
            rhs.add_tensor(
                &ctx.product(&a.to_element(), &e.to_element()).unwrap(),
                &ctx.product(&b.to_element(), &f.to_element()).unwrap(),
                &(c * g),
            );
        }
    }
    ensure(found.x.degree + found.y.degree <= 3 && lhs != rhs, || {
        format!("witness {:?}, {:?} does not fail", found.x, found.y)
    })
}

// ---------------------------------------------------------------------------
// 3 and 9: antipode formulas

fn antipode_formulas(ctx: &HopfContext, max_degree: usize) -> Outcome {
    let d = ctx.theory().dim();
    for w in all_words(d, max_degree) {
        let x = w.to_element();
        let closed = ctx.antipode_closed(&x).unwrap();
        let tf = ctx.antipode_toggle_free(&x).unwrap();
        let all = ctx.antipode_all_setcomps(&x).unwrap();
        let oracle = ctx.antipode_oracle(&x).unwrap();
        let recursion = recursive_antipode(ctx, &x);
        ensure(
            closed == tf.value && closed == all.value && closed == oracle && closed == recursion,
            || format!("antipode variants disagree on {w:?}"),
        )?;
        if w.degree >= 1 {
            let n = w.degree;
            ensure(tf.summands == 3usize.pow(n as u32 - 1), || {
                format!("{} toggle-free summands in degree {n}", tf.summands)
            })?;
            let bell: usize = enumerate_set_compositions(n).len();
            ensure(all.summands == bell, || {
                format!("{} set compositions in degree {n}", all.summands)
            })?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for (name, ctx) in both_contexts(3) {
        antipode_formulas(&ctx, 5).map_err(|e| format!("{name}: {e}"))?;
    }
    // summand counts through n = 7, by brute force over all set compositions
    for n in 1..=7 {
        let brute = enumerate_set_compositions(n)
            .iter()
            .filter(|a| a.is_toggle_free())
            .count();
        let listed = enumerate_toggle_free(n).len();
        let expected = 3usize.pow(n as u32 - 1);
        ensure(brute == expected && listed == expected, || {
            format!("n = {n}: {brute} / {listed} toggle-free, expected {expected}")
        })?;
    }
    let ctx = h_ctx(3);
    let x = TensorElement::word(&[0, 1, 1, 0, 1, 0]);
    ensure(
        ctx.antipode_toggle_free(&x).unwrap().summands == 729,
        || "degree-7 summands".into(),
    )
}

// ---------------------------------------------------------------------------
// 4: NSym

/// `(inside)^{boundary}_μ`, built directly.
fn pattern(inside: &BaseElement, boundary: &BaseElement, mu: &IntegerComposition) -> TensorElement {
    if mu.is_empty() {
        return TensorElement::unit();
    }
    let mut factors = Vec::new();
    for (i, &p) in mu.parts().iter().enumerate() {
        if i > 0 {
            factors.push(boundary.clone());
        }
        factors.extend(std::iter::repeat_n(inside.clone(), p - 1));
    }
    TensorElement::pure(&factors)
}

fn criterion_4() -> Outcome {
    for q in [2, 5] {
        let ctx = h_ctx(q);
        let t = ctx.theory();
        // α^* = 𝟙 and β^* = reg - 𝟙 are dual to α = 𝟙, β = (reg - 𝟙)/(q - 1)
        let (a_star, b_star) = (t.one(), &t.reg() - &t.one());
        let h = |mu: &IntegerComposition| pattern(&a_star, ctx.iota(), mu);
        let r = |mu: &IntegerComposition| pattern(&a_star, &b_star, mu);
        for total in 2..=6 {
            for m in 1..total {
                for mu in enumerate_compositions(m) {
                    for nu in enumerate_compositions(total - m) {
                        let cat = mu.concat(&nu).unwrap();
                        let smash = mu.smash(&nu).unwrap();
                        ensure(ctx.product(&h(&mu), &h(&nu)).unwrap() == h(&cat), || {
                            format!("q = {q}: H_{mu} H_{nu} ≠ H_{cat}")
                        })?;
                        let rr = ctx.product(&r(&mu), &r(&nu)).unwrap();
                        ensure(rr == r(&cat).try_add(&r(&smash)).unwrap(), || {
                            format!("q = {q}: R_{mu} R_{nu} ≠ R_{cat} + R_{smash}")
                        })?;
                    }
                }
            }
        }
        for n in 1..=6 {
            let mut expected = TensorSquare::new();
            for j in 0..=n {
                let single = |k: usize| {
                    if k == 0 {
                        IntegerComposition::empty()
                    } else {
                        IntegerComposition::single(k)
                    }
                };
                expected.add_tensor(&h(&single(j)), &h(&single(n - j)), &Scalar::one());
            }
            ensure(
                ctx.coproduct(&h(&IntegerComposition::single(n))).unwrap() == expected,
                || format!("q = {q}: Δ(H_{n})"),
            )?;
            for mu in enumerate_compositions(n) {
                let mut sum = TensorElement::zero(n);
                for nu in enumerate_compositions(n) {
                    // ν coarsens μ iff its boundaries are a subset of μ's
                    let (bm, bn): (BTreeSet<usize>, BTreeSet<usize>) = (
                        mu.boundaries().into_iter().collect(),
                        nu.boundaries().into_iter().collect(),
                    );
                    if bn.is_subset(&bm) {
                        sum.add_scaled(&r(&nu), &Scalar::one());
                    }
                }
                ensure(h(&mu) == sum, || format!("q = {q}: H_{mu} ≠ Σ R_ν"))?;
            }
        }
        // the library's bridge names the same elements
        let bridge = NSymBridge::new(&ctx).unwrap();
        for mu in (1..=4).flat_map(enumerate_compositions) {
            ensure(
                bridge.element(NSymKind::HBasis, &mu).unwrap() == h(&mu)
                    && bridge.element(NSymKind::Ribbon, &mu).unwrap() == r(&mu),
                || format!("bridge basis differs at {mu}"),
            )?;
        }
    }
    let constants = |q| {
        let bridge = NSymBridge::new(&h_ctx(q)).unwrap();
        (
            structure_constants(&bridge, NSymKind::HBasis, 6).unwrap(),
            structure_constants(&bridge, NSymKind::Ribbon, 6).unwrap(),
        )
    };
    ensure(constants(2) == constants(5), || {
        "structure constants depend on q".into()
    })
}

// ---------------------------------------------------------------------------
// 5: antipode corollaries

fn bn0_word(mu: &IntegerComposition) -> Vec<Letter> {
    // boundary bit 1 ↦ 𝟙 (letter 0), inside bit 0 ↦ reg - 𝟙 (letter 1)
    binary_encode(mu, Encoding::ZerosInside)
        .unwrap()
        .0
        .iter()
        .map(|&b| if b { 0 } else { 1 })
        .collect()
}

fn criterion_5() -> Outcome {
    let triv = trivial_ctx(&two_dim(3));
    for n in 1..=5 {
        for mu in enumerate_compositions(n) {
            let x = TensorElement::word(&bn0_word(&mu));
            let singles: Vec<TensorElement> = mu
                .parts()
                .iter()
                .rev()
                .map(|&p| TensorElement::word(&bn0_word(&IntegerComposition::single(p))))
                .collect();
            let rhs = triv.product_all(&singles).unwrap().scale(&sign(mu.len()));
            ensure(
                rhs == TensorElement::word(&bn0_word(&mu.reversed())).scale(&sign(mu.len())),
                || format!("reversed product of {mu} is not a single word"),
            )?;
            let s = triv.antipode_closed(&x).unwrap();
            ensure(s == rhs && recursive_antipode(&triv, &x) == rhs, || {
                format!("S(χ^bn₀({mu}))")
            })?;
        }
    }
    let ctx = h_ctx(3);
    let t = ctx.theory();
    let h = |mu: &IntegerComposition| pattern(&t.one(), ctx.iota(), mu);
    for n in 1..=5 {
        for mu in enumerate_compositions(n) {
            let rev = mu.reversed();
            let mut rhs = TensorElement::zero(n);
            for nu in enumerate_compositions(n) {
                let (br, bn): (BTreeSet<usize>, BTreeSet<usize>) = (
                    rev.boundaries().into_iter().collect(),
                    nu.boundaries().into_iter().collect(),
                );
                if br.is_subset(&bn) {
                    rhs.add_scaled(&h(&nu), &sign(nu.len()));
                }
            }
            let x = h(&mu);
            ensure(
                ctx.antipode_closed(&x).unwrap() == rhs && recursive_antipode(&ctx, &x) == rhs,
                || format!("S(H_{mu})"),
            )?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 6: characters

fn convolution_value(x: &LinearCharacter, y: &LinearCharacter, gamma: &TensorElement) -> Scalar {
    let mut v = Scalar::zero();
    for ((l, r), c) in x.ctx().coproduct(gamma).unwrap().terms() {
        v += c * x.evaluate(&l.to_element()).unwrap() * y.evaluate(&r.to_element()).unwrap();
    }
    v
}

fn criterion_6() -> Outcome {
    for (name, ctx) in both_contexts(3) {
        let d = ctx.theory().dim();
        let psi_a = LinearCharacter::constant(&ctx, ctx.alpha(), 4).unwrap();
        let psi_b = LinearCharacter::constant(&ctx, ctx.beta(), 4).unwrap();
        let eps = LinearCharacter::counit(&ctx, 4);
        for (which, x) in [("α", &psi_a), ("β", &psi_b)] {
            ensure(x.check_morphism().passed(), || {
                format!("{name}: constant({which}) is not a morphism")
            })?;
            let inv = x.inverse().unwrap();
            ensure(x.convolve_closed(&inv).unwrap() == eps, || {
                format!("{name}: Ψ * Ψ⁻¹ ≠ ε for {which}")
            })?;
            for y in [&psi_a, &psi_b] {
                let closed = x.convolve_closed(y).unwrap();
                ensure(closed == x.convolve_definitional(y).unwrap(), || {
                    format!("{name}: convolution")
                })?;
                for n in 1..=4 {
                    for g in basis(d, n) {
                        ensure(
                            closed.evaluate(&g).unwrap() == convolution_value(x, y, &g),
                            || format!("{name}: closed convolution on {g:?}"),
                        )?;
                    }
                }
            }
        }
    }
    let triv = trivial_ctx(&two_dim(3));
    let x = LinearCharacter::constant(&triv, triv.alpha(), 5).unwrap();
    let inv = x.inverse().unwrap();
    for n in 1..=5 {
        ensure(inv.component(n) == &x.component(n).scale(&sign(n)), || {
            format!("(Ψ⁻¹)_{n} ≠ (−1)^n Ψ_{n}")
        })?;
        for g in basis(2, n) {
            // Ψ⁻¹ = Ψ ∘ S
            let s = triv.antipode_closed(&g).unwrap();
            ensure(inv.evaluate(&g).unwrap() == x.evaluate(&s).unwrap(), || {
                format!("Ψ⁻¹ ≠ Ψ∘S on {g:?}")
            })?;
        }
    }
    ensure(x.is_odd().unwrap(), || "constant(α) is not odd".into())
}

// ---------------------------------------------------------------------------
// 7: freeness and primitives

fn criterion_7() -> Outcome {
    for (name, ctx) in both_contexts(3) {
        let basis = ctx.working_basis();
        for n in 1..=6 {
            for w in words(2, n - 1) {
                let gens = ctx.factor_with_basis(&basis, &w).unwrap();
                // gluing the generators back with ι recovers the word
                let mut glued: Vec<Letter> = Vec::new();
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        glued.push(basis.iota_index as Letter);
                    }
                    ensure(!g.contains(&(basis.iota_index as Letter)), || {
                        format!("{name}: generator contains ι")
                    })?;
                    glued.extend(g);
                }
                ensure(glued == w, || format!("{name}: factorization of {w:?}"))?;
                let factors: Vec<TensorElement> = gens
                    .iter()
                    .map(|g| ctx.from_basis_word(&basis, g).unwrap())
                    .collect();
                ensure(
                    ctx.product_all(&factors).unwrap() == ctx.from_basis_word(&basis, &w).unwrap(),
                    || format!("{name}: product of generators of {w:?}"),
                )?;
            }
        }
    }
    let triv = trivial_ctx(&two_dim(3));
    for n in 1..=5 {
        let x = TensorElement::word(&vec![1; n - 1]);
        let expected = TensorSquare::from_tensor(&x, &TensorElement::unit());
        let mut expected = expected;
        expected.add_tensor(&TensorElement::unit(), &x, &Scalar::one());
        ensure(triv.coproduct(&x).unwrap() == expected, || {
            format!("(reg-1)^1_({n}) is not primitive")
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 8: combinatorics

fn criterion_8() -> Outcome {
    for n in 1..=8 {
        for mu in enumerate_compositions(n) {
            let b0 = binary_encode(&mu, Encoding::ZerosInside).unwrap();
            let b1 = binary_encode(&mu, Encoding::OnesInside).unwrap();
            ensure(
                binary_decode(&b0, Encoding::ZerosInside).unwrap() == mu,
                || format!("bn₀ round trip {mu}"),
            )?;
            ensure(
                binary_decode(&b1, Encoding::OnesInside).unwrap() == mu,
                || format!("bn₁ round trip {mu}"),
            )?;
            ensure(b1 == b0.complement(), || {
                format!("bn₁ ≠ complement of bn₀ at {mu}")
            })?;
            let conj = mu.conjugate().unwrap();
            ensure(
                binary_encode(&conj, Encoding::ZerosInside).unwrap() == b1,
                || format!("conjugate of {mu}"),
            )?;
        }
    }
    for m in 1..=5 {
        for n in 1..=5 {
            for mu in enumerate_compositions(m) {
                for nu in enumerate_compositions(n) {
                    let (a, b) = (
                        binary_encode(&mu, Encoding::ZerosInside).unwrap(),
                        binary_encode(&nu, Encoding::ZerosInside).unwrap(),
                    );
                    let mut cat = a.0.clone();
                    cat.push(true);
                    cat.extend(&b.0);
                    let mut smash = a.0.clone();
                    smash.push(false);
                    smash.extend(&b.0);
                    ensure(
                        binary_encode(&mu.concat(&nu).unwrap(), Encoding::ZerosInside)
                            .unwrap()
                            .0
                            == cat,
                        || format!("concat bits {mu} {nu}"),
                    )?;
                    ensure(
                        binary_encode(&mu.smash(&nu).unwrap(), Encoding::ZerosInside)
                            .unwrap()
                            .0
                            == smash,
                        || format!("smash bits {mu} {nu}"),
                    )?;
                }
            }
        }
    }
    let le = |a: &BinarySeq, b: &BinarySeq| a.0.iter().zip(&b.0).all(|(x, y)| !x | y);
    for n in 1..=5 {
        let all = enumerate_set_compositions(n);
        for a in &all {
            let s = a.stats();
            for j in 1..n {
                let (k, l) = (a.block_of(j), a.block_of(j + 1));
                ensure(
                    s.bc.at(j) == (k == l)
                        && s.llc.at(j) == (k <= l)
                        && s.lc.at(j) == a.blocks()[k].iter().any(|&x| x > j),
                    || format!("statistics of {a}"),
                )?;
            }
            for b in all.iter().filter(|b| a.refines(b).unwrap()) {
                let t = b.stats();
                ensure(
                    le(&s.lc, &t.lc) && le(&s.llc, &t.llc) && le(&s.bc, &t.bc),
                    || format!("monotonicity {a} ≤ {b}"),
                )?;
            }
        }
    }
    for n in 1..=6 {
        let mut seen = BTreeSet::new();
        for mu in enumerate_compositions(n) {
            for w in descent_class(&mu, 7).unwrap() {
                ensure(w.inverse().descents() == mu.boundaries(), || {
                    format!("class of {mu}")
                })?;
                ensure(seen.insert(w), || format!("classes overlap at n = {n}"))?;
            }
        }
        let fact: usize = (1..=n).product();
        ensure(seen.len() == fact, || {
            format!("n = {n}: {} ≠ {fact}", seen.len())
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 9: a three-dimensional base

fn criterion_9() -> Outcome {
    let table = BaseTheory::from_table(
        vec![
            vec![int(1), int(1), int(1)],
            vec![int(1), int(1), int(-1)],
            vec![int(2), int(-2), int(0)],
        ],
        vec![1, 1, 2],
        0,
        vec!["one".into(), "sign".into(), "faithful".into()],
    )
    .map_err(|e| format!("from_table rejected the table: {e}"))?;
    let t = Arc::new(table);
    ensure(t.dim() == 3 && t.order() == 4, || "wrong shape".into())?;
    for n in 1..=4 {
        ensure(
            BasisWord::all(3, n).len() == 3usize.pow(n as u32 - 1),
            || format!("dimension in degree {n}"),
        )?;
    }
    for (name, ctx) in [("(1,1,1)", trivial_ctx(&t)), ("(reg,1,β)", reg_ctx(&t))] {
        hopf_axioms(&ctx, 4).map_err(|e| format!("{name}: {e}"))?;
        antipode_formulas(&ctx, 4).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("Hopf axioms through total degree 6", criterion_1),
        ("compatibility fails off Hopf triples", criterion_2),
        ("antipode formulas agree", criterion_3),
        ("NSym realization", criterion_4),
        ("antipode corollaries", criterion_5),
        ("character group", criterion_6),
        ("freeness and primitives", criterion_7),
        ("combinatorics", criterion_8),
        ("three-dimensional base", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
