use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::fixtures::*;
use super::p_words;
use super::report::{Report, Value};
use super::stabilizer::{
    has_uniform_parity, stabilizer_level, submonoid_member_level, StabilizerLevel,
};
use crate::fixed_point::{fixed_point, FixedPointStream};
use crate::morphism::{
    common_symmetry_residue, decode_prefix_code, enumerate_conjugates, has_conjugate_in_class_p,
    is_class_p, Direction, EnumerationStatus, Polynomial,
};
use crate::periodicity::is_primitive_word;
use crate::symmetry::symmetry_points;
use crate::{Alphabet, Letter, Morphism, Word};

fn word(s: &str) -> Word {
    Word::parse(s).expect("ascii literal")
}

fn letter(c: char) -> Letter {
    Letter::new(c).expect("ascii literal")
}

fn letters(s: &str) -> Vec<Letter> {
    s.chars().map(letter).collect()
}

fn abc_literal(s: &str) -> Morphism {
    let abc = Alphabet::parse("abc").expect("ascii literal");
    Morphism::parse_with(s, &abc, &abc).expect("listing literal")
}

fn stream(r: &mut Report, name: &str, phi: &Morphism, seed: char) -> Option<FixedPointStream> {
    match fixed_point(phi, letter(seed)) {
        Ok(s) => Some(s),
        Err(e) => {
            r.fail(
                format!("no fixed point of {name} from {seed}"),
                e.to_string(),
            );
            None
        }
    }
}

fn levels(r: &mut Report, gamma: &Morphism, kmax: usize) -> Vec<StabilizerLevel> {
    let mut out = Vec::new();
    for k in 0..=kmax {
        match stabilizer_level(gamma, k) {
            Ok(level) => out.push(level),
            Err(e) => {
                r.fail(format!("level {k} not computable"), e.to_string());
                break;
            }
        }
    }
    out
}

/// Safety cap for conjugate enumeration large enough that enumeration ends on
/// its own unless all images are powers of one word.
fn conjugate_cap(phi: &Morphism) -> usize {
    phi.images().iter().map(Word::len).sum::<usize>() + 1
}

/// 40-letter prefixes of the fixed points of γ, μ, θ and ρ.
pub fn check_fixture_prefixes(f: &Fixtures) -> Report {
    let mut r = Report::new("fixture_prefixes").bound("length", 40);
    let cases = [
        ("gamma", &f.gamma, 'a', X_GAMMA_40),
        ("mu", &f.mu, 'x', W_MU_40),
        ("theta", &f.theta, 'a', X_THETA_40),
        ("rho", &f.rho, 'b', X_RHO_40),
    ];
    for (name, phi, seed, expected) in cases {
        if let Some(mut s) = stream(&mut r, name, phi, seed) {
            let got = s.prefix(40).to_string();
            r.require(got == expected, format!("prefix of {name}"), got);
        }
    }
    r.finish()
}

/// `p_{k+1} = p_k aca p_{k-1} aca p_k`, `p_k` is a palindrome and
/// `p_{k-1} aca p_k` is not.
pub fn check_lemma_pk(f: &Fixtures, kmax: usize) -> Report {
    if kmax < 2 {
        return Report::skipped("lemma_pk", "needs kmax >= 2");
    }
    let mut r = Report::new("lemma_pk").bound("kmax", kmax);
    let p = match p_words(&f.gamma, kmax) {
        Ok(p) => p,
        Err(e) => {
            r.fail("p_k not computable", e.to_string());
            return r.finish();
        }
    };
    r.require(p[1].to_string() == P1, "p_1", &p[1]);
    r.require(p[2].to_string() == P2, "p_2", &p[2]);
    let aca = word("aca");
    for k in 1..kmax {
        let expected = p[k]
            .concat(&aca)
            .concat(&p[k - 1])
            .concat(&aca)
            .concat(&p[k]);
        r.require(p[k + 1] == expected, "recurrence fails at k", k);
    }
    for (k, pk) in p.iter().enumerate() {
        r.require(pk.is_palindrome(), "p_k not a palindrome at k", k);
    }
    for k in 1..=kmax {
        let joined = p[k - 1].concat(&aca).concat(&p[k]);
        r.require(
            !joined.is_palindrome(),
            "p_(k-1) aca p_k is a palindrome at k",
            k,
        );
    }
    r.note("lengths", p.iter().map(Word::len).collect::<Vec<_>>());
    r.finish()
}

/// Every `p_k` and `ca·p_k` occurs in the fixed point of γ.
pub fn check_palindromicity(f: &Fixtures, kmax: usize, prefix_bound: usize) -> Report {
    if kmax < 1 {
        return Report::skipped("palindromicity", "needs kmax >= 1");
    }
    let mut r = Report::new("palindromicity")
        .bound("kmax", kmax)
        .bound("prefix_bound", prefix_bound);
    let p = match p_words(&f.gamma, kmax) {
        Ok(p) => p,
        Err(e) => {
            r.fail("p_k not computable", e.to_string());
            return r.finish();
        }
    };
    let Some(mut x) = stream(&mut r, "gamma", &f.gamma, 'a') else {
        return r.finish();
    };
    let ca = word("ca");
    let mut positions = Vec::new();
    for (k, pk) in p.iter().enumerate() {
        match x.find_factor(pk, prefix_bound) {
            Some(i) => positions.push(i),
            None => {
                r.fail("p_k not found within prefix_bound at k", k);
                continue;
            }
        }
        r.require(
            x.find_factor(&ca.concat(pk), prefix_bound).is_some(),
            "ca p_k not found within prefix_bound at k",
            k,
        );
    }
    r.note("first_positions", positions);

    let (a, b, c) = (letter('a'), letter('b'), letter('c'));
    let head = x.letters(2000.min(prefix_bound));
    for (i, &l) in head.iter().enumerate() {
        if l == b {
            r.require(
                i >= 2 && head[i - 2..i] == [c, a],
                "b not preceded by ca at",
                i,
            );
        }
        r.require(
            (l == a) == (i % 2 == 0),
            "letter a off even positions at",
            i,
        );
    }

    let census = x.palindrome_census(prefix_bound);
    for (k, pk) in p.iter().enumerate() {
        r.require(
            census.contains_length(pk.len()),
            format!("no palindrome of length |p_{k}|"),
            pk.len(),
        );
    }
    r.note("longest_palindrome", census.max_length());
    r.finish()
}

/// `γ^k∘π = π∘μ^k` and desubstitution of the γ fixed point by π.
pub fn check_commutation(f: &Fixtures, kmax: usize) -> Report {
    if kmax < 1 {
        return Report::skipped("commutation", "needs kmax >= 1");
    }
    const N: usize = 1000;
    let mut r = Report::new("commutation")
        .bound("kmax", kmax)
        .bound("decoded_length", N);
    for k in 1..=kmax {
        let sides = f
            .gamma
            .power(k)
            .and_then(|g| g.compose(&f.pi))
            .and_then(|left| Ok((left, f.pi.compose(&f.mu.power(k)?)?)));
        match sides {
            Ok((left, right)) => {
                r.require(left == right, format!("gamma^{k} pi"), &left);
            }
            Err(e) => r.fail(format!("composition at k = {k}"), e.to_string()),
        }
    }
    let (Some(mut x), Some(mut w)) = (
        stream(&mut r, "gamma", &f.gamma, 'a'),
        stream(&mut r, "mu", &f.mu, 'x'),
    ) else {
        return r.finish();
    };
    match decode_prefix_code(&f.pi, &x.prefix(2 * N)) {
        Ok(Some(decoded)) => {
            r.require(
                decoded == w.prefix(N),
                "decoded prefix",
                &decoded.prefix(40),
            );
        }
        Ok(None) => r.fail("prefix does not factor over pi", 2 * N),
        Err(e) => r.fail("pi is not a prefix code", e.to_string()),
    }
    r.finish()
}

/// Image lengths of every stabilizer element share one parity.
pub fn check_odd_even(f: &Fixtures, stab_kmax: usize) -> Report {
    let mut r = Report::new("odd_even").bound("stab_kmax", stab_kmax);
    let mut checked = 0usize;
    for level in levels(&mut r, &f.gamma, stab_kmax) {
        for phi in level.elements() {
            checked += 1;
            r.require(has_uniform_parity(phi), "mixed parity", phi);
        }
    }
    for phi in f.level_one() {
        r.require(has_uniform_parity(phi), "mixed parity", phi);
    }
    r.note("elements", checked);
    r.finish()
}

/// Levels 1 and 2 match the known listings, level 3 holds the two extra
/// elements, and each level has `lcp + 1` elements.
pub fn check_stabilizer_listings(f: &Fixtures, stab_kmax: usize) -> Report {
    const SANITY_PREFIX: usize = 2000;
    let mut r = Report::new("stabilizer_listings")
        .bound("stab_kmax", stab_kmax)
        .bound("sanity_prefix", SANITY_PREFIX);
    let levels = levels(&mut r, &f.gamma, stab_kmax.max(1));
    if let Some(one) = levels.get(1) {
        let expected: Vec<Morphism> = f.level_one().into_iter().cloned().collect();
        r.require(one.elements() == expected, "level 1", level_value(one));
    }
    if let Some(two) = levels.get(2) {
        let expected: Vec<Morphism> = LEVEL_TWO.iter().map(|s| abc_literal(s)).collect();
        r.require(two.elements() == expected, "level 2", level_value(two));
    }
    if let Some(three) = levels.get(3) {
        for (i, lit) in LEVEL_THREE_EXTRA.iter().enumerate() {
            let at = three.elements().get(8 + i);
            r.require(at == Some(&abc_literal(lit)), "level 3 listing", *lit);
        }
    }
    let mut counts = Vec::new();
    for level in &levels {
        let (ac, ab) = (level.image_ac().letters(), level.image_ab().letters());
        let mut common = 0;
        while common < ac.len() && common < ab.len() && ac[common] == ab[common] {
            common += 1;
        }
        r.require(
            level.len() == common + 1,
            "count differs from lcp + 1 at level",
            level.k(),
        );
        counts.push(level.len());
    }
    r.note("level_sizes", counts);

    if let Some(mut x) = stream(&mut r, "gamma", &f.gamma, 'a') {
        for phi in levels.iter().flat_map(|l| l.elements()) {
            r.require(
                x.is_fixed_by(phi, SANITY_PREFIX),
                "does not fix the prefix",
                phi,
            );
        }
    }
    r.finish()
}

fn level_value(level: &StabilizerLevel) -> Value {
    level.elements().iter().collect::<Vec<_>>().into()
}

/// The two extra level-3 elements are not products of level-1 elements,
/// while every other element of levels 1 to 3 is.
pub fn check_non_generation(f: &Fixtures, stab_kmax: usize) -> Report {
    if stab_kmax < 3 {
        return Report::skipped("non_generation", "needs stab_kmax >= 3");
    }
    let mut r = Report::new("non_generation").bound("level", 3);
    let generators = f.level_one();
    let mut missing = Vec::new();
    for level in levels(&mut r, &f.gamma, 3).iter().skip(1) {
        for phi in level.elements() {
            match submonoid_member_level(phi, level.k(), &f.gamma, generators) {
                Ok(Some(_)) => {}
                Ok(None) => missing.push(phi.clone()),
                Err(e) => r.fail(format!("level {} element", level.k()), e.to_string()),
            }
        }
    }
    let expected: Vec<Morphism> = LEVEL_THREE_EXTRA.iter().map(|s| abc_literal(s)).collect();
    r.require(
        missing == expected,
        "elements outside the submonoid",
        missing.iter().collect::<Vec<_>>(),
    );
    r.note("compositions_per_element", 64usize);
    r.finish()
}

/// Composition adds levels.
pub fn check_level_grading(f: &Fixtures, stab_kmax: usize) -> Report {
    let top = stab_kmax.min(4);
    let mut r = Report::new("level_grading").bound("max_level", top);
    let levels = levels(&mut r, &f.gamma, top);
    let mut pairs = 0usize;
    for j in 0..levels.len() {
        for k in 0..levels.len() - j {
            let Some(target) = levels.get(j + k) else {
                continue;
            };
            for phi in levels[j].elements() {
                for psi in levels[k].elements() {
                    pairs += 1;
                    match phi.compose(psi) {
                        Ok(c) => r.require(
                            target.contains(&c),
                            format!("level {j} after level {k}"),
                            &c,
                        ),
                        Err(e) => r.fail("composition", e.to_string()),
                    }
                }
            }
        }
    }
    r.note("pairs", pairs);
    r.finish()
}

/// `γ^k(ab) = aca p_{k-2} aca p_{k-1}` with a unique point of symmetry at
/// `|p_{k-2}| + 5`, and `γ^k(ac) = aca p_{k-1}` with a point at 2.
pub fn check_points_symmetry(f: &Fixtures, kmax: usize) -> Report {
    if kmax < 2 {
        return Report::skipped("points_symmetry", "needs kmax >= 2");
    }
    let mut r = Report::new("points_symmetry").bound("kmax", kmax);
    let p = match p_words(&f.gamma, kmax) {
        Ok(p) => p,
        Err(e) => {
            r.fail("p_k not computable", e.to_string());
            return r.finish();
        }
    };
    let aca = word("aca");
    let (mut ab, mut ac) = (word("ab"), word("ac"));
    for k in 1..=kmax {
        match (f.gamma.apply(&ab), f.gamma.apply(&ac)) {
            (Ok(next_ab), Ok(next_ac)) => (ab, ac) = (next_ab, next_ac),
            _ => {
                r.fail("gamma does not act on {a,b,c}", k);
                return r.finish();
            }
        }
        r.require(ac == aca.concat(&p[k - 1]), format!("gamma^{k}(ac)"), &ac);
        r.require(
            symmetry_points(&ac).contains(2),
            "no point 2 in gamma^k(ac) at k",
            k,
        );
        if k < 2 {
            continue;
        }
        let expected = aca.concat(&p[k - 2]).concat(&aca).concat(&p[k - 1]);
        r.require(ab == expected, format!("gamma^{k}(ab)"), &ab);
        let points = symmetry_points(&ab);
        r.require(
            points.points() == [p[k - 2].len() + 5],
            format!("points of gamma^{k}(ab)"),
            points.points().to_vec(),
        );
    }
    r.finish()
}

fn words_over(alphabet: [&Word; 2], blocks: usize) -> impl Iterator<Item = Word> + '_ {
    (0..1usize << blocks).map(move |bits| {
        let mut w = Word::empty();
        for i in 0..blocks {
            w.extend_from(alphabet[(bits >> i) & 1]);
        }
        w
    })
}

/// `μ` and `γ` on `{ab, ac}*` preserve and reflect primitivity, and
/// `γ^k(ab)` is primitive.
pub fn check_primitivity_lemma(f: &Fixtures, maxlen: usize) -> Report {
    const GAMMA_POWERS: usize = 8;
    let mut r = Report::new("primitivity_lemma")
        .bound("maxlen", maxlen)
        .bound("gamma_powers", GAMMA_POWERS);
    let transfer = |r: &mut Report, phi: &Morphism, w: &Word| match phi.apply(w) {
        Ok(img) => {
            let before = is_primitive_word(w).unwrap_or(false);
            let after = is_primitive_word(&img).unwrap_or(false);
            r.require(before == after, "primitivity changes for", w);
        }
        Err(e) => r.fail("apply", e.to_string()),
    };
    let (x, y) = (word("x"), word("y"));
    for len in 1..=maxlen {
        for w in words_over([&x, &y], len) {
            transfer(&mut r, &f.mu, &w);
        }
    }
    let (ab, ac) = (word("ab"), word("ac"));
    for blocks in 1..=maxlen / 2 {
        for w in words_over([&ab, &ac], blocks) {
            transfer(&mut r, &f.gamma, &w);
        }
    }
    let mut power = ab;
    for k in 1..=GAMMA_POWERS {
        match f.gamma.apply(&power) {
            Ok(next) => power = next,
            Err(e) => {
                r.fail("apply", e.to_string());
                break;
            }
        }
        if k >= 2 {
            r.require(
                is_primitive_word(&power) == Ok(true),
                "gamma^k(ab) not primitive at k",
                k,
            );
        }
    }
    r.finish()
}

/// Class P membership and class P conjugates of the small fixtures.
pub fn check_class_p_battery(f: &Fixtures) -> Report {
    const CAP: usize = 20;
    let mut r = Report::new("class_p_battery").bound("cap", CAP);
    let theta2 = f.theta.power(2).unwrap_or_else(|_| f.theta.clone());

    match is_class_p(&f.rho) {
        Some(wit) => {
            r.require(wit.p == word("bb"), "p for rho", &wit.p);
            r.note("rho_p", &wit.p);
        }
        None => r.fail("rho not in class P", &f.rho),
    }
    match is_class_p(&theta2) {
        Some(wit) => r.require(wit.p.is_empty(), "p for theta^2", &wit.p),
        None => r.fail("theta^2 not in class P", &theta2),
    }
    for (name, phi) in [("theta", &f.theta), ("tau", &f.tau), ("gamma", &f.gamma)] {
        r.require(is_class_p(phi).is_none(), format!("{name} in class P"), phi);
    }

    match has_conjugate_in_class_p(&f.tau, CAP) {
        Ok(Some((conj, _))) => {
            let ok = conj.direction == Direction::Right
                && conj.shift == word("a")
                && conj.result == f.rho;
            r.require(ok, "conjugate of tau", &conj.result);
            r.note("tau_shift", &conj.shift);
        }
        other => r.fail("tau has no class P conjugate", format!("{other:?}")),
    }
    r.require(
        matches!(has_conjugate_in_class_p(&theta2, CAP), Ok(Some(_))),
        "theta^2 has no class P conjugate",
        &theta2,
    );
    for (name, phi) in [("theta", &f.theta), ("gamma", &f.gamma)] {
        r.require(
            has_conjugate_in_class_p(phi, CAP) == Ok(None),
            format!("class P conjugate of {name}"),
            phi,
        );
    }
    r.finish()
}

/// No power of γ and no non-identity stabilizer element has a conjugate in
/// class P.
pub fn check_no_class_p_conjugates(f: &Fixtures, kmax: usize, stab_kmax: usize) -> Report {
    let mut r = Report::new("no_class_p_conjugates")
        .bound("kmax", kmax)
        .bound("stab_kmax", stab_kmax);
    let (fst_odd, fst_even, lst) = (letters("acb"), letters("abc"), letters("abb"));
    for k in 1..=kmax {
        let power = match f.gamma.power(k) {
            Ok(p) => p,
            Err(e) => {
                r.fail("gamma^k", e.to_string());
                break;
            }
        };
        let fst = if k % 2 == 1 { &fst_odd } else { &fst_even };
        r.require(
            power.fst().as_ref() == Ok(fst),
            format!("Fst(gamma^{k})"),
            &power,
        );
        r.require(
            power.lst().as_ref() == Ok(&lst),
            format!("Lst(gamma^{k})"),
            &power,
        );
        let conj = enumerate_conjugates(&power, conjugate_cap(&power));
        r.require(
            conj.witnesses.len() == 1 && conj.status == EnumerationStatus::Complete,
            format!("conjugates of gamma^{k}"),
            conj.witnesses.len(),
        );
        r.require(
            is_class_p(&power).is_none(),
            format!("gamma^{k} in class P"),
            &power,
        );
    }

    let mut swept = 0usize;
    let mut prefiltered = 0usize;
    let levels = levels(&mut r, &f.gamma, stab_kmax);
    let subjects = levels
        .iter()
        .flat_map(|l| l.elements())
        .chain(f.level_one())
        .filter(|phi| !phi.is_identity());
    for phi in subjects {
        swept += 1;
        if common_symmetry_residue(phi).is_none() {
            prefiltered += 1;
        }
        match has_conjugate_in_class_p(phi, conjugate_cap(phi)) {
            Ok(None) => {}
            Ok(Some((conj, _))) => r.fail("class P conjugate", &conj.result),
            Err(e) => r.fail(format!("undecided for {phi}"), e.to_string()),
        }
    }
    r.note("elements_swept", swept);
    r.note("rejected_by_residue", prefiltered);
    r.finish()
}

/// Characteristic polynomials of γ and μ, and `μ = g₁∘g₂`.
pub fn check_char_polys(f: &Fixtures) -> Report {
    let mut r = Report::new("char_polys");
    let quadratic = Polynomial::new(alloc::vec![-1, -2, 1]);
    match f.gamma.incidence_matrix() {
        Ok(m) => {
            let poly = m.char_poly();
            r.require(
                poly.coeffs() == [1, 1, -3, 1],
                "char poly of gamma",
                poly.to_string(),
            );
            r.require(
                poly == Polynomial::linear(1).mul(&quadratic),
                "gamma factorization",
                poly.factored(),
            );
            r.note("gamma", format!("{poly} = {}", poly.factored()));
        }
        Err(e) => r.fail("incidence matrix of gamma", e.to_string()),
    }
    match f.mu.incidence_matrix() {
        Ok(m) => {
            let poly = m.char_poly();
            r.require(poly == quadratic, "char poly of mu", poly.to_string());
        }
        Err(e) => r.fail("incidence matrix of mu", e.to_string()),
    }
    match f.g1.compose(&f.g2) {
        Ok(c) => r.require(c == f.mu, "g1 g2", &c),
        Err(e) => r.fail("g1 g2", e.to_string()),
    }
    r.finish()
}

/// Bounded search: morphisms on `{x,y}` with images of at most 5 letters
/// that fix a prefix of the μ fixed point are powers of μ. Evidence for the
/// rigidity of that word, not a proof.
pub fn check_rigidity_sanity(f: &Fixtures) -> Report {
    const MAX_IMAGE: usize = 5;
    const PREFIX: usize = 400;
    let mut r = Report::new("rigidity_sanity")
        .bound("max_image_len", MAX_IMAGE)
        .bound("prefix", PREFIX);
    r.note("scope", "finite search, not a proof");
    let Some(mut w) = stream(&mut r, "mu", &f.mu, 'x') else {
        return r.finish();
    };
    let (x, y) = (word("x"), word("y"));
    let candidates: Vec<Word> = (0..=MAX_IMAGE)
        .flat_map(|len| words_over([&x, &y], len))
        .collect();
    let mut powers = Vec::new();
    let mut power = Morphism::identity(f.mu.source());
    while power.max_image_len() <= MAX_IMAGE {
        let next = power.compose(&f.mu);
        powers.push(power);
        match next {
            Ok(p) if p != *powers.last().expect("pushed") => power = p,
            _ => break,
        }
    }
    let mut survivors: Vec<String> = Vec::new();
    for u in &candidates {
        for v in &candidates {
            let phi = f.mu.with_images(alloc::vec![u.clone(), v.clone()]);
            if w.is_fixed_by(&phi, PREFIX) {
                r.require(
                    powers.contains(&phi),
                    "fixes the prefix but is not a power of mu",
                    &phi,
                );
                survivors.push(phi.to_string());
            }
        }
    }
    r.note("survivors", survivors);
    r.finish()
}
