//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::process::Command;
use std::time::{Duration, Instant};

use morphic::report::reports_text;
use morphic_core::fixed_point::fixed_point;
use morphic_core::morphism::{
    decode_prefix_code, enumerate_conjugates, has_conjugate_in_class_p, is_class_p,
};
use morphic_core::periodicity::{fine_wilf, is_primitive_word, periods};
use morphic_core::suite::*;
use morphic_core::symmetry::{
    symmetry_points, symmetry_points_by_definition, two_points_imply_period,
};
use morphic_core::{Alphabet, Letter, Morphism, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passed(r: &Report) -> Result<(), String> {
    ensure(r.passed(), reports_text(std::slice::from_ref(r), true))
}

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

fn abc(s: &str) -> Morphism {
    let a = Alphabet::parse("abc").unwrap();
    Morphism::parse_with(s, &a, &a).unwrap()
}

fn prefix_of(phi: &Morphism, seed: char, n: usize) -> String {
    fixed_point(phi, Letter::new(seed).unwrap())
        .unwrap()
        .prefix(n)
        .to_string()
}

fn prefixes() -> Outcome {
    let f = Fixtures::standard();
    let cases = [
        (&f.gamma, 'a', "acabacacabacabacabacacabacabacacabacabac"),
        (&f.mu, 'x', "xyxxyxyxyxxyxyxxyxyxxyxyxyxxyxyxxyxyxyxx"),
        (&f.theta, 'a', "abbabaabbaababbabaababbaabbabaabbaababba"),
        (&f.rho, 'b', "bbabbabbababbabbabbababbabbabbababbabbab"),
    ];
    for (phi, seed, expected) in cases {
        let got = prefix_of(phi, seed, 40);
        ensure(got == expected, format!("{phi}: {got}"))?;
    }
    Ok("4 prefixes of 40 letters".into())
}

fn pk_hierarchy() -> Outcome {
    let f = Fixtures::standard();
    ensure(p_word(&f.gamma, 1).unwrap() == w("bacacab"), "p_1")?;
    ensure(
        p_word(&f.gamma, 2).unwrap() == w("bacacabacabacabacacab"),
        "p_2",
    )?;
    passed(&check_lemma_pk(&f, 12))?;
    Ok(format!("|p_12| = {}", p_word(&f.gamma, 12).unwrap().len()))
}

fn palindromicity() -> Outcome {
    let f = Fixtures::standard();
    passed(&check_palindromicity(&f, 8, 100_000))?;
    let mut x = fixed_point(&f.gamma, Letter::new('a').unwrap()).unwrap();
    let census = x.palindrome_census(100_000);
    for len in [1, 7, 21, 55] {
        ensure(
            census.contains_length(len),
            format!("no palindrome of length {len}"),
        )?;
    }
    Ok(format!(
        "p_0..p_8 located; longest palindrome {}",
        census.max_length()
    ))
}

fn commutation() -> Outcome {
    let f = Fixtures::standard();
    ensure(
        f.gamma.compose(&f.pi).unwrap() == f.pi.compose(&f.mu).unwrap(),
        "gamma pi",
    )?;
    for k in 1..=6 {
        let left = f.gamma.power(k).unwrap().compose(&f.pi).unwrap();
        let right = f.pi.compose(&f.mu.power(k).unwrap()).unwrap();
        ensure(left == right, format!("k = {k}"))?;
    }
    let x = w(&prefix_of(&f.gamma, 'a', 2000));
    let decoded = decode_prefix_code(&f.pi, &x).unwrap();
    ensure(decoded == Some(w(&prefix_of(&f.mu, 'x', 1000))), "decoding")?;
    passed(&check_commutation(&f, 6))?;
    Ok("k <= 6, 2000 letters decoded".into())
}

fn listings() -> Outcome {
    let f = Fixtures::standard();
    let level1 = stabilizer_level(&f.gamma, 1).unwrap();
    let printed1 = [
        "a->-,b->acacab,c->acab",
        "a->a,b->cacab,c->cab",
        "a->ac,b->acab,c->ab",
        "a->aca,b->cab,c->b",
    ];
    ensure(level1.elements() == printed1.map(abc), "level 1")?;

    let level2 = stabilizer_level(&f.gamma, 2).unwrap();
    let printed2 = [
        "a->-,b->acabacabacacab,c->acabacacab",
        "a->a,b->cabacabacacab,c->cabacacab",
        "a->ac,b->abacabacacab,c->abacacab",
        "a->aca,b->bacabacacab,c->bacacab",
        "a->acab,b->acabacacab,c->acacab",
        "a->acaba,b->cabacacab,c->cacab",
        "a->acabac,b->abacacab,c->acab",
        "a->acabaca,b->bacacab,c->cab",
    ];
    ensure(level2.elements() == printed2.map(abc), "level 2")?;
    let g = f.level_one();
    let named = [
        (0, 0),
        (1, 1),
        (2, 1),
        (3, 1),
        (2, 2),
        (1, 3),
        (2, 3),
        (3, 3),
    ];
    for (phi, (i, j)) in level2.elements().iter().zip(named) {
        ensure(
            *phi == g[i].compose(g[j]).unwrap(),
            format!("gamma{i} gamma{j}"),
        )?;
    }

    let level3 = stabilizer_level(&f.gamma, 3).unwrap();
    let printed3 = [
        "a->acabacac,b->abacabacacabacabacabacacab,c->abacabacabacacab",
        "a->acabacaca,b->bacabacacabacabacabacacab,c->bacabacabacacab",
    ];
    ensure(level3.elements()[8] == abc(printed3[0]), "level 3, |a| = 8")?;
    ensure(level3.elements()[9] == abc(printed3[1]), "level 3, |a| = 9")?;
    let (ac, ab) = (level3.image_ac().to_string(), level3.image_ab().to_string());
    let lcp = ac
        .bytes()
        .zip(ab.bytes())
        .take_while(|(a, b)| a == b)
        .count();
    ensure(lcp == 17, format!("lcp {lcp}"))?;
    ensure(level3.len() == lcp + 1, "level 3 count")?;
    passed(&check_stabilizer_listings(&f, 5))?;
    Ok(format!(
        "levels 1..3 have {}, {}, {} elements",
        level1.len(),
        level2.len(),
        level3.len()
    ))
}

fn non_generation() -> Outcome {
    let f = Fixtures::standard();
    for lit in [
        "a->acabacac,b->abacabacacabacabacabacacab,c->abacabacabacacab",
        "a->acabacaca,b->bacabacacabacabacabacacab,c->bacabacabacacab",
    ] {
        let found = submonoid_member_level(&abc(lit), 3, &f.gamma, f.level_one())
            .map_err(|e| e.to_string())?;
        ensure(found.is_none(), format!("{lit} = {found:?}"))?;
    }
    Ok("64 compositions each".into())
}

fn class_p_battery() -> Outcome {
    let f = Fixtures::standard();
    let theta2 = f.theta.power(2).unwrap();
    ensure(
        is_class_p(&f.rho).is_some() && is_class_p(&theta2).is_some(),
        "rho, theta^2",
    )?;
    for phi in [&f.theta, &f.tau, &f.gamma] {
        ensure(is_class_p(phi).is_none(), format!("{phi} in class P"))?;
    }
    let (conj, _) = has_conjugate_in_class_p(&f.tau, 20)
        .map_err(|e| e.to_string())?
        .ok_or("tau")?;
    ensure(conj.shift.len() == 1 && conj.result == f.rho, "tau shift")?;
    for k in 1..=6 {
        let power = f.gamma.power(k).unwrap();
        ensure(
            has_conjugate_in_class_p(&power, 20) == Ok(None),
            format!("gamma^{k}"),
        )?;
    }
    let mut swept = 0;
    for k in 1..=5 {
        for phi in stabilizer_level(&f.gamma, k).unwrap().elements() {
            let cap = phi.images().iter().map(Word::len).sum::<usize>() + 1;
            ensure(
                has_conjugate_in_class_p(phi, cap) == Ok(None),
                phi.to_string(),
            )?;
            swept += 1;
        }
    }
    passed(&check_class_p_battery(&f))?;
    passed(&check_no_class_p_conjugates(&f, 6, 5))?;
    Ok(format!("{swept} stabilizer elements at levels 1..5"))
}

fn symmetry_shapes() -> Outcome {
    let f = Fixtures::standard();
    let p = p_words(&f.gamma, 6).unwrap();
    let aca = w("aca");
    for k in 1..=6 {
        let g = f.gamma.power(k).unwrap();
        let ac = g.apply(&w("ac")).unwrap();
        ensure(ac == aca.concat(&p[k - 1]), format!("gamma^{k}(ac)"))?;
        ensure(
            symmetry_points(&ac).contains(2),
            format!("point 2 at k = {k}"),
        )?;
        if k >= 2 {
            let ab = g.apply(&w("ab")).unwrap();
            let shape = aca.concat(&p[k - 2]).concat(&aca).concat(&p[k - 1]);
            ensure(ab == shape, format!("gamma^{k}(ab)"))?;
            let pts = symmetry_points(&ab);
            ensure(
                pts.points() == [p[k - 2].len() + 5],
                format!("points {:?}", pts.points()),
            )?;
        }
    }
    passed(&check_points_symmetry(&f, 6))?;
    Ok("2 <= k <= 6".into())
}

fn all_words(alphabet: &[u8], len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                alphabet.iter().map(move |&c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

fn word_of(s: &[u8]) -> Word {
    w(std::str::from_utf8(s).unwrap())
}

fn has_period(s: &[u8], p: usize) -> bool {
    (p..s.len()).all(|i| s[i] == s[i - p])
}

fn is_pal(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn properties() -> Outcome {
    let mut cases = 0usize;
    // Fine–Wilf
    for len in 1..=14 {
        for s in all_words(b"ab", len) {
            let word = word_of(&s);
            let ps = periods(&word).unwrap();
            for &p in &ps {
                for &q in &ps {
                    let g = gcd(p, q);
                    if len + g >= p + q {
                        ensure(
                            fine_wilf(&word, p, q) == Ok(Some(g)),
                            format!("{word} {p} {q}"),
                        )?;
                        ensure(has_period(&s, g), format!("{word} {g}"))?;
                    }
                    cases += 1;
                }
            }
        }
    }
    // points of symmetry against splits into two palindromes, and two points
    for len in 1..=12 {
        for s in all_words(b"abc", len) {
            let word = word_of(&s);
            let splits: Vec<usize> = (1..=len)
                .filter(|&m| is_pal(&s[..m]) && is_pal(&s[m..]))
                .map(|m| m - 1)
                .collect();
            let pts = symmetry_points(&word);
            ensure(pts.points() == splits, format!("{word}"))?;
            if len <= 8 {
                ensure(
                    symmetry_points_by_definition(&word) == pts,
                    format!("{word}"),
                )?;
            }
            if let [a, b, ..] = pts.points() {
                let g = two_points_imply_period(&word, *a, *b).unwrap();
                ensure(
                    has_period(&s, g) && !is_primitive_word(&word).unwrap(),
                    format!("{word}"),
                )?;
            }
            cases += 1;
        }
    }
    // rotation moves points by twice the shift
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=20);
        let s: Vec<u8> = (0..n).map(|_| b"abc"[rng.gen_range(0..3)]).collect();
        let l = rng.gen_range(0..=n);
        let word = word_of(&s);
        let moved = word.rotate(n - l).unwrap();
        let after = symmetry_points(&moved);
        for &a in symmetry_points(&word).points() {
            ensure(after.contains((a + 2 * l) % n), format!("{word} {l}"))?;
        }
        cases += 1;
    }
    // primitivity transfer under μ and γ
    passed(&check_primitivity_lemma(&Fixtures::standard(), 12))?;
    // class P conjugates against a search over shift words
    let images: Vec<Vec<u8>> = (0..=3).flat_map(|l| all_words(b"ab", l)).collect();
    let ab = Alphabet::parse("ab").unwrap();
    for u in &images {
        for v in &images {
            let phi = Morphism::endo(ab.clone(), vec![word_of(u), word_of(v)]).unwrap();
            let mut expected = false;
            for len in 0..=12 {
                for x in all_words(b"ab", len) {
                    let right = |img: &[u8]| {
                        let t: Vec<u8> = img.iter().chain(&x).copied().collect();
                        t.starts_with(&x).then(|| t[x.len()..].to_vec())
                    };
                    let left = |img: &[u8]| {
                        let t: Vec<u8> = x.iter().chain(img).copied().collect();
                        t.ends_with(&x).then(|| t[..t.len() - x.len()].to_vec())
                    };
                    for pair in [(right(u), right(v)), (left(u), left(v))] {
                        if let (Some(c), Some(d)) = pair {
                            expected |= (0..=c.len().min(d.len())).any(|t| {
                                c[..t] == d[..t]
                                    && is_pal(&c[..t])
                                    && is_pal(&c[t..])
                                    && is_pal(&d[t..])
                            });
                        }
                    }
                }
            }
            let got = has_conjugate_in_class_p(&phi, 12).map_err(|e| e.to_string())?;
            ensure(got.is_some() == expected, format!("{phi}"))?;
            ensure(
                enumerate_conjugates(&phi, 12)
                    .witnesses
                    .iter()
                    .all(|c| c.holds_for(&phi)),
                "witness",
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases, 0 failures"))
}

fn conclusion() -> Outcome {
    let f = Fixtures::standard();
    let poly = f.gamma.incidence_matrix().unwrap().char_poly();
    ensure(poly.to_string() == "x^3-3x^2+x+1", poly.to_string())?;
    ensure(poly.factored() == "(x-1)(x^2-2x-1)", poly.factored())?;
    let mu = f.mu.incidence_matrix().unwrap().char_poly();
    ensure(mu.to_string() == "x^2-2x-1", mu.to_string())?;
    ensure(f.g1.compose(&f.g2).unwrap() == f.mu, "g1 g2")?;
    passed(&check_char_polys(&f))?;
    Ok(format!("{poly} = {}", poly.factored()))
}

fn cli_contract() -> Outcome {
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_morphic"))
            .args(["verify", "--kmax", "5"])
            .args(extra)
            .output()
            .expect("binary runs")
    };
    let clean = run(&[]);
    ensure(
        clean.status.code() == Some(0),
        String::from_utf8_lossy(&clean.stdout),
    )?;
    for name in Fixtures::NAMES {
        let o = run(&["--corrupt-fixture", name]);
        let text = String::from_utf8_lossy(&o.stdout);
        ensure(
            o.status.code() == Some(1),
            format!("{name}: exit {:?}", o.status.code()),
        )?;
        ensure(text.contains("failure: "), format!("{name}: no witness"))?;
    }
    Ok(format!(
        "clean run exits 0, {} corruptions exit 1",
        Fixtures::NAMES.len()
    ))
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s: f64| Some(Duration::from_secs_f64(s));
    let criteria = [
        Criterion {
            id: 1,
            name: "prefix reproduction",
            limit: secs(0.1),
            run: prefixes,
        },
        Criterion {
            id: 2,
            name: "p_k hierarchy",
            limit: secs(5.0),
            run: pk_hierarchy,
        },
        Criterion {
            id: 3,
            name: "palindromicity",
            limit: secs(5.0),
            run: palindromicity,
        },
        Criterion {
            id: 4,
            name: "commutation",
            limit: None,
            run: commutation,
        },
        Criterion {
            id: 5,
            name: "stabilizer listings",
            limit: None,
            run: listings,
        },
        Criterion {
            id: 6,
            name: "non-generation",
            limit: secs(1.0),
            run: non_generation,
        },
        Criterion {
            id: 7,
            name: "class P battery",
            limit: secs(30.0),
            run: class_p_battery,
        },
        Criterion {
            id: 8,
            name: "symmetry points",
            limit: None,
            run: symmetry_shapes,
        },
        Criterion {
            id: 9,
            name: "property suites",
            limit: None,
            run: properties,
        },
        Criterion {
            id: 10,
            name: "conclusion identities",
            limit: None,
            run: conclusion,
        },
        Criterion {
            id: 11,
            name: "cli contract",
            limit: None,
            run: cli_contract,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:.2?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS  {:>2}  {:<22} {:>10.2?}  {detail}",
                c.id, c.name, elapsed
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL  {:>2}  {:<22} {:>10.2?}  {why}",
                    c.id, c.name, elapsed
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
