//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use burch_core::artinian::{fibre_product, QuotientAlgebra};
use burch_core::burch::{
    burch_ideal_test, burch_ring_depth_zero, choi_from_ring, choi_invariant, cube_zero_test, cut_down,
    fibre_burch, gorenstein_burch_classifier,
};
use burch_core::monomial::{enumerate_mprimary, MonomialIdeal};
use burch_core::resolution::{koszul_h1, minimal_resolution, AlgebraModule};
use burch_core::sweep::{burch_sample_rings, sweep_records, tor_scan, Check, SweepRecord};
use burch_core::{Ideal, Monomial, PrimeField, RingContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;
type Criterion = (usize, &'static str, fn() -> Outcome);

/// Criteria whose literal claim is contradicted by the computation. They
/// still print FAIL; the suite does not abort on them.
const CONTRADICTED: &[usize] = &[2];

fn ring(vars: &[&str]) -> Arc<RingContext> {
    RingContext::new(PrimeField::default(), vars).unwrap()
}

fn ideal(r: &Arc<RingContext>, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Instant, limit: Duration) -> std::result::Result<(), String> {
    ensure(t.elapsed() < limit, format!("took {:?}, limit {:?}", t.elapsed(), limit))
}

/// `mI ≠ m(I : m)` on staircases, without Gröbner bases.
fn staircase_burch(mi: &MonomialIdeal) -> bool {
    let colon = mi.mono_colon_m();
    mi.times_maximal() != colon.times_maximal()
}

fn binomial2(e: usize) -> usize {
    e * e.saturating_sub(1) / 2
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^4", "x^2*y^2", "y^4"]);
    let q = QuotientAlgebra::new(&i).map_err(|e| e.to_string())?;
    let res = minimal_resolution(&q, &AlgebraModule::residue_field(&q), 3);
    ensure(res.betti() == [1, 2, 4, 8], format!("betti {:?}", res.betti()))?;
    let soc: Vec<String> = q.socle().iter().map(|s| q.format_element(s)).collect();
    ensure(soc == ["x^3*y", "x*y^3"], format!("socle {soc:?}"))?;
    ensure(!res.k_summand_test(2).summand, "k splits off the second syzygy")?;
    let v = res.k_summand_test(3);
    let w = v.witness.ok_or("no witness for the third syzygy")?;
    ensure(v.summand, "k does not split off the third syzygy")?;
    let first = q.format_element(&w[0]);
    ensure(first == "x^3*y" && w[1..].iter().all(|c| c.iter().all(|&x| x == 0)), format!("witness {first}"))?;
    ensure(!burch_ideal_test(&i).map_err(|e| e.to_string())?.burch, "reported Burch")?;
    within(t, Duration::from_secs(5))?;
    Ok(format!("betti {:?}, socle {soc:?}, witness ({first}, 0, 0, 0)", res.betti()))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let r3 = ring(&["x", "y", "z"]);
    let i3 = ideal(&r3, &["x^4", "y^4", "z^4", "x^2*y", "y^2*z", "z^2*x"]);
    let c3 = i3.colon_maximal();
    let listed = ideal(
        &r3,
        &["x^4", "x^3*z", "x^2*y", "x*y^3", "x*y*z", "x*z^2", "y^4", "y^2*z", "y*z^3", "z^4"],
    );
    ensure(c3.equals(&listed).unwrap(), "colon of the three-variable ideal differs from the list")?;
    let mono3 = MonomialIdeal::from_ideal(&i3).unwrap().mono_colon_m();
    ensure(mono3.mu() == 10 && mono3.to_ideal().equals(&listed).unwrap(), "staircase colon disagrees")?;
    let sq3 = c3.product(&c3).unwrap();
    let ic3 = i3.product(&c3).unwrap();
    ensure(!sq3.equals(&ic3).unwrap(), "(I:m)^2 = I(I:m) for the three-variable ideal")?;
    ensure(!burch_ideal_test(&i3).unwrap().burch, "three-variable ideal reported Burch")?;

    let r2 = ring(&["x", "y"]);
    let i2 = ideal(&r2, &["x^4", "y^4", "x^3*y", "x*y^3"]);
    let c2 = i2.colon_maximal();
    ensure(c2.equals(&ideal(&r2, &["x^3", "x^2*y^2", "y^3"])).unwrap(), "colon of the two-variable ideal")?;
    ensure(burch_ideal_test(&i2).unwrap().burch, "two-variable ideal not Burch")?;
    within(t, Duration::from_secs(10))?;
    let sq2 = c2.product(&c2).unwrap();
    let ic2 = i2.product(&c2).unwrap();
    // Staircase oracle: x^6 = x^3 * x^3 against generators of degree >= 7.
    let mi2 = MonomialIdeal::from_ideal(&i2).unwrap();
    let mc2 = mi2.mono_colon_m();
    let x6 = Monomial::from_exponents(&[6, 0]);
    let oracle_equal = mc2.product(&mc2) == mi2.product(&mc2);
    ensure(
        sq2.equals(&ic2).unwrap(),
        format!(
            "(I:m)^2 != I(I:m) for (x^4, y^4, x^3y, xy^3): x^6 in (I:m)^2 is {}, in I(I:m) is {}; staircase oracle equal = {oracle_equal}",
            mc2.product(&mc2).contains(&x6),
            mi2.product(&mc2).contains(&x6)
        ),
    )?;
    Ok("colon lists, products and verdicts match".into())
}

fn sweep5() -> &'static (Vec<SweepRecord>, Duration) {
    static CELL: std::sync::OnceLock<(Vec<SweepRecord>, Duration)> = std::sync::OnceLock::new();
    CELL.get_or_init(|| {
        let t = Instant::now();
        let recs = sweep_records(&ring(&["x", "y"]), 5, &Check::ALL).unwrap();
        (recs, t.elapsed())
    })
}

fn criterion_3() -> Outcome {
    let (recs, elapsed) = sweep5();
    let list = enumerate_mprimary(&ring(&["x", "y"]), 5).unwrap();
    ensure(recs.len() == list.len() && recs.len() >= 200, format!("{} ideals", recs.len()))?;
    let mut bad = Vec::new();
    for (rec, mi) in recs.iter().zip(&list) {
        let oracle = staircase_burch(mi);
        let all_agree = rec.equivalence_verdicts().iter().all(|&(_, b)| b == oracle);
        if !all_agree || rec.definition != oracle {
            bad.push(rec.ideal.clone());
        }
    }
    let field_only = recs.iter().filter(|r| r.omega2_summand.is_none()).count();
    ensure(bad.is_empty(), format!("disagreements: {bad:?}"))?;
    ensure(*elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    let burch = recs.iter().filter(|r| r.definition).count();
    Ok(format!(
        "{} ideals, {burch} Burch, nine routes agree ({field_only} field case without the syzygy route), {elapsed:?}",
        recs.len()
    ))
}

fn criterion_4() -> Outcome {
    let (recs, _) = sweep5();
    let mut bad = Vec::new();
    for r in recs {
        if r.choi != r.choi_from_ring {
            bad.push(format!("choi {}: {} vs {}", r.ideal, r.choi, r.choi_from_ring));
        }
        if r.koszul_h1 + binomial2(r.edim) != r.beta2 {
            bad.push(format!("koszul {}", r.ideal));
        }
    }
    // Further algebras: non-monomial, three variables, fibre products.
    let extra: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (vec!["x", "y", "z"], vec!["x^2 - y*z", "y^2 + x*z", "z^2"]),
        (vec!["y", "z"], vec!["y^2", "y*z^2", "z^4"]),
        (vec!["x", "y", "t"], vec!["x^2", "x*y", "y^2", "t^2"]),
        (vec!["x", "y"], vec!["x^2 - y^3", "x*y"]),
        (vec!["x", "y", "u", "v"], vec!["x^2", "y^2", "u^3", "v^2", "x*u", "x*v", "y*u", "y*v"]),
    ];
    for (vars, gens) in &extra {
        let i = ideal(&ring(vars), gens);
        let q = QuotientAlgebra::new(&i).unwrap();
        let b2 = minimal_resolution(&q, &AlgebraModule::residue_field(&q), 2).betti()[2];
        if koszul_h1(&q) + binomial2(q.edim()) != b2 {
            bad.push(format!("koszul {gens:?}"));
        }
        if choi_invariant(&i).unwrap() != choi_from_ring(&i).unwrap() {
            bad.push(format!("choi {gens:?}"));
        }
    }
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!("{} swept ideals and {} further algebras", recs.len(), extra.len()))
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2*z^2 - y^2", "x^4 - y*z^2", "x^2*y - z^4"]);
    let by_x = cut_down(&i, &[r.var(0)], false).map_err(|e| format!("cut by x: {e}"))?;
    let s = by_x.ideal.ring().clone();
    ensure(by_x.ideal.equals(&ideal(&s, &["y^2", "y*z^2", "z^4"])).unwrap(), "cut by x")?;
    ensure(burch_ideal_test(&by_x.ideal).unwrap().burch, "cut by x is not Burch")?;
    let qx = QuotientAlgebra::new(&by_x.ideal).unwrap();
    ensure(burch_ring_depth_zero(&qx).unwrap().burch, "ring cut by x is not Burch")?;
    let by_y = cut_down(&i, &[r.var(1)], false).map_err(|e| format!("cut by y: {e}"))?;
    ensure(!burch_ideal_test(&by_y.ideal).unwrap().burch, "cut by y is Burch")?;
    let qy = QuotientAlgebra::new(&by_y.ideal).unwrap();
    ensure(!burch_ring_depth_zero(&qy).unwrap().burch, "ring cut by y is Burch")?;
    within(t, Duration::from_secs(10))?;
    Ok(format!("by x: ({}), by y: ({})", by_x.ideal.format_generators(), by_y.ideal.format_generators()))
}

fn random_factor(names: [&str; 2], rng: &mut ChaCha8Rng) -> QuotientAlgebra {
    if rng.gen_bool(0.25) {
        let r = ring(&names[..1]);
        let a = rng.gen_range(2..=8);
        return QuotientAlgebra::new(&ideal(&r, &[&format!("{}^{a}", names[0])])).unwrap();
    }
    let r = ring(&names);
    let pool: Vec<MonomialIdeal> = enumerate_mprimary(&r, 4)
        .unwrap()
        .into_iter()
        .filter(|m| {
            let n = m.standard_monomials().unwrap().len();
            (2..=12).contains(&n)
        })
        .collect();
    let mi = &pool[rng.gen_range(0..pool.len())];
    let mut i = mi.to_ideal();
    if rng.gen_bool(0.3) {
        // Perturb with a binomial that keeps the ideal m-primary.
        let (a, b) = (names[0], names[1]);
        i = i.add_generators(&[r.parse(&format!("{a}^2 - {b}^2")).unwrap()]);
    }
    QuotientAlgebra::new(&i).unwrap()
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut lines = 0;
    let mut burch = 0;
    let mut bad = Vec::new();
    let mut pairs = 0;
    while pairs < 20 {
        let s = random_factor(["x", "y"], &mut rng);
        let tt = random_factor(["u", "v"], &mut rng);
        if s.is_field() || tt.is_field() || s.length() > 12 || tt.length() > 12 {
            continue;
        }
        pairs += 1;
        match fibre_burch(&s, &tt) {
            Ok(v) => {
                if !v.identities.iter().all(|&b| b) {
                    bad.push(format!("identities {:?} for {} and {}", v.identities, s.ideal().format_generators(), tt.ideal().format_generators()));
                }
                // Independent oracle on the presentation: the definition test.
                let fp = fibre_product(&s, &tt).unwrap();
                let def = burch_ideal_test(&fp.ideal).unwrap().burch;
                if def != v.direct || v.burch != v.direct {
                    bad.push(format!("verdicts for {} and {}", s.ideal().format_generators(), tt.ideal().format_generators()));
                }
                burch += v.burch as usize;
                lines += 1;
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    ensure(bad.is_empty(), bad.join("; "))?;
    within(t, Duration::from_secs(120))?;
    Ok(format!("{lines} pairs, {burch} Burch"))
}

fn criterion_7() -> Outcome {
    let (recs, _) = sweep5();
    let mut n = 0;
    let mut bad = Vec::new();
    for r in recs {
        if let Some(c) = r.cube_zero {
            n += 1;
            if c != r.definition {
                bad.push(r.ideal.clone());
            }
        }
    }
    let r2 = ring(&["x", "y"]);
    let a = cube_zero_test(&QuotientAlgebra::new(&ideal(&r2, &["x^2", "x*y", "y^2"])).unwrap()).unwrap();
    let b = cube_zero_test(&QuotientAlgebra::new(&ideal(&r2, &["x^2", "y^2"])).unwrap()).unwrap();
    ensure((a.beta2, a.burch) == (4, true), format!("square-zero ring: {a:?}"))?;
    ensure((b.beta2, b.burch) == (3, false), format!("complete intersection: {b:?}"))?;
    ensure(bad.is_empty(), format!("disagreements {bad:?}"))?;
    Ok(format!("{n} swept ideals contain m^3; spot values 4 and 3"))
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let r = ring(&["x", "y"]);
    let rings = burch_sample_rings(&r, 5, 5).map_err(|e| e.to_string())?;
    ensure(rings.len() == 5, "fewer than five sample rings")?;
    for q in &rings {
        ensure(burch_ring_depth_zero(q).unwrap().burch, "sample ring not Burch")?;
    }
    let scan = tor_scan(&rings, 10, 8, 0).map_err(|e| e.to_string())?;
    ensure(scan.violations.is_empty(), format!("{:?}", scan.violations))?;
    within(t, Duration::from_secs(300))?;
    Ok(format!("{} rings x {} pairs, l in 3..=8, no vanishing pair ({:?})", rings.len(), scan.pairs, t.elapsed()))
}

fn criterion_9() -> Outcome {
    let r = ring(&["x", "y", "t"]);
    let q = QuotientAlgebra::new(&ideal(&r, &["x^2", "x*y", "y^2", "t^2"])).unwrap();
    let tv = q.variable(2);
    ensure(q.is_exact_pair(&tv, &tv), "(t, t) is not an exact pair")?;
    let found = q.find_exact_pairs(&[]);
    ensure(found.iter().any(|(a, b)| a == &tv && b == &tv), "search misses (t, t)")?;
    let v = burch_ring_depth_zero(&q).unwrap();
    ensure(!v.burch, "reported Burch")?;
    Ok(format!("exact pair (t, t); c_R = {}", v.c_r))
}

fn criterion_10() -> Outcome {
    let (recs, _) = sweep5();
    let mut gb = 0;
    let mut bad = Vec::new();
    for r in recs {
        if r.gorenstein && r.definition {
            gb += 1;
            if r.edim > 1 || !r.gorenstein_consistent {
                bad.push(r.ideal.clone());
            }
        }
    }
    let r2 = ring(&["x", "y"]);
    for k in 1..=5 {
        let i = ideal(&r2, &[&format!("x^{k}"), "y"]);
        let g = gorenstein_burch_classifier(&i).unwrap();
        if !(g.burch && g.gorenstein && g.edim <= 1) {
            bad.push(format!("(x^{k}, y)"));
        }
    }
    ensure(bad.is_empty(), format!("{bad:?}"))?;
    Ok(format!("{gb} Gorenstein Burch ideals on the sweep, all of embedding dimension <= 1"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "resolution of k over k[x,y]/(x^4, x^2y^2, y^4)", criterion_1),
        (2, "colon products for the two monomial examples", criterion_2),
        (3, "equivalence sweep, socle degree <= 5", criterion_3),
        (4, "Choi invariant and Koszul homology identities", criterion_4),
        (5, "cutting the 2x3 minors ring by x and by y", criterion_5),
        (6, "fibre products of random artinian pairs", criterion_6),
        (7, "rings with cube-zero maximal ideal", criterion_7),
        (8, "Tor rigidity over Burch rings", criterion_8),
        (9, "exact pair (t, t) in k[x,y,t]/(x^2, xy, y^2, t^2)", criterion_9),
        (10, "Gorenstein Burch ideals", criterion_10),
    ];
    let mut unexpected = HashSet::new();
    for (n, name, f) in criteria {
        let t = Instant::now();
        let out = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match out {
            Ok(msg) => println!("criterion {n:>2} [PRIMARY] PASS  {name}: {msg} ({:.2?})", t.elapsed()),
            Err(msg) => {
                println!("criterion {n:>2} [PRIMARY] FAIL  {name}: {msg} ({:.2?})", t.elapsed());
                if !CONTRADICTED.contains(&n) {
                    unexpected.insert(n);
                }
            }
        }
    }
    if !unexpected.is_empty() {
        let mut failed: Vec<_> = unexpected.into_iter().collect();
        failed.sort_unstable();
        eprintln!("criteria failed: {failed:?}");
        std::process::exit(1);
    }
}
