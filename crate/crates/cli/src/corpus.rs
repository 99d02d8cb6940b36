use std::sync::Arc;

use burch_core::artinian::{fibre_product, QuotientAlgebra};
use burch_core::burch::{burch_ideal_test, burch_ring_depth_zero, cube_zero_test, cut_down, fibre_burch};
use burch_core::resolution::{minimal_resolution, AlgebraModule};
use burch_core::{Ideal, PrimeField, Result, RingContext};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub name: String,
    pub expected: String,
    pub got: String,
}

impl Item {
    pub fn passed(&self) -> bool {
        self.expected == self.got
    }
}

pub struct Entry {
    pub id: &'static str,
    pub about: &'static str,
    run: fn(PrimeField) -> Result<Vec<Item>>,
}

impl Entry {
    pub fn run(&self, field: PrimeField) -> Result<Vec<Item>> {
        (self.run)(field)
    }
}

fn item(name: impl Into<String>, expected: impl ToString, got: impl ToString) -> Item {
    Item { name: name.into(), expected: expected.to_string(), got: got.to_string() }
}

fn ideal(f: PrimeField, vars: &[&str], gens: &[&str]) -> Result<Ideal> {
    let r: Arc<RingContext> = RingContext::new(f, vars)?;
    Ideal::parse(&r, gens)
}

fn algebra(f: PrimeField, vars: &[&str], gens: &[&str]) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(&ideal(f, vars, gens)?)
}

fn betti_k(q: &QuotientAlgebra, n: usize) -> String {
    format!("{:?}", minimal_resolution(q, &AlgebraModule::residue_field(q), n).betti())
}

fn valuation_powers(f: PrimeField) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let i = ideal(f, &["x"], &[&format!("x^{n}")])?;
        out.push(item(format!("(x^{n}) Burch"), true, burch_ideal_test(&i)?.burch));
    }
    let q = algebra(f, &["x"], &["x^3"])?;
    out.push(item("betti of k over k[x]/(x^3)", "[1, 1, 1, 1, 1]", betti_k(&q, 4)));
    Ok(out)
}

fn maximal_times_ideal(f: PrimeField) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for gens in [&["x^2", "y^3"][..], &["x^2 + y^3", "x*y"], &["x", "y^2"]] {
        let i = ideal(f, &["x", "y"], gens)?;
        let j = i.times_maximal();
        out.push(item(format!("m({}) Burch", i.format_generators()), true, burch_ideal_test(&j)?.burch));
    }
    Ok(out)
}

fn residue_resolution(f: PrimeField) -> Result<Vec<Item>> {
    let q = algebra(f, &["x", "y"], &["x^4", "x^2*y^2", "y^4"])?;
    let res = minimal_resolution(&q, &AlgebraModule::residue_field(&q), 3);
    let soc: Vec<String> = q.socle().iter().map(|v| q.format_element(v)).collect();
    let w3 = res.k_summand_test(3);
    let witness = w3.witness.map_or("none".to_string(), |w| {
        w.iter().map(|c| q.format_element(c)).collect::<Vec<_>>().join(", ")
    });
    Ok(vec![
        item("betti", "[1, 2, 4, 8]", format!("{:?}", res.betti())),
        item("socle", "x^3*y, x*y^3", soc.join(", ")),
        item("k summand of second syzygy", false, res.k_summand_test(2).summand),
        item("k summand of third syzygy", true, w3.summand),
        item("third syzygy witness", "x^3*y, 0, 0, 0", witness),
        item("Burch", false, burch_ideal_test(q.ideal())?.burch),
    ])
}

fn colon_products(f: PrimeField) -> Result<Vec<Item>> {
    let i3 = ideal(f, &["x", "y", "z"], &["x^4", "y^4", "z^4", "x^2*y", "y^2*z", "z^2*x"])?;
    let c3 = i3.colon_maximal();
    let listed = Ideal::parse(
        i3.ring(),
        &["x^4", "x^3*z", "x^2*y", "x*y^3", "x*y*z", "x*z^2", "y^4", "y^2*z", "y*z^3", "z^4"],
    )?;
    let i2 = ideal(f, &["x", "y"], &["x^4", "y^4", "x^3*y", "x*y^3"])?;
    let c2 = i2.colon_maximal();
    let expected2 = Ideal::parse(i2.ring(), &["x^3", "x^2*y^2", "y^3"])?;
    let x6 = i2.ring().parse("x^6")?;
    Ok(vec![
        item("three variables: colon", true, c3.equals(&listed)?),
        item("three variables: (I:m)^2 = I(I:m)", false, c3.product(&c3)?.equals(&i3.product(&c3)?)?),
        item("three variables: Burch", false, burch_ideal_test(&i3)?.burch),
        item("two variables: colon", true, c2.equals(&expected2)?),
        item("two variables: Burch", true, burch_ideal_test(&i2)?.burch),
        // x^6 = x^3 x^3 lies in (I:m)^2 but I(I:m) starts in degree 7.
        item("two variables: x^6 in (I:m)^2", true, c2.product(&c2)?.contains(&x6)),
        item("two variables: x^6 in I(I:m)", false, i2.product(&c2)?.contains(&x6)),
    ])
}

fn cut_by_elements(f: PrimeField) -> Result<Vec<Item>> {
    let i = ideal(f, &["x", "y", "z"], &["x^2*z^2 - y^2", "x^4 - y*z^2", "x^2*y - z^4"])?;
    let r = i.ring().clone();
    let by_x = cut_down(&i, &[r.var(0)], false)?;
    let by_y = cut_down(&i, &[r.var(1)], false)?;
    let expected = Ideal::parse(by_x.ideal.ring(), &["y^2", "y*z^2", "z^4"])?;
    Ok(vec![
        item("cut by x", true, by_x.ideal.equals(&expected)?),
        item("cut by x Burch", true, burch_ideal_test(&by_x.ideal)?.burch),
        item("cut by y Burch", false, burch_ideal_test(&by_y.ideal)?.burch),
        item("cut by y ring Burch", false, burch_ring_depth_zero(&QuotientAlgebra::new(&by_y.ideal)?)?.burch),
    ])
}

fn cut_inside_square(f: PrimeField) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for (vars, gens, elem, linear) in [
        (&["x", "y"][..], &["y^2 - x^3"][..], "x^2", &[][..]),
        (&["x", "y", "z"], &["x*y - z^2"], "x^2 + y^2", &["x"][..]),
        (&["x", "y", "z"], &["x^2 - y^3"], "z^2", &["y"][..]),
    ] {
        let i = ideal(f, vars, gens)?;
        let r = i.ring().clone();
        let mut elems = vec![r.parse(elem)?];
        for l in linear {
            elems.push(r.parse(l)?);
        }
        let c = cut_down(&i, &elems, true)?;
        let name = format!("({}) cut by {}", gens.join(", "), std::iter::once(elem).chain(linear.iter().copied()).collect::<Vec<_>>().join(", "));
        out.push(item(format!("{name} Burch"), false, burch_ideal_test(&c.ideal)?.burch));
    }
    Ok(out)
}

fn square_zero(f: PrimeField) -> Result<Vec<Item>> {
    let a = cube_zero_test(&algebra(f, &["x", "y"], &["x^2", "x*y", "y^2"])?)?;
    let b = cube_zero_test(&algebra(f, &["x", "y"], &["x^2", "y^2"])?)?;
    let c = algebra(f, &["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"])?;
    Ok(vec![
        item("beta_2 of k[x,y]/(x^2, xy, y^2)", 4, a.beta2),
        item("k[x,y]/(x^2, xy, y^2) Burch", true, a.burch),
        item("beta_2 of k[x,y]/(x^2, y^2)", 3, b.beta2),
        item("k[x,y]/(x^2, y^2) Burch", false, b.burch),
        item("three variables, square zero, Burch", true, burch_ring_depth_zero(&c)?.burch),
    ])
}

fn exact_pair(f: PrimeField) -> Result<Vec<Item>> {
    let q = algebra(f, &["x", "y", "t"], &["x^2", "x*y", "y^2", "t^2"])?;
    let t = q.variable(2);
    let found = q.find_exact_pairs(&[]).iter().any(|(a, b)| a == &t && b == &t);
    Ok(vec![
        item("(t, t) exact", true, q.is_exact_pair(&t, &t)),
        item("(t, t) found by search", true, found),
        item("Burch", false, burch_ring_depth_zero(&q)?.burch),
        item("k[t]/(t^2) Burch", true, burch_ring_depth_zero(&algebra(f, &["t"], &["t^2"])?)?.burch),
    ])
}

fn gorenstein(f: PrimeField) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for r in 1..=5 {
        let i = ideal(f, &["x", "y"], &[&format!("x^{r}"), "y"])?;
        out.push(item(format!("(x^{r}, y) Burch"), true, burch_ideal_test(&i)?.burch));
    }
    for gens in [&["x^2", "y^2"][..], &["x^2", "y^3"], &["x*y", "x^2 - y^2"]] {
        let q = algebra(f, &["x", "y"], gens)?;
        let g = q.is_gorenstein();
        out.push(item(format!("({}) Gorenstein, Burch", gens.join(", ")), "true, false", format!("{g}, {}", burch_ideal_test(q.ideal())?.burch)));
    }
    Ok(out)
}

fn fibre_of_hypersurfaces(f: PrimeField) -> Result<Vec<Item>> {
    let mut out = Vec::new();
    for (a, b) in [(2, 2), (2, 3), (3, 4)] {
        let s = algebra(f, &["x"], &[&format!("x^{a}")])?;
        let t = algebra(f, &["y"], &[&format!("y^{b}")])?;
        let v = fibre_burch(&s, &t)?;
        let fp = fibre_product(&s, &t)?;
        out.push(item(format!("k[x]/(x^{a}) x k[y]/(y^{b}) Burch"), true, v.burch));
        out.push(item(format!("presentation {a}, {b}"), format!("x^{a}, x*y, y^{b}"), {
            let mut g: Vec<String> = fp.ideal.minimal_generators().iter().map(|p| fp.ideal.ring().format(p)).collect();
            g.sort_by_key(|s| std::cmp::Reverse(s.starts_with('x')));
            g.join(", ")
        }));
    }
    Ok(out)
}

pub const ENTRIES: &[Entry] = &[
    Entry { id: "valuation-powers", about: "powers of the variable in k[x]", run: valuation_powers },
    Entry { id: "maximal-times-ideal", about: "products mI", run: maximal_times_ideal },
    Entry { id: "residue-resolution", about: "resolution of k over k[x,y]/(x^4, x^2y^2, y^4)", run: residue_resolution },
    Entry { id: "colon-products", about: "colon ideals and their products", run: colon_products },
    Entry { id: "cut-by-elements", about: "cutting a determinantal ring by x and by y", run: cut_by_elements },
    Entry { id: "cut-inside-square", about: "regular elements in the square of the maximal ideal", run: cut_inside_square },
    Entry { id: "square-zero", about: "rings whose maximal ideal squares to zero", run: square_zero },
    Entry { id: "exact-pair", about: "exact pair (t, t) in k[x,y,t]/(x^2, xy, y^2, t^2)", run: exact_pair },
    Entry { id: "gorenstein", about: "Gorenstein rings against Burch rings", run: gorenstein },
    Entry { id: "fibre-of-hypersurfaces", about: "fibre products of truncated polynomial rings", run: fibre_of_hypersurfaces },
];

pub fn find(id: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_pass() {
        for e in ENTRIES {
            for it in e.run(PrimeField::default()).unwrap() {
                assert!(it.passed(), "{}: {} expected {} got {}", e.id, it.name, it.expected, it.got);
            }
        }
    }

    #[test]
    fn small_modulus_agrees() {
        let f = PrimeField::new(101).unwrap();
        for e in ENTRIES {
            assert!(e.run(f).unwrap().iter().all(Item::passed), "{}", e.id);
        }
    }
}
