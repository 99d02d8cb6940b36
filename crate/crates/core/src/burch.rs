//! Decision procedures for Burch ideals and Burch rings of depth zero.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::artinian::{fibre_product, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, PolyMatrix};
use crate::poly::{Monomial, Polynomial, RingContext, Term};
use crate::resolution::{koszul_h1, minimal_resolution, AlgebraModule};

pub const DEFAULT_MFULL_TRIALS: usize = 20;

fn require_in_maximal(i: &Ideal) -> Result<()> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if let Some(g) = i.generators().iter().find(|g| g.constant_coeff() != 0) {
        return Err(Error::ConstantTerm(i.ring().format(g)));
    }
    Ok(())
}

/// `depth S/I = 0`, detected as `(I : m) ≠ I`.
pub fn depth_zero(i: &Ideal) -> Result<bool> {
    require_in_maximal(i)?;
    Ok(!i.colon_maximal().equals(i)?)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Invariants {
    pub length: Option<usize>,
    pub edim: Option<usize>,
    pub cm_type: Option<usize>,
    pub socle_dim: Option<usize>,
    pub c_r: Option<usize>,
    pub choi: usize,
    pub mu: usize,
    pub mu_mi: usize,
    pub hilbert: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BurchReport {
    pub burch: bool,
    pub depth_zero: bool,
    pub route: String,
    /// `g` and `x` with `g ∈ (I : m)` and `x g ∉ mI`, printed.
    pub witness: Option<(String, String)>,
    pub invariants: Invariants,
}

/// Definition test `mI ≠ m(I : m)`, with the invariants of `S/I`.
pub fn burch_ideal_test(i: &Ideal) -> Result<BurchReport> {
    require_in_maximal(i)?;
    let ring = i.ring();
    let colon = i.colon_maximal();
    let mi = i.times_maximal();
    let burch = !mi.equals(&colon.times_maximal())?;
    let depth_zero = !colon.equals(i)?;
    let mut witness = None;
    if burch {
        'outer: for g in colon.groebner_basis() {
            for v in 0..ring.nvars() {
                let p = ring.mul(&ring.var(v), g);
                if !mi.contains(&p) {
                    witness = Some((ring.format(g), ring.var_names()[v].clone()));
                    break 'outer;
                }
            }
        }
    }
    let mut inv = Invariants {
        choi: choi_invariant(i)?,
        mu: i.mu(),
        mu_mi: mi.mu(),
        ..Default::default()
    };
    if i.is_m_primary() {
        let r = QuotientAlgebra::new(i)?;
        inv.length = Some(r.length());
        inv.edim = Some(r.edim());
        inv.cm_type = Some(r.cm_type());
        inv.socle_dim = Some(r.socle().len());
        inv.hilbert = Some(r.hilbert_function().to_vec());
        inv.c_r = Some(c_invariant(&r)?.value);
    }
    Ok(BurchReport { burch, depth_zero, route: "definition".into(), witness, invariants: inv })
}

/// The equivalent conditions for `I` to be Burch, each evaluated on its own.
#[derive(Clone, Debug, Serialize)]
pub struct BurchConditions {
    /// `mI ≠ m(I : m)`.
    pub definition: bool,
    /// `(I : m) ≠ (mI : m)`.
    pub colon: bool,
    /// `Soc(S/I) · m/Im ≠ 0`.
    pub socle: bool,
    /// `depth S/I = 0` and `r(S/mI) ≠ r(S/I) + μ(I)`; `None` when the types
    /// are not finite.
    pub types: Option<bool>,
    pub notice: Option<String>,
}

impl BurchConditions {
    pub fn agree(&self) -> bool {
        self.colon == self.definition && self.socle == self.definition && self.types.is_none_or(|t| t == self.definition)
    }
}

pub fn burch_conditions(i: &Ideal) -> Result<BurchConditions> {
    require_in_maximal(i)?;
    let ring = i.ring();
    let colon = i.colon_maximal();
    let mi = i.times_maximal();
    let definition = !mi.equals(&colon.times_maximal())?;
    let colon_route = !colon.equals(&mi.colon_maximal())?;
    let socle = colon.generators().iter().any(|g| (0..ring.nvars()).any(|v| !mi.contains(&ring.mul(&ring.var(v), g))));
    let dz = !colon.equals(i)?;
    let (types, notice) = if !dz {
        (Some(false), None)
    } else if i.is_m_primary() {
        let r_i = QuotientAlgebra::new(i)?.cm_type();
        let r_mi = QuotientAlgebra::new(&mi)?.cm_type();
        (Some(r_mi != r_i + i.mu()), None)
    } else {
        (None, Some("the ideal is not m-primary, so the type comparison is skipped".into()))
    };
    Ok(BurchConditions { definition, colon: colon_route, socle, types, notice })
}

/// `(mI : m) = I`.
pub fn weakly_m_full_test(i: &Ideal) -> Result<bool> {
    require_in_maximal(i)?;
    i.times_maximal().colon_maximal().equals(i)
}

#[derive(Clone, Debug, PartialEq)]
pub enum MFullVerdict {
    /// `(mI : x) = I`, certified.
    Yes { witness: Polynomial },
    /// No element among the variables and the random linear forms worked.
    NoWitnessFound { tried: usize },
}

/// Tries every variable, then `trials` random linear forms drawn from the
/// seeded generator.
pub fn m_full_test(i: &Ideal, trials: usize, seed: u64) -> Result<MFullVerdict> {
    require_in_maximal(i)?;
    let ring = i.ring();
    let mi = i.times_maximal();
    let mut candidates: Vec<Polynomial> = (0..ring.nvars()).map(|v| ring.var(v)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ring.field().modulus();
    for _ in 0..trials {
        let terms = (0..ring.nvars())
            .map(|v| Term { coeff: rng.gen_range(1..p), mono: Monomial::var(v) })
            .collect();
        candidates.push(ring.from_terms(terms));
    }
    let tried = candidates.len();
    for x in candidates {
        if mi.colon_poly(&x)?.equals(i)? {
            return Ok(MFullVerdict::Yes { witness: x });
        }
    }
    Ok(MFullVerdict::NoWitnessFound { tried })
}

/// `dim_k n(I : n)/nI`. With `J = (I : n)`, the quotient is spanned by the
/// products `x_v g` for `g` generating `J`, since `(f - f(0)) x_v g ∈ nI`.
pub fn choi_invariant(i: &Ideal) -> Result<usize> {
    require_in_maximal(i)?;
    let ring = i.ring();
    let j = i.colon_maximal();
    let ni = i.times_maximal();
    let mut products = Vec::new();
    for g in j.groebner_basis() {
        for v in 0..ring.nvars() {
            let nf = ni.normal_form(&ring.mul(&ring.var(v), g));
            if !nf.is_zero() {
                products.push(nf);
            }
        }
    }
    Ok(polynomial_rank(ring, &products))
}

fn polynomial_rank(ring: &RingContext, polys: &[Polynomial]) -> usize {
    let mut index: std::collections::HashMap<Monomial, usize> = std::collections::HashMap::new();
    for p in polys {
        for t in p.terms() {
            let n = index.len();
            index.entry(t.mono).or_insert(n);
        }
    }
    let mut m = crate::field::Matrix::zeros(ring.field(), index.len(), polys.len());
    for (c, p) in polys.iter().enumerate() {
        for t in p.terms() {
            m.set(index[&t.mono], c, t.coeff);
        }
    }
    m.rank()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CInvariant {
    pub value: usize,
    /// The ring is a field and the value comes from the conventions for
    /// `R' = 0`.
    pub degenerate: bool,
}

/// `R/Soc R`, or `None` when that is the zero ring.
pub fn socle_quotient(r: &QuotientAlgebra) -> Result<Option<QuotientAlgebra>> {
    if r.is_field() {
        return Ok(None);
    }
    let lifts: Vec<Polynomial> = r.socle().iter().map(|s| r.lift(s)).collect();
    Ok(Some(QuotientAlgebra::new(&r.ideal().add_generators(&lifts))?))
}

/// `c_R = dim Soc R + dim H_1(K^R) - edim R - dim H_1(K^{R'}) + edim R'`.
pub fn c_invariant(r: &QuotientAlgebra) -> Result<CInvariant> {
    let soc = r.cm_type() as i64;
    let own = koszul_h1(r) as i64 - r.edim() as i64;
    let (other, degenerate) = match socle_quotient(r)? {
        Some(rp) => (koszul_h1(&rp) as i64 - rp.edim() as i64, false),
        None => (0, true),
    };
    let value = soc + own - other;
    if value < 0 {
        return Err(Error::Inconsistency(format!("c_R evaluated to {value}")));
    }
    Ok(CInvariant { value: value as usize, degenerate })
}

/// The right-hand side of the formula for Choi's invariant of `S → S/I`:
/// `dim n/n²` when `I = n`, and `c_{S/I}` otherwise.
pub fn choi_from_ring(i: &Ideal) -> Result<usize> {
    if !i.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    if i.equals(&Ideal::maximal(i.ring()))? {
        return Ok(i.ring().nvars());
    }
    Ok(c_invariant(&QuotientAlgebra::new(i)?)?.value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RingVerdict {
    pub burch: bool,
    pub c_r: usize,
    /// `k` is a direct summand of `Ω²k`; not evaluated for a field.
    pub omega2_summand: Option<bool>,
    pub field: bool,
}

/// `c_R > 0`, cross-checked against the socle criterion on `Ω²k`.
pub fn burch_ring_depth_zero(r: &QuotientAlgebra) -> Result<RingVerdict> {
    let c = c_invariant(r)?;
    let burch = c.value > 0;
    if r.is_field() {
        return Ok(RingVerdict { burch, c_r: c.value, omega2_summand: None, field: true });
    }
    let res = minimal_resolution(r, &AlgebraModule::residue_field(r), 2);
    let summand = res.k_summand_test(2).summand;
    if summand != burch {
        return Err(Error::Inconsistency(format!(
            "c_R = {} but the socle test on the second syzygy of k says {summand}",
            c.value
        )));
    }
    Ok(RingVerdict { burch, c_r: c.value, omega2_summand: Some(summand), field: false })
}

#[derive(Clone, Debug, Serialize)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    pub burch: bool,
    pub edim: usize,
    /// `ℓ(S/I)`, the exponent `r` in `(x_1^r, x_2, ..., x_n)` when the
    /// quotient is a Gorenstein Burch ring.
    pub r: Option<usize>,
    /// Gorenstein and Burch force `edim ≤ 1`.
    pub consistent: bool,
}

pub fn gorenstein_burch_classifier(i: &Ideal) -> Result<GorensteinVerdict> {
    if !i.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let q = QuotientAlgebra::new(i)?;
    let gorenstein = q.is_gorenstein();
    let burch = burch_ideal_test(i)?.burch;
    let edim = q.edim();
    let both = gorenstein && burch;
    let consistent = !both || (edim <= 1 && weakly_m_full_test(i)?);
    Ok(GorensteinVerdict { gorenstein, burch, edim, r: both.then(|| q.length()), consistent })
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CubeZeroVerdict {
    pub beta2: usize,
    pub edim: usize,
    pub cm_type: usize,
    /// `β_2(k) > e² - r`.
    pub burch: bool,
}

pub fn cube_zero_test(r: &QuotientAlgebra) -> Result<CubeZeroVerdict> {
    if r.socle_degree() > 2 {
        return Err(Error::Precondition("the cube of the maximal ideal is not zero".into()));
    }
    let beta2 = minimal_resolution(r, &AlgebraModule::residue_field(r), 2).betti()[2];
    let (e, t) = (r.edim(), r.cm_type());
    let burch = beta2 as i64 > (e * e) as i64 - t as i64;
    Ok(CubeZeroVerdict { beta2, edim: e, cm_type: t, burch })
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ColonSummandVerdict {
    /// `(I : J) ⊄ (IJ : (J : n) I_1(A))`.
    pub holds: bool,
    pub entries_in_j: bool,
    /// `S/J` is Gorenstein; `None` when `J` is not `m`-primary.
    pub j_gorenstein: Option<bool>,
}

pub fn colon_summand_condition(i: &Ideal, j: &Ideal, a: &PolyMatrix) -> Result<ColonSummandVerdict> {
    if !j.contains_ideal(i)? {
        return Err(Error::Precondition("I is not contained in J".into()));
    }
    let i1 = a.entry_ideal();
    let lhs = i.colon(j)?;
    let rhs = i.product(j)?.colon(&j.colon_maximal().product(&i1)?)?;
    let holds = !rhs.contains_ideal(&lhs)?;
    let entries_in_j = j.contains_ideal(&i1)?;
    let j_gorenstein = if j.is_m_primary() { Some(QuotientAlgebra::new(j)?.is_gorenstein()) } else { None };
    Ok(ColonSummandVerdict { holds, entries_in_j, j_gorenstein })
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct MuGrowthVerdict {
    pub mu: usize,
    pub mu_mi: usize,
    /// `μ(mI) < 2 μ(I)`.
    pub burch: bool,
}

pub fn mu_growth_test(i: &Ideal) -> Result<MuGrowthVerdict> {
    if i.ring().nvars() != 2 {
        return Err(Error::Precondition("exactly two variables are required".into()));
    }
    if !i.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let mu = i.mu();
    let mu_mi = i.times_maximal().mu();
    Ok(MuGrowthVerdict { mu, mu_mi, burch: mu_mi < 2 * mu })
}

#[derive(Clone, Debug)]
pub struct CutDown {
    /// The quotient presentation after eliminating a variable for every
    /// linear element.
    pub ideal: Ideal,
    /// Variables eliminated, in order.
    pub eliminated: Vec<String>,
    /// Elements kept as generators because they are not linear.
    pub appended: Vec<String>,
}

/// Cuts `S/I` down by `elems`, checking regularity of each element on the
/// previous quotient through `((J + (x)) : x) ... = J`. Linear elements are
/// eliminated by substitution; other elements need `allow_nonlinear` and
/// are appended as generators.
pub fn cut_down(i: &Ideal, elems: &[Polynomial], allow_nonlinear: bool) -> Result<CutDown> {
    require_in_maximal(i)?;
    let mut ring: Arc<RingContext> = i.ring().clone();
    let mut cur = i.clone();
    let mut eliminated = Vec::new();
    let mut appended = Vec::new();
    // Each element is carried through the substitutions made so far.
    let mut pending: Vec<Polynomial> = elems.to_vec();
    while !pending.is_empty() {
        let x = pending.remove(0);
        if x.is_zero() || x.constant_coeff() != 0 {
            return Err(Error::Precondition(format!("`{}` is not in the maximal ideal", ring.format(&x))));
        }
        let linear = x.is_homogeneous() && x.total_degree() == Some(1);
        if !linear && !allow_nonlinear {
            return Err(Error::Precondition(format!(
                "`{}` is not a linear form; pass the override to cut by it",
                ring.format(&x)
            )));
        }
        let colon = cur.colon_poly(&x)?;
        if let Some(w) = colon.groebner_basis().iter().find(|g| !cur.contains(g)) {
            return Err(Error::NotRegular { element: ring.format(&x), witness: ring.format(w) });
        }
        if !linear {
            appended.push(ring.format(&x));
            cur = cur.add_generators(&[x]);
            continue;
        }
        let v = (0..ring.nvars()).rev().find(|&v| x.terms().iter().any(|t| t.mono.exp(v) == 1)).unwrap();
        if ring.nvars() == 1 {
            return Err(Error::Precondition("cannot eliminate the only variable".into()));
        }
        let cv = x.terms().iter().find(|t| t.mono.exp(v) == 1).unwrap().coeff;
        let f = ring.field();
        let rest = ring.sub(&x, &ring.term(cv, Monomial::var(v)));
        let value = ring.scale(&rest, f.neg(f.inv(cv)));
        let names: Vec<String> =
            ring.var_names().iter().enumerate().filter(|&(k, _)| k != v).map(|(_, s)| s.clone()).collect();
        let new_ring = RingContext::new(f, &names)?;
        let map: Vec<usize> = (0..ring.nvars()).map(|k| if k > v { k - 1 } else { k }).collect();
        let transport = |p: &Polynomial| {
            let s = ring.substitute(p, v, &value);
            new_ring.from_terms(s.terms().iter().map(|t| Term { coeff: t.coeff, mono: t.mono.remapped(&map) }).collect())
        };
        let gens: Vec<Polynomial> =
            cur.generators().iter().map(|g| new_ring.monic(&transport(g))).filter(|g| !g.is_zero()).collect();
        pending = pending.iter().map(transport).collect();
        eliminated.push(ring.var_names()[v].clone());
        cur = Ideal::new(&new_ring, gens).minimalized();
        ring = new_ring;
    }
    Ok(CutDown { ideal: cur, eliminated, appended })
}

#[derive(Clone, Debug, Serialize)]
pub struct FibreVerdict {
    pub burch: bool,
    /// Verdict on the constructed presentation of the fibre product.
    pub direct: bool,
    pub s_burch: bool,
    pub t_burch: bool,
    /// `edim S > edim S/Soc S` or the same for `T`.
    pub socle_branch: bool,
    /// The four identities for edim, socle dimension, Koszul `H_1` and `c`.
    pub identities: [bool; 4],
}

fn edim_of(q: &Option<QuotientAlgebra>) -> usize {
    q.as_ref().map_or(0, |q| q.edim())
}

/// Burchness of `S ×_k T` from the factors, compared with the direct test.
pub fn fibre_burch(s: &QuotientAlgebra, t: &QuotientAlgebra) -> Result<FibreVerdict> {
    let fp = fibre_product(s, t)?;
    if fp.trivial {
        return Err(Error::Precondition("one factor is the residue field; test the other factor directly".into()));
    }
    let r = QuotientAlgebra::new(&fp.ideal)?;
    let vs = burch_ring_depth_zero(s)?;
    let vt = burch_ring_depth_zero(t)?;
    let vr = burch_ring_depth_zero(&r)?;
    let (sp, tp) = (socle_quotient(s)?, socle_quotient(t)?);
    let socle_branch = s.edim() > edim_of(&sp) || t.edim() > edim_of(&tp);
    let burch = vs.burch || vt.burch || socle_branch;
    let (es, et) = (s.edim(), t.edim());
    let identities = [
        r.edim() == es + et,
        r.cm_type() == s.cm_type() + t.cm_type(),
        koszul_h1(&r) == koszul_h1(s) + koszul_h1(t) + es * et,
        vr.c_r + edim_of(&sp) * edim_of(&tp) == vs.c_r + vt.c_r + es * et,
    ];
    if burch != vr.burch {
        return Err(Error::Inconsistency(format!(
            "fibre product verdict {burch} differs from the direct verdict {}",
            vr.burch
        )));
    }
    Ok(FibreVerdict { burch, direct: vr.burch, s_burch: vs.burch, t_burch: vt.burch, socle_branch, identities })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(vars: &[&str]) -> Arc<RingContext> {
        RingContext::new(PrimeField::default(), vars).unwrap()
    }

    fn ideal(r: &Arc<RingContext>, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn algebra(vars: &[&str], gens: &[&str]) -> QuotientAlgebra {
        QuotientAlgebra::new(&ideal(&ring(vars), gens)).unwrap()
    }

    #[test]
    fn definition_examples() {
        let r1 = ring(&["x"]);
        let rep = burch_ideal_test(&ideal(&r1, &["x^3"])).unwrap();
        assert!(rep.burch && rep.depth_zero);
        assert_eq!(rep.witness, Some(("x^2".into(), "x".into())));
        let r2 = ring(&["x", "y"]);
        assert!(!burch_ideal_test(&ideal(&r2, &["x^4", "x^2*y^2", "y^4"])).unwrap().burch);
        let r3 = ring(&["x", "y", "z"]);
        let cyclic_three = ideal(&r3, &["x^4", "y^4", "z^4", "x^2*y", "y^2*z", "z^2*x"]);
        assert!(!burch_ideal_test(&cyclic_three).unwrap().burch);
        assert_eq!(burch_ideal_test(&Ideal::zero(&r2)).unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn equivalent_conditions_examples() {
        let r = ring(&["x", "y"]);
        let m2 = Ideal::maximal_power(&r, 2);
        let p = burch_conditions(&m2).unwrap();
        assert!(p.agree() && p.definition && p.types == Some(true));
        let p = burch_conditions(&ideal(&r, &["x^4", "x^2*y^2", "y^4"])).unwrap();
        assert!(p.agree() && !p.definition && !p.colon && !p.socle && p.types == Some(false));
        let p = burch_conditions(&ideal(&r, &["x^3"])).unwrap();
        assert!(p.agree() && !p.definition);
        assert!(!depth_zero(&ideal(&r, &["x^3"])).unwrap());
    }

    #[test]
    fn fullness_examples() {
        let r = ring(&["x", "y"]);
        let m2 = Ideal::maximal_power(&r, 2);
        assert!(weakly_m_full_test(&m2).unwrap());
        assert!(weakly_m_full_test(&ideal(&r, &["x^3"])).unwrap());
        let stair = ideal(&r, &["x^4", "x^2*y^2", "y^4"]);
        assert!(!weakly_m_full_test(&stair).unwrap());
        assert_eq!(m_full_test(&m2, 5, 0).unwrap(), MFullVerdict::Yes { witness: r.var(0) });
        assert_eq!(m_full_test(&stair, 5, 0).unwrap(), MFullVerdict::NoWitnessFound { tried: 7 });
        for k in 1..5 {
            let i = ideal(&r, &[&format!("x^{k}"), "y"]);
            assert!(matches!(m_full_test(&i, 5, 1).unwrap(), MFullVerdict::Yes { .. }));
        }
    }

    #[test]
    fn choi_and_c_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(choi_invariant(&Ideal::maximal_power(&r, 2)).unwrap(), 3);
        assert_eq!(choi_invariant(&ideal(&r, &["x^4", "x^2*y^2", "y^4"])).unwrap(), 0);
        assert_eq!(choi_invariant(&ideal(&ring(&["x"]), &["x^3"])).unwrap(), 1);
        assert_eq!(c_invariant(&algebra(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap().value, 3);
        assert_eq!(c_invariant(&algebra(&["x", "y"], &["x^4", "x^2*y^2", "y^4"])).unwrap().value, 0);
        let k = c_invariant(&algebra(&["x"], &["x"])).unwrap();
        assert_eq!(k, CInvariant { value: 1, degenerate: true });
        assert_eq!(choi_from_ring(&Ideal::maximal(&r)).unwrap(), 2);
        assert_eq!(choi_invariant(&Ideal::maximal(&r)).unwrap(), 2);
    }

    #[test]
    fn ring_verdicts() {
        assert!(burch_ring_depth_zero(&algebra(&["y", "z"], &["y^2", "y*z^2", "z^4"])).unwrap().burch);
        assert!(!burch_ring_depth_zero(&algebra(&["x", "y"], &["x^4", "x^2*y^2", "y^4"])).unwrap().burch);
        let v = burch_ring_depth_zero(&algebra(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap();
        assert_eq!(v.omega2_summand, Some(true));
        let f = burch_ring_depth_zero(&algebra(&["x", "y"], &["x", "y"])).unwrap();
        assert!(f.field && f.burch && f.omega2_summand.is_none());
    }

    #[test]
    fn gorenstein_examples() {
        let r = ring(&["x", "y"]);
        let g = gorenstein_burch_classifier(&ideal(&r, &["x^3", "y"])).unwrap();
        assert!(g.gorenstein && g.burch && g.edim == 1 && g.r == Some(3) && g.consistent);
        let g = gorenstein_burch_classifier(&ideal(&r, &["x^2", "y^2"])).unwrap();
        assert!(g.gorenstein && !g.burch && g.edim == 2 && g.consistent);
        let g = gorenstein_burch_classifier(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap();
        assert!(!g.gorenstein && g.burch);
        assert!(gorenstein_burch_classifier(&ideal(&r, &["x^2"])).is_err());
    }

    #[test]
    fn cube_zero_examples() {
        let v = cube_zero_test(&algebra(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap();
        assert_eq!((v.beta2, v.burch), (4, true));
        let v = cube_zero_test(&algebra(&["x", "y"], &["x^2", "y^2"])).unwrap();
        assert_eq!((v.beta2, v.burch), (3, false));
        let v = cube_zero_test(&algebra(&["x"], &["x^3"])).unwrap();
        assert_eq!((v.beta2, v.burch), (1, true));
        assert!(cube_zero_test(&algebra(&["x"], &["x^4"])).is_err());
    }

    #[test]
    fn colon_summand_examples() {
        let r = ring(&["x", "y"]);
        let n = Ideal::maximal(&r);
        let a = PolyMatrix::from_rows(&r, &[vec![r.var(0), r.var(1)]]).unwrap();
        assert!(colon_summand_condition(&Ideal::maximal_power(&r, 3), &n, &a).unwrap().holds);
        let stair = ideal(&r, &["x^4", "x^2*y^2", "y^4"]);
        assert!(!colon_summand_condition(&stair, &n, &a).unwrap().holds);
        assert!(colon_summand_condition(&stair, &stair, &a).unwrap().holds);
        assert!(colon_summand_condition(&n, &stair, &a).is_err());
    }

    #[test]
    fn mu_growth_examples() {
        let r = ring(&["x", "y"]);
        let v = mu_growth_test(&ideal(&r, &["x^4", "x^2*y^2", "y^4"])).unwrap();
        assert_eq!((v.mu, v.mu_mi, v.burch), (3, 6, false));
        let v = mu_growth_test(&ideal(&r, &["x^4", "x^3*y", "x*y^3", "y^4"])).unwrap();
        assert_eq!((v.mu, v.mu_mi, v.burch), (4, 6, true));
        let v = mu_growth_test(&Ideal::maximal(&r)).unwrap();
        assert_eq!((v.mu, v.mu_mi, v.burch), (2, 3, true));
    }

    #[test]
    fn cut_down_examples() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x^2*z^2 - y^2", "x^4 - y*z^2", "x^2*y - z^4"]);
        let c = cut_down(&i, &[r.var(0)], false).unwrap();
        assert_eq!(c.eliminated, vec!["x"]);
        let s = c.ideal.ring().clone();
        assert!(c.ideal.equals(&ideal(&s, &["y^2", "y*z^2", "z^4"])).unwrap());
        let c = cut_down(&i, &[r.var(1)], false).unwrap();
        let s = c.ideal.ring().clone();
        assert!(c.ideal.equals(&ideal(&s, &["x^4", "x^2*z^2", "z^4"])).unwrap());
        let r2 = ring(&["x", "y"]);
        let c = cut_down(&ideal(&r2, &["y^2 - x^3"]), &[r2.var(0)], false).unwrap();
        assert_eq!(c.ideal.format_generators(), "y^2");
        let bad = cut_down(&ideal(&r2, &["x*y"]), &[r2.var(0)], false).unwrap_err();
        assert!(matches!(bad, Error::NotRegular { .. }));
        let sq = r2.parse("x^2 + y^2").unwrap();
        assert!(cut_down(&ideal(&r2, &["x*y"]), std::slice::from_ref(&sq), false).is_err());
        let c = cut_down(&ideal(&r2, &["x*y"]), &[sq], true).unwrap();
        let q = QuotientAlgebra::new(&c.ideal).unwrap();
        assert!(!burch_ring_depth_zero(&q).unwrap().burch);
    }

    #[test]
    fn fibre_examples() {
        let s = algebra(&["x"], &["x^2"]);
        let t = algebra(&["y"], &["y^3"]);
        let v = fibre_burch(&s, &t).unwrap();
        assert!(v.burch && v.direct && v.identities.iter().all(|&b| b));
        let a = algebra(&["x", "y"], &["x^2", "y^2"]);
        let b = algebra(&["u", "v"], &["u^2", "v^2"]);
        let v = fibre_burch(&a, &b).unwrap();
        assert!(!v.burch && !v.direct && v.identities.iter().all(|&b| b));
        assert!(fibre_burch(&s, &algebra(&["z"], &["z"])).is_err());
    }
}
