//! Buchberger's algorithm and ideal arithmetic in `k[x_1, ..., x_n]`.
//!
//! Ideals cache their reduced Gröbner basis (under the order of their ring
//! context) the first time it is needed.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Coeff, EchelonSpace, Matrix};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial, RingContext, Term};

/// A reduced Gröbner basis: monic, inter-reduced, sorted by descending
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<RingContext>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn compute(ring: &Arc<RingContext>, gens: &[Polynomial]) -> Self {
        Self { ring: ring.clone(), elements: buchberger(ring, gens) }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&Polynomial> = self.elements.iter().collect();
        normal_form(&self.ring, f, &refs)
    }
}

/// Full reduction of `f` by monic polynomials.
pub(crate) fn normal_form(ring: &RingContext, f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let fld = ring.field();
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().expect("nonzero basis")).collect();
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(&lt) = p.leading() {
        match lms.iter().position(|m| m.divides(&lt.mono)) {
            Some(k) => {
                let q = lt.mono.div(&lms[k]).expect("divides");
                p = ring.add_scaled(&p, fld.neg(lt.coeff), &q, basis[k]);
            }
            None => {
                rem.push(lt);
                p = Polynomial::from_sorted_unchecked(p.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted_unchecked(rem)
}

fn spoly(ring: &RingContext, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (a, b) = (f.leading().unwrap(), g.leading().unwrap());
    let l = a.mono.lcm(&b.mono);
    let fld = ring.field();
    let left = ring.mul_term(f, fld.inv(a.coeff), &l.div(&a.mono).unwrap());
    ring.add_scaled(&left, fld.neg(fld.inv(b.coeff)), &l.div(&b.mono).unwrap(), g)
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the Gebauer–Möller pair criteria, followed by
/// inter-reduction.
fn buchberger(ring: &RingContext, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |h: Polynomial, polys: &mut Vec<Polynomial>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| {
        let h = ring.monic(&h);
        let hl = h.leading_monomial().unwrap();
        let k = polys.len();
        let mut cands: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&i| active[i])
            .map(|i| {
                let gl = polys[i].leading_monomial().unwrap();
                (i, gl.lcm(&hl), gl.gcd_is_one(&hl))
            })
            .collect();
        // Chain criterion among the new pairs.
        let mut keep: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(c) = (!cands.is_empty()).then(|| cands.remove(0)) {
            let dominated = cands.iter().chain(keep.iter()).any(|d| d.1.divides(&c.1));
            if c.2 || !dominated {
                keep.push(c);
            }
        }
        // Product criterion: coprime leading monomials need no pair.
        let new_pairs = keep.into_iter().filter(|c| !c.2).map(|c| Pair { i: c.0, j: k, lcm: c.1 });
        // Old pairs made redundant by h.
        pairs.retain(|p| {
            if !hl.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].leading_monomial().unwrap().lcm(&hl);
            let lj = polys[p.j].leading_monomial().unwrap().lcm(&hl);
            li == p.lcm || lj == p.lcm
        });
        pairs.extend(new_pairs);
        for i in 0..k {
            if active[i] && hl.divides(&polys[i].leading_monomial().unwrap()) {
                active[i] = false;
            }
        }
        polys.push(h);
        active.push(true);
    };

    for g in gens {
        let refs: Vec<&Polynomial> = polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        let h = normal_form(ring, g, &refs);
        if !h.is_zero() {
            insert(h, &mut polys, &mut active, &mut pairs);
        }
    }
    while !pairs.is_empty() {
        let mut best = 0;
        for (k, p) in pairs.iter().enumerate() {
            let b = &pairs[best];
            let ord = p.lcm.degree().cmp(&b.lcm.degree()).then_with(|| ring.cmp(&p.lcm, &b.lcm));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = spoly(ring, &polys[pair.i], &polys[pair.j]);
        let refs: Vec<&Polynomial> = polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        let h = normal_form(ring, &s, &refs);
        if !h.is_zero() {
            insert(h, &mut polys, &mut active, &mut pairs);
        }
    }

    let mut basis: Vec<Polynomial> = polys.into_iter().zip(active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    basis.sort_by(|a, b| ring.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(&lm)) {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, p)| p).collect();
        let g = &minimal[k];
        let lt = *g.leading().unwrap();
        let tail = Polynomial::from_sorted_unchecked(g.terms()[1..].to_vec());
        let tail = normal_form(ring, &tail, &others);
        reduced.push(ring.add(&ring.term(lt.coeff, lt.mono), &tail));
    }
    reduced.sort_by(|a, b| ring.cmp(&b.leading_monomial().unwrap(), &a.leading_monomial().unwrap()));
    reduced
}

/// `f / g` when `g` divides `f` exactly.
pub fn divide_exact(ring: &RingContext, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let fld = ring.field();
    let lt = *g.leading()?;
    let inv = fld.inv(lt.coeff);
    let mut p = f.clone();
    let mut q: Vec<Term> = Vec::new();
    while let Some(&t) = p.leading() {
        let m = t.mono.div(&lt.mono)?;
        let c = fld.mul(t.coeff, inv);
        q.push(Term { coeff: c, mono: m });
        p = ring.add_scaled(&p, fld.neg(c), &m, g);
    }
    Some(Polynomial::from_sorted_unchecked(q))
}

/// An ideal of `k[x_1, ..., x_n]` given by generators.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<RingContext>,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self.format_generators())
    }
}

impl Ideal {
    /// Any list of polynomials; zeros are dropped.
    pub fn new(ring: &Arc<RingContext>, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Self { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    /// Rejects generators with a nonzero constant term.
    pub fn in_maximal(ring: &Arc<RingContext>, gens: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.constant_coeff() != 0) {
            return Err(Error::ConstantTerm(ring.format(g)));
        }
        Ok(Self::new(ring, gens))
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<RingContext>, gens: &[S]) -> Result<Self> {
        let polys = gens.iter().map(|g| ring.parse(g.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::in_maximal(ring, polys)
    }

    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<RingContext>) -> Self {
        Self::new(ring, vec![ring.one()])
    }

    pub fn maximal(ring: &Arc<RingContext>) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    /// `m^k`, generated by all monomials of degree `k`.
    pub fn maximal_power(ring: &Arc<RingContext>, k: u32) -> Self {
        Self::from_monomials(ring, &monomials_of_degree(ring.nvars(), k))
    }

    pub fn from_monomials(ring: &Arc<RingContext>, mons: &[Monomial]) -> Self {
        Self::new(ring, mons.iter().map(|m| ring.monomial(*m)).collect())
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn format_generators(&self) -> String {
        self.gens.iter().map(|g| self.ring.format(g)).collect::<Vec<_>>().join(", ")
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| GroebnerBasis::compute(&self.ring, &self.gens))
    }

    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.groebner().elements()
    }

    /// Reduced Gröbner basis under another order of the same variables.
    pub fn groebner_in(&self, order: MonomialOrder) -> GroebnerBasis {
        let ring = self.ring.reordered(order);
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| ring.adopt(g)).collect();
        GroebnerBasis::compute(&ring, &gens)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().first().is_some_and(|g| g.leading_monomial().unwrap().is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(other.gens.iter().all(|g| self.contains(g)))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, gens))
    }

    pub fn add_generators(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(self.ring.mul(f, g));
            }
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `m * self`.
    pub fn times_maximal(&self) -> Ideal {
        self.product(&Ideal::maximal(&self.ring)).expect("same ring")
    }

    /// Intersection by elimination of an auxiliary variable `t` from
    /// `t I + (1 - t) J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let names = self.ring.var_names();
        let mut tname = "_t".to_string();
        while names.contains(&tname) {
            tname.push('_');
        }
        let mut ext_names = vec![tname];
        ext_names.extend(names.iter().cloned());
        let ext = RingContext::build(self.ring.field(), &ext_names, MonomialOrder::Elimination { split: 1 })?;
        let lift = |f: &Polynomial| {
            ext.from_terms(f.terms().iter().map(|t| Term { coeff: t.coeff, mono: t.mono.shifted(1) }).collect())
        };
        let t = ext.var(0);
        let one_minus_t = ext.sub(&ext.one(), &t);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|f| ext.mul(&t, &lift(f))).collect();
        gens.extend(other.gens.iter().map(|g| ext.mul(&one_minus_t, &lift(g))));
        let gb = buchberger(&ext, &gens);
        let out = gb
            .iter()
            .filter(|g| g.leading_monomial().unwrap().exp(0) == 0)
            .map(|g| {
                self.ring.from_terms(
                    g.terms().iter().map(|t| Term { coeff: t.coeff, mono: t.mono.shifted(-1) }).collect(),
                )
            })
            .collect();
        Ok(Ideal::new(&self.ring, out))
    }

    /// `(I : f)`, computed as `(I ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.contains(f) {
            return Ok(Ideal::unit(&self.ring));
        }
        let inter = self.intersection(&Ideal::new(&self.ring, vec![f.clone()]))?;
        let gens = inter
            .groebner_basis()
            .iter()
            .map(|g| divide_exact(&self.ring, g, f).ok_or_else(|| Error::Inconsistency("inexact division in colon".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `(I : J) = ∩ (I : g)` over the generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersection(&c)?,
            });
        }
        Ok(acc.expect("nonempty"))
    }

    pub fn colon_maximal(&self) -> Ideal {
        self.colon(&Ideal::maximal(&self.ring)).expect("maximal ideal is nonzero")
    }

    /// Every variable has a pure power among the leading monomials, and the
    /// ideal is proper.
    pub fn is_m_primary(&self) -> bool {
        if self.is_zero() || self.is_unit() {
            return false;
        }
        let lms = self.groebner().leading_monomials();
        (0..self.ring.nvars()).all(|i| lms.iter().any(|m| m.exp(i) > 0 && m.exp(i) == m.degree()))
    }

    /// Monomials outside the leading ideal, by ascending degree and, within
    /// a degree, descending in the ring order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        let lms = self.groebner().leading_monomials();
        let n = self.ring.nvars();
        let mut out = vec![Monomial::one()];
        let mut layer = vec![Monomial::one()];
        while !layer.is_empty() {
            let mut next: Vec<Monomial> = Vec::new();
            for m in &layer {
                for i in 0..n {
                    let c = m.times_var(i);
                    if !lms.iter().any(|l| l.divides(&c)) && !next.contains(&c) {
                        next.push(c);
                    }
                }
            }
            next.sort_by(|a, b| self.ring.cmp(b, a));
            out.extend(next.iter().copied());
            layer = next;
        }
        Ok(out)
    }

    /// `dim_k S/I` for an `m`-primary ideal.
    pub fn quotient_length(&self) -> Result<usize> {
        self.standard_monomials().map(|v| v.len())
    }

    /// A minimal generating subset of the given generators, chosen greedily
    /// in order: a generator is kept unless it lies in `mI` plus the ones
    /// already kept. Meaningful for homogeneous or `m`-primary ideals.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        let mi = self.times_maximal();
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in &self.gens {
            let cur = mi.add_generators(&kept);
            if !cur.contains(g) {
                kept.push(g.clone());
            }
        }
        kept
    }

    /// The same ideal on its minimal generators.
    pub fn minimalized(&self) -> Ideal {
        Ideal::new(&self.ring, self.minimal_generators())
    }

    /// `μ(I)`, the minimal number of generators.
    pub fn mu(&self) -> usize {
        if self.is_m_primary() {
            let mi = self.times_maximal();
            if let (Ok(a), Ok(b)) = (mi.quotient_length(), self.quotient_length()) {
                return a - b;
            }
        }
        self.minimal_generators().len()
    }

    /// Minimal first syzygies of homogeneous minimal generators, found
    /// degree by degree: the syzygies of degree `D` are a kernel, and a
    /// kernel vector is kept when it is not already a combination of
    /// multiples of the syzygies kept in lower degrees.
    pub fn syzygy_matrix(&self) -> Result<SyzygyMatrix> {
        let ring = &self.ring;
        let n = ring.nvars();
        let gens = &self.gens;
        if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(ring.format(g)));
        }
        for (i, g) in gens.iter().enumerate() {
            let others: Vec<Polynomial> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            if Ideal::new(ring, others).contains(g) {
                return Err(Error::RedundantGenerator { index: i, generator: ring.format(g) });
            }
        }
        let degs: Vec<u32> = gens.iter().map(|g| g.homogeneous_degree().unwrap()).collect();
        let mu = gens.len();
        if mu <= 1 {
            return Ok(SyzygyMatrix { matrix: PolyMatrix::zero(ring, mu, 0), minimized: true });
        }
        let lms = self.groebner().leading_monomials();
        let mut bound = *degs.iter().max().unwrap();
        for a in &lms {
            for b in &lms {
                bound = bound.max(a.lcm(b).degree());
            }
        }
        let dmin = *degs.iter().min().unwrap();
        let mut kept: Vec<(u32, Vec<Polynomial>)> = Vec::new();
        for d in dmin..=bound {
            // unknowns: (generator i, monomial of degree d - deg f_i)
            let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
            for (i, &di) in degs.iter().enumerate() {
                if d >= di {
                    for m in monomials_of_degree(n, d - di) {
                        unknowns.push((i, m));
                    }
                }
            }
            let index: HashMap<(usize, Monomial), usize> =
                unknowns.iter().enumerate().map(|(k, u)| (*u, k)).collect();
            let rows_m = monomials_of_degree(n, d);
            let row_index: HashMap<Monomial, usize> = rows_m.iter().enumerate().map(|(k, m)| (*m, k)).collect();
            let mut a = Matrix::zeros(ring.field(), rows_m.len(), unknowns.len());
            for (k, (i, m)) in unknowns.iter().enumerate() {
                for t in gens[*i].terms() {
                    a.set(row_index[&t.mono.mul(m)], k, t.coeff);
                }
            }
            let ker = a.kernel_basis();
            if ker.cols() == 0 {
                continue;
            }
            let to_vec = |col: &[Polynomial]| -> Vec<Coeff> {
                let mut v = vec![0; unknowns.len()];
                for (i, p) in col.iter().enumerate() {
                    for t in p.terms() {
                        v[index[&(i, t.mono)]] = t.coeff;
                    }
                }
                v
            };
            let mut span = EchelonSpace::new(ring.field(), unknowns.len());
            for (e, col) in &kept {
                for u in monomials_of_degree(n, d - e) {
                    let shifted: Vec<Polynomial> = col.iter().map(|p| ring.mul_term(p, 1, &u)).collect();
                    span.insert(&to_vec(&shifted));
                }
            }
            for c in 0..ker.cols() {
                let v = ker.column(c);
                if span.insert(&v) {
                    let mut col: Vec<Vec<Term>> = vec![Vec::new(); mu];
                    for (k, &x) in v.iter().enumerate() {
                        if x != 0 {
                            let (i, m) = unknowns[k];
                            col[i].push(Term { coeff: x, mono: m });
                        }
                    }
                    kept.push((d, col.into_iter().map(|ts| ring.from_terms(ts)).collect()));
                }
            }
        }
        let columns: Vec<Vec<Polynomial>> = kept.into_iter().map(|(_, c)| c).collect();
        Ok(SyzygyMatrix { matrix: PolyMatrix::from_columns(ring, mu, &columns), minimized: true })
    }
}

/// A matrix of polynomials, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<RingContext>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: &Arc<RingContext>, rows: usize, cols: usize) -> Self {
        Self { ring: ring.clone(), rows, cols, data: vec![Polynomial::zero(); rows * cols] }
    }

    pub fn from_columns(ring: &Arc<RingContext>, rows: usize, columns: &[Vec<Polynomial>]) -> Self {
        let mut m = Self::zero(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        m
    }

    pub fn from_rows(ring: &Arc<RingContext>, rows: &[Vec<Polynomial>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Self { ring: ring.clone(), rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.data
    }

    /// Ideal generated by all entries.
    pub fn entry_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.data.clone())
    }

    pub fn format_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.ring.format(self.get(i, j))).collect()).collect()
    }
}

/// A presentation of the first syzygies of an ordered generator list: each
/// column is a relation among the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyMatrix {
    pub matrix: PolyMatrix,
    pub minimized: bool,
}

impl SyzygyMatrix {
    /// `gens · column = 0` for every column.
    pub fn annihilates(&self, gens: &[Polynomial]) -> bool {
        let ring = &self.matrix.ring;
        gens.len() == self.matrix.rows
            && (0..self.matrix.cols).all(|j| {
                (0..self.matrix.rows)
                    .fold(Polynomial::zero(), |acc, i| ring.add(&acc, &ring.mul(&gens[i], self.matrix.get(i, j))))
                    .is_zero()
            })
    }

    /// No entry has a nonzero constant term.
    pub fn has_no_unit_entries(&self) -> bool {
        self.matrix.data.iter().all(|p| p.constant_coeff() == 0)
    }

    pub fn entry_ideal(&self) -> Ideal {
        self.matrix.entry_ideal()
    }
}
