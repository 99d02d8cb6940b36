//! Finite-dimensional local algebras `R = S/I` for `m`-primary `I`.
//!
//! Elements are coordinate vectors over the standard monomials. Each variable
//! acts by a sparse matrix whose columns are normal forms of `x_i * b`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Coeff, EchelonSpace, Matrix, PrimeField};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, RingContext, Term};

/// Column-sparse linear map: `cols[k]` is the image of the `k`-th basis vector.
pub type SparseMap = Vec<Vec<(usize, Coeff)>>;

/// How basis elements are labelled by degree. Every action map sends the
/// label `L` piece to the label `L * shift(i)` piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Monomial ideal: labels are the basis monomials themselves.
    Multi,
    /// Homogeneous ideal: labels are total degrees (stored in the first slot).
    Standard,
    /// No grading is used; every label is `1`.
    Ungraded,
}

impl Grading {
    pub fn label_of(&self, m: &Monomial) -> Monomial {
        match self {
            Grading::Multi => *m,
            Grading::Standard => Monomial::from_exponents(&[m.degree()]),
            Grading::Ungraded => Monomial::one(),
        }
    }

    pub fn shift(&self, var: usize) -> Monomial {
        match self {
            Grading::Multi => Monomial::var(var),
            Grading::Standard => Monomial::var(0),
            Grading::Ungraded => Monomial::one(),
        }
    }
}

/// An ideal of `R` as a subspace, with a minimal generating set.
#[derive(Clone, Debug)]
pub struct AlgebraIdeal {
    pub basis: Vec<Vec<Coeff>>,
    pub generators: Vec<Vec<Coeff>>,
}

impl AlgebraIdeal {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() <= 1
    }
}

#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    ideal: Ideal,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    actions: Vec<SparseMap>,
    grading: Grading,
    hilbert: Vec<usize>,
    socle: Vec<Vec<Coeff>>,
}

impl QuotientAlgebra {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        let basis = ideal.standard_monomials()?;
        let ring = ideal.ring().clone();
        let n = ring.nvars();
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let gb = ideal.groebner_basis();
        let grading = if gb.iter().all(Polynomial::is_monomial) {
            Grading::Multi
        } else if ideal.is_homogeneous() {
            Grading::Standard
        } else {
            Grading::Ungraded
        };
        let mut actions = Vec::with_capacity(n);
        for i in 0..n {
            let mut cols: SparseMap = Vec::with_capacity(basis.len());
            for b in &basis {
                let m = b.times_var(i);
                let col = match index.get(&m) {
                    Some(&k) => vec![(k, 1)],
                    None => {
                        let nf = ideal.normal_form(&ring.monomial(m));
                        let mut v: Vec<(usize, Coeff)> = nf.terms().iter().map(|t| (index[&t.mono], t.coeff)).collect();
                        v.sort_unstable();
                        v
                    }
                };
                cols.push(col);
            }
            actions.push(cols);
        }
        let mut alg = Self {
            ideal: ideal.clone(),
            basis,
            index,
            actions,
            grading,
            hilbert: Vec::new(),
            socle: Vec::new(),
        };
        alg.hilbert = alg.compute_hilbert();
        alg.socle = alg.compute_socle();
        Ok(alg)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        self.ideal.ring()
    }

    pub fn field(&self) -> PrimeField {
        self.ring().field()
    }

    pub fn nvars(&self) -> usize {
        self.ring().nvars()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `ℓ(R)`.
    pub fn length(&self) -> usize {
        self.basis.len()
    }

    pub fn is_field(&self) -> bool {
        self.basis.len() == 1
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn labels(&self) -> Vec<Monomial> {
        self.basis.iter().map(|m| self.grading.label_of(m)).collect()
    }

    pub fn action(&self, var: usize) -> &SparseMap {
        &self.actions[var]
    }

    /// Dense multiplication-by-`x_var` matrix.
    pub fn multiplication_matrix(&self, var: usize) -> Matrix {
        sparse_to_dense(self.field(), self.dim(), &self.actions[var])
    }

    pub fn basis_vector(&self, k: usize) -> Vec<Coeff> {
        let mut v = vec![0; self.dim()];
        v[k] = 1;
        v
    }

    pub fn one(&self) -> Vec<Coeff> {
        self.basis_vector(0)
    }

    pub fn variable(&self, var: usize) -> Vec<Coeff> {
        self.apply_var(var, &self.one())
    }

    pub fn apply_var(&self, var: usize, v: &[Coeff]) -> Vec<Coeff> {
        apply_sparse(self.field(), &self.actions[var], v, self.dim())
    }

    pub fn apply_monomial(&self, m: &Monomial, v: &[Coeff]) -> Vec<Coeff> {
        let mut w = v.to_vec();
        for i in 0..self.nvars() {
            for _ in 0..m.exp(i) {
                w = self.apply_var(i, &w);
            }
        }
        w
    }

    /// Coordinates of the image of `f` in `R`.
    pub fn element(&self, f: &Polynomial) -> Vec<Coeff> {
        let nf = self.ideal.normal_form(f);
        let mut v = vec![0; self.dim()];
        for t in nf.terms() {
            v[self.index[&t.mono]] = t.coeff;
        }
        v
    }

    /// The standard-monomial representative of an element.
    pub fn lift(&self, v: &[Coeff]) -> Polynomial {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| Term { coeff: c, mono: self.basis[k] })
            .collect();
        self.ring().from_terms(terms)
    }

    pub fn format_element(&self, v: &[Coeff]) -> String {
        self.ring().format(&self.lift(v))
    }

    pub fn mul(&self, a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
        let f = self.field();
        let mut out = vec![0; self.dim()];
        for (k, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let w = self.apply_monomial(&self.basis[k], b);
            for (o, x) in out.iter_mut().zip(w) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        out
    }

    /// Matrix of multiplication by `a`.
    pub fn multiplication_by(&self, a: &[Coeff]) -> Matrix {
        let cols: Vec<Vec<Coeff>> = (0..self.dim()).map(|k| self.mul(a, &self.basis_vector(k))).collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// The element lies in `m` (its coordinate on `1` vanishes).
    pub fn in_maximal(&self, a: &[Coeff]) -> bool {
        a.first().is_none_or(|&c| c == 0)
    }

    pub fn commuting_check(&self) -> bool {
        let n = self.nvars();
        (0..self.dim()).all(|k| {
            let e = self.basis_vector(k);
            (0..n).all(|i| {
                (0..n).all(|j| self.apply_var(i, &self.apply_var(j, &e)) == self.apply_var(j, &self.apply_var(i, &e)))
            })
        })
    }

    fn compute_hilbert(&self) -> Vec<usize> {
        let f = self.field();
        let dim = self.dim();
        let mut out = Vec::new();
        let mut current: Vec<Vec<Coeff>> = (0..dim).map(|k| self.basis_vector(k)).collect();
        let mut cur_dim = dim;
        while cur_dim > 0 {
            let mut next = EchelonSpace::new(f, dim);
            for v in &current {
                for i in 0..self.nvars() {
                    next.insert(&self.apply_var(i, v));
                }
            }
            out.push(cur_dim - next.dim());
            cur_dim = next.dim();
            current = next.basis_vectors().cloned().collect();
        }
        out
    }

    /// `ℓ(m^j / m^{j+1})` for `j = 0, 1, ...` up to the top nonzero power.
    pub fn hilbert_function(&self) -> &[usize] {
        &self.hilbert
    }

    /// Largest `s` with `m^s ≠ 0`.
    pub fn socle_degree(&self) -> usize {
        self.hilbert.len() - 1
    }

    pub fn edim(&self) -> usize {
        self.hilbert.get(1).copied().unwrap_or(0)
    }

    fn compute_socle(&self) -> Vec<Vec<Coeff>> {
        let dim = self.dim();
        let mut stacked = Matrix::zeros(self.field(), dim * self.nvars(), dim);
        for i in 0..self.nvars() {
            for (k, col) in self.actions[i].iter().enumerate() {
                for &(r, c) in col {
                    stacked.set(i * dim + r, k, c);
                }
            }
        }
        stacked.kernel_basis().columns()
    }

    /// Basis of `Soc R = (0 : m)`.
    pub fn socle(&self) -> &[Vec<Coeff>] {
        &self.socle
    }

    /// `r(R) = dim Soc R`.
    pub fn cm_type(&self) -> usize {
        self.socle.len()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle.len() == 1
    }

    /// Span of `R · vectors`.
    pub fn ideal_span(&self, vectors: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
        let mut space = EchelonSpace::new(self.field(), self.dim());
        let mut queue: Vec<Vec<Coeff>> = vectors.to_vec();
        let mut out = Vec::new();
        while let Some(v) = queue.pop() {
            if space.insert(&v) {
                for i in 0..self.nvars() {
                    queue.push(self.apply_var(i, &v));
                }
                out.push(v);
            }
        }
        out
    }

    /// Greedy minimal generators of the ideal spanned by `basis` (which must
    /// be closed under multiplication): vectors outside `m J` plus those
    /// already chosen.
    pub fn minimal_generators_of(&self, basis: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
        let mut space = EchelonSpace::new(self.field(), self.dim());
        for v in basis {
            for i in 0..self.nvars() {
                space.insert(&self.apply_var(i, v));
            }
        }
        basis.iter().filter(|v| space.insert(v)).cloned().collect()
    }

    pub fn principal_ideal(&self, a: &[Coeff]) -> AlgebraIdeal {
        let basis = self.ideal_span(&[a.to_vec()]);
        let generators = if basis.is_empty() { Vec::new() } else { vec![a.to_vec()] };
        AlgebraIdeal { basis, generators }
    }

    /// `(0 : a)` with a minimal generating set.
    pub fn annihilator(&self, a: &[Coeff]) -> AlgebraIdeal {
        let basis = self.multiplication_by(a).kernel_basis().columns();
        let generators = self.minimal_generators_of(&basis);
        AlgebraIdeal { basis, generators }
    }

    pub fn same_subspace(&self, a: &[Vec<Coeff>], b: &[Vec<Coeff>]) -> bool {
        let mut sa = EchelonSpace::new(self.field(), self.dim());
        for v in a {
            sa.insert(v);
        }
        let mut sb = EchelonSpace::new(self.field(), self.dim());
        for v in b {
            sb.insert(v);
        }
        sa.dim() == sb.dim() && b.iter().all(|v| sa.contains(v))
    }

    /// `(0 : a) = (b)` and `(0 : b) = (a)`.
    pub fn is_exact_pair(&self, a: &[Coeff], b: &[Coeff]) -> bool {
        let ann_a = self.annihilator(a);
        let ann_b = self.annihilator(b);
        self.same_subspace(&ann_a.basis, &self.principal_ideal(b).basis)
            && self.same_subspace(&ann_b.basis, &self.principal_ideal(a).basis)
    }

    /// Exact pairs of zerodivisors among the candidates: the variables,
    /// pairwise sums of variables, and `extra`. For each candidate `a` with
    /// principal annihilator `(b)`, the pair is kept when `(0 : b) = (a)`.
    /// A bounded search: an empty answer does not rule out exact pairs.
    pub fn find_exact_pairs(&self, extra: &[Polynomial]) -> Vec<(Vec<Coeff>, Vec<Coeff>)> {
        let n = self.nvars();
        let mut cands: Vec<Vec<Coeff>> = (0..n).map(|i| self.variable(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let f = self.field();
                cands.push(self.variable(i).iter().zip(self.variable(j)).map(|(a, b)| f.add(*a, b)).collect());
            }
        }
        cands.extend(extra.iter().map(|p| self.element(p)));
        let mut out = Vec::new();
        for a in cands {
            if a.iter().all(|&c| c == 0) || !self.in_maximal(&a) {
                continue;
            }
            let ann = self.annihilator(&a);
            if ann.generators.len() != 1 {
                continue;
            }
            let b = ann.generators[0].clone();
            if self.is_exact_pair(&a, &b) {
                out.push((a, b));
            }
        }
        out
    }
}

pub(crate) fn apply_sparse(f: PrimeField, map: &SparseMap, v: &[Coeff], out_dim: usize) -> Vec<Coeff> {
    let mut out = vec![0; out_dim];
    for (k, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for &(r, x) in &map[k] {
            out[r] = f.add(out[r], f.mul(c, x));
        }
    }
    out
}

pub(crate) fn sparse_to_dense(f: PrimeField, rows: usize, map: &SparseMap) -> Matrix {
    let mut m = Matrix::zeros(f, rows, map.len());
    for (k, col) in map.iter().enumerate() {
        for &(r, c) in col {
            m.set(r, k, c);
        }
    }
    m
}

/// A presentation of a fibre product over `k`.
#[derive(Clone, Debug)]
pub struct FibreProduct {
    pub ideal: Ideal,
    /// One factor was the field, so the "product" is the other factor.
    pub trivial: bool,
}

/// `I_S + I_T + (x_i y_j)` in `k[X ∪ Y]`.
pub fn fibre_product(s: &QuotientAlgebra, t: &QuotientAlgebra) -> Result<FibreProduct> {
    let (rs, rt) = (s.ring(), t.ring());
    if rs.field() != rt.field() {
        return Err(Error::ContextMismatch);
    }
    if let Some(v) = rs.var_names().iter().find(|v| rt.var_names().contains(v)) {
        return Err(Error::InvalidRing(format!("variable `{v}` occurs in both factors")));
    }
    if t.is_field() {
        return Ok(FibreProduct { ideal: s.ideal().clone(), trivial: true });
    }
    if s.is_field() {
        return Ok(FibreProduct { ideal: t.ideal().clone(), trivial: true });
    }
    let (ns, nt) = (rs.nvars(), rt.nvars());
    let mut names: Vec<String> = rs.var_names().to_vec();
    names.extend(rt.var_names().iter().cloned());
    let ring = RingContext::new(rs.field(), &names)?;
    let map_s: Vec<usize> = (0..ns).collect();
    let map_t: Vec<usize> = (ns..ns + nt).collect();
    let embed = |f: &Polynomial, map: &[usize]| {
        ring.from_terms(f.terms().iter().map(|tm| Term { coeff: tm.coeff, mono: tm.mono.remapped(map) }).collect())
    };
    let mut gens: Vec<Polynomial> = s.ideal().generators().iter().map(|g| embed(g, &map_s)).collect();
    gens.extend(t.ideal().generators().iter().map(|g| embed(g, &map_t)));
    for i in 0..ns {
        for j in 0..nt {
            gens.push(ring.monomial(Monomial::var(i).mul(&Monomial::var(ns + j))));
        }
    }
    Ok(FibreProduct { ideal: Ideal::new(&ring, gens), trivial: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(vars: &[&str], gens: &[&str]) -> QuotientAlgebra {
        let r = RingContext::new(PrimeField::default(), vars).unwrap();
        QuotientAlgebra::new(&Ideal::parse(&r, gens).unwrap()).unwrap()
    }

    #[test]
    fn build_examples() {
        let a = algebra(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.basis(), &[Monomial::one(), Monomial::var(0), Monomial::var(1)]);
        assert_eq!(algebra(&["x", "y"], &["x^4", "x^2*y^2", "y^4"]).dim(), 12);
        let k = algebra(&["x", "y"], &["x", "y"]);
        assert!(k.is_field());
        assert_eq!(k.edim(), 0);
        let r = RingContext::new(PrimeField::default(), &["x", "y"]).unwrap();
        assert!(QuotientAlgebra::new(&Ideal::parse(&r, &["x^3"]).unwrap()).is_err());
    }

    #[test]
    fn socle_examples() {
        let a = algebra(&["x", "y"], &["x^4", "x^2*y^2", "y^4"]);
        let soc: Vec<String> = a.socle().iter().map(|v| a.format_element(v)).collect();
        assert_eq!(soc, vec!["x^3*y", "x*y^3"]);
        assert_eq!(a.cm_type(), 2);
        let b = algebra(&["x"], &["x^3"]);
        assert_eq!(b.socle().iter().map(|v| b.format_element(v)).collect::<Vec<_>>(), vec!["x^2"]);
        let c = algebra(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(c.socle().iter().map(|v| c.format_element(v)).collect::<Vec<_>>(), vec!["x", "y"]);
    }

    #[test]
    fn type_and_gorenstein_examples() {
        let a = algebra(&["x", "y"], &["x^2", "y^2"]);
        assert_eq!((a.cm_type(), a.is_gorenstein()), (1, true));
        let b = algebra(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!((b.cm_type(), b.is_gorenstein()), (2, false));
        for r in 1..6 {
            let c = algebra(&["x"], &[&format!("x^{r}")]);
            assert!(c.is_gorenstein());
        }
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(algebra(&["x", "y"], &["x^2", "x*y", "y^2"]).hilbert_function(), &[1, 2]);
        assert_eq!(algebra(&["x", "y"], &["x^4", "x^2*y^2", "y^4"]).hilbert_function(), &[1, 2, 3, 4, 2]);
        assert_eq!(algebra(&["x"], &["x^3"]).hilbert_function(), &[1, 1, 1]);
        // non-homogeneous: the filtration is m-adic, not by polynomial degree
        let a = algebra(&["x", "y"], &["y^2 - x^3", "x*y"]);
        assert_eq!(a.hilbert_function().iter().sum::<usize>(), a.dim());
        assert_eq!(a.grading(), Grading::Ungraded);
    }

    #[test]
    fn commuting_and_socle_killed() {
        let a = algebra(&["x", "y", "z"], &["x^2 - y*z", "y^2 + x*z", "z^2"]);
        assert!(a.commuting_check());
        for s in a.socle() {
            for i in 0..3 {
                assert!(a.apply_var(i, s).iter().all(|&c| c == 0));
            }
        }
        assert_eq!(a.hilbert_function().iter().sum::<usize>(), a.length());
    }

    #[test]
    fn annihilator_examples() {
        let a = algebra(&["x"], &["x^4"]);
        assert_eq!(a.annihilator(&[0; 4]).dim(), 4);
        let x2 = a.element(&a.ring().parse("x^2").unwrap());
        let ann = a.annihilator(&x2);
        assert_eq!(ann.generators.len(), 1);
        assert_eq!(a.format_element(&ann.generators[0]), "x^2");
        let b = algebra(&["x", "y", "t"], &["x^2", "x*y", "y^2", "t^2"]);
        let t = b.variable(2);
        let ann_t = b.annihilator(&t);
        assert!(ann_t.is_principal());
        assert!(b.same_subspace(&ann_t.basis, &b.principal_ideal(&t).basis));
    }

    #[test]
    fn exact_pair_examples() {
        let b = algebra(&["x", "y", "t"], &["x^2", "x*y", "y^2", "t^2"]);
        let pairs = b.find_exact_pairs(&[]);
        let t = b.variable(2);
        assert!(pairs.iter().any(|(p, q)| *p == t && *q == t));
        let a = algebra(&["x"], &["x^4"]);
        let x = a.variable(0);
        let x3 = a.element(&a.ring().parse("x^3").unwrap());
        assert!(a.find_exact_pairs(&[]).contains(&(x, x3)));
        let c = algebra(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert!(c.find_exact_pairs(&[]).is_empty());
        for (p, q) in pairs {
            assert!(b.is_exact_pair(&p, &q));
        }
    }

    #[test]
    fn fibre_product_examples() {
        let s = algebra(&["x"], &["x^2"]);
        let t = algebra(&["y"], &["y^2"]);
        let fp = fibre_product(&s, &t).unwrap();
        assert!(!fp.trivial);
        let r = fp.ideal.ring().clone();
        assert!(fp.ideal.equals(&Ideal::parse(&r, &["x^2", "y^2", "x*y"]).unwrap()).unwrap());
        let s3 = algebra(&["x"], &["x^3"]);
        let t4 = algebra(&["y"], &["y^4"]);
        let fp2 = fibre_product(&s3, &t4).unwrap();
        let r2 = fp2.ideal.ring().clone();
        assert!(fp2.ideal.equals(&Ideal::parse(&r2, &["x^3", "y^4", "x*y"]).unwrap()).unwrap());
        let q = QuotientAlgebra::new(&fp2.ideal).unwrap();
        assert_eq!(q.edim(), s3.edim() + t4.edim());
        let k = algebra(&["z"], &["z"]);
        let triv = fibre_product(&s3, &k).unwrap();
        assert!(triv.trivial);
        assert!(fibre_product(&s3, &algebra(&["x"], &["x^2"])).is_err());
    }
}
