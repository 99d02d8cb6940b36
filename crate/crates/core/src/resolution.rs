//! Modules over a [`QuotientAlgebra`], minimal free resolutions by linear
//! algebra, syzygies, entry ideals, the socle test for `k` as a direct
//! summand of a syzygy, Koszul homology, Tor, and the `M(x)` construction.
//!
//! A free module `R^β` is handled as the vector space with basis
//! `(j, k)`, generator `j` times standard monomial `b_k`, stored at index
//! `j * ℓ + k`. When the ring and module are graded, every map respects the
//! labels of [`Grading`], and kernels are computed one label at a time.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::artinian::{apply_sparse, AlgebraIdeal, Grading, QuotientAlgebra, SparseMap};
use crate::error::{Error, Result};
use crate::field::{Coeff, EchelonSpace, Matrix, PrimeField};
use crate::groebner::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

pub type SparseVec = Vec<(usize, Coeff)>;

fn grading_rank(g: Grading) -> u8 {
    match g {
        Grading::Multi => 2,
        Grading::Standard => 1,
        Grading::Ungraded => 0,
    }
}

/// The finest grading both inputs carry.
pub fn common_grading(a: Grading, b: Grading) -> Grading {
    if grading_rank(a) <= grading_rank(b) {
        a
    } else {
        b
    }
}

/// Relabels a label of grading `from` in the coarser grading `to`.
pub fn coarsen(label: &Monomial, from: Grading, to: Grading) -> Monomial {
    match (from, to) {
        (a, b) if a == b => *label,
        (_, Grading::Ungraded) => Monomial::one(),
        (Grading::Multi, Grading::Standard) => Monomial::from_exponents(&[label.degree()]),
        _ => panic!("cannot refine a grading"),
    }
}

fn label_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| MonomialOrder::Grevlex.cmp(b, a))
}

fn normalize(f: PrimeField, mut v: Vec<(usize, Coeff)>) -> SparseVec {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = f.add(last.1, c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

fn apply_map_sparse(f: PrimeField, map: &SparseMap, v: &SparseVec) -> SparseVec {
    let mut acc = Vec::new();
    for &(k, c) in v {
        for &(r, x) in &map[k] {
            acc.push((r, f.mul(c, x)));
        }
    }
    normalize(f, acc)
}

fn to_dense(v: &SparseVec, len: usize) -> Vec<Coeff> {
    let mut d = vec![0; len];
    for &(i, c) in v {
        d[i] = c;
    }
    d
}

fn to_sparse(v: &[Coeff]) -> SparseVec {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
}

/// A finitely generated module over `R`, given as a vector space with one
/// action matrix per variable.
#[derive(Clone, Debug)]
pub struct AlgebraModule {
    field: PrimeField,
    dim: usize,
    actions: Vec<SparseMap>,
    labels: Vec<Monomial>,
    grading: Grading,
    pub name: Option<String>,
}

impl AlgebraModule {
    pub fn from_actions(field: PrimeField, actions: Vec<SparseMap>, labels: Vec<Monomial>, grading: Grading) -> Self {
        let dim = labels.len();
        Self { field, dim, actions, labels, grading, name: None }
    }

    /// `R/J` for an ideal `J ⊇ I` of the polynomial ring.
    pub fn cyclic(r: &QuotientAlgebra, j: &Ideal) -> Result<Self> {
        if !j.contains_ideal(r.ideal())? {
            return Err(Error::Precondition("the ideal does not contain the defining ideal of the ring".into()));
        }
        if j.is_unit() {
            let actions = vec![Vec::new(); r.nvars()];
            return Ok(Self::from_actions(r.field(), actions, Vec::new(), r.grading()));
        }
        let q = QuotientAlgebra::new(j)?;
        let grading = common_grading(r.grading(), q.grading());
        let labels = q.basis().iter().map(|m| grading.label_of(m)).collect();
        let actions = (0..r.nvars()).map(|i| q.action(i).clone()).collect();
        Ok(Self::from_actions(r.field(), actions, labels, grading))
    }

    pub fn residue_field(r: &QuotientAlgebra) -> Self {
        let actions = vec![vec![Vec::new()]; r.nvars()];
        Self::from_actions(r.field(), actions, vec![Monomial::one()], r.grading())
    }

    pub fn free(r: &QuotientAlgebra, rank: usize) -> Self {
        let ell = r.dim();
        let labels_r = r.labels();
        let mut actions = Vec::with_capacity(r.nvars());
        for i in 0..r.nvars() {
            let mut map: SparseMap = Vec::with_capacity(rank * ell);
            for j in 0..rank {
                for col in r.action(i) {
                    map.push(col.iter().map(|&(k, c)| (j * ell + k, c)).collect());
                }
            }
            actions.push(map);
        }
        let labels = (0..rank).flat_map(|_| labels_r.iter().copied()).collect();
        Self::from_actions(r.field(), actions, labels, r.grading())
    }

    /// Direct sum of at least one module.
    pub fn direct_sum(mods: &[&AlgebraModule]) -> Self {
        let field = mods[0].field;
        let n = mods[0].actions.len();
        let grading = mods.iter().fold(Grading::Multi, |g, m| common_grading(g, m.grading));
        let mut actions: Vec<SparseMap> = vec![Vec::new(); n];
        let mut labels = Vec::new();
        let mut offset = 0;
        for m in mods {
            for (i, act) in actions.iter_mut().enumerate() {
                for col in &m.actions[i] {
                    act.push(col.iter().map(|&(k, c)| (offset + k, c)).collect());
                }
            }
            labels.extend(m.labels.iter().map(|l| coarsen(l, m.grading, grading)));
            offset += m.dim;
        }
        Self::from_actions(field, actions, labels, grading)
    }

    /// `R^rows / (R-span of columns)`; columns are vectors of the free
    /// module in `j * ℓ + k` coordinates. The result is ungraded.
    pub fn cokernel(r: &QuotientAlgebra, rows: usize, columns: &[Vec<Coeff>]) -> Self {
        let f = r.field();
        let ell = r.dim();
        let free = Self::free(r, rows);
        let total = rows * ell;
        let mut sub = EchelonSpace::new(f, total);
        let mut queue: Vec<Vec<Coeff>> = columns.to_vec();
        while let Some(v) = queue.pop() {
            if sub.insert(&v) {
                for i in 0..r.nvars() {
                    queue.push(free.apply_var(i, &v));
                }
            }
        }
        let mut is_pivot = vec![false; total];
        for p in sub.pivots() {
            is_pivot[p] = true;
        }
        let quot: Vec<usize> = (0..total).filter(|&c| !is_pivot[c]).collect();
        let pos: HashMap<usize, usize> = quot.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let mut actions = Vec::with_capacity(r.nvars());
        for i in 0..r.nvars() {
            let mut map: SparseMap = Vec::with_capacity(quot.len());
            for &q in &quot {
                let mut e = vec![0; total];
                e[q] = 1;
                let w = sub.reduce(&free.apply_var(i, &e));
                map.push(w.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (pos[&k], c)).collect());
            }
            actions.push(map);
        }
        Self::from_actions(f, actions, vec![Monomial::one(); quot.len()], Grading::Ungraded)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    pub fn action(&self, var: usize) -> &SparseMap {
        &self.actions[var]
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn apply_var(&self, var: usize, v: &[Coeff]) -> Vec<Coeff> {
        apply_sparse(self.field, &self.actions[var], v, self.dim)
    }

    /// The actions commute and every Gröbner basis element of the ring's
    /// ideal acts as zero.
    pub fn validate(&self, r: &QuotientAlgebra) -> bool {
        let f = r.field();
        let n = r.nvars();
        let e = |k: usize| {
            let mut v = vec![0; self.dim];
            v[k] = 1;
            v
        };
        let act = |i: usize, v: &Vec<Coeff>| apply_sparse(f, &self.actions[i], v, self.dim);
        for k in 0..self.dim {
            for i in 0..n {
                for j in 0..i {
                    if act(i, &act(j, &e(k))) != act(j, &act(i, &e(k))) {
                        return false;
                    }
                }
            }
        }
        for g in r.ideal().groebner_basis() {
            for k in 0..self.dim {
                if self.act_polynomial(f, g, &e(k)).iter().any(|&c| c != 0) {
                    return false;
                }
            }
        }
        true
    }

    pub fn act_monomial(&self, f: PrimeField, m: &Monomial, v: &[Coeff]) -> Vec<Coeff> {
        let mut w = v.to_vec();
        for i in 0..self.actions.len() {
            for _ in 0..m.exp(i) {
                w = apply_sparse(f, &self.actions[i], &w, self.dim);
            }
        }
        w
    }

    pub fn act_polynomial(&self, f: PrimeField, p: &Polynomial, v: &[Coeff]) -> Vec<Coeff> {
        let mut out = vec![0; self.dim];
        for t in p.terms() {
            let w = self.act_monomial(f, &t.mono, v);
            for (o, x) in out.iter_mut().zip(w) {
                *o = f.add(*o, f.mul(t.coeff, x));
            }
        }
        out
    }

    /// `μ(M) = dim M / mM`.
    pub fn mu(&self, r: &QuotientAlgebra) -> usize {
        let mut space = EchelonSpace::new(r.field(), self.dim);
        for k in 0..self.dim {
            for i in 0..r.nvars() {
                let col: SparseVec = self.actions[i][k].clone();
                space.insert(&to_dense(&col, self.dim));
            }
        }
        self.dim - space.dim()
    }

    pub fn is_free(&self, r: &QuotientAlgebra) -> bool {
        self.dim == self.mu(r) * r.dim()
    }
}


/// Label blocks of a vector space: indices grouped by label, keys sorted by
/// degree and then descending grevlex.
struct Blocks {
    keys: Vec<Monomial>,
    members: HashMap<Monomial, Vec<usize>>,
    local: Vec<usize>,
}

impl Blocks {
    fn new(labels: &[Monomial]) -> Self {
        let mut members: HashMap<Monomial, Vec<usize>> = HashMap::new();
        let mut local = vec![0; labels.len()];
        for (idx, l) in labels.iter().enumerate() {
            let m = members.entry(*l).or_default();
            local[idx] = m.len();
            m.push(idx);
        }
        let mut keys: Vec<Monomial> = members.keys().copied().collect();
        keys.sort_by(label_cmp);
        Self { keys, members, local }
    }

    fn size(&self, key: &Monomial) -> usize {
        self.members.get(key).map_or(0, Vec::len)
    }

    fn localize(&self, v: &SparseVec, key: &Monomial) -> Vec<Coeff> {
        let mut d = vec![0; self.size(key)];
        for &(i, c) in v {
            d[self.local[i]] = c;
        }
        d
    }

    fn globalize(&self, v: &[Coeff], key: &Monomial) -> SparseVec {
        let m = &self.members[key];
        v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (m[k], c)).collect()
    }
}

/// Verdict of the socle test, with a witness `z ∈ Soc Z \ mZ` given by its
/// components in the ambient free module (one ring element per generator).
#[derive(Clone, Debug)]
pub struct SummandVerdict {
    pub summand: bool,
    pub witness: Option<Vec<Vec<Coeff>>>,
}

/// `Ω^i M` as the kernel of `∂_{i-1}` inside `R^{β_{i-1}}`.
#[derive(Clone, Debug)]
pub struct SyzygyModule {
    pub index: usize,
    pub ambient_rank: usize,
    /// Vector-space basis in ambient coordinates.
    pub basis: Vec<SparseVec>,
    /// Minimal generators in ambient coordinates.
    pub generators: Vec<SparseVec>,
}

impl SyzygyModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mu(&self) -> usize {
        self.generators.len()
    }
}

/// A minimal free resolution `... → F_1 → F_0 → M` computed up to `F_N`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: QuotientAlgebra,
    module: AlgebraModule,
    kind: Grading,
    ell: usize,
    rlabels: Vec<Monomial>,
    table: Vec<Vec<SparseVec>>,
    betti: Vec<usize>,
    /// `gens[i][j]`: image of the `j`-th basis element of `F_i` (in `M` for
    /// `i = 0`, in `F_{i-1}` otherwise).
    gens: Vec<Vec<SparseVec>>,
    gen_labels: Vec<Vec<Monomial>>,
    /// `kernels[0]` spans `M`; `kernels[i]` spans `Ω^i M ⊆ F_{i-1}`.
    kernels: Vec<Vec<SparseVec>>,
}

impl Resolution {
    fn target_dim(&self, i: usize) -> usize {
        if i == 0 {
            self.module.dim()
        } else {
            self.betti[i - 1] * self.ell
        }
    }

    fn target_label(&self, i: usize, idx: usize) -> Monomial {
        if i == 0 {
            coarsen(&self.module.labels()[idx], self.module.grading(), self.kind)
        } else {
            self.gen_labels[i - 1][idx / self.ell].mul(&self.rlabels[idx % self.ell])
        }
    }

    fn target_labels(&self, i: usize) -> Vec<Monomial> {
        (0..self.target_dim(i)).map(|idx| self.target_label(i, idx)).collect()
    }

    fn target_act_var(&self, i: usize, var: usize, v: &SparseVec) -> SparseVec {
        let f = self.ring.field();
        if i == 0 {
            return apply_map_sparse(f, self.module.action(var), v);
        }
        let ell = self.ell;
        let act = self.ring.action(var);
        let mut acc = Vec::new();
        for &(g, c) in v {
            let (j, k) = (g / ell, g % ell);
            for &(k2, x) in &act[k] {
                acc.push((j * ell + k2, f.mul(c, x)));
            }
        }
        normalize(f, acc)
    }

    /// `b_k · v` in target `i`.
    fn target_act_basis(&self, i: usize, k: usize, v: &SparseVec) -> SparseVec {
        let f = self.ring.field();
        if i == 0 {
            let m = self.ring.basis()[k];
            let mut w = v.clone();
            for var in 0..self.ring.nvars() {
                for _ in 0..m.exp(var) {
                    w = apply_map_sparse(f, self.module.action(var), &w);
                }
            }
            return w;
        }
        let ell = self.ell;
        let mut acc = Vec::new();
        for &(g, c) in v {
            let (j, m) = (g / ell, g % ell);
            for &(m2, x) in &self.table[k][m] {
                acc.push((j * ell + m2, f.mul(c, x)));
            }
        }
        normalize(f, acc)
    }

    /// Minimal generators of the submodule spanned by `sub` (closed under
    /// the actions) of target `i`: vectors outside `m · sub` plus the ones
    /// already chosen, taken block by block.
    fn select_generators(&self, i: usize, sub: &[SparseVec]) -> Vec<SparseVec> {
        let f = self.ring.field();
        let labels = self.target_labels(i);
        let blocks = Blocks::new(&labels);
        let mut spaces: HashMap<Monomial, EchelonSpace> = HashMap::new();
        for v in sub {
            for var in 0..self.ring.nvars() {
                let w = self.target_act_var(i, var, v);
                if let Some(&(idx, _)) = w.first() {
                    let key = labels[idx];
                    let len = blocks.size(&key);
                    spaces.entry(key).or_insert_with(|| EchelonSpace::new(f, len)).insert(&blocks.localize(&w, &key));
                }
            }
        }
        let mut by_block: HashMap<Monomial, Vec<&SparseVec>> = HashMap::new();
        for v in sub {
            if let Some(&(idx, _)) = v.first() {
                by_block.entry(labels[idx]).or_default().push(v);
            }
        }
        let mut out = Vec::new();
        for key in &blocks.keys {
            let Some(vs) = by_block.get(key) else { continue };
            let len = blocks.size(key);
            let space = spaces.entry(*key).or_insert_with(|| EchelonSpace::new(f, len));
            for v in vs {
                if space.insert(&blocks.localize(v, key)) {
                    out.push((*v).clone());
                }
            }
        }
        out
    }

    fn domain_labels(&self, i: usize) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.betti[i] * self.ell);
        for g in &self.gen_labels[i] {
            for l in &self.rlabels {
                out.push(g.mul(l));
            }
        }
        out
    }

    /// Image of the basis element `(j, k)` of `F_i`.
    fn image(&self, i: usize, idx: usize) -> SparseVec {
        self.target_act_basis(i, idx % self.ell, &self.gens[i][idx / self.ell])
    }

    /// `ker(F_i → target_i)`, block by block.
    fn kernel_of(&self, i: usize) -> Vec<SparseVec> {
        let f = self.ring.field();
        let dom_labels = self.domain_labels(i);
        let dom = Blocks::new(&dom_labels);
        let cod_labels = self.target_labels(i);
        let cod = Blocks::new(&cod_labels);
        let mut out = Vec::new();
        for key in &dom.keys {
            let cols = &dom.members[key];
            let rows = cod.size(key);
            let mut a = Matrix::zeros(f, rows, cols.len());
            for (c, &idx) in cols.iter().enumerate() {
                for (r, x) in self.image(i, idx) {
                    debug_assert_eq!(cod_labels[r], *key, "map is not homogeneous");
                    a.set(cod.local[r], c, x);
                }
            }
            let ker = a.kernel_basis();
            for c in 0..ker.cols() {
                out.push(dom.globalize(&ker.column(c), key));
            }
        }
        out
    }

    pub fn ring(&self) -> &QuotientAlgebra {
        &self.ring
    }

    pub fn module(&self) -> &AlgebraModule {
        &self.module
    }

    /// The longest index `N` for which `F_N` was computed.
    pub fn length(&self) -> usize {
        self.betti.len() - 1
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    /// `∂_i` for `i ≥ 1` as columns: `d[j][j']` is the entry in row `j'`
    /// (generator of `F_{i-1}`) and column `j` (generator of `F_i`).
    pub fn differential(&self, i: usize) -> Vec<Vec<Vec<Coeff>>> {
        assert!(i >= 1 && i <= self.length(), "differential index out of range");
        let ell = self.ell;
        self.gens[i]
            .iter()
            .map(|g| {
                let mut col = vec![vec![0; ell]; self.betti[i - 1]];
                for &(idx, c) in g {
                    col[idx / ell][idx % ell] = c;
                }
                col
            })
            .collect()
    }

    /// Rows of `∂_i` printed as polynomials.
    pub fn format_differential(&self, i: usize) -> Vec<Vec<String>> {
        let d = self.differential(i);
        (0..self.betti[i - 1])
            .map(|r| d.iter().map(|col| self.ring.format_element(&col[r])).collect())
            .collect()
    }

    /// `I_1(∂_i)` as an ideal of `R`.
    pub fn entry_ideal(&self, i: usize) -> AlgebraIdeal {
        let entries: Vec<Vec<Coeff>> =
            self.differential(i).into_iter().flatten().filter(|v| v.iter().any(|&c| c != 0)).collect();
        let basis = self.ring.ideal_span(&entries);
        let generators = self.ring.minimal_generators_of(&basis);
        AlgebraIdeal { basis, generators }
    }

    /// Standard-monomial lifts of minimal generators of `I_1(∂_i)`.
    pub fn entry_ideal_lift(&self, i: usize) -> Vec<Polynomial> {
        self.entry_ideal(i).generators.iter().map(|v| self.ring.lift(v)).collect()
    }

    /// `I_1(∂_i) + I = m`.
    pub fn entry_ideal_is_maximal(&self, i: usize) -> bool {
        self.entry_ideal(i).dim() + 1 == self.ell
    }

    /// `Σ_{i ≤ n} I_1(∂_i) = m`.
    pub fn entry_ideal_sum_is_maximal(&self, n: usize) -> bool {
        let mut entries = Vec::new();
        for i in 1..=n.min(self.length()) {
            entries.extend(self.differential(i).into_iter().flatten());
        }
        self.ring.ideal_span(&entries).len() + 1 == self.ell
    }

    pub fn syzygy(&self, i: usize) -> SyzygyModule {
        assert!(i >= 1 && i <= self.length(), "syzygy index out of range");
        SyzygyModule {
            index: i,
            ambient_rank: self.betti[i - 1],
            basis: self.kernels[i].clone(),
            generators: self.gens[i].clone(),
        }
    }

    /// `Soc Ω^i M ⊄ m Ω^i M`, which for a submodule of a free module says
    /// that `k` is a direct summand. Candidate witnesses `s e_j` (socle
    /// element of `R` times a generator) are tried first.
    pub fn k_summand_test(&self, i: usize) -> SummandVerdict {
        assert!(i >= 1 && i <= self.length(), "syzygy index out of range");
        let f = self.ring.field();
        let t = i - 1;
        let labels = self.target_labels(i);
        let blocks = Blocks::new(&labels);
        let z = &self.kernels[i];
        let mut mz: HashMap<Monomial, EchelonSpace> = HashMap::new();
        for v in z {
            for var in 0..self.ring.nvars() {
                let w = self.target_act_var(i, var, v);
                if let Some(&(idx, _)) = w.first() {
                    let key = labels[idx];
                    let len = blocks.size(&key);
                    mz.entry(key).or_insert_with(|| EchelonSpace::new(f, len)).insert(&blocks.localize(&w, &key));
                }
            }
        }
        let outside_mz = |v: &SparseVec| -> bool {
            let mut parts: HashMap<Monomial, SparseVec> = HashMap::new();
            for &(idx, c) in v {
                parts.entry(labels[idx]).or_default().push((idx, c));
            }
            parts.iter().any(|(key, part)| match mz.get(key) {
                Some(space) => !space.contains(&blocks.localize(part, key)),
                None => true,
            })
        };
        let ell = self.ell;
        let to_components = |v: &SparseVec| -> Vec<Vec<Coeff>> {
            let mut comps = vec![vec![0; ell]; self.betti[t]];
            for &(idx, c) in v {
                comps[idx / ell][idx % ell] = c;
            }
            comps
        };
        // s e_j candidates; they lie in the socle of the free module.
        for s in self.ring.socle() {
            for j in 0..self.betti[t] {
                let cand: SparseVec =
                    s.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (j * ell + k, c)).collect();
                let mut img = Vec::new();
                for &(idx, c) in &cand {
                    for (r, x) in self.image(t, idx) {
                        img.push((r, f.mul(c, x)));
                    }
                }
                if normalize(f, img).is_empty() && outside_mz(&cand) {
                    return SummandVerdict { summand: true, witness: Some(to_components(&cand)) };
                }
            }
        }
        // General search: the socle of each block of Z.
        let mut by_block: HashMap<Monomial, Vec<&SparseVec>> = HashMap::new();
        for v in z {
            if let Some(&(idx, _)) = v.first() {
                by_block.entry(labels[idx]).or_default().push(v);
            }
        }
        for key in &blocks.keys {
            let Some(vs) = by_block.get(key) else { continue };
            let mut rows: HashMap<(usize, usize), usize> = HashMap::new();
            let mut entries: Vec<(usize, usize, Coeff)> = Vec::new();
            for (c, v) in vs.iter().enumerate() {
                for var in 0..self.ring.nvars() {
                    for (idx, x) in self.target_act_var(i, var, v) {
                        let n = rows.len();
                        let r = *rows.entry((var, idx)).or_insert(n);
                        entries.push((r, c, x));
                    }
                }
            }
            let mut a = Matrix::zeros(f, rows.len(), vs.len());
            for (r, c, x) in entries {
                a.set(r, c, x);
            }
            let ker = a.kernel_basis();
            for c in 0..ker.cols() {
                let coeffs = ker.column(c);
                let mut acc = Vec::new();
                for (k, v) in vs.iter().enumerate() {
                    if coeffs[k] != 0 {
                        acc.extend(v.iter().map(|&(idx, x)| (idx, f.mul(coeffs[k], x))));
                    }
                }
                let sv = normalize(f, acc);
                if !sv.is_empty() && outside_mz(&sv) {
                    return SummandVerdict { summand: true, witness: Some(to_components(&sv)) };
                }
            }
        }
        SummandVerdict { summand: false, witness: None }
    }

    /// Rank of `∂_i ⊗ N` for `i ≥ 1`.
    fn tensor_rank(&self, n: &AlgebraModule, i: usize) -> usize {
        if i == 0 || i > self.length() || self.betti[i] == 0 {
            return 0;
        }
        let f = self.ring.field();
        let ell = self.ell;
        let dn = n.dim();
        if dn == 0 {
            return 0;
        }
        let kind = common_grading(self.kind, n.grading());
        let nl: Vec<Monomial> = n.labels().iter().map(|l| coarsen(l, n.grading(), kind)).collect();
        // b_k acting on N
        let mon: Vec<Vec<SparseVec>> = self
            .ring
            .basis()
            .iter()
            .map(|m| {
                (0..dn)
                    .map(|e| {
                        let mut v = vec![0; dn];
                        v[e] = 1;
                        to_sparse(&n.act_monomial(f, m, &v))
                    })
                    .collect()
            })
            .collect();
        let dom_labels: Vec<Monomial> = (0..self.betti[i] * dn)
            .map(|idx| coarsen(&self.gen_labels[i][idx / dn], self.kind, kind).mul(&nl[idx % dn]))
            .collect();
        let cod_labels: Vec<Monomial> = (0..self.betti[i - 1] * dn)
            .map(|idx| coarsen(&self.gen_labels[i - 1][idx / dn], self.kind, kind).mul(&nl[idx % dn]))
            .collect();
        let dom = Blocks::new(&dom_labels);
        let cod = Blocks::new(&cod_labels);
        let mut rank = 0;
        for key in &dom.keys {
            let cols = &dom.members[key];
            let rows = cod.size(key);
            if rows == 0 {
                continue;
            }
            let mut a = Matrix::zeros(f, rows, cols.len());
            for (c, &idx) in cols.iter().enumerate() {
                let (j, e) = (idx / dn, idx % dn);
                let mut acc = Vec::new();
                for &(g, x) in &self.gens[i][j] {
                    let (j2, k) = (g / ell, g % ell);
                    for &(e2, y) in &mon[k][e] {
                        acc.push((j2 * dn + e2, f.mul(x, y)));
                    }
                }
                for (r, x) in normalize(f, acc) {
                    a.set(cod.local[r], c, x);
                }
            }
            rank += a.rank();
        }
        rank
    }

    /// Entries in `m`, `∂_i ∂_{i+1} = 0` and `β_{i-1} ℓ = rank ∂_i + dim ker ∂_i`.
    pub fn audit(&self) -> bool {
        let f = self.ring.field();
        for i in 0..self.length() {
            if i >= 1 {
                let entries_in_m = self.gens[i].iter().all(|g| g.iter().all(|&(idx, _)| idx % self.ell != 0));
                if !entries_in_m {
                    return false;
                }
            }
            for g in &self.gens[i + 1] {
                let mut acc = Vec::new();
                for &(idx, c) in g {
                    acc.extend(self.image(i, idx).into_iter().map(|(r, x)| (r, f.mul(c, x))));
                }
                if !normalize(f, acc).is_empty() {
                    return false;
                }
            }
            let total = self.betti[i] * self.ell;
            let next = &self.kernels[i + 1];
            let mut image = EchelonSpace::new(f, self.target_dim(i));
            for idx in 0..total {
                image.insert(&to_dense(&self.image(i, idx), self.target_dim(i)));
            }
            if image.dim() + next.len() != total || image.dim() != self.kernels[i].len() {
                return false;
            }
        }
        true
    }

    /// `dim_k Tor_i(M, N)`; needs a resolution of length at least `i + 1`.
    pub fn tor_dimension(&self, n: &AlgebraModule, i: usize) -> Result<usize> {
        if i + 1 > self.length() && !self.betti.contains(&0) {
            return Err(Error::Precondition(format!("resolution of length {} is too short for Tor_{i}", self.length())));
        }
        let bi = self.betti.get(i).copied().unwrap_or(0);
        Ok(bi * n.dim() - self.tensor_rank(n, i) - self.tensor_rank(n, i + 1))
    }
}

fn mult_table(r: &QuotientAlgebra) -> Vec<Vec<SparseVec>> {
    let ell = r.dim();
    r.basis()
        .iter()
        .map(|m| (0..ell).map(|k| to_sparse(&r.apply_monomial(m, &r.basis_vector(k)))).collect())
        .collect()
}

/// Minimal free resolution of `M` up to `F_length`.
pub fn minimal_resolution(r: &QuotientAlgebra, m: &AlgebraModule, length: usize) -> Resolution {
    let kind = common_grading(r.grading(), m.grading());
    let rlabels = r.labels().iter().map(|l| coarsen(l, r.grading(), kind)).collect();
    let mut res = Resolution {
        ring: r.clone(),
        module: m.clone(),
        kind,
        ell: r.dim(),
        rlabels,
        table: mult_table(r),
        betti: Vec::new(),
        gens: Vec::new(),
        gen_labels: Vec::new(),
        kernels: Vec::new(),
    };
    let mut kernel: Vec<SparseVec> = (0..m.dim()).map(|k| vec![(k, 1)]).collect();
    res.kernels.push(kernel.clone());
    for i in 0..=length {
        let gens = res.select_generators(i, &kernel);
        let labels: Vec<Monomial> = gens.iter().map(|g| res.target_label(i, g[0].0)).collect();
        res.betti.push(gens.len());
        res.gens.push(gens);
        res.gen_labels.push(labels);
        if i == length {
            break;
        }
        kernel = if res.betti[i] == 0 { Vec::new() } else { res.kernel_of(i) };
        res.kernels.push(kernel.clone());
    }
    res
}

/// `dim_k Tor_i^R(M, N)` from a resolution of `M`.
pub fn tor(r: &QuotientAlgebra, m: &AlgebraModule, n: &AlgebraModule, i: usize) -> usize {
    let res = minimal_resolution(r, m, i + 1);
    res.tor_dimension(n, i).expect("length suffices")
}

/// Variables whose images form a basis of `m/m²`.
pub fn minimal_generators_of_maximal(r: &QuotientAlgebra) -> Vec<usize> {
    let n = r.nvars();
    let mut space = EchelonSpace::new(r.field(), r.dim());
    for i in 0..n {
        for j in 0..n {
            space.insert(&r.apply_var(i, &r.variable(j)));
        }
    }
    (0..n).filter(|&i| space.insert(&r.variable(i))).collect()
}

/// `dim_k H_1` of the Koszul complex on a minimal generating set of `m`.
pub fn koszul_h1(r: &QuotientAlgebra) -> usize {
    if r.is_field() {
        return 0;
    }
    let f = r.field();
    let ell = r.dim();
    let vars = minimal_generators_of_maximal(r);
    let e = vars.len();
    let mut pairs = Vec::new();
    for a in 0..e {
        for b in a + 1..e {
            pairs.push((a, b));
        }
    }
    // d_2(e_a ∧ e_b ⊗ b_k) = m_a b_k e_b - m_b b_k e_a
    let mut d2 = Matrix::zeros(f, e * ell, pairs.len() * ell);
    for (p, &(a, b)) in pairs.iter().enumerate() {
        for k in 0..ell {
            let col = p * ell + k;
            for &(r2, x) in &r.action(vars[a])[k] {
                d2.set(b * ell + r2, col, f.add(d2.get(b * ell + r2, col), x));
            }
            for &(r2, x) in &r.action(vars[b])[k] {
                d2.set(a * ell + r2, col, f.sub(d2.get(a * ell + r2, col), x));
            }
        }
    }
    e * ell - (ell - 1) - d2.rank()
}

/// `M(x)` with the checks that come with it.
#[derive(Clone, Debug)]
pub struct MxConstruction {
    pub module: AlgebraModule,
    /// Ideal of `R` generated by the entries of the presentation
    /// `[[∂_2, x·1], [0, -∂_1]]`.
    pub presentation_entries: AlgebraIdeal,
    /// `dim M(x) = dim M + dim ΩM`.
    pub dimension_certificate: bool,
    /// `x` lies in `I_1(M(x))`, computed from a fresh minimal resolution.
    pub contains_x: bool,
}

/// The cokernel of `[[∂_2, x·Id], [0, -∂_1]] : F_2 ⊕ F_1 → F_1 ⊕ F_0`.
pub fn mx_construction(r: &QuotientAlgebra, m: &AlgebraModule, x: &[Coeff]) -> Result<MxConstruction> {
    if !r.in_maximal(x) {
        return Err(Error::Precondition("the element must lie in the maximal ideal".into()));
    }
    let res = minimal_resolution(r, m, 2);
    let (b0, b1) = (res.betti[0], res.betti[1]);
    if b1 == 0 {
        return Err(Error::Precondition("the module is free".into()));
    }
    let f = r.field();
    let ell = r.dim();
    let rows = b1 + b0;
    let mut columns: Vec<Vec<Coeff>> = Vec::new();
    for g in &res.gens[2] {
        columns.push(to_dense(g, rows * ell));
    }
    for (j, g) in res.gens[1].iter().enumerate() {
        let mut col = vec![0; rows * ell];
        col[j * ell..(j + 1) * ell].copy_from_slice(x);
        for &(idx, c) in g {
            col[b1 * ell + idx] = f.neg(c);
        }
        columns.push(col);
    }
    let module = AlgebraModule::cokernel(r, rows, &columns);
    let mut entries: Vec<Vec<Coeff>> = vec![x.to_vec()];
    for i in 1..=2 {
        entries.extend(res.differential(i).into_iter().flatten());
    }
    let basis = r.ideal_span(&entries);
    let generators = r.minimal_generators_of(&basis);
    let omega_dim = res.kernels[1].len();
    let dimension_certificate = module.dim() == m.dim() + omega_dim;
    let own = minimal_resolution(r, &module, 1).entry_ideal(1);
    let mut space = EchelonSpace::new(f, ell);
    for v in &own.basis {
        space.insert(v);
    }
    let contains_x = space.contains(x);
    Ok(MxConstruction {
        module,
        presentation_entries: AlgebraIdeal { basis, generators },
        dimension_certificate,
        contains_x,
    })
}

/// `I_1(M)`: the entry ideal of a minimal presentation.
pub fn module_entry_ideal(r: &QuotientAlgebra, m: &AlgebraModule) -> AlgebraIdeal {
    minimal_resolution(r, m, 1).entry_ideal(1)
}
