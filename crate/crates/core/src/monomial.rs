//! Monomial ideals as staircases: arithmetic without Gröbner bases, the
//! combinatorial Burch criteria, two-variable Hilbert–Burch matrices, and an
//! enumerator of `m`-primary monomial ideals in two variables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, PolyMatrix, SyzygyMatrix};
use crate::poly::{Monomial, RingContext};

/// Largest socle degree accepted by [`enumerate_mprimary`].
pub const MAX_ENUMERATION_DEGREE: u32 = 7;

/// Minimal monomial generators, sorted descending in the ring order. The unit
/// ideal is stored as the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<RingContext>,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal({self})")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|m| self.ring.format_monomial(m)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<RingContext>, mons: &[Monomial]) -> Self {
        let mut gens: Vec<Monomial> = Vec::new();
        for m in mons {
            if gens.iter().any(|g| g.divides(m)) {
                continue;
            }
            gens.retain(|g| !m.divides(g));
            gens.push(*m);
        }
        gens.sort_by(|a, b| ring.cmp(b, a));
        Self { ring: ring.clone(), gens }
    }

    pub fn from_exponents(ring: &Arc<RingContext>, exps: &[Vec<u32>]) -> Self {
        let mons: Vec<Monomial> = exps.iter().map(|e| Monomial::from_exponents(e)).collect();
        Self::new(ring, &mons)
    }

    /// Fails unless every generator is a single term.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let mut mons = Vec::new();
        for g in ideal.generators() {
            if !g.is_monomial() {
                return Err(Error::Precondition(format!(
                    "`{}` is not a monomial",
                    ideal.ring().format(g)
                )));
            }
            mons.push(g.leading_monomial().unwrap());
        }
        Ok(Self::new(ideal.ring(), &mons))
    }

    pub fn maximal(ring: &Arc<RingContext>) -> Self {
        let mons: Vec<Monomial> = (0..ring.nvars()).map(Monomial::var).collect();
        Self::new(ring, &mons)
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::from_monomials(&self.ring, &self.gens)
    }

    pub fn contains_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains(m))
    }

    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut mons = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                mons.push(a.mul(b));
            }
        }
        Self::new(&self.ring, &mons)
    }

    pub fn times_maximal(&self) -> MonomialIdeal {
        self.product(&Self::maximal(&self.ring))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut mons = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                mons.push(a.lcm(b));
            }
        }
        Self::new(&self.ring, &mons)
    }

    /// `(I : u)` for a monomial `u`: generators `m / gcd(m, u)`.
    pub fn colon_monomial(&self, u: &Monomial) -> MonomialIdeal {
        let n = self.ring.nvars();
        let mons: Vec<Monomial> = self
            .gens
            .iter()
            .map(|m| {
                let e: Vec<u32> = (0..n).map(|i| m.exp(i).saturating_sub(u.exp(i))).collect();
                Monomial::from_exponents(&e)
            })
            .collect();
        Self::new(&self.ring, &mons)
    }

    /// `(I : m)`, the intersection of the colons by the variables.
    pub fn mono_colon_m(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        let mut acc = self.colon_monomial(&Monomial::var(0));
        for i in 1..n {
            acc = acc.intersection(&self.colon_monomial(&Monomial::var(i)));
        }
        acc
    }

    pub fn is_m_primary(&self) -> bool {
        !self.contains_unit()
            && (0..self.ring.nvars()).all(|i| self.gens.iter().any(|m| m.exp(i) > 0 && m.exp(i) == m.degree()))
    }

    /// Staircase monomials, by ascending degree.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        let n = self.ring.nvars();
        let mut out = vec![Monomial::one()];
        let mut layer = vec![Monomial::one()];
        while !layer.is_empty() {
            let mut next: Vec<Monomial> = Vec::new();
            for m in &layer {
                for i in 0..n {
                    let c = m.times_var(i);
                    if !self.contains(&c) && !next.contains(&c) {
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

    /// A minimal generator `m` and variable index `i` with `x_i | m` and
    /// `m x_j / x_i ∈ I` for every `j`, when one exists. Variables are tried
    /// from last to first, generators in stored order.
    pub fn burch_monomial(&self) -> Option<(Monomial, usize)> {
        let n = self.ring.nvars();
        for i in (0..n).rev() {
            for m in &self.gens {
                if m.exp(i) == 0 {
                    continue;
                }
                let base = m.div(&Monomial::var(i)).unwrap();
                if (0..n).all(|j| self.contains(&base.times_var(j))) {
                    return Some((*m, i));
                }
            }
        }
        None
    }

    /// Generators `x^a y^b` as `(a, b)` with `a` strictly decreasing.
    pub fn twovar_exponents(&self) -> Result<Vec<(u32, u32)>> {
        if self.ring.nvars() != 2 {
            return Err(Error::Precondition("exactly two variables are required".into()));
        }
        if !self.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        let mut e: Vec<(u32, u32)> = self.gens.iter().map(|m| (m.exp(0), m.exp(1))).collect();
        e.sort_by_key(|a| std::cmp::Reverse(a.0));
        Ok(e)
    }

    /// Some consecutive pair has `a_i = a_{i+1} + 1` or `b_i = b_{i+1} - 1`.
    pub fn burch_twovar(&self) -> Result<bool> {
        let e = self.twovar_exponents()?;
        Ok(e.windows(2).any(|w| w[0].0 == w[1].0 + 1 || w[0].1 + 1 == w[1].1))
    }

    /// The bidiagonal `μ × (μ-1)` syzygy matrix of the generators in the
    /// order of [`MonomialIdeal::twovar_exponents`].
    pub fn hilbert_burch_twovar(&self) -> Result<SyzygyMatrix> {
        let e = self.twovar_exponents()?;
        let ring = &self.ring;
        let mu = e.len();
        let mut m = PolyMatrix::zero(ring, mu, mu.saturating_sub(1));
        for i in 0..mu.saturating_sub(1) {
            let (a0, b0) = e[i];
            let (a1, b1) = e[i + 1];
            m.set(i, i, ring.monomial(Monomial::from_exponents(&[0, b1 - b0])));
            m.set(i + 1, i, ring.neg(&ring.monomial(Monomial::from_exponents(&[a0 - a1, 0]))));
        }
        Ok(SyzygyMatrix { matrix: m, minimized: true })
    }

    /// The generators in the row order of the Hilbert–Burch matrix, as an ideal.
    pub fn twovar_ideal(&self) -> Result<Ideal> {
        let e = self.twovar_exponents()?;
        let mons: Vec<Monomial> = e.iter().map(|&(a, b)| Monomial::from_exponents(&[a, b])).collect();
        Ok(Ideal::from_monomials(&self.ring, &mons))
    }
}

/// Catalan number `C_n`, which bounds the number of staircases inside the
/// triangle of side `n - 1`.
/// Saturates at `u64::MAX`.
fn catalan(n: u64) -> u64 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        match c.checked_mul(2 * (2 * k + 1)) {
            Some(v) if v / (k + 2) <= u64::MAX as u128 => c = v / (k + 2),
            _ => return u64::MAX,
        }
    }
    c as u64
}

/// Every `m`-primary monomial ideal `I` of `k[x, y]` with `m^{d+1} ⊆ I`,
/// exactly once. Ideals are described by the column heights `h_a` of their
/// staircase (the number of standard monomials `x^a y^b`), and emitted in lex
/// order of `(h_0, h_1, ..., h_d)`.
pub fn enumerate_mprimary(ring: &Arc<RingContext>, d: u32) -> Result<Vec<MonomialIdeal>> {
    if ring.nvars() != 2 {
        return Err(Error::Precondition("enumeration is implemented for two variables".into()));
    }
    if d > MAX_ENUMERATION_DEGREE {
        return Err(Error::BoundTooLarge { bound: d, estimate: catalan(d as u64 + 2) - 1 });
    }
    let mut out = Vec::new();
    let mut heights = vec![0u32; d as usize + 1];
    fn rec(ring: &Arc<RingContext>, d: u32, a: usize, prev: u32, h: &mut Vec<u32>, out: &mut Vec<MonomialIdeal>) {
        if a == h.len() {
            let mut mons: Vec<Monomial> = (0..h.len()).map(|k| Monomial::from_exponents(&[k as u32, h[k]])).collect();
            mons.push(Monomial::from_exponents(&[h.len() as u32, 0]));
            out.push(MonomialIdeal::new(ring, &mons));
            return;
        }
        let cap = prev.min(d + 1 - a as u32);
        let lo = if a == 0 { 1 } else { 0 };
        for v in lo..=cap {
            h[a] = v;
            rec(ring, d, a + 1, v, h, out);
        }
    }
    rec(ring, d, 0, u32::MAX, &mut heights, &mut out);
    Ok(out)
}
