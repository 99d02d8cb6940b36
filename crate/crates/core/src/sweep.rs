//! Cross-validation of the Burch criteria over all `m`-primary monomial
//! ideals of `k[x, y]` up to a socle degree, and the Tor-vanishing scan.

use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::artinian::QuotientAlgebra;
use crate::burch::{
    c_invariant, choi_from_ring, choi_invariant, cube_zero_test, gorenstein_burch_classifier, mu_growth_test,
    m_full_test, burch_conditions, weakly_m_full_test, MFullVerdict,
};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::{enumerate_mprimary, MonomialIdeal};
use crate::poly::{Monomial, RingContext};
use crate::resolution::{koszul_h1, minimal_resolution, AlgebraModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Equivalence,
    Choi,
    Koszul,
    CubeZero,
    Gorenstein,
    Fullness,
    SquareZero,
    HilbertBurch,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Equivalence,
        Check::Choi,
        Check::Koszul,
        Check::CubeZero,
        Check::Gorenstein,
        Check::Fullness,
        Check::SquareZero,
        Check::HilbertBurch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Equivalence => "equivalence",
            Check::Choi => "choi",
            Check::Koszul => "koszul",
            Check::CubeZero => "cube-zero",
            Check::Gorenstein => "gorenstein",
            Check::Fullness => "fullness",
            Check::SquareZero => "square-zero",
            Check::HilbertBurch => "hilbert-burch",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown check `{s}`")))
    }
}

/// Every verdict computed for one ideal.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    pub ideal: String,
    pub definition: bool,
    pub colon: bool,
    pub socle: bool,
    pub types: bool,
    pub monomial_criterion: bool,
    pub twovar: bool,
    pub mu_growth: bool,
    pub c_r: usize,
    /// `None` for the field, where `Ω²k = 0`.
    pub omega2_summand: Option<bool>,
    pub choi: usize,
    pub choi_from_ring: usize,
    pub koszul_h1: usize,
    pub beta2: usize,
    pub edim: usize,
    pub cube_zero: Option<bool>,
    pub gorenstein: bool,
    pub gorenstein_consistent: bool,
    pub depth_zero: bool,
    pub weakly_m_full: bool,
    pub m_full: bool,
    pub contains_m2: bool,
    pub hilbert_burch_has_variable: bool,
    pub failures: Vec<String>,
}

impl SweepRecord {
    /// The verdicts that must all coincide.
    pub fn equivalence_verdicts(&self) -> Vec<(&'static str, bool)> {
        let mut v = vec![
            ("definition", self.definition),
            ("colon", self.colon),
            ("socle", self.socle),
            ("types", self.types),
            ("monomial", self.monomial_criterion),
            ("twovar", self.twovar),
            ("mu_growth", self.mu_growth),
            ("c_r", self.c_r > 0),
        ];
        if let Some(s) = self.omega2_summand {
            v.push(("omega2", s));
        }
        v
    }

    fn evaluate(&mut self, checks: &[Check]) {
        let mut fail = Vec::new();
        for c in checks {
            let ok = match c {
                Check::Equivalence => self.equivalence_verdicts().iter().all(|&(_, b)| b == self.definition),
                Check::Choi => self.choi == self.choi_from_ring,
                Check::Koszul => self.koszul_h1 + self.edim * self.edim.saturating_sub(1) / 2 == self.beta2,
                Check::CubeZero => self.cube_zero.is_none_or(|b| b == self.definition),
                Check::Gorenstein => self.gorenstein_consistent,
                Check::Fullness => {
                    !(self.weakly_m_full && self.depth_zero && !self.definition)
                        && !(self.m_full && !self.weakly_m_full)
                }
                Check::SquareZero => !self.contains_m2 || self.definition,
                Check::HilbertBurch => self.hilbert_burch_has_variable == self.twovar,
            };
            if !ok {
                fail.push(c.name().to_string());
            }
        }
        self.failures = fail;
    }
}

/// All verdicts for one two-variable monomial ideal.
pub fn record(mi: &MonomialIdeal, checks: &[Check]) -> Result<SweepRecord> {
    let i = mi.to_ideal();
    let ring = i.ring();
    let p = burch_conditions(&i)?;
    let q = QuotientAlgebra::new(&i)?;
    let res = minimal_resolution(&q, &AlgebraModule::residue_field(&q), 2);
    let omega2_summand = if q.is_field() { None } else { Some(res.k_summand_test(2).summand) };
    let gor = gorenstein_burch_classifier(&i)?;
    let hb = mi.hilbert_burch_twovar()?;
    let hilbert_burch_has_variable = hb.matrix.entries().iter().any(|e| e.is_monomial() && e.total_degree() == Some(1));
    let contains_m2 = Ideal::maximal_power(ring, 2).contains_ideal(&i)? && i.contains_ideal(&Ideal::maximal_power(ring, 2))?;
    let is_m = i.equals(&Ideal::maximal(ring))?;
    let m_full = matches!(m_full_test(&i, 2, 0)?, MFullVerdict::Yes { .. });
    let mut rec = SweepRecord {
        ideal: mi.to_string(),
        definition: p.definition,
        colon: p.colon,
        socle: p.socle,
        types: p.types.unwrap_or(false),
        monomial_criterion: mi.burch_monomial().is_some(),
        twovar: mi.burch_twovar()?,
        mu_growth: mu_growth_test(&i)?.burch,
        c_r: c_invariant(&q)?.value,
        omega2_summand,
        choi: choi_invariant(&i)?,
        choi_from_ring: choi_from_ring(&i)?,
        koszul_h1: koszul_h1(&q),
        beta2: res.betti()[2],
        edim: q.edim(),
        cube_zero: if q.socle_degree() <= 2 { Some(cube_zero_test(&q)?.burch) } else { None },
        gorenstein: gor.gorenstein,
        gorenstein_consistent: gor.consistent,
        depth_zero: !i.colon_maximal().equals(&i)?,
        weakly_m_full: weakly_m_full_test(&i)?,
        m_full,
        contains_m2: contains_m2 && !is_m,
        hilbert_burch_has_variable,
        failures: Vec::new(),
    };
    rec.evaluate(checks);
    Ok(rec)
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub max_socle_degree: u32,
    pub checks: Vec<Check>,
    pub scanned: usize,
    pub burch: usize,
    pub counterexamples: Vec<SweepRecord>,
}

/// Runs the checks over every ideal of `enumerate_mprimary(ring, d)` in
/// parallel. Records come back in enumeration order.
pub fn sweep_records(ring: &Arc<RingContext>, d: u32, checks: &[Check]) -> Result<Vec<SweepRecord>> {
    let ideals = enumerate_mprimary(ring, d)?;
    ideals.par_iter().map(|mi| record(mi, checks)).collect()
}

pub fn sweep(ring: &Arc<RingContext>, d: u32, checks: &[Check]) -> Result<SweepSummary> {
    let records = sweep_records(ring, d, checks)?;
    let burch = records.iter().filter(|r| r.definition).count();
    let scanned = records.len();
    let counterexamples = records.into_iter().filter(|r| !r.failures.is_empty()).collect();
    Ok(SweepSummary { max_socle_degree: d, checks: checks.to_vec(), scanned, burch, counterexamples })
}

/// A violation of the Tor rigidity: `Tor_l = Tor_{l+1} = 0` for nonfree
/// modules over a Burch ring of depth zero.
#[derive(Clone, Debug, Serialize)]
pub struct TorViolation {
    pub ring: String,
    pub m: String,
    pub n: String,
    pub l: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorScan {
    pub rings: Vec<String>,
    pub pairs: usize,
    pub max_l: usize,
    pub violations: Vec<TorViolation>,
}

/// A random proper monomial ideal strictly containing `I`, as a cyclic
/// module `R/J`: `J` is `I` plus one to three random nonconstant standard
/// monomials.
fn random_cyclic(q: &QuotientAlgebra, rng: &mut ChaCha8Rng) -> Result<(String, AlgebraModule)> {
    let ring = q.ring();
    let cands: Vec<Monomial> = q.basis().iter().copied().filter(|m| !m.is_one()).collect();
    let count = rng.gen_range(1..=3.min(cands.len()));
    let picks: Vec<Monomial> = cands.choose_multiple(rng, count).copied().collect();
    let extra: Vec<_> = picks.iter().map(|m| ring.monomial(*m)).collect();
    let j = q.ideal().add_generators(&extra);
    let name = picks.iter().map(|m| ring.format_monomial(m)).collect::<Vec<_>>().join(", ");
    Ok((format!("R/({name})"), AlgebraModule::cyclic(q, &j)?))
}

/// For each ring and `pairs` random pairs of nonfree cyclic modules, looks
/// for `3 ≤ l ≤ max_l` with `Tor_l(M, N) = Tor_{l+1}(M, N) = 0`.
pub fn tor_scan(rings: &[QuotientAlgebra], pairs: usize, max_l: usize, seed: u64) -> Result<TorScan> {
    let jobs: Vec<(usize, u64)> =
        (0..rings.len()).flat_map(|r| (0..pairs).map(move |p| (r, seed ^ ((r as u64) << 32 | p as u64)))).collect();
    let found: Vec<Vec<TorViolation>> = jobs
        .par_iter()
        .map(|&(ri, s)| -> Result<Vec<TorViolation>> {
            let q = &rings[ri];
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let (mn, m) = random_cyclic(q, &mut rng)?;
            let (nn, n) = random_cyclic(q, &mut rng)?;
            let res = minimal_resolution(q, &m, max_l + 2);
            let mut tors = Vec::with_capacity(max_l + 2);
            for l in 0..=max_l + 1 {
                tors.push(res.tor_dimension(&n, l)?);
            }
            Ok((3..=max_l)
                .filter(|&l| tors[l] == 0 && tors[l + 1] == 0)
                .map(|l| TorViolation { ring: q.ideal().format_generators(), m: mn.clone(), n: nn.clone(), l })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(TorScan {
        rings: rings.iter().map(|q| q.ideal().format_generators()).collect(),
        pairs,
        max_l,
        violations: found.into_iter().flatten().collect(),
    })
}

/// `count` Burch rings of embedding dimension 2 from the sweep at socle
/// degree `d`, evenly spaced through the enumeration.
pub fn burch_sample_rings(ring: &Arc<RingContext>, d: u32, count: usize) -> Result<Vec<QuotientAlgebra>> {
    let mut all = Vec::new();
    for mi in enumerate_mprimary(ring, d)? {
        let q = QuotientAlgebra::new(&mi.to_ideal())?;
        if q.edim() == 2 && c_invariant(&q)?.value > 0 {
            all.push(q);
        }
    }
    if all.len() <= count {
        return Ok(all);
    }
    Ok((0..count).map(|k| all[k * all.len() / count].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn small_sweep_has_no_counterexamples() {
        let ring = RingContext::new(PrimeField::default(), &["x", "y"]).unwrap();
        let s = sweep(&ring, 3, &Check::ALL).unwrap();
        assert_eq!(s.scanned, 41);
        assert!(s.counterexamples.is_empty(), "{:?}", s.counterexamples);
        assert_eq!(sweep(&ring, 1, &[Check::Equivalence]).unwrap().scanned, 4);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }

    #[test]
    fn tor_scan_small() {
        let ring = RingContext::new(PrimeField::default(), &["x", "y"]).unwrap();
        let rings = burch_sample_rings(&ring, 2, 2).unwrap();
        assert_eq!(rings.len(), 2);
        let scan = tor_scan(&rings, 2, 4, 0).unwrap();
        assert!(scan.violations.is_empty());
    }
}
