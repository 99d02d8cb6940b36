use burch_core::artinian::QuotientAlgebra;
use burch_core::burch::{
    burch_conditions, burch_ideal_test, burch_ring_depth_zero, c_invariant, choi_from_ring, cut_down, fibre_burch,
    gorenstein_burch_classifier, m_full_test, mu_growth_test, weakly_m_full_test, MFullVerdict,
    DEFAULT_MFULL_TRIALS,
};
use burch_core::monomial::MonomialIdeal;
use burch_core::resolution::{koszul_h1, minimal_resolution, Resolution};
use burch_core::sweep::{sweep, Check};
use burch_core::{Coeff, Ideal, PrimeField, RingContext};

use crate::error::CliError;
use crate::report::Report;
use crate::session::Session;

/// A report plus the failure it documents, if any.
pub struct Outcome {
    pub report: Report,
    pub failure: Option<CliError>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Self { report, failure: None }
    }
}

fn format_vector(q: &QuotientAlgebra, v: &[Vec<Coeff>]) -> Vec<String> {
    v.iter().map(|c| q.format_element(c)).collect()
}

/// `I ⊆ n²`, where the ring verdicts coincide with the ideal verdicts.
fn in_square(i: &Ideal) -> Result<bool, CliError> {
    Ok(Ideal::maximal_power(i.ring(), 2).contains_ideal(i)?)
}

pub fn check(s: &Session, name: &str, all_routes: bool, command: String) -> Result<Outcome, CliError> {
    let i = s.ideal(name)?;
    let rep = burch_ideal_test(i)?;
    let mut r = Report::new(command);
    r.verdict("burch", rep.burch).verdict("depth_zero", rep.depth_zero);
    if let Some((g, x)) = &rep.witness {
        r.witness("colon_element", g).witness("variable", x);
    }
    r.invariant("choi", rep.invariants.choi).invariant("mu", rep.invariants.mu).invariant("mu_mi", rep.invariants.mu_mi);
    if let Some(l) = rep.invariants.length {
        r.invariant("length", l);
    }
    if !all_routes {
        return Ok(r.into());
    }
    let mut routes: Vec<(&str, bool)> = Vec::new();
    let conds = burch_conditions(i)?;
    routes.push(("colon", conds.colon));
    routes.push(("socle", conds.socle));
    if let Some(t) = conds.types {
        routes.push(("types", t));
    }
    if let Ok(mi) = MonomialIdeal::from_ideal(i) {
        routes.push(("monomial", mi.burch_monomial().is_some()));
        if s.ring.nvars() == 2 && mi.is_m_primary() {
            routes.push(("twovar", mi.burch_twovar()?));
        }
    }
    if i.ring().nvars() == 2 && i.is_m_primary() {
        routes.push(("mu_growth", mu_growth_test(i)?.burch));
    }
    if i.is_m_primary() && in_square(i)? {
        let q = QuotientAlgebra::new(i)?;
        let v = burch_ring_depth_zero(&q)?;
        routes.push(("c_r", v.burch));
        if let Some(o) = v.omega2_summand {
            routes.push(("omega2", o));
        }
        r.invariant("c_r", v.c_r);
    }
    for (k, b) in &routes {
        r.verdict(&format!("route_{k}"), b);
    }
    let disagree: Vec<&str> = routes.iter().filter(|(_, b)| *b != rep.burch).map(|(k, _)| *k).collect();
    r.verdict("routes_agree", disagree.is_empty());
    let failure = (!disagree.is_empty())
        .then(|| CliError::Consistency(format!("routes {disagree:?} disagree with the definition")));
    Ok(Outcome { report: r, failure })
}

pub fn invariants(s: &Session, name: &str, command: String) -> Result<Outcome, CliError> {
    let i = s.ideal(name)?;
    let rep = burch_ideal_test(i)?;
    let mut r = Report::new(command);
    r.verdict("burch", rep.burch).verdict("depth_zero", rep.depth_zero);
    r.invariant("choi", rep.invariants.choi)
        .invariant("mu", rep.invariants.mu)
        .invariant("mu_mi", rep.invariants.mu_mi)
        .invariant("weakly_m_full", weakly_m_full_test(i)?);
    if !i.is_m_primary() {
        return Ok(r.into());
    }
    let q = QuotientAlgebra::new(i)?;
    let res = minimal_resolution(&q, &burch_core::resolution::AlgebraModule::residue_field(&q), 2);
    let c = c_invariant(&q)?;
    let g = gorenstein_burch_classifier(i)?;
    r.invariant("length", q.length())
        .invariant("edim", q.edim())
        .invariant("type", q.cm_type())
        .invariant("socle_degree", q.socle_degree())
        .invariant("hilbert", q.hilbert_function())
        .invariant("betti_k", res.betti())
        .invariant("koszul_h1", koszul_h1(&q))
        .invariant("c_r", c.value)
        .invariant("c_r_degenerate", c.degenerate)
        .invariant("choi_from_ring", choi_from_ring(i)?);
    r.verdict("gorenstein", g.gorenstein).verdict("ring_burch", c.value > 0);
    r.witness("socle", q.socle().iter().map(|v| q.format_element(v)).collect::<Vec<_>>());
    r.witness(
        "basis",
        q.basis().iter().map(|m| q.ring().format_monomial(m)).collect::<Vec<_>>(),
    );
    Ok(r.into())
}

fn resolution(s: &Session, ring: &str, module: &str, length: usize) -> Result<(QuotientAlgebra, Resolution), CliError> {
    let q = s.algebra(ring)?;
    let m = s.module(&q, module)?;
    let res = minimal_resolution(&q, &m, length);
    Ok((q, res))
}

pub fn resolve(s: &Session, ring: &str, module: &str, length: usize, command: String) -> Result<Outcome, CliError> {
    let (q, res) = resolution(s, ring, module, length)?;
    let mut r = Report::new(command);
    r.invariant("betti", res.betti());
    let f = s.ring.clone();
    for i in 1..=res.length() {
        if res.betti()[i] == 0 {
            break;
        }
        let gens: Vec<String> = res.entry_ideal_lift(i).iter().map(|p| f.format(p)).collect();
        r.invariant(&format!("entry_ideal_{i}"), gens);
        r.verdict(&format!("entry_ideal_{i}_maximal"), res.entry_ideal_is_maximal(i));
        let v = res.k_summand_test(i);
        r.verdict(&format!("k_summand_syzygy_{i}"), v.summand);
        if let Some(w) = &v.witness {
            r.witness(&format!("k_summand_syzygy_{i}"), format_vector(&q, w));
        }
    }
    let failure = (!res.audit()).then(|| CliError::Consistency("the resolution fails its audit".into()));
    Ok(Outcome { report: r, failure })
}

pub fn syzygy_summand(
    s: &Session,
    ring: &str,
    module: &str,
    index: usize,
    command: String,
) -> Result<Outcome, CliError> {
    if index == 0 {
        return Err(CliError::Input("the syzygy index starts at 1".into()));
    }
    let (q, res) = resolution(s, ring, module, index)?;
    let syz = res.syzygy(index);
    let v = res.k_summand_test(index);
    let mut r = Report::new(command);
    r.verdict("k_summand", v.summand)
        .invariant("index", index)
        .invariant("ambient_rank", syz.ambient_rank)
        .invariant("dim", syz.dim())
        .invariant("mu", syz.mu());
    if let Some(w) = &v.witness {
        r.witness("socle_element", format_vector(&q, w));
    }
    Ok(r.into())
}

pub fn tor(
    s: &Session,
    ring: &str,
    left: &str,
    right: &str,
    index: Option<usize>,
    max_length: usize,
    command: String,
) -> Result<Outcome, CliError> {
    let top = index.unwrap_or(max_length);
    let (q, res) = resolution(s, ring, left, top + 1)?;
    let n = s.module(&q, right)?;
    let range: Vec<usize> = match index {
        Some(i) => vec![i],
        None => (0..=max_length).collect(),
    };
    let mut dims = Vec::new();
    for i in &range {
        dims.push(res.tor_dimension(&n, *i)?);
    }
    let mut r = Report::new(command);
    r.invariant("indices", &range).invariant("tor", &dims);
    let vanish: Vec<usize> = range.iter().zip(&dims).filter(|(_, d)| **d == 0).map(|(i, _)| *i).collect();
    r.verdict("vanishing_indices", vanish);
    Ok(r.into())
}

pub fn mfull(s: &Session, name: &str, trials: Option<usize>, seed: u64, command: String) -> Result<Outcome, CliError> {
    let i = s.ideal(name)?;
    let mut r = Report::new(command);
    r.verdict("weakly_m_full", weakly_m_full_test(i)?);
    match m_full_test(i, trials.unwrap_or(DEFAULT_MFULL_TRIALS), seed)? {
        MFullVerdict::Yes { witness } => {
            r.verdict("m_full", "yes").witness("element", s.ring.format(&witness));
        }
        MFullVerdict::NoWitnessFound { tried } => {
            r.verdict("m_full", "no witness found").invariant("tried", tried);
        }
    }
    let rep = burch_ideal_test(i)?;
    r.verdict("burch", rep.burch).verdict("depth_zero", rep.depth_zero);
    Ok(r.into())
}

pub fn cut(s: &Session, name: &str, by: &[String], allow_nonlinear: bool, command: String) -> Result<Outcome, CliError> {
    let i = s.ideal(name)?;
    let elems = by.iter().map(|e| s.ring.parse(e)).collect::<burch_core::Result<Vec<_>>>()?;
    let c = cut_down(i, &elems, allow_nonlinear)?;
    let j = &c.ideal;
    let mut r = Report::new(command);
    r.witness("ideal", j.generators().iter().map(|g| j.ring().format(g)).collect::<Vec<_>>())
        .witness("ring_variables", j.ring().var_names())
        .invariant("eliminated", &c.eliminated)
        .invariant("appended", &c.appended)
        .verdict("regular_sequence", true);
    // Verdicts describe this cut only; another sequence may give another answer.
    let rep = burch_ideal_test(j)?;
    r.verdict("burch_along_sequence", rep.burch);
    if j.is_m_primary() && in_square(j)? {
        let v = burch_ring_depth_zero(&QuotientAlgebra::new(j)?)?;
        r.verdict("ring_burch_along_sequence", v.burch).invariant("c_r", v.c_r);
    }
    Ok(r.into())
}

pub fn fibre(s: &Session, left: &str, right: &str, command: String) -> Result<Outcome, CliError> {
    let a = s.restricted(left)?;
    let b = s.restricted(right)?;
    if a.ring().var_names().iter().any(|v| b.ring().var_names().contains(v)) {
        return Err(CliError::Precondition("the two factors share a variable".into()));
    }
    for (n, i) in [(left, &a), (right, &b)] {
        if !i.is_m_primary() {
            return Err(CliError::Precondition(format!("`{n}` does not define an artinian ring")));
        }
    }
    let (qa, qb) = (QuotientAlgebra::new(&a)?, QuotientAlgebra::new(&b)?);
    let v = fibre_burch(&qa, &qb)?;
    let fp = burch_core::artinian::fibre_product(&qa, &qb)?;
    let mut r = Report::new(command);
    r.verdict("burch", v.burch)
        .verdict("direct", v.direct)
        .verdict("left_burch", v.s_burch)
        .verdict("right_burch", v.t_burch)
        .verdict("socle_branch", v.socle_branch)
        .verdict("identities", v.identities)
        .witness("presentation", fp.ideal.generators().iter().map(|g| fp.ideal.ring().format(g)).collect::<Vec<_>>())
        .witness("variables", fp.ideal.ring().var_names());
    let failure = (!v.identities.iter().all(|&b| b))
        .then(|| CliError::Consistency(format!("fibre product identities {:?}", v.identities)));
    Ok(Outcome { report: r, failure })
}

pub fn parse_checks(names: &[String]) -> Result<Vec<Check>, CliError> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(Check::ALL.to_vec());
    }
    names
        .iter()
        .flat_map(|n| n.split(','))
        .map(|n| n.trim().parse::<Check>().map_err(|_| CliError::Input(format!("unknown check `{n}`"))))
        .collect()
}

pub fn sweep_cmd(field: PrimeField, d: u32, checks: &[String], command: String) -> Result<Outcome, CliError> {
    let checks = parse_checks(checks)?;
    let ring = RingContext::new(field, &["x", "y"])?;
    let summary = sweep(&ring, d, &checks)?;
    let mut r = Report::new(command);
    r.invariant("max_socle_degree", d)
        .invariant("checks", checks.iter().map(|c| c.name()).collect::<Vec<_>>())
        .invariant("scanned", summary.scanned)
        .invariant("burch", summary.burch)
        .verdict("counterexamples", summary.counterexamples.len());
    if !summary.counterexamples.is_empty() {
        r.witness("counterexamples", &summary.counterexamples);
    }
    let failure = (!summary.counterexamples.is_empty())
        .then(|| CliError::Consistency(format!("{} counterexamples", summary.counterexamples.len())));
    Ok(Outcome { report: r, failure })
}
