use std::collections::BTreeMap;
use std::sync::Arc;

use burch_core::artinian::QuotientAlgebra;
use burch_core::resolution::AlgebraModule;
use burch_core::{Ideal, PrimeField, RingContext};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    /// `R/J` for the named ideal `J`.
    Cyclic(String),
    Residue,
    Free(usize),
}

#[derive(Clone, Debug)]
pub struct Session {
    pub ring: Arc<RingContext>,
    pub ideals: BTreeMap<String, Ideal>,
    pub modules: BTreeMap<String, ModuleSpec>,
}

fn input(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("line {line}: {msg}"))
}

fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// `Name = rest`.
fn binding(line: usize, rest: &str) -> Result<(String, String), CliError> {
    let (name, body) = rest.split_once('=').ok_or_else(|| input(line, "expected `Name = ...`"))?;
    let name = name.trim();
    if !valid_name(name) {
        return Err(input(line, format!("invalid name `{name}`")));
    }
    Ok((name.to_string(), body.trim().to_string()))
}

impl Session {
    /// Parses a session file. `modulus` overrides the declared prime.
    pub fn parse(text: &str, modulus: Option<u32>) -> Result<Self, CliError> {
        let mut ring: Option<Arc<RingContext>> = None;
        let mut ideals = BTreeMap::new();
        let mut modules = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let rest = rest.trim();
            match keyword {
                "ring" => {
                    if ring.is_some() {
                        return Err(input(line, "second ring declaration"));
                    }
                    let mut words = rest.split_whitespace();
                    let p: u32 = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| input(line, "expected `ring <p> <var> ...`"))?;
                    let vars: Vec<&str> = words.collect();
                    let field = PrimeField::new(modulus.unwrap_or(p)).map_err(|e| input(line, e))?;
                    ring = Some(RingContext::new(field, &vars).map_err(|e| input(line, e))?);
                }
                "ideal" => {
                    let r = ring.as_ref().ok_or_else(|| input(line, "ideal before the ring declaration"))?;
                    let (name, body) = binding(line, rest)?;
                    if ideals.contains_key(&name) || modules.contains_key(&name) {
                        return Err(input(line, format!("duplicate name `{name}`")));
                    }
                    let gens: Vec<&str> = body.split(',').map(str::trim).collect();
                    if gens.iter().any(|g| g.is_empty()) {
                        return Err(input(line, "empty generator"));
                    }
                    let mut polys = Vec::with_capacity(gens.len());
                    for (n, g) in gens.iter().enumerate() {
                        let f = r.parse(g).map_err(|e| input(line, format!("generator {}: {e}", n + 1)))?;
                        polys.push(f);
                    }
                    ideals.insert(name, Ideal::new(r, polys));
                }
                "module" => {
                    let (name, body) = binding(line, rest)?;
                    if ideals.contains_key(&name) || modules.contains_key(&name) {
                        return Err(input(line, format!("duplicate name `{name}`")));
                    }
                    let words: Vec<&str> = body.split_whitespace().collect();
                    let spec = match words.as_slice() {
                        ["cyclic", j] => {
                            if !ideals.contains_key(*j) {
                                return Err(input(line, format!("unknown ideal `{j}`")));
                            }
                            ModuleSpec::Cyclic(j.to_string())
                        }
                        ["residue"] => ModuleSpec::Residue,
                        ["free", n] => ModuleSpec::Free(n.parse().map_err(|_| input(line, "bad rank"))?),
                        _ => return Err(input(line, "expected `cyclic <Ideal>`, `residue` or `free <n>`")),
                    };
                    modules.insert(name, spec);
                }
                other => return Err(input(line, format!("unknown directive `{other}`"))),
            }
        }
        let ring = ring.ok_or_else(|| CliError::Input("no ring declaration".into()))?;
        Ok(Self { ring, ideals, modules })
    }

    pub fn read(path: &std::path::Path, modulus: Option<u32>) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text, modulus)
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal, CliError> {
        self.ideals.get(name).ok_or_else(|| CliError::Input(format!("unknown ideal `{name}`")))
    }

    pub fn algebra(&self, name: &str) -> Result<QuotientAlgebra, CliError> {
        let i = self.ideal(name)?;
        if !i.is_m_primary() {
            return Err(CliError::Precondition(format!("`{name}` does not define an artinian ring")));
        }
        Ok(QuotientAlgebra::new(i)?)
    }

    /// The module named `name` over `r`; `k` names the residue field.
    pub fn module(&self, r: &QuotientAlgebra, name: &str) -> Result<AlgebraModule, CliError> {
        if name == "k" && !self.modules.contains_key("k") {
            return Ok(AlgebraModule::residue_field(r));
        }
        let spec = self.modules.get(name).ok_or_else(|| CliError::Input(format!("unknown module `{name}`")))?;
        Ok(match spec {
            ModuleSpec::Residue => AlgebraModule::residue_field(r),
            ModuleSpec::Free(n) => AlgebraModule::free(r, *n),
            ModuleSpec::Cyclic(j) => {
                let j = self.ideal(j)?.add_generators(r.ideal().generators());
                AlgebraModule::cyclic(r, &j)?
            }
        }
        .with_name(name))
    }

    /// The named ideal in the polynomial ring on the variables it mentions.
    pub fn restricted(&self, name: &str) -> Result<Ideal, CliError> {
        let i = self.ideal(name)?;
        let used: Vec<usize> = (0..self.ring.nvars())
            .filter(|&v| i.generators().iter().any(|g| g.terms().iter().any(|t| t.mono.exp(v) > 0)))
            .collect();
        if used.is_empty() {
            return Err(CliError::Precondition(format!("`{name}` mentions no variable")));
        }
        let names: Vec<&str> = used.iter().map(|&v| self.ring.var_names()[v].as_str()).collect();
        let sub = RingContext::new(self.ring.field(), &names)?;
        let gens: Vec<String> = i.generators().iter().map(|g| self.ring.format(g)).collect();
        Ok(Ideal::parse(&sub, &gens)?)
    }
}
