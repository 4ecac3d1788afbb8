//! Assembles towers from compact textual step descriptions.

use std::collections::BTreeMap;

use super::{Action, Auxiliary, Certificate, DescentStep, GeneratorSet, Tower};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::permgrp::{catalog, Group, Perm};
use crate::polyring::Vars;
use crate::ratfield::RatFunc;

/// Name of the polynomial variable in minimal polynomials.
pub(crate) const MINPOLY_VAR: &str = "T";

/// One descent step written as expressions.
pub(crate) struct StepDef<'a> {
    pub name: &'a str,
    pub acting: &'a [&'a str],
    pub new_names: &'a [&'a str],
    /// Helper bindings over the old variables, usable in `defs` and
    /// auxiliary definitions.
    pub lets: &'a [(&'a str, &'a str)],
    pub defs: &'a [&'a str],
    /// `(name, definition over old variables, minimal polynomial in T)`.
    pub aux: &'a [(&'a str, &'a str, &'a str)],
    /// Helper bindings over the certificate ambient.
    pub cert_lets: &'a [(&'a str, &'a str)],
    pub recon: &'a [&'a str],
    /// Images of the new generators under later elements.
    pub actions: &'a [(&'a str, &'a [&'a str])],
}

/// Expression parser over an ambient with named helper bindings.
pub(crate) struct Scope {
    field: Field,
    base: Vars,
    lets: Vec<(String, RatFunc)>,
}

impl Scope {
    pub fn new(field: Field, base: &Vars) -> Scope {
        Scope { field, base: base.clone(), lets: Vec::new() }
    }

    pub fn bind(&mut self, name: &str, expr: &str) -> Result<()> {
        let v = self.parse(expr)?;
        self.lets.push((name.to_string(), v));
        Ok(())
    }

    pub fn parse(&self, expr: &str) -> Result<RatFunc> {
        if self.lets.is_empty() {
            return RatFunc::parse(self.field, &self.base, expr);
        }
        let mut names: Vec<String> = self.base.names().to_vec();
        names.extend(self.lets.iter().map(|(n, _)| n.clone()));
        let ext = Vars::new(&names);
        let f = RatFunc::parse(self.field, &ext, expr)?;
        let mut images = RatFunc::vars_of(self.field, &self.base);
        images.extend(self.lets.iter().map(|(_, v)| v.clone()));
        f.compose(&images)
    }

    /// Same bindings over a larger ambient containing the base names.
    pub fn extended(&self, extra: &[&str]) -> Result<Scope> {
        let mut names: Vec<String> = self.base.names().to_vec();
        names.extend(extra.iter().map(|s| s.to_string()));
        let base = Vars::new(&names);
        let lets = self
            .lets
            .iter()
            .map(|(n, v)| Ok((n.clone(), v.embed_in(&base)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Scope { field: self.field, base, lets })
    }
}

pub(crate) fn named_elements() -> BTreeMap<String, Perm> {
    let c = catalog();
    let mut m = BTreeMap::new();
    m.insert("sigma1".to_string(), c.sigma1.clone());
    m.insert("sigma2".to_string(), c.sigma2.clone());
    m.insert("tau".to_string(), c.tau.clone());
    m.insert("lambda".to_string(), c.lambda.clone());
    m.insert("lambda2".to_string(), c.lambda_sq.clone());
    m.insert("s12".to_string(), Perm::parse(6, "(12)").expect("valid"));
    m.insert("s45".to_string(), Perm::parse(6, "(45)").expect("valid"));
    m
}

pub(crate) fn build_tower(
    name: &str,
    group: &Group,
    field: Field,
    defs: &[StepDef<'_>],
    notes: Vec<String>,
) -> Result<Tower> {
    let known = named_elements();
    let base_vars = Vars::numbered("x", 6);
    let mut old_vars = base_vars.clone();
    let mut steps = Vec::with_capacity(defs.len());
    for d in defs {
        steps.push(build_step(field, &old_vars, d, &known)?);
        old_vars = steps.last().map(|s: &DescentStep| s.new_vars.clone()).expect("pushed");
    }
    let mut elements = BTreeMap::new();
    for s in &steps {
        for a in s.acting.iter().chain(s.actions.iter().map(|a| &a.element)) {
            let p = known.get(a).ok_or_else(|| Error::Unsupported(format!("unknown group element {a}")))?;
            elements.insert(a.clone(), p.clone());
        }
    }
    Ok(Tower {
        name: name.to_string(),
        group: group.clone(),
        field,
        base_vars,
        steps,
        elements,
        notes,
    })
}

fn build_step(field: Field, old_vars: &Vars, d: &StepDef<'_>, known: &BTreeMap<String, Perm>) -> Result<DescentStep> {
    for a in d.acting {
        if !known.contains_key(*a) {
            return Err(Error::Unsupported(format!("unknown group element {a}")));
        }
    }
    if d.defs.len() != d.new_names.len() || d.recon.len() != old_vars.len() {
        return Err(Error::ArityMismatch { expected: d.new_names.len(), got: d.defs.len() });
    }
    let mut old_scope = Scope::new(field, old_vars);
    for (n, e) in d.lets {
        old_scope.bind(n, e)?;
    }
    let gens = d.defs.iter().map(|e| old_scope.parse(e)).collect::<Result<Vec<_>>>()?;
    let new_vars = Vars::new(d.new_names);

    let mut cert_names: Vec<&str> = d.new_names.to_vec();
    cert_names.extend(d.aux.iter().map(|a| a.0));
    let cert_vars = Vars::new(&cert_names);
    let mut cert_scope = Scope::new(field, &cert_vars);
    for (n, e) in d.cert_lets {
        cert_scope.bind(n, e)?;
    }
    let poly_scope = cert_scope.extended(&[MINPOLY_VAR])?;
    let t_index = cert_vars.len();
    let auxiliaries = d
        .aux
        .iter()
        .map(|(n, def, mp)| {
            let minpoly = poly_scope.parse(mp)?;
            let degree = minpoly.num().degree_in(t_index) as usize;
            Ok(Auxiliary { name: n.to_string(), definition: old_scope.parse(def)?, minpoly, degree })
        })
        .collect::<Result<Vec<_>>>()?;
    let reconstruction = d.recon.iter().map(|e| cert_scope.parse(e)).collect::<Result<Vec<_>>>()?;

    let new_scope = Scope::new(field, &new_vars);
    let actions = d
        .actions
        .iter()
        .map(|(el, imgs)| {
            if !known.contains_key(*el) {
                return Err(Error::Unsupported(format!("unknown group element {el}")));
            }
            Ok(Action {
                element: el.to_string(),
                images: imgs.iter().map(|e| new_scope.parse(e)).collect::<Result<Vec<_>>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(DescentStep {
        name: d.name.to_string(),
        acting: d.acting.iter().map(|s| s.to_string()).collect(),
        old_vars: old_vars.clone(),
        new: GeneratorSet {
            field,
            vars: old_vars.clone(),
            names: d.new_names.iter().map(|s| s.to_string()).collect(),
            gens,
        },
        new_vars,
        certificate: Certificate { ambient: cert_vars, auxiliaries, reconstruction },
        actions,
    })
}
