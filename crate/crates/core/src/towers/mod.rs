//! Descent towers: chains of generator sets from `K(x1..x6)` down to the
//! fixed field of a group, each step carrying a checkable certificate.
//!
//! A step is described in the variables of the previous level: its new
//! generators, the action of later group elements on the new generators,
//! and a certificate made of auxiliary elements (each with a monic minimal
//! polynomial over the new generators and earlier auxiliaries) together with
//! rational reconstructions of every old generator.

mod builder;
mod data;
mod special;
mod verify;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::permgrp::{Group, Perm};
use crate::ratfield::RatFunc;
use crate::polyring::Vars;

pub use data::{
    g1_tower, g2_tower, g3_char3_tower, g3_descent_zeta, g3_tower_direct, g4_tower, tower_for, TowerPath,
};
pub use special::{
    artin_schreier_cp, artin_schreier_report, masuda_generators, star_generators, wreath_generators, wreath_group,
    ArtinSchreierReport,
};
pub use verify::{
    jacobian_rank_of_set, verify_invariance, verify_tower, CheckResult, InvarianceReport, StepReport, TowerReport,
    VerifyOptions,
};

/// Named generators, each a rational function over `vars`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub field: Field,
    pub vars: Vars,
    pub names: Vec<String>,
    pub gens: Vec<RatFunc>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&RatFunc> {
        self.names.iter().position(|n| n == name).map(|i| &self.gens[i])
    }

    pub fn to_json(&self) -> GeneratorSetJson {
        GeneratorSetJson {
            field: self.field.name(),
            vars: self.vars.names().to_vec(),
            generators: self
                .names
                .iter()
                .zip(&self.gens)
                .map(|(n, g)| NamedGen { name: n.clone(), text: g.to_string(), value: g.to_json() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorSetJson {
    pub field: String,
    pub vars: Vec<String>,
    pub generators: Vec<NamedGen>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedGen {
    pub name: String,
    pub text: String,
    pub value: crate::ratfield::RatFuncJson,
}

/// Claimed action of a group element on the generators of one level,
/// expressed in that level's variables.
#[derive(Clone, Debug)]
pub struct Action {
    pub element: String,
    pub images: Vec<RatFunc>,
}

#[derive(Clone, Debug)]
pub struct Auxiliary {
    pub name: String,
    /// In the variables of the previous level.
    pub definition: RatFunc,
    /// Monic in `T`, over the certificate ambient extended by `T`.
    pub minpoly: RatFunc,
    pub degree: usize,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    /// New generator names followed by auxiliary names.
    pub ambient: Vars,
    pub auxiliaries: Vec<Auxiliary>,
    /// One expression per old generator, over `ambient`.
    pub reconstruction: Vec<RatFunc>,
}

#[derive(Clone, Debug)]
pub struct DescentStep {
    pub name: String,
    /// Names of the group elements whose fixed field this step passes to.
    pub acting: Vec<String>,
    pub old_vars: Vars,
    /// New generators over `old_vars`.
    pub new: GeneratorSet,
    pub new_vars: Vars,
    pub certificate: Certificate,
    /// Actions of elements used by later steps, on the new generators.
    pub actions: Vec<Action>,
}

impl DescentStep {
    pub fn degree(&self) -> usize {
        self.certificate.auxiliaries.iter().map(|a| a.degree).product()
    }

    pub fn action(&self, element: &str) -> Option<&Action> {
        self.actions.iter().find(|a| a.element == element)
    }
}

#[derive(Clone, Debug)]
pub struct Tower {
    pub name: String,
    pub group: Group,
    pub field: Field,
    pub base_vars: Vars,
    pub steps: Vec<DescentStep>,
    /// Group elements referenced by name in the steps.
    pub elements: BTreeMap<String, Perm>,
    pub notes: Vec<String>,
}

/// Fault injection for testing certificate sensitivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Add 1 to generator `gen` of step `step`.
    AddOne { step: usize, gen: usize },
    /// Add generator `other` to generator `gen` of step `step`.
    AddOther { step: usize, gen: usize, other: usize },
}

impl Tower {
    pub fn total_degree(&self) -> usize {
        self.steps.iter().map(DescentStep::degree).product()
    }

    /// Final generators over the variables of the last level.
    pub fn final_set(&self) -> &GeneratorSet {
        &self.steps.last().expect("towers have at least one step").new
    }

    /// Generators of every level expressed over `x1..x6`.
    pub fn expanded_levels(&self) -> Result<Vec<GeneratorSet>> {
        let mut out: Vec<GeneratorSet> = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            let gens = match out.last() {
                None => step.new.gens.clone(),
                Some(prev) => step.new.gens.iter().map(|g| g.compose(&prev.gens)).collect::<Result<Vec<_>>>()?,
            };
            out.push(GeneratorSet {
                field: self.field,
                vars: self.base_vars.clone(),
                names: step.new.names.clone(),
                gens,
            });
        }
        Ok(out)
    }

    /// Final generators over `x1..x6`.
    pub fn expanded_final(&self) -> Result<GeneratorSet> {
        Ok(self.expanded_levels()?.pop().expect("nonempty"))
    }

    pub fn mutate(&mut self, m: Mutation) -> Result<()> {
        let (step, gen) = match m {
            Mutation::AddOne { step, gen } | Mutation::AddOther { step, gen, .. } => (step, gen),
        };
        let s = self
            .steps
            .get_mut(step)
            .ok_or_else(|| Error::Unsupported(format!("no step {step}")))?;
        if gen >= s.new.gens.len() {
            return Err(Error::Unsupported(format!("no generator {gen} in step {step}")));
        }
        let delta = match m {
            Mutation::AddOne { .. } => RatFunc::one(s.new.field, &s.old_vars),
            Mutation::AddOther { other, .. } => s
                .new
                .gens
                .get(other)
                .cloned()
                .ok_or_else(|| Error::Unsupported(format!("no generator {other} in step {step}")))?,
        };
        s.new.gens[gen] = &s.new.gens[gen] + &delta;
        Ok(())
    }
}

#[cfg(test)]
mod tests;
