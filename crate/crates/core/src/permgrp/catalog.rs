use std::sync::OnceLock;

use super::{Group, Perm};

/// The named permutations and groups of degree 6.
#[derive(Debug)]
pub struct Catalog {
    pub sigma1: Perm,
    pub sigma2: Perm,
    pub tau: Perm,
    /// λ = (1425)(36) = (12)τ.
    pub lambda: Perm,
    /// (1542)(36); conjugating σ1 by it leaves the group G2.
    pub lambda_misprint: Perm,
    /// λ² = (12)(45).
    pub lambda_sq: Perm,
    pub g1: Group,
    pub g2: Group,
    pub g3: Group,
    pub g4: Group,
    pub c3xc3: Group,
    pub a6: Group,
    pub s6: Group,
}

fn p(s: &str) -> Perm {
    Perm::parse(6, s).expect("catalog permutations are well formed")
}

fn group(name: &str, gens: &[&str]) -> Group {
    Group::new(6, gens.iter().map(|g| p(g)).collect()).expect("degree 6").named(name)
}

/// Shared instance; element lists are computed once on first use.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog {
        sigma1: p("(123)"),
        sigma2: p("(456)"),
        tau: p("(14)(25)(36)"),
        lambda: p("(1425)(36)"),
        lambda_misprint: p("(1542)(36)"),
        lambda_sq: p("(12)(45)"),
        g1: group("G1", &["(123)", "(14)(25)(36)", "(12)"]),
        g2: group("G2", &["(123)", "(1425)(36)"]),
        g3: group("G3", &["(123)", "(14)(25)(36)", "(12)(45)"]),
        g4: group("G4", &["(123)", "(14)(25)(36)"]),
        c3xc3: group("C3xC3", &["(123)", "(456)"]),
        a6: group("A6", &["(123)", "(124)", "(125)", "(126)"]),
        s6: group("S6", &["(123456)", "(12)"]),
    })
}

impl Catalog {
    /// Look up a group by name (`G1`..`G4`, `C3xC3`, `A6`, `S6`), case-insensitive.
    pub fn group(&self, name: &str) -> Option<&Group> {
        match name.to_ascii_uppercase().as_str() {
            "G1" => Some(&self.g1),
            "G2" => Some(&self.g2),
            "G3" => Some(&self.g3),
            "G4" => Some(&self.g4),
            "C3XC3" | "C3×C3" => Some(&self.c3xc3),
            "A6" => Some(&self.a6),
            "S6" => Some(&self.s6),
            _ => None,
        }
    }

    pub fn groups(&self) -> [&Group; 7] {
        [&self.g1, &self.g2, &self.g3, &self.g4, &self.c3xc3, &self.a6, &self.s6]
    }

    /// Look up a named permutation (`sigma1`, `sigma2`, `tau`, `lambda`, `lambda2`).
    pub fn perm(&self, name: &str) -> Option<&Perm> {
        match name {
            "sigma1" => Some(&self.sigma1),
            "sigma2" => Some(&self.sigma2),
            "tau" => Some(&self.tau),
            "lambda" => Some(&self.lambda),
            "lambda2" => Some(&self.lambda_sq),
            _ => None,
        }
    }
}
