//! Generic sextic polynomials for G1: the full form over `z1..z6` and the
//! two reduced forms over `t1..t5`, with symbolic certification of the full
//! form and specialization to concrete sextics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, FieldElem};
use crate::error::{Error, Result};
use crate::polyring::Vars;
use crate::ratfield::RatFunc;
use crate::towers::g1_tower;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SexticForm {
    /// Coefficients in the G1 invariants `z1..z6`.
    Full,
    /// Reduced form for characteristic 2.
    Char2,
    /// Reduced form for characteristic ≠ 2.
    General,
    /// The characteristic ≠ 2 form with the X-coefficient exactly as
    /// printed, which lacks a factor 2 (kept for comparison).
    GeneralPrinted,
}

impl fmt::Display for SexticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SexticForm::Full => "full",
            SexticForm::Char2 => "char2",
            SexticForm::General => "general",
            SexticForm::GeneralPrinted => "general-printed",
        })
    }
}

impl FromStr for SexticForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<SexticForm> {
        match s.to_ascii_lowercase().as_str() {
            "full" => Ok(SexticForm::Full),
            "char2" => Ok(SexticForm::Char2),
            "general" => Ok(SexticForm::General),
            "general-printed" | "printed" => Ok(SexticForm::GeneralPrinted),
            _ => Err(Error::Parse(format!("unknown form `{s}` (expected full, char2 or general)"))),
        }
    }
}

/// `X^6 + a1 X^5 + … + a6` with coefficients over the parameter ambient.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericSextic {
    pub form: SexticForm,
    pub field: Field,
    pub params: Vars,
    /// `a1..a6`.
    pub coeffs: Vec<RatFunc>,
}

impl GenericSextic {
    fn from_text(form: SexticForm, field: Field, params: Vars, text: [&str; 6]) -> Result<GenericSextic> {
        let coeffs = text.iter().map(|s| RatFunc::parse(field, &params, s)).collect::<Result<Vec<_>>>()?;
        Ok(GenericSextic { form, field, params, coeffs })
    }

    pub fn coefficient(&self, i: usize) -> Option<&RatFunc> {
        i.checked_sub(1).and_then(|k| self.coeffs.get(k))
    }

    pub fn to_json(&self) -> GenericSexticJson {
        GenericSexticJson {
            form: self.form,
            field: self.field.name(),
            params: self.params.names().to_vec(),
            text: self.to_string(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericSexticJson {
    pub form: SexticForm,
    pub field: String,
    pub params: Vec<String>,
    pub text: String,
    pub coeffs: Vec<String>,
}

impl fmt::Display for GenericSextic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("X^6")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = 5 - k;
            let power = match e {
                0 => String::new(),
                1 => "*X".to_string(),
                _ => format!("*X^{e}"),
            };
            if c.is_one() && e > 0 {
                write!(f, " + {}", &power[1..])?;
            } else {
                write!(f, " + ({c}){power}")?;
            }
        }
        Ok(())
    }
}

/// The full form over `z1..z6`; the denominator `4z4 − z1²` is `−(y1 − y4)²`.
pub fn g1_sextic_full(field: Field) -> GenericSextic {
    GenericSextic::from_text(
        SexticForm::Full,
        field,
        Vars::numbered("z", 6),
        [
            "-z1",
            "z2 + z4",
            "-(z3 + z5)",
            "z6 + (z4*z2^2 - z1*z2*z5 + z5^2)/(4*z4 - z1^2)",
            "-(2*z4*z2*z3 - z1*(z2*z6 + z5*z3) + 2*z5*z6)/(4*z4 - z1^2)",
            "(z4*z3^2 - z1*z3*z6 + z6^2)/(4*z4 - z1^2)",
        ],
    )
    .expect("fixed expressions")
}

/// Reduced form for characteristic 2 over `t1..t5`.
pub fn generic_char2(field: Field) -> Result<GenericSextic> {
    if field.characteristic() != 2 {
        return Err(Error::WrongCharacteristic(format!("the char2 form needs characteristic 2, got {}", field.name())));
    }
    GenericSextic::from_text(
        SexticForm::Char2,
        field,
        Vars::numbered("t", 5),
        [
            "1",
            "t1 + t3",
            "t2 + t4",
            "t5 + t3*t1^2 + t1*t4 + t4^2",
            "t1*t5 + t4*t2",
            "t3*t2^2 + t2*t5 + t5^2",
        ],
    )
}

fn general_form(field: Field, form: SexticForm, a5: &str) -> Result<GenericSextic> {
    if field.characteristic() == 2 {
        return Err(Error::WrongCharacteristic("the general form needs characteristic other than 2".into()));
    }
    GenericSextic::from_text(
        form,
        field,
        Vars::numbered("t", 5),
        [
            "-2",
            "2*t1 + t3 + 1",
            "-(2*t2 + 2*t4)",
            "2*t5 + t1^2 + (t1 - t4)^2/t3",
            a5,
            "t2^2 + (t2 - t5)^2/t3",
        ],
    )
}

/// Reduced form for characteristic ≠ 2 over `t1..t5`. It equals
/// `P² + t3 R²` with `P = X³ − X² + t1 X − t2` and
/// `R = X² + (t1 − t4)/t3 X + (t5 − t2)/t3`.
pub fn generic_general(field: Field) -> Result<GenericSextic> {
    general_form(field, SexticForm::General, "-2*(t1*t2 + (t1 - t4)*(t2 - t5)/t3)")
}

/// [`generic_general`] with the X-coefficient `−(t1t2 + (t1−t4)(t2−t5)/t3)`.
pub fn generic_general_printed(field: Field) -> Result<GenericSextic> {
    general_form(field, SexticForm::GeneralPrinted, "-(t1*t2 + (t1 - t4)*(t2 - t5)/t3)")
}

pub fn generic_form(form: SexticForm, field: Field) -> Result<GenericSextic> {
    match form {
        SexticForm::Full => Ok(g1_sextic_full(field)),
        SexticForm::Char2 => generic_char2(field),
        SexticForm::General => generic_general(field),
        SexticForm::GeneralPrinted => generic_general_printed(field),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientCheck {
    pub index: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub field: String,
    pub coefficients: Vec<CoefficientCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.coefficients.iter().all(|c| c.passed)
    }
}

/// Substitute the G1 invariants into the full form and compare each `a_i`
/// with `(−1)^i e_i(x1..x6)`. Fails with the first mismatching index.
pub fn verify_g1_identity(field: Field) -> Result<IdentityReport> {
    let z = g1_tower(field)?.expanded_final()?;
    let g = g1_sextic_full(field);
    let x = RatFunc::vars_of(field, &z.vars);
    // elementary symmetric functions via ∏(1 + x_i s)
    let mut e = vec![RatFunc::one(field, &z.vars)];
    for xi in &x {
        let mut next = e.clone();
        next.push(RatFunc::zero(field, &z.vars));
        for k in 1..next.len() {
            let prev = e.get(k).cloned().unwrap_or_else(|| RatFunc::zero(field, &z.vars));
            next[k] = &prev + &(xi * &e[k - 1]);
        }
        e = next;
    }
    let mut coefficients = Vec::with_capacity(6);
    for (k, a) in g.coeffs.iter().enumerate() {
        let i = k + 1;
        let got = a.compose(&z.gens)?;
        let want = if i % 2 == 1 { e[i].neg() } else { e[i].clone() };
        if got != want {
            return Err(Error::IdentityFailure { index: i, detail: format!("expected {want}, got {got}") });
        }
        coefficients.push(CoefficientCheck { index: i, passed: true });
    }
    Ok(IdentityReport { field: field.name(), coefficients })
}

/// A concrete monic sextic `X^6 + a1 X^5 + … + a6`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedSextic {
    pub field: Field,
    /// `a1..a6`.
    pub coeffs: Vec<FieldElem>,
    /// `None` for polynomials given explicitly rather than by specialization.
    pub form: Option<SexticForm>,
    pub params: Vec<(String, FieldElem)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Provenance {
    pub form: Option<SexticForm>,
    pub field: String,
    pub params: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpecializedSexticJson {
    pub coeffs: Vec<String>,
    pub provenance: Provenance,
}

impl SpecializedSextic {
    /// `X^6 + a1 X^5 + … + a6` from `a1..a6`.
    pub fn explicit(field: Field, coeffs: Vec<FieldElem>) -> Result<SpecializedSextic> {
        if coeffs.len() != 6 {
            return Err(Error::ArityMismatch { expected: 6, got: coeffs.len() });
        }
        if let Some(c) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field.name(), c.field().name()));
        }
        Ok(SpecializedSextic { field, coeffs, form: None, params: Vec::new() })
    }

    pub fn from_json(js: &SpecializedSexticJson) -> Result<SpecializedSextic> {
        let field: Field = js.provenance.field.parse()?;
        let coeffs = js.coeffs.iter().map(|c| field.parse_elem(c)).collect::<Result<Vec<_>>>()?;
        let params = js
            .provenance
            .params
            .iter()
            .map(|(n, v)| Ok((n.clone(), field.parse_elem(v)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut s = SpecializedSextic::explicit(field, coeffs)?;
        s.form = js.provenance.form;
        s.params = params;
        Ok(s)
    }

    /// Coefficients from the constant term up to the leading 1.
    pub fn ascending(&self) -> Vec<FieldElem> {
        let mut v: Vec<FieldElem> = self.coeffs.iter().rev().cloned().collect();
        v.push(self.field.one());
        v
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        self.coeffs.iter().fold(self.field.one(), |acc, c| &(&acc * x) + c)
    }

    pub fn to_json(&self) -> SpecializedSexticJson {
        SpecializedSexticJson {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
            provenance: Provenance {
                form: self.form,
                field: self.field.name(),
                params: self.params.iter().map(|(n, v)| (n.clone(), v.to_string())).collect(),
            },
        }
    }
}

impl fmt::Display for SpecializedSextic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("X^6")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = 5 - k;
            let (sign, mag) = if c.is_negative_rational() { ("-", (-c).bare()) } else { ("+", c.bare()) };
            let mag = if mag.contains(['+', ' ']) { format!("({mag})") } else { mag };
            match e {
                0 => write!(f, " {sign} {mag}")?,
                _ => {
                    let power = if e == 1 { "X".to_string() } else { format!("X^{e}") };
                    if c.is_one() || (-c).is_one() {
                        write!(f, " {sign} {power}")?
                    } else {
                        write!(f, " {sign} {mag}*{power}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Evaluate the coefficients at parameter values (in the order of
/// `g.params`).
pub fn specialize(g: &GenericSextic, values: &[FieldElem]) -> Result<SpecializedSextic> {
    if values.len() != g.params.len() {
        return Err(Error::ArityMismatch { expected: g.params.len(), got: values.len() });
    }
    let coeffs = g
        .coeffs
        .iter()
        .map(|c| {
            c.eval(values).map_err(|e| match e {
                Error::PoleAtPoint | Error::DivisionByZero => Error::PoleAtParameters,
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpecializedSextic {
        field: g.field,
        coeffs,
        form: Some(g.form),
        params: g.params.names().iter().cloned().zip(values.iter().cloned()).collect(),
    })
}

/// Specialize from `name=value` assignments; every parameter must be set.
pub fn specialize_named(g: &GenericSextic, assignments: &[(String, FieldElem)]) -> Result<SpecializedSextic> {
    let mut values = vec![None; g.params.len()];
    for (n, v) in assignments {
        let i = g.params.index_of(n).ok_or_else(|| Error::UnknownVariable(n.clone()))?;
        values[i] = Some(v.clone());
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::Parse(format!("missing value for {}", g.params.name(i)))))
        .collect::<Result<Vec<_>>>()?;
    specialize(g, &values)
}
