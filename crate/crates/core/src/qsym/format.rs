//! Text and structured (JSON) forms.
//!
//! Text: `-1*psi[3] + 2*psi[1,1,1]`, rationals as `p/q` in lowest terms, the
//! zero element as `0`. Tensors join legs with ` ⊗ ` (or `(x)` when parsing).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::{parse_bracketed, Composition};
use crate::error::{Error, Result};

use super::coproduct::TensorElement;
use super::element::{Basis, QSymElement, Rational};

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, &'a Rational)>,
{
    let mut first = true;
    for (label, c) in terms {
        if first {
            write!(f, "{}*{label}", fmt_rational(c))?;
            first = false;
        } else if c.is_negative() {
            write!(f, " - {}*{label}", fmt_rational(&-c))?;
        } else {
            write!(f, " + {}*{label}", fmt_rational(c))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.basis().symbol();
        write_terms(f, self.terms().iter().map(|(a, c)| (format!("{b}{a}"), c)))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.basis().symbol();
        write_terms(
            f,
            self.terms().iter().map(|(legs, c)| {
                let label = legs
                    .iter()
                    .map(|a| format!("{b}{a}"))
                    .collect::<Vec<_>>()
                    .join(" ⊗ ");
                (label, c)
            }),
        )
    }
}

/// Splits an expression into signed terms at top-level `+`/`-`.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    let mut seen_any = false;
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                let t = cur.trim().to_string();
                if t.is_empty() {
                    if seen_any {
                        return Err(Error::Parse(format!("dangling sign in `{s}`")));
                    }
                    if ch == '-' {
                        negative = !negative;
                    }
                } else {
                    out.push((negative, t));
                    negative = ch == '-';
                }
                seen_any = true;
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    let t = cur.trim().to_string();
    if t.is_empty() {
        return Err(Error::Parse(format!("empty term in `{s}`")));
    }
    out.push((negative, t));
    Ok(out)
}

/// Parses `coef*B[parts]` or `B[parts]` or a bare coefficient (degree 0).
fn parse_leg(s: &str) -> Result<(Basis, Composition)> {
    let s = s.trim();
    let open = s
        .find('[')
        .ok_or_else(|| Error::Parse(format!("expected `B[...]`, got `{s}`")))?;
    let basis: Basis = s[..open].trim().parse()?;
    let parts = parse_bracketed(&s[open..])?;
    Ok((basis, Composition::new(parts)?))
}

fn parse_term(s: &str) -> Result<(Rational, Vec<(Basis, Composition)>)> {
    let (coef, rest) = match s.split_once('*') {
        Some((c, r)) => (parse_rational(c)?, r),
        None if s.contains('[') => (Rational::one(), s),
        None => return Ok((parse_rational(s)?, Vec::new())),
    };
    let legs = rest
        .split('⊗')
        .flat_map(|p| p.split("(x)"))
        .map(parse_leg)
        .collect::<Result<Vec<_>>>()?;
    Ok((coef, legs))
}

impl FromStr for QSymElement {
    type Err = Error;

    /// Terms may mix bases; everything is converted to the basis of the first
    /// term. A bare coefficient is a multiple of `1`; `0` parses in `psi`.
    fn from_str(s: &str) -> Result<Self> {
        let mut out: Option<QSymElement> = None;
        let mut pending_constants = Rational::zero();
        for (negative, term) in split_terms(s)? {
            let (mut coef, legs) = parse_term(&term)?;
            if negative {
                coef = -coef;
            }
            match legs.as_slice() {
                [] => pending_constants += coef,
                [(basis, alpha)] => {
                    let t = QSymElement::from_terms(*basis, [(alpha.clone(), coef)]);
                    out = Some(match out {
                        None => t,
                        Some(acc) => &acc + &t,
                    });
                }
                _ => return Err(Error::Parse(format!("tensor term in element: `{term}`"))),
            }
        }
        let mut out = out.unwrap_or_else(|| QSymElement::zero(Basis::Psi));
        out.add_term(Composition::empty(), pending_constants);
        Ok(out)
    }
}

impl FromStr for TensorElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out: Option<TensorElement> = None;
        for (negative, term) in split_terms(s)? {
            let (mut coef, legs) = parse_term(&term)?;
            if negative {
                coef = -coef;
            }
            if coef.is_zero() && legs.is_empty() {
                continue;
            }
            let Some(&(basis, _)) = legs.first() else {
                return Err(Error::Parse(format!("tensor term without legs: `{term}`")));
            };
            if legs.iter().any(|(b, _)| *b != basis) {
                return Err(Error::Parse(format!("mixed bases in `{term}`")));
            }
            let acc = out.get_or_insert_with(|| TensorElement::zero(basis, legs.len()));
            if acc.basis() != basis || acc.arity() != legs.len() {
                return Err(Error::Parse(format!("inconsistent tensor term `{term}`")));
            }
            acc.add_term(legs.into_iter().map(|(_, a)| a).collect(), coef);
        }
        out.ok_or_else(|| Error::Parse("cannot infer basis of empty tensor".into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredTerm {
    pub comp: Vec<usize>,
    pub coef: String,
}

/// `{"basis": "psi", "terms": [{"comp": [3, 2], "coef": "-1"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredElement {
    pub basis: Basis,
    pub terms: Vec<StructuredTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredTensorTerm {
    pub comps: Vec<Vec<usize>>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredTensor {
    pub basis: Basis,
    pub arity: usize,
    pub terms: Vec<StructuredTensorTerm>,
}

impl From<&QSymElement> for StructuredElement {
    fn from(f: &QSymElement) -> Self {
        StructuredElement {
            basis: f.basis(),
            terms: f
                .terms()
                .iter()
                .map(|(a, c)| StructuredTerm {
                    comp: a.parts().to_vec(),
                    coef: fmt_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<StructuredElement> for QSymElement {
    type Error = Error;
    fn try_from(s: StructuredElement) -> Result<Self> {
        let mut out = QSymElement::zero(s.basis);
        for t in s.terms {
            out.add_term(Composition::new(t.comp)?, parse_rational(&t.coef)?);
        }
        Ok(out)
    }
}

impl From<&TensorElement> for StructuredTensor {
    fn from(t: &TensorElement) -> Self {
        StructuredTensor {
            basis: t.basis(),
            arity: t.arity(),
            terms: t
                .terms()
                .iter()
                .map(|(legs, c)| StructuredTensorTerm {
                    comps: legs.iter().map(|a| a.parts().to_vec()).collect(),
                    coef: fmt_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<StructuredTensor> for TensorElement {
    type Error = Error;
    fn try_from(s: StructuredTensor) -> Result<Self> {
        let mut out = TensorElement::zero(s.basis, s.arity);
        for t in s.terms {
            if t.comps.len() != s.arity {
                return Err(Error::Parse(format!(
                    "term has {} legs, expected {}",
                    t.comps.len(),
                    s.arity
                )));
            }
            let legs = t
                .comps
                .into_iter()
                .map(Composition::new)
                .collect::<Result<Vec<_>>>()?;
            out.add_term(legs, parse_rational(&t.coef)?);
        }
        Ok(out)
    }
}

impl QSymElement {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&StructuredElement::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let parsed: StructuredElement =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        parsed.try_into()
    }
}

impl TensorElement {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&StructuredTensor::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let parsed: StructuredTensor =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        parsed.try_into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::coproduct;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn text_form() {
        let f = QSymElement::from_terms(
            Basis::Psi,
            [
                (c(&[3]), Rational::from_integer((-1).into())),
                (c(&[1, 1, 1]), Rational::from_integer(2.into())),
            ],
        );
        assert_eq!(f.to_string(), "-1*psi[3] + 2*psi[1,1,1]");
        assert_eq!(QSymElement::zero(Basis::Monomial).to_string(), "0");
        let g = QSymElement::from_terms(
            Basis::Monomial,
            [(c(&[2, 1]), Rational::new((-1).into(), 2.into()))],
        );
        assert_eq!(g.to_string(), "-1/2*M[2,1]");
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "-1*psi[3] + 2*psi[1,1,1]",
            "1/2*M[2,1] - 3/7*M[1,1,1]",
            "1*L[1,2]",
            "0",
        ] {
            let f: QSymElement = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        let f: QSymElement = "psi[3,4,2,1]".parse().unwrap();
        assert!(f.same_representation(&QSymElement::psi(c(&[3, 4, 2, 1]))));
        let mixed: QSymElement = "M[2] - 2*psi[2]".parse().unwrap();
        assert!(mixed.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let f: QSymElement = "-1*psi[3,2] + 5/3*psi[1]".parse().unwrap();
        let j = f.to_json();
        assert_eq!(QSymElement::from_json(&j).unwrap(), f);
        assert!(j.contains("\"basis\":\"psi\""));
        let t = coproduct(&QSymElement::fundamental(c(&[1, 2])));
        let back = TensorElement::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        let parsed: TensorElement = t.to_string().parse().unwrap();
        assert_eq!(parsed, t);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "1*Q[2]",
            "1*psi[0,2]",
            "1/0*psi[1]",
            "+ - psi[1]",
            "psi[1",
        ] {
            assert!(bad.parse::<QSymElement>().is_err(), "{bad}");
        }
    }
}
