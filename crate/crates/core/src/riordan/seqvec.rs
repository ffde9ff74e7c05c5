//! Sequences of exact polynomial terms.

use std::fmt;

use crate::exactalg::{ParamPoly, Rat};

/// A finite prefix of a sequence with polynomial-in-`r` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqVec {
    terms: Vec<ParamPoly>,
    offset: usize,
}

impl SeqVec {
    pub fn new(terms: Vec<ParamPoly>) -> Self {
        SeqVec { terms, offset: 0 }
    }

    pub fn with_offset(terms: Vec<ParamPoly>, offset: usize) -> Self {
        SeqVec { terms, offset }
    }

    pub fn from_ints(terms: &[i64]) -> Self {
        SeqVec::new(terms.iter().map(|&t| ParamPoly::from_int(t)).collect())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Term at position `i` of the stored prefix.
    pub fn term(&self, i: usize) -> &ParamPoly {
        &self.terms[i]
    }

    pub fn terms(&self) -> &[ParamPoly] {
        &self.terms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ParamPoly> {
        self.terms.iter()
    }

    pub fn prefix(&self, n: usize) -> SeqVec {
        SeqVec {
            terms: self.terms[..n.min(self.terms.len())].to_vec(),
            offset: self.offset,
        }
    }

    /// Evaluate every term at a rational `r`-value.
    pub fn eval_r(&self, at: &Rat) -> SeqVec {
        SeqVec {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let v = t.eval(at);
                    if num_traits::Zero::is_zero(&v) {
                        ParamPoly::zero()
                    } else {
                        ParamPoly::constant(v)
                    }
                })
                .collect(),
            offset: self.offset,
        }
    }

    /// Comma-separated canonical rendering.
    pub fn render_text(&self) -> String {
        self.terms
            .iter()
            .map(|t| t.render())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// JSON value: array of polynomial coefficient arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|p| {
                    serde_json::Value::Array(
                        p.coeff_strings()
                            .into_iter()
                            .map(serde_json::Value::String)
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Display for SeqVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

impl FromIterator<ParamPoly> for SeqVec {
    fn from_iter<T: IntoIterator<Item = ParamPoly>>(iter: T) -> Self {
        SeqVec::new(iter.into_iter().collect())
    }
}
