//! Plain, JSON and LaTeX renderings of results. Every renderer is a pure
//! function of its input, so output is byte-stable.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use qschubert::{BoxShape, Partition, QuantumClass, Result, SchurCombination};
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeDoc {
    pub k: usize,
    pub n: usize,
}

impl From<BoxShape> for ShapeDoc {
    fn from(s: BoxShape) -> Self {
        ShapeDoc { k: s.k(), n: s.n() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub d: usize,
    pub nu: Vec<usize>,
    pub coeff: Number,
}

/// JSON form of a quantum (or classical, all `d = 0`) product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDoc {
    pub shape: ShapeDoc,
    pub terms: Vec<TermDoc>,
}

fn number(c: impl ToString) -> Number {
    c.to_string().parse().expect("integers are valid JSON numbers")
}

impl ProductDoc {
    pub fn from_class(class: &QuantumClass) -> Self {
        ProductDoc {
            shape: class.shape().into(),
            terms: class.terms().map(|(d, nu, c)| TermDoc { d, nu: nu.parts().to_vec(), coeff: number(c) }).collect(),
        }
    }

    pub fn from_classical(shape: BoxShape, combo: &SchurCombination) -> Self {
        ProductDoc {
            shape: shape.into(),
            terms: combo.iter().map(|(nu, c)| TermDoc { d: 0, nu: nu.parts().to_vec(), coeff: number(c) }).collect(),
        }
    }

    pub fn to_class(&self) -> Result<QuantumClass> {
        let shape = BoxShape::new(self.shape.k, self.shape.n)?;
        let mut out = QuantumClass::zero(shape);
        for t in &self.terms {
            let nu = shape.boxed(Partition::new(t.nu.clone())?)?;
            let c: BigInt =
                t.coeff.to_string().parse().map_err(|_| {
                    qschubert::Error::InvalidInput(format!("coefficient {} is not an integer", t.coeff))
                })?;
            out = &out + &QuantumClass::monomial(&nu, t.d, c);
        }
        Ok(out)
    }
}

pub fn parts_json(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

/// `s[5,4,2,1]`, `s[]` for the empty partition.
pub fn plain_partition(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("s[{}]", parts.join(","))
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        "\\sigma_{\\emptyset}".to_string()
    } else {
        format!("\\sigma_{{{p}}}")
    }
}

fn join_signed<'a>(terms: impl Iterator<Item = (bool, String)> + 'a) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn plain_class(class: &QuantumClass) -> String {
    class.to_string()
}

pub fn latex_class(class: &QuantumClass) -> String {
    join_signed(class.terms().map(|(d, nu, c)| {
        let mag = c.magnitude();
        let mut body = if *mag == BigUint::from(1u32) { String::new() } else { mag.to_string() };
        match d {
            0 => {}
            1 => body.push('q'),
            _ => body.push_str(&format!("q^{{{d}}}")),
        }
        body.push_str(&latex_partition(nu));
        (c.sign() == Sign::Minus, body)
    }))
}

/// Nonnegative combinations without `q`, in descending lexicographic order.
pub fn plain_combination<'a>(terms: impl Iterator<Item = (&'a Partition, String)>) -> String {
    join_signed(terms.map(|(nu, c)| {
        let coeff = if c == "1" { String::new() } else { format!("{c}*") };
        (false, format!("{coeff}{}", plain_partition(nu)))
    }))
}

pub fn latex_combination<'a>(terms: impl Iterator<Item = (&'a Partition, String)>) -> String {
    join_signed(terms.map(|(nu, c)| {
        let coeff = if c == "1" { String::new() } else { c };
        (false, format!("{coeff}{}", latex_partition(nu)))
    }))
}

pub fn fusion_terms(map: &BTreeMap<Partition, u64>) -> impl Iterator<Item = (&Partition, String)> {
    map.iter().rev().map(|(p, c)| (p, c.to_string()))
}

pub fn classical_terms(c: &SchurCombination) -> impl Iterator<Item = (&Partition, String)> {
    c.iter().map(|(p, c)| (p, c.to_string()))
}
