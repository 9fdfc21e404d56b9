//! Multivariate polynomials with ring coefficients: sparse term lists over
//! dense exponent vectors, kept in descending graded-lexicographic order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingHandle, RingMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: RingElement,
    #[serde(rename = "exp")]
    pub exps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolySystem {
    pub vars: usize,
    pub polys: Vec<Polynomial>,
}

fn grlex_key(exps: &[u32]) -> (u32, Vec<u32>) {
    (exps.iter().sum(), exps.to_vec())
}

impl Polynomial {
    /// Normalizes a term list: checks arity, merges duplicate exponent
    /// vectors, drops zero coefficients, sorts descending graded-lex.
    pub fn new(ring: &RingHandle, vars: usize, terms: Vec<Term>) -> Result<Polynomial> {
        let mut merged: Vec<Term> = Vec::new();
        for t in terms {
            if t.exps.len() != vars {
                return Err(Error::ArityMismatch(format!(
                    "term exponent vector has length {}, expected {vars}",
                    t.exps.len()
                )));
            }
            ring.check(&t.coeff)?;
            match merged.iter_mut().find(|m| m.exps == t.exps) {
                Some(m) => m.coeff = ring.add(&m.coeff, &t.coeff)?,
                None => merged.push(t),
            }
        }
        merged.retain(|t| !ring.is_zero(&t.coeff));
        merged.sort_by(|a, b| grlex_key(&b.exps).cmp(&grlex_key(&a.exps)));
        Ok(Polynomial { terms: merged })
    }

    pub fn constant(ring: &RingHandle, vars: usize, c: RingElement) -> Result<Polynomial> {
        Polynomial::new(
            ring,
            vars,
            vec![Term {
                coeff: c,
                exps: vec![0; vars],
            }],
        )
    }
}

impl PolySystem {
    pub fn new(ring: &RingHandle, vars: usize, polys: Vec<Polynomial>) -> Result<PolySystem> {
        if polys.is_empty() {
            return Err(Error::ArityMismatch("a system needs at least one polynomial".into()));
        }
        let polys = polys
            .into_iter()
            .map(|p| Polynomial::new(ring, vars, p.terms))
            .collect::<Result<_>>()?;
        Ok(PolySystem { vars, polys })
    }
}

/// Exact evaluation by repeated ring arithmetic, powers by squaring.
pub fn poly_eval(ring: &RingHandle, f: &Polynomial, point: &[RingElement]) -> Result<RingElement> {
    for x in point {
        ring.check(x)?;
    }
    let mut acc = ring.zero();
    for term in &f.terms {
        if term.exps.len() != point.len() {
            return Err(Error::ArityMismatch(format!(
                "point has {} coordinates, term expects {}",
                point.len(),
                term.exps.len()
            )));
        }
        let mut val = term.coeff.clone();
        for (x, &e) in point.iter().zip(&term.exps) {
            if e > 0 {
                let p = ring.pow(x, e as u64)?;
                val = ring.mul(&val, &p)?;
            }
        }
        acc = ring.add(&acc, &val)?;
    }
    Ok(acc)
}

/// Satisfaction check for a whole system at a point.
pub fn system_satisfied(ring: &RingHandle, sys: &PolySystem, point: &[RingElement]) -> Result<bool> {
    if point.len() != sys.vars {
        return Err(Error::ArityMismatch(format!(
            "point has {} coordinates, system has {} variables",
            point.len(),
            sys.vars
        )));
    }
    for f in &sys.polys {
        if !ring.is_zero(&poly_eval(ring, f, point)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pushes a system through a recorded surjection, mapping coefficients
/// termwise and re-normalizing.
pub fn map_system(map: &RingMap, sys: &PolySystem) -> Result<PolySystem> {
    let polys = sys
        .polys
        .iter()
        .map(|f| {
            let terms = f
                .terms
                .iter()
                .map(|t| {
                    Ok(Term {
                        coeff: map.apply(&t.coeff)?,
                        exps: t.exps.clone(),
                    })
                })
                .collect::<Result<Vec<Term>>>()?;
            Polynomial::new(&map.dst, sys.vars, terms)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolySystem {
        vars: sys.vars,
        polys,
    })
}
