//! Sparse multivariate polynomials over the rationals.
//!
//! A polynomial owns its variable list and maps exponent vectors to nonzero
//! coefficients. Terms are kept in graded-lexicographic order so iteration
//! and serialization are deterministic.
//!
//! Arithmetic operators panic when the two sides disagree on variables;
//! operations crossing charts (substitution, the form calculus in
//! [`crate::forms`]) validate variable lists and report
//! [`crate::Error::VariableMismatch`] instead.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::rational::{int, One, Rational, Zero};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographic comparison of the exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn zero(vars: Vec<String>) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: Rational) -> Self {
        let n = vars.len();
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Exponents(alloc::vec![0; n]), c);
        }
        p
    }

    /// The variable with index `i`.
    pub fn var(vars: Vec<String>, i: usize) -> Self {
        let n = vars.len();
        assert!(i < n, "variable index out of range");
        let mut exp = alloc::vec![0u32; n];
        exp[i] = 1;
        Self::monomial(vars, exp, int(1))
    }

    pub fn monomial(vars: Vec<String>, exp: Vec<u32>, coef: Rational) -> Self {
        assert_eq!(
            exp.len(),
            vars.len(),
            "exponent vector has the wrong length"
        );
        let mut p = Poly::zero(vars);
        if !coef.is_zero() {
            p.terms.insert(Exponents(exp), coef);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.total_degree() == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Exponents::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn same_vars(&self, other: &Poly) -> bool {
        self.vars == other.vars
    }

    fn insert_term(&mut self, exp: Exponents, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coef;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.vars.len(), "variable index out of range");
        let mut out = Poly::zero(self.vars.clone());
        for (exp, coef) in &self.terms {
            let e = exp.0[i];
            if e == 0 {
                continue;
            }
            let mut lowered = exp.0.clone();
            lowered[i] -= 1;
            out.insert_term(Exponents(lowered), coef * &int(i64::from(e)));
        }
        out
    }

    /// All partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.vars.len()).map(|i| self.partial(i)).collect()
    }

    /// Substitute `images[i]` for variable `i`. All images must share one
    /// variable list, which becomes the variable list of the result.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly, crate::Error> {
        if images.len() != self.vars.len() {
            return Err(crate::Error::VariableMismatch {
                detail: alloc::format!(
                    "{} images supplied for {} variables",
                    images.len(),
                    self.vars.len()
                ),
            });
        }
        let target = match images.first() {
            Some(first) => first.vars.clone(),
            None => Vec::new(),
        };
        if images.iter().any(|p| p.vars != target) {
            return Err(crate::Error::VariableMismatch {
                detail: alloc::string::String::from("substitution images disagree on variables"),
            });
        }
        let mut out = Poly::zero(target.clone());
        for (exp, coef) in &self.terms {
            let mut term = Poly::constant(target.clone(), coef.clone());
            for (i, &e) in exp.0.iter().enumerate() {
                for _ in 0..e {
                    term = &term * &images[i];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (exp, coef) in &self.terms {
            let mut term = coef.clone();
            for (x, &e) in point.iter().zip(&exp.0) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.same_vars(rhs), "polynomials over different variables");
        let mut out = self.clone();
        for (exp, coef) in &rhs.terms {
            out.insert_term(exp.clone(), coef.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), -v.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.same_vars(rhs), "polynomials over different variables");
        let mut out = Poly::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp: Vec<u32> = ea.0.iter().zip(&eb.0).map(|(a, b)| a + b).collect();
                out.insert_term(Exponents(exp), ca * cb);
            }
        }
        out
    }
}

fn write_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (idx, (exp, coef)) in p.terms.iter().enumerate() {
        if idx > 0 {
            write!(f, " + ")?;
        }
        let monic = exp.total_degree() > 0 && coef.is_one();
        if !monic {
            write!(f, "{coef}")?;
        }
        let mut first = monic;
        for (i, &e) in exp.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first || !monic {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", p.vars[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(self, f)
    }
}
