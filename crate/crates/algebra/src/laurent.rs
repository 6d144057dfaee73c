use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, format_rational, Rational};
use crate::AlgebraError;

/// A lattice point naming a variable `v_{x,y}`.
pub type Point = (i64, i64);

/// Exponent vector: lattice point to nonzero exponent.
pub type Monomial = BTreeMap<Point, i32>;

/// Sparse multivariate Laurent polynomial with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::new(), c)
    }

    /// The single variable `v_p`.
    pub fn var(p: Point) -> Self {
        Self::var_pow(p, 1)
    }

    pub fn var_pow(p: Point, e: i32) -> Self {
        let mut m = Monomial::new();
        if e != 0 {
            m.insert(p, e);
        }
        Self::term(m, Rational::one())
    }

    /// A single term; zero exponents in `m` are dropped.
    pub fn term(mut m: Monomial, c: Rational) -> Self {
        m.retain(|_, e| *e != 0);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn variables(&self) -> Vec<Point> {
        let mut v: Vec<Point> = self.terms.keys().flat_map(|m| m.keys().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let m: Monomial = m.into_iter().filter(|(_, e)| *e != 0).collect();
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Evaluates under `assign`; fails if a variable with a negative exponent maps to zero.
    pub fn eval(&self, assign: impl Fn(Point) -> Rational) -> Result<Rational, AlgebraError> {
        let mut cache: BTreeMap<Point, Rational> = BTreeMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (&p, &e) in m {
                let v = cache.entry(p).or_insert_with(|| assign(p)).clone();
                if e < 0 && v.is_zero() {
                    return Err(AlgebraError::DivisionByZero(format!("v_{{{},{}}}", p.0, p.1)));
                }
                t *= pow(&v, e);
            }
            total += t;
        }
        Ok(total)
    }
}

fn pow(v: &Rational, e: i32) -> Rational {
    let base = if e < 0 { v.recip() } else { v.clone() };
    (0..e.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &base)
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = a.clone();
    for (&p, &e) in b {
        *out.entry(p).or_insert(0) += e;
    }
    out.retain(|_, e| *e != 0);
    out
}

/// Evaluates `p` under `assign`. See [`LaurentPoly::eval`].
pub fn laurent_eval(p: &LaurentPoly, assign: impl Fn(Point) -> Rational) -> Result<Rational, AlgebraError> {
    p.eval(assign)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mul_monomials(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = m
                .iter()
                .map(|(&(x, y), &e)| if e == 1 { format!("v[{x},{y}]") } else { format!("v[{x},{y}]^{e}") })
                .collect();
            match (c.is_one(), vars.is_empty()) {
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (_, true) => write!(f, "{}", format_rational(c))?,
                (false, false) => write!(f, "{}*{}", format_rational(c), vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// JSON term: `{"coeff": "p/q", "exponents": [[x, y, e], ...]}`.
#[derive(Serialize, Deserialize)]
struct TermJson {
    #[serde(with = "rational::as_string")]
    coeff: Rational,
    exponents: Vec<(i64, i64, i32)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson { coeff: c.clone(), exponents: m.iter().map(|(&(x, y), &e)| (x, y, e)).collect() })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms: Vec<TermJson> = Vec::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in terms {
            let mut m = Monomial::new();
            for (x, y, e) in t.exponents {
                *m.entry((x, y)).or_insert(0) += e;
            }
            p.add_term(m, t.coeff);
        }
        Ok(p)
    }
}
