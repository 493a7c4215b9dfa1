use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linrel::Rat;

/// A sparse multivariate polynomial over `Q`: a map from exponent vectors to
/// nonzero coefficients. Terms are ordered graded-lexicographically for
/// display and serialization.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(n_vars: usize) -> Self {
        Poly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; n_vars], c);
        }
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Poly::constant(n_vars, Rat::one())
    }

    /// The coordinate function `x_i`.
    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!(i < n_vars, "variable index out of range");
        let mut exps = vec![0; n_vars];
        exps[i] = 1;
        Poly::monomial(n_vars, exps, Rat::one())
    }

    pub fn monomial(n_vars: usize, exps: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(exps.len(), n_vars, "exponent vector length mismatch");
        let mut p = Poly::zero(n_vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0; self.n_vars])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Terms in graded-lex order (degree first, then lexicographic).
    pub fn terms_graded(&self) -> Vec<(Vec<u32>, Rat)> {
        let mut terms: Vec<(Vec<u32>, Rat)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(&b.0))
        });
        terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n_vars);
        }
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
                *entry += &(c1 * c2);
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    /// Partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.n_vars);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i] -= 1;
            terms.insert(exps, c * &Rat::from_int(e[i] as i64));
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.n_vars, "point dimension mismatch");
        let mut out = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term * point[i].pow(exp);
                }
            }
            out += term;
        }
        out
    }

    /// Substitutes an affine map `x = M s + b` (columns of `m` index the new
    /// variables `s`), producing a polynomial in `m.cols()` variables.
    pub fn substitute_linear(&self, m: &crate::linrel::RatMatrix) -> Poly {
        assert_eq!(m.rows(), self.n_vars, "substitution row mismatch");
        let s_vars = m.cols();
        // images of the old coordinates as polynomials in s
        let images: Vec<Poly> = (0..self.n_vars)
            .map(|i| {
                let mut p = Poly::zero(s_vars);
                for j in 0..s_vars {
                    if !m[(i, j)].is_zero() {
                        p = p.add(&Poly::var(s_vars, j).scale(&m[(i, j)]));
                    }
                }
                p
            })
            .collect();
        let mut out = Poly::zero(s_vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(s_vars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&images[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Embeds into a larger variable set; variable `i` maps to `map[i]`.
    pub fn embed(&self, new_n_vars: usize, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.n_vars);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; new_n_vars];
            for (i, &exp) in e.iter().enumerate() {
                exps[map[i]] += exp;
            }
            terms.insert(exps, c.clone());
        }
        Poly {
            n_vars: new_n_vars,
            terms,
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms_graded() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    write!(f, "*x{i}")?;
                } else if exp > 1 {
                    write!(f, "*x{i}^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
