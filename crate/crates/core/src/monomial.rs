//! Dense exponent-vector monomials.

use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

pub type VariableIndex = usize;

/// A monomial `x_0^{a_0} ... x_{n-1}^{a_{n-1}}`, stored as its exponent
/// vector. The derived order is lexicographic on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(index: VariableIndex, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: impl Into<Vec<u16>>) -> Self {
        Monomial { exps: exps.into() }
    }

    /// Product of the listed variables, with repetition.
    pub fn from_vars(vars: &[VariableIndex], nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        for &v in vars {
            m.exps[v] += 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    /// `deg_v(m)`: the largest `i` with `v^i | m`.
    pub fn deg_var(&self, v: VariableIndex) -> u16 {
        self.exps[v]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variables with a positive exponent, as a bitmask over the first 64
    /// variables.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    }

    /// The variable, if the monomial is a single variable.
    pub fn as_variable(&self) -> Option<VariableIndex> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match (e, found) {
                (0, _) => {}
                (1, None) => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    fn check_same(&self, other: &Monomial) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::VariableCountMismatch {
                left: self.nvars(),
                right: other.nvars(),
            })
        }
    }

    /// `m : n = m / gcd(m, n)`, componentwise `max(m_i - n_i, 0)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    pub fn try_colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(self.colon(other))
    }

    /// Degree of `m : n` without building it.
    pub fn colon_degree(&self, other: &Monomial) -> u32 {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| u32::from(a.saturating_sub(b)))
            .sum()
    }

    /// Support bitmask of `m : n` without building it.
    pub fn colon_support(&self, other: &Monomial) -> u64 {
        self.exps
            .iter()
            .zip(&other.exps)
            .enumerate()
            .filter(|&(_, (&a, &b))| a > b)
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other | self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.colon(other))
    }

    /// Zeroes every exponent outside `w`.
    pub fn localize(&self, w: VertexSet) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .enumerate()
                .map(|(i, &e)| if w.contains(i) { e } else { 0 })
                .collect(),
        }
    }

    /// Same monomial over `nvars` variables, padding with zero exponents.
    pub fn extended(&self, nvars: usize) -> Monomial {
        assert!(nvars >= self.nvars());
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial { exps }
    }

    /// Replaces `x^k` by `y^k` for `k <= deg_x`.
    pub fn shift(&self, x: VariableIndex, y: VariableIndex, k: u16) -> Monomial {
        assert!(self.exps[x] >= k);
        let mut exps = self.exps.clone();
        exps[x] -= k;
        exps[y] += k;
        Monomial { exps }
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e * k).collect(),
        }
    }

    /// Renders as `a^2*b*c` using the given variable names, `1` for the
    /// unit.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .join("*")
    }

    /// Renders as `[2,2,0,0,0]`.
    pub fn render_vector(&self) -> String {
        format!("[{}]", self.exps.iter().join(","))
    }

    /// Parses either rendering. Names resolve against `names`; `x<i>` is
    /// accepted for any index below `names.len()`.
    pub fn parse(text: &str, names: &[String]) -> Result<Monomial> {
        let text = text.trim();
        let bad = || Error::MonomialParse(text.to_string());
        let nvars = names.len();
        if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let exps: Vec<u16> = inner
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if exps.len() != nvars {
                return Err(bad());
            }
            return Ok(Monomial { exps });
        }
        let mut m = Monomial::one(nvars);
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*').map(str::trim) {
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => (name.trim(), exp.trim().parse::<u16>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let index = names
                .iter()
                .position(|n| n == name)
                .or_else(|| {
                    name.strip_prefix('x')
                        .and_then(|i| i.parse::<usize>().ok())
                        .filter(|&i| i < nvars)
                })
                .ok_or_else(bad)?;
            m.exps[index] += exp;
        }
        Ok(m)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}
