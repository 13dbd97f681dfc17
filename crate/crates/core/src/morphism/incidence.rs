use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use super::Morphism;
use crate::error::{Error, Result};

/// Entry `(β, α)` counts the occurrences of `β` in `φ(α)`. Rows and columns
/// follow the source alphabet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    entries: Vec<Vec<u64>>,
}

impl IncidenceMatrix {
    pub fn of(phi: &Morphism) -> Result<Self> {
        if !phi.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        let letters = phi.source().letters();
        let entries = letters
            .iter()
            .map(|&beta| {
                phi.images()
                    .iter()
                    .map(|img| img.count(beta) as u64)
                    .collect()
            })
            .collect();
        Ok(IncidenceMatrix { entries })
    }

    pub fn from_rows(entries: Vec<Vec<u64>>) -> Self {
        assert!(entries.iter().all(|row| row.len() == entries.len()));
        IncidenceMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.size())
            .map(|j| self.entries.iter().map(|row| row[j]).sum())
            .collect()
    }

    /// Some power `k <= n² - 2n + 2` is entrywise positive (Wielandt's bound).
    pub fn is_primitive(&self) -> bool {
        let n = self.size();
        let pattern: Vec<Vec<bool>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&e| e > 0).collect())
            .collect();
        let mut power = pattern.clone();
        for _ in 0..(n * n + 2 - 2 * n) {
            if power.iter().all(|row| row.iter().all(|&b| b)) {
                return true;
            }
            power = bool_product(&power, &pattern);
        }
        false
    }

    /// `det(xI - M)` by the Faddeev–LeVerrier recurrence in exact integers.
    pub fn char_poly(&self) -> Polynomial {
        let n = self.size();
        let a: Vec<Vec<i128>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&e| e as i128).collect())
            .collect();
        let mut coeffs = vec![0i128; n + 1];
        coeffs[n] = 1;
        let mut m = vec![vec![0i128; n]; n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = int_product(&a, &m);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += coeffs[n - k + 1];
            }
            let am = int_product(&a, &next);
            let trace: i128 = (0..n).map(|i| am[i][i]).sum();
            debug_assert_eq!(trace % k as i128, 0);
            coeffs[n - k] = -trace / k as i128;
            m = next;
        }
        Polynomial::new(coeffs.into_iter().map(|c| c as i64).collect())
    }
}

fn bool_product(x: &[Vec<bool>], y: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = x.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).any(|k| x[i][k] && y[k][j])).collect())
        .collect()
}

fn int_product(x: &[Vec<i128>], y: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum())
                .collect()
        })
        .collect()
}

impl Morphism {
    pub fn incidence_matrix(&self) -> Result<IncidenceMatrix> {
        IncidenceMatrix::of(self)
    }

    /// Some power maps every letter to a word containing every letter.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.incidence_matrix()?.is_primitive())
    }
}

/// Integer polynomial, coefficients from the constant term upwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        Polynomial { coeffs }
    }

    /// `x - root`
    pub fn linear(root: i64) -> Self {
        Polynomial::new(vec![-root, 1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Quotient by `x - root` when it divides exactly.
    fn divide_linear(&self, root: i64) -> Option<Polynomial> {
        if self.degree() == 0 {
            return None;
        }
        // synthetic division, highest degree first
        let mut quotient = vec![0i64; self.degree()];
        let mut carry = 0i64;
        for i in (0..self.coeffs.len()).rev() {
            let value = self.coeffs[i] + carry * root;
            if i == 0 {
                return (value == 0).then(|| Polynomial::new(quotient));
            }
            quotient[i - 1] = value;
            carry = value;
        }
        None
    }

    /// Splits off every integer root (with multiplicity) of a monic
    /// polynomial. Returns the roots in ascending order and the cofactor.
    pub fn integer_roots(&self) -> (Vec<i64>, Polynomial) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        loop {
            let constant = rest.coeffs[0];
            let found = if rest.degree() == 0 {
                None
            } else if constant == 0 {
                Some(0)
            } else {
                let c = constant.unsigned_abs();
                (1..=c)
                    .filter(|d| c.is_multiple_of(*d))
                    .flat_map(|d| [d as i64, -(d as i64)])
                    .find(|&r| rest.eval(r) == 0)
            };
            match found.and_then(|r| rest.divide_linear(r).map(|q| (r, q))) {
                Some((r, q)) => {
                    roots.push(r);
                    rest = q;
                }
                None => break,
            }
        }
        roots.sort();
        (roots, rest)
    }

    /// Product form over the integer roots, e.g. `(x-1)(x^2-2x-1)`.
    pub fn factored(&self) -> String {
        let (roots, rest) = self.integer_roots();
        let mut out = String::new();
        let mut i = 0;
        while i < roots.len() {
            let r = roots[i];
            let mult = roots[i..].iter().take_while(|&&s| s == r).count();
            let lin = Polynomial::linear(r);
            if r == 0 {
                out.push('x');
            } else {
                let _ = write!(out, "({lin})");
            }
            if mult > 1 {
                let _ = write!(out, "^{mult}");
            }
            i += mult;
        }
        if out.is_empty() {
            let _ = write!(out, "{rest}");
        } else if rest.degree() > 0 {
            let _ = write!(out, "({rest})");
        }
        out
    }
}

/// `x^3-3x^2+x+1`
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 && !(deg == 0 && first) {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let abs = c.unsigned_abs();
            if abs != 1 || deg == 0 {
                write!(f, "{abs}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
            first = false;
        }
        Ok(())
    }
}
