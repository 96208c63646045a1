//! Code parameters: memory order, constraint length and rate.

use std::fmt;

use crate::error::{Error, Result};

/// Code rate `(a - c) / a`, kept as a reduced integer fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rate {
    num: u32,
    den: u32,
}

impl Rate {
    pub fn new(num: u32, den: u32) -> Self {
        assert!(den > 0, "rate denominator must be positive");
        let g = gcd(num, den);
        Rate {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u32 {
        self.num
    }

    pub fn denom(&self) -> u32 {
        self.den
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut x: u32, mut y: u32) -> u32 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x.max(1)
}

/// Memory order `m_h = ceil(L_h / c) - 1`.
pub fn memory_order(c: u32, l_h: u32) -> u32 {
    l_h.div_ceil(c) - 1
}

/// Syndrome former constraint length `v_s = (m_h + 1) a`.
pub fn constraint_length(a: u32, c: u32, l_h: u32) -> u64 {
    u64::from(l_h.div_ceil(c)) * u64::from(a)
}

/// Parameters shared by every representation of a code.
///
/// Only `(a, c, L_h, row_weights)` are stored; `m_h`, `v_s` and the rate are
/// always recomputed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeParams {
    a: u32,
    c: u32,
    l_h: u32,
    row_weights: Vec<u32>,
}

impl CodeParams {
    /// Validates the structural invariants. `a > c` is not required here so
    /// that degenerate single-row matrices can still be represented; use
    /// [`CodeParams::rate`] or [`derive_params`] where a positive rate matters.
    pub fn new(a: u32, c: u32, l_h: u32, row_weights: Vec<u32>) -> Result<Self> {
        if a == 0 || c == 0 || l_h == 0 {
            return Err(Error::InvalidParams(format!(
                "a={a}, c={c}, L_h={l_h} must all be positive"
            )));
        }
        if row_weights.len() != a as usize {
            return Err(Error::InvalidParams(format!(
                "{} row weights given for a={a}",
                row_weights.len()
            )));
        }
        if let Some(i) = row_weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidParams(format!("row {i} has weight 0")));
        }
        if let Some(&w) = row_weights.iter().max() {
            if w > l_h {
                return Err(Error::InvalidParams(format!(
                    "row weight {w} does not fit in L_h={l_h}"
                )));
            }
        }
        Ok(CodeParams {
            a,
            c,
            l_h,
            row_weights,
        })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn l_h(&self) -> u32 {
        self.l_h
    }

    pub fn row_weights(&self) -> &[u32] {
        &self.row_weights
    }

    pub fn m_h(&self) -> u32 {
        memory_order(self.c, self.l_h)
    }

    pub fn v_s(&self) -> u64 {
        constraint_length(self.a, self.c, self.l_h)
    }

    /// `None` when `a <= c`.
    pub fn rate(&self) -> Option<Rate> {
        (self.a > self.c).then(|| Rate::new(self.a - self.c, self.a))
    }
}

/// Derived quantities of a code with `a` variables and `c` checks per block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Derived {
    pub m_h: u32,
    pub v_s: u64,
    pub rate: Rate,
}

pub fn derive_params(a: u32, c: u32, l_h: u32) -> Result<Derived> {
    if c == 0 || l_h == 0 || a <= c {
        return Err(Error::InvalidParams(format!(
            "need a > c >= 1 and L_h >= 1, got a={a}, c={c}, L_h={l_h}"
        )));
    }
    Ok(Derived {
        m_h: memory_order(c, l_h),
        v_s: constraint_length(a, c, l_h),
        rate: Rate::new(a - c, a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_reference_parameters() {
        let d = derive_params(6, 3, 258).unwrap();
        assert_eq!((d.m_h, d.v_s, d.rate), (85, 516, Rate::new(1, 2)));
        let d = derive_params(5, 3, 159).unwrap();
        assert_eq!((d.m_h, d.v_s, d.rate), (52, 265, Rate::new(2, 5)));
    }

    #[test]
    fn derive_single_block() {
        let d = derive_params(2, 1, 1).unwrap();
        assert_eq!((d.m_h, d.v_s), (0, 2));
        assert_eq!(d.rate.to_string(), "1/2");
    }

    #[test]
    fn derive_rejects_bad_input() {
        assert!(derive_params(3, 3, 10).is_err());
        assert!(derive_params(2, 3, 10).is_err());
        assert!(derive_params(4, 0, 10).is_err());
        assert!(derive_params(4, 2, 0).is_err());
    }

    #[test]
    fn rate_is_reduced() {
        let r = Rate::new(6, 9);
        assert_eq!((r.numer(), r.denom()), (2, 3));
    }

    #[test]
    fn params_validation() {
        assert!(CodeParams::new(2, 1, 3, vec![2, 2]).is_ok());
        assert!(CodeParams::new(2, 1, 3, vec![2]).is_err());
        assert!(CodeParams::new(2, 1, 3, vec![2, 0]).is_err());
        assert!(CodeParams::new(2, 1, 3, vec![2, 4]).is_err());
        let p = CodeParams::new(1, 1, 2, vec![2]).unwrap();
        assert_eq!(p.rate(), None);
    }
}
