//! Lower bounds on `L_h` for codes free of cycles shorter than 6 or 8, and
//! two explicit girth-8 constructions for `c = 1`, `w = 2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::SyndromeFormer;
use crate::params::constraint_length;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundQuery {
    pub a: u32,
    pub c: u32,
    pub row_weights: Vec<u32>,
    pub girth: u32,
}

impl BoundQuery {
    pub fn regular(a: u32, c: u32, w: u32, girth: u32) -> Self {
        BoundQuery {
            a,
            c,
            row_weights: vec![w; a as usize],
            girth,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.c == 0 || self.a <= self.c {
            return Err(Error::InvalidParams(format!(
                "need a > c >= 1, got a={}, c={}",
                self.a, self.c
            )));
        }
        if self.row_weights.len() != self.a as usize {
            return Err(Error::InvalidParams(format!(
                "{} row weights for a={}",
                self.row_weights.len(),
                self.a
            )));
        }
        if self.row_weights.iter().any(|&w| w < 2) {
            return Err(Error::InvalidParams(
                "row weights must be at least 2".into(),
            ));
        }
        if self.girth % 2 != 0 {
            return Err(Error::InvalidParams(format!("girth {} is odd", self.girth)));
        }
        Ok(())
    }

    /// Number of differences, `Σ C(w_i, 2)`.
    pub fn pair_count(&self) -> u64 {
        self.row_weights.iter().map(|&w| choose2(w)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    Infeasible,
    /// No closed-form bound for this girth target.
    Unknown,
}

impl fmt::Display for Feasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Feasibility::Feasible => "true",
            Feasibility::Infeasible => "false",
            Feasibility::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub a: u32,
    pub c: u32,
    /// Lower bound on `L_h`; `None` when infeasible or unknown.
    pub lh_lower: Option<u32>,
    pub feasibility: Feasibility,
    /// Which formula produced the value.
    pub formula: &'static str,
}

impl BoundResult {
    pub fn v_s_lower(&self) -> Option<u64> {
        self.lh_lower.map(|l| constraint_length(self.a, self.c, l))
    }
}

fn choose2(n: u32) -> u64 {
    let n = u64::from(n);
    n * n.saturating_sub(1) / 2
}

fn ceil_div(x: u64, y: u64) -> u64 {
    x.div_ceil(y)
}

fn clamp_u32(x: u64) -> u32 {
    u32::try_from(x).unwrap_or(u32::MAX)
}

/// `max{c+1, ceil((a + C(c+1,2)) / c)}` for `w = 2`, girth 6.
pub fn bound_g6_w2(a: u32, c: u32) -> u32 {
    let v = ceil_div(u64::from(a) + choose2(c + 1), u64::from(c));
    clamp_u32(v.max(u64::from(c) + 1))
}

/// `max{c+1, ceil((a·C(w,2) + C(c+1,2)) / c)}` for regular rows, girth 6.
pub fn bound_g6_regular(a: u32, c: u32, w: u32) -> u32 {
    let v = ceil_div(u64::from(a) * choose2(w) + choose2(c + 1), u64::from(c));
    clamp_u32(v.max(u64::from(c) + 1))
}

/// Girth-6 bound: no two differences may share value and starting level,
/// and level `s` offers only `L_h - s - 1` values.
pub fn bound_g6(q: &BoundQuery) -> Result<BoundResult> {
    q.validate()?;
    let c = u64::from(q.c);
    let v = ceil_div(q.pair_count() + choose2(q.c + 1), c).max(c + 1);
    let w0 = q.row_weights[0];
    let formula = if q.row_weights.iter().all(|&w| w == 2) {
        "g6-w2"
    } else if q.row_weights.iter().all(|&w| w == w0) {
        "g6-regular"
    } else {
        "g6-irregular"
    };
    Ok(BoundResult {
        a: q.a,
        c: q.c,
        lh_lower: Some(clamp_u32(v)),
        feasibility: Feasibility::Feasible,
        formula,
    })
}

/// Girth-8 bound. For `c = 1` and `w = 2` it is the tight `L_h >= 2a`; any
/// row of weight 3 or more with `c = 1` has its ones on a single level and
/// always closes a 6-cycle. For `c > 1` the bound is
/// `max{c+1, ceil(2·Σ C(w_i,2) / c)}`, with the ceiling applied because
/// `L_h` is an integer.
pub fn bound_g8(q: &BoundQuery) -> Result<BoundResult> {
    q.validate()?;
    let (lh_lower, feasibility, formula) = if q.c == 1 {
        if q.row_weights.iter().any(|&w| w >= 3) {
            (None, Feasibility::Infeasible, "g8-c1-single-level-6-cycle")
        } else {
            (Some(2 * q.a), Feasibility::Feasible, "g8-c1-w2-tight")
        }
    } else {
        let c = u64::from(q.c);
        let v = ceil_div(2 * q.pair_count(), c).max(c + 1);
        let tag = if q.row_weights.iter().all(|&w| w == 2) {
            "g8-w2-ceil"
        } else if q.row_weights.iter().all(|&w| w == q.row_weights[0]) {
            "g8-regular-ceil"
        } else {
            "g8-irregular-ceil"
        };
        (Some(clamp_u32(v)), Feasibility::Feasible, tag)
    };
    Ok(BoundResult {
        a: q.a,
        c: q.c,
        lh_lower,
        feasibility,
        formula,
    })
}

/// Dispatches on the girth target. Targets other than 6 and 8 have no
/// closed form and report [`Feasibility::Unknown`].
pub fn bound(q: &BoundQuery) -> Result<BoundResult> {
    match q.girth {
        6 => bound_g6(q),
        8 => bound_g8(q),
        _ => {
            q.validate()?;
            Ok(BoundResult {
                a: q.a,
                c: q.c,
                lh_lower: None,
                feasibility: Feasibility::Unknown,
                formula: "none",
            })
        }
    }
}

/// `c = 1`, `w = 2`, differences `1, 3, …, 2a-1`: every sum of two odd
/// values is even, so no three differences close a 6-cycle.
pub fn construct_prop1(a: u32) -> Result<SyndromeFormer> {
    if a == 0 {
        return Err(Error::InvalidParams("a must be positive".into()));
    }
    let rows = (0..a).map(|i| vec![0, 2 * i + 1]).collect();
    SyndromeFormer::new(1, 2 * a, rows)
}

/// `c = 1`, `w = 2`, differences `a, a+1, …, 2a-1`: any two of them sum to
/// more than `2a - 1`.
pub fn construct_prop2(a: u32) -> Result<SyndromeFormer> {
    if a == 0 {
        return Err(Error::InvalidParams("a must be positive".into()));
    }
    let rows = (0..a).map(|i| vec![0, a + i]).collect();
    SyndromeFormer::new(1, 2 * a, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tanner::{conv_girth, Girth};

    #[test]
    fn g6_examples() {
        let r = bound_g6(&BoundQuery::regular(4, 2, 2, 6)).unwrap();
        assert_eq!(r.lh_lower, Some(4));
        assert_eq!(r.formula, "g6-w2");
        let r = bound_g6(&BoundQuery::regular(3, 1, 3, 6)).unwrap();
        assert_eq!(r.lh_lower, Some(10));
        assert_eq!(r.v_s_lower(), Some(30));
    }

    #[test]
    fn g6_irregular() {
        let q = BoundQuery {
            a: 3,
            c: 2,
            row_weights: vec![2, 3, 4],
            girth: 6,
        };
        // (1 + 3 + 6 + 3) / 2 = 6.5
        let r = bound_g6(&q).unwrap();
        assert_eq!((r.lh_lower, r.formula), (Some(7), "g6-irregular"));
    }

    #[test]
    fn g8_examples() {
        assert_eq!(
            bound_g8(&BoundQuery::regular(3, 1, 2, 8)).unwrap().lh_lower,
            Some(6)
        );
        assert_eq!(
            bound_g8(&BoundQuery::regular(6, 3, 2, 8)).unwrap().lh_lower,
            Some(4)
        );
        let r = bound_g8(&BoundQuery::regular(4, 1, 3, 8)).unwrap();
        assert_eq!(r.feasibility, Feasibility::Infeasible);
        assert_eq!(r.lh_lower, None);
        // 2·5·3 / 3 = 10
        assert_eq!(
            bound_g8(&BoundQuery::regular(5, 3, 3, 8)).unwrap().lh_lower,
            Some(10)
        );
        // ceil(2·5 / 3) = 4 = c + 1
        assert_eq!(
            bound_g8(&BoundQuery::regular(5, 3, 2, 8)).unwrap().lh_lower,
            Some(4)
        );
        // ceil(2·7 / 2) = 7
        assert_eq!(
            bound_g8(&BoundQuery::regular(7, 2, 2, 8)).unwrap().lh_lower,
            Some(7)
        );
    }

    #[test]
    fn g8_mixed_weights_c1_is_infeasible() {
        let q = BoundQuery {
            a: 3,
            c: 1,
            row_weights: vec![2, 2, 3],
            girth: 8,
        };
        assert_eq!(bound_g8(&q).unwrap().feasibility, Feasibility::Infeasible);
    }

    #[test]
    fn other_girths_have_no_formula() {
        let r = bound(&BoundQuery::regular(6, 3, 3, 10)).unwrap();
        assert_eq!(r.feasibility, Feasibility::Unknown);
    }

    #[test]
    fn query_validation() {
        assert!(bound_g6(&BoundQuery::regular(2, 2, 2, 6)).is_err());
        assert!(bound_g6(&BoundQuery::regular(3, 1, 1, 6)).is_err());
        assert!(bound(&BoundQuery::regular(3, 1, 2, 7)).is_err());
    }

    #[test]
    fn general_form_specializes() {
        for a in 2..=100 {
            for c in 1..=10.min(a - 1) {
                let g = bound_g6(&BoundQuery::regular(a, c, 2, 6)).unwrap();
                assert_eq!(g.lh_lower, Some(bound_g6_w2(a, c)));
                for w in 3..=5 {
                    let g = bound_g6(&BoundQuery::regular(a, c, w, 6)).unwrap();
                    assert_eq!(g.lh_lower, Some(bound_g6_regular(a, c, w)));
                }
            }
        }
    }

    #[test]
    fn prop_constructions() {
        assert_eq!(
            construct_prop1(2).unwrap().rows(),
            &[vec![0, 1], vec![0, 3]]
        );
        assert_eq!(construct_prop1(1).unwrap().rows(), &[vec![0, 1]]);
        assert_eq!(construct_prop2(1).unwrap(), construct_prop1(1).unwrap());
        assert_eq!(
            construct_prop2(3).unwrap().rows(),
            &[vec![0, 3], vec![0, 4], vec![0, 5]]
        );
        for a in [2, 10] {
            assert!(conv_girth(&construct_prop1(a).unwrap(), 8)
                .unwrap()
                .at_least(8));
        }
        for a in [3, 12] {
            assert!(conv_girth(&construct_prop2(a).unwrap(), 8)
                .unwrap()
                .at_least(8));
        }
        assert_eq!(
            conv_girth(&construct_prop1(1).unwrap(), 24).unwrap(),
            Girth::AboveCap(24)
        );
    }
}
