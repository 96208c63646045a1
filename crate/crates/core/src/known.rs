//! Published polynomial matrices used as regression fixtures.
//!
//! Each pair is a long code taken from earlier literature and a shorter one
//! with the same `(a, c, w, girth)` found by direct syndrome former search.

use crate::matrix::PolyMatrix;

fn monomials(rows: &[&[u32]]) -> PolyMatrix {
    PolyMatrix::from_monomials(rows).expect("fixture matrices are well formed")
}

/// `a = 6`, `c = 3`, `w = 3`, girth 10, `m_h = 85`.
pub fn g10_a6_long() -> PolyMatrix {
    monomials(&[
        &[0, 2, 24, 25, 54, 85],
        &[0, 21, 15, 11, 8, 59],
        &[0, 0, 0, 0, 0, 0],
    ])
}

/// `a = 6`, `c = 3`, `w = 3`, girth 10, `m_h = 38`.
pub fn g10_a6_short() -> PolyMatrix {
    monomials(&[
        &[0, 33, 0, 17, 30, 11],
        &[16, 8, 33, 0, 0, 33],
        &[38, 0, 34, 20, 4, 0],
    ])
}

/// `a = 5`, `c = 3`, `w = 3`, girth 12, `m_h = 185`.
pub fn g12_a5_long() -> PolyMatrix {
    monomials(&[
        &[166, 181, 19, 0, 58],
        &[12, 95, 0, 154, 138],
        &[27, 0, 185, 117, 170],
    ])
}

/// `a = 5`, `c = 3`, `w = 3`, girth 12, `m_h = 52`.
pub fn g12_a5_short() -> PolyMatrix {
    monomials(&[
        &[52, 0, 32, 0, 48],
        &[0, 51, 47, 45, 0],
        &[33, 25, 0, 16, 44],
    ])
}

/// A reference code with its published parameters.
#[derive(Debug, Clone)]
pub struct KnownCode {
    pub name: &'static str,
    pub matrix: PolyMatrix,
    pub m_h: u32,
    pub l_h: u32,
    pub girth: u32,
}

pub fn all() -> Vec<KnownCode> {
    vec![
        KnownCode {
            name: "g10-a6-long",
            matrix: g10_a6_long(),
            m_h: 85,
            l_h: 258,
            girth: 10,
        },
        KnownCode {
            name: "g10-a6-short",
            matrix: g10_a6_short(),
            m_h: 38,
            l_h: 117,
            girth: 10,
        },
        KnownCode {
            name: "g12-a5-long",
            matrix: g12_a5_long(),
            m_h: 185,
            l_h: 558,
            girth: 12,
        },
        KnownCode {
            name: "g12-a5-short",
            matrix: g12_a5_short(),
            m_h: 52,
            l_h: 159,
            girth: 12,
        },
    ]
}
