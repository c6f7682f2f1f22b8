//! Published reference values: determinant factorizations and printed
//! Gram matrices, used as oracles.

use crate::error::Result;
use crate::scalars::Poly;

use super::halfdiag::Lambda;
use super::matrix::PolyMatrix;

/// A Gram determinant given as a product of irreducible factors.
#[derive(Clone, Copy, Debug)]
pub struct DetEntry {
    pub name: &'static str,
    pub n: usize,
    pub lambda: &'static str,
    pub factors: &'static [(&'static str, u32)],
}

impl DetEntry {
    pub fn lambda(&self) -> Lambda {
        self.lambda.parse().expect("static label")
    }

    pub fn expanded(&self) -> Result<Poly> {
        let polys: Vec<(Poly, u32)> = self
            .factors
            .iter()
            .map(|(f, e)| Ok((f.parse::<Poly>()?, *e)))
            .collect::<Result<_>>()?;
        Ok(Poly::product(polys.iter().map(|(p, e)| (p, *e))))
    }

    pub fn factored(&self) -> String {
        self.factors
            .iter()
            .map(|(f, e)| {
                if *e == 1 {
                    format!("({f})")
                } else {
                    format!("({f})^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("")
    }
}

const XM1: &str = "x - 1";
const XP1: &str = "x + 1";
const XM2: &str = "x - 2";
const XP2: &str = "x + 2";
const X: &str = "x";
const Q2: &str = "x^2 + x - 4";
const Q4P: &str = "x^4 + x^3 - 5*x^2 - x + 2";
const Q3M: &str = "x^3 - x^2 - 3*x + 1";

pub const DETERMINANTS: [DetEntry; 12] = [
    DetEntry {
        name: "D^3_1",
        n: 3,
        lambda: "1",
        factors: &[(XM1, 2), (XP2, 1)],
    },
    DetEntry {
        name: "D^4_0",
        n: 4,
        lambda: "0",
        factors: &[(XM1, 2), (X, 3), (XP2, 1)],
    },
    DetEntry {
        name: "D^4_2+",
        n: 4,
        lambda: "2+",
        factors: &[(XM1, 1), (X, 1), (Q2, 1)],
    },
    DetEntry {
        name: "D^4_2-",
        n: 4,
        lambda: "2-",
        factors: &[(XM1, 1), (XP1, 1), (XM2, 1), (XP2, 1)],
    },
    DetEntry {
        name: "D^5_1",
        n: 5,
        lambda: "1",
        factors: &[(XM1, 12), (XP1, 1), (XM2, 1), (XP2, 6), (Q2, 1)],
    },
    DetEntry {
        name: "D^5_3+",
        n: 5,
        lambda: "3+",
        factors: &[(XM1, 1), (Q4P, 1)],
    },
    DetEntry {
        name: "D^5_3-",
        n: 5,
        lambda: "3-",
        factors: &[(XM1, 1), (XP2, 1), (Q3M, 1)],
    },
    DetEntry {
        name: "D^6_0",
        n: 6,
        lambda: "0",
        factors: &[(XM1, 12), (X, 11), (XP1, 1), (XM2, 1), (XP2, 6), (Q2, 1)],
    },
    DetEntry {
        name: "D^6_2+",
        n: 6,
        lambda: "2+",
        factors: &[
            (XM1, 8),
            (X, 5),
            (XP1, 1),
            (XM2, 1),
            (XP2, 1),
            (Q2, 6),
            (Q4P, 1),
        ],
    },
    DetEntry {
        name: "D^6_2-",
        n: 6,
        lambda: "2-",
        factors: &[(XM1, 8), (XP1, 6), (XM2, 6), (XP2, 7), (Q2, 1), (Q3M, 1)],
    },
    DetEntry {
        name: "D^6_4+",
        n: 6,
        lambda: "4+",
        factors: &[(XM1, 2), (X, 1), ("x^3 + 2*x^2 - 4*x - 6", 1)],
    },
    DetEntry {
        name: "D^6_4-",
        n: 6,
        lambda: "4-",
        factors: &[(XM1, 2), (XP2, 1), ("x^3 - 4*x - 2", 1)],
    },
];

/// A printed Gram matrix with its cell label.
#[derive(Clone, Copy, Debug)]
pub struct MatrixEntry {
    pub name: &'static str,
    pub n: usize,
    pub lambda: &'static str,
    /// Entries as polynomial strings, row by row.
    pub rows: &'static [&'static [&'static str]],
}

impl MatrixEntry {
    pub fn lambda(&self) -> Lambda {
        self.lambda.parse().expect("static label")
    }

    pub fn matrix(&self) -> Result<PolyMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<Poly>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(rows)
    }
}

const D: &str = "x";

pub const GRAM_3_1: MatrixEntry = MatrixEntry {
    name: "Δ^3_1",
    n: 3,
    lambda: "1",
    rows: &[&[D, "1", "1"], &["1", D, "1"], &["1", "1", D]],
};

pub const GRAM_4_2_PLUS: MatrixEntry = MatrixEntry {
    name: "Δ^4_2+",
    n: 4,
    lambda: "2+",
    rows: &[
        &[D, "1", "1", "0"],
        &["1", D, "1", "1"],
        &["1", "1", D, "1"],
        &["0", "1", "1", D],
    ],
};

pub const GRAM_4_2_MINUS: MatrixEntry = MatrixEntry {
    name: "Δ^4_2-",
    n: 4,
    lambda: "2-",
    rows: &[
        &[D, "1", "1", "0"],
        &["1", D, "1", "-1"],
        &["1", "1", D, "1"],
        &["0", "-1", "1", D],
    ],
};

pub const GRAM_6_4_PLUS: MatrixEntry = MatrixEntry {
    name: "Δ^6_4+",
    n: 6,
    lambda: "4+",
    rows: &[
        &[D, "1", "1", "0", "0", "0"],
        &["1", D, "1", "1", "0", "0"],
        &["1", "1", D, "1", "0", "0"],
        &["0", "1", "1", D, "1", "0"],
        &["0", "0", "0", "1", D, "1"],
        &["0", "0", "0", "0", "1", D],
    ],
};

/// Exponents `j` of the entries `δ^j` of the printed `(6,0)` matrix.
pub const GRAM_6_0_EXPONENTS: [[u32; 11]; 11] = [
    [3, 2, 2, 1, 2, 2, 1, 2, 1, 2, 1],
    [2, 3, 1, 2, 1, 1, 2, 1, 1, 2, 1],
    [2, 1, 3, 2, 1, 2, 1, 1, 2, 1, 1],
    [1, 2, 2, 3, 2, 1, 2, 1, 2, 1, 1],
    [2, 1, 1, 2, 3, 1, 1, 2, 1, 1, 2],
    [2, 1, 2, 1, 1, 3, 2, 1, 1, 1, 2],
    [1, 2, 1, 2, 1, 2, 3, 2, 1, 1, 2],
    [2, 1, 1, 1, 2, 1, 2, 3, 2, 1, 1],
    [1, 1, 2, 2, 1, 1, 1, 2, 3, 2, 2],
    [2, 2, 1, 1, 1, 1, 1, 1, 2, 3, 2],
    [1, 1, 1, 1, 2, 2, 2, 1, 2, 2, 3],
];

pub fn gram_6_0() -> PolyMatrix {
    PolyMatrix::from_fn(11, 11, |i, j| Poly::delta_pow(GRAM_6_0_EXPONENTS[i][j]))
}

pub const PRINTED: [MatrixEntry; 4] = [GRAM_3_1, GRAM_4_2_PLUS, GRAM_4_2_MINUS, GRAM_6_4_PLUS];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellrep::{gram_det, gram_matrix, CellModule};
    use crate::pairpart::Limits;

    #[test]
    fn small_printed_matrices() {
        for entry in [GRAM_3_1, GRAM_4_2_PLUS, GRAM_4_2_MINUS] {
            let module = CellModule::new(entry.n, entry.lambda(), &Limits::default()).unwrap();
            let g = gram_matrix(&module).unwrap();
            assert_eq!(g, entry.matrix().unwrap(), "{}", entry.name);
        }
    }

    #[test]
    fn small_determinants() {
        for entry in DETERMINANTS.iter().filter(|e| e.n <= 4) {
            let module = CellModule::new(entry.n, entry.lambda(), &Limits::default()).unwrap();
            let det = gram_det(&gram_matrix(&module).unwrap()).unwrap();
            assert_eq!(det, entry.expanded().unwrap(), "{}", entry.name);
        }
        assert_eq!(DETERMINANTS[0].factored(), "(x - 1)^2(x + 2)");
    }
}
