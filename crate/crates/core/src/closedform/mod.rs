//! Closed forms for the complete 3-uniform bipartite hypergraph `C³_{m,n}`
//! and for `C³_{m,n} - e` with `e` of either type.
//!
//! Vertices follow [`gen_complete_bipartite`]: `V1 = 0..m`, `V2 = m..m+n`.
//! The canonical deleted edges are `{0, m, m+1}` (one vertex in `V1`) and
//! `{0, 1, m}` (two vertices in `V1`).

mod xi;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::equitable::{PartitionError, VertexPartition};
use crate::hypergraph::{gen_complete_bipartite, Edge, EdgeType, Hypergraph, HypergraphError};
use crate::linalg::{real_roots, IntMatrix, IntPolynomial, LinalgError};
use crate::seidel::SeidelMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClosedFormError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Side sizes `m = |V1|`, `n = |V2|`, both at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct C3Params {
    pub m: usize,
    pub n: usize,
}

impl C3Params {
    pub fn new(m: usize, n: usize) -> Result<Self, ClosedFormError> {
        if m < 2 || n < 2 {
            return Err(ClosedFormError::InvalidParams(format!("need m >= 2 and n >= 2 (got m={m}, n={n})")));
        }
        Ok(Self { m, n })
    }

    /// Fails unless `m >= min_m` and `n >= min_n`.
    pub fn require(&self, min_m: usize, min_n: usize) -> Result<(), ClosedFormError> {
        if self.m < min_m || self.n < min_n {
            return Err(ClosedFormError::InvalidParams(format!(
                "need m >= {min_m} and n >= {min_n} (got m={}, n={})",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// Minimum side sizes at which the closed forms for `edge` apply.
    pub fn require_for(&self, edge: EdgeType) -> Result<(), ClosedFormError> {
        match edge {
            EdgeType::TypeI => self.require(2, 3),
            EdgeType::TypeII => self.require(3, 2),
        }
    }

    pub fn swapped(&self) -> Self {
        Self { m: self.n, n: self.m }
    }

    pub fn hypergraph(&self) -> Hypergraph {
        gen_complete_bipartite(3, self.m, self.n).expect("m, n >= 2 are valid generator parameters").0
    }

    pub fn canonical_edge(&self, edge: EdgeType) -> Edge {
        let m = self.m;
        match edge {
            EdgeType::TypeI => vec![0, m, m + 1],
            EdgeType::TypeII => vec![0, 1, m],
        }
    }

    pub fn hypergraph_minus(&self, edge: EdgeType) -> Result<Hypergraph, ClosedFormError> {
        self.require_for(edge)?;
        Ok(self.hypergraph().delete_hyperedge(&self.canonical_edge(edge))?)
    }

    /// `V1 | V2`, equitable for the intact hypergraph.
    pub fn two_block_partition(&self) -> VertexPartition {
        let (m, n) = (self.m, self.n);
        VertexPartition::new(m + n, vec![(0..m).collect(), (m..m + n).collect()])
            .expect("sides cover every vertex once")
    }

    /// The five blocks matching [`quotient_type1`] / [`quotient_type2`].
    pub fn five_block_partition(&self, edge: EdgeType) -> Result<VertexPartition, ClosedFormError> {
        self.require_for(edge)?;
        let (m, n) = (self.m, self.n);
        let blocks = match edge {
            EdgeType::TypeI => vec![vec![0], vec![m], vec![m + 1], (1..m).collect(), (m + 2..m + n).collect()],
            EdgeType::TypeII => vec![vec![0], vec![1], vec![m], (2..m).collect(), (m + 1..m + n).collect()],
        };
        Ok(VertexPartition::new(m + n, blocks)?)
    }

    fn mi(&self) -> i64 {
        self.m as i64
    }

    fn ni(&self) -> i64 {
        self.n as i64
    }
}

impl fmt::Display for C3Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={})", self.m, self.n)
    }
}

/// Spectrum split into closed-form eigenvalues with known multiplicity and
/// the remaining roots of a small quotient polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedSpectrum {
    pub trivial_values: Vec<(f64, usize)>,
    pub quotient_roots: Vec<f64>,
}

impl ClosedSpectrum {
    pub fn total_multiplicity(&self) -> usize {
        self.trivial_values.iter().map(|(_, k)| k).sum::<usize>() + self.quotient_roots.len()
    }

    /// Every eigenvalue with multiplicity, descending.
    pub fn values(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .trivial_values
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
            .chain(self.quotient_roots.iter().copied())
            .collect();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }

    pub fn energy(&self) -> f64 {
        self.values().iter().map(|v| v.abs()).sum()
    }
}

/// `3m + 3n - 4mn - 2`: trace of the two-block quotient, and the sum of the
/// two non-trivial eigenvalues of the intact hypergraph.
pub fn quotient_trace(p: C3Params) -> i64 {
    let (m, n) = (p.mi(), p.ni());
    3 * m + 3 * n - 4 * m * n - 2
}

/// `V1 | V2` quotient `[[(m-1)(1-2n), n(5-2m-2n)], [m(5-2m-2n), (n-1)(1-2m)]]`.
pub fn quotient_two_block(p: C3Params) -> IntMatrix {
    let (m, n) = (p.mi(), p.ni());
    let cross = 1 - 2 * (m + n - 2);
    IntMatrix::from_rows(&[vec![(m - 1) * (1 - 2 * n), n * cross], vec![m * cross, (n - 1) * (1 - 2 * m)]])
        .expect("2x2 rows")
}

/// `L(m,n) = (m-1)(2n-1) + (n-1)(2m-1)`, the trivial part of the energy.
pub fn l_of(p: C3Params) -> i64 {
    let (m, n) = (p.mi(), p.ni());
    (m - 1) * (2 * n - 1) + (n - 1) * (2 * m - 1)
}

/// `U(m,n)`, the discriminant of the two-block quotient.
pub fn u_of(p: C3Params) -> BigInt {
    let (m, n) = (BigInt::from(p.m), BigInt::from(p.n));
    let m2 = &m * &m;
    let n2 = &n * &n;
    16 * &m2 * &m * &n + &n2 + 2 * &m * &n * (8 * &n2 - 40 * &n + 49) + &m2 * (32 * &n2 - 80 * &n + 1)
}

/// `U(m, n+1) - U(m, n)` as a polynomial in `m, n`.
pub fn delta_u(p: C3Params) -> BigInt {
    let (m, n) = (BigInt::from(p.m), BigInt::from(p.n));
    let m2 = &m * &m;
    16 * &m2 * &m + 64 * &m2 * &n - 48 * &m2 + 48 * &m * &n * &n - 112 * &m * &n + 34 * &m + 2 * &n + 1
}

fn sqrt_big(u: &BigInt) -> f64 {
    u.to_f64().expect("U fits in f64").sqrt()
}

/// `L(m,n) + sqrt(U(m,n))`.
pub fn energy_formula_c3(p: C3Params) -> f64 {
    l_of(p) as f64 + sqrt_big(&u_of(p))
}

/// `2n-1` with multiplicity `m-1`, `2m-1` with multiplicity `n-1`, and the
/// pair `(T ± sqrt(U)) / 2`.
pub fn spectrum_c3(p: C3Params) -> ClosedSpectrum {
    let (m, n) = (p.mi(), p.ni());
    let t = quotient_trace(p) as f64;
    let root_u = sqrt_big(&u_of(p));
    ClosedSpectrum {
        trivial_values: vec![((2 * n - 1) as f64, p.m - 1), ((2 * m - 1) as f64, p.n - 1)],
        quotient_roots: vec![(t + root_u) / 2.0, (t - root_u) / 2.0],
    }
}

fn eval_table(table: &[&[xi::Term]; 6], p: C3Params) -> IntPolynomial {
    let (m, n) = (BigInt::from(p.m), BigInt::from(p.n));
    let coeffs = table
        .iter()
        .map(|terms| terms.iter().map(|&(c, i, j)| BigInt::from(c) * m.pow(i) * n.pow(j)).sum::<BigInt>())
        .collect();
    IntPolynomial::new(coeffs)
}

/// The degree-5 factor for a deleted edge with one vertex in `V1`, leading
/// coefficient `-1` (so it is `-det(xI - Q)` of [`quotient_type1`]).
pub fn xi1(p: C3Params) -> Result<IntPolynomial, ClosedFormError> {
    p.require(2, 3)?;
    Ok(eval_table(&xi::ONE_IN_FIRST_SIDE, p))
}

/// The degree-5 factor for a deleted edge with two vertices in `V1`.
pub fn xi2(p: C3Params) -> Result<IntPolynomial, ClosedFormError> {
    p.require(3, 2)?;
    Ok(eval_table(&xi::TWO_IN_FIRST_SIDE, p))
}

pub fn xi_for(p: C3Params, edge: EdgeType) -> Result<IntPolynomial, ClosedFormError> {
    match edge {
        EdgeType::TypeI => xi1(p),
        EdgeType::TypeII => xi2(p),
    }
}

/// How a tabulated polynomial relates to a monic characteristic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    /// Equal coefficientwise.
    Same,
    /// Equal after multiplying by `-1`.
    Negated,
}

/// `Some(convention)` if `candidate = ±char_poly`, else `None`.
pub fn match_up_to_sign(candidate: &IntPolynomial, char_poly: &IntPolynomial) -> Option<SignConvention> {
    if candidate == char_poly {
        Some(SignConvention::Same)
    } else if &-candidate == char_poly {
        Some(SignConvention::Negated)
    } else {
        None
    }
}

/// Quotient for `C³_{m,n} - {0, m, m+1}` with blocks
/// `{0} | {m} | {m+1} | V1 - {0} | V2 - {m, m+1}`.
pub fn quotient_type1(p: C3Params) -> Result<IntMatrix, ClosedFormError> {
    p.require(2, 3)?;
    let (m, n) = (p.mi(), p.ni());
    let a = 1 - 2 * (m + n - 3);
    let b = 1 - 2 * (m + n - 2);
    let rows = vec![
        vec![0, a, a, (m - 1) * (1 - 2 * n), (n - 2) * b],
        vec![a, 0, 1 - 2 * (m - 1), (m - 1) * b, (n - 2) * (1 - 2 * m)],
        vec![a, 1 - 2 * (m - 1), 0, (m - 1) * b, (n - 2) * (1 - 2 * m)],
        vec![1 - 2 * n, b, b, (m - 2) * (1 - 2 * n), (n - 2) * b],
        vec![b, 1 - 2 * m, 1 - 2 * m, (m - 1) * b, (n - 3) * (1 - 2 * m)],
    ];
    Ok(IntMatrix::from_rows(&rows)?)
}

/// Quotient for `C³_{m,n} - {0, 1, m}` with blocks
/// `{0} | {1} | {m} | V1 - {0, 1} | V2 - {m}`.
pub fn quotient_type2(p: C3Params) -> Result<IntMatrix, ClosedFormError> {
    p.require(3, 2)?;
    let (m, n) = (p.mi(), p.ni());
    let a = 1 - 2 * (m + n - 3);
    let b = 1 - 2 * (m + n - 2);
    let rows = vec![
        vec![0, 1 - 2 * (n - 1), a, (m - 2) * (1 - 2 * n), (n - 1) * b],
        vec![1 - 2 * (n - 1), 0, a, (m - 2) * (1 - 2 * n), (n - 1) * b],
        vec![a, a, 0, (m - 2) * b, (n - 1) * (1 - 2 * m)],
        vec![1 - 2 * n, 1 - 2 * n, b, (m - 3) * (1 - 2 * n), (n - 1) * b],
        vec![b, b, 1 - 2 * m, (m - 2) * b, (n - 2) * (1 - 2 * m)],
    ];
    Ok(IntMatrix::from_rows(&rows)?)
}

pub fn quotient_for(p: C3Params, edge: EdgeType) -> Result<IntMatrix, ClosedFormError> {
    match edge {
        EdgeType::TypeI => quotient_type1(p),
        EdgeType::TypeII => quotient_type2(p),
    }
}

/// Trivial eigenvalues plus the real roots of the degree-5 factor.
pub fn spectrum_c3_minus(p: C3Params, edge: EdgeType, tol: f64) -> Result<ClosedSpectrum, ClosedFormError> {
    let xi = xi_for(p, edge)?;
    let (m, n) = (p.mi(), p.ni());
    let (k_first, k_second) = match edge {
        EdgeType::TypeI => (p.m - 2, p.n - 3),
        EdgeType::TypeII => (p.m - 3, p.n - 2),
    };
    Ok(ClosedSpectrum {
        trivial_values: vec![((2 * n - 1) as f64, k_first), ((2 * m - 1) as f64, k_second)],
        quotient_roots: real_roots(&xi, tol)?,
    })
}

/// Which Seidel matrix the difference-vector families are checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    Intact,
    Minus(EdgeType),
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Intact => f.write_str("intact"),
            Case::Minus(e) => write!(f, "minus-{e}"),
        }
    }
}

/// One family of vectors `e_base - e_j`, all expected to be eigenvectors for
/// `eigenvalue`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigvecFamily {
    pub eigenvalue: i64,
    pub base: usize,
    pub others: Vec<usize>,
    /// Number of vectors with `S v = eigenvalue * v` exactly.
    pub verified: usize,
}

impl EigvecFamily {
    pub fn expected(&self) -> usize {
        self.others.len()
    }

    pub fn holds(&self) -> bool {
        self.verified == self.others.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigvecReport {
    pub case: Case,
    pub families: [EigvecFamily; 2],
}

impl EigvecReport {
    pub fn holds(&self) -> bool {
        self.families.iter().all(EigvecFamily::holds)
    }
}

/// Builds both difference-vector families and checks `S v = λ v` in exact
/// integer arithmetic.
pub fn verify_trivial_eigenvectors(p: C3Params, case: Case) -> Result<EigvecReport, ClosedFormError> {
    let (m, n) = (p.m, p.n);
    let (h, first, second) = match case {
        Case::Intact => (p.hypergraph(), (0, 1..m), (m, m + 1..m + n)),
        Case::Minus(edge) => {
            let h = p.hypergraph_minus(edge)?;
            match edge {
                EdgeType::TypeI => (h, (1, 2..m), (m + 2, m + 3..m + n)),
                EdgeType::TypeII => (h, (2, 3..m), (m + 1, m + 2..m + n)),
            }
        }
    };
    let s = SeidelMatrix::of(&h);
    let family = |(base, others): (usize, std::ops::Range<usize>), eigenvalue: i64| {
        let others: Vec<usize> = others.collect();
        let verified = others
            .iter()
            .filter(|&&j| {
                let mut v = vec![0i64; m + n];
                v[base] = 1;
                v[j] = -1;
                let sv = s.mul_vec(&v);
                sv.iter().zip(&v).all(|(a, b)| *a == eigenvalue * b)
            })
            .count();
        EigvecFamily { eigenvalue, base, others, verified }
    };
    Ok(EigvecReport { case, families: [family(first, 2 * p.ni() - 1), family(second, 2 * p.mi() - 1)] })
}

/// Exact value of a degree-5 factor at the integer point where it is
/// claimed to vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub params: C3Params,
    pub edge: EdgeType,
    pub point: i64,
    #[serde(serialize_with = "serialize_big")]
    pub residual: BigInt,
}

impl FactorizationReport {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn serialize_big<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Evaluates `xi1` at `2m - 3` and `xi2` at `2n - 3` exactly. Never fails on
/// a nonzero residual; the caller decides what to do with it.
pub fn check_factorization_claim(p: C3Params) -> Result<[FactorizationReport; 2], ClosedFormError> {
    p.require(3, 3)?;
    let at = |edge: EdgeType, point: i64| -> Result<FactorizationReport, ClosedFormError> {
        Ok(FactorizationReport { params: p, edge, point, residual: xi_for(p, edge)?.eval(&BigInt::from(point)) })
    };
    Ok([at(EdgeType::TypeI, 2 * p.mi() - 3)?, at(EdgeType::TypeII, 2 * p.ni() - 3)?])
}

/// Divides out the claimed linear factor, returning the quartic cofactor
/// when the division is exact.
pub fn cofactor_after_claimed_root(p: C3Params, edge: EdgeType) -> Result<Option<IntPolynomial>, ClosedFormError> {
    p.require(3, 3)?;
    let point = match edge {
        EdgeType::TypeI => 2 * p.mi() - 3,
        EdgeType::TypeII => 2 * p.ni() - 3,
    };
    let linear = IntPolynomial::new(vec![BigInt::from(-point), BigInt::one()]);
    Ok(xi_for(p, edge)?.div_exact(&linear))
}

/// `|x|` scale used when judging a floating residual of `p` at `x`.
pub fn residual_scale(p: &IntPolynomial, x: f64) -> f64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(d, c)| c.abs().to_f64().unwrap_or(f64::INFINITY) * x.abs().powi(d as i32))
        .sum::<f64>()
        .max(1.0)
}
