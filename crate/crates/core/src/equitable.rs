//! Equitable vertex partitions of a Seidel matrix and their exact quotient
//! matrices.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{char_poly_exact, real_roots, IntMatrix, LinalgError, Spectrum};
use crate::seidel::SeidelMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PartitionError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not equitable: {0}")]
    NotEquitable(Witness),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Ordered blocks of vertices covering `0..n` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(PartitionError::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(PartitionError::InvalidPartition(format!("vertex {} outside 1..={n}", v + 1)));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(PartitionError::InvalidPartition(format!("vertex {} appears twice", v + 1)));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(PartitionError::InvalidPartition(format!("vertex {} is not covered", v + 1)));
        }
        Ok(Self { n, blocks })
    }

    /// Every vertex in its own block.
    pub fn discrete(n: usize) -> Self {
        Self { n, blocks: (0..n).map(|v| vec![v]).collect() }
    }

    /// Parses `1|2,3|4-9`: 1-based labels, blocks split on `|`, items on
    /// `,`, inclusive ranges with `-`.
    pub fn parse(spec: &str, n: usize) -> Result<Self, PartitionError> {
        let bad = |msg: String| PartitionError::InvalidPartition(msg);
        let mut blocks = Vec::new();
        for raw_block in spec.split('|') {
            let mut block = Vec::new();
            for item in raw_block.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let label = |s: &str| -> Result<usize, PartitionError> {
                    let v: usize = s.trim().parse().map_err(|_| bad(format!("bad vertex label {s:?}")))?;
                    if v == 0 {
                        return Err(bad("labels are 1-based".into()));
                    }
                    Ok(v - 1)
                };
                match item.split_once('-') {
                    Some((a, b)) => {
                        let (a, b) = (label(a)?, label(b)?);
                        if a > b {
                            return Err(bad(format!("descending range {item:?}")));
                        }
                        block.extend(a..=b);
                    }
                    None => block.push(label(item)?),
                }
            }
            blocks.push(block);
        }
        Self::new(n, blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

impl fmt::Display for VertexPartition {
    /// Same syntax [`VertexPartition::parse`] accepts, ranges collapsed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let mut sorted = b.clone();
                sorted.sort_unstable();
                let mut parts = Vec::new();
                let mut i = 0;
                while i < sorted.len() {
                    let mut j = i;
                    while j + 1 < sorted.len() && sorted[j + 1] == sorted[j] + 1 {
                        j += 1;
                    }
                    parts.push(if j > i {
                        format!("{}-{}", sorted[i] + 1, sorted[j] + 1)
                    } else {
                        (sorted[i] + 1).to_string()
                    });
                    i = j + 1;
                }
                parts.join(",")
            })
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

/// Two rows of block `r` whose sums over block `s` differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Source block index (0-based).
    pub r: usize,
    /// Target block index (0-based).
    pub s: usize,
    pub vertex: usize,
    pub other_vertex: usize,
    pub sum: i64,
    pub other_sum: i64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "block {} -> block {}: vertex {} sums to {}, vertex {} sums to {}",
            self.r + 1,
            self.s + 1,
            self.vertex + 1,
            self.sum,
            self.other_vertex + 1,
            self.other_sum
        )
    }
}

fn block_row_sums(s: &SeidelMatrix, p: &VertexPartition) -> Result<Vec<Vec<i64>>, Witness> {
    let t = p.len();
    let mut q = vec![vec![0i64; t]; t];
    for (r, source) in p.blocks().iter().enumerate() {
        for (b, target) in p.blocks().iter().enumerate() {
            let sum_for = |i: usize| target.iter().map(|&j| s.get(i, j)).sum::<i64>();
            let first = sum_for(source[0]);
            for &i in &source[1..] {
                let other = sum_for(i);
                if other != first {
                    return Err(Witness { r, s: b, vertex: source[0], other_vertex: i, sum: first, other_sum: other });
                }
            }
            q[r][b] = first;
        }
    }
    Ok(q)
}

fn check_order(s: &SeidelMatrix, p: &VertexPartition) -> Result<(), PartitionError> {
    if p.order() != s.order() {
        return Err(PartitionError::InvalidPartition(format!(
            "partition covers {} vertices, matrix has order {}",
            p.order(),
            s.order()
        )));
    }
    Ok(())
}

/// Exact equitability check; `Err(witness)` inside `Ok` when not equitable.
pub fn check_equitable(s: &SeidelMatrix, p: &VertexPartition) -> Result<Result<(), Witness>, PartitionError> {
    check_order(s, p)?;
    Ok(block_row_sums(s, p).map(|_| ()))
}

/// `Q = [q_rs]`, the constant block row sums, in the partition's block order.
pub fn quotient_matrix(s: &SeidelMatrix, p: &VertexPartition) -> Result<IntMatrix, PartitionError> {
    check_order(s, p)?;
    let q = block_row_sums(s, p).map_err(PartitionError::NotEquitable)?;
    Ok(IntMatrix::from_rows(&q)?)
}

/// True iff every root of the quotient's characteristic polynomial matches
/// a distinct eigenvalue of `S` within `tol`.
pub fn quotient_spectrum_subset(
    s: &SeidelMatrix,
    p: &VertexPartition,
    full: &Spectrum,
    tol: f64,
) -> Result<bool, PartitionError> {
    let q = quotient_matrix(s, p)?;
    let roots = real_roots(&char_poly_exact(&q)?, tol.min(1e-12))?;
    Ok(roots.len() == q.order() && full.contains_all(&roots, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{gen_complete_bipartite, Hypergraph};
    use crate::linalg::{eig_symmetric, IntPolynomial};
    use num_bigint::BigInt;

    fn c3(m: usize, n: usize) -> Hypergraph {
        gen_complete_bipartite(3, m, n).unwrap().0
    }

    #[test]
    fn parse_partitions() {
        let p = VertexPartition::parse("1|2,3|4-9", 9).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 2], vec![3, 4, 5, 6, 7, 8]]);
        assert_eq!(p.to_string(), "1|2-3|4-9");
        assert!(VertexPartition::parse("1-3|3-9", 9).is_err());
        assert!(VertexPartition::parse("1-3|4-8", 9).is_err());
        assert!(VertexPartition::parse("0-3|4-9", 9).is_err());
        assert!(VertexPartition::parse("1-3||4-9", 9).is_err());
        assert!(VertexPartition::parse("3-1|4-9", 9).is_err());
        assert!(VertexPartition::parse("a|1-9", 9).is_err());
    }

    #[test]
    fn two_block_quotient_of_complete_bipartite() {
        for m in 2..7usize {
            for n in 2..7usize {
                let s = SeidelMatrix::of(&c3(m, n));
                let p = VertexPartition::new(m + n, vec![(0..m).collect(), (m..m + n).collect()]).unwrap();
                assert_eq!(check_equitable(&s, &p).unwrap(), Ok(()));
                let (mi, ni) = (m as i64, n as i64);
                let cross = 1 - 2 * (mi + ni - 2);
                let want = IntMatrix::from_rows(&[
                    vec![(mi - 1) * (1 - 2 * ni), ni * cross],
                    vec![mi * cross, (ni - 1) * (1 - 2 * mi)],
                ])
                .unwrap();
                assert_eq!(quotient_matrix(&s, &p).unwrap(), want);
                assert_eq!(want.trace(), BigInt::from(3 * mi + 3 * ni - 4 * mi * ni - 2));
            }
        }
        let s = SeidelMatrix::of(&c3(3, 6));
        let p = VertexPartition::parse("1-3|4-9", 9).unwrap();
        assert_eq!(
            quotient_matrix(&s, &p).unwrap(),
            IntMatrix::from_rows(&[vec![-22i64, -78], vec![-39, -25]]).unwrap()
        );
    }

    #[test]
    fn type_one_five_block_partition() {
        let (m, n) = (3, 6);
        let h = c3(m, n).delete_hyperedge(&[0, m, m + 1]).unwrap();
        let s = SeidelMatrix::of(&h);
        let p = VertexPartition::new(
            m + n,
            vec![vec![0], vec![m], vec![m + 1], (1..m).collect(), (m + 2..m + n).collect()],
        )
        .unwrap();
        assert_eq!(check_equitable(&s, &p).unwrap(), Ok(()));
    }

    #[test]
    fn non_equitable_split_has_witness() {
        let s = SeidelMatrix::of(&c3(3, 4));
        let p = VertexPartition::parse("1,4|2,3,5-7", 7).unwrap();
        let w = check_equitable(&s, &p).unwrap().unwrap_err();
        // brute force: recompute the two sums the witness points at
        let sum = |i: usize| p.blocks()[w.s].iter().map(|&j| s.get(i, j)).sum::<i64>();
        assert_eq!(sum(w.vertex), w.sum);
        assert_eq!(sum(w.other_vertex), w.other_sum);
        assert_ne!(w.sum, w.other_sum);
        assert!(matches!(quotient_matrix(&s, &p), Err(PartitionError::NotEquitable(_))));
        let spec = eig_symmetric(s.real(), 1e-12).unwrap();
        assert!(quotient_spectrum_subset(&s, &p, &spec, 1e-7).is_err());
    }

    #[test]
    fn trivial_partitions() {
        let h = Hypergraph::edgeless(5).unwrap();
        let s = SeidelMatrix::of(&h);
        let single = VertexPartition::new(5, vec![(0..5).collect()]).unwrap();
        assert_eq!(quotient_matrix(&s, &single).unwrap(), IntMatrix::from_rows(&[vec![4i64]]).unwrap());

        let s = SeidelMatrix::of(&c3(2, 3));
        let q = quotient_matrix(&s, &VertexPartition::discrete(5)).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(q.get(i, j), &BigInt::from(s.get(i, j)));
            }
        }
    }

    #[test]
    fn quotient_roots_in_full_spectrum() {
        let s = SeidelMatrix::of(&c3(3, 3));
        let p = VertexPartition::parse("1-3|4-6", 6).unwrap();
        let q = quotient_matrix(&s, &p).unwrap();
        assert_eq!(char_poly_exact(&q).unwrap(), IntPolynomial::from_i64s(&[-341, 20, 1]));
        let spec = eig_symmetric(s.real(), 1e-12).unwrap();
        assert!(quotient_spectrum_subset(&s, &p, &spec, 1e-7).unwrap());

        let (m, n) = (3, 6);
        let h = c3(m, n).delete_hyperedge(&[0, 1, m]).unwrap();
        let s = SeidelMatrix::of(&h);
        let p =
            VertexPartition::new(m + n, vec![vec![0], vec![1], vec![m], (2..m).collect(), (m + 1..m + n).collect()])
                .unwrap();
        let spec = eig_symmetric(s.real(), 1e-12).unwrap();
        assert!(quotient_spectrum_subset(&s, &p, &spec, 1e-7).unwrap());
    }

    #[test]
    fn order_mismatch() {
        let s = SeidelMatrix::of(&c3(2, 2));
        let p = VertexPartition::discrete(5);
        assert!(matches!(check_equitable(&s, &p), Err(PartitionError::InvalidPartition(_))));
    }
}
