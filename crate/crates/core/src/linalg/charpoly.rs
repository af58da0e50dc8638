use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntMatrix, IntPolynomial, LinalgError};

pub const MAX_CHAR_POLY_ORDER: usize = 64;

/// `det(xI - M)` by the Faddeev-LeVerrier recursion in exact integer
/// arithmetic.
///
/// With `N_0 = 0` and `c_n = 1`, each step forms `N_k = M N_{k-1} + c_{n-k+1} I`
/// and `c_{n-k} = -tr(M N_k) / k`. The division is exact for integer `M`.
pub fn char_poly_exact(m: &IntMatrix) -> Result<IntPolynomial, LinalgError> {
    let n = m.order();
    if n > MAX_CHAR_POLY_ORDER {
        return Err(LinalgError::OrderTooLarge { order: n, max: MAX_CHAR_POLY_ORDER });
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = IntMatrix::new(n, vec![BigInt::zero(); n * n])?;
    for k in 1..=n {
        let mut next = m.mul(&acc);
        for i in 0..n {
            next.data[i * n + i] += &coeffs[n - k + 1];
        }
        let (q, r) = m.mul(&next).trace().div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = -q;
        acc = next;
    }
    Ok(IntPolynomial::new(coeffs))
}
