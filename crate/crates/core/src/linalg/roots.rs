//! Real roots of integer polynomials: square-free split, Sturm isolation on
//! dyadic intervals, exact bisection, then a Newton polish in `f64`.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use super::{check_tol, IntPolynomial, LinalgError};

/// Relative width the exact bisection stops at, before Newton polishing.
const REFINE_REL_WIDTH: f64 = 1e-13;

/// `num / 2^exp`.
#[derive(Debug, Clone, PartialEq)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn with_exp(&self, exp: u32) -> BigInt {
        &self.num << (exp - self.exp) as usize
    }

    fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let exp = a.exp.max(b.exp) + 1;
        let num = a.with_exp(exp - 1) + b.with_exp(exp - 1);
        Dyadic { num, exp }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.exp > 0 && !self.num.is_zero() && (&self.num & BigInt::from(1)).is_zero() {
            self.num >>= 1usize;
            self.exp -= 1;
        }
        if self.num.is_zero() {
            self.exp = 0;
        }
        self
    }

    fn to_f64(&self) -> f64 {
        let bits = self.num.bits();
        if bits > 900 {
            let shift = bits - 900;
            let top = (&self.num >> shift as usize).to_f64().unwrap_or(f64::NAN);
            return top * 2f64.powi(shift as i32 - self.exp as i32);
        }
        self.num.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(self.exp as i32))
    }
}

struct Sturm {
    chain: Vec<IntPolynomial>,
}

impl Sturm {
    /// Canonical chain with positive rescaling at each step, so sign counts
    /// are those of the textbook sequence.
    fn new(p: &IntPolynomial) -> Self {
        let mut chain = vec![p.content_reduced(), p.derivative().content_reduced()];
        loop {
            let n = chain.len();
            if chain[n - 1].degree().unwrap_or(0) == 0 {
                break;
            }
            let (r, multiplier) = chain[n - 2].pseudo_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            let next = if multiplier.is_positive() { -&r } else { r };
            chain.push(next.content_reduced());
        }
        Sturm { chain }
    }

    fn variations(&self, x: &Dyadic) -> usize {
        let mut prev = Sign::NoSign;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at_dyadic(&x.num, x.exp);
            if s == Sign::NoSign {
                continue;
            }
            if prev != Sign::NoSign && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct roots in `(lo, hi]`.
    fn count(&self, lo: &Dyadic, hi: &Dyadic) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Power of two strictly above every root modulus (Cauchy bound).
fn root_bound(p: &IntPolynomial) -> Dyadic {
    let lead = p.leading().unwrap().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = max / lead + 2;
    let exp = bound.bits() as u32;
    Dyadic { num: BigInt::from(1) << exp as usize, exp: 0 }
}

fn isolate(sturm: &Sturm, bound: &Dyadic) -> Vec<(Dyadic, Dyadic)> {
    let lo = Dyadic { num: -bound.num.clone(), exp: 0 };
    let mut stack = vec![(lo, bound.clone())];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = Dyadic::midpoint(&lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out
}

/// Shrinks `(lo, hi]`, known to hold exactly one root, until its width is
/// at most `width`.
fn refine(sturm: &Sturm, mut lo: Dyadic, mut hi: Dyadic, width: f64) -> (Dyadic, Dyadic) {
    loop {
        let w =
            Dyadic { num: hi.with_exp(hi.exp.max(lo.exp)) - lo.with_exp(hi.exp.max(lo.exp)), exp: hi.exp.max(lo.exp) };
        let scale = 1.0 + lo.to_f64().abs().max(hi.to_f64().abs());
        if w.to_f64() <= width * scale {
            return (lo, hi);
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        if sturm.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

fn newton_polish(p: &IntPolynomial, dp: &IntPolynomial, x0: f64, lo: f64, hi: f64) -> f64 {
    let mut x = x0;
    for _ in 0..2 {
        let d = dp.eval_f64(x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - p.eval_f64(x) / d;
        if !(lo..=hi).contains(&next) {
            break;
        }
        x = next;
    }
    x
}

/// All real roots of `p`, repeated according to multiplicity, descending.
///
/// Each root is isolated exactly and then bisected to a width of
/// `min(tol, 1e-13 (1 + |r|))` before two guarded Newton steps.
pub fn real_roots(p: &IntPolynomial, tol: f64) -> Result<Vec<f64>, LinalgError> {
    check_tol(tol)?;
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    for (factor, multiplicity) in p.square_free_factors() {
        let sturm = Sturm::new(&factor);
        let dfactor = factor.derivative();
        let bound = root_bound(&factor);
        for (lo, hi) in isolate(&sturm, &bound) {
            let (lo, hi) = refine(&sturm, lo, hi, tol.min(REFINE_REL_WIDTH));
            let root = if factor.sign_at_dyadic(&hi.num, hi.exp) == Sign::NoSign {
                hi.to_f64()
            } else {
                let (a, b) = (lo.to_f64(), hi.to_f64());
                newton_polish(&factor, &dfactor, 0.5 * (a + b), a, b)
            };
            roots.extend(std::iter::repeat_n(root, multiplicity));
        }
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn simple_cases() {
        assert_close(&real_roots(&p(&[-1, 0, 1]), 1e-12).unwrap(), &[1.0, -1.0], 1e-15);
        assert_close(&real_roots(&p(&[-2, 0, 1]), 1e-12).unwrap(), &[2f64.sqrt(), -(2f64.sqrt())], 1e-15);
        assert!(real_roots(&p(&[1, 0, 1]), 1e-12).unwrap().is_empty());
        assert!(real_roots(&p(&[5]), 1e-12).unwrap().is_empty());
        assert_eq!(real_roots(&p(&[]), 1e-12), Err(LinalgError::ZeroPolynomial));
        assert!(real_roots(&p(&[1, 1]), -1.0).is_err());
    }

    #[test]
    fn multiplicities() {
        // (x - 3)^2 (x + 1)^3 x
        let f = [3i64, 3, -1, -1, -1].iter().fold(p(&[0, 1]), |acc, &r| &acc * &IntPolynomial::linear_root(r));
        let got = real_roots(&f, 1e-12).unwrap();
        assert_close(&got, &[3.0, 3.0, 0.0, -1.0, -1.0, -1.0], 1e-12);
    }

    #[test]
    fn quadratic_formula_cross_check() {
        // char poly of the 2-block quotient of S(C^3_{3,3})
        let got = real_roots(&p(&[-341, 20, 1]), 1e-12).unwrap();
        let disc = (400.0f64 + 4.0 * 341.0).sqrt();
        assert_close(&got, &[(-20.0 + disc) / 2.0, (-20.0 - disc) / 2.0], 1e-12);
    }

    #[test]
    fn clustered_roots_are_separated() {
        // (1000x - 1)(1000x - 2)(x - 1000)
        let f = &(&p(&[-1, 1000]) * &p(&[-2, 1000])) * &p(&[-1000, 1]);
        assert_close(&real_roots(&f, 1e-12).unwrap(), &[1000.0, 0.002, 0.001], 1e-12);
    }

    #[test]
    fn wilkinson_like() {
        let f = (1..=12).fold(p(&[1]), |acc, r| &acc * &IntPolynomial::linear_root(r));
        let want: Vec<f64> = (1..=12).rev().map(f64::from).collect();
        assert_close(&real_roots(&f, 1e-12).unwrap(), &want, 1e-9);
    }

    #[test]
    fn dyadic_midpoint() {
        let a = Dyadic { num: BigInt::from(-1), exp: 0 };
        let b = Dyadic { num: BigInt::from(1), exp: 1 };
        let m = Dyadic::midpoint(&a, &b);
        assert_eq!(m.to_f64(), -0.25);
        assert_eq!(m, Dyadic { num: BigInt::from(-1), exp: 2 });
    }
}
