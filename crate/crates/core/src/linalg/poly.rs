use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `x - root`.
    pub fn linear_root(root: impl Into<BigInt>) -> Self {
        Self::new(vec![-root.into(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients in ascending degree order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of `p(num / 2^exp)`, computed exactly.
    pub(crate) fn sign_at_dyadic(&self, num: &BigInt, exp: u32) -> Sign {
        // 2^(exp * deg) * p(num / 2^exp) = sum c_i num^i 2^(exp (deg - i))
        let Some(deg) = self.degree() else {
            return Sign::NoSign;
        };
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += (c * &num_pow) << (exp as usize * (deg - i));
            }
            num_pow *= num;
        }
        acc.sign()
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect())
    }

    /// Sign changes along the nonzero coefficients.
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<Sign> = self.coeffs.iter().filter(|c| !c.is_zero()).map(BigInt::sign).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Coefficient signs from the leading term down, e.g. `"+-----"`.
    pub fn sign_pattern(&self) -> String {
        self.coeffs
            .iter()
            .rev()
            .map(|c| match c.sign() {
                Sign::Plus => '+',
                Sign::Minus => '-',
                Sign::NoSign => '0',
            })
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divides out the (positive) content, keeping the sign of every value.
    pub(crate) fn content_reduced(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Remainder `r` of `lc(d)^(deg a - deg d + 1) * a` divided by `d`,
    /// together with the multiplier applied to `a`.
    pub(crate) fn pseudo_rem(&self, d: &Self) -> (Self, BigInt) {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(da) = self.degree() else {
            return (Self::zero(), BigInt::one());
        };
        if da < dd {
            return (self.clone(), BigInt::one());
        }
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut steps = 0u32;
        for top in (dd..=da).rev() {
            let t = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            if !t.is_zero() {
                let shift = top - dd;
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[shift + i] -= &t * dc;
                }
            }
            steps += 1;
        }
        let multiplier = num_traits::pow(lc, steps as usize);
        (Self::new(r), multiplier)
    }

    /// Exact quotient when `d` divides `self` over the integers.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < dd {
            return None;
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - dd + 1];
        for top in (dd..=da).rev() {
            if r[top].is_zero() {
                continue;
            }
            let (quot, rem) = r[top].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &quot * dc;
            }
            q[shift] = quot;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        if a.degree() == Some(0) {
            return Self::from_i64s(&[1]);
        }
        a
    }

    /// Square-free factors `(g, k)` with `primitive_part(p) = prod g^k`.
    /// Each `g` is primitive, square-free and of positive degree.
    pub fn square_free_factors(&self) -> Vec<(Self, usize)> {
        // chain[k] = gcd(chain[k-1], chain[k-1]') collects the factors of
        // multiplicity > k; successive quotients peel them off one level at a time.
        let mut chain = vec![self.primitive_part()];
        while chain.last().unwrap().degree().unwrap_or(0) > 0 {
            let last = chain.last().unwrap();
            chain.push(last.gcd(&last.derivative()));
        }
        if chain.len() == 1 {
            return Vec::new();
        }
        let at_least: Vec<Self> =
            chain.windows(2).map(|w| w[0].div_exact(&w[1]).expect("gcd divides its argument")).collect();
        let one = Self::from_i64s(&[1]);
        let mut out = Vec::new();
        for (k, p) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).unwrap_or(&one);
            let exact = p.div_exact(next).expect("nested square-free parts divide");
            if exact.degree().unwrap_or(0) > 0 {
                out.push((exact.primitive_part(), k + 1));
            }
        }
        out
    }
}

impl std::ops::Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl std::ops::Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending-degree form in `x`, e.g. `x^2 + 20x - 341`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if d == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}
