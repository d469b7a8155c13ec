//! Exact fractions over `i128`.
//!
//! Every value is kept reduced with a positive denominator, so structural
//! equality is numeric equality. All arithmetic is checked; an intermediate
//! that does not fit in `i128` yields [`RationalError::Overflow`].

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;

/// Failure of a rational operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    /// An intermediate product or sum left the `i128` range.
    #[error("rational arithmetic overflowed i128")]
    Overflow,
    /// Zero denominator or division by zero.
    #[error("division by zero")]
    DivisionByZero,
    /// A float that is NaN or infinite has no rational value.
    #[error("non-finite float has no rational value")]
    NotFinite,
}

/// A reduced fraction `numerator / denominator` with `denominator > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// 0
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    /// 1
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num / den`, reducing and normalising the sign.
    pub fn new(num: i128, den: i128) -> Result<Self, RationalError> {
        if den == 0 {
            return Err(RationalError::DivisionByZero);
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs());
        // g divides den, and den != 0, so g >= 1 and fits whenever den does,
        // except for the single case |den| = 2^127 with g = 2^127.
        let g = i128::try_from(g).map_err(|_| RationalError::Overflow)?;
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(RationalError::Overflow)?;
            den = den.checked_neg().ok_or(RationalError::Overflow)?;
        }
        Ok(Rational { num, den })
    }

    /// The integer `value / 1`.
    pub const fn from_integer(value: i128) -> Self {
        Rational { num: value, den: 1 }
    }

    /// Exact value of a finite `f64`, which is always a dyadic fraction.
    pub fn from_f64_exact(x: f64) -> Result<Self, RationalError> {
        if !x.is_finite() {
            return Err(RationalError::NotFinite);
        }
        if x == 0.0 {
            return Ok(Self::ZERO);
        }
        let bits = x.to_bits();
        let negative = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i32;
        let fraction = bits & ((1u64 << 52) - 1);
        let (mantissa, exponent) = if biased == 0 {
            (fraction, -1074)
        } else {
            (fraction | (1u64 << 52), biased - 1075)
        };
        // Strip trailing zero bits so the denominator is as small as possible.
        let tz = mantissa.trailing_zeros() as i32;
        let mantissa = (mantissa >> tz) as i128;
        let exponent = exponent + tz;
        let signed = if negative { -mantissa } else { mantissa };
        if exponent >= 0 {
            if exponent > 126 - 53 {
                return Err(RationalError::Overflow);
            }
            let scaled = signed
                .checked_mul(1i128 << exponent)
                .ok_or(RationalError::Overflow)?;
            Ok(Self::from_integer(scaled))
        } else {
            if -exponent > 126 {
                return Err(RationalError::Overflow);
            }
            // mantissa is odd, so the fraction is already reduced.
            Ok(Rational {
                num: signed,
                den: 1i128 << (-exponent),
            })
        }
    }

    /// Numerator; carries the sign.
    pub const fn numerator(&self) -> i128 {
        self.num
    }

    /// Denominator; always positive.
    pub const fn denominator(&self) -> i128 {
        self.den
    }

    /// `true` for 0.
    pub const fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `true` when the denominator is 1.
    pub const fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Checked negation.
    pub fn checked_neg(self) -> Result<Self, RationalError> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(RationalError::Overflow)?,
            den: self.den,
        })
    }

    /// Checked addition.
    pub fn checked_add(self, rhs: Self) -> Result<Self, RationalError> {
        let g = gcd(self.den as u128, rhs.den as u128) as i128;
        let left = self.den / g;
        let right = rhs.den / g;
        let num = self
            .num
            .checked_mul(right)
            .and_then(|a| rhs.num.checked_mul(left).and_then(|b| a.checked_add(b)))
            .ok_or(RationalError::Overflow)?;
        let den = left.checked_mul(rhs.den).ok_or(RationalError::Overflow)?;
        Self::new(num, den)
    }

    /// Checked subtraction.
    pub fn checked_sub(self, rhs: Self) -> Result<Self, RationalError> {
        self.checked_add(rhs.checked_neg()?)
    }

    /// Checked multiplication. Cross-reduces before multiplying.
    pub fn checked_mul(self, rhs: Self) -> Result<Self, RationalError> {
        if self.num == 0 || rhs.num == 0 {
            return Ok(Self::ZERO);
        }
        let g1 = gcd(self.num.unsigned_abs(), rhs.den as u128) as i128;
        let g2 = gcd(rhs.num.unsigned_abs(), self.den as u128) as i128;
        let num = (self.num / g1)
            .checked_mul(rhs.num / g2)
            .ok_or(RationalError::Overflow)?;
        let den = (self.den / g2)
            .checked_mul(rhs.den / g1)
            .ok_or(RationalError::Overflow)?;
        Ok(Rational { num, den })
    }

    /// Checked division.
    pub fn checked_div(self, rhs: Self) -> Result<Self, RationalError> {
        self.checked_mul(rhs.recip()?)
    }

    /// Multiplicative inverse.
    pub fn recip(self) -> Result<Self, RationalError> {
        if self.num == 0 {
            return Err(RationalError::DivisionByZero);
        }
        Self::new(self.den, self.num)
    }

    /// Multiplies by an integer.
    pub fn checked_mul_int(self, k: i128) -> Result<Self, RationalError> {
        self.checked_mul(Self::from_integer(k))
    }

    /// Integer power.
    pub fn checked_pow(self, exp: u32) -> Result<Self, RationalError> {
        let mut acc = Self::ONE;
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Nearest-ish `f64`: the result is within one unit in the last place of
    /// the true value.
    pub fn to_f64(&self) -> f64 {
        if self.num == 0 {
            return 0.0;
        }
        let a = self.num.unsigned_abs();
        let b = self.den as u128;
        // Long division until at least 64 significant quotient bits exist.
        let mut mant = a / b;
        let mut rem = a % b;
        let mut exp: i32 = 0;
        while mant < (1u128 << 64) {
            rem <<= 1;
            mant <<= 1;
            if rem >= b {
                rem -= b;
                mant |= 1;
            }
            exp -= 1;
        }
        let value = libm::ldexp(mant as f64, exp);
        if self.num < 0 {
            -value
        } else {
            value
        }
    }

    /// Decimal expansion with at most `max_fraction_digits` digits after the
    /// point, rounded half away from zero. Trailing zeros are trimmed, so a
    /// terminating fraction such as `106485/64` prints as `1663.828125`.
    pub fn to_decimal_string(&self, max_fraction_digits: usize) -> String {
        let mut out = String::new();
        let b = self.den as u128;
        let a = self.num.unsigned_abs();
        let mut int_part = a / b;
        let mut rem = a % b;
        let mut digits: alloc::vec::Vec<u8> = alloc::vec::Vec::new();
        for _ in 0..max_fraction_digits {
            if rem == 0 {
                break;
            }
            // rem < b <= 2^127; rem * 10 can overflow u128 only when
            // b > 2^124, handled by splitting the multiply.
            let (d, r) = mul10_divmod(rem, b);
            digits.push(d);
            rem = r;
        }
        if rem != 0 {
            // Round half away from zero on the next digit.
            let (next, _) = mul10_divmod(rem, b);
            if next >= 5 {
                let mut i = digits.len();
                loop {
                    if i == 0 {
                        int_part += 1;
                        break;
                    }
                    i -= 1;
                    if digits[i] == 9 {
                        digits[i] = 0;
                    } else {
                        digits[i] += 1;
                        break;
                    }
                }
            }
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        if self.num < 0 && (int_part != 0 || !digits.is_empty()) {
            out.push('-');
        }
        let _ = write!(out, "{int_part}");
        if !digits.is_empty() {
            out.push('.');
            for d in digits {
                out.push((b'0' + d) as char);
            }
        }
        out
    }
}

/// `(floor(10·rem / b), 10·rem mod b)` for `rem < b`, without overflow.
fn mul10_divmod(rem: u128, b: u128) -> (u8, u128) {
    let mut digit = 0u8;
    let mut r = 0u128;
    // Ten additions of rem, each reduced mod b.
    for _ in 0..10 {
        // r < b and rem < b; r + rem may exceed u128 only if b > 2^127,
        // which a positive i128 denominator never is.
        r += rem;
        if r >= b {
            r -= b;
            digit += 1;
        }
    }
    (digit, r)
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Self::from_integer(value as i128)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            (Some(l), Some(r)) => l.cmp(&r),
            // Fall back to the sign of the exact difference.
            _ => match other.checked_sub(*self) {
                Ok(d) => 0.cmp(&d.num),
                Err(_) => self.to_f64().total_cmp(&other.to_f64()),
            },
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalises_sign() {
        let x = r(6, -4);
        assert_eq!((x.numerator(), x.denominator()), (-3, 2));
        assert_eq!(r(0, -7), Rational::ZERO);
        assert_eq!(Rational::new(1, 0), Err(RationalError::DivisionByZero));
    }

    #[test]
    fn coefficient_arithmetic() {
        let cube = r(9, 4).checked_pow(3).unwrap();
        assert_eq!(cube, r(729, 64));
        assert_eq!(cube.checked_mul_int(3).unwrap(), r(2187, 64));
        assert_eq!(r(-807, 32).checked_add(r(807, 32)).unwrap(), Rational::ZERO);
        assert_eq!(r(3, 2).checked_sub(r(1, 3)).unwrap(), r(7, 6));
        assert_eq!(r(3, 2).checked_div(r(9, 4)).unwrap(), r(2, 3));
        assert_eq!(Rational::ZERO.recip(), Err(RationalError::DivisionByZero));
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::from_integer(i128::MAX);
        assert_eq!(big.checked_add(Rational::ONE), Err(RationalError::Overflow));
        assert_eq!(big.checked_mul_int(2), Err(RationalError::Overflow));
        assert_eq!(
            Rational::from_integer(i128::MIN).checked_neg(),
            Err(RationalError::Overflow)
        );
        let tiny = r(1, i128::MAX);
        assert_eq!(tiny.checked_mul(r(1, 3)), Err(RationalError::Overflow));
    }

    #[test]
    fn ordering() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-807, 32) < r(-573, 64));
        let huge = r(i128::MAX, 3);
        assert!(huge > r(i128::MAX - 1, 3));
    }

    #[test]
    fn float_conversion() {
        assert_eq!(r(106485, 64).to_f64(), 1663.828125);
        assert_eq!(r(-1, 3).to_f64(), -1.0 / 3.0);
        assert_eq!(r(1, 10).to_f64(), 0.1);
        assert_eq!(Rational::from_integer(1 << 100).to_f64(), 2f64.powi(100));
    }

    #[test]
    fn exact_float_round_trip() {
        for x in [0.1, -2.5, 1663.828125, 1e-20, 5.932652990377571, 3.0e20] {
            let q = Rational::from_f64_exact(x).unwrap();
            assert_eq!(q.to_f64(), x, "{x}");
        }
        assert_eq!(Rational::from_f64_exact(0.75).unwrap(), r(3, 4));
        assert_eq!(
            Rational::from_f64_exact(f64::NAN),
            Err(RationalError::NotFinite)
        );
        assert_eq!(
            Rational::from_f64_exact(1e300),
            Err(RationalError::Overflow)
        );
    }

    #[test]
    fn decimal_strings() {
        assert_eq!(r(106485, 64).to_decimal_string(30), "1663.828125");
        assert_eq!(r(80675, 64).to_decimal_string(30), "1260.546875");
        assert_eq!(r(-573, 64).to_decimal_string(30), "-8.953125");
        assert_eq!(r(1, 3).to_decimal_string(5), "0.33333");
        assert_eq!(r(2, 3).to_decimal_string(5), "0.66667");
        assert_eq!(r(-2, 3).to_decimal_string(2), "-0.67");
        assert_eq!(r(999, 1000).to_decimal_string(2), "1");
        assert_eq!(Rational::from_integer(48).to_decimal_string(10), "48");
        assert_eq!(r(-1, 1000).to_decimal_string(2), "0");
    }

    #[test]
    fn display() {
        use alloc::string::ToString;
        assert_eq!(r(729, 64).to_string(), "729/64");
        assert_eq!(r(-16, 2).to_string(), "-8");
    }
}
