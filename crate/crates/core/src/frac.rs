//! Exact rational arithmetic tuned for exponent bookkeeping.
//!
//! The series machinery stores base-2 logarithms as exact rationals whose
//! numerators can reach millions of bits (exponents like `q·s³` with the
//! index `k` itself of size `2^{q s³}`), while denominators stay small
//! (grid denominators, dyadic scales). `Frac` keeps reduction cheap under
//! that shape: common powers of two are stripped in O(n), and the odd-part
//! gcd is taken through a single `num mod den` division, which is fast
//! exactly because the denominator is small. A general-purpose rational
//! type that runs a full gcd on every operation becomes unusably slow here.

use core::cmp::Ordering;
use core::fmt;
use dashu_base::{BitTest, Gcd, Sign, UnsignedAbs};
use dashu_int::{IBig, UBig};

/// An exact rational `num / den` with `den ≥ 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Frac {
    num: IBig,
    den: UBig,
}

impl Frac {
    pub const F64_EXP_MIN: i64 = -1074;

    pub fn zero() -> Self {
        Frac { num: IBig::ZERO, den: UBig::ONE }
    }

    pub fn one() -> Self {
        Frac { num: IBig::ONE, den: UBig::ONE }
    }

    pub fn new(num: IBig, den: UBig) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = Frac { num, den };
        f.reduce();
        f
    }

    pub fn from_int(n: impl Into<IBig>) -> Self {
        Frac { num: n.into(), den: UBig::ONE }
    }

    pub fn from_ratio(num: impl Into<IBig>, den: impl Into<UBig>) -> Self {
        Self::new(num.into(), den.into())
    }

    /// Exact conversion; every finite f64 is a dyadic rational.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite f64: {x}");
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i8 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac_bits = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if biased == 0 {
            (frac_bits, -1074i64)
        } else {
            (frac_bits | (1u64 << 52), biased - 1075)
        };
        let mut num = IBig::from(mant);
        if sign < 0 {
            num = -num;
        }
        if exp >= 0 {
            Frac { num: num << (exp as usize), den: UBig::ONE }.reduced()
        } else {
            Frac { num, den: UBig::ONE << ((-exp) as usize) }.reduced()
        }
    }

    /// Parses "123", "-1.25", "7/24".
    pub fn from_decimal_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num: IBig = n.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
            let den: UBig = d.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
            if den.is_zero() {
                return Err("zero denominator".into());
            }
            return Ok(Self::new(num, den));
        }
        let (ip, fp) = match s.split_once('.') {
            Some((a, b)) => (a, b),
            None => (s, ""),
        };
        let neg = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        let joined = format!("{}{}", if ip_digits.is_empty() { "0" } else { ip_digits }, fp);
        let mut num: IBig = joined.parse().map_err(|e| format!("bad decimal: {e}"))?;
        if neg {
            num = -num;
        }
        let den = UBig::from(10u8).pow(fp.len());
        Ok(Self::new(num, den))
    }

    fn reduced(mut self) -> Self {
        self.reduce();
        self
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UBig::ONE;
            return;
        }
        let tz_n = self.num.trailing_zeros().unwrap_or(0);
        let tz_d = self.den.trailing_zeros().unwrap_or(0);
        let t = tz_n.min(tz_d);
        if t > 0 {
            self.num >>= t;
            self.den >>= t;
        }
        if self.den != UBig::ONE {
            // One big-by-small division, then a gcd on denominator-sized numbers.
            let r = self.num.clone() % IBig::from(self.den.clone());
            let g = r.gcd(&IBig::from(self.den.clone()));
            if g > UBig::ONE {
                self.num /= IBig::from(g.clone());
                self.den /= g;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.sign() == Sign::Negative
    }

    pub fn is_positive(&self) -> bool {
        !self.num.is_zero() && !self.is_negative()
    }

    pub fn numer(&self) -> &IBig {
        &self.num
    }

    pub fn denom(&self) -> &UBig {
        &self.den
    }

    pub fn neg(&self) -> Self {
        Frac { num: -self.num.clone(), den: self.den.clone() }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() { self.neg() } else { self.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Frac { num: &self.num + &other.num, den: self.den.clone() }.reduced();
        }
        let num = &self.num * IBig::from(other.den.clone()) + &other.num * IBig::from(self.den.clone());
        Frac { num, den: &self.den * &other.den }.reduced()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Frac { num: &self.num * &other.num, den: &self.den * &other.den }.reduced()
    }

    pub fn mul_int(&self, k: &IBig) -> Self {
        Frac { num: &self.num * k, den: self.den.clone() }.reduced()
    }

    pub fn mul_uint(&self, k: &UBig) -> Self {
        self.mul_int(&IBig::from(k.clone()))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        let mut num = &self.num * IBig::from(other.den.clone());
        let mut den_signed = &other.num * IBig::from(self.den.clone());
        if den_signed.sign() == Sign::Negative {
            num = -num;
            den_signed = -den_signed;
        }
        Frac { num, den: den_signed.try_into().expect("positive") }.reduced()
    }

    pub fn recip(&self) -> Self {
        Self::one().div(self)
    }

    /// Multiplies by 2^k (k may be negative).
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if k >= 0 {
            Frac { num: self.num.clone() << (k as usize), den: self.den.clone() }.reduced()
        } else {
            Frac { num: self.num.clone(), den: &self.den << ((-k) as usize) }.reduced()
        }
    }

    pub fn cmp_frac(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        let lhs = &self.num * IBig::from(other.den.clone());
        let rhs = &other.num * IBig::from(self.den.clone());
        lhs.cmp(&rhs)
    }

    pub fn cmp_int(&self, k: i64) -> Ordering {
        let rhs = IBig::from(k) * IBig::from(self.den.clone());
        self.num.cmp(&rhs)
    }

    pub fn floor(&self) -> IBig {
        if self.den == UBig::ONE {
            return self.num.clone();
        }
        let den = IBig::from(self.den.clone());
        let q = &self.num / &den;
        let r = &self.num - &q * &den;
        if r.sign() == Sign::Negative {
            q - IBig::ONE
        } else {
            q
        }
    }

    pub fn ceil(&self) -> IBig {
        -(self.neg().floor())
    }

    pub fn is_integer(&self) -> bool {
        self.den == UBig::ONE
    }

    /// Rounds toward nearest with ~53 significant bits; saturates on overflow.
    pub fn to_f64(&self) -> f64 {
        if self.num.is_zero() {
            return 0.0;
        }
        let neg = self.is_negative();
        let num = self.num.clone().unsigned_abs();
        let nb = num.bit_len() as i64;
        let db = self.den.bit_len() as i64;
        // Scale so the integer quotient has ~64 bits, then round once.
        let p = db - nb + 64;
        let q = if p >= 0 {
            (num << (p as usize)) / &self.den
        } else {
            num / (&self.den << ((-p) as usize))
        };
        let qf = to_f64_rounded(&q);
        let mag = qf * exp2_i(-p);
        if neg { -mag } else { mag }
    }

    /// Decimal string with the given number of significant digits, exact
    /// when the value needs no more digits than that.
    pub fn to_decimal_string(&self, sig_digits: usize) -> String {
        if self.num.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let num = self.num.clone().unsigned_abs();
        let nb = num.bit_len() as i64;
        let db = self.den.bit_len() as i64;
        // decimal exponent estimate of |value|
        let e10 = (((nb - db) as f64) * 0.30102999566398119).floor() as i64;
        let shift = sig_digits as i64 - e10;
        let (scaled_num, scaled_den) = if shift >= 0 {
            (num * UBig::from(10u8).pow(shift as usize), self.den.clone())
        } else {
            (num, &self.den * UBig::from(10u8).pow((-shift) as usize))
        };
        let mut digits = (&scaled_num / &scaled_den).to_string();
        let exact = (&scaled_num % &scaled_den).is_zero();
        // value = digits · 10^{-shift}, so in scientific form the exponent is:
        let e_sci = digits.len() as i64 - 1 - shift;
        if digits.len() > sig_digits + 1 {
            digits.truncate(sig_digits + 1);
        } else if exact {
            while digits.len() > 1 && digits.ends_with('0') {
                digits.pop();
            }
        }
        let sign = if neg { "-" } else { "" };
        let mantissa = if digits.len() == 1 {
            digits.clone()
        } else {
            format!("{}.{}", &digits[..1], &digits[1..])
        };
        if e_sci == 0 {
            format!("{sign}{mantissa}")
        } else {
            format!("{sign}{mantissa}e{e_sci}")
        }
    }
}

/// 2^k as f64, saturating.
pub fn exp2_i(k: i64) -> f64 {
    if k > 1030 {
        f64::INFINITY
    } else if k < -1080 {
        0.0
    } else {
        (k as f64).exp2()
    }
}

fn to_f64_rounded(u: &UBig) -> f64 {
    u.to_f64().value()
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UBig::ONE {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_frac(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_frac(other)
    }
}

impl From<i64> for Frac {
    fn from(v: i64) -> Self {
        Frac::from_int(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(n: i64, d: u64) -> Frac {
        Frac::from_ratio(n, d)
    }

    #[test]
    fn reduction_and_ops() {
        let a = fr(6, 4);
        assert_eq!(a, fr(3, 2));
        assert_eq!(a.add(&fr(1, 3)), fr(11, 6));
        assert_eq!(a.sub(&fr(3, 2)), Frac::zero());
        assert_eq!(a.mul(&fr(4, 9)), fr(2, 3));
        assert_eq!(fr(-7, 3).div(&fr(-1, 6)), fr(14, 1));
    }

    #[test]
    fn floor_ceil_signs() {
        assert_eq!(fr(7, 2).floor(), IBig::from(3));
        assert_eq!(fr(-7, 2).floor(), IBig::from(-4));
        assert_eq!(fr(7, 2).ceil(), IBig::from(4));
        assert_eq!(fr(-7, 2).ceil(), IBig::from(-3));
        assert_eq!(fr(4, 2).floor(), IBig::from(2));
    }

    #[test]
    fn f64_round_trips() {
        for &x in &[0.0, 1.0, -1.5, 0.1, 1e300, -1e-300, 3.141592653589793] {
            let f = Frac::from_f64(x);
            assert_eq!(f.to_f64(), x, "x = {x}");
        }
    }

    #[test]
    fn to_f64_huge_values() {
        let huge = Frac { num: IBig::ONE << 100_000usize, den: UBig::ONE };
        assert!(huge.to_f64().is_infinite());
        let tiny = Frac { num: IBig::ONE, den: UBig::ONE << 100_000usize };
        assert_eq!(tiny.to_f64(), 0.0);
        let ratio = Frac::new(IBig::from(3) << 100_000usize, UBig::ONE << 100_001usize);
        assert!((ratio.to_f64() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn decimal_parse() {
        assert_eq!(Frac::from_decimal_str("0.25").unwrap(), fr(1, 4));
        assert_eq!(Frac::from_decimal_str("-1.5").unwrap(), fr(-3, 2));
        assert_eq!(Frac::from_decimal_str("7/24").unwrap(), fr(7, 24));
        assert_eq!(Frac::from_decimal_str("42").unwrap(), fr(42, 1));
        assert!(Frac::from_decimal_str("1/0").is_err());
    }

    #[test]
    fn decimal_format() {
        assert_eq!(fr(1, 4).to_decimal_string(6), "2.5e-1");
        assert_eq!(fr(3, 1).to_decimal_string(6), "3");
        assert_eq!(fr(-400, 1).to_decimal_string(6), "-4e2");
        assert_eq!(fr(1, 3).to_decimal_string(4), "3.3333e-1");
    }

    #[test]
    fn cheap_reduce_keeps_big_numerators_intact() {
        // gcd path must not choke on million-bit numerators
        let big = IBig::ONE << 1_000_000usize;
        let f = Frac::new(big.clone() * IBig::from(399), UBig::from(400u32));
        assert_eq!(f.denom(), &UBig::from(400u32));
        let g = Frac::new(big * IBig::from(6), UBig::from(4u32));
        assert_eq!(g.denom(), &UBig::from(2u32));
    }
}
