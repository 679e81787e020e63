//! Polynomials over the two-element field, bit-packed into 64-bit limbs.
//!
//! Bit `i` of the limb vector is the coefficient of `x^i`, so addition is
//! XOR and multiplication is carryless. Two text encodings are supported
//! everywhere:
//!
//! ```text
//! "x^6+x^3+1"   human form, monomials in strictly decreasing degree
//! "0x49"        hex form, bit i = coefficient of x^i (0b1001001)
//! ```
//!
//! Values are immutable after construction and all operations are pure,
//! so they can be shared freely across threads.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

const LIMB_BITS: usize = 64;

/// Errors from polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("the zero polynomial has no reciprocal")]
    ZeroPolynomial,
}

/// Errors from parsing the text encodings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseBitPolyError {
    #[error("empty polynomial string")]
    Empty,
    #[error("invalid hex literal {0:?}")]
    InvalidHex(String),
    #[error("invalid term {0:?} (expected \"1\", \"x\" or \"x^K\")")]
    InvalidTerm(String),
    #[error("duplicate term of degree {0}")]
    DuplicateTerm(usize),
}

/// A binary polynomial as a packed coefficient bit vector.
///
/// Invariant: the limb vector carries no trailing zero limb, so the zero
/// polynomial is the empty vector and `degree()` is `None` for it (a
/// distinct sentinel rather than a fake index).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitPoly {
    limbs: Vec<u64>,
}

impl BitPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        BitPoly { limbs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        BitPoly { limbs: vec![1] }
    }

    /// The polynomial x.
    pub fn x() -> Self {
        BitPoly { limbs: vec![2] }
    }

    /// The monomial x^degree.
    pub fn monomial(degree: usize) -> Self {
        let mut limbs = vec![0; degree / LIMB_BITS + 1];
        limbs[degree / LIMB_BITS] = 1 << (degree % LIMB_BITS);
        BitPoly { limbs }
    }

    /// Builds from a bit pattern, bit i = coefficient of x^i.
    pub fn from_u64(bits: u64) -> Self {
        BitPoly::from_limbs(vec![bits])
    }

    /// Builds from little-endian limbs, normalizing trailing zeros.
    pub fn from_limbs(mut limbs: Vec<u64>) -> Self {
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        BitPoly { limbs }
    }

    /// The bit pattern, when the degree fits in a single limb.
    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Index of the highest set bit; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.limbs.last()?;
        Some(self.limbs.len() * LIMB_BITS - 1 - last.leading_zeros() as usize)
    }

    /// Coefficient of x^i.
    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / LIMB_BITS)
            .is_some_and(|limb| limb >> (i % LIMB_BITS) & 1 == 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    /// Coefficientwise XOR; subtraction is the same operation.
    pub fn add(&self, other: &BitPoly) -> BitPoly {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (i, limb) in short.limbs.iter().enumerate() {
            limbs[i] ^= limb;
        }
        BitPoly::from_limbs(limbs)
    }

    /// The product self * x^k.
    pub fn shl(&self, k: usize) -> BitPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let limb_shift = k / LIMB_BITS;
        let bit_shift = k % LIMB_BITS;
        let mut limbs = vec![0u64; self.limbs.len() + limb_shift + 1];
        for (i, &limb) in self.limbs.iter().enumerate() {
            limbs[i + limb_shift] ^= limb << bit_shift;
            if bit_shift != 0 {
                limbs[i + limb_shift + 1] ^= limb >> (LIMB_BITS - bit_shift);
            }
        }
        BitPoly::from_limbs(limbs)
    }

    /// Carryless product.
    pub fn mul(&self, other: &BitPoly) -> BitPoly {
        if self.is_zero() || other.is_zero() {
            return BitPoly::zero();
        }
        let mut out = vec![0u64; self.limbs.len() + other.limbs.len()];
        for (i, &a) in self.limbs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.limbs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let (lo, hi) = clmul_words(a, b);
                out[i + j] ^= lo;
                out[i + j + 1] ^= hi;
            }
        }
        BitPoly::from_limbs(out)
    }

    /// The square, by spreading each coefficient bit to an even position.
    pub fn square(&self) -> BitPoly {
        let mut out = Vec::with_capacity(self.limbs.len() * 2);
        for &limb in &self.limbs {
            out.push(spread_u32(limb as u32));
            out.push(spread_u32((limb >> 32) as u32));
        }
        BitPoly::from_limbs(out)
    }

    /// Long division: returns (quotient, remainder) with
    /// `self = quotient * divisor + remainder` and deg r < deg d.
    pub fn divrem(&self, divisor: &BitPoly) -> Result<(BitPoly, BitPoly), Gf2PolyError> {
        let d_deg = divisor.degree().ok_or(Gf2PolyError::DivisionByZero)?;
        let Some(mut r_deg) = self.degree() else {
            return Ok((BitPoly::zero(), BitPoly::zero()));
        };
        if r_deg < d_deg {
            return Ok((BitPoly::zero(), self.clone()));
        }

        let mut rem = self.limbs.clone();
        let mut quot = vec![0u64; (r_deg - d_deg) / LIMB_BITS + 1];
        loop {
            let shift = r_deg - d_deg;
            quot[shift / LIMB_BITS] |= 1 << (shift % LIMB_BITS);
            xor_shifted(&mut rem, &divisor.limbs, shift);
            // The leading bit cancelled, so the next degree is below r_deg.
            match highest_set_bit_below(&rem, r_deg) {
                Some(deg) if deg >= d_deg => r_deg = deg,
                _ => break,
            }
        }
        Ok((BitPoly::from_limbs(quot), BitPoly::from_limbs(rem)))
    }

    /// Remainder of division by `divisor`.
    pub fn rem(&self, divisor: &BitPoly) -> Result<BitPoly, Gf2PolyError> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Greatest common divisor by Euclid's algorithm. Over this field
    /// every nonzero polynomial is monic, so no normalization is needed.
    pub fn gcd(&self, other: &BitPoly) -> Result<BitPoly, Gf2PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(Gf2PolyError::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Inverse modulo `modulus` by the extended Euclidean algorithm;
    /// `None` when `gcd(self, modulus) != 1`.
    pub fn inv_mod(&self, modulus: &BitPoly) -> Option<BitPoly> {
        if self.is_zero() || modulus.degree().unwrap_or(0) == 0 {
            return None;
        }
        let mut r0 = modulus.clone();
        let mut r1 = self.rem(modulus).ok()?;
        let mut t0 = BitPoly::zero();
        let mut t1 = BitPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let t = t0.add(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        if r0.is_one() {
            Some(t0.rem(modulus).expect("nonzero modulus"))
        } else {
            None
        }
    }

    /// Coefficient reversal over indices 0..=deg: x^deg * self(1/x).
    pub fn reciprocal(&self) -> Result<BitPoly, Gf2PolyError> {
        let deg = self.degree().ok_or(Gf2PolyError::ZeroPolynomial)?;
        let mut limbs = vec![0u64; deg / LIMB_BITS + 1];
        for i in 0..=deg {
            if self.coeff(i) {
                let j = deg - i;
                limbs[j / LIMB_BITS] |= 1 << (j % LIMB_BITS);
            }
        }
        Ok(BitPoly::from_limbs(limbs))
    }

    /// Whether the coefficient vector is palindromic (p* = p). The zero
    /// polynomial has no reciprocal and reports false.
    pub fn is_self_reciprocal(&self) -> bool {
        match self.reciprocal() {
            Ok(rev) => rev == *self,
            Err(_) => false,
        }
    }

    /// Parses the human text form ("x^6+x^3+1", "x", "1", "0").
    pub fn from_text(s: &str) -> Result<BitPoly, ParseBitPolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseBitPolyError::Empty);
        }
        if s == "0" {
            return Ok(BitPoly::zero());
        }
        let mut degrees = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let degree = match term {
                "1" => 0,
                "x" | "X" => 1,
                _ => {
                    let exp = term
                        .strip_prefix("x^")
                        .or_else(|| term.strip_prefix("X^"))
                        .ok_or_else(|| ParseBitPolyError::InvalidTerm(term.to_string()))?;
                    exp.parse::<usize>()
                        .map_err(|_| ParseBitPolyError::InvalidTerm(term.to_string()))?
                }
            };
            if degrees.contains(&degree) {
                return Err(ParseBitPolyError::DuplicateTerm(degree));
            }
            degrees.push(degree);
        }
        let top = *degrees.iter().max().expect("at least one term");
        let mut limbs = vec![0u64; top / LIMB_BITS + 1];
        for d in degrees {
            limbs[d / LIMB_BITS] |= 1 << (d % LIMB_BITS);
        }
        Ok(BitPoly::from_limbs(limbs))
    }

    /// Parses the hex form ("0x49").
    pub fn from_hex(s: &str) -> Result<BitPoly, ParseBitPolyError> {
        let s = s.trim();
        let digits = s
            .strip_prefix("0x")
            .or_else(|| s.strip_prefix("0X"))
            .ok_or_else(|| ParseBitPolyError::InvalidHex(s.to_string()))?;
        if digits.is_empty() {
            return Err(ParseBitPolyError::InvalidHex(s.to_string()));
        }
        let mut limbs = Vec::new();
        for (i, c) in digits.bytes().rev().enumerate() {
            let v = match c {
                b'0'..=b'9' => c - b'0',
                b'a'..=b'f' => c - b'a' + 10,
                b'A'..=b'F' => c - b'A' + 10,
                _ => return Err(ParseBitPolyError::InvalidHex(s.to_string())),
            } as u64;
            if i / 16 == limbs.len() {
                limbs.push(0);
            }
            limbs[i / 16] |= v << (4 * (i % 16));
        }
        Ok(BitPoly::from_limbs(limbs))
    }

    /// The hex form, lowercase, "0x0" for the zero polynomial.
    pub fn to_hex_string(&self) -> String {
        if self.is_zero() {
            return "0x0".to_string();
        }
        let mut out = String::from("0x");
        let mut first = true;
        for &limb in self.limbs.iter().rev() {
            if first {
                out.push_str(&format!("{limb:x}"));
                first = false;
            } else {
                out.push_str(&format!("{limb:016x}"));
            }
        }
        out
    }
}

/// x^(2^k) mod f, by k squarings each reduced modulo f.
///
/// Requires deg f >= 1.
pub fn frobenius_power(k: usize, f: &BitPoly) -> BitPoly {
    assert!(
        f.degree().is_some_and(|d| d >= 1),
        "frobenius_power requires a modulus of degree >= 1"
    );
    let mut acc = BitPoly::x().rem(f).expect("nonzero modulus");
    for _ in 0..k {
        acc = acc.square().rem(f).expect("nonzero modulus");
    }
    acc
}

/// (a * b) mod f.
pub fn mod_mul(a: &BitPoly, b: &BitPoly, f: &BitPoly) -> BitPoly {
    a.mul(b).rem(f).expect("nonzero modulus")
}

/// a^2 mod f.
pub fn mod_square(a: &BitPoly, f: &BitPoly) -> BitPoly {
    a.square().rem(f).expect("nonzero modulus")
}

/// XORs `src << shift` (in bits) into `dst`. `dst` must be long enough.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let limb_shift = shift / LIMB_BITS;
    let bit_shift = shift % LIMB_BITS;
    if bit_shift == 0 {
        for (i, &limb) in src.iter().enumerate() {
            dst[i + limb_shift] ^= limb;
        }
    } else {
        for (i, &limb) in src.iter().enumerate() {
            dst[i + limb_shift] ^= limb << bit_shift;
            let hi = limb >> (LIMB_BITS - bit_shift);
            if let Some(slot) = dst.get_mut(i + limb_shift + 1) {
                *slot ^= hi;
            } else {
                debug_assert_eq!(hi, 0);
            }
        }
    }
}

/// Highest set bit with index <= bound, or None.
fn highest_set_bit_below(limbs: &[u64], bound: usize) -> Option<usize> {
    let mut idx = (bound / LIMB_BITS).min(limbs.len().checked_sub(1)?);
    let mut mask = if idx == bound / LIMB_BITS && bound % LIMB_BITS != LIMB_BITS - 1 {
        (1u64 << (bound % LIMB_BITS + 1)) - 1
    } else {
        u64::MAX
    };
    loop {
        let limb = limbs[idx] & mask;
        if limb != 0 {
            return Some(idx * LIMB_BITS + LIMB_BITS - 1 - limb.leading_zeros() as usize);
        }
        if idx == 0 {
            return None;
        }
        idx -= 1;
        mask = u64::MAX;
    }
}

/// Spreads the 32 bits of x to the even bit positions of a u64.
fn spread_u32(x: u32) -> u64 {
    let mut v = x as u64;
    v = (v | (v << 16)) & 0x0000_ffff_0000_ffff;
    v = (v | (v << 8)) & 0x00ff_00ff_00ff_00ff;
    v = (v | (v << 4)) & 0x0f0f_0f0f_0f0f_0f0f;
    v = (v | (v << 2)) & 0x3333_3333_3333_3333;
    v = (v | (v << 1)) & 0x5555_5555_5555_5555;
    v
}

/// 64x64 -> 128 carryless product as (low, high) words.
fn clmul_words(a: u64, b: u64) -> (u64, u64) {
    #[cfg(all(feature = "clmul", target_arch = "x86_64"))]
    {
        if clmul_available() {
            // Safety: guarded by runtime detection of pclmulqdq.
            return unsafe { clmul_words_pclmul(a, b) };
        }
    }
    clmul_words_portable(a, b)
}

fn clmul_words_portable(a: u64, b: u64) -> (u64, u64) {
    let mut lo = 0u64;
    let mut hi = 0u64;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        rest &= rest - 1;
        lo ^= a << i;
        if i != 0 {
            hi ^= a >> (64 - i);
        }
    }
    (lo, hi)
}

#[cfg(all(feature = "clmul", target_arch = "x86_64"))]
fn clmul_available() -> bool {
    static DETECTED: std::sync::OnceLock<bool> = std::sync::OnceLock::new();
    *DETECTED.get_or_init(|| std::arch::is_x86_feature_detected!("pclmulqdq"))
}

#[cfg(all(feature = "clmul", target_arch = "x86_64"))]
#[target_feature(enable = "pclmulqdq")]
unsafe fn clmul_words_pclmul(a: u64, b: u64) -> (u64, u64) {
    use std::arch::x86_64::*;
    let va = _mm_set_epi64x(0, a as i64);
    let vb = _mm_set_epi64x(0, b as i64);
    let prod = _mm_clmulepi64_si128(va, vb, 0x00);
    let lo = _mm_cvtsi128_si64(prod) as u64;
    let hi = _mm_cvtsi128_si64(_mm_srli_si128(prod, 8)) as u64;
    (lo, hi)
}

impl fmt::Display for BitPoly {
    /// Human text form: monomials in strictly decreasing degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=deg).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for BitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitPoly({})", self.to_hex_string())
    }
}

impl FromStr for BitPoly {
    type Err = ParseBitPolyError;

    /// Accepts both encodings: hex with a "0x" prefix, text otherwise.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.starts_with("0x") || t.starts_with("0X") {
            BitPoly::from_hex(t)
        } else {
            BitPoly::from_text(t)
        }
    }
}

impl Ord for BitPoly {
    /// Integer order on the bit vector, which is also the order of the
    /// hex encodings ("hex-lexicographic" for the canonical factor choice).
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for BitPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &BitPoly {
    type Output = BitPoly;
    fn add(self, rhs: &BitPoly) -> BitPoly {
        BitPoly::add(self, rhs)
    }
}

impl std::ops::Mul for &BitPoly {
    type Output = BitPoly;
    fn mul(self, rhs: &BitPoly) -> BitPoly {
        BitPoly::mul(self, rhs)
    }
}
