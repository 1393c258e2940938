//! Exact elements of cyclotomic fields `Q(zeta_n)`.
//!
//! An element is stored by its coordinates in the power basis
//! `1, zeta, ..., zeta^(phi(n)-1)`. Conductor 1 is the field of rationals.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

pub type Rational = BigRational;

/// Reduction data for one cyclotomic field.
#[derive(Debug)]
struct Field {
    conductor: u32,
    degree: usize,
    /// `powers[j]` holds the coordinates of `zeta^j` for `j < conductor`.
    powers: Vec<Vec<i64>>,
}

impl Field {
    fn new(conductor: u32) -> Field {
        let phi = cyclotomic_polynomial(conductor);
        let degree = phi.len() - 1;
        let n = conductor as usize;
        let mut powers = Vec::with_capacity(n);
        let mut cur = vec![0i64; degree];
        if degree > 0 {
            cur[0] = 1;
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic minimal polynomial
            let top = cur[degree - 1];
            for k in (1..degree).rev() {
                cur[k] = cur[k - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for k in 0..degree {
                    cur[k] -= top * phi[k];
                }
            }
        }
        Field { conductor, degree, powers }
    }
}

/// Integer coefficients (low degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "conductor must be positive");
    // x^n - 1 divided by every Phi_d for proper divisors d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = exact_div(&num, &den);
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        q[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    q
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// An exact scalar in `Q(zeta_conductor)`, kept in canonical reduced form.
#[derive(Clone)]
pub struct CycScalar {
    field: Option<Arc<Field>>,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn zero() -> CycScalar {
        CycScalar::rational(Rational::zero())
    }

    pub fn one() -> CycScalar {
        CycScalar::rational(Rational::one())
    }

    pub fn from_int(v: i64) -> CycScalar {
        CycScalar::rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_frac(p: i64, q: i64) -> CycScalar {
        CycScalar::rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn rational(r: Rational) -> CycScalar {
        CycScalar { field: None, coeffs: vec![r] }
    }

    /// `zeta_n^k`.
    pub fn zeta_pow(conductor: u32, k: i64) -> CycScalar {
        if conductor == 1 {
            return CycScalar::one();
        }
        let field = Arc::new(Field::new(conductor));
        let e = k.rem_euclid(conductor as i64) as usize;
        let coeffs = field.powers[e].iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect();
        CycScalar { field: Some(field), coeffs }
    }

    pub fn zeta(conductor: u32) -> CycScalar {
        CycScalar::zeta_pow(conductor, 1)
    }

    /// Builds an element from power-basis coordinates. Any length up to the
    /// conductor is accepted and reduced modulo the cyclotomic polynomial.
    pub fn from_power_coeffs(conductor: u32, coeffs: &[Rational]) -> Result<CycScalar, ExactError> {
        if conductor == 0 {
            return Err(ExactError::InvalidConductor(0));
        }
        if coeffs.len() > conductor as usize {
            return Err(ExactError::TooManyCoefficients { conductor, given: coeffs.len() });
        }
        if conductor == 1 {
            let c = coeffs.first().cloned().unwrap_or_else(Rational::zero);
            return Ok(CycScalar::rational(c));
        }
        let field = Arc::new(Field::new(conductor));
        let mut out = vec![Rational::zero(); field.degree];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in out.iter_mut().zip(field.powers[j].iter()) {
                if p != 0 {
                    *slot += c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        Ok(CycScalar { field: Some(field), coeffs: out })
    }

    pub fn conductor(&self) -> u32 {
        self.field.as_ref().map_or(1, |f| f.conductor)
    }

    /// Power-basis coordinates; the length is `euler_phi(conductor)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some(r)` when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Embeds into `Q(zeta_target)`; `target` must be a multiple of the conductor.
    pub fn embed(&self, target: u32) -> Result<CycScalar, ExactError> {
        let n = self.conductor();
        if target == 0 || !target.is_multiple_of(n) {
            return Err(ExactError::NotAMultiple { from: n, to: target });
        }
        if target == n {
            return Ok(self.clone());
        }
        if target == 1 {
            return Ok(self.clone());
        }
        let field = Arc::new(Field::new(target));
        let step = (target / n) as usize;
        let mut out = vec![Rational::zero(); field.degree];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pw = &field.powers[(j * step) % target as usize];
            for (slot, &p) in out.iter_mut().zip(pw.iter()) {
                if p != 0 {
                    *slot += c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        Ok(CycScalar { field: Some(field), coeffs: out })
    }

    /// Brings two operands into a common field. Rationals embed anywhere;
    /// two distinct non-trivial conductors are rejected.
    fn align<'a>(a: &'a CycScalar, b: &'a CycScalar) -> Result<(Option<Arc<Field>>, usize), ExactError> {
        match (&a.field, &b.field) {
            (None, None) => Ok((None, 1)),
            (Some(f), None) | (None, Some(f)) => Ok((Some(f.clone()), f.degree)),
            (Some(f), Some(g)) => {
                if f.conductor == g.conductor {
                    Ok((Some(f.clone()), f.degree))
                } else {
                    Err(ExactError::ConductorMismatch(f.conductor, g.conductor))
                }
            }
        }
    }

    /// Coefficient `k`, treating missing trailing slots as zero.
    fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    fn combine(&self, other: &CycScalar, sub: bool) -> Result<CycScalar, ExactError> {
        let (field, degree) = CycScalar::align(self, other)?;
        let coeffs = (0..degree)
            .map(|k| match (self.coeff(k), other.coeff(k)) {
                (Some(x), Some(y)) => {
                    if sub {
                        x - y
                    } else {
                        x + y
                    }
                }
                (Some(x), None) => x.clone(),
                (None, Some(y)) => {
                    if sub {
                        -y
                    } else {
                        y.clone()
                    }
                }
                (None, None) => Rational::zero(),
            })
            .collect();
        Ok(CycScalar { field, coeffs })
    }

    pub fn try_add(&self, other: &CycScalar) -> Result<CycScalar, ExactError> {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &CycScalar) -> Result<CycScalar, ExactError> {
        self.combine(other, true)
    }

    pub fn try_mul(&self, other: &CycScalar) -> Result<CycScalar, ExactError> {
        let (field, degree) = CycScalar::align(self, other)?;
        // fast paths for rational factors
        if let Some(r) = other.as_rational_fast() {
            return Ok(self.scale_rational(r, field, degree));
        }
        if let Some(r) = self.as_rational_fast() {
            return Ok(other.scale_rational(r, field, degree));
        }
        let field = field.expect("non-rational operands carry a field");
        let n = field.conductor as usize;
        let mut out = vec![Rational::zero(); degree];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let prod = x * y;
                let pw = &field.powers[(i + j) % n];
                for (slot, &p) in out.iter_mut().zip(pw.iter()) {
                    if p == 1 {
                        *slot += &prod;
                    } else if p == -1 {
                        *slot -= &prod;
                    } else if p != 0 {
                        *slot += &prod * Rational::from_integer(BigInt::from(p));
                    }
                }
            }
        }
        Ok(CycScalar { field: Some(field), coeffs: out })
    }

    fn as_rational_fast(&self) -> Option<&Rational> {
        if self.field.is_none() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn scale_rational(&self, r: &Rational, field: Option<Arc<Field>>, degree: usize) -> CycScalar {
        let coeffs = (0..degree).map(|k| self.coeff(k).map_or_else(Rational::zero, |c| c * r)).collect();
        CycScalar { field, coeffs }
    }

    /// Multiplicative inverse, computed by solving `self * x = 1` over the rationals.
    pub fn inv(&self) -> Result<CycScalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let field = match &self.field {
            None => return Ok(CycScalar::rational(self.coeffs[0].recip())),
            Some(f) => f.clone(),
        };
        let d = field.degree;
        let n = field.conductor as usize;
        // column j holds the coordinates of self * zeta^j
        let mut m = vec![vec![Rational::zero(); d + 1]; d];
        for j in 0..d {
            for (i, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (row, &p) in field.powers[(i + j) % n].iter().enumerate() {
                    if p != 0 {
                        m[row][j] += c * Rational::from_integer(BigInt::from(p));
                    }
                }
            }
        }
        m[0][d] = Rational::one();
        let sol = solve_rational_square(m).ok_or(ExactError::DivisionByZero)?;
        Ok(CycScalar { field: Some(field), coeffs: sol })
    }

    pub fn pow(&self, mut e: u32) -> CycScalar {
        let mut base = self.clone();
        let mut acc = CycScalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Field conjugation `zeta -> zeta^-1` (complex conjugation).
    pub fn conj(&self) -> CycScalar {
        let field = match &self.field {
            None => return self.clone(),
            Some(f) => f.clone(),
        };
        let n = field.conductor as usize;
        let mut out = vec![Rational::zero(); field.degree];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &p) in out.iter_mut().zip(field.powers[(n - j) % n].iter()) {
                if p != 0 {
                    *slot += c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        CycScalar { field: Some(field), coeffs: out }
    }
}

/// Gaussian elimination on an augmented square system `[A | b]`.
fn solve_rational_square(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let d = m.len();
    for col in 0..d {
        let piv = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for k in col..=d {
            m[col][k] = &m[col][k] * &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=d {
                    let t = &f * &m[col][k];
                    m[r][k] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[d].clone()).collect())
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &CycScalar) -> bool {
        let (a, b) = (self.conductor(), other.conductor());
        if a == b || a == 1 || b == 1 {
            let degree = self.coeffs.len().max(other.coeffs.len());
            return (0..degree).all(|k| match (self.coeff(k), other.coeff(k)) {
                (Some(x), Some(y)) => x == y,
                (Some(x), None) | (None, Some(x)) => x.is_zero(),
                (None, None) => true,
            });
        }
        let l = a.lcm(&b);
        match (self.embed(l), other.embed(l)) {
            (Ok(x), Ok(y)) => x.coeffs == y.coeffs,
            _ => false,
        }
    }
}

impl Eq for CycScalar {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                self.$checked(rhs).expect("scalar operands live in incompatible fields")
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl From<i64> for CycScalar {
    fn from(v: i64) -> CycScalar {
        CycScalar::from_int(v)
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats in literal syntax: `p`, `p/q`, or `cyc(n)[c0,c1,...]`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return fmt_rational(r, f);
        }
        write!(f, "cyc({})[", self.conductor())?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            fmt_rational(c, f)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(alloc::string::String::from(s));
    let parse_int = |t: &str| -> Result<BigInt, ExactError> {
        let t = t.trim();
        let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            if q.is_negative() && q.abs().is_one() {
                return Ok(Rational::from_integer(-parse_int(p)?));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
    }
}

impl core::str::FromStr for CycScalar {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<CycScalar, ExactError> {
        let t = s.trim();
        let Some(rest) = t.strip_prefix("cyc(") else {
            return parse_rational(t).map(CycScalar::rational);
        };
        let bad = || ExactError::Parse(alloc::string::String::from(t));
        let (n, rest) = rest.split_once(')').ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let body = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let coeffs = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?
        };
        CycScalar::from_power_coeffs(n, &coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in 1..30 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn defining_relations() {
        let i = CycScalar::zeta(4);
        assert_eq!(&i * &i, CycScalar::from_int(-1));
        let w = CycScalar::zeta(3);
        let s = CycScalar::one() + w.clone() + &w * &w;
        assert!(s.is_zero());
        assert_eq!(i.inv().unwrap(), -&i);
        assert_eq!(CycScalar::from_int(0).inv(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn inverse_times_self_is_one() {
        let x: CycScalar = "cyc(12)[1,2,-3,1/2]".parse().unwrap();
        assert_eq!(&x.inv().unwrap() * &x, CycScalar::one());
    }

    #[test]
    fn embedding_commutes_with_arithmetic() {
        let a = CycScalar::zeta(4);
        let b: CycScalar = "cyc(4)[2,-1/3]".parse().unwrap();
        let ab = (&a * &b).embed(12).unwrap();
        let ab2 = &a.embed(12).unwrap() * &b.embed(12).unwrap();
        assert_eq!(ab, ab2);
        assert_eq!(a.embed(8).unwrap().pow(2), CycScalar::from_int(-1));
        assert!(a.embed(6).is_err());
        // zeta_3 is zeta_6^2
        assert_eq!(CycScalar::zeta(3).embed(6).unwrap(), CycScalar::zeta_pow(6, 2));
        assert_eq!(CycScalar::zeta(3), CycScalar::zeta_pow(6, 2));
    }

    #[test]
    fn incompatible_conductors_are_rejected() {
        let a = CycScalar::zeta(4);
        let b = CycScalar::zeta(3);
        assert_eq!(a.try_add(&b), Err(ExactError::ConductorMismatch(4, 3)));
        assert!(a.try_mul(&CycScalar::from_int(3)).is_ok());
    }

    #[test]
    fn literal_roundtrip() {
        for lit in ["0", "-7", "3/4", "cyc(4)[0,1]", "cyc(3)[1/2,-5]", "cyc(5)[0,0,0,1]"] {
            let x: CycScalar = lit.parse().unwrap();
            assert_eq!(x.to_string(), lit);
        }
        let red: CycScalar = "cyc(3)[0,0,1]".parse().unwrap();
        assert_eq!(red.to_string(), "cyc(3)[-1,-1]");
        assert_eq!("cyc(4)[5]".parse::<CycScalar>().unwrap().to_string(), "5");
        assert!("1/0".parse::<CycScalar>().is_err());
        assert!("cyc(4)[1,2,3,4,5]".parse::<CycScalar>().is_err());
        assert!("abc".parse::<CycScalar>().is_err());
        assert!("cyc(0)[1]".parse::<CycScalar>().is_err());
    }

    #[test]
    fn conjugation() {
        let i = CycScalar::zeta(4);
        assert_eq!(i.conj(), -&i);
        let w = CycScalar::zeta(3);
        assert_eq!(&w.conj() * &w, CycScalar::one());
    }
}
