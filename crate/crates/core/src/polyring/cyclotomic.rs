use std::fmt;

use super::PolyError;

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic order must be positive");
    // x^n - 1 divided by every Phi_d with d a proper divisor of n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = div_monic(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Reduce an integer polynomial in w modulo Phi_N in place; returns the canonical coefficient vector.
pub(crate) fn reduce_mod_phi(mut v: Vec<i64>, phi: &[i64]) -> Vec<i64> {
    let deg = phi.len() - 1;
    while v.len() > deg {
        let c = v.pop().unwrap();
        if c != 0 {
            let base = v.len() - deg;
            for (j, &p) in phi[..deg].iter().enumerate() {
                v[base + j] = v[base + j]
                    .checked_sub(c.checked_mul(p).expect("coefficient overflow"))
                    .expect("coefficient overflow");
            }
        }
    }
    v.resize(deg, 0);
    v
}

/// An element of Z[w]/(Phi_N(w)), w a primitive N-th root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    order: u32,
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn from_coeffs(order: u32, coeffs: Vec<i64>) -> Self {
        let phi = cyclotomic_poly(order);
        CycInt { order, coeffs: reduce_mod_phi(coeffs, &phi) }
    }

    pub fn from_int(order: u32, c: i64) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    pub fn zero(order: u32) -> Self {
        Self::from_int(order, 0)
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    /// The distinguished primitive root w.
    pub fn omega(order: u32) -> Self {
        Self::omega_pow(order, 1)
    }

    pub fn omega_pow(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        let mut v = vec![0i64; k + 1];
        v[k] = 1;
        Self::from_coeffs(order, v)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Projection to Z, defined when the value is a rational integer.
    pub fn to_int(&self) -> Option<i64> {
        if self.coeffs.iter().skip(1).all(|&c| c == 0) {
            Some(self.coeffs.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.order != other.order {
            return Err(PolyError::RingMismatch(format!(
                "Z[w,{}] vs Z[w,{}]",
                self.order, other.order
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).expect("coefficient overflow"))
            .collect();
        Ok(CycInt { order: self.order, coeffs })
    }

    pub fn neg(&self) -> Self {
        CycInt { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        if self.coeffs.is_empty() {
            return Ok(self.clone());
        }
        let mut v = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j]
                    .checked_add(a.checked_mul(*b).expect("coefficient overflow"))
                    .expect("coefficient overflow");
            }
        }
        Ok(Self::from_coeffs(self.order, v))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self).unwrap();
        }
        acc
    }

    /// If the value is +-w^k, returns (negated, k).
    pub fn as_signed_root(&self) -> Option<(bool, u32)> {
        for k in 0..self.order {
            let r = Self::omega_pow(self.order, k as i64);
            if &r == self {
                return Some((false, k));
            }
            if r.neg() == *self {
                return Some((true, k));
            }
        }
        None
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let body = match k {
                0 => c.abs().to_string(),
                1 if c.abs() == 1 => "w".to_string(),
                1 => format!("{}*w", c.abs()),
                _ if c.abs() == 1 => format!("w^{}", k),
                _ => format!("{}*w^{}", c.abs(), k),
            };
            match (first, c < 0) {
                (true, true) => write!(f, "-{}", body)?,
                (true, false) => write!(f, "{}", body)?,
                (false, true) => write!(f, " - {}", body)?,
                (false, false) => write!(f, " + {}", body)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(5), 4);
    }

    #[test]
    fn omega_has_exact_order() {
        for n in 1..=12u32 {
            let w = CycInt::omega(n);
            assert_eq!(w.pow(n), CycInt::one(n));
            for k in 1..n {
                assert_ne!(w.pow(k), CycInt::one(n), "order {} power {}", n, k);
            }
        }
    }

    #[test]
    fn orders_one_and_two_are_integers() {
        assert_eq!(CycInt::omega(1).to_int(), Some(1));
        assert_eq!(CycInt::omega(2).to_int(), Some(-1));
        let a = CycInt::from_int(2, 7);
        assert_eq!(a.mul(&CycInt::omega(2)).unwrap().to_int(), Some(-7));
    }

    #[test]
    fn mismatched_orders_rejected() {
        assert!(CycInt::one(3).add(&CycInt::one(4)).is_err());
    }

    #[test]
    fn signed_root_detection() {
        let w = CycInt::omega(3);
        assert_eq!(w.pow(2).as_signed_root(), Some((false, 2)));
        assert_eq!(w.neg().as_signed_root(), Some((true, 1)));
        let two = CycInt::from_int(3, 2);
        assert_eq!(two.as_signed_root(), None);
    }
}
