use std::sync::Arc;

use super::laurent::LaurentPoly;
use super::ring::Ring;
use super::PolyError;

/// (x; q)_n = prod_{i<n} (1 - x q^i).
pub fn q_pochhammer(x: &LaurentPoly, q: &LaurentPoly, n: u32) -> LaurentPoly {
    let ring = x.ring();
    let one = LaurentPoly::one(ring);
    let mut acc = one.clone();
    let mut xq = x.clone();
    for _ in 0..n {
        acc = &acc * &(&one - &xq);
        xq = &xq * q;
    }
    acc
}

/// Gaussian binomial [k choose m] in the variable `q`, by the Pascal recurrence.
/// Returns zero when m > k.
pub fn q_binomial(ring: &Arc<Ring>, k: u32, m: u32, q: &str) -> Result<LaurentPoly, PolyError> {
    if m > k {
        return Ok(LaurentPoly::zero(ring));
    }
    let qv = LaurentPoly::var(ring, q)?;
    // row[j] = [i choose j]
    let mut row = vec![LaurentPoly::one(ring)];
    for i in 1..=k {
        let mut next = Vec::with_capacity(i as usize + 1);
        for j in 0..=i {
            let left = if j >= 1 { row[j as usize - 1].clone() } else { LaurentPoly::zero(ring) };
            let right = if j < i { &qv.pow(j) * &row[j as usize] } else { LaurentPoly::zero(ring) };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row[m as usize].clone())
}

/// q-multinomial (q;q)_k / ((q;q)_{k-m-n} (q;q)_m (q;q)_n), by exact division.
/// Returns zero when m + n > k.
pub fn q_multinomial(ring: &Arc<Ring>, k: u32, m: u32, n: u32, q: &str) -> Result<LaurentPoly, PolyError> {
    if m + n > k {
        return Ok(LaurentPoly::zero(ring));
    }
    let qv = LaurentPoly::var(ring, q)?;
    let fac = |j: u32| q_pochhammer(&qv, &qv, j);
    let den = &(&fac(k - m - n) * &fac(m)) * &fac(n);
    fac(k).div_exact(&den)
}
