//! GF(p^k) arithmetic with elements packed as base-p digit vectors.
//!
//! The reduction polynomial is found by exhaustive search over monic
//! degree-k polynomials (trial factorization); no hardcoded tables, so a
//! field is reproducible from (p, k) alone.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the budget of 1024")]
    TooLarge(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
}

/// The field GF(p^k). Elements are `u32` values in `0..q` encoding
/// coefficient vectors in base p (least significant digit = constant term).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic irreducible of degree k over GF(p), low-to-high coefficients.
    reduction: Vec<u32>,
}

impl FiniteField {
    pub fn new(p: u32, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= 1024).ok_or(
            FieldError::TooLarge((p as u64).saturating_pow(k)),
        )? as u32;
        let reduction = find_irreducible(p, k).expect("an irreducible of every degree exists");
        Ok(FiniteField { p, k, q, reduction })
    }

    /// Field of order q, for q a prime power.
    pub fn of_order(q: u32) -> Result<Self, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        FiniteField::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn reduction_polynomial(&self) -> &[u32] {
        &self.reduction
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn digits(&self, x: u32) -> Vec<u32> {
        let mut out = vec![0; self.k as usize];
        let mut x = x;
        for digit in &mut out {
            *digit = x % self.p;
            x /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &digit| acc * self.p + digit)
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.digits(x), self.digits(y));
        let sum: Vec<u32> = a.iter().zip(&b).map(|(u, v)| (u + v) % self.p).collect();
        self.pack(&sum)
    }

    pub fn neg(&self, x: u32) -> u32 {
        let digits: Vec<u32> = self
            .digits(x)
            .iter()
            .map(|&u| (self.p - u) % self.p)
            .collect();
        self.pack(&digits)
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.digits(x), self.digits(y));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &u) in a.iter().enumerate() {
            for (j, &v) in b.iter().enumerate() {
                prod[i + j] += u as u64 * v as u64;
            }
        }
        // Reduce modulo the monic reduction polynomial.
        for i in (k..prod.len()).rev() {
            let coeff = prod[i] % self.p as u64;
            if coeff != 0 {
                // x^i = x^(i-k) * (-(reduction minus leading term))
                for j in 0..k {
                    let r = self.reduction[j] as u64;
                    prod[i - k + j] += coeff * ((self.p as u64 - r % self.p as u64) % self.p as u64);
                }
            }
            prod[i] = 0;
        }
        let digits: Vec<u32> = prod[..k].iter().map(|&v| (v % self.p as u64) as u32).collect();
        self.pack(&digits)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: u32) -> Option<u32> {
        if x == 0 {
            return None;
        }
        Some(self.pow(x, self.q - 2))
    }

    pub fn pow(&self, x: u32, mut e: u32) -> u32 {
        let mut base = x;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, k)` with `q = p^k`, `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut k = 0;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

// -- polynomial helpers over GF(p), low-to-high coefficient vectors --------

fn poly_rem(mut num: Vec<u32>, den: &[u32], p: u32) -> Vec<u32> {
    let dd = den.len() - 1;
    let lead_inv = mod_inv(den[dd], p);
    while num.len() > dd {
        let nd = num.len() - 1;
        let factor = num[nd] * lead_inv % p;
        if factor != 0 {
            let shift = nd - dd;
            for (i, &c) in den.iter().enumerate() {
                let sub = factor * c % p;
                num[shift + i] = (num[shift + i] + p - sub) % p;
            }
        }
        debug_assert_eq!(num[nd], 0);
        num.pop();
    }
    num
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and a != 0 mod p.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(base: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = base as u64;
    let m = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u32
}

fn is_zero_poly(poly: &[u32]) -> bool {
    poly.iter().all(|&c| c == 0)
}

/// Monic polynomials of the given degree, as low-to-high vectors.
fn monic_polys(p: u32, degree: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(degree as usize + 1);
        for _ in 0..degree {
            coeffs.push((idx % p as u64) as u32);
            idx /= p as u64;
        }
        coeffs.push(1);
        coeffs
    })
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let degree = poly.len() - 1;
    for div_degree in 1..=degree / 2 {
        for div in monic_polys(p, div_degree as u32) {
            if is_zero_poly(&poly_rem(poly.to_vec(), &div, p)) {
                return false;
            }
        }
    }
    true
}

fn find_irreducible(p: u32, k: u32) -> Option<Vec<u32>> {
    monic_polys(p, k).find(|poly| is_irreducible(poly, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_is_xor() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.inv(1), Some(1));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn gf4_uses_x2_x_1() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.reduction_polynomial(), &[1, 1, 1]);
        // Element 2 encodes x; x*x = x + 1 which packs to 3.
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(FiniteField::new(2, 0), Err(FieldError::ZeroDegree));
        assert_eq!(FiniteField::new(2, 11), Err(FieldError::TooLarge(2048)));
        assert_eq!(FiniteField::of_order(6), Err(FieldError::NotPrimePower(6)));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    /// Exhaustive field-axiom check for every prime power q <= 64.
    #[test]
    fn field_axioms_hold_exhaustively() {
        for q in 2..=64u32 {
            let Some((p, k)) = prime_power(q) else { continue };
            let f = FiniteField::new(p, k).unwrap();
            assert_eq!(f.order(), q);
            for x in f.elements() {
                assert_eq!(f.add(x, 0), x);
                assert_eq!(f.mul(x, 1), x);
                assert_eq!(f.add(x, f.neg(x)), 0);
                if x != 0 {
                    let inv = f.inv(x).unwrap();
                    assert_eq!(f.mul(x, inv), 1, "q={q} x={x}");
                }
                for y in f.elements() {
                    assert_eq!(f.add(x, y), f.add(y, x));
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in f.elements() {
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn reduction_polynomial_is_irreducible() {
        for (p, k) in [(2, 5), (3, 3), (5, 2), (2, 10)] {
            let f = FiniteField::new(p, k).unwrap();
            assert!(is_irreducible(f.reduction_polynomial(), p));
        }
    }
}
