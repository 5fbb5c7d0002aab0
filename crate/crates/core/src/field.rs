//! Small finite fields GF(p^m), p^m <= 64, with elements encoded as integers
//! 0..p^m-1 in the polynomial basis (base-p digits = coefficients).

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported maximum 64")]
    TooLarge(u64),
    #[error("modulus {0:?} is not a degree-{1} irreducible polynomial over GF({2})")]
    BadModulus(Vec<u64>, usize, u64),
    #[error("no built-in modulus for GF({0}^{1})")]
    NoDefaultModulus(u64, usize),
    #[error("{0} is not a prime power <= 64")]
    NotPrimePower(u64),
}

/// A finite field of order q = p^m <= 64 with full multiplication and
/// inversion tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteField {
    pub p: u64,
    pub m: usize,
    /// Modulus coefficients, constant term first, length m+1; empty for m=1.
    pub modulus: Vec<u64>,
    #[serde(skip)]
    add: Vec<u16>,
    #[serde(skip)]
    mul: Vec<u16>,
    #[serde(skip)]
    inv: Vec<u16>,
}

fn is_prime(n: u64) -> bool {
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

/// Default irreducible moduli (constant term first) for the prime powers up
/// to 64.
fn default_modulus(p: u64, m: usize) -> Option<Vec<u64>> {
    match (p, m) {
        (2, 2) => Some(vec![1, 1, 1]),          // x^2+x+1
        (2, 3) => Some(vec![1, 1, 0, 1]),       // x^3+x+1
        (2, 4) => Some(vec![1, 1, 0, 0, 1]),    // x^4+x+1
        (2, 5) => Some(vec![1, 0, 1, 0, 0, 1]), // x^5+x^2+1
        (2, 6) => Some(vec![1, 1, 0, 0, 0, 0, 1]), // x^6+x+1
        (3, 2) => Some(vec![1, 0, 1]),          // x^2+1
        (3, 3) => Some(vec![1, 2, 0, 1]),       // x^3+2x+1
        (5, 2) => Some(vec![2, 0, 1]),          // x^2+2
        (7, 2) => Some(vec![1, 0, 1]),          // x^2+1
        _ => None,
    }
}

impl FiniteField {
    /// Prime field GF(p).
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::extension(p, 1, None)
    }

    /// GF(p^m); for m > 1 a modulus may be supplied, otherwise the built-in
    /// table is used. The modulus is verified irreducible by exhaustive
    /// search for factors of degree <= m/2.
    pub fn extension(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = p.checked_pow(m as u32).filter(|&q| q <= 64);
        let q = q.ok_or(FieldError::TooLarge(p.saturating_pow(m as u32)))?;
        let modulus = if m == 1 {
            Vec::new()
        } else {
            let md = match modulus {
                Some(md) => md,
                None => default_modulus(p, m).ok_or(FieldError::NoDefaultModulus(p, m))?,
            };
            if md.len() != m + 1 || md[m] % p == 0 || !poly_irreducible(&md, p) {
                return Err(FieldError::BadModulus(md, m, p));
            }
            md
        };

        let q = q as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = add_elems(a as u64, b as u64, p, m) as u16;
                mul[a * q + b] = mul_elems(a as u64, b as u64, p, m, &modulus) as u16;
            }
        }
        let mut inv = vec![0u16; q];
        for a in 1..q {
            let b = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .expect("field element has an inverse");
            inv[a] = b as u16;
        }
        Ok(FiniteField {
            p,
            m,
            modulus,
            add,
            mul,
            inv,
        })
    }

    /// GF(q) for a prime power q, using built-in moduli.
    pub fn of_order(q: u64) -> Result<Self, FieldError> {
        for p in 2..=q {
            if !is_prime(p) {
                continue;
            }
            let mut pk = p;
            let mut m = 1;
            while pk < q {
                pk *= p;
                m += 1;
            }
            if pk == q {
                return Self::extension(p, m, None);
            }
        }
        Err(FieldError::NotPrimePower(q))
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.m as u32)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add[a as usize * self.order() as usize + b as usize] as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u64) -> u64 {
        // negate each base-p digit
        let mut out = 0;
        let mut place = 1;
        let mut x = a;
        for _ in 0..self.m {
            let d = x % self.p;
            out += ((self.p - d) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul[a as usize * self.order() as usize + b as usize] as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize] as u64
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order()
    }
}

fn add_elems(a: u64, b: u64, p: u64, m: usize) -> u64 {
    let mut out = 0;
    let mut place = 1;
    let (mut a, mut b) = (a, b);
    for _ in 0..m {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn mul_elems(a: u64, b: u64, p: u64, m: usize, modulus: &[u64]) -> u64 {
    if m == 1 {
        return a * b % p;
    }
    let digits = |mut x: u64| -> Vec<u64> {
        (0..m)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let da = digits(a);
    let db = digits(b);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce mod the monic-ized modulus
    let lead_inv = mod_inverse(modulus[m] % p, p);
    for i in (m..prod.len()).rev() {
        if prod[i] == 0 {
            continue;
        }
        let f = prod[i] * lead_inv % p;
        for (j, &mc) in modulus.iter().enumerate() {
            let idx = i - m + j;
            prod[idx] = (prod[idx] + p * p - f * (mc % p) % p) % p;
        }
    }
    prod[..m]
        .iter()
        .rev()
        .fold(0, |acc, &d| acc * p + d)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).expect("p prime, a != 0")
}

/// Irreducibility over GF(p) by trial division with all monic polynomials of
/// degree 1..=deg/2; fine at the degrees in scope.
fn poly_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    let coeffs: Vec<u64> = poly.iter().map(|&c| c % p).collect();
    if deg == 0 || coeffs[deg] == 0 {
        return false;
    }
    for ddeg in 1..=deg / 2 {
        let count = p.pow(ddeg as u32);
        for idx in 0..count {
            // monic divisor candidate with low coefficients from idx
            let mut div = Vec::with_capacity(ddeg + 1);
            let mut x = idx;
            for _ in 0..ddeg {
                div.push(x % p);
                x /= p;
            }
            div.push(1);
            if poly_rem_is_zero(&coeffs, &div, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(num: &[u64], div: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = num.to_vec();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap() % p;
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for (j, &dc) in div.iter().enumerate() {
                rem[shift + j] = (rem[shift + j] + p * p - lead * (dc % p) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_and_gf3() {
        let f2 = FiniteField::prime(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f2.mul(1, 1), 1);
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(f3.mul(2, 2), 1);
        assert_eq!(f3.neg(1), 2);
        assert!(FiniteField::prime(6).is_err());
    }

    #[test]
    fn gf4_arithmetic() {
        // GF(4) with x^2+x+1: element 2 = x, so x*x = x+1 = 3
        let f4 = FiniteField::extension(2, 2, None).unwrap();
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.mul(2, 3), 1);
        assert_eq!(f4.add(2, 3), 1);
    }

    #[test]
    fn field_axioms_sampled() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64] {
            let f = FiniteField::of_order(q).unwrap();
            assert_eq!(f.order(), q);
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    // distributivity on a stride of triples
                    let c = (a * 7 + b * 3 + 1) % q;
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn bad_moduli_rejected() {
        // x^2+1 is reducible over GF(2)
        assert!(matches!(
            FiniteField::extension(2, 2, Some(vec![1, 0, 1])),
            Err(FieldError::BadModulus(..))
        ));
        assert!(FiniteField::of_order(6).is_err());
        assert!(FiniteField::of_order(128).is_err());
    }
}
