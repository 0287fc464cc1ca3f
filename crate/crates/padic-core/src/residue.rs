//! Residue fields `F_p` and `F_{p^2} = F_p[g]/(g^2 - d)` with `d` the least
//! non-residue.

use std::fmt;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Legendre symbol test: true for nonzero squares mod `p`.
pub fn is_square_mod(a: u64, p: u64) -> bool {
    let a = a % p;
    a != 0 && pow_mod(a, (p - 1) / 2, p) == 1
}

/// Square root mod an odd prime (Tonelli–Shanks). Returns the root in
/// `[0, p/2]`.
pub fn sqrt_mod_p(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if !is_square_mod(a, p) {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| !is_square_mod(z, p)).expect("odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r.min(p - r))
}

/// Least quadratic non-residue mod `p`.
pub fn least_nonresidue(p: u64) -> u64 {
    (2..p).find(|&z| !is_square_mod(z, p)).expect("odd prime has a non-residue")
}

/// Element `c0 + c1*g` of `F_p` (degree 1, `c1 = 0`) or `F_{p^2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueElement {
    p: u64,
    degree: u8,
    c0: u64,
    c1: u64,
}

impl ResidueElement {
    pub fn new(p: u64, c: i64) -> Self {
        ResidueElement { p, degree: 1, c0: c.rem_euclid(p as i64) as u64, c1: 0 }
    }

    pub fn quadratic(p: u64, c0: u64, c1: u64) -> Self {
        let (c0, c1) = (c0 % p, c1 % p);
        ResidueElement { p, degree: if c1 == 0 { 1 } else { 2 }, c0, c1 }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn coords(&self) -> (u64, u64) {
        (self.c0, self.c1)
    }

    /// The value as an element of `F_p`, if it lies there.
    pub fn as_fp(&self) -> Option<u64> {
        (self.c1 == 0).then_some(self.c0)
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::quadratic(self.p, self.c0 + o.c0, self.c1 + o.c1)
    }

    pub fn neg(&self) -> Self {
        Self::quadratic(self.p, (self.p - self.c0) % self.p, (self.p - self.c1) % self.p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.p;
        let d = least_nonresidue(p);
        let c0 = (mul_mod(self.c0, o.c0, p) + mul_mod(d, mul_mod(self.c1, o.c1, p), p)) % p;
        let c1 = (mul_mod(self.c0, o.c1, p) + mul_mod(self.c1, o.c0, p)) % p;
        Self::quadratic(p, c0, c1)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.p;
        let d = least_nonresidue(p);
        // (c0 + c1 g)^{-1} = (c0 - c1 g) / (c0^2 - d c1^2)
        let norm = (mul_mod(self.c0, self.c0, p) + p - mul_mod(d, mul_mod(self.c1, self.c1, p), p)) % p;
        let ni = pow_mod(norm, p - 2, p);
        Some(Self::quadratic(p, mul_mod(self.c0, ni, p), mul_mod((p - self.c1) % p, ni, p)))
    }

    /// A square root in `F_{p^2}` of an element of `F_p`.
    pub fn sqrt_fp(p: u64, a: u64) -> Self {
        match sqrt_mod_p(a, p) {
            Some(r) => Self::new(p, r as i64),
            None => {
                // a = d * s^2 for some s, so sqrt(a) = s*g
                let d = least_nonresidue(p);
                let s2 = mul_mod(a % p, pow_mod(d, p - 2, p), p);
                let s = sqrt_mod_p(s2, p).expect("a/d is a square");
                Self::quadratic(p, 0, s)
            }
        }
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1 == 0 {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{}+{}*g", self.c0, self.c1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tonelli_matches_brute_force() {
        for p in [3u64, 5, 7, 11, 13, 17, 97] {
            for a in 1..p {
                let brute = (0..p).find(|x| x * x % p == a);
                match sqrt_mod_p(a, p) {
                    Some(r) => assert_eq!(r * r % p, a),
                    None => assert!(brute.is_none()),
                }
            }
        }
    }

    #[test]
    fn quadratic_field_inverse() {
        for p in [3u64, 5, 7] {
            for c0 in 0..p {
                for c1 in 0..p {
                    let x = ResidueElement::quadratic(p, c0, c1);
                    if let Some(y) = x.inv() {
                        assert_eq!(x.mul(&y), ResidueElement::new(p, 1));
                    }
                }
            }
        }
    }

    #[test]
    fn sqrt_of_nonresidue_squares_back() {
        let r = ResidueElement::sqrt_fp(7, 3);
        assert_eq!(r.degree(), 2);
        assert_eq!(r.mul(&r), ResidueElement::new(7, 3));
    }
}
