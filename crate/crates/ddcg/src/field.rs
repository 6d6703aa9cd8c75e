//! Finite fields GF(p^r) for small q, as explicit addition and
//! multiplication tables.
//!
//! Extension fields are built modulo the lexicographically smallest monic
//! irreducible polynomial over GF(p) (coefficients compared low-degree
//! first), found by exhaustive search — deterministic fields without
//! external tables.  Every instance is verified on construction: elementary
//! abelian additive group, cyclic multiplicative group, and exhaustive
//! distributivity.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("field order {0} exceeds the supported range (2..=64)")]
    UnsupportedSize(usize),
    #[error("field axiom verification failed: {0}")]
    AxiomFailure(&'static str),
}

/// GF(q) with elements indexed 0..q; index = Σ cᵢ·pⁱ over the base-p digit
/// vector (c₀, …, c_{r−1}) of the element, so 0 and 1 are the additive and
/// multiplicative identities.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: usize,
    r: usize,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    square: Vec<bool>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<FiniteField, FieldError> {
        if !(2..=64).contains(&q) {
            return Err(FieldError::UnsupportedSize(q));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
        if !is_prime(p) {
            // Smallest divisor of q is always prime; defensive only.
            return Err(FieldError::NotPrimePower(q));
        }
        let mut r = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            r += 1;
        }
        if rest != 1 {
            return Err(FieldError::NotPrimePower(q));
        }

        let modulus = smallest_irreducible(p, r);
        let digits = |x: usize| -> Vec<usize> {
            let mut d = vec![0; r];
            let mut x = x;
            for item in d.iter_mut() {
                *item = x % p;
                x /= p;
            }
            d
        };
        let index = |d: &[usize]| -> usize {
            d.iter().rev().fold(0, |acc, &c| acc * p + c)
        };

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let sum: Vec<usize> =
                    dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = index(&sum) as u16;

                let mut product = vec![0usize; 2 * r - 1];
                for (i, &a) in dx.iter().enumerate() {
                    for (j, &b) in dy.iter().enumerate() {
                        product[i + j] = (product[i + j] + a * b) % p;
                    }
                }
                let reduced = poly_rem(&product, &modulus, p);
                mul[x * q + y] = index(&reduced) as u16;
            }
        }

        let mut square = vec![false; q];
        for x in 1..q {
            square[mul[x * q + x] as usize] = true;
        }

        let field = FiniteField { p, r, q, add, mul, square };
        field.verify()?;
        Ok(field)
    }

    fn verify(&self) -> Result<(), FieldError> {
        let q = self.q;
        for x in 0..q {
            if self.add(x, 0) != x || self.mul(x, 1) != x {
                return Err(FieldError::AxiomFailure("identities"));
            }
            let mut acc = x;
            for _ in 1..self.p {
                acc = self.add(acc, x);
            }
            if acc != 0 {
                return Err(FieldError::AxiomFailure(
                    "additive group not elementary abelian",
                ));
            }
        }
        // Multiplicative group cyclic of order q−1: some element generates.
        let has_generator = (1..q).any(|g| {
            let mut order = 1;
            let mut acc = g;
            while acc != 1 {
                acc = self.mul(acc, g);
                order += 1;
            }
            order == q - 1
        });
        if !has_generator {
            return Err(FieldError::AxiomFailure("multiplicative group not cyclic"));
        }
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if self.mul(a, self.add(b, c))
                        != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return Err(FieldError::AxiomFailure("distributivity"));
                    }
                }
            }
        }
        if self.square.iter().filter(|&&s| s).count() != (q - 1) / 2
            && self.p != 2
        {
            return Err(FieldError::AxiomFailure("square count"));
        }
        Ok(())
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.q + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.q + y] as usize
    }

    pub fn neg(&self, x: usize) -> usize {
        (0..self.q).find(|&y| self.add(x, y) == 0).unwrap()
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `true` iff `x` is a nonzero square.
    pub fn is_square(&self, x: usize) -> bool {
        x != 0 && self.square[x]
    }

    /// The nonzero squares, ascending.
    pub fn squares(&self) -> Vec<usize> {
        (1..self.q).filter(|&x| self.square[x]).collect()
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p); coefficient
/// vectors are low-degree-first, result truncated to deg b coefficients.
fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let deg_b = b.len() - 1;
    let mut rem = a.to_vec();
    while rem.len() > deg_b {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - deg_b;
            // rem -= lead · b · x^shift; b is monic, so the top term cancels.
            for i in 0..=deg_b {
                rem[shift + i] = (rem[shift + i] + p - lead * b[i] % p) % p;
            }
        }
        rem.pop();
    }
    rem.resize(deg_b, 0);
    rem
}

/// The lexicographically smallest monic irreducible polynomial of degree r
/// over GF(p), low-degree-first coefficients, leading coefficient included.
fn smallest_irreducible(p: usize, r: usize) -> Vec<usize> {
    if r == 1 {
        return vec![0, 1]; // x
    }
    for tail in 0..p.pow(r as u32) {
        let mut poly = vec![0usize; r + 1];
        let mut t = tail;
        for item in poly.iter_mut().take(r) {
            *item = t % p;
            t /= p;
        }
        poly[r] = 1;
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist for every degree")
}

/// Trial division by all monic polynomials of degree 1..=deg/2.
fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for tail in 0..p.pow(d as u32) {
            let mut divisor = vec![0usize; d + 1];
            let mut t = tail;
            for item in divisor.iter_mut().take(d) {
                *item = t % p;
                t /= p;
            }
            divisor[d] = 1;
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f5 = FiniteField::new(5).unwrap();
        assert_eq!((f5.p(), f5.r()), (5, 1));
        assert_eq!(f5.add(3, 4), 2);
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.squares(), vec![1, 4]);
    }

    #[test]
    fn gf9_uses_x_squared_plus_one() {
        // Over GF(3), x²+1 is the lex-smallest monic irreducible quadratic:
        // tails 00, 10 (x²=x·x, x²+x=x(x+1), reducible) … 01 → 1 + 0·x + x².
        let f9 = FiniteField::new(9).unwrap();
        assert_eq!((f9.p(), f9.r()), (3, 2));
        // With modulus x²+1: x·x = −1 = 2. Element x has index 3.
        assert_eq!(f9.mul(3, 3), 2);
        assert_eq!(f9.squares().len(), 4);
        // −1 = 2 is a square in GF(9) (q ≡ 1 mod 4).
        assert!(f9.is_square(2));
    }

    #[test]
    fn gf25_arithmetic() {
        let f = FiniteField::new(25).unwrap();
        assert_eq!((f.p(), f.r()), (5, 2));
        assert_eq!(f.squares().len(), 12);
        assert!(f.is_square(f.neg(1)), "−1 is a square, 25 ≡ 1 mod 4");
    }

    #[test]
    fn axiom_verification_up_to_49() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32, 49] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.q(), q);
            for x in 0..q {
                assert_eq!(f.sub(x, x), 0);
            }
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        for q in [6, 10, 12, 15, 18, 20, 24] {
            assert_eq!(
                FiniteField::new(q).unwrap_err(),
                FieldError::NotPrimePower(q)
            );
        }
        assert_eq!(
            FiniteField::new(1).unwrap_err(),
            FieldError::UnsupportedSize(1)
        );
        assert_eq!(
            FiniteField::new(128).unwrap_err(),
            FieldError::UnsupportedSize(128)
        );
    }
}
