//! Small finite fields GF(p) and GF(2^s), and MOLS built from them.

use crate::error::{LrcError, Result};

/// Irreducible moduli for GF(2^s), `s = 2..=8`, as coefficient bitmasks.
const BINARY_MODULI: [(u32, u32); 7] = [
    (2, 0b111),         // x^2 + x + 1
    (3, 0b1011),        // x^3 + x + 1
    (4, 0b1_0011),      // x^4 + x + 1
    (5, 0b10_0101),     // x^5 + x^2 + 1
    (6, 0b100_0011),    // x^6 + x + 1
    (7, 0b1000_0011),   // x^7 + x + 1
    (8, 0b1_0001_1011), // x^8 + x^4 + x^3 + x + 1
];

/// A finite field of prime order or of order `2^s`.
///
/// Elements are `u32` values below [`Field::order`]: residues for prime
/// fields, coefficient bitmasks for binary extension fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    characteristic: u32,
    degree: u32,
    modulus: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(order: u64) -> Result<Field> {
        if is_prime(order) && order <= u32::MAX as u64 {
            return Ok(Field {
                characteristic: order as u32,
                degree: 1,
                modulus: 0,
            });
        }
        if order.is_power_of_two() {
            let s = order.trailing_zeros();
            if let Some(&(_, modulus)) = BINARY_MODULI.iter().find(|(deg, _)| *deg == s) {
                return Ok(Field {
                    characteristic: 2,
                    degree: s,
                    modulus,
                });
            }
        }
        Err(LrcError::UnsupportedOrder(order))
    }

    pub fn order(&self) -> u32 {
        self.characteristic.pow(self.degree)
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Modulus polynomial bitmask for binary extension fields, `None` for prime fields.
    pub fn modulus(&self) -> Option<u32> {
        (self.degree > 1).then_some(self.modulus)
    }

    fn is_binary_extension(&self) -> bool {
        self.degree > 1
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.is_binary_extension() {
            a ^ b
        } else {
            ((a as u64 + b as u64) % self.characteristic as u64) as u32
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.is_binary_extension() || a == 0 {
            a
        } else {
            self.characteristic - a
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if !self.is_binary_extension() {
            return ((a as u64 * b as u64) % self.characteristic as u64) as u32;
        }
        // carry-less multiply with reduction after each shift
        let top = 1u32 << self.degree;
        let (mut a, mut b, mut acc) = (a, b, 0u32);
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.order() as u64 - 2))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order()
    }
}

/// An `r x r` Latin square over symbols `1..=r`.
pub type LatinSquare = Vec<Vec<u32>>;

/// `count` mutually orthogonal Latin squares of order `r`, the m-th given by
/// `L_m(i, j) = m*i + j` over GF(r), with field element `e` written as symbol `e + 1`.
pub fn mols_set(r: u64, count: usize) -> Result<Vec<LatinSquare>> {
    let field = Field::new(r)?;
    let order = field.order();
    let max = order as usize - 1;
    if count > max {
        return Err(LrcError::TooManySquares {
            requested: count,
            max,
        });
    }
    Ok((1..=count as u32)
        .map(|m| {
            (0..order)
                .map(|i| {
                    (0..order)
                        .map(|j| field.add(field.mul(m, i), j) + 1)
                        .collect()
                })
                .collect()
        })
        .collect())
}
