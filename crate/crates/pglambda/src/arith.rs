//! Integer arithmetic on the divisors of a group order.
//!
//! Everything downstream reasons about element orders through their exponent
//! vectors over the primes dividing `|G|`: the vector of a divisor, its
//! coordinate sum (the *length*), and the coordinatewise order that mirrors
//! divisibility. The totient lives here too since cyclic class sizes are
//! `phi(d)`.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("factorization requires n >= 2, got {0}")]
    TooSmall(u64),
    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },
    #[error("exponent vectors are only defined for divisors >= 2")]
    UnitDivisor,
    #[error("vectors over different prime bases (lengths {0} and {1})")]
    BasisMismatch(usize, usize),
}

/// Prime factorization `n = p_1^a_1 * ... * p_r^a_r` with primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeBasis {
    n: u64,
    primes: Vec<u64>,
    exponents: Vec<u32>,
}

impl PrimeBasis {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of distinct primes dividing `n`.
    pub fn rank(&self) -> usize {
        self.primes.len()
    }

    /// The exponent vector of a divisor `d >= 2` of `n`.
    ///
    /// Zero coordinates are allowed: the vector of a prime `p_j` is the j-th
    /// unit vector even though the other primes do not divide it.
    pub fn partial_vector(&self, d: u64) -> Result<OrderVector, ArithError> {
        if d == 1 {
            return Err(ArithError::UnitDivisor);
        }
        if d < 2 || self.n % d != 0 {
            return Err(ArithError::NotADivisor { d, n: self.n });
        }
        let mut rest = d;
        let mut exponents = Vec::with_capacity(self.primes.len());
        for &p in &self.primes {
            let mut beta = 0u32;
            while rest % p == 0 {
                rest /= p;
                beta += 1;
            }
            exponents.push(beta);
        }
        debug_assert_eq!(rest, 1, "divisor of n has no primes outside the basis");
        Ok(OrderVector { exponents })
    }

    /// Multiplies the basis primes back out of an exponent vector.
    pub fn product(&self, v: &OrderVector) -> Result<u64, ArithError> {
        if v.exponents.len() != self.primes.len() {
            return Err(ArithError::BasisMismatch(
                v.exponents.len(),
                self.primes.len(),
            ));
        }
        Ok(self
            .primes
            .iter()
            .zip(&v.exponents)
            .map(|(&p, &b)| p.pow(b))
            .product())
    }

    /// All divisors of `n` that are at least 2, ascending.
    pub fn divisors_ge_2(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for (&p, &a) in self.primes.iter().zip(&self.exponents) {
            let mut next = Vec::with_capacity(divs.len() * (a as usize + 1));
            for &d in &divs {
                let mut q = d;
                for _ in 0..=a {
                    next.push(q);
                    q *= p;
                }
            }
            divs = next;
        }
        divs.sort_unstable();
        divs.retain(|&d| d >= 2);
        divs
    }

    pub fn format_factorization(&self) -> String {
        self.primes
            .iter()
            .zip(&self.exponents)
            .map(|(p, a)| {
                if *a == 1 {
                    format!("{p}")
                } else {
                    format!("{p}^{a}")
                }
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

/// Exponent vector `(b_1, ..., b_r)` of a divisor, aligned to a [`PrimeBasis`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderVector {
    exponents: Vec<u32>,
}

impl OrderVector {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Coordinate sum `b_1 + ... + b_r`.
    pub fn length(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Coordinatewise `<=`; equivalent to divisibility of the products.
    pub fn leq(&self, other: &OrderVector) -> Result<bool, ArithError> {
        if self.exponents.len() != other.exponents.len() {
            return Err(ArithError::BasisMismatch(
                self.exponents.len(),
                other.exponents.len(),
            ));
        }
        Ok(self
            .exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b))
    }
}

/// Trial-division factorization with primes ascending. Requires `n >= 2`.
pub fn factorize(n: u64) -> Result<PrimeBasis, ArithError> {
    if n < 2 {
        return Err(ArithError::TooSmall(n));
    }
    let mut primes = Vec::new();
    let mut exponents = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut a = 0u32;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            primes.push(p);
            exponents.push(a);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push(rest);
        exponents.push(1);
    }
    Ok(PrimeBasis {
        n,
        primes,
        exponents,
    })
}

/// Euler's totient: the number of integers in `1..=d` coprime to `d`.
pub fn euler_phi(d: u64) -> u64 {
    if d == 1 {
        return 1;
    }
    let basis = factorize(d).expect("d >= 2");
    basis
        .primes()
        .iter()
        .zip(basis.exponents())
        .map(|(&p, &a)| p.pow(a - 1) * (p - 1))
        .product()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|b| b.rank() == 1 && b.exponents()[0] == 1) == Ok(true)
}
