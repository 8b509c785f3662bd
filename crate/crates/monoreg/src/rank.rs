//! Exact matrix rank over the supported coefficient fields.
//!
//! Boundary matrices of simplicial chain complexes have entries in {-1, 0, 1}
//! and modest dimensions, so two simple exact eliminations suffice:
//!
//! * over GF(p): classical row reduction with modular inverses;
//! * over the rationals: fraction-free Bareiss elimination in `i128`, falling
//!   back to arbitrary-precision integers on (rare) overflow.

use num_bigint::BigInt;

use crate::field::FieldSpec;

/// Dense row-major integer matrix with small entries.
#[derive(Debug, Clone)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    /// Exact rank over the given field.
    pub fn rank(&self, field: &FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            FieldSpec::Prime(p) => self.rank_mod_p(*p),
            FieldSpec::Rationals => self.rank_over_rationals(),
        }
    }

    /// Row reduction over GF(p). Entries are reduced into [0, p); `p` fits in
    /// 31 bits so every product fits in u64.
    fn rank_mod_p(&self, p: u64) -> usize {
        let mut m: Vec<u64> = self
            .data
            .iter()
            .map(|&v| v.rem_euclid(p as i64) as u64)
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    m.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = mod_inverse(m[rank * cols + col], p);
            for r in (rank + 1)..rows {
                let lead = m[r * cols + col];
                if lead == 0 {
                    continue;
                }
                let factor = lead * inv % p;
                for c in col..cols {
                    let sub = factor * m[rank * cols + c] % p;
                    let cur = m[r * cols + c];
                    m[r * cols + c] = (cur + p - sub) % p;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Fraction-free (Bareiss) elimination over the integers, which computes
    /// the rank over the rationals. Each intermediate entry is a minor of the
    /// original matrix; dividing by the previous pivot is exact, also when
    /// zero columns are skipped. Falls back to big integers if a product
    /// overflows `i128`.
    fn rank_over_rationals(&self) -> usize {
        let mut m: Vec<i128> = self.data.iter().map(|&v| v as i128).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev: i128 = 1;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    m.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let piv = m[rank * cols + col];
            for r in (rank + 1)..rows {
                let lead = m[r * cols + col];
                for c in (col + 1)..cols {
                    let a = match piv.checked_mul(m[r * cols + c]) {
                        Some(v) => v,
                        None => return self.rank_bigint(),
                    };
                    let b = match lead.checked_mul(m[rank * cols + c]) {
                        Some(v) => v,
                        None => return self.rank_bigint(),
                    };
                    let Some(num) = a.checked_sub(b) else {
                        return self.rank_bigint();
                    };
                    m[r * cols + c] = num / prev;
                }
                m[r * cols + col] = 0;
            }
            prev = piv;
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Bareiss elimination with arbitrary-precision integers; exact and
    /// overflow-free, used only when the `i128` path cannot finish.
    fn rank_bigint(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut m: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(v)).collect();
        let zero = BigInt::from(0);
        let mut rank = 0;
        let mut prev = BigInt::from(1);
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != zero) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    m.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let piv = m[rank * cols + col].clone();
            for r in (rank + 1)..rows {
                let lead = m[r * cols + col].clone();
                for c in (col + 1)..cols {
                    let num = &piv * &m[r * cols + c] - &lead * &m[rank * cols + c];
                    m[r * cols + c] = num / &prev;
                }
                m[r * cols + col] = zero.clone();
            }
            prev = piv;
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

/// Inverse of `a` modulo the odd prime `p`, via Fermat's little theorem.
fn mod_inverse(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
