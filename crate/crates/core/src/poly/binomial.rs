use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Pascal's triangle, grown on demand.
#[derive(Clone, Debug, Default)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    pub fn new() -> Self {
        Binomials { rows: vec![vec![BigInt::one()]] }
    }

    /// `C(n, k)`; zero when `k > n`.
    pub fn get(&mut self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        if self.rows.is_empty() {
            self.rows.push(vec![BigInt::one()]);
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("nonempty");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigInt::one());
            self.rows.push(row);
        }
        self.rows[n][k].clone()
    }
}

/// `C(n, k)` computed by the multiplicative formula.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn pascal_matches_multiplicative() {
        let mut b = Binomials::new();
        for n in 0..40 {
            for k in 0..=n + 1 {
                assert_eq!(b.get(n, k), binomial(n, k), "C({n},{k})");
            }
        }
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }
}
