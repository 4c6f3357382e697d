use num_bigint::BigInt;
use num_traits::Zero;

use super::TruncSeries;
use crate::exactalg::QLaurent;

/// Two-level series: outer variable `x`, each `x`-coefficient a truncated
/// series in `y` over `QLaurent`. Both orders are tracked independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTower {
    coeffs: Vec<TruncSeries<QLaurent>>,
    inner_order: usize,
}

impl SeriesTower {
    pub fn zero(outer_order: usize, inner_order: usize) -> Self {
        SeriesTower { coeffs: vec![TruncSeries::zero(inner_order); outer_order + 1], inner_order }
    }

    pub fn one(outer_order: usize, inner_order: usize) -> Self {
        let mut t = Self::zero(outer_order, inner_order);
        t.coeffs[0] = TruncSeries::one(inner_order);
        t
    }

    pub fn from_fn(
        outer_order: usize,
        inner_order: usize,
        mut f: impl FnMut(usize) -> TruncSeries<QLaurent>,
    ) -> Self {
        SeriesTower {
            coeffs: (0..=outer_order).map(|l| f(l).truncate(inner_order)).collect(),
            inner_order,
        }
    }

    pub fn outer_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn inner_order(&self) -> usize {
        self.inner_order
    }

    /// Coefficient of `x^l` as a series in `y`.
    pub fn coeff(&self, l: usize) -> &TruncSeries<QLaurent> {
        &self.coeffs[l]
    }

    /// Add `c x^l y^m`; ignored beyond either order.
    pub fn add_term(&mut self, l: usize, m: usize, c: &QLaurent) {
        if l < self.coeffs.len() {
            self.coeffs[l].add_to_coeff(m, c);
        }
    }

    /// `x -> q^j x`.
    pub fn scale_outer(&self, j: i64) -> Self {
        SeriesTower {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(l, s)| s.map(|c| c.shift(j * l as i64)))
                .collect(),
            inner_order: self.inner_order,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&TruncSeries<QLaurent>, &TruncSeries<QLaurent>) -> TruncSeries<QLaurent>,
    ) -> Self {
        let n = self.outer_order().min(other.outer_order());
        SeriesTower {
            coeffs: (0..=n).map(|l| f(&self.coeffs[l], &other.coeffs[l])).collect(),
            inner_order: self.inner_order.min(other.inner_order),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.outer_order().min(other.outer_order());
        let inner = self.inner_order.min(other.inner_order);
        let mut out = Self::zero(n, inner);
        for i in 0..=n {
            if self.coeffs[i].valuation().is_none() {
                continue;
            }
            for j in 0..=n - i {
                let p = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] = &out.coeffs[i + j] + &p;
            }
        }
        out
    }

    /// Specialize `q = 1`: integer coefficients indexed `[x-degree][y-degree]`.
    pub fn at_q_one(&self) -> Vec<TruncSeries<BigInt>> {
        self.coeffs.iter().map(|s| s.at_q_one()).collect()
    }

    /// First `(x-degree, y-degree)` where the towers differ, with both values.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, QLaurent, QLaurent)> {
        let n = self.outer_order().min(other.outer_order());
        (0..=n).find_map(|l| {
            self.coeffs[l]
                .first_difference(&other.coeffs[l])
                .map(|(m, a, b)| (l, m, a, b))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|s| s.coeffs().iter().all(|c| c.is_zero()))
    }
}

impl SeriesTower {
    /// Embed a polynomial-in-`x` series with `QLaurent` coefficients as a tower
    /// constant in `y`.
    pub fn from_x_series(s: &TruncSeries<QLaurent>, inner_order: usize) -> Self {
        SeriesTower::from_fn(s.order(), inner_order, |l| {
            TruncSeries::new(vec![s.coeff(l).clone()], inner_order)
        })
    }

    /// Multiply by `y^k`.
    pub fn shift_inner(&self, k: usize) -> Self {
        SeriesTower {
            coeffs: self.coeffs.iter().map(|s| s.shift(k)).collect(),
            inner_order: self.inner_order,
        }
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        SeriesTower {
            coeffs: self.coeffs.iter().map(|s| s.scale(c)).collect(),
            inner_order: self.inner_order,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::pochhammer_x;

    #[test]
    fn multiplication_against_flat_product() {
        // (1 - x)(1 + y) times itself.
        let mut t = SeriesTower::zero(3, 3);
        t.add_term(0, 0, &QLaurent::from(1));
        t.add_term(0, 1, &QLaurent::from(1));
        t.add_term(1, 0, &QLaurent::from(-1));
        t.add_term(1, 1, &QLaurent::from(-1));
        let sq = t.mul(&t);
        assert_eq!(sq.coeff(1).coeff(1), &QLaurent::from(-4));
        assert_eq!(sq.coeff(2).coeff(2), &QLaurent::from(1));
        assert!(sq.coeff(3).coeffs().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn scale_outer_matches_series_scale() {
        let p = pochhammer_x(3, 4);
        let t = SeriesTower::from_x_series(&p, 2);
        let scaled = t.scale_outer(1);
        for l in 0..=4 {
            assert_eq!(scaled.coeff(l).coeff(0), p.scale_var(1).coeff(l));
        }
    }
}
