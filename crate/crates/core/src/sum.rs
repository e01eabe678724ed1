//! Compensated and log-domain accumulation.

use crate::scalar::Real;

/// Neumaier-compensated running sum.
#[derive(Clone, Copy, Debug)]
pub struct CompensatedSum<T: Real> {
    sum: T,
    comp: T,
}

impl<T: Real> Default for CompensatedSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Real> CompensatedSum<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            comp: T::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> T {
        self.sum + self.comp
    }
}

impl<T: Real> FromIterator<T> for CompensatedSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Self::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Sum of positive terms supplied by their natural logarithms.
///
/// Terms are kept relative to a running pivot (the largest log seen so
/// far) and accumulated with compensation, so sums whose terms would
/// individually overflow `f64` are still exact up to rounding.
#[derive(Clone, Copy, Debug)]
pub struct LogSum {
    pivot: f64,
    scaled: CompensatedSum<f64>,
    count: usize,
}

impl Default for LogSum {
    fn default() -> Self {
        Self::new()
    }
}

impl LogSum {
    pub fn new() -> Self {
        Self {
            pivot: f64::NEG_INFINITY,
            scaled: CompensatedSum::new(),
            count: 0,
        }
    }

    pub fn add_log(&mut self, log_term: f64) {
        self.count += 1;
        if log_term == f64::NEG_INFINITY {
            return;
        }
        if log_term > self.pivot {
            let shift = (self.pivot - log_term).exp();
            let old = self.scaled.value() * shift;
            self.scaled = CompensatedSum::new();
            self.scaled.add(old);
            self.pivot = log_term;
        }
        self.scaled.add((log_term - self.pivot).exp());
    }

    /// Natural log of the accumulated sum; `-inf` when empty.
    pub fn ln(&self) -> f64 {
        if self.pivot == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        self.pivot + self.scaled.value().ln()
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DoubleDouble;

    #[test]
    fn compensation_recovers_small_terms() {
        let mut s = CompensatedSum::<f64>::new();
        s.add(1.0);
        for _ in 0..1000 {
            s.add(1e-17);
        }
        s.add(-1.0);
        assert!((s.value() - 1e-14).abs() < 1e-26);
    }

    #[test]
    fn compensated_sum_is_generic() {
        let s: CompensatedSum<DoubleDouble> = (1..=10)
            .map(|k| DoubleDouble::from(1.0) / DoubleDouble::from(k as f64))
            .collect();
        let h10 = DoubleDouble::from(7381.0) / DoubleDouble::from(2520.0);
        assert!((s.value() - h10).hi.abs() < 1e-30);
    }

    #[test]
    fn log_sum_handles_huge_terms() {
        let mut acc = LogSum::new();
        acc.add_log(1000.0);
        acc.add_log(1000.0);
        acc.add_log(-f64::INFINITY);
        assert!((acc.ln() - (1000.0 + 2f64.ln())).abs() < 1e-12);
        assert_eq!(acc.len(), 3);
    }

    #[test]
    fn log_sum_order_independent() {
        let logs = [-3.0, 2.0, 0.5, -40.0, 1.5];
        let mut a = LogSum::new();
        let mut b = LogSum::new();
        for &l in &logs {
            a.add_log(l);
        }
        for &l in logs.iter().rev() {
            b.add_log(l);
        }
        let direct: f64 = logs.iter().map(|l| l.exp()).sum::<f64>().ln();
        assert!((a.ln() - direct).abs() < 1e-14);
        assert!((b.ln() - direct).abs() < 1e-14);
    }
}
