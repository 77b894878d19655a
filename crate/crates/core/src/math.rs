//! Thin wrappers over `libm` so every build (including test builds that link
//! `std`) evaluates the same floating-point routines.

pub use core::f64::consts::PI;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}
#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}
#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}
#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}
#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}
#[inline]
pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}
#[inline]
pub fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}
#[inline]
pub fn pow(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}
#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}
#[inline]
pub fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}
#[inline]
pub fn round(x: f64) -> f64 {
    libm::round(x)
}
#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}
#[inline]
pub fn tgamma(x: f64) -> f64 {
    libm::tgamma(x)
}
#[inline]
pub fn lgamma(x: f64) -> f64 {
    libm::lgamma(x)
}
#[inline]
pub fn expm1(x: f64) -> f64 {
    libm::expm1(x)
}
#[inline]
pub fn ln1p(x: f64) -> f64 {
    libm::log1p(x)
}
#[inline]
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}
#[inline]
pub fn frexp(x: f64) -> (f64, i32) {
    libm::frexp(x)
}
#[inline]
pub fn ldexp(x: f64, e: i32) -> f64 {
    libm::scalbn(x, e)
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if abs(self.sum) >= abs(value) {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Compensated sum of a sequence, in iteration order.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut acc = NeumaierSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// `n` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> alloc::vec::Vec<f64> {
    match n {
        0 => alloc::vec::Vec::new(),
        1 => alloc::vec![lo],
        _ => {
            let (a, b) = (ln(lo), ln(hi));
            (0..n)
                .map(|i| {
                    if i == 0 {
                        lo
                    } else if i == n - 1 {
                        hi
                    } else {
                        exp(a + (b - a) * i as f64 / (n - 1) as f64)
                    }
                })
                .collect()
        }
    }
}
