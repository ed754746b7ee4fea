use num_complex::Complex64;

/// A finite Laurent polynomial `Σ a_n z^n`, `n_min ≤ n ≤ n_max`.
///
/// Stored normalized: the first and last stored coefficients are nonzero,
/// so `n_min` is the order of the function at the origin. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly {
    n_min: i32,
    coeffs: Vec<Complex64>,
}

impl LaurentPoly {
    pub fn new(n_min: i32, coeffs: Vec<Complex64>) -> Self {
        let first = coeffs.iter().position(|c| *c != Complex64::new(0.0, 0.0));
        let Some(first) = first else {
            return Self::zero();
        };
        let last = coeffs
            .iter()
            .rposition(|c| *c != Complex64::new(0.0, 0.0))
            .unwrap_or(first);
        Self {
            n_min: n_min + first as i32,
            coeffs: coeffs[first..=last].to_vec(),
        }
    }

    pub fn from_real(n_min: i32, coeffs: &[f64]) -> Self {
        Self::new(n_min, coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self {
            n_min: 0,
            coeffs: Vec::new(),
        }
    }

    /// `c z^n`.
    pub fn monomial(n: i32, c: Complex64) -> Self {
        Self::new(n, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn n_min(&self) -> i32 {
        self.n_min
    }

    pub fn n_max(&self) -> i32 {
        self.n_min + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: i32) -> Complex64 {
        let k = n - self.n_min;
        if k < 0 {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs
            .get(k as usize)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// `(n, a_n)` over the stored range, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (i32, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, &c)| (self.n_min + k as i32, c))
    }

    /// Order `ν_f` of the pole at the origin, 0 when the origin is removable.
    pub fn pole_order(&self) -> u32 {
        if self.is_zero() {
            0
        } else {
            (-self.n_min).max(0) as u32
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc * z.powi(self.n_min)
    }

    /// The `k`-th derivative.
    pub fn derivative(&self, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        let coeffs = self
            .terms()
            .map(|(n, c)| {
                let falling: f64 = (0..k as i32).map(|j| (n - j) as f64).product();
                c * falling
            })
            .collect();
        Self::new(self.n_min - k as i32, coeffs)
    }

    /// `z^k f(z)`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            n_min: self.n_min + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.n_min, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.n_min.min(other.n_min);
        let hi = self.n_max().max(other.n_max());
        let coeffs = (lo..=hi).map(|n| self.coeff(n) + other.coeff(n)).collect();
        Self::new(lo, coeffs)
    }
}
