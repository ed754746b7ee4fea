use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::space::nearest_integer;
use crate::specfun::ln_beta_unchecked;

/// Default relative truncation tolerance for the kernel series.
pub const DEFAULT_TRUNC_TOL: f64 = 1e-15;
/// Default cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: usize = 2_000_000;

/// How a [`KernelEval`] evaluates `K_{α,β}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMode {
    /// Closed form, available for integer `β`.
    ClosedForm,
    /// Certified partial sums of the basis expansion.
    Series,
}

/// A kernel value together with its truncation certificate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub value: Complex64,
    /// Bound on `|K - value|` from truncation; zero in closed form.
    pub tail_bound: f64,
    pub terms: usize,
}

/// Evaluation handle for the reproducing kernel of `A²_{α,β}(D*)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelEval {
    alpha: f64,
    beta: f64,
    m: u32,
    mode: KernelMode,
    trunc_tol: f64,
    max_terms: usize,
}

impl KernelEval {
    /// Closed form when `β` is an integer, series otherwise.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let mode = match nearest_integer(beta) {
            Some(k) if k >= 0 => KernelMode::ClosedForm,
            _ => KernelMode::Series,
        };
        Self::build(alpha, beta, mode, DEFAULT_TRUNC_TOL, DEFAULT_MAX_TERMS)
    }

    /// Always sum the series.
    pub fn series(alpha: f64, beta: f64, trunc_tol: f64, max_terms: usize) -> Result<Self> {
        Self::build(alpha, beta, KernelMode::Series, trunc_tol, max_terms)
    }

    fn build(alpha: f64, beta: f64, mode: KernelMode, trunc_tol: f64, max_terms: usize) -> Result<Self> {
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(domain(
                "KernelEval",
                format!("alpha = {alpha}, beta = {beta} must exceed -1"),
            ));
        }
        if !(trunc_tol > 0.0) || max_terms == 0 {
            return Err(domain("KernelEval", "tolerance and term cap must be positive"));
        }
        Ok(Self {
            alpha,
            beta,
            m: crate::space::SpaceParams::new(alpha, beta, 2.0)?.m_ceil(),
            mode,
            trunc_tol,
            max_terms,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Basis start index is `-m`.
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn mode(&self) -> KernelMode {
        self.mode
    }

    pub fn trunc_tol(&self) -> f64 {
        self.trunc_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// `K(w, z)`.
    pub fn eval(&self, w: Complex64, z: Complex64) -> Result<KernelValue> {
        match self.mode {
            KernelMode::ClosedForm => Ok(KernelValue {
                value: kernel_closed(self.alpha, self.m, w, z)?,
                tail_bound: 0.0,
                terms: 0,
            }),
            KernelMode::Series => {
                series_sum(self.alpha, self.beta, self.m, w * z.conj(), self.trunc_tol, self.max_terms)
            }
        }
    }

    /// `K(z, z)`, real and positive on `D*`.
    pub fn diagonal(&self, z: Complex64) -> Result<f64> {
        Ok(self.eval(z, z)?.value.re)
    }

    /// Series coefficient `B(α+1,β+1)/B(α+1,n+β+1)` of `(w conj z)^n`.
    pub fn coefficient(&self, n: i32) -> Result<f64> {
        series_coefficient(self.alpha, self.beta, n)
    }
}

pub(crate) fn series_coefficient(alpha: f64, beta: f64, n: i32) -> Result<f64> {
    let s = n as f64 + beta + 1.0;
    if !(s > 0.0) {
        return Err(domain("kernel coefficient", format!("index {n} below the basis start")));
    }
    Ok((ln_beta_unchecked(alpha + 1.0, beta + 1.0) - ln_beta_unchecked(alpha + 1.0, s)).exp())
}

/// `(α+1) B(α+1, m+1) / ((w conj z)^m (1 - w conj z)^(2+α))`.
///
/// The non-integer power uses the principal branch; `1 - w conj z` has
/// positive real part whenever `|w conj z| < 1`.
pub fn kernel_closed(alpha: f64, m: u32, w: Complex64, z: Complex64) -> Result<Complex64> {
    const OP: &str = "kernel_closed";
    if !(alpha > -1.0) {
        return Err(domain(OP, format!("alpha = {alpha} must exceed -1")));
    }
    let x = w * z.conj();
    if !(x.norm() < 1.0) {
        return Err(domain(OP, format!("|w conj z| = {} must be < 1", x.norm())));
    }
    if m > 0 && x == Complex64::new(0.0, 0.0) {
        return Err(domain(OP, "the kernel has a pole at w conj z = 0"));
    }
    let lead = (alpha + 1.0) * ln_beta_unchecked(alpha + 1.0, m as f64 + 1.0).exp();
    let one = Complex64::new(1.0, 0.0);
    Ok(lead / (x.powi(m as i32) * (one - x).powf(2.0 + alpha)))
}

/// Partial sum of `Σ_{n≥-m} B(α+1,β+1)/B(α+1,n+β+1) (w conj z)^n` and a
/// bound on the omitted tail.
///
/// Successive term ratios `|x|(n+β+α+2)/(n+β+1)` decrease in `n`, so once the
/// current ratio `q` is below one the tail after the current term `t` is at
/// most `|t| q/(1-q)`. Summation stops when that bound drops under
/// `tol · |sum|`.
pub fn kernel_series(
    alpha: f64,
    beta: f64,
    w: Complex64,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<(Complex64, f64)> {
    let k = KernelEval::series(alpha, beta, tol, max_terms)?;
    let v = k.eval(w, z)?;
    Ok((v.value, v.tail_bound))
}

fn series_sum(alpha: f64, beta: f64, m: u32, x: Complex64, tol: f64, max_terms: usize) -> Result<KernelValue> {
    const OP: &str = "kernel_series";
    let r = x.norm();
    if !(r < 1.0) {
        return Err(domain(OP, format!("|w conj z| = {r} must be < 1")));
    }
    if r == 0.0 {
        if m > 0 {
            return Err(domain(OP, "the kernel has a pole at w conj z = 0"));
        }
        return Ok(KernelValue {
            value: Complex64::new(1.0, 0.0),
            tail_bound: 0.0,
            terms: 1,
        });
    }
    let mut n = -(m as i32);
    let mut coeff = series_coefficient(alpha, beta, n)?;
    let mut power = x.powi(n);
    let mut sum = NeumaierComplex::default();
    let mut bound = f64::INFINITY;
    for terms in 1..=max_terms {
        let term = power * coeff;
        sum.add(term);
        let nb = n as f64 + beta;
        let q = r * (nb + alpha + 2.0) / (nb + 1.0);
        if q < 1.0 {
            bound = term.norm() * q / (1.0 - q);
            if bound <= tol * sum.value().norm() {
                return Ok(KernelValue {
                    value: sum.value(),
                    tail_bound: bound,
                    terms,
                });
            }
        }
        coeff *= (nb + alpha + 2.0) / (nb + 1.0);
        power *= x;
        n += 1;
    }
    Err(Error::NoConvergence {
        op: OP,
        iterations: max_terms,
        achieved: bound / sum.value().norm(),
    })
}

/// Compensated (Neumaier) summation, componentwise.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct NeumaierComplex {
    re: Neumaier,
    im: Neumaier,
}

impl NeumaierComplex {
    pub(crate) fn add(&mut self, v: Complex64) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    pub(crate) fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
