//! Adaptive Gauss-Legendre integration on a finite interval.

use std::collections::BinaryHeap;

use super::jacobi::radial_rule;
use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 200;
const MAX_PANELS: usize = 200_000;

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    /// Sum of `|coarse - refined|` over the final panels.
    pub error_estimate: f64,
    pub panels: usize,
}

/// Integrates `f` over `(lo, hi)` with `order`-point Gauss-Legendre panels.
///
/// Each panel carries the difference between its own estimate and the sum
/// over its two halves. The panel with the largest difference is bisected
/// until the total falls below `tol` times the magnitude of the integral.
/// Endpoint singularities of power type are handled by repeated bisection
/// toward the endpoint.
pub fn adaptive_gauss_legendre(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tol: f64,
    order: usize,
) -> Result<Integral> {
    let base = radial_rule(order, 0.0, 0.0)?;
    let panel = |a: f64, b: f64| -> f64 {
        let h = b - a;
        base.iter().map(|(u, w)| w * f(a + h * u)).sum::<f64>() * h
    };
    let split = |a: f64, b: f64, depth: u32| -> Panel {
        let coarse = panel(a, b);
        let mid = 0.5 * (a + b);
        let fine = panel(a, mid) + panel(mid, b);
        Panel {
            a,
            b,
            value: fine,
            error: (fine - coarse).abs(),
            depth,
        }
    };

    let mut heap = BinaryHeap::new();
    let first = split(lo, hi, 0);
    let mut value = first.value;
    let mut error = first.error;
    heap.push(first);

    loop {
        if error <= tol * value.abs() || error < 1e-300 {
            break;
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        if worst.depth >= MAX_DEPTH || heap.len() >= MAX_PANELS {
            return Err(Error::NoConvergence {
                op: "adaptive_gauss_legendre",
                iterations: heap.len() + 1,
                achieved: error / value.abs().max(1e-300),
            });
        }
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // interval exhausted at machine resolution; drop its error
            error -= worst.error;
            heap.push(Panel { error: 0.0, ..worst });
            continue;
        }
        let left = split(worst.a, mid, worst.depth + 1);
        let right = split(mid, worst.b, worst.depth + 1);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    let value = heap.iter().map(|p| p.value).sum();
    let error_estimate = heap.iter().map(|p| p.error).sum();
    Ok(Integral {
        value,
        error_estimate,
        panels: heap.len(),
    })
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}
