//! Thin wrappers over rustfft with numpy-compatible conventions.
//!
//! Forward transform: `X[n] = sum_k x[k] exp(-2*pi*i*n*k/N)` (no scaling).
//! Inverse transform: `x[k] = (1/N) sum_n X[n] exp(+2*pi*i*n*k/N)`.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::cell::RefCell;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// In-place forward DFT (unscaled).
pub fn fft_inplace(buf: &mut [Complex64]) {
    PLANNER.with(|p| {
        let fft = p.borrow_mut().plan_fft_forward(buf.len());
        fft.process(buf);
    });
}

/// In-place inverse DFT, scaled by 1/N.
pub fn ifft_inplace(buf: &mut [Complex64]) {
    let n = buf.len();
    PLANNER.with(|p| {
        let fft = p.borrow_mut().plan_fft_inverse(n);
        fft.process(buf);
    });
    let s = 1.0 / n as f64;
    for v in buf.iter_mut() {
        *v *= s;
    }
}

/// Forward DFT of a real slice.
pub fn fft_real(x: &[f64]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_inplace(&mut buf);
    buf
}

/// Forward DFT of a complex slice (copying).
pub fn fft(x: &[Complex64]) -> Vec<Complex64> {
    let mut buf = x.to_vec();
    fft_inplace(&mut buf);
    buf
}

/// Inverse DFT of a complex slice (copying, 1/N scaled).
pub fn ifft(x: &[Complex64]) -> Vec<Complex64> {
    let mut buf = x.to_vec();
    ifft_inplace(&mut buf);
    buf
}

/// Signed DFT bin index for position `n` of an `len`-point transform:
/// 0, 1, ..., len/2-1, -len/2, ..., -1 (numpy `fftfreq(len) * len`).
#[inline]
pub fn bin_index(n: usize, len: usize) -> i64 {
    if n <= (len - 1) / 2 {
        n as i64
    } else {
        n as i64 - len as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let x: Vec<f64> = (0..17).map(|k| (k as f64 * 0.7).sin()).collect();
        let spec = fft_real(&x);
        let back = ifft(&spec);
        for (a, b) in x.iter().zip(back.iter()) {
            assert!((a - b.re).abs() < 1e-12);
            assert!(b.im.abs() < 1e-12);
        }
    }

    #[test]
    fn delta_spectrum_is_flat() {
        let mut x = vec![Complex64::default(); 8];
        x[0] = Complex64::new(1.0, 0.0);
        let spec = fft(&x);
        for v in spec {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn bin_indices_match_fftfreq() {
        assert_eq!(
            (0..8).map(|n| bin_index(n, 8)).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, -4, -3, -2, -1]
        );
        assert_eq!(
            (0..7).map(|n| bin_index(n, 7)).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, -3, -2, -1]
        );
    }
}
