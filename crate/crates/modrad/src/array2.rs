//! Minimal row-major 2-D array used for sinograms, images, and spectra.

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Array2D<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Default> Array2D<T> {
    /// Allocate a `rows x cols` array filled with `T::default()`.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::default(); rows * cols] }
    }
}

impl<T> Array2D<T> {
    /// Build from a row-major vector; `data.len()` must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major length mismatch");
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [T] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks_exact(self.cols)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }
}

impl<T> std::ops::Index<(usize, usize)> for Array2D<T> {
    type Output = T;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Array2D<T> {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Array2D<f64> {
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, &x| a.max(x.abs()))
    }

    pub fn min(&self) -> f64 {
        self.data.iter().fold(f64::INFINITY, |a, &x| a.min(x))
    }

    pub fn max(&self) -> f64 {
        self.data.iter().fold(f64::NEG_INFINITY, |a, &x| a.max(x))
    }

    /// Euclidean norm over all entries.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip() {
        let mut a = Array2D::<f64>::zeros(3, 4);
        a[(2, 1)] = 7.5;
        assert_eq!(a[(2, 1)], 7.5);
        assert_eq!(a.row(2), &[0.0, 7.5, 0.0, 0.0]);
        assert_eq!(a.rows(), 3);
        assert_eq!(a.cols(), 4);
    }

    #[test]
    fn stats() {
        let a = Array2D::from_vec(1, 4, vec![-3.0, 1.0, 2.0, -0.5]);
        assert_eq!(a.max_abs(), 3.0);
        assert_eq!(a.min(), -3.0);
        assert_eq!(a.max(), 2.0);
        assert!((a.norm() - (9.0f64 + 1.0 + 4.0 + 0.25).sqrt()).abs() < 1e-15);
    }
}
