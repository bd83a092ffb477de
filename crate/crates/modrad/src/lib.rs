//! # modrad
//!
//! Tomography with modulo-folded measurements: simulate band-limited
//! parallel-beam scans of analytic phantoms, fold them through a modulo
//! ADC, undo the folding losslessly in the Fourier domain, and reconstruct
//! images by filtered back-projection or a direct Fourier method on a
//! nonuniform FFT.
//!
//! The crate is organized as a pipeline:
//!
//! 1. [`phantom`] — analytic ellipse phantoms and their closed-form line
//!    integrals.
//! 2. [`sinogram`] + [`forward`] — band-limited sinogram synthesis, modulo
//!    folding, and noise models.
//! 3. [`unfold`] — sparse spectral recovery of the unfolded sinogram from
//!    folded samples.
//! 4. [`fbp`] / [`dfr`] — image reconstruction (spatial filtered
//!    back-projection, or polar-grid direct Fourier via [`nfft`]).
//! 5. [`metrics`] — image quality numbers used by the experiment harness.
//!
//! ```
//! use modrad::geometry::ScanGeometry;
//!
//! let g = ScanGeometry::symmetric(171, 180, 180.0).unwrap();
//! assert_eq!(g.n(), 342);
//! assert_eq!(g.n_omega(), 58);
//! ```

pub mod array2;
pub mod error;
pub mod fft;
pub mod geometry;
pub mod phantom;

pub use array2::Array2D;
pub use error::{ModradError, Result};
