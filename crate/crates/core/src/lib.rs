//! Bloch-space representation of finite-dimensional quantum states and
//! Lindblad dynamics.
//!
//! Density matrices become real vectors through an orthonormal Hermitian
//! basis, and dynamical maps become real matrices acting on those
//! vectors. On that footing the crate provides:
//!
//! - [`bloch`]: the basis, vectorization, and state-ball geometry.
//! - [`lindblad`]: generators from Hamiltonian and jump operators, their
//!   real superoperator matrices, unitality and complete positivity.
//! - [`evolution`]: dynamical matrices `e^{t Lambda}` with affine
//!   translation parts, homogeneous embeddings, semigroup checks.
//! - [`decomposition`]: the commuting rotation-scaling (polar) split of
//!   a normal map, canonical plane-and-axis block form, rate fitting,
//!   and spheroid classification of qubit images.
//! - [`entropy`]: linear and von Neumann entropy, closed-form decay
//!   laws, relative entropy, and the production-exchange split.
//! - [`channels`]: the qubit channel gallery, Kraus-to-affine
//!   conversion, and the NMR relaxation model.
//! - [`cli`]: the `lindbloch` binary's configuration schema and
//!   commands.
//!
//! # Example
//!
//! Isotropic decay contracts every Bloch coordinate at one rate, and the
//! linear entropy of an initially pure state follows a closed form:
//!
//! ```
//! use lindbloch::bloch::{BlochVector, HermitianBasis};
//! use lindbloch::evolution::{dynamical_matrix, evolve};
//! use lindbloch::lindblad::LindbladGenerator;
//! use nalgebra::DVector;
//!
//! let basis = HermitianBasis::new(2)?;
//! let generator = LindbladGenerator::isotropic(2, 1.0)?;
//! let sup = generator.superop(&basis)?;
//! let x0 = BlochVector::new(2, DVector::from_vec(vec![0.0, 0.0, 0.5]))?;
//! let xt = evolve(&dynamical_matrix(&sup, 0.3)?, &x0)?;
//! assert!((xt.coords[2] - 0.5 * (-0.3f64).exp()).abs() < 1e-12);
//! # Ok::<(), lindbloch::error::Error>(())
//! ```

pub mod bloch;
pub mod channels;
pub mod cli;
pub mod decomposition;
pub mod entropy;
pub mod error;
pub mod evolution;
pub mod lindblad;
pub mod random;

pub use bloch::{BlochVector, HermitianBasis};
pub use error::{Error, Result};
