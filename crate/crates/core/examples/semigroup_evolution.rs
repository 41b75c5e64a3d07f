//! From a Hamiltonian and jump operators to a real matrix semigroup on
//! Bloch coordinates, evolved over a time grid.
//!
//! Run with `cargo run -p lindbloch --example semigroup_evolution`.

use lindbloch::bloch::{vectorize, CMatrix};
use lindbloch::evolution::{dynamical_matrix, evolve, semigroup_defect};
use lindbloch::lindblad::LindbladGenerator;
use lindbloch::HermitianBasis;
use num_complex::Complex64;

fn main() -> lindbloch::Result<()> {
    let basis = HermitianBasis::new(2)?;

    let sz = CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ONE,
            Complex64::ZERO,
            Complex64::ZERO,
            -Complex64::ONE,
        ],
    );
    let sx = CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ZERO,
            Complex64::ONE,
            Complex64::ONE,
            Complex64::ZERO,
        ],
    );

    let gen = LindbladGenerator::new(&sz * Complex64::new(0.8, 0.0), vec![
        &sx * Complex64::new(0.4, 0.0),
    ])?;
    let sup = gen.superop(&basis)?;

    println!("superoperator matrix on (x, y, z):");
    for i in 0..3 {
        println!(
            "  [{:8.4} {:8.4} {:8.4}]",
            sup.lambda[(i, 0)],
            sup.lambda[(i, 1)],
            sup.lambda[(i, 2)]
        );
    }
    let (unital, defect) = gen.is_unital();
    println!("unital: {unital} (defect {defect:.2e})\n");

    let mut plus = CMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            plus[(i, j)] = Complex64::new(0.5, 0.0);
        }
    }
    let x0 = vectorize(&plus, &basis)?.bloch;

    println!("  t       x           y           z          purity");
    for k in 0..=8 {
        let t = 0.25 * k as f64;
        let dm = dynamical_matrix(&sup, t)?;
        let x = evolve(&dm, &x0)?;
        println!(
            "{t:5.2}  {:10.6}  {:10.6}  {:10.6}  {:10.6}",
            x.coords[0],
            x.coords[1],
            x.coords[2],
            0.5 + x.norm_squared()
        );
    }

    let defect = semigroup_defect(&sup, 0.7, 1.1)?;
    println!("\nsemigroup law M(0.7 + 1.1) vs M(0.7) M(1.1): defect {defect:.3e}");
    Ok(())
}
