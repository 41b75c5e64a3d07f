//! The worked qubit relaxation model: precession at `omega`, population
//! transfer at `gamma_plus`/`gamma_minus`, extra dephasing at
//! `gamma_z`, with a closed-form propagator to check the exponential
//! against.
//!
//! Run with `cargo run -p lindbloch --example nmr_relaxation`.

use lindbloch::channels::{nmr_generator, nmr_matrix, NmrParams};
use lindbloch::evolution::{dynamical_matrix, homogeneous_matrix};
use lindbloch::HermitianBasis;

fn main() -> lindbloch::Result<()> {
    let params = NmrParams::new(2.0, 0.5, 0.2, 0.3)?;
    let (r1, r2) = params.rates();
    println!("rates for omega = 2, gamma+ = 0.5, gamma- = 0.2, gamma_z = 0.3:");
    println!("  longitudinal rate r1 = {r1:.3}   (1/T1 in lab terms)");
    println!("  transverse rate   r2 = {r2:.3}   (1/T2 in lab terms)");
    println!("  equilibrium z coordinate {:.6}\n", params.equilibrium_z());

    let basis = HermitianBasis::new(2)?;
    let sup = nmr_generator(&params)?.superop(&basis)?;

    println!("closed form against the exponentiated generator:");
    for &t in &[0.5, 1.5, 4.0] {
        let closed = nmr_matrix(&params, t)?;
        let exponentiated = homogeneous_matrix(&dynamical_matrix(&sup, t)?);
        println!(
            "  t = {t:3.1}: max entry difference {:.3e}",
            (&closed.h - &exponentiated.h).amax()
        );
    }

    println!("\nstarted at the maximally mixed state, z follows the translation:");
    for &t in &[0.0, 1.0, 2.0, 4.0, 8.0] {
        let dm = dynamical_matrix(&sup, t)?;
        println!("  t = {t:3.1}:  z(t) = {:.6}", dm.c[2]);
    }

    let balanced = NmrParams::new(2.0, 0.4, 0.4, 0.3)?;
    let dm = dynamical_matrix(&nmr_generator(&balanced)?.superop(&basis)?, 2.0)?;
    println!(
        "\nbalanced transfer rates leave no translation: |c| = {:.3e}",
        dm.c.norm()
    );
    Ok(())
}
