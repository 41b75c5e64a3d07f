//! Splitting a dynamical matrix into rotation times scaling, and
//! reducing commuting parts to rotation blocks with per-block
//! contraction rates.
//!
//! Run with `cargo run -p lindbloch --example polar_structure`.

use lindbloch::bloch::CMatrix;
use lindbloch::decomposition::{
    canonical_form, classify_isotropy, polar, spheroid_class, Isotropy,
};
use lindbloch::evolution::dynamical_matrix;
use lindbloch::lindblad::LindbladGenerator;
use lindbloch::{Error, HermitianBasis};
use num_complex::Complex64;

fn pauli() -> [CMatrix; 3] {
    let i = Complex64::new(0.0, 1.0);
    let z = Complex64::ZERO;
    let one = Complex64::ONE;
    [
        CMatrix::from_row_slice(2, 2, &[z, one, one, z]),
        CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        CMatrix::from_row_slice(2, 2, &[one, z, z, -one]),
    ]
}

fn main() -> lindbloch::Result<()> {
    let basis = HermitianBasis::new(2)?;
    let [sx, sy, sz] = pauli();

    let gen = LindbladGenerator::new(&sz * Complex64::new(1.2, 0.0), vec![
        &sx * Complex64::new(0.5, 0.0),
        &sy * Complex64::new(0.5, 0.0),
        &sz * Complex64::new(0.3, 0.0),
    ])?;
    let sup = gen.superop(&basis)?;
    let dm = dynamical_matrix(&sup, 0.9)?;

    let parts = polar(&dm.m)?;
    println!("map at t = 0.9:");
    println!("  commute defect |RS - SR|   {:.3e}", parts.commute_defect);
    println!("  det R                      {:+.6}", parts.det_r);
    println!(
        "  reconstruction |SR - M|    {:.3e}",
        (parts.reconstruct() - &dm.m).norm()
    );

    let cf = canonical_form(&parts, 1e-9)?;
    println!("\ncanonical blocks (sorted by contraction, then angle):");
    for b in &cf.blocks {
        println!(
            "  dim {}  angle {:8.5}  lambda {:8.5}  scale e^-lambda = {:.5}",
            b.dim,
            b.theta,
            b.lambda,
            (-b.lambda).exp()
        );
    }
    let isotropy = match classify_isotropy(&cf, 1e-8) {
        Isotropy::Isotropic => "isotropic",
        Isotropy::Anisotropic => "anisotropic",
    };
    println!("  fixed axis present: {}", cf.has_fixed_block);
    println!("  scaling profile:    {isotropy}, {:?} image", spheroid_class(&cf)?);

    println!("\na non-normal matrix refuses the block form:");
    let tilted = LindbladGenerator::new(&sx * Complex64::new(0.5, 0.0), vec![
        &sz * Complex64::new(0.9, 0.0),
    ])?;
    let sup = tilted.superop(&basis)?;
    let dm = dynamical_matrix(&sup, 1.0)?;
    let parts = polar(&dm.m)?;
    match canonical_form(&parts, 1e-9) {
        Err(Error::NonCommutingParts { defect, .. }) => {
            println!("  rejected, commute defect {defect:.3e}");
        }
        other => println!("  unexpected outcome: {other:?}"),
    }
    Ok(())
}
