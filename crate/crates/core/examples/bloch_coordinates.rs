//! Coordinates of states and Hermitian matrices in the orthonormal
//! basis used throughout the crate: the identity component plus the
//! generalized Gell-Mann directions.
//!
//! Run with `cargo run -p lindbloch --example bloch_coordinates`.

use lindbloch::bloch::{is_physical_state, reconstruct, vectorize, HermitianDecomp};
use lindbloch::{random, HermitianBasis};
use num_complex::Complex64;

fn main() -> lindbloch::Result<()> {
    let basis = HermitianBasis::new(2)?;

    let mut excited = lindbloch::bloch::CMatrix::zeros(2, 2);
    excited[(0, 0)] = Complex64::ONE;
    let decomp = vectorize(&excited, &basis)?;
    println!("|0><0| in Bloch coordinates:");
    println!("  trace      {:.6}", decomp.trace);
    println!(
        "  coords     ({:.6}, {:.6}, {:.6})",
        decomp.bloch.coords[0], decomp.bloch.coords[1], decomp.bloch.coords[2]
    );
    println!(
        "  |x|^2      {:.6}  (pure states sit on the sphere (d-1)/d = {:.6})",
        decomp.bloch.norm_squared(),
        decomp.bloch.ball_radius_squared()
    );

    let back = reconstruct(&decomp, &basis)?;
    let roundtrip = (&back - &excited).norm();
    println!("  roundtrip  {roundtrip:.3e}\n");

    println!("norm identity |x(a)|^2 = Tr a^2 - (Tr a)^2 / d:");
    let mut rng = random::seeded_rng(7);
    for d in [2usize, 3, 4] {
        let basis = HermitianBasis::new(d)?;
        let a = random::hermitian(d, &mut rng);
        let x = vectorize(&a, &basis)?.bloch;
        let tr = a.trace().re;
        let tr_sq = (&a * &a).trace().re;
        println!(
            "  d = {d}:  |x|^2 = {:.12}   identity gives {:.12}",
            x.norm_squared(),
            tr_sq - tr * tr / d as f64
        );
    }

    println!("\nnot every point inside the coordinate ball is a state:");
    let basis = HermitianBasis::new(3)?;
    let mut coords = nalgebra::DVector::zeros(8);
    coords[7] = 0.75;
    let candidate = lindbloch::BlochVector::new(3, coords)?;
    let (physical, min_eig) =
        is_physical_state(&HermitianDecomp::state(candidate), &basis)?;
    println!(
        "  (0, ..., 0.75) for d = 3 lies inside the ball of radius {:.4},",
        (2.0f64 / 3.0).sqrt()
    );
    println!(
        "  yet physical = {physical}: smallest eigenvalue {min_eig:.4}"
    );
    Ok(())
}
