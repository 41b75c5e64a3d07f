//! The standard qubit channels as affine maps on Bloch coordinates:
//! flips shrink two axes, depolarizing shrinks all three, amplitude
//! damping adds a translation toward the ground state.
//!
//! Run with `cargo run -p lindbloch --example channel_gallery`.

use lindbloch::channels::{amplitude_damping, bit_flip, channel_to_affine, depolarizing, phase_flip};
use lindbloch::lindblad::{choi_matrix, min_hermitian_eigenvalue};
use lindbloch::HermitianBasis;

fn main() -> lindbloch::Result<()> {
    let p = 0.3;
    let basis = HermitianBasis::new(2)?;

    println!("diagonal affine forms at p = {p}:");
    for (name, gallery) in [
        ("bit flip     ", bit_flip(p)?),
        ("phase flip   ", phase_flip(p)?),
        ("depolarizing ", depolarizing(p)?),
    ] {
        let m = &gallery.affine.m;
        println!(
            "  {name} diag({:+.2}, {:+.2}, {:+.2})",
            m[(0, 0)],
            m[(1, 1)],
            m[(2, 2)]
        );
    }

    let damping = amplitude_damping(p)?;
    let affine = damping.homogeneous.affine();
    println!(
        "  damping       diag({:+.4}, {:+.4}, {:+.4}) with shift (0, 0, {:.4})",
        affine.m[(0, 0)],
        affine.m[(1, 1)],
        affine.m[(2, 2)],
        affine.c[2]
    );

    println!("\ncomplete positivity via the smallest Choi eigenvalue:");
    for (name, channel) in [
        ("bit flip", bit_flip(p)?.channel),
        ("damping ", amplitude_damping(p)?.channel),
    ] {
        let choi = choi_matrix(2, |e| channel.apply(e).expect("probe fits"));
        println!("  {name}  {:+.3e}", min_hermitian_eigenvalue(&choi)?);
    }

    println!("\ntomography recovers the printed forms from the Kraus operators:");
    let (m, c) = channel_to_affine(&depolarizing(p)?.channel, &basis)?;
    println!(
        "  depolarizing: max |T - (1-p) I| entry = {:.3e}, |c| = {:.3e}",
        (m - nalgebra::DMatrix::identity(3, 3) * (1.0 - p)).amax(),
        c.norm()
    );

    let composed = phase_flip(0.2)?.channel.compose(&bit_flip(0.1)?.channel)?;
    let (m, _) = channel_to_affine(&composed, &basis)?;
    println!("\ncomposition multiplies the affine forms:");
    println!(
        "  phase_flip(0.2) after bit_flip(0.1): diag({:+.4}, {:+.4}, {:+.4})",
        m[(0, 0)],
        m[(1, 1)],
        m[(2, 2)]
    );
    Ok(())
}
