//! Linear entropy along unital semigroups: the closed-form curve, the
//! prediction from canonical-subspace weights, and the von Neumann
//! comparison for a qubit.
//!
//! Run with `cargo run -p lindbloch --example entropy_laws`.

use lindbloch::bloch::vectorize;
use lindbloch::decomposition::fit_rates;
use lindbloch::entropy::{
    isotropic_entropy_curve, linear_entropy_from_bloch, predicted_linear_entropy,
    qubit_vn_isotropic_curve, SubspaceWeights,
};
use lindbloch::evolution::{dynamical_matrix, evolve};
use lindbloch::lindblad::LindbladGenerator;
use lindbloch::{random, HermitianBasis};

fn main() -> lindbloch::Result<()> {
    let times: Vec<f64> = (0..=6).map(|k| 0.5 * k as f64).collect();

    println!("isotropic decay in d = 4 from a pure state:");
    let curve = isotropic_entropy_curve(1.0, 4, 0.0, &times)?;
    let basis = HermitianBasis::new(4)?;
    let sup = LindbladGenerator::isotropic(4, 1.0)?.superop(&basis)?;
    let mut rng = random::seeded_rng(11);
    let x0 = vectorize(&random::pure_state(4, &mut rng), &basis)?.bloch;
    println!("  t      closed form   direct");
    for (t, v) in times.iter().zip(&curve.values) {
        let x = evolve(&dynamical_matrix(&sup, *t)?, &x0)?;
        println!("  {t:4.1}   {v:.9}   {:.9}", linear_entropy_from_bloch(&x)?);
    }
    println!("  cap (d-1)/d = 0.75 is approached from below\n");

    println!("anisotropic qubit decay predicted from subspace weights:");
    let basis = HermitianBasis::new(2)?;
    let gen = LindbladGenerator::pure_dephasing(0.6)?;
    let sup = gen.superop(&basis)?;
    let fit_times: Vec<f64> = (1..=30).map(|k| 0.1 * k as f64).collect();
    let fit = fit_rates(&sup, &fit_times, 1e-9)?;
    let x0 = vectorize(&random::density_matrix(2, &mut rng), &basis)?.bloch;
    let weights = SubspaceWeights::from_bloch_in_basis(&x0, &fit.k)?;
    println!("  t      predicted     direct");
    for &t in &times {
        let x = evolve(&dynamical_matrix(&sup, t)?, &x0)?;
        let predicted = predicted_linear_entropy(&weights, &fit.gammas, 2, t)?;
        println!(
            "  {t:4.1}   {predicted:.9}   {:.9}",
            linear_entropy_from_bloch(&x)?
        );
    }
    println!("  populations freeze, so the entropy saturates below the cap\n");

    println!("qubit von Neumann entropy for isotropic decay, rate 0.5:");
    let vn = qubit_vn_isotropic_curve(0.5, 1.0, &times)?;
    for (t, v) in times.iter().zip(&vn.values) {
        println!("  t = {t:4.1}   S_vN = {v:.9}");
    }
    println!("  the limit is ln 2 = {:.9}", std::f64::consts::LN_2);
    Ok(())
}
