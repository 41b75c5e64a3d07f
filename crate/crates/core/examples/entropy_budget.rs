//! Splitting an entropy change into production and exchange relative to
//! a stationary state: exchange vanishes for unital maps, and a pure
//! fixed point drives the exchange term to a signed infinity.
//!
//! Run with `cargo run -p lindbloch --example entropy_budget`.

use lindbloch::bloch::CMatrix;
use lindbloch::channels::{amplitude_damping, depolarizing};
use lindbloch::entropy::{entropy_production_exchange, relative_entropy};
use lindbloch::random;
use num_complex::Complex64;

fn main() -> lindbloch::Result<()> {
    let mut rng = random::seeded_rng(23);
    let rho_in = random::density_matrix(2, &mut rng);

    println!("depolarizing channel, stationary state I/2 (unital):");
    let center = CMatrix::identity(2, 2) * Complex64::new(0.5, 0.0);
    let rho_out = depolarizing(0.4)?.channel.apply(&rho_in)?;
    let split = entropy_production_exchange(&rho_in, &rho_out, &center)?;
    println!("  entropy change  {:+.6}", split.delta_s);
    println!("  exchange        {:+.3e}  (zero for unital maps)", split.delta_e);
    println!("  production      {:+.6}  (never negative)\n", split.delta_p);

    println!("relative entropy to the stationary state is what production spends:");
    let before = relative_entropy(&rho_in, &center)?;
    let after = relative_entropy(&rho_out, &center)?;
    println!("  D(rho_in | I/2)  = {before:.6}");
    println!("  D(rho_out | I/2) = {after:.6}");
    println!("  drop             = {:.6} = production\n", before - after);

    println!("amplitude damping, stationary state |0><0| (pure):");
    let damping = amplitude_damping(0.35)?;
    let mut ground = CMatrix::zeros(2, 2);
    ground[(0, 0)] = Complex64::ONE;
    let rho_out = damping.channel.apply(&rho_in)?;
    let split = entropy_production_exchange(&rho_in, &rho_out, &ground)?;
    println!("  entropy change  {:+.6}", split.delta_s);
    println!("  exchange        {:+.3}  (ln 0 from the empty excited level)", split.delta_e);
    println!("  production      {:+.3}", split.delta_p);
    println!("  the bound production >= 0 still holds, trivially\n");

    println!("a state already at the fixed point exchanges nothing:");
    let settled = damping.channel.apply(&ground)?;
    let split = entropy_production_exchange(&ground, &settled, &ground)?;
    println!(
        "  change {:+.3e}, exchange {:+.3e}, production {:+.3e}",
        split.delta_s, split.delta_e, split.delta_p
    );
    Ok(())
}
