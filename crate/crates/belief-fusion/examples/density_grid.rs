//! Behind every body of evidence stands a full posterior over the cell
//! probabilities. Sample it on a grid, locate its peak, and export it.

use belief_fusion::{DirichletEvidence, Frame, Partition};

fn main() -> belief_fusion::Result<()> {
    let frame = Frame::new(["works", "fails"])?;

    // Six successes, two failures, prior weight two: shape (7, 3).
    let evidence = DirichletEvidence::new(Partition::identity(frame.clone()), vec![6.0, 2.0], 2.0)?;

    println!("posterior density over p(works), given 6 successes / 2 failures:");
    println!();
    let grid = evidence.density_grid(20)?;
    for (point, value) in grid.iter() {
        let bar = "#".repeat((value * 12.0).round() as usize);
        println!("  p = {:>5.2}  {value:>8.4}  {bar}", point[0]);
    }

    // The mode sits at 0.75, the mean slightly below it.
    let peak = (0..grid.len())
        .max_by(|a, b| grid.value(*a).total_cmp(&grid.value(*b)))
        .unwrap();
    println!();
    println!("mode near p = {:.2}", grid.point(peak)[0]);
    println!("mean  E(works) = {:.6}", evidence.expectation(0).value());

    // Point evaluation works anywhere on the simplex, including boundaries
    // where the shape decides between zero and divergence.
    println!(
        "density at p = 0.75: {:.6}",
        evidence.density_at(&[0.75, 0.25])?
    );
    println!(
        "density at p = 0:    {:.6}",
        evidence.density_at(&[0.0, 1.0])?
    );

    // The same export the `density` subcommand writes as CSV.
    let mut csv = Vec::new();
    evidence.density_grid(4)?.write_csv(&mut csv)?;
    println!();
    println!("CSV export at resolution 4:");
    print!("{}", String::from_utf8_lossy(&csv));

    Ok(())
}
