//! From raw counts to beliefs: draw balls from an urn, track the evidence,
//! and regroup the outcomes without changing any conclusions.

use belief_fusion::{to_bba, DirichletEvidence, Frame, Partition};

fn main() -> belief_fusion::Result<()> {
    let frame = Frame::new(["red", "black", "yellow"])?;

    // Eight draws with replacement: six red, one black, one yellow.
    let evidence =
        DirichletEvidence::new(Partition::identity(frame.clone()), vec![6.0, 1.0, 1.0], 2.0)?;

    println!("observations: red 6, black 1, yellow 1");
    println!();
    for (j, label) in frame.labels().iter().enumerate() {
        println!("E({label:<7}) = {:.6}", evidence.expectation(j).value());
    }

    // The same evidence as a belief function: counts become committed mass,
    // the prior weight stays on the whole frame.
    let bba = to_bba(&evidence);
    let red = frame.subset_of_labels(["red"])?;
    println!();
    println!(
        "as beliefs: m(red) = {:.4}, m(frame) = {:.4}",
        bba.mass(red),
        bba.theta_mass()
    );
    println!("pignistic(red) = {:.6}", bba.pignistic(red)?);

    // Regrouping the frame cannot change what the evidence says about the
    // groups: red keeps its expectation of 2/3.
    let other = frame.subset_of_labels(["black", "yellow"])?;
    let coarse = Partition::new(frame.clone(), vec![red, other])?;
    let grouped = evidence.coarsen(&coarse)?;
    println!();
    println!(
        "after grouping black and yellow: E(red) = {:.6}, E(other) = {:.6}",
        grouped.expectation(0).value(),
        grouped.expectation(1).value()
    );

    // More draws sharpen the posterior; the frame mass is the prior's
    // shrinking share of the total.
    let more = evidence.add_observations(&[30.0, 5.0, 5.0])?;
    let sharper = to_bba(&more);
    println!();
    println!(
        "after 40 more draws: E(red) = {:.6}, m(frame) = {:.4}",
        more.expectation(0).value(),
        sharper.theta_mass()
    );

    Ok(())
}
