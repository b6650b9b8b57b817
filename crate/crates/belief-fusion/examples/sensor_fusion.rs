//! Two independent sensors agree. How certain should the combination be?
//! The answer depends on what "two sensors" means: twice the evidence, or
//! two filters applied to the same truth.

use belief_fusion::{fuse_cumulative, fuse_dempster, Bba, Frame};

fn main() -> belief_fusion::Result<()> {
    let frame = Frame::new(["Correct", "Faulty"])?;
    let correct = frame.subset_of_labels(["Correct"])?;
    let reading = Bba::new(frame.clone(), [(correct, 0.99), (frame.full_set(), 0.01)])?;

    println!("each sensor: Correct 0.99, undecided 0.01");
    println!();

    let cumulative = fuse_cumulative(&reading, &reading)?;
    let dempster = fuse_dempster(&reading, &reading)?;

    println!(
        "cumulative  m(Correct) = {:.6}   m(frame) = {:.6}",
        cumulative.mass(correct),
        cumulative.theta_mass()
    );
    println!(
        "dempster    m(Correct) = {:.6}   m(frame) = {:.6}",
        dempster.mass(correct),
        dempster.theta_mass()
    );

    println!();
    println!("Dempster multiplies the leftover uncertainties (0.01 * 0.01 =");
    println!("0.0001): agreement compounds fast. The cumulative rule treats");
    println!("the second sensor as more observations of the same process, so");
    println!("uncertainty shrinks from 0.01 to 2/398 -- meaningfully, but an");
    println!("order of magnitude less aggressively.");

    // The cumulative masses are exact fractions of the pooled evidence.
    assert!((cumulative.mass(correct) - 396.0 / 398.0).abs() < 1e-12);
    assert!((cumulative.theta_mass() - 2.0 / 398.0).abs() < 1e-12);

    Ok(())
}
