//! Frames, subsets, and the two readings of a mass assignment: the
//! conservative lower bound (belief) and the decision-ready spread
//! (pignistic probability).

use belief_fusion::{Bba, Frame};

fn main() -> belief_fusion::Result<()> {
    let frame = Frame::new(["sunny", "cloudy", "rain"])?;

    // Mass goes to subsets, not just outcomes: 0.3 says "cloudy or rain,
    // no opinion which", and 0.2 stays on the whole frame as ignorance.
    let forecast = Bba::new(
        frame.clone(),
        [
            (frame.subset_of_labels(["sunny"])?, 0.5),
            (frame.subset_of_labels(["cloudy", "rain"])?, 0.3),
            (frame.full_set(), 0.2),
        ],
    )?;

    println!("focal elements:");
    for (subset, mass) in forecast.focal_elements() {
        println!("  {:?}: {mass}", frame.subset_labels(subset));
    }

    let wet = frame.subset_of_labels(["cloudy", "rain"])?;
    println!();
    println!(
        "belief(wet)    = {:.6}  (mass provably inside the subset)",
        forecast.belief(wet)?
    );
    println!(
        "pignistic(wet) = {:.6}  (ignorance split evenly for a bet)",
        forecast.pignistic(wet)?
    );

    // Singleton pignistic values always form a probability distribution.
    println!();
    for i in 0..frame.cardinality() {
        let s = frame.singleton(i)?;
        println!(
            "{:<8} belief {:.6}  pignistic {:.6}",
            frame.label(i),
            forecast.belief(s)?,
            forecast.pignistic(s)?
        );
    }

    let tags: Vec<String> = forecast.classify().iter().map(|t| t.to_string()).collect();
    println!();
    println!("structure: {}", tags.join(" "));

    Ok(())
}
