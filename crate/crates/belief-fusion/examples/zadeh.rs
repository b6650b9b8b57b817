//! Two witnesses nearly rule out the same suspect, and Dempster's rule
//! convicts him anyway. The cumulative rule keeps the disagreement visible.

use belief_fusion::{fuse_conjunctive, fuse_cumulative, fuse_dempster, Bba, Frame};

fn main() -> belief_fusion::Result<()> {
    let frame = Frame::new(["Peter", "Paul", "Mary"])?;
    let witness_a = Bba::new(
        frame.clone(),
        [
            (frame.subset_of_labels(["Peter"])?, 0.99),
            (frame.subset_of_labels(["Paul"])?, 0.01),
        ],
    )?;
    let witness_b = Bba::new(
        frame.clone(),
        [
            (frame.subset_of_labels(["Paul"])?, 0.01),
            (frame.subset_of_labels(["Mary"])?, 0.99),
        ],
    )?;

    println!("witness A: Peter 0.99, Paul 0.01");
    println!("witness B: Paul 0.01, Mary 0.99");
    println!();

    // The witnesses contradict each other almost completely.
    let combined = fuse_conjunctive(&witness_a, &witness_b)?;
    println!("conjunctive conflict: {:.4}", combined.conflict());
    println!();

    let dempster = fuse_dempster(&witness_a, &witness_b)?;
    let cumulative = fuse_cumulative(&witness_a, &witness_b)?;

    println!(
        "{:<12} {:>10} {:>10} {:>10}",
        "rule", "Peter", "Paul", "Mary"
    );
    for (name, bba) in [("dempster", &dempster), ("cumulative", &cumulative)] {
        print!("{name:<12}");
        for i in 0..frame.cardinality() {
            print!(" {:>10.4}", bba.mass(frame.singleton(i)?));
        }
        println!();
    }

    println!();
    println!("Dempster's rule throws away the 0.9999 of conflicting mass and");
    println!("renormalises what is left: Paul, whom both witnesses nearly");
    println!("excluded, gets everything. The cumulative rule pools the two");
    println!("bodies of evidence instead and leaves Paul at 0.01.");

    Ok(())
}
