//! The bridge between beliefs and evidence is a bijection: every belief
//! whose focal elements are partition cells plus the whole frame encodes a
//! unique body of evidence, and fusing beliefs cumulatively is exactly
//! adding the evidence behind them.

use belief_fusion::{
    fuse_cumulative, fuse_evidence, implied_partition, to_bba, to_evidence, Bba, Frame,
};

fn main() -> belief_fusion::Result<()> {
    let frame = Frame::new(["Correct", "Faulty"])?;
    let correct = frame.subset_of_labels(["Correct"])?;
    let reading = Bba::new(frame.clone(), [(correct, 0.99), (frame.full_set(), 0.01)])?;

    // A mass of 0.99 against an uncommitted 0.01 is a strong claim: with
    // the default prior weight of 2 it takes 198 observations to make it.
    let partition = implied_partition(&reading)?;
    let evidence = to_evidence(&reading, &partition, 2.0)?;
    println!("m(Correct) = 0.99, m(frame) = 0.01");
    println!("equivalent observation counts: {:?}", evidence.counts());

    // The mapping loses nothing in either direction.
    let back = to_bba(&evidence);
    assert_eq!(back.mass(correct), reading.mass(correct));
    println!("round trip returns the original masses exactly");
    println!();

    // Cumulative fusion of beliefs == addition of evidence.
    let fused_beliefs = fuse_cumulative(&reading, &reading)?;
    let added_evidence = to_bba(&fuse_evidence(&evidence, &evidence)?);
    println!(
        "fused beliefs:  m(Correct) = {:.9}",
        fused_beliefs.mass(correct)
    );
    println!(
        "added evidence: m(Correct) = {:.9}",
        added_evidence.mass(correct)
    );
    println!();

    // Beliefs with nothing left on the frame sit at the edge of the
    // mapping: infinite evidence, described by its limit profile.
    let verdict = Bba::new(
        frame.clone(),
        [(correct, 0.75), (frame.subset_of_labels(["Faulty"])?, 0.25)],
    )?;
    let limit = to_evidence(&verdict, &partition, 2.0)?;
    let profile = limit.profile().expect("dogmatic evidence has a profile");
    println!(
        "dogmatic belief maps to a limit direction eta = {:?}, weight {}",
        profile.eta(),
        profile.weight()
    );

    // Finite evidence cannot move a dogmatic belief: fusing leaves it as is.
    let stubborn = fuse_cumulative(&verdict, &reading)?;
    assert_eq!(stubborn.mass(correct), verdict.mass(correct));
    println!("fusing finite evidence into a dogmatic belief changes nothing");

    Ok(())
}
