//! Lattice series and the transport calculus: a sequence of join- and
//! bottom-preserving, order-reflecting, down-closed embeddings lets meets
//! and joins in the stacked lattice be computed stage-wise, moving elements
//! up (x^k) and down (x^{-j}) along the maps.

use latstack::{column_series, lax_sum_meet_join, Error, LatticeSeries, DEFAULT_ELEMENT_BUDGET};

fn main() {
    let budget = DEFAULT_ELEMENT_BUDGET;
    let (stage0, maps) = column_series(3, 1, budget).unwrap();
    let series = LatticeSeries::new(stage0, &maps).unwrap();

    // Upward transport composes the embeddings; downward transport inverts
    // them where defined.
    let up = series.transport(1, 1, 3).unwrap();
    println!(
        "transport of {:?} from stage 1 to stage 3: {:?}",
        series.stages()[1].label(1).unwrap(),
        series.stages()[3].label(up).unwrap()
    );
    let down = series.transport(3, up, 1).unwrap();
    assert_eq!(down, 1);
    match series.transport(2, 3, 1) {
        Err(Error::NotInImage { element, stage, to }) => println!(
            "element {element} of stage {stage} has no preimage at stage {to} (as expected)"
        ),
        other => panic!("expected a not-in-image error, got {other:?}"),
    }

    // The stage-wise meet/join formulas agree with the carrier's own order.
    let sum = series.partial_sum(3).unwrap();
    let carrier = sum.carrier();
    let mut checked = 0;
    for a in 0..carrier.size() {
        for b in 0..carrier.size() {
            assert_eq!(
                lax_sum_meet_join(&sum, a, b).unwrap(),
                carrier.meet_join(a, b).unwrap()
            );
            checked += 1;
        }
    }
    println!(
        "stage-wise meet/join formulas verified on all {checked} pairs of Σ_3 C^3_1 ({} elements)",
        carrier.size()
    );
}
