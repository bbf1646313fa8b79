//! Generate the chain-count tables for both stacking directions and render
//! them in the published row layout, as CSV, and as an OEIS-style b-file.

use latstack::{grid, render_grid, Axis, GridFormat, GridSpec, DEFAULT_ELEMENT_BUDGET};

fn main() {
    let budget = DEFAULT_ELEMENT_BUDGET;

    let column = grid(&GridSpec {
        axis: Axis::Column,
        k: (0, 3),
        n: (0, 5),
        m: (0, 2),
        budget,
    })
    .unwrap();
    println!("column stacking Σ^k_n C^n_m, counts over n:");
    print!("{}", render_grid(&column, GridFormat::Table));

    let row = grid(&GridSpec {
        axis: Axis::Row,
        k: (0, 3),
        n: (0, 3),
        m: (0, 5),
        budget,
    })
    .unwrap();
    println!("\nrow stacking Σ^k_m C^n_m, counts over m:");
    print!("{}", render_grid(&row, GridFormat::Table));

    // One sequence as a b-file: the double factorials.
    let double_factorials = grid(&GridSpec {
        axis: Axis::Column,
        k: (1, 1),
        n: (0, 7),
        m: (1, 1),
        budget,
    })
    .unwrap();
    println!("\nb-file of the k=1, m=1 column sequence:");
    print!("{}", render_grid(&double_factorials, GridFormat::BFile));
}
