//! Serialize a stacked lattice to a JSON poset document, load it back, and
//! emit its Hasse diagram as DOT for Graphviz.

use latstack::{
    count_maximal_chains, export_dot, read_poset, star_sublattice, write_poset,
    DEFAULT_ELEMENT_BUDGET,
};

fn main() {
    let rep = star_sublattice(2, 2, 0, DEFAULT_ELEMENT_BUDGET).unwrap();

    let mut doc = write_poset(&rep.poset);
    doc.meta
        .insert("axis".into(), serde_json::Value::String("column".into()));
    for (key, value) in [("k", 2), ("n", 2), ("m", 0)] {
        doc.meta
            .insert(key.into(), serde_json::Value::Number(value.into()));
    }
    let json = doc.to_json();
    println!("--- poset document ---\n{json}\n");

    let loaded = read_poset(&latstack::PosetDocument::from_json(&json).unwrap()).unwrap();
    assert!(loaded.same_order(&rep.poset));
    println!(
        "reloaded {} elements, {} maximal chains",
        loaded.size(),
        count_maximal_chains(&loaded).unwrap()
    );

    println!("\n--- DOT ---\n{}", export_dot(&loaded));
}
