//! Exhaustive search for the frozen pre-polytope witness: the first rank-3
//! sggi (domain size ascending, generator triples in lexicographic order)
//! that fails the intersection condition while its coset geometry passes
//! axioms A and B and fails only C.
//!
//! Run with `cargo run --release --example find_witness [max_points]`.
//! The default bound of 8 points takes a few minutes.

use polycov::reconstruct::witness::search_non_c_witness;
use polycov::reconstruct::polytope_from_group;

fn main() {
    let max_points: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let start = std::time::Instant::now();
    match search_non_c_witness(max_points) {
        Ok(Some(s)) => {
            println!("witness found in {:.1?}", start.elapsed());
            println!("{}", s.to_json());
            println!("order: {}", s.order());
            println!(
                "schlafli type: {}",
                s.schlafli_type().map(|t| t.to_string()).unwrap_or_default()
            );
            let report = s.intersection_condition(1_000_000).unwrap();
            if let Some(w) = report.witness {
                println!(
                    "SC2 failure: I={:?} J={:?} intersection {} vs expected {}",
                    w.left, w.right, w.intersection_order, w.expected_order
                );
            }
            let q = polytope_from_group(&s, 1_000_000).unwrap();
            println!("geometry rank counts: {:?}", q.rank_counts());
            for v in &q.validate().violations {
                println!("violation {:?}: {} [{}]", v.axiom, v.detail, v.faces.join(", "));
            }
        }
        Ok(None) => {
            println!(
                "no witness on <= {max_points} points ({:.1?})",
                start.elapsed()
            );
        }
        Err(e) => {
            eprintln!("search failed: {e}");
            std::process::exit(1);
        }
    }
}
