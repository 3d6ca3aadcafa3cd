//! The ring file interface: write a ring as JSON, read it back, and show
//! how coordinate normalization records its permutation. Also serializes
//! a subgroup with the ring-table hash that guards against cross-ring
//! misuse.
//!
//!     cargo run --example ring_files

use ringprob::catalog::{load_ring, ring_from_file, save_ring, RingFile};
use ringprob::catalog::{build_family, FamilySpec};
use ringprob::ring::Flavor;
use ringprob::subobjects::additive_span_of_ids;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("ringprob_example");
    std::fs::create_dir_all(&dir)?;

    let m2 = build_family(&FamilySpec::Matrix2(2))?;
    let path = dir.join("m2.json");
    save_ring(&m2, &path)?;
    println!("wrote {}:", path.display());
    println!("{}", std::fs::read_to_string(&path)?);

    let back = load_ring(&path)?;
    assert_eq!(back.table(), m2.table());
    println!("round trip exact: table and hash preserved ({})", back.content_hash());

    // Unsorted user orders are permuted into canonical form, and the
    // permutation is recorded.
    let file = RingFile {
        name: "perm-demo".into(),
        flavor: Flavor::Associative,
        orders: vec![4, 2],
        table: vec![
            vec![vec![1, 0], vec![0, 0]],
            vec![vec![0, 0], vec![0, 0]],
        ],
    };
    let ring = ring_from_file(&file)?;
    println!(
        "\nuser orders [4,2] normalized to {:?}, permutation {:?}",
        ring.shape().orders(),
        ring.meta().permutation
    );

    // Subgroups serialize with the ring hash attached.
    let sub = additive_span_of_ids(&m2, &[m2.basis_id(0), m2.basis_id(2)])?;
    println!("\nfirst-column subgroup of M2(Z2) as JSON:");
    println!("{}", serde_json::to_string_pretty(&sub)?);
    Ok(())
}
