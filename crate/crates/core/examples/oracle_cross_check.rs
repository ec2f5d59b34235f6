//! Independent check: build the cellular chain complexes of Z_K and RZ_K
//! directly and compare their cohomology with the Betti-number formula.

use moment_angle::oracle::{build_complex, cross_validate, CellModel};
use moment_angle::{random_complex, FieldTag};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> moment_angle::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..5 {
        let k = random_complex(5, &mut rng)?;
        let cells = build_complex(&k, CellModel::Disk2, FieldTag::Gf2)?.dims().iter().sum::<usize>();
        println!("K with facets {:?} ({cells} cells in the disk model)", k.facets());
        for field in FieldTag::ALL {
            let check = cross_validate(&k, field)?;
            for r in &check.reports {
                println!("  {field} {:?}: oracle total {} / formula total {} -> {}", r.model, r.oracle.total, r.hochster.total, r.matches);
            }
        }
    }
    Ok(())
}
