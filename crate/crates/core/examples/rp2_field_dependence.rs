//! The six-vertex projective plane: Betti numbers over GF(2) and over the
//! rationals differ, and so does the cohomology of Z_K.

use moment_angle::hochster::betti_table;
use moment_angle::macx::{poincare_rzk, poincare_zk};
use moment_angle::oracle::{oracle_poincare, CellModel};
use moment_angle::{FieldTag, SimplicialComplex};

fn main() -> moment_angle::Result<()> {
    let facets = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6], [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]];
    let rp2 = SimplicialComplex::from_facets(6, &facets.map(|f| f.to_vec()))?;
    for field in FieldTag::ALL {
        let t = betti_table(&rp2, field);
        println!("{field}: total Betti number {}", t.total());
        println!("  Z_K  {}", poincare_zk(&rp2, field));
        println!("  RZ_K {}", poincare_rzk(&rp2, field));
        println!("  cellular RZ_K {}", oracle_poincare(&rp2, CellModel::Interval, field)?);
    }
    Ok(())
}
