//! Bigraded Betti numbers of the Stanley-Reisner ring through Hochster's
//! formula, with the parity identity and the support bound.

use moment_angle::hochster::{betti_table, check_parity_identity, check_support_bound};
use moment_angle::{FieldTag, SimplicialComplex};

fn main() -> moment_angle::Result<()> {
    // A 4-cycle: 1-2-3-4-1.
    let k = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    for field in FieldTag::ALL {
        let table = betti_table(&k, field);
        println!("field {field}");
        for (i, a, beta) in table.entries() {
            println!("  beta_{{{i},{a}}} = {beta}");
        }
        let parity = check_parity_identity(&k, &table);
        let bound = check_support_bound(&k, &table);
        println!("  total {}", table.total());
        println!("  parity identity holds: {}", parity.holds);
        println!("  |supp M(f)| = {} <= {} : {}", bound.lhs, bound.rhs, bound.holds);
    }
    Ok(())
}
