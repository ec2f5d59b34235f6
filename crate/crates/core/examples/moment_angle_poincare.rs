//! Poincaré polynomials of the moment-angle complex, the real moment-angle
//! complex, and a polyhedral product with mixed sphere dimensions.

use moment_angle::hochster::betti_table;
use moment_angle::macx::{poincare_generalized, poincare_rzk, poincare_zk, DegreeVector};
use moment_angle::{FieldTag, SimplicialComplex};

fn main() -> moment_angle::Result<()> {
    for m in 2..=5 {
        let k = SimplicialComplex::simplex_boundary(m)?;
        println!("boundary of the {}-simplex: Z_K {}   RZ_K {}", m - 1, poincare_zk(&k, FieldTag::Gf2), poincare_rzk(&k, FieldTag::Gf2));
    }

    let pentagon = SimplicialComplex::from_facets(5, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]])?;
    let zk = poincare_zk(&pentagon, FieldTag::Rational);
    let rzk = poincare_rzk(&pentagon, FieldTag::Rational);
    println!("pentagon: Z_K {zk} (total {})", zk.total_dim());
    println!("pentagon: RZ_K {rzk} (total {})", rzk.total_dim());

    let table = betti_table(&pentagon, FieldTag::Rational);
    let kappa = DegreeVector::new(vec![1, 2, 3, 1, 2]);
    println!("pentagon with kappa {:?}: {}", kappa.as_slice(), poincare_generalized(&table, &kappa)?);
    Ok(())
}
