//! Möbius transform over GF(2) of a few subset functions, and the niceness
//! test on the indicator of a simplicial complex.

use moment_angle::{SimplicialComplex, Subset, SubsetFn};

fn main() -> moment_angle::Result<()> {
    let m = 3;
    let k = SimplicialComplex::simplex_boundary(m)?;
    let f = k.indicator();
    let g = f.mobius();

    println!("K = boundary of the triangle, faces {:?}", k.faces().map(|s| s.to_string()).collect::<Vec<_>>());
    println!("nice: {}", f.is_nice());
    println!("M(f) support: {:?}", g.support().iter().map(Subset::to_string).collect::<Vec<_>>());
    println!("M(M(f)) == f: {}", g.mobius() == *f);

    // δ_a and μ_a are exchanged by the transform.
    let a = Subset::from_elements(m, &[1, 3])?;
    let delta = SubsetFn::delta(m, a)?;
    println!("M(delta_{a}) == mu_{a}: {}", delta.mobius() == SubsetFn::mu(m, a)?);

    // The transform of a product of coordinates is a single delta.
    let x = &SubsetFn::coordinate(m, 1)? * &SubsetFn::coordinate(m, 2)?;
    println!("M(x1 x2) support: {:?}", x.mobius().support().iter().map(Subset::to_string).collect::<Vec<_>>());
    Ok(())
}
