//! Compression certificates for the lower bound on the Möbius support size.

use moment_angle::compress::{compress, reachable_final_faces, Policy};
use moment_angle::SimplicialComplex;

fn main() -> moment_angle::Result<()> {
    let k = SimplicialComplex::from_facets(5, &[vec![1, 2, 3], vec![3, 4], vec![4, 5], vec![2, 5]])?;
    let f = k.indicator();
    for policy in Policy::ALL {
        let c = compress(f, policy)?;
        println!("{policy:?}: steps {:?}, final face {}, bound {} <= {} ({})",
            c.steps, c.final_face, c.bound, c.mobius_support_size, c.holds);
        println!("  support sizes along the way: {:?}", c.support_sizes);
    }
    let reachable: Vec<String> = reachable_final_faces(f)?.iter().map(ToString::to_string).collect();
    let maximal: Vec<String> = k.maximal_faces().iter().map(ToString::to_string).collect();
    println!("reachable final faces {reachable:?}");
    println!("maximal faces         {maximal:?}");
    Ok(())
}
