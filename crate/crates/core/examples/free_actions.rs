//! Free coordinate subgroup actions and the cohomology lower bound.

use moment_angle::freeness::{hc_verify, is_free, max_free_rank_real, orbit_free_on_cells, rank_bound, SubgroupSpec};
use moment_angle::{FieldTag, SimplicialComplex};

fn main() -> moment_angle::Result<()> {
    let square = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;

    let torus = SubgroupSpec::torus(4, &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]])?;
    let report = hc_verify(&square, &torus, FieldTag::Rational)?;
    println!("torus rank {} free: {}, total dim {} >= 2^r = {}", report.r, report.free, report.total_dim_zk, report.lower_bound);

    let (r, witness) = max_free_rank_real(&square)?;
    println!("largest free real subgroup: rank {r} (bound m - dim K - 1 = {}), generators {:?}", rank_bound(&square), witness.rows());
    println!("criterion agrees with the cell-level orbit check: {}", is_free(&witness, &square)? == orbit_free_on_cells(&witness, &square)?);

    let not_free = SubgroupSpec::real(4, &[vec![1, 1, 0, 0]])?;
    println!("<(1,1,0,0)> acts freely: {}", is_free(&not_free, &square)?);

    for m in 2..=6 {
        let sphere = SimplicialComplex::simplex_boundary(m)?;
        let r = hc_verify(&sphere, &SubgroupSpec::diagonal_torus(m), FieldTag::Rational)?;
        println!("diagonal circle on Z of the boundary of the {}-simplex: total {} = 2^1: {}", m - 1, r.total_dim_zk, r.holds());
    }
    Ok(())
}
