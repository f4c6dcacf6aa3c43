//! Multi-threaded enumeration with output identical to the sequential path.

use qrigid_core::alpha::{expand_fibers, AlphaGrid, AlphaRep};
use qrigid_core::equivariant::{MaximalRigidSearch, OrbitSet};
use rayon::prelude::*;

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

/// Maximal rigid orbit sets of period `m`, in canonical order. The search
/// tree is split at its first level and the branches run on `jobs` threads.
pub fn maximal_rigid_sets(m: usize, jobs: usize) -> qrigid_core::Result<Vec<OrbitSet>> {
    let search = MaximalRigidSearch::new(m)?;
    if jobs <= 1 {
        return Ok(search.run());
    }
    let branches = search.branches();
    let mut out: Vec<OrbitSet> = pool(jobs).install(|| {
        branches
            .par_iter()
            .flat_map_iter(|b| search.expand(b))
            .collect()
    });
    out.sort();
    out.dedup();
    Ok(out)
}

/// Maximal rigid representations of type α over the uniform `n`-point grid,
/// grouped by the lattice set they reduce to.
pub fn alpha_reps(n: usize, jobs: usize) -> qrigid_core::Result<Vec<AlphaRep>> {
    let grid = AlphaGrid::uniform(n)?;
    let lattice_sets = maximal_rigid_sets(2 * n, jobs)?;
    let fibers: Vec<Vec<AlphaRep>> = if jobs <= 1 {
        lattice_sets
            .iter()
            .map(|h| expand_fibers(h, &grid))
            .collect::<Result<_, _>>()?
    } else {
        pool(jobs).install(|| {
            lattice_sets
                .par_iter()
                .map(|h| expand_fibers(h, &grid))
                .collect::<Result<_, _>>()
        })?
    };
    Ok(fibers.into_iter().flatten().collect())
}
