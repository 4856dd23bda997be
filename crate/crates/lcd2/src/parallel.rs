//! Multi-threaded census over shards.
//!
//! Shards run on a dedicated rayon pool and each produces its own
//! accumulator; the accumulators are folded into one keyed by canonical form,
//! so the result is identical for any worker count or shard order.

use lcd2_core::classify::{
    census_shard, classify_with, shards, verify_tables_with, CensusAccumulator, PointGroup,
};
use lcd2_core::{CensusFilter, EquivClass, Error, VerificationReport};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use rayon::ThreadPool;

/// Worker pool plus an optional seed for shuffling the shard order.
pub struct Runner {
    pool: ThreadPool,
    seed: Option<u64>,
}

impl Runner {
    /// `jobs = 0` means the available parallelism.
    pub fn new(jobs: usize, seed: Option<u64>) -> anyhow::Result<Runner> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        Ok(Runner { pool, seed })
    }

    pub fn jobs(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn census(
        &self,
        n: usize,
        filter: CensusFilter,
        include_zero_columns: bool,
    ) -> Result<Vec<EquivClass>, Error> {
        let mut acc = CensusAccumulator::new(n, filter)?;
        let mut work = shards(n, include_zero_columns);
        if let Some(seed) = self.seed {
            work.shuffle(&mut StdRng::seed_from_u64(seed ^ n as u64));
        }
        let group = PointGroup::new();
        let parts: Vec<CensusAccumulator> = self.pool.install(|| {
            work.par_iter().map(|s| census_shard(s, filter, &group)).collect::<Result<_, _>>()
        })?;
        for part in parts {
            acc.merge(part);
        }
        Ok(acc.into_classes())
    }

    pub fn classify(&self, n: usize, include_zero_columns: bool) -> Result<Vec<EquivClass>, Error> {
        classify_with(n, include_zero_columns, &mut |n, f, z| self.census(n, f, z))
    }

    pub fn verify(&self, n_max: usize) -> Result<VerificationReport, Error> {
        verify_tables_with(n_max, &mut |n, f, z| self.census(n, f, z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcd2_core::census;

    #[test]
    fn matches_sequential_census() {
        for (jobs, seed) in [(1, None), (3, Some(7)), (4, Some(99))] {
            let runner = Runner::new(jobs, seed).unwrap();
            for n in [4, 9, 14] {
                for filter in [CensusFilter::Lcd, CensusFilter::OptimalLcd] {
                    assert_eq!(
                        runner.census(n, filter, true).unwrap(),
                        census(n, filter, true).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn propagates_length_error() {
        let runner = Runner::new(2, None).unwrap();
        assert_eq!(runner.census(1, CensusFilter::All, false), Err(Error::LengthTooSmall { n: 1 }));
    }
}
