//! Parallel drivers over the core enumerators.

use commclass_core::atoms::{enumerate_atoms_rooted, AtomCatalog};
use commclass_core::words::Letter;
use commclass_core::{Error, Result};
use rayon::prelude::*;

/// Environment variable consulted when no worker count is given.
pub const WORKERS_ENV: &str = "COMMCLASS_WORKERS";

/// Worker count from an explicit flag, else the environment, else the
/// machine's parallelism. A malformed or zero environment value is an error
/// unless the flag is given.
pub fn resolve_workers(flag: Option<usize>) -> std::result::Result<usize, String> {
    if let Some(w) = flag {
        return if w > 0 {
            Ok(w)
        } else {
            Err("worker count must be at least 1".to_string())
        };
    }
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(w) if w > 0 => Ok(w),
            _ => Err(format!("{WORKERS_ENV}={v:?} is not a positive integer")),
        },
        Err(_) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
    }
}

/// Runs `f` inside a dedicated pool of `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}

/// Atom sets of all of `S_{n+1}`, sharded by the first letter of the word.
/// Shards are merged in root order, so the result does not depend on the
/// number of workers.
pub fn atom_scan(n: usize, max_n: usize) -> Result<AtomCatalog> {
    if n == 0 || n > max_n || n > 19 {
        return Err(Error::BudgetExceeded {
            n,
            max: max_n.min(19),
        });
    }
    let shards: Vec<AtomCatalog> = (1..=n as Letter)
        .into_par_iter()
        .map(|root| enumerate_atoms_rooted(n, root))
        .collect();
    let mut catalog = AtomCatalog::new(n);
    for shard in shards {
        catalog.merge(shard);
    }
    Ok(catalog)
}
