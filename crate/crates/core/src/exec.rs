//! Execution policy for the data-parallel loops (codeword enumeration,
//! per-subset Jacobi coefficients).
//!
//! With the `parallel` feature the work is split over a rayon pool; without
//! it every policy runs sequentially. Accumulators are merged by a caller
//! supplied associative, commutative function, so results never depend on
//! the policy.

/// How enumeration loops are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// `workers == 0` uses rayon's default pool.
    #[default]
    Parallel,
    Workers(usize),
}

impl Exec {
    pub fn from_workers(workers: Option<usize>) -> Exec {
        match workers {
            None | Some(0) => Exec::Parallel,
            Some(1) => Exec::Sequential,
            Some(n) => Exec::Workers(n),
        }
    }
}

/// Runs `task(acc, i)` for every `i < n_tasks` and merges the accumulators.
pub(crate) fn fold_tasks<A, I, T, M>(exec: Exec, n_tasks: usize, identity: I, task: T, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    T: Fn(&mut A, usize) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    match exec {
        Exec::Sequential => sequential(n_tasks, identity, task),
        #[cfg(feature = "parallel")]
        Exec::Parallel => parallel(n_tasks, identity, task, merge),
        #[cfg(feature = "parallel")]
        Exec::Workers(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| parallel(n_tasks, identity, task, merge)),
            Err(_) => sequential(n_tasks, identity, task),
        },
        #[cfg(not(feature = "parallel"))]
        _ => {
            let _ = merge;
            sequential(n_tasks, identity, task)
        }
    }
}

fn sequential<A, I, T>(n_tasks: usize, identity: I, task: T) -> A
where
    I: Fn() -> A,
    T: Fn(&mut A, usize),
{
    let mut acc = identity();
    for i in 0..n_tasks {
        task(&mut acc, i);
    }
    acc
}

#[cfg(feature = "parallel")]
fn parallel<A, I, T, M>(n_tasks: usize, identity: I, task: T, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    T: Fn(&mut A, usize) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    use rayon::prelude::*;
    (0..n_tasks)
        .into_par_iter()
        .fold(&identity, |mut acc, i| {
            task(&mut acc, i);
            acc
        })
        .reduce(&identity, &merge)
}
