//! Thread-pool helper shared by the enumeration and scan code.

/// A rayon pool of a fixed size, or the calling thread for one worker.
pub(crate) struct Workers(Option<rayon::ThreadPool>);

impl Workers {
    pub(crate) fn new(workers: usize) -> Self {
        if workers <= 1 {
            return Workers(None);
        }
        Workers(rayon::ThreadPoolBuilder::new().num_threads(workers).build().ok())
    }

    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match &self.0 {
            Some(pool) => pool.install(f),
            None => f(),
        }
    }
}
