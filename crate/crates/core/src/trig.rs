//! Transcendental functions used by the correction paths.
//!
//! With the `instrument` feature every call bumps a thread-local counter, so
//! the benchmark can report exact call counts per evaluation. Without it the
//! wrappers compile down to the plain `f64` methods.

/// Per-function call counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub sin: u64,
    pub cos: u64,
    pub tan: u64,
    pub atan: u64,
    pub atan2: u64,
}

impl Counts {
    pub fn total(&self) -> u64 {
        self.sin + self.cos + self.tan + self.atan + self.atan2
    }
}

/// Whether calls are being counted in this build.
pub const ENABLED: bool = cfg!(feature = "instrument");

#[cfg(feature = "instrument")]
mod counter {
    use super::Counts;
    use std::cell::Cell;

    thread_local! {
        static COUNTS: Cell<Counts> = const {
            Cell::new(Counts { sin: 0, cos: 0, tan: 0, atan: 0, atan2: 0 })
        };
    }

    #[inline]
    pub(super) fn bump(f: impl FnOnce(&mut Counts)) {
        COUNTS.with(|c| {
            let mut v = c.get();
            f(&mut v);
            c.set(v);
        });
    }

    pub(super) fn get() -> Counts {
        COUNTS.with(|c| c.get())
    }

    pub(super) fn reset() {
        COUNTS.with(|c| c.set(Counts::default()));
    }
}

#[cfg(not(feature = "instrument"))]
mod counter {
    use super::Counts;

    #[inline(always)]
    pub(super) fn bump(_: impl FnOnce(&mut Counts)) {}

    pub(super) fn get() -> Counts {
        Counts::default()
    }

    pub(super) fn reset() {}
}

/// Counts accumulated on this thread since the last reset.
pub fn counts() -> Counts {
    counter::get()
}

pub fn reset() {
    counter::reset()
}

/// Runs `f` and returns its result with the calls it made.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, Counts) {
    let before = counts();
    let out = f();
    let after = counts();
    let diff = Counts {
        sin: after.sin - before.sin,
        cos: after.cos - before.cos,
        tan: after.tan - before.tan,
        atan: after.atan - before.atan,
        atan2: after.atan2 - before.atan2,
    };
    (out, diff)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    counter::bump(|c| c.sin += 1);
    x.sin()
}

#[inline]
pub fn cos(x: f64) -> f64 {
    counter::bump(|c| c.cos += 1);
    x.cos()
}

/// Counted as one sine and one cosine.
#[inline]
pub fn sin_cos(x: f64) -> (f64, f64) {
    counter::bump(|c| {
        c.sin += 1;
        c.cos += 1;
    });
    x.sin_cos()
}

#[inline]
pub fn tan(x: f64) -> f64 {
    counter::bump(|c| c.tan += 1);
    x.tan()
}

#[inline]
pub fn atan(x: f64) -> f64 {
    counter::bump(|c| c.atan += 1);
    x.atan()
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    counter::bump(|c| c.atan2 += 1);
    y.atan2(x)
}
