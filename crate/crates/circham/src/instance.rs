//! Validated problem instances.

use thiserror::Error;

/// Why a raw `(n, c)` pair does not describe a digraph in this family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InvalidReason {
    /// `n` must be at least 5 so that 2, 3 and c can be three distinct
    /// nonzero residues.
    #[error("n must be at least 5 (got {n})")]
    TooSmallN { n: i64 },
    /// `c ≡ 0 (mod n)` would make the c-arc a loop.
    #[error("c ≡ 0 (mod n)")]
    LoopArc,
    /// `c ≡ 2` or `c ≡ 3 (mod n)` would duplicate one of the fixed steps.
    #[error("c ≡ {step} (mod n)")]
    DuplicateStep { step: i64 },
}

/// A validated `Circ(n; 2, 3, c)` instance. `c` is stored reduced to
/// `0 < c < n`, with `c` not congruent to 0, 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Instance {
    n: i64,
    c: i64,
}

impl Instance {
    /// Validates and normalizes a raw `(n, c)` pair. `c` may be any integer;
    /// it is reduced into `(0, n)`.
    pub fn new(n_raw: i64, c_raw: i64) -> Result<Self, InvalidReason> {
        if n_raw < 5 {
            return Err(InvalidReason::TooSmallN { n: n_raw });
        }
        let c = c_raw.rem_euclid(n_raw);
        match c {
            0 => Err(InvalidReason::LoopArc),
            2 | 3 => Err(InvalidReason::DuplicateStep { step: c }),
            _ => Ok(Instance { n: n_raw, c }),
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// The third step, reduced to `0 < c < n`.
    pub fn c(&self) -> i64 {
        self.c
    }

    /// `n / 6` when `n` is a multiple of 6.
    pub fn m(&self) -> Option<i64> {
        (self.n % 6 == 0).then_some(self.n / 6)
    }

    /// The complementary step `c' = n − c`, when `n` is a multiple of 6.
    /// A c-arc is the same arc as a backward c'-step.
    pub fn c_prime(&self) -> Option<i64> {
        (self.n % 6 == 0).then(|| self.n - self.c)
    }

    /// The three arc steps `{2, 3, c}`.
    pub fn steps(&self) -> [i64; 3] {
        [2, 3, self.c]
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Circ({}; 2,3,{})", self.n, self.c)
    }
}
