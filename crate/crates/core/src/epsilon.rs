//! The distance constants for spines of lines: exact integer multiples of
//! log 2 satisfying `eps_1 = 0`, `eps_n = 3 eps_{n-1} + 2 log 2`, with closed
//! form `eps_n = log 2 * (3^{n-1} - 1)`.

/// An exact non-negative multiple of log 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EpsilonConstant {
    multiplier: u128,
}

impl EpsilonConstant {
    pub fn from_multiplier(multiplier: u128) -> Self {
        EpsilonConstant { multiplier }
    }

    /// Integer m with value `m * log 2`.
    pub fn multiplier(&self) -> u128 {
        self.multiplier
    }

    pub fn value(&self) -> f64 {
        self.multiplier as f64 * std::f64::consts::LN_2
    }

    pub fn exact_string(&self) -> String {
        format!("{}*log2", self.multiplier)
    }

    pub fn scaled(&self, factor: u128) -> EpsilonConstant {
        EpsilonConstant {
            multiplier: self
                .multiplier
                .checked_mul(factor)
                .expect("epsilon multiplier overflow"),
        }
    }
}

/// `eps_n` for a line in n coordinates. Exact for n up to 81.
pub fn epsilon(n: usize) -> EpsilonConstant {
    assert!(n >= 1, "epsilon is defined for n >= 1");
    let pow = 3u128
        .checked_pow((n - 1) as u32)
        .expect("epsilon multiplier overflow");
    EpsilonConstant {
        multiplier: pow - 1,
    }
}
