//! Two-value recurrence for the single-marked case.
//!
//! With one marked position, every round leaves the vector holding just two
//! values: `t` on the `a^2 - 1` unmarked entries and `t0` on the marked one.
//! One round maps
//!
//! ```text
//! t0' = t0 + 2t - 2(t0 + t) / a^2
//! t'  =  t      - 2(t0 + t) / a^2
//! ```

use num_rational::Ratio;
use num_traits::Num;

use crate::error::{Error, Result};

/// Amplitudes after `i` rounds on a side-`a` image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudePair {
    /// Unmarked amplitude.
    pub t: f64,
    /// Marked amplitude.
    pub t0: f64,
    pub i: u32,
    pub a: u64,
}

impl AmplitudePair {
    /// `t = t0 = 1/a` before any round.
    pub fn initial(a: u64) -> Self {
        let v = 1.0 / a as f64;
        Self {
            t: v,
            t0: v,
            i: 0,
            a,
        }
    }

    pub fn success_probability(&self) -> f64 {
        self.t0 * self.t0
    }

    /// `(a^2 - 1) t^2 + t0^2`.
    pub fn norm_sqr(&self) -> f64 {
        let a = self.a as f64;
        (a * a - 1.0) * self.t * self.t + self.t0 * self.t0
    }
}

fn step<T: Num + Copy>(t: T, t0: T, a_sq: T) -> (T, T) {
    let two = T::one() + T::one();
    let shrink = two * (t0 + t) / a_sq;
    (t - shrink, t0 + two * t - shrink)
}

pub fn recurrence_step(pair: AmplitudePair) -> AmplitudePair {
    let a = pair.a as f64;
    let (t, t0) = step(pair.t, pair.t0, a * a);
    AmplitudePair {
        t,
        t0,
        i: pair.i + 1,
        a: pair.a,
    }
}

/// Iterator over the pairs for `i = 0, 1, 2, ...`.
pub fn recurrence(a: u64) -> impl Iterator<Item = AmplitudePair> {
    std::iter::successors(Some(AmplitudePair::initial(a)), |p| {
        Some(recurrence_step(*p))
    })
}

/// The pair after exactly `i` rounds.
pub fn pair_at(a: u64, i: u64) -> AmplitudePair {
    let mut p = AmplitudePair::initial(a);
    for _ in 0..i {
        p = recurrence_step(p);
    }
    p
}

pub type Rational = Ratio<i128>;

/// Exact rational version of [`AmplitudePair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactPair {
    pub t: Rational,
    pub t0: Rational,
    pub i: u32,
    pub a: u64,
}

impl ExactPair {
    pub fn initial(a: u64) -> Self {
        let v = Rational::new(1, i128::from(a));
        Self {
            t: v,
            t0: v,
            i: 0,
            a,
        }
    }

    pub fn step(self) -> Self {
        let a = Rational::from_integer(i128::from(self.a));
        let (t, t0) = step(self.t, self.t0, a * a);
        Self {
            t,
            t0,
            i: self.i + 1,
            a: self.a,
        }
    }

    pub fn to_f64(self) -> AmplitudePair {
        AmplitudePair {
            t: ratio_to_f64(self.t),
            t0: ratio_to_f64(self.t0),
            i: self.i,
            a: self.a,
        }
    }
}

pub fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Explicit polynomial forms of the pair for `1 <= i <= 4`.
pub fn closed_form_t(i: u32, a: u64) -> Result<AmplitudePair> {
    // Coefficients of 1/a, 1/a^3, ..., 1/a^9.
    let (c0, c): ([f64; 5], [f64; 5]) = match i {
        1 => ([3., -4., 0., 0., 0.], [1., -4., 0., 0., 0.]),
        2 => ([5., -20., 16., 0., 0.], [1., -12., 16., 0., 0.]),
        3 => ([7., -56., 112., -64., 0.], [1., -24., 80., -64., 0.]),
        4 => ([9., -120., 432., -576., 256.], [1., -40., 240., -448., 256.]),
        _ => return Err(Error::IterationOutOfRange(i)),
    };
    let inv = 1.0 / a as f64;
    let inv_sq = inv * inv;
    let eval = |coeffs: &[f64; 5]| {
        let mut power = inv;
        let mut sum = 0.0;
        for &k in coeffs {
            sum += k * power;
            power *= inv_sq;
        }
        sum
    };
    Ok(AmplitudePair {
        t: eval(&c),
        t0: eval(&c0),
        i,
        a,
    })
}

/// Lower bound on the success probability at the planned iteration count:
/// `(0.9194 + 0.0567/a + 0.2302/a^2 - 0.0336/a^3)^2`. Meaningful for `a >= 2`.
pub fn probability_lower_bound(a: f64) -> f64 {
    let inv = 1.0 / a;
    let root = 0.9194 + inv * (0.0567 + inv * (0.2302 - inv * 0.0336));
    root * root
}
