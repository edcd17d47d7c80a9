//! Cyclic time arithmetic over a periodic timetable.
//!
//! All schedule times live in `[0, T_p)` where `T_p` is the timetable
//! period (86 400 s for daily schedules). Differences between time points
//! are always taken cyclically, so an overnight leg wraps around the
//! period boundary instead of going negative.

use core::fmt;

/// Timetable period `T_p` in time units (seconds by default).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Period(u32);

impl Period {
    pub const DAY: Period = Period(86_400);

    /// Panics on a zero period; everything downstream divides by it.
    pub fn new(secs: u32) -> Period {
        assert!(secs > 0, "timetable period must be positive");
        Period(secs)
    }

    #[inline]
    pub fn secs(self) -> u32 {
        self.0
    }
}

impl Default for Period {
    fn default() -> Self {
        Period::DAY
    }
}

/// A point in cyclic time: seconds since the period origin, in `[0, T_p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TimePoint(u32);

impl TimePoint {
    /// Reduces `secs` into `[0, T_p)`; GTFS times past 24:00:00 wrap here.
    #[inline]
    pub fn reduce(secs: u32, period: Period) -> TimePoint {
        TimePoint(secs % period.secs())
    }

    /// `secs` must already be in `[0, T_p)`.
    #[inline]
    pub fn new(secs: u32) -> TimePoint {
        TimePoint(secs)
    }

    #[inline]
    pub fn secs(self) -> u32 {
        self.0
    }

    /// Cyclic time until `later`, i.e. `Δ(self, later)`.
    #[inline]
    pub fn until(self, later: TimePoint, period: Period) -> Duration {
        cyclic_delta(self, later, period)
    }

    /// This point shifted forward by `d`, wrapping at the period boundary.
    #[inline]
    pub fn advance(self, d: Duration, period: Period) -> TimePoint {
        let p = period.secs() as u64;
        TimePoint((((self.0 as u64) + (d.secs() as u64)) % p) as u32)
    }
}

impl fmt::Display for TimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02}:{:02}:{:02}", self.0 / 3600, (self.0 / 60) % 60, self.0 % 60)
    }
}

/// A non-negative span of time in seconds. Not cyclic: durations may
/// exceed the period (elapsed query times are tracked as plain integers).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Duration(u32);

impl Duration {
    pub const ZERO: Duration = Duration(0);

    #[inline]
    pub fn from_secs(secs: u32) -> Duration {
        Duration(secs)
    }

    #[inline]
    pub fn secs(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}s", self.0)
    }
}

/// Cyclic difference `Δ(t1, t2) = (t2 − t1) mod T_p`, always in `[0, T_p)`.
///
/// This is the waiting time at `t1` until the next occurrence of `t2`;
/// it is total and never negative.
#[inline]
pub fn cyclic_delta(t1: TimePoint, t2: TimePoint, period: Period) -> Duration {
    let p = period.secs();
    debug_assert!(t1.secs() < p && t2.secs() < p);
    let d = if t2.secs() >= t1.secs() {
        t2.secs() - t1.secs()
    } else {
        p - (t1.secs() - t2.secs())
    };
    Duration(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const MIN: Period = Period(1440); // minute-resolution period used by the worked examples

    fn tp(v: u32) -> TimePoint {
        TimePoint::new(v)
    }

    #[test]
    fn delta_of_worked_example() {
        // depTime 20 -> arrTime 37
        assert_eq!(cyclic_delta(tp(20), tp(37), MIN), Duration(17));
    }

    #[test]
    fn delta_identity_is_zero() {
        assert_eq!(cyclic_delta(tp(123), tp(123), MIN), Duration::ZERO);
    }

    #[test]
    fn delta_wraps_around_period() {
        assert_eq!(cyclic_delta(tp(1430), tp(10), MIN), Duration(20));
    }

    #[test]
    fn advance_wraps() {
        assert_eq!(tp(1430).advance(Duration(20), MIN), tp(10));
        assert_eq!(tp(0).advance(Duration(1440), MIN), tp(0));
    }

    proptest! {
        #[test]
        fn delta_chain_is_additive_mod_period(a in 0u32..1440, b in 0u32..1440, c in 0u32..1440) {
            let d1 = cyclic_delta(tp(a), tp(b), MIN).secs();
            let d2 = cyclic_delta(tp(b), tp(c), MIN).secs();
            let d3 = cyclic_delta(tp(a), tp(c), MIN).secs();
            prop_assert_eq!((d1 + d2) % 1440, d3 % 1440);
        }

        #[test]
        fn delta_zero_iff_equal(a in 0u32..1440, b in 0u32..1440) {
            let d = cyclic_delta(tp(a), tp(b), MIN);
            prop_assert_eq!(d == Duration::ZERO, a == b);
        }

        #[test]
        fn delta_in_range(a in 0u32..1440, b in 0u32..1440) {
            prop_assert!(cyclic_delta(tp(a), tp(b), MIN).secs() < 1440);
        }
    }
}
