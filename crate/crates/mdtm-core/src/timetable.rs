//! Timetable domain types: stops, vehicles, elementary connections and
//! unrestricted (walk/EV) links.
//!
//! All entities are referenced by dense integer handles assigned at load
//! time; the original source identifiers are kept as names on the entities
//! themselves. A [`Timetable`] is immutable once built — delays produce a
//! *disposition* copy (see [`crate::update::disposition_timetable`]) or are
//! absorbed in place by the graph.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::time::{cyclic_delta, Duration, Period, TimePoint};

/// Dense handle of a stop within a [`Timetable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StopId(pub u32);

/// Dense handle of a vehicle (trip).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VehicleId(pub u32);

/// Dense handle of an elementary connection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnId(pub u32);

impl StopId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl VehicleId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl ConnId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for StopId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ConnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Transport mode, an index into a configurable mode table.
///
/// The first five entries are fixed; deployments may register further
/// modes (ferry, cable car, ...) without touching the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode(pub u8);

impl Mode {
    pub const BUS: Mode = Mode(0);
    pub const TRAIN: Mode = Mode(1);
    pub const TRAM: Mode = Mode(2);
    pub const WALK: Mode = Mode(3);
    pub const EV: Mode = Mode(4);
}

/// Set of enabled modes, as a bitmask over [`Mode`] indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModeSet(u32);

impl ModeSet {
    pub const EMPTY: ModeSet = ModeSet(0);

    pub fn all() -> ModeSet {
        ModeSet(u32::MAX)
    }

    pub fn of(modes: &[Mode]) -> ModeSet {
        let mut s = ModeSet::EMPTY;
        for &m in modes {
            s.insert(m);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, m: Mode) {
        self.0 |= 1 << m.0;
    }

    #[inline]
    pub fn contains(self, m: Mode) -> bool {
        self.0 & (1 << m.0) != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_bits(bits: u32) -> ModeSet {
        ModeSet(bits)
    }
}

/// A stop (station) where passengers may change vehicles.
#[derive(Debug, Clone, PartialEq)]
pub struct Stop {
    /// Source identifier (GTFS stop_id or synthetic name).
    pub name: String,
    pub lat: f64,
    pub lon: f64,
    /// Minimum buffer needed to change vehicles here.
    pub transfer_time: Duration,
    pub is_ev_station: bool,
}

/// A vehicle performing a scheduled itinerary of connections.
#[derive(Debug, Clone, PartialEq)]
pub struct Vehicle {
    /// Source identifier (GTFS trip_id or synthetic name).
    pub name: String,
    pub mode: Mode,
}

/// One scheduled travel of a vehicle between two consecutive stops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Connection {
    pub vehicle: VehicleId,
    pub from: StopId,
    pub to: StopId,
    pub dep: TimePoint,
    pub arr: TimePoint,
}

impl Connection {
    /// Travel time `Δ(dep, arr)`.
    #[inline]
    pub fn travel(&self, period: Period) -> Duration {
        cyclic_delta(self.dep, self.arr, period)
    }
}

/// A time-independent traveling path (walking or EV driving) usable at any
/// departure time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnrestrictedLink {
    pub from: StopId,
    pub to: StopId,
    pub duration: Duration,
    pub mode: Mode,
}

/// A periodic timetable: stops, vehicles, elementary connections and
/// unrestricted links.
///
/// Connections of one vehicle must appear in itinerary order; that input
/// order defines the vehicle's chain in the graph.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Timetable {
    pub period: Period,
    pub stops: Vec<Stop>,
    pub vehicles: Vec<Vehicle>,
    pub connections: Vec<Connection>,
    pub links: Vec<UnrestrictedLink>,
}

impl Default for Period {
    fn default() -> Self {
        Period::DAY
    }
}

impl Timetable {
    pub fn stop(&self, id: StopId) -> &Stop {
        &self.stops[id.idx()]
    }

    pub fn vehicle(&self, id: VehicleId) -> &Vehicle {
        &self.vehicles[id.idx()]
    }

    pub fn connection(&self, id: ConnId) -> &Connection {
        &self.connections[id.idx()]
    }

    /// Connection ids of each vehicle's itinerary, in input order.
    pub fn itineraries(&self) -> Vec<Vec<ConnId>> {
        let mut chains = alloc::vec![Vec::new(); self.vehicles.len()];
        for (i, c) in self.connections.iter().enumerate() {
            if c.vehicle.idx() < chains.len() {
                chains[c.vehicle.idx()].push(ConnId(i as u32));
            }
        }
        chains
    }

    /// Checks every structural invariant and returns the full list of
    /// violations; an empty report means the timetable is well formed.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        let p = self.period;
        let n_stops = self.stops.len() as u32;
        let n_veh = self.vehicles.len() as u32;

        for (i, s) in self.stops.iter().enumerate() {
            if s.transfer_time.secs() >= p.secs() {
                issues.push(Issue::TransferTooLong { stop: StopId(i as u32) });
            }
        }

        for (i, c) in self.connections.iter().enumerate() {
            let id = ConnId(i as u32);
            if c.from.0 >= n_stops || c.to.0 >= n_stops {
                issues.push(Issue::DanglingStop { conn: id });
                continue;
            }
            if c.vehicle.0 >= n_veh {
                issues.push(Issue::DanglingVehicle { conn: id });
                continue;
            }
            if c.from == c.to {
                issues.push(Issue::SelfLoop { conn: id });
            }
            if c.dep.secs() >= p.secs() || c.arr.secs() >= p.secs() {
                issues.push(Issue::TimeOutOfRange { conn: id });
            }
        }

        for (i, l) in self.links.iter().enumerate() {
            if l.from.0 >= n_stops || l.to.0 >= n_stops {
                issues.push(Issue::DanglingLinkStop { link: i });
            } else if l.from == l.to
                || l.duration == Duration::ZERO
                || l.duration.secs() >= p.secs()
            {
                issues.push(Issue::BadLinkDuration { link: i });
            }
        }

        // Chainability: consecutive connections of one vehicle must share
        // the intermediate stop. (The cyclic dwell Δ(arr, dep) is total, so
        // only the stop sequence can be violated.)
        for (v, chain) in self.itineraries().iter().enumerate() {
            for w in chain.windows(2) {
                let (a, b) = (self.connection(w[0]), self.connection(w[1]));
                if a.to != b.from {
                    issues.push(Issue::BrokenChain {
                        vehicle: VehicleId(v as u32),
                        prev: w[0],
                        next: w[1],
                    });
                }
            }
        }

        ValidationReport { issues }
    }
}

/// One violated timetable invariant, with the offending entity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Issue {
    DanglingStop { conn: ConnId },
    DanglingVehicle { conn: ConnId },
    SelfLoop { conn: ConnId },
    TimeOutOfRange { conn: ConnId },
    TransferTooLong { stop: StopId },
    DanglingLinkStop { link: usize },
    BadLinkDuration { link: usize },
    BrokenChain { vehicle: VehicleId, prev: ConnId, next: ConnId },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::DanglingStop { conn } => write!(f, "connection {conn} references unknown stop"),
            Issue::DanglingVehicle { conn } => {
                write!(f, "connection {conn} references unknown vehicle")
            }
            Issue::SelfLoop { conn } => write!(f, "connection {conn} departs and arrives at the same stop"),
            Issue::TimeOutOfRange { conn } => {
                write!(f, "connection {conn} has a time outside [0, period)")
            }
            Issue::TransferTooLong { stop } => {
                write!(f, "stop {stop} transfer time is not below the period")
            }
            Issue::DanglingLinkStop { link } => write!(f, "link {link} references unknown stop"),
            Issue::BadLinkDuration { link } => {
                write!(f, "link {link} duration must be in (0, period) and stops distinct")
            }
            Issue::BrokenChain { vehicle, prev, next } => write!(
                f,
                "vehicle {} itinerary broken between connections {prev} and {next}",
                vehicle.0
            ),
        }
    }
}

/// Outcome of [`Timetable::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "timetable ok");
        }
        writeln!(f, "{} issue(s):", self.issues.len())?;
        for i in &self.issues {
            writeln!(f, "  {i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    pub(crate) fn stop(name: &str) -> Stop {
        Stop {
            name: name.to_string(),
            lat: 0.0,
            lon: 0.0,
            transfer_time: Duration::ZERO,
            is_ev_station: false,
        }
    }

    #[test]
    fn empty_timetable_is_valid() {
        assert!(Timetable::default().validate().is_ok());
    }

    #[test]
    fn dangling_stop_reported() {
        let t = Timetable {
            stops: alloc::vec![stop("a")],
            vehicles: alloc::vec![Vehicle { name: "v".to_string(), mode: Mode::BUS }],
            connections: alloc::vec![Connection {
                vehicle: VehicleId(0),
                from: StopId(0),
                to: StopId(7),
                dep: TimePoint::new(0),
                arr: TimePoint::new(60),
            }],
            ..Timetable::default()
        };
        let report = t.validate();
        assert_eq!(report.issues, alloc::vec![Issue::DanglingStop { conn: ConnId(0) }]);
    }

    #[test]
    fn broken_chain_reported() {
        // Two connections of the same vehicle that do not share the middle stop.
        let t = Timetable {
            stops: alloc::vec![stop("a"), stop("b"), stop("c"), stop("d")],
            vehicles: alloc::vec![Vehicle { name: "v".to_string(), mode: Mode::BUS }],
            connections: alloc::vec![
                Connection {
                    vehicle: VehicleId(0),
                    from: StopId(0),
                    to: StopId(1),
                    dep: TimePoint::new(0),
                    arr: TimePoint::new(600),
                },
                Connection {
                    vehicle: VehicleId(0),
                    from: StopId(2),
                    to: StopId(3),
                    dep: TimePoint::new(700),
                    arr: TimePoint::new(1300),
                },
            ],
            ..Timetable::default()
        };
        let report = t.validate();
        assert_eq!(
            report.issues,
            alloc::vec![Issue::BrokenChain {
                vehicle: VehicleId(0),
                prev: ConnId(0),
                next: ConnId(1),
            }]
        );
    }

    #[test]
    fn mode_set_membership() {
        let s = ModeSet::of(&[Mode::BUS, Mode::WALK]);
        assert!(s.contains(Mode::BUS));
        assert!(s.contains(Mode::WALK));
        assert!(!s.contains(Mode::TRAIN));
        assert!(!ModeSet::EMPTY.contains(Mode::BUS));
    }
}
