//! Core engine for multimodal journey planning on periodic timetables.
//!
//! The model represents a timetable as a graph with one *switch node* per
//! stop and one *departure node* per elementary connection. Departure nodes
//! are grouped per stop by arrival stop and transport mode and kept ordered
//! by arrival time, which lets the query algorithm skip invalid and
//! non-optimal departures wholesale. Unrestricted links (walking, EV) become
//! switch-switch arcs that can be taken at any time.
//!
//! The crate is `no_std` (with `alloc`) and does no IO; parsing, file
//! formats and the CLI live in the companion `mdtm-cli` crate.
//!
//! Main entry points:
//! - [`timetable::Timetable`] and [`graph::MdtmGraph::build`]
//! - [`query::earliest_arrival`], [`query::earliest_arrival_alt`],
//!   [`query::multicriteria`]
//! - [`alt::preprocess_landmarks`] for goal-directed lower bounds
//! - [`update::apply_delay`] for in-place delay absorption
//! - [`oracle`] for the independent reference implementations used by tests
//!   and the `verify` command

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alt;
pub mod graph;
pub mod oracle;
pub mod query;
pub mod time;
pub mod timetable;
pub mod update;

pub use time::{cyclic_delta, Duration, Period, TimePoint};
pub use timetable::{
    Connection, ConnId, Mode, ModeSet, Stop, StopId, Timetable, UnrestrictedLink, Vehicle,
    VehicleId,
};
