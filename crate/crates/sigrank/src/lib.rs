//! File formats, reports and the exhaustive verification sweep for signed
//! graph ranks. The graph model and the mathematics live in
//! `sigrank-core`.

pub mod canon;
pub mod graph6;
pub mod report;
pub mod sgr;
pub mod sweep;
