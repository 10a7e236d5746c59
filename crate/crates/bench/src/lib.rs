// SPDX-License-Identifier: MIT OR Apache-2.0

//! Criterion micro-benchmarks live in `benches/`; see also the `bench`
//! subcommand of the CLI for the CSV-emitting scaling sweep.
