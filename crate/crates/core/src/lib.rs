//! Exact tools for multiplier sequences over polynomial bases.
//!
//! A sequence `γ_k` acts on a simple polynomial set `{q_k}` by
//! `q_k ↦ γ_k q_k`; it is a multiplier sequence for that set when the
//! induced operator maps every real-rooted polynomial to a real-rooted one.
//! This crate decides the question exactly where algebra allows, searches
//! for certified counterexamples where it does not, and packages the
//! classical computations (Legendre expansions, nested discriminants,
//! differential-operator symbols) as reproducible experiments.

pub mod arith;
pub mod bases;
pub mod diffop;
pub mod multseq;
pub mod repro;
pub mod roots;
pub mod ser;
