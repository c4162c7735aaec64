//! Executable logics for pronoun descriptors.
//!
//! A descriptor states how someone wants to be referred to. Three logics
//! cover different kinds of descriptor:
//!
//! - [`linear`]: intuitionistic linear logic over pronoun atoms, with a
//!   proof search and an independent proof checker.
//! - [`temporal`]: finite-trace temporal formulas over a sequence of
//!   utterances, evaluated directly or monitored online.
//! - [`free`]: free logic with definite (`iota`) and indefinite (`eps`)
//!   descriptions that may fail to denote.
//!
//! [`text`] ties the temporal monitor to prose, and [`cli`] backs the
//! `pronoun` binary.

pub mod ast;
pub mod atom;
pub mod cli;
pub mod free;
pub mod linear;
pub mod parse;
pub mod temporal;
pub mod text;

pub use atom::PronounAtom;
