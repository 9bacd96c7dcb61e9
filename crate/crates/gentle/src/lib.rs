//! Strings, bands and arcs for derived categories of gentle algebras.
//!
//! The modules build on each other. [`quiver`] parses and validates the
//! algebra, and [`strings`] holds the combinatorial words. [`complex`],
//! [`hom`] and [`decomp`] do the homological algebra over a prime [`field`],
//! with [`engine`] tying them together behind a cache. [`walk`] and [`arcs`]
//! read strings as arcs on the surface, [`thick`] answers generation
//! questions and [`pointed`] handles collections pointed at a marked point.
//!
//! ```
//! use gentle::arcs::{classify_arc, ArcKind};
//! use gentle::engine::Engine;
//! use gentle::field::Field;
//! use gentle::quiver::parse_algebra;
//! use gentle::strings::parse_string;
//!
//! let alg = parse_algebra("vertices: 1 2\narrows:\n  a: 1 -> 2\n").unwrap();
//! let e = Engine::new(alg, Field::default());
//! let a = parse_string(&e.alg, "a").unwrap();
//! assert_eq!(classify_arc(&e, &a).unwrap().kind, ArcKind::Exceptional);
//! ```
//!
//! A longer guide with runnable listings lives in `book/` at the workspace
//! root.

pub mod field;
pub mod linalg;
pub mod quiver;
pub mod strings;
pub mod complex;
pub mod hom;
pub mod decomp;
pub mod engine;
pub mod walk;
pub mod arcs;
pub mod thick;
pub mod pointed;
pub mod files;
