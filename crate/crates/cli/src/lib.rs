//! Library surface of the command-line tool: the JSON encoding of
//! equations, points, families, and solution sets (both directions, so
//! printed output can be parsed back and re-checked).

pub mod json;
