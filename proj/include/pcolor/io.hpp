#pragma once

#include "pcolor/algebra.hpp"

namespace pcolor {

/// Parses one JSON algebra document and returns the fully validated algebra.
/// Throws ParseError for malformed JSON and ValidationError (with a
/// JSON-pointer-style path) for structural problems.
///
/// Document shape:
///   {
///     "group":       {"free_rank": 1, "torsion": [3, 5]},
///     "field":       {"kind": "rational"} | {"kind": "prime", "p": "5"},
///     "g0":          [-2, 0],
///     "bicharacter": [["-1"]],                      // generator matrix, scalars as strings
///     "basis":       [{"name": "1", "degree": [0]}, ...],
///     "bracket":     [{"left": 1, "right": 1, "terms": [{"index": 0, "coeff": "1"}]}],
///     "product":     [...]                          // same entry shape as bracket
///   }
/// bracket and product may be omitted when empty; indices are 0-based.
ColorAlgebra parse_algebra(const std::string& text);

/// Canonical serialization, the inverse of parse_algebra: fixed key order,
/// structure constants in row-major order, canonical scalar literals,
/// two-space indentation, trailing newline.  Byte-stable across runs.
std::string serialize_algebra(const ColorAlgebra& algebra);

}  // namespace pcolor
