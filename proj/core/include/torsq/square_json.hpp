#ifndef TORSQ_SQUARE_JSON_HPP
#define TORSQ_SQUARE_JSON_HPP

#include <string>

#include "torsq/curve.hpp"
#include "torsq/square.hpp"

namespace torsq {

// MagicSquare document:
//   { "n": int,
//     "group": { "kind": "product" } | { "kind": "symbolic" }
//            | { "kind": "curve", "p": int, "a4": int, "a6": int },
//     "basis": [elem, elem],
//     "params": { "a", "b", "c", "d", "x1", "y1" } | null,
//     "cells": [elem, ...] }           // row-major, top row first
// Element strings use the group wire format: "(m,n)" for product groups,
// "inf" / "x,y" for curves, "O" / "A" / "-B" ... for the symbolic group.
// Output is deterministic: same square, byte-identical document.
std::string square_to_json_text(const MagicSquare& sq);

// Rebuilds the square (group, basis, cells, params) from a document.
// Any structural problem throws an io error naming the field.
MagicSquare square_from_json_text(
    const std::string& text, std::int64_t limit = kDefaultEnumerationLimit);

// Aligned grid, top row first, one row per line.
std::string render_square_text(const MagicSquare& sq);

// Human-readable verification report; non-identity line sums are called out
// by row/column number.
std::string render_report_text(const VerifyReport& report,
                               const AbelianGroup& group);

}  // namespace torsq

#endif  // TORSQ_SQUARE_JSON_HPP
