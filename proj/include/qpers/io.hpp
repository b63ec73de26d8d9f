#pragma once

// File formats.
//
// Representation (JSON):
//   {"field": 5,
//    "vertices": {"s": 2, "t": 1},
//    "edges": [{"id": "e", "src": "s", "dst": "t", "matrix": [[1, 0]]}]}
//
// Filtration (line-oriented, '#' starts a comment):
//   field 2
//   complex X0:
//   a b
//   complex X1:
//   a b c
//   edge X0 X1
// Edge ids are "<src>-><dst>", with "#2", "#3", ... appended to repeats.
//
// Assignment (JSON object, one member per source vertex): the value is a
// list of spanning rows, "full", "zero", or a preradical expression string.

#include <map>
#include <string>

#include "qpers/gmodule.hpp"
#include "qpers/preradical.hpp"
#include "qpers/simplicial.hpp"

namespace qpers {

/// Throws ParseError / ShapeError on malformed input.
Representation parse_representation(const std::string& text);
std::string representation_to_json(const Representation& r);

GraphFiltration parse_filtration(const std::string& text);

std::map<std::string, FlowInput> parse_assignment(const std::string& text, const Representation& r);

/// Whole file as bytes; throws Error (input) when unreadable.
std::string read_file(const std::string& path);

/// 64-bit FNV-1a, 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace qpers
