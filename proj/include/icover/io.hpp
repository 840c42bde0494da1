#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "icover/instance.hpp"
#include "icover/set_system.hpp"

namespace icover {

// Text formats. `#` starts a comment anywhere on a line; blank lines are
// ignored; tokens are whitespace-separated.
//
// Instance files:
//     points: 1 2 5 5 9
//     interval: 1 4
//     interval: 3 9
// The first content line lists the points (possibly none, possibly unsorted);
// every following line is one interval, and interval ids are the 0-based line
// order. Loading normalizes the instance: points are sorted and intervals
// contained in another interval are dropped — their ids keep referring to the
// original lines, so cover output still names the user's input lines.
//
// Set-system files:
//     elements: 80
//     set: B1 0 1 2 3
// Element ids must lie in [0, elements) and be distinct within a set.
//
// Saving writes intervals in id order; loading a saved file reproduces the
// instance exactly whenever its ids are dense (0..m-1), which holds for every
// instance this library produces. Sparse ids are renumbered by the next load.

Instance load_instance(std::istream& in);        // throws parse_error
void save_instance(std::ostream& out, const Instance& inst);

SetSystem load_set_system(std::istream& in);     // throws parse_error
void save_set_system(std::ostream& out, const SetSystem& sys);

enum class InputKind { instance, set_system };

// Classifies input text by its first content line ("points:" or "elements:").
// Throws parse_error on anything else.
InputKind detect_kind(std::string_view text);

}  // namespace icover
