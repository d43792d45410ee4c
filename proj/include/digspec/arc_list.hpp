#ifndef DIGSPEC_ARC_LIST_HPP
#define DIGSPEC_ARC_LIST_HPP

#include <filesystem>
#include <iosfwd>

#include "digspec/digraph.hpp"

namespace digspec {

// Arc-list text format:
//   # comment lines are ignored, as are blank lines
//   4          <- order n
//   0 1        <- one arc per line, "tail head", 0-based
//
// Errors are reported as ParseError or as the validation code, with the
// offending line number in the message.
Digraph read_arc_list(std::istream& in);
Digraph read_arc_list(const std::filesystem::path& path);

/// Writes n, then the arcs in canonical order, newline-terminated.
void write_arc_list(std::ostream& out, const Digraph& d);
void write_arc_list(const std::filesystem::path& path, const Digraph& d);

}  // namespace digspec

#endif  // DIGSPEC_ARC_LIST_HPP
