#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sslab/graph.hpp"

namespace sslab {

/// Headerless short-form graph6 (n <= 62). Upper triangle packed column-wise:
/// x(0,1), x(0,2), x(1,2), x(0,3), ... in 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);

/// Throws parse_error (with byte offset) on characters outside 63..126,
/// a truncated bit vector, or trailing bytes. Padding bits are ignored.
Graph graph6_decode(std::string_view text);

/// One graph per line, LF-terminated. Blank lines are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace sslab
