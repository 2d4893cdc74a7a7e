#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "geodkit/graph.hpp"

namespace geodkit {

/// Malformed edge-list text. line() is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list document: first significant line is the vertex count n, every
/// further line is "u v" or "u v w". Blank lines and lines starting with '#'
/// are skipped; CRLF line endings are accepted. A file is either entirely
/// weighted (three columns) or entirely unweighted (two columns).
Graph parse_graph(std::string_view text);

/// Canonical form: "n", then one line per edge sorted by (min, max)
/// endpoint, with the weight column present iff some weight differs from 1.
/// Lines are joined by LF; no trailing newline.
std::string serialize_graph(const Graph& g);

/// Reads a whole file, or standard input when path is "-".
std::string read_text(const std::string& path);

}  // namespace geodkit
