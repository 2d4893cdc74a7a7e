#include "geodkit/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace geodkit {

ParseError::ParseError(std::size_t line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      ++i;
    }
    if (i > start) {
      out.push_back(line.substr(start, i - start));
    }
  }
  return out;
}

bool all_digits(std::string_view tok) {
  if (tok.empty()) {
    return false;
  }
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

BigInt parse_integer(std::string_view tok, std::size_t line) {
  std::string_view digits = tok;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw ParseError(line, "non-integer token '" + std::string(tok) + "'");
  }
  BigInt value{std::string(digits)};
  if (negative) {
    value = -value;
  }
  return value;
}

int parse_vertex(std::string_view tok, std::size_t line, int n) {
  const BigInt value = parse_integer(tok, line);
  if (value < 0 || value >= n) {
    throw ParseError(line, "vertex " + std::string(tok) + " outside 0.." + std::to_string(n - 1));
  }
  return value.convert_to<int>();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_header = false;
  int columns = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size() || pos == 0) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) {
        break;
      }
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 1) {
        throw ParseError(line_no, "expected the vertex count alone on the first line");
      }
      const BigInt n = parse_integer(tokens[0], line_no);
      if (n < 1 || n > 10'000'000) {
        throw ParseError(line_no, "vertex count must be between 1 and 10000000");
      }
      g = Graph(n.convert_to<int>());
      have_header = true;
    } else {
      if (tokens.size() != 2 && tokens.size() != 3) {
        throw ParseError(line_no, "expected 'u v' or 'u v w'");
      }
      const int cols = static_cast<int>(tokens.size());
      if (columns == 0) {
        columns = cols;
      } else if (columns != cols) {
        throw ParseError(line_no, "weighted and unweighted edge lines are mixed");
      }
      const int u = parse_vertex(tokens[0], line_no, g.order());
      const int v = parse_vertex(tokens[1], line_no, g.order());
      BigInt w = 1;
      if (cols == 3) {
        w = parse_integer(tokens[2], line_no);
        if (w < 1) {
          throw ParseError(line_no, "weight must be a positive integer");
        }
      }
      if (u == v) {
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      }
      if (g.has_edge(u, v)) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      g.add_edge(u, v, std::move(w));
    }
    if (end == text.size()) {
      break;
    }
  }
  if (!have_header) {
    throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order();
  const bool weighted = g.is_weighted();
  for (const auto& e : g.sorted_edges()) {
    out << '\n' << e.u << ' ' << e.v;
    if (weighted) {
      out << ' ' << e.weight;
    }
  }
  return out.str();
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read '" + path + "'");
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace geodkit
