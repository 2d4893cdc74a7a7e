#include "geodkit/projective.hpp"

#include <stdexcept>
#include <string>

#include "geodkit/field.hpp"

namespace geodkit {

namespace {

std::vector<std::array<int, 3>> normalized_triples(int q) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const std::array<int, 3> t{a, b, c};
        for (int x : t) {
          if (x != 0) {
            if (x == 1) {
              out.push_back(t);
            }
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

ProjectivePlane projective_plane(int q) {
  const FiniteField f(q);
  ProjectivePlane p;
  p.q = q;
  p.points = normalized_triples(q);
  p.lines = p.points;
  const auto n = p.points.size();
  p.points_on_line.assign(n, {});
  p.lines_through_point.assign(n, {});
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t x = 0; x < n; ++x) {
      int dot = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        dot = f.add(dot, f.mul(p.lines[l][i], p.points[x][i]));
      }
      if (dot == 0) {
        p.points_on_line[l].push_back(static_cast<int>(x));
        p.lines_through_point[x].push_back(static_cast<int>(l));
      }
    }
  }
  const auto failures = incidence_axiom_failures(p);
  if (!failures.empty()) {
    throw std::logic_error("PG(2," + std::to_string(q) + "): " + failures.front());
  }
  return p;
}

std::vector<std::string> incidence_axiom_failures(const ProjectivePlane& p) {
  std::vector<std::string> out;
  const int n = p.size();
  const auto k = static_cast<std::size_t>(p.q + 1);
  if (n != p.q * p.q + p.q + 1) {
    out.push_back("wrong number of points");
  }
  for (int i = 0; i < n; ++i) {
    if (p.points_on_line[static_cast<std::size_t>(i)].size() != k) {
      out.push_back("line " + std::to_string(i) + " does not have q+1 points");
    }
    if (p.lines_through_point[static_cast<std::size_t>(i)].size() != k) {
      out.push_back("point " + std::to_string(i) + " is not on q+1 lines");
    }
  }
  // Shared members of two sorted lists.
  const auto common = [](const std::vector<int>& a, const std::vector<int>& b) {
    int c = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) {
        ++c;
        ++i;
        ++j;
      } else if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return c;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      if (common(p.lines_through_point[ua], p.lines_through_point[ub]) != 1) {
        out.push_back("points " + std::to_string(a) + ", " + std::to_string(b) + " do not span one line");
      }
      if (common(p.points_on_line[ua], p.points_on_line[ub]) != 1) {
        out.push_back("lines " + std::to_string(a) + ", " + std::to_string(b) + " do not meet once");
      }
    }
  }
  return out;
}

Graph levi_graph(const ProjectivePlane& p) {
  const int n = p.size();
  Graph g(2 * n);
  for (int l = 0; l < n; ++l) {
    for (int x : p.points_on_line[static_cast<std::size_t>(l)]) {
      g.add_edge(x, n + l);
    }
  }
  return g;
}

}  // namespace geodkit
