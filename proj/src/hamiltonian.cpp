#include "geodkit/hamiltonian.hpp"

#include <algorithm>
#include <random>

#include "geodkit/paths.hpp"

namespace geodkit {

const char* to_string(HamiltonianStatus s) {
  switch (s) {
    case HamiltonianStatus::found:
      return "found";
    case HamiltonianStatus::proven_absent:
      return "proven_absent";
    case HamiltonianStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) {
    return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : cycle) {
    if (!g.valid_vertex(v) || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
      return false;
    }
  }
  return true;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget), visited_(static_cast<std::size_t>(g.order()), 0) {
    free_deg_.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      free_deg_[static_cast<std::size_t>(v)] = g.degree(v);
    }
  }

  // 1 found, 0 exhausted subtree, -1 out of budget.
  int run() {
    path_.push_back(0);
    visited_[0] = 1;
    return extend();
  }

  std::vector<Vertex> path_;
  std::uint64_t expansions_ = 0;

 private:
  int extend() {
    if (++expansions_ > budget_) {
      return -1;
    }
    const int n = g_.order();
    const Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == n) {
      return g_.has_edge(end, 0) ? 1 : 0;
    }
    for (Vertex w : g_.neighbors(end)) {
      if (visited_[static_cast<std::size_t>(w)]) {
        continue;
      }
      // end becomes interior: its unvisited neighbours lose one option.
      bool dead = false;
      if (end != 0) {
        for (Vertex x : g_.neighbors(end)) {
          if (!visited_[static_cast<std::size_t>(x)]) {
            auto& d = free_deg_[static_cast<std::size_t>(x)];
            --d;
            if (x != w && d < 2) {
              dead = true;
            }
          }
        }
      }
      int r = 0;
      if (!dead) {
        visited_[static_cast<std::size_t>(w)] = 1;
        path_.push_back(w);
        r = extend();
        if (r != 1) {
          path_.pop_back();
          visited_[static_cast<std::size_t>(w)] = 0;
        }
      }
      if (end != 0) {
        for (Vertex x : g_.neighbors(end)) {
          if (!visited_[static_cast<std::size_t>(x)] || x == w) {
            ++free_deg_[static_cast<std::size_t>(x)];
          }
        }
      }
      if (r != 0) {
        return r;
      }
    }
    return 0;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::vector<char> visited_;
  std::vector<int> free_deg_;
};

bool trivially_absent(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) {
    return true;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) {
      return true;
    }
  }
  return false;
}

}  // namespace

HamiltonianResult posa_heuristic(const Graph& g, std::uint64_t budget) {
  HamiltonianResult out;
  const int n = g.order();
  if (n < 3) {
    return out;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<Vertex> path{0};
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  pos[0] = 0;
  const auto rotate = [&](std::size_t i) {
    // path[i] is adjacent to the end: reverse the tail after i.
    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      pos[static_cast<std::size_t>(path[j])] = static_cast<int>(j);
    }
  };
  while (out.expansions < budget) {
    ++out.expansions;
    const Vertex end = path.back();
    Vertex next = -1;
    for (Vertex w : g.neighbors(end)) {
      if (pos[static_cast<std::size_t>(w)] < 0) {
        next = w;
        break;
      }
    }
    if (next >= 0) {
      pos[static_cast<std::size_t>(next)] = static_cast<int>(path.size());
      path.push_back(next);
      continue;
    }
    if (static_cast<int>(path.size()) == n && g.has_edge(end, path.front())) {
      out.status = HamiltonianStatus::found;
      // Start at 0, second vertex smaller than the last.
      auto it = std::find(path.begin(), path.end(), 0);
      std::rotate(path.begin(), it, path.end());
      if (path[1] > path.back()) {
        std::reverse(path.begin() + 1, path.end());
      }
      out.cycle = std::move(path);
      return out;
    }
    std::vector<std::size_t> pivots;
    for (Vertex w : g.neighbors(end)) {
      const int p = pos[static_cast<std::size_t>(w)];
      if (p >= 0 && p + 1 < static_cast<int>(path.size()) - 1) {
        pivots.push_back(static_cast<std::size_t>(p));
      }
    }
    if (pivots.empty()) {
      // Only the predecessor is adjacent: restart from the other end.
      std::reverse(path.begin(), path.end());
      for (std::size_t j = 0; j < path.size(); ++j) {
        pos[static_cast<std::size_t>(path[j])] = static_cast<int>(j);
      }
      continue;
    }
    rotate(pivots[std::uniform_int_distribution<std::size_t>(0, pivots.size() - 1)(rng)]);
  }
  return out;
}

HamiltonianResult find_hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
  HamiltonianResult out;
  if (trivially_absent(g)) {
    out.status = HamiltonianStatus::proven_absent;
    return out;
  }
  Backtracker bt(g, budget);
  const int r = bt.run();
  out.expansions = bt.expansions_;
  if (r == 1) {
    out.status = HamiltonianStatus::found;
    out.cycle = std::move(bt.path_);
    return out;
  }
  if (r == 0) {
    out.status = HamiltonianStatus::proven_absent;
    return out;
  }
  auto h = posa_heuristic(g, budget);
  h.expansions += out.expansions;
  return h;
}

}  // namespace geodkit
