#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "geodkit/graph.hpp"

namespace geodkit {

inline constexpr int kMaxEnumerationOrder = 7;

/// Bit i of an edge mask selects the i-th pair of the order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
Graph graph_from_mask(int n, std::uint64_t mask);

using GraphVisitor = std::function<void(std::uint64_t mask, const Graph& g)>;

/// Visits every connected labeled simple graph on n vertices (1 <= n <= 7)
/// in ascending edge-mask order and returns how many were visited.
/// Throws InputError when n is out of range.
std::uint64_t enumerate_connected_graphs(int n, const GraphVisitor& visit);

/// Same graphs, spread over OpenMP threads; `visit` must be thread-safe and
/// is called in no particular order. Returns the same count as the serial
/// enumeration.
std::uint64_t enumerate_connected_graphs_parallel(int n, const GraphVisitor& visit);

/// All connected graphs on n vertices, in mask order.
std::vector<Graph> connected_graphs(int n);

}  // namespace geodkit
