#pragma once

#include <span>
#include <vector>

#include "fdo/distance.hpp"

namespace fdo {

/// Greedy hitting set: repeatedly take the vertex lying on the most sets not
/// yet hit, smallest id on ties. Counts live in a bucket queue, so the run is
/// near-linear in the total set size. Elements of one set must be distinct.
/// Returns the chosen vertices in ascending order.
std::vector<VertexId> greedy_hitting_set(std::size_t universe, std::span<const std::vector<VertexId>> sets);

}  // namespace fdo
