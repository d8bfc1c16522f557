// Breadth-first distance oracles.
//
// The grid is generated lazily, so searches run on the true infinite graph
// (optionally restricted to a slab of layers) without any window cropping.
// Depth-capped results are exact for every distance <= cap.

#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fccgrid/lattice.hpp"
#include "fccgrid/region.hpp"

namespace fcc {

struct NotInRegion : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Graph distance by BFS, truncated at depth cap; nullopt means > cap.
std::optional<int> distance_bfs(const Site& u, const Site& v, int cap);

using DistanceMap = std::unordered_map<Site, int, SiteHash>;

// All distances from src up to cap in the infinite grid.
DistanceMap distance_map(const Site& src, int cap);

// Same, restricted to layers k1..k2 of the infinite slab.
DistanceMap distance_map_slab(const Site& src, int cap, int k1, int k2);

// Multi-source variant: distance to the nearest of several sources.
DistanceMap distance_map_slab(std::span<const Site> sources, int cap, int k1, int k2);

// Distance in the infinite slab graph; nullopt means > cap.
std::optional<int> distance_slab(const Site& u, const Site& v, int cap, int k1, int k2);

// Distance in the subgraph induced by region; nullopt when unreachable.
// Throws NotInRegion unless both endpoints belong to the region.
std::optional<int> distance_in_region(const Site& u, const Site& v, const Region& region);

// Single-source distances inside the induced subgraph, -1 for unreachable,
// indexed canonically.
std::vector<int> distances_in_region(const Region& region, std::size_t source_index);

// Neighbor indices within the induced subgraph, per canonical index.
std::vector<std::vector<int>> region_adjacency(const Region& region);

}  // namespace fcc
