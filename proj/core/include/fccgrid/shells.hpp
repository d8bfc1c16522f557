// Extremal sets of the grid and the clique lower bounds they witness:
// balls around a vertex, shells around the tetrahedron D0, their slab
// analogues, and neighborhoods of 4-cliques.

#pragma once

#include <optional>
#include <vector>

#include "fccgrid/lattice.hpp"
#include "fccgrid/region.hpp"

namespace fcc {

enum class Metric {
    Ambient,         // distance in the full grid
    RegionInternal,  // distance in the subgraph induced by the region
};

enum class ShellKind {
    AFull,    // sphere around the origin
    DFull,    // shell around the tetrahedron D0
    ASlab01,  // slab {0,1}, slab distance from the origin
    DSlab01,  // slab {0,1}, slab distance from D0
    ASlab02,  // slab {0,1,2}, slab distance from the center (1,1,1)
    BSlab02,  // slab {0,1,2}, slab distance from D0
};

// The 4-clique D0 = {(0,0,0),(2,0,0),(1,1,1),(1,-1,1)} in doubled coordinates.
Region tetra_d0();

// Sites at shell distance exactly `level` for the given kind. Full-grid kinds
// use the closed-form distance; slab kinds use multi-source BFS inside the
// slab, which is exact (the slab graph is generated lazily).
Region shell(ShellKind kind, int level);

// Union of the D0 shells 0..level.
Region b_ball(int level);

// Ball of the slab kinds: union of shells 0..level.
Region slab_ball(ShellKind kind, int level);

struct TetraNeighborhood {
    Region region;
    bool centers_form_clique = false;  // input sanity flag, not an error
};

// All sites adjacent to at least one of the four given sites (the sites
// themselves included whenever they are pairwise adjacent). When the four
// induce a K4 the result is isomorphic to b_ball(1): 28 sites, diameter 3.
TetraNeighborhood tetra_neighborhood(const Site& u1, const Site& u2, const Site& u3,
                                     const Site& u4);

// Same, clipped to slab layers k1..k2.
TetraNeighborhood tetra_neighborhood_slab(const Site& u1, const Site& u2, const Site& u3,
                                          const Site& u4, int k1, int k2);

// Max pairwise distance under the chosen metric. nullopt when the metric is
// region-internal and the region is disconnected. Throws EmptyRegion on an
// empty region.
std::optional<int> diameter(const Region& region, Metric metric);

enum class PowerGraph { F, F01, F02 };

// Distance in the named graph (full grid, or one of the two infinite slabs);
// nullopt means > cap. For F the closed form is used and cap is ignored.
std::optional<int> graph_distance(PowerGraph graph, const Site& u, const Site& v, int cap);

// True iff all pairs of the region are at distance <= d in the named graph.
bool is_power_clique(const Region& region, int d, PowerGraph graph);

struct CliqueBound {
    PowerGraph graph;
    int d = 1;
    int size = 0;    // enumerated witness size
    Region witness;  // ball (even d) or D0-ball (odd d) in the named graph
};

// The ball/D0-ball witness for the named graph at power d. The enumerated
// size is cross-checked against the closed-form count.
CliqueBound clique_lower_bound(PowerGraph graph, int d);

// Closed-form counts.
long long ball_count_formula(int level);                    // (2l+1)(5l^2+5l+3)/3
long long d_shell_count_formula(int level);                 // 10l^2+10l+4, level >= 1
long long b_ball_count_formula(int level);                  // (10l^3+30l^2+32l+12)/3
long long clique_bound_formula(PowerGraph graph, int d);

}  // namespace fcc
