// Exact k-colorability on finite d-power windows.
//
// Complete backtracking with clique-anchored symmetry breaking, saturation
// ordering and forward checking. Deterministic: identical problems yield
// identical verdicts, witnesses and node counts.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "fccgrid/coloring.hpp"
#include "fccgrid/region.hpp"
#include "fccgrid/shells.hpp"

namespace fcc {

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    std::chrono::milliseconds max_time{600'000};
};

struct PairConstraint {
    enum class Kind { Equal, Distinct };
    Kind kind = Kind::Distinct;
    Site a{};
    Site b{};
};

struct SearchProblem {
    Region region;
    int d = 1;
    int k = 1;
    Metric metric = Metric::Ambient;
    std::optional<Region> anchor;  // clique to pre-color 0..|anchor|-1
    std::vector<PairConstraint> constraints;
    SearchBudget budget{};
};

struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
    std::chrono::milliseconds elapsed{0};
    bool anchor_shortcut = false;  // |anchor| > k decided without search
};

struct Certificate {
    enum class Verdict { Colorable, NotColorable, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::vector<int> witness;  // color per canonical region index; empty unless Colorable
    SearchStats stats;
};

// d-power adjacency of the region under the metric, per canonical index.
std::vector<std::vector<int>> power_adjacency(const Region& region, int d, Metric metric);

// Maximal (not maximum) clique in the d-power, grown in canonical order.
Region greedy_clique(const Region& region, int d, Metric metric);

// Complete search. The anchor must be a subset of the region and a clique in
// the d-power (std::invalid_argument otherwise); an anchor larger than k
// yields NotColorable without search. A Colorable witness always passes
// verify_window.
Certificate k_colorable(const SearchProblem& problem);

struct ForcedResult {
    enum class Outcome { Holds, Counterexample, Inconclusive };
    Outcome outcome = Outcome::Inconclusive;
    std::vector<int> witness;  // a proper coloring separating u from all candidates
    SearchStats stats;
};

// Decides whether every proper k-coloring of the region's d-power gives u the
// color of some candidate: runs k_colorable with distinct(u, c) constraints
// for all candidates, and Holds iff that search exhausts.
ForcedResult forced_equalities(const Region& region, int d, int k, const Site& u,
                               const std::vector<Site>& candidates, Metric metric,
                               SearchBudget budget = {});

}  // namespace fcc
