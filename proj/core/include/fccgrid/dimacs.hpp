// DIMACS CNF export of k-colorability instances, plus a small DPLL solver
// used to replay exported files for cross-validation.
//
// Variable v(s, c) = index(s)*k + c + 1 with index(s) the canonical 0-based
// site index. Clause order is bit-exact: per site in canonical order one
// at-least-one clause then its at-most-one pairs (colors lexicographic);
// then conflict clauses by edge canonical order, color ascending; then
// anchor units and extra-constraint clauses.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "fccgrid/search.hpp"

namespace fcc {

struct CnfStats {
    int variables = 0;
    int clauses = 0;
};

CnfStats export_dimacs(const SearchProblem& problem, std::ostream& out);
CnfStats export_dimacs(const SearchProblem& problem, const std::filesystem::path& path);

struct Cnf {
    int variables = 0;
    std::vector<std::vector<int>> clauses;
};

Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs(const std::filesystem::path& path);

enum class SatResult { Sat, Unsat };

// Deterministic DPLL with unit propagation; intended for the small exported
// instances, not as a general-purpose solver.
SatResult solve_cnf(const Cnf& cnf);

}  // namespace fcc
