// Finite, explicitly enumerated site sets with provenance.
//
// Sites are kept duplicate-free in canonical (z, y, x) order, which makes
// every enumeration, search and file emission deterministic.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fccgrid/lattice.hpp"

namespace fcc {

struct EmptyRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RegionKind {
    Box,
    Slab,
    Ball,
    Shell,
    TetraNeighborhood,
    ExplicitFile,
};

struct Provenance {
    RegionKind kind = RegionKind::ExplicitFile;
    int k1 = 0;      // slab: layer range
    int k2 = 0;
    Site center{};   // ball/shell
    int radius = 0;  // ball/shell level
};

class Region {
  public:
    Region() = default;

    // Sorts, deduplicates and validates; throws ParityError on invalid sites
    // and EmptyRegion when nothing is left.
    static Region from_sites(std::vector<Site> sites, Provenance prov);

    std::span<const Site> sites() const { return sites_; }
    std::size_t size() const { return sites_.size(); }
    bool empty() const { return sites_.empty(); }

    const Site& operator[](std::size_t i) const { return sites_[i]; }

    // Canonical 0-based index, or nullopt when absent.
    std::optional<std::size_t> index_of(const Site& s) const;
    bool contains(const Site& s) const { return index_of(s).has_value(); }

    const Provenance& provenance() const { return prov_; }

    auto begin() const { return sites_.begin(); }
    auto end() const { return sites_.end(); }

    friend bool operator==(const Region& a, const Region& b) { return a.sites_ == b.sites_; }

  private:
    std::vector<Site> sites_;
    Provenance prov_;
};

// All valid sites with xlo <= x <= xhi, ylo <= y <= yhi, zlo <= z <= zhi.
Region box_region(int xlo, int xhi, int ylo, int yhi, int zlo, int zhi);

// Layers k1..k2 with |x|, |y| <= 2*extent (extent in undoubled units).
Region slab_region(int k1, int k2, int extent);

// Closed ball of radius r around center, by closed-form distance filtering.
Region ball_region(const Site& center, int r);

// JSON-lines site format: one {"x":..,"y":..,"z":..} object per line,
// canonical order. Readers reject parity violations.
void write_region_jsonl(const Region& region, std::ostream& out);
void write_region_jsonl(const Region& region, const std::filesystem::path& path);
Region read_region_jsonl(std::istream& in);
Region read_region_jsonl(const std::filesystem::path& path);

}  // namespace fcc
