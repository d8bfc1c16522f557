// Distance-coloring constructions and their verifiers.
//
// Five built-in periodic colorings (2nd and 3rd power of the full grid, the
// general layered construction, and its two slab restrictions) plus explicit
// site->color maps read from CSV. Verification is either displacement-based
// (for linear forms) or pairwise over a window.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "fccgrid/lattice.hpp"
#include "fccgrid/region.hpp"
#include "fccgrid/shells.hpp"

namespace fcc {

struct OutOfSlab : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPeriodic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoMultiplier : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q = ceil((d+1)^2/2) colors suffice for the d-th power of the square grid
// with the linear pattern (a, b) -> (a + m*b) mod q; a multiplier m is valid
// iff (a + m*b) mod q != 0 for all 0 < |a|+|b| <= d.
struct SquareMultiplier {
    int d = 1;
    int q = 2;
    int m = 1;
};

// Smallest valid multiplier for the given d, by exhaustive search.
// Throws NoMultiplier when none exists.
SquareMultiplier square_multiplier(int d);

// ceil((d+1)^2 / 2)
constexpr int square_palette(int d) { return ((d + 1) * (d + 1) + 1) / 2; }

class Coloring {
  public:
    enum class Kind { Power2Mod13, Power3Mod30, SlabGeneral, Slab01, Slab02, Explicit };

    static Coloring power2();
    static Coloring power3();
    static Coloring slab_general(int d);
    static Coloring slab01(int d);
    static Coloring slab02(int d);
    static Coloring explicit_map(std::map<Site, int> table, int palette_size);

    Kind kind() const { return kind_; }
    int d() const { return d_; }
    int palette_size() const { return palette_; }

    bool in_domain(const Site& s) const;

    // Color in 0..palette_size-1. Throws OutOfSlab outside the domain and
    // std::out_of_range for sites missing from an explicit map.
    int color(const Site& s) const;

    // Slab colorings constrain z to these layers; full-grid ones accept all.
    std::optional<std::pair<int, int>> slab_layers() const;

    const std::map<Site, int>& table() const { return table_; }

  private:
    Kind kind_ = Kind::Explicit;
    int d_ = 1;
    int palette_ = 0;
    SquareMultiplier mult_{};         // SlabGeneral / Slab01(odd) / Slab02(d>=2)
    std::map<Site, int> table_;       // Explicit
};

// Color difference of a translation-covariant coloring as a function of the
// displacement: (cx*dx + cy*dy + cz*dz) / denom  (mod modulus).
struct LinearForm {
    int cx = 0;
    int cy = 0;
    int cz = 0;
    int denom = 1;
    int modulus = 1;

    // Residue in 0..modulus-1; the numerator is divisible by denom for every
    // parity-valid displacement of the forms we use.
    int value(const Displacement& d) const;
};

// The displacement form of a built-in coloring, when one exists.
// Piecewise specs (Power3Mod30, SlabGeneral, ...) have none.
std::optional<LinearForm> linear_form_of(const Coloring& c);

struct Violation {
    Site u{};
    Site v{};
    int color = 0;
    int dist = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks form(delta) != 0 (mod modulus) over every nonzero displacement with
// distance(0, delta) <= d. Returns the first violation in canonical order,
// or nullopt when valid.
std::optional<Violation> verify_displacement(const LinearForm& form, int d);

// Pairwise check over a region: every pair at metric distance <= d must get
// distinct colors. Violations come back in canonical (u, v) order; an empty
// list means valid on that window. `threads` shards the outer loop; results
// are schedule-independent.
std::vector<Violation> verify_window(const Coloring& coloring, const Region& region, int d,
                                     Metric metric, int threads = 1);

// One full period of the coloring dilated by the d-neighborhood in every
// unconstrained direction; validity on this window implies validity on the
// whole (infinite) domain. Throws NonPeriodic for explicit maps.
Region fundamental_window(const Coloring& coloring, int d);

// Number of distinct colors the coloring takes on the region.
int count_colors(const Coloring& coloring, const Region& region);

// Coloring file: CSV with header x,y,z,color, doubled coordinates, canonical
// row order.
void write_coloring_csv(const Coloring& coloring, const Region& region, std::ostream& out);
void write_coloring_csv(const Coloring& coloring, const Region& region,
                        const std::filesystem::path& path);

// Reads back an explicit coloring and its region (throws FormatError /
// ParityError on malformed input).
std::pair<Coloring, Region> read_coloring_csv(std::istream& in);
std::pair<Coloring, Region> read_coloring_csv(const std::filesystem::path& path);

}  // namespace fcc
